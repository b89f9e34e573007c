//! Event scripts: one event per line.
//!
//! ```text
//! # comment
//! down 120 40 left
//! move 130 45
//! up
//! command setColor id3 fill #ff0000
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::Button;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Event {
    Down { x: f64, y: f64, button: Button },
    Move { x: f64, y: f64 },
    Up,
    Command { name: String, args: Vec<String> },
}

impl Event {
    pub fn command(name: &str, args: &[&str]) -> Self {
        Event::Command {
            name: name.to_string(),
            args: args.iter().map(|a| a.to_string()).collect(),
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Down { x, y, button } => {
                let b = match button {
                    Button::Left => "left",
                    Button::Right => "right",
                };
                write!(f, "down {x} {y} {b}")
            }
            Event::Move { x, y } => write!(f, "move {x} {y}"),
            Event::Up => f.write_str("up"),
            Event::Command { name, args } => {
                write!(f, "command {name}")?;
                for a in args {
                    let quoted = shlex::try_quote(a).map_err(|_| fmt::Error)?;
                    write!(f, " {quoted}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

/// Parsed script: events with their 1-based source line numbers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Script {
    pub events: Vec<(usize, Event)>,
}

impl Script {
    pub fn parse(text: &str) -> Result<Self, ScriptError> {
        let mut events = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let event = parse_line(line).map_err(|message| ScriptError { line: i + 1, message })?;
            events.push((i + 1, event));
        }
        Ok(Self { events })
    }

    pub fn from_events(events: impl IntoIterator<Item = Event>) -> Self {
        Self {
            events: events.into_iter().enumerate().map(|(i, e)| (i + 1, e)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.events.iter().map(|(_, e)| format!("{e}\n")).collect()
    }
}

fn coord(s: Option<&str>, what: &str) -> Result<f64, String> {
    let s = s.ok_or_else(|| format!("missing {what}"))?;
    let v: f64 = s.parse().map_err(|_| format!("bad {what} `{s}`"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{what} must be finite"))
    }
}

/// Escapes `#` at the start of an unquoted word so colors such as
/// `#ff0000` survive shell-style splitting instead of starting a comment.
fn literal_hashes(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let (mut quote, mut prev) = (None, ' ');
    for c in text.chars() {
        match (quote, c) {
            (None, '\'' | '"') => quote = Some(c),
            (Some(q), _) if c == q && prev != '\\' => quote = None,
            (None, '#') if prev.is_whitespace() => out.push('\\'),
            _ => {}
        }
        out.push(c);
        prev = c;
    }
    out
}

fn parse_line(line: &str) -> Result<Event, String> {
    let (verb, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let mut words = rest.split_whitespace();
    let event = match verb {
        "down" => {
            let x = coord(words.next(), "x")?;
            let y = coord(words.next(), "y")?;
            let button = words.next().unwrap_or("left").parse()?;
            Event::Down { x, y, button }
        }
        "move" => {
            let x = coord(words.next(), "x")?;
            let y = coord(words.next(), "y")?;
            Event::Move { x, y }
        }
        "up" => Event::Up,
        "command" => {
            let mut parts = shlex::split(&literal_hashes(rest))
                .ok_or("unbalanced quotes")?
                .into_iter();
            let name = parts.next().ok_or("missing command name")?;
            return Ok(Event::Command {
                name,
                args: parts.collect(),
            });
        }
        other => return Err(format!("unknown event `{other}`")),
    };
    match words.next() {
        Some(extra) => Err(format!("unexpected `{extra}`")),
        None => Ok(event),
    }
}
