//! Session protocol: newline-delimited JSON over any ordered stream.

use std::io::{self, BufRead, Write};
use std::sync::mpsc;
use std::thread;

use serde::{Deserialize, Serialize};

use super::{Event, Scene};
use crate::cover::{Button, CursorHint};
use crate::persistence;
use crate::render::RenderList;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inbound {
    pub seq: u64,
    #[serde(flatten)]
    pub body: InboundBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum InboundBody {
    Down {
        x: f64,
        y: f64,
        button: Button,
    },
    Move {
        x: f64,
        y: f64,
    },
    Up,
    Command {
        name: String,
        #[serde(default)]
        args: Vec<String>,
    },
    /// Asks for the current scene document.
    Save,
    /// Replaces the scene with the given document.
    Load {
        scene: serde_json::Value,
    },
}

impl From<Event> for InboundBody {
    fn from(e: Event) -> Self {
        match e {
            Event::Down { x, y, button } => InboundBody::Down { x, y, button },
            Event::Move { x, y } => InboundBody::Move { x, y },
            Event::Up => InboundBody::Up,
            Event::Command { name, args } => InboundBody::Command { name, args },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Outbound {
    Ack {
        seq: u64,
        changed: bool,
    },
    #[serde(rename_all = "camelCase")]
    Render {
        seq: Option<u64>,
        render_list: RenderList,
    },
    Cursor {
        seq: u64,
        cursor: CursorHint,
    },
    Scene {
        seq: u64,
        scene: serde_json::Value,
    },
    Error {
        seq: Option<u64>,
        message: String,
    },
}

/// Per-connection state. The scene itself is passed in on every call so a
/// caller can decide how it is shared.
#[derive(Debug, Default)]
pub struct Session {
    last_cursor: Option<CursorHint>,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full render list every client receives on connect.
    pub fn greeting(&mut self, scene: &Scene) -> Outbound {
        self.render(scene, None)
    }

    fn render(&mut self, scene: &Scene, seq: Option<u64>) -> Outbound {
        let render_list = scene.render();
        self.last_cursor = Some(render_list.cursor);
        Outbound::Render { seq, render_list }
    }

    pub fn handle_line(&mut self, scene: &mut Scene, line: &str) -> Vec<Outbound> {
        let msg: Inbound = match serde_json::from_str(line) {
            Ok(m) => m,
            Err(e) => {
                let seq = serde_json::from_str::<serde_json::Value>(line)
                    .ok()
                    .and_then(|v| v.get("seq")?.as_u64());
                return vec![Outbound::Error {
                    seq,
                    message: format!("malformed message: {e}"),
                }];
            }
        };
        let seq = msg.seq;
        let event = match msg.body {
            InboundBody::Down { x, y, button } => Event::Down { x, y, button },
            InboundBody::Move { x, y } => Event::Move { x, y },
            InboundBody::Up => Event::Up,
            InboundBody::Command { name, args } => Event::Command { name, args },
            InboundBody::Save => {
                let text = persistence::save(scene);
                let value = serde_json::from_str(&text).expect("saved scenes are valid JSON");
                return vec![Outbound::Scene { seq, scene: value }];
            }
            InboundBody::Load { scene: doc } => {
                return match persistence::load(&doc.to_string()) {
                    Ok(s) => {
                        *scene = s;
                        vec![Outbound::Ack { seq, changed: true }, self.render(scene, Some(seq))]
                    }
                    Err(e) => vec![Outbound::Error {
                        seq: Some(seq),
                        message: e.to_string(),
                    }],
                };
            }
        };
        match scene.apply_event(&event) {
            Ok(true) => vec![Outbound::Ack { seq, changed: true }, self.render(scene, Some(seq))],
            Ok(false) => {
                let mut out = vec![Outbound::Ack { seq, changed: false }];
                let cursor = scene.cursor();
                if self.last_cursor != Some(cursor) {
                    self.last_cursor = Some(cursor);
                    out.push(Outbound::Cursor { seq, cursor });
                }
                out
            }
            Err(e) => vec![Outbound::Error {
                seq: Some(seq),
                message: e.to_string(),
            }],
        }
    }
}

/// Serves one session until the reader hits end of stream. Blank lines
/// are ignored. A reader thread queues lines, the calling thread applies
/// them to `scene` in arrival order, and a writer thread emits replies.
pub fn serve_stream<R, W>(scene: &mut Scene, reader: R, mut writer: W) -> io::Result<()>
where
    R: BufRead + Send,
    W: Write + Send,
{
    let (line_tx, line_rx) = mpsc::channel::<io::Result<String>>();
    let (out_tx, out_rx) = mpsc::channel::<Outbound>();
    thread::scope(|scope| {
        scope.spawn(move || {
            for line in reader.lines() {
                let stop = line.is_err();
                if line_tx.send(line).is_err() || stop {
                    break;
                }
            }
        });
        let emitter = scope.spawn(move || -> io::Result<()> {
            for msg in out_rx {
                write_message(&mut writer, &msg)?;
            }
            Ok(())
        });
        let mut session = Session::new();
        let mut result = Ok(());
        if out_tx.send(session.greeting(scene)).is_ok() {
            for line in line_rx {
                let line = match line {
                    Ok(l) => l,
                    Err(e) => {
                        result = Err(e);
                        break;
                    }
                };
                if line.trim().is_empty() {
                    continue;
                }
                if session
                    .handle_line(scene, &line)
                    .into_iter()
                    .any(|m| out_tx.send(m).is_err())
                {
                    break;
                }
            }
        }
        drop(out_tx);
        let written = emitter.join().expect("writer thread");
        result.and(written)
    })
}

fn write_message<W: Write>(w: &mut W, msg: &Outbound) -> io::Result<()> {
    serde_json::to_writer(&mut *w, msg)?;
    w.write_all(b"\n")?;
    w.flush()
}
