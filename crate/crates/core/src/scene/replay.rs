use thiserror::Error;

use super::{Scene, SceneError, Script, ScriptError, Violation};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReplayReport {
    pub events: usize,
    pub changed: usize,
    /// Invariant violations with the script line that produced them.
    pub violations: Vec<(usize, Violation)>,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReplayError {
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error("line {line}: {error}")]
    Event { line: usize, error: SceneError },
}

/// Applies every event in order. With `check` set, the cheap invariant
/// suite runs after each event and violations are collected, not fatal.
pub fn replay(scene: &mut Scene, script: &Script, check: bool) -> Result<ReplayReport, ReplayError> {
    let mut report = ReplayReport::default();
    for (line, event) in &script.events {
        let changed = scene
            .apply_event(event)
            .map_err(|error| ReplayError::Event { line: *line, error })?;
        report.events += 1;
        report.changed += usize::from(changed);
        if check {
            report
                .violations
                .extend(scene.check_invariants().into_iter().map(|v| (*line, v)));
        }
    }
    Ok(report)
}

pub fn replay_text(scene: &mut Scene, text: &str, check: bool) -> Result<ReplayReport, ReplayError> {
    replay(scene, &Script::parse(text)?, check)
}
