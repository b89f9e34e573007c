//! Headless direct-manipulation engine.
//!
//! Every screen element is movable by any inner point, resizable by its
//! borders, reconfigurable by its handles and, where it makes sense,
//! rotatable with the right button. A [`mover::Mover`] routes
//! press/move/release events to elements through their [`cover::Cover`]s;
//! [`scene::Scene`] owns elements and groups, applies events and commands,
//! and saves and restores the complete view.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod controls_groups;
pub mod cover;
pub mod demos;
pub mod elements;
pub mod funcexpr;
pub mod geometry;
pub mod mover;
pub mod persistence;
pub mod plot;
pub mod render;
pub mod scene;
pub mod style;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Identifier of an element or a group, unique within a scene.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "id{}", self.0)
    }
}

impl FromStr for ElementId {
    type Err = String;

    /// Accepts `7` and `id7`.
    fn from_str(s: &str) -> Result<Self, String> {
        s.strip_prefix("id")
            .unwrap_or(s)
            .parse()
            .map(ElementId)
            .map_err(|_| format!("bad element id `{s}`"))
    }
}

pub use cover::{Button, Cover, CoverConfig, CursorHint, NodeAction};
pub use elements::{Element, Shape};
pub use geometry::{Point, Rect, Vector};
pub use mover::Mover;
pub use scene::Scene;
