use serde::{Deserialize, Serialize};

use super::{ElementError, Movable, NodeEffect};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{rotate_about_radians, Point, Rect};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

/// Open chain of joints with its own movable rotation center.
///
/// Cover layout: one circle per joint, then the rotation-center circle,
/// then one strip per segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PolylineEl {
    pub joints: Vec<Point>,
    pub rotation_center: Point,
}

impl PolylineEl {
    pub fn new(joints: Vec<Point>) -> Result<Self, ElementError> {
        if joints.len() < 2 {
            return Err(ElementError::TooFewJoints);
        }
        let rotation_center = crate::geometry::vertex_centroid(&joints);
        Ok(Self {
            joints,
            rotation_center,
        })
    }

    /// Adds a joint at `p` splitting segment `segment` (joints `segment`
    /// and `segment + 1`).
    pub fn insert_joint(&mut self, segment: usize, p: Point) -> Result<(), ElementError> {
        let len = self.joints.len() - 1;
        if segment >= len {
            return Err(ElementError::InvalidIndex { index: segment, len });
        }
        self.joints.insert(segment + 1, p);
        Ok(())
    }

    pub fn delete_joint(&mut self, joint: usize) -> Result<Point, ElementError> {
        let len = self.joints.len();
        if joint >= len {
            return Err(ElementError::InvalidIndex { index: joint, len });
        }
        if len <= 2 {
            return Err(ElementError::TooFewJoints);
        }
        Ok(self.joints.remove(joint))
    }
}

impl Movable for PolylineEl {
    fn cover(&self, cfg: &CoverConfig, style: &Style) -> Cover {
        let mut c = Cover::new(true);
        for &j in &self.joints {
            c.circle(j, cfg.handle_radius, NodeAction::Reconfigure, CursorHint::Hand);
        }
        c.circle(
            self.rotation_center,
            cfg.handle_radius,
            NodeAction::Reconfigure,
            CursorHint::Hand,
        );
        let hw = cfg.strip_half_width.max(style.stroke_width * 0.5);
        for w in self.joints.windows(2) {
            c.strip(w[0], w[1], hw, NodeAction::MoveWhole, CursorHint::Move);
        }
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for j in &mut self.joints {
            *j = j.translated(dx, dy);
        }
        self.rotation_center = self.rotation_center.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let n = self.joints.len();
        let changed = !drag.delta().is_zero();
        match node {
            i if i < n => self.joints[i] = self.joints[i].translated(drag.dx, drag.dy),
            i if i == n => self.rotation_center = self.rotation_center.translated(drag.dx, drag.dy),
            i if i < 2 * n => self.translate(drag.dx, drag.dy),
            i => return Err(ElementError::InvalidNode(i)),
        }
        Ok(NodeEffect::from_changed(changed))
    }

    fn rotation_center(&self) -> Option<Point> {
        Some(self.rotation_center)
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        for j in &mut self.joints {
            *j = rotate_about_radians(*j, center, radians);
        }
        self.rotation_center = rotate_about_radians(self.rotation_center, center, radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::bounding(self.joints.iter().copied()).unwrap_or_default()
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::Polyline {
            points: self.joints.clone(),
            stroke: style.stroke,
            stroke_width: style.stroke_width,
        });
        for &j in &self.joints {
            out.push(Primitive::CircleArc {
                center: j,
                radius: 2.5,
                start: 0.0,
                sweep: std::f64::consts::TAU,
                fill: Some(style.stroke),
                stroke: None,
                stroke_width: 0.0,
            });
        }
        out.push(Primitive::CircleArc {
            center: self.rotation_center,
            radius: 3.0,
            start: 0.0,
            sweep: std::f64::consts::TAU,
            fill: None,
            stroke: Some(style.stroke),
            stroke_width: 1.0,
        });
    }
}
