use serde::{Deserialize, Serialize};

use super::{ElementError, Movable, NodeEffect};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{rotate_about_radians, Point, Rect};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

/// Straight segment; both ends move independently, rotation about the middle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineEl {
    pub a: Point,
    pub b: Point,
}

impl LineEl {
    pub fn new(a: Point, b: Point) -> Self {
        Self { a, b }
    }
}

impl Movable for LineEl {
    fn cover(&self, cfg: &CoverConfig, style: &Style) -> Cover {
        let mut c = Cover::new(true);
        c.circle(self.a, cfg.handle_radius, NodeAction::Reconfigure, CursorHint::Hand);
        c.circle(self.b, cfg.handle_radius, NodeAction::Reconfigure, CursorHint::Hand);
        let hw = cfg.strip_half_width.max(style.stroke_width * 0.5);
        c.strip(self.a, self.b, hw, NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.a = self.a.translated(dx, dy);
        self.b = self.b.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let end = match node {
            0 => &mut self.a,
            1 => &mut self.b,
            2 => {
                self.translate(drag.dx, drag.dy);
                return Ok(NodeEffect::from_changed(!drag.delta().is_zero()));
            }
            n => return Err(ElementError::InvalidNode(n)),
        };
        *end = end.translated(drag.dx, drag.dy);
        Ok(NodeEffect::from_changed(!drag.delta().is_zero()))
    }

    fn rotation_center(&self) -> Option<Point> {
        Some(self.a.midpoint(self.b))
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        self.a = rotate_about_radians(self.a, center, radians);
        self.b = rotate_about_radians(self.b, center, radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::from_corners(self.a, self.b)
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::line(self.a, self.b, style.stroke, style.stroke_width));
    }
}
