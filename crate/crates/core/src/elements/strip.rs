use serde::{Deserialize, Serialize};

use super::{ElementError, Movable, NodeEffect};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{arc_points, chord_count, rotate_about_radians, Point, Rect, Vector};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

const MIN_HALF_WIDTH: f64 = 1.0;

/// Thick segment with rounded ends.
///
/// Cover layout: end handles `a`, `b`, the two side strips (outside the
/// body), then the body strip.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StripEl {
    pub a: Point,
    pub b: Point,
    pub half_width: f64,
}

impl StripEl {
    pub fn new(a: Point, b: Point, half_width: f64) -> Result<Self, ElementError> {
        if !(half_width > 0.0) {
            return Err(ElementError::InvalidShape("strip half width must be positive".into()));
        }
        Ok(Self { a, b, half_width })
    }

    fn normal(&self) -> Vector {
        (self.b - self.a)
            .normalized()
            .map(|t| t.perp())
            .unwrap_or(Vector::new(0.0, 1.0))
    }

    pub fn outline(&self) -> Vec<Point> {
        let t = self.b - self.a;
        let base = t.dy.atan2(t.dx);
        let n = chord_count(self.half_width, std::f64::consts::PI, 0.1);
        let half = std::f64::consts::FRAC_PI_2;
        let mut pts = arc_points(self.b, self.half_width, base - half, std::f64::consts::PI, n);
        pts.extend(arc_points(
            self.a,
            self.half_width,
            base + half,
            std::f64::consts::PI,
            n,
        ));
        pts
    }
}

impl Movable for StripEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(true);
        let r = cfg.handle_radius.min(self.half_width);
        c.circle(self.a, r, NodeAction::Reconfigure, CursorHint::Hand);
        c.circle(self.b, r, NodeAction::Reconfigure, CursorHint::Hand);
        let n = self.normal();
        let hw = cfg.strip_half_width;
        for side in [1.0, -1.0] {
            let off = n * (side * (self.half_width + hw));
            c.strip(
                self.a + off,
                self.b + off,
                hw,
                NodeAction::Resize,
                CursorHint::for_direction(n),
            );
        }
        c.strip(self.a, self.b, self.half_width, NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.a = self.a.translated(dx, dy);
        self.b = self.b.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let moved = !drag.delta().is_zero();
        match node {
            0 => self.a = self.a.translated(drag.dx, drag.dy),
            1 => self.b = self.b.translated(drag.dx, drag.dy),
            2 | 3 => {
                let side = if node == 2 { 1.0 } else { -1.0 };
                let hw = self.half_width + side * drag.delta().dot(self.normal());
                if hw < MIN_HALF_WIDTH || hw == self.half_width {
                    return Ok(NodeEffect::Unchanged);
                }
                self.half_width = hw;
                return Ok(NodeEffect::Changed);
            }
            4 => self.translate(drag.dx, drag.dy),
            n => return Err(ElementError::InvalidNode(n)),
        }
        Ok(NodeEffect::from_changed(moved))
    }

    fn rotation_center(&self) -> Option<Point> {
        Some(self.a.midpoint(self.b))
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        self.a = rotate_about_radians(self.a, center, radians);
        self.b = rotate_about_radians(self.b, center, radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::from_corners(self.a, self.b).inflate(self.half_width)
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::filled_polygon(
            self.outline(),
            style.fill,
            style.stroke,
            style.stroke_width,
        ));
    }
}
