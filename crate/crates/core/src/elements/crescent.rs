use serde::{Deserialize, Serialize};

use super::{CircleGeom, ElementError, Movable, NodeEffect, MIN_RADIUS};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{arc_points, chord_count, rotate_about_radians, Point, Rect, Vector};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

/// The part of the outer disc not covered by the inner disc.
///
/// Cover layout: the two horns, the outer and inner widest-part handles,
/// then the body. Horn drags slide the horn along the outer circle and
/// refit the inner circle through both horns and the inner widest point;
/// widest-part drags change the corresponding radius. Rotation pivots on
/// the midpoint between the horns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrescentEl {
    pub outer: CircleGeom,
    pub inner: CircleGeom,
}

/// Derived geometry of a valid crescent.
struct Frame {
    /// Unit vector from the outer center toward the inner center.
    u: Vector,
    horns: [Point; 2],
    widest_outer: Point,
    widest_inner: Point,
}

impl CrescentEl {
    pub fn new(outer: CircleGeom, inner: CircleGeom) -> Result<Self, ElementError> {
        let c = Self { outer, inner };
        if c.frame().is_none() {
            return Err(ElementError::InvalidShape(
                "circles must cross at exactly two points".into(),
            ));
        }
        Ok(c)
    }

    fn frame(&self) -> Option<Frame> {
        let (c1, r1, c2, r2) = (
            self.outer.center,
            self.outer.radius,
            self.inner.center,
            self.inner.radius,
        );
        let d = c1.distance(c2);
        if !(r1 >= MIN_RADIUS && r2 >= MIN_RADIUS && d > (r1 - r2).abs() && d < r1 + r2) {
            return None;
        }
        let u = (c2 - c1).normalized()?;
        let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
        let h = (r1 * r1 - a * a).max(0.0).sqrt();
        let base = c1 + u * a;
        let v = u.perp();
        Some(Frame {
            u,
            horns: [base + v * h, base - v * h],
            widest_outer: c1 - u * r1,
            widest_inner: c2 - u * r2,
        })
    }

    pub fn horns(&self) -> Option<[Point; 2]> {
        self.frame().map(|f| f.horns)
    }

    pub fn outline(&self) -> Vec<Point> {
        let Some(f) = self.frame() else {
            return Vec::new();
        };
        let (c1, r1, c2, r2) = (
            self.outer.center,
            self.outer.radius,
            self.inner.center,
            self.inner.radius,
        );
        let theta = f.u.dy.atan2(f.u.dx);
        let d = c1.distance(c2);
        let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
        let h = (r1 * r1 - a * a).max(0.0).sqrt();
        let phi = h.atan2(a);
        let gamma = h.atan2(a - d);
        let outer_sweep = std::f64::consts::TAU - 2.0 * phi;
        let inner_sweep = -(std::f64::consts::TAU - 2.0 * gamma);
        let mut pts = arc_points(c1, r1, theta + phi, outer_sweep, chord_count(r1, outer_sweep, 0.1));
        let inner = arc_points(c2, r2, theta - gamma, inner_sweep, chord_count(r2, inner_sweep, 0.1));
        pts.extend(inner.iter().skip(1).take(inner.len().saturating_sub(2)));
        pts
    }

    fn try_set(&mut self, candidate: CrescentEl) -> bool {
        if candidate.frame().is_none() || candidate == *self {
            return false;
        }
        *self = candidate;
        true
    }
}

fn circumcircle(a: Point, b: Point, c: Point) -> Option<CircleGeom> {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if d.abs() < 1e-12 {
        return None;
    }
    let (a2, b2, c2) = (a.x * a.x + a.y * a.y, b.x * b.x + b.y * b.y, c.x * c.x + c.y * c.y);
    let center = Point::new(
        (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
        (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d,
    );
    Some(CircleGeom {
        center,
        radius: center.distance(a),
    })
}

impl Movable for CrescentEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(true);
        let r = cfg.handle_radius;
        if let Some(f) = self.frame() {
            for h in f.horns {
                c.circle(h, r, NodeAction::Reconfigure, CursorHint::Hand);
            }
            c.circle(
                f.widest_outer - f.u * r,
                r,
                NodeAction::Resize,
                CursorHint::for_direction(f.u),
            );
            c.circle(
                f.widest_inner + f.u * r,
                r,
                NodeAction::Resize,
                CursorHint::for_direction(f.u),
            );
            c.polygon(self.outline(), NodeAction::MoveWhole, CursorHint::Move);
        }
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.outer.center = self.outer.center.translated(dx, dy);
        self.inner.center = self.inner.center.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let f = self.frame().ok_or(ElementError::InvalidNode(node))?;
        let mut next = self.clone();
        let changed = match node {
            0 | 1 => {
                let moved = f.horns[node].translated(drag.dx, drag.dy);
                let Some(dir) = (moved - self.outer.center).normalized() else {
                    return Ok(NodeEffect::Unchanged);
                };
                let on_outer = self.outer.center + dir * self.outer.radius;
                match circumcircle(on_outer, f.horns[1 - node], f.widest_inner) {
                    Some(inner) => {
                        next.inner = inner;
                        self.try_set(next)
                    }
                    None => false,
                }
            }
            2 => {
                next.outer.radius -= drag.delta().dot(f.u);
                self.try_set(next)
            }
            3 => {
                next.inner.radius -= drag.delta().dot(f.u);
                self.try_set(next)
            }
            4 => {
                self.translate(drag.dx, drag.dy);
                !drag.delta().is_zero()
            }
            n => return Err(ElementError::InvalidNode(n)),
        };
        Ok(NodeEffect::from_changed(changed))
    }

    fn rotation_center(&self) -> Option<Point> {
        self.horns().map(|[a, b]| a.midpoint(b))
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        self.outer.center = rotate_about_radians(self.outer.center, center, radians);
        self.inner.center = rotate_about_radians(self.inner.center, center, radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::bounding(self.outline()).unwrap_or_default()
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
