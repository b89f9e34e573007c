use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{radial_push, ElementError, Movable, NodeEffect, MIN_RADIUS};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{arc_points, chord_count, normalize_angle, rotate_about_radians, Point, Rect, Vector};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::{Color, Style};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slice {
    pub start: f64,
    pub sweep: f64,
    pub radius: f64,
    pub color: Color,
    /// Distance the slice is pulled out from the pie center along its bisector.
    pub apart: f64,
}

impl Slice {
    fn bisector(&self) -> Vector {
        let m = self.start + self.sweep * 0.5;
        Vector::new(m.cos(), m.sin())
    }
}

/// Pie chart whose slices zoom individually and may stand apart.
///
/// Cover layout: one apex handle per slice, then the slice bodies, then
/// every slice's arc border (outside the slice).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PieEl {
    pub center: Point,
    pub slices: Vec<Slice>,
}

impl PieEl {
    pub fn new(center: Point, slices: Vec<Slice>) -> Result<Self, ElementError> {
        let total: f64 = slices.iter().map(|s| s.sweep).sum();
        if slices.is_empty()
            || total > TAU + 1e-9
            || slices
                .iter()
                .any(|s| !(s.sweep > 0.0 && s.radius > 0.0 && s.apart >= 0.0))
        {
            return Err(ElementError::InvalidShape(
                "pie slices need positive sweeps summing to at most a full turn".into(),
            ));
        }
        Ok(Self { center, slices })
    }

    /// Splits a full pie into slices proportional to `weights`.
    pub fn from_weights(center: Point, radius: f64, weights: &[(f64, Color)]) -> Result<Self, ElementError> {
        let total: f64 = weights.iter().map(|w| w.0).sum();
        let mut start = 0.0;
        let mut slices = Vec::with_capacity(weights.len());
        for &(w, color) in weights {
            let sweep = TAU * w / total;
            slices.push(Slice {
                start,
                sweep,
                radius,
                color,
                apart: 0.0,
            });
            start += sweep;
        }
        Self::new(center, slices)
    }

    pub fn apex(&self, i: usize) -> Point {
        let s = &self.slices[i];
        self.center + s.bisector() * s.apart
    }

    pub fn slice_outline(&self, i: usize) -> Vec<Point> {
        let s = &self.slices[i];
        let apex = self.apex(i);
        let mut pts = vec![apex];
        pts.extend(arc_points(
            apex,
            s.radius,
            s.start,
            s.sweep,
            chord_count(s.radius, s.sweep, 0.1),
        ));
        pts
    }

    fn check_index(&self, i: usize) -> Result<(), ElementError> {
        if i >= self.slices.len() {
            return Err(ElementError::InvalidIndex {
                index: i,
                len: self.slices.len(),
            });
        }
        Ok(())
    }

    pub fn zoom_slice(&mut self, i: usize, factor: f64) -> Result<(), ElementError> {
        self.check_index(i)?;
        if !(factor > 0.0) {
            return Err(ElementError::BadFactor(factor));
        }
        self.slices[i].radius *= factor;
        Ok(())
    }

    /// Scales every slice radius by `factor`.
    pub fn resize(&mut self, factor: f64) -> Result<(), ElementError> {
        if !(factor > 0.0) {
            return Err(ElementError::BadFactor(factor));
        }
        for s in &mut self.slices {
            s.radius *= factor;
        }
        Ok(())
    }

    fn cover_parts(&self, cfg: &CoverConfig) -> (Cover, Vec<usize>) {
        let mut c = Cover::new(true);
        let n = self.slices.len();
        for i in 0..n {
            c.circle(
                self.apex(i),
                cfg.handle_radius,
                NodeAction::Reconfigure,
                CursorHint::Hand,
            );
        }
        for i in 0..n {
            c.polygon(self.slice_outline(i), NodeAction::MoveWhole, CursorHint::Move);
        }
        let mut border_owner = Vec::new();
        for (i, s) in self.slices.iter().enumerate() {
            let before = c.nodes.len();
            c.circle_border_outside(
                self.apex(i),
                s.radius,
                cfg.strip_half_width,
                s.start,
                s.sweep,
                NodeAction::Resize,
            );
            border_owner.extend(std::iter::repeat_n(i, c.nodes.len() - before));
        }
        (c, border_owner)
    }
}

impl Movable for PieEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        self.cover_parts(cfg).0
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.translated(dx, dy);
    }

    fn drag_node(
        &mut self,
        node: NodeId,
        drag: &Drag,
        cfg: &CoverConfig,
        _: &Style,
    ) -> Result<NodeEffect, ElementError> {
        let n = self.slices.len();
        let (_, owners) = self.cover_parts(cfg);
        let changed = match node {
            i if i < n => {
                let s = &mut self.slices[i];
                let apart = s.apart + drag.delta().dot(s.bisector());
                if apart < 0.0 || apart == s.apart {
                    false
                } else {
                    s.apart = apart;
                    true
                }
            }
            i if i < 2 * n => {
                self.translate(drag.dx, drag.dy);
                !drag.delta().is_zero()
            }
            i if i < 2 * n + owners.len() => {
                let k = owners[i - 2 * n];
                let push = radial_push(drag, self.apex(k));
                let s = &mut self.slices[k];
                let r = s.radius + push;
                if r < MIN_RADIUS || push == 0.0 {
                    false
                } else {
                    s.radius = r;
                    true
                }
            }
            i => return Err(ElementError::InvalidNode(i)),
        };
        Ok(NodeEffect::from_changed(changed))
    }

    fn rotation_center(&self) -> Option<Point> {
        Some(self.center)
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        self.center = rotate_about_radians(self.center, center, radians);
        for s in &mut self.slices {
            s.start = normalize_angle(s.start + radians);
        }
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::bounding((0..self.slices.len()).flat_map(|i| self.slice_outline(i))).unwrap_or_default()
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        for (i, s) in self.slices.iter().enumerate() {
            out.push(Primitive::filled_polygon(
                self.slice_outline(i),
                s.color,
                style.stroke,
                style.stroke_width,
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::test_util::drag;
    use crate::elements::Shape;

    fn pie() -> PieEl {
        PieEl::from_weights(
            Point::new(100.0, 100.0),
            50.0,
            &[(1.0, Color::BLACK), (2.0, Color::WHITE), (1.0, Color::rgb(255, 0, 0))],
        )
        .unwrap()
    }

    #[test]
    fn zoom_is_per_slice_and_invertible() {
        let mut p = pie();
        let before = p.clone();
        p.zoom_slice(1, 1.0).unwrap();
        assert_eq!(p, before);
        p.zoom_slice(1, 2.0).unwrap();
        assert_eq!(p.slices[1].radius, 100.0);
        assert_eq!(p.slices[0], before.slices[0]);
        p.zoom_slice(1, 0.5).unwrap();
        assert!((p.slices[1].radius - 50.0).abs() < 1e-9);
        assert_eq!(p.zoom_slice(0, 0.0), Err(ElementError::BadFactor(0.0)));
        assert!(p.zoom_slice(7, 2.0).is_err());
        p.resize(3.0).unwrap();
        assert!(p.slices.iter().all(|s| (s.radius - 150.0).abs() < 1e-9));
    }

    #[test]
    fn apart_slices_move_and_rotate_with_the_pie() {
        let cfg = CoverConfig::default();
        let st = Style::default();
        let mut s = Shape::Pie(pie());
        let Shape::Pie(p) = &s else { unreachable!() };
        let u = p.slices[0].bisector();
        let apex = p.apex(0);
        let e = s
            .move_node(
                0,
                &drag((apex.x, apex.y), (apex.x + 10.0 * u.dx, apex.y + 10.0 * u.dy)),
                &cfg,
                &st,
            )
            .unwrap();
        assert_eq!(e, NodeEffect::Changed);
        let Shape::Pie(p) = &s else { unreachable!() };
        assert!((p.slices[0].apart - 10.0).abs() < 1e-9);
        let offset = p.apex(0) - p.center;
        s.move_whole(7.0, -3.0);
        let Shape::Pie(p) = &s else { unreachable!() };
        assert_eq!(p.apex(0) - p.center, offset);
        s.rotate(Point::new(107.0, 97.0), std::f64::consts::FRAC_PI_2);
        let Shape::Pie(p) = &s else { unreachable!() };
        let turned = p.apex(0) - p.center;
        assert!((turned.dx + offset.dy).abs() < 1e-9 && (turned.dy - offset.dx).abs() < 1e-9);
    }

    #[test]
    fn arc_border_zooms_that_slice() {
        let cfg = CoverConfig::default();
        let st = Style::default();
        let mut s = Shape::Pie(pie());
        let Shape::Pie(p) = &s else { unreachable!() };
        let m = p.slices[1].bisector();
        let at = p.center + m * 52.0;
        let cover = s.cover(&cfg, &st);
        let node = cover.hit_test(at).unwrap();
        assert_eq!(cover.nodes[node].action, NodeAction::Resize);
        let to = at + m * 8.0;
        s.move_node(node, &drag((at.x, at.y), (to.x, to.y)), &cfg, &st).unwrap();
        let Shape::Pie(p) = &s else { unreachable!() };
        assert!((p.slices[1].radius - 58.0).abs() < 1e-9);
        assert_eq!(p.slices[0].radius, 50.0);
    }
}
