use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::{radial_push, ElementError, Movable, NodeEffect, MIN_RADIUS};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{
    angle_delta, arc_points, chord_count, normalize_angle, rotate_about_radians, Point, Rect, Vector,
};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::{Color, Style};

/// A colored sector running from `start` to the next sector's start.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sector {
    pub start: f64,
    pub color: Color,
}

fn sectors_valid(sectors: &[Sector]) -> bool {
    if sectors.len() < 2 {
        return sectors.iter().all(|s| s.start.is_finite());
    }
    let base = sectors[0].start;
    let offsets: Vec<f64> = sectors.iter().map(|s| normalize_angle(s.start - base)).collect();
    offsets.windows(2).all(|w| w[0] < w[1])
}

/// Moves partition `i` by `delta` radians if it stays strictly between its
/// neighbors on the circle.
fn move_partition(sectors: &mut [Sector], i: usize, delta: f64) -> bool {
    if delta == 0.0 {
        return false;
    }
    let n = sectors.len();
    let new = normalize_angle(sectors[i].start + delta);
    if n >= 2 {
        let prev = sectors[(i + n - 1) % n].start;
        let next = sectors[(i + 1) % n].start;
        let mut gap = normalize_angle(next - prev);
        if gap == 0.0 {
            gap = TAU;
        }
        let offset = normalize_angle(new - prev);
        if !(offset > 0.0 && offset < gap) {
            return false;
        }
    }
    sectors[i].start = new;
    true
}

fn rotate_sectors(sectors: &mut [Sector], radians: f64) {
    for s in sectors {
        s.start = normalize_angle(s.start + radians);
    }
}

fn sector_sweeps(sectors: &[Sector]) -> Vec<(f64, f64, Color)> {
    let n = sectors.len();
    (0..n)
        .map(|i| {
            let start = sectors[i].start;
            let sweep = if n == 1 {
                TAU
            } else {
                let s = normalize_angle(sectors[(i + 1) % n].start - start);
                if s == 0.0 {
                    TAU
                } else {
                    s
                }
            };
            (start, sweep, sectors[i].color)
        })
        .collect()
}

fn dir(a: f64) -> Vector {
    Vector::new(a.cos(), a.sin())
}

fn sweep_of(drag: &Drag, center: Point) -> f64 {
    if drag.point == center || drag.last == center {
        return 0.0;
    }
    angle_delta(drag.last.angle_from(center), drag.point.angle_from(center))
}

fn annulus_polygon(center: Point, inner: f64, outer: f64, start: f64, sweep: f64) -> Vec<Point> {
    let n = chord_count(outer, sweep, 0.1);
    let mut pts = arc_points(center, outer, start, sweep, n);
    if inner > 0.0 {
        let mut back = arc_points(center, inner, start, sweep, n);
        back.reverse();
        pts.extend(back);
    } else if sweep < TAU {
        pts.push(center);
    }
    pts
}

/// Filled disc, optionally split into colored sectors with movable
/// partitions.
///
/// Cover layout: partition strips, the border ring (outside the disc),
/// then the disc itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleEl {
    pub center: Point,
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sectors: Vec<Sector>,
}

impl CircleEl {
    pub fn new(center: Point, radius: f64) -> Result<Self, ElementError> {
        if !(radius > 0.0) {
            return Err(ElementError::InvalidShape("circle radius must be positive".into()));
        }
        Ok(Self {
            center,
            radius,
            sectors: Vec::new(),
        })
    }

    pub fn with_sectors(mut self, sectors: Vec<Sector>) -> Result<Self, ElementError> {
        if !sectors_valid(&sectors) {
            return Err(ElementError::InvalidShape(
                "sector starts must increase around the circle".into(),
            ));
        }
        self.sectors = sectors;
        Ok(self)
    }

    fn partitions(&self) -> usize {
        if self.sectors.len() >= 2 {
            self.sectors.len()
        } else {
            0
        }
    }
}

impl Movable for CircleEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(true);
        for s in self.sectors.iter().take(self.partitions()) {
            let end = self.center + dir(s.start) * self.radius;
            c.strip(
                self.center,
                end,
                cfg.strip_half_width,
                NodeAction::Reconfigure,
                CursorHint::Hand,
            );
        }
        c.circle_border_outside(
            self.center,
            self.radius,
            cfg.strip_half_width,
            0.0,
            TAU,
            NodeAction::Resize,
        );
        c.circle(self.center, self.radius, NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.translated(dx, dy);
    }

    fn drag_node(
        &mut self,
        node: NodeId,
        drag: &Drag,
        cfg: &CoverConfig,
        style: &Style,
    ) -> Result<NodeEffect, ElementError> {
        let parts = self.partitions();
        let body = self.cover(cfg, style).nodes.len() - 1;
        let changed = match node {
            i if i < parts => move_partition(&mut self.sectors, i, sweep_of(drag, self.center)),
            i if i < body => {
                let r = self.radius + radial_push(drag, self.center);
                if r < MIN_RADIUS || r == self.radius {
                    false
                } else {
                    self.radius = r;
                    true
                }
            }
            i if i == body => {
                self.translate(drag.dx, drag.dy);
                !drag.delta().is_zero()
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
        rotate_sectors(&mut self.sectors, radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::new(
            self.center.x - self.radius,
            self.center.y - self.radius,
            2.0 * self.radius,
            2.0 * self.radius,
        )
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        if self.sectors.is_empty() {
            out.push(Primitive::CircleArc {
                center: self.center,
                radius: self.radius,
                start: 0.0,
                sweep: TAU,
                fill: Some(style.fill),
                stroke: Some(style.stroke),
                stroke_width: style.stroke_width,
            });
            return;
        }
        for (start, sweep, color) in sector_sweeps(&self.sectors) {
            out.push(Primitive::filled_polygon(
                annulus_polygon(self.center, 0.0, self.radius, start, sweep),
                color,
                style.stroke,
                style.stroke_width,
            ));
        }
    }
}

/// Annulus with optional colored sectors.
///
/// Cover layout: partition strips, outer border ring, inner border ring
/// (inside the hole), then the body ring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RingEl {
    pub center: Point,
    pub inner_radius: f64,
    pub outer_radius: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sectors: Vec<Sector>,
}

/// Thinnest ring a drag may produce.
const MIN_RING_WIDTH: f64 = 2.0;

impl RingEl {
    pub fn new(center: Point, inner_radius: f64, outer_radius: f64) -> Result<Self, ElementError> {
        if !(inner_radius > 0.0 && inner_radius < outer_radius) {
            return Err(ElementError::InvalidShape("ring needs 0 < inner < outer".into()));
        }
        Ok(Self {
            center,
            inner_radius,
            outer_radius,
            sectors: Vec::new(),
        })
    }

    pub fn with_sectors(mut self, sectors: Vec<Sector>) -> Result<Self, ElementError> {
        if !sectors_valid(&sectors) {
            return Err(ElementError::InvalidShape(
                "sector starts must increase around the ring".into(),
            ));
        }
        self.sectors = sectors;
        Ok(self)
    }

    fn partitions(&self) -> usize {
        if self.sectors.len() >= 2 {
            self.sectors.len()
        } else {
            0
        }
    }

    fn cover_parts(&self, cfg: &CoverConfig) -> (Cover, usize, usize) {
        let mut c = Cover::new(true);
        for s in self.sectors.iter().take(self.partitions()) {
            let d = dir(s.start);
            c.strip(
                self.center + d * self.inner_radius,
                self.center + d * self.outer_radius,
                cfg.strip_half_width,
                NodeAction::Reconfigure,
                CursorHint::Hand,
            );
        }
        c.circle_border_outside(
            self.center,
            self.outer_radius,
            cfg.strip_half_width,
            0.0,
            TAU,
            NodeAction::Resize,
        );
        let outer_end = c.nodes.len();
        let hw = cfg.strip_half_width.min(self.inner_radius * 0.5);
        let r = self.inner_radius - hw;
        let n = chord_count(r, TAU, 0.25);
        let pts = arc_points(self.center, r, 0.0, TAU, n);
        for w in pts.windows(2) {
            let cursor = CursorHint::for_direction(w[0].midpoint(w[1]) - self.center);
            c.strip(w[0], w[1], hw, NodeAction::Resize, cursor);
        }
        let inner_end = c.nodes.len();
        let mid = (self.inner_radius + self.outer_radius) * 0.5;
        let n = chord_count(mid, TAU, 0.25);
        let sag = mid * (1.0 - (PI / n as f64).cos());
        let half = (self.outer_radius - self.inner_radius) * 0.5 + sag;
        let pts = arc_points(self.center, mid, 0.0, TAU, n);
        for w in pts.windows(2) {
            c.strip(w[0], w[1], half, NodeAction::MoveWhole, CursorHint::Move);
        }
        (c, outer_end, inner_end)
    }
}

impl Movable for RingEl {
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
        let parts = self.partitions();
        let (cover, outer_end, inner_end) = self.cover_parts(cfg);
        let push = radial_push(drag, self.center);
        let changed = match node {
            i if i < parts => move_partition(&mut self.sectors, i, sweep_of(drag, self.center)),
            i if i < outer_end => {
                let r = self.outer_radius + push;
                if r - self.inner_radius < MIN_RING_WIDTH || push == 0.0 {
                    false
                } else {
                    self.outer_radius = r;
                    true
                }
            }
            i if i < inner_end => {
                let r = self.inner_radius + push;
                if r < MIN_RADIUS || self.outer_radius - r < MIN_RING_WIDTH || push == 0.0 {
                    false
                } else {
                    self.inner_radius = r;
                    true
                }
            }
            i if i < cover.nodes.len() => {
                self.translate(drag.dx, drag.dy);
                !drag.delta().is_zero()
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
        rotate_sectors(&mut self.sectors, radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        let r = self.outer_radius;
        Rect::new(self.center.x - r, self.center.y - r, 2.0 * r, 2.0 * r)
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        let parts = if self.sectors.is_empty() {
            vec![(0.0, TAU, style.fill)]
        } else {
            sector_sweeps(&self.sectors)
        };
        for (start, sweep, color) in parts {
            out.push(Primitive::filled_polygon(
                annulus_polygon(self.center, self.inner_radius, self.outer_radius, start, sweep),
                color,
                style.stroke,
                style.stroke_width,
            ));
        }
    }
}

/// Half disc standing on its diameter, dome upward. Any point of the dome
/// border resizes the radius; the diameter stays on the same line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemicircleEl {
    /// Middle of the diameter.
    pub center: Point,
    pub radius: f64,
}

impl SemicircleEl {
    pub fn new(center: Point, radius: f64) -> Result<Self, ElementError> {
        if !(radius > 0.0) {
            return Err(ElementError::InvalidShape("semicircle radius must be positive".into()));
        }
        Ok(Self { center, radius })
    }

    pub fn outline(&self) -> Vec<Point> {
        let n = chord_count(self.radius, PI, 0.1);
        arc_points(self.center, self.radius, PI, PI, n)
    }
}

impl Movable for SemicircleEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(false);
        c.circle_border_outside(
            self.center,
            self.radius,
            cfg.strip_half_width,
            PI,
            PI,
            NodeAction::Resize,
        );
        c.polygon(self.outline(), NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.translated(dx, dy);
    }

    fn drag_node(
        &mut self,
        node: NodeId,
        drag: &Drag,
        cfg: &CoverConfig,
        style: &Style,
    ) -> Result<NodeEffect, ElementError> {
        let body = self.cover(cfg, style).nodes.len() - 1;
        let changed = match node {
            i if i < body => {
                let r = self.radius + radial_push(drag, self.center);
                if r < MIN_RADIUS || r == self.radius {
                    false
                } else {
                    self.radius = r;
                    true
                }
            }
            i if i == body => {
                self.translate(drag.dx, drag.dy);
                !drag.delta().is_zero()
            }
            i => return Err(ElementError::InvalidNode(i)),
        };
        Ok(NodeEffect::from_changed(changed))
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::new(
            self.center.x - self.radius,
            self.center.y - self.radius,
            2.0 * self.radius,
            self.radius,
        )
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::test_util::drag;
    use crate::elements::Shape;

    fn sectors(degs: &[f64]) -> Vec<Sector> {
        degs.iter()
            .map(|d| Sector {
                start: d.to_radians(),
                color: Color::BLACK,
            })
            .collect()
    }

    fn at(center: Point, r: f64, deg: f64) -> (f64, f64) {
        let a = deg.to_radians();
        (center.x + r * a.cos(), center.y + r * a.sin())
    }

    #[test]
    fn ring_partition_moves_thirty_degrees() {
        let c = Point::new(100.0, 100.0);
        let ring = RingEl::new(c, 30.0, 60.0)
            .unwrap()
            .with_sectors(sectors(&[0.0, 90.0, 200.0]))
            .unwrap();
        let mut s = Shape::Ring(ring);
        let e = s
            .move_node(
                1,
                &drag(at(c, 45.0, 90.0), at(c, 45.0, 120.0)),
                &CoverConfig::default(),
                &Style::default(),
            )
            .unwrap();
        assert_eq!(e, NodeEffect::Changed);
        let Shape::Ring(r) = &s else { unreachable!() };
        assert!((r.sectors[1].start - 120f64.to_radians()).abs() < 1e-9);
        assert_eq!(r.sectors[0].start, 0.0);
        assert_eq!(r.sectors[2].start, 200f64.to_radians());
        // crossing the next boundary is refused
        let e = s
            .move_node(
                1,
                &drag(at(c, 45.0, 120.0), at(c, 45.0, 210.0)),
                &CoverConfig::default(),
                &Style::default(),
            )
            .unwrap();
        assert_eq!(e, NodeEffect::Unchanged);
    }

    #[test]
    fn circle_border_resizes_radius() {
        let c = Point::new(0.0, 0.0);
        let mut s = Shape::Circle(CircleEl::new(c, 40.0).unwrap());
        let cover = s.cover(&CoverConfig::default(), &Style::default());
        let node = cover.hit_test(Point::new(42.0, 0.0)).unwrap();
        assert_eq!(cover.nodes[node].action, NodeAction::Resize);
        s.move_node(
            node,
            &drag((42.0, 0.0), (52.0, 0.0)),
            &CoverConfig::default(),
            &Style::default(),
        )
        .unwrap();
        let Shape::Circle(circle) = &s else { unreachable!() };
        assert_eq!(circle.radius, 50.0);
    }

    #[test]
    fn ring_inner_and_outer_limits() {
        let c = Point::new(0.0, 0.0);
        let cfg = CoverConfig::default();
        let st = Style::default();
        let mut s = Shape::Ring(RingEl::new(c, 20.0, 40.0).unwrap());
        let cover = s.cover(&cfg, &st);
        let inner = cover.hit_test(Point::new(18.0, 0.0)).unwrap();
        assert_eq!(cover.nodes[inner].action, NodeAction::Resize);
        // inner border cannot pass the outer one
        let e = s.move_node(inner, &drag((18.0, 0.0), (60.0, 0.0)), &cfg, &st).unwrap();
        assert_eq!(e, NodeEffect::Unchanged);
        s.move_node(inner, &drag((18.0, 0.0), (23.0, 0.0)), &cfg, &st).unwrap();
        let Shape::Ring(r) = &s else { unreachable!() };
        assert_eq!(r.inner_radius, 25.0);
        assert!(RingEl::new(c, 40.0, 20.0).is_err());
    }

    #[test]
    fn semicircle_dome_resizes() {
        let mut s = Shape::Semicircle(SemicircleEl::new(Point::new(0.0, 100.0), 30.0).unwrap());
        let cfg = CoverConfig::default();
        let st = Style::default();
        let cover = s.cover(&cfg, &st);
        let roof = cover.hit_test(Point::new(0.0, 68.0)).unwrap();
        assert_eq!(cover.nodes[roof].action, NodeAction::Resize);
        s.move_node(roof, &drag((0.0, 68.0), (0.0, 58.0)), &cfg, &st).unwrap();
        let Shape::Semicircle(h) = &s else { unreachable!() };
        assert_eq!(h.radius, 40.0);
        assert_eq!(h.center, Point::new(0.0, 100.0));
    }
}
