use serde::{Deserialize, Serialize};

use super::{ElementError, Movable, NodeEffect};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{
    is_convex, point_in_polygon, rotate_about_radians, segments_intersect, span, vertex_centroid, Point, Rect,
};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

/// Polygon, optionally with one hole.
///
/// Cover layout: outer vertex handles, hole vertex handles, body. Regular
/// polygons scale uniformly about their center from any vertex handle, and
/// those handles sit just outside the outline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PolygonEl {
    pub vertices: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hole: Option<Vec<Point>>,
    pub convex_only: bool,
    pub regular: bool,
    pub min_span: f64,
    pub delete_on_collapse: bool,
    /// Vertex indices that follow another element and refuse direct drags.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub locked: Vec<usize>,
}

impl PolygonEl {
    pub fn new(vertices: Vec<Point>) -> Result<Self, ElementError> {
        if vertices.len() < 3 {
            return Err(ElementError::InvalidShape(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        Ok(Self {
            vertices,
            hole: None,
            convex_only: false,
            regular: false,
            min_span: 4.0,
            delete_on_collapse: false,
            locked: Vec::new(),
        })
    }

    /// Regular `n`-gon inscribed in a circle; starts at `start` radians.
    pub fn regular(center: Point, radius: f64, n: usize, start: f64) -> Result<Self, ElementError> {
        let vs = (0..n)
            .map(|i| {
                let a = start + std::f64::consts::TAU * i as f64 / n as f64;
                Point::new(center.x + radius * a.cos(), center.y + radius * a.sin())
            })
            .collect();
        let mut p = Self::new(vs)?;
        p.regular = true;
        p.convex_only = true;
        Ok(p)
    }

    pub fn convex(mut self) -> Result<Self, ElementError> {
        if !is_convex(&self.vertices).unwrap_or(false) {
            return Err(ElementError::InvalidShape("polygon is not convex".into()));
        }
        self.convex_only = true;
        Ok(self)
    }

    pub fn with_hole(mut self, hole: Vec<Point>) -> Result<Self, ElementError> {
        if hole.len() < 3 || !hole_inside(&self.vertices, &hole) {
            return Err(ElementError::InvalidShape(
                "hole must lie strictly inside the outline".into(),
            ));
        }
        self.hole = Some(hole);
        Ok(self)
    }

    pub fn with_min_span(mut self, min_span: f64, delete_on_collapse: bool) -> Self {
        self.min_span = min_span;
        self.delete_on_collapse = delete_on_collapse;
        self
    }

    pub fn center(&self) -> Point {
        vertex_centroid(&self.vertices)
    }

    /// Outline used for hit-testing and filling: a single keyhole ring when
    /// a hole is present.
    pub fn body_ring(&self) -> Vec<Point> {
        let mut ring = self.vertices.clone();
        if let Some(hole) = &self.hole {
            ring.push(self.vertices[0]);
            ring.extend(hole.iter().copied());
            ring.push(hole[0]);
        }
        ring
    }

    /// Checks every invariant except the size floor.
    pub fn shape_ok(&self) -> bool {
        if self.convex_only && !is_convex(&self.vertices).unwrap_or(false) {
            return false;
        }
        match &self.hole {
            Some(h) => hole_inside(&self.vertices, h),
            None => true,
        }
    }

    fn commit(&mut self, candidate: PolygonEl) -> NodeEffect {
        if !candidate.shape_ok() {
            return NodeEffect::Unchanged;
        }
        if span(&candidate.vertices) < self.min_span {
            return if self.delete_on_collapse {
                NodeEffect::Collapse
            } else {
                NodeEffect::Unchanged
            };
        }
        let changed = candidate != *self;
        *self = candidate;
        NodeEffect::from_changed(changed)
    }
}

fn hole_inside(outer: &[Point], hole: &[Point]) -> bool {
    let strictly_inside = |p: &Point| {
        point_in_polygon(*p, outer).unwrap_or(false)
            && outer
                .iter()
                .zip(outer.iter().cycle().skip(1))
                .all(|(a, b)| crate::geometry::distance_point_to_segment(*p, *a, *b) > crate::geometry::BOUNDARY_EPS)
    };
    if !hole.iter().all(strictly_inside) {
        return false;
    }
    let n = outer.len();
    let m = hole.len();
    for i in 0..n {
        for j in 0..m {
            if segments_intersect(outer[i], outer[(i + 1) % n], hole[j], hole[(j + 1) % m]) {
                return false;
            }
        }
    }
    true
}

impl Movable for PolygonEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(true);
        let center = self.center();
        let r = cfg.handle_radius;
        for &v in &self.vertices {
            if self.regular {
                let out = (v - center).normalized().unwrap_or_default();
                c.circle(v + out * r, r, NodeAction::Resize, CursorHint::for_direction(out));
            } else {
                c.circle(v, r, NodeAction::Reconfigure, CursorHint::Hand);
            }
        }
        for &v in self.hole.iter().flatten() {
            c.circle(v, r, NodeAction::Reconfigure, CursorHint::Hand);
        }
        c.polygon(self.body_ring(), NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for v in self.vertices.iter_mut().chain(self.hole.iter_mut().flatten()) {
            *v = v.translated(dx, dy);
        }
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let n = self.vertices.len();
        let holes = self.hole.as_ref().map_or(0, Vec::len);
        if drag.delta().is_zero() && node <= n + holes {
            return Ok(NodeEffect::Unchanged);
        }
        let mut candidate = self.clone();
        match node {
            i if i < n && self.regular => {
                let c = self.center();
                let before = drag.last.distance(c);
                if before == 0.0 {
                    return Ok(NodeEffect::Unchanged);
                }
                let k = drag.point.distance(c) / before;
                for v in candidate.vertices.iter_mut().chain(candidate.hole.iter_mut().flatten()) {
                    *v = c + (*v - c) * k;
                }
            }
            i if i < n => {
                if self.locked.contains(&i) {
                    return Ok(NodeEffect::Unchanged);
                }
                candidate.vertices[i] = candidate.vertices[i].translated(drag.dx, drag.dy);
            }
            i if i < n + holes => {
                let h = candidate.hole.as_mut().expect("hole present");
                h[i - n] = h[i - n].translated(drag.dx, drag.dy);
            }
            i if i == n + holes => {
                self.translate(drag.dx, drag.dy);
                return Ok(NodeEffect::Changed);
            }
            i => return Err(ElementError::InvalidNode(i)),
        }
        Ok(self.commit(candidate))
    }

    fn rotation_center(&self) -> Option<Point> {
        Some(self.center())
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        for v in self.vertices.iter_mut().chain(self.hole.iter_mut().flatten()) {
            *v = rotate_about_radians(*v, center, radians);
        }
    }

    fn bounds(&self, _: &Style) -> Rect {
        Rect::bounding(self.vertices.iter().copied()).unwrap_or_default()
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::filled_polygon(
            self.body_ring(),
            style.fill,
            style.stroke,
            style.stroke_width,
        ));
    }
}
