//! The shape bestiary. Every shape implements [`Movable`]; [`Shape`] is the
//! closed set the scene stores and persists.

mod crescent;
mod line;
mod pie;
mod polygon;
mod polyline;
mod rect;
mod round;
mod strip;

pub use crescent::CrescentEl;
pub use line::LineEl;
pub use pie::{PieEl, Slice};
pub use polygon::PolygonEl;
pub use polyline::PolylineEl;
pub use rect::{box_handle_edges, push_box_handles, resize_edges, Edges, RectangleEl, ResizeMode};
pub use round::{CircleEl, RingEl, Sector, SemicircleEl};
pub use strip::StripEl;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::controls_groups::ControlEl;
use crate::cover::{Button, Cover, CoverConfig, NodeId};
use crate::geometry::{angle_delta, distance_point_to_segment, point_in_polygon, Point, Rect};
use crate::mover::Drag;
use crate::plot::{AreaUnderCurve, CommentEl, PlottingArea, ScaleEl};
use crate::render::Primitive;
use crate::style::Style;
use crate::ElementId;

/// Smallest radius any round shape may be dragged down to.
pub const MIN_RADIUS: f64 = 2.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ElementError {
    #[error("node {0} does not exist on this element")]
    InvalidNode(NodeId),
    #[error("index {index} out of range (len {len})")]
    InvalidIndex { index: usize, len: usize },
    #[error("a polyline keeps at least 2 joints")]
    TooFewJoints,
    #[error("zoom factor must be positive, got {0}")]
    BadFactor(f64),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("operation `{op}` does not apply to a {kind}")]
    Unsupported { op: &'static str, kind: &'static str },
}

/// What a node drag did to an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeEffect {
    Changed,
    /// Nothing moved, either a zero delta or a rejected constraint violation.
    Unchanged,
    /// The shape was squeezed below its minimum and asks to be deleted.
    Collapse,
}

impl NodeEffect {
    pub fn from_changed(changed: bool) -> Self {
        if changed {
            NodeEffect::Changed
        } else {
            NodeEffect::Unchanged
        }
    }
}

/// The contract every screen element fulfils.
pub trait Movable {
    fn cover(&self, cfg: &CoverConfig, style: &Style) -> Cover;

    /// Shifts every defining point by exactly `(dx, dy)`.
    fn translate(&mut self, dx: f64, dy: f64);

    /// Left-button drag of a node other than a plain whole-move.
    fn drag_node(
        &mut self,
        node: NodeId,
        drag: &Drag,
        cfg: &CoverConfig,
        style: &Style,
    ) -> Result<NodeEffect, ElementError>;

    /// Pivot for right-button rotation; `None` if the shape does not rotate.
    fn rotation_center(&self) -> Option<Point> {
        None
    }

    fn rotate(&mut self, _center: Point, _radians: f64) {}

    fn bounds(&self, style: &Style) -> Rect;

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>);
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Shape {
    Line(LineEl),
    Polyline(PolylineEl),
    Rect(RectangleEl),
    Polygon(PolygonEl),
    Circle(CircleEl),
    Ring(RingEl),
    Semicircle(SemicircleEl),
    Strip(StripEl),
    Crescent(CrescentEl),
    Pie(PieEl),
    Control(ControlEl),
    Comment(CommentEl),
    Scale(ScaleEl),
    Plot(PlottingArea),
    AreaUnderCurve(AreaUnderCurve),
}

macro_rules! each_shape {
    ($self:expr, $s:ident => $body:expr) => {
        match $self {
            Shape::Line($s) => $body,
            Shape::Polyline($s) => $body,
            Shape::Rect($s) => $body,
            Shape::Polygon($s) => $body,
            Shape::Circle($s) => $body,
            Shape::Ring($s) => $body,
            Shape::Semicircle($s) => $body,
            Shape::Strip($s) => $body,
            Shape::Crescent($s) => $body,
            Shape::Pie($s) => $body,
            Shape::Control($s) => $body,
            Shape::Comment($s) => $body,
            Shape::Scale($s) => $body,
            Shape::Plot($s) => $body,
            Shape::AreaUnderCurve($s) => $body,
        }
    };
}

impl Shape {
    pub fn kind(&self) -> &'static str {
        match self {
            Shape::Line(_) => "line",
            Shape::Polyline(_) => "polyline",
            Shape::Rect(_) => "rect",
            Shape::Polygon(_) => "polygon",
            Shape::Circle(_) => "circle",
            Shape::Ring(_) => "ring",
            Shape::Semicircle(_) => "semicircle",
            Shape::Strip(_) => "strip",
            Shape::Crescent(_) => "crescent",
            Shape::Pie(_) => "pie",
            Shape::Control(_) => "control",
            Shape::Comment(_) => "comment",
            Shape::Scale(_) => "scale",
            Shape::Plot(_) => "plot",
            Shape::AreaUnderCurve(_) => "areaUnderCurve",
        }
    }

    fn as_movable(&self) -> &dyn Movable {
        each_shape!(self, s => s)
    }

    fn as_movable_mut(&mut self) -> &mut dyn Movable {
        each_shape!(self, s => s)
    }

    pub fn cover(&self, cfg: &CoverConfig, style: &Style) -> Cover {
        self.as_movable().cover(cfg, style)
    }

    /// Whole-element translation; true iff the delta is non-zero.
    pub fn move_whole(&mut self, dx: f64, dy: f64) -> bool {
        if dx == 0.0 && dy == 0.0 {
            return false;
        }
        self.as_movable_mut().translate(dx, dy);
        true
    }

    /// Node drag. Right-button drags rotate about the shape's own pivot by
    /// the angle the pointer swept around it.
    pub fn move_node(
        &mut self,
        node: NodeId,
        drag: &Drag,
        cfg: &CoverConfig,
        style: &Style,
    ) -> Result<NodeEffect, ElementError> {
        let cover = self.cover(cfg, style);
        if node >= cover.nodes.len() {
            return Err(ElementError::InvalidNode(node));
        }
        if drag.button == Button::Right {
            let Some(center) = self.rotation_center() else {
                return Ok(NodeEffect::Unchanged);
            };
            let delta = angle_delta(drag.last.angle_from(center), drag.point.angle_from(center));
            if delta == 0.0 || drag.point == center || drag.last == center {
                return Ok(NodeEffect::Unchanged);
            }
            self.rotate(center, delta);
            return Ok(NodeEffect::Changed);
        }
        self.as_movable_mut().drag_node(node, drag, cfg, style)
    }

    pub fn rotation_center(&self) -> Option<Point> {
        self.as_movable().rotation_center()
    }

    pub fn rotate(&mut self, center: Point, radians: f64) {
        self.as_movable_mut().rotate(center, radians)
    }

    pub fn bounds(&self, style: &Style) -> Rect {
        self.as_movable().bounds(style)
    }

    pub fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        self.as_movable().draw(style, out)
    }

    /// Whether `p` lies well inside the pressable body, at least one pixel
    /// away from its outline. `None` for shapes whose interior is
    /// deliberately transparent to presses.
    pub fn interior_contains(&self, p: Point, style: &Style) -> Option<bool> {
        const INSET: f64 = 1.0;
        let near_path = |joints: &[Point]| {
            joints
                .windows(2)
                .any(|w| distance_point_to_segment(p, w[0], w[1]) < 0.5)
        };
        Some(match self {
            Shape::Line(l) => near_path(&[l.a, l.b]),
            Shape::Polyline(l) => near_path(&l.joints),
            Shape::Rect(r) => deep_in_polygon(p, &r.corners(), INSET),
            Shape::Polygon(g) => deep_in_polygon(p, &g.body_ring(), INSET),
            Shape::Circle(c) => p.distance(c.center) < c.radius - INSET,
            Shape::Ring(r) => {
                let d = p.distance(r.center);
                d > r.inner_radius + INSET && d < r.outer_radius - INSET
            }
            Shape::Semicircle(s) => deep_in_polygon(p, &s.outline(), INSET),
            Shape::Strip(s) => deep_in_polygon(p, &s.outline(), INSET),
            Shape::Crescent(c) => deep_in_polygon(p, &c.outline(), INSET),
            Shape::Pie(pie) => (0..pie.slices.len()).any(|i| deep_in_polygon(p, &pie.slice_outline(i), INSET)),
            Shape::Control(_) => return None,
            Shape::Comment(_) | Shape::Scale(_) | Shape::Plot(_) | Shape::AreaUnderCurve(_) => {
                deep_in_polygon(p, &self.bounds(style).corners(), INSET)
            }
        })
    }

    /// Vertex-like defining points, used by isometry checks.
    pub fn defining_points(&self) -> Vec<Point> {
        match self {
            Shape::Line(l) => vec![l.a, l.b],
            Shape::Polyline(p) => p.joints.clone(),
            Shape::Polygon(p) => {
                let mut v = p.vertices.clone();
                if let Some(h) = &p.hole {
                    v.extend(h.iter().copied());
                }
                v
            }
            Shape::Rect(r) => r.corners().to_vec(),
            Shape::Strip(s) => vec![s.a, s.b],
            Shape::Crescent(c) => vec![c.outer.center, c.inner.center],
            _ => Vec::new(),
        }
    }
}

fn deep_in_polygon(p: Point, vs: &[Point], inset: f64) -> bool {
    point_in_polygon(p, vs).unwrap_or(false)
        && (0..vs.len()).all(|i| distance_point_to_segment(p, vs[i], vs[(i + 1) % vs.len()]) >= inset)
}

/// A circle given by center and radius (used inside composite shapes).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleGeom {
    pub center: Point,
    pub radius: f64,
}

/// Record kept by the scene for every element.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Element {
    pub id: ElementId,
    pub visible: bool,
    pub style: Style,
    #[serde(flatten)]
    pub shape: Shape,
}

impl Element {
    pub fn new(id: ElementId, shape: Shape, style: Style) -> Self {
        Self {
            id,
            visible: true,
            style,
            shape,
        }
    }
}

/// Unit projection helper: how far `drag` pushed along the direction from
/// `center` through the previous pointer position.
pub(crate) fn radial_push(drag: &Drag, center: Point) -> f64 {
    match (drag.last - center).normalized() {
        Some(u) => drag.delta().dot(u),
        None => 0.0,
    }
}
