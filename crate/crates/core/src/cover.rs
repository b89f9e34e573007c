//! Covers: the sensitive areas an element exposes to the mover.
//!
//! A cover is an ordered list of nodes. A press resolves to the first node
//! containing the pointer, so handles are listed before the body they sit on.

use serde::{Deserialize, Serialize};

use crate::geometry::{distance_point_to_segment, point_in_polygon, Point, Rect, Vector};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Button {
    Left,
    Right,
}

impl std::str::FromStr for Button {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Button::Left),
            "right" => Ok(Button::Right),
            other => Err(format!("unknown button `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum NodeAction {
    MoveWhole,
    Resize,
    Reconfigure,
    RotateOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CursorHint {
    Move,
    SizeH,
    SizeV,
    #[serde(rename = "sizeNWSE")]
    SizeNwse,
    #[serde(rename = "sizeNESW")]
    SizeNesw,
    Hand,
    Default,
}

impl CursorHint {
    /// Resize cursor best matching a drag direction.
    pub fn for_direction(v: Vector) -> CursorHint {
        let a = v.dy.atan2(v.dx).to_degrees().rem_euclid(180.0);
        match a {
            a if !(22.5..157.5).contains(&a) => CursorHint::SizeH,
            a if a < 67.5 => CursorHint::SizeNwse,
            a if a < 112.5 => CursorHint::SizeV,
            _ => CursorHint::SizeNesw,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NodeShape {
    Circle { center: Point, radius: f64 },
    Strip { a: Point, b: Point, half_width: f64 },
    Polygon { vertices: Vec<Point> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverNode {
    pub id: NodeId,
    pub shape: NodeShape,
    pub action: NodeAction,
    pub cursor: CursorHint,
}

impl CoverNode {
    pub fn contains(&self, p: Point) -> bool {
        node_contains(&self.shape, p)
    }

    /// Left presses drive translation, resizing and reconfiguring; right
    /// presses only rotate, and only on elements that can rotate.
    pub fn accepts(&self, button: Button, rotatable: bool) -> bool {
        match button {
            Button::Left => self.action != NodeAction::RotateOnly,
            Button::Right => rotatable && matches!(self.action, NodeAction::MoveWhole | NodeAction::RotateOnly),
        }
    }
}

pub fn node_contains(shape: &NodeShape, p: Point) -> bool {
    match shape {
        NodeShape::Circle { center, radius } => p.distance(*center) <= *radius,
        NodeShape::Strip { a, b, half_width } => distance_point_to_segment(p, *a, *b) <= *half_width,
        NodeShape::Polygon { vertices } => point_in_polygon(p, vertices).unwrap_or(false),
    }
}

/// Grab tolerances shared by every element of a scene.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverConfig {
    pub handle_radius: f64,
    pub strip_half_width: f64,
}

impl Default for CoverConfig {
    fn default() -> Self {
        Self {
            handle_radius: 5.0,
            strip_half_width: 3.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Cover {
    pub nodes: Vec<CoverNode>,
    /// Whether right-button presses on body nodes rotate the element.
    pub rotatable: bool,
}

impl Cover {
    pub fn new(rotatable: bool) -> Self {
        Self {
            nodes: Vec::new(),
            rotatable,
        }
    }

    /// Appends a node; ids follow insertion order with no gaps.
    pub fn push(&mut self, shape: NodeShape, action: NodeAction, cursor: CursorHint) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(CoverNode {
            id,
            shape,
            action,
            cursor,
        });
        id
    }

    pub fn circle(&mut self, center: Point, radius: f64, action: NodeAction, cursor: CursorHint) -> NodeId {
        self.push(NodeShape::Circle { center, radius }, action, cursor)
    }

    pub fn strip(&mut self, a: Point, b: Point, half_width: f64, action: NodeAction, cursor: CursorHint) -> NodeId {
        self.push(NodeShape::Strip { a, b, half_width }, action, cursor)
    }

    pub fn polygon(&mut self, vertices: Vec<Point>, action: NodeAction, cursor: CursorHint) -> NodeId {
        self.push(NodeShape::Polygon { vertices }, action, cursor)
    }

    pub fn rect_body(&mut self, r: &Rect, action: NodeAction, cursor: CursorHint) -> NodeId {
        self.polygon(r.corners().to_vec(), action, cursor)
    }

    /// First node containing `p`, in cover order.
    pub fn hit_test(&self, p: Point) -> Option<NodeId> {
        self.nodes.iter().find(|n| n.contains(p)).map(|n| n.id)
    }

    pub fn node(&self, id: NodeId) -> Option<&CoverNode> {
        self.nodes.get(id)
    }

    /// Re-tags every node, keeping shapes and order. Used when a whole
    /// composite moves as one unit.
    pub fn with_action(mut self, action: NodeAction, cursor: CursorHint) -> Self {
        for n in &mut self.nodes {
            n.action = action;
            n.cursor = cursor;
        }
        self
    }

    /// Appends the nodes of another cover, renumbering them.
    pub fn extend(&mut self, other: Cover) {
        for n in other.nodes {
            self.push(n.shape, n.action, n.cursor);
        }
    }

    /// Ring of strips hugging the outside of a circle of `radius`.
    pub fn circle_border_outside(
        &mut self,
        center: Point,
        radius: f64,
        half_width: f64,
        start: f64,
        sweep: f64,
        action: NodeAction,
    ) {
        let r = radius + half_width;
        let segments = crate::geometry::chord_count(r, sweep, 0.25);
        // lift chords so their inner reach stays outside the body
        let lift = r * (1.0 - (sweep.abs() / segments as f64 / 2.0).cos());
        let pts = crate::geometry::arc_points(center, r + lift, start, sweep, segments);
        for w in pts.windows(2) {
            let mid = w[0].midpoint(w[1]);
            let cursor = CursorHint::for_direction(mid - center);
            self.strip(w[0], w[1], half_width, action, cursor);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn containment_examples() {
        let c = NodeShape::Circle {
            center: p(0.0, 0.0),
            radius: 5.0,
        };
        assert!(node_contains(&c, p(3.0, 4.0)));
        let s = NodeShape::Strip {
            a: p(0.0, 0.0),
            b: p(10.0, 0.0),
            half_width: 3.0,
        };
        assert!(node_contains(&s, p(5.0, 3.0)));
        assert!(node_contains(&s, p(12.0, 0.0)));
        assert!(!node_contains(&s, p(14.0, 0.0)));
    }

    #[test]
    fn earlier_nodes_win() {
        let mut cover = Cover::new(false);
        let corner = cover.circle(p(0.0, 0.0), 5.0, NodeAction::Resize, CursorHint::SizeNwse);
        let body = cover.rect_body(
            &Rect::new(0.0, 0.0, 50.0, 50.0),
            NodeAction::MoveWhole,
            CursorHint::Move,
        );
        assert_eq!(cover.hit_test(p(2.0, 2.0)), Some(corner));
        assert_eq!(cover.hit_test(p(20.0, 20.0)), Some(body));
        assert_eq!(cover.hit_test(p(60.0, 20.0)), None);
    }

    #[test]
    fn button_acceptance() {
        let mut cover = Cover::new(true);
        cover.circle(p(0.0, 0.0), 5.0, NodeAction::Resize, CursorHint::SizeH);
        cover.circle(p(0.0, 0.0), 5.0, NodeAction::MoveWhole, CursorHint::Move);
        assert!(cover.nodes[0].accepts(Button::Left, true));
        assert!(!cover.nodes[0].accepts(Button::Right, true));
        assert!(cover.nodes[1].accepts(Button::Right, true));
        assert!(!cover.nodes[1].accepts(Button::Right, false));
    }

    #[test]
    fn outside_border_ring_leaves_disc_alone() {
        let mut cover = Cover::new(false);
        cover.circle_border_outside(p(0.0, 0.0), 40.0, 3.0, 0.0, std::f64::consts::TAU, NodeAction::Resize);
        for i in 0..360 {
            let a = (i as f64).to_radians();
            let inner = p(39.9 * a.cos(), 39.9 * a.sin());
            assert_eq!(cover.hit_test(inner), None, "angle {i}");
            let outer = p(43.0 * a.cos(), 43.0 * a.sin());
            assert!(cover.hit_test(outer).is_some(), "angle {i}");
        }
    }
}
