//! The mover: one registration queue plus the press/move/release state
//! machine that routes pointer events to whatever element is held.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{Button, Cover, NodeAction, NodeId};
use crate::geometry::{Point, Vector};
use crate::ElementId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MoverError {
    #[error("element {0} is already registered")]
    DuplicateRegistration(ElementId),
    #[error("element {0} is not registered")]
    UnknownElement(ElementId),
    #[error("press while element {0} is still held")]
    CatchDuringGrab(ElementId),
}

/// Everything the mover needs from the scene it supervises.
pub trait MoverHost {
    /// Current cover of a registered element, or `None` when it cannot be
    /// pressed at all (hidden, for instance).
    fn cover(&self, id: ElementId) -> Option<Cover>;

    fn move_whole(&mut self, id: ElementId, dx: f64, dy: f64) -> bool;

    fn move_node(&mut self, id: ElementId, node: NodeId, drag: &Drag) -> bool;

    /// Ids that travel with `id` when it changes paint order, in their
    /// current relative order. Groups bring their registered members along.
    fn z_block(&self, id: ElementId) -> Vec<ElementId> {
        vec![id]
    }

    /// Whether the held element still exists after a move (elements may
    /// delete themselves when squeezed).
    fn contains(&self, id: ElementId) -> bool;
}

/// One incremental pointer step applied to a held node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Drag {
    pub dx: f64,
    pub dy: f64,
    pub point: Point,
    pub last: Point,
    pub button: Button,
}

impl Drag {
    pub fn delta(&self) -> Vector {
        Vector::new(self.dx, self.dy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grab {
    pub element: ElementId,
    pub node: NodeId,
    pub action: NodeAction,
    pub button: Button,
    pub grab_offset: Vector,
    pub last_point: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Released {
    pub element: ElementId,
    pub node: NodeId,
    pub button: Button,
}

/// Target slot for [`Mover::set_z_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZPosition {
    Top,
    Bottom,
    /// Index in the registry after removal, clamped to its length.
    Index(usize),
}

impl std::str::FromStr for ZPosition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "top" => Ok(ZPosition::Top),
            "bottom" => Ok(ZPosition::Bottom),
            n => n
                .parse()
                .map(ZPosition::Index)
                .map_err(|_| format!("bad z position `{n}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mover {
    registry: Vec<ElementId>,
    grab: Option<Grab>,
    pub raise_on_catch: bool,
}

impl Default for Mover {
    fn default() -> Self {
        Self::new()
    }
}

impl Mover {
    pub fn new() -> Self {
        Self {
            registry: Vec::new(),
            grab: None,
            raise_on_catch: true,
        }
    }

    /// Registered ids bottom to top.
    pub fn registry(&self) -> &[ElementId] {
        &self.registry
    }

    pub fn grab(&self) -> Option<&Grab> {
        self.grab.as_ref()
    }

    pub fn is_registered(&self, id: ElementId) -> bool {
        self.registry.contains(&id)
    }

    pub fn add(&mut self, id: ElementId) -> Result<(), MoverError> {
        if self.is_registered(id) {
            return Err(MoverError::DuplicateRegistration(id));
        }
        self.registry.push(id);
        Ok(())
    }

    /// Inserts directly above `anchor` (or on top if `anchor` is absent).
    pub fn add_above(&mut self, id: ElementId, anchor: Option<ElementId>) -> Result<(), MoverError> {
        if self.is_registered(id) {
            return Err(MoverError::DuplicateRegistration(id));
        }
        match anchor.and_then(|a| self.position(a)) {
            Some(i) => self.registry.insert(i + 1, id),
            None => self.registry.push(id),
        }
        Ok(())
    }

    pub fn remove(&mut self, id: ElementId) -> bool {
        let before = self.registry.len();
        self.registry.retain(|&r| r != id);
        if self.grab.is_some_and(|g| g.element == id) {
            self.grab = None;
        }
        before != self.registry.len()
    }

    pub fn clear(&mut self) {
        self.registry.clear();
        self.grab = None;
    }

    fn position(&self, id: ElementId) -> Option<usize> {
        self.registry.iter().position(|&r| r == id)
    }

    /// Topmost registered element whose first hit node accepts `button`.
    pub fn find_target<H: MoverHost + ?Sized>(
        &self,
        host: &H,
        p: Point,
        button: Button,
    ) -> Option<(ElementId, NodeId, NodeAction)> {
        self.registry.iter().rev().find_map(|&id| {
            let cover = host.cover(id)?;
            let node = cover.node(cover.hit_test(p)?)?;
            node.accepts(button, cover.rotatable)
                .then_some((id, node.id, node.action))
        })
    }

    pub fn catch<H: MoverHost + ?Sized>(&mut self, host: &H, p: Point, button: Button) -> Result<bool, MoverError> {
        if let Some(g) = self.grab {
            return Err(MoverError::CatchDuringGrab(g.element));
        }
        let Some((element, node, action)) = self.find_target(host, p, button) else {
            return Ok(false);
        };
        if button == Button::Left && self.raise_on_catch {
            self.raise_block(host.z_block(element));
        }
        let anchor = host
            .cover(element)
            .and_then(|c| c.node(node).map(|n| anchor_of(&n.shape)))
            .unwrap_or(p);
        self.grab = Some(Grab {
            element,
            node,
            action,
            button,
            grab_offset: p - anchor,
            last_point: p,
        });
        Ok(true)
    }

    /// Applies the pointer delta since the previous event to the held
    /// element. Returns whether anything visibly changed.
    pub fn move_to<H: MoverHost + ?Sized>(&mut self, host: &mut H, p: Point) -> bool {
        let Some(grab) = self.grab.as_mut() else {
            return false;
        };
        let drag = Drag {
            dx: p.x - grab.last_point.x,
            dy: p.y - grab.last_point.y,
            point: p,
            last: grab.last_point,
            button: grab.button,
        };
        grab.last_point = p;
        let (id, node, action, button) = (grab.element, grab.node, grab.action, grab.button);
        let changed = if action == NodeAction::MoveWhole && button == Button::Left {
            host.move_whole(id, drag.dx, drag.dy)
        } else {
            host.move_node(id, node, &drag)
        };
        if !host.contains(id) {
            self.remove(id);
        }
        changed
    }

    pub fn release(&mut self) -> Option<Released> {
        self.grab.take().map(|g| Released {
            element: g.element,
            node: g.node,
            button: g.button,
        })
    }

    /// Moves `id` (and nothing else) to a new paint position.
    pub fn set_z_order(&mut self, id: ElementId, position: ZPosition) -> Result<(), MoverError> {
        self.set_z_order_block(&[id], position)
    }

    /// Moves a block of ids together, keeping their relative order.
    pub fn set_z_order_block(&mut self, ids: &[ElementId], position: ZPosition) -> Result<(), MoverError> {
        for &id in ids {
            if !self.is_registered(id) {
                return Err(MoverError::UnknownElement(id));
            }
        }
        let block: Vec<ElementId> = self.registry.iter().copied().filter(|r| ids.contains(r)).collect();
        self.registry.retain(|r| !ids.contains(r));
        let at = match position {
            ZPosition::Top => self.registry.len(),
            ZPosition::Bottom => 0,
            ZPosition::Index(i) => i.min(self.registry.len()),
        };
        self.registry.splice(at..at, block);
        Ok(())
    }

    fn raise_block(&mut self, ids: Vec<ElementId>) {
        let ids: Vec<ElementId> = ids.into_iter().filter(|&i| self.is_registered(i)).collect();
        let _ = self.set_z_order_block(&ids, ZPosition::Top);
    }

    /// Drops the current grab without touching the registry.
    pub fn cancel_grab(&mut self) {
        self.grab = None;
    }

    /// Keeps only the ids for which `keep` holds.
    pub fn retain(&mut self, mut keep: impl FnMut(ElementId) -> bool) {
        self.registry.retain(|&id| keep(id));
        if self.grab.is_some_and(|g| !self.registry.contains(&g.element)) {
            self.grab = None;
        }
    }

    /// Replaces the registry wholesale (used when loading a scene).
    pub fn reset_registry(&mut self, ids: Vec<ElementId>) {
        self.registry = ids;
        self.grab = None;
    }
}

fn anchor_of(shape: &crate::cover::NodeShape) -> Point {
    use crate::cover::NodeShape;
    match shape {
        NodeShape::Circle { center, .. } => *center,
        NodeShape::Strip { a, b, .. } => a.midpoint(*b),
        NodeShape::Polygon { vertices } => crate::geometry::vertex_centroid(vertices),
    }
}
