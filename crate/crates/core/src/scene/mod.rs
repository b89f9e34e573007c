//! The scene: elements, groups, the mover that supervises them, and the
//! bookkeeping that keeps groups consistent after every event.

mod check;
mod commands;
mod protocol;
mod render;
mod replay;
mod script;
mod svg;

pub use check::{Violation, COVER_COMPLETENESS};
pub use commands::COMMANDS;
pub use protocol::{serve_stream, Inbound, InboundBody, Outbound, Session};
pub use replay::{replay, replay_text, ReplayError, ReplayReport};
pub use script::{Event, Script, ScriptError};
pub use svg::to_svg;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::controls_groups::{Group, GroupKind};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::elements::{
    box_handle_edges, push_box_handles, resize_edges, Element, ElementError, NodeEffect, PolygonEl, ResizeMode, Shape,
};
use crate::funcexpr::ExprError;
use crate::geometry::{Point, Rect};
use crate::mover::{Drag, Mover, MoverError, MoverHost};
use crate::plot::Orientation;
use crate::style::Style;
use crate::ElementId;

/// A plot's frame and its x and y value ranges.
type PlotFrame = (Rect, (f64, f64), (f64, f64));

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SceneSettings {
    pub handle_radius: f64,
    pub strip_half_width: f64,
    pub raise_on_catch: bool,
}

impl Default for SceneSettings {
    fn default() -> Self {
        let cfg = CoverConfig::default();
        Self {
            handle_radius: cfg.handle_radius,
            strip_half_width: cfg.strip_half_width,
            raise_on_catch: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SceneError {
    #[error(transparent)]
    Mover(#[from] MoverError),
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error("expression: {0}")]
    Expr(#[from] ExprError),
    #[error("no element or group {0}")]
    UnknownId(ElementId),
    #[error("{id} is a {found}, expected {expected}")]
    WrongKind {
        id: ElementId,
        found: &'static str,
        expected: &'static str,
    },
    #[error("{0} already belongs to group {1}")]
    AlreadyGrouped(ElementId, ElementId),
    #[error("{0}")]
    Command(String),
    #[error("{0}")]
    Sequence(String),
}

#[derive(Debug, Clone, Default)]
pub struct Scene {
    elements: BTreeMap<ElementId, Element>,
    groups: BTreeMap<ElementId, Group>,
    mover: Mover,
    settings: SceneSettings,
    pointer: Option<Point>,
    pressed: bool,
}

impl Scene {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn settings(&self) -> &SceneSettings {
        &self.settings
    }

    pub fn set_settings(&mut self, settings: SceneSettings) {
        self.mover.raise_on_catch = settings.raise_on_catch;
        self.settings = settings;
    }

    pub fn cover_config(&self) -> CoverConfig {
        CoverConfig {
            handle_radius: self.settings.handle_radius,
            strip_half_width: self.settings.strip_half_width,
        }
    }

    pub fn mover(&self) -> &Mover {
        &self.mover
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.values()
    }

    pub fn groups(&self) -> impl Iterator<Item = &Group> {
        self.groups.values()
    }

    pub fn element(&self, id: ElementId) -> Option<&Element> {
        self.elements.get(&id)
    }

    /// Direct access for programmatic edits. Call [`Scene::refresh`]
    /// afterwards so dependent groups catch up.
    pub fn element_mut(&mut self, id: ElementId) -> Option<&mut Element> {
        self.elements.get_mut(&id)
    }

    pub fn group(&self, id: ElementId) -> Option<&Group> {
        self.groups.get(&id)
    }

    pub fn group_mut(&mut self, id: ElementId) -> Option<&mut Group> {
        self.groups.get_mut(&id)
    }

    pub fn contains_id(&self, id: ElementId) -> bool {
        self.elements.contains_key(&id) || self.groups.contains_key(&id)
    }

    pub fn next_id(&self) -> ElementId {
        let max = self
            .elements
            .keys()
            .chain(self.groups.keys())
            .map(|id| id.0)
            .max()
            .unwrap_or(0);
        ElementId(max + 1)
    }

    pub fn pointer(&self) -> Option<Point> {
        self.pointer
    }

    pub fn is_pressed(&self) -> bool {
        self.pressed
    }

    /// Adds an element on top of the paint order.
    pub fn add_element(&mut self, shape: Shape, style: Style) -> ElementId {
        let id = self.next_id();
        self.elements.insert(id, Element::new(id, shape, style));
        self.mover.add(id).expect("fresh ids are unregistered");
        self.refresh();
        id
    }

    /// Adds a group over existing, ungrouped members. Members of fixed and
    /// dynamic groups leave the registry; registered groups enter it just
    /// below their lowest member.
    pub fn add_group(&mut self, kind: GroupKind) -> Result<ElementId, SceneError> {
        let id = self.next_id();
        let mut group = Group::new(id, kind);
        let children = group.children();
        for (i, &c) in children.iter().enumerate() {
            if !self.contains_id(c) {
                return Err(SceneError::UnknownId(c));
            }
            if let Some(p) = self.parent_of(c) {
                return Err(SceneError::AlreadyGrouped(c, p));
            }
            if children[..i].contains(&c) {
                return Err(SceneError::Command(format!("{c} listed twice")));
            }
        }
        match &mut group.kind {
            GroupKind::Weld(w) => {
                self.expect_kind(w.base, "rect")?;
                self.expect_kind(w.roof, "polygon")?;
            }
            GroupKind::Dominant(_) => {
                for &c in &children {
                    if !self.elements.contains_key(&c) {
                        return Err(SceneError::WrongKind {
                            id: c,
                            found: "group",
                            expected: "element",
                        });
                    }
                }
            }
            GroupKind::Dynamic(d) => {
                let frame = d.frame;
                if !(frame.width > 0.0 && frame.height > 0.0) {
                    return Err(SceneError::Command(
                        "dynamic group frame must have positive size".into(),
                    ));
                }
                for c in &mut d.children {
                    let a = self.anchor(c.id).unwrap_or(frame.top_left());
                    c.fx = (a.x - frame.left) / frame.width;
                    c.fy = (a.y - frame.top) / frame.height;
                }
            }
            _ => {}
        }
        let lowest = children
            .iter()
            .flat_map(|&c| self.z_members(c))
            .filter_map(|m| self.mover.registry().iter().position(|&r| r == m))
            .min();
        if !group.children_registered() {
            for &c in &children {
                for m in self.z_members(c) {
                    self.mover.remove(m);
                }
            }
        }
        let registered = group.is_registered();
        let dominant = matches!(group.kind, GroupKind::Dominant(_));
        self.groups.insert(id, group);
        if dominant {
            self.sync_dominant_offsets(None);
        }
        if registered {
            self.mover.add(id)?;
            if let Some(i) = lowest {
                self.mover.set_z_order(id, crate::mover::ZPosition::Index(i))?;
            }
        }
        self.refresh();
        Ok(id)
    }

    fn expect_kind(&self, id: ElementId, expected: &'static str) -> Result<(), SceneError> {
        match self.elements.get(&id) {
            Some(e) if e.shape.kind() == expected => Ok(()),
            Some(e) => Err(SceneError::WrongKind {
                id,
                found: e.shape.kind(),
                expected,
            }),
            None => Err(SceneError::WrongKind {
                id,
                found: "group",
                expected,
            }),
        }
    }

    pub fn parent_of(&self, id: ElementId) -> Option<ElementId> {
        self.groups.values().find(|g| g.children().contains(&id)).map(|g| g.id)
    }

    /// Whether `id` belongs in the mover registry: everything except
    /// descendants of fixed and dynamic groups, and groups that never
    /// register.
    pub fn is_registrable(&self, id: ElementId) -> bool {
        let own = match self.groups.get(&id) {
            Some(g) => g.is_registered(),
            None => self.elements.contains_key(&id),
        };
        let mut cur = id;
        let mut hops = 0;
        while let Some(p) = self.parent_of(cur) {
            if self.groups.get(&p).is_some_and(|g| !g.children_registered()) || hops > self.groups.len() {
                return false;
            }
            cur = p;
            hops += 1;
        }
        own
    }

    /// `id` and its registrable descendants.
    fn z_members(&self, id: ElementId) -> Vec<ElementId> {
        let mut out = Vec::new();
        self.collect_z(id, &mut out);
        out
    }

    fn collect_z(&self, id: ElementId, out: &mut Vec<ElementId>) {
        if self.is_registrable(id) {
            out.push(id);
        }
        if let Some(g) = self.groups.get(&id) {
            if g.children_registered() {
                for c in g.children() {
                    self.collect_z(c, out);
                }
            }
        }
    }

    /// `id` followed by every descendant, groups included.
    pub fn subtree(&self, id: ElementId) -> Vec<ElementId> {
        let mut out = vec![id];
        if let Some(g) = self.groups.get(&id) {
            for c in g.children() {
                out.extend(self.subtree(c));
            }
        }
        out
    }

    fn own_visible(&self, id: ElementId) -> bool {
        match (self.elements.get(&id), self.groups.get(&id)) {
            (Some(e), _) => e.visible,
            (_, Some(g)) => g.visible,
            _ => false,
        }
    }

    /// Visible itself and through every enclosing group.
    pub fn is_effectively_visible(&self, id: ElementId) -> bool {
        self.own_visible(id) && self.parent_of(id).is_none_or(|p| self.is_effectively_visible(p))
    }

    /// Screen bounds of a visible item; `None` when hidden or empty.
    pub fn item_bounds(&self, id: ElementId) -> Option<Rect> {
        if !self.own_visible(id) {
            return None;
        }
        if let Some(e) = self.elements.get(&id) {
            return Some(e.shape.bounds(&e.style));
        }
        let g = self.groups.get(&id)?;
        match &g.kind {
            GroupKind::Elastic(e) => self.union_of(&e.children).map(|_| e.frame),
            GroupKind::Dynamic(d) => Some(d.frame),
            _ => self.union_of(&g.children()),
        }
    }

    fn union_of(&self, ids: &[ElementId]) -> Option<Rect> {
        Rect::enclosing(ids.iter().filter_map(|&c| self.item_bounds(c)))
    }

    /// Bounds regardless of visibility.
    fn raw_bounds(&self, id: ElementId) -> Option<Rect> {
        if let Some(e) = self.elements.get(&id) {
            return Some(e.shape.bounds(&e.style));
        }
        let g = self.groups.get(&id)?;
        match &g.kind {
            GroupKind::Elastic(e) => Some(e.frame),
            GroupKind::Dynamic(d) => Some(d.frame),
            _ => Rect::enclosing(g.children().iter().filter_map(|&c| self.raw_bounds(c))),
        }
    }

    /// Reference point that group members keep offsets from: the origin of
    /// scales, the text position of comments, otherwise the bounds top-left.
    pub fn anchor(&self, id: ElementId) -> Option<Point> {
        match self.elements.get(&id).map(|e| &e.shape) {
            Some(Shape::Scale(s)) => Some(s.origin),
            Some(Shape::Comment(c)) => Some(c.position),
            _ => self.raw_bounds(id).map(|r| r.top_left()),
        }
    }

    /// Translates an element, or every member of a group, by exactly
    /// `(dx, dy)`.
    pub fn translate_item(&mut self, id: ElementId, dx: f64, dy: f64) {
        if let Some(e) = self.elements.get_mut(&id) {
            e.shape.move_whole(dx, dy);
            return;
        }
        let Some(g) = self.groups.get_mut(&id) else { return };
        match &mut g.kind {
            GroupKind::Elastic(e) => e.frame = e.frame.translated(dx, dy),
            GroupKind::Dynamic(d) => d.frame = d.frame.translated(dx, dy),
            _ => {}
        }
        for c in g.children() {
            self.translate_item(c, dx, dy);
        }
    }

    fn weld_of(&self, id: ElementId) -> Option<ElementId> {
        let p = self.parent_of(id)?;
        matches!(self.groups.get(&p)?.kind, GroupKind::Weld(_)).then_some(p)
    }

    fn follow_dominant(&mut self, id: ElementId, dx: f64, dy: f64) {
        let subs: Vec<ElementId> = self
            .groups
            .values()
            .filter_map(|g| match &g.kind {
                GroupKind::Dominant(d) if d.dominant == id => Some(d.subordinates.iter().map(|s| s.id)),
                _ => None,
            })
            .flatten()
            .collect();
        for s in subs {
            self.translate_item(s, dx, dy);
        }
    }

    /// Places dynamic-group members at their stored frame fractions.
    fn place_dynamic_children(&mut self, id: ElementId) {
        let Some(GroupKind::Dynamic(d)) = self.groups.get(&id).map(|g| g.kind.clone()) else {
            return;
        };
        for c in d.children {
            if let Some(a) = self.anchor(c.id) {
                let tx = d.frame.left + c.fx * d.frame.width;
                let ty = d.frame.top + c.fy * d.frame.height;
                self.translate_item(c.id, tx - a.x, ty - a.y);
            }
        }
    }

    /// Brings every derived quantity up to date: scale extents, welded
    /// roofs, dominant offsets, elastic frames and border order.
    pub fn refresh(&mut self) {
        self.sync_scales();
        self.sync_welds();
        self.sync_elastic_frames();
        for e in self.elements.values_mut() {
            if let Shape::AreaUnderCurve(a) = &mut e.shape {
                a.normalize();
            }
        }
    }

    fn sync_scales(&mut self) {
        let plots: BTreeMap<ElementId, PlotFrame> = self
            .elements
            .values()
            .filter_map(|e| match &e.shape {
                Shape::Plot(p) => Some((e.id, (p.rect, p.x_range, p.y_range))),
                _ => None,
            })
            .collect();
        for e in self.elements.values_mut() {
            let Shape::Scale(s) = &mut e.shape else { continue };
            let Some((rect, xr, yr)) = s.owner.and_then(|o| plots.get(&o)) else {
                continue;
            };
            (s.length, s.range) = match s.orientation {
                Orientation::Horizontal => (rect.width, *xr),
                Orientation::Vertical => (rect.height, *yr),
            };
        }
    }

    fn sync_welds(&mut self) {
        let welds: Vec<_> = self
            .groups
            .values()
            .filter_map(|g| match g.kind {
                GroupKind::Weld(w) => Some(w),
                _ => None,
            })
            .collect();
        for w in welds {
            let Some(Shape::Rect(base)) = self.elements.get(&w.base).map(|e| &e.shape) else {
                continue;
            };
            let [nw, ne, _, _] = base.corners();
            if let Some(Shape::Polygon(roof)) = self.elements.get_mut(&w.roof).map(|e| &mut e.shape) {
                weld_roof(roof, nw, ne);
            }
        }
    }

    /// Recomputes stored subordinate offsets. Only needed when a
    /// subordinate moved on its own or after loading; dominant moves carry
    /// subordinates along and leave offsets untouched.
    pub(crate) fn sync_dominant_offsets(&mut self, only: Option<ElementId>) {
        let ids: Vec<ElementId> = self
            .groups
            .values()
            .filter(|g| match &g.kind {
                GroupKind::Dominant(d) => only.is_none_or(|o| d.subordinates.iter().any(|s| s.id == o)),
                _ => false,
            })
            .map(|g| g.id)
            .collect();
        for gid in ids {
            let GroupKind::Dominant(d) = &self.groups[&gid].kind else {
                continue;
            };
            let Some(base) = self.anchor(d.dominant) else { continue };
            let offsets: Vec<_> = d
                .subordinates
                .iter()
                .map(|s| self.anchor(s.id).map(|a| a - base).unwrap_or(s.offset))
                .collect();
            if let GroupKind::Dominant(d) = &mut self.groups.get_mut(&gid).expect("listed").kind {
                for (s, o) in d.subordinates.iter_mut().zip(offsets) {
                    if only.is_none_or(|x| x == s.id) {
                        s.offset = o;
                    }
                }
            }
        }
    }

    fn depth(&self, id: ElementId) -> usize {
        let mut d = 0;
        let mut cur = id;
        while let Some(p) = self.parent_of(cur) {
            d += 1;
            cur = p;
            if d > self.groups.len() {
                break;
            }
        }
        d
    }

    fn sync_elastic_frames(&mut self) {
        let mut elastic: Vec<(usize, ElementId)> = self
            .groups
            .values()
            .filter(|g| matches!(g.kind, GroupKind::Elastic(_)))
            .map(|g| (self.depth(g.id), g.id))
            .collect();
        elastic.sort_by(|a, b| b.cmp(a));
        for (_, gid) in elastic {
            let frame = self.elastic_frame(gid);
            if let (Some(frame), Some(GroupKind::Elastic(e))) = (frame, self.groups.get_mut(&gid).map(|g| &mut g.kind))
            {
                e.frame = frame;
            }
        }
    }

    /// The frame an elastic group must have given its members.
    pub fn elastic_frame(&self, id: ElementId) -> Option<Rect> {
        let GroupKind::Elastic(e) = &self.groups.get(&id)?.kind else {
            return None;
        };
        let bounds: Vec<Rect> = e.children.iter().filter_map(|&c| self.item_bounds(c)).collect();
        Some(e.frame_for(&bounds))
    }

    /// Deletes an item with everything that cannot live without it: a
    /// welded partner, or the subordinates of a dominant element.
    pub fn delete(&mut self, id: ElementId) -> Result<Vec<ElementId>, SceneError> {
        if !self.contains_id(id) {
            return Err(SceneError::UnknownId(id));
        }
        let target = match self.parent_of(id).and_then(|p| self.groups.get(&p)) {
            Some(g) => match &g.kind {
                GroupKind::Weld(_) => g.id,
                GroupKind::Dominant(d) if d.dominant == id => g.id,
                _ => id,
            },
            None => id,
        };
        let removed = self.subtree(target);
        if let Some(p) = self.parent_of(target) {
            self.groups.get_mut(&p).expect("parent exists").remove_child(target);
        }
        for r in &removed {
            self.elements.remove(r);
            self.groups.remove(r);
            self.mover.remove(*r);
        }
        for e in self.elements.values_mut() {
            if let Shape::Scale(s) = &mut e.shape {
                if s.owner.is_some_and(|o| removed.contains(&o)) {
                    s.owner = None;
                }
            }
        }
        self.refresh();
        Ok(removed)
    }

    /// Returns whether the flag changed. Hiding the held item drops the grab.
    pub fn set_visible(&mut self, id: ElementId, visible: bool) -> Result<bool, SceneError> {
        let flag = match (self.elements.get_mut(&id), self.groups.get_mut(&id)) {
            (Some(e), _) => &mut e.visible,
            (_, Some(g)) => &mut g.visible,
            _ => return Err(SceneError::UnknownId(id)),
        };
        let changed = *flag != visible;
        *flag = visible;
        if let Some(g) = self.mover.grab() {
            if !self.is_effectively_visible(g.element) {
                self.mover.cancel_grab();
            }
        }
        self.refresh();
        Ok(changed)
    }

    pub fn set_z_order(&mut self, id: ElementId, position: crate::mover::ZPosition) -> Result<(), SceneError> {
        if !self.mover.is_registered(id) {
            return Err(MoverError::UnknownElement(id).into());
        }
        let block = self.z_block(id);
        self.mover.set_z_order_block(&block, position)?;
        Ok(())
    }

    /// Applies one pointer event or command. Returns whether the scene
    /// visibly changed.
    pub fn apply_event(&mut self, event: &Event) -> Result<bool, SceneError> {
        match event {
            Event::Down { x, y, button } => {
                if self.pressed {
                    return Err(SceneError::Sequence("press while the pointer is already down".into()));
                }
                let p = finite_point(*x, *y)?;
                self.pressed = true;
                self.pointer = Some(p);
                let before = self.mover.registry().to_vec();
                let mut mover = std::mem::take(&mut self.mover);
                let caught = mover.catch(self, p, *button);
                self.mover = mover;
                caught?;
                Ok(self.mover.registry() != before.as_slice())
            }
            Event::Move { x, y } => {
                let p = finite_point(*x, *y)?;
                self.pointer = Some(p);
                let mut mover = std::mem::take(&mut self.mover);
                let changed = mover.move_to(self, p);
                self.mover = mover;
                self.prune_registry();
                Ok(changed)
            }
            Event::Up => {
                if !self.pressed {
                    return Err(SceneError::Sequence("release without a press".into()));
                }
                self.pressed = false;
                self.mover.release();
                Ok(false)
            }
            Event::Command { name, args } => self.apply_command(name, args),
        }
    }

    fn prune_registry(&mut self) {
        let gone: Vec<ElementId> = self
            .mover
            .registry()
            .iter()
            .copied()
            .filter(|&id| !self.contains_id(id))
            .collect();
        if !gone.is_empty() {
            self.mover.retain(|id| !gone.contains(&id));
        }
    }

    /// Cursor for the current pointer: the held node's, else whatever a
    /// press would catch.
    pub fn cursor(&self) -> CursorHint {
        let node_cursor = |id: ElementId, node: NodeId| {
            self.cover(id)
                .and_then(|c| c.node(node).map(|n| n.cursor))
                .unwrap_or(CursorHint::Default)
        };
        if let Some(g) = self.mover.grab() {
            return node_cursor(g.element, g.node);
        }
        let Some(p) = self.pointer else {
            return CursorHint::Default;
        };
        [crate::Button::Left, crate::Button::Right]
            .into_iter()
            .find_map(|b| self.mover.find_target(self, p, b))
            .map(|(id, node, _)| node_cursor(id, node))
            .unwrap_or(CursorHint::Default)
    }

    pub(crate) fn registry_mut(&mut self) -> &mut Mover {
        &mut self.mover
    }

    pub(crate) fn insert_raw(&mut self, elements: Vec<Element>, groups: Vec<Group>) {
        self.elements = elements.into_iter().map(|e| (e.id, e)).collect();
        self.groups = groups.into_iter().map(|g| (g.id, g)).collect();
    }
}

fn finite_point(x: f64, y: f64) -> Result<Point, SceneError> {
    if x.is_finite() && y.is_finite() {
        Ok(Point::new(x, y))
    } else {
        Err(SceneError::Command(format!(
            "pointer coordinates must be finite, got ({x}, {y})"
        )))
    }
}

/// Pins roof vertices 0 and 1 to the base top corners, stretching the rest
/// of the roof horizontally and shifting it vertically to match.
/// Whether a roof vertex sits on its base corner up to rounding. A house
/// moved as a unit translates both parts by the same deltas, which can
/// leave `left + width` one ulp away from the translated roof corner.
pub(crate) fn on_corner(v: Point, corner: Point) -> bool {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * (1.0 + b.abs());
    close(v.x, corner.x) && close(v.y, corner.y)
}

pub(crate) fn weld_roof(roof: &mut PolygonEl, nw: Point, ne: Point) {
    let (o0, o1) = (roof.vertices[0], roof.vertices[1]);
    if on_corner(o0, nw) && on_corner(o1, ne) {
        return;
    }
    let old_w = o1.x - o0.x;
    let k = if old_w != 0.0 { (ne.x - nw.x) / old_w } else { 1.0 };
    let dy = nw.y - o0.y;
    for (i, v) in roof.vertices.iter_mut().enumerate() {
        *v = match i {
            0 => nw,
            1 => ne,
            _ => Point::new(nw.x + (v.x - o0.x) * k, v.y + dy),
        };
    }
}

impl MoverHost for Scene {
    fn cover(&self, id: ElementId) -> Option<Cover> {
        if !self.is_effectively_visible(id) {
            return None;
        }
        let cfg = self.cover_config();
        if let Some(e) = self.elements.get(&id) {
            let mut c = e.shape.cover(&cfg, &e.style);
            if self.weld_of(id).is_some() {
                c.rotatable = false;
            }
            return Some(c);
        }
        let g = self.groups.get(&id)?;
        match &g.kind {
            GroupKind::Elastic(e) => Some(e.cover(&cfg)),
            GroupKind::Fixed(_) => {
                let mut c = Cover::new(false);
                c.rect_body(&self.item_bounds(id)?, NodeAction::MoveWhole, CursorHint::Move);
                Some(c)
            }
            GroupKind::Dynamic(d) => {
                let mut c = Cover::new(false);
                push_box_handles(&mut c, &d.frame, &cfg);
                c.rect_body(&d.frame, NodeAction::MoveWhole, CursorHint::Move);
                Some(c)
            }
            GroupKind::Dominant(_) | GroupKind::Weld(_) => None,
        }
    }

    fn move_whole(&mut self, id: ElementId, dx: f64, dy: f64) -> bool {
        if (dx == 0.0 && dy == 0.0) || !self.contains_id(id) {
            return false;
        }
        let unit = self.weld_of(id).unwrap_or(id);
        self.translate_item(unit, dx, dy);
        self.follow_dominant(id, dx, dy);
        self.sync_dominant_offsets(Some(id));
        self.refresh();
        true
    }

    fn move_node(&mut self, id: ElementId, node: NodeId, drag: &Drag) -> bool {
        let cfg = self.cover_config();
        if self.elements.contains_key(&id) {
            let before = self.anchor(id);
            let Element { shape, style, .. } = self.elements.get_mut(&id).expect("checked");
            match shape.move_node(node, drag, &cfg, style) {
                Ok(NodeEffect::Changed) => {
                    if let (Some(b), Some(a)) = (before, self.anchor(id)) {
                        let d = a - b;
                        if !d.is_zero() {
                            self.follow_dominant(id, d.dx, d.dy);
                        }
                    }
                    self.sync_dominant_offsets(Some(id));
                    self.refresh();
                    true
                }
                Ok(NodeEffect::Collapse) => self.delete(id).is_ok(),
                Ok(NodeEffect::Unchanged) | Err(_) => false,
            }
        } else if let Some(g) = self.groups.get_mut(&id) {
            let changed = match &mut g.kind {
                GroupKind::Elastic(e) => e.has_title() && node == 0 && e.drag_title(drag.delta()),
                GroupKind::Dynamic(d) => match box_handle_edges(node) {
                    Some(edges) => {
                        let r = resize_edges(&d.frame, edges, drag.delta(), ResizeMode::Free, 1.0, d.min_size);
                        let changed = r != d.frame;
                        d.frame = r;
                        changed
                    }
                    None => false,
                },
                _ => false,
            };
            if changed {
                self.place_dynamic_children(id);
                self.sync_dominant_offsets(None);
                self.refresh();
            }
            changed
        } else {
            false
        }
    }

    fn z_block(&self, id: ElementId) -> Vec<ElementId> {
        match self.weld_of(id) {
            Some(w) => self.z_members(w),
            None => self.z_members(id),
        }
    }

    fn contains(&self, id: ElementId) -> bool {
        self.contains_id(id)
    }
}
