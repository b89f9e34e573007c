use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction};
use crate::geometry::{Point, Rect, Vector};
use crate::render::Primitive;
use crate::style::{Color, Font};
use crate::ElementId;

/// A group record. Groups share the id space with elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Group {
    pub id: ElementId,
    pub visible: bool,
    #[serde(flatten)]
    pub kind: GroupKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum GroupKind {
    Elastic(ElasticGroup),
    Fixed(FixedGroup),
    Dominant(DominantGroup),
    Dynamic(GroupDyn),
    Weld(WeldGroup),
}

impl Group {
    pub fn new(id: ElementId, kind: GroupKind) -> Self {
        Self {
            id,
            visible: true,
            kind,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            GroupKind::Elastic(_) => "elastic",
            GroupKind::Fixed(_) => "fixed",
            GroupKind::Dominant(_) => "dominant",
            GroupKind::Dynamic(_) => "dynamic",
            GroupKind::Weld(_) => "weld",
        }
    }

    /// Direct members in their stored order.
    pub fn children(&self) -> Vec<ElementId> {
        match &self.kind {
            GroupKind::Elastic(g) => g.children.clone(),
            GroupKind::Fixed(g) => g.children.clone(),
            GroupKind::Dominant(g) => std::iter::once(g.dominant)
                .chain(g.subordinates.iter().map(|s| s.id))
                .collect(),
            GroupKind::Dynamic(g) => g.children.iter().map(|c| c.id).collect(),
            GroupKind::Weld(g) => vec![g.base, g.roof],
        }
    }

    /// Whether the group itself sits in the mover registry.
    pub fn is_registered(&self) -> bool {
        matches!(
            self.kind,
            GroupKind::Elastic(_) | GroupKind::Fixed(_) | GroupKind::Dynamic(_)
        )
    }

    /// Whether members are registered individually.
    pub fn children_registered(&self) -> bool {
        matches!(
            self.kind,
            GroupKind::Elastic(_) | GroupKind::Dominant(_) | GroupKind::Weld(_)
        )
    }

    /// Drops `id` from the member list. Returns true if it was a member.
    pub fn remove_child(&mut self, id: ElementId) -> bool {
        match &mut self.kind {
            GroupKind::Elastic(g) => remove_id(&mut g.children, id),
            GroupKind::Fixed(g) => remove_id(&mut g.children, id),
            GroupKind::Dominant(g) => {
                let before = g.subordinates.len();
                g.subordinates.retain(|s| s.id != id);
                before != g.subordinates.len() || g.dominant == id
            }
            GroupKind::Dynamic(g) => {
                let before = g.children.len();
                g.children.retain(|c| c.id != id);
                before != g.children.len()
            }
            GroupKind::Weld(g) => g.base == id || g.roof == id,
        }
    }
}

fn remove_id(v: &mut Vec<ElementId>, id: ElementId) -> bool {
    let before = v.len();
    v.retain(|&c| c != id);
    before != v.len()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Title {
    pub text: String,
    /// Anchor position along the top edge, 0 = left end, 1 = right end.
    pub t: f64,
    pub visible: bool,
}

/// Group whose frame always wraps the union of its visible members plus
/// a margin.
///
/// Cover layout: title (if shown), the four frame bands, then the frame
/// body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ElasticGroup {
    pub children: Vec<ElementId>,
    pub margin: f64,
    pub frame_visible: bool,
    pub title: Title,
    pub font: Font,
    pub color: Color,
    /// Whether restyling this group also restyles nested groups.
    pub spread: bool,
    pub frame: Rect,
}

pub const DEFAULT_MARGIN: f64 = 6.0;

impl ElasticGroup {
    pub fn new(children: Vec<ElementId>, title: impl Into<String>) -> Self {
        Self {
            children,
            margin: DEFAULT_MARGIN,
            frame_visible: true,
            title: Title {
                text: title.into(),
                t: 0.1,
                visible: true,
            },
            font: Font::default(),
            color: Color::rgb(0x20, 0x40, 0x80),
            spread: true,
            frame: Rect::default(),
        }
    }

    pub fn has_title(&self) -> bool {
        self.title.visible && !self.title.text.is_empty()
    }

    /// Title box: its anchor `left + t * width` on the top edge sits at the
    /// same fraction `t` of the text width.
    pub fn title_rect(&self) -> Rect {
        let w = self.font.text_width(&self.title.text);
        let h = self.font.line_height();
        let anchor = self.frame.left + self.title.t * self.frame.width;
        Rect::new(anchor - self.title.t * w, self.frame.top - h * 0.5, w, h)
    }

    pub fn title_anchor_x(&self) -> f64 {
        self.frame.left + self.title.t * self.frame.width
    }

    /// Sets the title fraction, clamped to [0, 1]. Returns true if it changed.
    pub fn move_title(&mut self, t: f64) -> bool {
        let t = if t.is_nan() { self.title.t } else { t.clamp(0.0, 1.0) };
        let changed = t != self.title.t;
        self.title.t = t;
        changed
    }

    /// Frame for the given visible member bounds. With nothing visible the
    /// frame shrinks to a zero-height band along its previous top edge.
    pub fn frame_for(&self, visible_bounds: &[Rect]) -> Rect {
        match Rect::enclosing(visible_bounds.iter().copied()) {
            Some(r) => r.inflate(self.margin),
            None => Rect::new(self.frame.left, self.frame.top, self.frame.width, 0.0),
        }
    }

    pub fn cover(&self, cfg: &CoverConfig) -> Cover {
        let mut c = Cover::new(false);
        if self.has_title() {
            c.rect_body(&self.title_rect(), NodeAction::Reconfigure, CursorHint::SizeH);
        }
        let [nw, ne, se, sw] = self.frame.corners();
        for (a, b) in [(nw, ne), (ne, se), (sw, se), (nw, sw)] {
            c.strip(a, b, cfg.strip_half_width, NodeAction::MoveWhole, CursorHint::Move);
        }
        if self.frame.height > 0.0 {
            c.rect_body(&self.frame, NodeAction::MoveWhole, CursorHint::Move);
        }
        c
    }

    /// Title drags slide the anchor by the horizontal pointer delta.
    pub fn drag_title(&mut self, delta: Vector) -> bool {
        if self.frame.width <= 0.0 {
            return false;
        }
        self.move_title(self.title.t + delta.dx / self.frame.width)
    }

    pub fn draw(&self, out: &mut Vec<Primitive>) {
        if self.frame_visible {
            out.push(Primitive::rect(&self.frame, Color::TRANSPARENT, self.color, 1.0));
        }
        if self.has_title() {
            let r = self.title_rect();
            out.push(Primitive::rect(&r, Color::WHITE, Color::TRANSPARENT, 0.0));
            let top = r.top + (r.height - self.font.size) * 0.5;
            out.push(Primitive::text(
                Point::new(r.left, top),
                self.title.text.clone(),
                &self.font,
                self.color,
            ));
        }
    }
}

/// Members keep their relative positions; the whole set moves as one by
/// any inner point and cannot be resized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FixedGroup {
    pub children: Vec<ElementId>,
    pub frame_visible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Subordinate {
    pub id: ElementId,
    /// Subordinate anchor minus dominant anchor.
    pub offset: Vector,
}

/// Subordinates follow every move and resize of the dominant element but
/// move on their own without disturbing anyone else.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominantGroup {
    pub dominant: ElementId,
    pub subordinates: Vec<Subordinate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DynChild {
    pub id: ElementId,
    /// Top-left anchor of the member as fractions of the frame size.
    pub fx: f64,
    pub fy: f64,
}

/// Frame with designer-fixed member placement: resizing the frame
/// repositions members by their stored fractions.
///
/// Cover layout: the eight box handles, then the frame body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupDyn {
    pub frame: Rect,
    pub children: Vec<DynChild>,
    pub min_size: f64,
}

/// A house: roof polygon whose base edge is welded to the top edge of the
/// body rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeldGroup {
    pub base: ElementId,
    pub roof: ElementId,
}
