use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::elements::{resize_edges, Edges, ElementError, Movable, NodeEffect, ResizeMode};
use crate::geometry::{Point, Rect};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::{Color, Style};

/// Where a press lands on a control's frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FrameZone {
    CornerNW,
    CornerNE,
    CornerSE,
    CornerSW,
    MidN,
    MidE,
    MidS,
    MidW,
    FrameBody,
    None,
}

const ZONES: [FrameZone; 8] = [
    FrameZone::CornerNW,
    FrameZone::CornerNE,
    FrameZone::CornerSE,
    FrameZone::CornerSW,
    FrameZone::MidN,
    FrameZone::MidE,
    FrameZone::MidS,
    FrameZone::MidW,
];

/// Placeholder control (button, textbox, list, label...). Moved and resized
/// only through its frame; presses inside fall through to whatever lies
/// beneath.
///
/// Cover layout: corner handles, mid-side handles, then the four frame
/// bands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ControlEl {
    pub rect: Rect,
    pub kind: String,
    pub caption: String,
    pub min_size: f64,
}

impl ControlEl {
    pub fn new(rect: Rect, kind: impl Into<String>, caption: impl Into<String>) -> Self {
        Self {
            rect,
            kind: kind.into(),
            caption: caption.into(),
            min_size: 8.0,
        }
    }

    pub fn frame_zone(&self, p: Point, cfg: &CoverConfig) -> FrameZone {
        match self.cover(cfg, &Style::default()).hit_test(p) {
            Some(i) if i < 8 => ZONES[i],
            Some(_) => FrameZone::FrameBody,
            None => FrameZone::None,
        }
    }
}

impl Movable for ControlEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(false);
        let r = &self.rect;
        let [nw, ne, se, sw] = r.corners();
        for (i, p) in [nw, ne, se, sw].into_iter().enumerate() {
            let cursor = if i % 2 == 0 {
                CursorHint::SizeNwse
            } else {
                CursorHint::SizeNesw
            };
            c.circle(p, cfg.handle_radius, NodeAction::Resize, cursor);
        }
        let mids = [nw.midpoint(ne), ne.midpoint(se), sw.midpoint(se), nw.midpoint(sw)];
        for (i, p) in mids.into_iter().enumerate() {
            let cursor = if i % 2 == 0 {
                CursorHint::SizeV
            } else {
                CursorHint::SizeH
            };
            c.circle(p, cfg.handle_radius, NodeAction::Resize, cursor);
        }
        let hw = cfg.strip_half_width;
        for (a, b) in [(nw, ne), (ne, se), (sw, se), (nw, sw)] {
            c.strip(a, b, hw, NodeAction::MoveWhole, CursorHint::Move);
        }
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let edges = match node {
            0..=3 => Edges::CORNERS[node],
            4..=7 => Edges::SIDES[node - 4],
            8..=11 => {
                self.translate(drag.dx, drag.dy);
                return Ok(NodeEffect::from_changed(!drag.delta().is_zero()));
            }
            n => return Err(ElementError::InvalidNode(n)),
        };
        let before = self.rect;
        self.rect = resize_edges(&self.rect, edges, drag.delta(), ResizeMode::Free, 1.0, self.min_size);
        Ok(NodeEffect::from_changed(self.rect != before))
    }

    fn bounds(&self, _: &Style) -> Rect {
        self.rect
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        if self.kind != "label" {
            let fill = if self.kind == "textbox" || self.kind == "listview" {
                Color::WHITE
            } else {
                style.fill
            };
            out.push(Primitive::rect(&self.rect, fill, style.stroke, style.stroke_width));
        }
        if !self.caption.is_empty() {
            let f = &style.font;
            let w = f.text_width(&self.caption);
            let c = self.rect.center();
            let left = if self.kind == "label" || self.kind == "textbox" {
                self.rect.left + 2.0
            } else {
                c.x - w * 0.5
            };
            out.push(Primitive::text(
                Point::new(left, c.y - f.size * 0.5),
                self.caption.clone(),
                f,
                style.text_color,
            ));
        }
    }
}
