use serde::{Deserialize, Serialize};

use super::format_value;
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::elements::{ElementError, Movable, NodeEffect};
use crate::geometry::{Point, Rect};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;
use crate::ElementId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

const TICK: f64 = 5.0;

/// Axis with ticks and labels. Length and value range mirror the owning
/// plotting area; position is free and follows the owner as a subordinate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScaleEl {
    pub owner: Option<ElementId>,
    pub orientation: Orientation,
    /// Left end of a horizontal axis, top end of a vertical one.
    pub origin: Point,
    pub length: f64,
    pub range: (f64, f64),
    pub ticks: usize,
}

impl ScaleEl {
    /// Tick positions and their values, from the low end of the range.
    pub fn tick_marks(&self) -> Vec<(Point, f64)> {
        let n = self.ticks.max(1);
        (0..=n)
            .map(|k| {
                let f = k as f64 / n as f64;
                let v = self.range.0 + f * (self.range.1 - self.range.0);
                let p = match self.orientation {
                    Orientation::Horizontal => Point::new(self.origin.x + f * self.length, self.origin.y),
                    Orientation::Vertical => Point::new(self.origin.x, self.origin.y + self.length - f * self.length),
                };
                (p, v)
            })
            .collect()
    }

    fn label_box(&self, p: Point, v: f64, style: &Style) -> Rect {
        let f = &style.font;
        let w = f.text_width(&format_value(v));
        match self.orientation {
            Orientation::Horizontal => Rect::new(p.x - w * 0.5, p.y + TICK + 1.0, w, f.line_height()),
            Orientation::Vertical => Rect::new(p.x - TICK - 2.0 - w, p.y - f.line_height() * 0.5, w, f.line_height()),
        }
    }
}

impl Movable for ScaleEl {
    fn cover(&self, _: &CoverConfig, style: &Style) -> Cover {
        let mut c = Cover::new(false);
        c.rect_body(&self.bounds(style), NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.origin = self.origin.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        if node != 0 {
            return Err(ElementError::InvalidNode(node));
        }
        self.translate(drag.dx, drag.dy);
        Ok(NodeEffect::from_changed(!drag.delta().is_zero()))
    }

    fn bounds(&self, style: &Style) -> Rect {
        let axis = match self.orientation {
            Orientation::Horizontal => Rect::new(self.origin.x, self.origin.y, self.length, TICK),
            Orientation::Vertical => Rect::new(self.origin.x - TICK, self.origin.y, TICK, self.length),
        };
        self.tick_marks()
            .into_iter()
            .fold(axis, |acc, (p, v)| acc.union(&self.label_box(p, v, style)))
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        let end = match self.orientation {
            Orientation::Horizontal => self.origin.translated(self.length, 0.0),
            Orientation::Vertical => self.origin.translated(0.0, self.length),
        };
        out.push(Primitive::line(self.origin, end, style.stroke, style.stroke_width));
        for (p, v) in self.tick_marks() {
            let tip = match self.orientation {
                Orientation::Horizontal => p.translated(0.0, TICK),
                Orientation::Vertical => p.translated(-TICK, 0.0),
            };
            out.push(Primitive::line(p, tip, style.stroke, style.stroke_width));
            let b = self.label_box(p, v, style);
            out.push(Primitive::text(
                b.top_left(),
                format_value(v),
                &style.font,
                style.text_color,
            ));
        }
    }
}
