use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::elements::{ElementError, Movable, NodeEffect};
use crate::geometry::{Point, Rect};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

/// Free text, movable by any point of its box. Font and color come from
/// the element style.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommentEl {
    /// Top-left corner of the text box.
    pub position: Point,
    pub text: String,
}

impl CommentEl {
    pub fn new(position: Point, text: impl Into<String>) -> Self {
        Self {
            position,
            text: text.into(),
        }
    }
}

impl Movable for CommentEl {
    fn cover(&self, _: &CoverConfig, style: &Style) -> Cover {
        let mut c = Cover::new(false);
        c.rect_body(&self.bounds(style), NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.position = self.position.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        if node != 0 {
            return Err(ElementError::InvalidNode(node));
        }
        self.translate(drag.dx, drag.dy);
        Ok(NodeEffect::from_changed(!drag.delta().is_zero()))
    }

    fn bounds(&self, style: &Style) -> Rect {
        Rect::new(
            self.position.x,
            self.position.y,
            style.font.text_width(&self.text),
            style.font.line_height(),
        )
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::text(
            self.position,
            self.text.clone(),
            &style.font,
            style.text_color,
        ));
    }
}
