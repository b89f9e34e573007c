//! Render lists: ordered, renderer-agnostic drawing primitives.

use serde::{Deserialize, Serialize};

use crate::cover::CursorHint;
use crate::geometry::{Point, Rect};
use crate::style::{Color, Font};
use crate::ElementId;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Primitive {
    #[serde(rename_all = "camelCase")]
    Polygon {
        points: Vec<Point>,
        fill: Option<Color>,
        stroke: Option<Color>,
        stroke_width: f64,
    },
    #[serde(rename_all = "camelCase")]
    Polyline {
        points: Vec<Point>,
        stroke: Color,
        stroke_width: f64,
    },
    #[serde(rename_all = "camelCase")]
    CircleArc {
        center: Point,
        radius: f64,
        start: f64,
        sweep: f64,
        fill: Option<Color>,
        stroke: Option<Color>,
        stroke_width: f64,
    },
    Text {
        position: Point,
        text: String,
        font: Font,
        color: Color,
    },
}

impl Primitive {
    pub fn filled_polygon(points: Vec<Point>, fill: Color, stroke: Color, stroke_width: f64) -> Self {
        Primitive::Polygon {
            points,
            fill: (!fill.is_transparent()).then_some(fill),
            stroke: (!stroke.is_transparent() && stroke_width > 0.0).then_some(stroke),
            stroke_width,
        }
    }

    pub fn rect(r: &Rect, fill: Color, stroke: Color, stroke_width: f64) -> Self {
        Self::filled_polygon(r.corners().to_vec(), fill, stroke, stroke_width)
    }

    pub fn line(a: Point, b: Point, stroke: Color, stroke_width: f64) -> Self {
        Primitive::Polyline {
            points: vec![a, b],
            stroke,
            stroke_width,
        }
    }

    /// Text whose top-left corner sits at `top_left`.
    pub fn text(top_left: Point, text: impl Into<String>, font: &Font, color: Color) -> Self {
        Primitive::Text {
            position: Point::new(top_left.x, top_left.y + font.size),
            text: text.into(),
            font: font.clone(),
            color,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderItem {
    pub element: ElementId,
    #[serde(flatten)]
    pub primitive: Primitive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RenderList {
    pub items: Vec<RenderItem>,
    pub cursor: CursorHint,
}

impl RenderList {
    /// Distinct element ids in first-appearance order.
    pub fn element_order(&self) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = Vec::new();
        for it in &self.items {
            if out.last() != Some(&it.element) && !out.contains(&it.element) {
                out.push(it.element);
            }
        }
        out
    }
}
