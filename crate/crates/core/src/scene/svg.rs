use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use crate::geometry::{Point, Rect};
use crate::render::{Primitive, RenderList};
use crate::style::Color;

const PAD: f64 = 10.0;

fn paint(c: Option<Color>) -> String {
    match c {
        Some(c) if !c.is_transparent() => c.to_string(),
        _ => "none".to_string(),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn points_attr(ps: &[Point]) -> String {
    ps.iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn extent(list: &RenderList) -> Rect {
    let pts = list.items.iter().flat_map(|it| match &it.primitive {
        Primitive::Polygon { points, .. } | Primitive::Polyline { points, .. } => points.clone(),
        Primitive::CircleArc { center, radius, .. } => {
            vec![center.translated(-radius, -radius), center.translated(*radius, *radius)]
        }
        Primitive::Text {
            position, text, font, ..
        } => vec![
            position.translated(0.0, -font.size),
            position.translated(font.text_width(text), font.size * 0.25),
        ],
    });
    Rect::bounding(pts).unwrap_or_default().inflate(PAD)
}

/// Standalone SVG document for a render list.
pub fn to_svg(list: &RenderList) -> String {
    let b = extent(list);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        b.left, b.top, b.width, b.height, b.width, b.height
    );
    for it in &list.items {
        let id = it.element;
        match &it.primitive {
            Primitive::Polygon {
                points,
                fill,
                stroke,
                stroke_width,
            } => {
                let _ = writeln!(
                    s,
                    r#"  <polygon data-element="{id}" points="{}" fill="{}" stroke="{}" stroke-width="{stroke_width}"/>"#,
                    points_attr(points),
                    paint(*fill),
                    paint(*stroke)
                );
            }
            Primitive::Polyline {
                points,
                stroke,
                stroke_width,
            } => {
                let _ = writeln!(
                    s,
                    r#"  <polyline data-element="{id}" points="{}" fill="none" stroke="{}" stroke-width="{stroke_width}"/>"#,
                    points_attr(points),
                    paint(Some(*stroke))
                );
            }
            Primitive::CircleArc {
                center,
                radius,
                start,
                sweep,
                fill,
                stroke,
                stroke_width,
            } => {
                let (f, st) = (paint(*fill), paint(*stroke));
                if sweep.abs() >= TAU {
                    let _ = writeln!(
                        s,
                        r#"  <circle data-element="{id}" cx="{}" cy="{}" r="{radius}" fill="{f}" stroke="{st}" stroke-width="{stroke_width}"/>"#,
                        center.x, center.y
                    );
                } else {
                    let p0 = Point::new(center.x + radius * start.cos(), center.y + radius * start.sin());
                    let end = start + sweep;
                    let p1 = Point::new(center.x + radius * end.cos(), center.y + radius * end.sin());
                    let large = u8::from(sweep.abs() > PI);
                    let dir = u8::from(*sweep > 0.0);
                    let arc = format!("A {radius} {radius} 0 {large} {dir} {} {}", p1.x, p1.y);
                    let d = if fill.is_some() {
                        format!("M {} {} L {} {} {arc} Z", center.x, center.y, p0.x, p0.y)
                    } else {
                        format!("M {} {} {arc}", p0.x, p0.y)
                    };
                    let _ = writeln!(
                        s,
                        r#"  <path data-element="{id}" d="{d}" fill="{f}" stroke="{st}" stroke-width="{stroke_width}"/>"#
                    );
                }
            }
            Primitive::Text {
                position,
                text,
                font,
                color,
            } => {
                let weight = if font.bold { "bold" } else { "normal" };
                let _ = writeln!(
                    s,
                    r#"  <text data-element="{id}" x="{}" y="{}" font-family="{}" font-size="{}" font-weight="{weight}" fill="{}">{}</text>"#,
                    position.x,
                    position.y,
                    escape(&font.family),
                    font.size,
                    color,
                    escape(text)
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
