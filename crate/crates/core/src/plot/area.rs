use serde::{Deserialize, Serialize};

use super::{range_ok, Viewport};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::elements::{
    box_handle_edges, push_box_handles, resize_edges, ElementError, Movable, NodeEffect, ResizeMode,
};
use crate::funcexpr::{Compiled, CurveSpec, Expr, ExprError};
use crate::geometry::{Point, Rect};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::{Color, Style};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Curve {
    pub spec: CurveSpec,
    pub color: Color,
    /// Fixed sample count; `None` adapts to the area width.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_count: Option<usize>,
}

/// Rectangle that plots any number of curves over a value window.
///
/// Cover layout: the eight box handles, then the body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlottingArea {
    pub rect: Rect,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub curves: Vec<Curve>,
    pub background: Color,
    pub min_size: f64,
}

/// Bisection steps used to tell a pole from a steep continuous stretch.
const POLE_BISECTIONS: usize = 60;

impl PlottingArea {
    pub fn new(rect: Rect, x_range: (f64, f64), y_range: (f64, f64)) -> Result<Self, ElementError> {
        if !range_ok(x_range) || !range_ok(y_range) {
            return Err(ElementError::InvalidShape(
                "plot ranges must be finite and non-empty".into(),
            ));
        }
        Ok(Self {
            rect,
            x_range,
            y_range,
            curves: Vec::new(),
            background: Color::WHITE,
            min_size: 20.0,
        })
    }

    pub fn viewport(&self) -> Viewport {
        Viewport {
            rect: self.rect,
            x_range: self.x_range,
            y_range: self.y_range,
        }
    }

    pub fn value_to_pixel(&self, v: Point) -> Point {
        self.viewport().value_to_pixel(v)
    }

    pub fn pixel_to_value(&self, p: Point) -> Point {
        self.viewport().pixel_to_value(p)
    }

    pub fn add_curve(&mut self, spec: CurveSpec, color: Color) -> Result<(), ExprError> {
        spec.compile()?;
        self.curves.push(Curve {
            spec,
            color,
            sample_count: None,
        });
        Ok(())
    }

    pub fn sample_count(&self, curve: &Curve) -> usize {
        curve
            .sample_count
            .unwrap_or_else(|| 64usize.max((2.0 * self.rect.width).ceil() as usize))
            .max(2)
    }

    /// Value-space samples of curve `i`; undefined evaluations give `None`.
    pub fn sample_curve(&self, i: usize) -> Result<Vec<Option<Point>>, ExprError> {
        let curve = &self.curves[i];
        let n = self.sample_count(curve);
        Ok(match curve.spec.compile()? {
            Compiled::YOfX(e) => uniform(self.x_range, n)
                .map(|x| e.eval(x).map(|y| Point::new(x, y)))
                .collect(),
            Compiled::Parametric { x, y, r_range } => uniform(r_range, n)
                .map(|r| Some(Point::new(x.eval(r)?, y.eval(r)?)))
                .collect(),
        })
    }

    /// Pixel polylines of curve `i`, split at gaps and poles and clipped to
    /// the area.
    pub fn curve_polylines(&self, i: usize) -> Result<Vec<Vec<Point>>, ExprError> {
        let samples = self.sample_curve(i)?;
        let explicit = match self.curves[i].spec.compile()? {
            Compiled::YOfX(e) => Some(e),
            Compiled::Parametric { .. } => None,
        };
        let vp = self.viewport();
        let mut out = Vec::new();
        let mut current: Vec<Point> = Vec::new();
        let flush = |current: &mut Vec<Point>, out: &mut Vec<Vec<Point>>| {
            if current.len() >= 2 {
                out.push(std::mem::take(current));
            } else {
                current.clear();
            }
        };
        for w in samples.windows(2) {
            let (Some(va), Some(vb)) = (w[0], w[1]) else {
                flush(&mut current, &mut out);
                continue;
            };
            if let Some(e) = &explicit {
                if is_pole(e, va, vb, self.y_range) {
                    flush(&mut current, &mut out);
                    continue;
                }
            }
            match clip_segment(vp.value_to_pixel(va), vp.value_to_pixel(vb), &self.rect) {
                Some((a, b, a_cut, b_cut)) => {
                    if a_cut || current.is_empty() {
                        flush(&mut current, &mut out);
                        current.push(a);
                    }
                    current.push(b);
                    if b_cut {
                        flush(&mut current, &mut out);
                    }
                }
                None => flush(&mut current, &mut out),
            }
        }
        flush(&mut current, &mut out);
        Ok(out)
    }
}

fn uniform(range: (f64, f64), n: usize) -> impl Iterator<Item = f64> {
    let (lo, hi) = range;
    (0..n).map(move |k| {
        if k + 1 == n {
            hi
        } else {
            lo + (hi - lo) * k as f64 / (n - 1) as f64
        }
    })
}

/// True when the step from `a` to `b` jumps across the whole window
/// through a singularity rather than a steep but continuous stretch.
fn is_pole(e: &Expr, a: Point, b: Point, y_range: (f64, f64)) -> bool {
    let (y0, y1) = y_range;
    let straddles = (a.y < y0 && b.y > y1) || (a.y > y1 && b.y < y0);
    if !straddles {
        return false;
    }
    let mid = (y0 + y1) * 0.5;
    let (mut lo, mut hi) = (a.x, b.x);
    let (mut flo, mut fhi) = (a.y, b.y);
    for _ in 0..POLE_BISECTIONS {
        let m = (lo + hi) * 0.5;
        let Some(fm) = e.eval(m) else {
            return true;
        };
        if (fm - mid).signum() == (flo - mid).signum() {
            lo = m;
            flo = fm;
        } else {
            hi = m;
            fhi = fm;
        }
    }
    (fhi - flo).abs() > y1 - y0
}

/// Liang-Barsky clip of segment `ab` to `r`. Returns the visible part and
/// whether each end was cut.
pub fn clip_segment(a: Point, b: Point, r: &Rect) -> Option<(Point, Point, bool, bool)> {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let mut t0: f64 = 0.0;
    let mut t1: f64 = 1.0;
    let checks = [
        (-dx, a.x - r.left),
        (dx, r.right() - a.x),
        (-dy, a.y - r.top),
        (dy, r.bottom() - a.y),
    ];
    for (p, q) in checks {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let t = q / p;
            if p < 0.0 {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
        }
    }
    if t0 > t1 {
        return None;
    }
    let at = |t: f64| {
        if t == 0.0 {
            a
        } else if t == 1.0 {
            b
        } else {
            Point::new(a.x + t * dx, a.y + t * dy)
        }
    };
    Some((at(t0), at(t1), t0 > 0.0, t1 < 1.0))
}

impl Movable for PlottingArea {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(false);
        push_box_handles(&mut c, &self.rect, cfg);
        c.rect_body(&self.rect, NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        if let Some(edges) = box_handle_edges(node) {
            let before = self.rect;
            self.rect = resize_edges(&self.rect, edges, drag.delta(), ResizeMode::Free, 1.0, self.min_size);
            return Ok(NodeEffect::from_changed(self.rect != before));
        }
        if node == 8 {
            self.translate(drag.dx, drag.dy);
            return Ok(NodeEffect::from_changed(!drag.delta().is_zero()));
        }
        Err(ElementError::InvalidNode(node))
    }

    fn bounds(&self, _: &Style) -> Rect {
        self.rect
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::rect(
            &self.rect,
            self.background,
            style.stroke,
            style.stroke_width,
        ));
        for (i, c) in self.curves.iter().enumerate() {
            for line in self.curve_polylines(i).unwrap_or_default() {
                out.push(Primitive::Polyline {
                    points: line,
                    stroke: c.color,
                    stroke_width: 1.5,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn area() -> PlottingArea {
        PlottingArea::new(Rect::new(0.0, 0.0, 100.0, 100.0), (0.0, 10.0), (-1.0, 1.0)).unwrap()
    }

    #[test]
    fn affine_maps() {
        let a = area();
        assert_eq!(a.value_to_pixel(Point::new(5.0, 0.0)), Point::new(50.0, 50.0));
        assert_eq!(a.value_to_pixel(Point::new(0.0, 1.0)), Point::new(0.0, 0.0));
        assert_eq!(a.pixel_to_value(Point::new(100.0, 100.0)), Point::new(10.0, -1.0));
    }

    #[test]
    fn samples_and_gaps() {
        let mut a = PlottingArea::new(Rect::new(0.0, 0.0, 100.0, 100.0), (0.0, 1.0), (0.0, 1.0)).unwrap();
        a.add_curve(CurveSpec::y_of_x("x"), Color::BLACK).unwrap();
        a.curves[0].sample_count = Some(3);
        let ys: Vec<f64> = a.sample_curve(0).unwrap().into_iter().map(|p| p.unwrap().y).collect();
        assert_eq!(ys, vec![0.0, 0.5, 1.0]);

        let mut b = PlottingArea::new(Rect::new(0.0, 0.0, 100.0, 100.0), (-1.0, 1.0), (-5.0, 5.0)).unwrap();
        b.add_curve(CurveSpec::y_of_x("ln(x)"), Color::BLACK).unwrap();
        let s = b.sample_curve(0).unwrap();
        let n = s.len();
        for (k, p) in s.iter().enumerate() {
            let x = -1.0 + 2.0 * k as f64 / (n - 1) as f64;
            assert_eq!(p.is_some(), x > 0.0, "x={x}");
        }
    }

    #[test]
    fn parametric_circle_has_unit_radius() {
        let mut a = PlottingArea::new(Rect::new(0.0, 0.0, 100.0, 100.0), (-2.0, 2.0), (-2.0, 2.0)).unwrap();
        let spec = CurveSpec::Parametric {
            x: "cos(r)".into(),
            y: "sin(r)".into(),
            r_range: (0.0, std::f64::consts::TAU),
        };
        a.add_curve(spec, Color::BLACK).unwrap();
        for p in a.sample_curve(0).unwrap() {
            let p = p.unwrap();
            assert!((p.x.hypot(p.y) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn tangent_splits_at_poles() {
        let mut a = PlottingArea::new(Rect::new(0.0, 0.0, 200.0, 100.0), (0.0, 3.0), (-10.0, 10.0)).unwrap();
        a.add_curve(CurveSpec::y_of_x("tg(x)"), Color::BLACK).unwrap();
        let lines = a.curve_polylines(0).unwrap();
        assert_eq!(lines.len(), 2);
        let mut steep = PlottingArea::new(Rect::new(0.0, 0.0, 200.0, 100.0), (-1.0, 1.0), (-1.0, 1.0)).unwrap();
        steep.add_curve(CurveSpec::y_of_x("1000*x"), Color::BLACK).unwrap();
        steep.curves[0].sample_count = Some(4);
        assert_eq!(steep.curve_polylines(0).unwrap().len(), 1);
        for l in lines.iter().flatten() {
            assert!(a.rect.contains(*l));
        }
    }

    #[test]
    fn clipping() {
        let r = Rect::new(0.0, 0.0, 10.0, 10.0);
        let (a, b, ac, bc) = clip_segment(Point::new(-5.0, 5.0), Point::new(5.0, 5.0), &r).unwrap();
        assert_eq!(
            (a, b, ac, bc),
            (Point::new(0.0, 5.0), Point::new(5.0, 5.0), true, false)
        );
        assert!(clip_segment(Point::new(-5.0, -5.0), Point::new(-1.0, 20.0), &r).is_none());
    }
}
