use serde::{Deserialize, Serialize};

use super::{clip_segment, integrate, range_ok, trapezoid, Curve, IntegrationError, PlottingArea, Viewport};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::elements::{
    box_handle_edges, push_box_handles, resize_edges, ElementError, Movable, NodeEffect, ResizeMode,
};
use crate::funcexpr::{parse, CurveSpec, Expr, ExprError};
use crate::geometry::{Point, Rect, Vector};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::{Color, Style};

/// Smallest separation kept between the two integration borders.
pub const BORDER_GAP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum AreaFunction {
    Formula {
        text: String,
    },
    /// Editable piecewise-linear function, joints in value space sorted by x.
    Polyline {
        joints: Vec<Point>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Border {
    A,
    B,
}

impl std::str::FromStr for Border {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a" => Ok(Border::A),
            "b" => Ok(Border::B),
            _ => Err(format!("border must be `a` or `b`, got `{s}`")),
        }
    }
}

/// Plot of one function with the area between the movable borders `a` and
/// `b` shaded and its integral shown.
///
/// Cover layout: polyline joints (if any), border `a`, border `b`, the
/// eight box handles, then the body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AreaUnderCurve {
    pub rect: Rect,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub function: AreaFunction,
    pub a: f64,
    pub b: f64,
    pub fill: Color,
    pub curve_color: Color,
    pub min_size: f64,
}

impl AreaUnderCurve {
    pub fn new(
        rect: Rect,
        x_range: (f64, f64),
        y_range: (f64, f64),
        function: AreaFunction,
        a: f64,
        b: f64,
    ) -> Result<Self, ElementError> {
        if !range_ok(x_range) || !range_ok(y_range) || !(a < b) {
            return Err(ElementError::InvalidShape("need finite ranges and a < b".into()));
        }
        let auc = Self {
            rect,
            x_range,
            y_range,
            function,
            a,
            b,
            fill: Color::rgb(0xa0, 0xc8, 0xf0),
            curve_color: Color::rgb(0xc0, 0x20, 0x20),
            min_size: 40.0,
        };
        auc.validate()?;
        Ok(auc)
    }

    pub fn validate(&self) -> Result<(), ElementError> {
        match &self.function {
            AreaFunction::Formula { text } => {
                CurveSpec::y_of_x(text.clone())
                    .compile()
                    .map_err(|e| ElementError::InvalidShape(e.to_string()))?;
            }
            AreaFunction::Polyline { joints } => {
                if joints.len() < 2 || joints.windows(2).any(|w| !(w[0].x < w[1].x)) {
                    return Err(ElementError::InvalidShape("polyline joints need increasing x".into()));
                }
            }
        }
        Ok(())
    }

    pub fn viewport(&self) -> Viewport {
        Viewport {
            rect: self.rect,
            x_range: self.x_range,
            y_range: self.y_range,
        }
    }

    fn formula(&self) -> Option<Expr> {
        match &self.function {
            AreaFunction::Formula { text } => parse(text).ok(),
            AreaFunction::Polyline { .. } => None,
        }
    }

    pub fn set_formula(&mut self, text: &str) -> Result<(), ExprError> {
        CurveSpec::y_of_x(text).compile()?;
        self.function = AreaFunction::Formula { text: text.into() };
        Ok(())
    }

    /// Function value at `x`; `None` where undefined.
    pub fn value(&self, x: f64) -> Option<f64> {
        match &self.function {
            AreaFunction::Formula { .. } => self.formula()?.eval(x),
            AreaFunction::Polyline { joints } => {
                let i = joints.windows(2).position(|w| w[0].x <= x && x <= w[1].x)?;
                let (p, q) = (joints[i], joints[i + 1]);
                Some(if x == q.x {
                    q.y
                } else {
                    p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)
                })
            }
        }
    }

    pub fn integral(&self) -> Result<f64, IntegrationError> {
        match &self.function {
            AreaFunction::Formula { .. } => {
                let e = self.formula().ok_or(IntegrationError::Undefined(self.a))?;
                integrate(|x| e.eval(x), self.a, self.b)
            }
            AreaFunction::Polyline { joints } => trapezoid(joints, self.a, self.b),
        }
    }

    /// Sets one border, never letting it reach the other. Returns whether
    /// the border moved.
    pub fn move_border(&mut self, which: Border, value: f64) -> bool {
        if !value.is_finite() {
            return false;
        }
        let slot = match which {
            Border::A => {
                let v = value.min(self.b - BORDER_GAP);
                (&mut self.a, v)
            }
            Border::B => {
                let v = value.max(self.a + BORDER_GAP);
                (&mut self.b, v)
            }
        };
        let changed = *slot.0 != slot.1;
        *slot.0 = slot.1;
        changed
    }

    /// Restores `a < b` if rounding collapsed the gap.
    pub fn normalize(&mut self) {
        if !(self.a < self.b) {
            self.a = self.b - BORDER_GAP;
        }
    }

    fn joints(&self) -> &[Point] {
        match &self.function {
            AreaFunction::Polyline { joints } => joints,
            AreaFunction::Formula { .. } => &[],
        }
    }

    /// Inserts a joint at pixel `p` after joint `segment`.
    pub fn insert_joint_at_pixel(&mut self, segment: usize, p: Point) -> Result<(), ElementError> {
        let v = self.viewport().pixel_to_value(p);
        let AreaFunction::Polyline { joints } = &mut self.function else {
            return Err(ElementError::Unsupported {
                op: "insertJoint",
                kind: "formula area",
            });
        };
        if segment + 1 >= joints.len() {
            return Err(ElementError::InvalidIndex {
                index: segment,
                len: joints.len() - 1,
            });
        }
        if !(joints[segment].x < v.x && v.x < joints[segment + 1].x) {
            return Err(ElementError::InvalidShape(
                "new joint must lie between its neighbors in x".into(),
            ));
        }
        joints.insert(segment + 1, v);
        Ok(())
    }

    pub fn delete_joint(&mut self, i: usize) -> Result<(), ElementError> {
        let AreaFunction::Polyline { joints } = &mut self.function else {
            return Err(ElementError::Unsupported {
                op: "deleteJoint",
                kind: "formula area",
            });
        };
        if i >= joints.len() {
            return Err(ElementError::InvalidIndex {
                index: i,
                len: joints.len(),
            });
        }
        if joints.len() <= 2 {
            return Err(ElementError::TooFewJoints);
        }
        joints.remove(i);
        Ok(())
    }

    fn border_line(&self, x: f64) -> (Point, Point) {
        let px = self.viewport().value_to_pixel(Point::new(x, 0.0)).x;
        (Point::new(px, self.rect.top), Point::new(px, self.rect.bottom()))
    }

    fn drag_joint(&mut self, i: usize, d: Vector) -> bool {
        let (ux, uy) = self.viewport().units_per_pixel();
        let AreaFunction::Polyline { joints } = &mut self.function else {
            return false;
        };
        let p = joints[i].translated(d.dx * ux, -d.dy * uy);
        let lo_ok = i == 0 || joints[i - 1].x < p.x;
        let hi_ok = i + 1 == joints.len() || p.x < joints[i + 1].x;
        if !(lo_ok && hi_ok) || p == joints[i] {
            return false;
        }
        joints[i] = p;
        true
    }

    /// Pixel outline of the shaded region.
    fn shaded(&self) -> Option<Vec<Point>> {
        let vp = self.viewport();
        let lo = self.a.max(self.x_range.0);
        let hi = self.b.min(self.x_range.1);
        if !(lo < hi) {
            return None;
        }
        let mut xs: Vec<f64> = match &self.function {
            AreaFunction::Polyline { joints } => joints.iter().map(|j| j.x).filter(|&x| lo < x && x < hi).collect(),
            AreaFunction::Formula { .. } => {
                let n = 16usize.max((2.0 * (hi - lo) / vp.units_per_pixel().0).ceil() as usize);
                (1..n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect()
            }
        };
        xs.insert(0, lo);
        xs.push(hi);
        let clamp = |p: Point| {
            Point::new(
                p.x.clamp(self.rect.left, self.rect.right()),
                p.y.clamp(self.rect.top, self.rect.bottom()),
            )
        };
        let mut pts = vec![clamp(vp.value_to_pixel(Point::new(lo, 0.0)))];
        for x in xs {
            pts.push(clamp(vp.value_to_pixel(Point::new(x, self.value(x)?))));
        }
        pts.push(clamp(vp.value_to_pixel(Point::new(hi, 0.0))));
        Some(pts)
    }

    fn curve_lines(&self) -> Vec<Vec<Point>> {
        match &self.function {
            AreaFunction::Formula { text } => {
                let mut area = match PlottingArea::new(self.rect, self.x_range, self.y_range) {
                    Ok(a) => a,
                    Err(_) => return Vec::new(),
                };
                area.curves.push(Curve {
                    spec: CurveSpec::y_of_x(text.clone()),
                    color: self.curve_color,
                    sample_count: None,
                });
                area.curve_polylines(0).unwrap_or_default()
            }
            AreaFunction::Polyline { joints } => {
                let vp = self.viewport();
                joints
                    .windows(2)
                    .filter_map(|w| clip_segment(vp.value_to_pixel(w[0]), vp.value_to_pixel(w[1]), &self.rect))
                    .map(|(a, b, _, _)| vec![a, b])
                    .collect()
            }
        }
    }
}

impl Movable for AreaUnderCurve {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(false);
        let vp = self.viewport();
        for j in self.joints() {
            c.circle(
                vp.value_to_pixel(*j),
                cfg.handle_radius,
                NodeAction::Reconfigure,
                CursorHint::Hand,
            );
        }
        for x in [self.a, self.b] {
            let (top, bottom) = self.border_line(x);
            c.strip(
                top,
                bottom,
                cfg.strip_half_width,
                NodeAction::Reconfigure,
                CursorHint::SizeH,
            );
        }
        push_box_handles(&mut c, &self.rect, cfg);
        c.rect_body(&self.rect, NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let n = self.joints().len();
        let changed = match node {
            i if i < n => self.drag_joint(i, drag.delta()),
            i if i < n + 2 => {
                let dv = drag.dx * self.viewport().units_per_pixel().0;
                if i == n {
                    self.move_border(Border::A, self.a + dv)
                } else {
                    self.move_border(Border::B, self.b + dv)
                }
            }
            i if i < n + 10 => {
                let edges = box_handle_edges(i - n - 2).expect("box handle");
                let before = self.rect;
                self.rect = resize_edges(&self.rect, edges, drag.delta(), ResizeMode::Free, 1.0, self.min_size);
                self.rect != before
            }
            i if i == n + 10 => {
                self.translate(drag.dx, drag.dy);
                !drag.delta().is_zero()
            }
            i => return Err(ElementError::InvalidNode(i)),
        };
        Ok(NodeEffect::from_changed(changed))
    }

    fn bounds(&self, _: &Style) -> Rect {
        self.rect
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::rect(
            &self.rect,
            Color::WHITE,
            style.stroke,
            style.stroke_width,
        ));
        if let Some(region) = self.shaded() {
            out.push(Primitive::filled_polygon(region, self.fill, Color::TRANSPARENT, 0.0));
        }
        for line in self.curve_lines() {
            out.push(Primitive::Polyline {
                points: line,
                stroke: self.curve_color,
                stroke_width: 1.5,
            });
        }
        for x in [self.a, self.b] {
            let (top, bottom) = self.border_line(x);
            out.push(Primitive::line(top, bottom, style.stroke, 1.0));
        }
        let vp = self.viewport();
        for j in self.joints() {
            out.push(Primitive::CircleArc {
                center: vp.value_to_pixel(*j),
                radius: 3.0,
                start: 0.0,
                sweep: std::f64::consts::TAU,
                fill: Some(self.curve_color),
                stroke: None,
                stroke_width: 0.0,
            });
        }
        let label = match self.integral() {
            Ok(v) => format!(
                "a = {}  b = {}  integral = {}",
                super::format_value(self.a),
                super::format_value(self.b),
                super::format_value(v)
            ),
            Err(e) => format!("integral: {e}"),
        };
        out.push(Primitive::text(
            Point::new(self.rect.left + 4.0, self.rect.top + 4.0),
            label,
            &style.font,
            style.text_color,
        ));
    }
}
