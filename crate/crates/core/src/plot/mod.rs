//! Plotting areas, their scales and comments, and the area-under-curve
//! demonstration with movable integration borders.

mod area;
mod auc;
mod comment;
mod integrate;
mod scale;

pub use area::{clip_segment, Curve, PlottingArea};
pub use auc::{AreaFunction, AreaUnderCurve, Border, BORDER_GAP};
pub use comment::CommentEl;
pub use integrate::{integrate, trapezoid, IntegrationError, MAX_DEPTH, TOLERANCE};
pub use scale::{Orientation, ScaleEl};

use crate::geometry::{Point, Rect};

/// Affine map between a value window and a pixel rectangle, y flipped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub rect: Rect,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
}

impl Viewport {
    pub fn value_to_pixel(&self, v: Point) -> Point {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        Point::new(
            self.rect.left + (v.x - x0) / (x1 - x0) * self.rect.width,
            self.rect.bottom() - (v.y - y0) / (y1 - y0) * self.rect.height,
        )
    }

    pub fn pixel_to_value(&self, p: Point) -> Point {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        Point::new(
            x0 + (p.x - self.rect.left) / self.rect.width * (x1 - x0),
            y0 + (self.rect.bottom() - p.y) / self.rect.height * (y1 - y0),
        )
    }

    /// Value-space size of one pixel along each axis.
    pub fn units_per_pixel(&self) -> (f64, f64) {
        (
            (self.x_range.1 - self.x_range.0) / self.rect.width,
            (self.y_range.1 - self.y_range.0) / self.rect.height,
        )
    }
}

pub(crate) fn range_ok(r: (f64, f64)) -> bool {
    r.0.is_finite() && r.1.is_finite() && r.0 < r.1
}

/// Compact tick label: up to four decimals, trailing zeros trimmed.
pub fn format_value(v: f64) -> String {
    let s = format!("{:.4}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}
