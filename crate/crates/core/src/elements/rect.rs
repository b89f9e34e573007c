use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use super::{ElementError, Movable, NodeEffect};
use crate::cover::{Cover, CoverConfig, CursorHint, NodeAction, NodeId};
use crate::geometry::{normalize_angle, rotate_about_radians, Point, Rect, Vector};
use crate::mover::Drag;
use crate::render::Primitive;
use crate::style::Style;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ResizeMode {
    #[default]
    Free,
    /// Width over height stays at the stored ratio.
    FixedRatio,
    /// Opposite sides move by mirrored amounts around the center.
    Symmetric,
}

/// Which sides of a rectangle a handle drags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Edges {
    pub left: bool,
    pub top: bool,
    pub right: bool,
    pub bottom: bool,
}

impl Edges {
    pub const NW: Edges = Edges {
        left: true,
        top: true,
        right: false,
        bottom: false,
    };
    pub const NE: Edges = Edges {
        left: false,
        top: true,
        right: true,
        bottom: false,
    };
    pub const SE: Edges = Edges {
        left: false,
        top: false,
        right: true,
        bottom: true,
    };
    pub const SW: Edges = Edges {
        left: true,
        top: false,
        right: false,
        bottom: true,
    };
    pub const N: Edges = Edges {
        left: false,
        top: true,
        right: false,
        bottom: false,
    };
    pub const E: Edges = Edges {
        left: false,
        top: false,
        right: true,
        bottom: false,
    };
    pub const S: Edges = Edges {
        left: false,
        top: false,
        right: false,
        bottom: true,
    };
    pub const W: Edges = Edges {
        left: true,
        top: false,
        right: false,
        bottom: false,
    };

    /// Corner order used by every rectangular cover: NW, NE, SE, SW.
    pub const CORNERS: [Edges; 4] = [Edges::NW, Edges::NE, Edges::SE, Edges::SW];
    /// Side order: N, E, S, W.
    pub const SIDES: [Edges; 4] = [Edges::N, Edges::E, Edges::S, Edges::W];

    fn horizontal(&self) -> bool {
        self.left || self.right
    }

    fn vertical(&self) -> bool {
        self.top || self.bottom
    }
}

/// Per-side displacement in the rectangle's own frame, with the
/// resulting size.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
struct SideDeltas {
    left: f64,
    top: f64,
    right: f64,
    bottom: f64,
    width: f64,
    height: f64,
}

/// Clamps one axis and returns its new size, exactly `min` when clamped.
fn clamp_axis(lo: &mut f64, hi: &mut f64, moving_lo: bool, moving_hi: bool, size: f64, min: f64) -> f64 {
    if *lo == 0.0 && *hi == 0.0 {
        return size;
    }
    let new = size + (*hi - *lo);
    if new >= min || !(moving_lo || moving_hi) {
        return new;
    }
    let allowed = min - size;
    match (moving_lo, moving_hi) {
        (true, true) => {
            *lo = -allowed * 0.5;
            *hi = allowed * 0.5;
        }
        (true, false) => {
            *lo = -allowed;
            *hi = 0.0;
        }
        _ => {
            *lo = 0.0;
            *hi = allowed;
        }
    }
    min
}

fn side_deltas(
    width: f64,
    height: f64,
    edges: Edges,
    local: Vector,
    mode: ResizeMode,
    ratio: f64,
    min_size: f64,
) -> SideDeltas {
    let mut d = SideDeltas::default();
    if edges.left {
        d.left = local.dx;
    }
    if edges.right {
        d.right = local.dx;
    }
    if edges.top {
        d.top = local.dy;
    }
    if edges.bottom {
        d.bottom = local.dy;
    }
    match mode {
        ResizeMode::Free => {
            d.width = clamp_axis(&mut d.left, &mut d.right, edges.left, edges.right, width, min_size);
            d.height = clamp_axis(&mut d.top, &mut d.bottom, edges.top, edges.bottom, height, min_size);
        }
        ResizeMode::Symmetric => {
            if edges.left {
                d.right = -d.left;
            } else if edges.right {
                d.left = -d.right;
            }
            if edges.top {
                d.bottom = -d.top;
            } else if edges.bottom {
                d.top = -d.bottom;
            }
            d.width = clamp_axis(
                &mut d.left,
                &mut d.right,
                edges.horizontal(),
                edges.horizontal(),
                width,
                min_size,
            );
            d.height = clamp_axis(
                &mut d.top,
                &mut d.bottom,
                edges.vertical(),
                edges.vertical(),
                height,
                min_size,
            );
        }
        ResizeMode::FixedRatio => {
            let min_w = min_size.max(min_size * ratio);
            let new_w = if edges.horizontal() {
                (width + d.right - d.left).max(min_w)
            } else {
                ((height + d.bottom - d.top).max(min_size.max(min_size / ratio)) * ratio).max(min_w)
            };
            let new_h = (new_w / ratio).max(min_size);
            let (dw, dh) = (new_w - width, new_h - height);
            d = SideDeltas {
                width: new_w,
                height: new_h,
                ..SideDeltas::default()
            };
            if edges.left {
                d.left = -dw;
            } else {
                d.right = dw;
            }
            if edges.top {
                d.top = -dh;
            } else {
                d.bottom = dh;
            }
        }
    }
    d
}

/// Resizes an axis-aligned rectangle by dragging `edges` by `delta`.
/// Used by controls and plotting areas, which never rotate.
pub fn resize_edges(r: &Rect, edges: Edges, delta: Vector, mode: ResizeMode, ratio: f64, min_size: f64) -> Rect {
    let d = side_deltas(r.width, r.height, edges, delta, mode, ratio, min_size);
    apply_axis_aligned(r, d)
}

fn apply_axis_aligned(r: &Rect, d: SideDeltas) -> Rect {
    Rect {
        left: r.left + d.left,
        top: r.top + d.top,
        width: d.width,
        height: d.height,
    }
}

/// Rectangle with optional rotation, resize policy and vertical partitions.
///
/// Cover layout: four corner handles (NW, NE, SE, SW), four side strips
/// (N, E, S, W), one strip per partition, then the body. Corner and side
/// handles sit just outside the body so every inner point moves the shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RectangleEl {
    /// Unrotated geometry; rotation is about its center.
    pub rect: Rect,
    pub angle: f64,
    pub resize_mode: ResizeMode,
    /// Width / height, honored in fixed-ratio mode.
    pub ratio: f64,
    /// Divider positions as fractions of the width, strictly increasing.
    pub partitions: Vec<f64>,
    pub min_size: f64,
}

impl RectangleEl {
    pub fn new(rect: Rect) -> Self {
        let ratio = if rect.height > 0.0 {
            rect.width / rect.height
        } else {
            1.0
        };
        Self {
            rect,
            angle: 0.0,
            resize_mode: ResizeMode::Free,
            ratio,
            partitions: Vec::new(),
            min_size: 4.0,
        }
    }

    pub fn with_mode(mut self, mode: ResizeMode) -> Self {
        self.resize_mode = mode;
        self
    }

    pub fn with_partitions(mut self, partitions: Vec<f64>) -> Result<Self, ElementError> {
        let ok = partitions.iter().all(|f| *f > 0.0 && *f < 1.0) && partitions.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(ElementError::InvalidShape(
                "partitions must be strictly increasing fractions in (0, 1)".into(),
            ));
        }
        self.partitions = partitions;
        Ok(self)
    }

    pub fn with_min_size(mut self, min_size: f64) -> Self {
        self.min_size = min_size;
        self
    }

    fn to_world(&self, p: Point) -> Point {
        rotate_about_radians(p, self.rect.center(), self.angle)
    }

    /// Corners in world space, NW, NE, SE, SW.
    pub fn corners(&self) -> [Point; 4] {
        self.rect.corners().map(|p| self.to_world(p))
    }

    fn edges_for(&self, node: NodeId) -> Option<Edges> {
        box_handle_edges(node)
    }

    fn resize(&mut self, edges: Edges, delta: Vector) -> bool {
        let local = delta.rotated(-self.angle);
        let d = side_deltas(
            self.rect.width,
            self.rect.height,
            edges,
            local,
            self.resize_mode,
            self.ratio,
            self.min_size,
        );
        let before = self.rect;
        if self.angle == 0.0 {
            self.rect = apply_axis_aligned(&self.rect, d);
        } else {
            let (w, h) = (d.width, d.height);
            let shift = Vector::new((d.left + d.right) * 0.5, (d.top + d.bottom) * 0.5).rotated(self.angle);
            let c = self.rect.center() + shift;
            self.rect = Rect::new(c.x - w * 0.5, c.y - h * 0.5, w, h);
        }
        self.rect != before
    }

    fn move_partition(&mut self, index: usize, delta: Vector) -> bool {
        if self.rect.width <= 0.0 {
            return false;
        }
        let local = delta.rotated(-self.angle);
        let f = self.partitions[index] + local.dx / self.rect.width;
        let lo = if index == 0 { 0.0 } else { self.partitions[index - 1] };
        let hi = self.partitions.get(index + 1).copied().unwrap_or(1.0);
        if !(f > lo && f < hi) || f == self.partitions[index] {
            return false;
        }
        self.partitions[index] = f;
        true
    }
}

impl Movable for RectangleEl {
    fn cover(&self, cfg: &CoverConfig, _: &Style) -> Cover {
        let mut c = Cover::new(true);
        let center = self.rect.center();
        let corners = self.corners();
        let r = cfg.handle_radius;
        for (i, corner) in corners.iter().enumerate() {
            let out = (*corner - center)
                .normalized()
                .unwrap_or(Vector::new(-FRAC_1_SQRT_2, -FRAC_1_SQRT_2));
            let cursor = if i % 2 == 0 {
                CursorHint::SizeNwse
            } else {
                CursorHint::SizeNesw
            };
            c.circle(*corner + out * r, r, NodeAction::Resize, cursor);
        }
        let hw = cfg.strip_half_width;
        for i in 0..4 {
            let (a, b) = (corners[i], corners[(i + 1) % 4]);
            // outward normal of a clockwise screen outline
            let normal = (b - a).normalized().map(|t| -t.perp()).unwrap_or_default();
            let cursor = if i % 2 == 0 {
                CursorHint::SizeV
            } else {
                CursorHint::SizeH
            };
            c.strip(a + normal * hw, b + normal * hw, hw, NodeAction::Resize, cursor);
        }
        for f in &self.partitions {
            let x = self.rect.left + f * self.rect.width;
            let a = self.to_world(Point::new(x, self.rect.top));
            let b = self.to_world(Point::new(x, self.rect.bottom()));
            c.strip(a, b, hw, NodeAction::Reconfigure, CursorHint::SizeH);
        }
        c.polygon(corners.to_vec(), NodeAction::MoveWhole, CursorHint::Move);
        c
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translated(dx, dy);
    }

    fn drag_node(&mut self, node: NodeId, drag: &Drag, _: &CoverConfig, _: &Style) -> Result<NodeEffect, ElementError> {
        let body = 8 + self.partitions.len();
        let changed = if let Some(edges) = self.edges_for(node) {
            self.resize(edges, drag.delta())
        } else if node < body {
            self.move_partition(node - 8, drag.delta())
        } else if node == body {
            self.translate(drag.dx, drag.dy);
            !drag.delta().is_zero()
        } else {
            return Err(ElementError::InvalidNode(node));
        };
        Ok(NodeEffect::from_changed(changed))
    }

    fn rotation_center(&self) -> Option<Point> {
        Some(self.rect.center())
    }

    fn rotate(&mut self, center: Point, radians: f64) {
        let c = rotate_about_radians(self.rect.center(), center, radians);
        self.rect = Rect::new(
            c.x - self.rect.width * 0.5,
            c.y - self.rect.height * 0.5,
            self.rect.width,
            self.rect.height,
        );
        self.angle = normalize_angle(self.angle + radians);
    }

    fn bounds(&self, _: &Style) -> Rect {
        if self.angle == 0.0 {
            self.rect
        } else {
            Rect::bounding(self.corners()).unwrap_or_default()
        }
    }

    fn draw(&self, style: &Style, out: &mut Vec<Primitive>) {
        out.push(Primitive::filled_polygon(
            self.corners().to_vec(),
            style.fill,
            style.stroke,
            style.stroke_width,
        ));
        for f in &self.partitions {
            let x = self.rect.left + f * self.rect.width;
            out.push(Primitive::line(
                self.to_world(Point::new(x, self.rect.top)),
                self.to_world(Point::new(x, self.rect.bottom())),
                style.stroke,
                style.stroke_width,
            ));
        }
    }
}

/// Appends the eight resize handles of an axis-aligned box, corners first
/// (NW, NE, SE, SW) then sides (N, E, S, W), all just outside `r`.
pub fn push_box_handles(c: &mut Cover, r: &Rect, cfg: &CoverConfig) {
    let hr = cfg.handle_radius;
    let d = hr * FRAC_1_SQRT_2;
    let offsets = [(-d, -d), (d, -d), (d, d), (-d, d)];
    for (i, (corner, (ox, oy))) in r.corners().iter().zip(offsets).enumerate() {
        let cursor = if i % 2 == 0 {
            CursorHint::SizeNwse
        } else {
            CursorHint::SizeNesw
        };
        c.circle(corner.translated(ox, oy), hr, NodeAction::Resize, cursor);
    }
    let hw = cfg.strip_half_width;
    let [nw, ne, se, sw] = r.corners();
    c.strip(
        nw.translated(0.0, -hw),
        ne.translated(0.0, -hw),
        hw,
        NodeAction::Resize,
        CursorHint::SizeV,
    );
    c.strip(
        ne.translated(hw, 0.0),
        se.translated(hw, 0.0),
        hw,
        NodeAction::Resize,
        CursorHint::SizeH,
    );
    c.strip(
        sw.translated(0.0, hw),
        se.translated(0.0, hw),
        hw,
        NodeAction::Resize,
        CursorHint::SizeV,
    );
    c.strip(
        nw.translated(-hw, 0.0),
        sw.translated(-hw, 0.0),
        hw,
        NodeAction::Resize,
        CursorHint::SizeH,
    );
}

/// Edges moved by handle `node` of [`push_box_handles`].
pub fn box_handle_edges(node: NodeId) -> Option<Edges> {
    match node {
        0..=3 => Some(Edges::CORNERS[node]),
        4..=7 => Some(Edges::SIDES[node - 4]),
        _ => None,
    }
}
