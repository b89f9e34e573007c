//! Invariant checks over a whole scene.

use std::collections::BTreeSet;

use super::Scene;
use crate::controls_groups::GroupKind;
use crate::cover::NodeAction;
use crate::elements::{ResizeMode, Shape};
use crate::geometry::{is_convex, span, Point};
use crate::mover::MoverHost;
use crate::persistence;
use crate::ElementId;

/// Share of interior samples that must land on a move or reconfigure node.
pub const COVER_COMPLETENESS: f64 = 0.99;

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.rule, self.message)
    }
}

fn v(rule: &'static str, message: String) -> Violation {
    Violation { rule, message }
}

impl Scene {
    /// Structural and per-element invariants; cheap enough to run after
    /// every event.
    pub fn check_invariants(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        self.check_integrity(&mut out);
        self.check_groups(&mut out);
        for e in self.elements() {
            check_shape(e.id, &e.shape, &mut out);
            let b = e.shape.bounds(&e.style);
            if ![b.left, b.top, b.width, b.height].iter().all(|x| x.is_finite()) {
                out.push(v("finite", format!("{} has non-finite bounds", e.id)));
            }
        }
        out
    }

    /// Everything in [`Scene::check_invariants`] plus cover completeness of
    /// every visible element and a save/load/save round trip.
    pub fn check_full(&self) -> Vec<Violation> {
        let mut out = self.check_invariants();
        for e in self.elements() {
            if !self.is_effectively_visible(e.id) {
                continue;
            }
            if let Some(share) = self.cover_completeness(e.id) {
                if share < COVER_COMPLETENESS {
                    out.push(v(
                        "coverCompleteness",
                        format!("{} only {:.2}% of interior catches", e.id, share * 100.0),
                    ));
                }
            }
        }
        let first = persistence::save(self);
        match persistence::load(&first) {
            Ok(back) => {
                if persistence::save(&back) != first {
                    out.push(v("roundTrip", "save(load(save)) differs from save".into()));
                }
            }
            Err(err) => out.push(v("roundTrip", format!("saved scene does not load: {err}"))),
        }
        out
    }

    /// Share of one-pixel grid samples strictly inside the element body
    /// that its own cover catches with a move or reconfigure node. `None`
    /// when the shape has no pressable interior or no interior samples.
    pub fn cover_completeness(&self, id: ElementId) -> Option<f64> {
        let e = self.element(id)?;
        let cover = self.cover(id)?;
        let b = e.shape.bounds(&e.style);
        let (mut inside, mut hit) = (0usize, 0usize);
        let mut y = b.top.floor() + 0.5;
        while y < b.bottom() {
            let mut x = b.left.floor() + 0.5;
            while x < b.right() {
                let p = Point::new(x, y);
                if e.shape.interior_contains(p, &e.style)? {
                    inside += 1;
                    let caught = cover
                        .hit_test(p)
                        .and_then(|n| cover.node(n))
                        .is_some_and(|n| matches!(n.action, NodeAction::MoveWhole | NodeAction::Reconfigure));
                    hit += usize::from(caught);
                }
                x += 1.0;
            }
            y += 1.0;
        }
        (inside > 0).then(|| hit as f64 / inside as f64)
    }

    fn check_integrity(&self, out: &mut Vec<Violation>) {
        let mut parent_count = std::collections::BTreeMap::<ElementId, usize>::new();
        for g in self.groups() {
            for c in g.children() {
                if !self.contains_id(c) {
                    out.push(v("integrity", format!("group {} lists missing {c}", g.id)));
                }
                *parent_count.entry(c).or_default() += 1;
            }
        }
        for (id, n) in parent_count {
            if n > 1 {
                out.push(v("integrity", format!("{id} has {n} parent groups")));
            }
        }
        let registry = self.mover().registry();
        let set: BTreeSet<ElementId> = registry.iter().copied().collect();
        if set.len() != registry.len() {
            out.push(v("integrity", "registry holds duplicates".into()));
        }
        let expected: BTreeSet<ElementId> = self
            .elements()
            .map(|e| e.id)
            .chain(self.groups().map(|g| g.id))
            .filter(|&id| self.is_registrable(id))
            .collect();
        if set != expected {
            out.push(v(
                "integrity",
                format!("registry {set:?} differs from registrable set {expected:?}"),
            ));
        }
        for e in self.elements() {
            if let Shape::Scale(s) = &e.shape {
                if let Some(o) = s.owner {
                    if !matches!(self.element(o).map(|x| &x.shape), Some(Shape::Plot(_))) {
                        out.push(v("integrity", format!("scale {} owned by non-plot {o}", e.id)));
                    }
                }
            }
        }
    }

    fn check_groups(&self, out: &mut Vec<Violation>) {
        for g in self.groups() {
            match &g.kind {
                GroupKind::Elastic(e) => {
                    let want = self.elastic_frame(g.id).expect("elastic");
                    if e.frame != want {
                        out.push(v("elasticFrame", format!("{} frame {:?} != {:?}", g.id, e.frame, want)));
                    }
                    if !(0.0..=1.0).contains(&e.title.t) {
                        out.push(v(
                            "elasticFrame",
                            format!("{} title fraction {} outside [0, 1]", g.id, e.title.t),
                        ));
                    }
                }
                GroupKind::Weld(w) => {
                    let base = self.element(w.base).map(|e| &e.shape);
                    let roof = self.element(w.roof).map(|e| &e.shape);
                    match (base, roof) {
                        (Some(Shape::Rect(b)), Some(Shape::Polygon(r))) => {
                            let [nw, ne, _, _] = b.corners();
                            if !super::on_corner(r.vertices[0], nw) || !super::on_corner(r.vertices[1], ne) {
                                out.push(v("weld", format!("roof {} detached from base {}", w.roof, w.base)));
                            }
                        }
                        _ => out.push(v("weld", format!("group {} needs a rect base and polygon roof", g.id))),
                    }
                }
                GroupKind::Dominant(d) => {
                    let Some(base) = self.anchor(d.dominant) else {
                        out.push(v("dominant", format!("group {} lost its dominant", g.id)));
                        continue;
                    };
                    for s in &d.subordinates {
                        let close = self.anchor(s.id).is_some_and(|a| {
                            let d = (a - base) - s.offset;
                            let scale = 1.0 + a.x.abs().max(a.y.abs());
                            d.dx.abs() <= 1e-9 * scale && d.dy.abs() <= 1e-9 * scale
                        });
                        if !close {
                            out.push(v("dominant", format!("{} offset out of date", s.id)));
                        }
                    }
                }
                GroupKind::Dynamic(d) => {
                    if d.frame.width < d.min_size || d.frame.height < d.min_size {
                        out.push(v("minSize", format!("dynamic group {} below its minimum", g.id)));
                    }
                }
                GroupKind::Fixed(_) => {}
            }
        }
    }
}

fn check_shape(id: ElementId, shape: &Shape, out: &mut Vec<Violation>) {
    match shape {
        Shape::Polygon(p) => {
            if p.convex_only && !is_convex(&p.vertices).unwrap_or(false) {
                out.push(v("convex", format!("{id} is not convex")));
            }
            if span(&p.vertices) < p.min_span {
                out.push(v("minSize", format!("{id} span below {}", p.min_span)));
            }
            if !p.shape_ok() {
                out.push(v("polygon", format!("{id} hole escaped its outline")));
            }
        }
        Shape::Rect(r) => {
            if r.rect.width < r.min_size || r.rect.height < r.min_size {
                out.push(v(
                    "minSize",
                    format!("{id} is {}x{}, minimum {}", r.rect.width, r.rect.height, r.min_size),
                ));
            }
            if r.resize_mode == ResizeMode::FixedRatio {
                let ratio = r.rect.width / r.rect.height;
                if (ratio - r.ratio).abs() > 1e-6 * r.ratio.abs().max(1.0) {
                    out.push(v("ratio", format!("{id} ratio {ratio} drifted from {}", r.ratio)));
                }
            }
        }
        Shape::Control(c) => {
            if c.rect.width < c.min_size || c.rect.height < c.min_size {
                out.push(v("minSize", format!("{id} control below its minimum")));
            }
        }
        Shape::Plot(p) => {
            if p.rect.width < p.min_size || p.rect.height < p.min_size {
                out.push(v("minSize", format!("{id} plot below its minimum")));
            }
        }
        Shape::AreaUnderCurve(a) => {
            if !(a.a < a.b) {
                out.push(v("borders", format!("{id} has a = {} not below b = {}", a.a, a.b)));
            }
            if a.rect.width < a.min_size || a.rect.height < a.min_size {
                out.push(v("minSize", format!("{id} area plot below its minimum")));
            }
        }
        _ => {}
    }
}
