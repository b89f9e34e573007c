//! Random scenes and scripts shared by the integration tests.
#![allow(dead_code)]

use movable::controls_groups::{ControlEl, DominantGroup, ElasticGroup, FixedGroup, GroupKind, Subordinate};
use movable::demos::add_building;
use movable::elements::{
    CircleEl, CircleGeom, CrescentEl, LineEl, PieEl, PolygonEl, PolylineEl, RectangleEl, ResizeMode, RingEl,
    SemicircleEl, StripEl,
};
use movable::funcexpr::CurveSpec;
use movable::plot::{AreaFunction, AreaUnderCurve, CommentEl, PlottingArea};
use movable::scene::Event;
use movable::style::{Color, Style};
use movable::{Button, ElementId, Point, Rect, Scene, Shape, Vector};
use rand::seq::IndexedRandom;
use rand::Rng;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;

fn color<R: Rng>(rng: &mut R) -> Color {
    Color::rgb(rng.random(), rng.random(), rng.random())
}

fn point<R: Rng>(rng: &mut R, margin: f64) -> Point {
    Point::new(
        rng.random_range(margin..WIDTH - margin),
        rng.random_range(margin..HEIGHT - margin),
    )
}

/// Convex polygon: sorted random angles on a circle.
pub fn random_convex<R: Rng>(rng: &mut R, center: Point, radius: f64) -> Vec<Point> {
    let n = rng.random_range(3..8);
    let mut angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 0.3);
    if angles.len() < 3 {
        angles = vec![0.0, 2.1, 4.2];
    }
    angles
        .into_iter()
        .map(|a| Point::new(center.x + radius * a.cos(), center.y + radius * a.sin()))
        .collect()
}

/// One element of a random kind; `None` when the draw produced an
/// invalid shape.
pub fn random_shape<R: Rng>(rng: &mut R) -> Option<Shape> {
    let c = point(rng, 80.0);
    let shape = match rng.random_range(0..15) {
        0 | 1 => {
            let r = Rect::new(c.x, c.y, rng.random_range(20.0..150.0), rng.random_range(20.0..120.0));
            let mode = *[ResizeMode::Free, ResizeMode::FixedRatio, ResizeMode::Symmetric].choose(rng)?;
            Shape::Rect(RectangleEl::new(r).with_mode(mode).with_min_size(10.0))
        }
        2 | 3 => {
            let radius = rng.random_range(20.0..60.0);
            let p = if rng.random_bool(0.5) {
                PolygonEl::regular(c, radius, rng.random_range(3..8), rng.random_range(0.0..1.0)).ok()?
            } else {
                PolygonEl::new(random_convex(rng, c, radius)).ok()?
            };
            Shape::Polygon(p.convex().ok()?.with_min_span(10.0, false))
        }
        4 => {
            let star: Vec<Point> = (0..10)
                .map(|i| {
                    let a = i as f64 * std::f64::consts::PI / 5.0;
                    let r = if i % 2 == 0 { 50.0 } else { 22.0 };
                    Point::new(c.x + r * a.cos(), c.y + r * a.sin())
                })
                .collect();
            Shape::Polygon(PolygonEl::new(star).ok()?.with_min_span(10.0, false))
        }
        5 => Shape::Circle(CircleEl::new(c, rng.random_range(10.0..60.0)).ok()?),
        6 => {
            let inner = rng.random_range(10.0..30.0);
            Shape::Ring(RingEl::new(c, inner, inner + rng.random_range(10.0..40.0)).ok()?)
        }
        7 => Shape::Semicircle(SemicircleEl::new(c, rng.random_range(20.0..60.0)).ok()?),
        8 => {
            let b = c + Vector::new(rng.random_range(-150.0..150.0), rng.random_range(-150.0..150.0));
            Shape::Strip(StripEl::new(c, b, rng.random_range(4.0..15.0)).ok()?)
        }
        9 => {
            let r = rng.random_range(25.0..50.0);
            Shape::Crescent(
                CrescentEl::new(
                    CircleGeom { center: c, radius: r },
                    CircleGeom {
                        center: c + Vector::new(0.4 * r, -0.3 * r),
                        radius: 0.8 * r,
                    },
                )
                .ok()?,
            )
        }
        10 => {
            let n = rng.random_range(2..6);
            let joints = (0..n)
                .map(|i| c + Vector::new(40.0 * i as f64, rng.random_range(-40.0..40.0)))
                .collect();
            Shape::Polyline(PolylineEl::new(joints).ok()?)
        }
        11 => {
            let b = c + Vector::new(rng.random_range(-120.0..120.0), rng.random_range(-120.0..120.0));
            Shape::Line(LineEl::new(c, b))
        }
        12 => {
            let weights: Vec<(f64, Color)> = (0..rng.random_range(2..5))
                .map(|_| (rng.random_range(0.5..3.0), color(rng)))
                .collect();
            Shape::Pie(PieEl::from_weights(c, rng.random_range(20.0..50.0), &weights).ok()?)
        }
        13 => Shape::Control(ControlEl::new(
            Rect::new(c.x, c.y, rng.random_range(40.0..160.0), rng.random_range(20.0..40.0)),
            *["button", "textbox", "label"].choose(rng)?,
            "Caption",
        )),
        _ => Shape::Comment(CommentEl::new(c, *["note", "x^2", "a longer comment"].choose(rng)?)),
    };
    Some(shape)
}

fn random_plot<R: Rng>(rng: &mut R) -> Shape {
    let c = point(rng, 150.0);
    let r = Rect::new(c.x - 100.0, c.y - 60.0, 200.0, 120.0);
    if rng.random_bool(0.5) {
        let mut p = PlottingArea::new(r, (-4.0, 4.0), (-2.0, 2.0)).expect("plot");
        p.add_curve(CurveSpec::y_of_x("sin(x)"), Color::BLACK).expect("curve");
        Shape::Plot(p)
    } else {
        let f = AreaFunction::Formula { text: "x^2/4".into() };
        Shape::AreaUnderCurve(AreaUnderCurve::new(r, (0.0, 4.0), (0.0, 4.0), f, 1.0, 3.0).expect("area"))
    }
}

fn style<R: Rng>(rng: &mut R) -> Style {
    Style::filled(color(rng))
}

/// Elements, houses and groups in random arrangement.
pub fn random_scene<R: Rng>(rng: &mut R) -> Scene {
    let mut s = Scene::new();
    for _ in 0..rng.random_range(3..10) {
        match rng.random_range(0..12) {
            0 => {
                let kind = *["house1", "house2", "house3", "house4", "hangar"].choose(rng).unwrap();
                add_building(&mut s, kind, point(rng, 100.0)).expect("building");
            }
            1 => {
                let shape = random_plot(rng);
                s.add_element(shape, Style::default());
            }
            _ => {
                if let Some(shape) = random_shape(rng) {
                    let st = style(rng);
                    s.add_element(shape, st);
                }
            }
        }
    }
    for _ in 0..rng.random_range(0..3) {
        add_random_group(rng, &mut s);
    }
    s
}

fn free_top_level(s: &Scene, elements_only: bool) -> Vec<ElementId> {
    let mut ids: Vec<ElementId> = s
        .elements()
        .map(|e| e.id)
        .filter(|&id| s.parent_of(id).is_none())
        .collect();
    if !elements_only {
        ids.extend(
            s.groups()
                .filter(|g| g.is_registered() && s.parent_of(g.id).is_none())
                .map(|g| g.id),
        );
    }
    ids
}

pub fn add_random_group<R: Rng>(rng: &mut R, s: &mut Scene) -> Option<ElementId> {
    let which = rng.random_range(0..4);
    let pool = free_top_level(s, which == 2);
    if pool.len() < 2 {
        return None;
    }
    let n = rng.random_range(2..=pool.len().min(4));
    let picked: Vec<ElementId> = pool.choose_multiple(rng, n).copied().collect();
    let kind = match which {
        0 | 1 => {
            let mut g = ElasticGroup::new(picked, "Group");
            g.margin = rng.random_range(2.0..12.0);
            GroupKind::Elastic(g)
        }
        2 => GroupKind::Dominant(DominantGroup {
            dominant: picked[0],
            subordinates: picked[1..]
                .iter()
                .map(|&id| Subordinate {
                    id,
                    offset: Vector::default(),
                })
                .collect(),
        }),
        _ => GroupKind::Fixed(FixedGroup {
            children: picked,
            frame_visible: rng.random_bool(0.5),
        }),
    };
    s.add_group(kind).ok()
}

/// A press point: near a node of a random visible item or anywhere.
pub fn press_point<R: Rng>(rng: &mut R, s: &Scene) -> Point {
    let visible: Vec<&movable::Element> = s.elements().filter(|e| s.is_effectively_visible(e.id)).collect();
    if visible.is_empty() || rng.random_bool(0.15) {
        return point(rng, 0.0);
    }
    let e = visible.choose(rng).unwrap();
    if rng.random_bool(0.5) {
        let pts = e.shape.defining_points();
        if let Some(p) = pts.choose(rng) {
            return *p + Vector::new(rng.random_range(-6.0..6.0), rng.random_range(-6.0..6.0));
        }
    }
    let b = e.shape.bounds(&e.style);
    Point::new(
        b.left + rng.random_range(-0.1..1.1) * b.width,
        b.top + rng.random_range(-0.1..1.1) * b.height,
    )
}

fn random_command<R: Rng>(rng: &mut R, s: &Scene) -> Option<Event> {
    let registry = s.mover().registry();
    let id = registry.choose(rng)?.to_string();
    Some(match rng.random_range(0..4) {
        0 => Event::command("hide", &[&id]),
        1 => {
            let hidden: Vec<ElementId> = s
                .elements()
                .map(|e| e.id)
                .chain(s.groups().map(|g| g.id))
                .filter(|&i| !s.is_effectively_visible(i))
                .collect();
            let target = hidden.choose(rng).map(|i| i.to_string()).unwrap_or(id);
            Event::command("show", &[&target])
        }
        2 => Event::command("zorder", &[&id, *["top", "bottom", "1"].choose(rng)?]),
        _ => {
            let elastic: Vec<ElementId> = s
                .groups()
                .filter(|g| matches!(g.kind, GroupKind::Elastic(_)))
                .map(|g| g.id)
                .collect();
            let g = elastic.choose(rng)?.to_string();
            Event::command("moveTitle", &[&g, &format!("{:.2}", rng.random_range(0.0..1.0))])
        }
    })
}

/// A script of gestures (press, a few moves, release) and occasional
/// commands, generated against a private copy of `scene` so presses
/// track where things currently are. Every event applies cleanly.
pub fn random_script<R: Rng>(rng: &mut R, scene: &Scene, events: usize) -> Vec<Event> {
    let mut s = scene.clone();
    let mut out = Vec::with_capacity(events);
    let push = |s: &mut Scene, out: &mut Vec<Event>, e: Event| {
        s.apply_event(&e).expect("generated events apply");
        out.push(e);
    };
    while out.len() < events {
        if rng.random_bool(0.08) {
            if let Some(cmd) = random_command(rng, &s) {
                push(&mut s, &mut out, cmd);
                continue;
            }
        }
        let p = press_point(rng, &s);
        let button = if rng.random_bool(0.75) {
            Button::Left
        } else {
            Button::Right
        };
        push(&mut s, &mut out, Event::Down { x: p.x, y: p.y, button });
        let mut at = p;
        for _ in 0..rng.random_range(1..6) {
            if out.len() + 1 >= events {
                break;
            }
            at = at + Vector::new(rng.random_range(-40.0..40.0), rng.random_range(-40.0..40.0));
            push(&mut s, &mut out, Event::Move { x: at.x, y: at.y });
        }
        push(&mut s, &mut out, Event::Up);
    }
    out.truncate(events);
    out
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
