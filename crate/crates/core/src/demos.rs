//! Ready-made scenes: a village to build, a personal-data form and a
//! function viewer.

use crate::controls_groups::{ControlEl, DominantGroup, ElasticGroup, GroupKind, Subordinate, WeldGroup};
use crate::elements::{
    CircleEl, CircleGeom, CrescentEl, PieEl, PolygonEl, PolylineEl, RectangleEl, SemicircleEl, Shape, StripEl,
};
use crate::funcexpr::CurveSpec;
use crate::geometry::{Point, Rect, Vector};
use crate::plot::{AreaFunction, AreaUnderCurve, CommentEl, Orientation, PlottingArea, ScaleEl};
use crate::scene::{Scene, SceneError};
use crate::style::{Color, Font, Style};
use crate::ElementId;

/// Building kinds accepted by [`add_building`].
pub const BUILDINGS: [&str; 5] = ["house1", "house2", "house3", "house4", "hangar"];

/// Demo names accepted by [`build`].
pub const DEMOS: [&str; 3] = ["village", "personaldata", "funcview"];

pub fn build(name: &str) -> Option<Scene> {
    match name {
        "village" => Some(build_village()),
        "personaldata" => Some(build_personal_data()),
        "funcview" => Some(build_function_viewer()),
        _ => None,
    }
}

fn roof(base: &Rect, rest: &[(f64, f64)]) -> Result<PolygonEl, SceneError> {
    let [nw, ne, _, _] = base.corners();
    let mut vs = vec![nw, ne];
    vs.extend(rest.iter().map(|&(x, y)| Point::new(base.left + x, base.top + y)));
    let mut p = PolygonEl::new(vs)?.convex()?;
    p.locked = vec![0, 1];
    Ok(p)
}

/// Adds a building whose body has its top-left corner at `at`. Houses are
/// a rectangle with a welded roof; the hangar is a single semicircle
/// standing on `at`.
pub fn add_building(scene: &mut Scene, kind: &str, at: Point) -> Result<Vec<ElementId>, SceneError> {
    let (w, h, rest, wall, top): (f64, f64, Vec<(f64, f64)>, Color, Color) = match kind {
        "house1" => (
            80.0,
            60.0,
            vec![(40.0, -40.0)],
            Color::rgb(0xf2, 0xd4, 0x9b),
            Color::rgb(0xb0, 0x3a, 0x2e),
        ),
        "house2" => (
            100.0,
            50.0,
            vec![(85.0, -30.0), (15.0, -30.0)],
            Color::rgb(0xe0, 0xe0, 0xd0),
            Color::rgb(0x55, 0x55, 0x77),
        ),
        "house3" => (
            60.0,
            90.0,
            vec![(30.0, -55.0)],
            Color::rgb(0xcf, 0xe3, 0xf5),
            Color::rgb(0x2e, 0x5a, 0x88),
        ),
        "house4" => (
            120.0,
            60.0,
            vec![(120.0, -20.0), (60.0, -45.0), (0.0, -20.0)],
            Color::rgb(0xf5, 0xe6, 0xc8),
            Color::rgb(0x7a, 0x4a, 0x2a),
        ),
        "hangar" => {
            let s = SemicircleEl::new(Point::new(at.x + 60.0, at.y), 60.0)?;
            let id = scene.add_element(Shape::Semicircle(s), Style::filled(Color::rgb(0xa8, 0xb0, 0xb8)));
            return Ok(vec![id]);
        }
        other => {
            return Err(SceneError::Command(format!(
                "unknown building `{other}`, expected one of {}",
                BUILDINGS.join(", ")
            )))
        }
    };
    let body = Rect::new(at.x, at.y, w, h);
    let mut base = RectangleEl::new(body).with_min_size(10.0);
    if kind == "house3" {
        base = base.with_partitions(vec![0.5])?;
    }
    let roof = roof(&body, &rest)?;
    let b = scene.add_element(Shape::Rect(base), Style::filled(wall));
    let r = scene.add_element(Shape::Polygon(roof), Style::filled(top));
    let g = scene.add_group(GroupKind::Weld(WeldGroup { base: b, roof: r }))?;
    Ok(vec![b, r, g])
}

pub fn build_village() -> Scene {
    let mut s = Scene::new();
    let road = StripEl::new(Point::new(20.0, 330.0), Point::new(860.0, 330.0), 14.0).expect("road");
    s.add_element(Shape::Strip(road), Style::filled(Color::rgb(0x9a, 0x9a, 0x9a)));
    let sun = CircleEl::new(Point::new(780.0, 70.0), 30.0).expect("sun");
    s.add_element(Shape::Circle(sun), Style::filled(Color::rgb(0xff, 0xd7, 0x40)));
    let moon = CrescentEl::new(
        CircleGeom {
            center: Point::new(660.0, 70.0),
            radius: 24.0,
        },
        CircleGeom {
            center: Point::new(674.0, 62.0),
            radius: 20.0,
        },
    )
    .expect("moon");
    s.add_element(Shape::Crescent(moon), Style::filled(Color::rgb(0xee, 0xee, 0xaa)));
    for (kind, x) in [
        ("house1", 40.0),
        ("house2", 170.0),
        ("house3", 320.0),
        ("house4", 430.0),
    ] {
        add_building(&mut s, kind, Point::new(x, 240.0)).expect("house");
    }
    add_building(&mut s, "hangar", Point::new(600.0, 300.0)).expect("hangar");
    for x in [110.0, 290.0] {
        let crown = CircleEl::new(Point::new(x + 20.0, 180.0), 18.0).expect("tree");
        s.add_element(Shape::Circle(crown), Style::filled(Color::rgb(0x3c, 0x8c, 0x3c)));
    }
    let fence = PolylineEl::new(vec![
        Point::new(40.0, 380.0),
        Point::new(120.0, 372.0),
        Point::new(200.0, 380.0),
        Point::new(280.0, 372.0),
    ])
    .expect("fence");
    s.add_element(Shape::Polyline(fence), Style::default());
    let flowers = PieEl::from_weights(
        Point::new(780.0, 400.0),
        30.0,
        &[
            (3.0, Color::rgb(0xe0, 0x40, 0x60)),
            (2.0, Color::rgb(0xf0, 0xa0, 0x20)),
            (1.0, Color::rgb(0x80, 0x40, 0xc0)),
        ],
    )
    .expect("flower bed");
    s.add_element(Shape::Pie(flowers), Style::default());
    s
}

/// One form row: caption label plus a text box the label follows.
fn add_row(s: &mut Scene, caption: &str, at: Point) -> Result<ElementId, SceneError> {
    let label = ControlEl::new(Rect::new(at.x, at.y, 90.0, 22.0), "label", caption);
    let text = ControlEl::new(Rect::new(at.x + 100.0, at.y, 170.0, 22.0), "textbox", "");
    let l = s.add_element(Shape::Control(label), Style::filled(Color::TRANSPARENT));
    let t = s.add_element(Shape::Control(text), Style::filled(Color::WHITE));
    s.add_group(GroupKind::Dominant(DominantGroup {
        dominant: t,
        subordinates: vec![Subordinate {
            id: l,
            offset: Vector::default(),
        }],
    }))
}

fn add_block(s: &mut Scene, title: &str, rows: &[&str], at: Point) -> Result<(ElementId, Vec<ElementId>), SceneError> {
    let ids = rows
        .iter()
        .enumerate()
        .map(|(i, r)| add_row(s, r, Point::new(at.x, at.y + 30.0 * i as f64)))
        .collect::<Result<Vec<_>, _>>()?;
    let g = s.add_group(GroupKind::Elastic(ElasticGroup::new(ids.clone(), title)))?;
    Ok((g, ids))
}

pub fn build_personal_data() -> Scene {
    let mut s = Scene::new();
    let (name, _) = add_block(&mut s, "Name", &["First name", "Last name"], Point::new(50.0, 60.0)).expect("name");
    let (contacts, _) = add_block(&mut s, "Contacts", &["Phone", "E-mail"], Point::new(50.0, 160.0)).expect("contacts");
    let (address, _) = add_block(
        &mut s,
        "Address",
        &["Street", "City", "Zip code", "Country"],
        Point::new(50.0, 250.0),
    )
    .expect("address");
    let mut outer = ElasticGroup::new(vec![name, contacts, address], "Personal data");
    outer.font = Font {
        bold: true,
        ..Font::default()
    };
    s.add_group(GroupKind::Elastic(outer)).expect("personal data");
    for (i, caption) in ["OK", "Cancel"].into_iter().enumerate() {
        let b = ControlEl::new(Rect::new(380.0, 60.0 + 34.0 * i as f64, 80.0, 26.0), "button", caption);
        s.add_element(Shape::Control(b), Style::default());
    }
    s
}

/// Dominant plotting area with both scales and a caption as subordinates.
fn add_plot(s: &mut Scene, plot: PlottingArea, caption: &str) -> Result<ElementId, SceneError> {
    let r = plot.rect;
    let (xr, yr) = (plot.x_range, plot.y_range);
    let p = s.add_element(Shape::Plot(plot), Style::default());
    let xs = ScaleEl {
        owner: Some(p),
        orientation: Orientation::Horizontal,
        origin: Point::new(r.left, r.bottom() + 4.0),
        length: r.width,
        range: xr,
        ticks: 8,
    };
    let ys = ScaleEl {
        owner: Some(p),
        orientation: Orientation::Vertical,
        origin: Point::new(r.left - 4.0, r.top),
        length: r.height,
        range: yr,
        ticks: 6,
    };
    let x = s.add_element(Shape::Scale(xs), Style::default());
    let y = s.add_element(Shape::Scale(ys), Style::default());
    let c = s.add_element(
        Shape::Comment(CommentEl::new(Point::new(r.left, r.top - 22.0), caption)),
        Style::default(),
    );
    let subordinates = [x, y, c]
        .map(|id| Subordinate {
            id,
            offset: Vector::default(),
        })
        .to_vec();
    s.add_group(GroupKind::Dominant(DominantGroup {
        dominant: p,
        subordinates,
    }))?;
    Ok(p)
}

pub fn build_function_viewer() -> Scene {
    let mut s = Scene::new();
    let mut main = PlottingArea::new(Rect::new(80.0, 50.0, 400.0, 260.0), (-6.0, 6.0), (-3.0, 3.0)).expect("plot");
    main.add_curve(CurveSpec::y_of_x("sin(x)"), Color::rgb(0xc0, 0x20, 0x20))
        .expect("sin");
    main.add_curve(CurveSpec::y_of_x("x^2/4-2"), Color::rgb(0x20, 0x60, 0xc0))
        .expect("parabola");
    main.add_curve(CurveSpec::y_of_x("tg(x)"), Color::rgb(0x20, 0x90, 0x40))
        .expect("tangent");
    add_plot(&mut s, main, "Functions of x").expect("main plot");
    let mut round = PlottingArea::new(Rect::new(560.0, 50.0, 260.0, 260.0), (-1.5, 1.5), (-1.5, 1.5)).expect("plot");
    round
        .add_curve(
            CurveSpec::Parametric {
                x: "cos(r)".into(),
                y: "sin(2*r)".into(),
                r_range: (0.0, std::f64::consts::TAU),
            },
            Color::rgb(0x80, 0x20, 0xa0),
        )
        .expect("parametric");
    add_plot(&mut s, round, "Parametric curve").expect("parametric plot");
    let list: Vec<ElementId> = ["x", "x^2", "sin(x)", "cos(x)", "exp(x)", "ln(x)"]
        .iter()
        .enumerate()
        .map(|(i, f)| {
            s.add_element(
                Shape::Comment(CommentEl::new(Point::new(880.0, 70.0 + 24.0 * i as f64), *f)),
                Style::default(),
            )
        })
        .collect();
    s.add_group(GroupKind::Elastic(ElasticGroup::new(list, "Functions")))
        .expect("function list");
    let area = AreaUnderCurve::new(
        Rect::new(80.0, 380.0, 400.0, 220.0),
        (0.0, 4.0),
        (-1.5, 1.5),
        AreaFunction::Formula { text: "sin(x)".into() },
        0.5,
        3.0,
    )
    .expect("area");
    s.add_element(Shape::AreaUnderCurve(area), Style::default());
    let joints = vec![
        Point::new(0.0, 0.5),
        Point::new(1.0, 2.0),
        Point::new(2.0, 1.0),
        Point::new(3.0, 2.5),
        Point::new(4.0, 1.5),
    ];
    let broken = AreaUnderCurve::new(
        Rect::new(560.0, 380.0, 260.0, 220.0),
        (0.0, 4.0),
        (0.0, 3.0),
        AreaFunction::Polyline { joints },
        1.0,
        3.0,
    )
    .expect("polyline area");
    s.add_element(Shape::AreaUnderCurve(broken), Style::default());
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::save;

    #[test]
    fn builders_are_deterministic() {
        for name in DEMOS {
            assert_eq!(save(&build(name).unwrap()), save(&build(name).unwrap()), "{name}");
        }
    }

    #[test]
    fn hangar_is_one_element() {
        let mut s = build_village();
        let before = s.elements().count();
        let ids = add_building(&mut s, "hangar", Point::new(10.0, 10.0)).unwrap();
        assert_eq!(ids.len(), 1);
        assert_eq!(s.elements().count(), before + 1);
        assert!(add_building(&mut s, "castle", Point::new(0.0, 0.0)).is_err());
    }
}
