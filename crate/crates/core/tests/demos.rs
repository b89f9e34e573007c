use movable::controls_groups::GroupKind;
use movable::demos::{self, add_building, build_personal_data, build_village, DEMOS};
use movable::persistence::{load, save};
use movable::scene::Event;
use movable::{ElementId, Point, Rect, Scene};

fn elastic_frame(s: &Scene, id: ElementId) -> Rect {
    match &s.group(id).unwrap().kind {
        GroupKind::Elastic(e) => e.frame,
        _ => panic!("{id} is not elastic"),
    }
}

fn elastic_titled(s: &Scene, title: &str) -> ElementId {
    s.groups()
        .find(|g| matches!(&g.kind, GroupKind::Elastic(e) if e.title.text == title))
        .map(|g| g.id)
        .unwrap_or_else(|| panic!("no group titled {title}"))
}

#[test]
fn every_demo_passes_the_full_suite() {
    for name in DEMOS {
        let s = demos::build(name).unwrap();
        let violations = s.check_full();
        assert!(violations.is_empty(), "{name}: {violations:#?}");
    }
}

#[test]
fn every_visible_element_renders() {
    for name in DEMOS {
        let s = demos::build(name).unwrap();
        let list = s.render();
        for e in s.elements() {
            assert!(
                list.items.iter().any(|it| it.element == e.id),
                "{name}: {} not drawn",
                e.id
            );
        }
    }
}

#[test]
fn hiding_country_shrinks_both_frames() {
    let mut s = build_personal_data();
    let address = elastic_titled(&s, "Address");
    let outer = elastic_titled(&s, "Personal data");
    assert_eq!(s.parent_of(address), Some(outer));
    let country = s
        .elements()
        .find(|e| matches!(&e.shape, movable::Shape::Control(c) if c.caption == "Country"))
        .map(|e| s.parent_of(e.id).unwrap())
        .unwrap();
    let (a0, o0) = (elastic_frame(&s, address), elastic_frame(&s, outer));
    let hide = Event::command("hide", &[&country.to_string()]);
    assert!(s.apply_event(&hide).unwrap());
    let (a1, o1) = (elastic_frame(&s, address), elastic_frame(&s, outer));
    assert!(a1.height < a0.height);
    assert_eq!(a1.top, a0.top);
    assert!(o1.height < o0.height);
    assert!(s.check_invariants().is_empty());
    s.apply_event(&Event::command("show", &[&country.to_string()])).unwrap();
    assert_eq!(elastic_frame(&s, address), a0);
    assert_eq!(elastic_frame(&s, outer), o0);
}

#[test]
fn adding_a_house_registers_its_parts() {
    let mut s = build_village();
    let before = s.mover().registry().len();
    let original = save(&s);
    s.apply_event(&Event::command("addBuilding", &["house2", "300", "420"]))
        .unwrap();
    assert_eq!(s.mover().registry().len(), before + 2);
    let base = *s.mover().registry().iter().rev().nth(1).unwrap();
    assert!(s.check_invariants().is_empty());
    s.apply_event(&Event::command("delete", &[&base.to_string()])).unwrap();
    assert_eq!(save(&s), original);
}

#[test]
fn house_moves_and_resizes_with_its_roof() {
    let mut s = Scene::new();
    let ids = add_building(&mut s, "house1", Point::new(100.0, 100.0)).unwrap();
    let (base, roof) = (ids[0], ids[1]);
    let apex_before = s.element(roof).unwrap().shape.defining_points()[2];
    for e in [
        Event::Down {
            x: 140.0,
            y: 130.0,
            button: movable::Button::Left,
        },
        Event::Move { x: 150.0, y: 125.0 },
        Event::Up,
    ] {
        s.apply_event(&e).unwrap();
    }
    let apex = s.element(roof).unwrap().shape.defining_points()[2];
    assert_eq!(apex, apex_before.translated(10.0, -5.0));
    // pulling the east side handle widens body and roof together
    for e in [
        Event::Down {
            x: 193.0,
            y: 150.0,
            button: movable::Button::Left,
        },
        Event::Move { x: 213.0, y: 150.0 },
        Event::Up,
    ] {
        s.apply_event(&e).unwrap();
    }
    let movable::Shape::Rect(r) = &s.element(base).unwrap().shape else {
        panic!()
    };
    assert_eq!(r.rect.width, 100.0);
    assert!(s.check_invariants().is_empty());
    // the roof base vertices refuse direct drags and the roof does not rotate
    let right = Event::Down {
        x: 150.0,
        y: 80.0,
        button: movable::Button::Right,
    };
    assert!(!s.apply_event(&right).unwrap() || s.mover().grab().is_none());
    assert!(s.mover().grab().is_none());
}

#[test]
fn demo_round_trip_is_byte_identical() {
    for name in DEMOS {
        let text = save(&demos::build(name).unwrap());
        assert_eq!(save(&load(&text).unwrap()), text, "{name}");
    }
}
