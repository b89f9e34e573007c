mod common;

use std::io::Cursor;

use movable::persistence::{load, save};
use movable::scene::{replay, serve_stream, Event, Inbound, InboundBody, Outbound, Script, Session};
use movable::{demos, Button, CursorHint, ElementId};
use serde_json::{json, Value};

fn serve(scene: &mut movable::Scene, input: &str) -> Vec<Value> {
    let mut out = Vec::new();
    serve_stream(scene, Cursor::new(input.to_string()), &mut out).unwrap();
    String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn line(seq: u64, body: InboundBody) -> String {
    serde_json::to_string(&Inbound { seq, body }).unwrap() + "\n"
}

#[test]
fn connect_sends_the_scene_first() {
    let mut s = demos::build_village();
    let out = serve(&mut s, "");
    assert_eq!(out.len(), 1);
    assert_eq!(out[0]["type"], "render");
    assert_eq!(out[0]["seq"], Value::Null);
    assert_eq!(out[0]["renderList"], serde_json::to_value(s.render()).unwrap());
}

#[test]
fn a_drag_produces_acks_and_renders() {
    let mut s = demos::build_village();
    let a = s.anchor(ElementId(2)).unwrap();
    let p = a + movable::Vector::new(30.0, 30.0);
    let input = [
        line(
            1,
            InboundBody::Down {
                x: p.x,
                y: p.y,
                button: Button::Left,
            },
        ),
        line(
            2,
            InboundBody::Move {
                x: p.x + 30.0,
                y: p.y + 10.0,
            },
        ),
        line(3, InboundBody::Up),
    ]
    .concat();
    let out = serve(&mut s, &input);
    let renders = out
        .iter()
        .filter(|m| m["type"] == "render" && !m["seq"].is_null())
        .count();
    assert!(renders >= 1);
    for seq in 1..=3 {
        let ack = out.iter().position(|m| m["type"] == "ack" && m["seq"] == seq).unwrap();
        if out[ack]["changed"] == true {
            assert_eq!(out[ack + 1]["type"], "render");
            assert_eq!(out[ack + 1]["seq"], seq);
        }
    }
    assert_eq!(s.anchor(ElementId(2)).unwrap(), a + movable::Vector::new(30.0, 10.0));
    let last = out.iter().rev().find(|m| m["type"] == "render").unwrap();
    assert_eq!(last["renderList"], serde_json::to_value(s.render()).unwrap());
}

#[test]
fn unchanged_events_report_cursor_changes_once() {
    let mut s = demos::build_village();
    let p = s.anchor(ElementId(2)).unwrap() + movable::Vector::new(30.0, 30.0);
    let input = [
        line(1, InboundBody::Move { x: p.x, y: p.y }),
        line(2, InboundBody::Move { x: p.x + 1.0, y: p.y }),
        line(3, InboundBody::Move { x: 5.0, y: 5.0 }),
    ]
    .concat();
    let out = serve(&mut s, &input);
    let kinds: Vec<&str> = out[1..].iter().map(|m| m["type"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["ack", "cursor", "ack", "ack", "cursor"]);
    assert_eq!(out[2]["cursor"], json!(CursorHint::Move));
    assert_eq!(out[5]["cursor"], "default");
    assert!(out[1..]
        .iter()
        .filter(|m| m["type"] == "ack")
        .all(|m| m["changed"] == false));
}

#[test]
fn malformed_lines_do_not_end_the_session() {
    let mut s = demos::build_village();
    let input = format!(
        "{{\"seq\":4,\"type\":\"down\",\"x\":1}}\nnot json\n\n{}{}",
        line(
            5,
            InboundBody::Command {
                name: "frobnicate".into(),
                args: vec![]
            }
        ),
        line(
            6,
            InboundBody::Command {
                name: "hide".into(),
                args: vec!["2".into()]
            }
        ),
    );
    let out = serve(&mut s, &input);
    assert_eq!(out[1]["type"], "error");
    assert_eq!(out[1]["seq"], 4);
    assert_eq!(out[2]["type"], "error");
    assert_eq!(out[2]["seq"], Value::Null);
    assert_eq!(out[3]["type"], "error");
    assert_eq!(out[3]["seq"], 5);
    assert_eq!(out[4], json!({"type": "ack", "seq": 6, "changed": true}));
    assert_eq!(out[5]["type"], "render");
    assert!(!s.is_effectively_visible(ElementId(2)));
}

#[test]
fn sequencing_errors_are_reported() {
    let mut s = demos::build_village();
    let input = [line(1, InboundBody::Up), line(2, InboundBody::Move { x: 1.0, y: 1.0 })].concat();
    let out = serve(&mut s, &input);
    assert_eq!(out[1]["type"], "error");
    assert_eq!(out[2]["type"], "ack");
}

#[test]
fn save_and_load() {
    let mut s = demos::build_village();
    let other = demos::build_function_viewer();
    let doc: Value = serde_json::from_str(&save(&other)).unwrap();
    let input = [
        line(1, InboundBody::Save),
        line(2, InboundBody::Load { scene: doc }),
        line(
            3,
            InboundBody::Load {
                scene: json!({"formatVersion": 9}),
            },
        ),
    ]
    .concat();
    let out = serve(&mut s, &input);
    assert_eq!(out[1]["type"], "scene");
    assert_eq!(
        out[1]["scene"],
        serde_json::from_str::<Value>(&save(&demos::build_village())).unwrap()
    );
    assert_eq!(out[2], json!({"type": "ack", "seq": 2, "changed": true}));
    let loaded = load(&save(&other)).unwrap();
    assert_eq!(out[3]["renderList"], serde_json::to_value(loaded.render()).unwrap());
    assert_eq!(out[4]["type"], "error");
    assert_eq!(save(&s), save(&other));
}

#[test]
fn served_scripts_match_direct_replay() {
    for seed in 0..6 {
        let mut r = common::rng(seed);
        let start = common::random_scene(&mut r);
        let events = common::random_script(&mut r, &start, 200);
        let input: String = events
            .iter()
            .enumerate()
            .map(|(i, e)| line(i as u64 + 1, e.clone().into()))
            .collect();
        let mut served = start.clone();
        let out = serve(&mut served, &input);
        assert!(out.iter().all(|m| m["type"] != "error"));
        let mut direct = start.clone();
        replay(&mut direct, &Script::from_events(events), false).unwrap();
        assert_eq!(save(&served), save(&direct));
        let want = serde_json::to_value(direct.render()).unwrap();
        let last = out.iter().rev().find(|m| m["type"] == "render").unwrap();
        assert_eq!(last["renderList"]["items"], want["items"]);
        let cursor = out
            .iter()
            .rev()
            .find_map(|m| match m["type"].as_str() {
                Some("cursor") => Some(&m["cursor"]),
                Some("render") => Some(&m["renderList"]["cursor"]),
                _ => None,
            })
            .unwrap();
        assert_eq!(cursor, &want["cursor"]);
    }
}

#[test]
fn session_can_share_a_scene_between_calls() {
    let mut s = demos::build_village();
    let mut session = Session::new();
    assert!(matches!(session.greeting(&s), Outbound::Render { seq: None, .. }));
    let e: InboundBody = Event::command("hide", &["3"]).into();
    let reply = session.handle_line(&mut s, &line(7, e));
    assert_eq!(reply[0], Outbound::Ack { seq: 7, changed: true });
}

/// The JSON examples in the protocol document parse and print back
/// field for field.
#[test]
fn documented_examples_round_trip() {
    let doc = include_str!("../../../docs/protocol.md");
    let mut seen = 0;
    for block in doc.split("```json").skip(1) {
        let body = block.split("```").next().unwrap();
        for l in body.lines().filter(|l| l.trim_start().starts_with('{')) {
            let v: Value = serde_json::from_str(l).unwrap_or_else(|e| panic!("{l}: {e}"));
            let back = if v["type"] == "render" || v.get("renderList").is_some() {
                continue;
            } else if matches!(v["type"].as_str(), Some("ack" | "cursor" | "error" | "scene")) {
                serde_json::to_value(serde_json::from_value::<Outbound>(v.clone()).unwrap()).unwrap()
            } else {
                serde_json::to_value(serde_json::from_value::<Inbound>(v.clone()).unwrap()).unwrap()
            };
            assert_eq!(back, v, "{l}");
            seen += 1;
        }
    }
    assert!(seen >= 10, "only {seen} examples checked");
}

#[test]
fn documented_render_example_round_trips() {
    let doc = include_str!("../../../docs/protocol.md");
    let start = doc.find("<!-- render example -->").unwrap();
    let block = &doc[start..];
    let body = block.split("```json").nth(1).unwrap().split("```").next().unwrap();
    let v: Value = serde_json::from_str(body).unwrap();
    let back = serde_json::to_value(serde_json::from_value::<Outbound>(v.clone()).unwrap()).unwrap();
    assert_eq!(back, v);
}
