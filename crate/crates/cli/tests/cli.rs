use std::io::{BufRead, BufReader, Write};
use std::net::TcpStream;
use std::path::{Path, PathBuf};
use std::process::{Child, Command, Output, Stdio};

use movable::persistence::{load, save};
use movable::scene::{replay_text, Script};
use movable::{demos, Scene};
use serde_json::Value;

fn movable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_movable")).args(args).output().unwrap()
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures/scripts")
        .join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn new_demo_writes_the_stored_document() {
    let dir = tempfile::tempdir().unwrap();
    for name in demos::DEMOS {
        let path = dir.path().join(format!("{name}.scene.json"));
        let o = movable(&["new-demo", name, "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            save(&demos::build(name).unwrap())
        );
    }
    let o = movable(&["new-demo", "castle"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn empty_script_returns_the_input_scene() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("in.scene.json");
    let script = dir.path().join("empty.script");
    let text = save(&demos::build_village());
    std::fs::write(&scene, &text).unwrap();
    std::fs::write(&script, "# nothing\n\n").unwrap();
    let o = movable(&[
        "replay",
        "--scene",
        scene.to_str().unwrap(),
        "--script",
        script.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim_end(), text);
}

#[test]
fn replay_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    for name in [
        "village-build.script",
        "personaldata-edit.script",
        "funcview-random0.script",
    ] {
        let path = corpus(name);
        let text = std::fs::read_to_string(&path).unwrap();
        let demo = text.lines().find_map(|l| l.strip_prefix("# scene: ")).unwrap().trim();
        let out = dir.path().join("out.scene.json");
        let o = movable(&[
            "replay",
            "--scene",
            demo,
            "--script",
            path.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--check-invariants",
        ]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
        let mut s = demos::build(demo).unwrap();
        replay_text(&mut s, &text, false).unwrap();
        assert_eq!(std::fs::read_to_string(&out).unwrap(), save(&s), "{name}");
    }
}

#[test]
fn script_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("bad.script");
    std::fs::write(&script, "# two presses\ndown 10 10\ndown 20 20\nup\n").unwrap();
    let o = movable(&["replay", "--scene", "village", "--script", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    std::fs::write(&script, "down 10 10\nwiggle\n").unwrap();
    let o = movable(&["replay", "--scene", "village", "--script", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn bad_inputs_exit_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("broken.scene.json");
    std::fs::write(&scene, "{\"formatVersion\": 1,").unwrap();
    for args in [
        vec!["check", "--scene", scene.to_str().unwrap()],
        vec!["check", "--scene", "/no/such/file"],
        vec!["replay", "--scene", "village"],
        vec!["frobnicate"],
    ] {
        assert_eq!(movable(&args).status.code(), Some(3), "{args:?}");
    }
    assert_eq!(movable(&["--help"]).status.code(), Some(0));
}

#[test]
fn check_reports_violations_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: Value = serde_json::from_str(&save(&demos::build_village())).unwrap();
    let ok = dir.path().join("ok.scene.json");
    std::fs::write(&ok, v.to_string()).unwrap();
    let o = movable(&["check", "--scene", ok.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));

    for e in v["elements"].as_array_mut().unwrap() {
        if e["type"] == "rect" {
            e["rect"]["width"] = 1.0.into();
            break;
        }
    }
    let bad = dir.path().join("bad.scene.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = movable(&["check", "--scene", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("invariant violated"));
}

#[test]
fn export_svg() {
    let o = movable(&["export-svg", "--scene", "personaldata"]);
    assert!(o.status.success());
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
    let o = movable(&[
        "export-svg",
        "--scene",
        "village",
        "--script",
        corpus("village-build.script").to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_ne!(stdout(&o), stdout(&movable(&["export-svg", "--scene", "village"])));
}

fn stdio_session(scene: &str, input: &str) -> Vec<Value> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_movable"))
        .args(["serve", "--scene", scene, "--stdio"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn as_lines(script: &Script) -> String {
    script
        .events
        .iter()
        .enumerate()
        .map(|(i, (_, e))| {
            let body: movable::scene::InboundBody = e.clone().into();
            serde_json::to_string(&movable::scene::Inbound {
                seq: i as u64 + 1,
                body,
            })
            .unwrap()
                + "\n"
        })
        .collect()
}

#[test]
fn stdio_session_replays_a_script() {
    let text = std::fs::read_to_string(corpus("village-build.script")).unwrap();
    let script = Script::parse(&text).unwrap();
    let out = stdio_session("village", &(as_lines(&script) + "{\"seq\":999,\"type\":\"save\"}\n"));
    assert_eq!(out[0]["type"], "render");
    assert!(out.iter().all(|m| m["type"] != "error"));
    let mut s = demos::build_village();
    replay_text(&mut s, &text, false).unwrap();
    let doc = &out.last().unwrap()["scene"];
    assert_eq!(save(&load(&doc.to_string()).unwrap()), save(&s));
}

struct Server(Child);

impl Drop for Server {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

fn start_server(scene: &str) -> (Server, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_movable"))
        .args(["serve", "--scene", scene, "--listen", "127.0.0.1:0"])
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut first = String::new();
    BufReader::new(child.stderr.take().unwrap())
        .read_line(&mut first)
        .unwrap();
    let addr = first.trim().strip_prefix("listening on ").unwrap().to_string();
    (Server(child), addr)
}

fn tcp_session(addr: &str, input: &str, expect: usize) -> Vec<Value> {
    let stream = TcpStream::connect(addr).unwrap();
    let mut w = stream.try_clone().unwrap();
    w.write_all(input.as_bytes()).unwrap();
    let mut reader = BufReader::new(stream);
    let mut out = Vec::new();
    let mut replies = 0;
    while replies < expect {
        let mut l = String::new();
        if reader.read_line(&mut l).unwrap() == 0 {
            break;
        }
        let v: Value = serde_json::from_str(&l).unwrap();
        if v["type"] == "ack" || v["type"] == "error" || v["type"] == "scene" {
            replies += 1;
        }
        out.push(v);
    }
    out
}

#[test]
fn tcp_sessions_are_independent_and_match_direct_replay() {
    let (_server, addr) = start_server("funcview");
    let text = std::fs::read_to_string(corpus("funcview-explore.script")).unwrap();
    let script = Script::parse(&text).unwrap();
    let n = script.events.len();
    let input = as_lines(&script) + &format!("{{\"seq\":{},\"type\":\"save\"}}\n", n + 1);

    let handles: Vec<_> = (0..3)
        .map(|_| {
            let (addr, input) = (addr.clone(), input.clone());
            std::thread::spawn(move || tcp_session(&addr, &input, n + 1))
        })
        .collect();
    let mut expected: Scene = demos::build_function_viewer();
    replay_text(&mut expected, &text, false).unwrap();
    for h in handles {
        let out = h.join().unwrap();
        assert_eq!(out[0]["type"], "render");
        assert!(out[0]["seq"].is_null());
        assert!(
            out.iter().all(|m| m["type"] != "error"),
            "{:?}",
            out.iter().find(|m| m["type"] == "error")
        );
        let doc = &out.last().unwrap()["scene"];
        assert_eq!(save(&load(&doc.to_string()).unwrap()), save(&expected));
    }

    let triple = "{\"seq\":1,\"type\":\"down\",\"x\":150.0,\"y\":200.0,\"button\":\"left\"}\n\
                  {\"seq\":2,\"type\":\"move\",\"x\":170.0,\"y\":210.0}\n\
                  {\"seq\":3,\"type\":\"up\"}\n";
    let out = tcp_session(&addr, triple, 3);
    assert!(out[1..].iter().any(|m| m["type"] == "render"));
}
