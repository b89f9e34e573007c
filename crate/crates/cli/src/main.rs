//! `movable`: replay event scripts, serve interactive sessions, build demo
//! scenes, check invariants and export SVG.
//!
//! Exit codes: 0 success, 2 invariant violation, 3 input, script or
//! protocol error.

use std::io::{self, BufReader, Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand};
use movable::scene::{replay_text, serve_stream, to_svg, Violation};
use movable::{demos, persistence, Scene};

#[derive(Parser)]
#[command(name = "movable", version, about = "Headless direct-manipulation engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an event script to a scene and write the result.
    Replay {
        /// Scene document, or the name of a demo scene.
        #[arg(long)]
        scene: String,
        /// Event script; `-` reads standard input.
        #[arg(long)]
        script: PathBuf,
        /// Output document; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check invariants after every event and once more at the end.
        #[arg(long)]
        check_invariants: bool,
    },
    /// Accept protocol sessions over TCP, one scene copy per connection.
    Serve {
        #[arg(long)]
        scene: String,
        /// Address to listen on, e.g. 127.0.0.1:7878. Port 0 picks a free one.
        #[arg(long, default_value = "127.0.0.1:7878")]
        listen: String,
        /// Serve exactly one session on standard input and output instead.
        #[arg(long, conflicts_with = "listen")]
        stdio: bool,
    },
    /// Write one of the demo scenes.
    NewDemo {
        #[arg(value_parser = demos::DEMOS)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full invariant suite on a scene.
    Check {
        #[arg(long)]
        scene: String,
    },
    /// Render a scene, optionally after a script, as SVG.
    ExportSvg {
        #[arg(long)]
        scene: String,
        #[arg(long)]
        script: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Invariants(Vec<String>),
    Input(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invariants(list)) => {
            for v in list {
                eprintln!("invariant violated: {v}");
            }
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Replay {
            scene,
            script,
            out,
            check_invariants,
        } => {
            let mut s = open_scene(&scene)?;
            let text = read_input(&script)?;
            let report = replay_text(&mut s, &text, check_invariants)
                .map_err(|e| Failure::Input(format!("{}: {e}", script.display())))?;
            let mut problems: Vec<String> = report
                .violations
                .iter()
                .map(|(line, v)| format!("{}: line {line}: {v}", script.display()))
                .collect();
            if check_invariants {
                problems.extend(s.check_full().iter().map(Violation::to_string));
            }
            write_output(out.as_deref(), &persistence::save(&s))?;
            if problems.is_empty() {
                Ok(())
            } else {
                Err(Failure::Invariants(problems))
            }
        }
        Command::Serve { scene, listen, stdio } => {
            let s = open_scene(&scene)?;
            if stdio {
                let mut s = s;
                return Ok(serve_stream(&mut s, BufReader::new(io::stdin()), io::stdout())?);
            }
            serve_tcp(s, &listen)
        }
        Command::NewDemo { name, out } => {
            let s = demos::build(&name).ok_or_else(|| Failure::Input(format!("unknown demo `{name}`")))?;
            write_output(out.as_deref(), &persistence::save(&s))
        }
        Command::Check { scene } => {
            let problems = open_scene(&scene)?.check_full();
            if problems.is_empty() {
                println!("ok");
                Ok(())
            } else {
                Err(Failure::Invariants(problems.iter().map(Violation::to_string).collect()))
            }
        }
        Command::ExportSvg { scene, script, out } => {
            let mut s = open_scene(&scene)?;
            if let Some(path) = script {
                let text = read_input(&path)?;
                replay_text(&mut s, &text, false).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            write_output(out.as_deref(), &to_svg(&s.render()))
        }
    }
}

/// A path to a scene document, or a demo name when no such file exists.
fn open_scene(arg: &str) -> Result<Scene, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(s) = demos::build(arg) {
            return Ok(s);
        }
    }
    let text = read_input(path)?;
    persistence::load(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.write_all(b"\n")?;
            Ok(())
        }
    }
}

fn serve_tcp(scene: Scene, listen: &str) -> Result<(), Failure> {
    let listener = TcpListener::bind(listen).map_err(|e| Failure::Input(format!("{listen}: {e}")))?;
    eprintln!("listening on {}", listener.local_addr()?);
    for stream in listener.incoming() {
        let stream = match stream {
            Ok(s) => s,
            Err(e) => {
                eprintln!("accept failed: {e}");
                continue;
            }
        };
        let mut s = scene.clone();
        thread::spawn(move || {
            let peer = stream.peer_addr().map(|a| a.to_string()).unwrap_or_default();
            if let Err(e) = session(&mut s, stream) {
                eprintln!("{peer}: {e}");
            }
        });
    }
    Ok(())
}

fn session(scene: &mut Scene, stream: TcpStream) -> io::Result<()> {
    stream.set_nodelay(true)?;
    let reader = BufReader::new(stream.try_clone()?);
    serve_stream(scene, reader, stream)
}
