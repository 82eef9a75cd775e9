//! `zchain`: command-line front end for zigzags, z-orientations and their
//! Markov chains.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use zchain_core::coloring::{bipartite_without, color_factor, three_color};
use zchain_core::lab::{self, catalog_tau, Instance, TauName, DEFAULT_MAX_K};
use zchain_core::markov::{self, analyze, build_chain, rational_string, SimulationConfig};
use zchain_core::surface::{self, Triangulation, VertexMap};
use zchain_core::zigzag::{classify, EdgeType, ZOrientation, ZigzagSystem};

const MAX_K_ENV: &str = "ZCHAIN_MAX_K";

#[derive(Parser)]
#[command(
    name = "zchain",
    version,
    about = "Zigzags and Markov chains of triangulated surfaces"
)]
struct Cli {
    /// Human-readable summaries instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a catalogue triangulation in .tri format.
    Gen {
        #[command(subcommand)]
        which: GenKind,
    },
    /// Vertex/edge/face counts, Euler characteristic and orientability.
    Info { file: String },
    /// Canonical zigzag listing with pair indices.
    Zigzags { file: String },
    /// Edge and face types under a z-orientation.
    Classify {
        file: String,
        #[command(flatten)]
        tau: TauArgs,
    },
    /// Transition chain of a z-oriented triangulation.
    Chain {
        file: String,
        #[command(flatten)]
        tau: TauArgs,
        /// Include the exact stationary distribution.
        #[arg(long)]
        stationary: bool,
        /// Simulate a walk with this many recorded steps.
        #[arg(long, value_name = "N")]
        simulate: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Start state of the simulation (default: first vertex).
        #[arg(long)]
        start: Option<String>,
        /// Discarded steps before recording (default: 10 x vertex count).
        #[arg(long)]
        burn_in: Option<usize>,
    },
    /// Check the ergodicity characterisation over every z-orientation.
    Verify {
        file: String,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Connected sum of two triangulations along one face each.
    Consum {
        a: String,
        face_a: String,
        b: String,
        face_b: String,
        /// u1:v1,u2:v2,u3:v3 (use ';' between pairs if labels contain commas)
        #[arg(long)]
        map: String,
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    /// Add a vertex inside every face.
    Subdivide {
        file: String,
        #[arg(short = 'o', long)]
        output: Option<String>,
        /// Lift an all-type-II orientation (bit string) of the input.
        #[arg(long, value_name = "TAU_BITS")]
        lift: Option<String>,
    },
    /// Exact 3-colouring, optionally with a colour factor.
    Color {
        file: String,
        #[arg(long)]
        factor: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Octahedron {
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    Torus {
        k: usize,
        m: usize,
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TauArgs {
    /// Orientation bits in canonical pair order.
    #[arg(long, value_name = "BITS")]
    tau: Option<String>,
    /// Named orientation of a catalogue instance (tau1, tau2, tau3).
    #[arg(long, value_name = "NAME")]
    named: Option<String>,
    /// Orientation read from a .zor file.
    #[arg(long, value_name = "FILE")]
    zor: Option<String>,
}

/// A domain failure reported as `{"error": code, "detail": ...}`.
struct Failure {
    code: String,
    detail: String,
}

impl Failure {
    fn new(code: &str, detail: impl Into<String>) -> Self {
        Failure {
            code: code.to_string(),
            detail: detail.into(),
        }
    }
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new(e.code(), e.to_string())
            }
        }
    )*};
}

failure_from!(
    zchain_core::surface::SurfaceError,
    zchain_core::zigzag::ZigzagError,
    zchain_core::markov::MarkovError,
    zchain_core::coloring::ColoringError,
    zchain_core::lab::LabError
);

type Outcome = Result<String, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::new("ParseError", format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new("ParseError", format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<Triangulation, Failure> {
    Ok(surface::load(&read_input(path)?)?)
}

/// Writes `text` to `path`, or returns it for standard output.
fn emit(text: String, path: Option<&str>) -> Outcome {
    match path {
        None | Some("-") => Ok(text),
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::new("IoError", format!("{p}: {e}")))?;
            Ok(String::new())
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serialisable");
    s.push('\n');
    s
}

/// Face argument: labels separated by `;`, whitespace, or commas.
fn parse_face(text: &str) -> Result<[String; 3], Failure> {
    let parts: Vec<String> = if text.contains(';') {
        text.split(';').map(|s| s.trim().to_string()).collect()
    } else if text.split_whitespace().count() > 1 {
        text.split_whitespace().map(str::to_string).collect()
    } else {
        text.split(',').map(|s| s.trim().to_string()).collect()
    };
    parts
        .try_into()
        .map_err(|_| Failure::new("InvalidFace", format!("face {text:?} does not name three vertices")))
}

fn resolve_tau(tri: &Triangulation, system: &ZigzagSystem, args: &TauArgs) -> Result<ZOrientation, Failure> {
    let zor = if let Some(bits) = &args.tau {
        bits.parse::<ZOrientation>()?
    } else if let Some(name) = &args.named {
        let name: TauName = name.parse()?;
        let instance = Instance::detect(tri).ok_or(lab::LabError::UnknownInstance)?;
        catalog_tau(tri, system, instance, name)?
    } else if let Some(path) = &args.zor {
        ZOrientation::parse_zor(&read_input(path)?)?
    } else {
        unreachable!("clap requires one orientation source")
    };
    zor.check(system)?;
    Ok(zor)
}

fn run(cli: Cli) -> Outcome {
    let pretty = cli.pretty;
    match cli.command {
        Command::Gen { which } => {
            let (tri, out) = match which {
                GenKind::Octahedron { output } => (surface::octahedron(), output),
                GenKind::Torus { k, m, output } => (surface::torus_grid(k, m)?, output),
            };
            emit(surface::save(&tri), out.as_deref())
        }
        Command::Info { file } => {
            let tri = load(&file)?;
            let r = tri.report();
            if pretty {
                Ok(format!(
                    "V={} E={} F={} chi={} {}\n",
                    r.vertex_count,
                    r.edge_count,
                    r.face_count,
                    r.euler_characteristic,
                    if r.orientable { "orientable" } else { "non-orientable" }
                ))
            } else {
                Ok(to_json(&r))
            }
        }
        Command::Zigzags { file } => {
            let tri = load(&file)?;
            let sys = ZigzagSystem::new(&tri);
            if pretty {
                return Ok(sys.listing(&tri));
            }
            let pairs: Vec<Value> = sys
                .pairs()
                .iter()
                .enumerate()
                .map(|(i, (z, _))| json!({"index": i, "length": z.len(), "cycle": z.labels(&tri)}))
                .collect();
            Ok(to_json(&json!({"k": sys.k(), "pairs": pairs})))
        }
        Command::Classify { file, tau } => {
            let tri = load(&file)?;
            let sys = ZigzagSystem::new(&tri);
            let zor = resolve_tau(&tri, &sys, &tau)?;
            let (edges, faces) = classify(&tri, &sys, &zor)?;
            let edge_rows: Vec<Value> = edges
                .types()
                .iter()
                .enumerate()
                .map(|(e, t)| {
                    let [a, b] = tri.edges()[e].map(|v| tri.label(v));
                    match *t {
                        EdgeType::I => json!({"edge": [a, b], "type": "I"}),
                        EdgeType::II { tail, head } => {
                            json!({"edge": [a, b], "type": "II", "from": tri.label(tail), "to": tri.label(head)})
                        }
                    }
                })
                .collect();
            let face_rows: Vec<Value> = faces
                .types()
                .iter()
                .enumerate()
                .map(|(f, t)| json!({"face": tri.faces()[f].map(|v| tri.label(v)), "type": format!("{t:?}")}))
                .collect();
            if pretty {
                return Ok(format!(
                    "tau={} type I faces={} type II faces={} type I edges={}\n",
                    zor,
                    faces.count(zchain_core::FaceType::I),
                    faces.count(zchain_core::FaceType::II),
                    edges.type_i_count()
                ));
            }
            Ok(to_json(&json!({
                "tau": zor.to_string(),
                "all_type1": faces.all_type_i(),
                "all_type2": faces.all_type_ii(),
                "edges": edge_rows,
                "faces": face_rows,
            })))
        }
        Command::Chain {
            file,
            tau,
            stationary,
            simulate,
            seed,
            start,
            burn_in,
        } => {
            let tri = load(&file)?;
            let sys = ZigzagSystem::new(&tri);
            let zor = resolve_tau(&tri, &sys, &tau)?;
            let (edges, _) = classify(&tri, &sys, &zor)?;
            let chain = build_chain(&tri, &edges);
            let want_pi = stationary || simulate.is_some();
            let analysis = analyze(&chain, want_pi);
            let mut doc = serde_json::to_value(markov::ChainJson::new(&chain, &analysis)).expect("serialisable");
            if !stationary {
                doc.as_object_mut().unwrap().remove("stationary");
            }
            if let Some(steps) = simulate {
                let start = start.unwrap_or_else(|| tri.label(0).to_string());
                let mut config = SimulationConfig::new(steps, seed);
                if let Some(b) = burn_in {
                    config = config.with_burn_in(b);
                }
                let freq = markov::simulate(&chain, &start, config)?;
                let mut sim = json!({
                    "steps": steps,
                    "seed": seed,
                    "start": start,
                    "burn_in": config.burn_in.unwrap_or(10 * chain.len()),
                    "frequencies": chain.states().iter().cloned().zip(freq.iter().copied()).collect::<BTreeMap<_, _>>(),
                });
                if let Some(pi) = &analysis.stationary {
                    let pi: Vec<f64> = pi.iter().map(markov::to_f64).collect();
                    sim["tv_to_stationary"] = json!(markov::total_variation(&freq, &pi));
                }
                doc["simulation"] = sim;
            }
            if pretty {
                let mut s = format!(
                    "tau={} irreducible={} period={} ergodic={}\n",
                    zor,
                    analysis.irreducible,
                    analysis.period.map_or("-".into(), |p| p.to_string()),
                    analysis.ergodic
                );
                if let (true, Some(pi)) = (stationary, &analysis.stationary) {
                    for (v, p) in chain.states().iter().zip(pi) {
                        s.push_str(&format!("  pi({v}) = {}\n", rational_string(p)));
                    }
                }
                return Ok(s);
            }
            Ok(to_json(&doc))
        }
        Command::Verify { file, max_k } => {
            let tri = load(&file)?;
            let max_k = match max_k {
                Some(k) => k,
                None => match std::env::var(MAX_K_ENV) {
                    Ok(v) => v
                        .parse()
                        .map_err(|_| Failure::new("InvalidEnvironment", format!("{MAX_K_ENV}={v:?}")))?,
                    Err(_) => DEFAULT_MAX_K,
                },
            };
            let name = Instance::detect(&tri).map_or_else(|| file.clone(), |i| i.to_string());
            let report = lab::verify_theorem1(&tri, &name, max_k)?;
            if pretty {
                return Ok(format!(
                    "{}: k={} colorable={} chi={} A={} B={} C={} theorem1_holds={}\n",
                    report.instance,
                    report.k,
                    report.colorable,
                    report.chi,
                    report.case_count(lab::Case::A),
                    report.case_count(lab::Case::B),
                    report.case_count(lab::Case::C),
                    report.theorem1_holds
                ));
            }
            Ok(to_json(&report))
        }
        Command::Consum {
            a,
            face_a,
            b,
            face_b,
            map,
            output,
        } => {
            let ta = load(&a)?;
            let tb = load(&b)?;
            let map = VertexMap::parse(&map)?;
            let sum = surface::connected_sum(&ta, parse_face(&face_a)?, &tb, parse_face(&face_b)?, &map)?;
            emit(surface::save(&sum), output.as_deref())
        }
        Command::Subdivide { file, output, lift } => {
            let tri = load(&file)?;
            match lift {
                None => emit(surface::save(&surface::subdivide(&tri)?), output.as_deref()),
                Some(bits) => {
                    let zor: ZOrientation = bits.parse()?;
                    zor.check(&ZigzagSystem::new(&tri))?;
                    let lifted = lab::lifted_orientation(&tri, &zor)?;
                    let (edges, faces) = classify(&lifted.tri, &lifted.system, &lifted.zor)?;
                    let analysis = analyze(&build_chain(&lifted.tri, &edges), false);
                    if let Some(path) = output.as_deref().filter(|p| *p != "-") {
                        emit(surface::save(&lifted.tri), Some(path))?;
                    }
                    Ok(to_json(&json!({
                        "vertices": lifted.tri.vertex_count(),
                        "faces": lifted.tri.face_count(),
                        "k": lifted.system.k(),
                        "tau": lifted.zor.to_string(),
                        "all_type1": faces.all_type_i(),
                        "period": analysis.period,
                        "ergodic": analysis.ergodic,
                    })))
                }
            }
        }
        Command::Color { file, factor } => {
            let tri = load(&file)?;
            let coloring = three_color(&tri);
            let mut doc = json!({
                "colorable": coloring.is_some(),
                "coloring": coloring.as_ref().map(|c| {
                    (0..tri.vertex_count())
                        .map(|v| (tri.label(v).to_string(), c.color(v)))
                        .collect::<BTreeMap<_, _>>()
                }),
            });
            if factor {
                let f = color_factor(&tri);
                doc["factor"] =
                    json!(f
                        .as_ref()
                        .map(|f| f.vertices().iter().map(|&v| tri.label(v)).collect::<Vec<_>>()));
                doc["bipartite_without"] = match &f {
                    Some(f) => json!(bipartite_without(&tri, f)?),
                    None => Value::Null,
                };
            }
            Ok(to_json(&doc))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            println!("{}", json!({"error": f.code, "detail": f.detail}));
            ExitCode::from(1)
        }
    }
}
