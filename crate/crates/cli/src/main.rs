//! The `matchlift` command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 verification failure,
//! 3 search exhausted where exactness was requested, 64 usage error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::json;

use matchlift_cli::format::{
    emit_coloring, emit_instance_json, emit_instance_text, parse_coloring, parse_instance,
};
use matchlift_cli::gen::{generate, Family, QuadBase};
use matchlift_cli::report::{
    print_value, rational_str, strong_coloring_report, violation_value,
};
use matchlift_core::{
    default_min_vertices, degeneracy_order, edge_color_target, exact_strong_coloring,
    exact_strong_index, is_ab_graph, maximum_average_degree, strong_color_greedy, strong_color_ic,
    strong_color_mad, strong_color_oneplanar, strong_color_optimal, strong_color_split,
    verify_proper_edge, verify_strong, verify_strong_assignment, vizing_edge_color, Drawing,
    Graph, PipelineParams, Search, StrongColoring,
};

const EXIT_INVALID_INPUT: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "matchlift",
    version,
    about = "Strong edge colorings with certified bounds, by contracting matchings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Mad,
    Oneplanar,
    Split,
    Ic,
    Optimal,
    Greedy,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact maximum average degree with a witness subgraph
    Mad {
        /// Instance file, or `-` for stdin
        input: String,
    },
    /// Degeneracy and the peeling order certifying it
    Degeneracy { input: String },
    /// Hereditary sparsity check: every subgraph H on at least min-vertices
    /// vertices must satisfy |E(H)| <= a|V(H)| - b
    Sparsity {
        input: String,
        /// Slope a, as an integer or `p/q`
        #[arg(long)]
        a: String,
        /// Offset b, as an integer or `p/q`
        #[arg(long)]
        b: String,
        /// Smallest subgraph size the bound applies to (default: 1 when
        /// b = 0, else 3)
        #[arg(long)]
        min_vertices: Option<usize>,
    },
    /// Proper edge coloring: fan insertion, or a targeted k-coloring search
    EdgeColor {
        input: String,
        /// Exact number of colors to aim for (at least the maximum degree)
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 200_000)]
        node_limit: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Strong edge coloring through one of the pipelines
    StrongColor {
        input: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Palette override for the degree-8/9 extension route
        #[arg(long)]
        palette: Option<usize>,
        #[arg(long, default_value_t = 200_000)]
        node_limit: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock timings (reports stop being byte-reproducible)
        #[arg(long)]
        timings: bool,
        /// Also write the coloring as `edge color` lines to this file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact strong chromatic index by branch and bound
    Oracle {
        input: String,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
    },
    /// Verify a coloring file against an instance
    Verify {
        input: String,
        /// Coloring file with `edge color` lines
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Generate an instance from a named family
    Gen {
        /// h-delta | quad-optimal | ic-planar | random-planar |
        /// random-simple | path | cycle | star | complete |
        /// complete-bipartite
        #[arg(long)]
        family: String,
        /// Maximum degree (h-delta)
        #[arg(long)]
        delta: Option<usize>,
        /// Quadrangulation base: cube | pdw (quad-optimal)
        #[arg(long)]
        base: Option<String>,
        /// Wheel size (quad-optimal pdw, ic-planar)
        #[arg(long)]
        k: Option<usize>,
        /// Crossing pair count (ic-planar)
        #[arg(long)]
        pairs: Option<usize>,
        /// Vertex count (random-planar, random-simple, path, cycle,
        /// complete) or leaf count (star)
        #[arg(long)]
        n: Option<usize>,
        /// Edge count (random-simple)
        #[arg(long)]
        edges: Option<usize>,
        /// Part sizes (complete-bipartite)
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every applicable pipeline over a generated sweep, one JSON line
    /// per run
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        timings: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::new(EXIT_INVALID_INPUT, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("matchlift: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(EXIT_INVALID_INPUT, format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_INVALID_INPUT, format!("{path}: {e}")))
    }
}

fn load_instance(path: &str) -> Result<(Graph, Option<Drawing>), Failure> {
    let text = read_input(path)?;
    Ok(parse_instance(&text)?)
}

fn parse_rational(text: &str) -> Result<Rational64, Failure> {
    text.parse::<Rational64>()
        .map_err(|e| Failure::new(EXIT_INVALID_INPUT, format!("bad rational `{text}`: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Mad { input } => {
            let (graph, _) = load_instance(&input)?;
            let report = maximum_average_degree(&graph);
            print_value(&json!({
                "mad": rational_str(report.mad),
                "witness": report.witness,
            }));
            Ok(())
        }
        Cmd::Degeneracy { input } => {
            let (graph, _) = load_instance(&input)?;
            let report = degeneracy_order(&graph.weighted_view());
            print_value(&json!({
                "degeneracy": report.degeneracy,
                "ordering": report.ordering,
            }));
            Ok(())
        }
        Cmd::Sparsity {
            input,
            a,
            b,
            min_vertices,
        } => {
            let (graph, _) = load_instance(&input)?;
            let a = parse_rational(&a)?;
            let b = parse_rational(&b)?;
            let min_vertices = min_vertices.unwrap_or_else(|| default_min_vertices(b));
            let verdict = is_ab_graph(&graph.weighted_view(), a, b, min_vertices)?;
            print_value(&json!({
                "a": rational_str(verdict.a),
                "b": rational_str(verdict.b),
                "min_vertices": verdict.min_vertices,
                "holds": verdict.holds,
                "violator": verdict.violator,
            }));
            Ok(())
        }
        Cmd::EdgeColor {
            input,
            target,
            node_limit,
            seed,
        } => {
            let (graph, _) = load_instance(&input)?;
            let (outcome, coloring) = match target {
                None => ("found", Some(vizing_edge_color(&graph))),
                Some(k) => match edge_color_target(&graph, k, node_limit, seed)? {
                    Search::Found(ec) => ("found", Some(ec)),
                    Search::Impossible => ("impossible", None),
                    Search::Exhausted => ("exhausted", None),
                },
            };
            match coloring {
                Some(ec) => {
                    let valid = verify_proper_edge(&graph, &ec).is_empty();
                    print_value(&json!({
                        "outcome": outcome,
                        "color_count": ec.color_count,
                        "colors": ec.colors,
                        "valid": valid,
                        "seed": seed,
                    }));
                    if !valid {
                        return Err(Failure::new(EXIT_VERIFICATION, "edge coloring invalid"));
                    }
                    Ok(())
                }
                None => {
                    print_value(&json!({ "outcome": outcome, "seed": seed }));
                    if outcome == "exhausted" {
                        Err(Failure::new(EXIT_EXHAUSTED, "search exhausted"))
                    } else {
                        Ok(())
                    }
                }
            }
        }
        Cmd::StrongColor {
            input,
            method,
            palette,
            node_limit,
            seed,
            timings,
            output,
        } => {
            let (graph, drawing) = load_instance(&input)?;
            let params = PipelineParams {
                node_limit,
                seed,
                palette,
            };
            let start = Instant::now();
            let coloring = match run_pipeline(&graph, drawing.as_ref(), method, &params) {
                Ok(c) => c,
                Err(f) if f.code == EXIT_EXHAUSTED => {
                    print_value(&json!({ "outcome": "exhausted", "seed": seed }));
                    return Err(f);
                }
                Err(f) => return Err(f),
            };
            let elapsed = timings.then(|| start.elapsed().as_millis());
            let violations = verify_strong(&graph, &coloring);
            let report = strong_coloring_report(
                &coloring,
                violations.is_empty(),
                seed,
                node_limit,
                palette,
                elapsed,
            );
            print_value(&report);
            if let Some(path) = output {
                std::fs::write(&path, emit_coloring(&coloring.colors))
                    .map_err(|e| Failure::new(EXIT_INVALID_INPUT, e.to_string()))?;
            }
            if !violations.is_empty() {
                return Err(Failure::new(
                    EXIT_VERIFICATION,
                    "pipeline output failed verification",
                ));
            }
            Ok(())
        }
        Cmd::Oracle { input, node_limit } => {
            let (graph, _) = load_instance(&input)?;
            match exact_strong_index(&graph, node_limit) {
                Search::Found(k) => {
                    print_value(&json!({ "strong_chromatic_index": k }));
                    Ok(())
                }
                Search::Exhausted => {
                    print_value(&json!({ "outcome": "exhausted" }));
                    Err(Failure::new(EXIT_EXHAUSTED, "search exhausted"))
                }
                Search::Impossible => unreachable!("some coloring always exists"),
            }
        }
        Cmd::Verify { input, coloring } => {
            let (graph, _) = load_instance(&input)?;
            let text = std::fs::read_to_string(&coloring)
                .map_err(|e| Failure::new(EXIT_INVALID_INPUT, e.to_string()))?;
            let assignment = parse_coloring(&text, graph.edge_count())?;
            let violations = verify_strong_assignment(&graph, &assignment);
            print_value(&json!({
                "valid": violations.is_empty(),
                "violations": violations.iter().map(violation_value).collect::<Vec<_>>(),
            }));
            if violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::new(EXIT_VERIFICATION, String::new()))
            }
        }
        Cmd::Gen {
            family,
            delta,
            base,
            k,
            pairs,
            n,
            edges,
            a,
            b,
            seed,
            format,
            out,
        } => {
            let family = build_family(&family, delta, base, k, pairs, n, edges, a, b)?;
            let instance = generate(&family, seed)?;
            let text = match format {
                FormatArg::Text => emit_instance_text(&instance.graph, instance.drawing.as_ref()),
                FormatArg::Json => emit_instance_json(&instance.graph, instance.drawing.as_ref()),
            };
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::new(EXIT_INVALID_INPUT, e.to_string()))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Cmd::Bench { seed, timings } => run_bench(seed, timings),
    }
}

fn run_pipeline(
    graph: &Graph,
    drawing: Option<&Drawing>,
    method: MethodArg,
    params: &PipelineParams,
) -> Result<StrongColoring, Failure> {
    let empty = Drawing::empty();
    let drawn = drawing.unwrap_or(&empty);
    match method {
        MethodArg::Mad => Ok(strong_color_mad(graph, params)),
        MethodArg::Greedy => Ok(strong_color_greedy(graph)),
        MethodArg::Oneplanar => Ok(strong_color_oneplanar(graph, drawing, params)?),
        MethodArg::Split => Ok(strong_color_split(graph, drawn, params)?),
        MethodArg::Ic => Ok(strong_color_ic(graph, drawn, params)?),
        MethodArg::Optimal => Ok(strong_color_optimal(graph, drawn, params)?),
        MethodArg::Exact => match exact_strong_coloring(graph, params.node_limit) {
            Search::Found(c) => Ok(c),
            Search::Exhausted => Err(Failure::new(
                EXIT_EXHAUSTED,
                "exact search exhausted; raise --node-limit",
            )),
            Search::Impossible => unreachable!("some coloring always exists"),
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn build_family(
    name: &str,
    delta: Option<usize>,
    base: Option<String>,
    k: Option<usize>,
    pairs: Option<usize>,
    n: Option<usize>,
    edges: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
) -> Result<Family, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::new(EXIT_USAGE, format!("--{flag} is required for {name}")))
    };
    match name {
        "h-delta" => Ok(Family::HDelta {
            delta: need(delta, "delta")?,
        }),
        "quad-optimal" => {
            let base = match base.as_deref() {
                None | Some("cube") => QuadBase::Cube,
                Some("pdw") | Some("pseudo-double-wheel") => QuadBase::PseudoDoubleWheel {
                    k: need(k, "k")?,
                },
                Some(other) => {
                    return Err(Failure::new(
                        EXIT_USAGE,
                        format!("unknown base `{other}` (cube | pdw)"),
                    ))
                }
            };
            Ok(Family::QuadOptimal { base })
        }
        "ic-planar" => Ok(Family::IcPlanar {
            k: need(k, "k")?,
            pairs: need(pairs, "pairs")?,
        }),
        "random-planar" => Ok(Family::RandomPlanar { n: need(n, "n")? }),
        "random-simple" => Ok(Family::RandomSimple {
            n: need(n, "n")?,
            edges: need(edges, "edges")?,
        }),
        "path" => Ok(Family::Path { n: need(n, "n")? }),
        "cycle" => Ok(Family::Cycle { n: need(n, "n")? }),
        "star" => Ok(Family::Star {
            leaves: need(n, "n")?,
        }),
        "complete" => Ok(Family::Complete { n: need(n, "n")? }),
        "complete-bipartite" => Ok(Family::CompleteBipartite {
            a: need(a, "a")?,
            b: need(b, "b")?,
        }),
        other => Err(Failure::new(
            EXIT_USAGE,
            format!("unknown family `{other}`"),
        )),
    }
}

fn run_bench(seed: u64, timings: bool) -> Result<(), Failure> {
    let sweep: Vec<(&str, Family, Vec<MethodArg>)> = vec![
        (
            "random-simple",
            Family::RandomSimple { n: 20, edges: 40 },
            vec![MethodArg::Mad, MethodArg::Greedy],
        ),
        (
            "random-simple",
            Family::RandomSimple { n: 40, edges: 90 },
            vec![MethodArg::Mad, MethodArg::Greedy],
        ),
        (
            "random-planar",
            Family::RandomPlanar { n: 24 },
            vec![
                MethodArg::Mad,
                MethodArg::Greedy,
                MethodArg::Oneplanar,
                MethodArg::Split,
            ],
        ),
        (
            "quad-optimal",
            Family::QuadOptimal {
                base: QuadBase::Cube,
            },
            vec![MethodArg::Optimal, MethodArg::Split, MethodArg::Oneplanar],
        ),
        (
            "quad-optimal",
            Family::QuadOptimal {
                base: QuadBase::PseudoDoubleWheel { k: 5 },
            },
            vec![MethodArg::Optimal, MethodArg::Oneplanar],
        ),
        (
            "ic-planar",
            Family::IcPlanar { k: 5, pairs: 2 },
            vec![MethodArg::Ic, MethodArg::Split, MethodArg::Oneplanar],
        ),
        (
            "h-delta",
            Family::HDelta { delta: 6 },
            vec![MethodArg::Ic, MethodArg::Greedy, MethodArg::Exact],
        ),
    ];
    let params = PipelineParams {
        node_limit: 500_000,
        seed,
        palette: None,
    };
    for (name, family, methods) in sweep {
        let instance =
            generate(&family, seed).map_err(|e| Failure::new(EXIT_INVALID_INPUT, e.to_string()))?;
        let g = &instance.graph;
        for method in methods {
            let start = Instant::now();
            let coloring = run_pipeline(g, instance.drawing.as_ref(), method, &params)?;
            let elapsed = start.elapsed().as_millis();
            let valid = verify_strong(g, &coloring).is_empty();
            let mut line = serde_json::Map::new();
            line.insert("family".into(), name.into());
            line.insert("n".into(), g.vertex_count().into());
            line.insert("m".into(), g.edge_count().into());
            line.insert("delta".into(), g.max_degree().into());
            line.insert("method".into(), coloring.method.tag().into());
            line.insert("color_count".into(), coloring.color_count.into());
            line.insert(
                "certified_bound".into(),
                coloring
                    .certified_bound
                    .as_ref()
                    .map(|b| serde_json::Value::from(rational_str(b.value)))
                    .unwrap_or(serde_json::Value::Null),
            );
            line.insert("valid".into(), valid.into());
            line.insert("seed".into(), seed.into());
            if timings {
                line.insert("elapsed_ms".into(), (elapsed as u64).into());
            }
            println!(
                "{}",
                serde_json::to_string(&serde_json::Value::Object(line)).expect("serializable")
            );
            if !valid {
                return Err(Failure::new(EXIT_VERIFICATION, "bench run invalid"));
            }
        }
    }
    Ok(())
}
