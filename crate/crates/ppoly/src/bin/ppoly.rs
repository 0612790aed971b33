use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use ppoly::graded::{self, GradedIndec};
use ppoly::homology;
use ppoly::polygon::{PolygonCtx, TaggedEdge};
use ppoly::quiver::{build_full_qp, build_ice_qp};
use ppoly::triangulation::{enumerate_all, exchange_graph, TaggedTriangulation};
use ppoly::verify;

#[derive(Parser)]
#[command(name = "ppoly", version, about = "Once-punctured polygons: triangulations, quivers, Hom and Ext")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct NArg {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    n: usize,
    /// Source edge as JSON, e.g. '{"kind":"arc","a1":1,"a2":3}'
    #[arg(long)]
    from: String,
    /// Target edge as JSON
    #[arg(long)]
    to: String,
}

#[derive(Args)]
struct TriArg {
    #[arg(long)]
    n: Option<usize>,
    /// Triangulation as JSON ({"n":..,"arcs":[..]}); defaults to the fan at vertex 1
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// All sides and tagged arcs in canonical order
    Arcs(NArg),
    /// Enumerate tagged triangulations
    Triangulations {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Flip one arc of a triangulation
    Flip {
        #[command(flatten)]
        tri: TriArg,
        #[arg(long)]
        arc: String,
    },
    /// Ice quiver with potential of a triangulation
    Quiver {
        #[command(flatten)]
        tri: TriArg,
        /// Keep the external arrows at every boundary vertex
        #[arg(long)]
        full: bool,
    },
    /// Hom descriptor between two indecomposables
    Hom(Pair),
    /// Degree and multiplicity of the stable Hom
    StableHom(Pair),
    /// dim Ext¹(from, to)
    Ext {
        #[command(flatten)]
        pair: Pair,
        /// Also list the middle terms of the nonsplit extensions
        #[arg(long)]
        middles: bool,
    },
    /// Auslander-Reiten quiver of the stable category
    ArQuiver(NArg),
    /// Exchange graph of tagged triangulations
    ExchangeGraph(NArg),
    /// Graded category
    Graded {
        #[command(subcommand)]
        cmd: GradedCmd,
    },
    /// Run verification suites
    Verify {
        #[arg(long)]
        n: Option<usize>,
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = ppoly::oracle::DEFAULT_T)]
        t: i64,
        /// Restrict the oracle to one prime (default: both 32003 and 65537)
        #[arg(long)]
        prime: Option<u64>,
        /// Sample size for n ≥ 7
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Args)]
struct GPair {
    #[arg(long)]
    n: usize,
    /// Graded object as JSON, e.g. '{"kind":"arc","i":1,"j":3}'
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Subcommand)]
enum GradedCmd {
    /// Window of the graded AR quiver
    ArQuiver {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        lo: i64,
        #[arg(long)]
        hi: Option<i64>,
    },
    /// dim Hom(x, y)
    Hom(GPair),
    /// dim Ext¹(x, y)
    Ext(GPair),
    /// Lift a triangulation and test the tilting conditions
    Tilt {
        #[command(flatten)]
        tri: TriArg,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, default_value_t = graded::DEFAULT_WINDOW)]
        window: i64,
    },
}

/// Failure kinds: a check that came out false, or bad input.
enum Failure {
    Check,
    Usage(String),
}

impl From<ppoly::Error> for Failure {
    fn from(e: ppoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn edge(ctx: &PolygonCtx, flag: &str, s: &str) -> Result<TaggedEdge, Failure> {
    let e: TaggedEdge = parse_json(flag, s)?;
    ctx.check_edge(e).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn graded_obj(ctx: &PolygonCtx, flag: &str, s: &str) -> Result<GradedIndec, Failure> {
    let x: GradedIndec = parse_json(flag, s)?;
    if !x.is_valid(ctx.n()) {
        return Err(Failure::Usage(format!("--{flag}: {x} is not an object for n = {}", ctx.n())));
    }
    Ok(x)
}

fn triangulation(t: &TriArg) -> Result<TaggedTriangulation, Failure> {
    match (&t.input, t.n) {
        (Some(s), _) => parse_json("input", s),
        (None, Some(n)) => Ok(TaggedTriangulation::fan(&PolygonCtx::new(n)?, 1)),
        (None, None) => Err(Failure::Usage("either --n or --input is required".into())),
    }
}

/// Write to stdout, treating a closed pipe as success.
fn out(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn emit<T: Serialize>(v: &T) {
    out(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn dot_unsupported(cmd: &str) -> Failure {
    Failure::Usage(format!("--format dot is not available for {cmd}"))
}

fn ar_quiver_json(ctx: &PolygonCtx) -> Result<(serde_json::Value, String), Failure> {
    let arcs = ctx.tagged_arcs();
    let mut arrows = Vec::new();
    let mut translations = Vec::new();
    for a in &arcs {
        let s = homology::ar_sequence(ctx, a)?;
        for m in &s.middle {
            arrows.push((s.left, *m));
            arrows.push((*m, s.right));
        }
        translations.push((s.right, s.left));
    }
    arrows.sort_by_key(|(x, y)| (ctx.edge_index(x), ctx.edge_index(y)));
    arrows.dedup();
    let mut dot = String::from("digraph ar {\n");
    for a in &arcs {
        dot.push_str(&format!("  \"{a}\";\n"));
    }
    for (x, y) in &arrows {
        dot.push_str(&format!("  \"{x}\" -> \"{y}\";\n"));
    }
    for (x, y) in &translations {
        dot.push_str(&format!("  \"{x}\" -> \"{y}\" [style=dashed];\n"));
    }
    dot.push_str("}\n");
    let v = json!({ "n": ctx.n(), "vertices": arcs, "arrows": arrows, "tau": translations });
    Ok((v, dot))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Arcs(NArg { n }) => {
            if fmt == Format::Dot {
                return Err(dot_unsupported("arcs"));
            }
            emit(&PolygonCtx::new(n)?.all_edges());
        }
        Cmd::Triangulations { n, count } => {
            let tris = enumerate_all(&PolygonCtx::new(n)?)?;
            if count {
                out(&format!("{}\n", tris.len()));
            } else if fmt == Format::Dot {
                return Err(dot_unsupported("triangulations"));
            } else {
                emit(&tris);
            }
        }
        Cmd::Flip { tri, arc } => {
            let t = triangulation(&tri)?;
            let a = edge(t.ctx(), "arc", &arc)?;
            let (t2, added) = t.flip(&a)?;
            if fmt == Format::Dot {
                out(&build_ice_qp(&t2).to_dot());
            } else {
                emit(&json!({ "removed": a, "added": added, "triangulation": t2 }));
            }
        }
        Cmd::Quiver { tri, full } => {
            let t = triangulation(&tri)?;
            let q = if full { build_full_qp(&t) } else { build_ice_qp(&t) };
            if fmt == Format::Dot {
                out(&q.to_dot());
            } else {
                emit(&q);
            }
        }
        Cmd::Hom(p) => {
            let ctx = PolygonCtx::new(p.n)?;
            let (a, b) = (edge(&ctx, "from", &p.from)?, edge(&ctx, "to", &p.to)?);
            emit(&homology::hom_module(&ctx, &a, &b));
        }
        Cmd::StableHom(p) => {
            let ctx = PolygonCtx::new(p.n)?;
            let (a, b) = (edge(&ctx, "from", &p.from)?, edge(&ctx, "to", &p.to)?);
            emit(&homology::stable_hom(&ctx, &a, &b));
        }
        Cmd::Ext { pair: p, middles } => {
            let ctx = PolygonCtx::new(p.n)?;
            let (a, b) = (edge(&ctx, "from", &p.from)?, edge(&ctx, "to", &p.to)?);
            let d = homology::ext1_dim(&ctx, &a, &b);
            if middles {
                emit(&json!({ "dim": d, "middles": homology::extension_list(&ctx, &a, &b) }));
            } else {
                out(&format!("{d}\n"));
            }
        }
        Cmd::ArQuiver(NArg { n }) => {
            let (v, dot) = ar_quiver_json(&PolygonCtx::new(n)?)?;
            if fmt == Format::Dot {
                out(&dot);
            } else {
                emit(&v);
            }
        }
        Cmd::ExchangeGraph(NArg { n }) => {
            let g = exchange_graph(&PolygonCtx::new(n)?)?;
            if fmt == Format::Dot {
                out(&g.to_dot());
            } else {
                emit(&json!({ "n": n, "vertices": g.triangulations, "edges": g.edges }));
            }
        }
        Cmd::Graded { cmd } => run_graded(cmd, fmt)?,
        Cmd::Verify { n, suite, t, prime, samples } => {
            let suites: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                match verify::SUITES.iter().find(|s| **s == suite) {
                    Some(s) => vec![*s],
                    None => {
                        return Err(Failure::Usage(format!(
                            "--suite: unknown suite {suite}; expected one of {} or all",
                            verify::SUITES.join(", ")
                        )))
                    }
                }
            };
            let primes: &'static [u64] = match prime {
                None => &ppoly::oracle::linalg::PRIMES,
                Some(p) if p == ppoly::oracle::linalg::PRIMES[0] => &ppoly::oracle::linalg::PRIMES[..1],
                Some(p) if p == ppoly::oracle::linalg::PRIMES[1] => &ppoly::oracle::linalg::PRIMES[1..],
                Some(p) => return Err(Failure::Usage(format!("--prime: {p} is not one of 32003, 65537"))),
            };
            let opts = verify::Options { t, primes, seed: cli.seed, samples };
            let report = verify::run(&suites, n, &opts)?;
            emit(&report);
            if !report.pass {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn run_graded(cmd: GradedCmd, fmt: Format) -> Result<(), Failure> {
    match cmd {
        GradedCmd::ArQuiver { n, lo, hi } => {
            let ctx = PolygonCtx::new(n)?;
            let hi = hi.unwrap_or(lo + 4 * n as i64);
            let w = graded::ar_window(&ctx, lo, hi);
            if fmt == Format::Dot {
                out(&w.to_dot());
            } else {
                emit(&w);
            }
        }
        GradedCmd::Hom(p) => {
            let ctx = PolygonCtx::new(p.n)?;
            let (x, y) = (graded_obj(&ctx, "x", &p.x)?, graded_obj(&ctx, "y", &p.y)?);
            out(&format!("{}\n", graded::graded_hom_dim(&ctx, &x, &y)?));
        }
        GradedCmd::Ext(p) => {
            let ctx = PolygonCtx::new(p.n)?;
            let (x, y) = (graded_obj(&ctx, "x", &p.x)?, graded_obj(&ctx, "y", &p.y)?);
            out(&format!("{}\n", graded::graded_ext1_dim(&ctx, &x, &y)));
        }
        GradedCmd::Tilt { tri, vertex, window } => {
            let t = triangulation(&tri)?;
            let lift = graded::lift_triangulation(&t, vertex)?;
            let ok = graded::is_tilting_window(t.ctx(), &lift, -window..=window);
            emit(&json!({ "lift": lift, "window": window, "tilting": ok }));
            if !ok {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
