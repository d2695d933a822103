use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use stableset_core::bounds::{bound_report, check_schlafli_counterexample};
use stableset_core::corpus::all_graphs_up_to;
use stableset_core::graph::{
    c6, claw, fig_p, fig_p_line_graph, find_claw, is_claw_free, is_simplicial_graph,
    schlafli_graph, simplicial_clique_violation, w6, CliqueRef, Graph, Hypergraph, Vertex,
};
use stableset_core::io::{
    parse_edge_list, parse_graph6, parse_graph6_lines, parse_hyperedges, parse_labeling,
};
use stableset_core::poly::{
    diag, edge_matching_poly, independence_poly, relative_poly, vertex_matching_poly, Labeling, Var,
};
use stableset_core::scalar::rational_string;
use stableset_core::stability::{
    claw_witness_restriction, count_real_roots, decide_hypergraph_same_phase,
    decide_real_stable_independence, hypergraph_witness, rayleigh_sides, rayleigh_witness_point,
    same_phase_probe, strongly_rayleigh_probe, RayleighPoints,
};
use stableset_core::suites::{run_suite, Suite, SuiteConfig, SuiteReport};
use stableset_core::tree::{
    induced_path_tree, induced_path_tree_at_clique, path_tree, simplicial_clique_tree,
};

const MAX_N_GUARD: usize = 8;

#[derive(Parser)]
#[command(
    name = "stableset",
    version,
    about = "Independence and matching polynomial toolkit"
)]
struct Cli {
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a multivariate graph polynomial.
    Poly {
        /// Edge list, graph6 file (.g6), or builtin (@schlafli, @c6, @w6, @claw, @figP, @figP-line).
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Which::Independence)]
        which: Which,
        /// Labeling file mapping each vertex to a target vertex.
        #[arg(long)]
        relative_to: Option<PathBuf>,
        /// Restrict to the all-ones ray.
        #[arg(long)]
        diagonal: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a path tree, induced path tree or clique tree.
    Tree {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        kind: TreeKind,
        /// Root vertex (name or index).
        #[arg(long)]
        root: Option<String>,
        /// Comma-separated clique (names or indices).
        #[arg(long)]
        clique: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Decide a structural or stability property.
    Check {
        /// Graph source, or a hyperedge list for hypergraph-same-phase.
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Root bounds for one graph.
    Bounds {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a theorem suite over a graph corpus.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// graph6 file to use instead of the built-in enumeration.
        #[arg(long)]
        graphs: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Independence,
    VertexMatching,
    EdgeMatching,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeKind {
    Path,
    Induced,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    ClawFree,
    Simplicial,
    SamePhase,
    RealStable,
    HypergraphSamePhase,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    StabilityIffClawfree,
    Diagram,
    Divisibility,
    Bounds,
    Hypergraph,
    All,
}

/// Result of a command: text to emit and the exit status.
struct Outcome {
    body: String,
    refuted: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            refuted: false,
        }
    }
}

fn builtin(name: &str) -> Option<Graph> {
    Some(match name {
        "schlafli" => schlafli_graph(),
        "c6" => c6(),
        "w6" => w6(),
        "claw" => claw(),
        "figP" => fig_p(),
        "figP-line" => fig_p_line_graph(),
        _ => return None,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(src: &str) -> Result<Graph> {
    if let Some(name) = src.strip_prefix('@') {
        return builtin(name).ok_or_else(|| anyhow!("unknown builtin graph @{name}"));
    }
    let path = Path::new(src);
    let text = read(path)?;
    let is_g6 = matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6" | "graph6")
    );
    let g = if is_g6 {
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| anyhow!("{src}: no graph6 line"))?;
        parse_graph6(line)
    } else {
        parse_edge_list(&text)
    };
    g.with_context(|| format!("parsing {src}"))
}

fn load_hypergraph(src: &str) -> Result<Hypergraph> {
    if src.starts_with('@') {
        let g = load_graph(src)?;
        let edges = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        return Ok(Hypergraph::new(g.n(), edges)?);
    }
    parse_hyperedges(&read(Path::new(src))?).with_context(|| format!("parsing {src}"))
}

/// A vertex by name, falling back to its index.
fn resolve_vertex(g: &Graph, s: &str) -> Result<Vertex> {
    let s = s.trim();
    if let Some(v) = (0..g.n()).find(|&v| g.name(v) == s) {
        return Ok(v);
    }
    match s.parse::<Vertex>() {
        Ok(v) if v < g.n() => Ok(v),
        _ => bail!("no vertex {s:?} (graph has {} vertices)", g.n()),
    }
}

fn resolve_clique(g: &Graph, s: &str) -> Result<CliqueRef> {
    let vs = s
        .split(',')
        .map(|t| resolve_vertex(g, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(CliqueRef::new(g, vs)?)
}

fn pretty(v: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn cmd_poly(
    src: &str,
    which: Which,
    relative_to: Option<&Path>,
    diagonal: bool,
    format: Format,
) -> Result<Outcome> {
    let g = load_graph(src)?;
    let edges = g.edges();
    let (p, name): (_, Box<dyn Fn(Var) -> String>) = match which {
        Which::Independence => (
            independence_poly(&g)?,
            Box::new(|v: Var| g.name(v as Vertex)),
        ),
        Which::VertexMatching => (
            vertex_matching_poly(&g)?,
            Box::new(|v: Var| g.name(v as Vertex)),
        ),
        Which::EdgeMatching => {
            let names: Vec<String> = edges
                .iter()
                .map(|&(u, v)| format!("{}{}", g.name(u), g.name(v)))
                .collect();
            (
                edge_matching_poly(&g)?,
                Box::new(move |v: Var| names[v as usize].clone()),
            )
        }
    };
    let (p, name): (_, Box<dyn Fn(Var) -> String>) = match relative_to {
        Some(path) => {
            let map = parse_labeling(&read(path)?)
                .with_context(|| format!("parsing {}", path.display()))?;
            (
                relative_poly(&p, &Labeling::from_map(map))?,
                Box::new(|v: Var| v.to_string()),
            )
        }
        None => (p, name),
    };
    let text = if diagonal {
        diag(&p).to_text("z")
    } else {
        p.to_text(&*name)
    };
    let body = match format {
        Format::Json => pretty(&json!({
            "graph": src,
            "which": match which {
                Which::Independence => "independence",
                Which::VertexMatching => "vertex-matching",
                Which::EdgeMatching => "edge-matching",
            },
            "diagonal": diagonal,
            "terms": if diagonal { Value::Null } else { p.num_terms().into() },
            "polynomial": text,
        }))?,
        _ => text + "\n",
    };
    Ok(Outcome::ok(body))
}

fn cmd_tree(
    src: &str,
    kind: TreeKind,
    root: Option<&str>,
    clique: Option<&str>,
    dot: bool,
) -> Result<Outcome> {
    let g = load_graph(src)?;
    let body = match kind {
        TreeKind::Path | TreeKind::Induced => {
            let t = match (kind, root, clique) {
                (TreeKind::Induced, None, Some(k)) => {
                    induced_path_tree_at_clique(&g, &resolve_clique(&g, k)?)?
                }
                (_, Some(r), None) => {
                    let v = resolve_vertex(&g, r)?;
                    if matches!(kind, TreeKind::Path) {
                        path_tree(&g, v)?
                    } else {
                        induced_path_tree(&g, v)?
                    }
                }
                _ => bail!(
                    "give exactly one of --root or --clique (--clique only for --kind induced)"
                ),
            };
            if dot {
                t.to_dot()
            } else {
                pretty(
                    &json!({ "kind": kind_name(kind), "nodes": t.len(), "canonical": t.canonical(), "tree": t.to_json() }),
                )?
            }
        }
        TreeKind::Clique => {
            let k = clique.ok_or_else(|| anyhow!("--kind clique needs --clique"))?;
            let t = simplicial_clique_tree(&g, &resolve_clique(&g, k)?)?;
            if dot {
                t.to_dot()
            } else {
                pretty(
                    &json!({ "kind": "clique", "nodes": t.len(), "canonical": t.canonical(), "tree": t.to_json() }),
                )?
            }
        }
    };
    Ok(Outcome::ok(body))
}

fn kind_name(k: TreeKind) -> &'static str {
    match k {
        TreeKind::Path => "path",
        TreeKind::Induced => "induced",
        TreeKind::Clique => "clique",
    }
}

fn verdict(check: &str, src: &str, holds: bool, extra: Value) -> Result<Outcome> {
    let mut v =
        json!({ "check": check, "graph": src, "verdict": if holds { "holds" } else { "refuted" } });
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    Ok(Outcome {
        body: pretty(&v)?,
        refuted: !holds,
    })
}

fn cmd_check(src: &str, what: What, samples: usize, seed: u64) -> Result<Outcome> {
    if let What::HypergraphSamePhase = what {
        let h = load_hypergraph(src)?;
        let holds = decide_hypergraph_same_phase(&h);
        let extra = match hypergraph_witness(&h) {
            Some(w) => {
                let roots = count_real_roots(&w.diagonal(), None)?;
                json!({ "witness": w, "witness_diagonal": w.diagonal().to_text("z"), "real_roots": roots })
            }
            None => json!({}),
        };
        return verdict("hypergraph-same-phase", src, holds, extra);
    }
    let g = load_graph(src)?;
    let names = |vs: &[Vertex]| vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>();
    match what {
        What::ClawFree => {
            let extra = find_claw(&g).map_or(
                json!({}),
                |c| json!({ "claw": { "center": g.name(c.center), "leaves": names(&c.leaves) } }),
            );
            verdict("claw-free", src, is_claw_free(&g), extra)
        }
        What::Simplicial => {
            let holds = is_simplicial_graph(&g);
            let extra = match find_claw(&g) {
                _ if holds => json!({}),
                Some(c) => {
                    json!({ "claw": { "center": g.name(c.center), "leaves": names(&c.leaves) } })
                }
                None => {
                    // No clique is simplicial; show why the closed neighborhood of a vertex fails.
                    let w = (0..g.n()).find_map(|v| {
                        let k: Vec<Vertex> = vec![v];
                        simplicial_clique_violation(&g, &k).map(|(u, a, b)| names(&[u, a, b]))
                    });
                    json!({ "reason": "no simplicial clique", "violation": w })
                }
            };
            verdict("simplicial", src, holds, extra)
        }
        What::SamePhase => match claw_witness_restriction(&g) {
            Some((c, d)) => {
                let roots = count_real_roots(&d, None)?;
                let extra = json!({
                    "decided_by": "claw",
                    "witness": {
                        "claw": { "center": g.name(c.center), "leaves": names(&c.leaves) },
                        "direction": "all-ones on the claw",
                        "restriction": d.to_text("z"),
                        "real_roots": roots,
                    },
                });
                verdict("same-phase", src, false, extra)
            }
            None => {
                let probe = same_phase_probe(&independence_poly(&g)?, samples, seed)?;
                if probe.refuted() {
                    bail!("claw-free graph refuted by probe: {:?}", probe.witness);
                }
                verdict(
                    "same-phase",
                    src,
                    true,
                    json!({ "decided_by": "claw-free", "probe": probe }),
                )
            }
        },
        What::RealStable => {
            let holds = decide_real_stable_independence(&g)?;
            let p = independence_poly(&g)?;
            let extra = match rayleigh_witness_point(&g) {
                Some((x, j, k)) => {
                    let (lhs, rhs) = rayleigh_sides(&p, &x, j, k)?;
                    let point: Vec<String> = (0..g.n())
                        .map(|v| rational_string(&x[&(v as Var)]))
                        .collect();
                    json!({
                        "decided_by": "induced-p3",
                        "witness": { "x": point, "j": g.name(j as Vertex), "k": g.name(k as Vertex),
                                     "lhs": rational_string(&lhs), "rhs": rational_string(&rhs) },
                    })
                }
                None => {
                    let probe = strongly_rayleigh_probe(&p, RayleighPoints::Seeded(samples), seed)?;
                    if probe.refuted() {
                        bail!("complete graph refuted by probe: {:?}", probe.witness);
                    }
                    json!({ "decided_by": "complete", "probe": probe })
                }
            };
            verdict("real-stable", src, holds, extra)
        }
        What::HypergraphSamePhase => unreachable!("handled above"),
    }
}

fn cmd_bounds(src: &str, format: Format) -> Result<Outcome> {
    let g = load_graph(src)?;
    let report = bound_report(&g, src)?;
    let counterexample = if src == "@schlafli" {
        Some(check_schlafli_counterexample()?)
    } else {
        None
    };
    let sound = report.sound();
    let body = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            if let (Value::Object(m), Some(c)) = (&mut v, &counterexample) {
                m.insert("counterexample".into(), serde_json::to_value(c)?);
            }
            pretty(&v)?
        }
        Format::Csv => {
            let mut s = String::from("bound,status,value\n");
            for e in &report.bounds {
                let status = serde_json::to_value(e.status)?;
                let b = e.bound.as_deref().unwrap_or("");
                s += &format!("{},{},{}\n", e.name, status.as_str().unwrap_or(""), b);
            }
            s
        }
        _ => {
            let lambda =
                report.lambda1.exact.clone().unwrap_or_else(|| {
                    format!("in [{}, {}]", report.lambda1.lo, report.lambda1.hi)
                });
            let mut s = format!("diagonal: {}\nlambda1: {lambda}\n", report.diagonal);
            for e in &report.bounds {
                let status = serde_json::to_value(e.status)?;
                s += &format!("{}: {}\n", e.name, status.as_str().unwrap_or(""));
            }
            if let Some(c) = &counterexample {
                s += &format!("counterexample: I({}) = {}\n", c.bound, c.value_at_bound);
            }
            s
        }
    };
    Ok(Outcome {
        body,
        refuted: !sound,
    })
}

fn suite_csv(reports: &[SuiteReport]) -> String {
    let mut s = String::from("suite,seed,cases,violations\n");
    for r in reports {
        s += &format!(
            "{},{},{},{}\n",
            r.suite,
            r.seed,
            r.cases,
            r.violations.len()
        );
    }
    s
}

fn cmd_verify(
    suite: SuiteArg,
    max_n: usize,
    graphs: Option<&Path>,
    seed: u64,
    samples: usize,
    format: Format,
) -> Result<Outcome> {
    let corpus = match graphs {
        Some(path) => parse_graph6_lines(&read(path)?)
            .with_context(|| format!("parsing {}", path.display()))?,
        None => {
            if max_n > MAX_N_GUARD {
                bail!("--max-n {max_n} exceeds the limit of {MAX_N_GUARD}");
            }
            all_graphs_up_to(max_n)
        }
    };
    let suites: Vec<Suite> = match suite {
        SuiteArg::StabilityIffClawfree => vec![Suite::StabilityIffClawfree],
        SuiteArg::Diagram => vec![Suite::Diagram],
        SuiteArg::Divisibility => vec![Suite::Divisibility],
        SuiteArg::Bounds => vec![Suite::Bounds],
        SuiteArg::Hypergraph => vec![Suite::Hypergraph],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let cfg = SuiteConfig {
        seed,
        samples,
        ..SuiteConfig::default()
    };
    let reports: Vec<SuiteReport> = suites
        .into_iter()
        .map(|s| run_suite(s, &corpus, &cfg))
        .collect();
    let mut refuted = false;
    for r in &reports {
        eprintln!(
            "{}: {} cases, {} violations",
            r.suite,
            r.cases,
            r.violations.len()
        );
        for v in &r.violations {
            refuted = true;
            eprintln!(
                "violation [{}] {} ({}): {}",
                r.suite, v.case, v.check, v.detail
            );
            if let (Some(g6), Some(el)) = (&v.graph6, &v.edge_list) {
                eprintln!("graph6: {g6}\nedge list:\n{el}");
            }
        }
    }
    let body = match format {
        Format::Csv => suite_csv(&reports),
        _ => pretty(&json!({ "corpus_graphs": corpus.len(), "max_n": max_n, "reports": reports }))?,
    };
    Ok(Outcome { body, refuted })
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .context("building thread pool")?;
    }
    match cli.command {
        Command::Poly {
            graph,
            which,
            relative_to,
            diagonal,
            format,
        } => cmd_poly(&graph, which, relative_to.as_deref(), diagonal, format),
        Command::Tree {
            graph,
            kind,
            root,
            clique,
            dot,
        } => cmd_tree(&graph, kind, root.as_deref(), clique.as_deref(), dot),
        Command::Check {
            graph,
            what,
            samples,
            seed,
        } => cmd_check(&graph, what, samples, seed),
        Command::Bounds { graph, format } => cmd_bounds(&graph, format),
        Command::Verify {
            suite,
            max_n,
            graphs,
            seed,
            samples,
            format,
        } => cmd_verify(suite, max_n, graphs.as_deref(), seed, samples, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|o| {
        match &out {
            Some(path) => {
                fs::write(path, &o.body).with_context(|| format!("writing {}", path.display()))?
            }
            None => print!("{}", o.body),
        }
        Ok(o.refuted)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
