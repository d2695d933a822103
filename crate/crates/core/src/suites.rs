//! Corpus sweeps over the theorem checks. Each case is independent, runs
//! on the rayon pool, and reports come back in input order.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    check_heilmann_lieb_matching, check_lambda1_monotone_edge, check_lambda1_monotone_vertex,
    check_schlafli_counterexample, check_simplicial_upper_bound, check_trivial_lower_bound,
    check_weak_clawfree_bound, induced_nonnegativity_spot_check, verify_divisibility_all,
    verify_godsil_matching_divisibility, BoundEntry, Status,
};
use crate::corpus::{random_hypergraph, seeded_connected_graphs};
use crate::graph::{
    is_claw_free, is_simplicial_graph, reduce_hypergraph, reduce_hypergraph_shuffled, Graph,
    Hypergraph,
};
use crate::io::{to_graph6, write_edge_list};
use crate::poly::{hypergraph_independence_poly, independence_poly};
use crate::stability::{
    claw_witness_restriction, count_real_roots, decide_hypergraph_same_phase,
    decide_same_phase_stable_independence, hypergraph_witness, is_real_rooted, same_phase_probe,
};
use crate::tree::verify_commuting_diagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    StabilityIffClawfree,
    Diagram,
    Divisibility,
    Bounds,
    Hypergraph,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::StabilityIffClawfree,
        Suite::Diagram,
        Suite::Divisibility,
        Suite::Bounds,
        Suite::Hypergraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StabilityIffClawfree => "stability-iff-clawfree",
            Suite::Diagram => "diagram",
            Suite::Divisibility => "divisibility",
            Suite::Bounds => "bounds",
            Suite::Hypergraph => "hypergraph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Rays per same-phase probe.
    pub samples: usize,
    /// Seeded random connected graphs for the diagram and Godsil checks.
    pub random_graphs: usize,
    pub random_max_n: usize,
    /// Seeded vertex and edge deletions for λ₁ monotonicity.
    pub deletions: usize,
    pub hypergraphs: usize,
    pub hypergraph_max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 25,
            random_graphs: 200,
            random_max_n: 7,
            deletions: 500,
            hypergraphs: 200,
            hypergraph_max_n: 10,
        }
    }
}

/// A failed check, with the offending graph in graph6 and edge-list form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub case: String,
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_list: Option<String>,
}

impl Violation {
    fn on_graph(case: &str, g: &Graph, check: &str, detail: impl Into<String>) -> Self {
        Violation {
            case: case.to_string(),
            check: check.to_string(),
            detail: detail.into(),
            graph6: Some(to_graph6(g)),
            edge_list: Some(write_edge_list(g)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub cases: usize,
    /// Counters such as graphs seen per class; keys are sorted.
    pub stats: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct CaseResult {
    stats: BTreeMap<String, usize>,
    violations: Vec<Violation>,
}

impl CaseResult {
    fn count(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_default() += 1;
    }

    fn fail(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

fn merge(suite: Suite, seed: u64, results: Vec<CaseResult>) -> SuiteReport {
    let mut stats = BTreeMap::new();
    let mut violations = Vec::new();
    let cases = results.len();
    for r in results {
        for (k, v) in r.stats {
            *stats.entry(k).or_default() += v;
        }
        violations.extend(r.violations);
    }
    SuiteReport {
        suite: suite.name(),
        seed,
        cases,
        stats,
        violations,
    }
}

fn case_id(g: &Graph) -> String {
    to_graph6(g)
}

pub fn run_suite(suite: Suite, graphs: &[Graph], cfg: &SuiteConfig) -> SuiteReport {
    match suite {
        Suite::StabilityIffClawfree => stability_iff_clawfree(graphs, cfg),
        Suite::Diagram => diagram(graphs, cfg),
        Suite::Divisibility => divisibility(graphs, cfg),
        Suite::Bounds => bounds(graphs, cfg),
        Suite::Hypergraph => hypergraph(cfg),
    }
}

/// Claw decision against probe outcome on every graph.
pub fn stability_iff_clawfree(graphs: &[Graph], cfg: &SuiteConfig) -> SuiteReport {
    let results = graphs
        .par_iter()
        .map(|g| {
            let id = case_id(g);
            let mut r = CaseResult::default();
            let claw_free = is_claw_free(g);
            if decide_same_phase_stable_independence(g) != claw_free {
                r.fail(Violation::on_graph(
                    &id,
                    g,
                    "decision",
                    "decision disagrees with claw search",
                ));
            }
            if claw_free {
                r.count("claw_free");
                let p = match independence_poly(g) {
                    Ok(p) => p,
                    Err(e) => {
                        r.fail(Violation::on_graph(&id, g, "error", e.to_string()));
                        return r;
                    }
                };
                match same_phase_probe(&p, cfg.samples, cfg.seed) {
                    Ok(v) if v.refuted() => r.fail(Violation::on_graph(
                        &id,
                        g,
                        "probe",
                        format!("claw-free graph refuted: {:?}", v.witness),
                    )),
                    Ok(_) => {}
                    Err(e) => r.fail(Violation::on_graph(&id, g, "error", e.to_string())),
                }
            } else {
                r.count("clawed");
                match claw_witness_restriction(g) {
                    Some((_, d)) => match count_real_roots(&d, None) {
                        Ok(1) => r.count("refuted_by_witness"),
                        Ok(k) => r.fail(Violation::on_graph(
                            &id,
                            g,
                            "witness",
                            format!("{k} real roots"),
                        )),
                        Err(e) => r.fail(Violation::on_graph(&id, g, "error", e.to_string())),
                    },
                    None => r.fail(Violation::on_graph(&id, g, "witness", "no claw found")),
                }
            }
            r
        })
        .collect();
    merge(Suite::StabilityIffClawfree, cfg.seed, results)
}

fn diagram_case(g: &Graph, id: &str) -> CaseResult {
    let mut r = CaseResult::default();
    if !g.is_connected() {
        r.count("skipped_disconnected");
        return r;
    }
    r.count("connected");
    for v in 0..g.n() {
        match verify_commuting_diagram(g, v) {
            Ok(d) if d.holds() => r.count("vertex_checks"),
            Ok(d) => r.fail(Violation::on_graph(id, g, "diagram", format!("{d:?}"))),
            Err(e) => r.fail(Violation::on_graph(
                id,
                g,
                "error",
                format!("vertex {v}: {e}"),
            )),
        }
    }
    r
}

/// Commuting diagram for all connected corpus graphs, every vertex, plus
/// seeded random connected graphs.
pub fn diagram(graphs: &[Graph], cfg: &SuiteConfig) -> SuiteReport {
    let random = seeded_connected_graphs(cfg.random_graphs, cfg.random_max_n, cfg.seed);
    let cases: Vec<(String, &Graph)> = graphs
        .iter()
        .map(|g| (case_id(g), g))
        .chain(
            random
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("random-{i}"), g)),
        )
        .collect();
    let results = cases
        .par_iter()
        .map(|(id, g)| diagram_case(g, id))
        .collect();
    merge(Suite::Diagram, cfg.seed, results)
}

/// Divisibility for every simplicial graph and simplicial clique, and the
/// matching-polynomial version on seeded random connected graphs.
pub fn divisibility(graphs: &[Graph], cfg: &SuiteConfig) -> SuiteReport {
    let mut results: Vec<CaseResult> = graphs
        .par_iter()
        .map(|g| {
            let id = case_id(g);
            let mut r = CaseResult::default();
            if !is_simplicial_graph(g) {
                r.count("not_simplicial");
                return r;
            }
            r.count("simplicial");
            match verify_divisibility_all(g) {
                Ok(certs) => {
                    for c in certs {
                        if c.holds() {
                            r.count("clique_certificates");
                        } else {
                            r.fail(Violation::on_graph(
                                &id,
                                g,
                                "divisibility",
                                format!("{c:?}"),
                            ));
                        }
                    }
                }
                Err(e) => r.fail(Violation::on_graph(&id, g, "error", e.to_string())),
            }
            r
        })
        .collect();
    let random = seeded_connected_graphs(cfg.random_graphs, cfg.random_max_n, cfg.seed);
    results.par_extend(random.par_iter().enumerate().map(|(i, g)| {
        let id = format!("random-{i}");
        let mut r = CaseResult::default();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ i as u64);
        let v = rng.gen_range(0..g.n());
        match verify_godsil_matching_divisibility(g, v) {
            Ok(c) if c.holds() => r.count("godsil_certificates"),
            Ok(c) => r.fail(Violation::on_graph(&id, g, "godsil", format!("{c:?}"))),
            Err(e) => r.fail(Violation::on_graph(&id, g, "error", e.to_string())),
        }
        r
    }));
    merge(Suite::Divisibility, cfg.seed, results)
}

fn check_entry(
    r: &mut CaseResult,
    id: &str,
    g: &Graph,
    e: Result<BoundEntry, crate::bounds::BoundsError>,
) {
    match e {
        Ok(e) => {
            match e.status {
                Status::NotApplicable => r.count(&format!("{}_not_applicable", e.name)),
                _ => r.count(&format!("{}_checked", e.name)),
            }
            if !e.sound() {
                r.fail(Violation::on_graph(id, g, e.name, format!("{e:?}")));
            }
        }
        Err(err) => r.fail(Violation::on_graph(id, g, "error", err.to_string())),
    }
}

/// Sandwich bounds, the matching bound, the weak claw-free bound and the
/// nonnegativity spot check on every graph, then seeded λ₁ monotonicity.
pub fn bounds(graphs: &[Graph], cfg: &SuiteConfig) -> SuiteReport {
    let mut results: Vec<CaseResult> = graphs
        .par_iter()
        .map(|g| {
            let id = case_id(g);
            let mut r = CaseResult::default();
            check_entry(&mut r, &id, g, check_trivial_lower_bound(g));
            check_entry(&mut r, &id, g, check_simplicial_upper_bound(g));
            check_entry(&mut r, &id, g, check_weak_clawfree_bound(g));
            check_entry(&mut r, &id, g, check_heilmann_lieb_matching(g));
            match induced_nonnegativity_spot_check(g) {
                Ok(true) => {}
                Ok(false) => r.fail(Violation::on_graph(
                    &id,
                    g,
                    "nonnegativity",
                    "negative value on [lambda1, 0]",
                )),
                Err(e) => r.fail(Violation::on_graph(&id, g, "error", e.to_string())),
            }
            r
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x1a3b_da01);
    let pool: Vec<&Graph> = graphs.iter().filter(|g| g.n() >= 2).collect();
    let with_edges: Vec<&Graph> = pool.iter().copied().filter(|g| g.m() > 0).collect();
    let mut picks = Vec::new();
    if !pool.is_empty() {
        for i in 0..cfg.deletions {
            let g = *pool.choose(&mut rng).expect("nonempty pool");
            picks.push((
                format!("delete-vertex-{i}"),
                g,
                Err(rng.gen_range(0..g.n())),
            ));
        }
    }
    if !with_edges.is_empty() {
        for i in 0..cfg.deletions {
            let g = *with_edges.choose(&mut rng).expect("nonempty pool");
            let e = *g.edges().choose(&mut rng).expect("graph has edges");
            picks.push((format!("delete-edge-{i}"), g, Ok(e)));
        }
    }
    results.par_extend(picks.par_iter().map(|(id, g, what)| {
        let mut r = CaseResult::default();
        let check = match *what {
            Err(v) => check_lambda1_monotone_vertex(g, v),
            Ok((u, w)) => check_lambda1_monotone_edge(g, u, w),
        };
        match check {
            Ok(c) if c.status == Status::Violated => {
                r.fail(Violation::on_graph(id, g, "monotone", format!("{c:?}")))
            }
            Ok(c) if c.status == Status::Holds => r.count("monotone_checked"),
            Ok(_) => r.count("monotone_not_applicable"),
            Err(e) => r.fail(Violation::on_graph(id, g, "error", e.to_string())),
        }
        r
    }));

    let mut keystone = CaseResult::default();
    match check_schlafli_counterexample() {
        Ok(_) => keystone.count("schlafli_keystone"),
        Err(e) => keystone.fail(Violation {
            case: "schlafli".into(),
            check: "counterexample".into(),
            detail: e.to_string(),
            graph6: None,
            edge_list: None,
        }),
    }
    results.push(keystone);
    merge(Suite::Bounds, cfg.seed, results)
}

fn hypergraph_case(h: &Hypergraph, id: &str, cfg: &SuiteConfig, index: u64) -> CaseResult {
    let mut r = CaseResult::default();
    let fail = |r: &mut CaseResult, check: &str, detail: String| {
        r.fail(Violation {
            case: id.to_string(),
            check: check.into(),
            detail,
            graph6: None,
            edge_list: None,
        })
    };
    let red = reduce_hypergraph(h);
    for k in 0..3u64 {
        if reduce_hypergraph_shuffled(h, cfg.seed ^ (index << 2) ^ k) != red {
            fail(&mut r, "confluence", format!("{h:?}"));
        }
    }
    match (
        hypergraph_independence_poly(h),
        hypergraph_independence_poly(&red),
    ) {
        (Ok(a), Ok(b)) if a == b => {}
        (Ok(_), Ok(_)) => fail(
            &mut r,
            "reduction",
            format!("I changes under reduction: {h:?}"),
        ),
        (Err(e), _) | (_, Err(e)) => fail(&mut r, "error", e.to_string()),
    }
    let decided = decide_hypergraph_same_phase(h);
    match red.as_graph() {
        Some(g) => {
            r.count("reduced_two_uniform");
            if decided != is_claw_free(&g) {
                fail(&mut r, "decision", format!("{h:?}"));
            }
            if decided {
                match hypergraph_independence_poly(h)
                    .map_err(|e| e.to_string())
                    .and_then(|p| {
                        same_phase_probe(&p, cfg.samples, cfg.seed).map_err(|e| e.to_string())
                    }) {
                    Ok(v) if v.refuted() => {
                        fail(&mut r, "probe", format!("{h:?}: {:?}", v.witness))
                    }
                    Ok(_) => r.count("corroborated"),
                    Err(e) => fail(&mut r, "error", e),
                }
            }
        }
        None => r.count("reduced_with_large_edge"),
    }
    if !decided {
        match hypergraph_witness(h).map(|w| is_real_rooted(&w.diagonal())) {
            Some(Ok(v)) if !v.real_rooted => r.count("refuted_by_witness"),
            other => fail(&mut r, "witness", format!("{h:?}: {other:?}")),
        }
    }
    r
}

/// Reduction confluence and the decision procedure on seeded random
/// hypergraphs, plus the single 3-edge.
pub fn hypergraph(cfg: &SuiteConfig) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4e9e_0001);
    let mut cases = vec![(
        "one-3-edge".to_string(),
        Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap(),
    )];
    for i in 0..cfg.hypergraphs {
        let n = rng.gen_range(1..=cfg.hypergraph_max_n.max(1));
        let m = rng.gen_range(0..=2 * n);
        cases.push((format!("random-{i}"), random_hypergraph(n, m, 4, &mut rng)));
    }
    let results = cases
        .par_iter()
        .enumerate()
        .map(|(i, (id, h))| hypergraph_case(h, id, cfg, i as u64))
        .collect();
    merge(Suite::Hypergraph, cfg.seed, results)
}
