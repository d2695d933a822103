//! Acceptance criteria 1 to 9. Runs without the libtest harness so that each
//! criterion prints one PASS or FAIL line; exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use stableset_core::bounds::{check_schlafli_counterexample, verify_divisibility, Status};
use stableset_core::corpus::{all_graphs_up_to, GRAPH_COUNTS};
use stableset_core::graph::{
    c6, claw, complete, fig_p, fig_p_line_graph, path, CliqueRef, Graph, Hypergraph,
};
use stableset_core::poly::{
    diag, edge_matching_poly, independence_poly, vertex_matching_poly, Var,
};
use stableset_core::stability::{
    count_real_roots, hypergraph_witness, strongly_rayleigh_probe, Point, RayleighPoints, Witness,
};
use stableset_core::suites::{run_suite, Suite, SuiteConfig, SuiteReport};
use stableset_core::tree::{path_tree, verify_commuting_diagram};
use stableset_core::IntPoly;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn clean(r: &SuiteReport) -> Result<(), String> {
    match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(format!(
            "{} violations, first: {} {} {}",
            r.violations.len(),
            v.case,
            v.check,
            v.detail
        )),
    }
}

/// Monomials of a figure formula: each term is a product of `x_a` or
/// `x_{ab}` factors. Names are normalized to sorted characters.
fn figure_terms(latex: &str, sign_by_pairs: bool) -> BTreeMap<Vec<String>, i64> {
    let mut out = BTreeMap::new();
    for term in latex.split(" + ") {
        let mut names = Vec::new();
        let mut rest = term.trim();
        while let Some(i) = rest.find("x_") {
            rest = &rest[i + 2..];
            let name = match rest.strip_prefix('{') {
                Some(r) => {
                    let end = r.find('}').expect("closing brace");
                    rest = &r[end + 1..];
                    &r[..end]
                }
                None => {
                    let n = &rest[..1];
                    rest = &rest[1..];
                    n
                }
            };
            let mut cs: Vec<char> = name.chars().collect();
            cs.sort_unstable();
            names.push(cs.into_iter().collect::<String>());
        }
        names.sort();
        let sign = if sign_by_pairs && (names.len() / 2) % 2 == 1 {
            -1
        } else {
            1
        };
        *out.entry(names).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_terms(p: &IntPoly, name: &dyn Fn(Var) -> String) -> BTreeMap<Vec<String>, i64> {
    use num_traits::ToPrimitive;
    p.terms()
        .map(|(m, c)| {
            let mut names = Vec::new();
            for &(v, e) in m.pairs() {
                let mut cs: Vec<char> = name(v).chars().collect();
                cs.sort_unstable();
                let s: String = cs.into_iter().collect();
                names.extend(std::iter::repeat(s).take(e as usize));
            }
            names.sort();
            (names, c.to_i64().expect("small coefficient"))
        })
        .collect()
}

const FIG_I: &str =
    "1 + x_a + x_b + x_c + x_d + x_e + x_f + x_a x_c + x_a x_d + x_a x_e + x_b x_d + x_b x_e + \
    x_b x_f + x_c x_e + x_c x_f + x_d x_f + x_a x_c x_e + x_b x_d x_f";
const FIG_MU_E: &str = "1 + x_{ab} + x_{bc} + x_{cd} + x_{de} + x_{ef} + x_{fa} + x_{ab} x_{cd} + x_{ab} x_{de} + \
    x_{ab} x_{ef} + x_{bc} x_{de} + x_{bc} x_{ef} + x_{bc} x_{fa} + x_{cd} x_{ef} + x_{cd} x_{fa} + x_{de} x_{fa} + \
    x_{ab} x_{cd} x_{ef} + x_{bc} x_{de} x_{fa}";
const FIG_MU_V: &str = "1 + x_{a}x_{b} + x_{b}x_{c} + x_{c}x_{d} + x_{d}x_{e} + x_{e}x_{f} + x_{f}x_{a} + \
    x_{a}x_{b} x_{c}x_{d} + x_{a}x_{b} x_{d}x_{e} + x_{a}x_{b} x_{e}x_{f} + x_{b}x_{c} x_{d}x_{e} + x_{b}x_{c} x_{e}x_{f} + \
    x_{b}x_{c} x_{f}x_{a} + x_{c}x_{d} x_{e}x_{f} + x_{c}x_{d} x_{f}x_{a} + x_{d}x_{e} x_{f}x_{a} + \
    x_{a}x_{b} x_{c}x_{d} x_{e}x_{f} + x_{b}x_{c} x_{d}x_{e} x_{f}x_{a}";

fn criterion_1() -> Check {
    let start = Instant::now();
    let g = c6();
    let vname = |v: Var| g.name(v as usize);
    let i = independence_poly(&g).map_err(|e| e.to_string())?;
    ensure(
        poly_terms(&i, &vname) == figure_terms(FIG_I, false),
        "I(C6) differs from the figure",
    )?;
    let edges = g.edges();
    let ename = |v: Var| {
        let (a, b) = edges[v as usize];
        g.name(a) + &g.name(b)
    };
    let me = edge_matching_poly(&g).map_err(|e| e.to_string())?;
    ensure(
        poly_terms(&me, &ename) == figure_terms(FIG_MU_E, false),
        "mu_E(C6) differs from the figure",
    )?;
    let mv = vertex_matching_poly(&g).map_err(|e| e.to_string())?;
    ensure(
        poly_terms(&mv, &vname) == figure_terms(FIG_MU_V, true),
        "mu_V(C6) differs from the signed figure",
    )?;
    ensure(
        i.num_terms() == 18 && me.num_terms() == 18 && mv.num_terms() == 17,
        "term counts",
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "I 18 terms, mu_E 18 terms, mu_V 17 signed terms in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let d = diag(&independence_poly(&claw()).map_err(|e| e.to_string())?);
    ensure(
        d.to_text("z") == "1 + 4z + 3z^2 + z^3",
        format!("diag = {}", d.to_text("z")),
    )?;
    let roots = count_real_roots(&d, None).map_err(|e| e.to_string())?;
    ensure(roots == 1, format!("{roots} real roots"))?;
    within(start, Duration::from_secs(1))?;
    Ok("diag I(K_{1,3}) = 1 + 4z + 3z^2 + z^3 with 1 real root".into())
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let r = check_schlafli_counterexample().map_err(|e| e.to_string())?;
    ensure(
        r.diagonal == "1 + 27t + 135t^2 + 45t^3",
        format!("diagonal {}", r.diagonal),
    )?;
    ensure(r.omega == 6, "omega")?;
    ensure(
        r.bound == "-1/20" && r.value_at_bound == "-29/1600",
        format!("I({}) = {}", r.bound, r.value_at_bound),
    )?;
    ensure(r.claw_free && !r.simplicial, "claw-free and not simplicial")?;
    ensure(r.bound_violated, "bound not violated")?;
    ensure(
        r.weak_bound.status == Status::Holds && r.weak_bound.bound.as_deref() == Some("-1/64"),
        "weak bound -1/64",
    )?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "I(-1/20) = -29/1600, weak bound -1/64 holds, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_4(corpus: &[Graph], cfg: &SuiteConfig) -> Check {
    let start = Instant::now();
    let r = run_suite(Suite::StabilityIffClawfree, corpus, cfg);
    clean(&r)?;
    ensure(
        r.cases == GRAPH_COUNTS[1..=7].iter().sum::<usize>(),
        "corpus size",
    )?;
    ensure(
        r.stats.get("refuted_by_witness") == r.stats.get("clawed"),
        "every clawed graph refuted",
    )?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} graphs, {:?}, {:.2?}",
        r.cases,
        r.stats,
        start.elapsed()
    ))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let q = |n: i64| BigRational::from_integer(n.into());
    let x: Point = [(0, q(-1)), (1, q(1)), (2, q(-1))].into_iter().collect();
    let p3 = independence_poly(&path(3)).map_err(|e| e.to_string())?;
    let v = strongly_rayleigh_probe(&p3, RayleighPoints::Explicit(vec![x.clone()]), 0)
        .map_err(|e| e.to_string())?;
    ensure(v.refuted(), "I(P3) not refuted")?;
    ensure(
        matches!(&v.witness, Some(Witness::Rayleigh { x: w, .. }) if *w == x),
        "witness point",
    )?;
    ensure(
        v.exact_values == ["0", "1"],
        format!("values {:?}", v.exact_values),
    )?;
    for n in 1..=8 {
        let p = independence_poly(&complete(n)).map_err(|e| e.to_string())?;
        let v = strongly_rayleigh_probe(&p, RayleighPoints::Seeded(100), n as u64)
            .map_err(|e| e.to_string())?;
        ensure(!v.refuted(), format!("I(K{n}) refuted"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "P3 refuted with 0 < 1, K1..K8 corroborated, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_6(cfg: &SuiteConfig) -> Check {
    let start = Instant::now();
    let g = fig_p();
    let v = (0..g.n())
        .find(|&u| g.name(u) == "v")
        .ok_or("no vertex v")?;
    let d = verify_commuting_diagram(&g, v).map_err(|e| e.to_string())?;
    ensure(
        d.holds() && d.path_tree_nodes == 6,
        format!("golden: {d:?}"),
    )?;
    ensure(
        path_tree(&g, v).map_err(|e| e.to_string())?.len() == 6,
        "path tree size",
    )?;
    let corpus: Vec<Graph> = all_graphs_up_to(6)
        .into_iter()
        .filter(Graph::is_connected)
        .collect();
    let r = run_suite(Suite::Diagram, &corpus, cfg);
    clean(&r)?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} connected graphs plus {} random, {:.2?}",
        corpus.len(),
        cfg.random_graphs,
        start.elapsed()
    ))
}

fn criterion_7(corpus: &[Graph], cfg: &SuiteConfig) -> Check {
    let start = Instant::now();
    let lp = fig_p_line_graph();
    let s = (0..lp.n())
        .find(|&u| lp.name(u) == "s")
        .ok_or("no vertex s")?;
    let k = CliqueRef::new(&lp, vec![s]).map_err(|e| e.to_string())?;
    let c = verify_divisibility(&lp, &k).map_err(|e| e.to_string())?;
    ensure(
        c.holds() && c.quotient.as_deref() == Some("1 + x_w"),
        format!("golden: {c:?}"),
    )?;
    let r = run_suite(Suite::Divisibility, corpus, cfg);
    clean(&r)?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "quotient 1 + x_w, {:?}, {:.2?}",
        r.stats,
        start.elapsed()
    ))
}

fn criterion_8(corpus: &[Graph], cfg: &SuiteConfig) -> Check {
    let start = Instant::now();
    let r = run_suite(Suite::Bounds, corpus, cfg);
    clean(&r)?;
    let checked = |k: &str| r.stats.get(k).copied().unwrap_or(0);
    ensure(
        checked("simplicial-upper_checked") > 0 && checked("heilmann-lieb_checked") > 0,
        "nothing checked",
    )?;
    ensure(
        checked("monotone_checked") + checked("monotone_not_applicable") == 2 * cfg.deletions,
        "deletions",
    )?;
    within(start, Duration::from_secs(600))?;
    Ok(format!("{:?}, {:.2?}", r.stats, start.elapsed()))
}

fn criterion_9(cfg: &SuiteConfig) -> Check {
    let start = Instant::now();
    let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).map_err(|e| e.to_string())?;
    let d = hypergraph_witness(&h).ok_or("no witness")?.diagonal();
    ensure(
        d.to_text("x") == "1 + 3x + 3x^2",
        format!("diag {}", d.to_text("x")),
    )?;
    ensure(
        count_real_roots(&d, None).map_err(|e| e.to_string())? == 0,
        "3-edge diagonal has real roots",
    )?;
    let r = run_suite(Suite::Hypergraph, &[], cfg);
    clean(&r)?;
    ensure(r.cases == cfg.hypergraphs + 1, "case count")?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("{:?}, {:.2?}", r.stats, start.elapsed()))
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let corpus = all_graphs_up_to(7);
    let results: Vec<(usize, Check)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3()),
        (4, criterion_4(&corpus, &cfg)),
        (5, criterion_5()),
        (6, criterion_6(&cfg)),
        (7, criterion_7(&corpus, &cfg)),
        (8, criterion_8(&corpus, &cfg)),
        (9, criterion_9(&cfg)),
    ];
    let mut failed = 0;
    for (n, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n}: PASS {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
