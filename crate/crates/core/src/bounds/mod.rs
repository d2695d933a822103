//! λ₁ and the root bounds for independence polynomials, the matching
//! bound through line graphs, monotonicity, divisibility certificates and
//! the Schläfli counterexample.
//!
//! Every verdict here comes from exact rational sign evaluation or Sturm
//! counts. Floats appear only in informational fields.

mod divisibility;

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

pub use divisibility::{
    verify_divisibility, verify_divisibility_all, verify_godsil_matching_divisibility,
    verify_godsil_matching_divisibility_diagonal, DivisibilityCertificate, GodsilCertificate,
    Specialization, GODSIL_MULTIVARIATE_NODES,
};

use crate::graph::{
    clique_number, find_simplicial_clique, is_claw_free, is_simplicial_graph, line_graph,
    neighbor_closure_sv, schlafli_graph, srg_parameters, Graph, GraphError, Vertex,
};
use crate::poly::{independence_diagonal, vertex_matching_diagonal, PolyError};
use crate::scalar::{int, rat, rational_string};
use crate::stability::{
    count_roots_open, isolate_real_roots, RealRoot, RootInterval, StabilityError,
};
use crate::tree::TreeError;
use crate::{RatPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("diagonal independence polynomial has no negative real root")]
    NoNegativeRoot,
    #[error("{what}: expected {expected}, got {got}")]
    Mismatch {
        what: &'static str,
        expected: String,
        got: String,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Stability(#[from] StabilityError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Holds
        } else {
            Status::Violated
        }
    }
}

pub(crate) fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// The negative real root nearest zero of a polynomial with `p(0) != 0`.
pub fn lambda1_of(p: &RatPoly) -> Result<RealRoot, BoundsError> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(BoundsError::NoNegativeRoot);
    }
    let zero = Rational::zero();
    isolate_real_roots(p)?
        .into_iter()
        .rev()
        .find(|r| r.cmp_rational(&zero) == Ordering::Less)
        .ok_or(BoundsError::NoNegativeRoot)
}

/// λ₁ of the diagonal of `I(G)`.
pub fn lambda1(g: &Graph) -> Result<RealRoot, BoundsError> {
    if g.n() == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    lambda1_of(&independence_diagonal(g)?)
}

/// Exact evidence behind a bound verdict. `roots_in_interval` is a Sturm
/// count over the open interval; `lambda1_vs_bound` compares the isolated
/// root with the bound. The two are independent certifications.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignProof {
    pub point: String,
    pub value_at_point: String,
    pub sign_at_point: i32,
    pub interval: (String, String),
    pub roots_in_interval: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda1_vs_bound: Option<&'static str>,
    /// Set by the matching bound: `q(y) = diag I(L(G))(-y)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line_graph_identity: Option<bool>,
    pub certificates_agree: bool,
}

/// `λ₁(G) <= λ₁(S_v(G)) <= bound` for the minimum-degree vertex `v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeakChain {
    pub vertex: String,
    pub closure_claw_free: bool,
    pub closure_simplicial_at_vertex: bool,
    pub lambda1_closure: RootInterval,
    pub graph_le_closure: bool,
    pub closure_le_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proof: Option<SignProof>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<WeakChain>,
}

impl BoundEntry {
    fn not_applicable(name: &'static str, reason: impl Into<String>) -> Self {
        BoundEntry {
            name,
            status: Status::NotApplicable,
            bound: None,
            reason: Some(reason.into()),
            proof: None,
            chain: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Not violated and not internally inconsistent.
    pub fn sound(&self) -> bool {
        self.status != Status::Violated
            && self.proof.as_ref().map_or(true, |p| p.certificates_agree)
    }
}

fn upper_bound_entry(name: &'static str, p: &RatPoly, l1: &RealRoot, b: Rational) -> BoundEntry {
    // λ₁ <= b  iff  no root in (b, 0), as p(0) = 1
    let zero = Rational::zero();
    let roots = count_roots_open(p, &b, &zero).expect("nonzero polynomial");
    let cmp = l1.cmp_rational(&b);
    let by_sturm = roots == 0;
    let by_root = cmp != Ordering::Greater;
    BoundEntry {
        name,
        status: Status::from_bool(by_sturm && by_root),
        bound: Some(rational_string(&b)),
        reason: None,
        proof: Some(SignProof {
            value_at_point: rational_string(&p.eval(&b)),
            sign_at_point: p.sign_at(&b),
            point: rational_string(&b),
            interval: (rational_string(&b), "0".into()),
            roots_in_interval: roots,
            lambda1_vs_bound: Some(ordering_name(cmp)),
            line_graph_identity: None,
            certificates_agree: by_sturm == by_root,
        }),
        chain: None,
    }
}

/// `-1/ω <= λ₁(G)`.
pub fn check_trivial_lower_bound(g: &Graph) -> Result<BoundEntry, BoundsError> {
    const NAME: &str = "trivial-lower";
    if g.n() == 0 {
        return Ok(BoundEntry::not_applicable(NAME, "empty graph"));
    }
    let p = independence_diagonal(g)?;
    let l1 = lambda1_of(&p)?;
    let b = rat(-1, clique_number(g) as i64);
    let zero = Rational::zero();
    let roots = count_roots_open(&p, &b, &zero)?;
    let sign = p.sign_at(&b);
    let cmp = l1.cmp_rational(&b);
    let by_sturm = roots > 0 || sign == 0;
    let by_root = cmp != Ordering::Less;
    Ok(BoundEntry {
        name: NAME,
        status: Status::from_bool(by_sturm && by_root),
        bound: Some(rational_string(&b)),
        reason: None,
        proof: Some(SignProof {
            point: rational_string(&b),
            value_at_point: rational_string(&p.eval(&b)),
            sign_at_point: sign,
            interval: (rational_string(&b), "0".into()),
            roots_in_interval: roots,
            lambda1_vs_bound: Some(ordering_name(cmp)),
            line_graph_identity: None,
            certificates_agree: by_sturm == by_root,
        }),
        chain: None,
    })
}

/// `λ₁(G) <= -1/(4(ω-1))` for simplicial `G`.
pub fn check_simplicial_upper_bound(g: &Graph) -> Result<BoundEntry, BoundsError> {
    const NAME: &str = "simplicial-upper";
    if !is_simplicial_graph(g) {
        return Ok(BoundEntry::not_applicable(NAME, "graph is not simplicial"));
    }
    let omega = clique_number(g);
    if omega < 2 {
        return Ok(BoundEntry::not_applicable(NAME, "clique number is 1"));
    }
    let p = independence_diagonal(g)?;
    let l1 = lambda1_of(&p)?;
    Ok(upper_bound_entry(
        NAME,
        &p,
        &l1,
        rat(-1, 4 * (omega as i64 - 1)),
    ))
}

fn first_min_degree_vertex(g: &Graph) -> Vertex {
    (0..g.n())
        .min_by_key(|&v| g.degree(v))
        .expect("nonempty graph")
}

/// `λ₁(G) <= -1/(4 max(ω-1, δ))` for claw-free `G`, with the chain through
/// `S_v(G)` at the first vertex of minimum degree.
pub fn check_weak_clawfree_bound(g: &Graph) -> Result<BoundEntry, BoundsError> {
    const NAME: &str = "weak-claw-free";
    if g.n() == 0 {
        return Ok(BoundEntry::not_applicable(NAME, "empty graph"));
    }
    if !is_claw_free(g) {
        return Ok(BoundEntry::not_applicable(NAME, "graph has a claw"));
    }
    let omega = clique_number(g);
    let m = (omega - 1).max(g.min_degree());
    if m == 0 {
        return Ok(BoundEntry::not_applicable(
            NAME,
            "max(omega - 1, delta) is 0",
        ));
    }
    let b = rat(-1, 4 * m as i64);
    let p = independence_diagonal(g)?;
    let l1 = lambda1_of(&p)?;
    let mut entry = upper_bound_entry(NAME, &p, &l1, b.clone());

    let v = first_min_degree_vertex(g);
    let s = neighbor_closure_sv(g, v)?;
    let ls = lambda1(&s)?;
    let chain = WeakChain {
        vertex: g.name(v),
        closure_claw_free: is_claw_free(&s),
        closure_simplicial_at_vertex: crate::graph::simplicial_clique_violation(&s, &[v]).is_none(),
        lambda1_closure: ls.to_interval(),
        graph_le_closure: l1.cmp_root(&ls) != Ordering::Greater,
        closure_le_bound: ls.cmp_rational(&b) != Ordering::Greater,
    };
    let chain_ok = chain.graph_le_closure && chain.closure_le_bound;
    if entry.status == Status::Holds && !chain_ok {
        entry.status = Status::Violated;
    }
    entry.chain = Some(chain);
    Ok(entry)
}

/// No root of `diag μ_V(G)` in `(-r, r)`, `r = 1/(2 sqrt(Δ-1))`, stated
/// exactly as: `q(y)` with `q(z^2) = diag μ_V` has no root in
/// `(0, 1/(4(Δ-1)))`. Cross-checked against `diag I(L(G))` at `-y`.
/// Edge count up to which the matching bound is re-derived from `I(L(G))`.
pub const LINE_GRAPH_CROSS_CHECK_EDGES: usize = 40;

pub fn check_heilmann_lieb_matching(g: &Graph) -> Result<BoundEntry, BoundsError> {
    const NAME: &str = "heilmann-lieb";
    let delta = g.max_degree();
    if delta < 2 {
        return Ok(BoundEntry::not_applicable(NAME, "maximum degree below 2"));
    }
    let mu = vertex_matching_diagonal(g)?;
    let q = mu.even_part_in_square().expect("matching diagonal is even");
    let r2 = rat(1, 4 * (delta as i64 - 1));
    let zero = Rational::zero();
    let roots = count_roots_open(&q, &zero, &r2)?;

    // Cross-check through I(L(G)); skipped when L(G) is too big to expand.
    let cross = if g.m() <= LINE_GRAPH_CROSS_CHECK_EDGES {
        let il = independence_diagonal(&line_graph(g).line_graph)?;
        let identity = il.rescale_var(&-Rational::one()) == q;
        Some((identity, count_roots_open(&il, &-r2.clone(), &zero)?))
    } else {
        None
    };
    Ok(BoundEntry {
        name: NAME,
        status: Status::from_bool(roots == 0),
        bound: Some(rational_string(&r2)),
        reason: None,
        proof: Some(SignProof {
            point: rational_string(&r2),
            value_at_point: rational_string(&q.eval(&r2)),
            sign_at_point: q.sign_at(&r2),
            interval: ("0".into(), rational_string(&r2)),
            roots_in_interval: roots,
            lambda1_vs_bound: None,
            line_graph_identity: cross.map(|(identity, _)| identity),
            certificates_agree: cross.map_or(true, |(identity, roots_line)| {
                identity && roots == roots_line
            }),
        }),
        chain: None,
    })
}

/// Monotonicity of λ₁ under a deletion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneCheck {
    pub deleted: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda1_graph: Option<RootInterval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda1_deleted: Option<RootInterval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<&'static str>,
}

fn monotone(g: &Graph, h: &Graph, deleted: String) -> Result<MonotoneCheck, BoundsError> {
    if h.n() == 0 {
        return Ok(MonotoneCheck {
            deleted,
            status: Status::NotApplicable,
            lambda1_graph: None,
            lambda1_deleted: None,
            comparison: None,
        });
    }
    let a = lambda1(g)?;
    let b = lambda1(h)?;
    let cmp = b.cmp_root(&a);
    Ok(MonotoneCheck {
        deleted,
        status: Status::from_bool(cmp != Ordering::Greater),
        lambda1_graph: Some(a.to_interval()),
        lambda1_deleted: Some(b.to_interval()),
        comparison: Some(ordering_name(cmp)),
    })
}

/// `λ₁(G \ v) <= λ₁(G)`.
pub fn check_lambda1_monotone_vertex(g: &Graph, v: Vertex) -> Result<MonotoneCheck, BoundsError> {
    let h = g.delete_vertex(v)?;
    monotone(g, &h, g.name(v))
}

/// `λ₁(G \ e) <= λ₁(G)`.
pub fn check_lambda1_monotone_edge(
    g: &Graph,
    u: Vertex,
    w: Vertex,
) -> Result<MonotoneCheck, BoundsError> {
    let h = g.delete_edge(u, w)?;
    monotone(g, &h, format!("{}-{}", g.name(u), g.name(w)))
}

/// All applicable bounds for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub diagonal: String,
    pub lambda1: RootInterval,
    pub bounds: Vec<BoundEntry>,
    /// `1/(e Δ)`; informational only, never certified.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lll_radius: Option<f64>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|e| e.name == name)
    }

    pub fn sound(&self) -> bool {
        self.bounds.iter().all(BoundEntry::sound)
    }
}

pub fn bound_report(g: &Graph, id: &str) -> Result<BoundReport, BoundsError> {
    if g.n() == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    let p = independence_diagonal(g)?;
    let l1 = lambda1_of(&p)?;
    let delta = g.max_degree();
    Ok(BoundReport {
        graph: id.to_string(),
        n: g.n(),
        m: g.m(),
        omega: clique_number(g),
        max_degree: delta,
        min_degree: g.min_degree(),
        diagonal: p.to_text("t"),
        lambda1: l1.to_interval(),
        bounds: vec![
            check_trivial_lower_bound(g)?,
            check_simplicial_upper_bound(g)?,
            check_weak_clawfree_bound(g)?,
            check_heilmann_lieb_matching(g)?,
        ],
        lll_radius: (delta > 0).then(|| 1.0 / (std::f64::consts::E * delta as f64)),
    })
}

/// The claw-free, non-simplicial graph whose λ₁ beats `-1/(4(ω-1))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub srg_parameters: (usize, usize, usize, usize),
    pub diagonal: String,
    pub coefficients: Vec<String>,
    pub omega: usize,
    pub claw_free: bool,
    pub simplicial: bool,
    pub bound: String,
    pub value_at_bound: String,
    pub value_at_zero: String,
    /// Sturm count of roots in `(bound, 0)`.
    pub roots_above_bound: usize,
    pub bound_violated: bool,
    pub lambda1: RootInterval,
    pub weak_bound: BoundEntry,
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    what: &'static str,
    expected: T,
    got: T,
) -> Result<(), BoundsError> {
    if expected == got {
        Ok(())
    } else {
        Err(BoundsError::Mismatch {
            what,
            expected: format!("{expected:?}"),
            got: format!("{got:?}"),
        })
    }
}

/// Reproduces the Schläfli counterexample; any differing value is an error.
pub fn check_schlafli_counterexample() -> Result<CounterexampleReport, BoundsError> {
    let g = schlafli_graph();
    let srg = srg_parameters(&g);
    expect_eq("srg parameters", Some((27, 16, 10, 8)), srg)?;
    let p = independence_diagonal(&g)?;
    let expected = RatPoly::new([1, 27, 135, 45].map(int).to_vec());
    if p != expected {
        return Err(BoundsError::Mismatch {
            what: "diagonal independence polynomial",
            expected: expected.to_text("t"),
            got: p.to_text("t"),
        });
    }
    let omega = clique_number(&g);
    expect_eq("clique number", 6, omega)?;
    let b = rat(-1, 20);
    let at_b = p.eval(&b);
    expect_eq(
        "I(-1/20)",
        rational_string(&rat(-29, 1600)),
        rational_string(&at_b),
    )?;
    let at_zero = p.eval(&Rational::zero());
    expect_eq("I(0)", "1".to_string(), rational_string(&at_zero))?;
    let claw_free = is_claw_free(&g);
    expect_eq("claw-free", true, claw_free)?;
    let simplicial = find_simplicial_clique(&g).is_some();
    expect_eq("has a simplicial clique", false, simplicial)?;
    let roots = count_roots_open(&p, &b, &Rational::zero())?;
    let l1 = lambda1_of(&p)?;
    let violated = roots > 0 && l1.cmp_rational(&b) == Ordering::Greater;
    expect_eq("bound -1/20 violated", true, violated)?;
    let weak = check_weak_clawfree_bound(&g)?;
    expect_eq("weak bound", Some("-1/64".to_string()), weak.bound.clone())?;
    expect_eq("weak bound holds", Status::Holds, weak.status)?;
    Ok(CounterexampleReport {
        srg_parameters: srg.expect("checked above"),
        diagonal: p.to_text("t"),
        coefficients: p.coeffs().iter().map(rational_string).collect(),
        omega,
        claw_free,
        simplicial,
        bound: rational_string(&b),
        value_at_bound: rational_string(&at_b),
        value_at_zero: rational_string(&at_zero),
        roots_above_bound: roots,
        bound_violated: violated,
        lambda1: l1.to_interval(),
        weak_bound: weak,
    })
}

/// `diag I(H)` at `x` for every induced subgraph `H = G \ S`, `S` a single
/// vertex or closed neighborhood, is nonnegative for `x` in `[λ₁(G), 0]`.
/// Spot-checks the rational endpoints and midpoint of that segment.
pub fn induced_nonnegativity_spot_check(g: &Graph) -> Result<bool, BoundsError> {
    let l1 = lambda1(g)?;
    let lo = l1.hi().clone();
    let points = [lo.clone(), lo.clone() / int(2), Rational::zero()];
    for v in 0..g.n() {
        for removed in [vec![v], g.closed_neighborhood(v)] {
            let h = g.delete_vertices(&removed);
            let p = independence_diagonal(&h)?;
            if points.iter().any(|x| p.eval(x) < Rational::zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{c6, complete, cycle, empty, path, star, w6};

    #[test]
    fn lambda1_examples() {
        for w in 1..=6 {
            let r = lambda1(&complete(w)).unwrap();
            assert_eq!(r.exact_value(), Some(&rat(-1, w as i64)));
        }
        assert_eq!(lambda1(&path(1)).unwrap().exact_value(), Some(&int(-1)));
        assert!(matches!(lambda1(&empty(0)), Err(BoundsError::EmptyGraph)));
        let r = lambda1(&c6()).unwrap();
        assert!(r.width() <= crate::stability::isolation_width());
    }

    #[test]
    fn k3_upper_bound_uses_lambda1() {
        let e = check_simplicial_upper_bound(&complete(3)).unwrap();
        assert_eq!(e.status, Status::Holds);
        let proof = e.proof.unwrap();
        assert_eq!(proof.value_at_point, "5/8");
        assert_eq!(proof.lambda1_vs_bound, Some("less"));
        assert!(proof.certificates_agree);
    }

    #[test]
    fn lower_bound_equality_on_cliques() {
        let e = check_trivial_lower_bound(&complete(4)).unwrap();
        assert_eq!(e.status, Status::Holds);
        assert_eq!(e.proof.unwrap().lambda1_vs_bound, Some("equal"));
        let e = check_trivial_lower_bound(&c6()).unwrap();
        assert_eq!(e.proof.unwrap().lambda1_vs_bound, Some("greater"));
    }

    #[test]
    fn not_applicable_cases() {
        let g = empty(3);
        assert_eq!(
            check_simplicial_upper_bound(&g).unwrap().status,
            Status::NotApplicable
        );
        assert_eq!(
            check_weak_clawfree_bound(&g).unwrap().status,
            Status::NotApplicable
        );
        assert_eq!(
            check_heilmann_lieb_matching(&path(2)).unwrap().status,
            Status::NotApplicable
        );
        assert_eq!(
            check_simplicial_upper_bound(&schlafli_graph())
                .unwrap()
                .status,
            Status::NotApplicable
        );
        assert_eq!(
            check_weak_clawfree_bound(&star(3)).unwrap().status,
            Status::NotApplicable
        );
        let m = check_lambda1_monotone_vertex(&path(1), 0).unwrap();
        assert_eq!(m.status, Status::NotApplicable);
    }

    #[test]
    fn heilmann_lieb_on_c6() {
        let e = check_heilmann_lieb_matching(&c6()).unwrap();
        assert_eq!(e.status, Status::Holds);
        let proof = e.proof.unwrap();
        assert_eq!(proof.interval, ("0".to_string(), "1/4".to_string()));
        assert_eq!(proof.line_graph_identity, Some(true));
        assert!(proof.certificates_agree);
        let q = vertex_matching_diagonal(&c6())
            .unwrap()
            .even_part_in_square()
            .unwrap();
        assert_eq!(q, RatPoly::new([1, -6, 9, -2].map(int).to_vec()));
    }

    #[test]
    fn monotone_examples() {
        let m = check_lambda1_monotone_vertex(&complete(3), 0).unwrap();
        assert_eq!(m.status, Status::Holds);
        assert_eq!(m.comparison, Some("less"));
        let m = check_lambda1_monotone_edge(&complete(2), 0, 1).unwrap();
        assert_eq!(m.status, Status::Holds);
        assert_eq!(m.lambda1_deleted.unwrap().exact.as_deref(), Some("-1"));
    }

    #[test]
    fn weak_bound_small_graphs() {
        for g in [complete(3), c6(), w6(), cycle(5)] {
            let e = check_weak_clawfree_bound(&g).unwrap();
            assert_eq!(e.status, Status::Holds, "{e:?}");
            let chain = e.chain.unwrap();
            assert!(chain.closure_claw_free && chain.closure_simplicial_at_vertex);
        }
    }

    #[test]
    fn schlafli_keystone() {
        let r = check_schlafli_counterexample().unwrap();
        assert_eq!(r.diagonal, "1 + 27t + 135t^2 + 45t^3");
        assert_eq!(r.value_at_bound, "-29/1600");
        assert_eq!(r.omega, 6);
        assert!(r.bound_violated && !r.simplicial && r.claw_free);
        assert_eq!(r.weak_bound.bound.as_deref(), Some("-1/64"));
        let chain = r.weak_bound.chain.unwrap();
        assert!(chain.graph_le_closure && chain.closure_le_bound);
    }

    #[test]
    fn report_is_sound() {
        let r = bound_report(&complete(3), "k3").unwrap();
        assert_eq!(r.lambda1.exact.as_deref(), Some("-1/3"));
        assert!(r.bounds.iter().all(|e| e.status != Status::Violated));
        assert!(r.sound());
        let r = bound_report(&empty(2), "e2").unwrap();
        assert_eq!(
            r.entry("simplicial-upper").unwrap().status,
            Status::NotApplicable
        );
        assert!(induced_nonnegativity_spot_check(&w6()).unwrap());
    }
}
