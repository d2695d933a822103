//! Independence and matching polynomials by memoized vertex deletion.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, MultiPoly, PolyError, Var};
use crate::graph::{Graph, Hypergraph, Vertex};
use crate::RatPoly;

type IntPoly = MultiPoly<BigInt>;

/// Largest vertex count accepted by the subset-enumeration routines.
pub const ENUMERATION_LIMIT: usize = 20;

enum Kind<'a> {
    Independence(&'a [Var]),
    VertexMatching(&'a [Var]),
    EdgeMatching(&'a dyn Fn(Vertex, Vertex) -> Var),
}

struct Engine<'a> {
    nb: Vec<FixedBitSet>,
    kind: Kind<'a>,
    cache: HashMap<FixedBitSet, IntPoly>,
}

impl Engine<'_> {
    fn run(g: &Graph, kind: Kind<'_>) -> Result<IntPoly, PolyError> {
        let mut e = Engine {
            nb: g.neighbor_bits(),
            kind,
            cache: HashMap::new(),
        };
        e.eval(&g.full_set())
    }

    fn components(&self, alive: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut left = alive.clone();
        let mut out = Vec::new();
        while let Some(s) = left.ones().next() {
            let mut comp = FixedBitSet::with_capacity(alive.len());
            let mut stack = vec![s];
            comp.insert(s);
            left.set(s, false);
            while let Some(v) = stack.pop() {
                let mut next = self.nb[v].clone();
                next.intersect_with(&left);
                for w in next.ones() {
                    comp.insert(w);
                    stack.push(w);
                }
                left.difference_with(&next);
            }
            out.push(comp);
        }
        out
    }

    fn eval(&mut self, alive: &FixedBitSet) -> Result<IntPoly, PolyError> {
        let Some(v) = alive.ones().next() else {
            return Ok(IntPoly::one());
        };
        if let Some(p) = self.cache.get(alive) {
            return Ok(p.clone());
        }
        let comps = self.components(alive);
        let result = if comps.len() > 1 {
            let mut acc = IntPoly::one();
            for c in &comps {
                acc = acc.checked_mul(&self.eval(c)?)?;
            }
            acc
        } else {
            let mut rest = alive.clone();
            rest.set(v, false);
            let mut acc = self.eval(&rest)?;
            let mut nbrs = self.nb[v].clone();
            nbrs.intersect_with(alive);
            match self.kind {
                Kind::Independence(labels) => {
                    let mut far = rest.clone();
                    far.difference_with(&nbrs);
                    let sub = self.eval(&far)?;
                    acc = acc + sub.mul_term(&Monomial::var(labels[v]), &BigInt::one());
                }
                Kind::VertexMatching(labels) => {
                    for u in nbrs.ones() {
                        let mut far = rest.clone();
                        far.set(u, false);
                        let sub = self.eval(&far)?;
                        let m = Monomial::from_vars([labels[v], labels[u]]);
                        acc = acc - sub.mul_term(&m, &BigInt::one());
                    }
                }
                Kind::EdgeMatching(label) => {
                    for u in nbrs.ones() {
                        let mut far = rest.clone();
                        far.set(u, false);
                        let sub = self.eval(&far)?;
                        acc = acc + sub.mul_term(&Monomial::var(label(v, u)), &BigInt::one());
                    }
                }
            }
            acc
        };
        result.check_cap()?;
        self.cache.insert(alive.clone(), result.clone());
        Ok(result)
    }
}

fn identity_labels(n: usize) -> Vec<Var> {
    (0..n as Var).collect()
}

/// `I(G) = Σ_{S independent} Π_{v∈S} x_v`.
pub fn independence_poly(g: &Graph) -> Result<IntPoly, PolyError> {
    independence_poly_labeled(g, &identity_labels(g.n()))
}

/// `I(G)` with `x_v` renamed to `x_{labels[v]}` (the relative polynomial).
pub fn independence_poly_labeled(g: &Graph, labels: &[Var]) -> Result<IntPoly, PolyError> {
    assert_eq!(labels.len(), g.n(), "one label per vertex");
    Engine::run(g, Kind::Independence(labels))
}

/// `I(G)` by listing every vertex subset.
pub fn independence_poly_enumerated(g: &Graph) -> Result<IntPoly, PolyError> {
    let n = g.n();
    if n > ENUMERATION_LIMIT {
        return Err(PolyError::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut p = IntPoly::zero();
    for s in 0u32..(1 << n) {
        if (0..n).all(|v| s >> v & 1 == 0 || masks[v] & s == 0) {
            p.add_term(
                Monomial::from_vars((0..n).filter(|&v| s >> v & 1 == 1).map(|v| v as Var)),
                BigInt::one(),
            );
        }
    }
    Ok(p)
}

/// `μ_V(G) = Σ_M Π_{uv∈M} (-x_u x_v)`.
pub fn vertex_matching_poly(g: &Graph) -> Result<IntPoly, PolyError> {
    vertex_matching_poly_labeled(g, &identity_labels(g.n()))
}

pub fn vertex_matching_poly_labeled(g: &Graph, labels: &[Var]) -> Result<IntPoly, PolyError> {
    assert_eq!(labels.len(), g.n(), "one label per vertex");
    Engine::run(g, Kind::VertexMatching(labels))
}

/// `μ_V(G)` as the multi-affine part of `Π_{uv∈E} (1 - x_u x_v)`.
pub fn vertex_matching_poly_map(g: &Graph) -> Result<IntPoly, PolyError> {
    let mut acc = IntPoly::one();
    for (u, v) in g.edges() {
        let factor = &IntPoly::one()
            - &IntPoly::term(Monomial::from_vars([u as Var, v as Var]), BigInt::one());
        // a square stays a square under further products, so trim as we go
        acc = acc.checked_mul(&factor)?.multi_affine_part();
    }
    Ok(acc)
}

/// Largest vertex count accepted by [`matching_counts`]; keeps every count in a `u128`.
pub const MATCHING_COUNT_LIMIT: usize = 48;

/// `m_k`, the number of `k`-edge matchings, for `k = 0, 1, ...`.
pub fn matching_counts(g: &Graph) -> Result<Vec<BigInt>, PolyError> {
    let n = g.n();
    if n > MATCHING_COUNT_LIMIT {
        return Err(PolyError::TooLarge {
            n,
            limit: MATCHING_COUNT_LIMIT,
        });
    }
    let nb: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut memo = HashMap::new();
    Ok(count_matchings(&nb, full, &mut memo)
        .into_iter()
        .map(BigInt::from)
        .collect())
}

fn count_matchings(nb: &[u64], s: u64, memo: &mut HashMap<u64, Vec<u128>>) -> Vec<u128> {
    if s == 0 {
        return vec![1];
    }
    if let Some(c) = memo.get(&s) {
        return c.clone();
    }
    let v = s.trailing_zeros();
    let rest = s & !(1 << v);
    let mut out = count_matchings(nb, rest, memo);
    let mut partners = nb[v as usize] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        let sub = count_matchings(nb, rest & !(1 << u), memo);
        if out.len() < sub.len() + 1 {
            out.resize(sub.len() + 1, 0);
        }
        for (k, c) in sub.iter().enumerate() {
            out[k + 1] += c;
        }
    }
    memo.insert(s, out.clone());
    out
}

pub(crate) fn mul_counts(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn add_counts(acc: &mut Vec<BigInt>, p: &[BigInt], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

/// `m_k` for a forest by the rooted-subtree recursion; no size limit.
pub fn forest_matching_counts(g: &Graph) -> Result<Vec<BigInt>, PolyError> {
    if g.m() + g.connected_components().len() != g.n() {
        return Err(PolyError::NotAForest);
    }
    let n = g.n();
    // free[u]: matchings of the subtree at u leaving u unmatched; all[u]: every matching
    let mut free: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    let mut all: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut total = vec![BigInt::one()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut order = Vec::new();
        let mut parent = vec![usize::MAX; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        for &u in order.iter().rev() {
            let kids: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| parent[w] == u)
                .collect();
            // prefix[i] = Π_{j<i} all[kid_j], suffix likewise
            let mut prefix = vec![vec![BigInt::one()]];
            for &c in &kids {
                prefix.push(mul_counts(prefix.last().unwrap(), &all[c]));
            }
            let mut suffix = vec![vec![BigInt::one()]; kids.len() + 1];
            for i in (0..kids.len()).rev() {
                suffix[i] = mul_counts(&suffix[i + 1], &all[kids[i]]);
            }
            let f = prefix.last().unwrap().clone();
            let mut a = f.clone();
            for (i, &c) in kids.iter().enumerate() {
                let t = mul_counts(&mul_counts(&prefix[i], &free[c]), &suffix[i + 1]);
                add_counts(&mut a, &t, 1);
            }
            free[u] = f;
            all[u] = a;
        }
        total = mul_counts(&total, &all[root]);
    }
    while total.len() > 1 && total.last().is_some_and(Zero::is_zero) {
        total.pop();
    }
    Ok(total)
}

/// `Σ_k (-1)^k m_k z^{2k}`.
pub fn matching_diagonal_from_counts(counts: Vec<BigInt>) -> RatPoly {
    let mut coeffs = vec![BigRational::zero(); 2 * counts.len() - 1];
    for (k, c) in counts.into_iter().enumerate() {
        let c = BigRational::from_integer(c);
        coeffs[2 * k] = if k % 2 == 0 { c } else { -c };
    }
    RatPoly::new(coeffs)
}

/// Diagonal of `μ_V(G)`: `Σ_k (-1)^k m_k z^{2k}`, without building the
/// multivariate polynomial.
pub fn vertex_matching_diagonal(g: &Graph) -> Result<RatPoly, PolyError> {
    Ok(matching_diagonal_from_counts(matching_counts(g)?))
}

/// Diagonal of `I(G)` straight from the counts of independent sets.
pub fn independence_diagonal(g: &Graph) -> Result<RatPoly, PolyError> {
    Ok(super::diag(&independence_poly(g)?))
}

/// `μ_E(G) = Σ_M Π_{e∈M} x_e`, with edge `e` named by its index in `g.edges()`.
pub fn edge_matching_poly(g: &Graph) -> Result<IntPoly, PolyError> {
    let edges = g.edges();
    let label = |u: Vertex, v: Vertex| {
        let key = (u.min(v), u.max(v));
        edges.binary_search(&key).expect("edge of g") as Var
    };
    edge_matching_poly_labeled(g, &label)
}

pub fn edge_matching_poly_labeled(
    g: &Graph,
    label: &dyn Fn(Vertex, Vertex) -> Var,
) -> Result<IntPoly, PolyError> {
    Engine::run(g, Kind::EdgeMatching(label))
}

/// Hypergraph independence polynomial by subset enumeration; `x_v` is named
/// by the vertex's original label.
pub fn hypergraph_independence_poly(h: &Hypergraph) -> Result<IntPoly, PolyError> {
    let n = h.n();
    if n > ENUMERATION_LIMIT {
        return Err(PolyError::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut p = IntPoly::zero();
    for s in 0u32..(1 << n) {
        if masks.iter().all(|&e| e & s != e) {
            let vars = (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .map(|v| h.labels()[v] as Var);
            p.add_term(Monomial::from_vars(vars), BigInt::one());
        }
    }
    Ok(p)
}
