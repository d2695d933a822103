//! Real-rootedness, interlacing, stability probes and the graph decisions.

mod probes;
mod roots;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

pub use probes::{
    combination, common_interlacing_probe, ray_passes, ray_samples, rayleigh_sides,
    real_point_samples, restrict_along, same_phase_compatible_probe, same_phase_probe,
    selection_parts, strongly_rayleigh_probe, weight_samples, Outcome, Point, ProbeVerdict,
    RayleighPoints, Witness,
};
pub use roots::{
    cauchy_bound, count_real_roots, count_roots_open, interlaces, is_real_rooted,
    isolate_real_roots, isolation_width, sturm_chain, RealRoot, RealRootednessVerdict,
    RootInterval,
};

use crate::graph::{
    find_claw, find_induced_p3, is_claw_free, reduce_hypergraph, Claw, Graph, Hypergraph,
};
use crate::poly::{diag, hypergraph_independence_poly, independence_poly_labeled, PolyError, Var};
use crate::scalar::int;
use crate::RatPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilityError {
    #[error("the zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("polynomial #{0} is not real-rooted")]
    NotRealRooted(usize),
    #[error("degrees {p} and {q} are not an interlacing pair")]
    DegreeGap { p: usize, q: usize },
    #[error("at least one sample is required")]
    NoSamples,
    #[error("no polynomials given")]
    EmptyInput,
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `1 + 4z + 3z^2 + z^3`, the diagonal of `I(K_{1,3})`.
pub fn claw_diagonal() -> RatPoly {
    RatPoly::new(vec![int(1), int(4), int(3), int(1)])
}

/// Zeroes every variable of `I(G)` outside a claw and restricts the rest to
/// the all-ones ray. Computed as the independence polynomial of the
/// induced claw, which is the same polynomial.
pub fn claw_witness_restriction(g: &Graph) -> Option<(Claw, RatPoly)> {
    let claw = find_claw(g)?;
    let verts = [claw.center, claw.leaves[0], claw.leaves[1], claw.leaves[2]];
    let (sub, map) = g.induced_subgraph(&verts);
    let labels: Vec<Var> = map.iter().map(|&v| v as Var).collect();
    let p = independence_poly_labeled(&sub, &labels).expect("four vertices");
    let d = diag(&p);
    assert_eq!(
        d,
        claw_diagonal(),
        "restriction to a claw must be the claw diagonal"
    );
    Some((claw, d))
}

/// `I(G)` is same-phase stable exactly when `G` is claw-free.
pub fn decide_same_phase_stable_independence(g: &Graph) -> bool {
    is_claw_free(g)
}

/// For connected `G`, `I(G)` is real stable exactly when `G` is complete.
pub fn decide_real_stable_independence(g: &Graph) -> Result<bool, StabilityError> {
    if !g.is_connected() {
        return Err(StabilityError::Disconnected);
    }
    Ok(g.is_complete())
}

/// An exact Rayleigh violation for `I(G)` from an induced path `u - v - w`:
/// `x_u = x_w = -1`, `x_v = 1`, every other variable 0.
pub fn rayleigh_witness_point(g: &Graph) -> Option<(Point, Var, Var)> {
    let (u, v, w) = find_induced_p3(g)?;
    let mut x: Point = (0..g.n() as Var).map(|a| (a, int(0))).collect();
    x.insert(u as Var, int(-1));
    x.insert(v as Var, int(1));
    x.insert(w as Var, int(-1));
    Some((x, u as Var, w as Var))
}

/// A hypergraph's independence polynomial is same-phase stable exactly
/// when its reduction is a claw-free graph.
pub fn decide_hypergraph_same_phase(h: &Hypergraph) -> bool {
    let r = reduce_hypergraph(h);
    r.as_graph().is_some_and(|g| is_claw_free(&g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HypergraphWitness {
    /// An edge of size `k >= 3` in the reduction; zeroing everything else
    /// leaves `(1 + x)^k - x^k`.
    LargeEdge {
        edge: Vec<usize>,
        diagonal: Vec<String>,
    },
    /// A claw in the reduced graph (labels are original vertex ids).
    Claw {
        center: usize,
        leaves: [usize; 3],
        diagonal: Vec<String>,
    },
}

impl HypergraphWitness {
    /// The univariate restriction the witness certifies as not real-rooted.
    pub fn diagonal(&self) -> RatPoly {
        let cs = match self {
            HypergraphWitness::LargeEdge { diagonal, .. }
            | HypergraphWitness::Claw { diagonal, .. } => diagonal,
        };
        RatPoly::new(
            cs.iter()
                .map(|s| int(s.parse().expect("integer coefficient")))
                .collect(),
        )
    }
}

fn int_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs()
        .iter()
        .map(crate::scalar::rational_string)
        .collect()
}

/// The exact certificate behind a `false` from
/// [`decide_hypergraph_same_phase`].
pub fn hypergraph_witness(h: &Hypergraph) -> Option<HypergraphWitness> {
    let r = reduce_hypergraph(h);
    if let Some(e) = r.edges().iter().find(|e| e.len() >= 3) {
        let sub = Hypergraph::new(e.len(), vec![(0..e.len()).collect()]).unwrap();
        let d = diag(&hypergraph_independence_poly(&sub).expect("small edge"));
        let edge = e.iter().map(|&v| r.labels()[v]).collect();
        return Some(HypergraphWitness::LargeEdge {
            edge,
            diagonal: int_strings(&d),
        });
    }
    let g = r.as_graph()?;
    let (claw, d) = claw_witness_restriction(&g)?;
    let l = r.labels();
    Some(HypergraphWitness::Claw {
        center: l[claw.center],
        leaves: claw.leaves.map(|v| l[v]),
        diagonal: int_strings(&d),
    })
}

/// `(1 + x)^k - x^k` as integer coefficients.
pub fn large_edge_diagonal(k: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(1)];
    for _ in 0..k {
        let mut next = vec![BigInt::from(0); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i] += a;
            next[i + 1] += a;
        }
        c = next;
    }
    c.pop();
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{c6, complete, path, schlafli_graph, star, w6};
    use crate::poly::{independence_poly, proper_splitting, vertex_matching_poly};

    #[test]
    fn claw_restriction() {
        let (claw, d) = claw_witness_restriction(&star(3)).unwrap();
        assert_eq!(claw.center, 0);
        assert_eq!(d.to_string(), "1 + 4z + 3z^2 + z^3");
        let mut g = star(3);
        g.add_vertex(&[], None).unwrap();
        assert_eq!(claw_witness_restriction(&g).unwrap().1, claw_diagonal());
        assert!(claw_witness_restriction(&schlafli_graph()).is_none());
    }

    #[test]
    fn decisions() {
        assert!(decide_same_phase_stable_independence(&c6()));
        assert!(decide_same_phase_stable_independence(&w6()));
        assert!(!decide_same_phase_stable_independence(&star(3)));
        assert_eq!(decide_real_stable_independence(&complete(5)), Ok(true));
        assert_eq!(decide_real_stable_independence(&path(3)), Ok(false));
        assert_eq!(decide_real_stable_independence(&c6()), Ok(false));
        assert!(decide_real_stable_independence(&crate::graph::empty(2)).is_err());
    }

    #[test]
    fn same_phase_probe_outcomes() {
        let v = same_phase_probe(&independence_poly(&c6()).unwrap(), 100, 7).unwrap();
        assert_eq!(v.outcome, Outcome::Corroborated);
        assert!(v.sampling_limited);
        let claw = independence_poly(&star(3)).unwrap();
        let v = same_phase_probe(&claw, 5, 7).unwrap();
        assert!(v.refuted());
        assert_eq!(v.samples, 1);
        match v.witness {
            Some(Witness::Ray { ref t, .. }) => {
                assert!(t.values().all(|x| *x == int(1)));
                assert!(!ray_passes(&claw, t).unwrap());
            }
            _ => panic!("expected a ray witness"),
        }
        assert_eq!(v.exact_values, vec!["1", "4", "3", "1"]);
    }

    #[test]
    fn rayleigh_on_p3_and_complete() {
        let p = independence_poly(&path(3)).unwrap();
        let x: Point = [(0, int(-1)), (1, int(1)), (2, int(-1))]
            .into_iter()
            .collect();
        let v = strongly_rayleigh_probe(&p, RayleighPoints::Explicit(vec![x.clone()]), 0).unwrap();
        assert!(v.refuted());
        assert_eq!(v.exact_values, vec!["0", "1"]);
        assert_eq!(
            v.witness,
            Some(Witness::Rayleigh {
                x: x.clone(),
                j: 0,
                k: 2
            })
        );
        assert_eq!(rayleigh_sides(&p, &x, 0, 2).unwrap(), (int(0), int(1)));
        let (wx, j, k) = rayleigh_witness_point(&path(3)).unwrap();
        let (l, r) = rayleigh_sides(&p, &wx, j, k).unwrap();
        assert!(l < r);
        let k5 = independence_poly(&complete(5)).unwrap();
        assert!(!strongly_rayleigh_probe(&k5, RayleighPoints::Seeded(40), 3)
            .unwrap()
            .refuted());
        let mv = vertex_matching_poly(&c6()).unwrap();
        assert!(!strongly_rayleigh_probe(&mv, RayleighPoints::Seeded(20), 1)
            .unwrap()
            .refuted());
        assert!(strongly_rayleigh_probe(&(&p * &p), RayleighPoints::Seeded(1), 0).is_err());
    }

    #[test]
    fn common_interlacing() {
        let p = RatPoly::new(vec![int(3), int(-4), int(1)]);
        let q = RatPoly::new(vec![int(3), int(4), int(1)]);
        assert!(!common_interlacing_probe(&[p.clone(), p.clone()], 10, 0)
            .unwrap()
            .refuted());
        let v = common_interlacing_probe(&[p, q], 10, 0).unwrap();
        assert!(v.refuted());
        assert_eq!(v.exact_values, vec!["6", "0", "2"]);
        let bad = RatPoly::new(vec![int(1), int(0), int(1)]);
        assert_eq!(
            common_interlacing_probe(&[bad], 3, 0),
            Err(StabilityError::NotRealRooted(0))
        );
    }

    #[test]
    fn compatibility_of_splittings() {
        let c = independence_poly(&c6()).unwrap();
        let parts = selection_parts(&proper_splitting(&c, &[0]).unwrap());
        assert!(!same_phase_compatible_probe(&parts, 20, 10, 5)
            .unwrap()
            .refuted());
        let tri = proper_splitting(&independence_poly(&w6()).unwrap(), &[0, 1, 5]).unwrap();
        assert!(
            !same_phase_compatible_probe(&selection_parts(&tri), 20, 10, 5)
                .unwrap()
                .refuted()
        );
        let claw = independence_poly(&star(3)).unwrap();
        let parts = selection_parts(&proper_splitting(&claw, &[0]).unwrap());
        assert!(same_phase_compatible_probe(&parts, 5, 5, 5)
            .unwrap()
            .refuted());
        let single = same_phase_compatible_probe(&[claw.clone()], 3, 3, 0).unwrap();
        assert_eq!(
            single.refuted(),
            same_phase_probe(&claw, 3, 0).unwrap().refuted()
        );
    }

    #[test]
    fn hypergraph_decisions() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(!decide_hypergraph_same_phase(&h));
        let w = hypergraph_witness(&h).unwrap();
        assert_eq!(w.diagonal(), RatPoly::new(vec![int(1), int(3), int(3)]));
        assert!(!is_real_rooted(&w.diagonal()).unwrap().real_rooted);
        assert!(decide_hypergraph_same_phase(&Hypergraph::from_graph(&c6())));
        let h = Hypergraph::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        assert!(decide_hypergraph_same_phase(&h));
        assert!(hypergraph_witness(&h).is_none());
        let claw = Hypergraph::from_graph(&star(3));
        assert!(matches!(
            hypergraph_witness(&claw),
            Some(HypergraphWitness::Claw { center: 0, .. })
        ));
        assert_eq!(
            large_edge_diagonal(3),
            vec![1, 3, 3]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }
}
