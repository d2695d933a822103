//! Exact polynomial arithmetic and the graph polynomials built on it.

mod graph_polys;
mod multi;
mod uni;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

pub(crate) use graph_polys::{add_counts, mul_counts};
pub use graph_polys::{
    edge_matching_poly, edge_matching_poly_labeled, forest_matching_counts,
    hypergraph_independence_poly, independence_diagonal, independence_poly,
    independence_poly_enumerated, independence_poly_labeled, matching_counts,
    matching_diagonal_from_counts, vertex_matching_diagonal, vertex_matching_poly,
    vertex_matching_poly_labeled, vertex_matching_poly_map, ENUMERATION_LIMIT,
    MATCHING_COUNT_LIMIT,
};
pub use multi::{var_text, Monomial, MultiPoly, Var};
pub use uni::UniPoly;

use crate::graph::{Graph, Vertex};

/// Hard cap on stored terms per polynomial.
pub const MAX_TERMS: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial exceeds {0} terms")]
    TooManyTerms(usize),
    #[error("variable x_{0} has no value")]
    MissingVariable(Var),
    #[error("direction has no entry for variable x_{0}")]
    MissingDirection(Var),
    #[error("direction entry for x_{0} is not strictly positive")]
    NonPositiveDirection(Var),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not multi-affine")]
    NotMultiAffine,
    #[error("term {0} contains two split variables")]
    SplitViolation(String),
    #[error("labeling sends edge {0}-{1} to a non-edge")]
    NotHomomorphism(Vertex, Vertex),
    #[error("labeling has {0} entries, source graph has {1} vertices")]
    LabelingSize(usize, usize),
    #[error("subset enumeration is limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is not a forest")]
    NotAForest,
}

/// A map from the vertices of a source graph to those of a target graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    map: Vec<Vertex>,
}

impl Labeling {
    /// Checks that edges of `source` land on edges of `target`.
    pub fn new(source: &Graph, target: &Graph, map: Vec<Vertex>) -> Result<Self, PolyError> {
        if map.len() != source.n() {
            return Err(PolyError::LabelingSize(map.len(), source.n()));
        }
        for (u, v) in source.edges() {
            if map[u] >= target.n() || map[v] >= target.n() || !target.has_edge(map[u], map[v]) {
                return Err(PolyError::NotHomomorphism(u, v));
            }
        }
        Ok(Labeling { map })
    }

    /// Unchecked map; used for variable renaming where no graphs exist.
    pub fn from_map(map: Vec<Vertex>) -> Self {
        Labeling { map }
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            map: (0..n).collect(),
        }
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.map.get(v).copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.map
    }
}

/// `p` with each `x_u` renamed to `x_{φ(u)}`; exponents accumulate.
pub fn relative_poly<C: crate::scalar::Scalar>(
    p: &MultiPoly<C>,
    phi: &Labeling,
) -> Result<MultiPoly<C>, PolyError> {
    if let Some(&v) = p
        .variables()
        .iter()
        .find(|&&v| phi.get(v as usize).is_none())
    {
        return Err(PolyError::MissingVariable(v));
    }
    Ok(p.map_vars(|v| phi.map[v as usize] as Var))
}

/// A strictly positive direction vector `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayDirection(BTreeMap<Var, BigRational>);

impl RayDirection {
    pub fn new(entries: impl IntoIterator<Item = (Var, BigRational)>) -> Result<Self, PolyError> {
        let map: BTreeMap<Var, BigRational> = entries.into_iter().collect();
        if let Some((&v, _)) = map.iter().find(|(_, t)| !t.is_positive()) {
            return Err(PolyError::NonPositiveDirection(v));
        }
        Ok(RayDirection(map))
    }

    /// All-ones direction over the given variables.
    pub fn ones(vars: impl IntoIterator<Item = Var>) -> Self {
        RayDirection(
            vars.into_iter()
                .map(|v| (v, BigRational::from_integer(1.into())))
                .collect(),
        )
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.0.get(&v)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Var, &BigRational)> {
        self.0.iter()
    }
}

/// `p(t z)` with exact rational coefficients.
pub fn univariate_restriction(
    p: &MultiPoly<BigInt>,
    t: &RayDirection,
) -> Result<UniPoly<BigRational>, PolyError> {
    p.restrict(|v| t.get(v).cloned())
}

/// `p(z, ..., z)`.
pub fn diag(p: &MultiPoly<BigInt>) -> UniPoly<BigRational> {
    p.diagonal()
}

/// `p = f0 + Σ x_i f_i` where no term of `p` uses two of the split variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperSplitting {
    pub f0: MultiPoly<BigInt>,
    pub parts: Vec<(Var, MultiPoly<BigInt>)>,
}

impl ProperSplitting {
    pub fn reassemble(&self) -> MultiPoly<BigInt> {
        let mut out = self.f0.clone();
        for (v, f) in &self.parts {
            out = &out + &f.mul_term(&Monomial::var(*v), &BigInt::from(1));
        }
        out
    }
}

pub fn proper_splitting(p: &MultiPoly<BigInt>, vars: &[Var]) -> Result<ProperSplitting, PolyError> {
    if !p.is_multi_affine() {
        return Err(PolyError::NotMultiAffine);
    }
    for (m, _) in p.terms() {
        if m.pairs().iter().filter(|(v, _)| vars.contains(v)).count() >= 2 {
            return Err(PolyError::SplitViolation(
                MultiPoly::term(m.clone(), BigInt::from(1)).to_string(),
            ));
        }
    }
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let split = ProperSplitting {
        f0: p.set_zero(&sorted),
        parts: sorted
            .iter()
            .map(|&v| (v, p.partial_derivative(v)))
            .collect(),
    };
    assert_eq!(&split.reassemble(), p, "splitting failed to reassemble");
    Ok(split)
}

/// True when every coefficient is a positive integer.
pub fn has_positive_coefficients(p: &MultiPoly<BigInt>) -> bool {
    p.terms().all(|(_, c)| c.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};
    use crate::scalar::int;

    #[test]
    fn splitting_on_a_clique() {
        let g = complete(3);
        let p = independence_poly(&g).unwrap();
        let s = proper_splitting(&p, &[0, 1]).unwrap();
        assert_eq!(s.f0.to_string(), "1 + x_2");
        assert_eq!(s.parts[0].1.to_string(), "1");
        assert_eq!(s.reassemble(), p);
    }

    #[test]
    fn splitting_rejects_independent_pair() {
        let p = independence_poly(&cycle(6)).unwrap();
        assert!(matches!(
            proper_splitting(&p, &[0, 2]),
            Err(PolyError::SplitViolation(_))
        ));
        assert!(proper_splitting(&p, &[3]).is_ok());
    }

    #[test]
    fn relative_collapse() {
        let p = independence_poly(&star(2)).unwrap();
        let phi = Labeling::from_map(vec![0, 1, 1]);
        let r = relative_poly(&p, &phi).unwrap();
        assert_eq!(r.to_string(), "1 + x_0 + 2 x_1 + x_1^2");
        assert_eq!(diag(&r), diag(&p));
        assert!(relative_poly(&p, &Labeling::from_map(vec![0])).is_err());
    }

    #[test]
    fn labeling_checks_edges() {
        let p3 = path(3);
        let k2 = complete(2);
        assert!(Labeling::new(&p3, &k2, vec![0, 1, 0]).is_ok());
        assert!(matches!(
            Labeling::new(&p3, &k2, vec![0, 0, 1]),
            Err(PolyError::NotHomomorphism(0, 1))
        ));
    }

    #[test]
    fn ray_restriction() {
        let p = independence_poly(&star(3)).unwrap();
        let t = RayDirection::ones(p.variables());
        assert_eq!(
            univariate_restriction(&p, &t).unwrap().to_string(),
            "1 + 4z + 3z^2 + z^3"
        );
        assert!(RayDirection::new([(0, int(0))]).is_err());
        let partial = RayDirection::new([(0, int(1))]).unwrap();
        assert!(matches!(
            univariate_restriction(&p, &partial),
            Err(PolyError::MissingDirection(1))
        ));
    }
}
