use serde::Serialize;

use super::BoundsError;
use crate::graph::{
    clique_vertex_set_kv, is_simplicial_graph, line_graph, simplicial_cliques, CliqueRef, Graph,
    Vertex,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{
    add_counts, diag, forest_matching_counts, independence_poly, independence_poly_labeled,
    matching_diagonal_from_counts, mul_counts, vertex_matching_diagonal, vertex_matching_poly,
    vertex_matching_poly_labeled, Monomial, MultiPoly, Var,
};
use crate::tree::{path_tree, simplicial_clique_tree, CliqueTreeStruct, LabeledTree};
use crate::{IntPoly, RatPoly, Rational};

/// `I(G) | I(T⊠_K(G))` with `I(T)` relative along the tree labeling.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisibilityCertificate {
    pub clique: Vec<String>,
    pub tree_vertices: usize,
    /// `I(G) I(T \ K) = I(T) I(G \ K)`.
    pub identity_holds: bool,
    /// The divisor is `I` of the components meeting `K`; false when that
    /// is a proper part of `G`.
    pub divisor_is_whole_graph: bool,
    pub divides: bool,
    pub multiply_back: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    pub quotient_terms: usize,
}

impl DivisibilityCertificate {
    pub fn holds(&self) -> bool {
        self.identity_holds && self.divides && self.multiply_back
    }
}

fn labeled_subgraph_poly(
    g: &Graph,
    labels: &[Var],
    keep: impl Fn(usize) -> bool,
    f: impl Fn(&Graph, &[Var]) -> Result<IntPoly, crate::poly::PolyError>,
) -> Result<IntPoly, BoundsError> {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| keep(v)).collect();
    let (h, map) = g.induced_subgraph(&verts);
    let sub: Vec<Var> = map.iter().map(|&v| labels[v]).collect();
    Ok(f(&h, &sub)?)
}

fn identity_labels(n: usize) -> Vec<Var> {
    (0..n as Var).collect()
}

/// Vertices of the components containing at least one of `seeds`.
fn components_meeting(g: &Graph, seeds: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = g
        .connected_components()
        .into_iter()
        .filter(|c| c.iter().any(|v| seeds.contains(v)))
        .flatten()
        .collect();
    out.sort_unstable();
    out
}

struct Division {
    identity: bool,
    whole: bool,
    quotient: Option<IntPoly>,
    multiply_back: bool,
}

/// Checks `f(G) f(T \ root) = f(T) f(G \ root)` and divides `f(T)` by `f`
/// of the components meeting the root set.
fn divide(
    g: &Graph,
    p_g: &IntPoly,
    p_t: &IntPoly,
    p_t_minus: &IntPoly,
    root: &[Vertex],
    f: &dyn Fn(&Graph, &[Var]) -> Result<IntPoly, crate::poly::PolyError>,
) -> Result<Division, BoundsError> {
    let labels = identity_labels(g.n());
    let p_g_minus = labeled_subgraph_poly(g, &labels, |v| !root.contains(&v), f)?;
    let identity = p_g.checked_mul(p_t_minus)? == p_t.checked_mul(&p_g_minus)?;
    let comp = components_meeting(g, root);
    let whole = comp.len() == g.n();
    let divisor = if whole {
        p_g.clone()
    } else {
        labeled_subgraph_poly(g, &labels, |v| comp.contains(&v), f)?
    };
    let quotient = p_t.exact_divide(&divisor)?;
    let multiply_back = match &quotient {
        Some(q) => &q.checked_mul(&divisor)? == p_t,
        None => false,
    };
    Ok(Division {
        identity,
        whole,
        quotient,
        multiply_back,
    })
}

fn namer(g: &Graph) -> impl Fn(Var) -> String + '_ {
    move |v| g.name(v as usize)
}

struct CliqueParts {
    cert: DivisibilityCertificate,
    tree_poly: IntPoly,
    tree_minus_poly: IntPoly,
    quotient: Option<IntPoly>,
}

fn certify_clique(g: &Graph, k: &CliqueRef) -> Result<CliqueParts, BoundsError> {
    let t = simplicial_clique_tree(g, k)?;
    let labels = t.label_vars();
    let root = t.root_clique().to_vec();
    let p_t = independence_poly_labeled(t.graph(), &labels)?;
    let p_t_minus = labeled_subgraph_poly(
        t.graph(),
        &labels,
        |u| !root.contains(&u),
        independence_poly_labeled,
    )?;
    let p_g = independence_poly(g)?;
    let d = divide(
        g,
        &p_g,
        &p_t,
        &p_t_minus,
        k.vertices(),
        &independence_poly_labeled,
    )?;
    let name = namer(g);
    Ok(CliqueParts {
        cert: DivisibilityCertificate {
            clique: k.vertices().iter().map(|&v| g.name(v)).collect(),
            tree_vertices: t.len(),
            identity_holds: d.identity,
            divisor_is_whole_graph: d.whole,
            divides: d.quotient.is_some(),
            multiply_back: d.multiply_back,
            quotient: d.quotient.as_ref().map(|q| q.to_text(&name)),
            quotient_terms: d.quotient.as_ref().map_or(0, MultiPoly::num_terms),
        },
        tree_poly: p_t,
        tree_minus_poly: p_t_minus,
        quotient: d.quotient,
    })
}

/// Certifies `I(G) | I(T⊠_K(G))` for a simplicial `G` and clique `K`.
pub fn verify_divisibility(
    g: &Graph,
    k: &CliqueRef,
) -> Result<DivisibilityCertificate, BoundsError> {
    if !is_simplicial_graph(g) {
        return Err(BoundsError::Precondition("graph is not simplicial".into()));
    }
    Ok(certify_clique(g, k)?.cert)
}

/// [`verify_divisibility`] for every simplicial clique of `G`.
pub fn verify_divisibility_all(g: &Graph) -> Result<Vec<DivisibilityCertificate>, BoundsError> {
    if !is_simplicial_graph(g) {
        return Err(BoundsError::Precondition("graph is not simplicial".into()));
    }
    simplicial_cliques(g)
        .iter()
        .map(|k| Ok(certify_clique(g, k)?.cert))
        .collect()
}

/// Path trees with more nodes than this are certified on the diagonal:
/// their relative polynomials run to millions of terms.
pub const GODSIL_MULTIVARIATE_NODES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Specialization {
    Multivariate,
    /// Every variable set to one variable `z`.
    Diagonal,
}

/// `μ_V(G) | μ_V(T_v(G))`, computed on the path tree and again through
/// `T⊠_{K_v}(L(G))` with `x_e -> -x_u x_w`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GodsilCertificate {
    pub vertex: String,
    pub specialization: Specialization,
    pub path_tree_nodes: usize,
    pub identity_holds: bool,
    pub divisor_is_whole_graph: bool,
    pub divides: bool,
    pub multiply_back: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_diagonal_degree: Option<usize>,
    /// Substituted `I(T⊠)` and `I(T⊠ \ K_v)` equal `μ_V(T)` and `μ_V(T \ v)`.
    pub via_independence_agrees: bool,
    /// The independence-side certificate holds and its substituted quotient
    /// equals the matching quotient.
    pub independence_certificate_holds: bool,
}

impl GodsilCertificate {
    pub fn holds(&self) -> bool {
        self.identity_holds
            && self.divides
            && self.multiply_back
            && self.via_independence_agrees
            && self.independence_certificate_holds
    }
}

pub fn verify_godsil_matching_divisibility(
    g: &Graph,
    v: Vertex,
) -> Result<GodsilCertificate, BoundsError> {
    g.check_vertex(v)?;
    let t = path_tree(g, v)?;
    if t.len() <= GODSIL_MULTIVARIATE_NODES {
        godsil_multivariate(g, v, &t)
    } else {
        godsil_diagonal(g, v, &t)
    }
}

/// Same certificate, forced onto the diagonal.
pub fn verify_godsil_matching_divisibility_diagonal(
    g: &Graph,
    v: Vertex,
) -> Result<GodsilCertificate, BoundsError> {
    g.check_vertex(v)?;
    godsil_diagonal(g, v, &path_tree(g, v)?)
}

fn godsil_multivariate(
    g: &Graph,
    v: Vertex,
    t: &LabeledTree,
) -> Result<GodsilCertificate, BoundsError> {
    let tg = t.to_graph();
    let labels = t.label_vars();
    let mu_t = vertex_matching_poly_labeled(&tg, &labels)?;
    let mu_t_minus = labeled_subgraph_poly(&tg, &labels, |u| u != 0, vertex_matching_poly_labeled)?;
    let mu_g = vertex_matching_poly(g)?;
    let d = divide(
        g,
        &mu_g,
        &mu_t,
        &mu_t_minus,
        &[v],
        &vertex_matching_poly_labeled,
    )?;

    let lg = line_graph(g);
    let kv = clique_vertex_set_kv(g, v, &lg)?;
    let parts = certify_clique(&lg.line_graph, &kv)?;
    let sigma = |e: Var| {
        let (a, b) = lg.vertex_to_edge[e as usize];
        -MultiPoly::term(Monomial::from_vars([a as Var, b as Var]), 1.into())
    };
    let via = parts.tree_poly.substitute(sigma)? == mu_t
        && parts.tree_minus_poly.substitute(sigma)? == mu_t_minus;
    let quotients_match = match (&parts.quotient, &d.quotient) {
        (Some(qi), Some(qm)) => &qi.substitute(sigma)? == qm,
        _ => false,
    };

    let name = namer(g);
    Ok(GodsilCertificate {
        vertex: g.name(v),
        specialization: Specialization::Multivariate,
        path_tree_nodes: t.len(),
        identity_holds: d.identity,
        divisor_is_whole_graph: d.whole,
        divides: d.quotient.is_some(),
        multiply_back: d.multiply_back,
        quotient: d.quotient.as_ref().map(|q| q.to_text(&name)),
        quotient_diagonal_degree: d.quotient.as_ref().and_then(|q| diag(q).degree()),
        via_independence_agrees: via,
        independence_certificate_holds: parts.cert.holds() && quotients_match,
    })
}

struct UniDivision {
    identity: bool,
    quotient: Option<RatPoly>,
    multiply_back: bool,
}

fn uni_divide(
    p_g: &RatPoly,
    p_t: &RatPoly,
    p_t_minus: &RatPoly,
    p_g_minus: &RatPoly,
    divisor: &RatPoly,
) -> UniDivision {
    let identity = p_g * p_t_minus == p_t * p_g_minus;
    let (q, r) = p_t.div_rem(divisor);
    let ok = r.is_zero();
    UniDivision {
        identity,
        multiply_back: ok && &(&q * divisor) == p_t,
        quotient: ok.then_some(q),
    }
}

/// `p(t) -> p(-z^2)`.
fn at_minus_square(p: &RatPoly) -> RatPoly {
    let mut coeffs = vec![Rational::zero(); 2 * p.coeffs().len().max(1) - 1];
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs[2 * k] = if k % 2 == 0 { c.clone() } else { -c.clone() };
    }
    RatPoly::new(coeffs)
}

fn forest_diag(t: &Graph, keep: impl Fn(usize) -> bool) -> Result<RatPoly, BoundsError> {
    let verts: Vec<usize> = (0..t.n()).filter(|&u| keep(u)).collect();
    Ok(matching_diagonal_from_counts(forest_matching_counts(
        &t.induced_subgraph(&verts).0,
    )?))
}

/// `(diag I(T), diag I(T - root clique))` for a clique tree, by a DP over
/// the hanging cliques on independent-set counts.
fn clique_tree_independence_diag(t: &CliqueTreeStruct) -> (RatPoly, RatPoly) {
    // (with u, without u) over the subtree at u
    fn node(t: &CliqueTreeStruct, u: usize) -> (Vec<BigInt>, Vec<BigInt>) {
        let (none, at_most_one) = clique(t, t.below(u));
        let mut with = vec![BigInt::zero()];
        add_counts(&mut with, &none, 1);
        (with, at_most_one)
    }
    // (no member chosen, at most one member chosen)
    fn clique(t: &CliqueTreeStruct, c: &[usize]) -> (Vec<BigInt>, Vec<BigInt>) {
        let parts: Vec<_> = c.iter().map(|&w| node(t, w)).collect();
        let one = vec![BigInt::one()];
        let none = parts
            .iter()
            .fold(one.clone(), |acc, (_, out)| mul_counts(&acc, out));
        let mut total = none.clone();
        for (i, (with, _)) in parts.iter().enumerate() {
            let rest = parts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(with.clone(), |acc, (_, (_, out))| mul_counts(&acc, out));
            add_counts(&mut total, &rest, 0);
        }
        (none, total)
    }
    let (none, total) = clique(t, t.root_clique());
    let poly = |c: Vec<BigInt>| RatPoly::new(c.into_iter().map(Rational::from_integer).collect());
    (poly(total), poly(none))
}

fn collapsed_independence_diag(
    g: &Graph,
    keep: impl Fn(usize) -> bool,
) -> Result<RatPoly, BoundsError> {
    let verts: Vec<usize> = (0..g.n()).filter(|&u| keep(u)).collect();
    let h = g.induced_subgraph(&verts).0;
    Ok(diag(&independence_poly_labeled(&h, &vec![0; h.n()])?))
}

fn godsil_diagonal(
    g: &Graph,
    v: Vertex,
    t: &LabeledTree,
) -> Result<GodsilCertificate, BoundsError> {
    let tg = t.to_graph();
    let mu_t = forest_diag(&tg, |_| true)?;
    let mu_t_minus = forest_diag(&tg, |u| u != 0)?;
    let mu_g = vertex_matching_diagonal(g)?;
    let mu_g_minus = vertex_matching_diagonal(&g.delete_vertex(v)?)?;
    let comp = components_meeting(g, &[v]);
    let whole = comp.len() == g.n();
    let divisor = if whole {
        mu_g.clone()
    } else {
        vertex_matching_diagonal(&g.induced_subgraph(&comp).0)?
    };
    let d = uni_divide(&mu_g, &mu_t, &mu_t_minus, &mu_g_minus, &divisor);

    let lg = line_graph(g);
    let l = &lg.line_graph;
    let kv = clique_vertex_set_kv(g, v, &lg)?;
    let tbox = simplicial_clique_tree(l, &kv)?;
    let (i_t, i_t_minus) = clique_tree_independence_diag(&tbox);
    let via = at_minus_square(&i_t) == mu_t && at_minus_square(&i_t_minus) == mu_t_minus;
    let i_l = collapsed_independence_diag(l, |_| true)?;
    let i_l_minus = collapsed_independence_diag(l, |u| !kv.contains(u))?;
    let l_comp = components_meeting(l, kv.vertices());
    let i_div = collapsed_independence_diag(l, |u| l_comp.contains(&u))?;
    let di = uni_divide(&i_l, &i_t, &i_t_minus, &i_l_minus, &i_div);
    let quotients_match = match (&di.quotient, &d.quotient) {
        (Some(qi), Some(qm)) => &at_minus_square(qi) == qm,
        _ => false,
    };

    Ok(GodsilCertificate {
        vertex: g.name(v),
        specialization: Specialization::Diagonal,
        path_tree_nodes: t.len(),
        identity_holds: d.identity,
        divisor_is_whole_graph: whole,
        divides: d.quotient.is_some(),
        multiply_back: d.multiply_back,
        quotient: d.quotient.as_ref().map(|q| q.to_text("z")),
        quotient_diagonal_degree: d.quotient.as_ref().and_then(RatPoly::degree),
        via_independence_agrees: via,
        independence_certificate_holds: di.identity && di.multiply_back && quotients_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, fig_p, fig_p_line_graph, path, star, w6};

    #[test]
    fn line_graph_of_p_golden() {
        let g = fig_p_line_graph();
        let k = CliqueRef::new(&g, vec![0]).unwrap();
        let c = verify_divisibility(&g, &k).unwrap();
        assert!(c.holds());
        assert_eq!(c.tree_vertices, 5);
        assert_eq!(c.quotient.as_deref(), Some("1 + x_w"));
        assert_eq!(
            independence_poly(&g).unwrap().to_text(&namer(&g)),
            "1 + x_s + x_y + x_z + x_w + x_s x_w"
        );
    }

    #[test]
    fn block_graphs_have_unit_quotient() {
        let g = path(4);
        for c in verify_divisibility_all(&g).unwrap() {
            assert!(c.holds());
            assert_eq!(c.quotient.as_deref(), Some("1"));
            assert_eq!(c.tree_vertices, 4);
        }
        assert!(
            verify_divisibility(&star(3), &CliqueRef::new(&star(3), vec![1]).unwrap()).is_err()
        );
    }

    #[test]
    fn divisibility_on_small_simplicial_graphs() {
        for g in [w6(), cycle(5), cycle(6), complete(4), fig_p()] {
            for c in verify_divisibility_all(&g).unwrap() {
                assert!(c.holds(), "{c:?}");
            }
        }
    }

    #[test]
    fn disconnected_graph_divides_by_touched_components() {
        let mut g = cycle(5);
        g.add_vertex(&[], None).unwrap();
        let c = verify_divisibility(&g, &CliqueRef::new(&g, vec![0, 1]).unwrap()).unwrap();
        assert!(c.holds());
        assert!(!c.divisor_is_whole_graph);
    }

    #[test]
    fn godsil_on_trees_and_fig_p() {
        let c = verify_godsil_matching_divisibility(&path(4), 1).unwrap();
        assert!(c.holds());
        assert_eq!(c.quotient.as_deref(), Some("1"));
        let c = verify_godsil_matching_divisibility(&fig_p(), 0).unwrap();
        assert!(c.holds(), "{c:?}");
        assert_eq!(c.path_tree_nodes, 6);
        assert_eq!(c.quotient.as_deref(), Some("1 - x_b x_c"));
        assert_eq!(c.quotient_diagonal_degree, Some(2));
        for g in [complete(4), cycle(5), w6(), empty(2), complete(6)] {
            for v in 0..g.n() {
                assert!(verify_godsil_matching_divisibility(&g, v).unwrap().holds());
            }
        }
        let c = verify_godsil_matching_divisibility(&w6(), 0).unwrap();
        assert_eq!(c.specialization, Specialization::Diagonal);
    }

    #[test]
    fn clique_tree_dp_matches_engine() {
        for (g, v) in [(fig_p(), 0), (complete(4), 1), (w6(), 0), (cycle(5), 2)] {
            let lg = line_graph(&g);
            let kv = clique_vertex_set_kv(&g, v, &lg).unwrap();
            let t = simplicial_clique_tree(&lg.line_graph, &kv).unwrap();
            let root = t.root_clique().to_vec();
            let (all, minus) = clique_tree_independence_diag(&t);
            assert_eq!(
                all,
                collapsed_independence_diag(t.graph(), |_| true).unwrap()
            );
            assert_eq!(
                minus,
                collapsed_independence_diag(t.graph(), |u| !root.contains(&u)).unwrap()
            );
        }
    }

    #[test]
    fn diagonal_mode_agrees_with_multivariate() {
        for (g, v) in [(fig_p(), 0), (complete(4), 1), (cycle(5), 2), (path(4), 0)] {
            let a = verify_godsil_matching_divisibility(&g, v).unwrap();
            let b = verify_godsil_matching_divisibility_diagonal(&g, v).unwrap();
            assert_eq!(a.specialization, Specialization::Multivariate);
            assert!(b.holds());
            assert_eq!(a.quotient_diagonal_degree, b.quotient_diagonal_degree);
        }
        let b = verify_godsil_matching_divisibility_diagonal(&fig_p(), 0).unwrap();
        assert_eq!(b.quotient.as_deref(), Some("1 - z^2"));
    }
}
