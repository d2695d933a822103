use serde::Serialize;

use super::{
    induced_path_tree_at_clique, path_tree, simplicial_clique_tree, CliqueTreeStruct, LabeledTree,
    TreeError,
};
use crate::graph::{clique_vertex_set_kv, line_graph, Graph, Vertex};

/// `L(T)` of a rooted tree as a clique tree: the root clique is the set of
/// root edges, and below edge `(p, c)` hang the edges from `c` to its
/// children. Tree edges are named by their child node and labeled by
/// `edge_label(parent, child)`.
pub fn line_graph_of_tree(
    t: &LabeledTree,
    edge_label: impl Fn(usize, usize) -> Vertex,
    host_names: Vec<String>,
) -> CliqueTreeStruct {
    // edge (parent(c), c) becomes line-graph node c - 1 (preorder, root first)
    let n = t.len().saturating_sub(1);
    let labels = (1..t.len())
        .map(|c| edge_label(t.parent(c).unwrap(), c))
        .collect();
    let root = t.children(0).iter().map(|&c| c - 1).collect();
    let below = (1..=n)
        .map(|c| t.children(c).iter().map(|&d| d - 1).collect())
        .collect();
    CliqueTreeStruct::from_parts(labels, root, below, host_names)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub vertex: Vertex,
    /// `T∠_{K_v}(L(G)) ≅ T_v(G)`.
    pub upper: bool,
    /// `L(T∠_{K_v}(L(G))) ≅ T⊠_{K_v}(L(G))`.
    pub lower: bool,
    /// `L(T_v(G)) ≅ T⊠_{K_v}(L(G))`.
    pub outer: bool,
    pub path_tree_nodes: usize,
    pub induced_tree_nodes: usize,
    pub clique_tree_vertices: usize,
}

impl DiagramReport {
    pub fn holds(&self) -> bool {
        self.upper && self.lower && self.outer
    }
}

/// Builds all four corners for `G` and `v` and compares them up to
/// rooted, label-preserving isomorphism. Labels are compared in `L(G)`,
/// with `*` as the extra id `|E(G)|`.
pub fn verify_commuting_diagram(g: &Graph, v: Vertex) -> Result<DiagramReport, TreeError> {
    g.check_vertex(v)?;
    let lg = line_graph(g);
    let l = &lg.line_graph;
    let star = l.n();
    let kv = clique_vertex_set_kv(g, v, &lg)?;
    let mut names = l.vertex_names();
    names.push("*".into());

    let tv = path_tree(g, v)?;
    let induced = induced_path_tree_at_clique(l, &kv)?;
    let clique_tree = simplicial_clique_tree(l, &kv)?;

    let edge_of = |t: &LabeledTree, p: usize, c: usize| {
        lg.edge_to_vertex(t.label(p), t.label(c))
            .expect("tree edges map to host edges")
    };
    let tv_in_lg = tv.relabeled(
        |c| {
            if c == 0 {
                star
            } else {
                edge_of(&tv, tv.parent(c).unwrap(), c)
            }
        },
        names.clone(),
    );
    let upper = tv_in_lg.canonical() == induced.canonical();

    let l_tv = line_graph_of_tree(&tv, |p, c| edge_of(&tv, p, c), names.clone());
    let outer = l_tv.canonical() == clique_tree.canonical();

    let l_induced = line_graph_of_tree(&induced, |_, c| induced.label(c), names);
    let lower = l_induced.canonical() == clique_tree.canonical();

    Ok(DiagramReport {
        vertex: v,
        upper,
        lower,
        outer,
        path_tree_nodes: tv.len(),
        induced_tree_nodes: induced.len(),
        clique_tree_vertices: clique_tree.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, fig_p, path, w6};

    #[test]
    fn fig_p_diagram_commutes() {
        let r = verify_commuting_diagram(&fig_p(), 0).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(
            (
                r.path_tree_nodes,
                r.induced_tree_nodes,
                r.clique_tree_vertices
            ),
            (6, 6, 5)
        );
    }

    #[test]
    fn single_vertex_uses_star_convention() {
        let r = verify_commuting_diagram(&path(1), 0).unwrap();
        assert!(r.holds());
        assert_eq!(
            (
                r.path_tree_nodes,
                r.induced_tree_nodes,
                r.clique_tree_vertices
            ),
            (1, 1, 0)
        );
    }

    #[test]
    fn small_graphs_commute() {
        for g in [complete(4), cycle(5), w6(), path(4)] {
            for v in 0..g.n() {
                assert!(verify_commuting_diagram(&g, v).unwrap().holds());
            }
        }
    }

    #[test]
    fn wrong_labels_are_detected() {
        let g = fig_p();
        let t = path_tree(&g, 0).unwrap();
        let moved = t.relabeled(
            |c| if c == 3 { 0 } else { t.label(c) },
            t.host_names().to_vec(),
        );
        assert!(!super::super::rooted_labeled_isomorphic(&t, &moved));
        assert!(super::super::rooted_labeled_isomorphic(&t, &t.clone()));
    }
}
