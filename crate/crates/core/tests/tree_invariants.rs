use proptest::prelude::*;
use stableset_core::corpus::{all_graphs_up_to, canonical_form};
use stableset_core::graph::{
    clique_vertex_set_kv, is_block_graph, is_simplicial_graph, line_graph, simplicial_cliques,
    Graph, Vertex,
};
use stableset_core::tree::{induced_path_tree, path_tree, simplicial_clique_tree};

fn count_paths(g: &Graph, path: &mut Vec<Vertex>, induced: bool) -> usize {
    let last = *path.last().unwrap();
    let mut total = 1;
    for &w in g.neighbors(last) {
        if path.contains(&w) {
            continue;
        }
        if induced && path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        path.push(w);
        total += count_paths(g, path, induced);
        path.pop();
    }
    total
}

#[test]
fn path_trees_biject_with_paths() {
    for g in all_graphs_up_to(7) {
        for v in 0..g.n() {
            let t = path_tree(&g, v).unwrap();
            assert_eq!(
                t.len(),
                count_paths(&g, &mut vec![v], false),
                "{:?} at {v}",
                g.edges()
            );
            assert!(t.labeling_is_homomorphism(&g));
            let ti = induced_path_tree(&g, v).unwrap();
            assert_eq!(
                ti.len(),
                count_paths(&g, &mut vec![v], true),
                "{:?} at {v}",
                g.edges()
            );
            assert!(ti.labeling_is_homomorphism(&g));
        }
    }
}

#[test]
fn clique_trees_are_block_graphs() {
    for g in all_graphs_up_to(6).into_iter().filter(is_simplicial_graph) {
        for k in simplicial_cliques(&g) {
            let t = simplicial_clique_tree(&g, &k).unwrap();
            assert!(
                is_block_graph(t.graph()),
                "{:?} at {:?}",
                g.edges(),
                k.vertices()
            );
            assert!(t.labeling_is_homomorphism(&g));
        }
    }
    for g in all_graphs_up_to(6).into_iter().filter(Graph::is_connected) {
        let lg = line_graph(&g);
        for v in 0..g.n() {
            if g.degree(v) == 0 {
                continue;
            }
            let k = clique_vertex_set_kv(&g, v, &lg).unwrap();
            let t = simplicial_clique_tree(&lg.line_graph, &k).unwrap();
            assert!(is_block_graph(t.graph()));
        }
    }
}

fn tree_from_parents(parents: &[usize]) -> Graph {
    let edges = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (i + 1, p % (i + 1)));
    Graph::from_edges(parents.len() + 1, edges).unwrap()
}

proptest! {
    #[test]
    fn trees_are_their_own_path_trees(parents in prop::collection::vec(any::<usize>(), 0..10), root in any::<prop::sample::Index>()) {
        let t = tree_from_parents(&parents);
        let v = root.index(t.n());
        for built in [path_tree(&t, v).unwrap(), induced_path_tree(&t, v).unwrap()] {
            prop_assert_eq!(built.len(), t.n());
            let mut labels = built.labels().to_vec();
            labels.sort_unstable();
            prop_assert_eq!(labels, (0..t.n()).collect::<Vec<_>>());
            prop_assert!(built.labeling_is_homomorphism(&t));
            let relabeled = Graph::from_edges(t.n(), built.edges().into_iter().map(|(a, b)| (built.label(a), built.label(b)))).unwrap();
            prop_assert_eq!(canonical_form(&relabeled).0, canonical_form(&t).0);
            prop_assert_eq!(relabeled.edges(), t.edges());
        }
    }
}
