use fixedbitset::FixedBitSet;

use super::{node_cap, CliqueTreeStruct, LabeledTree, TreeError};
use crate::graph::{find_claw, is_block_graph, CliqueRef, Graph, Vertex};

#[derive(Clone, Copy)]
enum Rule {
    /// Children avoid only the vertices already on the path.
    Simple,
    /// Children avoid the closed neighborhood of every path vertex but themselves.
    Induced,
}

fn child_alive(
    nb: &[FixedBitSet],
    alive: &FixedBitSet,
    v: Vertex,
    w: Vertex,
    rule: Rule,
) -> FixedBitSet {
    let mut next = alive.clone();
    match rule {
        Rule::Simple => next.set(v, false),
        Rule::Induced => {
            next.difference_with(&nb[v]);
            next.set(v, false);
            next.insert(w);
        }
    }
    next
}

fn count(
    nb: &[FixedBitSet],
    v: Vertex,
    alive: &FixedBitSet,
    rule: Rule,
    total: &mut usize,
    cap: usize,
) -> bool {
    *total += 1;
    if *total > cap {
        return false;
    }
    let mut kids = nb[v].clone();
    kids.intersect_with(alive);
    for w in kids.ones() {
        let next = child_alive(nb, alive, v, w, rule);
        if !count(nb, w, &next, rule, total, cap) {
            return false;
        }
    }
    true
}

fn grow(
    nb: &[FixedBitSet],
    v: Vertex,
    alive: &FixedBitSet,
    rule: Rule,
    parent: Option<usize>,
    parents: &mut Vec<Option<usize>>,
    labels: &mut Vec<Vertex>,
) {
    let me = parents.len();
    parents.push(parent);
    labels.push(v);
    let mut kids = nb[v].clone();
    kids.intersect_with(alive);
    for w in kids.ones() {
        let next = child_alive(nb, alive, v, w, rule);
        grow(nb, w, &next, rule, Some(me), parents, labels);
    }
}

fn build(g: &Graph, v: Vertex, rule: Rule, cap: usize) -> Result<LabeledTree, TreeError> {
    g.check_vertex(v)?;
    let nb = g.neighbor_bits();
    let alive = g.full_set();
    let mut total = 0;
    if !count(&nb, v, &alive, rule, &mut total, cap) {
        return Err(TreeError::NodeCapExceeded {
            projected: total,
            cap,
        });
    }
    let mut parents = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    grow(&nb, v, &alive, rule, None, &mut parents, &mut labels);
    Ok(LabeledTree::from_parts(parents, labels, g.vertex_names()))
}

/// `T_v(G)`: one node per simple path from `v`.
pub fn path_tree(g: &Graph, v: Vertex) -> Result<LabeledTree, TreeError> {
    path_tree_capped(g, v, node_cap())
}

pub fn path_tree_capped(g: &Graph, v: Vertex, cap: usize) -> Result<LabeledTree, TreeError> {
    build(g, v, Rule::Simple, cap)
}

/// `T∠_v(G)`: one node per induced path from `v`. The child `w` of `v`
/// recurses on `(H \ N[v]) ∪ {w}`.
pub fn induced_path_tree(g: &Graph, v: Vertex) -> Result<LabeledTree, TreeError> {
    induced_path_tree_capped(g, v, node_cap())
}

pub fn induced_path_tree_capped(
    g: &Graph,
    v: Vertex,
    cap: usize,
) -> Result<LabeledTree, TreeError> {
    build(g, v, Rule::Induced, cap)
}

/// `G*`: `G` plus a vertex `*` (id `n`) adjacent exactly to `K`.
pub fn star_graph(g: &Graph, k: &CliqueRef) -> Graph {
    let mut out = g.clone();
    if out.names().is_none() {
        out = out.clone().with_names(g.vertex_names());
    }
    out.add_vertex(k.vertices(), Some("*"))
        .expect("clique vertices belong to g");
    out
}

/// `T∠_K(G) := T∠_*(G*)`. Labels live in `G*`, the root carries `*`.
pub fn induced_path_tree_at_clique(g: &Graph, k: &CliqueRef) -> Result<LabeledTree, TreeError> {
    let gs = star_graph(g, k);
    induced_path_tree(&gs, g.n())
}

struct CliqueBuilder<'a> {
    g: &'a Graph,
    nb: Vec<FixedBitSet>,
    labels: Vec<Vertex>,
    below: Vec<Vec<usize>>,
    cap: usize,
}

impl CliqueBuilder<'_> {
    /// `K` must be a simplicial clique of the subgraph induced on `alive`.
    fn check_simplicial(&self, alive: &FixedBitSet, k: &[Vertex]) -> Result<(), TreeError> {
        for &u in k {
            let mut out = self.nb[u].clone();
            out.intersect_with(alive);
            for &x in k {
                out.set(x, false);
            }
            let outside: Vec<Vertex> = out.ones().collect();
            for (i, &a) in outside.iter().enumerate() {
                if let Some(&b) = outside[i + 1..].iter().find(|&&b| !self.g.has_edge(a, b)) {
                    return Err(TreeError::NotSimplicialClique {
                        clique: k.to_vec(),
                        u,
                        a,
                        b,
                    });
                }
            }
        }
        Ok(())
    }

    /// Adds nodes for `k` and everything below; returns their node ids.
    fn expand(&mut self, alive: &FixedBitSet, k: &[Vertex]) -> Result<Vec<usize>, TreeError> {
        self.check_simplicial(alive, k)?;
        let first = self.labels.len();
        if first + k.len() > self.cap {
            return Err(TreeError::NodeCapExceeded {
                projected: first + k.len(),
                cap: self.cap,
            });
        }
        let ids: Vec<usize> = (first..first + k.len()).collect();
        for &u in k {
            self.labels.push(u);
            self.below.push(Vec::new());
        }
        let mut rest = alive.clone();
        for &u in k {
            rest.set(u, false);
        }
        for (i, &u) in k.iter().enumerate() {
            let mut j = self.nb[u].clone();
            j.intersect_with(&rest);
            let ju: Vec<Vertex> = j.ones().collect();
            if !ju.is_empty() {
                let child = self.expand(&rest, &ju)?;
                self.below[ids[i]] = child;
            }
        }
        Ok(ids)
    }
}

/// `T⊠_K(G)` for a claw-free `G` and simplicial clique `K`. Each recursive
/// `J_u = N[u] ∩ (H \ K)` is checked to be simplicial in `H \ K`.
pub fn simplicial_clique_tree(g: &Graph, k: &CliqueRef) -> Result<CliqueTreeStruct, TreeError> {
    simplicial_clique_tree_capped(g, k, node_cap())
}

pub fn simplicial_clique_tree_capped(
    g: &Graph,
    k: &CliqueRef,
    cap: usize,
) -> Result<CliqueTreeStruct, TreeError> {
    if let Some(c) = find_claw(g) {
        return Err(TreeError::ClawPresent(c));
    }
    for &v in k.vertices() {
        g.check_vertex(v)?;
    }
    let mut b = CliqueBuilder {
        g,
        nb: g.neighbor_bits(),
        labels: Vec::new(),
        below: Vec::new(),
        cap,
    };
    let root = b.expand(&g.full_set(), k.vertices())?;
    let out = CliqueTreeStruct::from_parts(b.labels, root, b.below, g.vertex_names());
    assert!(
        is_block_graph(out.graph()),
        "clique tree must be a block graph"
    );
    Ok(out)
}
