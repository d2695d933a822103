//! Structural predicates and operators: claws, simplicial cliques, line
//! graphs, block graphs, neighborhood closure.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{maximal_cliques, CliqueRef, Graph, GraphError, Vertex};

/// An induced `K_{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

impl Claw {
    pub fn vertices(&self) -> [Vertex; 4] {
        [self.center, self.leaves[0], self.leaves[1], self.leaves[2]]
    }
}

/// Lexicographically least induced claw `(center, l1 < l2 < l3)`.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(Claw {
                            center: c,
                            leaves: [a, b, d],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// Induced path `u - v - w` (`u < w`, `u` and `w` non-adjacent),
/// lexicographically least by `(v, u, w)`.
pub fn find_induced_p3(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .into_iter()
        .any(|(u, v)| g.neighbors(u).iter().any(|&w| g.has_edge(v, w)))
}

pub fn is_clique(g: &Graph, vertices: &[Vertex]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        vertices[i + 1..]
            .iter()
            .all(|&v| u != v && g.has_edge(u, v))
    })
}

/// For a clique `k`, the first `u in k` whose outside neighborhood
/// `N[u] \ k` is not a clique, with a non-adjacent witness pair.
pub fn simplicial_clique_violation(g: &Graph, k: &[Vertex]) -> Option<(Vertex, Vertex, Vertex)> {
    for &u in k {
        let outside: Vec<Vertex> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|w| !k.contains(w))
            .collect();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i + 1..] {
                if !g.has_edge(a, b) {
                    return Some((u, a, b));
                }
            }
        }
    }
    None
}

/// Every non-empty simplicial clique, ordered by size then vertex list.
pub fn simplicial_cliques(g: &Graph) -> Vec<CliqueRef> {
    all_cliques(g)
        .into_iter()
        .filter(|c| simplicial_clique_violation(g, c).is_none())
        .map(CliqueRef::from_sorted_unchecked)
        .collect()
}

/// Non-empty cliques (subcliques of the maximal cliques), by size then list.
fn all_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen: BTreeSet<(usize, Vec<Vertex>)> = BTreeSet::new();
    for mc in maximal_cliques(g) {
        let k = mc.len();
        for mask in 1u64..(1u64 << k) {
            let sub: Vec<Vertex> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| mc[i])
                .collect();
            seen.insert((sub.len(), sub));
        }
    }
    seen.into_iter().map(|(_, c)| c).collect()
}

/// First simplicial clique in (size, lexicographic) order.
pub fn find_simplicial_clique(g: &Graph) -> Option<CliqueRef> {
    all_cliques(g)
        .into_iter()
        .find(|c| simplicial_clique_violation(g, c).is_none())
        .map(CliqueRef::from_sorted_unchecked)
}

/// Claw-free and has a simplicial clique.
pub fn is_simplicial_graph(g: &Graph) -> bool {
    is_claw_free(g) && find_simplicial_clique(g).is_some()
}

/// A line graph together with the edge <-> vertex correspondence.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    pub line_graph: Graph,
    /// Host edge of each line-graph vertex, `(u, v)` with `u < v`, sorted.
    pub vertex_to_edge: Vec<(Vertex, Vertex)>,
}

impl LineGraphMap {
    pub fn edge_to_vertex(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.vertex_to_edge.binary_search(&key).ok()
    }
}

/// `L(G)`, numbering line-graph vertices by sorted host edge.
pub fn line_graph(g: &Graph) -> LineGraphMap {
    let edges = g.edges();
    let mut lg_edges = Vec::new();
    // edges sharing an endpoint: group by endpoint
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                lg_edges.push((i, j));
            }
        }
    }
    let mut line =
        Graph::from_edges(edges.len(), lg_edges).expect("distinct edges give a simple graph");
    if g.names().is_some() {
        line = line.with_names(
            edges
                .iter()
                .map(|&(u, v)| format!("{}{}", g.name(u), g.name(v))),
        );
    }
    LineGraphMap {
        line_graph: line,
        vertex_to_edge: edges,
    }
}

/// `K_v`: the line-graph vertices of the edges at `v`.
pub fn clique_vertex_set_kv(
    g: &Graph,
    v: Vertex,
    lg: &LineGraphMap,
) -> Result<CliqueRef, GraphError> {
    g.check_vertex(v)?;
    let mut ids: Vec<Vertex> = g
        .neighbors(v)
        .iter()
        .map(|&u| {
            lg.edge_to_vertex(v, u)
                .expect("line graph built from this host")
        })
        .collect();
    ids.sort_unstable();
    Ok(CliqueRef::from_sorted_unchecked(ids))
}

/// `S_v(G)`: `G` with `N[v]` completed to a clique.
pub fn neighbor_closure_sv(g: &Graph, v: Vertex) -> Result<Graph, GraphError> {
    g.check_vertex(v)?;
    let mut out = g.clone();
    let nb = g.neighbors(v).to_vec();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            out.add_edge(a, b)?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PathOrCycle {
    /// Vertex order along the path.
    Path(Vec<Vertex>),
    /// Vertex order around the cycle, starting at the least vertex.
    Cycle(Vec<Vertex>),
    NotApplicable,
}

/// A connected, claw-free, triangle-free graph is a path or a cycle.
pub fn classify_connected_claw_and_triangle_free(g: &Graph) -> PathOrCycle {
    if g.n() == 0 || !g.is_connected() || has_triangle(g) || !is_claw_free(g) {
        return PathOrCycle::NotApplicable;
    }
    let start = (0..g.n()).find(|&v| g.degree(v) <= 1);
    let is_path = start.is_some();
    let start = start.unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| u != prev && !order.contains(&u));
        match next {
            Some(u) => {
                order.push(u);
                prev = cur;
                cur = u;
            }
            None => break,
        }
    }
    debug_assert_eq!(order.len(), g.n());
    if is_path {
        PathOrCycle::Path(order)
    } else {
        PathOrCycle::Cycle(order)
    }
}

/// Every block (maximal 2-connected subgraph, or bridge) induces a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    biconnected_blocks(g)
        .iter()
        .all(|block| is_clique(g, block))
}

/// Vertex sets of the blocks, via an iterative Hopcroft–Tarjan edge stack.
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        // frames: (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let u = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block.into_iter().collect());
                    }
                }
            }
        }
    }
    blocks
}

/// `(n, k, lambda, mu)` if `g` is strongly regular (and neither complete nor edgeless).
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let k = g.degree(0);
    if (0..n).any(|v| g.degree(v) != k) || k == 0 || k == n - 1 {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
            let slot = if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda?, mu?))
}
