//! Small-graph corpora: every graph up to isomorphism for `n <= 10`, and
//! seeded random graphs and hypergraphs.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Hypergraph, Vertex};

/// Largest order the canonical form handles (`n(n-1)/2` bits fit a `u64`).
pub const CANONICAL_MAX_N: usize = 11;

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=10`
/// (OEIS A000088).
pub const GRAPH_COUNTS: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

fn adjacency(g: &Graph) -> Vec<u16> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u))
        .collect()
}

/// Splits cells by neighbor counts into each cell until stable.
fn refine(adj: &[u16], cells: &mut Vec<Vec<Vertex>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mask = cells[s].iter().fold(0u16, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, Vertex)> = cell
                    .iter()
                    .map(|&v| ((adj[v] & mask).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn key_of(adj: &[u16], order: &[Vertex]) -> u64 {
    let mut key = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            key = key << 1 | (adj[order[i]] >> order[j] & 1) as u64;
        }
    }
    key
}

fn search(adj: &[u16], mut cells: Vec<Vec<Vertex>>, best: &mut Option<(u64, Vec<Vertex>)>) {
    refine(adj, &mut cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = cells.into_iter().flatten().collect();
        let key = key_of(adj, &order);
        if best.as_ref().map_or(true, |(k, _)| key > *k) {
            *best = Some((key, order));
        }
        return;
    };
    for &v in &cells[split] {
        let mut next = cells[..split].to_vec();
        next.push(vec![v]);
        next.push(cells[split].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[split + 1..]);
        search(adj, next, best);
    }
}

/// Canonical relabeling: `order[i]` is the vertex that becomes `i`, and the
/// key is the graph6 bit string of the relabeled graph. Isomorphic graphs,
/// and only they, share a key.
pub fn canonical_form(g: &Graph) -> (u64, Vec<Vertex>) {
    let n = g.n();
    assert!(
        n <= CANONICAL_MAX_N,
        "canonical form supports at most {CANONICAL_MAX_N} vertices"
    );
    if n == 0 {
        return (0, Vec::new());
    }
    let adj = adjacency(g);
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    best.expect("a nonempty search reaches a leaf")
}

pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (pos[u], pos[v])))
        .expect("relabeling keeps edges valid")
}

fn graph_from_key(n: usize, key: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("key encodes a simple graph")
}

/// Every graph on `n` vertices up to isomorphism, in canonical form,
/// sorted by edge count then key.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= CANONICAL_MAX_N,
        "enumeration supports at most {CANONICAL_MAX_N} vertices"
    );
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let prev: Vec<Graph> = level
            .iter()
            .map(|&key| graph_from_key(k - 1, key))
            .collect();
        level = BTreeSet::new();
        for g in &prev {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = g.clone();
                let nb: Vec<Vertex> = (0..k - 1).filter(|&u| mask >> u & 1 == 1).collect();
                h.add_vertex(&nb, None).expect("neighbors exist");
                level.insert(canonical_form(&h).0);
            }
        }
    }
    let mut out: Vec<(usize, u64)> = level
        .into_iter()
        .map(|key| (key.count_ones() as usize, key))
        .collect();
    out.sort_unstable();
    out.into_iter()
        .map(|(_, key)| graph_from_key(n, key))
        .collect()
}

/// All graphs on `1..=max_n` vertices.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

/// `G(n, p)` with a seeded generator.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs of distinct vertices")
}

/// A random spanning tree (each vertex joins an earlier one) plus `G(n, p)`
/// edges.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = random_graph(n, p, rng);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("distinct vertices");
    }
    g
}

/// `count` random connected graphs with `2..=max_n` vertices from `seed`.
pub fn seeded_connected_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let p = rng.gen_range(0.1..0.7);
            random_connected_graph(n, p, &mut rng)
        })
        .collect()
}

/// Random hypergraph on `n` vertices with edges of size `1..=max_edge`.
pub fn random_hypergraph(
    n: usize,
    edges: usize,
    max_edge: usize,
    rng: &mut impl Rng,
) -> Hypergraph {
    let mut out = Vec::with_capacity(edges);
    for _ in 0..edges {
        let size = rng.gen_range(1..=max_edge.min(n).max(1));
        let mut e: Vec<Vertex> = Vec::with_capacity(size);
        while e.len() < size {
            let v = rng.gen_range(0..n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        out.push(e);
    }
    Hypergraph::new(n, out).expect("vertices drawn from 0..n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::io::to_graph6;

    #[test]
    fn counts_match_the_known_sequence() {
        for n in 0..=6 {
            assert_eq!(all_graphs(n).len(), GRAPH_COUNTS[n], "n = {n}");
        }
        assert_eq!(all_graphs_up_to(5).len(), 1 + 2 + 4 + 11 + 34);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = cycle(6);
        let h = g.permuted(&[3, 5, 0, 1, 4, 2]);
        assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
        assert_ne!(canonical_form(&g).0, canonical_form(&path(6)).0);
        assert_eq!(
            to_graph6(&canonical_graph(&g)),
            to_graph6(&canonical_graph(&h))
        );
    }

    #[test]
    fn random_graphs_are_seeded() {
        let a = seeded_connected_graphs(5, 7, 3);
        let b = seeded_connected_graphs(5, 7, 3);
        assert_eq!(a, b);
        assert!(a.iter().all(Graph::is_connected));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let h = random_hypergraph(6, 4, 3, &mut rng);
        assert!(h.edges().iter().all(|e| (1..=3).contains(&e.len())));
    }
}
