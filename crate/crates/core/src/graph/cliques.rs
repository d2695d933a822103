//! Exact clique searches: Bron–Kerbosch with Tomita pivoting for maximal
//! cliques, and a greedy-coloring branch and bound for the clique number.

use fixedbitset::FixedBitSet;

use super::{Graph, Vertex};

/// All maximal cliques, each sorted, the list sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    let nb = g.neighbor_bits();
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    let p = g.full_set();
    let x = FixedBitSet::with_capacity(g.n());
    bron_kerbosch(&nb, &mut Vec::new(), p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    nb: &[FixedBitSet],
    r: &mut Vec<Vertex>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<Vertex>>,
) {
    if p.count_ones(..) == 0 {
        if x.count_ones(..) == 0 {
            out.push(r.clone());
        }
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| {
            let mut t = p.clone();
            t.intersect_with(&nb[u]);
            t.count_ones(..)
        })
        .expect("P is non-empty");
    let mut candidates = p.clone();
    candidates.difference_with(&nb[pivot]);
    for v in candidates.ones().collect::<Vec<_>>() {
        let mut p2 = p.clone();
        p2.intersect_with(&nb[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&nb[v]);
        r.push(v);
        bron_kerbosch(nb, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// A maximum clique, lexicographically least among those found first by
/// the search order (vertices tried in increasing id).
pub fn max_clique(g: &Graph) -> Vec<Vertex> {
    let nb = g.neighbor_bits();
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(&nb, &mut current, g.full_set(), &mut best);
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Greedy coloring of `p`; returns vertices in color order with the color
/// index (1-based) of each, so `colors[i]` bounds the clique size reachable
/// from `order[..=i]`.
fn color_sort(nb: &[FixedBitSet], p: &FixedBitSet) -> (Vec<Vertex>, Vec<usize>) {
    let mut uncolored = p.clone();
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut color = 0;
    while uncolored.count_ones(..) > 0 {
        color += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.ones().next() {
            available.set(v, false);
            available.difference_with(&nb[v]);
            uncolored.set(v, false);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

fn expand(
    nb: &[FixedBitSet],
    current: &mut Vec<Vertex>,
    mut p: FixedBitSet,
    best: &mut Vec<Vertex>,
) {
    let (order, colors) = color_sort(nb, &p);
    for i in (0..order.len()).rev() {
        if current.len() + colors[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let mut p2 = p.clone();
        p2.intersect_with(&nb[v]);
        if p2.count_ones(..) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(nb, current, p2, best);
        }
        current.pop();
        p.set(v, false);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, path, wheel};

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&empty(0)), 0);
        assert_eq!(clique_number(&empty(3)), 1);
        assert_eq!(clique_number(&path(4)), 2);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&complete(6)), 6);
        assert_eq!(clique_number(&wheel(6)), 3);
    }

    #[test]
    fn maximal_cliques_of_small_graphs() {
        assert_eq!(maximal_cliques(&path(3)), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(maximal_cliques(&empty(2)), vec![vec![0], vec![1]]);
        assert_eq!(maximal_cliques(&complete(4)), vec![vec![0, 1, 2, 3]]);
        assert_eq!(maximal_cliques(&wheel(5)).len(), 4);
    }

    #[test]
    fn clique_number_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let brute = (0u32..1 << n)
                .filter(|&s| {
                    (0..n).all(|u| {
                        (0..n).all(|v| {
                            u == v || s >> u & 1 == 0 || s >> v & 1 == 0 || g.has_edge(u, v)
                        })
                    })
                })
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(clique_number(&g), brute);
            let mc = maximal_cliques(&g);
            assert_eq!(mc.iter().map(Vec::len).max().unwrap(), brute);
        }
    }
}
