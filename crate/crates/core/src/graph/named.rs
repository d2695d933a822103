//! Standard constructors and the named graphs from the figures.

use super::{srg_parameters, Graph};

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// The star `K_{1,n}`: center 0, leaves `1..=n`.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i))).unwrap()
}

/// Wheel on `n >= 4` vertices: rim cycle `0..n-1`, hub `n-1`.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4, "a wheel needs a rim of at least 3 vertices");
    let rim = n - 1;
    let edges = (0..rim)
        .map(|i| (i, (i + 1) % rim))
        .chain((0..rim).map(|i| (i, rim)));
    Graph::from_edges(n, edges).unwrap()
}

/// `C_6` with vertices named `a..f` around the cycle.
pub fn c6() -> Graph {
    cycle(6).with_names(["a", "b", "c", "d", "e", "f"])
}

/// `W_6`: rim `a b c d e`, hub `v`.
pub fn w6() -> Graph {
    wheel(6).with_names(["a", "b", "c", "d", "e", "v"])
}

/// The claw `K_{1,3}`.
pub fn claw() -> Graph {
    star(3)
}

/// Triangle `abc` with a pendant vertex `v` at `a`.
pub fn fig_p() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
        .unwrap()
        .with_names(["v", "a", "b", "c"])
}

/// `L(P)` for [`fig_p`], with the edges `va, ab, ac, bc` named `s, y, z, w`.
pub fn fig_p_line_graph() -> Graph {
    super::line_graph(&fig_p())
        .line_graph
        .with_names(["s", "y", "z", "w"])
}

/// The Schläfli graph: the 27 lines on a cubic surface, adjacent when skew.
///
/// Lines are `a1..a6`, `b1..b6` and `c_ij` (`i < j`). Two lines meet when
/// `a_i, b_j` have `i != j`, when `a_i` or `b_i` and `c_jk` have
/// `i in {j,k}`, and when `c_ij, c_kl` have disjoint index pairs; all
/// other pairs are skew.
pub fn schlafli_graph() -> Graph {
    #[derive(Clone, Copy)]
    enum Line {
        A(usize),
        B(usize),
        C(usize, usize),
    }
    let mut lines = Vec::with_capacity(27);
    let mut names = Vec::with_capacity(27);
    for i in 1..=6 {
        lines.push(Line::A(i));
        names.push(format!("a{i}"));
    }
    for i in 1..=6 {
        lines.push(Line::B(i));
        names.push(format!("b{i}"));
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            lines.push(Line::C(i, j));
            names.push(format!("c{i}{j}"));
        }
    }
    let meet = |x: Line, y: Line| -> bool {
        use Line::*;
        match (x, y) {
            (A(_), A(_)) | (B(_), B(_)) => false,
            (A(i), B(j)) | (B(j), A(i)) => i != j,
            (A(i), C(j, k)) | (C(j, k), A(i)) | (B(i), C(j, k)) | (C(j, k), B(i)) => {
                i == j || i == k
            }
            (C(i, j), C(k, l)) => i != k && i != l && j != k && j != l,
        }
    };
    let mut edges = Vec::new();
    for x in 0..27 {
        for y in x + 1..27 {
            if !meet(lines[x], lines[y]) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::from_edges(27, edges).unwrap().with_names(names);
    match srg_parameters(&g) {
        Some((27, 16, 10, 8)) => g,
        other => panic!("27-lines construction is not SRG(27,16,10,8): {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique_number, find_claw, is_simplicial_graph};

    #[test]
    fn sizes() {
        assert_eq!(path(4).m(), 3);
        assert_eq!(cycle(6).m(), 6);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(star(3).n(), 4);
        assert_eq!(wheel(6).m(), 10);
        assert_eq!(empty(3).m(), 0);
        assert_eq!(path(1).m(), 0);
        assert_eq!(fig_p().m(), 4);
    }

    #[test]
    fn schlafli_parameters() {
        let g = schlafli_graph();
        assert_eq!(srg_parameters(&g), Some((27, 16, 10, 8)));
        assert!(g.neighbors(0).len() == 16);
        assert_eq!(clique_number(&g), 6);
        assert_eq!(find_claw(&g), None);
        assert!(!is_simplicial_graph(&g));
    }

    #[test]
    fn schlafli_common_neighbors() {
        let g = schlafli_graph();
        for u in 0..27 {
            for v in u + 1..27 {
                let common = g.neighbors(u).iter().filter(|w| g.has_edge(v, **w)).count();
                assert_eq!(common, if g.has_edge(u, v) { 10 } else { 8 });
            }
        }
    }
}
