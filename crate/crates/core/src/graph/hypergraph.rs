use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, Vertex};

/// A hypergraph on vertices `0..n`. `labels[v]` is the id the vertex had
/// before any reduction, and is what polynomial variables are named after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
    labels: Vec<usize>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() || e.iter().any(|&v| v >= n) {
                return Err(GraphError::HyperedgeOutOfRange(e, n));
            }
            set.insert(e);
        }
        Ok(Hypergraph {
            n,
            edges: set.into_iter().collect(),
            labels: (0..n).collect(),
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        Hypergraph::new(g.n(), edges).expect("graph edges are valid hyperedges")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, deduplicated edges.
    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_two_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// The underlying simple graph when every edge has size 2.
    pub fn as_graph(&self) -> Option<Graph> {
        if !self.is_two_uniform() {
            return None;
        }
        Some(Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1]))).unwrap())
    }

    /// `S` is independent when it contains no edge.
    pub fn is_independent(&self, set: &[bool]) -> bool {
        !self.edges.iter().any(|e| e.iter().all(|&v| set[v]))
    }

    fn without_vertices(&self, dead: &[bool]) -> Hypergraph {
        let mut index = vec![usize::MAX; self.n];
        let mut labels = Vec::new();
        for v in 0..self.n {
            if !dead[v] {
                index[v] = labels.len();
                labels.push(self.labels[v]);
            }
        }
        let edges: BTreeSet<Vec<Vertex>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| !dead[v]))
            .map(|e| e.iter().map(|&v| index[v]).collect())
            .collect();
        Hypergraph {
            n: labels.len(),
            edges: edges.into_iter().collect(),
            labels,
        }
    }
}

fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.len() <= b.len() && a.iter().all(|v| b.binary_search(v).is_ok())
}

/// The reduction `H~`: drop every edge that contains another edge, then
/// delete the vertices of size-1 edges; repeat to a fixed point. The
/// independence polynomial is unchanged (variables keep original labels).
pub fn reduce_hypergraph(h: &Hypergraph) -> Hypergraph {
    let mut cur = h.clone();
    loop {
        let before = cur.clone();
        let keep: Vec<Vec<Vertex>> = cur
            .edges
            .iter()
            .filter(|f| !cur.edges.iter().any(|e| e != *f && is_subset(e, f)))
            .cloned()
            .collect();
        cur.edges = keep;
        let mut dead = vec![false; cur.n];
        for e in &cur.edges {
            if e.len() == 1 {
                dead[e[0]] = true;
            }
        }
        if dead.iter().any(|&d| d) {
            cur = cur.without_vertices(&dead);
        }
        if cur == before {
            return cur;
        }
    }
}

/// Same fixed point reached by applying single reduction steps in a
/// seeded random order. Used to check that the reduction is confluent.
pub fn reduce_hypergraph_shuffled(h: &Hypergraph, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = h.clone();
    loop {
        #[derive(Clone, Copy)]
        enum Step {
            DropEdge(usize),
            DropVertex(Vertex),
        }
        let mut steps = Vec::new();
        for (i, f) in cur.edges.iter().enumerate() {
            if cur.edges.iter().any(|e| e != f && is_subset(e, f)) {
                steps.push(Step::DropEdge(i));
            }
            if f.len() == 1 {
                steps.push(Step::DropVertex(f[0]));
            }
        }
        match steps.choose(&mut rng) {
            None => return cur,
            Some(Step::DropEdge(i)) => {
                cur.edges.remove(*i);
            }
            Some(Step::DropVertex(v)) => {
                // every edge through v contains {v}, so deleting them is sound
                let mut dead = vec![false; cur.n];
                dead[*v] = true;
                cur = cur.without_vertices(&dead);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparable_edge_removed() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        let r = reduce_hypergraph(&h);
        assert_eq!(r.edges(), &[vec![0, 1]]);
        assert_eq!(r.n(), 3);
    }

    #[test]
    fn singleton_edge_deletes_vertex() {
        let h = Hypergraph::new(2, vec![vec![0]]).unwrap();
        let r = reduce_hypergraph(&h);
        assert_eq!(r.n(), 1);
        assert!(r.edges().is_empty());
        assert_eq!(r.labels(), &[1]);
    }

    #[test]
    fn singleton_then_pair() {
        let h = Hypergraph::new(3, vec![vec![0], vec![1, 2], vec![0, 2]]).unwrap();
        let r = reduce_hypergraph(&h);
        assert_eq!(r.n(), 2);
        assert_eq!(r.edges(), &[vec![0, 1]]);
        assert_eq!(r.labels(), &[1, 2]);
    }

    #[test]
    fn two_uniform_unchanged() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(reduce_hypergraph(&h), h);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Hypergraph::new(2, vec![vec![0, 2]]).is_err());
        assert!(Hypergraph::new(2, vec![vec![]]).is_err());
    }
}
