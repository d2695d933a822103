//! Finite simple undirected graphs, hypergraphs and the structural
//! predicates used throughout the crate.
//!
//! Vertices are dense ids `0..n`. Names are cosmetic and only show up in
//! polynomial text, DOT output and reports.

mod cliques;
mod hypergraph;
mod named;
mod structure;

pub use cliques::{clique_number, max_clique, maximal_cliques};
pub use hypergraph::{reduce_hypergraph, reduce_hypergraph_shuffled, Hypergraph};
pub use named::{
    c6, claw, complete, cycle, empty, fig_p, fig_p_line_graph, path, schlafli_graph, star, w6,
    wheel,
};
pub use structure::{
    classify_connected_claw_and_triangle_free, clique_vertex_set_kv, find_claw, find_induced_p3,
    find_simplicial_clique, has_triangle, is_block_graph, is_claw_free, is_clique,
    is_simplicial_graph, line_graph, neighbor_closure_sv, simplicial_clique_violation,
    simplicial_cliques, srg_parameters, Claw, LineGraphMap, PathOrCycle,
};

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(Vertex, Vertex, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("not an edge: ({0}, {1})")]
    NotAnEdge(Vertex, Vertex),
    #[error("vertex set {0:?} is not a clique")]
    NotAClique(Vec<Vertex>),
    #[error("graph is not connected")]
    Disconnected,
    #[error("hyperedge {0:?} has a vertex outside 0..{1}")]
    HyperedgeOutOfRange(Vec<Vertex>, usize),
}

/// Sorted vertex list that induces a complete subgraph of its host.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct CliqueRef(Vec<Vertex>);

impl CliqueRef {
    /// Checks that `vertices` is a clique of `g`.
    pub fn new(g: &Graph, mut vertices: Vec<Vertex>) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(GraphError::UnknownVertex(v));
        }
        if !is_clique(g, &vertices) {
            return Err(GraphError::NotAClique(vertices));
        }
        Ok(CliqueRef(vertices))
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<Vertex>) -> Self {
        CliqueRef(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            names: None,
        }
    }

    /// Builds a simple graph. Duplicate pairs collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), self.n(), "one name per vertex");
        self.names = Some(names);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `v`: its label if one was given, otherwise the id.
    pub fn name(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_names(&self) -> Vec<String> {
        (0..self.n()).map(|v| self.name(v)).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Neighbor sets as bitsets, for the exponential searches.
    pub fn neighbor_bits(&self) -> Vec<FixedBitSet> {
        self.adj
            .iter()
            .map(|list| {
                let mut b = FixedBitSet::with_capacity(self.n());
                for &u in list {
                    b.insert(u);
                }
                b
            })
            .collect()
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.n());
        b.insert_range(..);
        b
    }

    /// Induced subgraph on `vertices` (renumbered in the given order).
    /// Returns the subgraph and the map new id -> old id.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            g.adj[i] = self.adj[v]
                .iter()
                .filter(|&&u| index[u] != usize::MAX)
                .map(|&u| index[u])
                .collect();
            g.adj[i].sort_unstable();
        }
        if let Some(names) = &self.names {
            g.names = Some(vertices.iter().map(|&v| names[v].clone()).collect());
        }
        (g, vertices.to_vec())
    }

    /// `G \ v`, renumbered; names are carried along.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep).0)
    }

    /// `G \ S` for a vertex set, renumbered.
    pub fn delete_vertices(&self, remove: &[Vertex]) -> Graph {
        let keep: Vec<Vertex> = (0..self.n()).filter(|u| !remove.contains(u)).collect();
        self.induced_subgraph(&keep).0
    }

    /// `G \ e`; the vertex set is unchanged.
    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    /// Adds an edge in place (no-op if present).
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u >= self.n() || v >= self.n() {
            return Err(GraphError::OutOfRange(u, v, self.n()));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
        }
        if let Err(pos) = self.adj[v].binary_search(&u) {
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    /// Appends a new vertex adjacent to `neighbors`; returns its id.
    pub fn add_vertex(
        &mut self,
        neighbors: &[Vertex],
        name: Option<&str>,
    ) -> Result<Vertex, GraphError> {
        let id = self.n();
        self.adj.push(Vec::new());
        if let Some(names) = &mut self.names {
            names.push(name.map(str::to_string).unwrap_or_else(|| id.to_string()));
        }
        for &u in neighbors {
            self.add_edge(id, u)?;
        }
        Ok(id)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.m() + 1 == self.n()
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|l| l.len() + 1 == self.n())
    }

    /// Same graph, vertices permuted: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n(), edges).expect("permutation preserves simplicity")
    }
}
