//! Path trees, induced path trees and simplicial clique trees, with
//! label-preserving canonical forms and the commuting-diagram check.

mod build;
mod diagram;

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

pub use build::{
    induced_path_tree, induced_path_tree_at_clique, induced_path_tree_capped, path_tree,
    path_tree_capped, simplicial_clique_tree, simplicial_clique_tree_capped, star_graph,
};
pub use diagram::{line_graph_of_tree, verify_commuting_diagram, DiagramReport};

use crate::graph::{Claw, Graph, GraphError, Vertex};
use crate::poly::{Labeling, Var};

/// Default node cap for tree constructions.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// Node cap: `STABLESET_CAP_NODES` if set and valid, else the default.
pub fn node_cap() -> usize {
    std::env::var("STABLESET_CAP_NODES")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_NODE_CAP)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("tree would have at least {projected} nodes, cap is {cap}")]
    NodeCapExceeded { projected: usize, cap: usize },
    #[error("{u} in clique {clique:?} has non-adjacent outside neighbors {a} and {b}")]
    NotSimplicialClique {
        clique: Vec<Vertex>,
        u: Vertex,
        a: Vertex,
        b: Vertex,
    },
    #[error("graph contains the claw {0:?}")]
    ClawPresent(Claw),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A rooted tree whose nodes carry labels in a host graph. Nodes are in
/// DFS preorder with children sorted by label; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    labels: Vec<Vertex>,
    host_names: Vec<String>,
}

impl LabeledTree {
    pub(crate) fn from_parts(
        parent: Vec<Option<usize>>,
        labels: Vec<Vertex>,
        host_names: Vec<String>,
    ) -> Self {
        let mut children = vec![Vec::new(); parent.len()];
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(c);
            }
        }
        LabeledTree {
            parent,
            children,
            labels,
            host_names,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn label(&self, node: usize) -> Vertex {
        self.labels[node]
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn label_vars(&self) -> Vec<Var> {
        self.labels.iter().map(|&l| l as Var).collect()
    }

    pub fn host_names(&self) -> &[String] {
        &self.host_names
    }

    pub fn label_name(&self, node: usize) -> &str {
        &self.host_names[self.labels[node]]
    }

    /// The tree as a plain graph on its nodes.
    pub fn to_graph(&self) -> Graph {
        let edges = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)));
        Graph::from_edges(self.len(), edges).expect("parent array gives a forest")
    }

    /// Tree edges `(parent, child)` in child order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p, c)))
            .collect()
    }

    pub fn labeling(&self) -> Labeling {
        Labeling::from_map(self.labels.clone())
    }

    /// Checks that the labels form a homomorphism into `host`.
    pub fn labeling_is_homomorphism(&self, host: &Graph) -> bool {
        Labeling::new(&self.to_graph(), host, self.labels.clone()).is_ok()
    }

    /// Labels along every root-to-node path are distinct and walk in `host`.
    pub fn has_path_property(&self, host: &Graph) -> bool {
        (0..self.len()).all(|mut node| {
            let mut seen = vec![self.labels[node]];
            while let Some(p) = self.parent[node] {
                if !host.has_edge(self.labels[p], self.labels[node])
                    || seen.contains(&self.labels[p])
                {
                    return false;
                }
                seen.push(self.labels[p]);
                node = p;
            }
            true
        })
    }

    /// Same tree with labels replaced by `f(node)`.
    pub fn relabeled(&self, f: impl Fn(usize) -> Vertex, host_names: Vec<String>) -> LabeledTree {
        let labels = (0..self.len()).map(f).collect();
        LabeledTree::from_parts(self.parent.clone(), labels, host_names)
    }

    /// Canonical string: equal iff rooted, label-preserving isomorphic.
    pub fn canonical(&self) -> String {
        if self.is_empty() {
            return String::new();
        }
        // children come after parents in preorder, so fill bottom-up
        let mut canon: Vec<String> = vec![String::new(); self.len()];
        for node in (0..self.len()).rev() {
            let mut kids: Vec<&String> = self.children[node].iter().map(|&c| &canon[c]).collect();
            kids.sort();
            let mut s = self.labels[node].to_string();
            s.push('(');
            for (i, k) in kids.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(k);
            }
            s.push(')');
            canon[node] = s;
        }
        std::mem::take(&mut canon[0])
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph T {\n");
        for v in 0..self.len() {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", escape(self.label_name(v)));
        }
        for (p, c) in self.edges() {
            let _ = writeln!(s, "  {p} -- {c};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            parent: self
                .parent
                .iter()
                .map(|p| p.map_or(-1, |p| p as i64))
                .collect(),
            labels: (0..self.len())
                .map(|v| self.label_name(v).to_string())
                .collect(),
        }
    }
}

/// Parent array (root has -1) and label names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeJson {
    pub parent: Vec<i64>,
    pub labels: Vec<String>,
}

pub fn rooted_labeled_isomorphic(a: &LabeledTree, b: &LabeledTree) -> bool {
    a.canonical() == b.canonical()
}

/// A block graph built as a rooted tree of cliques: the root clique, and
/// for every node `u` the clique hanging below it (joined to `u`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTreeStruct {
    graph: Graph,
    labels: Vec<Vertex>,
    root_clique: Vec<usize>,
    below: Vec<Vec<usize>>,
    host_names: Vec<String>,
}

impl CliqueTreeStruct {
    pub(crate) fn from_parts(
        labels: Vec<Vertex>,
        root_clique: Vec<usize>,
        below: Vec<Vec<usize>>,
        host_names: Vec<String>,
    ) -> Self {
        let mut edges = Vec::new();
        let clique_edges = |c: &[usize], edges: &mut Vec<(usize, usize)>| {
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    edges.push((a, b));
                }
            }
        };
        clique_edges(&root_clique, &mut edges);
        for (u, c) in below.iter().enumerate() {
            clique_edges(c, &mut edges);
            edges.extend(c.iter().map(|&w| (u, w)));
        }
        let graph = Graph::from_edges(labels.len(), edges).expect("clique tree edges are simple");
        CliqueTreeStruct {
            graph,
            labels,
            root_clique,
            below,
            host_names,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn label_vars(&self) -> Vec<Var> {
        self.labels.iter().map(|&l| l as Var).collect()
    }

    pub fn root_clique(&self) -> &[usize] {
        &self.root_clique
    }

    /// The clique attached below node `u` (empty at the leaves).
    pub fn below(&self, u: usize) -> &[usize] {
        &self.below[u]
    }

    pub fn labeling(&self) -> Labeling {
        Labeling::from_map(self.labels.clone())
    }

    pub fn labeling_is_homomorphism(&self, host: &Graph) -> bool {
        Labeling::new(&self.graph, host, self.labels.clone()).is_ok()
    }

    fn canon_clique(&self, c: &[usize]) -> String {
        let mut parts: Vec<String> = c
            .iter()
            .map(|&u| format!("{}{}", self.labels[u], self.canon_clique(&self.below[u])))
            .collect();
        parts.sort();
        format!("[{}]", parts.join(","))
    }

    /// Canonical string of the labeled block structure from the root clique.
    pub fn canonical(&self) -> String {
        self.canon_clique(&self.root_clique)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph B {\n");
        for v in 0..self.len() {
            let shape = if self.root_clique.contains(&v) {
                ", shape=box"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                "  {v} [label=\"{}\"{shape}];",
                escape(&self.host_names[self.labels[v]])
            );
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> CliqueTreeJson {
        CliqueTreeJson {
            labels: self
                .labels
                .iter()
                .map(|&l| self.host_names[l].clone())
                .collect(),
            root_clique: self.root_clique.clone(),
            below: self.below.clone(),
            edges: self.graph.edges(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueTreeJson {
    pub labels: Vec<String>,
    pub root_clique: Vec<usize>,
    pub below: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

pub fn clique_trees_isomorphic(a: &CliqueTreeStruct, b: &CliqueTreeStruct) -> bool {
    a.canonical() == b.canonical()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
