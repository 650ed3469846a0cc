use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Simple undirected graph with optional integer vertex weights.
///
/// Edges are stored as `(u, v)` with `u < v`, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<i64>>,
}

impl Graph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at vertex {u}")));
            }
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::InvalidInstance(format!(
                    "edge {u}-{v} has an endpoint outside 0..{num_vertices}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidInstance(format!("duplicate edge {}-{}", e.0, e.1)));
            }
            normalized.push(e);
        }
        Ok(Self { num_vertices, edges: normalized, weights: None })
    }

    pub fn with_weights(mut self, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != self.num_vertices {
            return Err(Error::InvalidInstance(format!(
                "{} weights for {} vertices",
                weights.len(),
                self.num_vertices
            )));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn without_weights(mut self) -> Self {
        self.weights = None;
        self
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self { num_vertices: n, edges, weights: None }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self { num_vertices: n, edges, weights: None }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weight of `v`; 1 for unweighted graphs.
    pub fn weight(&self, v: usize) -> i64 {
        self.weights.as_ref().map_or(1, |w| w[v])
    }

    pub fn max_weight(&self) -> i64 {
        (0..self.num_vertices).map(|v| self.weight(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// The complement graph (same vertex count, no weights), edges in
    /// lexicographic order.
    pub fn complement(&self) -> Graph {
        let present: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        let n = self.num_vertices;
        let edges =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|e| !present.contains(e)).collect();
        Graph { num_vertices: n, edges, weights: None }
    }

    pub(crate) fn selected_weight(&self, config: &[usize]) -> i64 {
        config.iter().enumerate().filter(|(_, &x)| x == 1).map(|(v, _)| self.weight(v)).sum()
    }

    pub(crate) fn selected_count(config: &[usize]) -> i64 {
        config.iter().filter(|&&x| x == 1).count() as i64
    }

    pub(crate) fn is_independent(&self, config: &[usize]) -> bool {
        self.edges.iter().all(|&(u, v)| !(config[u] == 1 && config[v] == 1))
    }

    pub(crate) fn is_vertex_cover(&self, config: &[usize]) -> bool {
        self.edges.iter().all(|&(u, v)| config[u] == 1 || config[v] == 1)
    }

    pub(crate) fn is_clique(&self, config: &[usize]) -> bool {
        let k = Self::selected_count(config) as usize;
        let inside = self.edges.iter().filter(|&&(u, v)| config[u] == 1 && config[v] == 1).count();
        inside == k * k.saturating_sub(1) / 2
    }

    pub(crate) fn is_dominating(&self, config: &[usize]) -> bool {
        let mut dominated: Vec<bool> = config.iter().map(|&x| x == 1).collect();
        for &(u, v) in &self.edges {
            if config[u] == 1 {
                dominated[v] = true;
            }
            if config[v] == 1 {
                dominated[u] = true;
            }
        }
        dominated.into_iter().all(|d| d)
    }

    pub(crate) fn cut_size(&self, config: &[usize]) -> i64 {
        self.edges.iter().filter(|&&(u, v)| config[u] != config[v]).count() as i64
    }

    pub(crate) fn is_proper_coloring(&self, config: &[usize]) -> bool {
        self.edges.iter().all(|&(u, v)| config[u] != config[v])
    }
}

/// A graph together with a number of available colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub graph: Graph,
    pub colors: usize,
}

impl Coloring {
    pub fn new(graph: Graph, colors: usize) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InvalidInstance("coloring needs at least one color".into()));
        }
        if graph.is_weighted() {
            return Err(Error::InvalidInstance("coloring graphs carry no weights".into()));
        }
        Ok(Self { graph, colors })
    }
}
