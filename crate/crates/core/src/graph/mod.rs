//! Simple undirected graphs, `k`-cycles and 2-colorings.

mod coloring;
mod cycles;
mod export;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use coloring::{
    brute_force_coloring, brute_force_coloring_capped, is_valid_coloring, CycleMasks,
    DEFAULT_COLORING_CAP,
};
pub use cycles::{count_k_cycles, enumerate_k_cycles, for_each_k_cycle, Cycle};
pub use export::{to_dot, DotOptions};

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted so iteration order, and everything derived
/// from it, is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    num_edges: usize,
}

impl Graph {
    pub fn new(num_vertices: usize) -> Self {
        Graph { adj: vec![Vec::new(); num_vertices], num_edges: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn from_edges(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(num_vertices);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
            }
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {num_vertices} vertices"
                )));
            }
            if !g.add_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `count` fresh vertices and returns the first new id.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.adj.len();
        self.adj.resize(first + count, Vec::new());
        first
    }

    /// Inserts `{u, v}`. Returns false when the edge was already present.
    ///
    /// Panics on self-loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "self-loop on vertex {u}");
        assert!(u < self.adj.len() && v < self.adj.len(), "edge ({u}, {v}) out of range");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.num_edges += 1;
                true
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Copies `other` into `self`, identifying `other`'s vertex `a` with
    /// `self`'s vertex `target` for every `(a, target)` in `glue`. All other
    /// vertices of `other` become fresh vertices, numbered in `other`'s order.
    /// Returns the vertex map from `other` into `self`.
    pub fn embed(&mut self, other: &Graph, glue: &[(usize, usize)]) -> Vec<usize> {
        let mut map = vec![usize::MAX; other.num_vertices()];
        for &(a, target) in glue {
            map[a] = target;
        }
        for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
            *slot = self.add_vertex();
        }
        for (u, v) in other.edges() {
            self.add_edge(map[u], map[v]);
        }
        map
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("num_vertices", &self.num_vertices())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Wire form: `{"num_vertices": n, "edges": [[u, v], ...]}` with `u < v` and
/// edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub num_vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson::from(&g)
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { num_vertices: g.num_vertices(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(json.num_vertices, &edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Self {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Total vertex coloring. Serialized as `{"colors": ["red", "blue", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    pub fn uniform(n: usize, color: Color) -> Self {
        Coloring { colors: vec![color; n] }
    }

    /// `true` means red, matching the decider's variable polarity.
    pub fn from_bools(red: &[bool]) -> Self {
        Coloring {
            colors: red.iter().map(|&r| if r { Color::Red } else { Color::Blue }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn flipped(&self) -> Self {
        Coloring { colors: self.colors.iter().map(|c| c.flip()).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl std::ops::Index<usize> for Coloring {
    type Output = Color;

    fn index(&self, v: usize) -> &Color {
        &self.colors[v]
    }
}
