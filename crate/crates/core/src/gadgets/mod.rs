//! Super-edge gadgets.
//!
//! A super-edge gadget is a graph with a designated edge `{x, y}` that admits
//! a valid coloring, and in every valid coloring `x` and `y` get different
//! colors. Gluing copies of it between two vertices transmits inequality.

mod tree;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};

pub use tree::{tree_gadget, tree_gadget_layout, Band, Closure, TreeConfig, TreeGadgetLayout};
pub use verify::{verify_super_edge, verify_super_edge_capped, VerificationReport, VerifyMethod};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GadgetJson", into = "GadgetJson")]
pub struct Gadget {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    pub k: usize,
}

impl Gadget {
    pub fn new(graph: Graph, x: usize, y: usize, k: usize) -> Result<Self> {
        if x == y || !graph.has_edge(x, y) {
            return Err(Error::InvalidGraph(format!("designated pair ({x}, {y}) is not an edge")));
        }
        Ok(Gadget { graph, x, y, k })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("gadget serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Graph JSON plus `"designated_edge": [x, y]` and `"k"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GadgetJson {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub designated_edge: [usize; 2],
    pub k: usize,
}

impl From<Gadget> for GadgetJson {
    fn from(g: Gadget) -> Self {
        GadgetJson { graph: GraphJson::from(&g.graph), designated_edge: [g.x, g.y], k: g.k }
    }
}

impl TryFrom<GadgetJson> for Gadget {
    type Error = Error;

    fn try_from(json: GadgetJson) -> Result<Self> {
        let graph = Graph::try_from(json.graph)?;
        Gadget::new(graph, json.designated_edge[0], json.designated_edge[1], json.k)
    }
}

/// A chain of `K4` blocks; consecutive blocks share one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringGraph {
    pub graph: Graph,
    pub input_edge: (usize, usize),
    pub output_edge: (usize, usize),
}

/// Juncture `j` of a string or loop is the vertex pair `(2j, 2j + 1)`.
pub fn juncture(j: usize) -> (usize, usize) {
    (2 * j, 2 * j + 1)
}

fn add_k4_block(graph: &mut Graph, a: (usize, usize), b: (usize, usize)) {
    let vs = [a.0, a.1, b.0, b.1];
    for i in 0..4 {
        for j in i + 1..4 {
            graph.add_edge(vs[i], vs[j]);
        }
    }
}

/// `s` `K4` blocks in a row: `2s + 2` vertices and `5s + 1` edges. Block `i`
/// spans junctures `i` and `i + 1`.
pub fn k4_string(length: usize) -> Result<StringGraph> {
    if length < 1 {
        return Err(Error::InvalidArgument("a K4 string needs at least one block".into()));
    }
    let mut graph = Graph::new(2 * length + 2);
    for i in 0..length {
        add_k4_block(&mut graph, juncture(i), juncture(i + 1));
    }
    Ok(StringGraph { graph, input_edge: juncture(0), output_edge: juncture(length) })
}

/// `l` `K4` blocks closed into a ring: `2l` vertices and `5l` edges. Block
/// `i` spans junctures `i` and `(i + 1) mod l`; the designated pair is
/// juncture 0, where the last block meets the first.
///
/// Odd `l ≥ 5` gives a super-edge for triangles; `l = 3` is `K6`.
pub fn k4_loop(length: usize) -> Result<Gadget> {
    if length < 3 {
        return Err(Error::InvalidArgument("a K4 loop needs at least three blocks".into()));
    }
    let mut graph = Graph::new(2 * length);
    for i in 0..length {
        add_k4_block(&mut graph, juncture(i), juncture((i + 1) % length));
    }
    let (x, y) = juncture(0);
    Gadget::new(graph, x, y, 3)
}
