//! The binary-tree super-edge gadget for cycle lengths `k ≥ 4`.
//!
//! Every tree node is a vertex pair. A node's pair together with its two
//! children's pairs spans a `K6`; with no monochromatic 4-cycle inside that
//! `K6`, a monochromatic parent forces exactly one child to be monochromatic
//! in the opposite color. Following the forced children from a monochromatic
//! root gives an alternating path, and every fourth node on it (the
//! cycle-inducing levels) has the root's color. Extra edges between
//! cycle-inducing levels then close a monochromatic `k`-cycle through those
//! nodes.
//!
//! Nodes are numbered breadth-first: node `i` has children `2i + 1` and
//! `2i + 2`, and owns vertices `2i` and `2i + 1`.

use serde::Serialize;

use super::Gadget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// How a cycle-inducing node `ν` is joined to a descendant `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    /// `ν⁰–δ⁰` and `ν¹–δ¹`: each joined pair forms a 4-cycle.
    Square,
    /// `ν⁰–δ⁰` and `ν⁰–δ¹`: triangles on `ν⁰`.
    Apex,
    /// `ν⁰–δ⁰` and `ν¹–δ⁰`: both upper vertices meet the lower node's first
    /// vertex.
    Fan,
}

/// Edges between two cycle-inducing levels: every node at depth `from` is
/// joined to each of its descendants at depth `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Band {
    pub from: usize,
    pub to: usize,
    pub pattern: Closure,
}

/// Shape of a tree gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeConfig {
    pub height: usize,
    /// Depths of the cycle-inducing levels, strictly increasing, starting at
    /// the root (0) and ending at the leaves (`height`).
    pub ci_depths: Vec<usize>,
    pub bands: Vec<Band>,
}

impl TreeConfig {
    /// The construction used for cycle length `k ≥ 4`: `q = ⌊(k−1)/2⌋`,
    /// height `4q`, cycle-inducing levels at every multiple of 4, and each
    /// cycle-inducing node joined to its descendants on the next
    /// cycle-inducing level. Every band uses the square pattern except the
    /// deepest band for odd `k`, which uses the fan pattern so the donut
    /// closes after `2q + 1` vertices.
    pub fn for_k(k: usize) -> Result<Self> {
        if k < 4 {
            return Err(Error::InvalidArgument(format!("tree gadgets need k >= 4, got {k}")));
        }
        let q = (k - 1) / 2;
        let ci_depths: Vec<usize> = (0..=q).map(|i| 4 * i).collect();
        let bands = ci_depths
            .windows(2)
            .enumerate()
            .map(|(i, w)| Band {
                from: w[0],
                to: w[1],
                pattern: if k % 2 == 1 && i == q - 1 { Closure::Fan } else { Closure::Square },
            })
            .collect();
        Ok(TreeConfig { height: 4 * q, ci_depths, bands })
    }

    /// Root joined straight to the leaves with `closure`, and the square
    /// pattern between consecutive cycle-inducing levels below the root.
    pub fn with_root_closure(ci_depths: Vec<usize>, closure: Closure) -> Self {
        let height = *ci_depths.last().expect("at least the root level");
        let mut bands = vec![Band { from: 0, to: height, pattern: closure }];
        bands.extend(
            ci_depths.windows(2).skip(1).map(|w| Band { from: w[0], to: w[1], pattern: Closure::Square }),
        );
        TreeConfig { height, ci_depths, bands }
    }

    /// Root-to-leaf square closure only, for the height ablation at `k = 4`.
    pub fn plain(height: usize) -> Self {
        TreeConfig::with_root_closure(vec![0, height], Closure::Square)
    }

    pub fn num_nodes(&self) -> usize {
        (1usize << (self.height + 1)) - 1
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.num_nodes()
    }

    /// Edge count from the structure alone: one edge per node pair, twelve
    /// cross edges per internal node's `K6`, and two edges for every linked
    /// descendant. Links between adjacent levels already lie in a `K6`.
    pub fn expected_edges(&self) -> usize {
        let internal = (1usize << self.height) - 1;
        let mut edges = self.num_nodes() + 12 * internal;
        for band in &self.bands {
            if band.to - band.from > 1 {
                edges += 2 << band.to;
            }
        }
        edges
    }

    fn validate(&self) -> Result<()> {
        let ok = self.height >= 1
            && self.height <= 24
            && self.ci_depths.first() == Some(&0)
            && self.ci_depths.last() == Some(&self.height)
            && self.ci_depths.windows(2).all(|w| w[0] < w[1])
            && self.bands.iter().all(|b| b.from < b.to && b.to <= self.height);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("invalid tree configuration {self:?}")))
        }
    }
}

/// A constructed tree gadget together with its node table.
#[derive(Debug, Clone)]
pub struct TreeGadgetLayout {
    pub config: TreeConfig,
    pub gadget: Gadget,
}

impl TreeGadgetLayout {
    pub fn height(&self) -> usize {
        self.config.height
    }

    pub fn num_nodes(&self) -> usize {
        self.config.num_nodes()
    }

    /// The vertex pair `(ν⁰, ν¹)` of a node.
    pub fn node(&self, index: usize) -> (usize, usize) {
        (2 * index, 2 * index + 1)
    }

    /// Index of the `offset`-th node (left to right) at `depth`.
    pub fn node_at(depth: usize, offset: usize) -> usize {
        (1 << depth) - 1 + offset
    }

    pub fn depth_of(index: usize) -> usize {
        (usize::BITS - 1 - (index + 1).leading_zeros()) as usize
    }

    pub fn is_cycle_inducing(&self, index: usize) -> bool {
        self.config.ci_depths.contains(&Self::depth_of(index))
    }

    /// Nodes from the root to the leaf at `leaf_offset`.
    pub fn root_to_leaf(&self, leaf_offset: usize) -> Vec<usize> {
        let h = self.config.height;
        (0..=h).map(|d| Self::node_at(d, leaf_offset >> (h - d))).collect()
    }

    /// The donut: the cycle through the root and the cycle-inducing nodes
    /// of one root-to-leaf path. It runs down the first vertices to the
    /// deepest cycle-inducing node and back up the second vertices; after a
    /// fan band it skips the deepest node's second vertex. Meaningful for
    /// chained layouts such as [`TreeConfig::for_k`].
    pub fn donut_cycle(&self, leaf_offset: usize) -> Vec<usize> {
        let path = self.root_to_leaf(leaf_offset);
        let ci: Vec<usize> = self.config.ci_depths.iter().map(|&d| path[d]).collect();
        let fan = self.config.bands.last().is_some_and(|b| b.pattern == Closure::Fan);
        let mut cycle: Vec<usize> = ci.iter().map(|&n| self.node(n).0).collect();
        let up = if fan { ci.len() - 1 } else { ci.len() };
        cycle.extend(ci[..up].iter().rev().map(|&n| self.node(n).1));
        cycle
    }
}

/// Builds the tree gadget for cycle length `k` using [`TreeConfig::for_k`].
pub fn tree_gadget(k: usize) -> Result<Gadget> {
    Ok(tree_gadget_layout(&TreeConfig::for_k(k)?, k)?.gadget)
}

pub fn tree_gadget_layout(config: &TreeConfig, k: usize) -> Result<TreeGadgetLayout> {
    config.validate()?;
    let h = config.height;
    let nodes = config.num_nodes();
    let mut graph = Graph::new(2 * nodes);
    let pair = |i: usize| (2 * i, 2 * i + 1);

    for i in 0..nodes {
        graph.add_edge(2 * i, 2 * i + 1);
    }
    let internal = (1usize << h) - 1;
    for p in 0..internal {
        let vs = [pair(p).0, pair(p).1, pair(2 * p + 1).0, pair(2 * p + 1).1, pair(2 * p + 2).0, pair(2 * p + 2).1];
        for a in 0..6 {
            for b in a + 1..6 {
                graph.add_edge(vs[a], vs[b]);
            }
        }
    }
    for &Band { from, to, pattern } in &config.bands {
        for offset in 0..(1usize << from) {
            let (a0, a1) = pair(TreeGadgetLayout::node_at(from, offset));
            let span = 1usize << (to - from);
            for d in offset * span..(offset + 1) * span {
                let (d0, d1) = pair(TreeGadgetLayout::node_at(to, d));
                graph.add_edge(a0, d0);
                match pattern {
                    Closure::Square => graph.add_edge(a1, d1),
                    Closure::Apex => graph.add_edge(a0, d1),
                    Closure::Fan => graph.add_edge(a1, d0),
                };
            }
        }
    }
    let gadget = Gadget::new(graph, 0, 1, k)?;
    Ok(TreeGadgetLayout { config: config.clone(), gadget })
}
