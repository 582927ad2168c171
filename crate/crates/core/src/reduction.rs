//! From NAE-SAT formulas to `(2,k)`-coloring instances.
//!
//! The reduction graph has one literal pair `(x, ¬x)` per variable joined by a
//! super-edge, one `k`-cycle per clause with a vertex per literal occurrence,
//! and one super-edge from every occurrence vertex to the vertex of the same
//! literal. A super-edge is realized by gluing a fresh copy of a gadget whose
//! designated pair is identified with the two endpoints.
//!
//! Vertex numbering: variable gadgets first, then clause cycles, then the
//! occurrence gadgets, each in input order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Assignment, Formula, Literal};
use crate::gadgets::{juncture, k4_loop, tree_gadget, Gadget, TreeConfig};
use crate::graph::{Color, Coloring, Graph, GraphJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Basic,
    Necklace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ReductionStats {
    pub variables: usize,
    pub clauses: usize,
    /// Super-edge gadget copies glued into the graph. The necklace counts
    /// its shared loop once.
    pub gadget_instances: usize,
    pub gadget_vertices: usize,
    pub gadget_edges: usize,
    pub num_vertices: usize,
    pub num_edges: usize,
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub k: usize,
    pub variant: Variant,
    /// `(x_i, ¬x_i)` vertices for variable `i + 1`.
    pub literal_vertices: Vec<(usize, usize)>,
    /// `occurrence_vertices[c][s]` is the cycle vertex for slot `s` of clause `c`.
    pub occurrence_vertices: Vec<Vec<usize>>,
    /// Every pair that a super-edge is supposed to keep bichromatic.
    pub super_edges: Vec<(usize, usize)>,
    pub stats: ReductionStats,
}

impl ReductionOutput {
    pub fn literal_vertex(&self, lit: Literal) -> usize {
        let (pos, neg) = self.literal_vertices[lit.variable as usize - 1];
        if lit.negated {
            neg
        } else {
            pos
        }
    }

    /// Reads an assignment off a coloring: a variable is true iff its
    /// positive literal vertex is red.
    pub fn extract_assignment(&self, coloring: &Coloring) -> Assignment {
        Assignment::new(self.literal_vertices.iter().map(|&(pos, _)| coloring[pos] == Color::Red).collect())
    }

    /// Human-readable names for the literal and occurrence vertices.
    pub fn labels(&self) -> BTreeMap<String, usize> {
        let mut labels = BTreeMap::new();
        for (i, &(pos, neg)) in self.literal_vertices.iter().enumerate() {
            labels.insert(format!("x{}", i + 1), pos);
            labels.insert(format!("-x{}", i + 1), neg);
        }
        for (c, slots) in self.occurrence_vertices.iter().enumerate() {
            for (s, &v) in slots.iter().enumerate() {
                labels.insert(format!("C{}.{}", c + 1, s + 1), v);
            }
        }
        labels
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire<'a> {
            #[serde(flatten)]
            graph: GraphJson,
            k: usize,
            variant: Variant,
            labels: BTreeMap<String, usize>,
            stats: &'a ReductionStats,
        }
        serde_json::to_string(&Wire {
            graph: GraphJson::from(&self.graph),
            k: self.k,
            variant: self.variant,
            labels: self.labels(),
            stats: &self.stats,
        })
        .expect("reduction serialization is infallible")
    }
}

/// The super-edge gadget used for cycle length `k`: the five-block `K4`
/// loop for triangles, the tree gadget otherwise.
pub fn super_edge_gadget(k: usize) -> Result<Gadget> {
    if k == 3 {
        k4_loop(5)
    } else {
        tree_gadget(k)
    }
}

fn check_widths(formula: &Formula, k: usize) -> Result<()> {
    for (i, clause) in formula.clauses.iter().enumerate() {
        if clause.len() <= 1 {
            return Err(Error::UnitClause { clause: i });
        }
        if clause.len() != k {
            return Err(Error::WidthViolation { clause: i, width: clause.len(), expected: k });
        }
    }
    Ok(())
}

struct Builder {
    graph: Graph,
    super_edges: Vec<(usize, usize)>,
    instances: usize,
    gadget_vertices: usize,
    gadget_edges: usize,
}

impl Builder {
    fn new(graph: Graph) -> Self {
        Builder { graph, super_edges: Vec::new(), instances: 0, gadget_vertices: 0, gadget_edges: 0 }
    }

    fn glue(&mut self, gadget: &Gadget, x: usize, y: usize) {
        let before = self.graph.num_vertices();
        self.graph.embed(&gadget.graph, &[(gadget.x, x), (gadget.y, y)]);
        self.super_edges.push((x, y));
        self.instances += 1;
        self.gadget_vertices += self.graph.num_vertices() - before;
        self.gadget_edges += gadget.graph.num_edges();
    }

    fn clause_cycles(&mut self, formula: &Formula, k: usize) -> Vec<Vec<usize>> {
        formula
            .clauses
            .iter()
            .map(|_| {
                let first = self.graph.add_vertices(k);
                for s in 0..k {
                    self.graph.add_edge(first + s, first + (s + 1) % k);
                }
                (first..first + k).collect()
            })
            .collect()
    }

    fn finish(
        self,
        formula: &Formula,
        k: usize,
        variant: Variant,
        literal_vertices: Vec<(usize, usize)>,
        occurrence_vertices: Vec<Vec<usize>>,
    ) -> ReductionOutput {
        let stats = ReductionStats {
            variables: formula.num_vars as usize,
            clauses: formula.clauses.len(),
            gadget_instances: self.instances,
            gadget_vertices: self.gadget_vertices,
            gadget_edges: self.gadget_edges,
            num_vertices: self.graph.num_vertices(),
            num_edges: self.graph.num_edges(),
        };
        ReductionOutput {
            graph: self.graph,
            k,
            variant,
            literal_vertices,
            occurrence_vertices,
            super_edges: self.super_edges,
            stats,
        }
    }
}

/// Builds `G_φ` for a formula whose clauses all have exactly `k` literals
/// (see [`crate::formula::pad_to_width`]).
pub fn reduce(formula: &Formula, k: usize) -> Result<ReductionOutput> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("cycle length must be at least 3, got {k}")));
    }
    check_widths(formula, k)?;
    let n = formula.num_vars as usize;
    let mut b = Builder::new(Graph::new(0));
    if n == 0 && formula.clauses.is_empty() {
        return Ok(b.finish(formula, k, Variant::Basic, Vec::new(), Vec::new()));
    }
    let gadget = super_edge_gadget(k)?;

    let mut literal_vertices = Vec::with_capacity(n);
    for _ in 0..n {
        let pos = b.graph.add_vertex();
        let neg = b.graph.add_vertex();
        b.glue(&gadget, pos, neg);
        literal_vertices.push((pos, neg));
    }
    let occurrences = b.clause_cycles(formula, k);
    wire_occurrences(&mut b, &gadget, formula, &occurrences, &literal_vertices);
    Ok(b.finish(formula, k, Variant::Basic, literal_vertices, occurrences))
}

fn wire_occurrences(
    b: &mut Builder,
    gadget: &Gadget,
    formula: &Formula,
    occurrences: &[Vec<usize>],
    literal_vertices: &[(usize, usize)],
) {
    for (clause, slots) in formula.clauses.iter().zip(occurrences) {
        for (lit, &slot) in clause.literals.iter().zip(slots) {
            let (pos, neg) = literal_vertices[lit.variable as usize - 1];
            b.glue(gadget, slot, if lit.negated { neg } else { pos });
        }
    }
}

/// The necklace variant for triangles: all variable gadgets share a single
/// `K4` loop of length `2n + 1`, variable `i` sitting on the juncture
/// between blocks `2i` and `2i + 1` (1-based). Needs exactly-3 clauses and
/// at least two variables, since a loop of length 3 is `K6` and has no valid
/// coloring.
pub fn reduce_necklace(formula: &Formula) -> Result<ReductionOutput> {
    check_widths(formula, 3)?;
    let n = formula.num_vars as usize;
    if n <= 1 {
        return Err(Error::InvalidArgument(
            "the necklace needs at least two variables; use the basic reduction".into(),
        ));
    }
    let ring = k4_loop(2 * n + 1)?;
    let mut b = Builder::new(ring.graph.clone());
    b.instances = 1;
    b.gadget_vertices = ring.graph.num_vertices();
    b.gadget_edges = ring.graph.num_edges();
    // Juncture j (0-based) joins blocks j and j + 1 in 1-based numbering.
    let literal_vertices: Vec<(usize, usize)> = (1..=n).map(|i| juncture(2 * i)).collect();
    b.super_edges.extend(literal_vertices.iter().copied());

    let gadget = k4_loop(5)?;
    let occurrences = b.clause_cycles(formula, 3);
    wire_occurrences(&mut b, &gadget, formula, &occurrences, &literal_vertices);
    Ok(b.finish(formula, 3, Variant::Necklace, literal_vertices, occurrences))
}

/// Closed-form size predictions: the published formulas next to a recount
/// from the gadget structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizePrediction {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub variant: Variant,
    pub edges_paper: u128,
    pub vertices_paper: u128,
    pub edges_derived: u128,
    pub vertices_derived: u128,
}

impl SizePrediction {
    pub fn edges_match(&self) -> bool {
        self.edges_paper == self.edges_derived
    }

    pub fn vertices_match(&self) -> bool {
        self.vertices_paper == self.vertices_derived
    }

    pub fn mismatch(&self) -> bool {
        !self.edges_match() || !self.vertices_match()
    }

    /// Plain-text comparison table.
    pub fn table(&self) -> String {
        let mark = |ok: bool| if ok { "ok" } else { "MISMATCH" };
        format!(
            "k={} n={} m={} variant={:?}\n{:<10}{:>16}{:>16}  status\n{:<10}{:>16}{:>16}  {}\n{:<10}{:>16}{:>16}  {}\n",
            self.k,
            self.n,
            self.m,
            self.variant,
            "",
            "published",
            "derived",
            "edges",
            self.edges_paper,
            self.edges_derived,
            mark(self.edges_match()),
            "vertices",
            self.vertices_paper,
            self.vertices_derived,
            mark(self.vertices_match()),
        )
    }
}

/// Edge count of the general-`k` tree gadget as published, with `h = 4q`
/// and `q = ⌊(k−1)/2⌋`.
pub fn published_tree_gadget_edges(k: usize) -> u128 {
    let q = (k as u32 - 1) / 2;
    let p = 1u128 << (4 * q);
    let sum: u128 = (0..=q).map(|i| 1u128 << (4 * i)).sum();
    15 * p - 2 * p + 2 * p + 32 * sum
}

/// Vertex count of the general-`k` tree gadget as published.
pub fn published_tree_gadget_vertices(k: usize) -> u128 {
    let q = (k as u32 - 1) / 2;
    2 * (1u128 << (4 * q + 1)) - 2
}

pub fn predicted_sizes(k: usize, n: usize, m: usize, variant: Variant) -> Result<SizePrediction> {
    if !(3..=31).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be in 3..=31, got {k}")));
    }
    if variant == Variant::Necklace && k != 3 {
        return Err(Error::InvalidArgument("the necklace variant exists only for k = 3".into()));
    }
    let (n128, m128, k128) = (n as u128, m as u128, k as u128);
    let gadgets = k128 * m128 + n128;
    let (edges_paper, vertices_paper, edges_derived, vertices_derived) = match (k, variant) {
        (3, Variant::Basic) => (
            78 * m128 + 25 * n128,
            24 * m128 + 10 * n128,
            3 * m128 + 25 * gadgets,
            3 * m128 + 2 * n128 + 8 * gadgets,
        ),
        (3, Variant::Necklace) => (
            78 * m128 + 10 * n128 + 5,
            27 * m128 + 4 * n128 + 2,
            5 * (2 * n128 + 1) + 3 * m128 + 25 * 3 * m128,
            2 * (2 * n128 + 1) + 3 * m128 + 8 * 3 * m128,
        ),
        _ => {
            let config = TreeConfig::for_k(k)?;
            let ge = config.expected_edges() as u128;
            let gv = config.num_vertices() as u128;
            let edges_derived = k128 * m128 + ge * gadgets;
            let vertices_derived = k128 * m128 + 2 * n128 + (gv - 2) * gadgets;
            let (edges_paper, vertices_paper) = if k == 4 {
                (976 * m128 + 243 * n128, 244 * m128 + 62 * n128)
            } else {
                (
                    k128 * m128 + published_tree_gadget_edges(k) * gadgets,
                    k128 * m128 + 2 * n128 + published_tree_gadget_vertices(k) * gadgets,
                )
            };
            (edges_paper, vertices_paper, edges_derived, vertices_derived)
        }
    };
    // Degenerate inputs build an empty graph.
    let (edges_derived, vertices_derived) =
        if n == 0 && m == 0 { (0, 0) } else { (edges_derived, vertices_derived) };
    Ok(SizePrediction {
        k,
        n,
        m,
        variant,
        edges_paper,
        vertices_paper,
        edges_derived,
        vertices_derived,
    })
}
