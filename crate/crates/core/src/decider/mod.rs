//! Deciding `(2,k)`-colorability through SAT.
//!
//! Every vertex is a boolean variable (true = red). Each `k`-cycle yields one
//! all-positive clause (not all blue) and one all-negative clause (not all
//! red), so the models of the encoding are exactly the valid colorings.

mod dpll;

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{for_each_k_cycle, is_valid_coloring, Color, Coloring, Graph};

pub use dpll::SolveStats;

/// A literal over vertex variables: `code = 2 * var + negated`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: usize, negated: bool) -> Self {
        Lit((var as u32) << 1 | negated as u32)
    }

    pub fn positive(var: usize) -> Self {
        Lit::new(var, false)
    }

    pub fn negative(var: usize) -> Self {
        Lit::new(var, true)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negated(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        Lit(self.0 ^ 1)
    }

    pub(crate) fn code(self) -> usize {
        self.0 as usize
    }

    /// The literal asserting `vertex` has `color`.
    pub fn of_color(vertex: usize, color: Color) -> Self {
        Lit::new(vertex, color == Color::Blue)
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var() as i64 + 1;
        if self.is_negated() {
            -v
        } else {
            v
        }
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfEncoding {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

impl CnfEncoding {
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Standard DIMACS CNF, variable `v + 1` for vertex `v`.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Two clauses per `k`-cycle, in canonical cycle order.
pub fn encode_nae_cycles(graph: &Graph, k: usize) -> CnfEncoding {
    let mut clauses = Vec::new();
    let _ = for_each_k_cycle(graph, k, |cycle| {
        clauses.push(cycle.iter().map(|&v| Lit::positive(v)).collect());
        clauses.push(cycle.iter().map(|&v| Lit::negative(v)).collect());
        ControlFlow::Continue(())
    });
    CnfEncoding { num_vars: graph.num_vertices(), clauses }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Satisfiable,
    Unsatisfiable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    pub model: Option<Coloring>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        self.status == Status::Satisfiable
    }
}

/// Complete clause-learning search for a model extending `assumptions`.
pub fn dpll_solve(encoding: &CnfEncoding, assumptions: &[(usize, Color)]) -> Result<SolveResult> {
    let mut lits = Vec::with_capacity(assumptions.len());
    for &(v, color) in assumptions {
        if v >= encoding.num_vars {
            return Err(Error::InvalidArgument(format!(
                "assumption on vertex {v} but the encoding has {} variables",
                encoding.num_vars
            )));
        }
        if assumptions.iter().any(|&(w, c)| w == v && c != color) {
            return Err(Error::ContradictoryAssumptions(v));
        }
        lits.push(Lit::of_color(v, color));
    }
    let mut solver = dpll::Dpll::new(encoding.num_vars, &encoding.clauses);
    let model = solver.solve(&lits);
    Ok(SolveResult {
        status: if model.is_some() { Status::Satisfiable } else { Status::Unsatisfiable },
        model: model.map(|m| Coloring::from_bools(&m)),
        stats: solver.stats,
    })
}

/// Decides `(2,k)`-colorability with vertex 0 fixed red.
pub fn decide_col(graph: &Graph, k: usize) -> Option<Coloring> {
    decide_col_with_stats(graph, k).model
}

pub fn decide_col_with_stats(graph: &Graph, k: usize) -> SolveResult {
    let encoding = encode_nae_cycles(graph, k);
    decide_encoded(graph, k, &encoding)
}

fn decide_encoded(graph: &Graph, k: usize, encoding: &CnfEncoding) -> SolveResult {
    let assumptions: &[(usize, Color)] =
        if graph.num_vertices() > 0 { &[(0, Color::Red)] } else { &[] };
    let result = dpll_solve(encoding, assumptions).expect("assumptions are well-formed");
    debug_assert!(result
        .model
        .as_ref()
        .is_none_or(|m| is_valid_coloring(graph, k, m).unwrap_or(false)));
    result
}

/// Outcome of a SAT-based forcing check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingCheck {
    /// Some valid coloring exists.
    pub colorable: bool,
    /// No valid coloring gives `x` and `y` the same color.
    pub forces_distinct: bool,
    pub witness: Option<Coloring>,
    /// A valid coloring with `x` and `y` both red, when one exists.
    pub counterexample: Option<Coloring>,
}

impl ForcingCheck {
    pub fn holds(&self) -> bool {
        self.colorable && self.forces_distinct
    }
}

/// True iff the graph is colorable and every valid coloring separates `x`
/// and `y`. Only the both-red case is solved; both-blue follows by flipping
/// all colors.
pub fn check_forcing(graph: &Graph, k: usize, x: usize, y: usize) -> bool {
    forcing_report(graph, k, x, y).holds()
}

pub fn forcing_report(graph: &Graph, k: usize, x: usize, y: usize) -> ForcingCheck {
    let encoding = encode_nae_cycles(graph, k);
    let witness = decide_encoded(graph, k, &encoding).model;
    let counterexample = dpll_solve(&encoding, &[(x, Color::Red), (y, Color::Red)])
        .expect("same-color assumptions are consistent")
        .model;
    ForcingCheck {
        colorable: witness.is_some(),
        forces_distinct: counterexample.is_none(),
        witness,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lits(v: &[i64]) -> Vec<Lit> {
        v.iter().map(|&x| Lit::new(x.unsigned_abs() as usize - 1, x < 0)).collect()
    }

    #[test]
    fn triangle_encoding() {
        let enc = encode_nae_cycles(&Graph::complete(3), 3);
        assert_eq!(enc.clauses, vec![lits(&[1, 2, 3]), lits(&[-1, -2, -3])]);
        assert_eq!(enc.to_dimacs(), "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    }

    #[test]
    fn encoding_sizes() {
        assert_eq!(encode_nae_cycles(&Graph::cycle(5), 3).num_clauses(), 0);
        assert_eq!(encode_nae_cycles(&Graph::complete(4), 3).num_clauses(), 8);
    }

    #[test]
    fn dpll_basics() {
        let empty = CnfEncoding { num_vars: 3, clauses: vec![] };
        let r = dpll_solve(&empty, &[]).unwrap();
        assert_eq!(r.model, Some(Coloring::uniform(3, Color::Red)));

        let contradiction = CnfEncoding { num_vars: 1, clauses: vec![lits(&[1]), lits(&[-1])] };
        assert_eq!(dpll_solve(&contradiction, &[]).unwrap().status, Status::Unsatisfiable);

        let with_empty = CnfEncoding { num_vars: 1, clauses: vec![vec![]] };
        assert!(!dpll_solve(&with_empty, &[]).unwrap().is_sat());
    }

    #[test]
    fn dpll_rejects_bad_assumptions() {
        let enc = CnfEncoding { num_vars: 2, clauses: vec![] };
        assert!(matches!(
            dpll_solve(&enc, &[(0, Color::Red), (0, Color::Blue)]),
            Err(Error::ContradictoryAssumptions(0))
        ));
        assert!(dpll_solve(&enc, &[(5, Color::Red)]).is_err());
    }

    #[test]
    fn dpll_needs_backtracking() {
        // Forces x1 = false after trying true first.
        let enc = CnfEncoding {
            num_vars: 3,
            clauses: vec![lits(&[-1, 2]), lits(&[-1, -2]), lits(&[2, 3]), lits(&[-3, -2])],
        };
        let r = dpll_solve(&enc, &[]).unwrap();
        let m = r.model.unwrap();
        assert_eq!(m.colors, vec![Color::Blue, Color::Red, Color::Blue]);
        assert!(r.stats.conflicts >= 1);
    }

    #[test]
    fn k6_is_not_triangle_colorable() {
        assert_eq!(decide_col(&Graph::complete(6), 3), None);
        let c = decide_col(&Graph::complete(4), 3).unwrap();
        assert!(is_valid_coloring(&Graph::complete(4), 3, &c).unwrap());
        assert_eq!(c[0], Color::Red);
    }

    #[test]
    fn forcing_on_isolated_pair_fails() {
        assert!(!check_forcing(&Graph::new(2), 3, 0, 1));
    }

    #[test]
    fn assumptions_respected() {
        let g = Graph::complete(4);
        let enc = encode_nae_cycles(&g, 3);
        let r = dpll_solve(&enc, &[(3, Color::Red), (2, Color::Red)]).unwrap();
        let m = r.model.unwrap();
        assert_eq!((m[2], m[3]), (Color::Red, Color::Red));
        assert_eq!((m[0], m[1]), (Color::Blue, Color::Blue));
    }
}
