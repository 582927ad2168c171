//! Reductions and decision procedures for 2-coloring graphs so that no cycle
//! of a given length `k` is monochromatic, the `(2,k)`-coloring problem.
//!
//! The crate is organised around the pieces of the NP-hardness argument
//! from not-all-equal SAT:
//!
//! - [`formula`]: CNF formulas with not-all-equal semantics, DIMACS I/O and a
//!   brute-force NAE oracle.
//! - [`graph`]: the graph substrate, exact-length cycle enumeration, the
//!   validity predicate and a brute-force coloring oracle.
//! - [`gadgets`]: `K4` strings and loops, the binary-tree gadget built from
//!   `K6` blocks, and a verifier for the super-edge contract.
//! - [`reduction`]: the formula-to-graph reduction (basic and necklace) and
//!   closed-form size predictions.
//! - [`decider`]: a cycle-to-CNF encoding solved by an in-crate clause-learning
//!   SAT engine.
//! - [`search`]: exhaustive search for vertex-minimal super-edge gadgets over
//!   canonically enumerated graphs.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod decider;
pub mod error;
pub mod formula;
pub mod gadgets;
pub mod graph;
pub mod reduction;
pub mod search;

pub use decider::{check_forcing, decide_col, dpll_solve, encode_nae_cycles, CnfEncoding, SolveResult};
pub use error::{Error, Result};
pub use formula::{Assignment, Clause, Formula, Literal};
pub use gadgets::{k4_loop, k4_string, tree_gadget, verify_super_edge, Gadget, VerificationReport, VerifyMethod};
pub use graph::{Color, Coloring, Cycle, Graph};
pub use reduction::{predicted_sizes, reduce, reduce_necklace, ReductionOutput, SizePrediction, Variant};
