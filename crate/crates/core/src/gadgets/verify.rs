use rayon::prelude::*;
use serde::Serialize;

use super::Gadget;
use crate::decider::forcing_report;
use crate::error::{Error, Result};
use crate::graph::{Coloring, CycleMasks, DEFAULT_COLORING_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMethod {
    Exhaustive,
    Sat,
}

/// Result of checking the super-edge contract on a gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub method: VerifyMethod,
    pub k: usize,
    pub num_vertices: usize,
    pub num_edges: usize,
    /// Some valid coloring of the gadget exists.
    pub existence: bool,
    /// Every valid coloring gives `x` and `y` different colors.
    pub forcing: bool,
    /// Number of valid colorings (exhaustive method only).
    pub valid_colorings: Option<u64>,
    /// Valid colorings with `c(x) = c(y)` (exhaustive method only).
    pub valid_with_equal_ends: Option<u64>,
    pub witness: Option<Coloring>,
    /// A valid coloring with `c(x) = c(y)`, when forcing fails.
    pub counterexample: Option<Coloring>,
}

impl VerificationReport {
    pub fn certified(&self) -> bool {
        self.existence && self.forcing
    }
}

pub fn verify_super_edge(gadget: &Gadget, method: VerifyMethod) -> Result<VerificationReport> {
    verify_super_edge_capped(gadget, method, DEFAULT_COLORING_CAP)
}

/// Checks existence and forcing. The exhaustive method walks all `2^n`
/// colorings and is limited to `cap` vertices; the SAT method asks for a
/// coloring with both ends red and expects none.
pub fn verify_super_edge_capped(
    gadget: &Gadget,
    method: VerifyMethod,
    cap: usize,
) -> Result<VerificationReport> {
    let g = &gadget.graph;
    let mut report = VerificationReport {
        method,
        k: gadget.k,
        num_vertices: g.num_vertices(),
        num_edges: g.num_edges(),
        existence: false,
        forcing: false,
        valid_colorings: None,
        valid_with_equal_ends: None,
        witness: None,
        counterexample: None,
    };
    match method {
        VerifyMethod::Exhaustive => {
            let n = g.num_vertices();
            if n > cap.min(63) {
                return Err(Error::CapExceeded { what: "vertex count", size: n, cap });
            }
            let masks = CycleMasks::new(g, gadget.k);
            let ends = masks.vertex_bit(gadget.x) | masks.vertex_bit(gadget.y);
            let same = |t: u64| t & ends == 0 || t & ends == ends;
            let (valid, equal) = (0..masks.space())
                .into_par_iter()
                .filter(|&t| masks.is_valid(t))
                .map(|t| (1u64, same(t) as u64))
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            report.valid_colorings = Some(valid);
            report.valid_with_equal_ends = Some(equal);
            report.existence = valid > 0;
            report.forcing = equal == 0;
            report.witness = (0..masks.space())
                .into_par_iter()
                .find_first(|&t| masks.is_valid(t))
                .map(|t| masks.decode(t));
            report.counterexample = (0..masks.space())
                .into_par_iter()
                .find_first(|&t| same(t) && masks.is_valid(t))
                .map(|t| masks.decode(t));
        }
        VerifyMethod::Sat => {
            let check = forcing_report(g, gadget.k, gadget.x, gadget.y);
            report.existence = check.colorable;
            report.forcing = check.forces_distinct;
            report.witness = check.witness;
            report.counterexample = check.counterexample;
        }
    }
    Ok(report)
}
