use std::ops::ControlFlow;

use rayon::prelude::*;

use super::{for_each_k_cycle, Color, Coloring, Graph};
use crate::error::{Error, Result};

/// Default vertex cap for [`brute_force_coloring`].
pub const DEFAULT_COLORING_CAP: usize = 22;

/// True iff no `k`-cycle of `graph` is monochromatic under `coloring`.
pub fn is_valid_coloring(graph: &Graph, k: usize, coloring: &Coloring) -> Result<bool> {
    if coloring.len() != graph.num_vertices() {
        return Err(Error::PartialColoring { got: coloring.len(), expected: graph.num_vertices() });
    }
    let flow = for_each_k_cycle(graph, k, |cycle| {
        let first = coloring[cycle[0]];
        if cycle.iter().all(|&v| coloring[v] == first) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(flow.is_continue())
}

/// Vertex sets of all `k`-cycles of a small graph as bitmasks, for exhaustive
/// search over colorings.
///
/// A coloring is an integer `t` in which vertex `i` sits at bit `n - 1 - i`
/// and a set bit means blue. Increasing `t` then walks colorings in
/// lexicographic order of the color vector (red before blue, vertex 0 first).
#[derive(Debug, Clone)]
pub struct CycleMasks {
    n: usize,
    masks: Vec<u64>,
}

impl CycleMasks {
    pub fn new(graph: &Graph, k: usize) -> Self {
        let n = graph.num_vertices();
        assert!(n <= 63, "bitmask colorings support at most 63 vertices");
        let mut masks = Vec::new();
        let _ = for_each_k_cycle(graph, k, |cycle| {
            masks.push(cycle.iter().fold(0u64, |m, &v| m | 1 << (n - 1 - v)));
            ControlFlow::Continue(())
        });
        masks.sort_unstable();
        masks.dedup();
        CycleMasks { n, masks }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_masks(&self) -> usize {
        self.masks.len()
    }

    /// One bitmask per distinct `k`-cycle vertex set, sorted.
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn vertex_bit(&self, v: usize) -> u64 {
        1 << (self.n - 1 - v)
    }

    /// Number of distinct colorings, `2^n`.
    pub fn space(&self) -> u64 {
        1u64 << self.n
    }

    #[inline]
    pub fn is_valid(&self, t: u64) -> bool {
        self.masks.iter().all(|&m| {
            let blue = t & m;
            blue != 0 && blue != m
        })
    }

    pub fn decode(&self, t: u64) -> Coloring {
        Coloring::new(
            (0..self.n)
                .map(|v| if t & self.vertex_bit(v) != 0 { Color::Blue } else { Color::Red })
                .collect(),
        )
    }

    pub fn encode(&self, coloring: &Coloring) -> u64 {
        (0..self.n)
            .filter(|&v| coloring[v] == Color::Blue)
            .fold(0, |t, v| t | self.vertex_bit(v))
    }
}

/// Exhaustive search with the default cap. See [`brute_force_coloring_capped`].
pub fn brute_force_coloring(graph: &Graph, k: usize) -> Result<Option<Coloring>> {
    brute_force_coloring_capped(graph, k, DEFAULT_COLORING_CAP)
}

/// Finds the lexicographically smallest valid coloring with vertex 0 red.
///
/// Fixing vertex 0 loses nothing: flipping every color maps valid colorings
/// to valid colorings. The search runs in parallel but `find_first` keeps the
/// answer independent of the worker count.
pub fn brute_force_coloring_capped(graph: &Graph, k: usize, cap: usize) -> Result<Option<Coloring>> {
    let n = graph.num_vertices();
    if n > cap.min(63) {
        return Err(Error::CapExceeded { what: "vertex count", size: n, cap });
    }
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    let masks = CycleMasks::new(graph, k);
    let half = 1u64 << (n - 1);
    let found = (0..half).into_par_iter().find_first(|&t| masks.is_valid(t));
    Ok(found.map(|t| masks.decode(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_all_red_is_invalid() {
        let g = Graph::complete(3);
        assert!(!is_valid_coloring(&g, 3, &Coloring::uniform(3, Color::Red)).unwrap());
    }

    #[test]
    fn k4_two_and_two_is_valid() {
        let g = Graph::complete(4);
        let c = Coloring::new(vec![Color::Red, Color::Red, Color::Blue, Color::Blue]);
        assert!(is_valid_coloring(&g, 3, &c).unwrap());
        let three = Coloring::new(vec![Color::Red, Color::Red, Color::Red, Color::Blue]);
        assert!(!is_valid_coloring(&g, 3, &three).unwrap());
    }

    #[test]
    fn triangle_free_graph_accepts_anything() {
        let g = Graph::cycle(5);
        assert!(is_valid_coloring(&g, 3, &Coloring::uniform(5, Color::Blue)).unwrap());
    }

    #[test]
    fn partial_coloring_is_an_error() {
        let g = Graph::complete(3);
        assert!(matches!(
            is_valid_coloring(&g, 3, &Coloring::uniform(2, Color::Red)),
            Err(Error::PartialColoring { got: 2, expected: 3 })
        ));
    }

    #[test]
    fn brute_force_examples() {
        let c = brute_force_coloring(&Graph::complete(4), 3).unwrap().unwrap();
        assert_eq!(c.colors, vec![Color::Red, Color::Red, Color::Blue, Color::Blue]);
        assert_eq!(brute_force_coloring(&Graph::complete(6), 3).unwrap(), None);
        let empty = brute_force_coloring(&Graph::new(5), 4).unwrap().unwrap();
        assert_eq!(empty, Coloring::uniform(5, Color::Red));
    }

    #[test]
    fn brute_force_cap() {
        assert!(matches!(
            brute_force_coloring(&Graph::new(23), 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn masks_round_trip() {
        let g = Graph::complete(5);
        let m = CycleMasks::new(&g, 3);
        assert_eq!(m.num_masks(), 10);
        for t in 0..m.space() {
            let c = m.decode(t);
            assert_eq!(m.encode(&c), t);
            assert_eq!(m.is_valid(t), is_valid_coloring(&g, 3, &c).unwrap());
        }
    }
}
