use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::Graph;

/// A simple cycle in canonical form: the smallest vertex first, and of the
/// two traversal directions the one whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes an arbitrary rotation/reflection of a cycle.
    pub fn canonical(vertices: &[usize]) -> Self {
        let k = vertices.len();
        let (start, _) = vertices.iter().enumerate().min_by_key(|(_, v)| **v).expect("non-empty");
        let forward: Vec<usize> = (0..k).map(|i| vertices[(start + i) % k]).collect();
        if k > 2 && forward[k - 1] < forward[1] {
            let mut reversed = vec![forward[0]];
            reversed.extend(forward[1..].iter().rev());
            Cycle { vertices: reversed }
        } else {
            Cycle { vertices: forward }
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when every cyclically consecutive pair is an edge of `graph` and
    /// the vertices are pairwise distinct.
    pub fn is_cycle_of(&self, graph: &Graph) -> bool {
        let k = self.vertices.len();
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        k >= 3
            && sorted.len() == k
            && (0..k).all(|i| graph.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Calls `visit` once per simple `k`-cycle, in canonical form and canonical
/// order, stopping early when `visit` breaks.
///
/// Each search starts at a vertex `v` and only descends into vertices larger
/// than `v`, so `v` is the cycle's minimum. Both traversal directions are
/// found; the one whose second vertex exceeds its last is dropped.
pub fn for_each_k_cycle<F>(graph: &Graph, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k < 3 {
        return ControlFlow::Continue(());
    }
    let n = graph.num_vertices();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(k);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        let flow = extend(graph, k, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    graph: &Graph,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let start = path[0];
    let last = *path.last().expect("path starts non-empty");
    if path.len() == k {
        if path[1] < path[k - 1] && graph.has_edge(last, start) {
            return visit(path);
        }
        return ControlFlow::Continue(());
    }
    let neighbors = graph.neighbors(last);
    let from = neighbors.partition_point(|&w| w <= start);
    for &w in &neighbors[from..] {
        if on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let flow = extend(graph, k, path, on_path, visit);
        on_path[w] = false;
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// All simple cycles of length exactly `k`, each once, in canonical order.
pub fn enumerate_k_cycles(graph: &Graph, k: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let _ = for_each_k_cycle(graph, k, |c| {
        out.push(Cycle { vertices: c.to_vec() });
        ControlFlow::Continue(())
    });
    out
}

pub fn count_k_cycles(graph: &Graph, k: usize) -> usize {
    let mut count = 0;
    let _ = for_each_k_cycle(graph, k, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
