//! Canonical labeling of small graphs by individualization and refinement.
//!
//! A graph on `n ≤ 11` vertices is a slice of neighbor bitmasks. Its code
//! packs the upper triangle of the adjacency matrix row by row, pair
//! `(0, 1)` in the most significant used bit, so comparing codes compares
//! matrices lexicographically. The canonical code is the largest code over
//! the leaves of the search tree; leaves reached by swapping twin vertices
//! are skipped because the swap is an automorphism.

pub const MAX_CANON_VERTICES: usize = 11;

pub type Adjacency = Vec<u16>;

pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit position of pair `i < j`, counted from the most significant end.
fn pair_shift(n: usize, i: usize, j: usize) -> usize {
    let before = i * (2 * n - i - 1) / 2 + (j - i - 1);
    num_pairs(n) - 1 - before
}

pub fn encode(adj: &[u16]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if adj[i] >> j & 1 == 1 {
                code |= 1 << pair_shift(n, i, j);
            }
        }
    }
    code
}

pub fn decode(n: usize, code: u64) -> Adjacency {
    let mut adj = vec![0u16; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_shift(n, i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn relabel_code(adj: &[u16], label: &[usize]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for u in 0..n {
        let mut rest = adj[u] & !((2u16 << u) - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (a, b) = if label[u] < label[v] { (label[u], label[v]) } else { (label[v], label[u]) };
            code |= 1 << pair_shift(n, a, b);
        }
    }
    code
}

/// Refines an ordered partition (cell index per vertex) until equitable.
/// New cells are ranked by (old cell, neighbor counts per old cell), which
/// does not depend on vertex names.
fn refine(adj: &[u16], cell: &mut [usize]) {
    let n = adj.len();
    let mut num_cells = cell.iter().max().map_or(0, |&c| c + 1);
    loop {
        let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut sig = vec![0usize; num_cells + 1];
                sig[0] = cell[v];
                let mut nb = adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    sig[1 + cell[u]] += 1;
                }
                (sig, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            cell[sigs[i].1] = rank;
        }
        let refined = if n == 0 { 0 } else { rank + 1 };
        if refined == num_cells {
            return;
        }
        num_cells = refined;
    }
}

fn twins(adj: &[u16], u: usize, v: usize) -> bool {
    let mask = !(1u16 << u | 1u16 << v);
    adj[u] & mask == adj[v] & mask
}

fn search(adj: &[u16], cell: &[usize], best: &mut (u64, Vec<usize>)) {
    let n = adj.len();
    let mut sizes = vec![0usize; n];
    for &c in cell {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = relabel_code(adj, cell);
        if code > best.0 || best.1.is_empty() {
            *best = (code, cell.to_vec());
        }
        return;
    };
    let members: Vec<usize> = (0..n).filter(|&v| cell[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<usize> =
            cell.iter().map(|&c| if c > target { c + 1 } else { c }).collect();
        for &u in &members {
            if u != v {
                next[u] = target + 1;
            }
        }
        refine(adj, &mut next);
        search(adj, &next, best);
    }
}

/// Canonical code and the labeling that produces it (`label[v]` is the new
/// name of vertex `v`).
pub fn canonical_form(adj: &[u16]) -> (u64, Vec<usize>) {
    let n = adj.len();
    assert!(n <= MAX_CANON_VERTICES, "canonical labeling supports at most {MAX_CANON_VERTICES} vertices");
    let mut cell = vec![0usize; n];
    refine(adj, &mut cell);
    let mut best = (0u64, Vec::new());
    search(adj, &cell, &mut best);
    if n == 0 {
        best.1 = Vec::new();
    }
    best
}

pub fn canonical_code(adj: &[u16]) -> u64 {
    canonical_form(adj).0
}
