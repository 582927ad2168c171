//! Exhaustive search for small super-edge gadgets.
//!
//! Graphs are generated one vertex count at a time: every graph on `n`
//! vertices is some graph on `n − 1` vertices plus a new vertex, so
//! extending each canonical `(n − 1)`-vertex graph by every neighbor set and
//! keeping the distinct canonical codes yields each isomorphism class once.
//! Each candidate is then checked by walking all of its colorings.

pub mod canon;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadgets::{verify_super_edge, Gadget, VerifyMethod};
use crate::graph::{CycleMasks, Graph};
use canon::{canonical_code, decode, Adjacency, MAX_CANON_VERTICES};

/// Non-isomorphic graph counts for `n = 0..=10`.
pub const GRAPH_COUNTS: [u64; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Vertices,
    Edges,
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertices" => Ok(Objective::Vertices),
            "edges" => Ok(Objective::Edges),
            _ => Err(Error::InvalidArgument(format!("unknown objective {s:?}"))),
        }
    }
}

/// Where an interrupted search stops: the vertex count being checked, how
/// many of its canonical graphs are done, and the best gadget so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResumeToken {
    pub vertices: usize,
    pub offset: usize,
    pub incumbent: Option<(usize, u64)>,
}

impl fmt::Display for ResumeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (wn, wc) = self.incumbent.unwrap_or((0, 0));
        write!(f, "v1-{}-{}-{}-{:x}", self.vertices, self.offset, wn, wc)
    }
}

impl FromStr for ResumeToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed resume token {s:?}"));
        let parts: Vec<&str> = s.split('-').collect();
        if parts.len() != 5 || parts[0] != "v1" {
            return Err(bad());
        }
        let vertices = parts[1].parse().map_err(|_| bad())?;
        let offset = parts[2].parse().map_err(|_| bad())?;
        let wn: usize = parts[3].parse().map_err(|_| bad())?;
        let wc = u64::from_str_radix(parts[4], 16).map_err(|_| bad())?;
        Ok(ResumeToken { vertices, offset, incumbent: (wn > 0).then_some((wn, wc)) })
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub k: usize,
    pub max_vertices: usize,
    pub objective: Objective,
    /// Skip graphs with a vertex on no `k`-cycle.
    pub prune: bool,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub time_limit: Option<Duration>,
    /// Stop after checking this many canonical graphs.
    pub max_graphs: Option<u64>,
    pub resume: Option<ResumeToken>,
}

impl SearchOptions {
    pub fn new(k: usize, max_vertices: usize) -> Self {
        SearchOptions {
            k,
            max_vertices,
            objective: Objective::Vertices,
            prune: true,
            workers: None,
            time_limit: None,
            max_graphs: None,
            resume: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub vertices: usize,
    pub canonical_graphs: u64,
    /// Connected graphs with a `k`-cycle that survived pruning.
    pub candidates: u64,
    pub gadgets: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Budget {
    pub max_vertices: usize,
    pub time_limit_ms: Option<u128>,
    pub max_graphs: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub k: usize,
    pub objective: Objective,
    pub budget: Budget,
    pub prune: bool,
    pub levels: Vec<LevelStats>,
    pub graphs_examined: u64,
    pub elapsed_ms: u128,
    /// Every level up to the budget (or up to the winner) was finished.
    pub complete: bool,
    pub winner: Option<Gadget>,
    /// All edges of the winner that work as the designated pair.
    pub forcing_edges: Vec<[usize; 2]>,
    /// The winner passed the exhaustive verifier on its own.
    pub winner_verified: bool,
    pub assumptions: Vec<String>,
    pub resume_token: Option<String>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub vertices: usize,
    pub canonical_graphs: u64,
    pub checked: u64,
    pub gadgets: u64,
}

/// All canonical codes of graphs on `n` vertices, sorted.
pub fn canonical_graphs(n: usize) -> Result<Vec<u64>> {
    let mut level = vec![0u64];
    for m in 2..=n {
        level = extend_level(m, &level)?;
    }
    Ok(level)
}

fn extend_level(n: usize, parents: &[u64]) -> Result<Vec<u64>> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::CapExceeded { what: "vertex count", size: n, cap: MAX_CANON_VERTICES });
    }
    let set = parents
        .par_iter()
        .fold(HashSet::new, |mut set, &code| {
            let mut adj = decode(n - 1, code);
            adj.push(0);
            for nb in 0u16..(1 << (n - 1)) {
                adj[n - 1] = nb;
                for v in 0..n - 1 {
                    if nb >> v & 1 == 1 {
                        adj[v] |= 1 << (n - 1);
                    } else {
                        adj[v] &= !(1 << (n - 1));
                    }
                }
                set.insert(canonical_code(&adj));
            }
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut codes: Vec<u64> = set.into_iter().collect();
    codes.sort_unstable();
    Ok(codes)
}

/// Rank key, vertex count, canonical code and forcing edges of the best gadget so far.
type Incumbent = ((usize, usize, u64), usize, u64, Vec<(usize, usize)>);

fn adjacency_graph(adj: &Adjacency) -> Graph {
    let n = adj.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

enum Verdict {
    Skipped,
    Candidate,
    Gadget(Vec<(usize, usize)>),
}

/// Edges usable as the designated pair: some valid coloring exists and none
/// of them makes the pair monochromatic.
fn classify(n: usize, code: u64, k: usize, prune: bool) -> Verdict {
    let adj = decode(n, code);
    let graph = adjacency_graph(&adj);
    if !graph.is_connected() {
        return Verdict::Skipped;
    }
    let masks = CycleMasks::new(&graph, k);
    if masks.num_masks() == 0 {
        return Verdict::Skipped;
    }
    let all = (1u64 << n) - 1;
    if prune && masks.masks().iter().fold(0, |acc, &m| acc | m) != all {
        return Verdict::Skipped;
    }
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    let bits: Vec<(u64, u64)> = edges.iter().map(|&(u, v)| (masks.vertex_bit(u), masks.vertex_bit(v))).collect();
    // Flipping all colors preserves validity and monochromatic pairs, so
    // vertex 0 stays red.
    let mut never_mono = (1u64 << edges.len()) - 1;
    let mut any_valid = false;
    for t in 0..1u64 << (n - 1) {
        if !masks.is_valid(t) {
            continue;
        }
        any_valid = true;
        for (i, &(bu, bv)) in bits.iter().enumerate() {
            if (t & bu == 0) == (t & bv == 0) {
                never_mono &= !(1 << i);
            }
        }
        if never_mono == 0 {
            break;
        }
    }
    if !any_valid || never_mono == 0 {
        return Verdict::Candidate;
    }
    Verdict::Gadget((0..edges.len()).filter(|&i| never_mono >> i & 1 == 1).map(|i| edges[i]).collect())
}

fn rank(objective: Objective, n: usize, edges: usize, code: u64) -> (usize, usize, u64) {
    match objective {
        Objective::Vertices => (n, edges, code),
        Objective::Edges => (edges, n, code),
    }
}

fn assumptions(k: usize, prune: bool) -> Vec<String> {
    let mut notes = vec![
        format!(
            "candidates are connected graphs with at least one {k}-cycle; a disconnected gadget contains a smaller connected one"
        ),
        "the designated pair must be an edge of the gadget".to_string(),
        "ties are broken by edge count, then by the smaller canonical adjacency code".to_string(),
    ];
    if prune {
        notes.push(format!(
            "graphs with a vertex on no {k}-cycle are skipped; deleting that vertex leaves a smaller gadget"
        ));
    }
    notes
}

pub fn search_min_gadget(options: &SearchOptions) -> Result<SearchReport> {
    search_min_gadget_with_progress(options, |_| {})
}

/// Finds the best gadget on at most `max_vertices` vertices, or certifies
/// that none exists by reporting how many canonical graphs were checked.
pub fn search_min_gadget_with_progress<F>(options: &SearchOptions, progress: F) -> Result<SearchReport>
where
    F: FnMut(&Progress) + Send,
{
    if options.k < 3 {
        return Err(Error::InvalidArgument(format!("cycle length must be at least 3, got {}", options.k)));
    }
    if options.max_vertices > MAX_CANON_VERTICES {
        return Err(Error::CapExceeded {
            what: "max vertices",
            size: options.max_vertices,
            cap: MAX_CANON_VERTICES,
        });
    }
    match options.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            pool.install(|| run(options, progress))
        }
        None => run(options, progress),
    }
}

fn run<F: FnMut(&Progress)>(options: &SearchOptions, mut progress: F) -> Result<SearchReport> {
    let start = Instant::now();
    let k = options.k;
    let mut levels = Vec::new();
    let mut examined = 0u64;
    let mut best: Option<Incumbent> = None;
    let mut resume_token = None;
    if let Some(ResumeToken { incumbent: Some((wn, wc)), .. }) = options.resume {
        if let Verdict::Gadget(forcing) = classify(wn, wc, k, false) {
            let edges = decode(wn, wc).iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
            best = Some((rank(options.objective, wn, edges, wc), wn, wc, forcing));
        }
    }
    let first_level = options.resume.map_or(1, |r| r.vertices);
    let mut level: Vec<u64> = Vec::new();
    'levels: for n in 1..=options.max_vertices {
        level = if n == 1 { vec![0] } else { extend_level(n, &level)? };
        if n < first_level {
            continue;
        }
        if options.objective == Objective::Vertices && best.is_some() {
            break;
        }
        let offset = match options.resume {
            Some(r) if r.vertices == n => r.offset.min(level.len()),
            _ => 0,
        };
        let mut stats = LevelStats { vertices: n, canonical_graphs: level.len() as u64, candidates: 0, gadgets: 0 };
        let mut done = offset;
        while done < level.len() {
            let over_time = options.time_limit.is_some_and(|t| start.elapsed() >= t);
            let over_count = options.max_graphs.is_some_and(|m| examined >= m);
            if over_time || over_count {
                resume_token = Some(ResumeToken {
                    vertices: n,
                    offset: done,
                    incumbent: best.as_ref().map(|b| (b.1, b.2)),
                });
                levels.push(stats);
                break 'levels;
            }
            let room = options.max_graphs.map_or(CHUNK as u64, |m| (m - examined).min(CHUNK as u64));
            let end = (done + room as usize).min(level.len());
            let verdicts: Vec<(u64, Verdict)> = level[done..end]
                .par_iter()
                .map(|&code| (code, classify(n, code, k, options.prune)))
                .collect();
            for (code, verdict) in verdicts {
                match verdict {
                    Verdict::Skipped => {}
                    Verdict::Candidate => stats.candidates += 1,
                    Verdict::Gadget(forcing) => {
                        stats.candidates += 1;
                        stats.gadgets += 1;
                        let edges = decode(n, code).iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
                        let key = rank(options.objective, n, edges, code);
                        if best.as_ref().is_none_or(|b| key < b.0) {
                            best = Some((key, n, code, forcing));
                        }
                    }
                }
            }
            examined += (end - done) as u64;
            done = end;
            progress(&Progress {
                vertices: n,
                canonical_graphs: level.len() as u64,
                checked: done as u64,
                gadgets: stats.gadgets,
            });
        }
        levels.push(stats);
    }

    let mut report = SearchReport {
        k,
        objective: options.objective,
        budget: Budget {
            max_vertices: options.max_vertices,
            time_limit_ms: options.time_limit.map(|t| t.as_millis()),
            max_graphs: options.max_graphs,
        },
        prune: options.prune,
        levels,
        graphs_examined: examined,
        elapsed_ms: 0,
        complete: resume_token.is_none(),
        winner: None,
        forcing_edges: Vec::new(),
        winner_verified: false,
        assumptions: assumptions(k, options.prune),
        resume_token: resume_token.map(|t| t.to_string()),
    };
    if let Some((_, n, code, forcing)) = best {
        let graph = adjacency_graph(&decode(n, code));
        let (x, y) = forcing[0];
        let gadget = Gadget::new(graph, x, y, k)?;
        report.winner_verified = verify_super_edge(&gadget, VerifyMethod::Exhaustive)?.certified();
        report.forcing_edges = forcing.iter().map(|&(u, v)| [u, v]).collect();
        report.winner = Some(gadget);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph_counts() {
        for n in 1..=6 {
            assert_eq!(canonical_graphs(n).unwrap().len() as u64, GRAPH_COUNTS[n], "n = {n}");
        }
    }

    #[test]
    fn triangle_search_finds_nothing_small() {
        let report = search_min_gadget(&SearchOptions::new(3, 6)).unwrap();
        assert!(report.complete);
        assert!(report.winner.is_none());
        assert_eq!(report.graphs_examined, GRAPH_COUNTS[1..=6].iter().sum::<u64>());
    }

    #[test]
    fn resume_token_round_trip() {
        let t = ResumeToken { vertices: 8, offset: 4096, incumbent: Some((9, 0xbeef)) };
        assert_eq!(t.to_string().parse::<ResumeToken>().unwrap(), t);
        let none = ResumeToken { vertices: 3, offset: 0, incumbent: None };
        assert_eq!(none.to_string().parse::<ResumeToken>().unwrap(), none);
        assert!("v2-1-2-3-4".parse::<ResumeToken>().is_err());
    }

    #[test]
    fn budget_stops_with_token() {
        let mut opts = SearchOptions::new(3, 7);
        opts.max_graphs = Some(100);
        let report = search_min_gadget(&opts).unwrap();
        assert!(!report.complete);
        let token: ResumeToken = report.resume_token.unwrap().parse().unwrap();
        assert_eq!((token.vertices, token.offset), (6, 48));
        assert_eq!(report.graphs_examined, 100);
    }
}
