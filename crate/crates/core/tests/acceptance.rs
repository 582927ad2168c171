//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Failing criteria are reported, not hidden; the process exits non-zero if
//! any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use monocycle::decider::check_forcing;
use monocycle::formula::{brute_force_nae, Clause, Formula, Literal};
use monocycle::gadgets::{k4_loop, tree_gadget, tree_gadget_layout, verify_super_edge, TreeConfig, VerifyMethod};
use monocycle::graph::{brute_force_coloring, is_valid_coloring, Cycle};
use monocycle::reduction::{predicted_sizes, reduce, reduce_necklace, Variant};
use monocycle::search::canon::canonical_code;
use monocycle::search::{canonical_graphs, search_min_gadget, SearchOptions, GRAPH_COUNTS};
use monocycle::{decide_col, Color, Graph};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < budget, format!("{what} took {took:.2?}, budget {budget:?}"))
}

fn adjacency(g: &Graph) -> Vec<u16> {
    (0..g.num_vertices()).map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u)).collect()
}

fn random_formula(rng: &mut StdRng, n: u32, m: usize, width: usize) -> Formula {
    let clauses = (0..m)
        .map(|_| {
            Clause::new(
                (0..width)
                    .map(|_| {
                        let v = rng.gen_range(1..=n);
                        if rng.gen() {
                            Literal::neg(v)
                        } else {
                            Literal::pos(v)
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    Formula::new(n, clauses).unwrap()
}

fn loop_gadget() -> Outcome {
    let start = Instant::now();
    let g = k4_loop(5).unwrap();
    let (v, e) = (g.graph.num_vertices(), g.graph.num_edges());
    ensure((v, e) == (10, 25), format!("loop(5) has {v} vertices and {e} edges"))?;
    let r = verify_super_edge(&g, VerifyMethod::Exhaustive).unwrap();
    ensure(r.certified(), "loop(5) not certified")?;
    within(start, Duration::from_secs(1), "loop(5)")?;
    Ok(format!("10 vertices, 25 edges, certified over 2^10 colorings in {:.2?}", start.elapsed()))
}

fn loop_sweep() -> Outcome {
    let start = Instant::now();
    for l in [5, 7, 9] {
        let r = verify_super_edge(&k4_loop(l).unwrap(), VerifyMethod::Exhaustive).unwrap();
        ensure(r.certified(), format!("loop({l}) not certified"))?;
    }
    let l3 = k4_loop(3).unwrap();
    let r = verify_super_edge(&l3, VerifyMethod::Exhaustive).unwrap();
    ensure(!r.existence, "loop(3) has a valid coloring")?;
    let g = &l3.graph;
    let complete = g.num_vertices() == 6 && g.num_edges() == 15 && (0..6).all(|v| g.degree(v) == 5);
    let iso = canonical_code(&adjacency(g)) == canonical_code(&adjacency(&Graph::complete(6)));
    ensure(complete && iso, "loop(3) is not isomorphic to K6")?;
    for l in [4, 6] {
        let r = verify_super_edge(&k4_loop(l).unwrap(), VerifyMethod::Exhaustive).unwrap();
        ensure(r.existence && !r.forcing, format!("loop({l}) should exist without forcing"))?;
    }
    within(start, Duration::from_secs(10), "loop sweep")?;
    Ok(format!("5/7/9 certified, 3 = K6 uncolorable, 4/6 not forcing ({:.2?})", start.elapsed()))
}

/// Test-side 4-cycle oracle: every 4-subset of `K6` in its three cyclic orders.
fn k6_four_cycles() -> Vec<[usize; 4]> {
    let mut cycles = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                for d in c + 1..6 {
                    cycles.extend([[a, b, c, d], [a, b, d, c], [a, c, b, d]]);
                }
            }
        }
    }
    cycles
}

fn k6_pigeonhole() -> Outcome {
    // Top pair (0, 1), bottom pairs (2, 3) and (4, 5); bit set = blue.
    let cycles = k6_four_cycles();
    assert_eq!(cycles.len(), 45);
    let mut survivors = 0;
    for t in 0u32..64 {
        let blue = |v: usize| t >> v & 1 == 1;
        if blue(0) || blue(1) {
            continue;
        }
        let mono = cycles.iter().any(|c| c.iter().all(|&v| blue(v) == blue(c[0])));
        if mono {
            continue;
        }
        survivors += 1;
        let blue_pairs = [(2, 3), (4, 5)].iter().filter(|&&(a, b)| blue(a) && blue(b)).count();
        ensure(blue_pairs == 1, format!("coloring {t:06b} has {blue_pairs} all-blue bottom pairs"))?;
    }
    ensure(survivors > 0, "no coloring survives")?;
    Ok(format!("{survivors} surviving colorings, each with exactly one all-blue bottom pair"))
}

fn tree_k4() -> Outcome {
    let start = Instant::now();
    let g = tree_gadget(4).unwrap();
    let (v, e) = (g.graph.num_vertices(), g.graph.num_edges());
    ensure((v, e) == (62, 243), format!("{v} vertices, {e} edges"))?;
    let c = decide_col(&g.graph, 4).ok_or("no valid coloring")?;
    ensure(is_valid_coloring(&g.graph, 4, &c).unwrap(), "decider model is invalid")?;
    ensure(check_forcing(&g.graph, 4, g.x, g.y), "root pair not forced")?;
    within(start, Duration::from_secs(60), "k = 4 tree")?;
    Ok(format!("62 vertices, 243 edges, colorable and forcing ({:.2?})", start.elapsed()))
}

fn tree_heights() -> Outcome {
    let start = Instant::now();
    let report = |h: usize| {
        let layout = tree_gadget_layout(&TreeConfig::plain(h), 4).unwrap();
        verify_super_edge(&layout.gadget, VerifyMethod::Sat).unwrap()
    };
    let (h1, h2, h3) = (report(1), report(2), report(3));
    let summary = format!(
        "h1 exists={} forces={}; h2 exists={} forces={}; h3 exists={} forces={}",
        h1.existence, h1.forcing, h2.existence, h2.forcing, h3.existence, h3.forcing
    );
    ensure(!h1.forcing, format!("height 1 forces ({summary})"))?;
    ensure(!h2.existence, format!("height 2 has a valid coloring ({summary})"))?;
    ensure(!h3.forcing, format!("height 3 forces ({summary})"))?;
    within(start, Duration::from_secs(60), "height ablation")?;
    Ok(summary)
}

fn size_formulas() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut flagged = 0;
    for _ in 0..20 {
        let n: u32 = rng.gen_range(2..=8);
        let m: usize = rng.gen_range(0..=6);
        let (nn, mm) = (n as usize, m);
        let f3 = random_formula(&mut rng, n, m, 3);
        let basic = reduce(&f3, 3).unwrap().graph;
        ensure(
            (basic.num_edges(), basic.num_vertices()) == (78 * mm + 25 * nn, 27 * mm + 10 * nn),
            format!("k=3 basic n={n} m={m}: {} edges {} vertices", basic.num_edges(), basic.num_vertices()),
        )?;
        let necklace = reduce_necklace(&f3).unwrap().graph;
        ensure(
            (necklace.num_edges(), necklace.num_vertices()) == (78 * mm + 10 * nn + 5, 27 * mm + 4 * nn + 2),
            format!("necklace n={n} m={m}: {} edges {} vertices", necklace.num_edges(), necklace.num_vertices()),
        )?;
        let f4 = random_formula(&mut rng, n, m, 4);
        let g4 = reduce(&f4, 4).unwrap().graph;
        ensure(
            (g4.num_edges(), g4.num_vertices()) == (976 * mm + 243 * nn, 244 * mm + 62 * nn),
            format!("k=4 n={n} m={m}: {} edges {} vertices", g4.num_edges(), g4.num_vertices()),
        )?;
        let p = predicted_sizes(3, nn, mm, Variant::Basic).unwrap();
        ensure(p.edges_match(), "k=3 published edge formula disagrees")?;
        if !p.vertices_match() {
            flagged += 1;
        }
    }
    Ok(format!(
        "20 (n,m) pairs exact; published k=3 vertex count 24m+10n differs from built 27m+10n in {flagged}/20 pairs (reported)"
    ))
}

/// Multisets of `size` literals over `n` variables, as DIMACS values.
fn literal_multisets(n: u32, size: usize) -> Vec<Vec<i64>> {
    let universe: Vec<i64> = (1..=n as i64).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(universe: &[i64], from: usize, size: usize, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in from..universe.len() {
            current.push(universe[i]);
            rec(universe, i, size, current, out);
            current.pop();
        }
    }
    rec(&universe, 0, size, &mut current, &mut out);
    out
}

fn roundtrip_k3() -> Outcome {
    let start = Instant::now();
    let (mut formulas, mut unsat, mut necklace_checked) = (0, 0, 0);
    for n in 1..=3u32 {
        let clauses = literal_multisets(n, 3);
        let mut sets: Vec<Vec<&Vec<i64>>> = vec![vec![]];
        sets.extend(clauses.iter().map(|c| vec![c]));
        for i in 0..clauses.len() {
            for j in i..clauses.len() {
                sets.push(vec![&clauses[i], &clauses[j]]);
            }
        }
        for set in sets {
            let refs: Vec<&[i64]> = set.iter().map(|c| c.as_slice()).collect();
            let f = Formula::from_dimacs_clauses(n, &refs).unwrap();
            let nae = brute_force_nae(&f).unwrap().is_some();
            unsat += !nae as usize;
            formulas += 1;
            let basic = decide_col(&reduce(&f, 3).unwrap().graph, 3).is_some();
            ensure(basic == nae, format!("basic disagrees on {:?}", refs))?;
            // A necklace needs at least two variables.
            if n >= 2 {
                let neck = decide_col(&reduce_necklace(&f).unwrap().graph, 3).is_some();
                ensure(neck == nae, format!("necklace disagrees on {:?}", refs))?;
                necklace_checked += 1;
            }
        }
    }
    Ok(format!(
        "{formulas} formulas ({unsat} NAE-unsatisfiable), basic 100%, necklace 100% on {necklace_checked} with n >= 2 ({:.1?})",
        start.elapsed()
    ))
}

fn roundtrip_k4() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(4);
    let mut unsat = 0;
    for _ in 0..50 {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=2);
        let f = random_formula(&mut rng, n, m, 4);
        let nae = brute_force_nae(&f).unwrap().is_some();
        unsat += !nae as usize;
        let out = reduce(&f, 4).unwrap();
        let coloring = decide_col(&out.graph, 4);
        ensure(coloring.is_some() == nae, format!("disagreement on\n{}", f.to_dimacs()))?;
    }
    within(start, Duration::from_secs(1800), "k = 4 round trip")?;
    Ok(format!("50/50 agree ({unsat} NAE-unsatisfiable) in {:.1?}", start.elapsed()))
}

fn minimality() -> Outcome {
    let start = Instant::now();
    let r7 = search_min_gadget(&SearchOptions::new(3, 7)).unwrap();
    let counts: Vec<u64> = r7.levels.iter().map(|l| l.canonical_graphs).collect();
    ensure(counts == GRAPH_COUNTS[1..=7], format!("canonical counts {counts:?}"))?;
    let describe = |r: &monocycle::search::SearchReport| {
        r.winner.as_ref().map_or("none".to_string(), |g| {
            format!("{}-vertex {}-edge gadget (verified {})", g.graph.num_vertices(), g.graph.num_edges(), r.winner_verified)
        })
    };
    // The vertex objective stops at the first level with a gadget, so the
    // larger enumerations are counted on their own.
    for n in [8, 9] {
        let found = canonical_graphs(n).unwrap().len() as u64;
        ensure(found == GRAPH_COUNTS[n], format!("n={n}: {found} canonical graphs"))?;
    }
    let r8 = search_min_gadget(&SearchOptions::new(3, 8)).unwrap();
    let r9 = search_min_gadget(&SearchOptions::new(3, 9)).unwrap();
    let summary = format!(
        "counts 1..9 ok; max=7 -> {}; max=8 -> {}; max=9 -> {} ({:.1?})",
        describe(&r7),
        describe(&r8),
        describe(&r9),
        start.elapsed()
    );
    ensure(r7.winner.is_none(), format!("max=7 found a gadget: {summary}"))?;
    ensure(r8.winner.is_none(), format!("max=8 found a gadget: {summary}"))?;
    ensure(
        r9.winner.as_ref().is_some_and(|g| g.graph.num_vertices() == 9),
        format!("max=9 did not return a 9-vertex gadget: {summary}"),
    )?;
    Ok(summary)
}

fn general_k() -> Outcome {
    let mut notes = Vec::new();
    for k in [5, 6] {
        let start = Instant::now();
        let config = TreeConfig::for_k(k).unwrap();
        let layout = tree_gadget_layout(&config, k).unwrap();
        let g = &layout.gadget;
        ensure(check_forcing(&g.graph, k, g.x, g.y), format!("k={k}: root pair not forced"))?;
        let c = decide_col(&g.graph, k).ok_or(format!("k={k}: no valid coloring"))?;
        ensure(is_valid_coloring(&g.graph, k, &c).unwrap(), format!("k={k}: invalid model"))?;
        ensure(c[g.x] != c[g.y], format!("k={k}: model joins the root pair"))?;
        // The donut along the path whose nodes keep the root's color.
        let donut = layout.donut_cycle(0);
        ensure(donut.len() == k, format!("k={k}: donut has length {}", donut.len()))?;
        ensure(Cycle { vertices: donut }.is_cycle_of(&g.graph), format!("k={k}: donut is not a cycle"))?;
        let p = predicted_sizes(k, 1, 1, Variant::Basic).unwrap();
        notes.push(format!(
            "k={k} ok in {:.2?}, size formula for n=m=1: published {}E/{}V vs built {}E/{}V{}",
            start.elapsed(),
            p.edges_paper,
            p.vertices_paper,
            p.edges_derived,
            p.vertices_derived,
            if p.mismatch() { " (mismatch reported)" } else { "" }
        ));
    }
    Ok(notes.join("; "))
}

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.95);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn solver_cross_check() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let mut colorable = 0;
    for i in 0..200 {
        let n = rng.gen_range(1..=14);
        let k = [3, 4, 5][i % 3];
        let g = random_graph(&mut rng, n);
        let sat = decide_col(&g, k);
        let brute = brute_force_coloring(&g, k).unwrap();
        ensure(sat.is_some() == brute.is_some(), format!("graph {i} (n={n}, k={k}) disagrees"))?;
        if let Some(c) = &sat {
            ensure(is_valid_coloring(&g, k, c).unwrap(), format!("graph {i}: invalid model"))?;
            ensure(c[0] == Color::Red, format!("graph {i}: vertex 0 not red"))?;
            colorable += 1;
        }
    }
    Ok(format!("200/200 agree ({colorable} colorable, {} not)", 200 - colorable))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("loop(5) super-edge", loop_gadget),
        ("odd/even loop sweep", loop_sweep),
        ("K6 pigeonhole", k6_pigeonhole),
        ("k=4 tree gadget", tree_k4),
        ("tree height ablation", tree_heights),
        ("reduction size formulas", size_formulas),
        ("k=3 round trip, exhaustive", roundtrip_k3),
        ("k=4 round trip, random", roundtrip_k4),
        ("gadget minimality search", minimality),
        ("k=5,6 tree gadgets", general_k),
        ("solver vs brute force", solver_cross_check),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    panic::set_hook(Box::new(|_| {}));
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
