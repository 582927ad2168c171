use std::collections::HashSet;

use proptest::prelude::*;

use monocycle::decider::{dpll_solve, encode_nae_cycles};
use monocycle::formula::{brute_force_nae, eval_nae, pad_to_width, parse_dimacs};
use monocycle::graph::{brute_force_coloring, count_k_cycles, enumerate_k_cycles, is_valid_coloring};
use monocycle::search::canon::canonical_code;
use monocycle::{decide_col, reduce, Assignment, Clause, Color, Coloring, Formula, Graph, Literal};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn coloring_of(n: usize, t: u64) -> Coloring {
    Coloring::new((0..n).map(|v| if t >> v & 1 == 1 { Color::Blue } else { Color::Red }).collect())
}

/// Every `k`-cycle as a set of vertex sequences: fix the smallest vertex
/// first, try every ordering of the rest, drop reflections.
fn oracle_cycles(g: &Graph, k: usize) -> HashSet<Vec<usize>> {
    fn permute(rest: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
        if at == rest.len() {
            out.push(rest.clone());
            return;
        }
        for i in at..rest.len() {
            rest.swap(at, i);
            permute(rest, at + 1, out);
            rest.swap(at, i);
        }
    }
    let n = g.num_vertices();
    let mut found = HashSet::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut rest = vs[1..].to_vec();
        let mut orders = Vec::new();
        permute(&mut rest, 0, &mut orders);
        for order in orders {
            if order[0] > order[order.len() - 1] {
                continue;
            }
            let mut cycle = vec![vs[0]];
            cycle.extend(order);
            if (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k])) {
                found.insert(cycle);
            }
        }
    }
    found
}

fn oracle_valid(cycles: &HashSet<Vec<usize>>, c: &Coloring) -> bool {
    cycles.iter().all(|cy| cy.iter().any(|&v| c[v] != c[cy[0]]))
}

fn formula_strategy(max_vars: u32, min_width: usize, max_width: usize) -> impl Strategy<Value = Formula> {
    (1..=max_vars).prop_flat_map(move |n| {
        let lit = (1..=n, any::<bool>()).prop_map(|(v, neg)| if neg { Literal::neg(v) } else { Literal::pos(v) });
        let clause = prop::collection::vec(lit, min_width..=max_width).prop_map(Clause::new);
        prop::collection::vec(clause, 0..5).prop_map(move |clauses| Formula::new(n, clauses).unwrap())
    })
}

/// All assignments in lexicographic order, false before true, `x1` first.
fn all_assignments(n: u32) -> impl Iterator<Item = Assignment> {
    (0u32..1 << n).map(move |t| Assignment::new((0..n).map(|i| t >> (n - 1 - i) & 1 == 1).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flipping_colors_keeps_validity(g in graph_strategy(9), k in 3usize..=5, t in any::<u64>()) {
        let c = coloring_of(g.num_vertices(), t);
        prop_assert_eq!(is_valid_coloring(&g, k, &c).unwrap(), is_valid_coloring(&g, k, &c.flipped()).unwrap());
    }

    #[test]
    fn cycles_match_permutation_oracle(g in graph_strategy(7), k in 3usize..=6) {
        let expected = oracle_cycles(&g, k);
        let found: HashSet<Vec<usize>> = enumerate_k_cycles(&g, k).into_iter().map(|c| c.vertices).collect();
        prop_assert_eq!(count_k_cycles(&g, k), expected.len());
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn brute_force_matches_full_enumeration(g in graph_strategy(9), k in 3usize..=5) {
        let n = g.num_vertices();
        let cycles = oracle_cycles(&g, k);
        let exists = (0u64..1 << n).any(|t| oracle_valid(&cycles, &coloring_of(n, t)));
        let found = brute_force_coloring(&g, k).unwrap();
        prop_assert_eq!(found.is_some(), exists);
        if let Some(c) = found {
            prop_assert!(oracle_valid(&cycles, &c));
            prop_assert_eq!(c[0], Color::Red);
        }
    }

    #[test]
    fn decider_matches_brute_force(g in graph_strategy(12), k in 3usize..=5) {
        let sat = decide_col(&g, k);
        prop_assert_eq!(sat.is_some(), brute_force_coloring(&g, k).unwrap().is_some());
        if let Some(c) = sat {
            prop_assert!(is_valid_coloring(&g, k, &c).unwrap());
        }
    }

    #[test]
    fn more_assumptions_never_help(g in graph_strategy(10), k in 3usize..=4, picks in prop::collection::vec((0usize..10, any::<bool>()), 0..6)) {
        let n = g.num_vertices();
        let enc = encode_nae_cycles(&g, k);
        let mut assumptions: Vec<(usize, Color)> = Vec::new();
        let mut was_sat = true;
        for (v, blue) in picks {
            let v = v % n;
            let color = if blue { Color::Blue } else { Color::Red };
            if assumptions.iter().any(|&(w, _)| w == v) {
                continue;
            }
            assumptions.push((v, color));
            let r = dpll_solve(&enc, &assumptions).unwrap();
            if let Some(m) = &r.model {
                prop_assert!(was_sat, "satisfiable after an unsatisfiable prefix");
                prop_assert!(assumptions.iter().all(|&(w, c)| m[w] == c));
                prop_assert!(is_valid_coloring(&g, k, m).unwrap());
            }
            was_sat = r.is_sat();
        }
    }

    #[test]
    fn padding_keeps_nae_models(f in formula_strategy(6, 2, 4), k in 4usize..=6) {
        let padded = pad_to_width(&f, k).unwrap();
        prop_assert!(padded.clauses.iter().all(|c| c.len() == k));
        for a in all_assignments(f.num_vars) {
            prop_assert_eq!(eval_nae(&f, &a).unwrap(), eval_nae(&padded, &a).unwrap());
        }
    }

    #[test]
    fn dimacs_round_trip(f in formula_strategy(8, 1, 5)) {
        prop_assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn nae_oracle_models_satisfy(f in formula_strategy(8, 1, 4)) {
        let model = brute_force_nae(&f).unwrap();
        let any = all_assignments(f.num_vars).find(|a| eval_nae(&f, a).unwrap());
        prop_assert_eq!(model.is_some(), any.is_some());
        if let Some(a) = model {
            prop_assert!(eval_nae(&f, &a).unwrap());
            // Lexicographically first: nothing smaller satisfies.
            prop_assert_eq!(Some(a), any);
        }
    }

    #[test]
    fn graph_json_round_trip(g in graph_strategy(12), t in any::<u64>()) {
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g.clone());
        let c = coloring_of(g.num_vertices(), t);
        prop_assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph_strategy(8), perm_seed in any::<u64>()) {
        let n = g.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let adj = |g: &Graph, p: &[usize]| {
            let mut a = vec![0u16; n];
            for (u, v) in g.edges() {
                a[p[u]] |= 1 << p[v];
                a[p[v]] |= 1 << p[u];
            }
            a
        };
        let id: Vec<usize> = (0..n).collect();
        prop_assert_eq!(canonical_code(&adj(&g, &id)), canonical_code(&adj(&g, &perm)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_colorings_give_nae_models(f in formula_strategy(3, 3, 3)) {
        let out = reduce(&f, 3).unwrap();
        let coloring = decide_col(&out.graph, 3);
        prop_assert_eq!(coloring.is_some(), brute_force_nae(&f).unwrap().is_some());
        if let Some(c) = coloring {
            prop_assert!(eval_nae(&f, &out.extract_assignment(&c)).unwrap());
            for &(x, y) in &out.super_edges {
                prop_assert_ne!(c[x], c[y]);
            }
        }
    }
}
