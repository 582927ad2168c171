//! NAE satisfiability of random formulas against colorability of their
//! reduction graphs.

use monocycle::formula::{brute_force_nae, Clause, Formula, Literal};
use monocycle::{decide_col, reduce};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> monocycle::Result<()> {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut agree = 0;
    let trials = 40;
    for _ in 0..trials {
        let clauses = (0..rng.gen_range(1..=3))
            .map(|_| {
                Clause::new(
                    (0..3)
                        .map(|_| {
                            let v = rng.gen_range(1..=3);
                            if rng.gen() { Literal::neg(v) } else { Literal::pos(v) }
                        })
                        .collect(),
                )
            })
            .collect();
        let formula = Formula::new(3, clauses)?;
        let nae = brute_force_nae(&formula)?.is_some();
        let colorable = decide_col(&reduce(&formula, 3)?.graph, 3).is_some();
        agree += (nae == colorable) as usize;
        if !nae {
            print!("NAE-unsatisfiable, graph colorable = {colorable}:\n{}", formula.to_dimacs());
        }
    }
    println!("{agree}/{trials} formulas agree");
    Ok(())
}
