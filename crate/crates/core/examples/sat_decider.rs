//! The cycle-to-CNF encoding and the built-in solver.

use monocycle::decider::{check_forcing, decide_col_with_stats};
use monocycle::gadgets::k4_loop;
use monocycle::{dpll_solve, encode_nae_cycles, Color, Graph};

fn main() -> monocycle::Result<()> {
    let k4 = Graph::complete(4);
    let cnf = encode_nae_cycles(&k4, 3);
    print!("K4, k = 3:\n{}", cnf.to_dimacs());

    // Two red vertices force the other two blue.
    let forced = dpll_solve(&cnf, &[(0, Color::Red), (1, Color::Red)])?;
    println!("with 0 and 1 red: {}", forced.model.expect("K4 is colorable").to_json());

    for n in [5, 6] {
        let result = decide_col_with_stats(&Graph::complete(n), 3);
        println!("K{n}: {:?}, {:?}", result.status, result.stats);
    }

    let gadget = k4_loop(7)?;
    println!("loop(7) forces its designated pair apart: {}", check_forcing(&gadget.graph, 3, gadget.x, gadget.y));
    Ok(())
}
