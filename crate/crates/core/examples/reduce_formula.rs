//! Build reduction graphs from a formula, predict their size, decide them
//! and read an assignment back off the coloring.

use monocycle::formula::{eval_nae, parse_dimacs};
use monocycle::{decide_col, predicted_sizes, reduce, reduce_necklace, Variant};

fn main() -> monocycle::Result<()> {
    let formula = parse_dimacs("p cnf 3 2\n1 -1 2 0\n-2 3 -3 0\n")?;
    let (n, m) = (formula.num_vars as usize, formula.num_clauses());

    for (variant, out) in [(Variant::Basic, reduce(&formula, 3)?), (Variant::Necklace, reduce_necklace(&formula)?)] {
        print!("{}", predicted_sizes(3, n, m, variant)?.table());
        println!("built: {} vertices, {} edges", out.graph.num_vertices(), out.graph.num_edges());
        let coloring = decide_col(&out.graph, 3).expect("the formula is NAE-satisfiable");
        let assignment = out.extract_assignment(&coloring);
        println!("assignment {:?}, NAE: {}\n", assignment.values(), eval_nae(&formula, &assignment)?);
    }

    let out = reduce(&parse_dimacs("p cnf 2 1\n1 -1 2 -2 0\n")?, 4)?;
    print!("{}", predicted_sizes(4, 2, 1, Variant::Basic)?.table());
    println!("k = 4 built: {} vertices, {} edges", out.graph.num_vertices(), out.graph.num_edges());
    Ok(())
}
