//! Parse a DIMACS formula, evaluate it under not-all-equal semantics and
//! pad short clauses to a fixed width.

use monocycle::formula::{brute_force_nae, eval_nae, pad_to_width, parse_dimacs};
use monocycle::Assignment;

fn main() -> monocycle::Result<()> {
    let text = "c two clauses with complementary pairs\np cnf 3 2\n1 -1 2 0\n-2 3 -3 0\n";
    let formula = parse_dimacs(text)?;
    println!("parsed {} variables, {} clauses", formula.num_vars, formula.num_clauses());

    let all_true = Assignment::new(vec![true; 3]);
    println!("NAE under (T,T,T): {}", eval_nae(&formula, &all_true)?);

    match brute_force_nae(&formula)? {
        Some(model) => println!("first NAE model: {:?}", model.values()),
        None => println!("no NAE model"),
    }

    let short = parse_dimacs("p cnf 2 1\n1 -2 0\n")?;
    let padded = pad_to_width(&short, 4)?;
    print!("padded to width 4:\n{}", padded.to_dimacs());

    let unit = parse_dimacs("p cnf 1 1\n1 0\n")?;
    if let Err(e) = pad_to_width(&unit, 3) {
        println!("unit clause rejected: {e}");
    }
    Ok(())
}
