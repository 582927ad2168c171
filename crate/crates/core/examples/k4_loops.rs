//! Closed chains of K4 blocks: odd loops of length at least 5 are
//! super-edges for triangles, even loops and the length-3 loop are not.

use monocycle::gadgets::{k4_loop, k4_string, verify_super_edge, VerifyMethod};
use monocycle::Graph;

fn main() -> monocycle::Result<()> {
    let s = k4_string(3)?;
    println!("string of 3 blocks: {} vertices, {} edges", s.graph.num_vertices(), s.graph.num_edges());

    for length in 3..=9 {
        let gadget = k4_loop(length)?;
        let report = verify_super_edge(&gadget, VerifyMethod::Exhaustive)?;
        println!(
            "loop({length}): {:>2} vertices {:>2} edges  colorings {:>4}  existence {:<5}  forcing {:<5}",
            report.num_vertices,
            report.num_edges,
            report.valid_colorings.unwrap_or(0),
            report.existence,
            report.forcing,
        );
    }
    println!("loop(3) == K6: {}", k4_loop(3)?.graph == Graph::complete(6));
    Ok(())
}
