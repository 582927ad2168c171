//! Enumerate fixed-length cycles and test colorings against them.

use monocycle::graph::{brute_force_coloring, count_k_cycles, enumerate_k_cycles, is_valid_coloring};
use monocycle::{Color, Coloring, Graph};

fn main() -> monocycle::Result<()> {
    let k4 = Graph::complete(4);
    for cycle in enumerate_k_cycles(&k4, 4) {
        println!("4-cycle in K4: {:?}", cycle.vertices);
    }
    println!("4-cycles in K6: {}", count_k_cycles(&Graph::complete(6), 4));

    let two_two = Coloring::new(vec![Color::Red, Color::Red, Color::Blue, Color::Blue]);
    println!("K4 red-red-blue-blue avoids mono triangles: {}", is_valid_coloring(&k4, 3, &two_two)?);

    for n in 4..=6 {
        let found = brute_force_coloring(&Graph::complete(n), 3)?;
        println!("K{n} triangle-free 2-coloring: {}", found.map_or("none".to_string(), |c| c.to_json()));
    }
    Ok(())
}
