//! Exhaustive search over all small graphs for the smallest super-edge.
//!
//! Usage: `cargo run --release --example gadget_search -- [max_vertices]`.

use monocycle::search::{search_min_gadget_with_progress, SearchOptions};

fn main() -> monocycle::Result<()> {
    let max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let options = SearchOptions::new(3, max);
    let report = search_min_gadget_with_progress(&options, |p| {
        if p.checked == p.canonical_graphs {
            eprintln!("n = {}: {} graphs, {} gadgets", p.vertices, p.canonical_graphs, p.gadgets);
        }
    })?;
    match &report.winner {
        Some(g) => println!(
            "smallest gadget: {} vertices, {} edges, designated {:?}, verified {}\n{}",
            g.graph.num_vertices(),
            g.graph.num_edges(),
            (g.x, g.y),
            report.winner_verified,
            g.to_json()
        ),
        None => println!("no gadget on at most {max} vertices ({} graphs checked)", report.graphs_examined),
    }
    Ok(())
}
