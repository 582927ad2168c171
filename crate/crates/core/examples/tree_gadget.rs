//! Tree gadgets for k >= 4, checked with the SAT decider.
//!
//! Usage: `cargo run --release --example tree_gadget -- [k ...]` (default 4 5 6).

use std::time::Instant;

use monocycle::gadgets::{tree_gadget_layout, verify_super_edge, TreeConfig, VerifyMethod};

fn main() -> monocycle::Result<()> {
    let ks: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ks = if ks.is_empty() { vec![4, 5, 6] } else { ks };
    for k in ks {
        let config = TreeConfig::for_k(k)?;
        let layout = tree_gadget_layout(&config, k)?;
        let g = &layout.gadget.graph;
        println!("k = {k}: height {}, {} vertices, {} edges", config.height, g.num_vertices(), g.num_edges());
        println!("  bands: {:?}", config.bands);
        println!("  donut through the leftmost leaf: {:?}", layout.donut_cycle(0));
        let start = Instant::now();
        let report = verify_super_edge(&layout.gadget, VerifyMethod::Sat)?;
        println!(
            "  existence {}, forcing {} ({:.2?})",
            report.existence,
            report.forcing,
            start.elapsed()
        );
    }

    // Shorter trees for k = 4 only join the root to shallower leaves.
    for height in 1..=4 {
        let layout = tree_gadget_layout(&TreeConfig::plain(height), 4)?;
        let report = verify_super_edge(&layout.gadget, VerifyMethod::Sat)?;
        println!("k = 4, height {height}: existence {}, forcing {}", report.existence, report.forcing);
    }
    Ok(())
}
