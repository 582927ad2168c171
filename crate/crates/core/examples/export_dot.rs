//! JSON round trip and Graphviz output for a colored gadget.
//!
//! Pipe into `dot -Tsvg` to render.

use monocycle::gadgets::{k4_loop, Gadget};
use monocycle::graph::{to_dot, DotOptions};
use monocycle::decide_col;

fn main() -> monocycle::Result<()> {
    let gadget = k4_loop(5)?;
    let json = gadget.to_json();
    eprintln!("{json}");
    let back = Gadget::from_json(&json)?;
    assert_eq!(back, gadget);

    let coloring = decide_col(&gadget.graph, 3).expect("loop(5) is colorable");
    let options = DotOptions { coloring: Some(&coloring), highlight: Some((gadget.x, gadget.y)), labels: None };
    print!("{}", to_dot(&gadget.graph, &options));
    Ok(())
}
