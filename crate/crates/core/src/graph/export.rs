use std::fmt::Write;

use super::{Color, Coloring, Graph};

/// Rendering options for [`to_dot`].
#[derive(Debug, Clone, Default)]
pub struct DotOptions<'a> {
    pub coloring: Option<&'a Coloring>,
    /// Endpoints drawn bold, e.g. a gadget's designated pair.
    pub highlight: Option<(usize, usize)>,
    /// Optional per-vertex labels.
    pub labels: Option<&'a [Option<String>]>,
}

pub fn to_dot(graph: &Graph, options: &DotOptions<'_>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..graph.num_vertices() {
        let mut attrs = Vec::new();
        if let Some(label) = options.labels.and_then(|l| l.get(v).cloned().flatten()) {
            attrs.push(format!("label=\"{}\"", label.replace('"', "\\\"")));
        }
        if let Some(c) = options.coloring {
            let fill = match c.get(v) {
                Color::Red => "red",
                Color::Blue => "lightblue",
            };
            attrs.push(format!("fillcolor={fill}"));
        }
        if let Some((x, y)) = options.highlight {
            if v == x || v == y {
                attrs.push("penwidth=3".into());
            }
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (u, v) in graph.edges() {
        let designated = options.highlight.is_some_and(|(x, y)| (u, v) == (x.min(y), x.max(y)));
        if designated {
            writeln!(out, "  {u} -- {v} [penwidth=3];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_output() {
        let g = Graph::complete(3);
        let c = Coloring::new(vec![Color::Red, Color::Blue, Color::Red]);
        let dot = to_dot(&g, &DotOptions { coloring: Some(&c), highlight: Some((1, 0)), labels: None });
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("  1 [fillcolor=lightblue, penwidth=3];"));
        assert!(dot.contains("  0 -- 1 [penwidth=3];"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
