//! Graphviz DOT rendering, optionally with vertex labels.

use std::fmt::Write;

use crate::graph::Graph;
use crate::srdf::{Label, Labeling};

/// Style class for each label value.
pub fn label_class(label: Label) -> &'static str {
    match label {
        Label::MinusOne => "minus-one",
        Label::One => "one",
        Label::Two => "two",
    }
}

fn fill(label: Label) -> &'static str {
    match label {
        Label::MinusOne => "#d9d9d9",
        Label::One => "#ffd280",
        Label::Two => "#ff8c1a",
    }
}

fn vertex_name(g: &Graph, v: usize) -> String {
    match g.coord(v) {
        Some(c) => format!("{}{}", c.row, c.column),
        None => v.to_string(),
    }
}

/// Renders `g` as an undirected DOT graph. With a labeling, each node shows its
/// label and carries a `class` and fill color for its value. The labeling
/// length must match the graph.
pub fn to_dot(g: &Graph, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(spec) = g.family() {
        writeln!(out, "  label=\"{spec}\";").unwrap();
    }
    out.push_str("  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..g.vertex_count() {
        let name = vertex_name(g, v);
        match labeling {
            Some(l) => {
                let label = l.get(v);
                writeln!(
                    out,
                    "  {v} [label=\"{label}\", xlabel=\"{name}\", class=\"{}\", fillcolor=\"{}\"];",
                    label_class(label),
                    fill(label)
                )
                .unwrap();
            }
            None => writeln!(out, "  {v} [label=\"{name}\"];").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
