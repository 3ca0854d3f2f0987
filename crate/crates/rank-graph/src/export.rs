//! DOT, TikZ and plain-text emitters.
//!
//! Coloured graphs draw each edge from its source to its range with the
//! colour code: blue solid for colour one, red dashed for two, green
//! dotted for three, and purple for four (dash dot in TikZ, bold in DOT,
//! which has no dash-dot pattern). Polyhedral graphs export as undirected
//! drawings. TikZ layouts place vertices on a circle; the emitters are
//! deterministic for a fixed input.

use std::fmt::Write as _;

use crate::polyhedral::PolyhedralGraph;
use crate::skeleton::{Colour, ColouredGraph, SquareSet};

fn dot_colour(colour: Colour) -> &'static str {
    match colour.value() {
        1 => "blue",
        2 => "red",
        3 => "green",
        _ => "purple",
    }
}

fn dot_style(colour: Colour) -> &'static str {
    match colour.value() {
        1 => "solid",
        2 => "dashed",
        3 => "dotted",
        _ => "bold",
    }
}

fn tikz_style(colour: Colour) -> &'static str {
    match colour.value() {
        1 => "blue, solid",
        2 => "red, dashed",
        3 => "green!60!black, dotted",
        _ => "violet, dash dot",
    }
}

fn dot_quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

fn tex_escape(id: &str) -> String {
    let mut out = String::with_capacity(id.len());
    for ch in id.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            _ => out.push(ch),
        }
    }
    out
}

/// Evenly spaced positions on a circle, one per vertex.
fn circle_layout(count: usize) -> Vec<(f64, f64)> {
    let radius = (count as f64 * 0.45).max(2.0);
    (0..count)
        .map(|i| {
            let angle = std::f64::consts::TAU * i as f64 / count.max(1) as f64;
            (radius * angle.cos(), radius * angle.sin())
        })
        .collect()
}

/// An undirected DOT drawing of a polyhedral graph.
pub fn polyhedral_to_dot(graph: &PolyhedralGraph) -> String {
    let mut out = String::from("graph polyhedral {\n");
    for p in 0..graph.point_count() {
        let _ = writeln!(out, "    {};", dot_quote(graph.point_id(p)));
    }
    for a in 0..graph.arc_count() {
        let arc = graph.arc(a);
        let _ = writeln!(
            out,
            "    {} -- {} [label={}];",
            dot_quote(graph.point_id(arc.source)),
            dot_quote(graph.point_id(arc.range)),
            dot_quote(&arc.id),
        );
    }
    out.push_str("}\n");
    out
}

/// A directed DOT drawing of a coloured graph, one arrow per edge from
/// source to range, styled by colour.
pub fn coloured_graph_to_dot(graph: &ColouredGraph) -> String {
    let mut out = String::from("digraph coloured {\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "    {};", dot_quote(graph.vertex_id(v)));
    }
    for edge in graph.edges() {
        let _ = writeln!(
            out,
            "    {} -> {} [label={}, color={}, style={}];",
            dot_quote(graph.vertex_id(edge.source)),
            dot_quote(graph.vertex_id(edge.range)),
            dot_quote(&edge.id),
            dot_colour(edge.colour),
            dot_style(edge.colour),
        );
    }
    out.push_str("}\n");
    out
}

/// A TikZ drawing of a polyhedral graph: labelled point nodes on a circle
/// joined by undirected arcs.
pub fn polyhedral_to_tikz(graph: &PolyhedralGraph) -> String {
    let layout = circle_layout(graph.point_count());
    let mut out = String::from(
        "\\begin{tikzpicture}[every node/.style={draw, circle, inner sep=1.5pt}]\n",
    );
    for p in 0..graph.point_count() {
        let (x, y) = layout[p];
        let _ = writeln!(
            out,
            "    \\node (n{p}) at ({x:.3}, {y:.3}) {{{}}};",
            tex_escape(graph.point_id(p)),
        );
    }
    for a in 0..graph.arc_count() {
        let arc = graph.arc(a);
        let _ = writeln!(
            out,
            "    \\draw (n{}) -- (n{}) node[midway, draw=none, fill=white, inner sep=1pt] {{{}}};",
            arc.source,
            arc.range,
            tex_escape(&arc.id),
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// A TikZ drawing of a coloured graph: labelled vertex nodes on a circle
/// joined by arrows styled by colour.
pub fn coloured_graph_to_tikz(graph: &ColouredGraph) -> String {
    let layout = circle_layout(graph.vertex_count());
    let mut out = String::from(
        "\\begin{tikzpicture}[every node/.style={draw, circle, inner sep=1.5pt}]\n",
    );
    for v in 0..graph.vertex_count() {
        let (x, y) = layout[v];
        let _ = writeln!(
            out,
            "    \\node (n{v}) at ({x:.3}, {y:.3}) {{{}}};",
            tex_escape(graph.vertex_id(v)),
        );
    }
    for edge in graph.edges() {
        let _ = writeln!(
            out,
            "    \\draw[->, {}] (n{}) -- (n{}) node[midway, draw=none, fill=white, inner sep=1pt] {{{}}};",
            tikz_style(edge.colour),
            edge.source,
            edge.range,
            tex_escape(&edge.id),
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// A plain-text listing of a polyhedral graph: points, arcs with their
/// endpoints, and faces with their sides when an embedding is present.
pub fn polyhedral_to_text(graph: &PolyhedralGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "polyhedral graph: {} points, {} arcs",
        graph.point_count(),
        graph.arc_count()
    );
    for p in 0..graph.point_count() {
        let _ = writeln!(out, "point {}", graph.point_id(p));
    }
    for a in 0..graph.arc_count() {
        let arc = graph.arc(a);
        if let Some(embedding) = graph.embedding() {
            let side = embedding.side(a);
            let _ = writeln!(
                out,
                "arc {}: {} -> {}  [L {} | R {}]",
                arc.id,
                graph.point_id(arc.source),
                graph.point_id(arc.range),
                embedding.face_id(side.left),
                embedding.face_id(side.right),
            );
        } else {
            let _ = writeln!(
                out,
                "arc {}: {} -> {}",
                arc.id,
                graph.point_id(arc.source),
                graph.point_id(arc.range),
            );
        }
    }
    if let Some(embedding) = graph.embedding() {
        for face in embedding.face_ids() {
            let _ = writeln!(out, "face {face}");
        }
    }
    out
}

/// A plain-text listing of a coloured graph and its squares.
pub fn coloured_graph_to_text(graph: &ColouredGraph, squares: &SquareSet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "coloured graph: {} vertices, {} edges, {} squares, rank {}",
        graph.vertex_count(),
        graph.edge_count(),
        squares.len(),
        graph.rank()
    );
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "vertex {}", graph.vertex_id(v));
    }
    for edge in graph.edges() {
        let _ = writeln!(
            out,
            "edge {}: {} -> {}  colour {}",
            edge.id,
            graph.vertex_id(edge.source),
            graph.vertex_id(edge.range),
            edge.colour.value(),
        );
    }
    for (i, sq) in squares.squares().iter().enumerate() {
        let id = |e| &graph.edge(e).id;
        let _ = writeln!(
            out,
            "square {i}: {} . {}  =  {} . {}",
            id(sq.top[0]),
            id(sq.top[1]),
            id(sq.bottom[0]),
            id(sq.bottom[1]),
        );
    }
    out
}
