//! SVG and DOT output. Vertices sit on longest-path layers, so every edge
//! runs strictly eastward; within a layer they are stacked in the order a
//! depth-first walk meets them, taking outgoing edges north to south.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, Side};

use super::disk::DiskRealization;
use super::mgraph::MGraph;

/// Planar coordinates per vertex, indexed like the graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub points: Vec<(f64, f64)>,
}

const DX: f64 = 120.0;
const DY: f64 = 60.0;
const MARGIN: f64 = 40.0;

fn layers(g: &Graph) -> Result<Vec<usize>> {
    let order = g.topological_order().ok_or_else(|| Error::pre("layout needs an acyclic graph"))?;
    let mut x = vec![0; g.vertex_count()];
    for v in order {
        for &a in g.out_edges(v) {
            let w = g.end(a, Side::E);
            x[w] = x[w].max(x[v] + 1);
        }
    }
    Ok(x)
}

/// `starts` are visited first, in order; `outs(v)` lists successor edges
/// north to south.
fn layout_with(g: &Graph, starts: &[usize], outs: &dyn Fn(usize) -> Vec<usize>) -> Result<Layout> {
    let x = layers(g)?;
    let mut y = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    let roots = starts.iter().copied().chain(g.x_vertices(Side::W)).chain(0..g.vertex_count());
    for root in roots.collect::<Vec<_>>() {
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if y[v] != usize::MAX {
                continue;
            }
            y[v] = next;
            next += 1;
            stack.extend(outs(v).into_iter().rev().map(|a| g.end(a, Side::E)));
        }
    }
    // Rank within a layer, so layers stay compact.
    let mut rank = vec![0; g.vertex_count()];
    let mut by_layer: Vec<Vec<usize>> = vec![vec![]; x.iter().max().map_or(0, |m| m + 1)];
    for v in 0..g.vertex_count() {
        by_layer[x[v]].push(v);
    }
    for layer in &mut by_layer {
        layer.sort_by_key(|&v| y[v]);
        for (i, &v) in layer.iter().enumerate() {
            rank[v] = i;
        }
    }
    let points = (0..g.vertex_count()).map(|v| (MARGIN + DX * x[v] as f64, MARGIN + DY * rank[v] as f64)).collect();
    Ok(Layout { points })
}

pub fn layout(r: &DiskRealization) -> Result<Layout> {
    let g = &r.graph;
    let orders = r.orders();
    let starts: Vec<usize> = r.lw.iter().filter_map(|v| g.vertex_index(v)).collect();
    layout_with(g, &starts, &|v| {
        orders[g.vertex_name(v)].1.iter().map(|a| g.edge_index(a).expect("edge of the graph")).collect()
    })
}

/// Without a rotation, edges are taken in name order.
pub fn layout_graph(g: &Graph) -> Result<Layout> {
    layout_with(g, &[], &|v| g.out_edges(v).to_vec())
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn svg(g: &Graph, l: &Layout) -> String {
    let w = l.points.iter().map(|p| p.0).fold(0.0, f64::max) + MARGIN;
    let h = l.points.iter().map(|p| p.1).fold(0.0, f64::max) + MARGIN;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        s,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#
    );
    for (a, name) in g.edges().iter().enumerate() {
        let (p, q) = (l.points[g.end(a, Side::W)], l.points[g.end(a, Side::E)]);
        let _ = writeln!(
            s,
            r#"<line id="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" marker-end="url(#arrow)"/>"#,
            escape_xml(name),
            p.0,
            p.1,
            q.0 - 6.0,
            q.1
        );
        let _ =
            writeln!(s, r#"<text x="{}" y="{}" font-size="10">{}</text>"#, (p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0 - 3.0, escape_xml(name));
    }
    for (v, name) in g.vertices().iter().enumerate() {
        let (x, y) = l.points[v];
        let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="5" fill="white" stroke="black"/>"#);
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="11">{}</text>"#, x - 8.0, y - 9.0, escape_xml(name));
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(r: &DiskRealization) -> Result<String> {
    Ok(svg(&r.graph, &layout(r)?))
}

pub fn emit_svg_mgraph(m: &MGraph) -> Result<String> {
    Ok(svg(&m.graph, &layout_graph(&m.graph)?))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn emit_dot(g: &Graph) -> String {
    let mut s = String::from("digraph D {\n  rankdir=LR;\n");
    for v in g.vertices() {
        let _ = writeln!(s, "  {};", quote(v));
    }
    for (a, w, e) in g.edge_triples() {
        let _ = writeln!(s, "  {} -> {} [label={}];", quote(w), quote(e), quote(a));
    }
    s.push_str("}\n");
    s
}
