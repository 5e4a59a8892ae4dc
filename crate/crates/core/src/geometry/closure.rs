//! Source-sink closures, D1-interiors and the pasting-scheme test.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::juncture::fresh;

use super::disk::{two_runs, DiskRealization};

pub fn is_d1_graph(g: &Graph) -> bool {
    g.is_acyclic() && g.is_incidented() && g.is_w_e_functional()
}

/// Finite, acyclic, incidented, with a single source and a single sink.
pub fn is_d1p_graph(g: &Graph) -> bool {
    !g.is_empty()
        && g.is_acyclic()
        && g.is_incidented()
        && g.x_vertices(Side::W).len() == 1
        && g.x_vertices(Side::E).len() == 1
}

/// `D'`: all W-vertices become one new vertex `u_W`, all E-vertices one
/// new vertex `u_E`.
pub fn abstract_ssc(d: &Graph) -> Result<Graph> {
    if d.is_empty() || !is_d1_graph(d) {
        return Err(Error::pre("abstract source-sink closure needs a non-empty D1-graph"));
    }
    let taken = |n: &str| d.vertex_index(n).is_some() || d.edge_index(n).is_some();
    let uw = fresh("u_W".into(), &taken);
    let ue = fresh("u_E".into(), &|n| taken(n) || n == uw);
    let outer = |v: usize| {
        if d.is_x_vertex(v, Side::W) {
            uw.clone()
        } else if d.is_x_vertex(v, Side::E) {
            ue.clone()
        } else {
            d.vertex_name(v).to_string()
        }
    };
    let vertices: BTreeSet<String> = (0..d.vertex_count()).map(outer).collect();
    let edges = (0..d.edge_count()).map(|a| (d.edge_name(a).to_string(), outer(d.end(a, Side::W)), outer(d.end(a, Side::E))));
    Graph::new(vertices, edges)
}

/// `D⁻`: source and sink dropped, each edge at them given its own new end.
pub fn d1_interior(d: &Graph) -> Result<Graph> {
    if !is_d1p_graph(d) {
        return Err(Error::pre("D1-interior needs a D1'-graph"));
    }
    let (s, t) = (d.x_vertices(Side::W)[0], d.x_vertices(Side::E)[0]);
    let taken = |n: &str| d.vertex_index(n).is_some() || d.edge_index(n).is_some();
    let mut used = BTreeSet::new();
    let mut vertices: BTreeSet<String> =
        (0..d.vertex_count()).filter(|&v| v != s && v != t).map(|v| d.vertex_name(v).to_string()).collect();
    let mut edges = Vec::new();
    for a in 0..d.edge_count() {
        let name = d.edge_name(a);
        let mut end = |x: Side, pole: usize, tag: &str| {
            let v = d.end(a, x);
            if v != pole {
                return d.vertex_name(v).to_string();
            }
            let n = fresh(format!("{tag}_{name}"), &|n| taken(n) || used.contains(n));
            used.insert(n.clone());
            vertices.insert(n.clone());
            n
        };
        let w = end(Side::W, s, "w");
        let e = end(Side::E, t, "e");
        edges.push((name.to_string(), w, e));
    }
    Graph::new(vertices, edges)
}

/// Source-sink closure of a disk D1-realization, as a disk D1'-realization.
pub fn ssc(r: &DiskRealization) -> Result<DiskRealization> {
    if !is_d1_graph(&r.graph) {
        return Err(Error::pre("source-sink closure needs a D1-graph"));
    }
    r.validate()?;
    r.closure()
}

/// Whether a realization is a pasting scheme: one source and one sink,
/// distinct and on the outer face, every vertex on a path between them,
/// and every inner face bipolar. Acyclicity is checked as well; the two
/// must agree whenever the other conditions hold.
pub fn is_pasting_scheme(r: &DiskRealization) -> Result<bool> {
    let g = &r.graph;
    if g.is_empty() || !g.is_weakly_connected() {
        return Ok(false);
    }
    let (sources, sinks) = (g.x_vertices(Side::W), g.x_vertices(Side::E));
    let ([s], [t]) = (&sources[..], &sinks[..]) else { return Ok(false) };
    let (s, t) = (*s, *t);
    if r.lw.first().map(String::as_str) != Some(g.vertex_name(s)) {
        return Err(Error::pre("the W-meridian must start at the source"));
    }
    let faces = super::disk::faces(r)?;
    let outer = faces.iter().find(|f| f.outer).expect("one outer face");
    let on_outer: BTreeSet<usize> = outer.darts.iter().map(|d| g.end(d.edge, d.end)).collect();
    if !on_outer.contains(&s) || !on_outer.contains(&t) {
        return Ok(false);
    }
    if !reaches_all(g, s, Side::W) || !reaches_all(g, t, Side::E) {
        return Ok(false);
    }
    let bipolar = faces.iter().all(|f| f.outer || f.bipolar.is_some());
    let acyclic = g.is_acyclic();
    if bipolar != acyclic {
        return Err(Error::Disagreement(format!(
            "pasting-scheme routes disagree: bipolar faces {bipolar}, acyclic {acyclic}"
        )));
    }
    Ok(bipolar)
}

/// Whether every vertex is reached from `v` along edges (`W`) or reaches
/// it (`E`).
fn reaches_all(g: &Graph, v: usize, x: Side) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        let step = if x == Side::W { g.out_edges(u) } else { g.in_edges(u) };
        for &a in step {
            let w = g.end(a, x.bar());
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// The outer walk of a pasting scheme as its northern boundary (forward,
/// source to sink) and southern boundary (backward, sink to source).
pub(crate) fn outer_runs(r: &DiskRealization) -> Result<(Vec<super::disk::Dart>, Vec<super::disk::Dart>)> {
    let faces = super::disk::faces(r)?;
    let outer = faces.into_iter().find(|f| f.outer).expect("one outer face");
    two_runs(&outer.darts).ok_or_else(|| Error::pre("outer boundary is not two paths"))
}
