//! Interpretations of terms in graphs: `ι` into D-graphs and `η` into
//! edge-graphs, plus the way back from D-graphs and constructions to terms.

use std::collections::{BTreeMap, BTreeSet};

use crate::caps::Caps;
use crate::edge_graph::EdgeGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::juncture::{cut_through, enumerate_cocycles, juncture};
use crate::lists::IdList;
use crate::pgraph::Construction;

use super::{type_check, Basic, Calculus, Term};

/// The vertex standing for an edge or a basic term.
pub fn vertex_for(name: &str) -> String {
    format!("v_{name}")
}

/// `ι(β)`: the edges of `β` around the inner vertex `v_β`.
pub fn iota_basic(b: &Basic) -> Graph {
    let inner = vertex_for(&b.name);
    let mut vertices = vec![inner.clone()];
    let mut edges = Vec::new();
    for a in &b.w {
        vertices.push(vertex_for(a));
        edges.push((a.clone(), vertex_for(a), inner.clone()));
    }
    for a in &b.e {
        vertices.push(vertex_for(a));
        edges.push((a.clone(), inner.clone(), vertex_for(a)));
    }
    Graph::new(vertices, edges).expect("typed basic terms have distinct names")
}

/// `ι(δ)` for a D-term (or a P-term read as one); `□` is juncture.
pub fn iota(t: &Term, calc: Calculus) -> Result<Graph> {
    if !matches!(calc, Calculus::SBox | Calculus::SBoxP) {
        return Err(Error::Type(format!("ι interprets terms of sbox and sboxp, not {calc}")));
    }
    type_check(t, calc)?;
    iota_unchecked(t)
}

fn iota_unchecked(t: &Term) -> Result<Graph> {
    match t {
        Term::Basic(b) => Ok(iota_basic(b)),
        Term::Box(l, r) => juncture(&iota_unchecked(l)?, &iota_unchecked(r)?),
        _ => Err(Error::Type("ι is defined on basic terms and box".into())),
    }
}

/// The graph of a set of basic terms glued along shared edges: an edge
/// runs from the basic listing it as an E-edge, or from its own outer
/// vertex, to the basic listing it as a W-edge, or to its own outer vertex.
/// For a D-term this is `ι` of the term, whatever its bracketing.
pub fn iota_rho<'a>(basics: impl IntoIterator<Item = &'a Basic>) -> Result<Graph> {
    let mut from: BTreeMap<String, String> = BTreeMap::new();
    let mut to: BTreeMap<String, String> = BTreeMap::new();
    let mut vertices = BTreeSet::new();
    for b in basics {
        vertices.insert(vertex_for(&b.name));
        for a in &b.w {
            if to.insert(a.clone(), vertex_for(&b.name)).is_some() {
                return Err(Error::Type(format!("edge {a} is a W-edge of two basics")));
            }
        }
        for a in &b.e {
            if from.insert(a.clone(), vertex_for(&b.name)).is_some() {
                return Err(Error::Type(format!("edge {a} is an E-edge of two basics")));
            }
        }
    }
    let all: BTreeSet<&String> = from.keys().chain(to.keys()).collect();
    let mut edges = Vec::new();
    for a in all {
        let w = from.get(a).cloned().unwrap_or_else(|| vertex_for(a));
        let e = to.get(a).cloned().unwrap_or_else(|| vertex_for(a));
        vertices.insert(w.clone());
        vertices.insert(e.clone());
        edges.push((a.clone(), w, e));
    }
    Graph::new(vertices, edges)
}

/// `η(δ)` for a P1-term: basic and unit edge-graphs joined by union.
pub fn eta(t: &Term) -> Result<EdgeGraph> {
    type_check(t, Calculus::S1)?;
    eta_unchecked(t)
}

fn eta_unchecked(t: &Term) -> Result<EdgeGraph> {
    match t {
        Term::Basic(b) => EdgeGraph::from_graph(&iota_basic(b)),
        Term::Unit(l) => Ok(EdgeGraph::unit(l.iter().cloned())),
        Term::Box(l, r) => {
            let (hw, he) = (eta_unchecked(l)?, eta_unchecked(r)?);
            if hw.is_empty() || he.is_empty() {
                Ok(hw.union_unchecked(&he))
            } else {
                hw.union(&he)
            }
        }
        _ => Err(Error::Type("η is defined on P1-terms".into())),
    }
}

/// `η*(δ) = ⟨η(δ), ρ(δ), L_W(δ), L_E(δ)⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaStar {
    pub eta: EdgeGraph,
    pub rho: BTreeSet<Basic>,
    pub lw: IdList,
    pub le: IdList,
}

pub fn eta_star(t: &Term) -> Result<EtaStar> {
    let ty = type_check(t, Calculus::S1)?;
    Ok(EtaStar { eta: eta_unchecked(t)?, rho: t.rho(), lw: ty.lw, le: ty.le })
}

/// A D-term whose `ι` is isomorphic to `d`, found by cutting through
/// cocycles down to basic pieces. Basic terms are named after the inner
/// vertices of `d`.
pub fn term_of_dgraph(d: &Graph, caps: &Caps) -> Result<Term> {
    d.require_dgraph()?;
    if d.is_basic() {
        let v = d.inner_vertices()[0];
        let names = |x: Side| d.edges_at(v, x).iter().map(|&a| d.edge_name(a).to_string()).collect::<IdList>();
        return Ok(Term::Basic(Basic { name: d.vertex_name(v).to_string(), w: names(Side::E), e: names(Side::W) }));
    }
    let c = enumerate_cocycles(d, caps)?.into_iter().next().ok_or_else(|| Error::pre("a D-graph with an inner edge has a cocycle"))?;
    let (dw, de) = cut_through(d, &c)?;
    Ok(Term::boxed(term_of_dgraph(&dw, caps)?, term_of_dgraph(&de, caps)?))
}

/// The P-term of a construction: leaves become basic terms named by
/// `name` applied to their inner vertex, with the leaf lists read as edge
/// lists.
pub fn term_of_construction(k: &Construction, name: &dyn Fn(&str) -> String) -> Result<Term> {
    match &k.parts {
        Some(p) => Ok(Term::boxed(term_of_construction(&p.0, name)?, term_of_construction(&p.1, name)?)),
        None => {
            let g = &k.graph;
            let inner = g.inner_vertices();
            let [v] = inner[..] else {
                return Err(Error::pre("construction leaves are basic"));
            };
            let edges = |l: &IdList, x: Side| -> Result<IdList> {
                l.iter().map(|u| Ok(g.edge_name(g.edges_at(g.vertex(u)?, x)[0]).to_string())).collect()
            };
            Ok(Term::Basic(Basic { name: name(g.vertex_name(v)), w: edges(&k.lw, Side::W)?, e: edges(&k.le, Side::E)? }))
        }
    }
}
