//! M-graphs, the graphs of 2-cell diagrams, and the interpretation `μ` of
//! P2-terms in them.
//!
//! Vertices produced by `μ` are named `(ins|outs)` after their sorted
//! incoming and outgoing edges, so two interpretations are equal exactly
//! when the graphs and their boundary data are.

use std::collections::{BTreeMap, BTreeSet};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::lists::IdList;
use crate::terms::{type_check, Basic, Calculus, Term};

use super::disk::{DiskRealization, Orders};

/// A graph with poles `N`, `S` and two paths `W`, `E` between them, given
/// by their edges. The empty graph carries no poles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MGraph {
    pub graph: Graph,
    pub north: Option<String>,
    pub south: Option<String>,
    pub west: IdList,
    pub east: IdList,
}

impl MGraph {
    pub fn empty() -> MGraph {
        MGraph { graph: Graph::empty(), north: None, south: None, west: vec![], east: vec![] }
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// The vertices of a boundary path from `N` to `S`.
    pub fn path_vertices(&self, x: Side) -> Result<Vec<String>> {
        let edges = if x == Side::W { &self.west } else { &self.east };
        let g = &self.graph;
        let mut out = vec![self.north.clone().ok_or_else(|| Error::pre("the empty M-graph has no paths"))?];
        for a in edges {
            let i = g.edge(a)?;
            if g.vertex_name(g.end(i, Side::W)) != out.last().unwrap() {
                return Err(Error::pre(format!("{x}-path breaks at {a}")));
            }
            out.push(g.vertex_name(g.end(i, Side::E)).to_string());
        }
        if out.len() < 2 || out.last() != self.south.as_ref() {
            return Err(Error::pre(format!("{x}-path does not run from N to S")));
        }
        Ok(out)
    }

    fn poles(&self) -> Result<(&str, &str)> {
        match (&self.north, &self.south) {
            (Some(n), Some(s)) if n != s => Ok((n, s)),
            _ => Err(Error::pre("a non-empty M-graph needs distinct poles")),
        }
    }

    /// Checks the boundary data: distinct poles, both paths present.
    pub fn check_frame(&self) -> Result<()> {
        if self.is_empty() {
            return match (&self.north, &self.south, self.west.is_empty() && self.east.is_empty()) {
                (None, None, true) => Ok(()),
                _ => Err(Error::pre("the empty M-graph has no poles or paths")),
            };
        }
        self.poles()?;
        self.path_vertices(Side::W)?;
        self.path_vertices(Side::E)?;
        Ok(())
    }

    /// Whether the two paths share only the poles and no edge.
    fn paths_apart(&self) -> Result<bool> {
        let (w, e) = (self.path_vertices(Side::W)?, self.path_vertices(Side::E)?);
        let inner_w: BTreeSet<&String> = w[1..w.len() - 1].iter().collect();
        let shared_vertex = e[1..e.len() - 1].iter().any(|v| inner_w.contains(v));
        let shared_edge = self.west.iter().any(|a| self.east.contains(a));
        Ok(!shared_vertex && !shared_edge)
    }
}

fn merge(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut vertices = a.vertex_set();
    vertices.extend(b.vertex_set());
    let mut edges = a.named_edges();
    edges.extend(b.named_edges());
    Graph::new(vertices, edges.into_iter().map(|(e, (w, v))| (e, w, v)))
}

/// `M_W ∘ M_E`: the operands share exactly the path `E(M_W) = W(M_E)`.
pub fn vcomp(mw: &MGraph, me: &MGraph) -> Result<MGraph> {
    match (mw.is_empty(), me.is_empty()) {
        (true, true) => return Ok(MGraph::empty()),
        (true, false) | (false, true) => return Err(Error::pre("∘ with the empty graph needs both operands empty")),
        _ => {}
    }
    mw.check_frame()?;
    me.check_frame()?;
    let path = mw.path_vertices(Side::E)?;
    if mw.east != me.west || path != me.path_vertices(Side::W)? {
        return Err(Error::pre("E(M_W) and W(M_E) differ"));
    }
    let common_v: BTreeSet<String> = mw.graph.vertex_set().intersection(&me.graph.vertex_set()).cloned().collect();
    let ew: BTreeSet<&String> = mw.graph.edges().iter().collect();
    let common_e: BTreeSet<&String> = me.graph.edges().iter().filter(|a| ew.contains(a)).collect();
    if common_v != path.iter().cloned().collect() || common_e != mw.east.iter().collect() {
        return Err(Error::pre("the operands share more than the path E(M_W)"));
    }
    Ok(MGraph {
        graph: merge(&mw.graph, &me.graph)?,
        north: mw.north.clone(),
        south: mw.south.clone(),
        west: mw.west.clone(),
        east: me.east.clone(),
    })
}

/// `M_N ⊗ M_S`: the operands share exactly `S(M_N) = N(M_S)`.
pub fn hcomp(mn: &MGraph, ms: &MGraph) -> Result<MGraph> {
    if mn.is_empty() {
        return Ok(ms.clone());
    }
    if ms.is_empty() {
        return Ok(mn.clone());
    }
    mn.check_frame()?;
    ms.check_frame()?;
    if mn.south != ms.north {
        return Err(Error::pre("S(M_N) and N(M_S) differ"));
    }
    let common_v: Vec<String> = mn.graph.vertex_set().intersection(&ms.graph.vertex_set()).cloned().collect();
    let shares_edge = ms.graph.edges().iter().any(|a| mn.graph.edge_index(a).is_some());
    if common_v.len() != 1 || shares_edge {
        return Err(Error::pre("the operands share more than one vertex"));
    }
    Ok(MGraph {
        graph: merge(&mn.graph, &ms.graph)?,
        north: mn.north.clone(),
        south: ms.south.clone(),
        west: [mn.west.clone(), ms.west.clone()].concat(),
        east: [mn.east.clone(), ms.east.clone()].concat(),
    })
}

/// Directed paths from `u` to `v`, as edge lists.
fn paths(g: &Graph, u: usize, v: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    fn go(g: &Graph, at: usize, v: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) -> Result<()> {
        if at == v {
            if out.len() == cap {
                return Err(Error::Cap(format!("more than {cap} paths")));
            }
            out.push(cur.clone());
            return Ok(());
        }
        for &a in g.out_edges(at) {
            cur.push(a);
            go(g, g.end(a, Side::E), v, cur, out, cap)?;
            cur.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(g, u, v, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}

fn restrict(m: &MGraph, edges: &BTreeSet<usize>, north: usize, south: usize, west: IdList, east: IdList) -> MGraph {
    let g = &m.graph;
    let es: Vec<usize> = edges.iter().copied().collect();
    let vs: Vec<usize> = es.iter().flat_map(|&a| [g.end(a, Side::W), g.end(a, Side::E)]).collect();
    MGraph {
        graph: g.subgraph(&vs, &es),
        north: Some(g.vertex_name(north).to_string()),
        south: Some(g.vertex_name(south).to_string()),
        west,
        east,
    }
}

/// Whether `m` is an M-graph, decided by searching for a decomposition
/// into basic and single-edge pieces under `∘` and `⊗`.
pub fn is_mgraph(m: &MGraph, caps: &Caps) -> Result<bool> {
    if m.check_frame().is_err() {
        return Ok(false);
    }
    if m.is_empty() {
        return Ok(true);
    }
    if !m.graph.is_acyclic() {
        return Ok(false);
    }
    decomposes(m, caps)
}

fn decomposes(m: &MGraph, caps: &Caps) -> Result<bool> {
    let g = &m.graph;
    let (n, s) = m.poles()?;
    let (n, s) = (g.vertex(n)?, g.vertex(s)?);
    let all: BTreeSet<usize> = (0..g.edge_count()).collect();
    let on_boundary: BTreeSet<&String> = m.west.iter().chain(&m.east).collect();
    // Every vertex lies between the poles.
    if (0..g.vertex_count()).any(|v| (v != n && g.in_edges(v).is_empty()) || (v != s && g.out_edges(v).is_empty())) {
        return Ok(false);
    }
    if g.edge_count() == 1 {
        return Ok(m.west == m.east);
    }
    if on_boundary.len() == g.edge_count() && m.paths_apart()? {
        return Ok(true);
    }
    let index = |l: &IdList| -> Vec<usize> { l.iter().map(|a| g.edge_index(a).unwrap()).collect() };
    let (wv, ev) = (m.path_vertices(Side::W)?, m.path_vertices(Side::E)?);

    // ⊗: cut at a vertex common to both paths.
    for (i, v) in wv.iter().enumerate().take(wv.len() - 1).skip(1) {
        let Some(j) = ev.iter().position(|u| u == v) else { continue };
        let cut = g.vertex(v)?;
        let north = reach_avoiding(g, n, cut);
        if north.contains(&s) {
            continue;
        }
        let (top, bottom): (BTreeSet<usize>, BTreeSet<usize>) = all.iter().partition(|&&a| {
            let (x, y) = (g.end(a, Side::W), g.end(a, Side::E));
            north.contains(&x) && x != cut || north.contains(&y) && y != cut
        });
        let mn = restrict(m, &top, n, cut, m.west[..i].to_vec(), m.east[..j].to_vec());
        let ms = restrict(m, &bottom, cut, s, m.west[i..].to_vec(), m.east[j..].to_vec());
        if decomposes(&mn, caps)? && decomposes(&ms, caps)? {
            return Ok(true);
        }
    }

    // ∘: a path P from N to S splitting the edges into a western and an
    // eastern part that meet along P.
    let (west, east) = (index(&m.west), index(&m.east));
    for p in paths(g, n, s, caps.semipaths)? {
        if p == west || p == east {
            continue;
        }
        let pv: BTreeSet<usize> = p.iter().flat_map(|&a| [g.end(a, Side::W), g.end(a, Side::E)]).collect();
        let pe: BTreeSet<usize> = p.iter().copied().collect();
        let pieces = pieces_off(g, &pe, &pv);
        let side_of = |piece: &BTreeSet<usize>| -> Option<Option<bool>> {
            let w = piece.iter().any(|a| west.contains(a));
            let e = piece.iter().any(|a| east.contains(a));
            match (w, e) {
                (true, true) => None,
                (true, false) => Some(Some(true)),
                (false, true) => Some(Some(false)),
                (false, false) => Some(None),
            }
        };
        let mut fixed = (BTreeSet::new(), BTreeSet::new());
        let mut free = Vec::new();
        let mut ok = true;
        for piece in &pieces {
            match side_of(piece) {
                None => ok = false,
                Some(Some(true)) => fixed.0.extend(piece),
                Some(Some(false)) => fixed.1.extend(piece),
                Some(None) => free.push(piece),
            }
        }
        if !ok || free.len() > 20 {
            continue;
        }
        let path: IdList = p.iter().map(|&a| g.edge_name(a).to_string()).collect();
        for mask in 0u32..1 << free.len() {
            let (mut w, mut e) = fixed.clone();
            for (k, piece) in free.iter().enumerate() {
                if mask >> k & 1 == 1 { w.extend(*piece) } else { e.extend(*piece) }
            }
            w.extend(&pe);
            e.extend(&pe);
            let mw = restrict(m, &w, n, s, m.west.clone(), path.clone());
            let me = restrict(m, &e, n, s, path.clone(), m.east.clone());
            if decomposes(&mw, caps)? && decomposes(&me, caps)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn reach_avoiding(g: &Graph, from: usize, avoid: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([from]);
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        if v == avoid {
            continue;
        }
        for &a in g.out_edges(v).iter().chain(g.in_edges(v)) {
            for u in [g.end(a, Side::W), g.end(a, Side::E)] {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
    }
    seen
}

/// Edges outside `pe`, grouped by connection through vertices outside `pv`.
fn pieces_off(g: &Graph, pe: &BTreeSet<usize>, pv: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    for start in (0..g.edge_count()).filter(|a| !pe.contains(a)) {
        if label.contains_key(&start) {
            continue;
        }
        let id = out.len();
        let mut piece = BTreeSet::new();
        let mut stack = vec![start];
        label.insert(start, id);
        while let Some(a) = stack.pop() {
            piece.insert(a);
            for v in [g.end(a, Side::W), g.end(a, Side::E)] {
                if pv.contains(&v) {
                    continue;
                }
                for &b in g.out_edges(v).iter().chain(g.in_edges(v)) {
                    if !pe.contains(&b) && !label.contains_key(&b) {
                        label.insert(b, id);
                        stack.push(b);
                    }
                }
            }
        }
        out.push(piece);
    }
    out
}

fn label(g: &Graph, v: usize) -> String {
    let names = |es: &[usize]| -> String {
        let set: BTreeSet<&str> = es.iter().map(|&a| g.edge_name(a)).collect();
        set.into_iter().collect::<Vec<_>>().join(",")
    };
    format!("({}|{})", names(g.in_edges(v)), names(g.out_edges(v)))
}

/// Renames every vertex to its `(ins|outs)` label.
fn canonical(m: MGraph) -> Result<MGraph> {
    if m.is_empty() {
        return Ok(m);
    }
    let g = &m.graph;
    let names: BTreeMap<String, String> =
        (0..g.vertex_count()).map(|v| (g.vertex_name(v).to_string(), label(g, v))).collect();
    Ok(MGraph {
        graph: g.rename_vertices(|v| names[v].clone())?,
        north: m.north.as_ref().map(|v| names[v].clone()),
        south: m.south.as_ref().map(|v| names[v].clone()),
        west: m.west,
        east: m.east,
    })
}

fn rename(m: &MGraph, map: &BTreeMap<String, String>) -> Result<MGraph> {
    let f = |v: &str| map.get(v).cloned().unwrap_or_else(|| v.to_string());
    Ok(MGraph {
        graph: m.graph.rename_vertices(f)?,
        north: m.north.as_deref().map(f),
        south: m.south.as_deref().map(f),
        west: m.west.clone(),
        east: m.east.clone(),
    })
}

fn chain(north: &str, south: &str, edges: &[String], inner: &str) -> Vec<(String, String, String)> {
    let vertex = |i: usize| match i {
        0 => north.to_string(),
        i if i == edges.len() => south.to_string(),
        i => format!("{inner}{i}"),
    };
    edges.iter().enumerate().map(|(i, a)| (a.clone(), vertex(i), vertex(i + 1))).collect()
}

/// The mandorla of a basic term.
pub fn mandorla(b: &Basic) -> Result<MGraph> {
    let mut edges = chain("N", "S", &b.w, "w");
    edges.extend(chain("N", "S", &b.e, "e"));
    let vertices: BTreeSet<String> = edges.iter().flat_map(|(_, v, w)| [v.clone(), w.clone()]).collect();
    let m = MGraph {
        graph: Graph::new(vertices, edges)?,
        north: Some("N".into()),
        south: Some("S".into()),
        west: b.w.clone(),
        east: b.e.clone(),
    };
    canonical(m)
}

/// The path of a unit term; empty for the empty list.
pub fn unit_path(l: &IdList) -> Result<MGraph> {
    if l.is_empty() {
        return Ok(MGraph::empty());
    }
    let edges = chain("N", "S", l, "p");
    let vertices: BTreeSet<String> = edges.iter().flat_map(|(_, v, w)| [v.clone(), w.clone()]).collect();
    canonical(MGraph {
        graph: Graph::new(vertices, edges)?,
        north: Some("N".into()),
        south: Some("S".into()),
        west: l.clone(),
        east: l.clone(),
    })
}

/// `μ(δ)` for a P2-term.
pub fn mu(t: &Term) -> Result<MGraph> {
    type_check(t, Calculus::S2)?;
    mu_unchecked(t)
}

fn mu_unchecked(t: &Term) -> Result<MGraph> {
    match t {
        Term::Basic(b) => mandorla(b),
        Term::Unit(l) => unit_path(l),
        Term::VComp(l, r) => {
            let (mw, me) = (mu_unchecked(l)?, mu_unchecked(r)?);
            if mw.is_empty() || me.is_empty() {
                return vcomp(&mw, &me);
            }
            let (pw, pe) = (mw.path_vertices(Side::E)?, me.path_vertices(Side::W)?);
            let tag = |k: usize| format!("#{k}");
            let mw = rename(&mw, &pw.iter().enumerate().map(|(k, v)| (v.clone(), tag(k))).collect())?;
            let me = rename(&me, &pe.iter().enumerate().map(|(k, v)| (v.clone(), tag(k))).collect())?;
            canonical(vcomp(&mw, &me)?)
        }
        Term::HComp(n, s) => {
            let (mn, ms) = (mu_unchecked(n)?, mu_unchecked(s)?);
            if mn.is_empty() || ms.is_empty() {
                return hcomp(&mn, &ms);
            }
            let joint = BTreeMap::from([(mn.south.clone().unwrap(), "#".to_string())]);
            let mn = rename(&mn, &joint)?;
            let ms = rename(&ms, &BTreeMap::from([(ms.north.clone().unwrap(), "#".to_string())]))?;
            canonical(hcomp(&mn, &ms)?)
        }
        Term::Box(..) => Err(Error::Type("μ interprets P2-terms".into())),
    }
}

/// `μ*(δ) = ⟨μ(δ), ρ(δ)⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuStar {
    pub mu: MGraph,
    pub rho: BTreeSet<Basic>,
}

pub fn mu_star(t: &Term) -> Result<MuStar> {
    Ok(MuStar { mu: mu(t)?, rho: t.rho() })
}

type Order = (IdList, IdList);

fn chain_orders(lists: &[&IdList]) -> Vec<Order> {
    let mut out = vec![(vec![], lists.iter().map(|l| l[0].clone()).collect())];
    for l in lists {
        out.extend(l.windows(2).map(|w| (vec![w[0].clone()], vec![w[1].clone()])));
    }
    out.push((lists.iter().map(|l| l[l.len() - 1].clone()).collect(), vec![]));
    out
}

fn take(orders: &mut Vec<Order>, f: impl Fn(&Order) -> bool) -> Result<Order> {
    let i = orders.iter().position(f).ok_or_else(|| Error::pre("μ edge orders lost a vertex"))?;
    Ok(orders.remove(i))
}

/// Top-to-bottom in- and out-orders at each vertex of `μ(δ)`, drawn with
/// `N` to the west and `W(δ)` along the top.
fn mu_orders(t: &Term) -> Result<Vec<Order>> {
    let has = |l: &IdList, a: &String| l.contains(a);
    match t {
        Term::Basic(b) => Ok(chain_orders(&[&b.w, &b.e])),
        Term::Unit(l) if l.is_empty() => Ok(vec![]),
        Term::Unit(l) => Ok(chain_orders(&[l])),
        Term::VComp(l, r) => {
            let (mut ow, mut oe) = (mu_orders(l)?, mu_orders(r)?);
            if ow.is_empty() || oe.is_empty() {
                return Ok([ow, oe].concat());
            }
            let path = type_check(l, Calculus::S2)?.le;
            let mut out = Vec::new();
            for k in 0..=path.len() {
                let at = |o: &Order| if k < path.len() { has(&o.1, &path[k]) } else { has(&o.0, &path[k - 1]) };
                let (w, e) = (take(&mut ow, at)?, take(&mut oe, at)?);
                let dedup = |a: IdList, b: IdList| -> IdList {
                    let mut v = a;
                    v.extend(b.into_iter().filter(|x| !path.contains(x)));
                    v
                };
                out.push((dedup(w.0, e.0), dedup(w.1, e.1)));
            }
            out.extend(ow);
            out.extend(oe);
            Ok(out)
        }
        Term::HComp(n, s) => {
            let (mut on, mut os) = (mu_orders(n)?, mu_orders(s)?);
            if on.is_empty() || os.is_empty() {
                return Ok([on, os].concat());
            }
            let (sink, _) = take(&mut on, |o| o.1.is_empty())?;
            let (_, source) = take(&mut os, |o| o.0.is_empty())?;
            on.push((sink, source));
            Ok([on, os].concat())
        }
        Term::Box(..) => Err(Error::Type("μ interprets P2-terms".into())),
    }
}

/// `μ(δ)` as a disk realization with meridians `[N]` and `[S]`: `W(δ)`
/// runs along the top, and every basic term bounds one inner face.
/// `None` for the empty graph.
pub fn realize_mu(t: &Term) -> Result<Option<DiskRealization>> {
    let m = mu(t)?;
    if m.is_empty() {
        return Ok(None);
    }
    let sorted = |l: &IdList| {
        let set: BTreeSet<&str> = l.iter().map(String::as_str).collect();
        set.into_iter().collect::<Vec<_>>().join(",")
    };
    let orders: Orders =
        mu_orders(t)?.into_iter().map(|(ins, outs)| (format!("({}|{})", sorted(&ins), sorted(&outs)), (ins, outs))).collect();
    let (n, s) = (m.north.clone().unwrap(), m.south.clone().unwrap());
    let r = DiskRealization::from_orders(m.graph, &orders, vec![n], vec![s])?;
    r.validate()?;
    Ok(Some(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::terms::eq_terms;

    #[test]
    fn atoms() {
        assert!(mu(&Term::unit::<&str>(&[])).unwrap().is_empty());
        let p = mu(&Term::unit(&["a1", "a2", "a3"])).unwrap();
        assert_eq!((p.graph.vertex_count(), p.graph.edge_count()), (4, 3));
        assert_eq!(p.north.as_deref(), Some("(|a1)"));
        assert_eq!(p.path_vertices(Side::W).unwrap(), ["(|a1)", "(a1|a2)", "(a2|a3)", "(a3|)"]);
        let b = mu(&Term::basic("p", &["a1", "a2", "a3"], &["b1", "b2", "b3", "b4"])).unwrap();
        assert_eq!((b.graph.vertex_count(), b.graph.edge_count()), (7, 7));
        assert_eq!(b.south.as_deref(), Some("(a3,b4|)"));
        assert!(b.paths_apart().unwrap());
    }

    #[test]
    fn composition_clauses() {
        let caps = Caps::default();
        let e = MGraph::empty();
        let m = mu(&Term::basic("p", &["a"], &["b", "c"])).unwrap();
        assert_eq!(hcomp(&e, &m).unwrap(), m);
        assert_eq!(hcomp(&m, &e).unwrap(), m);
        assert!(vcomp(&e, &m).is_err() && vcomp(&m, &e).is_err());
        assert!(vcomp(&e, &e).unwrap().is_empty());
        // Two mandorlas sharing the path b c.
        let t = Term::vcomp(Term::basic("p", &["a"], &["b", "c"]), Term::basic("q", &["b", "c"], &["d"]));
        let two = mu(&t).unwrap();
        assert_eq!((two.graph.vertex_count(), two.graph.edge_count()), (3, 4));
        assert!(is_mgraph(&two, &caps).unwrap());
        // Disjoint operands cannot be composed vertically.
        assert!(vcomp(&m, &mu(&Term::basic("q", &["x"], &["y"])).unwrap()).is_err());
    }

    #[test]
    fn gamma() {
        let caps = Caps::default();
        let s = mu_star(&fixtures::gamma()).unwrap();
        assert_eq!(s.rho.len(), 3);
        let g = &s.mu.graph;
        assert_eq!(g.edge_count(), 14);
        // Three inner faces on a sphere with the outer one: V - E + F = 2.
        assert_eq!(g.vertex_count() + 4, 14 + 2);
        assert_eq!(s.mu.west.len(), 7);
        assert!(is_mgraph(&s.mu, &caps).unwrap());
        for v in 0..g.vertex_count() {
            assert_eq!(g.vertex_name(v), label(g, v));
        }
    }

    #[test]
    fn rho_separates() {
        // Same picture, different basics.
        let t1 = Term::basic("p", &["a"], &["b"]);
        let t2 = Term::basic("q", &["a"], &["b"]);
        assert_eq!(mu(&t1).unwrap(), mu(&t2).unwrap());
        assert!(!eq_terms(&t1, &t2, Calculus::S2).unwrap());
    }

    #[test]
    fn non_mgraphs() {
        let caps = Caps::default();
        let mut m = mu(&Term::basic("p", &["a", "b"], &["c"])).unwrap();
        assert!(is_mgraph(&m, &caps).unwrap());
        m.east = m.west.clone();
        assert!(!is_mgraph(&m, &caps).unwrap());
        // A dangling extra edge is not between the poles.
        let g = Graph::new(["n", "s", "x"], [("a", "n", "s"), ("b", "n", "s"), ("c", "s", "x")]).unwrap();
        let m = MGraph { graph: g, north: Some("n".into()), south: Some("s".into()), west: vec!["a".into()], east: vec!["b".into()] };
        assert!(!is_mgraph(&m, &caps).unwrap());
    }

    #[test]
    fn basics_bound_the_faces() {
        use crate::geometry::disk::faces;
        let g = fixtures::gamma();
        let r = realize_mu(&g).unwrap().unwrap();
        let mut got: Vec<(IdList, IdList)> = faces(&r)
            .unwrap()
            .into_iter()
            .filter(|f| !f.outer)
            .map(|f| {
                let b = f.bipolar.unwrap();
                (b.north, b.south)
            })
            .collect();
        got.sort();
        let mut want: Vec<(IdList, IdList)> = g.basics().into_iter().map(|b| (b.w.clone(), b.e.clone())).collect();
        want.sort();
        assert_eq!(got, want);
        assert!(realize_mu(&Term::unit::<&str>(&[])).unwrap().is_none());
        assert!(realize_mu(&Term::unit(&["a"])).unwrap().is_some());
    }

    #[test]
    fn dual_interior_is_eta() {
        use crate::geometry::{closure::d1_interior, dual::dual};
        use crate::terms::{interp::eta, translate::t1};
        let g = fixtures::gamma();
        let d = dual(&realize_mu(&g).unwrap().unwrap()).unwrap();
        let want = eta(&t1(&g).unwrap()).unwrap().to_graph().unwrap();
        assert!(d1_interior(&d.graph).unwrap().is_isomorphic(&want));
    }
}
