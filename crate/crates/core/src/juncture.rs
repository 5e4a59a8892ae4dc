//! Removing inner edges, cutsets and cocycles, the juncture `□` and its
//! inverse, cutting through a cocycle.

use std::collections::{BTreeMap, BTreeSet};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};

/// Removes a set of inner edges, keeping every vertex.
pub fn remove_edges(d: &Graph, s: &[usize]) -> Result<Graph> {
    for &a in s {
        if !d.is_inner_edge(a) {
            return Err(Error::pre(format!("{} is not an inner edge", d.edge_name(a))));
        }
    }
    let keep: Vec<usize> = (0..d.edge_count()).filter(|a| !s.contains(a)).collect();
    let all: Vec<usize> = (0..d.vertex_count()).collect();
    Ok(d.subgraph(&all, &keep))
}

pub fn edge_indices(d: &Graph, names: &[impl AsRef<str>]) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = names.iter().map(|n| d.edge(n.as_ref())).collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutsetKind {
    NotCutset,
    Cutset,
    StrictCutset,
    Cocycle,
}

/// The components left by removing `S`, and which removed edges run between
/// which of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentialGraph {
    /// Vertex indices of the host graph, one list per component, ordered by
    /// smallest member.
    pub components: Vec<Vec<usize>>,
    /// Component of each host vertex.
    pub label: Vec<usize>,
    /// `(i, j)` arcs with `i != j`.
    pub arcs: BTreeSet<(usize, usize)>,
}

impl ComponentialGraph {
    pub fn is_acyclic(&self) -> bool {
        let n = self.components.len();
        let mut indeg = vec![0; n];
        for &(_, j) in &self.arcs {
            indeg[j] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = ready.pop() {
            seen += 1;
            for &(x, j) in &self.arcs {
                if x == i {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        ready.push(j);
                    }
                }
            }
        }
        seen == n
    }

    pub fn is_weakly_connected(&self) -> bool {
        let n = self.components.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for &(x, y) in &self.arcs {
                for (p, q) in [(x, y), (y, x)] {
                    if p == i && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn cutset_classify(d: &Graph, s: &[usize]) -> Result<(CutsetKind, ComponentialGraph)> {
    let removed = remove_edges(d, s)?;
    let (count, label) = removed.component_labels();
    let mut components = vec![Vec::new(); count];
    for (v, &c) in label.iter().enumerate() {
        components[c].push(v);
    }
    let mut arcs = BTreeSet::new();
    let mut every_edge_connects = true;
    for &a in s {
        let (i, j) = (label[d.end(a, Side::W)], label[d.end(a, Side::E)]);
        if i == j {
            every_edge_connects = false;
        } else {
            arcs.insert((i, j));
        }
    }
    let cg = ComponentialGraph { components, label, arcs };
    let kind = if count < 2 {
        CutsetKind::NotCutset
    } else if !every_edge_connects || !cg.is_acyclic() {
        CutsetKind::Cutset
    } else if count == 2 {
        CutsetKind::Cocycle
    } else {
        CutsetKind::StrictCutset
    };
    Ok((kind, cg))
}

/// Every cocycle, as sorted edge-index sets in lexicographic order of their
/// bitmasks. Subsets are enumerated directly; a subset leaving one
/// component is skipped before any further work.
pub fn enumerate_cocycles(d: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    d.require_dgraph()?;
    let inner = d.inner_edges();
    if inner.len() > caps.inner_edges {
        return Err(Error::Cap(format!("{} inner edges exceed the bound {}", inner.len(), caps.inner_edges)));
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << inner.len()) {
        let s: Vec<usize> = (0..inner.len()).filter(|i| mask >> i & 1 == 1).map(|i| inner[i]).collect();
        if cutset_classify(d, &s)?.0 == CutsetKind::Cocycle {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Some cocycle containing edge `a`, the least in enumeration order.
pub fn cocycle_containing(d: &Graph, a: usize, caps: &Caps) -> Result<Option<Vec<usize>>> {
    Ok(enumerate_cocycles(d, caps)?.into_iter().find(|c| c.contains(&a)))
}

/// `D_W □ D_E`.
pub fn juncture(dw: &Graph, de: &Graph) -> Result<Graph> {
    let c: Vec<&String> = dw.edges().iter().filter(|a| de.edge_index(a).is_some()).collect();
    if c.is_empty() {
        return Err(Error::pre("juncture: C empty"));
    }
    let mut vc = BTreeSet::new();
    for a in &c {
        let (ia, ja) = (dw.edge_index(a).unwrap(), de.edge_index(a).unwrap());
        let (ew, we) = (dw.vertex_name(dw.end(ia, Side::E)), de.vertex_name(de.end(ja, Side::W)));
        if ew != we {
            return Err(Error::pre(format!("juncture: {a} ends at {ew} in the west operand but starts at {we} in the east")));
        }
        if !dw.is_x_edge(ia, Side::E) {
            return Err(Error::pre(format!("juncture: {a} is not an E-edge of the west operand")));
        }
        if !de.is_x_edge(ja, Side::W) {
            return Err(Error::pre(format!("juncture: {a} is not a W-edge of the east operand")));
        }
        vc.insert(ew.to_string());
    }
    let shared: BTreeSet<String> = dw.vertex_set().intersection(&de.vertex_set()).cloned().collect();
    if shared != vc {
        return Err(Error::pre("juncture: the operands share vertices other than those of C"));
    }
    let vertices: BTreeSet<String> = dw.vertex_set().union(&de.vertex_set()).filter(|v| !vc.contains(*v)).cloned().collect();
    let mut edges: BTreeMap<String, (String, String)> = BTreeMap::new();
    for (a, w, e) in dw.edge_triples() {
        edges.insert(a.to_string(), (w.to_string(), e.to_string()));
    }
    for (a, w, e) in de.edge_triples() {
        edges.entry(a.to_string()).and_modify(|slot| slot.1 = e.to_string()).or_insert((w.to_string(), e.to_string()));
    }
    Graph::from_named(vertices, edges)
}

/// Fresh identifier based on `base`, avoiding `taken`.
pub fn fresh(base: String, taken: &dyn Fn(&str) -> bool) -> String {
    if !taken(&base) {
        return base;
    }
    (1..).map(|i| format!("{base}_{i}")).find(|n| !taken(n)).expect("unbounded")
}

/// Cuts `d` through the cocycle `c`, adding the vertex `v_a` for each
/// `a ∈ c` as the new E-end in the west part and W-end in the east part.
pub fn cut_through(d: &Graph, c: &[usize]) -> Result<(Graph, Graph)> {
    d.require_dgraph()?;
    let (kind, cg) = cutset_classify(d, c)?;
    if kind != CutsetKind::Cocycle {
        return Err(Error::pre("cut_through needs a cocycle"));
    }
    let &(west, _) = cg.arcs.iter().next().expect("a cocycle has one arc");
    let taken = |n: &str| d.vertex_index(n).is_some() || d.edge_index(n).is_some();
    let fresh_names: BTreeMap<usize, String> = c.iter().map(|&a| (a, fresh(format!("v_{}", d.edge_name(a)), &taken))).collect();
    let mut parts = Vec::new();
    for side in [Side::W, Side::E] {
        let want = if side == Side::W { west } else { 1 - west };
        let mut vertices: BTreeSet<String> =
            cg.components[want].iter().map(|&v| d.vertex_name(v).to_string()).collect();
        let mut edges = BTreeMap::new();
        for a in 0..d.edge_count() {
            let (w, e) = (d.end(a, Side::W), d.end(a, Side::E));
            if let Some(fresh) = fresh_names.get(&a) {
                vertices.insert(fresh.clone());
                let pair = match side {
                    Side::W => (d.vertex_name(w).to_string(), fresh.clone()),
                    Side::E => (fresh.clone(), d.vertex_name(e).to_string()),
                };
                edges.insert(d.edge_name(a).to_string(), pair);
            } else if cg.label[w] == want {
                edges.insert(d.edge_name(a).to_string(), (d.vertex_name(w).to_string(), d.vertex_name(e).to_string()));
            }
        }
        parts.push(Graph::from_named(vertices, edges)?);
    }
    let de = parts.pop().unwrap();
    let dw = parts.pop().unwrap();
    Ok((dw, de))
}

/// Adds a new source before the unique W-vertex and a new sink after the
/// unique E-vertex.
pub fn source_sink_augment(d: &Graph) -> Result<Graph> {
    let (ws, es) = (d.x_vertices(Side::W), d.x_vertices(Side::E));
    if ws.len() != 1 || es.len() != 1 || ws == es {
        return Err(Error::pre("augmentation needs a unique source and a unique sink"));
    }
    let taken = |n: &str| d.vertex_index(n).is_some() || d.edge_index(n).is_some();
    let s_new = fresh("s_dag".into(), &taken);
    let t_new = fresh("t_dag".into(), &taken);
    let a_s = fresh("a_s_dag".into(), &|n: &str| taken(n) || n == s_new || n == t_new);
    let a_t = fresh("a_t_dag".into(), &|n: &str| taken(n) || n == s_new || n == t_new || n == a_s);
    let mut vertices = d.vertex_set();
    vertices.insert(s_new.clone());
    vertices.insert(t_new.clone());
    let mut edges = d.named_edges();
    edges.insert(a_s, (s_new, d.vertex_name(ws[0]).to_string()));
    edges.insert(a_t, (d.vertex_name(es[0]).to_string(), t_new));
    Graph::from_named(vertices, edges)
}
