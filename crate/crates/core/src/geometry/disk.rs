//! Disk realizations as rotation systems.
//!
//! A realization fixes, for every vertex, the clockwise cyclic order of
//! the edge-ends around it, together with the north-to-south order of the
//! vertices on the W- and E-meridians. Faces are traced so that the face
//! lies on the left of every step: inner faces run counterclockwise, so a
//! bipolar face walks its south path forward and its north path backward.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::juncture::{cutset_classify, fresh, CutsetKind};
use crate::lists::{self, IdList};
use crate::pgraph::Construction;

/// An edge-end: `end` is the side of the edge at which the dart sits, so
/// `(a, W)` is at the tail of `a` and leaves it forward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub end: Side,
}

impl Dart {
    pub fn new(edge: usize, end: Side) -> Dart {
        Dart { edge, end }
    }

    pub fn forward(self) -> bool {
        self.end == Side::W
    }

    fn vertex(self, g: &Graph) -> usize {
        g.end(self.edge, self.end)
    }

    fn twin(self) -> Dart {
        Dart { edge: self.edge, end: self.end.bar() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskRealization {
    pub graph: Graph,
    /// Clockwise edge-ends around each vertex, indexed like the graph.
    pub rotation: Vec<Vec<Dart>>,
    /// W- and E-meridian vertices from north to south.
    pub lw: IdList,
    pub le: IdList,
}

/// Per-vertex orders, north to south, of incoming and outgoing edges.
pub type Orders = BTreeMap<String, (IdList, IdList)>;

impl DiskRealization {
    /// Builds the rotation of an eastward-growing drawing: outgoing edges
    /// top to bottom, then incoming ones bottom to top.
    pub(crate) fn from_orders(graph: Graph, orders: &Orders, lw: IdList, le: IdList) -> Result<DiskRealization> {
        let mut rotation = Vec::with_capacity(graph.vertex_count());
        for v in 0..graph.vertex_count() {
            let (ins, outs) = orders
                .get(graph.vertex_name(v))
                .ok_or_else(|| Error::pre(format!("no edge order at {}", graph.vertex_name(v))))?;
            let mut r: Vec<Dart> = outs.iter().map(|a| Ok(Dart::new(graph.edge(a)?, Side::W))).collect::<Result<_>>()?;
            for a in ins.iter().rev() {
                r.push(Dart::new(graph.edge(a)?, Side::E));
            }
            rotation.push(r);
        }
        Ok(DiskRealization { graph, rotation, lw, le })
    }

    pub fn vertex_names(&self, x: Side) -> &IdList {
        if x == Side::W {
            &self.lw
        } else {
            &self.le
        }
    }

    fn next(&self, pos: &BTreeMap<Dart, usize>, d: Dart) -> Dart {
        let t = d.twin();
        let r = &self.rotation[t.vertex(&self.graph)];
        r[(pos[&t] + 1) % r.len()]
    }

    fn positions(&self) -> BTreeMap<Dart, usize> {
        self.rotation.iter().flat_map(|r| r.iter().enumerate().map(|(i, &d)| (d, i))).collect()
    }

    /// Traces every face as the cyclic list of darts it leaves from.
    pub fn trace(&self) -> Vec<Vec<Dart>> {
        let pos = self.positions();
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for r in &self.rotation {
            for &start in r {
                if seen.contains(&start) {
                    continue;
                }
                let mut walk = Vec::new();
                let mut d = start;
                while seen.insert(d) {
                    walk.push(d);
                    d = self.next(&pos, d);
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// The dart opening the face west of the first W-meridian vertex.
    fn outer_dart(&self) -> Result<Dart> {
        let first = self.lw.first().ok_or_else(|| Error::pre("a realization needs a W-meridian vertex"))?;
        self.rotation[self.graph.vertex(first)?].first().copied().ok_or_else(|| Error::pre("isolated meridian vertex"))
    }

    fn check_rotation(&self) -> Result<()> {
        let g = &self.graph;
        if self.rotation.len() != g.vertex_count() {
            return Err(Error::pre("rotation must list every vertex"));
        }
        for v in 0..g.vertex_count() {
            let mut want: Vec<Dart> = g.out_edges(v).iter().map(|&a| Dart::new(a, Side::W)).collect();
            want.extend(g.in_edges(v).iter().map(|&a| Dart::new(a, Side::E)));
            want.sort();
            let mut have = self.rotation[v].clone();
            have.sort();
            if have != want {
                return Err(Error::pre(format!("rotation at {} does not list its edge-ends", g.vertex_name(v))));
            }
        }
        Ok(())
    }

    /// Whether outgoing and incoming ends form one block each around
    /// every vertex.
    pub fn is_bimodal(&self) -> bool {
        self.rotation.iter().all(|r| (0..r.len()).filter(|&i| r[i].forward() != r[(i + 1) % r.len()].forward()).count() <= 2)
    }

    /// Checks the rotation, the meridians, planarity of the source-sink
    /// closure by Euler's formula, and that both fans of the closure open
    /// onto its outer face.
    pub fn validate(&self) -> Result<()> {
        self.check_rotation()?;
        if !self.is_bimodal() {
            return Err(Error::pre("rotation is not bimodal"));
        }
        let g = &self.graph;
        for x in [Side::W, Side::E] {
            let names: BTreeSet<String> = g.x_vertices(x).into_iter().map(|v| g.vertex_name(v).to_string()).collect();
            if !lists::is_permutation_of(self.vertex_names(x), &names) {
                return Err(Error::pre(format!("L_{x} must list the {x}-vertices")));
            }
        }
        if g.is_empty() {
            return Ok(());
        }
        let c = self.closure()?;
        let faces = c.trace();
        if !c.graph.is_weakly_connected() {
            return Err(Error::pre("closure is not connected"));
        }
        let euler = c.graph.vertex_count() as i64 - c.graph.edge_count() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::pre(format!("closure fails Euler's formula: V - E + F = {euler}")));
        }
        let face_of = |d: Dart| faces.iter().position(|f| f.contains(&d)).expect("every dart is traced");
        let (s, t) = (c.graph.vertex(&c.lw[0])?, c.graph.vertex(&c.le[0])?);
        if face_of(c.rotation[s][0]) != face_of(c.rotation[t][0]) {
            return Err(Error::pre("meridians are not in clockwise order N, E, S, W"));
        }
        Ok(())
    }

    /// Source-sink closure: a source fanned to the W-meridian and a sink
    /// collecting the E-meridian, in meridian order.
    pub fn closure(&self) -> Result<DiskRealization> {
        let g = &self.graph;
        if g.is_empty() {
            return Err(Error::pre("the empty graph has no source-sink closure"));
        }
        let taken = |n: &str| g.vertex_index(n).is_some() || g.edge_index(n).is_some();
        let s = fresh("s".into(), &taken);
        let t = fresh("t".into(), &|n| taken(n) || n == s);
        let mut used: BTreeSet<String> = [s.clone(), t.clone()].into();
        let mut name = |base: String| {
            let n = fresh(base, &|n| taken(n) || used.contains(n));
            used.insert(n.clone());
            n
        };
        let mut orders = self.orders();
        let mut vertices = g.vertex_set();
        vertices.insert(s.clone());
        vertices.insert(t.clone());
        let mut edges: Vec<(String, String, String)> = g.edge_triples().map(|(a, w, e)| (a.into(), w.into(), e.into())).collect();
        let mut fan_s = Vec::new();
        for u in &self.lw {
            let a = name(format!("{s}_{u}"));
            edges.push((a.clone(), s.clone(), u.clone()));
            orders.get_mut(u).expect("meridian vertex").0.push(a.clone());
            fan_s.push(a);
        }
        let mut fan_t = Vec::new();
        for u in &self.le {
            let a = name(format!("{t}_{u}"));
            edges.push((a.clone(), u.clone(), t.clone()));
            orders.get_mut(u).expect("meridian vertex").1.push(a.clone());
            fan_t.push(a);
        }
        orders.insert(s.clone(), (vec![], fan_s));
        orders.insert(t.clone(), (fan_t, vec![]));
        DiskRealization::from_orders(Graph::new(vertices, edges)?, &orders, vec![s], vec![t])
    }

    /// Recovers the north-to-south orders from a bimodal rotation.
    pub fn orders(&self) -> Orders {
        let g = &self.graph;
        (0..g.vertex_count())
            .map(|v| {
                let r = &self.rotation[v];
                // Start right after the last incoming end, so outgoing ends come first.
                let k = (0..r.len()).find(|&i| !r[i].forward() && r[(i + 1) % r.len()].forward()).map_or(0, |i| i + 1);
                let cyc: Vec<Dart> = (0..r.len()).map(|i| r[(k + i) % r.len()]).collect();
                let outs = cyc.iter().filter(|d| d.forward()).map(|d| g.edge_name(d.edge).to_string()).collect();
                let ins = cyc.iter().rev().filter(|d| !d.forward()).map(|d| g.edge_name(d.edge).to_string()).collect();
                (g.vertex_name(v).to_string(), (ins, outs))
            })
            .collect()
    }
}

/// Realizes the root of a construction: leaves are fans, juncture keeps
/// the orders at inner vertices and takes the root lists as meridians.
pub fn realize(k: &Construction) -> Result<DiskRealization> {
    let orders = realize_orders(k)?;
    let r = DiskRealization::from_orders(k.graph.clone(), &orders, k.lw.clone(), k.le.clone())?;
    r.validate()?;
    Ok(r)
}

fn realize_orders(k: &Construction) -> Result<Orders> {
    let g = &k.graph;
    match &k.parts {
        None => {
            let inner = g.inner_vertices();
            let [v] = inner[..] else { return Err(Error::pre("construction leaves are basic")) };
            let edge_at = |u: &String| -> Result<String> {
                let u = g.vertex(u)?;
                let a = g.out_edges(u).first().or_else(|| g.in_edges(u).first()).ok_or_else(|| Error::pre("isolated vertex"))?;
                Ok(g.edge_name(*a).to_string())
            };
            let ins: IdList = k.lw.iter().map(edge_at).collect::<Result<_>>()?;
            let outs: IdList = k.le.iter().map(edge_at).collect::<Result<_>>()?;
            let mut orders = Orders::new();
            for (u, a) in k.lw.iter().zip(&ins) {
                orders.insert(u.clone(), (vec![], vec![a.clone()]));
            }
            for (u, a) in k.le.iter().zip(&outs) {
                orders.insert(u.clone(), (vec![a.clone()], vec![]));
            }
            orders.insert(g.vertex_name(v).to_string(), (ins, outs));
            Ok(orders)
        }
        Some(parts) => {
            let (w, e) = (realize_orders(&parts.0)?, realize_orders(&parts.1)?);
            let mut orders: Orders = w.into_iter().chain(e).collect();
            orders.retain(|v, _| g.vertex_index(v).is_some());
            Ok(orders)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipolar {
    pub w: String,
    pub v: String,
    pub north: IdList,
    pub south: IdList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceReport {
    /// Edges in walking order; a leading `-` marks a backward step.
    pub walk: Vec<String>,
    pub outer: bool,
    pub bipolar: Option<Bipolar>,
    #[serde(skip)]
    pub darts: Vec<Dart>,
}

/// Splits a closed walk into one forward and one backward run, the
/// forward run first; `None` if it has any other shape.
pub(crate) fn two_runs(darts: &[Dart]) -> Option<(Vec<Dart>, Vec<Dart>)> {
    let n = darts.len();
    let starts: Vec<usize> = (0..n).filter(|&i| darts[i].forward() && !darts[(i + n - 1) % n].forward()).collect();
    let [k] = starts[..] else { return None };
    let cyc: Vec<Dart> = (0..n).map(|i| darts[(k + i) % n]).collect();
    let split = cyc.iter().position(|d| !d.forward())?;
    let (f, b) = cyc.split_at(split);
    (!b.iter().any(|d| d.forward())).then(|| (f.to_vec(), b.to_vec()))
}

fn bipolar(g: &Graph, darts: &[Dart]) -> Option<Bipolar> {
    let (south, back) = two_runs(darts)?;
    let vertices: BTreeSet<usize> = darts.iter().map(|d| d.vertex(g)).collect();
    if vertices.len() != darts.len() {
        return None;
    }
    let names = |ds: &mut dyn Iterator<Item = &Dart>| ds.map(|d| g.edge_name(d.edge).to_string()).collect::<IdList>();
    Some(Bipolar {
        w: g.vertex_name(south[0].vertex(g)).to_string(),
        v: g.vertex_name(back[0].vertex(g)).to_string(),
        north: names(&mut back.iter().rev()),
        south: names(&mut south.iter()),
    })
}

/// The faces of a connected realization, with the outer face marked and
/// bipolarity reported for the inner ones.
pub fn faces(r: &DiskRealization) -> Result<Vec<FaceReport>> {
    r.check_rotation()?;
    let g = &r.graph;
    if g.is_empty() || !g.is_weakly_connected() {
        return Err(Error::pre("faces are traced on a non-empty connected graph"));
    }
    let walks = r.trace();
    let euler = g.vertex_count() as i64 - g.edge_count() as i64 + walks.len() as i64;
    if euler != 2 {
        return Err(Error::pre(format!("rotation is not planar: V - E + F = {euler}")));
    }
    let outer = r.outer_dart()?;
    Ok(walks
        .into_iter()
        .map(|darts| {
            let is_outer = darts.contains(&outer);
            let walk = darts
                .iter()
                .map(|d| format!("{}{}", if d.forward() { "" } else { "-" }, g.edge_name(d.edge)))
                .collect();
            let bipolar = if is_outer { None } else { bipolar(g, &darts) };
            FaceReport { walk, outer: is_outer, bipolar, darts }
        })
        .collect())
}

/// `L(C)`: the edges of a cocycle ordered through the chain of inner
/// faces that contain them, north to south.
pub fn cocycle_order(r: &DiskRealization, c: &[usize]) -> Result<IdList> {
    let g = &r.graph;
    let (kind, _) = cutset_classify(g, c)?;
    if kind != CutsetKind::Cocycle {
        return Err(Error::pre("not a cocycle"));
    }
    if let [a] = c {
        return Ok(vec![g.edge_name(*a).to_string()]);
    }
    let names: BTreeSet<&str> = c.iter().map(|&a| g.edge_name(a)).collect();
    let mut links: BTreeMap<String, String> = BTreeMap::new();
    for f in faces(r)?.into_iter().filter(|f| !f.outer) {
        let b = f.bipolar.as_ref().ok_or_else(|| Error::pre("inner face is not bipolar"))?;
        let pick = |p: &IdList| p.iter().filter(|a| names.contains(a.as_str())).cloned().collect::<Vec<_>>();
        match (&pick(&b.north)[..], &pick(&b.south)[..]) {
            ([], []) => {}
            ([n], [s]) => {
                links.insert(n.clone(), s.clone());
            }
            _ => return Err(Error::pre("a cocyclic face must hold one cocycle edge on each path")),
        }
    }
    let targets: BTreeSet<&String> = links.values().collect();
    let starts: Vec<&String> = links.keys().filter(|a| !targets.contains(a)).collect();
    let [first] = starts[..] else { return Err(Error::pre("cocyclic faces do not form a chain")) };
    let mut out = vec![first.clone()];
    while let Some(next) = links.get(out.last().unwrap()) {
        out.push(next.clone());
    }
    if out.len() != c.len() {
        return Err(Error::pre("cocyclic faces do not form a chain"));
    }
    Ok(out)
}
