//! Finite directed multigraphs with west/east endpoint maps.
//!
//! Vertices and edges are opaque string identifiers kept in sorted order, so
//! indices are stable for a given graph and every traversal is
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// One of the two sides of a graph. `W` is the source end of an edge and
/// `E` its target end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    W,
    E,
}

impl Side {
    /// The opposite side, written with a bar over the letter in the theory.
    pub fn bar(self) -> Side {
        match self {
            Side::W => Side::E,
            Side::E => Side::W,
        }
    }

    pub fn parse(s: &str) -> Result<Side> {
        match s {
            "W" | "w" => Ok(Side::W),
            "E" | "e" => Ok(Side::E),
            other => Err(Error::Parse(format!("side must be W or E, got `{other}`"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::W => "W",
            Side::E => "E",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    WVertex,
    EVertex,
    Inner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    WEdge,
    EEdge,
    Inner,
}

/// Everything `classify` reports about a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// An isolated vertex is both a W-vertex and an E-vertex; it is reported
    /// as `WVertex`. The exact predicates are [`Graph::is_x_vertex`].
    pub vertex_class: Vec<VertexClass>,
    /// An edge that is both a W-edge and an E-edge is reported as `WEdge`.
    pub edge_class: Vec<EdgeClass>,
    pub w_functional: Vec<bool>,
    pub e_functional: Vec<bool>,
    pub acyclic: bool,
    pub weakly_connected: bool,
    pub w_e_functional: bool,
    pub incidented: bool,
    pub has_inner_vertex: bool,
    pub has_loop: bool,
}

impl Classification {
    pub fn is_dgraph(&self) -> bool {
        self.acyclic && self.w_e_functional && self.weakly_connected && self.has_inner_vertex
    }
}

/// A distinguished finite graph `W, E : A -> V`.
#[derive(Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<String>,
    w: Vec<usize>,
    e: Vec<usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.w == other.w
            && self.e == other.e
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.edges.hash(state);
        self.w.hash(state);
        self.e.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = (0..self.edges.len())
            .map(|a| format!("{}:{}->{}", self.edges[a], self.vertices[self.w[a]], self.vertices[self.e[a]]))
            .collect();
        f.debug_struct("Graph").field("vertices", &self.vertices).field("edges", &edges).finish()
    }
}

impl Graph {
    pub fn empty() -> Graph {
        Graph { vertices: vec![], edges: vec![], w: vec![], e: vec![], out_adj: vec![], in_adj: vec![] }
    }

    /// Validates raw input: identifiers unique, vertex and edge names
    /// disjoint, endpoints declared.
    pub fn new<V, S>(vertices: V, edges: impl IntoIterator<Item = (S, S, S)>) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: Into<String>,
    {
        let mut vs: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vs.sort();
        if let Some(d) = vs.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::Duplicate(d[0].clone()));
        }
        let mut es: Vec<(String, String, String)> =
            edges.into_iter().map(|(a, w, e)| (a.into(), w.into(), e.into())).collect();
        es.sort();
        if let Some(d) = es.windows(2).find(|p| p[0].0 == p[1].0) {
            return Err(Error::Duplicate(d[0].0.clone()));
        }
        let lookup = |name: &str| vs.binary_search_by(|v| v.as_str().cmp(name)).ok();
        let mut w = Vec::with_capacity(es.len());
        let mut e = Vec::with_capacity(es.len());
        for (a, wv, ev) in &es {
            if lookup(a).is_some() {
                return Err(Error::NameCollision(a.clone()));
            }
            w.push(lookup(wv).ok_or_else(|| Error::UnknownVertex(wv.clone()))?);
            e.push(lookup(ev).ok_or_else(|| Error::UnknownVertex(ev.clone()))?);
        }
        let edges = es.into_iter().map(|(a, _, _)| a).collect();
        Ok(Graph::assemble(vs, edges, w, e))
    }

    fn assemble(vertices: Vec<String>, edges: Vec<String>, w: Vec<usize>, e: Vec<usize>) -> Graph {
        let mut out_adj = vec![Vec::new(); vertices.len()];
        let mut in_adj = vec![Vec::new(); vertices.len()];
        for a in 0..edges.len() {
            out_adj[w[a]].push(a);
            in_adj[e[a]].push(a);
        }
        Graph { vertices, edges, w, e, out_adj, in_adj }
    }

    /// Builds a graph from name triples that are already known to be
    /// consistent (internal use after transformations).
    pub(crate) fn from_named(vertices: BTreeSet<String>, edges: BTreeMap<String, (String, String)>) -> Result<Graph> {
        Graph::new(vertices, edges.into_iter().map(|(a, (w, e))| (a, w, e)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_name(&self, a: usize) -> &str {
        &self.edges[a]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge(&self, name: &str) -> Result<usize> {
        self.edge_index(name).ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    /// `X(a)`: the endpoint of `a` on side `x`.
    pub fn end(&self, a: usize, x: Side) -> usize {
        match x {
            Side::W => self.w[a],
            Side::E => self.e[a],
        }
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Edges `a` with `X(a) = v`.
    pub fn edges_at(&self, v: usize, x: Side) -> &[usize] {
        match x {
            Side::W => &self.out_adj[v],
            Side::E => &self.in_adj[v],
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_adj[v].len() + self.in_adj[v].len()
    }

    /// No edge has `v` as its end on the opposite side.
    pub fn is_x_vertex(&self, v: usize, x: Side) -> bool {
        self.edges_at(v, x.bar()).is_empty()
    }

    pub fn is_inner_vertex(&self, v: usize) -> bool {
        !self.is_x_vertex(v, Side::W) && !self.is_x_vertex(v, Side::E)
    }

    /// `X(D)`, in index order.
    pub fn x_vertices(&self, x: Side) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.is_x_vertex(v, x)).collect()
    }

    pub fn inner_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.is_inner_vertex(v)).collect()
    }

    pub fn is_x_edge(&self, a: usize, x: Side) -> bool {
        self.is_x_vertex(self.end(a, x), x)
    }

    pub fn is_inner_edge(&self, a: usize) -> bool {
        !self.is_x_edge(a, Side::W) && !self.is_x_edge(a, Side::E)
    }

    /// `X_e(D)`, the X-edges.
    pub fn x_edges(&self, x: Side) -> Vec<usize> {
        (0..self.edges.len()).filter(|&a| self.is_x_edge(a, x)).collect()
    }

    pub fn inner_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&a| self.is_inner_edge(a)).collect()
    }

    pub fn is_x_functional(&self, a: usize, x: Side) -> bool {
        self.is_x_edge(a, x) && self.edges_at(self.end(a, x), x).len() == 1
    }

    pub fn has_loop(&self) -> bool {
        (0..self.edges.len()).any(|a| self.w[a] == self.e[a])
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn order of the vertices, or `None` when a cycle (a loop included)
    /// exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_adj[v].len()).collect();
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &a in self.out_adj[v].iter().rev() {
                let t = self.e[a];
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.push(t);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Component label per vertex, numbered in order of the smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.vertices.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for t in self.neighbours(v) {
                    if label[t] == usize::MAX {
                        label[t] = count;
                        stack.push(t);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_adj[v].iter().map(|&a| self.e[a]).chain(self.in_adj[v].iter().map(|&a| self.w[a]))
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.component_labels().0 <= 1
    }

    pub fn is_incidented(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.degree(v) > 0)
    }

    pub fn is_w_e_functional(&self) -> bool {
        (0..self.edges.len()).all(|a| {
            (!self.is_x_edge(a, Side::W) || self.is_x_functional(a, Side::W))
                && (!self.is_x_edge(a, Side::E) || self.is_x_functional(a, Side::E))
        })
    }

    pub fn has_inner_vertex(&self) -> bool {
        (0..self.vertices.len()).any(|v| self.is_inner_vertex(v))
    }

    pub fn classify(&self) -> Classification {
        let vertex_class = (0..self.vertices.len())
            .map(|v| {
                if self.is_x_vertex(v, Side::W) {
                    VertexClass::WVertex
                } else if self.is_x_vertex(v, Side::E) {
                    VertexClass::EVertex
                } else {
                    VertexClass::Inner
                }
            })
            .collect();
        let edge_class = (0..self.edges.len())
            .map(|a| {
                if self.is_x_edge(a, Side::W) {
                    EdgeClass::WEdge
                } else if self.is_x_edge(a, Side::E) {
                    EdgeClass::EEdge
                } else {
                    EdgeClass::Inner
                }
            })
            .collect();
        Classification {
            vertex_class,
            edge_class,
            w_functional: (0..self.edges.len()).map(|a| self.is_x_functional(a, Side::W)).collect(),
            e_functional: (0..self.edges.len()).map(|a| self.is_x_functional(a, Side::E)).collect(),
            acyclic: self.is_acyclic(),
            weakly_connected: self.is_weakly_connected(),
            w_e_functional: self.is_w_e_functional(),
            incidented: self.is_incidented(),
            has_inner_vertex: self.has_inner_vertex(),
            has_loop: self.has_loop(),
        }
    }

    /// Finite, acyclic, W-E-functional, weakly connected, with an inner vertex.
    pub fn is_dgraph(&self) -> bool {
        self.is_acyclic() && self.is_w_e_functional() && self.is_weakly_connected() && self.has_inner_vertex()
    }

    /// A D-graph with exactly one inner vertex.
    pub fn is_basic(&self) -> bool {
        self.is_dgraph() && self.inner_vertices().len() == 1
    }

    pub fn require_dgraph(&self) -> Result<()> {
        if self.is_dgraph() {
            Ok(())
        } else {
            Err(Error::pre("graph is not a D-graph"))
        }
    }

    /// All edges as `(name, w-name, e-name)` triples.
    pub fn edge_triples(&self) -> impl Iterator<Item = (&str, &str, &str)> + '_ {
        (0..self.edges.len())
            .map(|a| (self.edges[a].as_str(), self.vertices[self.w[a]].as_str(), self.vertices[self.e[a]].as_str()))
    }

    pub fn named_edges(&self) -> BTreeMap<String, (String, String)> {
        self.edge_triples().map(|(a, w, e)| (a.to_string(), (w.to_string(), e.to_string()))).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<String> {
        self.vertices.iter().cloned().collect()
    }

    /// Same carriers with the endpoint maps swapped.
    pub fn opposite(&self) -> Graph {
        Graph::assemble(self.vertices.clone(), self.edges.clone(), self.e.clone(), self.w.clone())
    }

    /// Renames vertices through `f`; fails if the renaming is not injective
    /// or collides with edge names.
    pub fn rename_vertices(&self, f: impl Fn(&str) -> String) -> Result<Graph> {
        let names: Vec<String> = self.vertices.iter().map(|v| f(v)).collect();
        Graph::new(
            names.clone(),
            (0..self.edges.len()).map(|a| (self.edges[a].clone(), names[self.w[a]].clone(), names[self.e[a]].clone())),
        )
    }

    pub fn rename_edges(&self, f: impl Fn(&str) -> String) -> Result<Graph> {
        Graph::new(
            self.vertices.clone(),
            (0..self.edges.len())
                .map(|a| (f(&self.edges[a]), self.vertices[self.w[a]].clone(), self.vertices[self.e[a]].clone())),
        )
    }

    /// Subgraph induced by a set of edges and vertices (vertices must cover
    /// the endpoints).
    pub fn subgraph(&self, vertices: &[usize], edges: &[usize]) -> Graph {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut pos = vec![usize::MAX; self.vertices.len()];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut es: Vec<usize> = edges.to_vec();
        es.sort_unstable();
        es.dedup();
        let w = es.iter().map(|&a| pos[self.w[a]]).collect();
        let e = es.iter().map(|&a| pos[self.e[a]]).collect();
        Graph::assemble(
            vs.iter().map(|&v| self.vertices[v].clone()).collect(),
            es.iter().map(|&a| self.edges[a].clone()).collect(),
            w,
            e,
        )
    }

    /// Maximal weakly connected non-empty subgraphs, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Graph> {
        let (count, label) = self.component_labels();
        (0..count)
            .map(|c| {
                let vs: Vec<usize> = (0..self.vertices.len()).filter(|&v| label[v] == c).collect();
                let es: Vec<usize> = (0..self.edges.len()).filter(|&a| label[self.w[a]] == c).collect();
                self.subgraph(&vs, &es)
            })
            .collect()
    }

    /// `[u,v]`: every semipath from `u` to `v`.
    pub fn semipaths(&self, u: usize, v: usize, cap: usize) -> Result<Vec<Semipath>> {
        let mut is_target = vec![false; self.vertices.len()];
        is_target[v] = true;
        self.semipaths_to(u, &is_target, true, cap)
    }

    /// `[u]_X`: every semipath from `u` to an X-vertex.
    pub fn semipaths_to_side(&self, u: usize, x: Side, cap: usize) -> Result<Vec<Semipath>> {
        let is_target: Vec<bool> = (0..self.vertices.len()).map(|v| self.is_x_vertex(v, x)).collect();
        self.semipaths_to(u, &is_target, false, cap)
    }

    /// Depth-first enumeration of semipaths from `u` ending at a target.
    /// With `stop_at_target`, a path is not extended past a target (correct
    /// when there is a single target).
    pub fn semipaths_to(&self, u: usize, is_target: &[bool], stop_at_target: bool, cap: usize) -> Result<Vec<Semipath>> {
        let mut out = Vec::new();
        let mut on_path = FixedBitSet::with_capacity(self.vertices.len());
        let mut path = Semipath::trivial(u, self.vertices.len());
        on_path.insert(u);
        self.extend(&mut path, &mut on_path, is_target, stop_at_target, cap, &mut out)?;
        Ok(out)
    }

    fn extend(
        &self,
        path: &mut Semipath,
        on_path: &mut FixedBitSet,
        is_target: &[bool],
        stop_at_target: bool,
        cap: usize,
        out: &mut Vec<Semipath>,
    ) -> Result<()> {
        let here = path.last();
        if is_target[here] {
            if out.len() >= cap {
                return Err(Error::Cap(format!("more than {cap} semipaths")));
            }
            out.push(path.clone());
            if stop_at_target {
                return Ok(());
            }
        }
        let steps: Vec<(usize, usize, bool)> = self.out_adj[here]
            .iter()
            .map(|&a| (a, self.e[a], true))
            .chain(self.in_adj[here].iter().map(|&a| (a, self.w[a], false)))
            .collect();
        for (a, next, forward) in steps {
            if on_path.contains(next) {
                continue;
            }
            on_path.insert(next);
            path.push(a, next, forward);
            self.extend(path, on_path, is_target, stop_at_target, cap, out)?;
            path.pop();
            on_path.set(next, false);
        }
        Ok(())
    }

    /// Whether some semipath from `u` to `v` avoids every vertex in `avoid`.
    /// Reachability in the underlying undirected multigraph; any walk can be
    /// shortened to a semipath.
    pub fn connected_avoiding(&self, u: usize, v: usize, avoid: &FixedBitSet) -> bool {
        if avoid.contains(u) || avoid.contains(v) {
            return false;
        }
        let mut seen = avoid.clone();
        seen.grow(self.vertices.len());
        seen.insert(u);
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for t in self.neighbours(x) {
                if !seen.contains(t) {
                    seen.insert(t);
                    stack.push(t);
                }
            }
        }
        false
    }

    /// An isomorphism onto `other`, if one exists. Vertices are matched by
    /// backtracking in index order with degree pruning; edges between a
    /// matched pair of endpoints are then paired in index order.
    pub fn isomorphism(&self, other: &Graph) -> Option<Isomorphism> {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return None;
        }
        let sig = |g: &Graph, v: usize| {
            let loops = g.out_adj[v].iter().filter(|&&a| g.e[a] == v).count();
            (g.out_adj[v].len(), g.in_adj[v].len(), loops)
        };
        let mut sa: Vec<_> = (0..self.vertices.len()).map(|v| sig(self, v)).collect();
        let mut sb: Vec<_> = (0..other.vertices.len()).map(|v| sig(other, v)).collect();
        let (sa_sorted, sb_sorted) = {
            let mut x = sa.clone();
            let mut y = sb.clone();
            x.sort();
            y.sort();
            (x, y)
        };
        if sa_sorted != sb_sorted {
            return None;
        }
        let mult = |g: &Graph| {
            let mut m: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for a in 0..g.edges.len() {
                *m.entry((g.w[a], g.e[a])).or_default() += 1;
            }
            m
        };
        let ma = mult(self);
        let mb = mult(other);
        // Order vertices so that each one is adjacent to earlier ones when
        // possible, which makes the pruning bite early.
        let order = self.search_order();
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut used = vec![false; other.vertices.len()];
        let sa_ref = &mut sa;
        let sb_ref = &mut sb;
        if !iso_search(self, other, &order, 0, &mut map, &mut used, sa_ref, sb_ref, &ma, &mb) {
            return None;
        }
        let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for b in 0..other.edges.len() {
            buckets.entry((other.w[b], other.e[b])).or_default().push(b);
        }
        for list in buckets.values_mut() {
            list.reverse();
        }
        let mut edge_map = vec![usize::MAX; self.edges.len()];
        for a in 0..self.edges.len() {
            let key = (map[self.w[a]], map[self.e[a]]);
            edge_map[a] = buckets.get_mut(&key)?.pop()?;
        }
        Some(Isomorphism { vertex_map: map, edge_map })
    }

    fn search_order(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            if placed[s] {
                continue;
            }
            placed[s] = true;
            order.push(s);
            let mut i = order.len() - 1;
            while i < order.len() {
                let v = order[i];
                let mut next: Vec<usize> = self.neighbours(v).filter(|&t| !placed[t]).collect();
                next.sort_unstable();
                next.dedup();
                for t in next {
                    placed[t] = true;
                    order.push(t);
                }
                i += 1;
            }
        }
        order
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.isomorphism(other).is_some()
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    sa: &mut Vec<(usize, usize, usize)>,
    sb: &mut Vec<(usize, usize, usize)>,
    ma: &BTreeMap<(usize, usize), usize>,
    mb: &BTreeMap<(usize, usize), usize>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for t in 0..b.vertices.len() {
        if used[t] || sa[v] != sb[t] {
            continue;
        }
        // Multiplicities towards already mapped vertices must agree.
        let consistent = order[..depth].iter().chain(std::iter::once(&v)).all(|&u| {
            let tu = if u == v { t } else { map[u] };
            ma.get(&(v, u)).copied().unwrap_or(0) == mb.get(&(t, tu)).copied().unwrap_or(0)
                && ma.get(&(u, v)).copied().unwrap_or(0) == mb.get(&(tu, t)).copied().unwrap_or(0)
        });
        if !consistent {
            continue;
        }
        map[v] = t;
        used[t] = true;
        if iso_search(a, b, order, depth + 1, map, used, sa, sb, ma, mb) {
            return true;
        }
        used[t] = false;
        map[v] = usize::MAX;
    }
    false
}

/// A pair of bijections commuting with W and E, indexed by the source
/// graph's vertex and edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl Isomorphism {
    pub fn named(&self, from: &Graph, to: &Graph) -> (BTreeMap<String, String>, BTreeMap<String, String>) {
        let vm = (0..self.vertex_map.len())
            .map(|v| (from.vertex_name(v).to_string(), to.vertex_name(self.vertex_map[v]).to_string()))
            .collect();
        let em = (0..self.edge_map.len())
            .map(|a| (from.edge_name(a).to_string(), to.edge_name(self.edge_map[a]).to_string()))
            .collect();
        (vm, em)
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &j)| i == j) && self.edge_map.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// A semipath `v0 a1 v1 ... an vn`, with a direction flag per edge (`true`
/// when `W(ai) = v(i-1)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semipath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub forward: Vec<bool>,
    mask: FixedBitSet,
}

impl Semipath {
    pub fn trivial(v: usize, n: usize) -> Semipath {
        let mut mask = FixedBitSet::with_capacity(n);
        mask.insert(v);
        Semipath { vertices: vec![v], edges: vec![], forward: vec![], mask }
    }

    fn push(&mut self, a: usize, v: usize, forward: bool) {
        self.vertices.push(v);
        self.edges.push(a);
        self.forward.push(forward);
        self.mask.insert(v);
    }

    fn pop(&mut self) {
        let v = self.vertices.pop().expect("non-trivial path");
        self.edges.pop();
        self.forward.pop();
        self.mask.set(v, false);
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("semipaths are non-empty")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertex set as a bitset over the host graph's vertex indices.
    pub fn vertex_mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.mask.contains(v)
    }

    pub fn intersects(&self, other: &Semipath) -> bool {
        !self.mask.is_disjoint(&other.mask)
    }

    pub fn reversed(&self) -> Semipath {
        Semipath {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
            forward: self.forward.iter().rev().map(|f| !f).collect(),
            mask: self.mask.clone(),
        }
    }

    /// Rebuilds a semipath from vertex and edge indices, checking clauses
    /// (1)/(2) of the semiwalk definition and the no-repeat condition.
    pub fn from_parts(g: &Graph, vertices: Vec<usize>, edges: Vec<usize>) -> Result<Semipath> {
        if vertices.is_empty() || vertices.len() != edges.len() + 1 {
            return Err(Error::pre("a semipath alternates vertices and edges"));
        }
        let mut p = Semipath::trivial(vertices[0], g.vertex_count());
        for (i, &a) in edges.iter().enumerate() {
            let (from, to) = (vertices[i], vertices[i + 1]);
            let forward = if g.w[a] == from && g.e[a] == to {
                true
            } else if g.e[a] == from && g.w[a] == to {
                false
            } else {
                return Err(Error::pre(format!("edge {} does not connect {} and {}", g.edges[a], g.vertices[from], g.vertices[to])));
            };
            if p.mask.contains(to) {
                return Err(Error::pre(format!("vertex {} repeats", g.vertices[to])));
            }
            p.push(a, to, forward);
        }
        Ok(p)
    }

    /// Parses the concatenated notation `u7a5u4...` by greedy matching
    /// against the graph's identifiers.
    pub fn parse(g: &Graph, text: &str) -> Result<Semipath> {
        let mut vs = Vec::new();
        let mut es = Vec::new();
        let mut rest = text;
        let mut want_vertex = true;
        while !rest.is_empty() {
            let pool = if want_vertex { &g.vertices } else { &g.edges };
            let hit = pool
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())
                .ok_or_else(|| Error::Parse(format!("cannot read semipath at `{rest}`")))?;
            if want_vertex {
                vs.push(hit.0);
            } else {
                es.push(hit.0);
            }
            rest = &rest[hit.1.len()..];
            want_vertex = !want_vertex;
        }
        Semipath::from_parts(g, vs, es)
    }

    pub fn display(&self, g: &Graph) -> String {
        let mut s = g.vertex_name(self.vertices[0]).to_string();
        for (i, &a) in self.edges.iter().enumerate() {
            s.push_str(g.edge_name(a));
            s.push_str(g.vertex_name(self.vertices[i + 1]));
        }
        s
    }

    /// The part of this semipath between two of its vertices, oriented from
    /// `x` to `y`.
    pub fn sub(&self, x: usize, y: usize) -> Option<Semipath> {
        let i = self.vertices.iter().position(|&v| v == x)?;
        let j = self.vertices.iter().position(|&v| v == y)?;
        let n = self.mask.len();
        let mut p = Semipath::trivial(x, n);
        if i <= j {
            for k in i..j {
                p.push(self.edges[k], self.vertices[k + 1], self.forward[k]);
            }
        } else {
            for k in (j..i).rev() {
                p.push(self.edges[k], self.vertices[k], !self.forward[k]);
            }
        }
        Some(p)
    }
}

/// `σ ∗ τ` for `σ` from x to y and `τ` from y to z. The junction is the
/// first vertex of `σ` (walking from x) that lies on `τ`.
pub fn splice(sigma: &Semipath, tau: &Semipath) -> Result<Semipath> {
    if sigma.last() != tau.first() {
        return Err(Error::pre("splice needs the first semipath to end where the second starts"));
    }
    let v = *sigma.vertices.iter().find(|&&v| tau.contains_vertex(v)).expect("the shared endpoint lies on both");
    let head = sigma.sub(sigma.first(), v).expect("v lies on sigma");
    let tail = tau.sub(v, tau.last()).expect("v lies on tau");
    let mut out = head;
    for k in 0..tail.edges.len() {
        out.push(tail.edges[k], tail.vertices[k + 1], tail.forward[k]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn g19() -> Graph {
        fixtures::g19()
    }

    fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    }

    #[test]
    fn validate_rejects_bad_input() {
        assert!(Graph::new(Vec::<String>::new(), Vec::<(String, String, String)>::new()).unwrap().is_empty());
        assert_eq!(Graph::new(["u"], [("a", "u", "v")]).unwrap_err(), Error::UnknownVertex("v".into()));
        assert_eq!(Graph::new(["u", "u"], Vec::<(&str, &str, &str)>::new()).unwrap_err(), Error::Duplicate("u".into()));
        assert_eq!(Graph::new(["u", "a"], [("a", "u", "u")]).unwrap_err(), Error::NameCollision("a".into()));
    }

    #[test]
    fn g19_classification() {
        let g = g19();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 10));
        assert_eq!(names(&g, &g.x_vertices(Side::W)), ["u1", "u2"]);
        assert_eq!(names(&g, &g.x_vertices(Side::E)), ["u10", "u7", "u8", "u9"]);
        let c = g.classify();
        assert!(c.acyclic && c.weakly_connected && c.w_e_functional && c.incidented && c.has_inner_vertex);
        assert!(!c.has_loop);
        assert!(c.is_dgraph());
    }

    #[test]
    fn loop_example_classification() {
        // Vertices w, p, q, r, v; a is the W-edge, b and c the two E-edges
        // into v, and q carries a loop.
        let g = Graph::new(
            ["w", "p", "q", "r", "v"],
            [("a", "w", "p"), ("d", "p", "r"), ("f", "p", "q"), ("g", "r", "p"), ("l", "q", "q"), ("b", "q", "v"), ("c", "r", "v")],
        )
        .unwrap();
        let w = g.vertex("w").unwrap();
        let v = g.vertex("v").unwrap();
        assert!(g.is_x_vertex(w, Side::W) && g.is_x_vertex(v, Side::E));
        assert_eq!(g.inner_vertices().len(), 3);
        let a = g.edge("a").unwrap();
        assert!(g.is_x_functional(a, Side::W));
        for name in ["b", "c"] {
            let e = g.edge(name).unwrap();
            assert!(g.is_x_edge(e, Side::E) && !g.is_x_functional(e, Side::E));
        }
        assert!(g.has_loop() && !g.is_acyclic());
    }

    #[test]
    fn single_vertex_is_not_incidented() {
        let g = Graph::new(["v"], Vec::<(&str, &str, &str)>::new()).unwrap();
        assert!(!g.is_incidented());
        assert!(!g.is_dgraph());
    }

    #[test]
    fn g19_semipaths() {
        let g = g19();
        let u7 = g.vertex("u7").unwrap();
        let u9 = g.vertex("u9").unwrap();
        let mut found: Vec<String> = g.semipaths(u7, u9, 100).unwrap().iter().map(|p| p.display(&g)).collect();
        found.sort();
        assert_eq!(found, ["u7a5u4a3u3a4u6a8u9", "u7a5u4a6u5a7u6a8u9"]);
        let u8 = g.vertex("u8").unwrap();
        let mut to_w: Vec<String> = g.semipaths_to_side(u8, Side::W, 100).unwrap().iter().map(|p| p.display(&g)).collect();
        to_w.sort();
        let mut expected = vec![
            "u8a9u5a6u4a3u3a1u1",
            "u8a9u5a7u6a4u3a1u1",
            "u8a9u5a6u4a2u2",
            "u8a9u5a7u6a4u3a3u4a2u2",
        ];
        expected.sort();
        assert_eq!(to_w, expected);
        assert_eq!(g.semipaths(u7, u7, 10).unwrap().len(), 1);
        assert!(matches!(g.semipaths(u7, u9, 1), Err(Error::Cap(_))));
    }

    #[test]
    fn components_and_opposite() {
        let g = g19();
        assert_eq!(g.components().len(), 1);
        let two = Graph::new(
            g.vertices().iter().cloned().chain(["s".to_string(), "t".to_string()]),
            g.edge_triples()
                .map(|(a, w, e)| (a.to_string(), w.to_string(), e.to_string()))
                .chain([("z".to_string(), "s".to_string(), "t".to_string())]),
        )
        .unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(Graph::empty().components().is_empty());
        let op = g.opposite();
        assert_eq!(names(&op, &op.x_vertices(Side::E)), ["u1", "u2"]);
        assert_eq!(op.opposite(), g);
        assert!(Graph::empty().opposite().is_empty());
    }

    #[test]
    fn isomorphism_cases() {
        let g = g19();
        let renamed = g.rename_vertices(|v| format!("r{v}")).unwrap();
        let iso = g.isomorphism(&renamed).expect("renaming is an isomorphism");
        for a in 0..g.edge_count() {
            let b = iso.edge_map[a];
            assert_eq!(iso.vertex_map[g.end(a, Side::W)], renamed.end(b, Side::W));
            assert_eq!(iso.vertex_map[g.end(a, Side::E)], renamed.end(b, Side::E));
        }
        assert!(g.isomorphism(&fixtures::g41()).is_none());
        assert!(g.isomorphism(&g.opposite().opposite()).unwrap().is_identity());
        assert!(!g.is_isomorphic(&g.opposite()));
    }

    #[test]
    fn splice_paper_example() {
        let g = Graph::new(
            ["x", "u", "w", "v", "y", "z", "t"],
            [
                ("a", "x", "u"),
                ("b", "u", "w"),
                ("c", "w", "v"),
                ("d", "u", "v"),
                ("e", "v", "y"),
                ("f", "v", "z"),
                ("g", "y", "t"),
                ("h", "u", "y"),
            ],
        )
        .unwrap();
        let sigma = Semipath::parse(&g, "xaubwcvey").unwrap();
        let tau = Semipath::parse(&g, "yhudvfz").unwrap();
        let s = splice(&sigma, &tau).unwrap();
        assert_eq!(s.display(&g), "xaudvfz");
        let trivial = Semipath::trivial(g.vertex("y").unwrap(), g.vertex_count());
        let tail = splice(&trivial, &tau).unwrap();
        assert_eq!(tail, tau);
    }
}
