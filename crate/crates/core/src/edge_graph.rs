//! Edge-graphs: graphs presented by their edges alone, with two equivalence
//! relations recording shared endpoints and a relation recording
//! consecutive edges.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `⟨A, W, E, P⟩`. The equivalences are kept as class labels: each edge is
/// labelled with the smallest member of its class, so equal edge-graphs
/// have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeGraph {
    edges: Vec<String>,
    w_class: Vec<usize>,
    e_class: Vec<usize>,
    p: BTreeSet<(usize, usize)>,
}

/// Canonical class labels from an arbitrary labelling.
fn canonical(labels: &[usize]) -> Vec<usize> {
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    labels.iter().enumerate().map(|(i, l)| *first.entry(*l).or_insert(i)).collect()
}

impl EdgeGraph {
    pub fn empty() -> EdgeGraph {
        EdgeGraph { edges: vec![], w_class: vec![], e_class: vec![], p: BTreeSet::new() }
    }

    /// Builds an edge-graph from partitions of the edges and the pairs of
    /// `P`, checking the four closure conditions.
    pub fn new(
        edges: impl IntoIterator<Item = String>,
        w_blocks: &[Vec<String>],
        e_blocks: &[Vec<String>],
        p: &[(String, String)],
    ) -> Result<EdgeGraph> {
        let mut es: Vec<String> = edges.into_iter().collect();
        es.sort();
        if let Some(d) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(d[0].clone()));
        }
        let idx = |name: &str| es.binary_search_by(|e| e.as_str().cmp(name)).map_err(|_| Error::UnknownEdge(name.to_string()));
        let labels = |blocks: &[Vec<String>]| -> Result<Vec<usize>> {
            let mut lab = vec![usize::MAX; es.len()];
            for (k, block) in blocks.iter().enumerate() {
                for name in block {
                    let i = idx(name)?;
                    if lab[i] != usize::MAX {
                        return Err(Error::pre(format!("edge {name} lies in two blocks")));
                    }
                    lab[i] = k;
                }
            }
            // Edges missing from every block are singletons.
            let mut next = blocks.len();
            for l in lab.iter_mut().filter(|l| **l == usize::MAX) {
                *l = next;
                next += 1;
            }
            Ok(canonical(&lab))
        };
        let w_class = labels(w_blocks)?;
        let e_class = labels(e_blocks)?;
        let mut pairs = BTreeSet::new();
        for (a, b) in p {
            pairs.insert((idx(a)?, idx(b)?));
        }
        let h = EdgeGraph { edges: es, w_class, e_class, p: pairs };
        h.check()?;
        Ok(h)
    }

    fn check(&self) -> Result<()> {
        for &(c, a) in &self.p {
            for b in 0..self.edges.len() {
                if self.w_class[a] == self.w_class[b] && !self.p.contains(&(c, b)) {
                    return Err(Error::pre(format!("W-related {} and {} differ in P", self.edges[a], self.edges[b])));
                }
                if self.e_class[c] == self.e_class[b] && !self.p.contains(&(b, a)) {
                    return Err(Error::pre(format!("E-related {} and {} differ in P", self.edges[c], self.edges[b])));
                }
            }
        }
        for &(c, a) in &self.p {
            for &(c2, b) in &self.p {
                if c == c2 && self.w_class[a] != self.w_class[b] {
                    return Err(Error::pre(format!("{} and {} follow the same edge but are not W-related", self.edges[a], self.edges[b])));
                }
                if a == b && self.e_class[c] != self.e_class[c2] {
                    return Err(Error::pre(format!("{} and {} precede the same edge but are not E-related", self.edges[c], self.edges[c2])));
                }
            }
        }
        Ok(())
    }

    /// `1_A`: identity relations and empty `P`.
    pub fn unit<S: Into<String>>(edges: impl IntoIterator<Item = S>) -> EdgeGraph {
        let mut es: Vec<String> = edges.into_iter().map(Into::into).collect();
        es.sort();
        es.dedup();
        let ids: Vec<usize> = (0..es.len()).collect();
        EdgeGraph { edges: es, w_class: ids.clone(), e_class: ids, p: BTreeSet::new() }
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_str().cmp(name)).ok()
    }

    pub fn w_related(&self, a: &str, b: &str) -> bool {
        matches!((self.index(a), self.index(b)), (Some(i), Some(j)) if self.w_class[i] == self.w_class[j])
    }

    pub fn e_related(&self, a: &str, b: &str) -> bool {
        matches!((self.index(a), self.index(b)), (Some(i), Some(j)) if self.e_class[i] == self.e_class[j])
    }

    pub fn p_related(&self, a: &str, b: &str) -> bool {
        matches!((self.index(a), self.index(b)), (Some(i), Some(j)) if self.p.contains(&(i, j)))
    }

    /// Members of the W-classes, E-classes and the `P` pairs, by name.
    pub fn w_blocks(&self) -> Vec<Vec<String>> {
        self.blocks(&self.w_class)
    }

    pub fn e_blocks(&self) -> Vec<Vec<String>> {
        self.blocks(&self.e_class)
    }

    pub fn p_pairs(&self) -> Vec<(String, String)> {
        self.p.iter().map(|&(a, b)| (self.edges[a].clone(), self.edges[b].clone())).collect()
    }

    fn blocks(&self, class: &[usize]) -> Vec<Vec<String>> {
        let mut m: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (i, &c) in class.iter().enumerate() {
            m.entry(c).or_default().push(self.edges[i].clone());
        }
        m.into_values().collect()
    }

    /// A W-edge has no predecessor under `P`.
    pub fn is_w_edge(&self, a: &str) -> bool {
        self.index(a).is_some_and(|i| !self.p.iter().any(|&(_, b)| b == i))
    }

    /// An E-edge has no successor under `P`.
    pub fn is_e_edge(&self, a: &str) -> bool {
        self.index(a).is_some_and(|i| !self.p.iter().any(|&(b, _)| b == i))
    }

    /// The map H from incidented graphs.
    pub fn from_graph(g: &Graph) -> Result<EdgeGraph> {
        if !g.is_incidented() {
            return Err(Error::pre("H is defined on incidented graphs"));
        }
        let n = g.edge_count();
        let w: Vec<usize> = (0..n).map(|a| g.end(a, crate::Side::W)).collect();
        let e: Vec<usize> = (0..n).map(|a| g.end(a, crate::Side::E)).collect();
        let mut p = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if e[a] == w[b] {
                    p.insert((a, b));
                }
            }
        }
        Ok(EdgeGraph { edges: g.edges().to_vec(), w_class: canonical(&w), e_class: canonical(&e), p })
    }

    /// The map G back to graphs. Each vertex is named by the pair of edge
    /// sets meeting there: edges ending at it, then edges starting from it.
    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.edges.len();
        let name = |ins: &[usize], outs: &[usize]| {
            let join = |xs: &[usize]| xs.iter().map(|&i| self.edges[i].as_str()).collect::<Vec<_>>().join(",");
            format!("({}|{})", join(ins), join(outs))
        };
        let pre = |a: usize| -> Vec<usize> { (0..n).filter(|&c| self.p.contains(&(c, a))).collect() };
        let post = |a: usize| -> Vec<usize> { (0..n).filter(|&c| self.p.contains(&(a, c))).collect() };
        let class = |labels: &[usize], a: usize| -> Vec<usize> { (0..n).filter(|&b| labels[b] == labels[a]).collect() };
        let mut vertices = BTreeSet::new();
        let mut edges = Vec::with_capacity(n);
        for a in 0..n {
            let wv = name(&pre(a), &class(&self.w_class, a));
            let ev = name(&class(&self.e_class, a), &post(a));
            vertices.insert(wv.clone());
            vertices.insert(ev.clone());
            edges.push((self.edges[a].clone(), wv, ev));
        }
        Graph::new(vertices, edges)
    }

    /// Union along the shared edges, which must be E-edges of `self` and
    /// W-edges of `other`.
    pub fn union(&self, other: &EdgeGraph) -> Result<EdgeGraph> {
        let shared: Vec<&String> = self.edges.iter().filter(|a| other.index(a).is_some()).collect();
        if shared.is_empty() {
            return Err(Error::pre("union needs a shared edge"));
        }
        for a in shared {
            if !self.is_e_edge(a) {
                return Err(Error::pre(format!("shared edge {a} is not an E-edge of the west operand")));
            }
            if !other.is_w_edge(a) {
                return Err(Error::pre(format!("shared edge {a} is not a W-edge of the east operand")));
            }
        }
        Ok(self.union_unchecked(other))
    }

    /// Componentwise union, closing the equivalences transitively. Under the
    /// conditions checked by [`EdgeGraph::union`] no closure is needed.
    pub fn union_unchecked(&self, other: &EdgeGraph) -> EdgeGraph {
        let mut es: Vec<String> = self.edges.iter().chain(other.edges.iter()).cloned().collect();
        es.sort();
        es.dedup();
        let pos = |name: &str| es.binary_search_by(|e| e.as_str().cmp(name)).expect("member");
        let join = |pick: fn(&EdgeGraph) -> &Vec<usize>| {
            let mut parent: Vec<usize> = (0..es.len()).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                p[x] = r;
                r
            }
            for h in [self, other] {
                let labels = pick(h);
                for (i, &c) in labels.iter().enumerate() {
                    let x = find(&mut parent, pos(&h.edges[i]));
                    let y = find(&mut parent, pos(&h.edges[c]));
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
            let roots: Vec<usize> = (0..es.len()).map(|i| find(&mut parent, i)).collect();
            canonical(&roots)
        };
        let w_class = join(|h| &h.w_class);
        let e_class = join(|h| &h.e_class);
        let mut p = BTreeSet::new();
        for h in [self, other] {
            for &(a, b) in &h.p {
                p.insert((pos(&h.edges[a]), pos(&h.edges[b])));
            }
        }
        EdgeGraph { edges: es, w_class, e_class, p }
    }
}
