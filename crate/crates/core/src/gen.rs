//! Exhaustive generation of small D-graphs, one per isomorphism class.
//!
//! W- and E-vertices of a D-graph carry exactly one edge each, so a D-graph
//! is determined up to isomorphism by its inner vertices, the multiplicities
//! of inner edges between them and, per inner vertex, the number of W-edges
//! entering and E-edges leaving it. Canonical forms minimize that data over
//! all relabellings of the inner vertices.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Inner vertices beyond this make the relabelling search impractical.
pub const MAX_INNER: usize = 7;

/// `w`, `e` stub counts and the inner-edge multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Shape {
    w: Vec<usize>,
    e: Vec<usize>,
    m: Vec<Vec<usize>>,
}

impl Shape {
    fn edge_count(&self) -> usize {
        self.w.iter().sum::<usize>() + self.e.iter().sum::<usize>() + self.m.iter().flatten().sum::<usize>()
    }

    fn relabel(&self, p: &[usize]) -> Shape {
        let k = p.len();
        let mut out = Shape { w: vec![0; k], e: vec![0; k], m: vec![vec![0; k]; k] };
        for i in 0..k {
            out.w[p[i]] = self.w[i];
            out.e[p[i]] = self.e[i];
            for j in 0..k {
                out.m[p[i]][p[j]] = self.m[i][j];
            }
        }
        out
    }

    fn canonical(&self) -> Shape {
        let k = self.w.len();
        (0..k).permutations(k).map(|p| self.relabel(&p)).min().expect("at least one permutation")
    }

    fn connected(&self) -> bool {
        let k = self.w.len();
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if !seen[j] && (self.m[i][j] > 0 || self.m[j][i] > 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn graph(&self) -> Graph {
        let k = self.w.len();
        let mut vertices: Vec<String> = (1..=k).map(|i| format!("v{i}")).collect();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        let (mut nw, mut ne, mut na) = (0, 0, 0);
        for i in 0..k {
            for _ in 0..self.w[i] {
                nw += 1;
                vertices.push(format!("w{nw}"));
                edges.push((format!("b{nw}"), format!("w{nw}"), format!("v{}", i + 1)));
            }
        }
        for i in 0..k {
            for j in 0..k {
                for _ in 0..self.m[i][j] {
                    na += 1;
                    edges.push((format!("a{na}"), format!("v{}", i + 1), format!("v{}", j + 1)));
                }
            }
        }
        for i in 0..k {
            for _ in 0..self.e[i] {
                ne += 1;
                vertices.push(format!("e{ne}"));
                edges.push((format!("c{ne}"), format!("v{}", i + 1), format!("e{ne}")));
            }
        }
        Graph::new(vertices, edges).expect("generated names are distinct")
    }
}

/// Distributes at most `budget` over `slots` cells, calling `f` on each.
fn fill(slots: usize, budget: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(cur: &mut Vec<usize>, slots: usize, budget: usize, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == slots {
            f(cur);
            return;
        }
        for x in 0..=budget {
            cur.push(x);
            go(cur, slots, budget - x, f);
            cur.pop();
        }
    }
    go(&mut Vec::with_capacity(slots), slots, budget, f);
}

/// Every D-graph with at most `inner` inner vertices and at most `edges`
/// edges, once per isomorphism class, ordered by edge count and then by
/// canonical form.
pub fn gen(inner: usize, edges: usize) -> Result<Vec<Graph>> {
    if inner > MAX_INNER {
        return Err(Error::Cap(format!("at most {MAX_INNER} inner vertices")));
    }
    let mut found: BTreeSet<(usize, Shape)> = BTreeSet::new();
    for k in 1..=inner {
        // Any acyclic graph has a topological labelling, so inner edges may
        // run from lower to higher labels only.
        let pairs: Vec<(usize, usize)> = (0..k).tuple_combinations().collect();
        fill(pairs.len(), edges, &mut |mult| {
            let mut m = vec![vec![0; k]; k];
            for (&(i, j), &c) in pairs.iter().zip(mult) {
                m[i][j] = c;
            }
            let used: usize = mult.iter().sum();
            let base = Shape { w: vec![0; k], e: vec![0; k], m };
            if !base.connected() {
                return;
            }
            let need_w: Vec<usize> = (0..k).map(|j| usize::from((0..k).all(|i| base.m[i][j] == 0))).collect();
            let need_e: Vec<usize> = (0..k).map(|i| usize::from((0..k).all(|j| base.m[i][j] == 0))).collect();
            let minimum = used + need_w.iter().sum::<usize>() + need_e.iter().sum::<usize>();
            if minimum > edges {
                return;
            }
            fill(2 * k, edges - minimum, &mut |extra| {
                let mut s = base.clone();
                for i in 0..k {
                    s.w[i] = need_w[i] + extra[i];
                    s.e[i] = need_e[i] + extra[k + i];
                }
                let c = s.canonical();
                found.insert((c.edge_count(), c));
            });
        });
    }
    Ok(found.into_iter().map(|(_, s)| s.graph()).collect())
}

/// Every incidented graph on the edges `a1..an`, labelled: each edge has a
/// W-end and an E-end, and a vertex is a block of a partition of these ends.
/// Isomorphic graphs recur.
pub fn incidented_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut blocks: Vec<usize> = Vec::with_capacity(2 * n);
    fn go(blocks: &mut Vec<usize>, n: usize, out: &mut Vec<Graph>) {
        if blocks.len() == 2 * n {
            let count = blocks.iter().max().map_or(0, |m| m + 1);
            let vertices: Vec<String> = (0..count).map(|i| format!("u{i}")).collect();
            let edges = (0..n).map(|a| (format!("a{}", a + 1), vertices[blocks[2 * a]].clone(), vertices[blocks[2 * a + 1]].clone()));
            out.push(Graph::new(vertices.clone(), edges).expect("generated names are distinct"));
            return;
        }
        let fresh = blocks.iter().max().map_or(0, |m| m + 1);
        for b in 0..=fresh {
            blocks.push(b);
            go(blocks, n, out);
            blocks.pop();
        }
    }
    go(&mut blocks, n, &mut out);
    out
}
