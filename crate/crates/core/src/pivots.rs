//! Pivots, petals and the P-moves that connect any two grounded lists.
//!
//! With `side = W`, `y ≺ x` means that `y` lies on every semipath from `x`
//! to a W-vertex and is itself not a W-vertex. The moves then act on lists
//! of E-vertices. Passing `side = E` gives the mirror notions.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::grounding::PsiTable;
use crate::lists::{self, IdList};

/// `{y | y ≺ x}` by enumerating `[x]_X`.
pub fn pivots(d: &Graph, side: Side, x: usize, caps: &Caps) -> Result<BTreeSet<usize>> {
    let paths = d.semipaths_to_side(x, side, caps.semipaths)?;
    let mut common = FixedBitSet::with_capacity(d.vertex_count());
    common.insert_range(..);
    for p in &paths {
        common.intersect_with(p.vertex_mask());
    }
    Ok(common.ones().filter(|&y| y != x && !d.is_x_vertex(y, side)).collect())
}

/// `{y | y ≺ x}` by cuts: removing `y` separates `x` from every X-vertex.
pub fn pivots_by_cut(d: &Graph, side: Side, x: usize) -> BTreeSet<usize> {
    let targets = d.x_vertices(side);
    let mut avoid = FixedBitSet::with_capacity(d.vertex_count());
    (0..d.vertex_count())
        .filter(|&y| y != x && !d.is_x_vertex(y, side))
        .filter(|&y| {
            avoid.clear();
            avoid.insert(y);
            !targets.iter().any(|&t| d.connected_avoiding(x, t, &avoid))
        })
        .collect()
}

/// `y ⊳ [x,z]`: `y` lies on every semipath from `x` to `z`.
pub fn dominates(d: &Graph, y: usize, x: usize, z: usize, caps: &Caps) -> Result<bool> {
    Ok(d.semipaths(x, z, caps.semipaths)?.iter().all(|p| p.contains_vertex(y)))
}

pub fn dominates_by_cut(d: &Graph, y: usize, x: usize, z: usize) -> bool {
    if y == x || y == z {
        return true;
    }
    let mut avoid = FixedBitSet::with_capacity(d.vertex_count());
    avoid.insert(y);
    !d.connected_avoiding(x, z, &avoid)
}

/// The pivot relation tabulated for every vertex.
#[derive(Debug, Clone)]
pub struct Pivots {
    side: Side,
    /// `below[x]` holds the pivots of `x`.
    below: Vec<FixedBitSet>,
}

impl Pivots {
    pub fn new(d: &Graph, side: Side, caps: &Caps) -> Result<Pivots> {
        d.require_dgraph()?;
        let n = d.vertex_count();
        let below = (0..n)
            .map(|x| {
                let mut m = FixedBitSet::with_capacity(n);
                m.extend(pivots(d, side, x, caps)?);
                Ok(m)
            })
            .collect::<Result<_>>()?;
        Ok(Pivots { side, below })
    }

    /// The same table computed from cuts; used to cross-check [`Pivots::new`].
    pub fn by_cuts(d: &Graph, side: Side) -> Result<Pivots> {
        d.require_dgraph()?;
        let n = d.vertex_count();
        let below = (0..n)
            .map(|x| {
                let mut m = FixedBitSet::with_capacity(n);
                m.extend(pivots_by_cut(d, side, x));
                m
            })
            .collect();
        Ok(Pivots { side, below })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `y ≺ x`.
    pub fn precedes(&self, y: usize, x: usize) -> bool {
        self.below[x].contains(y)
    }

    pub fn of(&self, x: usize) -> BTreeSet<usize> {
        self.below[x].ones().collect()
    }

    /// `𝒞(v) = {x | v ≺ x}`.
    pub fn corolla(&self, v: usize) -> BTreeSet<usize> {
        (0..self.below.len()).filter(|&x| self.precedes(v, x)).collect()
    }

    /// `𝒞_X̄(v)`: the corolla restricted to the far side.
    pub fn corolla_far(&self, d: &Graph, v: usize) -> BTreeSet<usize> {
        self.corolla(v).into_iter().filter(|&x| d.is_x_vertex(x, self.side.bar())).collect()
    }

    /// `V(x,y)`.
    pub fn common(&self, x: usize, y: usize) -> BTreeSet<usize> {
        self.below[x].intersection(&self.below[y]).collect()
    }

    /// The `≺`-greatest common pivot. Common pivots are linearly ordered, so
    /// the greatest one is the one preceded by all the others.
    pub fn ccp(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.common(x, y);
        v.iter().copied().find(|&c| v.iter().all(|&w| w == c || self.precedes(w, c)))
    }
}

fn check_vertex(d: &Graph, v: usize) -> Result<()> {
    if v >= d.vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    Ok(())
}

pub fn corolla(d: &Graph, v: usize, caps: &Caps) -> Result<BTreeSet<usize>> {
    check_vertex(d, v)?;
    Ok(Pivots::new(d, Side::W, caps)?.corolla(v))
}

/// `|[x]|_v`: the members `y` of `𝒞(v)` with not `v ⊳ [x,y]`.
pub fn petal(d: &Graph, v: usize, x: usize, caps: &Caps) -> Result<BTreeSet<usize>> {
    check_vertex(d, v)?;
    let c = Pivots::new(d, Side::W, caps)?.corolla(v);
    petal_in(d, &c, v, x, caps)
}

fn petal_in(d: &Graph, corolla: &BTreeSet<usize>, v: usize, x: usize, caps: &Caps) -> Result<BTreeSet<usize>> {
    if !corolla.contains(&x) {
        return Err(Error::pre(format!("{} is not in the corolla of {}", d.vertex_name(x), d.vertex_name(v))));
    }
    let mut out = BTreeSet::new();
    for &y in corolla {
        if !dominates(d, v, x, y, caps)? {
            out.insert(y);
        }
    }
    Ok(out)
}

/// `|[x]|^E_v`.
pub fn petal_e(d: &Graph, v: usize, x: usize, caps: &Caps) -> Result<BTreeSet<usize>> {
    Ok(petal(d, v, x, caps)?.into_iter().filter(|&y| d.is_x_vertex(y, Side::E)).collect())
}

/// The petals of `v` as a partition of its corolla, computed by enumeration.
/// The relation is an equivalence, so each member is compared only against
/// one representative per class.
pub fn petals(d: &Graph, pv: &Pivots, v: usize, caps: &Caps) -> Result<Vec<BTreeSet<usize>>> {
    let mut classes: Vec<BTreeSet<usize>> = Vec::new();
    'members: for x in pv.corolla(v) {
        for class in classes.iter_mut() {
            let r = *class.first().expect("classes are non-empty");
            if !dominates(d, v, r, x, caps)? {
                class.insert(x);
                continue 'members;
            }
        }
        classes.push(BTreeSet::from([x]));
    }
    Ok(classes)
}

/// The same partition from the components of `D` with `v` removed.
pub fn petals_by_cut(d: &Graph, pv: &Pivots, v: usize) -> Vec<BTreeSet<usize>> {
    let mut classes: Vec<BTreeSet<usize>> = Vec::new();
    'members: for x in pv.corolla(v) {
        for class in classes.iter_mut() {
            let r = *class.first().expect("classes are non-empty");
            if !dominates_by_cut(d, v, r, x) {
                class.insert(x);
                continue 'members;
            }
        }
        classes.push(BTreeSet::from([x]));
    }
    classes
}

fn distinct_far(d: &Graph, side: Side, xs: &[usize]) -> Result<()> {
    for (i, &x) in xs.iter().enumerate() {
        check_vertex(d, x)?;
        if !d.is_x_vertex(x, side.bar()) {
            return Err(Error::pre(format!("{} is not an {}-vertex", d.vertex_name(x), side.bar())));
        }
        if xs[..i].contains(&x) {
            return Err(Error::pre("the vertices must be distinct"));
        }
    }
    Ok(())
}

pub fn common_pivots(d: &Graph, x: usize, y: usize, caps: &Caps) -> Result<BTreeSet<usize>> {
    distinct_far(d, Side::W, &[x, y])?;
    Ok(Pivots::new(d, Side::W, caps)?.common(x, y))
}

pub fn ccp(d: &Graph, x: usize, y: usize, caps: &Caps) -> Result<Option<usize>> {
    distinct_far(d, Side::W, &[x, y])?;
    Ok(Pivots::new(d, Side::W, caps)?.ccp(x, y))
}

/// A vertex `v` with `v ⊳ [z,x]`, `v ⊳ [z,y]`, `v ≺ x` and `v ≺ y`. Such a
/// vertex exists whenever both `ψ_E(x,y,z)` and `ψ_E(y,x,z)` hold.
pub fn pivot_witness(d: &Graph, x: usize, y: usize, z: usize, caps: &Caps) -> Result<Option<usize>> {
    distinct_far(d, Side::W, &[x, y, z])?;
    let pv = Pivots::new(d, Side::W, caps)?;
    for v in pv.common(x, y) {
        if dominates(d, v, z, x, caps)? && dominates(d, v, z, y, caps)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// A node of `U⁺`: an inner vertex or the added bottom element `∗`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Star,
    Vertex(usize),
}

/// `⟨U⁺, ≺⟩` with the sizes `k_v` and weights `m(v)`.
#[derive(Debug, Clone)]
pub struct PivotTree {
    pub pivots: Pivots,
    /// `U`: vertices whose far-side corolla has at least two members.
    pub nodes: Vec<usize>,
    pub k: BTreeMap<usize, usize>,
    pub m: BTreeMap<Node, u64>,
    /// Petals already computed, by `(v, x)`.
    petals: RefCell<BTreeMap<(usize, usize), BTreeSet<usize>>>,
}

fn choose2(k: usize) -> u64 {
    let k = k as u64;
    k * k.saturating_sub(1) / 2
}

impl PivotTree {
    pub fn new(d: &Graph, side: Side, caps: &Caps) -> Result<PivotTree> {
        PivotTree::from_pivots(d, Pivots::new(d, side, caps)?)
    }

    pub fn from_pivots(d: &Graph, pivots: Pivots) -> Result<PivotTree> {
        let mut k = BTreeMap::new();
        for v in 0..d.vertex_count() {
            let n = pivots.corolla_far(d, v).len();
            if n >= 2 {
                k.insert(v, n);
            }
        }
        let nodes: Vec<usize> = k.keys().copied().collect();
        // Successors of v have strictly more pivots, so deeper nodes come
        // first in this order.
        let mut order = nodes.clone();
        order.sort_by_key(|&v| std::cmp::Reverse(pivots.below[v].count_ones(..)));
        let mut m: BTreeMap<Node, u64> = BTreeMap::new();
        for &v in &order {
            let weight = nodes
                .iter()
                .filter(|&&w| pivots.precedes(v, w))
                .map(|w| choose2(k[w]) * m[&Node::Vertex(*w)])
                .sum::<u64>()
                + 1;
            m.insert(Node::Vertex(v), weight);
        }
        let star = nodes.iter().map(|w| choose2(k[w]) * m[&Node::Vertex(*w)]).sum::<u64>() + 1;
        m.insert(Node::Star, star);
        Ok(PivotTree { pivots, nodes, k, m, petals: RefCell::default() })
    }

    /// `S(v)`, not necessarily immediate successors.
    pub fn successors(&self, node: Node) -> Vec<usize> {
        match node {
            Node::Star => self.nodes.clone(),
            Node::Vertex(v) => self.nodes.iter().copied().filter(|&w| self.pivots.precedes(v, w)).collect(),
        }
    }

    /// Nodes of `U` with no predecessor in `U`.
    pub fn roots(&self) -> Vec<usize> {
        self.nodes.iter().copied().filter(|&v| !self.nodes.iter().any(|&w| self.pivots.precedes(w, v))).collect()
    }

    pub fn m_weight(&self, node: Node) -> Option<u64> {
        self.m.get(&node).copied()
    }

    /// `M(x,y)`: the least weight over common pivots, or `m(∗)` without one.
    pub fn big_m(&self, x: usize, y: usize) -> u64 {
        self.pivots.common(x, y).iter().map(|v| self.m[&Node::Vertex(*v)]).min().unwrap_or(self.m[&Node::Star])
    }

    /// `M(x,y)` through the closest common pivot.
    pub fn big_m_by_ccp(&self, x: usize, y: usize) -> u64 {
        match self.pivots.ccp(x, y) {
            Some(v) => self.m[&Node::Vertex(v)],
            None => self.m[&Node::Star],
        }
    }
}

/// `P_{Π,Θ}`: pairs ordered one way in `Π` and the other way in `Θ`.
pub fn p_pairs(pi: &[String], theta: &[String]) -> Vec<(String, String)> {
    let pos: BTreeMap<&String, usize> = theta.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut out = Vec::new();
    for i in 0..pi.len() {
        for j in i + 1..pi.len() {
            if pos[&pi[j]] < pos[&pi[i]] {
                out.push((pi[i].clone(), pi[j].clone()));
            }
        }
    }
    out
}

fn check_lists(d: &Graph, side: Side, lists_: &[&[String]]) -> Result<()> {
    let far: BTreeSet<String> = d.x_vertices(side.bar()).into_iter().map(|v| d.vertex_name(v).to_string()).collect();
    for l in lists_ {
        if !lists::is_permutation_of(l, &far) {
            return Err(Error::pre(format!("list is not a permutation of the {}-vertices", side.bar())));
        }
    }
    Ok(())
}

/// `μ_Θ(Π)`.
pub fn mu(d: &Graph, tree: &PivotTree, pi: &[String], theta: &[String]) -> Result<u64> {
    check_lists(d, tree.pivots.side, &[pi, theta])?;
    p_pairs(pi, theta).iter().map(|(x, y)| Ok(tree.big_m(d.vertex(x)?, d.vertex(y)?))).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    Tr,
    Sf,
    Bf,
}

impl MoveKind {
    pub fn parse(s: &str) -> Result<MoveKind> {
        match s.to_ascii_lowercase().as_str() {
            "tr" => Ok(MoveKind::Tr),
            "sf" => Ok(MoveKind::Sf),
            "bf" => Ok(MoveKind::Bf),
            other => Err(Error::Parse(format!("unknown move `{other}`"))),
        }
    }
}

/// One rewrite step from `upper` to `lower`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PMove {
    pub kind: MoveKind,
    pub x: String,
    pub y: String,
    pub pivot: Option<String>,
    pub upper: IdList,
    pub lower: IdList,
}

/// The span of `block` in `l`, if its members occupy consecutive places.
fn contiguous(l: &[String], block: &BTreeSet<&str>) -> Option<(usize, usize)> {
    let pos: Vec<usize> = (0..l.len()).filter(|&i| block.contains(l[i].as_str())).collect();
    let (&i, &j) = (pos.first()?, pos.last()?);
    (j - i + 1 == pos.len()).then_some((i, j + 1))
}

fn far_petal<'g>(d: &'g Graph, tree: &PivotTree, v: usize, x: usize, caps: &Caps) -> Result<BTreeSet<&'g str>> {
    let cached = tree.petals.borrow().get(&(v, x)).cloned();
    let petal = match cached {
        Some(p) => p,
        None => {
            let p = petal_in(d, &tree.pivots.corolla(v), v, x, caps)?;
            tree.petals.borrow_mut().insert((v, x), p.clone());
            p
        }
    };
    Ok(petal
        .into_iter()
        .filter(|&y| d.is_x_vertex(y, tree.pivots.side.bar()))
        .map(|y| d.vertex_name(y))
        .collect())
}

/// Applies `kind-(x,y)` to `Π`, checking every side condition.
pub fn apply_pmove(
    d: &Graph,
    tree: &PivotTree,
    pi: &[String],
    theta: &[String],
    kind: MoveKind,
    x: &str,
    y: &str,
    caps: &Caps,
) -> Result<PMove> {
    check_lists(d, tree.pivots.side, &[pi, theta])?;
    let (xi, yi) = (d.vertex(x)?, d.vertex(y)?);
    if !p_pairs(pi, theta).iter().any(|(a, b)| a == x && b == y) {
        return Err(Error::pre(format!("({x},{y}) is not an inverted pair")));
    }
    let ccp = tree.pivots.ccp(xi, yi);
    let mut lower = pi.to_vec();
    match kind {
        MoveKind::Bf => {
            if ccp.is_some() {
                return Err(Error::pre(format!("{x} and {y} have a common pivot")));
            }
            lower.reverse();
        }
        MoveKind::Tr | MoveKind::Sf => {
            let v = ccp.ok_or_else(|| Error::pre(format!("{x} and {y} have no common pivot")))?;
            let px = far_petal(d, tree, v, xi, caps)?;
            let same = px.contains(y);
            let name = d.vertex_name(v);
            let (i, j) = contiguous(pi, &px).ok_or_else(|| Error::pre(format!("the petal of {x} at {name} is not contiguous")))?;
            if kind == MoveKind::Sf {
                if !same {
                    return Err(Error::pre(format!("{x} and {y} lie in different petals of {name}")));
                }
                lower[i..j].reverse();
            } else {
                if same {
                    return Err(Error::pre(format!("{x} and {y} lie in the same petal of {name}")));
                }
                let py = far_petal(d, tree, v, yi, caps)?;
                let (k, l) = contiguous(pi, &py).ok_or_else(|| Error::pre(format!("the petal of {y} at {name} is not contiguous")))?;
                if k != j {
                    return Err(Error::pre(format!("the petals of {x} and {y} are not adjacent")));
                }
                lower = [&pi[..i], &pi[k..l], &pi[i..j], &pi[l..]].concat();
            }
        }
    }
    Ok(PMove {
        kind,
        x: x.to_string(),
        y: y.to_string(),
        pivot: ccp.filter(|_| kind != MoveKind::Bf).map(|v| d.vertex_name(v).to_string()),
        upper: pi.to_vec(),
        lower,
    })
}

/// The move the completeness argument picks for `(Π, Θ)`: an inverted pair
/// at minimal distance, ties broken by the names of the pair.
pub fn next_move(d: &Graph, tree: &PivotTree, pi: &[String], theta: &[String], caps: &Caps) -> Result<Option<PMove>> {
    let pos: BTreeMap<&String, usize> = pi.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let Some((x, y)) = p_pairs(pi, theta).into_iter().min_by_key(|(x, y)| (pos[y] - pos[x], x.clone(), y.clone())) else {
        return Ok(None);
    };
    let (xi, yi) = (d.vertex(&x)?, d.vertex(&y)?);
    let kind = match tree.pivots.ccp(xi, yi) {
        None => MoveKind::Bf,
        Some(v) if far_petal(d, tree, v, xi, caps)?.contains(y.as_str()) => MoveKind::Sf,
        Some(_) => MoveKind::Tr,
    };
    apply_pmove(d, tree, pi, theta, kind, &x, &y, caps).map(Some)
}

/// A chain of P-moves from `Π` to `Θ` along which `μ_Θ` strictly decreases.
pub fn pmove_sequence(d: &Graph, pi: &[String], theta: &[String], caps: &Caps) -> Result<Vec<PMove>> {
    pmove_sequence_in(d, &PivotTree::new(d, Side::W, caps)?, pi, theta, caps)
}

/// [`pmove_sequence`] with the W-side pivot tree of `d` supplied, so that
/// its petals are shared between calls.
pub fn pmove_sequence_in(d: &Graph, tree: &PivotTree, pi: &[String], theta: &[String], caps: &Caps) -> Result<Vec<PMove>> {
    if tree.pivots.side != Side::W {
        return Err(Error::pre("P-moves act on E-lists, through the W-side pivot tree"));
    }
    check_lists(d, Side::W, &[pi, theta])?;
    let table = PsiTable::new(d, Side::E, caps)?;
    for l in [pi, theta] {
        if !table.grounded_positions(&table.positions(d, l)?) {
            return Err(Error::pre("both lists must be grounded"));
        }
    }
    let mut current = pi.to_vec();
    let mut level = mu(d, tree, &current, theta)?;
    let mut out = Vec::new();
    while let Some(step) = next_move(d, tree, &current, theta, caps)? {
        let next = mu(d, tree, &step.lower, theta)?;
        if next >= level {
            return Err(Error::Disagreement(format!("a {:?} move did not decrease μ ({level} to {next})", step.kind)));
        }
        level = next;
        current = step.lower.clone();
        out.push(step);
    }
    Ok(out)
}
