//! The ψ predicates, grounded lists and P-compatibility.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, Semipath, Side};
use crate::juncture::juncture;
use crate::lists::{self, IdList};

/// Vertex sets of a family of semipaths, keeping only the inclusion-minimal
/// ones: a family meets a set iff its minimal members do.
pub fn minimal_masks(paths: &[Semipath]) -> Vec<FixedBitSet> {
    let mut masks: Vec<FixedBitSet> = paths.iter().map(|p| p.vertex_mask().clone()).collect();
    masks.sort_by_key(|m| m.count_ones(..));
    masks.dedup();
    let mut kept: Vec<FixedBitSet> = Vec::new();
    for m in masks {
        if !kept.iter().any(|k| k.is_subset(&m)) {
            kept.push(m);
        }
    }
    kept
}

fn all_meet(xs: &[FixedBitSet], ys: &[FixedBitSet]) -> bool {
    xs.iter().all(|x| ys.iter().all(|y| !x.is_disjoint(y)))
}

/// `ψ_X(v, u, w)` for distinct X-vertices.
pub fn psi(d: &Graph, x: Side, v: usize, u: usize, w: usize, caps: &Caps) -> Result<bool> {
    for t in [v, u, w] {
        if !d.is_x_vertex(t, x) {
            return Err(Error::pre(format!("{} is not an {x}-vertex", d.vertex_name(t))));
        }
    }
    if v == u || u == w || v == w {
        return Err(Error::pre("ψ takes three distinct vertices"));
    }
    psi_unchecked(d, x, v, u, w, caps)
}

fn psi_unchecked(d: &Graph, x: Side, v: usize, u: usize, w: usize, caps: &Caps) -> Result<bool> {
    let across = minimal_masks(&d.semipaths(v, w, caps.semipaths)?);
    let down = minimal_masks(&d.semipaths_to_side(u, x.bar(), caps.semipaths)?);
    Ok(all_meet(&across, &down))
}

/// X-peripheral: an inner vertex with some edge `a`, `X̄(a) = v`, whose
/// X-end is an X-vertex.
pub fn is_peripheral(d: &Graph, x: Side, v: usize) -> bool {
    d.is_inner_vertex(v) && d.edges_at(v, x.bar()).iter().any(|&a| d.is_x_vertex(d.end(a, x), x))
}

/// The mate of an X-vertex: the far end of its unique edge.
pub fn mate(d: &Graph, x: Side, v: usize) -> Result<usize> {
    if !d.is_x_vertex(v, x) {
        return Err(Error::pre(format!("{} is not an {x}-vertex", d.vertex_name(v))));
    }
    match d.edges_at(v, x) {
        [a] => Ok(d.end(*a, x.bar())),
        _ => Err(Error::pre(format!("{} does not have exactly one edge", d.vertex_name(v)))),
    }
}

/// `ψᵇ_X(v, u, w)` on X-peripheral vertices, not necessarily distinct.
pub fn psi_b(d: &Graph, x: Side, v: usize, u: usize, w: usize, caps: &Caps) -> Result<bool> {
    for t in [v, u, w] {
        if !is_peripheral(d, x, t) {
            return Err(Error::pre(format!("{} is not {x}-peripheral", d.vertex_name(t))));
        }
    }
    psi_unchecked(d, x, v, u, w, caps)
}

/// ψ_X over all X-vertices, with the semipath families computed once.
pub struct PsiTable {
    side: Side,
    members: Vec<usize>,
    pos: Vec<usize>,
    across: Vec<Vec<Vec<FixedBitSet>>>,
    down: Vec<Vec<FixedBitSet>>,
}

impl PsiTable {
    pub fn new(d: &Graph, x: Side, caps: &Caps) -> Result<PsiTable> {
        let members = d.x_vertices(x);
        let k = members.len();
        let mut pos = vec![usize::MAX; d.vertex_count()];
        for (i, &v) in members.iter().enumerate() {
            pos[v] = i;
        }
        let mut across = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in i + 1..k {
                let m = minimal_masks(&d.semipaths(members[i], members[j], caps.semipaths)?);
                across[i][j] = m.clone();
                across[j][i] = m;
            }
        }
        let down = members
            .iter()
            .map(|&u| Ok(minimal_masks(&d.semipaths_to_side(u, x.bar(), caps.semipaths)?)))
            .collect::<Result<_>>()?;
        Ok(PsiTable { side: x, members, pos, across, down })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// X-vertices in index order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// ψ by positions within `members`.
    pub fn psi_at(&self, i: usize, j: usize, k: usize) -> bool {
        all_meet(&self.across[i][k], &self.down[j])
    }

    /// ψ by vertex index.
    pub fn psi(&self, v: usize, u: usize, w: usize) -> bool {
        self.psi_at(self.pos[v], self.pos[u], self.pos[w])
    }

    fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(v).copied().filter(|&p| p != usize::MAX)
    }

    /// Positions of a list of vertex names, checked to be a permutation.
    pub fn positions(&self, d: &Graph, list: &[String]) -> Result<Vec<usize>> {
        let set: BTreeSet<String> = self.members.iter().map(|&v| d.vertex_name(v).to_string()).collect();
        if !lists::is_permutation_of(list, &set) {
            return Err(Error::pre(format!("list is not a permutation of the {}-vertices", self.side)));
        }
        list.iter().map(|n| Ok(self.position(d.vertex(n)?).expect("member"))).collect()
    }

    /// Every triple in list order satisfies ψ.
    pub fn grounded_positions(&self, l: &[usize]) -> bool {
        (0..l.len()).all(|k| self.extends(&l[..k], l[k]))
    }

    /// Appending `next` to a grounded prefix keeps it grounded.
    fn extends(&self, prefix: &[usize], next: usize) -> bool {
        let n = prefix.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.psi_at(prefix[i], prefix[j], next)))
    }

    /// Grounded lists (as positions) in lexicographic order of vertex names;
    /// stops after `limit` results.
    pub fn grounded(&self, d: &Graph, limit: usize) -> Vec<Vec<usize>> {
        let mut order: Vec<usize> = (0..self.members.len()).collect();
        order.sort_by(|&a, &b| d.vertex_name(self.members[a]).cmp(d.vertex_name(self.members[b])));
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let mut used = vec![false; order.len()];
        self.search(&order, &mut prefix, &mut used, limit, &mut out);
        out
    }

    fn search(&self, order: &[usize], prefix: &mut Vec<usize>, used: &mut [bool], limit: usize, out: &mut Vec<Vec<usize>>) {
        if out.len() >= limit {
            return;
        }
        if prefix.len() == order.len() {
            out.push(prefix.clone());
            return;
        }
        for &p in order {
            if used[p] || !self.extends(prefix, p) {
                continue;
            }
            used[p] = true;
            prefix.push(p);
            self.search(order, prefix, used, limit, out);
            prefix.pop();
            used[p] = false;
        }
    }

    pub fn names(&self, d: &Graph, l: &[usize]) -> IdList {
        l.iter().map(|&p| d.vertex_name(self.members[p]).to_string()).collect()
    }
}

pub fn is_grounded(d: &Graph, x: Side, list: &[String], caps: &Caps) -> Result<bool> {
    let t = PsiTable::new(d, x, caps)?;
    let l = t.positions(d, list)?;
    Ok(t.grounded_positions(&l))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    First,
    All,
}

pub fn grounded_lists(d: &Graph, x: Side, mode: Mode, caps: &Caps) -> Result<Vec<IdList>> {
    let t = PsiTable::new(d, x, caps)?;
    if t.members().len() > caps.perm {
        return Err(Error::Cap(format!("{} {x}-vertices exceed the permutation bound {}", t.members().len(), caps.perm)));
    }
    let limit = if mode == Mode::First { 1 } else { usize::MAX };
    Ok(t.grounded(d, limit).iter().map(|l| t.names(d, l)).collect())
}

/// A grounded list of `E(D_W)` and a grounded list of `W(D_E)` that are
/// compatible, with their unified list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PWitness {
    pub west: IdList,
    pub east: IdList,
    pub unified: IdList,
}

pub fn p_compatible(dw: &Graph, de: &Graph, caps: &Caps) -> Result<Option<PWitness>> {
    juncture(dw, de)?;
    let ws = grounded_lists(dw, Side::E, Mode::All, caps)?;
    let es = grounded_lists(de, Side::W, Mode::All, caps)?;
    for a in &ws {
        for b in &es {
            if let Some(unified) = lists::compatible(a, b)? {
                return Ok(Some(PWitness { west: a.clone(), east: b.clone(), unified }));
            }
        }
    }
    Ok(None)
}
