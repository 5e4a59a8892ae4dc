//! Normal forms: the border form of P1-terms and the developed form of
//! P2-terms.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::lists::IdList;
use crate::pgraph::{find_construction_with_leaves, LeafLists};

use super::interp::{iota_rho, term_of_construction, vertex_for};
use super::{type_check, Basic, Calculus, Term};

/// `1_Γ` followed by pairwise non-joinable P-terms. On side `W` the unit
/// heads the composite `(…(1_Γ □ σ1) □ …) □ σn` with `Γ = L_W`; on side `E`
/// it closes `σn □ (… □ (σ1 □ 1_Γ)…)` with `Γ = L_E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderForm {
    pub side: Side,
    pub unit: IdList,
    pub factors: Vec<Term>,
}

impl BorderForm {
    pub fn to_term(&self) -> Term {
        let unit = Term::Unit(self.unit.clone());
        match self.side {
            Side::W => self.factors.iter().cloned().fold(unit, Term::boxed),
            Side::E => self.factors.iter().cloned().fold(unit, |acc, s| Term::boxed(s, acc)),
        }
    }
}

/// The border normal form of a P1-term. Factors are the parts of the term
/// over the components of its graph, each rebuilt as a P-term with the
/// same basic terms and with the boundary lists the term induces on it;
/// they are ordered by their least basic name.
pub fn border_normal_form(t: &Term, side: Side, caps: &Caps) -> Result<BorderForm> {
    let ty = type_check(t, Calculus::S1)?;
    let basics: BTreeMap<String, Basic> = t.basics().into_iter().map(|b| (vertex_for(&b.name), b.clone())).collect();
    let whole = iota_rho(basics.values())?;
    let mut factors = Vec::new();
    for k in whole.components() {
        factors.push(factor(&k, &ty.lw, &ty.le, &basics, caps)?);
    }
    factors.sort_by_key(|f| f.basics().iter().map(|b| b.name.clone()).min());
    let unit = match side {
        Side::W => ty.lw.clone(),
        Side::E => ty.le.clone(),
    };
    let form = BorderForm { side, unit, factors };
    if type_check(&form.to_term(), Calculus::S1)? != ty {
        return Err(Error::pre("border form does not reproduce the sequential type"));
    }
    Ok(form)
}

fn factor(k: &Graph, lw: &IdList, le: &IdList, basics: &BTreeMap<String, Basic>, caps: &Caps) -> Result<Term> {
    let outer = |x: Side| -> IdList {
        let l = if x == Side::W { lw } else { le };
        l.iter()
            .filter(|a| k.edge_index(a).is_some_and(|i| k.is_x_edge(i, x)))
            .map(|a| k.vertex_name(k.end(k.edge_index(a).unwrap(), x)).to_string())
            .collect()
    };
    let leaves: LeafLists = k
        .inner_vertices()
        .into_iter()
        .map(|v| {
            let b = &basics[k.vertex_name(v)];
            (k.vertex_name(v).to_string(), (b.w.clone(), b.e.clone()))
        })
        .collect();
    let construction = find_construction_with_leaves(k, Some(&outer(Side::W)), Some(&outer(Side::E)), &leaves, caps)?
        .ok_or_else(|| Error::pre("no P-term over a component of the term"))?;
    term_of_construction(&construction, &|v| basics[v].name.clone())
}

/// `(1_{Γ'} ⊗ β) ⊗ 1_{Γ''}`.
pub fn whisker(before: IdList, b: Basic, after: IdList) -> Term {
    Term::hcomp(Term::hcomp(Term::Unit(before), Term::Basic(b)), Term::Unit(after))
}

type Steps = Vec<(IdList, Basic, IdList)>;

fn steps(t: &Term) -> Result<(IdList, Steps)> {
    match t {
        Term::Unit(l) => Ok((l.clone(), vec![])),
        Term::Basic(b) => Ok((b.w.clone(), vec![(vec![], b.clone(), vec![])])),
        Term::VComp(l, r) => {
            let (g, mut s) = steps(l)?;
            s.extend(steps(r)?.1);
            Ok((g, s))
        }
        Term::HComp(n, s) => {
            let (gn, sn) = steps(n)?;
            let (gs, ss) = steps(s)?;
            let en = type_check(n, Calculus::S2)?.le;
            let mut out: Steps = sn.into_iter().map(|(a, b, c)| (a, b, [c, gs.clone()].concat())).collect();
            out.extend(ss.into_iter().map(|(a, b, c)| ([en.clone(), a].concat(), b, c)));
            Ok(([gn, gs].concat(), out))
        }
        Term::Box(..) => Err(Error::Type("box is not a term former of s2".into())),
    }
}

/// The developed form `1_Γ ∘ δ1 ∘ … ∘ δn` of a P2-term, with each `δi` a
/// whiskered basic term, composed to the left. The horizontal composite of
/// two developed terms runs the northern steps first.
pub fn develop(t: &Term) -> Result<Term> {
    type_check(t, Calculus::S2)?;
    let (g, s) = steps(t)?;
    Ok(s.into_iter().map(|(a, b, c)| whisker(a, b, c)).fold(Term::Unit(g), Term::vcomp))
}

/// Whether `t` is developed: a unit, then whiskered basics under `∘` in
/// any bracketing, each whisker `1 ⊗ β ⊗ 1` in either bracketing.
pub fn is_developed(t: &Term) -> bool {
    fn flatten<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
        match t {
            Term::VComp(l, r) => {
                flatten(l, out);
                flatten(r, out);
            }
            other => out.push(other),
        }
    }
    fn is_whisker(t: &Term) -> bool {
        let Term::HComp(l, r) = t else { return false };
        match (&**l, &**r) {
            (Term::HComp(a, b), Term::Unit(_)) => matches!((&**a, &**b), (Term::Unit(_), Term::Basic(_))),
            (Term::Unit(_), Term::HComp(a, b)) => matches!((&**a, &**b), (Term::Basic(_), Term::Unit(_))),
            _ => false,
        }
    }
    let mut parts = Vec::new();
    flatten(t, &mut parts);
    matches!(parts[0], Term::Unit(_)) && parts[1..].iter().all(|p| is_whisker(p))
}
