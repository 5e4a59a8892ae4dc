//! Positional rewriting with the axiomatic equations of the four calculi.
//!
//! An instance names an equation, the subterm it applies to, the direction
//! of use and, for equations with a free list, that list. A rewrite is
//! accepted only if the equation's provisos hold and both sides are terms
//! of the same edge and sequential type.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Side;
use crate::lists::IdList;

use super::{type_check, Calculus, Term, TermType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    /// `(δ1 □ δ2) □ δ3 = δ1 □ (δ2 □ δ3)`
    Ass1,
    /// `(δ1 □ δ2) □ δ3 = (δ1 □ δ3) □ δ2`
    Ass21,
    /// `δ1 □ (δ2 □ δ3) = δ2 □ (δ1 □ δ3)`
    Ass22,
    /// `1_Φ □ δ = δ` (side W) and `δ □ 1_Ψ = δ` (side E)
    One1,
    /// `1_{ΘΦ} □ δ = δ □ 1_{ΘΨ}` with `Φ`, `Ψ` leading the lists of `δ`
    One2L,
    /// `1_{ΦΘ} □ δ = δ □ 1_{ΨΘ}` with `Φ`, `Ψ` ending the lists of `δ`
    One2R,
    /// `(δ1 ∘ δ2) ∘ δ3 = δ1 ∘ (δ2 ∘ δ3)`
    AssV,
    /// `1_{L_W(δ)} ∘ δ = δ` (side W) and `δ ∘ 1_{L_E(δ)} = δ` (side E)
    OneV,
    /// `(δ1 ⊗ δ2) ⊗ δ3 = δ1 ⊗ (δ2 ⊗ δ3)`
    AssH,
    /// `1_Λ ⊗ δ = δ` (side W) and `δ ⊗ 1_Λ = δ` (side E), `Λ` empty
    OneH,
    /// `(δ1 ∘ δ2) ⊗ (δ3 ∘ δ4) = (δ1 ⊗ δ3) ∘ (δ2 ⊗ δ4)`
    Interchange,
    /// `1_Γ ⊗ 1_Δ = 1_{ΓΔ}`
    TensorOne,
}

impl Axiom {
    pub const ALL: [Axiom; 12] = [
        Axiom::Ass1,
        Axiom::Ass21,
        Axiom::Ass22,
        Axiom::One1,
        Axiom::One2L,
        Axiom::One2R,
        Axiom::AssV,
        Axiom::OneV,
        Axiom::AssH,
        Axiom::OneH,
        Axiom::Interchange,
        Axiom::TensorOne,
    ];

    pub fn of(calc: Calculus) -> &'static [Axiom] {
        match calc {
            Calculus::SBox | Calculus::SBoxP => &Axiom::ALL[..3],
            Calculus::S1 => &Axiom::ALL[..6],
            Calculus::S2 => &Axiom::ALL[6..],
        }
    }

    pub fn parse(s: &str) -> Result<Axiom> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown axiom `{s}`")))
    }

    /// Equations that come in a W and an E variant.
    fn sided(self) -> bool {
        matches!(self, Axiom::One1 | Axiom::OneV | Axiom::OneH)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Ass1 => "Ass1",
            Axiom::Ass21 => "Ass2.1",
            Axiom::Ass22 => "Ass2.2",
            Axiom::One1 => "One1",
            Axiom::One2L => "One2L",
            Axiom::One2R => "One2R",
            Axiom::AssV => "AssV",
            Axiom::OneV => "OneV",
            Axiom::AssH => "AssH",
            Axiom::OneH => "OneH",
            Axiom::Interchange => "Interchange",
            Axiom::TensorOne => "TensorOne",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// Left-hand side to right-hand side, as the equation is written.
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomInstance {
    pub axiom: Axiom,
    /// 0 is the left operand and 1 the right, from the root down.
    pub path: Vec<u8>,
    pub direction: Direction,
    #[serde(skip)]
    pub side: Side,
    /// The free list, when the equation has one: the new unit for `One1`
    /// backward, `Ψ` for `One2L`/`One2R` forward, `Φ` backward, `Γ` for
    /// `TensorOne` backward. Defaults to the whole list of `δ`.
    pub arg: Option<IdList>,
}

impl AxiomInstance {
    pub fn new(axiom: Axiom, path: Vec<u8>, direction: Direction) -> AxiomInstance {
        AxiomInstance { axiom, path, direction, side: Side::W, arg: None }
    }
}

fn inapplicable(inst: &AxiomInstance, why: &str) -> Error {
    Error::pre(format!("{} does not apply: {why}", inst.axiom))
}

fn starts_with(l: &[String], p: &[String]) -> bool {
    l.len() >= p.len() && l[..p.len()] == *p
}

fn ends_with(l: &[String], s: &[String]) -> bool {
    l.len() >= s.len() && l[l.len() - s.len()..] == *s
}

fn is_sublist(l: &[String], s: &[String]) -> bool {
    s.is_empty() || l.windows(s.len()).any(|w| w == s)
}

fn unit(l: &[String]) -> Term {
    Term::Unit(l.to_vec())
}

/// Splits a unit list around its members in `a`: they must form a block at
/// the given end, which is returned with the rest.
fn peel(l: &[String], ty: &TermType, at_end: bool) -> Option<(IdList, IdList)> {
    let k = l.iter().filter(|x| ty.a.contains(*x)).count();
    let (inside, rest) = if at_end { (&l[l.len() - k..], &l[..l.len() - k]) } else { (&l[..k], &l[k..]) };
    inside.iter().all(|x| ty.a.contains(x)).then(|| (inside.to_vec(), rest.to_vec()))
}

/// One rewrite step at the root of `s`, without the type comparison.
fn rewrite(s: &Term, inst: &AxiomInstance, calc: Calculus) -> Result<Term> {
    use Direction::*;
    use Term::*;
    let no = |why: &str| inapplicable(inst, why);
    let ty = |t: &Term| type_check(t, calc);
    let arg_or = |default: &IdList| inst.arg.clone().unwrap_or_else(|| default.clone());
    let fwd = inst.direction == Forward;
    match (inst.axiom, fwd, s) {
        (Axiom::Ass1, true, Box(l, d3)) => match &**l {
            Box(d1, d2) => Ok(Term::boxed((**d1).clone(), Term::boxed((**d2).clone(), (**d3).clone()))),
            _ => Err(no("left operand is not a box")),
        },
        (Axiom::Ass1, false, Box(d1, r)) => match &**r {
            Box(d2, d3) => Ok(Term::boxed(Term::boxed((**d1).clone(), (**d2).clone()), (**d3).clone())),
            _ => Err(no("right operand is not a box")),
        },
        (Axiom::Ass21, _, Box(l, d3)) => match &**l {
            Box(d1, d2) => Ok(Term::boxed(Term::boxed((**d1).clone(), (**d3).clone()), (**d2).clone())),
            _ => Err(no("left operand is not a box")),
        },
        (Axiom::Ass22, _, Box(d1, r)) => match &**r {
            Box(d2, d3) => Ok(Term::boxed((**d2).clone(), Term::boxed((**d1).clone(), (**d3).clone()))),
            _ => Err(no("right operand is not a box")),
        },
        (Axiom::One1, true, Box(l, r)) => {
            let (u, d, x) = match inst.side {
                Side::W => (&**l, &**r, Side::W),
                Side::E => (&**r, &**l, Side::E),
            };
            let Unit(phi) = u else { return Err(no("no unit on that side")) };
            let td = ty(d)?;
            let list = if x == Side::W { &td.lw } else { &td.le };
            if !is_sublist(list, phi) {
                return Err(no("the unit is not a block of the operand's list"));
            }
            Ok(d.clone())
        }
        (Axiom::One1, false, d) => {
            let td = ty(d)?;
            let list = if inst.side == Side::W { &td.lw } else { &td.le };
            let phi = arg_or(list);
            if !is_sublist(list, &phi) {
                return Err(no("the unit is not a block of the operand's list"));
            }
            Ok(match inst.side {
                Side::W => Term::boxed(unit(&phi), d.clone()),
                Side::E => Term::boxed(d.clone(), unit(&phi)),
            })
        }
        (Axiom::One2L | Axiom::One2R, _, Box(l, r)) => {
            let leading = inst.axiom == Axiom::One2L;
            // Forward reads `1_Λ □ δ`, backward `δ □ 1_Λ`.
            let (u, d) = if fwd { (&**l, &**r) } else { (&**r, &**l) };
            let Unit(lambda) = u else { return Err(no("no unit in place")) };
            let td = ty(d)?;
            let (near, far) = if fwd { (&td.lw, &td.le) } else { (&td.le, &td.lw) };
            let (inside, theta) = peel(lambda, &td, leading).ok_or_else(|| no("the shared edges do not end the unit"))?;
            let other = arg_or(far);
            let fits = |l: &[String], p: &[String]| if leading { starts_with(l, p) } else { ends_with(l, p) };
            if !fits(near, &inside) || !fits(far, &other) {
                return Err(no("the lists do not sit at the required end"));
            }
            let both = if leading { [theta, other].concat() } else { [other, theta].concat() };
            Ok(if fwd { Term::boxed(d.clone(), unit(&both)) } else { Term::boxed(unit(&both), d.clone()) })
        }
        (Axiom::AssV, true, VComp(l, d3)) => match &**l {
            VComp(d1, d2) => Ok(Term::vcomp((**d1).clone(), Term::vcomp((**d2).clone(), (**d3).clone()))),
            _ => Err(no("left operand is not a vertical composite")),
        },
        (Axiom::AssV, false, VComp(d1, r)) => match &**r {
            VComp(d2, d3) => Ok(Term::vcomp(Term::vcomp((**d1).clone(), (**d2).clone()), (**d3).clone())),
            _ => Err(no("right operand is not a vertical composite")),
        },
        (Axiom::OneV, true, VComp(l, r)) => {
            let (u, d) = if inst.side == Side::W { (&**l, &**r) } else { (&**r, &**l) };
            let Unit(g) = u else { return Err(no("no unit on that side")) };
            let td = ty(d)?;
            if *g != if inst.side == Side::W { td.lw } else { td.le } {
                return Err(no("the unit is not the operand's boundary"));
            }
            Ok(d.clone())
        }
        (Axiom::OneV, false, d) => {
            let td = ty(d)?;
            Ok(match inst.side {
                Side::W => Term::vcomp(unit(&td.lw), d.clone()),
                Side::E => Term::vcomp(d.clone(), unit(&td.le)),
            })
        }
        (Axiom::AssH, true, HComp(l, d3)) => match &**l {
            HComp(d1, d2) => Ok(Term::hcomp((**d1).clone(), Term::hcomp((**d2).clone(), (**d3).clone()))),
            _ => Err(no("left operand is not a horizontal composite")),
        },
        (Axiom::AssH, false, HComp(d1, r)) => match &**r {
            HComp(d2, d3) => Ok(Term::hcomp(Term::hcomp((**d1).clone(), (**d2).clone()), (**d3).clone())),
            _ => Err(no("right operand is not a horizontal composite")),
        },
        (Axiom::OneH, true, HComp(l, r)) => {
            let (u, d) = if inst.side == Side::W { (&**l, &**r) } else { (&**r, &**l) };
            match u {
                Unit(g) if g.is_empty() => Ok(d.clone()),
                _ => Err(no("no empty unit on that side")),
            }
        }
        (Axiom::OneH, false, d) => Ok(match inst.side {
            Side::W => Term::hcomp(unit(&[]), d.clone()),
            Side::E => Term::hcomp(d.clone(), unit(&[])),
        }),
        (Axiom::Interchange, true, HComp(l, r)) => match (&**l, &**r) {
            (VComp(d1, d2), VComp(d3, d4)) => Ok(Term::vcomp(
                Term::hcomp((**d1).clone(), (**d3).clone()),
                Term::hcomp((**d2).clone(), (**d4).clone()),
            )),
            _ => Err(no("operands are not vertical composites")),
        },
        (Axiom::Interchange, false, VComp(l, r)) => match (&**l, &**r) {
            (HComp(d1, d3), HComp(d2, d4)) => Ok(Term::hcomp(
                Term::vcomp((**d1).clone(), (**d2).clone()),
                Term::vcomp((**d3).clone(), (**d4).clone()),
            )),
            _ => Err(no("operands are not horizontal composites")),
        },
        (Axiom::TensorOne, true, HComp(l, r)) => match (&**l, &**r) {
            (Unit(g), Unit(d)) => Ok(Term::Unit([g.clone(), d.clone()].concat())),
            _ => Err(no("operands are not units")),
        },
        (Axiom::TensorOne, false, Unit(l)) => {
            let g = arg_or(l);
            if !starts_with(l, &g) {
                return Err(no("the first factor must begin the unit"));
            }
            Ok(Term::hcomp(unit(&g), unit(&l[g.len()..])))
        }
        _ => Err(no("the term does not have the shape of that side of the equation")),
    }
}

/// Applies one axiom instance, returning the rewritten term.
pub fn apply_axiom(t: &Term, inst: &AxiomInstance, calc: Calculus) -> Result<Term> {
    if !Axiom::of(calc).contains(&inst.axiom) {
        return Err(inapplicable(inst, &format!("not an axiom of {calc}")));
    }
    type_check(t, calc)?;
    let old = t.at(&inst.path).ok_or_else(|| inapplicable(inst, "no subterm at that path"))?;
    let new = rewrite(old, inst, calc)?;
    match type_check(&new, calc) {
        Ok(ty) if ty == type_check(old, calc)? => {}
        Ok(_) => return Err(inapplicable(inst, "the two sides differ in type")),
        Err(e) => return Err(inapplicable(inst, &format!("the result is not a term ({e})"))),
    }
    let out = t.replace_at(&inst.path, new).expect("path exists");
    type_check(&out, calc).map_err(|e| inapplicable(inst, &format!("the context rejects the result ({e})")))?;
    Ok(out)
}

/// Contiguous sublists, the empty one included.
fn blocks(l: &[String]) -> Vec<IdList> {
    let mut out = vec![vec![]];
    for i in 0..l.len() {
        for j in i + 1..=l.len() {
            out.push(l[i..j].to_vec());
        }
    }
    out
}

fn arg_choices(axiom: Axiom, direction: Direction, side: Side, s: &Term, calc: Calculus) -> Vec<Option<IdList>> {
    let ty = |t: &Term| type_check(t, calc).ok();
    match (axiom, direction) {
        (Axiom::One1, Direction::Backward) => {
            let Some(tt) = ty(s) else { return vec![] };
            blocks(if side == Side::W { &tt.lw } else { &tt.le }).into_iter().map(Some).collect()
        }
        (Axiom::One2L | Axiom::One2R, d) => {
            let Some((l, r)) = s.children() else { return vec![] };
            let (operand, far) = if d == Direction::Forward { (r, Side::E) } else { (l, Side::W) };
            let Some(tt) = ty(operand) else { return vec![] };
            let list = if far == Side::W { tt.lw } else { tt.le };
            (0..=list.len())
                .map(|k| Some(if axiom == Axiom::One2L { list[..k].to_vec() } else { list[list.len() - k..].to_vec() }))
                .collect()
        }
        (Axiom::TensorOne, Direction::Backward) => match s {
            Term::Unit(l) => (0..=l.len()).map(|k| Some(l[..k].to_vec())).collect(),
            _ => vec![],
        },
        _ => vec![None],
    }
}

/// Every applicable instance at every position, with its result. Results
/// are deduplicated; the first instance producing a term is kept.
pub fn instances(t: &Term, calc: Calculus) -> Result<Vec<(AxiomInstance, Term)>> {
    type_check(t, calc)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for path in t.positions() {
        let s = t.at(&path).expect("listed position");
        for &axiom in Axiom::of(calc) {
            for direction in [Direction::Forward, Direction::Backward] {
                let sides: &[Side] = if axiom.sided() { &[Side::W, Side::E] } else { &[Side::W] };
                for &side in sides {
                    for arg in arg_choices(axiom, direction, side, s, calc) {
                        let inst = AxiomInstance { axiom, path: path.clone(), direction, side, arg };
                        if let Ok(r) = apply_axiom(t, &inst, calc) {
                            if r != *t && seen.insert(r.clone()) {
                                out.push((inst, r));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
