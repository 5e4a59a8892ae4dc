//! Translations between P1-terms (juncture with units) and P2-terms
//! (vertical and horizontal composition).

use crate::error::{Error, Result};
use crate::lists;

use super::{type_check, Calculus, Term};

/// `t2`: juncture becomes a vertical composite of whiskered operands. An
/// operand without edges can only be a unit over the empty list, and such a
/// juncture becomes a horizontal composite.
pub fn t2(t: &Term) -> Result<Term> {
    type_check(t, Calculus::S1)?;
    to_s2(t)
}

fn to_s2(t: &Term) -> Result<Term> {
    match t {
        Term::Basic(_) | Term::Unit(_) => Ok(t.clone()),
        Term::Box(l, r) => {
            let (tw, te) = (type_check(l, Calculus::S1)?, type_check(r, Calculus::S1)?);
            if tw.a.is_empty() || te.a.is_empty() {
                return Ok(Term::hcomp(to_s2(l)?, to_s2(r)?));
            }
            let s = lists::split(&tw.le, &te.lw)?.ok_or_else(|| Error::Type("box needs compatible lists".into()))?;
            let pad = |before: &lists::IdList, x: Term, after: &lists::IdList| {
                Term::hcomp(Term::hcomp(Term::Unit(before.clone()), x), Term::Unit(after.clone()))
            };
            Ok(Term::vcomp(pad(&s.phi2, to_s2(l)?, &s.psi2), pad(&s.phi1, to_s2(r)?, &s.psi1)))
        }
        _ => Err(Error::Type("t2 translates P1-terms".into())),
    }
}

/// `t1`: vertical composition becomes juncture; a horizontal composite
/// `δN ⊗ δS` becomes `(1_{L_W(δN) L_W(δS)} □ t1 δN) □ t1 δS`.
pub fn t1(t: &Term) -> Result<Term> {
    type_check(t, Calculus::S2)?;
    to_s1(t)
}

fn to_s1(t: &Term) -> Result<Term> {
    match t {
        Term::Basic(_) | Term::Unit(_) => Ok(t.clone()),
        Term::VComp(l, r) => Ok(Term::boxed(to_s1(l)?, to_s1(r)?)),
        Term::HComp(n, s) => {
            let (tn, ts) = (type_check(n, Calculus::S2)?, type_check(s, Calculus::S2)?);
            let unit = Term::Unit([tn.lw, ts.lw].concat());
            Ok(Term::boxed(Term::boxed(unit, to_s1(n)?), to_s1(s)?))
        }
        Term::Box(..) => Err(Error::Type("t1 translates P2-terms".into())),
    }
}
