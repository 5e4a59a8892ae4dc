//! Terms for juncture and its two-dimensional relatives.
//!
//! One AST covers the four calculi. `sbox` has basic terms and `□`;
//! `sboxp` adds boundary lists; `s1` adds units and a second `□` clause for
//! operands without edges; `s2` replaces `□` with vertical (`vcomp`) and
//! horizontal (`hcomp`) composition.

pub mod axioms;
pub mod interp;
pub mod normal;
mod parse;
pub mod translate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::lists::{self, IdList};

pub use parse::parse_term;

/// A basic term: an atomic symbol with its W- and E-edge lists. Under
/// `sbox` only the underlying sets matter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basic {
    pub name: String,
    pub w: IdList,
    pub e: IdList,
}

impl Basic {
    pub fn new(name: &str, w: &[&str], e: &[&str]) -> Basic {
        let own = |l: &[&str]| l.iter().map(|s| s.to_string()).collect();
        Basic { name: name.to_string(), w: own(w), e: own(e) }
    }

    pub fn edges(&self) -> impl Iterator<Item = &String> {
        self.w.iter().chain(&self.e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Basic(Basic),
    Unit(IdList),
    Box(Box<Term>, Box<Term>),
    VComp(Box<Term>, Box<Term>),
    HComp(Box<Term>, Box<Term>),
}

impl Term {
    pub fn basic(name: &str, w: &[&str], e: &[&str]) -> Term {
        Term::Basic(Basic::new(name, w, e))
    }

    pub fn unit<S: AsRef<str>>(l: &[S]) -> Term {
        Term::Unit(l.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn boxed(l: Term, r: Term) -> Term {
        Term::Box(Box::new(l), Box::new(r))
    }

    pub fn vcomp(l: Term, r: Term) -> Term {
        Term::VComp(Box::new(l), Box::new(r))
    }

    pub fn hcomp(l: Term, r: Term) -> Term {
        Term::HComp(Box::new(l), Box::new(r))
    }

    pub fn children(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Box(l, r) | Term::VComp(l, r) | Term::HComp(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.children().is_none()
    }

    /// Basic terms in left-to-right order of occurrence.
    pub fn basics(&self) -> Vec<&Basic> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let Term::Basic(b) = t {
                out.push(b);
            }
        });
        out
    }

    /// `ρ`: the set of basic terms occurring in the term.
    pub fn rho(&self) -> BTreeSet<Basic> {
        self.basics().into_iter().cloned().collect()
    }

    pub fn atom_count(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |t| n += usize::from(t.is_atomic()));
        n
    }

    fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Term)) {
        f(self);
        if let Some((l, r)) = self.children() {
            l.walk(f);
            r.walk(f);
        }
    }

    /// The subterm at `path`, where 0 is the left operand and 1 the right.
    pub fn at(&self, path: &[u8]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => {
                let (l, r) = self.children()?;
                if i == 0 { l.at(rest) } else { r.at(rest) }
            }
        }
    }

    /// A copy with the subterm at `path` replaced.
    pub fn replace_at(&self, path: &[u8], new: Term) -> Option<Term> {
        let Some((&i, rest)) = path.split_first() else {
            return Some(new);
        };
        let rebuild = |l: &Term, r: &Term| -> Option<(Term, Term)> {
            if i == 0 {
                Some((l.replace_at(rest, new)?, r.clone()))
            } else {
                Some((l.clone(), r.replace_at(rest, new)?))
            }
        };
        match self {
            Term::Box(l, r) => rebuild(l, r).map(|(l, r)| Term::boxed(l, r)),
            Term::VComp(l, r) => rebuild(l, r).map(|(l, r)| Term::vcomp(l, r)),
            Term::HComp(l, r) => rebuild(l, r).map(|(l, r)| Term::hcomp(l, r)),
            _ => None,
        }
    }

    /// Paths of all subterms, in preorder.
    pub fn positions(&self) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        if let Some((l, r)) = self.children() {
            out.extend(l.positions().into_iter().map(|p| [vec![0], p].concat()));
            out.extend(r.positions().into_iter().map(|p| [vec![1], p].concat()));
        }
        out
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, l: &[String]) -> fmt::Result {
    for x in l {
        write!(f, " {x}")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Basic(b) => {
                write!(f, "(basic {} (w", b.name)?;
                write_list(f, &b.w)?;
                write!(f, ") (e")?;
                write_list(f, &b.e)?;
                write!(f, "))")
            }
            Term::Unit(l) => {
                write!(f, "(unit")?;
                write_list(f, l)?;
                write!(f, ")")
            }
            Term::Box(l, r) => write!(f, "(box {l} {r})"),
            Term::VComp(l, r) => write!(f, "(vcomp {l} {r})"),
            Term::HComp(l, r) => write!(f, "(hcomp {l} {r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Calculus {
    SBox,
    SBoxP,
    S1,
    S2,
}

impl Calculus {
    pub const ALL: [Calculus; 4] = [Calculus::SBox, Calculus::SBoxP, Calculus::S1, Calculus::S2];

    pub fn parse(s: &str) -> Result<Calculus> {
        match s {
            "sbox" => Ok(Calculus::SBox),
            "sboxp" => Ok(Calculus::SBoxP),
            "s1" => Ok(Calculus::S1),
            "s2" => Ok(Calculus::S2),
            other => Err(Error::Parse(format!("unknown calculus `{other}`"))),
        }
    }

    fn has_lists(self) -> bool {
        self != Calculus::SBox
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Calculus::SBox => "sbox",
            Calculus::SBoxP => "sboxp",
            Calculus::S1 => "s1",
            Calculus::S2 => "s2",
        })
    }
}

/// Edge type `(W, E, A)` and, outside `sbox`, the sequential type
/// `(L_W, L_E)`. Under `sbox` the lists hold the sets in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermType {
    pub w: BTreeSet<String>,
    pub e: BTreeSet<String>,
    pub a: BTreeSet<String>,
    pub lw: IdList,
    pub le: IdList,
}

fn set(l: &[String]) -> BTreeSet<String> {
    l.iter().cloned().collect()
}

fn sorted(s: &BTreeSet<String>) -> IdList {
    s.iter().cloned().collect()
}

fn type_err(msg: impl Into<String>) -> Error {
    Error::Type(msg.into())
}

/// Types `t` in `calc`, bottom-up. Besides the clause provisos, basic names
/// must not be edge names (they name the inner vertices of `ι`), and a name
/// stands for one basic term only.
pub fn type_check(t: &Term, calc: Calculus) -> Result<TermType> {
    let mut names: BTreeMap<&str, &Basic> = BTreeMap::new();
    for b in t.basics() {
        if let Some(prev) = names.insert(&b.name, b) {
            if prev != b {
                return Err(type_err(format!("basic `{}` is used with two types", b.name)));
            }
            return Err(type_err(format!("basic `{}` occurs twice", b.name)));
        }
    }
    let ty = check(t, calc)?;
    if let Some(b) = t.basics().into_iter().find(|b| ty.a.contains(&b.name)) {
        return Err(type_err(format!("basic name `{}` is also an edge", b.name)));
    }
    Ok(ty)
}

fn check(t: &Term, calc: Calculus) -> Result<TermType> {
    match t {
        Term::Basic(b) => {
            lists::check_distinct(&b.w)?;
            lists::check_distinct(&b.e)?;
            if b.w.is_empty() || b.e.is_empty() {
                return Err(type_err(format!("basic `{}` needs W- and E-edges", b.name)));
            }
            let (w, e) = (set(&b.w), set(&b.e));
            if !w.is_disjoint(&e) {
                return Err(type_err(format!("basic `{}` has an edge on both sides", b.name)));
            }
            let a = w.union(&e).cloned().collect();
            let (lw, le) = if calc.has_lists() { (b.w.clone(), b.e.clone()) } else { (sorted(&w), sorted(&e)) };
            Ok(TermType { w, e, a, lw, le })
        }
        Term::Unit(l) => {
            if !matches!(calc, Calculus::S1 | Calculus::S2) {
                return Err(type_err(format!("units are not terms of {calc}")));
            }
            lists::check_distinct(l)?;
            let s = set(l);
            Ok(TermType { w: s.clone(), e: s.clone(), a: s, lw: l.clone(), le: l.clone() })
        }
        Term::Box(l, r) => {
            if calc == Calculus::S2 {
                return Err(type_err("box is not a term former of s2"));
            }
            let (tw, te) = (check(l, calc)?, check(r, calc)?);
            box_type(&tw, &te, calc)
        }
        Term::VComp(l, r) => {
            if calc != Calculus::S2 {
                return Err(type_err(format!("vcomp is not a term former of {calc}")));
            }
            let (tw, te) = (check(l, calc)?, check(r, calc)?);
            let c: BTreeSet<String> = tw.a.intersection(&te.a).cloned().collect();
            if c != tw.e || c != te.w {
                return Err(type_err("vcomp needs A(W) ∩ A(E) = E(W) = W(E)"));
            }
            if tw.le != te.lw {
                return Err(type_err("vcomp needs L_E of the west operand to equal L_W of the east"));
            }
            Ok(TermType { w: tw.w, e: te.e, a: tw.a.union(&te.a).cloned().collect(), lw: tw.lw, le: te.le })
        }
        Term::HComp(l, r) => {
            if calc != Calculus::S2 {
                return Err(type_err(format!("hcomp is not a term former of {calc}")));
            }
            let (tn, ts) = (check(l, calc)?, check(r, calc)?);
            if !tn.a.is_disjoint(&ts.a) {
                return Err(type_err("hcomp needs disjoint edge sets"));
            }
            Ok(TermType {
                w: tn.w.union(&ts.w).cloned().collect(),
                e: tn.e.union(&ts.e).cloned().collect(),
                a: tn.a.union(&ts.a).cloned().collect(),
                lw: [tn.lw, ts.lw].concat(),
                le: [tn.le, ts.le].concat(),
            })
        }
    }
}

fn box_type(tw: &TermType, te: &TermType, calc: Calculus) -> Result<TermType> {
    if calc == Calculus::S1 && (tw.a.is_empty() || te.a.is_empty()) {
        return Ok(TermType {
            w: tw.w.union(&te.w).cloned().collect(),
            e: tw.e.union(&te.e).cloned().collect(),
            a: tw.a.union(&te.a).cloned().collect(),
            lw: [tw.lw.clone(), te.lw.clone()].concat(),
            le: [tw.le.clone(), te.le.clone()].concat(),
        });
    }
    let c: BTreeSet<String> = tw.a.intersection(&te.a).cloned().collect();
    if c.is_empty() {
        return Err(type_err("box needs a shared edge"));
    }
    let boundary: BTreeSet<String> = tw.e.intersection(&te.w).cloned().collect();
    if c != boundary {
        return Err(type_err("box needs A(W) ∩ A(E) = E(W) ∩ W(E)"));
    }
    let w: BTreeSet<String> = tw.w.union(&te.w.difference(&c).cloned().collect()).cloned().collect();
    let e: BTreeSet<String> = te.e.union(&tw.e.difference(&c).cloned().collect()).cloned().collect();
    let a: BTreeSet<String> = tw.a.union(&te.a).cloned().collect();
    if !calc.has_lists() {
        return Ok(TermType { lw: sorted(&w), le: sorted(&e), w, e, a });
    }
    let s = lists::split(&tw.le, &te.lw)?.ok_or_else(|| type_err("box needs compatible boundary lists"))?;
    let lw = [&s.phi2, &tw.lw, &s.psi2].into_iter().flatten().cloned().collect();
    let le = [&s.phi1, &te.le, &s.psi1].into_iter().flatten().cloned().collect();
    Ok(TermType { w, e, a, lw, le })
}

/// Types of both sides, when they agree.
pub fn same_type(t1: &Term, t2: &Term, calc: Calculus) -> Result<bool> {
    Ok(type_check(t1, calc)? == type_check(t2, calc)?)
}

/// Decides derivable equality through the completeness theorems: `ι` for
/// `sbox` and `sboxp`, `η*` for `s1`, `μ*` for `s2`. Terms of different
/// types are never equal.
pub fn eq_terms(t1: &Term, t2: &Term, calc: Calculus) -> Result<bool> {
    if !same_type(t1, t2, calc)? {
        return Ok(false);
    }
    Ok(match calc {
        Calculus::SBox | Calculus::SBoxP => interp::iota(t1, calc)? == interp::iota(t2, calc)?,
        Calculus::S1 => interp::eta_star(t1)? == interp::eta_star(t2)?,
        Calculus::S2 => crate::geometry::mgraph::mu_star(t1)? == crate::geometry::mgraph::mu_star(t2)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn b(name: &str, w: &[&str], e: &[&str]) -> Term {
        Term::basic(name, w, e)
    }

    #[test]
    fn box_edge_type() {
        let t = Term::boxed(b("p", &["a"], &["b", "c"]), b("q", &["c"], &["d"]));
        let ty = type_check(&t, Calculus::SBox).unwrap();
        assert_eq!(sorted(&ty.w), ["a"]);
        assert_eq!(sorted(&ty.e), ["b", "d"]);
        assert_eq!(sorted(&ty.a), ["a", "b", "c", "d"]);
    }

    #[test]
    fn box_provisos() {
        let (d1, d2, d3) = (b("p", &["a"], &["b", "c"]), b("q", &["b"], &["d"]), b("r", &["d"], &["c"]));
        // The third operand meets both of the first two.
        let t = Term::boxed(Term::boxed(d1.clone(), d2.clone()), d3.clone());
        assert!(type_check(&t, Calculus::SBox).is_err());
        let t = Term::boxed(Term::boxed(d1, d2), b("r", &["d"], &["e"]));
        assert!(type_check(&t, Calculus::SBox).is_ok());
        // δ3 □ δ2 shares an edge the wrong way round.
        assert!(type_check(&Term::boxed(d3, b("q", &["b"], &["d"])), Calculus::SBox).is_err());
        let disjoint = Term::boxed(b("p", &["a"], &["b"]), b("q", &["c"], &["d"]));
        assert!(matches!(type_check(&disjoint, Calculus::SBox), Err(Error::Type(_))));
    }

    #[test]
    fn lists_and_units() {
        let t = Term::boxed(b("p", &["a"], &["b", "c"]), b("q", &["c", "x"], &["d"]));
        let ty = type_check(&t, Calculus::SBoxP).unwrap();
        assert_eq!((ty.lw, ty.le), (vec!["a".to_string(), "x".into()], vec!["b".to_string(), "d".into()]));
        let bad = Term::boxed(b("p", &["a"], &["b", "c"]), b("q", &["x", "c", "y"], &["d"]));
        assert!(type_check(&bad, Calculus::SBoxP).is_err());
        assert!(type_check(&bad, Calculus::SBox).is_ok());
        let empty = Term::unit::<&str>(&[]);
        let t = Term::vcomp(Term::vcomp(empty.clone(), empty.clone()), empty.clone());
        assert!(type_check(&t, Calculus::S2).unwrap().a.is_empty());
        assert!(type_check(&empty, Calculus::SBox).is_err());
        let beside = Term::boxed(empty, b("p", &["a"], &["b"]));
        assert_eq!(type_check(&beside, Calculus::S1).unwrap().lw, ["a"]);
    }

    #[test]
    fn names_are_checked() {
        let t = Term::boxed(b("p", &["a"], &["b"]), b("p", &["b"], &["c"]));
        assert!(type_check(&t, Calculus::SBox).is_err());
        let t = Term::boxed(b("c", &["a"], &["b"]), b("p", &["b"], &["c"]));
        assert!(type_check(&t, Calculus::SBox).is_err());
    }

    #[test]
    fn gamma_types() {
        let g = type_check(&fixtures::gamma(), Calculus::S2).unwrap();
        let gp = type_check(&fixtures::gamma_prime(), Calculus::S1).unwrap();
        assert_eq!(g.lw, gp.lw);
        assert_eq!(g.le, gp.le);
        assert_eq!(lists::parse_list("b1 b2 c1 c2 a5 b5 a7"), gp.le);
    }

    #[test]
    fn paths() {
        let t = Term::boxed(b("p", &["a"], &["b"]), Term::boxed(b("q", &["b"], &["c"]), b("r", &["c"], &["d"])));
        assert_eq!(t.positions().len(), 5);
        assert_eq!(t.at(&[1, 0]), Some(&b("q", &["b"], &["c"])));
        let u = t.replace_at(&[1, 1], b("s", &["c"], &["e"])).unwrap();
        assert_eq!(u.at(&[1, 1]), Some(&b("s", &["c"], &["e"])));
        assert_eq!(t.atom_count(), 3);
    }
}
