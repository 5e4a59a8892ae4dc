//! Lists of distinct identifiers, chains and compatibility.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type IdList = Vec<String>;

pub fn parse_list(text: &str) -> IdList {
    text.split_whitespace().map(str::to_string).collect()
}

pub fn check_distinct(l: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for x in l {
        if !seen.insert(x) {
            return Err(Error::Duplicate(x.clone()));
        }
    }
    Ok(())
}

/// Whether `l` lists exactly the members of `set`.
pub fn is_permutation_of(l: &[String], set: &BTreeSet<String>) -> bool {
    l.len() == set.len() && l.iter().all(|x| set.contains(x)) && check_distinct(l).is_ok()
}

/// `Φ1 Ξ Ψ1` and `Φ2 Ξ Ψ2` with the shared part `Ξ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub phi1: IdList,
    pub phi2: IdList,
    pub xi: IdList,
    pub psi1: IdList,
    pub psi2: IdList,
}

impl Split {
    pub fn unified(&self) -> IdList {
        [&self.phi1, &self.phi2, &self.xi, &self.psi1, &self.psi2].into_iter().flatten().cloned().collect()
    }
}

/// Decomposes two compatible lists. The shared members must form one
/// contiguous block, in the same order, in both lists; at most one list may
/// have members before it and at most one after it.
pub fn split(l1: &[String], l2: &[String]) -> Result<Option<Split>> {
    if l1.is_empty() || l2.is_empty() {
        return Err(Error::pre("compatibility is defined for non-empty lists"));
    }
    check_distinct(l1)?;
    check_distinct(l2)?;
    let s2: BTreeSet<&String> = l2.iter().collect();
    let block = |l: &[String], other: &BTreeSet<&String>| -> Option<(usize, usize)> {
        let pos: Vec<usize> = (0..l.len()).filter(|&i| other.contains(&l[i])).collect();
        let (&first, &last) = (pos.first()?, pos.last()?);
        (last - first + 1 == pos.len()).then_some((first, last + 1))
    };
    let s1: BTreeSet<&String> = l1.iter().collect();
    let (Some((i1, j1)), Some((i2, j2))) = (block(l1, &s2), block(l2, &s1)) else {
        return Ok(None);
    };
    if l1[i1..j1] != l2[i2..j2] {
        return Ok(None);
    }
    if (i1 > 0 && i2 > 0) || (j1 < l1.len() && j2 < l2.len()) {
        return Ok(None);
    }
    Ok(Some(Split {
        phi1: l1[..i1].to_vec(),
        phi2: l2[..i2].to_vec(),
        xi: l1[i1..j1].to_vec(),
        psi1: l1[j1..].to_vec(),
        psi2: l2[j2..].to_vec(),
    }))
}

/// The unified list of two compatible lists, if they are compatible.
pub fn compatible(l1: &[String], l2: &[String]) -> Result<Option<IdList>> {
    Ok(split(l1, l2)?.map(|s| s.unified()))
}

/// Immediate-successor pairs `R_Γ`.
pub fn successor_pairs(l: &[String]) -> BTreeSet<(String, String)> {
    l.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
}

/// Conditions (1)–(4) on the chains of two lists.
pub fn chain_compatible(l1: &[String], l2: &[String]) -> bool {
    let s1: BTreeSet<&String> = l1.iter().collect();
    let c: BTreeSet<&String> = l2.iter().filter(|x| s1.contains(x)).collect();
    if c.is_empty() {
        return false;
    }
    let (r1, r2) = (successor_pairs(l1), successor_pairs(l2));
    let restrict = |r: &BTreeSet<(String, String)>| -> BTreeSet<(String, String)> {
        r.iter().filter(|(x, y)| c.contains(x) && c.contains(y)).cloned().collect()
    };
    let (c1, c2) = (restrict(&r1), restrict(&r2));
    // A relation on C coming from a list is a chain iff it links all of C.
    if c1.len() + 1 != c.len() || c2.len() + 1 != c.len() || c1 != c2 {
        return false;
    }
    for z in &c {
        let into = |r: &BTreeSet<(String, String)>| r.iter().any(|(x, y)| y == *z && !c.contains(x));
        let out_of = |r: &BTreeSet<(String, String)>| r.iter().any(|(x, y)| x == *z && !c.contains(y));
        if (into(&r1) && into(&r2)) || (out_of(&r1) && out_of(&r2)) {
            return false;
        }
    }
    true
}

/// The list whose chain is the union of the two chains, if that union is a
/// chain. This is the definition of chain compatibility taken literally.
pub fn chain_union(l1: &[String], l2: &[String]) -> Option<IdList> {
    let members: BTreeSet<&String> = l1.iter().chain(l2).collect();
    let r: BTreeSet<(String, String)> = successor_pairs(l1).union(&successor_pairs(l2)).cloned().collect();
    let mut next: BTreeMap<&String, &String> = BTreeMap::new();
    let mut has_pred: BTreeSet<&String> = BTreeSet::new();
    for (x, y) in &r {
        if next.insert(x, y).is_some() || !has_pred.insert(y) {
            return None;
        }
    }
    let starts: Vec<&&String> = members.iter().filter(|m| !has_pred.contains(**m)).collect();
    if starts.len() != 1 {
        return None;
    }
    let mut out = vec![(**starts[0]).clone()];
    while let Some(y) = next.get(&out[out.len() - 1]) {
        out.push((*y).clone());
        if out.len() > members.len() {
            return None;
        }
    }
    (out.len() == members.len()).then_some(out)
}

/// `Λ: x1 - x2 - ... - xn`: the members occur in this order or its reverse.
pub fn in_order(l: &[String], xs: &[&str]) -> bool {
    let pos: Option<Vec<usize>> = xs.iter().map(|x| l.iter().position(|y| y == x)).collect();
    let Some(pos) = pos else { return false };
    pos.windows(2).all(|w| w[0] < w[1]) || pos.windows(2).all(|w| w[0] > w[1])
}

pub fn reversed(l: &[String]) -> IdList {
    l.iter().rev().cloned().collect()
}
