//! Interlacing and parallelism of two disjoint lists inside a common list.

use crate::error::{Error, Result};
use crate::lists::{in_order, IdList};

/// A list whose members carry indices starting after `offset`: the list
/// `a_{k+1} ... a_{k+n}` has offset `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indexed {
    pub offset: usize,
    pub items: IdList,
}

impl Indexed {
    pub fn new(offset: usize, items: IdList) -> Indexed {
        Indexed { offset, items }
    }

    fn find(&self, x: &str) -> Option<usize> {
        self.items.iter().position(|y| y == x)
    }
}

struct Member<'a> {
    index: usize,
    pred: Option<&'a str>,
    succ: Option<&'a str>,
}

fn member<'a>(a: &'a Indexed, b: &'a Indexed, x: &str) -> Result<Member<'a>> {
    for l in [a, b] {
        if let Some(i) = l.find(x) {
            return Ok(Member {
                index: l.offset + i + 1,
                pred: i.checked_sub(1).map(|j| l.items[j].as_str()),
                succ: l.items.get(i + 1).map(String::as_str),
            });
        }
    }
    Err(Error::pre(format!("{x} belongs to neither list")))
}

fn check(m: &[String], a: &Indexed, b: &Indexed) -> Result<()> {
    if a.items.iter().any(|x| b.find(x).is_some()) {
        return Err(Error::pre("the two lists must be disjoint"));
    }
    let mut all: Vec<&String> = a.items.iter().chain(&b.items).collect();
    let mut ms: Vec<&String> = m.iter().collect();
    all.sort();
    ms.sort();
    if all != ms {
        return Err(Error::pre("M must list the members of both lists"));
    }
    Ok(())
}

/// `M[v, u, v^s]`: `u` is interlaced in `M` with `v` and its successor.
pub fn interlaced(m: &[String], a: &Indexed, b: &Indexed, u: &str, v: &str) -> Result<bool> {
    check(m, a, b)?;
    let mu = member(a, b, u)?;
    let mv = member(a, b, v)?;
    let vs = mv.succ.ok_or_else(|| Error::pre(format!("{v} has no successor")))?;
    if u == v {
        return Err(Error::pre("u and v must differ"));
    }
    if !in_order(m, &[v, u, vs]) {
        return Ok(false);
    }
    let ms = member(a, b, vs)?;
    if mu.index % 2 == ms.index % 2 {
        if let Some(p) = mu.pred {
            if in_order(m, &[v, p, vs]) {
                return Ok(false);
            }
        }
    }
    if mu.index % 2 == mv.index % 2 {
        if let Some(s) = mu.succ {
            if in_order(m, &[v, s, vs]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn one_way(m: &[String], a: &Indexed, b: &Indexed, f: &Indexed, g: &Indexed) -> Result<bool> {
    for v in g.items.iter().take(g.items.len().saturating_sub(1)) {
        for u in &f.items {
            if u != v && interlaced(m, a, b, u, v)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `F ∥_M G` for `F, G` each one of `A`, `B`.
pub fn parallel(m: &[String], a: &Indexed, b: &Indexed, f_is_a: bool, g_is_a: bool) -> Result<bool> {
    check(m, a, b)?;
    let f = if f_is_a { a } else { b };
    let g = if g_is_a { a } else { b };
    Ok(one_way(m, a, b, f, g)? && one_way(m, a, b, g, f)?)
}
