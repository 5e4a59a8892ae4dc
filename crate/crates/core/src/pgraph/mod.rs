//! The three characterizations of P-graphs: by constructions, by the
//! recursive P-compatibility condition, and by P-compatibility across every
//! cocycle.

pub mod interlace;

use std::collections::HashMap;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::grounding::{p_compatible, PsiTable};
use crate::juncture::{cut_through, enumerate_cocycles, juncture};
use crate::lists::{self, IdList};

/// A node `(D, L_W, L_E)` with, for inner nodes, the west and east
/// sub-constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub lw: IdList,
    pub le: IdList,
    pub parts: Option<Box<(Construction, Construction)>>,
}

fn names(d: &Graph, x: Side) -> std::collections::BTreeSet<String> {
    d.x_vertices(x).into_iter().map(|v| d.vertex_name(v).to_string()).collect()
}

impl Construction {
    pub fn leaf(graph: Graph, lw: IdList, le: IdList) -> Construction {
        Construction { graph, lw, le, parts: None }
    }

    /// Assembles `K_W □ K_E`.
    pub fn join(kw: Construction, ke: Construction) -> Result<Construction> {
        let s = lists::split(&kw.le, &ke.lw)?.ok_or_else(|| Error::pre("root lists are not compatible"))?;
        let graph = juncture(&kw.graph, &ke.graph)?;
        let lw = [&s.phi2, &kw.lw, &s.psi2].into_iter().flatten().cloned().collect();
        let le = [&s.phi1, &ke.le, &s.psi1].into_iter().flatten().cloned().collect();
        Ok(Construction { graph, lw, le, parts: Some(Box::new((kw, ke))) })
    }

    /// Checks both clauses at every node.
    pub fn validate(&self) -> Result<()> {
        if !lists::is_permutation_of(&self.lw, &names(&self.graph, Side::W))
            || !lists::is_permutation_of(&self.le, &names(&self.graph, Side::E))
        {
            return Err(Error::pre("node lists must list the outer vertices"));
        }
        match &self.parts {
            None if self.graph.is_basic() => Ok(()),
            None => Err(Error::pre("a leaf must hold a basic D-graph")),
            Some(parts) => {
                parts.0.validate()?;
                parts.1.validate()?;
                let rebuilt = Construction::join(parts.0.clone(), parts.1.clone())?;
                if rebuilt.graph != self.graph || rebuilt.lw != self.lw || rebuilt.le != self.le {
                    return Err(Error::pre("node does not follow the assembly rule"));
                }
                Ok(())
            }
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.parts.as_ref().map_or(0, |p| p.0.node_count() + p.1.node_count())
    }

    pub fn leaves(&self) -> Vec<&Construction> {
        match &self.parts {
            None => vec![self],
            Some(p) => {
                let mut v = p.0.leaves();
                v.extend(p.1.leaves());
                v
            }
        }
    }
}

type Key = (Graph, Option<IdList>, Option<IdList>);

/// Search for constructions with optionally prescribed root lists. Root
/// lists of a construction are always grounded, so candidate lists at the
/// shared boundary are drawn from the grounded ones.
struct ConstructionSearch<'c> {
    caps: &'c Caps,
    memo: HashMap<Key, Option<Construction>>,
    leaves: Option<&'c LeafLists>,
}

/// Prescribed edge lists `(W, E)` for leaves, keyed by inner vertex name.
pub type LeafLists = std::collections::BTreeMap<String, (IdList, IdList)>;

fn strip(target: &[String], prefix: &[String], suffix: &[String]) -> Option<IdList> {
    if target.len() < prefix.len() + suffix.len() || !target.starts_with(prefix) || !target.ends_with(suffix) {
        return None;
    }
    Some(target[prefix.len()..target.len() - suffix.len()].to_vec())
}

impl ConstructionSearch<'_> {
    fn find(&mut self, d: &Graph, tw: Option<&IdList>, te: Option<&IdList>) -> Result<Option<Construction>> {
        let key = (d.clone(), tw.cloned(), te.cloned());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let found = self.search(d, tw, te)?;
        self.memo.insert(key, found.clone());
        Ok(found)
    }

    fn search(&mut self, d: &Graph, tw: Option<&IdList>, te: Option<&IdList>) -> Result<Option<Construction>> {
        let default = |x: Side| names(d, x).into_iter().collect::<IdList>();
        if d.is_basic() {
            let mut lw = tw.cloned().unwrap_or_else(|| default(Side::W));
            let mut le = te.cloned().unwrap_or_else(|| default(Side::E));
            let inner = d.vertex_name(d.inner_vertices()[0]);
            if let Some((ew, ee)) = self.leaves.and_then(|m| m.get(inner)) {
                let ends = |l: &IdList, x: Side| -> Result<IdList> {
                    l.iter().map(|a| Ok(d.vertex_name(d.end(d.edge(a)?, x)).to_string())).collect()
                };
                let (want_w, want_e) = (ends(ew, Side::W)?, ends(ee, Side::E)?);
                if tw.is_some_and(|t| *t != want_w) || te.is_some_and(|t| *t != want_e) {
                    return Ok(None);
                }
                (lw, le) = (want_w, want_e);
            }
            return Ok(Some(Construction::leaf(d.clone(), lw, le)));
        }
        for c in enumerate_cocycles(d, self.caps)? {
            let (dw, de) = cut_through(d, &c)?;
            let gw = PsiTable::new(&dw, Side::E, self.caps)?;
            let ge = PsiTable::new(&de, Side::W, self.caps)?;
            let west: Vec<IdList> = gw.grounded(&dw, usize::MAX).iter().map(|l| gw.names(&dw, l)).collect();
            let east: Vec<IdList> = ge.grounded(&de, usize::MAX).iter().map(|l| ge.names(&de, l)).collect();
            for a in &west {
                for b in &east {
                    let Some(s) = lists::split(a, b)? else { continue };
                    let sub_w = match tw {
                        Some(t) => match strip(t, &s.phi2, &s.psi2) {
                            Some(m) => Some(m),
                            None => continue,
                        },
                        None => None,
                    };
                    let sub_e = match te {
                        Some(t) => match strip(t, &s.phi1, &s.psi1) {
                            Some(m) => Some(m),
                            None => continue,
                        },
                        None => None,
                    };
                    let Some(kw) = self.find(&dw, sub_w.as_ref(), Some(a))? else { continue };
                    let Some(ke) = self.find(&de, Some(b), sub_e.as_ref())? else { continue };
                    return Ok(Some(Construction::join(kw, ke)?));
                }
            }
        }
        Ok(None)
    }
}

/// A construction whose root graph is `d`, if `d` is a P′-graph.
pub fn find_construction(d: &Graph, caps: &Caps) -> Result<Option<Construction>> {
    d.require_dgraph()?;
    ConstructionSearch { caps, memo: HashMap::new(), leaves: None }.find(d, None, None)
}

/// A construction with prescribed root lists.
pub fn find_construction_with(d: &Graph, lw: Option<&IdList>, le: Option<&IdList>, caps: &Caps) -> Result<Option<Construction>> {
    d.require_dgraph()?;
    ConstructionSearch { caps, memo: HashMap::new(), leaves: None }.find(d, lw, le)
}

/// A construction with prescribed root lists whose leaves carry the given
/// edge lists.
pub fn find_construction_with_leaves(
    d: &Graph,
    lw: Option<&IdList>,
    le: Option<&IdList>,
    leaves: &LeafLists,
    caps: &Caps,
) -> Result<Option<Construction>> {
    d.require_dgraph()?;
    ConstructionSearch { caps, memo: HashMap::new(), leaves: Some(leaves) }.find(d, lw, le)
}

fn p2(d: &Graph, caps: &Caps, memo: &mut HashMap<Graph, bool>) -> Result<bool> {
    if d.is_basic() {
        return Ok(true);
    }
    if let Some(&hit) = memo.get(d) {
        return Ok(hit);
    }
    let mut verdict = false;
    for c in enumerate_cocycles(d, caps)? {
        let (dw, de) = cut_through(d, &c)?;
        if p_compatible(&dw, &de, caps)?.is_some() && p2(&dw, caps, memo)? && p2(&de, caps, memo)? {
            verdict = true;
            break;
        }
    }
    memo.insert(d.clone(), verdict);
    Ok(verdict)
}

/// Basic, or the juncture of two P-compatible P″-graphs.
pub fn is_p2(d: &Graph, caps: &Caps) -> Result<bool> {
    d.require_dgraph()?;
    p2(d, caps, &mut HashMap::new())
}

/// Cutting through any cocycle yields P-compatible parts.
pub fn is_p3(d: &Graph, caps: &Caps) -> Result<bool> {
    d.require_dgraph()?;
    for c in enumerate_cocycles(d, caps)? {
        let (dw, de) = cut_through(d, &c)?;
        if p_compatible(&dw, &de, caps)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    P1,
    P2,
    P3,
    All,
}

impl Method {
    pub fn parse(s: &str) -> Result<Method> {
        match s {
            "p1" => Ok(Method::P1),
            "p2" => Ok(Method::P2),
            "p3" => Ok(Method::P3),
            "all" => Ok(Method::All),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Verdict {
    pub p1: Option<bool>,
    pub p2: Option<bool>,
    pub p3: Option<bool>,
    #[serde(skip)]
    pub construction: Option<Construction>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        [self.p1, self.p2, self.p3].into_iter().flatten().all(|b| b)
    }
}

/// Runs the requested deciders. With `All`, disagreement is an error; it
/// would falsify the equivalence of the three definitions.
pub fn is_pgraph(d: &Graph, method: Method, caps: &Caps) -> Result<Verdict> {
    let mut v = Verdict::default();
    if matches!(method, Method::P1 | Method::All) {
        v.construction = find_construction(d, caps)?;
        v.p1 = Some(v.construction.is_some());
    }
    if matches!(method, Method::P2 | Method::All) {
        v.p2 = Some(is_p2(d, caps)?);
    }
    if matches!(method, Method::P3 | Method::All) {
        v.p3 = Some(is_p3(d, caps)?);
    }
    if method == Method::All && !(v.p1 == v.p2 && v.p2 == v.p3) {
        return Err(Error::Disagreement(format!("P′ {:?}, P″ {:?}, P‴ {:?}", v.p1, v.p2, v.p3)));
    }
    Ok(v)
}
