//! Edge classes of disk D1'-realizations and the dual `D*`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::juncture::fresh;

use super::closure::{is_pasting_scheme, outer_runs};
use super::disk::{faces, Dart, DiskRealization, FaceReport};

/// Faces are numbered among the inner faces, in tracing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeClass {
    Interior { from: usize, to: usize },
    NorthernOuter { face: usize },
    SouthernOuter { face: usize },
    TotallyOuter,
}

fn checked_faces(r: &DiskRealization) -> Result<Vec<FaceReport>> {
    r.validate()?;
    if !is_pasting_scheme(r)? {
        return Err(Error::pre("expected a disk D1'-realization"));
    }
    Ok(faces(r)?.into_iter().filter(|f| !f.outer).collect())
}

/// The class of every edge, by the inner faces on its two sides.
pub fn classify_d1p_edges(r: &DiskRealization) -> Result<BTreeMap<String, EdgeClass>> {
    let inner = checked_faces(r)?;
    Ok(classes(&r.graph, &inner))
}

fn classes(g: &Graph, inner: &[FaceReport]) -> BTreeMap<String, EdgeClass> {
    let face_of: BTreeMap<Dart, usize> =
        inner.iter().enumerate().flat_map(|(i, f)| f.darts.iter().map(move |&d| (d, i))).collect();
    (0..g.edge_count())
        .map(|a| {
            // The forward dart runs along the south path of the face above.
            let above = face_of.get(&Dart::new(a, crate::graph::Side::W)).copied();
            let below = face_of.get(&Dart::new(a, crate::graph::Side::E)).copied();
            let class = match (above, below) {
                (Some(from), Some(to)) => EdgeClass::Interior { from, to },
                (None, Some(face)) => EdgeClass::NorthernOuter { face },
                (Some(face), None) => EdgeClass::SouthernOuter { face },
                (None, None) => EdgeClass::TotallyOuter,
            };
            (g.edge_name(a).to_string(), class)
        })
        .collect()
}

/// `D*`: a vertex per inner face plus poles `N` and `S`, an edge `a*`
/// crossing each edge `a` from the face above it to the face below. Around
/// each new vertex the edge-ends follow the boundary of its face.
pub fn dual(r: &DiskRealization) -> Result<DiskRealization> {
    let inner = checked_faces(r)?;
    let g = &r.graph;
    let class = classes(g, &inner);
    let taken = |n: &str, used: &[String]| g.edge_index(n).is_some() || used.iter().any(|u| u == n);
    let mut names: Vec<String> = Vec::new();
    for i in 0..inner.len() {
        let n = fresh(format!("f{}", i + 1), &|n| taken(n, &names));
        names.push(n);
    }
    let north = fresh("N".into(), &|n| taken(n, &names));
    names.push(north.clone());
    let south = fresh("S".into(), &|n| taken(n, &names));
    names.push(south.clone());
    let edges: Vec<(String, String, String)> = class
        .iter()
        .map(|(a, c)| {
            let (w, e) = match *c {
                EdgeClass::Interior { from, to } => (names[from].clone(), names[to].clone()),
                EdgeClass::NorthernOuter { face } => (north.clone(), names[face].clone()),
                EdgeClass::SouthernOuter { face } => (names[face].clone(), south.clone()),
                EdgeClass::TotallyOuter => (north.clone(), south.clone()),
            };
            (a.clone(), w, e)
        })
        .collect();
    let d = Graph::new(names.iter().cloned(), edges)?;
    let (top, bottom) = outer_runs(r)?;
    let carry = |ds: &[Dart]| -> Vec<Dart> {
        ds.iter().rev().map(|x| Dart::new(d.edge_index(g.edge_name(x.edge)).expect("same edges"), x.end)).collect()
    };
    let mut by_name: BTreeMap<&str, Vec<Dart>> = BTreeMap::new();
    for (f, n) in inner.iter().zip(&names) {
        by_name.insert(n, carry(&f.darts));
    }
    by_name.insert(&north, carry(&top));
    by_name.insert(&south, carry(&bottom));
    let rotation = (0..d.vertex_count()).map(|v| by_name[d.vertex_name(v)].clone()).collect();
    let out = DiskRealization { graph: d, rotation, lw: vec![north], le: vec![south] };
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::fixtures;
    use crate::geometry::closure::ssc;
    use crate::geometry::disk::realize;
    use crate::pgraph::find_construction;

    fn closed(d: &Graph) -> DiskRealization {
        ssc(&realize(&find_construction(d, &Caps::default()).unwrap().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn single_edge_is_totally_outer() {
        let g = Graph::new(["s", "t"], [("a", "s", "t")]).unwrap();
        let r = DiskRealization {
            graph: g,
            rotation: vec![vec![Dart::new(0, crate::graph::Side::W)], vec![Dart::new(0, crate::graph::Side::E)]],
            lw: vec!["s".into()],
            le: vec!["t".into()],
        };
        assert_eq!(classify_d1p_edges(&r).unwrap()["a"], EdgeClass::TotallyOuter);
        let d = dual(&r).unwrap();
        assert_eq!(d.graph.named_edges()["a"], ("N".to_string(), "S".to_string()));
    }

    #[test]
    fn double_dual_is_opposite() {
        for d in [fixtures::j13r(), fixtures::g19(), fixtures::g41(), fixtures::four_edge_cut()] {
            let r = closed(&d);
            let once = dual(&r).unwrap();
            let twice = dual(&once).unwrap();
            assert!(twice.graph.is_isomorphic(&r.graph.opposite()));
        }
    }

    #[test]
    fn classes_of_a_fan() {
        // One inner vertex, one W-edge and two E-edges: the closure has one
        // inner face, bounded by the two E-edges and their sink edges.
        let d = Graph::new(["w", "v", "e1", "e2"], [("a", "w", "v"), ("b", "v", "e1"), ("c", "v", "e2")]).unwrap();
        let r = closed(&d);
        let cls = classify_d1p_edges(&r).unwrap();
        assert_eq!(cls["a"], EdgeClass::TotallyOuter);
        assert!(matches!(cls["b"], EdgeClass::NorthernOuter { face: 0 }));
        assert!(matches!(cls["c"], EdgeClass::SouthernOuter { face: 0 }));
    }
}
