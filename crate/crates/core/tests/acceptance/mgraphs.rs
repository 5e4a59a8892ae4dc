//! `μ`, its realization and the duality with P1-graphs on the composite `γ`.

use std::collections::{BTreeMap, BTreeSet};

use juncta::geometry::closure::{d1_interior, is_pasting_scheme};
use juncta::geometry::disk::faces;
use juncta::geometry::dual::{classify_d1p_edges, dual, EdgeClass};
use juncta::geometry::mgraph::{mu, mu_star, realize_mu};
use juncta::terms::interp::eta;
use juncta::terms::translate::t1;
use juncta::terms::{Basic, Term};
use juncta::{fixtures, Graph};

use crate::{ensure, ok, Check};

fn betas() -> BTreeSet<Basic> {
    BTreeSet::from([
        Basic::new("beta1", &["a1", "a2", "a3"], &["b1", "b2", "b3", "b4"]),
        Basic::new("beta2", &["b3", "b4", "a4"], &["c1", "c2"]),
        Basic::new("beta3", &["a6"], &["b5"]),
    ])
}

/// The P1-graph drawn for `γ′`, written out vertex by vertex: one inner
/// vertex per basic and a separate outer vertex at each free end.
fn drawn() -> Graph {
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let mut vertices = vec!["beta1".to_string(), "beta2".into(), "beta3".into()];
    let mut edge = |a: &str, w: &str, e: &str| {
        let end = |v: &str, tag: &str| if v.is_empty() { format!("{tag}_{a}") } else { v.to_string() };
        let (w, e) = (end(w, "w"), end(e, "e"));
        for v in [&w, &e] {
            if !vertices.contains(v) {
                vertices.push(v.clone());
            }
        }
        edges.push((a.into(), w, e));
    };
    for a in ["a1", "a2", "a3"] {
        edge(a, "", "beta1");
    }
    for b in ["b1", "b2"] {
        edge(b, "beta1", "");
    }
    for b in ["b3", "b4"] {
        edge(b, "beta1", "beta2");
    }
    edge("a4", "", "beta2");
    for c in ["c1", "c2"] {
        edge(c, "beta2", "");
    }
    edge("a6", "", "beta3");
    edge("b5", "beta3", "");
    for a in ["a5", "a7"] {
        edge(a, "", "");
    }
    Graph::new(vertices, edges).expect("drawn graph is valid")
}

pub fn suite() -> Check {
    let empty = ok(mu(&Term::unit::<&str>(&[])), "mu of the empty unit")?;
    ensure!(empty.is_empty() && empty.north.is_none(), "mu of the empty unit is not the empty graph");
    let g = fixtures::gamma();
    let star = ok(mu_star(&g), "mu*")?;
    ensure!(star.rho == betas(), "rho(gamma) = {:?}", star.rho);
    ensure!(star.mu == ok(mu(&g), "mu")?, "mu* does not carry mu");

    let r = ok(realize_mu(&g), "realize mu")?.ok_or("mu(gamma) is empty")?;
    ensure!(ok(is_pasting_scheme(&r), "pasting scheme")?, "mu(gamma) is not a pasting scheme");
    let inner: Vec<_> = ok(faces(&r), "faces")?.into_iter().filter(|f| !f.outer).collect();
    ensure!(inner.len() == 3, "{} inner faces", inner.len());
    // Face index to basic, by the edges along the face.
    let mut face_of: BTreeMap<String, usize> = BTreeMap::new();
    for (i, f) in inner.iter().enumerate() {
        let b = f.bipolar.as_ref().ok_or("inner face is not bipolar")?;
        let beta = betas().into_iter().find(|x| x.w == b.north && x.e == b.south).ok_or(format!("face {:?} bounds no basic", f.walk))?;
        face_of.insert(beta.name, i);
    }
    ensure!(face_of.len() == 3, "faces do not match the three basics");

    let f = |n: &str| face_of[n];
    let mut want: BTreeMap<&str, EdgeClass> = BTreeMap::new();
    for (edges, class) in [
        (&["a1", "a2", "a3"][..], EdgeClass::NorthernOuter { face: f("beta1") }),
        (&["b1", "b2"], EdgeClass::SouthernOuter { face: f("beta1") }),
        (&["b3", "b4"], EdgeClass::Interior { from: f("beta1"), to: f("beta2") }),
        (&["a4"], EdgeClass::NorthernOuter { face: f("beta2") }),
        (&["c1", "c2"], EdgeClass::SouthernOuter { face: f("beta2") }),
        (&["a6"], EdgeClass::NorthernOuter { face: f("beta3") }),
        (&["b5"], EdgeClass::SouthernOuter { face: f("beta3") }),
        (&["a5", "a7"], EdgeClass::TotallyOuter),
    ] {
        for &e in edges {
            want.insert(e, class);
        }
    }
    let got = ok(classify_d1p_edges(&r), "classify")?;
    ensure!(got.iter().map(|(k, v)| (k.as_str(), *v)).collect::<BTreeMap<_, _>>() == want, "edge classes {got:?}");

    let interior = ok(d1_interior(&ok(dual(&r), "dual")?.graph), "interior")?;
    ensure!(interior.is_isomorphic(&drawn()), "dual interior differs from the drawn P1-graph");
    let via_eta = ok(ok(eta(&ok(t1(&g), "t1")?), "eta")?.to_graph(), "G")?;
    ensure!(interior.is_isomorphic(&via_eta), "dual interior differs from eta(t1(gamma))");
    let right = ok(ok(eta(&fixtures::gamma_prime()), "eta")?.to_graph(), "G")?;
    ensure!(right.is_isomorphic(&drawn()), "eta(gamma') differs from the drawn P1-graph");
    Ok("empty unit, 3 faces for 3 basics, 14 edge classes, dual interior as drawn".into())
}
