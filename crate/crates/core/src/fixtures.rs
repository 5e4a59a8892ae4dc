//! Bundled example graphs and terms.

use crate::graph::Graph;
use crate::terms::{Basic, Term};

fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    Graph::new(vertices.iter().copied(), edges.iter().copied()).expect("bundled fixture is valid")
}

/// The ten-vertex graph used for semipaths, ψ and grounding.
pub fn g19() -> Graph {
    build(
        &["u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u9", "u10"],
        &[
            ("a1", "u1", "u3"),
            ("a2", "u2", "u4"),
            ("a3", "u3", "u4"),
            ("a4", "u3", "u6"),
            ("a5", "u4", "u7"),
            ("a6", "u4", "u5"),
            ("a7", "u6", "u5"),
            ("a8", "u6", "u9"),
            ("a9", "u5", "u8"),
            ("a10", "u6", "u10"),
        ],
    )
}

fn fan(edges: &mut Vec<(String, String, String)>, from: &str, to: &[&str]) {
    for t in to {
        edges.push((format!("{from}{t}"), from.to_string(), t.to_string()));
    }
}

/// The petal example: one W-vertex `y` and nine E-vertices `x1..x9`.
pub fn g41() -> Graph {
    g41_with_fan(&["x1", "x2", "x3"])
}

/// `g41` with the three leaves of `v1` replaced by `leaves`.
pub fn g41_with_fan(leaves: &[&str]) -> Graph {
    let mut vertices = vec!["y", "v1", "v2", "v3", "v4", "x4", "x5", "x6", "x7", "x8", "x9"];
    vertices.extend_from_slice(leaves);
    let mut edges = Vec::new();
    fan(&mut edges, "y", &["v4"]);
    fan(&mut edges, "v4", &["v1", "v3", "x8", "x9"]);
    let mut v1: Vec<&str> = leaves.to_vec();
    v1.push("v2");
    fan(&mut edges, "v1", &v1);
    fan(&mut edges, "v3", &["v2", "x6", "x7"]);
    fan(&mut edges, "v2", &["x4", "x5"]);
    Graph::new(vertices, edges).expect("bundled fixture is valid")
}

/// `g41` with the fan `x1 x2 x3` widened to `z1 .. zn`.
pub fn g41_z(n: usize) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    g41_with_fan(&refs)
}

/// A graph whose pivot tree has two roots, `v1` and `v3`.
pub fn two_roots() -> Graph {
    let mut edges = Vec::new();
    fan(&mut edges, "y1", &["v1"]);
    fan(&mut edges, "y2", &["v3"]);
    fan(&mut edges, "v1", &["x1", "x2", "x3", "v2"]);
    fan(&mut edges, "v3", &["x5", "x6", "v2"]);
    fan(&mut edges, "v2", &["x4"]);
    Graph::new(["y1", "y2", "v1", "v2", "v3", "x1", "x2", "x3", "x4", "x5", "x6"], edges)
        .expect("bundled fixture is valid")
}

/// A cutset `{a, b}` whose componential graph has a cycle.
pub fn cyclic_cutset() -> Graph {
    build(
        &["p0", "p1", "p2", "p3", "p4"],
        &[("c0", "p0", "p1"), ("c1", "p1", "p2"), ("a", "p1", "p3"), ("b", "p3", "p2"), ("c2", "p2", "p4")],
    )
}

/// West factor of the juncture example; `a` and `b` are its shared edges.
pub fn j13_west() -> Graph {
    build(
        &["w0", "i1", "i2", "i3", "e4", "v", "w"],
        &[
            ("c1", "w0", "i1"),
            ("c2", "i1", "i2"),
            ("c3", "i1", "i3"),
            ("c4", "i1", "i3"),
            ("c5", "i3", "i2"),
            ("c6", "i1", "e4"),
            ("a", "i2", "v"),
            ("b", "i2", "w"),
        ],
    )
}

/// East factor of the juncture example.
pub fn j13_east() -> Graph {
    build(
        &["v", "w", "w5", "j1", "j2", "e6"],
        &[("a", "v", "j1"), ("b", "w", "j2"), ("d1", "w5", "j1"), ("d2", "j1", "j2"), ("d3", "j2", "e6")],
    )
}

/// The juncture of `j13_west` and `j13_east`, written out directly.
pub fn j13r() -> Graph {
    build(
        &["w0", "i1", "i2", "i3", "e4", "w5", "j1", "j2", "e6"],
        &[
            ("c1", "w0", "i1"),
            ("c2", "i1", "i2"),
            ("c3", "i1", "i3"),
            ("c4", "i1", "i3"),
            ("c5", "i3", "i2"),
            ("c6", "i1", "e4"),
            ("a", "i2", "j1"),
            ("b", "i2", "j2"),
            ("d1", "w5", "j1"),
            ("d2", "j1", "j2"),
            ("d3", "j2", "e6"),
        ],
    )
}

/// A D-graph that is not a P-graph: a hub `m` feeding three inner vertices
/// that each carry their own W-edge and E-edge. All three deciders reject it.
pub fn k5() -> Graph {
    build(
        &["w0", "w1", "w2", "w3", "m", "v1", "v2", "v3", "e1", "e2", "e3"],
        &[
            ("b0", "w0", "m"),
            ("b1", "w1", "v1"),
            ("b2", "w2", "v2"),
            ("b3", "w3", "v3"),
            ("c1", "m", "v1"),
            ("c2", "m", "v2"),
            ("c3", "m", "v3"),
            ("d1", "v1", "e1"),
            ("d2", "v2", "e2"),
            ("d3", "v3", "e3"),
        ],
    )
}

/// Two basics glued along four edges; the cocycle-order example.
pub fn four_edge_cut() -> Graph {
    build(
        &["w1", "w2", "p", "q", "e1", "e2"],
        &[
            ("b1", "w1", "p"),
            ("b2", "w2", "p"),
            ("a1", "p", "q"),
            ("a2", "p", "q"),
            ("a3", "p", "q"),
            ("a4", "p", "q"),
            ("c1", "q", "e1"),
            ("c2", "q", "e2"),
        ],
    )
}

/// Names of the bundled graph fixtures.
pub const GRAPH_NAMES: &[&str] = &["G19", "G41", "G41Z", "TWO_ROOTS", "CYCLIC_CUTSET", "J13W", "J13E", "J13R", "K5", "LC"];

pub fn graph_by_name(name: &str) -> Option<Graph> {
    Some(match name {
        "G19" => g19(),
        "G41" => g41(),
        "G41Z" => g41_z(100),
        "TWO_ROOTS" => two_roots(),
        "CYCLIC_CUTSET" => cyclic_cutset(),
        "J13W" => j13_west(),
        "J13E" => j13_east(),
        "J13R" => j13r(),
        "K5" => k5(),
        "LC" => four_edge_cut(),
        _ => return None,
    })
}

fn gamma_basics() -> [Basic; 3] {
    [
        Basic::new("beta1", &["a1", "a2", "a3"], &["b1", "b2", "b3", "b4"]),
        Basic::new("beta2", &["b3", "b4", "a4"], &["c1", "c2"]),
        Basic::new("beta3", &["a6"], &["b5"]),
    ]
}

fn whisker(before: &[&str], b: Basic, after: &[&str]) -> Term {
    Term::hcomp(Term::hcomp(Term::unit(before), Term::Basic(b)), Term::unit(after))
}

/// A developed composite of three basics in the vertical/horizontal
/// calculus.
pub fn gamma() -> Term {
    let [b1, b2, b3] = gamma_basics();
    let steps = [
        whisker(&[], b1, &["a4", "a5", "a6", "a7"]),
        whisker(&["b1", "b2"], b2, &["a5", "a6", "a7"]),
        whisker(&["b1", "b2", "c1", "c2", "a5"], b3, &["a7"]),
    ];
    steps.into_iter().fold(Term::unit(&["a1", "a2", "a3", "a4", "a5", "a6", "a7"]), Term::vcomp)
}

/// The same three basics assembled with juncture and a unit.
pub fn gamma_prime() -> Term {
    let [b1, b2, b3] = gamma_basics();
    let head = Term::unit(&["a1", "a2", "a3", "a4", "a5", "a6", "a7"]);
    Term::boxed(Term::boxed(head, Term::boxed(Term::Basic(b1), Term::Basic(b2))), Term::Basic(b3))
}

/// Names of the bundled term fixtures.
pub const TERM_NAMES: &[&str] = &["GAMMA", "GAMMAP"];

pub fn term_by_name(name: &str) -> Option<Term> {
    match name {
        "GAMMA" => Some(gamma()),
        "GAMMAP" => Some(gamma_prime()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_dgraphs() {
        for name in GRAPH_NAMES {
            let g = graph_by_name(name).unwrap();
            assert!(g.is_dgraph(), "{name}");
        }
    }
}
