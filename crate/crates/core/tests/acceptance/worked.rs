//! The worked examples on G19 and G41.

use std::collections::{BTreeMap, BTreeSet};

use juncta::grounding::{is_grounded, psi};
use juncta::lists::{parse_list, IdList};
use juncta::pivots::{apply_pmove, corolla, mu, p_pairs, petal, MoveKind, Node, PivotTree};
use juncta::{fixtures, Caps, Graph, Side};

use crate::{ensure, ok, Check};

fn names(g: &Graph, s: &BTreeSet<usize>) -> BTreeSet<String> {
    s.iter().map(|&v| g.vertex_name(v).to_string()).collect()
}

fn set(items: &str) -> BTreeSet<String> {
    items.split_whitespace().map(String::from).collect()
}

pub fn g19() -> Check {
    let g = fixtures::g19();
    let caps = Caps::default();
    let v = |n: &str| g.vertex(n).unwrap();
    let between: BTreeSet<String> =
        ok(g.semipaths(v("u7"), v("u9"), caps.semipaths), "[u7,u9]")?.iter().map(|p| p.display(&g)).collect();
    ensure!(between == set("u7a5u4a6u5a7u6a8u9 u7a5u4a3u3a4u6a8u9"), "[u7,u9] = {between:?}");
    let to_w = ok(g.semipaths_to_side(v("u8"), Side::W, caps.semipaths), "[u8]_W")?;
    ensure!(to_w.len() == 4, "|[u8]_W| = {}", to_w.len());
    ensure!(ok(psi(&g, Side::E, v("u7"), v("u8"), v("u9"), &caps), "psi")?, "psi_E(u7,u8,u9) fails");
    ensure!(!ok(psi(&g, Side::E, v("u7"), v("u9"), v("u8"), &caps), "psi")?, "psi_E(u7,u9,u8) holds");
    for (list, want) in [("u7 u8 u9 u10", true), ("u7 u8 u10 u9", true), ("u7 u9 u8 u10", false), ("u7 u10 u9 u8", false)] {
        let got = ok(is_grounded(&g, Side::E, &parse_list(list), &caps), "grounding")?;
        ensure!(got == want, "{list} grounded = {got}");
    }
    Ok("2 semipaths, 4 to W, psi and 4 lists as listed".into())
}

/// `μ_Θ(Π)` straight from the definitions: pivots are the inner vertices on
/// every semipath to the W-side, weights are summed over the pivot order.
pub fn mu_oracle(g: &Graph, pi: &[String], theta: &[String]) -> u64 {
    let caps = Caps::default();
    let pivots = |x: usize| -> BTreeSet<usize> {
        let paths = g.semipaths_to_side(x, Side::W, caps.semipaths).unwrap();
        g.inner_vertices().into_iter().filter(|&v| v != x && paths.iter().all(|p| p.contains_vertex(v))).collect()
    };
    let piv: BTreeMap<usize, BTreeSet<usize>> = (0..g.vertex_count()).map(|v| (v, pivots(v))).collect();
    let far = g.x_vertices(Side::E);
    let k = |v: usize| far.iter().filter(|x| piv[x].contains(&v)).count() as u64;
    let nodes: Vec<usize> = g.inner_vertices().into_iter().filter(|&v| k(v) >= 2).collect();
    fn weight(v: usize, nodes: &[usize], piv: &BTreeMap<usize, BTreeSet<usize>>, k: &dyn Fn(usize) -> u64) -> u64 {
        nodes
            .iter()
            .filter(|&&w| piv[&w].contains(&v))
            .map(|&w| k(w) * (k(w) - 1) / 2 * weight(w, nodes, piv, k))
            .sum::<u64>()
            + 1
    }
    let m: BTreeMap<usize, u64> = nodes.iter().map(|&v| (v, weight(v, &nodes, &piv, &k))).collect();
    let star = nodes.iter().map(|&w| k(w) * (k(w) - 1) / 2 * m[&w]).sum::<u64>() + 1;
    let pos = |l: &[String], x: &String| l.iter().position(|y| y == x).unwrap();
    let mut total = 0;
    for (i, x) in pi.iter().enumerate() {
        for y in &pi[i + 1..] {
            if pos(theta, y) < pos(theta, x) {
                let (xi, yi) = (g.vertex(x).unwrap(), g.vertex(y).unwrap());
                total += piv[&xi].intersection(&piv[&yi]).map(|v| m[v]).min().unwrap_or(star);
            }
        }
    }
    total
}

pub fn g41() -> Check {
    let g = fixtures::g41();
    let caps = Caps::default();
    let v = |n: &str| g.vertex(n).unwrap();
    ensure!(names(&g, &ok(corolla(&g, v("v1"), &caps), "corolla")?) == set("x1 x2 x3"), "corolla(v1) differs");
    ensure!(names(&g, &ok(petal(&g, v("v1"), v("x1"), &caps), "petal")?) == set("x1"), "petal of x1 at v1 differs");
    let tree = ok(PivotTree::new(&g, Side::W, &caps), "pivot tree")?;
    for (node, want) in [("v1", 1), ("v2", 1), ("v3", 1), ("v4", 6)] {
        let got = tree.m_weight(Node::Vertex(v(node)));
        ensure!(got == Some(want), "m({node}) = {got:?}");
    }
    ensure!(tree.m_weight(Node::Star) == Some(222), "m(*) = {:?}", tree.m_weight(Node::Star));
    let pi = parse_list("x1 x2 x3 x4 x5 x6 x7 x8 x9");
    let theta = parse_list("x8 x6 x7 x5 x4 x1 x2 x3 x9");
    let m = ok(mu(&g, &tree, &pi, &theta), "mu")?;
    ensure!(m == 139 && mu_oracle(&g, &pi, &theta) == 139, "mu(Pi) = {m}");
    let moves = [
        (MoveKind::Tr, "x5", "x8", "x8 x1 x2 x3 x4 x5 x6 x7 x9", 97),
        (MoveKind::Sf, "x5", "x6", "x7 x6 x5 x4 x3 x2 x1 x8 x9", 46),
    ];
    for (kind, x, y, lower, want) in moves {
        let mv = ok(apply_pmove(&g, &tree, &pi, &theta, kind, x, y, &caps), "P-move")?;
        ensure!(mv.lower == parse_list(lower), "{kind:?}-({x},{y}) gives {:?}", mv.lower);
        let m = ok(mu(&g, &tree, &mv.lower, &theta), "mu")?;
        ensure!(m == want && mu_oracle(&g, &mv.lower, &theta) == want, "mu after {kind:?}-({x},{y}) = {m}");
    }
    Ok("corolla, petal, m = 1,1,1,6,222, mu = 139, 97, 46".into())
}

/// The reference values for the widened fan. The third is one less than
/// the definition gives: the inverted pair (x4, x5) has a common pivot v2
/// of weight 1, which the reference total leaves out.
const WIDENED: [u64; 4] = [509, 5055, 2_516_124, 520_063];

pub fn widened() -> Check {
    let n = 100;
    let g = fixtures::g41_z(n);
    let caps = Caps::default();
    let tree = ok(PivotTree::new(&g, Side::W, &caps), "pivot tree")?;
    let zs: IdList = (1..=n).map(|i| format!("z{i}")).collect();
    let pi: IdList = [zs.clone(), parse_list("x4 x5 x6 x7 x8 x9")].concat();
    let theta: IdList = [parse_list("x8 x6 x7 x5 x4"), zs, parse_list("x9")].concat();
    let sf = ok(apply_pmove(&g, &tree, &pi, &theta, MoveKind::Sf, "x5", "x6", &caps), "Sf-(x5,x6)")?.lower;
    let got = [
        p_pairs(&pi, &theta).len() as u64,
        p_pairs(&sf, &theta).len() as u64,
        ok(mu(&g, &tree, &pi, &theta), "mu")?,
        ok(mu(&g, &tree, &sf, &theta), "mu")?,
    ];
    // Oracles: the definitions evaluated directly, and the closed form in n.
    let n = n as u64;
    let m4 = n * (n - 1) / 2 + 3;
    let closed = [5 * n + 9, (n + 4) + n * (n - 1) / 2 + 1, (5 * n + 8) * m4 + 1, (n + 4) * m4 + n * (n - 1) / 2 + 1];
    let direct = [mu_oracle(&g, &pi, &theta), mu_oracle(&g, &sf, &theta)];
    ensure!(got == closed && got[2..] == direct, "oracle mismatch: computed {got:?}, closed form {closed:?}, direct {direct:?}");
    let labels = ["|P(Pi)|", "|P(Sf)|", "mu(Pi)", "mu(Sf)"];
    let wrong: Vec<String> = (0..4)
        .filter(|&i| got[i] != WIDENED[i])
        .map(|i| format!("{} = {}, expected {}", labels[i], got[i], WIDENED[i]))
        .collect();
    ensure!(wrong.is_empty(), "{}", wrong.join("; "));
    Ok(format!("{got:?}"))
}
