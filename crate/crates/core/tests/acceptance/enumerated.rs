//! Properties checked over every small D-graph from the generator.

use std::sync::OnceLock;

use rayon::prelude::*;

use juncta::geometry::closure::{is_pasting_scheme, ssc};
use juncta::geometry::disk::{cocycle_order, faces, realize, DiskRealization};
use juncta::geometry::dual::dual;
use juncta::grounding::{grounded_lists, psi, Mode, PsiTable};
use juncta::juncture::edge_indices;
use juncta::pgraph::{find_construction, is_p2, is_p3, Construction};
use juncta::pivots::{apply_pmove, dominates_by_cut, mu, p_pairs, pivot_witness, pivots_by_cut, pmove_sequence, pmove_sequence_in, PivotTree};
use juncta::{fixtures, gen, Caps, Error, Graph, Side};

use crate::{ensure, ok, Check};

/// The enumeration: every D-graph with at most four inner vertices and nine
/// edges, the first size with graphs that are not P-graphs. The costlier
/// properties run on the part with at most three inner vertices and seven
/// edges.
const LARGE: (usize, usize) = (4, 9);
const SMALL: (usize, usize) = (3, 7);

struct Instance {
    graph: Graph,
    construction: Option<Construction>,
}

fn instances() -> &'static Result<Vec<Instance>, String> {
    static CELL: OnceLock<Result<Vec<Instance>, String>> = OnceLock::new();
    CELL.get_or_init(|| {
        let caps = Caps::default();
        ok(gen::gen(LARGE.0, LARGE.1), "generator")?
            .into_par_iter()
            .map(|graph| {
                let construction = ok(find_construction(&graph, &caps), "find_construction")?;
                Ok(Instance { graph, construction })
            })
            .collect()
    })
}

/// The instances of the smaller size only.
fn small(all: &[Instance]) -> impl Iterator<Item = &Instance> {
    let (inner, edges) = SMALL;
    all.iter().filter(move |i| i.graph.inner_vertices().len() <= inner && i.graph.edge_count() <= edges)
}

pub fn deciders() -> Check {
    let all = instances().as_ref()?;
    let caps = Caps::default();
    let failures: Vec<String> = all
        .par_iter()
        .filter_map(|i| {
            let verdicts = (|| -> Result<(bool, bool, bool), String> {
                if let Some(k) = &i.construction {
                    ok(k.validate(), "construction")?;
                    ensure!(k.graph == i.graph, "construction of another graph");
                }
                Ok((i.construction.is_some(), ok(is_p2(&i.graph, &caps), "P''")?, ok(is_p3(&i.graph, &caps), "P'''")?))
            })();
            match verdicts {
                Ok((p1, p2, p3)) if p1 == p2 && p2 == p3 => None,
                Ok(v) => Some(format!("{:?}: P' P'' P''' = {v:?}", i.graph)),
                Err(e) => Some(format!("{:?}: {e}", i.graph)),
            }
        })
        .collect();
    ensure!(failures.is_empty(), "{} disagreements, first {}", failures.len(), failures[0]);
    let p = all.iter().filter(|i| i.construction.is_some()).count();
    ensure!(p < all.len(), "no instance outside the P-graphs");
    Ok(format!("{} graphs, {p} P-graphs, {} others", all.len(), all.len() - p))
}

fn witness_checks(d: &Graph, caps: &Caps) -> Result<usize, String> {
    let far = d.x_vertices(Side::E);
    let mut checked = 0;
    for &x in &far {
        for &y in &far {
            for &z in &far {
                if x == y || y == z || x == z {
                    continue;
                }
                if !(ok(psi(d, Side::E, x, y, z, caps), "psi")? && ok(psi(d, Side::E, y, x, z, caps), "psi")?) {
                    continue;
                }
                let name = |v: usize| d.vertex_name(v).to_string();
                let w = ok(pivot_witness(d, x, y, z, caps), "pivot_witness")?
                    .ok_or_else(|| format!("{d:?}: no pivot for ({}, {}, {})", name(x), name(y), name(z)))?;
                // Re-verified by cuts rather than by semipath enumeration.
                let pivots_x = pivots_by_cut(d, Side::W, x);
                let pivots_y = pivots_by_cut(d, Side::W, y);
                ensure!(
                    dominates_by_cut(d, w, z, x) && dominates_by_cut(d, w, z, y) && pivots_x.contains(&w) && pivots_y.contains(&w),
                    "{d:?}: witness {} fails for ({}, {}, {})",
                    name(w),
                    name(x),
                    name(y),
                    name(z)
                );
                checked += 1;
            }
        }
    }
    Ok(checked)
}

pub fn pivot_theorem() -> Check {
    let all = instances().as_ref()?;
    let caps = Caps::default();
    let counts: Vec<usize> = all.par_iter().map(|i| witness_checks(&i.graph, &caps)).collect::<Result<_, _>>()?;
    Ok(format!("{} witnesses over {} graphs", counts.iter().sum::<usize>(), all.len()))
}

fn sequences(d: &Graph, caps: &Caps) -> Result<usize, String> {
    let tree = ok(PivotTree::new(d, Side::W, caps), "pivot tree")?;
    let lists = ok(grounded_lists(d, Side::E, Mode::All, caps), "grounded lists")?;
    let table = ok(PsiTable::new(d, Side::E, caps), "psi table")?;
    let grounded = |l: &[String]| ok(table.positions(d, l), "positions").map(|p| table.grounded_positions(&p));
    let mut steps = 0;
    for pi in &lists {
        for theta in &lists {
            let seq = ok(pmove_sequence_in(d, &tree, pi, theta, caps), "pmove_sequence")?;
            if pi == &lists[0] {
                ensure!(ok(pmove_sequence(d, pi, theta, caps), "pmove_sequence")? == seq, "{d:?}: a fresh pivot tree moves differently");
            }
            let mut current = pi.clone();
            let mut level = ok(mu(d, &tree, pi, theta), "mu")?;
            for m in &seq {
                ensure!(m.upper == current, "{d:?}: steps do not chain");
                ensure!(p_pairs(&current, theta).contains(&(m.x.clone(), m.y.clone())), "{d:?}: ({}, {}) not inverted", m.x, m.y);
                let again = ok(apply_pmove(d, &tree, &current, theta, m.kind, &m.x, &m.y, caps), "side conditions")?;
                ensure!(again.lower == m.lower, "{d:?}: {:?}-({}, {}) does not replay", m.kind, m.x, m.y);
                let next = ok(mu(d, &tree, &m.lower, theta), "mu")?;
                ensure!(next < level, "{d:?}: mu goes from {level} to {next}");
                ensure!(grounded(&m.lower)?, "{d:?}: {:?} is not grounded", m.lower);
                level = next;
                current = m.lower.clone();
            }
            ensure!(&current == theta && level == 0, "{d:?}: sequence ends at {current:?}");
            steps += seq.len();
        }
    }
    Ok(steps)
}

pub fn pmoves() -> Check {
    let all = instances().as_ref()?;
    let caps = Caps::default();
    let pgraphs: Vec<&Instance> = small(all).filter(|i| i.construction.is_some()).collect();
    let steps: Vec<usize> = pgraphs.par_iter().map(|i| sequences(&i.graph, &caps)).collect::<Result<_, _>>()?;
    Ok(format!("{} moves over {} P-graphs", steps.iter().sum::<usize>(), pgraphs.len()))
}

/// Realizations obtained by transposing two neighbouring edge-ends at one
/// vertex.
fn tampered(r: &DiskRealization) -> impl Iterator<Item = DiskRealization> + '_ {
    (0..r.rotation.len()).filter(move |&v| r.rotation[v].len() >= 3).flat_map(move |v| {
        (0..r.rotation[v].len()).map(move |i| {
            let mut t = r.clone();
            let n = t.rotation[v].len();
            t.rotation[v].swap(i, (i + 1) % n);
            t
        })
    })
}

/// Counts of tampered embeddings on which both routes were evaluated.
fn realization_checks(k: &Construction) -> Result<usize, String> {
    let r = ok(realize(k), "realize")?;
    ok(r.validate(), "validate")?;
    ensure!(r.lw == k.lw && r.le == k.le, "meridians {:?} {:?} differ from root lists", r.lw, r.le);
    let fs = ok(faces(&r), "faces")?;
    let g = &r.graph;
    ensure!(g.vertex_count() + fs.len() == g.edge_count() + 2, "Euler characteristic");
    ensure!(fs.iter().all(|f| f.outer || f.bipolar.is_some()), "inner face not bipolar");
    let c = ok(ssc(&r), "ssc")?;
    ensure!(ok(is_pasting_scheme(&c), "pasting scheme")?, "closure is not a pasting scheme");
    let twice = ok(dual(&ok(dual(&c), "dual")?), "dual of dual")?;
    ensure!(twice.graph.is_isomorphic(&c.graph.opposite()), "D** is not the opposite graph");
    let mut evaluated = 0;
    for t in tampered(&c) {
        match is_pasting_scheme(&t) {
            Err(Error::Disagreement(m)) => return Err(format!("routes disagree on a tampered embedding: {m}")),
            Ok(_) => evaluated += 1,
            Err(_) => {}
        }
    }
    Ok(evaluated)
}

pub fn geometry() -> Check {
    let all = instances().as_ref()?;
    let caps = Caps::default();
    let mut ks: Vec<Construction> = all.iter().filter_map(|i| i.construction.clone()).collect();
    for d in [fixtures::j13r(), fixtures::g19(), fixtures::g41(), fixtures::four_edge_cut(), fixtures::two_roots()] {
        ks.push(ok(find_construction(&d, &caps), "fixture construction")?.ok_or("a fixture is not a P-graph")?);
    }
    let tampered: Vec<usize> = ks
        .par_iter()
        .map(|k| realization_checks(k).map_err(|e| format!("{:?}: {e}", k.graph)))
        .collect::<Result<_, _>>()?;
    let lc = fixtures::four_edge_cut();
    let r = ok(realize(&ok(find_construction(&lc, &caps), "LC")?.ok_or("LC is not a P-graph")?), "realize LC")?;
    let order = ok(cocycle_order(&r, &ok(edge_indices(&lc, &["a1", "a2", "a3", "a4"]), "cocycle")?), "cocycle order")?;
    ensure!(order.join(" ") == "a1 a2 a3 a4", "cocycle order {order:?}");
    Ok(format!("{} realizations, {} tampered embeddings judged alike by both routes", ks.len(), tampered.iter().sum::<usize>()))
}
