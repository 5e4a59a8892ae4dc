//! The maps between incidented graphs and edge-graphs.

use juncta::{gen, EdgeGraph, Graph};

use crate::{ensure, ok, Check};

/// Labelled incidented graphs are enumerated up to this many edges; beyond
/// it only the D-graphs from the generator are used.
const LABELLED: usize = 4;
const EDGES: usize = 8;

/// `g` with each vertex renamed after the edges meeting there, the way the
/// way back from edge-graphs names them.
fn expected(g: &Graph) -> Result<Graph, String> {
    let join = |mut es: Vec<usize>| {
        es.sort_unstable();
        es.iter().map(|&a| g.edge_name(a)).collect::<Vec<_>>().join(",")
    };
    let names: Vec<String> =
        (0..g.vertex_count()).map(|v| format!("({}|{})", join(g.in_edges(v).to_vec()), join(g.out_edges(v).to_vec()))).collect();
    ok(g.rename_vertices(|v| names[g.vertex(v).unwrap()].clone()), "renaming")
}

fn round_trip(g: &Graph) -> Result<(), String> {
    let h = ok(EdgeGraph::from_graph(g), "H")?;
    let back = ok(h.to_graph(), "G")?;
    ensure!(back.is_isomorphic(g), "G(H(D)) is not isomorphic to D = {g:?}");
    ensure!(back == expected(g)?, "G(H(D)) = {back:?} for D = {g:?}");
    let again = ok(EdgeGraph::from_graph(&back), "H")?;
    ensure!(again == h, "H(G(H)) differs from H for D = {g:?}");
    Ok(())
}

pub fn round_trips() -> Check {
    let mut graphs = ok(gen::gen(gen::MAX_INNER, EDGES), "generator")?;
    let dgraphs = graphs.len();
    for n in 0..=LABELLED {
        graphs.extend(gen::incidented_graphs(n));
    }
    for g in &graphs {
        ensure!(g.is_incidented(), "{g:?} is not incidented");
        round_trip(g)?;
    }
    for k in 0..=4 {
        let h = EdgeGraph::unit((1..=k).map(|i| format!("a{i}")));
        let back = ok(h.to_graph(), "G")?;
        ensure!(ok(EdgeGraph::from_graph(&back), "H")? == h, "unit over {k} edges does not come back");
        ensure!(back.vertex_count() == 2 * k && back.components().len() == k, "unit over {k} edges");
    }
    Ok(format!("{dgraphs} D-graphs, {} labelled graphs, 5 units", graphs.len() - dgraphs))
}
