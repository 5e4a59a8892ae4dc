//! The JSON graph format: `{"vertices": [..], "edges": [{"id", "w", "e"}]}`.
//! Reading accepts any order; writing is sorted, so printing is canonical.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    w: String,
    e: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::new(doc.vertices, doc.edges.into_iter().map(|a| (a.id, a.w, a.e)))
}

pub fn graph_to_value(g: &Graph) -> serde_json::Value {
    let doc = GraphDoc {
        vertices: g.vertices().to_vec(),
        edges: g.edge_triples().map(|(a, w, e)| EdgeDoc { id: a.into(), w: w.into(), e: e.into() }).collect(),
    };
    serde_json::to_value(doc).expect("plain strings serialize")
}

pub fn print_graph(g: &Graph) -> String {
    let mut s = serde_json::to_string_pretty(&graph_to_value(g)).expect("plain strings serialize");
    s.push('\n');
    s
}
