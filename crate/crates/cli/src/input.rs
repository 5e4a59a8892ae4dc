//! Resolving arguments: fixtures, files, inline terms and lists.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;

use juncta::fixtures;
use juncta::format::parse_graph;
use juncta::geometry::mgraph::MGraph;
use juncta::lists::IdList;
use juncta::terms::{parse_term, Term};
use juncta::{Error, Graph, Result, Side};

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

pub fn load_graph(arg: &str) -> Result<Graph> {
    if let Some(g) = fixtures::graph_by_name(arg) {
        return Ok(g);
    }
    parse_graph(&read(arg)?)
}

/// A term fixture, an inline s-expression, or a file holding one. `None`
/// when the argument names none of these, so callers can fall back to
/// graphs.
pub fn load_term(arg: &str) -> Result<Option<Term>> {
    if let Some(t) = fixtures::term_by_name(arg) {
        return Ok(Some(t));
    }
    if arg.trim_start().starts_with('(') {
        return parse_term(arg).map(Some);
    }
    if Path::new(arg).is_file() {
        let text = read(arg)?;
        if text.trim_start().starts_with('(') {
            return parse_term(&text).map(Some);
        }
    }
    Ok(None)
}

pub fn require_term(arg: &str) -> Result<Term> {
    load_term(arg)?.ok_or_else(|| Error::Parse(format!("`{arg}` is neither a term fixture, a term nor a term file")))
}

/// A graph document with the extra fields `north`, `south`, `west`, `east`.
pub fn load_mgraph(arg: &str) -> Result<MGraph> {
    let mut doc: Value = serde_json::from_str(&read(arg)?).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = doc.as_object_mut().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let mut take = |k: &str| obj.remove(k).unwrap_or(Value::Null);
    let (north, south, west, east) = (take("north"), take("south"), take("west"), take("east"));
    Ok(MGraph {
        graph: parse_graph(&doc.to_string())?,
        north: field(north)?,
        south: field(south)?,
        west: field::<Option<IdList>>(west)?.unwrap_or_default(),
        east: field::<Option<IdList>>(east)?.unwrap_or_default(),
    })
}

fn field<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_side(s: &str) -> Result<Side> {
    Side::parse(s)
}

pub fn vertex(g: &Graph, name: &str) -> Result<usize> {
    g.vertex(name)
}

/// Splits on whitespace and expands `p3..p7` into `p3 p4 p5 p6 p7`.
pub fn list(text: &str) -> IdList {
    text.split_whitespace().flat_map(expand).collect()
}

fn split_number(s: &str) -> Option<(&str, u64)> {
    let i = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    Some((&s[..i], s[i..].parse().ok()?))
}

fn expand(token: &str) -> Vec<String> {
    if let Some((a, b)) = token.split_once("..") {
        if let (Some((p, i)), Some((q, j))) = (split_number(a), split_number(b)) {
            if p == q && i <= j {
                return (i..=j).map(|k| format!("{p}{k}")).collect();
            }
        }
    }
    vec![token.to_string()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_expand() {
        assert_eq!(list("x1..x3 y"), ["x1", "x2", "x3", "y"]);
        assert_eq!(list("a..b"), ["a..b"]);
        assert_eq!(list(" u7  u8 "), ["u7", "u8"]);
    }

    #[test]
    fn terms_resolve() {
        assert!(load_term("GAMMA").unwrap().is_some());
        assert!(load_term("(unit a b)").unwrap().is_some());
        assert!(load_term("G19").unwrap().is_none());
        assert!(load_term("(box").is_err());
    }
}
