//! JSON colour-matrix format and DOT export.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::ColouredGraph;

/// Serialized form of a [`ColouredGraph`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub directed: bool,
    pub n: usize,
    pub colour_count: usize,
    pub colours: Vec<Vec<u32>>,
}

impl From<&ColouredGraph> for GraphJson {
    fn from(g: &ColouredGraph) -> Self {
        GraphJson {
            directed: g.is_directed(),
            n: g.n(),
            colour_count: g.colour_count(),
            colours: g.rows(),
        }
    }
}

impl From<ColouredGraph> for GraphJson {
    fn from(g: ColouredGraph) -> Self {
        GraphJson::from(&g)
    }
}

impl TryFrom<GraphJson> for ColouredGraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        if j.colours.len() != j.n {
            return Err(Error::domain(format!(
                "'n' is {} but the matrix has {} rows",
                j.n,
                j.colours.len()
            )));
        }
        let g = ColouredGraph::from_rows(j.directed, &j.colours)?;
        if g.colour_count() != j.colour_count {
            return Err(Error::domain(format!(
                "'colour_count' is {} but {} colours are used",
                j.colour_count,
                g.colour_count()
            )));
        }
        Ok(g)
    }
}

pub fn to_json(g: &ColouredGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from(g)).expect("graph serializes")
}

pub fn from_json(text: &str) -> Result<ColouredGraph> {
    let j: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    ColouredGraph::try_from(j)
}

const PALETTE: [&str; 8] = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"];

/// Graphviz text. Colour-0 pairs are omitted; other colours get a palette
/// colour and their index as label. Vertex names are 1-based unless
/// `labels` is given.
pub fn to_dot(g: &ColouredGraph, labels: Option<&[String]>) -> String {
    let n = g.n();
    let name = |v: usize| match labels {
        Some(l) => l[v].clone(),
        None => (v + 1).to_string(),
    };
    let (kind, edge) = if g.is_directed() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = String::new();
    let _ = writeln!(out, "{kind} G {{");
    for v in 0..n {
        let _ = writeln!(out, "  \"{}\";", name(v));
    }
    for u in 0..n {
        for v in 0..n {
            if u == v || (!g.is_directed() && v < u) {
                continue;
            }
            let c = g.colour(u, v);
            if c == 0 {
                continue;
            }
            let _ = writeln!(
                out,
                "  \"{}\" {edge} \"{}\" [color={}, label=\"{c}\"];",
                name(u),
                name(v),
                PALETTE[(c as usize - 1) % PALETTE.len()]
            );
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = ColouredGraph::from_fn(true, 3, |u, v| u32::from((u + 1) % 3 == v)).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_rejects_inconsistent_fields() {
        let bad = r#"{"directed":false,"n":2,"colour_count":3,"colours":[[0,1],[1,0]]}"#;
        assert!(from_json(bad).is_err());
        let bad = r#"{"directed":false,"n":3,"colour_count":2,"colours":[[0,1],[1,0]]}"#;
        assert!(from_json(bad).is_err());
        assert!(matches!(from_json("{"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dot_omits_colour_zero() {
        let g = ColouredGraph::from_fn(false, 3, |u, v| u32::from(u == 0 && v == 1)).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches("--").count(), 1);
        assert!(dot.contains("\"1\" -- \"2\" [color=black, label=\"1\"]"));
    }
}
