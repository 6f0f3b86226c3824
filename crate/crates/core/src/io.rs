//! JSON encodings of graphs, labelings, signed graphs and solve results.
//!
//! Output is a single line in a fixed layout, e.g.
//! `{"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}`, so that files
//! written by two runs can be compared byte for byte.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::{ParityLabeling, SignedGraph};
use crate::solver::SolveResult;

#[derive(Debug, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    neg_edges: Option<Vec<[usize; 2]>>,
}

#[derive(Debug, Deserialize)]
struct LabelingDoc {
    n: usize,
    f: Vec<usize>,
}

fn pairs(out: &mut String, items: impl Iterator<Item = (usize, usize)>) {
    out.push('[');
    for (i, (a, b)) in items.enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "[{a}, {b}]");
    }
    out.push(']');
}

fn list(out: &mut String, items: impl Iterator<Item = usize>) {
    out.push('[');
    for (i, x) in items.enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}

pub fn graph_to_json(g: &Graph) -> String {
    let mut s = format!("{{\"n\": {}, \"edges\": ", g.order());
    pairs(&mut s, g.edges());
    s.push('}');
    s
}

/// Parses a graph document. Edge endpoints may come in any order; the graph
/// must be simple and connected.
pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let g = Graph::from_edges(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))?;
    g.require_connected()?;
    Ok(g)
}

pub fn labeling_to_json(f: &ParityLabeling) -> String {
    let mut s = format!("{{\"n\": {}, \"f\": ", f.order());
    list(&mut s, f.labels().iter().copied());
    s.push('}');
    s
}

pub fn labeling_from_json(text: &str) -> Result<ParityLabeling> {
    let doc: LabelingDoc = serde_json::from_str(text)?;
    if doc.f.len() != doc.n {
        return Err(Error::invalid(format!(
            "labeling declares n = {} but lists {} labels",
            doc.n,
            doc.f.len()
        )));
    }
    ParityLabeling::new(doc.f)
}

pub fn signed_graph_to_json(sg: &SignedGraph) -> String {
    let g = sg.graph();
    let mut s = format!("{{\"n\": {}, \"edges\": ", g.order());
    pairs(&mut s, g.edges());
    s.push_str(", \"neg_edges\": ");
    pairs(&mut s, sg.negative_edges());
    s.push('}');
    s
}

pub fn signed_graph_from_json(text: &str) -> Result<SignedGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let g = Graph::from_edges(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))?;
    g.require_connected()?;
    let neg = doc.neg_edges.unwrap_or_default();
    SignedGraph::from_negative_edges(g, neg.iter().map(|e| (e[0], e[1])))
}

pub fn solve_result_to_json(r: &SolveResult) -> String {
    let mut s = format!("{{\"value\": {}, \"certificate\": ", r.value);
    list(&mut s, r.certificate.members().iter().copied());
    let _ = write!(
        s,
        ", \"method\": \"{}\", \"lower_bound\": {}, \"upper_bound\": {}, \"exact\": {}, \"elapsed_ms\": {}}}",
        r.method,
        r.lower_bound,
        r.upper_bound,
        r.exact,
        r.elapsed.as_millis()
    );
    s
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Writes `text` followed by a newline.
pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, format!("{text}\n")).map_err(|e| Error::io(path.display().to_string(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_cycle_power};
    use crate::parity::signature_from_labeling;
    use crate::solver::{rna_exhaustive, SolverConfig};

    #[test]
    fn graph_layout() {
        let g = make_cycle(4).unwrap();
        assert_eq!(
            graph_to_json(&g),
            r#"{"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}"#
        );
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn loader_accepts_any_edge_order_but_rejects_disconnected() {
        let g = graph_from_json(r#"{"n": 3, "edges": [[2, 1], [1, 0]]}"#).unwrap();
        assert_eq!(graph_to_json(&g), r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#);
        assert!(matches!(
            graph_from_json(r#"{"n": 4, "edges": [[0, 1], [2, 3]]}"#),
            Err(Error::Disconnected { .. })
        ));
        assert!(matches!(graph_from_json("{\"n\": 3}"), Err(Error::Json(_))));
    }

    #[test]
    fn labeling_and_signed_graph() {
        let f = labeling_from_json(r#"{"n": 4, "f": [1, 2, 3, 4]}"#).unwrap();
        assert_eq!(labeling_to_json(&f), r#"{"n": 4, "f": [1, 2, 3, 4]}"#);
        assert!(labeling_from_json(r#"{"n": 5, "f": [1, 2, 3, 4]}"#).is_err());

        let sg = signature_from_labeling(&make_cycle(4).unwrap(), &f).unwrap();
        let text = signed_graph_to_json(&sg);
        assert_eq!(
            text,
            r#"{"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]], "neg_edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}"#
        );
        assert_eq!(signed_graph_from_json(&text).unwrap(), sg);
    }

    #[test]
    fn solve_result_layout() {
        let g = make_cycle_power(10, 2).unwrap();
        let r = rna_exhaustive(&g, &SolverConfig::default()).unwrap();
        let text = solve_result_to_json(&r);
        assert!(text.starts_with(
            r#"{"value": 6, "certificate": [0, 1, 2, 3, 4], "method": "exhaustive", "lower_bound": 4, "upper_bound": 12, "exact": true, "elapsed_ms": "#
        ));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["value"], 6);
    }
}
