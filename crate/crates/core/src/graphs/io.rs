//! DIMACS and JSON graph files.
//!
//! DIMACS: `p edge <V> <E>`, one `e <u> <v>` line per edge with 1-based
//! vertex numbers, labels as `c label <u> <bitstring>` comments and the
//! family as a `c family <tag>` comment.
//!
//! JSON: `{"n_vertices", "family", "labels", "edges"}` with 0-based indices.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{BitLabel, Family, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dimacs,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n_vertices: usize,
    family: String,
    #[serde(default)]
    labels: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(g: &Graph) -> Result<String> {
    let doc = GraphJson {
        n_vertices: g.n_vertices(),
        family: g.family().to_string(),
        labels: g
            .labels()
            .map(|l| l.iter().map(ToString::to_string).collect())
            .unwrap_or_default(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    Ok(serde_json::to_string(&doc)?)
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let labels = parse_labels(doc.labels.iter().map(String::as_str))?;
    Graph::from_edges(
        doc.n_vertices,
        doc.edges.into_iter().map(|[u, v]| (u, v)),
        doc.family.parse()?,
        labels,
    )
}

fn parse_labels<'a>(labels: impl Iterator<Item = &'a str>) -> Result<Option<Vec<BitLabel>>> {
    let labels: Vec<BitLabel> = labels.map(str::parse).collect::<Result<_>>()?;
    Ok((!labels.is_empty()).then_some(labels))
}

pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "c family {}", g.family());
    if let Some(labels) = g.labels() {
        for (i, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "c label {} {}", i + 1, label);
        }
    }
    let _ = writeln!(out, "p edge {} {}", g.n_vertices(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut family = Family::Other("dimacs".into());
    let mut labels: Vec<(usize, BitLabel)> = Vec::new();
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let bad = |what: &str| Error::Parse(format!("line {}: {what}: {line:?}", lineno + 1));
        let mut fields = line.split_whitespace();
        match fields.next() {
            None => {}
            Some("c") => match fields.next() {
                Some("family") => {
                    let rest = line.trim_start()[1..].trim_start()["family".len()..].trim();
                    family = rest.parse()?;
                }
                Some("label") => {
                    let u: usize = fields
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("bad label vertex"))?;
                    let label: BitLabel =
                        fields.next().ok_or_else(|| bad("missing label"))?.parse()?;
                    if u == 0 {
                        return Err(bad("vertex numbers are 1-based"));
                    }
                    labels.push((u - 1, label));
                }
                _ => {}
            },
            Some("p") => {
                if header.is_some() {
                    return Err(bad("duplicate problem line"));
                }
                if fields.next() != Some("edge") {
                    return Err(bad("expected `p edge`"));
                }
                let v = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad vertex count"))?;
                let e = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad edge count"))?;
                header = Some((v, e));
            }
            Some("e") => {
                let u: usize = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad edge"))?;
                let v: usize = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad edge"))?;
                if u == 0 || v == 0 {
                    return Err(bad("vertex numbers are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => return Err(bad("unknown line type")),
        }
    }
    let (n, e) = header.ok_or_else(|| Error::Parse("missing `p edge` line".into()))?;
    let labels = if labels.is_empty() {
        None
    } else {
        labels.sort_by_key(|&(u, _)| u);
        if labels.iter().enumerate().any(|(i, &(u, _))| i != u) {
            return Err(Error::Parse(
                "labels must cover every vertex exactly once".into(),
            ));
        }
        Some(labels.into_iter().map(|(_, l)| l).collect())
    };
    let g = Graph::from_edges(n, edges, family, labels)?;
    if g.edge_count() != e {
        return Err(Error::Parse(format!(
            "header declares {e} edges, file has {}",
            g.edge_count()
        )));
    }
    Ok(g)
}

pub fn detect_format(text: &str) -> GraphFormat {
    if text.trim_start().starts_with('{') {
        GraphFormat::Json
    } else {
        GraphFormat::Dimacs
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match detect_format(text) {
        GraphFormat::Json => from_json(text),
        GraphFormat::Dimacs => from_dimacs(text),
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>, format: GraphFormat) -> Result<()> {
    let text = match format {
        GraphFormat::Json => to_json(g)?,
        GraphFormat::Dimacs => to_dimacs(g),
    };
    std::fs::write(path, text)?;
    Ok(())
}
