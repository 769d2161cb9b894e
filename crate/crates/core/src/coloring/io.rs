//! Colouring files: `{"r": 3, "assignment": {"000": 3, "001": 3, ...}}`.
//!
//! Keys are vertex bitstrings; on unlabelled graphs they are decimal
//! vertex indices instead.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::Coloring;

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    r: u32,
    assignment: BTreeMap<String, u32>,
}

pub fn to_json(g: &Graph, c: &Coloring) -> Result<String> {
    if c.len() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            found: c.len(),
        });
    }
    let assignment = (0..c.len())
        .map(|v| (g.vertex_name(v), c.color(v)))
        .collect();
    Ok(serde_json::to_string(&ColoringJson {
        r: c.r(),
        assignment,
    })?)
}

/// Parses and validates totality, range and compatibility with `g`.
pub fn from_json(g: &Graph, text: &str) -> Result<Coloring> {
    let doc: ColoringJson = serde_json::from_str(text)?;
    let mut colors = vec![0u32; g.n_vertices()];
    for (name, color) in &doc.assignment {
        let v = g.vertex_by_name(name)?;
        colors[v] = *color;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(Error::InvalidColoring(format!(
            "vertex {} has no colour",
            g.vertex_name(v)
        )));
    }
    Coloring::new(colors, doc.r)
}

pub fn read_coloring(g: &Graph, path: impl AsRef<Path>) -> Result<Coloring> {
    from_json(g, &std::fs::read_to_string(path)?)
}

pub fn write_coloring(g: &Graph, c: &Coloring, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(g, c)?)?;
    Ok(())
}
