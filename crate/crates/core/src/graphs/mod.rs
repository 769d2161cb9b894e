//! Graph families on bitstring-labelled vertices.
//!
//! Vertex `i` of every labelled family carries the label whose big-endian
//! binary expansion is `i`, so the first coordinate `a_1` is the most
//! significant bit. In particular `0⋯0` is vertex 0 and `0⋯01` is vertex 1.

mod distance;
mod families;
pub mod io;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use distance::{distances, DistanceMatrix, UNREACHABLE};
pub use families::{
    augmented_adjacent, augmented_cube, augmented_cube_recursive, complement_perfect_matching,
    complete_graph, graph_power, hypercube, MAX_AUGMENTED_DIM, MAX_HYPERCUBE_DIM,
};

/// Longest bitstring a label can hold.
pub const MAX_LABEL_WIDTH: usize = 20;

/// A fixed-width binary string `a_1 ⋯ a_n`, most significant coordinate first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitLabel {
    value: u32,
    width: u8,
}

impl BitLabel {
    pub fn new(value: u32, width: usize) -> Result<Self> {
        if width == 0 || width > MAX_LABEL_WIDTH {
            return Err(Error::Parse(format!(
                "label width {width} not in 1..={MAX_LABEL_WIDTH}"
            )));
        }
        if (value as u64) >> width != 0 {
            return Err(Error::Parse(format!(
                "value {value} does not fit in {width} bits"
            )));
        }
        Ok(BitLabel {
            value,
            width: width as u8,
        })
    }

    /// Label of vertex `index` in a graph of dimension `width`.
    pub fn from_index(index: usize, width: usize) -> Result<Self> {
        let value =
            u32::try_from(index).map_err(|_| Error::Parse(format!("index {index} too large")))?;
        Self::new(value, width)
    }

    pub fn index(self) -> usize {
        self.value as usize
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    /// Coordinate `a_i` for `1 <= i <= width`.
    pub fn coord(self, i: usize) -> u8 {
        assert!(
            (1..=self.width()).contains(&i),
            "coordinate {i} out of range"
        );
        ((self.value >> (self.width() - i)) & 1) as u8
    }

    /// The last coordinate `a_n`.
    pub fn last(self) -> u8 {
        (self.value & 1) as u8
    }

    pub fn complement(self) -> Self {
        BitLabel {
            value: !self.value & mask(self.width()),
            width: self.width,
        }
    }

    pub fn xor(self, other: BitLabel) -> Self {
        debug_assert_eq!(self.width, other.width);
        BitLabel {
            value: self.value ^ other.value,
            width: self.width,
        }
    }
}

fn mask(width: usize) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

impl fmt::Display for BitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.width())
    }
}

impl FromStr for BitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::Parse(format!("not a bitstring: {s:?}")));
        }
        if s.len() > MAX_LABEL_WIDTH {
            return Err(Error::Parse(format!(
                "bitstring {s:?} longer than {MAX_LABEL_WIDTH}"
            )));
        }
        let value = u32::from_str_radix(s, 2).map_err(|e| Error::Parse(e.to_string()))?;
        BitLabel::new(value, s.len())
    }
}

/// Which construction produced a graph. Used for reporting and to look up
/// the explicit colourings that exist for some families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hypercube { n: usize },
    HypercubePower { n: usize, p: usize },
    AugmentedCube { n: usize },
    Complete { m: usize },
    MatchingComplement { m: usize },
    Other(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Hypercube { n } => write!(f, "hypercube n={n}"),
            Family::HypercubePower { n, p } => write!(f, "hypercube-power n={n} p={p}"),
            Family::AugmentedCube { n } => write!(f, "augmented-cube n={n}"),
            Family::Complete { m } => write!(f, "complete m={m}"),
            Family::MatchingComplement { m } => write!(f, "matching-complement m={m}"),
            Family::Other(tag) => f.write_str(tag),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form. Anything unrecognised is
    /// kept verbatim as [`Family::Other`].
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let Some(kind) = parts.next() else {
            return Ok(Family::Other(String::new()));
        };
        let mut n = None;
        let mut p = None;
        let mut m = None;
        for part in parts {
            let (key, value) = match part.split_once('=') {
                Some(kv) => kv,
                None => return Ok(Family::Other(s.to_string())),
            };
            let Ok(value) = value.parse::<usize>() else {
                return Ok(Family::Other(s.to_string()));
            };
            match key {
                "n" => n = Some(value),
                "p" => p = Some(value),
                "m" => m = Some(value),
                _ => return Ok(Family::Other(s.to_string())),
            }
        }
        let family = match (kind, n, p, m) {
            ("hypercube", Some(n), None, None) => Family::Hypercube { n },
            ("hypercube-power", Some(n), Some(p), None) => Family::HypercubePower { n, p },
            ("augmented-cube", Some(n), None, None) => Family::AugmentedCube { n },
            ("complete", None, None, Some(m)) => Family::Complete { m },
            ("matching-complement", None, None, Some(m)) => Family::MatchingComplement { m },
            _ => Family::Other(s.to_string()),
        };
        Ok(family)
    }
}

/// Simple undirected graph stored as dense bit rows.
///
/// Immutable once built; every constructor checks symmetry and the absence
/// of loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<BitLabel>>,
    family: Family,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Builds a graph from a symmetric adjacency predicate. `adjacent` is
    /// only queried for `u < v`.
    pub fn from_fn(
        n_vertices: usize,
        family: Family,
        labels: Option<Vec<BitLabel>>,
        mut adjacent: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let mut g = Graph::empty(n_vertices, family, labels)?;
        for u in 0..n_vertices {
            for v in u + 1..n_vertices {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn from_edges(
        n_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        family: Family,
        labels: Option<Vec<BitLabel>>,
    ) -> Result<Self> {
        let mut g = Graph::empty(n_vertices, family, labels)?;
        for (u, v) in edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n_vertices} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn empty(
        n_vertices: usize,
        family: Family,
        labels: Option<Vec<BitLabel>>,
    ) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidGraph(
                "graph needs at least one vertex".into(),
            ));
        }
        if let Some(labels) = &labels {
            check_labels(n_vertices, labels)?;
        }
        let words = words_for(n_vertices);
        Ok(Graph {
            n_vertices,
            words,
            adj: vec![0; n_vertices * words],
            labels,
            family,
        })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn labels(&self) -> Option<&[BitLabel]> {
        self.labels.as_deref()
    }

    /// Bitstring dimension, when the graph is labelled.
    pub fn dimension(&self) -> Option<usize> {
        self.labels.as_ref().map(|l| l[0].width())
    }

    pub fn label(&self, v: usize) -> Option<BitLabel> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Human-facing vertex name: the bitstring when labelled, else the index.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(label) => label.to_string(),
            None => v.to_string(),
        }
    }

    /// Resolves a bitstring label (or a decimal index on unlabelled graphs).
    pub fn vertex_by_name(&self, name: &str) -> Result<usize> {
        match &self.labels {
            Some(labels) => {
                let label: BitLabel = name.parse()?;
                if label.width() != labels[0].width() {
                    return Err(Error::Parse(format!(
                        "label {name} has width {}, graph dimension is {}",
                        label.width(),
                        labels[0].width()
                    )));
                }
                Ok(label.index())
            }
            None => {
                let v: usize = name
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex name {name:?}")))?;
                if v >= self.n_vertices {
                    return Err(Error::Parse(format!("vertex {v} out of range")));
                }
                Ok(v)
            }
        }
    }

    /// Row `v` of the adjacency matrix as `u64` words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &word)| BitIter { word, base: i * 64 })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n_vertices).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n_vertices {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n_vertices)
            .all(|v| self.degree(v) == d)
            .then_some(d)
    }

    /// Same edge set, regardless of labels and family.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n_vertices == other.n_vertices && self.adj == other.adj
    }

    /// The graph with vertex `v` renamed to `images[v]`. Labels and family
    /// are dropped because they no longer describe the vertex positions.
    pub fn relabel(&self, images: &[usize]) -> Result<Graph> {
        if images.len() != self.n_vertices {
            return Err(Error::LengthMismatch {
                expected: self.n_vertices,
                found: images.len(),
            });
        }
        let mut seen = vec![false; self.n_vertices];
        for &i in images {
            if i >= self.n_vertices || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        let edges = self
            .edges()
            .into_iter()
            .map(|(u, v)| (images[u], images[v]));
        Graph::from_edges(
            self.n_vertices,
            edges,
            Family::Other(format!("relabelled {}", self.family)),
            None,
        )
    }

    /// Induced subgraph on `vertices` (in the given order), unlabelled.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        Graph::from_fn(
            vertices.len(),
            Family::Other(format!("induced subgraph of {}", self.family)),
            None,
            |a, b| self.has_edge(vertices[a], vertices[b]),
        )
    }
}

fn check_labels(n_vertices: usize, labels: &[BitLabel]) -> Result<()> {
    if labels.len() != n_vertices {
        return Err(Error::LengthMismatch {
            expected: n_vertices,
            found: labels.len(),
        });
    }
    let width = labels[0].width();
    if n_vertices != 1 << width {
        return Err(Error::InvalidGraph(format!(
            "labelled graph of dimension {width} must have {} vertices, has {n_vertices}",
            1usize << width
        )));
    }
    for (i, label) in labels.iter().enumerate() {
        if label.width() != width || label.index() != i {
            return Err(Error::InvalidGraph(format!(
                "label {label} does not match vertex {i}"
            )));
        }
    }
    Ok(())
}

/// Canonical labels `0..2^n` for dimension `n`.
pub fn canonical_labels(n: usize) -> Result<Vec<BitLabel>> {
    (0..1usize << n)
        .map(|i| BitLabel::from_index(i, n))
        .collect()
}

pub(crate) struct BitIter {
    pub(crate) word: u64,
    pub(crate) base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}
