use crate::error::{Error, Result};

use super::{canonical_labels, distances, Family, Graph, UNREACHABLE};

/// Largest hypercube dimension; 2^16 dense rows take 512 MiB.
pub const MAX_HYPERCUBE_DIM: usize = 16;
pub const MAX_AUGMENTED_DIM: usize = 12;

fn check_dim(family: &'static str, n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::DimensionOutOfRange {
            family,
            n,
            min: 1,
            max,
        });
    }
    Ok(())
}

/// The `n`-cube `Q_n`: bitstrings of length `n`, adjacent at Hamming distance 1.
pub fn hypercube(n: usize) -> Result<Graph> {
    check_dim("hypercube", n, MAX_HYPERCUBE_DIM)?;
    let mut g = Graph::empty(1 << n, Family::Hypercube { n }, Some(canonical_labels(n)?))?;
    for v in 0..1usize << n {
        for bit in 0..n {
            let w = v ^ (1 << bit);
            if v < w {
                g.set_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// `G^p`: same vertices, `u ~ v` iff `0 < d_G(u, v) <= p`.
pub fn graph_power(g: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::Precondition("graph power needs p >= 1".into()));
    }
    let dist = distances(g);
    let family = match g.family() {
        Family::Hypercube { n } => Family::HypercubePower { n: *n, p },
        Family::HypercubePower { n, p: q } => Family::HypercubePower { n: *n, p: q * p },
        other => Family::Other(format!("power {p} of {other}")),
    };
    let labels = g.labels().map(<[_]>::to_vec);
    Graph::from_fn(g.n_vertices(), family, labels, |u, v| {
        let d = dist.get(u, v);
        d != UNREACHABLE && d as usize <= p
    })
}

/// Adjacency in the augmented cube `AQ_n` by the closed-form rule: the two
/// labels differ in exactly one coordinate, or they agree on a prefix
/// `a_1 ⋯ a_{l-1}` and differ on every coordinate from `l` to `n`.
///
/// With big-endian indices the second case is an XOR of the form `2^k - 1`.
pub fn augmented_adjacent(a: usize, b: usize) -> bool {
    let x = a ^ b;
    x != 0 && (x & (x - 1) == 0 || x & (x + 1) == 0)
}

/// The augmented cube `AQ_n`, built from the closed-form adjacency rule.
pub fn augmented_cube(n: usize) -> Result<Graph> {
    check_dim("augmented cube", n, MAX_AUGMENTED_DIM)?;
    Graph::from_fn(
        1 << n,
        Family::AugmentedCube { n },
        Some(canonical_labels(n)?),
        augmented_adjacent,
    )
}

/// The augmented cube built recursively: two copies of `AQ_{n-1}` (leading
/// bit 0 and 1) joined between corresponding vertices and between opposite
/// vertices.
pub fn augmented_cube_recursive(n: usize) -> Result<Graph> {
    check_dim("augmented cube", n, MAX_AUGMENTED_DIM)?;
    let mut edges = vec![(0usize, 1usize)];
    for k in 2..=n {
        let top = 1usize << (k - 1);
        let low_mask = top - 1;
        let mut next = Vec::with_capacity(2 * edges.len() + 2 * top);
        for &(u, v) in &edges {
            next.push((u, v));
            next.push((u | top, v | top));
        }
        for a in 0..top {
            // corresponding: same trailing k-1 bits
            next.push((a, a | top));
            // opposite: every trailing bit differs
            next.push((a, (!a & low_mask) | top));
        }
        edges = next;
    }
    Graph::from_edges(
        1 << n,
        edges,
        Family::AugmentedCube { n },
        Some(canonical_labels(n)?),
    )
}

fn power_of_two_labels(m: usize) -> Result<Option<Vec<super::BitLabel>>> {
    if m >= 2 && m.is_power_of_two() && m.trailing_zeros() as usize <= super::MAX_LABEL_WIDTH {
        Ok(Some(canonical_labels(m.trailing_zeros() as usize)?))
    } else {
        Ok(None)
    }
}

/// `K_m`. Labelled when `m` is a power of two.
pub fn complete_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::DimensionOutOfRange {
            family: "complete graph",
            n: m,
            min: 1,
            max: usize::MAX,
        });
    }
    Graph::from_fn(
        m,
        Family::Complete { m },
        power_of_two_labels(m)?,
        |_, _| true,
    )
}

/// `K_m` minus the perfect matching `{2i, 2i+1}`.
pub fn complement_perfect_matching(m: usize) -> Result<Graph> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::OddMatching(m));
    }
    Graph::from_fn(
        m,
        Family::MatchingComplement { m },
        power_of_two_labels(m)?,
        |u, v| u / 2 != v / 2,
    )
}
