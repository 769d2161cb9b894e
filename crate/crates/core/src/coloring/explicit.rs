// Explicit colourings of augmented cubes and the neighbour-count signatures
// used to show that they are distinguishing.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{BitLabel, Graph, MAX_AUGMENTED_DIM};

use super::Coloring;

/// The distinguishing 3-colouring of `AQ_3`: `000, 001 ↦ 3`,
/// `010, 100, 110 ↦ 1`, `011, 101, 111 ↦ 2`.
pub fn aq3_distinguishing_coloring() -> Coloring {
    //              000 001 010 011 100 101 110 111
    Coloring::new(vec![3, 3, 1, 2, 1, 2, 1, 2], 3).expect("valid colouring")
}

/// The 2-colouring of `AQ_n`, `n >= 4`: `0⋯0 ↦ 2`, `0⋯01 ↦ 1`, and every
/// other vertex gets its last bit plus one.
pub fn aqn_last_bit_coloring(n: usize) -> Result<Coloring> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "the last-bit colouring needs n >= 4, got {n}"
        )));
    }
    if n > MAX_AUGMENTED_DIM {
        return Err(Error::DimensionOutOfRange {
            family: "augmented cube",
            n,
            min: 4,
            max: MAX_AUGMENTED_DIM,
        });
    }
    let colors = (0..1usize << n)
        .map(|v| match v {
            0 => 2,
            1 => 1,
            _ => (v & 1) as u32 + 1,
        })
        .collect();
    Coloring::new(colors, 2)
}

/// Whether every vertex other than `0⋯0` and `0⋯01` with last bit 0 has a
/// colour different from every such vertex with last bit 1.
pub fn separates_parities(n: usize, c: &Coloring) -> Result<bool> {
    if n == 0 || n > MAX_AUGMENTED_DIM || c.len() != 1 << n {
        return Err(Error::LengthMismatch {
            expected: 1usize.checked_shl(n as u32).unwrap_or(0),
            found: c.len(),
        });
    }
    let mut even = BTreeSet::new();
    let mut odd = BTreeSet::new();
    for v in 2..c.len() {
        if v & 1 == 0 {
            even.insert(c.color(v));
        } else {
            odd.insert(c.color(v));
        }
    }
    Ok(even.is_disjoint(&odd))
}

/// `(own colour, colour-1 neighbours, colour-2 neighbours)` of a vertex under a 2-colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSignature {
    pub own_color: u32,
    pub count_color1: usize,
    pub count_color2: usize,
}

impl VertexSignature {
    pub fn new(own_color: u32, count_color1: usize, count_color2: usize) -> Self {
        VertexSignature {
            own_color,
            count_color1,
            count_color2,
        }
    }
}

pub fn vertex_signature(g: &Graph, c: &Coloring, w: usize) -> Result<VertexSignature> {
    if c.r() != 2 {
        return Err(Error::Precondition(format!(
            "signatures are defined for 2-colourings, got r = {}",
            c.r()
        )));
    }
    if c.len() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            found: c.len(),
        });
    }
    if w >= g.n_vertices() {
        return Err(Error::Precondition(format!("vertex {w} out of range")));
    }
    let ones = g.neighbors(w).filter(|&v| c.color(v) == 1).count();
    Ok(VertexSignature::new(c.color(w), ones, g.degree(w) - ones))
}

/// Closed-neighbourhood colour sets around `0⋯0` and `0⋯01` under the
/// last-bit colouring. `M_{i,j}` is the set of vertices in `N[i]` of colour `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSets {
    /// `M_{0,1} ∖ M_{1,1}`
    pub m01_minus_m11: Vec<usize>,
    /// `M_{0,2} ∖ M_{1,2}`
    pub m02_minus_m12: Vec<usize>,
    /// `M_{1,1} ∖ M_{0,1}`
    pub m11_minus_m01: Vec<usize>,
    /// `M_{1,2} ∖ M_{0,2}`
    pub m12_minus_m02: Vec<usize>,
}

impl MSets {
    /// `M = (M_{0,1} ∖ M_{1,1}) ∪ (M_{0,2} ∖ M_{1,2})`, sorted.
    pub fn m(&self) -> Vec<usize> {
        sorted_union(&self.m01_minus_m11, &self.m02_minus_m12)
    }

    /// The counterpart of `M` for `0⋯01`, obtained by flipping last bits and
    /// swapping the colours.
    pub fn m_flipped(&self) -> Vec<usize> {
        sorted_union(&self.m11_minus_m01, &self.m12_minus_m02)
    }
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .chain(b)
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// The M-sets of `g = AQ_n` under [`aqn_last_bit_coloring`]`(n)`.
pub fn m_sets(g: &Graph, n: usize) -> Result<MSets> {
    let c = aqn_last_bit_coloring(n)?;
    if g.n_vertices() != 1 << n || g.dimension() != Some(n) {
        return Err(Error::Precondition(format!(
            "expected the augmented cube of dimension {n}"
        )));
    }
    let closed = |i: usize, color: u32| -> BTreeSet<usize> {
        g.neighbors(i)
            .chain(std::iter::once(i))
            .filter(|&v| c.color(v) == color)
            .collect()
    };
    let (m01, m02, m11, m12) = (closed(0, 1), closed(0, 2), closed(1, 1), closed(1, 2));
    Ok(MSets {
        m01_minus_m11: m01.difference(&m11).copied().collect(),
        m02_minus_m12: m02.difference(&m12).copied().collect(),
        m11_minus_m01: m11.difference(&m01).copied().collect(),
        m12_minus_m02: m12.difference(&m02).copied().collect(),
    })
}

/// Which of the six signature equations a vertex falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignatureCase {
    /// `w ∈ M_{0,1} ∖ M_{1,1}`: `(1, n-2, n+1)`
    NearZeroColor1,
    /// `w ∈ M_{0,2} ∖ M_{1,2}`: `(2, n-1, n)`
    NearZeroColor2,
    /// `w ∈ M_{1,1} ∖ M_{0,1}`: `(1, n, n-1)`
    NearOneColor1,
    /// `w ∈ M_{1,2} ∖ M_{0,2}`: `(2, n+1, n-2)`
    NearOneColor2,
    /// any other vertex of colour 1: `(1, n-1, n)`
    OtherColor1,
    /// any other vertex of colour 2: `(2, n, n-1)`
    OtherColor2,
}

impl SignatureCase {
    pub const ALL: [SignatureCase; 6] = [
        SignatureCase::NearZeroColor1,
        SignatureCase::NearZeroColor2,
        SignatureCase::NearOneColor1,
        SignatureCase::NearOneColor2,
        SignatureCase::OtherColor1,
        SignatureCase::OtherColor2,
    ];

    /// Equation number, 1 through 6.
    pub fn equation(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).expect("listed") + 1
    }

    pub fn predicted(self, n: usize) -> VertexSignature {
        match self {
            SignatureCase::NearZeroColor1 => VertexSignature::new(1, n - 2, n + 1),
            SignatureCase::NearZeroColor2 => VertexSignature::new(2, n - 1, n),
            SignatureCase::NearOneColor1 => VertexSignature::new(1, n, n - 1),
            SignatureCase::NearOneColor2 => VertexSignature::new(2, n + 1, n - 2),
            SignatureCase::OtherColor1 => VertexSignature::new(1, n - 1, n),
            SignatureCase::OtherColor2 => VertexSignature::new(2, n, n - 1),
        }
    }
}

/// Classifies `w` by M-set membership, falling back to its colour.
pub fn signature_case(sets: &MSets, c: &Coloring, w: usize) -> SignatureCase {
    if sets.m01_minus_m11.contains(&w) {
        SignatureCase::NearZeroColor1
    } else if sets.m02_minus_m12.contains(&w) {
        SignatureCase::NearZeroColor2
    } else if sets.m11_minus_m01.contains(&w) {
        SignatureCase::NearOneColor1
    } else if sets.m12_minus_m02.contains(&w) {
        SignatureCase::NearOneColor2
    } else if c.color(w) == 1 {
        SignatureCase::OtherColor1
    } else {
        SignatureCase::OtherColor2
    }
}

/// Vertices outside `set` adjacent to every member of `set`.
pub fn common_neighbors_outside(g: &Graph, set: &[usize]) -> Vec<usize> {
    (0..g.n_vertices())
        .filter(|v| !set.contains(v) && set.iter().all(|&m| g.has_edge(*v, m)))
        .collect()
}

/// `x_1 x_2 x_3 ↦ x_1 x̄_2 x̄_3` on `AQ_3`.
pub fn twin(x: BitLabel) -> Result<BitLabel> {
    if x.width() != 3 {
        return Err(Error::Precondition(format!(
            "twin is defined on 3-bit labels, got {x}"
        )));
    }
    Ok(x.xor(BitLabel::new(0b011, 3)?))
}
