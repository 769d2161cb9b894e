//! Vertex colourings and the distinguishing property.
//!
//! Colours are `1..=r`. A colouring is distinguishing when the only
//! automorphism `π` with `c(π v) = c(v)` for every vertex is the identity.

mod explicit;
pub mod io;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::perm::{
    automorphism_group_with_budget, color_partition, find_nontrivial_automorphism, Budget,
    Permutation,
};

pub use explicit::{
    aq3_distinguishing_coloring, aqn_last_bit_coloring, common_neighbors_outside, m_sets,
    separates_parities, signature_case, twin, vertex_signature, MSets, SignatureCase,
    VertexSignature,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    r: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidColoring("need at least one colour".into()));
        }
        if colors.is_empty() {
            return Err(Error::InvalidColoring("empty colouring".into()));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > r) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has colour {c}, outside 1..={r}"
            )));
        }
        Ok(Coloring { colors, r })
    }

    /// Uses the largest colour present as `r`.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let r = colors.iter().copied().max().unwrap_or(0);
        Self::new(colors, r)
    }

    pub fn constant(n: usize) -> Self {
        Coloring {
            colors: vec![1; n],
            r: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Vertices of each colour: entry `k` holds colour `k + 1`. Classes may be empty.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c as usize - 1].push(v);
        }
        out
    }

    /// Number of colours actually used.
    pub fn used(&self) -> usize {
        self.classes().iter().filter(|c| !c.is_empty()).count()
    }

    /// Renames colour `k` to `renaming[k - 1]`; `renaming` must be a bijection on `1..=r`.
    pub fn rename(&self, renaming: &[u32]) -> Result<Coloring> {
        if renaming.len() != self.r as usize {
            return Err(Error::LengthMismatch {
                expected: self.r as usize,
                found: renaming.len(),
            });
        }
        let mut seen = vec![false; self.r as usize];
        for &c in renaming {
            if c == 0 || c > self.r || std::mem::replace(&mut seen[c as usize - 1], true) {
                return Err(Error::InvalidColoring(format!(
                    "{renaming:?} is not a bijection on 1..={}",
                    self.r
                )));
            }
        }
        Ok(Coloring {
            colors: self
                .colors
                .iter()
                .map(|&c| renaming[c as usize - 1])
                .collect(),
            r: self.r,
        })
    }
}

/// `c(p(v)) = c(v)` for every vertex.
pub fn is_color_preserving(p: &Permutation, c: &Coloring) -> Result<bool> {
    if p.degree() != c.len() {
        return Err(Error::LengthMismatch {
            expected: c.len(),
            found: p.degree(),
        });
    }
    Ok((0..c.len()).all(|v| c.color(p.apply(v)) == c.color(v)))
}

/// A non-identity colour-preserving automorphism, if one exists.
pub fn preserving_automorphism(
    g: &Graph,
    c: &Coloring,
    budget: Budget,
) -> Result<Option<Permutation>> {
    let initial = color_partition(g.n_vertices(), Some(c))?;
    find_nontrivial_automorphism(g, &initial, budget)
}

/// True iff no non-identity automorphism of `g` preserves `c`.
pub fn is_distinguishing(g: &Graph, c: &Coloring) -> Result<bool> {
    is_distinguishing_with_budget(g, c, Budget::default())
}

pub fn is_distinguishing_with_budget(g: &Graph, c: &Coloring, budget: Budget) -> Result<bool> {
    Ok(preserving_automorphism(g, c, budget)?.is_none())
}

/// Largest coloured group whose elements are scanned for a
/// smallest-support violation.
const SCAN_LIMIT: usize = 1 << 16;

/// A non-identity colour-preserving automorphism of smallest support, for
/// reporting why `c` fails. Small coloured groups are scanned in full; for
/// larger ones the generator with smallest support is returned.
pub fn smallest_violation(g: &Graph, c: &Coloring, budget: Budget) -> Result<Option<Permutation>> {
    let group = automorphism_group_with_budget(g, Some(c), budget)?;
    if group.is_trivial() {
        return Ok(None);
    }
    let candidates = match group.elements(SCAN_LIMIT) {
        Ok(all) => all,
        Err(_) => group.strong_generators().to_vec(),
    };
    Ok(candidates
        .into_iter()
        .filter(|p| !p.is_identity())
        .min_by_key(|p| (p.support().len(), p.images().to_vec())))
}
