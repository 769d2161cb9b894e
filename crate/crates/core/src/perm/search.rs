//! Automorphism search by individualization and refinement.
//!
//! The first path of the search tree individualizes the first vertex of the
//! target cell at every level until the partition is discrete; the vertices
//! chosen form the base `b_0, …, b_{k-1}`. Working from the deepest level up,
//! for every vertex `w` of the level-`i` target cell that is not yet known to
//! share an orbit with `b_i`, a backtracking descent looks for a leaf whose
//! correspondence with the first leaf is an automorphism. Each one found
//! fixes `b_0, …, b_{i-1}` and maps `b_i` to `w`, so the generators found at
//! levels `>= i` generate the pointwise stabilizer of `b_0, …, b_{i-1}` and
//! the group order is the product of the fundamental orbit lengths.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::group::UnionFind;
use super::partition::{OrderedPartition, Partition};
use super::permutation::preserves_edges;
use super::Permutation;

/// Limit on search-tree nodes (refinements) per invocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;
    pub const ENV_VAR: &'static str = "SYMBREAK_BUDGET";

    pub fn new(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    /// The default, overridden by `SYMBREAK_BUDGET` when it parses.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Self::DEFAULT_NODES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Generators for the whole group.
    Full,
    /// Stop at the first non-identity automorphism.
    FirstOnly,
}

/// Raw output of one search.
#[derive(Clone, Debug)]
pub struct AutSearch {
    pub generators: Vec<Permutation>,
    pub base: Vec<usize>,
    /// Orbit length of each base point under the generators found at its
    /// level and below. Complete only in [`SearchMode::Full`].
    pub orbit_lengths: Vec<usize>,
    pub nodes: u64,
}

impl AutSearch {
    pub fn order(&self) -> BigUint {
        self.orbit_lengths
            .iter()
            .fold(BigUint::one(), |acc, &l| acc * BigUint::from(l))
    }
}

struct PathLevel {
    partition: Partition,
    target: usize,
    base_point: usize,
}

struct Searcher<'a> {
    g: &'a Graph,
    budget: Budget,
    nodes: u64,
    path: Vec<PathLevel>,
    /// `traces[d]` and `shapes[d]`: refinement trace and cell shape after
    /// `d` individualizations on the first path.
    traces: Vec<u64>,
    shapes: Vec<Vec<usize>>,
    first_leaf: Vec<usize>,
}

impl Searcher<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded {
                budget: self.budget.max_nodes,
                context: format!(
                    "automorphism search on {} ({} vertices)",
                    self.g.family(),
                    self.g.n_vertices()
                ),
            });
        }
        Ok(())
    }

    fn leaf_permutation(&self, leaf: &Partition) -> Permutation {
        let mut image = vec![0; leaf.lab.len()];
        for (pos, &u) in self.first_leaf.iter().enumerate() {
            image[u] = leaf.lab[pos];
        }
        Permutation::from_vec_unchecked(image)
    }

    /// Looks for a leaf below `part` (at depth `depth`) equivalent to the first leaf.
    fn descend(&mut self, part: &Partition, depth: usize) -> Result<Option<Permutation>> {
        if part.is_discrete() {
            let p = self.leaf_permutation(part);
            return Ok(preserves_edges(self.g, &p).then_some(p));
        }
        let target = self.path[depth].target;
        let candidates = part.cell(target).to_vec();
        for u in candidates {
            self.tick()?;
            let mut child = part.clone();
            let trace = child.individualize(self.g, u);
            if trace != self.traces[depth + 1] || child.shape() != self.shapes[depth + 1] {
                continue;
            }
            if let Some(p) = self.descend(&child, depth + 1)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

/// Automorphisms of `g` that map every cell of `initial` onto itself.
pub fn search_automorphisms(
    g: &Graph,
    initial: &OrderedPartition,
    mode: SearchMode,
    budget: Budget,
) -> Result<AutSearch> {
    if initial.n_vertices() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            found: initial.n_vertices(),
        });
    }
    let mut root = Partition::from_ordered(initial);
    let root_trace = root.refine_all(g);

    let mut searcher = Searcher {
        g,
        budget,
        nodes: 1,
        path: Vec::new(),
        traces: vec![root_trace],
        shapes: vec![root.shape()],
        first_leaf: Vec::new(),
    };

    let mut part = root;
    while let Some(target) = part.target_cell() {
        searcher.tick()?;
        let base_point = *part.cell(target).iter().min().expect("non-empty cell");
        let mut child = part.clone();
        let trace = child.individualize(g, base_point);
        searcher.path.push(PathLevel {
            partition: part,
            target,
            base_point,
        });
        searcher.traces.push(trace);
        searcher.shapes.push(child.shape());
        part = child;
    }
    searcher.first_leaf = part.lab.clone();

    let depth = searcher.path.len();
    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbits = UnionFind::new(g.n_vertices());
    let mut orbit_lengths = vec![1; depth];

    for level in (0..depth).rev() {
        let b = searcher.path[level].base_point;
        let mut cell = searcher.path[level]
            .partition
            .cell(searcher.path[level].target)
            .to_vec();
        cell.sort_unstable();
        // vertices proven to lie outside the orbit of b
        let mut rejected: Vec<usize> = Vec::new();
        for w in cell {
            let rw = orbits.find(w);
            if rw == orbits.find(b) || rejected.iter().any(|&r| orbits.find(r) == rw) {
                continue;
            }
            searcher.tick()?;
            let mut child = searcher.path[level].partition.clone();
            let trace = child.individualize(g, w);
            let found = if trace == searcher.traces[level + 1]
                && child.shape() == searcher.shapes[level + 1]
            {
                searcher.descend(&child, level + 1)?
            } else {
                None
            };
            match found {
                Some(p) => {
                    for i in 0..g.n_vertices() {
                        orbits.union(i, p.apply(i));
                    }
                    generators.push(p);
                    if mode == SearchMode::FirstOnly {
                        return Ok(AutSearch {
                            generators,
                            base: searcher.path.iter().map(|l| l.base_point).collect(),
                            orbit_lengths,
                            nodes: searcher.nodes,
                        });
                    }
                }
                None => rejected.push(w),
            }
        }
        orbit_lengths[level] = orbits.class_size(b);
    }

    Ok(AutSearch {
        generators,
        base: searcher.path.iter().map(|l| l.base_point).collect(),
        orbit_lengths,
        nodes: searcher.nodes,
    })
}
