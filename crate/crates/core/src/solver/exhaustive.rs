//! Exhaustive search for distinguishing colourings.
//!
//! Colourings are enumerated in first-use order (colour `k + 1` appears only
//! after colour `k`), which visits one colouring per class under renaming
//! of colours. Vertices are coloured in a fixed order, and a partial
//! colouring is abandoned as soon as some non-identity automorphism moves
//! only coloured vertices and preserves their colours: every completion is
//! preserved by the same automorphism.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::perm::{search_automorphisms, Budget, OrderedPartition, SearchMode};

/// Largest vertex count accepted by the exhaustive search.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExhaustiveStats {
    /// Partial colourings visited.
    pub nodes: u64,
    /// Complete colourings reached.
    pub colorings_tested: u64,
    /// Automorphism-search nodes spent on pruning and leaf checks.
    pub automorphism_nodes: u64,
}

pub(crate) struct ColoringSearch<'a> {
    g: &'a Graph,
    r: u32,
    exact: bool,
    order: Vec<usize>,
    /// `may_prune[k]`: some non-identity automorphism fixes every vertex
    /// outside the first `k` of `order`.
    may_prune: Vec<bool>,
    budget: Budget,
    colors: Vec<u32>,
    pub(crate) stats: ExhaustiveStats,
}

impl<'a> ColoringSearch<'a> {
    /// With `exact`, only colourings using all `r` colours are considered.
    pub(crate) fn new(g: &'a Graph, r: u32, exact: bool, budget: Budget) -> Result<Self> {
        let n = g.n_vertices();
        if n > MAX_EXHAUSTIVE_VERTICES {
            return Err(Error::Precondition(format!(
                "exhaustive search is limited to {MAX_EXHAUSTIVE_VERTICES} vertices, graph has {n}"
            )));
        }
        if r == 0 {
            return Err(Error::Precondition("need at least one colour".into()));
        }
        let mut search = ColoringSearch {
            g,
            r,
            exact,
            order: Vec::new(),
            may_prune: Vec::new(),
            budget,
            colors: vec![0; n],
            stats: ExhaustiveStats::default(),
        };
        search.choose_order()?;
        Ok(search)
    }

    /// Partition fixing the uncoloured vertices (the last `n - k` of the
    /// order) and separating coloured vertices by colour.
    fn partial_partition(&self, k: usize, colored: bool) -> OrderedPartition {
        let mut cells: Vec<Vec<usize>> = self.order[k..].iter().map(|&v| vec![v]).collect();
        if colored {
            let mut by_color = vec![Vec::new(); self.r as usize];
            for &v in &self.order[..k] {
                by_color[self.colors[v] as usize - 1].push(v);
            }
            cells.extend(by_color.into_iter().filter(|c| !c.is_empty()));
        } else if k > 0 {
            cells.push(self.order[..k].to_vec());
        }
        OrderedPartition::from_cells(self.g.n_vertices(), cells)
            .expect("partition covers the vertex set")
    }

    fn spend(&mut self, nodes: u64) -> Result<Budget> {
        self.stats.automorphism_nodes += nodes;
        let used = self.stats.automorphism_nodes + self.stats.nodes;
        if used > self.budget.max_nodes {
            return Err(Error::BudgetExceeded {
                budget: self.budget.max_nodes,
                context: format!("exhaustive colouring search on {}", self.g.family()),
            });
        }
        Ok(Budget::new(self.budget.max_nodes - used))
    }

    fn has_automorphism(&mut self, partition: &OrderedPartition) -> Result<bool> {
        let remaining = self.spend(0)?;
        let found = search_automorphisms(self.g, partition, SearchMode::FirstOnly, remaining)?;
        self.spend(found.nodes)?;
        Ok(!found.generators.is_empty())
    }

    /// Greedy order: each next vertex maximises the size of the group that
    /// fixes every vertex not yet ordered, so that automorphisms with small
    /// support become visible early.
    fn choose_order(&mut self) -> Result<()> {
        let n = self.g.n_vertices();
        let mut order = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let mut may_prune = vec![false];
        for _ in 0..n {
            let mut best: Option<(usize, num_bigint::BigUint)> = None;
            for w in (0..n).filter(|&w| !used[w]) {
                let mut cells: Vec<Vec<usize>> = (0..n)
                    .filter(|&v| !used[v] && v != w)
                    .map(|v| vec![v])
                    .collect();
                cells.push(order.iter().copied().chain(std::iter::once(w)).collect());
                let partition = OrderedPartition::from_cells(n, cells).expect("valid partition");
                let remaining = self.spend(0)?;
                let found = search_automorphisms(self.g, &partition, SearchMode::Full, remaining)?;
                self.spend(found.nodes)?;
                let order_here = found.order();
                if best.as_ref().is_none_or(|(_, b)| order_here > *b) {
                    best = Some((w, order_here));
                }
            }
            let (w, size) = best.expect("an unordered vertex remains");
            used[w] = true;
            order.push(w);
            may_prune.push(size > num_bigint::BigUint::from(1u32));
        }
        self.order = order;
        self.may_prune = may_prune;
        Ok(())
    }

    pub(crate) fn run(&mut self) -> Result<Option<Coloring>> {
        if self.exact && self.r as usize > self.g.n_vertices() {
            return Ok(None);
        }
        self.extend(0, 0)
    }

    fn extend(&mut self, k: usize, max_used: u32) -> Result<Option<Coloring>> {
        let n = self.g.n_vertices();
        if k == n {
            self.stats.colorings_tested += 1;
            if self.exact && max_used < self.r {
                return Ok(None);
            }
            let partition = self.partial_partition(n, true);
            if self.has_automorphism(&partition)? {
                return Ok(None);
            }
            let coloring = Coloring::new(self.colors.clone(), self.r)?;
            return Ok(Some(coloring));
        }
        if self.exact && ((n - k) as u32) < self.r - max_used {
            return Ok(None);
        }
        let v = self.order[k];
        for color in 1..=(max_used + 1).min(self.r) {
            self.stats.nodes += 1;
            self.spend(0)?;
            self.colors[v] = color;
            // leaves are checked in full above
            if k + 1 < n && self.may_prune[k + 1] {
                let partition = self.partial_partition(k + 1, true);
                if self.has_automorphism(&partition)? {
                    continue;
                }
            }
            if let Some(found) = self.extend(k + 1, max_used.max(color))? {
                return Ok(Some(found));
            }
        }
        self.colors[v] = 0;
        Ok(None)
    }
}

/// A distinguishing colouring using at most `r` colours (exactly `r` with
/// `exact`), found by exhaustive search.
pub fn exhaustive_witness(
    g: &Graph,
    r: u32,
    exact: bool,
    budget: Budget,
) -> Result<(Option<Coloring>, ExhaustiveStats)> {
    let mut search = ColoringSearch::new(g, r, exact, budget)?;
    let found = search.run()?;
    Ok((found, search.stats))
}
