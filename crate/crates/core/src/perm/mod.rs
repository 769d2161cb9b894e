//! Permutations, permutation groups and the automorphism search.

mod group;
mod partition;
mod permutation;
mod search;

pub use group::{groups_equal_on_vertices, PermGroup};
pub use partition::{equitable_refinement, OrderedPartition};
pub use permutation::{is_automorphism, Permutation};
pub use search::{search_automorphisms, AutSearch, Budget, SearchMode};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Initial partition for a coloured search: colour classes in colour order.
pub fn color_partition(n: usize, colors: Option<&Coloring>) -> Result<OrderedPartition> {
    match colors {
        None => Ok(OrderedPartition::unit(n)),
        Some(c) => {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
            let cells = c
                .classes()
                .into_iter()
                .filter(|cell| !cell.is_empty())
                .collect();
            OrderedPartition::from_cells(n, cells)
        }
    }
}

/// All automorphisms of `g` that preserve `colors` (when given), with the
/// default node budget.
pub fn automorphism_group(g: &Graph, colors: Option<&Coloring>) -> Result<PermGroup> {
    automorphism_group_with_budget(g, colors, Budget::default())
}

pub fn automorphism_group_with_budget(
    g: &Graph,
    colors: Option<&Coloring>,
    budget: Budget,
) -> Result<PermGroup> {
    let initial = color_partition(g.n_vertices(), colors)?;
    group_respecting(g, &initial, budget)
}

/// The group of automorphisms mapping every cell of `initial` to itself.
pub fn group_respecting(
    g: &Graph,
    initial: &OrderedPartition,
    budget: Budget,
) -> Result<PermGroup> {
    let found = search_automorphisms(g, initial, SearchMode::Full, budget)?;
    let group = PermGroup::with_base_hint(g.n_vertices(), found.generators.clone(), &found.base)?;
    debug_assert_eq!(group.order(), found.order());
    Ok(group)
}

/// One non-identity automorphism mapping every cell of `initial` to itself,
/// if any exists.
pub fn find_nontrivial_automorphism(
    g: &Graph,
    initial: &OrderedPartition,
    budget: Budget,
) -> Result<Option<Permutation>> {
    let found = search_automorphisms(g, initial, SearchMode::FirstOnly, budget)?;
    Ok(found.generators.into_iter().next())
}
