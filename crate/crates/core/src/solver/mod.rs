//! Distinguishing numbers: exact values on small graphs, verified bounds
//! on larger ones, and the closed form for matching complements.

mod exhaustive;
pub mod report;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{
    aq3_distinguishing_coloring, aqn_last_bit_coloring, is_distinguishing_with_budget, Coloring,
};
use crate::error::{Error, Result};
use crate::graphs::{Family, Graph};
use crate::perm::{
    automorphism_group_with_budget, find_nontrivial_automorphism, Budget, OrderedPartition,
};

pub use exhaustive::{exhaustive_witness, ExhaustiveStats, MAX_EXHAUSTIVE_VERTICES};

/// Default number of random candidates per colour count.
pub const DEFAULT_RANDOM_CANDIDATES: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    ClosedForm,
    WitnessPlusLowerBound,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::ClosedForm => "closed_form",
            Method::WitnessPlusLowerBound => "witness_plus_lower_bound",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// The explicit colourings of augmented cubes.
    Explicit,
    Exhaustive,
    /// Independent uniform colours per vertex.
    Random,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "explicit" => Ok(Strategy::Explicit),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "random" => Ok(Strategy::Random),
            other => Err(Error::Parse(format!(
                "unknown strategy {other:?} (expected explicit, exhaustive or random)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub colorings_tested: u64,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Bounds on `D(G)` with an optional witness for the upper bound.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub lower: u32,
    pub upper: u32,
    pub witness: Option<Coloring>,
    pub method: Method,
    pub stats: SolveStats,
}

impl SolveResult {
    /// `D(G)`, when the bounds meet.
    pub fn value(&self) -> Option<u32> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// 1 if `g` has no non-trivial automorphism, else 2.
pub fn lower_bound(g: &Graph) -> Result<u32> {
    lower_bound_with_budget(g, Budget::default())
}

pub fn lower_bound_with_budget(g: &Graph, budget: Budget) -> Result<u32> {
    let unit = OrderedPartition::unit(g.n_vertices());
    Ok(
        if find_nontrivial_automorphism(g, &unit, budget)?.is_some() {
            2
        } else {
            1
        },
    )
}

/// `min { x : C(x, 2) >= 2^(n-1) }`, the distinguishing number of the
/// complement of a perfect matching on `2^n` vertices.
pub fn matching_complement_distnum(n: usize) -> Result<u32> {
    if !(2..=62).contains(&n) {
        return Err(Error::Precondition(format!(
            "matching-complement formula needs 2 <= n <= 62, got {n}"
        )));
    }
    let pairs_needed = 1u128 << (n - 1);
    let mut x: u128 = 2;
    while x * (x - 1) / 2 < pairs_needed {
        x += 1;
    }
    Ok(x as u32)
}

/// Re-checks a witness with the full coloured automorphism group.
fn verified(g: &Graph, c: Coloring, budget: Budget) -> Result<Coloring> {
    let group = automorphism_group_with_budget(g, Some(&c), budget)?;
    if !group.is_trivial() {
        return Err(Error::Precondition(format!(
            "internal error: candidate witness is preserved by a group of order {}",
            group.order()
        )));
    }
    Ok(c)
}

fn all_distinct(g: &Graph) -> Coloring {
    let n = g.n_vertices() as u32;
    Coloring::new((1..=n).collect(), n).expect("valid colouring")
}

/// Exact `D(g)` by exhaustive search over colour counts `1..=max_r`. When no
/// distinguishing colouring with `max_r` colours exists the result carries
/// `lower = max_r + 1` and the trivial upper bound `|V|`.
pub fn distinguishing_number_exhaustive(
    g: &Graph,
    max_r: u32,
    budget: Budget,
) -> Result<SolveResult> {
    let start = Instant::now();
    if g.n_vertices() > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::Precondition(format!(
            "exhaustive search is limited to {MAX_EXHAUSTIVE_VERTICES} vertices, graph has {}",
            g.n_vertices()
        )));
    }
    let mut stats = SolveStats::default();
    let lower = lower_bound_with_budget(g, budget)?;
    if lower == 1 {
        return Ok(SolveResult {
            lower: 1,
            upper: 1,
            witness: Some(Coloring::constant(g.n_vertices())),
            method: Method::Exhaustive,
            stats: SolveStats {
                elapsed: start.elapsed(),
                ..stats
            },
        });
    }
    for r in 2..=max_r {
        let (found, s) = exhaustive_witness(g, r, true, budget)?;
        stats.nodes += s.nodes + s.automorphism_nodes;
        stats.colorings_tested += s.colorings_tested;
        if let Some(c) = found {
            let c = verified(g, c, budget)?;
            stats.elapsed = start.elapsed();
            return Ok(SolveResult {
                lower: r,
                upper: r,
                witness: Some(c),
                method: Method::Exhaustive,
                stats,
            });
        }
    }
    stats.elapsed = start.elapsed();
    let n = g.n_vertices() as u32;
    Ok(SolveResult {
        lower: (max_r + 1).max(lower),
        upper: n,
        witness: Some(all_distinct(g)),
        method: Method::Exhaustive,
        stats,
    })
}

/// The explicit colouring for this graph's family, if there is one.
pub fn explicit_coloring_for(g: &Graph) -> Option<Coloring> {
    match g.family() {
        Family::AugmentedCube { n: 3 } => Some(aq3_distinguishing_coloring()),
        Family::AugmentedCube { n } if *n >= 4 => aqn_last_bit_coloring(*n).ok(),
        _ => None,
    }
}

/// Looks for a distinguishing colouring with at most `r` colours.
///
/// `budget` is a node budget for the exhaustive strategy and a candidate
/// count for the random one. Absence is a proof of non-existence only for
/// the exhaustive strategy.
pub fn find_distinguishing_coloring(
    g: &Graph,
    r: u32,
    strategy: Strategy,
    seed: u64,
    budget: Option<u64>,
) -> Result<Option<Coloring>> {
    Ok(find_with_stats(g, r, strategy, seed, budget)?.0)
}

fn find_with_stats(
    g: &Graph,
    r: u32,
    strategy: Strategy,
    seed: u64,
    budget: Option<u64>,
) -> Result<(Option<Coloring>, SolveStats)> {
    if r == 0 {
        return Err(Error::Precondition("need at least one colour".into()));
    }
    let node_budget = Budget::new(budget.unwrap_or(Budget::from_env().max_nodes));
    let mut stats = SolveStats::default();
    let start = Instant::now();
    let found = match strategy {
        Strategy::Explicit => {
            let c = explicit_coloring_for(g).ok_or_else(|| {
                Error::Precondition(format!("no explicit colouring is known for {}", g.family()))
            })?;
            stats.colorings_tested = 1;
            if c.r() > r {
                None
            } else {
                let c = Coloring::new(c.colors().to_vec(), r)?;
                is_distinguishing_with_budget(g, &c, node_budget)?.then_some(c)
            }
        }
        Strategy::Exhaustive => {
            let (found, s) = exhaustive_witness(g, r, false, node_budget)?;
            stats.nodes = s.nodes + s.automorphism_nodes;
            stats.colorings_tested = s.colorings_tested;
            found
        }
        Strategy::Random => {
            let candidates = budget.unwrap_or(DEFAULT_RANDOM_CANDIDATES);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            for _ in 0..candidates {
                let colors: Vec<u32> = (0..g.n_vertices()).map(|_| rng.gen_range(1..=r)).collect();
                let c = Coloring::new(colors, r)?;
                stats.colorings_tested += 1;
                if is_distinguishing_with_budget(g, &c, Budget::from_env())? {
                    found = Some(c);
                    break;
                }
            }
            found
        }
    };
    let found = match found {
        Some(c) => Some(verified(g, c, Budget::from_env())?),
        None => None,
    };
    stats.elapsed = start.elapsed();
    Ok((found, stats))
}

/// Brackets `D(g)` between the automorphism lower bound and the smallest
/// `r <= max_r` for which `strategy` finds a verified witness.
pub fn solve_with_witness(
    g: &Graph,
    max_r: u32,
    strategy: Strategy,
    seed: u64,
    budget: Option<u64>,
) -> Result<SolveResult> {
    if strategy == Strategy::Exhaustive {
        let budget = Budget::new(budget.unwrap_or(Budget::from_env().max_nodes));
        return distinguishing_number_exhaustive(g, max_r, budget);
    }
    let start = Instant::now();
    let method = Method::WitnessPlusLowerBound;
    let lower = lower_bound_with_budget(g, Budget::from_env())?;
    let mut stats = SolveStats::default();
    if lower == 1 {
        return Ok(SolveResult {
            lower: 1,
            upper: 1,
            witness: Some(Coloring::constant(g.n_vertices())),
            method,
            stats: SolveStats {
                elapsed: start.elapsed(),
                ..stats
            },
        });
    }
    for r in lower..=max_r {
        let (found, s) = find_with_stats(g, r, strategy, seed, budget)?;
        stats.nodes += s.nodes;
        stats.colorings_tested += s.colorings_tested;
        if let Some(c) = found {
            stats.elapsed = start.elapsed();
            return Ok(SolveResult {
                lower,
                upper: r,
                witness: Some(c),
                method,
                stats,
            });
        }
    }
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        lower,
        upper: g.n_vertices() as u32,
        witness: Some(all_distinct(g)),
        method,
        stats,
    })
}
