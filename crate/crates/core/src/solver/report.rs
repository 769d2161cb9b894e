//! Recomputes every published distinguishing-number value and automorphism
//! group equality, pairing each with what was computed and how.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::coloring::{io as coloring_io, is_distinguishing_with_budget, Coloring};
use crate::error::{Error, Result};
use crate::graphs::{augmented_cube, graph_power, hypercube, Graph};
use crate::perm::{
    automorphism_group_with_budget, groups_equal_on_vertices, is_automorphism, Budget,
};

use super::{
    distinguishing_number_exhaustive, matching_complement_distnum, solve_with_witness, Method,
    SolveResult, Strategy,
};

/// Largest `n` for exhaustive hypercube rows, and for witness rows.
pub const QN_EXHAUSTIVE_MAX: usize = 4;
pub const QN_WITNESS_MAX: usize = 6;
pub const AQN_EXHAUSTIVE_MAX: usize = 3;
pub const AQN_WITNESS_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Table {
    Qn,
    Qpowers,
    Aqn,
}

impl Table {
    pub const ALL: [Table; 3] = [Table::Qn, Table::Qpowers, Table::Aqn];

    pub fn name(self) -> &'static str {
        match self {
            Table::Qn => "qn",
            Table::Qpowers => "qpowers",
            Table::Aqn => "aqn",
        }
    }
}

impl std::str::FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qn" => Ok(Table::Qn),
            "qpowers" => Ok(Table::Qpowers),
            "aqn" => Ok(Table::Aqn),
            other => Err(Error::Parse(format!("unknown table {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReproduceConfig {
    pub tables: Vec<Table>,
    pub max_n: usize,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for ReproduceConfig {
    fn default() -> Self {
        ReproduceConfig {
            tables: Table::ALL.to_vec(),
            max_n: 5,
            seed: 1,
            budget: Budget::from_env(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    Value { value: u32 },
    GroupsEqual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Bounds {
        lower: u32,
        upper: u32,
        value: Option<u32>,
    },
    GroupsEqual {
        equal: bool,
        order: String,
        generators_preserve_base: bool,
    },
    Skipped {
        reason: String,
    },
    Aborted {
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    /// Consistent with the claim but not tight, or not computed.
    Partial,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub table: Table,
    pub id: String,
    pub source: &'static str,
    pub claim: Claim,
    pub outcome: Outcome,
    pub method: Option<Method>,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    pub witness_json: Option<String>,
    pub witness_path: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub seed: u64,
    pub rows: Vec<Row>,
    /// Computed `D(AQ_1), D(AQ_2), …` when the augmented-cube table ran.
    pub aq_sequence: Vec<Option<u32>>,
    /// The sequence climbs to a value of at least 4 and then falls back to 2.
    pub aq_rises_then_falls: Option<bool>,
}

impl Report {
    pub fn mismatches(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.status == Status::Mismatch)
            .count()
    }

    pub fn aborted(&self) -> bool {
        self.rows
            .iter()
            .any(|r| matches!(r.outcome, Outcome::Aborted { .. }))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# Distinguishing-number reproduction (max n = {}, seed = {})\n",
            self.max_n, self.seed
        );
        let _ = writeln!(
            out,
            "| table | claim | source | expected | computed | method | status | witness |"
        );
        let _ = writeln!(out, "|---|---|---|---|---|---|---|---|");
        for row in &self.rows {
            let expected = match row.claim {
                Claim::Value { value } => value.to_string(),
                Claim::GroupsEqual => "equal".into(),
            };
            let computed = match &row.outcome {
                Outcome::Bounds {
                    lower,
                    upper,
                    value: Some(v),
                } if lower == upper => v.to_string(),
                Outcome::Bounds { lower, upper, .. } => format!("{lower}..={upper}"),
                Outcome::GroupsEqual { equal, order, .. } => {
                    format!(
                        "{} (order {order})",
                        if *equal { "equal" } else { "different" }
                    )
                }
                Outcome::Skipped { reason } => format!("skipped: {reason}"),
                Outcome::Aborted { reason } => format!("aborted: {reason}"),
            };
            let _ = writeln!(
                out,
                "| {:?} | {} | {} | {} | {} | {} | {:?} | {} |",
                row.table,
                row.id,
                row.source,
                expected,
                computed,
                row.method
                    .map(|m| m.to_string())
                    .unwrap_or_else(|| "-".into()),
                row.status,
                row.witness_path.as_deref().unwrap_or("-"),
            );
        }
        if !self.aq_sequence.is_empty() {
            let seq: Vec<String> = self
                .aq_sequence
                .iter()
                .map(|v| v.map_or_else(|| "?".into(), |v| v.to_string()))
                .collect();
            let _ = writeln!(
                out,
                "\nAugmented cube sequence D(AQ_n), n = 1..: {}",
                seq.join(", ")
            );
            if let Some(shape) = self.aq_rises_then_falls {
                let _ = writeln!(
                    out,
                    "Rises to at least 4 and then returns to 2: {}",
                    if shape { "yes" } else { "no" }
                );
            }
        }
        out
    }

    /// Writes `report.json`, `report.md` and one colouring file per witness
    /// into `dir`, filling in the witness paths.
    pub fn write_to_dir(&mut self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        let witness_dir = dir.join("witnesses");
        std::fs::create_dir_all(&witness_dir)?;
        for row in &mut self.rows {
            if let Some(json) = &row.witness_json {
                let name = format!("{}_{}.json", row.table.name(), slug(&row.id));
                std::fs::write(witness_dir.join(&name), json)?;
                row.witness_path = Some(format!("witnesses/{name}"));
            }
        }
        std::fs::write(dir.join("report.json"), self.to_json()?)?;
        std::fs::write(dir.join("report.md"), self.to_markdown())?;
        Ok(())
    }
}

fn slug(id: &str) -> String {
    let mut out = String::new();
    for ch in id.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

/// Climbs (weakly) to a peak of at least 4, then descends (weakly) to end at 2.
pub fn rises_then_falls_to_two(seq: &[u32]) -> bool {
    let Some((peak_at, &peak)) = seq
        .iter()
        .enumerate()
        .max_by_key(|&(i, v)| (*v, std::cmp::Reverse(i)))
    else {
        return false;
    };
    peak >= 4
        && seq[..=peak_at].windows(2).all(|w| w[0] <= w[1])
        && seq[peak_at..].windows(2).all(|w| w[0] >= w[1])
        && seq.last() == Some(&2)
        && peak_at + 1 < seq.len()
}

fn value_row(
    table: Table,
    id: String,
    expected: u32,
    g: &Graph,
    result: Result<SolveResult>,
    detail: String,
) -> Row {
    let (outcome, method, status, witness_json) = match result {
        Ok(res) => {
            let status = match res.value() {
                Some(v) if v == expected => Status::Match,
                Some(_) => Status::Mismatch,
                None if (res.lower..=res.upper).contains(&expected) => Status::Partial,
                None => Status::Mismatch,
            };
            let witness_json = res
                .witness
                .as_ref()
                .filter(|c| res.is_exact() || c.r() == res.upper)
                .and_then(|c| coloring_io::to_json(g, c).ok());
            (
                Outcome::Bounds {
                    lower: res.lower,
                    upper: res.upper,
                    value: res.value(),
                },
                Some(res.method),
                status,
                witness_json,
            )
        }
        Err(e) if e.is_budget() => (
            Outcome::Aborted {
                reason: e.to_string(),
            },
            None,
            Status::Partial,
            None,
        ),
        Err(e) => (
            Outcome::Aborted {
                reason: e.to_string(),
            },
            None,
            Status::Mismatch,
            None,
        ),
    };
    Row {
        table,
        id,
        source: "published",
        claim: Claim::Value { value: expected },
        outcome,
        method,
        status,
        detail,
        witness_json,
        witness_path: None,
    }
}

fn skipped_row(table: Table, id: String, expected: u32, reason: String) -> Row {
    Row {
        table,
        id,
        source: "published",
        claim: Claim::Value { value: expected },
        outcome: Outcome::Skipped { reason },
        method: None,
        status: Status::Partial,
        detail: String::new(),
        witness_json: None,
        witness_path: None,
    }
}

fn solve(g: &Graph, exhaustive: bool, max_r: u32, cfg: &ReproduceConfig) -> Result<SolveResult> {
    if exhaustive {
        distinguishing_number_exhaustive(g, max_r, cfg.budget)
    } else {
        solve_with_witness(g, max_r, Strategy::Random, cfg.seed, None)
    }
}

fn qn_rows(cfg: &ReproduceConfig) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 2..=cfg.max_n.max(2) {
        for p in [1usize, 2] {
            let expected = match (n, p) {
                (2 | 3, 1) => 3,
                (2 | 3, 2) => 4,
                _ => 2,
            };
            let id = if p == 1 {
                format!("D(Q_{n})")
            } else {
                format!("D(Q_{n}^2)")
            };
            if n > QN_WITNESS_MAX {
                rows.push(skipped_row(
                    Table::Qn,
                    id,
                    expected,
                    format!("n > {QN_WITNESS_MAX} is beyond the desk-scale guard"),
                ));
                continue;
            }
            let g = graph_power(&hypercube(n)?, p)?;
            let exhaustive = n <= QN_EXHAUSTIVE_MAX;
            let result = solve(&g, exhaustive, 4, cfg);
            let detail = if exhaustive {
                "exhaustive over first-use colourings".to_string()
            } else {
                format!(
                    "random witness, seed {}, plus non-trivial automorphism group",
                    cfg.seed
                )
            };
            rows.push(value_row(Table::Qn, id, expected, &g, result, detail));
        }
    }
    Ok(rows)
}

fn group_equality_row(n: usize, p: usize, base_p: usize, cfg: &ReproduceConfig) -> Result<Row> {
    let q = hypercube(n)?;
    let power = graph_power(&q, p)?;
    let base = graph_power(&q, base_p)?;
    let id = format!(
        "Aut(Q_{n}^{p}) = Aut(Q_{n}{})",
        if base_p == 1 {
            String::new()
        } else {
            format!("^{base_p}")
        }
    );
    let outcome = (|| -> Result<Outcome> {
        let a = automorphism_group_with_budget(&power, None, cfg.budget)?;
        let b = automorphism_group_with_budget(&base, None, cfg.budget)?;
        let equal = groups_equal_on_vertices(&a, &b)?;
        let mut preserve = true;
        for gen in a.generators() {
            preserve &= is_automorphism(&base, gen)?;
        }
        Ok(Outcome::GroupsEqual {
            equal,
            order: a.order().to_string(),
            generators_preserve_base: preserve,
        })
    })();
    let (outcome, status) = match outcome {
        Ok(
            o @ Outcome::GroupsEqual {
                equal: true,
                generators_preserve_base: true,
                ..
            },
        ) => (o, Status::Match),
        Ok(o) => (o, Status::Mismatch),
        Err(e) if e.is_budget() => (
            Outcome::Aborted {
                reason: e.to_string(),
            },
            Status::Partial,
        ),
        Err(e) => (
            Outcome::Aborted {
                reason: e.to_string(),
            },
            Status::Mismatch,
        ),
    };
    Ok(Row {
        table: Table::Qpowers,
        id,
        source: "published",
        claim: Claim::GroupsEqual,
        outcome,
        method: None,
        status,
        detail: "equal order and every generator of the power-graph group lies in the other group"
            .into(),
        witness_json: None,
        witness_path: None,
    })
}

fn qpower_rows(cfg: &ReproduceConfig) -> Result<Vec<Row>> {
    let mut rows = vec![
        group_equality_row(5, 3, 1, cfg)?,
        group_equality_row(6, 4, 2, cfg)?,
    ];

    for (n, p) in [(5usize, 3usize), (6, 4)] {
        let g = graph_power(&hypercube(n)?, p)?;
        let result = solve(&g, false, 3, cfg);
        let detail = format!(
            "random witness, seed {}, plus non-trivial automorphism group",
            cfg.seed
        );
        rows.push(value_row(
            Table::Qpowers,
            format!("D(Q_{n}^{p})"),
            2,
            &g,
            result,
            detail,
        ));
    }

    for n in [3usize, 4] {
        let expected = matching_complement_distnum(n)?;
        let g = graph_power(&hypercube(n)?, n - 1)?;
        let result = distinguishing_number_exhaustive(&g, expected, cfg.budget).map(|mut r| {
            r.method = Method::Exhaustive;
            r
        });
        let detail = format!(
            "closed form min{{x : C(x,2) >= 2^{}}} = {expected}, checked exhaustively",
            n - 1
        );
        rows.push(value_row(
            Table::Qpowers,
            format!("D(Q_{n}^{})", n - 1),
            expected,
            &g,
            result,
            detail,
        ));
    }

    for n in [2usize, 3] {
        let g = graph_power(&hypercube(n)?, n)?;
        let expected = 1u32 << n;
        let result = distinguishing_number_exhaustive(&g, expected, cfg.budget);
        rows.push(value_row(
            Table::Qpowers,
            format!("D(Q_{n}^{n})"),
            expected,
            &g,
            result,
            "complete graph, exhaustive".into(),
        ));
    }
    Ok(rows)
}

/// Confirms by plain enumeration that none of the `2^8` two-colourings of
/// `AQ_3` is distinguishing.
fn aq3_has_no_distinguishing_2_coloring(budget: Budget) -> Result<bool> {
    let g = augmented_cube(3)?;
    for mask in 0u32..256 {
        let c = Coloring::new((0..8).map(|v| (mask >> v & 1) + 1).collect(), 2)?;
        if is_distinguishing_with_budget(&g, &c, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn aqn_rows(cfg: &ReproduceConfig) -> Result<(Vec<Row>, Vec<Option<u32>>)> {
    let mut rows = Vec::new();
    let mut seq = Vec::new();
    for n in 1..=cfg.max_n.max(1) {
        let expected = match n {
            1 => 2,
            2 => 4,
            3 => 3,
            _ => 2,
        };
        let id = format!("D(AQ_{n})");
        if n > AQN_WITNESS_MAX {
            rows.push(skipped_row(
                Table::Aqn,
                id,
                expected,
                format!("n > {AQN_WITNESS_MAX} is beyond the desk-scale guard"),
            ));
            seq.push(None);
            continue;
        }
        let g = augmented_cube(n)?;
        let (result, mut detail) = if n <= AQN_EXHAUSTIVE_MAX {
            (
                distinguishing_number_exhaustive(&g, 4, cfg.budget),
                "exhaustive over first-use colourings".to_string(),
            )
        } else {
            (
                solve_with_witness(&g, 2, Strategy::Explicit, cfg.seed, None),
                "last-bit colouring verified distinguishing, plus non-trivial automorphism group"
                    .to_string(),
            )
        };
        if n == 3 {
            match aq3_has_no_distinguishing_2_coloring(cfg.budget) {
                Ok(true) => detail.push_str("; none of the 256 two-colourings is distinguishing"),
                Ok(false) => detail.push_str("; a distinguishing two-colouring exists"),
                Err(e) => detail.push_str(&format!("; plain enumeration failed: {e}")),
            }
        }
        let row = value_row(Table::Aqn, id, expected, &g, result, detail);
        seq.push(match &row.outcome {
            Outcome::Bounds { value, .. } => *value,
            _ => None,
        });
        rows.push(row);
    }
    Ok((rows, seq))
}

/// Runs the requested tables. Budget aborts become `Aborted` rows so the
/// rest of the report is still produced.
pub fn reproduce_tables(cfg: &ReproduceConfig) -> Result<Report> {
    let mut rows = Vec::new();
    let mut aq_sequence = Vec::new();
    let mut aq_rises_then_falls = None;
    for table in &cfg.tables {
        match table {
            Table::Qn => rows.extend(qn_rows(cfg)?),
            Table::Qpowers => rows.extend(qpower_rows(cfg)?),
            Table::Aqn => {
                let (aq_rows, seq) = aqn_rows(cfg)?;
                rows.extend(aq_rows);
                if seq.len() >= 4 {
                    aq_rises_then_falls =
                        Some(match seq.iter().copied().collect::<Option<Vec<u32>>>() {
                            Some(values) => rises_then_falls_to_two(&values),
                            None => false,
                        });
                }
                aq_sequence = seq;
            }
        }
    }
    Ok(Report {
        max_n: cfg.max_n,
        seed: cfg.seed,
        rows,
        aq_sequence,
        aq_rises_then_falls,
    })
}
