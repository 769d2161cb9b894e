use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use symbreak::coloring::{self, Coloring};
use symbreak::graphs::io::{read_graph, write_graph, GraphFormat};
use symbreak::graphs::{self, Graph};
use symbreak::perm::{automorphism_group_with_budget, is_automorphism, Budget};
use symbreak::solver::report::{reproduce_tables, ReproduceConfig, Table};
use symbreak::solver::{solve_with_witness, Strategy};
use symbreak::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "symbreak",
    version,
    about = "Distinguishing colourings of hypercube-like graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Dimension, or the vertex count for complete and matching-complement.
        #[arg(long)]
        n: usize,
        /// Distance threshold; required for hypercube-power only.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Print the automorphism group, optionally restricted to a colouring.
    Aut {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Omit the generators.
        #[arg(long)]
        order_only: bool,
    },
    /// Exit 0 iff the colouring is distinguishing.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Bound or compute the distinguishing number.
    Distnum {
        graph: PathBuf,
        #[arg(long = "max-colors")]
        max_colors: u32,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Node budget (exhaustive) or candidate count (random).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Recompute the published tables and write a report.
    Reproduce {
        #[arg(long, value_enum, default_value = "all")]
        table: TableArg,
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Convert a graph file to another format.
    Export {
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hypercube,
    HypercubePower,
    AugmentedCube,
    Complete,
    MatchingComplement,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => GraphFormat::Json,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Explicit,
    Exhaustive,
    Random,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Explicit => Strategy::Explicit,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Random => Strategy::Random,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Qn,
    Qpowers,
    Aqn,
    All,
}

impl TableArg {
    fn tables(self) -> Vec<Table> {
        match self {
            TableArg::Qn => vec![Table::Qn],
            TableArg::Qpowers => vec![Table::Qpowers],
            TableArg::Aqn => vec![Table::Aqn],
            TableArg::All => Table::ALL.to_vec(),
        }
    }
}

/// Failure categories mapped onto exit codes.
enum Failure {
    Verification,
    Budget(anyhow::Error),
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        let budget = e
            .chain()
            .any(|cause| cause.downcast_ref::<Error>().is_some_and(Error::is_budget));
        if budget {
            Failure::Budget(e)
        } else {
            Failure::Usage(e)
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Budget(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let budget = Budget::from_env();
    match command {
        Command::Gen {
            family,
            n,
            p,
            out,
            format,
        } => {
            let g = generate(family, n, p)?;
            write_graph(&g, &out, format.into())
                .with_context(|| format!("writing {}", out.display()))?;
            println!("{} vertices, {} edges", g.n_vertices(), g.edge_count());
        }
        Command::Aut {
            graph,
            coloring,
            order_only,
        } => {
            let g = load_graph(&graph)?;
            let c = coloring.map(|path| load_coloring(&g, &path)).transpose()?;
            let group = automorphism_group_with_budget(&g, c.as_ref(), budget)?;
            let mut out = json!({
                "order": group.order().to_string(),
                "generator_count": group.generators().len(),
                "orbit_count": group.orbits().len(),
                "colored": c.is_some(),
            });
            if !order_only {
                let gens: Vec<String> = group
                    .generators()
                    .iter()
                    .map(|p| p.cycle_notation(|v| g.vertex_name(v)))
                    .collect();
                out["generators"] = json!(gens);
            }
            println!("{out}");
        }
        Command::Verify { graph, coloring } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&g, &coloring)?;
            match coloring::smallest_violation(&g, &c, budget)? {
                None => println!("distinguishing"),
                Some(p) => {
                    debug_assert!(
                        is_automorphism(&g, &p)? && coloring::is_color_preserving(&p, &c)?
                    );
                    println!(
                        "not distinguishing: preserved by {}",
                        p.cycle_notation(|v| g.vertex_name(v))
                    );
                    return Err(Failure::Verification);
                }
            }
        }
        Command::Distnum {
            graph,
            max_colors,
            strategy,
            seed,
            budget,
        } => {
            if max_colors == 0 {
                return Err(Failure::Usage(anyhow::anyhow!(
                    "--max-colors must be at least 1"
                )));
            }
            let g = load_graph(&graph)?;
            let result = solve_with_witness(&g, max_colors, strategy.into(), seed, budget)?;
            let witness = match &result.witness {
                Some(c) => {
                    serde_json::from_str::<serde_json::Value>(&coloring::io::to_json(&g, c)?)
                        .context("re-reading witness json")?
                }
                None => serde_json::Value::Null,
            };
            let out = json!({
                "value": result.value(),
                "lower": result.lower,
                "upper": result.upper,
                "exact": result.is_exact(),
                "method": result.method,
                "seed": seed,
                "witness": witness,
                "stats": result.stats,
            });
            println!("{out}");
        }
        Command::Reproduce {
            table,
            max_n,
            out,
            seed,
        } => {
            let cfg = ReproduceConfig {
                tables: table.tables(),
                max_n,
                seed,
                budget,
            };
            let mut report = reproduce_tables(&cfg)?;
            report
                .write_to_dir(&out)
                .with_context(|| format!("writing report to {}", out.display()))?;
            print!("{}", report.to_markdown());
            if report.mismatches() > 0 {
                eprintln!(
                    "{} row(s) contradict the published values",
                    report.mismatches()
                );
                return Err(Failure::Verification);
            }
            if report.aborted() {
                return Err(Failure::Budget(anyhow::anyhow!(
                    "budget exhausted; report is partial"
                )));
            }
        }
        Command::Export { graph, format, out } => {
            let g = load_graph(&graph)?;
            write_graph(&g, &out, format.into())
                .with_context(|| format!("writing {}", out.display()))?;
            println!("{} vertices, {} edges", g.n_vertices(), g.edge_count());
        }
    }
    Ok(())
}

fn generate(family: FamilyArg, n: usize, p: Option<usize>) -> anyhow::Result<Graph> {
    let g = match (family, p) {
        (FamilyArg::HypercubePower, Some(p)) => graphs::graph_power(&graphs::hypercube(n)?, p)?,
        (FamilyArg::HypercubePower, None) => bail!("--p is required for hypercube-power"),
        (_, Some(_)) => bail!("--p is only valid for hypercube-power"),
        (FamilyArg::Hypercube, None) => graphs::hypercube(n)?,
        (FamilyArg::AugmentedCube, None) => graphs::augmented_cube(n)?,
        (FamilyArg::Complete, None) => graphs::complete_graph(n)?,
        (FamilyArg::MatchingComplement, None) => graphs::complement_perfect_matching(n)?,
    };
    Ok(g)
}

fn load_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    read_graph(path).with_context(|| format!("reading graph {}", path.display()))
}

fn load_coloring(g: &Graph, path: &PathBuf) -> anyhow::Result<Coloring> {
    coloring::io::read_coloring(g, path)
        .with_context(|| format!("reading colouring {}", path.display()))
}
