use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use rim_cli::commands::{self, PatternArgs};
use rim_cli::output::write_all;
use rim_cli::ScenarioFile;
use rim_core::irregularity::DEFAULT_DOI;
use rim_core::{ConnectivityGraph, PathLossParams, RadioParams, Weibull};

#[derive(Parser)]
#[command(name = "rim", version, about = "Radio irregularity model tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one node's 360 irregularity coefficients as `degree,k` CSV.
    Pattern {
        #[command(flatten)]
        pattern: PatternFlags,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the directional range contour as `degree,k,range_m` CSV,
    /// optionally with an SVG polar plot.
    Contour {
        #[command(flatten)]
        pattern: PatternFlags,
        #[arg(long = "freq-hz", default_value_t = 2.4e9)]
        freq_hz: f64,
        #[arg(long, default_value_t = PathLossParams::DEFAULT_ALPHA)]
        alpha: f64,
        #[arg(long = "system-loss-db", default_value_t = 0.0)]
        system_loss_db: f64,
        #[arg(long = "tx-dbm", default_value_t = 0.0, allow_hyphen_values = true)]
        tx_dbm: f64,
        #[arg(long = "sens-dbm", default_value_t = -85.0, allow_hyphen_values = true)]
        sens_dbm: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Build the directed connectivity graph of a scenario file.
    Connectivity {
        scenario: PathBuf,
        #[command(flatten)]
        seed: SeedFlag,
        #[arg(long)]
        out: PathBuf,
    },
    /// Mean link asymmetry over a list of DOI values.
    Sweep {
        scenario: PathBuf,
        #[command(flatten)]
        seed: SeedFlag,
        #[arg(long = "doi-list", value_delimiter = ',', required = true, num_args = 1..)]
        doi_list: Vec<f64>,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SeedFlag {
    /// Master seed; overrides the scenario file's seed.
    #[arg(long, env = "RIM_SEED")]
    seed: Option<u64>,
}

#[derive(Args)]
struct PatternFlags {
    #[arg(long, env = "RIM_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_DOI)]
    doi: f64,
    /// Weibull scale.
    #[arg(long, default_value_t = Weibull::DEFAULT_SCALE)]
    a: f64,
    /// Weibull shape.
    #[arg(long, default_value_t = Weibull::DEFAULT_SHAPE)]
    b: f64,
}

impl PatternFlags {
    fn args(&self) -> PatternArgs {
        PatternArgs {
            seed: self.seed,
            doi: self.doi,
            a: self.a,
            b: self.b,
        }
    }
}

fn load_scenario(path: &Path, seed: &SeedFlag) -> Result<rim_core::Scenario> {
    let file = ScenarioFile::load(path)?;
    let mut scenario = file
        .to_scenario()
        .with_context(|| format!("invalid scenario {}", path.display()))?;
    if let Some(s) = seed.seed {
        scenario.master_seed = s;
    }
    Ok(scenario)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Pattern { pattern, out } => {
            let p = pattern.args().generate()?;
            write_all(&[(&out, &commands::pattern_csv(&p))])
        }
        Command::Contour {
            pattern,
            freq_hz,
            alpha,
            system_loss_db,
            tx_dbm,
            sens_dbm,
            out,
            svg,
        } => {
            let params = PathLossParams::new(freq_hz, alpha, system_loss_db)?;
            let radio = RadioParams::simple(tx_dbm, sens_dbm)?;
            let p = pattern.args().generate()?;
            let contour = commands::contour(&p, &radio, &params)?;
            match svg {
                Some(svg) => write_all(&[(&out, &contour.csv), (&svg, &contour.svg)]),
                None => write_all(&[(&out, &contour.csv)]),
            }
        }
        Command::Connectivity {
            scenario,
            seed,
            out,
        } => {
            let scenario = load_scenario(&scenario, &seed)?;
            let graph = ConnectivityGraph::build(&scenario)?;
            write_all(&[(&out, &commands::edges_csv(&graph))])?;
            println!("{}", commands::summary_line(&graph.asymmetry_report()));
            Ok(())
        }
        Command::Sweep {
            scenario,
            seed,
            doi_list,
            reps,
            out,
        } => {
            let scenario = load_scenario(&scenario, &seed)?;
            let rows = commands::sweep(&scenario, &doi_list, reps)?;
            write_all(&[(&out, &commands::sweep_csv(&rows))])
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
