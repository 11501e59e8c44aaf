//! Command-line driver: reproduces the canned experiments as CSV data plus a
//! verification report, exiting nonzero when any claim fails.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use dgwave::dispersion::MethodTag;
use dgwave::experiments::{run, ExperimentId, ExperimentSpec};

#[derive(Parser)]
#[command(
    name = "dgwave",
    about = "1D discontinuous Galerkin laboratory for the one-way wave equation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and write its CSV outputs and report.
    Run(RunArgs),
    /// List the available experiment ids.
    List,
}

#[derive(Args)]
struct RunArgs {
    /// Experiment id: fig1..fig6, table1, table2-partial, regimes, or all.
    experiment: String,
    /// Flux scheme override: U, C, A or Astar.
    #[arg(long)]
    scheme: Option<String>,
    /// Polynomial degree override.
    #[arg(long, visible_alias = "N")]
    degree: Option<usize>,
    /// Cell-count override.
    #[arg(long)]
    cells: Option<usize>,
    /// Final time override.
    #[arg(long)]
    tfinal: Option<f64>,
    /// CFL number override.
    #[arg(long)]
    cfl: Option<f64>,
    /// Mesh perturbation amplitude (fraction of the uniform width).
    #[arg(long)]
    perturb: Option<f64>,
    /// Perturbation seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    outdir: PathBuf,
    /// Optional key=value config file; explicit flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for id in ExperimentId::all_ids() {
                println!("{}", id.dir_name());
            }
            println!("all");
            ExitCode::SUCCESS
        }
        Command::Run(args) => match run_experiment(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::FAILURE,
            Err(err) => {
                eprintln!("error: {err:#}");
                ExitCode::from(2)
            }
        },
    }
}

fn run_experiment(mut args: RunArgs) -> Result<bool> {
    if let Some(path) = args.config.take() {
        apply_config(&mut args, &path)?;
    }
    let id: ExperimentId = args.experiment.parse()?;
    let mut spec = ExperimentSpec::new(id, &args.outdir);
    spec.scheme = args
        .scheme
        .as_deref()
        .map(|s| s.parse::<MethodTag>())
        .transpose()?;
    spec.degree = args.degree;
    spec.cells = args.cells;
    spec.t_final = args.tfinal;
    spec.cfl = args.cfl;
    spec.perturb = args.perturb;
    spec.seed = args.seed;

    let report = run(&spec).context("experiment failed")?;
    for claim in &report.claims {
        println!(
            "{} {}: computed {:.6e} vs {:.6e} (tol {:.1e})",
            if claim.pass { "PASS" } else { "FAIL" },
            claim.id,
            claim.computed,
            claim.paper_value,
            claim.tol
        );
    }
    let ok = report.all_pass();
    println!(
        "{}: {}/{} claims passed (outputs under {})",
        if ok { "OK" } else { "FAILED" },
        report.claims.iter().filter(|c| c.pass).count(),
        report.claims.len(),
        args.outdir.display()
    );
    Ok(ok)
}

/// Reads `key=value` lines (`#` comments allowed) and fills any flag the
/// command line left unset.
fn apply_config(args: &mut RunArgs, path: &PathBuf) -> Result<()> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .with_context(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let parse_ctx = || format!("{}:{}: bad value for {key}", path.display(), lineno + 1);
        match key {
            "scheme" => {
                if args.scheme.is_none() {
                    args.scheme = Some(value.to_string());
                }
            }
            "degree" => {
                if args.degree.is_none() {
                    args.degree = Some(value.parse().with_context(parse_ctx)?);
                }
            }
            "cells" => {
                if args.cells.is_none() {
                    args.cells = Some(value.parse().with_context(parse_ctx)?);
                }
            }
            "tfinal" => {
                if args.tfinal.is_none() {
                    args.tfinal = Some(value.parse().with_context(parse_ctx)?);
                }
            }
            "cfl" => {
                if args.cfl.is_none() {
                    args.cfl = Some(value.parse().with_context(parse_ctx)?);
                }
            }
            "perturb" => {
                if args.perturb.is_none() {
                    args.perturb = Some(value.parse().with_context(parse_ctx)?);
                }
            }
            "seed" => {
                if args.seed.is_none() {
                    args.seed = Some(value.parse().with_context(parse_ctx)?);
                }
            }
            "outdir" => {
                if args.outdir.as_os_str() == "out" {
                    args.outdir = PathBuf::from(value);
                }
            }
            other => anyhow::bail!("{}:{}: unknown key '{other}'", path.display(), lineno + 1),
        }
    }
    Ok(())
}
