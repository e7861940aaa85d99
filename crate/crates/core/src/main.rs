use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polytrope::error::Error;
use polytrope::harness::{run_convergence, run_entropy, ConfigBuilder, Experiment};

#[derive(Parser)]
#[command(
    name = "polytrope",
    version,
    about = "Entropy-conservative and entropy-stable DG solver for isothermal and polytropic Euler equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a config file, with optional overrides.
    Solve(SolveArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Flat key=value configuration file, one key per line.
    #[arg(long)]
    config: PathBuf,
    /// Experiment kind: convergence or entropy.
    #[arg(long)]
    experiment: Option<String>,
    /// Polynomial degree of the DG ansatz.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated elements per side, e.g. 4,8,16.
    #[arg(long)]
    mesh: Option<String>,
    /// Equation of state: isothermal or polytropic.
    #[arg(long)]
    eos: Option<String>,
    /// Polytropic exponent.
    #[arg(long)]
    gamma: Option<f64>,
    /// Polytropic scaling factor.
    #[arg(long)]
    kappa: Option<f64>,
    /// Isothermal sound speed.
    #[arg(long)]
    c: Option<f64>,
    /// Scheme variant: ec_ec or ec_es.
    #[arg(long)]
    flux: Option<String>,
    /// CFL number for step-size selection.
    #[arg(long)]
    cfl: Option<f64>,
    /// Final time of the runs.
    #[arg(long)]
    tfinal: Option<f64>,
    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match solve(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_) | Error::InvalidEos(_) | Error::DegreeOutOfRange { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(3),
            }
        }
    }
}

fn solve(cli: Cli) -> polytrope::Result<()> {
    let Command::Solve(args) = cli.command;
    let mut builder = ConfigBuilder::from_file(&args.config)?;
    if let Some(v) = &args.experiment {
        builder.set("experiment", v)?;
    }
    if let Some(v) = args.n {
        builder.set("n", &v.to_string())?;
    }
    if let Some(v) = &args.mesh {
        builder.set("mesh", v)?;
    }
    if let Some(v) = &args.eos {
        builder.set("eos", v)?;
    }
    if let Some(v) = args.gamma {
        builder.set("gamma", &v.to_string())?;
    }
    if let Some(v) = args.kappa {
        builder.set("kappa", &v.to_string())?;
    }
    if let Some(v) = args.c {
        builder.set("c", &v.to_string())?;
    }
    if let Some(v) = &args.flux {
        builder.set("flux", v)?;
    }
    if let Some(v) = args.cfl {
        builder.set("cfl", &v.to_string())?;
    }
    if let Some(v) = args.tfinal {
        builder.set("tfinal", &v.to_string())?;
    }
    if let Some(v) = args.out {
        builder.out = Some(v);
    }
    let cfg = builder.build()?;
    match cfg.experiment {
        Experiment::Convergence => {
            run_convergence(&cfg)?;
        }
        Experiment::Entropy => {
            run_entropy(&cfg)?;
        }
    }
    Ok(())
}
