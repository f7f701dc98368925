use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use optocog_cli::commands::{self, Ctx, Failure, Report};
use optocog_cli::config::ExperimentConfig;

/// Scaling laws, hardware budgets and oscillator simulations for
/// optoelectronic neural systems.
#[derive(Debug, Parser)]
#[command(name = "optocog", version)]
struct Cli {
    /// Experiment file (TOML, SI units).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Write results into this directory instead of standard output.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Base seed for anything random; overrides the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Average and maximum degree against network size.
    Degree(commands::degree::Args),
    /// Light-cone pool size against oscillation frequency.
    Pool(commands::pool::Args),
    /// Node area against degree and network area against size.
    Area(commands::hardware::AreaArgs),
    /// Photon-budget power of one neuron and of a whole network.
    Power(commands::hardware::PowerArgs),
    /// Run one oscillator simulation.
    Simulate(commands::sim::SimulateArgs),
    /// Mean synchrony against pool diameter.
    Sweep(commands::sim::SweepArgs),
    /// Check the models against the reference numbers.
    PaperCheck,
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => match emit(&cli, &report) {
            Ok(()) if report.passed => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(EXIT_FAILED),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_FAILED)
            }
        },
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let cfg = match &cli.config {
        Some(path) => ExperimentConfig::load(path).map_err(Failure::Usage)?,
        None => ExperimentConfig::default(),
    };
    let ctx = Ctx {
        seed: cli.seed.or(cfg.seed).unwrap_or(0),
        cfg,
    };
    match &cli.command {
        Command::Degree(a) => commands::degree::run(&ctx, a),
        Command::Pool(a) => commands::pool::run(&ctx, a),
        Command::Area(a) => commands::hardware::area(&ctx, a),
        Command::Power(a) => commands::hardware::power(&ctx, a),
        Command::Simulate(a) => commands::sim::simulate(&ctx, a),
        Command::Sweep(a) => commands::sim::sweep(&ctx, a),
        Command::PaperCheck => Ok(commands::check::run()),
    }
}

fn emit(cli: &Cli, report: &Report) -> anyhow::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Some(dir) = &cli.out {
        let written = write_dir(dir, report)?;
        for line in &report.notes {
            writeln!(out, "{line}")?;
        }
        for path in written {
            eprintln!("wrote {}", path.display());
        }
        return Ok(());
    }
    match cli.format {
        Format::Csv => {
            for line in &report.notes {
                eprintln!("{line}");
            }
            for (i, t) in report.tables.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                t.write_csv(&mut out)?;
            }
        }
        Format::Table => {
            for line in &report.notes {
                writeln!(out, "{line}")?;
            }
            for t in &report.tables {
                writeln!(out)?;
                write!(out, "{}", t.render_aligned())?;
            }
        }
    }
    Ok(())
}

fn write_dir(dir: &Path, report: &Report) -> anyhow::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut written = Vec::new();
    for t in &report.tables {
        let path = dir.join(format!("{}.csv", t.name));
        let file = std::fs::File::create(&path).with_context(|| format!("cannot write {}", path.display()))?;
        t.write_csv(std::io::BufWriter::new(file))?;
        written.push(path);
    }
    for (name, value) in &report.json {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(value)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}
