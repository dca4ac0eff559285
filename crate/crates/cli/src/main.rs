use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qwalk_core::batch::{self, PartsList, RunConfig};
use qwalk_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Simulate quantum walks and compile them to optical parts lists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a walk and write its distribution as CSV.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Moments JSON; defaults to `<out>.summary.json`.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Compile a split-step or generalized walk into a parts list.
    Compile {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Check the train against the walk operator.
        #[arg(long)]
        verify: bool,
    },
    /// Same as `compile --verify`.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a disorder ensemble next to its ballistic baseline.
    Localize {
        #[arg(long)]
        config: PathBuf,
        /// Ensemble size; defaults to the config's `ensemble_size`.
        #[arg(long)]
        seeds: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load(path: &Path) -> Result<RunConfig> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    RunConfig::from_json_str(&text)
}

fn summary_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".summary.json");
    PathBuf::from(s)
}

fn write_parts(parts: &PartsList, out: &Path) -> Result<()> {
    fs::write(out, parts.to_json_string())?;
    match parts.verification_failure() {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run {
            config,
            out,
            summary,
        } => {
            let output = batch::run(&load(&config)?)?;
            fs::write(&out, &output.csv)?;
            let summary = summary.unwrap_or_else(|| summary_path(&out));
            fs::write(summary, output.summary.to_json_string())?;
        }
        Command::Compile {
            config,
            out,
            verify,
        } => {
            let cfg = load(&config)?;
            let parts = batch::compile(&cfg, verify || cfg.verify)?;
            write_parts(&parts, &out)?;
        }
        Command::Verify { config, out } => {
            let parts = batch::compile(&load(&config)?, true)?;
            write_parts(&parts, &out)?;
        }
        Command::Localize { config, seeds, out } => {
            let cfg = load(&config)?;
            let n = seeds.unwrap_or(cfg.ensemble_size);
            fs::write(&out, batch::localize(&cfg, n)?.to_json_string())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("qwalk: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
