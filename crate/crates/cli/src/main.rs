use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polysol::ring::Mode;
use polysol::RenderStyle;
use polysol_cli::{parse_problem, parse_solution, solve_problem, verify_solution, CliError, Options, OutputFormat};

#[derive(Parser)]
#[command(name = "polysol", version, about = "Polynomial particular solutions of constant-coefficient PDEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file.
    Solve {
        problem: PathBuf,
        /// Append the residual check.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check a solution document written by `solve --output json`.
    Verify {
        problem: PathBuf,
        solution: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(clap::Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    output: Format,
    /// Coefficient ring, overriding the problem file.
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: polysol::ring::RingError| e.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn style() -> RenderStyle {
    match std::env::var("POLYSOL_UNICODE") {
        Ok(v) if v == "1" => RenderStyle::Unicode,
        _ => RenderStyle::Ascii,
    }
}

fn options(common: &Common, verify: bool) -> Options {
    Options {
        mode: common.mode,
        verify,
        format: match common.output {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        style: style(),
    }
}

fn run(cli: Cli) -> Result<polysol_cli::Outcome, CliError> {
    match cli.command {
        Command::Solve { problem, verify, common } => {
            let problem = parse_problem(&read(&problem)?)?;
            solve_problem(&problem, &options(&common, verify))
        }
        Command::Verify { problem, solution, common } => {
            let problem = parse_problem(&read(&problem)?)?;
            let document = parse_solution(&read(&solution)?)?;
            verify_solution(&problem, &document, &options(&common, true))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
