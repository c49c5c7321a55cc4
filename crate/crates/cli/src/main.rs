use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use hoi_cli::checklist::checklist;
use hoi_cli::claims::{exit_code, DEFAULT_SEED, DEFAULT_TOL};
use hoi_cli::report::{to_json, to_markdown};
use hoi_cli::{run_suite, RunOptions, Suite, Whitelist};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Parser)]
#[command(name = "hoi", version, about = "Reproduce higher-order interference claims")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every claim of a suite and print the report.
    Reproduce {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Run seed; falls back to $HOI_SEED, then 42.
        #[arg(long, env = "HOI_SEED")]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Alternative known-discrepancy whitelist (TOML).
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Print the desiderata table.
    Checklist {
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{}", e.render());
            eprintln!();
            eprint!("{}", Cli::command().render_help());
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    match cli.command {
        Command::Reproduce {
            suite,
            format,
            seed,
            tol,
            config,
        } => {
            let whitelist = match config {
                Some(path) => match Whitelist::load(&path) {
                    Ok(w) => w,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                },
                None => Whitelist::builtin(),
            };
            let opts = RunOptions {
                seed: seed.unwrap_or(DEFAULT_SEED),
                tol,
            };
            let reports = run_suite(suite, opts, &whitelist);
            let text = match format {
                Format::Json => to_json(&reports),
                Format::Markdown => to_markdown(&reports),
            };
            print!("{text}");
            ExitCode::from(exit_code(&reports) as u8)
        }
        Command::Checklist { format } => {
            let list = checklist();
            match format {
                Format::Json => print!("{}", list.to_json()),
                Format::Markdown => print!("{}", list.to_markdown()),
            }
            ExitCode::SUCCESS
        }
    }
}
