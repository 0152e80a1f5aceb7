use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use neighborly::cli::{self, SearchOptions, TableFormat, EXIT_USAGE};
use neighborly::search::Budget;

#[derive(Parser)]
#[command(name = "neighborly", version, about = "Bounds and exact search for k-neighborly families")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every bound for one (k, d).
    Report {
        k: usize,
        d: usize,
        /// One flat JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Rows where the new bounds improve on the prior ones.
    Table {
        #[arg(default_value_t = 20)]
        k_max: usize,
        #[arg(default_value_t = 20)]
        d_max: usize,
        #[arg(long, conflicts_with = "markdown")]
        csv: bool,
        #[arg(long)]
        markdown: bool,
    },
    /// Check and audit a family file.
    Verify { path: PathBuf },
    /// Exact maximum-family search.
    Search {
        k: usize,
        d: usize,
        #[arg(long, default_value_t = 100_000_000)]
        max_nodes: u64,
        #[arg(long, default_value_t = 60.0)]
        max_seconds: f64,
        /// Write the best family found here.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Start from this family file.
        #[arg(long)]
        incumbent: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the formula cutoff.
        #[arg(long)]
        no_cutoff: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a construction as a family file:
    /// alon-product K D | codimension-one D | b-config K D | staircase M
    Construct {
        name: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

fn run(command: Command, out: &mut impl Write) -> neighborly::Result<()> {
    match command {
        Command::Report { k, d, json } => cli::cmd_report(k, d, json, out),
        Command::Table {
            k_max,
            d_max,
            markdown,
            ..
        } => {
            let format = if markdown {
                TableFormat::Markdown
            } else {
                TableFormat::Csv
            };
            cli::cmd_table(k_max, d_max, format, out)
        }
        Command::Verify { path } => cli::cmd_verify(&path, out).map(|_| ()),
        Command::Search {
            k,
            d,
            max_nodes,
            max_seconds,
            witness,
            incumbent,
            seed,
            no_cutoff,
            json,
        } => {
            if !(max_seconds.is_finite() && max_seconds >= 0.0) {
                return Err(neighborly::Error::Domain(format!(
                    "--max-seconds must be a nonnegative number, got {max_seconds}"
                )));
            }
            let opts = SearchOptions {
                budget: Budget {
                    max_nodes: Some(max_nodes),
                    max_time: Some(Duration::from_secs_f64(max_seconds)),
                    formula_cutoff: !no_cutoff,
                    seed,
                    ..Budget::default()
                },
                incumbent,
                witness,
                json,
            };
            cli::cmd_search(k, d, &opts, out).map(|_| ())
        }
        Command::Construct { name, args } => cli::cmd_construct(&name, &args, out),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(args.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
