use std::error::Error;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sombor_core::edgelist::{parse_edge_list, write_edge_list};
use sombor_core::enumeration::{enumerate_family_with_cap, TreeFamilyQuery};
use sombor_core::extremal::{classify, construct_t_star, ExtremalParams};
use sombor_core::invariants::{independence_number, sombor_index};
use sombor_core::verify::{
    format_real, render_csv, render_summary, verify, VerifyOptions, DEFAULT_VERIFY_CAP,
};

/// Extremal Sombor index checks for trees of fixed independence number.
#[derive(Debug, Parser)]
#[command(name = "sombor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the extremal value against brute force for a range of orders.
    Verify {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Worker threads (default: one per core).
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write the CSV table here.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        cap: Cap,
    },
    /// Print the Sombor index, independence number, family and canonical
    /// code of a tree read from an edge-list file.
    Compute {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write the extremal tree for (n, alpha) as an edge list.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Write the verification table for orders 2..=n-max as CSV.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        cap: Cap,
    },
    /// Print every non-isomorphic tree of order n, optionally only those
    /// with independence number alpha.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: Option<usize>,
        #[command(flatten)]
        cap: Cap,
    },
}

#[derive(Debug, Args)]
struct Cap {
    /// Largest order accepted; raising it above the default prints a warning.
    #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
    max_order: usize,
}

impl Cap {
    fn get(&self) -> usize {
        if self.max_order > DEFAULT_VERIFY_CAP {
            eprintln!(
                "warning: order cap raised to {} (default {DEFAULT_VERIFY_CAP}); families grow quickly",
                self.max_order
            );
        }
        self.max_order
    }
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::Verify {
            n_min,
            n_max,
            jobs,
            csv,
            cap,
        } => {
            let options = VerifyOptions {
                jobs,
                cap: cap.get(),
            };
            let report = verify(n_min, n_max, options)?;
            print!("{}", render_summary(&report));
            if let Some(path) = csv {
                write_file(&path, &render_csv(&report))?;
            }
            Ok(verdict(report.passes()))
        }
        Command::Compute { input } => {
            let text =
                fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let tree = parse_edge_list(&text).map_err(|e| format!("{}:{e}", input.display()))?;
            println!(
                "SO={} alpha={} class={}",
                format_real(sombor_index(&tree)),
                independence_number(&tree),
                classify(&tree)
            );
            println!("code={}", tree.canonical_code());
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { n, alpha, output } => {
            let params = ExtremalParams::new(n, alpha)?;
            write_file(&output, &write_edge_list(&construct_t_star(&params)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            n_max,
            output,
            jobs,
            cap,
        } => {
            let options = VerifyOptions {
                jobs,
                cap: cap.get(),
            };
            let report = verify(2, n_max, options)?;
            write_file(&output, &render_csv(&report))?;
            Ok(verdict(report.passes()))
        }
        Command::Enumerate { n, alpha, cap } => {
            let query = TreeFamilyQuery { order: n, alpha };
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let mut count = 0usize;
            for tree in enumerate_family_with_cap(query, cap.get())? {
                if count > 0 {
                    writeln!(out)?;
                }
                out.write_all(write_edge_list(&tree).as_bytes())?;
                count += 1;
            }
            out.flush()?;
            if count == 0 {
                eprintln!("family empty");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        eprintln!("extremal bound violated");
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Box<dyn Error>> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()).into())
}
