use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hbcells::combinatorics::Partition;
use hbcells::decomposition::{cell, cellular_decomposition, fibration_check, plausibility_check, verify_conjecture};
use hbcells::field::{PrimeField, DEFAULT_PRIME};
use hbcells::output::{
    cell_table, check_table, decomposition_table, strata_document, strata_table, to_json, CellList,
    CheckDocument,
};
use hbcells::staircase::is_lex_segment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Groebner cells of the punctual Hilbert scheme of points in the plane.
#[derive(Debug, Parser)]
#[command(name = "hbcells", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All cells of Hilb^n with dimensions and Hilbert-Burch matrices.
    Cells {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Group cells by Hilbert function.
        #[arg(long)]
        group_by_h: bool,
    },
    /// One cell, given as comma-separated nondecreasing parts such as 1,5,8,10.
    Cell {
        m: Partition,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Strata of a cell by minimal number of generators.
    Strata {
        m: Partition,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Counting checks, and optionally randomized verification of every cell.
    Check {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Prime characteristic of the verification field.
        #[arg(long, default_value_t = DEFAULT_PRIME, value_parser = parse_prime)]
        field: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    PrimeField::new(p).map(|_| p).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> hbcells::Result<bool> {
    let emit = |format: Format, json: String, table: String| {
        print!("{}", if format == Format::Json { json } else { table });
    };
    match cli.command {
        Command::Cells { n, format, group_by_h } => {
            let report = cellular_decomposition(n)?;
            let json = if group_by_h {
                to_json(&report)
            } else {
                to_json(&CellList::from(report.clone()))
            };
            emit(format, json, decomposition_table(&report, group_by_h));
            Ok(true)
        }
        Command::Cell { m, format } => {
            let c = cell(&m);
            emit(format, to_json(&c), cell_table(&c));
            Ok(true)
        }
        Command::Strata { m, format } => {
            if !is_lex_segment(&m) {
                eprintln!("warning: {m} is not a lex-segment staircase; the strata description is conjectural");
            }
            let doc = strata_document(&m);
            emit(format, to_json(&doc), strata_table(&doc));
            Ok(true)
        }
        Command::Check {
            n,
            verify,
            trials,
            field,
            seed,
            format,
        } => {
            let verification = if verify {
                Some(verify_conjecture(n, trials as usize, &PrimeField::new(field)?, seed)?)
            } else {
                None
            };
            let doc = CheckDocument::new(plausibility_check(n)?, fibration_check(n)?, verification);
            emit(format, to_json(&doc), check_table(&doc));
            Ok(doc.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
