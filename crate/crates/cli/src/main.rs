use std::io::Read;

use clap::{Parser, Subcommand};

use gjx_cli::commands::{
    cmd_arrange, cmd_eliminate, cmd_fuzz, cmd_invert, cmd_minor, cmd_verify, Failure, FaultArg,
    Format,
};
use gjx_cli::fuzz::FuzzConfig;
use gjx_core::formulas::FormulaFault;

/// Exact Gauss-Jordan elimination as explicit operation matrices, with
/// every step cross-checked against closed-form minor-quotient formulas.
#[derive(Parser)]
#[command(name = "gjx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the elimination and print every operation matrix and state
    Eliminate {
        /// Matrix file, or - for standard input
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Check every step of the elimination against its closed-form prediction
    Verify {
        /// Matrix file, or - for standard input
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Rearrange rows/columns first if a zero pivot blocks elimination
        #[arg(long)]
        arrange: bool,
        #[arg(long, value_enum, hide = true)]
        fault: Option<FaultArg>,
    },
    /// Rearrange rows and columns so every pivot is non-zero and dominant
    Arrange {
        /// Matrix file, or - for standard input
        file: String,
    },
    /// Invert a square matrix exactly
    Invert {
        /// Matrix file, or - for standard input
        file: String,
    },
    /// Evaluate one minor of the matrix
    Minor {
        /// Matrix file, or - for standard input
        file: String,
        /// Row indices, comma separated, strictly increasing (1-based)
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        /// Column indices, comma separated, strictly increasing (1-based)
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Run seeded random self-check trials
    Fuzz {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        /// Entries are drawn uniformly from [-max-abs, max-abs]
        #[arg(long, default_value_t = 9)]
        max_abs: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(file: &str) -> Result<String, Failure> {
    if file == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure {
                code: 2,
                message: format!("cannot read standard input: {e}"),
            })?;
        Ok(text)
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure {
            code: 2,
            message: format!("cannot read {file}: {e}"),
        })
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Eliminate { file, format } => cmd_eliminate(&read_input(&file)?, format),
        Command::Verify {
            file,
            format,
            arrange,
            fault,
        } => cmd_verify(
            &read_input(&file)?,
            format,
            arrange,
            fault.map_or(FormulaFault::None, FaultArg::to_fault),
        ),
        Command::Arrange { file } => cmd_arrange(&read_input(&file)?),
        Command::Invert { file } => cmd_invert(&read_input(&file)?),
        Command::Minor { file, rows, cols } => cmd_minor(&read_input(&file)?, &rows, &cols),
        Command::Fuzz {
            trials,
            rows,
            cols,
            max_abs,
            seed,
        } => cmd_fuzz(&FuzzConfig {
            trials,
            rows,
            cols,
            max_abs,
            seed,
        }),
    }
}

fn main() {
    match run(Cli::parse()) {
        Ok(output) => print!("{output}"),
        Err(failure) => {
            eprint!("{}", failure.message);
            if !failure.message.ends_with('\n') {
                eprintln!();
            }
            std::process::exit(failure.code);
        }
    }
}
