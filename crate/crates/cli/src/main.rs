use std::path::PathBuf;
use std::process::ExitCode;

use chain_semiring::verifier::all_pass;
use chain_semiring_cli::{
    check_n, claim_list, cmd_closure, cmd_derivations, cmd_table, max_n_from_env, parse_n_range,
    render_verify, run_verify, CliResult, OutputFormat, TableOp,
};
use clap::{Args, Parser, Subcommand};

/// Explore endomorphism semirings of finite chains, their strings and
/// derivations.
#[derive(Parser)]
#[command(name = "chain-semiring", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "ascii")]
    format: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the addition or multiplication table of a string.
    Table {
        #[arg(long)]
        n: usize,
        /// Anchors "a,b" or "a1,...,am", "full", "S" or "DS:a,b"; numbers may be written n, n-1, ...
        #[arg(long)]
        string: String,
        #[arg(long, value_enum, default_value = "mul")]
        op: TableOp,
        #[command(flatten)]
        output: Output,
    },
    /// Print the delta maps of a two-anchor string and their composition table.
    Derivations {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        string: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run claim checks over a range of chain sizes.
    Verify {
        /// "all" or a comma-separated list of claim IDs.
        #[arg(long, default_value = "all")]
        claims: String,
        /// A size N or an inclusive range LO..HI.
        #[arg(long, default_value = "2..6")]
        n: String,
        /// Fix the anchors instead of exhausting them.
        #[arg(long)]
        string: Option<String>,
        /// Fix s for the top-piece claims.
        #[arg(long)]
        s: Option<usize>,
        /// List the claim IDs and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the differential closure of an ideal.
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        string: String,
        /// "I:j", "CO" or positions such as "{0,n}".
        #[arg(long)]
        ideal: String,
        /// "D", "delta:k" or "delta:k,l".
        #[arg(long)]
        derivation: String,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(output: &Output, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let max_n = max_n_from_env()?;
    match cli.command {
        Command::Table {
            n,
            string,
            op,
            output,
        } => {
            check_n(n, max_n)?;
            emit(&output, &cmd_table(n, &string, op, output.format)?)?;
        }
        Command::Derivations { n, string, output } => {
            check_n(n, max_n)?;
            emit(&output, &cmd_derivations(n, &string, output.format)?)?;
        }
        Command::Closure {
            n,
            string,
            ideal,
            derivation,
            output,
        } => {
            check_n(n, max_n)?;
            emit(
                &output,
                &cmd_closure(n, &string, &ideal, &derivation, output.format)?,
            )?;
        }
        Command::Verify {
            claims,
            n,
            string,
            s,
            list,
            output,
        } => {
            if list {
                emit(&output, &claim_list())?;
                return Ok(ExitCode::SUCCESS);
            }
            let range = parse_n_range(&n)?;
            if !range.is_empty() {
                check_n(*range.start(), max_n)?;
                check_n(*range.end(), max_n)?;
            }
            let results = run_verify(&claims, range, string.as_deref(), s)?;
            emit(&output, &render_verify(&results, output.format)?)?;
            if !all_pass(&results) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
