use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use plethyst::Limits;
use plethyst_cli::{
    cmd_expand, cmd_first_term, cmd_verify_sweep, Format, OutputBasis, SweepConfig,
};

/// Exact plethysm of Schur functions.
///
/// The hard cap on m*n (default 16) can be changed with PLETHYST_MAX_N.
#[derive(Parser)]
#[command(name = "plethyst", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand s_lambda[s_mu] in the Schur or monomial basis.
    Expand {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "schur")]
        basis: OutputBasis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the predicted first term, optionally checking it.
    FirstTerm {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Compute the full expansion and check the prediction.
        #[arg(long)]
        verify: bool,
        /// Also compare against the power-sum oracle (with --verify).
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check every pair with m*n up to --max-product.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_product: usize,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let result = match cli.command {
        Command::Expand {
            lambda,
            mu,
            basis,
            format,
        } => cmd_expand(&lambda, &mu, basis, format, &limits),
        Command::FirstTerm {
            lambda,
            mu,
            verify,
            oracle,
            format,
        } => cmd_first_term(&lambda, &mu, verify, oracle, format, &limits),
        Command::Verify {
            max_product,
            oracle,
            format,
            out,
            jobs,
        } => cmd_verify_sweep(
            &SweepConfig {
                max_product,
                oracle,
                output_path: out,
                format,
                parallelism: jobs,
            },
            &limits,
        ),
    };
    match result {
        Ok(output) => {
            println!("{}", output.text);
            ExitCode::from(output.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
