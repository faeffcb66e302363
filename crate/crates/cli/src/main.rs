use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use whq_cli::{
    cmd_derive, cmd_equivalence, cmd_fundamental, cmd_gen, cmd_validate, ReportFormat,
};

/// Exact verifier for weak Hopf quasigroups and their Hopf modules.
///
/// Exit codes: 0 all laws hold, 1 a law fails, 2 parse or I/O error.
#[derive(Parser)]
#[command(name = "whq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and the derived-identity suite of a structure file.
    Validate {
        path: PathBuf,
        #[arg(long, default_value = "text")]
        report: String,
    },
    /// Print projections, base objects, Casimir/Frobenius verdicts and
    /// associativity diagnostics.
    Derive {
        path: PathBuf,
        #[arg(long, default_value = "text")]
        report: String,
    },
    /// Certify the fundamental theorem for the regular module (or for a
    /// Hopf module loaded from a file).
    Fundamental {
        path: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        report: String,
    },
    /// Certify the equivalence between strong Hopf modules and right
    /// H_L-modules on a sample family.
    Equivalence {
        path: PathBuf,
        /// Extra Hopf module files to add to the sample family.
        modules: Vec<PathBuf>,
        /// Number of extra seeded random right H_L-modules to sample.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "text")]
        report: String,
    },
    /// Emit a structure file from a generator spec, e.g. `s3`,
    /// `cyclic:4`, `chein:s3`, `discrete:3`, `pair:2`,
    /// `tensor(chein:s3,discrete:2)`.
    Gen {
        spec: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = |report: &str| ReportFormat::parse(report);
    let result = match &cli.command {
        Command::Validate { path, report } => match fmt(report) {
            Ok(f) => cmd_validate(path, f),
            Err(e) => whq_cli::CmdResult {
                exit_code: 2,
                output: format!("error: {e}\n"),
            },
        },
        Command::Derive { path, report } => match fmt(report) {
            Ok(f) => cmd_derive(path, f),
            Err(e) => whq_cli::CmdResult {
                exit_code: 2,
                output: format!("error: {e}\n"),
            },
        },
        Command::Fundamental {
            path,
            module,
            report,
        } => match fmt(report) {
            Ok(f) => cmd_fundamental(path, module.as_deref(), f),
            Err(e) => whq_cli::CmdResult {
                exit_code: 2,
                output: format!("error: {e}\n"),
            },
        },
        Command::Equivalence {
            path,
            modules,
            random,
            seed,
            report,
        } => match fmt(report) {
            Ok(f) => cmd_equivalence(path, modules, *random, *seed, f),
            Err(e) => whq_cli::CmdResult {
                exit_code: 2,
                output: format!("error: {e}\n"),
            },
        },
        Command::Gen { spec, field, out } => cmd_gen(spec, field, out.as_deref()),
    };
    print!("{}", result.output);
    ExitCode::from(result.exit_code as u8)
}
