//! Argument parsing and dispatch for the `farey-ideals` binary.
//!
//! [`run`] never prints or exits; it returns a [`CommandResult`] holding the
//! text to print and the exit code, which keeps every subcommand testable.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

/// Usage errors: unknown flags, missing arguments, conflicting options.
pub const EXIT_USAGE: i32 = 2;
/// Errors reported by the library, e.g. a rational θ or a size guard.
pub const EXIT_DOMAIN: i32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    /// The argument vector, echoed.
    pub command: Vec<String>,
    /// Machine-readable payload. Exact values are strings such as `"3/8"`;
    /// decimal renderings sit in fields suffixed `_f64`.
    pub data: Option<Value>,
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

#[derive(Debug, Parser)]
#[command(
    name = "farey-ideals",
    version,
    about = "Exact Farey/Bratteli ideal computations and AF quantum metrics"
)]
pub struct Cli {
    /// Print the JSON payload instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print diagrams in Graphviz DOT.
    #[arg(long, global = true)]
    pub dot: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued-fraction terms and convergents.
    Cf(CfArgs),
    /// Rows of the Farey diagram.
    Farey {
        #[command(subcommand)]
        command: FareyCommand,
    },
    /// Bratteli diagrams.
    Diagram {
        #[command(subcommand)]
        command: DiagramCommand,
    },
    /// Ideal metric and ideal enumeration.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// The primitive ideal of the Farey algebra attached to θ.
    Theta {
        #[command(subcommand)]
        command: ThetaCommand,
    },
    /// Lip-norms and Monge-Kantorovich distances on finite chains.
    Qmetric {
        #[command(subcommand)]
        command: QmetricCommand,
    },
    /// Run the acceptance criteria.
    Verify,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CfSource {
    /// A rational `p/q` in `[0, 1)`.
    #[arg(long)]
    pub rational: Option<String>,
    /// An eventually periodic expansion such as `0;2,(1,3)`.
    #[arg(long)]
    pub periodic: Option<String>,
    /// A finite expansion such as `0;2,3`.
    #[arg(long)]
    pub terms: Option<String>,
}

#[derive(Debug, Args)]
pub struct CfArgs {
    #[command(flatten)]
    pub source: CfSource,
    /// Last convergent index to print.
    #[arg(long, default_value_t = 10)]
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum FareyCommand {
    /// Level `n`: index, denominator, numerator and `r = p/q`.
    Level {
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum DiagramCommand {
    /// The Farey diagram through level `n`.
    Farey { n: usize },
    /// The Effros-Shen diagram of θ through level `n`.
    EffrosShen { cf: String, n: usize },
    /// The quotient of the Farey diagram by the θ-ideal through level `n`.
    Quotient {
        #[arg(long)]
        theta: String,
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum IdealCommand {
    /// Dyadic distance between two θ-ideals.
    Metric {
        #[arg(long)]
        theta1: String,
        #[arg(long)]
        theta2: String,
        #[arg(long)]
        depth: usize,
    },
    /// Every coherent ideal of a diagram file through level `depth`.
    Enumerate {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ThetaView {
    /// Ideal blocks at every level.
    #[arg(long)]
    pub blocks: bool,
    /// The ideal diagram `{levels:[[indices]]}`.
    #[arg(long)]
    pub diagram: bool,
    /// `β(n) = 1 / dim` of the quotient at every level.
    #[arg(long)]
    pub beta: bool,
    /// Trace coefficients `c(n, θ)`.
    #[arg(long)]
    pub trace_coeffs: bool,
}

#[derive(Debug, Subcommand)]
pub enum ThetaCommand {
    /// The indices `j_n`, or one of the views below.
    Ideal {
        #[arg(long)]
        cf: String,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        view: ThetaView,
    },
}

#[derive(Debug, Subcommand)]
pub enum QmetricCommand {
    /// Certified lower bound on the Monge-Kantorovich distance.
    Mk {
        /// Chain JSON, inline or a file path.
        #[arg(long)]
        chain: String,
        /// State JSON, inline or a file path.
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        iters: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let parsed = Cli::try_parse_from(
        std::iter::once("farey-ideals".to_string()).chain(argv.iter().cloned()),
    );
    let cli = match parsed {
        Ok(c) => c,
        Err(e) => {
            let (stdout, stderr, code) = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (e.to_string(), String::new(), 0)
                }
                _ => (String::new(), e.to_string(), EXIT_USAGE),
            };
            return CommandResult {
                command: argv,
                data: None,
                stdout,
                stderr,
                exit_code: code,
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(out) => {
            let stdout = if cli.json {
                let payload = out.data.clone().unwrap_or(Value::Null);
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&payload).expect("values serialize")
                )
            } else {
                out.text
            };
            CommandResult {
                command: argv,
                data: out.data,
                stdout,
                stderr: String::new(),
                exit_code: out.exit_code,
            }
        }
        Err(commands::Failure::Usage(msg)) => CommandResult {
            command: argv,
            data: None,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            exit_code: EXIT_USAGE,
        },
        Err(commands::Failure::Domain(msg)) => CommandResult {
            command: argv,
            data: None,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            exit_code: EXIT_DOMAIN,
        },
    }
}
