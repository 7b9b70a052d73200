use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ivpoly::{build_table, render_seq, render_table, seq_terms, OutputFormat, SeqKind, TableKind};
use ivpoly_core::verify::{run_all, run_check, CheckName, EnumCaps, VerifyConfig};
use ivpoly_core::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Derivative-stability constants of integer-valued polynomials.
#[derive(Parser)]
#[command(name = "ivpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle (c, q, d, F or signed Stirling numbers).
    Table {
        kind: TableKind,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: OutputFormat,
    },
    /// Print λ_n or c_n for n = 0..=max-n.
    Seq {
        kind: SeqKind,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Print prime-power factorizations instead of values.
        #[arg(long)]
        factored: bool,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Run the verification suite, or one named check.
    Verify {
        /// `all` or one of: theorem1..4, lemma1..3, corollary1, proposition1, proposition2.
        scope: String,
        /// Override the range of the selected check(s).
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn enum_caps_from_env() -> Result<EnumCaps, String> {
    match std::env::var("IVPOLY_ENUM_CAP") {
        Err(_) => Ok(EnumCaps::default()),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(EnumCaps::uniform(cap)),
            _ => Err(format!("IVPOLY_ENUM_CAP must be a positive integer, got {raw:?}")),
        },
    }
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_FAILED);
    }
    ExitCode::SUCCESS
}

fn verify(scope: &str, max_n: Option<usize>, caps: EnumCaps) -> ExitCode {
    let selected: Option<CheckName> = if scope == "all" {
        None
    } else {
        match scope.parse() {
            Ok(name) => Some(name),
            Err(_) => {
                let known: Vec<&str> = CheckName::ALL.iter().map(|c| c.as_str()).collect();
                eprintln!(
                    "error: unknown check {scope:?}; expected `all` or one of {}",
                    known.join(", ")
                );
                return ExitCode::from(EXIT_USAGE);
            }
        }
    };
    let mut config = match max_n {
        Some(n) if selected.is_none() => VerifyConfig::with_max_n(n),
        _ => VerifyConfig::default(),
    };
    config.caps = caps;
    if let (Some(name), Some(n)) = (selected, max_n) {
        config.set_max_n(name, n);
    }
    let reports = match selected {
        Some(name) => run_check(name, &config).map(|r| vec![r]),
        None => run_all(&config),
    };
    match reports {
        Ok(reports) => {
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_string());
                text.push('\n');
            }
            let code = emit(&text);
            if reports.iter().all(|r| r.passed()) {
                code
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(e @ Error::Resource { .. }) => {
            eprintln!("error: {e} (raise it with IVPOLY_ENUM_CAP)");
            ExitCode::from(EXIT_CAP)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match enum_caps_from_env() {
        Ok(caps) => caps,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match cli.command {
        Command::Table { kind, max_n, format } => emit(&render_table(&build_table(kind, max_n), format)),
        Command::Seq {
            kind,
            max_n,
            factored,
            format,
        } => emit(&render_seq(kind, &seq_terms(kind, max_n, factored), format)),
        Command::Verify { scope, max_n } => verify(&scope, max_n, caps),
    }
}
