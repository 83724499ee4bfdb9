//! `zclass`: count and list z-classes of finite Coxeter groups, and check the
//! closed forms against the brute-force oracle.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 resource cap (group too large for the configured order cap).

mod record;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zclass_core::closed_form::CoxeterType;
use zclass_core::oracle::{OracleConfig, LARGE_ORDER_CAP};
use zclass_core::Error;

use record::{render_output, render_verify, Format};
use run::{Context, MethodChoice};

#[derive(Parser)]
#[command(name = "zclass", version, about = "z-classes of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Raise the oracle order cap from 100000 to 5000000 (needed for E7).
    #[arg(long, global = true)]
    allow_large: bool,

    /// Directory for cached reflection-group tables.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of z-classes, e.g. `zclass count "B3 x I2(8)"`.
    Count {
        #[arg(value_name = "TYPE")]
        group: String,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
    },
    /// List each z-class by the labels of its conjugacy classes.
    Classes {
        #[arg(value_name = "TYPE")]
        group: String,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
    },
    /// Compare closed forms (or table values) with the oracle.
    Verify {
        #[arg(value_name = "TYPE", required_unless_present = "all_small")]
        group: Option<String>,
        /// Sweep B1..B5, D2..D6, I2(3)..I2(16) and A1..A5.
        #[arg(long, conflicts_with = "group")]
        all_small: bool,
    },
}

enum Failure {
    Mismatch,
    Usage(String),
    Cap(String),
}

fn parse_type(text: &str) -> Result<CoxeterType, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("cannot parse `{text}`: {e}")))
}

fn classify(err: Error, allow_large: bool) -> Failure {
    match err {
        Error::CapExceeded { order, .. } | Error::NeedsOracleBeyondCap { order, .. } => {
            let hint = if order > LARGE_ORDER_CAP {
                "; this is beyond the oracle even with --allow-large"
            } else if allow_large {
                ""
            } else {
                "; rerun with --allow-large to raise the cap"
            };
            Failure::Cap(format!("{err}{hint}"))
        }
        other => Failure::Usage(other.to_string()),
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let ctx = Context {
        config: if cli.allow_large {
            OracleConfig::large()
        } else {
            OracleConfig::default()
        },
        cache_dir: cli.cache_dir.clone(),
    };
    let fail = |e| classify(e, cli.allow_large);
    match &cli.command {
        Command::Count { group, method } => {
            let t = parse_type(group)?;
            let rec = run::count_or_classes(&t, *method, false, &ctx).map_err(fail)?;
            Ok(render_output(&rec, cli.format))
        }
        Command::Classes { group, method } => {
            let t = parse_type(group)?;
            let rec = run::count_or_classes(&t, *method, true, &ctx).map_err(fail)?;
            Ok(render_output(&rec, cli.format))
        }
        Command::Verify { group, all_small } => {
            let types = if *all_small {
                run::small_sweep()
            } else {
                vec![parse_type(group.as_deref().expect("required by clap"))?]
            };
            let report = run::verify(&types, &ctx).map_err(fail)?;
            let text = render_verify(&report, cli.format);
            if report.pass {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => {
            eprintln!("zclass: verification mismatch");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("zclass: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("zclass: {m}");
            ExitCode::from(3)
        }
    }
}
