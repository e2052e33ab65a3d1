use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use frame_rigidity_verify::config::{parse_field, parse_tol, TOL_ENV};
use frame_rigidity_verify::{run_suite, ConfigError, Suite, SuiteConfig};

/// Run a seeded property suite and print its JSON report.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Args {
    /// Suite to run (see --list-suites).
    #[arg(long, required_unless_present = "list_suites")]
    suite: Option<String>,
    /// Ambient dimension.
    #[arg(long, default_value_t = 4)]
    ambient: usize,
    /// Scalar field: real or complex.
    #[arg(long, default_value = "complex")]
    field: String,
    #[arg(long, default_value_t = frame_rigidity_verify::config::DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base tolerance; overrides the environment variable.
    #[arg(long, env = TOL_ENV)]
    tol: Option<String>,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Print the available suites and exit.
    #[arg(long)]
    list_suites: bool,
}

fn config(args: &Args) -> Result<SuiteConfig, ConfigError> {
    let suite: Suite = args.suite.as_deref().unwrap_or_default().parse()?;
    let tol = match &args.tol {
        Some(s) => parse_tol(s)?,
        None => frame_rigidity::DEFAULT_TOL,
    };
    let cfg = SuiteConfig {
        suite,
        ambient: args.ambient,
        field: parse_field(&args.field)?,
        trials: args.trials,
        seed: args.seed,
        tol,
        report_path: args.report.clone(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_suites {
        for s in Suite::ALL {
            println!(
                "{:<16} n>={}  {}",
                s.name(),
                s.min_ambient(),
                s.description()
            );
        }
        return ExitCode::SUCCESS;
    }
    let cfg = match config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = report.to_json_pretty();
    println!("{json}");
    if let Some(path) = &cfg.report_path {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    for p in report.properties.iter().filter(|p| !p.passed()) {
        eprintln!(
            "FAIL {}: {}/{} trials, worst residual {:e}",
            p.name, p.failures, p.trials, p.worst_residual
        );
    }
    ExitCode::from(report.exit_code() as u8)
}
