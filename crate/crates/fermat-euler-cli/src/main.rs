//! Command-line surface: per-number classification reports, class-table
//! generation, cycle dumps, and the verification harness.
//!
//! Exit status: 0 on success, 1 on verification failure or runtime error,
//! 2 on usage errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fermat_euler::error::Error;
use fermat_euler::theorems::{classify_all_k, classify_by_theorems, residue_profile, Rule, Verdict};
use fermat_euler::verify::{run_suite, CheckReport, Suite};
use fermat_euler::{
    build_table, class_record, cycle_decomposition, factorize, is_in_minus, is_in_plus,
    write_csv, write_json, TheoremVerdict,
};

#[derive(Parser)]
#[command(
    name = "fermat-euler",
    version,
    about = "Arnold's (N+)/(M-) classes: classify odd integers, emit class tables, \
             dump doubling-map cycles, and verify the theory at desk scale"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report factorization, class record, and rule verdicts for an odd n >= 3
    Classify {
        /// The odd integer to classify
        n: u64,
        /// Report only the class (2^k+)/(2^k-) for this k
        #[arg(long)]
        k: Option<u32>,
        /// Decide out-of-scope patterns with the definitional oracle
        #[arg(long)]
        resolve_oracle: bool,
    },
    /// Write one table row per odd n with 1 < n < max
    Table {
        /// Exclusive upper bound of the range
        #[arg(long)]
        max: u64,
        /// Output format
        #[arg(long, value_enum)]
        format: Format,
        /// Output file path
        #[arg(long)]
        out: PathBuf,
    },
    /// Run property suites; exit 0 only when every check passes
    Verify {
        /// Which suite to run
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest odd n to sweep
        #[arg(long)]
        max: u64,
        /// Largest class exponent k for the theorem sweeps
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=8))]
        max_k: u32,
    },
    /// Print the doubling-map cycle decomposition of the Euler group
    Cycles {
        /// The odd modulus
        n: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Props,
    Theorems,
    Dynamics,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Props => Suite::Props,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::Dynamics => Suite::Dynamics,
            SuiteArg::All => Suite::All,
        }
    }
}

enum AppError {
    Usage(String),
    Failure(String),
}

impl From<Error> for AppError {
    fn from(err: Error) -> AppError {
        match err {
            // Capacity is a runtime limit, not a malformed invocation.
            Error::GroupTooLarge { .. } => AppError::Failure(err.to_string()),
            _ => AppError::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(err: std::io::Error) -> AppError {
        AppError::Failure(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(AppError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(AppError::Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Classify { n, k, resolve_oracle } => cmd_classify(n, k, resolve_oracle),
        Command::Table { max, format, out } => cmd_table(max, format, &out),
        Command::Verify { suite, max, max_k } => cmd_verify(suite.into(), max, max_k),
        Command::Cycles { n } => cmd_cycles(n),
    }
}

fn describe_verdict(n: u64, k: u32, v: TheoremVerdict, resolve: bool) -> Result<String, AppError> {
    Ok(match (v.verdict, v.source) {
        (Verdict::OutsidePaperScope, _) if resolve => {
            // 2^k cannot divide phi(n) < 2^62 for k >= 62.
            let (plus, minus) = if k >= 62 {
                (false, false)
            } else {
                (is_in_plus(n, 1u64 << k)?, is_in_minus(n, 1u64 << k)?)
            };
            let verdict = if plus {
                Verdict::Plus
            } else if minus {
                Verdict::Minus
            } else {
                Verdict::Neither
            };
            format!("{verdict} via oracle (no rule covers this pattern)")
        }
        (Verdict::OutsidePaperScope, _) => {
            "outside the rule table (rerun with --resolve-oracle to decide)".to_string()
        }
        (verdict, Some(rule)) => format!("{verdict} via {rule}"),
        (verdict, None) => verdict.to_string(),
    })
}

fn cmd_classify(n: u64, requested_k: Option<u32>, resolve: bool) -> Result<ExitCode, AppError> {
    if requested_k == Some(0) {
        return Err(AppError::Usage(Error::ZeroK.to_string()));
    }
    let f = factorize(n)?;
    let record = class_record(n)?;
    let profile = residue_profile(&f)?;
    let omega = profile.omega() as u32;

    if f.omega() == 1 && f.factors()[0].1 == 1 {
        println!("n = {n} (prime)");
    } else {
        println!("n = {n} = {f}");
    }
    println!("phi = {}, period T = {}", record.phi, record.period_t);
    println!("maximal plus index N = {}", record.n_max);
    match record.m_max {
        Some(m) => println!("maximal minus index M = {m}"),
        None => println!("maximal minus index M = none (minus class empty)"),
    }
    println!("omega = {}, kinds = {}", omega, profile.kinds_string());

    match requested_k {
        Some(k) => {
            let verdict = classify_by_theorems(&f, k)?;
            println!("k={k}: {}", describe_verdict(n, k, verdict, resolve)?);
        }
        None => {
            for (k, verdict) in classify_all_k(&f)? {
                let suffix = if k > omega + 1 && verdict.source == Some(Rule::Remark) {
                    " (holds for every larger k as well)"
                } else {
                    ""
                };
                println!("k={k}: {}{suffix}", describe_verdict(n, k, verdict, resolve)?);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(max: u64, format: Format, out: &PathBuf) -> Result<ExitCode, AppError> {
    let rows = build_table(max)?;
    let file = File::create(out)?;
    let mut writer = BufWriter::new(file);
    match format {
        Format::Csv => write_csv(&rows, &mut writer)?,
        Format::Json => write_json(&rows, &mut writer)?,
    }
    writer.flush()?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &CheckReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "{status} {}: checked={}, failed={}",
        report.name, report.checked, report.failed
    );
    if let Some(detail) = &report.first_failure {
        println!("     first counterexample: {detail}");
    }
    if let Some(note) = &report.note {
        println!("     note: {note}");
    }
}

fn cmd_verify(suite: Suite, max: u64, max_k: u32) -> Result<ExitCode, AppError> {
    if max < 3 {
        return Err(AppError::Usage(Error::BelowMinimum(max).to_string()));
    }
    println!("running checks over odd n in [3, {max}], k in [1, {max_k}]");
    let reports = run_suite(suite, max, max_k)?;
    for report in &reports {
        print_report(report);
    }
    let cases: u64 = reports.iter().map(|r| r.checked).sum();
    let failures: u64 = reports.iter().map(|r| r.failed).sum();
    println!("summary: {} checks, {cases} cases, {failures} failures", reports.len());
    if failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_cycles(n: u64) -> Result<ExitCode, AppError> {
    let structure = cycle_decomposition(n)?;
    let cycles = structure
        .cycles
        .iter()
        .map(|cycle| {
            let elements = cycle
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!("({elements})")
        })
        .collect::<String>();
    println!("T={} N={}; {cycles}", structure.period_t, structure.cycle_count);
    Ok(ExitCode::SUCCESS)
}
