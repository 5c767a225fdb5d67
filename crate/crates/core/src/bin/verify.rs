use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use deligne_yangian::harness::{emit_report, run_suite, FieldChoice, HarnessError, RunConfig, Suite};

/// Run a verification suite and write a JSON report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Cli {
    /// brauer, evalfunctor, ugl, yangian, centralizer, invariants or all
    suite: String,
    /// JSON run configuration; flags below override it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    truncation: Option<usize>,
    /// rationals, rational-functions or prime:<p>
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Report path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Suppress the table on stderr
    #[arg(long)]
    quiet: bool,
}

fn run(cli: Cli) -> Result<i32, HarnessError> {
    let suite: Suite = cli.suite.parse()?;
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::default(),
    };
    if let Some(x) = cli.n {
        cfg.n = x;
    }
    if let Some(x) = cli.big_n {
        cfg.big_n = x;
    }
    if let Some(x) = cli.m {
        cfg.m = x;
    }
    if let Some(x) = cli.truncation {
        cfg.truncation = x;
    }
    if let Some(f) = &cli.field {
        cfg.field = f.parse::<FieldChoice>()?;
    }
    if let Some(x) = cli.seed {
        cfg.seed = x;
    }
    let out = cli.out.clone().or_else(|| cfg.out.as_ref().map(PathBuf::from));
    let report = run_suite(suite, &cfg)?;
    if !cli.quiet {
        eprint!("{}", report.table());
    }
    match out {
        Some(path) => emit_report(&report, &path)?,
        None => print!("{}", report.render()),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
