use std::process::ExitCode;
use std::time::Duration;

use altinv::formulas::{lookup, Statistic};
use altinv::harness::{self, BijectionParams, CountReport, Format, Verdict, VerifyOptions};
use altinv::pattern::parse_pattern_list;
use altinv::{ClassSpec, Enumerator, Error, Family};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "altinv", version, about = "Pattern-avoiding alternating involutions: counts, bijections, verification")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ClassArgs {
    /// s, i, a, ra, ai or rai.
    #[arg(long)]
    family: Family,
    /// Comma-separated forbidden patterns, e.g. 3421,4312.
    #[arg(long, default_value = "")]
    avoid: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: OutFormat,
    /// Per-count time budget in seconds.
    #[arg(long, default_value_t = 300)]
    timeout: u64,
    /// Include per-row timings (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Size of a class.
    Count {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        n: usize,
        /// Count connected members only.
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
    },
    /// Members of a class, one per line, in lexicographic order.
    Enumerate {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Brute-force counts against the closed forms.
    Verify {
        /// Comma-separated statement ids, or "all".
        #[arg(long, default_value = "all")]
        ids: String,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Empirical check of an open conjecture.
    Conjecture {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Apply one of the bijections.
    Bijection {
        #[arg(long)]
        name: String,
        /// A permutation ("2 1 4 3"), a Motzkin word ("UHD") or a tableau ("1 3 / 2 4").
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: Option<usize>,
        /// Tail for jaggard_swap, e.g. 435.
        #[arg(long)]
        tail: Option<String>,
    },
    /// Leading terms of a class.
    Sequence {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 16)]
        to: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long)]
        connected: bool,
    },
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::Invariant(_) | Error::Cancelled => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn statistic(connected: bool) -> Statistic {
    if connected {
        Statistic::Connected
    } else {
        Statistic::Members
    }
}

fn print_table(reports: &[CountReport], table: &TableArgs) -> Result<(), Error> {
    print!("{}", harness::emit_table(reports, table.format.into(), table.timing)?);
    let tally = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let mut summary = Vec::new();
    for v in [
        Verdict::Match,
        Verdict::Mismatch,
        Verdict::NoFormula,
        Verdict::ConjectureMatch,
        Verdict::ConjectureMismatch,
        Verdict::Skipped,
    ] {
        let c = tally(v);
        if c > 0 {
            summary.push(format!("{c} {v}"));
        }
    }
    eprintln!("{} rows: {}", reports.len(), summary.join(", "));
    let findings: Vec<&CountReport> = reports.iter().filter(|r| r.is_finding()).collect();
    if !findings.is_empty() {
        eprintln!("==================== FINDING ====================");
        for r in findings {
            eprintln!(
                "{} {}_{}({}): brute force {:?}, conjectured {:?}",
                r.id, r.family, r.n, r.patterns, r.brute_count, r.formula_count
            );
        }
        eprintln!("=================================================");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Count { class, n, connected, method } => {
            let pats = parse_pattern_list(&class.avoid)?;
            let value = match method {
                Method::Brute => {
                    let spec = ClassSpec::new(class.family, pats, n);
                    let e = Enumerator::default();
                    let c = if connected { e.count_connected(&spec)? } else { e.count(&spec)? };
                    c.to_string()
                }
                Method::Formula => {
                    let (v, t) = lookup::<i128>(class.family, &pats, n, statistic(connected), true)
                        .ok_or_else(|| Error::Unknown(format!("no closed form for {}_{n}({})", class.family, class.avoid)))?;
                    eprintln!("from {}", t.id);
                    v.to_string()
                }
            };
            println!("{value}");
        }
        Command::Enumerate { class, n, connected } => {
            let spec = ClassSpec::parse(class.family, &class.avoid, n)?;
            Enumerator::default().for_each(&spec, |p| {
                if !connected || p.is_connected() {
                    println!("{p}");
                }
            })?;
        }
        Command::Verify { ids, n_max, table } => {
            let ids: Vec<&str> = ids.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let opts = VerifyOptions { n_max, timeout: Duration::from_secs(table.timeout) };
            let reports = harness::verify(&ids, &opts)?;
            print_table(&reports, &table)?;
            return Ok(ExitCode::from(harness::exit_code(&reports) as u8));
        }
        Command::Conjecture { id, n_max, table } => {
            let opts = VerifyOptions { n_max, timeout: Duration::from_secs(table.timeout) };
            let reports = harness::probe_conjecture(&id, &opts)?;
            print_table(&reports, &table)?;
        }
        Command::Bijection { name, input, k, tail } => {
            println!("{}", harness::run_bijection(&name, &input, &BijectionParams { k, tail })?);
        }
        Command::Sequence { class, from, to, step, connected } => {
            let pats = parse_pattern_list(&class.avoid)?;
            let terms = harness::sequence(class.family, &pats, from, to, step, statistic(connected));
            let values: Vec<String> = terms.iter().map(|(_, c)| c.to_string()).collect();
            println!("{}", values.join(","));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    run(cli).unwrap_or_else(fail)
}
