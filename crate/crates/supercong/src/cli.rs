//! Command-line front end: enumerate the catalog, print sequence values,
//! run checks, and write reports.
//!
//! Exit codes: 0 when no check failed, 1 when at least one FAIL record was
//! produced, 2 for usage or I/O errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::check::{self, Kind, Perturbation, RunParams, Status, XMode};
use crate::report::{ConfigEcho, Report};
use crate::seq::{seq_poly, seq_value, SeqId};

#[derive(Parser)]
#[command(
    name = "supercong",
    version,
    about = "Exact checks for binomial-sum sequence identities and congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries (id, anchor, threshold, modulus, description).
    List(ListArgs),
    /// Print one sequence value or polynomial, exactly.
    Seq(SeqArgs),
    /// Run checks and optionally write a report file.
    Run(RunArgs),
    /// Run conjecture scans and print their data tables.
    Explore(RunArgs),
}

#[derive(Args)]
struct ListArgs {
    /// Show one kind only: identity, q, congruence or conjecture.
    #[arg(long)]
    filter: Option<String>,
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence name, e.g. g, franel, apery, g_poly, catalan.
    name: String,
    /// Index n.
    n: u64,
    /// Evaluate a polynomial family at this integer.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<i64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated ids or prefixes ("C05,X0"); default all for `run`,
    /// the conjecture entries for `explore`.
    #[arg(long)]
    checks: Option<String>,
    /// Inclusive prime range lo..hi for congruence entries.
    #[arg(long, default_value = "5..47", value_parser = parse_prime_range)]
    primes: (u64, u64),
    /// Largest index n for identity and scan entries.
    #[arg(long = "nmax", default_value_t = 30)]
    n_max: u64,
    /// How polynomial congruences are compared.
    #[arg(long, default_value = "coefficient", value_parser = parse_mode)]
    mode: XMode,
    /// Evaluation points used in eval mode.
    #[arg(
        long = "x-points",
        default_value = "-3,-1,0,1,2",
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    x_points: Vec<i64>,
    /// Largest r for the odd-power conjecture scan.
    #[arg(long = "rmax", default_value_t = 3)]
    r_max: u64,
    /// Worker threads; 0 means one per available core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report file format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Test fixture: bump one table value, as seq:index:delta.
    #[arg(long, hide = true)]
    perturb: Vec<String>,
}

fn parse_prime_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got '{s}'"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad bound '{lo}'"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad bound '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_mode(s: &str) -> Result<XMode, String> {
    s.parse()
}

pub fn run_cli() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::List(args) => cmd_list(&args),
        Command::Seq(args) => cmd_seq(&args),
        Command::Run(args) => cmd_run(&args, false),
        Command::Explore(args) => cmd_run(&args, true),
    }
}

fn cmd_list(args: &ListArgs) -> i32 {
    let filter = match args.filter.as_deref() {
        None => None,
        Some("identity") => Some(Kind::Identity),
        Some("q") => Some(Kind::QIdentity),
        Some("congruence") => Some(Kind::Congruence),
        Some("conjecture") => Some(Kind::Conjecture),
        Some(other) => {
            eprintln!("unknown kind '{other}' (identity, q, congruence, conjecture)");
            return 2;
        }
    };
    for e in check::catalog() {
        if filter.is_some_and(|k| k != e.kind) {
            continue;
        }
        let threshold = e
            .threshold
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        println!(
            "{}  {}  {}  {}  {}",
            e.id,
            e.anchor,
            threshold,
            e.modulus.unwrap_or("exact"),
            e.description
        );
    }
    0
}

fn cmd_seq(args: &SeqArgs) -> i32 {
    let id: SeqId = match args.name.parse() {
        Ok(id) => id,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    if id.is_polynomial() {
        let poly = match seq_poly(id, args.n) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("{e}");
                return 2;
            }
        };
        match args.x {
            Some(x) => println!("{}", poly.eval_i64(x)),
            None => println!("{poly}"),
        }
        return 0;
    }
    if args.x.is_some() {
        eprintln!("--x applies only to the polynomial families");
        return 2;
    }
    match seq_value(id, args.n) {
        Ok(v) => {
            println!("{v}");
            0
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

fn cmd_run(args: &RunArgs, explore: bool) -> i32 {
    let default_checks = if explore { "X01,X02,X03,X04,X05,X06,X07" } else { "all" };
    let selection = args.checks.as_deref().unwrap_or(default_checks);
    let ids = match check::resolve_selection(selection) {
        Ok(ids) => ids,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    if explore {
        if let Some(id) = ids
            .iter()
            .find(|id| check::entry(id).is_some_and(|e| e.kind != Kind::Conjecture))
        {
            eprintln!("explore only runs conjecture entries; {id} is not one");
            return 2;
        }
    }
    let mut perturbations = Vec::new();
    for spec in &args.perturb {
        match spec.parse::<Perturbation>() {
            Ok(p) => perturbations.push(p),
            Err(e) => {
                eprintln!("{e}");
                return 2;
            }
        }
    }
    let params = RunParams {
        n_max: args.n_max,
        primes: args.primes,
        mode: args.mode,
        x_points: args.x_points.clone(),
        r_max: args.r_max,
        ..RunParams::default()
    };

    let started = Instant::now();
    let ctx = match check::prepare_ctx(&ids, &params, &perturbations) {
        Ok(ctx) => ctx,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let results = check::run_checks(&ctx, &ids, &params, args.jobs);
    let elapsed_ms = started.elapsed().as_millis() as u64;

    for r in &results {
        let entry = check::entry(&r.id).expect("result id is from the catalog");
        let shown = match (r.status, entry.kind) {
            (Status::Pass, Kind::Conjecture) => "NO-COUNTEREXAMPLE",
            (Status::Pass, _) => "PASS",
            (Status::Fail, _) => "FAIL",
            (Status::Skip, _) => "SKIP",
        };
        println!("{:<5} {:<18} {}", r.id, shown, r.params);
        if let Some(w) = &r.witness {
            println!("      witness {}: {} != {}", w.at, w.lhs, w.rhs);
        }
        if let Some(reason) = &r.skip_reason {
            println!("      {reason}");
        }
        if explore {
            if let Some(table) = &r.table {
                for row in table {
                    let line: Vec<String> =
                        row.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    println!("      {}", line.join("  "));
                }
            }
        }
    }

    let report = Report::new(ConfigEcho::new(&ids, &params), results, elapsed_ms);
    println!(
        "pass {}  fail {}  skip {}  ({} ms)",
        report.summary.pass, report.summary.fail, report.summary.skip, elapsed_ms
    );

    if let Some(path) = &args.out {
        let body = match args.format {
            Format::Json => report.to_json(),
            Format::Csv => report.to_csv(),
        };
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("cannot write {}: {e}", path.display());
            return 2;
        }
    }
    report.exit_code()
}
