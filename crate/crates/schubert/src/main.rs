use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use schubert::ehrhart::{count_dilation, ehrhart_polynomial};
use schubert::matroid::{
    circuit_hyperplanes, enumerate_bases, is_sparse_paving, RSequence, SchubertSet,
};
use schubert::oracles::{kohnert_monomial_count, lattice_points_direct, Budgets};
use schubert::scan::{
    check_sparse_paving_bounds, rational_to_json, run_identity_suite,
    scan_catalan_conjectures, scan_f_positivity, ScanReport,
};
use schubert::Error;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Exact Ehrhart counts for Schubert matroid polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count lattice points in dilations and reconstruct the Ehrhart polynomial
    Ehrhart(EhrhartArgs),
    /// Run a conjecture scan or the identity regression suite
    Scan(ScanArgs),
    /// Classify a Schubert matroid by brute force
    Classify(SpecArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Set literal, e.g. "{2,4,5}"
    #[arg(long)]
    set: Option<String>,
    /// r-sequence literal, e.g. "2,1,2,1,1,1"
    #[arg(long)]
    r: Option<String>,
    /// Named family
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Uniform,
    Minimal,
    SparsePaving,
    Catalan,
}

#[derive(Args)]
struct EhrhartArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Single dilation to evaluate
    #[arg(long)]
    t: Option<i64>,
    /// Evaluate all dilations 0..=tmax
    #[arg(long)]
    tmax: Option<i64>,
    /// Cross-check counts against the brute-force oracles
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Accepted for interface stability; execution is sequential
    #[arg(long, default_value = "1")]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ScanArgs {
    /// One of: f-positivity, catalan, bounds, identities
    which: String,
    /// Parameter cap (block sizes for f-positivity/identities, a and b for catalan)
    #[arg(long)]
    max: Option<i64>,
    /// Ground-set / index cap (bounds, catalan)
    #[arg(long, name = "max-n")]
    max_n: Option<i64>,
    /// Dilation cap for the identity suite
    #[arg(long)]
    tmax: Option<i64>,
    /// Accepted for interface stability; execution is sequential
    #[arg(long, default_value = "1")]
    jobs: usize,
}

const USAGE: u8 = 1;
const BUDGET: u8 = 2;
const COUNTEREXAMPLE: u8 = 3;

fn fail(code: u8, message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn error_exit(e: &Error) -> ExitCode {
    let code = match e {
        Error::BudgetExceeded(_) => BUDGET,
        Error::Inconsistency(_) => COUNTEREXAMPLE,
        _ => USAGE,
    };
    fail(code, &e.to_string())
}

fn resolve_spec(args: &SpecArgs) -> Result<RSequence, Error> {
    let sources = [args.set.is_some(), args.r.is_some(), args.family.is_some()]
        .iter()
        .filter(|x| **x)
        .count();
    if sources != 1 {
        return Err(Error::InvalidInput(
            "specify exactly one of --set, --r, --family".into(),
        ));
    }
    if let Some(text) = &args.set {
        return Ok(SchubertSet::parse(text)?.to_rsequence());
    }
    if let Some(text) = &args.r {
        return RSequence::parse(text);
    }
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| Error::InvalidInput(format!("--{name} is required for this family")))
    };
    let blocks: Vec<i64> = match args.family.unwrap() {
        Family::Uniform => {
            let (k, n) = (need(args.k, "k")?, need(args.n, "n")?);
            if !(1 <= k && k < n) {
                return Err(Error::InvalidInput("uniform requires 1 <= k < n".into()));
            }
            vec![n - k, k]
        }
        Family::Minimal => {
            let (k, n) = (need(args.k, "k")?, need(args.n, "n")?);
            if !(2 <= k && k < n) {
                return Err(Error::InvalidInput("minimal requires 2 <= k < n".into()));
            }
            vec![1, k - 1, n - k - 1, 1]
        }
        Family::SparsePaving => {
            let (k, n) = (need(args.k, "k")?, need(args.n, "n")?);
            if !(2 <= k && k <= n - 2) {
                return Err(Error::InvalidInput(
                    "sparse-paving requires 2 <= k <= n-2".into(),
                ));
            }
            vec![k - 1, 1, 1, n - k - 1]
        }
        Family::Catalan => {
            let (n, a, b) = (need(args.n, "n")?, need(args.a, "a")?, need(args.b, "b")?);
            if n < 1 || a < 1 || b < 1 {
                return Err(Error::InvalidInput("catalan requires n, a, b >= 1".into()));
            }
            (0..n).flat_map(|_| [a, b]).collect()
        }
    };
    // Leading zero blocks are valid for r-sequences but cannot arise here.
    let blocks: Vec<u32> = blocks
        .into_iter()
        .map(|x| u32::try_from(x).map_err(|_| Error::InvalidInput("block out of range".into())))
        .collect::<Result<_, _>>()?;
    RSequence::new(&blocks)
}

fn cmd_ehrhart(args: &EhrhartArgs) -> ExitCode {
    let r = match resolve_spec(&args.spec) {
        Ok(r) => r,
        Err(e) => return error_exit(&e),
    };
    let n = r.ground_size() as i64;
    let ts: Vec<i64> = match (args.t, args.tmax) {
        (Some(_), Some(_)) => {
            return fail(USAGE, "--t and --tmax are mutually exclusive");
        }
        (Some(t), None) if t >= 0 => vec![t],
        (Some(_), None) => return fail(USAGE, "--t must be nonnegative"),
        (None, Some(tmax)) if tmax >= 0 => (0..=tmax).collect(),
        (None, Some(_)) => return fail(USAGE, "--tmax must be nonnegative"),
        (None, None) => (0..=n).collect(),
    };
    let poly = ehrhart_polynomial(&r);
    let values: Vec<(i64, BigInt)> = ts.iter().map(|&t| (t, count_dilation(&r, t))).collect();
    let verification = if args.verify {
        let set = r.to_set();
        let budgets = Budgets::default();
        let mut rows = Vec::new();
        for (t, engine) in &values {
            let direct = match lattice_points_direct(&set, *t, &budgets) {
                Ok(v) => v,
                Err(e) => return error_exit(&e),
            };
            let kohnert = if *t as u64 * set.rank_total() as u64 <= budgets.max_boxes as u64 {
                let weight: Vec<u32> = set
                    .indicator()
                    .iter()
                    .map(|&x| x as u32 * *t as u32)
                    .collect();
                match kohnert_monomial_count(&weight, &budgets) {
                    Ok(v) => Some(v),
                    Err(e) => return error_exit(&e),
                }
            } else {
                None
            };
            let agree =
                *engine == direct && kohnert.as_ref().is_none_or(|k| k == engine);
            rows.push((*t, direct, kohnert, agree));
        }
        Some(rows)
    } else {
        None
    };
    if let Some(rows) = &verification {
        if let Some((t, direct, _, _)) = rows.iter().find(|(_, _, _, agree)| !agree) {
            return fail(
                COUNTEREXAMPLE,
                &format!("oracle disagreement at t={t}: oracle={direct}"),
            );
        }
    }
    match args.format {
        Format::Json => {
            let mut out = json!({
                "r": r.blocks(),
                "n": n,
                "rank": r.rank_total(),
                "polynomial": poly
                    .coeffs()
                    .iter()
                    .map(rational_to_json)
                    .collect::<Vec<_>>(),
                "values": values
                    .iter()
                    .map(|(t, v)| (t.to_string(), v.to_string()))
                    .collect::<std::collections::BTreeMap<_, _>>(),
            });
            if let Some(rows) = &verification {
                out["verified"] = json!(rows
                    .iter()
                    .map(|(t, direct, kohnert, agree)| json!({
                        "t": t,
                        "rank_oracle": direct.to_string(),
                        "kohnert": kohnert.as_ref().map(|k| k.to_string()),
                        "agree": agree,
                    }))
                    .collect::<Vec<_>>());
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            for (t, v) in &values {
                println!("{t},{v}");
            }
            for (i, c) in poly.coeffs().iter().enumerate() {
                println!("coeff,{i},{}/{}", c.numer(), c.denom());
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_scan(args: &ScanArgs) -> ExitCode {
    let report: Result<ScanReport, Error> = match args.which.as_str() {
        "f-positivity" => {
            let m = args.max.unwrap_or(4);
            scan_f_positivity(m, m, args.max_n.unwrap_or(m))
        }
        "catalan" => {
            let m = args.max.unwrap_or(2);
            scan_catalan_conjectures(args.max_n.unwrap_or(3), m, m)
        }
        "bounds" => check_sparse_paving_bounds(args.max_n.unwrap_or(8)),
        "identities" => run_identity_suite(args.max.unwrap_or(5), args.tmax.unwrap_or(8)),
        other => return fail(USAGE, &format!("unknown scan '{other}'")),
    };
    match report {
        Ok(report) => {
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(COUNTEREXAMPLE)
            }
        }
        Err(e) => error_exit(&e),
    }
}

fn cmd_classify(args: &SpecArgs) -> ExitCode {
    let r = match resolve_spec(args) {
        Ok(r) => r,
        Err(e) => return error_exit(&e),
    };
    let set = r.to_set();
    if set.ground_size() > 16 {
        return fail(BUDGET, "classification is brute-force; n <= 16 required");
    }
    let sparse = match is_sparse_paving(&set) {
        Ok(v) => v,
        Err(e) => return error_exit(&e),
    };
    let hyperplanes = match circuit_hyperplanes(&set) {
        Ok(v) => v,
        Err(e) => return error_exit(&e),
    };
    let out = json!({
        "sparse_paving": sparse,
        "rank": set.rank_total(),
        "n_bases": enumerate_bases(&set).len(),
        "circuit_hyperplanes": hyperplanes,
    });
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are successes; real parse errors are not.
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(USAGE);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match &cli.command {
        Command::Ehrhart(args) => cmd_ehrhart(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Classify(args) => cmd_classify(args),
    }
}
