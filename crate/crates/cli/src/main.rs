//! `slq` — command-line front end for the exact signless-Laplacian
//! coefficient toolkit: per-graph coefficient vectors, bicyclic
//! enumeration, the verification suites (extremality, closed forms,
//! difference identities, rewrite monotonicity), and the incidence-energy
//! reports (threshold scan, cubic root bounds).
//!
//! Every run prints one JSON report `{command, params, results[],
//! violations[], elapsed_ms}` to stdout (optionally to `--output`), with a
//! CSV mirror of the tabular payload behind `--csv`. Reports are
//! byte-identical across runs of the same configuration except for the
//! trailing `elapsed_ms` field. Exit codes: 0 all checks passed, 1 a
//! verification check failed, 2 configuration error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use slq_core::enumerate::{generate_all_bicyclic, partition_by_parity, verify_extremal};
use slq_core::families::{
    build_family, closed_form_poly, difference_identity, Family, FamilyError,
};
use slq_core::graph::{Graph, ParityClass};
use slq_core::oracle::{laplacian_coeffs_oracle, signless_coeffs_oracle};
use slq_core::poly::{coeffs_via_charpoly, signless_charpoly, CoeffVector, MatrixKind};
use slq_core::spectral::{cubic_root_bounds_check, ie_threshold_scan, SpectralError};
use slq_core::transforms::seeded_suite;

#[derive(Parser)]
#[command(
    name = "slq",
    version,
    about = "Exact signless-Laplacian coefficient toolkit: coefficient vectors, bicyclic \
             enumeration, extremality verification, and incidence-energy reports"
)]
struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Write a CSV mirror of the tabular payload to this file.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficient vector(s) of one graph from an edge-list file.
    Coeffs(CoeffsArgs),
    /// Connected bicyclic graphs of one order, up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Verification suites (exit 1 when any check fails).
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Incidence-energy reports.
    #[command(subcommand)]
    Ie(IeCommand),
}

#[derive(Args)]
struct CoeffsArgs {
    /// Edge-list file: comment/blank lines, a `p <n> <m>` header, then one
    /// `u v` pair per line (0-based vertices).
    #[arg(long)]
    input: PathBuf,
    /// Computation path; `both` cross-checks the subgraph-weight oracle
    /// against the characteristic polynomial and fails on any mismatch.
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    /// Which matrix the coefficients belong to.
    #[arg(long, value_enum, default_value_t = KindArg::Signless)]
    kind: KindArg,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order (number of vertices), 4..=9.
    #[arg(long)]
    n: usize,
    /// Restrict the listing to one parity class.
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    /// Report counts only, without the per-graph rows.
    #[arg(long)]
    count_only: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Exhaustive dominance-minimality of the class minimizer at order n.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Closed-form family polynomials against constructed hub graphs.
    ClosedForms {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// The six closed-form difference identities, expanded exactly.
    Identities {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Seeded randomized rewrite suite with exact dominance certificates.
    Transforms {
        #[arg(long, default_value_t = 20240817)]
        seed: u64,
        /// Minimum number of recorded applications.
        #[arg(long, default_value_t = 500)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum IeCommand {
    /// Compare the two class minimizers' incidence energies over a range
    /// of orders, via both the spectrum and the closed-form cubics.
    Scan {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Interval assertions on the closed-form cubic roots (claimed for
    /// orders >= 31).
    Bounds {
        #[arg(long)]
        from: usize,
        /// Defaults to `from` (a single order).
        #[arg(long)]
        to: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Charpoly,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Signless,
    Laplacian,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Odd,
    Even,
}

impl From<ClassArg> for ParityClass {
    fn from(c: ClassArg) -> ParityClass {
        match c {
            ClassArg::Odd => ParityClass::OddClass,
            ClassArg::Even => ParityClass::EvenClass,
        }
    }
}

fn class_name(c: ParityClass) -> &'static str {
    match c {
        ParityClass::OddClass => "odd",
        ParityClass::EvenClass => "even",
    }
}

#[derive(Serialize)]
struct Report {
    command: String,
    params: Value,
    results: Vec<Value>,
    violations: Vec<Value>,
    elapsed_ms: u128,
}

/// Everything a subcommand produces: the report body, the CSV mirror
/// (header + rows), and optional extra stdout lines printed before the
/// JSON (used by `coeffs` for the bare vector).
struct Outcome {
    command: String,
    params: Value,
    results: Vec<Value>,
    violations: Vec<Value>,
    csv_header: Vec<String>,
    csv_rows: Vec<Vec<String>>,
    stdout_lines: Vec<String>,
}

impl Outcome {
    fn new(command: &str, params: Value) -> Outcome {
        Outcome {
            command: command.to_string(),
            params,
            results: Vec::new(),
            violations: Vec::new(),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            stdout_lines: Vec::new(),
        }
    }

    fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let passed = outcome.passed();
    let report = Report {
        command: outcome.command,
        params: outcome.params,
        results: outcome.results,
        violations: outcome.violations,
        elapsed_ms: start.elapsed().as_millis(),
    };
    let rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(path) = &cli.csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        let ok = w
            .write_record(&outcome.csv_header)
            .and_then(|_| outcome.csv_rows.iter().try_for_each(|r| w.write_record(r)));
        let bytes = ok
            .map_err(|e| e.to_string())
            .and_then(|_| w.into_inner().map_err(|e| e.to_string()));
        match bytes {
            Ok(b) => {
                if let Err(e) = std::fs::write(path, b) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("error: csv: {e}");
                return ExitCode::from(2);
            }
        }
    }
    // Stdout may be a closed pipe (e.g. `slq ... | head`); report files are
    // already on disk, so a failed print must not abort the run.
    {
        use std::io::Write;
        let mut so = std::io::stdout().lock();
        for line in &outcome.stdout_lines {
            let _ = writeln!(so, "{line}");
        }
        let _ = writeln!(so, "{rendered}");
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: &Command) -> Result<Outcome, String> {
    match command {
        Command::Coeffs(args) => run_coeffs(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(v) => match v {
            VerifyCommand::Extremal { n, class } => run_verify_extremal(*n, (*class).into()),
            VerifyCommand::ClosedForms { max_n } => run_verify_closed_forms(*max_n),
            VerifyCommand::Identities { max_n } => run_verify_identities(*max_n),
            VerifyCommand::Transforms { seed, count } => run_verify_transforms(*seed, *count),
        },
        Command::Ie(ie) => match ie {
            IeCommand::Scan { from, to } => run_ie_scan(*from, *to),
            IeCommand::Bounds { from, to } => run_ie_bounds(*from, to.unwrap_or(*from)),
        },
    }
}

fn coeff_strings(v: &CoeffVector) -> Vec<String> {
    v.values().iter().map(|c| c.to_string()).collect()
}

fn run_coeffs(args: &CoeffsArgs) -> Result<Outcome, String> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {}: {e}", args.input.display()))?;
    let g = Graph::from_text(&text).map_err(|e| e.to_string())?;
    let kinds: Vec<MatrixKind> = match args.kind {
        KindArg::Signless => vec![MatrixKind::SignlessLaplacian],
        KindArg::Laplacian => vec![MatrixKind::Laplacian],
        KindArg::Both => vec![MatrixKind::SignlessLaplacian, MatrixKind::Laplacian],
    };
    let method_name = match args.method {
        MethodArg::Oracle => "oracle",
        MethodArg::Charpoly => "charpoly",
        MethodArg::Both => "both",
    };
    let mut out = Outcome::new(
        "coeffs",
        json!({
            "input": args.input.display().to_string(),
            "method": method_name,
            "kind": kinds.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "n": g.n(),
            "m": g.m(),
        }),
    );
    out.csv_header = ["kind", "method", "index", "coefficient"]
        .map(String::from)
        .to_vec();
    for kind in kinds {
        let oracle = if args.method != MethodArg::Charpoly {
            let v = match kind {
                MatrixKind::SignlessLaplacian => signless_coeffs_oracle(&g),
                MatrixKind::Laplacian => laplacian_coeffs_oracle(&g),
            }
            .map_err(|e| e.to_string())?;
            Some(v)
        } else {
            None
        };
        let charpoly = if args.method != MethodArg::Oracle {
            Some(coeffs_via_charpoly(&g, kind))
        } else {
            None
        };
        for (method, v) in [("oracle", &oracle), ("charpoly", &charpoly)] {
            if let Some(v) = v {
                out.results.push(json!({
                    "kind": kind.to_string(),
                    "method": method,
                    "coefficients": coeff_strings(v),
                    "display": v.to_string(),
                }));
                for (i, c) in v.values().iter().enumerate() {
                    out.csv_rows.push(vec![
                        kind.to_string(),
                        method.to_string(),
                        i.to_string(),
                        c.to_string(),
                    ]);
                }
            }
        }
        if let (Some(a), Some(b)) = (&oracle, &charpoly) {
            if a.values() != b.values() {
                out.violations.push(json!({
                    "kind": kind.to_string(),
                    "mismatch": "oracle vs charpoly",
                    "oracle": coeff_strings(a),
                    "charpoly": coeff_strings(b),
                }));
            }
        }
        let shown = charpoly.as_ref().or(oracle.as_ref()).expect("one path ran");
        out.stdout_lines.push(format!("{kind}: {shown}"));
    }
    Ok(out)
}

fn run_enumerate(args: &EnumerateArgs) -> Result<Outcome, String> {
    let graphs = generate_all_bicyclic(args.n).map_err(|e| e.to_string())?;
    let (odd, even) = partition_by_parity(&graphs).map_err(|e| e.to_string())?;
    let class_param = args.class.map(|c| class_name(c.into()));
    let mut out = Outcome::new(
        "enumerate",
        json!({
            "n": args.n,
            "class": class_param,
            "count_only": args.count_only,
        }),
    );
    out.csv_header = ["code", "class"].map(String::from).to_vec();
    out.results.push(json!({
        "total": graphs.len(),
        "odd": odd.len(),
        "even": even.len(),
    }));
    let selected: Vec<(&Graph, &'static str)> = match args.class.map(ParityClass::from) {
        Some(ParityClass::OddClass) => odd.iter().map(|g| (g, "odd")).collect(),
        Some(ParityClass::EvenClass) => even.iter().map(|g| (g, "even")).collect(),
        None => odd
            .iter()
            .map(|g| (g, "odd"))
            .chain(even.iter().map(|g| (g, "even")))
            .collect(),
    };
    for (g, class) in selected {
        let code = g.canonical_form().map_err(|e| e.to_string())?.to_string();
        out.csv_rows.push(vec![code.clone(), class.to_string()]);
        if !args.count_only {
            out.results.push(json!({ "code": code, "class": class }));
        }
    }
    Ok(out)
}

fn run_verify_extremal(n: usize, class: ParityClass) -> Result<Outcome, String> {
    let report = verify_extremal(n, class).map_err(|e| e.to_string())?;
    let mut out = Outcome::new(
        "verify extremal",
        json!({ "n": n, "class": class_name(class) }),
    );
    let mut summary = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    let instances = summary
        .as_object_mut()
        .expect("report is an object")
        .remove("instances")
        .unwrap_or(Value::Null);
    let violations = summary
        .as_object_mut()
        .expect("report is an object")
        .remove("violations")
        .unwrap_or(Value::Null);
    // The embedded timing field would break byte-identical reports.
    summary.as_object_mut().expect("object").remove("elapsed_ms");
    out.results.push(summary);
    if let Value::Array(rows) = instances {
        out.results.extend(rows);
    }
    if let Value::Array(rows) = violations {
        out.violations.extend(rows);
    }
    if !(report.verified && report.unique_minimizer) && out.violations.is_empty() {
        out.violations.push(json!({
            "check": "unique-dominance-minimizer",
            "verified": report.verified,
            "unique_minimizer": report.unique_minimizer,
        }));
    }
    let csv = report.to_csv();
    let mut lines = csv.lines();
    out.csv_header = lines
        .next()
        .unwrap_or_default()
        .split(',')
        .map(String::from)
        .collect();
    out.csv_rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    Ok(out)
}

fn run_verify_closed_forms(max_n: usize) -> Result<Outcome, String> {
    if max_n < 4 {
        return Err(format!("--max-n must be at least 4, got {max_n}"));
    }
    let mut out = Outcome::new("verify closed-forms", json!({ "max_n": max_n }));
    out.csv_header = ["family", "n", "ok"].map(String::from).to_vec();
    for family in Family::ALL {
        for n in family.closed_form_min_n()..=max_n {
            let spec = family.hub_spec(n).map_err(|e| e.to_string())?;
            let hub = build_family(&spec).map_err(|e| e.to_string())?;
            let direct = signless_charpoly(&hub);
            let closed = closed_form_poly(family, n).map_err(|e| e.to_string())?;
            let ok = direct == closed;
            out.results.push(json!({
                "family": family.to_string(),
                "n": n,
                "ok": ok,
            }));
            out.csv_rows
                .push(vec![family.to_string(), n.to_string(), ok.to_string()]);
            if !ok {
                out.violations.push(json!({
                    "family": family.to_string(),
                    "n": n,
                    "closed_form": format!("{closed:?}"),
                    "charpoly": format!("{direct:?}"),
                }));
            }
        }
    }
    Ok(out)
}

fn run_verify_identities(max_n: usize) -> Result<Outcome, String> {
    if max_n < 5 {
        return Err(format!("--max-n must be at least 5, got {max_n}"));
    }
    let mut out = Outcome::new("verify identities", json!({ "max_n": max_n }));
    out.csv_header = ["identity", "n", "ok"].map(String::from).to_vec();
    for eq in 1..=6usize {
        for n in 4..=max_n {
            let identity = match difference_identity(eq, n) {
                Ok(d) => d,
                Err(FamilyError::OutOfRange { .. }) => continue,
                Err(e) => return Err(e.to_string()),
            };
            let ok = identity.lhs == identity.rhs;
            out.results
                .push(json!({ "identity": eq, "n": n, "ok": ok }));
            out.csv_rows
                .push(vec![eq.to_string(), n.to_string(), ok.to_string()]);
            if !ok {
                out.violations.push(json!({
                    "identity": eq,
                    "n": n,
                    "lhs": format!("{:?}", identity.lhs),
                    "rhs": format!("{:?}", identity.rhs),
                }));
            }
        }
    }
    Ok(out)
}

fn run_verify_transforms(seed: u64, count: usize) -> Result<Outcome, String> {
    if count == 0 {
        return Err("--count must be positive".into());
    }
    let records = seeded_suite(seed, count).map_err(|e| e.to_string())?;
    let mut out = Outcome::new(
        "verify transforms",
        json!({ "seed": seed, "count": count }),
    );
    out.csv_header = ["transform", "applications", "conforming"]
        .map(String::from)
        .to_vec();
    let mut by_name: std::collections::BTreeMap<String, (usize, usize)> = Default::default();
    for r in &records {
        let entry = by_name.entry(r.name.to_string()).or_default();
        entry.0 += 1;
        let conforms =
            r.dominance.relation == slq_core::poly::DominanceRelation::Dominates;
        if conforms {
            entry.1 += 1;
        } else {
            out.violations.push(json!({
                "transform": r.name.to_string(),
                "relation": format!("{:?}", r.dominance.relation),
                "input": r.input.to_text(),
                "output": r.output.to_text(),
            }));
        }
    }
    out.results.push(json!({ "recorded": records.len() }));
    for (name, (total, conforming)) in &by_name {
        out.results.push(json!({
            "transform": name,
            "applications": total,
            "conforming": conforming,
        }));
        out.csv_rows
            .push(vec![name.clone(), total.to_string(), conforming.to_string()]);
    }
    Ok(out)
}

fn run_ie_scan(from: usize, to: usize) -> Result<Outcome, String> {
    let report = ie_threshold_scan(from, to).map_err(|e| e.to_string())?;
    let mut out = Outcome::new("ie scan", json!({ "from": from, "to": to }));
    out.results.push(json!({
        "crossover": report.crossover,
        "min_abs_diff": report.min_abs_diff,
        "max_path_disagreement": report.max_path_disagreement,
        "paths_agree": report.paths_agree,
    }));
    for row in &report.rows {
        out.results
            .push(serde_json::to_value(row).map_err(|e| e.to_string())?);
        if row.path_disagreement > 1e-6 {
            out.violations.push(json!({
                "n": row.n,
                "check": "spectrum-vs-closed-form agreement",
                "disagreement": row.path_disagreement,
            }));
        }
    }
    let csv = report.to_csv();
    let mut lines = csv.lines();
    out.csv_header = lines
        .next()
        .unwrap_or_default()
        .split(',')
        .map(String::from)
        .collect();
    out.csv_rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    Ok(out)
}

fn run_ie_bounds(from: usize, to: usize) -> Result<Outcome, String> {
    if from > to {
        return Err(format!("--from must not exceed --to, got {from}..={to}"));
    }
    let mut out = Outcome::new("ie bounds", json!({ "from": from, "to": to }));
    out.csv_header = ["n", "check", "value", "lo", "hi", "ok"]
        .map(String::from)
        .to_vec();
    for n in from..=to {
        let report = match cubic_root_bounds_check(n) {
            Ok(r) => r,
            Err(e @ SpectralError::OutOfRange { .. }) => return Err(e.to_string()),
            Err(e) => return Err(e.to_string()),
        };
        out.results
            .push(serde_json::to_value(&report).map_err(|e| e.to_string())?);
        for c in &report.checks {
            out.csv_rows.push(vec![
                n.to_string(),
                c.name.clone(),
                format!("{:.12}", c.value),
                format!("{:.12}", c.lo),
                format!("{:.12}", c.hi),
                c.ok.to_string(),
            ]);
            if !c.ok {
                out.violations.push(json!({
                    "n": n,
                    "check": c.name,
                    "value": c.value,
                    "lo": c.lo,
                    "hi": c.hi,
                }));
            }
        }
    }
    Ok(out)
}
