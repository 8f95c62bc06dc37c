use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wreath_vo::chartable::{chartable, CharTable, Route};
use wreath_vo::fock::HeisOp;
use wreath_vo::forms::xi_from_selector;
use wreath_vo::group::GroupData;
use wreath_vo::lattice::{apply_heis_fock, apply_lattice_shift, apply_partial, fock_inner, FockVec, Half, LatticeVec};
use wreath_vo::mckay::{basic_rep_check, build_affine, toroidal_relation_check};
use wreath_vo::partitions::PartFn;
use wreath_vo::verify::{run_suite, SuiteReport, VerifyConfig, SUITES};
use wreath_vo::vertex::VertexAlgebra;
use wreath_vo::Error;

#[derive(Parser)]
#[command(name = "wreath-vo", about = "Exact wreath-product characters, Fock space and vertex operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table of Γ_n from vertex-operator matrix coefficients.
    Chartable {
        #[command(flatten)]
        common: Common,
        /// fock pairs s_λ with a'_{-μ}; vertex builds s_{λ,−ω(λ)} from modes.
        #[arg(long, value_enum, default_value_t = RouteArg::Fock)]
        route: RouteArg,
    },
    /// Affine Cartan data, roots and relation checks for Γ ⊂ SU(2).
    Mckay {
        #[command(flatten)]
        common: Common,
        /// Also check the affine and toroidal relations on degree-≤D vectors.
        #[arg(long)]
        relations: bool,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Apply operators to a Fock-space state.
    Fock {
        #[command(flatten)]
        common: Common,
        /// Initial state "ρ@α", e.g. "c0:[2,1];c1:[1]@(0,1)" or "-@(1,0)".
        #[arg(long, conflicts_with = "schur", allow_hyphen_values = true)]
        state: Option<String>,
        /// Start from the Schur state s_{λ,α} (trivial ξ only).
        #[arg(long)]
        schur: Option<String>,
        /// Lattice part α of the Schur state; defaults to −ω(λ).
        #[arg(long, requires = "schur", allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Operators in the order they act: "a:n:i", "X:n:(coords)",
        /// "e:(coords)" for e^β, "d:(coords)" for ∂_γ.
        #[arg(long = "apply")]
        ops: Vec<String>,
        /// Pair the result with this state.
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
    },
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value = "trivial")]
    group: String,
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Weight ξ: trivial or mckay.
    #[arg(long, default_value = "trivial")]
    xi: String,
    /// Truncation degree, an integer or half-integer such as 5/2.
    #[arg(long, default_value = "2")]
    degree: String,
    /// Mode bound, an integer or half-integer.
    #[arg(long, default_value = "2")]
    modes: String,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Vertex,
    Fock,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NoAdeMatch => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Chartable { common, route } => cmd_chartable(&common, route),
        Command::Mckay { common, relations } => cmd_mckay(&common, relations),
        Command::Verify { common, suite } => cmd_verify(&common, &suite),
        Command::Fock { common, state, schur, alpha, ops, pair } => {
            cmd_fock(&common, state.as_deref(), schur.as_deref(), alpha.as_deref(), &ops, pair.as_deref())
        }
    }
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn half(s: &str, what: &str) -> Result<Half, Failure> {
    let h: Half = s.parse().map_err(|_| Failure::Usage(format!("bad {what} {s:?}")))?;
    if h.twice() < 0 {
        return Err(Failure::Usage(format!("{what} must be nonnegative")));
    }
    Ok(h)
}

fn cmd_chartable(common: &Common, route: RouteArg) -> Result<(), Failure> {
    if common.xi != "trivial" && common.xi != "gamma0" {
        return Err(Failure::Usage("character tables use ξ = trivial".into()));
    }
    let group = Arc::new(GroupData::build(&common.group)?);
    let (route, route_name) = match route {
        RouteArg::Vertex => (Route::Vertex, "vertex"),
        RouteArg::Fock => (Route::Fock, "fock"),
    };
    let table = chartable(&group, common.n, route)?;
    let orth = table.orthogonality();
    let text = match common.format {
        Format::Json => to_json(&table_json(&table, route_name, orth.rows, orth.columns)),
        Format::Csv => table_csv(&table)?,
        Format::Pretty => table_pretty(&table),
    };
    emit(common, &text)?;
    if !orth.pass() {
        return Err(Failure::Verification(orth.failures.join("; ")));
    }
    Ok(())
}

fn table_json(t: &CharTable, route_name: &str, rows_ok: bool, cols_ok: bool) -> Value {
    json!({
        "group": t.group.descriptor(),
        "n": t.n,
        "irreducibles": t.group.irrep_labels(),
        "route": route_name,
        "rows": t.row_labels(),
        "cols": t.col_labels(),
        "Z": t.z.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
        "values": t.values.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "orthogonality": { "rows": rows_ok, "columns": cols_ok },
        "ordering": "irreducibles by degree then family label; partitions by size then reverse lexicographic",
    })
}

fn table_csv(t: &CharTable) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(e.to_string());
    let mut header = vec!["λ \\ μ".to_string()];
    header.extend(t.col_labels());
    w.write_record(&header).map_err(io)?;
    let mut z = vec!["Z_μ".to_string()];
    z.extend(t.z.iter().map(|x| x.to_string()));
    w.write_record(&z).map_err(io)?;
    for (label, row) in t.row_labels().into_iter().zip(&t.values) {
        let mut rec = vec![label];
        rec.extend(row.iter().map(|v| v.to_string()));
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn table_pretty(t: &CharTable) -> String {
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend(t.col_labels());
    cells.push(header);
    let mut z = vec!["Z_μ".to_string()];
    z.extend(t.z.iter().map(|x| x.to_string()));
    cells.push(z);
    for (label, row) in t.row_labels().into_iter().zip(&t.values) {
        let mut r = vec![label];
        r.extend(row.iter().map(|v| v.to_string()));
        cells.push(r);
    }
    let cols = cells[0].len();
    let widths: Vec<usize> =
        (0..cols).map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = format!("{} ≀ S_{}: {} irreducible characters\n", t.group.descriptor(), t.n, t.len());
    for r in &cells {
        let line: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn cmd_mckay(common: &Common, relations: bool) -> Result<(), Failure> {
    let ad = build_affine(&common.group)?;
    let degree = half(&common.degree, "degree")?.twice() as u32 / 2;
    let modes = half(&common.modes, "mode bound")?.twice() / 2;
    let mut report = json!({
        "group": ad.group.descriptor(),
        "label": ad.label.to_string(),
        "cartan": ad.cartan,
        "delta": ad.delta.0,
        "diagram": ad.diagram.iter().map(|&(i, j, m)| json!([i, j, m])).collect::<Vec<_>>(),
        "root_count": ad.roots.len(),
        "eigencheck": ad.eigen.all_pass(),
        "radical": { "a_delta_zero": ad.radical.a_delta_zero, "kernel_dim": ad.radical.kernel_dim },
    });
    let mut ok = ad.eigen.all_pass() && ad.radical.pass();
    if relations {
        let basic = basic_rep_check(&ad, degree, modes)?;
        let tor = toroidal_relation_check(&ad, modes, degree)?;
        ok &= basic.pass() && tor.pass();
        report["relations"] = json!({
            "degree": degree,
            "modes": modes,
            "affine": { "instances": basic.relations.instances(), "failures": basic.relations.failure_count() },
            "graded_dimensions": basic.direct,
            "product_formula": basic.product,
            "toroidal": tor.families.iter().map(|(k, (n, f))| (k.clone(), json!({"instances": n, "failures": f}))).collect::<serde_json::Map<_, _>>(),
        });
    }
    let text = match common.format {
        Format::Pretty => {
            let mut s = format!("{}: {}\n", ad.group.descriptor(), ad.label);
            s.push_str(&format!("A = {:?}\nδ = {}\n", ad.cartan, ad.delta));
            s.push_str(&format!("edges (i, j, multiplicity): {:?}\n", ad.diagram));
            s.push_str(&format!("{} roots of norm 2\n", ad.roots.len()));
            s.push_str(&format!("AE = ED: {}; radical: {}\n", ad.eigen.all_pass(), ad.radical.pass()));
            if let Some(r) = report.get("relations") {
                s.push_str(&format!("relations: {}\n", serde_json::to_string(r).expect("serializable")));
            }
            s
        }
        _ => to_json(&report),
    };
    emit(common, &text)?;
    if !ok {
        return Err(Failure::Verification("McKay invariants".into()));
    }
    Ok(())
}

fn cmd_verify(common: &Common, suite: &str) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        group: common.group.clone(),
        n: common.n,
        xi: common.xi.clone(),
        degree: half(&common.degree, "degree")?,
        modes: half(&common.modes, "mode bound")?,
        seed: common.seed,
    };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    if let Some(bad) = names.iter().find(|s| !SUITES.contains(s)) {
        return Err(Failure::Usage(format!("unknown suite {bad:?}; known: {}", SUITES.join(", "))));
    }
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        match run_suite(name, &cfg) {
            Ok(r) => {
                eprintln!("{name}: {} ms", r.elapsed_ms);
                reports.push(r);
            }
            // Suites that do not apply to this group or weight are skipped
            // when running all of them.
            Err(e) if suite == "all" => eprintln!("{name}: skipped ({e})"),
            Err(e) => return Err(e.into()),
        }
    }
    let text = match common.format {
        Format::Json | Format::Csv => to_json(&Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite, "group": r.group, "xi": r.xi,
                        "checks": r.checks, "failures": r.failures, "pass": r.pass(), "details": r.details,
                    })
                })
                .collect(),
        )),
        Format::Pretty => reports
            .iter()
            .map(|r| {
                let status = if r.pass() { "PASS" } else { "FAIL" };
                let mut s = format!("{status} {} [{} ξ={}]: {} checks, {} failures\n", r.suite, r.group, r.xi, r.checks, r.failures);
                for d in &r.details {
                    s.push_str(&format!("    {d}\n"));
                }
                s
            })
            .collect(),
    };
    emit(common, &text)?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass()).map(|r| r.suite.as_str()).collect();
    if !failed.is_empty() {
        return Err(Failure::Verification(failed.join(", ")));
    }
    Ok(())
}

fn parse_state(s: &str, width: usize) -> Result<FockVec, Failure> {
    let (rho, alpha) = s.rsplit_once('@').ok_or_else(|| Failure::Usage(format!("state {s:?} needs ρ@α")))?;
    let rho = PartFn::parse(rho, width)?;
    let alpha: LatticeVec = alpha.parse()?;
    if alpha.width() != width {
        return Err(Failure::Usage(format!("lattice vector {alpha} needs {width} coordinates")));
    }
    Ok(FockVec::basis(rho, alpha))
}

fn cmd_fock(
    common: &Common,
    state: Option<&str>,
    schur: Option<&str>,
    alpha: Option<&str>,
    ops: &[String],
    pair: Option<&str>,
) -> Result<(), Failure> {
    let group = Arc::new(GroupData::build(&common.group)?);
    let xf = xi_from_selector(&group, &common.xi)?;
    let va = VertexAlgebra::new(&xf)?;
    let width = va.width();
    let lattice_vec = |s: &str| -> Result<LatticeVec, Failure> {
        let v: LatticeVec = s.parse()?;
        if v.width() != width {
            return Err(Failure::Usage(format!("lattice vector {v} needs {width} coordinates")));
        }
        Ok(v)
    };
    let mut v = match (state, schur) {
        (Some(s), _) => parse_state(s, width)?,
        (None, Some(l)) => {
            let lambda = PartFn::parse(l, width)?;
            let a = match alpha {
                Some(a) => lattice_vec(a)?,
                None => &LatticeVec::zero(width) - &VertexAlgebra::omega(&lambda),
            };
            va.schur_state(&lambda, &a)?
        }
        (None, None) => FockVec::lattice_point(LatticeVec::zero(width)),
    };
    for op in ops {
        let parts: Vec<&str> = op.splitn(3, ':').collect();
        v = match parts.as_slice() {
            ["a", n, i] => {
                let n: i64 = n.parse().map_err(|_| Failure::Usage(format!("bad mode in {op:?}")))?;
                let i: usize = i.parse().map_err(|_| Failure::Usage(format!("bad label in {op:?}")))?;
                if i >= width {
                    return Err(Failure::Usage(format!("label {i} out of range")));
                }
                apply_heis_fock(&HeisOp::basis(n, width, i), &v, &xf, va.lattice())
            }
            ["X", n, g] => {
                let n: Half = n.parse()?;
                va.vertex_component(&lattice_vec(g)?, n, &v)?
            }
            ["e", g] => apply_lattice_shift(&lattice_vec(g)?, &v, va.cocycle()),
            ["d", g] => apply_partial(&lattice_vec(g)?, &v, va.lattice()),
            _ => return Err(Failure::Usage(format!("bad operator {op:?}"))),
        };
    }
    let pairing = match pair {
        Some(p) => Some(fock_inner(&v, &parse_state(p, width)?, &xf)),
        None => None,
    };
    let text = match common.format {
        Format::Pretty => {
            let mut s = format!("{v}\n");
            if let Some(p) = &pairing {
                s.push_str(&format!("pairing: {p}\n"));
            }
            s
        }
        _ => {
            let sectors: serde_json::Map<String, Value> =
                v.sectors().map(|(a, s)| (a.to_string(), Value::String(s.to_string()))).collect();
            to_json(&json!({
                "group": group.descriptor(),
                "xi": xf.label(),
                "state": sectors,
                "pairing": pairing.map(|p| p.to_string()),
            }))
        }
    };
    emit(common, &text)
}
