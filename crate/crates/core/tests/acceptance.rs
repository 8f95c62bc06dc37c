//! Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values come from tables and oracles in this file.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use wreath_vo::chartable::{chartable, Route};
use wreath_vo::fock::schur;
use wreath_vo::forms::trivial_xi;
use wreath_vo::group::GroupData;
use wreath_vo::lattice::{fock_inner, FockVec, Half, LatticeVec};
use wreath_vo::mckay::build_affine;
use wreath_vo::partitions::{enumerate_partfn, PartFn};
use wreath_vo::verify::{run_suite, VerifyConfig};
use wreath_vo::vertex::VertexAlgebra;
use wreath_vo::wreath::{genuine_character_check, type_of, WreathGroup};
use wreath_vo::Cyclo;

struct Outcome {
    pass: bool,
    summary: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Outcome {
        Outcome { pass, summary: summary.into(), notes: Vec::new() }
    }
}

fn cfg(group: &str, n: u32, xi: &str, degree: i64, modes: Half) -> VerifyConfig {
    VerifyConfig { group: group.into(), n, xi: xi.into(), degree: Half::int(degree), modes, seed: 0 }
}

/// Runs suites and folds them into one outcome.
fn suites(runs: &[(&str, VerifyConfig)]) -> Outcome {
    let mut checks = 0;
    let mut failures = 0;
    let mut notes = Vec::new();
    for (name, c) in runs {
        match run_suite(name, c) {
            Ok(rep) => {
                checks += rep.checks;
                failures += rep.failures;
                notes.push(format!("{name} {} ξ={} n={}: {} checks, {} failures", c.group, rep.xi, c.n, rep.checks, rep.failures));
                if !rep.pass() {
                    notes.extend(rep.details.iter().take(5).cloned());
                }
            }
            Err(e) => {
                failures += 1;
                notes.push(format!("{name} {}: error {e}", c.group));
            }
        }
    }
    Outcome { pass: failures == 0 && checks > 0, summary: format!("{checks} checks, {failures} failures"), notes }
}

/// Rank of an integer matrix by fraction-free elimination.
fn integer_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let (f, g) = (a[r][c], a[rank][c]);
                let pivot = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x = *x * g - p * f;
                }
                let gcd = a[r].iter().fold(0i128, |x, &y| num_gcd(x, y.abs()));
                if gcd > 1 {
                    a[r].iter_mut().for_each(|x| *x /= gcd);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn num_gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a } else { num_gcd(b, a % b) }
}

fn criterion_mckay() -> Outcome {
    let mut expected: Vec<(String, String)> =
        (2..=8).map(|m| (format!("cyclic:{m}"), format!("affine A{}", m - 1))).collect();
    for (g, l) in [("bd:8", "D4"), ("bd:12", "D5"), ("bd:16", "D6"), ("bt", "E6"), ("bo", "E7"), ("bi", "E8")] {
        expected.push((g.into(), format!("affine {l}")));
    }
    let start = Instant::now();
    let mut out = Outcome::new(true, "");
    for (spec, want) in &expected {
        match build_affine(spec) {
            Ok(ad) => {
                let a_delta_zero = ad
                    .cartan
                    .iter()
                    .all(|row| row.iter().zip(&ad.delta.0).map(|(a, d)| a * d).sum::<i64>() == 0);
                let kernel_dim = ad.cartan.len() - integer_rank(&ad.cartan);
                let ok = ad.eigen.all_pass() && a_delta_zero && kernel_dim == 1 && ad.label.to_string() == *want;
                out.pass &= ok;
                out.notes.push(format!(
                    "{spec}: {} (expected {want}), δ = {}, ker dim {kernel_dim}{}",
                    ad.label,
                    ad.delta,
                    if ok { "" } else { "  <-- mismatch" }
                ));
            }
            Err(e) => {
                out.pass = false;
                out.notes.push(format!("{spec}: error {e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    out.pass &= elapsed < Duration::from_secs(10);
    out.summary = format!("{} groups, {:.2} s (limit 10 s)", expected.len(), elapsed.as_secs_f64());
    out
}

fn criterion_isometry() -> Outcome {
    let mut runs = Vec::new();
    for g in ["trivial", "cyclic:2", "cyclic:3"] {
        for xi in ["trivial", "mckay"] {
            if g == "trivial" && xi == "mckay" {
                // the trivial group has no faithful 2-dimensional representation
                continue;
            }
            runs.push(("isometry", cfg(g, 4, xi, 0, Half::int(0))));
        }
    }
    suites(&runs)
}

fn criterion_heisenberg() -> Outcome {
    suites(&[
        ("heisenberg", cfg("cyclic:2", 0, "trivial", 4, Half::int(4))),
        ("heisenberg", cfg("cyclic:2", 0, "mckay", 4, Half::int(4))),
    ])
}

fn criterion_genseries() -> Outcome {
    suites(&[("genseries", cfg("cyclic:2", 4, "trivial", 0, Half::int(0)))])
}

fn criterion_ope() -> Outcome {
    suites(&[
        ("ope", cfg("cyclic:2", 0, "mckay", 2, Half::int(0))),
        ("ope", cfg("cyclic:2", 0, "trivial", 2, Half::int(0))),
    ])
}

fn criterion_clifford() -> Outcome {
    suites(&[
        ("clifford", cfg("trivial", 0, "trivial", 2, Half::from_twice(5))),
        ("clifford", cfg("cyclic:2", 0, "trivial", 2, Half::from_twice(5))),
    ])
}

/// χ^λ(μ) by removing rim hooks on the β-set of λ.
fn rim_hook_character(lambda: &[u32], mu: &[u32]) -> i64 {
    let l = lambda.len();
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &p)| p as i64 + (l - 1 - i) as i64).collect();
    fn go(beta: &[i64], mu: &[u32]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else { return 1 };
        let k = k as i64;
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            let t = b - k;
            if t < 0 || beta.contains(&t) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > t && x < b).count();
            let mut next = beta.to_vec();
            next[i] = t;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * go(&next, rest);
        }
        total
    }
    go(&beta, mu)
}

fn criterion_chartables() -> Outcome {
    let start = Instant::now();
    let mut out = Outcome::new(true, "");
    let trivial = Arc::new(GroupData::build("trivial").unwrap());
    let mut entries = 0;
    for n in 1..=5 {
        let t = chartable(&trivial, n, Route::Vertex).unwrap();
        let mut bad = 0;
        for (i, row) in t.rows.iter().enumerate() {
            for (j, col) in t.cols.iter().enumerate() {
                entries += 1;
                let want = rim_hook_character(row.get(0).parts(), col.get(0).parts());
                if t.values[i][j] != Cyclo::from_int(want) {
                    bad += 1;
                }
            }
        }
        out.pass &= bad == 0;
        out.notes.push(format!("S_{n}: vertex table vs rim-hook oracle, {bad} mismatches"));
    }
    let s3 = chartable(&trivial, 3, Route::Vertex).unwrap();
    let idx = s3.rows.iter().position(|r| r.get(0).parts() == [2, 1]).unwrap();
    let by_class: BTreeMap<Vec<u32>, Cyclo> =
        s3.cols.iter().zip(&s3.values[idx]).map(|(c, v)| (c.get(0).parts().to_vec(), v.clone())).collect();
    let s3_ok = by_class[&vec![1, 1, 1]] == Cyclo::from_int(2)
        && by_class[&vec![2, 1]] == Cyclo::from_int(0)
        && by_class[&vec![3]] == Cyclo::from_int(-1);
    out.pass &= s3_ok;
    out.notes.push(format!("χ^(2,1) of S_3 on (1^3), (2,1), (3) = (2, 0, -1): {s3_ok}"));

    let mut genuine_rows = 0;
    for spec in ["cyclic:2", "cyclic:3"] {
        let group = Arc::new(GroupData::build(spec).unwrap());
        for n in 1..=3 {
            let t = chartable(&group, n, Route::Vertex).unwrap();
            let f = chartable(&group, n, Route::Fock).unwrap();
            let orth = t.orthogonality();
            let same = t.values == f.values;
            out.pass &= orth.pass() && same;
            let mut line = format!(
                "{spec} n={n}: {} irreducibles, rows {}, columns {}, routes agree {same}",
                t.len(),
                orth.rows,
                orth.columns
            );
            if WreathGroup::order_of(&group, n as usize) <= 48 {
                let wg = WreathGroup::build(&group, n as usize);
                let structure = wg.class_structure_constants();
                let values: Vec<Vec<Cyclo>> = (0..t.len())
                    .map(|i| {
                        let chi = t.row_class_fn(i);
                        wg.elements.iter().map(|x| chi.value(&type_of(x, &group))).collect()
                    })
                    .collect();
                let mut ok = true;
                for i in 0..t.len() {
                    ok &= genuine_character_check(&wg, &structure, &t.row_class_fn(i)).pass();
                    // element-level row orthogonality
                    for j in 0..t.len() {
                        let s: Cyclo =
                            (0..wg.order()).map(|x| &values[i][x] * &values[j][wg.inverse(x)]).sum();
                        ok &= s == Cyclo::from_int(if i == j { wg.order() as i64 } else { 0 });
                    }
                    genuine_rows += 1;
                }
                out.pass &= ok;
                line += &format!(", |Γ_n| = {} element-level {}", wg.order(), if ok { "ok" } else { "FAILED" });
            }
            out.notes.push(line);
        }
    }
    let elapsed = start.elapsed();
    out.pass &= elapsed < Duration::from_secs(120);
    out.summary =
        format!("{entries} S_n entries, {genuine_rows} rows checked element-level, {:.2} s", elapsed.as_secs_f64());
    out
}

fn criterion_toroidal() -> Outcome {
    let start = Instant::now();
    let mut out = suites(&[
        ("toroidal", cfg("cyclic:2", 0, "mckay", 2, Half::int(2))),
        ("toroidal", cfg("cyclic:3", 0, "mckay", 2, Half::int(2))),
    ]);
    let elapsed = start.elapsed();
    out.pass &= elapsed < Duration::from_secs(120);
    out.summary += &format!(", {:.2} s", elapsed.as_secs_f64());
    out
}

fn criterion_schur() -> Outcome {
    let group = Arc::new(GroupData::build("cyclic:2").unwrap());
    let xf = trivial_xi(&group);
    let va = VertexAlgebra::new(&xf).unwrap();
    let width = va.width();
    let lambdas: Vec<PartFn> = (0..=3).flat_map(|k| enumerate_partfn(width, k)).collect();
    let mut alphas = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            alphas.push(LatticeVec(vec![a, b]));
        }
    }
    let mut pairs = 0;
    let mut orth_fail = 0;
    let mut literal = 0;
    let mut literal_fail = Vec::new();
    for alpha in &alphas {
        let states: Vec<FockVec> = lambdas.iter().map(|l| va.schur_state(l, alpha).unwrap()).collect();
        for (i, si) in states.iter().enumerate() {
            for (j, sj) in states.iter().enumerate() {
                pairs += 1;
                if fock_inner(si, sj, &xf) != Cyclo::from_int((i == j) as i64) {
                    orth_fail += 1;
                }
            }
            let l = &lambdas[i];
            let target = FockVec::from_sym(schur(l), alpha + &VertexAlgebra::omega(l));
            literal += 1;
            if *si != target {
                let neg = *si == target.scale(&Cyclo::from_int(-1));
                literal_fail.push(format!("λ = {l}, α = {alpha}: {}", if neg { "off by −1" } else { "differs" }));
            }
        }
    }
    let mut at_minus_omega_fail = 0;
    for l in &lambdas {
        let alpha = &LatticeVec::zero(width) - &VertexAlgebra::omega(l);
        let state = va.schur_state(l, &alpha).unwrap();
        if state != FockVec::from_sym(schur(l), LatticeVec::zero(width)) {
            at_minus_omega_fail += 1;
        }
    }
    let pass = orth_fail == 0 && at_minus_omega_fail == 0 && literal_fail.is_empty();
    let mut out = Outcome::new(
        pass,
        format!(
            "orthonormality {} of {pairs} pairs; ch identity at α = −ω {} of {}; ch identity over α ∈ [−1,1]^2 {} of {literal}",
            pairs - orth_fail,
            lambdas.len() - at_minus_omega_fail,
            lambdas.len(),
            literal - literal_fail.len()
        ),
    );
    if !literal_fail.is_empty() {
        out.notes.push(
            "the lattice cocycle contributes a sign ε(γ, β) per vertex operator; no cocycle with the \
             required commutator makes it trivial for every α"
                .into(),
        );
        out.notes.extend(literal_fail.into_iter().take(6));
    }
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 McKay correspondence", criterion_mckay),
        ("2 isometry", criterion_isometry),
        ("3 Heisenberg relations", criterion_heisenberg),
        ("4 generating functions", criterion_genseries),
        ("5 operator product expansion", criterion_ope),
        ("6 Clifford relations", criterion_clifford),
        ("7 character tables", criterion_chartables),
        ("8 toroidal relations", criterion_toroidal),
        ("9 Schur states", criterion_schur),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {} [{:.2} s]", out.summary, start.elapsed().as_secs_f64());
        for note in &out.notes {
            println!("    {note}");
        }
        failed += usize::from(!out.pass);
    }
    if failed == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
