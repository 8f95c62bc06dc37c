//! Runnable verification suites with pass/fail counts and timing.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartable::{chartable, Route};
use crate::error::Error;
use crate::fock::{apply_heis, ch, inner_product, schur, HeisOp, SymVec};
use crate::forms::{xi_from_selector, ClassFn, XiForm};
use crate::group::GroupData;
use crate::lattice::{fock_inner, FockVec, Half, LatticeVec};
use crate::mckay::{basic_rep_check, build_affine, toroidal_relation_check};
use crate::partitions::{enumerate_partfn, enumerate_partfn_upto, PartFn};
use crate::scalar::Cyclo;
use crate::vertex::{clifford_check, ope_check, BlockOrder, VertexAlgebra};
use crate::wreath::{epsilon_n, eta_n, sigma_rho, types, weighted_pairing_n, WreathClassFn};

pub const SUITES: [&str; 9] =
    ["isometry", "heisenberg", "genseries", "ope", "clifford", "chartable", "toroidal", "schur", "mckay"];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub group: String,
    pub n: u32,
    pub xi: String,
    pub degree: Half,
    pub modes: Half,
    /// Drives the random linear combinations used alongside basis vectors.
    pub seed: u64,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub suite: String,
    pub group: String,
    pub xi: String,
    pub checks: usize,
    pub failures: usize,
    /// Parameters and the first few failures.
    pub details: Vec<String>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.details.len() < 25 {
                self.details.push(what());
            }
        }
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let group = Arc::new(GroupData::build(&cfg.group)?);
    // Some suites fix the weight regardless of the configured selector.
    let xi = match name {
        "clifford" | "chartable" | "schur" | "genseries" => "trivial",
        "toroidal" | "mckay" => "mckay",
        _ => cfg.xi.as_str(),
    };
    let mut report = SuiteReport { suite: name.into(), group: cfg.group.clone(), xi: xi.into(), ..Default::default() };
    match name {
        "isometry" => isometry(&xi_from_selector(&group, &cfg.xi)?, cfg.n, &mut report),
        "heisenberg" => heisenberg(&xi_from_selector(&group, &cfg.xi)?, cfg.degree, cfg.modes, cfg.seed, &mut report),
        "genseries" => genseries(&group, cfg.n, &mut report),
        "ope" => ope(&xi_from_selector(&group, &cfg.xi)?, cfg.degree, &mut report)?,
        "clifford" => clifford(&group, cfg.degree, cfg.modes, &mut report)?,
        "chartable" => chartable_suite(&group, cfg.n, &mut report)?,
        "toroidal" => {
            let ad = build_affine(&cfg.group)?;
            let rep = toroidal_relation_check(&ad, cfg.modes.twice() / 2, degree_floor(cfg.degree))?;
            report.checks = rep.instances();
            report.failures = rep.failure_count();
            report.details.push(format!("{} test vectors", rep.vectors));
            for (family, (n, f)) in &rep.families {
                report.details.push(format!("{family}: {n} instances, {f} failures"));
            }
            report.details.extend(rep.failures);
        }
        "schur" => schur_suite(&group, cfg.n, &mut report)?,
        "mckay" => {
            let ad = build_affine(&cfg.group)?;
            report.details.push(format!("{}; {} roots; δ = {}", ad.label, ad.roots.len(), ad.delta));
            let rep = basic_rep_check(&ad, degree_floor(cfg.degree), cfg.modes.twice() / 2)?;
            report.checks = rep.relations.instances() + 1;
            report.failures = rep.relations.failure_count() + usize::from(rep.direct != rep.product);
            report.details.push(format!("graded dimensions {:?}, product formula {:?}", rep.direct, rep.product));
            report.details.extend(rep.relations.failures);
        }
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn degree_floor(d: Half) -> u32 {
    d.twice().max(0) as u32 / 2
}

/// ⟨f,g⟩_{ξ,Γ_k} = ⟨ch f, ch g⟩_ξ over σ_ρ, η_k(γ_i), ε_k(γ_i) for k ≤ n.
fn isometry(xf: &XiForm, n: u32, report: &mut SuiteReport) {
    let group = xf.group();
    for k in 0..=n {
        let mut family: Vec<(String, WreathClassFn)> =
            types(group, k).iter().map(|r| (format!("σ[{r}]"), sigma_rho(group, r))).collect();
        for i in 0..group.num_classes() {
            let g = ClassFn::irreducible(group, i);
            family.push((format!("η_{k}(γ_{i})"), eta_n(&g, k)));
            family.push((format!("ε_{k}(γ_{i})"), epsilon_n(&g, k)));
        }
        let images: Vec<SymVec> = family.iter().map(|(_, f)| ch(f)).collect();
        for (a, (na, f)) in family.iter().enumerate() {
            for (b, (nb, g)) in family.iter().enumerate() {
                let lhs = weighted_pairing_n(xf, f, g).expect("same n");
                let rhs = inner_product(&images[a], &images[b], xf);
                report.record(lhs == rhs, || format!("⟨{na}, {nb}⟩: {lhs} vs {rhs}"));
            }
        }
    }
}

/// [a_m(γ_i), a_n(γ_j)] = m δ_{m,−n} a_ij and
/// [a_m(c'^{-1}), a_n(c)] = m δ_{m,−n} δ_{c'c} ζ_c ξ(c) on monomials.
fn heisenberg(xf: &XiForm, degree: Half, modes: Half, seed: u64, report: &mut SuiteReport) {
    let group = xf.group();
    let width = group.num_classes();
    let bound = modes.twice() / 2;
    let mut monomials: Vec<SymVec> =
        enumerate_partfn_upto(width, degree_floor(degree)).into_iter().map(SymVec::monomial).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mixed: Vec<SymVec> = (0..8)
        .map(|_| {
            monomials.iter().fold(SymVec::zero(width), |acc, m| acc.add(&m.scale(&Cyclo::from_int(rng.gen_range(-3..=3)))))
        })
        .collect();
    monomials.extend(mixed);
    let check = |x: &HeisOp, y: &HeisOp, scalar: Cyclo, label: &str, report: &mut SuiteReport| {
        for v in &monomials {
            let lhs = apply_heis(x, &apply_heis(y, v, xf), xf).sub(&apply_heis(y, &apply_heis(x, v, xf), xf));
            let rhs = v.scale(&scalar);
            report.record(lhs == rhs, || format!("{label} on {v}"));
        }
    };
    for m in -bound..=bound {
        for n in -bound..=bound {
            if m == 0 || n == 0 {
                continue;
            }
            for i in 0..width {
                for j in 0..width {
                    let scalar = if m == -n { xf.entry(i, j) * &Cyclo::from_int(m) } else { Cyclo::zero() };
                    let x = HeisOp::basis(m, width, i);
                    let y = HeisOp::basis(n, width, j);
                    check(&x, &y, scalar, &format!("[a_{m}(γ_{i}), a_{n}(γ_{j})]"), report);
                }
            }
            for cp in 0..width {
                for c in 0..width {
                    let scalar = if m == -n && cp == c {
                        let z = Cyclo::from_int(group.zeta()[c] as i64);
                        &(&z * xf.xi().at(c)) * &Cyclo::from_int(m)
                    } else {
                        Cyclo::zero()
                    };
                    let x = HeisOp::class(m, group, group.inv_class(cp));
                    let y = HeisOp::class(n, group, c);
                    check(&x, &y, scalar, &format!("[a_{m}(c{cp}⁻¹), a_{n}(c{c})]"), report);
                }
            }
        }
    }
}

/// The exponential generating functions for each irreducible and each
/// difference γ_i − γ_j, up to z^n.
fn genseries(group: &Arc<GroupData>, n: u32, report: &mut SuiteReport) {
    let width = group.num_classes();
    let mut gammas = Vec::new();
    for i in 0..width {
        gammas.push((format!("γ_{i}"), ClassFn::irreducible(group, i)));
        for j in 0..width {
            if i != j {
                gammas.push((
                    format!("γ_{i} − γ_{j}"),
                    ClassFn::irreducible(group, i).sub(&ClassFn::irreducible(group, j)),
                ));
            }
        }
    }
    for (label, g) in gammas {
        let rep = crate::fock::gen_series_check(&g, n);
        for (k, ok) in rep.eta.iter().enumerate() {
            report.record(*ok, || format!("η_{k}({label})"));
        }
        for (k, ok) in rep.epsilon.iter().enumerate() {
            report.record(*ok, || format!("ε_{k}({label})"));
        }
        for (k, ok) in rep.substitution.iter().enumerate() {
            report.record(*ok, || format!("ε_{k}({label}) = (−1)^{k} η_{k}(−{label})"));
        }
    }
}

fn ope(xf: &XiForm, degree: Half, report: &mut SuiteReport) -> Result<(), Error> {
    let va = VertexAlgebra::new(xf)?;
    let width = va.width();
    let labels: Vec<usize> = (0..width).collect();
    let basis = va.test_basis(degree, 2, &labels);
    let mut roots = Vec::new();
    for i in 0..width {
        roots.push(LatticeVec::basis(width, i));
        roots.push(LatticeVec::basis(width, i).scaled(-1));
    }
    report.details.push(format!("{} test vectors; output degrees in [−1, d + 1]", basis.len()));
    for a in &roots {
        for b in &roots {
            let rep = ope_check(&va, a, b, &basis, 1);
            report.checks += rep.coefficients;
            report.failures += rep.mismatches.len();
            report.details.extend(rep.mismatches.into_iter().take(3));
        }
    }
    Ok(())
}

fn clifford(group: &Arc<GroupData>, degree: Half, modes: Half, report: &mut SuiteReport) -> Result<(), Error> {
    let va = VertexAlgebra::new(&xi_from_selector(group, "trivial")?)?;
    let labels: Vec<usize> = (0..va.width()).collect();
    let basis = va.test_basis(degree, 2, &labels);
    let rep = clifford_check(&va, modes, &basis)?;
    report.checks = rep.instances;
    report.failures = rep.failures.len();
    report.details.push(format!("{} test vectors", basis.len()));
    report.details.extend(rep.failures.into_iter().take(25));
    Ok(())
}

fn chartable_suite(group: &Arc<GroupData>, n: u32, report: &mut SuiteReport) -> Result<(), Error> {
    for k in 1..=n {
        let t = chartable(group, k, Route::Vertex)?;
        let f = chartable(group, k, Route::Fock)?;
        report.record(t.values == f.values, || format!("n = {k}: vertex and Fock routes differ"));
        let orth = t.orthogonality();
        report.record(orth.rows, || format!("n = {k}: row orthogonality"));
        report.record(orth.columns, || format!("n = {k}: column orthogonality"));
    }
    Ok(())
}

/// ⟨s_{λ,α}, s_{μ,α}⟩ = δ_{λμ} and ch(s_{λ,α}) = ±s_λ e^{α+ω(λ)} with the
/// cocycle sign, for ‖λ‖, ‖μ‖ ≤ n and α in the box [−1, 1]^r plus −ω(λ).
fn schur_suite(group: &Arc<GroupData>, n: u32, report: &mut SuiteReport) -> Result<(), Error> {
    let xf = xi_from_selector(group, "trivial")?;
    let va = VertexAlgebra::new(&xf)?;
    let width = va.width();
    let lambdas: Vec<PartFn> = (0..=n).flat_map(|k| enumerate_partfn(width, k)).collect();
    let mut exact = 0;
    let mut cases = 0;
    for alpha in box_points(width, 1) {
        let states: Vec<FockVec> =
            lambdas.iter().map(|l| va.schur_state(l, &alpha)).collect::<Result<_, _>>()?;
        for (a, sa) in states.iter().enumerate() {
            for (b, sb) in states.iter().enumerate() {
                let p = fock_inner(sa, sb, &xf);
                report.record(p == Cyclo::from_int((a == b) as i64), || {
                    format!("⟨s_({}), s_({})⟩ at α = {alpha}: {p}", lambdas[a], lambdas[b])
                });
            }
            let l = &lambdas[a];
            let target = FockVec::from_sym(schur(l), &alpha + &VertexAlgebra::omega(l));
            let sign = va.schur_state_sign(l, &alpha, BlockOrder::FirstLabelFirst);
            report.record(*sa == target.scale(&Cyclo::from_int(sign)), || format!("ch(s_({l}, {alpha}))"));
            cases += 1;
            exact += usize::from(*sa == target);
        }
    }
    for l in &lambdas {
        let alpha = &LatticeVec::zero(width) - &VertexAlgebra::omega(l);
        let state = va.schur_state(l, &alpha)?;
        let target = FockVec::from_sym(schur(l), LatticeVec::zero(width));
        report.record(state == target, || format!("ch(s_({l}, −ω)) ≠ s_λ"));
    }
    report.details.push(format!("sign-free equality held in {exact} of {cases} box cases"));
    Ok(())
}

fn box_points(width: usize, bound: i64) -> Vec<LatticeVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..width {
        out = out.into_iter().flat_map(|p| (-bound..=bound).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().map(LatticeVec).collect()
}
