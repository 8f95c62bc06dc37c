//! Vertex operators X(γ, z) = H_+(γ,z) E_-(γ,z) e^γ z^{∂_γ} on F_Γ, their
//! modes, the operator product identity, the Clifford relations and the
//! Schur states s_{λ,α}.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::fock::{apply_heis, exp_series, HeisOp, SymVec};
use crate::forms::XiForm;
use crate::lattice::{apply_lattice_shift, Cocycle, FockVec, Half, Lattice, LatticeVec};
use crate::partitions::{enumerate_partfn_upto, PartFn, Partition};
use crate::scalar::{Cyclo, Rational};

/// Mode n of X(γ, z), n ∈ Z + ⟨γ,γ⟩_ξ/2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMode {
    pub gamma: LatticeVec,
    pub n: Half,
}

/// One of the four exponential half-operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// exp(Σ a_{-n}(γ) z^n / n)
    HPlus,
    /// exp(−Σ a_{-n}(γ) z^n / n)
    EPlus,
    /// exp(Σ a_n(γ) z^{-n} / n)
    HMinus,
    /// exp(−Σ a_n(γ) z^{-n} / n)
    EMinus,
}

/// Order in which the per-label blocks of a Schur state act on e^α.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockOrder {
    /// The γ_0 block acts first (written rightmost).
    FirstLabelFirst,
    /// The γ_r block acts first, i.e. the product γ_0 … γ_r read left to right.
    LastLabelFirst,
}

/// Vertex operators for one weighted lattice and cocycle.
pub struct VertexAlgebra {
    xf: XiForm,
    lattice: Lattice,
    eps: Cocycle,
    h_cache: Mutex<HashMap<LatticeVec, Arc<Vec<SymVec>>>>,
}

impl VertexAlgebra {
    pub fn new(xf: &XiForm) -> Result<VertexAlgebra, Error> {
        let lattice = Lattice::from_xi(xf)?;
        let eps = Cocycle::standard(&lattice);
        Ok(VertexAlgebra { xf: xf.clone(), lattice, eps, h_cache: Mutex::new(HashMap::new()) })
    }

    pub fn xi_form(&self) -> &XiForm {
        &self.xf
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.eps
    }

    pub fn width(&self) -> usize {
        self.lattice.rank()
    }

    /// Whether n − ⟨γ,γ⟩/2 is an integer.
    pub fn mode_is_valid(&self, gamma: &LatticeVec, n: Half) -> bool {
        (n.twice() - self.lattice.norm(gamma)).rem_euclid(2) == 0
    }

    /// H_{-j}(γ)·1 = Σ_{λ⊢j} z_λ^{-1} a_{-λ}(γ) for j = 0..=upto.
    fn h_plus(&self, gamma: &LatticeVec, upto: u32) -> Arc<Vec<SymVec>> {
        if let Some(v) = self.h_cache.lock().expect("cache lock").get(gamma) {
            if v.len() > upto as usize {
                return v.clone();
            }
        }
        let width = self.width();
        let coords = gamma.coords_cyclo();
        let len = (upto as usize + 1).max(8);
        let mut s = vec![SymVec::zero(width)];
        for k in 1..len {
            let inv = Cyclo::from_rational(Rational::new(BigInt::one(), BigInt::from(k)));
            s.push(SymVec::generator(k as u32, &coords).scale(&inv));
        }
        let series = Arc::new(exp_series(&s, width, len - 1));
        self.h_cache.lock().expect("cache lock").insert(gamma.clone(), series.clone());
        series
    }

    /// exp(−Σ_n a_n(γ) z^{-n}/n) applied to a_{-ρ}; a_n(γ) are derivations, so
    /// each factor a_{-m}(γ_x) becomes a_{-m}(γ_x) − ⟨γ, γ_x⟩ z^{-m}. The
    /// result maps the exponent vector (one entry per γ in `gammas`) of
    /// z_t^{-k_t} to the coefficient.
    fn e_minus_monomial(&self, gammas: &[&LatticeVec], rho: &PartFn) -> BTreeMap<Vec<u32>, SymVec> {
        let width = self.width();
        let t = gammas.len();
        let mut cur: BTreeMap<Vec<u32>, SymVec> = BTreeMap::new();
        cur.insert(vec![0; t], SymVec::vacuum(width));
        for (x, l) in rho.entries().iter().enumerate() {
            let ex = LatticeVec::basis(width, x);
            let pairs: Vec<i64> = gammas.iter().map(|g| self.lattice.pair(g, &ex)).collect();
            for &m in l.parts() {
                let factor = SymVec::monomial(PartFn::single(width, x, Partition::new(vec![m])));
                let mut next: BTreeMap<Vec<u32>, SymVec> = BTreeMap::new();
                for (k, s) in &cur {
                    let e = next.entry(k.clone()).or_insert_with(|| SymVec::zero(width));
                    *e = e.add(&s.mul(&factor));
                    for (ti, &p) in pairs.iter().enumerate() {
                        if p == 0 {
                            continue;
                        }
                        let mut k2 = k.clone();
                        k2[ti] += m;
                        let e = next.entry(k2).or_insert_with(|| SymVec::zero(width));
                        *e = e.add(&s.scale(&Cyclo::from_int(-p)));
                    }
                }
                cur = next;
            }
        }
        cur.retain(|_, s| !s.is_zero());
        cur
    }

    /// X_n(γ)·v.
    pub fn vertex_component(&self, gamma: &LatticeVec, n: Half, v: &FockVec) -> Result<FockVec, Error> {
        if !self.mode_is_valid(gamma, n) {
            return Err(Error::Parse(format!("mode {n} is not in Z + ⟨γ,γ⟩/2 for γ = {gamma}")));
        }
        let width = self.width();
        let gg = self.lattice.norm(gamma);
        // z-exponent of the mode: −n − ⟨γ,γ⟩/2
        let t = (n.twice() + gg) / 2;
        let mut out = FockVec::zero(width);
        for (alpha, s) in v.sectors() {
            let sign = Cyclo::from_int(self.eps.eval(gamma, alpha));
            let shift = self.lattice.pair(gamma, alpha);
            let target = gamma + alpha;
            let mut acc = SymVec::zero(width);
            for (rho, c) in s.terms() {
                let parts = self.e_minus_monomial(&[gamma], rho);
                for (k, ek) in parts {
                    let j = k[0] as i64 - shift - t;
                    if j < 0 {
                        continue;
                    }
                    let h = self.h_plus(gamma, j as u32);
                    acc = acc.add(&h[j as usize].mul(&ek).scale(c));
                }
            }
            out.add_sector(target, &acc.scale(&sign));
        }
        self.assert_degree_shift(v, &out, n);
        Ok(out)
    }

    fn assert_degree_shift(&self, input: &FockVec, output: &FockVec, n: Half) {
        let allowed: Vec<Half> = input.degrees(&self.lattice).into_iter().map(|d| d - n).collect();
        for d in output.degrees(&self.lattice) {
            assert!(allowed.contains(&d), "mode {n} produced degree {d} outside {allowed:?}");
        }
    }

    /// X^+_n(γ) = X_n(γ)
    pub fn x_plus(&self, gamma: &LatticeVec, n: Half, v: &FockVec) -> Result<FockVec, Error> {
        self.vertex_component(gamma, n, v)
    }

    /// X^-_n(γ) = X_n(−γ)
    pub fn x_minus(&self, gamma: &LatticeVec, n: Half, v: &FockVec) -> Result<FockVec, Error> {
        self.vertex_component(&-gamma, n, v)
    }

    /// Coefficients of z^{±j}, j = 0..=order, of a half vertex operator
    /// applied to v, by nested Heisenberg actions.
    pub fn half_vertex(&self, gamma: &LatticeVec, side: Side, order: u32, v: &FockVec) -> Vec<FockVec> {
        let width = self.width();
        let coords = gamma.coords_cyclo();
        let creation = matches!(side, Side::HPlus | Side::EPlus);
        let signed = matches!(side, Side::EPlus | Side::EMinus);
        (0..=order)
            .map(|j| {
                let mut total = FockVec::zero(width);
                for lambda in Partition::all(j) {
                    let mut cur = v.clone();
                    for &p in lambda.parts() {
                        let mode = if creation { -(p as i64) } else { p as i64 };
                        let op = HeisOp::new(mode, coords.clone());
                        cur = cur.map_sym(|_, s| apply_heis(&op, s, &self.xf));
                    }
                    let mut c = Rational::one() / crate::partitions::z_lambda(&lambda);
                    if signed && lambda.len() % 2 == 1 {
                        c = -c;
                    }
                    total = total.add(&cur.scale(&Cyclo::from_rational(c)));
                }
                total
            })
            .collect()
    }

    /// X_n(γ)·v assembled from `half_vertex` outputs and the lattice
    /// operators; an independent route to `vertex_component`.
    pub fn vertex_component_reference(&self, gamma: &LatticeVec, n: Half, v: &FockVec) -> Result<FockVec, Error> {
        if !self.mode_is_valid(gamma, n) {
            return Err(Error::Parse(format!("mode {n} invalid for {gamma}")));
        }
        let width = self.width();
        let gg = self.lattice.norm(gamma);
        let t = (n.twice() + gg) / 2;
        let mut out = FockVec::zero(width);
        for (alpha, s) in v.sectors() {
            let shift = self.lattice.pair(gamma, alpha);
            let moved = apply_lattice_shift(gamma, &FockVec::from_sym(s.clone(), alpha.clone()), &self.eps);
            let max_deg = s.terms().map(|(r, _)| r.norm()).max().unwrap_or(0);
            let e_parts = self.half_vertex(gamma, Side::EMinus, max_deg, &moved);
            for (k, ek) in e_parts.iter().enumerate() {
                let j = k as i64 - shift - t;
                if j < 0 || ek.is_zero() {
                    continue;
                }
                let h = self.half_vertex(gamma, Side::HPlus, j as u32, ek);
                out = out.add(&h[j as usize]);
            }
        }
        Ok(out)
    }

    /// The z^a w^b coefficient of ε(α,β) :X(α,z)X(β,w): (z−w)^{⟨α,β⟩} on v,
    /// with (z−w)^N expanded as Σ_k C(N,k) z^{N−k} (−w)^k.
    pub fn normal_ordered_coefficient(
        &self,
        alpha: &LatticeVec,
        beta: &LatticeVec,
        a: i64,
        b: i64,
        v: &FockVec,
    ) -> FockVec {
        let width = self.width();
        let big_n = self.lattice.pair(alpha, beta);
        let e_ab = self.eps.eval(alpha, beta);
        let sum = alpha + beta;
        let mut out = FockVec::zero(width);
        for (gamma, s) in v.sectors() {
            let sign = e_ab * self.eps.eval(&sum, gamma);
            let za = self.lattice.pair(alpha, gamma);
            let wb = self.lattice.pair(beta, gamma);
            let mut acc = SymVec::zero(width);
            for (rho, c) in s.terms() {
                for (k, ek) in self.e_minus_monomial(&[alpha, beta], rho) {
                    let (k1, k2) = (k[0] as i64, k[1] as i64);
                    // j2 = b − kk − wb + k2 ≥ 0
                    let kmax = b - wb + k2;
                    let mut kk = 0;
                    while kk <= kmax {
                        let j1 = a - big_n + kk - za + k1;
                        let j2 = b - kk - wb + k2;
                        let binom = generalized_binomial(big_n, kk as u64);
                        if j1 >= 0 && !binom.is_zero() {
                            let h1 = self.h_plus(alpha, j1 as u32);
                            let h2 = self.h_plus(beta, j2 as u32);
                            let mut coef = binom;
                            if kk % 2 == 1 {
                                coef = -coef;
                            }
                            let term = h1[j1 as usize].mul(&h2[j2 as usize]).mul(&ek);
                            acc = acc.add(&term.scale(&(&Cyclo::from_rational(coef) * c)));
                        }
                        kk += 1;
                    }
                }
            }
            out.add_sector(&sum + gamma, &acc.scale(&Cyclo::from_int(sign)));
        }
        out
    }

    /// ω(λ) = Σ_γ l(λ(γ)) γ
    pub fn omega(lambda: &PartFn) -> LatticeVec {
        LatticeVec(lambda.entries().iter().map(|l| l.len() as i64).collect())
    }

    /// s_{λ,α} with the γ_0 block acting first.
    pub fn schur_state(&self, lambda: &PartFn, alpha: &LatticeVec) -> Result<FockVec, Error> {
        self.schur_state_ordered(lambda, alpha, BlockOrder::FirstLabelFirst)
    }

    /// s_{λ,α}: for each label γ with l = l(λ(γ)) and c = ⟨γ,α⟩ + 1/2, the
    /// string X_{−λ_1−(l−1)−c}(γ) ⋯ X_{−λ_l−c}(γ), rightmost acting first.
    pub fn schur_state_ordered(&self, lambda: &PartFn, alpha: &LatticeVec, order: BlockOrder) -> Result<FockVec, Error> {
        if !self.xf.is_trivial() {
            return Err(Error::NeedsTrivialXi);
        }
        let width = self.width();
        let labels: Vec<usize> = match order {
            BlockOrder::FirstLabelFirst => (0..width).collect(),
            BlockOrder::LastLabelFirst => (0..width).rev().collect(),
        };
        let mut state = FockVec::lattice_point(alpha.clone());
        for x in labels {
            let gamma = LatticeVec::basis(width, x);
            let parts = lambda.get(x).parts();
            let l = parts.len() as i64;
            let c2 = 2 * self.lattice.pair(&gamma, alpha) + 1;
            for k in (0..parts.len()).rev() {
                let shift = l - 1 - k as i64;
                let mode = Half::from_twice(-2 * (parts[k] as i64 + shift) - c2);
                state = self.vertex_component(&gamma, mode, &state)?;
            }
        }
        Ok(state)
    }

    /// The cocycle sign picked up by s_{λ,α}: the product of ε(γ, β) over the
    /// vertex operators X(γ) applied, β being the lattice part each acts on.
    pub fn schur_state_sign(&self, lambda: &PartFn, alpha: &LatticeVec, order: BlockOrder) -> i64 {
        let width = self.width();
        let labels: Vec<usize> = match order {
            BlockOrder::FirstLabelFirst => (0..width).collect(),
            BlockOrder::LastLabelFirst => (0..width).rev().collect(),
        };
        let mut beta = alpha.clone();
        let mut sign = 1;
        for x in labels {
            let gamma = LatticeVec::basis(width, x);
            for _ in 0..lambda.get(x).len() {
                sign *= self.eps.eval(&gamma, &beta);
                beta = &beta + &gamma;
            }
        }
        sign
    }

    /// Spanning test vectors a_{-ρ} ⊗ e^α with degree ≤ `max_degree`,
    /// |α_i| ≤ `coord_bound`, and labels restricted to `labels`.
    pub fn test_basis(&self, max_degree: Half, coord_bound: i64, labels: &[usize]) -> Vec<FockVec> {
        let width = self.width();
        let mut out = Vec::new();
        let mut alpha = vec![-coord_bound; width];
        loop {
            let a = LatticeVec(alpha.clone());
            let allowed = a.0.iter().enumerate().all(|(i, &x)| x == 0 || labels.contains(&i));
            let nn = self.lattice.norm(&a);
            if allowed && nn >= 0 && nn <= max_degree.twice() {
                let room = (max_degree.twice() - nn) / 2;
                for rho in enumerate_partfn_upto(width, room as u32) {
                    if rho.entries().iter().enumerate().all(|(i, l)| l.is_empty() || labels.contains(&i)) {
                        out.push(FockVec::basis(rho, a.clone()));
                    }
                }
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == width {
                    return out;
                }
                alpha[i] += 1;
                if alpha[i] <= coord_bound {
                    break;
                }
                alpha[i] = -coord_bound;
                i += 1;
            }
        }
    }
}

/// C(N, k) = N(N−1)⋯(N−k+1)/k! for any integer N.
pub fn generalized_binomial(n: i64, k: u64) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

#[derive(Clone, Debug, Default)]
pub struct OpeReport {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// Output degrees compared, relative to the input vector.
    pub window: (Half, Half),
    pub vectors: usize,
    pub coefficients: usize,
    pub nonzero_coefficients: usize,
    pub mismatches: Vec<String>,
}

impl OpeReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares X_m(α)X_n(β)v with the z^a w^b coefficient of the normal-ordered
/// side for every test vector v of degree d and every (a, b) whose
/// intermediate and final degrees lie in [−1, d + extra].
pub fn ope_check(
    va: &VertexAlgebra,
    alpha: &LatticeVec,
    beta: &LatticeVec,
    basis: &[FockVec],
    extra: i64,
) -> OpeReport {
    let lat = va.lattice();
    let aa = lat.norm(alpha);
    let bb = lat.norm(beta);
    let mut report = OpeReport {
        alpha: alpha.0.clone(),
        beta: beta.0.clone(),
        window: (Half::int(-1), Half::int(extra)),
        vectors: basis.len(),
        ..OpeReport::default()
    };
    for v in basis {
        let degs = v.degrees(lat);
        let d2 = degs[0].twice();
        let top = d2 + 2 * extra;
        // intermediate degree (twice): d2 + 2b + bb
        let b_lo = (-2 - d2 - bb).div_euclid(2);
        let b_hi = (top - d2 - bb).div_euclid(2);
        for b in b_lo..=b_hi {
            let n = Half::from_twice(-2 * b - bb);
            let mid = va.vertex_component(beta, n, v).expect("valid mode");
            let mid2 = d2 + 2 * b + bb;
            let a_lo = (-2 - mid2 - aa).div_euclid(2);
            let a_hi = (top - mid2 - aa).div_euclid(2);
            for a in a_lo..=a_hi {
                let m = Half::from_twice(-2 * a - aa);
                let lhs = va.vertex_component(alpha, m, &mid).expect("valid mode");
                let rhs = va.normal_ordered_coefficient(alpha, beta, a, b, v);
                report.coefficients += 1;
                if !lhs.is_zero() {
                    report.nonzero_coefficients += 1;
                }
                if lhs != rhs {
                    report.mismatches.push(format!("v = {v}, z^{a} w^{b}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    report
}

#[derive(Clone, Debug, Default)]
pub struct CliffordReport {
    pub instances: usize,
    pub failures: Vec<String>,
}

impl CliffordReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// {X^±_m(γ_i), X^±_n(γ_j)} = 0 and {X^+_m(γ_i), X^-_n(γ_j)} = δ_ij δ_{m,−n}
/// for half-integer |m|, |n| ≤ `mode_bound`, on every test vector.
pub fn clifford_check(va: &VertexAlgebra, mode_bound: Half, basis: &[FockVec]) -> Result<CliffordReport, Error> {
    if !va.xi_form().is_trivial() {
        return Err(Error::NeedsTrivialXi);
    }
    let width = va.width();
    let modes: Vec<Half> =
        (-mode_bound.twice()..=mode_bound.twice()).filter(|t| t.rem_euclid(2) == 1).map(Half::from_twice).collect();
    let mut report = CliffordReport::default();
    for i in 0..width {
        for j in 0..width {
            let gi = LatticeVec::basis(width, i);
            let gj = LatticeVec::basis(width, j);
            // (family, sign of first, sign of second)
            for (family, s1, s2) in [("++", 1, 1), ("--", -1, -1), ("+-", 1, -1)] {
                let g1 = gi.scaled(s1);
                let g2 = gj.scaled(s2);
                for &m in &modes {
                    for &n in &modes {
                        for v in basis {
                            let ab = va.vertex_component(&g1, m, &va.vertex_component(&g2, n, v)?)?;
                            let ba = va.vertex_component(&g2, n, &va.vertex_component(&g1, m, v)?)?;
                            let lhs = ab.add(&ba);
                            let rhs = if family == "+-" && i == j && m == -n { v.clone() } else { FockVec::zero(width) };
                            report.instances += 1;
                            if lhs != rhs {
                                report.failures.push(format!("{{X{family}}} i={i} j={j} m={m} n={n} on {v}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{natural_mckay_xi, trivial_xi};
    use crate::group::GroupData;

    fn va(spec: &str, mckay: bool) -> VertexAlgebra {
        let g = Arc::new(GroupData::build(spec).unwrap());
        let xf = if mckay { natural_mckay_xi(&g).unwrap() } else { trivial_xi(&g) };
        VertexAlgebra::new(&xf).unwrap()
    }

    #[test]
    fn creates_lattice_point_from_vacuum() {
        let v = va("cyclic:2", false);
        let g1 = LatticeVec::basis(2, 1);
        let out = v.vertex_component(&g1, Half::from_twice(-1), &FockVec::lattice_point(LatticeVec::zero(2))).unwrap();
        assert_eq!(out, FockVec::lattice_point(g1));
    }

    #[test]
    fn two_routes_agree() {
        let v = va("cyclic:2", true);
        let basis = v.test_basis(Half::int(2), 1, &[0, 1]);
        for g in [LatticeVec(vec![1, 0]), LatticeVec(vec![0, -1]), LatticeVec(vec![1, 1])] {
            let nn = v.lattice().norm(&g);
            for t in -6..=6 {
                let n = Half::from_twice(2 * t - nn);
                for x in &basis {
                    assert_eq!(
                        v.vertex_component(&g, n, x).unwrap(),
                        v.vertex_component_reference(&g, n, x).unwrap(),
                        "γ = {g}, n = {n}, v = {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomial() {
        assert_eq!(generalized_binomial(-2, 3), Rational::from_integer((-4).into()));
        assert_eq!(generalized_binomial(2, 3), Rational::zero());
    }
}
