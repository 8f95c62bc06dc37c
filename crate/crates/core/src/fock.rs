//! The symmetric algebra S_Γ in the power-sum basis a_{-ρ}, the Heisenberg
//! action, the bilinear form, Schur elements and the characteristic map.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::forms::{ClassFn, XiForm};
use crate::group::GroupData;
use crate::partitions::{PartFn, Partition};
use crate::scalar::{Cyclo, Rational};
use crate::symfun::schur_in_power_sums;
use crate::wreath::{centralizer_order, epsilon_n, eta_n, WreathClassFn};

/// A finite combination of monomials ∏_x ∏_k a_{-k}(x) indexed by a
/// partition-valued function on the labels x. Labels are irreducibles unless
/// stated otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct SymVec {
    width: usize,
    terms: BTreeMap<PartFn, Cyclo>,
}

impl SymVec {
    pub fn zero(width: usize) -> SymVec {
        SymVec { width, terms: BTreeMap::new() }
    }

    pub fn vacuum(width: usize) -> SymVec {
        SymVec::monomial(PartFn::empty(width))
    }

    pub fn monomial(rho: PartFn) -> SymVec {
        let mut v = SymVec::zero(rho.width());
        v.terms.insert(rho, Cyclo::one());
        v
    }

    /// a_{-n}(γ) for γ = Σ coords[i] γ_i.
    pub fn generator(n: u32, coords: &[Cyclo]) -> SymVec {
        let width = coords.len();
        let mut v = SymVec::zero(width);
        for (i, c) in coords.iter().enumerate() {
            v.add_term(PartFn::single(width, i, Partition::new(vec![n])), c.clone());
        }
        v
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartFn, &Cyclo)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, rho: &PartFn) -> Cyclo {
        self.terms.get(rho).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn add_term(&mut self, rho: PartFn, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(rho) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymVec) -> SymVec {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymVec) -> SymVec {
        self.add(&other.scale(&Cyclo::from_int(-1)))
    }

    pub fn scale(&self, s: &Cyclo) -> SymVec {
        let mut out = SymVec::zero(self.width);
        if s.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * s);
        }
        out
    }

    pub fn mul(&self, other: &SymVec) -> SymVec {
        let mut out = SymVec::zero(self.width);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    /// Part of degree exactly `d`.
    pub fn homogeneous(&self, d: u32) -> SymVec {
        SymVec {
            width: self.width,
            terms: self.terms.iter().filter(|(k, _)| k.norm() == d).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Replaces each generator a_{-k}(x) by Σ_y m[x][y] a_{-k}(y).
    pub fn substitute(&self, m: &[Vec<Cyclo>]) -> SymVec {
        let new_width = m.first().map_or(0, |r| r.len());
        let mut cache: HashMap<(usize, u32), SymVec> = HashMap::new();
        let mut out = SymVec::zero(new_width);
        for (rho, c) in &self.terms {
            let mut prod = SymVec::vacuum(new_width).scale(c);
            for (x, l) in rho.entries().iter().enumerate() {
                for &k in l.parts() {
                    let g = cache.entry((x, k)).or_insert_with(|| SymVec::generator(k, &m[x]));
                    prod = prod.mul(g);
                }
            }
            out = out.add(&prod);
        }
        out
    }
}

impl fmt::Display for SymVec {
    /// `(c) a[-2](g1)^1 a[-1](g0)^3 + …`; the vacuum monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (rho, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            write!(f, " {}", monomial_string(rho))?;
        }
        Ok(())
    }
}

pub fn monomial_string(rho: &PartFn) -> String {
    let mut factors = Vec::new();
    for (x, l) in rho.entries().iter().enumerate() {
        for &(k, m) in l.multiplicities().iter().rev() {
            factors.push(format!("a[-{k}](g{x})^{m}"));
        }
    }
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join(" ")
    }
}

/// a_m(γ) with γ = Σ coords[i] γ_i.
#[derive(Clone, Debug)]
pub struct HeisOp {
    pub mode: i64,
    pub coords: Vec<Cyclo>,
}

impl HeisOp {
    pub fn new(mode: i64, coords: Vec<Cyclo>) -> HeisOp {
        HeisOp { mode, coords }
    }

    /// a_m(γ_i)
    pub fn basis(mode: i64, width: usize, i: usize) -> HeisOp {
        let mut coords = vec![Cyclo::zero(); width];
        coords[i] = Cyclo::one();
        HeisOp { mode, coords }
    }

    /// a_m(γ) for a class function γ.
    pub fn from_class_fn(mode: i64, gamma: &ClassFn) -> HeisOp {
        HeisOp { mode, coords: gamma.irreducible_coords() }
    }

    /// a_m(c) = Σ_γ γ(c^{-1}) a_m(γ)
    pub fn class(mode: i64, group: &GroupData, c: usize) -> HeisOp {
        let ci = group.inv_class(c);
        HeisOp { mode, coords: group.char_table().iter().map(|row| row[ci].clone()).collect() }
    }
}

/// Class-basis expansion of a_m(γ_i): a_m(γ) = Σ_c ζ_c^{-1} γ(c) a_m(c).
pub fn gamma_in_class_basis(group: &GroupData, i: usize) -> Vec<Cyclo> {
    (0..group.num_classes())
        .map(|c| group.char_table()[i][c].scale(&Rational::new(1.into(), (group.zeta()[c] as i64).into())))
        .collect()
}

/// ⟨γ, γ_j⟩_ξ for γ given by irreducible coordinates.
fn pair_with_basis(xf: &XiForm, coords: &[Cyclo], j: usize) -> Cyclo {
    coords.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| s * xf.entry(i, j)).sum()
}

/// Negative modes multiply; positive modes act as derivations with
/// a_m(γ)·a_{-m}(γ') = m ⟨γ, γ'⟩_ξ; a_0 acts as 0.
pub fn apply_heis(op: &HeisOp, v: &SymVec, xf: &XiForm) -> SymVec {
    let m = op.mode;
    if m == 0 {
        return SymVec::zero(v.width);
    }
    if m < 0 {
        return SymVec::generator((-m) as u32, &op.coords).mul(v);
    }
    let k = m as u32;
    let pairs: Vec<Cyclo> = (0..v.width).map(|j| pair_with_basis(xf, &op.coords, j)).collect();
    let mut out = SymVec::zero(v.width);
    for (rho, c) in &v.terms {
        for (j, l) in rho.entries().iter().enumerate() {
            let mult = l.mult(k);
            if mult == 0 || pairs[j].is_zero() {
                continue;
            }
            let rest = rho.without_part(j, k).expect("part present");
            let f = Cyclo::from_int(m * mult as i64);
            out.add_term(rest, &(&f * &pairs[j]) * c);
        }
    }
    out
}

fn permanent(m: &[Vec<Cyclo>]) -> Cyclo {
    let k = m.len();
    if k == 0 {
        return Cyclo::one();
    }
    // dp over subsets of columns used by the first rows
    let mut dp: HashMap<u32, Cyclo> = HashMap::new();
    dp.insert(0, Cyclo::one());
    for row in m {
        let mut next: HashMap<u32, Cyclo> = HashMap::new();
        for (mask, val) in &dp {
            for (j, x) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || x.is_zero() {
                    continue;
                }
                let e = next.entry(mask | (1 << j)).or_insert_with(Cyclo::zero);
                *e += &(val * x);
            }
        }
        dp = next;
    }
    dp.remove(&((1u32 << k) - 1)).unwrap_or_else(Cyclo::zero)
}

/// ⟨a_{-ρ}, a_{-σ}⟩_ξ: for each mode n the factors are matched, each matched
/// pair contributing n·a_ij.
pub fn monomial_pairing(rho: &PartFn, sigma: &PartFn, xf: &XiForm) -> Cyclo {
    if rho.norm() != sigma.norm() {
        return Cyclo::zero();
    }
    let mut modes: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (x, l) in rho.entries().iter().enumerate() {
        for &p in l.parts() {
            modes.entry(p).or_default().0.push(x);
        }
    }
    for (x, l) in sigma.entries().iter().enumerate() {
        for &p in l.parts() {
            modes.entry(p).or_default().1.push(x);
        }
    }
    let mut total = Cyclo::one();
    for (n, (left, right)) in modes {
        if left.len() != right.len() {
            return Cyclo::zero();
        }
        let sub: Vec<Vec<Cyclo>> =
            left.iter().map(|&i| right.iter().map(|&j| xf.entry(i, j).clone()).collect()).collect();
        let p = permanent(&sub);
        if p.is_zero() {
            return p;
        }
        total = &(&total * &p) * &Cyclo::from_int((n as i64).pow(left.len() as u32));
    }
    total
}

/// The bilinear form ⟨u, v⟩_ξ on S_Γ.
pub fn inner_product(u: &SymVec, v: &SymVec, xf: &XiForm) -> Cyclo {
    let mut s = Cyclo::zero();
    for (a, x) in &u.terms {
        for (b, y) in &v.terms {
            if a.norm() != b.norm() {
                continue;
            }
            let p = monomial_pairing(a, b, xf);
            if !p.is_zero() {
                s += &(&(x * y) * &p);
            }
        }
    }
    s
}

/// Same form computed by repeatedly applying annihilators to `v`; an
/// independent route used to cross-check `inner_product`.
pub fn inner_product_by_annihilation(u: &SymVec, v: &SymVec, xf: &XiForm) -> Cyclo {
    let mut s = Cyclo::zero();
    for (rho, c) in &u.terms {
        // ⟨a_{-k}(x) w, v⟩ = ⟨w, a_k(x) v⟩
        let mut cur = v.clone();
        for (x, l) in rho.entries().iter().enumerate() {
            for &k in l.parts() {
                cur = apply_heis(&HeisOp::basis(k as i64, u.width, x), &cur, xf);
            }
        }
        s += &(c * &cur.coeff(&PartFn::empty(u.width)));
    }
    s
}

/// The class-basis monomial a'_{-ρ} = ∏_c a_{-ρ(c)}(c), in the irreducible basis.
pub fn class_monomial(group: &GroupData, rho: &PartFn) -> SymVec {
    let width = group.num_classes();
    let m: Vec<Vec<Cyclo>> = (0..width)
        .map(|c| {
            let ci = group.inv_class(c);
            group.char_table().iter().map(|row| row[ci].clone()).collect()
        })
        .collect();
    SymVec::monomial(rho.clone()).substitute(&m)
}

/// Rewrites a vector from the irreducible basis into the class basis.
pub fn to_class_basis(group: &GroupData, v: &SymVec) -> SymVec {
    let m: Vec<Vec<Cyclo>> = (0..group.num_classes()).map(|i| gamma_in_class_basis(group, i)).collect();
    v.substitute(&m)
}

/// ch(f) = Σ_ρ Z_ρ^{-1} f_ρ a'_{-ρ}
pub fn ch(f: &WreathClassFn) -> SymVec {
    let group = f.group();
    let width = group.num_classes();
    let mut class_side = SymVec::zero(width);
    for (rho, v) in f.support() {
        let z = centralizer_order(group, rho);
        class_side.add_term(rho.clone(), v.scale(&(Rational::from_integer(1.into()) / z)));
    }
    let m: Vec<Vec<Cyclo>> = (0..width)
        .map(|c| {
            let ci = group.inv_class(c);
            group.char_table().iter().map(|row| row[ci].clone()).collect()
        })
        .collect();
    class_side.substitute(&m)
}

/// The class function whose image under ch is the degree-n part of `v`.
pub fn ch_inverse(group: &Arc<GroupData>, v: &SymVec, n: u32) -> WreathClassFn {
    let class_side = to_class_basis(group, &v.homogeneous(n));
    let mut f = WreathClassFn::zero(group, n);
    for (rho, c) in class_side.terms() {
        f.set(rho.clone(), c.scale(&centralizer_order(group, rho)));
    }
    f
}

/// s_λ = ∏_γ s_{λ(γ)}(γ), with each factor expanded in power sums.
pub fn schur(lambda: &PartFn) -> SymVec {
    let width = lambda.width();
    let mut out = SymVec::vacuum(width);
    for (x, l) in lambda.entries().iter().enumerate() {
        let mut factor = SymVec::zero(width);
        for (nu, c) in schur_in_power_sums(l) {
            factor.add_term(PartFn::single(width, x, nu), Cyclo::from_rational(c));
        }
        out = out.mul(&factor);
    }
    out
}

/// Coefficients of z^0..z^N in exp(Σ_k s_k z^k), via n E_n = Σ_k k s_k E_{n-k}.
pub fn exp_series(s: &[SymVec], width: usize, big_n: usize) -> Vec<SymVec> {
    let mut e = vec![SymVec::vacuum(width)];
    for n in 1..=big_n {
        let mut acc = SymVec::zero(width);
        for k in 1..=n {
            if let Some(sk) = s.get(k) {
                acc = acc.add(&sk.mul(&e[n - k]).scale(&Cyclo::from_int(k as i64)));
            }
        }
        e.push(acc.scale(&Cyclo::from_rational(Rational::new(1.into(), BigInt::from(n)))));
    }
    e
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    /// Per power z^n: ch(η_n(γ)) against the exponential.
    pub eta: Vec<bool>,
    /// Per power z^n: ch(ε_n(γ)) against the signed exponential.
    pub epsilon: Vec<bool>,
    /// Per power: ε_n(γ) = (−1)^n η_n(−γ).
    pub substitution: Vec<bool>,
}

impl SeriesReport {
    pub fn pass(&self) -> bool {
        self.eta.iter().chain(&self.epsilon).chain(&self.substitution).all(|&b| b)
    }
}

/// Checks Σ ch(η_n(γ)) z^n = exp(Σ a_{-n}(γ) z^n/n) and
/// Σ ch(ε_n(γ)) z^n = exp(Σ (−1)^{n−1} a_{-n}(γ) z^n/n) up to z^N.
pub fn gen_series_check(gamma: &ClassFn, big_n: u32) -> SeriesReport {
    let group = gamma.group();
    let width = group.num_classes();
    let coords = gamma.irreducible_coords();
    let n = big_n as usize;
    let mut s_eta = vec![SymVec::zero(width)];
    let mut s_eps = vec![SymVec::zero(width)];
    for k in 1..=n {
        let g = SymVec::generator(k as u32, &coords);
        let inv = Cyclo::from_rational(Rational::new(1.into(), BigInt::from(k)));
        s_eta.push(g.scale(&inv));
        let sign = if k % 2 == 1 { Cyclo::one() } else { Cyclo::from_int(-1) };
        s_eps.push(g.scale(&(&inv * &sign)));
    }
    let e_eta = exp_series(&s_eta, width, n);
    let e_eps = exp_series(&s_eps, width, n);
    let neg = gamma.scale(&Cyclo::from_int(-1));
    let mut report = SeriesReport { eta: Vec::new(), epsilon: Vec::new(), substitution: Vec::new() };
    for k in 0..=big_n {
        report.eta.push(ch(&eta_n(gamma, k)) == e_eta[k as usize]);
        report.epsilon.push(ch(&epsilon_n(gamma, k)) == e_eps[k as usize]);
        let sign = Cyclo::from_int(if k % 2 == 0 { 1 } else { -1 });
        report.substitution.push(epsilon_n(gamma, k) == eta_n(&neg, k).scale(&sign));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{natural_mckay_xi, trivial_xi};
    use crate::wreath::{sigma_gamma, sigma_rho, types};

    fn grp(s: &str) -> Arc<GroupData> {
        Arc::new(GroupData::build(s).unwrap())
    }

    #[test]
    fn heisenberg_single_contraction() {
        let g = grp("cyclic:2");
        let xf = natural_mckay_xi(&g).unwrap();
        let v = SymVec::generator(1, &[Cyclo::zero(), Cyclo::one()]);
        let out = apply_heis(&HeisOp::basis(1, 2, 0), &v, &xf);
        assert_eq!(out, SymVec::vacuum(2).scale(&Cyclo::from_int(-2)));
        let sq = v.mul(&v);
        assert!(apply_heis(&HeisOp::basis(2, 2, 0), &sq, &xf).is_zero());
    }

    #[test]
    fn schur_two_row() {
        let s = schur(&PartFn::single(1, 0, Partition::new(vec![2])));
        let half = Cyclo::from_rational(crate::scalar::rat(1, 2));
        assert_eq!(s.coeff(&PartFn::single(1, 0, Partition::new(vec![1, 1]))), half);
        assert_eq!(s.coeff(&PartFn::single(1, 0, Partition::new(vec![2]))), half);
    }

    #[test]
    fn ch_of_sigma() {
        let g = grp("cyclic:3");
        for rho in types(&g, 2) {
            assert_eq!(ch(&sigma_rho(&g, &rho)), class_monomial(&g, &rho));
        }
        let gamma = ClassFn::irreducible(&g, 1);
        let coords = gamma.irreducible_coords();
        assert_eq!(ch(&sigma_gamma(&gamma, 3)), SymVec::generator(3, &coords));
    }

    #[test]
    fn ch_round_trip() {
        let g = grp("cyclic:2");
        for rho in types(&g, 3) {
            let f = sigma_rho(&g, &rho);
            assert_eq!(ch_inverse(&g, &ch(&f), 3), f);
        }
    }

    #[test]
    fn pairing_routes_agree() {
        let g = grp("cyclic:2");
        let xf = natural_mckay_xi(&g).unwrap();
        let basis = crate::partitions::enumerate_partfn_upto(2, 3);
        for a in &basis {
            for b in &basis {
                let u = SymVec::monomial(a.clone());
                let v = SymVec::monomial(b.clone());
                assert_eq!(inner_product(&u, &v, &xf), inner_product_by_annihilation(&u, &v, &xf));
            }
        }
        let t = trivial_xi(&g);
        assert_eq!(inner_product(&SymVec::vacuum(2), &SymVec::vacuum(2), &t), Cyclo::one());
    }
}
