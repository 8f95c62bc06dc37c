//! The lattice R_Z(Γ) with its 2-cocycle, half-integers for modes and
//! degrees, and vectors of F_Γ = S_Γ ⊗ C[R_Z(Γ)].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::fock::{apply_heis, inner_product, HeisOp, SymVec};
use crate::forms::XiForm;
use crate::partitions::PartFn;
use crate::scalar::Cyclo;

/// A number in ½Z, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Half(i64);

impl Half {
    pub fn from_twice(t: i64) -> Half {
        Half(t)
    }

    pub fn int(k: i64) -> Half {
        Half(2 * k)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl std::str::FromStr for Half {
    type Err = Error;
    fn from_str(s: &str) -> Result<Half, Error> {
        let bad = || Error::Parse(format!("bad half-integer {s:?}"));
        match s.trim().split_once('/') {
            Some((p, "2")) => p.trim().parse::<i64>().map(Half).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.trim().parse::<i64>().map(Half::int).map_err(|_| bad()),
        }
    }
}

/// Integer coordinates in the basis γ_0..γ_r.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVec(pub Vec<i64>);

impl LatticeVec {
    pub fn zero(width: usize) -> LatticeVec {
        LatticeVec(vec![0; width])
    }

    pub fn basis(width: usize, i: usize) -> LatticeVec {
        let mut v = vec![0; width];
        v[i] = 1;
        LatticeVec(v)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, k: i64) -> LatticeVec {
        LatticeVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn coords_cyclo(&self) -> Vec<Cyclo> {
        self.0.iter().map(|&x| Cyclo::from_int(x)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl Add for &LatticeVec {
    type Output = LatticeVec;
    fn add(self, o: &LatticeVec) -> LatticeVec {
        LatticeVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVec {
    type Output = LatticeVec;
    fn sub(self, o: &LatticeVec) -> LatticeVec {
        LatticeVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        self.scaled(-1)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for LatticeVec {
    type Err = Error;

    /// Parses "(1,0,-1)"; the parentheses are optional.
    fn from_str(s: &str) -> Result<LatticeVec, Error> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        body.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(LatticeVec)
            .map_err(|_| Error::Parse(format!("bad lattice vector {s:?}")))
    }
}

/// The integral lattice (Z^{r+1}, A).
#[derive(Clone, Debug)]
pub struct Lattice {
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Lattice {
        Lattice { gram }
    }

    pub fn from_xi(xf: &XiForm) -> Result<Lattice, Error> {
        xf.integer_matrix()
            .map(Lattice::new)
            .ok_or_else(|| Error::Corrupt("the form is not integral on R_Z(Γ)".into()))
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn pair(&self, a: &LatticeVec, b: &LatticeVec) -> i64 {
        let mut s = 0;
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                s += x * y * self.gram[i][j];
            }
        }
        s
    }

    pub fn norm(&self, a: &LatticeVec) -> i64 {
        self.pair(a, a)
    }
}

/// Bimultiplicative sign cocycle: ε(γ_i, γ_j) = 1 for i ≤ j and
/// (−1)^{a_ij + a_ii a_jj} for i > j.
#[derive(Clone, Debug)]
pub struct Cocycle {
    /// odd[i][j] for i > j: whether ε(γ_i, γ_j) = −1.
    odd: Vec<Vec<bool>>,
}

impl Cocycle {
    pub fn standard(lattice: &Lattice) -> Cocycle {
        let a = lattice.gram();
        let r = a.len();
        let odd = (0..r)
            .map(|i| (0..r).map(|j| i > j && (a[i][j] + a[i][i] * a[j][j]).rem_euclid(2) == 1).collect())
            .collect();
        Cocycle { odd }
    }

    /// ε(α, β) ∈ {±1}
    pub fn eval(&self, a: &LatticeVec, b: &LatticeVec) -> i64 {
        let mut parity = 0i64;
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate().take(i) {
                if self.odd[i][j] {
                    parity += x * y;
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// ε(α,β) ε(β,α)^{-1}
    pub fn commutator(&self, a: &LatticeVec, b: &LatticeVec) -> i64 {
        self.eval(a, b) * self.eval(b, a)
    }
}

/// A vector of F_Γ, grouped by lattice sector.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVec {
    width: usize,
    sectors: BTreeMap<LatticeVec, SymVec>,
}

impl FockVec {
    pub fn zero(width: usize) -> FockVec {
        FockVec { width, sectors: BTreeMap::new() }
    }

    /// s ⊗ e^α
    pub fn from_sym(s: SymVec, alpha: LatticeVec) -> FockVec {
        let mut v = FockVec::zero(s.width());
        if !s.is_zero() {
            v.sectors.insert(alpha, s);
        }
        v
    }

    /// a_{-ρ} ⊗ e^α
    pub fn basis(rho: PartFn, alpha: LatticeVec) -> FockVec {
        FockVec::from_sym(SymVec::monomial(rho), alpha)
    }

    /// e^α
    pub fn lattice_point(alpha: LatticeVec) -> FockVec {
        let w = alpha.width();
        FockVec::from_sym(SymVec::vacuum(w), alpha)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn sectors(&self) -> impl Iterator<Item = (&LatticeVec, &SymVec)> {
        self.sectors.iter()
    }

    pub fn sector(&self, alpha: &LatticeVec) -> SymVec {
        self.sectors.get(alpha).cloned().unwrap_or_else(|| SymVec::zero(self.width))
    }

    pub fn is_zero(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.sectors.values().map(|s| s.len()).sum()
    }

    pub fn add_sector(&mut self, alpha: LatticeVec, s: &SymVec) {
        if s.is_zero() {
            return;
        }
        let cur = self.sectors.remove(&alpha).unwrap_or_else(|| SymVec::zero(self.width));
        let next = cur.add(s);
        if !next.is_zero() {
            self.sectors.insert(alpha, next);
        }
    }

    pub fn add(&self, other: &FockVec) -> FockVec {
        let mut out = self.clone();
        for (a, s) in &other.sectors {
            out.add_sector(a.clone(), s);
        }
        out
    }

    pub fn sub(&self, other: &FockVec) -> FockVec {
        self.add(&other.scale(&Cyclo::from_int(-1)))
    }

    pub fn scale(&self, c: &Cyclo) -> FockVec {
        let mut out = FockVec::zero(self.width);
        if c.is_zero() {
            return out;
        }
        for (a, s) in &self.sectors {
            out.sectors.insert(a.clone(), s.scale(c));
        }
        out
    }

    /// Sorted distinct degrees ‖ρ‖ + ½⟨α,α⟩ of the terms.
    pub fn degrees(&self, lattice: &Lattice) -> Vec<Half> {
        let mut out = Vec::new();
        for (a, s) in &self.sectors {
            let base = lattice.norm(a);
            for (rho, _) in s.terms() {
                out.push(Half::from_twice(2 * rho.norm() as i64 + base));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Applies a map to the S_Γ factor sector by sector.
    pub fn map_sym(&self, f: impl Fn(&LatticeVec, &SymVec) -> SymVec) -> FockVec {
        let mut out = FockVec::zero(self.width);
        for (a, s) in &self.sectors {
            out.add_sector(a.clone(), &f(a, s));
        }
        out
    }
}

impl fmt::Display for FockVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sectors.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, s)) in self.sectors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{s}] e^{a}")?;
        }
        Ok(())
    }
}

/// e^β . (s ⊗ e^α) = ε(β, α) s ⊗ e^{α+β}
pub fn apply_lattice_shift(beta: &LatticeVec, v: &FockVec, eps: &Cocycle) -> FockVec {
    let mut out = FockVec::zero(v.width);
    for (a, s) in &v.sectors {
        out.add_sector(a + beta, &s.scale(&Cyclo::from_int(eps.eval(beta, a))));
    }
    out
}

/// ∂_γ (s ⊗ e^α) = ⟨γ, α⟩_ξ s ⊗ e^α
pub fn apply_partial(gamma: &LatticeVec, v: &FockVec, lattice: &Lattice) -> FockVec {
    v.map_sym(|a, s| s.scale(&Cyclo::from_int(lattice.pair(gamma, a))))
}

/// a_n(γ) on F_Γ: nonzero modes act on the S_Γ factor, a_0(γ) acts as ∂_γ.
pub fn apply_heis_fock(op: &HeisOp, v: &FockVec, xf: &XiForm, lattice: &Lattice) -> FockVec {
    if op.mode == 0 {
        return v.map_sym(|a, s| {
            let av: Vec<Cyclo> = (0..a.width())
                .map(|j| (0..a.width()).map(|i| Cyclo::from_int(lattice.gram()[j][i] * a.0[i])).sum())
                .collect();
            let p: Cyclo = op.coords.iter().zip(&av).map(|(x, y)| x * y).sum();
            s.scale(&p)
        });
    }
    v.map_sym(|_, s| apply_heis(op, s, xf))
}

/// ⟨u ⊗ e^α, v ⊗ e^β⟩ = ⟨u, v⟩_ξ δ_{αβ}
pub fn fock_inner(u: &FockVec, v: &FockVec, xf: &XiForm) -> Cyclo {
    let mut s = Cyclo::zero();
    for (a, x) in &u.sectors {
        if let Some(y) = v.sectors.get(a) {
            s += &inner_product(x, y, xf);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_display_round_trip() {
        for t in -7..7 {
            let h = Half::from_twice(t);
            assert_eq!(h.to_string().parse::<Half>().unwrap(), h);
        }
        assert_eq!(Half::from_twice(-3).to_string(), "-3/2");
    }

    #[test]
    fn trivial_weight_cocycle() {
        let l = Lattice::new(vec![vec![1, 0], vec![0, 1]]);
        let e = Cocycle::standard(&l);
        assert_eq!(e.eval(&LatticeVec::basis(2, 1), &LatticeVec::basis(2, 0)), -1);
        assert_eq!(e.eval(&LatticeVec::basis(2, 0), &LatticeVec::basis(2, 1)), 1);
        assert_eq!(e.eval(&LatticeVec(vec![3, -2]), &LatticeVec::zero(2)), 1);
    }

    #[test]
    fn partial_on_mckay_a1() {
        let l = Lattice::new(vec![vec![2, -2], vec![-2, 2]]);
        let v = FockVec::lattice_point(LatticeVec::basis(2, 1));
        let out = apply_partial(&LatticeVec::basis(2, 0), &v, &l);
        assert_eq!(out, v.scale(&Cyclo::from_int(-2)));
    }
}
