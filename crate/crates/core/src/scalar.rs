//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! Elements are stored in the power basis 1, ζ, …, ζ^{φ(N)-1} reduced modulo
//! the N-th cyclotomic polynomial. Conductors congruent to 2 mod 4 are folded
//! to N/2 (the fields coincide), and elements that turn out rational are
//! stored with conductor 1.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[k + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Per-conductor reduction data: `pow[k]` is ζ^k written in the power basis.
struct Ctx {
    n: u32,
    phi: usize,
    pow: Vec<Vec<i64>>,
}

impl Ctx {
    fn new(n: u32) -> Ctx {
        let phi_poly = cyclotomic_poly(n);
        let phi = phi_poly.len() - 1;
        let mut pow = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            pow.push(cur.clone());
            // multiply by ζ, then reduce the overflow coefficient
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] -= top * phi_poly[j];
                }
            }
        }
        Ctx { n, phi, pow }
    }
}

thread_local! {
    static CTX: RefCell<HashMap<u32, Rc<Ctx>>> = RefCell::new(HashMap::new());
}

fn ctx(n: u32) -> Rc<Ctx> {
    CTX.with(|c| {
        c.borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(Ctx::new(n)))
            .clone()
    })
}

fn canonical_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// An element of Q(ζ_N).
#[derive(Clone, Debug)]
pub struct Cyclo {
    n: u32,
    c: Vec<Rational>,
}

impl Cyclo {
    pub fn zero() -> Cyclo {
        Cyclo { n: 1, c: vec![Rational::zero()] }
    }

    pub fn one() -> Cyclo {
        Cyclo::from_int(1)
    }

    pub fn from_int(k: i64) -> Cyclo {
        Cyclo { n: 1, c: vec![int(k)] }
    }

    pub fn from_rational(q: Rational) -> Cyclo {
        Cyclo { n: 1, c: vec![q] }
    }

    /// ζ_n^k for any integer k.
    pub fn root_of_unity(n: u32, k: i64) -> Cyclo {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u64;
        let m = canonical_conductor(n);
        let (sign, e) = if m != n {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let e = (k * (m as u64 + 1) / 2) % m as u64;
            (if k % 2 == 1 { -1 } else { 1 }, e)
        } else {
            (1, k)
        };
        let cx = ctx(m);
        let c = cx.pow[e as usize].iter().map(|&v| int(v * sign)).collect();
        Cyclo { n: m, c }.normalized()
    }

    /// Build from power-basis coefficients; `n` must already be canonical.
    pub fn from_coeffs(n: u32, c: Vec<Rational>) -> Result<Cyclo, Error> {
        if n == 0 || canonical_conductor(n) != n {
            return Err(Error::Parse(format!("conductor {n} is not canonical")));
        }
        if c.len() != euler_phi(n) {
            return Err(Error::Parse(format!(
                "conductor {n} needs {} coefficients, got {}",
                euler_phi(n),
                c.len()
            )));
        }
        Ok(Cyclo { n, c }.normalized())
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.c.iter().skip(1).all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    fn normalized(mut self) -> Cyclo {
        if self.n != 1 && self.c.iter().skip(1).all(|x| x.is_zero()) {
            self.c.truncate(1);
            self.n = 1;
        }
        self
    }

    /// Re-express with conductor `m`; the current conductor must divide `m`.
    pub fn embed(&self, m: u32) -> Result<Cyclo, Error> {
        let m = canonical_conductor(m);
        if !m.is_multiple_of(self.n) {
            return Err(Error::Embed { from: self.n, to: m });
        }
        Ok(self.embed_unchecked(m))
    }

    fn embed_unchecked(&self, m: u32) -> Cyclo {
        if m == self.n {
            return self.clone();
        }
        let cx = ctx(m);
        let step = (m / self.n) as usize;
        let mut out = vec![Rational::zero(); cx.phi];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &cx.pow[(j * step) % m as usize];
            for (k, &v) in row.iter().enumerate() {
                if v != 0 {
                    out[k] += a * int(v);
                }
            }
        }
        Cyclo { n: m, c: out }
    }

    /// Coefficient vectors of both operands over a common conductor.
    fn common(&self, other: &Cyclo) -> (u32, Cyclo, Cyclo) {
        if self.n == other.n {
            return (self.n, self.clone(), other.clone());
        }
        let m = self.n.lcm(&other.n);
        (m, self.embed_unchecked(m), other.embed_unchecked(m))
    }

    /// Galois action ζ ↦ ζ^k, for k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclo {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let k = k.rem_euclid(n);
        assert_eq!(k.gcd(&n), 1, "Galois exponent must be a unit");
        let cx = ctx(self.n);
        let mut out = vec![Rational::zero(); cx.phi];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &cx.pow[((j as i64 * k) % n) as usize];
            for (t, &v) in row.iter().enumerate() {
                if v != 0 {
                    out[t] += a * int(v);
                }
            }
        }
        Cyclo { n: self.n, c: out }.normalized()
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    /// Field trace down to Q.
    pub fn trace(&self) -> Rational {
        let n = self.n as i64;
        let mut t = Rational::zero();
        for k in 1..=n {
            if k.gcd(&n) == 1 {
                t += self.galois(k).c[0].clone();
            }
        }
        // the orbit sum is rational, so only constant coefficients survive
        t
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let n = self.n as i64;
        let mut p = Cyclo::one();
        for k in 1..=n {
            if k.gcd(&n) == 1 {
                p = &p * &self.galois(k);
            }
        }
        p.to_rational().expect("norm is rational")
    }

    pub fn inv(&self) -> Result<Cyclo, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Cyclo::from_rational(self.c[0].recip()));
        }
        let n = self.n as i64;
        let mut others = Cyclo::one();
        for k in 2..=n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let nm = (&others * self).to_rational().expect("norm is rational");
        Ok(others.scale(&nm.recip()))
    }

    pub fn checked_div(&self, other: &Cyclo) -> Result<Cyclo, Error> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Cyclo {
        if q.is_zero() {
            return Cyclo::zero();
        }
        Cyclo { n: self.n, c: self.c.iter().map(|x| x * q).collect() }
    }

    pub fn pow(&self, e: u32) -> Cyclo {
        let mut r = Cyclo::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (_, a, b) = self.common(other);
        a.c == b.c
    }
}

impl Eq for Cyclo {}

impl From<i64> for Cyclo {
    fn from(k: i64) -> Cyclo {
        Cyclo::from_int(k)
    }
}

impl From<Rational> for Cyclo {
    fn from(q: Rational) -> Cyclo {
        Cyclo::from_rational(q)
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.n == rhs.n {
            let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect();
            return Cyclo { n: self.n, c }.normalized();
        }
        let (n, a, b) = self.common(rhs);
        let c = a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect();
        Cyclo { n, c }.normalized()
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.n == 1 {
            return rhs.scale(&self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(&rhs.c[0]);
        }
        let (n, a, b) = self.common(rhs);
        let cx = ctx(n);
        let mut buckets: Vec<Rational> = vec![Rational::zero(); 2 * cx.phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    buckets[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<Rational> = buckets[..cx.phi].to_vec();
        for (k, v) in buckets.iter().enumerate().skip(cx.phi) {
            if v.is_zero() {
                continue;
            }
            let row = &cx.pow[k % cx.n as usize];
            for (t, &r) in row.iter().enumerate() {
                if r != 0 {
                    out[t] += v * int(r);
                }
            }
        }
        Cyclo { n, c: out }.normalized()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if self.n == rhs.n {
            for (a, b) in self.c.iter_mut().zip(&rhs.c) {
                *a += b;
            }
            let me = std::mem::replace(self, Cyclo::zero());
            *self = me.normalized();
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        *self += &(-rhs);
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, rhs: &Cyclo) {
        *self = &*self * rhs;
    }
}

impl Zero for Cyclo {
    fn zero() -> Cyclo {
        Cyclo::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
}

impl One for Cyclo {
    fn one() -> Cyclo {
        Cyclo::one()
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        let mut s = Cyclo::zero();
        for x in iter {
            s += &x;
        }
        s
    }
}

impl fmt::Display for Cyclo {
    /// `c0 + c1*z + c2*z^2@N`, zero coefficients omitted; rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut terms = Vec::new();
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{a}"),
                1 => format!("{a}*z"),
                _ => format!("{a}*z^{k}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "{}@{}", terms.join(" + "), self.n)
    }
}

impl FromStr for Cyclo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Cyclo, Error> {
        let bad = || Error::Parse(format!("bad cyclotomic literal {s:?}"));
        let Some((body, cond)) = s.trim().rsplit_once('@') else {
            return s.trim().parse::<Rational>().map(Cyclo::from_rational).map_err(|_| bad());
        };
        let n: u32 = cond.trim().parse().map_err(|_| bad())?;
        if n == 0 || canonical_conductor(n) != n {
            return Err(bad());
        }
        let phi = euler_phi(n);
        let mut c = vec![Rational::zero(); phi];
        for term in body.split(" + ") {
            let term = term.trim();
            let (coef, k) = match term.split_once("*z") {
                None => (term, 0usize),
                Some((coef, rest)) => {
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (coef, k)
                }
            };
            if k >= phi {
                return Err(bad());
            }
            let q: Rational = coef.parse().map_err(|_| bad())?;
            c[k] += q;
        }
        Ok(Cyclo { n, c }.normalized())
    }
}

/// Sign of a rational as an i32.
pub fn sign(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(5).len(), 5);
    }

    #[test]
    fn i_squared() {
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclo::from_int(-1));
    }

    #[test]
    fn golden_conjugates() {
        let a = &z(5, 1) + &z(5, 4);
        let b = &z(5, 2) + &z(5, 3);
        assert_eq!(&a * &b, Cyclo::from_int(-1));
        // a + b = -1 as well
        assert_eq!(&a + &b, Cyclo::from_int(-1));
    }

    #[test]
    fn embedding() {
        assert_eq!(Cyclo::from_int(-1).embed(4).unwrap(), z(4, 2));
        assert_eq!(z(2, 1), z(4, 2));
        let e = z(3, 1).embed(12).unwrap();
        assert_eq!(e.conductor(), 12);
        assert_eq!(e, z(12, 4));
        assert!(z(3, 1).embed(8).is_err());
    }

    #[test]
    fn two_mod_four_folding() {
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(&z(6, 1) * &z(6, 1), z(3, 1));
        assert_eq!(z(6, 3), Cyclo::from_int(-1));
        assert_eq!(z(10, 5), Cyclo::from_int(-1));
    }

    #[test]
    fn inverse_and_division() {
        let a = &Cyclo::from_int(2) + &z(5, 1);
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
        assert!(Cyclo::zero().inv().is_err());
        assert!(a.checked_div(&Cyclo::zero()).is_err());
    }

    #[test]
    fn conj_of_root() {
        for n in [3u32, 4, 5, 8, 12, 60] {
            for k in 0..n as i64 {
                assert_eq!(z(n, k).conj(), z(n, n as i64 - k));
            }
        }
    }

    #[test]
    fn display_roundtrip() {
        let samples = vec![
            Cyclo::zero(),
            Cyclo::from_rational(rat(-3, 7)),
            &z(5, 1).scale(&rat(1, 2)) - &z(5, 3),
            z(12, 5),
            z(60, 7),
        ];
        for s in samples {
            let text = s.to_string();
            let back: Cyclo = text.parse().unwrap();
            assert_eq!(back, s);
            assert_eq!(back.to_string(), text);
        }
        assert_eq!(Cyclo::from_int(3).to_string(), "3");
        assert_eq!(z(4, 1).to_string(), "1*z@4");
    }
}
