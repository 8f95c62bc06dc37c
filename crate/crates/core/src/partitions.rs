//! Partitions, partition-valued functions and centralizer orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::scalar::Rational;

/// A weakly decreasing list of positive parts, with the multiplicity form
/// `(i, m_i)` (increasing `i`) kept alongside.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    mults: Vec<(u32, u32)>,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition { parts: Vec::new(), mults: Vec::new() }
    }

    /// Sorts the given parts; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut mults: Vec<(u32, u32)> = Vec::new();
        for &p in parts.iter().rev() {
            match mults.last_mut() {
                Some((i, m)) if *i == p => *m += 1,
                _ => mults.push((p, 1)),
            }
        }
        Partition { parts, mults }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn multiplicities(&self) -> &[(u32, u32)] {
        &self.mults
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The multiplicity of `i` as a part.
    pub fn mult(&self, i: u32) -> u32 {
        self.mults.iter().find(|(p, _)| *p == i).map_or(0, |(_, m)| *m)
    }

    /// Union of parts (the partition of |λ|+|μ|).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut p = self.parts.clone();
        p.extend_from_slice(&other.parts);
        Partition::new(p)
    }

    pub fn with_part(&self, part: u32) -> Partition {
        let mut p = self.parts.clone();
        p.push(part);
        Partition::new(p)
    }

    /// Removes one copy of `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut p = self.parts.clone();
        p.remove(pos);
        Some(Partition::new(p))
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition::new(
            (1..=first)
                .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse-lexicographic order: (n) first.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl Ord for Partition {
    /// By size, then reverse-lexicographically on the parts.
    fn cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// z_λ = ∏ i^{m_i} m_i!
pub fn z_lambda(l: &Partition) -> Rational {
    let mut z = BigInt::one();
    for &(i, m) in l.multiplicities() {
        z *= BigInt::from(i).pow(m) * factorial(m);
    }
    Rational::from_integer(z)
}

/// A partition-valued function on the labels `0..width`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartFn {
    parts: Vec<Partition>,
}

impl PartFn {
    pub fn empty(width: usize) -> PartFn {
        PartFn { parts: vec![Partition::empty(); width] }
    }

    pub fn from_parts(parts: Vec<Partition>) -> PartFn {
        PartFn { parts }
    }

    /// The function that is `l` at label `x` and empty elsewhere.
    pub fn single(width: usize, x: usize, l: Partition) -> PartFn {
        let mut f = PartFn::empty(width);
        f.parts[x] = l;
        f
    }

    pub fn width(&self) -> usize {
        self.parts.len()
    }

    pub fn get(&self, x: usize) -> &Partition {
        &self.parts[x]
    }

    pub fn set(&mut self, x: usize, l: Partition) {
        self.parts[x] = l;
    }

    pub fn entries(&self) -> &[Partition] {
        &self.parts
    }

    /// ‖ρ‖ = Σ_x |ρ(x)|
    pub fn norm(&self) -> u32 {
        self.parts.iter().map(|p| p.size()).sum()
    }

    /// Total number of parts.
    pub fn total_len(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    /// Labelwise union.
    pub fn union(&self, other: &PartFn) -> PartFn {
        PartFn {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.union(b)).collect(),
        }
    }

    pub fn with_part(&self, x: usize, part: u32) -> PartFn {
        let mut f = self.clone();
        f.parts[x] = f.parts[x].with_part(part);
        f
    }

    pub fn without_part(&self, x: usize, part: u32) -> Option<PartFn> {
        let mut f = self.clone();
        f.parts[x] = f.parts[x].without_part(part)?;
        Some(f)
    }

    /// Relabels through `perm`: the result at `perm[x]` is `self` at `x`.
    pub fn permuted(&self, perm: &[usize]) -> PartFn {
        let mut out = PartFn::empty(self.width());
        for (x, l) in self.parts.iter().enumerate() {
            out.parts[perm[x]] = l.clone();
        }
        out
    }

    fn weights(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.size()).collect()
    }
}

impl Ord for PartFn {
    /// Total size first; then the weight vector, with more weight on
    /// earlier labels sorting first; then labelwise partition order.
    fn cmp(&self, other: &PartFn) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| other.weights().cmp(&self.weights()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for PartFn {
    fn partial_cmp(&self, other: &PartFn) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartFn {
    /// `c0:[3,1];c1:[2]`, empty entries omitted; the empty function is `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "c")
    }
}

impl PartFn {
    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, prefix: &str) -> fmt::Result {
        let items: Vec<String> = self
            .parts
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty())
            .map(|(i, p)| format!("{prefix}{i}:{p}"))
            .collect();
        if items.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", items.join(";"))
        }
    }

    /// Text form with a custom label prefix (`g` for irreducible labels).
    pub fn label(&self, prefix: &str) -> String {
        struct W<'a>(&'a PartFn, &'a str);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        W(self, prefix).to_string()
    }

    /// Parses the text form for a given width; any alphabetic prefix is accepted.
    pub fn parse(s: &str, width: usize) -> Result<PartFn, Error> {
        let bad = || Error::Parse(format!("bad partition function {s:?}"));
        let mut f = PartFn::empty(width);
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(f);
        }
        for item in s.split(';') {
            let (lab, body) = item.split_once(':').ok_or_else(bad)?;
            let idx: usize = lab
                .trim()
                .trim_start_matches(|c: char| c.is_ascii_alphabetic())
                .parse()
                .map_err(|_| bad())?;
            if idx >= width {
                return Err(bad());
            }
            let body = body.trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
            let parts: Result<Vec<u32>, _> = if body.trim().is_empty() {
                Ok(Vec::new())
            } else {
                body.split(',').map(|t| t.trim().parse::<u32>()).collect()
            };
            let parts = parts.map_err(|_| bad())?;
            if parts.contains(&0) {
                return Err(bad());
            }
            f.parts[idx] = Partition::new(parts);
        }
        Ok(f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition, Error> {
        let bad = || Error::Parse(format!("bad partition {s:?}"));
        let body = s.trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> =
            body.split(',').map(|t| t.trim().parse::<u32>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        Ok(Partition::new(parts))
    }
}

/// Z_ρ = ∏_c z_{ρ(c)} ζ_c^{l(ρ(c))}, with `zeta[c]` the centralizer orders.
pub fn big_z(rho: &PartFn, zeta: &[u64]) -> Rational {
    let mut z = Rational::one();
    for (c, l) in rho.entries().iter().enumerate() {
        z *= z_lambda(l) * Rational::from_integer(BigInt::from(zeta[c]).pow(l.len() as u32));
    }
    z
}

/// All partition-valued functions on `width` labels with ‖ρ‖ = n, in the
/// canonical order (matches `Ord for PartFn`).
pub fn enumerate_partfn(width: usize, n: u32) -> Vec<PartFn> {
    let mut out = Vec::new();
    if width == 0 {
        if n == 0 {
            out.push(PartFn::empty(0));
        }
        return out;
    }
    let mut weights = vec![0u32; width];
    fn compositions(i: usize, rem: u32, w: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == w.len() {
            w[i] = rem;
            out.push(w.clone());
            return;
        }
        for k in (0..=rem).rev() {
            w[i] = k;
            compositions(i + 1, rem - k, w, out);
        }
    }
    let mut comps = Vec::new();
    compositions(0, n, &mut weights, &mut comps);
    for comp in comps {
        let choices: Vec<Vec<Partition>> = comp.iter().map(|&k| Partition::all(k)).collect();
        let mut idx = vec![0usize; width];
        loop {
            out.push(PartFn {
                parts: (0..width).map(|x| choices[x][idx[x]].clone()).collect(),
            });
            // odometer with the last label varying fastest
            let mut x = width;
            loop {
                if x == 0 {
                    break;
                }
                x -= 1;
                idx[x] += 1;
                if idx[x] < choices[x].len() {
                    break;
                }
                idx[x] = 0;
                if x == 0 {
                    x = usize::MAX;
                    break;
                }
            }
            if x == usize::MAX {
                break;
            }
        }
    }
    out
}

/// All partition-valued functions with ‖ρ‖ ≤ n.
pub fn enumerate_partfn_upto(width: usize, n: u32) -> Vec<PartFn> {
    (0..=n).flat_map(|k| enumerate_partfn(width, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn z_lambda_examples() {
        assert_eq!(z_lambda(&Partition::empty()), int(1));
        assert_eq!(z_lambda(&Partition::new(vec![1, 1, 2])), int(4));
        assert_eq!(z_lambda(&Partition::new(vec![3])), int(3));
    }

    #[test]
    fn big_z_examples() {
        let rho = PartFn::single(1, 0, Partition::new(vec![2, 1]));
        assert_eq!(big_z(&rho, &[1]), z_lambda(rho.get(0)));
        let rho = PartFn::single(2, 0, Partition::new(vec![1]));
        assert_eq!(big_z(&rho, &[2, 2]), int(2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partfn(1, 4).len(), 5);
        assert_eq!(enumerate_partfn(2, 2).len(), 5);
        assert_eq!(enumerate_partfn(3, 0).len(), 1);
    }

    #[test]
    fn enumeration_is_sorted() {
        for w in 1..=3 {
            for n in 0..=5 {
                let v = enumerate_partfn(w, n);
                assert!(v.windows(2).all(|p| p[0] < p[1]), "w={w} n={n}");
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let f = PartFn::parse("c0:[3,1];c2:[2]", 3).unwrap();
        assert_eq!(f.to_string(), "c0:[3,1];c2:[2]");
        assert_eq!(f.label("g"), "g0:[3,1];g2:[2]");
        assert_eq!(PartFn::parse(&f.label("g"), 3).unwrap(), f);
        assert_eq!(PartFn::empty(2).to_string(), "-");
    }

    #[test]
    fn transpose_involution() {
        for n in 0..8 {
            for p in Partition::all(n) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }
}
