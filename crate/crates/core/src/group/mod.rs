//! Base finite groups: Cayley table, conjugacy classes and character table.

pub mod su2;

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::error::Error;
use crate::scalar::{Cyclo, Rational};
use su2::{CharRule, Family, Mat2};

/// A finite group with its classes and irreducible characters.
///
/// Classes are ordered: identity first, then by class size, element order,
/// and smallest element index. Irreducibles: trivial first, then by degree,
/// ties in the family's fixed label order.
#[derive(Clone, Debug)]
pub struct GroupData {
    descriptor: String,
    mult: Vec<Vec<u32>>,
    inverse: Vec<usize>,
    elem_order: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    inv_class: Vec<usize>,
    zeta: Vec<u64>,
    chars: Vec<Vec<Cyclo>>,
    labels: Vec<String>,
    exponent: u32,
    natural: Option<Vec<Cyclo>>,
}

impl fmt::Display for GroupData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

impl GroupData {
    /// Parses a descriptor: `trivial`, `cyclic:m`, `bd:4m`, `bt`, `bo`, `bi`,
    /// or `cayley:<file>`.
    pub fn build(spec: &str) -> Result<GroupData, Error> {
        let unknown = || Error::UnknownGroup(spec.to_string());
        let spec = spec.trim();
        let (kind, arg) = match spec.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (spec, None),
        };
        match (kind, arg) {
            ("trivial", None) => Self::from_family(spec, su2::cyclic(1)),
            ("cyclic", Some(a)) => {
                let m: u32 = a.parse().map_err(|_| unknown())?;
                if m == 0 || m > 200 {
                    return Err(unknown());
                }
                Self::from_family(spec, su2::cyclic(m))
            }
            ("bd" | "binary_dihedral", Some(a)) => {
                let order: u32 = a.parse().map_err(|_| unknown())?;
                if order < 8 || !order.is_multiple_of(4) || order > 200 {
                    return Err(unknown());
                }
                Self::from_family(spec, su2::binary_dihedral(order / 4))
            }
            ("bt" | "binary_tetrahedral", None) => Self::from_family(spec, su2::binary_tetrahedral()),
            ("bo" | "binary_octahedral", None) => Self::from_family(spec, su2::binary_octahedral()),
            ("bi" | "binary_icosahedral", None) => Self::from_family(spec, su2::binary_icosahedral()),
            ("cayley", Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                Self::from_cayley_text(spec, &text)
            }
            _ => Err(unknown()),
        }
    }

    fn from_family(descriptor: &str, fam: Family) -> Result<GroupData, Error> {
        let (elems, mult) = closure(&fam.gens, fam.entry_conductor);
        let mut g = GroupData::skeleton(descriptor, mult)?;
        let natural_by_elem: Vec<Cyclo> = elems.iter().map(su2::trace).collect();
        g.natural = Some(g.classes.iter().map(|c| natural_by_elem[c[0]].clone()).collect());
        let chars = match fam.rule {
            CharRule::Formula(f) => {
                let cols: Vec<Vec<Cyclo>> = g.classes.iter().map(|c| f(&elems[c[0]])).collect();
                let r = cols[0].len();
                (0..r).map(|i| cols.iter().map(|col| col[i].clone()).collect()).collect()
            }
            CharRule::Fixed { reps, rows } => {
                let index = element_index(&elems, fam.entry_conductor);
                let mut perm = vec![usize::MAX; reps.len()];
                for (col, rep) in reps.iter().enumerate() {
                    let e = *index
                        .get(&key(rep, fam.entry_conductor))
                        .ok_or_else(|| Error::Corrupt(format!("representative of column {col} not in group")))?;
                    perm[col] = g.class_of[e];
                }
                let mut seen = perm.clone();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != g.classes.len() || perm.len() != g.classes.len() {
                    return Err(Error::Corrupt("column representatives do not hit every class once".into()));
                }
                rows.iter()
                    .map(|row| {
                        let mut out = vec![Cyclo::zero(); row.len()];
                        for (col, v) in row.iter().enumerate() {
                            out[perm[col]] = v.clone();
                        }
                        out
                    })
                    .collect()
            }
        };
        g.chars = chars;
        g.labels = fam.labels;
        g.sort_irreducibles();
        g.validate()?;
        Ok(g)
    }

    /// Groups, classes and element orders from a Cayley table; characters empty.
    fn skeleton(descriptor: &str, mult: Vec<Vec<u32>>) -> Result<GroupData, Error> {
        let order = mult.len();
        if order == 0 || mult.iter().any(|r| r.len() != order) {
            return Err(Error::Corrupt("Cayley table is not square".into()));
        }
        if (0..order).any(|a| mult[0][a] as usize != a || mult[a][0] as usize != a) {
            return Err(Error::Corrupt("element 0 must be the identity".into()));
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let mut seen = vec![false; order];
            for b in 0..order {
                let p = mult[a][b] as usize;
                if p >= order || seen[p] {
                    return Err(Error::Corrupt("Cayley table row is not a permutation".into()));
                }
                seen[p] = true;
                if p == 0 {
                    inverse[a] = b;
                }
            }
        }
        let elem_order: Vec<u32> = (0..order)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = mult[x][a] as usize;
                    k += 1;
                }
                k
            })
            .collect();
        // conjugacy classes by brute force
        let mut raw_class = vec![usize::MAX; order];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for a in 0..order {
            if raw_class[a] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..order)
                .map(|g| mult[mult[g][a] as usize][inverse[g]] as usize)
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                raw_class[m] = raw.len();
            }
            raw.push(members);
        }
        raw.sort_by_key(|c| (c[0] != 0, c.len(), elem_order[c[0]], c[0]));
        let mut class_of = vec![0; order];
        for (i, c) in raw.iter().enumerate() {
            for &m in c {
                class_of[m] = i;
            }
        }
        let inv_class = raw.iter().map(|c| class_of[inverse[c[0]]]).collect();
        let zeta = raw.iter().map(|c| (order / c.len()) as u64).collect();
        let exponent = elem_order.iter().fold(1u32, |acc, &o| acc.lcm(&o));
        Ok(GroupData {
            descriptor: descriptor.to_string(),
            mult,
            inverse,
            elem_order,
            class_of,
            classes: raw,
            inv_class,
            zeta,
            chars: Vec::new(),
            labels: Vec::new(),
            exponent,
            natural: None,
        })
    }

    fn sort_irreducibles(&mut self) {
        let mut idx: Vec<usize> = (0..self.chars.len()).collect();
        let deg = |i: usize| self.chars[i][0].to_integer().unwrap_or_default();
        let trivial = |i: usize| self.chars[i].iter().all(|v| v.is_one());
        idx.sort_by_key(|&i| (!trivial(i), deg(i), i));
        self.chars = idx.iter().map(|&i| self.chars[i].clone()).collect();
        if self.labels.len() == idx.len() {
            self.labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        } else {
            self.labels = (0..idx.len()).map(|i| format!("chi{i}")).collect();
        }
    }

    /// Text format: a `table` section with one row of element indices per
    /// line (element 0 the identity), then a `characters` section where each
    /// line is `<element> | v_0 | v_1 | …`, giving the value of every
    /// irreducible at the class of that element. `#` starts a comment.
    pub fn from_cayley_text(descriptor: &str, text: &str) -> Result<GroupData, Error> {
        let mut section = "";
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut cols: Vec<(usize, Vec<Cyclo>)> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line == "table" || line == "characters" {
                section = if line == "table" { "table" } else { "characters" };
                continue;
            }
            match section {
                "table" => {
                    let row: Result<Vec<u32>, _> = line.split_whitespace().map(|t| t.parse()).collect();
                    rows.push(row.map_err(|_| Error::Parse(format!("bad Cayley row {line:?}")))?);
                }
                "characters" => {
                    let mut it = line.split('|');
                    let e: usize = it
                        .next()
                        .unwrap_or("")
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad character line {line:?}")))?;
                    let vals: Result<Vec<Cyclo>, _> = it.map(|t| t.trim().parse()).collect();
                    cols.push((e, vals?));
                }
                _ => return Err(Error::Parse("expected a `table` section".into())),
            }
        }
        let mut g = GroupData::skeleton(descriptor, rows)?;
        if cols.is_empty() {
            return Err(Error::Corrupt("character values are required for Cayley-table groups".into()));
        }
        let k = g.classes.len();
        let r = cols[0].1.len();
        if cols.len() != k || r != k || cols.iter().any(|(_, v)| v.len() != r) {
            return Err(Error::Corrupt(format!("need {k} character columns of length {k}")));
        }
        let mut chars = vec![vec![Cyclo::zero(); k]; r];
        let mut hit = vec![false; k];
        for (e, vals) in cols {
            if e >= g.order() {
                return Err(Error::Corrupt(format!("element {e} out of range")));
            }
            let c = g.class_of[e];
            if hit[c] {
                return Err(Error::Corrupt("two character columns for one class".into()));
            }
            hit[c] = true;
            for (i, v) in vals.into_iter().enumerate() {
                chars[i][c] = v;
            }
        }
        g.chars = chars;
        g.sort_irreducibles();
        g.validate()?;
        Ok(g)
    }

    /// Both orthogonality relations, Σd² = |Γ|, γ_0 ≡ 1, ζ_c = ζ_{c⁻¹}, and
    /// integrality of tensor-product multiplicities.
    fn validate(&self) -> Result<(), Error> {
        let k = self.classes.len();
        if self.chars.len() != k {
            return Err(Error::Corrupt(format!("{} irreducibles for {k} classes", self.chars.len())));
        }
        if !self.chars[0].iter().all(|v| v.is_one()) {
            return Err(Error::Corrupt("first irreducible is not trivial".into()));
        }
        for c in 0..k {
            if self.zeta[c] != self.zeta[self.inv_class[c]] {
                return Err(Error::Corrupt("centralizer orders not inverse-invariant".into()));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let v = self.pair_values(&self.chars[i], &self.chars[j]);
                let want = Cyclo::from_int((i == j) as i64);
                if v != want {
                    return Err(Error::Corrupt(format!("row orthogonality fails at ({i},{j})")));
                }
            }
        }
        for c in 0..k {
            for c2 in 0..k {
                let s: Cyclo = (0..k)
                    .map(|i| &self.chars[i][c2] * &self.chars[i][self.inv_class[c]])
                    .sum();
                let want = if c == c2 { Cyclo::from_int(self.zeta[c] as i64) } else { Cyclo::zero() };
                if s != want {
                    return Err(Error::Corrupt(format!("column orthogonality fails at ({c},{c2})")));
                }
            }
        }
        let sum_sq: Cyclo = self.chars.iter().map(|r| &r[0] * &r[0]).sum();
        if sum_sq != Cyclo::from_int(self.order() as i64) {
            return Err(Error::Corrupt("sum of squared degrees differs from the order".into()));
        }
        for i in 0..k {
            for j in i..k {
                let prod: Vec<Cyclo> = (0..k).map(|c| &self.chars[i][c] * &self.chars[j][c]).collect();
                for l in 0..k {
                    let m = self.pair_values(&prod, &self.chars[l]);
                    let ok = m.to_integer().is_some_and(|z| z >= 0.into());
                    if !ok {
                        return Err(Error::Corrupt(format!("tensor multiplicity <{i}*{j},{l}> = {m}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Σ_c ζ_c^{-1} f(c) g(c^{-1})
    pub fn pair_values(&self, f: &[Cyclo], g: &[Cyclo]) -> Cyclo {
        (0..self.classes.len())
            .map(|c| {
                (&f[c] * &g[self.inv_class[c]]).scale(&Rational::new(1.into(), (self.zeta[c] as i64).into()))
            })
            .sum()
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.elem_order[a]
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn inv_class(&self, c: usize) -> usize {
        self.inv_class[c]
    }

    pub fn inv_class_map(&self) -> &[usize] {
        &self.inv_class
    }

    /// Centralizer orders ζ_c.
    pub fn zeta(&self) -> &[u64] {
        &self.zeta
    }

    /// Row i = γ_i, column c = class c.
    pub fn char_table(&self) -> &[Vec<Cyclo>] {
        &self.chars
    }

    pub fn irrep_labels(&self) -> &[String] {
        &self.labels
    }

    /// Degrees d_i = γ_i(1).
    pub fn degrees(&self) -> Vec<i64> {
        self.chars
            .iter()
            .map(|r| {
                let d = r[0].to_integer().expect("degree is an integer");
                i64::try_from(d).expect("degree fits i64")
            })
            .collect()
    }

    /// Lcm of element orders; all character values lie in Q(ζ_exponent).
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Character of the defining 2-dimensional representation, when the
    /// group was built from SU(2) matrices.
    pub fn natural_character(&self) -> Option<&[Cyclo]> {
        self.natural.as_deref()
    }
}

fn key(m: &Mat2, conductor: u32) -> Vec<Rational> {
    m.iter()
        .flat_map(|x| x.embed(conductor).expect("entry lies in the entry field").coeffs().to_vec())
        .collect()
}

fn element_index(elems: &[Mat2], conductor: u32) -> HashMap<Vec<Rational>, usize> {
    elems.iter().enumerate().map(|(i, m)| (key(m, conductor), i)).collect()
}

/// Breadth-first closure under right multiplication by the generators, and
/// the full Cayley table built from the resulting spanning tree.
fn closure(gens: &[Mat2], conductor: u32) -> (Vec<Mat2>, Vec<Vec<u32>>) {
    let mut elems = vec![su2::identity()];
    let mut index: HashMap<Vec<Rational>, usize> = HashMap::new();
    index.insert(key(&elems[0], conductor), 0);
    let mut right: Vec<Vec<usize>> = Vec::new();
    // parent[b] · gens[via[b]] = b
    let mut parent = vec![0usize];
    let mut via = vec![0usize];
    let mut head = 0;
    while head < elems.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let y = su2::mat_mul(&elems[head], g);
            let k = key(&y, conductor);
            let idx = match index.get(&k) {
                Some(&i) => i,
                None => {
                    elems.push(y);
                    index.insert(k, elems.len() - 1);
                    parent.push(head);
                    via.push(gi);
                    elems.len() - 1
                }
            };
            row.push(idx);
        }
        right.push(row);
        head += 1;
    }
    let n = elems.len();
    let mut mult = vec![vec![0u32; n]; n];
    for a in 0..n {
        mult[a][0] = a as u32;
        for b in 1..n {
            let ap = mult[a][parent[b]] as usize;
            mult[a][b] = right[ap][via[b]] as u32;
        }
    }
    (elems, mult)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let g = GroupData::build("cyclic:2").unwrap();
        let t = g.char_table();
        assert_eq!(t[0], vec![Cyclo::from_int(1), Cyclo::from_int(1)]);
        assert_eq!(t[1], vec![Cyclo::from_int(1), Cyclo::from_int(-1)]);
    }

    #[test]
    fn cyclic_three_values() {
        let g = GroupData::build("cyclic:3").unwrap();
        // class 1 holds the generator (index 1 in breadth-first order)
        let c = g.class_of(1);
        for j in 0..3 {
            assert_eq!(g.char_table()[j][c], Cyclo::root_of_unity(3, j as i64));
        }
    }

    #[test]
    fn quaternion_group() {
        let g = GroupData::build("bd:8").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.num_classes(), 5);
        assert_eq!(g.degrees(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn exceptional_orders() {
        for (s, n, k) in [("bt", 24, 7), ("bo", 48, 8), ("bi", 120, 9)] {
            let g = GroupData::build(s).unwrap();
            assert_eq!(g.order(), n, "{s}");
            assert_eq!(g.num_classes(), k, "{s}");
        }
    }

    #[test]
    fn class_order_rule() {
        let g = GroupData::build("cyclic:4").unwrap();
        assert_eq!(g.classes()[0], vec![0]);
        // -1 (order 2) precedes the two elements of order 4
        assert_eq!(g.element_order(g.classes()[1][0]), 2);
    }

    #[test]
    fn unknown_descriptor() {
        assert!(GroupData::build("nonsense").is_err());
        assert!(GroupData::build("bd:10").is_err());
    }

    #[test]
    fn cayley_roundtrip_z3() {
        let text = "table\n0 1 2\n1 2 0\n2 0 1\ncharacters\n0 | 1@1 | 1@1 | 1@1\n1 | 1@1 | 1*z@3 | -1 + -1*z@3\n2 | 1@1 | -1 + -1*z@3 | 1*z@3\n";
        let g = GroupData::from_cayley_text("cayley:z3", text).unwrap();
        assert_eq!(g.num_classes(), 3);
        let bad = "table\n0 1 2\n1 2 0\n2 0 1\ncharacters\n0 | 1@1 | 1@1 | 1@1\n1 | 1@1 | 1*z@3 | 1*z@3\n2 | 1@1 | -1 + -1*z@3 | 1*z@3\n";
        assert!(GroupData::from_cayley_text("cayley:bad", bad).is_err());
    }
}
