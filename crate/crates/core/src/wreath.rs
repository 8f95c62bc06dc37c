//! Class functions on the wreath products Γ_n = Γ^n ⋊ S_n, indexed by types,
//! and an element-level engine used as a brute-force oracle at small order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::Error;
use crate::forms::{same_group, ClassFn, XiForm};
use crate::group::GroupData;
use crate::partitions::{big_z, enumerate_partfn, PartFn, Partition};
use crate::scalar::{Cyclo, Rational};

/// All types ρ ∈ P_n(Γ_*) in canonical order.
pub fn types(group: &GroupData, n: u32) -> Vec<PartFn> {
    enumerate_partfn(group.num_classes(), n)
}

/// ρ̄(c) = ρ(c^{-1})
pub fn dual_type(group: &GroupData, rho: &PartFn) -> PartFn {
    rho.permuted(group.inv_class_map())
}

/// Centralizer order Z_ρ of an element of type ρ.
pub fn centralizer_order(group: &GroupData, rho: &PartFn) -> Rational {
    big_z(rho, group.zeta())
}

/// A class function on Γ_n stored sparsely by type; absent types are 0.
#[derive(Clone, Debug)]
pub struct WreathClassFn {
    group: Arc<GroupData>,
    n: u32,
    values: BTreeMap<PartFn, Cyclo>,
}

impl PartialEq for WreathClassFn {
    fn eq(&self, other: &WreathClassFn) -> bool {
        if !same_group(&self.group, &other.group) || self.n != other.n {
            return false;
        }
        let zero = Cyclo::zero();
        let keys = self.values.keys().chain(other.values.keys());
        keys.into_iter().all(|k| self.values.get(k).unwrap_or(&zero) == other.values.get(k).unwrap_or(&zero))
    }
}

impl WreathClassFn {
    pub fn zero(group: &Arc<GroupData>, n: u32) -> WreathClassFn {
        WreathClassFn { group: group.clone(), n, values: BTreeMap::new() }
    }

    /// Builds from a value function evaluated on every type.
    pub fn from_fn(group: &Arc<GroupData>, n: u32, f: impl Fn(&PartFn) -> Cyclo) -> WreathClassFn {
        let mut out = WreathClassFn::zero(group, n);
        for rho in types(group, n) {
            let v = f(&rho);
            out.set(rho, v);
        }
        out
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, rho: &PartFn) -> Cyclo {
        self.values.get(rho).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn set(&mut self, rho: PartFn, v: Cyclo) {
        assert_eq!(rho.norm(), self.n, "type {rho} has the wrong size");
        if v.is_zero() {
            self.values.remove(&rho);
        } else {
            self.values.insert(rho, v);
        }
    }

    /// Nonzero values in canonical type order.
    pub fn support(&self) -> impl Iterator<Item = (&PartFn, &Cyclo)> {
        self.values.iter()
    }

    pub fn add(&self, other: &WreathClassFn) -> WreathClassFn {
        let mut out = self.clone();
        for (k, v) in &other.values {
            let s = &out.value(k) + v;
            out.set(k.clone(), s);
        }
        out
    }

    pub fn scale(&self, s: &Cyclo) -> WreathClassFn {
        let mut out = WreathClassFn::zero(&self.group, self.n);
        for (k, v) in &self.values {
            out.set(k.clone(), v * s);
        }
        out
    }

    /// Pointwise product.
    pub fn mul_pointwise(&self, other: &WreathClassFn) -> WreathClassFn {
        let mut out = WreathClassFn::zero(&self.group, self.n);
        for (k, v) in &self.values {
            out.set(k.clone(), v * &other.value(k));
        }
        out
    }
}

impl fmt::Display for WreathClassFn {
    /// `{type: value, ...}` over the support.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        write!(f, "}}")
    }
}

/// η_n(γ)(ρ) = ∏_c γ(c)^{l(ρ(c))}
pub fn eta_n(gamma: &ClassFn, n: u32) -> WreathClassFn {
    WreathClassFn::from_fn(gamma.group(), n, |rho| {
        let mut v = Cyclo::one();
        for (c, l) in rho.entries().iter().enumerate() {
            v *= &gamma.at(c).pow(l.len() as u32);
        }
        v
    })
}

/// ε_n(γ)(ρ) = (−1)^n ∏_c (−γ(c))^{l(ρ(c))}
pub fn epsilon_n(gamma: &ClassFn, n: u32) -> WreathClassFn {
    WreathClassFn::from_fn(gamma.group(), n, |rho| {
        let mut v = Cyclo::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
        for (c, l) in rho.entries().iter().enumerate() {
            v *= &(-gamma.at(c)).pow(l.len() as u32);
        }
        v
    })
}

/// σ_n(c): value n ζ_c on the type with a single n-cycle in class c.
pub fn sigma_class(group: &Arc<GroupData>, c: usize, n: u32) -> WreathClassFn {
    let mut out = WreathClassFn::zero(group, n);
    let rho = PartFn::single(group.num_classes(), c, Partition::new(vec![n]));
    out.set(rho, Cyclo::from_int(n as i64 * group.zeta()[c] as i64));
    out
}

/// σ_n(γ) = Σ_c ζ_c^{-1} γ(c) σ_n(c): value n γ(c) on each single n-cycle type.
pub fn sigma_gamma(gamma: &ClassFn, n: u32) -> WreathClassFn {
    let group = gamma.group();
    let mut out = WreathClassFn::zero(group, n);
    for c in 0..group.num_classes() {
        let rho = PartFn::single(group.num_classes(), c, Partition::new(vec![n]));
        out.set(rho, gamma.at(c).scale(&Rational::from_integer(BigInt::from(n))));
    }
    out
}

/// σ_ρ: value Z_ρ at type ρ and 0 elsewhere.
pub fn sigma_rho(group: &Arc<GroupData>, rho: &PartFn) -> WreathClassFn {
    let mut out = WreathClassFn::zero(group, rho.norm());
    out.set(rho.clone(), Cyclo::from_rational(centralizer_order(group, rho)));
    out
}

/// ⟨f, g⟩_{ξ,Γ_n} = Σ_ρ Z_ρ^{-1} η_n(ξ)(ρ) f(ρ) g(ρ̄)
pub fn weighted_pairing_n(xf: &XiForm, f: &WreathClassFn, g: &WreathClassFn) -> Result<Cyclo, Error> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(format!("n = {} against n = {}", f.n, g.n)));
    }
    if !same_group(&f.group, &g.group) || !same_group(&f.group, xf.group()) {
        return Err(Error::GroupMismatch);
    }
    let grp = &f.group;
    let mut s = Cyclo::zero();
    for (rho, fv) in &f.values {
        let gv = g.value(&dual_type(grp, rho));
        if gv.is_zero() {
            continue;
        }
        let mut w = Cyclo::one();
        for (c, l) in rho.entries().iter().enumerate() {
            w *= &xf.xi().at(c).pow(l.len() as u32);
        }
        let z = centralizer_order(grp, rho);
        s += &(&(&w * fv) * &gv).scale(&(Rational::from_integer(1.into()) / z));
    }
    Ok(s)
}

/// The standard form on R(Γ_n).
pub fn standard_pairing_n(f: &WreathClassFn, g: &WreathClassFn) -> Result<Cyclo, Error> {
    let xf = crate::forms::trivial_xi(&f.group);
    weighted_pairing_n(&xf, f, g)
}

/// The Hopf product Ind(f ⊗ g), routed through the characteristic map.
pub fn induction_product(f: &WreathClassFn, g: &WreathClassFn) -> Result<WreathClassFn, Error> {
    if !same_group(&f.group, &g.group) {
        return Err(Error::GroupMismatch);
    }
    let prod = crate::fock::ch(f).mul(&crate::fock::ch(g));
    Ok(crate::fock::ch_inverse(&f.group, &prod, f.n + g.n))
}

/// An element (g, σ) of Γ_n; `sigma[i]` is σ(i) on 0..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub g: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl WreathElement {
    pub fn identity(n: usize) -> WreathElement {
        WreathElement { g: vec![0; n], sigma: (0..n).collect() }
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.sigma.len()];
        for (i, &s) in self.sigma.iter().enumerate() {
            inv[s] = i;
        }
        inv
    }

    /// (g, σ)·(h, τ) = (g σ(h), στ) with σ(h)_i = h_{σ^{-1}(i)}.
    pub fn mul(&self, other: &WreathElement, group: &GroupData) -> WreathElement {
        let inv = self.inverse_perm();
        let g = (0..self.g.len()).map(|i| group.mul(self.g[i], other.g[inv[i]])).collect();
        let sigma = other.sigma.iter().map(|&t| self.sigma[t]).collect();
        WreathElement { g, sigma }
    }

    pub fn inverse(&self, group: &GroupData) -> WreathElement {
        let inv = self.inverse_perm();
        // σ^{-1}(g^{-1})_i = g^{-1}_{σ(i)}
        let g = (0..self.g.len()).map(|i| group.inverse(self.g[self.sigma[i]])).collect();
        WreathElement { g, sigma: inv }
    }
}

/// The type of x: for each cycle (i_1 … i_k) of σ with σ(i_j) = i_{j+1}, the
/// class of g_{i_k} ⋯ g_{i_1} receives a part k.
pub fn type_of(x: &WreathElement, group: &GroupData) -> PartFn {
    let n = x.sigma.len();
    let mut seen = vec![false; n];
    let mut parts: Vec<Vec<u32>> = vec![Vec::new(); group.num_classes()];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut prod = 0usize;
        let mut i = start;
        let mut len = 0;
        while !seen[i] {
            seen[i] = true;
            prod = group.mul(x.g[i], prod);
            i = x.sigma[i];
            len += 1;
        }
        parts[group.class_of(prod)].push(len);
    }
    PartFn::from_parts(parts.into_iter().map(Partition::new).collect())
}

/// Γ_n listed element by element, with its conjugacy classes.
pub struct WreathGroup {
    pub group: Arc<GroupData>,
    pub n: usize,
    pub elements: Vec<WreathElement>,
    index: HashMap<WreathElement, usize>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl WreathGroup {
    pub fn order_of(group: &GroupData, n: usize) -> u128 {
        (group.order() as u128).pow(n as u32) * (1..=n as u128).product::<u128>()
    }

    pub fn build(group: &Arc<GroupData>, n: usize) -> WreathGroup {
        let mut elements = Vec::new();
        let k = group.order();
        for sigma in permutations(n) {
            let total = k.pow(n as u32);
            for mut code in 0..total {
                let mut g = vec![0; n];
                for slot in g.iter_mut() {
                    *slot = code % k;
                    code /= k;
                }
                elements.push(WreathElement { g, sigma: sigma.clone() });
            }
        }
        let index: HashMap<WreathElement, usize> =
            elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let inverses: Vec<WreathElement> = elements.iter().map(|e| e.inverse(group)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for x in 0..elements.len() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for (y, yi) in elements.iter().zip(&inverses) {
                let c = y.mul(&elements[x], group).mul(yi, group);
                let ci = index[&c];
                if class_of[ci] == usize::MAX {
                    class_of[ci] = id;
                    members.push(ci);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        WreathGroup { group: group.clone(), n, elements, index, class_of, classes }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self, x: &WreathElement) -> usize {
        self.index[x]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b], &self.group)]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse(&self.group)]
    }

    /// Class-algebra structure constants: a[C][D][E] = #{x ∈ C : x^{-1}e ∈ D}
    /// for a fixed e ∈ E.
    pub fn class_structure_constants(&self) -> Vec<Vec<Vec<u64>>> {
        let k = self.classes.len();
        let mut a = vec![vec![vec![0u64; k]; k]; k];
        for (e_class, members) in self.classes.iter().enumerate() {
            let e = members[0];
            for x in 0..self.order() {
                let y = self.mul(self.inverse(x), e);
                a[self.class_of[x]][self.class_of[y]][e_class] += 1;
            }
        }
        a
    }
}

#[derive(Clone, Debug)]
pub struct GenuineReport {
    pub degree_positive_integer: bool,
    pub norm_one: bool,
    pub central_characters_multiplicative: bool,
}

impl GenuineReport {
    pub fn pass(&self) -> bool {
        self.degree_positive_integer && self.norm_one && self.central_characters_multiplicative
    }
}

/// Element-level test that a class function is an irreducible character:
/// positive integer degree, norm one over all elements, and central
/// characters ω_C = |C| χ(C)/χ(1) respecting the class-algebra structure
/// constants.
pub fn genuine_character_check(
    wg: &WreathGroup,
    structure: &[Vec<Vec<u64>>],
    chi: &WreathClassFn,
) -> GenuineReport {
    let group = &wg.group;
    let value_at = |x: usize| chi.value(&type_of(&wg.elements[x], group));
    let id = wg.index(&WreathElement::identity(wg.n));
    let deg = value_at(id);
    let degree_positive_integer = deg.to_integer().is_some_and(|d| d > BigInt::from(0));
    let mut norm = Cyclo::zero();
    for x in 0..wg.order() {
        norm += &(&value_at(x) * &value_at(wg.inverse(x)));
    }
    let norm_one = norm == Cyclo::from_int(wg.order() as i64);
    let mut central_characters_multiplicative = false;
    if !deg.is_zero() {
        let inv_deg = deg.inv().expect("nonzero");
        let omega: Vec<Cyclo> = wg
            .classes
            .iter()
            .map(|m| &(&value_at(m[0]) * &Cyclo::from_int(m.len() as i64)) * &inv_deg)
            .collect();
        let k = omega.len();
        central_characters_multiplicative = (0..k).all(|c| {
            (0..k).all(|d| {
                let rhs: Cyclo =
                    (0..k).map(|e| &omega[e] * &Cyclo::from_int(structure[c][d][e] as i64)).sum();
                &omega[c] * &omega[d] == rhs
            })
        });
    }
    GenuineReport { degree_positive_integer, norm_one, central_characters_multiplicative }
}
