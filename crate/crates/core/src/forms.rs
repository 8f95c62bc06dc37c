//! Class functions on Γ, the standard and ξ-weighted pairings, the matrix A
//! and the McKay eigenvector identity.

use std::sync::Arc;

use crate::error::Error;
use crate::group::GroupData;
use crate::linalg::{self, Matrix};
use crate::scalar::{Cyclo, Rational};

/// A class function on Γ, stored by class.
#[derive(Clone, Debug)]
pub struct ClassFn {
    group: Arc<GroupData>,
    values: Vec<Cyclo>,
}

impl PartialEq for ClassFn {
    fn eq(&self, other: &ClassFn) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

pub(crate) fn same_group(a: &GroupData, b: &GroupData) -> bool {
    std::ptr::eq(a, b) || (a.descriptor() == b.descriptor() && a.num_classes() == b.num_classes())
}

impl ClassFn {
    pub fn new(group: &Arc<GroupData>, values: Vec<Cyclo>) -> Result<ClassFn, Error> {
        if values.len() != group.num_classes() {
            return Err(Error::SizeMismatch(format!(
                "{} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(ClassFn { group: group.clone(), values })
    }

    pub fn zero(group: &Arc<GroupData>) -> ClassFn {
        ClassFn { group: group.clone(), values: vec![Cyclo::zero(); group.num_classes()] }
    }

    /// The irreducible character γ_i.
    pub fn irreducible(group: &Arc<GroupData>, i: usize) -> ClassFn {
        ClassFn { group: group.clone(), values: group.char_table()[i].clone() }
    }

    /// Σ s_i γ_i for integer coefficients.
    pub fn virtual_character(group: &Arc<GroupData>, coeffs: &[i64]) -> ClassFn {
        let mut f = ClassFn::zero(group);
        for (i, &s) in coeffs.iter().enumerate() {
            if s != 0 {
                f = f.add(&ClassFn::irreducible(group, i).scale(&Cyclo::from_int(s)));
            }
        }
        f
    }

    /// Regular character δ = Σ d_i γ_i.
    pub fn regular(group: &Arc<GroupData>) -> ClassFn {
        ClassFn::virtual_character(group, &group.degrees())
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn at(&self, c: usize) -> &Cyclo {
        &self.values[c]
    }

    pub fn add(&self, other: &ClassFn) -> ClassFn {
        ClassFn {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ClassFn) -> ClassFn {
        self.add(&other.scale(&Cyclo::from_int(-1)))
    }

    pub fn mul(&self, other: &ClassFn) -> ClassFn {
        ClassFn {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn scale(&self, s: &Cyclo) -> ClassFn {
        ClassFn { group: self.group.clone(), values: self.values.iter().map(|a| a * s).collect() }
    }

    /// c ↦ f(c^{-1})
    pub fn dual(&self) -> ClassFn {
        let g = &self.group;
        ClassFn {
            group: g.clone(),
            values: (0..g.num_classes()).map(|c| self.values[g.inv_class(c)].clone()).collect(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual().values == self.values
    }

    /// Coordinates in the irreducible basis: f = Σ ⟨f, γ_i⟩ γ_i.
    pub fn irreducible_coords(&self) -> Vec<Cyclo> {
        (0..self.group.num_classes())
            .map(|i| standard_pairing_unchecked(self, &ClassFn::irreducible(&self.group, i)))
            .collect()
    }
}

fn inv_zeta(g: &GroupData, c: usize) -> Rational {
    Rational::new(1.into(), (g.zeta()[c] as i64).into())
}

fn standard_pairing_unchecked(f: &ClassFn, g: &ClassFn) -> Cyclo {
    f.group.pair_values(&f.values, &g.values)
}

/// ⟨f, g⟩ = Σ_c ζ_c^{-1} f(c) g(c^{-1})
pub fn standard_pairing(f: &ClassFn, g: &ClassFn) -> Result<Cyclo, Error> {
    if !same_group(&f.group, &g.group) {
        return Err(Error::GroupMismatch);
    }
    Ok(standard_pairing_unchecked(f, g))
}

/// The weight ξ together with the Gram matrix A = (⟨γ_i, γ_j⟩_ξ).
#[derive(Clone, Debug)]
pub struct XiForm {
    xi: ClassFn,
    a: Matrix,
    label: String,
}

impl XiForm {
    pub fn group(&self) -> &Arc<GroupData> {
        &self.xi.group
    }

    pub fn xi(&self) -> &ClassFn {
        &self.xi
    }

    /// A, rows and columns indexed by irreducibles.
    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclo {
        &self.a[i][j]
    }

    /// "trivial", "mckay" or "custom".
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// A as an integer matrix, when every entry is an integer.
    pub fn integer_matrix(&self) -> Option<Vec<Vec<i64>>> {
        self.a
            .iter()
            .map(|r| r.iter().map(|x| x.to_integer().and_then(|z| i64::try_from(z).ok())).collect())
            .collect()
    }

    /// ⟨x, y⟩_ξ for coordinate vectors in the irreducible basis.
    pub fn pair_coords(&self, x: &[Cyclo], y: &[Cyclo]) -> Cyclo {
        let mut s = Cyclo::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.a[i][j].is_zero() {
                    s += &(&(xi * yj) * &self.a[i][j]);
                }
            }
        }
        s
    }

    /// Whether ξ = γ_0.
    pub fn is_trivial(&self) -> bool {
        self.xi.values.iter().all(|v| v.is_one())
    }
}

/// ⟨f, g⟩_ξ = Σ_c ζ_c^{-1} ξ(c) f(c) g(c^{-1})
pub fn weighted_pairing(xf: &XiForm, f: &ClassFn, g: &ClassFn) -> Result<Cyclo, Error> {
    if !same_group(&f.group, &g.group) || !same_group(&f.group, &xf.xi.group) {
        return Err(Error::GroupMismatch);
    }
    let grp = &f.group;
    Ok((0..grp.num_classes())
        .map(|c| (&(&xf.xi.values[c] * &f.values[c]) * &g.values[grp.inv_class(c)]).scale(&inv_zeta(grp, c)))
        .sum())
}

/// The same form written as Σ_c ζ_c^{-1} ξ(c) f(c^{-1}) g(c).
pub fn weighted_pairing_alt(xf: &XiForm, f: &ClassFn, g: &ClassFn) -> Result<Cyclo, Error> {
    weighted_pairing(xf, g, f)
}

fn build_labeled(group: &Arc<GroupData>, xi: ClassFn, label: &str) -> Result<XiForm, Error> {
    if !same_group(group, &xi.group) {
        return Err(Error::GroupMismatch);
    }
    if !xi.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let r = group.num_classes();
    let mut xf = XiForm { xi, a: Vec::new(), label: label.to_string() };
    let irr: Vec<ClassFn> = (0..r).map(|i| ClassFn::irreducible(group, i)).collect();
    let a: Matrix = (0..r)
        .map(|i| (0..r).map(|j| weighted_pairing(&xf, &irr[i], &irr[j]).expect("same group")).collect())
        .collect();
    for i in 0..r {
        for j in 0..i {
            assert_eq!(a[i][j], a[j][i], "A is symmetric for self-dual ξ");
        }
    }
    xf.a = a;
    Ok(xf)
}

/// a_ij = ⟨γ_i, γ_j⟩_ξ; ξ must satisfy ξ(c) = ξ(c^{-1}).
pub fn build_xi_form(group: &Arc<GroupData>, xi: ClassFn) -> Result<XiForm, Error> {
    let label = if xi.values.iter().all(|v| v.is_one()) { "trivial" } else { "custom" };
    build_labeled(group, xi, label)
}

pub fn trivial_xi(group: &Arc<GroupData>) -> XiForm {
    build_labeled(group, ClassFn::irreducible(group, 0), "trivial").expect("γ_0 is self-dual")
}

/// ξ = d γ_0 − π for a faithful self-dual d-dimensional character π.
pub fn mckay_xi(group: &Arc<GroupData>, pi: &ClassFn, d: i64) -> Result<XiForm, Error> {
    if !pi.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let dd = Cyclo::from_int(d);
    if pi.values[0] != dd {
        return Err(Error::SizeMismatch(format!("π(1) = {} but d = {d}", pi.values[0])));
    }
    if (1..group.num_classes()).any(|c| pi.values[c] == dd) {
        return Err(Error::Corrupt("π is not faithful".into()));
    }
    let xi = ClassFn::irreducible(group, 0).scale(&dd).sub(pi);
    build_labeled(group, xi, "mckay")
}

/// McKay weight from the defining 2-dimensional representation.
pub fn natural_mckay_xi(group: &Arc<GroupData>) -> Result<XiForm, Error> {
    let nat = group
        .natural_character()
        .ok_or_else(|| Error::Corrupt("group has no defining 2-dimensional representation".into()))?;
    let pi = ClassFn::new(group, nat.to_vec())?;
    mckay_xi(group, &pi, 2)
}

/// Builds ξ from a selector: "trivial" or "mckay".
pub fn xi_from_selector(group: &Arc<GroupData>, sel: &str) -> Result<XiForm, Error> {
    match sel {
        "trivial" | "gamma0" => Ok(trivial_xi(group)),
        "mckay" => natural_mckay_xi(group),
        other => Err(Error::Parse(format!("unknown xi selector {other:?}"))),
    }
}

#[derive(Clone, Debug)]
pub struct EigenReport {
    /// Per class column: whether A v = ξ(c) v holds.
    pub columns: Vec<bool>,
}

impl EigenReport {
    pub fn all_pass(&self) -> bool {
        self.columns.iter().all(|&b| b)
    }
}

/// Checks A·v_c = ξ(c)·v_c for every column v_c = (γ_i(c))_i, i.e. AE = ED.
pub fn mckay_eigencheck(xf: &XiForm) -> EigenReport {
    let g = xf.group();
    let t = g.char_table();
    let columns = (0..g.num_classes())
        .map(|c| {
            let v: Vec<Cyclo> = t.iter().map(|row| row[c].clone()).collect();
            let av = linalg::mat_vec(&xf.a, &v);
            av.iter().zip(&v).all(|(x, y)| *x == y * &xf.xi.values[c])
        })
        .collect();
    EigenReport { columns }
}

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub delta: Vec<i64>,
    pub a_delta_zero: bool,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<Vec<Cyclo>>,
}

impl RadicalReport {
    pub fn pass(&self) -> bool {
        self.a_delta_zero && self.kernel_dim == 1
    }
}

/// A·δ = 0 for δ = (d_0, …, d_r) and dim ker A = 1.
pub fn radical_check(xf: &XiForm) -> RadicalReport {
    let delta = xf.group().degrees();
    let dv: Vec<Cyclo> = delta.iter().map(|&d| Cyclo::from_int(d)).collect();
    let a_delta_zero = linalg::mat_vec(&xf.a, &dv).iter().all(|x| x.is_zero());
    let kernel_basis = linalg::kernel(&xf.a);
    RadicalReport { delta, a_delta_zero, kernel_dim: kernel_basis.len(), kernel_basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> Arc<GroupData> {
        Arc::new(GroupData::build(s).unwrap())
    }

    fn ints(m: &Matrix) -> Vec<Vec<i64>> {
        m.iter().map(|r| r.iter().map(|x| i64::try_from(x.to_integer().unwrap()).unwrap()).collect()).collect()
    }

    #[test]
    fn orthonormal_irreducibles_bd8() {
        let g = grp("bd:8");
        for i in 0..5 {
            for j in 0..5 {
                let v = standard_pairing(&ClassFn::irreducible(&g, i), &ClassFn::irreducible(&g, j)).unwrap();
                assert_eq!(v, Cyclo::from_int((i == j) as i64));
            }
        }
        let delta = ClassFn::regular(&g);
        assert_eq!(standard_pairing(&delta, &ClassFn::irreducible(&g, 0)).unwrap(), Cyclo::one());
        assert!(standard_pairing(&ClassFn::zero(&g), &delta).unwrap().is_zero());
    }

    #[test]
    fn affine_a1() {
        let g = grp("cyclic:2");
        let xf = natural_mckay_xi(&g).unwrap();
        assert_eq!(xf.xi().values(), &[Cyclo::from_int(0), Cyclo::from_int(4)]);
        assert_eq!(ints(xf.matrix()), vec![vec![2, -2], vec![-2, 2]]);
        assert!(mckay_eigencheck(&xf).all_pass());
        let rad = radical_check(&xf);
        assert!(rad.pass());
        assert_eq!(rad.kernel_basis[0], vec![Cyclo::one(), Cyclo::one()]);
    }

    #[test]
    fn affine_a2() {
        let g = grp("cyclic:3");
        let xf = natural_mckay_xi(&g).unwrap();
        assert_eq!(ints(xf.matrix()), vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let c1 = g.class_of(1);
        assert_eq!(xf.xi().at(c1), &Cyclo::from_int(3));
    }

    #[test]
    fn trivial_xi_gives_identity() {
        let g = grp("bt");
        let xf = trivial_xi(&g);
        for i in 0..g.num_classes() {
            for j in 0..g.num_classes() {
                assert_eq!(xf.entry(i, j), &Cyclo::from_int((i == j) as i64));
            }
        }
    }

    #[test]
    fn non_self_dual_rejected() {
        let g = grp("cyclic:3");
        assert_eq!(build_xi_form(&g, ClassFn::irreducible(&g, 1)).unwrap_err(), Error::NotSelfDual);
    }
}
