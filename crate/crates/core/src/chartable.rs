//! Character tables of Γ_n from matrix coefficients ⟨s_{λ,−ω(λ)}, a'_{-μ}⟩.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Error;
use crate::fock::{class_monomial, inner_product, schur};
use crate::forms::trivial_xi;
use crate::group::GroupData;
use crate::lattice::{fock_inner, FockVec, LatticeVec};
use crate::partitions::{enumerate_partfn, PartFn};
use crate::scalar::{Cyclo, Rational};
use crate::symfun::mn_character;
use crate::vertex::VertexAlgebra;
use crate::wreath::{centralizer_order, dual_type, types, WreathClassFn};

/// How table entries are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Pair s_λ ∈ S_Γ with a'_{-μ} directly.
    Fock,
    /// Build s_{λ,−ω(λ)} from vertex-operator modes and pair in F_Γ.
    Vertex,
}

#[derive(Clone, Debug)]
pub struct CharTable {
    pub group: Arc<GroupData>,
    pub n: u32,
    /// Irreducible labels λ ∈ P_n(Γ*).
    pub rows: Vec<PartFn>,
    /// Class types μ ∈ P_n(Γ_*).
    pub cols: Vec<PartFn>,
    /// Centralizer orders Z_μ.
    pub z: Vec<Rational>,
    pub values: Vec<Vec<Cyclo>>,
}

/// ⟨s_λ, a'_{-μ}⟩ under the standard form.
pub fn character_value(group: &Arc<GroupData>, lambda: &PartFn, mu: &PartFn) -> Result<Cyclo, Error> {
    if lambda.norm() != mu.norm() {
        return Err(Error::SizeMismatch(format!("‖λ‖ = {} but ‖μ‖ = {}", lambda.norm(), mu.norm())));
    }
    let xf = trivial_xi(group);
    Ok(inner_product(&schur(lambda), &class_monomial(group, mu), &xf))
}

/// ⟨s_{λ,−ω(λ)}, a'_{-μ} ⊗ e^0⟩ with the state built from vertex operators.
pub fn character_value_vertex(va: &VertexAlgebra, group: &GroupData, lambda: &PartFn, mu: &PartFn) -> Result<Cyclo, Error> {
    if lambda.norm() != mu.norm() {
        return Err(Error::SizeMismatch(format!("‖λ‖ = {} but ‖μ‖ = {}", lambda.norm(), mu.norm())));
    }
    let alpha = &LatticeVec::zero(va.width()) - &VertexAlgebra::omega(lambda);
    let state = va.schur_state(lambda, &alpha)?;
    let target = FockVec::from_sym(class_monomial(group, mu), LatticeVec::zero(va.width()));
    Ok(fock_inner(&state, &target, va.xi_form()))
}

/// The full table, rows and columns in canonical order.
pub fn chartable(group: &Arc<GroupData>, n: u32, route: Route) -> Result<CharTable, Error> {
    let width = group.num_classes();
    let rows = enumerate_partfn(width, n);
    let cols = types(group, n);
    let z: Vec<Rational> = cols.iter().map(|mu| centralizer_order(group, mu)).collect();
    let xf = trivial_xi(group);
    let col_vecs: Vec<_> = cols.iter().map(|mu| class_monomial(group, mu)).collect();
    let values: Result<Vec<Vec<Cyclo>>, Error> = match route {
        Route::Fock => Ok(rows
            .par_iter()
            .map(|lambda| {
                let s = schur(lambda);
                col_vecs.iter().map(|c| inner_product(&s, c, &xf)).collect()
            })
            .collect()),
        Route::Vertex => {
            let va = VertexAlgebra::new(&xf)?;
            rows.par_iter()
                .map(|lambda| {
                    let alpha = &LatticeVec::zero(width) - &VertexAlgebra::omega(lambda);
                    let state = va.schur_state(lambda, &alpha)?;
                    let s = state.sector(&LatticeVec::zero(width));
                    Ok(col_vecs.iter().map(|c| inner_product(&s, c, &xf)).collect())
                })
                .collect()
        }
    };
    Ok(CharTable { group: group.clone(), n, rows, cols, z, values: values? })
}

#[derive(Clone, Debug)]
pub struct OrthReport {
    /// Σ_μ Z_μ^{-1} χ^λ(μ) χ^{λ'}(μ̄) = δ_{λλ'}
    pub rows: bool,
    /// Σ_λ χ^λ(μ) χ^λ(μ̄') = δ_{μμ'} Z_μ
    pub columns: bool,
    pub failures: Vec<String>,
}

impl OrthReport {
    pub fn pass(&self) -> bool {
        self.rows && self.columns
    }
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn dual_col(&self) -> Vec<usize> {
        self.cols
            .iter()
            .map(|mu| {
                let d = dual_type(&self.group, mu);
                self.cols.iter().position(|c| *c == d).expect("dual type present")
            })
            .collect()
    }

    pub fn orthogonality(&self) -> OrthReport {
        let dual = self.dual_col();
        let k = self.rows.len();
        let mut failures = Vec::new();
        let inv_z: Vec<Cyclo> =
            self.z.iter().map(|z| Cyclo::from_rational(Rational::from_integer(1.into()) / z)).collect();
        for a in 0..k {
            for b in 0..k {
                let s: Cyclo = (0..self.cols.len())
                    .map(|c| &(&self.values[a][c] * &self.values[b][dual[c]]) * &inv_z[c])
                    .sum();
                if s != Cyclo::from_int((a == b) as i64) {
                    failures.push(format!("rows {} and {}: {}", self.rows[a], self.rows[b], s));
                }
            }
        }
        let rows_ok = failures.is_empty();
        for c in 0..self.cols.len() {
            for d in 0..self.cols.len() {
                let s: Cyclo = (0..k).map(|a| &self.values[a][c] * &self.values[a][dual[d]]).sum();
                let expect = if c == d { Cyclo::from_rational(self.z[c].clone()) } else { Cyclo::zero() };
                if s != expect {
                    failures.push(format!("columns {} and {}: {}", self.cols[c], self.cols[d], s));
                }
            }
        }
        let columns_ok = failures.iter().all(|f| f.starts_with("rows"));
        OrthReport { rows: rows_ok, columns: columns_ok, failures }
    }

    /// Row λ as a class function on Γ_n.
    pub fn row_class_fn(&self, i: usize) -> WreathClassFn {
        let mut f = WreathClassFn::zero(&self.group, self.n);
        for (c, mu) in self.cols.iter().enumerate() {
            f.set(mu.clone(), self.values[i][c].clone());
        }
        f
    }

    /// Row labels in irreducible-label notation.
    pub fn row_labels(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.label("g")).collect()
    }

    pub fn col_labels(&self) -> Vec<String> {
        self.cols.iter().map(|c| c.to_string()).collect()
    }
}

/// The symmetric-group table from the Murnaghan–Nakayama rule, laid out like
/// `chartable` for the trivial group.
pub fn mn_table(n: u32) -> Vec<Vec<i64>> {
    let parts = enumerate_partfn(1, n);
    parts.iter().map(|l| parts.iter().map(|m| mn_character(l.get(0), m.get(0))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_rows() {
        let g = Arc::new(GroupData::build("trivial").unwrap());
        let t = chartable(&g, 3, Route::Vertex).unwrap();
        let want = mn_table(3);
        for (row, w) in t.values.iter().zip(&want) {
            let got: Vec<Cyclo> = row.clone();
            let w: Vec<Cyclo> = w.iter().map(|&x| Cyclo::from_int(x)).collect();
            assert_eq!(got, w);
        }
        assert!(t.orthogonality().pass());
    }

    #[test]
    fn size_mismatch() {
        let g = Arc::new(GroupData::build("trivial").unwrap());
        let l = PartFn::single(1, 0, crate::partitions::Partition::new(vec![2]));
        let m = PartFn::single(1, 0, crate::partitions::Partition::new(vec![3]));
        assert!(character_value(&g, &l, &m).is_err());
    }
}
