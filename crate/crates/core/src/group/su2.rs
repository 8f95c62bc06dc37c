//! Finite subgroups of SU(2) as explicit 2×2 matrices over cyclotomic fields,
//! together with their built-in character tables.

use crate::scalar::{rat, Cyclo};

pub type Mat2 = [Cyclo; 4];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
        &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
        &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
        &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
    ]
}

pub fn identity() -> Mat2 {
    [Cyclo::one(), Cyclo::zero(), Cyclo::zero(), Cyclo::one()]
}

pub fn trace(a: &Mat2) -> Cyclo {
    &a[0] + &a[3]
}

fn zeta(n: u32, k: i64) -> Cyclo {
    Cyclo::root_of_unity(n, k)
}

/// a + b i + c j + d k  ↦  [[a + b·ι, c + d·ι], [−c + d·ι, a − b·ι]], ι = ζ_4.
pub fn quaternion(a: &Cyclo, b: &Cyclo, c: &Cyclo, d: &Cyclo) -> Mat2 {
    let iota = zeta(4, 1);
    [
        a + &(b * &iota),
        c + &(d * &iota),
        &(-c) + &(d * &iota),
        a - &(b * &iota),
    ]
}

fn q(a: Cyclo, b: Cyclo, c: Cyclo, d: Cyclo) -> Mat2 {
    quaternion(&a, &b, &c, &d)
}

fn n(k: i64) -> Cyclo {
    Cyclo::from_int(k)
}

fn half() -> Cyclo {
    Cyclo::from_rational(rat(1, 2))
}

/// √2 = ζ_8 + ζ_8^{-1}
pub fn sqrt2() -> Cyclo {
    &zeta(8, 1) + &zeta(8, 7)
}

/// (1 + √5)/2 = 1 + ζ_5 + ζ_5^{-1}
pub fn golden() -> Cyclo {
    &(&n(1) + &zeta(5, 1)) + &zeta(5, 4)
}

pub type CharFormula = Box<dyn Fn(&Mat2) -> Vec<Cyclo>>;

/// How the character table of a family is obtained.
pub enum CharRule {
    /// Characters as closed-form functions of the defining matrix.
    Formula(CharFormula),
    /// Fixed table: one representative matrix per column, rows = irreducibles.
    Fixed { reps: Vec<Mat2>, rows: Vec<Vec<Cyclo>> },
}

pub struct Family {
    pub gens: Vec<Mat2>,
    /// Conductor large enough to hold all matrix entries.
    pub entry_conductor: u32,
    pub rule: CharRule,
    pub labels: Vec<String>,
}

pub fn cyclic(m: u32) -> Family {
    let gens = vec![[zeta(m, 1), n(0), n(0), zeta(m, -1)]];
    let labels = (0..m).map(|j| format!("chi{j}")).collect();
    Family {
        gens,
        entry_conductor: m,
        // γ_j(g) = x_00^j
        rule: CharRule::Formula(Box::new(move |x: &Mat2| (0..m).map(|j| x[0].pow(j)).collect())),
        labels,
    }
}

/// Binary dihedral group of order 4m (m ≥ 2): a = diag(ζ_{2m}, ζ_{2m}^{-1}),
/// b = [[0,1],[-1,0]], b² = a^m, b a b^{-1} = a^{-1}.
pub fn binary_dihedral(m: u32) -> Family {
    let a = [zeta(2 * m, 1), n(0), n(0), zeta(2 * m, -1)];
    let b = [n(0), n(1), n(-1), n(0)];
    // χ(b) for the 1-dimensional characters with χ(a) = -1
    let beta = if m.is_multiple_of(2) { n(1) } else { zeta(4, 1) };
    let rule = move |x: &Mat2| -> Vec<Cyclo> {
        let diagonal = x[1].is_zero();
        let mut row = Vec::with_capacity(m as usize + 3);
        if diagonal {
            // x = a^l, x_00 = ζ^l, (x_00)^m = (-1)^l
            let s = x[0].pow(m);
            row.push(n(1));
            row.push(n(1));
            row.push(s.clone());
            row.push(s);
            for k in 1..m {
                row.push(&x[0].pow(k) + &x[3].pow(k));
            }
        } else {
            // x = a^l b, x_01 = ζ^l
            let s = x[1].pow(m);
            row.push(n(1));
            row.push(n(-1));
            row.push(&s * &beta);
            row.push(-(&s * &beta));
            for _ in 1..m {
                row.push(n(0));
            }
        }
        row
    };
    let mut labels = vec!["chi0".to_string(), "chi0'".into(), "chi1".into(), "chi1'".into()];
    labels.extend((1..m).map(|k| format!("rho{k}")));
    Family {
        gens: vec![a, b],
        entry_conductor: (2 * m).max(4),
        rule: CharRule::Formula(Box::new(rule)),
        labels,
    }
}

fn unit_i() -> Mat2 {
    q(n(0), n(1), n(0), n(0))
}

fn unit_j() -> Mat2 {
    q(n(0), n(0), n(1), n(0))
}

/// (1 + i + j + k)/2, of order 6
fn hurwitz_s() -> Mat2 {
    q(half(), half(), half(), half())
}

fn pow(m: &Mat2, e: u32) -> Mat2 {
    let mut r = identity();
    for _ in 0..e {
        r = mat_mul(&r, m);
    }
    r
}

/// Binary tetrahedral group (order 24).
pub fn binary_tetrahedral() -> Family {
    let s = hurwitz_s();
    let reps = vec![identity(), pow(&unit_i(), 2), unit_i(), s.clone(), pow(&s, 5), pow(&s, 2), pow(&s, 4)];
    let w = zeta(3, 1);
    let w2 = zeta(3, 2);
    let rows = vec![
        vec![n(1), n(1), n(1), n(1), n(1), n(1), n(1)],
        vec![n(1), n(1), n(1), w.clone(), w2.clone(), w2.clone(), w.clone()],
        vec![n(1), n(1), n(1), w2.clone(), w.clone(), w.clone(), w2.clone()],
        vec![n(2), n(-2), n(0), n(1), n(1), n(-1), n(-1)],
        vec![n(2), n(-2), n(0), w.clone(), w2.clone(), -w2.clone(), -w.clone()],
        vec![n(2), n(-2), n(0), w2.clone(), w.clone(), -w.clone(), -w2.clone()],
        vec![n(3), n(3), n(-1), n(0), n(0), n(0), n(0)],
    ];
    Family {
        gens: vec![unit_i(), unit_j(), s],
        entry_conductor: 4,
        rule: CharRule::Fixed { reps, rows },
        labels: ["1", "1a", "1b", "2", "2a", "2b", "3"].iter().map(|s| s.to_string()).collect(),
    }
}

/// Binary octahedral group (order 48).
pub fn binary_octahedral() -> Family {
    let s = hurwitz_s();
    let r2 = sqrt2();
    let inv_r2 = r2.scale(&rat(1, 2));
    // (1 + i)/√2, of order 8
    let t = q(inv_r2.clone(), inv_r2, n(0), n(0));
    let reps = vec![
        identity(),
        pow(&unit_i(), 2),
        unit_i(),
        pow(&s, 2),
        s.clone(),
        t.clone(),
        pow(&t, 3),
        mat_mul(&t, &unit_j()),
    ];
    let rows = vec![
        vec![n(1), n(1), n(1), n(1), n(1), n(1), n(1), n(1)],
        vec![n(1), n(1), n(1), n(1), n(1), n(-1), n(-1), n(-1)],
        vec![n(2), n(2), n(2), n(-1), n(-1), n(0), n(0), n(0)],
        vec![n(2), n(-2), n(0), n(-1), n(1), r2.clone(), -r2.clone(), n(0)],
        vec![n(2), n(-2), n(0), n(-1), n(1), -r2.clone(), r2.clone(), n(0)],
        vec![n(3), n(3), n(-1), n(0), n(0), n(1), n(1), n(-1)],
        vec![n(3), n(3), n(-1), n(0), n(0), n(-1), n(-1), n(1)],
        vec![n(4), n(-4), n(0), n(1), n(-1), n(0), n(0), n(0)],
    ];
    Family {
        gens: vec![unit_i(), unit_j(), s, t],
        entry_conductor: 8,
        rule: CharRule::Fixed { reps, rows },
        labels: ["1", "1a", "2", "2a", "2b", "3", "3a", "4"].iter().map(|s| s.to_string()).collect(),
    }
}

/// Binary icosahedral group (order 120).
pub fn binary_icosahedral() -> Family {
    let phi = golden();
    let phi_inv = &phi - &n(1);
    // (φ + φ^{-1} i + j)/2, of order 10
    let g = q(phi.scale(&rat(1, 2)), phi_inv.scale(&rat(1, 2)), half(), n(0));
    let s = hurwitz_s();
    let reps = vec![
        identity(),
        pow(&unit_i(), 2),
        unit_i(),
        s.clone(),
        pow(&s, 2),
        g.clone(),
        pow(&g, 3),
        pow(&g, 2),
        pow(&g, 4),
    ];
    // natural traces at the representatives, and their Galois conjugates under √5 ↦ −√5
    let one_minus_phi = &n(1) - &phi;
    let t = vec![n(2), n(-2), n(0), n(1), n(-1), phi.clone(), one_minus_phi.clone(), phi_inv.clone(), -phi.clone()];
    let tc = vec![n(2), n(-2), n(0), n(1), n(-1), one_minus_phi, phi.clone(), -phi.clone(), phi_inv];
    // symmetric powers of the natural representation: U_k(t/2)
    let sym = |x: &Cyclo, k: u32| -> Cyclo {
        let mut prev = n(1);
        let mut cur = x.clone();
        if k == 0 {
            return prev;
        }
        for _ in 1..k {
            let next = &(x * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    };
    let row = |f: &dyn Fn(usize) -> Cyclo| -> Vec<Cyclo> { (0..9).map(f).collect() };
    let rows = vec![
        row(&|c| sym(&t[c], 0)),
        row(&|c| sym(&t[c], 1)),
        row(&|c| sym(&tc[c], 1)),
        row(&|c| sym(&t[c], 2)),
        row(&|c| sym(&tc[c], 2)),
        row(&|c| sym(&t[c], 3)),
        row(&|c| &t[c] * &tc[c]),
        row(&|c| sym(&t[c], 4)),
        row(&|c| sym(&t[c], 5)),
    ];
    Family {
        gens: vec![unit_i(), unit_j(), g],
        entry_conductor: 20,
        rule: CharRule::Fixed { reps, rows },
        labels: ["1", "2", "2'", "3", "3'", "4", "4'", "5", "6"].iter().map(|s| s.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units_square_to_minus_one() {
        let m1 = q(n(-1), n(0), n(0), n(0));
        assert!(pow(&unit_i(), 2).iter().zip(&m1).all(|(a, b)| a == b));
        assert!(pow(&unit_j(), 2).iter().zip(&m1).all(|(a, b)| a == b));
        let k = mat_mul(&unit_i(), &unit_j());
        assert!(pow(&k, 2).iter().zip(&m1).all(|(a, b)| a == b));
    }

    #[test]
    fn generator_orders() {
        let s6 = pow(&hurwitz_s(), 6);
        assert!(s6.iter().zip(&identity()).all(|(a, b)| a == b));
        assert_eq!(trace(&hurwitz_s()), n(1));
        assert_eq!(&sqrt2() * &sqrt2(), n(2));
        let phi = golden();
        assert_eq!(&phi * &phi, &phi + &n(1));
    }
}
