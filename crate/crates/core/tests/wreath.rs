use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use proptest::prelude::*;
use wreath_vo::chartable::{chartable, Route};
use wreath_vo::forms::{natural_mckay_xi, trivial_xi, weighted_pairing, weighted_pairing_alt, ClassFn};
use wreath_vo::group::GroupData;
use wreath_vo::partitions::{big_z, PartFn};
use wreath_vo::scalar::Rational;
use wreath_vo::wreath::{
    centralizer_order, epsilon_n, eta_n, genuine_character_check, induction_product, type_of, types, WreathClassFn,
    WreathElement, WreathGroup,
};
use wreath_vo::Cyclo;

const GROUPS: [&str; 9] = ["trivial", "cyclic:2", "cyclic:3", "cyclic:5", "bd:8", "bd:12", "bt", "bo", "bi"];

fn grp(s: &str) -> Arc<GroupData> {
    Arc::new(GroupData::build(s).unwrap())
}

#[test]
fn group_character_orthogonality() {
    for spec in GROUPS {
        let g = grp(spec);
        let t = g.char_table();
        let k = g.num_classes();
        let order = Cyclo::from_int(g.order() as i64);
        for i in 0..k {
            for j in 0..k {
                let s: Cyclo = (0..k)
                    .map(|c| {
                        let size = Cyclo::from_int(g.classes()[c].len() as i64);
                        &(&t[i][c] * &t[j][g.inv_class(c)]) * &size
                    })
                    .sum();
                let want = if i == j { order.clone() } else { Cyclo::zero() };
                assert_eq!(s, want, "{spec}: rows {i}, {j}");
            }
        }
        let squares: i64 = g.degrees().iter().map(|d| d * d).sum();
        assert_eq!(squares as usize, g.order(), "{spec}");
        for (c, members) in g.classes().iter().enumerate() {
            assert_eq!(members.len() as u64 * g.zeta()[c], g.order() as u64, "{spec}: class {c}");
        }
    }
}

#[test]
fn class_partition_is_conjugation_orbits() {
    for spec in GROUPS {
        let g = grp(spec);
        for x in 0..g.order() {
            for y in 0..g.order() {
                let c = g.mul(g.mul(y, x), g.inverse(y));
                assert_eq!(g.class_of(c), g.class_of(x), "{spec}");
            }
        }
    }
}

/// Conjugacy classes of Γ_n by orbit search, independent of the library's.
fn brute_classes(wg: &WreathGroup) -> Vec<Vec<usize>> {
    let g = &wg.group;
    let mut seen = vec![false; wg.order()];
    let mut out = Vec::new();
    for x in 0..wg.order() {
        if seen[x] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for y in &wg.elements {
            let c = y.mul(&wg.elements[x], g).mul(&y.inverse(g), g);
            orbit.insert(wg.index(&c));
        }
        for &o in &orbit {
            seen[o] = true;
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

#[test]
fn types_are_complete_conjugacy_invariants() {
    let cases = [
        ("trivial", 5),
        ("cyclic:2", 3),
        ("cyclic:3", 3),
        ("cyclic:4", 2),
        ("cyclic:5", 2),
        ("bd:8", 2),
        ("bd:12", 1),
    ];
    for (spec, n) in cases {
        let g = grp(spec);
        let wg = WreathGroup::build(&g, n);
        assert!(wg.order() <= 200);
        assert_eq!(wg.order() as u128, WreathGroup::order_of(&g, n));
        let classes = brute_classes(&wg);
        let mut class_types = BTreeSet::new();
        let mut total = Rational::from_integer(0.into());
        for class in &classes {
            let t = type_of(&wg.elements[class[0]], &g);
            assert!(class.iter().all(|&x| type_of(&wg.elements[x], &g) == t), "{spec}: type not constant");
            assert!(class_types.insert(t.clone()), "{spec}: two classes share type {t}");
            let centralizer = Rational::from_integer((wg.order() / class.len()).into());
            assert_eq!(centralizer_order(&g, &t), centralizer, "{spec}: Z of {t}");
            assert_eq!(big_z(&t, g.zeta()), centralizer);
            total += Rational::from_integer(1.into()) / centralizer;
        }
        assert_eq!(total, Rational::from_integer(1.into()), "{spec}: class equation");
        let listed: BTreeSet<PartFn> = types(&g, n as u32).into_iter().collect();
        assert_eq!(listed, class_types, "{spec} n = {n}");
    }
}

#[test]
fn wreath_multiplication_is_associative_with_inverses() {
    let g = grp("bd:8");
    let wg = WreathGroup::build(&g, 2);
    let e = WreathElement::identity(2);
    for a in wg.elements.iter().step_by(7) {
        assert_eq!(a.mul(&a.inverse(&g), &g), e);
        for b in wg.elements.iter().step_by(11) {
            for c in wg.elements.iter().step_by(13) {
                assert_eq!(a.mul(b, &g).mul(c, &g), a.mul(&b.mul(c, &g), &g));
            }
        }
    }
}

/// Ind from Γ_a × Γ_b to Γ_{a+b} of f × g, by summing over the whole group.
fn induce_by_elements(g: &Arc<GroupData>, f: &WreathClassFn, h: &WreathClassFn) -> HashMap<PartFn, Cyclo> {
    let (a, b) = (f.n() as usize, h.n() as usize);
    let n = a + b;
    let wg = WreathGroup::build(g, n);
    let in_subgroup = |x: &WreathElement| (0..a).all(|i| x.sigma[i] < a);
    let split = |x: &WreathElement| {
        let left = WreathElement { g: x.g[..a].to_vec(), sigma: x.sigma[..a].to_vec() };
        let right = WreathElement { g: x.g[a..].to_vec(), sigma: x.sigma[a..].iter().map(|&s| s - a).collect() };
        (left, right)
    };
    let sub_order = (WreathGroup::order_of(g, a) * WreathGroup::order_of(g, b)) as i64;
    let inv = Cyclo::from_rational(Rational::new(1.into(), sub_order.into()));
    let mut out = HashMap::new();
    for class in &wg.classes {
        let x = &wg.elements[class[0]];
        let mut s = Cyclo::zero();
        for y in &wg.elements {
            let c = y.mul(x, g).mul(&y.inverse(g), g);
            if in_subgroup(&c) {
                let (l, r) = split(&c);
                s += &(&f.value(&type_of(&l, g)) * &h.value(&type_of(&r, g)));
            }
        }
        out.insert(type_of(x, g), &s * &inv);
    }
    out
}

#[test]
fn induction_product_matches_element_level_induction() {
    for (spec, a, b) in [("trivial", 1, 2), ("trivial", 2, 2), ("trivial", 1, 3), ("cyclic:2", 1, 1), ("cyclic:2", 1, 2), ("cyclic:3", 1, 1)] {
        let g = grp(spec);
        let ta = chartable(&g, a, Route::Fock).unwrap();
        let tb = chartable(&g, b, Route::Fock).unwrap();
        for i in 0..ta.len() {
            for j in 0..tb.len() {
                let f = ta.row_class_fn(i);
                let h = tb.row_class_fn(j);
                let fast = induction_product(&f, &h).unwrap();
                for (rho, v) in induce_by_elements(&g, &f, &h) {
                    assert_eq!(fast.value(&rho), v, "{spec}: {} ⊙ {} at {rho}", ta.rows[i], tb.rows[j]);
                }
            }
        }
    }
}

#[test]
fn virtual_exponential_expands_by_induction() {
    // η_n(β − γ) = Σ_k (−1)^k η_{n−k}(β) ⊙ ε_k(γ)
    for spec in ["trivial", "cyclic:2", "cyclic:3"] {
        let g = grp(spec);
        let k = g.num_classes();
        let beta = ClassFn::irreducible(&g, 0);
        let gamma = ClassFn::irreducible(&g, k - 1);
        let diff = beta.sub(&gamma);
        for n in 0..=3u32 {
            let mut sum = WreathClassFn::zero(&g, n);
            for j in 0..=n {
                let term = induction_product(&eta_n(&beta, n - j), &epsilon_n(&gamma, j)).unwrap();
                let sign = Cyclo::from_int(if j % 2 == 0 { 1 } else { -1 });
                sum = sum.add(&term.scale(&sign));
            }
            assert_eq!(eta_n(&diff, n), sum, "{spec}, n = {n}");
        }
    }
}

#[test]
fn exponentials_of_irreducibles_are_irreducible() {
    for (spec, n) in [("cyclic:2", 3), ("cyclic:3", 2), ("bd:8", 2), ("trivial", 4)] {
        let g = grp(spec);
        let wg = WreathGroup::build(&g, n);
        let structure = wg.class_structure_constants();
        for i in 0..g.num_classes() {
            let gamma = ClassFn::irreducible(&g, i);
            for chi in [eta_n(&gamma, n as u32), epsilon_n(&gamma, n as u32)] {
                let rep = genuine_character_check(&wg, &structure, &chi);
                assert!(rep.pass(), "{spec}: {rep:?}");
                let deg = g.degrees()[i].pow(n as u32);
                assert_eq!(chi.value(&type_of(&WreathElement::identity(n), &g)), Cyclo::from_int(deg));
            }
        }
    }
}

#[test]
fn mckay_matrix_counts_tensor_multiplicities() {
    // a_ij = 2δ_ij − mult(γ_j, π ⊗ γ_i) with π the natural representation
    for spec in ["cyclic:2", "cyclic:4", "bd:8", "bt"] {
        let g = grp(spec);
        let xf = natural_mckay_xi(&g).unwrap();
        let pi: Vec<Cyclo> = g.natural_character().unwrap().to_vec();
        let t = g.char_table();
        let k = g.num_classes();
        for i in 0..k {
            for j in 0..k {
                let prod: Vec<Cyclo> = (0..k).map(|c| &pi[c] * &t[i][c]).collect();
                let mult = g.pair_values(&prod, &t[j]);
                let want = &Cyclo::from_int(if i == j { 2 } else { 0 }) - &mult;
                assert_eq!(xf.entry(i, j), &want, "{spec}: ({i}, {j})");
            }
        }
    }
}

fn coeffs(k: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weighted_pairing_is_symmetric(f in coeffs(5), h in coeffs(5), spec in prop::sample::select(vec!["bd:8", "cyclic:5"])) {
        let g = grp(spec);
        let f = ClassFn::virtual_character(&g, &f);
        let h = ClassFn::virtual_character(&g, &h);
        for xf in [trivial_xi(&g), natural_mckay_xi(&g).unwrap()] {
            let a = weighted_pairing(&xf, &f, &h).unwrap();
            prop_assert_eq!(&a, &weighted_pairing(&xf, &h, &f).unwrap());
            prop_assert_eq!(&a, &weighted_pairing_alt(&xf, &f, &h).unwrap());
            let ci = f.irreducible_coords();
            let cj = h.irreducible_coords();
            prop_assert_eq!(&a, &xf.pair_coords(&ci, &cj));
        }
    }
}
