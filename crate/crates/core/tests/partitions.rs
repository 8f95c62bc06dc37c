use proptest::prelude::*;
use wreath_vo::partitions::{enumerate_partfn, z_lambda, PartFn, Partition};
use wreath_vo::scalar::Rational;

/// p(0..=n) by Euler's pentagonal recurrence.
fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p.into_iter().map(|x| x as u64).collect()
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let p = partition_counts(20);
    for n in 0..=20u32 {
        let all = Partition::all(n);
        assert_eq!(all.len() as u64, p[n as usize], "p({n})");
        assert!(all.iter().all(|l| l.size() == n));
        assert!(all.windows(2).all(|w| w[0] < w[1]), "canonical order at n = {n}");
    }
}

#[test]
fn partfn_counts_match_product_formula() {
    let p = partition_counts(10);
    for width in 1..=3usize {
        // coefficients of ∏_k (1 − q^k)^{−width}
        let mut series = vec![0u64; 11];
        series[0] = 1;
        for _ in 0..width {
            let mut next = vec![0u64; 11];
            for i in 0..=10 {
                for j in 0..=10 - i {
                    next[i + j] += series[i] * p[j];
                }
            }
            series = next;
        }
        for n in 0..=10u32 {
            let fns = enumerate_partfn(width, n);
            assert_eq!(fns.len() as u64, series[n as usize], "width {width}, n = {n}");
            assert!(fns.windows(2).all(|w| w[0] < w[1]));
            assert!(fns.iter().all(|f| f.norm() == n));
        }
    }
}

#[test]
fn symmetric_group_class_equation() {
    for n in 0..=12 {
        let total: Rational = Partition::all(n).iter().map(|l| Rational::from_integer(1.into()) / z_lambda(l)).sum();
        assert_eq!(total, Rational::from_integer(1.into()), "n = {n}");
    }
}

#[test]
fn z_lambda_values() {
    let z = |p: &[u32]| z_lambda(&Partition::new(p.to_vec()));
    assert_eq!(z(&[1, 1, 1]), Rational::from_integer(6.into()));
    assert_eq!(z(&[2, 1]), Rational::from_integer(2.into()));
    assert_eq!(z(&[2, 2, 1]), Rational::from_integer(8.into()));
    assert_eq!(z(&[]), Rational::from_integer(1.into()));
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..6).prop_map(Partition::new)
}

fn partfn(width: usize) -> impl Strategy<Value = PartFn> {
    prop::collection::vec(partition(), width).prop_map(PartFn::from_parts)
}

proptest! {
    #[test]
    fn transpose_is_an_involution(l in partition()) {
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
    }

    #[test]
    fn partfn_text_round_trip(f in partfn(3)) {
        let back = PartFn::parse(&f.to_string(), 3).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn partition_text_round_trip(l in partition()) {
        let back: Partition = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn union_adds_norms(f in partfn(2), g in partfn(2)) {
        prop_assert_eq!(f.union(&g).norm(), f.norm() + g.norm());
        prop_assert_eq!(f.union(&g), g.union(&f));
    }
}
