//! Symmetric-group characters by the Murnaghan–Nakayama rule and the Schur
//! expansion in power sums for a single alphabet.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::partitions::{z_lambda, Partition};
use crate::scalar::Rational;

/// χ^λ(μ) for the symmetric group S_{|λ|}.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "sizes differ");
    let mut memo = HashMap::new();
    let beta = beta_set(lambda);
    mn_rec(&beta, mu.parts(), &mut memo)
}

/// Beta numbers λ_i + (l − i) for i = 1..l.
fn beta_set(lambda: &Partition) -> Vec<u32> {
    let l = lambda.len() as u32;
    lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect()
}

fn mn_rec(beta: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        // beads strictly between target and b give the height of the rim hook
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// s_λ = Σ_ν z_ν^{-1} χ^λ(ν) p_ν, nonzero terms only, ν in canonical order.
pub fn schur_in_power_sums(lambda: &Partition) -> Vec<(Partition, Rational)> {
    Partition::all(lambda.size())
        .into_iter()
        .filter_map(|nu| {
            let chi = mn_character(lambda, &nu);
            (chi != 0).then(|| {
                let c = Rational::from_integer(BigInt::from(chi)) / z_lambda(&nu);
                (nu, c)
            })
        })
        .collect()
}

/// Full character table of S_n: rows λ, columns μ, both in canonical order.
pub fn sn_table(n: u32) -> Vec<Vec<i64>> {
    let parts = Partition::all(n);
    parts.iter().map(|l| parts.iter().map(|m| mn_character(l, m)).collect()).collect()
}
