//! Irreducible `S_n` characters by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::partition::Partition;

static MEMO: Lazy<RwLock<HashMap<(Partition, Partition), i64>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `χ_λ` at the class of cycle type `cls`.
pub fn mn_character(lambda: &Partition, cls: &Partition) -> Result<i64> {
    if lambda.size() != cls.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{cls}| = {}",
            lambda.size(),
            cls.size()
        )));
    }
    Ok(chi(lambda, cls.parts()))
}

fn chi(lambda: &Partition, cls: &[usize]) -> i64 {
    if cls.is_empty() {
        return 1;
    }
    if lambda.len() <= 1 {
        return 1;
    }
    let key = (lambda.clone(), Partition::from_parts_unsorted(cls.to_vec()));
    if let Some(&v) = MEMO.read().get(&key) {
        return v;
    }
    let k = cls[0];
    let rest = &cls[1..];
    let v: i64 = remove_rim_hooks(lambda, k)
        .into_iter()
        .map(|(mu, sign)| sign * chi(&mu, rest))
        .sum();
    MEMO.write().insert(key, v);
    v
}

/// Every way to remove a rim hook of length `k`, with the sign `(−1)^{height}`.
pub fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let l = lambda.len();
    // beta numbers, strictly decreasing
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = (0..l).map(|i| nb[i] - (l - 1 - i)).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_parts_unsorted(parts), sign));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use num_bigint::BigInt;

    #[test]
    fn trivial_and_sign() {
        for cls in Partition::all(5) {
            assert_eq!(mn_character(&part(&[5]), &cls).unwrap(), 1);
            assert_eq!(mn_character(&Partition::column(5), &cls).unwrap(), cls.sign());
        }
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert!(mn_character(&part(&[2, 1]), &part(&[2])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let parts = Partition::all(n);
            for rho in &parts {
                for sigma in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|l| mn_character(l, rho).unwrap() * mn_character(l, sigma).unwrap())
                        .sum();
                    let expect = if rho == sigma { rho.z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expect, "{rho} {sigma}");
                }
            }
        }
    }

    #[test]
    fn dimension_matches_hooks() {
        for l in Partition::all(9) {
            let id = Partition::column(9);
            assert_eq!(BigInt::from(mn_character(&l, &id).unwrap()), l.dim());
        }
    }
}
