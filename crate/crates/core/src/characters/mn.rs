//! Symmetric group characters by the Murnaghan–Nakayama rule.
//!
//! Removing a border strip of size `k` from λ is the same as lowering one
//! entry of the beta-set `{λ_i + ℓ - i}` by `k` onto an unoccupied value; the
//! sign is `(-1)` to the number of beta numbers jumped over.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static Mutex<HashMap<MemoKey, BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ^λ_μ`, the character of the Specht module `S^λ` at cycle type μ.
pub fn chi_sn(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: mu.size() });
    }
    Ok(chi_rec(lambda.parts(), mu.parts()))
}

/// Same as [`chi_sn`] for callers that already know the sizes agree.
pub(crate) fn chi(lambda: &Partition, mu: &Partition) -> BigInt {
    debug_assert_eq!(lambda.size(), mu.size());
    chi_rec(lambda.parts(), mu.parts())
}

fn chi_rec(lambda: &[usize], mu: &[usize]) -> BigInt {
    let Some((&k, rest)) = mu.split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo().lock().expect("memo poisoned").get(&key) {
        return v.clone();
    }

    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let value = chi_rec(&smaller, rest);
        if jumped % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }

    memo().lock().expect("memo poisoned").insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{factorial, partitions_of};
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(chi_sn(&p("2,1"), &p("1,1,1")).unwrap(), BigInt::from(2));
        assert_eq!(chi_sn(&p("2,1"), &p("2,1")).unwrap(), BigInt::from(0));
        assert_eq!(chi_sn(&p("2,1"), &p("3")).unwrap(), BigInt::from(-1));
        assert_eq!(chi_sn(&p("1,1"), &p("2")).unwrap(), BigInt::from(-1));
        assert!(chi_sn(&p("2"), &p("1")).is_err());
        assert_eq!(chi_sn(&Partition::empty(), &Partition::empty()).unwrap(), BigInt::from(1));
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=8 {
            for mu in partitions_of(n) {
                assert_eq!(chi(&Partition::row(n), &mu), BigInt::from(1));
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(chi(&Partition::column(n), &mu), BigInt::from(sign));
            }
        }
    }

    #[test]
    fn degrees_match_hook_length_formula() {
        for n in 1..=10 {
            for lam in partitions_of(n) {
                let d = chi(&lam, &Partition::column(n));
                assert_eq!(d, BigInt::from(lam.dimension()));
            }
        }
    }

    /// Row and column orthogonality of the full character table.
    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let ps = partitions_of(n);
            let nf = BigInt::from(factorial(n));
            for a in &ps {
                for b in &ps {
                    let row: BigInt = ps
                        .iter()
                        .map(|mu| chi(a, mu) * chi(b, mu) * (&nf / BigInt::from(mu.z_order())))
                        .sum();
                    let expected = if a == b { nf.clone() } else { BigInt::zero() };
                    assert_eq!(row, expected);
                    let col: BigInt = ps.iter().map(|lam| chi(lam, a) * chi(lam, b)).sum();
                    let expected = if a == b { BigInt::from(a.z_order()) } else { BigInt::zero() };
                    assert_eq!(col, expected);
                }
            }
        }
    }

    /// Tensoring with the sign character conjugates the partition.
    #[test]
    fn conjugation_twists_by_sign() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(chi(&lam.conjugate(), &mu), chi(&lam, &mu) * sign);
                }
            }
        }
    }
}
