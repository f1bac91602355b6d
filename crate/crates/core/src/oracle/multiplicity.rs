//! Graded multiplicities recovered from matrix traces.
//!
//! For each degree `k` the `B_n`-character of `Cl_n ⊗ S^k V` is measured on
//! the canonical representatives of the `Γ_n` split classes, and the
//! multiplicities `m_λ(k)` of the Hecke–Clifford simples `K^λ` are solved
//! for from `Θ_k(ρ) = Σ_λ m_λ(k) 2^{ℓ(ρ)} χ^λ_ρ`.
//!
//! A second route restricts the same space to `D_n` (or `B_n`) and computes
//! `dim Hom` into it from a full class sum, without the closed-form trace.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;

use super::graded_rep::build_graded_rep;
use super::signed_perm::{b_class_size, evaluate_word, canonical_word, symmetric_power_trace, SignedPerm};
use crate::characters::{check_rank, chi, split_classes, GroupKind};
use crate::error::{Error, Result};
use crate::fake_degrees::{h_b_hecke_clifford, h_d_hecke_clifford, h_minus_d, WeylType};
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::{solve_linear, TruncatedSeries};
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::Rational;

/// Oracle series of every `K^λ`, `λ ⊢ n`, up to degree `maxdeg`.
pub fn oracle_h_b_all(n: usize, maxdeg: usize, cap: usize) -> Result<BTreeMap<Partition, TruncatedSeries>> {
    check_rank('G', n)?;
    let classes = split_classes(GroupKind::Gamma, n)?;
    let lambdas = partitions_of(n);
    let matrix: Vec<Vec<Rational>> = classes
        .iter()
        .map(|c| {
            let rho = c.merged();
            let weight = BigInt::one() << rho.len();
            lambdas.iter().map(|l| Rational::from_integer(&weight * chi(l, &rho))).collect()
        })
        .collect();
    let per_degree: Vec<Vec<Rational>> = (0..=maxdeg)
        .into_par_iter()
        .map(|k| {
            let rep = build_graded_rep(n, k, cap)?;
            let theta = classes
                .iter()
                .map(|c| Rational::from_integer(rep.class_trace(&c.rho_plus, &c.rho_minus).into()))
                .collect();
            solve_linear(matrix.clone(), theta)
        })
        .collect::<Result<_>>()?;
    Ok(lambdas
        .iter()
        .enumerate()
        .map(|(j, l)| (l.clone(), TruncatedSeries::new(per_degree.iter().map(|m| m[j].clone()).collect())))
        .collect())
}

/// Oracle series of `K^λ` in `Cl_n ⊗ S^* V`.
pub fn oracle_h_b(lambda: &Partition, maxdeg: usize, cap: usize) -> Result<TruncatedSeries> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("the empty partition".into()));
    }
    let mut all = oracle_h_b_all(lambda.size(), maxdeg, cap)?;
    Ok(all.remove(lambda).expect("every partition of n is present"))
}

fn parity_factor(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(if n % 2 == 1 { 2 } else { 1 }))
}

/// `ℂD_n⁻` series combined from the `B` side: `λ ≠ λ'` gives the sum over the
/// pair, `λ = λ'` the single series, both scaled by 2 for odd `n`.
pub fn oracle_h_d_from(all_b: &BTreeMap<Partition, TruncatedSeries>, lambda: &Partition) -> TruncatedSeries {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let base = if conj == *lambda { all_b[lambda].clone() } else { all_b[lambda].add(&all_b[&conj]) };
    base.scale(&parity_factor(n))
}

pub fn oracle_h_d(lambda: &Partition, maxdeg: usize, cap: usize) -> Result<TruncatedSeries> {
    check_rank('D', lambda.size())?;
    let all = oracle_h_b_all(lambda.size(), maxdeg, cap)?;
    Ok(oracle_h_d_from(&all, lambda))
}

/// `Σ_I tr(L(c_I) ∘ w | Cl_n)²`, the character of `Cl_n ⊗ Cl_n^*` as a
/// `Cl_n`-bimodule twisted by `w`.
pub fn clifford_pair_weight(w: &SignedPerm) -> BigInt {
    let n = w.n();
    let mut traces = vec![0i64; 1 << n];
    for j in 0..1u64 << n {
        let (img, neg) = w.act_on_clifford(j);
        let i = img ^ j;
        // c_I c_{img} = ± c_J
        let sign = neg ^ super::clifford::clifford_sign(i, img);
        traces[i as usize] += if sign { -1 } else { 1 };
    }
    traces.iter().map(|&t| BigInt::from(t * t)).sum()
}

/// `dim Hom_{Cl_n ⋊ G}(K^λ|_G, Cl_n ⊗ S^k V)` for `k ≤ maxdeg`, where `G` is
/// `B_n` or `D_n`, from a sum over all `B_n` classes contained in `G`.
pub fn restriction_hom_series(group: WeylType, lambda: &Partition, maxdeg: usize) -> Result<TruncatedSeries> {
    let n = lambda.size();
    let order = match group {
        WeylType::B => {
            check_rank('B', n)?;
            (BigUint::one() << n) * factorial(n)
        }
        WeylType::D => {
            check_rank('D', n)?;
            (BigUint::one() << (n - 1)) * factorial(n)
        }
        WeylType::A => return Err(Error::WrongFamily { expected: "B or D".into(), got: "A".into() }),
    };
    let mut terms = Vec::new();
    for a in 0..=n {
        for rp in partitions_of(a) {
            for rm in partitions_of(n - a) {
                if group == WeylType::D && rm.len() % 2 == 1 {
                    continue;
                }
                let w = evaluate_word(n, &canonical_word(&rp, &rm));
                let weight = BigInt::from(b_class_size(&rp, &rm)) * clifford_pair_weight(&w) * chi(lambda, &rp.union(&rm));
                if !weight.is_zero() {
                    terms.push((w, weight));
                }
            }
        }
    }
    let denom = Rational::from_integer(BigInt::from((BigUint::one() << n) * order));
    let coeffs = (0..=maxdeg)
        .into_par_iter()
        .map(|k| {
            let total: BigInt = terms.iter().map(|(w, c)| c * symmetric_power_trace(w, k)).sum();
            Rational::from_integer(total) / &denom
        })
        .collect();
    Ok(TruncatedSeries::new(coeffs))
}

/// Oracle against closed form for every `λ ⊢ n`: type B compares with the
/// Hecke–Clifford series, type D with the `ℂD_n⁻` series.
pub fn oracle_equivalence_check(ty: WeylType, n: usize, maxdeg: usize, cap: usize) -> Result<CheckReport> {
    let params = json!({"type": ty.to_string(), "n": n, "maxdeg": maxdeg, "cap": cap});
    let letter = if ty == WeylType::D { 'D' } else { 'B' };
    check_rank(letter, n)?;
    let all = oracle_h_b_all(n, maxdeg, cap)?;
    let mut ff = FirstFailure::new();
    for lambda in partitions_of(n) {
        let (oracle, closed) = match ty {
            WeylType::D => (oracle_h_d_from(&all, &lambda), h_minus_d(&lambda)?.series(maxdeg)),
            _ => (all[&lambda].clone(), h_b_hecke_clifford(&lambda)?.series(maxdeg)),
        };
        if let Some(k) = first_difference(&oracle, &closed) {
            ff.record(format!("λ = ({lambda}), degree {k}: oracle {} vs closed form {}", oracle.coeff(k), closed.coeff(k)));
        }
    }
    Ok(CheckReport::from_outcome("oracle multiplicities equal the closed form", params, ff.into_inner()))
}

/// Hom series from the restriction sum against the Hecke–Clifford closed
/// form (doubled for the `λ = λ'` pair of even `n`, which splits in two).
pub fn restriction_check(ty: WeylType, n: usize, maxdeg: usize) -> Result<CheckReport> {
    let params = json!({"type": ty.to_string(), "n": n, "maxdeg": maxdeg});
    let mut ff = FirstFailure::new();
    for lambda in partitions_of(n) {
        let direct = restriction_hom_series(ty, &lambda, maxdeg)?;
        let closed = match ty {
            WeylType::D => {
                let s = h_d_hecke_clifford(&lambda)?.series(maxdeg);
                if n % 2 == 0 && lambda.is_symmetric() {
                    s.scale(&Rational::from_integer(2.into()))
                } else {
                    s
                }
            }
            _ => h_b_hecke_clifford(&lambda)?.series(maxdeg),
        };
        if let Some(k) = first_difference(&direct, &closed) {
            ff.record(format!("λ = ({lambda}), degree {k}: class sum {} vs closed form {}", direct.coeff(k), closed.coeff(k)));
        }
    }
    Ok(CheckReport::from_outcome("class-sum Hom series equal the Hecke-Clifford closed form", params, ff.into_inner()))
}

fn first_difference(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    (0..=a.order().max(b.order())).find(|&k| a.coeff(k) != b.coeff(k))
}

/// Σ_λ m_λ(k) dim K^λ, which must equal `dim Cl_n ⊗ S^k V`.
pub fn dimension_count(all: &BTreeMap<Partition, TruncatedSeries>, k: usize) -> Option<u128> {
    let total: Rational = all
        .iter()
        .map(|(l, s)| s.coeff(k) * Rational::from_integer(BigInt::from(l.dimension()) << l.size()))
        .sum();
    if !total.is_integer() {
        return None;
    }
    total.to_integer().to_u128()
}
