//! `B_n` acting on `Cl_n ⊗ S^k V` by explicit signed permutation matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use super::presentations::coxeter_m;
use super::signed_perm::{b_generator, canonical_word, monomials};
use crate::characters::{split_classes, ClassFamily, GroupKind, SplitClassLabel};
use crate::error::{Error, Result};
use crate::fake_degrees::WeylType;
use crate::partition::{binomial, Partition};
use crate::poly::TruncatedSeries;
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::Rational;

/// Default bound on the dimension of a representation space.
pub const DEFAULT_CAP: usize = 100_000;

/// A monomial matrix: column `j` is `±e_{image[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermMatrix {
    image: Vec<u32>,
    negative: Vec<bool>,
}

impl SignedPermMatrix {
    pub fn identity(dim: usize) -> Self {
        SignedPermMatrix { image: (0..dim as u32).collect(), negative: vec![false; dim] }
    }

    pub fn dim(&self) -> usize {
        self.image.len()
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let image = other.image.iter().map(|&j| self.image[j as usize]).collect();
        let negative = other.image.iter().zip(&other.negative).map(|(&j, &n)| n ^ self.negative[j as usize]).collect();
        SignedPermMatrix { image, negative }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.dim()), |acc, _| acc.mul(self))
    }

    pub fn trace(&self) -> i64 {
        self.image
            .iter()
            .enumerate()
            .filter(|(j, &i)| i as usize == *j)
            .map(|(j, _)| if self.negative[j] { -1 } else { 1 })
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &i)| i as usize == j) && self.negative.iter().all(|n| !n)
    }
}

/// Generator matrices of `B_n` on `Cl_n ⊗ S^k V` in the basis
/// `c_I ⊗ x^a` (Clifford masks outer, monomials inner).
#[derive(Clone, Debug)]
pub struct GradedRepMatrix {
    pub n: usize,
    pub k: usize,
    pub dim: usize,
    /// `s_1, …, s_{n-1}, τ_n`.
    pub generators: Vec<SignedPermMatrix>,
}

/// `2^n · C(n+k-1, k)`.
pub fn graded_dimension(n: usize, k: usize) -> usize {
    (1usize << n).saturating_mul(binomial(n + k - 1, k))
}

pub fn build_graded_rep(n: usize, k: usize, cap: usize) -> Result<GradedRepMatrix> {
    let dim = graded_dimension(n, k);
    if dim > cap {
        return Err(Error::CapExceeded { required: dim, cap });
    }
    let monos = monomials(n, k);
    let mono_index: HashMap<&[u8], usize> = monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let nm = monos.len();
    let generators = (1..=n)
        .map(|g| {
            let w = b_generator(n, g);
            let mut image = vec![0u32; dim];
            let mut negative = vec![false; dim];
            for mask in 0..1u64 << n {
                let (m2, s1) = w.act_on_clifford(mask);
                for (j, mono) in monos.iter().enumerate() {
                    let (e2, s2) = w.act_on_monomial(mono);
                    let col = mask as usize * nm + j;
                    image[col] = (m2 as usize * nm + mono_index[e2.as_slice()]) as u32;
                    negative[col] = s1 ^ s2;
                }
            }
            SignedPermMatrix { image, negative }
        })
        .collect();
    Ok(GradedRepMatrix { n, k, dim, generators })
}

impl GradedRepMatrix {
    /// Matrix of a word in the generators.
    pub fn word_matrix(&self, word: &[usize]) -> SignedPermMatrix {
        word.iter().fold(SignedPermMatrix::identity(self.dim), |acc, &g| acc.mul(&self.generators[g - 1]))
    }

    /// First violated Coxeter relation of `B_n`, if any.
    pub fn relation_failure(&self) -> Option<String> {
        let n = self.n;
        for i in 1..=n {
            if !self.generators[i - 1].pow(2).is_identity() {
                return Some(format!("generator {i} does not square to the identity"));
            }
            for j in i + 1..=n {
                let m = coxeter_m(WeylType::B, n, i, j);
                if !self.generators[i - 1].mul(&self.generators[j - 1]).pow(m).is_identity() {
                    return Some(format!("(g_{i} g_{j})^{m} is not the identity"));
                }
            }
        }
        None
    }

    /// Trace of the canonical representative of `(ρ₊, ρ₋)`.
    pub fn class_trace(&self, rho_plus: &Partition, rho_minus: &Partition) -> i64 {
        self.word_matrix(&canonical_word(rho_plus, rho_minus)).trace()
    }
}

/// Matrix trace on `Cl_n ⊗ S^k V` of the element with word
/// [`canonical_word`] in the cycle type of `class`.
pub fn graded_trace(class: &SplitClassLabel, k: usize, cap: usize) -> Result<i64> {
    let rep = build_graded_rep(class.n(), k, cap)?;
    Ok(rep.class_trace(&class.rho_plus, &class.rho_minus))
}

/// `2^{ℓ(ρ)} / Π (1 + (-t)^{ρ_i})` for classes whose positive cycles are odd
/// and negative cycles even; zero otherwise, since an even positive or odd
/// negative cycle already has trace zero on its Clifford factor.
pub fn closed_form_trace(class: &SplitClassLabel, order: usize) -> TruncatedSeries {
    let plus_odd = class.rho_plus.parts().iter().all(|k| k % 2 == 1);
    let minus_even = class.rho_minus.parts().iter().all(|k| k % 2 == 0);
    if class.family == ClassFamily::BOdd || !plus_odd || !minus_even {
        return TruncatedSeries::zero(order);
    }
    let rho = class.merged();
    let mut den = TruncatedSeries::one(order);
    for &k in rho.parts() {
        let mut f = TruncatedSeries::one(order);
        if k <= order {
            let c = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
            f.set_coeff(k, Rational::from_integer(c));
        }
        den = den.mul(&f);
    }
    let num = TruncatedSeries::monomial(Rational::from_integer(BigInt::one() << rho.len()), 0, order);
    num.div(&den).expect("constant term 1")
}

/// Matrix traces for `k = 0..=order` as a series.
pub fn graded_trace_series(class: &SplitClassLabel, order: usize, cap: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(order);
    for k in 0..=order {
        let t = graded_trace(class, k, cap)?;
        if t != 0 {
            s.set_coeff(k, Rational::from_integer(BigInt::from(t)));
        }
    }
    Ok(s)
}


/// Matrix traces against the closed form for every `B_n` split class.
pub fn trace_formula_check(n: usize, maxdeg: usize, cap: usize) -> Result<CheckReport> {
    let mut ff = FirstFailure::new();
    for class in split_classes(GroupKind::B, n)? {
        let direct = graded_trace_series(&class, maxdeg, cap)?;
        let closed = closed_form_trace(&class, maxdeg);
        if let Some(k) = (0..=maxdeg).find(|&k| direct.coeff(k) != closed.coeff(k)) {
            ff.record(format!("class {class}, degree {k}: matrix trace {} vs closed form {}", direct.coeff(k), closed.coeff(k)));
        }
    }
    let params = json!({"n": n, "maxdeg": maxdeg, "cap": cap});
    Ok(CheckReport::from_outcome("graded traces equal the closed form", params, ff.into_inner()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_cap() {
        let r = build_graded_rep(2, 0, DEFAULT_CAP).unwrap();
        assert_eq!(r.dim, 4);
        assert!(r.relation_failure().is_none());
        assert_eq!(r.word_matrix(&[]).trace(), 4);
        assert!(matches!(build_graded_rep(6, 10, 1000), Err(Error::CapExceeded { required, cap: 1000 }) if required == 64 * 3003));
    }

    #[test]
    fn transposition_on_cl2() {
        let r = build_graded_rep(2, 0, DEFAULT_CAP).unwrap();
        let s = &r.generators[0];
        // 1 ↦ 1, c_1 ↔ c_2, c_1c_2 ↦ c_2c_1 = -c_1c_2
        assert_eq!(s.trace(), 0);
        assert_eq!(s.image, vec![0, 2, 1, 3]);
        assert_eq!(s.negative, vec![false, false, false, true]);
    }

    #[test]
    fn relations_hold() {
        for n in 2..=4 {
            for k in 0..=3 {
                let r = build_graded_rep(n, k, DEFAULT_CAP).unwrap();
                assert!(r.relation_failure().is_none(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn trace_examples() {
        let classes = split_classes(GroupKind::B, 2).unwrap();
        let neg = classes.iter().find(|c| c.rho_plus.is_empty()).unwrap();
        assert_eq!(graded_trace(neg, 0, DEFAULT_CAP).unwrap(), 2);
        assert_eq!(closed_form_trace(neg, 4).coeff(0), Rational::from_integer(2.into()));
        let id = classes.iter().find(|c| c.rho_minus.is_empty()).unwrap();
        assert_eq!(graded_trace(id, 1, DEFAULT_CAP).unwrap(), 8);
        assert_eq!(closed_form_trace(id, 4).coeff(1), Rational::from_integer(8.into()));
    }

    #[test]
    fn matrix_traces_match_closed_form() {
        for n in 2..=4 {
            let r = trace_formula_check(n, 8, DEFAULT_CAP).unwrap();
            assert!(r.passed(), "{:?}", r.first_discrepancy);
        }
    }
}
