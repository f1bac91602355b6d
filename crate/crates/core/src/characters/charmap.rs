//! Characteristic maps from spin characters to symmetric functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::json;

use super::classes::{split_classes, ClassFamily, GroupKind};
use super::modules::{hc_char_b, spin_char_b};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::{AlgebraicScalar, Rational};
use crate::symfunc::{schur_in_powersums, PowerSumExpansion};

/// A class function indexed by the merged partition `ρ = ρ₊ ∪ ρ₋`.
pub type ClassFunction = BTreeMap<Partition, AlgebraicScalar>;

fn check_domain(phi: &ClassFunction, n: usize) -> Result<()> {
    match phi.keys().find(|k| k.size() != n) {
        Some(k) => Err(Error::SizeMismatch { expected: n, got: k.size() }),
        None => Ok(()),
    }
}

/// `ch⁻(φ) = Σ_ρ z_ρ^{-1} (-1)^{(n-ℓ(α))/2} 2^{-ℓ(ρ)/2} φ(ρ) p_ρ`, where
/// `α` is the odd-part piece of ρ.
pub fn characteristic_map_minus(phi: &ClassFunction, n: usize) -> Result<PowerSumExpansion> {
    check_domain(phi, n)?;
    let mut out = PowerSumExpansion::zero();
    for (rho, value) in phi {
        let odd_len = rho.parts().iter().filter(|&&k| k % 2 == 1).count();
        let sign = if ((n - odd_len) / 2) % 2 == 0 { 1 } else { -1 };
        let z = Rational::new(BigInt::from(sign), BigInt::from(rho.z_order()));
        let c = (value * &AlgebraicScalar::sqrt2_pow(-(rho.len() as i64))).scale(&z);
        out.add_term(rho.clone(), &c);
    }
    Ok(out)
}

/// `ch(φ) = Σ_μ z_μ^{-1} 2^{-ℓ(μ)} φ(μ) p_μ`.
pub fn characteristic_map_gamma(phi: &ClassFunction, n: usize) -> Result<PowerSumExpansion> {
    check_domain(phi, n)?;
    let mut out = PowerSumExpansion::zero();
    for (mu, value) in phi {
        let w = Rational::new(BigInt::from(1), BigInt::from(mu.z_order()) << mu.len());
        out.add_term(mu.clone(), &value.scale(&w));
    }
    Ok(out)
}

/// The character of `B^λ` as a function of the merged class partition.
pub fn spin_character_b(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.size();
    split_classes(GroupKind::B, n)?
        .into_iter()
        .filter(|c| c.family == ClassFamily::BEven)
        .map(|c| Ok((c.merged(), spin_char_b(lambda, &c)?)))
        .collect()
}

/// The character `φ^λ` of `K^λ` as a function of the merged class partition.
pub fn hc_character(lambda: &Partition) -> Result<ClassFunction> {
    split_classes(GroupKind::Gamma, lambda.size())?
        .into_iter()
        .map(|c| Ok((c.merged(), AlgebraicScalar::from_rational(hc_char_b(lambda, &c)?.into()))))
        .collect()
}

/// `(φ·ψ)(γ) = Σ_{α∪β=γ} z_γ/(z_α z_β) φ(α) ψ(β)`.
pub fn induction_product(phi: &ClassFunction, psi: &ClassFunction) -> ClassFunction {
    let mut out = ClassFunction::new();
    for (a, x) in phi {
        for (b, y) in psi {
            let g = a.union(b);
            let w = Rational::new(BigInt::from(g.z_order()), BigInt::from(a.z_order() * b.z_order()));
            let entry = out.entry(g).or_insert_with(AlgebraicScalar::zero);
            *entry += &(x * y).scale(&w);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Checks `ch(φ^λ) = s_λ` and `ch⁻(B^λ) = s_λ` or `√2 s_λ` for every λ ⊢ n.
pub fn characteristic_map_check(n: usize) -> Result<CheckReport> {
    let mut ff = FirstFailure::new();
    for lambda in partitions_of(n) {
        let s = schur_in_powersums(&lambda);
        let gamma = characteristic_map_gamma(&hc_character(&lambda)?, n)?;
        ff.check(gamma == s, || format!("ch(φ^{lambda}) = {gamma:?}, expected s_{lambda}"));
        if n >= 2 {
            let minus = characteristic_map_minus(&spin_character_b(&lambda)?, n)?;
            let expected = if n % 2 == 0 { s.clone() } else { s.scale(&AlgebraicScalar::sqrt2()) };
            ff.check(minus == expected, || format!("ch⁻(B^{lambda}) = {minus:?}, expected {expected:?}"));
        }
    }
    Ok(CheckReport::from_outcome("characteristic maps", json!({ "n": n }), ff.into_inner()))
}

/// For every `λ ⊢ m`, `ν ⊢ n`, checks `ch(φ^λ·φ^ν) = s_λ s_ν`, and that the
/// Γ inner product `Σ z^{-1} 4^{-ℓ} φ ψ` is carried to the Hall product.
pub fn induction_product_check(m: usize, n: usize) -> Result<CheckReport> {
    let mut ff = FirstFailure::new();
    for lambda in partitions_of(m) {
        let phi = hc_character(&lambda)?;
        for nu in partitions_of(n) {
            let psi = hc_character(&nu)?;
            let prod = induction_product(&phi, &psi);
            let ch = characteristic_map_gamma(&prod, m + n)?;
            let expected = schur_in_powersums(&lambda).mul(&schur_in_powersums(&nu));
            ff.check(ch == expected, || format!("ch(φ^{lambda}·φ^{nu}) differs from s_{lambda} s_{nu}"));
        }
    }
    Ok(CheckReport::from_outcome("induction product", json!({ "m": m, "n": n }), ff.into_inner()))
}

/// `⟨φ, ψ⟩ = Σ_ρ z_ρ^{-1} 4^{-ℓ(ρ)} φ(ρ) ψ(ρ)` on `Γ_n` class functions.
pub fn gamma_inner_product(phi: &ClassFunction, psi: &ClassFunction) -> AlgebraicScalar {
    let mut total = AlgebraicScalar::zero();
    for (rho, x) in phi {
        if let Some(y) = psi.get(rho) {
            let w = Rational::new(BigInt::from(1), BigInt::from(rho.z_order()) << (2 * rho.len()));
            total += &(x * y).scale(&w);
        }
    }
    total
}

/// Checks that the characteristic map is an isometry on `{φ^λ}`.
pub fn isometry_check(n: usize) -> Result<CheckReport> {
    let mut ff = FirstFailure::new();
    let parts = partitions_of(n);
    let chars: Vec<ClassFunction> = parts.iter().map(hc_character).collect::<Result<_>>()?;
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let ip = gamma_inner_product(a, b);
            let hall = characteristic_map_gamma(a, n)?.hall_inner(&characteristic_map_gamma(b, n)?);
            let expected = AlgebraicScalar::from_int(i64::from(i == j));
            ff.check(ip == expected && hall == expected, || {
                format!("⟨φ^{}, φ^{}⟩ = {ip}, Hall product {hall}", parts[i], parts[j])
            });
        }
    }
    Ok(CheckReport::from_outcome("characteristic map isometry", json!({ "n": n }), ff.into_inner()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zero_maps_to_zero() {
        assert!(characteristic_map_minus(&ClassFunction::new(), 3).unwrap().is_zero());
        assert!(characteristic_map_gamma(&ClassFunction::new(), 3).unwrap().is_zero());
    }

    #[test]
    fn basic_spin_maps_to_row() {
        for n in 1..=5 {
            let ch = characteristic_map_gamma(&hc_character(&Partition::row(n)).unwrap(), n).unwrap();
            assert_eq!(ch, schur_in_powersums(&Partition::row(n)));
        }
    }

    #[test]
    fn domain_size_is_checked() {
        let mut phi = ClassFunction::new();
        phi.insert(p("2"), AlgebraicScalar::one());
        assert!(characteristic_map_gamma(&phi, 3).is_err());
    }

    #[test]
    fn maps_up_to_six() {
        for n in 1..=6 {
            assert!(characteristic_map_check(n).unwrap().passed());
            assert!(isometry_check(n).unwrap().passed());
        }
    }

    #[test]
    fn pieri_examples() {
        let prod = induction_product(&hc_character(&p("1")).unwrap(), &hc_character(&p("1")).unwrap());
        let ch = characteristic_map_gamma(&prod, 2).unwrap();
        assert_eq!(ch, schur_in_powersums(&p("2")).add(&schur_in_powersums(&p("1,1"))));
        let prod = induction_product(&hc_character(&p("2")).unwrap(), &hc_character(&p("1")).unwrap());
        let ch = characteristic_map_gamma(&prod, 3).unwrap();
        assert_eq!(ch, schur_in_powersums(&p("3")).add(&schur_in_powersums(&p("2,1"))));
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            assert!(induction_product_check(m, n).unwrap().passed());
        }
    }
}
