//! Relation checks for the explicit generator images of spin Weyl group
//! algebras.
//!
//! All computations run over `ℚ(√2)(i)`: the central element `ζ` needs `i`
//! when `n ≡ 3 (mod 4)`, and the Hecke–Clifford comparison map sends `s_i` to
//! `-i β_i t_i`.

use std::fmt;

use serde_json::json;

use super::clifford::{clifford_rank, difference_root, simple_root_elements, sum_root, CliffordElement};
use super::supertensor::{GroupGrading, SuperTensorElement};
use crate::characters::check_rank;
use crate::error::{Error, Result};
use crate::fake_degrees::WeylType;
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::{Field, GaussianScalar};

pub type Scalar = GaussianScalar;
pub type Cl = CliffordElement<Scalar>;
pub type St = SuperTensorElement<Scalar>;

/// Minimal interface shared by the two algebras the relations are checked in.
pub trait Algebra: Clone + PartialEq + fmt::Debug {
    fn product(&self, o: &Self) -> Self;
    fn unit(&self) -> Self;
    fn times_scalar(&self, c: &Scalar) -> Self;
    fn odd(&self) -> Option<bool>;

    fn power(&self, k: usize) -> Self {
        (0..k).fold(self.unit(), |acc, _| acc.product(self))
    }
}

impl Algebra for Cl {
    fn product(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn unit(&self) -> Self {
        Cl::one(self.rank())
    }
    fn times_scalar(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn odd(&self) -> Option<bool> {
        self.parity()
    }
}

impl Algebra for St {
    fn product(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn unit(&self) -> Self {
        self.pow(0)
    }
    fn times_scalar(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn odd(&self) -> Option<bool> {
        self.parity()
    }
}

/// Coxeter exponent `m_ij` for `i ≠ j` (1-based).
pub fn coxeter_m(ty: WeylType, n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    match ty {
        WeylType::A => {
            if j == i + 1 {
                3
            } else {
                2
            }
        }
        WeylType::B => {
            if j == n && i == n - 1 {
                4
            } else if j == n || j != i + 1 {
                2
            } else {
                3
            }
        }
        WeylType::D => {
            if j == n {
                if i == n - 2 {
                    3
                } else {
                    2
                }
            } else if j == i + 1 {
                3
            } else {
                2
            }
        }
    }
}

/// Checks `x_i² = 1` and `(x_i x_j)^{m_ij} = (-1)^{m_ij+1}`.
pub fn spin_relation_failure<A: Algebra>(ty: WeylType, images: &[A]) -> Option<String> {
    relation_failure(ty, images, true)
}

/// Checks `x_i² = 1` and `(x_i x_j)^{m_ij} = 1`.
pub fn coxeter_relation_failure<A: Algebra>(ty: WeylType, images: &[A]) -> Option<String> {
    relation_failure(ty, images, false)
}

fn relation_failure<A: Algebra>(ty: WeylType, images: &[A], spin: bool) -> Option<String> {
    let n = images.len();
    let one = images.first()?.unit();
    for (i, x) in images.iter().enumerate() {
        if x.product(x) != one {
            return Some(format!("generator {} does not square to 1", i + 1));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let m = coxeter_m(ty, n, i + 1, j + 1);
            let sign = if spin && m % 2 == 0 { -1 } else { 1 };
            let lhs = images[i].product(&images[j]).power(m);
            if lhs != one.times_scalar(&Scalar::from_int(sign)) {
                return Some(format!("({} {})^{m} ≠ {sign}", i + 1, j + 1));
            }
        }
    }
    None
}

fn odd_failure<A: Algebra>(images: &[A]) -> Option<String> {
    images
        .iter()
        .position(|x| x.odd() != Some(true))
        .map(|i| format!("image of generator {} is not odd", i + 1))
}

/// `ζ`, a central element of `Cl_n` (n odd) with `ζ² = 1`: `c_1⋯c_n` when
/// `n ≡ 1 (mod 4)` and `i·c_1⋯c_n` when `n ≡ 3 (mod 4)`.
pub fn zeta(n: usize) -> Cl {
    let top = Cl::top(n);
    if n % 4 == 3 {
        top.scale(&Scalar::i())
    } else {
        top
    }
}

/// Images of `t_1..t_n` in `Cl_n ⊗ ℂS_n` (even permutations):
/// `t_i ↦ β_i s_i`, `t_n ↦ c_n`.
pub fn phi_b_images(n: usize) -> Vec<St> {
    let g = GroupGrading::Even;
    (1..=n)
        .map(|i| {
            if i < n {
                St::clifford_times_transposition(&difference_root(n, i, i + 1), n, i, g)
            } else {
                St::from_clifford(&Cl::generator(n, n), n, g)
            }
        })
        .collect()
}

/// Images of the `D_n` generators in `Cl_n ⊗ ℂS_n` with odd transpositions,
/// `n` odd: `t_i ↦ ζ β_i s_i`, `t_n ↦ ζ (c_{n-1} + c_n) s_{n-1} / √2`.
pub fn phi_d_images(n: usize) -> Vec<St> {
    let g = GroupGrading::Sign;
    let z = zeta(n);
    (1..=n)
        .map(|i| {
            let (root, s) = if i < n { (difference_root(n, i, i + 1), i) } else { (sum_root(n, n - 1, n), n - 1) };
            St::clifford_times_transposition(&z.mul(&root), n, s, g)
        })
        .collect()
}

/// Images of the `D_n` generators inside `ℂB_n⁻`, written through the `B_n`
/// generator images: `t_i ↦ t_i` and `t_n ↦ -t_n t_{n-1} t_n`.
pub fn iota_images(b_images: &[St]) -> Vec<St> {
    let n = b_images.len();
    let mut out: Vec<St> = b_images[..n - 1].to_vec();
    let last = b_images[n - 1].mul(&b_images[n - 2]).mul(&b_images[n - 1]);
    out.push(last.scale(&Scalar::from_int(-1)));
    out
}

/// Images of `t_1..t_n` of `ℂW⁻` in `Cl_k ⊗ ℂS_k`: type A through
/// `ℂS_{n+1}⁻ ⊂ ℂB_{n+1}⁻`, type D through the inclusion into `ℂB_n⁻`.
pub fn spin_group_algebra_images(ty: WeylType, n: usize) -> Vec<St> {
    match ty {
        WeylType::A => phi_b_images(n + 1)[..n].to_vec(),
        WeylType::B => phi_b_images(n),
        WeylType::D => iota_images(&phi_b_images(n)),
    }
}

/// Shifts the Clifford part of `x ∈ Cl_k ⊗ ℂS_k` to generators
/// `offset+1..offset+k` of `Cl_{offset+k}`.
fn shift_clifford(x: &St, offset: usize, k: usize) -> St {
    let mut out = St::zero(offset + k, k, GroupGrading::Even);
    for ((m, g), c) in x.terms() {
        let cl = Cl::monomial(offset + k, m << offset, c.clone());
        out = out.add(&St::from_clifford(&cl, k, GroupGrading::Even).mul(&St::from_perm(offset + k, g.clone(), GroupGrading::Even)));
    }
    out
}

/// The comparison map `Cl_V ⋊ W → Cl_V ⊗ ℂW⁻` on generators, realised in
/// `Cl_{m+k} ⊗ ℂS_k`: returns `(Φ(s_i), Φ(β_i))`.
pub fn hecke_clifford_images(ty: WeylType, n: usize) -> (Vec<St>, Vec<St>) {
    let m = clifford_rank(ty, n);
    let spin = spin_group_algebra_images(ty, n);
    let k = if ty == WeylType::A { n + 1 } else { n };
    let betas = simple_root_elements::<Scalar>(ty, n);
    let minus_i = Scalar::i().negate();
    let lift = |b: &Cl| St::from_clifford(&b.embed(m + k, 0), k, GroupGrading::Even);
    let s_images = betas
        .iter()
        .zip(&spin)
        .map(|(b, t)| lift(b).mul(&shift_clifford(t, m, k)).scale(&minus_i))
        .collect();
    let beta_images = betas.iter().map(lift).collect();
    (s_images, beta_images)
}

/// The element sets whose relations are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    PhiB,
    PhiD,
    /// The map `Cl_V ⋊ W → Cl_V ⊗ ℂW⁻` for the given type.
    Phi(WeylType),
    /// `t_i ↦ β_i` onto `Cl_V`.
    Omega(WeylType),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::PhiB => f.write_str("phiB"),
            Target::PhiD => f.write_str("phiD"),
            Target::Phi(t) => write!(f, "Phi_type{t}"),
            Target::Omega(t) => write!(f, "Omega_type{t}"),
        }
    }
}

impl std::str::FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "phiB" => Target::PhiB,
            "phiD" => Target::PhiD,
            "Phi_typeA" => Target::Phi(WeylType::A),
            "Phi_typeB" => Target::Phi(WeylType::B),
            "Phi_typeD" => Target::Phi(WeylType::D),
            "Omega_typeA" => Target::Omega(WeylType::A),
            "Omega_typeB" => Target::Omega(WeylType::B),
            "Omega_typeD" => Target::Omega(WeylType::D),
            _ => return Err(Error::Parse(format!("unknown presentation target {s:?}"))),
        })
    }
}

fn type_letter(ty: WeylType) -> char {
    match ty {
        WeylType::A => 'A',
        WeylType::B => 'B',
        WeylType::D => 'D',
    }
}

/// Evaluates every defining relation on the generator images of `target`.
pub fn verify_presentation_images(target: Target, n: usize) -> Result<CheckReport> {
    let params = json!({"target": target.to_string(), "n": n});
    let failure = match target {
        Target::PhiB => {
            check_rank('B', n)?;
            let images = phi_b_images(n);
            odd_failure(&images).or_else(|| spin_relation_failure(WeylType::B, &images))
        }
        Target::PhiD => {
            check_rank('D', n)?;
            if n % 2 == 0 {
                return Err(Error::NeedOddRank(n));
            }
            let images = phi_d_images(n);
            odd_failure(&images).or_else(|| spin_relation_failure(WeylType::D, &images))
        }
        Target::Omega(ty) => {
            check_rank(type_letter(ty), n)?;
            let images = simple_root_elements::<Scalar>(ty, n);
            odd_failure(&images).or_else(|| spin_relation_failure(ty, &images))
        }
        Target::Phi(ty) => {
            check_rank(type_letter(ty), n)?;
            phi_failure(ty, n)
        }
    };
    Ok(CheckReport::from_outcome("generator images satisfy the defining relations", params, failure))
}

fn phi_failure(ty: WeylType, n: usize) -> Option<String> {
    let spin = spin_group_algebra_images(ty, n);
    if let Some(f) = odd_failure(&spin).or_else(|| spin_relation_failure(ty, &spin)) {
        return Some(format!("spin group algebra images: {f}"));
    }
    let (s, beta) = hecke_clifford_images(ty, n);
    if let Some(f) = coxeter_relation_failure(ty, &s) {
        return Some(format!("reflection images: {f}"));
    }
    if let Some(i) = s.iter().position(|x| x.parity() != Some(false)) {
        return Some(format!("image of s_{} is not even", i + 1));
    }
    let roots = simple_root_elements::<Scalar>(ty, n);
    for (i, si) in s.iter().enumerate() {
        for j in 0..n {
            let dot = roots[i].symmetric_product(&roots[j]).scalar_part();
            let two_dot = dot.plus(&dot);
            let reflected = beta[j].add(&beta[i].scale(&two_dot.negate()));
            if si.mul(&beta[j]).mul(si) != reflected {
                return Some(format!("s_{} β_{} s_{} ≠ s_{}(β_{})", i + 1, j + 1, i + 1, i + 1, j + 1));
            }
        }
    }
    None
}

/// `φ^D(t_{n-1}) φ^D(t_n) = c_{n-1} c_n` and
/// `φ^D(t_i) c_{i+1} c_n φ^D(t_i) = c_i c_n` for `i ≤ n - 2`.
pub fn verify_phi_d_surjectivity_identities(n: usize) -> Result<CheckReport> {
    if n % 2 == 0 {
        return Err(Error::NeedOddRank(n));
    }
    if n < 5 {
        return Err(Error::RankGuard { kind: 'D', n, min: 5 });
    }
    let t = phi_d_images(n);
    let g = GroupGrading::Sign;
    let pair = |a: usize, b: usize| St::from_clifford(&Cl::generator(n, a).mul(&Cl::generator(n, b)), n, g);
    let mut ff = FirstFailure::new();
    ff.check(t[n - 2].mul(&t[n - 1]) == pair(n - 1, n), || format!("φ(t_{})φ(t_{n}) ≠ c_{}c_{n}", n - 1, n - 1));
    for i in 1..=n - 2 {
        let lhs = t[i - 1].mul(&pair(i + 1, n)).mul(&t[i - 1]);
        ff.check(lhs == pair(i, n), || format!("φ(t_{i}) c_{}c_{n} φ(t_{i}) ≠ c_{i}c_{n}", i + 1));
    }
    Ok(CheckReport::from_outcome("surjectivity identities for the odd rank D map", json!({ "n": n }), ff.into_inner()))
}

/// `ζ² = 1`, `ζ` is odd and commutes with every `c_i`, and `ζ ⊗ 1` commutes
/// with the images of the `D_n` generators inside `Cl_n ⊗ ℂS_n`.
pub fn verify_zeta(n: usize) -> Result<CheckReport> {
    if n % 2 == 0 {
        return Err(Error::NeedOddRank(n));
    }
    let z = zeta(n);
    let mut ff = FirstFailure::new();
    ff.check(z.mul(&z) == Cl::one(n), || "ζ² ≠ 1".into());
    ff.check(z.parity() == Some(true), || "ζ is not odd".into());
    for i in 1..=n {
        let c = Cl::generator(n, i);
        ff.check(z.mul(&c) == c.mul(&z), || format!("ζ c_{i} ≠ c_{i} ζ"));
    }
    if n >= 3 {
        let zt = St::from_clifford(&z, n, GroupGrading::Even);
        for (i, x) in iota_images(&phi_b_images(n)).iter().enumerate() {
            ff.check(zt.mul(x) == x.mul(&zt), || format!("ζ does not commute with the image of t_{}", i + 1));
        }
    }
    Ok(CheckReport::from_outcome("central element ζ", json!({ "n": n }), ff.into_inner()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_matrices() {
        assert_eq!(coxeter_m(WeylType::B, 3, 2, 3), 4);
        assert_eq!(coxeter_m(WeylType::B, 3, 1, 3), 2);
        assert_eq!(coxeter_m(WeylType::D, 5, 3, 5), 3);
        assert_eq!(coxeter_m(WeylType::D, 5, 4, 5), 2);
        assert_eq!(coxeter_m(WeylType::A, 4, 4, 3), 3);
    }

    #[test]
    fn phi_b_small() {
        for n in 2..=4 {
            let r = verify_presentation_images(Target::PhiB, n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn phi_d_five() {
        let r = verify_presentation_images(Target::PhiD, 5).unwrap();
        assert!(r.passed(), "{r:?}");
        let t = phi_d_images(5);
        let w = t[4].mul(&t[2]).pow(3);
        assert_eq!(w.as_scalar(), Some(Scalar::one()));
        assert!(verify_presentation_images(Target::PhiD, 4).is_err());
    }

    #[test]
    fn omega_all_types() {
        for n in 1..=5 {
            assert!(verify_presentation_images(Target::Omega(WeylType::A), n).unwrap().passed());
        }
        let betas = simple_root_elements::<Scalar>(WeylType::B, 2);
        assert_eq!(betas[0].mul(&betas[1]).pow(4), Cl::scalar(2, Scalar::from_int(-1)));
        for n in 2..=5 {
            assert!(verify_presentation_images(Target::Omega(WeylType::B), n).unwrap().passed());
        }
        for n in 4..=5 {
            assert!(verify_presentation_images(Target::Omega(WeylType::D), n).unwrap().passed());
        }
    }

    #[test]
    fn wrong_sign_is_detected() {
        let mut images = phi_b_images(3);
        images[2] = images[2].mul(&images[1]).mul(&images[2]);
        assert!(spin_relation_failure(WeylType::B, &images).is_some());
    }

    #[test]
    fn comparison_maps() {
        for (ty, n) in [(WeylType::A, 2), (WeylType::A, 3), (WeylType::B, 2), (WeylType::B, 3), (WeylType::D, 4)] {
            let r = verify_presentation_images(Target::Phi(ty), n).unwrap();
            assert!(r.passed(), "{ty:?} {n}: {r:?}");
        }
    }

    #[test]
    fn zeta_and_identities() {
        for n in [1, 3, 5, 7] {
            assert!(verify_zeta(n).unwrap().passed(), "n = {n}");
        }
        assert!(verify_phi_d_surjectivity_identities(5).unwrap().passed());
        assert!(verify_phi_d_surjectivity_identities(3).is_err());
    }

    /// A real multiple of `c_1⋯c_n` cannot serve as ζ when `n ≡ 3 (mod 4)`.
    #[test]
    fn real_zeta_fails_for_n_three_mod_four() {
        let z = Cl::top(7).scale(&Scalar::from_int(-1));
        assert_eq!(z.mul(&z), Cl::scalar(7, Scalar::from_int(-1)));
    }
}
