//! Spin character values, character tables, and inventories of simple
//! supermodules with their types and dimensions.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};
use serde_json::json;

use super::classes::{check_rank, split_classes, ClassFamily, GroupKind, Parity, SplitClassLabel};
use super::mn::chi;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, strict_odd_partitions, Partition};
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::AlgebraicScalar;

fn require_size(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, got: lambda.size() });
    }
    Ok(())
}

/// Character of the simple `ℂB_n⁻`-module `B^λ` on an even split class
/// `(α, β)`:
/// `2^{(ℓ(α∪β)+ε)/2} (-1)^{(n-ℓ(α))/2} χ^λ_{α∪β}` with `ε = n mod 2`.
pub fn spin_char_b(lambda: &Partition, class: &SplitClassLabel) -> Result<AlgebraicScalar> {
    class.require(ClassFamily::BEven)?;
    let n = class.n();
    require_size(lambda, n)?;
    let rho = class.merged();
    let power = (rho.len() + n % 2) as i64;
    let sign = if ((n - class.rho_plus.len()) / 2) % 2 == 0 { 1 } else { -1 };
    let chi = chi(lambda, &rho) * sign;
    Ok(AlgebraicScalar::sqrt2_pow(power).scale(&crate::scalar::Rational::from_integer(chi)))
}

/// Character `φ^λ` of the simple Hecke–Clifford module `K^λ` on a split
/// class of `Γ_n`: `2^{ℓ(ρ)} χ^λ_ρ` with `ρ = ρ₊ ∪ ρ₋`.
pub fn hc_char_b(lambda: &Partition, class: &SplitClassLabel) -> Result<BigInt> {
    class.require(ClassFamily::Gamma)?;
    require_size(lambda, class.n())?;
    let rho = class.merged();
    Ok(chi(lambda, &rho) << rho.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Algebra {
    #[serde(rename = "CB_minus")]
    CbMinus,
    #[serde(rename = "CD_minus")]
    CdMinus,
    #[serde(rename = "HC_B")]
    HcB,
    #[serde(rename = "HC_D")]
    HcD,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::CbMinus => "CB_minus",
            Algebra::CdMinus => "CD_minus",
            Algebra::HcB => "HC_B",
            Algebra::HcD => "HC_D",
        }
    }

    fn rank_kind(self) -> char {
        match self {
            Algebra::CbMinus => 'B',
            Algebra::HcB => 'G',
            Algebra::CdMinus | Algebra::HcD => 'D',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModuleType {
    M,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// How a simple module is indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleIndex {
    Single(Partition),
    /// Unordered pair `{λ, λ'}` with `λ ≠ λ'`, stored with the member that
    /// comes first in canonical order in front.
    Pair(Partition, Partition),
    /// One of the two modules attached to `λ = λ'` in even rank type D.
    Signed(Partition, Sign),
}

impl ModuleIndex {
    /// The pair `{λ, λ'}` in canonical order, or the single partition when
    /// `λ = λ'`.
    pub fn conjugate_pair(lambda: &Partition) -> ModuleIndex {
        let conj = lambda.conjugate();
        if &conj == lambda {
            ModuleIndex::Single(lambda.clone())
        } else if lambda < &conj {
            ModuleIndex::Pair(lambda.clone(), conj)
        } else {
            ModuleIndex::Pair(conj, lambda.clone())
        }
    }

    /// The representative partition (first of a pair).
    pub fn partition(&self) -> &Partition {
        match self {
            ModuleIndex::Single(p) | ModuleIndex::Pair(p, _) | ModuleIndex::Signed(p, _) => p,
        }
    }
}

impl fmt::Display for ModuleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleIndex::Single(p) => write!(f, "{p}"),
            ModuleIndex::Pair(a, b) => write!(f, "{a}|{b}"),
            ModuleIndex::Signed(p, Sign::Plus) => write!(f, "{p}+"),
            ModuleIndex::Signed(p, Sign::Minus) => write!(f, "{p}-"),
        }
    }
}

impl Serialize for ModuleIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleModuleLabel {
    pub algebra: Algebra,
    pub index: ModuleIndex,
    pub module_type: ModuleType,
    #[serde(serialize_with = "serialize_biguint")]
    pub dimension: BigUint,
}

fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn pow2(k: usize) -> BigUint {
    BigUint::one() << k
}

/// Dimension of the simple Clifford module for `Cl_n`: `2^{⌈n/2⌉}`.
pub fn clifford_module_dim(n: usize) -> BigUint {
    pow2(n.div_ceil(2))
}

/// Complete list of simple supermodules, in canonical partition order.
pub fn simple_modules(algebra: Algebra, n: usize) -> Result<Vec<SimpleModuleLabel>> {
    check_rank(algebra.rank_kind(), n)?;
    let mut out = Vec::new();
    let odd = n % 2 == 1;
    for lambda in partitions_of(n) {
        let f = lambda.dimension();
        let sym = lambda.is_symmetric();
        let label = |index, module_type, dimension| SimpleModuleLabel { algebra, index, module_type, dimension };
        match algebra {
            Algebra::CbMinus => {
                let ty = if odd { ModuleType::Q } else { ModuleType::M };
                out.push(label(ModuleIndex::Single(lambda.clone()), ty, clifford_module_dim(n) * f));
            }
            Algebra::HcB => out.push(label(ModuleIndex::Single(lambda.clone()), ModuleType::M, pow2(n) * f)),
            Algebra::CdMinus | Algebra::HcD => {
                let index = ModuleIndex::conjugate_pair(&lambda);
                if index.partition() != &lambda {
                    continue;
                }
                let hc = algebra == Algebra::HcD;
                match (odd, sym) {
                    (true, true) => {
                        let (ty, dim) = if hc {
                            (ModuleType::Q, pow2(n) * f)
                        } else {
                            (ModuleType::M, pow2((n - 1) / 2) * f)
                        };
                        out.push(label(index, ty, dim));
                    }
                    (true, false) => {
                        let (ty, dim) = if hc {
                            (ModuleType::M, pow2(n) * f)
                        } else {
                            (ModuleType::Q, pow2(n.div_ceil(2)) * f)
                        };
                        out.push(label(index, ty, dim));
                    }
                    (false, false) => {
                        let dim = if hc { pow2(n) * f } else { pow2(n / 2) * f };
                        out.push(label(index, ModuleType::M, dim));
                    }
                    (false, true) => {
                        let dim = if hc { pow2(n - 1) * f } else { pow2(n / 2 - 1) * f };
                        for sign in [Sign::Plus, Sign::Minus] {
                            out.push(label(ModuleIndex::Signed(lambda.clone(), sign), ModuleType::M, dim.clone()));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A spin character table with exact entries.
#[derive(Clone, Debug, Serialize)]
pub struct CharTable {
    pub algebra: Algebra,
    pub n: usize,
    pub columns: Vec<SplitClassLabel>,
    pub rows: Vec<CharTableRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharTableRow {
    pub label: Partition,
    pub values: Vec<AlgebraicScalar>,
}

/// Table of `B^λ` on even split classes (`CB_minus`) or of `K^λ` on the
/// split classes of `Γ_n` (`HC_B`). Other algebras have no table here.
pub fn char_table(algebra: Algebra, n: usize) -> Result<CharTable> {
    let (group, family) = match algebra {
        Algebra::CbMinus => (GroupKind::B, ClassFamily::BEven),
        Algebra::HcB => (GroupKind::Gamma, ClassFamily::Gamma),
        other => {
            return Err(Error::Parse(format!(
                "no character table is available for {}; use CB_minus or HC_B",
                other.name()
            )))
        }
    };
    let columns: Vec<SplitClassLabel> =
        split_classes(group, n)?.into_iter().filter(|c| c.family == family).collect();
    let rows = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let values = columns
                .iter()
                .map(|c| match algebra {
                    Algebra::CbMinus => spin_char_b(&lambda, c),
                    _ => hc_char_b(&lambda, c).map(|v| AlgebraicScalar::from_rational(v.into())),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CharTableRow { label: lambda, values })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharTable { algebra, n, columns, rows })
}

/// Checks that `χ^λ` vanishes on every even-length class exactly when
/// `λ = λ'` (odd `n`).
pub fn lambda_selfconjugate_vanishing_check(n: usize) -> Result<CheckReport> {
    if n % 2 == 0 {
        return Err(Error::NeedOddRank(n));
    }
    let parts = partitions_of(n);
    let mut ff = FirstFailure::new();
    for lambda in &parts {
        let vanishes = parts.iter().filter(|mu| mu.len() % 2 == 0).all(|mu| chi(lambda, mu) == BigInt::from(0));
        ff.check(vanishes == lambda.is_symmetric(), || {
            format!("λ = {lambda}: vanishing on even-length classes is {vanishes}, self-conjugacy is {}", lambda.is_symmetric())
        });
    }
    Ok(CheckReport::from_outcome("self-conjugate vanishing criterion", json!({ "n": n }), ff.into_inner()))
}

/// Number of split classes of each parity compared with the number of
/// simple modules and of type-Q simple modules, for `B`, `D` and `Γ`.
pub fn split_class_counting_check(n: usize) -> CheckReport {
    let mut ff = FirstFailure::new();
    let cases = [(GroupKind::B, Algebra::CbMinus), (GroupKind::D, Algebra::CdMinus), (GroupKind::Gamma, Algebra::HcB)];
    for (group, algebra) in cases {
        let (Ok(classes), Ok(modules)) = (split_classes(group, n), simple_modules(algebra, n)) else {
            continue;
        };
        let even = classes.iter().filter(|c| c.parity == Parity::Even).count();
        let odd = classes.len() - even;
        let type_q = modules.iter().filter(|m| m.module_type == ModuleType::Q).count();
        ff.check(even == modules.len(), || {
            format!("{:?}, n = {n}: {even} even split classes but {} simple modules", group, modules.len())
        });
        ff.check(odd == type_q, || format!("{:?}, n = {n}: {odd} odd split classes but {type_q} of type Q", group));
        if group == GroupKind::D && n % 2 == 0 {
            let a_classes = super::classes::alternating_class_count(n);
            ff.check(classes.len() == a_classes, || {
                format!("D, n = {n}: {} split classes, alternating group has {a_classes} classes", classes.len())
            });
        }
    }
    CheckReport::from_outcome("split classes versus simple modules", json!({ "n": n }), ff.into_inner())
}

/// The three-way counts of simple `ℂD_n⁻`-modules of each type for odd `n`:
/// from class lengths, from strict odd partitions or pairs, and from
/// self-conjugate partitions.
pub fn odd_rank_counting_check(n: usize) -> Result<CheckReport> {
    if n % 2 == 0 {
        return Err(Error::NeedOddRank(n));
    }
    let parts = partitions_of(n);
    let even_codim = parts.iter().filter(|mu| (n - mu.len()) % 2 == 0).count();
    let odd_codim = parts.len() - even_codim;
    let sym = parts.iter().filter(|l| l.is_symmetric()).count();
    let strict_odd = strict_odd_partitions(n).len();
    let pairs = parts.iter().filter(|l| !l.is_symmetric() && **l < l.conjugate()).count();
    let mut ff = FirstFailure::new();
    ff.check(even_codim - odd_codim == strict_odd && strict_odd == sym, || {
        format!("type M: {} vs {strict_odd} vs {sym}", even_codim as i64 - odd_codim as i64)
    });
    ff.check(odd_codim == pairs && 2 * pairs == parts.len() - sym, || {
        format!("type Q: {odd_codim} vs {pairs} vs {}/2", parts.len() - sym)
    });
    Ok(CheckReport::from_outcome("odd rank type counts", json!({ "n": n }), ff.into_inner()))
}

/// For even `n`, compares the simple `ℂD_n⁻`-modules with those of
/// `Cl_n ⊗ ℂA_n` (simple Clifford module times an irreducible of the
/// alternating group). Agreement of the dimension lists and of `Σ dim²`
/// with `|D_n|` is consistent with an isomorphism but does not prove one.
pub fn even_rank_tensor_shadow_check(n: usize) -> Result<CheckReport> {
    if n % 2 == 1 {
        return Err(Error::Parse(format!("the tensor comparison needs even rank, got {n}")));
    }
    check_rank('D', n)?;
    let u = clifford_module_dim(n);
    let mut tensor_dims = Vec::new();
    for lambda in partitions_of(n) {
        let f = lambda.dimension();
        let conj = lambda.conjugate();
        if conj == lambda {
            tensor_dims.extend([&u * (&f >> 1), &u * (&f >> 1)]);
        } else if lambda < conj {
            tensor_dims.push(&u * f);
        }
    }
    let mut d_dims: Vec<BigUint> = simple_modules(Algebra::CdMinus, n)?.into_iter().map(|m| m.dimension).collect();
    tensor_dims.sort();
    d_dims.sort();
    let order = pow2(n - 1) * crate::partition::factorial(n);
    let squares: BigUint = d_dims.iter().map(|d| d * d).sum();
    let mut ff = FirstFailure::new();
    ff.check(tensor_dims == d_dims, || format!("dimension lists differ: {tensor_dims:?} vs {d_dims:?}"));
    ff.check(squares == order, || format!("sum of squared dimensions {squares}, |D_n| = {order}"));
    let params = json!({ "n": n });
    let mut report = CheckReport::from_outcome("Cl_n ⊗ CA_n against CD_n^- simple modules", params, ff.into_inner());
    if report.passed() {
        report.status = crate::report::Status::ConjectureConsistent;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn even_rank_tensor_shadow() {
        for n in [4, 6] {
            let r = even_rank_tensor_shadow_check(n).unwrap();
            assert_eq!(r.status, crate::report::Status::ConjectureConsistent, "{r:?}");
        }
        assert!(even_rank_tensor_shadow_check(5).is_err());
    }

    fn class(group: GroupKind, n: usize, plus: &str, minus: &str) -> SplitClassLabel {
        split_classes(group, n)
            .unwrap()
            .into_iter()
            .find(|c| c.rho_plus == p(plus) && c.rho_minus == p(minus))
            .unwrap()
    }

    #[test]
    fn spin_b_examples() {
        let id = class(GroupKind::B, 2, "1,1", "-");
        assert_eq!(spin_char_b(&p("2"), &id).unwrap(), AlgebraicScalar::from_int(2));
        let c = class(GroupKind::B, 2, "-", "2");
        assert_eq!(spin_char_b(&p("1,1"), &c).unwrap(), AlgebraicScalar::sqrt2());
        for n in 2..=7 {
            let id = class(GroupKind::B, n, &vec!["1"; n].join(","), "-");
            let v = spin_char_b(&Partition::row(n), &id).unwrap();
            let dim = clifford_module_dim(n);
            assert_eq!(v, AlgebraicScalar::from_rational(Rational::from_integer(dim.into())));
        }
    }

    #[test]
    fn spin_b_rejects_odd_classes() {
        let odd = split_classes(GroupKind::B, 3).unwrap().into_iter().find(|c| c.family == ClassFamily::BOdd).unwrap();
        assert!(matches!(spin_char_b(&p("3"), &odd), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn hc_b_examples() {
        let id = class(GroupKind::Gamma, 2, "1,1", "-");
        assert_eq!(hc_char_b(&p("2"), &id).unwrap(), BigInt::from(4));
        let c = class(GroupKind::Gamma, 3, "1", "2");
        assert_eq!(hc_char_b(&p("2,1"), &c).unwrap(), BigInt::from(0));
        for n in 1..=6 {
            for c in split_classes(GroupKind::Gamma, n).unwrap() {
                let v = hc_char_b(&Partition::row(n), &c).unwrap();
                assert_eq!(v, BigInt::from(1) << c.merged().len());
            }
        }
    }

    #[test]
    fn inventories() {
        let cb3 = simple_modules(Algebra::CbMinus, 3).unwrap();
        assert_eq!(cb3.len(), 3);
        assert!(cb3.iter().all(|m| m.module_type == ModuleType::Q));

        let cd5 = simple_modules(Algebra::CdMinus, 5).unwrap();
        let m: Vec<_> = cd5.iter().filter(|m| m.module_type == ModuleType::M).collect();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].index, ModuleIndex::Single(p("3,1,1")));
        assert_eq!(cd5.len() - m.len(), 3);

        let hc = simple_modules(Algebra::HcB, 4).unwrap();
        assert_eq!(hc.len(), 5);
        assert!(hc.iter().all(|m| m.module_type == ModuleType::M));

        let cd4 = simple_modules(Algebra::CdMinus, 4).unwrap();
        let labels: Vec<String> = cd4.iter().map(|m| m.index.to_string()).collect();
        assert_eq!(labels, vec!["4|1,1,1,1", "3,1|2,1,1", "2,2+", "2,2-"]);
        assert!(simple_modules(Algebra::CdMinus, 3).is_err());
    }

    /// Sum of squared dimensions equals the algebra dimension, with type-Q
    /// simples contributing half their square.
    #[test]
    fn wedderburn_dimension_count() {
        let factorial = |n: usize| crate::partition::factorial(n);
        for n in 2..=7 {
            for algebra in [Algebra::CbMinus, Algebra::CdMinus, Algebra::HcB, Algebra::HcD] {
                let Ok(mods) = simple_modules(algebra, n) else { continue };
                let mut total = BigUint::from(0u32);
                for m in &mods {
                    let sq = &m.dimension * &m.dimension;
                    total += if m.module_type == ModuleType::Q { sq / 2u32 } else { sq };
                }
                let expected = match algebra {
                    Algebra::CbMinus => pow2(n) * factorial(n),
                    Algebra::CdMinus => pow2(n - 1) * factorial(n),
                    Algebra::HcB => pow2(2 * n) * factorial(n),
                    Algebra::HcD => pow2(2 * n - 1) * factorial(n),
                };
                assert_eq!(total, expected, "{algebra:?}, n = {n}");
            }
        }
    }

    /// Orthogonality under `Σ z_ρ^{-1} 2^{-ℓ(ρ)} φ ψ` over even split classes.
    #[test]
    fn spin_b_orthogonality() {
        for n in 2..=7 {
            let table = char_table(Algebra::CbMinus, n).unwrap();
            for a in &table.rows {
                for b in &table.rows {
                    let mut sum = AlgebraicScalar::zero();
                    for (k, c) in table.columns.iter().enumerate() {
                        let rho = c.merged();
                        let w = Rational::new(BigInt::from(1), BigInt::from(rho.z_order()) << rho.len());
                        sum += &(&a.values[k] * &b.values[k]).scale(&w);
                    }
                    let expected = if a.label == b.label { if n % 2 == 0 { 1 } else { 2 } } else { 0 };
                    assert_eq!(sum, AlgebraicScalar::from_int(expected), "n = {n}, {} vs {}", a.label, b.label);
                }
            }
        }
    }

    #[test]
    fn vanishing_and_counting() {
        for n in (1..=11).step_by(2) {
            assert!(lambda_selfconjugate_vanishing_check(n).unwrap().passed());
            assert!(odd_rank_counting_check(n).unwrap().passed());
        }
        assert!(lambda_selfconjugate_vanishing_check(4).is_err());
        for n in 1..=10 {
            let r = split_class_counting_check(n);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn table_json_shape() {
        let t = char_table(Algebra::CbMinus, 2).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["columns"][1], "B_even[-;2]");
        assert_eq!(v["rows"][1]["label"], "1,1");
        assert_eq!(v["rows"][1]["values"][1]["sqrt2"], "1/1");
        assert_eq!(int(0), Rational::from_integer(0.into()));
        assert!(char_table(Algebra::CdMinus, 5).is_err());
    }
}
