//! Spin fake degrees and graded multiplicities in closed form.
//!
//! Every multiplicity series here is a hook/content product
//! `c · t^{2n(λ)} Π_{□∈λ} (1 + t^{2c_□+1}) / (1 - t^{2h_□})`
//! or a sum of two such products; a fake degree is the series multiplied by
//! `Π (1 - t^{d_i})` over the degrees of the group, which must divide out
//! exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::characters::{check_rank, clifford_module_dim, simple_modules, Algebra, ModuleIndex, ModuleType};
use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::{IntPolynomial, TruncatedSeries};
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeylType {
    A,
    B,
    D,
}

impl WeylType {
    fn letter(self) -> char {
        match self {
            WeylType::A => 'A',
            WeylType::B => 'B',
            WeylType::D => 'D',
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for WeylType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(WeylType::A),
            "B" | "b" => Ok(WeylType::B),
            "D" | "d" => Ok(WeylType::D),
            _ => Err(Error::Parse(format!("unknown Weyl type {s:?} (expected A, B or D)"))),
        }
    }
}

/// Which algebra's simple modules are being counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraFlavor {
    /// The spin Weyl group algebra `ℂW⁻`.
    Minus,
    /// The Hecke–Clifford algebra `Cl_V ⋊ W`.
    HeckeClifford,
}

impl FromStr for AlgebraFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" | "spin" => Ok(AlgebraFlavor::Minus),
            "hecke_clifford" | "hecke-clifford" | "hc" => Ok(AlgebraFlavor::HeckeClifford),
            _ => Err(Error::Parse(format!("unknown algebra {s:?} (expected minus or hecke_clifford)"))),
        }
    }
}

/// Degrees of the basic invariants.
pub fn degrees(ty: WeylType, n: usize) -> Result<Vec<usize>> {
    check_rank(ty.letter(), n)?;
    Ok(match ty {
        WeylType::A => (2..=n + 1).collect(),
        WeylType::B => b_degrees(n),
        WeylType::D => d_degrees(n),
    })
}

fn b_degrees(n: usize) -> Vec<usize> {
    (1..=n).map(|i| 2 * i).collect()
}

fn d_degrees(n: usize) -> Vec<usize> {
    (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect()
}

/// Number of reflections, which is also the sum of `d_i - 1`.
pub fn reflection_count(ty: WeylType, n: usize) -> Result<usize> {
    check_rank(ty.letter(), n)?;
    Ok(match ty {
        WeylType::A => n * (n + 1) / 2,
        WeylType::B => n * n,
        WeylType::D => n * (n - 1),
    })
}

/// `1 / Π (1 - t^{d_i})` to order `order`.
pub fn invariant_hilbert_series(ty: WeylType, n: usize, order: usize) -> Result<TruncatedSeries> {
    let den = degree_product(&degrees(ty, n)?);
    den.to_series(order).inverse()
}

fn degree_product(degrees: &[usize]) -> IntPolynomial {
    IntPolynomial::product(degrees.iter().map(|&d| IntPolynomial::one_minus(d)).collect::<Vec<_>>().iter())
}

/// `scalar · t^shift · Π(1 + t^{a}) / Π(1 - t^{b})` with all exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredRational {
    #[serde(serialize_with = "serialize_bigint")]
    pub scalar: BigInt,
    pub shift: usize,
    pub numerator: Vec<usize>,
    pub denominator: Vec<usize>,
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Accumulates factors `t^a (1 + t^b)` while tracking the monomial shift.
struct FactorBuilder {
    shift: i64,
    numerator: Vec<usize>,
}

impl FactorBuilder {
    fn new(shift: i64) -> Self {
        FactorBuilder { shift, numerator: Vec::new() }
    }

    /// Multiplies by `1 + t^e`, rewriting `1 + t^{-m}` as `t^{-m}(1 + t^m)`.
    fn one_plus(&mut self, e: i64) {
        if e < 0 {
            self.shift += e;
        }
        self.numerator.push(e.unsigned_abs() as usize);
    }

    /// Multiplies by `t^a + t^b`.
    fn binomial(&mut self, a: i64, b: i64) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        self.shift += lo;
        self.numerator.push((hi - lo) as usize);
    }

    fn finish(self, scalar: BigInt, denominator: Vec<usize>) -> Result<FactoredRational> {
        if self.shift < 0 {
            return Err(Error::NotPowerSeries(format!("monomial t^{}", self.shift)));
        }
        Ok(FactoredRational { scalar, shift: self.shift as usize, numerator: self.numerator, denominator })
    }
}

impl FactoredRational {
    /// The polynomial `scalar · t^shift · Π(1 + t^a)`.
    pub fn numerator_poly(&self) -> IntPolynomial {
        let mut p = IntPolynomial::monomial(self.scalar.clone(), self.shift);
        for &e in &self.numerator {
            p = p.mul(&IntPolynomial::one_plus(e));
        }
        p
    }

    pub fn denominator_poly(&self) -> IntPolynomial {
        degree_product(&self.denominator)
    }

    pub fn series(&self, order: usize) -> TruncatedSeries {
        self.numerator_poly()
            .to_series(order)
            .div(&self.denominator_poly().to_series(order))
            .expect("denominator has constant term 1")
    }

    /// `self · Π (1 - t^{d_i})`, which must be a polynomial.
    pub fn times_degree_product(&self, degrees: &[usize]) -> Result<IntPolynomial> {
        self.numerator_poly().mul(&degree_product(degrees)).div_exact(&self.denominator_poly())
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        FactoredRational { scalar: &self.scalar * c, ..self.clone() }
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.scalar.is_one() {
            parts.push(self.scalar.to_string());
        }
        match self.shift {
            0 => {}
            1 => parts.push("t".into()),
            k => parts.push(format!("t^{k}")),
        }
        let fac = |sign: char, e: usize| if e == 1 { format!("(1{sign}t)") } else { format!("(1{sign}t^{e})") };
        let num: String = self.numerator.iter().map(|&e| fac('+', e)).collect();
        if !num.is_empty() {
            parts.push(num);
        }
        let head = if parts.is_empty() { "1".to_string() } else { parts.join("·") };
        if self.denominator.is_empty() {
            f.write_str(&head)
        } else {
            let den: String = self.denominator.iter().map(|&e| fac('-', e)).collect();
            write!(f, "{head}/({den})")
        }
    }
}

/// A sum of factored rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredSum {
    pub terms: Vec<FactoredRational>,
}

impl FactoredSum {
    pub fn single(term: FactoredRational) -> Self {
        FactoredSum { terms: vec![term] }
    }

    pub fn series(&self, order: usize) -> TruncatedSeries {
        self.terms.iter().fold(TruncatedSeries::zero(order), |acc, t| acc.add(&t.series(order)))
    }

    /// `Σ terms · Π (1 - t^{d_i})`, dividing once by the product of all
    /// denominators so that only the total has to be a polynomial.
    pub fn times_degree_product(&self, degrees: &[usize]) -> Result<IntPolynomial> {
        let dens: Vec<IntPolynomial> = self.terms.iter().map(FactoredRational::denominator_poly).collect();
        let mut numerator = IntPolynomial::zero();
        for (i, t) in self.terms.iter().enumerate() {
            let mut term = t.numerator_poly();
            for (j, d) in dens.iter().enumerate() {
                if j != i {
                    term = term.mul(d);
                }
            }
            numerator = numerator.add(&term);
        }
        let common = IntPolynomial::product(dens.iter());
        numerator.mul(&degree_product(degrees)).div_exact(&common)
    }

    /// Halves every scalar, which must stay integral.
    pub fn halved(&self) -> Result<Self> {
        let two = BigInt::from(2);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if (&t.scalar % &two).is_zero() {
                    Ok(FactoredRational { scalar: &t.scalar / &two, ..t.clone() })
                } else {
                    Err(Error::NonExactDivision(format!("odd scalar {} in {t}", t.scalar)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FactoredSum { terms })
    }
}

impl fmt::Display for FactoredSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn nonempty(lambda: &Partition) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("the empty partition has no multiplicity series".into()));
    }
    Ok(())
}

fn hook_denominator(lambda: &Partition) -> Vec<usize> {
    lambda.hooks().into_iter().map(|h| 2 * h).collect()
}

/// `scalar · t^{2n(λ)} Π (1 + t^{2c+1}) / (1 - t^{2h})`.
pub fn hook_content_product(lambda: &Partition, scalar: BigInt) -> Result<FactoredRational> {
    let mut b = FactorBuilder::new(2 * lambda.n_stat() as i64);
    for c in lambda.contents() {
        b.one_plus(2 * c + 1);
    }
    b.finish(scalar, hook_denominator(lambda))
}

/// `scalar · t^{2n(λ)} Π (t^{2c} + t) / (1 - t^{2h})`, the same function as
/// the hook/content product of `λ'`.
pub fn conjugate_content_product(lambda: &Partition, scalar: BigInt) -> Result<FactoredRational> {
    let mut b = FactorBuilder::new(2 * lambda.n_stat() as i64);
    for c in lambda.contents() {
        b.binomial(2 * c, 1);
    }
    b.finish(scalar, hook_denominator(lambda))
}

/// `2^{p(n)}`: 2 when `n` is odd, 1 when even.
fn parity_scalar(n: usize) -> BigInt {
    BigInt::from(if n % 2 == 1 { 2 } else { 1 })
}

/// Graded multiplicity of `B^λ` in the basic spin module tensored with `S*V`.
pub fn h_minus_b(lambda: &Partition) -> Result<FactoredRational> {
    nonempty(lambda)?;
    hook_content_product(lambda, parity_scalar(lambda.size()))
}

/// Spin fake degree of `B^λ`.
pub fn p_minus_b(lambda: &Partition) -> Result<IntPolynomial> {
    check_rank('B', lambda.size())?;
    h_minus_b(lambda)?.times_degree_product(&b_degrees(lambda.size()))
}

/// Graded multiplicity of `K^λ` in `Cl_V ⊗ S*V`.
pub fn h_b_hecke_clifford(lambda: &Partition) -> Result<FactoredRational> {
    nonempty(lambda)?;
    hook_content_product(lambda, BigInt::one())
}

/// Spin fake degree of `K^λ`.
pub fn p_b_hecke_clifford(lambda: &Partition) -> Result<IntPolynomial> {
    check_rank('G', lambda.size())?;
    h_b_hecke_clifford(lambda)?.times_degree_product(&b_degrees(lambda.size()))
}

/// Graded multiplicity of the simple `ℂD_n⁻`-module attached to λ (the pair
/// `{λ, λ'}`, or either of the two modules when `n` is even and `λ = λ'`).
pub fn h_minus_d(lambda: &Partition) -> Result<FactoredSum> {
    let n = lambda.size();
    check_rank('D', n)?;
    let c = parity_scalar(n);
    let main = hook_content_product(lambda, c.clone())?;
    if lambda.is_symmetric() {
        Ok(FactoredSum::single(main))
    } else {
        Ok(FactoredSum { terms: vec![main, conjugate_content_product(lambda, c)?] })
    }
}

pub fn p_minus_d(lambda: &Partition) -> Result<IntPolynomial> {
    h_minus_d(lambda)?.times_degree_product(&d_degrees(lambda.size()))
}

/// Graded multiplicity of the Hecke–Clifford `D_n` simple attached to λ in
/// `Cl_V ⊗ S*V`. For odd `n` it is the `ℂD_n⁻` series when `λ = λ'` and half
/// of it otherwise; for even `n` the two coincide.
pub fn h_d_hecke_clifford(lambda: &Partition) -> Result<FactoredSum> {
    let minus = h_minus_d(lambda)?;
    if lambda.size() % 2 == 1 && !lambda.is_symmetric() {
        minus.halved()
    } else {
        Ok(minus)
    }
}

pub fn p_d_hecke_clifford(lambda: &Partition) -> Result<IntPolynomial> {
    h_d_hecke_clifford(lambda)?.times_degree_product(&d_degrees(lambda.size()))
}

/// Hecke–Clifford `D_n` fake degree for odd `n`, obtained from the `ℂD_n⁻`
/// fake degree by the factor 1 (`λ = λ'`) or 1/2 (`λ ≠ λ'`).
pub fn hc_d_factors(lambda: &Partition) -> Result<IntPolynomial> {
    let n = lambda.size();
    if n % 2 == 0 {
        return Err(Error::NeedOddRank(n));
    }
    let minus = p_minus_d(lambda)?;
    if lambda.is_symmetric() {
        Ok(minus)
    } else {
        minus.halve_exact()
    }
}

pub fn check_palindromic(p: &IntPolynomial, shift: usize) -> bool {
    p.is_palindromic(shift)
}

/// Multiplicity series and fake degree for one simple module.
fn closed_forms(ty: WeylType, flavor: AlgebraFlavor, lambda: &Partition) -> Result<(FactoredSum, IntPolynomial)> {
    match (ty, flavor) {
        (WeylType::B, AlgebraFlavor::Minus) => Ok((FactoredSum::single(h_minus_b(lambda)?), p_minus_b(lambda)?)),
        (WeylType::B, AlgebraFlavor::HeckeClifford) => {
            Ok((FactoredSum::single(h_b_hecke_clifford(lambda)?), p_b_hecke_clifford(lambda)?))
        }
        (WeylType::D, AlgebraFlavor::Minus) => Ok((h_minus_d(lambda)?, p_minus_d(lambda)?)),
        (WeylType::D, AlgebraFlavor::HeckeClifford) => Ok((h_d_hecke_clifford(lambda)?, p_d_hecke_clifford(lambda)?)),
        (WeylType::A, _) => Err(Error::Parse("type A fake degrees are not available".into())),
    }
}

/// Checks `P = H · Π(1 - t^{d_i})` as series up to one past the number of
/// reflections.
pub fn p_equals_h_times_degrees(lambda: &Partition, ty: WeylType, flavor: AlgebraFlavor) -> Result<CheckReport> {
    let n = lambda.size();
    let degs = degrees(ty, n)?;
    let order = reflection_count(ty, n)? + 1;
    let (h, p) = closed_forms(ty, flavor, lambda)?;
    let lhs = p.to_series(order);
    let rhs = h.series(order).mul(&degree_product(&degs).to_series(order));
    let params = json!({"type": ty, "lambda": lambda.to_string(), "algebra": flavor});
    let discrepancy = lhs
        .first_difference(&rhs)
        .map(|k| format!("coefficient of t^{k}: P has {}, H·Π(1-t^d) has {}", lhs.coeff(k), rhs.coeff(k)));
    Ok(CheckReport::from_outcome("fake degree equals multiplicity series times degree product", params, discrepancy))
}

/// One table row per simple module.
#[derive(Clone, Debug, Serialize)]
pub struct FakeDegreeRow {
    #[serde(rename = "type")]
    pub ty: WeylType,
    pub n: usize,
    pub algebra: AlgebraFlavor,
    pub label: ModuleIndex,
    /// Number of simple modules sharing this row (2 for the `±` pair).
    pub duplicity: usize,
    pub module_type: ModuleType,
    /// Dense coefficients from `t^0`, padded to the palindromic shift.
    #[serde(serialize_with = "serialize_bigint_vec")]
    pub coefficients: Vec<BigInt>,
    pub shift: usize,
    pub palindromic: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub value_at_one: BigInt,
}

fn serialize_bigint_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        match c.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

fn algebra_for(ty: WeylType, flavor: AlgebraFlavor) -> Result<Algebra> {
    match (ty, flavor) {
        (WeylType::B, AlgebraFlavor::Minus) => Ok(Algebra::CbMinus),
        (WeylType::B, AlgebraFlavor::HeckeClifford) => Ok(Algebra::HcB),
        (WeylType::D, AlgebraFlavor::Minus) => Ok(Algebra::CdMinus),
        (WeylType::D, AlgebraFlavor::HeckeClifford) => Ok(Algebra::HcD),
        (WeylType::A, _) => Err(Error::Parse("tables are available for types B and D".into())),
    }
}

/// Fake degree table in canonical partition order; the two `±` modules of
/// even rank type D share one row.
pub fn fake_degree_table(ty: WeylType, n: usize, flavor: AlgebraFlavor) -> Result<Vec<FakeDegreeRow>> {
    let algebra = algebra_for(ty, flavor)?;
    if ty == WeylType::B {
        check_rank('B', n)?;
    }
    let mut modules = simple_modules(algebra, n)?;
    modules.dedup_by(|a, b| matches!((&a.index, &b.index), (ModuleIndex::Signed(x, _), ModuleIndex::Signed(y, _)) if x == y));
    let shift = reflection_count(ty, n)?;
    modules
        .par_iter()
        .map(|m| {
            let (_, p) = closed_forms(ty, flavor, m.index.partition())?;
            let index = match &m.index {
                ModuleIndex::Signed(l, _) => ModuleIndex::Single(l.clone()),
                other => other.clone(),
            };
            let duplicity = if matches!(m.index, ModuleIndex::Signed(..)) { 2 } else { 1 };
            Ok(FakeDegreeRow {
                ty,
                n,
                algebra: flavor,
                label: index,
                duplicity,
                module_type: m.module_type,
                coefficients: (0..=shift.max(p.degree().unwrap_or(0))).map(|k| p.coeff(k)).collect(),
                shift,
                palindromic: p.is_palindromic(shift),
                value_at_one: p.eval_at_one(),
            })
        })
        .collect()
}

/// `Σ w · dim(L) · P_L(1) = dim(basic module) · |W|` over simple modules `L`,
/// with `w = 1/2` for type Q. The basic module is the simple Clifford module
/// for `ℂW⁻` and `Cl_V` itself for the Hecke–Clifford algebra.
pub fn sum_rule_check(ty: WeylType, n: usize, flavor: AlgebraFlavor) -> Result<CheckReport> {
    let algebra = algebra_for(ty, flavor)?;
    let modules = simple_modules(algebra, n)?;
    let mut total = Rational::zero();
    for m in &modules {
        let (_, p) = closed_forms(ty, flavor, m.index.partition())?;
        let mut term = Rational::from_integer(BigInt::from(m.dimension.clone()) * p.eval_at_one());
        if m.module_type == ModuleType::Q {
            term /= Rational::from_integer(BigInt::from(2));
        }
        total += term;
    }
    let order = match ty {
        WeylType::B => (BigInt::one() << n) * BigInt::from(factorial(n)),
        _ => (BigInt::one() << (n - 1)) * BigInt::from(factorial(n)),
    };
    let basic = match flavor {
        AlgebraFlavor::Minus => BigInt::from(clifford_module_dim(n)),
        AlgebraFlavor::HeckeClifford => BigInt::one() << n,
    };
    let expected = Rational::from_integer(basic * order);
    let params = json!({"type": ty, "n": n, "algebra": flavor});
    let discrepancy = (total != expected).then(|| format!("weighted sum {total}, expected {expected}"));
    Ok(CheckReport::from_outcome("regular representation sum rule", params, discrepancy))
}

/// Palindromicity of every fake degree of the given type and rank.
pub fn palindromicity_check(ty: WeylType, n: usize, flavor: AlgebraFlavor) -> Result<CheckReport> {
    let mut ff = FirstFailure::new();
    for row in fake_degree_table(ty, n, flavor)? {
        ff.check(row.palindromic, || format!("{} is not palindromic with shift {}", row.label, row.shift));
    }
    let params = json!({"type": ty, "n": n, "algebra": flavor});
    Ok(CheckReport::from_outcome("palindromic fake degrees", params, ff.into_inner()))
}

/// `t^{2n(λ')} Π_{λ'}(1 + t^{2c+1}) = t^{2n(λ)} Π_λ(t^{2c} + t)` for all λ ⊢ n.
pub fn conjugation_identity_check(n: usize) -> Result<CheckReport> {
    let mut ff = FirstFailure::new();
    for lambda in partitions_of(n) {
        let lhs = hook_content_product(&lambda.conjugate(), BigInt::one())?.numerator_poly();
        let rhs = conjugate_content_product(&lambda, BigInt::one())?.numerator_poly();
        ff.check(lhs == rhs, || format!("λ = {lambda}: {lhs} vs {rhs}"));
    }
    Ok(CheckReport::from_outcome("conjugate content identity", json!({ "n": n }), ff.into_inner()))
}
