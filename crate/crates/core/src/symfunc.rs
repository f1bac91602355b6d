//! Symmetric functions in finitely many variables with exact rational
//! coefficients: power sums, (skew) Schur polynomials by Jacobi–Trudi, super
//! Schur functions and the super Cauchy identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::characters::chi;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::TruncatedSeries;
use crate::report::CheckReport;
use crate::scalar::{AlgebraicScalar, Rational};

/// Linear combination of power sums `p_λ`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PowerSumExpansion {
    coefficients: BTreeMap<Partition, AlgebraicScalar>,
}

impl PowerSumExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &AlgebraicScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(lambda.clone()).or_insert_with(AlgebraicScalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&lambda);
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, AlgebraicScalar> {
        &self.coefficients
    }

    pub fn coeff(&self, lambda: &Partition) -> AlgebraicScalar {
        self.coefficients.get(lambda).cloned().unwrap_or_else(AlgebraicScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// True when every index partition has the same size.
    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.coefficients.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.coefficients {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &AlgebraicScalar) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.coefficients {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    /// Product, using `p_α p_β = p_{α∪β}`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.coefficients {
            for (b, y) in &o.coefficients {
                out.add_term(a.union(b), &(x * y));
            }
        }
        out
    }

    /// Hall inner product, `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
    pub fn hall_inner(&self, o: &Self) -> AlgebraicScalar {
        let mut total = AlgebraicScalar::zero();
        for (k, v) in &self.coefficients {
            if let Some(w) = o.coefficients.get(k) {
                let z = Rational::from_integer(BigInt::from(k.z_order()));
                total += &(v * w).scale(&z);
            }
        }
        total
    }
}

impl fmt::Debug for PowerSumExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coefficients.iter().map(|(k, v)| format!("({v})·p[{k}]")).collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `s_μ = Σ_λ z_λ^{-1} χ^μ_λ p_λ`.
pub fn schur_in_powersums(mu: &Partition) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::zero();
    for lam in partitions_of(mu.size()) {
        let c = Rational::new(chi(mu, &lam), BigInt::from(lam.z_order()));
        out.add_term(lam, &AlgebraicScalar::from_rational(c));
    }
    out
}

type Exponents = Vec<u16>;

/// Polynomial in `nvars` commuting variables with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultivariatePolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultivariatePolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u16]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_filtered(o, |_| true)
    }

    /// Product keeping only monomials accepted by `keep`.
    pub fn mul_filtered(&self, o: &Self, keep: impl Fn(&[u16]) -> bool) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if !keep(&e) {
                    continue;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    pub fn filter(&self, keep: impl Fn(&[u16]) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    /// Re-indexes into `total` variables, placing variable `i` at `offset + i`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= total);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut big = vec![0; total];
                big[offset..offset + self.nvars].copy_from_slice(e);
                (big, c.clone())
            })
            .collect();
        MultivariatePolynomial { nvars: total, terms }
    }

    /// Value with every variable set to 1.
    pub fn eval_at_ones(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c.clone())
            })
            .collect();
        MultivariatePolynomial { nvars: self.nvars, terms }
    }

    /// Substitutes each variable by a monomial `coeff · t^exp` and collects
    /// the result as a series in `t` truncated at `order`.
    pub fn specialize(&self, subs: &[(Rational, usize)], order: usize) -> TruncatedSeries {
        assert_eq!(subs.len(), self.nvars);
        let mut out = TruncatedSeries::zero(order);
        for (e, c) in &self.terms {
            let mut deg = 0usize;
            let mut val = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                deg += subs[k].1 * ek as usize;
                val *= num_traits::pow(subs[k].0.clone(), ek as usize);
            }
            if deg <= order {
                let cur = out.coeff(deg);
                out.set_coeff(deg, cur + val);
            }
        }
        out
    }
}

impl fmt::Debug for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}·x^{e:?}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `p_k(x_1..x_m)`.
pub fn power_sum(k: usize, m: usize) -> MultivariatePolynomial {
    let mut p = MultivariatePolynomial::zero(m);
    for i in 0..m {
        let mut e = vec![0; m];
        e[i] = k as u16;
        p.add_term(e, Rational::one());
    }
    p
}

/// Substitutes `p_k = x_1^k + … + x_m^k`. Coefficients must be rational.
pub fn evaluate_powersum(expansion: &PowerSumExpansion, m: usize) -> Result<MultivariatePolynomial> {
    let mut out = MultivariatePolynomial::zero(m);
    let mut cache: HashMap<usize, MultivariatePolynomial> = HashMap::new();
    for (lam, c) in expansion.coefficients() {
        if !c.is_rational() {
            return Err(Error::Irrational);
        }
        let mut term = MultivariatePolynomial::constant(m, c.rat.clone());
        for &k in lam.parts() {
            let pk = cache.entry(k).or_insert_with(|| power_sum(k, m));
            term = term.mul(pk);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Complete homogeneous polynomials `h_0..h_kmax` in `m` variables, built one
/// variable at a time: `h_k(x_1..x_j) = Σ_e x_j^e h_{k-e}(x_1..x_{j-1})`.
pub fn complete_homogeneous_upto(kmax: usize, m: usize) -> Vec<MultivariatePolynomial> {
    let mut layer: Vec<Vec<Exponents>> = (0..=kmax).map(|k| if k == 0 { vec![vec![]] } else { vec![] }).collect();
    for _ in 0..m {
        let mut next: Vec<Vec<Exponents>> = vec![Vec::new(); kmax + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            for e in 0..=k {
                for prev in &layer[k - e] {
                    let mut v = prev.clone();
                    v.push(e as u16);
                    slot.push(v);
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|monos| {
            let mut p = MultivariatePolynomial::zero(m);
            for e in monos {
                p.add_term(e, Rational::one());
            }
            p
        })
        .collect()
}

/// Elementary symmetric polynomials `e_0..e_kmax` in `m` variables.
pub fn elementary_upto(kmax: usize, m: usize) -> Vec<MultivariatePolynomial> {
    let mut out = vec![MultivariatePolynomial::zero(m); kmax + 1];
    for subset in 0u64..(1u64 << m) {
        let k = subset.count_ones() as usize;
        if k > kmax {
            continue;
        }
        let e: Exponents = (0..m).map(|i| ((subset >> i) & 1) as u16).collect();
        out[k].add_term(e, Rational::one());
    }
    out
}

/// The operations a Jacobi–Trudi determinant needs.
trait DetRing: Clone {
    fn unit(like: &Self) -> Self;
    fn null(like: &Self) -> Self;
    fn null_test(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
}

impl DetRing for MultivariatePolynomial {
    fn unit(like: &Self) -> Self {
        MultivariatePolynomial::one(like.nvars())
    }
    fn null(like: &Self) -> Self {
        MultivariatePolynomial::zero(like.nvars())
    }
    fn null_test(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
}

impl DetRing for TruncatedSeries {
    fn unit(like: &Self) -> Self {
        TruncatedSeries::one(like.order())
    }
    fn null(like: &Self) -> Self {
        TruncatedSeries::zero(like.order())
    }
    fn null_test(&self) -> bool {
        self.coeffs().iter().all(Zero::is_zero)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
}

/// Determinant by Laplace expansion along rows, memoised over the set of
/// used columns. `like` fixes the ambient ring for the empty matrix.
fn det<R: DetRing>(entries: &[Vec<Option<&R>>], like: &R) -> R {
    fn rec<R: DetRing>(row: usize, used: u64, entries: &[Vec<Option<&R>>], like: &R, memo: &mut HashMap<u64, R>) -> R {
        let n = entries.len();
        if row == n {
            return R::unit(like);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = R::null(like);
        let mut position = 0;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            if let Some(entry) = entries[row][col] {
                let minor = rec(row + 1, used | (1 << col), entries, like, memo);
                if !minor.null_test() {
                    let term = entry.times(&minor);
                    total = if position % 2 == 0 { total.plus(&term) } else { total.minus(&term) };
                }
            }
            position += 1;
        }
        memo.insert(used, total.clone());
        total
    }
    rec(0, 0, entries, like, &mut HashMap::new())
}

/// `det(basis[outer_i - inner_j - i + j])`, entries with negative index zero.
fn jacobi_trudi<R: DetRing>(outer: &Partition, inner: &Partition, basis: &[R]) -> R {
    let l = outer.len();
    let entries: Vec<Vec<Option<&R>>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let idx = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        None
                    } else {
                        basis.get(idx as usize).filter(|p| !p.null_test())
                    }
                })
                .collect()
        })
        .collect();
    det(&entries, &basis[0])
}

/// `h_0..h_kmax` at `(1, t, t², …)`, truncated at `order`, built one
/// variable at a time.
pub fn principal_complete_series(kmax: usize, order: usize) -> Vec<TruncatedSeries> {
    let mut h: Vec<TruncatedSeries> = (0..=kmax)
        .map(|k| if k == 0 { TruncatedSeries::one(order) } else { TruncatedSeries::zero(order) })
        .collect();
    for j in 0..=order {
        let prev = h.clone();
        for (k, hk) in h.iter_mut().enumerate() {
            let mut acc = TruncatedSeries::zero(order);
            for e in 0..=k {
                if e * j > order {
                    break;
                }
                acc = acc.add(&prev[k - e].mul(&TruncatedSeries::monomial(Rational::one(), e * j, order)));
            }
            *hk = acc;
        }
    }
    h
}

/// `s_{λ/μ}(1, t, t², …)` truncated at `order`, from Jacobi–Trudi.
pub fn skew_schur_principal(lambda: &Partition, mu: &Partition, h: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    if lambda.is_empty() {
        return Ok(TruncatedSeries::one(h[0].order()));
    }
    Ok(jacobi_trudi(lambda, mu, h))
}

/// Skew Schur polynomial `s_{λ/μ}(x_1..x_m)` via the Jacobi–Trudi
/// determinant in `h` or, when the conjugate shape is shorter, the dual
/// determinant in `e`.
pub fn skew_schur(lambda: &Partition, mu: &Partition, m: usize) -> Result<MultivariatePolynomial> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    let size = lambda.size() - mu.size();
    let lc = lambda.conjugate();
    if lc.len() < lambda.len() {
        if lc.is_empty() {
            return Ok(MultivariatePolynomial::one(m));
        }
        let basis = elementary_upto(size.min(m), m);
        Ok(jacobi_trudi(&lc, &mu.conjugate(), &basis))
    } else {
        if lambda.is_empty() {
            return Ok(MultivariatePolynomial::one(m));
        }
        let basis = complete_homogeneous_upto(size, m);
        Ok(jacobi_trudi(lambda, mu, &basis))
    }
}

pub fn schur(lambda: &Partition, m: usize) -> MultivariatePolynomial {
    if lambda.len() > m {
        return MultivariatePolynomial::zero(m);
    }
    skew_schur(lambda, &Partition::empty(), m).expect("empty partition is always contained")
}

/// All partitions whose diagram lies inside λ.
fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).expect("valid by construction"));
        if i > lambda.len() {
            return;
        }
        for p in 1..=bound.min(lambda.part(i)) {
            prefix.push(p);
            rec(lambda, i + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// `hs_λ(x; y) = Σ_{μ⊆λ} s_μ(x) s_{λ'/μ'}(y)`, with the `x` variables first.
pub fn super_schur_truncated(lambda: &Partition, x_count: usize, y_count: usize) -> MultivariatePolynomial {
    let total = x_count + y_count;
    let lc = lambda.conjugate();
    let mut out = MultivariatePolynomial::zero(total);
    for mu in subpartitions(lambda) {
        if mu.len() > x_count {
            continue;
        }
        let sx = schur(&mu, x_count);
        if sx.is_zero() {
            continue;
        }
        let sy = skew_schur(&lc, &mu.conjugate(), y_count).expect("μ ⊆ λ implies μ' ⊆ λ'");
        if sy.is_zero() {
            continue;
        }
        out = out.add(&sx.embed(total, 0).mul(&sy.embed(total, x_count)));
    }
    out
}

/// A monomial `coeff · t^exp` used as a specialization parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub exp: i64,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: i64) -> Self {
        Monomial { coeff, exp }
    }
}

/// `hs_λ(a q^•; b q^•)` with `q = t^r`, as exact factored data.
#[derive(Clone, Debug)]
pub struct SpecializedSuperSchur {
    /// Power of `t` in front (`r·n(λ)`).
    pub shift: i64,
    /// Numerator factors `a + b q^{c}` as pairs of monomials in `t`.
    pub numerator: Vec<(Monomial, Monomial)>,
    /// Exponents `e` of the denominator factors `1 - t^e`.
    pub denominator: Vec<usize>,
}

impl SpecializedSuperSchur {
    /// Expands to a power series; fails if negative powers of `t` survive.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let mut laurent: BTreeMap<i64, Rational> = BTreeMap::new();
        laurent.insert(self.shift, Rational::one());
        for (a, b) in &self.numerator {
            let mut next: BTreeMap<i64, Rational> = BTreeMap::new();
            for (e, c) in &laurent {
                for m in [a, b] {
                    if !m.coeff.is_zero() {
                        *next.entry(e + m.exp).or_insert_with(Rational::zero) += c * &m.coeff;
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            laurent = next;
        }
        if let Some((&low, _)) = laurent.iter().next() {
            if low < 0 {
                return Err(Error::NotPowerSeries(format!("term t^{low} remains")));
            }
        }
        let mut num = TruncatedSeries::zero(order);
        for (e, c) in laurent {
            if (e as usize) <= order {
                num.set_coeff(e as usize, c);
            }
        }
        let mut den = TruncatedSeries::one(order);
        for &e in &self.denominator {
            den = den.mul(&crate::poly::IntPolynomial::one_minus(e).to_series(order));
        }
        num.div(&den)
    }
}

/// Closed form `q^{n(λ)} Π (a + b q^{c}) / (1 - q^{h})` with `q = t^{q_exp}`.
pub fn super_schur_specialized(lambda: &Partition, a: &Monomial, b: &Monomial, q_exp: usize) -> SpecializedSuperSchur {
    let r = q_exp as i64;
    let cells = lambda.hooks_and_contents();
    SpecializedSuperSchur {
        shift: r * lambda.n_stat() as i64,
        numerator: cells
            .iter()
            .map(|c| (a.clone(), Monomial::new(b.coeff.clone(), b.exp + r * c.content)))
            .collect(),
        denominator: cells.iter().map(|c| q_exp * c.hook).collect(),
    }
}

/// Expands both sides of
/// `Π_{j,k}(1 + y_j z_k) / Π_{i,k}(1 - x_i z_k) = Σ_λ hs_λ(x;y) s_λ(z)`
/// up to degree `degree` in the `z` variables and compares them exactly.
pub fn verify_super_cauchy(degree: usize, x_count: usize, y_count: usize, z_count: usize) -> CheckReport {
    let params = json!({"degree": degree, "x": x_count, "y": y_count, "z": z_count});
    let total = x_count + y_count + z_count;
    let zoff = x_count + y_count;
    let zdeg = |e: &[u16]| e[zoff..].iter().map(|&v| v as usize).sum::<usize>();
    let keep = |e: &[u16]| zdeg(e) <= degree;

    let mut lhs = MultivariatePolynomial::one(total);
    for k in 0..z_count {
        let z = zoff + k;
        for j in 0..y_count {
            let mut f = MultivariatePolynomial::one(total);
            let mut e = vec![0; total];
            e[x_count + j] = 1;
            e[z] = 1;
            f.add_term(e, Rational::one());
            lhs = lhs.mul_filtered(&f, keep);
        }
        for i in 0..x_count {
            let mut f = MultivariatePolynomial::zero(total);
            for m in 0..=degree {
                let mut e = vec![0; total];
                e[i] = m as u16;
                e[z] = m as u16;
                f.add_term(e, Rational::one());
            }
            lhs = lhs.mul_filtered(&f, keep);
        }
    }

    let mut rhs = MultivariatePolynomial::zero(total);
    for n in 0..=degree {
        for lam in partitions_of(n) {
            let sz = schur(&lam, z_count);
            if sz.is_zero() {
                continue;
            }
            let hs = super_schur_truncated(&lam, x_count, y_count);
            rhs = rhs.add(&hs.embed(total, 0).mul(&sz.embed(total, zoff)));
        }
    }

    let diff = lhs.sub(&rhs);
    let discrepancy = diff.terms().keys().next().map(|e| {
        format!("monomial exponents {e:?}: lhs {} vs rhs {}", lhs.coeff(e), rhs.coeff(e))
    });
    CheckReport::from_outcome("super Cauchy identity", params, discrepancy)
}

/// Compares the hook/content closed form of `hs_λ(a q^•; q^•)` with
/// `Σ_{μ⊆λ} a^{|μ|} s_μ(q^•) s_{λ'/μ'}(q^•)`, each Schur factor evaluated by
/// Jacobi–Trudi at `(1, q, q², …)`, at several values of `a`. Both sides
/// are polynomials of degree `|λ|` in `a`, so `|λ| + 1` distinct values
/// determine the identity in `a`; homogeneity then gives it for an
/// independent `b`.
pub fn verify_specialization(lambda: &Partition, order: usize) -> CheckReport {
    let params = json!({"lambda": lambda.to_string(), "order": order});
    let h = principal_complete_series(lambda.size(), order);
    let lc = lambda.conjugate();
    let mut pieces = Vec::new();
    for mu in subpartitions(lambda) {
        let sx = skew_schur_principal(&mu, &Partition::empty(), &h).expect("empty partition is contained");
        let sy = skew_schur_principal(&lc, &mu.conjugate(), &h).expect("μ ⊆ λ implies μ' ⊆ λ'");
        pieces.push((mu.size(), sx.mul(&sy)));
    }
    let one = Monomial::new(Rational::one(), 0);
    for step in 0..=lambda.size() as i64 {
        let a = Rational::new(BigInt::from(2 * step - 3), BigInt::from(step + 1));
        let direct = pieces.iter().fold(TruncatedSeries::zero(order), |acc, (k, s)| {
            acc.add(&s.scale(&num_traits::pow(a.clone(), *k)))
        });
        let closed = match super_schur_specialized(lambda, &Monomial::new(a.clone(), 0), &one, 1).series(order) {
            Ok(s) => s,
            Err(e) => return CheckReport::fail("hook-content specialization", params, e.to_string()),
        };
        if let Some(k) = direct.first_difference(&closed) {
            return CheckReport::fail(
                "hook-content specialization",
                params,
                format!("a = {a}, coefficient of t^{k}: direct {} vs closed form {}", direct.coeff(k), closed.coeff(k)),
            );
        }
    }
    CheckReport::pass("hook-content specialization", params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn alg(r: Rational) -> AlgebraicScalar {
        AlgebraicScalar::from_rational(r)
    }

    #[test]
    fn principal_specializations() {
        let h = principal_complete_series(3, 6);
        // s_(2)(1, t, t², …) = 1/((1-t)(1-t²)), s_(1,1) = t/((1-t)(1-t²))
        let s2 = skew_schur_principal(&p("2"), &p("-"), &h).unwrap();
        let s11 = skew_schur_principal(&p("1,1"), &p("-"), &h).unwrap();
        let expected: Vec<Rational> = [1, 1, 2, 2, 3, 3, 4].iter().map(|&v| int(v)).collect();
        assert_eq!(s2.coeffs(), expected.as_slice());
        assert_eq!(s11.coeff(0), int(0));
        assert_eq!(s11.coeff(5), int(3));
        let skew = skew_schur_principal(&p("2,1"), &p("1"), &h).unwrap();
        assert_eq!(skew, h[1].mul(&h[1]));
        assert!(skew_schur_principal(&p("1"), &p("2"), &h).is_err());
    }

    #[test]
    fn schur_power_sum_examples() {
        let s1 = schur_in_powersums(&p("1"));
        assert_eq!(s1.coeff(&p("1")), alg(int(1)));
        let s2 = schur_in_powersums(&p("2"));
        assert_eq!(s2.coeff(&p("2")), alg(rat(1, 2)));
        assert_eq!(s2.coeff(&p("1,1")), alg(rat(1, 2)));
        let s21 = schur_in_powersums(&p("2,1"));
        assert_eq!(s21.coeff(&p("1,1,1")), alg(rat(1, 3)));
        assert_eq!(s21.coeff(&p("3")), alg(rat(-1, 3)));
        assert_eq!(s21.coeff(&p("2,1")), AlgebraicScalar::zero());
    }

    #[test]
    fn powersum_evaluation_examples() {
        let p1 = schur_in_powersums(&p("1"));
        let e = evaluate_powersum(&p1, 2).unwrap();
        assert_eq!(e, MultivariatePolynomial::var(2, 0).add(&MultivariatePolynomial::var(2, 1)));
        assert!(evaluate_powersum(&schur_in_powersums(&p("1,1")), 1).unwrap().is_zero());
        let s21 = evaluate_powersum(&schur_in_powersums(&p("2,1")), 3).unwrap();
        assert_eq!(s21.len(), 7);
        assert_eq!(s21.coeff(&[1, 1, 1]), int(2));
        let mut sqrt = PowerSumExpansion::zero();
        sqrt.add_term(p("1"), &AlgebraicScalar::sqrt2());
        assert_eq!(evaluate_powersum(&sqrt, 2), Err(Error::Irrational));
    }

    /// Jacobi–Trudi agrees with the power-sum route, which only uses
    /// Murnaghan–Nakayama.
    #[test]
    fn jacobi_trudi_matches_power_sums() {
        for n in 0..=5 {
            for lam in partitions_of(n) {
                for m in 1..=4 {
                    let jt = schur(&lam, m);
                    let ps = evaluate_powersum(&schur_in_powersums(&lam), m).unwrap();
                    assert_eq!(jt, ps, "λ = {lam}, m = {m}");
                }
            }
        }
    }

    /// Semistandard tableaux of a skew shape, counted directly.
    fn count_ssyt(lambda: &Partition, mu: &Partition, m: usize) -> usize {
        let cells: Vec<(usize, usize)> = (1..=lambda.len())
            .flat_map(|i| (mu.part(i) + 1..=lambda.part(i)).map(move |j| (i, j)))
            .collect();
        fn fill(k: usize, cells: &[(usize, usize)], vals: &mut HashMap<(usize, usize), usize>, m: usize) -> usize {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let mut total = 0;
            for v in 1..=m {
                if let Some(&left) = vals.get(&(i, j - 1)) {
                    if left > v {
                        continue;
                    }
                }
                if let Some(&up) = vals.get(&(i - 1, j)) {
                    if up >= v {
                        continue;
                    }
                }
                vals.insert((i, j), v);
                total += fill(k + 1, cells, vals, m);
                vals.remove(&(i, j));
            }
            total
        }
        fill(0, &cells, &mut HashMap::new(), m)
    }

    #[test]
    fn skew_schur_examples() {
        let s = skew_schur(&p("2,1"), &p("1"), 2).unwrap();
        assert_eq!(s.eval_at_ones(), int(4));
        let expected = schur(&p("2"), 2).add(&schur(&p("1,1"), 2));
        assert_eq!(s, expected);
        assert_eq!(skew_schur(&p("3,1"), &p("3,1"), 3).unwrap(), MultivariatePolynomial::one(3));
        assert_eq!(skew_schur(&p("3,1"), &Partition::empty(), 3).unwrap(), schur(&p("3,1"), 3));
        assert_eq!(skew_schur(&p("2"), &p("1,1"), 2), Err(Error::NotContained));
    }

    #[test]
    fn skew_schur_counts_tableaux() {
        for n in 0..=5 {
            for lam in partitions_of(n) {
                for mu in subpartitions(&lam) {
                    for m in 1..=3 {
                        let s = skew_schur(&lam, &mu, m).unwrap();
                        let expected = count_ssyt(&lam, &mu, m);
                        assert_eq!(s.eval_at_ones(), int(expected as i64), "{lam}/{mu}, m = {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn schur_polynomials_are_symmetric() {
        for lam in partitions_of(4) {
            let s = schur(&lam, 4);
            for i in 0..3 {
                assert_eq!(s.swap_vars(i, i + 1), s);
            }
        }
        let s = skew_schur(&p("3,2"), &p("1"), 3).unwrap();
        assert_eq!(s.swap_vars(0, 2), s);
    }

    #[test]
    fn super_schur_examples() {
        let h1 = super_schur_truncated(&p("1"), 2, 2);
        let expected = (0..4).fold(MultivariatePolynomial::zero(4), |acc, i| acc.add(&MultivariatePolynomial::var(4, i)));
        assert_eq!(h1, expected);

        let h11 = super_schur_truncated(&p("1,1"), 1, 1);
        let mut expected = MultivariatePolynomial::zero(2);
        expected.add_term(vec![0, 2], int(1));
        expected.add_term(vec![1, 1], int(1));
        assert_eq!(h11, expected);

        assert_eq!(super_schur_truncated(&Partition::empty(), 2, 3), MultivariatePolynomial::one(5));
    }

    #[test]
    fn super_schur_degenerations() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                let hs = super_schur_truncated(&lam, 3, 3);
                let x_only = hs.filter(|e| e[3..].iter().all(|&v| v == 0));
                assert_eq!(x_only, schur(&lam, 3).embed(6, 0), "hs(x;0), λ = {lam}");
                let y_only = hs.filter(|e| e[..3].iter().all(|&v| v == 0));
                assert_eq!(y_only, schur(&lam.conjugate(), 3).embed(6, 3), "hs(0;y), λ = {lam}");
            }
        }
    }

    #[test]
    fn specialization_examples() {
        let one = Monomial::new(int(1), 0);
        let t = Monomial::new(int(1), 1);
        let s = super_schur_specialized(&p("1"), &one, &one, 1);
        assert_eq!(s.denominator, vec![1]);
        let series = s.series(4).unwrap();
        assert!(series.coeffs().iter().all(|c| *c == int(2)));

        let s = super_schur_specialized(&p("2"), &one, &t, 2).series(10).unwrap();
        let num = crate::poly::IntPolynomial::from_i64(&[1, 1, 0, 1, 1]).to_series(10);
        let den = crate::poly::IntPolynomial::one_minus(4).mul(&crate::poly::IntPolynomial::one_minus(2)).to_series(10);
        assert_eq!(s, num.div(&den).unwrap());

        // a = 0 leaves b^2 / ((1 - q^2)(1 - q)) for λ = (1,1); take b = t, q = t.
        let zero = Monomial::new(int(0), 0);
        let s = super_schur_specialized(&p("1,1"), &zero, &t, 1).series(8).unwrap();
        let den = crate::poly::IntPolynomial::one_minus(2).mul(&crate::poly::IntPolynomial::one_minus(1)).to_series(8);
        assert_eq!(s, crate::poly::IntPolynomial::monomial(BigInt::one(), 2).to_series(8).div(&den).unwrap());
    }

    #[test]
    fn cauchy_small_degrees() {
        assert!(verify_super_cauchy(0, 1, 1, 1).passed());
        assert!(verify_super_cauchy(1, 2, 1, 2).passed());
        assert!(verify_super_cauchy(3, 2, 2, 2).passed());
    }

    #[test]
    fn specialization_identity_small() {
        for n in 0..=3 {
            for lam in partitions_of(n) {
                let r = verify_specialization(&lam, 6);
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn schur_orthonormality() {
        for n in 1..=6 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    let v = schur_in_powersums(a).hall_inner(&schur_in_powersums(b));
                    let expected = if a == b { 1 } else { 0 };
                    assert_eq!(v, AlgebraicScalar::from_int(expected));
                }
            }
        }
    }
}
