//! Exact Clifford algebras `Cl_n` with `c_i² = 1` and `c_i c_j = -c_j c_i`.
//!
//! A basis monomial `c_I = c_{i_1} ⋯ c_{i_r}` (increasing indices) is stored
//! as a bitmask, bit `i - 1` standing for `c_i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Field;

/// Sign of `c_A c_B = ± c_{A ⊕ B}`: one factor `-1` for every pair
/// `a ∈ A`, `b ∈ B` with `a > b`.
pub fn clifford_sign(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let low = rest.trailing_zeros();
        swaps += (a >> (low + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps % 2 == 1
}

#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement<F: Field> {
    rank: usize,
    terms: BTreeMap<u64, F>,
}

impl<F: Field> CliffordElement<F> {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= 63, "Clifford rank {rank} is too large");
        CliffordElement { rank, terms: BTreeMap::new() }
    }

    pub fn scalar(rank: usize, c: F) -> Self {
        Self::monomial(rank, 0, c)
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, F::one())
    }

    pub fn monomial(rank: usize, mask: u64, c: F) -> Self {
        let mut e = Self::zero(rank);
        assert!(mask >> rank == 0, "monomial outside rank {rank}");
        if !c.is_zero() {
            e.terms.insert(mask, c);
        }
        e
    }

    /// The generator `c_i`, with `1 ≤ i ≤ rank`.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "generator c_{i} outside rank {rank}");
        Self::monomial(rank, 1 << (i - 1), F::one())
    }

    /// `c_1 c_2 ⋯ c_rank`.
    pub fn top(rank: usize) -> Self {
        Self::monomial(rank, (1u64 << rank) - 1, F::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<u64, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> F {
        self.terms.get(&mask).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient of the identity.
    pub fn scalar_part(&self) -> F {
        self.coeff(0)
    }

    fn add_term(&mut self, mask: u64, c: F) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.get(&mask) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if merged.is_zero() {
            self.terms.remove(&mask);
        } else {
            self.terms.insert(mask, merged);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::from_int(-1)))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.rank);
        for (m, v) in &self.terms {
            out.add_term(*m, v.times(c));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank);
        let mut out = Self::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let v = x.times(y);
                out.add_term(a ^ b, if clifford_sign(*a, *b) { v.negate() } else { v });
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.rank), |acc, _| acc.mul(self))
    }

    /// `Some(true)` for odd, `Some(false)` for even, `None` if inhomogeneous
    /// or zero.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|m| m.count_ones() % 2 == 1);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Re-embeds into a larger rank, shifting generator `c_i` to
    /// `c_{i + offset}`.
    pub fn embed(&self, rank: usize, offset: usize) -> Self {
        assert!(self.rank + offset <= rank);
        let mut out = Self::zero(rank);
        for (m, c) in &self.terms {
            out.add_term(m << offset, c.clone());
        }
        out
    }

    /// `(xy + yx) / 2`, which is the scalar `(u, v)` for linear elements.
    pub fn symmetric_product(&self, o: &Self) -> Self {
        let half = F::from_rational(crate::scalar::rat(1, 2));
        self.mul(o).add(&o.mul(self)).scale(&half)
    }

    /// Trace of left multiplication on `Cl_rank` itself.
    pub fn regular_trace(&self) -> F {
        self.scalar_part().times(&F::from_rational(crate::scalar::pow2(self.rank as i64)))
    }
}

impl<F: Field> fmt::Debug for CliffordElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    format!("({c})")
                } else {
                    let idx: Vec<String> = (0..64).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                    format!("({c})c[{}]", idx.join(","))
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `(c_i - c_j)/√2`.
pub fn difference_root<F: Field>(rank: usize, i: usize, j: usize) -> CliffordElement<F> {
    CliffordElement::generator(rank, i).sub(&CliffordElement::generator(rank, j)).scale(&F::inv_sqrt2())
}

/// `(c_i + c_j)/√2`.
pub fn sum_root<F: Field>(rank: usize, i: usize, j: usize) -> CliffordElement<F> {
    CliffordElement::generator(rank, i).add(&CliffordElement::generator(rank, j)).scale(&F::inv_sqrt2())
}

/// Clifford images `β_1, …, β_n` of the simple roots. Type A lives in
/// `Cl_{n+1}`, types B and D in `Cl_n`.
pub fn simple_root_elements<F: Field>(ty: crate::fake_degrees::WeylType, n: usize) -> Vec<CliffordElement<F>> {
    use crate::fake_degrees::WeylType;
    let rank = clifford_rank(ty, n);
    (1..=n)
        .map(|i| match ty {
            WeylType::A => difference_root(rank, i, i + 1),
            WeylType::B if i == n => CliffordElement::generator(rank, n),
            WeylType::D if i == n => sum_root(rank, n - 1, n),
            _ => difference_root(rank, i, i + 1),
        })
        .collect()
}

/// Rank of the Clifford algebra carrying the root elements.
pub fn clifford_rank(ty: crate::fake_degrees::WeylType, n: usize) -> usize {
    match ty {
        crate::fake_degrees::WeylType::A => n + 1,
        _ => n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::AlgebraicScalar;
    use proptest::prelude::*;

    type Cl = CliffordElement<AlgebraicScalar>;

    #[test]
    fn generator_relations() {
        for n in 1..=6 {
            for i in 1..=n {
                let ci = Cl::generator(n, i);
                assert_eq!(ci.mul(&ci), Cl::one(n));
                for j in 1..=n {
                    if i != j {
                        let cj = Cl::generator(n, j);
                        assert_eq!(ci.mul(&cj), cj.mul(&ci).scale(&AlgebraicScalar::from_int(-1)));
                    }
                }
            }
        }
    }

    #[test]
    fn sign_rule_examples() {
        assert!(!clifford_sign(0b01, 0b10));
        assert!(clifford_sign(0b10, 0b01));
        // c_1c_2 · c_1c_2 = -1
        let e = Cl::monomial(2, 0b11, AlgebraicScalar::one());
        assert_eq!(e.mul(&e), Cl::scalar(2, AlgebraicScalar::from_int(-1)));
    }

    #[test]
    fn roots_are_unit_vectors() {
        let b = difference_root::<AlgebraicScalar>(3, 1, 2);
        assert_eq!(b.mul(&b), Cl::one(3));
        assert_eq!(b.parity(), Some(true));
        assert_eq!(Cl::top(3).parity(), Some(true));
        assert_eq!(Cl::one(3).add(&Cl::generator(3, 1)).parity(), None);
    }

    fn arb_element(rank: usize) -> impl Strategy<Value = Cl> {
        prop::collection::vec((0u64..(1 << rank), -3i64..4), 1..6).prop_map(move |terms| {
            terms.into_iter().fold(Cl::zero(rank), |acc, (m, c)| {
                acc.add(&Cl::monomial(rank, m, AlgebraicScalar::from_int(c)))
            })
        })
    }

    proptest! {
        #[test]
        fn associativity(x in arb_element(4), y in arb_element(4), z in arb_element(4)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }
    }
}
