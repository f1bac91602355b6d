//! The super tensor product `Cl_m ⊗ ℂS_k`, with
//! `(a ⊗ g)(a' ⊗ g') = (-1)^{|g||a'|} aa' ⊗ gg'`.

use std::collections::BTreeMap;
use std::fmt;

use super::clifford::{clifford_sign, CliffordElement};
use crate::scalar::Field;

/// How permutations are graded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupGrading {
    /// Every permutation is even.
    Even,
    /// A permutation has the parity of its sign (transpositions are odd).
    Sign,
}

/// A permutation of `{0, …, k-1}`, stored as its list of images.
pub type Perm = Vec<u8>;

pub fn identity_perm(k: usize) -> Perm {
    (0..k as u8).collect()
}

/// The simple transposition `s_i = (i, i+1)`, 1-based.
pub fn simple_transposition(k: usize, i: usize) -> Perm {
    let mut p = identity_perm(k);
    p.swap(i - 1, i);
    p
}

/// `(gh)(x) = g(h(x))`.
pub fn compose(g: &[u8], h: &[u8]) -> Perm {
    h.iter().map(|&x| g[x as usize]).collect()
}

pub fn perm_is_odd(g: &[u8]) -> bool {
    let mut seen = vec![false; g.len()];
    let mut transpositions = 0;
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = g[x] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperTensorElement<F: Field> {
    clifford_rank: usize,
    degree: usize,
    grading: GroupGrading,
    terms: BTreeMap<(u64, Perm), F>,
}

impl<F: Field> SuperTensorElement<F> {
    pub fn zero(clifford_rank: usize, degree: usize, grading: GroupGrading) -> Self {
        SuperTensorElement { clifford_rank, degree, grading, terms: BTreeMap::new() }
    }

    pub fn one(clifford_rank: usize, degree: usize, grading: GroupGrading) -> Self {
        let mut e = Self::zero(clifford_rank, degree, grading);
        e.terms.insert((0, identity_perm(degree)), F::one());
        e
    }

    /// `a ⊗ 1`.
    pub fn from_clifford(a: &CliffordElement<F>, degree: usize, grading: GroupGrading) -> Self {
        let mut e = Self::zero(a.rank(), degree, grading);
        for (m, c) in a.terms() {
            e.terms.insert((*m, identity_perm(degree)), c.clone());
        }
        e
    }

    /// `1 ⊗ g`.
    pub fn from_perm(clifford_rank: usize, g: Perm, grading: GroupGrading) -> Self {
        let mut e = Self::zero(clifford_rank, g.len(), grading);
        e.terms.insert((0, g), F::one());
        e
    }

    /// `a ⊗ s_i`.
    pub fn clifford_times_transposition(a: &CliffordElement<F>, degree: usize, i: usize, grading: GroupGrading) -> Self {
        Self::from_clifford(a, degree, grading).mul(&Self::from_perm(a.rank(), simple_transposition(degree, i), grading))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u64, Perm), F> {
        &self.terms
    }

    fn group_odd(&self, g: &[u8]) -> bool {
        self.grading == GroupGrading::Sign && perm_is_odd(g)
    }

    fn add_term(&mut self, key: (u64, Perm), c: F) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.get(&key) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if merged.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, merged);
        }
    }

    fn compatible(&self, o: &Self) {
        assert_eq!(
            (self.clifford_rank, self.degree, self.grading),
            (o.clifford_rank, o.degree, o.grading),
            "mixing elements of different super tensor algebras"
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.compatible(o);
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.clifford_rank, self.degree, self.grading);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.times(c));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.compatible(o);
        let mut out = Self::zero(self.clifford_rank, self.degree, self.grading);
        for ((a, g), x) in &self.terms {
            let g_odd = self.group_odd(g);
            for ((b, h), y) in &o.terms {
                let koszul = g_odd && b.count_ones() % 2 == 1;
                let negative = koszul ^ clifford_sign(*a, *b);
                let v = x.times(y);
                out.add_term((a ^ b, compose(g, h)), if negative { v.negate() } else { v });
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.clifford_rank, self.degree, self.grading), |acc, _| acc.mul(self))
    }

    /// Total parity of a homogeneous element, `None` otherwise.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|(m, g)| (m.count_ones() % 2 == 1) ^ self.group_odd(g));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// The scalar `c` if the element equals `c · 1`.
    pub fn as_scalar(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let ((m, g), c) = self.terms.iter().next().expect("one term");
                (*m == 0 && *g == identity_perm(self.degree)).then(|| c.clone())
            }
            _ => None,
        }
    }
}

impl<F: Field> fmt::Debug for SuperTensorElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((m, g), c)| format!("({c})c{m:b}⊗{g:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::AlgebraicScalar;
    use proptest::prelude::*;

    type St = SuperTensorElement<AlgebraicScalar>;

    #[test]
    fn koszul_sign_for_odd_permutations() {
        let c1 = CliffordElement::<AlgebraicScalar>::generator(2, 1);
        let a = St::from_clifford(&c1, 2, GroupGrading::Sign);
        let s = St::from_perm(2, simple_transposition(2, 1), GroupGrading::Sign);
        assert_eq!(s.mul(&a), a.mul(&s).scale(&AlgebraicScalar::from_int(-1)));
        let a = St::from_clifford(&c1, 2, GroupGrading::Even);
        let s = St::from_perm(2, simple_transposition(2, 1), GroupGrading::Even);
        assert_eq!(s.mul(&a), a.mul(&s));
    }

    #[test]
    fn permutation_helpers() {
        assert!(perm_is_odd(&simple_transposition(4, 2)));
        assert!(!perm_is_odd(&compose(&simple_transposition(4, 1), &simple_transposition(4, 3))));
        let g = compose(&simple_transposition(3, 1), &simple_transposition(3, 2));
        assert_eq!(g, vec![1, 2, 0]);
    }

    fn arb(grading: GroupGrading) -> impl Strategy<Value = St> {
        let perms = vec![identity_perm(3), simple_transposition(3, 1), simple_transposition(3, 2), vec![1, 2, 0]];
        prop::collection::vec((0u64..8, 0usize..4, -3i64..4), 1..5).prop_map(move |terms| {
            terms.into_iter().fold(St::zero(3, 3, grading), |acc, (m, p, c)| {
                let cl = CliffordElement::monomial(3, m, AlgebraicScalar::from_int(c));
                acc.add(&St::from_clifford(&cl, 3, grading).mul(&St::from_perm(3, perms[p].clone(), grading)))
            })
        })
    }

    proptest! {
        #[test]
        fn associative_with_sign_grading(x in arb(GroupGrading::Sign), y in arb(GroupGrading::Sign), z in arb(GroupGrading::Sign)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn associative_with_even_grading(x in arb(GroupGrading::Even), y in arb(GroupGrading::Even), z in arb(GroupGrading::Even)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }
}
