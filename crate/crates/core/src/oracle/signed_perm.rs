//! Signed permutations: elements of `B_n` acting on `V = ℂ^n`, on `Cl_n`
//! and on the polynomial ring.

use num_bigint::{BigInt, BigUint};

use super::clifford::clifford_sign;
use crate::characters::{ClassFamily, SplitClassLabel};
use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};

/// `w(e_i) = signs[i] · e_{perm[i]}` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: Vec<u8>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { perm: (0..n as u8).collect(), signs: vec![1; n] }
    }

    pub fn new(perm: Vec<u8>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p as usize >= n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.len() != n || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::Parse(format!("bad sign vector {signs:?}")));
        }
        Ok(SignedPerm { perm, signs })
    }

    /// The transposition `s_i` of `e_i` and `e_{i+1}` (1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i - 1, i);
        w
    }

    /// The sign change `τ_j: e_j ↦ -e_j` (1-based).
    pub fn sign_change(n: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[j - 1] = -1;
        w
    }

    /// `e_{n-1} ↦ -e_n`, `e_n ↦ -e_{n-1}`: the last simple reflection of `D_n`.
    pub fn d_last(n: usize) -> Self {
        let mut w = Self::transposition(n, n - 1);
        w.signs[n - 2] = -1;
        w.signs[n - 1] = -1;
        w
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = other.perm.iter().map(|&j| self.perm[j as usize]).collect();
        let signs = other.perm.iter().zip(&other.signs).map(|(&j, &s)| s * self.signs[j as usize]).collect();
        SignedPerm { perm, signs }
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// Lengths of positive and negative cycles, `(ρ₊, ρ₋)`.
    pub fn cycle_type(&self) -> (Partition, Partition) {
        let n = self.n();
        let mut seen = vec![false; n];
        let (mut plus, mut minus) = (Vec::new(), Vec::new());
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut sign, mut x) = (0, 1i8, start);
            while !seen[x] {
                seen[x] = true;
                sign *= self.signs[x];
                x = self.perm[x] as usize;
                len += 1;
            }
            if sign > 0 {
                plus.push(len);
            } else {
                minus.push(len);
            }
        }
        (
            Partition::from_unsorted(plus).expect("cycle lengths are positive"),
            Partition::from_unsorted(minus).expect("cycle lengths are positive"),
        )
    }

    /// Image of `c_I` as `(mask, negative)`.
    pub fn act_on_clifford(&self, mask: u64) -> (u64, bool) {
        let mut out = 0u64;
        let mut negative = false;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let target = 1u64 << self.perm[i];
            negative ^= self.signs[i] < 0;
            negative ^= clifford_sign(out, target);
            out |= target;
        }
        (out, negative)
    }

    /// Image of `x^a` as `(b, negative)`.
    pub fn act_on_monomial(&self, exps: &[u8]) -> (Vec<u8>, bool) {
        let mut out = vec![0u8; exps.len()];
        let mut negative = false;
        for (i, &a) in exps.iter().enumerate() {
            out[self.perm[i] as usize] = a;
            negative ^= self.signs[i] < 0 && a % 2 == 1;
        }
        (out, negative)
    }

    /// Trace on `Cl_n`.
    pub fn clifford_trace(&self) -> i64 {
        (0..1u64 << self.n())
            .map(|m| match self.act_on_clifford(m) {
                (img, neg) if img == m => if neg { -1 } else { 1 },
                _ => 0,
            })
            .sum()
    }
}

/// A generator of `B_n`: `s_1..s_{n-1}` are `1..n-1`, `τ_n` is `n`.
pub type Word = Vec<usize>;

pub fn b_generator(n: usize, g: usize) -> SignedPerm {
    if g < n {
        SignedPerm::transposition(n, g)
    } else {
        SignedPerm::sign_change(n, n)
    }
}

pub fn evaluate_word(n: usize, word: &[usize]) -> SignedPerm {
    word.iter().fold(SignedPerm::identity(n), |acc, &g| acc.compose(&b_generator(n, g)))
}

/// `τ_j = s_j s_{j+1} ⋯ s_{n-1} τ_n s_{n-1} ⋯ s_j`.
fn sign_change_word(n: usize, j: usize) -> Word {
    let mut w: Word = (j..n).collect();
    w.push(n);
    w.extend((j..n).rev());
    w
}

/// Product of canonical cycles for an arbitrary pair of partitions:
/// positive cycles `s_a ⋯ s_{a+k-2}` on the lowest supports, then negative
/// cycles `s_a ⋯ s_{a+k-2} τ_{a+k-1}` above them.
pub fn canonical_word(rho_plus: &Partition, rho_minus: &Partition) -> Word {
    let n = rho_plus.size() + rho_minus.size();
    let mut word = Word::new();
    let mut a = 1;
    for (&k, negative) in rho_plus.parts().iter().map(|k| (k, false)).chain(rho_minus.parts().iter().map(|k| (k, true))) {
        word.extend(a..a + k - 1);
        if negative {
            word.extend(sign_change_word(n, a + k - 1));
        }
        a += k;
    }
    word
}

/// The canonical representative of a split class as a signed permutation.
pub fn canonical_representative(class: &SplitClassLabel) -> Result<SignedPerm> {
    if class.family == ClassFamily::BOdd {
        return Err(Error::WrongFamily { expected: "B_even, Gamma or D".into(), got: class.family_name().into() });
    }
    Ok(evaluate_word(class.n(), &canonical_word(&class.rho_plus, &class.rho_minus)))
}

/// Size of the `B_n` class of signed permutations with cycle type `(ρ₊, ρ₋)`.
pub fn b_class_size(rho_plus: &Partition, rho_minus: &Partition) -> BigUint {
    let n = rho_plus.size() + rho_minus.size();
    let order = (BigUint::from(1u32) << n) * factorial(n);
    let centralizer = rho_plus.z_order() * rho_minus.z_order() << (rho_plus.len() + rho_minus.len());
    order / centralizer
}

/// Trace on `S^k V` by direct enumeration of monomials.
pub fn symmetric_power_trace(w: &SignedPerm, k: usize) -> BigInt {
    let mut total = BigInt::from(0);
    for exps in monomials(w.n(), k) {
        let (img, neg) = w.act_on_monomial(&exps);
        if img == exps {
            total += if neg { -1 } else { 1 };
        }
    }
    total
}

/// Exponent vectors of degree `k` in `n` variables, lexicographically
/// decreasing.
pub fn monomials(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left as u8;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a as u8;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, k, &mut vec![0; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{split_classes, GroupKind};
    use crate::partition::{binomial, partitions_of};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_examples() {
        let w = evaluate_word(2, &canonical_word(&p("1,1"), &p("-")));
        assert_eq!(w, SignedPerm::identity(2));
        let w = evaluate_word(2, &canonical_word(&p("-"), &p("2")));
        assert_eq!(w, SignedPerm::transposition(2, 1).compose(&SignedPerm::sign_change(2, 2)));
        let w = evaluate_word(3, &canonical_word(&p("1"), &p("2")));
        assert_eq!(w.perm()[0], 0);
        assert_eq!(w.signs()[0], 1);
        assert_eq!(w.cycle_type(), (p("1"), p("2")));
    }

    #[test]
    fn canonical_words_have_the_right_type() {
        for n in 1..=6 {
            for a in 0..=n {
                for rp in partitions_of(a) {
                    for rm in partitions_of(n - a) {
                        let w = evaluate_word(n, &canonical_word(&rp, &rm));
                        assert_eq!(w.cycle_type(), (rp.clone(), rm.clone()));
                    }
                }
            }
        }
        for c in split_classes(GroupKind::D, 5).unwrap() {
            if c.rho_plus.is_empty() && c.rho_minus.parts().iter().any(|k| k % 2 == 1) {
                continue;
            }
            let w = canonical_representative(&c).unwrap();
            assert_eq!(w.negative_count() % 2, 0, "{c}");
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=6 {
            let mut total = BigUint::from(0u32);
            for a in 0..=n {
                for rp in partitions_of(a) {
                    for rm in partitions_of(n - a) {
                        total += b_class_size(&rp, &rm);
                    }
                }
            }
            assert_eq!(total, (BigUint::from(1u32) << n) * factorial(n));
        }
    }

    #[test]
    fn actions_are_homomorphisms() {
        let n = 4;
        let words: Vec<Word> = vec![vec![1, 4, 2], vec![3, 4, 3, 1], vec![4, 2, 4]];
        for u in &words {
            for v in &words {
                let (a, b) = (evaluate_word(n, u), evaluate_word(n, v));
                let ab = a.compose(&b);
                for mask in 0..16u64 {
                    let (m1, s1) = b.act_on_clifford(mask);
                    let (m2, s2) = a.act_on_clifford(m1);
                    assert_eq!(ab.act_on_clifford(mask), (m2, s1 ^ s2));
                }
                for e in monomials(n, 3) {
                    let (e1, s1) = b.act_on_monomial(&e);
                    let (e2, s2) = a.act_on_monomial(&e1);
                    assert_eq!(ab.act_on_monomial(&e), (e2, s1 ^ s2));
                }
            }
        }
    }

    #[test]
    fn monomial_counts() {
        for n in 1..=4 {
            for k in 0..=5 {
                assert_eq!(monomials(n, k).len(), binomial(n + k - 1, k));
            }
        }
        assert_eq!(monomials(2, 1), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn small_traces() {
        let w = evaluate_word(2, &canonical_word(&p("-"), &p("2")));
        assert_eq!(w.clifford_trace(), 2);
        assert_eq!(SignedPerm::sign_change(1, 1).clifford_trace(), 0);
        assert_eq!(symmetric_power_trace(&w, 2), BigInt::from(-1));
        assert!(SignedPerm::new(vec![0, 0], vec![1, 1]).is_err());
    }
}
