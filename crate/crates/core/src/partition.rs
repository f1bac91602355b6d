//! Integer partitions and their statistics.
//!
//! Partitions are stored as weakly decreasing vectors of positive parts. The
//! canonical order used throughout the crate (and by [`Ord`]) is reverse
//! lexicographic: `(n)` comes first and `(1^n)` last.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest partition size accepted by [`Partition::new`].
pub const MAX_SIZE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// One cell of a Young diagram with its hook length and content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStatistic {
    /// 1-based row index.
    pub row: usize,
    /// 1-based column index.
    pub col: usize,
    pub hook: usize,
    /// `col - row`.
    pub content: i64,
}

/// Parity classification of a partition. The empty partition has every
/// "all parts satisfy ..." flag set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionFlags {
    pub odd_parts: bool,
    pub even_parts: bool,
    pub strict_odd: bool,
    pub symmetric: bool,
    pub odd_length: bool,
    pub even_length: bool,
}

impl Partition {
    /// Validates and wraps `parts`. Trailing zeros are rejected rather than
    /// silently stripped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let size: usize = parts.iter().sum();
        if size > MAX_SIZE {
            return Err(Error::TooLarge { size, max: MAX_SIZE });
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn hooks_and_contents(&self) -> Vec<CellStatistic> {
        let conj = self.conjugate();
        let mut cells = Vec::with_capacity(self.size());
        for (i, &row_len) in self.parts.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - j - 1;
                let leg = conj.parts[j] - i - 1;
                cells.push(CellStatistic {
                    row: i + 1,
                    col: j + 1,
                    hook: arm + leg + 1,
                    content: j as i64 - i as i64,
                });
            }
        }
        cells
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.hooks_and_contents().iter().map(|c| c.hook).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.hooks_and_contents().iter().map(|c| c.content).collect()
    }

    pub fn classify(&self) -> PartitionFlags {
        let odd_parts = self.parts.iter().all(|p| p % 2 == 1);
        let even_parts = self.parts.iter().all(|p| p % 2 == 0);
        let distinct = self.parts.windows(2).all(|w| w[0] > w[1]);
        PartitionFlags {
            odd_parts,
            even_parts,
            strict_odd: odd_parts && distinct,
            symmetric: *self == self.conjugate(),
            odd_length: self.len() % 2 == 1,
            even_length: self.len() % 2 == 0,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// Multiplicity of each part: `m[i]` counts parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation of cycle type λ:
    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> BigUint {
        let hooks: BigUint = self.hooks().into_iter().map(BigUint::from).product();
        factorial(self.size()) / hooks
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Partition with the first part removed (`μ` suffix used by recursion).
    pub fn tail(&self) -> Partition {
        Partition { parts: self.parts.get(1..).unwrap_or(&[]).to_vec() }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("cannot parse partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with every part odd.
pub fn odd_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.classify().odd_parts).collect()
}

/// Partitions of `n` with every part even.
pub fn even_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.classify().even_parts).collect()
}

/// Partitions of `n` into distinct odd parts.
pub fn strict_odd_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.classify().strict_odd).collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the generator.
    fn partition_count(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n]
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2), vec![p("2"), p("1,1")]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(4), vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]);
        for n in 0..=30 {
            assert_eq!(partitions_of(n).len() as i64, partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for n in 0..=12 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p("4,3,1").n_stat(), 5);
        assert_eq!(p("7").n_stat(), 0);
        assert_eq!(p("1,1,1,1").n_stat(), 6);
        assert_eq!(Partition::empty().n_stat(), 0);
    }

    #[test]
    fn hooks_contents_example() {
        let lam = p("4,3,1");
        assert_eq!(lam.hooks(), vec![6, 4, 3, 1, 4, 2, 1, 1]);
        assert_eq!(lam.contents(), vec![0, 1, 2, 3, -1, 0, 1, -2]);
        assert_eq!(p("1").hooks(), vec![1]);
        assert_eq!(p("2,2").hooks(), vec![3, 2, 2, 1]);
        assert_eq!(p("2,2").contents(), vec![0, 1, -1, 0]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn classification() {
        let f = p("3,1,1").classify();
        assert!(f.odd_parts && !f.strict_odd && f.symmetric && f.odd_length);
        let f = Partition::empty().classify();
        assert!(f.odd_parts && f.even_parts && f.strict_odd && f.symmetric && f.even_length);
        let f = p("2,2").classify();
        assert!(f.even_parts && f.symmetric && !f.odd_parts);
        assert!(p("5,3,1").classify().strict_odd);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p("1,1,1").z_order(), BigUint::from(6u32));
        assert_eq!(p("3").z_order(), BigUint::from(3u32));
        assert_eq!(p("2,1").z_order(), BigUint::from(2u32));
        assert_eq!(p("2,2,1").z_order(), BigUint::from(8u32));
    }

    /// Brute-force centralizer count in S_n for small n.
    #[test]
    fn centralizer_orders_match_brute_force() {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for q in perms(n - 1) {
                for pos in 0..n {
                    let mut r = q.clone();
                    r.insert(pos, n - 1);
                    out.push(r);
                }
            }
            out
        }
        fn cycle_type(s: &[usize]) -> Partition {
            let mut seen = vec![false; s.len()];
            let mut parts = Vec::new();
            for i in 0..s.len() {
                if !seen[i] {
                    let mut len = 0;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        j = s[j];
                        len += 1;
                    }
                    parts.push(len);
                }
            }
            Partition::from_unsorted(parts).unwrap()
        }
        for n in 1..=5 {
            let all = perms(n);
            for lam in partitions_of(n) {
                let class_size = all.iter().filter(|s| cycle_type(s) == lam).count();
                let z = factorial(n) / BigUint::from(class_size);
                assert_eq!(lam.z_order(), z, "λ = {lam}");
            }
        }
    }

    #[test]
    fn unions() {
        assert_eq!(p("3,1").union(&p("2")), p("3,2,1"));
        assert_eq!(p("3,1").union(&Partition::empty()), p("3,1"));
        assert_eq!(p("1,1").union(&p("1")), p("1,1,1"));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("4,3,1").to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(p("-"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("65".parse::<Partition>().is_err());
        assert!(Partition::new(vec![64]).is_ok());
    }

    #[test]
    fn hook_and_content_sums() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                let conj = lam.conjugate();
                let cells = lam.hooks_and_contents();
                let csum: i64 = cells.iter().map(|c| c.content).sum();
                let hsum: usize = cells.iter().map(|c| c.hook).sum();
                assert_eq!(csum, conj.n_stat() as i64 - lam.n_stat() as i64);
                assert_eq!(hsum, lam.n_stat() + conj.n_stat() + n);
            }
        }
    }

    #[test]
    fn strict_odd_equinumerous_with_symmetric() {
        for n in 0..=30 {
            let sym = partitions_of(n).iter().filter(|l| l.is_symmetric()).count();
            assert_eq!(strict_odd_partitions(n).len(), sym, "n = {n}");
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=12 {
            let total: BigUint = partitions_of(n).iter().map(|l| factorial(n) / l.z_order()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn dimensions_square_sum() {
        for n in 0..=10 {
            let total: BigUint = partitions_of(n).iter().map(|l| l.dimension().pow(2)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..8, 0..8).prop_map(|v| Partition::from_unsorted(v).unwrap())
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(lam in arb_partition()) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn display_roundtrip(lam in arb_partition()) {
            let back: Partition = lam.to_string().parse().unwrap();
            prop_assert_eq!(back, lam);
        }

        #[test]
        fn union_is_commutative_and_additive(a in arb_partition(), b in arb_partition()) {
            let u = a.union(&b);
            prop_assert_eq!(u.clone(), b.union(&a));
            prop_assert_eq!(u.size(), a.size() + b.size());
            prop_assert_eq!(u.len(), a.len() + b.len());
        }

        #[test]
        fn hooks_transpose_with_conjugation(lam in arb_partition()) {
            let mut h1 = lam.hooks();
            let mut h2 = lam.conjugate().hooks();
            h1.sort_unstable();
            h2.sort_unstable();
            prop_assert_eq!(h1, h2);
        }
    }
}
