//! Split conjugacy classes of `B_n`, `D_n` and `Γ_n`.
//!
//! A class of signed permutations is labelled by `(ρ₊, ρ₋)`: the cycle
//! lengths of its positive and negative cycles.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{even_partitions, odd_partitions, partitions_of, strict_odd_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassFamily {
    #[serde(rename = "B_even")]
    BEven,
    #[serde(rename = "B_odd")]
    BOdd,
    D,
    Gamma,
}

impl ClassFamily {
    pub fn name(self) -> &'static str {
        match self {
            ClassFamily::BEven => "B_even",
            ClassFamily::BOdd => "B_odd",
            ClassFamily::D => "D",
            ClassFamily::Gamma => "Gamma",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// The three groups whose split classes are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    B,
    D,
    Gamma,
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(GroupKind::B),
            "D" | "d" => Ok(GroupKind::D),
            "Gamma" | "gamma" | "G" | "Γ" => Ok(GroupKind::Gamma),
            _ => Err(Error::Parse(format!("unknown group {s:?} (expected B, D or Gamma)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitClassLabel {
    pub rho_plus: Partition,
    pub rho_minus: Partition,
    pub family: ClassFamily,
    pub parity: Parity,
}

impl SplitClassLabel {
    pub fn n(&self) -> usize {
        self.rho_plus.size() + self.rho_minus.size()
    }

    /// `ρ₊ ∪ ρ₋`.
    pub fn merged(&self) -> Partition {
        self.rho_plus.union(&self.rho_minus)
    }

    pub fn family_name(&self) -> &'static str {
        self.family.name()
    }

    pub fn require(&self, family: ClassFamily) -> Result<()> {
        if self.family == family {
            return Ok(());
        }
        Err(Error::WrongFamily { expected: family.name().into(), got: self.family.name().into() })
    }
}

impl fmt::Display for SplitClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{};{}]", self.family_name(), self.rho_plus, self.rho_minus)
    }
}

impl Serialize for SplitClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Smallest rank accepted for each Weyl group type.
pub fn check_rank(kind: char, n: usize) -> Result<()> {
    let min = match kind {
        'A' | 'G' => 1,
        'B' => 2,
        'D' => 4,
        _ => return Err(Error::Parse(format!("unknown type {kind}"))),
    };
    if n < min {
        return Err(Error::RankGuard { kind, n, min });
    }
    Ok(())
}

fn pairs<F>(n: usize, mut plus: F, minus: impl Fn(usize) -> Vec<Partition>) -> Vec<(Partition, Partition)>
where
    F: FnMut(usize) -> Vec<Partition>,
{
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for rp in plus(a) {
            for rm in minus(n - a) {
                out.push((rp.clone(), rm));
            }
        }
    }
    out
}

fn label(rho_plus: Partition, rho_minus: Partition, family: ClassFamily, parity: Parity) -> SplitClassLabel {
    SplitClassLabel { rho_plus, rho_minus, family, parity }
}

/// All split classes of the given group, with parity tags.
pub fn split_classes(group: GroupKind, n: usize) -> Result<Vec<SplitClassLabel>> {
    let op_ep = pairs(n, odd_partitions, even_partitions);
    let classes = match group {
        GroupKind::B => {
            check_rank('B', n)?;
            let mut v: Vec<_> = op_ep
                .into_iter()
                .map(|(p, m)| label(p, m, ClassFamily::BEven, Parity::Even))
                .collect();
            if n % 2 == 1 {
                v.extend(
                    partitions_of(n)
                        .into_iter()
                        .map(|m| label(Partition::empty(), m, ClassFamily::BOdd, Parity::Odd)),
                );
            }
            v
        }
        GroupKind::D => {
            check_rank('D', n)?;
            let mut v: Vec<_> = op_ep
                .into_iter()
                .filter(|(_, m)| m.len() % 2 == 0)
                .map(|(p, m)| label(p, m, ClassFamily::D, Parity::Even))
                .collect();
            let (extra, parity) = if n % 2 == 1 {
                (partitions_of(n), Parity::Odd)
            } else {
                (strict_odd_partitions(n), Parity::Even)
            };
            v.extend(
                extra
                    .into_iter()
                    .filter(|m| m.len() % 2 == 0)
                    .map(|m| label(Partition::empty(), m, ClassFamily::D, parity)),
            );
            v
        }
        GroupKind::Gamma => {
            check_rank('G', n)?;
            op_ep
                .into_iter()
                .map(|(p, m)| label(p, m, ClassFamily::Gamma, Parity::Even))
                .collect()
        }
    };
    Ok(classes)
}

/// Number of conjugacy classes of the alternating group `A_n`: even cycle
/// types, with the classes of distinct odd cycle lengths splitting in two.
pub fn alternating_class_count(n: usize) -> usize {
    partitions_of(n)
        .into_iter()
        .filter(|mu| (n - mu.len()) % 2 == 0)
        .map(|mu| if mu.classify().strict_odd && n > 1 { 2 } else { 1 })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pairs_of(classes: &[SplitClassLabel]) -> Vec<(Partition, Partition)> {
        classes.iter().map(|c| (c.rho_plus.clone(), c.rho_minus.clone())).collect()
    }

    #[test]
    fn b2_classes() {
        let c = split_classes(GroupKind::B, 2).unwrap();
        assert_eq!(pairs_of(&c), vec![(p("1,1"), p("-")), (p("-"), p("2"))]);
        assert!(c.iter().all(|l| l.parity == Parity::Even));
    }

    #[test]
    fn b3_has_odd_classes() {
        let c = split_classes(GroupKind::B, 3).unwrap();
        assert_eq!(c.iter().filter(|l| l.parity == Parity::Even).count(), 3);
        assert_eq!(c.iter().filter(|l| l.parity == Parity::Odd).count(), 3);
        assert!(c.iter().filter(|l| l.family == ClassFamily::BOdd).all(|l| l.rho_plus.is_empty()));
    }

    #[test]
    fn d4_classes() {
        let mut c = pairs_of(&split_classes(GroupKind::D, 4).unwrap());
        c.sort();
        let mut expected = vec![
            (p("1,1,1,1"), p("-")),
            (p("3,1"), p("-")),
            (p("-"), p("2,2")),
            (p("-"), p("3,1")),
        ];
        expected.sort();
        assert_eq!(c, expected);
        assert_eq!(alternating_class_count(4), 4);
    }

    #[test]
    fn gamma3_classes() {
        let mut c = pairs_of(&split_classes(GroupKind::Gamma, 3).unwrap());
        c.sort();
        let mut expected = vec![(p("1,1,1"), p("-")), (p("3"), p("-")), (p("1"), p("2"))];
        expected.sort();
        assert_eq!(c, expected);
    }

    #[test]
    fn rank_guards() {
        assert!(split_classes(GroupKind::B, 1).is_err());
        assert!(split_classes(GroupKind::D, 3).is_err());
        assert!(split_classes(GroupKind::Gamma, 1).is_ok());
    }

    #[test]
    fn alternating_counts_known_values() {
        // A_5 has 5 classes, A_6 has 7, A_7 has 9.
        assert_eq!(alternating_class_count(5), 5);
        assert_eq!(alternating_class_count(6), 7);
        assert_eq!(alternating_class_count(7), 9);
    }

    #[test]
    fn labels_display() {
        let c = &split_classes(GroupKind::B, 2).unwrap()[1];
        assert_eq!(c.to_string(), "B_even[-;2]");
        assert_eq!(serde_json::to_string(c).unwrap(), "\"B_even[-;2]\"");
    }
}
