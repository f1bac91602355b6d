//! The basic spin module tensored with its own image.
//!
//! Each reflection `s_i` acts on `U ⊗ 𝔅_W` through
//! `X_{s_i} = -√-1 · β_i ⊗ β_i ∈ Cl_V ⊗ Cl_V ≅ Cl_{2d}`, and the character of
//! that module at `w` is `2^d` times the scalar part of `X_w`. It is compared
//! with the trace of `w` on `Cl_V` (halved for type A, where `V` sits inside
//! `ℂ^{n+1}` and `Cl_{n+1}` doubles `Cl_V`).

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::json;

use super::clifford::{clifford_rank, simple_root_elements};
use super::presentations::{Cl, Scalar};
use super::signed_perm::SignedPerm;
use crate::characters::check_rank;
use crate::error::Result;
use crate::fake_degrees::WeylType;
use crate::report::{CheckReport, FirstFailure};
use crate::scalar::{pow2, Field};

fn reflections(ty: WeylType, n: usize) -> Vec<SignedPerm> {
    let rank = clifford_rank(ty, n);
    (1..=n)
        .map(|i| match ty {
            WeylType::B if i == n => SignedPerm::sign_change(n, n),
            WeylType::D if i == n => SignedPerm::d_last(n),
            _ => SignedPerm::transposition(rank, i),
        })
        .collect()
}

fn doubled_root_images(ty: WeylType, n: usize) -> Vec<Cl> {
    let m = clifford_rank(ty, n);
    simple_root_elements::<Scalar>(ty, n)
        .iter()
        .map(|b| b.embed(2 * m, 0).mul(&b.embed(2 * m, m)).scale(&Scalar::i().negate()))
        .collect()
}

/// Every element of `W` paired with `X_w`, checking along the way that
/// `X_{gw} = X_g X_w` does not depend on the word chosen for `w`.
fn enumerate(ty: WeylType, n: usize) -> std::result::Result<Vec<(SignedPerm, Cl)>, String> {
    let gens = reflections(ty, n);
    let images = doubled_root_images(ty, n);
    let m = clifford_rank(ty, n);
    let start = SignedPerm::identity(m);
    let mut index: HashMap<SignedPerm, usize> = HashMap::from([(start.clone(), 0)]);
    let mut elements = vec![(start, Cl::one(2 * m))];
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for (g, x) in gens.iter().zip(&images) {
            let w = g.compose(&elements[at].0);
            let xw = x.mul(&elements[at].1);
            match index.get(&w) {
                Some(&j) if elements[j].1 != xw => {
                    return Err(format!("two words for {w:?} give different Clifford elements"));
                }
                Some(_) => {}
                None => {
                    index.insert(w.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push((w, xw));
                }
            }
        }
    }
    Ok(elements)
}

pub fn verify_basic_spin_correspondence(ty: WeylType, n: usize) -> Result<CheckReport> {
    check_rank(
        match ty {
            WeylType::A => 'A',
            WeylType::B => 'B',
            WeylType::D => 'D',
        },
        n,
    )?;
    let elements = match enumerate(ty, n) {
        Ok(e) => e,
        Err(why) => return Ok(CheckReport::fail("basic spin character", json!({"type": ty.to_string(), "n": n}), why)),
    };
    let scale = Scalar::from_rational(pow2(n as i64));
    let mut classes = BTreeSet::new();
    let mut ff = FirstFailure::new();
    for (w, x) in &elements {
        let lhs = x.scalar_part().times(&scale);
        let trace = w.clifford_trace();
        let rhs = match ty {
            WeylType::A => Scalar::from_rational(crate::scalar::rat(trace, 2)),
            _ => Scalar::from_int(trace),
        };
        let class = w.cycle_type();
        ff.check(lhs == rhs, || format!("class ({}; {}): character {lhs}, trace on Cl_V {rhs}", class.0, class.1));
        classes.insert(class);
    }
    let params = json!({"type": ty.to_string(), "n": n, "elements": elements.len(), "classes": classes.len()});
    Ok(CheckReport::from_outcome("basic spin character equals the Clifford trace", params, ff.into_inner()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate(WeylType::A, 3).unwrap().len(), 24);
        assert_eq!(enumerate(WeylType::B, 3).unwrap().len(), 48);
        assert_eq!(enumerate(WeylType::D, 4).unwrap().len(), 192);
    }

    #[test]
    fn small_ranks_pass() {
        for (ty, n) in [(WeylType::A, 1), (WeylType::A, 2), (WeylType::B, 2), (WeylType::B, 3), (WeylType::D, 4)] {
            let r = verify_basic_spin_correspondence(ty, n).unwrap();
            assert!(r.passed(), "{ty}{n}: {:?}", r.first_discrepancy);
        }
    }
}
