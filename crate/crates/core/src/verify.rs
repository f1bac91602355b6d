//! Named groups of checks, run over a range of ranks.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::characters::{
    characteristic_map_check, even_rank_tensor_shadow_check, induction_product_check, isometry_check,
    lambda_selfconjugate_vanishing_check, odd_rank_counting_check, split_class_counting_check,
};
use crate::error::{Error, Result};
use crate::fake_degrees::{
    conjugation_identity_check, palindromicity_check, sum_rule_check, AlgebraFlavor, WeylType,
};
use crate::oracle::basic_spin::verify_basic_spin_correspondence;
use crate::oracle::graded_rep::{trace_formula_check, DEFAULT_CAP};
use crate::oracle::multiplicity::{oracle_equivalence_check, restriction_check};
use crate::oracle::presentations::{
    verify_phi_d_surjectivity_identities, verify_presentation_images, verify_zeta, Target,
};
use crate::partition::{partitions_of, Partition};
use crate::report::CheckReport;
use crate::symfunc::{verify_specialization, verify_super_cauchy};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    Oracle,
    Isomorphisms,
    Characters,
    Cauchy,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Formulas, Suite::Oracle, Suite::Isomorphisms, Suite::Characters, Suite::Cauchy];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Formulas => "formulas",
            Suite::Oracle => "oracle",
            Suite::Isomorphisms => "isomorphisms",
            Suite::Characters => "characters",
            Suite::Cauchy => "cauchy",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Series truncation for the oracle and specialization checks.
    pub maxdeg: usize,
    /// Total degree of the super Cauchy check.
    pub degree: usize,
    pub cap: usize,
    pub fail_fast: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { n_max: 4, maxdeg: 10, degree: 4, cap: DEFAULT_CAP, fail_fast: false }
    }
}

/// Ranks above this are not attempted by the checks that enumerate a whole
/// Weyl group inside a Clifford algebra of twice the rank.
pub const GROUP_ENUMERATION_LIMIT: usize = 4;
/// Ranks above this are not attempted by the Hecke–Clifford image checks.
pub const IMAGE_CHECK_LIMIT: usize = 5;

/// Collects reports, turning errors into failures and honouring fail-fast.
struct Runner {
    fail_fast: bool,
    reports: Vec<CheckReport>,
}

impl Runner {
    fn stopped(&self) -> bool {
        self.fail_fast && self.reports.iter().any(|r| !r.passed())
    }

    fn push(&mut self, name: &str, params: serde_json::Value, r: Result<CheckReport>) {
        if self.stopped() {
            return;
        }
        self.reports.push(r.unwrap_or_else(|e| CheckReport::fail(name, params, e.to_string())));
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<CheckReport> {
    let mut run = Runner { fail_fast: opts.fail_fast, reports: Vec::new() };
    match suite {
        Suite::Formulas => formulas(&mut run, opts),
        Suite::Oracle => oracle(&mut run, opts),
        Suite::Isomorphisms => isomorphisms(&mut run, opts),
        Suite::Characters => characters(&mut run, opts),
        Suite::Cauchy => cauchy(&mut run, opts),
    }
    run.reports
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        out.extend(run_suite(suite, opts));
        if opts.fail_fast && out.iter().any(|r| !r.passed()) {
            break;
        }
    }
    out
}

/// `n(λ)`, hooks and contents of `(4,3,1)` in reading order.
pub fn hook_content_example_check() -> CheckReport {
    let lambda: Partition = Partition::new(vec![4, 3, 1]).expect("valid partition");
    let hooks = lambda.hooks();
    let contents = lambda.contents();
    let ok = lambda.n_stat() == 5 && hooks == [6, 4, 3, 1, 4, 2, 1, 1] && contents == [0, 1, 2, 3, -1, 0, 1, -2];
    let why = format!("n(λ) = {}, hooks {hooks:?}, contents {contents:?}", lambda.n_stat());
    CheckReport::from_outcome("hooks and contents of (4,3,1)", json!({"lambda": "4,3,1"}), (!ok).then_some(why))
}

fn formulas(run: &mut Runner, opts: &VerifyOptions) {
    run.push("hooks and contents", json!({}), Ok(hook_content_example_check()));
    for n in 1..=opts.n_max {
        run.push("conjugate content identity", json!({ "n": n }), conjugation_identity_check(n));
        for (ty, min) in [(WeylType::B, 2), (WeylType::D, 4)] {
            if n < min {
                continue;
            }
            for flavor in [AlgebraFlavor::Minus, AlgebraFlavor::HeckeClifford] {
                let params = json!({"type": ty, "n": n, "algebra": flavor});
                run.push("palindromic fake degrees", params.clone(), palindromicity_check(ty, n, flavor));
                run.push("regular representation sum rule", params, sum_rule_check(ty, n, flavor));
            }
        }
    }
}

fn oracle(run: &mut Runner, opts: &VerifyOptions) {
    for n in 2..=opts.n_max {
        let params = json!({"n": n, "maxdeg": opts.maxdeg, "cap": opts.cap});
        run.push("graded traces", params.clone(), trace_formula_check(n, opts.maxdeg, opts.cap));
        run.push("oracle B", params.clone(), oracle_equivalence_check(WeylType::B, n, opts.maxdeg, opts.cap));
        run.push("class sum B", params.clone(), restriction_check(WeylType::B, n, opts.maxdeg));
        if n >= 4 {
            run.push("oracle D", params.clone(), oracle_equivalence_check(WeylType::D, n, opts.maxdeg, opts.cap));
            run.push("class sum D", params, restriction_check(WeylType::D, n, opts.maxdeg));
        }
    }
}

fn isomorphisms(run: &mut Runner, opts: &VerifyOptions) {
    for n in 1..=opts.n_max {
        let params = json!({ "n": n });
        if n >= 2 {
            run.push("phiB", params.clone(), verify_presentation_images(Target::PhiB, n));
        }
        if n % 2 == 1 {
            run.push("zeta", params.clone(), verify_zeta(n));
            if n >= 5 {
                run.push("phiD", params.clone(), verify_presentation_images(Target::PhiD, n));
                run.push("phiD identities", params.clone(), verify_phi_d_surjectivity_identities(n));
            }
        }
        for (ty, min) in [(WeylType::A, 1), (WeylType::B, 2), (WeylType::D, 4)] {
            if n < min {
                continue;
            }
            run.push("Omega", params.clone(), verify_presentation_images(Target::Omega(ty), n));
            if n <= IMAGE_CHECK_LIMIT {
                run.push("Phi", params.clone(), verify_presentation_images(Target::Phi(ty), n));
            }
            if n <= GROUP_ENUMERATION_LIMIT {
                run.push("basic spin", params.clone(), verify_basic_spin_correspondence(ty, n));
            }
        }
        if n >= 4 && n % 2 == 0 {
            run.push("tensor comparison", params, even_rank_tensor_shadow_check(n));
        }
    }
}

fn characters(run: &mut Runner, opts: &VerifyOptions) {
    for n in 1..=opts.n_max {
        let params = json!({ "n": n });
        run.push("characteristic map", params.clone(), characteristic_map_check(n));
        run.push("isometry", params.clone(), isometry_check(n));
        run.push("counting", params.clone(), Ok(split_class_counting_check(n)));
        if n % 2 == 1 {
            run.push("self-conjugate vanishing", params.clone(), lambda_selfconjugate_vanishing_check(n));
            run.push("odd rank counting", params, odd_rank_counting_check(n));
        }
        for m in 1..n {
            run.push("induction", json!({"m": m, "n": n - m}), induction_product_check(m, n - m));
        }
    }
}

fn cauchy(run: &mut Runner, opts: &VerifyOptions) {
    run.push("super Cauchy", json!({}), Ok(verify_super_cauchy(opts.degree, 2, 2, 2)));
    for n in 1..=opts.n_max {
        for lambda in partitions_of(n) {
            run.push("specialization", json!({}), Ok(verify_specialization(&lambda, opts.maxdeg)));
        }
    }
}
