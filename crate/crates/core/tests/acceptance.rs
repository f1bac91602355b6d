//! One pass/fail line per acceptance criterion, exact equality throughout.

use std::process::ExitCode;
use std::time::Instant;

use spinfake::characters::{characteristic_map_check, odd_rank_counting_check, split_class_counting_check};
use spinfake::fake_degrees::{palindromicity_check, sum_rule_check, AlgebraFlavor, WeylType};
use spinfake::oracle::basic_spin::verify_basic_spin_correspondence;
use spinfake::oracle::graded_rep::DEFAULT_CAP;
use spinfake::oracle::multiplicity::{oracle_equivalence_check, restriction_check};
use spinfake::oracle::presentations::{
    verify_phi_d_surjectivity_identities, verify_presentation_images, verify_zeta, Target,
};
use spinfake::partition::partitions_of;
use spinfake::report::CheckReport;
use spinfake::symfunc::{verify_specialization, verify_super_cauchy};
use spinfake::verify::hook_content_example_check;
use spinfake::Result;

const FLAVORS: [AlgebraFlavor; 2] = [AlgebraFlavor::Minus, AlgebraFlavor::HeckeClifford];

fn oracle_b() -> Result<Vec<CheckReport>> {
    (2..=4).map(|n| oracle_equivalence_check(WeylType::B, n, 12, DEFAULT_CAP)).collect()
}

fn oracle_d() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 4..=5 {
        out.push(oracle_equivalence_check(WeylType::D, n, 12, DEFAULT_CAP)?);
        out.push(restriction_check(WeylType::D, n, 12)?);
    }
    Ok(out)
}

fn palindromes() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for flavor in FLAVORS {
        for n in 2..=8 {
            out.push(palindromicity_check(WeylType::B, n, flavor)?);
        }
        for n in 4..=8 {
            out.push(palindromicity_check(WeylType::D, n, flavor)?);
        }
    }
    Ok(out)
}

fn hooks() -> Result<Vec<CheckReport>> {
    Ok(vec![hook_content_example_check()])
}

fn characteristic_maps() -> Result<Vec<CheckReport>> {
    (1..=6).map(characteristic_map_check).collect()
}

fn cauchy() -> Result<Vec<CheckReport>> {
    let mut out = vec![verify_super_cauchy(4, 2, 2, 2)];
    for n in 1..=5 {
        out.extend(partitions_of(n).iter().map(|l| verify_specialization(l, 10)));
    }
    Ok(out)
}

fn presentations() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(verify_presentation_images(Target::PhiB, n)?);
    }
    for n in [5, 7] {
        out.push(verify_presentation_images(Target::PhiD, n)?);
        out.push(verify_phi_d_surjectivity_identities(n)?);
    }
    for n in [1, 3, 5, 7] {
        out.push(verify_zeta(n)?);
    }
    for (ty, min) in [(WeylType::A, 1), (WeylType::B, 2), (WeylType::D, 4)] {
        for n in min..=5 {
            out.push(verify_presentation_images(Target::Omega(ty), n)?);
        }
    }
    Ok(out)
}

fn counting() -> Result<Vec<CheckReport>> {
    let mut out: Vec<CheckReport> = (1..=10).map(split_class_counting_check).collect();
    for n in (1..=15).step_by(2) {
        out.push(odd_rank_counting_check(n)?);
    }
    Ok(out)
}

fn sum_rules() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for flavor in FLAVORS {
        for n in 2..=7 {
            out.push(sum_rule_check(WeylType::B, n, flavor)?);
        }
        for n in 4..=7 {
            out.push(sum_rule_check(WeylType::D, n, flavor)?);
        }
    }
    Ok(out)
}

fn basic_spin() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (ty, min) in [(WeylType::A, 1), (WeylType::B, 2), (WeylType::D, 4)] {
        for n in min..=4 {
            out.push(verify_basic_spin_correspondence(ty, n)?);
        }
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Result<Vec<CheckReport>>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("type B oracle multiplicities equal the closed form, n = 2..4, degree 12", oracle_b),
        ("type D oracle multiplicities equal the closed form, n = 4..5, degree 12", oracle_d),
        ("type B and D fake degrees are palindromic, n <= 8", palindromes),
        ("hooks, contents and n(λ) of (4,3,1)", hooks),
        ("characteristic maps send simple characters to Schur functions, n <= 6", characteristic_maps),
        ("super Cauchy identity (degree 4; 2,2,2) and specialization, n <= 5, order 10", cauchy),
        ("presentation images, surjectivity identities and ζ", presentations),
        ("split classes against simple modules, n <= 10, and odd rank counts, n <= 15", counting),
        ("regular representation sum rules, n <= 7", sum_rules),
        ("basic spin character against Clifford traces, types A, B, D, n <= 4", basic_spin),
    ];
    let mut all_passed = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        let failure = match &outcome {
            Err(e) => Some(format!("error: {e}")),
            Ok(reports) => reports
                .iter()
                .find(|r| !r.passed())
                .map(|r| format!("{} {}: {}", r.check, r.params, r.first_discrepancy.clone().unwrap_or_default())),
        };
        let checks = outcome.as_ref().map(Vec::len).unwrap_or(0);
        match failure {
            None => println!("[PASS] criterion {}: {name} ({checks} checks, {elapsed:.1}s)", i + 1),
            Some(why) => {
                all_passed = false;
                println!("[FAIL] criterion {}: {name} ({why})", i + 1);
            }
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
