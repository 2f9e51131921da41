//! Property suites behind `ladders check`.
//!
//! Each suite walks an exhaustive bounded enumeration, then a seeded random
//! extension, and stops at the first counterexample in enumeration order.

use std::collections::HashMap;

use ladders_core::oracle::{
    brute_permissible, dilworth_width, enumerate_multicharges, enumerate_multipartitions,
    enumerate_multisegments, kv_choice_independence, EnumerationBounds, BRUTE_PERMISSIBLE_LIMIT,
    KV_CHOICE_LIMIT,
};
use ladders_core::strings::phi_multiseg_with;
use ladders_core::{
    bz_derivative, bz_string, c_prime_tuple, c_tuple, column_removal_check, ell_form,
    is_restricted, knuth_viennot, phi_weights, rsk_transform, specht_rsk_verify,
    AdmissibleSequence, Multisegment, Weight,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{CheckArgs, Fault, Suite};
use crate::report::{CommandReport, Status};

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Inputs in the CLI's text syntax.
    pub inputs: Vec<String>,
    pub message: String,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

type Check = Result<(), Counterexample>;

fn fail(inputs: &[&Multisegment], message: String) -> Check {
    Err(Counterexample {
        inputs: inputs.iter().map(|m| m.to_string()).collect(),
        message,
    })
}

/// First failure in input order; ties across threads resolve to the
/// smallest index, so the report does not depend on scheduling.
fn first_failure<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Check + Sync,
) -> Option<Counterexample> {
    items
        .par_iter()
        .enumerate()
        .filter_map(|(i, x)| check(x).err().map(|c| (i, c)))
        .min_by_key(|(i, _)| *i)
        .map(|(_, c)| c)
}

fn bounds(a: &CheckArgs) -> Result<EnumerationBounds, CommandReport> {
    EnumerationBounds::new(a.min, a.max, a.max_segments).map_err(CommandReport::from)
}

/// Random multisegments with more segments than the enumeration covers.
fn extension(a: &CheckArgs, salt: u64, count: usize) -> Vec<Multisegment> {
    if a.max_segments == 0 {
        return Vec::new();
    }
    let segs = EnumerationBounds::new(a.min, a.max, 1).unwrap().segments();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed ^ salt);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(a.max_segments + 1..=a.max_segments + 2);
            Multisegment::new((0..n).map(|_| *segs.choose(&mut rng).unwrap()))
        })
        .collect()
}

fn combi_suite(a: &CheckArgs, b: EnumerationBounds) -> SuiteOutcome {
    let domain: Vec<Multisegment> = enumerate_multisegments(b).collect();
    let t = a.min.abs().max(a.max.abs()).max(1);
    let bz = AdmissibleSequence::bz(t).unwrap();
    let fault = a.inject_fault;
    let check = |ms: &[Multisegment]| -> Check {
        let refs: Vec<&Multisegment> = ms.iter().collect();
        let lhs = c_tuple(ms) as i64 - c_prime_tuple(ms) as i64;
        let phi = match fault {
            Some(Fault::EllSign) => phi_multiseg_with(ms, |x: &Weight, y: &Weight| -ell_form(x, y)),
            None => phi_multiseg_with(ms, ell_form),
        };
        if lhs != phi {
            return fail(&refs, format!("C - C' = {lhs} but Phi = {phi}"));
        }
        let strings: Vec<_> = ms.iter().map(|m| bz_string(m, t).unwrap().1).collect();
        let betas: Vec<Weight> = ms.iter().map(Multisegment::wt).collect();
        match phi_weights(&bz, &strings, &betas) {
            Ok(v) if v == phi => Ok(()),
            Ok(v) => fail(
                &refs,
                format!("string form gives Phi = {v}, multisegments give {phi}"),
            ),
            Err(e) => fail(&refs, e.to_string()),
        }
    };

    let mut tuples: Vec<Vec<Multisegment>> = domain.iter().map(|m| vec![m.clone()]).collect();
    for x in &domain {
        for y in &domain {
            tuples.push(vec![x.clone(), y.clone()]);
        }
    }
    if !domain.is_empty() && a.max_segments > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for _ in 0..a.samples {
            tuples.push(
                (0..3)
                    .map(|_| domain.choose(&mut rng).unwrap().clone())
                    .collect(),
            );
        }
    }
    SuiteOutcome {
        suite: "combi",
        checked: tuples.len(),
        counterexample: first_failure(&tuples, |ms| check(ms)),
    }
}

fn rsk_check(m: &Multisegment) -> Check {
    let rsk = match rsk_transform(m) {
        Ok(r) => r,
        Err(e) => return fail(&[m], e.to_string()),
    };
    let omega = dilworth_width(m);
    if rsk.len() != omega {
        return fail(
            &[m],
            format!(
                "RSK has {} ladders, minimum chain cover is {omega}",
                rsk.len()
            ),
        );
    }
    if rsk.ladders().iter().map(Multisegment::wt).sum::<Weight>() != m.wt() {
        return fail(&[m], format!("RSK {rsk} changes the weight"));
    }
    if rsk
        .ladders()
        .iter()
        .map(Multisegment::b_invariant)
        .sum::<Weight>()
        != m.b_invariant()
    {
        return fail(&[m], format!("RSK {rsk} changes the begin weight"));
    }
    if !m.is_empty() && !m.is_ladder() {
        let (l, rest) = knuth_viennot(m).map_err(|e| Counterexample {
            inputs: vec![m.to_string()],
            message: e.to_string(),
        })?;
        if dilworth_width(&rest) + 1 != omega {
            return fail(
                &[m],
                format!("width does not drop by one after the step to ({l}, {rest})"),
            );
        }
        if rest.len() <= BRUTE_PERMISSIBLE_LIMIT && !brute_permissible(&l, &rest).unwrap() {
            return fail(&[m], format!("({l}, {rest}) is not permissible"));
        }
    }
    if !m.is_empty() && m.len() <= KV_CHOICE_LIMIT && !kv_choice_independence(m).unwrap() {
        return fail(
            &[m],
            "Knuth-Viennot output depends on the enumeration".into(),
        );
    }
    Ok(())
}

fn rsk_suite(a: &CheckArgs, b: EnumerationBounds) -> SuiteOutcome {
    let mut domain: Vec<Multisegment> = enumerate_multisegments(b).collect();
    let enumerated = domain.len();
    domain.extend(extension(a, 0x72736b, a.samples / 10));
    let mut counterexample = first_failure(&domain, rsk_check);
    if counterexample.is_none() {
        // Injectivity of one Knuth-Viennot step on the enumerated set.
        let mut seen: HashMap<(Multisegment, Multisegment), &Multisegment> = HashMap::new();
        for m in domain[..enumerated]
            .iter()
            .filter(|m| !m.is_empty() && !m.is_ladder())
        {
            let out = knuth_viennot(m).unwrap();
            if let Some(prev) = seen.insert(out, m) {
                counterexample =
                    fail(&[prev, m], "Knuth-Viennot step is not injective".into()).err();
                break;
            }
        }
    }
    SuiteOutcome {
        suite: "rsk",
        checked: domain.len(),
        counterexample,
    }
}

fn strings_check(m: &Multisegment, t: i64) -> Check {
    let d = m.derive();
    for tt in [t, t + 2] {
        match bz_derivative(m, tt) {
            Ok(r) if r == d => {}
            Ok(r) => {
                return fail(
                    &[m],
                    format!("BZ sweep with T = {tt} gives {r}, derivative is {d}"),
                )
            }
            Err(e) => return fail(&[m], e.to_string()),
        }
    }
    let ext = m.extend();
    if ext.derive() != *m {
        return fail(&[m], format!("derivative of {ext} is not the input"));
    }
    let lhs = rsk_transform(&ext).unwrap().derive().without_gaps();
    let rhs = rsk_transform(m).unwrap();
    if lhs != rhs {
        return fail(&[m], format!("derived RSK of {ext} is {lhs}, RSK is {rhs}"));
    }
    Ok(())
}

fn strings_suite(a: &CheckArgs, b: EnumerationBounds) -> SuiteOutcome {
    let t = a.min.abs().max(a.max.abs()).max(1);
    let mut domain: Vec<Multisegment> = enumerate_multisegments(b).collect();
    domain.extend(extension(a, 0x737472, a.samples / 10));
    SuiteOutcome {
        suite: "strings",
        checked: domain.len(),
        counterexample: first_failure(&domain, |m| strings_check(m, t)),
    }
}

fn specht_suite(a: &CheckArgs) -> SuiteOutcome {
    let mut cases = Vec::new();
    for level in 1..=3 {
        let mps = enumerate_multipartitions(level, a.max_size);
        for kappa in enumerate_multicharges(level, a.min, a.max) {
            for mp in &mps {
                if is_restricted(&kappa, mp).unwrap() {
                    cases.push((kappa.clone(), mp.clone()));
                }
            }
        }
    }
    let counterexample = first_failure(&cases, |(kappa, mp)| {
        let describe = |message: String| Counterexample {
            inputs: vec![
                format!("--charge {}", join(kappa.charges())),
                format!("--parts {mp}"),
            ],
            message,
        };
        let report = specht_rsk_verify(kappa, mp).map_err(|e| describe(e.to_string()))?;
        if !report.gamma.is_positive() {
            return Err(describe(format!(
                "gamma {} is not in the positive cone",
                report.gamma
            )));
        }
        if !column_removal_check(kappa, mp).unwrap() {
            return Err(describe(
                "first-column removal disagrees with the derivative".into(),
            ));
        }
        Ok(())
    });
    SuiteOutcome {
        suite: "specht",
        checked: cases.len(),
        counterexample,
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn run_suites(a: &CheckArgs) -> Result<Vec<SuiteOutcome>, CommandReport> {
    let b = bounds(a)?;
    let wanted = |s: Suite| a.suite == s || a.suite == Suite::All;
    let mut out = Vec::new();
    if wanted(Suite::Combi) {
        out.push(combi_suite(a, b));
    }
    if wanted(Suite::Rsk) {
        out.push(rsk_suite(a, b));
    }
    if wanted(Suite::Strings) {
        out.push(strings_suite(a, b));
    }
    if wanted(Suite::Specht) {
        out.push(specht_suite(a));
    }
    Ok(out)
}

pub fn run(a: &CheckArgs) -> CommandReport {
    let outcomes = match run_suites(a) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let mut lines = Vec::new();
    let mut diagnostics = Vec::new();
    for o in &outcomes {
        match &o.counterexample {
            None => lines.push(format!("{}: pass ({} instances)", o.suite, o.checked)),
            Some(c) => {
                lines.push(format!(
                    "{}: FAIL on {}: {}",
                    o.suite,
                    c.inputs.join(" "),
                    c.message
                ));
                diagnostics.push(format!(
                    "counterexample ({}): {} :: {}",
                    o.suite,
                    c.inputs.join(" "),
                    c.message
                ));
            }
        }
    }
    let failed = !diagnostics.is_empty();
    if failed {
        diagnostics.push(format!("reproduce: {}", a.reproduction()));
    }
    let payload = json!({ "suites": outcomes, "reproduce": a.reproduction() });
    CommandReport {
        status: if failed {
            Status::CheckFailure
        } else {
            Status::Ok
        },
        payload,
        diagnostics,
        lines,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ladders_core::Segment;

    fn args(suite: Suite, max_segments: usize) -> CheckArgs {
        CheckArgs {
            suite,
            min: -1,
            max: 1,
            max_segments,
            max_size: 3,
            seed: 1,
            samples: 200,
            inject_fault: None,
        }
    }

    #[test]
    fn suites_pass_on_small_bounds() {
        let outcomes = run_suites(&args(Suite::All, 2)).unwrap();
        assert_eq!(outcomes.len(), 4);
        assert!(
            outcomes.iter().all(|o| o.counterexample.is_none()),
            "{outcomes:?}"
        );
    }

    #[test]
    fn injected_fault_is_caught() {
        let mut a = args(Suite::Combi, 1);
        a.inject_fault = Some(Fault::EllSign);
        let r = run(&a);
        assert_eq!(r.status, Status::CheckFailure);
        assert!(r
            .diagnostics
            .iter()
            .any(|d| d.contains("--inject-fault ell-sign")));
    }

    #[test]
    fn counterexample_is_deterministic() {
        let mut a = args(Suite::Combi, 2);
        a.inject_fault = Some(Fault::EllSign);
        let first = run_suites(&a).unwrap();
        let second = run_suites(&a).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn extension_respects_the_empty_bound() {
        assert!(extension(&args(Suite::Rsk, 0), 0, 10).is_empty());
        let ext = extension(&args(Suite::Rsk, 2), 0, 10);
        assert!(ext.iter().all(|m| (3..=4).contains(&m.len())));
    }

    #[test]
    fn rsk_check_flags_nothing_on_ladders() {
        let m = Multisegment::new([Segment::new(0, 0).unwrap(), Segment::new(1, 2).unwrap()]);
        assert!(rsk_check(&m).is_ok());
    }
}
