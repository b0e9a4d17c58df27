//! Verifier behavior across parameter sets, including a live negative
//! case: the closure form of the two-generator argument genuinely fails
//! on the A-side at (3, 7), where the order-3 action on F₇² splits into
//! eigenlines, so the verifier must surface exactly those
//! counterexamples rather than pass vacuously.

mod common;

use amalgam_core::verify::{self, VerifyConfig};
use common::{ctx35, ctx37};

fn small() -> VerifyConfig {
    VerifyConfig {
        seed: 42,
        samples: 200,
        max_letters: 5,
        conjugate_samples: 15,
        probe_samples: 150,
    }
}

#[test]
fn full_suite_passes_at_3_5() {
    let reports = verify::run_all(ctx35(), &small());
    assert_eq!(reports.len(), 8);
    for r in &reports {
        assert!(r.passed(), "{} failed: {:?}", r.claim, r.fail);
    }
    // fixed claim order for stable output
    let names: Vec<&str> = reports.iter().map(|r| r.claim.as_str()).collect();
    assert_eq!(
        names,
        [
            "self-normalizing",
            "intersection",
            "isolated",
            "torsion",
            "generation",
            "generation-conjugate",
            "perfect",
            "centralizer-probe"
        ]
    );
}

#[test]
fn sampled_suites_pass_at_3_7() {
    let cfg = small();
    for r in [
        verify::verify_self_normalizing_c(ctx37(), &cfg),
        verify::verify_isolated(ctx37(), &cfg),
        verify::verify_torsion_classification(ctx37(), &cfg),
        verify::verify_perfectness(ctx37()),
    ] {
        assert!(r.passed(), "{} failed at (3,7): {:?}", r.claim, r.fail);
    }
}

#[test]
fn generation_closure_misses_detected_at_3_7() {
    let r = verify::verify_generation(ctx37());
    assert!(!r.passed(), "the eigenline cases must be reported");
    // 2 eigenlines x 6 nonzero multiples x 7 central coordinates
    assert_eq!(r.fail_count, 84);
    assert!(r
        .notes
        .iter()
        .any(|n| n.contains("side B: 2184 non-central elements checked, 0 closure misses")));
    assert!(r
        .notes
        .iter()
        .any(|n| n.contains("side A: 336 non-central elements checked, 84 closure misses")));
}

#[test]
fn reports_identical_across_runs() {
    let cfg = small();
    let to_value = |r: &verify::VerificationReport| {
        let mut v = serde_json::to_value(r).unwrap();
        v["duration_ms"] = 0.into();
        v
    };
    let first: Vec<_> = verify::run_all(ctx35(), &cfg)
        .iter()
        .map(to_value)
        .collect();
    let second: Vec<_> = verify::run_all(ctx35(), &cfg)
        .iter()
        .map(to_value)
        .collect();
    assert_eq!(first, second);
}
