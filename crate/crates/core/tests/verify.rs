use magickit::verify::{run_all, run_suite};
use magickit::{calibrate, AlgebraTag, Scalar, Suite, VerifyOptions};

fn quick() -> VerifyOptions {
    VerifyOptions { trials: 8, seed: 7, coeff_bound: 3 }
}

#[test]
fn all_suites_pass_on_small_algebras() {
    for tag in [AlgebraTag::Zero, AlgebraTag::R, AlgebraTag::C] {
        let cal = calibrate(tag).unwrap();
        let reports = run_all(tag, Some(&cal), &quick()).unwrap();
        assert_eq!(reports.len(), Suite::ALL.len());
        for r in &reports {
            assert!(r.passed(), "{} on {tag}: {:?}", r.suite, r.counterexample);
        }
        let skipped: Vec<_> = reports.iter().filter(|r| r.skipped.is_some()).map(|r| r.suite).collect();
        let expect_skipped = match tag {
            AlgebraTag::Zero => vec![Suite::Clifford],
            AlgebraTag::C => vec![Suite::Hyperdet],
            _ => vec![Suite::Clifford, Suite::Hyperdet],
        };
        assert_eq!(skipped, expect_skipped, "{tag}");
    }
}

#[test]
fn reports_are_deterministic() {
    let cal = calibrate(AlgebraTag::C).unwrap();
    let run = || {
        let reps: Vec<_> = [Suite::Jordan, Suite::Quartic, Suite::BracketIdentities]
            .iter()
            .map(|&s| run_suite(s, AlgebraTag::C, Some(&cal), None, &quick()).unwrap())
            .collect();
        serde_json::to_string(&reps).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn wrong_constants_give_replayable_counterexample() {
    let mut cal = calibrate(AlgebraTag::R).unwrap();
    cal.lambda_q = Scalar::from_int(5);
    let rep = run_suite(Suite::Discriminant, AlgebraTag::R, Some(&cal), None, &quick()).unwrap();
    assert!(!rep.passed());
    let c = rep.counterexample.expect("counterexample");
    assert_eq!(c.seed, 7);
    assert!(c.inputs.get("p").is_some());
}

#[test]
fn calibration_required() {
    assert!(run_suite(Suite::Quartic, AlgebraTag::R, None, None, &quick()).is_err());
    let cal = calibrate(AlgebraTag::C).unwrap();
    assert!(run_suite(Suite::Quartic, AlgebraTag::R, Some(&cal), None, &quick()).is_err());
    assert!(run_suite(Suite::Algebra, AlgebraTag::O, None, None, &quick()).unwrap().passed());
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        assert_eq!(serde_json::to_value(s).unwrap(), s.name());
    }
    assert!("all".parse::<Suite>().is_err());
}
