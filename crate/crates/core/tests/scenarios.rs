//! Golden check counts per scenario, and the documented failure witnesses.

use nebcheck::{run_scenario, scenarios, Params, Status};

const GOLDEN: &[(&str, usize, usize)] = &[
    ("example-ex", 370, 0),
    ("example-exhopf", 893, 146),
    ("exhopf-transposed", 880, 0),
    ("lemma-isigma", 106, 0),
    ("prop-comm", 1142, 0),
    ("prop-commhopf", 1142, 0),
    ("comonads", 1820, 0),
    ("comodule-equivalence", 1049, 0),
    ("hopf-axioms", 718, 0),
    ("convolution", 1089, 0),
    ("extension-of-scalars", 81, 0),
    ("neg-coaction", 9, 2),
    ("neg-example-ex", 292, 146),
    ("neg-exhopf", 876, 146),
    ("neg-hopf-axioms", 24, 6),
];

#[test]
fn every_registered_scenario_has_a_golden_count() {
    let names: Vec<&str> = scenarios().iter().map(|s| s.name).collect();
    let golden: Vec<&str> = GOLDEN.iter().map(|g| g.0).collect();
    assert_eq!(names, golden);
}

#[test]
fn scenario_counts_match() {
    let params = Params::default();
    for &(name, checks, failed) in GOLDEN {
        let r = run_scenario(name, &params).unwrap();
        let s = r.summary();
        assert_eq!((s.checks, s.failed), (checks, failed), "{name}");
    }
}

#[test]
fn example_exhopf_failures_are_confined_to_coassociativity() {
    let r = run_scenario("example-exhopf", &Params::default()).unwrap();
    for e in r.entries.iter().filter(|e| e.status == Status::Fail) {
        assert_eq!(e.check, "hopf-module-coassociativity");
        assert!(e.witness.is_some());
    }
    assert!(r.entries.iter().filter(|e| e.check == "rho-r-equals-theta-r").all(|e| e.status == Status::Pass));
}

#[test]
fn certified_inverses_round_trip_over_finite_fields() {
    let params = Params { field: nebcheck::Field::prime(7).unwrap(), ..Params::default() };
    for name in ["prop-comm", "prop-commhopf", "extension-of-scalars"] {
        let r = run_scenario(name, &params).unwrap();
        assert!(r.all_pass(), "{name}");
    }
}

#[test]
fn seed_changes_only_random_sweeps() {
    let a = run_scenario("hopf-axioms", &Params::default()).unwrap();
    let b = run_scenario("hopf-axioms", &Params { seed: 9, ..Params::default() }).unwrap();
    assert!(b.all_pass());
    assert_eq!(a.summary().checks, b.summary().checks);
}
