use physlimits::qdyn::{verify, EnsembleConfig};
use physlimits::scenarios::{names, run, Params};

/// Quoted numbers from the acceptance criteria, each expected in exactly one scenario.
const QUOTED: &[f64] = &[
    5.4258e50, 5.87e8, 2.04e8, 2.13e31, 1.485e-27, 3.827e16, 5.67e-8, 4.04e26, 1.198e42, 7.195e42, 215.3,
];

#[test]
fn each_quoted_number_lives_in_one_scenario() {
    let reports: Vec<_> = names().into_iter().map(|n| run(n, &Params::new()).unwrap()).collect();
    for &q in QUOTED {
        let homes: Vec<_> = reports
            .iter()
            .filter(|r| r.paper_values.values().any(|pv| pv.value == q))
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(homes.len(), 1, "{q:e} quoted in {homes:?}");
    }
}

#[test]
fn full_ensemble_has_no_violations() {
    let s = verify(&EnsembleConfig::default()).unwrap();
    assert_eq!(s.ensemble.trials, 500);
    assert_eq!(s.ensemble.violations, 0);
    assert!(s.ensemble.found > 300);
    assert!(s.passed());
}
