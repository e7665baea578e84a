use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex;
use physlimits::constants::{planck_scales, PhysicalConstants};
use physlimits::parallelism_errors::energy_throughput;
use physlimits::qdyn::{evolve, orthogonalization_time, HamiltonianMatrix, StateVector};
use physlimits::radiation_memory::{canonical_ensemble, solve_thermal_state, SpeciesTable};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn constants() -> impl Strategy<Value = PhysicalConstants<f64>> {
    (
        1e7f64..1e9,
        1e-35f64..1e-33,
        1e-12f64..1e-9,
        1e-24f64..1e-22,
        1e-3f64..1e-1,
    )
        .prop_map(|(c, hbar, g, k_b, alpha)| PhysicalConstants::new(c, hbar, g, k_b, alpha).unwrap())
}

fn hermitian(n: usize) -> impl Strategy<Value = HamiltonianMatrix<f64>> {
    proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), n * n).prop_map(move |v| {
        let a = DMatrix::from_iterator(n, n, v.into_iter().map(|(re, im)| Complex::new(re, im)));
        HamiltonianMatrix::new((&a + a.adjoint()) * Complex::new(0.5, 0.0)).unwrap()
    })
}

fn state(n: usize) -> impl Strategy<Value = StateVector<f64>> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n)
        .prop_filter("nonzero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
        .prop_map(|v| StateVector::normalized(v.into_iter().map(|(a, b)| Complex::new(a, b)).collect()).unwrap())
}

fn system() -> impl Strategy<Value = (HamiltonianMatrix<f64>, StateVector<f64>)> {
    (2usize..=6).prop_flat_map(|n| (hermitian(n), state(n)))
}

proptest! {
    #[test]
    fn planck_length_over_time_is_c(k in constants()) {
        let p = planck_scales(&k);
        prop_assert!(rel(p.length / p.time, k.c) < 1e-12);
        prop_assert!(rel(p.mass * k.c * k.c * p.time, k.hbar) < 1e-12);
    }

    #[test]
    fn evolution_is_unitary((h, psi) in system(), t in -50.0f64..50.0) {
        let out = evolve(&h, &psi, t).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-10);
        let back = evolve(&h, &out, -t).unwrap();
        prop_assert!((back.amplitudes() - psi.amplitudes()).norm() < 1e-9);
    }

    #[test]
    fn found_orthogonalization_respects_bounds((h, psi) in system()) {
        let mean = h.mean_energy(&psi).unwrap();
        prop_assume!(mean > 1e-6);
        let r = orthogonalization_time(&h, &psi, 50.0 * PI / (2.0 * mean), 1e-3).unwrap();
        prop_assert!(r.respects_bounds(1e-9));
    }

    #[test]
    fn two_level_equal_superposition_attains_both_bounds(e1 in 1e-3f64..1e3, e0 in -10.0f64..10.0, phase in 0.0f64..std::f64::consts::TAU) {
        let h = HamiltonianMatrix::new(DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex::new(e0, 0.0),
            Complex::new(e0 + e1, 0.0),
        ])))
        .unwrap();
        let psi = StateVector::normalized(vec![Complex::new(1.0, 0.0), Complex::from_polar(1.0, phase)]).unwrap();
        let r = orthogonalization_time(&h, &psi, 50.0 * PI / e1, 1e-6).unwrap();
        let t = r.t_orth.unwrap();
        prop_assert!(rel(t, PI / e1) < 1e-6);
        prop_assert!(rel(r.ml_bound, t) < 1e-6 && rel(r.ab_bound, t) < 1e-6);
    }

    #[test]
    fn canonical_ensemble_bounds(levels in proptest::collection::vec(0.0f64..1e-20, 1..50), t in 1e-2f64..1e4) {
        let k = PhysicalConstants::<f64>::default();
        let ens = canonical_ensemble(&levels, t, &k).unwrap();
        let sum: f64 = ens.probabilities.iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
        prop_assert!(ens.entropy >= 0.0);
        prop_assert!(ens.entropy <= k.k_b * (levels.len() as f64).ln() * (1.0 + 1e-12) + 1e-300);
        prop_assert!(ens.entropy == ens.entropy_thermodynamic || rel(ens.entropy, ens.entropy_thermodynamic) < 1e-9);
    }

    #[test]
    fn thermal_entropy_matches_closed_form(log_e in -5.0f64..20.0, log_v in -9.0f64..3.0) {
        let k = PhysicalConstants::<f64>::default();
        let (e, v) = (10f64.powf(log_e), 10f64.powf(log_v));
        let st = solve_thermal_state(e, v, &SpeciesTable::photon_only(), &k).unwrap();
        let hc3 = (k.hbar * k.c).powi(3);
        let oracle = 4.0 / 3.0 * k.k_b * (PI * PI * 2.0 * v / (30.0 * hc3)).powf(0.25) * e.powf(0.75);
        prop_assert!(rel(st.entropy, oracle) < 1e-9);
    }

    #[test]
    fn throughput_is_sigma_t4_area(t in 1.0f64..1e12, area in 1e-6f64..1e6) {
        let k = PhysicalConstants::<f64>::default();
        let p = energy_throughput(t, area, &k).unwrap();
        prop_assert!(rel(p / area, k.stefan_boltzmann() * t.powi(4)) < 1e-12);
    }
}
