//! Entropy bounds memory.
//!
//! The machine's mass-energy is modeled as thermal radiation of every species
//! light enough to be produced at the resulting temperature. The canonical
//! ensemble over those modes gives the maximum entropy at fixed mean energy,
//! and that entropy divided by `k_B ln 2` is the available memory in bits.
//!
//! The computer's actual state during a computation has zero entropy; what is
//! computed here is capacity.

mod ensemble;
mod mode_sum;
mod species;

pub use ensemble::{canonical_ensemble, solve_temperature_for_energy, CanonicalEnsemble};
pub use mode_sum::{continuum_radiation_energy, mode_sum_entropy, ModeSum};
pub use species::{effective_dof, ParticleSpecies, SpeciesTable, Statistics};

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{positive, LimitsError, Result};
use crate::Scalar;

/// Thermal equilibrium of a fixed energy in a fixed volume.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThermalState<T> {
    /// Kelvin.
    pub temperature: T,
    /// Joules.
    pub energy: T,
    /// Cubic meters.
    pub volume: T,
    /// J/K.
    pub entropy: T,
    pub bits: T,
    /// Σ r_ℓ over the included species.
    pub r_effective: T,
    pub included_species: Vec<String>,
    /// `2πħc/k_B T`, meters.
    pub thermal_wavelength: T,
    /// `k_B T/2c²`, kg: species lighter than this count as radiation.
    pub threshold_mass: T,
}

/// `T = (30 (ħc)³ E / (r π² V))^¼ / k_B` for `r` massless degrees of freedom.
pub fn radiation_temperature<T: Scalar>(energy: T, volume: T, r: T, k: &PhysicalConstants<T>) -> T {
    let hc = k.hbar_c();
    let pi = T::PI();
    (T::lit(30.0) * hc * hc * hc * energy / (r * pi * pi * volume))
        .sqrt()
        .sqrt()
        / k.k_b
}

fn state_for<T: Scalar>(
    energy: T,
    volume: T,
    table: &SpeciesTable<T>,
    included: &[usize],
    k: &PhysicalConstants<T>,
) -> ThermalState<T> {
    let r = table.r_of(included);
    let temperature = radiation_temperature(energy, volume, r, k);
    let entropy = T::lit(4.0) * energy / (T::lit(3.0) * temperature);
    ThermalState {
        temperature,
        energy,
        volume,
        entropy,
        bits: entropy / (k.k_b * T::LN_2()),
        r_effective: r,
        included_species: table.names_of(included),
        thermal_wavelength: T::lit(2.0) * T::PI() * k.hbar_c() / (k.k_b * temperature),
        threshold_mass: k.k_b * temperature / (T::lit(2.0) * k.c * k.c),
    }
}

/// Solves for the radiation-dominated equilibrium of `energy` in `volume`.
///
/// Species inclusion is iterated to a fixed point: start from the massless
/// species, compute the temperature, admit every species with
/// `m < k_B T/2c²`, and repeat until the admitted set stops changing. Admitting
/// species lowers the temperature, so the iteration can cycle; a repeated
/// set, or more rounds than there are species, is reported as
/// [`LimitsError::SpeciesOscillation`] carrying both candidate sets.
pub fn solve_thermal_state<T: Scalar>(
    energy: T,
    volume: T,
    table: &SpeciesTable<T>,
    k: &PhysicalConstants<T>,
) -> Result<ThermalState<T>> {
    positive("energy", energy)?;
    positive("volume", volume)?;

    let species = table.species();
    let mut included: Vec<usize> = (0..species.len()).filter(|&i| species[i].mass == T::zero()).collect();
    let mut history: Vec<Vec<usize>> = Vec::new();

    for _ in 0..=species.len() {
        let state = state_for(energy, volume, table, &included, k);
        let next: Vec<usize> = (0..species.len())
            .filter(|&i| species[i].mass < state.threshold_mass)
            .collect();
        if next == included {
            return Ok(state);
        }
        if history.contains(&next) {
            return Err(LimitsError::SpeciesOscillation {
                first: table.names_of(&included),
                second: table.names_of(&next),
            });
        }
        history.push(std::mem::replace(&mut included, next));
    }
    let previous = history.pop().unwrap_or_default();
    Err(LimitsError::SpeciesOscillation {
        first: table.names_of(&previous),
        second: table.names_of(&included),
    })
}

/// `2 ln2 k_B E/(πħS)`: operations per bit per second with all memory in use.
pub fn ops_per_bit_per_second<T: Scalar>(energy: T, entropy: T, k: &PhysicalConstants<T>) -> Result<T> {
    positive("energy", energy)?;
    positive("entropy", entropy)?;
    Ok(T::lit(2.0) * T::LN_2() * k.k_b * energy / (T::PI() * k.hbar * entropy))
}

/// `(2π)⁵ r_ℓ/(90 ln 2)`: bits of memory per cubic thermal wavelength.
pub fn bits_per_cubic_thermal_wavelength<T: Scalar>(r_l: T) -> T {
    let two_pi = T::lit(2.0) * T::PI();
    two_pi.powi(5) * r_l / (T::lit(90.0) * T::LN_2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::default_constants;
    use crate::scalar::rel_diff;
    use proptest::prelude::*;

    fn k() -> PhysicalConstants<f64> {
        default_constants()
    }

    fn laptop() -> ThermalState<f64> {
        let e = 1.0 * k().c * k().c;
        solve_thermal_state(e, 1e-3, &SpeciesTable::photon_only(), &k()).unwrap()
    }

    /// Entropy from the energy form, evaluated independently of the solver.
    fn eq2_entropy(e: f64, v: f64, r: f64) -> f64 {
        let k = k();
        let pi = std::f64::consts::PI;
        4.0 / 3.0 * k.k_b * (pi * pi * r * v / (30.0 * k.hbar.powi(3) * k.c.powi(3))).powf(0.25) * e.powf(0.75)
    }

    #[test]
    fn ultimate_laptop_memory() {
        let s = laptop();
        assert!(rel_diff(s.temperature, 5.87e8) < 1e-2, "{:e}", s.temperature);
        assert!(rel_diff(s.entropy, 2.04e8) < 1e-2, "{:e}", s.entropy);
        assert!(rel_diff(s.bits, 2.13e31) < 1e-2, "{:e}", s.bits);
        assert!(rel_diff(k().k_b * s.temperature, 8.10e-15) < 1e-2);
        assert!(rel_diff(s.threshold_mass, 4.51e-32) < 1e-2);
        assert_eq!(s.included_species, vec!["photon".to_string()]);
        assert_eq!(s.r_effective, 2.0);
    }

    #[test]
    fn electron_stays_out_of_a_liter_kilogram() {
        let table = SpeciesTable::new(vec![ParticleSpecies::photon(), ParticleSpecies::electron()]).unwrap();
        let s = solve_thermal_state(k().c * k().c, 1e-3, &table, &k()).unwrap();
        assert_eq!(s.included_species, vec!["photon".to_string()]);
        assert!(s.threshold_mass < 9.1e-31);
    }

    #[test]
    fn electron_joins_when_compressed() {
        let table = SpeciesTable::new(vec![ParticleSpecies::photon(), ParticleSpecies::electron()]).unwrap();
        let s = solve_thermal_state(k().c * k().c, 1e-12, &table, &k()).unwrap();
        assert_eq!(s.included_species.len(), 2);
        assert_eq!(s.r_effective, 5.5);
        assert!(s.threshold_mass > 9.1e-31);
    }

    #[test]
    fn oscillating_inclusion_is_reported() {
        // A species heavy enough that including it drops T below its own threshold.
        let e = k().c * k().c;
        let v = 1e-3;
        let t_photon = radiation_temperature(e, v, 2.0, &k());
        let thr_photon = k().k_b * t_photon / (2.0 * k().c * k().c);
        let heavy = ParticleSpecies::new("heavy", thr_photon * 0.99, 2, 1000, Statistics::Boson).unwrap();
        let table = SpeciesTable::new(vec![ParticleSpecies::photon(), heavy]).unwrap();
        match solve_thermal_state(e, v, &table, &k()) {
            Err(LimitsError::SpeciesOscillation { first, second }) => {
                assert_ne!(first, second);
            }
            other => panic!("expected oscillation, got {other:?}"),
        }
    }

    #[test]
    fn more_species_barely_move_entropy() {
        let fictitious = ParticleSpecies::new("bulk", 0.0, 2, 9_999, Statistics::Boson).unwrap();
        let table = SpeciesTable::new(vec![ParticleSpecies::photon(), fictitious]).unwrap();
        let s = solve_thermal_state(k().c * k().c, 1e-3, &table, &k()).unwrap();
        assert_eq!(s.r_effective, 20_000.0);
        assert!(rel_diff(s.entropy / laptop().entropy, 10.0) < 1e-6);
    }

    #[test]
    fn thermal_state_invariants() {
        let s = laptop();
        let k = k();
        assert!(rel_diff(s.entropy, 4.0 / 3.0 * s.energy / s.temperature) < 1e-9);
        assert!(rel_diff(s.bits, s.entropy / (k.k_b * std::f64::consts::LN_2)) < 1e-12);
        assert!(
            rel_diff(
                s.thermal_wavelength,
                2.0 * std::f64::consts::PI * k.hbar * k.c / (k.k_b * s.temperature)
            ) < 1e-12
        );
        assert!(rel_diff(s.entropy, eq2_entropy(s.energy, s.volume, 2.0)) < 1e-9);
    }

    #[test]
    fn solver_rejects_bad_inputs() {
        let t = SpeciesTable::photon_only();
        assert!(solve_thermal_state(0.0, 1.0, &t, &k()).is_err());
        assert!(solve_thermal_state(1.0, -1.0, &t, &k()).is_err());
    }

    #[test]
    fn ops_per_bit_for_the_laptop() {
        let s = laptop();
        let opb = ops_per_bit_per_second(s.energy, s.entropy, &k()).unwrap();
        assert!((1e19..=3e19).contains(&opb), "{opb:e}");
        let via_t = 3.0 * std::f64::consts::LN_2 * k().k_b * s.temperature / (2.0 * std::f64::consts::PI * k().hbar);
        assert!(rel_diff(opb, via_t) < 1e-9);
        let doubled = ops_per_bit_per_second(2.0 * s.energy, s.entropy, &k()).unwrap();
        assert!(rel_diff(doubled, 2.0 * opb) < 1e-15);
        assert!(ops_per_bit_per_second(0.0, 1.0, &k()).is_err());
        assert!(ops_per_bit_per_second(1.0, 0.0, &k()).is_err());
    }

    #[test]
    fn bits_per_thermal_wavelength() {
        let b2 = bits_per_cubic_thermal_wavelength(2.0f64);
        assert!(rel_diff(b2, 313.9) < 1e-3, "{b2}");
        assert!(rel_diff(bits_per_cubic_thermal_wavelength(1.0f64), b2 / 2.0) < 1e-15);
        let s = laptop();
        let per_cell = s.bits * s.thermal_wavelength.powi(3) / s.volume;
        assert!(rel_diff(per_cell, b2) < 1e-6);
    }

    proptest! {
        #[test]
        fn entropy_scaling_laws(e in 1e-3f64..1e20, v in 1e-30f64..1e3, a in 1e-3f64..1e3) {
            let t = SpeciesTable::photon_only();
            let s = |e: f64, v: f64| solve_thermal_state(e, v, &t, &k()).unwrap().entropy;
            let base = s(e, v);
            prop_assert!(rel_diff(s(a * e, v), a.powf(0.75) * base) < 1e-12);
            prop_assert!(rel_diff(s(e, a * v), a.powf(0.25) * base) < 1e-12);
            prop_assert!(rel_diff(base, eq2_entropy(e, v, 2.0)) < 1e-9);
        }
    }
}
