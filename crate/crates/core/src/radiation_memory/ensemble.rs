use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{positive, LimitsError, Result};
use crate::numeric::bisect;
use crate::Scalar;

/// Canonical ensemble over a discrete spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalEnsemble<T> {
    /// `ln Z`. Kept separately since `Z` itself over/underflows easily.
    pub log_partition: T,
    /// `Z = Σ exp(-E_i/k_B T)`; may be 0 or ∞ where `ln Z` is fine.
    pub partition: T,
    pub probabilities: Vec<T>,
    /// Mean energy, J.
    pub energy: T,
    /// Gibbs form `-k_B Σ p ln p`, J/K.
    pub entropy: T,
    /// Thermodynamic form `E/T + k_B ln Z`, J/K.
    pub entropy_thermodynamic: T,
}

fn check_levels<T: Scalar>(levels: &[T]) -> Result<T> {
    if levels.is_empty() {
        return Err(LimitsError::InvalidArgument("energy spectrum is empty".into()));
    }
    let mut lowest = T::infinity();
    for &e in levels {
        if !e.is_finite() {
            return Err(LimitsError::Domain {
                quantity: "energy level",
                requirement: "finite",
                value: e.as_f64(),
            });
        }
        lowest = lowest.min(e);
    }
    Ok(lowest)
}

/// Boltzmann weights relative to the lowest level; returns `(weights, Σ weights)`.
fn shifted_weights<T: Scalar>(levels: &[T], lowest: T, kt: T) -> (Vec<T>, T) {
    let w: Vec<T> = levels.iter().map(|&e| (-(e - lowest) / kt).exp()).collect();
    let z = w.iter().fold(T::zero(), |acc, &x| acc + x);
    (w, z)
}

fn mean_energy<T: Scalar>(levels: &[T], lowest: T, kt: T) -> T {
    let (w, z) = shifted_weights(levels, lowest, kt);
    let shifted = levels
        .iter()
        .zip(&w)
        .fold(T::zero(), |acc, (&e, &wi)| acc + (e - lowest) * wi);
    lowest + shifted / z
}

/// `p_i = exp(-E_i/k_B T)/Z`, mean energy, and entropy computed both ways.
///
/// Exponents are taken relative to the lowest level so large spectra at low
/// temperature do not overflow.
pub fn canonical_ensemble<T: Scalar>(
    levels: &[T],
    temperature: T,
    k: &PhysicalConstants<T>,
) -> Result<CanonicalEnsemble<T>> {
    let lowest = check_levels(levels)?;
    positive("temperature", temperature)?;
    let kt = k.k_b * temperature;

    let (w, z_shifted) = shifted_weights(levels, lowest, kt);
    // ln of the shifted partition function as ln(1 + Σ other weights), which
    // stays accurate when the ground level holds nearly all the probability.
    let ground = levels.iter().position(|&e| e == lowest).unwrap_or(0);
    let rest = w
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ground)
        .fold(T::zero(), |acc, (_, &x)| acc + x);
    let ln_z_shifted = rest.ln_1p();
    let probabilities: Vec<T> = w.iter().map(|&x| x / z_shifted).collect();
    let excitation = levels
        .iter()
        .zip(&probabilities)
        .fold(T::zero(), |acc, (&e, &p)| acc + (e - lowest) * p);
    let energy = excitation + lowest;
    let log_partition = ln_z_shifted - lowest / kt;
    // -Σ p ln p with ln p_i = -(E_i - E_0)/k_B T - ln Z_shifted.
    let gibbs = levels.iter().zip(&probabilities).fold(T::zero(), |acc, (&e, &p)| {
        if p > T::zero() {
            acc + p * ((e - lowest) / kt + ln_z_shifted)
        } else {
            acc
        }
    });

    Ok(CanonicalEnsemble {
        log_partition,
        partition: log_partition.exp(),
        probabilities,
        energy,
        entropy: k.k_b * gibbs,
        // Same as E/T + k_B ln Z with the E_0/T terms cancelled analytically.
        entropy_thermodynamic: excitation / temperature + k.k_b * ln_z_shifted,
    })
}

/// Temperature at which the canonical mean energy equals `target`.
///
/// The map `T ↦ E(T)` rises monotonically from the lowest level (T → 0) to the
/// plain average of the levels (T → ∞); targets outside that open interval are
/// rejected. The root is bracketed by doubling and then bisected in `ln T`.
pub fn solve_temperature_for_energy<T: Scalar>(levels: &[T], target: T, k: &PhysicalConstants<T>) -> Result<T> {
    let lowest = check_levels(levels)?;
    let n = T::from_usize(levels.len()).unwrap();
    let ceiling = levels.iter().fold(T::zero(), |acc, &e| acc + e) / n;
    if !(target > lowest && target < ceiling) {
        return Err(LimitsError::EnergyOutOfRange {
            target: target.as_f64(),
            low: lowest.as_f64(),
            high: ceiling.as_f64(),
        });
    }

    let excess = |ln_t: T| mean_energy(levels, lowest, k.k_b * ln_t.exp()) - target;

    // Natural scale: spectral width over k_B.
    let highest = levels.iter().fold(T::neg_infinity(), |acc, &e| acc.max(e));
    let mut lo = ((highest - lowest) / k.k_b).ln();
    let mut hi = lo;
    let step = T::LN_2();
    let mut guard = 0;
    while excess(lo) > T::zero() {
        lo = lo - step;
        guard += 1;
        if guard > 4096 || !lo.is_finite() {
            return Err(LimitsError::InvalidArgument(
                "could not bracket temperature from below".into(),
            ));
        }
    }
    while excess(hi) < T::zero() {
        hi = hi + step;
        guard += 1;
        if guard > 4096 || !hi.exp().is_finite() {
            return Err(LimitsError::InvalidArgument(
                "could not bracket temperature from above".into(),
            ));
        }
    }
    bisect(lo, hi, excess, 400).map(T::exp)
}
