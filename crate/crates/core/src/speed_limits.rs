//! Energy bounds the rate of computation.
//!
//! A gate holding average energy `E` (measured above its ground state) needs
//! at least `πħ/2E` to reach an orthogonal state, so a machine with total
//! energy `E` performs at most `2E/πħ` binary operations per second however
//! that energy is split among gates. Operations that cycle through more than
//! two states run at half that rate; only the binary rate is modeled.

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{non_negative, positive, LimitsError, Result};
use crate::Scalar;

/// Average energy above the ground state available for logic, in joules.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct EnergyBudget<T>(T);

impl<T: Scalar> EnergyBudget<T> {
    pub fn new(total_energy: T) -> Result<Self> {
        non_negative("energy budget", total_energy).map(Self)
    }

    /// Rest-mass energy `mc²`.
    pub fn rest_mass(mass: T, k: &PhysicalConstants<T>) -> Result<Self> {
        Self::new(non_negative("mass", mass)? * k.c * k.c)
    }

    pub fn joules(self) -> T {
        self.0
    }
}

/// Per-gate energies and energy spreads, both in joules.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateAllocation<T> {
    gate_energies: Vec<T>,
    gate_spreads: Vec<T>,
}

impl<T: Scalar> GateAllocation<T> {
    pub fn new(gate_energies: Vec<T>, gate_spreads: Vec<T>) -> Result<Self> {
        if gate_energies.len() != gate_spreads.len() {
            return Err(LimitsError::DimensionMismatch {
                expected: gate_energies.len(),
                actual: gate_spreads.len(),
            });
        }
        for (&e, &de) in gate_energies.iter().zip(&gate_spreads) {
            non_negative("gate energy", e)?;
            non_negative("gate energy spread", de)?;
            if de > e {
                return Err(LimitsError::InvalidArgument(format!(
                    "gate spread {:e} J exceeds gate energy {:e} J",
                    de.as_f64(),
                    e.as_f64()
                )));
            }
        }
        Ok(Self {
            gate_energies,
            gate_spreads,
        })
    }

    pub fn gate_energies(&self) -> &[T] {
        &self.gate_energies
    }

    pub fn gate_spreads(&self) -> &[T] {
        &self.gate_spreads
    }

    pub fn len(&self) -> usize {
        self.gate_energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gate_energies.is_empty()
    }

    /// `2E_ℓ/πħ` for each gate.
    pub fn gate_rates(&self, k: &PhysicalConstants<T>) -> Vec<T> {
        self.gate_energies.iter().map(|&e| rate(e, k)).collect()
    }

    /// Sum of per-gate rates.
    pub fn total_rate(&self, k: &PhysicalConstants<T>) -> T {
        self.gate_rates(k).into_iter().fold(T::zero(), |acc, r| acc + r)
    }
}

fn rate<T: Scalar>(energy: T, k: &PhysicalConstants<T>) -> T {
    T::lit(2.0) * energy / (T::PI() * k.hbar)
}

/// `2E/πħ` operations per second. Zero energy gives zero rate.
pub fn max_ops_per_second<T: Scalar>(budget: EnergyBudget<T>, k: &PhysicalConstants<T>) -> T {
    rate(budget.joules(), k)
}

/// `πħ/2E` seconds, the shortest time to reach an orthogonal state.
pub fn min_op_time<T: Scalar>(average_energy: T, k: &PhysicalConstants<T>) -> Result<T> {
    let e = positive("average energy", average_energy)?;
    Ok(T::PI() * k.hbar / (T::lit(2.0) * e))
}

/// Splits the budget over `n_gates` gates in proportion to `weights`.
///
/// The spread of each gate is set to its energy, which is what the two-level
/// construction with ground state at zero and equal superposition gives.
pub fn allocate<T: Scalar>(budget: EnergyBudget<T>, n_gates: usize, weights: &[T]) -> Result<GateAllocation<T>> {
    if n_gates == 0 {
        return Err(LimitsError::InvalidArgument("need at least one gate".into()));
    }
    if weights.len() != n_gates {
        return Err(LimitsError::DimensionMismatch {
            expected: n_gates,
            actual: weights.len(),
        });
    }
    for &w in weights {
        non_negative("gate weight", w)?;
    }
    let total = weights.iter().fold(T::zero(), |acc, &w| acc + w);
    if total == T::zero() {
        return Err(LimitsError::InvalidArgument("gate weights are all zero".into()));
    }
    let energies: Vec<T> = weights.iter().map(|&w| budget.joules() * w / total).collect();
    GateAllocation::new(energies.clone(), energies)
}

/// Uniform split over `n_gates`.
pub fn allocate_uniform<T: Scalar>(budget: EnergyBudget<T>, n_gates: usize) -> Result<GateAllocation<T>> {
    allocate(budget, n_gates, &vec![T::one(); n_gates])
}

/// Overall `(ΔE, E)`: spreads add in quadrature, energies add linearly.
pub fn total_spread<T: Scalar>(alloc: &GateAllocation<T>) -> (T, T) {
    let var = alloc.gate_spreads.iter().fold(T::zero(), |acc, &d| acc + d * d);
    let energy = alloc.gate_energies.iter().fold(T::zero(), |acc, &e| acc + e);
    (var.sqrt(), energy)
}
