//! Composition of the speed, memory and parallelism bounds for one machine.

use serde::{Deserialize, Serialize};

use crate::blackhole::schwarzschild_radius;
use crate::constants::PhysicalConstants;
use crate::error::{positive, Result};
use crate::parallelism_errors::{
    blackbody_bit_flux, energy_throughput, max_error_rate, parallelism_report, GeometrySpec, ParallelismReport,
    PRINTED_FLUX_FACTOR,
};
use crate::radiation_memory::{ops_per_bit_per_second, solve_thermal_state, SpeciesTable, ThermalState};
use crate::speed_limits::{max_ops_per_second, EnergyBudget};
use crate::Scalar;

/// Mass, volume and particle content of a machine.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComputerSpec<T> {
    /// kg.
    pub mass: T,
    /// m³.
    pub volume: T,
    pub species: SpeciesTable<T>,
}

impl<T: Scalar> ComputerSpec<T> {
    pub fn new(mass: T, volume: T, species: SpeciesTable<T>) -> Result<Self> {
        Ok(Self {
            mass: positive("mass", mass)?,
            volume: positive("volume", volume)?,
            species,
        })
    }

    /// 1 kg in 1 liter, photons only.
    pub fn ultimate_laptop() -> Self {
        Self {
            mass: T::one(),
            volume: T::lit(crate::units::LITER),
            species: SpeciesTable::photon_only(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitsReport<T> {
    pub mass: T,
    pub geometry: GeometrySpec<T>,
    pub energy: T,
    pub ops_per_second: T,
    pub memory: ThermalState<T>,
    pub ops_per_bit_per_second: T,
    pub parallelism: ParallelismReport<T>,
    pub max_error_rate: T,
    /// Printed-formula flux at the memory temperature.
    pub bit_flux_formula: T,
    /// The formula value scaled to the quoted number.
    pub bit_flux_paper: T,
    /// W through the cube surface.
    pub throughput: T,
    pub schwarzschild_radius: T,
}

pub fn compute_limits<T: Scalar>(spec: &ComputerSpec<T>, k: &PhysicalConstants<T>) -> Result<LimitsReport<T>> {
    let geometry = GeometrySpec::cube(spec.volume)?;
    let budget = EnergyBudget::rest_mass(positive("mass", spec.mass)?, k)?;
    let energy = budget.joules();
    let memory = solve_thermal_state(energy, spec.volume, &spec.species, k)?;
    let radius = geometry.half_size;
    let flux = blackbody_bit_flux(memory.temperature, k)?;

    Ok(LimitsReport {
        mass: spec.mass,
        geometry,
        energy,
        ops_per_second: max_ops_per_second(budget, k),
        ops_per_bit_per_second: ops_per_bit_per_second(energy, memory.entropy, k)?,
        parallelism: parallelism_report(radius, energy, memory.entropy, spec.mass, k)?,
        max_error_rate: max_error_rate(energy, memory.entropy, radius, k)?,
        bit_flux_formula: flux,
        bit_flux_paper: flux * T::lit(PRINTED_FLUX_FACTOR),
        throughput: energy_throughput(memory.temperature, geometry.surface_area, k)?,
        schwarzschild_radius: schwarzschild_radius(spec.mass, k)?,
        memory,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::default_constants;
    use crate::scalar::rel_diff;

    #[test]
    fn ultimate_laptop_report() {
        let k = default_constants();
        let r = compute_limits(&ComputerSpec::<f64>::ultimate_laptop(), &k).unwrap();
        assert!(rel_diff(r.ops_per_second, 5.4258e50) < 5e-4);
        assert!(rel_diff(r.memory.bits, 2.13e31) < 1e-2);
        assert!(rel_diff(r.throughput, 4.04e26) < 1e-2);
        assert!(rel_diff(r.bit_flux_paper, 7.195e42) < 1e-2);
        assert!(!r.parallelism.is_black_hole_regime);
    }

    #[test]
    fn tiny_volume_is_flagged() {
        let k = default_constants();
        let spec = ComputerSpec::new(1.0, 1e-84, SpeciesTable::photon_only()).unwrap();
        let r = compute_limits(&spec, &k).unwrap();
        assert!(r.parallelism.is_black_hole_regime);
    }

    #[test]
    fn spec_validation() {
        assert!(ComputerSpec::new(-1.0, 1.0, SpeciesTable::photon_only()).is_err());
        assert!(ComputerSpec::new(1.0, 0.0, SpeciesTable::photon_only()).is_err());
    }
}
