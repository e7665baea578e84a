//! Size limits parallelism.
//!
//! Compares the light-crossing time of the machine with the mean bit-flip
//! time, checks the Bekenstein inequality, budgets the thermal cost of
//! rejecting errors, and sweeps a fixed mass through decreasing radii.
//!
//! Geometry is a cube: `R` is half the side, so one liter has `R = 0.05 m` and
//! a surface of `6 V^⅔ = 0.06 m²`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blackhole::schwarzschild_radius;
use crate::constants::PhysicalConstants;
use crate::error::{positive, LimitsError, Result};
use crate::numeric::logspace;
use crate::radiation_memory::{ops_per_bit_per_second, solve_thermal_state, SpeciesTable};
use crate::Scalar;

/// Relative slack when deciding a radius sits at or inside the horizon.
///
/// Covers radii quoted to four significant figures (1.485e-27 m for 1 kg).
pub const HORIZON_RTOL: f64 = 5e-4;

/// The reference printed bit flux is this multiple of its printed formula.
pub const PRINTED_FLUX_FACTOR: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometrySpec<T> {
    /// Half the cube side, m.
    pub half_size: T,
    /// m².
    pub surface_area: T,
    /// m³.
    pub volume: T,
}

impl<T: Scalar> GeometrySpec<T> {
    pub fn cube(volume: T) -> Result<Self> {
        positive("volume", volume)?;
        let side = volume.cbrt();
        Ok(Self {
            half_size: side / T::lit(2.0),
            surface_area: T::lit(6.0) * side * side,
            volume,
        })
    }

    /// Cube whose half-side is `half_size`.
    pub fn cube_from_half_size(half_size: T) -> Result<Self> {
        positive("radius", half_size)?;
        let side = T::lit(2.0) * half_size;
        Ok(Self {
            half_size,
            surface_area: T::lit(6.0) * side * side,
            volume: side * side * side,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParallelismReport<T> {
    pub t_com: T,
    pub t_flip: T,
    pub ratio: T,
    pub bekenstein_ratio: T,
    pub is_black_hole_regime: bool,
    /// `bekenstein_ratio ≥ 1/2π` up to 1e-9.
    pub satisfies_bekenstein: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorBudget<T> {
    /// Printed-formula flux, bits m⁻² s⁻¹.
    pub bit_flux_per_area: T,
    /// W.
    pub throughput: T,
    /// Errors per operation.
    pub max_error_rate: T,
    /// J per erased bit at the environment temperature.
    pub landauer_cost_per_bit: T,
}

/// `2R/c`.
pub fn t_com<T: Scalar>(radius: T, k: &PhysicalConstants<T>) -> Result<T> {
    Ok(T::lit(2.0) * positive("radius", radius)? / k.c)
}

/// `πħS/(2 ln2 k_B E)`, the reciprocal of ops per bit per second.
pub fn t_flip<T: Scalar>(energy: T, entropy: T, k: &PhysicalConstants<T>) -> Result<T> {
    positive("energy", energy)?;
    positive("entropy", entropy)?;
    Ok(T::PI() * k.hbar * entropy / (T::lit(2.0) * T::LN_2() * k.k_b * energy))
}

/// `t_com/t_flip = 4 ln2 k_B R E/(πħcS)`, the degree of parallelization.
pub fn parallelization_ratio<T: Scalar>(radius: T, energy: T, entropy: T, k: &PhysicalConstants<T>) -> Result<T> {
    positive("radius", radius)?;
    positive("energy", energy)?;
    positive("entropy", entropy)?;
    Ok(T::lit(4.0) * T::LN_2() * k.k_b * radius * energy / (T::PI() * k.hbar_c() * entropy))
}

/// `k_B R E/(ħcS)`; ordinary matter keeps this above `1/2π`.
pub fn bekenstein_ratio<T: Scalar>(radius: T, energy: T, entropy: T, k: &PhysicalConstants<T>) -> Result<T> {
    positive("radius", radius)?;
    positive("energy", energy)?;
    positive("entropy", entropy)?;
    Ok(k.k_b * radius * energy / (k.hbar_c() * entropy))
}

/// `1/2π`, attained by black holes.
pub fn bekenstein_bound<T: Scalar>() -> T {
    T::one() / (T::lit(2.0) * T::PI())
}

/// `π² k_B³ T³/(60 ln2 ħ³ c²)`, bits per m² per second, as printed.
///
/// At 5.87e8 K this is 1.198e42; the quoted 7.195e42 is
/// [`PRINTED_FLUX_FACTOR`] times larger. Both are carried in reports.
pub fn blackbody_bit_flux<T: Scalar>(temperature: T, k: &PhysicalConstants<T>) -> Result<T> {
    positive("temperature", temperature)?;
    let x = k.k_b * temperature / k.hbar_c();
    Ok(T::PI() * T::PI() * x * x * x * k.c / (T::lit(60.0) * T::LN_2()))
}

/// `σ T⁴ A`, W.
pub fn energy_throughput<T: Scalar>(temperature: T, area: T, k: &PhysicalConstants<T>) -> Result<T> {
    positive("temperature", temperature)?;
    positive("area", area)?;
    Ok(k.stefan_boltzmann() * temperature.powi(4) * area)
}

/// `2 t_flip/t_com`, the inverse of the degree of parallelization (times two).
pub fn max_error_rate<T: Scalar>(energy: T, entropy: T, radius: T, k: &PhysicalConstants<T>) -> Result<T> {
    Ok(T::lit(2.0) * t_flip(energy, entropy, k)? / t_com(radius, k)?)
}

/// `k_B T ln 2` per erased bit.
pub fn landauer_cost<T: Scalar>(environment_temperature: T, k: &PhysicalConstants<T>) -> Result<T> {
    Ok(k.k_b * positive("environment temperature", environment_temperature)? * T::LN_2())
}

pub fn parallelism_report<T: Scalar>(
    radius: T,
    energy: T,
    entropy: T,
    mass: T,
    k: &PhysicalConstants<T>,
) -> Result<ParallelismReport<T>> {
    let bek = bekenstein_ratio(radius, energy, entropy, k)?;
    Ok(ParallelismReport {
        t_com: t_com(radius, k)?,
        t_flip: t_flip(energy, entropy, k)?,
        ratio: parallelization_ratio(radius, energy, entropy, k)?,
        bekenstein_ratio: bek,
        is_black_hole_regime: within_horizon(radius, schwarzschild_radius(mass, k)?),
        satisfies_bekenstein: bek >= bekenstein_bound::<T>() - T::lit(1e-9),
    })
}

pub fn error_budget<T: Scalar>(
    memory_temperature: T,
    area: T,
    energy: T,
    entropy: T,
    radius: T,
    environment_temperature: T,
    k: &PhysicalConstants<T>,
) -> Result<ErrorBudget<T>> {
    Ok(ErrorBudget {
        bit_flux_per_area: blackbody_bit_flux(memory_temperature, k)?,
        throughput: energy_throughput(memory_temperature, area, k)?,
        max_error_rate: max_error_rate(energy, entropy, radius, k)?,
        landauer_cost_per_bit: landauer_cost(environment_temperature, k)?,
    })
}

/// `radius ≤ R_S (1 + HORIZON_RTOL)`.
pub fn within_horizon<T: Scalar>(radius: T, schwarzschild: T) -> bool {
    radius <= schwarzschild * (T::one() + T::lit(HORIZON_RTOL))
}

/// One radius of a compression sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow<T> {
    pub radius: T,
    pub temperature: T,
    pub entropy: T,
    pub bits: T,
    pub ops_per_bit_per_second: T,
    pub ratio: T,
    pub bekenstein: T,
    pub black_hole: bool,
}

/// Exact CSV header for sweep output.
pub const SWEEP_CSV_HEADER: [&str; 8] = [
    "R_m",
    "T_K",
    "S_JperK",
    "bits",
    "ops_per_bit_s",
    "ratio",
    "bekenstein",
    "black_hole",
];

/// Compresses `mass` from `r_start` down to `r_end` over `points` log-spaced radii.
///
/// Rows come back ordered by decreasing radius.
pub fn compression_sweep<T: Scalar>(
    mass: T,
    r_start: T,
    r_end: T,
    points: usize,
    table: &SpeciesTable<T>,
    k: &PhysicalConstants<T>,
) -> Result<Vec<SweepRow<T>>> {
    positive("mass", mass)?;
    positive("end radius", r_end)?;
    positive("start radius", r_start)?;
    if r_start <= r_end {
        return Err(LimitsError::InvalidArgument(format!(
            "sweep must compress: start radius {:e} m is not above end radius {:e} m",
            r_start.as_f64(),
            r_end.as_f64()
        )));
    }
    if points < 2 {
        return Err(LimitsError::InvalidArgument("a sweep needs at least 2 points".into()));
    }
    let energy = mass * k.c * k.c;
    let r_s = schwarzschild_radius(mass, k)?;

    logspace(r_start, r_end, points)
        .into_par_iter()
        .map(|radius| {
            let geom = GeometrySpec::cube_from_half_size(radius)?;
            let state = solve_thermal_state(energy, geom.volume, table, k)?;
            Ok(SweepRow {
                radius,
                temperature: state.temperature,
                entropy: state.entropy,
                bits: state.bits,
                ops_per_bit_per_second: ops_per_bit_per_second(energy, state.entropy, k)?,
                ratio: parallelization_ratio(radius, energy, state.entropy, k)?,
                bekenstein: bekenstein_ratio(radius, energy, state.entropy, k)?,
                black_hole: within_horizon(radius, r_s),
            })
        })
        .collect()
}
