//! Physical limits of computation.
//!
//! Given a machine's mass, volume and particle content this crate computes:
//!
//! * the maximum operation rate `2E/πħ` ([`speed_limits`]),
//! * the maximum memory from the canonical-ensemble entropy of radiation
//!   ([`radiation_memory`]),
//! * the degree of parallelization, Bekenstein ratio and error budget
//!   ([`parallelism_errors`]),
//! * the same quantities at the black-hole limit ([`blackhole`]),
//!
//! and it checks the underlying orthogonalization-time bound by direct
//! simulation of small quantum systems ([`qdyn`]). Worked examples are
//! collected in [`scenarios`].
//!
//! The SI formulas are generic over [`Scalar`]; the aliases at the crate root
//! fix the scalar to `f64`, which is what the magnitudes involved require.

pub mod blackhole;
pub mod constants;
pub mod error;
pub mod limits;
pub mod numeric;
pub mod parallelism_errors;
pub mod qdyn;
pub mod radiation_memory;
pub mod scalar;
pub mod scenarios;
pub mod speed_limits;
pub mod units;

pub use error::{LimitsError, Result};
pub use scalar::Scalar;

pub type Constants = constants::PhysicalConstants<f64>;
pub type Planck = constants::PlanckScales<f64>;
pub type Budget = speed_limits::EnergyBudget<f64>;
pub type Allocation = speed_limits::GateAllocation<f64>;
pub type Species = radiation_memory::ParticleSpecies<f64>;
pub type Table = radiation_memory::SpeciesTable<f64>;
pub type Thermal = radiation_memory::ThermalState<f64>;
pub type Ensemble = radiation_memory::CanonicalEnsemble<f64>;
pub type Geometry = parallelism_errors::GeometrySpec<f64>;
pub type Parallelism = parallelism_errors::ParallelismReport<f64>;
pub type Errors = parallelism_errors::ErrorBudget<f64>;
pub type Row = parallelism_errors::SweepRow<f64>;
pub type BlackHole = blackhole::BlackHoleReport<f64>;
pub type Computer = limits::ComputerSpec<f64>;
pub type Limits = limits::LimitsReport<f64>;
pub type Hamiltonian = qdyn::HamiltonianMatrix<f64>;
pub type State = qdyn::StateVector<f64>;
pub type Unitary = qdyn::UnitaryMatrix<f64>;
pub type Orthogonalization = qdyn::OrthogonalizationResult<f64>;
