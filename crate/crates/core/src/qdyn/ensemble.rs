//! Seeded random-Hamiltonian ensemble for checking the orthogonalization bounds.
//!
//! Seed protocol: trial `i` draws from `ChaCha8Rng::seed_from_u64(seed)` with
//! stream `i`, so results do not depend on thread scheduling. Each trial draws
//! the dimension uniformly from `2..=max_dim`, then a GUE Hamiltonian
//! `(A + A†)/2` with `A_jk = (x + iy)/√2`, `x, y ~ N(0, 1)`, then a state.
//! The state kind cycles with `i mod 3`:
//!
//! * `Uniform`: normalized complex Gaussian amplitudes.
//! * `Pair`: equal weights on two random eigenvectors with random phases.
//!   Orthogonalizes at `π/ΔE` and meets the spread bound with equality.
//! * `Triple`: three eigenvectors with weights chosen so that the overlap
//!   vanishes at a random time. Falls back to `Pair` when `d = 2`.
//!
//! Uniform states almost never reach exact orthogonality, so the other two
//! kinds keep the bound check from passing vacuously.

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use super::{
    boolean_embeddings_check, not_hamiltonian, orthogonalization_time, orthogonalization_time_default, EmbeddingReport,
    HamiltonianMatrix, OrthogonalizationResult, StateVector, DEFAULT_T_MAX_FACTOR,
};
use crate::error::{LimitsError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleConfig {
    pub trials: usize,
    pub max_dim: usize,
    pub seed: u64,
    /// Overlap accepted as orthogonal.
    pub overlap_tol: f64,
    /// Relative slack on the bound check.
    pub bound_slack: f64,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        Self {
            trials: 500,
            max_dim: 8,
            seed: 0,
            overlap_tol: 1e-6,
            bound_slack: 1e-9,
        }
    }
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(LimitsError::InvalidArgument("trials must be at least 1".into()));
        }
        if !(2..=8).contains(&self.max_dim) {
            return Err(LimitsError::InvalidArgument(format!(
                "max_dim must be in 2..=8, got {}",
                self.max_dim
            )));
        }
        if !(self.overlap_tol > 0.0 && self.overlap_tol <= 1e-3) {
            return Err(LimitsError::Domain {
                quantity: "overlap_tol",
                requirement: "in (0, 1e-3]",
                value: self.overlap_tol,
            });
        }
        if !(0.0..1.0).contains(&self.bound_slack) {
            return Err(LimitsError::Domain {
                quantity: "bound_slack",
                requirement: "in [0, 1)",
                value: self.bound_slack,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialKind {
    Uniform,
    Pair,
    Triple,
}

impl TrialKind {
    fn for_index(i: usize) -> Self {
        match i % 3 {
            0 => Self::Uniform,
            1 => Self::Pair,
            _ => Self::Triple,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub index: usize,
    pub dim: usize,
    pub kind: TrialKind,
    pub result: OrthogonalizationResult<f64>,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSummary {
    pub config: EnsembleConfig,
    pub trials: usize,
    pub found: usize,
    pub violations: usize,
    /// Smallest `t_orth / max(bounds)` among found trials.
    pub min_ratio: Option<f64>,
    pub outcomes: Vec<TrialOutcome>,
}

fn gaussian_complex(rng: &mut ChaCha8Rng) -> Complex<f64> {
    let x: f64 = rng.sample(StandardNormal);
    let y: f64 = rng.sample(StandardNormal);
    Complex::new(x, y) * std::f64::consts::FRAC_1_SQRT_2
}

/// GUE sample of dimension `d`.
pub fn random_hamiltonian(rng: &mut ChaCha8Rng, d: usize) -> Result<HamiltonianMatrix<f64>> {
    let a = DMatrix::from_fn(d, d, |_, _| gaussian_complex(rng));
    HamiltonianMatrix::new((&a + a.adjoint()) * Complex::new(0.5, 0.0))
}

/// Haar-uniform pure state of dimension `d`.
pub fn random_state(rng: &mut ChaCha8Rng, d: usize) -> Result<StateVector<f64>> {
    StateVector::normalized((0..d).map(|_| gaussian_complex(rng)).collect())
}

fn phase(rng: &mut ChaCha8Rng) -> Complex<f64> {
    Complex::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

fn distinct(rng: &mut ChaCha8Rng, d: usize, k: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, d, k).into_vec()
}

fn superpose(
    vectors: &DMatrix<Complex<f64>>,
    picks: &[(usize, f64)],
    rng: &mut ChaCha8Rng,
) -> Result<StateVector<f64>> {
    let mut amps = vec![Complex::new(0.0, 0.0); vectors.nrows()];
    for &(k, w) in picks {
        let ph = phase(rng) * w.sqrt();
        for (a, v) in amps.iter_mut().zip(vectors.column(k).iter()) {
            *a += v * ph;
        }
    }
    StateVector::normalized(amps)
}

fn pair_state(h: &HamiltonianMatrix<f64>, rng: &mut ChaCha8Rng) -> Result<StateVector<f64>> {
    let spec = h.spectrum();
    let ix = distinct(rng, h.dim(), 2);
    superpose(&spec.vectors, &[(ix[0], 0.5), (ix[1], 0.5)], rng)
}

/// Weights `p` on three levels with `Σ p_j e^{−i E_j t*} = 0` for a random `t*`.
fn triple_weights(e: [f64; 3], rng: &mut ChaCha8Rng) -> Option<[f64; 3]> {
    let width = e.iter().cloned().fold(f64::MIN, f64::max) - e.iter().cloned().fold(f64::MAX, f64::min);
    if !(width > 0.0) {
        return None;
    }
    for _ in 0..64 {
        let t = rng.random_range(0.0..(2.0 * std::f64::consts::TAU / width));
        let z: Vec<Complex<f64>> = e.iter().map(|&ej| Complex::from_polar(1.0, -ej * t)).collect();
        // p0 (z0 − z2) + p1 (z1 − z2) = −z2
        let (a, b, r) = (z[0] - z[2], z[1] - z[2], -z[2]);
        let det = a.re * b.im - a.im * b.re;
        if det.abs() < 1e-9 {
            continue;
        }
        let p0 = (r.re * b.im - r.im * b.re) / det;
        let p1 = (a.re * r.im - a.im * r.re) / det;
        let p = [p0, p1, 1.0 - p0 - p1];
        if p.iter().all(|&x| x > 1e-3) {
            return Some(p);
        }
    }
    None
}

fn triple_state(h: &HamiltonianMatrix<f64>, rng: &mut ChaCha8Rng) -> Result<StateVector<f64>> {
    if h.dim() < 3 {
        return pair_state(h, rng);
    }
    let spec = h.spectrum();
    let ix = distinct(rng, h.dim(), 3);
    match triple_weights([spec.energies[ix[0]], spec.energies[ix[1]], spec.energies[ix[2]]], rng) {
        Some(p) => superpose(&spec.vectors, &[(ix[0], p[0]), (ix[1], p[1]), (ix[2], p[2])], rng),
        None => pair_state(h, rng),
    }
}

fn run_trial(cfg: &EnsembleConfig, index: usize) -> Result<TrialOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let dim = rng.random_range(2..=cfg.max_dim);
    let h = random_hamiltonian(&mut rng, dim)?;
    let kind = TrialKind::for_index(index);
    let psi = match kind {
        TrialKind::Uniform => random_state(&mut rng, dim)?,
        TrialKind::Pair => pair_state(&h, &mut rng)?,
        TrialKind::Triple => triple_state(&h, &mut rng)?,
    };
    // Horizon covers both bounds so constructed states fall inside it.
    let slowest = h.mean_energy(&psi)?.min(h.energy_spread(&psi)?);
    let horizon = DEFAULT_T_MAX_FACTOR * std::f64::consts::FRAC_PI_2 / slowest;
    let result = if horizon.is_finite() {
        orthogonalization_time(&h, &psi, horizon, cfg.overlap_tol)?
    } else {
        orthogonalization_time_default(&h, &psi, cfg.overlap_tol)?
    };
    let violation = !result.respects_bounds(cfg.bound_slack);
    Ok(TrialOutcome {
        index,
        dim,
        kind,
        result,
        violation,
    })
}

/// Runs the ensemble in parallel. Output order follows the trial index.
pub fn run_ensemble(cfg: &EnsembleConfig) -> Result<EnsembleSummary> {
    cfg.validate()?;
    let outcomes = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect::<Result<Vec<_>>>()?;
    let found = outcomes.iter().filter(|o| o.result.found).count();
    let violations = outcomes.iter().filter(|o| o.violation).count();
    let min_ratio = outcomes
        .iter()
        .filter_map(|o| o.result.t_orth.map(|t| t / o.result.bound()))
        .reduce(f64::min);
    Ok(EnsembleSummary {
        config: *cfg,
        trials: cfg.trials,
        found,
        violations,
        min_ratio,
        outcomes,
    })
}

/// Two-level NOT construction at unit energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NotAttainment {
    pub t_orth: f64,
    pub ml_bound: f64,
    pub ab_bound: f64,
    /// `max(|t/ml − 1|, |t/ab − 1|)`.
    pub rel_error: f64,
    pub pass: bool,
}

pub const ATTAINMENT_RTOL: f64 = 1e-6;

fn not_attainment(overlap_tol: f64) -> Result<NotAttainment> {
    let h = not_hamiltonian(1.0)?;
    let r = orthogonalization_time_default(&h, &StateVector::basis(2, 0)?, overlap_tol)?;
    let t = r.t_orth.unwrap_or(f64::NAN);
    let rel_error = (t / r.ml_bound - 1.0).abs().max((t / r.ab_bound - 1.0).abs());
    Ok(NotAttainment {
        t_orth: t,
        ml_bound: r.ml_bound,
        ab_bound: r.ab_bound,
        rel_error,
        pass: r.found && rel_error <= ATTAINMENT_RTOL,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationSummary {
    pub ensemble: EnsembleSummary,
    pub not_attainment: NotAttainment,
    pub toffoli: EmbeddingReport,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.ensemble.violations == 0 && self.not_attainment.pass && self.toffoli.all_pass()
    }
}

/// Ensemble, NOT attainment and Toffoli embeddings together.
pub fn verify(cfg: &EnsembleConfig) -> Result<VerificationSummary> {
    Ok(VerificationSummary {
        ensemble: run_ensemble(cfg)?,
        not_attainment: not_attainment(cfg.overlap_tol)?,
        toffoli: boolean_embeddings_check(),
    })
}
