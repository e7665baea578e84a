//! Dense simulation of small quantum systems in natural units (ħ = 1).
//!
//! Used to check the orthogonalization-time bounds directly: the time for a
//! state to evolve to an orthogonal one is never below `π/2⟨H⟩` (mean energy
//! above the ground state) nor `π/2ΔH` (energy spread), and the two-level NOT
//! construction meets both with equality.
//!
//! Times convert to seconds with [`natural_time_to_seconds`].

// `!(x > 0)` is deliberate: NaN must fail the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod ensemble;
mod gates;
mod orth;

pub use ensemble::{
    random_hamiltonian, random_state, run_ensemble, verify, EnsembleConfig, EnsembleSummary, NotAttainment, TrialKind,
    TrialOutcome, VerificationSummary,
};
pub use gates::{
    boolean_embeddings_check, cnot_unitary, hamiltonian_for_involution, not_hamiltonian, toffoli_unitary,
    EmbeddingReport, TruthRow,
};
pub use orth::{orthogonalization_time, orthogonalization_time_default, OrthogonalizationResult, DEFAULT_T_MAX_FACTOR};

use nalgebra::{DMatrix, DVector, RealField};
use num_complex::Complex;

use crate::error::{LimitsError, Result};

/// Real scalar for the simulator: nalgebra's `RealField` (f32 or f64).
pub trait Real: RealField + Copy {}
impl<R: RealField + Copy> Real for R {}

pub(crate) fn real<R: Real>(x: f64) -> R {
    nalgebra::convert(x)
}

pub(crate) fn to_f64<R: Real>(x: R) -> f64 {
    x.to_subset().unwrap_or(f64::NAN)
}

pub(crate) fn cabs<R: Real>(z: &Complex<R>) -> R {
    z.re.hypot(z.im)
}

/// `e^{iθ}`.
pub(crate) fn cis<R: Real>(theta: R) -> Complex<R> {
    Complex::new(theta.cos(), theta.sin())
}

/// Largest allowed state dimension.
pub const MAX_DIM: usize = 256;

const NORM_TOL: f64 = 1e-10;
const HERMITIAN_TOL: f64 = 1e-12;
const UNITARY_TOL: f64 = 1e-10;

/// Normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<R: Real> {
    amplitudes: DVector<Complex<R>>,
}

impl<R: Real> StateVector<R> {
    /// Wraps amplitudes that are already normalized to within 1e-10.
    pub fn new(amplitudes: Vec<Complex<R>>) -> Result<Self> {
        let v = DVector::from_vec(amplitudes);
        check_dim(v.len())?;
        let norm = to_f64(v.norm());
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(LimitsError::InvalidArgument(format!(
                "state norm is {norm}, expected 1"
            )));
        }
        Ok(Self { amplitudes: v })
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(amplitudes: Vec<Complex<R>>) -> Result<Self> {
        let v = DVector::from_vec(amplitudes);
        check_dim(v.len())?;
        let norm = v.norm();
        if norm <= R::zero() || !norm.is_finite() {
            return Err(LimitsError::InvalidArgument(
                "cannot normalize a zero or non-finite vector".into(),
            ));
        }
        Ok(Self {
            amplitudes: v.unscale(norm),
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(LimitsError::InvalidArgument(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut v = DVector::zeros(dim);
        v[index] = Complex::new(R::one(), R::zero());
        Ok(Self { amplitudes: v })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex<R>> {
        &self.amplitudes
    }

    pub fn norm(&self) -> R {
        self.amplitudes.norm()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex<R> {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// `|⟨self|other⟩|`.
    pub fn overlap(&self, other: &Self) -> R {
        cabs(&self.inner(other))
    }

    pub(crate) fn from_vector_unchecked(amplitudes: DVector<Complex<R>>) -> Self {
        Self { amplitudes }
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(LimitsError::InvalidArgument(format!(
            "state dimension must be in 1..={MAX_DIM}, got {dim}"
        )))
    } else {
        Ok(())
    }
}

/// Hermitian matrix in energy units with ħ = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix<R: Real> {
    entries: DMatrix<Complex<R>>,
}

/// Eigenvalues in ascending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct Spectrum<R: Real> {
    pub energies: Vec<R>,
    pub vectors: DMatrix<Complex<R>>,
}

impl<R: Real> Spectrum<R> {
    pub fn ground_energy(&self) -> R {
        self.energies[0]
    }

    /// `|⟨v_k|ψ⟩|²` for each eigenvector.
    pub fn populations(&self, psi: &StateVector<R>) -> Vec<R> {
        let c = self.vectors.ad_mul(&psi.amplitudes);
        c.iter().map(|z| z.norm_sqr()).collect()
    }
}

impl<R: Real> HamiltonianMatrix<R> {
    /// Accepts a square matrix with `max |H − H†| ≤ 1e-12` (relative to its
    /// largest entry when that exceeds one).
    pub fn new(entries: DMatrix<Complex<R>>) -> Result<Self> {
        if !entries.is_square() {
            return Err(LimitsError::InvalidArgument("Hamiltonian must be square".into()));
        }
        check_dim(entries.nrows())?;
        let scale = entries.iter().fold(R::one(), |acc, z| acc.max(cabs(z)));
        let skew = (&entries - entries.adjoint())
            .iter()
            .fold(R::zero(), |acc, z| acc.max(cabs(z)));
        if to_f64(skew) > HERMITIAN_TOL * to_f64(scale) {
            return Err(LimitsError::InvalidArgument(format!(
                "matrix is not Hermitian: max |H - H†| = {:e}",
                to_f64(skew)
            )));
        }
        // Symmetrize away round-off so the eigensolver sees an exact Hermitian matrix.
        let half: R = real(0.5);
        let entries = (&entries + entries.adjoint()).scale(half);
        Ok(Self { entries })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(DMatrix::zeros(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex<R>> {
        &self.entries
    }

    pub fn spectrum(&self) -> Spectrum<R> {
        let eig = self.entries.clone().symmetric_eigen();
        let n = self.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            eig.eigenvalues[a]
                .partial_cmp(&eig.eigenvalues[b])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let energies = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
        Spectrum { energies, vectors }
    }

    /// `⟨ψ|H|ψ⟩ − E_0`, mean energy above the ground state.
    pub fn mean_energy(&self, psi: &StateVector<R>) -> Result<R> {
        let spec = self.spectrum();
        self.check_state(psi)?;
        Ok(moments(&spec, psi).0)
    }

    /// `sqrt(⟨H²⟩ − ⟨H⟩²)`.
    pub fn energy_spread(&self, psi: &StateVector<R>) -> Result<R> {
        let spec = self.spectrum();
        self.check_state(psi)?;
        Ok(moments(&spec, psi).1)
    }

    /// Raw expectation `⟨ψ|H|ψ⟩` without the ground-state shift.
    pub fn expectation(&self, psi: &StateVector<R>) -> Result<R> {
        self.check_state(psi)?;
        Ok(psi.amplitudes.dotc(&(&self.entries * &psi.amplitudes)).re)
    }

    fn check_state(&self, psi: &StateVector<R>) -> Result<()> {
        if psi.dim() != self.dim() {
            Err(LimitsError::DimensionMismatch {
                expected: self.dim(),
                actual: psi.dim(),
            })
        } else {
            Ok(())
        }
    }
}

/// Ground-shifted mean energy and spread of `psi` in `spec`.
pub(crate) fn moments<R: Real>(spec: &Spectrum<R>, psi: &StateVector<R>) -> (R, R) {
    let pops = spec.populations(psi);
    let e0 = spec.ground_energy();
    let total = pops.iter().fold(R::zero(), |a, &p| a + p);
    let mean = pops
        .iter()
        .zip(&spec.energies)
        .fold(R::zero(), |a, (&p, &e)| a + p * (e - e0))
        / total;
    let var = pops.iter().zip(&spec.energies).fold(R::zero(), |a, (&p, &e)| {
        let d = e - e0 - mean;
        a + p * d * d
    }) / total;
    (mean, var.sqrt())
}

/// Unitary matrix (checked to 1e-10).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix<R: Real> {
    entries: DMatrix<Complex<R>>,
}

impl<R: Real> UnitaryMatrix<R> {
    pub fn new(entries: DMatrix<Complex<R>>) -> Result<Self> {
        if !entries.is_square() {
            return Err(LimitsError::InvalidArgument("unitary must be square".into()));
        }
        check_dim(entries.nrows())?;
        let n = entries.nrows();
        let defect = (entries.adjoint() * &entries - DMatrix::<Complex<R>>::identity(n, n))
            .iter()
            .fold(R::zero(), |acc, z| acc.max(cabs(z)));
        if to_f64(defect) > UNITARY_TOL {
            return Err(LimitsError::InvalidArgument(format!(
                "matrix is not unitary: max |U†U - I| = {:e}",
                to_f64(defect)
            )));
        }
        Ok(Self { entries })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex<R>> {
        &self.entries
    }

    pub fn apply(&self, psi: &StateVector<R>) -> Result<StateVector<R>> {
        if psi.dim() != self.dim() {
            return Err(LimitsError::DimensionMismatch {
                expected: self.dim(),
                actual: psi.dim(),
            });
        }
        Ok(StateVector::from_vector_unchecked(&self.entries * &psi.amplitudes))
    }

    /// Index `j` if `U|i⟩ = |j⟩` exactly (one entry equal to 1, the rest 0).
    pub fn basis_image(&self, index: usize) -> Option<usize> {
        let col = self.entries.column(index);
        let one = Complex::new(R::one(), R::zero());
        let zero = Complex::new(R::zero(), R::zero());
        let mut hit = None;
        for (j, &z) in col.iter().enumerate() {
            if z == one {
                if hit.is_some() {
                    return None;
                }
                hit = Some(j);
            } else if z != zero {
                return None;
            }
        }
        hit
    }
}

/// `e^{−iHt} ψ` via the eigendecomposition of `H`.
pub fn evolve<R: Real>(h: &HamiltonianMatrix<R>, psi: &StateVector<R>, t: R) -> Result<StateVector<R>> {
    if psi.dim() != h.dim() {
        return Err(LimitsError::DimensionMismatch {
            expected: h.dim(),
            actual: psi.dim(),
        });
    }
    if !t.is_finite() {
        return Err(LimitsError::InvalidArgument("evolution time must be finite".into()));
    }
    let spec = h.spectrum();
    Ok(evolve_in(&spec, psi, t))
}

pub(crate) fn evolve_in<R: Real>(spec: &Spectrum<R>, psi: &StateVector<R>, t: R) -> StateVector<R> {
    let mut c = spec.vectors.ad_mul(&psi.amplitudes);
    for (ck, &e) in c.iter_mut().zip(&spec.energies) {
        *ck *= cis(-e * t);
    }
    StateVector::from_vector_unchecked(&spec.vectors * c)
}

/// Converts a natural-unit time to seconds, given the energy unit in joules.
pub fn natural_time_to_seconds(t: f64, energy_unit_joules: f64, hbar: f64) -> f64 {
    t * hbar / energy_unit_joules
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rel_diff;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    /// Independent oracle: Taylor series with scaling and squaring.
    pub(crate) fn expm_taylor(a: &DMatrix<Complex<f64>>) -> DMatrix<Complex<f64>> {
        let n = a.nrows();
        let norm = a.iter().map(|z| z.norm()).sum::<f64>();
        let s = (norm.max(1.0).log2().ceil() as i32 + 4).max(0);
        let scaled = a.unscale(2f64.powi(s));
        let mut term = DMatrix::<Complex<f64>>::identity(n, n);
        let mut sum = term.clone();
        for k in 1..40 {
            term = &term * &scaled / c(k as f64, 0.0);
            sum += &term;
        }
        for _ in 0..s {
            sum = &sum * &sum;
        }
        sum
    }

    fn sample_h() -> HamiltonianMatrix<f64> {
        HamiltonianMatrix::new(DMatrix::from_row_slice(
            3,
            3,
            &[
                c(1.0, 0.0),
                c(0.3, 0.2),
                c(-0.1, 0.5),
                c(0.3, -0.2),
                c(-0.4, 0.0),
                c(0.7, 0.1),
                c(-0.1, -0.5),
                c(0.7, -0.1),
                c(2.0, 0.0),
            ],
        ))
        .unwrap()
    }

    #[test]
    fn evolve_zero_time_is_identity() {
        let h = sample_h();
        let psi = StateVector::normalized(vec![c(1.0, 0.0), c(0.0, 1.0), c(0.5, 0.5)]).unwrap();
        let out = evolve(&h, &psi, 0.0).unwrap();
        assert!((out.amplitudes() - psi.amplitudes()).norm() < 1e-12);
    }

    #[test]
    fn stationary_state_keeps_overlap() {
        let h = HamiltonianMatrix::new(DMatrix::from_diagonal(&DVector::from_vec(vec![
            c(0.0, 0.0),
            c(1.7, 0.0),
        ])))
        .unwrap();
        let psi = StateVector::basis(2, 1).unwrap();
        let out = evolve(&h, &psi, 3.3).unwrap();
        assert!((psi.overlap(&out) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn group_property_and_unitarity() {
        let h = sample_h();
        let psi = StateVector::normalized(vec![c(0.2, 0.1), c(-0.4, 0.9), c(0.3, 0.0)]).unwrap();
        let (t1, t2) = (0.37, 1.91);
        let direct = evolve(&h, &psi, t1 + t2).unwrap();
        let stepped = evolve(&h, &evolve(&h, &psi, t1).unwrap(), t2).unwrap();
        assert!((direct.amplitudes() - stepped.amplitudes()).norm() < 1e-10);
        assert!((direct.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn matches_taylor_oracle() {
        let h = sample_h();
        let psi = StateVector::normalized(vec![c(0.2, 0.1), c(-0.4, 0.9), c(0.3, 0.0)]).unwrap();
        for t in [0.1, 1.0, 7.5] {
            let u = expm_taylor(&(h.entries() * c(0.0, -t)));
            let oracle = &u * psi.amplitudes();
            let out = evolve(&h, &psi, t).unwrap();
            assert!((out.amplitudes() - oracle).norm() < 1e-10, "t = {t}");
        }
    }

    #[test]
    fn rejects_non_hermitian_and_bad_dims() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(HamiltonianMatrix::new(m).is_err());
        assert!(HamiltonianMatrix::<f64>::new(DMatrix::zeros(2, 3)).is_err());
        let h = sample_h();
        let psi = StateVector::basis(2, 0).unwrap();
        assert!(matches!(
            evolve(&h, &psi, 1.0),
            Err(LimitsError::DimensionMismatch { .. })
        ));
        assert!(StateVector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).is_err());
        assert!(StateVector::<f64>::normalized(vec![c(0.0, 0.0)]).is_err());
        assert!(StateVector::<f64>::basis(2, 2).is_err());
        assert!(StateVector::<f64>::basis(MAX_DIM + 1, 0).is_err());
    }

    #[test]
    fn spectrum_is_sorted_and_diagonalizes() {
        let h = sample_h();
        let s = h.spectrum();
        assert!(s.energies.windows(2).all(|w| w[0] <= w[1]));
        let d = s.vectors.adjoint() * h.entries() * &s.vectors;
        for i in 0..3 {
            assert!((d[(i, i)].re - s.energies[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn moments_against_direct_expectations() {
        let h = sample_h();
        let psi = StateVector::normalized(vec![c(0.2, 0.1), c(-0.4, 0.9), c(0.3, 0.0)]).unwrap();
        let e0 = h.spectrum().ground_energy();
        let mean = h.mean_energy(&psi).unwrap();
        let raw = h.expectation(&psi).unwrap();
        assert!((mean - (raw - e0)).abs() < 1e-12);
        let h2 = h.entries() * h.entries();
        let raw2 = psi.amplitudes().dotc(&(&h2 * psi.amplitudes())).re;
        let spread = h.energy_spread(&psi).unwrap();
        assert!(rel_diff(spread, (raw2 - raw * raw).sqrt()) < 1e-10);
    }

    #[test]
    fn works_in_single_precision() {
        let h = HamiltonianMatrix::<f32>::new(DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex::new(0.5f32, 0.0),
                Complex::new(-0.5, 0.0),
                Complex::new(-0.5, 0.0),
                Complex::new(0.5, 0.0),
            ],
        ))
        .unwrap();
        let psi = StateVector::<f32>::basis(2, 0).unwrap();
        let out = evolve(&h, &psi, std::f32::consts::PI).unwrap();
        assert!((out.amplitudes()[1].norm() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn seconds_conversion() {
        let hbar = 1.0545e-34;
        assert!(
            rel_diff(
                natural_time_to_seconds(std::f64::consts::PI / 2.0, hbar, hbar),
                std::f64::consts::FRAC_PI_2
            ) < 1e-15
        );
    }
}
