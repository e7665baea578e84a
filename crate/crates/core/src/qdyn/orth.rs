//! Earliest time at which `|⟨ψ|ψ(t)⟩|` reaches zero.

use num_complex::Complex;

use super::{cabs, cis, moments, real, to_f64, HamiltonianMatrix, Real, StateVector};
use crate::error::{LimitsError, Result};

/// Default search horizon in units of the mean-energy bound.
pub const DEFAULT_T_MAX_FACTOR: f64 = 50.0;

const MIN_GRID: usize = 10_000;
const MAX_GRID: usize = 20_000_000;
const POINTS_PER_PERIOD: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalizationResult<R: Real> {
    pub found: bool,
    pub t_orth: Option<R>,
    /// `π/2⟨H⟩`, infinite for a ground state.
    pub ml_bound: R,
    /// `π/2ΔH`, infinite for an eigenstate.
    pub ab_bound: R,
    pub mean_energy: R,
    pub energy_spread: R,
    /// `|⟨ψ|ψ(t_orth)⟩|`, when found.
    pub residual_overlap: Option<R>,
}

impl<R: Real> OrthogonalizationResult<R> {
    /// The tighter of the two bounds.
    pub fn bound(&self) -> R {
        self.ml_bound.max(self.ab_bound)
    }

    /// `t_orth ≥ max(bounds)·(1 − rel_slack)`. Vacuous if not found.
    pub fn respects_bounds(&self, rel_slack: R) -> bool {
        match self.t_orth {
            Some(t) => t >= self.bound() * (R::one() - rel_slack),
            None => true,
        }
    }
}

/// Overlap amplitude `f(t) = Σ p_k e^{−i e_k t}` and `g = Re(f̄ f′)`, half the
/// derivative of `|f|²`.
struct Overlap<R: Real> {
    pops: Vec<R>,
    energies: Vec<R>,
}

impl<R: Real> Overlap<R> {
    fn f(&self, t: R) -> Complex<R> {
        self.pops
            .iter()
            .zip(&self.energies)
            .fold(Complex::new(R::zero(), R::zero()), |acc, (&p, &e)| {
                acc + cis(-e * t) * p
            })
    }

    fn g(&self, t: R) -> R {
        let mut f = Complex::new(R::zero(), R::zero());
        let mut df = Complex::new(R::zero(), R::zero());
        for (&p, &e) in self.pops.iter().zip(&self.energies) {
            let ph = cis(-e * t) * p;
            f += ph;
            df += ph * Complex::new(R::zero(), -e);
        }
        (f.conj() * df).re
    }
}

/// Scans for local minima of `|⟨ψ|ψ(t)⟩|` on `(0, t_max]` and returns the first
/// one whose overlap is at most `overlap_tol`.
///
/// Minima are located as upward sign changes of `d|f|²/dt` on a grid with at
/// least 64 points per shortest Bohr period, then refined by bisection. The
/// reported time is the refined minimum, not the earlier time at which the
/// overlap first dips below the tolerance.
pub fn orthogonalization_time<R: Real>(
    h: &HamiltonianMatrix<R>,
    psi: &StateVector<R>,
    t_max: R,
    overlap_tol: R,
) -> Result<OrthogonalizationResult<R>> {
    if psi.dim() != h.dim() {
        return Err(LimitsError::DimensionMismatch {
            expected: h.dim(),
            actual: psi.dim(),
        });
    }
    if !(overlap_tol > R::zero()) || to_f64(overlap_tol) > 1e-3 {
        return Err(LimitsError::Domain {
            quantity: "overlap_tol",
            requirement: "in (0, 1e-3]",
            value: to_f64(overlap_tol),
        });
    }
    if !(t_max > R::zero()) || !t_max.is_finite() {
        return Err(LimitsError::Domain {
            quantity: "t_max",
            requirement: "finite and > 0",
            value: to_f64(t_max),
        });
    }
    let spec = h.spectrum();
    Ok(search(&spec, psi, t_max, overlap_tol))
}

/// Same search with `t_max = 50·π/2⟨H⟩`. A stationary state returns `found = false`.
pub fn orthogonalization_time_default<R: Real>(
    h: &HamiltonianMatrix<R>,
    psi: &StateVector<R>,
    overlap_tol: R,
) -> Result<OrthogonalizationResult<R>> {
    if psi.dim() != h.dim() {
        return Err(LimitsError::DimensionMismatch {
            expected: h.dim(),
            actual: psi.dim(),
        });
    }
    let spec = h.spectrum();
    let (mean, _) = moments(&spec, psi);
    let ml = R::frac_pi_2() / mean;
    if !ml.is_finite() || !(ml > R::zero()) {
        let probe = orthogonalization_time(h, psi, R::one(), overlap_tol)?;
        return Ok(OrthogonalizationResult {
            found: false,
            t_orth: None,
            residual_overlap: None,
            ..probe
        });
    }
    orthogonalization_time(h, psi, ml * real(DEFAULT_T_MAX_FACTOR), overlap_tol)
}

fn search<R: Real>(spec: &super::Spectrum<R>, psi: &StateVector<R>, t_max: R, tol: R) -> OrthogonalizationResult<R> {
    let (mean, spread) = moments(spec, psi);
    let half_pi = R::frac_pi_2();
    let mut out = OrthogonalizationResult {
        found: false,
        t_orth: None,
        ml_bound: if mean > R::zero() {
            half_pi / mean
        } else {
            R::one() / R::zero()
        },
        ab_bound: if spread > R::zero() {
            half_pi / spread
        } else {
            R::one() / R::zero()
        },
        mean_energy: mean,
        energy_spread: spread,
        residual_overlap: None,
    };

    let e0 = spec.ground_energy();
    let pops = spec.populations(psi);
    let total = pops.iter().fold(R::zero(), |a, &p| a + p);
    let negligible: R = real(1e-300);
    let (mut lo, mut hi) = (R::one() / R::zero(), -R::one());
    let mut ov = Overlap {
        pops: Vec::new(),
        energies: Vec::new(),
    };
    for (&p, &e) in pops.iter().zip(&spec.energies) {
        if p > negligible {
            let e = e - e0;
            lo = lo.min(e);
            hi = hi.max(e);
            ov.pops.push(p / total);
            ov.energies.push(e);
        }
    }
    let width = hi - lo;
    if !(width > R::zero()) {
        return out;
    }

    let periods = to_f64(t_max * width) / std::f64::consts::TAU;
    let n = ((periods * POINTS_PER_PERIOD).ceil() as usize).clamp(MIN_GRID, MAX_GRID);
    let step = t_max / real(n as f64);
    let mut t_prev = step;
    let mut g_prev = ov.g(t_prev);
    for i in 2..=n {
        let t = step * real(i as f64);
        let g = ov.g(t);
        if g_prev < R::zero() && g >= R::zero() {
            let t_min = refine(&ov, t_prev, t);
            let f = cabs(&ov.f(t_min));
            if f <= tol {
                out.found = true;
                out.t_orth = Some(t_min);
                out.residual_overlap = Some(f);
                return out;
            }
        }
        t_prev = t;
        g_prev = g;
    }
    out
}

fn refine<R: Real>(ov: &Overlap<R>, mut a: R, mut b: R) -> R {
    // g(a) < 0 ≤ g(b)
    for _ in 0..200 {
        let m = (a + b) * real(0.5);
        if m <= a || m >= b {
            break;
        }
        if ov.g(m) < R::zero() {
            a = m;
        } else {
            b = m;
        }
    }
    // Take the endpoint with smaller overlap.
    if cabs(&ov.f(a)) <= cabs(&ov.f(b)) {
        a
    } else {
        b
    }
}
