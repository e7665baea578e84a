use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{positive, LimitsError, Result};
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeSum<T> {
    /// J.
    pub energy: T,
    /// J/K.
    pub entropy: T,
    pub modes: u64,
}

/// Continuum black-body energy `(π²/15) V (k_B T)⁴/(ħc)³` for two polarizations.
pub fn continuum_radiation_energy<T: Scalar>(volume: T, temperature: T, k: &PhysicalConstants<T>) -> T {
    let x = k.k_b * temperature / k.hbar_c();
    T::PI() * T::PI() / T::lit(15.0) * volume * k.k_b * temperature * x * x * x
}

/// Brute-force photon gas in a perfectly conducting cube of side `box_side`.
///
/// Modes are `n = (n_x, n_y, n_z)` with `0 ≤ n_i ≤ n_max`, angular frequency
/// `ω = πc|n|/L`. Modes with all indices positive carry two polarizations;
/// modes with exactly one zero index carry one; the rest vanish. Each mode
/// contributes the Bose–Einstein mean energy `ħω/(e^x − 1)` and entropy
/// `k_B[x/(e^x − 1) − ln(1 − e^{−x})]`, `x = ħω/k_B T`.
///
/// Slabs of fixed `n_x` are summed in parallel and combined in index order,
/// so results are identical to a serial sum.
pub fn mode_sum_entropy<T: Scalar>(
    box_side: T,
    temperature: T,
    n_max: u32,
    k: &PhysicalConstants<T>,
) -> Result<ModeSum<T>> {
    positive("box side", box_side)?;
    positive("temperature", temperature)?;
    if n_max == 0 {
        return Err(LimitsError::InvalidArgument("n_max must be at least 1".into()));
    }
    let x_unit = T::PI() * k.hbar_c() / (box_side * k.k_b * temperature);

    let slab = |nx: u32| -> (T, T, u64) {
        let mut e = T::zero();
        let mut s = T::zero();
        let mut count = 0u64;
        for ny in 0..=n_max {
            for nz in 0..=n_max {
                let zeros = u32::from(nx == 0) + u32::from(ny == 0) + u32::from(nz == 0);
                let pol = match zeros {
                    0 => T::lit(2.0),
                    1 => T::one(),
                    _ => continue,
                };
                let n2 = T::from_u64(
                    u64::from(nx) * u64::from(nx) + u64::from(ny) * u64::from(ny) + u64::from(nz) * u64::from(nz),
                )
                .unwrap();
                let x = x_unit * n2.sqrt();
                let occ = x / x.exp_m1();
                e = e + pol * occ;
                s = s + pol * (occ - (-(-x).exp()).ln_1p());
                count += 1;
            }
        }
        (e, s, count)
    };

    let slabs: Vec<(T, T, u64)> = (0..=n_max).into_par_iter().map(slab).collect();
    let (e, s, modes) = slabs
        .into_iter()
        .fold((T::zero(), T::zero(), 0u64), |(ea, sa, ca), (e, s, c)| {
            (ea + e, sa + s, ca + c)
        });

    Ok(ModeSum {
        energy: e * k.k_b * temperature,
        entropy: s * k.k_b,
        modes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::default_constants;
    use crate::scalar::rel_diff;

    fn k() -> PhysicalConstants<f64> {
        default_constants()
    }

    #[test]
    fn single_shell_is_positive() {
        let m = mode_sum_entropy(1e-3, 50.0, 1, &k()).unwrap();
        assert!(m.energy > 0.0 && m.entropy > 0.0);
        assert_eq!(m.modes, 4);
    }

    #[test]
    fn converges_to_continuum() {
        // x_min = πħc/(L k_B T) ≈ 0.144, cutoff x ≈ 29 at n_max = 200.
        let (l, t) = (1e-3, 50.0);
        let m = mode_sum_entropy(l, t, 200, &k()).unwrap();
        let e_c = continuum_radiation_energy(l * l * l, t, &k());
        assert!(rel_diff(m.energy, e_c) < 1e-2, "{} vs {}", m.energy, e_c);
        assert!(rel_diff(m.entropy, 4.0 / 3.0 * e_c / t) < 1e-2);
        assert!(rel_diff(m.entropy, 4.0 / 3.0 * m.energy / t) < 1e-2);
    }

    #[test]
    fn monotone_in_n_max() {
        let mut prev = (0.0, 0.0);
        for n in [1, 2, 4, 8, 16, 32, 64] {
            let m = mode_sum_entropy(1e-3, 50.0, n, &k()).unwrap();
            assert!(m.energy >= prev.0 && m.entropy >= prev.1);
            prev = (m.energy, m.entropy);
        }
    }

    #[test]
    fn parallel_sum_is_deterministic() {
        let a = mode_sum_entropy(1e-3, 50.0, 60, &k()).unwrap();
        let b = mode_sum_entropy(1e-3, 50.0, 60, &k()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(mode_sum_entropy(0.0, 1.0, 1, &k()).is_err());
        assert!(mode_sum_entropy(1.0, -1.0, 1, &k()).is_err());
        assert!(mode_sum_entropy(1.0, 1.0, 0, &k()).is_err());
    }
}
