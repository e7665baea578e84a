//! Physical constants and Planck-scale quantities.
//!
//! Constants are passed by value into every formula rather than read from
//! globals, so the reference five-digit values and CODATA values can be used
//! side by side.

use serde::{Deserialize, Serialize};

use crate::error::{positive, Result};
use crate::Scalar;

/// The constants every limit depends on, in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants<T> {
    /// Speed of light, m/s.
    pub c: T,
    /// Reduced Planck constant, J·s.
    pub hbar: T,
    /// Gravitational constant, m³/(kg·s²).
    pub g: T,
    /// Boltzmann constant, J/K.
    pub k_b: T,
    /// Fine structure constant, dimensionless.
    pub alpha: T,
}

impl<T: Scalar> PhysicalConstants<T> {
    /// Builds a constant set, rejecting nonpositive or non-finite entries.
    pub fn new(c: T, hbar: T, g: T, k_b: T, alpha: T) -> Result<Self> {
        Ok(Self {
            c: positive("speed of light", c)?,
            hbar: positive("hbar", hbar)?,
            g: positive("gravitational constant", g)?,
            k_b: positive("Boltzmann constant", k_b)?,
            alpha: positive("fine structure constant", alpha)?,
        })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.c, self.hbar, self.g, self.k_b, self.alpha).map(|_| ())
    }

    /// ħc, the quantity most formulas actually need.
    pub fn hbar_c(&self) -> T {
        self.hbar * self.c
    }

    /// Stefan–Boltzmann constant σ = π²k_B⁴/(60ħ³c²), in W m⁻² K⁻⁴.
    pub fn stefan_boltzmann(&self) -> T {
        let pi = T::PI();
        // k_B (k_B/ħc)³ c keeps intermediates inside f64 comfortably.
        let ratio = self.k_b / self.hbar_c();
        pi * pi / T::lit(60.0) * self.k_b * ratio * ratio * ratio * self.c
    }
}

impl<T: Scalar> Default for PhysicalConstants<T> {
    fn default() -> Self {
        default_constants()
    }
}

/// The five-digit constant values the reference numbers were computed with.
pub fn default_constants<T: Scalar>() -> PhysicalConstants<T> {
    PhysicalConstants {
        c: T::lit(2.9979e8),
        hbar: T::lit(1.0545e-34),
        g: T::lit(6.673e-11),
        k_b: T::lit(1.3805e-23),
        alpha: T::one() / T::lit(137.036),
    }
}

/// CODATA 2018 values, for users who want modern constants instead.
pub fn codata_2018<T: Scalar>() -> PhysicalConstants<T> {
    PhysicalConstants {
        c: T::lit(299_792_458.0),
        hbar: T::lit(1.054_571_817e-34),
        g: T::lit(6.674_30e-11),
        k_b: T::lit(1.380_649e-23),
        alpha: T::lit(7.297_352_569_3e-3),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanckScales<T> {
    pub length: T,
    pub time: T,
    pub mass: T,
}

/// ℓ_P = √(ħG/c³), t_P = √(ħG/c⁵), m_P = √(ħc/G).
pub fn planck_scales<T: Scalar>(k: &PhysicalConstants<T>) -> PlanckScales<T> {
    let hg = k.hbar * k.g;
    let c3 = k.c * k.c * k.c;
    let length = (hg / c3).sqrt();
    PlanckScales {
        length,
        time: length / k.c,
        mass: (k.hbar_c() / k.g).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rel_diff;

    #[test]
    fn defaults_are_the_reference_values() {
        let k: PhysicalConstants<f64> = default_constants();
        assert_eq!(k.c, 2.9979e8);
        assert_eq!(k.hbar, 1.0545e-34);
        assert_eq!(k.g, 6.673e-11);
        assert_eq!(k.k_b, 1.3805e-23);
        assert!((k.alpha * 137.036 - 1.0).abs() < 1e-6);
        k.validate().unwrap();
    }

    #[test]
    fn planck_scales_match_quoted_values() {
        let p = planck_scales(&default_constants::<f64>());
        assert!(rel_diff(p.length, 1.616e-35) < 1e-3, "{}", p.length);
        assert!(rel_diff(p.time, 5.391e-44) < 1e-3, "{}", p.time);
        assert!(rel_diff(p.mass, 2.177e-8) < 1e-3, "{}", p.mass);
    }

    #[test]
    fn planck_scales_are_dimensionally_consistent() {
        for k in [default_constants::<f64>(), codata_2018()] {
            let p = planck_scales(&k);
            assert!(rel_diff(p.length / p.time, k.c) < 1e-12);
            assert!(rel_diff(p.mass * k.c * k.c * p.time, k.hbar) < 1e-12);
        }
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(PhysicalConstants::new(0.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, 1.0, -1.0, 1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, f64::NAN, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn stefan_boltzmann_from_default_constants() {
        let sigma = default_constants::<f64>().stefan_boltzmann();
        assert!(rel_diff(sigma, 5.67e-8) < 1e-3, "{sigma}");
        // Oracle: literal π²k⁴/(60ħ³c²) evaluated directly.
        let k = default_constants::<f64>();
        let direct = std::f64::consts::PI.powi(2) * k.k_b.powi(4) / (60.0 * k.hbar.powi(3) * k.c.powi(2));
        assert!(rel_diff(sigma, direct) < 1e-12);
    }
}
