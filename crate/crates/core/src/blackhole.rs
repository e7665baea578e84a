//! A computer compressed to its Schwarzschild radius.
//!
//! Memory is the Bekenstein–Hawking entropy, the flip time follows from the
//! same energy bound as any other machine, and communication goes around the
//! horizon (`πR_S/c`). The ratio of the two is `ln2/π`: fully serial.

use serde::{Deserialize, Serialize};

use crate::constants::{planck_scales, PhysicalConstants};
use crate::error::{positive, LimitsError, Result};
use crate::speed_limits::{max_ops_per_second, EnergyBudget};
use crate::Scalar;

/// Default species-dependent constant in the evaporation time.
pub const DEFAULT_PAGE_C: f64 = 1e-2;
/// Accepted range for the evaporation constant.
pub const PAGE_C_RANGE: (f64, f64) = (1e-4, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlackHoleReport<T> {
    /// kg.
    pub mass: T,
    /// m.
    pub schwarzschild_radius: T,
    /// K.
    pub hawking_temperature: T,
    /// J/K.
    pub entropy: T,
    pub bits: T,
    /// J.
    pub energy_per_bit: T,
    pub ops_per_second: T,
    /// s.
    pub t_flip: T,
    /// s, around the horizon.
    pub t_com: T,
    pub ratio: T,
    pub bekenstein_ratio: T,
    /// `2 t_flip/t_com`; above one, so any error rate is tolerable.
    pub max_error_rate: T,
    /// s.
    pub lifetime: T,
    pub lifetime_ops: T,
    pub page_c: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlackHoleTimescales<T> {
    pub t_flip: T,
    pub t_com: T,
    pub ratio: T,
}

/// `2Gm/c²`.
pub fn schwarzschild_radius<T: Scalar>(mass: T, k: &PhysicalConstants<T>) -> Result<T> {
    Ok(T::lit(2.0) * k.g * positive("mass", mass)? / (k.c * k.c))
}

/// `4πGm²/(ln2 ħc)`: horizon area over `4ℓ_P²`, in bits.
pub fn bh_bits<T: Scalar>(mass: T, k: &PhysicalConstants<T>) -> Result<T> {
    let m = positive("mass", mass)?;
    Ok(T::lit(4.0) * T::PI() * k.g * m * m / (T::LN_2() * k.hbar_c()))
}

/// `k_B ln2 · bits`.
pub fn bh_entropy<T: Scalar>(mass: T, k: &PhysicalConstants<T>) -> Result<T> {
    Ok(k.k_b * T::LN_2() * bh_bits(mass, k)?)
}

/// `ħc/(4π k_B R_S)`; satisfies `T·S = mc²/2`.
pub fn hawking_temperature<T: Scalar>(mass: T, k: &PhysicalConstants<T>) -> Result<T> {
    let rs = schwarzschild_radius(mass, k)?;
    Ok(k.hbar_c() / (T::lit(4.0) * T::PI() * k.k_b * rs))
}

/// Flip time `π²R_S/(c ln2)`, horizon crossing `πR_S/c`, and their ratio `ln2/π`.
pub fn bh_timescales<T: Scalar>(mass: T, k: &PhysicalConstants<T>) -> Result<BlackHoleTimescales<T>> {
    let rs = schwarzschild_radius(mass, k)?;
    let pi = T::PI();
    let t_flip = pi * pi * rs / (k.c * T::LN_2());
    let t_com = pi * rs / k.c;
    Ok(BlackHoleTimescales {
        t_flip,
        t_com,
        ratio: t_com / t_flip,
    })
}

fn check_page_c<T: Scalar>(c: T) -> Result<T> {
    let (lo, hi) = PAGE_C_RANGE;
    if c >= T::lit(lo) && c <= T::lit(hi) {
        Ok(c)
    } else {
        Err(LimitsError::Domain {
            quantity: "evaporation constant C",
            requirement: "within [1e-4, 1]",
            value: c.as_f64(),
        })
    }
}

/// Evaporation time `G²m³/(3Cħc⁴)` at fixed initial mass.
pub fn page_lifetime<T: Scalar>(mass: T, page_c: T, k: &PhysicalConstants<T>) -> Result<T> {
    let m = positive("mass", mass)?;
    let c = check_page_c(page_c)?;
    let c2 = k.c * k.c;
    Ok(k.g * k.g * m * m * m / (T::lit(3.0) * c * k.hbar * c2 * c2))
}

/// Operations performed over the evaporation time at the full `2mc²/πħ` rate.
pub fn lifetime_ops<T: Scalar>(mass: T, page_c: T, k: &PhysicalConstants<T>) -> Result<T> {
    let life = page_lifetime(mass, page_c, k)?;
    Ok(max_ops_per_second(EnergyBudget::rest_mass(mass, k)?, k) * life)
}

pub fn black_hole_report<T: Scalar>(mass: T, page_c: T, k: &PhysicalConstants<T>) -> Result<BlackHoleReport<T>> {
    let rs = schwarzschild_radius(mass, k)?;
    let energy = mass * k.c * k.c;
    let bits = bh_bits(mass, k)?;
    let entropy = bh_entropy(mass, k)?;
    let times = bh_timescales(mass, k)?;
    Ok(BlackHoleReport {
        mass,
        schwarzschild_radius: rs,
        hawking_temperature: hawking_temperature(mass, k)?,
        entropy,
        bits,
        energy_per_bit: energy / bits,
        ops_per_second: max_ops_per_second(EnergyBudget::new(energy)?, k),
        t_flip: times.t_flip,
        t_com: times.t_com,
        ratio: times.ratio,
        bekenstein_ratio: crate::parallelism_errors::bekenstein_ratio(rs, energy, entropy, k)?,
        max_error_rate: T::lit(2.0) * times.t_flip / times.t_com,
        lifetime: page_lifetime(mass, page_c, k)?,
        lifetime_ops: lifetime_ops(mass, page_c, k)?,
        page_c,
    })
}

/// `4πm²/(ln2 m_P²)`, the same count via the Planck mass.
pub fn bh_bits_planck<T: Scalar>(mass: T, k: &PhysicalConstants<T>) -> Result<T> {
    let m = positive("mass", mass)?;
    let mp = planck_scales(k).mass;
    Ok(T::lit(4.0) * T::PI() * m * m / (T::LN_2() * mp * mp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::default_constants;
    use crate::parallelism_errors::bekenstein_bound;
    use crate::scalar::rel_diff;
    use proptest::prelude::*;
    use std::f64::consts::{LN_2, PI};

    fn k() -> PhysicalConstants<f64> {
        default_constants()
    }

    #[test]
    fn one_kilogram_horizon() {
        let rs = schwarzschild_radius(1.0, &k()).unwrap();
        assert!(rel_diff(rs, 1.485e-27) < 1e-3, "{rs:e}");
        assert!(rel_diff(schwarzschild_radius(3.0, &k()).unwrap(), 3.0 * rs) < 1e-15);
        let p = planck_scales(&k());
        assert!(rel_diff(schwarzschild_radius(p.mass, &k()).unwrap(), 2.0 * p.length) < 1e-9);
        assert!(schwarzschild_radius(0.0, &k()).is_err());
    }

    #[test]
    fn one_kilogram_bits() {
        let b = bh_bits(1.0, &k()).unwrap();
        assert!(rel_diff(b, 3.827e16) < 1e-3, "{b:e}");
        assert!(rel_diff(b, bh_bits_planck(1.0, &k()).unwrap()) < 1e-9);
        assert!(rel_diff(bh_bits(2.0, &k()).unwrap(), 4.0 * b) < 1e-15);
        // Area/4ℓ_P² in nats, converted to bits.
        let rs = schwarzschild_radius(1.0, &k()).unwrap();
        let lp = planck_scales(&k()).length;
        let area_bits = 4.0 * PI * rs * rs / (4.0 * lp * lp) / LN_2;
        assert!(rel_diff(b, area_bits) < 1e-9);
    }

    #[test]
    fn hawking_temperature_relations() {
        let t = hawking_temperature(1.0, &k()).unwrap();
        let e = k().c * k().c;
        let s = bh_entropy(1.0, &k()).unwrap();
        assert!(rel_diff(t, 1.227e23) < 1e-3, "{t:e}");
        assert!(rel_diff(t * s, e / 2.0) < 1e-9);
        assert!(rel_diff(hawking_temperature(2.0, &k()).unwrap(), t / 2.0) < 1e-15);
        let per_bit = e / bh_bits(1.0, &k()).unwrap();
        assert!(rel_diff(per_bit, 2.0 * LN_2 * k().k_b * t) < 1e-9);
        // The printed form ln2 k_B T/2 is a quarter of the consistent value.
        assert!(rel_diff(per_bit / (LN_2 * k().k_b * t / 2.0), 4.0) < 1e-9);
    }

    #[test]
    fn horizon_timescales() {
        let ts = bh_timescales(1.0, &k()).unwrap();
        assert!(rel_diff(ts.t_flip, 7.05e-35) < 1e-3, "{:e}", ts.t_flip);
        assert!((ts.ratio - 0.22064).abs() < 1e-4);
        assert!(rel_diff(ts.ratio, LN_2 / PI) < 1e-12);
        let e = k().c * k().c;
        let bits = bh_bits(1.0, &k()).unwrap();
        assert!(rel_diff(PI * k().hbar * bits / (2.0 * e), ts.t_flip) < 1e-9);
        assert!(rel_diff(bits / ts.t_flip, 5.43e50) < 5e-3);
    }

    #[test]
    fn evaporation() {
        let life = page_lifetime(1.0, 1e-2, &k()).unwrap();
        assert!(rel_diff(life, 1.7426e-19) < 1e-3, "{life:e}");
        assert!(rel_diff(page_lifetime(1.0, 1e-3, &k()).unwrap(), 10.0 * life) < 1e-12);
        assert!(rel_diff(page_lifetime(2.0, 1e-2, &k()).unwrap(), 8.0 * life) < 1e-12);
        let ops = lifetime_ops(1.0, 1e-2, &k()).unwrap();
        assert!((1e31..=1e33).contains(&ops));
        assert!(rel_diff(ops, 9.455e31) < 1e-3, "{ops:e}");
        assert!(rel_diff(lifetime_ops(1.0, 1e-3, &k()).unwrap(), 9.455e32) < 1e-3);
        assert!(rel_diff(lifetime_ops(2.0, 1e-2, &k()).unwrap(), 16.0 * ops) < 1e-12);
        assert!(page_lifetime(1.0, 2.0, &k()).is_err());
        assert!(page_lifetime(1.0, 1e-5, &k()).is_err());
        assert!(page_lifetime(-1.0, 1e-2, &k()).is_err());
    }

    #[test]
    fn report_invariants() {
        let r = black_hole_report(1.0, DEFAULT_PAGE_C, &k()).unwrap();
        assert!(rel_diff(r.ratio, LN_2 / PI) < 1e-12);
        assert!(rel_diff(r.bekenstein_ratio, bekenstein_bound()) < 1e-9);
        assert!(rel_diff(r.hawking_temperature, 0.5 * k().c * k().c / r.entropy) < 1e-9);
        assert!(rel_diff(r.max_error_rate, 2.0 * PI / LN_2) < 1e-12);
        assert!(rel_diff(r.ops_per_second, 5.4258e50) < 5e-4);
        assert_eq!(r.page_c, DEFAULT_PAGE_C);
    }

    proptest! {
        #[test]
        fn invariants_over_masses(log_m in -8.0f64..40.0) {
            let m = 10f64.powf(log_m);
            let k = k();
            let s = bh_entropy(m, &k).unwrap();
            let t = hawking_temperature(m, &k).unwrap();
            prop_assert!(rel_diff(t * s, 0.5 * m * k.c * k.c) < 1e-9);
            prop_assert!(rel_diff(bh_bits(m, &k).unwrap() * LN_2 * k.k_b, s) < 1e-12);
            let rs = schwarzschild_radius(m, &k).unwrap();
            let bek = crate::parallelism_errors::bekenstein_ratio(rs, m * k.c * k.c, s, &k).unwrap();
            prop_assert!(rel_diff(bek, bekenstein_bound()) < 1e-9);
        }
    }
}
