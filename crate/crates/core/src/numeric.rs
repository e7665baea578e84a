//! Small numerical helpers shared by the solvers.

use crate::error::{LimitsError, Result};
use crate::Scalar;

/// Bisection on `[lo, hi]` for a sign change of `f`.
///
/// Stops when the midpoint no longer moves (bracket exhausted at machine
/// precision) or after `max_iter` halvings.
pub fn bisect<T, F>(mut lo: T, mut hi: T, mut f: F, max_iter: usize) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == T::zero() {
        return Ok(lo);
    }
    if f_hi == T::zero() {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(LimitsError::InvalidArgument(format!(
            "bisection bracket [{:e}, {:e}] has no sign change",
            lo.as_f64(),
            hi.as_f64()
        )));
    }
    let half = T::lit(0.5);
    for _ in 0..max_iter {
        let mid = lo + (hi - lo) * half;
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * half)
}

/// `n` logarithmically spaced points from `start` to `end`, endpoints exact.
pub fn logspace<T: Scalar>(start: T, end: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let (a, b) = (start.ln(), end.ln());
            let steps = T::from_usize(n - 1).unwrap();
            (0..n)
                .map(|i| {
                    if i == 0 {
                        start
                    } else if i == n - 1 {
                        end
                    } else {
                        let frac = T::from_usize(i).unwrap() / steps;
                        (a + (b - a) * frac).exp()
                    }
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(0.0f64, 2.0, |x| x * x - 2.0, 200).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bisect_requires_sign_change() {
        assert!(bisect(0.0f64, 1.0, |x| x + 1.0, 100).is_err());
    }

    #[test]
    fn logspace_endpoints_are_exact() {
        let xs = logspace(5e-2f64, 1.485e-27, 50);
        assert_eq!(xs.len(), 50);
        assert_eq!(xs[0], 5e-2);
        assert_eq!(xs[49], 1.485e-27);
        assert!(xs.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(logspace(1.0f64, 10.0, 2), vec![1.0, 10.0]);
    }
}
