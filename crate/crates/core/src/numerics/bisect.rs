//! Monotone bisection.

use super::real::Real;
use crate::error::{Error, Result};

/// Solves `f(x) = target` for strictly increasing `f` on `[lo, hi]`.
///
/// The returned point always lies inside the initial bracket and satisfies
/// `hi - lo <= tol` on exit.
pub fn bisect_monotone<F: Fn(&Real) -> Real>(
    f: F,
    target: &Real,
    lo: &Real,
    hi: &Real,
    tol: &Real,
) -> Result<Real> {
    let f_lo = f(lo);
    let f_hi = f(hi);
    if &f_lo > target || &f_hi < target {
        return Err(Error::BracketInvalid {
            target: format!("{:e}", target.to_f64()),
            f_lo: format!("{:e}", f_lo.to_f64()),
            f_hi: format!("{:e}", f_hi.to_f64()),
        });
    }
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    for _ in 0..65536 {
        if (&hi - &lo) <= *tol {
            break;
        }
        let mid = (&lo + &hi) / 2u32;
        if mid <= lo || mid >= hi {
            break; // precision floor
        }
        if f(&mid) <= *target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::real::rel_diff;

    fn tol(prec: u32) -> Real {
        Real::from_f64(2.0, prec).powi(-((prec / 2) as i32))
    }

    #[test]
    fn square_root_of_four() {
        let prec = 256;
        let r = bisect_monotone(
            |x| x.square(),
            &Real::from_u64(4, prec),
            &Real::new(prec),
            &Real::from_u64(10, prec),
            &tol(prec),
        )
        .unwrap();
        assert!(rel_diff(&r, &Real::from_u64(2, prec)).to_f64() < 1e-35);
    }

    #[test]
    fn three_halves_power() {
        let prec = 256;
        let exponent = Real::from_f64(1.5, prec);
        let r = bisect_monotone(
            |x| x.pow(&exponent),
            &Real::from_u64(8, prec),
            &Real::new(prec),
            &Real::from_u64(100, prec),
            &tol(prec),
        )
        .unwrap();
        assert!(rel_diff(&r, &Real::from_u64(4, prec)).to_f64() < 1e-35);
    }

    #[test]
    fn inverse_of_expm1_is_log_two() {
        let prec = 256;
        let r = bisect_monotone(
            |x| x.exp() - 1u32,
            &Real::from_u64(1, prec),
            &Real::new(prec),
            &Real::from_u64(2, prec),
            &tol(prec),
        )
        .unwrap();
        let expected = Real::ln2(prec);
        assert!(rel_diff(&r, &expected).to_f64() < 1e-35);
    }

    #[test]
    fn rejects_target_outside_bracket() {
        let prec = 128;
        let res = bisect_monotone(
            |x| x.clone(),
            &Real::from_u64(5, prec),
            &Real::new(prec),
            &Real::from_u64(2, prec),
            &tol(prec),
        );
        assert!(matches!(res, Err(Error::BracketInvalid { .. })));
    }

    #[test]
    fn result_stays_in_bracket() {
        let prec = 128;
        let lo = Real::from_f64(0.5, prec);
        let hi = Real::from_f64(7.0, prec);
        let r = bisect_monotone(
            |x| x.square() * 3u32 + x,
            &Real::from_u64(20, prec),
            &lo,
            &hi,
            &tol(prec),
        )
        .unwrap();
        assert!(r >= lo && r <= hi);
    }
}
