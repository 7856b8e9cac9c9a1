//! Arbitrary-precision real arithmetic on top of MPFR.
//!
//! `Real` wraps `rug::Float` with two conventions used throughout the crate:
//! every value carries at least [`MIN_PREC`] bits, and binary operations
//! produce a result at the maximum precision of the two operands. Rounding is
//! round-to-nearest everywhere.

use rug::float::Round;
use rug::ops::CompleteRound;
use rug::Float;
use std::cmp::Ordering;
use std::fmt;

/// Smallest precision any `Real` may carry.
pub const MIN_PREC: u32 = 64;

#[derive(Clone, PartialEq)]
pub struct Real(Float);

impl Real {
    fn assert_prec(prec: u32) {
        assert!(prec >= MIN_PREC, "precision {prec} below minimum {MIN_PREC}");
    }

    pub fn new(prec: u32) -> Self {
        Self::assert_prec(prec);
        Real(Float::new(prec))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        Self::assert_prec(prec);
        Real(Float::with_val(prec, v))
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        Self::assert_prec(prec);
        Real(Float::with_val(prec, v))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::assert_prec(prec);
        Real(Float::with_val(prec, v))
    }

    /// Parses a decimal string at the given precision.
    pub fn parse(s: &str, prec: u32) -> Option<Self> {
        Self::assert_prec(prec);
        Float::parse(s.trim())
            .ok()
            .map(|incomplete| Real(Float::with_val(prec, incomplete)))
    }

    pub fn pi(prec: u32) -> Self {
        Self::assert_prec(prec);
        Real(Float::with_val(prec, rug::float::Constant::Pi))
    }

    pub fn ln2(prec: u32) -> Self {
        Self::assert_prec(prec);
        Real(Float::with_val(prec, rug::float::Constant::Log2))
    }

    /// Euler's number at the given precision.
    pub fn e(prec: u32) -> Self {
        Real::from_u64(1, prec).exp()
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Re-rounds to a new precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::assert_prec(prec);
        let mut f = self.0.clone();
        f.set_prec_round(prec, Round::Nearest);
        Real(f)
    }

    pub fn inner(&self) -> &Float {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    /// Decimal string with enough digits to reproduce the value bit-exactly
    /// when parsed back at the same precision.
    pub fn to_decimal_string(&self) -> String {
        let digits = (self.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
        let (sign, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits));
        match exp {
            Some(e) => {
                let s = if sign { "-" } else { "" };
                format!("{s}0.{mantissa}e{e}")
            }
            None => mantissa, // zero / inf / nan render directly
        }
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn neg(&self) -> Self {
        Real((-&self.0).complete(self.prec()))
    }

    pub fn recip(&self) -> Self {
        Real(self.0.clone().recip())
    }

    pub fn square(&self) -> Self {
        Real(self.0.clone().square())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    pub fn ln_1p(&self) -> Self {
        Real(self.0.clone().ln_1p())
    }

    pub fn cos(&self) -> Self {
        Real(self.0.clone().cos())
    }

    pub fn sin(&self) -> Self {
        Real(self.0.clone().sin())
    }

    pub fn tanh(&self) -> Self {
        Real(self.0.clone().tanh())
    }

    pub fn cosh(&self) -> Self {
        Real(self.0.clone().cosh())
    }

    pub fn sinh(&self) -> Self {
        Real(self.0.clone().sinh())
    }

    pub fn acos(&self) -> Self {
        Real(self.0.clone().acos())
    }

    pub fn atan(&self) -> Self {
        Real(self.0.clone().atan())
    }

    pub fn acosh(&self) -> Self {
        Real(self.0.clone().acosh())
    }

    pub fn atan2(&self, x: &Real) -> Self {
        let prec = self.prec().max(x.prec());
        Real(self.0.atan2_ref(&x.0).complete(prec))
    }

    pub fn hypot(&self, other: &Real) -> Self {
        let prec = self.prec().max(other.prec());
        Real(self.0.hypot_ref(&other.0).complete(prec))
    }

    pub fn powi(&self, n: i32) -> Self {
        Real(self.0.pow_ref(n).complete(self.prec()))
    }

    /// Real power `self^e`; requires `self >= 0` for non-integer exponents.
    pub fn pow(&self, e: &Real) -> Self {
        let prec = self.prec().max(e.prec());
        Real(self.0.pow_ref(&e.0).complete(prec))
    }

    pub fn min(&self, other: &Real) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &Real) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn signum(&self) -> f64 {
        if self.0.is_zero() {
            0.0
        } else if self.0.is_sign_negative() {
            -1.0
        } else {
            1.0
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({:e}@{})", self.0.to_f64(), self.prec())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let prec = self.prec().max(rhs.prec());
                Real((std::ops::$trait::$method(&self.0, &rhs.0)).complete(prec))
            }
        }
        impl std::ops::$trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

macro_rules! scalar_binop {
    ($scalar:ty) => {
        impl std::ops::Add<$scalar> for &Real {
            type Output = Real;
            fn add(self, rhs: $scalar) -> Real {
                Real((&self.0 + rhs).complete(self.prec()))
            }
        }
        impl std::ops::Sub<$scalar> for &Real {
            type Output = Real;
            fn sub(self, rhs: $scalar) -> Real {
                Real((&self.0 - rhs).complete(self.prec()))
            }
        }
        impl std::ops::Mul<$scalar> for &Real {
            type Output = Real;
            fn mul(self, rhs: $scalar) -> Real {
                Real((&self.0 * rhs).complete(self.prec()))
            }
        }
        impl std::ops::Div<$scalar> for &Real {
            type Output = Real;
            fn div(self, rhs: $scalar) -> Real {
                Real((&self.0 / rhs).complete(self.prec()))
            }
        }
        impl std::ops::Add<$scalar> for Real {
            type Output = Real;
            fn add(self, rhs: $scalar) -> Real {
                &self + rhs
            }
        }
        impl std::ops::Sub<$scalar> for Real {
            type Output = Real;
            fn sub(self, rhs: $scalar) -> Real {
                &self - rhs
            }
        }
        impl std::ops::Mul<$scalar> for Real {
            type Output = Real;
            fn mul(self, rhs: $scalar) -> Real {
                &self * rhs
            }
        }
        impl std::ops::Div<$scalar> for Real {
            type Output = Real;
            fn div(self, rhs: $scalar) -> Real {
                &self / rhs
            }
        }
    };
}

scalar_binop!(u32);
scalar_binop!(i32);

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::neg(self)
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::neg(&self)
    }
}

/// |a - b| / max(|a|, |b|, tiny); a symmetric relative difference.
pub fn rel_diff(a: &Real, b: &Real) -> Real {
    let prec = a.prec().max(b.prec());
    let denom = a.abs().max(&b.abs());
    let num = (a - b).abs();
    if denom.is_zero() {
        return Real::new(prec); // both zero
    }
    num / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_precision_propagates() {
        let a = Real::from_f64(1.5, 128);
        let b = Real::from_f64(2.25, 512);
        assert_eq!((&a + &b).prec(), 512);
        assert_eq!((&a * &b).prec(), 512);
        assert_eq!((b - a).prec(), 512);
    }

    #[test]
    #[should_panic(expected = "below minimum")]
    fn rejects_tiny_precision() {
        let _ = Real::from_f64(1.0, 32);
    }

    #[test]
    fn decimal_round_trip_is_exact() {
        let x = Real::pi(384).sqrt();
        let s = x.to_decimal_string();
        let back = Real::parse(&s, 384).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn sqrt_two_squared() {
        let two = Real::from_u64(2, 256);
        let r = two.sqrt().square();
        assert!(rel_diff(&r, &two).to_f64() < 1e-70);
    }
}
