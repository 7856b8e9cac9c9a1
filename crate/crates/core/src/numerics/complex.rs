//! Complex arithmetic with `Real` parts sharing one precision.

use super::real::Real;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Cplx {
    re: Real,
    im: Real,
}

impl Cplx {
    /// Both parts are brought to their common (maximum) precision.
    pub fn new(re: Real, im: Real) -> Self {
        let prec = re.prec().max(im.prec());
        Cplx {
            re: re.with_prec(prec),
            im: im.with_prec(prec),
        }
    }

    pub fn from_real(re: Real) -> Self {
        let prec = re.prec();
        Cplx {
            re,
            im: Real::new(prec),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Cplx {
            re: Real::new(prec),
            im: Real::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Cplx {
            re: Real::from_u64(1, prec),
            im: Real::new(prec),
        }
    }

    /// The imaginary unit.
    pub fn i(prec: u32) -> Self {
        Cplx {
            re: Real::new(prec),
            im: Real::from_u64(1, prec),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Cplx {
            re: Real::from_f64(re, prec),
            im: Real::from_f64(im, prec),
        }
    }

    pub fn re(&self) -> &Real {
        &self.re
    }

    pub fn im(&self) -> &Real {
        &self.im
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cplx {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn abs(&self) -> Real {
        self.re.hypot(&self.im)
    }

    pub fn abs_sq(&self) -> Real {
        self.re.square() + self.im.square()
    }

    pub fn arg(&self) -> Real {
        self.im.atan2(&self.re)
    }

    pub fn scale(&self, s: &Real) -> Self {
        Cplx::new(&self.re * s, &self.im * s)
    }

    pub fn recip(&self) -> Self {
        let d = self.abs_sq();
        Cplx::new(&self.re / &d, self.im.neg() / d)
    }

    /// Principal square root (real part >= 0).
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return Cplx::zero(prec);
        }
        let r = self.abs();
        let t = ((self.re.abs() + &r) / 2u32).sqrt();
        if !self.re.is_sign_negative() {
            let im = &self.im / (&t * 2u32);
            Cplx::new(t, im)
        } else {
            let re = self.im.abs() / (&t * 2u32);
            let im = if self.im.is_sign_negative() { t.neg() } else { t };
            Cplx::new(re, im)
        }
    }

    /// Integer power by binary exponentiation; `n` may be negative.
    pub fn powi(&self, n: i64) -> Self {
        let prec = self.prec();
        if n == 0 {
            return Cplx::one(prec);
        }
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Cplx::one(prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Debug for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cplx({:e} {:+e}i)@{}",
            self.re.to_f64(),
            self.im.to_f64(),
            self.prec()
        )
    }
}

macro_rules! cplx_binop_forward {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<Cplx> for Cplx {
            type Output = Cplx;
            fn $method(self, rhs: Cplx) -> Cplx {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Cplx> for Cplx {
            type Output = Cplx;
            fn $method(self, rhs: &Cplx) -> Cplx {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Cplx> for &Cplx {
            type Output = Cplx;
            fn $method(self, rhs: Cplx) -> Cplx {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

impl std::ops::Add<&Cplx> for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: &Cplx) -> Cplx {
        Cplx::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
cplx_binop_forward!(Add, add);

impl std::ops::Sub<&Cplx> for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: &Cplx) -> Cplx {
        Cplx::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
cplx_binop_forward!(Sub, sub);

impl std::ops::Mul<&Cplx> for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Cplx) -> Cplx {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Cplx::new(re, im)
    }
}
cplx_binop_forward!(Mul, mul);

impl std::ops::Div<&Cplx> for &Cplx {
    type Output = Cplx;
    fn div(self, rhs: &Cplx) -> Cplx {
        let d = rhs.abs_sq();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &d;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &d;
        Cplx::new(re, im)
    }
}
cplx_binop_forward!(Div, div);

impl std::ops::Neg for &Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        Cplx::new(self.re.neg(), self.im.neg())
    }
}

impl std::ops::Neg for Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::real::rel_diff;

    #[test]
    fn sqrt_of_minus_one() {
        let z = Cplx::from_f64(-1.0, 0.0, 128);
        let s = z.sqrt();
        assert!(s.re().abs().to_f64() < 1e-30);
        assert!((s.im().to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Cplx::from_f64(3.5, -1.25, 256);
        let b = Cplx::from_f64(-0.75, 2.0, 256);
        let c = &a * &b;
        let back = &c / &b;
        assert!(rel_diff(back.re(), a.re()).to_f64() < 1e-70);
        assert!(rel_diff(back.im(), a.im()).to_f64() < 1e-70);
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let z = Cplx::from_f64(0.8, 0.6, 192);
        let mut acc = Cplx::one(192);
        for _ in 0..7 {
            acc = &acc * &z;
        }
        let p = z.powi(7);
        assert!(rel_diff(&p.abs(), &acc.abs()).to_f64() < 1e-50);
        let q = z.powi(-7);
        let prod = &p * &q;
        assert!((prod.re().to_f64() - 1.0).abs() < 1e-40);
    }
}
