//! Polynomials with complex arbitrary-precision coefficients.
//!
//! Coefficients are stored ascending by degree, either in the monomial basis
//! or in a scaled Chebyshev basis T_k(x/a). The scaled basis keeps coefficient
//! magnitudes balanced for polynomials living on [-a, a].

use crate::numerics::{Cplx, Real};

#[derive(Clone, Debug)]
pub enum Basis {
    Monomial,
    /// Chebyshev polynomials of the first kind in x/scale.
    ChebyshevScaled(Real),
}

#[derive(Clone, Debug)]
pub struct PolyC {
    coeffs: Vec<Cplx>,
    basis: Basis,
}

impl PolyC {
    pub fn new(mut coeffs: Vec<Cplx>, basis: Basis) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Cplx::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Cplx::zero(crate::numerics::MIN_PREC));
        }
        PolyC { coeffs, basis }
    }

    pub fn from_monomial(coeffs: Vec<Cplx>) -> Self {
        Self::new(coeffs, Basis::Monomial)
    }

    pub fn from_real_monomial(coeffs: Vec<Real>) -> Self {
        Self::new(
            coeffs.into_iter().map(Cplx::from_real).collect(),
            Basis::Monomial,
        )
    }

    /// Expands prod(x - r_i) * leading.
    pub fn from_roots(roots: &[Cplx], leading: &Cplx) -> Self {
        let prec = roots
            .iter()
            .map(Cplx::prec)
            .chain(std::iter::once(leading.prec()))
            .max()
            .unwrap();
        let mut coeffs = vec![Cplx::one(prec)];
        for r in roots {
            let mut next = vec![Cplx::zero(prec); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] - &(c * r);
            }
            coeffs = next;
        }
        for c in coeffs.iter_mut() {
            *c = &*c * leading;
        }
        Self::new(coeffs, Basis::Monomial)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeffs(&self) -> &[Cplx] {
        &self.coeffs
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn max_prec(&self) -> u32 {
        self.coeffs.iter().map(Cplx::prec).max().unwrap()
    }

    /// Largest coefficient magnitude.
    pub fn coeff_norm(&self) -> Real {
        let mut norm = Real::new(self.max_prec());
        for c in &self.coeffs {
            norm = norm.max(&c.abs());
        }
        norm
    }

    pub fn eval(&self, z: &Cplx) -> Cplx {
        match &self.basis {
            Basis::Monomial => {
                let prec = self.max_prec().max(z.prec());
                let mut acc = Cplx::zero(prec);
                for c in self.coeffs.iter().rev() {
                    acc = &acc * z + c;
                }
                acc
            }
            Basis::ChebyshevScaled(scale) => {
                // Clenshaw recurrence in u = z/scale.
                let prec = self.max_prec().max(z.prec());
                let u = z.scale(&scale.recip());
                let two_u = &u + &u;
                let mut b1 = Cplx::zero(prec);
                let mut b2 = Cplx::zero(prec);
                for c in self.coeffs.iter().skip(1).rev() {
                    let next = &(&two_u * &b1) - &b2 + c;
                    b2 = b1;
                    b1 = next;
                }
                &(&u * &b1) - &b2 + &self.coeffs[0]
            }
        }
    }

    pub fn eval_real(&self, x: &Real) -> Cplx {
        self.eval(&Cplx::from_real(x.clone()))
    }

    /// |p(x)| for real x.
    pub fn abs_at(&self, x: &Real) -> Real {
        self.eval_real(x).abs()
    }

    /// Derivative in the monomial basis.
    pub fn derivative(&self) -> PolyC {
        let p = self.to_monomial();
        if p.degree() == 0 {
            return PolyC::from_monomial(vec![Cplx::zero(p.max_prec())]);
        }
        let coeffs = p
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Real::from_u64(k as u64, c.prec())))
            .collect();
        PolyC::from_monomial(coeffs)
    }

    pub fn to_monomial(&self) -> PolyC {
        match &self.basis {
            Basis::Monomial => self.clone(),
            Basis::ChebyshevScaled(scale) => {
                let prec = self.max_prec().max(scale.prec());
                let n = self.degree();
                // Monomial coefficients (in x) of T_k(x/scale), via the
                // recurrence T_{k+1}(u) = 2u T_k(u) - T_{k-1}(u).
                let inv = scale.recip();
                let mut t_km1 = vec![Real::from_u64(1, prec)]; // T_0
                let mut t_k = vec![Real::new(prec), inv.clone()]; // T_1 = x/scale
                let mut out = vec![Cplx::zero(prec); n + 1];
                out[0] = self.coeffs[0].clone();
                for (k, c) in self.coeffs.iter().enumerate().skip(1) {
                    for (j, b) in t_k.iter().enumerate() {
                        out[j] = &out[j] + &c.scale(b);
                    }
                    if k < n {
                        let mut next = vec![Real::new(prec); t_k.len() + 1];
                        for (j, v) in t_k.iter().enumerate() {
                            next[j + 1] = &next[j + 1] + (v * &inv) * 2u32;
                        }
                        for (j, v) in t_km1.iter().enumerate() {
                            next[j] = &next[j] - v;
                        }
                        t_km1 = std::mem::replace(&mut t_k, next);
                    }
                }
                PolyC::new(out, Basis::Monomial)
            }
        }
    }

    /// Converts to the scaled Chebyshev basis T_k(x/scale).
    pub fn to_chebyshev_scaled(&self, scale: &Real) -> PolyC {
        let mono = self.to_monomial();
        let prec = mono.max_prec().max(scale.prec());
        let n = mono.degree();
        // Representation of (x)^k in the T_j(x/scale) basis, built from
        // x * T_j = scale/2 * (T_{j+1} + T_{j-1}) with T_{-1} = T_1.
        let mut rep = vec![Real::from_u64(1, prec)]; // x^0 = T_0
        let mut out = vec![Cplx::zero(prec); n + 1];
        out[0] = mono.coeffs[0].clone();
        let half_scale = scale / 2u32;
        for k in 1..=n {
            let mut next = vec![Real::new(prec); rep.len() + 1];
            for (j, v) in rep.iter().enumerate() {
                let w = v * &half_scale;
                if j == 0 {
                    next[1] = &next[1] + &(v * scale);
                } else {
                    next[j + 1] = &next[j + 1] + &w;
                    next[j - 1] = &next[j - 1] + &w;
                }
            }
            rep = next;
            for (j, v) in rep.iter().enumerate() {
                if !v.is_zero() {
                    out[j] = &out[j] + &mono.coeffs[k].scale(v);
                }
            }
        }
        PolyC::new(out, Basis::ChebyshevScaled(scale.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::real::rel_diff;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::from_f64(re, im, 256)
    }

    #[test]
    fn horner_evaluates_quadratic() {
        // 1 - 2x + 3x^2 at x = 2 -> 9
        let p = PolyC::from_monomial(vec![c(1.0, 0.0), c(-2.0, 0.0), c(3.0, 0.0)]);
        let v = p.eval(&c(2.0, 0.0));
        assert!((v.re().to_f64() - 9.0).abs() < 1e-60);
        assert!(v.im().is_zero());
    }

    #[test]
    fn from_roots_expands() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let roots = vec![c(1.0, 0.0), c(2.0, 0.0)];
        let p = PolyC::from_roots(&roots, &c(1.0, 0.0));
        let got: Vec<f64> = p.coeffs().iter().map(|z| z.re().to_f64()).collect();
        assert_eq!(got, vec![2.0, -3.0, 1.0]);
    }

    #[test]
    fn basis_round_trip() {
        let p = PolyC::from_monomial(vec![
            c(1.0, 0.5),
            c(-2.0, 0.0),
            c(3.0, -1.0),
            c(0.25, 0.0),
            c(-0.125, 2.0),
        ]);
        let scale = Real::from_f64(3.5, 256);
        let back = p.to_chebyshev_scaled(&scale).to_monomial();
        for (a, b) in p.coeffs().iter().zip(back.coeffs()) {
            assert!(rel_diff(&a.abs(), &b.abs()).to_f64() < 1e-60);
            assert!((a - b).abs().to_f64() < 1e-60);
        }
        // Evaluation agrees in both bases.
        let z = Cplx::from_f64(1.25, -0.75, 256);
        let cheb = p.to_chebyshev_scaled(&scale);
        let d = (&p.eval(&z) - &cheb.eval(&z)).abs();
        assert!(d.to_f64() < 1e-60);
    }

    #[test]
    fn derivative_of_cubic() {
        // d/dx (x^3 - x) = 3x^2 - 1
        let p = PolyC::from_monomial(vec![c(0.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let d = p.derivative();
        let v = d.eval(&c(2.0, 0.0));
        assert!((v.re().to_f64() - 11.0).abs() < 1e-60);
    }
}
