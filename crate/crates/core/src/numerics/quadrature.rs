//! Adaptive quadrature at arbitrary precision.
//!
//! Two schemes are provided: tanh-sinh (double-exponential) refinement, which
//! is the default, and adaptive bisection with fixed-order Gauss-Legendre
//! panels. Infinite ranges are truncated at the smallest dyadic point where
//! the integrand falls below the configured tail cutoff.

use super::real::Real;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    TanhSinh,
    GaussPanels,
}

/// An integration endpoint.
#[derive(Clone, Debug)]
pub enum Limit {
    Finite(Real),
    NegInf,
    PosInf,
}

impl Limit {
    pub fn finite_f64(v: f64, prec: u32) -> Self {
        Limit::Finite(Real::from_f64(v, prec))
    }
}

#[derive(Clone, Debug)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    pub rel_tol: Real,
    pub tail_cutoff: Real,
    pub max_level: u32,
}

impl QuadratureSpec {
    /// Default spec at a working precision: `rel_tol = 2^(-prec/2)` and
    /// `tail_cutoff = 2^(-prec/2 - 64)`.
    pub fn with_prec(prec: u32) -> Self {
        let half = -((prec / 2) as i32);
        let rel_tol = Real::from_u64(1, prec) << half;
        let tail_cutoff = Real::from_u64(1, prec) << (half - 64);
        Self::new(Scheme::TanhSinh, rel_tol, tail_cutoff)
    }

    pub fn new(scheme: Scheme, rel_tol: Real, tail_cutoff: Real) -> Self {
        let prec = rel_tol.prec();
        let one = Real::from_u64(1, prec);
        let zero = Real::new(prec);
        assert!(rel_tol > zero && rel_tol < one, "rel_tol must be in (0,1)");
        let cap = Real::from_u64(1, prec) << -((prec / 2) as i32);
        assert!(tail_cutoff <= cap, "tail cutoff above 2^(-prec/2)");
        QuadratureSpec {
            scheme,
            rel_tol,
            tail_cutoff,
            max_level: 14,
        }
    }

    pub fn prec(&self) -> u32 {
        self.rel_tol.prec()
    }

    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        self
    }
}

// Real << i32 as scaling by powers of two.
impl std::ops::Shl<i32> for Real {
    type Output = Real;
    fn shl(self, rhs: i32) -> Real {
        let prec = self.prec();
        let two = Real::from_u64(2, prec);
        if rhs >= 0 {
            self * two.powi(rhs)
        } else {
            self / two.powi(-rhs)
        }
    }
}

/// Integrates `f` over `(a, b)` to the spec's relative tolerance.
pub fn integrate<F: Fn(&Real) -> Real>(
    f: F,
    a: &Limit,
    b: &Limit,
    spec: &QuadratureSpec,
) -> Result<Real> {
    let prec = spec.prec();
    match (a, b) {
        (Limit::Finite(x), Limit::Finite(y)) => integrate_finite(&f, x, y, spec),
        (Limit::Finite(x), Limit::PosInf) => {
            let cut = truncation_point(&f, x, true, spec)?;
            integrate_finite(&f, x, &cut, spec)
        }
        (Limit::NegInf, Limit::Finite(y)) => {
            let cut = truncation_point(&f, y, false, spec)?;
            integrate_finite(&f, &cut, y, spec)
        }
        (Limit::NegInf, Limit::PosInf) => {
            let zero = Real::new(prec);
            let right = integrate(&f, &Limit::Finite(zero.clone()), &Limit::PosInf, spec)?;
            let left = integrate(&f, &Limit::NegInf, &Limit::Finite(zero), spec)?;
            Ok(left + right)
        }
        _ => Err(Error::Domain("integration limits are reversed".into())),
    }
}

/// Smallest point of the form `start ± 2^k` past which |f| is below the tail
/// cutoff, found by doubling.
fn truncation_point<F: Fn(&Real) -> Real>(
    f: &F,
    start: &Real,
    upward: bool,
    spec: &QuadratureSpec,
) -> Result<Real> {
    let prec = spec.prec();
    let mut step = Real::from_u64(1, prec);
    for _ in 0..80 {
        let x = if upward { start + &step } else { start - &step };
        if f(&x).abs() < spec.tail_cutoff {
            return Ok(x);
        }
        step = &step * 2u32;
    }
    Err(Error::NonConvergence(
        "integrand does not decay below the tail cutoff within 2^80".into(),
    ))
}

fn integrate_finite<F: Fn(&Real) -> Real>(
    f: &F,
    a: &Real,
    b: &Real,
    spec: &QuadratureSpec,
) -> Result<Real> {
    if a == b {
        return Ok(Real::new(spec.prec()));
    }
    if a > b {
        return Err(Error::Domain("integration limits are reversed".into()));
    }
    match spec.scheme {
        Scheme::TanhSinh => tanh_sinh(f, a, b, spec),
        Scheme::GaussPanels => gauss_adaptive(f, a, b, spec),
    }
}

/// Tanh-sinh rule with level-doubling refinement.
fn tanh_sinh<F: Fn(&Real) -> Real>(
    f: &F,
    a: &Real,
    b: &Real,
    spec: &QuadratureSpec,
) -> Result<Real> {
    let prec = spec.prec();
    let center = (a + b) / 2u32;
    let halfwidth = (b - a) / 2u32;
    let half_pi = Real::pi(prec) / 2u32;
    // Term magnitude below which the doubly-exponential tail is dropped.
    let term_floor = {
        let scale = Real::from_u64(1, prec) << -(prec as i32 + 16);
        &halfwidth * &scale
    };

    // One weighted sample of the transformed integrand at abscissa t.
    let sample = |t: &Real| -> Real {
        let u = &half_pi * t.sinh();
        let sech = u.cosh().recip();
        let weight = &half_pi * t.cosh() * sech.square();
        let x = &center + &halfwidth * u.tanh();
        let w = &halfwidth * weight;
        w * f(&x)
    };

    let mut h = Real::from_u64(1, prec);
    let mut sum = sample(&Real::new(prec));
    let mut prev: Option<Real> = None;
    for level in 0..=spec.max_level {
        if level > 0 {
            h = &h / 2u32;
        }
        // Add samples at odd multiples of the current h (all new points).
        let stride = if level == 0 { 1 } else { 2 };
        let start = if level == 0 { 1 } else { 1 };
        let mut k: u64 = start;
        let mut added = Real::new(prec);
        let mut consecutive_tiny = 0;
        loop {
            let t = &h * Real::from_u64(k, prec);
            let term = sample(&t) + sample(&t.neg());
            let tiny = term.abs() < term_floor;
            added = added + term;
            if tiny {
                consecutive_tiny += 1;
                if consecutive_tiny >= 2 {
                    break;
                }
            } else {
                consecutive_tiny = 0;
            }
            k += stride;
            if k > 1 << 26 {
                return Err(Error::NonConvergence(
                    "tanh-sinh abscissa count exceeded".into(),
                ));
            }
        }
        sum = sum + added;
        let estimate = &sum * &h;
        if let Some(p) = prev {
            let err = (&estimate - &p).abs();
            let bound = &spec.rel_tol * estimate.abs() + &term_floor;
            if level >= 3 && err <= bound {
                return Ok(estimate);
            }
        }
        prev = Some(estimate);
    }
    Err(Error::NonConvergence(format!(
        "tanh-sinh did not reach rel_tol within {} levels",
        spec.max_level
    )))
}

/// Gauss-Legendre nodes and weights on [-1, 1], cached per (order, precision).
pub fn gauss_legendre(order: usize, prec: u32) -> Arc<(Vec<Real>, Vec<Real>)> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<(Vec<Real>, Vec<Real>)>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(order, prec)) {
        return hit.clone();
    }
    let computed = Arc::new(compute_gauss_legendre(order, prec));
    cache
        .lock()
        .unwrap()
        .insert((order, prec), computed.clone());
    computed
}

fn legendre_pair(order: usize, x: &Real) -> (Real, Real) {
    let prec = x.prec();
    let mut p_prev = Real::from_u64(1, prec);
    let mut p = x.clone();
    for k in 1..order {
        let k32 = k as u32;
        let next = (x * &p * (2 * k32 + 1) - &p_prev * k32) / (k32 + 1);
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

fn compute_gauss_legendre(order: usize, prec: u32) -> (Vec<Real>, Vec<Real>) {
    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    let one = Real::from_u64(1, prec);
    for i in 0..order {
        // Chebyshev-like initial guess, then Newton at full precision.
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut x = Real::from_f64(guess, prec);
        for _ in 0..64 {
            let (p, p_prev) = legendre_pair(order, &x);
            let denom = &x * &x - &one;
            let dp = (&x * &p - &p_prev) * (order as u32) / &denom;
            let dx = &p / &dp;
            x = &x - &dx;
            if dx.abs() < (one.clone() << -(prec as i32 - 8)) {
                break;
            }
        }
        let (_, p_prev) = legendre_pair(order, &x);
        // w = 2(1-x^2) / (n^2 P_{n-1}(x)^2)
        let w = (&one - &x * &x) * 2u32 / (p_prev.square() * (order as u32 * order as u32));
        nodes.push(x);
        weights.push(w);
    }
    (nodes, weights)
}

fn gl_panel<F: Fn(&Real) -> Real>(f: &F, a: &Real, b: &Real, order: usize, prec: u32) -> Real {
    let gl = gauss_legendre(order, prec);
    let center = (a + b) / 2u32;
    let halfwidth = (b - a) / 2u32;
    let mut acc = Real::new(prec);
    for (x, w) in gl.0.iter().zip(gl.1.iter()) {
        let point = &center + &halfwidth * x;
        acc = acc + w * f(&point);
    }
    acc * halfwidth
}

fn gauss_adaptive<F: Fn(&Real) -> Real>(
    f: &F,
    a: &Real,
    b: &Real,
    spec: &QuadratureSpec,
) -> Result<Real> {
    const ORDER: usize = 32;
    let prec = spec.prec();
    let coarse = gl_panel(f, a, b, ORDER, prec);
    let scale = coarse.abs() + (b - a) * &spec.tail_cutoff;
    fn recurse<F: Fn(&Real) -> Real>(
        f: &F,
        a: &Real,
        b: &Real,
        whole: Real,
        depth: u32,
        spec: &QuadratureSpec,
        scale: &Real,
    ) -> Result<Real> {
        let prec = spec.prec();
        let mid = (a + b) / 2u32;
        let left = gl_panel(f, a, &mid, ORDER, prec);
        let right = gl_panel(f, &mid, b, ORDER, prec);
        let refined = &left + &right;
        let err = (&refined - &whole).abs();
        let bound = &spec.rel_tol * (refined.abs().max(scale)) + &spec.tail_cutoff;
        if err <= bound {
            return Ok(refined);
        }
        if depth >= spec.max_level + 26 {
            return Err(Error::NonConvergence(
                "adaptive Gauss panel refinement exceeded maximum depth".into(),
            ));
        }
        let l = recurse(f, a, &mid, left, depth + 1, spec, scale)?;
        let r = recurse(f, &mid, b, right, depth + 1, spec, scale)?;
        Ok(l + r)
    }
    recurse(f, a, b, coarse, 0, spec, &scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::real::rel_diff;

    fn spec256(scheme: Scheme) -> QuadratureSpec {
        QuadratureSpec::with_prec(256).with_scheme(scheme)
    }

    #[test]
    fn cube_over_unit_interval() {
        for scheme in [Scheme::TanhSinh, Scheme::GaussPanels] {
            let spec = spec256(scheme);
            let third = Real::from_u64(3, 256).recip();
            let got = integrate(
                |x| x.square(),
                &Limit::finite_f64(0.0, 256),
                &Limit::finite_f64(1.0, 256),
                &spec,
            )
            .unwrap();
            assert!(rel_diff(&got, &third).to_f64() < 1e-35, "{scheme:?}");
        }
    }

    #[test]
    fn rational_integrand_matches_antiderivative() {
        // d/dx [ log(1+x^2)/2 ] = x/(1+x^2), evaluated at 256 bits.
        let prec = 256;
        let e = Real::e(prec);
        let expected = (Real::from_u64(1, prec) + e.square()).ln() / 2u32;
        for scheme in [Scheme::TanhSinh, Scheme::GaussPanels] {
            let spec = spec256(scheme);
            let got = integrate(
                |x| x / (Real::from_u64(1, prec) + x.square()),
                &Limit::finite_f64(0.0, prec),
                &Limit::Finite(e.clone()),
                &spec,
            )
            .unwrap();
            assert!(rel_diff(&got, &expected).to_f64() < 1e-35);
        }
    }

    #[test]
    fn gaussian_over_real_line() {
        let prec = 320;
        let spec = QuadratureSpec::with_prec(prec);
        let got = integrate(
            |x| (-x.square()).exp(),
            &Limit::NegInf,
            &Limit::PosInf,
            &spec,
        )
        .unwrap();
        let expected = Real::pi(prec).sqrt();
        assert!(rel_diff(&got, &expected).to_f64() < 1e-40);
    }

    #[test]
    fn polynomials_up_to_degree_20_are_exact() {
        // Fixed coefficients; antiderivative evaluated exactly.
        let prec = 256;
        let coeffs: Vec<i64> = (0..=20).map(|k| ((k * 7 + 3) % 11) as i64 - 5).collect();
        let a = Real::from_f64(-2.0, prec);
        let b = Real::from_f64(3.0, prec);
        let horner = |x: &Real| {
            let mut acc = Real::new(prec);
            for c in coeffs.iter().rev() {
                acc = acc * x + Real::from_i64(*c, prec);
            }
            acc
        };
        let antideriv = |x: &Real| {
            let mut acc = Real::new(prec);
            for (k, c) in coeffs.iter().enumerate().rev() {
                acc = acc * x + Real::from_i64(*c, prec) / (k as u32 + 1);
            }
            acc * x
        };
        let expected = antideriv(&b) - antideriv(&a);
        for scheme in [Scheme::TanhSinh, Scheme::GaussPanels] {
            let spec = spec256(scheme);
            let got = integrate(&horner, &Limit::Finite(a.clone()), &Limit::Finite(b.clone()), &spec)
                .unwrap();
            assert!(
                rel_diff(&got, &expected) < spec.rel_tol,
                "{scheme:?}: {} vs {}",
                got.to_f64(),
                expected.to_f64()
            );
        }
    }

    #[test]
    fn divergent_integrand_reports_nonconvergence() {
        let spec = QuadratureSpec::with_prec(128);
        let res = integrate(
            |x| x.recip(),
            &Limit::finite_f64(0.0, 128),
            &Limit::finite_f64(1.0, 128),
            &spec,
        );
        assert!(matches!(res, Err(Error::NonConvergence(_))));
    }
}
