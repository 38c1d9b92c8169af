//! Sup-norms of polynomials on closed discs, and the seminorms assembled from them.

use num_complex::{Complex, Complex64};
use serde::Serialize;

use super::value::SeminormValue;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::FloatScalar;

pub const DEFAULT_SAMPLES: usize = 1024;

/// Relative slack on float brackets produced here.
const SLACK: f64 = 1e-14;

/// Bracket for `sup_{|z| <= rho} |f(z)|`.
///
/// By the maximum modulus principle the sup is attained on `|z| = rho`; the
/// best of `samples` equispaced boundary values bounds it from below, and
/// `sum |alpha_k| rho^k` bounds it from above.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SupNormEstimate {
    pub lower: f64,
    pub upper: f64,
    pub samples: usize,
}

impl SupNormEstimate {
    /// The sampled maximum, the sharpest value available.
    pub fn sampled(&self) -> f64 {
        self.lower
    }
}

fn check_radius(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::InvalidParameter(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

fn to_c64<F: FloatScalar>(z: &Complex<F>) -> Complex64 {
    Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

pub fn sup_norm<F: FloatScalar>(f: &Poly<Complex<F>>, rho: f64, samples: usize) -> Result<SupNormEstimate> {
    check_radius("rho", rho)?;
    if samples < 8 {
        return Err(Error::InvalidParameter(format!("need at least 8 samples, got {samples}")));
    }
    let cs: Vec<Complex64> = f.coeffs().iter().map(to_c64).collect();
    let mut upper = 0.0;
    let mut rk = 1.0;
    for c in &cs {
        upper += c.norm() * rk;
        rk *= rho;
    }
    upper *= 1.0 + SLACK;
    let mut lower: f64 = 0.0;
    for s in 0..samples {
        let theta = std::f64::consts::TAU * s as f64 / samples as f64;
        let z = Complex64::from_polar(rho, theta);
        let v = cs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
        lower = lower.max(v.norm());
    }
    Ok(SupNormEstimate {
        lower: lower.min(upper),
        upper,
        samples,
    })
}

/// Cauchy inequality `|f^(m)(0)| / m! <= ||f||_rho / rho^m`, checked against the upper sup bound.
pub fn cauchy_check<F: FloatScalar>(f: &Poly<Complex<F>>, rho: f64, m: usize) -> Result<bool> {
    let deg = f.degree().unwrap_or(0);
    if m > deg {
        return Err(Error::IndexOutOfRange { index: m, len: deg + 1 });
    }
    let est = sup_norm(f, rho, DEFAULT_SAMPLES)?;
    let coeff = to_c64(&f.coeff(m)).norm();
    Ok(coeff <= est.upper / rho.powi(m as i32) * (1.0 + 1e-12))
}

/// One `(f_n, g_n)` pair per level, already specialized to floats.
pub type FloatPairs<F> = [(Poly<Complex<F>>, Poly<Complex<F>>)];

/// `sum_n max(||f_n||_rho, ||g_n||_rho) w_n`, with brackets propagated termwise.
fn weighted_max_sum<F: FloatScalar>(
    pairs: &FloatPairs<F>,
    rho: f64,
    samples: usize,
    weight: impl Fn(usize) -> f64,
) -> Result<SeminormValue> {
    let (mut lo, mut hi) = (0.0, 0.0);
    for (n, (f, g)) in pairs.iter().enumerate() {
        let (ef, eg) = (sup_norm(f, rho, samples)?, sup_norm(g, rho, samples)?);
        let w = weight(n);
        lo += ef.lower.max(eg.lower) * w;
        hi += ef.upper.max(eg.upper) * w;
    }
    Ok(SeminormValue::interval(lo * (1.0 - SLACK), hi * (1.0 + SLACK)))
}

/// `|a|_(rho, r) = sum_n max(||f_n||_rho, ||g_n||_rho) r^n |q|^(n^2/2)` on `Omega`-pairs.
pub fn plane_seminorm<F: FloatScalar>(
    pairs: &FloatPairs<F>,
    rho: f64,
    r: f64,
    q_abs: f64,
    samples: usize,
) -> Result<SeminormValue> {
    check_radius("r", r)?;
    if !(q_abs > 0.0 && q_abs < 1.0) {
        return Err(Error::InvalidParameter(format!("|q| must lie in (0, 1), got {q_abs}")));
    }
    weighted_max_sum(pairs, rho, samples, |n| {
        let nf = n as f64;
        r.powi(n as i32) * q_abs.powf(nf * nf / 2.0)
    })
}

/// `||(f, g)||~_rho = sum_n max(||f_n||_rho, ||g_n||_rho)`.
pub fn tilde_norm<F: FloatScalar>(pairs: &FloatPairs<F>, rho: f64, samples: usize) -> Result<SeminormValue> {
    weighted_max_sum(pairs, rho, samples, |_| 1.0)
}
