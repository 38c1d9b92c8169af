//! The sup-norm estimate bounding `h_n` by the `W_m`, its coefficient identity,
//! and the majorization ratio of the plane seminorm by the `W`-sequence norm.

use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::wn::{tri, wn_paper, wn_sequence};
use crate::error::{Error, Result};
use crate::omega::{to_pairs, OmegaUElement, PairConvention};
use crate::poly::Poly;
use crate::scalar::FloatScalar;
use crate::seminorm::{plane_seminorm, sup_norm, tilde_norm, SupNormEstimate};

/// Relative tolerance of the sampled-against-sampled comparison.
pub const HNSET_SAMPLED_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HnsetOutcome {
    pub n: usize,
    pub rho: f64,
    pub q_abs: f64,
    pub lhs_lower: f64,
    pub lhs_upper: f64,
    pub rhs_lower: f64,
    pub rhs_upper: f64,
    /// `lhs_lower <= rhs_upper`, no tolerance.
    pub bracket_ok: bool,
    /// Sampled lhs against sampled rhs, relative tolerance [`HNSET_SAMPLED_TOL`].
    pub sampled_ok: bool,
}

impl HnsetOutcome {
    pub fn ok(&self) -> bool {
        self.bracket_ok && self.sampled_ok
    }

    pub fn lhs_sampled(&self) -> f64 {
        self.lhs_lower
    }

    pub fn rhs_sampled(&self) -> f64 {
        self.rhs_lower
    }
}

/// Checks
///
/// ```text
/// ||h_n|| rho^n |q|^(n(n+1)/2) <= 3/2 ||W_n|| + (3/2)^2 sum_{k<n} (5/2)^k ||W_(n-1-k)|| / rho^(k+1)
/// ```
///
/// with `||.|| = ||.||_rho`. Each sup-norm comes as a sampled lower bound and a
/// coefficient upper bound; both sides are bracketed accordingly.
pub fn hnset_check<F: FloatScalar>(
    h_bar: &[Poly<Complex<F>>],
    rho: f64,
    q: Complex<F>,
    n: usize,
    samples: usize,
) -> Result<HnsetOutcome> {
    if n >= h_bar.len() {
        return Err(Error::IndexOutOfRange { index: n, len: h_bar.len() });
    }
    let q_abs = q.norm().to_f64().unwrap_or(f64::NAN);
    let norms: Vec<SupNormEstimate> = (0..=n)
        .map(|m| sup_norm(&wn_paper(h_bar, &q, m)?, rho, samples))
        .collect::<Result<_>>()?;
    let hn = sup_norm(&h_bar[n], rho, samples)?;
    let factor = rho.powi(n as i32) * q_abs.powf(tri(n) as f64);
    let coeffs: Vec<f64> = (0..=n)
        .map(|m| {
            if m == n {
                1.5
            } else {
                let k = n - 1 - m;
                2.25 * 2.5f64.powi(k as i32) / rho.powi(k as i32 + 1)
            }
        })
        .collect();
    let side = |pick: fn(&SupNormEstimate) -> f64| -> f64 {
        norms.iter().zip(&coeffs).map(|(e, c)| c * pick(e)).sum()
    };
    let (rhs_lower, rhs_upper) = (side(|e| e.lower), side(|e| e.upper));
    let (lhs_lower, lhs_upper) = (hn.lower * factor, hn.upper * factor);
    Ok(HnsetOutcome {
        n,
        rho,
        q_abs,
        lhs_lower,
        lhs_upper,
        rhs_lower,
        rhs_upper,
        bracket_ok: lhs_lower <= rhs_upper,
        sampled_ok: lhs_lower <= rhs_lower * (1.0 + HNSET_SAMPLED_TOL),
    })
}

/// `(3/2)^2 + (3/2)^3 sum_{i=0}^{n-m-2} (5/2)^i = (3/2)^2 (5/2)^(n-m-1)`, exactly, for `m < n`.
pub fn coefficient_identity_check(n: u32, m: u32) -> Result<bool> {
    if m >= n {
        return Err(Error::InvalidParameter(format!("need m < n, got m = {m}, n = {n}")));
    }
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let (a, b) = (r(3, 2), r(5, 2));
    let mut sum = BigRational::zero();
    let mut p = BigRational::one();
    for _ in 0..(n - m).saturating_sub(1) {
        sum += &p;
        p *= &b;
    }
    let lhs = &a * &a + &a * &a * &a * sum;
    let rhs = &a * &a * p;
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MajorizationPoint {
    pub rho: f64,
    /// `|a|_(rho, rho |q|^(1/2))`, midpoint.
    pub seminorm: f64,
    /// `||(W(f), W(g))||~_rho`, midpoint.
    pub tilde: f64,
    pub ratio: f64,
}

/// Ratio of `|a|_(rho, rho |q|^(1/2))` to the `W`-sequence norm at each `rho`,
/// pairs split with halved constants. Only reported; no constant is asserted.
pub fn majorization_ratios(
    a: &OmegaUElement,
    q: Complex64,
    rhos: &[f64],
    samples: usize,
) -> Result<Vec<MajorizationPoint>> {
    let seq = to_pairs(a, PairConvention::RPhiXY);
    let pairs: Vec<(Poly<Complex64>, Poly<Complex64>)> = seq
        .entries
        .iter()
        .map(|(f, g)| Ok((f.specialize(&q)?, g.specialize(&q)?)))
        .collect::<Result<_>>()?;
    let fs: Vec<_> = pairs.iter().map(|p| p.0.clone()).collect();
    let gs: Vec<_> = pairs.iter().map(|p| p.1.clone()).collect();
    let (wf, wg) = (wn_sequence(&fs, &q), wn_sequence(&gs, &q));
    let ws: Vec<_> = (0..wf.len().max(wg.len()))
        .map(|n| {
            let at = |w: &[Poly<Complex64>]| w.get(n).cloned().unwrap_or_else(Poly::zero);
            (at(&wf), at(&wg))
        })
        .collect();
    let q_abs = q.norm();
    rhos.iter()
        .map(|&rho| {
            let s = plane_seminorm(&pairs, rho, rho * q_abs.sqrt(), q_abs, samples)?.midpoint();
            let t = tilde_norm(&ws, rho, samples)?.midpoint();
            Ok(MajorizationPoint {
                rho,
                seminorm: s,
                tilde: t,
                ratio: if t > 0.0 { s / t } else { f64::NAN },
            })
        })
        .collect()
}
