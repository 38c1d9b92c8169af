//! The operators `W_n` on finite sequences of one-variable polynomials.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub(crate) fn powu<S: Scalar>(base: &S, e: u64) -> S {
    num_traits::pow(base.clone(), e as usize)
}

pub(crate) fn tri(n: usize) -> u64 {
    (n as u64) * (n as u64 + 1) / 2
}

/// `W_n(h)(z) = h_n(z) z^n q^(n(n+1)/2) + sum_{k=0..=n} [t^(n-k)]h_k z^k q^(k(k+1)/2)`.
///
/// The `k = n` term of the sum is `h_n(0) z^n q^(n(n+1)/2)`, so the two
/// leading contributions combine to `(h_n(z) + h_n(0)) z^n q^(n(n+1)/2)`.
pub fn wn_paper<S: Scalar>(h_bar: &[Poly<S>], q: &S, n: usize) -> Result<Poly<S>> {
    if n >= h_bar.len() {
        return Err(Error::IndexOutOfRange { index: n, len: h_bar.len() });
    }
    let mut out = h_bar[n].shift_up(n).scale(&powu(q, tri(n)));
    for (k, h) in h_bar.iter().enumerate().take(n + 1) {
        let c = h.coeff(n - k) * powu(q, tri(k));
        out = out.add(&Poly::monomial(c, k));
    }
    Ok(out)
}

/// Every `W_n` that can be nonzero: `n <= max_k (k + deg h_k)`, the sequence
/// being extended by zeros.
pub fn wn_sequence<S: Scalar>(h_bar: &[Poly<S>], q: &S) -> Vec<Poly<S>> {
    let len = h_bar
        .iter()
        .enumerate()
        .filter_map(|(k, h)| h.degree().map(|d| k + d + 1))
        .max()
        .unwrap_or(0);
    let mut padded = h_bar.to_vec();
    padded.resize(len.max(h_bar.len()), Poly::zero());
    (0..len)
        .map(|n| wn_paper(&padded, q, n).expect("index in range"))
        .collect()
}
