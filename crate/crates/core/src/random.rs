//! Seeded generators for randomized checks.
//!
//! One base seed fans out to independent streams, so every check can be
//! replayed from `(seed, stream)` alone.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::omega::{OmegaMonomial, OmegaUElement};
use crate::plane::PlaneElement;
use crate::poly::Poly;
use crate::scalar::{FloatScalar, GaussianRational, QScalar};

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `a/b + (c/d) i` with `|a|, |c| <= 4`, `1 <= b, d <= 3`.
pub fn gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    GaussianRational::complex(
        (rng.gen_range(-4..=4), rng.gen_range(1..=3)),
        (rng.gen_range(-4..=4), rng.gen_range(1..=3)),
    )
}

pub fn nonzero_gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    loop {
        let g = gaussian(rng);
        if !num_traits::Zero::is_zero(&g) {
            return g;
        }
    }
}

/// Real rational `a/b` with `1 <= a <= 6`, `1 <= b <= 4`.
pub fn positive_rational<R: Rng>(rng: &mut R) -> num_rational::BigRational {
    num_rational::BigRational::new(rng.gen_range(1..=6).into(), rng.gen_range(1..=4).into())
}

/// Small Gaussian coefficient times `q^e` with `e` in `[-2, 2]`.
pub fn coeff<R: Rng>(rng: &mut R) -> QScalar {
    QScalar::monomial(nonzero_gaussian(rng), rng.gen_range(-2i64..=2))
}

/// Element with total degree `<= max_deg` and between 1 and `max_terms` terms.
pub fn plane_element<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> PlaneElement {
    let n = rng.gen_range(1..=max_terms.max(1));
    PlaneElement::from_terms((0..n).map(|_| {
        let total = rng.gen_range(0..=max_deg);
        let k = rng.gen_range(0..=total);
        ((k, total - k), coeff(rng))
    }))
}

pub fn omega_element<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> OmegaUElement {
    let n = rng.gen_range(1..=max_terms.max(1));
    OmegaUElement::from_terms((0..n).map(|_| {
        let j = rng.gen_range(0..=max_deg);
        let i = rng.gen_range(1..=max_deg.max(1));
        let m = match rng.gen_range(0..3) {
            0 => OmegaMonomial::U(j),
            1 => OmegaMonomial::X(i, j),
            _ => OmegaMonomial::Y(i, j),
        };
        (m, coeff(rng))
    }))
}

/// Polynomial of degree `<= deg` with Gaussian coefficients, all constant in `q`.
pub fn exact_poly<R: Rng>(rng: &mut R, deg: usize) -> Poly<GaussianRational> {
    Poly::new((0..=deg).map(|_| gaussian(rng)).collect())
}

/// Polynomial of degree `<= deg` with coefficients uniform in the unit square scaled by `scale`.
pub fn float_poly<F: FloatScalar, R: Rng>(rng: &mut R, deg: usize, scale: f64) -> Poly<Complex<F>> {
    Poly::new(
        (0..=deg)
            .map(|_| {
                let re = rng.gen_range(-1.0..=1.0) * scale;
                let im = rng.gen_range(-1.0..=1.0) * scale;
                Complex::new(F::from_f64(re).unwrap(), F::from_f64(im).unwrap())
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = plane_element(&mut rng_for(7, 1), 6, 8);
        let b = plane_element(&mut rng_for(7, 1), 6, 8);
        let c = plane_element(&mut rng_for(7, 2), 6, 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn respects_degree_bound() {
        let mut rng = rng_for(1, 0);
        for _ in 0..50 {
            let a = plane_element(&mut rng, 6, 8);
            assert!(a.total_degree().unwrap_or(0) <= 6);
            assert!(a.num_terms() <= 8);
        }
    }
}
