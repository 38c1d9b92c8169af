//! Coefficient rings.
//!
//! Two modes run through the whole crate: exact ([`QScalar`] with `q` symbolic,
//! or [`GaussianRational`] at a rational `q`) and floating point
//! ([`NumericScalar`] at a fixed complex `q`). Generic code is written against
//! [`Scalar`] and pulls exact coefficients into the active mode through
//! [`Specialize`].

mod gaussian;
mod numeric;
mod qscalar;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use gaussian::GaussianRational;
pub use numeric::{check_finite, pow_big, FloatScalar, NumericScalar};
pub use qscalar::QScalar;

pub(crate) use gaussian::{fmt_rational, rat_to_float};
pub(crate) use qscalar::join_signed;

use crate::error::Result;

/// A commutative ring with unit, as used for matrix entries and polynomial coefficients.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Exact zero test in exact mode, `|z| <= tol` in float mode.
    fn is_negligible(&self, tol: f64) -> bool;
}

impl Scalar for QScalar {
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl Scalar for GaussianRational {
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl<F: FloatScalar> Scalar for Complex<F> {
    fn is_negligible(&self, tol: f64) -> bool {
        self.norm().to_f64().unwrap_or(f64::INFINITY) <= tol
    }
}

/// Scalars that exact `q`-dependent coefficients can be mapped into.
pub trait Specialize: Scalar {
    /// Image of `c` under the substitution `q -> q_value`.
    fn specialize(c: &QScalar, q_value: &Self) -> Result<Self>;

    fn from_gaussian(c: &GaussianRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_gaussian(&GaussianRational::from_integer(n))
    }
}

impl Specialize for QScalar {
    fn specialize(c: &QScalar, q_value: &Self) -> Result<Self> {
        c.substitute(q_value)
    }

    fn from_gaussian(c: &GaussianRational) -> Self {
        QScalar::constant(c.clone())
    }
}

impl Specialize for GaussianRational {
    fn specialize(c: &QScalar, q_value: &Self) -> Result<Self> {
        c.eval_exact(q_value)
    }

    fn from_gaussian(c: &GaussianRational) -> Self {
        c.clone()
    }
}

impl<F: FloatScalar> Specialize for Complex<F> {
    fn specialize(c: &QScalar, q_value: &Self) -> Result<Self> {
        c.eval(*q_value)
    }

    fn from_gaussian(c: &GaussianRational) -> Self {
        c.to_complex()
    }
}

/// Scalars with a modulus, so that seminorms can be evaluated on them.
pub trait Magnitude {
    /// `|z|` as a float (rounded).
    fn modulus_f64(&self) -> f64;

    /// `|z|^2` exactly, when the scalar is exact.
    fn modulus_sqr_exact(&self) -> Option<BigRational>;
}

impl Magnitude for GaussianRational {
    fn modulus_f64(&self) -> f64 {
        self.norm_sqr().to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    fn modulus_sqr_exact(&self) -> Option<BigRational> {
        Some(self.norm_sqr())
    }
}

impl<F: FloatScalar> Magnitude for Complex<F> {
    fn modulus_f64(&self) -> f64 {
        self.norm().to_f64().unwrap_or(f64::INFINITY)
    }

    fn modulus_sqr_exact(&self) -> Option<BigRational> {
        None
    }
}
