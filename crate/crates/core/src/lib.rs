//! Exact and numeric computation kit for the quantum plane `xy = q yx`.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`]: Gaussian rationals, Laurent polynomials in `q`, complex floats.
//! * [`plane`]: normal-form arithmetic in the `y^k x^l` basis.
//! * [`omega`]: the `R(Omega) (x) C[u]` basis with `u = xy`, pair sequences and
//!   the `beta`/`gamma` parametrization.
//! * [`seminorm`]: weighted power-series norms, sup-norms and the two-index
//!   seminorm families on the plane.
//! * [`rep`]: truncated weighted-shift representations and their first
//!   row/column data.
//! * [`verify`]: the `W_n` operators and the estimate checkers built on them.
//! * [`expr`]: a small expression language for elements of the plane.
//!
//! Everything that touches matrices or polynomials is generic over the scalar
//! type; see the aliases below for the common instantiations.

#[macro_use]
mod macros;

pub mod error;
pub mod expr;
pub mod omega;
pub mod plane;
pub mod poly;
pub mod random;
pub mod rep;
pub mod scalar;
pub mod seminorm;
pub mod verify;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{Error, Result};
pub use omega::{BetaGammaForm, OmegaUElement, PairConvention, PairSequence};
pub use plane::{Monomial, PlaneElement};
pub use poly::Poly;
pub use rep::{RepFamily, RepSpec, TruncatedOperator};
pub use scalar::{FloatScalar, GaussianRational, Magnitude, NumericScalar, QScalar, Scalar, Specialize};
pub use seminorm::{SeminormValue, SupNormEstimate, WeightSpec};

/// Operators over Laurent polynomials in a symbolic `q`.
pub type ExactOperator = TruncatedOperator<QScalar>;
/// Operators at a fixed complex `q`, double precision.
pub type FloatOperator = TruncatedOperator<num_complex::Complex64>;
/// Operators at a fixed complex `q`, single precision.
pub type Float32Operator = TruncatedOperator<num_complex::Complex32>;
/// Polynomials whose coefficients still depend on `q`.
pub type ExactPoly = Poly<QScalar>;
/// Polynomials with double-precision complex coefficients.
pub type FloatPoly = Poly<num_complex::Complex64>;
/// Representation data with `q` symbolic.
pub type ExactRepSpec = RepSpec<QScalar>;
/// Representation data at a fixed complex `q`.
pub type FloatRepSpec = RepSpec<num_complex::Complex64>;
