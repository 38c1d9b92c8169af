use std::fmt::{Debug, Display};

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_traits::{Float, FromPrimitive, One, ToPrimitive};

use crate::error::{Error, Result};

/// Real floating-point types usable as the component type of [`NumericScalar`].
pub trait FloatScalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}

/// A complex number at a fixed floating-point precision.
pub type NumericScalar<F = f64> = Complex<F>;

pub fn is_finite<F: FloatScalar>(z: &Complex<F>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub fn check_finite<F: FloatScalar>(z: &Complex<F>) -> Result<()> {
    if is_finite(z) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("non-finite scalar {z}")))
    }
}

/// `z^e` by binary exponentiation over the bits of `e`.
pub fn pow_big<F: FloatScalar>(z: Complex<F>, e: &BigInt) -> Result<Complex<F>> {
    let base = match e.sign() {
        Sign::Minus => {
            if z.re.is_zero() && z.im.is_zero() {
                return Err(Error::ZeroQ);
            }
            z.inv()
        }
        _ => z,
    };
    let mag = e.magnitude();
    let mut acc = Complex::<F>::one();
    let mut sq = base;
    let bits = mag.bits();
    for i in 0..bits {
        if mag.bit(i) {
            acc = acc * sq;
        }
        if i + 1 < bits {
            sq = sq * sq;
        }
    }
    Ok(acc)
}
