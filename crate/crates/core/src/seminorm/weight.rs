//! Submultiplicative weights `omega_n` and the weighted `l_1` norms built from them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};
use serde::{Deserialize, Serialize};

use super::value::{NormAccumulator, SeminormValue};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Magnitude, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WeightSpec {
    /// `omega_n = 1`.
    Trivial,
    /// `omega_n = s^(n^2)` with rational `0 < s < 1`.
    Bs { s: BigRational },
    /// An explicit finite table `omega_0, omega_1, ...`.
    Custom { table: Vec<BigRational> },
}

impl WeightSpec {
    pub fn bs(s: BigRational) -> Result<Self> {
        if !s.is_positive() || s >= BigRational::one() {
            return Err(Error::InvalidParameter(format!(
                "B_s weight needs 0 < s < 1, got {s}"
            )));
        }
        Ok(WeightSpec::Bs { s })
    }

    pub fn custom(table: Vec<BigRational>) -> Result<Self> {
        if table.iter().any(|w| w.is_negative()) {
            return Err(Error::InvalidParameter("weights must be nonnegative".into()));
        }
        Ok(WeightSpec::Custom { table })
    }

    /// `omega_n`, exact.
    pub fn weight(&self, n: usize) -> Result<BigRational> {
        match self {
            WeightSpec::Trivial => Ok(BigRational::one()),
            WeightSpec::Bs { s } => Ok(Pow::pow(s, BigInt::from(n) * BigInt::from(n))),
            WeightSpec::Custom { table } => table.get(n).cloned().ok_or(Error::IndexOutOfRange {
                index: n,
                len: table.len(),
            }),
        }
    }
}

/// True iff `omega_(m+n) <= omega_m omega_n` for all `m, n <= big_n` (within the table for custom weights).
///
/// For `B_s` the inequality is divided by `s^(m^2+n^2) > 0`, leaving
/// `s^(2mn) <= 1`; with `s = a/b` this is `a^(2mn) <= b^(2mn)`, decided on
/// exact integers with the powers walked in increasing order.
pub fn weight_submult_check(w: &WeightSpec, big_n: usize) -> bool {
    match w {
        WeightSpec::Trivial => true,
        WeightSpec::Bs { s } => {
            let mut exps: Vec<usize> = (0..=big_n)
                .flat_map(|m| (0..=big_n).map(move |n| 2 * m * n))
                .collect();
            exps.sort_unstable();
            exps.dedup();
            let (a, b) = (s.numer().abs(), s.denom().clone());
            let (mut pa, mut pb) = (BigInt::one(), BigInt::one());
            let mut cur = 0;
            for d in exps {
                while cur < d {
                    pa *= &a;
                    pb *= &b;
                    cur += 1;
                }
                if pa > pb {
                    return false;
                }
            }
            true
        }
        WeightSpec::Custom { table } => {
            for m in 0..=big_n {
                for n in 0..=big_n {
                    let (Some(wm), Some(wn), Some(wmn)) =
                        (table.get(m), table.get(n), table.get(m + n))
                    else {
                        continue;
                    };
                    if wmn > &(wm * wn) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// `||a||_(r, omega) = sum |alpha_n| r^n omega_n`.
pub fn cw_norm<S: Scalar + Magnitude>(
    series: &Poly<S>,
    r: &BigRational,
    w: &WeightSpec,
) -> Result<SeminormValue> {
    if !r.is_positive() {
        return Err(Error::InvalidParameter(format!("r must be positive, got {r}")));
    }
    let mut acc = NormAccumulator::new();
    let mut rn = BigRational::one();
    for (n, c) in series.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc.add(c, &(&rn * w.weight(n)?));
        }
        rn *= r;
    }
    Ok(acc.finish())
}
