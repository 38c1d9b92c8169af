//! Laurent polynomials in the formal parameter `q` over the Gaussian rationals.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gaussian::GaussianRational;
use super::numeric::{check_finite, pow_big, FloatScalar};
use crate::error::{Error, Result};

/// `sum_e c_e q^e`, exponents arbitrary-precision and possibly negative.
///
/// Zero coefficients are never stored, so the empty map is zero and
/// structural equality is equality of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QScalar {
    terms: BTreeMap<BigInt, GaussianRational>,
}

impl QScalar {
    /// The parameter `q` itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: impl Into<BigInt>) -> Self {
        Self::monomial(GaussianRational::one(), e)
    }

    pub fn monomial(c: GaussianRational, e: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e.into(), c);
        }
        QScalar { terms }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, GaussianRational)>) -> Self {
        let mut out = QScalar::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &BigInt) -> GaussianRational {
        self.terms.get(e).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn min_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    /// The single term `(c, e)` if this is a nonzero monomial `c q^e`.
    pub fn as_monomial(&self) -> Option<(&GaussianRational, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    /// The constant value if no power of `q` other than `q^0` occurs.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&BigInt::zero()).cloned(),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, e: BigInt, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: &BigInt) -> Self {
        QScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return QScalar::zero();
        }
        QScalar {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QScalar::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse, available only for nonzero monomials `c q^e`.
    pub fn inv(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((c, e)) => Ok(QScalar::monomial(c.inv().expect("stored coefficients are nonzero"), -e)),
            None => Err(Error::NotInvertible(format!("({self}) is not a monomial in q"))),
        }
    }

    /// Evaluates at a concrete complex `q`.
    pub fn eval<F: FloatScalar>(&self, q: Complex<F>) -> Result<Complex<F>> {
        check_finite(&q)?;
        let mut acc = Complex::<F>::zero();
        for (e, c) in &self.terms {
            acc = acc + c.to_complex::<F>() * pow_big(q, e)?;
        }
        Ok(acc)
    }

    /// Evaluates exactly at a Gaussian-rational `q`.
    pub fn eval_exact(&self, q: &GaussianRational) -> Result<GaussianRational> {
        if q.is_zero() && self.min_exponent().is_some_and(|e| e.is_negative()) {
            return Err(Error::ZeroQ);
        }
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            acc = acc + c * &q.pow_big(e)?;
        }
        Ok(acc)
    }

    /// Substitutes `q -> value`. Negative exponents require `value` to be a monomial.
    pub fn substitute(&self, value: &QScalar) -> Result<QScalar> {
        if let Some((c, e)) = value.as_monomial() {
            if c.is_one() && e.is_one() {
                return Ok(self.clone());
            }
        }
        let inverse = if self.min_exponent().is_some_and(|e| e.is_negative()) {
            if value.is_zero() {
                return Err(Error::ZeroQ);
            }
            Some(value.inv()?)
        } else {
            None
        };
        let mut acc = QScalar::zero();
        for (e, c) in &self.terms {
            let n = e
                .abs()
                .to_u64()
                .ok_or_else(|| Error::InvalidParameter(format!("exponent {e} too large")))?;
            let p = if e.is_negative() {
                inverse.as_ref().expect("computed above").pow(n)
            } else {
                value.pow(n)
            };
            acc = acc + p.scale(c);
        }
        Ok(acc)
    }
}

impl<'a> Add<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        let mut out = QScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

forward_owned_binop!(QScalar, Add, add);
forward_owned_binop!(QScalar, Sub, sub);
forward_owned_binop!(QScalar, Mul, mul);

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::constant(GaussianRational::one())
    }
}

impl From<GaussianRational> for QScalar {
    fn from(c: GaussianRational) -> Self {
        QScalar::constant(c)
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::constant(GaussianRational::from_integer(n))
    }
}

fn fmt_q_power(e: &BigInt) -> Option<String> {
    if e.is_zero() {
        None
    } else if e.is_one() {
        Some("q".into())
    } else {
        Some(format!("q^{e}"))
    }
}

/// Text of a single term `c q^e`, with a leading `-` when the coefficient is a negative real.
pub(crate) fn fmt_term(c: &GaussianRational, e: &BigInt) -> String {
    let qp = fmt_q_power(e);
    match qp {
        None => c.to_string(),
        Some(qp) => {
            if c.is_one() {
                qp
            } else if (-c).is_one() {
                format!("-{qp}")
            } else if c.is_compound() {
                format!("({c})*{qp}")
            } else {
                format!("{c}*{qp}")
            }
        }
    }
}

pub(crate) fn join_signed(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (i, p) in parts.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    out
}

impl QScalar {
    /// Text usable as a multiplicative factor in front of a monomial.
    /// Returns `None` for the coefficient `1`, `Some("-")` for `-1`.
    pub(crate) fn factor_text(&self) -> Option<String> {
        if self.is_one() {
            return None;
        }
        if (-self).is_one() {
            return Some("-".into());
        }
        match self.as_monomial() {
            Some((c, e)) => Some(fmt_term(c, e)),
            None => Some(format!("({self})")),
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = join_signed(self.terms.iter().map(|(e, c)| fmt_term(c, e)));
        write!(f, "{s}")
    }
}

impl serde::Serialize for QScalar {
    /// Serialized as its canonical text.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for QScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::expr::parse_qscalar(&s).map_err(serde::de::Error::custom)
    }
}
