//! Seminorm values: exact sums of square roots with a float bracket.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::scalar::{fmt_rational, rat_to_float, Magnitude};

/// Trial-division bound used when extracting square factors from radicands.
const TRIAL_BOUND: u32 = 1000;

/// Relative slack applied to every float bracket, per accumulated term.
const ROUNDING_SLACK: f64 = 4.0 * f64::EPSILON;

/// `sum_r m_r sqrt(r)` with rational `m_r` and square-free integer radicands `r`.
///
/// Square roots of distinct square-free integers are linearly independent
/// over Q, so structural equality is equality of real numbers as long as the
/// radicands are fully reduced. Reduction strips square factors found by
/// trial division below `TRIAL_BOUND` plus a final perfect-square test; a
/// radicand that escapes it can only make equal values compare unequal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SqrtSum {
    terms: BTreeMap<BigInt, BigRational>,
}

/// `n = s^2 r` with `r` as square-free as the trial bound allows.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut r = n.clone();
    let mut s = BigInt::one();
    for p in 2..=TRIAL_BOUND {
        let pp = BigInt::from(p * p);
        if pp > r {
            break;
        }
        while (&r % &pp).is_zero() {
            r /= &pp;
            s *= p;
        }
    }
    let root = r.sqrt();
    if &root * &root == r {
        return (s * root, BigInt::one());
    }
    (s, r)
}

impl SqrtSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(v: BigRational) -> Self {
        let mut out = Self::zero();
        out.push(BigInt::one(), v);
        out
    }

    fn push(&mut self, radicand: BigInt, mult: BigRational) {
        if mult.is_zero() {
            return;
        }
        let sum = match self.terms.get(&radicand) {
            Some(m) => m + &mult,
            None => mult,
        };
        if sum.is_zero() {
            self.terms.remove(&radicand);
        } else {
            self.terms.insert(radicand, sum);
        }
    }

    /// Adds `sqrt(modsq) * mult`; `modsq` must be nonnegative.
    pub fn add_sqrt(&mut self, modsq: &BigRational, mult: &BigRational) {
        assert!(!modsq.is_negative(), "square root of a negative rational");
        if modsq.is_zero() || mult.is_zero() {
            return;
        }
        // sqrt(a/b) = sqrt(ab) / b
        let (a, b) = (modsq.numer(), modsq.denom());
        let (s, r) = split_square(&(a * b));
        let m = mult * BigRational::new(s, b.clone());
        self.push(r, m);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, m) in &other.terms {
            out.push(r.clone(), m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (r1, m1) in &self.terms {
            for (r2, m2) in &other.terms {
                let (s, r) = split_square(&(r1 * r2));
                out.push(r, m1 * m2 * BigRational::from_integer(s));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (r, m) in &self.terms {
            out.push(r.clone(), m * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigRational)> {
        self.terms.iter()
    }

    /// Float bracket `[lower, upper]` around the exact value.
    pub fn bracket(&self) -> (f64, f64) {
        if let Some(v) = self.as_rational() {
            let f = rat_to_float::<f64>(&v);
            return widen(f, 1);
        }
        let mut s = 0.0;
        for (r, m) in &self.terms {
            s += rat_to_float::<f64>(m) * r.to_f64().unwrap_or(f64::INFINITY).sqrt();
        }
        widen(s, 2 * self.terms.len() + 1)
    }

    /// Exact comparison when both sides are rational or structurally equal,
    /// bracket comparison otherwise; `None` when the brackets overlap.
    pub fn partial_cmp_value(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Some(a.cmp(&b));
        }
        let (al, au) = self.bracket();
        let (bl, bu) = other.bracket();
        if au < bl {
            Some(Ordering::Less)
        } else if bu < al {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

fn widen(v: f64, terms: usize) -> (f64, f64) {
    let slack = v.abs() * ROUNDING_SLACK * terms as f64;
    ((v - slack).max(0.0), v + slack)
}

impl fmt::Display for SqrtSum {
    /// `3/2 + 2*sqrt(5)`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, m)| {
                if r.is_one() {
                    fmt_rational(m)
                } else if m.is_one() {
                    format!("sqrt({r})")
                } else {
                    format!("{}*sqrt({r})", fmt_rational(m))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A seminorm value: exact when every modulus was exact, always with a float bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct SeminormValue {
    pub exact: Option<SqrtSum>,
    pub lower: f64,
    pub upper: f64,
}

impl SeminormValue {
    pub fn from_exact(v: SqrtSum) -> Self {
        let (lower, upper) = v.bracket();
        SeminormValue {
            exact: Some(v),
            lower,
            upper,
        }
    }

    pub fn interval(lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= upper, "empty interval [{lower}, {upper}]");
        SeminormValue {
            exact: None,
            lower,
            upper,
        }
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    /// A failed comparison is sound: `false` only if `self > other` certainly.
    pub fn possibly_le(&self, other: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            if let Some(o) = a.partial_cmp_value(b) {
                return o != Ordering::Greater;
            }
        }
        self.lower <= other.upper
    }

    /// A passed comparison is sound: `true` only if `self <= other` certainly.
    pub fn certainly_le(&self, other: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            if let Some(o) = a.partial_cmp_value(b) {
                return o != Ordering::Greater;
            }
        }
        self.upper <= other.lower
    }

    /// Exact equality when both are exact, else relative agreement of midpoints within `rel`.
    pub fn agrees_with(&self, other: &Self, rel: f64) -> bool {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            return a == b;
        }
        let (a, b) = (self.midpoint(), other.midpoint());
        (a - b).abs() <= rel * a.abs().max(b.abs())
    }

    /// Product of two values, used on the right side of submultiplicativity checks.
    pub fn mul(&self, other: &Self) -> Self {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Self::from_exact(a.mul(b)),
            _ => {
                let (l, u) = (self.lower * other.lower, self.upper * other.upper);
                let (l, _) = widen(l, 1);
                let (_, u) = widen(u, 1);
                Self::interval(l, u)
            }
        }
    }
}

impl fmt::Display for SeminormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "[{:e}, {:e}]", self.lower, self.upper),
        }
    }
}

impl Serialize for SeminormValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SeminormValue", 3)?;
        st.serialize_field("exact", &self.exact.as_ref().map(|v| v.to_string()))?;
        st.serialize_field("lower", &self.lower)?;
        st.serialize_field("upper", &self.upper)?;
        st.end()
    }
}

/// Accumulates `sum |c_i| w_i`, exactly while every `|c_i|^2` is exact.
#[derive(Clone, Debug)]
pub struct NormAccumulator {
    exact: Option<SqrtSum>,
    sum: f64,
    terms: usize,
}

impl Default for NormAccumulator {
    fn default() -> Self {
        NormAccumulator {
            exact: Some(SqrtSum::zero()),
            sum: 0.0,
            terms: 0,
        }
    }
}

impl NormAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add<S: Magnitude>(&mut self, c: &S, weight: &BigRational) {
        match (&mut self.exact, c.modulus_sqr_exact()) {
            (Some(acc), Some(m)) => acc.add_sqrt(&m, weight),
            _ => self.exact = None,
        }
        self.sum += c.modulus_f64() * rat_to_float::<f64>(weight);
        self.terms += 1;
    }

    pub fn finish(self) -> SeminormValue {
        match self.exact {
            Some(v) => SeminormValue::from_exact(v),
            None => {
                // one rounding for each modulus, weight, product and sum
                let (l, u) = widen(self.sum, 4 * self.terms + 1);
                SeminormValue::interval(l, u)
            }
        }
    }
}

/// Exact rational image of a finite positive float.
pub fn rational_from_f64(v: f64) -> Option<BigRational> {
    BigRational::from_float(v)
}
