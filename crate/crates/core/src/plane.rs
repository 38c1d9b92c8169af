//! Normal-form arithmetic in the quantum plane `C<x, y> / (xy - q yx)`.
//!
//! Elements are stored in the basis `y^k x^l` (all `y` letters to the left).
//! Moving `x^l` to the right past `y^k'` costs `q^(l k')`, which is the whole
//! multiplication table.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{join_signed, GaussianRational, QScalar};

/// Exponent pair `(k, l)` of the normal-form monomial `y^k x^l`.
pub type Monomial = (u32, u32);

/// Product of two normal-form monomials: `(y^k x^l)(y^k' x^l') = q^(l k') y^(k+k') x^(l+l')`.
pub fn monomial_mul(m1: Monomial, m2: Monomial) -> (QScalar, Monomial) {
    let swaps = BigInt::from(m1.1) * BigInt::from(m2.0);
    (QScalar::q_pow(swaps), (m1.0 + m2.0, m1.1 + m2.1))
}

/// `n (n + 1) / 2` as an exact integer.
pub fn triangular(n: u64) -> BigInt {
    BigInt::from(n) * BigInt::from(n + 1) / 2u32
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PlaneElement {
    terms: BTreeMap<Monomial, QScalar>,
}

impl PlaneElement {
    pub fn monomial(c: QScalar, k: u32, l: u32) -> Self {
        let mut out = PlaneElement::zero();
        out.add_term((k, l), &c);
        out
    }

    pub fn x() -> Self {
        Self::monomial(QScalar::one(), 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(QScalar::one(), 1, 0)
    }

    /// `u = xy = q yx`.
    pub fn u() -> Self {
        Self::monomial(QScalar::q(), 1, 1)
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, QScalar)>) -> Self {
        let mut out = PlaneElement::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    /// Terms in increasing `(k, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient `alpha_{kl}` of `y^k x^l`.
    pub fn coeff(&self, k: u32, l: u32) -> QScalar {
        self.terms.get(&(k, l)).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(k, l)| k + l).max()
    }

    pub fn max_x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.1).max().unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.0).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PlaneElement::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The constant coefficient if the element is a multiple of `1`.
    pub fn as_scalar(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }
}

/// Checks `(xy)^n = q^(n(n+1)/2) y^n x^n` exactly.
pub fn sile_identity_check(n: u32) -> bool {
    let lhs = (PlaneElement::x() * PlaneElement::y()).pow(n);
    let rhs = PlaneElement::monomial(QScalar::q_pow(triangular(n as u64)), n, n);
    lhs == rhs
}

impl<'a> Add<&'a PlaneElement> for &'a PlaneElement {
    type Output = PlaneElement;
    fn add(self, rhs: &PlaneElement) -> PlaneElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a PlaneElement> for &'a PlaneElement {
    type Output = PlaneElement;
    fn sub(self, rhs: &PlaneElement) -> PlaneElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a PlaneElement> for &'a PlaneElement {
    type Output = PlaneElement;
    fn mul(self, rhs: &PlaneElement) -> PlaneElement {
        let mut out = PlaneElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let (qc, m) = monomial_mul(*m1, *m2);
                out.add_term(m, &(&(c1 * c2) * &qc));
            }
        }
        out
    }
}

impl Neg for &PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        PlaneElement::from_terms(self.terms.iter().map(|(m, c)| (*m, -c)))
    }
}

impl Neg for PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        -&self
    }
}

forward_owned_binop!(PlaneElement, Add, add);
forward_owned_binop!(PlaneElement, Sub, sub);
forward_owned_binop!(PlaneElement, Mul, mul);

impl Zero for PlaneElement {
    fn zero() -> Self {
        PlaneElement {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PlaneElement {
    fn one() -> Self {
        PlaneElement::scalar(QScalar::one())
    }
}

impl From<QScalar> for PlaneElement {
    fn from(c: QScalar) -> Self {
        PlaneElement::scalar(c)
    }
}

impl From<GaussianRational> for PlaneElement {
    fn from(c: GaussianRational) -> Self {
        PlaneElement::scalar(QScalar::constant(c))
    }
}

pub(crate) fn fmt_letter(letter: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(letter.to_string()),
        _ => Some(format!("{letter}^{e}")),
    }
}

/// `coeff*word`, where `word` is a `*`-joined product of letters (possibly empty).
pub(crate) fn fmt_coeff_times(c: &QScalar, word: &[String]) -> String {
    let w = word.join("*");
    if w.is_empty() {
        return match c.factor_text() {
            Some(t) if t == "-" => "-1".into(),
            Some(t) if t.starts_with('(') && c.as_monomial().is_none() => c.to_string(),
            Some(t) => t,
            None => "1".into(),
        };
    }
    match c.factor_text() {
        None => w,
        Some(t) if t == "-" => format!("-{w}"),
        Some(t) => format!("{t}*{w}"),
    }
}

impl fmt::Display for PlaneElement {
    /// Canonical text, terms sorted by `(k, l)`, e.g. `q^3*y^2*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|((k, l), c)| {
            let word: Vec<String> = [fmt_letter("y", *k), fmt_letter("x", *l)]
                .into_iter()
                .flatten()
                .collect();
            fmt_coeff_times(c, &word)
        });
        write!(f, "{}", join_signed(parts))
    }
}

#[derive(Serialize, Deserialize)]
struct PlaneTerm {
    k: u32,
    l: u32,
    coeff: QScalar,
}

impl Serialize for PlaneElement {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        let terms: Vec<PlaneTerm> = self
            .terms
            .iter()
            .map(|(&(k, l), c)| PlaneTerm {
                k,
                l,
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlaneElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<PlaneTerm>::deserialize(d)?;
        Ok(PlaneElement::from_terms(
            terms.into_iter().map(|t| ((t.k, t.l), t.coeff)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{arb_plane, normalize_word};
    use proptest::prelude::*;

    fn q(e: i64) -> QScalar {
        QScalar::q_pow(e)
    }

    #[test]
    fn monomial_mul_examples() {
        assert_eq!(monomial_mul((0, 1), (1, 0)), (q(1), (1, 1)));
        assert_eq!(monomial_mul((1, 0), (0, 1)), (q(0), (1, 1)));
        assert_eq!(monomial_mul((1, 1), (1, 2)), (q(1), (2, 3)));
        // letter rewriting of y x y x x
        assert_eq!(normalize_word("yxyxx"), PlaneElement::monomial(q(1), 2, 3));
    }

    #[test]
    fn plane_mul_examples() {
        let (x, y) = (PlaneElement::x(), PlaneElement::y());
        assert_eq!(&x * &y, PlaneElement::monomial(q(1), 1, 1));
        let a = PlaneElement::monomial(q(2), 3, 1) + PlaneElement::y();
        assert_eq!(&a * &PlaneElement::one(), a);
        let xy = &x * &y;
        assert_eq!(&xy * &xy, PlaneElement::monomial(q(3), 2, 2));
    }

    #[test]
    fn plane_pow_examples() {
        let xy = PlaneElement::x() * PlaneElement::y();
        assert_eq!(xy.pow(3), PlaneElement::monomial(q(6), 3, 3));
        assert_eq!(xy.pow(0), PlaneElement::one());
        let yx = PlaneElement::y() * PlaneElement::x();
        assert_eq!(yx.pow(2), PlaneElement::monomial(q(1), 2, 2));
        assert_eq!(yx.pow(2), normalize_word("yxyx"));
        assert_eq!(yx.pow(2), xy.pow(2).scale(&q(-2)));
    }

    #[test]
    fn sile_identity_examples() {
        assert!(sile_identity_check(1));
        assert!(sile_identity_check(2));
        assert!(sile_identity_check(17));
        let p17 = (PlaneElement::x() * PlaneElement::y()).pow(17);
        assert_eq!(p17.coeff(17, 17), q(153));
    }

    #[test]
    fn commutator_identity() {
        let (x, y) = (PlaneElement::x(), PlaneElement::y());
        let xy = &x * &y;
        let lhs = &xy - &(&y * &x);
        let rhs = xy.scale(&(QScalar::one() - q(-1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_canonical() {
        assert_eq!((PlaneElement::x() * PlaneElement::y()).to_string(), "q*y*x");
        let a = PlaneElement::monomial(q(3), 2, 2) - PlaneElement::one()
            + PlaneElement::monomial(QScalar::one() + q(1), 0, 1);
        assert_eq!(a.to_string(), "-1 + (1 + q)*x + q^3*y^2*x^2");
        assert_eq!(PlaneElement::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn associativity(a in arb_plane(6, 8), b in arb_plane(6, 8), c in arb_plane(6, 8)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn degree_additivity(k1 in 0u32..10, l1 in 0u32..10, k2 in 0u32..10, l2 in 0u32..10) {
            let (_, m) = monomial_mul((k1, l1), (k2, l2));
            prop_assert_eq!(m.0 + m.1, k1 + l1 + k2 + l2);
        }

        #[test]
        fn distributivity(a in arb_plane(4, 5), b in arb_plane(4, 5), c in arb_plane(4, 5)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }

    #[test]
    fn sile_identity_up_to_32() {
        for n in 1..=32 {
            assert!(sile_identity_check(n), "n = {n}");
        }
    }
}
