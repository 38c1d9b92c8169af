//! The plane viewed as `R(Omega) (x) C[u]` with `u = xy`.
//!
//! The canonical basis is `{u^j, x^i u^j, y^i u^j : i >= 1}`. A normal-form
//! monomial `y^k x^l` converts by pulling out `m = min(k, l)` copies of `u`:
//! `y^m x^m = q^(-m(m+1)/2) u^m`, followed by commuting `u` to the right of
//! the remaining `x` letters with `x u = q u x`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::plane::{fmt_coeff_times, fmt_letter, triangular, PlaneElement};
use crate::poly::Poly;
use crate::scalar::{join_signed, GaussianRational, QScalar};

/// A basis vector of `R(Omega) (x) C[u]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OmegaMonomial {
    /// `u^j`.
    U(u32),
    /// `x^i u^j`, `i >= 1`.
    X(u32, u32),
    /// `y^i u^j`, `i >= 1`.
    Y(u32, u32),
}

impl OmegaMonomial {
    /// Builds `x^i u^j` / `y^i u^j`, collapsing `i = 0` to `u^j`.
    pub fn x(i: u32, j: u32) -> Self {
        if i == 0 {
            OmegaMonomial::U(j)
        } else {
            OmegaMonomial::X(i, j)
        }
    }

    pub fn y(i: u32, j: u32) -> Self {
        if i == 0 {
            OmegaMonomial::U(j)
        } else {
            OmegaMonomial::Y(i, j)
        }
    }

    pub fn u_level(&self) -> u32 {
        match *self {
            OmegaMonomial::U(j) | OmegaMonomial::X(_, j) | OmegaMonomial::Y(_, j) => j,
        }
    }

    /// The normal-form image `c y^k x^l` of this basis vector.
    pub fn to_plane(&self) -> (QScalar, (u32, u32)) {
        match *self {
            OmegaMonomial::U(j) => (QScalar::q_pow(triangular(j as u64)), (j, j)),
            OmegaMonomial::X(i, j) => {
                let e = triangular(j as u64) + BigInt::from(i) * BigInt::from(j);
                (QScalar::q_pow(e), (j, i + j))
            }
            OmegaMonomial::Y(i, j) => (QScalar::q_pow(triangular(j as u64)), (i + j, j)),
        }
    }

    /// Inverse of [`Self::to_plane`]: `y^k x^l = c * (this basis vector)`.
    pub fn from_plane(k: u32, l: u32) -> (QScalar, OmegaMonomial) {
        if k >= l {
            let e = -triangular(l as u64);
            (QScalar::q_pow(e), OmegaMonomial::y(k - l, l))
        } else {
            let e = -(triangular(k as u64) + BigInt::from(l - k) * BigInt::from(k));
            (QScalar::q_pow(e), OmegaMonomial::X(l - k, k))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct OmegaUElement {
    pure_u: BTreeMap<u32, QScalar>,
    x_part: BTreeMap<(u32, u32), QScalar>,
    y_part: BTreeMap<(u32, u32), QScalar>,
}

impl OmegaUElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(OmegaMonomial::U(0), QScalar::one())
    }

    pub fn basis(m: OmegaMonomial, c: QScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (OmegaMonomial, QScalar)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.pure_u.is_empty() && self.x_part.is_empty() && self.y_part.is_empty()
    }

    pub fn add_term(&mut self, m: OmegaMonomial, c: &QScalar) {
        fn bump<K: Ord>(map: &mut BTreeMap<K, QScalar>, k: K, c: &QScalar) {
            let sum = match map.get(&k) {
                Some(old) => old + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                map.remove(&k);
            } else {
                map.insert(k, sum);
            }
        }
        if c.is_zero() {
            return;
        }
        match m {
            OmegaMonomial::U(j) => bump(&mut self.pure_u, j, c),
            OmegaMonomial::X(0, j) | OmegaMonomial::Y(0, j) => bump(&mut self.pure_u, j, c),
            OmegaMonomial::X(i, j) => bump(&mut self.x_part, (i, j), c),
            OmegaMonomial::Y(i, j) => bump(&mut self.y_part, (i, j), c),
        }
    }

    pub fn coeff(&self, m: OmegaMonomial) -> QScalar {
        let found = match m {
            OmegaMonomial::U(j) | OmegaMonomial::X(0, j) | OmegaMonomial::Y(0, j) => self.pure_u.get(&j),
            OmegaMonomial::X(i, j) => self.x_part.get(&(i, j)),
            OmegaMonomial::Y(i, j) => self.y_part.get(&(i, j)),
        };
        found.cloned().unwrap_or_else(QScalar::zero)
    }

    /// All terms: `u^j` first, then `x^i u^j`, then `y^i u^j`, each in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (OmegaMonomial, &QScalar)> {
        self.pure_u
            .iter()
            .map(|(&j, c)| (OmegaMonomial::U(j), c))
            .chain(self.x_part.iter().map(|(&(i, j), c)| (OmegaMonomial::X(i, j), c)))
            .chain(self.y_part.iter().map(|(&(i, j), c)| (OmegaMonomial::Y(i, j), c)))
    }

    pub fn pure_u(&self) -> &BTreeMap<u32, QScalar> {
        &self.pure_u
    }

    pub fn x_part(&self) -> &BTreeMap<(u32, u32), QScalar> {
        &self.x_part
    }

    pub fn y_part(&self) -> &BTreeMap<(u32, u32), QScalar> {
        &self.y_part
    }

    /// Highest power of `u` that occurs, `None` for zero.
    pub fn max_level(&self) -> Option<u32> {
        self.terms().map(|(m, _)| m.u_level()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        Self::from_terms(self.terms().map(|(m, v)| (m, v * c)))
    }
}

/// Rewrites a normal-form element in the `{u^j, x^i u^j, y^i u^j}` basis.
pub fn to_omega(a: &PlaneElement) -> OmegaUElement {
    let mut out = OmegaUElement::zero();
    for (&(k, l), c) in a.terms() {
        let (factor, m) = OmegaMonomial::from_plane(k, l);
        out.add_term(m, &(c * &factor));
    }
    out
}

pub fn from_omega(b: &OmegaUElement) -> PlaneElement {
    PlaneElement::from_terms(b.terms().map(|(m, c)| {
        let (factor, mono) = m.to_plane();
        (mono, c * &factor)
    }))
}

/// Product computed through the normal-form basis.
pub fn omega_mul(a: &OmegaUElement, b: &OmegaUElement) -> OmegaUElement {
    to_omega(&(from_omega(a) * from_omega(b)))
}

/// `q^e` for a signed exponent given as an `i128`.
fn qp(e: i128) -> QScalar {
    QScalar::q_pow(BigInt::from(e))
}

fn tri(n: u32) -> i128 {
    let n = n as i128;
    n * (n + 1) / 2
}

/// Product of two basis vectors using only the level-wise relations
/// `XY = u`, `YX = q^-1 u`, `x u = q u x`, `u y = q y u`.
pub fn omega_monomial_mul_direct(a: OmegaMonomial, b: OmegaMonomial) -> (QScalar, OmegaMonomial) {
    // (letter, power) with power 0 meaning the empty word
    let split = |m: OmegaMonomial| -> (bool, u32, u32) {
        match m {
            OmegaMonomial::U(j) => (true, 0, j),
            OmegaMonomial::X(i, j) => (true, i, j),
            OmegaMonomial::Y(i, j) => (false, i, j),
        }
    };
    let (a_is_x, i, j) = split(a);
    let (b_is_x, k, l) = split(b);
    // move u^j of the left factor across the letters of the right factor
    let mut e: i128 = if b_is_x {
        -(j as i128) * (k as i128)
    } else {
        (j as i128) * (k as i128)
    };
    let (ii, kk) = (i as i128, k as i128);
    let (res_is_x, power, extra_u) = if i == 0 {
        (b_is_x, k, 0)
    } else if k == 0 {
        (a_is_x, i, 0)
    } else if a_is_x == b_is_x {
        (a_is_x, i + k, 0)
    } else if a_is_x {
        // x^i y^k
        if i >= k {
            e += kk * (kk - 1) / 2;
            (true, i - k, k)
        } else {
            e += ii * (ii - 1) / 2 + ii * (kk - ii);
            (false, k - i, i)
        }
    } else if i >= k {
        // y^i x^k
        e -= tri(k);
        (false, i - k, k)
    } else {
        e -= tri(i) + ii * (kk - ii);
        (true, k - i, i)
    };
    let level = j + l + extra_u;
    let m = if res_is_x {
        OmegaMonomial::x(power, level)
    } else {
        OmegaMonomial::y(power, level)
    };
    (qp(e), m)
}

/// Product computed directly in the `R(Omega) (x) C[u]` basis, without passing through `y^k x^l`.
pub fn omega_mul_direct(a: &OmegaUElement, b: &OmegaUElement) -> OmegaUElement {
    let mut out = OmegaUElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let (f, m) = omega_monomial_mul_direct(ma, mb);
            out.add_term(m, &(&(ca * cb) * &f));
        }
    }
    out
}

/// How the constant `c_n` of level `n` is distributed between `f_n` and `g_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairConvention {
    /// `f_n(0) = g_n(0) = c_n`; the level-`n` element is `f_n(X) + g_n(Y) - f_n(0)`.
    OmegaPair,
    /// `f_n(0) = g_n(0) = c_n / 2`; the level-`n` element is `Phi_x(f_n) + Phi_y(g_n)`.
    #[serde(rename = "RPHIXY")]
    RPhiXY,
}

/// One pair `(f_n, g_n)` of polynomials per power of `u`, indexed from `n = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSequence {
    pub convention: PairConvention,
    pub entries: Vec<(Poly<QScalar>, Poly<QScalar>)>,
}

impl PairSequence {
    /// True iff `f_n(0) = g_n(0)` for every level.
    pub fn constants_match(&self) -> bool {
        self.entries.iter().all(|(f, g)| f.at_zero() == g.at_zero())
    }

    /// The element this sequence represents under its convention.
    pub fn to_element(&self) -> OmegaUElement {
        let mut out = OmegaUElement::zero();
        for (n, (f, g)) in self.entries.iter().enumerate() {
            let n = n as u32;
            for (i, c) in f.coeffs().iter().enumerate().skip(1) {
                out.add_term(OmegaMonomial::X(i as u32, n), c);
            }
            for (i, c) in g.coeffs().iter().enumerate().skip(1) {
                out.add_term(OmegaMonomial::Y(i as u32, n), c);
            }
            let constant = match self.convention {
                PairConvention::OmegaPair => f.at_zero(),
                PairConvention::RPhiXY => &f.at_zero() + &g.at_zero(),
            };
            out.add_term(OmegaMonomial::U(n), &constant);
        }
        out
    }

    /// `f_n` for `n` beyond the stored levels is zero.
    pub fn f(&self, n: usize) -> Poly<QScalar> {
        self.entries.get(n).map(|e| e.0.clone()).unwrap_or_else(Poly::zero)
    }

    pub fn g(&self, n: usize) -> Poly<QScalar> {
        self.entries.get(n).map(|e| e.1.clone()).unwrap_or_else(Poly::zero)
    }
}

pub fn to_pairs(b: &OmegaUElement, convention: PairConvention) -> PairSequence {
    let levels = b.max_level().map_or(0, |m| m as usize + 1);
    let half = QScalar::constant(GaussianRational::ratio(1, 2));
    let mut f_coeffs: Vec<Vec<QScalar>> = vec![vec![QScalar::zero()]; levels];
    let mut g_coeffs: Vec<Vec<QScalar>> = vec![vec![QScalar::zero()]; levels];
    let place = |v: &mut Vec<QScalar>, i: u32, c: &QScalar| {
        let i = i as usize;
        if v.len() <= i {
            v.resize(i + 1, QScalar::zero());
        }
        v[i] = &v[i] + c;
    };
    for (m, c) in b.terms() {
        match m {
            OmegaMonomial::U(j) => {
                let share = match convention {
                    PairConvention::OmegaPair => c.clone(),
                    PairConvention::RPhiXY => c * &half,
                };
                place(&mut f_coeffs[j as usize], 0, &share);
                place(&mut g_coeffs[j as usize], 0, &share);
            }
            OmegaMonomial::X(i, j) => place(&mut f_coeffs[j as usize], i, c),
            OmegaMonomial::Y(i, j) => place(&mut g_coeffs[j as usize], i, c),
        }
    }
    PairSequence {
        convention,
        entries: f_coeffs
            .into_iter()
            .zip(g_coeffs)
            .map(|(f, g)| (Poly::new(f), Poly::new(g)))
            .collect(),
    }
}

/// Coefficients `beta_{ij}` of `u^j x^i` (`i >= 0`) and `gamma_{ij}` of `y^i u^j` (`i >= 1`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BetaGammaForm {
    pub beta: BTreeMap<(u32, u32), QScalar>,
    pub gamma: BTreeMap<(u32, u32), QScalar>,
}

impl BetaGammaForm {
    pub fn beta(&self, i: u32, j: u32) -> QScalar {
        self.beta.get(&(i, j)).cloned().unwrap_or_else(QScalar::zero)
    }

    /// `gamma_{ij}`, with `gamma_{0j} := beta_{0j}`.
    pub fn gamma(&self, i: u32, j: u32) -> QScalar {
        if i == 0 {
            return self.beta(0, j);
        }
        self.gamma.get(&(i, j)).cloned().unwrap_or_else(QScalar::zero)
    }

    /// Back to the canonical basis, undoing `x^i u^j = q^(ij) u^j x^i`.
    pub fn to_omega(&self) -> OmegaUElement {
        let mut out = OmegaUElement::zero();
        for (&(i, j), c) in &self.beta {
            let e = -(BigInt::from(i) * BigInt::from(j));
            out.add_term(OmegaMonomial::x(i, j), &c.shift(&e));
        }
        for (&(i, j), c) in &self.gamma {
            out.add_term(OmegaMonomial::Y(i, j), c);
        }
        out
    }
}

pub fn to_beta_gamma(b: &OmegaUElement) -> BetaGammaForm {
    let mut out = BetaGammaForm::default();
    for (m, c) in b.terms() {
        match m {
            OmegaMonomial::U(j) => {
                out.beta.insert((0, j), c.clone());
            }
            OmegaMonomial::X(i, j) => {
                let e = BigInt::from(i) * BigInt::from(j);
                out.beta.insert((i, j), c.shift(&e));
            }
            OmegaMonomial::Y(i, j) => {
                out.gamma.insert((i, j), c.clone());
            }
        }
    }
    out
}

/// `sum beta_{ij} q^(j(j+1)/2) y^j x^(i+j) + sum gamma_{ij} q^(j(j+1)/2) y^(i+j) x^j`.
pub fn beta_gamma_expand(c: &BetaGammaForm) -> PlaneElement {
    let mut out = PlaneElement::zero();
    for (&(i, j), b) in &c.beta {
        out.add_term((j, i + j), &b.shift(&triangular(j as u64)));
    }
    for (&(i, j), g) in &c.gamma {
        out.add_term((i + j, j), &g.shift(&triangular(j as u64)));
    }
    out
}

fn monomial_word(m: OmegaMonomial) -> Vec<String> {
    let (letter, i, j) = match m {
        OmegaMonomial::U(j) => ("x", 0, j),
        OmegaMonomial::X(i, j) => ("x", i, j),
        OmegaMonomial::Y(i, j) => ("y", i, j),
    };
    [fmt_letter(letter, i), fmt_letter("u", j)]
        .into_iter()
        .flatten()
        .collect()
}

impl fmt::Display for OmegaUElement {
    /// Canonical text: `u^j`, `x^i*u^j`, `y^i*u^j` terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = self.terms().map(|(m, c)| fmt_coeff_times(c, &monomial_word(m)));
        write!(f, "{}", join_signed(parts))
    }
}

impl fmt::Display for BetaGammaForm {
    /// `beta[i,j]=...` entries followed by `gamma[i,j]=...` entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for ((i, j), c) in &self.beta {
            parts.push(format!("beta[{i},{j}] = {c}"));
        }
        for ((i, j), c) in &self.gamma {
            parts.push(format!("gamma[{i},{j}] = {c}"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join("\n"))
    }
}

impl fmt::Display for PairSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (fp, gp)) in self.entries.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "n={n}: f = {fp}; g = {gp}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct OmegaTerm {
    basis: OmegaMonomial,
    coeff: QScalar,
}

impl Serialize for OmegaUElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<OmegaTerm> = self
            .terms()
            .map(|(basis, c)| OmegaTerm {
                basis,
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OmegaUElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<OmegaTerm>::deserialize(d)?;
        Ok(OmegaUElement::from_terms(terms.into_iter().map(|t| (t.basis, t.coeff))))
    }
}

#[derive(Serialize, Deserialize)]
struct IndexedCoeff {
    i: u32,
    j: u32,
    coeff: QScalar,
}

#[derive(Serialize, Deserialize)]
struct BetaGammaWire {
    beta: Vec<IndexedCoeff>,
    gamma: Vec<IndexedCoeff>,
}

impl Serialize for BetaGammaForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let conv = |m: &BTreeMap<(u32, u32), QScalar>| {
            m.iter()
                .map(|(&(i, j), c)| IndexedCoeff { i, j, coeff: c.clone() })
                .collect()
        };
        BetaGammaWire {
            beta: conv(&self.beta),
            gamma: conv(&self.gamma),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BetaGammaForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = BetaGammaWire::deserialize(d)?;
        let conv = |v: Vec<IndexedCoeff>| {
            v.into_iter()
                .filter(|c| !c.coeff.is_zero())
                .map(|c| ((c.i, c.j), c.coeff))
                .collect()
        };
        Ok(BetaGammaForm {
            beta: conv(w.beta),
            gamma: conv(w.gamma),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{arb_omega, arb_plane};
    use proptest::prelude::*;

    fn q(e: i64) -> QScalar {
        QScalar::q_pow(e)
    }

    fn mono(c: QScalar, k: u32, l: u32) -> PlaneElement {
        PlaneElement::monomial(c, k, l)
    }

    #[test]
    fn to_omega_examples() {
        let xy = PlaneElement::x() * PlaneElement::y();
        assert_eq!(to_omega(&xy), OmegaUElement::basis(OmegaMonomial::U(1), q(0)));
        assert_eq!(
            to_omega(&mono(q(0), 2, 2)),
            OmegaUElement::basis(OmegaMonomial::U(2), q(-3))
        );
        assert_eq!(
            to_omega(&mono(q(0), 1, 2)),
            OmegaUElement::basis(OmegaMonomial::X(1, 1), q(-2))
        );
    }

    #[test]
    fn from_omega_examples() {
        assert_eq!(from_omega(&OmegaUElement::basis(OmegaMonomial::U(1), q(0))), PlaneElement::u());
        let x = PlaneElement::x();
        let xxy = &x * &(&x * &PlaneElement::y());
        let xu = from_omega(&OmegaUElement::basis(OmegaMonomial::X(1, 1), q(0)));
        assert_eq!(xu, xxy);
        assert_eq!(xu, mono(q(2), 1, 2));
        // y u = y x y = q y^2 x
        let yu = from_omega(&OmegaUElement::basis(OmegaMonomial::Y(1, 1), q(0)));
        assert_eq!(yu, PlaneElement::y() * PlaneElement::x() * PlaneElement::y());
        assert_eq!(yu, mono(q(1), 2, 1));
    }

    #[test]
    fn omega_mul_examples() {
        let xx = OmegaUElement::basis(OmegaMonomial::X(1, 0), q(0));
        let yy = OmegaUElement::basis(OmegaMonomial::Y(1, 0), q(0));
        assert_eq!(omega_mul(&xx, &yy), OmegaUElement::basis(OmegaMonomial::U(1), q(0)));
        assert_eq!(omega_mul(&yy, &xx), OmegaUElement::basis(OmegaMonomial::U(1), q(-1)));
        // x * (x u) = x^2 u
        let xu = OmegaUElement::basis(OmegaMonomial::X(1, 1), q(0));
        assert_eq!(omega_mul(&xx, &xu), OmegaUElement::basis(OmegaMonomial::X(2, 1), q(0)));
        // (x u) * x = q^-1 x^2 u
        assert_eq!(omega_mul(&xu, &xx), OmegaUElement::basis(OmegaMonomial::X(2, 1), q(-1)));
    }

    #[test]
    fn pairs_examples() {
        let half = QScalar::constant(GaussianRational::ratio(1, 2));
        let unit = to_pairs(&OmegaUElement::one(), PairConvention::RPhiXY);
        assert_eq!(unit.entries, vec![(Poly::constant(half.clone()), Poly::constant(half.clone()))]);

        let x = to_pairs(&OmegaUElement::basis(OmegaMonomial::X(1, 0), q(0)), PairConvention::OmegaPair);
        assert_eq!(x.entries, vec![(Poly::monomial(q(0), 1), Poly::zero())]);

        let three_halves = QScalar::constant(GaussianRational::ratio(3, 2));
        let b = OmegaUElement::from_terms([
            (OmegaMonomial::U(2), QScalar::from(3)),
            (OmegaMonomial::X(2, 2), q(0)),
        ]);
        let p = to_pairs(&b, PairConvention::RPhiXY);
        assert_eq!(p.f(2), Poly::new(vec![three_halves.clone(), QScalar::zero(), q(0)]));
        assert_eq!(p.g(2), Poly::constant(three_halves));
        assert_eq!(p.f(0), Poly::zero());
        assert_eq!(p.to_element(), b);
    }

    #[test]
    fn beta_gamma_examples() {
        let bg = to_beta_gamma(&OmegaUElement::basis(OmegaMonomial::X(1, 1), q(0)));
        assert_eq!(bg.beta(1, 1), q(1));
        assert_eq!(beta_gamma_expand(&bg), mono(q(2), 1, 2));

        let bg = to_beta_gamma(&OmegaUElement::basis(OmegaMonomial::U(2), q(0)));
        assert_eq!(bg.beta(0, 2), q(0));
        assert_eq!(bg.gamma(0, 2), q(0));
        assert_eq!(beta_gamma_expand(&bg), mono(q(3), 2, 2));

        let b = OmegaUElement::basis(OmegaMonomial::Y(2, 1), q(0));
        let bg = to_beta_gamma(&b);
        assert_eq!(bg.gamma(2, 1), q(0));
        assert_eq!(beta_gamma_expand(&bg), mono(q(1), 3, 1));
        assert_eq!(beta_gamma_expand(&bg), from_omega(&b));
    }

    #[test]
    fn display() {
        let b = to_omega(&mono(q(0), 2, 2));
        assert_eq!(b.to_string(), "q^-3*u^2");
        let b = OmegaUElement::from_terms([
            (OmegaMonomial::U(0), QScalar::from(2)),
            (OmegaMonomial::X(1, 0), q(0)),
            (OmegaMonomial::Y(3, 2), -q(1)),
        ]);
        assert_eq!(b.to_string(), "2 + x - q*y^3*u^2");
    }

    #[test]
    fn json_round_trip() {
        let b = OmegaUElement::from_terms([
            (OmegaMonomial::U(0), QScalar::from(2)),
            (OmegaMonomial::Y(3, 2), -q(1)),
        ]);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<OmegaUElement>(&s).unwrap(), b);
        let bg = to_beta_gamma(&b);
        let s = serde_json::to_string(&bg).unwrap();
        assert_eq!(serde_json::from_str::<BetaGammaForm>(&s).unwrap(), bg);
        let p = to_pairs(&b, PairConvention::RPhiXY);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<PairSequence>(&s).unwrap(), p);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn round_trips(a in arb_plane(6, 8)) {
            let b = to_omega(&a);
            prop_assert_eq!(from_omega(&b), a.clone());
            prop_assert_eq!(to_omega(&from_omega(&b)), b.clone());
            let bg = to_beta_gamma(&b);
            prop_assert_eq!(beta_gamma_expand(&bg), a.clone());
            prop_assert_eq!(bg.to_omega(), b.clone());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn direct_product_agrees(a in arb_omega(5, 6), b in arb_omega(5, 6)) {
            prop_assert_eq!(omega_mul_direct(&a, &b), omega_mul(&a, &b));
        }

        #[test]
        fn pair_invariants(b in arb_omega(6, 8)) {
            for conv in [PairConvention::OmegaPair, PairConvention::RPhiXY] {
                let p = to_pairs(&b, conv);
                prop_assert!(p.constants_match());
                prop_assert_eq!(p.to_element(), b.clone());
            }
        }
    }
}
