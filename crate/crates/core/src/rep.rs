//! Truncated weighted-shift representations of the plane.
//!
//! `pi_lambda: x -> E, y -> lambda D` and `pi'_mu: x -> mu D, y -> F`, where
//! `E` is the left shift (ones on the superdiagonal), `F` the right shift
//! (ones on the subdiagonal) and `D = diag(1, q, q^2, ...)`. Both families
//! land in triangular matrices, so cutting the generators to `N x N` and then
//! multiplying is an exact homomorphism for every `N`.

use std::fmt;

use num_complex::Complex;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::plane::PlaneElement;
use crate::poly::Poly;
use crate::scalar::{FloatScalar, Scalar, Specialize};

/// Absolute tolerance for the float-mode nilpotency test.
pub const NILPOTENT_TOL: f64 = 1e-12;

/// Dense `N x N` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedOperator<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> TruncatedOperator<S> {
    pub fn zeros(dim: usize) -> Self {
        TruncatedOperator {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        TruncatedOperator { dim, entries }
    }

    /// Builds from rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadDim("matrix rows must form a square".into()));
        }
        Ok(TruncatedOperator {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::BadDim(format!(
                "dimension mismatch: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Matrix product; zero entries of the left factor are skipped.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = out.entries[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(TruncatedOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(TruncatedOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        TruncatedOperator {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..n {
            acc = acc.matmul(self).expect("same dimension");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.is_negligible(tol))
    }

    /// Row 0, the data read off by `eta_1`.
    pub fn first_row(&self) -> Vec<S> {
        self.entries[..self.dim].to_vec()
    }

    /// Column 0, the data read off by `eta_2`.
    pub fn first_column(&self) -> Vec<S> {
        (0..self.dim).map(|i| self.get(i, 0).clone()).collect()
    }

    /// Entrywise image under `f`.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TruncatedOperator<T> {
        TruncatedOperator {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<F: FloatScalar> TruncatedOperator<Complex<F>> {
    /// Max absolute row sum, the operator norm on `l_infinity`; an upper bound used for growth estimates.
    pub fn row_sum_norm(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|z| z.norm().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> Serialize for TruncatedOperator<S> {
    /// `{"dim": N, "entries": [[...], ...]}` with entries in canonical text form.
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let mut st = s.serialize_struct("TruncatedOperator", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

impl<S: Scalar> fmt::Display for TruncatedOperator<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RepFamily {
    /// `x -> E`, `y -> lambda D`.
    PiLambda,
    /// `x -> mu D`, `y -> F`.
    PiPrimeMu,
}

/// A representation family at parameter `lambda` (or `mu`), deformation `q`, truncation `dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepSpec<S> {
    pub family: RepFamily,
    pub param: S,
    pub q: S,
    pub dim: usize,
}

impl<S: Scalar> RepSpec<S> {
    pub fn new(family: RepFamily, param: S, q: S, dim: usize) -> Self {
        RepSpec {
            family,
            param,
            q,
            dim,
        }
    }
}

/// Left shift `E`: ones at `(k, k + 1)`.
pub fn left_shift<S: Scalar>(n: usize) -> TruncatedOperator<S> {
    TruncatedOperator::from_fn(n, |i, j| if j == i + 1 { S::one() } else { S::zero() })
}

/// Right shift `F`: ones at `(k + 1, k)`.
pub fn right_shift<S: Scalar>(n: usize) -> TruncatedOperator<S> {
    TruncatedOperator::from_fn(n, |i, j| if i == j + 1 { S::one() } else { S::zero() })
}

/// `D = diag(1, q, ..., q^(n-1))`.
pub fn diagonal<S: Scalar>(n: usize, q: &S) -> TruncatedOperator<S> {
    let mut out = TruncatedOperator::zeros(n);
    let mut p = S::one();
    for k in 0..n {
        out.set(k, k, p.clone());
        p = p * q.clone();
    }
    out
}

/// Images `(X, Y)` of the generators `x`, `y`.
pub fn build_generators<S: Scalar>(
    spec: &RepSpec<S>,
) -> Result<(TruncatedOperator<S>, TruncatedOperator<S>)> {
    if spec.dim < 2 {
        return Err(Error::BadDim(format!("truncation N = {} < 2", spec.dim)));
    }
    Ok(generators_unchecked(spec.family, &spec.param, &spec.q, spec.dim))
}

fn generators_unchecked<S: Scalar>(
    family: RepFamily,
    param: &S,
    q: &S,
    n: usize,
) -> (TruncatedOperator<S>, TruncatedOperator<S>) {
    let d = diagonal(n, q);
    match family {
        RepFamily::PiLambda => (left_shift(n), d.scale(param)),
        RepFamily::PiPrimeMu => (d.scale(param), right_shift(n)),
    }
}

/// Successive powers `M^0, ..., M^max`.
fn powers<S: Scalar>(m: &TruncatedOperator<S>, max: u32) -> Vec<TruncatedOperator<S>> {
    let mut out = vec![TruncatedOperator::identity(m.dim())];
    for i in 0..max as usize {
        out.push(out[i].matmul(m).expect("same dimension"));
    }
    out
}

/// `y^k x^l -> c(q) Y^k X^l`, extended linearly.
pub fn rep_apply<S: Specialize>(spec: &RepSpec<S>, a: &PlaneElement) -> Result<TruncatedOperator<S>> {
    let (x, y) = build_generators(spec)?;
    let xp = powers(&x, a.max_x_degree());
    let yp = powers(&y, a.max_y_degree());
    let mut out = TruncatedOperator::zeros(spec.dim);
    for (&(k, l), c) in a.terms() {
        let c = S::specialize(c, &spec.q)?;
        let term = yp[k as usize].matmul(&xp[l as usize])?.scale(&c);
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Generators of the `pi_lambda` family cut to order `p` inside the upper triangular matrices `T_p`.
pub fn upper_triangular_truncation<S: Scalar>(
    spec: &RepSpec<S>,
    p: usize,
) -> Result<(TruncatedOperator<S>, TruncatedOperator<S>)> {
    if p < 1 {
        return Err(Error::BadDim("order p must be at least 1".into()));
    }
    if spec.family != RepFamily::PiLambda {
        return Err(Error::InvalidParameter(
            "upper triangular truncation needs the pi_lambda family".into(),
        ));
    }
    Ok(generators_unchecked(spec.family, &spec.param, &spec.q, p))
}

/// `sum_{n < p} alpha_n b^n` for a `p`-nilpotent `b`.
pub fn nilpotent_series_substitute<S: Scalar>(
    series: &Poly<S>,
    b: &TruncatedOperator<S>,
    p: usize,
) -> Result<TruncatedOperator<S>> {
    if !b.pow(p as u32).is_negligible(NILPOTENT_TOL) {
        return Err(Error::NotNilpotent(p));
    }
    let n = b.dim();
    let id = TruncatedOperator::<S>::identity(n);
    let mut acc = TruncatedOperator::zeros(n);
    for k in (0..p.min(series.coeffs().len())).rev() {
        acc = acc.matmul(b)?.add(&id.scale(&series.coeff(k)))?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct GrowthPoint {
    pub n: u32,
    /// `||pi(u)^n||^(1/n)` with the row-sum norm.
    pub estimate: f64,
    /// `|q|^((n+1)/2) (||Y|| ||X||)^(1/n)`.
    pub reference: f64,
    /// `|q|^((n+1)/2) ||Y|| ||X||`.
    pub reference_unrooted: f64,
}

/// Root growth of `pi(u)^n` for `n = 1..=nmax`.
pub fn growth_profile<F: FloatScalar>(spec: &RepSpec<Complex<F>>, nmax: u32) -> Result<Vec<GrowthPoint>> {
    let qa = spec.q.norm().to_f64().unwrap_or(f64::NAN);
    if !(qa < 1.0) {
        return Err(Error::InvalidParameter(format!("growth profile needs |q| < 1, got {qa}")));
    }
    let (x, y) = build_generators(spec)?;
    let yx = y.row_sum_norm() * x.row_sum_norm();
    let u = rep_apply(spec, &PlaneElement::u())?;
    let mut p = TruncatedOperator::identity(spec.dim);
    let mut out = Vec::with_capacity(nmax as usize);
    for n in 1..=nmax {
        p = p.matmul(&u)?;
        let nf = n as f64;
        let base = qa.powf((nf + 1.0) / 2.0);
        out.push(GrowthPoint {
            n,
            estimate: p.row_sum_norm().powf(1.0 / nf),
            reference: base * yx.powf(1.0 / nf),
            reference_unrooted: base * yx,
        });
    }
    Ok(out)
}

impl<S: Scalar> TruncatedOperator<S> {
    /// True iff `self == other` with float entries compared at absolute tolerance `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| (a.clone() - b.clone()).is_negligible(tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational, QScalar};
    use crate::testing::arb_plane;
    use num_complex::Complex64;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn exact(family: RepFamily, param: i64, dim: usize) -> RepSpec<QScalar> {
        RepSpec::new(family, QScalar::from(param), QScalar::q(), dim)
    }

    fn q(e: i64) -> QScalar {
        QScalar::q_pow(e)
    }

    #[test]
    fn generators_small() {
        let (x, y) = build_generators(&exact(RepFamily::PiLambda, 1, 3)).unwrap();
        assert_eq!(x.get(0, 1), &q(0));
        assert_eq!(x.get(1, 2), &q(0));
        assert_eq!(x.get(1, 0), &QScalar::zero());
        assert_eq!(y.get(2, 2), &q(2));
        assert!(matches!(
            build_generators(&exact(RepFamily::PiLambda, 1, 1)),
            Err(Error::BadDim(_))
        ));
    }

    #[test]
    fn commutation_relations() {
        for n in [2, 5, 16] {
            let e = left_shift::<QScalar>(n);
            let f = right_shift::<QScalar>(n);
            let d = diagonal(n, &QScalar::q());
            let ed = e.matmul(&d).unwrap();
            let qde = d.matmul(&e).unwrap().scale(&QScalar::q());
            assert_eq!(ed, qde);
            let df = d.matmul(&f).unwrap();
            let qfd = f.matmul(&d).unwrap().scale(&QScalar::q());
            assert_eq!(df, qfd);
        }
    }

    #[test]
    fn u_is_a_weighted_shift() {
        let lam = GaussianRational::ratio(3, 2);
        let spec = RepSpec::new(RepFamily::PiLambda, QScalar::constant(lam.clone()), QScalar::q(), 6);
        let pu = rep_apply(&spec, &PlaneElement::u()).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let want = if j == i + 1 {
                    QScalar::monomial(lam.clone(), j as i64)
                } else {
                    QScalar::zero()
                };
                assert_eq!(pu.get(i, j), &want, "({i},{j})");
            }
        }
        let spec = RepSpec::new(RepFamily::PiPrimeMu, QScalar::constant(lam.clone()), QScalar::q(), 6);
        let pu = rep_apply(&spec, &PlaneElement::u()).unwrap();
        for k in 0..5 {
            assert_eq!(pu.get(k + 1, k), &QScalar::monomial(lam.clone(), k as i64 + 1));
        }
    }

    #[test]
    fn first_row_of_u_powers() {
        let spec = exact(RepFamily::PiLambda, 2, 16);
        for n in 0..=12u32 {
            let row = rep_apply(&spec, &PlaneElement::u().pow(n)).unwrap().first_row();
            for (j, v) in row.iter().enumerate() {
                let want = if j == n as usize {
                    QScalar::monomial(GaussianRational::from_integer(2i64.pow(n)), (n * (n + 1) / 2) as i64)
                } else {
                    QScalar::zero()
                };
                assert_eq!(v, &want);
            }
        }
    }

    #[test]
    fn nilpotent_truncation() {
        let spec = exact(RepFamily::PiLambda, 1, 4);
        let (x, y) = upper_triangular_truncation(&spec, 4).unwrap();
        let xy = x.matmul(&y).unwrap();
        assert!(xy.pow(4).is_zero());
        let cube = xy.pow(3);
        assert_eq!(cube.get(0, 3), &q(6));
        assert_eq!(cube.entries.iter().filter(|e| !e.is_zero()).count(), 1);
        let (x1, y1) = upper_triangular_truncation(&spec, 1).unwrap();
        assert!(x1.is_zero());
        assert_eq!(y1.get(0, 0), &q(0));
        assert!(x1.matmul(&y1).unwrap().is_zero());
    }

    #[test]
    fn geometric_series_of_shift() {
        let e = left_shift::<QScalar>(5);
        let ones = Poly::new(vec![QScalar::one(); 8]);
        let s = nilpotent_series_substitute(&ones, &e, 5).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let want = if j >= i { QScalar::one() } else { QScalar::zero() };
                assert_eq!(s.get(i, j), &want);
            }
        }
        let z = Poly::monomial(QScalar::one(), 1);
        assert_eq!(nilpotent_series_substitute(&z, &e, 5).unwrap(), e);
        let d = diagonal::<QScalar>(3, &QScalar::q());
        assert_eq!(nilpotent_series_substitute(&z, &d, 3), Err(Error::NotNilpotent(3)));
    }

    #[test]
    fn factorial_series() {
        let e = left_shift::<QScalar>(4);
        let fact = Poly::new(vec![1, 1, 2, 6, 24].into_iter().map(QScalar::from).collect());
        let s = nilpotent_series_substitute(&fact, &e, 4).unwrap();
        let mut direct = TruncatedOperator::zeros(4);
        for n in 0..4u32 {
            direct = direct.add(&e.pow(n).scale(&fact.coeff(n as usize))).unwrap();
        }
        assert_eq!(s, direct);
        assert_eq!(s.get(0, 3), &QScalar::from(6));
    }

    #[test]
    fn growth_matches_closed_form() {
        for qa in [0.5, 0.9] {
            let spec = RepSpec::new(RepFamily::PiLambda, Complex64::new(1.0, 0.0), Complex64::new(qa, 0.0), 24);
            let prof = growth_profile(&spec, 10).unwrap();
            for p in prof {
                let n = p.n as f64;
                let closed = qa.powf((n + 1.0) / 2.0);
                assert!((p.estimate - closed).abs() <= 1e-12, "{p:?}");
                assert!(p.estimate <= (1.0 + 1e-9) * p.reference);
            }
        }
    }

    #[test]
    fn json_dump() {
        let (x, _) = build_generators(&exact(RepFamily::PiLambda, 1, 2)).unwrap();
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v["dim"], 2);
        assert_eq!(v["entries"][0][1], "1");
        assert_eq!(v["entries"][1][0], "0");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn homomorphism(a in arb_plane(4, 4), b in arb_plane(4, 4), pl in any::<bool>()) {
            let family = if pl { RepFamily::PiLambda } else { RepFamily::PiPrimeMu };
            let spec = RepSpec::new(family, QScalar::constant(GaussianRational::ratio(2, 3)), QScalar::q(), 10);
            let lhs = rep_apply(&spec, &(&a * &b)).unwrap();
            let rhs = rep_apply(&spec, &a).unwrap().matmul(&rep_apply(&spec, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn first_row_is_stable(a in arb_plane(5, 6), extra in 1usize..6) {
            let n0 = a.max_x_degree() as usize + 1;
            let small = RepSpec::new(RepFamily::PiLambda, QScalar::from(3), QScalar::q(), n0.max(2));
            let big = RepSpec { dim: n0.max(2) + extra, ..small.clone() };
            let r1 = rep_apply(&small, &a).unwrap().first_row();
            let r2 = rep_apply(&big, &a).unwrap().first_row();
            prop_assert_eq!(&r1[..n0.min(r1.len())], &r2[..n0.min(r1.len())]);
        }
    }
}
