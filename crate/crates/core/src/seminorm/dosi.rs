//! Norm families on the plane indexed by one fixed degree.
//!
//! For `a = sum alpha_kl y^k x^l`:
//! `||a||'_(r,l) = sum_k |alpha_kl| r^k` (fixed `x`-degree `l`) and
//! `||a||''_(r,k) = sum_l |alpha_kl| r^l` (fixed `y`-degree `k`).
//! The same quantities can be read off the `beta`/`gamma` form through
//! `u^j x^i = q^(j(j+1)/2) y^j x^(i+j)` and `y^i u^j = q^(j(j+1)/2) y^(i+j) x^j`.
//! The `pi` family `|a|'_(r,k) = sum_i |beta_ik| r^i`, `|a|''_(r,l) = sum_i |gamma_il| r^i`
//! drops the `q`-powers.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::value::{NormAccumulator, SeminormValue};
use crate::error::{Error, Result};
use crate::omega::{to_beta_gamma, to_omega, BetaGammaForm};
use crate::plane::{triangular, PlaneElement};
use crate::scalar::{Magnitude, QScalar, Specialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DosiIndex {
    /// `||.||'_(r,l)`: fixed `x`-degree `l`, summed over the `y`-degree.
    PrimeL(u32),
    /// `||.||''_(r,k)`: fixed `y`-degree `k`, summed over the `x`-degree.
    DprimeK(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PiIndex {
    /// `|.|'_(r,k) = sum_i |beta_ik| r^i`.
    PrimeK(u32),
    /// `|.|''_(r,l) = sum_i |gamma_il| r^i`, with `gamma_0l = beta_0l`.
    DprimeL(u32),
}

fn check_r(r: &BigRational) -> Result<()> {
    if !r.is_positive() {
        return Err(Error::InvalidParameter(format!("r must be positive, got {r}")));
    }
    Ok(())
}

fn rpow(r: &BigRational, e: u32) -> BigRational {
    num_traits::pow(r.clone(), e as usize)
}

/// Direct path over the normal-form coefficients `alpha_kl` evaluated at `q`.
pub fn dosi_norm<S: Specialize + Magnitude>(
    a: &PlaneElement,
    q: &S,
    r: &BigRational,
    which: DosiIndex,
) -> Result<SeminormValue> {
    check_r(r)?;
    let mut acc = NormAccumulator::new();
    for (&(k, l), c) in a.terms() {
        let e = match which {
            DosiIndex::PrimeL(fixed) if l == fixed => k,
            DosiIndex::DprimeK(fixed) if k == fixed => l,
            _ => continue,
        };
        acc.add(&S::specialize(c, q)?, &rpow(r, e));
    }
    Ok(acc.finish())
}

/// The same norm from the `beta`/`gamma` coefficients:
///
/// ```text
/// ||a||'_(r,l)  = sum_{k<=l} |beta_(l-k,k) q^(k(k+1)/2)| r^k + sum_{k>l} |gamma_(k-l,l) q^(l(l+1)/2)| r^k
/// ||a||''_(r,k) = sum_{l>=k} |beta_(l-k,k) q^(k(k+1)/2)| r^l + sum_{l<k} |gamma_(k-l,l) q^(l(l+1)/2)| r^l
/// ```
pub fn dosi_from_beta_gamma<S: Specialize + Magnitude>(
    c: &BetaGammaForm,
    q: &S,
    r: &BigRational,
    which: DosiIndex,
) -> Result<SeminormValue> {
    check_r(r)?;
    let mut acc = NormAccumulator::new();
    let mut add = |coeff: &QScalar, j: u32, rexp: u32| -> Result<()> {
        let v = S::specialize(&coeff.shift(&triangular(j as u64)), q)?;
        acc.add(&v, &rpow(r, rexp));
        Ok(())
    };
    match which {
        DosiIndex::PrimeL(l) => {
            for (&(i, j), b) in &c.beta {
                if i + j == l {
                    add(b, j, j)?;
                }
            }
            for (&(i, j), g) in &c.gamma {
                if j == l {
                    add(g, j, i + j)?;
                }
            }
        }
        DosiIndex::DprimeK(k) => {
            for (&(i, j), b) in &c.beta {
                if j == k {
                    add(b, j, i + j)?;
                }
            }
            for (&(i, j), g) in &c.gamma {
                if i + j == k {
                    add(g, j, j)?;
                }
            }
        }
    }
    Ok(acc.finish())
}

/// `|a|'_(r,k)` or `|a|''_(r,l)` computed from the `beta`/`gamma` form of `a`.
pub fn pi_family_norm<S: Specialize + Magnitude>(
    a: &PlaneElement,
    q: &S,
    r: &BigRational,
    which: PiIndex,
) -> Result<SeminormValue> {
    check_r(r)?;
    let c = to_beta_gamma(&to_omega(a));
    let mut acc = NormAccumulator::new();
    match which {
        PiIndex::PrimeK(k) => {
            for (&(i, j), b) in &c.beta {
                if j == k {
                    acc.add(&S::specialize(b, q)?, &rpow(r, i));
                }
            }
        }
        PiIndex::DprimeL(l) => {
            if let Some(b) = c.beta.get(&(0, l)) {
                acc.add(&S::specialize(b, q)?, &BigRational::one());
            }
            for (&(i, j), g) in &c.gamma {
                if j == l {
                    acc.add(&S::specialize(g, q)?, &rpow(r, i));
                }
            }
        }
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_plane;
    use crate::scalar::GaussianRational;
    use crate::seminorm::SqrtSum;
    use crate::testing::arb_plane;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn half() -> GaussianRational {
        GaussianRational::ratio(1, 2)
    }

    fn exact(v: SeminormValue) -> BigRational {
        v.exact.as_ref().and_then(SqrtSum::as_rational).expect("rational value")
    }

    #[test]
    fn dosi_examples() {
        let a = parse_plane("y^2*x^3").unwrap();
        assert_eq!(exact(dosi_norm(&a, &half(), &rat(2, 1), DosiIndex::PrimeL(3)).unwrap()), rat(4, 1));
        let u = parse_plane("u").unwrap();
        assert_eq!(exact(dosi_norm(&u, &half(), &rat(1, 1), DosiIndex::PrimeL(1)).unwrap()), rat(1, 2));
        // x u = q^2 y x^2: ||.||'_(r,2) = |q|^2 r
        let xu = parse_plane("x*u").unwrap();
        let bg = to_beta_gamma(&to_omega(&xu));
        let alpha = dosi_norm(&xu, &half(), &rat(3, 1), DosiIndex::PrimeL(2)).unwrap();
        let beta = dosi_from_beta_gamma(&bg, &half(), &rat(3, 1), DosiIndex::PrimeL(2)).unwrap();
        assert_eq!(exact(alpha), rat(3, 4));
        assert_eq!(exact(beta), rat(3, 4));
        assert!(dosi_norm(&xu, &half(), &rat(0, 1), DosiIndex::PrimeL(2)).is_err());
    }

    #[test]
    fn pi_family_examples() {
        let a = parse_plane("x^2*u").unwrap();
        for r in [rat(1, 1), rat(5, 3)] {
            let v = pi_family_norm(&a, &half(), &r, PiIndex::PrimeK(1)).unwrap();
            assert_eq!(exact(v), &r * &r / rat(4, 1));
        }
        let one = parse_plane("1").unwrap();
        assert_eq!(exact(pi_family_norm(&one, &half(), &rat(2, 1), PiIndex::PrimeK(0)).unwrap()), rat(1, 1));
        let b = crate::omega::from_omega(&crate::omega::OmegaUElement::basis(
            crate::omega::OmegaMonomial::Y(3, 2),
            QScalar::one(),
        ));
        assert_eq!(exact(pi_family_norm(&b, &half(), &rat(2, 1), PiIndex::DprimeL(2)).unwrap()), rat(8, 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn two_paths_agree(a in arb_plane(6, 8), idx in 0u32..7, rn in 1i64..5, rd in 1i64..4) {
            let r = rat(rn, rd);
            let bg = to_beta_gamma(&to_omega(&a));
            let qe = GaussianRational::ratio(2, 3);
            let qf = Complex64::new(0.3, 0.4);
            for which in [DosiIndex::PrimeL(idx), DosiIndex::DprimeK(idx)] {
                let x = dosi_norm(&a, &qe, &r, which).unwrap();
                let y = dosi_from_beta_gamma(&bg, &qe, &r, which).unwrap();
                prop_assert!(x.exact.is_some());
                prop_assert_eq!(&x.exact, &y.exact);
                let x = dosi_norm(&a, &qf, &r, which).unwrap();
                let y = dosi_from_beta_gamma(&bg, &qf, &r, which).unwrap();
                prop_assert!(x.agrees_with(&y, 1e-12), "{} vs {}", x, y);
            }
        }
    }
}
