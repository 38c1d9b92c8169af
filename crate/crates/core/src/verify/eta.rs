//! First-row / first-column data of the two representation families.
//!
//! The matrix computation is the ground truth. Next to it sit the `W_n`
//! formula applied verbatim (`W_j(g)` at `lambda` for the first row, `W_j(f)`
//! at `mu` for the first column, pairs split with halved constants) and a
//! closed-form kernel that must reproduce the matrices exactly:
//!
//! ```text
//! row j of pi_lambda:    g_j(lambda) lambda^j q^(j(j+1)/2) + sum_{k<=j} [t^(j-k)]f_k lambda^k q^(kj - k(k-1)/2)
//! column j of pi'_mu:    f_j(mu q^j) mu^j q^(j(j+1)/2)     + sum_{k<=j} [t^(j-k)]g_k mu^k q^(k(k+1)/2)
//! ```

use serde::Serialize;

use super::report::Status;
use super::wn::{powu, tri, wn_paper};
use super::as_text;
use crate::error::{Error, Result};
use crate::omega::{from_omega, to_pairs, OmegaUElement, PairConvention};
use crate::poly::Poly;
use crate::rep::{rep_apply, RepFamily, RepSpec};
use crate::scalar::{Scalar, Specialize};

/// Absolute tolerance for float comparisons; exact scalars compare exactly.
pub const ETA_TOL: f64 = 1e-9;

fn same<S: Scalar>(a: &S, b: &S) -> bool {
    (a.clone() - b.clone()).is_negligible(ETA_TOL)
}

fn check_index<S>(spec: &RepSpec<S>, j: usize) -> Result<()> {
    if j >= spec.dim {
        return Err(Error::BadDim(format!("entry {j} needs truncation N > {j}, got N = {}", spec.dim)));
    }
    Ok(())
}

fn first_line<S: Specialize>(a: &OmegaUElement, spec: &RepSpec<S>) -> Result<Vec<S>> {
    let m = rep_apply(spec, &from_omega(a))?;
    Ok(match spec.family {
        RepFamily::PiLambda => m.first_row(),
        RepFamily::PiPrimeMu => m.first_column(),
    })
}

/// The whole first row (`pi_lambda`) or first column (`pi'_mu`) of the truncated image of `a`.
pub fn eta_oracle_vector<S: Specialize>(a: &OmegaUElement, spec: &RepSpec<S>) -> Result<Vec<S>> {
    first_line(a, spec)
}

/// Entry `j` of [`eta_oracle_vector`]. Exact for every `j < N`, since both
/// families truncate to triangular matrices.
pub fn eta_entry_oracle<S: Specialize>(a: &OmegaUElement, spec: &RepSpec<S>, j: usize) -> Result<S> {
    check_index(spec, j)?;
    Ok(first_line(a, spec)?.swap_remove(j))
}

type Pairs<S> = Vec<(Poly<S>, Poly<S>)>;

fn split_pairs<S: Specialize>(a: &OmegaUElement, q: &S, len: usize) -> Result<Pairs<S>> {
    let seq = to_pairs(a, PairConvention::RPhiXY);
    (0..len.max(seq.entries.len()))
        .map(|n| Ok((seq.f(n).specialize(q)?, seq.g(n).specialize(q)?)))
        .collect()
}

fn kernel_entry<S: Scalar>(pairs: &Pairs<S>, spec: &RepSpec<S>, j: usize) -> S {
    let (p, q) = (&spec.param, &spec.q);
    let (fj, gj) = &pairs[j];
    let lead = powu(p, j as u64) * powu(q, tri(j));
    let mut v = match spec.family {
        RepFamily::PiLambda => gj.eval(p) * lead,
        RepFamily::PiPrimeMu => fj.eval(&(p.clone() * powu(q, j as u64))) * lead,
    };
    for (k, (fk, gk)) in pairs.iter().enumerate().take(j + 1) {
        let (c, e) = match spec.family {
            RepFamily::PiLambda => (fk.coeff(j - k), (k * j - k * k.saturating_sub(1) / 2) as u64),
            RepFamily::PiPrimeMu => (gk.coeff(j - k), tri(k)),
        };
        if !c.is_zero() {
            v = v + c * powu(p, k as u64) * powu(q, e);
        }
    }
    v
}

/// Closed-form entry `j`; agrees with [`eta_entry_oracle`] exactly.
pub fn eta_corrected_kernel<S: Specialize>(a: &OmegaUElement, spec: &RepSpec<S>, j: usize) -> Result<S> {
    check_index(spec, j)?;
    let pairs = split_pairs(a, &spec.q, j + 1)?;
    Ok(kernel_entry(&pairs, spec, j))
}

fn side<S: Scalar>(pairs: &Pairs<S>, use_f: bool) -> Vec<Poly<S>> {
    pairs
        .iter()
        .map(|(f, g)| if use_f { f.clone() } else { g.clone() })
        .collect()
}

/// The verbatim formula: `W_j(g)(lambda)` for `pi_lambda`, `W_j(f)(mu)` for `pi'_mu`.
pub fn eta_paper<S: Specialize>(a: &OmegaUElement, spec: &RepSpec<S>, j: usize) -> Result<S> {
    let pairs = split_pairs(a, &spec.q, j + 1)?;
    let h = side(&pairs, spec.family == RepFamily::PiPrimeMu);
    Ok(wn_paper(&h, &spec.q, j)?.eval(&spec.param))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct EtaEntry<S: Scalar> {
    pub j: usize,
    #[serde(serialize_with = "as_text")]
    pub oracle: S,
    #[serde(serialize_with = "as_text")]
    pub kernel: S,
    /// `W_j` of the sequence named in the formula.
    #[serde(serialize_with = "as_text")]
    pub formula: S,
    /// `W_j` of the other sequence of the pair, for comparison.
    #[serde(serialize_with = "as_text")]
    pub swapped: S,
    /// `oracle - formula`.
    #[serde(serialize_with = "as_text")]
    pub difference: S,
    /// Contribution of the level-`j` part of `a` to entry `j`, from the matrices.
    #[serde(serialize_with = "as_text")]
    pub diagonal_oracle: S,
    /// `(h_j(z) + h_j(0)) z^j q^(j(j+1)/2)`, the leading part of the formula.
    #[serde(serialize_with = "as_text")]
    pub diagonal_formula: S,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct Eta12Report<S: Scalar> {
    pub family: RepFamily,
    pub entries: Vec<EtaEntry<S>>,
}

impl<S: Scalar> Eta12Report<S> {
    pub fn status(&self) -> Status {
        self.entries.iter().fold(Status::Pass, |s, e| s.worst(e.status))
    }

    pub fn kernel_agrees(&self) -> bool {
        self.entries.iter().all(|e| same(&e.kernel, &e.oracle))
    }

    pub fn diagonals_agree(&self) -> bool {
        self.entries.iter().all(|e| same(&e.diagonal_oracle, &e.diagonal_formula))
    }

    /// Indices where the verbatim formula departs from the matrices.
    pub fn discrepancies(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::DiscrepancyRecorded)
            .map(|e| e.j)
            .collect()
    }
}

fn level_part(a: &OmegaUElement, j: usize) -> OmegaUElement {
    OmegaUElement::from_terms(
        a.terms()
            .filter(|(m, _)| m.u_level() as usize == j)
            .map(|(m, c)| (m, c.clone())),
    )
}

/// Entries `0..=jmax` of the first row or column, each with oracle, kernel and formula values.
///
/// A kernel mismatch is a failure. On the first row a mismatch of the
/// diagonal parts is a failure too; elsewhere formula mismatches are
/// recorded as discrepancies.
pub fn eta12_report<S: Specialize>(a: &OmegaUElement, spec: &RepSpec<S>, jmax: usize) -> Result<Eta12Report<S>> {
    check_index(spec, jmax)?;
    let oracle = first_line(a, spec)?;
    let pairs = split_pairs(a, &spec.q, jmax + 1)?;
    let use_f = spec.family == RepFamily::PiPrimeMu;
    let (h, other) = (side(&pairs, use_f), side(&pairs, !use_f));
    let mut entries = Vec::with_capacity(jmax + 1);
    for j in 0..=jmax {
        let kernel = kernel_entry(&pairs, spec, j);
        let formula = wn_paper(&h, &spec.q, j)?.eval(&spec.param);
        let swapped = wn_paper(&other, &spec.q, j)?.eval(&spec.param);
        let diagonal_oracle = first_line(&level_part(a, j), spec)?.swap_remove(j);
        let diagonal_formula = (h[j].eval(&spec.param) + h[j].at_zero())
            * powu(&spec.param, j as u64)
            * powu(&spec.q, tri(j));
        let o = &oracle[j];
        let status = if !same(&kernel, o)
            || (spec.family == RepFamily::PiLambda && !same(&diagonal_oracle, &diagonal_formula))
        {
            Status::Fail
        } else if same(&formula, o) {
            Status::Pass
        } else {
            Status::DiscrepancyRecorded
        };
        entries.push(EtaEntry {
            j,
            difference: o.clone() - formula.clone(),
            oracle: o.clone(),
            kernel,
            formula,
            swapped,
            diagonal_oracle,
            diagonal_formula,
            status,
        });
    }
    Ok(Eta12Report {
        family: spec.family,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_plane;
    use crate::omega::{to_omega, OmegaMonomial};
    use crate::scalar::{GaussianRational, QScalar};
    use crate::testing::arb_omega;
    use num_complex::Complex64;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn lam() -> QScalar {
        QScalar::constant(GaussianRational::complex((3, 2), (1, 3)))
    }

    fn spec(family: RepFamily, dim: usize) -> RepSpec<QScalar> {
        RepSpec::new(family, lam(), QScalar::q(), dim)
    }

    fn omega(src: &str) -> OmegaUElement {
        to_omega(&parse_plane(src).unwrap())
    }

    #[test]
    fn pure_y_level_zero() {
        // g = 2 + y + 3y^2: entry 0 is g(lambda), the rest vanish.
        let a = omega("2 + y + 3*y^2");
        let s = spec(RepFamily::PiLambda, 6);
        let l = lam();
        let g_at = QScalar::from(2) + l.clone() + QScalar::from(3) * l.clone() * l;
        let v = eta_oracle_vector(&a, &s).unwrap();
        assert_eq!(v[0], g_at);
        assert!(v[1..].iter().all(Zero::is_zero));
        let r = eta12_report(&a, &s, 4).unwrap();
        assert_eq!(r.entries[0].status, Status::Pass);
        assert!(r.entries[0].difference.is_zero());
        assert!(r.kernel_agrees() && r.diagonals_agree());
        // The formula also picks up derivatives of g at later entries.
        assert_eq!(r.discrepancies(), vec![1, 2]);
    }

    #[test]
    fn powers_of_u_have_one_entry() {
        for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
            for n in 0..8u32 {
                let a = OmegaUElement::basis(OmegaMonomial::U(n), QScalar::one());
                let s = spec(family, 10);
                let v = eta_oracle_vector(&a, &s).unwrap();
                let want = crate::verify::wn::powu(&lam(), n as u64) * QScalar::q_pow(n * (n + 1) / 2);
                for (j, e) in v.iter().enumerate() {
                    assert_eq!(e, &if j == n as usize { want.clone() } else { QScalar::zero() });
                }
                let r = eta12_report(&a, &s, 9).unwrap();
                assert_eq!(r.status(), Status::Pass, "{family:?} n = {n}");
                assert_eq!(r.entries[n as usize].diagonal_formula, want);
            }
        }
    }

    #[test]
    fn x_times_u() {
        let a = omega("x*u");
        let s = spec(RepFamily::PiLambda, 5);
        let want = lam() * QScalar::q_pow(2);
        assert_eq!(eta_entry_oracle(&a, &s, 2).unwrap(), want);
        assert_eq!(eta_corrected_kernel(&a, &s, 2).unwrap(), want);
        let v = eta_oracle_vector(&a, &s).unwrap();
        assert_eq!(v.iter().filter(|e| !e.is_zero()).count(), 1);
        let r = eta12_report(&a, &s, 4).unwrap();
        let e = &r.entries[2];
        assert_eq!(e.status, Status::DiscrepancyRecorded);
        assert!(e.formula.is_zero());
        assert_eq!(e.swapped, lam() * QScalar::q());
        assert_eq!(e.difference, want);
        assert!(eta_entry_oracle(&a, &s, 5).is_err());
    }

    #[test]
    fn column_evaluates_f_at_shifted_point() {
        // x u: column entry 1 is mu^2 q^2, while the formula evaluates f_1 at mu.
        let a = omega("x*u");
        let s = spec(RepFamily::PiPrimeMu, 4);
        let r = eta12_report(&a, &s, 3).unwrap();
        let mu = lam();
        assert_eq!(r.entries[1].oracle, mu.clone() * mu.clone() * QScalar::q_pow(2));
        assert_eq!(r.entries[1].formula, mu.clone() * mu * QScalar::q());
        assert_eq!(r.entries[1].status, Status::DiscrepancyRecorded);
        assert!(r.kernel_agrees());
    }

    #[test]
    fn float_kernel() {
        let a = omega("3*x^2*u + y*u^2 - 2*u^3 + x^4");
        for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
            let s = RepSpec::new(family, Complex64::new(0.7, -0.2), Complex64::new(0.4, 0.5), 12);
            let r = eta12_report(&a, &s, 11).unwrap();
            assert!(r.kernel_agrees());
            assert_ne!(r.status(), Status::Fail);
        }
        let json = serde_json::to_value(eta12_report(&a, &spec(RepFamily::PiLambda, 8), 3).unwrap()).unwrap();
        assert_eq!(json["family"], "PI_LAMBDA");
        assert!(json["entries"][0]["oracle"].is_string());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn kernel_matches_matrices(a in arb_omega(6, 8)) {
            for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
                let r = eta12_report(&a, &spec(family, 11), 10).unwrap();
                prop_assert!(r.kernel_agrees());
                prop_assert_ne!(r.status(), Status::Fail);
                if family == RepFamily::PiLambda {
                    prop_assert!(r.diagonals_agree());
                }
            }
        }
    }
}
