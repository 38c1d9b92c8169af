//! Named verification suites. One seed fans out to one random stream per
//! suite; every check records the seed and stream it drew from.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::estimates::{coefficient_identity_check, hnset_check, majorization_ratios, HnsetOutcome};
use super::eta::{eta12_report, eta_oracle_vector, ETA_TOL};
use super::report::{CheckReport, Status, SuiteReport};
use super::wn::{powu, tri};
use crate::error::{Error, Result};
use crate::omega::{beta_gamma_expand, from_omega, to_beta_gamma, to_omega, to_pairs, OmegaMonomial, OmegaUElement, PairConvention};
use crate::plane::sile_identity_check;
use crate::poly::Poly;
use crate::random::{exact_poly, float_poly, nonzero_gaussian, omega_element, plane_element, positive_rational, rng_for};
use crate::rep::{
    diagonal, growth_profile, left_shift, nilpotent_series_substitute, rep_apply, right_shift,
    upper_triangular_truncation, RepFamily, RepSpec, TruncatedOperator,
};
use crate::scalar::{GaussianRational, Magnitude, QScalar, Scalar, Specialize};
use crate::seminorm::{cw_norm, dosi_from_beta_gamma, dosi_norm, weight_submult_check, DosiIndex, WeightSpec, DEFAULT_SAMPLES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Symbolic `q`, or exact rational `q` where a value is needed.
    Exact,
    /// Double-precision complex `q`.
    Float,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Error::InvalidParameter(format!("unknown mode '{s}', expected exact or float"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub mode: Mode,
    /// Used where a single value of `q` is needed; the identity suites keep `q` symbolic.
    #[serde(serialize_with = "super::as_text")]
    pub q: GaussianRational,
    pub trunc: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            mode: Mode::Exact,
            q: GaussianRational::ratio(1, 2),
            trunc: 32,
            seed: 0,
            samples: DEFAULT_SAMPLES,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.q.is_zero() {
            return Err(Error::ZeroQ);
        }
        if self.trunc < 2 {
            return Err(Error::BadDim(format!("truncation N = {} < 2", self.trunc)));
        }
        if self.samples < 8 {
            return Err(Error::InvalidParameter(format!("need at least 8 samples, got {}", self.samples)));
        }
        Ok(())
    }

    fn q_float(&self) -> Complex64 {
        self.q.to_complex()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Sile,
    Commutation,
    Eta,
    Hnset,
    Coeff,
    Weights,
    Dosi,
    Roundtrip,
    Nilpotent,
    Growth,
    Majorization,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Sile,
        Suite::Commutation,
        Suite::Eta,
        Suite::Hnset,
        Suite::Coeff,
        Suite::Weights,
        Suite::Dosi,
        Suite::Roundtrip,
        Suite::Nilpotent,
        Suite::Growth,
        Suite::Majorization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sile => "sile",
            Suite::Commutation => "commutation",
            Suite::Eta => "eta",
            Suite::Hnset => "hnset",
            Suite::Coeff => "coeff",
            Suite::Weights => "weights",
            Suite::Dosi => "dosi",
            Suite::Roundtrip => "roundtrip",
            Suite::Nilpotent => "nilpotent",
            Suite::Growth => "growth",
            Suite::Majorization => "majorization",
            Suite::All => "all",
        }
    }

    fn stream(self) -> u64 {
        Suite::EACH.iter().position(|&s| s == self).map_or(0, |i| i as u64 + 1)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite '{s}'")))
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let list = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in list {
        let mut rng = rng_for(cfg.seed, s.stream());
        let params = json!({"seed": cfg.seed, "stream": s.stream()});
        let ctx = Ctx { cfg, params, rng: &mut rng };
        checks.extend(match s {
            Suite::Sile => sile(ctx),
            Suite::Commutation => match cfg.mode {
                Mode::Exact => commutation(ctx, QScalar::q()),
                Mode::Float => commutation(ctx, cfg.q_float()),
            },
            Suite::Eta => match cfg.mode {
                Mode::Exact => eta(ctx, QScalar::q()),
                Mode::Float => eta(ctx, cfg.q_float()),
            },
            Suite::Hnset => hnset(ctx),
            Suite::Coeff => coeff(ctx),
            Suite::Weights => weights(ctx),
            Suite::Dosi => dosi(ctx),
            Suite::Roundtrip => roundtrip(ctx),
            Suite::Nilpotent => match cfg.mode {
                Mode::Exact => nilpotent(ctx, QScalar::q()),
                Mode::Float => nilpotent(ctx, cfg.q_float()),
            },
            Suite::Growth => growth(ctx),
            Suite::Majorization => majorization(ctx),
            Suite::All => unreachable!(),
        }?);
    }
    Ok(SuiteReport {
        suite: suite.name().into(),
        seed: cfg.seed,
        checks,
    })
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    params: Value,
    rng: &'a mut ChaCha8Rng,
}

impl Ctx<'_> {
    fn params(&self, extra: Value) -> Value {
        let mut p = self.params.clone();
        if let (Some(p), Value::Object(e)) = (p.as_object_mut(), extra) {
            p.extend(e);
        }
        p
    }

    fn check(&self, name: &str, extra: Value, bad: &[String], what: &str) -> CheckReport {
        let details = if bad.is_empty() {
            what.to_string()
        } else {
            format!("{what}: failed at {}", bad.join(", "))
        };
        CheckReport::new(name, self.params(extra), Status::from_ok(bad.is_empty()), details)
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

fn sile(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let bad: Vec<String> = (1..=32u32)
        .filter(|&n| !sile_identity_check(n))
        .map(|n| format!("n = {n}"))
        .collect();
    Ok(vec![ctx.check("sile/xy_power", json!({"nmax": 32}), &bad, "(xy)^n = q^(n(n+1)/2) y^n x^n, n = 1..=32")])
}

fn commutation<S: Specialize>(ctx: Ctx, q: S) -> Result<Vec<CheckReport>> {
    let mut ed = Vec::new();
    let mut df = Vec::new();
    for n in [2usize, 8, 32, 64] {
        let (e, d, f) = (left_shift::<S>(n), diagonal(n, &q), right_shift::<S>(n));
        if !e.matmul(&d)?.approx_eq(&d.matmul(&e)?.scale(&q), ETA_TOL) {
            ed.push(format!("N = {n}"));
        }
        if !d.matmul(&f)?.approx_eq(&f.matmul(&d)?.scale(&q), ETA_TOL) {
            df.push(format!("N = {n}"));
        }
    }
    let lambda = S::from_gaussian(&GaussianRational::ratio(3, 2));
    let mut hom = Vec::new();
    for i in 0..100 {
        let a = plane_element(ctx.rng, 6, 6);
        let b = plane_element(ctx.rng, 6, 6);
        let ab = &a * &b;
        for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
            let spec = RepSpec::new(family, lambda.clone(), q.clone(), ctx.cfg.trunc);
            let lhs = rep_apply(&spec, &ab)?;
            let rhs = rep_apply(&spec, &a)?.matmul(&rep_apply(&spec, &b)?)?;
            if !lhs.approx_eq(&rhs, ETA_TOL) {
                hom.push(format!("pair {i} ({family:?})"));
            }
        }
    }
    let mode = mode_name(ctx.cfg.mode);
    Ok(vec![
        ctx.check("commutation/ED=qDE", json!({"dims": [2, 8, 32, 64], "mode": mode}), &ed, "E D = q D E"),
        ctx.check("commutation/DF=qFD", json!({"dims": [2, 8, 32, 64], "mode": mode}), &df, "D F = q F D"),
        ctx.check(
            "commutation/homomorphism",
            json!({"pairs": 100, "max_deg": 6, "trunc": ctx.cfg.trunc, "lambda": "3/2", "mode": mode}),
            &hom,
            "pi(ab) = pi(a) pi(b) for both families",
        ),
    ])
}

fn eta<S: Specialize>(ctx: Ctx, q: S) -> Result<Vec<CheckReport>> {
    let dim = ctx.cfg.trunc.max(13);
    let mode = mode_name(ctx.cfg.mode);
    let mut out = Vec::new();
    for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
        let (tag, line) = match family {
            RepFamily::PiLambda => ("row", "first row"),
            RepFamily::PiPrimeMu => ("column", "first column"),
        };
        let lambda = S::from_gaussian(&GaussianRational::complex((3, 2), (1, 3)));
        let spec = RepSpec::new(family, lambda.clone(), q.clone(), dim);
        let mut bad = Vec::new();
        for n in 0..=12u32 {
            let a = OmegaUElement::basis(OmegaMonomial::U(n), QScalar::one());
            let v = eta_oracle_vector(&a, &spec)?;
            let want = powu(&lambda, n as u64) * powu(&q, tri(n as usize));
            let ok = v.iter().enumerate().all(|(j, e)| {
                let target = if j == n as usize { want.clone() } else { S::zero() };
                (e.clone() - target).is_negligible(ETA_TOL)
            });
            if !ok {
                bad.push(format!("n = {n}"));
            }
        }
        out.push(ctx.check(
            &format!("eta/{tag}/u_power"),
            json!({"nmax": 12, "trunc": dim, "mode": mode}),
            &bad,
            &format!("{line} of pi(u^n) is the single entry z^n q^(n(n+1)/2) at n"),
        ));
    }
    let mut per_family: Vec<(RepFamily, Vec<String>, Vec<String>, Vec<CheckReport>)> = [RepFamily::PiLambda, RepFamily::PiPrimeMu]
        .into_iter()
        .map(|f| (f, Vec::new(), Vec::new(), Vec::new()))
        .collect();
    for i in 0..50 {
        let a = omega_element(ctx.rng, 6, 8);
        let z = nonzero_gaussian(ctx.rng);
        for (family, kernel_bad, diag_bad, records) in per_family.iter_mut() {
            let spec = RepSpec::new(*family, S::from_gaussian(&z), q.clone(), dim);
            let r = eta12_report(&a, &spec, 10)?;
            if !r.kernel_agrees() {
                kernel_bad.push(format!("element {i}"));
            }
            if !r.diagonals_agree() {
                diag_bad.push(format!("element {i}"));
            }
            let js = r.discrepancies();
            if !js.is_empty() {
                let name = match family {
                    RepFamily::PiLambda => "row",
                    RepFamily::PiPrimeMu => "column",
                };
                let first = &r.entries[js[0]];
                records.push(
                    CheckReport::new(
                        format!("eta/{name}/formula/{i}"),
                        ctx.params(json!({"element": i, "a": a.to_string(), "param": z.to_string(), "jmax": 10, "mode": mode})),
                        Status::DiscrepancyRecorded,
                        format!("W_j formula differs from the matrix entry at j = {js:?}"),
                    )
                    .with_sides(&first.oracle, &first.formula),
                );
            }
        }
    }
    for (family, kernel_bad, diag_bad, records) in per_family {
        let tag = match family {
            RepFamily::PiLambda => "row",
            RepFamily::PiPrimeMu => "column",
        };
        let params = json!({"elements": 50, "max_deg": 6, "jmax": 10, "trunc": dim, "mode": mode});
        out.push(ctx.check(&format!("eta/{tag}/kernel"), params.clone(), &kernel_bad, "closed-form kernel equals the matrix entries"));
        let mut diag = ctx.check(&format!("eta/{tag}/diagonal"), params, &diag_bad, "leading terms (h_j(z) + h_j(0)) z^j q^(j(j+1)/2) match");
        if family == RepFamily::PiPrimeMu && diag.status == Status::Fail {
            diag.status = Status::DiscrepancyRecorded;
            diag.details.push_str("; the column evaluates f_j at mu q^j");
        }
        out.push(diag);
        out.extend(records);
    }
    Ok(out)
}

fn hnset(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let samples = ctx.cfg.samples;
    let mut bad = Vec::new();
    let mut worst: Option<(f64, HnsetOutcome)> = None;
    for i in 0..200 {
        let rho = [0.5, 1.0, 3.0][i % 3];
        let q_abs = [0.3, 0.7][(i / 3) % 2];
        let q = Complex64::from_polar(q_abs, ctx.rng.gen_range(0.0..std::f64::consts::TAU));
        let h: Vec<Poly<Complex64>> = (0..9)
            .map(|_| {
                let d = ctx.rng.gen_range(0..=8);
                float_poly::<f64, _>(ctx.rng, d, 1.0)
            })
            .collect();
        let n = ctx.rng.gen_range(0..=8);
        let o = hnset_check(&h, rho, q, n, samples)?;
        if !o.ok() {
            bad.push(format!("instance {i}"));
        }
        if o.rhs_sampled() > 0.0 {
            let ratio = o.lhs_sampled() / o.rhs_sampled();
            if worst.is_none_or(|(w, _)| ratio > w) {
                worst = Some((ratio, o));
            }
        }
    }
    let mut sweep = ctx.check(
        "hnset/sweep",
        json!({"instances": 200, "max_deg": 8, "nmax": 8, "rho": [0.5, 1.0, 3.0], "q_abs": [0.3, 0.7], "samples": samples}),
        &bad,
        "||h_n|| rho^n |q|^(n(n+1)/2) bounded by the W_m sum (bracket and sampled)",
    );
    if let Some((ratio, o)) = worst {
        sweep = sweep.with_sides(o.lhs_sampled(), o.rhs_sampled());
        sweep.details.push_str(&format!("; largest sampled ratio {ratio:.4} at n = {}, rho = {}", o.n, o.rho));
    }
    let z = Complex64::new(1.0, 0.0);
    let h0 = Poly::new(vec![z, -z * 1.5]);
    let o = hnset_check(&[h0], 1.0, Complex64::new(0.5, 0.0), 0, samples)?;
    let level0 = CheckReport::new(
        "hnset/level0",
        ctx.params(json!({"h0": "1 - 3t/2", "rho": 1.0})),
        Status::from_ok(o.ok()),
        "||h|| <= 3/2 ||h + h(0)||",
    )
    .with_sides(o.lhs_sampled(), o.rhs_sampled());
    Ok(vec![sweep, level0])
}

fn coeff(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let mut bad = Vec::new();
    for d in 1..=30u32 {
        for m in [0u32, 7] {
            if !coefficient_identity_check(d + m, m)? {
                bad.push(format!("n - m = {d}, m = {m}"));
            }
        }
    }
    Ok(vec![ctx.check(
        "coeff/identity",
        json!({"max_gap": 30}),
        &bad,
        "(3/2)^2 + (3/2)^3 sum_i (5/2)^i = (3/2)^2 (5/2)^(n-m-1), exact",
    )])
}

fn cw_pair_ok<S: Scalar + Magnitude>(a: &Poly<S>, b: &Poly<S>, r: &BigRational, w: &WeightSpec) -> Result<bool> {
    let lhs = cw_norm(&a.mul(b), r, w)?;
    let rhs = cw_norm(a, r, w)?.mul(&cw_norm(b, r, w)?);
    Ok(lhs.possibly_le(&rhs))
}

fn weights(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let rat = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let mut out = Vec::new();
    for (s, label) in [(rat(1, 2), "1/2"), (rat(9, 10), "9/10")] {
        let bad = if weight_submult_check(&WeightSpec::bs(s)?, 100) { vec![] } else { vec!["some m, n".into()] };
        out.push(ctx.check(
            &format!("weights/bs_submult/{label}"),
            json!({"s": label, "nmax": 100}),
            &bad,
            "s^((m+n)^2) <= s^(m^2+n^2), exact",
        ));
    }
    let ws = [WeightSpec::Trivial, WeightSpec::bs(rat(1, 2))?, WeightSpec::bs(rat(9, 10))?];
    let mut bad = Vec::new();
    for i in 0..100 {
        let r = positive_rational(ctx.rng);
        let (da, db) = (ctx.rng.gen_range(0..8), ctx.rng.gen_range(0..8));
        let ok = match ctx.cfg.mode {
            Mode::Exact => {
                let (a, b) = (exact_poly(ctx.rng, da), exact_poly(ctx.rng, db));
                ws.iter().map(|w| cw_pair_ok(&a, &b, &r, w)).collect::<Result<Vec<_>>>()?
            }
            Mode::Float => {
                let a = float_poly::<f64, _>(ctx.rng, da, 3.0);
                let b = float_poly::<f64, _>(ctx.rng, db, 3.0);
                ws.iter().map(|w| cw_pair_ok(&a, &b, &r, w)).collect::<Result<Vec<_>>>()?
            }
        };
        if ok.contains(&false) {
            bad.push(format!("series pair {i}"));
        }
    }
    out.push(ctx.check(
        "weights/cw_submult",
        json!({"pairs": 100, "weights": ["trivial", "bs 1/2", "bs 9/10"], "mode": mode_name(ctx.cfg.mode)}),
        &bad,
        "||ab|| <= ||a|| ||b|| in C_omega",
    ));
    Ok(out)
}

fn dosi(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let qe = ctx.cfg.q.clone();
    let qf = ctx.cfg.q_float();
    let mut bad = Vec::new();
    for i in 0..50 {
        let a = plane_element(ctx.rng, 6, 8);
        let bg = to_beta_gamma(&to_omega(&a));
        let r = positive_rational(ctx.rng);
        let idx = ctx.rng.gen_range(0..=6);
        for which in [DosiIndex::PrimeL(idx), DosiIndex::DprimeK(idx)] {
            let ok = match ctx.cfg.mode {
                Mode::Exact => {
                    let x = dosi_norm(&a, &qe, &r, which)?;
                    let y = dosi_from_beta_gamma(&bg, &qe, &r, which)?;
                    x.exact.is_some() && x.exact == y.exact
                }
                Mode::Float => {
                    let x = dosi_norm(&a, &qf, &r, which)?;
                    let y = dosi_from_beta_gamma(&bg, &qf, &r, which)?;
                    x.agrees_with(&y, 1e-12)
                }
            };
            if !ok {
                bad.push(format!("element {i} {which:?}"));
            }
        }
    }
    Ok(vec![ctx.check(
        "dosi/two_paths",
        json!({"elements": 50, "max_deg": 6, "q": qe.to_string(), "mode": mode_name(ctx.cfg.mode)}),
        &bad,
        "normal-form coefficients and beta/gamma coefficients give the same norm",
    )])
}

fn roundtrip(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let mut bad = Vec::new();
    for i in 0..500 {
        let a = plane_element(ctx.rng, 6, 8);
        let b = to_omega(&a);
        let bg = to_beta_gamma(&b);
        let ok = from_omega(&b) == a
            && bg.to_omega() == b
            && from_omega(&bg.to_omega()) == a
            && beta_gamma_expand(&bg) == a
            && [PairConvention::OmegaPair, PairConvention::RPhiXY]
                .into_iter()
                .all(|c| to_pairs(&b, c).to_element() == b);
        if !ok {
            bad.push(format!("element {i}"));
        }
    }
    Ok(vec![ctx.check(
        "roundtrip/bases",
        json!({"elements": 500, "max_deg": 6}),
        &bad,
        "plane -> omega -> beta/gamma -> plane, and both pair conventions",
    )])
}

fn nilpotent<S: Specialize>(ctx: Ctx, q: S) -> Result<Vec<CheckReport>> {
    let tp = |p: usize| -> Result<TruncatedOperator<S>> {
        let spec = RepSpec::new(RepFamily::PiLambda, S::one(), q.clone(), p);
        let (x, y) = upper_triangular_truncation(&spec, p)?;
        x.matmul(&y)
    };
    let mut bad = Vec::new();
    for p in 1..=16usize {
        let b = tp(p)?;
        if !b.pow(p as u32).is_negligible(0.0) || b.pow(p as u32 - 1).is_zero() {
            bad.push(format!("p = {p}"));
        }
    }
    let mut series_bad = Vec::new();
    for i in 0..20 {
        let p = ctx.rng.gen_range(2..=16);
        let deg = ctx.rng.gen_range(0..=20);
        let series = exact_poly(ctx.rng, deg).map(S::from_gaussian);
        let b = tp(p)?;
        let got = nilpotent_series_substitute(&series, &b, p)?;
        let mut direct = TruncatedOperator::zeros(p);
        for (n, c) in series.coeffs().iter().enumerate() {
            direct = direct.add(&b.pow(n as u32).scale(c))?;
        }
        if !got.approx_eq(&direct, ETA_TOL) {
            series_bad.push(format!("series {i} (p = {p})"));
        }
    }
    let mode = mode_name(ctx.cfg.mode);
    Ok(vec![
        ctx.check("nilpotent/index", json!({"pmax": 16, "mode": mode}), &bad, "(E_p D_p)^p = 0 and (E_p D_p)^(p-1) != 0"),
        ctx.check(
            "nilpotent/series",
            json!({"series": 20, "max_deg": 20, "mode": mode}),
            &series_bad,
            "truncated substitution equals the direct power sum",
        ),
    ])
}

fn growth(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let dim = ctx.cfg.trunc.max(21);
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for q_abs in [0.3, 0.9] {
        let spec = RepSpec::new(RepFamily::PiLambda, Complex64::new(1.0, 0.0), Complex64::new(q_abs, 0.0), dim);
        for g in growth_profile(&spec, 20)? {
            if g.estimate > (1.0 + 1e-9) * g.reference {
                bad.push(format!("|q| = {q_abs}, n = {}", g.n));
            }
        }
    }
    out.push(ctx.check(
        "growth/rooted_bound",
        json!({"q_abs": [0.3, 0.9], "nmax": 20, "lambda": 1.0, "trunc": dim}),
        &bad,
        "||pi(u)^n||^(1/n) <= |q|^((n+1)/2) (||Y|| ||X||)^(1/n)",
    ));
    let spec = RepSpec::new(RepFamily::PiLambda, Complex64::new(1.5, 0.0), Complex64::new(0.5, 0.0), dim);
    let prof = growth_profile(&spec, 20)?;
    let unrooted: Vec<String> = prof
        .iter()
        .filter(|g| g.estimate > (1.0 + 1e-9) * g.reference_unrooted)
        .map(|g| format!("n = {}", g.n))
        .collect();
    out.push(ctx.check(
        "growth/unrooted_bound",
        json!({"q_abs": 0.5, "nmax": 20, "lambda": 1.5, "trunc": dim}),
        &unrooted,
        "||pi(u)^n||^(1/n) <= |q|^((n+1)/2) ||Y|| ||X||",
    ));
    let rooted: Vec<_> = prof.iter().filter(|g| g.estimate > (1.0 + 1e-9) * g.reference).collect();
    if let Some(g) = rooted.first() {
        out.push(
            CheckReport::new(
                "growth/rooted_bound/lambda_1.5",
                ctx.params(json!({"q_abs": 0.5, "nmax": 20, "lambda": 1.5, "trunc": dim})),
                Status::DiscrepancyRecorded,
                format!("rooted reference exceeded for {} of 20 values of n when |lambda| > 1", rooted.len()),
            )
            .with_sides(g.estimate, g.reference),
        );
    }
    Ok(out)
}

fn majorization(ctx: Ctx) -> Result<Vec<CheckReport>> {
    let q = ctx.cfg.q_float();
    if q.norm() >= 1.0 {
        return Err(Error::InvalidParameter(format!("majorization needs |q| < 1, got {}", q.norm())));
    }
    let rhos = [1.0, 2.0, 2.5, 3.0, 4.0];
    let (mut below, mut above) = (0.0f64, 0.0f64);
    let mut bad = Vec::new();
    for i in 0..10 {
        let a = omega_element(ctx.rng, 4, 6);
        for p in majorization_ratios(&a, q, &rhos, ctx.cfg.samples)? {
            if !p.ratio.is_finite() {
                bad.push(format!("element {i}, rho = {}", p.rho));
            } else if p.rho > 2.5 {
                above = above.max(p.ratio);
            } else {
                below = below.max(p.ratio);
            }
        }
    }
    let mut c = ctx.check(
        "majorization/ratio",
        json!({"elements": 10, "rho": rhos, "q": ctx.cfg.q.to_string()}),
        &bad,
        "reported only",
    );
    c.details
        .push_str(&format!("; largest |a|/||W||~ for rho > 5/2: {above:.4}, for rho <= 5/2: {below:.4}"));
    Ok(vec![c])
}
