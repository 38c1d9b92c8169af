use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use num_traits::ToPrimitive;
use serde::Serialize;

use qplane::expr::{parse_plane, parse_positive_rational, parse_qscalar};
use qplane::omega::{to_beta_gamma, to_omega, to_pairs, OmegaMonomial, PairConvention};
use qplane::rep::{growth_profile, rep_apply};
use qplane::seminorm::{
    cw_norm, dosi_norm, pi_family_norm, plane_seminorm, tilde_norm, DosiIndex, PiIndex, SweepRow, DEFAULT_SAMPLES,
};
use qplane::verify::{eta12_report, run_suite, wn_sequence, Mode, Suite, SuiteConfig};
use qplane::{
    GaussianRational, Magnitude, NumericScalar, PlaneElement, Poly, QScalar, RepFamily, RepSpec, SeminormValue,
    Specialize, WeightSpec,
};

use crate::args::{Command, FamilyArg, Format, Global, ModeArg, NormFamily, RepArgs, SeminormArgs, Show, Target};

type C64 = NumericScalar<f64>;

/// Text to emit and whether any check failed.
pub struct Outcome {
    pub output: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, failed: false }
    }
}

pub fn run(g: &Global, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Normalize { expr } => normalize(g, expr).map(Outcome::ok),
        Command::Convert { to, expr } => convert(g, *to, expr).map(Outcome::ok),
        Command::Seminorm(a) => seminorm(g, a).map(Outcome::ok),
        Command::Rep(a) => rep(g, a).map(Outcome::ok),
        Command::Verify { suite } => verify(g, suite),
    }
}

fn samples() -> Result<usize> {
    match std::env::var("QPLANE_SAMPLES") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("QPLANE_SAMPLES must be a positive integer, got '{v}'")),
        Err(_) => Ok(DEFAULT_SAMPLES),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn no_csv(what: &str) -> anyhow::Error {
    anyhow!("csv output is not available for {what}")
}

/// The global `q` as a number; symbolic `q` is rejected.
fn q_constant(g: &Global) -> Result<GaussianRational> {
    parse_qscalar(&g.q)?
        .as_constant()
        .ok_or_else(|| anyhow!("this command needs a numeric q, got '{}'", g.q))
}

fn constant(src: &str) -> Result<GaussianRational> {
    parse_qscalar(src)?
        .as_constant()
        .ok_or_else(|| anyhow!("expected a number, got '{src}'"))
}

fn normalize(g: &Global, expr: &str) -> Result<String> {
    let a = parse_plane(expr)?;
    match g.format {
        Format::Text => Ok(a.to_string()),
        Format::Json => json(&a),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                k: u32,
                l: u32,
                coeff: String,
            }
            csv_rows(a.terms().map(|(&(k, l), c)| Row { k, l, coeff: c.to_string() }))
        }
    }
}

fn convert(g: &Global, to: Target, expr: &str) -> Result<String> {
    let b = to_omega(&parse_plane(expr)?);
    let pairs = |c| to_pairs(&b, c);
    match (to, g.format) {
        (_, Format::Csv) => Err(no_csv("convert")),
        (Target::Omega, Format::Text) => Ok(b.to_string()),
        (Target::Omega, Format::Json) => json(&b),
        (Target::BetaGamma, Format::Text) => Ok(to_beta_gamma(&b).to_string()),
        (Target::BetaGamma, Format::Json) => json(&to_beta_gamma(&b)),
        (Target::Pairs, Format::Text) => Ok(pairs(PairConvention::OmegaPair).to_string()),
        (Target::Pairs, Format::Json) => json(&pairs(PairConvention::OmegaPair)),
        (Target::Rphixy, Format::Text) => Ok(pairs(PairConvention::RPhiXY).to_string()),
        (Target::Rphixy, Format::Json) => json(&pairs(PairConvention::RPhiXY)),
    }
}

fn family_name(f: NormFamily) -> &'static str {
    match f {
        NormFamily::Cw => "cw",
        NormFamily::Plane => "plane",
        NormFamily::Tilde => "tilde",
        NormFamily::DosiPrime => "dosi_prime",
        NormFamily::DosiDprime => "dosi_dprime",
        NormFamily::PiPrime => "pi_prime",
        NormFamily::PiDprime => "pi_dprime",
    }
}

fn parse_weight(src: &str) -> Result<WeightSpec> {
    if src == "trivial" {
        return Ok(WeightSpec::Trivial);
    }
    let s = src
        .strip_prefix("bs:")
        .ok_or_else(|| anyhow!("weight must be 'trivial' or 'bs:<s>', got '{src}'"))?;
    Ok(WeightSpec::bs(parse_positive_rational(s)?)?)
}

/// Coefficients of `a` as a series in `u`; fails unless `a` lies in `C[u]`.
fn u_series(a: &PlaneElement) -> Result<Vec<QScalar>> {
    let b = to_omega(a);
    let mut out = Vec::new();
    for (m, c) in b.terms() {
        let OmegaMonomial::U(j) = m else {
            bail!("the cw family needs an element of C[u], got {a}");
        };
        let j = j as usize;
        if out.len() <= j {
            out.resize(j + 1, QScalar::default());
        }
        out[j] = c.clone();
    }
    Ok(out)
}

fn indexed_norm<S: Specialize + Magnitude>(
    f: NormFamily,
    a: &PlaneElement,
    q: &S,
    r: &num_rational::BigRational,
    idx: u32,
) -> Result<SeminormValue> {
    Ok(match f {
        NormFamily::DosiPrime => dosi_norm(a, q, r, DosiIndex::PrimeL(idx))?,
        NormFamily::DosiDprime => dosi_norm(a, q, r, DosiIndex::DprimeK(idx))?,
        NormFamily::PiPrime => pi_family_norm(a, q, r, PiIndex::PrimeK(idx))?,
        NormFamily::PiDprime => pi_family_norm(a, q, r, PiIndex::DprimeL(idx))?,
        _ => unreachable!(),
    })
}

fn cw_value<S: Specialize + Magnitude>(series: &[QScalar], q: &S, r: &num_rational::BigRational, w: &WeightSpec) -> Result<SeminormValue> {
    let p = Poly::new(series.iter().map(|c| S::specialize(c, q)).collect::<qplane::Result<Vec<_>>>()?);
    Ok(cw_norm(&p, r, w)?)
}

fn float_pairs(a: &PlaneElement, q: C64, conv: PairConvention) -> Result<Vec<(Poly<C64>, Poly<C64>)>> {
    to_pairs(&to_omega(a), conv)
        .entries
        .iter()
        .map(|(f, g)| Ok((f.specialize(&q)?, g.specialize(&q)?)))
        .collect()
}

fn require_small_q(q: C64) -> Result<()> {
    let a = q.norm();
    if !(a > 0.0 && a < 1.0) {
        bail!("|q| must lie in (0, 1) here, got {a}");
    }
    Ok(())
}

fn seminorm(g: &Global, s: &SeminormArgs) -> Result<String> {
    let a = parse_plane(&s.expr)?;
    let qe = q_constant(g)?;
    let qf: C64 = qe.to_complex();
    let rs = s
        .r
        .iter()
        .map(|r| parse_positive_rational(r))
        .collect::<qplane::Result<Vec<_>>>()?;
    let name = family_name(s.family).to_string();
    let samples = samples()?;
    let mut rows: Vec<(SweepRow, SeminormValue)> = Vec::new();
    let mut push = |index, r: Option<&num_rational::BigRational>, rho, v: SeminormValue| {
        let row = SweepRow {
            norm_family: name.clone(),
            index,
            r: r.and_then(|r| r.to_f64()),
            rho,
            lower: v.lower,
            upper: v.upper,
        };
        rows.push((row, v));
    };
    match s.family {
        NormFamily::DosiPrime | NormFamily::DosiDprime | NormFamily::PiPrime | NormFamily::PiDprime => {
            for &idx in &s.index {
                for r in &rs {
                    let v = match g.mode {
                        ModeArg::Exact => indexed_norm(s.family, &a, &qe, r, idx)?,
                        ModeArg::Float => indexed_norm(s.family, &a, &qf, r, idx)?,
                    };
                    push(Some(idx), Some(r), None, v);
                }
            }
        }
        NormFamily::Cw => {
            let series = u_series(&a)?;
            let w = parse_weight(&s.weight)?;
            if g.mode == ModeArg::Float && matches!(w, WeightSpec::Bs { .. }) {
                require_small_q(qf)?;
            }
            for r in &rs {
                let v = match g.mode {
                    ModeArg::Exact => cw_value(&series, &qe, r, &w)?,
                    ModeArg::Float => cw_value(&series, &qf, r, &w)?,
                };
                push(None, Some(r), None, v);
            }
        }
        NormFamily::Plane => {
            let pairs = float_pairs(&a, qf, PairConvention::OmegaPair)?;
            for r in &rs {
                let rf = r.to_f64().unwrap_or(f64::NAN);
                for &rho in &s.rho {
                    push(None, Some(r), Some(rho), plane_seminorm(&pairs, rho, rf, qf.norm(), samples)?);
                }
            }
        }
        NormFamily::Tilde => {
            require_small_q(qf)?;
            let pairs = float_pairs(&a, qf, PairConvention::RPhiXY)?;
            let fs: Vec<_> = pairs.iter().map(|p| p.0.clone()).collect();
            let gs: Vec<_> = pairs.iter().map(|p| p.1.clone()).collect();
            let (wf, wg) = (wn_sequence(&fs, &qf), wn_sequence(&gs, &qf));
            let at = |w: &[Poly<C64>], n: usize| w.get(n).cloned().unwrap_or_else(Poly::zero);
            let ws: Vec<_> = (0..wf.len().max(wg.len())).map(|n| (at(&wf, n), at(&wg, n))).collect();
            for &rho in &s.rho {
                push(None, None, Some(rho), tilde_norm(&ws, rho, samples)?);
            }
        }
    }
    match g.format {
        Format::Csv => csv_rows(rows.iter().map(|(r, _)| r)),
        Format::Json => json(&rows.iter().map(|(r, _)| r).collect::<Vec<_>>()),
        Format::Text => {
            let mut out = String::new();
            for (row, v) in &rows {
                let mut label = row.norm_family.clone();
                if let Some(i) = row.index {
                    write!(label, " index={i}")?;
                }
                if let Some(r) = row.r {
                    write!(label, " r={r}")?;
                }
                if let Some(rho) = row.rho {
                    write!(label, " rho={rho}")?;
                }
                writeln!(out, "{label}: {v}")?;
            }
            Ok(out.trim_end().to_string())
        }
    }
}

fn rep(g: &Global, args: &RepArgs) -> Result<String> {
    let family = match args.family {
        FamilyArg::PiLambda => RepFamily::PiLambda,
        FamilyArg::PiPrimeMu => RepFamily::PiPrimeMu,
    };
    let a = parse_plane(&args.expr)?;
    if args.show == Show::Growth {
        let spec = RepSpec::new(family, constant(&args.param)?.to_complex(), q_constant(g)?.to_complex(), g.trunc);
        let prof = growth_profile::<f64>(&spec, args.nmax)?;
        return match g.format {
            Format::Json => json(&prof),
            Format::Csv => {
                #[derive(Serialize)]
                struct Row {
                    n: u32,
                    estimate: f64,
                    reference: f64,
                }
                csv_rows(prof.iter().map(|p| Row { n: p.n, estimate: p.estimate, reference: p.reference }))
            }
            Format::Text => Ok(prof
                .iter()
                .map(|p| format!("n={} estimate={:.6e} reference={:.6e} unrooted={:.6e}", p.n, p.estimate, p.reference, p.reference_unrooted))
                .collect::<Vec<_>>()
                .join("\n")),
        };
    }
    match g.mode {
        ModeArg::Exact => {
            let spec = RepSpec::new(family, parse_qscalar(&args.param)?, parse_qscalar(&g.q)?, g.trunc);
            rep_show(g, args, &spec, &a)
        }
        ModeArg::Float => {
            let spec = RepSpec::new(family, constant(&args.param)?.to_complex(), q_constant(g)?.to_complex(), g.trunc);
            rep_show::<C64>(g, args, &spec, &a)
        }
    }
}

fn rep_show<S: Specialize>(g: &Global, args: &RepArgs, spec: &RepSpec<S>, a: &PlaneElement) -> Result<String> {
    if args.show == Show::Matrix {
        let m = rep_apply(spec, a)?;
        return match g.format {
            Format::Text => Ok(m.to_string()),
            Format::Json => json(&m),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
                for row in m.rows() {
                    w.write_record(row.iter().map(|e| e.to_string()))?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
        };
    }
    let jmax = args.jmax.unwrap_or(spec.dim - 1);
    let r = eta12_report(&to_omega(a), spec, jmax)?;
    match g.format {
        Format::Json => json(&r),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                j: usize,
                oracle: String,
                kernel: String,
                formula: String,
                difference: String,
                status: String,
            }
            csv_rows(r.entries.iter().map(|e| Row {
                j: e.j,
                oracle: e.oracle.to_string(),
                kernel: e.kernel.to_string(),
                formula: e.formula.to_string(),
                difference: e.difference.to_string(),
                status: e.status.to_string(),
            }))
        }
        Format::Text => Ok(r
            .entries
            .iter()
            .map(|e| format!("j={} entry={} formula={} [{}]", e.j, e.oracle, e.formula, e.status))
            .collect::<Vec<_>>()
            .join("\n")),
    }
}

fn verify(g: &Global, suite: &str) -> Result<Outcome> {
    let suite: Suite = suite.parse()?;
    let cfg = SuiteConfig {
        mode: match g.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        },
        q: q_constant(g)?,
        trunc: g.trunc,
        seed: g.seed,
        samples: samples()?,
    };
    let report = run_suite(suite, &cfg)?;
    let output = match g.format {
        Format::Text => report.to_string(),
        Format::Json => json(&report)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                status: String,
                lhs: Option<&'a str>,
                rhs: Option<&'a str>,
                details: &'a str,
            }
            csv_rows(report.checks.iter().map(|c| Row {
                name: &c.name,
                status: c.status.to_string(),
                lhs: c.lhs.as_deref(),
                rhs: c.rhs.as_deref(),
                details: &c.details,
            }))?
        }
    };
    Ok(Outcome {
        output,
        failed: report.has_failures(),
    })
}
