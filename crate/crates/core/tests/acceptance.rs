//! The eleven acceptance criteria, one PASS/FAIL line each.

use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use qplane::omega::{beta_gamma_expand, from_omega, to_beta_gamma, to_omega, OmegaMonomial};
use qplane::random::{exact_poly, float_poly, omega_element, plane_element, positive_rational, rng_for};
use qplane::rep::{growth_profile, nilpotent_series_substitute, rep_apply, upper_triangular_truncation};
use qplane::seminorm::{cw_norm, dosi_from_beta_gamma, dosi_norm, weight_submult_check, DosiIndex, WeightSpec};
use qplane::verify::{coefficient_identity_check, eta12_report, hnset_check, Status};
use qplane::{GaussianRational, OmegaUElement, PlaneElement, Poly, QScalar, RepFamily, RepSpec, TruncatedOperator};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn tri(n: u32) -> i64 {
    n as i64 * (n as i64 + 1) / 2
}

fn sym(c: GaussianRational) -> QScalar {
    QScalar::constant(c)
}

fn c1_sile() -> Outcome {
    let start = Instant::now();
    let xy = PlaneElement::x() * PlaneElement::y();
    let mut acc = PlaneElement::one();
    for n in 1..=32u32 {
        acc = &acc * &xy;
        let want = PlaneElement::monomial(QScalar::q_pow(tri(n)), n, n);
        ensure(acc == want, || format!("(xy)^{n} = {acc}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("n <= 32 in {:?}", start.elapsed()))
}

/// Shift and diagonal matrices written out entrywise.
fn e_op(n: usize) -> TruncatedOperator<QScalar> {
    TruncatedOperator::from_fn(n, |i, j| if j == i + 1 { QScalar::one() } else { QScalar::zero() })
}

fn f_op(n: usize) -> TruncatedOperator<QScalar> {
    TruncatedOperator::from_fn(n, |i, j| if i == j + 1 { QScalar::one() } else { QScalar::zero() })
}

fn d_op(n: usize) -> TruncatedOperator<QScalar> {
    TruncatedOperator::from_fn(n, |i, j| if i == j { QScalar::q_pow(i as i64) } else { QScalar::zero() })
}

fn c2_commutation() -> Outcome {
    let start = Instant::now();
    let q = QScalar::q();
    for n in [2usize, 8, 32, 64] {
        let (e, d, f) = (e_op(n), d_op(n), f_op(n));
        ensure(e.matmul(&d).unwrap() == d.matmul(&e).unwrap().scale(&q), || format!("ED != qDE at N = {n}"))?;
        ensure(d.matmul(&f).unwrap() == f.matmul(&d).unwrap().scale(&q), || format!("DF != qFD at N = {n}"))?;
    }
    let mut rng = rng_for(2, 0);
    let lambda = sym(GaussianRational::complex((3, 2), (-1, 2)));
    for i in 0..100 {
        let a = plane_element(&mut rng, 6, 6);
        let b = plane_element(&mut rng, 6, 6);
        let family = if i % 2 == 0 { RepFamily::PiLambda } else { RepFamily::PiPrimeMu };
        let spec = RepSpec::new(family, lambda.clone(), q.clone(), 32);
        let lhs = rep_apply(&spec, &(&a * &b)).unwrap();
        let rhs = rep_apply(&spec, &a).unwrap().matmul(&rep_apply(&spec, &b).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("pi(ab) != pi(a) pi(b) for pair {i}"))?;
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("N in {{2, 8, 32, 64}}, 100 pairs at N = 32 in {:?}", start.elapsed()))
}

fn c3_first_row() -> Outcome {
    let z = sym(GaussianRational::complex((2, 3), (1, 1)));
    let q = QScalar::q();
    for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
        let spec = RepSpec::new(family, z.clone(), q.clone(), 14);
        let mut zn = QScalar::one();
        for n in 0..=12u32 {
            let m = rep_apply(&spec, &PlaneElement::u().pow(n)).unwrap();
            let line = match family {
                RepFamily::PiLambda => m.first_row(),
                RepFamily::PiPrimeMu => m.first_column(),
            };
            let want = &zn * &QScalar::q_pow(tri(n));
            for (j, e) in line.iter().enumerate() {
                let expect = if j == n as usize { want.clone() } else { QScalar::zero() };
                ensure(*e == expect, || format!("{family:?}: u^{n}, entry {j} = {e}"))?;
            }
            zn = &zn * &z;
        }
    }
    Ok("n <= 12, first row of pi_lambda and first column of pi'_mu".into())
}

fn c4_eta() -> Outcome {
    let mut rng = rng_for(4, 0);
    let q = QScalar::q();
    let (mut recorded, mut entries) = (0usize, 0usize);
    for i in 0..50 {
        let a = omega_element(&mut rng, 6, 8);
        let z = sym(qplane::random::nonzero_gaussian(&mut rng));
        for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
            let spec = RepSpec::new(family, z.clone(), q.clone(), 11);
            let m = rep_apply(&spec, &from_omega(&a)).unwrap();
            let truth = match family {
                RepFamily::PiLambda => m.first_row(),
                RepFamily::PiPrimeMu => m.first_column(),
            };
            let r = eta12_report(&a, &spec, 10).unwrap();
            for e in &r.entries {
                entries += 1;
                ensure(e.kernel == truth[e.j], || format!("element {i} {family:?}: kernel differs at j = {}", e.j))?;
                ensure(e.oracle == truth[e.j], || format!("element {i}: oracle differs at j = {}", e.j))?;
                if family == RepFamily::PiLambda {
                    ensure(e.diagonal_oracle == e.diagonal_formula, || format!("element {i}: diagonal differs at j = {}", e.j))?;
                }
                let expected = if e.formula == truth[e.j] {
                    Status::Pass
                } else {
                    recorded += 1;
                    Status::DiscrepancyRecorded
                };
                ensure(e.status == expected, || format!("element {i} {family:?} j = {}: status {}", e.j, e.status))?;
            }
        }
    }
    // The leading term of u^n agrees on both sides.
    for family in [RepFamily::PiLambda, RepFamily::PiPrimeMu] {
        let z = sym(GaussianRational::ratio(5, 4));
        let spec = RepSpec::new(family, z.clone(), q.clone(), 12);
        for n in 0..=10u32 {
            let a = OmegaUElement::basis(OmegaMonomial::U(n), QScalar::one());
            let r = eta12_report(&a, &spec, 11).unwrap();
            let e = &r.entries[n as usize];
            let want = qplane::Poly::monomial(QScalar::q_pow(tri(n)), n as usize).eval(&z);
            ensure(e.formula == want && e.oracle == want, || format!("{family:?}: leading term of u^{n}"))?;
        }
    }
    ensure(recorded > 0, || "no discrepancy recorded".into())?;
    Ok(format!("{entries} entries, kernel exact, {recorded} formula discrepancies recorded"))
}

fn c5_hnset() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_for(5, 0);
    for i in 0..200 {
        let rho = [0.5, 1.0, 3.0][i % 3];
        let q_abs = [0.3, 0.7][(i / 3) % 2];
        let q = Complex64::from_polar(q_abs, rng.gen_range(0.0..std::f64::consts::TAU));
        let h: Vec<_> = (0..9)
            .map(|_| {
                let d = rng.gen_range(0..=8);
                float_poly::<f64, _>(&mut rng, d, 1.0)
            })
            .collect();
        let n = rng.gen_range(0..=8);
        let o = hnset_check(&h, rho, q, n, 1024).unwrap();
        ensure(o.lhs_lower <= o.rhs_upper, || format!("instance {i}: bracket check {o:?}"))?;
        ensure(o.lhs_sampled() <= o.rhs_sampled() * (1.0 + 1e-6), || format!("instance {i}: sampled check {o:?}"))?;
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("200 instances in {:?}", start.elapsed()))
}

fn c6_coefficients() -> Outcome {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    for d in 1..=30u32 {
        for m in [0u32, 3, 17] {
            ensure(coefficient_identity_check(m + d, m).unwrap(), || format!("n - m = {d}, m = {m}"))?;
        }
        // Closed-form geometric sum as an independent check.
        let b = r(5, 2);
        let geo = (num_traits::pow(b.clone(), d as usize - 1) - BigRational::one()) / r(3, 2);
        let lhs = r(9, 4) + r(27, 8) * geo;
        ensure(lhs == r(9, 4) * num_traits::pow(b, d as usize - 1), || format!("closed form at {d}"))?;
    }
    Ok("1 <= n - m <= 30, exact".into())
}

fn c7_weights() -> Outcome {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    for s in [r(1, 2), r(9, 10)] {
        ensure(weight_submult_check(&WeightSpec::bs(s.clone()).unwrap(), 100), || format!("B_s, s = {s}"))?;
        // With 0 < s < 1, s^a <= s^b iff a >= b.
        for m in 0..=100u64 {
            for n in 0..=100u64 {
                ensure((m + n) * (m + n) >= m * m + n * n, || format!("exponents at {m}, {n}"))?;
            }
        }
    }
    let mut rng = rng_for(7, 0);
    let ws = [WeightSpec::Trivial, WeightSpec::bs(r(1, 2)).unwrap(), WeightSpec::bs(r(9, 10)).unwrap()];
    for i in 0..100 {
        let (da, db) = (rng.gen_range(0..8), rng.gen_range(0..8));
        let a = exact_poly(&mut rng, da);
        let b = exact_poly(&mut rng, db);
        let rr = positive_rational(&mut rng);
        for w in &ws {
            let lhs = cw_norm(&a.mul(&b), &rr, w).unwrap();
            let rhs = cw_norm(&a, &rr, w).unwrap().mul(&cw_norm(&b, &rr, w).unwrap());
            ensure(lhs.possibly_le(&rhs), || format!("series pair {i}: {lhs} > {rhs}"))?;
        }
    }
    Ok("B_(1/2), B_(9/10) for m, n <= 100; 100 series pairs".into())
}

fn c8_dosi() -> Outcome {
    let mut rng = rng_for(8, 0);
    let qe = GaussianRational::ratio(2, 3);
    let qf = Complex64::new(0.3, 0.4);
    for i in 0..50 {
        let a = plane_element(&mut rng, 6, 8);
        let bg = to_beta_gamma(&to_omega(&a));
        let rr = positive_rational(&mut rng);
        let idx = rng.gen_range(0..=6);
        for which in [DosiIndex::PrimeL(idx), DosiIndex::DprimeK(idx)] {
            let x = dosi_norm(&a, &qe, &rr, which).unwrap();
            let y = dosi_from_beta_gamma(&bg, &qe, &rr, which).unwrap();
            ensure(x.exact.is_some() && x.exact == y.exact, || format!("element {i} exact: {x} vs {y}"))?;
            let x = dosi_norm(&a, &qf, &rr, which).unwrap();
            let y = dosi_from_beta_gamma(&bg, &qf, &rr, which).unwrap();
            let rel = (x.midpoint() - y.midpoint()).abs() / x.midpoint().abs().max(f64::MIN_POSITIVE);
            ensure(x.midpoint() == y.midpoint() || rel <= 1e-12, || format!("element {i} float: {x} vs {y}"))?;
        }
    }
    Ok("50 elements, exact at q = 2/3, float at q = 0.3+0.4i".into())
}

fn c9_roundtrip() -> Outcome {
    let mut rng = rng_for(9, 0);
    for i in 0..500 {
        let a = plane_element(&mut rng, 6, 8);
        let b = to_omega(&a);
        let bg = to_beta_gamma(&b);
        ensure(from_omega(&bg.to_omega()) == a, || format!("element {i}: {a}"))?;
        ensure(beta_gamma_expand(&bg) == a, || format!("element {i}: expansion of {a}"))?;
        ensure(to_omega(&from_omega(&b)) == b, || format!("element {i}: omega side"))?;
    }
    Ok("500 elements".into())
}

fn c10_nilpotent() -> Outcome {
    let q = QScalar::q();
    let tp = |p: usize| {
        let spec = RepSpec::new(RepFamily::PiLambda, QScalar::one(), q.clone(), p);
        let (x, y) = upper_triangular_truncation(&spec, p).unwrap();
        x.matmul(&y).unwrap()
    };
    for p in 1..=16usize {
        let b = tp(p);
        ensure(b.pow(p as u32).is_zero(), || format!("(E_p D_p)^p != 0 at p = {p}"))?;
        ensure(!b.pow(p as u32 - 1).is_zero(), || format!("(E_p D_p)^(p-1) = 0 at p = {p}"))?;
    }
    let mut rng = rng_for(10, 0);
    for i in 0..20 {
        let p = rng.gen_range(2..=16);
        let deg = rng.gen_range(0..=20);
        let series: Poly<QScalar> = exact_poly(&mut rng, deg).map(|c| sym(c.clone()));
        let b = tp(p);
        let got = nilpotent_series_substitute(&series, &b, p).unwrap();
        let mut direct = TruncatedOperator::zeros(p);
        let mut power = TruncatedOperator::identity(p);
        for c in series.coeffs() {
            direct = direct.add(&power.scale(c)).unwrap();
            power = power.matmul(&b).unwrap();
        }
        ensure(got == direct, || format!("series {i}, p = {p}"))?;
    }
    Ok("p <= 16; 20 series".into())
}

fn c11_growth() -> Outcome {
    let mut worst = 0.0f64;
    for q_abs in [0.3, 0.9] {
        let spec = RepSpec::new(RepFamily::PiLambda, Complex64::new(1.0, 0.0), Complex64::new(q_abs, 0.0), 32);
        // At lambda = 1 both generators have row-sum norm 1.
        for g in growth_profile(&spec, 20).unwrap() {
            let bound = q_abs.powf((g.n as f64 + 1.0) / 2.0);
            ensure((g.reference - bound).abs() <= 1e-12 * bound, || format!("reference at n = {}", g.n))?;
            ensure(g.estimate <= (1.0 + 1e-9) * bound, || format!("|q| = {q_abs}, n = {}: {} > {}", g.n, g.estimate, bound))?;
            worst = worst.max(g.estimate / bound);
        }
    }
    Ok(format!("|q| in {{0.3, 0.9}}, n <= 20, largest estimate/reference {worst:.12}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("(xy)^n = q^(n(n+1)/2) y^n x^n", c1_sile),
        ("commutation relations and rep homomorphism", c2_commutation),
        ("first row / column of pi(u^n)", c3_first_row),
        ("eta kernel against matrix oracle", c4_eta),
        ("h_n estimate sweep", c5_hnset),
        ("coefficient identity", c6_coefficients),
        ("weight and cw submultiplicativity", c7_weights),
        ("dosi norms, two paths", c8_dosi),
        ("basis round trips", c9_roundtrip),
        ("nilpotency in T_p and series substitution", c10_nilpotent),
        ("growth of pi(u)^n", c11_growth),
    ];
    // Straight to stdout so the lines show without --nocapture.
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(info) => writeln!(out, "PASS criterion {:>2}: {name} ({info})", i + 1).unwrap(),
            Err(why) => {
                writeln!(out, "FAIL criterion {:>2}: {name} ({why})", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
