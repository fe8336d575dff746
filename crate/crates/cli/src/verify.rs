//! Golden table of the worked examples: positivity, products, bounds and
//! optimal degrees, each recomputed from scratch.

use std::f64::consts::PI;

use num_complex::Complex64;
use poincare_core::factor::LinearFactor;
use poincare_core::rational::{int, pow10};
use poincare_core::{
    curtiss_terms, expand, feasible_at_degree, is_positive, multiply, opt, Angle, FactorSpec, Polynomial, Precision,
    Rational,
};

use crate::Failure;

const DIGITS: Precision = Precision::Approx { digits: 50 };

pub struct Claim {
    pub name: &'static str,
    pub expected: String,
    check: Box<dyn Fn() -> Result<String, String>>,
}

pub struct Row {
    pub name: &'static str,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

fn claim<F: Fn() -> Result<String, String> + 'static>(name: &'static str, expected: &str, check: F) -> Claim {
    Claim { name, expected: expected.to_string(), check: Box::new(check) }
}

fn f1() -> Polynomial {
    Polynomial::from_ints(&[10, 2, 10, 1, 1])
}

fn f2() -> Polynomial {
    Polynomial::from_ints(&[10, -2, -10, -1, 1])
}

fn f3() -> Polynomial {
    Polynomial::from_ints(&[10, -2, 10, -1, 1])
}

fn angles(nums: &[i64]) -> Vec<Angle> {
    nums.iter().map(|&n| Angle::new(n, 24).expect("valid angle")).collect()
}

fn radii(exponents: &[u32]) -> Vec<Rational> {
    exponents.iter().map(|&k| pow10(k)).collect()
}

fn with_linear(mut spec: FactorSpec, p: Rational) -> FactorSpec {
    spec.linear.push(LinearFactor { p });
    spec
}

fn opt_of(spec: &FactorSpec) -> Result<String, String> {
    let f = expand(spec, DIGITS).map_err(|e| e.to_string())?;
    opt(&f, 6).map(|r| r.opt.to_string()).map_err(|e| e.to_string())
}

fn positivity(f: &Polynomial) -> Result<String, String> {
    let v = is_positive(f).map_err(|e| e.to_string())?;
    Ok(if v.positive { "positive" } else { "not positive" }.to_string())
}

fn pair_feasible_at_one(r2: i64) -> Result<String, String> {
    let spec = FactorSpec::from_angles(&angles(&[10, 11]), &[int(1), int(r2)]);
    let f = expand(&spec, DIGITS).map_err(|e| e.to_string())?;
    let out = feasible_at_degree(&f, 1).map_err(|e| e.to_string())?;
    Ok(if out.feasible { "degree-1 multiplier" } else { "none at degree 1" }.to_string())
}

/// All complex roots by Durand–Kerner iteration (floating point, diagnostics only).
pub fn numeric_roots(f: &Polynomial) -> Vec<Complex64> {
    let monic = f.make_monic();
    let c: Vec<f64> = monic.coeffs().iter().map(poincare_core::rational::to_f64).collect();
    let n = c.len() - 1;
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (roots[i] - roots[j]));
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Curtiss bound from numerically located roots; refuses when some `π/θ`
/// lies too close to an integer to round reliably.
pub fn numeric_curtiss_bound(f: &Polynomial) -> Result<u64, String> {
    let mut total = 0;
    for z in numeric_roots(f) {
        if z.im <= 1e-9 {
            continue;
        }
        let ratio = PI / z.arg();
        if (ratio - ratio.round()).abs() < 1e-6 {
            return Err(format!("π/θ = {ratio} is too close to an integer"));
        }
        total += ratio.ceil() as u64 - 2;
    }
    Ok(total)
}

pub fn claims() -> Vec<Claim> {
    let base_angles = angles(&[7, 10, 11, 14]);
    let three = FactorSpec::from_angles(&angles(&[7, 10, 11]), &radii(&[0, 1, 2]));
    let four = FactorSpec::from_angles(&base_angles, &radii(&[0, 1, 2, 3]));
    let phi = Angle::new(14, 24).expect("valid angle");

    let mut out = vec![
        claim("f1 = x^4 + x^3 + 10x^2 + 2x + 10 is positive", "positive", || positivity(&f1())),
        claim("f2 = x^4 - x^3 - 10x^2 - 2x + 10 is not positive", "not positive", || positivity(&f2())),
        claim("f3 = x^4 - x^3 + 10x^2 - 2x + 10 is positive", "positive", || positivity(&f3())),
        claim("(x + 1)·f3", "x^5 + 9x^3 + 8x^2 + 8x + 10", || {
            Ok(multiply(&Polynomial::from_ints(&[1, 1]), &f3()).to_string())
        }),
        claim("(x^2 + x + 1)·f3", "x^6 + 10x^4 + 7x^3 + 18x^2 + 8x + 10", || {
            Ok(multiply(&Polynomial::from_ints(&[1, 1, 1]), &f3()).to_string())
        }),
        claim("opt(f3)", "1", || opt(&f3(), 4).map(|r| r.opt.to_string()).map_err(|e| e.to_string())),
        claim("Curtiss bound of f3 (numeric root angles)", "2", || numeric_curtiss_bound(&f3()).map(|b| b.to_string())),
    ];
    let spec = FactorSpec::from_angles(&base_angles, &[int(1), int(1), int(1), int(1)]);
    out.push(claim("bound terms for angles 7,10,11,14 over 24", "2,1,1,0; b = 4", move || {
        let terms = curtiss_terms(&spec).map_err(|e| e.to_string())?;
        let list: Vec<String> = terms.iter().map(|t| t.contribution.to_string()).collect();
        let b: u64 = terms.iter().map(|t| t.contribution).sum();
        Ok(format!("{}; b = {b}", list.join(",")))
    }));
    let unit = with_linear(FactorSpec::from_angles(&base_angles, &[int(1), int(1), int(1), int(1)]), int(1));
    out.push(claim("opt with unit radii and x + 1", "1", move || opt_of(&unit)));
    let spread = with_linear(four.clone(), pow10(4));
    out.push(claim("opt with radii 10^(i-1) and x + 10^4", "4", move || opt_of(&spread)));
    out.push(claim("angles 10,11 over 24 with r2 = 1", "degree-1 multiplier", || pair_feasible_at_one(1)));
    out.push(claim("angles 10,11 over 24 with r2 = 10", "none at degree 1", || pair_feasible_at_one(10)));
    let low = three.union(&FactorSpec::from_angles(&[phi], &[int(1)]));
    out.push(claim("three factors times h at 14/24, r = 1", "3", move || opt_of(&low)));
    let high = three.union(&FactorSpec::from_angles(&[phi], &[pow10(3)]));
    out.push(claim("three factors times h at 14/24, r = 10^3", "4", move || opt_of(&high)));
    let low = with_linear(four.clone(), int(1));
    out.push(claim("four factors times x + 1", "3", move || opt_of(&low)));
    let high = with_linear(four, pow10(4));
    out.push(claim("four factors times x + 10^4", "4", move || opt_of(&high)));
    out
}

pub fn evaluate(claims: &[Claim]) -> Vec<Row> {
    claims
        .iter()
        .map(|c| {
            let (observed, pass) = match (c.check)() {
                Ok(v) => {
                    let pass = v == c.expected;
                    (v, pass)
                }
                Err(e) => (format!("error: {e}"), false),
            };
            Row { name: c.name, expected: c.expected.clone(), observed, pass }
        })
        .collect()
}

pub fn run() -> Result<(), Failure> {
    let rows = evaluate(&claims());
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &rows {
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!("{status}  {:width$}  expected {}  observed {}", r.name, r.expected, r.observed);
    }
    let failed: Vec<&str> = rows.iter().filter(|r| !r.pass).map(|r| r.name).collect();
    println!("{}/{} claims hold", rows.len() - failed.len(), rows.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("failing claims: {}", failed.join("; "))))
    }
}
