//! The single-instance subcommands.

use std::path::PathBuf;

use poincare_core::bound::FactorRef;
use poincare_core::extremal::{construct_extremal, extend_quadrant2, Extension};
use poincare_core::factor::parse_angle_list;
use poincare_core::multiplier::verify_outcome;
use poincare_core::{
    curtiss_terms, hull_separation_test, is_positive, opt_for_spec, rational, Angle, OptResult, Polynomial,
    Precision,
};
use serde::Serialize;

use crate::input::{Input, InputArgs, PrecisionArgs};
use crate::{emit, to_json, Failure, LadderArgs};

/// JSON to `--output` plus `summary` on stdout, or JSON on stdout.
fn report<T: Serialize>(output: Option<&PathBuf>, value: &T, summary: &str) -> Result<(), Failure> {
    let json = to_json(value);
    match output {
        Some(_) => {
            emit(output, &json)?;
            println!("{summary}");
            Ok(())
        }
        None => emit(None, &json),
    }
}

pub fn check(input: &InputArgs, precision: &PrecisionArgs, output: Option<&PathBuf>) -> Result<(), Failure> {
    let f = input.resolve()?.polynomial(precision.mode())?;
    let verdict = is_positive(&f)?;
    let summary = if verdict.positive { "positive" } else { "not positive" };
    report(output, &verdict, summary)
}

#[derive(Serialize)]
struct BoundRow {
    factor: String,
    ceil_pi_over_theta: u64,
    contribution: u64,
}

#[derive(Serialize)]
struct BoundReport {
    terms: Vec<BoundRow>,
    bound: u64,
}

pub fn bound(input: &InputArgs, output: Option<&PathBuf>) -> Result<(), Failure> {
    let Input::Spec(spec) = input.resolve()? else {
        return Err(Failure::Invalid("bound needs root angles; raw coefficients are not factored".into()));
    };
    let terms: Vec<BoundRow> = curtiss_terms(&spec)?
        .into_iter()
        .map(|t| {
            let factor = match t.source {
                FactorRef::Angle(i) => format!("angle {}/{}", spec.angles[i].num, spec.angles[i].den),
                FactorRef::Quad(i) => format!("cos {}", rational::format(&spec.quad[i].t)),
            };
            BoundRow { factor, ceil_pi_over_theta: t.ceil_value, contribution: t.contribution }
        })
        .collect();
    let bound = terms.iter().map(|t| t.contribution).sum();
    for t in &terms {
        println!("{}: ceil(pi/theta) = {}, contribution {}", t.factor, t.ceil_pi_over_theta, t.contribution);
    }
    println!("bound {bound}");
    if output.is_some() {
        emit(output, &to_json(&BoundReport { terms, bound }))?;
    }
    Ok(())
}

fn opt_result(input: &Input, precision: Precision, max_degree: Option<usize>) -> Result<(Polynomial, OptResult), Failure> {
    match input {
        Input::Spec(spec) => {
            let f = input.polynomial(precision)?;
            Ok((f, opt_for_spec(spec, precision, max_degree)?))
        }
        Input::Raw(f) => {
            let cap = max_degree
                .ok_or_else(|| Failure::Invalid("raw coefficients need --max-degree (no bound is available)".into()))?;
            Ok((f.clone(), poincare_core::opt(f, cap)?))
        }
    }
}

fn approx_caveat(result: &OptResult, precision: Precision) {
    if let Some(digits) = result.precision_digits {
        eprintln!(
            "note: cosines rounded to {digits} digits (|error| <= {}); verdicts are exact for the rounded polynomial",
            rational::format(&precision.perturbation_radius())
        );
    }
}

pub fn opt(
    input: &InputArgs,
    precision: &PrecisionArgs,
    max_degree: Option<usize>,
    certificate: Option<&PathBuf>,
    hull_check: bool,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let mode = precision.mode();
    let (f, result) = opt_result(&input.resolve()?, mode, max_degree)?;
    approx_caveat(&result, mode);
    for outcome in &result.per_degree {
        if !verify_outcome(&f, outcome) {
            return Err(Failure::Verification(format!("certificate at degree {} does not re-verify", outcome.s)));
        }
        if hull_check && hull_separation_test(&f, outcome.s)? != outcome.feasible {
            return Err(Failure::Verification(format!("hull test disagrees with the LP at degree {}", outcome.s)));
        }
    }
    if certificate.is_some() {
        emit(certificate, &to_json(&result.per_degree))?;
    }
    let summary = match result.bound {
        Some(b) => format!("opt {} (bound {b})", result.opt),
        None => format!("opt {}", result.opt),
    };
    report(output, &result, &summary)
}

pub fn extremal(
    angles: &str,
    precision: &PrecisionArgs,
    ladder: &LadderArgs,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let angles = parse_angle_list(angles)?;
    let result = construct_extremal(&angles, precision.mode(), &ladder.ladder()?)?;
    if result.opt as u64 != result.bound {
        return Err(Failure::Verification(format!("constructed opt {} differs from bound {}", result.opt, result.bound)));
    }
    let radii: Vec<String> = result.spec.angles.iter().map(|a| format!("{}/{}:{}", a.num, a.den, rational::format(&a.r))).collect();
    report(output, &result, &format!("opt = bound = {}; radii {}", result.opt, radii.join(" ")))
}

#[derive(Serialize)]
struct ExtendReport {
    opt: usize,
    extension: Extension,
}

pub fn extend(
    input: &InputArgs,
    precision: &PrecisionArgs,
    phi: &str,
    max_degree: Option<usize>,
    ladder: &LadderArgs,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let mode = precision.mode();
    let phi: Angle = phi.parse()?;
    let (f, base) = opt_result(&input.resolve()?, mode, max_degree)?;
    approx_caveat(&base, mode);
    let extension = extend_quadrant2(&f, base.opt, phi, mode, &ladder.ladder()?)?;
    let summary = format!("opt {} kept with phi = {}, r = {}", base.opt, extension.phi, rational::format(&extension.radius));
    report(output, &ExtendReport { opt: base.opt, extension }, &summary)
}
