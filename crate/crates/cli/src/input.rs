//! Turning command-line flags into a polynomial or factor spec.

use std::fs;

use clap::Args;
use poincare_core::factor::{parse_angle_list, LinearFactor};
use poincare_core::{expand, rational, FactorSpec, Polynomial, Precision, Rational};

use crate::Failure;

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// JSON file, or inline JSON starting with `{`. `{"coeffs": [...]}` is a raw
    /// polynomial; anything else is read as a factor spec.
    #[arg(long, conflicts_with_all = ["coeffs", "angles"])]
    pub input: Option<String>,

    /// Raw ascending coefficients, e.g. "10,-2,10,-1,1".
    #[arg(long, conflicts_with = "angles")]
    pub coeffs: Option<String>,

    /// Root angles in units of π, e.g. "7/24,10/24".
    #[arg(long)]
    pub angles: Option<String>,

    /// Radii matching --angles (default: all 1).
    #[arg(long, requires = "angles")]
    pub radii: Option<String>,

    /// Linear factors x + p, as a list of p.
    #[arg(long, conflicts_with_all = ["input", "coeffs"])]
    pub linear: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct PrecisionArgs {
    /// Decimal digits kept when rounding irrational cosines.
    #[arg(long, default_value_t = 50)]
    pub precision: u32,

    /// Reject irrational cosines instead of rounding them.
    #[arg(long)]
    pub exact: bool,
}

impl PrecisionArgs {
    pub fn mode(&self) -> Precision {
        if self.exact {
            Precision::Exact
        } else {
            Precision::Approx { digits: self.precision }
        }
    }
}

#[derive(Clone, Debug)]
pub enum Input {
    Spec(FactorSpec),
    Raw(Polynomial),
}

impl Input {
    pub fn polynomial(&self, precision: Precision) -> Result<Polynomial, Failure> {
        match self {
            Input::Spec(spec) => Ok(expand(spec, precision)?),
            Input::Raw(p) => Ok(p.clone()),
        }
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(|p| Ok(rational::parse(p)?)).collect()
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Input, Failure> {
        if let Some(src) = &self.input {
            let text = if src.trim_start().starts_with('{') {
                src.clone()
            } else {
                fs::read_to_string(src).map_err(|e| Failure::Invalid(format!("cannot read {src}: {e}")))?
            };
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("bad JSON input: {e}")))?;
            let bad = |e: serde_json::Error| Failure::Invalid(format!("bad input: {e}"));
            return if value.get("coeffs").is_some() {
                Ok(Input::Raw(serde_json::from_value(value).map_err(bad)?))
            } else {
                let spec: FactorSpec = serde_json::from_value(value).map_err(bad)?;
                spec.validate()?;
                Ok(Input::Spec(spec))
            };
        }
        if let Some(c) = &self.coeffs {
            let p = Polynomial::new(parse_rational_list(c)?);
            if p.is_zero() {
                return Err(Failure::Invalid("zero polynomial".into()));
            }
            return Ok(Input::Raw(p));
        }
        let mut spec = FactorSpec::default();
        if let Some(a) = &self.angles {
            let angles = parse_angle_list(a)?;
            let radii = match &self.radii {
                Some(r) => parse_rational_list(r)?,
                None => vec![rational::int(1); angles.len()],
            };
            if radii.len() != angles.len() {
                return Err(Failure::Invalid(format!("{} angles but {} radii", angles.len(), radii.len())));
            }
            spec = FactorSpec::from_angles(&angles, &radii);
        }
        if let Some(l) = &self.linear {
            spec.linear = parse_rational_list(l)?.into_iter().map(|p| LinearFactor { p }).collect();
        }
        if spec.is_empty() {
            return Err(Failure::Invalid("no input: give --input, --coeffs, --angles or --linear".into()));
        }
        spec.validate()?;
        Ok(Input::Spec(spec))
    }
}
