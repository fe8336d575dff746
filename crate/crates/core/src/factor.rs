//! Factored descriptions of polynomials and their expansion.
//!
//! A [`FactorSpec`] lists quadratic factors `x² − 2rt·x + r²` (given by the
//! cosine `t` of the root angle, or by the angle itself as a rational multiple
//! of π) and linear factors `x + p`. Expanding yields a monic polynomial whose
//! roots are exactly the described `r·e^{±iθ}` and `−p`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{multiply, Polynomial};
use crate::rational::{self, Rational};
use crate::trig;

/// An angle `num/den · π` with `0 < num/den <= 1`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Angle {
    num: u64,
    den: u64,
}

impl Angle {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 || num <= 0 || num > den {
            return Err(Error::InvalidInput(format!(
                "angle {num}/{den}·π must satisfy 0 < num/den <= 1"
            )));
        }
        let g = num.gcd(&den);
        Ok(Angle { num: (num / g) as u64, den: (den / g) as u64 })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn as_rational(&self) -> Rational {
        rational::ratio(self.num as i64, self.den as i64)
    }

    /// θ = π: a negative real root.
    pub fn is_straight(&self) -> bool {
        self.num == self.den
    }

    /// 0 < θ < π/2.
    pub fn is_quadrant1(&self) -> bool {
        2 * self.num < self.den
    }

    /// Cosine as an exact rational, available only for Niven angles.
    pub fn exact_cos(&self) -> Option<Rational> {
        trig::niven_cos(self.num as i64, self.den as i64)
    }

    /// Cosine under the given precision mode.
    pub fn cos(&self, precision: Precision) -> Result<Rational> {
        match (self.exact_cos(), precision) {
            (Some(c), _) => Ok(c),
            (None, Precision::Approx { digits }) => Ok(trig::cos_pi_rounded(self.num, self.den, digits)),
            (None, Precision::Exact) => Err(Error::AngleRequiresApprox {
                num: self.num as i64,
                den: self.den as i64,
            }),
        }
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// `"7/24"` means 7π/24; a bare integer `"1"` means π.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("bad angle {s:?}; expected num/den in units of π"));
        match s.split_once('/') {
            Some((n, d)) => Angle::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
            None => Angle::new(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

/// Parses a comma-separated angle list such as `"7/24,10/24"`.
pub fn parse_angle_list(s: &str) -> Result<Vec<Angle>> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect()
}

/// How irrational cosines are handled during expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    /// Only rational cosines are accepted.
    Exact,
    /// Irrational cosines are rounded to `digits` decimal digits and then
    /// carried exactly.
    Approx { digits: u32 },
}

impl Precision {
    pub fn digits(&self) -> Option<u32> {
        match self {
            Precision::Exact => None,
            Precision::Approx { digits } => Some(*digits),
        }
    }

    /// Upper bound on `|t_rounded − cos θ|` for a rounded cosine.
    pub fn perturbation_radius(&self) -> Rational {
        match self {
            Precision::Exact => Rational::zero(),
            Precision::Approx { digits } => rational::pow10(*digits).recip() / rational::int(2),
        }
    }
}

/// `x² − 2rt·x + r²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadFactor {
    #[serde(with = "rational")]
    pub t: Rational,
    #[serde(with = "rational")]
    pub r: Rational,
}

/// Quadratic (or, at θ = π, linear) factor given by its angle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleFactor {
    pub num: i64,
    pub den: i64,
    #[serde(with = "rational")]
    pub r: Rational,
}

impl AngleFactor {
    pub fn new(angle: Angle, r: Rational) -> Self {
        AngleFactor { num: angle.num as i64, den: angle.den as i64, r }
    }

    pub fn angle(&self) -> Result<Angle> {
        Angle::new(self.num, self.den)
    }
}

/// `x + p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFactor {
    #[serde(with = "rational")]
    pub p: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    #[serde(default)]
    pub quad: Vec<QuadFactor>,
    #[serde(default)]
    pub angles: Vec<AngleFactor>,
    #[serde(default)]
    pub linear: Vec<LinearFactor>,
}

pub fn quadratic(t: &Rational, r: &Rational) -> Polynomial {
    Polynomial::new(vec![r * r, -(rational::int(2) * r * t), Rational::one()])
}

pub fn linear(p: &Rational) -> Polynomial {
    Polynomial::new(vec![p.clone(), Rational::one()])
}

impl FactorSpec {
    /// Angle factors with the given radii.
    pub fn from_angles(angles: &[Angle], radii: &[Rational]) -> Self {
        FactorSpec {
            angles: angles.iter().zip(radii).map(|(a, r)| AngleFactor::new(*a, r.clone())).collect(),
            ..Default::default()
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.quad.extend(other.quad.iter().cloned());
        out.angles.extend(other.angles.iter().cloned());
        out.linear.extend(other.linear.iter().cloned());
        out
    }

    pub fn is_empty(&self) -> bool {
        self.quad.is_empty() && self.angles.is_empty() && self.linear.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |q: &Rational, what: &str| {
            if q.is_positive() {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!("{what} must be > 0, got {}", rational::format(q))))
            }
        };
        for q in &self.quad {
            positive(&q.r, "radius")?;
            if q.t <= -Rational::one() || q.t >= Rational::one() {
                return Err(Error::InvalidInput(format!(
                    "cosine must lie in (-1, 1), got {}",
                    rational::format(&q.t)
                )));
            }
        }
        for a in &self.angles {
            a.angle()?;
            positive(&a.r, "radius")?;
        }
        for l in &self.linear {
            positive(&l.p, "linear root magnitude p")?;
        }
        Ok(())
    }

    /// Number of non-real conjugate root pairs.
    pub fn quadratic_count(&self) -> usize {
        self.quad.len() + self.angles.iter().filter(|a| a.num != a.den).count()
    }

    /// Each factor as a polynomial, in listing order (quad, angles, linear).
    pub fn factor_polynomials(&self, precision: Precision) -> Result<Vec<Polynomial>> {
        self.validate()?;
        let mut out = Vec::new();
        for q in &self.quad {
            out.push(quadratic(&q.t, &q.r));
        }
        for a in &self.angles {
            let angle = a.angle()?;
            if angle.is_straight() {
                out.push(linear(&a.r));
            } else {
                out.push(quadratic(&angle.cos(precision)?, &a.r));
            }
        }
        for l in &self.linear {
            out.push(linear(&l.p));
        }
        Ok(out)
    }
}

/// Monic product of all factors in `spec`.
pub fn expand(spec: &FactorSpec, precision: Precision) -> Result<Polynomial> {
    Ok(spec
        .factor_polynomials(precision)?
        .iter()
        .fold(Polynomial::one(), |acc, p| multiply(&acc, p)))
}

/// `e_0, …, e_{2ℓ}` of the roots of a spec made of quadratic factors only,
/// read off the expanded coefficients via `e_k = (−1)^k a_{2ℓ−k}`.
pub fn elementary_symmetric(spec: &FactorSpec, precision: Precision) -> Result<Vec<Rational>> {
    if !spec.linear.is_empty() || spec.angles.iter().any(|a| a.num == a.den) {
        return Err(Error::InvalidInput(
            "elementary_symmetric expects quadratic factors only".into(),
        ));
    }
    let f = expand(spec, precision)?;
    Ok(symmetric_from_monic(&f))
}

/// `e_k = (−1)^k a_{n−k}` for a monic polynomial of degree `n`.
pub fn symmetric_from_monic(f: &Polynomial) -> Vec<Rational> {
    let n = f.degree().unwrap_or(0);
    (0..=n)
        .map(|k| {
            let a = f.coeff(n - k);
            if k % 2 == 0 {
                a
            } else {
                -a
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn angle_normalises_and_orders() {
        let a = Angle::new(10, 24).unwrap();
        assert_eq!((a.num(), a.den()), (5, 12));
        assert!(Angle::new(7, 24).unwrap() < a);
        assert!(Angle::new(0, 3).is_err());
        assert!(Angle::new(25, 24).is_err());
        assert!("1".parse::<Angle>().unwrap().is_straight());
        assert!(!"1/2".parse::<Angle>().unwrap().is_quadrant1());
    }

    #[test]
    fn quadratic_at_right_angle() {
        let spec = FactorSpec { quad: vec![QuadFactor { t: int(0), r: int(1) }], ..Default::default() };
        assert_eq!(expand(&spec, Precision::Exact).unwrap(), Polynomial::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn sum_of_cubes_telescopes() {
        let spec = FactorSpec {
            quad: vec![QuadFactor { t: ratio(1, 2), r: int(1) }],
            linear: vec![LinearFactor { p: int(1) }],
            ..Default::default()
        };
        assert_eq!(expand(&spec, Precision::Exact).unwrap(), Polynomial::from_ints(&[1, 0, 0, 1]));
    }

    #[test]
    fn exact_mode_rejects_irrational_cosines() {
        let spec = FactorSpec::from_angles(&[Angle::new(7, 24).unwrap()], &[int(1)]);
        assert_eq!(
            expand(&spec, Precision::Exact),
            Err(Error::AngleRequiresApprox { num: 7, den: 24 })
        );
        // Niven angles pass in exact mode.
        let niven = FactorSpec::from_angles(
            &["1/2", "1/3", "2/3"].map(|s| s.parse().unwrap()),
            &[int(1), int(1), int(1)],
        );
        assert!(expand(&niven, Precision::Exact).is_ok());
    }

    #[test]
    fn straight_angle_is_linear() {
        let a = FactorSpec::from_angles(&[Angle::new(1, 1).unwrap()], &[int(3)]);
        let l = FactorSpec { linear: vec![LinearFactor { p: int(3) }], ..Default::default() };
        assert_eq!(expand(&a, Precision::Exact).unwrap(), expand(&l, Precision::Exact).unwrap());
        assert_eq!(a.quadratic_count(), 0);
    }

    #[test]
    fn mixed_signs_for_reference_example() {
        let angles: Vec<Angle> = parse_angle_list("7/24,10/24,11/24,14/24").unwrap();
        let mut spec = FactorSpec::from_angles(&angles, &[int(1), int(1), int(1), int(1)]);
        spec.linear.push(LinearFactor { p: int(1) });
        let f = expand(&spec, Precision::Approx { digits: 50 }).unwrap();
        assert_eq!(f.degree(), Some(9));
        assert!(f.is_monic());
        assert!(f.coeffs().iter().any(|c| c.is_negative()));
        assert!(f.coeffs().iter().any(|c| c.is_positive()));
    }

    #[test]
    fn symmetric_values() {
        assert_eq!(elementary_symmetric(&FactorSpec::default(), Precision::Exact).unwrap(), vec![int(1)]);
        let one = FactorSpec { quad: vec![QuadFactor { t: ratio(1, 2), r: int(1) }], ..Default::default() };
        assert_eq!(elementary_symmetric(&one, Precision::Exact).unwrap(), vec![int(1), int(1), int(1)]);
        let with_linear = FactorSpec { linear: vec![LinearFactor { p: int(1) }], ..Default::default() };
        assert!(elementary_symmetric(&with_linear, Precision::Exact).is_err());
    }

    #[test]
    fn validation_errors() {
        let bad_r = FactorSpec { quad: vec![QuadFactor { t: int(0), r: int(0) }], ..Default::default() };
        assert!(bad_r.validate().is_err());
        let bad_t = FactorSpec { quad: vec![QuadFactor { t: int(1), r: int(1) }], ..Default::default() };
        assert!(bad_t.validate().is_err());
        let bad_p = FactorSpec { linear: vec![LinearFactor { p: int(-1) }], ..Default::default() };
        assert!(bad_p.validate().is_err());
    }

    #[test]
    fn spec_json_schema() {
        let json = r#"{"quad":[{"t":"1/2","r":"1"}],"angles":[{"num":7,"den":24,"r":"1"}],"linear":[{"p":"10000"}]}"#;
        let spec: FactorSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.quad[0].t, ratio(1, 2));
        assert_eq!(spec.linear[0].p, int(10000));
        assert_eq!(serde_json::to_string(&spec).unwrap(), json);
        let partial: FactorSpec = serde_json::from_str(r#"{"linear":[{"p":"3"}]}"#).unwrap();
        assert!(partial.quad.is_empty());
    }
}
