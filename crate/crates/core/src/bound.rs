//! The Curtiss degree bound `b(f) = Σ (⌈π/θ_i⌉ − 2)` over non-real root pairs.
//!
//! Symbolic angles give the ceiling by integer arithmetic. For a rational
//! cosine `t = cos θ` the ceiling is the least `m` with `t <= cos(π/m)`,
//! decided exactly: `cos(π/m)` is rational only for `m <= 3`, and for larger
//! `m` an interval enclosure is refined until it separates from `t`.

use std::cmp::Ordering;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{Angle, FactorSpec};
use crate::rational::{self, Rational};
use crate::trig;

/// Which factor of a spec a term came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum FactorRef {
    Quad(usize),
    Angle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AngleTerm {
    pub source: FactorRef,
    /// `⌈π/θ⌉`.
    pub ceil_value: u64,
    /// `⌈π/θ⌉ − 2`.
    pub contribution: u64,
}

/// `⌈π/θ⌉` for θ = angle·π, i.e. `⌈den/num⌉`.
pub fn ceil_pi_over_angle(angle: Angle) -> u64 {
    angle.den().div_ceil(angle.num())
}

/// `⌈π/θ⌉` for θ = arccos(t), `−1 < t < 1`.
pub fn ceil_pi_over_cosine(t: &Rational) -> Result<u64> {
    if t.abs() >= Rational::one() {
        return Err(Error::DegenerateAngle(format!(
            "cosine {} gives a real root",
            rational::format(t)
        )));
    }
    // m = 2: θ >= π/2 ⟺ t <= 0. m = 3: θ >= π/3 ⟺ t <= 1/2.
    if !t.is_positive() {
        return Ok(2);
    }
    if *t <= rational::ratio(1, 2) {
        return Ok(3);
    }
    let mut m = 4;
    loop {
        if trig::cmp_with_cos_pi_over(t, m) == Ordering::Less {
            return Ok(m);
        }
        m += 1;
    }
}

/// Per-factor contributions, one per non-real root pair, in listing order.
pub fn curtiss_terms(spec: &FactorSpec) -> Result<Vec<AngleTerm>> {
    spec.validate()?;
    let mut terms = Vec::new();
    for (i, q) in spec.quad.iter().enumerate() {
        let m = ceil_pi_over_cosine(&q.t)?;
        terms.push(AngleTerm { source: FactorRef::Quad(i), ceil_value: m, contribution: m - 2 });
    }
    for (i, a) in spec.angles.iter().enumerate() {
        let angle = a.angle()?;
        if angle.is_straight() {
            continue;
        }
        let m = ceil_pi_over_angle(angle);
        terms.push(AngleTerm { source: FactorRef::Angle(i), ceil_value: m, contribution: m - 2 });
    }
    Ok(terms)
}

pub fn curtiss_bound(spec: &FactorSpec) -> Result<u64> {
    Ok(curtiss_terms(spec)?.iter().map(|t| t.contribution).sum())
}

/// Bound for a list of angles alone (radii do not matter).
pub fn curtiss_bound_for_angles(angles: &[Angle]) -> u64 {
    angles
        .iter()
        .filter(|a| !a.is_straight())
        .map(|a| ceil_pi_over_angle(*a) - 2)
        .sum()
}

/// Contribution of one angle; zero for θ = π.
pub fn contribution(angle: Angle) -> u64 {
    if angle.is_straight() {
        0
    } else {
        ceil_pi_over_angle(angle) - 2
    }
}
