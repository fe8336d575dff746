//! Root radii for which the Curtiss bound is attained.
//!
//! For quadrant-1 angles `θ_1 <= … <= θ_ℓ` (cosines `t_1 >= … >= t_ℓ`) the
//! first `ℓ−1` radii are fixed so that `C(r) < 1`, then `r_ℓ` is pushed up a
//! geometric ladder until the exact LP confirms `opt = s`. Quadrant-2 angles
//! and the straight angle are then appended one at a time, each with a radius
//! that keeps `opt` unchanged.
//!
//! The three-coefficient geometry (slopes, the intersection `(p, q)`) is
//! computed for every rung, but only as a diagnostic: acceptance always comes
//! from a Farkas certificate at degree `s−1` plus a multiplier at degree `s`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bound::{ceil_pi_over_angle, ceil_pi_over_cosine};
use crate::convolution::{build_convolution, Matrix};
use crate::error::{Error, Result};
use crate::factor::{linear, quadratic, symmetric_from_monic, Angle, AngleFactor, FactorSpec, Precision, QuadFactor};
use crate::multiplier::{feasible_at_degree, hull_orthant_distance, opt, FeasibilityOutcome};
use crate::poly::{multiply, Polynomial};
use crate::rational::{self, int, Rational};

/// Quadrant-1 quadratic factors, ordered by decreasing cosine.
///
/// `radii` holds either all `ℓ` radii or only the first `ℓ−1`, in which case
/// the instance is partial and [`find_extremal_radius`] supplies `r_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quadrant1Instance {
    #[serde(with = "rational::vec")]
    cosines: Vec<Rational>,
    #[serde(with = "rational::vec")]
    radii: Vec<Rational>,
    s: usize,
    #[serde(skip)]
    angles: Option<Vec<Angle>>,
}

impl Quadrant1Instance {
    pub fn new(cosines: Vec<Rational>, radii: Vec<Rational>) -> Result<Self> {
        let ell = cosines.len();
        if ell < 2 {
            return Err(Error::InvalidInput("need at least two quadrant-1 factors".into()));
        }
        if cosines.iter().any(|t| !t.is_positive() || *t >= Rational::one()) {
            return Err(Error::InvalidInput("quadrant-1 cosines must lie in (0, 1)".into()));
        }
        check_radii(&radii, ell)?;
        let mut order: Vec<usize> = (0..ell).collect();
        order.sort_by(|&i, &j| cosines[j].cmp(&cosines[i]));
        let sorted: Vec<Rational> = order.iter().map(|&i| cosines[i].clone()).collect();
        let radii = if radii.len() == ell { order.iter().map(|&i| radii[i].clone()).collect() } else { radii };
        let mut s = 0;
        for t in &sorted {
            s += ceil_pi_over_cosine(t)? as usize - 2;
        }
        Ok(Self { cosines: sorted, radii, s, angles: None })
    }

    /// Angles are sorted ascending; the cosines are computed at `precision`.
    pub fn from_angles(angles: &[Angle], radii: Vec<Rational>, precision: Precision) -> Result<Self> {
        let ell = angles.len();
        if ell < 2 {
            return Err(Error::InvalidInput("need at least two quadrant-1 factors".into()));
        }
        if let Some(a) = angles.iter().find(|a| !a.is_quadrant1()) {
            return Err(Error::InvalidInput(format!("angle {a}·π is not in (0, π/2)")));
        }
        check_radii(&radii, ell)?;
        let mut order: Vec<usize> = (0..ell).collect();
        order.sort_by(|&i, &j| angles[i].cmp(&angles[j]));
        let sorted: Vec<Angle> = order.iter().map(|&i| angles[i]).collect();
        let radii = if radii.len() == ell { order.iter().map(|&i| radii[i].clone()).collect() } else { radii };
        let cosines = sorted.iter().map(|a| a.cos(precision)).collect::<Result<Vec<_>>>()?;
        let s = sorted.iter().map(|&a| ceil_pi_over_angle(a) as usize - 2).sum();
        Ok(Self { cosines, radii, s, angles: Some(sorted) })
    }

    pub fn ell(&self) -> usize {
        self.cosines.len()
    }

    pub fn cosines(&self) -> &[Rational] {
        &self.cosines
    }

    pub fn radii(&self) -> &[Rational] {
        &self.radii
    }

    /// Curtiss bound of the factors.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn angles(&self) -> Option<&[Angle]> {
        self.angles.as_deref()
    }

    pub fn is_complete(&self) -> bool {
        self.radii.len() == self.ell()
    }

    /// Same instance with `r_ℓ` set (replacing it if already present).
    pub fn with_last_radius(&self, r: Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidInput("radii must be > 0".into()));
        }
        let mut out = self.clone();
        out.radii.truncate(self.ell() - 1);
        out.radii.push(r);
        Ok(out)
    }

    pub fn polynomial(&self) -> Result<Polynomial> {
        if !self.is_complete() {
            return Err(Error::InvalidInput("instance is missing r_ℓ".into()));
        }
        Ok(self
            .cosines
            .iter()
            .zip(&self.radii)
            .fold(Polynomial::one(), |acc, (t, r)| multiply(&acc, &quadratic(t, r))))
    }

    /// Factor spec of a complete instance, by angle when angles are known.
    pub fn spec(&self) -> Result<FactorSpec> {
        if !self.is_complete() {
            return Err(Error::InvalidInput("instance is missing r_ℓ".into()));
        }
        let mut spec = FactorSpec::default();
        match &self.angles {
            Some(angles) => {
                spec.angles = angles.iter().zip(&self.radii).map(|(a, r)| AngleFactor::new(*a, r.clone())).collect();
            }
            None => {
                spec.quad = self
                    .cosines
                    .iter()
                    .zip(&self.radii)
                    .map(|(t, r)| QuadFactor { t: t.clone(), r: r.clone() })
                    .collect();
            }
        }
        Ok(spec)
    }
}

fn check_radii(radii: &[Rational], ell: usize) -> Result<()> {
    if radii.len() + 1 != ell && radii.len() != ell {
        return Err(Error::InvalidInput(format!("expected {} or {ell} radii, got {}", ell - 1, radii.len())));
    }
    if radii.iter().any(|r| !r.is_positive()) {
        return Err(Error::InvalidInput("radii must be > 0".into()));
    }
    Ok(())
}

/// `r_1 = 2t_1`, `r_i = 1/(2t_i)` for `2 <= i <= ℓ−1`; `r_ℓ` is left free.
pub fn witness_radii(t: &[Rational], ell: usize) -> Result<Vec<Rational>> {
    if ell < 3 {
        return Err(Error::InvalidInput("witness radii need ℓ >= 3".into()));
    }
    if t.len() != ell {
        return Err(Error::InvalidInput(format!("expected {ell} cosines, got {}", t.len())));
    }
    if t.iter().any(|x| !x.is_positive() || *x >= Rational::one()) || t.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput("cosines must satisfy 1 > t_1 >= … >= t_ℓ > 0".into()));
    }
    let two = int(2);
    let mut radii = vec![&two * &t[0]];
    radii.extend(t[1..ell - 1].iter().map(|ti| (&two * ti).recip()));
    Ok(radii)
}

/// `C(r) = 1/((Σ 2 r_i t_i)(Σ 2 t_i / r_i))` over `i = 1..ℓ−1`.
///
/// For `ℓ = 2` this is `1/(4 t_1²)`, independent of `r_1`.
pub fn evaluate_c(t: &[Rational], r: &[Rational], ell: usize) -> Result<Rational> {
    if ell < 2 {
        return Err(Error::InvalidInput("C(r) needs ℓ >= 2".into()));
    }
    if t.len() < ell - 1 || r.len() < ell - 1 {
        return Err(Error::InvalidInput("need ℓ−1 cosines and radii".into()));
    }
    if r[..ell - 1].iter().any(|x| !x.is_positive()) {
        return Err(Error::InvalidInput("radii must be > 0".into()));
    }
    let two = int(2);
    let (mut outer, mut inner) = (Rational::zero(), Rational::zero());
    for (ti, ri) in t.iter().zip(r).take(ell - 1) {
        outer += &two * ri * ti;
        inner += &two * ti / ri;
    }
    Ok((outer * inner).recip())
}

/// The coefficients `c_{s−2}`, `c_{2ℓ+s−5}`, `c_{2ℓ+s−2}` of `g·f` for a
/// degree `s−1` multiplier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeCoefficients {
    #[serde(with = "rational")]
    pub low: Rational,
    #[serde(with = "rational")]
    pub mid: Rational,
    #[serde(with = "rational")]
    pub high: Rational,
}

impl ThreeCoefficients {
    pub fn any_negative(&self) -> bool {
        self.low.is_negative() || self.mid.is_negative() || self.high.is_negative()
    }
}

/// `b = (b_0, …, b_{s−1})` with `b_{s−1} = 1`. The closed forms are checked
/// against the full product before returning.
pub fn coefficient_expressions(inst: &Quadrant1Instance, b: &[Rational]) -> Result<ThreeCoefficients> {
    let s = inst.s();
    if s < 2 {
        return Err(Error::InvalidInput("three-coefficient expressions need s >= 2".into()));
    }
    if b.len() != s || !b[s - 1].is_one() {
        return Err(Error::InvalidInput(format!("expected monic multiplier with {s} coefficients")));
    }
    let f = inst.polynomial()?;
    let ell = inst.ell() as isize;
    let s = s as isize;
    let a = |i: isize| if i < 0 { Rational::zero() } else { f.coeff(i as usize) };
    let bi = |j: isize| if j < 0 || j >= s { Rational::zero() } else { b[j as usize].clone() };

    let mut low = a(0) * bi(s - 2) + a(1) * bi(s - 3);
    for i in 2..=s - 2 {
        low += a(i) * bi(s - 2 - i);
    }
    let mid = a(2 * ell - 4) + a(2 * ell - 3) * bi(s - 2) + a(2 * ell - 2) * bi(s - 3) + a(2 * ell - 1) * bi(s - 4) + bi(s - 5);
    let high = a(2 * ell - 1) + bi(s - 2);

    let product = multiply(&Polynomial::new(b.to_vec()), &f);
    let direct = |k: isize| product.coeff(k as usize);
    if low != direct(s - 2) || mid != direct(2 * ell + s - 5) || high != direct(2 * ell + s - 2) {
        return Err(Error::Internal("closed-form coefficients disagree with convolution".into()));
    }
    Ok(ThreeCoefficients { low, mid, high })
}

/// Lines `c_{s−2} = 0` and `c_{2ℓ+s−5} = 0` in the `(b_{s−2}, b_{s−3})` plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateGeometry {
    #[serde(with = "rational")]
    pub d0: Rational,
    #[serde(with = "rational")]
    pub d1: Rational,
    /// Slope of `c_{s−2} = 0`: `−a_0/a_1 = e_{2ℓ}/e_{2ℓ−1}`.
    #[serde(with = "rational")]
    pub mu_low: Rational,
    /// Slope of `c_{2ℓ+s−5} = 0`: `−a_{2ℓ−3}/a_{2ℓ−2} = e_3/e_2`.
    #[serde(with = "rational")]
    pub mu_high: Rational,
    #[serde(with = "rational")]
    pub p: Rational,
    #[serde(with = "rational")]
    pub q: Rational,
    /// `e_1 = −a_{2ℓ−1}`; `c_{2ℓ+s−2} < 0` exactly when `b_{s−2} < e_1`.
    #[serde(with = "rational")]
    pub e1: Rational,
}

impl CertificateGeometry {
    pub fn slopes_ordered(&self) -> bool {
        self.mu_high > self.mu_low
    }

    /// `p < e_1`: the wedge where both lines allow nonnegative values lies
    /// entirely in the half-plane where `c_{2ℓ+s−2} < 0`.
    pub fn apex_left_of_e1(&self) -> bool {
        self.p < self.e1
    }
}

/// `fixed_b = (b_0, …, b_{s−4})`.
pub fn certificate_geometry(inst: &Quadrant1Instance, fixed_b: &[Rational]) -> Result<CertificateGeometry> {
    let s = inst.s();
    if s < 3 {
        return Err(Error::InvalidInput("certificate geometry needs s >= 3".into()));
    }
    if fixed_b.len() != s - 3 {
        return Err(Error::InvalidInput(format!("expected {} fixed multiplier coefficients", s - 3)));
    }
    let f = inst.polynomial()?;
    let ell = inst.ell();
    let a = |i: usize| f.coeff(i);
    let bi = |j: isize| if j < 0 || j as usize >= fixed_b.len() { Rational::zero() } else { fixed_b[j as usize].clone() };
    let si = s as isize;

    let mut d0 = Rational::zero();
    for i in 2..=s - 2 {
        d0 -= a(i) * bi(si - 2 - i as isize);
    }
    let d1 = -(a(2 * ell - 1) * bi(si - 4)) - bi(si - 5) - a(2 * ell - 4);

    let e = symmetric_from_monic(&f);
    let mu_low = -(a(0) / a(1));
    let mu_high = -(a(2 * ell - 3) / a(2 * ell - 2));
    if mu_low != &e[2 * ell] / &e[2 * ell - 1] || mu_high != &e[3] / &e[2] {
        return Err(Error::Internal("slope identities failed".into()));
    }
    let det = a(0) * a(2 * ell - 2) - a(1) * a(2 * ell - 3);
    if det.is_zero() {
        return Err(Error::LinesParallel);
    }
    let p = (a(2 * ell - 2) * &d0 - a(1) * &d1) / &det;
    let q = (a(0) * &d1 - a(2 * ell - 3) * &d0) / &det;
    Ok(CertificateGeometry { d0, d1, mu_low, mu_high, p, q, e1: e[1].clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderDirection {
    Up,
    UpThenDown,
}

/// Geometric radius ladder `start·growth^k`, `k = 0..max_iter`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub start: Rational,
    pub growth: Rational,
    pub max_iter: usize,
}

impl Default for Ladder {
    fn default() -> Self {
        Self { start: int(1), growth: int(10), max_iter: 12 }
    }
}

impl Ladder {
    fn validate(&self) -> Result<()> {
        if !self.start.is_positive() {
            return Err(Error::InvalidInput("ladder start must be > 0".into()));
        }
        if self.growth <= Rational::one() {
            return Err(Error::InvalidInput("ladder growth must be > 1".into()));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidInput("ladder needs at least one rung".into()));
        }
        Ok(())
    }

    fn rungs(&self, direction: LadderDirection) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut r = self.start.clone();
        for _ in 0..self.max_iter {
            out.push(r.clone());
            r *= &self.growth;
        }
        if direction == LadderDirection::UpThenDown {
            let mut r = self.start.clone();
            for _ in 1..self.max_iter {
                r /= &self.growth;
                out.push(r.clone());
            }
        }
        out
    }
}

/// One tested value of `r_ℓ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rung {
    #[serde(with = "rational")]
    pub r: Rational,
    /// `opt = s`, certified both ways.
    pub accepted: bool,
    /// Slope ordering `μ_{2ℓ+s−5} > μ_{s−2}` (s >= 3, zero fixed coefficients).
    pub slopes_ordered: Option<bool>,
    /// `p / e_1` (s >= 3, zero fixed coefficients); below 1 means the apex
    /// condition holds.
    pub apex_ratio: Option<f64>,
    /// `μ_{s−2} / e_1` when `s = 2`; below 1 means every `b_0` leaves a
    /// negative coefficient.
    pub two_coefficient_ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusSearch {
    pub instance: Quadrant1Instance,
    #[serde(with = "rational")]
    pub radius: Rational,
    #[serde(with = "rational")]
    pub c_value: Rational,
    pub rungs: Vec<Rung>,
    /// Farkas certificate at degree `s−1` (absent when `s = 0`).
    pub refutation: Option<FeasibilityOutcome>,
    pub multiplier: FeasibilityOutcome,
}

/// `opt(f) = s` by a refutation at `s−1` and a multiplier at `s`.
fn certify_opt(f: &Polynomial, s: usize) -> Result<Option<(Option<FeasibilityOutcome>, FeasibilityOutcome)>> {
    let refutation = if s == 0 {
        None
    } else {
        let below = feasible_at_degree(f, s - 1)?;
        if below.feasible {
            return Ok(None);
        }
        Some(below)
    };
    let at = feasible_at_degree(f, s)?;
    if !at.feasible {
        return Err(Error::Internal(format!("no multiplier at the Curtiss bound {s}")));
    }
    Ok(Some((refutation, at)))
}

fn diagnose(inst: &Quadrant1Instance) -> (Option<bool>, Option<f64>, Option<f64>) {
    let s = inst.s();
    if s == 2 {
        let Ok(f) = inst.polynomial() else { return (None, None, None) };
        let e = symmetric_from_monic(&f);
        let mu_low = -(f.coeff(0) / f.coeff(1));
        return (None, None, Some(rational::to_f64(&(mu_low / &e[1]))));
    }
    if s < 3 {
        return (None, None, None);
    }
    match certificate_geometry(inst, &vec![Rational::zero(); s - 3]) {
        Ok(g) => (Some(g.slopes_ordered()), Some(rational::to_f64(&(&g.p / &g.e1))), None),
        Err(_) => (Some(false), None, None),
    }
}

/// Smallest rung `r_ℓ` with `opt = s`.
///
/// `inst` carries `r_1..r_{ℓ−1}`; when `s >= 3` they must satisfy `C(r) < 1`.
pub fn find_extremal_radius(inst: &Quadrant1Instance, ladder: &Ladder) -> Result<RadiusSearch> {
    ladder.validate()?;
    let ell = inst.ell();
    let c_value = evaluate_c(inst.cosines(), inst.radii(), ell)?;
    if inst.s() >= 3 && c_value >= Rational::one() {
        return Err(Error::InvalidInput(format!("C(r) = {} is not below 1", rational::format(&c_value))));
    }
    let mut rungs = Vec::new();
    for r in ladder.rungs(LadderDirection::Up) {
        let candidate = inst.with_last_radius(r.clone())?;
        let f = candidate.polynomial()?;
        let verdict = certify_opt(&f, candidate.s())?;
        let (slopes_ordered, apex_ratio, two_coefficient_ratio) = diagnose(&candidate);
        rungs.push(Rung { r: r.clone(), accepted: verdict.is_some(), slopes_ordered, apex_ratio, two_coefficient_ratio });
        if let Some((refutation, multiplier)) = verdict {
            return Ok(RadiusSearch { instance: candidate, radius: r, c_value, rungs, refutation, multiplier });
        }
    }
    Err(Error::SearchExhausted {
        iterations: ladder.max_iter,
        detail: rungs.last().map(|g| format!("{g:?}")).unwrap_or_default(),
    })
}

/// `h_{φ,r}`: `x + r` when `φ = π`, else `x² − 2r cos φ x + r²`.
pub fn quadrant2_factor(phi: Angle, r: &Rational, precision: Precision) -> Result<Polynomial> {
    if phi.is_straight() {
        return Ok(linear(r));
    }
    Ok(quadratic(&phi.cos(precision)?, r))
}

/// `T_s(f·h)` with its first `deg h` columns removed; equals `T_s(f)` when
/// `h = x^{deg h}`.
pub fn truncated_t_block(f: &Polynomial, h: &Polynomial, s: usize) -> Result<Matrix> {
    let d = h.degree().ok_or(Error::ZeroPolynomial)?;
    let sys = build_convolution(&multiply(f, h), s)?;
    Ok(sys.t_block.columns(d, sys.t_block.cols()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtensionRung {
    #[serde(with = "rational")]
    pub r: Rational,
    pub accepted: bool,
    /// Float distance between the truncated T-block hull and the orthant at
    /// degree `opt(f)−1`.
    pub epsilon: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Extension {
    pub phi: String,
    #[serde(with = "rational")]
    pub radius: Rational,
    pub rungs: Vec<ExtensionRung>,
    pub polynomial: Polynomial,
}

fn epsilon(f: &Polynomial, h: &Polynomial, s: usize) -> Option<f64> {
    let t = truncated_t_block(f, h, s).ok()?;
    let rows: Vec<Vec<f64>> = t.to_rows().iter().map(|r| r.iter().map(rational::to_f64).collect()).collect();
    let scale = rows.iter().flatten().fold(1.0f64, |m, v| m.max(v.abs()));
    if !scale.is_finite() {
        return None;
    }
    Some(hull_orthant_distance(&rows, 1e-9 * scale).distance)
}

/// A radius `r` with `opt(f·h_{φ,r}) = opt(f)`, for `φ ∈ [π/2, π]`.
///
/// `opt(f·h) <= opt(f)` always holds since `h` has nonnegative coefficients,
/// so only the refutation at `opt(f)−1` is searched for. Rungs go up from
/// `start` first, then down.
pub fn extend_quadrant2(
    f: &Polynomial,
    opt_f: usize,
    phi: Angle,
    precision: Precision,
    ladder: &Ladder,
) -> Result<Extension> {
    ladder.validate()?;
    if phi.as_rational() < rational::ratio(1, 2) {
        return Err(Error::InvalidInput(format!("angle {phi}·π is not in [π/2, π]")));
    }
    let mut rungs = Vec::new();
    for r in ladder.rungs(LadderDirection::UpThenDown) {
        let h = quadrant2_factor(phi, &r, precision)?;
        let product = multiply(f, &h);
        let (accepted, eps) = if opt_f == 0 {
            (true, None)
        } else {
            let below = feasible_at_degree(&product, opt_f - 1)?;
            (!below.feasible, epsilon(f, &h, opt_f - 1))
        };
        rungs.push(ExtensionRung { r: r.clone(), accepted, epsilon: eps });
        if accepted {
            return Ok(Extension { phi: phi.to_string(), radius: r, rungs, polynomial: product });
        }
    }
    let trace: Vec<String> = rungs
        .iter()
        .map(|g| format!("r={} eps={:?}", rational::format(&g.r), g.epsilon))
        .collect();
    Err(Error::SearchExhausted { iterations: rungs.len(), detail: trace.join(", ") })
}

/// How `r_1..r_{ℓ−1}` were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedRadii {
    /// `r_1 = 1` (`ℓ = 2`, where `C` does not depend on `r_1`).
    Unit,
    /// [`witness_radii`].
    Witness,
    /// `r_i = growth^{i−1}`.
    Separated,
}

/// Witness radii first, then separated radii. The three-coefficient argument
/// fixes `b_0..b_{s−4}` before choosing `r_ℓ`, so for `s >= 4` a single `r_ℓ`
/// need not work for every multiplier, and witness radii can fail (angles
/// 7/24, 10/24, 11/24 are one case); scale-separated radii cover it.
fn fixed_radius_candidates(q1: &[Angle], precision: Precision, ladder: &Ladder) -> Result<Vec<(FixedRadii, Vec<Rational>)>> {
    let ell = q1.len();
    if ell == 2 {
        return Ok(vec![(FixedRadii::Unit, vec![int(1)])]);
    }
    let t = q1.iter().map(|a| a.cos(precision)).collect::<Result<Vec<_>>>()?;
    let mut out = vec![(FixedRadii::Witness, witness_radii(&t, ell)?)];
    let mut separated = vec![int(1)];
    for i in 1..ell - 1 {
        separated.push(&separated[i - 1] * &ladder.growth);
    }
    if evaluate_c(&t, &separated, ell)? < Rational::one() {
        out.push((FixedRadii::Separated, separated));
    }
    Ok(out)
}

/// Everything produced by [`construct_extremal`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub spec: FactorSpec,
    pub bound: u64,
    pub opt: usize,
    pub precision_digits: Option<u32>,
    #[serde(with = "rational::vec")]
    pub fixed_radii: Vec<Rational>,
    pub fixed_radii_source: Option<FixedRadii>,
    pub search: Option<RadiusSearch>,
    pub extensions: Vec<Extension>,
    pub certificate: FeasibilityOutcome,
}

/// Radii making `opt = b` for the given angles (units of π, in `(0, 1]`).
///
/// Quadrant-1 factors come first (see [`FixedRadii`] for `r_1..r_{ℓ−1}`, then
/// the ladder for `r_ℓ`); each remaining angle is appended in ascending order
/// by [`extend_quadrant2`].
pub fn construct_extremal(angles: &[Angle], precision: Precision, ladder: &Ladder) -> Result<ExtremalReport> {
    if angles.is_empty() {
        return Err(Error::InvalidInput("no angles given".into()));
    }
    let mut sorted = angles.to_vec();
    sorted.sort();
    let (q1, rest): (Vec<Angle>, Vec<Angle>) = sorted.iter().partition(|a| a.is_quadrant1());
    let bound: u64 = q1.iter().map(|&a| ceil_pi_over_angle(a) - 2).sum();

    let mut spec = FactorSpec::default();
    let mut fixed_radii = Vec::new();
    let mut fixed_radii_source = None;
    let mut search = None;
    let mut f = Polynomial::one();
    match q1.len() {
        0 => {}
        1 => {
            spec.angles.push(AngleFactor::new(q1[0], int(1)));
            f = quadratic(&q1[0].cos(precision)?, &int(1));
        }
        _ => {
            let mut last_err = None;
            for (source, radii) in fixed_radius_candidates(&q1, precision, ladder)? {
                let inst = Quadrant1Instance::from_angles(&q1, radii.clone(), precision)?;
                match find_extremal_radius(&inst, ladder) {
                    Ok(found) => {
                        spec = found.instance.spec()?;
                        f = found.instance.polynomial()?;
                        fixed_radii = radii;
                        fixed_radii_source = Some(source);
                        search = Some(found);
                        break;
                    }
                    Err(e @ Error::SearchExhausted { .. }) => last_err = Some(e),
                    Err(e) => return Err(e),
                }
            }
            if search.is_none() {
                return Err(last_err.unwrap_or(Error::Internal("no fixed radii with C(r) < 1".into())));
            }
        }
    }
    let opt_q1 = bound as usize;

    let mut extensions = Vec::new();
    for phi in rest {
        let ext = extend_quadrant2(&f, opt_q1, phi, precision, ladder)?;
        spec.angles.push(AngleFactor::new(phi, ext.radius.clone()));
        f = ext.polynomial.clone();
        extensions.push(ext);
    }

    let result = opt(&f, bound as usize)?;
    if result.opt as u64 != bound {
        return Err(Error::Internal(format!("constructed opt {} differs from bound {bound}", result.opt)));
    }
    let irrational = sorted.iter().any(|a| a.exact_cos().is_none());
    Ok(ExtremalReport {
        spec,
        bound,
        opt: result.opt,
        precision_digits: if irrational { precision.digits() } else { None },
        fixed_radii,
        fixed_radii_source,
        search,
        extensions,
        certificate: result.certificate().clone(),
    })
}
