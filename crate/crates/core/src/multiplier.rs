//! Minimal-degree Poincaré multipliers.
//!
//! A degree-`s` multiplier is a monic `g` with every coefficient of `g·f`
//! nonnegative. Existence at a fixed `s` is a linear feasibility problem in
//! `b_0..b_{s-1}` (with `b_s = 1`), decided here exactly. Every answer carries
//! a certificate: the multiplier itself, or a Farkas vector `y >= 0` with
//! `(A_s y)_j = 0` for `j < s` and `(A_s y)_s < 0`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bound::curtiss_bound;
use crate::convolution::build_convolution;
use crate::error::{Error, Result};
use crate::factor::{expand, FactorSpec, Precision};
use crate::lp::{self, Feasibility};
use crate::poly::{multiply, Polynomial};
use crate::positivity::is_positive;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityOutcome {
    pub s: usize,
    pub feasible: bool,
    #[serde(rename = "g")]
    pub multiplier: Option<Polynomial>,
    #[serde(rename = "farkas", serialize_with = "serialize_opt_vec")]
    pub farkas_y: Option<Vec<Rational>>,
}

fn serialize_opt_vec<S: serde::Serializer>(
    v: &Option<Vec<Rational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(v) => rational::vec::serialize(v, s),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptResult {
    pub opt: usize,
    pub per_degree: Vec<FeasibilityOutcome>,
    /// Curtiss bound, when the input came from a factored spec.
    pub bound: Option<u64>,
    /// Decimal digits used to round irrational cosines, if any were rounded.
    pub precision_digits: Option<u32>,
}

impl OptResult {
    pub fn certificate(&self) -> &FeasibilityOutcome {
        &self.per_degree[self.opt]
    }
}

/// Decides whether a monic degree-`s` multiplier exists for monic `f`.
///
/// Positivity is not checked here.
pub fn feasible_at_degree(f: &Polynomial, s: usize) -> Result<FeasibilityOutcome> {
    let sys = build_convolution(f, s)?;
    let width = sys.full.cols();
    // Columns: u_0..u_{s-1}, v_0..v_{s-1} (b = u − v), then slacks w_k.
    // Row k: Σ_j (u_j − v_j) A[j][k] − w_k = −A[s][k].
    let mut rows = Vec::with_capacity(width);
    let mut rhs = Vec::with_capacity(width);
    for k in 0..width {
        let mut row = Vec::with_capacity(2 * s + width);
        for j in 0..s {
            row.push(sys.full.get(j, k).clone());
        }
        for j in 0..s {
            row.push(-sys.full.get(j, k));
        }
        for w in 0..width {
            row.push(if w == k { -Rational::one() } else { Rational::zero() });
        }
        rows.push(row);
        rhs.push(-sys.full.get(s, k));
    }
    let outcome = match lp::solve(&rows, &rhs) {
        Feasibility::Feasible(x) => {
            let mut b: Vec<Rational> = (0..s).map(|j| &x[j] - &x[s + j]).collect();
            b.push(Rational::one());
            let g = Polynomial::new(b);
            FeasibilityOutcome { s, feasible: true, multiplier: Some(g), farkas_y: None }
        }
        Feasibility::Infeasible(y) => FeasibilityOutcome { s, feasible: false, multiplier: None, farkas_y: Some(y) },
    };
    if !verify_outcome(f, &outcome) {
        return Err(Error::Internal(format!("certificate at degree {s} failed re-verification")));
    }
    Ok(outcome)
}

/// Re-checks a certificate with plain polynomial arithmetic.
pub fn verify_outcome(f: &Polynomial, outcome: &FeasibilityOutcome) -> bool {
    match (outcome.feasible, &outcome.multiplier, &outcome.farkas_y) {
        (true, Some(g), _) => verify_multiplier(f, g, outcome.s),
        (false, _, Some(y)) => verify_farkas(f, outcome.s, y),
        _ => false,
    }
}

/// `g` monic of degree `s` and every coefficient of `g·f` nonnegative.
pub fn verify_multiplier(f: &Polynomial, g: &Polynomial, s: usize) -> bool {
    g.is_monic() && g.degree() == Some(s) && multiply(g, f).has_nonnegative_coeffs()
}

/// `y >= 0`, `Σ_k y_k a_{k−j} = 0` for `j < s`, and `< 0` for `j = s`.
///
/// For any monic `g` of degree `s`, `Σ_k y_k coeff(g·f, k) = Σ_j b_j (A_s y)_j
/// = (A_s y)_s < 0`, so some coefficient of `g·f` is negative.
pub fn verify_farkas(f: &Polynomial, s: usize, y: &[Rational]) -> bool {
    let n = match f.degree() {
        Some(n) => n,
        None => return false,
    };
    if y.len() != s + n + 1 || y.iter().any(Signed::is_negative) {
        return false;
    }
    let shifted = |j: usize| -> Rational {
        (0..=n).fold(Rational::zero(), |acc, i| acc + f.coeff(i) * &y[i + j])
    };
    (0..s).all(|j| shifted(j).is_zero()) && shifted(s).is_negative()
}

/// Minimal multiplier degree by ascending scan, after checking `f` is positive.
pub fn opt(f: &Polynomial, cap: usize) -> Result<OptResult> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_positive(f)?.positive {
        return Err(Error::NotPositive);
    }
    let mut per_degree = Vec::new();
    for s in 0..=cap {
        let outcome = feasible_at_degree(f, s)?;
        let done = outcome.feasible;
        per_degree.push(outcome);
        if done {
            return Ok(OptResult { opt: s, per_degree, bound: None, precision_digits: None });
        }
    }
    Err(Error::ExceededCap { cap })
}

/// `opt` for a factored spec; the cap defaults to the Curtiss bound.
pub fn opt_for_spec(spec: &FactorSpec, precision: Precision, cap: Option<usize>) -> Result<OptResult> {
    let f = expand(spec, precision)?;
    let bound = curtiss_bound(spec)?;
    let mut result = opt(&f, cap.unwrap_or(bound as usize))?;
    result.bound = Some(bound);
    result.precision_digits = if spec.angles.iter().any(|a| a.angle().is_ok_and(|x| x.exact_cos().is_none())) {
        precision.digits()
    } else {
        None
    };
    Ok(result)
}

/// Convex weights `c` (if any) with `c·T_s >= 0`.
pub fn hull_witness(f: &Polynomial, s: usize) -> Result<Option<Vec<Rational>>> {
    let sys = build_convolution(f, s)?;
    let t = &sys.t_block;
    let (rows_t, n) = (t.rows(), t.cols());
    // Columns c_0..c_s then w_0..w_{n-1}: Σ_i c_i T[i][j] − w_j = 0; Σ c_i = 1.
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut row: Vec<Rational> = (0..rows_t).map(|i| t.get(i, j).clone()).collect();
        row.extend((0..n).map(|w| if w == j { -Rational::one() } else { Rational::zero() }));
        rows.push(row);
        rhs.push(Rational::zero());
    }
    let mut total = vec![Rational::one(); rows_t];
    total.extend(std::iter::repeat(Rational::zero()).take(n));
    rows.push(total);
    rhs.push(Rational::one());
    Ok(match lp::solve(&rows, &rhs) {
        Feasibility::Feasible(x) => Some(x[..rows_t].to_vec()),
        Feasibility::Infeasible(_) => None,
    })
}

/// Whether the convex hull of the rows of `T_s` meets the nonnegative orthant,
/// which holds iff some nonzero `g` with `deg g <= s` works as a multiplier.
pub fn hull_separation_test(f: &Polynomial, s: usize) -> Result<bool> {
    Ok(hull_witness(f, s)?.is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeparationEstimate {
    /// Distance achieved by the final hull point (an upper bound).
    pub distance: f64,
    /// Certified lower bound from the separating direction.
    pub lower_bound: f64,
    pub converged: bool,
}

/// Distance between `CH(rows of T_s)` and the nonnegative orthant, in
/// floating point. Exact zero when the hull meets the orthant.
pub fn separation_distance(f: &Polynomial, s: usize, tol: f64) -> Result<SeparationEstimate> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be > 0".into()));
    }
    if hull_separation_test(f, s)? {
        return Ok(SeparationEstimate { distance: 0.0, lower_bound: 0.0, converged: true });
    }
    let sys = build_convolution(f, s)?;
    let rows: Vec<Vec<f64>> = sys
        .t_block
        .to_rows()
        .iter()
        .map(|r| r.iter().map(rational::to_f64).collect())
        .collect();
    Ok(hull_orthant_distance(&rows, tol))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn combine(weights: &[f64], rows: &[Vec<f64>]) -> Vec<f64> {
    let n = rows.first().map_or(0, Vec::len);
    let mut out = vec![0.0; n];
    for (w, r) in weights.iter().zip(rows) {
        for (o, v) in out.iter_mut().zip(r) {
            *o += w * v;
        }
    }
    out
}

/// Euclidean projection onto the probability simplex.
fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (i, ui) in u.iter().enumerate() {
        cumulative += ui;
        let candidate = (cumulative - 1.0) / (i as f64 + 1.0);
        if ui - candidate > 0.0 {
            theta = candidate;
        }
    }
    v.iter().map(|x| (x - theta).max(0.0)).collect()
}

/// Closest hull point to `target`: accelerated projected gradient on the
/// simplex weights, warm-started from `weights`.
fn project_hull(rows: &[Vec<f64>], target: &[f64], weights: &[f64], lipschitz: f64) -> Vec<f64> {
    let mut c = weights.to_vec();
    let mut z = c.clone();
    let mut momentum = 1.0f64;
    for _ in 0..500 {
        let x = combine(&z, rows);
        let residual: Vec<f64> = x.iter().zip(target).map(|(a, b)| a - b).collect();
        let grad: Vec<f64> = rows.iter().map(|r| dot(r, &residual)).collect();
        let step: Vec<f64> = z.iter().zip(&grad).map(|(zi, gi)| zi - gi / lipschitz).collect();
        let next = project_simplex(&step);
        let next_momentum = (1.0 + (1.0 + 4.0 * momentum * momentum).sqrt()) / 2.0;
        let beta = (momentum - 1.0) / next_momentum;
        let moved: f64 = next.iter().zip(&c).map(|(a, b)| (a - b).abs()).sum();
        z = next.iter().zip(&c).map(|(a, b)| a + beta * (a - b)).collect();
        z = project_simplex(&z);
        c = next;
        momentum = next_momentum;
        if moved < 1e-15 {
            break;
        }
    }
    c
}

/// Alternating projections between `CH(rows)` and the nonnegative orthant.
///
/// Stops once the achieved distance is within `tol` of the lower bound
/// `min_i ⟨row_i, d⟩/‖d‖` given by the current separating direction `d`.
pub fn hull_orthant_distance(rows: &[Vec<f64>], tol: f64) -> SeparationEstimate {
    let k = rows.len();
    let lipschitz = rows.iter().map(|r| dot(r, r)).sum::<f64>().max(1e-300);
    let mut weights = vec![1.0 / k as f64; k];
    let mut best = SeparationEstimate { distance: f64::INFINITY, lower_bound: 0.0, converged: false };
    for _ in 0..2000 {
        let x = combine(&weights, rows);
        let y: Vec<f64> = x.iter().map(|v| v.max(0.0)).collect();
        let d: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
        let upper = norm(&d);
        if upper == 0.0 {
            return SeparationEstimate { distance: 0.0, lower_bound: 0.0, converged: true };
        }
        let lower = rows
            .iter()
            .map(|r| dot(r, &d) / upper)
            .fold(f64::INFINITY, f64::min)
            .max(0.0);
        best.distance = best.distance.min(upper);
        best.lower_bound = best.lower_bound.max(lower);
        if best.distance - best.lower_bound <= tol {
            best.converged = true;
            return best;
        }
        weights = project_hull(rows, &y, &weights, lipschitz);
    }
    best
}
