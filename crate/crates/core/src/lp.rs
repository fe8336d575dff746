//! Exact feasibility for `A x = b, x >= 0` by phase-I simplex.
//!
//! Rows are scaled to integers and pivoting is fraction-free: the tableau is
//! an integer matrix over one common denominator, and each pivot divides
//! exactly by the previous pivot element, so no gcds are taken. Pivots follow
//! Bland's rule (lowest-index entering column, lowest-index leaving basic
//! variable among ratio ties), which cannot cycle. Infeasibility comes with a
//! Farkas vector `y` satisfying `yᵀA <= 0` and `yᵀb > 0`, read from the
//! phase-I duals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A point `x >= 0` with `A x = b`.
    Feasible(Vec<Rational>),
    /// `y` with `yᵀA <= 0` componentwise and `yᵀb > 0`.
    Infeasible(Vec<Rational>),
}

/// The true tableau is `rows / denom` (and `cost / denom`).
struct Tableau {
    /// `m` constraint rows of width `cols + 1` (last entry is the rhs).
    rows: Vec<Vec<BigInt>>,
    /// Reduced costs, same width; the last entry is minus the objective.
    cost: Vec<BigInt>,
    denom: BigInt,
    basis: Vec<usize>,
    cols: usize,
}

fn eliminate(row: &mut [BigInt], pivot_row: &[BigInt], c: usize, p: &BigInt, denom: &BigInt) {
    let factor = row[c].clone();
    for (v, q) in row.iter_mut().zip(pivot_row) {
        let mut next = &*v * p;
        if !factor.is_zero() && !q.is_zero() {
            next -= &factor * q;
        }
        *v = if denom.is_one() { next } else { next / denom };
    }
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let pivot_row = self.rows[r].clone();
        let p = pivot_row[c].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row, &pivot_row, c, &p, &self.denom);
            }
        }
        eliminate(&mut self.cost, &pivot_row, c, &p, &self.denom);
        self.denom = p;
        self.basis[r] = c;
    }

    fn entering(&self) -> Option<usize> {
        (0..self.cols).find(|&j| self.cost[j].is_negative())
    }

    fn leaving(&self, c: usize) -> Option<usize> {
        let rhs = self.cols;
        let mut best: Option<usize> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[c].is_positive() {
                continue;
            }
            best = match best {
                None => Some(i),
                Some(b) => {
                    // row[rhs]/row[c] vs best[rhs]/best[c], both denominators > 0.
                    let lhs = &row[rhs] * &self.rows[b][c];
                    let rhs_v = &self.rows[b][rhs] * &row[c];
                    if lhs < rhs_v || (lhs == rhs_v && self.basis[i] < self.basis[b]) {
                        Some(i)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn value(&self, v: &BigInt) -> Rational {
        Rational::new(v.clone(), self.denom.clone())
    }
}

/// Positive integer `k` making `k·v` integral for every entry.
fn row_scale(row: &[Rational], rhs: &Rational) -> BigInt {
    row.iter().chain(std::iter::once(rhs)).fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn scaled(v: &Rational, k: &BigInt) -> BigInt {
    v.numer() * (k / v.denom())
}

/// Decides whether `{x >= 0 : A x = b}` is nonempty.
///
/// `a` is `m` rows of `n` entries; `b` has length `m`.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Feasibility {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = a.first().map_or(0, Vec::len);
    let cols = n + m;
    // Scale each row to integers and flip it so the rhs is nonnegative;
    // artificial columns n..n+m form the start basis.
    let mut scales = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut k = row_scale(&a[i], &b[i]);
        if b[i].is_negative() {
            k = -k;
        }
        let mut row = Vec::with_capacity(cols + 1);
        row.extend(a[i].iter().map(|v| scaled(v, &k)));
        row.extend((0..m).map(|j| if j == i { BigInt::one() } else { BigInt::zero() }));
        row.push(scaled(&b[i], &k));
        rows.push(row);
        scales.push(k);
    }
    // Objective Σ artificials; reduced costs = c − 1ᵀ(rows).
    let mut cost = vec![BigInt::zero(); cols + 1];
    for c in cost[n..cols].iter_mut() {
        *c = BigInt::one();
    }
    for row in &rows {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    let mut t = Tableau { rows, cost, denom: BigInt::one(), basis: (n..cols).collect(), cols };

    while let Some(c) = t.entering() {
        let r = t.leaving(c).expect("phase-I objective is bounded below");
        t.pivot(r, c);
    }

    if t.cost[cols].is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &var) in t.basis.iter().enumerate() {
            if var < n {
                x[var] = t.value(&t.rows[i][cols]);
            }
        }
        Feasibility::Feasible(x)
    } else {
        // Reduced cost of artificial i is 1 − π_i; undo the row scaling.
        let y = (0..m)
            .map(|i| (Rational::one() - t.value(&t.cost[n + i])) * Rational::from_integer(scales[i].clone()))
            .collect();
        Feasibility::Infeasible(y)
    }
}

/// `A x = b` and `x >= 0`.
pub fn check_feasible(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
        && a.iter().zip(b).all(|(row, bi)| {
            row.iter().zip(x).fold(Rational::zero(), |acc, (r, v)| acc + r * v) == *bi
        })
}

/// `yᵀA <= 0` and `yᵀb > 0`.
pub fn check_farkas(a: &[Vec<Rational>], b: &[Rational], y: &[Rational]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    let dots_ok = (0..n).all(|j| {
        !a.iter().zip(y).fold(Rational::zero(), |acc, (row, yi)| acc + &row[j] * yi).is_positive()
    });
    let rhs = b.iter().zip(y).fold(Rational::zero(), |acc, (bi, yi)| acc + bi * yi);
    dots_ok && rhs.is_positive()
}
