//! Rigorous enclosures of `π` and `cos(qπ)` in binary fixed point.
//!
//! Every operation rounds its lower endpoint down and its upper endpoint up,
//! so the true value always lies in the returned interval.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// `[lo, hi] · 2^-bits`.
#[derive(Clone, Debug)]
struct Enclosure {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn floor_shift(x: &BigInt, bits: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << bits))
}

fn ceil_shift(x: &BigInt, bits: u32) -> BigInt {
    -(-x).div_floor(&(BigInt::one() << bits))
}

impl Enclosure {
    fn int(k: i64, bits: u32) -> Self {
        let v = BigInt::from(k) << bits;
        Enclosure { lo: v.clone(), hi: v, bits }
    }

    fn add(&self, o: &Self) -> Self {
        Enclosure { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }

    fn sub(&self, o: &Self) -> Self {
        Enclosure { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, bits: self.bits }
    }

    fn mul(&self, o: &Self) -> Self {
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        Enclosure { lo: floor_shift(min, self.bits), hi: ceil_shift(max, self.bits), bits: self.bits }
    }

    fn scale(&self, k: u64) -> Self {
        Enclosure { lo: &self.lo * k, hi: &self.hi * k, bits: self.bits }
    }

    fn div(&self, k: u64) -> Self {
        let k = BigInt::from(k);
        Enclosure { lo: self.lo.div_floor(&k), hi: -(-&self.hi).div_floor(&k), bits: self.bits }
    }

    /// Widen by `±r` ulps.
    fn widen(&self, r: &BigInt) -> Self {
        Enclosure { lo: &self.lo - r, hi: &self.hi + r, bits: self.bits }
    }

    fn bounds(&self) -> (Rational, Rational) {
        let den = BigInt::one() << self.bits;
        (Rational::new(self.lo.clone(), den.clone()), Rational::new(self.hi.clone(), den))
    }
}

/// `atan(1/k)` for `k >= 2` by its alternating series.
fn atan_inv(k: u64, bits: u32) -> Enclosure {
    let k2 = k * k;
    let mut power = Enclosure::int(1, bits).div(k);
    let mut sum = Enclosure::int(0, bits);
    let mut j: u64 = 0;
    loop {
        let term = power.div(2 * j + 1);
        if term.hi <= BigInt::one() {
            return sum.widen(&term.hi.max(BigInt::zero()));
        }
        sum = if j % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        power = power.div(k2);
        j += 1;
    }
}

fn pi(bits: u32) -> Enclosure {
    // Machin: π = 16 atan(1/5) − 4 atan(1/239).
    atan_inv(5, bits).scale(16).sub(&atan_inv(239, bits).scale(4))
}

/// Taylor series of cos on `0 <= x <= 4`.
fn cos(x: &Enclosure) -> Enclosure {
    let bits = x.bits;
    let x2 = x.mul(x);
    let mut term = Enclosure::int(1, bits);
    let mut sum = Enclosure::int(0, bits);
    let mut k: u64 = 0;
    loop {
        // Past k = 2 the terms shrink monotonically for x <= 4, so the first
        // omitted term bounds the tail.
        if k >= 3 && term.hi.abs() <= BigInt::from(2) && term.lo.abs() <= BigInt::from(2) {
            let r = term.hi.abs().max(term.lo.abs());
            return sum.widen(&r);
        }
        sum = if k % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        k += 1;
        term = term.mul(&x2).div((2 * k - 1) * (2 * k));
    }
}

/// Rational bounds `lo <= cos(num/den · π) <= hi`, for `0 <= num/den <= 1`.
pub fn cos_pi_bounds(num: u64, den: u64, bits: u32) -> (Rational, Rational) {
    assert!(den > 0 && num <= den, "angle must lie in [0, π]");
    let work = bits + 16;
    let x = pi(work).scale(num).div(den);
    cos(&x).bounds()
}

/// Exact `cos(qπ)` for the rational-valued cases (Niven): q ∈ {0, 1/3, 1/2, 2/3, 1}.
pub fn niven_cos(num: i64, den: i64) -> Option<Rational> {
    let q = rational::ratio(num, den);
    let table = [
        (rational::int(0), rational::int(1)),
        (rational::ratio(1, 3), rational::ratio(1, 2)),
        (rational::ratio(1, 2), rational::int(0)),
        (rational::ratio(2, 3), rational::ratio(-1, 2)),
        (rational::int(1), rational::int(-1)),
    ];
    table.into_iter().find(|(angle, _)| *angle == q).map(|(_, c)| c)
}

/// `cos(num/den · π)` rounded to the nearest multiple of `10^-digits`.
///
/// Niven angles come back exact. Otherwise the error is at most
/// `10^-digits / 2` plus an enclosure width far below that.
pub fn cos_pi_rounded(num: u64, den: u64, digits: u32) -> Rational {
    if let Some(exact) = niven_cos(num as i64, den as i64) {
        return exact;
    }
    let bits = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 48;
    let (lo, hi) = cos_pi_bounds(num, den, bits);
    let mid = (lo + hi) / rational::int(2);
    let scale = rational::pow10(digits);
    (mid * &scale).round() / scale
}

/// Compares `t` against `cos(π/m)` exactly, refining the enclosure until it
/// separates. Does not terminate if `t == cos(π/m)`; for rational `t` that only
/// happens when `m <= 3`, which callers must handle directly.
pub fn cmp_with_cos_pi_over(t: &Rational, m: u64) -> Ordering {
    let mut bits = 64;
    loop {
        let (lo, hi) = cos_pi_bounds(1, m, bits);
        if *t < lo {
            return Ordering::Less;
        }
        if *t > hi {
            return Ordering::Greater;
        }
        bits *= 2;
    }
}
