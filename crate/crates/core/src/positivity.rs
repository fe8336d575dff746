//! Exact positivity on `[0, ∞)` via Sturm sequences.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityVerdict {
    pub positive: bool,
    /// `[lo, hi]` containing exactly one distinct root of `f` in `(lo, hi]`
    /// (or `[0, 0]` when `f(0) = 0`). Absent when `f` is positive, or when
    /// it is negative on all of `[0, ∞)` and so has no root to isolate.
    #[serde(serialize_with = "serialize_interval")]
    pub witness_root_interval: Option<(Rational, Rational)>,
}

fn serialize_interval<S: serde::Serializer>(
    v: &Option<(Rational, Rational)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some((lo, hi)) => s.collect_seq([rational::format(lo), rational::format(hi)]),
    }
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let prev = chain.last().unwrap();
            let rem = prev.div_rem(&next).1;
            chain.push(next);
            next = -&rem;
        }
        SturmChain { chain }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs.filter(|s| *s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn sign(q: &Rational) -> i8 {
        if q.is_positive() {
            1
        } else if q.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign(&p.eval(x))))
    }

    /// Sign variations at `+∞` (signs of leading coefficients).
    pub fn variations_at_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign(p.leading().unwrap())))
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }
}

/// Every real root lies strictly inside `(−B, B)` for `B = 2 + max |a_i/a_n|`.
pub fn cauchy_bound(f: &Polynomial) -> Rational {
    let lc = f.leading().expect("nonzero polynomial").abs();
    let max = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |m, c| if c > m { c } else { m });
    max + rational::int(2)
}

/// Number of distinct real roots in `[0, ∞)`.
pub fn root_count_nonneg(f: &Polynomial) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = f.squarefree();
    let sturm = SturmChain::new(&sf);
    let at_zero = usize::from(sf.coeff(0).is_zero());
    Ok(sturm.variations_at(&Rational::zero()) - sturm.variations_at_infinity() + at_zero)
}

/// Decides whether `f(x) > 0` for all `x >= 0`.
pub fn is_positive(f: &Polynomial) -> Result<PositivityVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zero = Rational::zero();
    if f.coeff(0).is_zero() {
        return Ok(PositivityVerdict { positive: false, witness_root_interval: Some((zero.clone(), zero)) });
    }
    let sf = f.squarefree();
    let sturm = SturmChain::new(&sf);
    let bound = cauchy_bound(&sf);
    let count = sturm.count_in(&zero, &bound);
    if count == 0 {
        let positive = f.coeff(0).is_positive();
        return Ok(PositivityVerdict { positive, witness_root_interval: None });
    }
    // Bisect (lo, hi] down to a single root.
    let (mut lo, mut hi) = (zero, bound);
    let two = rational::int(2);
    while sturm.count_in(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm.count_in(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(PositivityVerdict { positive: false, witness_root_interval: Some((lo, hi)) })
}

/// Checks a not-positive verdict's interval independently by a fresh Sturm count.
pub fn interval_holds_root(f: &Polynomial, lo: &Rational, hi: &Rational) -> bool {
    if lo.is_negative() || lo > hi {
        return false;
    }
    if lo == hi {
        return f.eval(lo).is_zero();
    }
    let sf = f.squarefree();
    SturmChain::new(&sf).count_in(lo, hi) >= 1 || f.eval(lo).is_zero()
}
