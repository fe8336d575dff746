#![allow(dead_code)]

use poincare_core::factor::{AngleFactor, FactorSpec, LinearFactor, QuadFactor};
use poincare_core::rational::{ratio, Rational};
use poincare_core::{Angle, Polynomial};
use proptest::prelude::*;

/// Rational in `(lo, hi)` (exclusive) with denominator `den`.
pub fn open_rational(lo: i64, hi: i64, den: i64) -> impl Strategy<Value = Rational> {
    (lo * den + 1..hi * den).prop_map(move |n| ratio(n, den))
}

pub fn radius() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=8).prop_map(|(n, d)| ratio(n, d))
}

pub fn cosine() -> impl Strategy<Value = Rational> {
    (1i64..=39).prop_flat_map(|d| (-d + 1..d).prop_map(move |n| ratio(n, d)))
}

pub fn quadrant1_cosine() -> impl Strategy<Value = Rational> {
    (2i64..=40).prop_flat_map(|d| (1..d).prop_map(move |n| ratio(n, d)))
}

pub fn quad_factor() -> impl Strategy<Value = QuadFactor> {
    (cosine(), radius()).prop_map(|(t, r)| QuadFactor { t, r })
}

/// Angle `num/den · π` in `(0, 1]` with denominator from the given list.
pub fn angle_over(dens: &'static [i64]) -> impl Strategy<Value = Angle> {
    proptest::sample::select(dens).prop_flat_map(|d| (1..=d).prop_map(move |n| Angle::new(n, d).unwrap()))
}

/// Specs whose expansion is positive by construction.
pub fn positive_spec(max_quad: usize, max_linear: usize) -> impl Strategy<Value = FactorSpec> {
    (
        prop::collection::vec(quad_factor(), 0..=max_quad),
        prop::collection::vec(radius().prop_map(|p| LinearFactor { p }), 0..=max_linear),
    )
        .prop_map(|(quad, linear)| FactorSpec { quad, angles: Vec::new(), linear })
}

/// Quadrant-1 quadratic factors only.
pub fn quadrant1_spec(max_ell: usize) -> impl Strategy<Value = FactorSpec> {
    prop::collection::vec((quadrant1_cosine(), radius()), 1..=max_ell).prop_map(|v| FactorSpec {
        quad: v.into_iter().map(|(t, r)| QuadFactor { t, r }).collect(),
        ..Default::default()
    })
}

pub fn angle_spec(angles: &[Angle], radii: &[Rational]) -> FactorSpec {
    FactorSpec {
        angles: angles.iter().zip(radii).map(|(a, r)| AngleFactor::new(*a, r.clone())).collect(),
        ..Default::default()
    }
}

pub fn int_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 1..=6).prop_map(|mut v| {
        v.push(1);
        Polynomial::from_ints(&v)
    })
}
