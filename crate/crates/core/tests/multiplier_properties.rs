mod common;

use common::*;
use num_traits::{One, Signed, Zero};
use poincare_core::bound::ceil_pi_over_cosine;
use poincare_core::factor::{expand, quadratic, Precision};
use poincare_core::multiplier::{
    feasible_at_degree, hull_separation_test, hull_witness, opt, separation_distance, verify_multiplier,
};
use poincare_core::rational::{int, Rational};
use poincare_core::{build_convolution, multiply, Polynomial};
use proptest::prelude::*;

/// Exact oracle for `s = 1`: the set of `b_0` with `(x + b_0)·f >= 0`
/// coefficientwise is an interval cut out by one constraint per coefficient.
fn degree_one_feasible(f: &Polynomial) -> bool {
    let n = f.degree().unwrap();
    let a = |k: isize| if k < 0 || k as usize > n { Rational::zero() } else { f.coeff(k as usize) };
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for k in 0..=(n as isize + 1) {
        // c_k = a_{k−1} + a_k b_0 >= 0
        let (prev, cur) = (a(k - 1), a(k));
        if cur.is_zero() {
            if prev.is_negative() {
                return false;
            }
        } else {
            let edge = -prev / &cur;
            if cur.is_positive() {
                lo = Some(lo.map_or(edge.clone(), |l| l.max(edge)));
            } else {
                hi = Some(hi.map_or(edge.clone(), |h| h.min(edge)));
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => l <= h,
        _ => true,
    }
}

fn schoolbook_shifted(f: &Polynomial, y: &[Rational], j: usize) -> Rational {
    f.coeffs().iter().enumerate().fold(Rational::zero(), |acc, (i, a)| acc + a * &y[i + j])
}

fn small_positive() -> impl Strategy<Value = Polynomial> {
    positive_spec(3, 2)
        .prop_map(|s| expand(&s, Precision::Exact).unwrap())
        .prop_filter("degree <= 6", |f| f.degree().unwrap() <= 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_test_matches_lp(f in small_positive(), s in 0usize..4) {
        let lp = (0..=s).any(|k| feasible_at_degree(&f, k).unwrap().feasible);
        prop_assert_eq!(lp, hull_separation_test(&f, s).unwrap());
        if let Some(c) = hull_witness(&f, s).unwrap() {
            let t = build_convolution(&f, s).unwrap().t_block;
            prop_assert!(c.iter().all(|x| !x.is_negative()));
            prop_assert_eq!(c.iter().fold(Rational::zero(), |a, x| a + x), Rational::one());
            prop_assert!(t.left_mul(&c).iter().all(|x| !x.is_negative()));
        }
    }

    #[test]
    fn certificates_verify_independently(f in small_positive(), s in 0usize..4) {
        let out = feasible_at_degree(&f, s).unwrap();
        if out.feasible {
            let g = out.multiplier.unwrap();
            prop_assert!(g.is_monic() && g.degree() == Some(s));
            let mut product = vec![Rational::zero(); g.coeffs().len() + f.coeffs().len() - 1];
            for (i, gi) in g.coeffs().iter().enumerate() {
                for (j, fj) in f.coeffs().iter().enumerate() {
                    product[i + j] += gi * fj;
                }
            }
            prop_assert!(product.iter().all(|c| !c.is_negative()));
        } else {
            let y = out.farkas_y.unwrap();
            prop_assert_eq!(y.len(), s + f.degree().unwrap() + 1);
            prop_assert!(y.iter().all(|v| !v.is_negative()));
            for j in 0..s {
                prop_assert!(schoolbook_shifted(&f, &y, j).is_zero());
            }
            prop_assert!(schoolbook_shifted(&f, &y, s).is_negative());
        }
    }

    #[test]
    fn feasibility_is_upward_closed(f in small_positive(), s in 0usize..3) {
        let out = feasible_at_degree(&f, s).unwrap();
        if out.feasible {
            let shifted = out.multiplier.unwrap().shift(1);
            prop_assert!(verify_multiplier(&f, &shifted, s + 1));
            prop_assert!(feasible_at_degree(&f, s + 1).unwrap().feasible);
        }
    }

    #[test]
    fn degree_one_matches_interval_oracle(f in small_positive()) {
        prop_assert_eq!(feasible_at_degree(&f, 1).unwrap().feasible, degree_one_feasible(&f));
    }

    #[test]
    fn quadratic_opt_equals_bound(t in cosine(), r in radius()) {
        let q = quadratic(&t, &r);
        let b = ceil_pi_over_cosine(&t).unwrap() as usize - 2;
        prop_assert_eq!(opt(&q, b).unwrap().opt, b);
    }

    #[test]
    fn separation_bounds_are_consistent(f in small_positive(), s in 0usize..3) {
        let d = separation_distance(&f, s, 1e-7).unwrap();
        prop_assert!(d.lower_bound <= d.distance + 1e-12);
        prop_assert_eq!(d.distance == 0.0, hull_separation_test(&f, s).unwrap());
    }
}

#[test]
fn grid_search_never_beats_lp() {
    // Brute force over a grid of g = x² + b1 x + b0: any grid hit must be
    // matched by LP feasibility at s = 2.
    for (t, r) in [(int(0), int(1)), (Rational::new(3.into(), 5.into()), int(2)), (Rational::new(9.into(), 10.into()), int(1))] {
        let f = multiply(&quadratic(&t, &r), &Polynomial::from_ints(&[1, 1]));
        let lp = feasible_at_degree(&f, 2).unwrap().feasible;
        let mut hit = false;
        for b0 in -20i64..=20 {
            for b1 in -20i64..=20 {
                let g = Polynomial::new(vec![Rational::new(b0.into(), 4.into()), Rational::new(b1.into(), 4.into()), int(1)]);
                hit |= multiply(&g, &f).has_nonnegative_coeffs();
            }
        }
        assert!(!hit || lp);
    }
}
