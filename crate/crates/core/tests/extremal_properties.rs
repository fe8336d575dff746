mod common;

use common::*;
use num_traits::{One, Signed, Zero};
use poincare_core::bound::curtiss_bound;
use poincare_core::extremal::{
    certificate_geometry, coefficient_expressions, evaluate_c, extend_quadrant2, find_extremal_radius,
    truncated_t_block, witness_radii, Ladder, Quadrant1Instance,
};
use poincare_core::factor::{expand, parse_angle_list, AngleFactor, Precision};
use poincare_core::multiplier::{feasible_at_degree, opt};
use poincare_core::rational::{int, ratio, Rational};
use poincare_core::{build_convolution, multiply, Angle, Polynomial};
use proptest::prelude::*;

const APPROX: Precision = Precision::Approx { digits: 50 };

fn sorted_cosines(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(quadrant1_cosine(), len).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        v
    })
}

fn complete_instance() -> impl Strategy<Value = Quadrant1Instance> {
    (2usize..=4)
        .prop_flat_map(|ell| (sorted_cosines(ell..=ell), prop::collection::vec(radius(), ell)))
        .prop_map(|(t, r)| Quadrant1Instance::new(t, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_forms_match_convolution(inst in complete_instance(), raw in prop::collection::vec(-30i64..=30, 16)) {
        let s = inst.s();
        prop_assume!(s >= 2 && s <= 16);
        let mut b: Vec<Rational> = raw[..s].iter().map(|&v| ratio(v, 3)).collect();
        b[s - 1] = int(1);
        // coefficient_expressions itself cross-checks against the product.
        let c = coefficient_expressions(&inst, &b).unwrap();
        let f = inst.polynomial().unwrap();
        let ell = inst.ell();
        prop_assert_eq!(c.high, f.coeff(2 * ell - 1) + &b[s - 2]);
    }

    #[test]
    fn witness_radii_make_c_small(t in (3usize..=5).prop_flat_map(|ell| sorted_cosines(ell..=ell))) {
        let ell = t.len();
        let r = witness_radii(&t, ell).unwrap();
        prop_assert_eq!(r.len(), ell - 1);
        prop_assert!(r.iter().all(Signed::is_positive));
        let c = evaluate_c(&t, &r, ell).unwrap();
        prop_assert!(c < Rational::one());
        // Closed form after substitution.
        let tail: Rational = t[1..ell - 1].iter().fold(int(1), |acc, x| acc + int(4) * x * x);
        let head = int(4) * &t[0] * &t[0] + int(ell as i64 - 2);
        prop_assert_eq!(c, (head * tail).recip());
    }

    #[test]
    fn slope_identities(inst in complete_instance()) {
        prop_assume!(inst.s() >= 3 && inst.s() <= 12);
        let g = certificate_geometry(&inst, &vec![Rational::zero(); inst.s() - 3]);
        // The call checks −a_0/a_1 = e_{2ℓ}/e_{2ℓ−1} and −a_{2ℓ−3}/a_{2ℓ−2} = e_3/e_2.
        if let Ok(g) = g {
            prop_assert!(g.mu_low.is_positive() && g.mu_high.is_positive());
        }
    }

    #[test]
    fn t_block_stable_at_zero_radius(f in int_poly(), d in 1usize..=3, s in 0usize..4) {
        let t = truncated_t_block(&f, &Polynomial::monomial(d), s).unwrap();
        prop_assert_eq!(t, build_convolution(&f, s).unwrap().t_block);
    }
}

/// Angles over 24 whose quadrant-1 bound is exactly 3.
fn s3_cases() -> Vec<Vec<Angle>> {
    ["8/24,9/24,11/24", "9/24,10/24,11/24", "7/24,10/24", "6/24,9/24", "8/24,8/24,10/24"]
        .iter()
        .map(|s| parse_angle_list(s).unwrap())
        .collect()
}

#[test]
fn three_coefficients_suffice_when_s_is_3() {
    for angles in s3_cases() {
        let ell = angles.len();
        let t: Vec<Rational> = {
            let mut a = angles.clone();
            a.sort();
            a.iter().map(|x| x.cos(APPROX).unwrap()).collect()
        };
        let fixed = if ell == 2 { vec![int(1)] } else { witness_radii(&t, ell).unwrap() };
        let inst = Quadrant1Instance::from_angles(&angles, fixed, APPROX).unwrap();
        assert_eq!(inst.s(), 3);
        let found = find_extremal_radius(&inst, &Ladder::default()).unwrap();
        let g = certificate_geometry(&found.instance, &[]).unwrap();
        assert!(g.slopes_ordered() && g.apex_left_of_e1(), "{angles:?}");
        // Grid around the apex (p, q), plus far points.
        let offsets = [-100, -3, -1, 0, 1, 3, 100].map(|k| ratio(k, 7));
        for dx in &offsets {
            for dy in &offsets {
                let b = vec![&g.q + dy, &g.p + dx, int(1)];
                let c = coefficient_expressions(&found.instance, &b).unwrap();
                assert!(c.any_negative(), "{angles:?} b = {b:?}");
            }
        }
    }
}

#[test]
fn three_coefficients_not_uniform_in_free_b_when_s_is_4() {
    // Radii 1, 10, 100 give opt = 4 for these angles, yet with b_0 free the
    // apex (p, q) moves past e_1 and b = (b_0, q, p, 1) leaves all three
    // selected coefficients nonnegative. Some other coefficient is negative.
    let angles = parse_angle_list("7/24,10/24,11/24").unwrap();
    let inst = Quadrant1Instance::from_angles(&angles, vec![int(1), int(10), int(100)], APPROX).unwrap();
    assert_eq!(inst.s(), 4);
    let f = inst.polynomial().unwrap();
    assert!(!feasible_at_degree(&f, 3).unwrap().feasible);
    let b0 = [-1000, -100, -10, 10, 100, 1000]
        .into_iter()
        .map(int)
        .find(|b0| {
            let g = certificate_geometry(&inst, &[b0.clone()]).unwrap();
            !g.apex_left_of_e1()
        })
        .expect("some b_0 moves the apex past e_1");
    let g = certificate_geometry(&inst, &[b0.clone()]).unwrap();
    let b = vec![b0, g.q.clone(), g.p.clone(), int(1)];
    let c = coefficient_expressions(&inst, &b).unwrap();
    assert!(!c.any_negative());
    assert!(!multiply(&Polynomial::new(b), &f).has_nonnegative_coeffs());
}

#[test]
fn extension_preserves_opt_and_bound() {
    let base = parse_angle_list("7/24,10/24").unwrap();
    let inst = Quadrant1Instance::from_angles(&base, vec![int(1)], APPROX).unwrap();
    let found = find_extremal_radius(&inst, &Ladder::default()).unwrap();
    let f = found.instance.polynomial().unwrap();
    let spec = found.instance.spec().unwrap();
    let s = inst.s();
    for phi in ["12/24", "13/24", "17/24", "23/24", "1"] {
        let phi: Angle = phi.parse().unwrap();
        let ext = extend_quadrant2(&f, s, phi, APPROX, &Ladder::default()).unwrap();
        let mut extended = spec.clone();
        extended.angles.push(AngleFactor::new(phi, ext.radius.clone()));
        let g = expand(&extended, APPROX).unwrap();
        assert_eq!(g, ext.polynomial);
        assert_eq!(opt(&g, s).unwrap().opt, s, "phi = {phi}");
        assert_eq!(curtiss_bound(&extended).unwrap(), s as u64);
    }
}
