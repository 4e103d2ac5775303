//! Property tests for the exact arithmetic layer: commutative-ring laws for
//! [`ExactValue`], the functional equations of the gamma function over
//! half-integers, and Pochhammer composition.

use num::{BigRational, One};
use proptest::prelude::*;

use hypersum::bigfloat::{abs_diff, abs_lt, pow2, to_f64};
use hypersum::gamma_exact::{exact_gamma, pochhammer};
use hypersum::{ExactValue, HalfInteger};

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Up to four lattice terms with small rational coefficients; odd sqrt-pi
/// powers are included so products exercise the radical carries.
fn exact_value() -> impl Strategy<Value = ExactValue> {
    prop::collection::vec((any::<bool>(), 0..5i64, -40..=40i64, 1..=12i64), 0..4).prop_map(
        |terms| {
            terms.into_iter().fold(ExactValue::zero(), |acc, (s, h, num, den)| {
                &acc + &ExactValue::monomial(rational(num, den), s, h)
            })
        },
    )
}

proptest! {
    #[test]
    fn addition_commutes(a in exact_value(), b in exact_value()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn addition_associates(a in exact_value(), b in exact_value(), c in exact_value()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes(a in exact_value(), b in exact_value()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in exact_value(), b in exact_value(), c in exact_value()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in exact_value(), b in exact_value(), c in exact_value()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_inverse(a in exact_value()) {
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_identities(a in exact_value()) {
        prop_assert_eq!(&(&a * &ExactValue::one()), &a);
        prop_assert_eq!(&(&a + &ExactValue::zero()), &a);
        prop_assert!((&a * &ExactValue::zero()).is_zero());
    }

    /// `to_numeric` is a ring homomorphism up to rounding.
    #[test]
    fn numeric_homomorphism(a in exact_value(), b in exact_value()) {
        let p = 192;
        let sum = (&a + &b).to_numeric(p);
        let split = a.to_numeric(p + 64).add(&b.to_numeric(p + 64), p, hypersum::bigfloat::RM);
        // coefficients are bounded by 4 * 40 = 160, values by ~160 * pi^2 * sqrt2;
        // an absolute gap of 2^-150 leaves ~30 bits of slack over rounding noise
        let gap = abs_diff(&sum, &split, p);
        prop_assert!(
            abs_lt(&gap, &pow2(-150)) || gap.is_zero(),
            "sum gap {:e}", to_f64(&gap)
        );

        let prod = (&a * &b).to_numeric(p);
        let split = a.to_numeric(p + 64).mul(&b.to_numeric(p + 64), p, hypersum::bigfloat::RM);
        let gap = abs_diff(&prod, &split, p);
        prop_assert!(
            abs_lt(&gap, &pow2(-140)) || gap.is_zero(),
            "product gap {:e}", to_f64(&gap)
        );
    }

    /// (x)_{m+n} = (x)_m (x+m)_n
    #[test]
    fn pochhammer_composes(num in -20..=20i64, den in 1..=4i64, m in 0..=8u64, n in 0..=8u64) {
        let x = rational(num, den);
        let shifted = &x + BigRational::from_integer(m.into());
        prop_assert_eq!(pochhammer(&x, m + n), pochhammer(&x, m) * pochhammer(&shifted, n));
    }

    #[test]
    fn pochhammer_base_cases(num in -20..=20i64, den in 1..=4i64) {
        let x = rational(num, den);
        prop_assert_eq!(pochhammer(&x, 0), BigRational::one());
        prop_assert_eq!(pochhammer(&x, 1), x);
    }
}

/// Legendre duplication over every representable half-integer in the working
/// range: gamma(x) gamma(x + 1/2) = 2^(1-2x) sqrt(pi) gamma(2x). Both sides
/// share their pole set (twice <= 0), so the equation is checked exactly on
/// one side of it and for consistent failure on the other.
#[test]
fn gamma_duplication() {
    for twice in -19..=41i64 {
        let x = HalfInteger::from_twice(twice);
        let x_half = HalfInteger::from_twice(twice + 1);
        let x2 = HalfInteger::from_twice(2 * twice);
        if twice <= 0 {
            assert!(
                exact_gamma(&x).is_err() || exact_gamma(&x_half).is_err(),
                "lhs must pole at {x}"
            );
            assert!(exact_gamma(&x2).is_err(), "rhs must pole at {x}");
            continue;
        }
        let lhs = &exact_gamma(&x).unwrap() * &exact_gamma(&x_half).unwrap();
        let pow = ExactValue::two_power(&HalfInteger::from_twice(2 * (1 - twice)));
        let rhs = &(&pow * &ExactValue::sqrt_pi()) * &exact_gamma(&x2).unwrap();
        assert_eq!(lhs, rhs, "duplication fails at x = {x}");
    }
}

/// gamma(x + 1) = x gamma(x) wherever both sides are finite.
#[test]
fn gamma_recurrence() {
    for twice in -19..=41i64 {
        let x = HalfInteger::from_twice(twice);
        if x.is_non_positive_integer() {
            continue;
        }
        let up = exact_gamma(&(&x + 1)).unwrap();
        let scaled = exact_gamma(&x).unwrap().scale(&x.to_rational());
        assert_eq!(up, scaled, "recurrence fails at x = {x}");
    }
}

/// gamma(x) gamma(1 - x) = pi / sin(pi x); at half-odd x the right side is
/// +/- pi, at integers it poles. Verified on the half-odd lattice where both
/// factors are representable.
#[test]
fn gamma_reflection_on_half_odds() {
    for k in -9..=9i64 {
        let x = HalfInteger::from_twice(2 * k + 1); // x = k + 1/2
        let complement = HalfInteger::from_twice(2 - (2 * k + 1)); // 1 - x
        let product = &exact_gamma(&x).unwrap() * &exact_gamma(&complement).unwrap();
        // sin(pi (k + 1/2)) = (-1)^k
        let mut expect = ExactValue::pi();
        if k.rem_euclid(2) == 1 {
            expect = -&expect;
        }
        assert_eq!(product, expect, "reflection fails at x = {x}");
    }
}
