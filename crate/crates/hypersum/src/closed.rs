//! Closed forms for eight summable hypergeometric series.
//!
//! Each entry comes as a pair of functions: `*_series` builds the exact
//! [`SeriesSpec`] of the left-hand side, and the same-named value function
//! evaluates the right-hand side in Q[sqrt(2), sqrt(pi)]:
//!
//! ```text
//!     gauss(a,b,c)              2F1(a, b; c; 1)
//!     gauss_ext(a,b,c,d)        3F2(a, b, d+1; c+1, d; 1)
//!     gauss_second(a,b)         2F1(a, b; (a+b+1)/2; 1/2)
//!     gauss_second_ext(a,b,d)   3F2(a, b, d+1; (a+b+3)/2, d; 1/2)
//!     bailey(a,c)               2F1(a, 1-a; c; 1/2)
//!     bailey_ext(a,c,d)         3F2(a, 1-a, d+1; c+1, d; 1/2)
//!     watson(a,b,c)             3F2(a, b, c; (a+b+1)/2, 2c; 1)
//!     watson_ext(a,b,c,d)       4F3(a, b, c, d+1; (a+b+1)/2, 2c+1, d; 1)
//! ```
//!
//! The `_ext` forms insert a unit-shifted parameter pair `(d+1; d)` and
//! reduce to their parents at a distinguished `d` (`gauss_ext` at `d = c`,
//! `gauss_second_ext` at `d = (a+b+1)/2`, `bailey_ext` at `d = c`,
//! `watson_ext` at `d = 2c`).
//!
//! Parameters `a, b, c` are half-integers so every gamma argument lands on
//! the quarter-integer lattice handled by
//! [`gamma_product`](crate::gamma_exact::gamma_product); `d` only ever
//! enters rational coefficients and may be any nonzero rational.  Each
//! additive piece of a value is assembled as one full gamma quotient so
//! that quarter-integer gammas get every chance to pair; a value whose
//! gammas still cannot pair is genuinely outside the ring and reported as
//! not representable.
//!
//! The `bailey` prefactor is written `Γ(c/2) Γ(c/2 + 1/2)`, which equals
//! `2^(1-c) sqrt(pi) Γ(c)` by duplication; a regression test pins this
//! against the series, since the same product with `Γ(1/2) Γ(c/2 + 1/2)`
//! in the numerator — a plausible-looking variant — is measurably wrong.

use num::{BigRational, One, Zero};

use crate::error::ClosedFormError;
use crate::exact::ExactValue;
use crate::gamma_exact::gamma_product;
use crate::half::HalfInteger;
use crate::series::SeriesSpec;

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn one() -> BigRational {
    BigRational::one()
}

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

fn nonzero(d: &BigRational) -> Result<(), ClosedFormError> {
    if d.is_zero() {
        return Err(ClosedFormError::Domain("d must be nonzero".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// values
// ---------------------------------------------------------------------------

/// `2F1(a, b; c; 1) = Γ(c) Γ(c-a-b) / (Γ(c-a) Γ(c-b))`.
pub fn gauss(a: &HalfInteger, b: &HalfInteger, c: &HalfInteger) -> Result<ExactValue, ClosedFormError> {
    let (a, b, c) = (a.to_rational(), b.to_rational(), c.to_rational());
    gamma_product(&[c.clone(), &c - &a - &b], &[&c - &a, &c - &b])
}

/// `3F2(a, b, d+1; c+1, d; 1)`:
///
/// ```text
///     Γ(c+1) Γ(c-a-b) / (Γ(c-a+1) Γ(c-b+1)) · [(c-a-b) + ab/d]
/// ```
pub fn gauss_ext(
    a: &HalfInteger,
    b: &HalfInteger,
    c: &HalfInteger,
    d: &BigRational,
) -> Result<ExactValue, ClosedFormError> {
    nonzero(d)?;
    let (a, b, c) = (a.to_rational(), b.to_rational(), c.to_rational());
    let quotient = gamma_product(
        &[&c + one(), &c - &a - &b],
        &[&c - &a + one(), &c - &b + one()],
    )?;
    let coeff = (&c - &a - &b) + &a * &b / d;
    Ok(quotient.scale(&coeff))
}

/// `2F1(a, b; (a+b+1)/2; 1/2) = Γ(1/2) Γ(a/2+b/2+1/2) / (Γ(a/2+1/2) Γ(b/2+1/2))`.
pub fn gauss_second(a: &HalfInteger, b: &HalfInteger) -> Result<ExactValue, ClosedFormError> {
    let (a, b) = (a.to_rational(), b.to_rational());
    gamma_product(
        &[half(), (&a + &b) / two() + half()],
        &[&a / two() + half(), &b / two() + half()],
    )
}

/// `3F2(a, b, d+1; (a+b+3)/2, d; 1/2)`:
///
/// ```text
///     Γ(1/2) Γ((a+b+3)/2) Γ((a-b-1)/2) / Γ((a-b+3)/2)
///       · [ ((a+b-1)/2 - ab/d) / (Γ(a/2+1/2) Γ(b/2+1/2))
///         + ((a+b+1)/d - 2)    / (Γ(a/2) Γ(b/2)) ]
/// ```
pub fn gauss_second_ext(
    a: &HalfInteger,
    b: &HalfInteger,
    d: &BigRational,
) -> Result<ExactValue, ClosedFormError> {
    nonzero(d)?;
    let (a, b) = (a.to_rational(), b.to_rational());
    let pre_n = [half(), (&a + &b) / two() + one() + half(), (&a - &b) / two() - half()];
    let pre_d = (&a - &b) / two() + one() + half();
    let c1 = (&a + &b - one()) / two() - &a * &b / d;
    let t1 = gamma_product(
        &[pre_n[0].clone(), pre_n[1].clone(), pre_n[2].clone()],
        &[pre_d.clone(), &a / two() + half(), &b / two() + half()],
    )?
    .scale(&c1);
    let c2 = (&a + &b + one()) / d - two();
    let t2 = gamma_product(
        &[pre_n[0].clone(), pre_n[1].clone(), pre_n[2].clone()],
        &[pre_d, &a / two(), &b / two()],
    )?
    .scale(&c2);
    Ok(&t1 + &t2)
}

/// `2F1(a, 1-a; c; 1/2) = Γ(c/2) Γ(c/2+1/2) / (Γ(c/2+a/2) Γ(c/2-a/2+1/2))`.
pub fn bailey(a: &HalfInteger, c: &HalfInteger) -> Result<ExactValue, ClosedFormError> {
    let (a, c) = (a.to_rational(), c.to_rational());
    gamma_product(
        &[&c / two(), &c / two() + half()],
        &[(&c + &a) / two(), (&c - &a) / two() + half()],
    )
}

/// `3F2(a, 1-a, d+1; c+1, d; 1/2)`:
///
/// ```text
///     2^(-c) Γ(1/2) Γ(c+1) · [ (2/d)   / (Γ(a/2+c/2) Γ(c/2-a/2+1/2))
///                            + (1-c/d) / (Γ(a/2+c/2+1/2) Γ(c/2-a/2+1)) ]
/// ```
pub fn bailey_ext(
    a: &HalfInteger,
    c: &HalfInteger,
    d: &BigRational,
) -> Result<ExactValue, ClosedFormError> {
    nonzero(d)?;
    let (ar, cr) = (a.to_rational(), c.to_rational());
    let c1 = two() / d;
    let t1 = gamma_product(
        &[half(), &cr + one()],
        &[(&ar + &cr) / two(), (&cr - &ar) / two() + half()],
    )?
    .scale(&c1);
    let c2 = one() - &cr / d;
    let t2 = gamma_product(
        &[half(), &cr + one()],
        &[(&ar + &cr) / two() + half(), (&cr - &ar) / two() + one()],
    )?
    .scale(&c2);
    let pow = ExactValue::two_power(&-c);
    Ok(&pow * &(&t1 + &t2))
}

/// `3F2(a, b, c; (a+b+1)/2, 2c; 1)`:
///
/// ```text
///     Γ(1/2) Γ(c+1/2) Γ(a/2+b/2+1/2) Γ(c-a/2-b/2+1/2)
///     -----------------------------------------------
///     Γ(a/2+1/2) Γ(b/2+1/2) Γ(c-a/2+1/2) Γ(c-b/2+1/2)
/// ```
pub fn watson(
    a: &HalfInteger,
    b: &HalfInteger,
    c: &HalfInteger,
) -> Result<ExactValue, ClosedFormError> {
    let (a, b, c) = (a.to_rational(), b.to_rational(), c.to_rational());
    gamma_product(
        &[
            half(),
            &c + half(),
            (&a + &b) / two() + half(),
            &c - (&a + &b) / two() + half(),
        ],
        &[
            &a / two() + half(),
            &b / two() + half(),
            &c - &a / two() + half(),
            &c - &b / two() + half(),
        ],
    )
}

/// `4F3(a, b, c, d+1; (a+b+1)/2, 2c+1, d; 1)`:
///
/// ```text
///     2^(a+b-2) Γ(c+1/2) Γ(a/2+b/2+1/2) Γ(c-a/2-b/2+1/2) / (Γ(1/2) Γ(a) Γ(b))
///       · [ Γ(a/2) Γ(b/2)         / (Γ(c-a/2+1/2) Γ(c-b/2+1/2))
///         + ((2c-d)/d) Γ(a/2+1/2) Γ(b/2+1/2) / (Γ(c-a/2+1) Γ(c-b/2+1)) ]
/// ```
pub fn watson_ext(
    a: &HalfInteger,
    b: &HalfInteger,
    c: &HalfInteger,
    d: &BigRational,
) -> Result<ExactValue, ClosedFormError> {
    nonzero(d)?;
    let (ar, br, cr) = (a.to_rational(), b.to_rational(), c.to_rational());
    let pre_n = [
        &cr + half(),
        (&ar + &br) / two() + half(),
        &cr - (&ar + &br) / two() + half(),
    ];
    let pre_d = [half(), ar.clone(), br.clone()];
    let t1 = gamma_product(
        &[&pre_n[..], &[&ar / two(), &br / two()]].concat(),
        &[&pre_d[..], &[&cr - &ar / two() + half(), &cr - &br / two() + half()]].concat(),
    )?;
    let c2 = (two() * &cr - d) / d;
    let t2 = gamma_product(
        &[&pre_n[..], &[&ar / two() + half(), &br / two() + half()]].concat(),
        &[&pre_d[..], &[&cr - &ar / two() + one(), &cr - &br / two() + one()]].concat(),
    )?
    .scale(&c2);
    let pow = ExactValue::two_power(&(&(a + b) + -2));
    Ok(&pow * &(&t1 + &t2))
}

// ---------------------------------------------------------------------------
// series sides
// ---------------------------------------------------------------------------

fn r(h: &HalfInteger) -> BigRational {
    h.to_rational()
}

pub fn gauss_series(a: &HalfInteger, b: &HalfInteger, c: &HalfInteger) -> SeriesSpec {
    SeriesSpec::new(vec![r(a), r(b)], vec![r(c)], one())
}

pub fn gauss_ext_series(
    a: &HalfInteger,
    b: &HalfInteger,
    c: &HalfInteger,
    d: &BigRational,
) -> SeriesSpec {
    SeriesSpec::new(
        vec![r(a), r(b), d + one()],
        vec![r(c) + one(), d.clone()],
        one(),
    )
}

pub fn gauss_second_series(a: &HalfInteger, b: &HalfInteger) -> SeriesSpec {
    SeriesSpec::new(
        vec![r(a), r(b)],
        vec![(r(a) + r(b) + one()) / two()],
        half(),
    )
}

pub fn gauss_second_ext_series(a: &HalfInteger, b: &HalfInteger, d: &BigRational) -> SeriesSpec {
    SeriesSpec::new(
        vec![r(a), r(b), d + one()],
        vec![(r(a) + r(b) + one() + two()) / two(), d.clone()],
        half(),
    )
}

pub fn bailey_series(a: &HalfInteger, c: &HalfInteger) -> SeriesSpec {
    SeriesSpec::new(vec![r(a), one() - r(a)], vec![r(c)], half())
}

pub fn bailey_ext_series(a: &HalfInteger, c: &HalfInteger, d: &BigRational) -> SeriesSpec {
    SeriesSpec::new(
        vec![r(a), one() - r(a), d + one()],
        vec![r(c) + one(), d.clone()],
        half(),
    )
}

pub fn watson_series(a: &HalfInteger, b: &HalfInteger, c: &HalfInteger) -> SeriesSpec {
    SeriesSpec::new(
        vec![r(a), r(b), r(c)],
        vec![(r(a) + r(b) + one()) / two(), two() * r(c)],
        one(),
    )
}

pub fn watson_ext_series(
    a: &HalfInteger,
    b: &HalfInteger,
    c: &HalfInteger,
    d: &BigRational,
) -> SeriesSpec {
    SeriesSpec::new(
        vec![r(a), r(b), r(c), d + one()],
        vec![(r(a) + r(b) + one()) / two(), two() * r(c) + one(), d.clone()],
        one(),
    )
}

// ---------------------------------------------------------------------------
