//! The five identity families: lattices of hypergeometric summation
//! identities, each pairing a concrete `pFq` series with an exact value in
//! `Q[√2, √π]`.
//!
//! Every family fixes the shape of a series whose parameters move on
//! non-negative integers `m`, `n`, `s` and a free rational `d > 0`:
//!
//! | family | series | value lattice |
//! |--------|--------|---------------|
//! | `2.1` | `₂F₁(½+m, ½−m; 3/2+m; 1)` | `π·Q` |
//! | `2.2` | `₃F₂(½+m, ½−m, d+1; 5/2+m, d; 1)` | `π·Q` |
//! | `2.3` | `₃F₂(2m+1, 2n+1, d+1; m+n+5/2, d; ½)` | `Q + π·Q` |
//! | `2.4` | `₃F₂(½+m, ½−m, d+1; m+2n+5/2, d; ½)` | `√2·Q + √2π·Q` |
//! | `2.5` | `₄F₃(2m+1, 2n+1, m+n+s+1, d+1; m+n+3/2, 2(m+n+s)+3, d; 1)` | `Q + π²·Q` |
//!
//! Generators emit the series exactly as parameterized — in particular the
//! contraction pair `(d+1; d)` is kept rather than cancelled, so reported
//! parameter lists match the identity shape.  [`SeriesSpec::cancelled`]
//! strips coincidental equal pairs when a caller wants the reduced series;
//! the sum is term-for-term identical either way.
//!
//! Each family specializes one of the closed forms in [`crate::closed`]
//! (`2.1` → `gauss`, `2.2` → `gauss_ext`, `2.3` → `gauss_second_ext`,
//! `2.4` → `bailey_ext`, `2.5` → `watson_ext`), but the right-hand sides
//! here are carried as explicit Pochhammer-ratio formulas: on these lattices
//! every gamma quotient collapses to rationals times at most `√2` and a
//! power of `π`.  Setting `d` to the sacrificial lower parameter of the
//! matching non-extended form recovers it; e.g. family `2.2` at
//! `d = m + 3/2` reproduces family `2.1` exactly.

use num::{BigInt, BigRational, One, Signed};
use serde::Serialize;

use crate::error::ClosedFormError;
use crate::exact::ExactValue;
use crate::gamma_exact::{factorial, pochhammer};
use crate::half::HalfInteger;
use crate::series::SeriesSpec;

/// Largest admitted value for each of the integer lattice parameters
/// `m`, `n`, `s`.  The identities hold for all of `N`, but beyond this the
/// exact coefficients grow into the thousands of digits and evaluation
/// ceases to be useful; treat larger requests as caller error.
pub const PARAM_CAP: u32 = 64;

/// The five families, tagged `T2.1` through `T2.5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "T2.1")]
    T21,
    #[serde(rename = "T2.2")]
    T22,
    #[serde(rename = "T2.3")]
    T23,
    #[serde(rename = "T2.4")]
    T24,
    #[serde(rename = "T2.5")]
    T25,
}

impl Family {
    /// The tag used in identity ids: `"2.1"` … `"2.5"`.
    pub fn id_tag(self) -> &'static str {
        match self {
            Family::T21 => "2.1",
            Family::T22 => "2.2",
            Family::T23 => "2.3",
            Family::T24 => "2.4",
            Family::T25 => "2.5",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T{}", self.id_tag())
    }
}

impl std::str::FromStr for Family {
    type Err = ClosedFormError;

    /// Accepts both the display form (`"T2.3"`) and the id tag (`"2.3"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().trim_start_matches(['T', 't']) {
            "2.1" => Ok(Family::T21),
            "2.2" => Ok(Family::T22),
            "2.3" => Ok(Family::T23),
            "2.4" => Ok(Family::T24),
            "2.5" => Ok(Family::T25),
            _ => Err(ClosedFormError::Domain(format!("unknown family {s:?}"))),
        }
    }
}

/// One generated identity: a series specification together with its exact
/// value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Identity {
    /// Canonical identifier, e.g. `"2.3/m=1/n=1/d=7/2"`.  The family tag
    /// comes first, then `m` (always), then `n` and `s` when nonzero, then
    /// `d` for the families that have one.
    pub id: String,
    /// Which family generated this identity.
    pub family: Family,
    /// The series (the identity's left-hand side), un-cancelled.
    pub lhs: SeriesSpec,
    /// The exact value the series sums to.
    pub rhs: ExactValue,
}

fn ri(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rq(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn inv_pow2(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

fn check_cap(name: &str, v: u32) -> Result<(), ClosedFormError> {
    if v > PARAM_CAP {
        return Err(ClosedFormError::Domain(format!(
            "{name} = {v} exceeds the lattice parameter cap {PARAM_CAP}"
        )));
    }
    Ok(())
}

fn check_d(d: &BigRational) -> Result<(), ClosedFormError> {
    if !d.is_positive() {
        return Err(ClosedFormError::Domain(format!("d must be positive, got {d}")));
    }
    Ok(())
}

fn fmt_id(family: &str, m: u32, extras: &[(&str, u32)], d: Option<&BigRational>) -> String {
    let mut id = format!("{family}/m={m}");
    for (name, v) in extras {
        if *v != 0 {
            id.push_str(&format!("/{name}={v}"));
        }
    }
    if let Some(d) = d {
        id.push_str(&format!("/d={d}"));
    }
    id
}

/// Family `2.1`:
///
/// ```text
///     ₂F₁(½+m, ½−m; 3/2+m; 1) = π · (3/2)_m / (2^{2m+1} m!)
/// ```
pub fn family_2_1(m: u32) -> Result<Identity, ClosedFormError> {
    check_cap("m", m)?;
    let mm = i64::from(m);
    let series = SeriesSpec::new(
        vec![rq(2 * mm + 1, 2), rq(1 - 2 * mm, 2)],
        vec![rq(2 * mm + 3, 2)],
        BigRational::one(),
    );
    let coeff =
        pochhammer(&rq(3, 2), u64::from(m)) / factorial(u64::from(m)) * inv_pow2(2 * m + 1);
    Ok(Identity {
        id: fmt_id("2.1", m, &[], None),
        family: Family::T21,
        lhs: series,
        rhs: ExactValue::pi().scale(&coeff),
    })
}

/// Family `2.2`:
///
/// ```text
///     ₃F₂(½+m, ½−m, d+1; 5/2+m, d; 1)
///         = π · (1 + (1−2m)/(2d)) · 3 (5/2)_m / (2^{2m+3} m!)
/// ```
pub fn family_2_2(m: u32, d: &BigRational) -> Result<Identity, ClosedFormError> {
    check_cap("m", m)?;
    check_d(d)?;
    let mm = i64::from(m);
    let series = SeriesSpec::new(
        vec![rq(2 * mm + 1, 2), rq(1 - 2 * mm, 2), d + BigRational::one()],
        vec![rq(2 * mm + 5, 2), d.clone()],
        BigRational::one(),
    );
    let coeff = (BigRational::one() + ri(1 - 2 * mm) / (ri(2) * d))
        * ri(3)
        * pochhammer(&rq(5, 2), u64::from(m))
        * inv_pow2(2 * m + 3)
        / factorial(u64::from(m));
    Ok(Identity {
        id: fmt_id("2.2", m, &[], Some(d)),
        family: Family::T22,
        lhs: series,
        rhs: ExactValue::pi().scale(&coeff),
    })
}

/// Family `2.3`:
///
/// ```text
///     ₃F₂(2m+1, 2n+1, d+1; m+n+5/2, d; ½)
///         = P · [ π · (m+n+½ − (2m+1)(2n+1)/d) / (m! n!)
///               + ((2m+2n+3)/d − 2) / ((½)_m (½)_n) ]
///     where  P = 2 (3/2)_{m+n+1} / ((2m−2n+1)(2m−2n−1))
/// ```
///
/// The denominator of `P` is a product of two odd integers, so it never
/// vanishes and the formula holds on the whole lattice, including `m = n`.
pub fn family_2_3(m: u32, n: u32, d: &BigRational) -> Result<Identity, ClosedFormError> {
    check_cap("m", m)?;
    check_cap("n", n)?;
    check_d(d)?;
    let (mm, nn) = (i64::from(m), i64::from(n));
    let series = SeriesSpec::new(
        vec![ri(2 * mm + 1), ri(2 * nn + 1), d + BigRational::one()],
        vec![rq(2 * (mm + nn) + 5, 2), d.clone()],
        rq(1, 2),
    );
    let half = rq(1, 2);
    let p = ri(2) * pochhammer(&rq(3, 2), u64::from(m + n + 1))
        / ri((2 * mm - 2 * nn + 1) * (2 * mm - 2 * nn - 1));
    let pi_coeff = &p * (rq(2 * (mm + nn) + 1, 2) - ri((2 * mm + 1) * (2 * nn + 1)) / d)
        / (factorial(u64::from(m)) * factorial(u64::from(n)));
    let rat_coeff = &p * (ri(2 * (mm + nn) + 3) / d - ri(2))
        / (pochhammer(&half, u64::from(m)) * pochhammer(&half, u64::from(n)));
    let rhs = &ExactValue::pi().scale(&pi_coeff) + &ExactValue::from_rational(rat_coeff);
    Ok(Identity { id: fmt_id("2.3", m, &[("n", n)], Some(d)), family: Family::T23, lhs: series, rhs })
}

/// Family `2.4`:
///
/// ```text
///     ₃F₂(½+m, ½−m, d+1; m+2n+5/2, d; ½)
///         = 2^{−(m+2n+5/2)} (3/2)_{m+2n+1}
///           · [ π · (2/d) / ((m+n)! n!)
///             + (1 − (m+2n+3/2)/d) / ((½)_{m+n+1} (½)_{n+1}) ]
/// ```
///
/// The half-odd power of two contributes the `√2` that distinguishes this
/// family's value lattice.
pub fn family_2_4(m: u32, n: u32, d: &BigRational) -> Result<Identity, ClosedFormError> {
    check_cap("m", m)?;
    check_cap("n", n)?;
    check_d(d)?;
    let (mm, nn) = (i64::from(m), i64::from(n));
    let series = SeriesSpec::new(
        vec![rq(2 * mm + 1, 2), rq(1 - 2 * mm, 2), d + BigRational::one()],
        vec![rq(2 * mm + 4 * nn + 5, 2), d.clone()],
        rq(1, 2),
    );
    let half = rq(1, 2);
    let base = ExactValue::two_power(&HalfInteger::from_twice(-(2 * mm + 4 * nn + 5)))
        .scale(&pochhammer(&rq(3, 2), u64::from(m + 2 * n + 1)));
    let pi_coeff = ri(2) / d / (factorial(u64::from(m + n)) * factorial(u64::from(n)));
    let rat_coeff = (BigRational::one() - rq(2 * mm + 4 * nn + 3, 2) / d)
        / (pochhammer(&half, u64::from(m + n + 1)) * pochhammer(&half, u64::from(n + 1)));
    let bracket = &ExactValue::pi().scale(&pi_coeff) + &ExactValue::from_rational(rat_coeff);
    Ok(Identity {
        id: fmt_id("2.4", m, &[("n", n)], Some(d)),
        family: Family::T24,
        lhs: series,
        rhs: &base * &bracket,
    })
}

/// Family `2.5`:
///
/// ```text
///     ₄F₃(2m+1, 2n+1, m+n+s+1, d+1; m+n+3/2, 2(m+n+s)+3, d; 1)
///         = P · [ π² · (½)_m (½)_n / ((m+s)! (n+s)!)
///               + ((2m+2n+2s+2)/d − 1) · m! n! / ((½)_{m+s+1} (½)_{n+s+1}) ]
///     where  P = (3/2)_{m+n+s} (3/2)_{m+n} (½)_s / (4 (½)_m (½)_n m! n!)
/// ```
pub fn family_2_5(m: u32, n: u32, s: u32, d: &BigRational) -> Result<Identity, ClosedFormError> {
    check_cap("m", m)?;
    check_cap("n", n)?;
    check_cap("s", s)?;
    check_d(d)?;
    let (mm, nn, ss) = (i64::from(m), i64::from(n), i64::from(s));
    let series = SeriesSpec::new(
        vec![ri(2 * mm + 1), ri(2 * nn + 1), ri(mm + nn + ss + 1), d + BigRational::one()],
        vec![rq(2 * (mm + nn) + 3, 2), ri(2 * (mm + nn + ss) + 3), d.clone()],
        BigRational::one(),
    );
    let half = rq(1, 2);
    let p = pochhammer(&rq(3, 2), u64::from(m + n + s))
        * pochhammer(&rq(3, 2), u64::from(m + n))
        * pochhammer(&half, u64::from(s))
        / (ri(4)
            * pochhammer(&half, u64::from(m))
            * pochhammer(&half, u64::from(n))
            * factorial(u64::from(m))
            * factorial(u64::from(n)));
    let pi2_coeff = &p * pochhammer(&half, u64::from(m)) * pochhammer(&half, u64::from(n))
        / (factorial(u64::from(m + s)) * factorial(u64::from(n + s)));
    let rat_coeff = &p
        * (ri(2 * (mm + nn + ss) + 2) / d - BigRational::one())
        * factorial(u64::from(m))
        * factorial(u64::from(n))
        / (pochhammer(&half, u64::from(m + s + 1)) * pochhammer(&half, u64::from(n + s + 1)));
    let rhs = &ExactValue::pi_pow(2).scale(&pi2_coeff) + &ExactValue::from_rational(rat_coeff);
    Ok(Identity { id: fmt_id("2.5", m, &[("n", n), ("s", s)], Some(d)), family: Family::T25, lhs: series, rhs })
}

/// Dispatch by family tag (any form [`Family::from_str`] accepts).
///
/// `n`, `s`, and `d` must be given exactly when the family uses them
/// (`n` for `2.3`–`2.5`, `s` for `2.5` only, `d` for all but `2.1`);
/// anything else is a [`ClosedFormError::Domain`].
pub fn generate(
    family: &str,
    m: u32,
    n: Option<u32>,
    s: Option<u32>,
    d: Option<&BigRational>,
) -> Result<Identity, ClosedFormError> {
    fn need_d(
        family: Family,
        d: Option<&BigRational>,
    ) -> Result<&BigRational, ClosedFormError> {
        d.ok_or_else(|| ClosedFormError::Domain(format!("family {family} requires d")))
    }
    let family: Family = family.parse()?;
    let no = |name: &str, used: bool| {
        if used {
            Err(ClosedFormError::Domain(format!("family {family} does not take {name}")))
        } else {
            Ok(())
        }
    };
    match family {
        Family::T21 => {
            no("n", n.is_some())?;
            no("s", s.is_some())?;
            no("d", d.is_some())?;
            family_2_1(m)
        }
        Family::T22 => {
            no("n", n.is_some())?;
            no("s", s.is_some())?;
            family_2_2(m, need_d(family, d)?)
        }
        Family::T23 => {
            no("s", s.is_some())?;
            family_2_3(m, n.unwrap_or(0), need_d(family, d)?)
        }
        Family::T24 => {
            no("s", s.is_some())?;
            family_2_4(m, n.unwrap_or(0), need_d(family, d)?)
        }
        Family::T25 => family_2_5(m, n.unwrap_or(0), s.unwrap_or(0), need_d(family, d)?),
    }
}
