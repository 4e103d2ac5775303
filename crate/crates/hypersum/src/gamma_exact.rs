//! Exact gamma values and gamma-quotient products over Q[sqrt(2), sqrt(pi)].
//!
//! * [`pochhammer`] — rising factorial `(x)_n` over Q
//! * [`exact_gamma`] — `Γ(a)` at half-integer `a`, anchored at
//!   `Γ(1/2) = sqrt(pi)`; always a single monomial `q * sqrt(pi)^{0,1}`
//! * [`gamma_product`] — a full quotient `Π Γ(n_i) / Π Γ(d_j)` where every
//!   argument is a half- or quarter-integer.  Quarter-integer gammas are not
//!   individually representable in the ring, but they occur in pairs that
//!   reduce to monomials:
//!
//! ```text
//!     Γ(x)/Γ(y)   x ≡ y (mod 1):   rational   (Pochhammer ratio)
//!     Γ(x)Γ(y)    x + y ∈ Z:       r · (-1)^⌊x⌋ · sqrt(2) · pi,  r ∈ Q
//! ```
//!
//! the second line being reflection, `Γ(x)Γ(1-x) = pi / sin(pi x)` with
//! `sin(pi x) = (-1)^⌊x⌋ sqrt(2)/2` off the quarter lattice.  Unpairable
//! quarter arguments leave the ring and are reported as not representable.

use num::{BigInt, BigRational, Integer, One, Signed};

use crate::error::{ClosedFormError, ExactError};
use crate::exact::ExactValue;
use crate::half::HalfInteger;

/// `n!` as an exact rational.
pub fn factorial(n: u64) -> BigRational {
    pochhammer(&BigRational::one(), n)
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f += BigRational::one();
    }
    acc
}

/// `Γ(a)` for half-integer `a`.
///
/// ```text
///     Γ(k)       = (k-1)!                 k ≥ 1
///     Γ(1/2 + n) = (1/2)_n sqrt(pi)       n ≥ 0
///     Γ(1/2 - m) = sqrt(pi) / (1/2 - m)_m
/// ```
///
/// Non-positive integers are poles.
pub fn exact_gamma(a: &HalfInteger) -> Result<ExactValue, ExactError> {
    if a.is_non_positive_integer() {
        return Err(ExactError::Pole(format!("gamma({})", a)));
    }
    if let Some(k) = a.to_integer() {
        let k: u64 = (k - BigInt::one()).try_into().expect("positive integer gamma argument fits u64");
        return Ok(ExactValue::from_rational(factorial(k)));
    }
    // a = 1/2 + n for integer n (positive or negative)
    let n: BigInt = (a.twice() - BigInt::one()) / BigInt::from(2);
    let coeff = if n.is_negative() {
        let m: u64 = n.magnitude().try_into().expect("gamma shift fits u64");
        pochhammer(&a.to_rational(), m).recip()
    } else {
        let n: u64 = n.try_into().expect("gamma shift fits u64");
        pochhammer(&BigRational::new(BigInt::one(), BigInt::from(2)), n)
    };
    Ok(ExactValue::monomial(coeff, false, 1))
}

// ---------------------------------------------------------------------------
// gamma products with quarter-integer pairing
// ---------------------------------------------------------------------------

/// Which quarter of the unit interval an argument's fractional part hits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Frac {
    Whole,
    Half,
    Quarter,
    ThreeQuarter,
}

fn classify(x: &BigRational) -> Option<Frac> {
    let four = BigRational::from_integer(BigInt::from(4));
    let four_x = x * &four;
    if !four_x.is_integer() {
        return None;
    }
    let rem4 = ((x - x.floor()) * &four).to_integer();
    Some(match u8::try_from(&rem4).expect("scaled fractional part in 0..4") {
        0 => Frac::Whole,
        1 => Frac::Quarter,
        2 => Frac::Half,
        3 => Frac::ThreeQuarter,
        _ => unreachable!(),
    })
}

/// `Γ(x)/Γ(y)` for `x - y ∈ Z`, as a rational (both gammas pole-free).
fn gamma_ratio(x: &BigRational, y: &BigRational) -> BigRational {
    let d = (x - y).to_integer();
    if d.is_negative() {
        let m: u64 = d.magnitude().try_into().expect("gamma ratio shift fits u64");
        pochhammer(x, m).recip()
    } else {
        let m: u64 = d.try_into().expect("gamma ratio shift fits u64");
        pochhammer(y, m)
    }
}

/// `Γ(x)Γ(y)` for quarter-integer `x` with `x + y ∈ Z`: `r (-1)^⌊x⌋ sqrt(2) pi`.
fn gamma_reflection_pair(x: &BigRational, y: &BigRational) -> ExactValue {
    let n: BigInt = (x + y).to_integer() - BigInt::one();
    let one_minus_x = BigRational::one() - x;
    let mut r = if n.is_negative() {
        let m: u64 = n.magnitude().try_into().expect("reflection shift fits u64");
        pochhammer(&(&one_minus_x + BigRational::from_integer(n)), m).recip()
    } else {
        let m: u64 = (&n).try_into().expect("reflection shift fits u64");
        pochhammer(&one_minus_x, m)
    };
    if x.floor().to_integer().is_odd() {
        r = -r;
    }
    ExactValue::monomial(r, true, 2)
}

/// Evaluates `Π_i Γ(numer[i]) / Π_j Γ(denom[j])` exactly.
///
/// Arguments must be half- or quarter-integers.  A gamma pole in the
/// numerator is an error; a pole in the denominator makes the whole
/// quotient zero.  Quarter-integer arguments must cancel in
/// same-fraction numerator/denominator ratios or combine in
/// integer-sum reflection pairs, otherwise the value is not in
/// Q[sqrt(2), sqrt(pi)].
pub fn gamma_product(
    numer: &[BigRational],
    denom: &[BigRational],
) -> Result<ExactValue, ClosedFormError> {
    let mut acc = ExactValue::one();
    // quarter-integer arguments, bucketed by side and fractional part
    let mut nq = Vec::new(); // (arg, frac) in the numerator
    let mut dq = Vec::new();

    for (side_numer, args, bucket) in [(true, numer, &mut nq), (false, denom, &mut dq)] {
        for x in args {
            match classify(x) {
                None => {
                    return Err(ClosedFormError::NotRepresentable(format!(
                        "gamma({}) is not a quarter-integer argument",
                        x
                    )))
                }
                Some(Frac::Whole) | Some(Frac::Half) => {
                    let h = HalfInteger::try_from_rational(x).expect("classified as half-integer");
                    match exact_gamma(&h) {
                        Ok(g) => {
                            if side_numer {
                                acc = &acc * &g;
                            } else {
                                acc = acc.div_monomial(&g)?;
                            }
                        }
                        Err(e @ ExactError::Pole(_)) => {
                            if side_numer {
                                return Err(ClosedFormError::Pole(e));
                            }
                            return Ok(ExactValue::zero()); // 1/Γ(pole) = 0
                        }
                        Err(e) => return Err(ClosedFormError::Pole(e)),
                    }
                }
                Some(f) => bucket.push((x.clone(), f)),
            }
        }
    }

    // Same-fraction arguments across the bar cancel to Pochhammer ratios.
    for frac in [Frac::Quarter, Frac::ThreeQuarter] {
        while let Some(i) = nq.iter().position(|(_, f)| *f == frac) {
            let Some(j) = dq.iter().position(|(_, f)| *f == frac) else { break };
            let (x, _) = nq.swap_remove(i);
            let (y, _) = dq.swap_remove(j);
            acc = acc.scale(&gamma_ratio(&x, &y));
        }
    }

    // Complementary fractions on the same side pair by reflection.
    while let Some(i) = nq.iter().position(|(_, f)| *f == Frac::Quarter) {
        let Some(j) = nq.iter().position(|(_, f)| *f == Frac::ThreeQuarter) else { break };
        let (x, _) = nq.swap_remove(i.max(j));
        let (y, _) = nq.swap_remove(i.min(j));
        acc = &acc * &gamma_reflection_pair(&x, &y);
    }
    while let Some(i) = dq.iter().position(|(_, f)| *f == Frac::Quarter) {
        let Some(j) = dq.iter().position(|(_, f)| *f == Frac::ThreeQuarter) else { break };
        let (x, _) = dq.swap_remove(i.max(j));
        let (y, _) = dq.swap_remove(i.min(j));
        acc = acc.div_monomial(&gamma_reflection_pair(&x, &y))?;
    }

    if let Some((x, _)) = nq.first().or(dq.first()) {
        return Err(ClosedFormError::NotRepresentable(format!(
            "unpaired quarter-integer gamma({})",
            x
        )));
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
