//! Exact arithmetic in the ring Q[sqrt(2), sqrt(pi)].
//!
//! Every value is a finite sum of monomials
//!
//! ```text
//!     c * sqrt(2)^s * sqrt(pi)^h        c in Q,  s in {0,1},  h in Z
//! ```
//!
//! with sqrt(2)^2 folded into the rational coefficient, so the monomial
//! exponents `(h, s)` are canonical keys.  `pi` itself is `h = 2`; final
//! results of the identities in this crate live in `h ∈ {0, 2, 4}`, but
//! intermediates may carry negative powers (for example `1/pi` factors).
//!
//! * [`ExactValue`] — the ring element (canonical, no zero terms)
//! * `Add`/`Sub`/`Mul`, [`ExactValue::div_monomial`] — ring operations
//!   (division is defined only by a single nonzero monomial)
//! * [`ExactValue::two_power`] — exact `2^e` for half-integer `e`
//! * [`ExactValue::render`] / `Display` — canonical text form
//!   (`"pi/2"`, `"9*pi/16"`, `"pi^2/4 + 1"`, `"3*sqrt2*pi/8"`)
//! * [`ExactValue::terms`] — canonical `(h, s)`-ascending term iteration

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ExactError;
use crate::half::HalfInteger;

/// Exponent pair of one monomial: `sqrt(pi)^h * sqrt(2)^s`.
///
/// Ordered by `(h, s)` ascending, which fixes the canonical term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Power of sqrt(pi); `pi` is `h = 2`.
    pub sqrtpi_pow: i64,
    /// Power of sqrt(2), reduced to 0 or 1.
    pub sqrt2: bool,
}

/// An element of Q[sqrt(2), sqrt(pi)] in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactValue {
    terms: BTreeMap<Monomial, BigRational>,
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue::default()
    }

    pub fn one() -> Self {
        ExactValue::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        ExactValue::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        ExactValue::monomial(c, false, 0)
    }

    /// The single monomial `c * sqrt(2)^s * sqrt(pi)^h` (dropped if `c = 0`).
    pub fn monomial(c: BigRational, sqrt2: bool, sqrtpi_pow: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial { sqrtpi_pow, sqrt2 }, c);
        }
        ExactValue { terms }
    }

    /// `pi^k` for integer `k` (possibly negative).
    pub fn pi_pow(k: i64) -> Self {
        ExactValue::monomial(BigRational::one(), false, 2 * k)
    }

    pub fn pi() -> Self {
        ExactValue::pi_pow(1)
    }

    pub fn sqrt_pi() -> Self {
        ExactValue::monomial(BigRational::one(), false, 1)
    }

    pub fn sqrt_2() -> Self {
        ExactValue::monomial(BigRational::one(), true, 0)
    }

    /// Exact `2^e` for a half-integer exponent.
    ///
    /// ```text
    ///     2^(k + 1/2) = 2^k * sqrt(2),     e.g.  2^(-3/2) = (1/4) sqrt(2)
    /// ```
    pub fn two_power(e: &HalfInteger) -> Self {
        let (k, r) = e.twice().div_mod_floor(&BigInt::from(2));
        ExactValue::monomial(rational_pow2(&k), r.is_one(), 0)
    }
}

/// Exact `2^k` for an arbitrary-precision integer `k`.
fn rational_pow2(k: &BigInt) -> BigRational {
    let mag: u64 = k.magnitude().try_into().expect("2^k exponent fits u64");
    let p = BigInt::one() << mag;
    if k.is_negative() {
        BigRational::new(BigInt::one(), p)
    } else {
        BigRational::from_integer(p)
    }
}

// ---------------------------------------------------------------------------
// queries
// ---------------------------------------------------------------------------

impl ExactValue {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(h, s)`-ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The single `(coefficient, monomial)` pair when the value is a nonzero
    /// monomial.
    pub fn as_monomial(&self) -> Option<(&BigRational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// The rational value when no irrational monomial is present.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let (c, m) = self.as_monomial()?;
        (m.sqrtpi_pow == 0 && !m.sqrt2).then(|| c.clone())
    }
}

// ---------------------------------------------------------------------------
// ring operations
// ---------------------------------------------------------------------------

impl ExactValue {
    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply by an exact rational.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ExactValue::zero();
        }
        ExactValue {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Division by a single nonzero monomial.
    ///
    /// General inverses do not exist in the ring (denominators like
    /// `1 + sqrt(2)` leave it), so division is restricted to monomial
    /// divisors and anything else is an error.
    pub fn div_monomial(&self, rhs: &ExactValue) -> Result<Self, ExactError> {
        let (dc, dm) = rhs
            .as_monomial()
            .ok_or_else(|| ExactError::NonInvertible(rhs.to_string()))?;
        let mut out = ExactValue::zero();
        for (m, c) in &self.terms {
            // sqrt(2)^s / sqrt(2)^t: equal exponents cancel; 1/sqrt(2) = sqrt(2)/2.
            let (s, extra) = match (m.sqrt2, dm.sqrt2) {
                (a, b) if a == b => (false, BigRational::one()),
                (true, false) => (true, BigRational::one()),
                (false, true) => (true, BigRational::new(BigInt::one(), BigInt::from(2))),
                _ => unreachable!(),
            };
            out.add_term(
                Monomial { sqrtpi_pow: m.sqrtpi_pow - dm.sqrtpi_pow, sqrt2: s },
                c / dc * extra,
            );
        }
        Ok(out)
    }
}

impl Add<&ExactValue> for &ExactValue {
    type Output = ExactValue;
    fn add(self, rhs: &ExactValue) -> ExactValue {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&ExactValue> for &ExactValue {
    type Output = ExactValue;
    fn sub(self, rhs: &ExactValue) -> ExactValue {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&ExactValue> for &ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: &ExactValue) -> ExactValue {
        let mut out = ExactValue::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                // sqrt(2)^1 * sqrt(2)^1 = 2 folds into the coefficient.
                let mut c = ca * cb;
                if ma.sqrt2 && mb.sqrt2 {
                    c *= BigRational::from_integer(BigInt::from(2));
                }
                out.add_term(
                    Monomial {
                        sqrtpi_pow: ma.sqrtpi_pow + mb.sqrtpi_pow,
                        sqrt2: ma.sqrt2 ^ mb.sqrt2,
                    },
                    c,
                );
            }
        }
        out
    }
}

impl Neg for &ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        ExactValue {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

impl ExactValue {
    /// Canonical text form.
    ///
    /// Each term renders as `[p*][sqrt2*][pi^k | sqrt(pi)[*pi^k]][/q]` with a
    /// unit numerator elided next to a monomial; terms are joined by
    /// ` + ` / ` - ` from the highest `(h, s)` down, e.g.
    ///
    /// ```text
    ///     pi/2      9*pi/16      pi^2/4 + 1      3*sqrt2*pi/8
    /// ```
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&render_term(&c.abs(), m));
        }
        out
    }
}

fn render_term(c: &BigRational, m: &Monomial) -> String {
    let mut factors: Vec<String> = Vec::new();
    if m.sqrt2 {
        factors.push("sqrt2".to_string());
    }
    // sqrt(pi)^h = sqrt(pi)^(h mod 2) * pi^(h div 2)
    let k = m.sqrtpi_pow.div_euclid(2);
    if m.sqrtpi_pow.rem_euclid(2) == 1 {
        factors.push("sqrt(pi)".to_string());
    }
    match k {
        0 => {}
        1 => factors.push("pi".to_string()),
        _ => factors.push(format!("pi^{}", k)),
    }
    let numer = c.numer();
    let denom = c.denom();
    let mut s = if factors.is_empty() {
        numer.to_string()
    } else if numer.is_one() {
        factors.join("*")
    } else {
        format!("{}*{}", numer, factors.join("*"))
    };
    if !denom.is_one() {
        s.push_str(&format!("/{}", denom));
    }
    s
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

/// Serializes as the canonical term list, `(h, s)` ascending:
///
/// ```text
///     [{"coeff": "p/q", "sqrt2": 0|1, "sqrtpi_pow": h}, ...]
/// ```
impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermRepr { coeff: c.to_string(), sqrt2: m.sqrt2 as u8, sqrtpi_pow: m.sqrtpi_pow })?;
        }
        seq.end()
    }
}

struct TermRepr {
    coeff: String,
    sqrt2: u8,
    sqrtpi_pow: i64,
}

impl Serialize for TermRepr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 3)?;
        st.serialize_field("coeff", &self.coeff)?;
        st.serialize_field("sqrt2", &self.sqrt2)?;
        st.serialize_field("sqrtpi_pow", &self.sqrtpi_pow)?;
        st.end()
    }
}

// ---------------------------------------------------------------------------
