//! Arbitrary-precision floating point support.
//!
//! Thin helpers over [`astro_float::BigFloat`]: a process-wide constants
//! cache, exact conversions from big integers and rationals, signed integer
//! powers, decimal input/output, and numeric evaluation of [`ExactValue`].
//!
//! Conventions used across the crate:
//!
//! * every operation rounds to an explicit bit precision `p` with
//!   round-half-to-even ([`RM`]), so results are deterministic functions of
//!   their inputs
//! * `p` is the *target* precision; internal steps carry guard bits
//!   ([`GUARD`]) and round once at the end

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num::{BigInt, BigRational, Signed, Zero};
use std::sync::{LazyLock, Mutex};

use crate::exact::ExactValue;

/// Rounding mode used everywhere: round half to even.
pub const RM: RoundingMode = RoundingMode::ToEven;

/// Guard bits carried by multi-step computations before the final rounding.
pub const GUARD: usize = 64;

static CONSTS: LazyLock<Mutex<Consts>> =
    LazyLock::new(|| Mutex::new(Consts::new().expect("constants cache allocation")));

/// Runs `f` with the process-wide constants cache locked.
pub fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    let mut cc = CONSTS.lock().expect("constants cache poisoned");
    f(&mut cc)
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

/// `pi` to `p` bits.
pub fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

/// `sqrt(pi)` to `p` bits.
pub fn sqrt_pi(p: usize) -> BigFloat {
    pi(p + GUARD).sqrt(p, RM)
}

/// `sqrt(2)` to `p` bits.
pub fn sqrt_two(p: usize) -> BigFloat {
    BigFloat::from_i8(2, p + GUARD).sqrt(p, RM)
}

/// `2^k` (exact, 64-bit mantissa).
pub fn pow2(k: i64) -> BigFloat {
    let mut one = BigFloat::from_i8(1, 64);
    let e: i32 = (k + 1).try_into().expect("power-of-two exponent fits i32");
    one.set_exponent(e);
    one
}

// ---------------------------------------------------------------------------
// conversions
// ---------------------------------------------------------------------------

/// Exact conversion of a big integer (no rounding; the mantissa holds every
/// bit of `n`).
pub fn from_bigint(n: &BigInt) -> BigFloat {
    if n.is_zero() {
        return BigFloat::new(64);
    }
    let words = n.magnitude().to_u64_digits();
    let bits: i32 = (words.len() * 64).try_into().expect("integer bit length fits i32");
    let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
    // value = 0.m * 2^(64*len) with m the little-endian words = exactly n
    BigFloat::from_words(&words, sign, bits)
}

/// `r` rounded once to `p` bits.
pub fn from_rational(r: &BigRational, p: usize) -> BigFloat {
    from_bigint(r.numer()).div(&from_bigint(r.denom()), p, RM)
}

/// `x^k` for signed `k`, rounded to `p` bits.
pub fn powi(x: &BigFloat, k: i64, p: usize) -> BigFloat {
    if k >= 0 {
        x.powi(k as usize, p, RM)
    } else {
        x.powi((-k) as usize, p + GUARD, RM).reciprocal(p, RM)
    }
}

impl ExactValue {
    /// Numeric value to `p` bits.
    ///
    /// Terms are accumulated in canonical order at `p + GUARD` bits and the
    /// sum is rounded once, so the result is deterministic.
    pub fn to_numeric(&self, p: usize) -> BigFloat {
        let wp = p + GUARD;
        let s2 = sqrt_two(wp);
        let spi = sqrt_pi(wp);
        let mut acc = BigFloat::new(wp);
        for (m, c) in self.terms() {
            let mut t = from_rational(c, wp);
            if m.sqrt2 {
                t = t.mul(&s2, wp, RM);
            }
            if m.sqrtpi_pow != 0 {
                t = t.mul(&powi(&spi, m.sqrtpi_pow, wp), wp, RM);
            }
            acc = acc.add(&t, wp, RM);
        }
        let mut out = acc;
        out.set_precision(p, RM).expect("rounding to target precision");
        out
    }
}

// ---------------------------------------------------------------------------
// decimal input/output
// ---------------------------------------------------------------------------

/// Bit precision adequate for `digits` significant decimal digits.
pub fn bits_for_digits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
}

/// Decimal digits carried by `p` bits.
pub fn digits_for_bits(p: usize) -> usize {
    (p as f64 * std::f64::consts::LOG10_2).floor() as usize
}

/// Parses a decimal string (integer, fraction, or scientific notation) to
/// `p` bits.  Returns `None` for malformed input.
pub fn parse_decimal(s: &str, p: usize) -> Option<BigFloat> {
    let x = with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc));
    (!x.is_nan()).then_some(x)
}

/// Scientific-notation rendering with `sig` significant digits, e.g.
/// `-1.767145867644258697e0`.
pub fn to_decimal_sci(x: &BigFloat, sig: usize) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_inf_pos() {
        return "inf".to_string();
    }
    if x.is_inf_neg() {
        return "-inf".to_string();
    }
    if x.is_zero() {
        return format!("{:.*}e0", sig.saturating_sub(1), 0.0);
    }
    let (sign, digits, exp) =
        with_consts(|cc| x.convert_to_radix(Radix::Dec, RM, cc)).expect("finite decimal conversion");
    let (digits, exp) = round_digits(&digits, exp, sig);
    let mut out = String::new();
    if sign == Sign::Neg {
        out.push('-');
    }
    out.push(char::from(b'0' + digits[0]));
    if sig > 1 {
        out.push('.');
        for &d in &digits[1..sig.min(digits.len())] {
            out.push(char::from(b'0' + d));
        }
        for _ in digits.len()..sig {
            out.push('0');
        }
    }
    out.push('e');
    out.push_str(&(exp as i64 - 1).to_string());
    out
}

/// Plain-or-scientific rendering with `sig` significant digits; plain form
/// is used for decimal exponents in a readable range.
pub fn to_decimal(x: &BigFloat, sig: usize) -> String {
    let sci = to_decimal_sci(x, sig);
    let Some((mant, exp)) = sci.split_once('e') else { return sci };
    let exp: i64 = exp.parse().expect("exponent from our own formatter");
    if !(-4..=12).contains(&exp) {
        return sci;
    }
    let neg = mant.starts_with('-');
    let digits: Vec<u8> = mant
        .bytes()
        .filter(|b| b.is_ascii_digit())
        .map(|b| b - b'0')
        .collect();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        for &d in &digits {
            out.push(char::from(b'0' + d));
        }
    } else {
        let point = (exp + 1) as usize;
        for (i, &d) in digits.iter().enumerate() {
            if i == point {
                out.push('.');
            }
            out.push(char::from(b'0' + d));
        }
        for _ in digits.len()..point {
            out.push('0');
        }
    }
    out
}

/// Rounds a base-10 digit string (value `0.d₁d₂… × 10^exp`) to `sig` digits,
/// propagating carries and bumping the exponent on overflow (`999… → 100…`).
fn round_digits(digits: &[u8], exp: i32, sig: usize) -> (Vec<u8>, i32) {
    // strip leading zeros (convert_to_radix may emit one)
    let lead = digits.iter().take_while(|&&d| d == 0).count();
    let exp = exp - lead as i32;
    let digits = &digits[lead.min(digits.len().saturating_sub(1))..];
    if digits.len() <= sig {
        return (digits.to_vec(), exp);
    }
    let mut out = digits[..sig].to_vec();
    if digits[sig] >= 5 {
        let mut i = sig;
        loop {
            if i == 0 {
                out.insert(0, 1);
                out.pop();
                return (out, exp + 1);
            }
            i -= 1;
            if out[i] == 9 {
                out[i] = 0;
            } else {
                out[i] += 1;
                break;
            }
        }
    }
    (out, exp)
}

/// Best-effort `f64` approximation (for display and coarse checks only).
pub fn to_f64(x: &BigFloat) -> f64 {
    to_decimal_sci(x, 17).parse().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// comparisons
// ---------------------------------------------------------------------------

/// `|x|`.
pub fn abs(x: &BigFloat) -> BigFloat {
    let mut y = x.clone();
    y.set_sign(Sign::Pos);
    y
}

/// `|a - b|` at `p` bits.
pub fn abs_diff(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    abs(&a.sub(b, p, RM))
}

/// `true` when `|a| < |b|` (NaN compares false).
pub fn abs_lt(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.abs_cmp(b), Some(c) if c < 0)
}

/// `|a - b| / |b|` at `p` bits; falls back to `|a - b|` when `b = 0`.
pub fn rel_err(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    let d = abs_diff(a, b, p);
    if b.is_zero() {
        d
    } else {
        d.div(&abs(b), p, RM)
    }
}

// ---------------------------------------------------------------------------
