//! Numeric gamma function at arbitrary precision.
//!
//! Spouge's approximation:
//!
//! ```text
//!     Γ(z+1) = (z+a)^(z+1/2) e^(-z-a) [ sqrt(2 pi) + Σ_{k=1}^{a-1} c_k/(z+k) ]
//!
//!     c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!
//! ```
//!
//! with the free integer `a` chosen from the target precision (the relative
//! error of the truncated sum decays like `(2 pi)^(-a)`).  The alternating
//! coefficients `c_k` are large, so the bracket loses about `1.85 a` bits to
//! cancellation; the working precision carries `2a` extra bits plus a fixed
//! guard to absorb both that and the argument shift.
//!
//! Arguments left of `1` are lifted with upward recursion
//! `Γ(x) = Γ(x+n) / (x (x+1) ... (x+n-1))`, which also covers negative
//! non-integer arguments.  Non-positive integers are poles.

use astro_float::BigFloat;

use crate::bigfloat::{pi, to_f64, with_consts, RM};
use crate::error::ExactError;

/// Spouge parameter for `p` bits of relative accuracy.
fn spouge_a(p: usize) -> usize {
    // (2 pi)^(-a) ≈ 2^(-2.65 a); aim a little past p
    (p as f64 / 2.5).ceil() as usize + 8
}

/// `Γ(x)` to `p` bits of precision.
///
/// Returns a pole error at `x ∈ {0, -1, -2, ...}`; NaN and infinite inputs
/// are rejected the same way.
pub fn num_gamma(x: &BigFloat, p: usize) -> Result<BigFloat, ExactError> {
    if x.is_nan() || x.is_inf() {
        return Err(ExactError::Pole("gamma of a non-finite argument".into()));
    }
    if x.is_zero() || (x.is_int() && x.is_negative()) {
        return Err(ExactError::Pole(format!("gamma({})", to_f64(x))));
    }
    let a = spouge_a(p);
    let wp = p + 2 * a + 64;

    // shift left-of-1 arguments up: Γ(x) = Γ(x + n) / Π (x + i)
    let n = (1.0 - to_f64(x)).ceil().max(0.0) as usize;
    let mut arg = x.clone();
    let mut divisor = BigFloat::from_i8(1, wp);
    for _ in 0..n {
        divisor = divisor.mul(&arg, wp, RM);
        arg = arg.add(&BigFloat::from_i8(1, wp), wp, RM);
    }

    let z = arg.sub(&BigFloat::from_i8(1, wp), wp, RM); // Γ(arg) = Γ(z + 1)
    let af = BigFloat::from_u64(a as u64, wp);

    // bracket: sqrt(2 pi) + Σ c_k / (z + k)
    let e = with_consts(|cc| cc.e(wp, RM));
    let mut sum = pi(wp).mul(&BigFloat::from_i8(2, wp), wp, RM).sqrt(wp, RM);
    let mut fact = BigFloat::from_i8(1, wp); // (k-1)!
    for k in 1..a {
        if k > 1 {
            fact = fact.mul(&BigFloat::from_u64(k as u64 - 1, wp), wp, RM);
        }
        let amk = BigFloat::from_u64((a - k) as u64, wp);
        // (a-k)^(k-1/2) = (a-k)^(k-1) sqrt(a-k)
        let mut c = amk.powi(k - 1, wp, RM).mul(&amk.sqrt(wp, RM), wp, RM);
        c = c.mul(&e.powi(a - k, wp, RM), wp, RM).div(&fact, wp, RM);
        if k % 2 == 0 {
            c = c.neg();
        }
        let zk = z.add(&BigFloat::from_u64(k as u64, wp), wp, RM);
        sum = sum.add(&c.div(&zk, wp, RM), wp, RM);
    }

    // prefactor: exp((z + 1/2) ln(z + a) - (z + a))
    let za = z.add(&af, wp, RM);
    let half = BigFloat::from_i8(1, wp).div(&BigFloat::from_i8(2, wp), wp, RM);
    let expo = with_consts(|cc| {
        let t = z.add(&half, wp, RM).mul(&za.ln(wp, RM, cc), wp, RM);
        t.sub(&za, wp, RM).exp(wp, RM, cc)
    });

    let mut g = expo.mul(&sum, wp, RM).div(&divisor, wp, RM);
    g.set_precision(p, RM).expect("rounding to target precision");
    Ok(g)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigfloat::{abs_lt, from_rational, pow2, rel_err, sqrt_pi, to_decimal_sci};
    use crate::gamma_exact::exact_gamma;
    use crate::half::HalfInteger;
    use num::BigRational;
    use std::str::FromStr;

    fn close(a: &BigFloat, b: &BigFloat, p: usize, bits: i64) {
        let e = rel_err(a, b, p);
        assert!(
            abs_lt(&e, &pow2(-bits)) || e.is_zero(),
            "relative error {} exceeds 2^-{}",
            to_decimal_sci(&e, 5),
            bits
        );
    }

    #[test]
    fn matches_factorials() {
        let p = 256;
        for (x, f) in [(1i64, 1u64), (2, 1), (5, 24), (11, 3628800)] {
            let g = num_gamma(&BigFloat::from_i64(x, p), p).unwrap();
            close(&g, &BigFloat::from_u64(f, p), p, 248);
        }
    }

    #[test]
    fn matches_exact_gamma_on_half_integers() {
        let p = 256;
        for t in [-9i64, -5, -1, 1, 3, 7, 15, 41] {
            let h = HalfInteger::from_twice(t);
            let want = exact_gamma(&h).unwrap().to_numeric(p);
            let x = from_rational(&h.to_rational(), p);
            let got = num_gamma(&x, p).unwrap();
            close(&got, &want, p, 248);
        }
    }

    #[test]
    fn quarter_argument_reference_value() {
        // Γ(1/4) = 3.62560 99082 21908 31193 06851 ... (independent tables)
        let p = 192;
        let x = from_rational(&BigRational::from_str("1/4").unwrap(), p);
        let g = num_gamma(&x, p).unwrap();
        assert!(to_decimal_sci(&g, 25).starts_with("3.625609908221908311930685"));
        // and reflection: Γ(1/4) Γ(3/4) = pi sqrt(2)
        let y = from_rational(&BigRational::from_str("3/4").unwrap(), p);
        let prod = g.mul(&num_gamma(&y, p).unwrap(), p, RM);
        let want = pi(p).mul(&crate::bigfloat::sqrt_two(p), p, RM);
        close(&prod, &want, p, 180);
    }

    #[test]
    fn recursion_consistency_below_one() {
        // Γ(x+1) = x Γ(x) across the shift boundary
        let p = 192;
        let x = from_rational(&BigRational::from_str("-7/3").unwrap(), p);
        let lhs = num_gamma(&x.add(&BigFloat::from_i8(1, p), p, RM), p).unwrap();
        let rhs = x.mul(&num_gamma(&x, p).unwrap(), p, RM);
        close(&lhs, &rhs, p, 180);
        let _ = sqrt_pi(p); // keep the consts cache warm for other tests
    }

    #[test]
    fn poles_are_rejected() {
        let p = 128;
        for x in [0i64, -1, -2, -7] {
            assert!(matches!(
                num_gamma(&BigFloat::from_i64(x, p), p),
                Err(ExactError::Pole(_))
            ));
        }
        assert!(num_gamma(&BigFloat::from_i8(3, p), p).is_ok());
    }
}
