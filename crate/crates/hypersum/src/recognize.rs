//! Constant recognition: given a high-precision decimal, recover its exact
//! form over the basis `{1, π, π², √2, √2·π}` by integer-relation detection.
//!
//! The detector is PSLQ with the standard `γ = 2/√3 + 1/128` step
//! parameter.  The `y` vector and `H` matrix are arbitrary-precision
//! floats; the accumulated transforms `A`, `B` are exact big integers, so
//! a detected relation is a true integer vector regardless of rounding
//! inside the iteration.  Two guards keep the answer honest:
//!
//! * *exclusion*: `1 / max |H_jj|` lower-bounds the norm of any remaining
//!   relation; once it exceeds the coefficient bound, no relation exists
//!   within the bound and the search stops (this is what rejects `ln 2`)
//! * *confirmation*: a detected relation is only `Confirmed` when its
//!   residual, recomputed at 64 extra bits, is below `2^(−precision/2)`
//!   and every coefficient is within the bound
//!
//! [`recognize`] wraps the detector for the fixed basis and converts a
//! confirmed relation into an [`ExactValue`], cross-validating the result
//! against the input before returning it.

use astro_float::{BigFloat, Sign};
use num::bigint::ToBigInt;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::bigfloat::{abs, abs_diff, abs_lt, from_bigint, pi, pow2, sqrt_two, RM};
use crate::error::RecognitionError;
use crate::exact::ExactValue;

/// Hard cap on PSLQ iterations.  Detection or exclusion triggers long
/// before this for any workload within the crate's precision range;
/// hitting the cap reports no relation rather than looping.
const MAX_ITER: usize = 20_000;

/// How much to trust a detected relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confidence {
    /// Residual below `2^(−precision/2)` and coefficients within bound.
    Confirmed,
    /// A relation was detected but failed the confirmation test.
    Tentative,
    /// No relation within the bound.
    None,
}

/// Why the iteration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop {
    /// Some `|y_i|` dropped below the detection threshold.
    Found,
    /// The norm bound certified that no relation fits the coefficient
    /// bound (or the detected vector itself exceeded it).
    BoundExceeded,
    /// `H` lost a diagonal entry, so the input was numerically degenerate.
    Degenerate,
    /// [`MAX_ITER`] reached.
    Exhausted,
}

/// Outcome of [`find_relation`].
#[derive(Debug, Clone)]
pub struct RelationResult {
    /// Integer vector `r` with `Σ rᵢ·valuesᵢ ≈ 0`, normalized so the first
    /// nonzero coefficient is positive; empty when none was found.
    pub coefficients: Vec<BigInt>,
    /// `|Σ rᵢ·valuesᵢ|` recomputed at `precision + 64` bits.
    pub residual: Option<BigFloat>,
    pub confidence: Confidence,
    /// PSLQ iterations consumed.
    pub iterations: usize,
    pub stop: Stop,
}

/// Round a finite float to the nearest integer (halves away from zero).
fn nearest_int(x: &BigFloat) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return BigInt::zero();
    };
    // value = 0.mantissa × 2^e with the top mantissa bit set, so e ≤ -1
    // means |x| < 1/2
    if e <= -1 {
        return BigInt::zero();
    }
    let mut m = BigUint::zero();
    for w in words.iter().rev() {
        m = (m << 64) | BigUint::from(*w);
    }
    let shift = i64::from(e) - 64 * words.len() as i64;
    let mag = if shift >= 0 {
        m << shift
    } else {
        let k = (-shift) as u64;
        (m + (BigUint::one() << (k - 1))) >> k
    };
    let mag = mag.to_bigint().expect("magnitude conversion");
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

/// Search for an integer relation among `values` at the given working
/// precision, refusing coefficients larger than `coeff_bound`.
///
/// The inputs should carry `precision` significant bits; the detection
/// threshold `2^(−3·precision/4)` leaves a quarter of the precision as
/// safety margin between true relations and rounding noise.
pub fn find_relation(
    values: &[BigFloat],
    precision: usize,
    coeff_bound: u64,
) -> Result<RelationResult, RecognitionError> {
    if values.len() < 2 {
        return Err(RecognitionError::TooFewValues(values.len()));
    }
    if precision < 128 {
        return Err(RecognitionError::PrecisionTooLow { got: precision, need: 128 });
    }
    let n = values.len();
    let wp = precision;
    let none = |iterations: usize, stop: Stop| RelationResult {
        coefficients: Vec::new(),
        residual: None,
        confidence: Confidence::None,
        iterations,
        stop,
    };

    // γ = 2/√3 + 1/128
    let sqrt3 = BigFloat::from_u8(3, wp).sqrt(wp, RM);
    let gamma = BigFloat::from_u8(2, wp).div(&sqrt3, wp, RM).add(&pow2(-7), wp, RM);

    // normalize the input to a unit vector y
    let mut norm2 = BigFloat::from_u8(0, wp);
    for v in values {
        norm2 = norm2.add(&v.mul(v, wp, RM), wp, RM);
    }
    let t = norm2.sqrt(wp, RM);
    if t.is_zero() {
        return Ok(none(0, Stop::Degenerate));
    }
    let mut y: Vec<BigFloat> = values.iter().map(|v| v.div(&t, wp, RM)).collect();

    // partial norms s_k = sqrt(Σ_{j≥k} y_j²)
    let mut s = vec![BigFloat::from_u8(0, wp); n];
    let mut acc = BigFloat::from_u8(0, wp);
    for k in (0..n).rev() {
        acc = acc.add(&y[k].mul(&y[k], wp, RM), wp, RM);
        s[k] = acc.sqrt(wp, RM);
    }

    // H: n × (n-1), lower trapezoidal
    let zero = || BigFloat::from_u8(0, wp);
    let mut h: Vec<Vec<BigFloat>> = (0..n).map(|_| (0..n - 1).map(|_| zero()).collect()).collect();
    for i in 0..n {
        if i < n - 1 {
            h[i][i] = s[i + 1].div(&s[i], wp, RM);
        }
        for j in 0..i {
            let denom = s[j].mul(&s[j + 1], wp, RM);
            h[i][j] = y[i].mul(&y[j], wp, RM).div(&denom, wp, RM).neg();
        }
    }

    let ident = |_| {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect::<Vec<Vec<BigInt>>>()
    };
    let mut a = ident(());
    let mut b = ident(());

    // size-reduce row i against rows j..0; shared by init and iteration
    let reduce = |i: usize,
                      j_from: usize,
                      y: &mut Vec<BigFloat>,
                      h: &mut Vec<Vec<BigFloat>>,
                      a: &mut Vec<Vec<BigInt>>,
                      b: &mut Vec<Vec<BigInt>>| {
        for j in (0..=j_from).rev() {
            if h[j][j].is_zero() {
                continue;
            }
            let t0 = nearest_int(&h[i][j].div(&h[j][j], wp, RM));
            if t0.is_zero() {
                continue;
            }
            let tf = from_bigint(&t0);
            y[j] = y[j].add(&tf.mul(&y[i], wp, RM), wp, RM);
            let (top, tail) = h.split_at_mut(i);
            for (cell, base) in tail[0].iter_mut().zip(&top[j][..=j]) {
                *cell = cell.sub(&tf.mul(base, wp, RM), wp, RM);
            }
            for k in 0..n {
                let d = &t0 * &a[j][k];
                a[i][k] -= d;
                let d = &t0 * &b[k][i];
                b[k][j] += d;
            }
        }
    };

    for i in 1..n {
        reduce(i, i - 1, &mut y, &mut h, &mut a, &mut b);
    }

    let detect = pow2(-((3 * wp as i64) / 4));
    let bound = BigInt::from(coeff_bound);
    let bound_f = from_bigint(&bound);

    for it in 1..=MAX_ITER {
        // exclusion bound: any remaining relation has norm ≥ 1/max|H_jj|
        let mut hmax = zero();
        for (j, row) in h.iter().enumerate().take(n - 1) {
            let v = abs(&row[j]);
            if abs_lt(&hmax, &v) {
                hmax = v;
            }
        }
        if hmax.is_zero() {
            return Ok(none(it, Stop::Degenerate));
        }
        if abs_lt(&hmax.mul(&bound_f, wp, RM), &BigFloat::from_u8(1, wp)) {
            return Ok(none(it, Stop::BoundExceeded));
        }

        // pick the row maximizing γ^i |H_ii| and swap it with the next
        let mut m = 0;
        let mut best = BigFloat::from_i8(-1, wp);
        let mut gp = BigFloat::from_u8(1, wp);
        for (i, row) in h.iter().enumerate().take(n - 1) {
            gp = gp.mul(&gamma, wp, RM);
            let v = gp.mul(&abs(&row[i]), wp, RM);
            if best.cmp(&v).map(|c| c < 0).unwrap_or(false) {
                best = v;
                m = i;
            }
        }
        y.swap(m, m + 1);
        a.swap(m, m + 1);
        h.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }

        // Givens rotation to restore the trapezoidal corner
        if m < n - 2 {
            let t0 = h[m][m].clone();
            let t1 = h[m][m + 1].clone();
            let r = t0.mul(&t0, wp, RM).add(&t1.mul(&t1, wp, RM), wp, RM).sqrt(wp, RM);
            if !r.is_zero() {
                let c0 = t0.div(&r, wp, RM);
                let c1 = t1.div(&r, wp, RM);
                for row in h.iter_mut().skip(m) {
                    let a0 = row[m].clone();
                    let a1 = row[m + 1].clone();
                    row[m] = c0.mul(&a0, wp, RM).add(&c1.mul(&a1, wp, RM), wp, RM);
                    row[m + 1] = c0.mul(&a1, wp, RM).sub(&c1.mul(&a0, wp, RM), wp, RM);
                }
            }
        }

        for i in (if m > 0 { m + 1 } else { 1 })..n {
            reduce(i, (i - 1).min(m + 1), &mut y, &mut h, &mut a, &mut b);
        }

        // detection: a y entry collapsing to rounding level exposes the
        // corresponding column of B as a relation
        let mut imin = 0;
        for i in 1..n {
            if abs_lt(&abs(&y[i]), &abs(&y[imin])) {
                imin = i;
            }
        }
        if abs_lt(&abs(&y[imin]), &detect) {
            let mut rel: Vec<BigInt> = (0..n).map(|k| b[k][imin].clone()).collect();
            if rel.iter().all(BigInt::is_zero) {
                return Ok(none(it, Stop::Degenerate));
            }
            if rel.iter().any(|r| r.abs() > bound) {
                return Ok(none(it, Stop::BoundExceeded));
            }
            if let Some(first) = rel.iter().find(|r| !r.is_zero()) {
                if first.is_negative() {
                    for r in &mut rel {
                        *r = -(r.clone());
                    }
                }
            }
            // recompute the residual with fresh headroom
            let wp2 = precision + 64;
            let mut resid = BigFloat::from_u8(0, wp2);
            for (r, v) in rel.iter().zip(values) {
                resid = resid.add(&from_bigint(r).mul(v, wp2, RM), wp2, RM);
            }
            let resid = abs(&resid);
            let confidence = if abs_lt(&resid, &pow2(-(precision as i64) / 2)) {
                Confidence::Confirmed
            } else {
                Confidence::Tentative
            };
            return Ok(RelationResult {
                coefficients: rel,
                residual: Some(resid),
                confidence,
                iterations: it,
                stop: Stop::Found,
            });
        }
    }
    Ok(none(MAX_ITER, Stop::Exhausted))
}

/// The recognition basis paired with `x`: `[x, 1, π, π², √2, √2π]`.
///
/// Index `i ≥ 1` corresponds to the monomial `(sqrt2, sqrtpi_pow) =
/// BASIS[i-1]`.
const BASIS: [(bool, i64); 5] = [(false, 0), (false, 2), (false, 4), (true, 0), (true, 2)];

fn basis_values(x: &BigFloat, p: usize) -> Vec<BigFloat> {
    let pi = pi(p);
    let sqrt2 = sqrt_two(p);
    vec![
        x.clone(),
        BigFloat::from_u8(1, p),
        pi.clone(),
        pi.mul(&pi, p, RM),
        sqrt2.clone(),
        sqrt2.mul(&pi, p, RM),
    ]
}

/// Recover the exact form of `x` over `Q`-combinations of
/// `{1, π, π², √2, √2π}`, or `None` when no confirmed relation exists.
///
/// A confirmed relation `r₀x + Σ rᵢbᵢ = 0` becomes the exact value
/// `−Σ (rᵢ/r₀) bᵢ`, which is then re-evaluated at `precision + 64` bits
/// and must agree with `x` to `2^(−precision+16)` before it is returned.
pub fn recognize(x: &BigFloat, precision: usize, coeff_bound: u64) -> Option<ExactValue> {
    let values = basis_values(x, precision);
    let rel = find_relation(&values, precision, coeff_bound).ok()?;
    if rel.confidence != Confidence::Confirmed {
        return None;
    }
    let r0 = &rel.coefficients[0];
    if r0.is_zero() {
        return None;
    }
    let mut exact = ExactValue::zero();
    for (r, (sqrt2, h)) in rel.coefficients[1..].iter().zip(BASIS) {
        if r.is_zero() {
            continue;
        }
        let coeff = BigRational::new(-r.clone(), r0.clone());
        exact = &exact + &ExactValue::monomial(coeff, sqrt2, h);
    }
    // cross-validate against the input with extra headroom
    let pe = precision + 64;
    let back = exact.to_numeric(pe);
    let gap = abs_diff(&back, x, pe);
    if abs_lt(&gap, &pow2(-(precision as i64) + 16)) || gap.is_zero() {
        Some(exact)
    } else {
        None
    }
}
