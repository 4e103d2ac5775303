//! Sequence acceleration for slowly convergent series.
//!
//! Two independent extrapolation methods over the same partial sums:
//!
//! * [`levin_u`] — Levin's u-transform.  Order `k` combines `k + 1` partial
//!   sums with exact integer weights,
//!
//! ```text
//!            Σ_j (-1)^j C(k,j) (1+j)^(k-1) s_j / ω_j
//!     L_k = -----------------------------------------     ω_j = (j+1) a_j
//!            Σ_j (-1)^j C(k,j) (1+j)^(k-1) / ω_j
//! ```
//!
//!   scanning `k` upward and keeping the order with the smallest successive
//!   difference `|L_k - L_{k-1}|`.  The reported bound is a safety multiple
//!   of that difference (the raw difference understates the true error by
//!   roughly one order of magnitude on logarithmically convergent series).
//!
//! * [`wynn_epsilon`] — Wynn's recursive epsilon table.  The even columns
//!   extrapolate the sequence; the best even-column entry is selected the
//!   same way.  Wynn stalls on logarithmic convergence, so its bound keeps a
//!   stagnation term `|value - s_last|`, which stays honest (if loose) in
//!   exactly the cases the table fails to accelerate.
//!
//! Both methods are deterministic: all floating arithmetic is carried out at
//! the precision of the input terms with a fixed rounding mode, and the
//! binomial weights are exact integers.

use astro_float::BigFloat;
use num::BigInt;

use crate::bigfloat::{abs, abs_diff, abs_lt, from_bigint, pow2, RM};
use crate::error::SeriesError;

/// Result of one acceleration run.
#[derive(Debug, Clone)]
pub struct Accelerated {
    /// Extrapolated limit of the series.
    pub value: BigFloat,
    /// Heuristic absolute error bound (see module docs).
    pub error_bound: BigFloat,
    /// Transform order actually used (Levin order `k`, or epsilon-table
    /// column).
    pub order: usize,
}

/// Fewest series terms either transform accepts.
pub const MIN_TERMS: usize = 16;

/// Consecutive non-improving orders tolerated before the scan stops.
const STALL_LIMIT: usize = 12;

/// Orders always scanned before the stall rule may stop the search.
const MIN_SCAN: usize = 16;

/// Safety factor applied to the successive-difference error estimate.
const SAFETY: i64 = 16;

/// Partial sums `s_j` of `terms`, all at precision `wp`.
fn partial_sums(terms: &[BigFloat], wp: usize) -> Vec<BigFloat> {
    let mut out = Vec::with_capacity(terms.len());
    let mut acc = BigFloat::new(wp);
    for t in terms {
        acc = acc.add(t, wp, RM);
        out.push(acc.clone());
    }
    out
}

/// Terms up to (not including) the first zero term.
///
/// A zero term makes the Levin remainder estimate degenerate; a series that
/// hits an exactly-zero term has effectively terminated and everything after
/// it carries no information.
fn nonzero_prefix(terms: &[BigFloat]) -> &[BigFloat] {
    let n = terms.iter().position(|t| t.is_zero()).unwrap_or(terms.len());
    &terms[..n]
}

/// An ulp-scale floor added to every bound so that a lucky zero difference
/// is never reported as exactness.
fn ulp_floor(value: &BigFloat, wp: usize) -> BigFloat {
    let e = value.exponent().unwrap_or(0) as i64;
    pow2(e - wp as i64 + 4)
}

// ---------------------------------------------------------------------------
// Levin u-transform
// ---------------------------------------------------------------------------

/// Accelerates `terms` with the Levin u-transform at precision `wp`.
pub fn levin_u(terms: &[BigFloat], wp: usize) -> Result<Accelerated, SeriesError> {
    let terms = nonzero_prefix(terms);
    if terms.len() < MIN_TERMS {
        return Err(SeriesError::TooFewPartialSums { got: terms.len(), need: MIN_TERMS });
    }
    let s = partial_sums(terms, wp);
    // precomputed 1/ω_j and s_j/ω_j
    let mut inv_w = Vec::with_capacity(terms.len());
    let mut s_over_w = Vec::with_capacity(terms.len());
    for (j, t) in terms.iter().enumerate() {
        let w = t.mul(&BigFloat::from_u64(j as u64 + 1, wp), wp, RM);
        inv_w.push(w.reciprocal(wp, RM));
        s_over_w.push(s[j].div(&w, wp, RM));
    }

    let kmax = terms.len() - 1;
    let mut prev: Option<BigFloat> = None;
    let mut best: Option<(BigFloat, BigFloat, usize)> = None; // (diff, value, k)
    let mut stall = 0usize;

    for k in 2..=kmax {
        let mut num = BigFloat::new(wp);
        let mut den = BigFloat::new(wp);
        let mut binom = BigInt::from(1); // C(k, j), updated multiplicatively
        for j in 0..=k {
            if j > 0 {
                binom = binom * BigInt::from((k - j + 1) as u64) / BigInt::from(j as u64);
            }
            let mut w = &binom * BigInt::from(j as u64 + 1).pow(k as u32 - 1);
            if j % 2 == 1 {
                w = -w;
            }
            let wf = from_bigint(&w);
            num = num.add(&wf.mul(&s_over_w[j], wp, RM), wp, RM);
            den = den.add(&wf.mul(&inv_w[j], wp, RM), wp, RM);
        }
        if den.is_zero() {
            prev = None;
            continue;
        }
        let lk = num.div(&den, wp, RM);
        if lk.is_nan() || lk.is_inf() {
            prev = None;
            continue;
        }
        if let Some(ref p) = prev {
            let d = abs_diff(&lk, p, wp);
            let improved = best.as_ref().is_none_or(|(bd, _, _)| abs_lt(&d, bd));
            if improved {
                best = Some((d, lk.clone(), k));
                stall = 0;
            } else {
                stall += 1;
                if stall >= STALL_LIMIT && k > MIN_SCAN {
                    break;
                }
            }
        }
        prev = Some(lk);
    }

    let (d, value, order) =
        best.ok_or_else(|| SeriesError::Breakdown("levin transform produced no estimates".into()))?;
    let bound = d
        .mul(&BigFloat::from_i64(SAFETY, wp), wp, RM)
        .add(&ulp_floor(&value, wp), wp, RM);
    Ok(Accelerated { value, error_bound: bound, order })
}

// ---------------------------------------------------------------------------
// Wynn epsilon algorithm
// ---------------------------------------------------------------------------

/// Accelerates `terms` with Wynn's epsilon algorithm at precision `wp`.
pub fn wynn_epsilon(terms: &[BigFloat], wp: usize) -> Result<Accelerated, SeriesError> {
    let terms = nonzero_prefix(terms);
    if terms.len() < MIN_TERMS {
        return Err(SeriesError::TooFewPartialSums { got: terms.len(), need: MIN_TERMS });
    }
    let s = partial_sums(terms, wp);
    let last = s.last().expect("nonempty partial sums").clone();

    // ε-table columns; prev_odd holds ε_{k-1}, even/odd alternate.
    let mut col_two_back: Vec<BigFloat> = vec![BigFloat::new(wp); s.len()]; // ε_{-1} = 0
    let mut col_prev: Vec<BigFloat> = s; // ε_0
    let mut best: Option<(BigFloat, BigFloat, usize)> = None; // (diff, value, column)
    let mut prev_even_last: Option<BigFloat> = None;

    for k in 1.. {
        if col_prev.len() < 2 {
            break;
        }
        let mut col = Vec::with_capacity(col_prev.len() - 1);
        for n in 0..col_prev.len() - 1 {
            let diff = col_prev[n + 1].sub(&col_prev[n], wp, RM);
            if diff.is_zero() {
                // exact agreement: the sequence has converged at this entry
                break;
            }
            let e = col_two_back[n + 1].add(&diff.reciprocal(wp, RM), wp, RM);
            if e.is_nan() || e.is_inf() {
                break;
            }
            col.push(e);
        }
        if col.is_empty() {
            break;
        }
        if k % 2 == 0 {
            let v = col.last().expect("nonempty even column").clone();
            if let Some(ref p) = prev_even_last {
                let d = abs_diff(&v, p, wp);
                if best.as_ref().is_none_or(|(bd, _, _)| abs_lt(&d, bd)) {
                    best = Some((d, v.clone(), k));
                }
            }
            prev_even_last = Some(v);
        }
        col_two_back = std::mem::replace(&mut col_prev, col);
    }

    // A zero difference inside the table means exact convergence at that
    // entry; prefer the deepest even column reached, falling back to the
    // plain partial sums.
    let (d, value, order) = match (best, prev_even_last) {
        (Some(b), _) => b,
        (None, Some(v)) => (BigFloat::new(wp), v, 2),
        (None, None) => (BigFloat::new(wp), last.clone(), 0),
    };
    let bound = d
        .add(&abs(&value.sub(&last, wp, RM)), wp, RM)
        .add(&ulp_floor(&value, wp), wp, RM);
    Ok(Accelerated { value, error_bound: bound, order })
}

// ---------------------------------------------------------------------------
