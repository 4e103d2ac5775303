//! Generalized hypergeometric series: specification, convergence
//! classification, and evaluation.
//!
//! A series `pFq(α₁..α_p; β₁..β_q; z)` is summed from the term recurrence
//!
//! ```text
//!     t_0 = 1,      t_{k+1} = t_k · Π(α_i + k) / Π(β_j + k) · z / (k + 1)
//! ```
//!
//! All parameters and `z` are exact rationals, so terms are generated
//! exactly and floating point enters only at the final conversion.  The
//! evaluation strategy follows the convergence class:
//!
//! * terminating — the exact rational sum, rounded once
//! * geometric — exact partial sums with a geometric tail bound
//! * unity-convergent — sequence acceleration ([`crate::accel`])
//! * divergent — refused

use astro_float::BigFloat;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::accel::{levin_u, wynn_epsilon, MIN_TERMS};
use crate::bigfloat::{from_rational, pow2, RM};
use crate::error::SeriesError;

/// A `pFq` series with exact rational parameters and argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    /// Upper (numerator) parameters `α_i`.
    pub upper: Vec<BigRational>,
    /// Lower (denominator) parameters `β_j`.
    pub lower: Vec<BigRational>,
    /// Argument `z`.
    pub z: BigRational,
}

impl Serialize for SeriesSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let as_strings = |v: &[BigRational]| v.iter().map(BigRational::to_string).collect::<Vec<_>>();
        let mut s = serializer.serialize_struct("SeriesSpec", 3)?;
        s.serialize_field("upper", &as_strings(&self.upper))?;
        s.serialize_field("lower", &as_strings(&self.lower))?;
        s.serialize_field("z", &self.z.to_string())?;
        s.end()
    }
}

/// How a validated series converges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvergenceClass {
    /// A non-positive integer upper parameter cuts the sum off after
    /// `length` nonzero-eligible terms (`length = N + 1` for termination
    /// index `N`); `z = 0` terminates after a single term.
    Terminating { length: usize },
    /// Term ratios approach a limit of modulus `< 1` (always for `p ≤ q`;
    /// for `p = q + 1` when `|z| < 1`): direct summation converges
    /// geometrically or faster.
    Geometric,
    /// `p = q + 1` at `z = 1` with parameter excess `ω = Σβ - Σα > 0`:
    /// convergent, but only algebraically — summation needs acceleration.
    UnityConvergent {
        /// The parameter excess `ω`.
        omega: BigRational,
    },
    /// Everything else.
    Divergent,
}

/// Which summation path produced a numeric value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Exact rational summation of a terminating series.
    Exact,
    /// Direct summation with a tail bound.
    Direct,
    /// Levin u-transform acceleration.
    LevinU,
    /// Wynn epsilon-table acceleration.
    WynnEpsilon,
}

/// Acceleration algorithm selection for unity-convergent series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AccelMethod {
    #[default]
    LevinU,
    WynnEpsilon,
}

/// Evaluation controls.
#[derive(Debug, Clone)]
pub struct EvalOptions {
    /// Target precision in bits.
    pub precision: usize,
    /// Hard cap on the number of series terms consumed.
    pub max_terms: usize,
    /// Accelerator used for unity-convergent series.
    pub accel: AccelMethod,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { precision: 384, max_terms: 5000, accel: AccelMethod::default() }
    }
}

/// A numeric series value with an attached error bound.
#[derive(Debug, Clone)]
pub struct NumericValue {
    /// Best estimate of the sum, at the requested precision.
    pub estimate: BigFloat,
    /// Absolute error bound on `estimate` (zero only for exactly
    /// representable results).
    pub error_bound: BigFloat,
    /// Series terms consumed.
    pub terms_used: usize,
    /// Summation path taken.
    pub method: Method,
}

impl SeriesSpec {
    pub fn new(upper: Vec<BigRational>, lower: Vec<BigRational>, z: BigRational) -> Self {
        SeriesSpec { upper, lower, z }
    }

    /// Termination index `N` when some upper parameter is a non-positive
    /// integer: the smallest `-α` over those parameters.
    fn termination_index(&self) -> Option<BigInt> {
        self.upper
            .iter()
            .filter(|a| a.is_integer() && !a.is_positive())
            .map(|a| -a.to_integer())
            .min()
    }

    /// Checks that every term of the sum is well defined.
    ///
    /// A non-positive integer lower parameter `β = -M` zeroes the term
    /// denominators from index `M + 1` on, which is only acceptable if the
    /// series terminates at `N ≤ M`.
    pub fn validate(&self) -> Result<(), SeriesError> {
        let n = self.termination_index();
        for b in &self.lower {
            if b.is_integer() && !b.is_positive() {
                let m = -b.to_integer();
                let ok = matches!(&n, Some(n) if *n <= m);
                if !ok {
                    return Err(SeriesError::InvalidSeries(format!(
                        "lower parameter {} hits a pole before the series terminates",
                        b
                    )));
                }
            }
        }
        Ok(())
    }

    /// Convergence class of a validated series.
    pub fn classify(&self) -> ConvergenceClass {
        if let Some(n) = self.termination_index() {
            let length = usize::try_from(&n).expect("termination index fits usize") + 1;
            return ConvergenceClass::Terminating { length };
        }
        if self.z.is_zero() {
            return ConvergenceClass::Terminating { length: 1 };
        }
        let (p, q) = (self.upper.len(), self.lower.len());
        if p <= q || (p == q + 1 && self.z.abs() < BigRational::one()) {
            return ConvergenceClass::Geometric;
        }
        if p == q + 1 && self.z.is_one() {
            let omega: BigRational =
                self.lower.iter().sum::<BigRational>() - self.upper.iter().sum::<BigRational>();
            if omega.is_positive() {
                return ConvergenceClass::UnityConvergent { omega };
            }
        }
        ConvergenceClass::Divergent
    }

    /// The same series with pairwise-equal upper/lower parameters removed.
    ///
    /// Cancelling a matching pair leaves every term of the sum unchanged, so
    /// the value is identical; only the convergence classification can
    /// sharpen (fewer parameters may move `p = q + 1` down to `p ≤ q`).
    pub fn cancelled(&self) -> SeriesSpec {
        let mut lower = self.lower.clone();
        let mut upper = Vec::with_capacity(self.upper.len());
        for a in &self.upper {
            if let Some(i) = lower.iter().position(|b| b == a) {
                lower.remove(i);
            } else {
                upper.push(a.clone());
            }
        }
        SeriesSpec { upper, lower, z: self.z.clone() }
    }

    /// Exact term ratio `t_{k+1} / t_k`.
    fn ratio(&self, k: u64) -> BigRational {
        let kk = BigRational::from_integer(k.into());
        let mut r = &self.z / BigRational::from_integer((k + 1).into());
        for a in &self.upper {
            r *= a + &kk;
        }
        for b in &self.lower {
            r /= b + &kk;
        }
        r
    }

    /// The first `n` terms, exactly.
    ///
    /// Stops early at an exactly-zero term (the series has terminated), and
    /// never evaluates the ratio past the last requested term — a lower
    /// parameter may pole right at the termination boundary.
    pub fn exact_terms(&self, n: usize) -> Vec<BigRational> {
        let mut out = Vec::with_capacity(n);
        let mut t = BigRational::one();
        for k in 0..n as u64 {
            out.push(t.clone());
            if k + 1 == n as u64 || t.is_zero() {
                break;
            }
            t *= self.ratio(k);
        }
        out
    }

    /// Evaluates the series to `opts.precision` bits.
    pub fn evaluate(&self, opts: &EvalOptions) -> Result<NumericValue, SeriesError> {
        self.validate()?;
        match self.classify() {
            ConvergenceClass::Terminating { length } => self.eval_terminating(length, opts),
            ConvergenceClass::Geometric => self.eval_geometric(opts),
            ConvergenceClass::UnityConvergent { .. } => self.eval_accelerated(opts),
            ConvergenceClass::Divergent => Err(SeriesError::Divergent(format!(
                "{}F{} at z = {} does not converge",
                self.upper.len(),
                self.lower.len(),
                self.z
            ))),
        }
    }

    fn eval_terminating(&self, length: usize, opts: &EvalOptions) -> Result<NumericValue, SeriesError> {
        if length > opts.max_terms {
            return Err(SeriesError::BudgetExceeded(format!(
                "terminating series needs {} terms, max_terms is {}",
                length, opts.max_terms
            )));
        }
        let sum: BigRational = self.exact_terms(length).iter().sum();
        let estimate = from_rational(&sum, opts.precision);
        // the only rounding is the final one; half an ulp unless exact
        let error_bound = if estimate.inexact() {
            pow2(estimate.exponent().unwrap_or(0) as i64 - opts.precision as i64 - 1)
        } else {
            BigFloat::new(64)
        };
        Ok(NumericValue { estimate, error_bound, terms_used: length, method: Method::Exact })
    }

    fn eval_geometric(&self, opts: &EvalOptions) -> Result<NumericValue, SeriesError> {
        let p = opts.precision;
        let wp = p + 96;
        // Eventual term-ratio modulus: |z| for p = q + 1, otherwise 0.  The
        // stop rule waits for ratios to sit below the midpoint rbar between
        // that limit and 1, rounded up to a dyadic rational so the tail
        // factor never understates; rbar caps at 1023/1024 — arguments so
        // close to 1 simply exhaust the budget instead.
        let rbar: BigRational = if self.upper.len() == self.lower.len() + 1 {
            let z = crate::bigfloat::to_f64(&from_rational(&self.z.abs(), 64));
            let q = ((1.0 + z) / 2.0 * 1024.0).ceil().min(1023.0) as i64;
            BigRational::new(q.into(), 1024.into())
        } else {
            BigRational::new(1.into(), 2.into())
        };

        let mut sum = BigRational::zero();
        let mut t = BigRational::one();
        let mut calm = 0usize; // consecutive sub-rbar ratios observed
        let mut k = 0u64;
        loop {
            sum += &t;
            k += 1;
            if k as usize >= opts.max_terms {
                return Err(SeriesError::BudgetExceeded(format!(
                    "direct summation did not settle within {} terms",
                    opts.max_terms
                )));
            }
            let r = self.ratio(k - 1);
            t *= &r;
            calm = if r.abs() <= rbar { calm + 1 } else { 0 };
            if calm >= 3 {
                // |t| below the noise floor of the accumulated sum?
                let tf = from_rational(&t, 64);
                let sf = from_rational(&sum, 64);
                let t_exp = if t.is_zero() { i64::MIN / 2 } else { tf.exponent().unwrap_or(0) as i64 };
                let s_exp = sf.exponent().unwrap_or(1) as i64;
                if t_exp < s_exp - wp as i64 {
                    break;
                }
            }
        }

        // tail: |t| (rbar + rbar^2 + ...) = |t| rbar / (1 - rbar)
        let tail_factor = from_rational(&rbar, 64);
        let one = BigFloat::from_i8(1, 64);
        let tail = crate::bigfloat::abs(&from_rational(&t, 64))
            .mul(&tail_factor, 64, RM)
            .div(&one.sub(&tail_factor, 64, RM), 64, RM);

        let estimate = from_rational(&sum, p);
        let error_bound = tail.add(
            &pow2(estimate.exponent().unwrap_or(0) as i64 - p as i64),
            64,
            RM,
        );
        Ok(NumericValue { estimate, error_bound, terms_used: k as usize, method: Method::Direct })
    }

    fn eval_accelerated(&self, opts: &EvalOptions) -> Result<NumericValue, SeriesError> {
        let p = opts.precision;
        // calibrated headroom: the u-transform at order k cancels ~1.44 k
        // bits, and usable orders grow with the term budget below
        let wp = p + 160;
        let n = (wp / 4 + 48).min(opts.max_terms);
        if n < MIN_TERMS {
            return Err(SeriesError::BudgetExceeded(format!(
                "acceleration needs at least {} terms, max_terms is {}",
                MIN_TERMS, opts.max_terms
            )));
        }
        let terms: Vec<BigFloat> =
            self.exact_terms(n).iter().map(|t| from_rational(t, wp)).collect();
        let (acc, method) = match opts.accel {
            AccelMethod::LevinU => (levin_u(&terms, wp)?, Method::LevinU),
            AccelMethod::WynnEpsilon => (wynn_epsilon(&terms, wp)?, Method::WynnEpsilon),
        };
        let mut estimate = acc.value;
        estimate.set_precision(p, RM).expect("rounding to target precision");
        let error_bound = acc.error_bound.add(
            &pow2(estimate.exponent().unwrap_or(0) as i64 - p as i64),
            64,
            RM,
        );
        Ok(NumericValue { estimate, error_bound, terms_used: n, method })
    }
}

// ---------------------------------------------------------------------------
