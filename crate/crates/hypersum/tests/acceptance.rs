//! Acceptance suite: one test per shipping criterion, each ending in a
//! single `PASS criterion N` line (run with `--nocapture` to see them all).
//! Every numeric gate is asserted, so a red criterion fails the build, not
//! just the log.

use std::str::FromStr;
use std::time::Instant;

use num::{BigRational, One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;

use hypersum::bigfloat::{
    abs_diff, bits_for_digits, from_rational, parse_decimal, pow2, rel_err, sqrt_pi, to_decimal,
    to_f64, with_consts, RM,
};
use hypersum::catalog::{entries, verify_all, VerifyOptions};
use hypersum::closed;
use hypersum::family::generate;
use hypersum::gamma_exact::{exact_gamma, factorial, pochhammer};
use hypersum::gamma_num::num_gamma;
use hypersum::recognize::recognize;
use hypersum::series::{EvalOptions, Method, SeriesSpec};
use hypersum::HalfInteger;

fn rat(s: &str) -> BigRational {
    BigRational::from_str(s).unwrap()
}

fn half(twice: i64) -> HalfInteger {
    HalfInteger::from_twice(twice)
}

/// Criterion 1: every catalog entry's generated right-hand side equals the
/// frozen value bit-exactly, regenerated from scratch in under a second.
#[test]
fn acceptance_1_golden_catalog_exactness() {
    let t0 = Instant::now();
    let mut checked = 0usize;
    for e in entries() {
        // re-run the generator from the entry's coordinates rather than
        // trusting the cached identity
        let (family, rest) = e.id.split_once('/').unwrap();
        // `d` comes last and may itself contain a slash ("d=7/2")
        let (params, d) = match rest.split_once("d=") {
            Some((pre, dv)) => (pre.trim_end_matches('/'), Some(rat(dv))),
            None => (rest, None),
        };
        let (mut m, mut n, mut s) = (0u32, None, None);
        for part in params.split('/').filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').unwrap();
            match k {
                "m" => m = v.parse().unwrap(),
                "n" => n = Some(v.parse().unwrap()),
                "s" => s = Some(v.parse().unwrap()),
                other => panic!("unexpected id component {other}"),
            }
        }
        let identity = generate(family, m, n, s, d.as_ref()).unwrap();
        assert_eq!(identity.rhs, e.expected, "generated value diverges for {}", e.id);
        assert_eq!(identity.rhs, e.identity.rhs, "cached identity diverges for {}", e.id);
        checked += 1;
    }
    let dt = t0.elapsed();
    assert_eq!(checked, 40);
    // spot values quoted with the criterion
    assert_eq!(entries()[4].expected.render(), "315*pi/65536");
    assert_eq!(
        entries().iter().find(|e| e.id == "2.4/m=3/d=9/2").unwrap().expected.render(),
        "35*sqrt2*pi/512"
    );
    assert_eq!(
        entries().iter().find(|e| e.id == "2.5/m=2/d=7").unwrap().expected.render(),
        "225*pi^2/256 - 5/7"
    );
    assert!(dt.as_secs_f64() < 1.0, "catalog regeneration took {dt:?}");
    println!("PASS criterion 1: 40/40 exact catalog values regenerate bit-exactly in {dt:?}");
}

/// Criterion 2: the full numeric verification run passes every entry at
/// 384 bits / 1e-15 within a minute, and the z = 1/2 entries converge
/// geometrically to 1e-30 inside 300 terms.
#[test]
fn acceptance_2_numeric_verification() {
    let t0 = Instant::now();
    let opts = VerifyOptions::default(); // 384 bits, 1e-15, 5000 terms, Levin u
    let run = verify_all(&opts, false);
    let dt = t0.elapsed();
    assert_eq!(run.summary.total, 40);
    assert_eq!(
        run.summary.passed,
        40,
        "failures: {:?}",
        run.reports.iter().filter(|r| !r.pass).map(|r| &r.id).collect::<Vec<_>>()
    );
    assert!(run.reports.iter().all(|r| r.terms_used <= 5000));
    assert!(dt.as_secs_f64() < 60.0, "verify_all took {dt:?}");

    // geometric sub-criterion: z = 1/2 entries at a precision whose budget
    // fits in 300 terms still land far below 1e-30 relative error
    let geo_opts = EvalOptions { precision: 128, max_terms: 300, ..EvalOptions::default() };
    let tol = pow2(-99); // 1e-30 < 2^-99
    let mut geometric = 0usize;
    for e in entries() {
        if e.identity.lhs.z != rat("1/2") {
            continue;
        }
        let v = e.identity.lhs.evaluate(&geo_opts).unwrap_or_else(|err| {
            panic!("{}: geometric evaluation failed: {err}", e.id);
        });
        assert_eq!(v.method, Method::Direct, "{}", e.id);
        assert!(v.terms_used <= 300, "{} used {} terms", e.id, v.terms_used);
        let err = rel_err(&v.estimate, &e.expected.to_numeric(128), 192);
        assert!(
            hypersum::bigfloat::abs_lt(&err, &tol) || err.is_zero(),
            "{}: rel err {:e} above 1e-30",
            e.id,
            to_f64(&err)
        );
        geometric += 1;
    }
    assert_eq!(geometric, 11, "expected the 2.3 and 2.4 entries to carry z = 1/2");
    println!(
        "PASS criterion 2: verify_all 40/40 at 384 bits / 1e-15 in {dt:?}; \
         11 geometric entries reach 1e-30 within 300 terms"
    );
}

/// Criterion 3: 200 random half-integer tuples per theorem — the extended
/// closed form at its contraction point equals the plain form exactly.
#[test]
fn acceptance_3_reduction_identities() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x5eed_cafe);
    const WANT: usize = 200;
    const ATTEMPT_CAP: usize = 200_000;

    let mut count = [0usize; 4];
    let mut attempts = 0usize;
    while count.iter().any(|&c| c < WANT) && attempts < ATTEMPT_CAP {
        attempts += 1;
        let a = half(rng.random_range(-9..=19));
        let b = half(rng.random_range(-9..=19));
        let c = half(rng.random_range(1..=25));

        // gauss_ext at d = c collapses onto gauss
        if count[0] < WANT {
            let d = c.to_rational();
            if let (Ok(ext), Ok(base)) =
                (closed::gauss_ext(&a, &b, &c, &d), closed::gauss(&a, &b, &c))
            {
                assert_eq!(ext, base, "gauss reduction at a={a} b={b} c={c}");
                count[0] += 1;
            }
        }
        // gauss_second_ext at d = (a+b+1)/2 collapses onto gauss_second
        if count[1] < WANT {
            let d = (&(&a + &b) + 1).to_rational() / rat("2");
            if !d.is_zero() {
                if let (Ok(ext), Ok(base)) =
                    (closed::gauss_second_ext(&a, &b, &d), closed::gauss_second(&a, &b))
                {
                    assert_eq!(ext, base, "gauss_second reduction at a={a} b={b}");
                    count[1] += 1;
                }
            }
        }
        // bailey_ext at d = c collapses onto bailey
        if count[2] < WANT {
            let d = c.to_rational();
            if let (Ok(ext), Ok(base)) = (closed::bailey_ext(&a, &c, &d), closed::bailey(&a, &c)) {
                assert_eq!(ext, base, "bailey reduction at a={a} c={c}");
                count[2] += 1;
            }
        }
        // watson_ext at d = 2c collapses onto watson
        if count[3] < WANT {
            let d = c.to_rational() * rat("2");
            if let (Ok(ext), Ok(base)) =
                (closed::watson_ext(&a, &b, &c, &d), closed::watson(&a, &b, &c))
            {
                assert_eq!(ext, base, "watson reduction at a={a} b={b} c={c}");
                count[3] += 1;
            }
        }
    }
    assert_eq!(count, [WANT; 4], "tuple quota not reached in {attempts} attempts");
    println!(
        "PASS criterion 3: 200 random tuples per theorem reduce exactly at \
         d=c, d=(a+b+1)/2, d=c, d=2c ({attempts} samples drawn)"
    );
}

/// Criterion 4: the numeric gamma agrees with the exact gamma to 2^-248 at
/// 256 bits on every non-pole half-integer in [-19/2, 41/2].
#[test]
fn acceptance_4_gamma_cross_check() {
    let p = 256;
    let tol = pow2(-248);
    let mut checked = 0usize;
    for twice in -19..=41i64 {
        let x = half(twice);
        if x.is_non_positive_integer() {
            continue; // pole
        }
        let exact = exact_gamma(&x).unwrap().to_numeric(p);
        let numeric = num_gamma(&from_rational(&x.to_rational(), p), p).unwrap();
        let err = rel_err(&numeric, &exact, p);
        assert!(
            hypersum::bigfloat::abs_lt(&err, &tol) || err.is_zero(),
            "gamma({x}): rel err {:e}",
            to_f64(&err)
        );
        checked += 1;
    }
    assert_eq!(checked, 61 - 10); // 61 half-integers, 10 poles
    println!("PASS criterion 4: num_gamma matches exact_gamma to 2^-248 on 51 half-integers");
}

/// Criterion 5: terminating series sum exactly; the fixed example equals
/// its closed form and 50 random instances match brute-force sums.
#[test]
fn acceptance_5_terminating_series_oracle() {
    let opts = EvalOptions::default();
    let spec = SeriesSpec::new(vec![rat("-3"), rat("2")], vec![rat("4")], BigRational::one());
    let v = spec.evaluate(&opts).unwrap();
    assert_eq!(v.method, Method::Exact);
    assert_eq!(v.estimate, from_rational(&rat("1/5"), opts.precision));
    let gauss = closed::gauss(&half(-6), &half(4), &half(8)).unwrap();
    assert_eq!(gauss.as_rational(), Some(rat("1/5")), "closed form of the fixed example");

    // brute force: sum Pochhammer products directly, no recurrence
    let brute = |spec: &SeriesSpec, len: u64| -> BigRational {
        let mut sum = BigRational::zero();
        for k in 0..len {
            let mut t = spec.z.clone();
            t = num::pow::pow(t, k as usize) / factorial(k);
            for u in &spec.upper {
                t *= pochhammer(u, k);
            }
            for l in &spec.lower {
                t /= pochhammer(l, k);
            }
            sum += t;
        }
        sum
    };

    let mut rng = ChaCha20Rng::seed_from_u64(0x7e57);
    let zs = ["1", "1/2", "-1", "2", "-3/2", "1/3"];
    let mut done = 0usize;
    while done < 50 {
        let n = rng.random_range(0..=10i64);
        let mut upper = vec![BigRational::from_integer((-n).into())];
        for _ in 0..rng.random_range(0..=2) {
            upper.push(rat(&format!("{}/2", rng.random_range(-7..=15i64))));
        }
        let lower: Vec<_> = (0..rng.random_range(1..=2))
            .map(|_| rat(&format!("{}/2", rng.random_range(1..=15i64))))
            .collect();
        let z = rat(zs[rng.random_range(0..zs.len())]);
        let spec = SeriesSpec::new(upper, lower, z);
        if spec.validate().is_err() {
            continue; // an earlier-terminating upper or a lower pole; resample
        }
        let v = spec.evaluate(&opts).unwrap();
        assert_eq!(v.method, Method::Exact);
        let want = brute(&spec, n as u64 + 1);
        assert_eq!(
            v.estimate,
            from_rational(&want, opts.precision),
            "brute-force mismatch on {spec:?}"
        );
        done += 1;
    }
    println!("PASS criterion 5: fixed terminating example = 1/5 = gauss(-3,2,4); 50 random instances match brute force");
}

/// Criterion 6: the Bailey closed form carries the corrected prefactor;
/// the plausible-but-wrong variant is visibly incompatible with the series.
#[test]
fn acceptance_6_bailey_discrepancy_regression() {
    let p = 256;
    let a = half(1); // 1/2
    let c = half(3); // 3/2
    let value = closed::bailey(&a, &c).unwrap();
    assert_eq!(value.render(), "sqrt2*pi/4");

    let series = closed::bailey_series(&a, &c);
    let v = series.evaluate(&EvalOptions { precision: p, ..EvalOptions::default() }).unwrap();
    let err = rel_err(&v.estimate, &value.to_numeric(p), p);
    assert!(to_f64(&err).abs() <= 1e-15, "series vs corrected form: {:e}", to_f64(&err));

    // the incorrect variant replaces Γ(c/2) by Γ(1/2) in the prefactor,
    // turning the value into √π·Γ(5/4) ≈ 1.6065
    let wrong = sqrt_pi(p).mul(&num_gamma(&from_rational(&rat("5/4"), p), p).unwrap(), p, RM);
    assert!((to_f64(&wrong) - 1.6065).abs() < 5e-4, "variant value drifted: {}", to_f64(&wrong));
    let gap = to_f64(&abs_diff(&wrong, &v.estimate, p));
    assert!(gap > 0.4, "variant should sit far from the series, gap = {gap}");
    println!(
        "PASS criterion 6: bailey(1/2,3/2) = sqrt2*pi/4 matches its series to 1e-15; \
         the miscopied prefactor lands {gap:.3} away"
    );
}

/// Criterion 7: round-trip recognition — 200-digit decimals of the catalog
/// constants come back as their exact forms; ln 2 is rejected.
#[test]
fn acceptance_7_recognition_round_trip() {
    let render_bits = bits_for_digits(200);
    let p_rec = 640; // matches the information content of 200 digits, with headroom
    let mut hits = 0usize;
    let mut misses = Vec::new();
    for e in entries() {
        let decimal = to_decimal(&e.expected.to_numeric(render_bits), 200);
        let x = parse_decimal(&decimal, render_bits).unwrap();
        match recognize(&x, p_rec, 1 << 20) {
            Some(got) if got == e.expected => hits += 1,
            other => misses.push(format!("{}: {:?}", e.id, other.map(|v| v.render()))),
        }
    }
    assert!(hits >= 38, "only {hits}/40 recognized; misses: {misses:?}");

    let ln2 = with_consts(|cc| cc.ln_2(render_bits, RM));
    let decimal = to_decimal(&ln2, 200);
    let x = parse_decimal(&decimal, render_bits).unwrap();
    assert_eq!(recognize(&x, p_rec, 1 << 20), None, "ln 2 must not be recognized");
    println!("PASS criterion 7: {hits}/40 constants recognized from 200-digit decimals; ln 2 rejected");
}

/// Criterion 8: parallel and sequential verification runs are
/// byte-identical, five times over.
#[test]
fn acceptance_8_determinism() {
    let opts = VerifyOptions { precision: 256, ..VerifyOptions::default() };
    let reference = serde_json::to_string(&verify_all(&opts, false)).unwrap();
    for run in 0..5 {
        let seq = serde_json::to_string(&verify_all(&opts, false)).unwrap();
        let par = serde_json::to_string(&verify_all(&opts, true)).unwrap();
        assert_eq!(seq, par, "parallel diverged from sequential on run {run}");
        assert_eq!(seq, reference, "sequential output unstable on run {run}");
    }
    println!("PASS criterion 8: 5x parallel == sequential, byte-identical verification reports");
}
