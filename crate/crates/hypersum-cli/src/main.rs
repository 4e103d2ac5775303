//! `hypersum` — evaluate hypergeometric series, print closed forms,
//! generate identities, verify the built-in catalog, and recognize
//! constants.
//!
//! Exit codes: 0 success (and all verifications passed), 1 verification
//! failure, 2 usage error, 3 domain error (pole, divergent series,
//! out-of-range parameter). Errors are single lines on stderr of the form
//! `error: <kind>: <detail>`.

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use hypersum::bigfloat::{
    bits_for_digits, digits_for_bits, parse_decimal, to_decimal, to_decimal_sci,
};
use hypersum::catalog::{self, CatalogReport, Summary, VerifyOptions};
use hypersum::closed;
use hypersum::family::generate;
use hypersum::recognize::recognize;
use hypersum::series::{AccelMethod, EvalOptions, SeriesSpec};
use hypersum::{ExactValue, Family, HalfInteger};

#[derive(Parser)]
#[command(name = "hypersum", version, about = "Exact and high-precision hypergeometric summation")]
struct Cli {
    /// Working precision in bits
    #[arg(long, global = true, default_value_t = 384, env = "HYPERSUM_PRECISION")]
    precision: usize,

    /// Maximum number of series terms
    #[arg(long, global = true, default_value_t = 5000)]
    max_terms: usize,

    /// Relative-error tolerance for verification
    #[arg(long, global = true, default_value_t = 1e-15)]
    tolerance: f64,

    /// Convergence acceleration for slowly convergent series
    #[arg(long, global = true, value_enum, default_value_t = AccelArg::Levin)]
    accel: AccelArg,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AccelArg {
    Levin,
    Wynn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum TheoremArg {
    Gauss,
    GaussExt,
    GaussSecond,
    GaussSecondExt,
    Bailey,
    BaileyExt,
    Watson,
    WatsonExt,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate pFq(num; den; z) numerically
    Eval {
        /// Upper parameters, comma-separated rationals
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
        num: Vec<BigRational>,
        /// Lower parameters, comma-separated rationals
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
        den: Vec<BigRational>,
        /// Argument z
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        z: BigRational,
    },
    /// Print the exact closed form of a summation theorem
    Closed {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, value_parser = parse_half, allow_hyphen_values = true)]
        a: Option<HalfInteger>,
        #[arg(long, value_parser = parse_half, allow_hyphen_values = true)]
        b: Option<HalfInteger>,
        #[arg(long, value_parser = parse_half, allow_hyphen_values = true)]
        c: Option<HalfInteger>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        d: Option<BigRational>,
    },
    /// Generate one member of an identity family
    Identity {
        /// Family tag: T2.1 .. T2.5
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        d: Option<BigRational>,
    },
    /// Verify catalog entries numerically against their exact values
    Verify {
        /// Verify the whole catalog (default when --id is absent)
        #[arg(long)]
        all: bool,
        /// Verify a single entry by id, e.g. 2.4/m=1/d=2
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Fan entries out across threads
        #[arg(long)]
        parallel: bool,
    },
    /// List the built-in catalog
    Catalog {
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        format: OutputArg,
    },
    /// Recognize a decimal constant as an exact lattice value
    Recognize {
        /// Decimal literal, at least 50 significant digits
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Bound on relation coefficients
        #[arg(long, default_value_t = 1 << 20)]
        bound: u64,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("invalid rational '{s}': {e}"))
}

fn parse_half(s: &str) -> Result<HalfInteger, String> {
    HalfInteger::from_str(s.trim()).map_err(|e| format!("invalid half-integer '{s}': {e}"))
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Domain(m) => write!(f, "domain: {m}"),
        }
    }
}

/// Writes one line to stdout, exiting quietly when the consumer has closed
/// the pipe (e.g. `hypersum catalog | head`).
fn out(line: impl fmt::Display) {
    let mut stdout = io::stdout().lock();
    if writeln!(stdout, "{line}").is_err() {
        std::process::exit(0);
    }
}

/// Like [`out`] but without appending a newline.
fn out_raw(text: &str) {
    let mut stdout = io::stdout().lock();
    if write!(stdout, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let eval_opts = EvalOptions {
        precision: cli.precision,
        max_terms: cli.max_terms,
        accel: match cli.accel {
            AccelArg::Levin => AccelMethod::LevinU,
            AccelArg::Wynn => AccelMethod::WynnEpsilon,
        },
    };
    let json = cli.output == OutputArg::Json;

    match cli.command {
        Command::Eval { num, den, z } => cmd_eval(num, den, z, &eval_opts, json),
        Command::Closed { theorem, a, b, c, d } => cmd_closed(theorem, a, b, c, d, cli.precision, json),
        Command::Identity { family, m, n, s, d } => cmd_identity(&family, m, n, s, d, json),
        Command::Verify { all: _, id, parallel } => {
            let opts = VerifyOptions {
                precision: cli.precision,
                tolerance: cli.tolerance,
                max_terms: cli.max_terms,
                accel: eval_opts.accel,
            };
            cmd_verify(id.as_deref(), parallel, &opts, json)
        }
        Command::Catalog { format } => cmd_catalog(format == OutputArg::Json),
        Command::Recognize { value, bound } => cmd_recognize(&value, bound, json),
    }
}

/// Full-precision decimal rendering: enough digits to round-trip `p` bits.
fn full_decimal(x: &astro_float::BigFloat, p: usize) -> String {
    to_decimal(x, digits_for_bits(p))
}

fn exact_json(v: &ExactValue, p: usize) -> serde_json::Value {
    serde_json::json!({
        "rendered": v.render(),
        "terms": v,
        "numeric": full_decimal(&v.to_numeric(p), p),
    })
}

fn cmd_eval(
    num: Vec<BigRational>,
    den: Vec<BigRational>,
    z: BigRational,
    opts: &EvalOptions,
    json: bool,
) -> Result<ExitCode, CliError> {
    let spec = SeriesSpec::new(num, den, z);
    spec.validate().map_err(|e| CliError::Domain(e.to_string()))?;
    let v = spec.evaluate(opts).map_err(|e| CliError::Domain(e.to_string()))?;
    if json {
        let out_value = serde_json::json!({
            "estimate": full_decimal(&v.estimate, opts.precision),
            "error_bound": to_decimal_sci(&v.error_bound, 6),
            "terms_used": v.terms_used,
            "method": v.method,
        });
        out(&out_value);
    } else {
        out(to_decimal(&v.estimate, 30));
        out(format!(
            "method={} terms={} error_bound={}",
            serde_json::to_value(v.method).unwrap().as_str().unwrap(),
            v.terms_used,
            to_decimal_sci(&v.error_bound, 3),
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_closed(
    theorem: TheoremArg,
    a: Option<HalfInteger>,
    b: Option<HalfInteger>,
    c: Option<HalfInteger>,
    d: Option<BigRational>,
    precision: usize,
    json: bool,
) -> Result<ExitCode, CliError> {
    use TheoremArg::*;

    fn req<T>(v: &Option<T>, name: &str) -> Result<(), CliError> {
        if v.is_none() {
            return Err(CliError::Usage(format!("--{name} is required for this theorem")));
        }
        Ok(())
    }
    fn forbid<T>(v: &Option<T>, name: &str) -> Result<(), CliError> {
        if v.is_some() {
            return Err(CliError::Usage(format!("--{name} does not apply to this theorem")));
        }
        Ok(())
    }
    // (required..., forbidden...) per theorem, then dispatch; unwraps below
    // are covered by the checks
    let res = match theorem {
        Gauss => {
            req(&a, "a").and(req(&b, "b")).and(req(&c, "c")).and(forbid(&d, "d"))?;
            closed::gauss(&a.unwrap(), &b.unwrap(), &c.unwrap())
        }
        GaussExt => {
            req(&a, "a").and(req(&b, "b")).and(req(&c, "c")).and(req(&d, "d"))?;
            closed::gauss_ext(&a.unwrap(), &b.unwrap(), &c.unwrap(), &d.unwrap())
        }
        GaussSecond => {
            req(&a, "a").and(req(&b, "b")).and(forbid(&c, "c")).and(forbid(&d, "d"))?;
            closed::gauss_second(&a.unwrap(), &b.unwrap())
        }
        GaussSecondExt => {
            req(&a, "a").and(req(&b, "b")).and(forbid(&c, "c")).and(req(&d, "d"))?;
            closed::gauss_second_ext(&a.unwrap(), &b.unwrap(), &d.unwrap())
        }
        Bailey => {
            req(&a, "a").and(forbid(&b, "b")).and(req(&c, "c")).and(forbid(&d, "d"))?;
            closed::bailey(&a.unwrap(), &c.unwrap())
        }
        BaileyExt => {
            req(&a, "a").and(forbid(&b, "b")).and(req(&c, "c")).and(req(&d, "d"))?;
            closed::bailey_ext(&a.unwrap(), &c.unwrap(), &d.unwrap())
        }
        Watson => {
            req(&a, "a").and(req(&b, "b")).and(req(&c, "c")).and(forbid(&d, "d"))?;
            closed::watson(&a.unwrap(), &b.unwrap(), &c.unwrap())
        }
        WatsonExt => {
            req(&a, "a").and(req(&b, "b")).and(req(&c, "c")).and(req(&d, "d"))?;
            closed::watson_ext(&a.unwrap(), &b.unwrap(), &c.unwrap(), &d.unwrap())
        }
    };
    let value = res.map_err(|e| CliError::Domain(e.to_string()))?;
    if json {
        out(exact_json(&value, precision));
    } else {
        out(value.render());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_identity(
    family: &str,
    m: u32,
    n: Option<u32>,
    s: Option<u32>,
    d: Option<BigRational>,
    json: bool,
) -> Result<ExitCode, CliError> {
    Family::from_str(family)
        .map_err(|_| CliError::Usage(format!("unknown family '{family}' (expected T2.1 .. T2.5)")))?;
    let identity =
        generate(family, m, n, s, d.as_ref()).map_err(|e| CliError::Domain(e.to_string()))?;
    if json {
        let mut doc = serde_json::to_value(&identity).unwrap();
        doc["rendered"] = serde_json::Value::String(identity.rhs.render());
        out(doc);
    } else {
        out(identity.rhs.render());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    id: Option<&str>,
    parallel: bool,
    opts: &VerifyOptions,
    json: bool,
) -> Result<ExitCode, CliError> {
    let report: CatalogReport = match id {
        Some(id) => {
            let entry = catalog::entry(id)
                .ok_or_else(|| CliError::Usage(format!("unknown catalog id '{id}'")))?;
            let r = catalog::verify(entry, opts);
            let passed = usize::from(r.pass);
            CatalogReport {
                summary: Summary {
                    total: 1,
                    passed,
                    failed: 1 - passed,
                    precision_bits: opts.precision,
                    tolerance: opts.tolerance,
                },
                reports: vec![r],
            }
        }
        None => catalog::verify_all(opts, parallel),
    };
    if json {
        out(serde_json::to_string(&report).unwrap());
    } else {
        out_raw(&catalog::render_text(&report));
    }
    Ok(if report.summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_catalog(json: bool) -> Result<ExitCode, CliError> {
    let entries = catalog::entries();
    if json {
        out(serde_json::to_string(entries).unwrap());
    } else {
        let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in entries {
            let mut notes = Vec::new();
            if e.flags.suspected_typo {
                notes.push("suspected-typo");
            }
            if e.flags.reduces_to_2f1 {
                notes.push("reduces-to-2f1");
            }
            let notes =
                if notes.is_empty() { String::new() } else { format!("  [{}]", notes.join(",")) };
            out(format_args!("{:width$}  {}{notes}", e.id, e.expected.render()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_recognize(value: &str, bound: u64, json: bool) -> Result<ExitCode, CliError> {
    let digits = value.chars().filter(|c| c.is_ascii_digit()).count();
    let p_bits = bits_for_digits(digits);
    let x = parse_decimal(value, p_bits)
        .ok_or_else(|| CliError::Usage(format!("invalid decimal literal '{value}'")))?;
    // leave headroom below the information content of the input so honest
    // rounding in the last digits cannot defeat the confirmation checks
    let p_rec = p_bits.saturating_sub(64);
    if p_rec < 128 {
        return Err(CliError::Domain(format!(
            "need at least 50 significant digits to attempt recognition, got {digits}"
        )));
    }
    let found = recognize(&x, p_rec, bound);
    if json {
        let doc = match &found {
            Some(v) => serde_json::json!({
                "recognized": true,
                "rendered": v.render(),
                "terms": v,
            }),
            None => serde_json::json!({ "recognized": false }),
        };
        out(doc);
    } else {
        match &found {
            Some(v) => out(v.render()),
            None => out("none"),
        }
    }
    Ok(ExitCode::SUCCESS)
}
