//! Command-line front end.
//!
//! Every command renders either as `key = value` lines or as a JSON object
//! with sorted keys. Exact rationals are printed as `num/den` (or an integer)
//! and are strings in JSON; logarithmic quantities are decimals with 50
//! significant digits, also strings in JSON.
//!
//! Exit status: 0 success, 1 usage or parse error, 2 domain error (zero
//! polynomial, out-of-range arguments, scale cap), 3 internal contract
//! violation or a failed self-check.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bounds::{self, BoundReport, Decimal};
use crate::dplus;
use crate::error::Error;
use crate::gist;
use crate::multiplicity::MultiplicityVector;
use crate::parse::parse_polynomial;
use crate::poisson;
use crate::rational::{self, Rational};
use crate::resultant;
use crate::sampling;
use crate::unipoly::UniPoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Random oracle cases run by `selftest --seed` unless `--cases` is given.
pub const DEFAULT_SELFTEST_CASES: usize = 25;

#[derive(Parser, Debug)]
#[command(name = "dplus", version, about = "Exact D-plus discriminants of polynomials with multiple roots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Deliberate corruptions for exercising the self-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Negate the computed C_mu.
    CMuSign,
    /// Add one to the computed D-plus value.
    DplusValue,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// D+(p) from the coefficients of p
    Compute {
        /// `1,-5,7,-3` or `x^3-5x^2+7x-3`
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also list the square-free factors behind the multiplicity vector
        #[arg(long)]
        show_mu: bool,
        /// Also print H_{n,m} and C_mu
        #[arg(long)]
        show_gist: bool,
    },
    /// H_{n,m} in z1..zn, and C_mu when a multiplicity vector is given
    Gist {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Multiplicity vector such as `2,1`
        #[arg(long)]
        mu: Option<MultiplicityVector>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the three Poisson identities for generic A (degree m) and B (degree n)
    PoissonCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare log(|D+(p)|^-1) with its a-priori bound, or print the bound for given n, m, L
    Bound {
        /// Polynomial to measure; omit it and give --n, --m, --bits instead
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        /// Degree
        #[arg(long)]
        n: Option<usize>,
        /// Number of distinct roots
        #[arg(long)]
        m: Option<usize>,
        /// Bit length L of the leading coefficient
        #[arg(long = "bits")]
        bits: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Maximum of prod mu_i^mu_i over the m-partitions of n
    PartitionMax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regression checks on the worked examples, plus seeded random cases
    Selftest {
        /// Also run random oracle cases from this seed
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random cases (requires --seed)
        #[arg(long, requires = "seed")]
        cases: Option<usize>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        Error::ZeroPolynomial
        | Error::OutOfRange(_)
        | Error::ScaleCap(_)
        | Error::DegenerateCase(_)
        | Error::RepeatedRoot
        | Error::LengthMismatch { .. }
        | Error::InvalidPartition(_)
        | Error::NonInteger => EXIT_DOMAIN,
        Error::NonExactDivision
        | Error::DivisionByZero
        | Error::UnknownVariable(_)
        | Error::MissingAssignment(_)
        | Error::IncompatibleTables
        | Error::Internal(_) => EXIT_INTERNAL,
    }
}

/// Rendered result of a command.
pub struct Output {
    lines: Vec<(String, String)>,
    json: Value,
    code: i32,
}

impl Output {
    fn new(json: Value) -> Self {
        Output { lines: Vec::new(), json, code: EXIT_OK }
    }

    fn line(mut self, key: &str, value: impl ToString) -> Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.lines.iter().map(|(k, v)| format!("{k} = {v}\n")).collect(),
            Format::Json => render_json(&self.json),
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

fn q(r: &Rational) -> String {
    rational::format(r)
}

fn mu_json(mu: &MultiplicityVector) -> Value {
    json!(mu.parts())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let format = cli.command.format();
    match execute(&cli.command) {
        Ok(output) => {
            let _ = write!(out, "{}", output.render(format));
            if output.code != EXIT_OK {
                if let Some(msg) = output.json.get("first_failure").and_then(Value::as_str) {
                    let _ = writeln!(err, "error: {msg}");
                }
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

impl Command {
    fn format(&self) -> Format {
        match self {
            Command::Compute { format, .. }
            | Command::Gist { format, .. }
            | Command::PoissonCheck { format, .. }
            | Command::Bound { format, .. }
            | Command::PartitionMax { format, .. }
            | Command::Selftest { format, .. } => *format,
        }
    }
}

pub fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Compute { poly, show_mu, show_gist, .. } => cmd_compute(poly, *show_mu, *show_gist),
        Command::Gist { n, m, mu, .. } => cmd_gist(*n, *m, mu.as_ref()),
        Command::PoissonCheck { m, n, .. } => cmd_poisson(*m, *n),
        Command::Bound { poly, n, m, bits, .. } => cmd_bound(poly.as_deref(), *n, *m, *bits),
        Command::PartitionMax { n, m, .. } => cmd_partition_max(*n, *m),
        Command::Selftest { seed, cases, inject_fault, .. } => {
            let cases = seed.map(|_| cases.unwrap_or(DEFAULT_SELFTEST_CASES)).unwrap_or(0);
            Ok(cmd_selftest(*seed, cases, *inject_fault))
        }
    }
}

fn cmd_compute(input: &str, show_mu: bool, show_gist: bool) -> Result<Output, Failure> {
    let p = parse_polynomial(input)?;
    let report = dplus::dplus_from_coeffs(&p)?;
    let n = report.mu.n();
    let cost = report.log_inverse_term.mul_int(n);
    let bound = report.denominator_bound.as_ref().map(BigInt::to_string);
    let mut json = json!({
        "command": "compute",
        "polynomial": p.to_string(),
        "dplus": q(&report.value),
        "mu": mu_json(&report.mu),
        "n": n,
        "m": report.mu.m(),
        "denominator_bound": bound,
        "log_inverse_term": report.log_inverse_term.to_string(),
        "cluster_cost_term": cost.to_string(),
    });
    let mut out_lines = vec![
        ("D+".to_string(), q(&report.value)),
        ("mu".to_string(), report.mu.to_string()),
    ];
    if show_mu {
        let factors = p.square_free_decomposition()?;
        json["factors"] = Value::Array(
            factors
                .iter()
                .map(|(f, k)| json!({"factor": f.to_string(), "multiplicity": k}))
                .collect(),
        );
        out_lines.push(("n".into(), n.to_string()));
        out_lines.push(("m".into(), report.mu.m().to_string()));
        for (f, k) in &factors {
            out_lines.push(("factor".into(), format!("({f})^{k}")));
        }
    }
    if show_gist {
        json["gist"] = match &report.gist {
            Some(g) => json!({"h": g.h.to_string(), "c_mu": q(&g.c_mu)}),
            None => Value::Null,
        };
        match &report.gist {
            Some(g) => {
                out_lines.push(("H".into(), g.h.to_string()));
                out_lines.push(("C_mu".into(), q(&g.c_mu)));
            }
            None => out_lines.push(("H".into(), "none (single distinct root)".into())),
        }
    }
    out_lines.push(("denominator bound".into(), bound.unwrap_or_else(|| "n/a (non-integer input)".into())));
    out_lines.push(("log term".into(), report.log_inverse_term.to_string()));
    out_lines.push(("cluster cost term".into(), cost.to_string()));
    let mut output = Output::new(json);
    output.lines = out_lines;
    Ok(output)
}

fn cmd_gist(n: Option<usize>, m: Option<usize>, mu: Option<&MultiplicityVector>) -> Result<Output, Failure> {
    let (n, m) = match (n, m, mu) {
        (Some(n), Some(m), _) => (n, m),
        (None, None, Some(mu)) => (mu.n(), mu.m()),
        _ => return Err(usage("gist needs --n and --m, or --mu")),
    };
    if let Some(mu) = mu {
        if (mu.n(), mu.m()) != (n, m) {
            return Err(Error::OutOfRange(format!("{mu} is not a {m}-partition of {n}")).into());
        }
    }
    let h = gist::h_poly(n, m)?;
    let mut json = json!({"command": "gist", "n": n, "m": m, "h": h.to_string()});
    let mut output = Output::new(Value::Null).line("H", &*h);
    if let Some(mu) = mu {
        let c = gist::c_mu(mu);
        json["mu"] = mu_json(mu);
        json["c_mu"] = json!(q(&c));
        output = output.line("mu", mu).line("C_mu", q(&c));
    }
    output.json = json;
    Ok(output)
}

fn cmd_poisson(m: usize, n: usize) -> Result<Output, Failure> {
    let r = poisson::poisson_verify(m, n)?;
    let json = json!({"command": "poisson-check", "m": m, "n": n, "q_a": r.q_a, "q_b": r.q_b, "q_ab": r.q_ab});
    let mut output = Output::new(json)
        .line("Q_a", r.q_a)
        .line("Q_b", r.q_b)
        .line("Q_ab", r.q_ab);
    if !r.all_hold() {
        output.code = EXIT_INTERNAL;
    }
    Ok(output)
}

fn bound_output(r: &BoundReport) -> Output {
    let json = json!({
        "command": "bound",
        "n": r.n,
        "m": r.m,
        "bits": r.l,
        "phi_max": {"argument": r.phi_max.argument, "value": r.phi_max.value.to_string(), "maximizer": mu_json(&r.phi_max.maximizer)},
        "f_max": r.f_max.to_string(),
        "f_argmax": mu_json(&r.f_argmax),
        "corollary_bound": r.corollary_bound.to_string(),
        "actual_term": r.actual_term.as_ref().map(Decimal::to_string),
        "complexity_term": r.complexity_term.as_ref().map(Decimal::to_string),
        "within_bound": r.within_bound(),
    });
    let k = r.phi_max.argument;
    let mut output = Output::new(json)
        .line("n", r.n)
        .line("m", r.m)
        .line("L", r.l)
        .line("phi_max", format!("{k}*ln({k}) = {}", r.phi_max.value))
        .line("maximizer", &r.phi_max.maximizer)
        .line("f_max", &r.f_max)
        .line("f_argmax", &r.f_argmax)
        .line("corollary bound", &r.corollary_bound);
    if let (Some(t), Some(c), Some(ok)) = (&r.actual_term, &r.complexity_term, r.within_bound()) {
        output = output.line("log term", t).line("cluster cost term", c).line("within bound", ok);
    }
    output
}

fn cmd_bound(poly: Option<&str>, n: Option<usize>, m: Option<usize>, bits: Option<u64>) -> Result<Output, Failure> {
    let report = match (poly, n, m, bits) {
        (Some(text), None, None, None) => bounds::cluster_cost_term(&parse_polynomial(text)?)?,
        (None, Some(n), Some(m), Some(l)) => bounds::bound_report(n, m, l)?,
        _ => return Err(usage("bound needs either a polynomial, or all of --n, --m and --bits")),
    };
    Ok(bound_output(&report))
}

fn cmd_partition_max(n: usize, m: usize) -> Result<Output, Failure> {
    let search = bounds::f_max_bruteforce(n, m)?;
    let phi = bounds::phi_max(n, m)?;
    let ln_f = Decimal::ln_int(&search.value)?;
    let json = json!({
        "command": "partition-max",
        "n": n,
        "m": m,
        "f_max": search.value.to_string(),
        "argmax": mu_json(search.argmax()),
        "maximizer_count": search.maximizers.len(),
        "ln_f_max": ln_f.to_string(),
        "phi_max": phi.value.to_string(),
    });
    Ok(Output::new(json)
        .line("f_max", &search.value)
        .line("argmax", search.argmax())
        .line("maximizers", search.maximizers.len())
        .line("ln(f_max)", &ln_f)
        .line("phi_max", &phi.value))
}

/// One self-check: what was expected and what came out.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl Into<String>, actual: Result<String, Error>) -> Self {
        let actual = actual.unwrap_or_else(|e| format!("error: {e}"));
        Check { name: name.into(), expected: expected.into(), actual }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn example_cubic() -> UniPoly {
    UniPoly::from_ints(&[1, -5, 7, -3])
}

/// `(a1^3 - 9/2 a0 a1 a2 + 27/2 a0^2 a3) / a0^3` for a cubic with a double
/// root.
fn double_root_cubic_closed_form(a: &[Rational]) -> Rational {
    let (a0, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3]);
    let inner = a1 * a1 * a1 - rational::frac(9, 2) * a0 * a1 * a2 + rational::frac(27, 2) * a0 * a0 * a3;
    inner / (a0 * a0 * a0)
}

pub fn selftest_checks(seed: Option<u64>, cases: usize, fault: Option<Fault>) -> Vec<Check> {
    let mu21 = MultiplicityVector::new(vec![2, 1]).expect("valid partition");
    let mut checks = vec![
        Check::new(
            "cubic_mu",
            "(2,1)",
            dplus::multiplicity_vector(&example_cubic()).map(|m| m.to_string()),
        ),
        Check::new(
            "cubic_dplus",
            "-8",
            dplus::dplus_from_coeffs(&example_cubic()).map(|r| {
                let v = if fault == Some(Fault::DplusValue) { r.value + Rational::from_integer(1.into()) } else { r.value };
                q(&v)
            }),
        ),
        Check::new("cubic_closed_form", "-8", Ok(q(&double_root_cubic_closed_form(example_cubic().coeffs())))),
        Check::new(
            "cubic_roots",
            "-8",
            dplus::dplus_from_roots(&mu21, &[rational::int(1), rational::int(3)]).map(|v| q(&v)),
        ),
        Check::new(
            "cubic_discriminant",
            "-27*c0^2*c3^2 + 18*c0*c1*c2*c3 - 4*c0*c2^3 - 4*c1^3*c3 + c1^2*c2^2",
            resultant::discriminant_symbolic(3).map(|d| d.to_string()),
        ),
        Check::new(
            "cubic_discriminant_derivative",
            "-54*c0^2*c3 + 18*c0*c1*c2 - 4*c1^3",
            resultant::discriminant_symbolic(3)
                .and_then(|d| d.partial_derivative("c3"))
                .map(|g| g.to_string()),
        ),
        Check::new(
            "h_3_2",
            "4*z1^3 - 18*z1*z2 + 54*z3",
            gist::h_poly(3, 2).map(|h| h.to_string()),
        ),
        Check::new("c_mu", "-4", {
            let c = gist::c_mu(&mu21);
            Ok(q(&if fault == Some(Fault::CMuSign) { -c } else { c }))
        }),
        Check::new(
            "cubic_gist_value",
            "-8",
            gist::gist_general(&mu21)
                .and_then(|g| g.evaluate(&[rational::int(5), rational::int(7), rational::int(3)]))
                .map(|v| q(&v)),
        ),
    ];
    for (m, n) in [(1, 1), (2, 2)] {
        checks.push(Check::new(
            format!("poisson_{m}_{n}"),
            "true",
            poisson::poisson_verify(m, n).map(|r| r.all_hold().to_string()),
        ));
    }
    checks.push(Check::new(
        "partition_5_2",
        "256 at (4,1)",
        bounds::f_max_bruteforce(5, 2).map(|r| format!("{} at {}", r.value, r.argmax())),
    ));
    checks.push(Check::new(
        "phi_5_2",
        Decimal::ln_int(&BigInt::from(256)).map(|d| d.to_string()).unwrap_or_default(),
        bounds::phi_max(5, 2).map(|p| p.value.to_string()),
    ));
    if let Some(seed) = seed {
        checks.push(random_oracle_check(seed, cases));
    }
    checks
}

fn random_oracle_check(seed: u64, cases: usize) -> Check {
    let mut rng = sampling::rng_from_seed(seed);
    let mut mismatches = 0usize;
    for _ in 0..cases {
        let case = sampling::random_root_case(&mut rng, 6, 20, 10);
        let agree = case
            .polynomial()
            .and_then(|p| dplus::dplus_from_coeffs(&p))
            .and_then(|r| Ok(r.value == dplus::dplus_from_roots(&case.mu, &case.roots)?));
        if agree != Ok(true) {
            mismatches += 1;
        }
    }
    Check::new(format!("random_oracle_seed_{seed}"), format!("{cases} of {cases} agree"), Ok(format!("{} of {cases} agree", cases - mismatches)))
}

fn cmd_selftest(seed: Option<u64>, cases: usize, fault: Option<Fault>) -> Output {
    let checks = selftest_checks(seed, cases, fault);
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    let first_failure = failed
        .first()
        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual));
    let json = json!({
        "command": "selftest",
        "seed": seed,
        "checks_run": checks.len(),
        "failed": failed.len(),
        "first_failure": first_failure,
        "checks": checks.iter().map(|c| json!({"name": c.name, "expected": c.expected, "actual": c.actual, "passed": c.passed()})).collect::<Vec<_>>(),
    });
    let mut output = Output::new(json);
    for c in &checks {
        let status = if c.passed() { "ok".to_string() } else { format!("FAIL (expected {})", c.expected) };
        output = output.line(&c.name, format!("{} {status}", c.actual));
    }
    output = output.line("checks run", checks.len()).line("failed", failed.len());
    if let Some(seed) = seed {
        output = output.line("seed", seed);
    }
    if !failed.is_empty() {
        output.code = EXIT_INTERNAL;
    }
    output
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("dplus").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_example() {
        let (code, out, _) = run_args(&["compute", "x^3-5x^2+7x-3"]);
        assert_eq!(code, 0);
        assert!(out.contains("D+ = -8\n") && out.contains("mu = (2,1)\n"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["compute", "0"]).0, EXIT_DOMAIN);
        assert_eq!(run_args(&["compute", "x^^2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["gist", "--n", "9", "--m", "2"]).0, EXIT_DOMAIN);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn selftest_passes_and_detects_faults() {
        let (code, out, _) = run_args(&["selftest"]);
        assert_eq!(code, 0, "{out}");
        let (code, _, err) = run_args(&["selftest", "--inject-fault", "c-mu-sign"]);
        assert_eq!(code, EXIT_INTERNAL);
        assert!(err.contains("c_mu"), "{err}");
    }
}
