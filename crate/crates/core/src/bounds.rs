//! Partition maximization and the a-priori bound on `log(|D+(p)|^{-1})`.
//!
//! `F_{n,m} = max prod mu_i^{mu_i}` over `m`-partitions of `n` is attained
//! only at `(n-m+1, 1, ..., 1)`, so `ln F_{n,m} = (n-m+1) ln(n-m+1)`. For an
//! integer polynomial of degree `n` whose leading coefficient has `L` bits,
//! `log(|D+|^{-1}) <= 2n (ln n + L ln 2)` with `log(a) = max{1, ln|a|}`.
//!
//! Transcendental values are carried as [`Decimal`]s with
//! [`DECIMAL_DIGITS`] significant digits of output.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dplus;
use crate::error::{Error, Result};
use crate::multiplicity::{partitions, MultiplicityVector};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

/// Significant digits printed for decimal values.
pub const DECIMAL_DIGITS: usize = 50;
/// Largest degree accepted by the exhaustive partition search.
pub const PARTITION_CAP: usize = 30;

const FRACTION_DIGITS: u32 = 70;
const GUARD_DIGITS: u32 = 20;

fn ten_pow(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

fn one_scaled() -> &'static BigInt {
    static ONE: OnceLock<BigInt> = OnceLock::new();
    ONE.get_or_init(|| ten_pow(FRACTION_DIGITS))
}

/// Fixed-point real number with 70 fractional decimal digits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decimal {
    scaled: BigInt,
}

impl Decimal {
    pub fn zero() -> Self {
        Decimal { scaled: BigInt::zero() }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Decimal { scaled: v.into() * one_scaled() }
    }

    pub fn is_zero(&self) -> bool {
        self.scaled.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.scaled.is_negative()
    }

    pub fn max(self, other: Decimal) -> Decimal {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Decimal {
        Decimal { scaled: &self.scaled * k.into() }
    }

    /// Natural logarithm of a positive integer.
    pub fn ln_int(v: &BigInt) -> Result<Decimal> {
        if !v.is_positive() {
            return Err(Error::OutOfRange(format!("logarithm of non-positive value {v}")));
        }
        let k = v.bits() - 1;
        let pow2 = BigInt::one() << k;
        // v = 2^k f with f in [1, 2); ln f = 2 atanh((f - 1) / (f + 1))
        let high = atanh_scaled(&(v - &pow2), &(v + &pow2)) * 2;
        let total = high + ln2_high() * BigInt::from(k);
        Ok(Decimal { scaled: round_div(&total, &ten_pow(GUARD_DIGITS)) })
    }

    /// Natural logarithm of a positive rational.
    pub fn ln_rational(v: &Rational) -> Result<Decimal> {
        if !v.is_positive() {
            return Err(Error::OutOfRange(format!("logarithm of non-positive value {v}")));
        }
        Ok(&Decimal::ln_int(v.numer())? - &Decimal::ln_int(v.denom())?)
    }

    /// Rounds to `digits` significant digits and prints in plain positional
    /// notation without trailing zeros.
    pub fn to_significant(&self, digits: usize) -> String {
        if self.scaled.is_zero() {
            return "0".to_string();
        }
        let mag = self.scaled.abs();
        let len = mag.to_string().len();
        let rounded = if len > digits {
            let unit = ten_pow((len - digits) as u32);
            round_div(&mag, &unit) * unit
        } else {
            mag
        };
        let (int_part, frac_part) = rounded.div_rem(one_scaled());
        let frac = format!("{:0>width$}", frac_part.to_string(), width = FRACTION_DIGITS as usize);
        let frac = frac.trim_end_matches('0');
        let sign = if self.scaled.is_negative() { "-" } else { "" };
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_significant(20).parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_significant(DECIMAL_DIGITS))
    }
}

impl Add for &Decimal {
    type Output = Decimal;
    fn add(self, rhs: &Decimal) -> Decimal {
        Decimal { scaled: &self.scaled + &rhs.scaled }
    }
}

impl Sub for &Decimal {
    type Output = Decimal;
    fn sub(self, rhs: &Decimal) -> Decimal {
        Decimal { scaled: &self.scaled - &rhs.scaled }
    }
}

impl Mul for &Decimal {
    type Output = Decimal;
    fn mul(self, rhs: &Decimal) -> Decimal {
        Decimal { scaled: round_div(&(&self.scaled * &rhs.scaled), one_scaled()) }
    }
}

/// `round(a / b)` for `b > 0`, halves away from zero.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r): (BigInt, BigInt) = a.div_rem(b);
    let twice: BigInt = r.abs() * 2;
    match twice.cmp(b) {
        Ordering::Less => q,
        _ if a.sign() == Sign::Minus => q - 1,
        _ => q + 1,
    }
}

/// `atanh(num / den)` scaled by `10^(FRACTION_DIGITS + GUARD_DIGITS)`, for
/// `0 <= num / den <= 1/3`.
fn atanh_scaled(num: &BigInt, den: &BigInt) -> BigInt {
    let scale = ten_pow(FRACTION_DIGITS + GUARD_DIGITS);
    let num2 = num * num;
    let den2 = den * den;
    let mut power = &scale * num / den;
    let mut sum = power.clone();
    let mut k = 1u32;
    while !power.is_zero() {
        power = power * &num2 / &den2;
        sum += &power / BigInt::from(2 * k + 1);
        k += 1;
    }
    sum
}

fn ln2_high() -> &'static BigInt {
    static LN2: OnceLock<BigInt> = OnceLock::new();
    LN2.get_or_init(|| atanh_scaled(&BigInt::one(), &BigInt::from(3)) * 2)
}

/// `(n-m+1) ln(n-m+1)` together with its unique maximizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMax {
    /// The integer `k = n - m + 1`; the value is `k ln k`.
    pub argument: usize,
    pub value: Decimal,
    pub maximizer: MultiplicityVector,
}

fn check_nm(n: usize, m: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::OutOfRange(format!("need 1 <= m <= n, got n={n}, m={m}")));
    }
    Ok(())
}

pub fn phi_max(n: usize, m: usize) -> Result<PhiMax> {
    check_nm(n, m)?;
    let k = n - m + 1;
    let mut parts = vec![k];
    parts.resize(m, 1);
    Ok(PhiMax {
        argument: k,
        value: Decimal::ln_int(&BigInt::from(k))?.mul_int(k),
        maximizer: MultiplicityVector::new(parts)?,
    })
}

/// `prod mu_i^{mu_i}`.
pub fn partition_weight(mu: &MultiplicityVector) -> BigInt {
    mu.parts()
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * num_traits::pow(BigInt::from(p), p))
}

/// Result of the exhaustive search over `m`-partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMax {
    pub value: BigInt,
    /// Every partition attaining `value`, in reverse lexicographic order.
    pub maximizers: Vec<MultiplicityVector>,
}

impl PartitionMax {
    pub fn argmax(&self) -> &MultiplicityVector {
        &self.maximizers[0]
    }
}

/// Exhaustive maximum of `prod mu_i^{mu_i}` over the `m`-partitions of `n`.
pub fn f_max_bruteforce(n: usize, m: usize) -> Result<PartitionMax> {
    check_nm(n, m)?;
    if n > PARTITION_CAP {
        return Err(Error::OutOfRange(format!("partition search supports n <= {PARTITION_CAP}, got {n}")));
    }
    let mut best = PartitionMax { value: BigInt::zero(), maximizers: Vec::new() };
    for mu in partitions(n, m) {
        let w = partition_weight(&mu);
        match w.cmp(&best.value) {
            Ordering::Greater => best = PartitionMax { value: w, maximizers: vec![mu] },
            Ordering::Equal => best.maximizers.push(mu),
            Ordering::Less => {}
        }
    }
    Ok(best)
}

/// `2n (ln n + L ln 2)`.
pub fn dplus_log_bound(n: usize, l: u64) -> Result<Decimal> {
    if n == 0 || l == 0 {
        return Err(Error::OutOfRange(format!("need n >= 1 and L >= 1, got n={n}, L={l}")));
    }
    let ln_n = Decimal::ln_int(&BigInt::from(n))?;
    let ln_2 = Decimal::ln_int(&BigInt::from(2))?;
    Ok((&ln_n + &ln_2.mul_int(l)).mul_int(2 * n))
}

/// Number of bits of `|v|`, i.e. `ceil(log2(|v| + 1))`.
pub fn bit_length(v: &BigInt) -> u64 {
    v.bits()
}

/// `max{1, ln(1 / |v|)}` for nonzero `v`.
pub fn log_inverse_term(v: &Rational) -> Result<Decimal> {
    if v.is_zero() {
        return Err(Error::OutOfRange("log of 1/0".into()));
    }
    let inv = v.abs().recip();
    Ok(Decimal::ln_rational(&inv)?.max(Decimal::from_int(1)))
}

/// Partition and complexity-term figures for one `(n, m, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub l: u64,
    pub phi_max: PhiMax,
    pub f_max: BigInt,
    pub f_argmax: MultiplicityVector,
    /// `2n (ln n + L ln 2)`.
    pub corollary_bound: Decimal,
    /// `max{1, ln(|D+|^{-1})}` when a polynomial is supplied.
    pub actual_term: Option<Decimal>,
    /// `n * actual_term`, the D-plus contribution to the clustering cost.
    pub complexity_term: Option<Decimal>,
}

impl BoundReport {
    /// Whether the observed term respects the a-priori bound.
    pub fn within_bound(&self) -> Option<bool> {
        self.actual_term.as_ref().map(|t| *t <= self.corollary_bound)
    }
}

/// Report without a concrete polynomial.
pub fn bound_report(n: usize, m: usize, l: u64) -> Result<BoundReport> {
    let phi = phi_max(n, m)?;
    let search = f_max_bruteforce(n, m)?;
    let f_argmax = search.argmax().clone();
    Ok(BoundReport {
        n,
        m,
        l,
        phi_max: phi,
        f_max: search.value,
        f_argmax,
        corollary_bound: dplus_log_bound(n, l)?,
        actual_term: None,
        complexity_term: None,
    })
}

/// Computes `D+(p)` and compares its logarithmic term with the bound, using
/// the bit length of `|a0|` as `L`.
pub fn cluster_cost_term(p: &UniPoly) -> Result<BoundReport> {
    if !p.is_integral() {
        return Err(Error::NonInteger);
    }
    let report = dplus::dplus_from_coeffs(p)?;
    let a0 = p.leading().ok_or(Error::ZeroPolynomial)?;
    let l = bit_length(a0.numer());
    let mut out = bound_report(report.mu.n(), report.mu.m(), l)?;
    let n = out.n;
    out.complexity_term = Some(report.log_inverse_term.mul_int(n));
    out.actual_term = Some(report.log_inverse_term);
    Ok(out)
}
