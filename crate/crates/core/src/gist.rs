//! Gist polynomials of the D-plus discriminant in elementary symmetric
//! coordinates `z_1..z_n`.
//!
//! For a multiplicity vector `mu` with `m >= 2` parts the gist is
//! `H_{n,m}(z) / C_mu`. `H_{n,m}` is obtained from the generic discriminant
//! `D(c_0..c_n)` by differentiating `n - m` times in `c_n`, substituting
//! `c_i -> (-1)^i z_i c_0` and dividing out `c_0^{n+m-2}`; it depends on
//! `(n, m)` only, so it is computed once per pair and cached.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::multiplicity::MultiplicityVector;
use crate::multipoly::{MultiPoly, VarTable, Vars};
use crate::rational::{self, Rational};
use crate::resultant::{self, DEFAULT_SCALE_CAP};

/// `H_{n,m}` together with the constant `C_mu` of one multiplicity vector.
#[derive(Clone, Debug)]
pub struct GistResult {
    pub h: Arc<MultiPoly>,
    pub c_mu: Rational,
    pub n: usize,
    pub m: usize,
}

impl GistResult {
    /// `H(z) / C_mu`.
    pub fn evaluate(&self, z: &[Rational]) -> Result<Rational> {
        Ok(self.h.evaluate_at(z)? / &self.c_mu)
    }
}

/// Table `z1..zn`.
pub fn z_vars(n: usize) -> Vars {
    VarTable::new(VarTable::indexed("z", 1, n)).expect("distinct names")
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(n-m)! * prod mu_i^{mu_i}`, the magnitude of `C_mu`.
pub fn c_mu_magnitude(mu: &MultiplicityVector) -> BigInt {
    let prod = mu
        .parts()
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * num_traits::pow(BigInt::from(p), p));
    factorial(mu.n() - mu.m()) * prod
}

/// `C_mu = (n-m)! (-1)^{mn + n(n-1)/2 + sum i mu_i} prod mu_i^{mu_i}`.
pub fn c_mu(mu: &MultiplicityVector) -> Rational {
    let (n, m) = (mu.n(), mu.m());
    let weighted: usize = mu.parts().iter().enumerate().map(|(i, p)| (i + 1) * p).sum();
    let exponent = m * n + n * (n - 1) / 2 + weighted;
    rational::sign_pow(exponent) * rational::big(c_mu_magnitude(mu))
}

type HCache = RwLock<HashMap<(usize, usize), Arc<MultiPoly>>>;

fn h_cache() -> &'static HCache {
    static CACHE: OnceLock<HCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Substitution `c_i -> (-1)^i z_i c_0` (`i = 1..n`) into the table
/// `c0, z1..zn`.
fn specialize_to_z(poly: &MultiPoly, n: usize) -> Result<(MultiPoly, Vars)> {
    let mut names = vec!["c0".to_string()];
    names.extend(VarTable::indexed("z", 1, n));
    let target = VarTable::new(names)?;
    let c0 = MultiPoly::var(&target, "c0")?;
    let assignment: HashMap<String, MultiPoly> = (1..=n)
        .map(|i| {
            let z = MultiPoly::var(&target, &format!("z{i}"))?;
            Ok((format!("c{i}"), (&z * &c0).scale(&rational::sign_pow(i))))
        })
        .collect::<Result<_>>()?;
    Ok((poly.substitute(&assignment, &target)?, target))
}

/// Divides a specialized polynomial by `c0^power` and moves it to `z1..zn`,
/// failing if any `c0` survives.
fn strip_c0(poly: &MultiPoly, table: &Vars, power: usize, n: usize) -> Result<MultiPoly> {
    let c0 = MultiPoly::var(table, "c0")?.pow(power);
    let quotient = poly.exact_div(&c0)?;
    if quotient.uses_var("c0") {
        return Err(Error::Internal(format!("c0 survives after dividing by c0^{power}")));
    }
    quotient.embed(&z_vars(n))
}

/// `H_{n,m}(z)`, cached per `(n, m)`.
pub fn h_poly(n: usize, m: usize) -> Result<Arc<MultiPoly>> {
    h_poly_capped(n, m, DEFAULT_SCALE_CAP)
}

pub fn h_poly_capped(n: usize, m: usize, cap: usize) -> Result<Arc<MultiPoly>> {
    if m < 2 || m > n {
        return Err(Error::OutOfRange(format!("H_(n,m) needs 2 <= m <= n, got n={n}, m={m}")));
    }
    resultant::check_cap(n, cap)?;
    if let Some(h) = h_cache().read().expect("cache lock").get(&(n, m)) {
        return Ok(h.clone());
    }
    let d = resultant::discriminant_symbolic_capped(n, cap)?;
    let last = format!("c{n}");
    let mut g = (*d).clone();
    for _ in 0..n - m {
        g = g.partial_derivative(&last)?;
    }
    let (specialized, table) = specialize_to_z(&g, n)?;
    let h = strip_c0(&specialized, &table, n + m - 2, n)?;
    if !h.has_integer_coefficients() {
        return Err(Error::Internal(format!("H_({n},{m}) has non-integer coefficients")));
    }
    let h = Arc::new(h);
    let mut cache = h_cache().write().expect("cache lock");
    Ok(cache.entry((n, m)).or_insert(h).clone())
}

/// `(H_{n,m}, C_mu)` for a multiplicity vector with at least two parts.
pub fn gist_general(mu: &MultiplicityVector) -> Result<GistResult> {
    let (n, m) = (mu.n(), mu.m());
    Ok(GistResult { h: h_poly(n, m)?, c_mu: c_mu(mu), n, m })
}

/// Closed-form gist for two distinct roots.
///
/// With `q = ((n-1) z1^2 - 2n z2) / (mu1 mu2)`, the gist is `q^{n/2}` for even
/// `n` and `q^{(n-3)/2} (k1 z1^3 + k2 z1 z2 + k3 z3)` for odd `n`, where
/// `d = mu1 mu2 (mu1 - mu2)`, `k1 = -(n-1)(n-2)/d`, `k2 = 3n(n-2)/d` and
/// `k3 = -3n^2/d`.
pub fn gist_two_parts(mu: &MultiplicityVector) -> Result<MultiPoly> {
    if mu.m() != 2 {
        return Err(Error::OutOfRange(format!("two-part gist needs m = 2, got {mu}")));
    }
    let n = mu.n();
    let (mu1, mu2) = (mu.parts()[0] as i64, mu.parts()[1] as i64);
    let vars = z_vars(n);
    let z = |i: usize| MultiPoly::var(&vars, &format!("z{i}"));
    let ni = n as i64;
    let q = (z(1)?.pow(2).scale(&rational::int(ni - 1)) - z(2)?.scale(&rational::int(2 * ni)))
        .scale(&rational::frac(1, mu1 * mu2));
    if n.is_multiple_of(2) {
        return Ok(q.pow(n / 2));
    }
    let d = mu1 * mu2 * (mu1 - mu2);
    // an odd total cannot split into two equal parts
    if d == 0 {
        return Err(Error::DegenerateCase(format!("{mu} has equal parts with odd n")));
    }
    let k1 = rational::frac(-(ni - 1) * (ni - 2), d);
    let k2 = rational::frac(3 * ni * (ni - 2), d);
    let k3 = rational::frac(-3 * ni * ni, d);
    let cubic = z(1)?.pow(3).scale(&k1) + (z(1)? * z(2)?).scale(&k2) + z(3)?.scale(&k3);
    Ok(q.pow((n - 3) / 2) * cubic)
}

/// Constant `kappa(n, j)` such that `kappa * psc_j(p, p')`, specialized to
/// `z` and divided by `c0^{2n-2j-1}`, is the subdiscriminant
/// `sum_{|I| = n-j} prod_{i<k in I} (x_i - x_k)^2` of the roots.
pub fn subdiscriminant_normalization(n: usize, j: usize) -> Rational {
    let k = n - j;
    rational::sign_pow(k * (k - 1) / 2)
}

/// The normalized `j`-th subdiscriminant of the generic degree-`n` polynomial
/// in `z1..zn`.
pub fn subdiscriminant_z(n: usize, j: usize) -> Result<MultiPoly> {
    let s = resultant::subdiscriminant(n, j)?;
    let (specialized, table) = specialize_to_z(&s, n)?;
    let stripped = strip_c0(&specialized, &table, 2 * (n - j) - 1, n)?;
    Ok(stripped.scale(&subdiscriminant_normalization(n, j)))
}

/// Closed-form gist for equal multiplicities `mu_1 = ... = mu_m = mu`:
/// `(S_{n-m}(z) / mu^m)^mu`.
pub fn gist_equal_parts(mu: &MultiplicityVector) -> Result<MultiPoly> {
    if !mu.all_equal() {
        return Err(Error::OutOfRange(format!("equal-parts gist needs equal multiplicities, got {mu}")));
    }
    let (n, m) = (mu.n(), mu.m());
    let part = mu.parts()[0];
    let s = subdiscriminant_z(n, n - m)?;
    let scale = rational::pow(&rational::int(part as i64), m).recip();
    Ok(s.scale(&scale).pow(part))
}
