//! The D-plus discriminant, from roots and from coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bounds::{self, Decimal};
use crate::error::{Error, Result};
use crate::gist::{self, GistResult};
use crate::multiplicity::MultiplicityVector;
use crate::multipoly::Degree;
use crate::rational::{self, Rational};
use crate::unipoly::UniPoly;

/// Everything computed for one input polynomial.
#[derive(Clone, Debug)]
pub struct DPlusReport {
    pub input: UniPoly,
    pub mu: MultiplicityVector,
    /// `D+(p)`, never zero.
    pub value: Rational,
    /// The gist used; absent when `p` has a single distinct root.
    pub gist: Option<GistResult>,
    /// `(n-m)! prod mu_i^{mu_i} |a0|^{n+m-2}` for integer input.
    pub denominator_bound: Option<BigInt>,
    /// `max{1, ln(|D+|^{-1})}`.
    pub log_inverse_term: Decimal,
}

fn degree_of(p: &UniPoly) -> Result<usize> {
    match p.degree() {
        Degree::MinusInfinity => Err(Error::ZeroPolynomial),
        Degree::Finite(0) => Err(Error::OutOfRange("polynomial must have degree >= 1".into())),
        Degree::Finite(d) => Ok(d as usize),
    }
}

/// Multiplicities of the distinct complex roots of `p`, via square-free
/// decomposition.
pub fn multiplicity_vector(p: &UniPoly) -> Result<MultiplicityVector> {
    let n = degree_of(p)?;
    let mut parts = Vec::with_capacity(n);
    for (factor, mult) in p.square_free_decomposition()? {
        let d = factor.degree().finite().unwrap_or(0) as usize;
        parts.extend(std::iter::repeat_n(mult, d));
    }
    let mu = MultiplicityVector::from_unsorted(parts)?;
    if mu.n() != n {
        return Err(Error::Internal(format!("multiplicities {mu} do not sum to degree {n}")));
    }
    Ok(mu)
}

fn check_roots(mu: &MultiplicityVector, r: &[Rational]) -> Result<()> {
    if r.len() != mu.m() {
        return Err(Error::LengthMismatch { expected: mu.m(), actual: r.len() });
    }
    for (i, a) in r.iter().enumerate() {
        if r[..i].contains(a) {
            return Err(Error::RepeatedRoot);
        }
    }
    Ok(())
}

/// `leading * prod (x - r_j)^{mu_j}`.
pub fn build_poly_from_roots(mu: &MultiplicityVector, r: &[Rational], leading: &Rational) -> Result<UniPoly> {
    check_roots(mu, r)?;
    if leading.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let roots: Vec<(Rational, usize)> = r.iter().cloned().zip(mu.parts().iter().copied()).collect();
    Ok(UniPoly::from_roots(&roots, leading))
}

/// `e_1..e_n` of the multiset holding each `r_j` with multiplicity `mu_j`.
pub fn specialized_elem_sym(mu: &MultiplicityVector, r: &[Rational]) -> Result<Vec<Rational>> {
    if r.len() != mu.m() {
        return Err(Error::LengthMismatch { expected: mu.m(), actual: r.len() });
    }
    // coefficients of prod (x - r_j)^{mu_j} are (-1)^i e_i
    let mut e = vec![Rational::one()];
    for (root, &mult) in r.iter().zip(mu.parts()) {
        for _ in 0..mult {
            e.push(Rational::zero());
            for i in (1..e.len()).rev() {
                let carry = &e[i - 1] * root;
                e[i] += carry;
            }
        }
    }
    e.remove(0);
    Ok(e)
}

/// `prod_{i<j} (r_i - r_j)^{mu_i + mu_j}`.
pub fn dplus_from_roots(mu: &MultiplicityVector, r: &[Rational]) -> Result<Rational> {
    check_roots(mu, r)?;
    let parts = mu.parts();
    let mut value = Rational::one();
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            value *= rational::pow(&(&r[i] - &r[j]), parts[i] + parts[j]);
        }
    }
    Ok(value)
}

/// `z_i = (-1)^i a_i / a_0`.
pub fn z_coordinates(p: &UniPoly) -> Result<Vec<Rational>> {
    let coeffs = p.coeffs();
    let a0 = coeffs.first().ok_or(Error::ZeroPolynomial)?;
    Ok(coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, a)| rational::sign_pow(i + 1) * a / a0)
        .collect())
}

/// `D+(p)` from the coefficients alone, as `H_{n,m}(z) / C_mu`.
pub fn dplus_from_coeffs(p: &UniPoly) -> Result<DPlusReport> {
    let mu = multiplicity_vector(p)?;
    let (value, gist) = if mu.m() == 1 {
        (Rational::one(), None)
    } else {
        let g = gist::gist_general(&mu)?;
        (g.evaluate(&z_coordinates(p)?)?, Some(g))
    };
    if value.is_zero() {
        return Err(Error::Internal(format!("D+ evaluated to 0 for {p}")));
    }
    let denominator_bound = if p.is_integral() { Some(bound_for(&mu, p)?) } else { None };
    if let Some(bound) = &denominator_bound {
        if !bound.is_multiple_of(value.denom()) {
            return Err(Error::Internal(format!(
                "denominator {} of D+ does not divide {bound}",
                value.denom()
            )));
        }
    }
    let log_inverse_term = bounds::log_inverse_term(&value)?;
    Ok(DPlusReport { input: p.clone(), mu, value, gist, denominator_bound, log_inverse_term })
}

fn bound_for(mu: &MultiplicityVector, p: &UniPoly) -> Result<BigInt> {
    let a0 = p.leading().ok_or(Error::ZeroPolynomial)?.numer().abs();
    Ok(gist::c_mu_magnitude(mu) * num_traits::pow(a0, mu.n() + mu.m() - 2))
}

/// `(n-m)! prod mu_i^{mu_i} |a0|^{n+m-2}`, a multiple of the reduced
/// denominator of `D+(p)` for integer `p`.
pub fn denominator_bound(p: &UniPoly) -> Result<BigInt> {
    if !p.is_integral() {
        return Err(Error::NonInteger);
    }
    bound_for(&multiplicity_vector(p)?, p)
}

/// Whether two multiplicity vectors give the same D-plus polynomial in the
/// roots, i.e. the same `m` and the same exponents `mu_i + mu_j`.
pub fn dplus_function_equal(mu1: &MultiplicityVector, mu2: &MultiplicityVector) -> bool {
    mu1.m() == mu2.m() && exponent_matrix(mu1) == exponent_matrix(mu2)
}

/// Exponents `mu_i + mu_j` for `i < j`, row by row.
pub fn exponent_matrix(mu: &MultiplicityVector) -> Vec<usize> {
    let p = mu.parts();
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| p[i] + p[j]))
        .collect()
}

/// `p' / (n prod (x - r_k)^{mu_k - 1})` for `p = prod (x - r_j)^{mu_j}`. Its
/// value at `r_i` is `(mu_i / n) prod_{j != i} (r_i - r_j)`.
pub fn derivative_cofactor(mu: &MultiplicityVector, r: &[Rational]) -> Result<UniPoly> {
    let p = build_poly_from_roots(mu, r, &Rational::one())?;
    let reduced: Vec<(Rational, usize)> = r.iter().cloned().zip(mu.parts().iter().map(|k| k - 1)).collect();
    let n = rational::int(mu.n() as i64);
    let divisor = UniPoly::from_roots(&reduced, &n);
    p.derivative().exact_div(&divisor)
}
