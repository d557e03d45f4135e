//! Textual polynomial input.
//!
//! Two forms are accepted, whitespace anywhere is ignored:
//!
//! * coefficient list, descending powers: `1,-5,7,-3` or `1, -3/2, 2`;
//! * monomial sum in `x`: `x^3-5x^2+7x-3`, `3/2*x^2 - x + 1/4`.
//!
//! Input containing `x` is read as a monomial sum, anything else as a list.
//! In a monomial sum a term is `[sign][coefficient][*]x[^k]` or a bare
//! `[sign]coefficient`; repeated powers are added together.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::unipoly::UniPoly;

/// Largest exponent accepted in a monomial sum.
pub const MAX_EXPONENT: usize = 4096;

pub fn parse_polynomial(input: &str) -> Result<UniPoly> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if compact.contains('x') {
        parse_monomials(&compact)
    } else {
        parse_coefficients(&compact)
    }
}

fn parse_coefficients(s: &str) -> Result<UniPoly> {
    let coeffs = s
        .split(',')
        .map(|t| {
            if t.is_empty() {
                Err(Error::Parse("empty coefficient in list".into()))
            } else {
                rational::parse(t)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs))
}

/// Splits `s` into signed term bodies at every `+`/`-`.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let mut signed_start = false;
    for (i, c) in s.char_indices() {
        if c == '+' || c == '-' {
            if i > start || (i == start && signed_start) {
                let body = &s[start..i];
                if body.is_empty() {
                    return Err(Error::Parse(format!("dangling sign before position {i}")));
                }
                out.push((negative, body));
            }
            negative = c == '-';
            start = i + 1;
            signed_start = true;
        }
    }
    let body = &s[start..];
    if body.is_empty() {
        return Err(Error::Parse("polynomial ends with a sign".into()));
    }
    out.push((negative, body));
    Ok(out)
}

fn parse_term(body: &str) -> Result<(usize, Rational)> {
    let Some(pos) = body.find('x') else {
        return Ok((0, rational::parse(body)?));
    };
    let coeff_text = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
    let coeff = if coeff_text.is_empty() {
        if body[..pos].ends_with('*') {
            return Err(Error::Parse(format!("missing coefficient before `*` in `{body}`")));
        }
        Rational::one()
    } else {
        rational::parse(coeff_text)?
    };
    let rest = &body[pos + 1..];
    let exp = if rest.is_empty() {
        1
    } else {
        let digits = rest
            .strip_prefix('^')
            .ok_or_else(|| Error::Parse(format!("unexpected `{rest}` after x")))?;
        digits
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid exponent `{digits}`")))?
    };
    if exp > MAX_EXPONENT {
        return Err(Error::Parse(format!("exponent {exp} exceeds {MAX_EXPONENT}")));
    }
    Ok((exp, coeff))
}

fn parse_monomials(s: &str) -> Result<UniPoly> {
    let mut by_power: BTreeMap<usize, Rational> = BTreeMap::new();
    for (negative, body) in split_terms(s)? {
        let (exp, c) = parse_term(body)?;
        let c = if negative { -c } else { c };
        *by_power.entry(exp).or_insert_with(Rational::zero) += c;
    }
    let degree = by_power.keys().next_back().copied().unwrap_or(0);
    let coeffs = (0..=degree)
        .rev()
        .map(|k| by_power.remove(&k).unwrap_or_else(Rational::zero))
        .collect();
    Ok(UniPoly::new(coeffs))
}
