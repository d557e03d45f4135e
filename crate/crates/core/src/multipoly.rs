//! Sparse multivariate polynomials over the rationals.
//!
//! Every polynomial carries a shared [`VarTable`] naming its indeterminates.
//! Terms live in a map keyed by [`Monomial`] under graded lexicographic order,
//! where earlier table entries are the larger variables. Iteration and the
//! textual form both list terms from the largest monomial down.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Ordered list of indeterminate names shared by a family of polynomials.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
}

pub type Vars = Arc<VarTable>;

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Vars>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::OutOfRange(format!("duplicate indeterminate `{name}`")));
            }
        }
        Ok(Arc::new(VarTable { names }))
    }

    /// Names `prefix{lo}..=prefix{hi}`.
    pub fn indexed(prefix: &str, lo: usize, hi: usize) -> Vec<String> {
        (lo..=hi).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Power product of indeterminates, stored as `(variable id, exponent)` pairs
/// sorted by id. Zero exponents are never stored; the total degree is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    powers: SmallVec<[(u16, u16); 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(id: usize, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial { degree: exp, powers: smallvec![(narrow(id), narrow(exp as usize))] }
        }
    }

    /// Builds from a dense exponent vector indexed by variable id.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Self::from_sorted(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (narrow(i), narrow(e as usize)))
                .collect(),
        )
    }

    fn from_sorted(powers: SmallVec<[(u16, u16); 8]>) -> Self {
        let degree = powers.iter().map(|&(_, e)| u32::from(e)).sum();
        Monomial { degree, powers }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, id: usize) -> u32 {
        self.powers
            .iter()
            .find(|&&(v, _)| v as usize == id)
            .map_or(0, |&(_, e)| u32::from(e))
    }

    pub fn powers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.powers.iter().map(|&(v, e)| (v as usize, u32::from(e)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1).expect("exponent overflow");
                    out.push((a[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { degree: self.degree + other.degree, powers: out }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut out = SmallVec::new();
        let mut j = 0;
        let b = &other.powers;
        for &(v, e) in &self.powers {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                match e.cmp(&b[j].1) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - b[j].1)),
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial { degree: self.degree - other.degree, powers: out })
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (x, y) in self.powers.iter().zip(other.powers.iter()) {
            if x.0 != y.0 {
                // the monomial carrying the earlier variable is larger
                return y.0.cmp(&x.0);
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        self.powers.len().cmp(&other.powers.len())
    }
}

fn narrow(v: usize) -> u16 {
    u16::try_from(v).expect("variable id or exponent exceeds u16")
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the indeterminates of a [`VarTable`], with exact
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        compatible(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

fn compatible(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let id = vars.index_of(name)?;
        Ok(Self::monomial(vars, Monomial::var(id, 1), Rational::one()))
    }

    pub fn monomial(vars: &Vars, mono: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(mono, c);
        p
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial to the smallest.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// The constant value, if the polynomial has no indeterminates in it.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::MinusInfinity, |m| Degree::Finite(m.degree()))
    }

    pub fn degree_in(&self, name: &str) -> Result<Degree> {
        let id = self.vars.index_of(name)?;
        Ok(self
            .terms
            .keys()
            .map(|m| m.exponent(id))
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite))
    }

    pub fn uses_var(&self, name: &str) -> bool {
        match self.vars.index_of(name) {
            Ok(id) => self.terms.keys().any(|m| m.exponent(id) > 0),
            Err(_) => false,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                rational::add_assign(e.get_mut(), &c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) {
        assert!(
            compatible(&self.vars, &other.vars),
            "operands live over different variable tables"
        );
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), rational::mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), rational::mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, mut exp: usize) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the named indeterminate.
    pub fn partial_derivative(&self, name: &str) -> Result<MultiPoly> {
        let id = self.vars.index_of(name)?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(id);
            if e == 0 {
                continue;
            }
            let reduced = m.div(&Monomial::var(id, 1)).expect("exponent is positive");
            out.add_term(reduced, c * rational::int(i64::from(e)));
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over another table that contains every
    /// indeterminate actually used.
    pub fn embed(&self, target: &Vars) -> Result<MultiPoly> {
        if compatible(&self.vars, target) {
            return Ok(MultiPoly { vars: target.clone(), terms: self.terms.clone() });
        }
        let mut map = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut powers: SmallVec<[(u16, u16); 8]> = SmallVec::new();
            for (v, e) in m.powers() {
                let id = match map.get(&v) {
                    Some(&id) => id,
                    None => {
                        let id = target.index_of(self.vars.name(v))?;
                        map.insert(v, id);
                        id
                    }
                };
                powers.push((narrow(id), narrow(e as usize)));
            }
            powers.sort_unstable();
            out.add_term(Monomial::from_sorted(powers), c.clone());
        }
        Ok(out)
    }

    /// Simultaneous substitution of polynomials (over `target`) for
    /// indeterminates. Unassigned indeterminates are carried over by name and
    /// must exist in `target`.
    pub fn substitute(
        &self,
        assignment: &HashMap<String, MultiPoly>,
        target: &Vars,
    ) -> Result<MultiPoly> {
        let mut images: Vec<Option<&MultiPoly>> = vec![None; self.vars.len()];
        for (name, image) in assignment {
            let id = self.vars.index_of(name)?;
            if !compatible(image.vars(), target) {
                return Err(Error::IncompatibleTables);
            }
            images[id] = Some(image);
        }
        let mut carried: Vec<Option<usize>> = vec![None; self.vars.len()];
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut fixed: SmallVec<[(u16, u16); 8]> = SmallVec::new();
            let mut factor = Self::constant(target, c.clone());
            for (v, e) in m.powers() {
                match images[v] {
                    Some(image) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| image.pow(e as usize));
                        factor = &factor * pw;
                    }
                    None => {
                        let id = match carried[v] {
                            Some(id) => id,
                            None => {
                                let id = target.index_of(self.vars.name(v))?;
                                carried[v] = Some(id);
                                id
                            }
                        };
                        fixed.push((narrow(id), narrow(e as usize)));
                    }
                }
            }
            fixed.sort_unstable();
            let mono = Monomial::from_sorted(fixed);
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&mono), fc);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(divisor);
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if divisor.terms.len() == 1 {
            let mut out = Self::zero(&self.vars);
            for (m, c) in &self.terms {
                let q = m.div(lead_m).ok_or(Error::NonExactDivision)?;
                out.terms.insert(q, c / lead_c);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quotient = Self::zero(&self.vars);
        while let Some((m, c)) = rem.terms.last_key_value() {
            let qm = m.div(lead_m).ok_or(Error::NonExactDivision)?;
            let qc = if lead_c.is_one() { c.clone() } else { c / lead_c };
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -rational::mul(dc, &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Evaluates with values given by name.
    pub fn evaluate(&self, point: &HashMap<String, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (id, name) in self.vars.names().iter().enumerate() {
            let used = self.terms.keys().any(|m| m.exponent(id) > 0);
            match point.get(name) {
                Some(v) => values.push(v.clone()),
                None if used => return Err(Error::MissingAssignment(name.clone())),
                None => values.push(Rational::zero()),
            }
        }
        Ok(self.evaluate_dense(&values))
    }

    /// Evaluates with one value per table entry, in table order.
    pub fn evaluate_at(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.vars.len() {
            return Err(Error::LengthMismatch { expected: self.vars.len(), actual: values.len() });
        }
        Ok(self.evaluate_dense(values))
    }

    fn evaluate_dense(&self, values: &[Rational]) -> Rational {
        let mut cache: HashMap<(usize, u32), Rational> = HashMap::new();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let pw = cache.entry((v, e)).or_insert_with(|| rational::pow(&values[v], e as usize));
                t *= &*pw;
            }
            acc += t;
        }
        acc
    }
}

/// `e_k` over the named indeterminates; `e_0 = 1`.
pub fn elementary_symmetric(vars: &Vars, k: usize, over: &[&str]) -> Result<MultiPoly> {
    if k > over.len() {
        return Err(Error::OutOfRange(format!(
            "e_{k} requested over {} indeterminates",
            over.len()
        )));
    }
    // table[j] holds e_j of the prefix processed so far
    let mut table = vec![MultiPoly::zero(vars); k + 1];
    table[0] = MultiPoly::one(vars);
    for (i, name) in over.iter().enumerate() {
        let x = MultiPoly::var(vars, name)?;
        for j in (1..=k.min(i + 1)).rev() {
            let add = &table[j - 1] * &x;
            table[j] = &table[j] + &add;
        }
    }
    Ok(table.swap_remove(k))
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let (small, large) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(small.terms.len() * large.terms.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let c = rational::mul(c1, c2);
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        rational::add_assign(e.get_mut(), &c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MultiPoly { vars: self.vars.clone(), terms: terms.into_iter().collect() }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical form, e.g. `4*z1^3 - 18*z1*z2 + 54*z3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !mag.is_one() {
                factors.push(rational::format(&mag));
            }
            for (v, e) in m.powers() {
                let name = self.vars.name(v);
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn zvars() -> Vars {
        VarTable::new(["z1", "z2", "z3"]).unwrap()
    }

    fn cvars() -> Vars {
        VarTable::new(VarTable::indexed("c", 0, 3)).unwrap()
    }

    fn v(vars: &Vars, n: &str) -> MultiPoly {
        MultiPoly::var(vars, n).unwrap()
    }

    fn k(vars: &Vars, c: i64) -> MultiPoly {
        MultiPoly::constant(vars, int(c))
    }

    /// The n = 3 symbolic discriminant, as displayed for the cubic.
    fn cubic_disc(c: &Vars) -> MultiPoly {
        let (c0, c1, c2, c3) = (v(c, "c0"), v(c, "c1"), v(c, "c2"), v(c, "c3"));
        k(c, -4) * c1.pow(3) * &c3 + c1.pow(2) * c2.pow(2) + k(c, 18) * &c0 * &c1 * &c2 * &c3
            - k(c, 4) * &c0 * c2.pow(3)
            - k(c, 27) * c0.pow(2) * c3.pow(2)
    }

    #[test]
    fn difference_of_squares() {
        let z = zvars();
        let z1 = v(&z, "z1");
        let one = MultiPoly::one(&z);
        let p = (&z1 + &one) * (&z1 - &one);
        assert_eq!(p, z1.pow(2) - one);
        assert!((&p * &MultiPoly::zero(&z)).is_zero());
    }

    #[test]
    fn canonical_text() {
        let z = zvars();
        let (z1, z2, z3) = (v(&z, "z1"), v(&z, "z2"), v(&z, "z3"));
        let h = k(&z, 54) * &z3 + k(&z, 4) * z1.pow(3) - k(&z, 18) * &z1 * &z2;
        assert_eq!(h.to_string(), "4*z1^3 - 18*z1*z2 + 54*z3");
        assert_eq!((-&z1).to_string(), "-z1");
        assert_eq!(MultiPoly::zero(&z).to_string(), "0");
        let half = MultiPoly::constant(&z, crate::rational::frac(-3, 2));
        assert_eq!((&half * &z2 + k(&z, 1)).to_string(), "-3/2*z2 + 1");
    }

    #[test]
    fn cubic_discriminant_derivative() {
        let c = cvars();
        let d = cubic_disc(&c).partial_derivative("c3").unwrap();
        let (c0, c1, c2, c3) = (v(&c, "c0"), v(&c, "c1"), v(&c, "c2"), v(&c, "c3"));
        let expect = k(&c, -4) * c1.pow(3) + k(&c, 18) * &c0 * &c1 * &c2 - k(&c, 54) * c0.pow(2) * &c3;
        assert_eq!(d, expect);
        assert!(k(&c, 5).partial_derivative("c1").unwrap().is_zero());
        assert_eq!(c2.pow(3).partial_derivative("c2").unwrap(), k(&c, 3) * c2.pow(2));
        assert!(matches!(d.partial_derivative("q"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn substitution_specializes_coefficients() {
        let c = cvars();
        let target = VarTable::new(["c0", "z1", "z2", "z3"]).unwrap();
        let c0t = v(&target, "c0");
        let mut asg = HashMap::new();
        for i in 1..=3 {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            asg.insert(format!("c{i}"), k(&target, sign) * v(&target, &format!("z{i}")) * &c0t);
        }
        let g = cubic_disc(&c).partial_derivative("c3").unwrap();
        let s = g.substitute(&asg, &target).unwrap();
        let (z1, z2, z3) = (v(&target, "z1"), v(&target, "z2"), v(&target, "z3"));
        let inner = k(&target, 4) * z1.pow(3) - k(&target, 18) * &z1 * &z2 + k(&target, 54) * &z3;
        assert_eq!(s, c0t.pow(3) * &inner);
        assert_eq!(s.exact_div(&c0t.pow(3)).unwrap(), inner);

        let single: HashMap<_, _> = [("c1".to_string(), -(&v(&target, "z1") * &c0t))].into();
        let sq = v(&c, "c1").pow(2).substitute(&single, &target).unwrap();
        assert_eq!(sq, v(&target, "z1").pow(2) * c0t.pow(2));

        let p = cubic_disc(&c);
        assert_eq!(p.substitute(&HashMap::new(), &c).unwrap(), p);
    }

    #[test]
    fn exact_division() {
        let z = zvars();
        let z1 = v(&z, "z1");
        let one = MultiPoly::one(&z);
        assert_eq!((z1.pow(2) - one.clone()).exact_div(&(&z1 - &one)).unwrap(), &z1 + &one);
        assert_eq!(
            (z1.pow(2) + one.clone()).exact_div(&(&z1 - &one)),
            Err(Error::NonExactDivision)
        );
        assert_eq!(one.exact_div(&MultiPoly::zero(&z)), Err(Error::DivisionByZero));
    }

    #[test]
    fn elementary_symmetric_small() {
        let x = VarTable::new(["x1", "x2", "x3"]).unwrap();
        let names = ["x1", "x2", "x3"];
        let (x1, x2, x3) = (v(&x, "x1"), v(&x, "x2"), v(&x, "x3"));
        assert_eq!(elementary_symmetric(&x, 0, &names).unwrap(), MultiPoly::one(&x));
        assert_eq!(elementary_symmetric(&x, 1, &names).unwrap(), &x1 + &x2 + &x3);
        assert_eq!(
            elementary_symmetric(&x, 2, &names).unwrap(),
            &x1 * &x2 + &x1 * &x3 + &x2 * &x3
        );
        assert!(elementary_symmetric(&x, 4, &names).is_err());
    }

    #[test]
    fn evaluation() {
        let z = zvars();
        let (z1, z2, z3) = (v(&z, "z1"), v(&z, "z2"), v(&z, "z3"));
        let h = k(&z, 4) * z1.pow(3) - k(&z, 18) * &z1 * &z2 + k(&z, 54) * &z3;
        assert_eq!(h.evaluate_at(&[int(5), int(7), int(3)]).unwrap(), int(32));
        let mut pt = HashMap::new();
        pt.insert("z1".to_string(), int(5));
        assert!(matches!(h.evaluate(&pt), Err(Error::MissingAssignment(_))));
        assert_eq!(MultiPoly::zero(&z).evaluate(&HashMap::new()).unwrap(), int(0));
    }

    #[test]
    fn degrees() {
        let z = zvars();
        assert_eq!(MultiPoly::zero(&z).total_degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        let p = v(&z, "z1").pow(2) * v(&z, "z3") + v(&z, "z2");
        assert_eq!(p.total_degree(), Degree::Finite(3));
        assert_eq!(p.degree_in("z3").unwrap(), Degree::Finite(1));
        assert!(!p.is_homogeneous());
    }
}
