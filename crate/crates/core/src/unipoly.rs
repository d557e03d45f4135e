//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multipoly::Degree;
use crate::rational::{self, Rational};

/// `a_0 x^n + a_1 x^{n-1} + ... + a_n`, coefficients stored in descending
/// order. The leading coefficient is nonzero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        UniPoly { coeffs: coeffs[first..].to_vec() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![Rational::one(), -r.clone()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            len => Degree::Finite(len as u32 - 1),
        }
    }

    /// Degree of a nonzero polynomial.
    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let n = self.deg();
        Self::new(
            self.coeffs[..n]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rational::int((n - i) as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: usize) -> UniPoly {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Division with remainder over Q.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let lc = divisor.leading().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let dn = divisor.deg();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dn;
        let mut quot = vec![Rational::zero(); qlen];
        for i in 0..qlen {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lc;
            for (j, d) in divisor.coeffs.iter().enumerate().skip(1) {
                rem[i + j] -= &q * d;
            }
            rem[i] = Rational::zero();
            quot[i] = q;
        }
        Ok((Self::new(quot), Self::new(rem[qlen..].to_vec())))
    }

    /// Exact quotient; fails if `divisor` leaves a remainder.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Rational content, signed so the primitive part has a positive leading
    /// coefficient.
    pub fn content(&self) -> Rational {
        let Some(lc) = self.leading() else {
            return Rational::zero();
        };
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let content = Rational::new(num, den);
        if lc.is_negative() {
            -content
        } else {
            content
        }
    }

    /// Integer coefficients with gcd one and positive leading coefficient.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.content().recip())
    }

    fn pseudo_rem(&self, divisor: &UniPoly) -> UniPoly {
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.deg() >= divisor.deg() {
            let top = rem.leading().expect("nonzero").clone();
            let mut next = rem.scale(&lc).coeffs;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                next[j] -= &top * d;
            }
            rem = Self::new(next);
        }
        rem
    }

    /// Monic gcd over Q via the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: monic square-free factors paired with
    /// their multiplicity, in increasing multiplicity. The leading coefficient
    /// is dropped.
    pub fn square_free_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > Degree::Finite(0) {
            let a = b.gcd(&d);
            if a.degree() > Degree::Finite(0) {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// `leading * prod (x - r_j)^{mult_j}`.
    pub fn from_roots(roots: &[(Rational, usize)], leading: &Rational) -> UniPoly {
        roots
            .iter()
            .fold(Self::constant(leading.clone()), |acc, (r, mult)| {
                &acc * &Self::linear_root(r).pow(*mult)
            })
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[len - self.coeffs.len() + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[len - rhs.coeffs.len() + i] += c;
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let n = self.deg();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = n - i;
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.abs();
            let power = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            let body = if e == 0 {
                rational::format(&mag)
            } else if mag.is_one() {
                power
            } else {
                format!("{}*{power}", rational::format(&mag))
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
