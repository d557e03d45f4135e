//! Symbolic Poisson formula for the resultant of two generic polynomials.
//!
//! With `A = a0 x^m + ... + am` having symbolic roots `alpha1..alpham` and
//! `B = b0 x^n + ... + bn` having roots `beta1..betan`, the resultant agrees
//! with
//!
//! * `Q_a  = a0^n prod_i B(alpha_i)`,
//! * `Q_b  = (-1)^{mn} b0^m prod_j A(beta_j)`,
//! * `Q_ab = a0^n b0^m prod_{i,j} (alpha_i - beta_j)`
//!
//! modulo the Viete relations of the corresponding side(s). The relations are
//! binomials `a_i - (-1)^i e_i(alpha) a0`, so substituting them turns each
//! congruence into a literal polynomial identity, which is what is checked.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multipoly::{elementary_symmetric, MultiPoly, VarTable, Vars};
use crate::rational;
use crate::resultant;

/// Largest `m + n` accepted by [`poisson_verify`].
pub const POISSON_SCALE_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PoissonKind {
    A,
    B,
    AB,
}

impl fmt::Display for PoissonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PoissonKind::A => "a",
            PoissonKind::B => "b",
            PoissonKind::AB => "ab",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn coeff_prefix(self) -> &'static str {
        match self {
            Side::A => "a",
            Side::B => "b",
        }
    }

    fn root_prefix(self) -> &'static str {
        match self {
            Side::A => "alpha",
            Side::B => "beta",
        }
    }
}

/// Table `a0..am, b0..bn, alpha1..alpham, beta1..betan`.
pub fn poisson_vars(m: usize, n: usize) -> Vars {
    let mut names = VarTable::indexed("a", 0, m);
    names.extend(VarTable::indexed("b", 0, n));
    names.extend(VarTable::indexed("alpha", 1, m));
    names.extend(VarTable::indexed("beta", 1, n));
    VarTable::new(names).expect("distinct names")
}

fn vars_named(vars: &Vars, prefix: &str, lo: usize, hi: usize) -> Result<Vec<MultiPoly>> {
    (lo..=hi).map(|i| MultiPoly::var(vars, &format!("{prefix}{i}"))).collect()
}

/// Coefficient lists of the generic `A` (degree `m`) and `B` (degree `n`).
pub fn generic_pair(vars: &Vars, m: usize, n: usize) -> Result<(Vec<MultiPoly>, Vec<MultiPoly>)> {
    Ok((vars_named(vars, "a", 0, m)?, vars_named(vars, "b", 0, n)?))
}

/// Horner evaluation of a coefficient list at a polynomial argument.
fn horner(coeffs: &[MultiPoly], x: &MultiPoly) -> MultiPoly {
    let mut acc = MultiPoly::zero(x.vars());
    for c in coeffs {
        acc = &(&acc * x) + c;
    }
    acc
}

/// `res(A, B)` of the generic pair over [`poisson_vars`].
pub fn generic_resultant(m: usize, n: usize) -> Result<MultiPoly> {
    check_degrees(m, n)?;
    let vars = poisson_vars(m, n);
    let (a, b) = generic_pair(&vars, m, n)?;
    resultant::resultant(&a, &b)
}

fn check_degrees(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange(format!("degrees must be positive, got m={m}, n={n}")));
    }
    Ok(())
}

/// One of the three Poisson expressions, expanded over [`poisson_vars`].
pub fn poisson_q(m: usize, n: usize, kind: PoissonKind) -> Result<MultiPoly> {
    check_degrees(m, n)?;
    let vars = poisson_vars(m, n);
    let (a, b) = generic_pair(&vars, m, n)?;
    let alpha = vars_named(&vars, "alpha", 1, m)?;
    let beta = vars_named(&vars, "beta", 1, n)?;
    let q = match kind {
        PoissonKind::A => alpha
            .iter()
            .fold(a[0].pow(n), |acc, x| &acc * &horner(&b, x)),
        PoissonKind::B => beta
            .iter()
            .fold(b[0].pow(m), |acc, x| &acc * &horner(&a, x))
            .scale(&rational::sign_pow(m * n)),
        PoissonKind::AB => {
            let mut acc = &a[0].pow(n) * &b[0].pow(m);
            for x in &alpha {
                for y in &beta {
                    acc = &acc * &(x - y);
                }
            }
            acc
        }
    };
    Ok(q)
}

/// Viete substitution `c_i -> (-1)^i e_i(roots) c_0` for `i = 1..degree` on
/// one side of the generic pair.
#[derive(Clone, Debug)]
pub struct VieteSubstitution {
    side: Side,
    degree: usize,
    map: HashMap<String, MultiPoly>,
}

impl VieteSubstitution {
    pub fn new(vars: &Vars, side: Side, degree: usize) -> Result<Self> {
        let c = side.coeff_prefix();
        let roots = VarTable::indexed(side.root_prefix(), 1, degree);
        let roots: Vec<&str> = roots.iter().map(String::as_str).collect();
        let lead = MultiPoly::var(vars, &format!("{c}0"))?;
        let map = (1..=degree)
            .map(|i| {
                let e = elementary_symmetric(vars, i, &roots)?;
                Ok((format!("{c}{i}"), (&e * &lead).scale(&rational::sign_pow(i))))
            })
            .collect::<Result<_>>()?;
        Ok(VieteSubstitution { side, degree, map })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image of coefficient `c{i}`; the leading coefficient is never mapped.
    pub fn image(&self, coefficient: &str) -> Option<&MultiPoly> {
        self.map.get(coefficient)
    }
}

/// Applies several Viete substitutions simultaneously.
pub fn viete_apply(p: &MultiPoly, subs: &[VieteSubstitution]) -> Result<MultiPoly> {
    let mut assignment = HashMap::new();
    for s in subs {
        for (k, v) in &s.map {
            assignment.insert(k.clone(), v.clone());
        }
    }
    p.substitute(&assignment, p.vars())
}

/// Outcome of checking the three Poisson identities at one `(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PoissonReport {
    pub m: usize,
    pub n: usize,
    pub q_a: bool,
    pub q_b: bool,
    pub q_ab: bool,
}

impl PoissonReport {
    pub fn all_hold(&self) -> bool {
        self.q_a && self.q_b && self.q_ab
    }
}

pub fn poisson_verify(m: usize, n: usize) -> Result<PoissonReport> {
    poisson_verify_capped(m, n, POISSON_SCALE_CAP)
}

pub fn poisson_verify_capped(m: usize, n: usize, cap: usize) -> Result<PoissonReport> {
    check_degrees(m, n)?;
    if m + n > cap {
        return Err(Error::ScaleCap(format!("m + n = {} exceeds the Poisson cap {cap}", m + n)));
    }
    let vars = poisson_vars(m, n);
    let res = generic_resultant(m, n)?;
    let va = VieteSubstitution::new(&vars, Side::A, m)?;
    let vb = VieteSubstitution::new(&vars, Side::B, n)?;
    let on_a = viete_apply(&res, std::slice::from_ref(&va))?;
    let on_b = viete_apply(&res, std::slice::from_ref(&vb))?;
    let on_both = viete_apply(&on_a, std::slice::from_ref(&vb))?;
    Ok(PoissonReport {
        m,
        n,
        q_a: on_a == poisson_q(m, n, PoissonKind::A)?,
        q_b: on_b == poisson_q(m, n, PoissonKind::B)?,
        q_ab: on_both == poisson_q(m, n, PoissonKind::AB)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_expressions() {
        let vars = poisson_vars(1, 1);
        let v = |s: &str| MultiPoly::var(&vars, s).unwrap();
        let qa = poisson_q(1, 1, PoissonKind::A).unwrap();
        assert_eq!(qa, &v("a0") * &(&(&v("b0") * &v("alpha1")) + &v("b1")));
        let qb = poisson_q(1, 1, PoissonKind::B).unwrap();
        assert_eq!(qb, -(&v("b0") * &(&(&v("a0") * &v("beta1")) + &v("a1"))));
        let res = generic_resultant(1, 1).unwrap();
        assert_eq!(res, &(&v("a0") * &v("b1")) - &(&v("a1") * &v("b0")));
        let va = VieteSubstitution::new(&vars, Side::A, 1).unwrap();
        assert!(va.image("a0").is_none());
        assert_eq!(viete_apply(&res, &[va]).unwrap(), qa);
    }

    #[test]
    fn mixed_product_for_two_and_one() {
        let vars = poisson_vars(2, 1);
        let v = |s: &str| MultiPoly::var(&vars, s).unwrap();
        let want = &(&(&v("a0") * &v("b0").pow(2)) * &(&v("alpha1") - &v("beta1")))
            * &(&v("alpha2") - &v("beta1"));
        assert_eq!(poisson_q(2, 1, PoissonKind::AB).unwrap(), want);
    }

    #[test]
    fn identities_hold_for_small_degrees() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
            let report = poisson_verify(m, n).unwrap();
            assert!(report.all_hold(), "{report:?}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(poisson_verify(4, 4), Err(Error::ScaleCap(_))));
        assert!(poisson_q(0, 2, PoissonKind::A).is_err());
    }
}
