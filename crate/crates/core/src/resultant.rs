//! Sylvester matrices, exact determinants over polynomial entries, resultants,
//! the generic discriminant and its principal subresultant coefficients.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, VarTable, Vars};
use crate::rational::{self, Rational};

/// Largest degree accepted by the symbolic routines unless a caller opts in
/// to a higher cap.
pub const DEFAULT_SCALE_CAP: usize = 8;

/// Dense matrix of polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, actual: entries.len() });
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    fn row_vecs(&self) -> Vec<Vec<MultiPoly>> {
        self.entries.chunks(self.cols).map(<[MultiPoly]>::to_vec).collect()
    }

    /// Exact determinant. Matrices below 4x4 use cofactor expansion, larger
    /// ones fraction-free (Bareiss) elimination with row swaps.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::OutOfRange(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Err(Error::OutOfRange("determinant of an empty matrix".into()));
        }
        if self.rows < 4 {
            Ok(self.determinant_cofactor())
        } else {
            self.determinant_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn determinant_cofactor(&self) -> MultiPoly {
        let rows = self.row_vecs();
        let cols: Vec<usize> = (0..self.cols).collect();
        cofactor(&rows, 0, &cols)
    }

    pub fn determinant_bareiss(&self) -> Result<MultiPoly> {
        let n = self.rows;
        let vars = self.entries[0].vars().clone();
        let mut m = self.row_vecs();
        let mut negate = false;
        let mut prev = MultiPoly::one(&vars);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(&vars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let mut cross = &m[k][k] * &m[i][j];
                    if !m[i][k].is_zero() && !m[k][j].is_zero() {
                        cross = cross - &m[i][k] * &m[k][j];
                    }
                    m[i][j] = cross.exact_div(&prev)?;
                }
                m[i][k] = MultiPoly::zero(&vars);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}

fn cofactor(rows: &[Vec<MultiPoly>], r: usize, cols: &[usize]) -> MultiPoly {
    if cols.len() == 1 {
        return rows[r][cols[0]].clone();
    }
    let vars = rows[0][0].vars().clone();
    let mut acc = MultiPoly::zero(&vars);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &rows[r][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = entry * &cofactor(rows, r + 1, &rest);
        acc = if pos % 2 == 0 { acc + minor } else { acc - minor };
    }
    acc
}

/// Sylvester matrix of two polynomials in `x` given by their coefficient
/// lists (descending, formal degrees `len - 1`).
pub fn sylvester_matrix(a: &[MultiPoly], b: &[MultiPoly]) -> Result<PolyMatrix> {
    truncated_sylvester(a, b, 0)
}

/// Rows `x^{n-1-j-i} A` and `x^{m-1-j-i} B` restricted to their leading
/// `m + n - 2j` columns; `j = 0` is the full Sylvester matrix.
fn truncated_sylvester(a: &[MultiPoly], b: &[MultiPoly], j: usize) -> Result<PolyMatrix> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::OutOfRange("empty coefficient list".into()));
    }
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 && n == 0 {
        return Err(Error::OutOfRange("both inputs have formal degree zero".into()));
    }
    if j > m.min(n) || m + n == 2 * j {
        return Err(Error::OutOfRange(format!("subresultant index {j} out of range")));
    }
    let vars = a[0].vars().clone();
    let size = m + n - 2 * j;
    let mut entries = Vec::with_capacity(size * size);
    let mut push_rows = |coeffs: &[MultiPoly], count: usize| {
        for i in 0..count {
            for col in 0..size {
                let entry = col
                    .checked_sub(i)
                    .and_then(|t| coeffs.get(t))
                    .cloned()
                    .unwrap_or_else(|| MultiPoly::zero(&vars));
                entries.push(entry);
            }
        }
    };
    push_rows(a, n - j);
    push_rows(b, m - j);
    PolyMatrix::new(size, size, entries)
}

pub fn resultant(a: &[MultiPoly], b: &[MultiPoly]) -> Result<MultiPoly> {
    sylvester_matrix(a, b)?.determinant()
}

/// The `j`-th principal subresultant coefficient of `A` and `B`: the
/// determinant of the order `m + n - 2j` leading submatrix of the Sylvester
/// matrix with the last `j` rows of each block removed.
pub fn principal_subresultant(a: &[MultiPoly], b: &[MultiPoly], j: usize) -> Result<MultiPoly> {
    truncated_sylvester(a, b, j)?.determinant()
}

/// Table `c0, c1, ..., cn` for the generic polynomial of degree `n`.
pub fn coefficient_vars(n: usize) -> Vars {
    VarTable::new(VarTable::indexed("c", 0, n)).expect("distinct names")
}

/// Coefficient lists of the generic polynomial `c0 x^n + ... + cn` and of its
/// derivative.
pub fn generic_poly_and_derivative(vars: &Vars, n: usize) -> Result<(Vec<MultiPoly>, Vec<MultiPoly>)> {
    let p: Vec<MultiPoly> = (0..=n)
        .map(|i| MultiPoly::var(vars, &format!("c{i}")))
        .collect::<Result<_>>()?;
    let dp = p[..n]
        .iter()
        .enumerate()
        .map(|(i, c)| c.scale(&rational::int((n - i) as i64)))
        .collect();
    Ok((p, dp))
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::ScaleCap(format!("degree {n} exceeds the symbolic cap {cap}")))
    } else {
        Ok(())
    }
}

type DiscCache = RwLock<HashMap<usize, Arc<MultiPoly>>>;

fn disc_cache() -> &'static DiscCache {
    static CACHE: OnceLock<DiscCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `D = (-1)^{n(n-1)/2} res(p, p') / c0` for the generic polynomial of degree
/// `n` over the table `c0..cn`.
pub fn discriminant_symbolic(n: usize) -> Result<Arc<MultiPoly>> {
    discriminant_symbolic_capped(n, DEFAULT_SCALE_CAP)
}

pub fn discriminant_symbolic_capped(n: usize, cap: usize) -> Result<Arc<MultiPoly>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("discriminant needs degree >= 2, got {n}")));
    }
    check_cap(n, cap)?;
    if let Some(d) = disc_cache().read().expect("cache lock").get(&n) {
        return Ok(d.clone());
    }
    let vars = coefficient_vars(n);
    let (p, dp) = generic_poly_and_derivative(&vars, n)?;
    let res = resultant(&p, &dp)?;
    let c0 = MultiPoly::var(&vars, "c0")?;
    let d = res.exact_div(&c0)?.scale(&rational::sign_pow(n * (n - 1) / 2));
    let d = Arc::new(d);
    // concurrent fills compute the same value, so the first insert wins
    let mut cache = disc_cache().write().expect("cache lock");
    Ok(cache.entry(n).or_insert(d).clone())
}

/// The `j`-th principal subresultant coefficient of `(p, p')` for the generic
/// polynomial of degree `n`, as a polynomial in `c0..cn`.
pub fn subdiscriminant(n: usize, j: usize) -> Result<MultiPoly> {
    if n < 1 || j >= n {
        return Err(Error::OutOfRange(format!("subdiscriminant index {j} needs 0 <= j <= n-1 = {}", n.saturating_sub(1))));
    }
    check_cap(n, DEFAULT_SCALE_CAP)?;
    let vars = coefficient_vars(n);
    let (p, dp) = generic_poly_and_derivative(&vars, n)?;
    if n == 1 {
        // (p, p') = (c0 x + c1, c0): the only coefficient is c0
        return Ok(dp[0].clone());
    }
    principal_subresultant(&p, &dp, j)
}

/// Convenience: coefficient list of a univariate polynomial with constant
/// rational coefficients over `vars`.
pub fn constant_coeffs(vars: &Vars, coeffs: &[Rational]) -> Vec<MultiPoly> {
    coeffs.iter().map(|c| MultiPoly::constant(vars, c.clone())).collect()
}
