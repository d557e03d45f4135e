//! Seeded random test cases: multiplicity vectors, distinct rational roots and
//! leading coefficients, for cross-checking coefficient formulas against
//! root products.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dplus;
use crate::error::Result;
use crate::multiplicity::{all_partitions, MultiplicityVector};
use crate::rational::{self, Rational};
use crate::unipoly::UniPoly;

/// Generator used by every randomized check.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One polynomial given by its roots.
#[derive(Clone, Debug)]
pub struct RootCase {
    pub mu: MultiplicityVector,
    pub roots: Vec<Rational>,
    pub leading: Rational,
}

impl RootCase {
    pub fn polynomial(&self) -> Result<UniPoly> {
        dplus::build_poly_from_roots(&self.mu, &self.roots, &self.leading)
    }
}

/// Uniform over the partitions of a degree drawn uniformly from
/// `min_n..=max_n`, optionally restricted to at least `min_m` parts.
pub fn random_partition<R: Rng>(rng: &mut R, min_n: usize, max_n: usize, min_m: usize) -> MultiplicityVector {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let candidates: Vec<_> = all_partitions(n).into_iter().filter(|mu| mu.m() >= min_m).collect();
        if let Some(mu) = candidates.choose(rng) {
            return mu.clone();
        }
    }
}

/// `m` pairwise distinct rationals `p/q` with `|p| <= max_num` and
/// `1 <= q <= max_den`.
pub fn distinct_rationals<R: Rng>(rng: &mut R, m: usize, max_num: i64, max_den: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(m);
    while out.len() < m {
        let r = rational::frac(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Nonzero integer in `[-bound, bound]`.
pub fn nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Random partition of `n <= max_n`, rational roots with numerators and
/// denominators bounded by `max_entry`, nonzero integer leading coefficient
/// bounded by `max_leading`.
pub fn random_root_case<R: Rng>(rng: &mut R, max_n: usize, max_entry: i64, max_leading: i64) -> RootCase {
    let mu = random_partition(rng, 1, max_n, 1);
    let roots = distinct_rationals(rng, mu.m(), max_entry, max_entry);
    let leading = rational::int(nonzero_int(rng, max_leading));
    RootCase { mu, roots, leading }
}

/// Integer polynomial from rational roots: the leading coefficient is a
/// multiple of `prod q_j^{mu_j}` with absolute value at most `max_leading`.
pub fn random_integer_case<R: Rng>(rng: &mut R, max_n: usize, max_root: i64, max_den: i64, max_leading: i64) -> RootCase {
    loop {
        let mu = random_partition(rng, 1, max_n, 1);
        let roots = distinct_rationals(rng, mu.m(), max_root, max_den);
        let needed = roots
            .iter()
            .zip(mu.parts())
            .fold(BigInt::from(1), |acc, (r, &k)| acc * num_traits::pow(r.denom().clone(), k));
        let needed: i64 = match needed.try_into() {
            Ok(v) if v <= max_leading => v,
            _ => continue,
        };
        let k = nonzero_int(rng, max_leading / needed);
        let leading = rational::int(needed * k);
        return RootCase { mu, roots, leading };
    }
}
