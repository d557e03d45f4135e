//! Exact D-plus discriminants of polynomials with multiple roots.
//!
//! For a polynomial with distinct roots `r_1..r_m` of multiplicities
//! `mu_1 >= ... >= mu_m`, the D-plus discriminant is
//! `prod_{i<j} (r_i - r_j)^{mu_i + mu_j}`. It never vanishes, and it is a
//! rational function of the coefficients: `H_{n,m}(z) / C_mu` evaluated at
//! `z_i = (-1)^i a_i / a_0`, where `H_{n,m}` comes from the
//! `(n - m)`-th derivative of the generic discriminant with respect to its
//! constant coefficient.

pub mod bounds;
pub mod cli;
pub mod dplus;
pub mod error;
pub mod gist;
pub mod multiplicity;
pub mod multipoly;
pub mod parse;
pub mod poisson;
pub mod rational;
pub mod resultant;
pub mod sampling;
pub mod unipoly;

pub use error::{Error, Result};
pub use multiplicity::MultiplicityVector;
pub use multipoly::{Degree, Monomial, MultiPoly, VarTable, Vars};
pub use rational::Rational;
pub use unipoly::UniPoly;
