//! Polynomial rings: a generic sparse multivariate ring, the Heisenberg-mode
//! polynomials with their Schur polynomials, and univariate polynomials used
//! for interpolation and generalized sums.

mod indexed;
mod sparse;
mod univariate;

pub use indexed::{
    coeff_of, colored_partition_count, heisenberg_mode, mode, monomials_of_weight, schur,
    schur_table, HVar, IndexedPoly,
};
pub use sparse::{Monomial, Poly, Weighted};
pub use univariate::{gsum, gsum_polynomial, IntPolynomial};
