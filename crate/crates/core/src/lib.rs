//! Exact computations for the maximal compact subalgebra `K` of a simply-laced
//! affine Kac-Moody algebra and its finite-dimensional parabolic quotients.
//!
//! Layers, bottom up:
//!
//! - [`lattice`]: root lattices of types A, D, E with a bimultiplicative cocycle.
//! - [`poly`]: sparse rational polynomials, Schur polynomials and generalized sums.
//! - [`algebra`] and [`basicrep`]: the finite and affine brackets, and the basic
//!   representation as lattice vectors tensored with Heisenberg polynomials.
//! - [`compact`]: `K` in the Ec/Hc basis, its action on the basic representation,
//!   H-Schur polynomials and the generating elements `F^H`.
//! - [`parabolic`]: the truncated parabolic algebras, the map `rho` onto them,
//!   the element `omega` and the extended Q-Schur polynomials.
//! - [`verq`]: the modules `Ver_Q(N)` and the projections `G_N` from the basic
//!   representation.
//! - [`verify`], [`report`] and [`cli`]: invariant suites and the command-line front end.
//!
//! All arithmetic is exact over `BigRational`.

pub mod algebra;
pub mod arith;
pub mod basicrep;
pub mod cli;
pub mod compact;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod parabolic;
pub mod poly;
pub mod report;
pub mod verify;
pub mod verq;
