//! Exact computation of deformed monotone Hurwitz numbers, weighted dessin
//! counts and Grassmannian Weingarten functions, with brute-force oracles,
//! real-rootedness checks and a topological recursion engine.

pub mod appendix;
pub mod error;
pub mod exactalg;
pub mod hurwitz;
pub mod oracles;
pub mod roots;
pub mod scalar;
pub mod specrec;
pub mod symgroup;
pub mod weingarten;

pub use error::{Error, Result};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Polynomial in `t` (or any single variable) over `Q`.
pub type QPoly = exactalg::UniPoly<Rational>;
/// Rational function over `Q` in one variable.
pub type QRatFn = exactalg::RatFn<Rational>;
