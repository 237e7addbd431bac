//! Exact algebra: polynomials, rational functions, truncated series and
//! bivariate rational functions in `M`, `N`.

pub mod bivariate;
pub mod expr;
pub mod largen;
pub mod linalg;
pub mod poly;
pub mod ratfn;
pub mod series;

pub use bivariate::{BiPoly, MNRational};
pub use expr::{parse_mn, parse_mn_poly};
pub use largen::large_n_expand;
pub use linalg::solve_linear;
pub use poly::UniPoly;
pub use ratfn::RatFn;
pub use series::{Laurent, TruncSeries};
