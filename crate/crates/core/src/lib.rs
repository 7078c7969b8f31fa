//! Exact computer algebra for the q-partial fraction decomposition of the
//! restricted partition generating function
//!
//! ```text
//!   F_N(x) = 1 / prod_{k=1}^{N} (1 - x^k)
//!          = sum_{k=1}^{N} sum_{l=1}^{floor(N/k)} g_{kl}(x) / (1 - x^k)^l
//! ```
//!
//! with numerators `g_{kl}` of degree < k over the rationals. From the tables
//! of coefficients `Gamma_{hkl}(N)` the crate evaluates the Sylvester waves
//! `W_k(n; N)` (quasi-polynomial components of the restricted partition
//! function `p_N(n)`), the Gaussian-Ramanujan sums `sigma_k(t; j)`, degenerate
//! Bernoulli/Euler coefficient series for the first and second waves, and
//! exact top-multiplicity Rademacher coefficients in cyclotomic fields.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, tables are
//! arbitrary-precision integers, and every major result can be re-verified
//! against an independent oracle (`oracle` module).

pub mod cyclofield;
pub mod cyclotomic;
pub mod degnum;
pub mod error;
pub mod evalop;
pub mod grsum;
pub mod oracle;
pub mod poly;
pub mod qpartial;
pub mod rational;
pub mod waves;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::Rational;
