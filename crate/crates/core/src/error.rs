//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    #[error("zero divisor")]
    ZeroDivisor,

    /// Extended gcd of two zero polynomials.
    #[error("gcd of two zero polynomials")]
    BothZero,

    /// Taylor expansion requested at a zero of the denominator.
    #[error("pole at expansion center")]
    PoleAtCenter,

    /// The eval operator needs the denominator coprime to the modulus.
    #[error("eval undefined: shared factor")]
    SharedFactor,

    /// Cover-up expects the numerator degree below the denominator degree.
    #[error("degree violation: numerator degree {num} >= denominator degree {den}")]
    DegreeViolation { num: usize, den: usize },

    /// Inversion of zero in a cyclotomic field.
    #[error("zero is not invertible")]
    ZeroInverse,

    /// Degenerate series with the wrong parity of m for the chosen center.
    #[error("parity violation: {0}")]
    Parity(String),

    /// An index or argument outside the documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// A wave sum that should be an integer was not; the tables are corrupt.
    #[error("internal consistency failure: wave sum for n={n}, N={max_part} is not an integer ({value})")]
    NonIntegerWaveSum {
        n: u64,
        max_part: u32,
        value: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
