//! Arbitrary-precision rational scalars.
//!
//! `Rational` is the scalar everywhere in this crate: always in lowest terms,
//! denominator positive, arithmetic exact. It is backed by
//! [`num_rational::BigRational`], which maintains exactly those invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q` in lowest terms, or just `p` when `q == 1`.
pub fn to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a rational.
pub fn parse(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` for a possibly large `n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// True if the rational is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Roughly renders a rational as a fixed-point decimal string (display only).
pub fn approx_string(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (r * BigRational::from_integer(scale.clone())).round();
    let v = scaled.numer().clone();
    let neg = v.is_negative();
    let abs = v.magnitude().to_string();
    let abs = if abs.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - abs.len()), abs)
    } else {
        abs
    };
    let (int_part, frac_part) = abs.split_at(abs.len() - digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = ratio(4, -6);
        assert_eq!(to_string(&r), "-2/3");
        assert_eq!(to_string(&ratio(10, 5)), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7"] {
            let r = parse(s).unwrap();
            assert_eq!(to_string(&r), s);
        }
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(200, 1), BigInt::from(200));
    }

    #[test]
    fn approx_rendering() {
        assert_eq!(approx_string(&ratio(1, 4), 4), "0.2500");
        assert_eq!(approx_string(&ratio(-1, 3), 4), "-0.3333");
    }
}
