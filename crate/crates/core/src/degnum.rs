//! Exact Taylor data of the degenerate Bernoulli and Euler generating
//! functions, and the sum-of-products closed forms for the first and second
//! wave coefficients.
//!
//! The canonical objects here are *raw* coefficient sequences of four exact
//! rational functions, expanded about `x = 1` in powers of `(1 - x)` or about
//! `x = -1` in powers of `(1 + x)`:
//!
//! ```text
//!   bernoulli/+1:  m(1-x)/(1-x^m) = m/Psi_m      t_0 = 1, t_1 = (m-1)/2
//!   euler/+1:      2/(1+x^m)                     t_0 = 1
//!   euler/-1:      2/(1-x^m)        (m odd)      t_0 = 1
//!   bernoulli/-1:  m(1+x)/(1-x^m)   (m even)     t_0 = 1
//! ```
//!
//! The displayed degenerate-number symbols differ from these by signs and
//! factorials depending on the convention; the raw coefficients are
//! unambiguous and are what the wave closed forms consume. The first-wave
//! column is
//!
//! ```text
//!   Gamma_{01(N-j)}(N) = (1/N!) [u^j] prod_{i=2}^{N} S_i(u)
//! ```
//!
//! with `S_i` the bernoulli/+1 series of `i/Psi_i`, and the second-wave
//! variant column is the analogous product over euler/-1 (odd factors) and
//! bernoulli/-1 (even factors) series about `x = -1`, whose constant terms
//! telescope to `1/(2^N floor(N/2)!)`. Both products reproduce the
//! decomposition tables exactly, which is how the conventions are pinned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::{one_minus_x_pow, psi};
use crate::error::{Error, Result};
use crate::poly::{poly_divrem, taylor_coeffs, Poly};
use crate::rational::{factorial, rat, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegKind {
    Bernoulli,
    Euler,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    PlusOne,
    MinusOne,
}

/// Raw Taylor coefficient sequence of one degenerate generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegSeries {
    pub kind: DegKind,
    pub center: Center,
    pub m: u32,
    /// `t_0, t_1, ...` in powers of `(1-x)` (center +1) or `(1+x)`
    /// (center -1).
    pub coeffs: Vec<Rational>,
}

/// Raw series of the chosen generating function to `order` terms.
pub fn deg_series(kind: DegKind, center: Center, m: u32, order: usize) -> Result<DegSeries> {
    if m == 0 {
        return Err(Error::OutOfRange("deg_series needs m >= 1".into()));
    }
    let coeffs = match (kind, center) {
        (DegKind::Bernoulli, Center::PlusOne) => {
            // m / Psi_m about 1, re-expressed in powers of (1 - x)
            flip_signs(taylor_coeffs(
                &Poly::constant(rat(m as i64)),
                &psi(m)?,
                &rat(1),
                order,
            )?)
        }
        (DegKind::Euler, Center::PlusOne) => {
            let mut den = vec![0i64; m as usize + 1];
            den[0] = 1;
            den[m as usize] = 1;
            flip_signs(taylor_coeffs(
                &Poly::from_ints(&[2]),
                &Poly::from_ints(&den),
                &rat(1),
                order,
            )?)
        }
        (DegKind::Euler, Center::MinusOne) => {
            if m % 2 == 0 {
                return Err(Error::Parity(format!(
                    "euler series about -1 needs odd m, got m={m}"
                )));
            }
            taylor_coeffs(
                &Poly::from_ints(&[2]),
                &one_minus_x_pow(m),
                &rat(-1),
                order,
            )?
        }
        (DegKind::Bernoulli, Center::MinusOne) => {
            if m % 2 == 1 {
                return Err(Error::Parity(format!(
                    "bernoulli series about -1 needs even m, got m={m}"
                )));
            }
            // cancel the simple zero: (1 - x^m)/(1 + x) is exact for even m
            let (den, r) = poly_divrem(&one_minus_x_pow(m), &Poly::from_ints(&[1, 1]))?;
            debug_assert!(r.is_zero());
            taylor_coeffs(&Poly::constant(rat(m as i64)), &den, &rat(-1), order)?
        }
    };
    Ok(DegSeries {
        kind,
        center,
        m,
        coeffs,
    })
}

/// Converts `(x-1)^k` coefficients into `(1-x)^k` coefficients.
fn flip_signs(mut coeffs: Vec<Rational>) -> Vec<Rational> {
    for (i, c) in coeffs.iter_mut().enumerate() {
        if i % 2 == 1 {
            *c = -c.clone();
        }
    }
    coeffs
}

/// Truncated product of coefficient sequences.
fn series_product(factors: &[Vec<Rational>], order: usize) -> Vec<Rational> {
    let mut acc = vec![rat(0); order];
    if order == 0 {
        return acc;
    }
    acc[0] = rat(1);
    for f in factors {
        let mut next = vec![rat(0); order];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in f.iter().enumerate() {
                if i + j >= order {
                    break;
                }
                if !b.is_zero() {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }
    acc
}

/// First-wave column `Gamma_{01l}(N)` for `l = 1..=N` (index `l-1`), via one
/// truncated series product rather than a sum over compositions.
pub fn w1_coeffs(n_parts: u32) -> Result<Vec<Rational>> {
    if n_parts == 0 {
        return Err(Error::OutOfRange("w1_coeffs needs N >= 1".into()));
    }
    let order = n_parts as usize;
    let mut factors = Vec::new();
    for i in 2..=n_parts {
        factors.push(deg_series(DegKind::Bernoulli, Center::PlusOne, i, order)?.coeffs);
    }
    let prod = series_product(&factors, order);
    let scale = BigRational::new(BigInt::one(), factorial(n_parts as u64));
    // entry l corresponds to j = N - l
    let mut out = vec![rat(0); order];
    for (j, c) in prod.into_iter().enumerate() {
        out[order - 1 - j] = c * &scale;
    }
    Ok(out)
}

/// Raw factor for the second-wave product: the series about `x = -1` of
/// `1/(1-x^m)` for odd `m` (euler route, scaled by 1/2) or of
/// `(1+x)/(1-x^m)` for even `m` (bernoulli route, scaled by 1/m).
pub fn w2_factor(m: u32, order: usize) -> Result<Vec<Rational>> {
    if m % 2 == 1 {
        let s = deg_series(DegKind::Euler, Center::MinusOne, m, order)?;
        Ok(s.coeffs.into_iter().map(|c| c * ratio(1, 2)).collect())
    } else {
        let s = deg_series(DegKind::Bernoulli, Center::MinusOne, m, order)?;
        let inv_m = ratio(1, m as i64);
        Ok(s.coeffs.into_iter().map(|c| c * &inv_m).collect())
    }
}

/// Second-wave variant column `Gamma~_{02l}(N)` for `l = 1..=floor(N/2)`
/// (index `l-1`), as the truncated product of the per-part factors.
pub fn w2_coeffs(n_parts: u32) -> Result<Vec<Rational>> {
    w2_coeffs_extended(n_parts, (n_parts / 2) as usize).map(|(table, _)| table)
}

/// Like [`w2_coeffs`] but also returns the raw product series to `order`
/// terms (useful for recurrence checks that look past the stored table).
fn w2_coeffs_extended(n_parts: u32, order: usize) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if n_parts < 2 {
        return Err(Error::OutOfRange("w2_coeffs needs N >= 2".into()));
    }
    let m = (n_parts / 2) as usize;
    let order = order.max(m);
    let mut factors = Vec::new();
    for i in 1..=n_parts {
        factors.push(w2_factor(i, order)?);
    }
    let prod = series_product(&factors, order);
    let mut out = vec![rat(0); m];
    for j in 0..m {
        out[m - 1 - j] = prod[j].clone();
    }
    Ok((out, prod))
}

/// Checks the first-wave recurrence linking `N` and `N+1`:
///
/// ```text
///   Gamma_{01(N+1-i)}(N+1)
///     = (1/(N+1)) sum_{k=0}^{i} t_k(N+1) Gamma_{01(N-i+k)}(N)
/// ```
///
/// for every `i` whose right side stays inside the `N` table.
pub fn w1_recurrence_check(n_parts: u32) -> Result<bool> {
    let cur = w1_coeffs(n_parts)?;
    let next = w1_coeffs(n_parts + 1)?;
    let t = deg_series(
        DegKind::Bernoulli,
        Center::PlusOne,
        n_parts + 1,
        n_parts as usize + 1,
    )?
    .coeffs;
    let inv = ratio(1, n_parts as i64 + 1);
    for i in 0..n_parts as usize {
        let mut acc = rat(0);
        for k in 0..=i {
            // Gamma_{01(N-(i-k))}(N) sits at index N-(i-k)-1
            acc += &t[k] * &cur[n_parts as usize - 1 - (i - k)];
        }
        let lhs = &next[n_parts as usize - i]; // l = (N+1) - i, index l-1
        if *lhs != acc * &inv {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the second-wave recurrence linking `N` and `N+1` in raw-series
/// form: `Gamma~_{02(M1-i)}(N+1) = sum_k T_{N+1}[k] Gamma~_{02(M0-(i-k))}(N)`
/// for every `i` whose right side stays inside the `N` table.
pub fn w2_recurrence_check(n_parts: u32) -> Result<bool> {
    if n_parts < 2 {
        return Err(Error::OutOfRange("w2_recurrence_check needs N >= 2".into()));
    }
    let m0 = (n_parts / 2) as usize;
    let m1 = n_parts.div_ceil(2) as usize;
    let cur = w2_coeffs(n_parts)?;
    let next = w2_coeffs(n_parts + 1)?;
    let t = w2_factor(n_parts + 1, m1)?;
    for i in 0..m0.min(m1) {
        let mut acc = rat(0);
        for k in 0..=i {
            acc += &t[k] * &cur[m0 - 1 - (i - k)];
        }
        if next[m1 - 1 - i] != acc {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpartial::{decompose, decompose_variant_k2, gamma_table};

    #[test]
    fn bernoulli_plus_one_small() {
        // 2(1-x)/(1-x^2) = 2/(1+x) = sum ((1-x)/2)^k: raw [1, 1/2, 1/4]
        let s = deg_series(DegKind::Bernoulli, Center::PlusOne, 2, 3).unwrap();
        assert_eq!(s.coeffs, vec![rat(1), ratio(1, 2), ratio(1, 4)]);
    }

    #[test]
    fn bernoulli_first_coefficients_for_all_m() {
        for m in 1..=10u32 {
            let s = deg_series(DegKind::Bernoulli, Center::PlusOne, m, 3).unwrap();
            assert_eq!(s.coeffs[0], rat(1), "t_0 for m={m}");
            assert_eq!(s.coeffs[1], ratio(m as i64 - 1, 2), "t_1 for m={m}");
            // coefficient of (1-x)^2 equals the displayed beta~_2 value
            assert_eq!(
                s.coeffs[2],
                ratio((m as i64) * (m as i64) - 1, 12),
                "t_2 for m={m}"
            );
        }
    }

    #[test]
    fn euler_plus_one_m1() {
        // 2/(1+x) about 1 again: [1, 1/2]
        let s = deg_series(DegKind::Euler, Center::PlusOne, 1, 2).unwrap();
        assert_eq!(s.coeffs, vec![rat(1), ratio(1, 2)]);
    }

    #[test]
    fn all_variants_start_at_one() {
        for m in 1..=9u32 {
            assert!(deg_series(DegKind::Bernoulli, Center::PlusOne, m, 1).unwrap().coeffs[0].is_one());
            assert!(deg_series(DegKind::Euler, Center::PlusOne, m, 1).unwrap().coeffs[0].is_one());
            if m % 2 == 1 {
                assert!(deg_series(DegKind::Euler, Center::MinusOne, m, 1).unwrap().coeffs[0].is_one());
            } else {
                assert!(deg_series(DegKind::Bernoulli, Center::MinusOne, m, 1).unwrap().coeffs[0].is_one());
            }
        }
    }

    #[test]
    fn parity_violations_error() {
        assert!(matches!(
            deg_series(DegKind::Euler, Center::MinusOne, 4, 2),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            deg_series(DegKind::Bernoulli, Center::MinusOne, 3, 2),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn w1_small_tables() {
        assert_eq!(w1_coeffs(1).unwrap(), vec![rat(1)]);
        assert_eq!(w1_coeffs(2).unwrap(), vec![ratio(1, 4), ratio(1, 2)]);
        let w3 = w1_coeffs(3).unwrap();
        assert_eq!(w3[2], ratio(1, 6)); // Gamma_{013}(3) = 1/3!
        assert_eq!(w3, vec![ratio(17, 72), ratio(1, 4), ratio(1, 6)]);
    }

    #[test]
    fn w1_leading_is_inverse_factorial() {
        for n in 1..=12u32 {
            let w = w1_coeffs(n).unwrap();
            let expect = BigRational::new(BigInt::one(), factorial(n as u64));
            assert_eq!(w[n as usize - 1], expect, "N={n}");
        }
    }

    #[test]
    fn w1_matches_decomposition() {
        for n in 1..=8u32 {
            let table = gamma_table(&decompose(n).unwrap());
            let w = w1_coeffs(n).unwrap();
            for l in 1..=n {
                assert_eq!(w[l as usize - 1], table.get(0, 1, l), "N={n}, l={l}");
            }
        }
    }

    #[test]
    fn w2_small_tables() {
        assert_eq!(w2_coeffs(2).unwrap(), vec![ratio(1, 4)]);
        // N=3 single entry equals the variant decomposition
        assert_eq!(
            w2_coeffs(3).unwrap(),
            decompose_variant_k2(3).unwrap().entries().to_vec()
        );
    }

    #[test]
    fn w2_leading_telescopes() {
        for n in 2..=14u32 {
            let w = w2_coeffs(n).unwrap();
            let m = (n / 2) as u64;
            let expect = BigRational::new(BigInt::one(), BigInt::from(2).pow(n) * factorial(m));
            assert_eq!(w[m as usize - 1], expect, "N={n}");
        }
    }

    #[test]
    fn w2_matches_variant_decomposition() {
        for n in 2..=8u32 {
            assert_eq!(
                w2_coeffs(n).unwrap(),
                decompose_variant_k2(n).unwrap().entries().to_vec(),
                "N={n}"
            );
        }
    }

    #[test]
    fn w1_recurrence_small() {
        for n in [1u32, 2, 5] {
            assert!(w1_recurrence_check(n).unwrap(), "N={n}");
        }
    }

    #[test]
    fn w2_recurrence_small() {
        for n in [2u32, 3, 6] {
            assert!(w2_recurrence_check(n).unwrap(), "N={n}");
        }
    }
}
