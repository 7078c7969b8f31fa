//! Independent ground truth: restricted partition counts by dynamic
//! programming, direct power-series expansion of `F_N`, and reconstruction
//! checking for decompositions.
//!
//! Nothing here touches the eval operator or the cyclotomic machinery, so a
//! decomposition that survives `verify_reconstruction` has been checked
//! against an entirely separate computation path.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::one_minus_x_pow;
use crate::poly::{poly_divrem, Poly};
use crate::qpartial::QPFDecomposition;
use crate::rational::{rat, Rational};

/// Restricted partition counts `p_N(n)` for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    max_part: u32,
    counts: Vec<BigInt>,
}

impl PartitionTable {
    pub fn max_part(&self) -> u32 {
        self.max_part
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.counts[n]
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

/// Coin-style DP: add parts `1..=N` successively; integer arithmetic only.
pub fn p_dp(max_part: u32, n_max: usize) -> PartitionTable {
    let mut counts = vec![BigInt::zero(); n_max + 1];
    counts[0] = BigInt::one();
    for part in 1..=max_part as usize {
        for n in part..=n_max {
            let add = counts[n - part].clone();
            counts[n] += add;
        }
    }
    PartitionTable { max_part, counts }
}

/// First `t` power-series coefficients of `F_N = 1/prod_{k<=N}(1-x^k)` by
/// truncated series inversion.
pub fn series_of_fn(max_part: u32, t: usize) -> Vec<Rational> {
    // Truncated product of the denominator, then series inversion.
    let mut den = vec![rat(0); t.max(1)];
    den[0] = rat(1);
    for k in 1..=max_part as usize {
        if k >= t {
            break;
        }
        // multiply by (1 - x^k), truncated
        for i in (k..t).rev() {
            let sub = den[i - k].clone();
            den[i] -= sub;
        }
    }
    let mut out = vec![rat(0); t];
    if t == 0 {
        return out;
    }
    out[0] = rat(1);
    for n in 1..t {
        let mut acc = rat(0);
        for j in 1..=n {
            if !den[j].is_zero() {
                acc += &den[j] * &out[n - j];
            }
        }
        out[n] = -acc;
    }
    out
}

/// Detailed outcome of a reconstruction check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionCheck {
    pub passed: bool,
    /// Exponent and (series, expected) values of the first failing series
    /// coefficient, if the cheap gate failed.
    pub first_mismatch: Option<(usize, String, String)>,
}

/// Number of leading series coefficients compared before the full
/// polynomial-identity check.
pub const SERIES_GATE_TERMS: usize = 200;

/// Verifies that a decomposition reproduces `F_N` exactly. Runs a term-by-term
/// series comparison first (fails fast with a witness exponent), then clears
/// denominators and checks the exact polynomial identity
/// `sum_{k,l} g_{kl} * prod_j (1-x^j) / (1-x^k)^l = 1`.
pub fn verify_reconstruction(d: &QPFDecomposition) -> ReconstructionCheck {
    let n_parts = d.n_parts();
    let t = SERIES_GATE_TERMS;
    let expect = series_of_fn(n_parts, t);

    // Cheap gate: expand each term to `t` coefficients and accumulate.
    let mut series = vec![rat(0); t];
    for (k, l, g) in d.terms() {
        let k = k as usize;
        // 1/(1-x^k)^l = sum_j C(j+l-1, l-1) x^{jk}
        let mut weights = vec![rat(0); t];
        let mut binom = rat(1); // C(j+l-1, l-1) built incrementally
        let mut j = 0usize;
        while j * k < t {
            weights[j * k] = binom.clone();
            binom = binom * rat((j + l as usize) as i64) / rat((j + 1) as i64);
            j += 1;
        }
        for (i, c) in g.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for jj in 0..t {
                if !weights[jj].is_zero() && i + jj < t {
                    let add = c * &weights[jj];
                    series[i + jj] += add;
                }
            }
        }
    }
    for n in 0..t {
        if series[n] != expect[n] {
            return ReconstructionCheck {
                passed: false,
                first_mismatch: Some((
                    n,
                    crate::rational::to_string(&series[n]),
                    crate::rational::to_string(&expect[n]),
                )),
            };
        }
    }

    // Full identity: sum over terms of g_{kl} * P/(1-x^k)^l == 1 where
    // P = prod_{j<=N} (1-x^j). Each division is exact because l <= floor(N/k).
    let mut product = Poly::one();
    for j in 1..=n_parts {
        product = &product * &one_minus_x_pow(j);
    }
    let mut sum = Poly::zero();
    for (k, l, g) in d.terms() {
        let den = one_minus_x_pow(k).pow(l);
        let (q, r) = poly_divrem(&product, &den).expect("nonzero denominator");
        if !r.is_zero() {
            return ReconstructionCheck {
                passed: false,
                first_mismatch: None,
            };
        }
        sum = &sum + &(g * &q);
    }
    ReconstructionCheck {
        passed: sum.is_one(),
        first_mismatch: None,
    }
}
