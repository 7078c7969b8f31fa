//! Sylvester waves: evaluation from the exact coefficient tables, the wave
//! sum as the restricted partition function, top-order terms, and the
//! truncated closed-form comparisons for the first and second waves.
//!
//! The k-th wave collects the contribution of the denominators `(1-x^k)^l`:
//! expanding `x^h/(1-x^k)^l` and picking the coefficient of `x^n` (nonzero
//! only for `h = n mod k`) gives
//!
//! ```text
//!   W_k(n; N) = sum_{l=1}^{floor(N/k)} C(floor(n/k)+l-1, l-1)
//!                 * Gamma_{(n mod k),k,l}(N),
//! ```
//!
//! and `p_N(n) = sum_{k=1}^{N} W_k(n; N)` exactly, always an integer. All
//! binomials are exact big integers; values stay in the binomial basis and
//! are never expanded into monomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grsum::gamma_top_fast;
use crate::poly::Poly;
use crate::qpartial::{decompose, decompose_variant_k2, gamma_table, GammaTable, VariantK2Table};
use crate::rational::{binomial, factorial, rat, ratio, Rational};

/// `W_k(n; N)` from a Gamma table (either the full decomposition table or
/// the fast top-level one).
pub fn wave_eval(k: u32, n: u64, table: &GammaTable) -> Result<Rational> {
    let n_parts = table.n_parts();
    if k == 0 || k > n_parts {
        return Err(Error::OutOfRange(format!(
            "wave index must satisfy 1 <= k <= N, got k={k}, N={n_parts}"
        )));
    }
    let h = (n % k as u64) as u32;
    let q = n / k as u64;
    let mut acc = rat(0);
    for l in 1..=n_parts / k {
        let gamma = table.get(h, k, l);
        if gamma.is_zero() {
            continue;
        }
        let b = binomial(q + l as u64 - 1, l as u64 - 1);
        acc += gamma * BigRational::from_integer(b);
    }
    Ok(acc)
}

/// `p_N(n)` as the wave sum over `k = 1..=N`, asserting integrality.
pub fn partition_via_waves(n: u64, n_parts: u32) -> Result<BigInt> {
    let table = gamma_table(&decompose(n_parts)?);
    partition_via_waves_with(&table, n)
}

/// Wave sum against a prebuilt table (the table fixes `N`).
pub fn partition_via_waves_with(table: &GammaTable, n: u64) -> Result<BigInt> {
    let mut acc = rat(0);
    for k in 1..=table.n_parts() {
        acc += wave_eval(k, n, table)?;
    }
    if !acc.denom().is_one() {
        return Err(Error::NonIntegerWaveSum {
            n,
            max_part: table.n_parts(),
            value: crate::rational::to_string(&acc),
        });
    }
    Ok(acc.numer().clone())
}

/// Leading term of the k-th wave: the coefficients `Gamma_{(.)k floor(N/k)}`
/// per residue class of `n mod k` (from the sigma-table fast formula) and the
/// degree in `floor(n/k)` of the leading binomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveTopTerm {
    pub k: u32,
    pub n_parts: u32,
    /// Entry `r` applies when `n mod k = r`.
    pub coeffs_by_residue: Vec<Rational>,
    /// `floor(N/k) - 1`.
    pub degree: u32,
}

/// Top-order term of the k-th wave, straight from the Gaussian-Ramanujan
/// table (no polynomial work).
pub fn wave_top_term(k: u32, n_parts: u32) -> Result<WaveTopTerm> {
    if k == 0 || k > n_parts {
        return Err(Error::OutOfRange(format!(
            "wave index must satisfy 1 <= k <= N, got k={k}, N={n_parts}"
        )));
    }
    let mut coeffs = Vec::with_capacity(k as usize);
    for j in 0..k {
        coeffs.push(gamma_top_fast(j, k, n_parts)?);
    }
    Ok(WaveTopTerm {
        k,
        n_parts,
        coeffs_by_residue: coeffs,
        degree: n_parts / k - 1,
    })
}

/// `W_2(n; N)` in the `(1+x)^l` variant form:
/// `(-1)^n sum_l C(n+l-1, l-1) Gamma~_{02l}` — a single polynomial in `n`
/// times the alternating sign.
pub fn w2_closed_eval(n: u64, table: &VariantK2Table) -> Rational {
    let mut acc = rat(0);
    for l in 1..=table.levels() {
        let gamma = table.get(l);
        if gamma.is_zero() {
            continue;
        }
        acc += gamma * BigRational::from_integer(binomial(n + l as u64 - 1, l as u64 - 1));
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    acc
}

/// One computed-vs-displayed coefficient line of the truncation report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientComparison {
    pub computed: Rational,
    pub displayed: Rational,
    pub matches: bool,
}

impl CoefficientComparison {
    fn new(computed: Rational, displayed: Rational) -> Self {
        let matches = computed == displayed;
        CoefficientComparison {
            computed,
            displayed,
            matches,
        }
    }
}

/// Second-wave expansion data for one parity of `n`: the exact coefficients
/// `d_i` of `(-1)^n W_2` in the basis `C(floor(n/2)+M-1-i, M-1-i)` and the
/// normalized ratios `d_i/d_0` compared against the displayed `h_1`, `h_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct W2ParityExpansion {
    pub parity: u32,
    /// `d_0, d_1, d_2`.
    pub basis_coeffs: Vec<Rational>,
    /// `d_0 / (1/(2^N M!))`: how far the exact leading coefficient sits from
    /// the displayed prefactor.
    pub leading_over_prefactor: Rational,
    pub h1: CoefficientComparison,
    pub h2: CoefficientComparison,
}

/// Truncated-expansion comparisons of `W_1` and `W_2` against the displayed
/// closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationReport {
    pub n_parts: u32,
    /// First three `W_1` coefficients in the basis `C(t+N-1-i, N-1-i)`
    /// (computed entries are `Gamma_{01(N-i)}`), versus the displayed
    /// `1/N!`, `1/(2(N-2)!)`, `-(9N^2-11N-5)/(144(N-2)!)`.
    pub w1: Vec<CoefficientComparison>,
    pub w2_even: W2ParityExpansion,
    pub w2_odd: W2ParityExpansion,
    /// Exact leading coefficient of `(-1)^n W_2` as a polynomial in `n`
    /// (degree `M-1`): `Gamma~_{02M}/(M-1)!`.
    pub w2_leading_exact: Rational,
    /// Degree `M-1` of the exact leading term.
    pub w2_leading_degree: u32,
    /// The displayed top-order constant `1/(2^{M+1} M!)`, which is attached
    /// to exponent `M` in the display; printed for comparison, not forced.
    pub w2_displayed_top_constant: Rational,
    pub w2_displayed_top_exponent: u32,
}

/// `C(t + c, c)` as an exact polynomial in `t`.
fn binomial_basis_poly(c: u32) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=c as i64 {
        acc = &acc * &Poly::new(vec![rat(i), rat(1)]);
    }
    acc.scale(&BigRational::new(BigInt::one(), factorial(c as u64)))
}

/// Expresses `p` (degree < len of basis list) in the triangular basis
/// `C(s+M-1, M-1), C(s+M-2, M-2), ..., C(s, 0)`, returning `d_0..d_{M-1}`.
fn to_binomial_basis(p: &Poly, m: u32) -> Vec<Rational> {
    let mut rem = p.clone();
    let mut out = Vec::with_capacity(m as usize);
    for i in 0..m {
        let c = m - 1 - i;
        let basis = binomial_basis_poly(c);
        let d = rem.coeff(c as usize) * BigRational::from_integer(factorial(c as u64));
        rem = &rem - &basis.scale(&d);
        out.push(d);
    }
    debug_assert!(rem.is_zero());
    out
}

/// Substitutes `t -> 2s + r` into a polynomial in `t`.
fn substitute_affine(p: &Poly, scale: i64, offset: i64) -> Poly {
    let arg = Poly::new(vec![rat(offset), rat(scale)]);
    let mut acc = Poly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &arg) + &Poly::constant(c.clone());
    }
    acc
}

fn h1_displayed(n_parts: u32) -> Rational {
    let m = (n_parts / 2) as i64;
    if n_parts % 2 == 0 {
        ratio(3 * m * m, 4)
    } else {
        ratio(3 * m * m + 2 * m + 2, 4)
    }
}

fn h2_displayed(n_parts: u32) -> Rational {
    let m = (n_parts / 2) as i64;
    let common = ratio(m * m * m, 18) + ratio(5 * m * m, 12);
    if n_parts % 2 == 0 {
        common + ratio(m, 36)
    } else {
        common + ratio(19 * m, 36) + ratio(1, 4)
    }
}

fn w2_parity_expansion(
    variant: &VariantK2Table,
    parity: u32,
    n_parts: u32,
) -> W2ParityExpansion {
    let m = n_parts / 2;
    // R(t) = sum_l C(t+l-1, l-1) Gamma~_{02l}, the polynomial part of
    // (-1)^n W_2; restrict to the parity class via t = 2s + parity.
    let mut r_poly = Poly::zero();
    for l in 1..=m {
        r_poly = &r_poly + &binomial_basis_poly(l - 1).scale(&variant.get(l));
    }
    let p = substitute_affine(&r_poly, 2, parity as i64);
    let d = to_binomial_basis(&p, m);
    let prefactor = BigRational::new(
        BigInt::one(),
        BigInt::from(2).pow(n_parts) * factorial(m as u64),
    );
    let ratio1 = &d[1] / &d[0];
    let ratio2 = &d[2] / &d[0];
    W2ParityExpansion {
        parity,
        basis_coeffs: d.iter().take(3).cloned().collect(),
        leading_over_prefactor: &d[0] / &prefactor,
        h1: CoefficientComparison::new(ratio1, h1_displayed(n_parts)),
        h2: CoefficientComparison::new(ratio2, h2_displayed(n_parts)),
    }
}

/// Builds the full truncation report for `N >= 6`.
pub fn w1_w2_truncation_report(n_parts: u32) -> Result<TruncationReport> {
    if n_parts < 6 {
        return Err(Error::OutOfRange(
            "truncation report needs N >= 6".into(),
        ));
    }
    let table = gamma_table(&decompose(n_parts)?);
    let variant = decompose_variant_k2(n_parts)?;
    let m = n_parts / 2;

    let n_i64 = n_parts as i64;
    let fact_n_minus_2 = factorial(n_parts as u64 - 2);
    let w1_displayed = [
        BigRational::new(BigInt::one(), factorial(n_parts as u64)),
        BigRational::new(BigInt::one(), BigInt::from(2) * &fact_n_minus_2),
        BigRational::new(
            BigInt::from(-(9 * n_i64 * n_i64 - 11 * n_i64 - 5)),
            BigInt::from(144) * &fact_n_minus_2,
        ),
    ];
    let w1 = (0..3)
        .map(|i| {
            CoefficientComparison::new(
                table.get(0, 1, n_parts - i as u32),
                w1_displayed[i].clone(),
            )
        })
        .collect();

    let w2_even = w2_parity_expansion(&variant, 0, n_parts);
    let w2_odd = w2_parity_expansion(&variant, 1, n_parts);

    let leading_exact = variant.get(m)
        * BigRational::new(BigInt::one(), factorial(m as u64 - 1));
    let displayed_top = BigRational::new(
        BigInt::one(),
        BigInt::from(2).pow(m + 1) * factorial(m as u64),
    );

    Ok(TruncationReport {
        n_parts,
        w1,
        w2_even,
        w2_odd,
        w2_leading_exact: leading_exact,
        w2_leading_degree: m - 1,
        w2_displayed_top_constant: displayed_top,
        w2_displayed_top_exponent: m,
    })
}
