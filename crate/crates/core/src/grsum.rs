//! Ramanujan sums and Gaussian-Ramanujan sums.
//!
//! The Gaussian-Ramanujan sum is the trigonometric sum
//!
//! ```text
//!   sigma_k(t; j) = sum_{xi in Delta_k} xi^{-t} (xi)_j,
//!   (xi)_j = prod_{i=1}^{j} (1 - xi^i),
//! ```
//!
//! over the primitive k-th roots of unity. It is always an integer, satisfies
//! the Pascal-style recurrence `sigma_k(t;j) = sigma_k(t;j-1) -
//! sigma_k(t-j;j-1)` seeded by the Ramanujan sums `c_k(t)`, and determines the
//! top-level q-partial fraction coefficients through
//!
//! ```text
//!   Gamma_{j,k,floor(N/k)}(N)
//!     = sigma_k(-j; k-1-(N%k)) / (k^{floor(N/k)+2} floor(N/k)!).
//! ```
//!
//! An independent sieved-sum oracle expands `x^{(-t)%k} prod (1-x^i)` modulo
//! `x^k - 1` and pairs the coefficients with Ramanujan sums, so the recurrence
//! can be cross-checked entry by entry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{divisors, moebius, totient};
use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

/// Ramanujan sum `c_k(t) = sum_{d | gcd(t, k)} d * mu(k/d)`; periodic and
/// even in `t`.
pub fn ramanujan_sum(k: u32, t: i64) -> BigInt {
    let t = t.rem_euclid(k as i64) as u32;
    let g = t.gcd(&k);
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        acc += BigInt::from(d) * moebius(k / d);
    }
    acc
}

/// The full `k x k` table of Gaussian-Ramanujan sums, entry `(t, j)` holding
/// `sigma_k(t; j)` for `0 <= t, j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    k: u32,
    /// Row-major: `values[t][j]`.
    values: Vec<Vec<BigInt>>,
}

impl SigmaTable {
    pub fn index(&self) -> u32 {
        self.k
    }

    /// `sigma_k(t; j)`; `t` is normalized mod k, `j` must be below k.
    pub fn get(&self, t: i64, j: u32) -> &BigInt {
        assert!(j < self.k, "column {} out of range for k={}", j, self.k);
        let t = t.rem_euclid(self.k as i64) as usize;
        &self.values[t][j as usize]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.values
    }
}

/// Builds the table by the recurrence, seeded with Ramanujan sums in the
/// `j = 0` column. O(k^2) integer operations.
pub fn sigma_table(k: u32) -> SigmaTable {
    assert!(k >= 1, "sigma table needs k >= 1");
    let n = k as usize;
    let mut values = vec![vec![BigInt::zero(); n]; n];
    for (t, row) in values.iter_mut().enumerate() {
        row[0] = ramanujan_sum(k, t as i64);
    }
    for j in 1..n {
        for t in 0..n {
            let prev = values[t][j - 1].clone();
            let shifted = (t + n - j % n) % n;
            let minus = values[shifted][j - 1].clone();
            values[t][j] = prev - minus;
        }
    }
    SigmaTable { k, values }
}

/// Independent oracle: expands `x^{(-t) mod k} * prod_{i=1}^{j} (1 - x^i)`
/// reduced modulo `x^k - 1` and returns `sum_s a_s c_k(s)`.
pub fn sigma_sieved(k: u32, t: i64, j: u32) -> Result<BigInt> {
    if j >= k {
        return Err(Error::OutOfRange(format!(
            "sieved sum needs j < k, got j={j}, k={k}"
        )));
    }
    let n = k as usize;
    let shift = (-t).rem_euclid(k as i64) as usize;
    // Coefficient vector of the product, exponents taken mod k as we go.
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs[shift] = BigInt::one();
    for i in 1..=j as usize {
        let mut next = vec![BigInt::zero(); n];
        for (s, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[s] += c;
            next[(s + i) % n] -= c;
        }
        coeffs = next;
    }
    let mut acc = BigInt::zero();
    for (s, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc += c * ramanujan_sum(k, s as i64);
        }
    }
    Ok(acc)
}

/// Full table by the sieved route, sharing the incremental q-product across
/// rows: one `prod (1-x^i) mod (x^k - 1)` per column, then each row pairs a
/// rotation of it with Ramanujan sums. O(k^3) integer operations, against
/// O(k^2) for the recurrence.
pub fn sigma_sieved_table(k: u32) -> SigmaTable {
    assert!(k >= 1, "sigma table needs k >= 1");
    let n = k as usize;
    let c: Vec<BigInt> = (0..n).map(|s| ramanujan_sum(k, s as i64)).collect();
    let mut values = vec![vec![BigInt::zero(); n]; n];
    // coefficients of prod_{i<=j}(1 - x^i) mod x^k - 1, updated per column
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs[0] = BigInt::one();
    for j in 0..n {
        if j > 0 {
            let mut next = vec![BigInt::zero(); n];
            for (s, v) in coeffs.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                next[s] += v;
                next[(s + j) % n] -= v;
            }
            coeffs = next;
        }
        for t in 0..n {
            // x^{(-t)%k} * prod: rotate exponents by (-t) and pair with c
            let mut acc = BigInt::zero();
            for (s, v) in coeffs.iter().enumerate() {
                if !v.is_zero() {
                    acc += v * &c[(s + n - t) % n];
                }
            }
            values[t][j] = acc;
        }
    }
    SigmaTable { k, values }
}

/// Outcome of checking the elementary magnitude bounds on one table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaBoundsReport {
    pub k: u32,
    /// `|sigma_k(t;0)| <= phi(k)`
    pub column_zero: bool,
    /// `|sigma_k(t;1)| <= 2 phi(k)` (vacuous for k = 1)
    pub column_one: bool,
    /// `|sigma_k(t;k-1)| <= k phi(k)`
    pub column_last: bool,
    /// `|sigma_k(t;k-2)| <= k^2 (k-1) phi(k) / 2` (vacuous for k = 1)
    pub column_second_last: bool,
}

impl SigmaBoundsReport {
    pub fn all_pass(&self) -> bool {
        self.column_zero && self.column_one && self.column_last && self.column_second_last
    }
}

/// Verifies the four magnitude bounds for every `t` in the table.
pub fn sigma_bounds_check(table: &SigmaTable) -> SigmaBoundsReport {
    let k = table.k;
    let phi = BigInt::from(totient(k));
    let within = |j: u32, bound: &BigInt| -> bool {
        (0..k as i64).all(|t| table.get(t, j).abs() <= *bound)
    };
    let kk = BigInt::from(k);
    SigmaBoundsReport {
        k,
        column_zero: within(0, &phi),
        column_one: k < 2 || within(1, &(BigInt::from(2) * &phi)),
        column_last: within(k - 1, &(&kk * &phi)),
        column_second_last: k < 2 || {
            let bound = (&kk * &kk * BigInt::from(k - 1) * &phi) / BigInt::from(2);
            within(k - 2, &bound)
        },
    }
}

/// Top-level coefficient `Gamma_{j,k,floor(N/k)}(N)` straight from the sigma
/// table, without any polynomial work.
pub fn gamma_top_fast(j: u32, k: u32, n_parts: u32) -> Result<Rational> {
    if k == 0 || k > n_parts {
        return Err(Error::OutOfRange(format!(
            "gamma_top_fast needs 1 <= k <= N, got k={k}, N={n_parts}"
        )));
    }
    if j >= k {
        return Err(Error::OutOfRange(format!(
            "gamma_top_fast needs 0 <= j < k, got j={j}, k={k}"
        )));
    }
    let l = (n_parts / k) as u64;
    let table = sigma_table(k);
    let sigma = table.get(-(j as i64), k - 1 - (n_parts % k));
    let denom = BigInt::from(k).pow(l as u32 + 2) * factorial(l);
    Ok(BigRational::new(sigma.clone(), denom))
}
