//! Cyclotomic polynomials and fast monomial remainders.
//!
//! Sign convention: `Phi_1 = 1 - x` and `Phi_d` for `d > 1` is the standard
//! monic cyclotomic polynomial. This is the unique choice under which
//!
//! ```text
//!   1 - x^n = prod_{d | n} Phi_d(x)
//! ```
//!
//! holds exactly, which is what the generating-function factorization needs.
//! `Theta_n` is the inverse cyclotomic polynomial (`Theta_n * Phi_n = 1 - x^n`)
//! and `Psi_m = (1 - x^m)/(1 - x)` is the all-ones polynomial.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{poly_divrem, poly_xgcd, Poly};
use crate::rational::rat;

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `1 - x^n`.
pub fn one_minus_x_pow(n: u32) -> Poly {
    let mut coeffs = vec![rat(0); n as usize + 1];
    coeffs[0] = rat(1);
    coeffs[n as usize] = rat(-1);
    Poly::new(coeffs)
}

fn cache() -> &'static Mutex<HashMap<u32, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, memoized. Computed by exact division of
/// `1 - x^n` by the proper-divisor cyclotomics.
pub fn cyclotomic(n: u32) -> Result<Poly> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclotomic index must be >= 1".into()));
    }
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let result = if n == 1 {
        Poly::from_ints(&[1, -1])
    } else {
        let mut quot = one_minus_x_pow(n);
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic(d)?;
                let (q, r) = poly_divrem(&quot, &phi_d)?;
                debug_assert!(r.is_zero());
                quot = q;
            }
        }
        quot
    };
    cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| result.clone());
    Ok(result)
}

/// Inverse cyclotomic polynomial `Theta_n = (1 - x^n) / Phi_n`.
pub fn inverse_cyclotomic(n: u32) -> Result<Poly> {
    let phi = cyclotomic(n)?;
    let (q, r) = poly_divrem(&one_minus_x_pow(n), &phi)?;
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `Psi_m(x) = 1 + x + ... + x^{m-1}`.
pub fn psi(m: u32) -> Result<Poly> {
    if m == 0 {
        return Err(Error::OutOfRange("psi index must be >= 1".into()));
    }
    Ok(Poly::new(vec![rat(1); m as usize]))
}

/// `x^k rem Phi_m`, reducing `k` mod `m` first; for even `m = 2n` the extra
/// sign rule `x^{k+n} = -x^k (mod Phi_{2n})` is applied before dividing.
pub fn monomial_rem_cyclotomic(k: u64, m: u32) -> Result<Poly> {
    if m == 0 {
        return Err(Error::OutOfRange("modulus index must be >= 1".into()));
    }
    let mut r = (k % m as u64) as usize;
    let mut sign = rat(1);
    if m % 2 == 0 {
        let half = (m / 2) as usize;
        if r >= half {
            r -= half;
            sign = rat(-1);
        }
    }
    let phi = cyclotomic(m)?;
    let (_, rem) = poly_divrem(&Poly::monomial(sign, r), &phi)?;
    Ok(rem)
}

/// `x^k rem (1 - x^m) = x^{k mod m}`.
pub fn monomial_rem_binomial(k: u64, m: u32) -> Poly {
    Poly::monomial(rat(1), (k % m as u64) as usize)
}

/// `p rem (1 - x^m)`, by folding every exponent modulo `m`.
pub fn rem_one_minus_x_pow(p: &Poly, m: u32) -> Poly {
    let m = m as usize;
    let mut coeffs = vec![rat(0); m];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[i % m] += c;
    }
    Poly::new(coeffs)
}

/// Bezout cofactors `(u, v)` with `u*Phi_m + v*Phi_n = 1` for `m < n`, built
/// from the closed-form cases (m | n and m not | n). The identity is verified
/// by multiplication before returning; if the closed form does not survive the
/// `Phi_1 = 1 - x` sign convention the extended gcd supplies the pair instead.
pub fn dresden_bezout(m: u32, n: u32) -> Result<(Poly, Poly)> {
    if m >= n {
        return Err(Error::OutOfRange(format!(
            "dresden_bezout requires m < n, got m={m}, n={n}"
        )));
    }
    let phi_m = cyclotomic(m)?;
    let phi_n = cyclotomic(n)?;
    if let Some((u, v)) = dresden_closed_form(m, n, &phi_m, &phi_n) {
        return Ok((u, v));
    }
    let (g, u, v) = poly_xgcd(&phi_m, &phi_n)?;
    debug_assert!(g.is_one());
    Ok((u, v))
}

fn dresden_closed_form(m: u32, n: u32, phi_m: &Poly, phi_n: &Poly) -> Option<(Poly, Poly)> {
    let (u, v) = if n % m == 0 {
        // m | n: u = -(Phi_{n/m}(x^m) - Phi_{n/m}(1)) / (Phi_{n/m}(1) * Phi_m),
        //        v = Phi_{n/m}(x^m) / (Phi_{n/m}(1) * Phi_n).
        let q = n / m;
        let phi_q = cyclotomic(q).ok()?;
        let phi_q_xm = phi_q.compose_x_pow(m as usize);
        let at_one = phi_q.eval_at(&rat(1));
        if at_one.is_zero() {
            return None;
        }
        let scale = at_one.recip();
        let shifted = &phi_q_xm - &Poly::constant(at_one);
        let (u, ru) = poly_divrem(&(-&shifted).scale(&scale), phi_m).ok()?;
        let (v, rv) = poly_divrem(&phi_q_xm.scale(&scale), phi_n).ok()?;
        if !ru.is_zero() || !rv.is_zero() {
            return None;
        }
        (u, v)
    } else {
        // m not | n: with d = gcd(m, n) = n*s - m*t,
        //   u = (-x)^d (x^{mt} - 1) / ((x^d - 1) Phi_m),
        //   v = (x^{ns} - 1) / ((x^d - 1) Phi_n).
        let d = m.gcd(&n);
        let (s, t) = bezout_positive(m, n, d)?;
        let x_d_minus_1 = -&one_minus_x_pow(d);
        let num_u = {
            let base = -&one_minus_x_pow(m * t);
            let sign = if d % 2 == 0 { rat(1) } else { rat(-1) };
            &base * &Poly::monomial(sign, d as usize)
        };
        let num_v = -&one_minus_x_pow(n * s);
        let (u1, r1) = poly_divrem(&num_u, &x_d_minus_1).ok()?;
        let (u, r2) = poly_divrem(&u1, phi_m).ok()?;
        let (v1, r3) = poly_divrem(&num_v, &x_d_minus_1).ok()?;
        let (v, r4) = poly_divrem(&v1, phi_n).ok()?;
        if !r1.is_zero() || !r2.is_zero() || !r3.is_zero() || !r4.is_zero() {
            return None;
        }
        (u, v)
    };
    let check = &(&u * phi_m) + &(&v * phi_n);
    if check.is_one() {
        Some((u, v))
    } else {
        None
    }
}

/// Finds nonnegative `s, t` with `d = n*s - m*t` for `d = gcd(m, n)`.
fn bezout_positive(m: u32, n: u32, d: u32) -> Option<(u32, u32)> {
    let m_red = (m / d) as u64;
    let n_red = (n / d) as u64;
    for s in 1..=m_red {
        if (n_red * s) % m_red == 1 % m_red {
            let t = (n as u64 * s - d as u64) / m as u64;
            return Some((s as u32, t as u32));
        }
    }
    None
}

/// Moebius function, via trial-division factorization.
pub fn moebius(n: u32) -> i64 {
    let mut m = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}
