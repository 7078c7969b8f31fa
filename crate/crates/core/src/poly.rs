//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored ascending by degree with no trailing zeros; the
//! zero polynomial is the empty sequence. All arithmetic is exact. Degrees at
//! play in this crate stay below `N(N+1)/2` at desk scale, so the dense
//! representation keeps division and gcd simple; multiplication is schoolbook,
//! with FFT-based multiplication left as a future optimization if degrees
//! ever grow past that.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small integers, ascending by degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rational::rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rational::rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial. Panics on zero.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Evaluates at a rational point by Horner's rule.
    pub fn eval_at(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `-x` for `x`.
    pub fn compose_neg_x(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
                .collect(),
        )
    }

    /// Substitutes `x^m` for `x`.
    pub fn compose_x_pow(&self, m: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.degree() * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self^e` reduced modulo `m` after every multiplication.
    pub fn pow_mod(&self, e: u32, m: &Poly) -> Result<Poly> {
        let base = poly_divrem(self, m)?.1;
        let mut acc = poly_divrem(&Poly::one(), m)?.1;
        for _ in 0..e {
            acc = poly_divrem(&(&acc * &base), m)?.1;
        }
        Ok(acc)
    }

    /// Normalizes the leading coefficient to one.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", rational::to_string(c))?,
                1 => write!(f, "({})*x", rational::to_string(c))?,
                _ => write!(f, "({})*x^{}", rational::to_string(c), i)?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

/// Euclidean division: `a = q*b + r` with `deg(r) < deg(b)`, exactly.
pub fn poly_divrem(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    if b.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if a.is_zero() || a.coeffs.len() < b.coeffs.len() {
        return Ok((Poly::zero(), a.clone()));
    }
    let lead_inv = b.leading().recip();
    let mut rem = a.coeffs.clone();
    let db = b.degree();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    let mut top = rem.len();
    while top > db {
        let k = top - 1 - db;
        let factor = &rem[top - 1] * &lead_inv;
        if !factor.is_zero() {
            for (j, bc) in b.coeffs.iter().enumerate() {
                if !bc.is_zero() {
                    let t = bc * &factor;
                    rem[k + j] -= t;
                }
            }
            quot[k] = factor;
        }
        // The top coefficient is now exactly zero.
        top -= 1;
    }
    rem.truncate(db);
    Ok((Poly::new(quot), Poly::new(rem)))
}

/// Extended Euclid over the rationals: returns `(g, u, v)` with
/// `u*a + v*b = g` and `g = gcd(a, b)` normalized monic. For coprime
/// nonconstant inputs, `deg(u) < deg(b)` and `deg(v) < deg(a)`.
pub fn poly_xgcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let (mut u0, mut v0) = (Poly::one(), Poly::zero());
    let (mut u1, mut v1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = poly_divrem(&r0, &r1)?;
        let u2 = &u0 - &(&q * &u1);
        let v2 = &v0 - &(&q * &v1);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    let lead = r0.leading().recip();
    Ok((r0.scale(&lead), u0.scale(&lead), v0.scale(&lead)))
}

/// Rewrites `p` in powers of `(x - center)` by repeated division, which is an
/// exact Taylor shift: entry `i` is the coefficient of `(x - center)^i`.
pub fn taylor_shift(p: &Poly, center: &Rational) -> Vec<Rational> {
    let linear = Poly::new(vec![-center.clone(), rational::rat(1)]);
    let mut out = Vec::with_capacity(p.coeffs.len());
    let mut cur = p.clone();
    while !cur.is_zero() {
        let (q, r) = poly_divrem(&cur, &linear).expect("division by x - c");
        out.push(r.coeff(0));
        cur = q;
    }
    if out.is_empty() {
        out.push(Rational::zero());
    }
    out
}

/// First `order` Taylor coefficients of `num/den` about `center`, computed by
/// shifting both polynomials to `u = x - center` and dividing the truncated
/// power series. Requires `den(center) != 0`.
pub fn taylor_coeffs(
    num: &Poly,
    den: &Poly,
    center: &Rational,
    order: usize,
) -> Result<Vec<Rational>> {
    if den.is_zero() || den.eval_at(center).is_zero() {
        return Err(Error::PoleAtCenter);
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let n = taylor_shift(num, center);
    let d = taylor_shift(den, center);
    let d0_inv = d[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(order);
    for i in 0..order {
        let mut acc = n.get(i).cloned().unwrap_or_else(Rational::zero);
        for (j, prev) in out.iter().enumerate() {
            if let Some(dc) = d.get(i - j) {
                if i > j && !dc.is_zero() {
                    acc -= dc * prev;
                }
            }
        }
        out.push(acc * &d0_inv);
    }
    Ok(out)
}

/// Reassembles `sum_i coeffs[i] * (x - center)^i` as a polynomial in `x`.
pub fn from_taylor(coeffs: &[Rational], center: &Rational) -> Poly {
    let linear = Poly::new(vec![-center.clone(), rational::rat(1)]);
    let mut acc = Poly::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &linear) + &Poly::constant(c.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn divrem_factorization() {
        // (x^2 - 1) / (x - 1) = x + 1 exactly
        let (q, r) = poly_divrem(&Poly::from_ints(&[-1, 0, 1]), &Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_low_degree() {
        let (q, r) = poly_divrem(&Poly::from_ints(&[0, 1]), &Poly::from_ints(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn divrem_quartic() {
        // Long division by hand: (1 - x^4) / (1 + x^2) = 1 - x^2, remainder 0.
        let (q, r) =
            poly_divrem(&Poly::from_ints(&[1, 0, 0, 0, -1]), &Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 0, -1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_zero_divisor() {
        assert_eq!(
            poly_divrem(&Poly::one(), &Poly::zero()),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn xgcd_coprime_linear() {
        // (1/2)(1-x) + (1/2)(1+x) = 1
        let (g, u, v) = poly_xgcd(&Poly::from_ints(&[1, -1]), &Poly::from_ints(&[1, 1])).unwrap();
        assert!(g.is_one());
        assert_eq!(u, Poly::constant(ratio(1, 2)));
        assert_eq!(v, Poly::constant(ratio(1, 2)));
    }

    #[test]
    fn xgcd_equal_inputs() {
        let p = Poly::from_ints(&[-1, 1]);
        let (g, u, v) = poly_xgcd(&p, &p).unwrap();
        assert_eq!(g, p);
        assert_eq!(&(&u * &p) + &(&v * &p), p);
    }

    #[test]
    fn xgcd_phi2_phi4() {
        // ((1-x)/2)(1+x) + (1/2)(1+x^2) = 1
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[1, 0, 1]);
        let (g, u, v) = poly_xgcd(&a, &b).unwrap();
        assert!(g.is_one());
        assert_eq!(u, Poly::new(vec![ratio(1, 2), ratio(-1, 2)]));
        assert_eq!(v, Poly::constant(ratio(1, 2)));
        assert!((&(&u * &a) + &(&v * &b)).is_one());
    }

    #[test]
    fn xgcd_both_zero_is_error() {
        assert_eq!(poly_xgcd(&Poly::zero(), &Poly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn taylor_geometric() {
        // 1/(1-x) about 0: all ones.
        let c = taylor_coeffs(&Poly::one(), &Poly::from_ints(&[1, -1]), &rat(0), 4).unwrap();
        assert_eq!(c, vec![rat(1), rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn taylor_psi3_about_one() {
        // 3/(1+x+x^2) about 1: exact series division gives [1, -1, ...] in
        // powers of (x-1); the order-one magnitude is (m-1)/2 in general.
        let c = taylor_coeffs(
            &Poly::from_ints(&[3]),
            &Poly::from_ints(&[1, 1, 1]),
            &rat(1),
            2,
        )
        .unwrap();
        assert_eq!(c[0], rat(1));
        assert_eq!(c[1], rat(-1));
    }

    #[test]
    fn taylor_binomial_denominator_about_one() {
        // 2/(1+x^3) about 1: [1, -3/2] in powers of (x-1).
        let c = taylor_coeffs(
            &Poly::from_ints(&[2]),
            &Poly::from_ints(&[1, 0, 0, 1]),
            &rat(1),
            2,
        )
        .unwrap();
        assert_eq!(c[0], rat(1));
        assert_eq!(c[1], ratio(-3, 2));
    }

    #[test]
    fn taylor_pole_is_error() {
        assert_eq!(
            taylor_coeffs(&Poly::one(), &Poly::from_ints(&[1, -1]), &rat(1), 3),
            Err(Error::PoleAtCenter)
        );
    }

    #[test]
    fn taylor_resummation_matches_mod_power() {
        // den * (sum a_n (x-c)^n) - num divisible by (x-c)^k
        let num = Poly::from_ints(&[2, 5]);
        let den = Poly::from_ints(&[3, 1, 4]);
        let c = ratio(1, 2);
        let k = 6;
        let coeffs = taylor_coeffs(&num, &den, &c, k).unwrap();
        let series = from_taylor(&coeffs, &c);
        let diff = &(&den * &series) - &num;
        let modpow = Poly::new(vec![-c.clone(), rat(1)]).pow(k as u32);
        let (_, r) = poly_divrem(&diff, &modpow).unwrap();
        assert!(r.is_zero());
    }
}
