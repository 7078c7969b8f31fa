//! Exact arithmetic in the cyclotomic field `Q[x] / Phi_k(x)`.
//!
//! Elements are coordinate vectors of length `phi(k)` in the power basis of
//! the class of `x`, which represents a primitive k-th root of unity. All
//! arithmetic is exact; inverses come from the extended gcd with `Phi_k`.
//! The exact field values are the ground truth for the Rademacher
//! coefficients; complex decimals are rendered only for display.

use crate::cyclotomic::{cyclotomic, totient};
use crate::error::{Error, Result};
use crate::poly::{poly_divrem, poly_xgcd, Poly};
use crate::rational::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFieldElement {
    k: u32,
    /// Coefficients of 1, x, ..., x^{phi(k)-1}; may carry trailing zeros up
    /// to the field degree.
    coords: Vec<Rational>,
}

impl CycloFieldElement {
    /// The zero element of `Q[x]/Phi_k`.
    pub fn zero(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("field index must be >= 1".into()));
        }
        Ok(CycloFieldElement {
            k,
            coords: vec![rat(0); totient(k) as usize],
        })
    }

    pub fn one(k: u32) -> Result<Self> {
        Self::from_poly(k, &Poly::one())
    }

    /// Embeds a rational constant.
    pub fn from_rational(k: u32, c: &Rational) -> Result<Self> {
        Self::from_poly(k, &Poly::constant(c.clone()))
    }

    /// Reduces a polynomial modulo `Phi_k`.
    pub fn from_poly(k: u32, p: &Poly) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("field index must be >= 1".into()));
        }
        let phi = cyclotomic(k)?;
        let (_, r) = poly_divrem(p, &phi)?;
        let mut coords = r.coeffs().to_vec();
        coords.resize(totient(k) as usize, rat(0));
        Ok(CycloFieldElement { k, coords })
    }

    /// The class of `x`, a primitive k-th root of unity.
    pub fn root_of_unity(k: u32) -> Result<Self> {
        Self::from_poly(k, &Poly::monomial(rat(1), 1))
    }

    pub fn index(&self) -> u32 {
        self.k
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn as_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.as_poly().is_zero()
    }

    /// Rational content of a constant element, if it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        let p = self.as_poly();
        if p.is_zero() {
            Some(rat(0))
        } else if p.is_constant() {
            Some(p.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "mixed cyclotomic fields");
        let p = &self.as_poly() + &rhs.as_poly();
        Self::from_poly(self.k, &p).expect("same field")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "mixed cyclotomic fields");
        let p = &self.as_poly() - &rhs.as_poly();
        Self::from_poly(self.k, &p).expect("same field")
    }

    pub fn neg(&self) -> Self {
        CycloFieldElement {
            k: self.k,
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "mixed cyclotomic fields");
        let p = &self.as_poly() * &rhs.as_poly();
        Self::from_poly(self.k, &p).expect("same field")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloFieldElement {
            k: self.k,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended gcd with `Phi_k`.
    pub fn inverse(&self) -> Result<Self> {
        let p = self.as_poly();
        if p.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let phi = cyclotomic(self.k)?;
        let (g, u, _) = poly_xgcd(&p, &phi)?;
        debug_assert!(g.is_one(), "Phi_k is irreducible over Q");
        Self::from_poly(self.k, &u)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.k).expect("valid field");
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex embedding `x -> exp(2*pi*i/k)`, for display only.
    pub fn approx_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.k as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coords.iter().enumerate() {
            let num = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let den = c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let v = num / den;
            re += v * (theta * i as f64).cos();
            im += v * (theta * i as f64).sin();
        }
        (re, im)
    }
}
