//! The q-partial fraction decomposition of `F_N(x) = 1/prod_{k<=N}(1-x^k)`.
//!
//! The denominator factors into cyclotomic powers,
//! `prod_{k=1}^{N} Phi_k(x)^{floor(N/k)}`, which are pairwise coprime, so the
//! extended cover-up method yields one component per k:
//!
//! ```text
//!   h_k(x)   = eval(1 / prod_{j != k} Phi_j^{floor(N/j)}; Phi_k^{floor(N/k)}),
//!   g_k(x)   = Theta_k^{floor(N/k)} * h_k,                 deg(g_k) < k*floor(N/k),
//!   F_N(x)   = sum_k g_k(x) / (1 - x^k)^{floor(N/k)}.
//! ```
//!
//! Each `g_k` then splits into levels `g_{kl}` of degree < k via the
//! divided-power operator `D_m`, giving the table form
//! `F_N = sum_{k,l} g_{kl}/(1-x^k)^l`. The same machinery produces the k = 2
//! variant over denominators `(1+x)^l` and, through exact cyclotomic-field
//! arithmetic, the top-multiplicity Rademacher coefficients of the classical
//! complex partial fraction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclofield::CycloFieldElement;
use crate::cyclotomic::{cyclotomic, inverse_cyclotomic, rem_one_minus_x_pow};
use crate::error::{Error, Result};
use crate::evalop::inverse_mod;
use crate::poly::{poly_divrem, taylor_coeffs, Poly};
use crate::rational::{factorial, rat, Rational};

/// The complete table `(k, l) -> g_{kl}` for one `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPFDecomposition {
    n_parts: u32,
    terms: BTreeMap<(u32, u32), Poly>,
}

impl QPFDecomposition {
    pub fn n_parts(&self) -> u32 {
        self.n_parts
    }

    /// `g_{kl}`, for `1 <= k <= N` and `1 <= l <= floor(N/k)`.
    pub fn term(&self, k: u32, l: u32) -> Option<&Poly> {
        self.terms.get(&(k, l))
    }

    /// All `(k, l, g_{kl})` in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Poly)> {
        self.terms.iter().map(|(&(k, l), g)| (k, l, g))
    }

    /// Rebuilds a decomposition from raw terms (used by consumers that parse
    /// an emitted table back in). Degrees are re-checked.
    pub fn from_terms(n_parts: u32, terms: BTreeMap<(u32, u32), Poly>) -> Result<Self> {
        for (&(k, l), g) in &terms {
            if k == 0 || k > n_parts || l == 0 || l > n_parts / k {
                return Err(Error::OutOfRange(format!("term ({k},{l}) out of range")));
            }
            if !g.is_zero() && g.degree() >= k as usize {
                return Err(Error::OutOfRange(format!(
                    "term ({k},{l}) has degree {} >= k",
                    g.degree()
                )));
            }
        }
        Ok(QPFDecomposition { n_parts, terms })
    }
}

/// Coefficients `Gamma_{hkl}(N)`: the coefficient of `x^h` in `g_{kl}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    n_parts: u32,
    entries: BTreeMap<(u32, u32, u32), Rational>,
}

impl GammaTable {
    pub fn n_parts(&self) -> u32 {
        self.n_parts
    }

    /// `Gamma_{hkl}(N)`; zero for table keys that exist but have no entry.
    pub fn get(&self, h: u32, k: u32, l: u32) -> Rational {
        self.entries
            .get(&(h, k, l))
            .cloned()
            .unwrap_or_else(|| rat(0))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32, u32), &Rational)> {
        self.entries.iter().map(|(&key, v)| (key, v))
    }
}

/// The collapsed k = 2 table: `l -> Gamma~_{02l}(N)` over denominators
/// `(1+x)^l`, `1 <= l <= floor(N/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantK2Table {
    n_parts: u32,
    /// Index `l - 1` holds `Gamma~_{02l}`.
    entries: Vec<Rational>,
}

impl VariantK2Table {
    pub fn n_parts(&self) -> u32 {
        self.n_parts
    }

    pub fn get(&self, l: u32) -> Rational {
        self.entries
            .get(l as usize - 1)
            .cloned()
            .unwrap_or_else(|| rat(0))
    }

    pub fn levels(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }
}

/// Exact top-multiplicity coefficient of the classical partial fraction at
/// the pole `xi_k^h`, as a cyclotomic-field element, with a display-only
/// complex rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RademacherTop {
    pub h: u32,
    pub k: u32,
    pub n_parts: u32,
    pub value: CycloFieldElement,
    /// `(re, im)` decimal strings; never used in computation.
    pub approx: (String, String),
}

/// `h_k^{(N)} = eval(prod_{j != k} Phi_j^{-floor(N/j)}; Phi_k^{floor(N/k)})`,
/// multiplying factor by factor and reducing after each product so the
/// intermediate degrees never exceed twice the modulus degree.
pub fn h_component(n_parts: u32, k: u32) -> Result<Poly> {
    if k == 0 || k > n_parts {
        return Err(Error::OutOfRange(format!(
            "h_component needs 1 <= k <= N, got k={k}, N={n_parts}"
        )));
    }
    let level = n_parts / k;
    let modulus = cyclotomic(k)?.pow(level);
    let mut denom = Poly::one();
    for j in 1..=n_parts {
        if j == k {
            continue;
        }
        let phi_j = cyclotomic(j)?;
        let e_j = n_parts / j;
        denom = poly_divrem(&(&denom * &phi_j.pow_mod(e_j, &modulus)?), &modulus)?.1;
    }
    inverse_mod(&denom, &modulus)
}

/// The divided-power operator `D_m`: `x^k -> floor(k/m) x^{k-m}` extended
/// linearly; exponents below `m` map to zero.
pub fn dm_derivative(h: &Poly, m: u32) -> Poly {
    let m = m as usize;
    if h.is_zero() || h.degree() < m {
        return Poly::zero();
    }
    let mut coeffs = vec![rat(0); h.degree() + 1 - m];
    for (i, c) in h.coeffs().iter().enumerate() {
        if i >= m {
            coeffs[i - m] = c * rat((i / m) as i64);
        }
    }
    Poly::new(coeffs)
}

/// Splits `g` with `deg(g) < r*m` into level polynomials of degree < m:
///
/// ```text
///   g = sum_{j=0}^{r-1} ((-1)^j / j!) h~^(j) (1 - x^m)^j,
///   h~^(j) = (D_m^j g) rem (1 - x^m).
/// ```
pub fn split_levels(g: &Poly, m: u32, r: u32) -> Result<Vec<Poly>> {
    if r == 0 {
        return Err(Error::OutOfRange("split_levels needs r >= 1".into()));
    }
    if !g.is_zero() && g.degree() >= (r as usize) * (m as usize) {
        return Err(Error::DegreeViolation {
            num: g.degree(),
            den: (r as usize) * (m as usize),
        });
    }
    let mut out = Vec::with_capacity(r as usize);
    let mut cur = g.clone();
    for _ in 0..r {
        out.push(rem_one_minus_x_pow(&cur, m));
        cur = dm_derivative(&cur, m);
    }
    Ok(out)
}

/// Full q-partial fraction decomposition of `F_N`.
pub fn decompose(n_parts: u32) -> Result<QPFDecomposition> {
    if n_parts == 0 {
        return Err(Error::OutOfRange("decompose needs N >= 1".into()));
    }
    let mut terms = BTreeMap::new();
    for k in 1..=n_parts {
        let level = n_parts / k;
        let h = h_component(n_parts, k)?;
        let g_k = &inverse_cyclotomic(k)?.pow(level) * &h;
        debug_assert!(g_k.is_zero() || g_k.degree() < (k * level) as usize);
        let tilde = split_levels(&g_k, k, level)?;
        for (j, t) in tilde.into_iter().enumerate() {
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let scale = BigRational::new(sign, factorial(j as u64));
            terms.insert((k, level - j as u32), t.scale(&scale));
        }
    }
    Ok(QPFDecomposition { n_parts, terms })
}

/// Reads the `Gamma_{hkl}` coefficients off a decomposition.
pub fn gamma_table(d: &QPFDecomposition) -> GammaTable {
    let mut entries = BTreeMap::new();
    for (k, l, g) in d.terms() {
        for h in 0..k {
            entries.insert((h, k, l), g.coeff(h as usize));
        }
    }
    GammaTable {
        n_parts: d.n_parts,
        entries,
    }
}

/// The k = 2 variant table, computed independently of `decompose` by the
/// Taylor expansion about `x = -1` of `F_N` with its `(1+x)` poles cancelled
/// factor by factor: odd j keep `1 - x^j`, even j contribute
/// `(1 - x^j)/(1 + x)`. The coefficient of `(1+x)^j` is
/// `Gamma~_{02(floor(N/2)-j)}`.
pub fn decompose_variant_k2(n_parts: u32) -> Result<VariantK2Table> {
    if n_parts < 2 {
        return Err(Error::OutOfRange("variant table needs N >= 2".into()));
    }
    let m = n_parts / 2;
    let one_plus_x = Poly::from_ints(&[1, 1]);
    let mut den = Poly::one();
    for j in 1..=n_parts {
        let factor = crate::cyclotomic::one_minus_x_pow(j);
        if j % 2 == 0 {
            let (q, r) = poly_divrem(&factor, &one_plus_x)?;
            debug_assert!(r.is_zero());
            den = &den * &q;
        } else {
            den = &den * &factor;
        }
    }
    let coeffs = taylor_coeffs(&Poly::one(), &den, &rat(-1), m as usize)?;
    // coefficient of (x+1)^j is entry l = m - j
    let mut entries = vec![rat(0); m as usize];
    for (j, a) in coeffs.into_iter().enumerate() {
        entries[(m as usize) - 1 - j] = a;
    }
    Ok(VariantK2Table {
        n_parts,
        entries,
    })
}

/// Exact residue-limit coefficient
///
/// ```text
///   C_{h,k,L}(N) = (-xi)^L / (k^L L! prod_{m <= N, k !| m} (1 - xi^m)),
///   xi = xi_k^h,  L = floor(N/k),
/// ```
///
/// carried out entirely in `Q[x]/Phi_k` with `xi = x^h`. This is the
/// coefficient of `(x - xi)^{-L}` in the classical partial fraction of `F_N`.
pub fn rademacher_top(h: u32, k: u32, n_parts: u32) -> Result<RademacherTop> {
    if k == 0 || k > n_parts {
        return Err(Error::OutOfRange(format!(
            "rademacher_top needs 1 <= k <= N, got k={k}, N={n_parts}"
        )));
    }
    if h >= k || h.gcd(&k) != 1 {
        return Err(Error::OutOfRange(format!(
            "rademacher_top needs 0 <= h < k with gcd(h, k) = 1, got h={h}, k={k}"
        )));
    }
    let level = (n_parts / k) as u64;
    let xi = CycloFieldElement::root_of_unity(k)?.pow(h as u64);
    let one = CycloFieldElement::one(k)?;
    let mut prod = one.clone();
    for m in 1..=n_parts {
        if m % k != 0 {
            prod = prod.mul(&one.sub(&xi.pow(m as u64)));
        }
    }
    let scale = BigRational::new(BigInt::one(), BigInt::from(k).pow(level as u32) * factorial(level));
    let value = xi
        .neg()
        .pow(level)
        .mul(&prod.inverse()?)
        .scale(&scale);
    let (re, im) = value.approx_complex();
    Ok(RademacherTop {
        h,
        k,
        n_parts,
        value,
        approx: (format!("{re:.4}"), format!("{im:.4}")),
    })
}
