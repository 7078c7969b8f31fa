//! The polynomial-valued eval operator and its calculus.
//!
//! For polynomials `r, s, a` with `gcd(s, a) = 1`,
//!
//! ```text
//!   eval(r/s; a) = (alpha * r) rem a,   where alpha * s = 1 (mod a),
//! ```
//!
//! so eval maps a rational polynomial to a polynomial of degree below
//! `deg(a)`. It is additive and multiplicative modulo `a`, insensitive to
//! adding multiples of `a` to numerator or denominator, and powers of the
//! modulus admit an iterated scheme that avoids one large gcd computation.
//! The extended cover-up method builds partial fractions out of nothing but
//! eval calls.

use crate::error::{Error, Result};
use crate::poly::{from_taylor, poly_divrem, poly_xgcd, taylor_coeffs, Poly};
use crate::rational::{rat, Rational};

/// A quotient of polynomials `numerator / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolyExpr {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalPolyExpr {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(RationalPolyExpr {
            numerator,
            denominator,
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalPolyExpr {
            numerator: p,
            denominator: Poly::one(),
        }
    }
}

/// Inverse of `s` modulo `a`; errors if they share a factor.
pub fn inverse_mod(s: &Poly, a: &Poly) -> Result<Poly> {
    let (g, u, _) = poly_xgcd(s, a)?;
    if !g.is_one() {
        return Err(Error::SharedFactor);
    }
    Ok(poly_divrem(&u, a)?.1)
}

/// `eval(expr; modulus)` by a direct extended gcd against the modulus.
pub fn eval_mod(expr: &RationalPolyExpr, modulus: &Poly) -> Result<Poly> {
    if modulus.is_constant() {
        return Err(Error::OutOfRange("eval modulus must be nonconstant".into()));
    }
    let alpha = inverse_mod(&expr.denominator, modulus)?;
    Ok(poly_divrem(&(&alpha * &expr.numerator), modulus)?.1)
}

/// `eval(expr; base^k)` via the iterated scheme
///
/// ```text
///   eval(1/s; f^k) = sum_{j<k} a~_j(x) f^j,
///   a~_j = (a2 * a1^(j)) rem f,   a1^(j) = a1^j rem s,
/// ```
///
/// where `a1*f + a2*s = 1`, followed by multiplication with the numerator.
pub fn eval_mod_power(expr: &RationalPolyExpr, base: &Poly, k: u32) -> Result<Poly> {
    if base.is_constant() {
        return Err(Error::OutOfRange("eval base must be nonconstant".into()));
    }
    if k == 0 {
        return Err(Error::OutOfRange("power must be >= 1".into()));
    }
    let s = &expr.denominator;
    let (g, a1, a2) = poly_xgcd(base, s)?;
    if !g.is_one() {
        return Err(Error::SharedFactor);
    }
    let mut inv = Poly::zero();
    let mut base_pow = Poly::one();
    let mut a1_pow = Poly::one(); // a1^j rem s
    for _ in 0..k {
        let coeff = poly_divrem(&(&a2 * &a1_pow), base)?.1;
        inv = &inv + &(&coeff * &base_pow);
        base_pow = &base_pow * base;
        a1_pow = poly_divrem(&(&a1_pow * &a1), s)?.1;
    }
    let modulus = base_pow; // base^k
    Ok(poly_divrem(&(&inv * &expr.numerator), &modulus)?.1)
}

/// `eval(1/f2; (x - center)^k)` through the Taylor series of `1/f2`.
pub fn eval_taylor(f2: &Poly, center: &Rational, k: u32) -> Result<Poly> {
    let coeffs = taylor_coeffs(&Poly::one(), f2, center, k as usize)?;
    Ok(from_taylor(&coeffs, center))
}

/// Extended cover-up: numerators `n_j` with `f / prod p_j = sum n_j / p_j`
/// and `deg(n_j) < deg(p_j)`, each `n_j = eval(f / g_j; p_j)` where `g_j`
/// drops the j-th factor.
pub fn cover_up(f: &Poly, factors: &[Poly]) -> Result<Vec<Poly>> {
    let mut total_deg = 0usize;
    for p in factors {
        if p.is_constant() {
            return Err(Error::OutOfRange(
                "cover-up factors must be nonconstant".into(),
            ));
        }
        total_deg += p.degree();
    }
    for (i, p) in factors.iter().enumerate() {
        for q in &factors[i + 1..] {
            let (g, _, _) = poly_xgcd(p, q)?;
            if !g.is_one() {
                return Err(Error::SharedFactor);
            }
        }
    }
    if !f.is_zero() && f.degree() >= total_deg {
        return Err(Error::DegreeViolation {
            num: f.degree(),
            den: total_deg,
        });
    }
    let mut out = Vec::with_capacity(factors.len());
    for (j, p) in factors.iter().enumerate() {
        let mut hat = Poly::one();
        for (i, q) in factors.iter().enumerate() {
            if i != j {
                hat = poly_divrem(&(&hat * q), p)?.1;
            }
        }
        let expr = RationalPolyExpr::new(f.clone(), hat)?;
        out.push(eval_mod(&expr, p)?);
    }
    Ok(out)
}

/// `g_j^(m) = Psi_m(x)^j rem (1 + x^m)` by repeated multiply-and-reduce,
/// with `g_0 = 1`.
pub fn psi_power_rem(m: u32, j: u32) -> Result<Poly> {
    if m == 0 {
        return Err(Error::OutOfRange("psi index must be >= 1".into()));
    }
    let psi = crate::cyclotomic::psi(m)?;
    let modulus = {
        let mut coeffs = vec![rat(0); m as usize + 1];
        coeffs[0] = rat(1);
        coeffs[m as usize] = rat(1);
        Poly::new(coeffs)
    };
    let mut acc = Poly::one();
    for _ in 0..j {
        acc = poly_divrem(&(&acc * &psi), &modulus)?.1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{cyclotomic, psi};
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn expr(num: &Poly, den: &Poly) -> RationalPolyExpr {
        RationalPolyExpr::new(num.clone(), den.clone()).unwrap()
    }

    #[test]
    fn eval_simple_inverse() {
        // eval(1/(1+x); 1-x) = 1/2
        let e = expr(&Poly::one(), &Poly::from_ints(&[1, 1]));
        let r = eval_mod(&e, &Poly::from_ints(&[1, -1])).unwrap();
        assert_eq!(r, Poly::constant(ratio(1, 2)));
    }

    #[test]
    fn eval_monomial_mod_binomial() {
        // eval(x^7; 1-x^3) = x
        let e = RationalPolyExpr::from_poly(Poly::monomial(rat(1), 7));
        let r = eval_mod(&e, &Poly::from_ints(&[1, 0, 0, -1])).unwrap();
        assert_eq!(r, Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn eval_plain_polynomial_is_rem() {
        let p = Poly::from_ints(&[3, 1, 4, 1, 5]);
        let a = Poly::from_ints(&[2, 0, 1]);
        let e = RationalPolyExpr::from_poly(p.clone());
        assert_eq!(eval_mod(&e, &a).unwrap(), poly_divrem(&p, &a).unwrap().1);
    }

    #[test]
    fn eval_shared_factor_is_error() {
        let e = expr(&Poly::one(), &Poly::from_ints(&[1, -1]));
        assert_eq!(
            eval_mod(&e, &Poly::from_ints(&[-1, 0, 1])),
            Err(Error::SharedFactor)
        );
    }

    #[test]
    fn eval_power_square_of_linear() {
        // eval(1/(1+x); (1-x)^2) = 3/4 - x/4
        let e = expr(&Poly::one(), &Poly::from_ints(&[1, 1]));
        let r = eval_mod_power(&e, &Poly::from_ints(&[1, -1]), 2).unwrap();
        assert_eq!(r, Poly::new(vec![ratio(3, 4), ratio(-1, 4)]));
    }

    #[test]
    fn eval_power_base_case_matches_eval_mod() {
        let e = expr(&Poly::from_ints(&[2, 1]), &Poly::from_ints(&[1, 1, 1]));
        let base = Poly::from_ints(&[1, -1]);
        assert_eq!(
            eval_mod_power(&e, &base, 1).unwrap(),
            eval_mod(&e, &base).unwrap()
        );
    }

    #[test]
    fn eval_power_phi3_mod_phi1_squared() {
        // eval(1/(1+x+x^2); (1-x)^2) = 2/3 - x/3
        let e = expr(&Poly::one(), &Poly::from_ints(&[1, 1, 1]));
        let r = eval_mod_power(&e, &Poly::from_ints(&[1, -1]), 2).unwrap();
        assert_eq!(r, Poly::new(vec![ratio(2, 3), ratio(-1, 3)]));
    }

    #[test]
    fn eval_taylor_examples() {
        // matches the eval_mod_power example above
        assert_eq!(
            eval_taylor(&Poly::from_ints(&[1, 1]), &rat(1), 2).unwrap(),
            Poly::new(vec![ratio(3, 4), ratio(-1, 4)])
        );
        // point evaluation
        assert_eq!(
            eval_taylor(&Poly::from_ints(&[1, 1, 1]), &rat(1), 1).unwrap(),
            Poly::constant(ratio(1, 3))
        );
        // constant denominator
        assert_eq!(
            eval_taylor(&Poly::from_ints(&[2]), &rat(0), 3).unwrap(),
            Poly::constant(ratio(1, 2))
        );
    }

    #[test]
    fn eval_taylor_pole_is_error() {
        assert_eq!(
            eval_taylor(&Poly::from_ints(&[1, -1]), &rat(1), 2),
            Err(Error::PoleAtCenter)
        );
    }

    #[test]
    fn cover_up_classic() {
        // 1/(1-x^2) = (1/2)/(1-x) + (1/2)/(1+x)
        let parts = cover_up(
            &Poly::one(),
            &[Poly::from_ints(&[1, -1]), Poly::from_ints(&[1, 1])],
        )
        .unwrap();
        assert_eq!(parts[0], Poly::constant(ratio(1, 2)));
        assert_eq!(parts[1], Poly::constant(ratio(1, 2)));
    }

    #[test]
    fn cover_up_with_square_factor() {
        // 1/((1-x)^2 (1+x)) = (3/4 - x/4)/(1-x)^2 + (1/4)/(1+x)
        let parts = cover_up(
            &Poly::one(),
            &[Poly::from_ints(&[1, -2, 1]), Poly::from_ints(&[1, 1])],
        )
        .unwrap();
        assert_eq!(parts[0], Poly::new(vec![ratio(3, 4), ratio(-1, 4)]));
        assert_eq!(parts[1], Poly::constant(ratio(1, 4)));
    }

    #[test]
    fn cover_up_single_factor() {
        let parts = cover_up(&Poly::one(), &[Poly::from_ints(&[1, -1])]).unwrap();
        assert_eq!(parts, vec![Poly::one()]);
    }

    #[test]
    fn cover_up_rejects_shared_factor_and_degree() {
        assert_eq!(
            cover_up(
                &Poly::one(),
                &[Poly::from_ints(&[1, -1]), Poly::from_ints(&[-1, 1])]
            ),
            Err(Error::SharedFactor)
        );
        assert!(matches!(
            cover_up(&Poly::from_ints(&[0, 0, 1]), &[Poly::from_ints(&[1, 1])]),
            Err(Error::DegreeViolation { .. })
        ));
    }

    #[test]
    fn cover_up_reconstructs() {
        // sum n_j * g_j = f as an exact polynomial identity
        let factors = [
            Poly::from_ints(&[1, -1]),
            Poly::from_ints(&[1, 1]),
            Poly::from_ints(&[1, 1, 1]),
        ];
        let f = Poly::from_ints(&[2, 0, 5]);
        let parts = cover_up(&f, &factors).unwrap();
        let mut sum = Poly::zero();
        for (j, n_j) in parts.iter().enumerate() {
            let mut hat = Poly::one();
            for (i, p) in factors.iter().enumerate() {
                if i != j {
                    hat = &hat * p;
                }
            }
            sum = &sum + &(n_j * &hat);
        }
        assert_eq!(sum, f);
    }

    #[test]
    fn psi_power_rem_examples() {
        for m in 1..=6 {
            assert!(psi_power_rem(m, 0).unwrap().is_one());
        }
        assert!(psi_power_rem(1, 1).unwrap().is_one());
        assert_eq!(psi_power_rem(2, 1).unwrap(), Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn psi_power_partial_fraction_identity() {
        // Cleared form of
        //   2/((1-x)^k (1+x^m))
        //     = sum_{j<k} (g_j(1)/2^j)/(1-x)^{k-j} + (g_k(x)/2^{k-1})/(1+x^m)
        // with g_j = Psi_m^j rem (1+x^m). The iterated partial fraction
        // produces one factor 1/2 per level on top of the bare g_j table.
        for m in 1..=6u32 {
            for k in 1..=5u32 {
                let one_minus_x = Poly::from_ints(&[1, -1]);
                let mut coeffs = vec![0i64; m as usize + 1];
                coeffs[0] = 1;
                coeffs[m as usize] = 1;
                let one_plus_xm = Poly::from_ints(&coeffs);
                let mut sum = Poly::zero();
                for j in 0..k {
                    let g_j_at_1 = psi_power_rem(m, j).unwrap().eval_at(&rat(1));
                    let scaled = g_j_at_1 / rat(1 << j);
                    let term = &one_minus_x.pow(j) * &one_plus_xm;
                    sum = &sum + &term.scale(&scaled);
                }
                let g_k = psi_power_rem(m, k).unwrap().scale(&ratio(1, 1 << (k - 1)));
                sum = &sum + &(&g_k * &one_minus_x.pow(k));
                assert_eq!(sum, Poly::from_ints(&[2]), "m={m}, k={k}");
            }
        }
    }

    #[test]
    fn substitution_rule_2_reduces_to_field_quotient() {
        // eval(f/g; Phi_m^k) reduced mod Phi_m equals f * g^{-1} in Q[x]/Phi_m.
        use crate::cyclofield::CycloFieldElement;
        for m in 2..=12u32 {
            let phi = cyclotomic(m).unwrap();
            let f = Poly::from_ints(&[1, 2, 0, 3]);
            let g = Poly::from_ints(&[5, 0, 0, 0, 1]);
            if poly_xgcd(&g, &phi).unwrap().0.is_one() {
                for k in 1..=3u32 {
                    let e = expr(&f, &g);
                    let big = eval_mod_power(&e, &phi, k).unwrap();
                    let lhs = CycloFieldElement::from_poly(m, &big).unwrap();
                    let rhs = CycloFieldElement::from_poly(m, &f).unwrap().mul(
                        &CycloFieldElement::from_poly(m, &g)
                            .unwrap()
                            .inverse()
                            .unwrap(),
                    );
                    assert_eq!(lhs, rhs, "m={m}, k={k}");
                }
            }
        }
    }

    #[test]
    fn dispatch_taylor_equals_power_route_for_linear_base() {
        // linear bases route through taylor; both routes must agree
        for m in 2..=8u32 {
            let f2 = psi(m).unwrap();
            for k in 1..=4u32 {
                let via_taylor = eval_taylor(&f2, &rat(1), k).unwrap();
                let e = expr(&Poly::one(), &f2);
                let via_power = eval_mod_power(&e, &Poly::from_ints(&[1, -1]), k).unwrap();
                assert_eq!(via_taylor, via_power, "m={m}, k={k}");
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-6i64..=6, 0..6).prop_map(|v| Poly::from_ints(&v))
    }

    fn small_nonzero_poly() -> impl Strategy<Value = Poly> {
        small_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divrem_reconstructs(a in proptest::collection::vec(-20i64..=20, 0..31),
                               b in proptest::collection::vec(-20i64..=20, 1..31)) {
            let a = Poly::from_ints(&a);
            let b = Poly::from_ints(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = poly_divrem(&a, &b).unwrap();
            prop_assert_eq!(&(&(&q * &b) + &r), &a);
            if !r.is_zero() {
                prop_assert!(r.degree() < b.degree());
            }
        }

        #[test]
        fn xgcd_identity(a in small_poly(), b in small_nonzero_poly()) {
            let (g, u, v) = poly_xgcd(&a, &b).unwrap();
            let lhs = &(&u * &a) + &(&v * &b);
            prop_assert_eq!(lhs, g);
        }

        #[test]
        fn eval_is_additive_and_multiplicative(
            r0 in small_poly(), r1 in small_poly(),
            s0 in small_nonzero_poly(), s1 in small_nonzero_poly(),
        ) {
            let a = Poly::from_ints(&[2, 0, 0, 1]);
            prop_assume!(poly_xgcd(&s0, &a).unwrap().0.is_one());
            prop_assume!(poly_xgcd(&s1, &a).unwrap().0.is_one());
            let e0 = expr(&r0, &s0);
            let e1 = expr(&r1, &s1);
            // e0 + e1 = (r0 s1 + r1 s0) / (s0 s1)
            let sum = expr(&(&(&r0 * &s1) + &(&r1 * &s0)), &(&s0 * &s1));
            let lhs = eval_mod(&sum, &a).unwrap();
            let rhs = poly_divrem(&(&eval_mod(&e0, &a).unwrap() + &eval_mod(&e1, &a).unwrap()), &a).unwrap().1;
            prop_assert_eq!(lhs, rhs);
            // products
            let prod = expr(&(&r0 * &r1), &(&s0 * &s1));
            let lhs = eval_mod(&prod, &a).unwrap();
            let rhs = poly_divrem(&(&eval_mod(&e0, &a).unwrap() * &eval_mod(&e1, &a).unwrap()), &a).unwrap().1;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_rule_1(
            r in small_poly(), s in small_nonzero_poly(),
            p in small_poly(), q in small_poly(),
        ) {
            let a = Poly::from_ints(&[1, 1, 0, 2]);
            prop_assume!(poly_xgcd(&s, &a).unwrap().0.is_one());
            let s_shift = &s - &(&q * &a);
            prop_assume!(!s_shift.is_zero());
            prop_assume!(poly_xgcd(&s_shift, &a).unwrap().0.is_one());
            let base = expr(&r, &s);
            let shifted = expr(&(&r - &(&p * &a)), &s_shift);
            prop_assert_eq!(eval_mod(&base, &a).unwrap(), eval_mod(&shifted, &a).unwrap());
        }

        #[test]
        fn eval_mod_power_matches_direct(k in 1u32..=5, s in small_nonzero_poly()) {
            let base = Poly::from_ints(&[1, -1]);
            prop_assume!(poly_xgcd(&s, &base).unwrap().0.is_one());
            let e = expr(&Poly::one(), &s);
            let via_power = eval_mod_power(&e, &base, k).unwrap();
            let via_direct = eval_mod(&e, &base.pow(k)).unwrap();
            prop_assert_eq!(via_power, via_direct);
        }

        #[test]
        fn cover_up_identity_random(f in proptest::collection::vec(-9i64..=9, 0..4)) {
            let f = Poly::from_ints(&f);
            let factors = [
                Poly::from_ints(&[1, -1]),
                Poly::from_ints(&[1, 1]),
                Poly::from_ints(&[2, 0, 1]),
            ];
            let parts = cover_up(&f, &factors).unwrap();
            let mut sum = Poly::zero();
            for (j, n_j) in parts.iter().enumerate() {
                let mut hat = Poly::one();
                for (i, p) in factors.iter().enumerate() {
                    if i != j {
                        hat = &hat * p;
                    }
                }
                sum = &sum + &(n_j * &hat);
            }
            prop_assert_eq!(sum, f);
        }
    }
}
