//! The central extension U' = U(gl(n+1))[X] / (C_{n+1}(X)): canonical
//! representatives of degree <= n, the reduction behind them, the projection
//! pi_g' with kernel (G_1), and the denominator-cleared row identities for
//! the u-elements.

use crate::capelli::{capelli, capelli_in, minor_matrix, CapelliVariant};
use crate::error::{clip, Check, Failure};
use crate::homs::pi_g;
use crate::ring::Ring;
use crate::sample::{random_ugl, rng};
use crate::scalar::{q, Q};
use crate::tpoly::TPoly;
use crate::ugl::{in_g1_ideal, GlRank, UglElement};

type UPoly = TPoly<UglElement>;

/// Division with remainder by C_{n+1}(X): the divisor has central
/// coefficients and scalar leading coefficient, so the quotient is two-sided.
/// Reconstruction p = q C + r is asserted.
pub fn reduce_mod_capelli(p: &UPoly) -> (UPoly, UPoly) {
    let rank = p.ring_ctx();
    let var = p.var();
    let c = capelli(rank, var, CapelliVariant::Std);
    let dc = c.degree().expect("capelli polynomial is nonzero");
    let lead = c
        .coeff(dc)
        .as_scalar()
        .expect("capelli lead coefficient is scalar");
    let lead_inv = q(1) / lead;
    let mut rem = p.clone();
    let mut quo = UPoly::zero(var, rank);
    while let Some(d) = rem.degree() {
        if d < dc {
            break;
        }
        let factor = rem.coeff(d).scale(&lead_inv);
        let mut q_coeffs = vec![UglElement::zero(rank); d - dc + 1];
        q_coeffs[d - dc] = factor;
        let q_term = UPoly::from_coeffs(var, rank, q_coeffs);
        quo = quo.add(&q_term);
        rem = rem.sub(&q_term.mul(&c));
    }
    debug_assert_eq!(quo.mul(&c).add(&rem), *p, "division reconstruction");
    (quo, rem)
}

/// Element of U', stored as its unique representative of degree <= n.
#[derive(Clone, PartialEq, Debug)]
pub struct UPrimeElement {
    rep: UPoly,
}

impl UPrimeElement {
    pub fn new(p: &UPoly) -> Self {
        let (_, rem) = reduce_mod_capelli(p);
        UPrimeElement { rep: rem }
    }

    pub fn from_u(x: &UglElement) -> Self {
        UPrimeElement {
            rep: UPoly::constant('X', x.clone()),
        }
    }

    pub fn x(rank: GlRank) -> Self {
        UPrimeElement {
            rep: UPoly::variable('X', rank),
        }
    }

    pub fn rep(&self) -> &UPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        UPrimeElement {
            rep: self.rep.add(&other.rep),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        UPrimeElement {
            rep: self.rep.sub(&other.rep),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.rep.mul(&other.rep))
    }
}

impl std::fmt::Display for UPrimeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// pi_g on coefficients combined with X -> X - G_1/(n+1); fixes C_{n+1}(X),
/// hence descends to U'.
pub fn pi_g_prime(p: &UPoly) -> UPoly {
    let rank = p.ring_ctx();
    let dim = rank.dim() as i64;
    let mapped = p.map_coeffs(rank, pi_g);
    let shift = UglElement::g1(rank).scale(&Q::new((-1).into(), dim.into()));
    mapped.subst_add(&shift)
}

/// (i) pi_g' fixes C_{n+1}(X) in U[X]; (ii) pi_g' is idempotent on samples;
/// (iii) x - pi_g'(x) lies in (G_1) coefficientwise.
pub fn verify_pi_g_prime(n: usize, seed: u64) -> Check {
    let rank = GlRank::gl1(n);
    let c = capelli(rank, 'X', CapelliVariant::Std);
    if pi_g_prime(&c) != c {
        return Err(Failure::new(
            "pi-g-prime",
            format!("n={n}: pi_g'(C(X)) != C(X)"),
        ));
    }
    let mut r = rng(seed);
    for trial in 0..8 {
        let coeffs: Vec<UglElement> = (0..=n)
            .map(|_| random_ugl(&mut r, rank, 2, 3))
            .collect();
        let p = UPoly::from_coeffs('X', rank, coeffs);
        let once = pi_g_prime(&p);
        let twice = pi_g_prime(&once);
        if once != twice {
            return Err(Failure::new(
                "pi-g-prime",
                clip(format!("n={n} trial {trial}: pi_g' not idempotent")),
            ));
        }
        let diff = p.sub(&once);
        for (k, c) in diff.coeffs().iter().enumerate() {
            if !c.is_zero() && !in_g1_ideal(c) {
                return Err(Failure::new(
                    "pi-g-prime",
                    clip(format!(
                        "n={n} trial {trial}: X^{k} coefficient of x - pi_g'(x) outside (G_1)"
                    )),
                ));
            }
        }
    }
    Ok(())
}

/// The cleared numerator row: uhat = -[E_10, ..., E_n0] M_n(X), entries
/// multiplied left to right.
pub fn uhat(n: usize) -> Vec<UPoly> {
    let big = GlRank::gl1(n);
    let small = GlRank::gl(n);
    let minors = minor_matrix(big, small, 'X');
    (0..n)
        .map(|a| {
            let mut acc = UPoly::zero('X', big);
            for b in 0..n {
                let e_b0 = UPoly::constant('X', UglElement::gen(big, b + 1, 0));
                acc = acc.add(&e_b0.mul(minors.at(b, a)));
            }
            acc.neg()
        })
        .collect()
}

/// For i = 1..n: sum_a uhat_a E_ia + E_i0 C_n(X) = uhat_i X, in U(gl(n+1))[X].
/// `drop_cn_term` is the negative control.
pub fn verify_cleared_u_identity_impl(n: usize, drop_cn_term: bool) -> Check {
    let big = GlRank::gl1(n);
    let hats = uhat(n);
    let c_n = capelli_in(big, GlRank::gl(n), 'X', CapelliVariant::Std);
    let xvar = UPoly::variable('X', big);
    for i in 1..=n {
        let mut lhs = UPoly::zero('X', big);
        for a in 1..=n {
            let e_ia = UPoly::constant('X', UglElement::gen(big, i, a));
            lhs = lhs.add(&hats[a - 1].mul(&e_ia));
        }
        if !drop_cn_term {
            let e_i0 = UPoly::constant('X', UglElement::gen(big, i, 0));
            lhs = lhs.add(&e_i0.mul(&c_n));
        }
        let rhs = hats[i - 1].mul(&xvar);
        if lhs != rhs {
            return Err(Failure::new(
                "cleared-u",
                clip(format!("n={n} i={i}: row identity fails")),
            ));
        }
    }
    Ok(())
}

pub fn verify_cleared_u_identity(n: usize) -> Check {
    verify_cleared_u_identity_impl(n, false)
}

/// Uniqueness of degree-<= n representatives: reduction is idempotent on
/// remainders and reconstructs its input, on seeded random elements.
pub fn verify_reduction_roundtrip(n: usize, trials: usize, seed: u64) -> Check {
    let rank = GlRank::gl1(n);
    let c = capelli(rank, 'X', CapelliVariant::Std);
    let mut r = rng(seed);
    for trial in 0..trials {
        let deg = 1 + (trial % (n + 2));
        let coeffs: Vec<UglElement> = (0..=deg)
            .map(|_| random_ugl(&mut r, rank, 2, 2))
            .collect();
        let p = UPoly::from_coeffs('X', rank, coeffs);
        let (quo, rem) = reduce_mod_capelli(&p);
        if let Some(d) = rem.degree() {
            if d > n {
                return Err(Failure::new(
                    "uprime-roundtrip",
                    format!("trial {trial}: remainder degree {d} > {n}"),
                ));
            }
        }
        if quo.mul(&c).add(&rem) != p {
            return Err(Failure::new(
                "uprime-roundtrip",
                format!("trial {trial}: reconstruction fails"),
            ));
        }
        let (q2, r2) = reduce_mod_capelli(&rem);
        if !q2.is_zero() || r2 != rem {
            return Err(Failure::new(
                "uprime-roundtrip",
                format!("trial {trial}: reduction not idempotent"),
            ));
        }
    }
    Ok(())
}

/// C_n(X) and C_n(X+1) are nonzero in U', and X is central there.
pub fn verify_uprime_basics(n: usize) -> Check {
    let big = GlRank::gl1(n);
    let c_n = capelli_in(big, GlRank::gl(n), 'X', CapelliVariant::Std);
    for (name, p) in [("C_n(X)", c_n.clone()), ("C_n(X+1)", c_n.shift_scalar(&q(1)))] {
        if UPrimeElement::new(&p).is_zero() {
            return Err(Failure::new(
                "uprime-basics",
                format!("n={n}: {name} reduces to zero"),
            ));
        }
    }
    let x = UPrimeElement::x(big);
    for a in big.indices() {
        for b in big.indices() {
            let e = UPrimeElement::from_u(&UglElement::gen(big, a, b));
            if x.mul(&e) != e.mul(&x) {
                return Err(Failure::new(
                    "uprime-basics",
                    format!("n={n}: X does not commute with E[{a},{b}]"),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let n = 1;
        let rank = GlRank::gl1(n);
        let c = capelli(rank, 'X', CapelliVariant::Std);
        // C(X) itself reduces to (1, 0)
        let (quo, rem) = reduce_mod_capelli(&c);
        assert_eq!(quo, UPoly::constant('X', UglElement::one(rank)));
        assert!(rem.is_zero());
        // low-degree polynomials are their own remainder
        let p = UPoly::variable('X', rank);
        let (quo, rem) = reduce_mod_capelli(&p);
        assert!(quo.is_zero());
        assert_eq!(rem, p);
    }

    #[test]
    fn x_squared_remainder_n1() {
        // X^2 = C_2(X) + X(E_00 + E_11 - 1) + (-E_00 E_11 + E_00 + E_10 E_01)
        let n = 1;
        let rank = GlRank::gl1(n);
        let e = |i, j| UglElement::gen(rank, i, j);
        let x2 = UPoly::variable('X', rank).mul(&UPoly::variable('X', rank));
        let (_, rem) = reduce_mod_capelli(&x2);
        let lin = e(0, 0).add(&e(1, 1)).sub(&UglElement::one(rank));
        let cst = e(0, 0)
            .mul(&e(1, 1))
            .neg()
            .add(&e(0, 0))
            .add(&e(1, 0).mul(&e(0, 1)));
        let expected = UPoly::from_coeffs('X', rank, vec![cst, lin]);
        assert_eq!(rem, expected);
    }

    #[test]
    fn uprime_multiplication() {
        let n = 1;
        let rank = GlRank::gl1(n);
        let x = UPrimeElement::x(rank);
        let one = UPrimeElement::from_u(&UglElement::one(rank));
        let e01 = UPrimeElement::from_u(&UglElement::gen(rank, 0, 1));
        assert_eq!(one.mul(&e01), e01);
        // X*X reduces to degree <= 1
        let xx = x.mul(&x);
        assert!(xx.rep().degree().unwrap() <= 1);
        // G_1 is central in U'
        let g1 = UPrimeElement::from_u(&UglElement::g1(rank));
        assert_eq!(g1.mul(&xx).sub(&xx.mul(&g1)).rep().clone(), UPoly::zero('X', rank));
    }

    #[test]
    fn pi_g_prime_examples() {
        let n = 1;
        let rank = GlRank::gl1(n);
        // pi_g'(X) = X - G_1/2
        let x = UPoly::variable('X', rank);
        let expected = x.sub(&UPoly::constant(
            'X',
            UglElement::g1(rank).scale(&crate::scalar::qr(1, 2)),
        ));
        assert_eq!(pi_g_prime(&x), expected);
        // pi_g'(G_1) = 0
        let g1 = UPoly::constant('X', UglElement::g1(rank));
        assert!(pi_g_prime(&g1).is_zero());
        assert!(verify_pi_g_prime(1, 7).is_ok());
    }

    #[test]
    fn cleared_row_identity_n1() {
        // uhat_1 = -E_10 and the identity reads -E_10 E_11 + E_10 (E_11 - X) = -E_10 X
        let n = 1;
        let big = GlRank::gl1(n);
        let hats = uhat(n);
        assert_eq!(
            hats[0],
            UPoly::constant('X', UglElement::gen(big, 1, 0).neg())
        );
        assert!(verify_cleared_u_identity(1).is_ok());
        assert!(verify_cleared_u_identity_impl(1, true).is_err());
    }

    #[test]
    fn basics_and_roundtrip() {
        assert!(verify_uprime_basics(1).is_ok());
        assert!(verify_reduction_roundtrip(1, 10, 3).is_ok());
    }
}
