//! Harish-Chandra projections chi_N for central elements of U(gl(N)), the
//! mixed projection for C[Euler] tensor Z(gl(n)), the shift endomorphism tau,
//! and the diagram check relating them through rho.
//!
//! Conventions: delta_N = (0, -1, ..., -N+1), so the Cartan substitution is
//! E_ii -> l_i + (position of i), with positions counted from 0 at the first
//! index of the range. The projection itself drops every PBW monomial that
//! contains a non-Cartan factor, which is exact in the lowering < Cartan <
//! raising generator order.

use std::collections::BTreeMap;


use crate::capelli::{capelli, CapelliVariant};
use crate::cpoly::CPoly;
use crate::error::{clip, Check, Error, Failure, Result};
use crate::gelfand::{gelfand_g, rho_gelfand_g};
use crate::homs::RhoMap;
use crate::scalar::{q, Q};
use crate::tensor::{decompose_euler_center, TensorElement};
use crate::ugl::{GlRank, UglElement};

/// Image of a Harish-Chandra projection: a polynomial in the l-variables of
/// the given index range (plus l_0 for the mixed projection).
#[derive(Clone, PartialEq, Debug)]
pub struct HcImage {
    pub poly: CPoly,
    pub rank: GlRank,
}

impl std::fmt::Display for HcImage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// chi_N: drop non-Cartan monomials, substitute E_ii -> l_i - delta_i, check
/// the symmetric-polynomial invariant.
pub fn chi(z: &UglElement) -> Result<HcImage> {
    if !z.is_central() {
        return Err(Error::NotCentral);
    }
    let p = cartan_projection(z);
    let img = HcImage {
        poly: p,
        rank: z.rank(),
    };
    check_symmetry(&img)?;
    Ok(img)
}

/// The projection-and-shift without the centrality precondition; the
/// symmetric-polynomial invariant is not meaningful here.
fn cartan_projection(z: &UglElement) -> CPoly {
    let rank = z.rank();
    debug_assert!(order_is_lcr(rank));
    let mut acc = CPoly::zero();
    for (m, c) in z.terms() {
        let (low, cart, high) = UglElement::split_blocks(rank, m);
        if low.iter().any(|&e| e > 0) || high.iter().any(|&e| e > 0) {
            continue;
        }
        let mut term = CPoly::constant(c.clone());
        for (pos, &e) in cart.iter().enumerate() {
            if e > 0 {
                let sub = (rank.first + pos) as u32;
                let lin = CPoly::var(sub).add(&CPoly::constant(q(pos as i64)));
                term = term.mul(&lin.pow(e));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

fn order_is_lcr(rank: GlRank) -> bool {
    // lowering block first, then Cartan, then raising
    let lower = rank.dim() * (rank.dim() - 1) / 2;
    (0..rank.gen_count()).all(|idx| {
        if idx < lower {
            rank.is_lowering(idx)
        } else if idx < lower + rank.dim() {
            rank.is_cartan(idx)
        } else {
            rank.is_raising(idx)
        }
    })
}

fn check_symmetry(img: &HcImage) -> Result<()> {
    for i in img.rank.first..img.rank.last {
        let swapped = img.poly.swap_vars(i as u32, (i + 1) as u32);
        if swapped != img.poly {
            return Err(Error::SymmetryViolation(format!(
                "not invariant under l{} <-> l{}",
                i,
                i + 1
            )));
        }
    }
    Ok(())
}

/// The scalar by which a central element acts on a highest-weight module of
/// weight lambda: evaluate chi at lambda + delta_N.
pub fn central_character(z: &UglElement, lambda: &[Q]) -> Result<Q> {
    let img = chi(z)?;
    let rank = z.rank();
    if lambda.len() != rank.dim() {
        return Err(Error::ArityMismatch {
            expected: rank.dim(),
            got: lambda.len(),
        });
    }
    let mut values = BTreeMap::new();
    for (pos, i) in rank.indices().enumerate() {
        values.insert(i as u32, lambda[pos].clone() - q(pos as i64));
    }
    img.poly.ev_map(&values)
}

/// The mixed projection on C[Euler] tensor Z(gl(n)): Euler^i tensor z_i maps
/// to l_0^i chi_n(z_i).
pub fn chi_0n(z: &TensorElement) -> Result<HcImage> {
    let parts = decompose_euler_center(z, None)?;
    let n = z.ctx().n;
    let mut acc = CPoly::zero();
    for (i, z_i) in parts {
        let img = chi(&z_i)?;
        acc = acc.add(&CPoly::var(0).pow(i as u32).mul(&img.poly));
    }
    Ok(HcImage {
        poly: acc,
        rank: GlRank::gl1(n),
    })
}

/// l = -(1/(n+1)) (l_0 + l_1 + ... + l_n + n(n-1)/2), the chi-image of R_1.
pub fn ell(n: usize) -> CPoly {
    assert!(n >= 1);
    let mut acc = CPoly::var(0);
    for i in 1..=n {
        acc = acc.add(&CPoly::var(i as u32));
    }
    acc = acc.add(&CPoly::constant(q((n * (n - 1) / 2) as i64)));
    acc.scale(&Q::new((-1).into(), (n as i64 + 1).into()))
}

/// tau: p(l_0, l_1, ..., l_n) -> p(l_0 + l, l_1 + l - 1, ..., l_n + l - 1).
pub fn tau(img: &HcImage) -> HcImage {
    assert_eq!(img.rank.first, 0, "tau acts on gl(n+1) images");
    let n = img.rank.last;
    let l = ell(n);
    let mut subst = BTreeMap::new();
    subst.insert(0u32, CPoly::var(0).add(&l));
    for i in 1..=n {
        subst.insert(
            i as u32,
            CPoly::var(i as u32).add(&l).sub(&CPoly::constant(q(1))),
        );
    }
    HcImage {
        poly: img.poly.substitute(&subst).expect("total substitution"),
        rank: img.rank,
    }
}

/// Verifies chi_0n(rho(z)) = tau(chi_{n+1}(z)) for the Gelfand generators
/// G_1..G_kmax and for every T-coefficient of the Capelli polynomial.
pub fn verify_hc_diagram(rho: &RhoMap, kmax: usize) -> Check {
    let _ = rho.n();
    let rank = rho.source();
    let mut cases: Vec<(String, UglElement, TensorElement)> = Vec::new();
    for k in 1..=kmax {
        cases.push((
            format!("G_{k}"),
            gelfand_g(rank, k),
            rho_gelfand_g(rho, k),
        ));
    }
    let cap = capelli(rank, 'T', CapelliVariant::Std);
    for (k, c) in cap.coeffs().iter().enumerate() {
        cases.push((format!("capelli-coeff-T^{k}"), c.clone(), rho.apply(c)));
    }
    for (name, z, rho_z) in cases {
        let lhs = chi_0n(&rho_z)
            .map_err(|e| Failure::new("hc-diagram", format!("{name}: {e}")))?;
        let rhs = tau(
            &chi(&z).map_err(|e| Failure::new("hc-diagram", format!("{name}: {e}")))?,
        );
        if lhs.poly != rhs.poly {
            return Err(Failure::new(
                "hc-diagram",
                clip(format!(
                    "{name}: chi_0n(rho(z)) = {} but tau(chi(z)) = {}",
                    lhs.poly, rhs.poly
                )),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qr;

    #[test]
    fn chi_of_g1_matches_the_anchor() {
        for n in [1usize, 2, 3] {
            let rank = GlRank::gl(n);
            let img = chi(&gelfand_g(rank, 1)).unwrap();
            let mut expected = CPoly::constant(q((n * (n - 1) / 2) as i64));
            for i in 1..=n {
                expected = expected.add(&CPoly::var(i as u32));
            }
            assert_eq!(img.poly, expected);
        }
    }

    #[test]
    fn chi_of_one() {
        let rank = GlRank::gl(2);
        assert_eq!(
            chi(&UglElement::one(rank)).unwrap().poly,
            CPoly::constant(q(1))
        );
    }

    #[test]
    fn chi_rejects_non_central_input() {
        let rank = GlRank::gl(2);
        assert_eq!(
            chi(&UglElement::gen(rank, 1, 2)),
            Err(Error::NotCentral)
        );
    }

    #[test]
    fn ell_is_the_image_of_r1() {
        for n in [1usize, 2] {
            let img = chi_0n(&crate::tensor::r1(n)).unwrap();
            assert_eq!(img.poly, ell(n));
        }
    }

    #[test]
    fn chi_0n_of_r2() {
        // R_2 = Euler tensor 1 + n maps to l_0 + n
        for n in [1usize, 2] {
            let img = chi_0n(&crate::tensor::r2(n)).unwrap();
            let expected = CPoly::var(0).add(&CPoly::constant(q(n as i64)));
            assert_eq!(img.poly, expected);
        }
    }

    #[test]
    fn tau_on_small_inputs() {
        let n = 1;
        let one = HcImage {
            poly: CPoly::constant(q(1)),
            rank: GlRank::gl1(n),
        };
        assert_eq!(tau(&one).poly, CPoly::constant(q(1)));
        // tau(l_0) = l_0 + l = (l_0 - l_1)/2 for n = 1
        let l0 = HcImage {
            poly: CPoly::var(0),
            rank: GlRank::gl1(n),
        };
        let expected = CPoly::var(0).sub(&CPoly::var(1)).scale(&qr(1, 2));
        assert_eq!(tau(&l0).poly, expected);
        // stepwise tau on a sum equals tau applied to each variable
        let sum = HcImage {
            poly: CPoly::var(0).add(&CPoly::var(1)),
            rank: GlRank::gl1(n),
        };
        let via_parts = tau(&l0).poly.add(
            &tau(&HcImage {
                poly: CPoly::var(1),
                rank: GlRank::gl1(n),
            })
            .poly,
        );
        assert_eq!(tau(&sum).poly, via_parts);
    }

    #[test]
    fn tau_kills_chi_of_g1() {
        // chi_{n+1}(G_1) = sum l_i + n(n+1)/2 maps to 0 under tau
        for n in [1usize, 2] {
            let rank = GlRank::gl1(n);
            let img = chi(&gelfand_g(rank, 1)).unwrap();
            assert!(tau(&img).poly.is_zero());
        }
    }

    #[test]
    fn hc_diagram_small() {
        let rho = RhoMap::new(1);
        assert!(verify_hc_diagram(&rho, 2).is_ok());
    }

    #[test]
    fn chi_multiplicative_on_central_elements() {
        let rank = GlRank::gl(2);
        let g1 = gelfand_g(rank, 1);
        let g2 = gelfand_g(rank, 2);
        let lhs = chi(&g1.mul(&g2)).unwrap().poly;
        let rhs = chi(&g1).unwrap().poly.mul(&chi(&g2).unwrap().poly);
        assert_eq!(lhs, rhs);
    }
}
