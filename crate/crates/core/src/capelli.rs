//! Capelli determinants with staggered diagonal shifts, their minors, the
//! factorization of their image under rho, the Cayley-Hamilton identities,
//! and the Newton series relating them to the Gelfand invariants.
//!
//! The column determinant here carries sgn(sigma); without the sign the
//! T-coefficients stop being central (see `column_det_unsigned` and the
//! sign-arbiter checks).

use crate::error::{clip, Check, Error, Failure, Result};
use crate::gelfand::gelfand_g;
use crate::homs::RhoMap;
use crate::laurent::{series_div, LaurentTail};
use crate::ring::Ring;
use crate::scalar::q;
use crate::tensor::{euler_tensor, r1, r2, TensorElement};
use crate::tpoly::{matrix_substitute, NcMatrix, TPoly};
use crate::ugl::{GlRank, UglElement};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CapelliVariant {
    /// Diagonal shifts -T, -T-1, ..., -T-N+1.
    Std,
    /// The variant with C^M(T) = C(-T).
    M,
    /// The variant with C^U(T) = C(T - N + 1).
    U,
}

type UPoly = TPoly<UglElement>;

/// The Capelli matrix over the index range `idx`, with entries in U over the
/// (possibly larger) range `alg`.
pub fn capelli_matrix(alg: GlRank, idx: GlRank, var: char) -> NcMatrix<UPoly> {
    assert!(alg.contains(idx.first) && alg.contains(idx.last));
    let ctx = (var, alg);
    NcMatrix::from_fn(idx.dim(), ctx, |r, c| {
        let (i, j) = (idx.first + r, idx.first + c);
        let e = UPoly::constant(var, UglElement::gen(alg, i, j));
        if i == j {
            // E_ii - var - position
            let shift = UPoly::from_coeffs(
                var,
                alg,
                vec![
                    UglElement::scalar(alg, q(-(r as i64))),
                    UglElement::one(alg).neg(),
                ],
            );
            e.add(&shift)
        } else {
            e
        }
    })
}

/// The Capelli polynomial over `idx` inside U over `alg`.
pub fn capelli_in(alg: GlRank, idx: GlRank, var: char, variant: CapelliVariant) -> UPoly {
    let std = capelli_matrix(alg, idx, var).column_det();
    match variant {
        CapelliVariant::Std => std,
        CapelliVariant::M => std.subst_neg_var(),
        CapelliVariant::U => std.shift_scalar(&q(-(idx.dim() as i64 - 1))),
    }
}

pub fn capelli(rank: GlRank, var: char, variant: CapelliVariant) -> UPoly {
    capelli_in(rank, rank, var, variant)
}

/// The (i, j) minor determinant: column j is replaced by the indicator of
/// row i and the remaining diagonal shifts skip one step past column j.
pub fn capelli_minor(alg: GlRank, idx: GlRank, i: usize, j: usize, var: char) -> Result<UPoly> {
    if !idx.contains(i) || !idx.contains(j) {
        return Err(Error::IndexOutOfRange(format!(
            "minor ({i},{j}) outside {idx}"
        )));
    }
    Ok(minor_matrix_entry(alg, idx, i, j, var))
}

fn minor_matrix_entry(alg: GlRank, idx: GlRank, i: usize, j: usize, var: char) -> UPoly {
    let ctx = (var, alg);
    let m = NcMatrix::from_fn(idx.dim(), ctx, |r, c| {
        let (row, col) = (idx.first + r, idx.first + c);
        if col == j {
            if row == i {
                UPoly::constant(var, UglElement::one(alg))
            } else {
                UPoly::zero(var, alg)
            }
        } else if row == col {
            // positions before column j shift by pos, after it by pos - 1
            let pos = (row - idx.first + 1) as i64;
            let shift = if row < j { pos } else { pos - 1 };
            UPoly::from_coeffs(
                var,
                alg,
                vec![
                    UglElement::scalar(alg, q(-shift)),
                    UglElement::one(alg).neg(),
                ],
            )
            .add(&UPoly::constant(var, UglElement::gen(alg, row, col)))
        } else {
            UPoly::constant(var, UglElement::gen(alg, row, col))
        }
    });
    m.column_det()
}

/// The full matrix of minors M(T)_{ij}.
pub fn minor_matrix(alg: GlRank, idx: GlRank, var: char) -> NcMatrix<UPoly> {
    NcMatrix::from_fn(idx.dim(), (var, alg), |r, c| {
        minor_matrix_entry(alg, idx, idx.first + r, idx.first + c, var)
    })
}

fn diag_const(size: usize, ctx: (char, GlRank), value: UPoly) -> NcMatrix<UPoly> {
    NcMatrix::from_fn(size, ctx, |i, j| {
        if i == j {
            value.clone()
        } else {
            UPoly::zero(ctx.0, ctx.1)
        }
    })
}

/// (E^t - T) M(T) = M(T) (E^t - T) = C(T) and
/// M(T)^t (E - T - N) = (E - T - N) M(T)^t = C(T+1), for the given range.
pub fn verify_minor_identities_for(rank: GlRank) -> Check {
    let var = 'T';
    let ctx = (var, rank);
    let size = rank.dim();
    let m = minor_matrix(rank, rank, var);
    let c = capelli(rank, var, CapelliVariant::Std);
    let c_shift = c.shift_scalar(&q(1));
    let tvar = UPoly::variable(var, rank);
    // E^t - T
    let et_minus_t = NcMatrix::from_fn(size, ctx, |i, j| {
        let e = UPoly::constant(var, UglElement::gen(rank, rank.first + j, rank.first + i));
        if i == j {
            e.sub(&tvar)
        } else {
            e
        }
    });
    // E - T - N
    let e_minus_t_n = NcMatrix::from_fn(size, ctx, |i, j| {
        let e = UPoly::constant(var, UglElement::gen(rank, rank.first + i, rank.first + j));
        if i == j {
            e.sub(&tvar).sub(&UPoly::constant(
                var,
                UglElement::scalar(rank, q(size as i64)),
            ))
        } else {
            e
        }
    });
    let mt = m.transpose();
    let checks: [(&str, NcMatrix<UPoly>, &UPoly); 4] = [
        ("(E^t - T) M = C(T)", et_minus_t.mul(&m), &c),
        ("M (E^t - T) = C(T)", m.mul(&et_minus_t), &c),
        ("M^t (E - T - N) = C(T+1)", mt.mul(&e_minus_t_n), &c_shift),
        ("(E - T - N) M^t = C(T+1)", e_minus_t_n.mul(&mt), &c_shift),
    ];
    for (name, lhs, rhs) in checks {
        let expected = diag_const(size, ctx, rhs.clone());
        if lhs != expected {
            return Err(Failure::new(
                "capelli-minors",
                clip(format!("{rank}: {name} fails")),
            ));
        }
    }
    Ok(())
}

/// Runs the minor identities at size n and size n+1.
pub fn verify_minor_identities(n: usize) -> Check {
    verify_minor_identities_for(GlRank::gl(n))?;
    verify_minor_identities_for(GlRank::gl1(n))
}

/// Every T-coefficient of the (signed) Capelli polynomial is central; with
/// the unsigned determinant this fails from size 2 on.
pub fn verify_capelli_centrality(rank: GlRank, signed: bool) -> Check {
    let det = if signed {
        capelli_matrix(rank, rank, 'T').column_det()
    } else {
        capelli_matrix(rank, rank, 'T').column_det_unsigned()
    };
    for (k, c) in det.coeffs().iter().enumerate() {
        if !c.is_zero() && !c.is_central() {
            return Err(Failure::new(
                "capelli-centrality",
                format!("{rank}: coefficient of T^{k} is not central"),
            ));
        }
    }
    Ok(())
}

/// C(T) = C^M(-T) = C^U(T + N - 1) as polynomial identities.
pub fn verify_variant_consistency(rank: GlRank) -> Check {
    let std = capelli(rank, 'T', CapelliVariant::Std);
    let m = capelli(rank, 'T', CapelliVariant::M);
    let u = capelli(rank, 'T', CapelliVariant::U);
    if std != m.subst_neg_var() {
        return Err(Failure::new(
            "capelli-variants",
            format!("{rank}: C(T) != C^M(-T)"),
        ));
    }
    if std != u.shift_scalar(&q(rank.dim() as i64 - 1)) {
        return Err(Failure::new(
            "capelli-variants",
            format!("{rank}: C(T) != C^U(T + N - 1)"),
        ));
    }
    Ok(())
}

/// rho applied to the T-coefficients of the Capelli polynomial of gl(n+1).
pub fn rho_capelli(rho: &RhoMap) -> TPoly<TensorElement> {
    let cap = capelli(rho.source(), 'T', CapelliVariant::Std);
    cap.map_coeffs(rho.target_ctx(), |c| rho.apply(c))
}

/// The shifted matrix whose column determinant expands the left side of the
/// factorization: entries rho(E_ij) - delta_ij (T + R_1 + position).
pub fn rho_capelli_matrix_shifted(rho: &RhoMap) -> NcMatrix<TPoly<TensorElement>> {
    let n = rho.n();
    let ctx = ('T', rho.target_ctx());
    let r1 = r1(n);
    NcMatrix::from_fn(n + 1, ctx, |i, j| {
        let e = TPoly::constant('T', rho.gen_image(i, j).clone());
        if i == j {
            let shift = TPoly::from_coeffs(
                'T',
                rho.target_ctx(),
                vec![
                    r1.add(&TensorElement::scalar(rho.target_ctx(), q(i as i64))),
                    TensorElement::one(rho.target_ctx()),
                ],
            );
            e.sub(&shift)
        } else {
            e
        }
    })
}

/// The factorization of the Capelli image: substituting T + R_1 gives
/// (Euler - T) C_n(T+1), and evaluating at the central element Euler + R_1
/// gives zero.
pub fn verify_thm_rho_capelli(rho: &RhoMap) -> Check {
    let n = rho.n();
    let ctx = rho.target_ctx();
    let c_rho = rho_capelli(rho);
    let lhs = c_rho.subst_add(&r1(n));
    let c_n = capelli(GlRank::gl(n), 'T', CapelliVariant::Std).shift_scalar(&q(1));
    let embedded = c_n.map_coeffs(ctx, |c| TensorElement::from_ugl(ctx, c));
    let factor = TPoly::from_coeffs(
        'T',
        ctx,
        vec![euler_tensor(n), TensorElement::one(ctx).neg()],
    );
    let rhs = factor.mul(&embedded);
    if lhs != rhs {
        for k in 0..=lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0)) {
            if lhs.coeff(k) != rhs.coeff(k) {
                return Err(Failure::new(
                    "thm-rho-capelli",
                    clip(format!(
                        "n={n}: T^{k} coefficient differs: {}",
                        lhs.coeff(k).sub(&rhs.coeff(k))
                    )),
                ));
            }
        }
    }
    // the shifted determinant expands to the same left side
    let det = rho_capelli_matrix_shifted(rho).column_det();
    if det != lhs {
        return Err(Failure::new(
            "thm-rho-capelli",
            clip(format!("n={n}: shifted determinant differs from C_rho(T+R_1)")),
        ));
    }
    // the root at the central element Euler + R_1
    let root = euler_tensor(n).add(&r1(n));
    if !root.is_central() {
        return Err(Failure::new(
            "thm-rho-capelli",
            format!("n={n}: Euler + R_1 is not central"),
        ));
    }
    let value = c_rho.eval(&root);
    if !value.is_zero() {
        return Err(Failure::new(
            "thm-rho-capelli",
            clip(format!("n={n}: C_rho(Euler + R_1) = {value}")),
        ));
    }
    Ok(())
}

/// The two tensor-algebra Cayley-Hamilton identities for C_rho and the two
/// classical ones for the M-variant in U(gl(n)).
pub fn verify_cayley_hamilton(rho: &RhoMap) -> Check {
    let n = rho.n();
    let ctx = rho.target_ctx();
    let c_rho = rho_capelli(rho);
    let gln = GlRank::gl(n);
    // E_n with entries 1 tensor E_ij, shifted by R_1 - n
    let shift_a = r1(n).sub(&TensorElement::scalar(ctx, q(n as i64)));
    let a = NcMatrix::from_fn(n, ctx, |i, j| {
        let e = TensorElement::from_ugl(ctx, &UglElement::gen(gln, i + 1, j + 1));
        if i == j {
            e.add(&shift_a)
        } else {
            e
        }
    });
    let image = matrix_substitute(&c_rho, &a, TensorElement::is_central)
        .map_err(|e| Failure::new("cayley-hamilton", e.to_string()))?;
    if !image.is_zero() {
        return Err(Failure::new(
            "cayley-hamilton",
            format!("n={n}: C_rho(E + R_1 - n) != 0"),
        ));
    }
    // E_n^t shifted by R_1 - 1
    let shift_b = r1(n).sub(&TensorElement::one(ctx));
    let b = NcMatrix::from_fn(n, ctx, |i, j| {
        let e = TensorElement::from_ugl(ctx, &UglElement::gen(gln, j + 1, i + 1));
        if i == j {
            e.add(&shift_b)
        } else {
            e
        }
    });
    let image = matrix_substitute(&c_rho, &b, TensorElement::is_central)
        .map_err(|e| Failure::new("cayley-hamilton", e.to_string()))?;
    if !image.is_zero() {
        return Err(Failure::new(
            "cayley-hamilton",
            format!("n={n}: C_rho(E^t - 1 + R_1) != 0"),
        ));
    }
    // C^M(-E + n - 1) = 0 and C^M(-E^t) = 0 in U(gl(n))
    let cm = capelli(gln, 'T', CapelliVariant::M);
    let neg_e_shift = NcMatrix::from_fn(n, gln, |i, j| {
        let e = UglElement::gen(gln, i + 1, j + 1).neg();
        if i == j {
            e.add(&UglElement::scalar(gln, q(n as i64 - 1)))
        } else {
            e
        }
    });
    let image = matrix_substitute(&cm, &neg_e_shift, UglElement::is_central)
        .map_err(|e| Failure::new("cayley-hamilton", e.to_string()))?;
    if !image.is_zero() {
        return Err(Failure::new(
            "cayley-hamilton",
            format!("n={n}: C^M(-E + n - 1) != 0"),
        ));
    }
    let neg_et = NcMatrix::from_fn(n, gln, |i, j| UglElement::gen(gln, j + 1, i + 1).neg());
    let image = matrix_substitute(&cm, &neg_et, UglElement::is_central)
        .map_err(|e| Failure::new("cayley-hamilton", e.to_string()))?;
    if !image.is_zero() {
        return Err(Failure::new(
            "cayley-hamilton",
            format!("n={n}: C^M(-E^t) != 0"),
        ));
    }
    Ok(())
}

fn tpoly_to_tail<R: Ring>(p: &TPoly<R>, order: usize) -> LaurentTail<R> {
    let deg = p.degree().unwrap_or(0);
    let coeffs: Vec<R> = (0..=deg).map(|k| p.coeff(deg - k)).collect();
    LaurentTail::from_descending(deg as i64, coeffs, order, p.ring_ctx())
}

fn assert_commuting<R: Ring>(items: &[R], what: &str) -> Check {
    for (i, a) in items.iter().enumerate() {
        for b in items.iter().skip(i + 1) {
            if !a.commutes_with(b) {
                return Err(Failure::new(
                    "commutativity",
                    format!("{what}: coefficients do not commute pairwise"),
                ));
            }
        }
    }
    Ok(())
}

/// The Newton series: (C_N(T-N+1) - C_N(T-N)) / C_N(T-N+1) agrees with
/// sum_k G_k T^{-1-k} through order K, with G_0 = N.
pub fn verify_newton(rank: GlRank, k_order: usize) -> Check {
    let nn = rank.dim() as i64;
    let c = capelli(rank, 'T', CapelliVariant::Std);
    let c_hi = c.shift_scalar(&q(-nn + 1));
    let c_lo = c.shift_scalar(&q(-nn));
    let num = c_hi.sub(&c_lo);
    let mut coeffs: Vec<UglElement> = Vec::new();
    coeffs.extend(num.coeffs().iter().cloned());
    coeffs.extend(c_hi.coeffs().iter().cloned());
    assert_commuting(&coeffs, "newton")?;
    let num_tail = tpoly_to_tail(&num, k_order);
    let den_tail = tpoly_to_tail(&c_hi, k_order);
    let lhs = series_div(&num_tail, &den_tail, k_order)
        .map_err(|e| Failure::new("newton", e.to_string()))?;
    let gk: Vec<UglElement> = (0..=k_order).map(|k| gelfand_g(rank, k)).collect();
    let rhs = LaurentTail::new(-1, gk, rank);
    if let Err((p, a, b)) = lhs.agrees_down_to(&rhs, -1 - k_order as i64) {
        return Err(Failure::new(
            "newton",
            clip(format!(
                "{rank}: T^{p} coefficient differs: lhs {a} vs rhs {b}"
            )),
        ));
    }
    Ok(())
}

/// The image of the Newton series under rho:
/// C_rho(T-n-1)/C_rho(T-n) = (1 - 1/(T-R_1-R_2)) C_n(T-R_1-n)/C_n(T-R_1-n+1).
pub fn verify_rho_newton(rho: &RhoMap, k_order: usize) -> Check {
    let n = rho.n();
    let ctx = rho.target_ctx();
    let w = k_order + 1;
    let c_rho = rho_capelli(rho);
    let lhs_num = c_rho.shift_scalar(&q(-(n as i64) - 1));
    let lhs_den = c_rho.shift_scalar(&q(-(n as i64)));
    let r1 = r1(n);
    let r2 = r2(n);
    let z = r1.add(&r2);
    let c_n = capelli(GlRank::gl(n), 'T', CapelliVariant::Std)
        .map_coeffs(ctx, |c| TensorElement::from_ugl(ctx, c));
    let shift_a = r1.neg().sub(&TensorElement::scalar(ctx, q(n as i64)));
    let a = c_n.subst_add(&shift_a);
    let b = c_n.subst_add(&shift_a.add(&TensorElement::one(ctx)));
    let mut coeffs: Vec<TensorElement> = Vec::new();
    for p in [&lhs_num, &lhs_den, &a, &b] {
        coeffs.extend(p.coeffs().iter().cloned());
    }
    coeffs.push(z.clone());
    assert_commuting(&coeffs, "rho-newton")?;
    let lhs = series_div(&tpoly_to_tail(&lhs_num, w), &tpoly_to_tail(&lhs_den, w), w)
        .map_err(|e| Failure::new("rho-newton", e.to_string()))?;
    // 1 - 1/(T - R_1 - R_2)
    let t_minus_z = LaurentTail::from_descending(
        1,
        vec![TensorElement::one(ctx), z.neg()],
        w,
        ctx,
    );
    let one_tail = LaurentTail::constant(TensorElement::one(ctx), w);
    let inv = series_div(&one_tail, &t_minus_z, w)
        .map_err(|e| Failure::new("rho-newton", e.to_string()))?;
    let factor = one_tail.sub(&inv);
    let quot = series_div(&tpoly_to_tail(&a, w), &tpoly_to_tail(&b, w), w)
        .map_err(|e| Failure::new("rho-newton", e.to_string()))?;
    let rhs = factor.mul(&quot);
    if let Err((p, l, r)) = lhs.agrees_down_to(&rhs, -1 - k_order as i64) {
        return Err(Failure::new(
            "rho-newton",
            clip(format!("n={n}: T^{p} coefficient differs: {}", l.sub(&r))),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capelli_1x1_and_2x2() {
        let r1x1 = GlRank::gl(1);
        let c1 = capelli(r1x1, 'T', CapelliVariant::Std);
        // E_11 - T
        assert_eq!(c1.coeff(0), UglElement::gen(r1x1, 1, 1));
        assert_eq!(c1.coeff(1), UglElement::one(r1x1).neg());
        let r2x2 = GlRank::gl(2);
        let c2 = capelli(r2x2, 'T', CapelliVariant::Std);
        // (E_11 - T)(E_22 - T - 1) - E_21 E_12
        let e = |i, j| UglElement::gen(r2x2, i, j);
        let t = UPoly::variable('T', r2x2);
        let lhs = UPoly::constant('T', e(1, 1))
            .sub(&t)
            .mul(
                &UPoly::constant('T', e(2, 2))
                    .sub(&t)
                    .sub(&UPoly::constant('T', UglElement::one(r2x2))),
            )
            .sub(&UPoly::constant('T', e(2, 1).mul(&e(1, 2))));
        assert_eq!(c2, lhs);
    }

    #[test]
    fn chi_of_m_variant_factors_linearly() {
        // chi(C_2^M(T)) = (T + l_1)(T + l_2), coefficientwise in T
        let rank = GlRank::gl(2);
        let cm = capelli(rank, 'T', CapelliVariant::M);
        use crate::cpoly::CPoly;
        let l1 = CPoly::var(1);
        let l2 = CPoly::var(2);
        // expected coefficients: T^2 + (l1+l2) T + l1 l2
        let expected = [l1.mul(&l2), l1.add(&l2), CPoly::constant(q(1))];
        for (k, want) in expected.iter().enumerate() {
            let img = crate::hc::chi(&cm.coeff(k)).unwrap();
            assert_eq!(img.poly, *want, "coefficient of T^{k}");
        }
    }

    #[test]
    fn variant_relations() {
        assert!(verify_variant_consistency(GlRank::gl(2)).is_ok());
        assert!(verify_variant_consistency(GlRank::gl1(2)).is_ok());
    }

    #[test]
    fn centrality_and_the_sign_arbiter() {
        assert!(verify_capelli_centrality(GlRank::gl(2), true).is_ok());
        assert!(verify_capelli_centrality(GlRank::gl(2), false).is_err());
        assert!(verify_capelli_centrality(GlRank::gl1(2), true).is_ok());
    }

    #[test]
    fn minor_base_cases() {
        // M_1(T)_{11} = 1
        let r = GlRank::gl(1);
        let m = capelli_minor(r, r, 1, 1, 'T').unwrap();
        assert_eq!(m, UPoly::constant('T', UglElement::one(r)));
        // M_{n+1}(X)_{00} = C_n(X+1) after the index shift
        for n in [1usize, 2] {
            let big = GlRank::gl1(n);
            let m00 = capelli_minor(big, big, 0, 0, 'X').unwrap();
            let c_n = capelli_in(big, GlRank::gl(n), 'X', CapelliVariant::Std)
                .shift_scalar(&q(1));
            assert_eq!(m00, c_n);
        }
    }

    #[test]
    fn minor_identities_smallest() {
        assert!(verify_minor_identities(1).is_ok());
    }

    #[test]
    fn newton_gl1_is_the_geometric_series() {
        assert!(verify_newton(GlRank::gl(1), 3).is_ok());
    }

    #[test]
    fn rho_capelli_factorization_n1() {
        let rho = RhoMap::new(1);
        assert!(verify_thm_rho_capelli(&rho).is_ok());
    }

    #[test]
    fn cayley_hamilton_1x1() {
        // C_1^M(-E_1) = -E_11 + E_11 = 0
        let rho = RhoMap::new(1);
        assert!(verify_cayley_hamilton(&rho).is_ok());
    }
}
