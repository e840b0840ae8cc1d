//! Gelfand invariants G_k = tr(E^k), the path elements r_k(a, b), the mixed
//! blocks f_m(a, b), and the closed-form expressions for their images under
//! rho, verified against an independent generator-wise expansion.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::dops::DopElement;
use crate::error::{clip, Check, Error, Failure, Result};
use crate::homs::RhoMap;
use crate::scalar::{binom, q};
use crate::tensor::{euler_tensor, r1, r2, TensorCtx, TensorElement};
use crate::ugl::{GlRank, UglElement};

thread_local! {
    static R_TABLE: RefCell<HashMap<(GlRank, usize), Vec<UglElement>>> =
        RefCell::new(HashMap::new());
    static RHO_R_TABLE: RefCell<HashMap<(usize, usize), Vec<TensorElement>>> =
        RefCell::new(HashMap::new());
}

fn table_index(rank: GlRank, a: usize, b: usize) -> usize {
    (a - rank.first) * rank.dim() + (b - rank.first)
}

/// r_0(a,b) = delta_ab; r_{k+1}(a,b) = sum_i r_k(a,i) E_ib.
pub fn r_k(rank: GlRank, k: usize, a: usize, b: usize) -> UglElement {
    assert!(rank.contains(a) && rank.contains(b));
    r_table(rank, k)[table_index(rank, a, b)].clone()
}

fn r_table(rank: GlRank, k: usize) -> Vec<UglElement> {
    if let Some(t) = R_TABLE.with(|c| c.borrow().get(&(rank, k)).cloned()) {
        return t;
    }
    let table = if k == 0 {
        let mut t = Vec::with_capacity(rank.gen_count());
        for a in rank.indices() {
            for b in rank.indices() {
                t.push(if a == b {
                    UglElement::one(rank)
                } else {
                    UglElement::zero(rank)
                });
            }
        }
        t
    } else {
        let prev = r_table(rank, k - 1);
        let mut t = Vec::with_capacity(rank.gen_count());
        for a in rank.indices() {
            for b in rank.indices() {
                let mut acc = UglElement::zero(rank);
                for i in rank.indices() {
                    acc = acc.add(
                        &prev[table_index(rank, a, i)].mul(&UglElement::gen(rank, i, b)),
                    );
                }
                t.push(acc);
            }
        }
        t
    };
    R_TABLE.with(|c| c.borrow_mut().insert((rank, k), table.clone()));
    table
}

/// G_k = sum_i r_k(i, i) = tr(E^k); G_0 is the dimension.
pub fn gelfand_g(rank: GlRank, k: usize) -> UglElement {
    if k == 0 {
        return UglElement::scalar(rank, q(rank.dim() as i64));
    }
    let mut acc = UglElement::zero(rank);
    for i in rank.indices() {
        acc = acc.add(&r_k(rank, k, i, i));
    }
    acc
}

/// rho(r_k(a,b)) over gl(n+1), computed through the same trace recursion but
/// inside the tensor algebra: rho(r_{k+1}(a,b)) = sum_i rho(r_k(a,i)) rho(E_ib).
pub fn rho_r_k(rho: &RhoMap, k: usize, a: usize, b: usize) -> TensorElement {
    let rank = rho.source();
    assert!(rank.contains(a) && rank.contains(b));
    rho_r_table(rho, k)[table_index(rank, a, b)].clone()
}

fn rho_r_table(rho: &RhoMap, k: usize) -> Vec<TensorElement> {
    let n = rho.n();
    if let Some(t) = RHO_R_TABLE.with(|c| c.borrow().get(&(n, k)).cloned()) {
        return t;
    }
    let rank = rho.source();
    let ctx = rho.target_ctx();
    let table = if k == 0 {
        let mut t = Vec::with_capacity(rank.gen_count());
        for a in rank.indices() {
            for b in rank.indices() {
                t.push(if a == b {
                    TensorElement::one(ctx)
                } else {
                    TensorElement::zero(ctx)
                });
            }
        }
        t
    } else {
        let prev = rho_r_table(rho, k - 1);
        let mut t = Vec::with_capacity(rank.gen_count());
        for a in rank.indices() {
            for b in rank.indices() {
                let mut acc = TensorElement::zero(ctx);
                for i in rank.indices() {
                    acc = acc.add(&prev[table_index(rank, a, i)].mul(rho.gen_image(i, b)));
                }
                t.push(acc);
            }
        }
        t
    };
    RHO_R_TABLE.with(|c| c.borrow_mut().insert((n, k), table.clone()));
    table
}

pub fn rho_gelfand_g(rho: &RhoMap, k: usize) -> TensorElement {
    let rank = rho.source();
    let mut acc = TensorElement::zero(rho.target_ctx());
    for i in rank.indices() {
        acc = acc.add(&rho_r_k(rho, k, i, i));
    }
    acc
}

/// f_m(a,b) = sum_{i=1}^n t_a d_i tensor r_{m-1}(i,b), for m >= 1, 0 <= a <= n,
/// 1 <= b <= n.
pub fn f_m(n: usize, m: usize, a: usize, b: usize) -> Result<TensorElement> {
    if m < 1 {
        return Err(Error::IndexOutOfRange("f_m needs m >= 1".into()));
    }
    if a > n || b < 1 || b > n {
        return Err(Error::IndexOutOfRange(format!("f_{m}({a},{b}) with n={n}")));
    }
    let ctx = TensorCtx::standard(n);
    let gln = GlRank::gl(n);
    let mut acc = TensorElement::zero(ctx);
    for i in 1..=n {
        acc = acc.add(&TensorElement::pure(
            ctx,
            &DopElement::t_d(n, a, i),
            &r_k(gln, m - 1, i, b),
        ));
    }
    Ok(acc)
}

/// sum_{g=0}^{k-m} C(k,g) R_1^g R_2^{k-m-g}; zero when m > k.
fn binomial_block(n: usize, k: usize, m: usize) -> TensorElement {
    let ctx = TensorCtx::standard(n);
    let mut acc = TensorElement::zero(ctx);
    if m > k {
        return acc;
    }
    let r1 = r1(n);
    let r2 = r2(n);
    for g in 0..=(k - m) {
        let term = r1.pow(g as u32).mul(&r2.pow((k - m - g) as u32));
        acc = acc.add(&term.scale(&binom(k, g)));
    }
    acc
}

/// sum_{i,j>0} d_i t_j tensor r_{m-1}(i,j), transcribed in its displayed
/// (non-normal-ordered) form; the operator product performs the reordering.
fn dt_block(n: usize, m: usize) -> TensorElement {
    let ctx = TensorCtx::standard(n);
    let gln = GlRank::gl(n);
    let mut acc = TensorElement::zero(ctx);
    for i in 1..=n {
        for j in 1..=n {
            let op = DopElement::d(n, i).mul(&DopElement::t(n, j));
            acc = acc.add(&TensorElement::pure(ctx, &op, &r_k(gln, m - 1, i, j)));
        }
    }
    acc
}

/// The closed form for rho(r_k(a,b)), one of four shapes by which indices
/// touch 0.
pub fn rho_r_closed_form(n: usize, k: usize, a: usize, b: usize) -> Result<TensorElement> {
    let ctx = TensorCtx::standard(n);
    let gln = GlRank::gl(n);
    let r1 = r1(n);
    if a > 0 && b > 0 {
        let mut acc = TensorElement::zero(ctx);
        for m in 1..=k {
            acc = acc.add(&f_m(n, m, a, b)?.mul(&binomial_block(n, k, m)));
        }
        for g in 0..=k {
            let tail = TensorElement::from_ugl(ctx, &r_k(gln, k - g, a, b));
            acc = acc.add(&r1.pow(g as u32).mul(&tail).scale(&binom(k, g)));
        }
        Ok(acc)
    } else if a > 0 {
        let mut acc =
            binomial_block(n, k, 1).mul(&TensorElement::from_dop(ctx, &DopElement::t_d(n, a, 0)));
        for g in 0..k {
            let mut inner = TensorElement::zero(ctx);
            for j in 1..=n {
                inner = inner.add(&TensorElement::pure(
                    ctx,
                    &DopElement::t_ratio(n, j),
                    &r_k(gln, k - g, a, j),
                ));
            }
            acc = acc.sub(&r1.pow(g as u32).mul(&inner).scale(&binom(k, g)));
        }
        let ratio = TensorElement::from_dop(ctx, &DopElement::t_ratio(n, a));
        let mut tail = TensorElement::zero(ctx);
        for m in 2..=k {
            tail = tail.add(&binomial_block(n, k, m).mul(&dt_block(n, m)));
        }
        Ok(acc.sub(&ratio.mul(&tail)))
    } else if b > 0 {
        let mut acc = TensorElement::zero(ctx);
        for m in 1..=k {
            acc = acc.add(&f_m(n, m, 0, b)?.mul(&binomial_block(n, k, m)));
        }
        Ok(acc)
    } else {
        let mut acc =
            binomial_block(n, k, 1).mul(&TensorElement::from_dop(ctx, &DopElement::t_d(n, 0, 0)));
        acc = acc.add(&r1.pow(k as u32));
        for m in 2..=k {
            acc = acc.sub(&binomial_block(n, k, m).mul(&dt_block(n, m)));
        }
        Ok(acc)
    }
}

/// The closed form for rho(G_k).
pub fn rho_g_closed_form(n: usize, k: usize) -> TensorElement {
    let ctx = TensorCtx::standard(n);
    let gln = GlRank::gl(n);
    let r1 = r1(n);
    let mut acc = binomial_block(n, k, 1).mul(&euler_tensor(n));
    acc = acc.add(&r1.pow(k as u32).scale(&q(n as i64 + 1)));
    for g in 0..k {
        let term = r1
            .pow(g as u32)
            .mul(&TensorElement::from_ugl(ctx, &gelfand_g(gln, k - g)));
        acc = acc.add(&term.scale(&binom(k, g)));
    }
    for m in 2..=k {
        acc = acc.sub(
            &binomial_block(n, k, m)
                .mul(&TensorElement::from_ugl(ctx, &gelfand_g(gln, m - 1))),
        );
    }
    acc
}

/// The degree-3 instance written out termwise, used as a cross-check against
/// both the closed form and the generator-wise image.
pub fn rho_g3_display(n: usize) -> TensorElement {
    let ctx = TensorCtx::standard(n);
    let gln = GlRank::gl(n);
    let r1 = r1(n);
    let r2 = r2(n);
    let g1 = TensorElement::from_ugl(ctx, &gelfand_g(gln, 1));
    let g2 = TensorElement::from_ugl(ctx, &gelfand_g(gln, 2));
    let g3 = TensorElement::from_ugl(ctx, &gelfand_g(gln, 3));
    let quad = r2
        .pow(2)
        .add(&r1.mul(&r2).scale(&q(3)))
        .add(&r1.pow(2).scale(&q(3)));
    quad.mul(&euler_tensor(n))
        .add(&r1.pow(3).scale(&q(n as i64 + 1)))
        .add(&g3)
        .add(&r1.mul(&g2).scale(&q(3)))
        .add(&r1.pow(2).mul(&g1).scale(&q(3)))
        .sub(&g2)
        .sub(&r2.add(&r1.scale(&q(3))).mul(&g1))
}

/// Checks the four closed forms for rho(r_k(a,b)) against the generator-wise
/// image of the explicit element, for all index shapes and k <= kmax.
pub fn verify_appendix(rho: &RhoMap, kmax: usize) -> Check {
    let n = rho.n();
    let rank = rho.source();
    for k in 1..=kmax {
        for a in 0..=n {
            for b in 0..=n {
                let lhs = rho.apply(&r_k(rank, k, a, b));
                let rhs = rho_r_closed_form(n, k, a, b)
                    .map_err(|e| Failure::new("appendix", e.to_string()))?;
                if lhs != rhs {
                    let case = match (a > 0, b > 0) {
                        (true, true) => "a,b>0",
                        (true, false) => "b=0",
                        (false, true) => "a=0",
                        (false, false) => "a=b=0",
                    };
                    return Err(Failure::new(
                        "appendix",
                        clip(format!(
                            "k={k} a={a} b={b} ({case}): lhs - rhs = {}",
                            lhs.sub(&rhs)
                        )),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Checks rho(G_k) against its closed form for k <= kmax, and the written-out
/// k = 3 instance when it is in range.
pub fn verify_thm_rho_g(rho: &RhoMap, kmax: usize) -> Check {
    let n = rho.n();
    let rank = rho.source();
    for k in 1..=kmax {
        let lhs = rho.apply(&gelfand_g(rank, k));
        let rhs = rho_g_closed_form(n, k);
        if lhs != rhs {
            return Err(Failure::new(
                "thm-rho-g",
                clip(format!("k={k}: lhs - rhs = {}", lhs.sub(&rhs))),
            ));
        }
        if k == 3 {
            let display = rho_g3_display(n);
            if display != rhs {
                return Err(Failure::new(
                    "thm-rho-g",
                    clip(format!(
                        "k=3 display mismatch: display - closed = {}",
                        display.sub(&rhs)
                    )),
                ));
            }
        }
    }
    Ok(())
}

/// Summing the r_k closed forms over a = b reproduces the G_k closed form.
pub fn verify_appendix_implies_thm(n: usize, kmax: usize) -> Check {
    for k in 1..=kmax {
        let mut total = TensorElement::zero(TensorCtx::standard(n));
        for a in 0..=n {
            total = total.add(
                &rho_r_closed_form(n, k, a, a)
                    .map_err(|e| Failure::new("appendix-sum", e.to_string()))?,
            );
        }
        let direct = rho_g_closed_form(n, k);
        if total != direct {
            return Err(Failure::new(
                "appendix-sum",
                clip(format!("k={k}: sum - closed = {}", total.sub(&direct))),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::NcMatrix;

    #[test]
    fn r_k_base_cases() {
        let rank = GlRank::gl1(1);
        assert_eq!(r_k(rank, 0, 0, 0), UglElement::one(rank));
        assert!(r_k(rank, 0, 0, 1).is_zero());
        assert_eq!(r_k(rank, 1, 0, 1), UglElement::gen(rank, 0, 1));
        // r_2(1,1) = E_10 E_01 + E_11 E_11 over indices 0..1
        let expected = UglElement::gen(rank, 1, 0)
            .mul(&UglElement::gen(rank, 0, 1))
            .add(&UglElement::gen(rank, 1, 1).mul(&UglElement::gen(rank, 1, 1)));
        assert_eq!(r_k(rank, 2, 1, 1), expected);
    }

    #[test]
    fn recursion_matches_direct_index_sums() {
        let rank = GlRank::gl(2);
        for k in 1..=4usize {
            for a in rank.indices() {
                for b in rank.indices() {
                    // direct (k-1)-fold sum over index paths
                    let mut direct = UglElement::zero(rank);
                    let mut paths = vec![vec![a]];
                    for _ in 0..k - 1 {
                        let mut next = Vec::new();
                        for p in paths {
                            for i in rank.indices() {
                                let mut np = p.clone();
                                np.push(i);
                                next.push(np);
                            }
                        }
                        paths = next;
                    }
                    for p in paths {
                        let mut word = UglElement::one(rank);
                        let mut prev = p[0];
                        for &i in &p[1..] {
                            word = word.mul(&UglElement::gen(rank, prev, i));
                            prev = i;
                        }
                        word = word.mul(&UglElement::gen(rank, prev, b));
                        direct = direct.add(&word);
                    }
                    assert_eq!(r_k(rank, k, a, b), direct, "k={k} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn gelfand_invariants() {
        let rank = GlRank::gl(2);
        assert_eq!(gelfand_g(rank, 0), UglElement::scalar(rank, q(2)));
        assert_eq!(gelfand_g(rank, 1), UglElement::g1(rank));
        assert!(gelfand_g(rank, 3).is_central());
    }

    #[test]
    fn trace_of_matrix_power_matches() {
        let rank = GlRank::gl(2);
        let e = NcMatrix::from_fn(rank.dim(), rank, |i, j| {
            UglElement::gen(rank, rank.first + i, rank.first + j)
        });
        for k in 1..=3u32 {
            let pk = e.pow(k);
            let mut tr = UglElement::zero(rank);
            for i in 0..rank.dim() {
                tr = tr.add(pk.at(i, i));
            }
            assert_eq!(tr, gelfand_g(rank, k as usize));
        }
    }

    #[test]
    fn f_m_small_cases() {
        let n = 1;
        let ctx = TensorCtx::standard(n);
        assert_eq!(
            f_m(n, 1, 0, 1).unwrap(),
            TensorElement::from_dop(ctx, &DopElement::t_d(n, 0, 1))
        );
        assert_eq!(
            f_m(n, 2, 1, 1).unwrap(),
            TensorElement::pure(
                ctx,
                &DopElement::t_d(n, 1, 1),
                &UglElement::gen(GlRank::gl(n), 1, 1)
            )
        );
        // f_2(0,1) over n=2
        let n = 2;
        let ctx = TensorCtx::standard(n);
        let gln = GlRank::gl(n);
        let expected = TensorElement::pure(
            ctx,
            &DopElement::t_d(n, 0, 1),
            &UglElement::gen(gln, 1, 1),
        )
        .add(&TensorElement::pure(
            ctx,
            &DopElement::t_d(n, 0, 2),
            &UglElement::gen(gln, 2, 1),
        ));
        assert_eq!(f_m(n, 2, 0, 1).unwrap(), expected);
        assert!(f_m(n, 0, 0, 1).is_err());
        assert!(f_m(n, 1, 0, 0).is_err());
    }

    #[test]
    fn appendix_base_case_is_the_generator_table() {
        let rho = RhoMap::new(2);
        for a in 0..=2 {
            for b in 0..=2 {
                let closed = rho_r_closed_form(2, 1, a, b).unwrap();
                assert_eq!(closed, *rho.gen_image(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn rho_g1_vanishes_via_closed_form() {
        for n in [1, 2] {
            assert!(rho_g_closed_form(n, 1).is_zero());
            let rho = RhoMap::new(n);
            assert!(rho_gelfand_g(&rho, 1).is_zero());
        }
    }
}
