//! The homomorphism rho from U(gl(n+1)) into D'(n) tensor U(gl(n)), the
//! trace-correction maps pi_g and iota_g between the gl and sl enveloping
//! algebras, and the commutation checks tying them together.

use crate::dops::DopElement;
use crate::error::{clip, Check, Error, Failure, Result};
use crate::scalar::{q, Q};
use crate::tensor::{r1, TensorCtx, TensorElement};
use crate::ugl::{to_adapted, GlRank, UglElement};

/// Fault injection for negative-control tests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RhoFault {
    /// Drop the R_1 correction from the image of E_00.
    DropR1FromE00,
}

/// Table of generator images defining rho on U(gl(n+1)); extended to the
/// whole algebra multiplicatively over canonical PBW monomials.
pub struct RhoMap {
    n: usize,
    source: GlRank,
    images: Vec<TensorElement>,
}

impl RhoMap {
    pub fn new(n: usize) -> Self {
        Self::build(n, None)
    }

    /// A deliberately corrupted table; `verify_hom` must reject it.
    pub fn with_fault(n: usize, fault: RhoFault) -> Self {
        Self::build(n, Some(fault))
    }

    fn build(n: usize, fault: Option<RhoFault>) -> Self {
        let source = GlRank::gl1(n);
        let ctx = TensorCtx::standard(n);
        let r1 = r1(n);
        let mut images = Vec::with_capacity(source.gen_count());
        for idx in 0..source.gen_count() {
            let (a, b) = source.gen_pair(idx);
            let image = if a > 0 && b > 0 {
                // t_a d_b tensor 1 + 1 tensor E_ab + delta_ab R_1
                let mut t = TensorElement::from_dop(ctx, &DopElement::t_d(n, a, b)).add(
                    &TensorElement::from_ugl(ctx, &UglElement::gen(ctx.urank, a, b)),
                );
                if a == b {
                    t = t.add(&r1);
                }
                t
            } else if a > 0 {
                // t_a d_0 tensor 1 - sum_{i>0} (t_i/t_0) tensor E_ai
                let mut t = TensorElement::from_dop(ctx, &DopElement::t_d(n, a, 0));
                for i in 1..=n {
                    t = t.sub(&TensorElement::pure(
                        ctx,
                        &DopElement::t_ratio(n, i),
                        &UglElement::gen(ctx.urank, a, i),
                    ));
                }
                t
            } else if b > 0 {
                TensorElement::from_dop(ctx, &DopElement::t_d(n, 0, b))
            } else {
                let t = TensorElement::from_dop(ctx, &DopElement::t_d(n, 0, 0));
                match fault {
                    Some(RhoFault::DropR1FromE00) => t,
                    None => t.add(&r1),
                }
            };
            images.push(image);
        }
        RhoMap { n, source, images }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> GlRank {
        self.source
    }

    pub fn target_ctx(&self) -> TensorCtx {
        TensorCtx::standard(self.n)
    }

    pub fn gen_image(&self, a: usize, b: usize) -> &TensorElement {
        &self.images[self.source.gen_index(a, b)]
    }

    /// Image of an arbitrary element, monomialwise over the PBW form.
    pub fn apply(&self, x: &UglElement) -> TensorElement {
        assert_eq!(x.rank(), self.source, "rank mismatch");
        let ctx = self.target_ctx();
        let mut out = TensorElement::zero(ctx);
        for (m, c) in x.terms() {
            let mut prod = TensorElement::one(ctx);
            for (g, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    prod = prod.mul(&self.images[g]);
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }
}

/// Checks rho([E_ab, E_cd]) = [rho(E_ab), rho(E_cd)] on every generator pair.
pub fn verify_hom(rho: &RhoMap) -> Check {
    let rank = rho.source();
    for a in rank.indices() {
        for b in rank.indices() {
            for c in rank.indices() {
                for d in rank.indices() {
                    let x = UglElement::gen(rank, a, b);
                    let y = UglElement::gen(rank, c, d);
                    let lhs = rho.apply(&x.commutator(&y));
                    let rhs = rho.gen_image(a, b).commutator(rho.gen_image(c, d));
                    if lhs != rhs {
                        return Err(Failure::new(
                            "rho-hom",
                            clip(format!(
                                "pair (E[{a},{b}], E[{c},{d}]): lhs - rhs = {}",
                                lhs.sub(&rhs)
                            )),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// pi_g: U(gl(n+1)) -> U(sl(n+1)), E_ij -> E_ij - delta_ij G_1/(n+1),
/// extended multiplicatively.
pub fn pi_g(x: &UglElement) -> UglElement {
    let rank = x.rank();
    let dim = rank.dim() as i64;
    let correction = UglElement::g1(rank).scale(&Q::new(1.into(), dim.into()));
    apply_gen_map(x, |i, j| {
        let g = UglElement::gen(rank, i, j);
        if i == j {
            g.sub(&correction)
        } else {
            g
        }
    })
}

/// iota_g: U(gl(n)) -> U(sl(n+1)), E_ij -> E_ij - delta_ij E_00, extended
/// multiplicatively. The image lives inside U(gl(n+1)).
pub fn iota_g(x: &UglElement) -> UglElement {
    let source = x.rank();
    assert_eq!(source.first, 1, "iota_g expects a gl(n) element");
    let target = GlRank::gl1(source.last);
    let e00 = UglElement::gen(target, 0, 0);
    map_into(x, target, |i, j| {
        let g = UglElement::gen(target, i, j);
        if i == j {
            g.sub(&e00)
        } else {
            g
        }
    })
}

/// Embedding without the trace correction; a negative control for the
/// diagram checks.
pub fn iota_plain(x: &UglElement) -> UglElement {
    let source = x.rank();
    let target = GlRank::gl1(source.last);
    map_into(x, target, |i, j| UglElement::gen(target, i, j))
}

/// iota_s: the inclusion of U(sl(n+1)) into U(gl(n+1)). The input must lie in
/// the span of PBW monomials over the traceless basis.
pub fn iota_s(x: &UglElement) -> Result<UglElement> {
    if !to_adapted(x).g1_free() {
        return Err(Error::NotTraceless);
    }
    Ok(x.clone())
}

/// rho_s = rho after the inclusion of U(sl(n+1)).
pub fn rho_s(rho: &RhoMap, x: &UglElement) -> Result<TensorElement> {
    Ok(rho.apply(&iota_s(x)?))
}

/// gamma = (1 tensor iota_g) rho iota_s, landing in D'(n) tensor U(sl(n+1)).
pub fn gamma(rho: &RhoMap, x: &UglElement) -> Result<TensorElement> {
    let y = rho.apply(&iota_s(x)?);
    Ok(map_second_factor(&y, GlRank::gl1(rho.n()), iota_g))
}

fn apply_gen_map(x: &UglElement, f: impl Fn(usize, usize) -> UglElement) -> UglElement {
    map_into(x, x.rank(), f)
}

fn map_into(
    x: &UglElement,
    target: GlRank,
    f: impl Fn(usize, usize) -> UglElement,
) -> UglElement {
    let source = x.rank();
    let mut out = UglElement::zero(target);
    for (m, c) in x.terms() {
        let mut prod = UglElement::one(target);
        for (g, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (i, j) = source.gen_pair(g);
            let image = f(i, j);
            for _ in 0..e {
                prod = prod.mul(&image);
            }
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// Applies a U-algebra map to the second tensor factor.
pub fn map_second_factor(
    x: &TensorElement,
    target: GlRank,
    f: impl Fn(&UglElement) -> UglElement,
) -> TensorElement {
    let ctx = x.ctx();
    let out_ctx = TensorCtx {
        n: ctx.n,
        urank: target,
    };
    let mut out = TensorElement::zero(out_ctx);
    for ((d, u), c) in x.terms() {
        let dop = DopElement::monomial(d.clone(), q(1));
        let mapped = f(&UglElement::from_terms(ctx.urank, [(u.clone(), q(1))]));
        out = out.add(&TensorElement::pure(out_ctx, &dop, &mapped).scale(c));
    }
    out
}

/// Basis of sl(n+1) inside U(gl(n+1)): the off-diagonal generators and the
/// simple coroots H_i = E_ii - E_{i+1,i+1}.
pub fn sl_basis(rank: GlRank) -> Vec<UglElement> {
    let mut out = Vec::new();
    for i in rank.indices() {
        for j in rank.indices() {
            if i != j {
                out.push(UglElement::gen(rank, i, j));
            }
        }
    }
    for i in rank.first..rank.last {
        out.push(UglElement::gen(rank, i, i).sub(&UglElement::gen(rank, i + 1, i + 1)));
    }
    out
}

/// Commutation checks between rho, rho_s, pi_g, iota_s, iota_g, gamma. With
/// `traceless_embedding` false the plain inclusion replaces iota_g and the
/// landing clause must fail.
pub fn verify_diagram_impl(rho: &RhoMap, traceless_embedding: bool) -> Check {
    let rank = rho.source();
    let n = rho.n();
    let embed: fn(&UglElement) -> UglElement = if traceless_embedding {
        iota_g
    } else {
        iota_plain
    };
    // pi_g iota_s = Id on the traceless basis
    for x in sl_basis(rank) {
        let back = pi_g(&iota_s(&x).map_err(|e| Failure::new("diagram", e.to_string()))?);
        if back != x {
            return Err(Failure::new(
                "diagram",
                clip(format!("pi_g iota_s != id at {x}: got {back}")),
            ));
        }
    }
    // rho_s pi_g = rho on every generator
    for a in rank.indices() {
        for b in rank.indices() {
            let x = UglElement::gen(rank, a, b);
            let via_s = rho_s(rho, &pi_g(&x)).map_err(|e| Failure::new("diagram", e.to_string()))?;
            let direct = rho.apply(&x);
            if via_s != direct {
                return Err(Failure::new(
                    "diagram",
                    clip(format!(
                        "rho_s pi_g != rho at E[{a},{b}]: difference {}",
                        via_s.sub(&direct)
                    )),
                ));
            }
        }
    }
    // gamma lands in D'(n) tensor U(sl(n+1)) and factors through rho_s
    for x in sl_basis(rank) {
        let g = {
            let y = rho.apply(&iota_s(&x).map_err(|e| Failure::new("diagram", e.to_string()))?);
            map_second_factor(&y, GlRank::gl1(n), embed)
        };
        // group by operator monomial; the second factors must aggregate
        // inside the traceless span
        let mut by_dop: std::collections::BTreeMap<crate::dops::DopMono, UglElement> =
            std::collections::BTreeMap::new();
        for ((d, u), c) in g.terms() {
            let u_elem = UglElement::from_terms(GlRank::gl1(n), [(u.clone(), c.clone())]);
            by_dop
                .entry(d.clone())
                .and_modify(|acc| *acc = acc.add(&u_elem))
                .or_insert(u_elem);
        }
        for (d, u_elem) in by_dop {
            if !to_adapted(&u_elem).g1_free() {
                return Err(Failure::new(
                    "diagram",
                    clip(format!(
                        "gamma({x}) does not land in the traceless span: at {} the factor {u_elem}",
                        crate::dops::dop_mono_to_string(&d)
                    )),
                ));
            }
        }
        let via_rho_s =
            map_second_factor(&rho_s(rho, &x).map_err(|e| Failure::new("diagram", e.to_string()))?,
                GlRank::gl1(n), embed);
        if g != via_rho_s {
            return Err(Failure::new(
                "diagram",
                clip(format!("gamma != (1 tensor iota_g) rho_s at {x}")),
            ));
        }
    }
    Ok(())
}

pub fn verify_diagram(rho: &RhoMap) -> Check {
    verify_diagram_impl(rho, true)
}
