//! The tensor product of the operator algebra D'(n) with U(gl(m)); both
//! factors stay in their canonical forms and multiply componentwise. Houses
//! the central elements R_1, R_2 and the recognition of elements of
//! C[Euler] tensor Z(gl(n)) by interpolation and re-expansion.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::dops::{dop_mono_to_string, euler, lagrange, DopElement, DopMono};
use crate::error::{Error, Result};
use crate::scalar::{q, Q};
use crate::ugl::{mono_to_string, GlRank, PbwMono, UglElement};

/// Construction context: the operator rank n and the gl index range of the
/// second factor (gl(n) for the target of rho, gl(n+1) for gamma's codomain).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TensorCtx {
    pub n: usize,
    pub urank: GlRank,
}

impl TensorCtx {
    /// D'(n) tensor U(gl(n)).
    pub fn standard(n: usize) -> Self {
        TensorCtx {
            n,
            urank: GlRank::gl(n),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    ctx: TensorCtx,
    terms: BTreeMap<(DopMono, PbwMono), Q>,
}

impl TensorElement {
    pub fn zero(ctx: TensorCtx) -> Self {
        TensorElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: TensorCtx) -> Self {
        Self::scalar(ctx, q(1))
    }

    pub fn scalar(ctx: TensorCtx, c: Q) -> Self {
        let mut e = Self::zero(ctx);
        if !c.is_zero() {
            e.terms
                .insert((DopMono::one(ctx.n), PbwMono::one(ctx.urank)), c);
        }
        e
    }

    /// d tensor 1.
    pub fn from_dop(ctx: TensorCtx, d: &DopElement) -> Self {
        assert_eq!(d.n(), ctx.n, "rank mismatch");
        let mut e = Self::zero(ctx);
        for (m, c) in d.terms() {
            e.terms
                .insert((m.clone(), PbwMono::one(ctx.urank)), c.clone());
        }
        e
    }

    /// 1 tensor u.
    pub fn from_ugl(ctx: TensorCtx, u: &UglElement) -> Self {
        assert_eq!(u.rank(), ctx.urank, "rank mismatch");
        let mut e = Self::zero(ctx);
        for (m, c) in u.terms() {
            e.terms.insert((DopMono::one(ctx.n), m.clone()), c.clone());
        }
        e
    }

    /// d tensor u.
    pub fn pure(ctx: TensorCtx, d: &DopElement, u: &UglElement) -> Self {
        Self::from_dop(ctx, d).mul(&Self::from_ugl(ctx, u))
    }

    pub fn ctx(&self) -> TensorCtx {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(DopMono, PbwMono), &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: (DopMono, PbwMono), c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "rank mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TensorElement {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        TensorElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    /// Componentwise product (d1 tensor u1)(d2 tensor u2) = d1 d2 tensor u1 u2.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "rank mismatch");
        let mut out = Self::zero(self.ctx);
        for ((d1, u1), c1) in &self.terms {
            for ((d2, u2), c2) in &other.terms {
                let dprod = DopElement::monomial(d1.clone(), q(1))
                    .mul(&DopElement::monomial(d2.clone(), q(1)));
                let uprod = UglElement::from_terms(self.ctx.urank, [(u1.clone(), q(1))])
                    .mul(&UglElement::from_terms(self.ctx.urank, [(u2.clone(), q(1))]));
                let c = c1 * c2;
                for (dm, dc) in dprod.terms() {
                    for (um, uc) in uprod.terms() {
                        out.add_term((dm.clone(), um.clone()), dc * uc * &c);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Commutes with every algebra generator: t_i/t_0, t_0 d_j in the first
    /// factor and all E_ab in the second.
    pub fn is_central(&self) -> bool {
        let ctx = self.ctx;
        for i in 1..=ctx.n {
            let g = Self::from_dop(ctx, &DopElement::t_ratio(ctx.n, i));
            if !self.commutator(&g).is_zero() {
                return false;
            }
        }
        for j in 0..=ctx.n {
            let g = Self::from_dop(ctx, &DopElement::t_d(ctx.n, 0, j));
            if !self.commutator(&g).is_zero() {
                return false;
            }
        }
        for a in ctx.urank.indices() {
            for b in ctx.urank.indices() {
                let g = Self::from_ugl(ctx, &UglElement::gen(ctx.urank, a, b));
                if !self.commutator(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// R_1 = -(1/(n+1)) (Euler tensor 1 + 1 tensor G_1), central.
pub fn r1(n: usize) -> TensorElement {
    let ctx = TensorCtx::standard(n);
    let e = TensorElement::from_dop(ctx, &euler(n));
    let g = TensorElement::from_ugl(ctx, &UglElement::g1(ctx.urank));
    e.add(&g).scale(&Q::new((-1).into(), (n as i64 + 1).into()))
}

/// R_2 = (Euler + n) tensor 1, central.
pub fn r2(n: usize) -> TensorElement {
    let ctx = TensorCtx::standard(n);
    TensorElement::from_dop(ctx, &euler(n)).add(&TensorElement::scalar(ctx, q(n as i64)))
}

/// Euler tensor 1.
pub fn euler_tensor(n: usize) -> TensorElement {
    TensorElement::from_dop(TensorCtx::standard(n), &euler(n))
}

/// Splits z as sum of Euler^i tensor z_i with every z_i central, by acting on
/// t_0^a in the first factor, interpolating in a, and re-expanding. `dmax`
/// defaults to the largest total d-degree among the monomials.
pub fn decompose_euler_center(
    z: &TensorElement,
    dmax: Option<usize>,
) -> Result<Vec<(usize, UglElement)>> {
    let ctx = z.ctx;
    let n = ctx.n;
    let dmax = dmax.unwrap_or_else(|| {
        z.terms.keys().map(|(d, _)| d.d_degree() as usize).max().unwrap_or(0)
    });
    // u_a = the image of z acting on t_0^a, which must stay a multiple of t_0^a
    let mut samples: Vec<UglElement> = Vec::with_capacity(dmax + 1);
    for a in 0..=dmax as i64 {
        let mut e0 = vec![0i64; n + 1];
        e0[0] = a;
        let mut by_expo: BTreeMap<Vec<i64>, UglElement> = BTreeMap::new();
        for ((dm, um), c) in &z.terms {
            let image = DopElement::monomial(dm.clone(), c.clone()).apply_monomial(&e0);
            for (expo, s) in image {
                let u = UglElement::from_terms(ctx.urank, [(um.clone(), s)]);
                by_expo
                    .entry(expo)
                    .and_modify(|acc| *acc = acc.add(&u))
                    .or_insert(u);
            }
        }
        by_expo.retain(|_, u| !u.is_zero());
        let mut u_a = UglElement::zero(ctx.urank);
        for (expo, u) in by_expo {
            if expo == e0 {
                u_a = u;
            } else {
                return Err(Error::NotInEulerSpan(format!(
                    "action on t[0]^{a} leaves the line through t[0]^{a}"
                )));
            }
        }
        samples.push(u_a);
    }
    // interpolate each PBW coefficient as a polynomial in a
    let mut monomials: Vec<PbwMono> = Vec::new();
    for u in &samples {
        for (m, _) in u.terms() {
            if !monomials.contains(m) {
                monomials.push(m.clone());
            }
        }
    }
    let mut components = vec![UglElement::zero(ctx.urank); dmax + 1];
    for m in &monomials {
        let values: Vec<Q> = samples.iter().map(|u| u.coeff(m)).collect();
        let coeffs = lagrange(&values);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                components[i] =
                    components[i].add(&UglElement::from_terms(ctx.urank, [(m.clone(), c)]));
            }
        }
    }
    // verify by re-expansion
    let mut rebuilt = TensorElement::zero(ctx);
    let eu = euler(n);
    let mut power = DopElement::one(n);
    for z_i in components.iter() {
        if !z_i.is_zero() {
            rebuilt = rebuilt.add(&TensorElement::pure(ctx, &power, z_i));
        }
        power = power.mul(&eu);
    }
    if rebuilt != *z {
        return Err(Error::NotInEulerSpan(
            "re-expansion differs from the input".into(),
        ));
    }
    for (i, z_i) in components.iter().enumerate() {
        if !z_i.is_zero() && !z_i.is_central() {
            return Err(Error::NonCentralComponent(i));
        }
    }
    Ok(components
        .into_iter()
        .enumerate()
        .filter(|(_, z_i)| !z_i.is_zero())
        .collect())
}

impl crate::ring::Ring for TensorElement {
    type Ctx = TensorCtx;

    fn ctx(&self) -> TensorCtx {
        self.ctx
    }

    fn zero(ctx: TensorCtx) -> Self {
        TensorElement::zero(ctx)
    }

    fn one(ctx: TensorCtx) -> Self {
        TensorElement::one(ctx)
    }

    fn is_zero(&self) -> bool {
        TensorElement::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        TensorElement::add(self, rhs)
    }

    fn neg(&self) -> Self {
        TensorElement::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        TensorElement::mul(self, rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        TensorElement::scale(self, c)
    }

    fn as_scalar(&self) -> Option<Q> {
        if self.terms.is_empty() {
            return Some(num_traits::Zero::zero());
        }
        if self.terms.len() == 1 {
            let ((d, u), c) = self.terms.iter().next().unwrap();
            if d.is_one() && u.is_one() {
                return Some(c.clone());
            }
        }
        None
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((d, u), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if d.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}*{}", c, dop_mono_to_string(d))?;
            }
            write!(f, " | {}", mono_to_string(self.ctx.urank, u))?;
        }
        Ok(())
    }
}
