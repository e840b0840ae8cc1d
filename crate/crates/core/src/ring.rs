//! Minimal ring interface shared by the coefficient types, so polynomials in
//! a central variable, matrices, and truncated series can be generic over
//! scalars, U(gl(N)) elements, and tensor-product elements alike.

use std::fmt::{Debug, Display};

use num_traits::Zero;

use crate::scalar::Q;

pub trait Ring: Clone + PartialEq + Debug + Display {
    /// Construction context (e.g. the algebra rank); `()` for plain scalars.
    type Ctx: Copy + PartialEq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn from_rat(ctx: Self::Ctx, c: &Q) -> Self {
        Self::one(ctx).scale(c)
    }

    fn commutes_with(&self, rhs: &Self) -> bool {
        self.mul(rhs) == rhs.mul(self)
    }

    /// `Some(c)` when the element is `c` times the identity.
    fn as_scalar(&self) -> Option<Q>;
}

impl Ring for Q {
    type Ctx = ();

    fn ctx(&self) -> () {}

    fn zero(_: ()) -> Self {
        <Q as Zero>::zero()
    }

    fn one(_: ()) -> Self {
        crate::scalar::q(1)
    }

    fn is_zero(&self) -> bool {
        <Q as Zero>::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self.clone()
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scale(&self, c: &Q) -> Self {
        self * c
    }

    fn as_scalar(&self) -> Option<Q> {
        Some(self.clone())
    }
}
