//! Polynomials in one central formal variable (T or X) over a noncommutative
//! coefficient ring, and square matrices over such rings with column
//! determinants.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::{binom, Q};

/// The formal variable commutes with everything; coefficients keep their own
/// noncommutative arithmetic.
#[derive(Clone, PartialEq, Debug)]
pub struct TPoly<R: Ring> {
    var: char,
    /// coeffs[k] multiplies var^k; no trailing zeros.
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> TPoly<R> {
    pub fn zero(var: char, ctx: R::Ctx) -> Self {
        TPoly {
            var,
            coeffs: Vec::new(),
            ctx,
        }
    }

    pub fn constant(var: char, r: R) -> Self {
        let ctx = r.ctx();
        let mut p = Self::zero(var, ctx);
        if !r.is_zero() {
            p.coeffs.push(r);
        }
        p
    }

    /// The variable itself.
    pub fn variable(var: char, ctx: R::Ctx) -> Self {
        TPoly {
            var,
            coeffs: vec![R::zero(ctx), R::one(ctx)],
            ctx,
        }
    }

    pub fn from_coeffs(var: char, ctx: R::Ctx, coeffs: Vec<R>) -> Self {
        let mut p = TPoly { var, coeffs, ctx };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn ring_ctx(&self) -> R::Ctx {
        self.ctx
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| R::zero(self.ctx))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().max(other.coeffs.len()));
        for k in 0..self.coeffs.len().max(other.coeffs.len()) {
            coeffs.push(self.coeff(k).add(&other.coeff(k)));
        }
        Self::from_coeffs(self.var, self.ctx, coeffs)
    }

    pub fn neg(&self) -> Self {
        TPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            ctx: self.ctx,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_coeffs(
            self.var,
            self.ctx,
            self.coeffs.iter().map(|x| x.scale(c)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var, self.ctx);
        }
        let mut coeffs =
            vec![R::zero(self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(self.var, self.ctx, coeffs)
    }

    pub fn map_coeffs<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> TPoly<S> {
        TPoly::from_coeffs(self.var, ctx, self.coeffs.iter().map(f).collect())
    }

    /// p(var + c) for a scalar shift c.
    pub fn shift_scalar(&self, c: &Q) -> Self {
        self.subst_add(&R::from_rat(self.ctx, c))
    }

    /// p(-var): flips the sign of odd coefficients.
    pub fn subst_neg_var(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| if k % 2 == 1 { a.neg() } else { a.clone() })
            .collect();
        Self::from_coeffs(self.var, self.ctx, coeffs)
    }

    /// p(var + z) via binomial expansion; each new coefficient is
    /// sum_k a_k C(k, j) z^{k-j} with the z-power multiplied on the right.
    pub fn subst_add(&self, z: &R) -> Self {
        let deg = match self.degree() {
            None => return self.clone(),
            Some(d) => d,
        };
        // powers of z up to deg
        let mut zpow = Vec::with_capacity(deg + 1);
        zpow.push(R::one(self.ctx));
        for _ in 0..deg {
            zpow.push(zpow.last().unwrap().mul(z));
        }
        let mut coeffs = vec![R::zero(self.ctx); deg + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..=k {
                let term = a.mul(&zpow[k - j]).scale(&binom(k, j));
                coeffs[j] = coeffs[j].add(&term);
            }
        }
        Self::from_coeffs(self.var, self.ctx, coeffs)
    }

    /// p(z) = sum_k a_k z^k, with the coefficient on the left.
    pub fn eval(&self, z: &R) -> R {
        let mut acc = R::zero(self.ctx);
        let mut zpow = R::one(self.ctx);
        for a in &self.coeffs {
            acc = acc.add(&a.mul(&zpow));
            zpow = zpow.mul(z);
        }
        acc
    }
}

impl<R: Ring> Ring for TPoly<R> {
    type Ctx = (char, R::Ctx);

    fn ctx(&self) -> (char, R::Ctx) {
        (self.var, self.ctx)
    }

    fn zero(ctx: (char, R::Ctx)) -> Self {
        TPoly::zero(ctx.0, ctx.1)
    }

    fn one(ctx: (char, R::Ctx)) -> Self {
        TPoly::constant(ctx.0, R::one(ctx.1))
    }

    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        TPoly::add(self, rhs)
    }

    fn neg(&self) -> Self {
        TPoly::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        TPoly::mul(self, rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        TPoly::scale(self, c)
    }

    fn as_scalar(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(num_traits::Zero::zero()),
            1 => self.coeffs[0].as_scalar(),
            _ => None,
        }
    }
}

impl<R: Ring> fmt::Display for TPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({c})")?;
            } else if k == 1 {
                write!(f, "({})*{}", c, self.var)?;
            } else {
                write!(f, "({})*{}^{}", c, self.var, k)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Square matrices over a noncommutative ring
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
pub struct NcMatrix<R: Ring> {
    size: usize,
    entries: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> NcMatrix<R> {
    pub fn from_fn(size: usize, ctx: R::Ctx, f: impl Fn(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        NcMatrix { size, entries, ctx }
    }

    pub fn identity(size: usize, ctx: R::Ctx) -> Self {
        Self::from_fn(size, ctx, |i, j| {
            if i == j {
                R::one(ctx)
            } else {
                R::zero(ctx)
            }
        })
    }

    pub fn zero(size: usize, ctx: R::Ctx) -> Self {
        Self::from_fn(size, ctx, |_, _| R::zero(ctx))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.size + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, self.ctx, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, self.ctx, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, self.ctx, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    /// A + z I.
    pub fn shift_diag(&self, z: &R) -> Self {
        Self::from_fn(self.size, self.ctx, |i, j| {
            if i == j {
                self.at(i, j).add(z)
            } else {
                self.at(i, j).clone()
            }
        })
    }

    /// Entry products taken left factor first.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self::from_fn(self.size, self.ctx, |i, j| {
            let mut acc = R::zero(self.ctx);
            for k in 0..self.size {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    /// z * A entrywise, z multiplied on the left.
    pub fn scale_left(&self, z: &R) -> Self {
        Self::from_fn(self.size, self.ctx, |i, j| z.mul(self.at(i, j)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.size, self.ctx);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Column determinant: factors of each permutation term are taken column
    /// by column, sum signed by the permutation parity.
    pub fn column_det(&self) -> R {
        self.column_det_impl(true)
    }

    /// The unsigned variant exists as a negative control for the sign
    /// convention; its output fails the centrality checks for size >= 2.
    pub fn column_det_unsigned(&self) -> R {
        self.column_det_impl(false)
    }

    fn column_det_impl(&self, signed: bool) -> R {
        let m = self.size;
        let mut perm: Vec<usize> = (0..m).collect();
        let mut acc = R::zero(self.ctx);
        let mut parity = 1i32;
        // Heap's algorithm, tracking parity
        let mut c = vec![0usize; m];
        let add_term = |perm: &[usize], parity: i32, acc: &mut R| {
            let mut prod = R::one(self.ctx);
            for (col, &row) in perm.iter().enumerate() {
                prod = prod.mul(self.at(row, col));
            }
            if signed && parity < 0 {
                prod = prod.neg();
            }
            *acc = acc.add(&prod);
        };
        add_term(&perm, parity, &mut acc);
        let mut i = 0;
        while i < m {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                parity = -parity;
                add_term(&perm, parity, &mut acc);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        acc
    }
}

/// Substitutes a matrix into a polynomial with central coefficients:
/// p(A) = sum_k z_k A^k with z_k applied entrywise on the left. Centrality of
/// each coefficient is the caller-supplied predicate.
pub fn matrix_substitute<R: Ring>(
    p: &TPoly<R>,
    a: &NcMatrix<R>,
    is_central: impl Fn(&R) -> bool,
) -> Result<NcMatrix<R>> {
    for (k, z) in p.coeffs().iter().enumerate() {
        if !z.is_zero() && !is_central(z) {
            return Err(Error::NonCentralCoefficient(k));
        }
    }
    let mut acc = NcMatrix::zero(a.size(), a.ctx);
    let mut pw = NcMatrix::identity(a.size(), a.ctx);
    for z in p.coeffs() {
        acc = acc.add(&pw.scale_left(z));
        pw = pw.mul(a);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn poly_arithmetic_over_scalars() {
        let t = TPoly::<Q>::variable('T', ());
        let p = t.mul(&t).add(&t.scale(&q(3))); // T^2 + 3T
        assert_eq!(p.degree(), Some(2));
        let shifted = p.shift_scalar(&q(1)); // (T+1)^2 + 3(T+1) = T^2 + 5T + 4
        assert_eq!(shifted.coeff(0), q(4));
        assert_eq!(shifted.coeff(1), q(5));
        assert_eq!(shifted.coeff(2), q(1));
        let negd = p.subst_neg_var(); // T^2 - 3T
        assert_eq!(negd.coeff(1), q(-3));
        assert_eq!(p.eval(&q(2)), q(10));
    }

    #[test]
    fn one_by_one_determinant_is_the_entry() {
        let m = NcMatrix::from_fn(1, (), |_, _| q(7));
        assert_eq!(m.column_det(), q(7));
    }

    #[test]
    fn scalar_determinant_matches_classical() {
        let m = NcMatrix::from_fn(2, (), |i, j| q([[1, 2], [3, 4]][i][j]));
        assert_eq!(m.column_det(), q(-2));
        assert_eq!(m.column_det_unsigned(), q(10));
        let m3 = NcMatrix::from_fn(3, (), |i, j| q([[2, 0, 1], [1, 3, 2], [1, 1, 1]][i][j]));
        assert_eq!(m3.column_det(), q(2 * (3 - 2) - 0 + (1 - 3)));
    }

    #[test]
    fn matrix_substitution_cayley_hamilton_for_scalars() {
        // p(T) = T^2 - 5T - 2 annihilates [[1,2],[3,4]]
        let a = NcMatrix::from_fn(2, (), |i, j| q([[1, 2], [3, 4]][i][j]));
        let t = TPoly::<Q>::variable('T', ());
        let p = t.mul(&t).sub(&t.scale(&q(5))).sub(&TPoly::constant('T', q(2)));
        let image = matrix_substitute(&p, &a, |_| true).unwrap();
        assert!(image.is_zero());
    }
}
