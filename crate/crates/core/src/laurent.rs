//! Truncated formal Laurent tails in T^{-1} over a commutative coefficient
//! ring: a declared leading power T^d and the coefficients of
//! T^d, T^{d-1}, ..., T^{d-K}. Arithmetic below the truncation order is
//! discarded; the order is tracked so mixed-order arithmetic takes the
//! minimum reliable coverage.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Debug)]
pub struct LaurentTail<R: Ring> {
    lead: i64,
    /// `coeffs[k]` is the coefficient of `T^{lead-k}`; length = order + 1.
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> LaurentTail<R> {
    pub fn new(lead: i64, coeffs: Vec<R>, ctx: R::Ctx) -> Self {
        assert!(!coeffs.is_empty(), "a tail needs at least its leading term");
        LaurentTail { lead, coeffs, ctx }
    }

    /// The constant `r`, reliable down to `T^{-order}`.
    pub fn constant(r: R, order: usize) -> Self {
        let ctx = r.ctx();
        let mut coeffs = vec![R::zero(ctx); order + 1];
        coeffs[0] = r;
        LaurentTail::new(0, coeffs, ctx)
    }

    /// Build from descending coefficients of a polynomial
    /// `c_0 T^deg + c_1 T^{deg-1} + ... + c_deg`, padded with zeros down to
    /// `T^{deg-order}`.
    pub fn from_descending(deg: i64, mut coeffs: Vec<R>, order: usize, ctx: R::Ctx) -> Self {
        while coeffs.len() < order + 1 {
            coeffs.push(R::zero(ctx));
        }
        coeffs.truncate(order + 1);
        LaurentTail::new(deg, coeffs, ctx)
    }

    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Lowest power with a reliable coefficient.
    pub fn low(&self) -> i64 {
        self.lead - self.order() as i64
    }

    /// Coefficient of `T^p`; `None` below the reliable range, zero above the
    /// leading power.
    pub fn coeff_at(&self, p: i64) -> Option<R> {
        if p > self.lead {
            Some(R::zero(self.ctx))
        } else if p >= self.low() {
            Some(self.coeffs[(self.lead - p) as usize].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let lead = self.lead.max(other.lead);
        let low = self.low().max(other.low());
        let mut coeffs = Vec::new();
        let mut p = lead;
        while p >= low {
            coeffs.push(
                self.coeff_at(p)
                    .unwrap()
                    .add(&other.coeff_at(p).unwrap()),
            );
            p -= 1;
        }
        LaurentTail::new(lead, coeffs, self.ctx)
    }

    pub fn neg(&self) -> Self {
        LaurentTail {
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            ctx: self.ctx,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let lead = self.lead + other.lead;
        // a coefficient of the product is reliable only where every
        // contributing pair is inside both reliable ranges
        let low = (self.low() + other.lead).max(other.low() + self.lead);
        assert!(low <= lead, "product has no reliable coefficients");
        let order = (lead - low) as usize;
        let zero = R::zero(self.ctx);
        let mut coeffs = vec![zero; order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order || b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        LaurentTail::new(lead, coeffs, self.ctx)
    }

    /// True when every reliable coefficient of `self` and `other` agrees on
    /// the overlap from the top down to `T^low_power`, with coverage down to
    /// `low_power` required on both sides.
    pub fn agrees_down_to(&self, other: &Self, low_power: i64) -> std::result::Result<(), (i64, R, R)> {
        let top = self.lead.max(other.lead);
        let mut p = top;
        while p >= low_power {
            let a = self.coeff_at(p);
            let b = other.coeff_at(p);
            match (a, b) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return Err((p, a, b));
                    }
                }
                (a, b) => {
                    let zero = R::zero(self.ctx);
                    return Err((p, a.unwrap_or_else(|| zero.clone()), b.unwrap_or(zero)));
                }
            }
            p -= 1;
        }
        Ok(())
    }
}

/// Quotient of two tails to truncation order `k`: the leading coefficient of
/// the denominator must be an invertible scalar multiple of the identity.
/// Postcondition `num = den * result` holds up to the returned order.
pub fn series_div<R: Ring>(num: &LaurentTail<R>, den: &LaurentTail<R>, k: usize) -> Result<LaurentTail<R>> {
    let s = den.coeffs[0].as_scalar().ok_or(Error::NonInvertibleLead)?;
    if num_traits::Zero::is_zero(&s) {
        return Err(Error::NonInvertibleLead);
    }
    let have = num.order().min(den.order());
    if have < k {
        return Err(Error::OrderTooSmall { need: k, have });
    }
    let inv = crate::scalar::q(1) / s;
    let ctx = num.ctx;
    let mut q_coeffs: Vec<R> = Vec::with_capacity(k + 1);
    for m in 0..=k {
        let mut acc = num.coeffs[m].clone();
        for j in 1..=m {
            acc = acc.sub(&den.coeffs[j].mul(&q_coeffs[m - j]));
        }
        q_coeffs.push(acc.scale(&inv));
    }
    Ok(LaurentTail::new(num.lead - den.lead, q_coeffs, ctx))
}

pub fn series_mul<R: Ring>(a: &LaurentTail<R>, b: &LaurentTail<R>) -> LaurentTail<R> {
    a.mul(b)
}

impl<R: Ring> fmt::Display for LaurentTail<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*T^{}", c, self.lead - k as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(T^{})", self.low() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    fn tail(lead: i64, cs: &[i64]) -> LaurentTail<Q> {
        LaurentTail::new(lead, cs.iter().map(|&c| q(c)).collect(), ())
    }

    #[test]
    fn geometric_series() {
        // 1 / (1 - T^{-1}) = 1 + T^{-1} + T^{-2} + T^{-3}
        let num = tail(0, &[1, 0, 0, 0]);
        let den = tail(0, &[1, -1, 0, 0]);
        let quot = series_div(&num, &den, 3).unwrap();
        assert_eq!(quot, tail(0, &[1, 1, 1, 1]));
    }

    #[test]
    fn division_by_self_is_one() {
        let a = tail(2, &[3, -1, 4, 7, 0]);
        let quot = series_div(&a, &a, 4).unwrap();
        assert_eq!(quot, tail(0, &[1, 0, 0, 0, 0]));
    }

    #[test]
    fn non_invertible_lead_is_an_error() {
        let num = tail(0, &[1, 0]);
        let den = tail(0, &[0, 1]);
        assert_eq!(series_div(&num, &den, 1), Err(Error::NonInvertibleLead));
    }

    #[test]
    fn mul_then_div_roundtrip() {
        let a = tail(1, &[2, 5, -3, 1, 0]);
        let b = tail(-1, &[1, 4, 0, 2, -6]);
        let p = series_mul(&a, &b);
        let back = series_div(&p, &b, 4).unwrap();
        assert!(back.agrees_down_to(&a, a.lead() - 4).is_ok());
    }

    #[test]
    fn truncation_order_takes_the_minimum() {
        let a = tail(0, &[1, 1, 1, 1, 1]);
        let b = tail(0, &[1, 2]);
        let p = a.mul(&b);
        assert_eq!(p.order(), 1);
        assert_eq!(p.coeff_at(0), Some(q(1)));
        assert_eq!(p.coeff_at(-1), Some(q(3)));
        assert_eq!(p.coeff_at(-2), None);
    }
}
