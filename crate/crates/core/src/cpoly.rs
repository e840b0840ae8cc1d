//! Commutative multivariate polynomials over Q in the variables `l0, l1, ...`,
//! the codomain of the Harish-Chandra projections.
//!
//! Terms are kept in graded lexicographic order and the variable list is
//! pruned to the variables that actually occur, so equal polynomials have
//! identical representations and a byte-stable text form.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Q;

/// Exponent vector aligned with the owning polynomial's variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expo(pub Vec<u32>);

impl Expo {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // graded lexicographic
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPoly {
    /// Subscripts of the variables present, ascending.
    vars: Vec<u32>,
    /// Nonzero terms only.
    terms: BTreeMap<Expo, Q>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Q) -> Self {
        let mut p = CPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Expo(Vec::new()), c);
        }
        p
    }

    /// The variable `l<sub>`.
    pub fn var(sub: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Expo(vec![1]), crate::scalar::q(1));
        CPoly {
            vars: vec![sub],
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> &[u32] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Constant term.
    pub fn constant_part(&self) -> Q {
        self.terms
            .get(&Expo(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// Drop variables that no longer occur and renumber exponents.
    fn prune(vars: Vec<u32>, terms: BTreeMap<Expo, Q>) -> Self {
        let mut used = vec![false; vars.len()];
        for e in terms.keys() {
            for (i, &x) in e.0.iter().enumerate() {
                if x > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return CPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let new_vars: Vec<u32> = keep.iter().map(|&i| vars[i]).collect();
        let mut new_terms = BTreeMap::new();
        for (e, c) in terms {
            let ne = Expo(keep.iter().map(|&i| e.0[i]).collect());
            new_terms.insert(ne, c);
        }
        CPoly {
            vars: new_vars,
            terms: new_terms,
        }
    }

    /// Reindex both polynomials onto the union of their variable lists.
    fn aligned(&self, other: &Self) -> (Vec<u32>, BTreeMap<Expo, Q>, BTreeMap<Expo, Q>) {
        let mut vars: Vec<u32> = self.vars.iter().chain(other.vars.iter()).copied().collect();
        vars.sort_unstable();
        vars.dedup();
        let remap = |p: &CPoly| {
            let pos: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.binary_search(v).unwrap())
                .collect();
            let mut out = BTreeMap::new();
            for (e, c) in &p.terms {
                let mut ne = vec![0u32; vars.len()];
                for (i, &x) in e.0.iter().enumerate() {
                    ne[pos[i]] = x;
                }
                out.insert(Expo(ne), c.clone());
            }
            out
        };
        let a = remap(self);
        let b = remap(other);
        (vars, a, b)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (vars, mut a, b) = self.aligned(other);
        for (e, c) in b {
            let entry = a.entry(e).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                // removed below
            }
        }
        a.retain(|_, c| !c.is_zero());
        CPoly::prune(vars, a)
    }

    pub fn neg(&self) -> Self {
        CPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (vars, a, b) = self.aligned(other);
        let mut out: BTreeMap<Expo, Q> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e = Expo(ea.0.iter().zip(&eb.0).map(|(x, y)| x + y).collect());
                let entry = out.entry(e).or_insert_with(Q::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        CPoly::prune(vars, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = CPoly::constant(crate::scalar::q(1));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Simultaneous substitution. Every occurring variable must be bound.
    pub fn substitute(&self, subst: &BTreeMap<u32, CPoly>) -> Result<CPoly> {
        for v in &self.vars {
            if !subst.contains_key(v) {
                return Err(Error::UnboundVariable(*v));
            }
        }
        let mut acc = CPoly::zero();
        for (e, c) in &self.terms {
            let mut term = CPoly::constant(c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&subst[&self.vars[i]].pow(k));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Swap two variables (used for symmetry checks).
    pub fn swap_vars(&self, a: u32, b: u32) -> CPoly {
        let mut subst = BTreeMap::new();
        for &v in &self.vars {
            let image = if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            };
            subst.insert(v, CPoly::var(image));
        }
        self.substitute(&subst).expect("swap is total")
    }

    /// Evaluate at a point listed in the order of the variable list. A
    /// constant accepts a point of any length.
    pub fn ev_point(&self, point: &[Q]) -> Result<Q> {
        if !self.vars.is_empty() && point.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluate with values given per variable subscript.
    pub fn ev_map(&self, values: &BTreeMap<u32, Q>) -> Result<Q> {
        let point: Vec<Q> = self
            .vars
            .iter()
            .map(|v| values.get(v).cloned().ok_or(Error::UnboundVariable(*v)))
            .collect::<Result<_>>()?;
        self.ev_point(&point)
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // leading terms first
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                write!(f, "*l{}", self.vars[i])?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qr};

    fn l(i: u32) -> CPoly {
        CPoly::var(i)
    }

    #[test]
    fn identity_substitution() {
        let p = l(1).mul(&l(1));
        let mut subst = BTreeMap::new();
        subst.insert(1, l(1));
        assert_eq!(p.substitute(&subst).unwrap(), p);
    }

    #[test]
    fn swap_substitution_on_symmetric_product() {
        let p = l(0).mul(&l(1));
        let mut subst = BTreeMap::new();
        subst.insert(0, l(1));
        subst.insert(1, l(0));
        assert_eq!(p.substitute(&subst).unwrap(), p);
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let p = l(0).add(&l(1));
        let mut subst = BTreeMap::new();
        subst.insert(0, l(0));
        assert_eq!(p.substitute(&subst), Err(Error::UnboundVariable(1)));
    }

    #[test]
    fn evaluation() {
        // l0 + 2*l1 at (1, 0)
        let p = l(0).add(&l(1).scale(&q(2)));
        assert_eq!(p.ev_point(&[q(1), q(0)]).unwrap(), q(1));
        // constants accept any point
        let c = CPoly::constant(q(1));
        assert_eq!(c.ev_point(&[q(7), q(8), q(9)]).unwrap(), q(1));
        // l1^2 - l1 at 1/3 -> -2/9
        let p = l(1).mul(&l(1)).sub(&l(1));
        assert_eq!(p.ev_point(&[qr(1, 3)]).unwrap(), qr(-2, 9));
        // arity mismatch
        assert!(p.ev_point(&[q(1), q(2)]).is_err());
    }

    #[test]
    fn display_is_graded_lex_descending() {
        // 1/2*l0^2*l1 + -3*l1
        let p = l(0)
            .mul(&l(0))
            .mul(&l(1))
            .scale(&qr(1, 2))
            .add(&l(1).scale(&q(-3)));
        assert_eq!(p.to_string(), "1/2*l0^2*l1 + -3*l1");
        assert_eq!(CPoly::zero().to_string(), "0");
        assert_eq!(CPoly::constant(qr(-5, 7)).to_string(), "-5/7");
    }

    #[test]
    fn pruning_keeps_equality_honest() {
        let p = l(0).add(&l(1)).sub(&l(1));
        assert_eq!(p, l(0));
        assert_eq!(p.vars(), &[0]);
    }
}
