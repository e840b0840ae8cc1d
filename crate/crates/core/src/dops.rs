//! Differential operators on C[t_0^{+-1}, t_1, ..., t_n] in normal order
//! t^a d^b, with t_0 allowed arbitrary integer exponents. Products follow the
//! multi-index Leibniz rule with falling factorials, which stay exact for
//! negative powers of t_0.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{binom, falling, q, Q};

/// Normal-ordered monomial t^a d^b over t_0..t_n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DopMono {
    pub t: Vec<i64>,
    pub d: Vec<u64>,
}

impl DopMono {
    pub fn one(n: usize) -> Self {
        DopMono {
            t: vec![0; n + 1],
            d: vec![0; n + 1],
        }
    }

    pub fn new(t: Vec<i64>, d: Vec<u64>) -> Result<Self> {
        if t.len() != d.len() {
            return Err(Error::IndexOutOfRange("t/d length mismatch".into()));
        }
        for (i, &a) in t.iter().enumerate().skip(1) {
            if a < 0 {
                return Err(Error::IndexOutOfRange(format!(
                    "negative exponent on t[{i}]"
                )));
            }
        }
        Ok(DopMono { t, d })
    }

    pub fn n(&self) -> usize {
        self.t.len() - 1
    }

    pub fn is_one(&self) -> bool {
        self.t.iter().all(|&a| a == 0) && self.d.iter().all(|&b| b == 0)
    }

    /// Total t-degree minus total d-degree; zero on all of D'(n).
    pub fn grading(&self) -> i64 {
        self.t.iter().sum::<i64>() - self.d.iter().sum::<u64>() as i64
    }

    pub fn d_degree(&self) -> u64 {
        self.d.iter().sum()
    }
}

/// Element of the operator algebra: a finite sum of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DopElement {
    n: usize,
    terms: BTreeMap<DopMono, Q>,
}

impl DopElement {
    pub fn zero(n: usize) -> Self {
        DopElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, q(1))
    }

    pub fn scalar(n: usize, c: Q) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(DopMono::one(n), c);
        }
        e
    }

    pub fn monomial(m: DopMono, c: Q) -> Self {
        let n = m.n();
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    /// t_i as an operator (multiplication); i = 0 may later acquire negative
    /// powers through products.
    pub fn t(n: usize, i: usize) -> Self {
        let mut m = DopMono::one(n);
        m.t[i] = 1;
        Self::monomial(m, q(1))
    }

    /// d/dt_i.
    pub fn d(n: usize, i: usize) -> Self {
        let mut m = DopMono::one(n);
        m.d[i] = 1;
        Self::monomial(m, q(1))
    }

    /// t_i / t_0, a generator for i >= 1.
    pub fn t_ratio(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut m = DopMono::one(n);
        m.t[0] = -1;
        m.t[i] = 1;
        Self::monomial(m, q(1))
    }

    /// t_a d_b.
    pub fn t_d(n: usize, a: usize, b: usize) -> Self {
        let mut m = DopMono::one(n);
        m.t[a] = 1;
        m.d[b] = 1;
        Self::monomial(m, q(1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DopMono, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: DopMono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        DopElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        DopElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, x) in mono_mul(m1, m2) {
                    out.add_term(m, x * &c);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Monomial-wise grading check for membership in the degree-0 subalgebra.
    pub fn is_degree_zero(&self) -> bool {
        self.terms.keys().all(|m| m.grading() == 0)
    }

    /// Largest total d-degree over the monomials.
    pub fn max_d_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.d_degree()).max().unwrap_or(0)
    }

    /// Apply the operator to the Laurent monomial t^e; the result is a
    /// scalar-weighted sum of Laurent monomials keyed by exponent vector.
    pub fn apply_monomial(&self, e: &[i64]) -> BTreeMap<Vec<i64>, Q> {
        assert_eq!(e.len(), self.n + 1, "exponent arity");
        for (i, &x) in e.iter().enumerate().skip(1) {
            assert!(x >= 0, "negative exponent on t[{i}]");
        }
        let mut out: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for j in 0..=self.n {
                coeff *= falling(e[j], m.d[j]);
                if coeff.is_zero() {
                    break;
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let expo: Vec<i64> = (0..=self.n)
                .map(|j| e[j] + m.t[j] - m.d[j] as i64)
                .collect();
            let entry = out.entry(expo).or_insert_with(Q::zero);
            *entry += coeff;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Leibniz product of two normal-ordered monomials:
/// (t^a d^b)(t^c d^d) = sum_k prod_j C(b_j,k_j) c_j(c_j-1)...(c_j-k_j+1)
///                      t^{a+c-k} d^{b+d-k}.
fn mono_mul(x: &DopMono, y: &DopMono) -> Vec<(DopMono, Q)> {
    let n = x.n();
    let mut out = Vec::new();
    let mut k = vec![0u64; n + 1];
    'outer: loop {
        let mut coeff = q(1);
        for j in 0..=n {
            if k[j] > 0 {
                coeff *= binom(x.d[j] as usize, k[j] as usize) * falling(y.t[j], k[j]);
                if coeff.is_zero() {
                    break;
                }
            }
        }
        if !coeff.is_zero() {
            let t: Vec<i64> = (0..=n).map(|j| x.t[j] + y.t[j] - k[j] as i64).collect();
            let d: Vec<u64> = (0..=n).map(|j| x.d[j] + y.d[j] - k[j]).collect();
            let m = DopMono::new(t, d).expect("products of valid monomials stay valid");
            out.push((m, coeff));
        }
        // odometer over 0..=b_j in each coordinate
        for j in 0..=n {
            if k[j] < x.d[j] {
                k[j] += 1;
                continue 'outer;
            }
            k[j] = 0;
        }
        break;
    }
    out
}

/// The Euler operator: sum of t_i d_i over i = 0..n.
pub fn euler(n: usize) -> DopElement {
    let mut e = DopElement::zero(n);
    for i in 0..=n {
        e = e.add(&DopElement::t_d(n, i, i));
    }
    e
}

/// Recovers p with p(Euler) = x when such a polynomial of degree <= dmax
/// exists; interpolates through the action on t_0^a and verifies by
/// re-expansion.
pub fn interpolate_euler_poly(x: &DopElement, dmax: usize) -> Result<crate::cpoly::CPoly> {
    let n = x.n();
    let mut values = Vec::with_capacity(dmax + 1);
    for a in 0..=dmax as i64 {
        let mut e = vec![0i64; n + 1];
        e[0] = a;
        let image = x.apply_monomial(&e);
        let mut scalar = Q::zero();
        for (expo, c) in image {
            if expo == e {
                scalar = c;
            } else {
                return Err(Error::NotEulerPolynomial(format!(
                    "action on t[0]^{a} produced a different monomial"
                )));
            }
        }
        values.push(scalar);
    }
    let coeffs = lagrange(&values);
    // verify p(Euler) = x by expansion
    let eu = euler(n);
    let mut expansion = DopElement::zero(n);
    let mut power = DopElement::one(n);
    for c in &coeffs {
        expansion = expansion.add(&power.scale(c));
        power = power.mul(&eu);
    }
    if expansion != *x {
        return Err(Error::NotEulerPolynomial(
            "interpolant does not re-expand to the operator".into(),
        ));
    }
    let mut p = crate::cpoly::CPoly::zero();
    let s = crate::cpoly::CPoly::var(0);
    for (i, c) in coeffs.iter().enumerate() {
        p = p.add(&s.pow(i as u32).scale(c));
    }
    Ok(p)
}

/// Coefficients of the interpolating polynomial through (0, v_0), ...,
/// (m, v_m), ascending by degree.
pub fn lagrange(values: &[Q]) -> Vec<Q> {
    let m = values.len();
    let mut acc = vec![Q::zero(); m];
    for (a, va) in values.iter().enumerate() {
        if va.is_zero() {
            continue;
        }
        // numerator polynomial prod_{b != a} (s - b)
        let mut num = vec![q(1)];
        let mut denom = q(1);
        for b in 0..m {
            if b == a {
                continue;
            }
            let mut next = vec![Q::zero(); num.len() + 1];
            for (i, c) in num.iter().enumerate() {
                next[i + 1] += c;
                next[i] += c * q(-(b as i64));
            }
            num = next;
            denom *= q(a as i64 - b as i64);
        }
        let w = va / denom;
        for (i, c) in num.iter().enumerate() {
            acc[i] += c * &w;
        }
    }
    acc
}

impl crate::ring::Ring for DopElement {
    type Ctx = usize;

    fn ctx(&self) -> usize {
        self.n
    }

    fn zero(ctx: usize) -> Self {
        DopElement::zero(ctx)
    }

    fn one(ctx: usize) -> Self {
        DopElement::one(ctx)
    }

    fn is_zero(&self) -> bool {
        DopElement::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        DopElement::add(self, rhs)
    }

    fn neg(&self) -> Self {
        DopElement::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        DopElement::mul(self, rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        DopElement::scale(self, c)
    }

    fn as_scalar(&self) -> Option<Q> {
        if self.terms.is_empty() {
            return Some(num_traits::Zero::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }
}

pub fn dop_mono_to_string(m: &DopMono) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &a) in m.t.iter().enumerate() {
        if a != 0 {
            parts.push(format!("t[{i}]^{a}"));
        }
    }
    for (i, &b) in m.d.iter().enumerate() {
        if b != 0 {
            parts.push(format!("d[{i}]^{b}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for DopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}*{}", c, dop_mono_to_string(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_relation() {
        // d_0 t_0 = t_0 d_0 + 1
        let n = 1;
        let lhs = DopElement::d(n, 0).mul(&DopElement::t(n, 0));
        let rhs = DopElement::t_d(n, 0, 0).add(&DopElement::one(n));
        assert_eq!(lhs, rhs);
        // [d_i, t_j] = delta_ij
        for i in 0..=n {
            for j in 0..=n {
                let c = DopElement::d(n, i).commutator(&DopElement::t(n, j));
                if i == j {
                    assert_eq!(c, DopElement::one(n));
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn laurent_leibniz() {
        // (t_0 d_0)(t_0^{-1} t_1) = t_1 d_0 - t_0^{-1} t_1
        let n = 1;
        let lhs = DopElement::t_d(n, 0, 0).mul(&DopElement::t_ratio(n, 1));
        let rhs = DopElement::t_d(n, 1, 0).sub(&DopElement::t_ratio(n, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cross_terms_commutator() {
        // (t_0 d_1)(t_1 d_0) - (t_1 d_0)(t_0 d_1) = t_0 d_0 - t_1 d_1
        let n = 1;
        let a = DopElement::t_d(n, 0, 1);
        let b = DopElement::t_d(n, 1, 0);
        let expected = DopElement::t_d(n, 0, 0).sub(&DopElement::t_d(n, 1, 1));
        assert_eq!(a.commutator(&b), expected);
    }

    #[test]
    fn euler_is_the_grading_operator() {
        let n = 1;
        let e = euler(n);
        assert_eq!(
            e,
            DopElement::t_d(n, 0, 0).add(&DopElement::t_d(n, 1, 1))
        );
        assert!(e.commutator(&DopElement::t_d(n, 0, 1)).is_zero());
        // Euler acts as a on t_0^{a-2} t_1^2
        for a in [-1i64, 0, 5] {
            let image = e.apply_monomial(&[a - 2, 2]);
            let mut expected = BTreeMap::new();
            if a != 0 {
                expected.insert(vec![a - 2, 2], q(a));
            }
            assert_eq!(image, expected);
        }
    }

    #[test]
    fn apply_monomial_examples() {
        let n = 1;
        // (t_0 d_0)(t_0^3) = 3 t_0^3
        let out = DopElement::t_d(n, 0, 0).apply_monomial(&[3, 0]);
        assert_eq!(out.get(&vec![3, 0]), Some(&q(3)));
        assert_eq!(out.len(), 1);
        // (t_1/t_0)(t_0^2) = t_0 t_1
        let out = DopElement::t_ratio(n, 1).apply_monomial(&[2, 0]);
        assert_eq!(out.get(&vec![1, 1]), Some(&q(1)));
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn euler_interpolation() {
        let n = 1;
        let e2 = euler(n).mul(&euler(n));
        let p = interpolate_euler_poly(&e2, 2).unwrap();
        assert_eq!(p, crate::cpoly::CPoly::var(0).pow(2));
        let one = interpolate_euler_poly(&DopElement::one(n), 0).unwrap();
        assert_eq!(one, crate::cpoly::CPoly::constant(q(1)));
        // t_0 d_1 does not act as a scalar on t_0^a
        assert!(interpolate_euler_poly(&DopElement::t_d(n, 0, 1), 3).is_err());
    }

    #[test]
    fn degree_zero_closure() {
        let n = 2;
        let gens = [
            DopElement::t_ratio(n, 1),
            DopElement::t_ratio(n, 2),
            DopElement::t_d(n, 0, 0),
            DopElement::t_d(n, 0, 1),
            DopElement::t_d(n, 0, 2),
        ];
        let mut x = DopElement::one(n);
        for g in &gens {
            x = x.mul(g).add(&g.mul(&gens[0]));
            assert!(x.is_degree_zero());
        }
    }

    #[test]
    fn display_form() {
        let n = 1;
        let x = DopElement::t_ratio(n, 1).neg();
        assert_eq!(x.to_string(), "-1*t[0]^-1*t[1]^1");
        let y = DopElement::t_d(n, 1, 0);
        assert_eq!(y.to_string(), "1*t[1]^1*d[0]^1");
    }
}
