//! The enveloping algebra U(gl(N)) in canonical Poincare-Birkhoff-Witt form.
//!
//! Generators are ordered lowering (i > j) first, then Cartan, then raising,
//! lexicographically by (i, j) inside each block. With that order the
//! Harish-Chandra projection is literally "drop every monomial containing a
//! non-Cartan factor". Normalization rewrites adjacent out-of-order pairs
//! through the defining relation [E_ab, E_cd] = d_bc E_ad - d_da E_cb and is
//! memoized per word.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::scalar::{q, Q};

/// Index range of a gl algebra. gl(n) carries matrix indices 1..=n while
/// gl(n+1) carries 0..=n, so the range is part of the rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GlRank {
    pub first: usize,
    pub last: usize,
}

impl GlRank {
    pub fn new(first: usize, last: usize) -> Self {
        assert!(last >= first);
        GlRank { first, last }
    }

    /// gl(n) with indices 1..=n.
    pub fn gl(n: usize) -> Self {
        assert!(n >= 1);
        GlRank::new(1, n)
    }

    /// gl(n+1) with indices 0..=n.
    pub fn gl1(n: usize) -> Self {
        GlRank::new(0, n)
    }

    pub fn dim(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        self.first..=self.last
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= self.first && i <= self.last
    }

    pub fn gen_count(&self) -> usize {
        self.dim() * self.dim()
    }

    fn lowering_count(&self) -> usize {
        let n = self.dim();
        n * (n - 1) / 2
    }

    /// All generator pairs in PBW order.
    pub fn gens(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.gen_count());
        for i in self.indices() {
            for j in self.indices() {
                if i > j {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        let lower = out.len();
        for i in self.indices() {
            out.push((i, i));
        }
        for i in self.indices() {
            for j in self.indices() {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out[lower + self.dim()..].sort_unstable();
        out
    }

    /// Rank of the generator E_ij in PBW order.
    pub fn gen_index(&self, i: usize, j: usize) -> usize {
        assert!(self.contains(i) && self.contains(j), "E[{i},{j}] out of range");
        let n = self.dim();
        let (a, b) = (i - self.first, j - self.first);
        if a > b {
            // lowering block, lex by (i, j): pairs (a', b') with b' < a'
            a * (a - 1) / 2 + b
        } else if a == b {
            self.lowering_count() + a
        } else {
            self.lowering_count() + n + a * (2 * n - a - 1) / 2 + (b - a - 1)
        }
    }

    pub fn gen_pair(&self, idx: usize) -> (usize, usize) {
        let n = self.dim();
        let lower = self.lowering_count();
        if idx < lower {
            let mut a = 1;
            while (a + 1) * a / 2 <= idx {
                a += 1;
            }
            let b = idx - a * (a - 1) / 2;
            (a + self.first, b + self.first)
        } else if idx < lower + n {
            let a = idx - lower;
            (a + self.first, a + self.first)
        } else {
            let mut r = idx - lower - n;
            for a in 0..n {
                let row = n - a - 1;
                if r < row {
                    return (a + self.first, a + r + 1 + self.first);
                }
                r -= row;
            }
            panic!("generator index {idx} out of range");
        }
    }

    pub fn is_lowering(&self, idx: usize) -> bool {
        idx < self.lowering_count()
    }

    pub fn is_cartan(&self, idx: usize) -> bool {
        idx >= self.lowering_count() && idx < self.lowering_count() + self.dim()
    }

    pub fn is_raising(&self, idx: usize) -> bool {
        idx >= self.lowering_count() + self.dim()
    }
}

impl fmt::Display for GlRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl[{}..{}]", self.first, self.last)
    }
}

/// Exponent vector over the generators in PBW order, compared by graded lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PbwMono(pub Vec<u32>);

impl PbwMono {
    pub fn one(rank: GlRank) -> Self {
        PbwMono(vec![0; rank.gen_count()])
    }

    pub fn gen(rank: GlRank, i: usize, j: usize) -> Self {
        let mut m = Self::one(rank);
        m.0[rank.gen_index(i, j)] = 1;
        m
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn word(&self) -> Vec<u16> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (g, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(g as u16);
            }
        }
        w
    }

    fn from_word(rank: GlRank, w: &[u16]) -> Self {
        let mut m = Self::one(rank);
        for &g in w {
            m.0[g as usize] += 1;
        }
        m
    }
}

impl Ord for PbwMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of U(gl(N)): a scalar-weighted sum of canonical PBW monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UglElement {
    rank: GlRank,
    terms: BTreeMap<PbwMono, Q>,
}

thread_local! {
    static WORD_CACHE: RefCell<HashMap<(GlRank, Vec<u16>), UglElement>> =
        RefCell::new(HashMap::new());
}

impl UglElement {
    pub fn zero(rank: GlRank) -> Self {
        UglElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: GlRank) -> Self {
        Self::scalar(rank, q(1))
    }

    pub fn scalar(rank: GlRank, c: Q) -> Self {
        let mut e = Self::zero(rank);
        if !c.is_zero() {
            e.terms.insert(PbwMono::one(rank), c);
        }
        e
    }

    /// The generator E_ij.
    pub fn gen(rank: GlRank, i: usize, j: usize) -> Self {
        let mut e = Self::zero(rank);
        e.terms.insert(PbwMono::gen(rank, i, j), q(1));
        e
    }

    pub fn from_terms(rank: GlRank, terms: impl IntoIterator<Item = (PbwMono, Q)>) -> Self {
        let mut e = Self::zero(rank);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn rank(&self) -> GlRank {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMono, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &PbwMono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, m: PbwMono, c: Q) {
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

    fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        UglElement {
            rank: self.rank,
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
            return Self::zero(self.rank);
        }
        UglElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Canonical PBW product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = Self::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = mono_mul(self.rank, m1, m2);
                let c = c1 * c2;
                for (m, x) in prod.terms {
                    out.add_term(m, x * &c);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// xy - yx.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Central iff it commutes with every Chevalley generator and every
    /// Cartan generator.
    pub fn is_central(&self) -> bool {
        let r = self.rank;
        for i in r.first..r.last {
            let up = Self::gen(r, i, i + 1);
            let down = Self::gen(r, i + 1, i);
            if !self.commutator(&up).is_zero() || !self.commutator(&down).is_zero() {
                return false;
            }
        }
        for i in r.indices() {
            if !self.commutator(&Self::gen(r, i, i)).is_zero() {
                return false;
            }
        }
        true
    }

    /// The trace element G_1 = sum of E_ii.
    pub fn g1(rank: GlRank) -> Self {
        let mut e = Self::zero(rank);
        for i in rank.indices() {
            e = e.add(&Self::gen(rank, i, i));
        }
        e
    }

    /// Splits a monomial's exponents into (lowering, cartan, raising) blocks.
    pub fn split_blocks<'m>(rank: GlRank, m: &'m PbwMono) -> (&'m [u32], &'m [u32], &'m [u32]) {
        let lower = rank.lowering_count();
        let n = rank.dim();
        (
            &m.0[..lower],
            &m.0[lower..lower + n],
            &m.0[lower + n..],
        )
    }
}

/// Product of two canonical monomials, normalized.
fn mono_mul(rank: GlRank, m1: &PbwMono, m2: &PbwMono) -> UglElement {
    // fast path: concatenation already ordered
    let hi1 = m1.0.iter().rposition(|&e| e > 0);
    let lo2 = m2.0.iter().position(|&e| e > 0);
    match (hi1, lo2) {
        (None, _) => {
            return UglElement::from_terms(rank, [(m2.clone(), q(1))]);
        }
        (_, None) => {
            return UglElement::from_terms(rank, [(m1.clone(), q(1))]);
        }
        (Some(h), Some(l)) if h <= l => {
            let mut m = m1.clone();
            for (i, &e) in m2.0.iter().enumerate() {
                m.0[i] += e;
            }
            return UglElement::from_terms(rank, [(m, q(1))]);
        }
        _ => {}
    }
    let mut word = m1.word();
    word.extend(m2.word());
    normalize_word(rank, &word)
}

/// Rewrites a word over the generators into canonical PBW form. Terminates
/// because each step either lowers the degree or removes one inversion.
fn normalize_word(rank: GlRank, word: &[u16]) -> UglElement {
    let descent = word.windows(2).position(|w| w[0] > w[1]);
    let p = match descent {
        None => {
            return UglElement::from_terms(rank, [(PbwMono::from_word(rank, word), q(1))]);
        }
        Some(p) => p,
    };
    if let Some(hit) = WORD_CACHE.with(|c| c.borrow().get(&(rank, word.to_vec())).cloned()) {
        return hit;
    }
    let mut swapped = word.to_vec();
    swapped.swap(p, p + 1);
    let mut acc = normalize_word(rank, &swapped);
    let (i, j) = rank.gen_pair(word[p] as usize);
    let (k, l) = rank.gen_pair(word[p + 1] as usize);
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    if j == k {
        let mut rep = Vec::with_capacity(word.len() - 1);
        rep.extend_from_slice(&word[..p]);
        rep.push(rank.gen_index(i, l) as u16);
        rep.extend_from_slice(&word[p + 2..]);
        acc.add_assign(&normalize_word(rank, &rep));
    }
    if l == i {
        let mut rep = Vec::with_capacity(word.len() - 1);
        rep.extend_from_slice(&word[..p]);
        rep.push(rank.gen_index(k, j) as u16);
        rep.extend_from_slice(&word[p + 2..]);
        acc.add_assign(&normalize_word(rank, &rep).neg());
    }
    WORD_CACHE.with(|c| {
        c.borrow_mut().insert((rank, word.to_vec()), acc.clone());
    });
    acc
}

impl crate::ring::Ring for UglElement {
    type Ctx = GlRank;

    fn ctx(&self) -> GlRank {
        self.rank
    }

    fn zero(ctx: GlRank) -> Self {
        UglElement::zero(ctx)
    }

    fn one(ctx: GlRank) -> Self {
        UglElement::one(ctx)
    }

    fn is_zero(&self) -> bool {
        UglElement::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        UglElement::add(self, rhs)
    }

    fn neg(&self) -> Self {
        UglElement::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        UglElement::mul(self, rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        UglElement::scale(self, c)
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

pub fn mono_to_string(rank: GlRank, m: &PbwMono) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (g, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let (i, j) = rank.gen_pair(g);
        if e == 1 {
            parts.push(format!("E[{i},{j}]"));
        } else {
            parts.push(format!("E[{i},{j}]^{e}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for UglElement {
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
                write!(f, "{}*{}", c, mono_to_string(self.rank, m))?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Adapted basis: U(gl(N)) = U(sl(N)) tensor C[G_1]
// ---------------------------------------------------------------------------

/// Monomial over the sl(N) basis {E_ij (i != j), H_i = E_ii - E_{i+1,i+1}}
/// together with a power of the central trace G_1. The sl exponents reuse the
/// PBW layout with the Cartan block holding H_1..H_{N-1} (one slot shorter).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdaptedMono {
    pub sl: Vec<u32>,
    pub g1: u32,
}

impl AdaptedMono {
    fn degree(&self) -> u64 {
        self.sl.iter().map(|&e| e as u64).sum::<u64>() + self.g1 as u64
    }
}

impl Ord for AdaptedMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.g1.cmp(&other.g1))
            .then_with(|| self.sl.cmp(&other.sl))
    }
}

impl PartialOrd for AdaptedMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdaptedElement {
    pub rank: GlRank,
    pub terms: BTreeMap<AdaptedMono, Q>,
}

impl AdaptedElement {
    /// True when every monomial carries at least one factor of G_1, i.e. the
    /// element lies in the two-sided ideal (G_1).
    pub fn in_g1_ideal(&self) -> bool {
        self.terms.keys().all(|m| m.g1 >= 1)
    }

    /// True when no monomial carries a factor of G_1, i.e. the element lies
    /// in the subalgebra U(sl(N)).
    pub fn g1_free(&self) -> bool {
        self.terms.keys().all(|m| m.g1 == 0)
    }
}

impl fmt::Display for AdaptedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rank = self.rank;
        let n = rank.dim();
        let lower = n * (n - 1) / 2;
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (g, &e) in m.sl.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if g >= lower && g < lower + n - 1 {
                    format!("H[{}]", g - lower + rank.first)
                } else {
                    // off-diagonal slots keep their E labels; slots above the
                    // shortened Cartan block shift back by one
                    let idx = if g >= lower + n - 1 { g + 1 } else { g };
                    let (i, j) = rank.gen_pair(idx);
                    format!("E[{i},{j}]")
                };
                if e == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{e}")?;
                }
            }
            if m.g1 == 1 {
                write!(f, "*G1")?;
            } else if m.g1 > 1 {
                write!(f, "*G1^{}", m.g1)?;
            }
        }
        Ok(())
    }
}

/// Commutative polynomial in the Cartan slots (H exponents, G1 exponent).
type CartanPoly = BTreeMap<(Vec<u32>, u32), Q>;

fn cartan_mul(a: &CartanPoly, b: &CartanPoly) -> CartanPoly {
    let mut out: CartanPoly = BTreeMap::new();
    for ((ha, ga), ca) in a {
        for ((hb, gb), cb) in b {
            let h: Vec<u32> = ha.iter().zip(hb).map(|(x, y)| x + y).collect();
            let e = out.entry((h, ga + gb)).or_insert_with(Q::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// E_ii rewritten over {H_1..H_{N-1}, G_1}: E_ii = G_1/N + sum of H's with
/// prefix-sum coefficients.
fn cartan_gen_in_adapted(rank: GlRank, pos: usize) -> CartanPoly {
    let n = rank.dim();
    let mut out: CartanPoly = BTreeMap::new();
    out.insert((vec![0; n - 1], 1), Q::new(1.into(), (n as i64).into()));
    // h = E_ii - G_1/N has diagonal entries d_k = delta_{k,pos} - 1/N;
    // its H_j coefficient is the prefix sum d_1 + ... + d_j
    let mut prefix = Q::zero();
    for jslot in 0..n - 1 {
        let d = if jslot == pos { q(1) } else { Q::zero() } - Q::new(1.into(), (n as i64).into());
        prefix += d;
        if !prefix.is_zero() {
            let mut h = vec![0; n - 1];
            h[jslot] = 1;
            out.insert((h, 0), prefix.clone());
        }
    }
    out
}

/// Rewrite over the basis {off-diagonal E_ij, H_i, G_1}. Linear bijection;
/// `from_adapted` is the exact inverse.
pub fn to_adapted(x: &UglElement) -> AdaptedElement {
    let rank = x.rank();
    let n = rank.dim();
    let mut terms: BTreeMap<AdaptedMono, Q> = BTreeMap::new();
    for (m, c) in x.terms() {
        let (low, cart, high) = UglElement::split_blocks(rank, m);
        let mut poly: CartanPoly = BTreeMap::new();
        poly.insert((vec![0; n - 1], 0), q(1));
        for (pos, &e) in cart.iter().enumerate() {
            let g = cartan_gen_in_adapted(rank, pos);
            for _ in 0..e {
                poly = cartan_mul(&poly, &g);
            }
        }
        for ((h, g1), pc) in poly {
            let mut sl = Vec::with_capacity(rank.gen_count() - 1);
            sl.extend_from_slice(low);
            sl.extend_from_slice(&h);
            sl.extend_from_slice(high);
            let mono = AdaptedMono { sl, g1 };
            let entry = terms.entry(mono).or_insert_with(Q::zero);
            *entry += pc * c;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    AdaptedElement { rank, terms }
}

pub fn from_adapted(x: &AdaptedElement) -> UglElement {
    let rank = x.rank;
    let n = rank.dim();
    let lower = n * (n - 1) / 2;
    let mut out = UglElement::zero(rank);
    for (m, c) in &x.terms {
        // rebuild the Cartan part as a polynomial in the E_ii
        let mut poly: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        poly.insert(vec![0; n], c.clone());
        let mul_in = |poly: &BTreeMap<Vec<u32>, Q>, lin: &[(usize, Q)]| {
            let mut out: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
            for (e, pc) in poly {
                for (slot, lc) in lin {
                    let mut ne = e.clone();
                    ne[*slot] += 1;
                    let entry = out.entry(ne).or_insert_with(Q::zero);
                    *entry += pc * lc;
                }
            }
            out
        };
        for (jslot, &e) in m.sl[lower..lower + n - 1].iter().enumerate() {
            let h = vec![(jslot, q(1)), (jslot + 1, q(-1))];
            for _ in 0..e {
                poly = mul_in(&poly, &h);
            }
        }
        let g: Vec<(usize, Q)> = (0..n).map(|k| (k, q(1))).collect();
        for _ in 0..m.g1 {
            poly = mul_in(&poly, &g);
        }
        for (cart, pc) in poly {
            let mut exps = Vec::with_capacity(rank.gen_count());
            exps.extend_from_slice(&m.sl[..lower]);
            exps.extend_from_slice(&cart);
            exps.extend_from_slice(&m.sl[lower + n - 1..]);
            out.add_term(PbwMono(exps), pc);
        }
    }
    out
}

/// Membership in the two-sided ideal (G_1), via the adapted decomposition.
pub fn in_g1_ideal(x: &UglElement) -> bool {
    to_adapted(x).in_g1_ideal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qr;

    fn e(rank: GlRank, i: usize, j: usize) -> UglElement {
        UglElement::gen(rank, i, j)
    }

    #[test]
    fn gen_index_roundtrip_and_blocks() {
        for rank in [GlRank::gl(3), GlRank::gl1(3), GlRank::gl(1)] {
            let gens = rank.gens();
            assert_eq!(gens.len(), rank.gen_count());
            for (idx, &(i, j)) in gens.iter().enumerate() {
                assert_eq!(rank.gen_index(i, j), idx);
                assert_eq!(rank.gen_pair(idx), (i, j));
                if i > j {
                    assert!(rank.is_lowering(idx));
                } else if i == j {
                    assert!(rank.is_cartan(idx));
                } else {
                    assert!(rank.is_raising(idx));
                }
            }
            // PBW order is lowering < Cartan < raising
            let lower = rank.lowering_count();
            for idx in 0..lower {
                assert!(rank.is_lowering(idx));
            }
        }
    }

    #[test]
    fn defining_relation() {
        let r = GlRank::gl(2);
        // E_12 * E_21 = E_21 E_12 + E_11 - E_22
        let lhs = e(r, 1, 2).mul(&e(r, 2, 1));
        let rhs = e(r, 2, 1)
            .mul(&e(r, 1, 2))
            .add(&e(r, 1, 1))
            .sub(&e(r, 2, 2));
        assert_eq!(lhs, rhs);
        // identity
        let x = e(r, 1, 2).mul(&e(r, 2, 2)).add(&e(r, 2, 1).scale(&qr(3, 2)));
        assert_eq!(UglElement::one(r).mul(&x), x);
        // commutators
        assert!(e(r, 1, 1).commutator(&e(r, 1, 1)).is_zero());
        assert_eq!(
            e(r, 1, 2).commutator(&e(r, 2, 1)),
            e(r, 1, 1).sub(&e(r, 2, 2))
        );
        assert!(UglElement::g1(r).commutator(&e(r, 1, 2)).is_zero());
    }

    #[test]
    fn associativity_of_triple_product() {
        let r = GlRank::gl(3);
        let (a, b, c) = (e(r, 1, 2), e(r, 2, 3), e(r, 3, 1));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn centrality() {
        let r = GlRank::gl(2);
        assert!(UglElement::g1(r).is_central());
        assert!(!e(r, 1, 2).is_central());
    }

    #[test]
    fn adapted_basis_change() {
        let r = GlRank::gl(2);
        // E_11 = (1/2) G_1 + (1/2) H_1
        let a = to_adapted(&e(r, 1, 1));
        assert_eq!(a.terms.len(), 2);
        assert_eq!(a.to_string(), "1/2*G1 + 1/2*H[1]");
        // off-diagonal generators are untouched
        let b = to_adapted(&e(r, 1, 2));
        assert_eq!(b.to_string(), "1*E[1,2]");
        // round trip on a product
        let x = e(r, 1, 1).mul(&e(r, 2, 2));
        assert_eq!(from_adapted(&to_adapted(&x)), x);
    }

    #[test]
    fn g1_ideal_membership() {
        let r = GlRank::gl1(1);
        assert!(in_g1_ideal(&UglElement::g1(r).mul(&e(r, 0, 1))));
        assert!(!in_g1_ideal(&e(r, 0, 1)));
        // E_00 - pi_g(E_00) = G_1/2 for n = 1
        let half_g1 = UglElement::g1(r).scale(&qr(1, 2));
        assert!(in_g1_ideal(&half_g1));
    }

    #[test]
    fn display_form() {
        let r = GlRank::gl(2);
        let x = e(r, 2, 1).mul(&e(r, 2, 1)).scale(&qr(-3, 2)).add(&UglElement::one(r));
        assert_eq!(x.to_string(), "-3/2*E[2,1]^2 + 1");
    }
}
