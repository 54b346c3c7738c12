//! Sparse polynomials over a [`Scalar`] field, generic over the monomial
//! type: [`Word`] gives the tensor algebra, [`CommMonomial`] the symmetric
//! algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::monomial::{CommMonomial, Monomial, Word};
use crate::order::MonomialOrder;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<M: Monomial, C: Scalar> {
    terms: BTreeMap<M, C>,
}

pub type NcPoly<C> = Poly<Word, C>;
pub type CommPoly<C> = Poly<CommMonomial, C>;

impl<M: Monomial, C: Scalar> Default for Poly<M, C> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<M: Monomial, C: Scalar> Poly<M, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(M::one(), C::one())
    }

    pub fn monomial(m: M, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn letter(l: Letter) -> Self {
        Self::monomial(M::from_letters(&[l]), C::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, C)> {
        self.terms.into_iter()
    }

    /// Coefficients keyed by monomial, zero entries absent.
    pub fn as_map(&self) -> &BTreeMap<M, C> {
        &self.terms
    }

    pub fn into_map(self) -> BTreeMap<M, C> {
        self.terms
    }

    /// From a map without zero entries, as produced by row reduction.
    pub fn from_map(terms: BTreeMap<M, C>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Poly { terms }
    }

    pub fn coeff(&self, m: &M) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: M, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * left * other * right`
    pub fn add_scaled_sandwich(&mut self, c: &C, left: &M, other: &Self, right: &M) {
        for (m, d) in other.terms() {
            self.add_term(M::sandwich(left, m, right), c.clone() * d.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d.clone() * c.clone())).collect() }
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&M, &C)> {
        self.terms.iter().max_by(|a, b| a.0.key(order).cmp(&b.0.key(order)))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&M> {
        self.leading(order).map(|(m, _)| m)
    }

    /// Scaled so that the leading coefficient is one.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            None => Self::zero(),
            Some((_, c)) => self.scale(&(C::one() / c.clone())),
        }
    }

    pub fn map_monomials(&self, mut f: impl FnMut(&M) -> M) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn grading(&self, alphabet: &Alphabet) -> Grading {
        let mut g = Grading { degree: Graded::Empty, weight: Graded::Empty, parity: Graded::Empty };
        for m in self.terms.keys() {
            g.degree.absorb(m.degree() as i64);
            g.weight.absorb(m.weight(alphabet));
            g.parity.absorb(m.parity(alphabet) as i64);
        }
        g
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        Self::render_terms(alphabet, self.terms.iter())
    }

    /// Renders terms in the given sequence.
    pub fn render_terms<'a>(alphabet: &Alphabet, terms: impl Iterator<Item = (&'a M, &'a C)>) -> String {
        let mut out = String::new();
        for (i, (m, c)) in terms.enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() || m.is_one() {
                out.push_str(&abs.to_string());
                if !m.is_one() {
                    out.push('*');
                }
            }
            if !m.is_one() {
                out.push_str(&m.render(alphabet));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<M: Monomial, C: Scalar> fmt::Debug for Poly<M, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<'a, M: Monomial, C: Scalar> Add for &'a Poly<M, C> {
    type Output = Poly<M, C>;
    fn add(self, rhs: Self) -> Poly<M, C> {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, M: Monomial, C: Scalar> Sub for &'a Poly<M, C> {
    type Output = Poly<M, C>;
    fn sub(self, rhs: Self) -> Poly<M, C> {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, M: Monomial, C: Scalar> Neg for &'a Poly<M, C> {
    type Output = Poly<M, C>;
    fn neg(self) -> Poly<M, C> {
        self.scale(&-C::one())
    }
}

impl<'a, M: Monomial, C: Scalar> Mul for &'a Poly<M, C> {
    type Output = Poly<M, C>;
    fn mul(self, rhs: Self) -> Poly<M, C> {
        let mut out = Poly::zero();
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                out.add_term(a.mul(b), c.clone() * d.clone());
            }
        }
        out
    }
}

impl<M: Monomial, C: Scalar> Add for Poly<M, C> {
    type Output = Poly<M, C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<M: Monomial, C: Scalar> Sub for Poly<M, C> {
    type Output = Poly<M, C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<M: Monomial, C: Scalar> Mul for Poly<M, C> {
    type Output = Poly<M, C>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// One component of a grading report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graded {
    /// The zero polynomial carries every grading.
    Empty,
    Pure(i64),
    Mixed,
}

impl Graded {
    fn absorb(&mut self, v: i64) {
        *self = match *self {
            Graded::Empty => Graded::Pure(v),
            Graded::Pure(w) if w == v => Graded::Pure(v),
            _ => Graded::Mixed,
        }
    }

    pub fn value(self) -> Option<i64> {
        match self {
            Graded::Pure(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Graded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graded::Empty => write!(f, "any"),
            Graded::Pure(v) => write!(f, "{v}"),
            Graded::Mixed => write!(f, "mixed"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grading {
    pub degree: Graded,
    pub weight: Graded,
    pub parity: Graded,
}

impl Grading {
    pub fn is_homogeneous(&self) -> bool {
        self.degree != Graded::Mixed && self.weight != Graded::Mixed
    }
}

/// A polynomial bound to its alphabet, for callers that mix elements from
/// different sources.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<M: Monomial, C: Scalar> {
    pub alphabet: Arc<Alphabet>,
    pub poly: Poly<M, C>,
}

impl<M: Monomial, C: Scalar> Element<M, C> {
    pub fn new(alphabet: Arc<Alphabet>, poly: Poly<M, C>) -> Self {
        Element { alphabet, poly }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.alphabet, &rhs.alphabet) {
            self.alphabet.check_compatible(&rhs.alphabet)?;
        }
        Ok(Element { alphabet: self.alphabet.clone(), poly: &self.poly * &rhs.poly })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.alphabet, &rhs.alphabet) {
            self.alphabet.check_compatible(&rhs.alphabet)?;
        }
        Ok(Element { alphabet: self.alphabet.clone(), poly: &self.poly + &rhs.poly })
    }

    pub fn grading(&self) -> Grading {
        self.poly.grading(&self.alphabet)
    }
}

/// Parses a monomial from generator names.
pub fn parse_monomial<M: Monomial>(alphabet: &Alphabet, names: &[impl AsRef<str>]) -> Result<M> {
    let mut letters = Vec::with_capacity(names.len());
    for n in names {
        let n = n.as_ref();
        letters.push(alphabet.letter(n).ok_or_else(|| Error::Schema(format!("unknown generator {n:?}")))?);
    }
    Ok(M::from_letters(&letters))
}
