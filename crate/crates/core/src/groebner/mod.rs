//! Commutative (Buchberger) and noncommutative (overlap) Gröbner bases for
//! homogeneous ideals, computed degree by degree.
//!
//! Both engines share one implementation, generic over the monomial type.
//! At each degree the reduced S-polynomials and relations are row reduced
//! together, so the output is the reduced Gröbner basis truncated at the
//! bound, whatever order the pairs were reduced in.

pub mod json;
mod monomials;
mod normal;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseVec};
use crate::monomial::{CommMonomial, Monomial, Word};
use crate::order::{MonomialOrder, OrderKey};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub use monomials::{CriticalPair, GbMonomial};
pub use normal::{hilbert_character, hilbert_series, normal_monomials, NormalEnumeration};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Commutative,
    Noncommutative,
}

impl Flavor {
    pub fn of<M: Monomial>() -> Self {
        if M::COMMUTATIVE {
            Flavor::Commutative
        } else {
            Flavor::Noncommutative
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Commutative => "comm",
            Flavor::Noncommutative => "nc",
        }
    }
}

/// Generators, a monomial order and homogeneous relations.
#[derive(Debug, Clone)]
pub struct Presentation<M: Monomial, C: Scalar> {
    pub alphabet: Alphabet,
    pub order: MonomialOrder,
    pub relations: Vec<Poly<M, C>>,
    /// Set when the ideal has further generators above this degree that
    /// were not listed.
    pub relations_through: Option<usize>,
}

pub type NcPresentation<C> = Presentation<Word, C>;
pub type CommPresentation<C> = Presentation<CommMonomial, C>;

impl<M: Monomial, C: Scalar> Presentation<M, C> {
    /// Checks that the order covers the alphabet and that every relation is
    /// degree- and weight-homogeneous. Zero relations are dropped.
    pub fn new(alphabet: Alphabet, order: MonomialOrder, relations: Vec<Poly<M, C>>) -> Result<Self> {
        if order.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "order ranks {} letters, alphabet has {}",
                order.len(),
                alphabet.len()
            )));
        }
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.is_zero() {
                continue;
            }
            if r.terms().any(|(m, _)| m.letters().iter().any(|&l| l as usize >= alphabet.len())) {
                return Err(Error::AlphabetMismatch(format!("relation uses letters outside {alphabet}")));
            }
            let g = r.grading(&alphabet);
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(r.render(&alphabet)));
            }
            rels.push(r);
        }
        Ok(Presentation { alphabet, order, relations: rels, relations_through: None })
    }

    /// Marks the relation list as complete only through degree `d`.
    pub fn listed_through(mut self, d: usize) -> Self {
        self.relations_through = Some(d);
        self
    }

    pub fn flavor(&self) -> Flavor {
        Flavor::of::<M>()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(|r| r.max_degree()).max().unwrap_or(0)
    }

    pub fn is_quadratic(&self) -> bool {
        self.relations.iter().all(|r| r.max_degree() == Some(2))
    }
}

/// A reduced Gröbner basis, possibly truncated.
#[derive(Debug, Clone)]
pub struct GBasis<M: Monomial, C: Scalar> {
    pub alphabet: Alphabet,
    pub order: MonomialOrder,
    /// Monic and inter-reduced, sorted by degree and then leading monomial.
    pub elements: Vec<Poly<M, C>>,
    /// Every critical pair of degree at most this bound resolves.
    pub degree_bound: usize,
    /// Nothing above `degree_bound` can change the basis.
    pub complete: bool,
    /// What was found unresolved above the bound.
    pub truncation: Vec<Unresolved<M>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unresolved<M> {
    Pair(CriticalPair<M>),
    Relation { index: usize, degree: usize },
}

impl<M: GbMonomial, C: Scalar> GBasis<M, C> {
    /// A candidate basis taken as given, made monic; [`verify_gb`] certifies it.
    pub fn candidate(alphabet: Alphabet, order: MonomialOrder, elements: Vec<Poly<M, C>>, degree_bound: usize) -> Self {
        let elements = elements.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic(&order)).collect();
        GBasis { alphabet, order, elements, degree_bound, complete: false, truncation: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<M> {
        self.elements.iter().map(|p| p.leading_monomial(&self.order).expect("nonzero").clone()).collect()
    }

    pub fn is_quadratic(&self) -> bool {
        self.elements.iter().all(|p| p.max_degree() == Some(2))
    }

    pub fn max_degree(&self) -> usize {
        self.elements.iter().filter_map(|p| p.max_degree()).max().unwrap_or(0)
    }

    /// Whether normal monomials of this degree are known to be a basis.
    pub fn certifies(&self, degree: usize) -> bool {
        self.complete || degree <= self.degree_bound
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if self.certifies(degree) {
            Ok(())
        } else {
            Err(Error::UncertifiedDegree { degree, bound: self.degree_bound })
        }
    }

    pub fn reducer(&self) -> Reducer<M, C> {
        Reducer::new(&self.elements, &self.order)
    }

    pub fn normal_form(&self, p: &Poly<M, C>) -> Poly<M, C> {
        self.reducer().reduce(p)
    }

    /// No leading monomial divides another.
    pub fn is_antichain(&self) -> bool {
        let leads = self.leading_monomials();
        leads.iter().enumerate().all(|(i, a)| {
            leads.iter().enumerate().all(|(j, b)| i == j || a.divide(b).is_none())
        })
    }

    pub fn critical_pairs(&self) -> Vec<CriticalPair<M>> {
        let leads = self.leading_monomials();
        let mut out = Vec::new();
        for j in 0..leads.len() {
            for i in 0..=j {
                out.extend(M::critical_pairs(i, &leads[i], j, &leads[j]));
            }
        }
        out
    }

    pub fn s_polynomial(&self, pair: &CriticalPair<M>) -> Poly<M, C> {
        s_polynomial(&self.elements, pair)
    }
}

fn s_polynomial<M: Monomial, C: Scalar>(elements: &[Poly<M, C>], pair: &CriticalPair<M>) -> Poly<M, C> {
    let mut s = Poly::zero();
    s.add_scaled_sandwich(&C::one(), &pair.left_i, &elements[pair.i], &pair.right_i);
    s.add_scaled_sandwich(&-C::one(), &pair.left_j, &elements[pair.j], &pair.right_j);
    s
}

/// Which reducible term is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// The largest reducible term, by the first element whose lead divides it.
    Largest,
    /// The smallest reducible term, by the last element whose lead divides it.
    Smallest,
}

/// Reduces polynomials modulo a fixed list of polynomials.
pub struct Reducer<M: GbMonomial, C: Scalar> {
    order: MonomialOrder,
    leads: Vec<M>,
    index: M::Index,
    /// Non-leading terms of each element, divided by its leading coefficient.
    tails: Vec<Vec<(M, C)>>,
}

impl<M: GbMonomial, C: Scalar> Reducer<M, C> {
    pub fn new(elements: &[Poly<M, C>], order: &MonomialOrder) -> Self {
        let mut leads = Vec::with_capacity(elements.len());
        let mut tails = Vec::with_capacity(elements.len());
        for p in elements {
            let (lead, lc) = p.leading(order).expect("reducers are nonzero");
            let inv = C::one() / lc.clone();
            tails.push(
                p.terms()
                    .filter(|(m, _)| *m != lead)
                    .map(|(m, c)| (m.clone(), c.clone() * inv.clone()))
                    .collect(),
            );
            leads.push(lead.clone());
        }
        Reducer { order: order.clone(), index: M::index(&leads), leads, tails }
    }

    pub fn is_reducible(&self, m: &M) -> bool {
        M::lookup(&self.index, m).is_some()
    }

    pub fn reduce(&self, p: &Poly<M, C>) -> Poly<M, C> {
        self.reduce_with(p, ReductionStrategy::Largest)
    }

    pub fn reduce_with(&self, p: &Poly<M, C>, strategy: ReductionStrategy) -> Poly<M, C> {
        let mut work: BTreeMap<OrderKey, (M, C)> =
            p.terms().map(|(m, c)| (m.key(&self.order), (m.clone(), c.clone()))).collect();
        let mut out = Poly::zero();
        match strategy {
            ReductionStrategy::Largest => {
                while let Some((_, (m, c))) = work.pop_last() {
                    match M::lookup(&self.index, &m) {
                        Some((i, l, r)) => self.rewrite(&mut work, i, &l, &r, &c),
                        None => out.add_term(m, c),
                    }
                }
            }
            ReductionStrategy::Smallest => {
                while let Some((k, i, l, r)) = work.iter().find_map(|(k, (m, _))| {
                    self.last_divisor(m).map(|(i, l, r)| (k.clone(), i, l, r))
                }) {
                    let (_, c) = work.remove(&k).expect("present");
                    self.rewrite(&mut work, i, &l, &r, &c);
                }
                for (_, (m, c)) in work {
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    fn last_divisor(&self, m: &M) -> Option<(usize, M, M)> {
        (0..self.leads.len()).rev().find_map(|i| m.divide(&self.leads[i]).map(|(l, r)| (i, l, r)))
    }

    fn rewrite(&self, work: &mut BTreeMap<OrderKey, (M, C)>, i: usize, l: &M, r: &M, c: &C) {
        for (tm, tc) in &self.tails[i] {
            let m = M::sandwich(l, tm, r);
            let add = -(c.clone() * tc.clone());
            let k = m.key(&self.order);
            match work.get_mut(&k) {
                Some(slot) => {
                    let s = slot.1.clone() + add;
                    if s.is_zero() {
                        work.remove(&k);
                    } else {
                        slot.1 = s;
                    }
                }
                None => {
                    work.insert(k, (m, add));
                }
            }
        }
    }
}

type RowKey<M> = (OrderKey, M);

fn to_row<M: Monomial, C: Scalar>(p: &Poly<M, C>, order: &MonomialOrder) -> SparseVec<RowKey<M>, C> {
    p.terms().map(|(m, c)| ((m.key(order), m.clone()), c.clone())).collect()
}

fn from_row<M: Monomial, C: Scalar>(row: SparseVec<RowKey<M>, C>) -> Poly<M, C> {
    Poly::from_terms(row.into_iter().map(|((_, m), c)| (m, c)))
}

/// Gröbner basis of the ideal generated by `pres.relations`, complete
/// through degree `max_deg` (or through the last listed relation degree,
/// if that is lower).
pub fn complete<M: GbMonomial, C: Scalar>(pres: &Presentation<M, C>, max_deg: usize) -> GBasis<M, C> {
    let max_deg = max_deg.min(pres.relations_through.unwrap_or(usize::MAX));
    let order = &pres.order;
    let mut relations: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, r) in pres.relations.iter().enumerate() {
        relations.entry(r.max_degree().unwrap_or(0)).or_default().push(i);
    }
    let mut elements: Vec<Poly<M, C>> = Vec::new();
    let mut leads: Vec<M> = Vec::new();
    let mut pairs: BTreeMap<usize, Vec<CriticalPair<M>>> = BTreeMap::new();

    for d in 1..=max_deg {
        let mut candidates: Vec<Poly<M, C>> =
            relations.get(&d).into_iter().flatten().map(|&i| pres.relations[i].clone()).collect();
        for p in pairs.remove(&d).unwrap_or_default() {
            if !p.coprime {
                candidates.push(s_polynomial(&elements, &p));
            }
        }
        if candidates.is_empty() {
            continue;
        }
        let reducer = Reducer::new(&elements, order);
        let reduced: Vec<Poly<M, C>> = candidates.par_iter().map(|p| reducer.reduce(p)).collect();
        let space = RowSpace::from_vectors(reduced.iter().filter(|p| !p.is_zero()).map(|p| to_row(p, order)));
        let start = elements.len();
        let mut fresh: Vec<Poly<M, C>> = space.canonical_rows().into_iter().map(from_row).collect();
        fresh.reverse();
        for p in fresh {
            leads.push(p.leading_monomial(order).expect("nonzero").clone());
            elements.push(p);
        }
        for j in start..elements.len() {
            for i in 0..=j {
                for p in M::critical_pairs(i, &leads[i], j, &leads[j]) {
                    debug_assert!(p.degree() > d || p.inclusion);
                    pairs.entry(p.degree()).or_default().push(p);
                }
            }
        }
    }

    // Certify: everything left above the bound must reduce to zero.
    let reducer = Reducer::new(&elements, order);
    let mut truncation: Vec<Unresolved<M>> = pairs
        .into_values()
        .flatten()
        .filter(|p| !p.coprime)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|p| !reducer.reduce(&s_polynomial(&elements, p)).is_zero())
        .map(Unresolved::Pair)
        .collect();
    for (&deg, idx) in relations.range(max_deg + 1..) {
        for &i in idx {
            if !reducer.reduce(&pres.relations[i]).is_zero() {
                truncation.push(Unresolved::Relation { index: i, degree: deg });
            }
        }
    }
    GBasis {
        alphabet: pres.alphabet.clone(),
        order: order.clone(),
        elements,
        degree_bound: max_deg,
        complete: truncation.is_empty() && pres.relations_through.is_none(),
        truncation,
    }
}

/// Noncommutative completion (overlaps and inclusions).
pub fn complete_nc<C: Scalar>(pres: &NcPresentation<C>, max_deg: usize) -> GBasis<Word, C> {
    complete(pres, max_deg)
}

/// Commutative completion (Buchberger S-pairs, product criterion).
pub fn complete_comm<C: Scalar>(pres: &CommPresentation<C>, max_deg: usize) -> GBasis<CommMonomial, C> {
    complete(pres, max_deg)
}

/// One critical pair and what its S-polynomial reduces to.
#[derive(Debug, Clone)]
pub struct PairCheck<M: Monomial, C: Scalar> {
    pub pair: CriticalPair<M>,
    pub remainder: Poly<M, C>,
}

impl<M: Monomial, C: Scalar> PairCheck<M, C> {
    pub fn resolves(&self) -> bool {
        self.remainder.is_zero()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport<M: Monomial, C: Scalar> {
    /// Every critical pair of degree at most the bound.
    pub checks: Vec<PairCheck<M, C>>,
    /// Pairs above the bound, not examined.
    pub skipped: usize,
    /// Pairs of elements sharing a divisibility relation between leads.
    pub antichain: bool,
}

impl<M: Monomial, C: Scalar> VerifyReport<M, C> {
    pub fn failures(&self) -> impl Iterator<Item = &PairCheck<M, C>> {
        self.checks.iter().filter(|c| !c.resolves())
    }

    pub fn certified(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Reduces every critical pair of `candidate` up to its degree bound.
pub fn verify_gb<M: GbMonomial, C: Scalar>(candidate: &GBasis<M, C>) -> VerifyReport<M, C> {
    let reducer = candidate.reducer();
    let (inside, outside): (Vec<_>, Vec<_>) =
        candidate.critical_pairs().into_iter().partition(|p| p.degree() <= candidate.degree_bound);
    let checks = inside
        .into_par_iter()
        .map(|pair| {
            let remainder = if pair.coprime {
                Poly::zero()
            } else {
                reducer.reduce(&candidate.s_polynomial(&pair))
            };
            PairCheck { pair, remainder }
        })
        .collect();
    VerifyReport { checks, skipped: outside.len(), antichain: candidate.is_antichain() }
}
