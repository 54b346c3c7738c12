//! Presentations of the free commutative and associative algebras in the
//! TKK category, their closed-form models, and the Lie closure of the
//! generators inside the associative model.

mod ass;
mod closure;
mod com;

use std::collections::BTreeMap;
use std::fmt::Debug;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alphabet::{Alphabet, Letter, Sl2Basis};
use crate::error::{Error, Result};
use crate::groebner::{complete, hilbert_character, normal_monomials, GBasis, NormalEnumeration, Presentation};
use crate::linalg::{axpy, RowSpace, SparseVec};
use crate::monomial::{all_words, CommMonomial, Monomial, Word};
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::sl2::Character;

pub use ass::{AssKey, AssModel, Mat};
pub use closure::{lie_closure, theorem5_check, DegreeComparison, LieClosure, Theorem5Report};
pub use com::{BPart, ComKey, ComModel};

use Sl2Basis::{E, F, H};

/// The five relation shapes spanning the `sl2`-module generated by
/// `e_i 𝐱 e_j`: `(coefficient, left, right)` terms.
const FAMILIES: [&[(i64, Sl2Basis, Sl2Basis)]; 5] = [
    &[(1, E, E)],
    &[(1, F, F)],
    &[(1, H, E), (1, E, H)],
    &[(1, H, F), (1, F, H)],
    &[(1, F, E), (1, E, F), (-1, H, H)],
];

/// Relations of `Com^TKK(U)` for `U = L(0)⊗𝕜^a ⊕ L(2)⊗𝕜^b`, ordered by
/// the inverse lexicographic order.
pub fn present_com<C: Scalar>(a: usize, b: usize) -> Presentation<CommMonomial, C> {
    let alphabet = Alphabet::tkk(a, b);
    let order = MonomialOrder::tkk_inverse_lex(&alphabet);
    let mut rels = Vec::new();
    for i in 1..=b {
        for j in i..=b {
            for fam in FAMILIES {
                rels.push(Poly::from_terms(fam.iter().map(|&(c, u, v)| {
                    let l = [alphabet.triple(u, i).expect("tkk"), alphabet.triple(v, j).expect("tkk")];
                    (CommMonomial::from_letters(&l), C::from_int(c))
                })));
            }
        }
    }
    Presentation::new(alphabet, order, rels).expect("homogeneous relations")
}

/// Relations of `Ass^TKK(U)` with singlet layers `𝐱` of length at most
/// `max_deg - 2`, ordered by degree-lex with `e > h > f > x`.
pub fn present_ass<C: Scalar>(a: usize, b: usize, max_deg: usize) -> Presentation<Word, C> {
    let alphabet = Alphabet::tkk(a, b);
    let order = MonomialOrder::tkk_deglex(&alphabet);
    let singlets: Vec<Letter> = (1..=a).map(|i| alphabet.singlet(i).expect("tkk")).collect();
    let mut layers = vec![Word::one()];
    if a > 0 {
        for s in 1..=max_deg.saturating_sub(2) {
            layers.extend(all_words(a, s).into_iter().map(|w| Word(w.0.iter().map(|&k| singlets[k as usize]).collect())));
        }
    }
    let mut rels = Vec::new();
    for x in &layers {
        for i in 1..=b {
            for j in 1..=b {
                for fam in FAMILIES {
                    rels.push(Poly::from_terms(fam.iter().map(|&(c, u, v)| {
                        let l = Word::new(&[alphabet.triple(u, i).expect("tkk")]);
                        let r = Word::new(&[alphabet.triple(v, j).expect("tkk")]);
                        (Word::sandwich(&l, x, &r), C::from_int(c))
                    })));
                }
            }
        }
    }
    let pres = Presentation::new(alphabet, order, rels).expect("homogeneous relations");
    if a > 0 {
        pres.listed_through(max_deg)
    } else {
        pres
    }
}

/// A closed-form algebra generated by the letters of a presentation.
pub trait AlgebraModel<C: Scalar>: Sync {
    type Mono: NormalEnumeration;
    type Key: Ord + Clone + Debug + Send + Sync;

    fn alphabet(&self) -> &Alphabet;
    /// The defining presentation, listing relations through `max_deg`.
    fn presentation(&self, max_deg: usize) -> Presentation<Self::Mono, C>;
    fn generator(&self, l: Letter) -> SparseVec<Self::Key, C>;
    fn mul(&self, x: &SparseVec<Self::Key, C>, y: &SparseVec<Self::Key, C>) -> Result<SparseVec<Self::Key, C>>;
    fn basis(&self, d: usize) -> Result<Vec<Self::Key>>;
    fn weight(&self, k: &Self::Key) -> i64;
    fn unit(&self) -> SparseVec<Self::Key, C>;

    fn character(&self, d: usize) -> Result<Character> {
        let mut ch: BTreeMap<i64, u64> = BTreeMap::new();
        for k in self.basis(d)? {
            *ch.entry(self.weight(&k)).or_default() += 1;
        }
        Ok(Character::from_pairs(ch))
    }

    /// Image of a monomial: the product of its generators, left to right.
    fn image_monomial(&self, m: &Self::Mono) -> Result<SparseVec<Self::Key, C>> {
        let mut acc = self.unit();
        for l in m.letters() {
            acc = self.mul(&acc, &self.generator(l))?;
        }
        Ok(acc)
    }

    fn image(&self, p: &Poly<Self::Mono, C>) -> Result<SparseVec<Self::Key, C>> {
        let mut out = SparseVec::new();
        for (m, c) in p.terms() {
            axpy(&mut out, c, &self.image_monomial(m)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub model: Character,
    pub presentation: Character,
    /// Rank of the images of the normal monomials.
    pub image_rank: usize,
    pub normal: usize,
}

impl DegreeCheck {
    pub fn passed(&self) -> bool {
        self.model == self.presentation && self.image_rank == self.normal
    }
}

#[derive(Debug, Clone)]
pub struct ModelReport<M> {
    pub gb_complete_through: usize,
    pub degrees: Vec<DegreeCheck>,
    /// Indices of relations not sent to zero.
    pub relation_failures: Vec<usize>,
    pub products_checked: usize,
    pub product_failures: Vec<(M, M)>,
}

impl<M> ModelReport<M> {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::passed) && self.relation_failures.is_empty() && self.product_failures.is_empty()
    }
}

/// Compares a model with the quotient by its presentation through
/// `max_deg`: relations vanish, characters agree, normal monomials map to a
/// basis, and `samples` random products of normal monomials agree with
/// their normal forms.
pub fn model_vs_presentation<C: Scalar, A: AlgebraModel<C>>(
    model: &A,
    max_deg: usize,
    samples: usize,
    seed: u64,
) -> Result<ModelReport<A::Mono>> {
    let pres = model.presentation(max_deg);
    let gb: GBasis<A::Mono, C> = complete(&pres, max_deg);
    gb.check_degree(max_deg)?;
    let relation_failures: Vec<usize> = pres
        .relations
        .par_iter()
        .enumerate()
        .filter(|(_, r)| r.max_degree().is_some_and(|d| d <= max_deg))
        .map(|(i, r)| model.image(r).map(|v| (i, v.is_empty())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(i, _)| i)
        .collect();
    let chars = hilbert_character(&gb, max_deg)?;
    let mut degrees = Vec::new();
    let mut normals = Vec::new();
    for d in 0..=max_deg {
        let normal = normal_monomials(&gb, d)?;
        let images = normal.par_iter().map(|m| model.image_monomial(m)).collect::<Result<Vec<_>>>()?;
        degrees.push(DegreeCheck {
            degree: d,
            model: model.character(d)?,
            presentation: chars[d].clone(),
            image_rank: RowSpace::from_vectors(images).rank(),
            normal: normal.len(),
        });
        normals.push(normal);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    let splits: Vec<(usize, usize)> =
        (1..=max_deg).flat_map(|d| (1..d).map(move |i| (i, d - i))).filter(|&(i, j)| !normals[i].is_empty() && !normals[j].is_empty()).collect();
    if !splits.is_empty() {
        for _ in 0..samples {
            let &(i, j) = splits.choose(&mut rng).expect("nonempty");
            let m1 = normals[i].choose(&mut rng).expect("nonempty").clone();
            let m2 = normals[j].choose(&mut rng).expect("nonempty").clone();
            pairs.push((m1, m2));
        }
    }
    let reducer = gb.reducer();
    let checked = pairs
        .into_par_iter()
        .map(|(m1, m2)| {
            let nf = reducer.reduce(&Poly::monomial(m1.mul(&m2), C::one()));
            let lhs = model.image(&nf)?;
            let rhs = model.mul(&model.image_monomial(&m1)?, &model.image_monomial(&m2)?)?;
            Ok(((m1, m2), lhs == rhs))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModelReport {
        gb_complete_through: gb.degree_bound,
        degrees,
        relation_failures,
        products_checked: checked.len(),
        product_failures: checked.into_iter().filter(|(_, ok)| !ok).map(|(p, _)| p).collect(),
    })
}

/// Basis triples `(x, y, z)` with `(xy)z ≠ x(yz)`, over all degrees whose
/// sum is at most `max_deg`.
pub fn associativity_violations<C: Scalar, A: AlgebraModel<C>>(model: &A, max_deg: usize) -> Result<Vec<(A::Key, A::Key, A::Key)>> {
    let basis: Vec<(usize, A::Key)> =
        (0..=max_deg).map(|d| model.basis(d).map(|b| b.into_iter().map(move |k| (d, k)))).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    let unit = |k: &A::Key| BTreeMap::from([(k.clone(), C::one())]);
    let n = basis.len();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| basis[i].0 + basis[j].0 + basis[k].0 <= max_deg)
        .collect();
    let bad = triples
        .into_par_iter()
        .map(|(i, j, k)| {
            let (x, y, z) = (unit(&basis[i].1), unit(&basis[j].1), unit(&basis[k].1));
            let l = model.mul(&model.mul(&x, &y)?, &z)?;
            let r = model.mul(&x, &model.mul(&y, &z)?)?;
            Ok((l != r).then(|| (basis[i].1.clone(), basis[j].1.clone(), basis[k].1.clone())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(bad.into_iter().flatten().collect())
}

/// Sanity guard used by the models: a product landing above the cap.
fn capped(degree: usize, cap: usize) -> Error {
    Error::CappedDegree { degree, cap }
}

#[cfg(test)]
mod tests;
