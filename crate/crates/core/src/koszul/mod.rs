//! Quadratic duality, the numerical Koszulness test, super-Lyndon–Shirshov
//! words and the homology characters they compute.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::groebner::{complete, hilbert_series, Flavor, GBasis, GbMonomial, NcPresentation, Presentation};
use crate::linalg::{RowSpace, SparseVec};
use crate::monomial::{Monomial, Word};
use crate::order::{MonomialOrder, OrderKind};
use crate::scalar::Scalar;
use crate::sl2::{decompose, tkk_truncate, Character, IrrDecomp, TruncatedDecomp};

/// Quadratic dual of a presentation, over the starred alphabet.
#[derive(Debug, Clone)]
pub struct DualPresentation<C: Scalar> {
    pub presentation: NcPresentation<C>,
    pub source: Flavor,
    /// `dim V`.
    pub generators: usize,
    /// Dimension of the source relation space inside `V⊗V`.
    pub source_rank: usize,
}

impl<C: Scalar> DualPresentation<C> {
    pub fn alphabet(&self) -> &Alphabet {
        &self.presentation.alphabet
    }
}

/// Relation space of a quadratic presentation inside `V⊗V`. Commutative
/// relations are lifted to sorted words and joined with the commutators.
pub fn tensor_relations<M: GbMonomial, C: Scalar>(pres: &Presentation<M, C>) -> Result<RowSpace<Word, C>> {
    if !pres.is_quadratic() {
        return Err(Error::NotQuadratic(format!("{} relations, top degree {}", pres.relations.len(), pres.max_relation_degree())));
    }
    let mut space = RowSpace::new();
    for r in &pres.relations {
        let mut v: SparseVec<Word, C> = BTreeMap::new();
        for (m, c) in r.terms() {
            let mut ls = m.letters();
            if M::COMMUTATIVE {
                ls.sort_unstable();
            }
            v.insert(Word::new(&ls), c.clone());
        }
        space.insert(v);
    }
    if M::COMMUTATIVE {
        let n = pres.alphabet.len() as Letter;
        for i in 0..n {
            for j in i + 1..n {
                space.insert(BTreeMap::from([(Word::new(&[i, j]), C::one()), (Word::new(&[j, i]), -C::one())]));
            }
        }
    }
    Ok(space)
}

/// Annihilator of `r` in `V*⊗V*` under `⟨v⊗w, φ⊗ψ⟩ = φ(v)ψ(w)`.
fn annihilator<C: Scalar>(r: &RowSpace<Word, C>, n: usize) -> Vec<SparseVec<Word, C>> {
    let pivot_rows: Vec<&SparseVec<Word, C>> = r.rows().iter().collect();
    let mut out = Vec::new();
    for i in 0..n as Letter {
        for j in 0..n as Letter {
            let k = Word::new(&[i, j]);
            if r.is_pivot(&k) {
                continue;
            }
            let mut phi = BTreeMap::from([(k.clone(), C::one())]);
            for row in &pivot_rows {
                if let Some(c) = row.get(&k) {
                    let (p, _) = row.last_key_value().expect("nonzero row");
                    phi.insert(p.clone(), -c.clone());
                }
            }
            out.push(phi);
        }
    }
    out
}

/// Degree-lex order on a dual alphabet: the TKK order when the letters are
/// TKK-shaped (`e* > h* > f* > x*`), otherwise the source order's ranking.
pub fn dual_order(dual: &Alphabet, source: &MonomialOrder) -> MonomialOrder {
    if dual.is_tkk() {
        MonomialOrder::tkk_deglex(dual)
    } else {
        source.with_kind(OrderKind::DegLex)
    }
}

pub fn quadratic_dual<M: GbMonomial, C: Scalar>(pres: &Presentation<M, C>) -> Result<DualPresentation<C>> {
    let order = dual_order(&pres.alphabet.dual(M::COMMUTATIVE), &pres.order);
    quadratic_dual_with_order(pres, order)
}

/// Dual generators of commutative algebras are odd; associative duals keep
/// their parity. `weight(g*) = weight(g)`.
pub fn quadratic_dual_with_order<M: GbMonomial, C: Scalar>(pres: &Presentation<M, C>, order: MonomialOrder) -> Result<DualPresentation<C>> {
    let r = tensor_relations(pres)?;
    let n = pres.alphabet.len();
    let alphabet = pres.alphabet.dual(M::COMMUTATIVE);
    let rels = annihilator(&r, n).into_iter().map(crate::poly::Poly::from_map).collect();
    let presentation = Presentation::new(alphabet, order, rels)?;
    Ok(DualPresentation { presentation, source: Flavor::of::<M>(), generators: n, source_rank: r.rank() })
}

/// Whether dualizing twice returns the original relation space.
pub fn involution_check<M: GbMonomial, C: Scalar>(pres: &Presentation<M, C>) -> Result<bool> {
    let once = quadratic_dual(pres)?;
    let twice = quadratic_dual(&once.presentation)?;
    Ok(tensor_relations(&twice.presentation)?.same_span(&tensor_relations(pres)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct KoszulReport {
    pub max_deg: usize,
    pub algebra: Vec<i128>,
    pub dual: Vec<i128>,
    /// Coefficients of `H_A(t)·H_{A!}(-t)`.
    pub product: Vec<i128>,
}

impl KoszulReport {
    pub fn passed(&self) -> bool {
        self.product.iter().enumerate().all(|(i, &c)| c == i128::from(i == 0))
    }
}

fn series<M: crate::groebner::NormalEnumeration, C: Scalar>(gb: &GBasis<M, C>, max_deg: usize) -> Result<Vec<i128>> {
    Ok(hilbert_series(gb, max_deg)?.into_iter().map(i128::from).collect())
}

/// Checks `H_A(t)·H_{A!}(-t) ≡ 1 mod t^{max_deg+1}`.
pub fn koszul_numeric_test<M, C>(pres: &Presentation<M, C>, max_deg: usize) -> Result<KoszulReport>
where
    M: crate::groebner::NormalEnumeration,
    C: Scalar,
{
    let dual = quadratic_dual(pres)?;
    let gb = complete(pres, max_deg);
    gb.check_degree(max_deg)?;
    let dgb = complete(&dual.presentation, max_deg);
    dgb.check_degree(max_deg)?;
    let algebra = series(&gb, max_deg)?;
    let dual_series = series(&dgb, max_deg)?;
    let product = (0..=max_deg)
        .map(|d| {
            (0..=d)
                .map(|i| {
                    let sign = if (d - i) % 2 == 0 { 1 } else { -1 };
                    algebra[i].checked_mul(dual_series[d - i]).and_then(|x| x.checked_mul(sign))
                })
                .try_fold(0i128, |acc, x| x.and_then(|x| acc.checked_add(x)))
                .ok_or_else(|| Error::Resource(format!("Hilbert coefficients overflow at degree {d}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KoszulReport { max_deg, algebra, dual: dual_series, product })
}

/// A word with its parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperWord {
    pub word: Word,
    pub parity: u8,
}

impl SuperWord {
    pub fn new(word: Word, alphabet: &Alphabet) -> Self {
        let parity = word.parity(alphabet);
        SuperWord { word, parity }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.word.as_slice().iter().map(|&l| alphabet.name(l)).collect::<Vec<_>>().join("")
    }
}

fn ranks(w: &Word, order: &MonomialOrder) -> Vec<i32> {
    w.as_slice().iter().map(|&l| order.rank(l)).collect()
}

/// Strictly larger than each of its proper cyclic shifts.
pub fn is_lyndon_shirshov(w: &Word, order: &MonomialOrder) -> bool {
    let r = ranks(w, order);
    let n = r.len();
    n > 0 && (1..n).all(|i| r[i..].iter().chain(&r[..i]).cmp(r.iter()) == std::cmp::Ordering::Less)
}

/// Lyndon–Shirshov, or the square of an odd Lyndon–Shirshov word.
pub fn is_super_lyndon(w: &Word, alphabet: &Alphabet, order: &MonomialOrder) -> bool {
    if is_lyndon_shirshov(w, order) {
        return true;
    }
    let n = w.len();
    if n == 0 || n % 2 == 1 {
        return false;
    }
    let half = w.slice(0, n / 2);
    half == w.slice(n / 2, n) && half.parity(alphabet) == 1 && is_lyndon_shirshov(&half, order)
}

/// All super-Lyndon–Shirshov words of length at most `max_len`, by length
/// and then from largest to smallest.
pub fn super_lyndon_words(alphabet: &Alphabet, order: &MonomialOrder, max_len: usize) -> Vec<SuperWord> {
    let mut letters: Vec<Letter> = alphabet.letters().collect();
    letters.sort_by_key(|&l| std::cmp::Reverse(order.rank(l)));
    let k = letters.len();
    // Duval's generation, position 0 being the largest letter.
    let mut idx: Vec<Vec<usize>> = Vec::new();
    if k > 0 && max_len > 0 {
        let mut w = vec![0usize];
        loop {
            idx.push(w.clone());
            let m = w.len();
            while w.len() < max_len {
                let c = w[w.len() - m];
                w.push(c);
            }
            while w.last() == Some(&(k - 1)) {
                w.pop();
            }
            match w.last_mut() {
                Some(c) => *c += 1,
                None => break,
            }
        }
    }
    let to_word = |v: &[usize]| Word(v.iter().map(|&i| letters[i]).collect());
    let mut out: Vec<(Vec<usize>, SuperWord)> = Vec::new();
    for v in &idx {
        let sw = SuperWord::new(to_word(v), alphabet);
        if sw.parity == 1 && 2 * v.len() <= max_len {
            let sq: Vec<usize> = v.iter().chain(v).copied().collect();
            out.push((sq.clone(), SuperWord::new(to_word(&sq), alphabet)));
        }
        out.push((v.clone(), sw));
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    out.into_iter().map(|(_, w)| w).collect()
}

/// Homology of a Koszul commutative algebra read off from the normal
/// super-Lyndon–Shirshov words of its dual.
#[derive(Debug, Clone)]
pub struct SuperHomology<C: Scalar> {
    pub dual: DualPresentation<C>,
    pub dual_gb: GBasis<Word, C>,
    pub max_k: usize,
    /// Normal super-LS words, by length `1..=max_k`.
    pub words: Vec<Vec<SuperWord>>,
}

impl<C: Scalar> SuperHomology<C> {
    pub fn words(&self, k: usize) -> &[SuperWord] {
        &self.words[k - 1]
    }

    pub fn character(&self, k: usize) -> Character {
        let al = self.dual.alphabet();
        let mut ch = Character::new();
        for w in self.words(k) {
            ch.add(w.word.weight(al), 1);
        }
        ch
    }

    pub fn decomposition(&self, k: usize) -> Result<IrrDecomp> {
        decompose(&self.character(k))
    }

    pub fn truncated(&self, k: usize) -> Result<TruncatedDecomp> {
        Ok(tkk_truncate(&self.decomposition(k)?))
    }

    /// Per degree, the dual Hilbert function and the one predicted by PBW
    /// from the normal super-LS words (even words polynomial, odd words
    /// exterior).
    pub fn pbw_check(&self) -> Result<Vec<(i128, i128)>> {
        let n = self.max_k;
        let actual = series(&self.dual_gb, n)?;
        let mut pred = vec![0i128; n + 1];
        pred[0] = 1;
        for ws in &self.words {
            for w in ws {
                let l = w.len();
                if w.parity == 1 {
                    for d in (l..=n).rev() {
                        pred[d] += pred[d - l];
                    }
                } else {
                    for d in l..=n {
                        pred[d] += pred[d - l];
                    }
                }
            }
        }
        Ok(actual.into_iter().zip(pred).collect())
    }
}

/// `H_k` for `k = 1..=max_k` of a commutative quadratic algebra, via the
/// Gröbner basis of its dual.
pub fn lie_super_homology<M: GbMonomial, C: Scalar>(pres: &Presentation<M, C>, max_k: usize) -> Result<SuperHomology<C>> {
    if !M::COMMUTATIVE {
        return Err(Error::Unsupported("homology via super-Lyndon–Shirshov words needs a commutative algebra".into()));
    }
    let dual = quadratic_dual(pres)?;
    let dual_gb = complete(&dual.presentation, max_k);
    dual_gb.check_degree(max_k)?;
    let leads = dual_gb.leading_monomials();
    let al = dual.alphabet();
    let mut words = vec![Vec::new(); max_k];
    for w in super_lyndon_words(al, &dual.presentation.order, max_k) {
        if !leads.iter().any(|l| w.word.contains(l)) {
            words[w.len() - 1].push(w);
        }
    }
    Ok(SuperHomology { dual, dual_gb, max_k, words })
}

#[cfg(test)]
mod tests;
