//! Words of the free monoid and commutative monomials.

use std::fmt::Debug;
use std::hash::Hash;

use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Letter};
use crate::order::{MonomialOrder, OrderKey};

/// Shared interface of [`Word`] and [`CommMonomial`].
pub trait Monomial: Clone + Eq + Hash + Ord + Debug + Send + Sync + 'static {
    const COMMUTATIVE: bool;

    fn one() -> Self;
    fn from_letters(letters: &[Letter]) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn degree(&self) -> usize;
    /// Letters with multiplicity, in word order (sorted for commutative monomials).
    fn letters(&self) -> Vec<Letter>;
    /// Some factorization `self = left * by * right`, if `by` divides `self`.
    /// For commutative monomials `right` is always the unit.
    fn divide(&self, by: &Self) -> Option<(Self, Self)>;
    fn key(&self, order: &MonomialOrder) -> OrderKey;

    fn sandwich(left: &Self, mid: &Self, right: &Self) -> Self {
        left.mul(mid).mul(right)
    }

    fn is_one(&self) -> bool {
        self.degree() == 0
    }

    fn weight(&self, alphabet: &Alphabet) -> i64 {
        self.letters().iter().map(|&l| alphabet.weight(l)).sum()
    }

    fn parity(&self, alphabet: &Alphabet) -> u8 {
        (self.letters().iter().map(|&l| alphabet.parity(l) as u32).sum::<u32>() % 2) as u8
    }

    fn render(&self, alphabet: &Alphabet) -> String {
        let ls = self.letters();
        if ls.is_empty() {
            return "1".into();
        }
        ls.iter().map(|&l| alphabet.name(l)).collect::<Vec<_>>().join("·")
    }
}

/// Element of the free monoid on an alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub SmallVec<[Letter; 8]>);

impl Word {
    pub fn new(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::new(&self.0[from..to])
    }

    /// Position of the first occurrence of `factor`.
    pub fn find(&self, factor: &Word) -> Option<usize> {
        let n = factor.len();
        if n == 0 {
            return Some(0);
        }
        if n > self.len() {
            return None;
        }
        self.0.windows(n).position(|w| w == factor.as_slice())
    }

    pub fn contains(&self, factor: &Word) -> bool {
        self.find(factor).is_some()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.0.as_slice())
    }
}

impl Monomial for Word {
    const COMMUTATIVE: bool = false;

    fn one() -> Self {
        Word::default()
    }

    fn from_letters(letters: &[Letter]) -> Self {
        Word::new(letters)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut w = self.0.clone();
        w.extend_from_slice(&rhs.0);
        Word(w)
    }

    fn degree(&self) -> usize {
        self.0.len()
    }

    fn letters(&self) -> Vec<Letter> {
        self.0.to_vec()
    }

    fn divide(&self, by: &Self) -> Option<(Self, Self)> {
        let pos = self.find(by)?;
        Some((self.slice(0, pos), self.slice(pos + by.len(), self.len())))
    }

    fn key(&self, order: &MonomialOrder) -> OrderKey {
        order.word_key(self)
    }
}

/// Commutative monomial stored as an exponent vector without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CommMonomial(pub SmallVec<[u16; 12]>);

impl CommMonomial {
    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut v: SmallVec<[u16; 12]> = SmallVec::from_slice(exps);
        while v.last() == Some(&0) {
            v.pop();
        }
        CommMonomial(v)
    }

    pub fn exponent(&self, l: Letter) -> u16 {
        self.0.get(l as usize).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let v: Vec<u16> = (0..n)
            .map(|i| self.exponent(i as Letter).max(other.exponent(i as Letter)))
            .collect();
        CommMonomial::from_exponents(&v)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self / other`, assuming divisibility.
    pub fn quotient(&self, other: &Self) -> Self {
        let v: Vec<u16> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| a - other.exponent(i as Letter))
            .collect();
        CommMonomial::from_exponents(&v)
    }
}

impl Debug for CommMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.0.as_slice())
    }
}

impl Monomial for CommMonomial {
    const COMMUTATIVE: bool = true;

    fn one() -> Self {
        CommMonomial::default()
    }

    fn from_letters(letters: &[Letter]) -> Self {
        let n = letters.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut v = vec![0u16; n];
        for &l in letters {
            v[l as usize] += 1;
        }
        CommMonomial::from_exponents(&v)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (long, short) = if self.0.len() >= rhs.0.len() { (self, rhs) } else { (rhs, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += b;
        }
        CommMonomial(v)
    }

    fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat(i as Letter).take(e as usize));
        }
        out
    }

    fn divide(&self, by: &Self) -> Option<(Self, Self)> {
        by.divides(self).then(|| (self.quotient(by), CommMonomial::one()))
    }

    fn key(&self, order: &MonomialOrder) -> OrderKey {
        order.comm_key(self)
    }

    fn render(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(alphabet.name(i as Letter).to_string()),
                _ => parts.push(format!("{}^{}", alphabet.name(i as Letter), e)),
            }
        }
        parts.join("·")
    }
}

/// All words of length `len` over `n` letters, in lexicographic index order.
pub fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for l in 0..n {
                let mut w2 = w.clone();
                w2.push(l as Letter);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// All commutative monomials of total degree `deg` in `n` variables.
pub fn all_comm_monomials(n: usize, deg: usize) -> Vec<CommMonomial> {
    fn rec(n: usize, i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<CommMonomial>) {
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(CommMonomial::from_exponents(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if deg == 0 {
            out.push(CommMonomial::one());
        }
        return out;
    }
    let mut cur = vec![0u16; n];
    rec(n, 0, deg, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_divide_finds_first_occurrence() {
        let w = Word::new(&[0, 1, 2, 1, 2]);
        let (l, r) = w.divide(&Word::new(&[1, 2])).unwrap();
        assert_eq!(l, Word::new(&[0]));
        assert_eq!(r, Word::new(&[1, 2]));
        assert!(w.divide(&Word::new(&[2, 0])).is_none());
    }

    #[test]
    fn comm_monomial_arithmetic() {
        let a = CommMonomial::from_letters(&[0, 0, 2]);
        let b = CommMonomial::from_letters(&[2, 1]);
        assert_eq!(a.mul(&b), CommMonomial::from_exponents(&[2, 1, 2]));
        assert_eq!(a.lcm(&b), CommMonomial::from_exponents(&[2, 1, 1]));
        assert!(CommMonomial::from_letters(&[0]).divides(&a));
        assert_eq!(a.divide(&CommMonomial::from_letters(&[0, 2])).unwrap().0, CommMonomial::from_letters(&[0]));
        assert_eq!(CommMonomial::from_exponents(&[1, 0, 0]), CommMonomial::from_letters(&[0]));
    }

    #[test]
    fn enumerations_have_expected_sizes() {
        assert_eq!(all_words(3, 4).len(), 81);
        assert_eq!(all_comm_monomials(4, 3).len(), 20);
        assert_eq!(all_comm_monomials(0, 0).len(), 1);
    }
}
