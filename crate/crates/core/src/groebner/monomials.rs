//! Divisibility indexes and critical pairs for the two monomial flavors.

use std::collections::{BTreeSet, HashMap};

use crate::monomial::{CommMonomial, Monomial, Word};

/// Two ways of writing the same monomial `lcm` as a multiple of the
/// leading monomials of elements `i` and `j`:
/// `lcm = left_i · lead_i · right_i = left_j · lead_j · right_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CriticalPair<M> {
    pub i: usize,
    pub j: usize,
    pub lcm: M,
    pub left_i: M,
    pub right_i: M,
    pub left_j: M,
    pub right_j: M,
    /// One lead divides the other.
    pub inclusion: bool,
    /// Commutative pair with coprime leads; resolves by the product criterion.
    pub coprime: bool,
}

impl<M: Monomial> CriticalPair<M> {
    pub fn degree(&self) -> usize {
        self.lcm.degree()
    }
}

pub trait GbMonomial: Monomial {
    type Index: Send + Sync;

    fn index(leads: &[Self]) -> Self::Index;
    /// Element whose leading monomial divides `m`, with the cofactors.
    fn lookup(index: &Self::Index, m: &Self) -> Option<(usize, Self, Self)>;
    /// Critical pairs between elements `i` and `j` (`i <= j`).
    fn critical_pairs(i: usize, a: &Self, j: usize, b: &Self) -> Vec<CriticalPair<Self>>;
}

pub struct WordIndex {
    leads: HashMap<Word, usize>,
    lengths: Vec<usize>,
}

impl GbMonomial for Word {
    type Index = WordIndex;

    fn index(leads: &[Self]) -> WordIndex {
        let mut map = HashMap::new();
        let mut lengths = BTreeSet::new();
        for (i, w) in leads.iter().enumerate() {
            map.entry(w.clone()).or_insert(i);
            lengths.insert(w.len());
        }
        WordIndex { leads: map, lengths: lengths.into_iter().collect() }
    }

    fn lookup(index: &WordIndex, m: &Self) -> Option<(usize, Self, Self)> {
        let s = m.as_slice();
        for start in 0..s.len() {
            for &len in &index.lengths {
                if start + len > s.len() {
                    break;
                }
                let factor = Word::new(&s[start..start + len]);
                if let Some(&i) = index.leads.get(&factor) {
                    return Some((i, Word::new(&s[..start]), Word::new(&s[start + len..])));
                }
            }
        }
        None
    }

    fn critical_pairs(i: usize, a: &Self, j: usize, b: &Self) -> Vec<CriticalPair<Self>> {
        let mut out = Vec::new();
        let pair = |lcm: Word, li: Word, ri: Word, lj: Word, rj: Word, inclusion: bool| CriticalPair {
            i,
            j,
            lcm,
            left_i: li,
            right_i: ri,
            left_j: lj,
            right_j: rj,
            inclusion,
            coprime: false,
        };
        // a = head·q, b = q·tail: a·tail = head·b
        for k in proper_overlaps(a, b) {
            let (head, tail) = (a.slice(0, a.len() - k), b.slice(k, b.len()));
            out.push(pair(a.mul(&tail), Word::one(), tail, head, Word::one(), false));
        }
        if i != j {
            // b = head·q, a = q·tail: head·a = b·tail
            for k in proper_overlaps(b, a) {
                let (head, tail) = (b.slice(0, b.len() - k), a.slice(k, a.len()));
                out.push(pair(b.mul(&tail), head, Word::one(), Word::one(), tail, false));
            }
            if a.len() >= b.len() {
                for p in occurrences(a, b) {
                    let (l, r) = (a.slice(0, p), a.slice(p + b.len(), a.len()));
                    out.push(pair(a.clone(), Word::one(), Word::one(), l, r, true));
                }
            } else {
                for p in occurrences(b, a) {
                    let (l, r) = (b.slice(0, p), b.slice(p + a.len(), b.len()));
                    out.push(pair(b.clone(), l, r, Word::one(), Word::one(), true));
                }
            }
        }
        out
    }
}

fn occurrences(big: &Word, small: &Word) -> Vec<usize> {
    if small.len() > big.len() {
        return Vec::new();
    }
    (0..=big.len() - small.len())
        .filter(|&p| big.as_slice()[p..p + small.len()] == *small.as_slice())
        .collect()
}

/// Lengths `k` with `0 < k < min(|u|, |v|)` such that the last `k` letters
/// of `u` are the first `k` letters of `v`.
fn proper_overlaps(u: &Word, v: &Word) -> Vec<usize> {
    (1..u.len().min(v.len()))
        .filter(|&k| u.as_slice()[u.len() - k..] == v.as_slice()[..k])
        .collect()
}

pub struct CommIndex {
    leads: Vec<(CommMonomial, usize)>,
}

impl GbMonomial for CommMonomial {
    type Index = CommIndex;

    fn index(leads: &[Self]) -> CommIndex {
        CommIndex { leads: leads.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect() }
    }

    fn lookup(index: &CommIndex, m: &Self) -> Option<(usize, Self, Self)> {
        index
            .leads
            .iter()
            .find(|(l, _)| l.divides(m))
            .map(|(l, i)| (*i, m.quotient(l), CommMonomial::one()))
    }

    fn critical_pairs(i: usize, a: &Self, j: usize, b: &Self) -> Vec<CriticalPair<Self>> {
        if i == j {
            return Vec::new();
        }
        let lcm = a.lcm(b);
        vec![CriticalPair {
            i,
            j,
            left_i: lcm.quotient(a),
            right_i: CommMonomial::one(),
            left_j: lcm.quotient(b),
            right_j: CommMonomial::one(),
            inclusion: a.divides(b) || b.divides(a),
            coprime: a.is_coprime(b),
            lcm,
        }]
    }
}
