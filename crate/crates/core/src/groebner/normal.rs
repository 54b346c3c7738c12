//! Normal monomials and Hilbert characters of a Gröbner basis.
//!
//! Words avoiding a finite set of factors are walked on the Aho–Corasick
//! automaton of the leading words, so counting needs no enumeration.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::monomial::{all_comm_monomials, CommMonomial, Monomial, Word};
use crate::poly::Graded;
use crate::scalar::Scalar;
use crate::sl2::Character;

use super::{GBasis, GbMonomial};

pub trait NormalEnumeration: GbMonomial {
    /// Monomials of degree `d` in `n` letters divisible by no lead.
    fn enumerate_normal(leads: &[Self], n: usize, d: usize) -> Vec<Self>;
    /// Weight multiplicities of normal monomials in degrees `0..=max_deg`.
    fn count_normal(leads: &[Self], alphabet: &Alphabet, max_deg: usize) -> Vec<Character>;
}

/// Trie of the forbidden words with failure links folded into a full
/// transition table; dead states contain a forbidden factor.
struct Automaton {
    n: usize,
    next: Vec<Vec<u32>>,
    dead: Vec<bool>,
}

impl Automaton {
    fn new(n: usize, words: &[Word]) -> Self {
        const NONE: u32 = u32::MAX;
        let mut next = vec![vec![NONE; n]];
        let mut dead = vec![false];
        for w in words {
            let mut s = 0usize;
            for &l in w.as_slice() {
                let l = l as usize;
                if next[s][l] == NONE {
                    next[s][l] = next.len() as u32;
                    next.push(vec![NONE; n]);
                    dead.push(false);
                }
                s = next[s][l] as usize;
            }
            dead[s] = true;
        }
        let mut fail = vec![0u32; next.len()];
        let mut queue = VecDeque::new();
        for l in 0..n {
            match next[0][l] {
                NONE => next[0][l] = 0,
                t => queue.push_back(t as usize),
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s] as usize;
            if dead[f] {
                dead[s] = true;
            }
            for l in 0..n {
                match next[s][l] {
                    NONE => next[s][l] = next[f][l],
                    t => {
                        fail[t as usize] = if s == 0 { 0 } else { next[f][l] };
                        queue.push_back(t as usize);
                    }
                }
            }
        }
        Automaton { n, next, dead }
    }

    fn step(&self, s: usize, l: usize) -> usize {
        self.next[s][l] as usize
    }
}

impl NormalEnumeration for Word {
    fn enumerate_normal(leads: &[Word], n: usize, d: usize) -> Vec<Word> {
        let auto = Automaton::new(n, leads);
        let mut out = Vec::new();
        let mut word = Word::one();
        fn walk(auto: &Automaton, s: usize, d: usize, word: &mut Word, out: &mut Vec<Word>) {
            if word.len() == d {
                out.push(word.clone());
                return;
            }
            for l in 0..auto.n {
                let t = auto.step(s, l);
                if !auto.dead[t] {
                    word.push(l as Letter);
                    walk(auto, t, d, word, out);
                    word.0.pop();
                }
            }
        }
        if !auto.dead[0] {
            walk(&auto, 0, d, &mut word, &mut out);
        }
        out
    }

    fn count_normal(leads: &[Word], alphabet: &Alphabet, max_deg: usize) -> Vec<Character> {
        let n = alphabet.len();
        let auto = Automaton::new(n, leads);
        let mut out = Vec::with_capacity(max_deg + 1);
        let mut layer: HashMap<(usize, i64), u64> = HashMap::new();
        if !auto.dead[0] {
            layer.insert((0, 0), 1);
        }
        for d in 0..=max_deg {
            let mut ch: BTreeMap<i64, u64> = BTreeMap::new();
            for (&(_, w), &c) in &layer {
                *ch.entry(w).or_default() += c;
            }
            out.push(Character::from_pairs(ch));
            if d == max_deg {
                break;
            }
            let mut nxt: HashMap<(usize, i64), u64> = HashMap::new();
            for (&(s, w), &c) in &layer {
                for l in 0..n {
                    let t = auto.step(s, l);
                    if !auto.dead[t] {
                        *nxt.entry((t, w + alphabet.weight(l as Letter))).or_default() += c;
                    }
                }
            }
            layer = nxt;
        }
        out
    }
}

impl NormalEnumeration for CommMonomial {
    fn enumerate_normal(leads: &[CommMonomial], n: usize, d: usize) -> Vec<CommMonomial> {
        let mut all = all_comm_monomials(n, d);
        all.retain(|m| !leads.iter().any(|l| l.divides(m)));
        all
    }

    fn count_normal(leads: &[CommMonomial], alphabet: &Alphabet, max_deg: usize) -> Vec<Character> {
        (0..=max_deg)
            .map(|d| {
                let mut ch: BTreeMap<i64, u64> = BTreeMap::new();
                for m in Self::enumerate_normal(leads, alphabet.len(), d) {
                    *ch.entry(m.weight(alphabet)).or_default() += 1;
                }
                Character::from_pairs(ch)
            })
            .collect()
    }
}

/// Degree-`d` monomials not divisible by any leading monomial, in
/// increasing monomial order.
pub fn normal_monomials<M: NormalEnumeration, C: Scalar>(gb: &GBasis<M, C>, d: usize) -> Result<Vec<M>> {
    gb.check_degree(d)?;
    let mut out = M::enumerate_normal(&gb.leading_monomials(), gb.alphabet.len(), d);
    out.sort_by_cached_key(|m| m.key(&gb.order));
    Ok(out)
}

/// Weight characters of the quotient in degrees `0..=max_deg`.
pub fn hilbert_character<M: NormalEnumeration, C: Scalar>(gb: &GBasis<M, C>, max_deg: usize) -> Result<Vec<Character>> {
    gb.check_degree(max_deg)?;
    for p in &gb.elements {
        if matches!(p.grading(&gb.alphabet).weight, Graded::Mixed) {
            return Err(Error::Inhomogeneous(p.render(&gb.alphabet)));
        }
    }
    Ok(M::count_normal(&gb.leading_monomials(), &gb.alphabet, max_deg))
}

/// Dimensions of the quotient in degrees `0..=max_deg`.
pub fn hilbert_series<M: NormalEnumeration, C: Scalar>(gb: &GBasis<M, C>, max_deg: usize) -> Result<Vec<u64>> {
    Ok(hilbert_character(gb, max_deg)?.iter().map(|c| c.dim()).collect())
}
