//! Admissible monomial orders.
//!
//! Every order is degree-first. Comparisons go through an [`OrderKey`]: a
//! short integer vector whose lexicographic order is the monomial order, so
//! that sorting and leading-term extraction are plain `Ord` operations.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Letter, Sl2Basis, TkkRole};
use crate::error::{Error, Result};
use crate::monomial::{CommMonomial, Monomial, Word};

pub type OrderKey = SmallVec<[i32; 16]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    #[serde(rename = "deglex")]
    DegLex,
    #[serde(rename = "degrevlex")]
    DegRevLex,
    /// Degree first; then, at the smallest generator whose exponents
    /// differ, the monomial with the smaller exponent is the larger one.
    /// On commutative monomials this coincides with `degrevlex`.
    #[serde(rename = "paperInverseLex")]
    InverseLex,
}

impl OrderKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::InverseLex => "paperInverseLex",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// `rank[letter]`: position of the letter in the generator order, 0 = smallest.
    rank: Vec<i32>,
    /// Letters listed from smallest to largest.
    ascending: Vec<Letter>,
}

impl MonomialOrder {
    /// `ascending` lists every letter of the alphabet exactly once, smallest first.
    pub fn new(kind: OrderKind, ascending: Vec<Letter>) -> Result<Self> {
        let n = ascending.len();
        let mut rank = vec![-1; n];
        for (pos, &l) in ascending.iter().enumerate() {
            let slot = rank
                .get_mut(l as usize)
                .ok_or_else(|| Error::Schema(format!("generator order mentions letter {l} outside the alphabet")))?;
            if *slot >= 0 {
                return Err(Error::Schema(format!("generator order repeats letter {l}")));
            }
            *slot = pos as i32;
        }
        Ok(MonomialOrder { kind, rank, ascending })
    }

    /// Generator order by increasing sort key.
    pub fn by_sort_key(kind: OrderKind, alphabet: &Alphabet) -> Self {
        let mut letters: Vec<Letter> = alphabet.letters().collect();
        letters.sort_by_key(|&l| alphabet.get(l).sort_key);
        MonomialOrder::new(kind, letters).expect("permutation of the alphabet")
    }

    /// `e_b < … < e_1 < h_b < … < h_1 < f_b < … < f_1`, with singlets below
    /// everything else.
    pub fn tkk_inverse_lex(alphabet: &Alphabet) -> Self {
        let b = alphabet.triple_count();
        let mut asc: Vec<Letter> = alphabet
            .letters()
            .filter(|&l| matches!(alphabet.get(l).role, Some(TkkRole::Singlet(_))))
            .collect();
        for u in Sl2Basis::ALL {
            for j in (1..=b).rev() {
                asc.extend(alphabet.triple(u, j));
            }
        }
        MonomialOrder::new(OrderKind::InverseLex, asc).expect("tkk alphabet")
    }

    /// Every `x` below every `f` below every `h` below every `e`; within a
    /// family, higher index is smaller.
    pub fn tkk_deglex(alphabet: &Alphabet) -> Self {
        let b = alphabet.triple_count();
        let a = alphabet.letters().filter(|&l| matches!(alphabet.get(l).role, Some(TkkRole::Singlet(_)))).count();
        let mut asc = Vec::new();
        for i in (1..=a).rev() {
            asc.extend(alphabet.singlet(i));
        }
        for u in [Sl2Basis::F, Sl2Basis::H, Sl2Basis::E] {
            for j in (1..=b).rev() {
                asc.extend(alphabet.triple(u, j));
            }
        }
        MonomialOrder::new(OrderKind::DegLex, asc).expect("tkk alphabet")
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, l: Letter) -> i32 {
        self.rank[l as usize]
    }

    pub fn ascending(&self) -> &[Letter] {
        &self.ascending
    }

    pub fn with_kind(&self, kind: OrderKind) -> Self {
        MonomialOrder { kind, ..self.clone() }
    }

    /// Same kind, generator order reversed.
    pub fn reversed(&self) -> Self {
        let asc: Vec<Letter> = self.ascending.iter().rev().copied().collect();
        MonomialOrder::new(self.kind, asc).expect("permutation")
    }

    pub fn word_key(&self, w: &Word) -> OrderKey {
        let mut k = OrderKey::new();
        k.push(w.len() as i32);
        match self.kind {
            OrderKind::DegLex => k.extend(w.as_slice().iter().map(|&l| self.rank(l))),
            OrderKind::DegRevLex => k.extend(w.as_slice().iter().rev().map(|&l| self.rank(l))),
            OrderKind::InverseLex => {
                let mut counts = vec![0i32; self.rank.len()];
                for &l in w.as_slice() {
                    counts[self.rank(l) as usize] += 1;
                }
                k.extend(counts.iter().map(|c| -c));
                k.extend(w.as_slice().iter().map(|&l| self.rank(l)));
            }
        }
        k
    }

    pub fn comm_key(&self, m: &CommMonomial) -> OrderKey {
        let mut k = OrderKey::new();
        k.push(m.degree() as i32);
        match self.kind {
            OrderKind::DegLex => k.extend(self.ascending.iter().rev().map(|&l| m.exponent(l) as i32)),
            OrderKind::DegRevLex | OrderKind::InverseLex => {
                k.extend(self.ascending.iter().map(|&l| -(m.exponent(l) as i32)))
            }
        }
        k
    }

    pub fn compare<M: Monomial>(&self, a: &M, b: &M) -> Ordering {
        a.key(self).cmp(&b.key(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(alpha: &Alphabet, names: &[&str]) -> CommMonomial {
        let ls: Vec<Letter> = names.iter().map(|n| alpha.letter(n).unwrap()).collect();
        CommMonomial::from_letters(&ls)
    }

    fn word(alpha: &Alphabet, names: &[&str]) -> Word {
        Word::new(&names.iter().map(|n| alpha.letter(n).unwrap()).collect::<Vec<_>>())
    }

    #[test]
    fn inverse_lex_prefers_hh_over_ef() {
        let a = Alphabet::tkk(0, 1);
        let ord = MonomialOrder::tkk_inverse_lex(&a);
        assert_eq!(ord.compare(&mono(&a, &["h1", "h1"]), &mono(&a, &["e1", "f1"])), Ordering::Greater);
    }

    #[test]
    fn inverse_lex_underlines_match_relation_list() {
        let a = Alphabet::tkk(0, 3);
        let ord = MonomialOrder::tkk_inverse_lex(&a);
        // h_i e_j + h_j e_i with i < j: h_j e_i leads
        assert_eq!(ord.compare(&mono(&a, &["h3", "e1"]), &mono(&a, &["h1", "e3"])), Ordering::Greater);
        // h_i f_j + h_j f_i with i < j: h_i f_j leads
        assert_eq!(ord.compare(&mono(&a, &["h1", "f3"]), &mono(&a, &["h3", "f1"])), Ordering::Greater);
        // f_i e_j + e_i f_j - h_i h_j: h_i h_j leads
        let hh = mono(&a, &["h1", "h2"]);
        assert_eq!(ord.compare(&hh, &mono(&a, &["f1", "e2"])), Ordering::Greater);
        assert_eq!(ord.compare(&hh, &mono(&a, &["e1", "f2"])), Ordering::Greater);
    }

    #[test]
    fn deglex_puts_e_above_h_above_f() {
        let a = Alphabet::tkk(1, 2);
        let ord = MonomialOrder::tkk_deglex(&a);
        assert_eq!(ord.compare(&word(&a, &["e1", "f2"]), &word(&a, &["h1", "h2"])), Ordering::Greater);
        assert_eq!(ord.compare(&word(&a, &["f1", "e1"]), &word(&a, &["x1", "e1"])), Ordering::Greater);
        let w = word(&a, &["h1", "e2"]);
        assert_eq!(ord.compare(&w, &w), Ordering::Equal);
    }

    fn any_order() -> impl Strategy<Value = MonomialOrder> {
        (0usize..3, Just((0..4u16).collect::<Vec<_>>()).prop_shuffle()).prop_map(|(k, perm)| {
            let kind = [OrderKind::DegLex, OrderKind::DegRevLex, OrderKind::InverseLex][k];
            MonomialOrder::new(kind, perm).unwrap()
        })
    }

    fn any_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u16..4, 0..=6).prop_map(|v| Word::new(&v))
    }

    proptest! {
        #[test]
        fn word_orders_are_admissible(ord in any_order(), m1 in any_word(), m2 in any_word(), u in any_word(), v in any_word()) {
            let c = ord.compare(&m1, &m2);
            let c2 = ord.compare(&u.mul(&m1).mul(&v), &u.mul(&m2).mul(&v));
            prop_assert_eq!(c, c2);
            if !m1.is_empty() {
                prop_assert_eq!(ord.compare(&Word::one(), &m1), Ordering::Less);
            }
        }

        #[test]
        fn comm_orders_are_admissible(ord in any_order(), m1 in any_word(), m2 in any_word(), u in any_word()) {
            let (m1, m2, u) = (
                CommMonomial::from_letters(m1.as_slice()),
                CommMonomial::from_letters(m2.as_slice()),
                CommMonomial::from_letters(u.as_slice()),
            );
            prop_assert_eq!(ord.compare(&m1, &m2), ord.compare(&u.mul(&m1), &u.mul(&m2)));
            prop_assert_eq!(ord.compare(&m1, &m2) == Ordering::Equal, m1 == m2);
        }
    }
}
