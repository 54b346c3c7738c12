//! Anick chains over a set of leading words, and homology characters of
//! algebras with a quadratic Gröbner basis.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::groebner::GBasis;
use crate::monomial::{Monomial, Word};
use crate::scalar::Scalar;
use crate::sl2::Character;

/// A right chain and its tail; `word` ends with `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub word: Word,
    pub tail: Word,
}

/// Chains by level; level 0 holds the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainSet {
    pub per_level: Vec<Vec<Chain>>,
}

impl ChainSet {
    pub fn level(&self, k: usize) -> &[Chain] {
        self.per_level.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_level(&self) -> usize {
        self.per_level.len().saturating_sub(1)
    }

    pub fn character(&self, k: usize, alphabet: &Alphabet) -> Character {
        let mut ch: BTreeMap<i64, u64> = BTreeMap::new();
        for c in self.level(k) {
            *ch.entry(c.word.weight(alphabet)).or_default() += 1;
        }
        Character::from_pairs(ch)
    }
}

fn check_antichain(leading: &[Word]) -> Result<()> {
    for (i, a) in leading.iter().enumerate() {
        if a.is_empty() {
            return Err(Error::NotAntichain("the empty word is a leading word".into()));
        }
        for (j, b) in leading.iter().enumerate() {
            if i != j && b.contains(a) {
                return Err(Error::NotAntichain(format!("{a:?} divides {b:?}")));
            }
        }
    }
    Ok(())
}

/// Positions where some leading word occurs in `w`.
fn occurrences(leads: &HashSet<&[Letter]>, lengths: &[usize], w: &[Letter]) -> usize {
    let mut n = 0;
    for start in 0..w.len() {
        for &len in lengths {
            if start + len <= w.len() && leads.contains(&w[start..start + len]) {
                n += 1;
            }
        }
    }
    n
}

/// Right chains on `n` letters up to level `max_k`, keeping words of length
/// at most `max_deg`.
pub fn chains(leading: &[Word], n: usize, max_k: usize, max_deg: usize) -> Result<ChainSet> {
    check_antichain(leading)?;
    let set: HashSet<&[Letter]> = leading.iter().map(|w| w.as_slice()).collect();
    let mut lengths: Vec<usize> = leading.iter().map(Word::len).collect();
    lengths.sort_unstable();
    lengths.dedup();

    let gens: Vec<Chain> = (0..n as Letter)
        .map(|l| Chain { word: Word::new(&[l]), tail: Word::new(&[l]) })
        .filter(|c| c.word.len() <= max_deg)
        .collect();
    let mut per_level = vec![gens];
    for _ in 1..=max_k {
        let prev = per_level.last().expect("level 0 exists");
        let mut next: Vec<Chain> = prev
            .par_iter()
            .flat_map_iter(|c| {
                let t1 = c.tail.as_slice();
                let mut out = Vec::new();
                for lead in leading {
                    let l = lead.as_slice();
                    // the lead starts inside the previous tail and sticks out of it
                    for m2 in 1..=t1.len().min(l.len() - 1) {
                        if t1[t1.len() - m2..] != l[..m2] {
                            continue;
                        }
                        let tail = &l[m2..];
                        if c.word.len() + tail.len() > max_deg {
                            continue;
                        }
                        let mut joined = t1.to_vec();
                        joined.extend_from_slice(tail);
                        if occurrences(&set, &lengths, &joined) == 1 {
                            let mut word = c.word.clone();
                            word.0.extend_from_slice(tail);
                            out.push(Chain { word, tail: Word::new(tail) });
                        }
                    }
                }
                out
            })
            .collect();
        next.sort();
        next.dedup();
        per_level.push(next);
    }
    Ok(ChainSet { per_level })
}

/// Chains for quadratic leading words: paths in the graph with an edge
/// `u → v` whenever `uv` is leading.
pub fn chains_by_paths(leading: &[Word], n: usize, max_k: usize) -> Result<ChainSet> {
    if leading.iter().any(|w| w.len() != 2) {
        return Err(Error::NotQuadratic("path chains need quadratic leading words".into()));
    }
    let mut succ: Vec<Vec<Letter>> = vec![Vec::new(); n];
    for w in leading {
        succ[w.as_slice()[0] as usize].push(w.as_slice()[1]);
    }
    let mut per_level: Vec<Vec<Chain>> =
        vec![(0..n as Letter).map(|l| Chain { word: Word::new(&[l]), tail: Word::new(&[l]) }).collect()];
    for _ in 1..=max_k {
        let mut next = Vec::new();
        for c in per_level.last().expect("level 0 exists") {
            let last = *c.word.as_slice().last().expect("nonempty") as usize;
            for &v in &succ[last] {
                let mut word = c.word.clone();
                word.push(v);
                next.push(Chain { word, tail: Word::new(&[v]) });
            }
        }
        next.sort();
        per_level.push(next);
    }
    Ok(ChainSet { per_level })
}

/// `H_k` for `0 <= k <= max_k`, spanned by the `(k-1)`-chains; `H_0` is
/// the trivial module.
pub fn homology_characters<C: Scalar>(gb: &GBasis<Word, C>, max_k: usize) -> Result<BTreeMap<usize, Character>> {
    if !gb.is_quadratic() {
        return Err(Error::Unsupported(
            "homology from chains needs a quadratic Gröbner basis; the general case needs the full Anick differential".into(),
        ));
    }
    gb.check_degree(max_k)?;
    let set = chains(&gb.leading_monomials(), gb.alphabet.len(), max_k.saturating_sub(1), max_k)?;
    let mut out = BTreeMap::new();
    out.insert(0, Character::from_pairs([(0, 1)]));
    for k in 1..=max_k {
        out.insert(k, set.character(k - 1, &gb.alphabet));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::groebner::{complete_nc, hilbert_series, NcPresentation};
    use crate::monomial::all_words;
    use crate::order::MonomialOrder;
    use crate::poly::{parse_monomial, Poly};
    use crate::sl2::decompose;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn words(a: &Alphabet, ws: &[&[&str]]) -> Vec<Word> {
        ws.iter().map(|w| parse_monomial(a, w).unwrap()).collect()
    }

    fn render(a: &Alphabet, cs: &[Chain]) -> Vec<String> {
        cs.iter().map(|c| c.word.letters().iter().map(|&l| a.name(l).to_string()).collect::<String>()).collect()
    }

    #[test]
    fn single_triple_chains() {
        let a = Alphabet::tkk(0, 1);
        let leads = words(&a, &[&["e1", "e1"], &["f1", "f1"], &["e1", "h1"], &["h1", "f1"], &["e1", "f1"]]);
        let set = chains(&leads, 3, 3, 10).unwrap();
        assert_eq!(set.level(1).len(), 5);
        let mut two = render(&a, set.level(2));
        two.sort();
        let mut want: Vec<String> =
            ["e1e1e1", "e1e1h1", "e1e1f1", "e1h1f1", "e1f1f1", "h1f1f1", "f1f1f1"].iter().map(|s| s.to_string()).collect();
        want.sort();
        assert_eq!(two, want);
        assert_eq!(set, chains_by_paths(&leads, 3, 3).unwrap());
        for k in 0..=3 {
            assert_eq!(decompose(&set.character(k, &a)).unwrap().to_string(), format!("L({})", 2 * k + 2));
        }
    }

    #[test]
    fn no_leads_leaves_generators() {
        let set = chains(&[], 4, 3, 10).unwrap();
        assert_eq!(set.level(0).len(), 4);
        assert!(set.level(1).is_empty() && set.level(3).is_empty());
    }

    #[test]
    fn rejects_non_antichains() {
        let a = Alphabet::tkk(0, 1);
        let leads = words(&a, &[&["e1", "e1"], &["e1", "e1", "f1"]]);
        assert!(matches!(chains(&leads, 3, 2, 5), Err(Error::NotAntichain(_))));
    }

    #[test]
    fn cubic_leads_give_longer_tails() {
        // x^3: chains x^3, x^4, x^6, x^7, ...
        let set = chains(&[Word::new(&[0, 0, 0])], 1, 4, 20).unwrap();
        let lens: Vec<usize> = (1..=4).map(|k| set.level(k)[0].word.len()).collect();
        assert_eq!(lens, vec![3, 4, 6, 7]);
    }

    fn random_quadratic_leads(n: usize, mask: u64) -> Vec<Word> {
        all_words(n, 2).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, w)| w).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn paths_agree_with_general_definition(n in 1usize..=8, mask in any::<u64>(), k in 0usize..=5) {
            let leads = random_quadratic_leads(n, mask);
            prop_assert_eq!(chains(&leads, n, k, k + 1).unwrap(), chains_by_paths(&leads, n, k).unwrap());
        }
    }

    #[test]
    fn paths_agree_on_nine_letters() {
        let a = Alphabet::tkk(0, 3);
        let mut leads = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                for (u, v) in [("e", "e"), ("f", "f"), ("e", "h"), ("h", "f"), ("e", "f")] {
                    leads.push(parse_monomial::<Word>(&a, &[format!("{u}{i}"), format!("{v}{j}")]).unwrap());
                }
            }
        }
        assert_eq!(chains(&leads, 9, 5, 6).unwrap(), chains_by_paths(&leads, 9, 5).unwrap());
    }

    #[test]
    fn chain_counts_invert_the_hilbert_series() {
        // alternating chain counts are the inverse series of a quadratic
        // monomial algebra: sum_k (-1)^k #C_{k-1} t^k times H(t) is 1
        let a = Alphabet::tkk(0, 2);
        let order = MonomialOrder::tkk_deglex(&a);
        let leads = [("e1", "e2"), ("h2", "f1"), ("f1", "f1"), ("e2", "h2"), ("h1", "h1")];
        let rels: Vec<Poly<Word, BigRational>> = leads
            .iter()
            .map(|(u, v)| Poly::monomial(parse_monomial(&a, &[*u, *v]).unwrap(), BigRational::from_integer(1.into())))
            .collect();
        let pres = NcPresentation::new(a.clone(), order, rels).unwrap();
        let gb = complete_nc(&pres, 8);
        let h = hilbert_series(&gb, 7).unwrap();
        let set = chains(&gb.leading_monomials(), 6, 6, 7).unwrap();
        let mut inv = vec![1i128];
        for k in 1..=7 {
            let c = set.level(k - 1).len() as i128;
            inv.push(if k % 2 == 0 { c } else { -c });
        }
        for d in 0..=7 {
            let s: i128 = (0..=d).map(|i| inv[i] * h[d - i] as i128).sum();
            assert_eq!(s, i128::from(d == 0));
        }
    }
}
