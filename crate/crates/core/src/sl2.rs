//! sl2 actions on free algebras over TKK alphabets, weight characters and
//! their decomposition into irreducibles `L(n)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::alphabet::{Alphabet, Letter, Sl2Basis, TkkRole};
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseVec};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Image of a single letter under `e`, `h` or `f`, as `coeff * letter`.
///
/// `h` acts by the weight; on an adjoint triple `e·h = -2e`, `e·f = h`,
/// `f·e = -h`, `f·h = 2f`; everything else is killed. This realizes
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn act_on_letter(alphabet: &Alphabet, g: Sl2Basis, l: Letter) -> Result<Option<(i64, Letter)>> {
    let gen = alphabet.get(l);
    let role = gen
        .role
        .ok_or_else(|| Error::UnsupportedAlphabet(format!("generator {} is not part of a TKK alphabet", gen.name)))?;
    let partner = |u: Sl2Basis, j: usize| {
        alphabet
            .triple(u, j)
            .ok_or_else(|| Error::UnsupportedAlphabet(format!("triple {j} is incomplete")))
    };
    Ok(match (g, role) {
        (_, TkkRole::Singlet(_)) => None,
        (Sl2Basis::H, TkkRole::Triple(u, _)) => match u.weight() {
            0 => None,
            w => Some((w, l)),
        },
        (Sl2Basis::E, TkkRole::Triple(Sl2Basis::E, _)) => None,
        (Sl2Basis::E, TkkRole::Triple(Sl2Basis::H, j)) => Some((-2, partner(Sl2Basis::E, j)?)),
        (Sl2Basis::E, TkkRole::Triple(Sl2Basis::F, j)) => Some((1, partner(Sl2Basis::H, j)?)),
        (Sl2Basis::F, TkkRole::Triple(Sl2Basis::E, j)) => Some((-1, partner(Sl2Basis::H, j)?)),
        (Sl2Basis::F, TkkRole::Triple(Sl2Basis::H, j)) => Some((2, partner(Sl2Basis::F, j)?)),
        (Sl2Basis::F, TkkRole::Triple(Sl2Basis::F, _)) => None,
    })
}

/// Action of `g` on a polynomial, extended from letters by the Leibniz rule.
pub fn act<M: Monomial, C: Scalar>(alphabet: &Alphabet, g: Sl2Basis, p: &Poly<M, C>) -> Result<Poly<M, C>> {
    if !alphabet.is_tkk() {
        return Err(Error::UnsupportedAlphabet(format!("{alphabet} is not a TKK alphabet")));
    }
    let mut table = Vec::with_capacity(alphabet.len());
    for l in alphabet.letters() {
        table.push(act_on_letter(alphabet, g, l)?);
    }
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let mut letters = m.letters();
        for i in 0..letters.len() {
            let orig = letters[i];
            if let Some((k, image)) = table[orig as usize] {
                letters[i] = image;
                out.add_term(M::from_letters(&letters), c.clone() * C::from_int(k));
                letters[i] = orig;
            }
        }
    }
    Ok(out)
}

fn to_vec<M: Monomial, C: Scalar>(p: &Poly<M, C>) -> SparseVec<M, C> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Smallest subspace containing `seed` and stable under `e` and `f`, as a
/// reduced row echelon basis (rows sorted by decreasing pivot monomial).
pub fn sl2_closure<M: Monomial, C: Scalar>(alphabet: &Alphabet, seed: &[Poly<M, C>]) -> Result<Vec<Poly<M, C>>> {
    let mut space: RowSpace<M, C> = RowSpace::new();
    let mut queue: VecDeque<Poly<M, C>> = VecDeque::new();
    for p in seed {
        if space.insert(to_vec(p)) {
            queue.push_back(p.clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        for g in [Sl2Basis::E, Sl2Basis::F] {
            let q = act(alphabet, g, &p)?;
            if !q.is_zero() && space.insert(to_vec(&q)) {
                queue.push_back(q);
            }
        }
    }
    Ok(space
        .canonical_rows()
        .into_iter()
        .map(Poly::from_terms)
        .collect())
}

/// Weight multiplicities of a finite-dimensional sl2-module.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    mults: BTreeMap<i64, u64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut c = Self::new();
        for (w, m) in pairs {
            c.add(w, m);
        }
        c
    }

    pub fn add(&mut self, weight: i64, mult: u64) {
        if mult > 0 {
            *self.mults.entry(weight).or_insert(0) += mult;
        }
    }

    pub fn absorb(&mut self, other: &Character) {
        for (&w, &m) in &other.mults {
            self.add(w, m);
        }
    }

    pub fn mult(&self, weight: i64) -> u64 {
        self.mults.get(&weight).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.mults.iter().map(|(&w, &m)| (w, m))
    }

    pub fn is_symmetric(&self) -> bool {
        self.mults.iter().all(|(&w, &m)| self.mult(-w) == m)
    }

    /// Character of `L(n)^mult`.
    pub fn irreducible(n: u64, mult: u64) -> Self {
        let n = n as i64;
        Character::from_pairs((0..=n).map(|i| (n - 2 * i, mult)))
    }
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut outer = s.serialize_map(Some(1))?;
        let inner: BTreeMap<String, u64> = self.mults.iter().map(|(w, m)| (w.to_string(), *m)).collect();
        outer.serialize_entry("weights", &inner)?;
        outer.end()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.mults.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}:{m}")?;
        }
        write!(f, "}}")
    }
}

/// Multiplicities of the irreducibles `L(n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IrrDecomp {
    mults: BTreeMap<u64, u64>,
}

impl IrrDecomp {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut d = Self::new();
        for (n, m) in pairs {
            if m > 0 {
                *d.mults.entry(n).or_insert(0) += m;
            }
        }
        d
    }

    pub fn mult(&self, n: u64) -> u64 {
        self.mults.get(&n).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.mults.iter().map(|(&n, &m)| (n, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn character(&self) -> Character {
        let mut c = Character::new();
        for (&n, &m) in &self.mults {
            c.absorb(&Character::irreducible(n, m));
        }
        c
    }

    pub fn dim(&self) -> u64 {
        self.mults.iter().map(|(n, m)| (n + 1) * m).sum()
    }
}

impl Serialize for IrrDecomp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.mults.len()))?;
        for (n, m) in self.mults.iter().rev() {
            map.serialize_entry(&format!("L({n})"), m)?;
        }
        map.end()
    }
}

impl fmt::Display for IrrDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        for (i, (n, m)) in self.mults.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "L({n})")?;
            } else {
                write!(f, "L({n})^{m}")?;
            }
        }
        Ok(())
    }
}

/// The part of a module that survives TKK truncation: copies of `L(0)` and `L(2)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct TruncatedDecomp {
    pub m0: u64,
    pub m2: u64,
}

impl TruncatedDecomp {
    pub fn is_zero(&self) -> bool {
        self.m0 == 0 && self.m2 == 0
    }

    pub fn dim(&self) -> u64 {
        self.m0 + 3 * self.m2
    }
}

impl fmt::Display for TruncatedDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = IrrDecomp::from_pairs([(0, self.m0), (2, self.m2)]);
        write!(f, "{d}")
    }
}

/// Weight character of a list of monomials.
pub fn character_of_monomials<'a, M: Monomial>(alphabet: &Alphabet, ms: impl IntoIterator<Item = &'a M>) -> Character {
    let mut c = Character::new();
    for m in ms {
        c.add(m.weight(alphabet), 1);
    }
    c
}

/// Weight character of a basis of weight vectors.
pub fn character_of_basis<M: Monomial, C: Scalar>(alphabet: &Alphabet, basis: &[Poly<M, C>]) -> Result<Character> {
    let mut c = Character::new();
    for p in basis {
        let g = p.grading(alphabet);
        match g.weight.value() {
            Some(w) => c.add(w, 1),
            None => return Err(Error::Inhomogeneous(p.render(alphabet))),
        }
    }
    Ok(c)
}

/// Greedy highest-weight peeling.
pub fn decompose(ch: &Character) -> Result<IrrDecomp> {
    let mut rest: BTreeMap<i64, i64> = ch.iter().map(|(w, m)| (w, m as i64)).collect();
    let mut out = IrrDecomp::new();
    while let Some((&top, &m)) = rest.iter().rev().find(|(_, &m)| m != 0) {
        if m < 0 || top < 0 {
            return Err(Error::NotCompletelyReducible { weight: top });
        }
        let mut w = top;
        while w >= -top {
            let slot = rest.entry(w).or_insert(0);
            *slot -= m;
            if *slot < 0 {
                return Err(Error::NotCompletelyReducible { weight: w });
            }
            w -= 2;
        }
        rest.retain(|_, v| *v != 0);
        *out.mults.entry(top as u64).or_insert(0) += m as u64;
    }
    Ok(out)
}

pub fn tkk_truncate(d: &IrrDecomp) -> TruncatedDecomp {
    TruncatedDecomp { m0: d.mult(0), m2: d.mult(2) }
}
