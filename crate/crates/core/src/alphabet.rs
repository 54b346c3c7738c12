//! Graded alphabets.
//!
//! Letters are small integer indices into an [`Alphabet`]. Each generator
//! carries its sl2-weight, a parity, and a sort key; generators of a TKK
//! alphabet additionally know which trivial singlet `x_i` or which member of
//! an adjoint triple `(e_j, h_j, f_j)` they are.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = u16;

/// Basis vector of the adjoint module `L(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sl2Basis {
    E,
    H,
    F,
}

impl Sl2Basis {
    pub const ALL: [Sl2Basis; 3] = [Sl2Basis::E, Sl2Basis::H, Sl2Basis::F];

    pub fn weight(self) -> i64 {
        match self {
            Sl2Basis::E => 2,
            Sl2Basis::H => 0,
            Sl2Basis::F => -2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sl2Basis::E => 'e',
            Sl2Basis::H => 'h',
            Sl2Basis::F => 'f',
        }
    }
}

/// Role of a generator inside a TKK alphabet. Indices are 1-based, as in
/// the generator names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TkkRole {
    Singlet(usize),
    Triple(Sl2Basis, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: i64,
    pub parity: u8,
    pub sort_key: i64,
    pub role: Option<TkkRole>,
}

impl Generator {
    pub fn new(name: impl Into<String>, weight: i64, parity: u8, sort_key: i64) -> Self {
        let name = name.into();
        let role = infer_role(&name, weight);
        Generator { name, weight, parity: parity % 2, sort_key, role }
    }
}

/// Recognizes `x3`, `e1`, `h2*`, ... and checks the weight matches.
fn infer_role(name: &str, weight: i64) -> Option<TkkRole> {
    let stem = name.strip_suffix('*').unwrap_or(name);
    let mut chars = stem.chars();
    let head = chars.next()?;
    let index: usize = chars.as_str().parse().ok()?;
    let role = match head {
        'x' => TkkRole::Singlet(index),
        'e' => TkkRole::Triple(Sl2Basis::E, index),
        'h' => TkkRole::Triple(Sl2Basis::H, index),
        'f' => TkkRole::Triple(Sl2Basis::F, index),
        _ => return None,
    };
    let expected = match role {
        TkkRole::Singlet(_) => 0,
        TkkRole::Triple(u, _) => u.weight(),
    };
    (expected == weight).then_some(role)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    by_name: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let mut by_name = HashMap::new();
        let mut keys = std::collections::HashSet::new();
        for (i, g) in gens.iter().enumerate() {
            if by_name.insert(g.name.clone(), i as Letter).is_some() {
                return Err(Error::Schema(format!("duplicate generator name {:?}", g.name)));
            }
            if !keys.insert(g.sort_key) {
                return Err(Error::Schema(format!("duplicate sortKey {} ({})", g.sort_key, g.name)));
            }
        }
        if gens.len() > Letter::MAX as usize {
            return Err(Error::Resource("alphabet too large".into()));
        }
        Ok(Alphabet { gens, by_name })
    }

    /// `x_1..x_a` followed by `e_j, h_j, f_j` for `j = 1..b`, all even.
    pub fn tkk(a: usize, b: usize) -> Self {
        let mut gens = Vec::with_capacity(a + 3 * b);
        for i in 1..=a {
            gens.push(Generator::new(format!("x{i}"), 0, 0, 0));
        }
        for j in 1..=b {
            for u in Sl2Basis::ALL {
                gens.push(Generator::new(format!("{}{j}", u.symbol()), u.weight(), 0, 0));
            }
        }
        for (k, g) in gens.iter_mut().enumerate() {
            g.sort_key = k as i64;
        }
        Alphabet::new(gens).expect("tkk alphabet is well formed")
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, l: Letter) -> &Generator {
        &self.gens[l as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.gens.len()).map(|i| i as Letter)
    }

    pub fn weight(&self, l: Letter) -> i64 {
        self.gens[l as usize].weight
    }

    pub fn parity(&self, l: Letter) -> u8 {
        self.gens[l as usize].parity
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.gens[l as usize].name
    }

    pub fn is_tkk(&self) -> bool {
        self.gens.iter().all(|g| g.role.is_some())
    }

    /// Letter of `u_j` in a TKK alphabet.
    pub fn triple(&self, u: Sl2Basis, j: usize) -> Option<Letter> {
        self.gens
            .iter()
            .position(|g| g.role == Some(TkkRole::Triple(u, j)))
            .map(|i| i as Letter)
    }

    pub fn singlet(&self, i: usize) -> Option<Letter> {
        self.gens
            .iter()
            .position(|g| g.role == Some(TkkRole::Singlet(i)))
            .map(|i| i as Letter)
    }

    /// Number of adjoint triples (the largest triple index present).
    pub fn triple_count(&self) -> usize {
        self.gens
            .iter()
            .filter_map(|g| match g.role {
                Some(TkkRole::Triple(_, j)) => Some(j),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Index of the adjoint triple a letter belongs to, if any.
    pub fn triple_index(&self, l: Letter) -> Option<usize> {
        match self.gens[l as usize].role {
            Some(TkkRole::Triple(_, j)) => Some(j),
            _ => None,
        }
    }

    /// The dual alphabet `{g*}` with `weight(g*) = weight(g)`; parities are
    /// flipped when `odd_duals` is set.
    pub fn dual(&self, odd_duals: bool) -> Alphabet {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let parity = if odd_duals { (g.parity + 1) % 2 } else { g.parity };
                let name = match g.name.strip_suffix('*') {
                    Some(stem) => stem.to_string(),
                    None => format!("{}*", g.name),
                };
                Generator::new(name, g.weight, parity, g.sort_key)
            })
            .collect();
        Alphabet::new(gens).expect("dual of a valid alphabet is valid")
    }

    pub fn check_compatible(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.name)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tkk_alphabet_roles() {
        let a = Alphabet::tkk(1, 2);
        assert_eq!(a.len(), 7);
        assert!(a.is_tkk());
        assert_eq!(a.name(a.triple(Sl2Basis::F, 2).unwrap()), "f2");
        assert_eq!(a.weight(a.letter("e1").unwrap()), 2);
        assert_eq!(a.triple_count(), 2);
        assert_eq!(a.singlet(1), Some(0));
    }

    #[test]
    fn dual_flips_parity_and_keeps_weight() {
        let d = Alphabet::tkk(0, 1).dual(true);
        let e = d.letter("e1*").unwrap();
        assert_eq!(d.weight(e), 2);
        assert_eq!(d.parity(e), 1);
        assert!(d.is_tkk());
        assert_eq!(d.dual(true), Alphabet::tkk(0, 1));
    }

    #[test]
    fn rejects_duplicates_and_wrong_weights() {
        let g = |n: &str, k| Generator::new(n, 0, 0, k);
        assert!(Alphabet::new(vec![g("a", 0), g("a", 1)]).is_err());
        assert!(Alphabet::new(vec![g("a", 0), g("b", 0)]).is_err());
        // an `e` with weight 0 is not a TKK letter
        assert_eq!(Generator::new("e1", 0, 0, 0).role, None);
    }
}
