use std::collections::BTreeMap;

use crate::alphabet::{Alphabet, Letter, Sl2Basis, TkkRole};
use crate::error::{Error, Result};
use crate::groebner::Presentation;
use crate::linalg::SparseVec;
use crate::monomial::{all_words, Monomial, Word};
use crate::scalar::Scalar;

use super::{capped, present_ass, AlgebraModel};

/// Basis of `2×2` matrices adapted to `sl2`: the unit and `E, H, F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mat {
    I,
    E,
    H,
    F,
}

impl Mat {
    pub const ALL: [Mat; 4] = [Mat::I, Mat::E, Mat::H, Mat::F];

    pub fn weight(self) -> i64 {
        match self {
            Mat::E => 2,
            Mat::F => -2,
            _ => 0,
        }
    }

    pub fn from_sl2(u: Sl2Basis) -> Mat {
        match u {
            Sl2Basis::E => Mat::E,
            Sl2Basis::H => Mat::H,
            Sl2Basis::F => Mat::F,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

fn matrix_table<C: Scalar>() -> Vec<Vec<Vec<(C, Mat)>>> {
    use Mat::*;
    let h = C::half;
    let one = C::one;
    let m = |x: Mat, y: Mat| -> Vec<(C, Mat)> {
        match (x, y) {
            (I, z) | (z, I) => vec![(one(), z)],
            (E, F) => vec![(h(), I), (h(), H)],
            (F, E) => vec![(h(), I), (-h(), H)],
            (E, H) => vec![(-one(), E)],
            (H, E) => vec![(one(), E)],
            (F, H) => vec![(one(), F)],
            (H, F) => vec![(-one(), F)],
            (H, H) => vec![(one(), I)],
            _ => vec![],
        }
    };
    Mat::ALL.iter().map(|&x| Mat::ALL.iter().map(|&y| m(x, y)).collect()).collect()
}

/// Basis element `M ⊗ w`: a matrix times a word in `x_1..x_a, b_1..b_b`
/// (letters `0..a` and `a..a+b`).
pub type AssKey = (Mat, Word);

/// The subalgebra of `M_2(𝕜) ⊗ T(𝕜^a ⊕ 𝕜^b)` generated by `I⊗x_i` and
/// `sl2⊗b_j`: the free associative TKK algebra. Products above `cap` are
/// refused.
#[derive(Debug, Clone)]
pub struct AssModel<C: Scalar> {
    alphabet: Alphabet,
    a: usize,
    b: usize,
    cap: usize,
    table: Vec<Vec<Vec<(C, Mat)>>>,
}

impl<C: Scalar> AssModel<C> {
    pub fn new(a: usize, b: usize, cap: usize) -> Self {
        AssModel { alphabet: Alphabet::tkk(a, b), a, b, cap, table: matrix_table() }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Overrides one entry of the matrix multiplication table.
    pub fn with_product(mut self, x: Mat, y: Mat, value: Vec<(C, Mat)>) -> Self {
        self.table[x.index()][y.index()] = value;
        self
    }

    fn matrices(&self, w: &Word) -> &'static [Mat] {
        match w.as_slice().iter().filter(|&&l| l as usize >= self.a).count() {
            0 => &[Mat::I],
            1 => &[Mat::E, Mat::H, Mat::F],
            _ => &Mat::ALL,
        }
    }
}

impl<C: Scalar> AlgebraModel<C> for AssModel<C> {
    type Mono = Word;
    type Key = AssKey;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn presentation(&self, max_deg: usize) -> Presentation<Word, C> {
        present_ass(self.a, self.b, max_deg)
    }

    fn generator(&self, l: Letter) -> SparseVec<AssKey, C> {
        let key = match self.alphabet.get(l).role {
            Some(TkkRole::Singlet(i)) => (Mat::I, Word::new(&[(i - 1) as Letter])),
            Some(TkkRole::Triple(u, j)) => (Mat::from_sl2(u), Word::new(&[(self.a + j - 1) as Letter])),
            None => unreachable!("tkk alphabet"),
        };
        BTreeMap::from([(key, C::one())])
    }

    fn mul(&self, x: &SparseVec<AssKey, C>, y: &SparseVec<AssKey, C>) -> Result<SparseVec<AssKey, C>> {
        let mut out: SparseVec<AssKey, C> = BTreeMap::new();
        for ((m1, w1), c1) in x {
            for ((m2, w2), c2) in y {
                let d = w1.len() + w2.len();
                if d > self.cap {
                    return Err(capped(d, self.cap));
                }
                let w = w1.mul(w2);
                for (c, m) in &self.table[m1.index()][m2.index()] {
                    let e = out.entry((*m, w.clone())).or_insert_with(C::zero);
                    *e = e.clone() + c.clone() * c1.clone() * c2.clone();
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn basis(&self, d: usize) -> Result<Vec<AssKey>> {
        if d > self.cap {
            return Err(capped(d, self.cap));
        }
        let n = self.a + self.b;
        if n == 0 {
            return Ok(if d == 0 { vec![(Mat::I, Word::one())] } else { vec![] });
        }
        if n.checked_pow(d as u32).map_or(true, |v| v > 4_000_000) {
            return Err(Error::Resource(format!("{n}^{d} words")));
        }
        let mut out = Vec::new();
        for w in all_words(n, d) {
            out.extend(self.matrices(&w).iter().map(|&m| (m, w.clone())));
        }
        Ok(out)
    }

    fn weight(&self, k: &AssKey) -> i64 {
        k.0.weight()
    }

    fn unit(&self) -> SparseVec<AssKey, C> {
        BTreeMap::from([((Mat::I, Word::one()), C::one())])
    }
}
