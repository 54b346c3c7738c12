use std::collections::BTreeMap;

use crate::alphabet::{Alphabet, Letter, Sl2Basis, TkkRole};
use crate::error::Result;
use crate::groebner::Presentation;
use crate::jordan::lie::sl2_bracket;
use crate::linalg::SparseVec;
use crate::monomial::{all_comm_monomials, CommMonomial, Monomial};
use crate::scalar::Scalar;

use super::{present_com, AlgebraModel};

/// The part of a basis element of the commutative model living in the
/// exterior algebra on the triples `b_1..b_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BPart {
    One,
    /// `u ⊗ b_i`
    Gen(Sl2Basis, usize),
    /// `ω_ij`, `i ≤ j`: the invariant pairing of two generators.
    Omega(usize, usize),
    /// `u ⊗ b_i∧b_j`, `i < j`
    Wedge2(Sl2Basis, usize, usize),
    /// `b_i∧b_j∧b_k`, `i < j < k`
    Wedge3(usize, usize, usize),
}

impl BPart {
    pub fn degree(self) -> usize {
        match self {
            BPart::One => 0,
            BPart::Gen(..) => 1,
            BPart::Omega(..) | BPart::Wedge2(..) => 2,
            BPart::Wedge3(..) => 3,
        }
    }

    pub fn weight(self) -> i64 {
        match self {
            BPart::Gen(u, _) | BPart::Wedge2(u, _, _) => u.weight(),
            _ => 0,
        }
    }

    fn all(b: usize, d: usize) -> Vec<BPart> {
        let mut out = Vec::new();
        match d {
            0 => out.push(BPart::One),
            1 => {
                for i in 1..=b {
                    out.extend(Sl2Basis::ALL.map(|u| BPart::Gen(u, i)));
                }
            }
            2 => {
                for i in 1..=b {
                    for j in i..=b {
                        out.push(BPart::Omega(i, j));
                        if i < j {
                            out.extend(Sl2Basis::ALL.map(|u| BPart::Wedge2(u, i, j)));
                        }
                    }
                }
            }
            3 => {
                for i in 1..=b {
                    for j in i + 1..=b {
                        for k in j + 1..=b {
                            out.push(BPart::Wedge3(i, j, k));
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }
}

/// Sign and sorted indices of `b_i∧b_j∧b_k`, or `None` if two coincide.
fn sort3(mut v: [usize; 3]) -> Option<(i64, [usize; 3])> {
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, v))
}

pub type ComKey = (CommMonomial, BPart);

/// `𝕜[x_1..x_a] ⊗ (𝕜 ⊕ U_b ⊕ (S²𝕜^b ⊕ L(2)⊗Λ²𝕜^b) ⊕ Λ³𝕜^b)`, the free
/// commutative TKK algebra on `a` trivial and `b` adjoint generators.
#[derive(Debug, Clone)]
pub struct ComModel<C: Scalar> {
    alphabet: Alphabet,
    a: usize,
    b: usize,
    ef: C,
}

impl<C: Scalar> ComModel<C> {
    pub fn new(a: usize, b: usize) -> Self {
        ComModel { alphabet: Alphabet::tkk(a, b), a, b, ef: C::half() }
    }

    /// Replaces the pairing constant `K(e,f)`; any value other than `½`
    /// breaks the defining relations.
    pub fn with_ef_pairing(mut self, ef: C) -> Self {
        self.ef = ef;
        self
    }

    fn pairing(&self, u: Sl2Basis, v: Sl2Basis) -> C {
        use Sl2Basis::*;
        match (u, v) {
            (E, F) | (F, E) => self.ef.clone(),
            (H, H) => C::one(),
            _ => C::zero(),
        }
    }

    fn mul_b(&self, x: BPart, y: BPart) -> Vec<(C, BPart)> {
        use BPart::*;
        match (x, y) {
            (One, z) | (z, One) => vec![(C::one(), z)],
            (Gen(u, i), Gen(v, j)) => {
                let mut out = vec![(self.pairing(u, v), Omega(i.min(j), i.max(j)))];
                if i != j {
                    if let Some((c, w)) = sl2_bracket::<C>(u, v) {
                        let c = if i < j { c } else { -c };
                        out.push((c, Wedge2(w, i.min(j), i.max(j))));
                    }
                }
                out
            }
            (Wedge2(v, i, j), Gen(u, k)) | (Gen(u, k), Wedge2(v, i, j)) => match sort3([i, j, k]) {
                Some((s, [p, q, r])) => vec![(self.pairing(v, u) * C::from_int(s), Wedge3(p, q, r))],
                None => vec![],
            },
            _ => vec![],
        }
    }
}

impl<C: Scalar> AlgebraModel<C> for ComModel<C> {
    type Mono = CommMonomial;
    type Key = ComKey;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn presentation(&self, _max_deg: usize) -> Presentation<CommMonomial, C> {
        present_com(self.a, self.b)
    }

    fn generator(&self, l: Letter) -> SparseVec<ComKey, C> {
        let key = match self.alphabet.get(l).role {
            Some(TkkRole::Singlet(i)) => (CommMonomial::from_letters(&[(i - 1) as Letter]), BPart::One),
            Some(TkkRole::Triple(u, j)) => (CommMonomial::one(), BPart::Gen(u, j)),
            None => unreachable!("tkk alphabet"),
        };
        BTreeMap::from([(key, C::one())])
    }

    fn mul(&self, x: &SparseVec<ComKey, C>, y: &SparseVec<ComKey, C>) -> Result<SparseVec<ComKey, C>> {
        let mut out: SparseVec<ComKey, C> = BTreeMap::new();
        for ((m1, b1), c1) in x {
            for ((m2, b2), c2) in y {
                for (c, bp) in self.mul_b(*b1, *b2) {
                    if c.is_zero() {
                        continue;
                    }
                    let e = out.entry((m1.mul(m2), bp)).or_insert_with(C::zero);
                    *e = e.clone() + c * c1.clone() * c2.clone();
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn basis(&self, d: usize) -> Result<Vec<ComKey>> {
        if self.a == 0 && self.b == 0 && d > 0 {
            return Ok(vec![]);
        }
        let mut out = Vec::new();
        for k in 0..=d.min(3) {
            let bs = BPart::all(self.b, k);
            for m in all_comm_monomials(self.a, d - k) {
                out.extend(bs.iter().map(|&bp| (m.clone(), bp)));
            }
        }
        Ok(out)
    }

    fn weight(&self, k: &ComKey) -> i64 {
        k.1.weight()
    }

    fn unit(&self) -> SparseVec<ComKey, C> {
        BTreeMap::from([((CommMonomial::one(), BPart::One), C::one())])
    }
}
