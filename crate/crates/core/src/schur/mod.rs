//! Characters graded by sl2 weight and by multidegree in the triple
//! indices, and their expansion into Schur polynomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::freemodels::present_com;
use crate::koszul::lie_super_homology;
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Exponent vector over the triple indices `1..=b`.
pub type Exponent = Vec<u32>;

/// A partition, parts weakly decreasing, no zero parts.
pub type Partition = Vec<u32>;

/// Multiplicities indexed by `(weight, multidegree)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiChar {
    pub b: usize,
    pub coeffs: BTreeMap<(i64, Exponent), u64>,
}

/// A polynomial in `m` variables as exponent vector → coefficient.
pub type SymPoly = BTreeMap<Exponent, i64>;

fn permutations_of(alpha: &[u32]) -> Vec<Exponent> {
    let mut v = alpha.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next_permutation
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

fn is_symmetric(p: &SymPoly) -> bool {
    p.iter().all(|(a, c)| permutations_of(a).iter().all(|s| p.get(s) == Some(c)))
}

impl MultiChar {
    pub fn new(b: usize) -> Self {
        MultiChar { b, coeffs: BTreeMap::new() }
    }

    pub fn add(&mut self, weight: i64, alpha: Exponent, mult: u64) {
        debug_assert_eq!(alpha.len(), self.b);
        *self.coeffs.entry((weight, alpha)).or_default() += mult;
    }

    pub fn dim(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// Invariance of each weight slice under permuting the indices.
    pub fn is_symmetric(&self) -> bool {
        self.weight_slices().values().all(is_symmetric)
    }

    fn weight_slices(&self) -> BTreeMap<i64, SymPoly> {
        let mut out: BTreeMap<i64, SymPoly> = BTreeMap::new();
        for ((w, a), &m) in &self.coeffs {
            out.entry(*w).or_default().insert(a.clone(), m as i64);
        }
        out
    }

    /// For each highest weight `n`, the multidegree polynomial of the
    /// `L(n)`-isotypic multiplicity space.
    pub fn isotypic(&self) -> Result<BTreeMap<u64, SymPoly>> {
        let slices = self.weight_slices();
        let mut out: BTreeMap<u64, SymPoly> = BTreeMap::new();
        for (&w, poly) in slices.range(0..) {
            let above = slices.get(&(w + 2));
            for (a, &c) in poly {
                let m = c - above.and_then(|p| p.get(a)).copied().unwrap_or(0);
                if m < 0 {
                    return Err(Error::NotCompletelyReducible { weight: w });
                }
                if m > 0 {
                    out.entry(w as u64).or_default().insert(a.clone(), m);
                }
            }
        }
        Ok(out)
    }

    /// The `L(0)` and `L(2)` isotypic parts.
    pub fn truncated(&self) -> Result<BTreeMap<u64, SymPoly>> {
        let mut iso = self.isotypic()?;
        iso.retain(|&n, _| n == 0 || n == 2);
        Ok(iso)
    }
}

/// Multiplicities of Schur polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub mults: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn is_positive(&self) -> bool {
        self.mults.values().all(|&c| c > 0)
    }

    pub fn mult(&self, lambda: &[u32]) -> i64 {
        self.mults.get(lambda).copied().unwrap_or(0)
    }

    /// Total dimension as a `GL_m`-module.
    pub fn dim(&self, m: usize) -> i64 {
        self.mults.iter().map(|(l, &c)| c * schur_dim(l, m) as i64).sum()
    }

    /// Terms on partitions with at most `rows` parts.
    pub fn restricted(&self, rows: usize) -> SchurExpansion {
        SchurExpansion { mults: self.mults.iter().filter(|(l, _)| l.len() <= rows).map(|(l, &c)| (l.clone(), c)).collect() }
    }
}

fn partition_label(l: &[u32]) -> String {
    l.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// Serialized as `{"4,1": 1, ...}`.
impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.mults.len()))?;
        for (l, c) in self.mults.iter().rev() {
            m.serialize_entry(&partition_label(l), c)?;
        }
        m.end()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .mults
            .iter()
            .rev()
            .map(|(l, &c)| {
                let s = format!("s{}", partition_label(l));
                if c == 1 {
                    s
                } else {
                    format!("{c}·{s}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Contents of the semistandard tableaux of shape `lambda` with entries
/// `< m`.
fn ssyt_contents(lambda: &[u32], m: usize) -> Vec<Exponent> {
    fn fill(lambda: &[u32], m: usize, rows: &mut Vec<Vec<usize>>, r: usize, out: &mut Vec<Exponent>) {
        if r == lambda.len() {
            let mut c = vec![0u32; m];
            for row in rows.iter() {
                for &e in row {
                    c[e] += 1;
                }
            }
            out.push(c);
            return;
        }
        if rows[r].len() == lambda[r] as usize {
            fill(lambda, m, rows, r + 1, out);
            return;
        }
        let j = rows[r].len();
        let lo_row = rows[r].last().copied().unwrap_or(0);
        let lo_col = if r > 0 { rows[r - 1][j] + 1 } else { 0 };
        for e in lo_row.max(lo_col)..m {
            rows[r].push(e);
            fill(lambda, m, rows, r, out);
            rows[r].pop();
        }
    }
    let mut out = Vec::new();
    if lambda.len() > m {
        return out;
    }
    let mut rows = vec![Vec::new(); lambda.len()];
    fill(lambda, m, &mut rows, 0, &mut out);
    out
}

/// The Schur polynomial `s_λ(x_1..x_m)`.
pub fn schur_poly(lambda: &[u32], m: usize) -> SymPoly {
    let mut p = SymPoly::new();
    for c in ssyt_contents(lambda, m) {
        *p.entry(c).or_default() += 1;
    }
    p
}

/// Number of semistandard Young tableaux of shape `lambda` with entries in
/// `1..=m`.
pub fn schur_dim(lambda: &[u32], m: usize) -> u64 {
    ssyt_contents(lambda, m).len() as u64
}

/// Expands a symmetric polynomial in `m` variables by repeatedly removing
/// the Schur polynomial of its lexicographically largest exponent.
pub fn schur_expand(sym: &SymPoly, m: usize) -> Result<SchurExpansion> {
    if sym.keys().any(|a| a.len() != m) {
        return Err(Error::NotSymmetric(format!("exponent vectors must have length {m}")));
    }
    let mut rest: SymPoly = sym.iter().filter(|(_, &c)| c != 0).map(|(a, &c)| (a.clone(), c)).collect();
    if !is_symmetric(&rest) {
        return Err(Error::NotSymmetric("polynomial is not invariant under permuting variables".into()));
    }
    let mut out = SchurExpansion::default();
    while let Some((top, &c)) = rest.iter().next_back() {
        let lambda: Partition = top.iter().copied().filter(|&p| p > 0).collect();
        for (a, k) in schur_poly(&lambda, m) {
            let e = rest.entry(a).or_default();
            *e -= c * k as i64;
        }
        rest.retain(|_, v| *v != 0);
        out.mults.insert(lambda, c);
    }
    Ok(out)
}

/// `H_k(Com^TKK(L(2)⊗B))` for `k = 1..=max_k`, refined by multidegree.
pub fn multigraded_homology<C: Scalar>(b: usize, max_k: usize) -> Result<BTreeMap<usize, MultiChar>> {
    let h = lie_super_homology(&present_com::<C>(0, b), max_k)?;
    let al = h.dual.alphabet();
    let mut out = BTreeMap::new();
    for k in 1..=max_k {
        let mut mc = MultiChar::new(b);
        for w in h.words(k) {
            let mut alpha = vec![0u32; b];
            for &l in w.word.as_slice() {
                let j = al.triple_index(l).ok_or_else(|| Error::UnsupportedAlphabet(format!("{} is not a triple letter", al.name(l))))?;
                alpha[j - 1] += 1;
            }
            mc.add(w.word.weight(al), alpha, 1);
        }
        if !mc.is_symmetric() {
            return Err(Error::Integrity(format!("H_{k} is not symmetric in the triple indices")));
        }
        out.insert(k, mc);
    }
    Ok(out)
}

/// Schur expansion of every isotypic component, keyed by highest weight.
pub fn schur_decomposition(mc: &MultiChar) -> Result<BTreeMap<u64, SchurExpansion>> {
    mc.isotypic()?.into_iter().map(|(n, p)| Ok((n, schur_expand(&p, mc.b)?))).collect()
}

#[cfg(test)]
mod tests;
