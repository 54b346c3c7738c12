//! Jordan algebras: the symmetrized product in tensor algebras, finite
//! structure tables, free special Jordan spaces and inner derivations.

pub mod lie;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Generator, Letter};
use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::monomial::{Monomial, Word};
use crate::poly::{NcPoly, Poly};
use crate::scalar::Scalar;

pub use lie::{jacobi_check, tag, tkk_inner, JacobiReport, LieTable};

/// `a ∘ b = ½(ab + ba)`
pub fn jordan_product<C: Scalar>(a: &NcPoly<C>, b: &NcPoly<C>) -> NcPoly<C> {
    (&(a * b) + &(b * a)).scale(&C::half())
}

/// `[a, b] = ab - ba`
pub fn commutator<C: Scalar>(a: &NcPoly<C>, b: &NcPoly<C>) -> NcPoly<C> {
    &(a * b) - &(b * a)
}

/// The linearized Jordan identity
/// `((xy)z)t + ((yt)z)x + ((xt)z)y - (xy)(zt) - (xz)(yt) - (xt)(yz)`
/// for an arbitrary commutative product.
pub fn jordan_identity<T>(mul: impl Fn(&T, &T) -> T, add: impl Fn(&T, &T) -> T, sub: impl Fn(&T, &T) -> T, x: &T, y: &T, z: &T, t: &T) -> T {
    let m = &mul;
    let plus = add(&add(&m(&m(&m(x, y), z), t), &m(&m(&m(y, t), z), x)), &m(&m(&m(x, t), z), y));
    let minus = add(&add(&m(&m(x, y), &m(z, t)), &m(&m(x, z), &m(y, t))), &m(&m(x, t), &m(y, z)));
    sub(&plus, &minus)
}

/// The identity evaluated in the tensor algebra under `∘`.
pub fn jordan_identity_poly<C: Scalar>(x: &NcPoly<C>, y: &NcPoly<C>, z: &NcPoly<C>, t: &NcPoly<C>) -> NcPoly<C> {
    jordan_identity(jordan_product, |a, b| a + b, |a, b| a - b, x, y, z, t)
}

/// A finite-dimensional commutative algebra given by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanAlg<C: Scalar> {
    pub labels: Vec<String>,
    /// `table[i][j]`: product of basis elements `i` and `j` as a dense vector.
    table: Vec<Vec<Vec<C>>>,
    /// Degrees of basis elements when the algebra is graded with every
    /// product above `cap` set to zero.
    grading: Option<(Vec<usize>, usize)>,
}

impl<C: Scalar> JordanAlg<C> {
    /// Errors with `NotSymmetric` when the table is not commutative.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<C>>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Schema(format!("structure table must be {n}×{n} with vectors of length {n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if table[i][j] != table[j][i] {
                    return Err(Error::NotSymmetric(format!("{} · {} differs from {} · {}", labels[i], labels[j], labels[j], labels[i])));
                }
            }
        }
        Ok(JordanAlg { labels, table, grading: None })
    }

    /// Records a grading used to skip products that vanish by degree.
    pub fn with_grading(mut self, degrees: Vec<usize>, cap: usize) -> Self {
        self.grading = Some((degrees, cap));
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(&self, i: usize) -> Vec<C> {
        let mut v = vec![C::zero(); self.dim()];
        v[i] = C::one();
        v
    }

    pub fn zero(&self) -> Vec<C> {
        vec![C::zero(); self.dim()]
    }

    pub fn product(&self, i: usize, j: usize) -> &[C] {
        &self.table[i][j]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vec<C>) {
        self.table[i][j] = v.clone();
        self.table[j][i] = v;
    }

    pub fn mul(&self, a: &[C], b: &[C]) -> Vec<C> {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = ai.clone() * bj.clone();
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// The one-dimensional algebra `𝕜` with `z² = z`.
    pub fn ground_field() -> Self {
        JordanAlg::new(vec!["1".into()], vec![vec![vec![C::one()]]]).expect("valid")
    }

    /// `t𝕜[t]/(tⁿ)` with basis `t, …, t^{n-1}`.
    pub fn truncated_polynomials(n: usize) -> Self {
        let m = n.saturating_sub(1);
        let labels: Vec<String> = (1..=m).map(|i| if i == 1 { "t".into() } else { format!("t^{i}") }).collect();
        let mut table = vec![vec![vec![C::zero(); m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                let k = i + j + 2;
                if k < n {
                    table[i][j][k - 1] = C::one();
                }
            }
        }
        JordanAlg::new(labels, table).expect("commutative").with_grading((1..=m).collect(), m)
    }

    /// Words of length `1..=cap` in `b` letters under `∘`, products above
    /// `cap` set to zero.
    pub fn truncated_tensor(b: usize, cap: usize) -> Self {
        let words: Vec<Word> = (1..=cap).flat_map(|d| crate::monomial::all_words(b, d)).collect();
        let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = words.len();
        let mut table = vec![vec![vec![C::zero(); n]; n]; n];
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                if u.len() + v.len() <= cap {
                    let slot = &mut table[i][j];
                    for w in [u.mul(v), v.mul(u)] {
                        let k = index[&w];
                        slot[k] = slot[k].clone() + C::half();
                    }
                }
            }
        }
        let labels = words.iter().map(|w| w.as_slice().iter().map(|&l| format!("x{}", l + 1)).collect()).collect();
        JordanAlg::new(labels, table).expect("commutative").with_grading(words.iter().map(Word::len).collect(), cap)
    }

    /// Symmetric `n×n` matrices under `∘`, basis `E_ii` and `E_ij + E_ji`.
    pub fn symmetric_matrices(n: usize) -> Self {
        let mut idx = Vec::new();
        for i in 0..n {
            for j in i..n {
                idx.push((i, j));
            }
        }
        let as_matrix = |k: usize| -> Vec<Vec<C>> {
            let (i, j) = idx[k];
            let mut m = vec![vec![C::zero(); n]; n];
            m[i][j] = C::one();
            m[j][i] = C::one();
            m
        };
        let coords = |m: &Vec<Vec<C>>| -> Vec<C> { idx.iter().map(|&(i, j)| m[i][j].clone()).collect() };
        let matmul = |a: &Vec<Vec<C>>, b: &Vec<Vec<C>>| -> Vec<Vec<C>> {
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).fold(C::zero(), |s, k| s + a[i][k].clone() * b[k][j].clone())).collect())
                .collect()
        };
        let d = idx.len();
        let mut table = vec![vec![Vec::new(); d]; d];
        for p in 0..d {
            for q in 0..d {
                let (a, b) = (as_matrix(p), as_matrix(q));
                let (ab, ba) = (matmul(&a, &b), matmul(&b, &a));
                let sym: Vec<Vec<C>> = (0..n)
                    .map(|i| (0..n).map(|j| (ab[i][j].clone() + ba[i][j].clone()) * C::half()).collect())
                    .collect();
                table[p][q] = coords(&sym);
            }
        }
        let labels = idx
            .iter()
            .map(|&(i, j)| if i == j { format!("E{}{}", i + 1, j + 1) } else { format!("E{}{}+E{}{}", i + 1, j + 1, j + 1, i + 1) })
            .collect();
        JordanAlg::new(labels, table).expect("commutative")
    }

    /// The degree truncation of a special Jordan space: products computed
    /// in the tensor algebra, anything above the top degree set to zero.
    pub fn from_special(space: &SpecialJordanSpace<C>) -> Result<Self> {
        let mut basis: Vec<NcPoly<C>> = Vec::new();
        let mut degrees = Vec::new();
        let mut labels = Vec::new();
        for d in 1..=space.max_deg() {
            for (k, p) in space.basis(d).into_iter().enumerate() {
                labels.push(format!("j{d}.{k}"));
                degrees.push(d);
                basis.push(p);
            }
        }
        let n = basis.len();
        let mut table = vec![vec![vec![C::zero(); n]; n]; n];
        for i in 0..n {
            for j in i..n {
                let d = degrees[i] + degrees[j];
                if d > space.max_deg() {
                    continue;
                }
                let prod = jordan_product(&basis[i], &basis[j]);
                let local = space.coordinates(d, &prod).ok_or_else(|| {
                    Error::Integrity(format!("product of {} and {} leaves the special Jordan space", labels[i], labels[j]))
                })?;
                let offset = degrees.iter().position(|&e| e == d).expect("degree present");
                let mut v = vec![C::zero(); n];
                for (k, c) in local.into_iter().enumerate() {
                    v[offset + k] = c;
                }
                table[i][j] = v.clone();
                table[j][i] = v;
            }
        }
        Ok(JordanAlg::new(labels, table)?.with_grading(degrees, space.max_deg()))
    }

    /// Associator `(x, y, z) = (xy)z - x(yz)`, i.e. `∂_{x,z}(y)`.
    pub fn inner_derivation(&self, x: &[C], z: &[C], y: &[C]) -> Vec<C> {
        let l = self.mul(&self.mul(x, y), z);
        let r = self.mul(x, &self.mul(y, z));
        l.into_iter().zip(r).map(|(a, b)| a - b).collect()
    }

    /// Matrix of `∂_{x,z}`, column `k` the image of basis element `k`.
    pub fn derivation_matrix(&self, x: &[C], z: &[C]) -> Vec<Vec<C>> {
        let cols: Vec<Vec<C>> = (0..self.dim()).map(|k| self.inner_derivation(x, z, &self.basis(k))).collect();
        (0..self.dim()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    fn degree_of(&self, idx: &[usize]) -> Option<bool> {
        self.grading.as_ref().map(|(deg, cap)| idx.iter().map(|&i| deg[i]).sum::<usize>() <= *cap)
    }

    /// The Jordan identity on every quadruple of basis elements.
    pub fn jordan_identity_check(&self) -> IdentityReport {
        let n = self.dim();
        let quads: Vec<[usize; 4]> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| [i, j, k, l]))))
            .collect();
        let add = |a: &Vec<C>, b: &Vec<C>| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect::<Vec<C>>();
        let sub = |a: &Vec<C>, b: &Vec<C>| a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect::<Vec<C>>();
        let violations: Vec<[usize; 4]> = quads
            .into_par_iter()
            .filter(|q| self.degree_of(q) != Some(false))
            .filter(|q| {
                let [x, y, z, t] = q.map(|i| self.basis(i));
                let v = jordan_identity(|a: &Vec<C>, b: &Vec<C>| self.mul(a, b), add, sub, &x, &y, &z, &t);
                v.iter().any(|c| !c.is_zero())
            })
            .collect();
        IdentityReport { checked: n.pow(4), violations }
    }

    /// Derivation property of every `∂_{x,z}` on every product of basis elements.
    pub fn derivation_check(&self) -> Vec<[usize; 4]> {
        let n = self.dim();
        let mut bad = Vec::new();
        for x in 0..n {
            for z in 0..n {
                let (bx, bz) = (self.basis(x), self.basis(z));
                for a in 0..n {
                    for b in a..n {
                        let (ba, bb) = (self.basis(a), self.basis(b));
                        let lhs = self.inner_derivation(&bx, &bz, &self.mul(&ba, &bb));
                        let r1 = self.mul(&self.inner_derivation(&bx, &bz, &ba), &bb);
                        let r2 = self.mul(&ba, &self.inner_derivation(&bx, &bz, &bb));
                        if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (p, q))| l.clone() != p.clone() + q.clone()) {
                            bad.push([x, z, a, b]);
                        }
                    }
                }
            }
        }
        bad
    }

    pub fn to_json(&self) -> JordanJson {
        let mut products = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let value: BTreeMap<String, String> = self.table[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.labels[k].clone(), c.to_string()))
                    .collect();
                if !value.is_empty() {
                    products.push(ProductJson { x: self.labels[i].clone(), y: self.labels[j].clone(), value });
                }
            }
        }
        JordanJson { basis: self.labels.clone(), products }
    }

    pub fn from_json(raw: &JordanJson) -> Result<Self> {
        let n = raw.basis.len();
        let find = |name: &str| {
            raw.basis.iter().position(|b| b == name).ok_or_else(|| Error::Schema(format!("unknown basis element {name:?}")))
        };
        let mut table = vec![vec![vec![C::zero(); n]; n]; n];
        let mut seen = vec![vec![false; n]; n];
        for p in &raw.products {
            let (i, j) = (find(&p.x)?, find(&p.y)?);
            let mut v = vec![C::zero(); n];
            for (name, c) in &p.value {
                v[find(name)?] = C::parse_exact(c).ok_or_else(|| Error::Schema(format!("bad coefficient {c:?}")))?;
            }
            if seen[j][i] && i != j && table[j][i] != v {
                return Err(Error::NotSymmetric(format!("{} · {} given twice with different values", p.x, p.y)));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            table[i][j] = v.clone();
            table[j][i] = v;
        }
        JordanAlg::new(raw.basis.clone(), table)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    pub x: String,
    pub y: String,
    pub value: BTreeMap<String, String>,
}

/// `{"basis": [...], "products": [{"x", "y", "value": {name: "p/q"}}]}`;
/// unlisted products are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanJson {
    pub basis: Vec<String>,
    pub products: Vec<ProductJson>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: usize,
    pub violations: Vec<[usize; 4]>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Alphabet `x1, …, xb` of weight zero.
pub fn plain_alphabet(b: usize) -> Alphabet {
    Alphabet::new((1..=b).map(|i| Generator::new(format!("x{i}"), 0, 0, i as i64)).collect()).expect("distinct names")
}

/// Homogeneous components of a subspace of the tensor algebra `T(B)`,
/// each in reduced echelon form.
#[derive(Debug, Clone)]
pub struct SpecialJordanSpace<C: Scalar> {
    pub b: usize,
    /// Index `d - 1` holds degree `d`.
    pub per_degree: Vec<RowSpace<Word, C>>,
}

impl<C: Scalar> SpecialJordanSpace<C> {
    pub fn max_deg(&self) -> usize {
        self.per_degree.len()
    }

    pub fn dim(&self, d: usize) -> usize {
        if d == 0 || d > self.max_deg() {
            0
        } else {
            self.per_degree[d - 1].rank()
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (1..=self.max_deg()).map(|d| self.dim(d)).collect()
    }

    /// Canonical basis of degree `d`.
    pub fn basis(&self, d: usize) -> Vec<NcPoly<C>> {
        if d == 0 || d > self.max_deg() {
            return Vec::new();
        }
        self.per_degree[d - 1].rows().iter().cloned().map(Poly::from_map).collect()
    }

    /// Coordinates in [`basis`](Self::basis), if `p` lies in degree `d`.
    pub fn coordinates(&self, d: usize, p: &NcPoly<C>) -> Option<Vec<C>> {
        if d == 0 || d > self.max_deg() {
            return p.is_zero().then(Vec::new);
        }
        self.per_degree[d - 1].coordinates(p.as_map())
    }

    pub fn contains(&self, d: usize, p: &NcPoly<C>) -> bool {
        self.coordinates(d, p).is_some()
    }
}

/// Row space whose insertion order is its canonical order.
fn canonical<C: Scalar>(space: RowSpace<Word, C>) -> RowSpace<Word, C> {
    RowSpace::from_vectors(space.canonical_rows())
}

fn span_of_products<C: Scalar>(
    lower: &[Vec<NcPoly<C>>],
    d: usize,
    op: impl Fn(&NcPoly<C>, &NcPoly<C>) -> NcPoly<C> + Sync,
    symmetric: bool,
) -> RowSpace<Word, C> {
    let splits: Vec<(usize, usize)> = (1..d).filter(|&i| !symmetric || i <= d - i).map(|i| (i, d - i)).collect();
    let products: Vec<NcPoly<C>> = splits
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (ps, qs) = (&lower[i - 1], &lower[j - 1]);
            let op = &op;
            ps.iter().enumerate().flat_map(move |(a, p)| {
                qs.iter().enumerate().filter(move |(c, _)| !(symmetric && i == j && *c < a)).map(move |(_, q)| op(p, q))
            })
        })
        .collect();
    canonical(RowSpace::from_vectors(products.into_iter().map(Poly::into_map)))
}

/// The Jordan subalgebra of `(T(B), ∘)` generated by `B`, through `max_deg`.
pub fn sjord_space<C: Scalar>(b: usize, max_deg: usize) -> SpecialJordanSpace<C> {
    let mut bases: Vec<Vec<NcPoly<C>>> = Vec::new();
    let mut per_degree = Vec::new();
    for d in 1..=max_deg {
        let space = if d == 1 {
            canonical(RowSpace::from_vectors((0..b as Letter).map(|l| BTreeMap::from([(Word::new(&[l]), C::one())]))))
        } else {
            span_of_products(&bases, d, jordan_product, true)
        };
        bases.push(space.rows().iter().cloned().map(Poly::from_map).collect());
        per_degree.push(space);
    }
    SpecialJordanSpace { b, per_degree }
}

/// `[SJ, SJ]` through the top degree of `sj`, commutators taken in `T(B)`.
pub fn commutator_space<C: Scalar>(sj: &SpecialJordanSpace<C>) -> SpecialJordanSpace<C> {
    let bases: Vec<Vec<NcPoly<C>>> = (1..=sj.max_deg()).map(|d| sj.basis(d)).collect();
    let per_degree = (1..=sj.max_deg())
        .map(|d| if d == 1 { RowSpace::new() } else { span_of_products(&bases, d, commutator, true) })
        .collect();
    SpecialJordanSpace { b: sj.b, per_degree }
}

/// Largest arity accepted by [`multilinear_dim`].
pub const MULTILINEAR_MAX: usize = 5;

/// Dimension of the multilinear part of the free special Jordan algebra
/// on `n` generators.
pub fn multilinear_dim(n: usize) -> Result<usize> {
    type Q = num_rational::BigRational;
    if n > MULTILINEAR_MAX {
        return Err(Error::Resource(format!(
            "multilinear component needs spans inside a space of dimension {n}! > {}!; arity is capped at {MULTILINEAR_MAX}",
            MULTILINEAR_MAX
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    // spans[S] for subsets S of {0..n}
    let mut spans: Vec<Vec<NcPoly<Q>>> = vec![Vec::new(); 1 << n];
    for i in 0..n {
        spans[1 << i] = vec![Poly::monomial(Word::new(&[i as Letter]), Q::from_int(1))];
    }
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for s in masks.into_iter().filter(|m| m.count_ones() >= 2) {
        let low = s & s.wrapping_neg();
        let mut space = RowSpace::<Word, Q>::new();
        // sub runs over proper subsets containing the lowest element
        let mut sub = (s - 1) & s;
        while sub > 0 {
            if sub & low != 0 {
                for p in &spans[sub] {
                    for q in &spans[s ^ sub] {
                        space.insert(jordan_product(p, q).into_map());
                    }
                }
            }
            sub = (sub - 1) & s;
        }
        spans[s] = space.rows().iter().cloned().map(Poly::from_map).collect();
    }
    Ok(spans[(1 << n) - 1].len())
}
