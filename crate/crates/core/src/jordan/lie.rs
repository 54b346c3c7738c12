//! Lie algebras built from Jordan algebras: the functorial construction on
//! `𝔅(J) = Λ²J / span{z ∧ z²}` and the one on inner derivations, plus
//! Jacobi certification of structure tables.
//!
//! `𝔅(J)` acts on `J` by `x ∧ z ↦ -4·∂_{x,z}`. With the Killing form
//! normalized by `K(e,f) = ½` this is the scaling for which Jacobi holds;
//! in a special algebra `-4·∂_{x,z} = ad_{[x,z]}`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::alphabet::Sl2Basis;
use crate::error::{Error, Result};
use crate::linalg::{axpy, RowSpace, SparseVec};
use crate::scalar::Scalar;

use super::JordanAlg;

pub type Vector<C> = SparseVec<usize, C>;

/// A finite-dimensional Lie algebra by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct LieTable<C: Scalar> {
    pub labels: Vec<String>,
    /// `(sl2 weight, degree)` of each basis element; degree 0 when ungraded.
    pub tags: Vec<(i64, usize)>,
    brackets: Vec<Vec<Vector<C>>>,
}

impl<C: Scalar> LieTable<C> {
    pub fn new(labels: Vec<String>, tags: Vec<(i64, usize)>, brackets: Vec<Vec<Vector<C>>>) -> Result<Self> {
        let n = labels.len();
        if tags.len() != n || brackets.len() != n || brackets.iter().any(|r| r.len() != n) {
            return Err(Error::Schema(format!("bracket table must be {n}×{n}")));
        }
        Ok(LieTable { labels, tags, brackets })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector<C> {
        &self.brackets[i][j]
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector<C>) {
        self.brackets[i][j] = v;
    }

    pub fn bracket(&self, x: &Vector<C>, y: &Vector<C>) -> Vector<C> {
        let mut out = Vector::new();
        for (&i, a) in x {
            for (&j, b) in y {
                axpy(&mut out, &(a.clone() * b.clone()), &self.brackets[i][j]);
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vector<C> {
        BTreeMap::from([(i, C::one())])
    }

    /// The standard `sl2` table on `e, h, f`.
    pub fn sl2() -> Self {
        let labels = Sl2Basis::ALL.iter().map(|u| u.symbol().to_string()).collect();
        let tags = Sl2Basis::ALL.iter().map(|u| (u.weight(), 0)).collect();
        let mut brackets = vec![vec![Vector::new(); 3]; 3];
        for (i, &u) in Sl2Basis::ALL.iter().enumerate() {
            for (j, &v) in Sl2Basis::ALL.iter().enumerate() {
                if let Some((c, w)) = sl2_bracket::<C>(u, v) {
                    brackets[i][j] = BTreeMap::from([(sl2_index(w), c)]);
                }
            }
        }
        LieTable { labels, tags, brackets }
    }
}

fn sl2_index(u: Sl2Basis) -> usize {
    Sl2Basis::ALL.iter().position(|&v| v == u).expect("listed")
}

/// `[u, v]` in `sl2` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2_bracket<C: Scalar>(u: Sl2Basis, v: Sl2Basis) -> Option<(C, Sl2Basis)> {
    use Sl2Basis::*;
    match (u, v) {
        (E, F) => Some((C::one(), H)),
        (F, E) => Some((-C::one(), H)),
        (H, E) => Some((C::from_int(2), E)),
        (E, H) => Some((C::from_int(-2), E)),
        (H, F) => Some((C::from_int(-2), F)),
        (F, H) => Some((C::from_int(2), F)),
        _ => None,
    }
}

/// Killing form normalized by `K(e,f) = ½`, `K(h,h) = 1`.
pub fn killing<C: Scalar>(u: Sl2Basis, v: Sl2Basis) -> C {
    use Sl2Basis::*;
    match (u, v) {
        (E, F) | (F, E) => C::half(),
        (H, H) => C::one(),
        _ => C::zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples: usize,
    pub antisymmetry: Vec<(usize, usize)>,
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

/// Antisymmetry on all pairs, Jacobi on all triples of basis elements.
pub fn jacobi_check<C: Scalar>(l: &LieTable<C>) -> JacobiReport {
    let n = l.dim();
    let mut antisymmetry = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut s = l.brackets[i][j].clone();
            axpy(&mut s, &C::one(), &l.brackets[j][i]);
            if !s.is_empty() {
                antisymmetry.push((i, j));
            }
        }
    }
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))).collect();
    let count = triples.len();
    let jacobi = triples
        .into_par_iter()
        .filter(|&(i, j, k)| {
            let mut s = l.bracket(&l.brackets[i][j], &l.unit(k));
            axpy(&mut s, &C::one(), &l.bracket(&l.brackets[j][k], &l.unit(i)));
            axpy(&mut s, &C::one(), &l.bracket(&l.brackets[k][i], &l.unit(j)));
            !s.is_empty()
        })
        .collect();
    JacobiReport { triples: count, antisymmetry, jacobi }
}

fn dense_to_sparse<C: Scalar>(v: &[C]) -> Vector<C> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

type Matrix<C> = Vec<Vec<C>>;

fn mat_vec<C: Scalar>(m: &Matrix<C>, v: &[C]) -> Vec<C> {
    m.iter().map(|row| row.iter().zip(v).fold(C::zero(), |s, (a, b)| s + a.clone() * b.clone())).collect()
}

fn mat_mul<C: Scalar>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(C::zero(), |s, k| s + a[i][k].clone() * b[k][j].clone())).collect()).collect()
}

fn flatten<C: Scalar>(m: &Matrix<C>) -> Vector<C> {
    let n = m.len();
    m.iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i * n + j, c)))
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Shared data of both constructions on one Jordan algebra.
pub struct Constructions<'a, C: Scalar> {
    j: &'a JordanAlg<C>,
    degrees: Vec<usize>,
    /// `(i, j)` with `i < j`, indexing `Λ²J`.
    pairs: Vec<(usize, usize)>,
    pair_index: BTreeMap<(usize, usize), usize>,
    /// Polarizations of `z ↦ z ∧ z²`.
    w: RowSpace<usize, C>,
    /// Pairs representing a basis of `𝔅(J)`.
    b_basis: Vec<usize>,
    /// Action of each pair on `J`: `-4·∂`.
    rho: Vec<Matrix<C>>,
    /// `Inner(J)` as flattened matrices, canonical order.
    inner: RowSpace<usize, C>,
}

impl<'a, C: Scalar> Constructions<'a, C> {
    pub fn new(j: &'a JordanAlg<C>) -> Result<Self> {
        let n = j.dim();
        let degrees = match &j.grading {
            Some((d, _)) => d.clone(),
            None => vec![0; n],
        };
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let pair_index = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut c = Constructions {
            j,
            degrees,
            pairs,
            pair_index,
            w: RowSpace::new(),
            b_basis: Vec::new(),
            rho: Vec::new(),
            inner: RowSpace::new(),
        };
        let mut w = RowSpace::new();
        for x in 0..n {
            for y in x..n {
                for z in y..n {
                    w.insert(c.polarization(x, y, z));
                }
            }
        }
        c.b_basis = (0..c.pairs.len()).filter(|k| !w.is_pivot(k)).collect();
        c.w = w;
        let minus_four = C::from_int(-4);
        c.rho = c
            .pairs
            .par_iter()
            .map(|&(a, b)| {
                j.derivation_matrix(&j.basis(a), &j.basis(b))
                    .into_iter()
                    .map(|row| row.into_iter().map(|x| x * minus_four.clone()).collect())
                    .collect()
            })
            .collect();
        for row in c.w.rows() {
            if !c.act(row).iter().flatten().all(|x| x.is_zero()) {
                return Err(Error::Integrity("Λ²J acts nontrivially through span{z ∧ z²}".into()));
            }
        }
        let inner = RowSpace::from_vectors(c.rho.iter().map(flatten));
        c.inner = RowSpace::from_vectors(inner.canonical_rows());
        Ok(c)
    }

    /// `x ∧ z` for dense vectors, over pair indices.
    fn wedge(&self, x: &[C], z: &[C]) -> Vector<C> {
        let mut out = Vector::new();
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, zb) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if a == b {
                    continue;
                }
                let (k, sign) = if a < b { (self.pair_index[&(a, b)], C::one()) } else { (self.pair_index[&(b, a)], -C::one()) };
                axpy(&mut out, &(sign * xa.clone() * zb.clone()), &BTreeMap::from([(k, C::one())]));
            }
        }
        out
    }

    /// `x ∧ (y∘z) + y ∧ (x∘z) + z ∧ (x∘y)` on basis elements.
    fn polarization(&self, x: usize, y: usize, z: usize) -> Vector<C> {
        let j = self.j;
        let (bx, by, bz) = (j.basis(x), j.basis(y), j.basis(z));
        let mut v = self.wedge(&bx, j.product(y, z));
        axpy(&mut v, &C::one(), &self.wedge(&by, j.product(x, z)));
        axpy(&mut v, &C::one(), &self.wedge(&bz, j.product(x, y)));
        v
    }

    /// Span of `z ∧ z²` over the given samples.
    pub fn cubic_span(&self, samples: &[Vec<C>]) -> RowSpace<usize, C> {
        RowSpace::from_vectors(samples.iter().map(|z| self.wedge(z, &self.j.mul(z, z))))
    }

    pub fn polarization_span(&self) -> &RowSpace<usize, C> {
        &self.w
    }

    pub fn b_dim(&self) -> usize {
        self.b_basis.len()
    }

    pub fn inner_dim(&self) -> usize {
        self.inner.rank()
    }

    /// Operator of an element of `Λ²J`.
    fn act(&self, v: &Vector<C>) -> Matrix<C> {
        let n = self.j.dim();
        let mut m = vec![vec![C::zero(); n]; n];
        for (&k, c) in v {
            for (row, src) in m.iter_mut().zip(&self.rho[k]) {
                for (x, y) in row.iter_mut().zip(src) {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
        }
        m
    }

    /// Coordinates of the class of `v ∈ Λ²J` in the basis of `𝔅(J)`.
    fn class(&self, v: &Vector<C>) -> Vector<C> {
        let r = self.w.reduce(v);
        r.into_iter()
            .map(|(k, c)| (self.b_basis.binary_search(&k).expect("reduced pairs are non-pivots"), c))
            .collect()
    }

    fn inner_coords(&self, m: &Matrix<C>) -> Result<Vector<C>> {
        let coords = self
            .inner
            .coordinates(&flatten(m))
            .ok_or_else(|| Error::Integrity("operator outside the span of inner derivations".into()))?;
        Ok(dense_to_sparse(&coords))
    }

    fn inner_matrix(&self, k: usize) -> Matrix<C> {
        let n = self.j.dim();
        let v = &self.inner.rows()[k];
        (0..n).map(|i| (0..n).map(|j| v.get(&(i * n + j)).cloned().unwrap_or_else(C::zero)).collect()).collect()
    }

    fn sl2_labels(&self) -> (Vec<String>, Vec<(i64, usize)>, Vec<(Sl2Basis, usize)>) {
        let mut labels = Vec::new();
        let mut tags = Vec::new();
        let mut roles = Vec::new();
        for u in Sl2Basis::ALL {
            for k in 0..self.j.dim() {
                labels.push(format!("{}⊗{}", u.symbol(), self.j.labels[k]));
                tags.push((u.weight(), self.degrees[k]));
                roles.push((u, k));
            }
        }
        (labels, tags, roles)
    }

    /// Brackets within `L(2)⊗J`; `zero_part` sends `z₁ ∧ z₂` to the
    /// `L(0)` part, which occupies the first `off` coordinates.
    fn fill_adjoint(
        &self,
        brackets: &mut [Vec<Vector<C>>],
        off: usize,
        roles: &[(Sl2Basis, usize)],
        zero_part: impl Fn(&Vector<C>) -> Result<Vector<C>>,
    ) -> Result<()> {
        let n = self.j.dim();
        for (p, &(u1, z1)) in roles.iter().enumerate() {
            for (q, &(u2, z2)) in roles.iter().enumerate() {
                let mut v = Vector::new();
                let k = killing::<C>(u1, u2);
                if !k.is_zero() {
                    let wedge = self.wedge(&self.j.basis(z1), &self.j.basis(z2));
                    axpy(&mut v, &k, &zero_part(&wedge)?);
                }
                if let Some((c, w)) = sl2_bracket::<C>(u1, u2) {
                    let prod = self.j.product(z1, z2);
                    let base = off + sl2_index(w) * n;
                    for (i, x) in prod.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        axpy(&mut v, &(c.clone() * x.clone()), &BTreeMap::from([(base + i, C::one())]));
                    }
                }
                brackets[off + p][off + q] = v;
            }
        }
        Ok(())
    }

    /// `[d, u⊗j] = u⊗d(j)` for operators of the `L(0)` part.
    fn fill_action(&self, brackets: &mut [Vec<Vector<C>>], off: usize, roles: &[(Sl2Basis, usize)], ops: &[Matrix<C>]) {
        let n = self.j.dim();
        for (a, m) in ops.iter().enumerate() {
            for (p, &(u, z)) in roles.iter().enumerate() {
                let image = mat_vec(m, &self.j.basis(z));
                let base = off + sl2_index(u) * n;
                let v: Vector<C> = image
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (base + i, x.clone()))
                    .collect();
                let neg: Vector<C> = v.iter().map(|(&k, c)| (k, -c.clone())).collect();
                brackets[a][off + p] = v;
                brackets[off + p][a] = neg;
            }
        }
    }

    pub fn tag(&self) -> Result<LieTable<C>> {
        let m = self.b_dim();
        let (l2_labels, l2_tags, roles) = self.sl2_labels();
        let mut labels: Vec<String> = self
            .b_basis
            .iter()
            .map(|&k| {
                let (a, b) = self.pairs[k];
                format!("1⊗[{}∧{}]", self.j.labels[a], self.j.labels[b])
            })
            .collect();
        let mut tags: Vec<(i64, usize)> = self
            .b_basis
            .iter()
            .map(|&k| {
                let (a, b) = self.pairs[k];
                (0, self.degrees[a] + self.degrees[b])
            })
            .collect();
        labels.extend(l2_labels);
        tags.extend(l2_tags);
        let total = labels.len();
        let mut brackets = vec![vec![Vector::new(); total]; total];
        for (p, &kp) in self.b_basis.iter().enumerate() {
            let op = &self.rho[kp];
            for (q, &kq) in self.b_basis.iter().enumerate() {
                let (a, b) = self.pairs[kq];
                let (ea, eb) = (self.j.basis(a), self.j.basis(b));
                let mut v = self.wedge(&mat_vec(op, &ea), &eb);
                axpy(&mut v, &C::one(), &self.wedge(&ea, &mat_vec(op, &eb)));
                brackets[p][q] = self.class(&v);
            }
        }
        let ops: Vec<Matrix<C>> = self.b_basis.iter().map(|&k| self.rho[k].clone()).collect();
        self.fill_action(&mut brackets, m, &roles, &ops);
        self.fill_adjoint(&mut brackets, m, &roles, |w| Ok(self.class(w)))?;
        LieTable::new(labels, tags, brackets)
    }

    pub fn tkk_inner(&self) -> Result<LieTable<C>> {
        let m = self.inner_dim();
        let (l2_labels, l2_tags, roles) = self.sl2_labels();
        let ops: Vec<Matrix<C>> = (0..m).map(|k| self.inner_matrix(k)).collect();
        let mut labels: Vec<String> = (0..m).map(|k| format!("1⊗D{k}")).collect();
        let mut tags: Vec<(i64, usize)> = (0..m).map(|k| (0, self.operator_degree(&ops[k]))).collect();
        labels.extend(l2_labels);
        tags.extend(l2_tags);
        let total = labels.len();
        let mut brackets = vec![vec![Vector::new(); total]; total];
        for p in 0..m {
            for q in 0..m {
                let mut c = mat_mul(&ops[p], &ops[q]);
                let d = mat_mul(&ops[q], &ops[p]);
                for (r, s) in c.iter_mut().zip(&d) {
                    for (x, y) in r.iter_mut().zip(s) {
                        *x = x.clone() - y.clone();
                    }
                }
                brackets[p][q] = self.inner_coords(&c)?;
            }
        }
        self.fill_action(&mut brackets, m, &roles, &ops);
        self.fill_adjoint(&mut brackets, m, &roles, |w| self.inner_coords(&self.act(w)))?;
        LieTable::new(labels, tags, brackets)
    }

    /// Degree shift of a homogeneous operator on a graded algebra.
    fn operator_degree(&self, m: &Matrix<C>) -> usize {
        for (i, row) in m.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    return self.degrees[i].saturating_sub(self.degrees[k]);
                }
            }
        }
        0
    }

    /// Image of each basis element of the first table in the second under
    /// `class(x∧z) ↦ -4·∂_{x,z}`, identity on `L(2)⊗J`.
    pub fn surjection(&self) -> Result<Vec<Vector<C>>> {
        let m = self.inner_dim();
        let mut out = Vec::new();
        for &k in &self.b_basis {
            out.push(self.inner_coords(&self.rho[k])?);
        }
        for i in 0..3 * self.j.dim() {
            out.push(BTreeMap::from([(m + i, C::one())]));
        }
        Ok(out)
    }

    /// Pairs of basis elements on which the surjection fails to be a Lie map.
    pub fn intertwining_violations(&self) -> Result<Vec<(usize, usize)>> {
        let (tag, inner, phi) = (self.tag()?, self.tkk_inner()?, self.surjection()?);
        let map = |v: &Vector<C>| {
            let mut out = Vector::new();
            for (&i, c) in v {
                axpy(&mut out, c, &phi[i]);
            }
            out
        };
        let n = tag.dim();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if map(tag.bracket_basis(a, b)) != inner.bracket(&phi[a], &phi[b]) {
                    bad.push((a, b));
                }
            }
        }
        Ok(bad)
    }
}

/// `L(0)⊗𝔅(J) ⊕ L(2)⊗J`.
pub fn tag<C: Scalar>(j: &JordanAlg<C>) -> Result<LieTable<C>> {
    Constructions::new(j)?.tag()
}

/// `L(0)⊗Inner(J) ⊕ L(2)⊗J`.
pub fn tkk_inner<C: Scalar>(j: &JordanAlg<C>) -> Result<LieTable<C>> {
    Constructions::new(j)?.tkk_inner()
}
