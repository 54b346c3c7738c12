//! Sparse exact linear algebra.
//!
//! [`RowSpace`] keeps a subspace in reduced row echelon form. The pivot of
//! each row is its largest key and carries coefficient one; no row has a
//! nonzero entry at another row's pivot.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseVec<K, C> = BTreeMap<K, C>;

pub fn axpy<K: Ord + Clone, C: Scalar>(y: &mut SparseVec<K, C>, a: &C, x: &SparseVec<K, C>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let add = a.clone() * v.clone();
        match y.get_mut(k) {
            Some(cur) => {
                let s = cur.clone() + add;
                if s.is_zero() {
                    y.remove(k);
                } else {
                    *cur = s;
                }
            }
            None => {
                y.insert(k.clone(), add);
            }
        }
    }
}

pub fn scale<K: Ord + Clone, C: Scalar>(x: &SparseVec<K, C>, a: &C) -> SparseVec<K, C> {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(k, v)| (k.clone(), v.clone() * a.clone())).collect()
}

#[derive(Debug, Clone)]
pub struct RowSpace<K: Ord + Clone, C: Scalar> {
    rows: Vec<SparseVec<K, C>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone, C: Scalar> Default for RowSpace<K, C> {
    fn default() -> Self {
        RowSpace { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Scalar> RowSpace<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors(vs: impl IntoIterator<Item = SparseVec<K, C>>) -> Self {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &SparseVec<K, C>) -> SparseVec<K, C> {
        let mut r = v.clone();
        let hits: Vec<usize> = v.keys().filter_map(|k| self.pivots.get(k).copied()).collect();
        for i in hits {
            let row = &self.rows[i];
            let (p, _) = row.last_key_value().expect("rows are nonzero");
            if let Some(c) = r.get(p).cloned() {
                axpy(&mut r, &-c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec<K, C>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K, C>) -> bool {
        let r = self.reduce(&v);
        let Some((p, c)) = r.last_key_value() else {
            return false;
        };
        let p = p.clone();
        let r = scale(&r, &(C::one() / c.clone()));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Rows in insertion order.
    pub fn rows(&self) -> &[SparseVec<K, C>] {
        &self.rows
    }

    /// Rows sorted by decreasing pivot: a canonical basis of the span.
    pub fn canonical_rows(&self) -> Vec<SparseVec<K, C>> {
        self.pivots.iter().rev().map(|(_, &i)| self.rows[i].clone()).collect()
    }

    pub fn pivot_keys(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.pivots.contains_key(k)
    }

    /// Coefficients of `v` in the basis [`rows`](Self::rows), or `None` if
    /// `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec<K, C>) -> Option<Vec<C>> {
        let mut coords = vec![C::zero(); self.rows.len()];
        for (k, c) in v {
            if let Some(&i) = self.pivots.get(k) {
                coords[i] = c.clone();
            }
        }
        let mut r = v.clone();
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut r, &-c.clone(), &self.rows[i]);
            }
        }
        r.is_empty().then_some(coords)
    }

    pub fn same_span(&self, other: &Self) -> bool {
        self.rank() == other.rank() && other.rows.iter().all(|r| self.contains(r))
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<K: Ord + Clone, C: Scalar>(vs: impl IntoIterator<Item = SparseVec<K, C>>) -> usize {
    RowSpace::from_vectors(vs).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    type Q = BigRational;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32, Q> {
        entries.iter().filter(|e| e.1 != 0).map(|&(k, c)| (k, Q::from_int(c))).collect()
    }

    #[test]
    fn rref_and_coordinates() {
        let mut s = RowSpace::new();
        assert!(s.insert(v(&[(0, 1), (1, 2), (2, 3)])));
        assert!(s.insert(v(&[(0, 1), (1, 1), (2, 3)])));
        assert!(!s.insert(v(&[(0, 2), (1, 3), (2, 6)])));
        assert_eq!(s.rank(), 2);
        // reduced: no row has an entry at the other row's pivot
        for r in s.rows() {
            let p = r.last_key_value().unwrap().0;
            assert!(r[p].is_one());
            for other in s.rows() {
                if other != r {
                    assert!(!other.contains_key(p));
                }
            }
        }
        let c = s.coordinates(&v(&[(0, 3), (1, 4), (2, 9)])).unwrap();
        let mut back = SparseVec::new();
        for (ci, r) in c.iter().zip(s.rows()) {
            axpy(&mut back, ci, r);
        }
        assert_eq!(back, v(&[(0, 3), (1, 4), (2, 9)]));
        assert!(s.coordinates(&v(&[(2, 1)])).is_none());
    }

    proptest! {
        #[test]
        fn rank_is_order_independent(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 0..6)) {
            let vecs: Vec<_> = rows.iter().map(|r| v(&r.iter().enumerate().map(|(i, &c)| (i as u32, c)).collect::<Vec<_>>())).collect();
            let a = RowSpace::from_vectors(vecs.clone());
            let b = RowSpace::from_vectors(vecs.into_iter().rev());
            prop_assert!(a.same_span(&b));
            prop_assert_eq!(a.canonical_rows(), b.canonical_rows());
        }
    }
}
