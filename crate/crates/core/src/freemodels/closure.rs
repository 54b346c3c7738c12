use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::alphabet::Letter;
use crate::error::Result;
use crate::jordan::{commutator_space, sjord_space};
use crate::linalg::{axpy, RowSpace, SparseVec};
use crate::scalar::Scalar;
use crate::sl2::{decompose, Character, IrrDecomp};
use crate::Rational;

use super::{AlgebraModel, AssKey, AssModel};

/// The Lie subalgebra of the associative model generated by `L(2)⊗B`,
/// stored per degree and weight.
#[derive(Debug, Clone)]
pub struct LieClosure<C: Scalar> {
    pub b: usize,
    /// `per_degree[d-1][weight]`
    pub per_degree: Vec<BTreeMap<i64, RowSpace<AssKey, C>>>,
}

impl<C: Scalar> LieClosure<C> {
    pub fn max_deg(&self) -> usize {
        self.per_degree.len()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.per_degree.get(d.wrapping_sub(1)).map_or(0, |ws| ws.values().map(RowSpace::rank).sum())
    }

    pub fn character(&self, d: usize) -> Character {
        match self.per_degree.get(d.wrapping_sub(1)) {
            Some(ws) => Character::from_pairs(ws.iter().map(|(&w, s)| (w, s.rank() as u64))),
            None => Character::new(),
        }
    }

    pub fn decomposition(&self, d: usize) -> Result<IrrDecomp> {
        decompose(&self.character(d))
    }

    pub fn basis(&self, d: usize) -> Vec<SparseVec<AssKey, C>> {
        self.per_degree[d - 1].values().flat_map(|s| s.rows().iter().cloned()).collect()
    }

    /// Brackets `[L_i, L_j]` with `i + j ≤ max_deg` falling outside
    /// `L_{i+j}`; empty for a closed family.
    pub fn closure_defects(&self, model: &AssModel<C>) -> Result<Vec<(usize, usize)>> {
        let mut bad = Vec::new();
        for d in 2..=self.max_deg() {
            for i in 1..d {
                let new = brackets(model, &self.basis(i), &self.basis(d - i))?;
                let space = &self.per_degree[d - 1];
                if new.iter().any(|(w, v)| !space.get(w).is_some_and(|s| s.contains(v))) {
                    bad.push((i, d - i));
                }
            }
        }
        Ok(bad)
    }
}

fn bracket<C: Scalar>(model: &AssModel<C>, x: &SparseVec<AssKey, C>, y: &SparseVec<AssKey, C>) -> Result<SparseVec<AssKey, C>> {
    let mut out = model.mul(x, y)?;
    axpy(&mut out, &-C::one(), &model.mul(y, x)?);
    Ok(out)
}

/// Nonzero brackets of two weight-homogeneous families, tagged by weight.
fn brackets<C: Scalar>(
    model: &AssModel<C>,
    xs: &[SparseVec<AssKey, C>],
    ys: &[SparseVec<AssKey, C>],
) -> Result<Vec<(i64, SparseVec<AssKey, C>)>> {
    let pairs: Vec<(usize, usize)> = (0..xs.len()).flat_map(|i| (0..ys.len()).map(move |j| (i, j))).collect();
    let out = pairs
        .into_par_iter()
        .map(|(i, j)| bracket(model, &xs[i], &ys[j]))
        .collect::<Result<Vec<_>>>()?;
    Ok(out
        .into_iter()
        .filter(|v| !v.is_empty())
        .map(|v| {
            let w = model.weight(v.keys().next().expect("nonzero"));
            (w, v)
        })
        .collect())
}

/// Lie closure of the degree-one generators of `AssModel(0, b)` through
/// `max_deg`; degree `d` is spanned by all `[L_i, L_{d-i}]`.
pub fn lie_closure<C: Scalar>(b: usize, max_deg: usize) -> Result<LieClosure<C>> {
    let model = AssModel::<C>::new(0, b, max_deg);
    let mut per_degree: Vec<BTreeMap<i64, RowSpace<AssKey, C>>> = Vec::new();
    for d in 1..=max_deg {
        let mut spaces: BTreeMap<i64, RowSpace<AssKey, C>> = BTreeMap::new();
        if d == 1 {
            for l in 0..3 * b {
                let g = model.generator(l as Letter);
                let w = model.weight(g.keys().next().expect("generator"));
                spaces.entry(w).or_default().insert(g);
            }
        } else {
            let closure = LieClosure { b, per_degree: per_degree.clone() };
            for i in 1..=d / 2 {
                for (w, v) in brackets(&model, &closure.basis(i), &closure.basis(d - i))? {
                    spaces.entry(w).or_default().insert(v);
                }
            }
        }
        per_degree.push(spaces);
    }
    Ok(LieClosure { b, per_degree })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: usize,
    pub closure: IrrDecomp,
    pub sj_dim: usize,
    pub commutator_dim: usize,
}

impl DegreeComparison {
    pub fn passed(&self) -> bool {
        let other = self.closure.iter().any(|(n, m)| m > 0 && n != 0 && n != 2);
        !other && self.closure.mult(2) == self.sj_dim as u64 && self.closure.mult(0) == self.commutator_dim as u64
    }
}

#[derive(Debug, Clone)]
pub struct Theorem5Report {
    pub b: usize,
    pub degrees: Vec<DegreeComparison>,
}

impl Theorem5Report {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(DegreeComparison::passed)
    }
}

/// Compares the isotypic components of the Lie closure with the special
/// Jordan algebra on `b` generators and its commutator span, degree by
/// degree.
pub fn theorem5_check(b: usize, max_deg: usize) -> Result<Theorem5Report> {
    let closure = lie_closure::<Rational>(b, max_deg)?;
    let sj = sjord_space::<Rational>(b, max_deg);
    let comm = commutator_space(&sj);
    let degrees = (1..=max_deg)
        .map(|d| {
            Ok(DegreeComparison {
                degree: d,
                closure: closure.decomposition(d)?,
                sj_dim: sj.dim(d),
                commutator_dim: comm.dim(d),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Theorem5Report { b, degrees })
}
