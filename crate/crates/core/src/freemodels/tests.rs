use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::*;
use crate::groebner::verify_gb;
use crate::linalg::RowSpace;
use crate::sl2::{decompose, sl2_closure, IrrDecomp};
use crate::Rational as Q;

fn q(n: i64, d: i64) -> Q {
    Q::from_frac(n, d)
}

fn span<M: Monomial>(ps: &[Poly<M, Q>]) -> RowSpace<M, Q> {
    RowSpace::from_vectors(ps.iter().map(|p| p.as_map().clone()))
}

#[test]
fn com_relation_counts_and_sl2_span() {
    assert!(present_com::<Q>(2, 0).relations.is_empty());
    for b in 1..=3 {
        let pres = present_com::<Q>(0, b);
        assert_eq!(pres.relations.len(), 5 * b * (b + 1) / 2);
        let al = &pres.alphabet;
        let mut seeds = Vec::new();
        for i in 1..=b {
            for j in i..=b {
                let m = CommMonomial::from_letters(&[al.triple(E, i).unwrap(), al.triple(E, j).unwrap()]);
                seeds.push(Poly::monomial(m, Q::one()));
            }
        }
        let closed = sl2_closure(al, &seeds).unwrap();
        assert!(span(&closed).same_span(&span(&pres.relations)), "b = {b}");
        assert_eq!(span(&pres.relations).rank(), pres.relations.len());
    }
}

#[test]
fn com_b1_relations_render() {
    let pres = present_com::<Q>(0, 1);
    let shown: Vec<String> = pres.relations.iter().map(|r| r.render(&pres.alphabet)).collect();
    assert_eq!(shown.len(), 5);
    let ms: Vec<usize> = pres.relations.iter().map(|r| r.len()).collect();
    assert_eq!(ms, vec![1, 1, 1, 1, 2]);
    let he = CommMonomial::from_letters(&[0, 1]);
    assert_eq!(pres.relations[2].coeff(&he), Q::from_int(2));
}

#[test]
fn ass_relation_counts() {
    assert_eq!(present_ass::<Q>(0, 1, 5).relations.len(), 5);
    assert_eq!(present_ass::<Q>(0, 2, 5).relations.len(), 20);
    let p = present_ass::<Q>(1, 1, 4);
    assert_eq!(p.relations.len(), 15);
    assert_eq!(p.relations_through, Some(4));
    assert!(present_ass::<Q>(3, 0, 4).relations.is_empty());
}

#[test]
fn com_model_dims_and_products() {
    let m = ComModel::<Q>::new(0, 1);
    let dims: Vec<usize> = (0..=4).map(|d| m.basis(d).unwrap().len()).collect();
    assert_eq!(dims, vec![1, 3, 1, 0, 0]);
    let al = Alphabet::tkk(0, 1);
    let g = |u| m.generator(al.triple(u, 1).unwrap());
    let omega = BTreeMap::from([((CommMonomial::one(), BPart::Omega(1, 1)), Q::one())]);
    assert_eq!(m.mul(&g(E), &g(F)).unwrap(), BTreeMap::from([((CommMonomial::one(), BPart::Omega(1, 1)), q(1, 2))]));
    assert_eq!(m.mul(&g(H), &g(H)).unwrap(), omega);
    let m2 = ComModel::<Q>::new(0, 2);
    assert_eq!(m2.basis(2).unwrap().len(), 6);
    assert_eq!(decompose(&m2.character(2).unwrap()).unwrap(), IrrDecomp::from_pairs([(0, 3), (2, 1)]));
    assert_eq!(m2.basis(3).unwrap().len(), 0);
    assert_eq!(ComModel::<Q>::new(0, 3).basis(3).unwrap().len(), 1);
    assert_eq!(ComModel::<Q>::new(1, 1).basis(2).unwrap().len(), 1 + 3 + 1);
}

#[test]
fn com_model_commutative_and_associative() {
    for b in 1..=4 {
        let m = ComModel::<Q>::new(0, b);
        assert!(associativity_violations(&m, 4).unwrap().is_empty(), "b = {b}");
        let basis: Vec<_> = (0..=3).flat_map(|d| m.basis(d).unwrap()).collect();
        for x in &basis {
            for y in &basis {
                let (x, y) = (BTreeMap::from([(x.clone(), Q::one())]), BTreeMap::from([(y.clone(), Q::one())]));
                assert_eq!(m.mul(&x, &y).unwrap(), m.mul(&y, &x).unwrap());
            }
        }
    }
    assert!(associativity_violations(&ComModel::<Q>::new(2, 2), 4).unwrap().is_empty());
}

#[test]
fn ass_model_table_and_dims() {
    let m = AssModel::<Q>::new(0, 2, 5);
    let al = Alphabet::tkk(0, 2);
    let e1 = m.generator(al.triple(E, 1).unwrap());
    let f2 = m.generator(al.triple(F, 2).unwrap());
    let xy = Word::new(&[0, 1]);
    assert_eq!(
        m.mul(&e1, &f2).unwrap(),
        BTreeMap::from([((Mat::I, xy.clone()), q(1, 2)), ((Mat::H, xy), q(1, 2))])
    );
    let e2 = m.generator(al.triple(E, 2).unwrap());
    assert!(m.mul(&e1, &e2).unwrap().is_empty());
    let m1 = AssModel::<Q>::new(0, 1, 6);
    let dims: Vec<usize> = (0..=6).map(|d| m1.basis(d).unwrap().len()).collect();
    assert_eq!(dims, vec![1, 3, 4, 4, 4, 4, 4]);
    assert_eq!(m.basis(3).unwrap().len(), 4 * 8);
    assert!(matches!(m.basis(6), Err(Error::CappedDegree { degree: 6, cap: 5 })));
    let big = m.mul(&m.unit(), &m.generator(al.triple(H, 1).unwrap())).unwrap();
    let mut acc = big.clone();
    for _ in 0..4 {
        acc = m.mul(&acc, &big).unwrap();
    }
    assert!(matches!(m.mul(&acc, &big), Err(Error::CappedDegree { .. })));
    assert!(associativity_violations(&AssModel::<Q>::new(1, 1, 4), 4).unwrap().is_empty());
}

#[test]
fn models_match_presentations_small() {
    for b in 1..=2 {
        let r = model_vs_presentation(&ComModel::<Q>::new(0, b), 4, 100, 7).unwrap();
        assert!(r.passed(), "com b = {b}: {r:?}");
        assert!(r.products_checked >= 100);
    }
    let r = model_vs_presentation(&ComModel::<Q>::new(1, 2), 4, 100, 7).unwrap();
    assert!(r.passed(), "{r:?}");
    for (a, b) in [(0, 1), (0, 2), (1, 1)] {
        let r = model_vs_presentation(&AssModel::<Q>::new(a, b, 4), 4, 100, 11).unwrap();
        assert!(r.passed(), "ass ({a},{b}): {r:?}");
    }
}

#[test]
fn gb_of_presentations_is_quadratic_and_certified() {
    let gb = complete(&present_com::<Q>(0, 2), 4);
    assert!(gb.complete && gb.is_quadratic());
    assert!(verify_gb(&gb).certified());
    let gb = complete(&present_ass::<Q>(0, 2, 5), 5);
    assert!(gb.complete && gb.is_quadratic());
}

#[test]
fn perturbed_models_fail() {
    let com = ComModel::<Q>::new(0, 2).with_ef_pairing(Q::one());
    let r = model_vs_presentation(&com, 3, 100, 1).unwrap();
    assert!(!r.passed());
    assert!(!r.relation_failures.is_empty());
    let ass = AssModel::<Q>::new(0, 1, 4).with_product(Mat::E, Mat::H, vec![(Q::one(), Mat::E)]);
    let r = model_vs_presentation(&ass, 4, 100, 1).unwrap();
    assert!(!r.passed());
}

#[test]
fn lie_closure_small() {
    let c = lie_closure::<Q>(1, 5).unwrap();
    for d in 1..=5 {
        assert_eq!(c.decomposition(d).unwrap(), IrrDecomp::from_pairs([(2, 1)]), "degree {d}");
    }
    let c = lie_closure::<Q>(2, 3).unwrap();
    assert_eq!(c.dim(1), 6);
    assert_eq!(c.decomposition(1).unwrap(), IrrDecomp::from_pairs([(2, 2)]));
    assert_eq!(c.dim(2), 10);
    assert_eq!(c.decomposition(2).unwrap(), IrrDecomp::from_pairs([(0, 1), (2, 3)]));
    assert!(c.closure_defects(&AssModel::new(0, 2, 3)).unwrap().is_empty());
}

#[test]
fn lie_closure_jacobi_sample() {
    let m = AssModel::<Q>::new(0, 2, 4);
    let c = lie_closure::<Q>(2, 2).unwrap();
    let br = |x: &SparseVec<AssKey, Q>, y: &SparseVec<AssKey, Q>| {
        let mut o = m.mul(x, y).unwrap();
        axpy(&mut o, &-Q::one(), &m.mul(y, x).unwrap());
        o
    };
    let l1 = c.basis(1);
    let l2 = c.basis(2);
    for x in &l1 {
        for y in &l1 {
            for z in l2.iter().take(4) {
                let mut s = br(x, &br(y, z));
                axpy(&mut s, &Q::one(), &br(y, &br(z, x)));
                axpy(&mut s, &Q::one(), &br(z, &br(x, y)));
                assert!(s.values().all(Zero::is_zero) || s.is_empty());
            }
        }
    }
}

#[test]
fn theorem5_small() {
    let r = theorem5_check(1, 4).unwrap();
    assert!(r.passed());
    assert!(r.degrees.iter().all(|d| d.sj_dim == 1 && d.commutator_dim == 0));
    let r = theorem5_check(2, 3).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.degrees[1].commutator_dim, 1);
}
