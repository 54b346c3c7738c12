use proptest::prelude::*;

use super::*;
use crate::alphabet::Generator;
use crate::freemodels::{present_ass, present_com};
use crate::monomial::all_words;
use crate::poly::Poly;
use crate::Rational as Q;

fn names(ws: &[SuperWord], al: &Alphabet) -> Vec<String> {
    ws.iter().map(|w| w.render(al)).collect()
}

fn odd_triple() -> (Alphabet, MonomialOrder) {
    let al = Alphabet::new(vec![Generator::new("e*", 2, 1, 0), Generator::new("h*", 0, 1, 1), Generator::new("f*", -2, 1, 2)]).unwrap();
    let order = MonomialOrder::new(OrderKind::DegLex, vec![2, 1, 0]).unwrap();
    (al, order)
}

fn poly(al: &Alphabet, terms: &[(i64, &[&str])]) -> Poly<Word, Q> {
    Poly::from_terms(terms.iter().map(|(c, ws)| (Word(ws.iter().map(|n| al.letter(n).unwrap()).collect()), Q::from_int(*c))))
}

fn span(ps: &[Poly<Word, Q>]) -> RowSpace<Word, Q> {
    RowSpace::from_vectors(ps.iter().map(|p| p.as_map().clone()))
}

#[test]
fn dual_of_com_l2() {
    let d = quadratic_dual(&present_com::<Q>(0, 1)).unwrap();
    let al = d.alphabet();
    assert_eq!(d.source_rank, 8);
    assert!((0..3).all(|l| al.parity(l) == 1));
    assert_eq!(al.weight(al.letter("e1*").unwrap()), 2);
    let expected = poly(al, &[(1, &["e1*", "f1*"]), (1, &["f1*", "e1*"]), (2, &["h1*", "h1*"])]);
    assert!(span(&d.presentation.relations).same_span(&span(&[expected])));
}

#[test]
fn dual_of_com_families() {
    for b in 2..=3 {
        let d = quadratic_dual(&present_com::<Q>(0, b)).unwrap();
        let al = d.alphabet();
        let g = |u: &str, i: usize| format!("{u}{i}*");
        let anti = |c: i64, u: &str, p: usize, v: &str, q: usize| -> Vec<(i64, Vec<String>)> {
            vec![(c, vec![g(u, p), g(v, q)]), (c, vec![g(v, q), g(u, p)])]
        };
        let mut fams = Vec::new();
        for p in 1..=b {
            for q in p..=b {
                if p < q {
                    for (u, v) in [("h", "f"), ("h", "e"), ("e", "f")] {
                        fams.push([anti(1, u, p, v, q), anti(-1, u, q, v, p)].concat());
                    }
                }
                fams.push([anti(1, "e", p, "f", q), anti(1, "f", p, "e", q), anti(2, "h", p, "h", q)].concat());
            }
        }
        let fams: Vec<Poly<Word, Q>> = fams
            .iter()
            .map(|f| {
                let mut p = Poly::zero();
                for (c, ws) in f {
                    p.add_term(Word(ws.iter().map(|n| al.letter(n).unwrap()).collect()), Q::from_int(*c));
                }
                p
            })
            .collect();
        let n = 3 * b;
        assert_eq!(d.presentation.relations.len(), n * n - (n * (n - 1) / 2 + 5 * b * (b + 1) / 2));
        assert!(span(&d.presentation.relations).same_span(&span(&fams)), "b = {b}");
    }
}

#[test]
fn dual_of_polynomial_ring_is_exterior() {
    let d = quadratic_dual(&present_com::<Q>(2, 0)).unwrap();
    let al = d.alphabet();
    let ex = vec![
        poly(al, &[(1, &["x1*", "x1*"])]),
        poly(al, &[(1, &["x2*", "x2*"])]),
        poly(al, &[(1, &["x1*", "x2*"]), (1, &["x2*", "x1*"])]),
    ];
    assert!(span(&d.presentation.relations).same_span(&span(&ex)));
    let r = koszul_numeric_test(&present_com::<Q>(2, 0), 5).unwrap();
    assert_eq!(r.dual, vec![1, 2, 1, 0, 0, 0]);
    assert!(r.passed());
}

#[test]
fn dual_relations_are_weight_homogeneous() {
    for b in 1..=3 {
        let d = quadratic_dual(&present_com::<Q>(1, b)).unwrap();
        assert!(d.presentation.relations.iter().all(|r| r.grading(d.alphabet()).is_homogeneous()));
    }
}

#[test]
fn koszul_com_l2() {
    let r = koszul_numeric_test(&present_com::<Q>(0, 1), 6).unwrap();
    let mut oracle = vec![1i128, 3];
    for d in 2..=6 {
        oracle.push(3 * oracle[d - 1] - oracle[d - 2]);
    }
    assert_eq!(r.algebra, vec![1, 3, 1, 0, 0, 0, 0]);
    assert_eq!(r.dual, oracle);
    assert_eq!(&r.dual[..5], &[1, 3, 8, 21, 55]);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn koszul_ass_l2_and_com_b2() {
    let r = koszul_numeric_test(&present_ass::<Q>(0, 1, 6), 6).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(&r.algebra[..4], &[1, 3, 4, 4]);
    let r = koszul_numeric_test(&present_com::<Q>(0, 2), 5).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn involution() {
    assert!(involution_check(&present_com::<Q>(0, 1)).unwrap());
    assert!(involution_check(&present_com::<Q>(1, 2)).unwrap());
    assert!(involution_check(&present_ass::<Q>(0, 2, 2)).unwrap());
    assert!(involution_check(&present_com::<Q>(3, 0)).unwrap());
}

#[test]
fn non_quadratic_rejected() {
    let al = Alphabet::tkk(1, 0);
    let order = MonomialOrder::by_sort_key(OrderKind::DegLex, &al);
    let p = Presentation::new(al, order, vec![Poly::<Word, Q>::monomial(Word::new(&[0, 0, 0]), Q::from_int(1))]).unwrap();
    assert!(matches!(quadratic_dual(&p), Err(Error::NotQuadratic(_))));
}

#[test]
fn super_lyndon_examples() {
    let (al, order) = odd_triple();
    let ws = super_lyndon_words(&al, &order, 2);
    assert_eq!(names(&ws, &al), ["e*", "h*", "f*", "e*e*", "e*h*", "e*f*", "h*h*", "h*f*", "f*f*"]);
    let x = Alphabet::new(vec![Generator::new("x", 0, 0, 0)]).unwrap();
    let xo = MonomialOrder::by_sort_key(OrderKind::DegLex, &x);
    assert_eq!(names(&super_lyndon_words(&x, &xo, 3), &x), ["x"]);
    let ab = Alphabet::new(vec![Generator::new("a", 0, 0, 1), Generator::new("b", 0, 0, 0)]).unwrap();
    let abo = MonomialOrder::by_sort_key(OrderKind::DegLex, &ab);
    assert_eq!(names(&super_lyndon_words(&ab, &abo, 2), &ab), ["a", "b", "ab"]);
}

#[test]
fn homology_of_com_l2() {
    let h = lie_super_homology(&present_com::<Q>(0, 1), 6).unwrap();
    let al = h.dual.alphabet().clone();
    let listed = [
        vec!["e1*", "h1*", "f1*"],
        vec!["e1*e1*", "e1*h1*", "h1*h1*", "h1*f1*", "f1*f1*"],
        vec!["e1*e1*h1*", "e1*h1*h1*", "e1*h1*f1*", "h1*h1*f1*", "h1*f1*f1*"],
        vec![
            "e1*e1*e1*h1*", "e1*e1*h1*h1*", "e1*e1*h1*f1*", "e1*h1*h1*h1*", "e1*h1*h1*f1*",
            "e1*h1*f1*h1*", "e1*h1*f1*f1*", "h1*h1*h1*f1*", "h1*h1*f1*f1*", "h1*f1*f1*f1*",
        ],
    ];
    for (k, want) in listed.iter().enumerate() {
        let mut got = names(h.words(k + 1), &al);
        let mut want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want, "length {}", k + 1);
    }
    let irr = |ps: &[(u64, u64)]| IrrDecomp::from_pairs(ps.iter().copied());
    assert_eq!(h.decomposition(1).unwrap(), irr(&[(2, 1)]));
    assert_eq!(h.decomposition(2).unwrap(), irr(&[(4, 1)]));
    assert_eq!(h.decomposition(3).unwrap(), irr(&[(4, 1)]));
    assert_eq!(h.decomposition(4).unwrap(), irr(&[(6, 1), (2, 1)]));
    let tr: Vec<(u64, u64)> = (1..=4).map(|k| h.truncated(k).map(|t| (t.m0, t.m2)).unwrap()).collect();
    assert_eq!(tr, vec![(0, 1), (0, 0), (0, 0), (0, 1)]);
    for (actual, predicted) in h.pbw_check().unwrap() {
        assert_eq!(actual, predicted);
    }
}

#[test]
fn homology_degree_one_multiplicity() {
    for b in 2..=3 {
        let h = lie_super_homology(&present_com::<Q>(0, b), 3).unwrap();
        assert_eq!(h.decomposition(1).unwrap(), IrrDecomp::from_pairs([(2, b as u64)]));
        for (actual, predicted) in h.pbw_check().unwrap() {
            assert_eq!(actual, predicted, "b = {b}");
        }
    }
    assert!(lie_super_homology(&present_ass::<Q>(0, 1, 2), 2).is_err());
}

fn brute_force(al: &Alphabet, order: &MonomialOrder, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = (1..=max_len).flat_map(|l| all_words(al.len(), l)).filter(|w| is_super_lyndon(w, al, order)).collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn generation_matches_filter(parities in proptest::collection::vec(0u8..2, 1..4), perm_seed in 0usize..24, max_len in 1usize..6) {
        let n = parities.len();
        let gens = parities.iter().enumerate().map(|(i, &p)| Generator::new(format!("g{i}"), 0, p, i as i64)).collect();
        let al = Alphabet::new(gens).unwrap();
        let mut asc: Vec<Letter> = (0..n as Letter).collect();
        for i in 0..n {
            asc.swap(i, (perm_seed / (i + 1)) % n);
        }
        let order = MonomialOrder::new(OrderKind::DegLex, asc).unwrap();
        let mut got: Vec<Word> = super_lyndon_words(&al, &order, max_len).into_iter().map(|w| w.word).collect();
        got.sort();
        prop_assert_eq!(got, brute_force(&al, &order, max_len));
    }
}
