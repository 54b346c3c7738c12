use proptest::prelude::*;

use super::*;
use crate::Rational as Q;

fn hook_content(lambda: &[u32], m: usize) -> u64 {
    let conj: Vec<u32> = (0..lambda.first().copied().unwrap_or(0)).map(|j| lambda.iter().filter(|&&r| r > j).count() as u32).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for (i, &r) in lambda.iter().enumerate() {
        for j in 0..r {
            num *= m as i128 + j as i128 - i as i128;
            den *= (r - j - 1) as i128 + (conj[j as usize] as i128 - i as i128 - 1) + 1;
        }
    }
    (num / den).max(0) as u64
}

fn expansion(pairs: &[(&[u32], i64)]) -> SchurExpansion {
    SchurExpansion { mults: pairs.iter().map(|(l, c)| (l.to_vec(), *c)).collect() }
}

#[test]
fn tableau_counts() {
    assert_eq!(schur_dim(&[4], 2), 5);
    assert_eq!(schur_dim(&[4, 1], 2), 4);
    assert_eq!(schur_dim(&[1, 1, 1], 2), 0);
    assert_eq!(schur_dim(&[2, 1], 3), 8);
    assert_eq!(schur_dim(&[], 3), 1);
}

#[test]
fn expand_complete_homogeneous() {
    let h4: SymPoly = crate::monomial::all_comm_monomials(3, 4)
        .into_iter()
        .map(|m| {
            let mut e: Vec<u32> = m.exponents().iter().map(|&x| x as u32).collect();
            e.resize(3, 0);
            (e, 1)
        })
        .collect();
    assert_eq!(schur_expand(&h4, 3).unwrap(), expansion(&[(&[4], 1)]));
    let bad: SymPoly = [(vec![2, 0], 1)].into_iter().collect();
    assert!(matches!(schur_expand(&bad, 2), Err(Error::NotSymmetric(_))));
}

#[test]
fn homology_b2_slices() {
    let h = multigraded_homology::<Q>(2, 4).unwrap();
    let t1 = h[&1].truncated().unwrap();
    assert_eq!(t1.keys().copied().collect::<Vec<_>>(), vec![2]);
    assert_eq!(schur_expand(&t1[&2], 2).unwrap(), expansion(&[(&[1], 1)]));
    assert!(h[&2].truncated().unwrap().is_empty());
    assert!(h[&3].truncated().unwrap().is_empty());
    let t4 = h[&4].truncated().unwrap();
    assert_eq!(t4.keys().copied().collect::<Vec<_>>(), vec![2]);
    let s = schur_expand(&t4[&2], 2).unwrap();
    assert_eq!(s, expansion(&[(&[4], 1)]));
    assert_eq!(s.dim(2), 5);
}

#[test]
fn expansions_reconstruct_dimensions() {
    let h = multigraded_homology::<Q>(2, 4).unwrap();
    for mc in h.values() {
        let total: i64 = schur_decomposition(mc).unwrap().iter().map(|(&n, s)| (n as i64 + 1) * s.dim(2)).sum();
        assert_eq!(total, mc.dim() as i64);
        assert!(schur_decomposition(mc).unwrap().values().all(SchurExpansion::is_positive));
    }
}

#[test]
fn stable_in_number_of_variables() {
    let h2 = multigraded_homology::<Q>(2, 4).unwrap();
    let h3 = multigraded_homology::<Q>(3, 4).unwrap();
    for k in 1..=4 {
        let (a, b) = (schur_decomposition(&h2[&k]).unwrap(), schur_decomposition(&h3[&k]).unwrap());
        let keys: std::collections::BTreeSet<u64> = a.keys().chain(b.keys()).copied().collect();
        for n in keys {
            let x = a.get(&n).cloned().unwrap_or_default();
            let y = b.get(&n).cloned().unwrap_or_default().restricted(2);
            assert_eq!(x, y, "k = {k}, L({n})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn tableaux_match_hook_content(parts in proptest::collection::vec(1u32..5, 0..4), m in 1usize..5) {
        let mut lambda = parts;
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(schur_dim(&lambda, m), hook_content(&lambda, m));
    }

    #[test]
    fn expansion_inverts_sums(coeffs in proptest::collection::vec(-3i64..4, 5), m in 2usize..4) {
        let shapes: [&[u32]; 5] = [&[3], &[2, 1], &[1, 1, 1], &[4], &[2, 2]];
        let mut p = SymPoly::new();
        let mut want = SchurExpansion::default();
        for (l, &c) in shapes.iter().zip(&coeffs) {
            if c == 0 || l.len() > m {
                continue;
            }
            want.mults.insert(l.to_vec(), c);
            for (a, k) in schur_poly(l, m) {
                *p.entry(a).or_default() += c * k as i64;
            }
        }
        p.retain(|_, c| *c != 0);
        prop_assert_eq!(schur_expand(&p, m).unwrap(), want);
    }
}

#[test]
fn h5_three_variables() {
    let h = multigraded_homology::<Q>(3, 5).unwrap();
    let t = h[&5].truncated().unwrap();
    assert_eq!(schur_expand(&t[&2], 3).unwrap(), expansion(&[(&[5], 1), (&[4, 1], 1), (&[3, 2], 1)]));
    assert_eq!(schur_expand(&t[&0], 3).unwrap(), expansion(&[(&[4, 1], 1)]));
    assert_eq!(schur_expand(&h[&4].truncated().unwrap()[&2], 3).unwrap(), expansion(&[(&[4], 1)]));
}
