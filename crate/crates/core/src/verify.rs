//! The reproduction suite: named checks over the free TKK algebras, each
//! tied to one acceptance criterion.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::anick::homology_characters;
use crate::error::Result;
use crate::freemodels::{associativity_violations, lie_closure, model_vs_presentation, present_ass, present_com, theorem5_check, AssModel, ComModel};
use crate::groebner::{complete, verify_gb, GBasis, GbMonomial, Presentation};
use crate::jordan::{jacobi_check, multilinear_dim, sjord_space, tag, tkk_inner, JordanAlg};
use crate::koszul::{koszul_numeric_test, lie_super_homology};
use crate::schur::{multigraded_homology, schur_expand, SchurExpansion};
use crate::sl2::{decompose, tkk_truncate, IrrDecomp};
use crate::Rational as Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Paper,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "quick" => Some(Suite::Quick),
            "paper" => Some(Suite::Paper),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub criterion: u8,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
}

type CheckFn = fn() -> Result<(bool, String)>;

pub struct Check {
    pub name: &'static str,
    pub criterion: u8,
    pub quick: bool,
    run: Option<CheckFn>,
    skip_reason: &'static str,
}

const SKIP_JORDAN_DIM: &str = "skipped by design: the dimension of the degree-8 component of the free Jordan algebra needs free nonassociative Jordan computation outside this library; the Jordan-layer and Lie-closure checks stand in for it";

pub fn checks() -> Vec<Check> {
    let c = |name, criterion, quick, f: CheckFn| Check { name, criterion, quick, run: Some(f), skip_reason: "" };
    vec![
        c("com-groebner", 1, true, com_groebner),
        c("com-model", 2, true, com_model),
        c("com-homology", 3, true, com_homology),
        c("com-multigraded-homology", 4, false, com_multigraded),
        c("ass-groebner-model", 5, false, ass_groebner_model),
        c("ass-anick-homology", 6, true, ass_anick),
        c("koszul-numerics", 7, false, koszul_numerics),
        c("jordan-layer", 8, true, jordan_layer),
        c("lie-closure", 9, false, lie_closure_check),
        Check { name: "free-jordan-dimension", criterion: 10, quick: true, run: None, skip_reason: SKIP_JORDAN_DIM },
    ]
}

pub fn run_check(check: &Check) -> CheckResult {
    let start = Instant::now();
    let (status, detail) = match check.run {
        None => (Status::Skipped, check.skip_reason.to_string()),
        Some(f) => match f() {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        },
    };
    CheckResult { name: check.name, criterion: check.criterion, status, detail, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    checks().iter().filter(|c| suite == Suite::Paper || c.quick).map(run_check).collect()
}

fn irr(pairs: &[(u64, u64)]) -> IrrDecomp {
    IrrDecomp::from_pairs(pairs.iter().copied())
}

/// The relations themselves, checked as a Gröbner basis up to `bound`.
pub fn relations_certified<M: GbMonomial, C: crate::Scalar>(pres: &Presentation<M, C>, bound: usize) -> bool {
    let cand = GBasis::candidate(pres.alphabet.clone(), pres.order.clone(), pres.relations.clone(), bound);
    verify_gb(&cand).certified()
}

fn com_groebner() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for b in 1..=4 {
        let pres = present_com::<Q>(0, b);
        let cert = relations_certified(&pres, 4);
        let gb = complete(&pres, 4);
        let quad = gb.complete && gb.is_quadratic() && gb.len() == pres.relations.len();
        ok &= cert && quad;
        notes.push(format!("b={b}: {} relations, certified={cert}, quadratic={quad}", pres.relations.len()));
    }
    Ok((ok, notes.join("; ")))
}

fn com_model() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for b in 1..=4 {
        let m = ComModel::<Q>::new(0, b);
        let r = model_vs_presentation(&m, 4, 100, b as u64)?;
        let assoc = associativity_violations(&m, 4)?.is_empty();
        ok &= r.passed() && assoc;
        let dims: Vec<u64> = r.degrees.iter().map(|d| d.model.dim()).collect();
        if b == 1 {
            ok &= dims == [1, 3, 1, 0, 0];
        }
        notes.push(format!("b={b}: dims {dims:?}, match={}, associative={assoc}", r.passed()));
    }
    Ok((ok, notes.join("; ")))
}

const L2_WORDS: [&[&str]; 4] = [
    &["e1*", "h1*", "f1*"],
    &["e1*e1*", "e1*h1*", "h1*h1*", "h1*f1*", "f1*f1*"],
    &["e1*e1*h1*", "e1*h1*h1*", "e1*h1*f1*", "h1*h1*f1*", "h1*f1*f1*"],
    &[
        "e1*e1*e1*h1*", "e1*e1*h1*h1*", "e1*e1*h1*f1*", "e1*h1*h1*h1*", "e1*h1*h1*f1*",
        "e1*h1*f1*h1*", "e1*h1*f1*f1*", "h1*h1*h1*f1*", "h1*h1*f1*f1*", "h1*f1*f1*f1*",
    ],
];

fn com_homology() -> Result<(bool, String)> {
    let h = lie_super_homology(&present_com::<Q>(0, 1), 4)?;
    let al = h.dual.alphabet().clone();
    let expected = [irr(&[(2, 1)]), irr(&[(4, 1)]), irr(&[(4, 1)]), irr(&[(6, 1), (2, 1)])];
    let truncated = [(0, 1), (0, 0), (0, 0), (0, 1)];
    let mut ok = true;
    let mut notes = Vec::new();
    for k in 1..=4 {
        let d = h.decomposition(k)?;
        let t = h.truncated(k)?;
        let mut got: Vec<String> = h.words(k).iter().map(|w| w.render(&al)).collect();
        let mut want: Vec<String> = L2_WORDS[k - 1].iter().map(|s| s.to_string()).collect();
        got.sort();
        want.sort();
        ok &= d == expected[k - 1] && (t.m0, t.m2) == truncated[k - 1] && got == want;
        notes.push(format!("H{k} = {d} -> {t}"));
    }
    Ok((ok, notes.join("; ")))
}

fn expansion(pairs: &[(&[u32], i64)], rows: usize) -> SchurExpansion {
    SchurExpansion { mults: pairs.iter().filter(|(l, _)| l.len() <= rows).map(|(l, c)| (l.to_vec(), *c)).collect() }
}

fn com_multigraded() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for b in [2usize, 3] {
        let h = multigraded_homology::<Q>(b, 5)?;
        let zero23 = h[&2].truncated()?.is_empty() && h[&3].truncated()?.is_empty();
        let t4 = h[&4].truncated()?;
        let s4 = match (t4.len(), t4.get(&2)) {
            (1, Some(p)) => schur_expand(p, b)?,
            _ => SchurExpansion::default(),
        };
        let s4_ok = s4 == expansion(&[(&[4], 1)], b) && s4.dim(b) == [5, 15][b - 2];
        let t5 = h[&5].truncated()?;
        let l2 = t5.get(&2).map(|p| schur_expand(p, b)).transpose()?.unwrap_or_default();
        let l0 = t5.get(&0).map(|p| schur_expand(p, b)).transpose()?.unwrap_or_default();
        let want2 = expansion(&[(&[5], 1), (&[4, 1], 1), (&[3, 2], 1)], b);
        let want0 = expansion(&[(&[4, 1], 1)], b);
        let h5_ok = l2.dim(b) == want2.dim(b) && l0.dim(b) == want0.dim(b) && l2 == want2 && l0 == want0;
        ok &= zero23 && s4_ok && h5_ok;
        notes.push(format!("b={b}: H2,H3 truncated zero={zero23}; H4 L(2): {s4} (dim {}); H5 L(2): {l2}, L(0): {l0}", s4.dim(b)));
    }
    Ok((ok, notes.join("; ")))
}

fn ass_groebner_model() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (a, b) in [(0usize, 1usize), (0, 2), (0, 3), (1, 1), (2, 1)] {
        let pres = present_ass::<Q>(a, b, 5);
        let cert = relations_certified(&pres, 5);
        let m = AssModel::<Q>::new(a, b, 5);
        let r = model_vs_presentation(&m, 5, 100, (10 * a + b) as u64)?;
        let dims: Vec<u64> = r.degrees.iter().map(|d| d.presentation.dim()).collect();
        let mut dims_ok = true;
        if a == 0 {
            let b = b as u64;
            dims_ok = dims == [1, 3 * b, 4 * b * b, 4 * b.pow(3), 4 * b.pow(4), 4 * b.pow(5)];
        }
        ok &= cert && r.passed() && dims_ok;
        notes.push(format!("(a,b)=({a},{b}): certified={cert}, dims {dims:?}, model match={}", r.passed()));
    }
    Ok((ok, notes.join("; ")))
}

fn ass_anick() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3u64 {
        let pres = present_ass::<Q>(0, n as usize, 5);
        let gb = complete(&pres, 5);
        let h = homology_characters(&gb, 5)?;
        for k in 1..=4usize {
            let d = decompose(&h[&k])?;
            ok &= d == irr(&[(2 * k as u64, n.pow(k as u32))]);
            ok &= decompose(&h[&(k + 1)])? == irr(&[(2 * k as u64 + 2, n.pow(k as u32 + 1))]);
            if k >= 2 {
                ok &= tkk_truncate(&d).is_zero();
            }
        }
        notes.push(format!("n={n}: H1..H4 = {}", (1..=4).map(|k| decompose(&h[&k]).map(|d| d.to_string())).collect::<Result<Vec<_>>>()?.join(", ")));
        if n == 2 {
            let d = decompose(&h[&2])?;
            ok &= d == irr(&[(4, 4)]);
            notes.push(format!("n=2: H2 = {d} -> truncated {}", tkk_truncate(&d)));
        }
    }
    Ok((ok, notes.join("; ")))
}

fn koszul_numerics() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for b in 1..=3 {
        let r = koszul_numeric_test(&present_com::<Q>(0, b), 8)?;
        ok &= r.passed();
        if b == 1 {
            let mut oracle = vec![1i128, 3];
            for d in 2..=8 {
                oracle.push(3 * oracle[d - 1] - oracle[d - 2]);
            }
            ok &= r.dual == oracle && r.dual[..5] == [1, 3, 8, 21, 55];
        }
        notes.push(format!("com b={b}: dual {:?}, pass={}", r.dual, r.passed()));
    }
    for b in 1..=2 {
        let r = koszul_numeric_test(&present_ass::<Q>(0, b, 6), 6)?;
        ok &= r.passed();
        notes.push(format!("ass b={b}: dual {:?}, pass={}", r.dual, r.passed()));
    }
    Ok((ok, notes.join("; ")))
}

fn jordan_layer() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    let tensor = JordanAlg::<Q>::truncated_tensor(2, 4).jordan_identity_check();
    let sym = JordanAlg::<Q>::symmetric_matrices(2).jordan_identity_check();
    ok &= tensor.passed() && sym.passed();
    notes.push(format!("identity: T(B)<=4 {} quadruples, Sym2 {} quadruples", tensor.checked, sym.checked));
    let suite = [
        ("t k[t]/(t^5)", JordanAlg::<Q>::truncated_polynomials(5)),
        ("Sym2", JordanAlg::<Q>::symmetric_matrices(2)),
        ("SJ(2)<=3", JordanAlg::<Q>::from_special(&sjord_space(2, 3))?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, j) in &suite {
        let mut vanish = true;
        for _ in 0..20 {
            let z: Vec<Q> = (0..j.dim()).map(|_| Q::from_integer(rng.gen_range(-5..=5).into())).collect();
            let y: Vec<Q> = (0..j.dim()).map(|_| Q::from_integer(rng.gen_range(-5..=5).into())).collect();
            let z2 = j.mul(&z, &z);
            vanish &= j.inner_derivation(&z, &z2, &y).iter().all(|c| *c == Q::from_integer(0.into()));
        }
        let t = jacobi_check(&tag(j)?).passed();
        let i = jacobi_check(&tkk_inner(j)?).passed();
        ok &= vanish && t && i;
        notes.push(format!("{name}: d(z,z^2)=0 {vanish}, TAG Jacobi {t}, TKK Jacobi {i}"));
    }
    let ml: Vec<usize> = (1..=3).map(multilinear_dim).collect::<Result<_>>()?;
    ok &= ml == [1, 1, 3];
    notes.push(format!("multilinear dims {ml:?}"));
    Ok((ok, notes.join("; ")))
}

fn lie_closure_check() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (b, d) in [(1usize, 6usize), (2, 4), (3, 3)] {
        let r = theorem5_check(b, d)?;
        ok &= r.passed();
        let row: Vec<String> = r.degrees.iter().map(|x| format!("{}:{}/{}", x.degree, x.sj_dim, x.commutator_dim)).collect();
        notes.push(format!("b={b}: (SJ/[SJ,SJ]) {} pass={}", row.join(" "), r.passed()));
    }
    let c = lie_closure::<Q>(2, 2)?;
    ok &= c.dim(2) == 10;
    notes.push(format!("b=2 degree-2 closure dim {}", c.dim(2)));
    Ok((ok, notes.join("; ")))
}
