mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tkklab::anick::{chains, homology_characters};
use tkklab::freemodels::{lie_closure, present_ass, present_com, theorem5_check};
use tkklab::groebner::json::AnyPresentation;
use tkklab::groebner::{complete, hilbert_character, verify_gb, GBasis, NormalEnumeration, Presentation};
use tkklab::jordan::{jacobi_check, sjord_space, tag, tkk_inner, JordanAlg, JordanJson};
use tkklab::koszul::{koszul_numeric_test, lie_super_homology, quadratic_dual};
use tkklab::schur::{multigraded_homology, schur_decomposition};
use tkklab::sl2::{decompose, tkk_truncate, Character};
use tkklab::verify::{run_suite, Status, Suite};
use tkklab::{Error, Rational, Word};

use table::{Cell, Format, Table};

#[derive(Parser)]
#[command(name = "tkklab", version, about = "Free algebras in the Tits-Kantor-Koecher category")]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Com,
    Ass,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions and characters of a free TKK algebra per degree.
    Dims {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        max_deg: usize,
    },
    /// Characters of the quotient by a presentation file.
    Character {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Gröbner basis of a presentation file, or verification of its
    /// relations as one.
    Groebner {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Anick chains of an associative presentation.
    Anick {
        #[arg(long, conflicts_with_all = ["b", "a"])]
        input: Option<PathBuf>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        max_k: usize,
    },
    /// Homology characters of a free TKK algebra.
    Homology {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        truncate: bool,
        /// Expand isotypic components into Schur polynomials in the
        /// triple indices.
        #[arg(long)]
        schur: bool,
    },
    /// Quadratic dual of a presentation file.
    Dual {
        #[arg(long)]
        input: PathBuf,
    },
    /// Checks H_A(t)·H_A!(-t) = 1 through a degree.
    KoszulTest {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Jordan identity, derivations and Lie constructions on a Jordan
    /// algebra: `ground`, `poly:N`, `sym:N`, `sjord:B:D`, `tensor:B:D` or a
    /// JSON file.
    Jordan {
        #[arg(long)]
        instance: String,
    },
    /// Lie closure of the adjoint generators in the associative model.
    LieClosure {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        check_theorem5: bool,
    },
    /// Runs a named suite of reproduction checks.
    Verify {
        #[arg(long, default_value = "quick")]
        suite: String,
    },
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Integrity(_) | Error::NotCompletelyReducible { .. } | Error::Resource(_) => 1,
        _ => 2,
    }
}

fn read_presentation(path: &PathBuf) -> Result<AnyPresentation<Rational>, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    AnyPresentation::from_json_str(&text)
}

fn decomposition_cells(ch: &Character) -> (Cell, Cell) {
    match decompose(ch) {
        Ok(d) => (Cell::of(&d), Cell::of(&tkk_truncate(&d))),
        Err(_) => (Cell::text("-"), Cell::text("-")),
    }
}

fn character_table(chars: &[Character]) -> Table {
    let mut t = Table::new(vec!["degree", "dim", "character", "irreducibles", "truncated"]);
    for (d, ch) in chars.iter().enumerate() {
        let (irr, tr) = decomposition_cells(ch);
        t.push(vec![Cell::int(d as u64), Cell::int(ch.dim()), Cell::of(ch), irr, tr]);
    }
    t
}

fn characters_of<M: NormalEnumeration>(pres: &Presentation<M, Rational>, max_deg: usize) -> Result<Vec<Character>, Error> {
    let gb = complete(pres, max_deg);
    if !gb.certifies(max_deg) {
        return Err(Error::UncertifiedDegree { degree: max_deg, bound: gb.degree_bound });
    }
    hilbert_character(&gb, max_deg)
}

fn groebner_output<M: NormalEnumeration>(pres: &Presentation<M, Rational>, max_deg: usize, verify: bool, format: Format) -> Result<Outcome, Error> {
    if verify {
        let cand = GBasis::candidate(pres.alphabet.clone(), pres.order.clone(), pres.relations.clone(), max_deg);
        let report = verify_gb(&cand);
        let ok = report.certified();
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json(&pres.alphabet, &pres.order)).expect("json")),
            _ => {
                println!("pairs checked: {}, above bound: {}, failures: {}", report.checks.len(), report.skipped, report.failures().count());
                for f in report.failures() {
                    println!("{}", f.remainder.render(&pres.alphabet));
                }
            }
        }
        return Ok(if ok { Outcome::Ok } else { Outcome::CheckFailed });
    }
    let gb = complete(pres, max_deg);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&gb.to_json()).expect("json")),
        Format::Tsv => print!("{}", gb.to_tsv()),
        Format::Table => {
            for p in &gb.elements {
                println!("{}", tkklab::groebner::json::render_ordered(&gb.alphabet, p, &gb.order));
            }
            let status = if gb.complete { "complete".to_string() } else { format!("certified through degree {}", gb.degree_bound) };
            eprintln!("{} elements, {status}", gb.len());
        }
    }
    Ok(Outcome::Ok)
}

fn koszul_output<M: NormalEnumeration>(pres: &Presentation<M, Rational>, max_deg: usize, format: Format) -> Result<Outcome, Error> {
    let r = koszul_numeric_test(pres, max_deg)?;
    let mut t = Table::new(vec!["degree", "algebra", "dual", "product"]);
    for d in 0..=max_deg {
        t.push(vec![
            Cell::int(d as u64),
            Cell::new(r.algebra[d].to_string(), json!(r.algebra[d] as i64)),
            Cell::new(r.dual[d].to_string(), json!(r.dual[d] as i64)),
            Cell::new(r.product[d].to_string(), json!(r.product[d] as i64)),
        ]);
    }
    print!("{}", t.render(format));
    Ok(if r.passed() { Outcome::Ok } else { Outcome::CheckFailed })
}

fn dual_output<M: tkklab::groebner::GbMonomial>(pres: &Presentation<M, Rational>, format: Format) -> Result<Outcome, Error> {
    let d = quadratic_dual(pres)?;
    let p = &d.presentation;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&p.to_json()).expect("json")),
        _ => {
            println!("{}", p.alphabet);
            for r in &p.relations {
                println!("{}", tkklab::groebner::json::render_ordered(&p.alphabet, r, &p.order));
            }
        }
    }
    Ok(Outcome::Ok)
}

fn parse_jordan(spec: &str) -> Result<JordanAlg<Rational>, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| usage(format!("bad number {s:?} in instance {spec:?}")));
    match parts.as_slice() {
        ["ground"] => Ok(JordanAlg::ground_field()),
        ["poly", n] => Ok(JordanAlg::truncated_polynomials(num(n)?)),
        ["sym", n] => Ok(JordanAlg::symmetric_matrices(num(n)?)),
        ["sjord", b, d] => JordanAlg::from_special(&sjord_space(num(b)?, num(d)?)),
        ["tensor", b, d] => Ok(JordanAlg::truncated_tensor(num(b)?, num(d)?)),
        _ => {
            let text = std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?;
            let raw: JordanJson = serde_json::from_str(&text).map_err(|e| usage(format!("{spec}: line {} column {}: {e}", e.line(), e.column())))?;
            JordanAlg::from_json(&raw)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    match cli.command {
        Command::Dims { algebra, a, b, max_deg } => {
            let chars = match algebra {
                Algebra::Com => characters_of(&present_com(a, b), max_deg)?,
                Algebra::Ass => characters_of(&present_ass(a, b, max_deg), max_deg)?,
            };
            print!("{}", character_table(&chars).render(format));
        }
        Command::Character { input, max_deg } => {
            let chars = match read_presentation(&input)? {
                AnyPresentation::Nc(p) => characters_of(&p, max_deg)?,
                AnyPresentation::Comm(p) => characters_of(&p, max_deg)?,
            };
            print!("{}", character_table(&chars).render(format));
        }
        Command::Groebner { input, max_deg, verify } => {
            return match read_presentation(&input)? {
                AnyPresentation::Nc(p) => groebner_output(&p, max_deg, verify, format),
                AnyPresentation::Comm(p) => groebner_output(&p, max_deg, verify, format),
            };
        }
        Command::Anick { input, a, b, max_k } => {
            let pres = match (input, b) {
                (Some(path), _) => match read_presentation(&path)? {
                    AnyPresentation::Nc(p) => p,
                    AnyPresentation::Comm(_) => return Err(Error::Unsupported("Anick chains need an associative presentation".into())),
                },
                (None, Some(b)) => present_ass(a.unwrap_or(0), b, 2 * (max_k + 1)),
                (None, None) => return Err(usage("give --input or --b")),
            };
            let max_deg = (max_k + 1) * pres.max_relation_degree().max(1);
            let gb = complete(&pres, max_deg);
            if !gb.certifies(max_deg) {
                return Err(Error::UncertifiedDegree { degree: max_deg, bound: gb.degree_bound });
            }
            let lead: Vec<Word> = gb.leading_monomials();
            let cs = chains(&lead, pres.alphabet.len(), max_k, max_deg)?;
            let mut t = Table::new(vec!["k", "chains", "character", "irreducibles"]);
            for k in 0..=cs.max_level() {
                let ch = cs.character(k, &pres.alphabet);
                let (irr, _) = decomposition_cells(&ch);
                t.push(vec![Cell::int(k as u64), Cell::int(cs.level(k).len() as u64), Cell::of(&ch), irr]);
            }
            print!("{}", t.render(format));
        }
        Command::Homology { algebra, a, b, max_k, truncate, schur } => {
            if schur {
                if algebra != Algebra::Com || a != 0 {
                    return Err(Error::Unsupported("Schur expansion is available for the commutative algebra with a = 0".into()));
                }
                let h = multigraded_homology::<Rational>(b, max_k)?;
                let mut t = Table::new(vec!["k", "isotype", "schur"]);
                for (k, mc) in &h {
                    for (n, s) in schur_decomposition(mc)? {
                        if truncate && n != 0 && n != 2 {
                            continue;
                        }
                        t.push(vec![Cell::int(*k as u64), Cell::text(format!("L({n})")), Cell::of(&s)]);
                    }
                }
                print!("{}", t.render(format));
                return Ok(Outcome::Ok);
            }
            let chars: Vec<(usize, Character)> = match algebra {
                Algebra::Com => {
                    let h = lie_super_homology(&present_com::<Rational>(a, b), max_k)?;
                    (1..=max_k).map(|k| (k, h.character(k))).collect()
                }
                Algebra::Ass => {
                    let gb = complete(&present_ass::<Rational>(a, b, max_k + 1), max_k + 1);
                    homology_characters(&gb, max_k)?.into_iter().filter(|(k, _)| *k >= 1).collect()
                }
            };
            let mut headers = vec!["k", "dim", "irreducibles"];
            if truncate {
                headers.push("truncated");
            }
            let mut t = Table::new(headers);
            for (k, ch) in chars {
                let d = decompose(&ch)?;
                let mut row = vec![Cell::int(k as u64), Cell::int(ch.dim()), Cell::of(&d)];
                if truncate {
                    row.push(Cell::of(&tkk_truncate(&d)));
                }
                t.push(row);
            }
            print!("{}", t.render(format));
        }
        Command::Dual { input } => {
            return match read_presentation(&input)? {
                AnyPresentation::Nc(p) => dual_output(&p, format),
                AnyPresentation::Comm(p) => dual_output(&p, format),
            };
        }
        Command::KoszulTest { input, max_deg } => {
            return match read_presentation(&input)? {
                AnyPresentation::Nc(p) => koszul_output(&p, max_deg, format),
                AnyPresentation::Comm(p) => koszul_output(&p, max_deg, format),
            };
        }
        Command::Jordan { instance } => {
            let j = parse_jordan(&instance)?;
            let identity = j.jordan_identity_check();
            let derivations = j.derivation_check();
            let tag_table = tag(&j)?;
            let inner_table = tkk_inner(&j)?;
            let tag_ok = jacobi_check(&tag_table).passed();
            let inner_ok = jacobi_check(&inner_table).passed();
            let mut t = Table::new(vec!["check", "result", "detail"]);
            let yes = |b: bool| Cell::new(if b { "pass" } else { "fail" }, json!(b));
            t.push(vec![Cell::text("dim"), Cell::int(j.dim() as u64), Cell::text("")]);
            t.push(vec![Cell::text("jordan-identity"), yes(identity.passed()), Cell::text(format!("{} quadruples", identity.checked))]);
            t.push(vec![Cell::text("inner-derivations"), yes(derivations.is_empty()), Cell::text(format!("{} violations", derivations.len()))]);
            t.push(vec![Cell::text("tag-jacobi"), yes(tag_ok), Cell::text(format!("dim {}", tag_table.dim()))]);
            t.push(vec![Cell::text("tkk-jacobi"), yes(inner_ok), Cell::text(format!("dim {}", inner_table.dim()))]);
            print!("{}", t.render(format));
            let ok = identity.passed() && derivations.is_empty() && tag_ok && inner_ok;
            return Ok(if ok { Outcome::Ok } else { Outcome::CheckFailed });
        }
        Command::LieClosure { b, max_deg, check_theorem5 } => {
            let closure = lie_closure::<Rational>(b, max_deg)?;
            let report = if check_theorem5 { Some(theorem5_check(b, max_deg)?) } else { None };
            let mut headers = vec!["degree", "dim", "character", "irreducibles"];
            if check_theorem5 {
                headers.extend(["sj_dim", "commutator_dim", "match"]);
            }
            let mut t = Table::new(headers);
            for d in 1..=max_deg {
                let ch = closure.character(d);
                let (irr, _) = decomposition_cells(&ch);
                let mut row = vec![Cell::int(d as u64), Cell::int(ch.dim()), Cell::of(&ch), irr];
                if let Some(r) = &report {
                    let c = &r.degrees[d - 1];
                    row.push(Cell::int(c.sj_dim as u64));
                    row.push(Cell::int(c.commutator_dim as u64));
                    row.push(Cell::new(if c.passed() { "yes" } else { "no" }, json!(c.passed())));
                }
                t.push(row);
            }
            print!("{}", t.render(format));
            if report.is_some_and(|r| !r.passed()) {
                return Ok(Outcome::CheckFailed);
            }
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(&suite).ok_or_else(|| usage(format!("unknown suite {suite:?}; expected quick or paper")))?;
            let results = run_suite(suite);
            let mut t = Table::new(vec!["criterion", "check", "status", "detail"]);
            for r in &results {
                eprintln!("{}: {:.2}s", r.name, r.seconds);
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skipped",
                };
                t.push(vec![
                    Cell::int(r.criterion),
                    Cell::text(r.name),
                    Cell::new(status, json!(r.status)),
                    Cell::text(r.detail.clone()),
                ]);
            }
            print!("{}", t.render(format));
            if results.iter().any(|r| r.status == Status::Fail) {
                return Ok(Outcome::CheckFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn configure_threads() -> Result<(), Error> {
    if let Ok(v) = std::env::var("TKKLAB_THREADS") {
        let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| usage(format!("TKKLAB_THREADS must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Error::Resource(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(cli));
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => {
            eprintln!("check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
