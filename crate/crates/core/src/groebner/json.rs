//! JSON form of presentations and Gröbner bases.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Generator};
use crate::error::{Error, Result};
use crate::monomial::{CommMonomial, Monomial, Word};
use crate::order::{MonomialOrder, OrderKind};
use crate::poly::{parse_monomial, Poly};
use crate::scalar::Scalar;

use super::{Flavor, GBasis, Presentation, Unresolved, VerifyReport};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    pub weight: i64,
    #[serde(default)]
    pub parity: u8,
    pub sort_key: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct OrderJson {
    pub kind: OrderKind,
    /// Generator names, smallest first.
    pub generator_order: Vec<String>,
}

/// A coefficient written as `"p/q"`, `"p"` or a bare integer.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Text(String),
    Int(i64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: CoeffJson,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub flavor: String,
    pub alphabet: Vec<GeneratorJson>,
    pub order: OrderJson,
    pub relations: Vec<Vec<TermJson>>,
}

/// A presentation of either flavor.
#[derive(Debug, Clone)]
pub enum AnyPresentation<C: Scalar> {
    Nc(Presentation<Word, C>),
    Comm(Presentation<CommMonomial, C>),
}

impl<C: Scalar> AnyPresentation<C> {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: PresentationJson = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_json(&raw)
    }

    pub fn from_json(raw: &PresentationJson) -> Result<Self> {
        let gens = raw
            .alphabet
            .iter()
            .map(|g| {
                if g.parity > 1 {
                    return Err(Error::Schema(format!("parity of {} must be 0 or 1", g.name)));
                }
                Ok(Generator::new(g.name.clone(), g.weight, g.parity, g.sort_key))
            })
            .collect::<Result<Vec<_>>>()?;
        let alphabet = Alphabet::new(gens)?;
        let asc = raw
            .order
            .generator_order
            .iter()
            .map(|n| alphabet.letter(n).ok_or_else(|| Error::Schema(format!("unknown generator {n:?} in order"))))
            .collect::<Result<Vec<_>>>()?;
        if asc.len() != alphabet.len() {
            return Err(Error::Schema(format!(
                "generator order lists {} of {} generators",
                asc.len(),
                alphabet.len()
            )));
        }
        let order = MonomialOrder::new(raw.order.kind, asc)?;
        match raw.flavor.as_str() {
            "nc" => Ok(AnyPresentation::Nc(Presentation::new(
                alphabet.clone(),
                order,
                parse_relations(&alphabet, &raw.relations)?,
            )?)),
            "comm" => Ok(AnyPresentation::Comm(Presentation::new(
                alphabet.clone(),
                order,
                parse_relations(&alphabet, &raw.relations)?,
            )?)),
            other => Err(Error::Schema(format!("flavor must be \"nc\" or \"comm\", got {other:?}"))),
        }
    }
}

fn parse_relations<M: Monomial, C: Scalar>(alphabet: &Alphabet, rels: &[Vec<TermJson>]) -> Result<Vec<Poly<M, C>>> {
    rels.iter()
        .map(|terms| {
            let mut p = Poly::zero();
            for t in terms {
                let c = match &t.coeff {
                    CoeffJson::Int(n) => C::from_int(*n),
                    CoeffJson::Text(s) => {
                        C::parse_exact(s).ok_or_else(|| Error::Schema(format!("bad coefficient {s:?}")))?
                    }
                };
                p.add_term(parse_monomial::<M>(alphabet, &t.word)?, c);
            }
            Ok(p)
        })
        .collect()
}

pub fn order_json(alphabet: &Alphabet, order: &MonomialOrder) -> OrderJson {
    OrderJson {
        kind: order.kind,
        generator_order: order.ascending().iter().map(|&l| alphabet.name(l).to_string()).collect(),
    }
}

pub fn poly_json<M: Monomial, C: Scalar>(alphabet: &Alphabet, p: &Poly<M, C>, order: &MonomialOrder) -> Vec<TermJson> {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_cached_key(|(m, _)| std::cmp::Reverse(m.key(order)));
    terms
        .into_iter()
        .map(|(m, c)| TermJson {
            coeff: CoeffJson::Text(c.to_string()),
            word: m.letters().iter().map(|&l| alphabet.name(l).to_string()).collect(),
        })
        .collect()
}

impl<M: Monomial, C: Scalar> Presentation<M, C> {
    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            flavor: self.flavor().as_str().into(),
            alphabet: self
                .alphabet
                .generators()
                .iter()
                .map(|g| GeneratorJson { name: g.name.clone(), weight: g.weight, parity: g.parity, sort_key: g.sort_key })
                .collect(),
            order: order_json(&self.alphabet, &self.order),
            relations: self.relations.iter().map(|r| poly_json(&self.alphabet, r, &self.order)).collect(),
        }
    }
}

fn names<M: Monomial>(alphabet: &Alphabet, m: &M) -> Vec<String> {
    m.letters().iter().map(|&l| alphabet.name(l).to_string()).collect()
}

impl<M: Monomial, C: Scalar> GBasis<M, C> {
    pub fn to_json(&self) -> Value {
        let truncation: Vec<Value> = self
            .truncation
            .iter()
            .map(|u| match u {
                Unresolved::Pair(p) => json!({
                    "pair": [p.i, p.j],
                    "lcm": names(&self.alphabet, &p.lcm),
                    "degree": p.degree(),
                }),
                Unresolved::Relation { index, degree } => json!({ "relation": index, "degree": degree }),
            })
            .collect();
        json!({
            "flavor": Flavor::of::<M>().as_str(),
            "order": order_json(&self.alphabet, &self.order),
            "degreeBound": self.degree_bound,
            "complete": self.complete,
            "elements": self.elements.iter().map(|p| poly_json(&self.alphabet, p, &self.order)).collect::<Vec<_>>(),
            "truncation": truncation,
        })
    }

    /// One element per line: degree, leading monomial, full polynomial.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\tlead\tpolynomial\n");
        for p in &self.elements {
            let lead = p.leading_monomial(&self.order).expect("nonzero");
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                lead.degree(),
                lead.render(&self.alphabet),
                render_ordered(&self.alphabet, p, &self.order)
            ));
        }
        out
    }
}

/// Terms from largest to smallest in the monomial order.
pub fn render_ordered<M: Monomial, C: Scalar>(alphabet: &Alphabet, p: &Poly<M, C>, order: &MonomialOrder) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_cached_key(|(m, _)| std::cmp::Reverse(m.key(order)));
    Poly::<M, C>::render_terms(alphabet, terms.into_iter())
}

impl<M: Monomial, C: Scalar> VerifyReport<M, C> {
    pub fn to_json(&self, alphabet: &Alphabet, order: &MonomialOrder) -> Value {
        json!({
            "certified": self.certified(),
            "antichain": self.antichain,
            "checked": self.checks.len(),
            "skipped": self.skipped,
            "failures": self.failures().map(|c| json!({
                "pair": [c.pair.i, c.pair.j],
                "lcm": names(alphabet, &c.pair.lcm),
                "degree": c.pair.degree(),
                "remainder": poly_json(alphabet, &c.remainder, order),
            })).collect::<Vec<_>>(),
        })
    }
}
