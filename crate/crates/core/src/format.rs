//! JSON documents for ideals and graphs.
//!
//! An ideal document is `{"n": 3, "gens": [...]}` where each generator is
//! either an exponent list of length `n` or a string such as `"x1^2*x3"`
//! (1-based variables, exponent 1 omitted, `"1"` for the unit monomial).
//! Unknown fields are ignored. A graph document is
//! `{"n": 4, "edges": [[1, 2], [2, 3]]}` with 1-based vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonomialSpec {
    Exponents(Vec<i64>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub n: usize,
    pub gens: Vec<MonomialSpec>,
}

/// Parses `"x1^2*x3"`. Repeated variables multiply.
pub fn parse_monomial(n: usize, text: &str) -> Result<Monomial> {
    let text = text.trim();
    let mut exps = vec![0u64; n];
    if text != "1" {
        for factor in text.split('*').map(str::trim) {
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim()),
                None => (factor, "1"),
            };
            let idx: usize = var
                .strip_prefix('x')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("malformed factor `{factor}` in `{text}`")))?;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!(
                    "variable x{idx} outside x1..x{n} in `{text}`"
                )));
            }
            let e: u64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{exp}` in `{text}`")))?;
            exps[idx - 1] = exps[idx - 1]
                .checked_add(e)
                .ok_or(Error::Overflow(e))?;
        }
    }
    to_monomial(exps)
}

fn to_monomial(exps: Vec<u64>) -> Result<Monomial> {
    let exps = exps
        .into_iter()
        .map(|e| u32::try_from(e).map_err(|_| Error::Overflow(e)))
        .collect::<Result<Vec<u32>>>()?;
    Monomial::new(exps)
}

impl MonomialSpec {
    pub fn to_monomial(&self, n: usize) -> Result<Monomial> {
        match self {
            MonomialSpec::Text(s) => parse_monomial(n, s),
            MonomialSpec::Exponents(v) => {
                if v.len() != n {
                    return Err(Error::Parse(format!(
                        "exponent list has length {}, expected {n}",
                        v.len()
                    )));
                }
                if let Some(bad) = v.iter().find(|&&e| e < 0) {
                    return Err(Error::Parse(format!("negative exponent {bad}")));
                }
                to_monomial(v.iter().map(|&e| e as u64).collect())
            }
        }
    }
}

impl IdealDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Generators as written, without minimalization.
    pub fn monomials(&self) -> Result<Vec<Monomial>> {
        self.gens.iter().map(|g| g.to_monomial(self.n)).collect()
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.n, self.monomials()?)
    }

    /// Canonical form: exponent lists in canonical generator order.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealDocument {
            n: ideal.n(),
            gens: ideal
                .gens()
                .iter()
                .map(|g| MonomialSpec::Exponents(g.exponents().iter().map(|&e| e as i64).collect()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    IdealDocument::from_json(text)?.to_ideal()
}

pub fn serialize_ideal(ideal: &MonomialIdeal) -> String {
    IdealDocument::from_ideal(ideal).to_json()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            if a == 0 || b == 0 {
                return Err(Error::Parse("graph vertices are 1-based".into()));
            }
            edges.push((a - 1, b - 1));
        }
        SimpleGraph::new(self.n, edges)
    }

    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphDocument {
            n: g.n(),
            edges: g.edges().map(|(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}
