//! Graded Betti numbers and regularity.
//!
//! Two independent engines: Hochster's formula on the Stanley–Reisner
//! complex (after polarization for non-squarefree input), and the
//! multigraded Koszul complex `K(x; S/I)`. Both produce quotient-indexed
//! tables, `β_{i,j}(S/I)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps;
use crate::complex::{faces_within, reduced_homology_of_faces, Face};
use crate::error::{Error, Result};
use crate::gradient::iterated_gradient;
use crate::ideal::MonomialIdeal;
use crate::linalg::{self, SparseRow};
use crate::monomial::Monomial;
use crate::structure::{linear_quotients_search, LqSearch};

/// Node budget for the linear-quotients shortcut inside the regularity
/// engine. An exhausted budget falls through to the homological engines.
const LQ_SHORTCUT_BUDGET: u64 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `β_{i,j}(I)`
    Ideal,
    /// `β_{i,j}(S/I)`
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    convention: Convention,
    entries: BTreeMap<(usize, u64), u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u64,
    pub value: u64,
}

impl BettiTable {
    pub fn new(convention: Convention) -> Self {
        BettiTable {
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub(crate) fn add(&mut self, i: usize, j: u64, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    fn merge(mut self, other: BettiTable) -> BettiTable {
        for ((i, j), v) in other.entries {
            self.add(i, j, v);
        }
        self
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_convention(&self, target: Convention) -> BettiTable {
        let mut out = BettiTable::new(target);
        match (self.convention, target) {
            (a, b) if a == b => return self.clone(),
            (Convention::Quotient, Convention::Ideal) => {
                for (&(i, j), &v) in &self.entries {
                    if i >= 1 {
                        out.add(i - 1, j, v);
                    }
                }
            }
            _ => {
                // S/S = 0, so the unit ideal maps to the empty table
                if self.get(0, 0) > 0 {
                    return out;
                }
                out.add(0, 0, 1);
                for (&(i, j), &v) in &self.entries {
                    out.add(i + 1, j, v);
                }
            }
        }
        out
    }

    /// `max{j - i}` over the ideal-indexed entries.
    pub fn regularity(&self) -> Option<u64> {
        self.to_convention(Convention::Ideal)
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i as u64))
            .max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            convention: Convention,
            entries: Vec<BettiEntry>,
        }
        Repr {
            convention: self.convention,
            entries: self.entries().collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.convention {
            Convention::Ideal => "I",
            Convention::Quotient => "S/I",
        };
        for e in self.entries() {
            writeln!(f, "beta_{{{},{}}}({name}) = {}", e.i, e.j, e.value)?;
        }
        Ok(())
    }
}

/// A squarefree ideal obtained by polarization, with the origin of each new
/// variable as `(original index, copy)`, copies counted from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub variables: Vec<(usize, u32)>,
}

/// Number of variables the polarization of `ideal` uses.
pub fn polarized_size(ideal: &MonomialIdeal) -> u128 {
    max_exponents(ideal).iter().map(|&e| e as u128).sum()
}

fn max_exponents(ideal: &MonomialIdeal) -> Vec<u32> {
    let mut top = vec![0u32; ideal.n()];
    for g in ideal.gens() {
        for (t, &e) in top.iter_mut().zip(g.exponents()) {
            *t = (*t).max(e);
        }
    }
    top
}

/// `x_i^e ↦ x_{i,1} ⋯ x_{i,e}`. The size should be checked with
/// [`polarized_size`] first; it can be large.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let top = max_exponents(ideal);
    let mut offset = Vec::with_capacity(top.len());
    let mut variables = Vec::new();
    for (i, &e) in top.iter().enumerate() {
        offset.push(variables.len());
        variables.extend((1..=e).map(|c| (i, c)));
    }
    let n = variables.len();
    let gens = ideal.gens().iter().map(|g| {
        Monomial::squarefree(
            n,
            g.support()
                .flat_map(|i| (0..g.exponent(i) as usize).map(move |c| (i, c)))
                .map(|(i, c)| offset[i] + c),
        )
    });
    Polarization {
        ideal: MonomialIdeal::new(n, gens).expect("same ring"),
        variables,
    }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal has no resolution to speak of here"));
    }
    if ideal.is_unit() {
        return Err(Error::domain("expected a proper ideal, got the unit ideal"));
    }
    Ok(())
}

fn require_squarefree(ideal: &MonomialIdeal) -> Result<()> {
    match ideal.gens().iter().find(|g| !g.is_squarefree()) {
        Some(bad) => Err(Error::domain(format!(
            "Hochster's formula needs a squarefree ideal; {bad} is not squarefree"
        ))),
        None => Ok(()),
    }
}

fn hochster_cap(n: usize) -> Result<()> {
    let limit = caps::current().polarized_vars.min(63);
    if n > limit {
        return Err(Error::Resource {
            cap: "polarized-vars",
            needed: n as u128,
            limit: limit as u128,
            hint: "; try the Koszul engine or the linear-quotients shortcut",
        });
    }
    Ok(())
}

/// Hochster's formula summed over every `W` (or only `|W| = j`).
///
/// `Δ_W` is a cone, hence acyclic, unless `W` is the union of the minimal
/// nonfaces it contains; those `W` are skipped.
fn hochster_sum(ideal: &MonomialIdeal, only_j: Option<usize>) -> Result<BettiTable> {
    let (c, _) = ideal.compress();
    let n = c.n();
    hochster_cap(n)?;
    let nonfaces: Vec<Face> = c.gens().iter().map(|g| Face(g.support_mask())).collect();
    let table = (1u64..1u64 << n)
        .into_par_iter()
        .filter(|w| only_j.is_none_or(|j| w.count_ones() as usize == j))
        .fold(
            || BettiTable::new(Convention::Quotient),
            |mut acc, w| {
                let w = Face(w);
                let union = nonfaces
                    .iter()
                    .filter(|nf| nf.is_subset(w))
                    .fold(0, |a, nf| a | nf.0);
                if union != w.0 {
                    return acc;
                }
                let h = reduced_homology_of_faces(&faces_within(&nonfaces, w));
                let j = w.len();
                for (k, &dim) in h.iter().enumerate() {
                    // dimension s = k - 1 contributes to i = j - s - 1 = j - k
                    acc.add(j - k, j as u64, dim as u64);
                }
                acc
            },
        )
        .reduce(|| BettiTable::new(Convention::Quotient), BettiTable::merge);
    let mut table = table;
    if only_j.is_none_or(|j| j == 0) {
        table.add(0, 0, 1);
    }
    Ok(table)
}

/// `β_{i,j}(S/I)` by Hochster's formula, for squarefree proper `I`.
pub fn hochster_betti(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<u64> {
    require_squarefree(ideal)?;
    if ideal.is_unit() {
        return Err(Error::domain("expected a proper ideal, got the unit ideal"));
    }
    Ok(hochster_sum(ideal, Some(j))?.get(i, j as u64))
}

/// The full quotient-indexed table by Hochster's formula.
pub fn hochster_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_squarefree(ideal)?;
    if ideal.is_unit() {
        return Err(Error::domain("expected a proper ideal, got the unit ideal"));
    }
    hochster_sum(ideal, None)
}

/// Hochster's formula after polarization, so any proper ideal is accepted.
fn hochster_polarized(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let (c, _) = ideal.compress();
    if c.is_squarefree() {
        return hochster_sum(&c, None);
    }
    let size = polarized_size(&c);
    hochster_cap(usize::try_from(size).unwrap_or(usize::MAX))?;
    hochster_sum(&polarize(&c).ideal, None)
}

/// Homology of the Koszul complex `K(x; S/I)` in every multidegree
/// `b ≤ lcm(G(I))` (or only `|b| = j`).
///
/// In multidegree `b` the degree-`i` chains are spanned by `e_F` with
/// `|F| = i`, `F ⊆ supp(b)` and `x^{b-F} ∉ I`; boundary terms landing in `I`
/// vanish.
fn koszul_sum(ideal: &MonomialIdeal, only_j: Option<u64>) -> Result<BettiTable> {
    let (c, _) = ideal.compress();
    let n = c.n();
    if n > 63 {
        return Err(Error::resource("koszul-enum", n as u128, 63));
    }
    let top = max_exponents(&c);
    let limit = caps::current().koszul_enum;
    // Σ_b 2^{|supp b|} over the box, the number of basis symbols visited
    let work = top
        .iter()
        .try_fold(1u128, |acc, &l| acc.checked_mul(1 + 2 * l as u128))
        .unwrap_or(u128::MAX);
    if work > limit {
        return Err(Error::Resource {
            cap: "koszul-enum",
            needed: work,
            limit,
            hint: "; try the Hochster engine",
        });
    }
    let boxes: u64 = top.iter().map(|&l| l as u64 + 1).product();
    let gens: Vec<&[u32]> = c.gens().iter().map(|g| g.exponents()).collect();
    let in_ideal = |b: &[u32]| {
        gens.iter()
            .any(|g| g.iter().zip(b).all(|(gi, bi)| gi <= bi))
    };
    let table = (0..boxes)
        .into_par_iter()
        .fold(
            || BettiTable::new(Convention::Quotient),
            |mut acc, mut idx| {
                let mut b = vec![0u32; n];
                for (bi, &l) in b.iter_mut().zip(&top) {
                    let radix = l as u64 + 1;
                    *bi = (idx % radix) as u32;
                    idx /= radix;
                }
                let deg: u64 = b.iter().map(|&e| e as u64).sum();
                if only_j.is_some_and(|j| j != deg) {
                    return acc;
                }
                let supp = b
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |m, (k, _)| m | 1 << k);
                // alive symbols grouped by |F|
                let mut alive: Vec<Vec<u64>> = vec![Vec::new(); supp.count_ones() as usize + 1];
                let mut scratch = b.clone();
                let mut f = supp;
                loop {
                    for (k, s) in scratch.iter_mut().enumerate() {
                        *s = b[k] - (f >> k & 1) as u32;
                    }
                    if !in_ideal(&scratch) {
                        alive[f.count_ones() as usize].push(f);
                    }
                    if f == 0 {
                        break;
                    }
                    f = (f - 1) & supp;
                }
                while alive.last().is_some_and(Vec::is_empty) {
                    alive.pop();
                }
                if alive.is_empty() {
                    return acc;
                }
                for group in &mut alive {
                    group.sort_unstable();
                }
                let mut ranks = vec![0usize; alive.len() + 1];
                for k in 1..alive.len() {
                    let index: HashMap<u64, u32> = alive[k - 1]
                        .iter()
                        .enumerate()
                        .map(|(r, &g)| (g, r as u32))
                        .collect();
                    let cols: Vec<SparseRow> = alive[k]
                        .iter()
                        .map(|&g| {
                            let face = Face(g);
                            let mut col: SparseRow = face
                                .vertices()
                                .filter_map(|p| {
                                    let sign = if face.sign_position(p).is_multiple_of(2) { 1 } else { -1 };
                                    index.get(&face.without(p).0).map(|&r| (r, sign))
                                })
                                .collect();
                            col.sort_unstable_by_key(|e| e.0);
                            col
                        })
                        .collect();
                    ranks[k] = linalg::rank(cols);
                }
                for k in 0..alive.len() {
                    acc.add(k, deg, (alive[k].len() - ranks[k] - ranks[k + 1]) as u64);
                }
                acc
            },
        )
        .reduce(|| BettiTable::new(Convention::Quotient), BettiTable::merge);
    Ok(table)
}

/// `β_{i,j}(S/I)` from the degree-`j` strand of the Koszul complex.
pub fn koszul_betti_oracle(ideal: &MonomialIdeal, i: usize, j: u64) -> Result<u64> {
    Ok(koszul_sum(ideal, Some(j))?.get(i, j))
}

/// The full quotient-indexed table from the Koszul complex.
pub fn koszul_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    koszul_sum(ideal, None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    #[default]
    Auto,
    Hochster,
    Koszul,
    LinearQuotients,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "hochster" => Ok(Engine::Hochster),
            "koszul" => Ok(Engine::Koszul),
            "linear-quotients" | "lq" => Ok(Engine::LinearQuotients),
            other => Err(Error::Parse(format!("unknown engine `{other}`"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Hochster => "hochster",
            Engine::Koszul => "koszul",
            Engine::LinearQuotients => "linear-quotients",
        })
    }
}

/// Ideal-indexed Betti table of a proper nonzero ideal, with the engine that
/// produced it. `Auto` prefers Hochster and falls back to Koszul when the
/// polarization is too large.
pub fn betti_table_with(ideal: &MonomialIdeal, engine: Engine) -> Result<(BettiTable, Engine)> {
    require_proper(ideal)?;
    let (table, used) = match engine {
        Engine::Hochster => (hochster_polarized(ideal)?, Engine::Hochster),
        Engine::Koszul => (koszul_table(ideal)?, Engine::Koszul),
        Engine::LinearQuotients => {
            return Err(Error::domain(
                "the linear-quotients shortcut gives regularity only, not a Betti table",
            ))
        }
        Engine::Auto => match hochster_polarized(ideal) {
            Ok(t) => (t, Engine::Hochster),
            Err(e) if e.is_resource() => (koszul_table(ideal)?, Engine::Koszul),
            Err(e) => return Err(e),
        },
    };
    Ok((table.to_convention(Convention::Ideal), used))
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    Ok(betti_table_with(ideal, Engine::Auto)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// The unit ideal, regularity 0 by convention.
    Trivial,
    LinearQuotients,
    Hochster,
    Koszul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub value: u64,
    pub method: Method,
}

pub fn regularity(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(regularity_with(ideal, Engine::Auto)?.value)
}

/// Regularity of a nonzero ideal. `Auto` tries a budgeted linear-quotients
/// search, then Hochster, then Koszul.
pub fn regularity_with(ideal: &MonomialIdeal, engine: Engine) -> Result<Regularity> {
    if ideal.is_zero() {
        return Err(Error::domain("regularity of the zero ideal is undefined"));
    }
    if ideal.is_unit() {
        return Ok(Regularity {
            value: 0,
            method: Method::Trivial,
        });
    }
    let from_table = |t: BettiTable, method| Regularity {
        value: t.regularity().expect("proper nonzero ideal has a nonempty table"),
        method,
    };
    let omega = ideal.omega().expect("nonzero");
    match engine {
        Engine::Hochster => Ok(from_table(hochster_polarized(ideal)?, Method::Hochster)),
        Engine::Koszul => Ok(from_table(koszul_table(ideal)?, Method::Koszul)),
        Engine::LinearQuotients => match linear_quotients_search(ideal, None)? {
            LqSearch::Found(_) => Ok(Regularity {
                value: omega,
                method: Method::LinearQuotients,
            }),
            _ => Err(Error::domain("no linear quotients order exists for this ideal")),
        },
        Engine::Auto => {
            if ideal.len() <= caps::current().lq_generators {
                if let LqSearch::Found(_) = linear_quotients_search(ideal, Some(LQ_SHORTCUT_BUDGET))? {
                    return Ok(Regularity {
                        value: omega,
                        method: Method::LinearQuotients,
                    });
                }
            }
            match hochster_polarized(ideal) {
                Ok(t) => Ok(from_table(t, Method::Hochster)),
                Err(e) if e.is_resource() => Ok(from_table(koszul_table(ideal)?, Method::Koszul)),
                Err(e) => Err(e),
            }
        }
    }
}

pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    has_linear_resolution_with(ideal, Engine::Auto)
}

/// Equigenerated in degree `d` with regularity exactly `d`.
pub fn has_linear_resolution_with(ideal: &MonomialIdeal, engine: Engine) -> Result<bool> {
    require_proper(ideal)?;
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    Ok(regularity_with(ideal, engine)?.value == ideal.alpha().expect("nonzero"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialLevel {
    pub order: u64,
    pub regularity: u64,
    pub expected: u64,
    pub method: Method,
}

impl DifferentialLevel {
    pub fn is_linear(&self) -> bool {
        self.regularity == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialReport {
    pub holds: bool,
    pub levels: Vec<DifferentialLevel>,
}

/// `reg ∂^ℓ(I)` against `α(I) - ℓ` for every `0 ≤ ℓ ≤ α(I)`.
pub fn differential_linear_resolution(
    ideal: &MonomialIdeal,
    engine: Engine,
) -> Result<DifferentialReport> {
    require_proper(ideal)?;
    if !ideal.is_equigenerated() {
        return Err(Error::domain(
            "differential linear resolution needs an equigenerated ideal",
        ));
    }
    let alpha = ideal.alpha().expect("nonzero");
    let mut levels = Vec::new();
    for l in 0..=alpha {
        let g = iterated_gradient(ideal, l as u32);
        let reg = regularity_with(&g, engine)?;
        levels.push(DifferentialLevel {
            order: l,
            regularity: reg.value,
            expected: alpha - l,
            method: reg.method,
        });
    }
    Ok(DifferentialReport {
        holds: levels.iter().all(DifferentialLevel::is_linear),
        levels,
    })
}

pub fn has_differential_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(differential_linear_resolution(ideal, Engine::Auto)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradient::gradient;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn hochster_examples() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(hochster_betti(&i, 1, 2).unwrap(), 1);
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(hochster_betti(&i, 2, 3).unwrap(), 1);
        assert_eq!(hochster_betti(&i, 1, 2).unwrap(), 2);
        assert!(hochster_betti(&ideal(1, &[&[2]]), 1, 2).is_err());
    }

    #[test]
    fn koszul_examples() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(koszul_betti_oracle(&i, 1, 2).unwrap(), 1);
        let tri = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(koszul_betti_oracle(&tri, 1, 2).unwrap(), 3);
        assert_eq!(koszul_betti_oracle(&tri, 2, 3).unwrap(), 2);
        assert_eq!(koszul_table(&tri).unwrap(), hochster_table(&tri).unwrap());
    }

    #[test]
    fn zero_and_unit_koszul() {
        let t = koszul_table(&MonomialIdeal::zero(2)).unwrap();
        assert_eq!(t.entries().count(), 1);
        assert_eq!(t.get(0, 0), 1);
        assert!(koszul_table(&MonomialIdeal::unit(2)).unwrap().is_empty());
    }

    #[test]
    fn polarization() {
        let p = polarize(&ideal(1, &[&[2]]));
        assert_eq!(p.ideal, ideal(2, &[&[1, 1]]));
        assert_eq!(p.variables, vec![(0, 1), (0, 2)]);
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let p = polarize(&i);
        assert_eq!(p.variables, vec![(0, 1), (0, 2), (1, 1)]);
        assert_eq!(p.ideal, ideal(3, &[&[1, 1, 0], &[1, 0, 1]]));
        assert_eq!(
            koszul_table(&i).unwrap(),
            koszul_table(&p.ideal).unwrap()
        );
        assert_eq!(hochster_table(&p.ideal).unwrap(), koszul_table(&i).unwrap());
    }

    #[test]
    fn table_examples() {
        let t = betti_table(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![BettiEntry { i: 0, j: 2, value: 1 }]);
        let t = betti_table(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(t.get(0, 1), 2);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.entries().count(), 2);
        let mid = ideal(6, &[
            &[1, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1],
        ]);
        assert_eq!(betti_table(&mid).unwrap().regularity(), Some(3));
    }

    #[test]
    fn convention_round_trip() {
        let t = hochster_table(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])).unwrap();
        let ideal_t = t.to_convention(Convention::Ideal);
        for e in ideal_t.entries() {
            assert_eq!(e.value, t.get(e.i + 1, e.j));
        }
        assert_eq!(ideal_t.to_convention(Convention::Quotient), t);
    }

    #[test]
    fn regularity_examples() {
        let b = 3;
        let i = ideal(4, &[&[1, 1, 0, 0], &[1, 0, b, 0], &[0, 1, 0, b]]);
        for engine in [Engine::Auto, Engine::Hochster, Engine::Koszul] {
            assert_eq!(regularity_with(&i, engine).unwrap().value, b as u64 + 1);
        }
        let ci = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, b, 0], &[0, 0, 0, b]]);
        assert_eq!(gradient(&i), ci);
        for engine in [Engine::Auto, Engine::Hochster, Engine::Koszul] {
            assert_eq!(regularity_with(&ci, engine).unwrap().value, 2 * b as u64 - 1);
        }
        let two = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(regularity_with(&two, Engine::Koszul).unwrap().value, 3);
        assert_eq!(regularity(&MonomialIdeal::unit(3)).unwrap(), 0);
        assert!(regularity(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn linear_resolution_examples() {
        assert!(has_linear_resolution(&ideal(3, &[&[1, 1, 0], &[1, 0, 1]])).unwrap());
        let disjoint = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(!has_linear_resolution(&disjoint).unwrap());
        assert!(!has_linear_resolution_with(&disjoint, Engine::Koszul).unwrap());
        assert_eq!(regularity(&disjoint).unwrap(), 3);
    }

    #[test]
    fn differential_examples() {
        let m2 = MonomialIdeal::maximal(3).power(2).unwrap();
        let r = differential_linear_resolution(&m2, Engine::Auto).unwrap();
        assert!(r.holds);
        assert_eq!(r.levels.len(), 3);
        let run = ideal(6, &[
            &[1, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1],
        ]);
        let r = differential_linear_resolution(&run, Engine::Hochster).unwrap();
        assert!(!r.holds);
        assert_eq!(r.levels[1].regularity, 3);
        assert!(differential_linear_resolution(&ideal(2, &[&[1, 0], &[0, 2]]), Engine::Auto).is_err());
    }
}
