//! Decision procedures for structural classes of monomial ideals: linear
//! quotients, vertex splittability, (componentwise) polymatroidal, and
//! (strongly) stable ideals.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::caps;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An ordering `u_1, ..., u_m` of `G(I)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientOrder {
    pub order: Vec<Monomial>,
}

/// Generators `w / gcd(w, u)` of `(prefix) : (u)`, minimalized.
pub fn colon_ideal(prefix: &[Monomial], u: &Monomial) -> MonomialIdeal {
    MonomialIdeal::minimalized(u.n(), prefix.iter().map(|w| w.colon(u)).collect())
}

/// `(prefix) : (u)` is generated by variables, tested without minimalizing:
/// every `w / gcd(w, u)` must be divisible by one that is a single variable.
fn colon_is_linear<'a>(prefix: impl Iterator<Item = &'a Monomial> + Clone, u: &Monomial) -> bool {
    let mut vars = 0u128;
    let mut quotients = Vec::new();
    for w in prefix {
        let q = w.colon(u);
        match q.as_variable() {
            Some(v) if v < 128 => vars |= 1 << v,
            _ => quotients.push(q),
        }
    }
    quotients
        .iter()
        .all(|q| q.support().any(|v| v < 128 && vars >> v & 1 == 1))
}

impl QuotientOrder {
    /// The colon ideals `(u_1, ..., u_{i-1}) : (u_i)` for `i ≥ 2`.
    pub fn colons(&self) -> Vec<MonomialIdeal> {
        (1..self.order.len())
            .map(|i| colon_ideal(&self.order[..i], &self.order[i]))
            .collect()
    }

    /// True iff this is a permutation of `G(I)` with every colon generated
    /// by variables.
    pub fn verify(&self, ideal: &MonomialIdeal) -> bool {
        let mut sorted = self.order.clone();
        sorted.sort();
        if sorted != ideal.gens() {
            return false;
        }
        self.colons()
            .iter()
            .all(|c| c.gens().iter().all(|g| g.degree() == 1))
    }

    /// The order induced by a vertex splitting `I = x_i I_1 + I_2`: `x_i`
    /// times an order of `I_1`, followed by an order of `I_2`.
    pub fn from_vertex_splitting(witness: &SplitWitness) -> QuotientOrder {
        fn walk(w: &SplitWitness, out: &mut Vec<Monomial>) {
            match w {
                SplitWitness::Base(ideal) => out.extend(ideal.gens().iter().cloned()),
                SplitWitness::Split { var, left, right, .. } => {
                    let mut inner = Vec::new();
                    walk(left, &mut inner);
                    out.extend(inner.iter().map(|g| g.mul_var(*var).expect("exponent fits")));
                    walk(right, out);
                }
            }
        }
        let mut order = Vec::new();
        walk(witness, &mut order);
        QuotientOrder { order }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LqSearch {
    Found(QuotientOrder),
    /// The search was exhaustive and found nothing.
    NoOrder,
    /// The node budget ran out first.
    Inconclusive,
}

/// Exhaustive search for a linear-quotients order.
pub fn linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<QuotientOrder>> {
    match linear_quotients_search(ideal, None)? {
        LqSearch::Found(o) => Ok(Some(o)),
        LqSearch::NoOrder => Ok(None),
        LqSearch::Inconclusive => unreachable!("unbounded search always concludes"),
    }
}

/// Backtracking over admissible prefixes, candidates in canonical order.
/// Whether a prefix extends depends only on its set of generators, so
/// failed sets are memoized.
pub fn linear_quotients_search(ideal: &MonomialIdeal, node_budget: Option<u64>) -> Result<LqSearch> {
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal has no generators to order"));
    }
    let m = ideal.len();
    let limit = caps::current().lq_generators.min(64);
    if m > limit {
        return Err(Error::resource("lq-generators", m as u128, limit as u128));
    }
    let gens = ideal.gens();
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut search = Search {
        gens,
        failed: HashSet::new(),
        nodes: 0,
        budget: node_budget,
    };
    let mut order = Vec::with_capacity(m);
    Ok(match search.extend(0, full, &mut order) {
        Some(true) => LqSearch::Found(QuotientOrder {
            order: order.iter().map(|&k| gens[k].clone()).collect(),
        }),
        Some(false) => LqSearch::NoOrder,
        None => LqSearch::Inconclusive,
    })
}

struct Search<'a> {
    gens: &'a [Monomial],
    failed: HashSet<u64>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn extend(&mut self, set: u64, full: u64, order: &mut Vec<usize>) -> Option<bool> {
        if set == full {
            return Some(true);
        }
        if self.failed.contains(&set) {
            return Some(false);
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        for c in 0..self.gens.len() {
            if set >> c & 1 == 1 {
                continue;
            }
            let chosen = order.iter().map(|&k| &self.gens[k]);
            if !colon_is_linear(chosen, &self.gens[c]) {
                continue;
            }
            order.push(c);
            match self.extend(set | 1 << c, full, order) {
                Some(false) => {
                    order.pop();
                }
                found_or_out => return found_or_out,
            }
        }
        self.failed.insert(set);
        Some(false)
    }
}

/// Recursion tree of a vertex splitting. Variables are 0-based indices of
/// the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitWitness {
    /// Zero, unit, or principal.
    Base(MonomialIdeal),
    Split {
        var: usize,
        i1: MonomialIdeal,
        i2: MonomialIdeal,
        left: Box<SplitWitness>,
        right: Box<SplitWitness>,
    },
}

impl SplitWitness {
    pub fn depth(&self) -> usize {
        match self {
            SplitWitness::Base(_) => 0,
            SplitWitness::Split { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }
}

/// `I = x_i I_1 + I_2` with `I_1` the generators divisible by `x_i`, divided
/// by `x_i`, and `I_2` the rest. `None` if `I_2 ⊄ I_1` or `I_1 = 0`.
fn split_on(ideal: &MonomialIdeal, var: usize) -> Option<(MonomialIdeal, MonomialIdeal)> {
    let (with, without): (Vec<&Monomial>, Vec<&Monomial>) =
        ideal.gens().iter().partition(|g| g.exponent(var) > 0);
    if with.is_empty() {
        return None;
    }
    let i1 = MonomialIdeal::minimalized(
        ideal.n(),
        with.iter().map(|g| g.div_var(var).expect("divisible")).collect(),
    );
    let i2 = MonomialIdeal::from_minimal(ideal.n(), without.into_iter().cloned().collect());
    if !i2.gens().iter().all(|g| i1.contains_unchecked(g)) {
        return None;
    }
    Some((i1, i2))
}

#[derive(Default)]
struct SplitMemo {
    known: HashMap<MonomialIdeal, bool>,
}

impl SplitMemo {
    fn decide(&mut self, ideal: &MonomialIdeal) -> bool {
        if ideal.len() <= 1 {
            return true;
        }
        let (key, _) = ideal.compress();
        if let Some(&v) = self.known.get(&key) {
            return v;
        }
        let mut result = false;
        for var in 0..key.n() {
            if let Some((i1, i2)) = split_on(&key, var) {
                if self.decide(&i1) && self.decide(&i2) {
                    result = true;
                    break;
                }
            }
        }
        self.known.insert(key, result);
        result
    }

    fn witness(&mut self, ideal: &MonomialIdeal) -> Option<SplitWitness> {
        if ideal.len() <= 1 {
            return Some(SplitWitness::Base(ideal.clone()));
        }
        for var in ideal.support() {
            if let Some((i1, i2)) = split_on(ideal, var) {
                if self.decide(&i1) && self.decide(&i2) {
                    let left = self.witness(&i1)?;
                    let right = self.witness(&i2)?;
                    return Some(SplitWitness::Split {
                        var,
                        i1,
                        i2,
                        left: Box::new(left),
                        right: Box::new(right),
                    });
                }
            }
        }
        None
    }
}

pub fn is_vertex_splittable(ideal: &MonomialIdeal) -> bool {
    SplitMemo::default().decide(ideal)
}

/// A splitting tree if `ideal` is vertex splittable.
pub fn vertex_splitting(ideal: &MonomialIdeal) -> Option<SplitWitness> {
    SplitMemo::default().witness(ideal)
}

/// Exchange property on the exponent vectors of `G(I)`; false unless
/// equigenerated.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    if ideal.is_zero() || !ideal.is_equigenerated() {
        return false;
    }
    let bases: HashSet<&[u32]> = ideal.gens().iter().map(|g| g.exponents()).collect();
    let n = ideal.n();
    let mut w = vec![0u32; n];
    for u in ideal.gens().iter().map(|g| g.exponents()) {
        for v in ideal.gens().iter().map(|g| g.exponents()) {
            for i in (0..n).filter(|&i| u[i] > v[i]) {
                let ok = (0..n).filter(|&j| u[j] < v[j]).any(|j| {
                    w.copy_from_slice(u);
                    w[i] -= 1;
                    w[j] += 1;
                    bases.contains(w.as_slice())
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Components `I_<j>` for `α ≤ j ≤ ω` are polymatroidal, and
/// `I_<ω+1> = m·I_<ω>`, past which products with `m` keep polymatroidality.
pub fn is_componentwise_polymatroidal(ideal: &MonomialIdeal) -> Result<bool> {
    let (Some(alpha), Some(omega)) = (ideal.alpha(), ideal.omega()) else {
        return Ok(false);
    };
    for j in alpha..=omega {
        if !is_polymatroidal(&ideal.degree_component(j)?) {
            return Ok(false);
        }
    }
    let top = ideal.degree_component(omega)?;
    let next = ideal.degree_component(omega + 1)?;
    let lifted = MonomialIdeal::maximal(ideal.n()).product(&top)?;
    Ok(next == lifted)
}

/// `x_i (u / x_{max(u)}) ∈ I` for each `u ∈ G(I)` and `i < max(u)`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|u| {
        let Some(top) = u.max_var() else { return true };
        let base = u.div_var(top).expect("top variable divides");
        (0..top).all(|i| ideal.contains_unchecked(&base.mul_var(i).expect("exponent fits")))
    })
}

/// `x_i (u / x_j) ∈ I` for each `u ∈ G(I)`, `x_j | u` and `i < j`.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|u| {
        u.support().all(|j| {
            let base = u.div_var(j).expect("support variable divides");
            (0..j).all(|i| ideal.contains_unchecked(&base.mul_var(i).expect("exponent fits")))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradient::gradient;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn lq_examples() {
        let b = 3;
        let i = ideal(4, &[&[1, 1, 0, 0], &[1, 0, b, 0], &[0, 1, 0, b]]);
        let written = QuotientOrder { order: i.gens().to_vec() };
        assert!(written.verify(&i));
        let colons = written.colons();
        assert_eq!(colons[0], ideal(4, &[&[0, 1, 0, 0]]));
        assert_eq!(colons[1], ideal(4, &[&[1, 0, 0, 0]]));
        assert!(linear_quotients_order(&i).unwrap().unwrap().verify(&i));

        let disjoint = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(linear_quotients_order(&disjoint).unwrap(), None);
        assert_eq!(linear_quotients_search(&disjoint, Some(1)).unwrap(), LqSearch::Inconclusive);
    }

    #[test]
    fn overlapping_windows_have_lq_as_written() {
        let d = 4;
        let gens: Vec<Monomial> = (0..=d)
            .map(|i| Monomial::squarefree(2 * d, i..i + d))
            .collect();
        let i = MonomialIdeal::new(2 * d, gens.clone()).unwrap();
        let mut written = gens;
        written.sort_by_key(|g| std::cmp::Reverse(g.exponents().to_vec()));
        let order = QuotientOrder { order: written };
        assert!(order.verify(&i));
        for (k, c) in order.colons().iter().enumerate() {
            assert_eq!(c, &MonomialIdeal::prime(2 * d, [k]));
        }
    }

    #[test]
    fn verify_rejects_wrong_sets() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let short = QuotientOrder { order: vec![i.gens()[0].clone()] };
        assert!(!short.verify(&i));
    }

    #[test]
    fn vertex_splittable_examples() {
        assert!(is_vertex_splittable(&MonomialIdeal::maximal(4)));
        let tri = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(is_vertex_splittable(&tri));
        let w = vertex_splitting(&tri).unwrap();
        let order = QuotientOrder::from_vertex_splitting(&w);
        assert!(order.verify(&tri));
        assert!(!is_vertex_splittable(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])));
        assert!(vertex_splitting(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])).is_none());
        assert!(is_vertex_splittable(&MonomialIdeal::zero(2)));
        assert!(is_vertex_splittable(&MonomialIdeal::unit(2)));
        let non_sqfree = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert!(is_vertex_splittable(&non_sqfree));
        let w = vertex_splitting(&non_sqfree).unwrap();
        assert!(QuotientOrder::from_vertex_splitting(&w).verify(&non_sqfree));
    }

    #[test]
    fn polymatroidal_examples() {
        let m3 = MonomialIdeal::maximal(3).power(3).unwrap();
        assert!(is_polymatroidal(&m3));
        let (v, _) = crate::ideal::veronese_type(3, &[2, 1, 2], 3).unwrap();
        assert!(is_polymatroidal(&v));
        assert!(is_polymatroidal(&gradient(&v)));
        assert!(!is_polymatroidal(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])));
        assert!(!is_polymatroidal(&ideal(2, &[&[1, 0], &[0, 2]])));
    }

    #[test]
    fn componentwise_examples() {
        assert!(is_componentwise_polymatroidal(&MonomialIdeal::maximal(3).power(2).unwrap()).unwrap());
        assert!(is_componentwise_polymatroidal(&ideal(3, &[&[1, 0, 0], &[0, 1, 1]])).unwrap());
        assert!(!is_componentwise_polymatroidal(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])).unwrap());
    }

    #[test]
    fn stability_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(is_strongly_stable(&i));
        assert!(is_stable(&i));
        assert!(!is_stable(&ideal(2, &[&[0, 1]])));
        assert!(is_strongly_stable(&MonomialIdeal::maximal(3).power(3).unwrap()));
        // stable, not strongly stable
        let s = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]);
        assert!(is_stable(&s));
        assert!(!is_strongly_stable(&s));
    }
}
