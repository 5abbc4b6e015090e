use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::caps;
use crate::error::{Error, Result};
use crate::monomial::{check_same, Monomial};

/// A monomial ideal, stored by its minimal generating set `G(I)` in canonical
/// order. The zero ideal has no generators; the unit ideal is generated by 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorStats {
    pub alpha: u64,
    pub omega: u64,
    pub mu: usize,
    /// 0-based variable indices.
    pub support: BTreeSet<usize>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only divisibility-minimal
    /// elements.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut v = Vec::new();
        for g in gens {
            check_same(n, g.n())?;
            v.push(g);
        }
        Ok(Self::minimalized(n, v))
    }

    pub(crate) fn minimalized(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // sorted by degree, so only earlier elements can divide g
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { n, gens: kept }
    }

    /// Wraps generators already known to be minimal and canonically sorted.
    pub(crate) fn from_minimal(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { n, gens }
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        let mons = gens
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, mons)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::unit(n)],
        }
    }

    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal {
            n: u.n(),
            gens: vec![u],
        }
    }

    /// The monomial prime generated by the listed variables.
    pub fn prime(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::minimalized(n, vars.into_iter().map(|i| Monomial::var(n, i)).collect())
    }

    /// The graded maximal ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        Self::prime(n, 0..n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn alpha(&self) -> Option<u64> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn omega(&self) -> Option<u64> {
        self.gens.last().map(Monomial::degree)
    }

    /// Union of generator supports, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for g in &self.gens {
            for i in g.support() {
                seen[i] = true;
            }
        }
        (0..self.n).filter(|&i| seen[i]).collect()
    }

    pub fn stats(&self) -> Result<GeneratorStats> {
        let (alpha, omega) = match (self.alpha(), self.omega()) {
            (Some(a), Some(o)) => (a, o),
            _ => return Err(Error::UndefinedStats),
        };
        Ok(GeneratorStats {
            alpha,
            omega,
            mu: self.gens.len(),
            support: self.support().into_iter().collect(),
        })
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        check_same(self.n, u.n())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_same(self.n, other.n)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    /// Ideal equality with a dimension check; same as `==` on matching rings.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        check_same(self.n, other.n)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(self.n, other.n)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimalized(self.n, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(self.n, other.n)?;
        let mut set = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                set.insert(a.mul(b)?);
            }
        }
        Ok(Self::minimalized(self.n, set.into_iter().collect()))
    }

    pub fn mul_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        check_same(self.n, u.n())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(u))
            .collect::<Result<Vec<_>>>()?;
        // multiplication by a monomial preserves minimality and order
        Ok(Self::minimalized(self.n, gens))
    }

    /// `I^k`, with `I^0` the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : x_i)` for a 0-based variable index.
    pub fn colon_by_variable(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|u| u.div_var(i).unwrap_or_else(|| u.clone()))
            .collect();
        Ok(Self::minimalized(self.n, gens))
    }

    /// `I_<j>`: the ideal generated by the degree-`j` monomials of `I`.
    pub fn degree_component(&self, j: u64) -> Result<MonomialIdeal> {
        self.degree_component_with_cap(j, caps::current().component_enum)
    }

    pub fn degree_component_with_cap(&self, j: u64, cap: u128) -> Result<MonomialIdeal> {
        let count = monomial_count(self.n, j);
        if count.is_none_or(|c| c > cap) {
            return Err(Error::resource(
                "component-enum",
                count.unwrap_or(u128::MAX),
                cap,
            ));
        }
        let mut set = HashSet::new();
        for g in self.gens.iter().filter(|g| g.degree() <= j) {
            for m in monomials_of_degree(self.n, j - g.degree()) {
                set.insert(g.mul(&m)?);
            }
        }
        let mut gens: Vec<Monomial> = set.into_iter().collect();
        gens.sort();
        Ok(Self::from_minimal(self.n, gens))
    }

    /// Monomial complete intersection: pairwise disjoint generator supports.
    pub fn is_complete_intersection(&self) -> Result<bool> {
        if !self.is_proper_nonzero() {
            return Err(Error::domain(
                "complete-intersection test needs a proper nonzero ideal",
            ));
        }
        let mut seen = vec![false; self.n];
        for g in &self.gens {
            for i in g.support() {
                if seen[i] {
                    return Ok(false);
                }
                seen[i] = true;
            }
        }
        Ok(true)
    }

    /// Drops variables outside the support. Returns the compressed ideal and
    /// the original index of each kept variable.
    pub fn compress(&self) -> (MonomialIdeal, Vec<usize>) {
        let vars = self.support();
        let gens = self.gens.iter().map(|g| g.select(&vars)).collect();
        (Self::minimalized(vars.len(), gens), vars)
    }

    /// Inverse of [`compress`](Self::compress).
    pub fn embed(&self, n: usize, vars: &[usize]) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.embed(n, vars)).collect();
        Self::minimalized(n, gens)
    }
}

/// Number of monomials of degree `j` in `n` variables, `None` on overflow.
pub fn monomial_count(n: usize, j: u64) -> Option<u128> {
    if n == 0 {
        return Some(u128::from(j == 0));
    }
    crate::binom::binomial_checked(n as u128 - 1 + j as u128, j as u128)
}

/// All monomials of degree `j` in `n` variables, in no particular order.
pub fn monomials_of_degree(n: usize, j: u64) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_vec_unchecked(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if j == 0 {
            out.push(Monomial::unit(0));
        }
        return out;
    }
    rec(0, j as u32, &mut vec![0; n], &mut out);
    out
}

/// The ideal of Veronese type `(x^b : |b| = d, b <= a)`. The flag is set
/// when `d > |a|`, in which case the zero ideal is returned.
pub fn veronese_type(n: usize, bounds: &[u32], d: u64) -> Result<(MonomialIdeal, bool)> {
    check_same(n, bounds.len())?;
    let total: u64 = bounds.iter().map(|&a| a as u64).sum();
    if d > total {
        return Ok((MonomialIdeal::zero(n), true));
    }
    fn rec(i: usize, left: u64, bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == bounds.len() {
            if left == 0 {
                out.push(Monomial::from_vec_unchecked(cur.clone()));
            }
            return;
        }
        let rest: u64 = bounds[i + 1..].iter().map(|&a| a as u64).sum();
        let lo = left.saturating_sub(rest);
        let hi = left.min(bounds[i] as u64);
        for e in lo..=hi {
            cur[i] = e as u32;
            rec(i + 1, left - e, bounds, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, bounds, &mut vec![0; n], &mut out);
    Ok((MonomialIdeal::minimalized(n, out), false))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}

/// Serialized as `{"n": .., "gens": [[exponents], ..]}`.
impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("n", &self.n)?;
        let gens: Vec<&[u32]> = self.gens.iter().map(|g| g.exponents()).collect();
        st.serialize_field("gens", &gens)?;
        st.end()
    }
}
