use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caps;
use crate::error::{Error, Result};

/// A monomial `x^a` stored as its exponent vector.
///
/// Variables are indexed from 0 in the library; text formats and `Display`
/// use the 1-based names `x1, x2, ...`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let bound = caps::current().max_exponent;
        if let Some(&e) = exps.iter().find(|&&e| e > bound) {
            return Err(Error::Overflow(e as u64));
        }
        Ok(Monomial { exps })
    }

    pub(crate) fn from_vec_unchecked(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial `x_F` on the given variable set.
    pub fn squarefree(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; n];
        for v in vars {
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Bitmask of the support; callers guarantee `n <= 64`.
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1 << i))
    }

    /// Largest variable index dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_same(self.n(), other.n())?;
        let bound = caps::current().max_exponent;
        let mut exps = Vec::with_capacity(self.n());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            let e = a.checked_add(*b).filter(|&e| e <= bound);
            match e {
                Some(e) => exps.push(e),
                None => return Err(Error::Overflow(*a as u64 + *b as u64)),
            }
        }
        Ok(Monomial { exps })
    }

    pub fn mul_var(&self, i: usize) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        let e = exps[i] as u64 + 1;
        if e > caps::current().max_exponent as u64 {
            return Err(Error::Overflow(e));
        }
        exps[i] += 1;
        Ok(Monomial { exps })
    }

    /// `self / x_i`, or `None` when `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    /// `self / other`, or `None` when `other` does not divide.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)`, the generator contributed by `self` to the
    /// colon ideal `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Index of the variable when the monomial is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Restricts to the listed variables, in the listed order.
    pub fn select(&self, vars: &[usize]) -> Monomial {
        Monomial {
            exps: vars.iter().map(|&v| self.exps[v]).collect(),
        }
    }

    /// Re-embeds into `n` variables, sending local variable `k` to `vars[k]`.
    pub fn embed(&self, n: usize, vars: &[usize]) -> Monomial {
        let mut exps = vec![0; n];
        for (k, &v) in vars.iter().enumerate() {
            exps[v] = self.exps[k];
        }
        Monomial { exps }
    }
}

pub(crate) fn check_same(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Canonical order: degree ascending, then exponent sequences
/// lexicographically descending (so `x1^2 < x1*x2 < x2^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
