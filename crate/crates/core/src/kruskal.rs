//! Macaulay representations, Kruskal–Katona shadow bounds, and an exact
//! colex enumeration used to check them.
//!
//! All binomials are exact `u128` with overflow reported as an error; the
//! inputs of interest stay far below that range.

use std::collections::HashSet;

use serde::Serialize;

use crate::binom::binomial_checked;
use crate::caps;
use crate::error::{Error, Result};

/// `a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_t, t)` with
/// `a_d > a_{d-1} > ... > a_t ≥ t ≥ 1`. Terms are `(a_i, i)`, `i` descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MacaulayRep {
    pub d: u64,
    pub terms: Vec<(u128, u64)>,
}

fn binom(n: u128, k: u64) -> Result<u128> {
    binomial_checked(n, k as u128).ok_or(Error::Overflow(u64::MAX))
}

impl MacaulayRep {
    /// `Σ C(a_i, i)`.
    pub fn value(&self) -> Result<u128> {
        self.terms.iter().try_fold(0u128, |acc, &(a, i)| {
            acc.checked_add(binom(a, i)?).ok_or(Error::Overflow(u64::MAX))
        })
    }

    /// Indices descend by one from `d`, the tops strictly decrease, and the
    /// last term has `a_t ≥ t ≥ 1`.
    pub fn is_valid(&self) -> bool {
        let consecutive = self
            .terms
            .iter()
            .enumerate()
            .all(|(k, &(_, i))| i + k as u64 == self.d);
        let decreasing = self.terms.windows(2).all(|w| w[0].0 > w[1].0);
        let tail = self.terms.last().is_some_and(|&(a, t)| t >= 1 && a >= t as u128);
        consecutive && decreasing && tail
    }

    /// `Σ C(a_i, i - 1)`.
    pub fn shadow(&self) -> Result<u128> {
        self.terms.iter().try_fold(0u128, |acc, &(a, i)| {
            acc.checked_add(binom(a, i - 1)?).ok_or(Error::Overflow(u64::MAX))
        })
    }
}

/// Largest `N` with `C(N, k) ≤ a`, for `a ≥ 1`, `k ≥ 1`.
fn largest_top(a: u128, k: u64) -> u128 {
    let fits = |n: u128| binomial_checked(n, k as u128).is_some_and(|c| c <= a);
    let mut lo = k as u128;
    let mut hi = lo.max(1) * 2;
    while fits(hi) {
        lo = hi;
        hi = hi.saturating_mul(2);
    }
    // fits(lo), !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy `d`-th Macaulay representation of `a`.
pub fn macaulay_rep(a: u128, d: u64) -> Result<MacaulayRep> {
    if a == 0 || d == 0 {
        return Err(Error::domain("Macaulay representations need a >= 1 and d >= 1"));
    }
    let mut rest = a;
    let mut terms = Vec::new();
    let mut i = d;
    while rest > 0 {
        let top = largest_top(rest, i);
        rest -= binom(top, i)?;
        terms.push((top, i));
        i -= 1;
    }
    Ok(MacaulayRep { d, terms })
}

/// `a^{(d-1)}`, the Kruskal–Katona lower bound on the shadow of `a`
/// `d`-sets.
pub fn shadow_bound(a: u128, d: u64) -> Result<u128> {
    if d < 2 {
        return Err(Error::domain("shadow bounds need d >= 2"));
    }
    macaulay_rep(a, d)?.shadow()
}

/// Exact shadow size of the first `a` `d`-subsets in colex order.
///
/// `k`-subsets of `{0, 1, ...}` as bitmasks in increasing numeric order are
/// exactly colex order, so the initial segment is generated by stepping to
/// the next integer with the same popcount.
pub fn colex_shadow_oracle(a: u128, d: u64) -> Result<u128> {
    if a == 0 || d < 2 {
        return Err(Error::domain("the colex oracle needs a >= 1 and d >= 2"));
    }
    let mut ground = d as u128;
    while binom(ground, d)? < a {
        ground += 1;
    }
    let layer = binom(ground, d)?;
    let limit = caps::current().colex_enum;
    if layer > limit || ground > 127 {
        return Err(Error::resource("colex-enum", layer, limit));
    }
    let mut shadow: HashSet<u128> = HashSet::new();
    let mut set: u128 = (1u128 << d) - 1;
    for _ in 0..a {
        let mut m = set;
        while m != 0 {
            let low = m & m.wrapping_neg();
            shadow.insert(set ^ low);
            m ^= low;
        }
        // next larger integer with the same number of ones
        let c = set & set.wrapping_neg();
        let r = set + c;
        set = (((r ^ set) >> 2) / c) | r;
    }
    Ok(shadow.len() as u128)
}

fn check_closed_form_range(n: u64, d: u64) -> Result<()> {
    if d < 3 || n < 2 * d {
        return Err(Error::domain(format!(
            "the closed forms need d >= 3 and n >= 2d, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

/// Closed-form Macaulay representation of `C(n, d) - 2d + 1`: the terms
/// `(n - i, d - i + 1)` for `1 ≤ i ≤ d - 2`, followed by
///
/// * `(n - d, 2), (2n - 4d + 2, 1)` when `2d ≤ n ≤ 3d - 3`,
/// * `(n - d + 1, 2)` when `n = 3d - 2`,
/// * `(n - d + 1, 2), (n - 3d + 2, 1)` when `n ≥ 3d - 1`.
pub fn closed_form_count(n: u64, d: u64) -> Result<MacaulayRep> {
    check_closed_form_range(n, d)?;
    let (n, d) = (n as u128, d as u128);
    let mut terms: Vec<(u128, u64)> = (1..=d - 2).map(|i| (n - i, (d - i + 1) as u64)).collect();
    if n <= 3 * d - 3 {
        terms.push((n - d, 2));
        terms.push((2 * n + 2 - 4 * d, 1));
    } else if n == 3 * d - 2 {
        terms.push((n - d + 1, 2));
    } else {
        terms.push((n - d + 1, 2));
        terms.push((n + 2 - 3 * d, 1));
    }
    Ok(MacaulayRep {
        d: d as u64,
        terms,
    })
}

/// `C(n, d-1) - 1` when `n ≤ 3d - 2`, else `C(n, d-1)`.
pub fn closed_form_shadow(n: u64, d: u64) -> Result<u128> {
    check_closed_form_range(n, d)?;
    let full = binom(n as u128, d - 1)?;
    Ok(if n <= 3 * d - 2 { full - 1 } else { full })
}

/// `C(n, d) - 2d + 1`.
pub fn many_generators_threshold(n: u64, d: u64) -> Result<i128> {
    let c = binom(n as u128, d)?;
    let c = i128::try_from(c).map_err(|_| Error::Overflow(u64::MAX))?;
    Ok(c - 2 * d as i128 + 1)
}

/// The numeric remark for `n < 2d`: with `a = C(20, 17) - 33` and
/// `b = C(20, 16) - 31`, compare `a^{(16)}` against `b` and the printed
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KkRemark {
    pub a: u128,
    pub d: u64,
    pub greedy_shadow: u128,
    pub colex_shadow: u128,
    pub printed_shadow: u128,
    pub threshold: u128,
    pub methods_agree: bool,
    pub matches_printed: bool,
    /// Whether `a^{(d-1)} < b` as computed.
    pub below_threshold: bool,
    /// Whether `a^{(d-1)} < b` as printed.
    pub printed_below_threshold: bool,
}

pub const PRINTED_REMARK_SHADOW: u128 = 4813;

pub fn kk_remark() -> Result<KkRemark> {
    let (n, d) = (20u64, 17u64);
    let a = u128::try_from(many_generators_threshold(n, d)?).expect("positive");
    let threshold = u128::try_from(many_generators_threshold(n, d - 1)?).expect("positive");
    let greedy = shadow_bound(a, d)?;
    let colex = colex_shadow_oracle(a, d)?;
    Ok(KkRemark {
        a,
        d,
        greedy_shadow: greedy,
        colex_shadow: colex,
        printed_shadow: PRINTED_REMARK_SHADOW,
        threshold,
        methods_agree: greedy == colex,
        matches_printed: greedy == PRINTED_REMARK_SHADOW,
        below_threshold: greedy < threshold,
        printed_below_threshold: PRINTED_REMARK_SHADOW < threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn representation_examples() {
        assert_eq!(macaulay_rep(5, 2).unwrap().terms, vec![(3, 2), (2, 1)]);
        assert_eq!(macaulay_rep(15, 3).unwrap().terms, vec![(5, 3), (3, 2), (2, 1)]);
        assert_eq!(macaulay_rep(56, 3).unwrap().terms, vec![(8, 3)]);
        assert!(macaulay_rep(0, 3).is_err());
    }

    #[test]
    fn shadow_examples() {
        assert_eq!(shadow_bound(5, 2).unwrap(), 4);
        assert_eq!(shadow_bound(15, 3).unwrap(), 14);
        assert_eq!(shadow_bound(56, 3).unwrap(), 28);
        assert!(shadow_bound(5, 1).is_err());
        assert_eq!(colex_shadow_oracle(5, 2).unwrap(), 4);
        assert_eq!(colex_shadow_oracle(20, 3).unwrap(), 15);
    }

    #[test]
    fn closed_form_examples() {
        let r = closed_form_count(6, 3).unwrap();
        assert_eq!(r.terms, vec![(5, 3), (3, 2), (2, 1)]);
        assert_eq!(r.value().unwrap(), 15);
        let r = closed_form_count(7, 3).unwrap();
        assert_eq!(r.terms, vec![(6, 3), (5, 2)]);
        assert_eq!(r.value().unwrap(), 30);
        let r = closed_form_count(10, 3).unwrap();
        assert_eq!(r.terms, vec![(9, 3), (8, 2), (3, 1)]);
        assert_eq!(r.value().unwrap(), 115);
        assert_eq!(closed_form_shadow(6, 3).unwrap(), 14);
        assert_eq!(closed_form_shadow(10, 3).unwrap(), 45);
        assert_eq!(closed_form_shadow(8, 4).unwrap(), 55);
        assert!(closed_form_count(5, 3).is_err());
        assert!(closed_form_shadow(8, 2).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(many_generators_threshold(6, 3).unwrap(), 15);
        assert_eq!(many_generators_threshold(20, 17).unwrap(), 1107);
        assert_eq!(many_generators_threshold(20, 16).unwrap(), 4814);
        assert_eq!(many_generators_threshold(3, 1).unwrap(), 2);
    }

    #[test]
    fn remark_values() {
        let r = kk_remark().unwrap();
        assert_eq!(r.a, 1107);
        assert_eq!(r.threshold, 4814);
        assert!(r.methods_agree);
        assert_eq!(r.greedy_shadow, 4817);
        assert!(!r.matches_printed);
        assert!(!r.below_threshold);
        assert!(r.printed_below_threshold);
    }

    #[test]
    fn uniqueness_small() {
        // every valid representation with value at most 300, d ≤ 5
        const MAX: u128 = 300;
        fn all(d: u64, max_top: u128, sum: u128, cur: &mut Vec<(u128, u64)>, out: &mut Vec<Vec<(u128, u64)>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if d == 0 {
                return;
            }
            for a in d as u128..max_top {
                let next = sum + binom(a, d).unwrap();
                if next > MAX {
                    break;
                }
                cur.push((a, d));
                all(d - 1, a, next, cur, out);
                cur.pop();
            }
        }
        for d in 1..=5u64 {
            let mut reps = Vec::new();
            all(d, MAX + 2, 0, &mut Vec::new(), &mut reps);
            let mut seen = std::collections::HashMap::new();
            for terms in reps {
                let rep = MacaulayRep { d, terms };
                let v = rep.value().unwrap();
                assert!(seen.insert(v, rep.clone()).is_none(), "two representations of {v}");
                assert_eq!(macaulay_rep(v, d).unwrap(), rep);
            }
            assert_eq!(seen.len(), MAX as usize, "d = {d}");
        }
    }

    proptest! {
        #[test]
        fn greedy_is_valid(a in 1u128..100_000, d in 1u64..8) {
            let r = macaulay_rep(a, d).unwrap();
            prop_assert!(r.is_valid());
            prop_assert_eq!(r.value().unwrap(), a);
        }

        #[test]
        fn shadow_is_monotone(a in 1u128..5000, d in 2u64..6) {
            prop_assert!(shadow_bound(a, d).unwrap() <= shadow_bound(a + 1, d).unwrap());
        }

        #[test]
        fn colex_matches_greedy(a in 1u128..300, d in 2u64..5) {
            prop_assert_eq!(colex_shadow_oracle(a, d).unwrap(), shadow_bound(a, d).unwrap());
        }
    }
}
