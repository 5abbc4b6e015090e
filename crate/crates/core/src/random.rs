//! Seeded generators for test ideals. Every function is deterministic in
//! its seed or RNG state.

use std::collections::{BTreeSet, HashSet};

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::{monomial_count, monomials_of_degree, veronese_type, MonomialIdeal};
use crate::monomial::Monomial;
use crate::binom::binomial_checked;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Upper bound on the candidate pool `random_ideal` materializes.
const POOL_LIMIT: u128 = 2_000_000;

fn squarefree_of_degree(n: usize, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, left: u64, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::squarefree(n, cur.iter().copied()));
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, n, d, &mut cur, &mut out);
    out
}

/// `count` distinct monomials of degree in `d_min..=d_max`, drawn uniformly
/// without replacement, then minimalized.
pub fn random_ideal(
    n: usize,
    d_min: u64,
    d_max: u64,
    count: usize,
    squarefree: bool,
    seed: u64,
) -> Result<MonomialIdeal> {
    random_ideal_with(n, d_min, d_max, count, squarefree, &mut rng(seed))
}

pub fn random_ideal_with(
    n: usize,
    d_min: u64,
    d_max: u64,
    count: usize,
    squarefree: bool,
    rng: &mut impl Rng,
) -> Result<MonomialIdeal> {
    let gens = random_monomials(n, d_min, d_max, count, squarefree, rng)?;
    MonomialIdeal::new(n, gens)
}

/// The raw sample behind [`random_ideal`], canonically sorted.
pub fn random_monomials(
    n: usize,
    d_min: u64,
    d_max: u64,
    count: usize,
    squarefree: bool,
    rng: &mut impl Rng,
) -> Result<Vec<Monomial>> {
    if d_min > d_max {
        return Err(Error::domain("empty degree range"));
    }
    let mut available: u128 = 0;
    for d in d_min..=d_max {
        let c = if squarefree {
            binomial_checked(n as u128, d as u128)
        } else {
            monomial_count(n, d)
        };
        available = available.saturating_add(c.unwrap_or(u128::MAX));
    }
    if count as u128 > available {
        return Err(Error::domain(format!(
            "cannot draw {count} distinct monomials from {available} candidates"
        )));
    }
    if available > POOL_LIMIT {
        return Err(Error::resource("component-enum", available, POOL_LIMIT));
    }
    let mut pool = Vec::new();
    for d in d_min..=d_max {
        if squarefree {
            pool.extend(squarefree_of_degree(n, d));
        } else {
            pool.extend(monomials_of_degree(n, d));
        }
    }
    pool.sort();
    let mut picked: Vec<Monomial> = sample(rng, pool.len(), count)
        .into_iter()
        .map(|k| pool[k].clone())
        .collect();
    picked.sort();
    Ok(picked)
}

/// A random ideal of Veronese type `I_{n,a,d}` with `1 ≤ d ≤ min(|a|, d_max)`.
pub fn random_veronese_type(n: usize, d_max: u64, rng: &mut impl Rng) -> MonomialIdeal {
    loop {
        let bounds: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=d_max as u32)).collect();
        let total: u64 = bounds.iter().map(|&a| a as u64).sum();
        if total == 0 {
            continue;
        }
        let d = rng.gen_range(1..=total.min(d_max));
        let (ideal, _) = veronese_type(n, &bounds, d).expect("lengths agree");
        return ideal;
    }
}

/// A transversal polymatroidal ideal `P_{A_1} ⋯ P_{A_k}`, a product of
/// monomial primes on random nonempty variable sets, `k ≤ d_max`.
pub fn random_transversal(n: usize, d_max: u64, rng: &mut impl Rng) -> MonomialIdeal {
    let k = rng.gen_range(1..=d_max);
    let mut acc = MonomialIdeal::unit(n);
    for _ in 0..k {
        let mut vars: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if vars.is_empty() {
            vars.push(rng.gen_range(0..n));
        }
        acc = acc.product(&MonomialIdeal::prime(n, vars)).expect("same ring");
    }
    acc
}

/// Alternates Veronese-type ideals, transversal products, and products of
/// two Veronese-type ideals of total degree at most `d_max`.
pub fn random_polymatroidal(n: usize, d_max: u64, rng: &mut impl Rng) -> MonomialIdeal {
    match rng.gen_range(0..3) {
        0 => random_veronese_type(n, d_max, rng),
        1 => random_transversal(n, d_max, rng),
        _ => {
            let half = (d_max / 2).max(1);
            let a = random_veronese_type(n, half, rng);
            let b = random_veronese_type(n, d_max.saturating_sub(a.alpha().unwrap_or(0)).max(1), rng);
            a.product(&b).expect("same ring")
        }
    }
}

/// Closure of `seeds` under `u ↦ x_i u / x_j` for `i < j`, `x_j | u`.
pub fn strongly_stable_closure(n: usize, seeds: &[Monomial]) -> MonomialIdeal {
    closure(n, seeds, |u| {
        let mut out = Vec::new();
        for j in u.support() {
            let base = u.div_var(j).expect("support");
            out.extend((0..j).map(|i| base.mul_var(i).expect("exponent fits")));
        }
        out
    })
}

/// Closure of `seeds` under `u ↦ x_i u / x_{max(u)}` for `i < max(u)`.
pub fn stable_closure(n: usize, seeds: &[Monomial]) -> MonomialIdeal {
    closure(n, seeds, |u| match u.max_var() {
        None => vec![],
        Some(top) => {
            let base = u.div_var(top).expect("support");
            (0..top).map(|i| base.mul_var(i).expect("exponent fits")).collect()
        }
    })
}

fn closure(n: usize, seeds: &[Monomial], moves: impl Fn(&Monomial) -> Vec<Monomial>) -> MonomialIdeal {
    let mut seen: HashSet<Monomial> = seeds.iter().cloned().collect();
    let mut stack: Vec<Monomial> = seeds.to_vec();
    while let Some(u) = stack.pop() {
        for v in moves(&u) {
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    MonomialIdeal::new(n, seen).expect("same ring")
}

fn random_seeds(n: usize, d_max: u64, count: usize, rng: &mut impl Rng) -> Vec<Monomial> {
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=d_max);
            let mut exps = vec![0u32; n];
            for _ in 0..d {
                exps[rng.gen_range(0..n)] += 1;
            }
            Monomial::new(exps).expect("small exponents")
        })
        .collect()
}

pub fn random_strongly_stable(n: usize, d_max: u64, seeds: usize, rng: &mut impl Rng) -> MonomialIdeal {
    strongly_stable_closure(n, &random_seeds(n, d_max, seeds, rng))
}

pub fn random_stable(n: usize, d_max: u64, seeds: usize, rng: &mut impl Rng) -> MonomialIdeal {
    stable_closure(n, &random_seeds(n, d_max, seeds, rng))
}

/// Generators on pairwise disjoint supports, each of degree in
/// `d_min..=d_max`, with at most `max_gens` generators.
pub fn random_complete_intersection(
    n: usize,
    d_min: u64,
    d_max: u64,
    max_gens: usize,
    rng: &mut impl Rng,
) -> Result<MonomialIdeal> {
    if n == 0 || max_gens == 0 || d_min == 0 || d_min > d_max {
        return Err(Error::domain("no complete intersection fits these parameters"));
    }
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let target = rng.gen_range(1..=max_gens.min(n));
    let mut gens = Vec::new();
    let mut rest = &vars[..];
    while gens.len() < target && !rest.is_empty() {
        let d = rng.gen_range(d_min..=d_max);
        let width = rng.gen_range(1..=(d as usize).min(rest.len()));
        let (mine, tail) = rest.split_at(width);
        rest = tail;
        let mut exps = vec![0u32; n];
        for &v in mine {
            exps[v] = 1;
        }
        for _ in width as u64..d {
            exps[mine[rng.gen_range(0..mine.len())]] += 1;
        }
        gens.push(Monomial::new(exps)?);
    }
    MonomialIdeal::new(n, gens)
}

/// `count` distinct `d`-subsets of `0..n` as squarefree monomials.
pub fn random_squarefree_equigenerated(
    n: usize,
    d: u64,
    count: usize,
    rng: &mut impl Rng,
) -> Result<MonomialIdeal> {
    let pool = squarefree_of_degree(n, d);
    if count > pool.len() {
        return Err(Error::domain(format!(
            "only {} squarefree monomials of degree {d} in {n} variables",
            pool.len()
        )));
    }
    let picked: BTreeSet<usize> = sample(rng, pool.len(), count).into_iter().collect();
    MonomialIdeal::new(n, picked.into_iter().map(|k| pool[k].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_polymatroidal, is_stable, is_strongly_stable};

    #[test]
    fn determinism() {
        let a = random_ideal(4, 2, 2, 3, true, 1).unwrap();
        let b = random_ideal(4, 2, 2, 3, true, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert!(a.is_squarefree());
        let c = random_ideal(3, 1, 3, 2, false, 7).unwrap();
        assert_eq!(c, random_ideal(3, 1, 3, 2, false, 7).unwrap());
        assert!(random_ideal(4, 2, 2, 7, true, 1).is_err());
    }

    #[test]
    fn generators_land_in_their_classes() {
        let mut r = rng(3);
        for _ in 0..30 {
            assert!(is_polymatroidal(&random_polymatroidal(4, 4, &mut r)));
            assert!(is_strongly_stable(&random_strongly_stable(4, 3, 2, &mut r)));
            assert!(is_stable(&random_stable(4, 3, 2, &mut r)));
            let ci = random_complete_intersection(6, 2, 3, 3, &mut r).unwrap();
            assert!(ci.is_complete_intersection().unwrap());
            assert!(ci.gens().iter().all(|g| (2..=3).contains(&g.degree())));
        }
        let i = random_squarefree_equigenerated(6, 3, 15, &mut r).unwrap();
        assert_eq!(i.len(), 15);
        assert!(i.is_equigenerated());
    }
}
