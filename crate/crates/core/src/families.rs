//! Explicit ideal families with known regularity, and the decomposition
//! `I = x_v P + J` of quadratic squarefree ideals with its closed-form
//! iterated gradients of powers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `I = x_v P + J` with `P` a monomial prime, `v ∉ supp(P) ∪ supp(J)` and
/// `J ⊆ P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDecomposition {
    pub v: usize,
    /// Variables generating `P`.
    pub p_vars: Vec<usize>,
    pub p: MonomialIdeal,
    pub j: MonomialIdeal,
}

impl VertexDecomposition {
    /// `x_v P + J`.
    pub fn reconstruct(&self) -> MonomialIdeal {
        let n = self.p.n();
        self.p
            .mul_monomial(&Monomial::var(n, self.v))
            .and_then(|xp| xp.sum(&self.j))
            .expect("same ring")
    }
}

/// Scans vertices from the highest label down and returns the first `v`
/// whose neighbourhood prime `P` contains `J`, the edge ideal of `G ∖ v`.
pub fn vertex_decomposition(ideal: &MonomialIdeal) -> Result<Option<VertexDecomposition>> {
    let g = SimpleGraph::from_quadratic_ideal(ideal)?;
    if ideal.support().len() != ideal.n() {
        return Err(Error::domain(
            "the decomposition needs full support; compress the ideal first",
        ));
    }
    let n = ideal.n();
    for v in (0..n).rev() {
        let p_vars = g.neighbors(v);
        let p = MonomialIdeal::prime(n, p_vars.iter().copied());
        let j = MonomialIdeal::from_minimal(
            n,
            ideal
                .gens()
                .iter()
                .filter(|u| u.exponent(v) == 0)
                .cloned()
                .collect(),
        );
        if p.contains_ideal(&j)? {
            return Ok(Some(VertexDecomposition { v, p_vars, p, j }));
        }
    }
    Ok(None)
}

fn var_power(n: usize, v: usize, e: u64) -> Result<MonomialIdeal> {
    let mut exps = vec![0u32; n];
    exps[v] = u32::try_from(e).map_err(|_| Error::Overflow(e))?;
    Ok(MonomialIdeal::principal(Monomial::new(exps)?))
}

/// `∂^ℓ(I^k)` evaluated from the decomposition:
///
/// * `ℓ = 0`: `Σ_{r=0}^{k} x_v^{k-r} P^{k-r} J^r`
/// * `1 ≤ ℓ ≤ k-1`: `Σ_{r=0}^{ℓ} x_v^{k-r} 𝔫^r P^{k-ℓ} + Σ_{s=ℓ+1}^{k} x_v^{k-s} 𝔫^ℓ P^{k-s} J^{s-ℓ}`
/// * `k ≤ ℓ ≤ 2k`: `m^{2k-ℓ}`
///
/// with `𝔫` the prime on every variable but `x_v` and `m` the maximal ideal.
pub fn gradient_power_closed_form(
    dec: &VertexDecomposition,
    n: usize,
    k: u64,
    l: u64,
) -> Result<MonomialIdeal> {
    if k == 0 || l > 2 * k {
        return Err(Error::domain(format!(
            "closed form needs k >= 1 and 0 <= l <= 2k, got k = {k}, l = {l}"
        )));
    }
    let pow = |i: &MonomialIdeal, e: u64| -> Result<MonomialIdeal> {
        i.power(u32::try_from(e).map_err(|_| Error::Overflow(e))?)
    };
    let maximal = MonomialIdeal::maximal(n);
    if l >= k {
        return pow(&maximal, 2 * k - l);
    }
    let frak_n = MonomialIdeal::prime(n, (0..n).filter(|&i| i != dec.v));
    let mut acc = MonomialIdeal::zero(n);
    if l == 0 {
        for r in 0..=k {
            let term = var_power(n, dec.v, k - r)?
                .product(&pow(&dec.p, k - r)?)?
                .product(&pow(&dec.j, r)?)?;
            acc = acc.sum(&term)?;
        }
        return Ok(acc);
    }
    let p_part = pow(&dec.p, k - l)?;
    for r in 0..=l {
        let term = var_power(n, dec.v, k - r)?
            .product(&pow(&frak_n, r)?)?
            .product(&p_part)?;
        acc = acc.sum(&term)?;
    }
    let n_part = pow(&frak_n, l)?;
    for s in l + 1..=k {
        let term = var_power(n, dec.v, k - s)?
            .product(&n_part)?
            .product(&pow(&dec.p, k - s)?)?
            .product(&pow(&dec.j, s - l)?)?;
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// A member of the family realizing `reg I - reg ∂(I) = a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegGapFamily {
    pub a: i64,
    pub ideal: MonomialIdeal,
    pub expected_reg: u64,
    pub expected_gradient_reg: u64,
    /// The `(b, c)` parameters where the construction uses them.
    pub b: Option<u64>,
    pub c: Option<u64>,
}

/// The canonical member, with `c = 2` when `a ≥ 1`.
pub fn family_reg_gap(a: i64) -> Result<RegGapFamily> {
    family_reg_gap_with(a, 2)
}

/// * `a ≤ -1`: `b = 2 - a`, `I = (x1x2, x1x3^b, x2x4^b)`, expecting `(b+1, 2b-1)`;
/// * `a = 0`: `(x1x2x3, x2x3x4, x3x4x5, x4x5x6)`, expecting `(3, 3)`;
/// * `a ≥ 1`: `b = a + c - 1`, `I = (x^c, x^{c-1}y, ..., xy^{c-1}, y^b)`, expecting `(b, c-1)`.
///
/// `c` is only used when `a ≥ 1` and must be at least 2.
pub fn family_reg_gap_with(a: i64, c: u64) -> Result<RegGapFamily> {
    let exp = |e: i128| -> Result<u32> {
        u32::try_from(e).map_err(|_| Error::Overflow(e.clamp(0, u64::MAX as i128) as u64))
    };
    if a <= -1 {
        let b = 2 - a as i128;
        let bb = exp(b)?;
        let ideal = MonomialIdeal::from_exponents(4, &[&[1, 1, 0, 0], &[1, 0, bb, 0], &[0, 1, 0, bb]])?;
        return Ok(RegGapFamily {
            a,
            ideal,
            expected_reg: b as u64 + 1,
            expected_gradient_reg: 2 * b as u64 - 1,
            b: Some(b as u64),
            c: None,
        });
    }
    if a == 0 {
        return Ok(RegGapFamily {
            a,
            ideal: family_overlap_run(3)?,
            expected_reg: 3,
            expected_gradient_reg: 3,
            b: None,
            c: None,
        });
    }
    if c < 2 {
        return Err(Error::domain("the two-variable construction needs c >= 2"));
    }
    let b = a as i128 + c as i128 - 1;
    let cc = exp(c as i128)?;
    let mut gens: Vec<Monomial> = (0..cc)
        .map(|k| Monomial::new(vec![cc - k, k]))
        .collect::<Result<_>>()?;
    gens.push(Monomial::new(vec![0, exp(b)?])?);
    Ok(RegGapFamily {
        a,
        ideal: MonomialIdeal::new(2, gens)?,
        expected_reg: b as u64,
        expected_gradient_reg: c - 1,
        b: Some(b as u64),
        c: Some(c),
    })
}

/// `d + 1` windows of `d` consecutive variables in `2d` variables.
pub fn family_overlap_run(d: usize) -> Result<MonomialIdeal> {
    if d < 3 {
        return Err(Error::domain(format!("the window family needs d >= 3, got {d}")));
    }
    MonomialIdeal::new(2 * d, (0..=d).map(|i| Monomial::squarefree(2 * d, i..i + d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradient::{gradient, iterated_gradient};
    use crate::graph::{edge_ideal, SimpleGraph};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let p3 = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let dec = vertex_decomposition(&p3).unwrap().unwrap();
        assert_eq!(dec.v, 2);
        assert_eq!(dec.p_vars, vec![1]);
        assert_eq!(dec.j, ideal(3, &[&[1, 1, 0]]));
        assert_eq!(dec.reconstruct(), p3);

        let tri = edge_ideal(&SimpleGraph::complete(3));
        let dec = vertex_decomposition(&tri).unwrap().unwrap();
        assert_eq!(dec.v, 2);
        assert_eq!(dec.p_vars, vec![0, 1]);
        assert_eq!(dec.j, ideal(3, &[&[1, 1, 0]]));

        let disjoint = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(vertex_decomposition(&disjoint).unwrap(), None);
        assert!(vertex_decomposition(&ideal(3, &[&[2, 0, 0]])).is_err());
        assert!(vertex_decomposition(&ideal(3, &[&[1, 1, 0]])).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let p3 = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let dec = vertex_decomposition(&p3).unwrap().unwrap();
        let m = MonomialIdeal::maximal(3);
        assert_eq!(gradient_power_closed_form(&dec, 3, 1, 1).unwrap(), m);
        assert_eq!(gradient(&p3), m);
        assert_eq!(gradient_power_closed_form(&dec, 3, 2, 4).unwrap(), MonomialIdeal::unit(3));
        assert_eq!(gradient_power_closed_form(&dec, 3, 1, 0).unwrap(), p3);

        let tri = edge_ideal(&SimpleGraph::complete(3));
        let dec = vertex_decomposition(&tri).unwrap().unwrap();
        let sq = tri.power(2).unwrap();
        for l in 0..=4 {
            assert_eq!(
                gradient_power_closed_form(&dec, 3, 2, l).unwrap(),
                iterated_gradient(&sq, l as u32),
                "l = {l}"
            );
        }
        assert!(gradient_power_closed_form(&dec, 3, 2, 5).is_err());
    }

    #[test]
    fn reg_gap_members() {
        let f = family_reg_gap(-1).unwrap();
        assert_eq!((f.b, f.expected_reg, f.expected_gradient_reg), (Some(3), 4, 5));
        assert_eq!(f.ideal, ideal(4, &[&[1, 1, 0, 0], &[1, 0, 3, 0], &[0, 1, 0, 3]]));
        let f = family_reg_gap(0).unwrap();
        assert_eq!((f.expected_reg, f.expected_gradient_reg), (3, 3));
        let f = family_reg_gap(2).unwrap();
        assert_eq!((f.b, f.c, f.expected_reg, f.expected_gradient_reg), (Some(3), Some(2), 3, 1));
        assert_eq!(f.ideal, ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]));
        let f = family_reg_gap_with(1, 3).unwrap();
        assert_eq!(f.ideal, ideal(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
        assert!(family_reg_gap_with(1, 1).is_err());
    }

    #[test]
    fn window_family() {
        assert_eq!(family_overlap_run(3).unwrap(), family_reg_gap(0).unwrap().ideal);
        let i4 = family_overlap_run(4).unwrap();
        assert_eq!((i4.n(), i4.len()), (8, 5));
        let i5 = family_overlap_run(5).unwrap();
        assert_eq!((i5.n(), i5.len()), (10, 6));
        assert!(family_overlap_run(2).is_err());
        assert!(iterated_gradient(&family_overlap_run(3).unwrap(), 3).is_unit());
    }
}
