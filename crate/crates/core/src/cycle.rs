//! The explicit homology cycle behind the window family's jump in
//! regularity after one gradient.
//!
//! With `Δ` the Stanley–Reisner complex of `∂(I)` for the window family in
//! `2d` variables, `W = {1..d-1} ∪ {d+2..2d}` and `Γ = Δ_W`, the chain
//! `z = Σ (-1)^{p+q} e_{W∖{p,q}}` over `p ≤ d-1 < d+2 ≤ q` is a cycle, and
//! `Γ` has no faces of cardinality `2d-3`, so `z` is not a boundary.

use serde::Serialize;

use crate::complex::{Chain, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::families::family_overlap_run;
use crate::gradient::gradient;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCertificate {
    pub d: usize,
    /// 1-based vertex labels.
    pub w: Vec<usize>,
    /// `Γ` has no face of cardinality `2d - 3`.
    pub no_top_faces: bool,
    /// Every `W ∖ {p, q}` in the sum is a face of `Γ`.
    pub terms_are_faces: bool,
    pub cycle_nonzero: bool,
    pub boundary_vanishes: bool,
    /// Number of faces in the support of `z`.
    pub z_faces: usize,
    /// A face of cardinality `2d - 3` if one was found, 1-based.
    pub top_face_witness: Option<Vec<usize>>,
    /// A term of `z` that is not a face, 1-based.
    pub missing_face_witness: Option<Vec<usize>>,
}

impl CycleCertificate {
    pub fn passed(&self) -> bool {
        self.no_top_faces && self.terms_are_faces && self.cycle_nonzero && self.boundary_vanishes
    }
}

fn labels(f: Face) -> Vec<usize> {
    f.vertices().map(|v| v + 1).collect()
}

pub fn cycle_certificate(d: usize) -> Result<CycleCertificate> {
    if d < 3 {
        return Err(Error::domain(format!("the cycle certificate needs d >= 3, got {d}")));
    }
    if 2 * d > 64 {
        return Err(Error::domain("the cycle certificate supports at most 64 vertices"));
    }
    let delta = SimplicialComplex::stanley_reisner(&gradient(&family_overlap_run(d)?))?;
    // 0-based: {0..d-2} ∪ {d+1..2d-1}
    let low: Vec<usize> = (0..d - 1).collect();
    let high: Vec<usize> = (d + 1..2 * d).collect();
    let w = Face::from_vertices(low.iter().chain(&high).copied());

    let top_face_witness = w
        .vertices()
        .map(|p| w.without(p))
        .find(|&f| delta.is_face(f));

    let mut z = Chain::default();
    let mut missing = None;
    for &p in &low {
        for &q in &high {
            let f = w.without(p).without(q);
            if missing.is_none() && !delta.is_face(f) {
                missing = Some(f);
            }
            // (p+1) + (q+1) has the parity of p + q
            let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
            z.add_term(f, sign);
        }
    }
    Ok(CycleCertificate {
        d,
        w: labels(w),
        no_top_faces: top_face_witness.is_none(),
        terms_are_faces: missing.is_none(),
        cycle_nonzero: !z.is_zero(),
        boundary_vanishes: z.boundary().is_zero(),
        z_faces: z.coefficients.len(),
        top_face_witness: top_face_witness.map(labels),
        missing_face_witness: missing.map(labels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for d in 3..=6 {
            let c = cycle_certificate(d).unwrap();
            assert!(c.passed(), "d = {d}: {c:?}");
            assert_eq!(c.z_faces, (d - 1) * (d - 1));
        }
        assert_eq!(cycle_certificate(3).unwrap().w, vec![1, 2, 5, 6]);
        assert!(cycle_certificate(2).is_err());
    }

    #[test]
    fn restricted_complex_has_the_homology() {
        let d = 3;
        let delta = SimplicialComplex::stanley_reisner(&gradient(&family_overlap_run(d).unwrap())).unwrap();
        let gamma = delta.restrict(Face::from_vertices([0, 1, 4, 5]));
        assert!(gamma.reduced_homology_dim(2 * d as isize - 5) >= 1);
    }
}
