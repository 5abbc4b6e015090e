//! The gradient operator on monomial ideals.
//!
//! In characteristic zero the gradient of a monomial ideal is generated by
//! `u / x_i` for `u ∈ G(I)` and `x_i | u`; it also equals `Σ_i (I : x_i)`,
//! which gives an independent second route used as a cross-check.

use crate::ideal::MonomialIdeal;

pub fn gradient(ideal: &MonomialIdeal) -> MonomialIdeal {
    let gens = ideal
        .gens()
        .iter()
        .flat_map(|u| u.support().filter_map(move |i| u.div_var(i)))
        .collect();
    let mut grad = MonomialIdeal::minimalized(ideal.n(), gens);
    // a unit generator has nothing to differentiate but still generates S
    if ideal.is_unit() {
        grad = MonomialIdeal::unit(ideal.n());
    }
    grad
}

/// `Σ_i (I : x_i)`, computed from colon ideals only.
pub fn gradient_via_colon(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut acc = MonomialIdeal::zero(ideal.n());
    for i in 0..ideal.n() {
        let colon = ideal
            .colon_by_variable(i)
            .expect("index in range by construction");
        acc = acc.sum(&colon).expect("same ring");
    }
    acc
}

/// `∂^ℓ(I)`, re-minimalizing after every step.
pub fn iterated_gradient(ideal: &MonomialIdeal, order: u32) -> MonomialIdeal {
    let mut cur = ideal.clone();
    for _ in 0..order {
        cur = gradient(&cur);
    }
    cur
}
