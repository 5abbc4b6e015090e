//! Structural properties, their implications, and closure under the gradient.

use monograd_core::betti::{has_linear_resolution_with, regularity_with};
use monograd_core::families::{family_overlap_run, family_reg_gap, vertex_decomposition};
use monograd_core::graph::{complementary_edge_ideal, edge_ideal};
use monograd_core::random::{
    random_polymatroidal, random_stable, random_strongly_stable, rng, strongly_stable_closure,
};
use monograd_core::structure::{
    is_componentwise_polymatroidal, is_polymatroidal, is_stable, is_strongly_stable,
    is_vertex_splittable, linear_quotients_order, vertex_splitting,
};
use monograd_core::{gradient, iterated_gradient, Engine, Monomial, MonomialIdeal, QuotientOrder, SimpleGraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polymatroidal_closure(n in 2usize..6, seed: u64) {
        let i = random_polymatroidal(n, 4, &mut rng(seed));
        prop_assert!(is_polymatroidal(&i));
        prop_assert!(linear_quotients_order(&i).unwrap().is_some());
        let g = gradient(&i);
        prop_assert!(is_polymatroidal(&g));
    }

    #[test]
    fn stable_closure(n in 2usize..6, seeds in 1usize..4, seed: u64) {
        let s = random_strongly_stable(n, 4, seeds, &mut rng(seed));
        prop_assert!(is_strongly_stable(&s) && is_stable(&s));
        prop_assert!(is_strongly_stable(&gradient(&s)));
        let t = random_stable(n, 4, seeds, &mut rng(seed));
        prop_assert!(is_stable(&t));
        prop_assert!(is_stable(&gradient(&t)));
    }

    #[test]
    fn componentwise_closure(n in 2usize..5, seeds in 1usize..3, seed: u64) {
        let p = random_polymatroidal(n, 3, &mut rng(seed));
        let s = random_strongly_stable(n, 3, seeds, &mut rng(seed));
        prop_assert!(is_componentwise_polymatroidal(&p).unwrap());
        for i in [p, s] {
            if !is_componentwise_polymatroidal(&i).unwrap() {
                continue;
            }
            let g = gradient(&i);
            if g.is_proper_nonzero() {
                prop_assert!(is_componentwise_polymatroidal(&g).unwrap());
                prop_assert!(is_vertex_splittable(&g));
            }
        }
    }

    #[test]
    fn splitting_gives_a_quotient_order(n in 2usize..5, seeds in 1usize..3, seed: u64) {
        let s = random_strongly_stable(n, 3, seeds, &mut rng(seed));
        if let Some(w) = vertex_splitting(&s) {
            prop_assert!(QuotientOrder::from_vertex_splitting(&w).verify(&s));
            prop_assert!(linear_quotients_order(&s).unwrap().is_some());
        }
    }

    #[test]
    fn equigenerated_quotients_are_linear(n in 2usize..6, seed: u64) {
        let i = random_polymatroidal(n, 3, &mut rng(seed));
        prop_assert!(has_linear_resolution_with(&i, Engine::Koszul).unwrap());
    }
}

#[test]
fn stable_is_weaker_than_strongly_stable() {
    let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]).unwrap();
    assert!(is_stable(&i));
    assert!(!is_strongly_stable(&i));
    let seeds = [Monomial::new(vec![0, 1, 1]).unwrap()];
    assert!(is_strongly_stable(&strongly_stable_closure(3, &seeds)));
}

#[test]
fn isolated_vertex_factors_out() {
    // path on 1,2,3 plus the isolated vertex 4
    let g = SimpleGraph::new(4, [(0, 1), (1, 2)]).unwrap();
    let h = g.remove_vertex(3);
    let ic = complementary_edge_ideal(&g).unwrap();
    let inner = complementary_edge_ideal(&h).unwrap().embed(4, &[0, 1, 2]);
    let x = Monomial::var(4, 3);
    assert_eq!(ic, inner.mul_monomial(&x).unwrap());
    for l in 1..=2 {
        let rhs = iterated_gradient(&inner, l)
            .mul_monomial(&x)
            .unwrap()
            .sum(&iterated_gradient(&inner, l - 1))
            .unwrap();
        assert_eq!(iterated_gradient(&ic, l), rhs);
    }
}

#[test]
fn family_expectations_hold() {
    for a in -4..=4 {
        let fam = family_reg_gap(a).unwrap();
        let r = regularity_with(&fam.ideal, Engine::Koszul).unwrap().value;
        let g = regularity_with(&gradient(&fam.ideal), Engine::Koszul).unwrap().value;
        assert_eq!((r, g), (fam.expected_reg, fam.expected_gradient_reg), "a = {a}");
    }
    for d in 3..=5 {
        let i = family_overlap_run(d).unwrap();
        assert_eq!(regularity_with(&i, Engine::Hochster).unwrap().value, d as u64);
        assert_eq!(regularity_with(&gradient(&i), Engine::Hochster).unwrap().value, 2 * d as u64 - 3);
    }
}

#[test]
fn decomposition_of_a_star() {
    let star = SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let dec = vertex_decomposition(&edge_ideal(&star)).unwrap().unwrap();
    assert_eq!(dec.reconstruct(), edge_ideal(&star));
}
