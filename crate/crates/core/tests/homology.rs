//! Resolution engines against each other and against known inequalities.

use monograd_core::betti::{
    betti_table_with, has_linear_resolution_with, hochster_table, koszul_table, polarize,
    regularity_with,
};
use monograd_core::linalg::rank_dense;
use monograd_core::random::random_ideal;
use monograd_core::structure::linear_quotients_order;
use monograd_core::{gradient, Convention, Engine, Face, MonomialIdeal, SimplicialComplex};
use proptest::prelude::*;

fn reg(i: &MonomialIdeal, engine: Engine) -> u64 {
    regularity_with(i, engine).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_squares_to_zero(n in 2usize..7, masks in prop::collection::vec(1u64..64, 1..5)) {
        let nonfaces: Vec<Face> = masks.iter().map(|&m| Face(m & ((1 << n) - 1))).filter(|f| !f.is_empty()).collect();
        prop_assume!(!nonfaces.is_empty());
        let k = SimplicialComplex::from_nonfaces(n, nonfaces).unwrap();
        for s in -1..n as isize {
            let a = k.boundary_matrix(s).to_dense();
            let b = k.boundary_matrix(s + 1).to_dense();
            if a.is_empty() || b.is_empty() || a[0].is_empty() {
                continue;
            }
            for row in &a {
                for c in 0..b[0].len() {
                    let v: i64 = row.iter().zip(&b).map(|(x, brow)| x * brow[c]).sum();
                    prop_assert_eq!(v, 0);
                }
            }
        }
    }

    #[test]
    fn polarization_keeps_betti_numbers(n in 2usize..4, count in 1usize..4, seed: u64) {
        let i = random_ideal(n, 1, 3, count, false, seed).unwrap();
        let p = polarize(&i);
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(hochster_table(&p.ideal).unwrap(), koszul_table(&i).unwrap());
    }

    #[test]
    fn squarefree_engines_agree(count in 1usize..7, seed: u64) {
        let i = random_ideal(5, 1, 4, count, true, seed).unwrap();
        prop_assert_eq!(hochster_table(&i).unwrap(), koszul_table(&i).unwrap());
    }

    #[test]
    fn linear_quotients_give_omega(n in 2usize..5, count in 1usize..5, seed: u64) {
        let i = random_ideal(n, 1, 3, count, false, seed).unwrap();
        if linear_quotients_order(&i).unwrap().is_some() {
            let omega = i.omega().unwrap();
            prop_assert_eq!(reg(&i, Engine::Koszul), omega);
            let (table, _) = betti_table_with(&i, Engine::Auto).unwrap();
            prop_assert_eq!(table.regularity(), Some(omega));
        }
    }

    #[test]
    fn colon_does_not_raise_regularity(n in 2usize..5, count in 1usize..5, seed: u64) {
        let i = random_ideal(n, 1, 3, count, false, seed).unwrap();
        let r = reg(&i, Engine::Koszul);
        for v in 0..n {
            let c = i.colon_by_variable(v).unwrap();
            if c.is_proper_nonzero() {
                prop_assert!(reg(&c, Engine::Koszul) <= r);
            }
        }
    }

    #[test]
    fn gradient_regularity_bounds(n in 2usize..6, count in 1usize..5, seed: u64) {
        let i = random_ideal(n, 2, 3, count, false, seed).unwrap();
        let g = gradient(&i);
        let r = reg(&g, Engine::Auto) as i64;
        let total: u64 = i.gens().iter().map(|u| u.degree()).sum();
        prop_assert!(i.alpha().unwrap() as i64 - 1 <= r);
        prop_assert!(r <= total as i64 - 2 * i.len() as i64 + 1);
        if i.is_complete_intersection().unwrap() {
            prop_assert_eq!(r, total as i64 - 2 * i.len() as i64 + 1);
        }
    }

    #[test]
    fn linear_input_loses_at_most_one(n in 2usize..5, d in 2u64..4, count in 1usize..6, seed: u64) {
        let available = monograd_core::ideal::monomial_count(n, d).unwrap() as usize;
        let i = random_ideal(n, d, d, count.min(available), false, seed).unwrap();
        if has_linear_resolution_with(&i, Engine::Koszul).unwrap() {
            let g = gradient(&i);
            prop_assert!(reg(&g, Engine::Koszul) + 1 >= reg(&i, Engine::Koszul));
        }
    }

    #[test]
    fn auto_engine_agrees_with_koszul(n in 2usize..5, count in 1usize..5, seed: u64) {
        let i = random_ideal(n, 1, 3, count, false, seed).unwrap();
        let (auto, _) = betti_table_with(&i, Engine::Auto).unwrap();
        let koszul = koszul_table(&i).unwrap().to_convention(Convention::Ideal);
        prop_assert_eq!(auto, koszul);
    }
}

#[test]
fn rank_of_a_small_matrix() {
    assert_eq!(rank_dense(&[vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(rank_dense(&[vec![1, 0], vec![0, 1]]), 2);
}
