//! Ideal arithmetic and gradient identities on seeded random ideals.

use monograd_core::random::random_ideal;
use monograd_core::{gradient, gradient_via_colon, iterated_gradient, Monomial, MonomialIdeal};
use proptest::prelude::*;

fn ideal(n: usize, d_max: u64, count: usize, seed: u64) -> MonomialIdeal {
    random_ideal(n, 1, d_max, count, false, seed).unwrap()
}

fn ideal_no_linear(n: usize, count: usize, seed: u64) -> MonomialIdeal {
    random_ideal(n, 2, 3, count, false, seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalization_is_idempotent(n in 2usize..5, count in 1usize..6, seed: u64) {
        let i = ideal(n, 3, count, seed);
        let again = MonomialIdeal::new(n, i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        let doubled = MonomialIdeal::new(n, i.gens().iter().chain(i.gens()).cloned()).unwrap();
        prop_assert_eq!(doubled, i);
    }

    #[test]
    fn sum_and_product_laws(n in 2usize..5, seed: u64) {
        let a = ideal(n, 3, 2, seed);
        let b = ideal(n, 3, 2, seed ^ 1);
        let c = ideal(n, 3, 2, seed ^ 2);
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
        prop_assert_eq!(a.sum(&b).unwrap().sum(&c).unwrap(), a.sum(&b.sum(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.product(&b).unwrap().product(&c).unwrap(),
            a.product(&b.product(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.product(&b.sum(&c).unwrap()).unwrap(),
            a.product(&b).unwrap().sum(&a.product(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn membership_is_monotone_under_sum(n in 2usize..5, seed: u64) {
        let a = ideal(n, 3, 3, seed);
        let b = ideal(n, 3, 3, seed.wrapping_add(7));
        let s = a.sum(&b).unwrap();
        for u in monograd_core::ideal::monomials_of_degree(n, 3) {
            if a.contains(&u).unwrap() {
                prop_assert!(s.contains(&u).unwrap());
            }
        }
    }

    #[test]
    fn components_stabilize(n in 1usize..4, count in 1usize..4, seed: u64) {
        let i = ideal(n.max(2), 3, count, seed);
        let m = MonomialIdeal::maximal(i.n());
        let omega = i.omega().unwrap();
        for j in omega..omega + 2 {
            let next = i.degree_component(j + 1).unwrap();
            prop_assert_eq!(next, m.product(&i.degree_component(j).unwrap()).unwrap());
        }
    }

    #[test]
    fn colon_generators_land_back(n in 2usize..5, seed: u64) {
        let i = ideal(n, 3, 3, seed);
        for v in 0..n {
            let x = Monomial::var(n, v);
            for u in i.colon_by_variable(v).unwrap().gens() {
                prop_assert!(i.contains(&u.mul(&x).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn gradient_matches_colon_sum(n in 2usize..6, count in 1usize..6, seed: u64) {
        let i = ideal(n, 3, count, seed);
        prop_assert_eq!(gradient(&i), gradient_via_colon(&i));
    }

    #[test]
    fn gradient_is_monotone(n in 2usize..5, seed: u64) {
        let i = ideal(n, 3, 2, seed);
        let j = i.sum(&ideal(n, 3, 2, seed ^ 0x55)).unwrap();
        prop_assert!(gradient(&j).contains_ideal(&gradient(&i)).unwrap());
    }

    #[test]
    fn degree_drops_by_one(n in 2usize..5, count in 1usize..5, seed: u64) {
        let i = ideal(n, 3, count, seed);
        prop_assert_eq!(gradient(&i).alpha(), Some(i.alpha().unwrap() - 1));
    }

    #[test]
    fn leibniz_rule(n in 2usize..6, seed: u64) {
        let i = ideal(n, 3, 2, seed);
        let j = ideal(n, 3, 2, seed.rotate_left(17));
        let lhs = gradient(&i.product(&j).unwrap());
        let rhs = gradient(&i).product(&j).unwrap().sum(&i.product(&gradient(&j)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_variable_factor(n in 2usize..5, seed: u64, l in 1u32..4) {
        // the last variable does not occur in I
        let base = ideal(n - 1, 3, 3, seed);
        let vars: Vec<usize> = (0..n - 1).collect();
        let i = base.embed(n, &vars);
        let x = Monomial::var(n, n - 1);
        let lhs = iterated_gradient(&i.mul_monomial(&x).unwrap(), l);
        let rhs = iterated_gradient(&i, l)
            .mul_monomial(&x)
            .unwrap()
            .sum(&iterated_gradient(&i, l - 1))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn maximal_ideal_factor_commutes(n in 2usize..5, seed: u64, k in 1u32..4) {
        let i = ideal_no_linear(n, 3, seed);
        let mk = MonomialIdeal::maximal(n).power(k).unwrap();
        prop_assert_eq!(gradient(&mk.product(&i).unwrap()), mk.product(&gradient(&i)).unwrap());
    }

    #[test]
    fn component_identity(n in 1usize..5, count in 1usize..5, seed: u64) {
        let i = random_ideal(n, 1, 4, count.min(n * 2), false, seed).unwrap();
        let g = gradient(&i);
        for j in 0..=i.omega().unwrap() + 2 {
            prop_assert_eq!(g.degree_component(j).unwrap(), gradient(&i.degree_component(j + 1).unwrap()));
        }
    }
}

#[test]
fn unit_and_zero_are_fixed() {
    assert_eq!(gradient(&MonomialIdeal::unit(3)), MonomialIdeal::unit(3));
    assert!(gradient(&MonomialIdeal::zero(3)).is_zero());
    assert!(gradient(&MonomialIdeal::maximal(3)).is_unit());
}
