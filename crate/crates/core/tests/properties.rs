use casimir_spectrum::cache::CharacterCache;
use casimir_spectrum::character::{
    adjoint_weights, decompose_character, exterior_power_characters, irreducible_character,
    tensor_character,
};
use casimir_spectrum::ideals::{enumerate_ideals, ideal_weight_sum, is_b_normal, root_poset, BasisLabel};
use casimir_spectrum::spectrum::mi_bruteforce_with;
use casimir_spectrum::{CartanType, Rational, RootSystem, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_type() -> impl Strategy<Value = CartanType> {
    prop::sample::select(CartanType::all_up_to_rank(3))
}

fn any_type() -> impl Strategy<Value = CartanType> {
    prop::sample::select(CartanType::all_up_to_rank(8))
}

fn dominant(rank: usize, max: i32) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, rank).prop_map(Weight::new)
}

fn type_and_weight(max: i32) -> impl Strategy<Value = (CartanType, Weight)> {
    small_type().prop_flat_map(move |t| (Just(t), dominant(t.rank(), max)))
}

fn type_and_integral(max: i32) -> impl Strategy<Value = (CartanType, Weight)> {
    any_type().prop_flat_map(move |t| {
        let w = prop::collection::vec(-max..=max, t.rank()).prop_map(Weight::new);
        (Just(t), w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_is_weyl_invariant((t, w) in type_and_integral(5)) {
        let rs = RootSystem::new(t);
        for i in 1..=rs.rank() {
            let s = rs.simple_reflection(i, &w).unwrap();
            prop_assert_eq!(rs.norm_sq(&s), rs.norm_sq(&w));
            prop_assert_eq!(rs.simple_reflection(i, &s).unwrap(), w.clone());
        }
    }

    #[test]
    fn dominant_representative_lies_in_orbit((t, w) in type_and_integral(3)) {
        let rs = RootSystem::new(t);
        let d = rs.dominant_representative(&w);
        prop_assert!(d.is_dominant());
        prop_assert_eq!(rs.norm_sq(&d), rs.norm_sq(&w));
        if rs.rank() <= 4 {
            prop_assert!(rs.orbit(&d).contains(&w));
        }
    }

    #[test]
    fn casimir_is_nonnegative_on_dominant_weights((t, w) in type_and_integral(4)) {
        let rs = RootSystem::new(t);
        let d = rs.dominant_representative(&w);
        prop_assert!(rs.casimir_eigenvalue(&d) >= Rational::from_integer(0));
    }

    #[test]
    fn irreducible_characters_are_weyl_invariant_with_weyl_dimension((t, lambda) in type_and_weight(3)) {
        let rs = RootSystem::new(t);
        let ch = irreducible_character(&rs, &lambda).unwrap();
        prop_assert!(ch.is_weyl_invariant(&rs));
        prop_assert_eq!(BigUint::from(ch.total_mass()), rs.weyl_dim(&lambda).unwrap());
        prop_assert_eq!(ch.multiplicity(&lambda), 1);
        for (mu, _) in ch.iter() {
            prop_assert!(rs.dominates(&lambda, mu));
        }
    }

    #[test]
    fn tensor_products_decompose_and_reconstruct(
        (t, a, b) in small_type().prop_flat_map(|t| (Just(t), dominant(t.rank(), 2), dominant(t.rank(), 2)))
    ) {
        let rs = RootSystem::new(t);
        let cache = CharacterCache::in_memory();
        let va = irreducible_character(&rs, &a).unwrap();
        let vb = irreducible_character(&rs, &b).unwrap();
        let prod = tensor_character(&va, &vb).unwrap();
        let dec = decompose_character(&rs, &prod).unwrap();
        prop_assert_eq!(dec.reconstruct(&rs, &cache).unwrap(), prod.clone());
        prop_assert_eq!(dec.total_dim(&rs).unwrap(), BigUint::from(prod.total_mass()));
        let top = &a + &b;
        prop_assert_eq!(dec.multiplicity(&top), 1);
    }

    #[test]
    fn subset_sums_never_exceed_the_plateau(
        (t, mask) in any_type().prop_flat_map(|t| {
            let rs = RootSystem::new(t);
            (Just(t), prop::collection::vec(any::<bool>(), rs.dimension()))
        })
    ) {
        let rs = RootSystem::new(t);
        let mut sum = Weight::zero(rs.rank());
        for (w, keep) in adjoint_weights(&rs).iter().zip(&mask) {
            if *keep {
                sum += w;
            }
        }
        let cap = Rational::new(rs.dimension() as i64, 3);
        let c = rs.casimir_eigenvalue(&sum);
        prop_assert!(c <= cap);
        prop_assert_eq!(c == cap, sum == rs.rho().scale(2));
    }

    #[test]
    fn ideal_sums_are_dominant_weights_of_v_two_rho(t in small_type()) {
        let rs = RootSystem::new(t);
        let poset = root_poset(&rs);
        for a in enumerate_ideals(&rs, None).unwrap() {
            prop_assert!(a.is_upper_set(&poset));
            let s = ideal_weight_sum(&rs, &a);
            prop_assert!(s.is_dominant());
            prop_assert!(rs.dominates(&rs.rho().scale(2), &s));
            let labels: Vec<BasisLabel> = a.members().into_iter().map(BasisLabel::X).collect();
            prop_assert!(is_b_normal(&rs, &labels).unwrap());
        }
    }

    #[test]
    fn pruning_never_changes_the_answer(
        (t, i) in prop::sample::select(vec!["A2", "B2", "G2", "A3"])
            .prop_flat_map(|t| {
                let n = RootSystem::new(t.parse().unwrap()).dimension();
                (Just(t), 0..=n)
            })
    ) {
        let rs = RootSystem::new(t.parse().unwrap());
        let fast = mi_bruteforce_with(&rs, i, 10_000_000, true).unwrap();
        let slow = mi_bruteforce_with(&rs, i, 10_000_000, false).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn cartan_type_round_trips(t in any_type()) {
        let s = t.to_string();
        prop_assert_eq!(s.parse::<CartanType>().unwrap(), t);
        prop_assert_eq!(s.to_lowercase().parse::<CartanType>().unwrap(), t);
    }
}

#[test]
fn exterior_powers_are_self_dual() {
    for t in ["A1", "A2", "B2", "G2", "A3"] {
        let rs = RootSystem::new(t.parse().unwrap());
        let n = rs.dimension();
        let all = exterior_power_characters(&rs, n);
        for i in 0..=n {
            assert_eq!(all[i].dual(), all[n - i], "{t} i={i}");
            assert_eq!(all[i], all[i].dual(), "{t} i={i}");
        }
    }
}
