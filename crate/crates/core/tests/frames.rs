use frame_rigidity::frame::random_linked_partner;
use frame_rigidity::induced::Automorphism;
use frame_rigidity::{Field, FrameTuple, IntPartition, LinkageProfile, SemilinearMap, Tableau};
use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn field(complex: bool) -> Field {
    if complex {
        Field::Complex
    } else {
        Field::Real
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn linkage_is_an_equivalence(seed: u64, n in 2usize..6, complex: bool, orthogonal: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi = Tableau::all(n).choose(&mut rng).unwrap().clone();
        let a = FrameTuple::random(n, &IntPartition::ones(n), orthogonal, field(complex), &mut rng);
        let b = random_linked_partner(&a, &pi, &mut rng).unwrap();
        let c = random_linked_partner(&b, &pi, &mut rng).unwrap();
        prop_assert!(a.pi_linked(&a, &pi, TOL).unwrap());
        prop_assert!(a.pi_linked(&b, &pi, 1e-8).unwrap());
        prop_assert!(b.pi_linked(&a, &pi, 1e-8).unwrap());
        prop_assert!(a.pi_linked(&c, &pi, 1e-8).unwrap());
        let profile = LinkageProfile::new(&a, &c, 1e-8).unwrap();
        prop_assert!(profile.pi_linked(&pi));
    }

    #[test]
    fn eversion_is_an_involution(seed: u64, n in 2usize..7, complex: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = IntPartition::all(n).choose(&mut rng).unwrap().clone();
        let t = FrameTuple::random(n, &shape, false, field(complex), &mut rng);
        let back = t.evert().unwrap().evert().unwrap();
        prop_assert!(back.equals(&t, 1e-7).unwrap());
        let orth = FrameTuple::random(n, &shape, true, field(complex), &mut rng);
        prop_assert!(orth.evert().unwrap().equals(&orth, 1e-9).unwrap());
    }

    #[test]
    fn eversion_of_lines_is_the_dual_basis(seed: u64, n in 2usize..7) {
        // Independent route: the dual basis is given by the columns of B⁻ᴴ.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = FrameTuple::random(n, &IntPartition::ones(n), false, Field::Complex, &mut rng);
        let dual = t.stacked_basis().inverse().unwrap().adjoint();
        let expected = FrameTuple::new(
            (0..n)
                .map(|i| frame_rigidity::Subspace::span(&dual.select_columns(&[i]), TOL).unwrap())
                .collect(),
            false,
        )
        .unwrap();
        prop_assert!(t.evert().unwrap().equals(&expected, 1e-8).unwrap());
    }

    #[test]
    fn induced_maps_conjugate_eversion(seed: u64, n in 2usize..6, conj: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let auto = if conj { Automorphism::Conjugation } else { Automorphism::Identity };
        let map = SemilinearMap::random(n, Field::Complex, auto, &mut rng);
        let shape = IntPartition::all(n).choose(&mut rng).unwrap().clone();
        let t = FrameTuple::random(n, &shape, false, Field::Complex, &mut rng);
        let lhs = map.evert_conjugate(TOL).unwrap().induced_on_frame(&t.evert().unwrap()).unwrap();
        let rhs = map.induced_on_frame(&t).unwrap().evert().unwrap();
        prop_assert!(lhs.equals(&rhs, 1e-6).unwrap());
    }

    #[test]
    fn frame_json_round_trip(seed: u64, n in 1usize..6, complex: bool, orthogonal: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = IntPartition::all(n).choose(&mut rng).unwrap().clone();
        let t = FrameTuple::random(n, &shape, orthogonal, field(complex), &mut rng);
        let back = FrameTuple::from_json(&t.to_json(), TOL).unwrap();
        prop_assert!(back.equals(&t, 1e-12).unwrap());
        prop_assert_eq!(back.is_orthogonal(), orthogonal);
    }
}
