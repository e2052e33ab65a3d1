use frame_rigidity::{
    compose_refinements, reverse_refines, IntPartition, RefinementArrow, Tableau,
};

#[test]
fn conjugation_is_an_involution_up_to_twelve() {
    for n in 1..=12 {
        for mu in IntPartition::all(n) {
            assert_eq!(mu.conjugate().conjugate(), mu);
            assert_eq!(mu.jmp_sequence().iter().sum::<usize>(), mu.part(0));
            assert_eq!(mu.symmetry_factors().iter().sum::<usize>(), mu.len());
        }
    }
}

#[test]
fn conjugation_reverses_dominance() {
    for n in 1..=8 {
        let all = IntPartition::all(n);
        for a in &all {
            for b in &all {
                let forward = a.dominance_leq(b).unwrap();
                let back = b.conjugate().dominance_leq(&a.conjugate()).unwrap();
                assert_eq!(forward, back, "{a} {b}");
            }
        }
    }
}

#[test]
fn refinement_implies_dominance_up_to_six() {
    for n in 1..=6 {
        let all = Tableau::all(n);
        for fine in &all {
            for coarse in &all {
                if reverse_refines(fine, coarse).is_some() {
                    assert!(fine.shape().dominance_leq(&coarse.shape()).unwrap());
                }
            }
        }
    }
}

#[test]
fn refinement_is_a_partial_order() {
    let all = Tableau::all(5);
    for a in &all {
        assert!(reverse_refines(a, a).is_some());
        for b in &all {
            if a != b && reverse_refines(a, b).is_some() {
                assert!(reverse_refines(b, a).is_none());
            }
        }
    }
}

#[test]
fn composition_is_associative_and_unital_up_to_five() {
    for n in 1..=5 {
        let all = Tableau::all(n);
        let up = |t: &Tableau| -> Vec<RefinementArrow> {
            all.iter().filter_map(|c| reverse_refines(t, c)).collect()
        };
        for fine in &all {
            for f in up(fine) {
                let id_l = compose_refinements(&RefinementArrow::identity(f.fine()), &f).unwrap();
                assert_eq!(id_l, f);
                for g in up(f.coarse()) {
                    let gf = compose_refinements(&f, &g).unwrap();
                    assert_eq!(Some(gf.clone()), reverse_refines(f.fine(), g.coarse()));
                    for h in up(g.coarse()) {
                        let left = compose_refinements(&gf, &h).unwrap();
                        let right =
                            compose_refinements(&f, &compose_refinements(&g, &h).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_lift_is_a_section_of_the_induced_permutation() {
    let mut nontrivial = 0;
    for n in 2..=5 {
        let all = Tableau::all(n);
        for fine in &all {
            for coarse in &all {
                let Some(f) = reverse_refines(fine, coarse) else {
                    continue;
                };
                let dims: Vec<usize> = coarse.blocks().iter().map(Vec::len).collect();
                for tau in frame_rigidity::Permutation::dimension_preserving(&dims) {
                    if let Some(sigma) = f.lift_coarse_permutation(&tau) {
                        assert_eq!(f.induced_coarse_permutation(&sigma), Some(tau));
                        nontrivial += usize::from(
                            sigma != frame_rigidity::Permutation::identity(sigma.len()),
                        );
                    }
                }
            }
        }
    }
    assert!(nontrivial > 0);
}
