//! Induced maps on orthogonal line frames. Scaled unitaries also preserve
//! frame commeasurability.

use frame_rigidity::frame::random_linked_partner;
use frame_rigidity::{FrameTuple, IntPartition, LinkageProfile, Permutation, Tableau};
use rand::seq::IndexedRandom;

use super::lattice_threshold;
use crate::harness::{Outcome, Runner};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "linkage_preserved",
    "permutation_equivariance",
    "frame_commeasurability_preserved",
];

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let lines = IntPartition::ones(n);
    let partitions = Tableau::all(n);
    let perms = Permutation::all(n);

    r.property("linkage_preserved", None, trials, |t| {
        let pi = &partitions[t.index as usize % partitions.len()];
        let a = FrameTuple::random(n, &lines, true, field, &mut t.rng);
        let b = random_linked_partner(&a, pi, &mut t.rng)?;
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let before = LinkageProfile::new(&a, &b, tol)?;
        let after =
            LinkageProfile::new(&map.induced_on_frame(&a)?, &map.induced_on_frame(&b)?, tol)?;
        Ok(Outcome::Holds(
            before.pi_linked(pi) && before.agreeing_subsets() == after.agreeing_subsets(),
        ))
    });
    r.property(
        "permutation_equivariance",
        Some(lattice_threshold(&cfg)),
        trials,
        |t| {
            let a = FrameTuple::random(n, &lines, true, field, &mut t.rng);
            let map = sample::semilinear(n, field, t.index, &mut t.rng);
            let sigma = perms.choose(&mut t.rng).expect("nonempty");
            let lhs = map.induced_on_frame(&a.permute(sigma)?)?;
            let rhs = map.induced_on_frame(&a)?.permute(sigma)?;
            Ok(Outcome::Residual(lhs.distance(&rhs)?))
        },
    );
    r.property("frame_commeasurability_preserved", None, trials, |t| {
        let (a, b) = if t.index % 2 == 0 {
            sample::commeasurable_frames(n, field, &mut t.rng)
        } else {
            let shape_a = sample::shape(n, &mut t.rng);
            let shape_b = sample::shape(n, &mut t.rng);
            (
                FrameTuple::random(n, &shape_a, true, field, &mut t.rng),
                FrameTuple::random(n, &shape_b, true, field, &mut t.rng),
            )
        };
        let map = sample::scaled_unitary(n, field, t.index, &mut t.rng);
        let before = a.bigobot(&b, tol)?;
        let after = map
            .induced_on_frame(&a)?
            .bigobot(&map.induced_on_frame(&b)?, tol)?;
        Ok(Outcome::Holds(
            before == after && (before || t.index % 2 == 1),
        ))
    });
}
