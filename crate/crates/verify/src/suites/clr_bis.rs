//! Induced maps keep independent line tuples independent, but only scaled
//! unitaries keep orthogonal ones orthogonal.

use frame_rigidity::{FrameTuple, IntPartition};

use super::lattice_threshold;
use crate::harness::{Outcome, Runner};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "inclusion_preserved",
    "orthogonal_lines_stay_independent",
    "independent_lines_stay_independent",
    "scaled_unitary_keeps_orthogonality",
];

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let lines = IntPartition::ones(n);

    r.property(
        "inclusion_preserved",
        Some(lattice_threshold(&cfg)),
        trials,
        |t| {
            let map = sample::semilinear(n, field, t.index, &mut t.rng);
            let (a, b) = sample::nested_pair(n, field, &mut t.rng);
            let residual = map
                .apply_to_subspace(&a)?
                .containment_residual(&map.apply_to_subspace(&b)?)?;
            Ok(Outcome::Residual(residual))
        },
    );
    r.property("orthogonal_lines_stay_independent", None, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let frame = FrameTuple::random(n, &lines, true, field, &mut t.rng);
        let image = map.induced_on_frame(&frame)?;
        Ok(Outcome::Holds(image.validate(tol).is_valid()))
    });
    r.property("independent_lines_stay_independent", None, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let frame = FrameTuple::random(n, &lines, false, field, &mut t.rng);
        let image = map.induced_on_frame(&frame)?;
        Ok(Outcome::Holds(image.validate(tol).is_valid()))
    });
    r.property("scaled_unitary_keeps_orthogonality", None, trials, |t| {
        let map = sample::scaled_unitary(n, field, t.index, &mut t.rng);
        let frame = FrameTuple::random(n, &lines, true, field, &mut t.rng);
        let image = map.induced_on_frame(&frame)?;
        Ok(Outcome::Holds(
            image.is_orthogonal() && image.validate(tol).is_valid(),
        ))
    });
}
