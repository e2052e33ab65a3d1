//! Induced maps on subspaces respect dimension and the lattice operations.

use frame_rigidity::Subspace;

use super::lattice_threshold;
use crate::harness::{Outcome, Runner, TrialError};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "dimension_preserved",
    "commeasurable_join_preserved",
    "commeasurable_meet_preserved",
    "generic_join_preserved",
    "generic_meet_preserved",
];

fn join_residual(
    t: &frame_rigidity::SemilinearMap,
    a: &Subspace,
    b: &Subspace,
    tol: f64,
) -> Result<f64, TrialError> {
    let lhs = t.apply_to_subspace(&a.sum_with_tol(b, tol)?)?;
    let rhs = t
        .apply_to_subspace(a)?
        .sum_with_tol(&t.apply_to_subspace(b)?, tol)?;
    Ok(lhs.distance(&rhs)?)
}

fn meet_residual(
    t: &frame_rigidity::SemilinearMap,
    a: &Subspace,
    b: &Subspace,
    tol: f64,
) -> Result<f64, TrialError> {
    let lhs = t.apply_to_subspace(&a.intersect_with_tol(b, tol)?)?;
    let rhs = t
        .apply_to_subspace(a)?
        .intersect_with_tol(&t.apply_to_subspace(b)?, tol)?;
    Ok(lhs.distance(&rhs)?)
}

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let threshold = Some(lattice_threshold(&cfg));

    r.property("dimension_preserved", None, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let (a, _) = sample::generic_pair(n, field, &mut t.rng);
        Ok(Outcome::Holds(map.apply_to_subspace(&a)?.dim() == a.dim()))
    });
    r.property("commeasurable_join_preserved", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let (a, b) = sample::commeasurable_pair(n, field, &mut t.rng);
        Ok(Outcome::Residual(join_residual(&map, &a, &b, tol)?))
    });
    r.property("commeasurable_meet_preserved", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let (a, b) = sample::commeasurable_pair(n, field, &mut t.rng);
        Ok(Outcome::Residual(meet_residual(&map, &a, &b, tol)?))
    });
    r.property("generic_join_preserved", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let (a, b) = sample::generic_pair(n, field, &mut t.rng);
        Ok(Outcome::Residual(join_residual(&map, &a, &b, tol)?))
    });
    r.property("generic_meet_preserved", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let (a, b) = sample::generic_pair(n, field, &mut t.rng);
        Ok(Outcome::Residual(meet_residual(&map, &a, &b, tol)?))
    });
}
