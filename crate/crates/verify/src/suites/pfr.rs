//! Eversion as a frame map, alone and followed by an induced map.

use frame_rigidity::frame::random_linked_partner;
use frame_rigidity::{FrameTuple, IntPartition, LinkageProfile, Tableau};

use super::lattice_threshold;
use crate::harness::{Outcome, Runner};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "eversion_involution",
    "eversion_fixes_orthogonal_frames",
    "eversion_equivariance",
    "eversion_linkage_preserved",
    "composite_linkage_preserved",
];

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let threshold = Some(lattice_threshold(&cfg));
    let lines = IntPartition::ones(n);
    let partitions = Tableau::all(n);

    r.property("eversion_involution", threshold, trials, |t| {
        let shape = sample::shape(n, &mut t.rng);
        let frame = FrameTuple::random(n, &shape, false, field, &mut t.rng);
        Ok(Outcome::Residual(frame.evert()?.evert()?.distance(&frame)?))
    });
    r.property("eversion_fixes_orthogonal_frames", threshold, trials, |t| {
        let shape = sample::shape(n, &mut t.rng);
        let frame = FrameTuple::random(n, &shape, true, field, &mut t.rng);
        Ok(Outcome::Residual(frame.evert()?.distance(&frame)?))
    });
    r.property("eversion_equivariance", threshold, trials, |t| {
        let shape = sample::shape(n, &mut t.rng);
        let frame = FrameTuple::random(n, &shape, false, field, &mut t.rng);
        let sigma = sample::dimension_preserving(shape.parts(), &mut t.rng);
        let lhs = frame.permute(&sigma)?.evert()?;
        let rhs = frame.evert()?.permute(&sigma)?;
        Ok(Outcome::Residual(lhs.distance(&rhs)?))
    });
    r.property("eversion_linkage_preserved", None, trials, |t| {
        let pi = &partitions[t.index as usize % partitions.len()];
        let a = FrameTuple::random(n, &lines, false, field, &mut t.rng);
        let b = random_linked_partner(&a, pi, &mut t.rng)?;
        let before = LinkageProfile::new(&a, &b, tol)?;
        let after = LinkageProfile::new(&a.evert()?, &b.evert()?, tol)?;
        Ok(Outcome::Holds(
            before.pi_linked(pi) && before.agreeing_subsets() == after.agreeing_subsets(),
        ))
    });
    r.property("composite_linkage_preserved", None, trials, |t| {
        let pi = &partitions[t.index as usize % partitions.len()];
        let a = FrameTuple::random(n, &lines, false, field, &mut t.rng);
        let b = random_linked_partner(&a, pi, &mut t.rng)?;
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let image = |f: &FrameTuple| -> Result<FrameTuple, Box<dyn std::error::Error>> {
            Ok(map.induced_on_frame(&f.evert()?)?)
        };
        let before = LinkageProfile::new(&a, &b, tol)?;
        let after = LinkageProfile::new(&image(&a)?, &image(&b)?, tol)?;
        Ok(Outcome::Holds(
            before.pi_linked(pi) && before.agreeing_subsets() == after.agreeing_subsets(),
        ))
    });
}
