//! Commeasurability of subspaces and its frame version. On two-component
//! frames `(W, W^⊥)` the frame relation reduces to the subspace one.

use frame_rigidity::{Field, FrameTuple, Subspace};
use rand::Rng;

use super::{commutator_tol, lattice_threshold};
use crate::harness::{Outcome, Runner, TrialError};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "commeasurability_equivalence",
    "meet_is_product_range",
    "de_morgan",
    "modular_dimension_law",
    "restriction_compatibility",
];

/// Rotation angles of the near-commuting pairs, kept away from the
/// decision thresholds.
pub const ADVERSARIAL_ANGLES: [f64; 3] = [1e-12, 1e-6, 1e-3];

/// Cycles through generic pairs, exactly commeasurable pairs and pairs
/// rotated by each of [`ADVERSARIAL_ANGLES`].
fn mixed_pair(n: usize, field: Field, index: u64, rng: &mut impl Rng) -> (Subspace, Subspace) {
    match index % 5 {
        0 => sample::generic_pair(n, field, rng),
        1 => sample::commeasurable_pair(n, field, rng),
        k => sample::rotated_pair(n, field, ADVERSARIAL_ANGLES[k as usize - 2], rng),
    }
}

/// Subspace and its orthocomplement, larger component first.
fn two_component_frame(w: &Subspace) -> Result<FrameTuple, TrialError> {
    let perp = w.orthocomplement();
    let components = if w.dim() >= perp.dim() {
        vec![w.clone(), perp]
    } else {
        vec![perp, w.clone()]
    };
    Ok(FrameTuple::new(components, true)?)
}

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let threshold = Some(lattice_threshold(&cfg));
    let ctol = commutator_tol(&cfg);

    r.property("commeasurability_equivalence", None, trials, |t| {
        let (a, b) = mixed_pair(n, field, t.index, &mut t.rng);
        let by_commutator = a.commeasurable(&b, ctol)?;
        let by_complements = a.commeasurable_by_complements(&b, tol)?;
        Ok(Outcome::Holds(by_commutator == by_complements))
    });
    r.property("meet_is_product_range", threshold, trials, |t| {
        let (a, b) = if t.index % 2 == 0 {
            sample::commeasurable_pair(n, field, &mut t.rng)
        } else {
            sample::rotated_pair(n, field, ADVERSARIAL_ANGLES[0], &mut t.rng)
        };
        if !a.commeasurable(&b, ctol)? {
            return Ok(Outcome::Holds(false));
        }
        let meet = a.intersect_with_tol(&b, tol)?;
        Ok(Outcome::Residual(
            meet.distance(&a.product_range(&b, tol)?)?,
        ))
    });
    r.property("de_morgan", threshold, trials, |t| {
        let (a, b) = mixed_pair(n, field, t.index, &mut t.rng);
        let lhs = a.sum_with_tol(&b, tol)?.orthocomplement();
        let rhs = a
            .orthocomplement()
            .intersect_with_tol(&b.orthocomplement(), tol)?;
        Ok(Outcome::Residual(lhs.distance(&rhs)?))
    });
    r.property("modular_dimension_law", None, trials, |t| {
        let (a, b) = mixed_pair(n, field, t.index, &mut t.rng);
        let join = a.sum_with_tol(&b, tol)?.dim();
        let meet = a.intersect_with_tol(&b, tol)?.dim();
        Ok(Outcome::Holds(join + meet == a.dim() + b.dim()))
    });
    r.property("restriction_compatibility", None, trials, |t| {
        let (w, w2) = loop {
            let (a, b) = mixed_pair(n, field, t.index, &mut t.rng);
            if a.dim() < n && b.dim() < n {
                break (a, b);
            }
        };
        let pair = w.commeasurable(&w2, ctol)?;
        let frames = two_component_frame(&w)?.bigobot(&two_component_frame(&w2)?, tol)?;
        Ok(Outcome::Holds(pair == frames))
    });
}
