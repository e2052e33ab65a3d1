//! Contrapositive checks: a gauge-invariant nonlinear distortion of lines
//! breaks linkage of linked frames and is rejected by reconstruction.

use frame_rigidity::frame::random_linked_partner;
use frame_rigidity::induced::{reconstruct_from_line_images, ReconstructError};
use frame_rigidity::{FrameTuple, IntPartition, Subspace, Tableau};

use super::iterative_threshold;
use crate::harness::{Outcome, Runner, TrialError};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "distortion_breaks_linkage",
    "undistorted_control",
    "distorted_map_not_semilinear",
];

pub const DEFAULT_EPSILON: f64 = 0.1;

/// Required share of linked pairs whose distorted images are not linked.
pub const MIN_VIOLATION_RATE: f64 = 0.95;

/// Partitions with a block that is neither a single line nor everything;
/// for the others, linkage survives any bijection of lines.
pub fn informative_partitions(n: usize) -> Vec<Tableau> {
    Tableau::all(n)
        .into_iter()
        .filter(|pi| pi.blocks().iter().any(|b| (2..n).contains(&b.len())))
        .collect()
}

fn distort_frame(frame: &FrameTuple, epsilon: f64, tol: f64) -> Result<FrameTuple, TrialError> {
    let lines: Vec<Subspace> = frame
        .components()
        .iter()
        .map(|l| sample::distort_line(l, epsilon, tol))
        .collect();
    Ok(FrameTuple::new(lines, false)?)
}

pub fn run(r: &mut Runner<'_>, epsilon: f64) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let lines = IntPartition::ones(n);
    let partitions = informative_partitions(n);

    let linked_images = |t: &mut crate::harness::Trial<'_>, eps: f64| -> Result<bool, TrialError> {
        let pi = &partitions[t.index as usize % partitions.len()];
        let a = FrameTuple::random(n, &lines, false, field, &mut t.rng);
        let b = random_linked_partner(&a, pi, &mut t.rng)?;
        Ok(distort_frame(&a, eps, tol)?.pi_linked(
            &distort_frame(&b, eps, tol)?,
            pi,
            100.0 * tol,
        )?)
    };

    r.rate(
        "distortion_breaks_linkage",
        MIN_VIOLATION_RATE,
        trials,
        |t| Ok(!linked_images(t, epsilon)?),
    );
    r.property("undistorted_control", None, trials, |t| {
        Ok(Outcome::Holds(linked_images(t, 0.0)?))
    });
    r.property("distorted_map_not_semilinear", None, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let oracle = |l: &Subspace| {
            map.apply_to_subspace(&sample::distort_line(l, epsilon, tol))
                .expect("invertible map")
        };
        let verdict = reconstruct_from_line_images(oracle, n, field, iterative_threshold(&cfg));
        Ok(Outcome::Holds(matches!(
            verdict,
            Err(ReconstructError::NotSemilinear { .. })
        )))
    });
}
