//! A line map induced by a semilinear map determines that map up to a
//! scalar, and nonlinear line maps are rejected.

use frame_rigidity::induced::{reconstruct_from_line_images, ReconstructError};
use frame_rigidity::{Matrix, SemilinearMap};

use super::iterative_threshold;
use crate::harness::{Outcome, Runner};
use crate::sample;

pub const PROPERTIES: &[&str] = &["round_trip_up_to_scale", "distorted_oracle_rejected"];

/// Distortion strength of the rejected oracles.
pub const DISTORTION: f64 = 0.1;

/// `min_λ`-style residual `max|a − λb| / max|a|`, with `λ` read off the
/// largest entry of `b`; infinite when the automorphisms differ.
pub fn scale_residual(a: &SemilinearMap, b: &SemilinearMap) -> f64 {
    if a.automorphism() != b.automorphism() || a.dim() != b.dim() {
        return f64::INFINITY;
    }
    let (x, y): (&Matrix, &Matrix) = (a.matrix(), b.matrix());
    let (xs, ys) = (x.entries(), y.entries());
    let k = (0..ys.len())
        .max_by(|&i, &j| ys[i].norm().total_cmp(&ys[j].norm()))
        .expect("nonempty");
    let lambda = xs[k] / ys[k];
    let scale = xs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    xs.iter()
        .zip(ys)
        .map(|(p, q)| (p - lambda * q).norm())
        .fold(0.0, f64::max)
        / scale
}

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let rtol = iterative_threshold(&cfg);

    r.property("round_trip_up_to_scale", Some(rtol), trials, |t| {
        let hidden = sample::semilinear(n, field, t.index, &mut t.rng);
        let oracle = |l: &_| hidden.apply_to_subspace(l).expect("invertible map");
        let found = reconstruct_from_line_images(oracle, n, field, rtol)?;
        Ok(Outcome::Residual(scale_residual(&found, &hidden)))
    });
    r.property("distorted_oracle_rejected", None, trials, |t| {
        let hidden = sample::semilinear(n, field, t.index, &mut t.rng);
        let oracle = |l: &_| {
            let bent = sample::distort_line(l, DISTORTION, tol);
            hidden.apply_to_subspace(&bent).expect("invertible map")
        };
        let verdict = reconstruct_from_line_images(oracle, n, field, rtol);
        Ok(Outcome::Holds(matches!(
            verdict,
            Err(ReconstructError::NotSemilinear { .. })
        )))
    });
}
