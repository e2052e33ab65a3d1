//! Refinement maps of frames: functorial along tableau chains and
//! equivariant for the block permutations compatible with the arrow.

use frame_rigidity::{
    compose_refinements, reverse_refines, Field, FrameTuple, Permutation, RefinementArrow, Tableau,
};
use rand::seq::IndexedRandom;
use rand::Rng;

use super::lattice_threshold;
use crate::harness::{Outcome, Runner, TrialError};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "identity_arrow",
    "functoriality",
    "equivariance",
    "canonical_lift_equivariance",
];

/// Chains and arrows are enumerated exhaustively up to this ambient
/// dimension and sampled above it.
pub const EXHAUSTIVE_LIMIT: usize = 6;

/// Every legal block permutation is tried up to this dimension; above it a
/// few are sampled per arrow.
pub const ALL_PERMUTATIONS_LIMIT: usize = 5;
const SAMPLED_PERMUTATIONS: usize = 8;

fn arrows(n: usize) -> Vec<RefinementArrow> {
    let all = Tableau::all(n);
    let mut out = Vec::new();
    for fine in &all {
        for coarse in &all {
            if let Some(f) = reverse_refines(fine, coarse) {
                out.push(f);
            }
        }
    }
    out
}

fn coarsenings(fine: &Tableau, all: &[Tableau]) -> Vec<RefinementArrow> {
    all.iter()
        .filter_map(|c| reverse_refines(fine, c))
        .collect()
}

fn random_arrow(fine: &Tableau, all: &[Tableau], rng: &mut impl Rng) -> RefinementArrow {
    coarsenings(fine, all)
        .choose(rng)
        .expect("the whole set coarsens everything")
        .clone()
}

fn frame_for(fine: &Tableau, field: Field, index: u64, rng: &mut impl Rng) -> FrameTuple {
    FrameTuple::random(fine.n(), &fine.shape(), index.is_multiple_of(2), field, rng)
}

fn block_dims(t: &Tableau) -> Vec<usize> {
    t.blocks().iter().map(Vec::len).collect()
}

fn equivariance_residual(
    frame: &FrameTuple,
    arrow: &RefinementArrow,
    sigma: &Permutation,
    sigma_bar: &Permutation,
) -> Result<f64, TrialError> {
    let lhs = frame.permute(sigma)?.refine_map(arrow)?;
    let rhs = frame.refine_map(arrow)?.permute(sigma_bar)?;
    Ok(lhs.distance(&rhs)?)
}

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials) = (cfg.ambient, cfg.field, cfg.trials);
    let threshold = Some(lattice_threshold(&cfg));
    let all = Tableau::all(n);
    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let pairs = if exhaustive { arrows(n) } else { Vec::new() };
    let chains: Vec<(RefinementArrow, RefinementArrow)> = pairs
        .iter()
        .flat_map(|f| {
            coarsenings(f.coarse(), &all)
                .into_iter()
                .map(move |g| (f.clone(), g))
        })
        .collect();
    let pair_count = trials.max(pairs.len() as u64);
    let chain_count = trials.max(chains.len() as u64);

    r.property(
        "identity_arrow",
        threshold,
        trials.max(all.len() as u64),
        |t| {
            let tableau = &all[t.index as usize % all.len()];
            let frame = frame_for(tableau, field, t.index, &mut t.rng);
            let image = frame.refine_map(&RefinementArrow::identity(tableau))?;
            Ok(Outcome::Residual(image.distance(&frame)?))
        },
    );
    r.property("functoriality", threshold, chain_count, |t| {
        let (f, g) = if exhaustive {
            chains[t.index as usize % chains.len()].clone()
        } else {
            let fine = all.choose(&mut t.rng).expect("nonempty").clone();
            let f = random_arrow(&fine, &all, &mut t.rng);
            let g = random_arrow(f.coarse(), &all, &mut t.rng);
            (f, g)
        };
        let frame = frame_for(f.fine(), field, t.index, &mut t.rng);
        let stepwise = frame.refine_map(&f)?.refine_map(&g)?;
        let direct = frame.refine_map(&compose_refinements(&f, &g)?)?;
        Ok(Outcome::Residual(stepwise.distance(&direct)?))
    });
    r.property("equivariance", threshold, pair_count, |t| {
        let f = if exhaustive {
            pairs[t.index as usize % pairs.len()].clone()
        } else {
            let fine = all.choose(&mut t.rng).expect("nonempty").clone();
            random_arrow(&fine, &all, &mut t.rng)
        };
        let frame = frame_for(f.fine(), field, t.index, &mut t.rng);
        let dims = block_dims(f.fine());
        let sigmas = if n <= ALL_PERMUTATIONS_LIMIT {
            Permutation::dimension_preserving(&dims)
        } else {
            (0..SAMPLED_PERMUTATIONS)
                .map(|_| sample::dimension_preserving(&dims, &mut t.rng))
                .collect()
        };
        let mut worst: f64 = 0.0;
        for sigma in &sigmas {
            if let Some(sigma_bar) = f.induced_coarse_permutation(sigma) {
                worst = worst.max(equivariance_residual(&frame, &f, sigma, &sigma_bar)?);
            }
        }
        Ok(Outcome::Residual(worst))
    });
    r.property("canonical_lift_equivariance", threshold, pair_count, |t| {
        let f = if exhaustive {
            pairs[t.index as usize % pairs.len()].clone()
        } else {
            let fine = all.choose(&mut t.rng).expect("nonempty").clone();
            random_arrow(&fine, &all, &mut t.rng)
        };
        let frame = frame_for(f.fine(), field, t.index, &mut t.rng);
        let coarse_dims = block_dims(f.coarse());
        let taus = if n <= ALL_PERMUTATIONS_LIMIT {
            Permutation::dimension_preserving(&coarse_dims)
        } else {
            (0..SAMPLED_PERMUTATIONS)
                .map(|_| sample::dimension_preserving(&coarse_dims, &mut t.rng))
                .collect()
        };
        let mut worst: f64 = 0.0;
        for tau in &taus {
            let Some(sigma) = f.lift_coarse_permutation(tau) else {
                continue;
            };
            if f.induced_coarse_permutation(&sigma).as_ref() != Some(tau) {
                return Ok(Outcome::Holds(false));
            }
            worst = worst.max(equivariance_residual(&frame, &f, &sigma, tau)?);
        }
        Ok(Outcome::Residual(worst))
    });
}
