use std::time::Instant;

use frame_rigidity::Tableau;

use crate::config::{ConfigError, Suite, SuiteConfig};
use crate::harness::Runner;
use crate::report::VerificationReport;

mod clr;
mod clr_bis;
mod eversion_order;
mod falsify;
mod obot;
mod partitions;
mod pfr;
mod pfr_perp;
mod reconstruction;
mod refinement;

pub use falsify::DEFAULT_EPSILON;

/// Residual bound for subspace comparisons after a handful of lattice
/// operations.
pub fn lattice_threshold(cfg: &SuiteConfig) -> f64 {
    100.0 * cfg.tol
}

/// Residual bound for comparisons that pass through a polar decomposition
/// or a reconstruction.
pub fn iterative_threshold(cfg: &SuiteConfig) -> f64 {
    1000.0 * cfg.tol
}

/// Threshold for the projector-commutator test.
pub fn commutator_tol(cfg: &SuiteConfig) -> f64 {
    10.0 * cfg.tol
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, ConfigError> {
    run_properties(cfg, None)
}

/// Runs only the named properties of the suite (all of them for `None`).
pub fn run_properties(
    cfg: &SuiteConfig,
    only: Option<&[&str]>,
) -> Result<VerificationReport, ConfigError> {
    run_with(cfg, only, |r| dispatch(cfg.suite, r))
}

/// The falsification suite with an explicit distortion strength.
pub fn falsify(cfg: &SuiteConfig, epsilon: f64) -> Result<VerificationReport, ConfigError> {
    let cfg = SuiteConfig {
        suite: Suite::Falsify,
        ..cfg.clone()
    };
    run_with(&cfg, None, |r| falsify::run(r, epsilon))
}

fn run_with<F>(
    cfg: &SuiteConfig,
    only: Option<&[&str]>,
    body: F,
) -> Result<VerificationReport, ConfigError>
where
    F: FnOnce(&mut Runner<'_>),
{
    cfg.validate()?;
    let start = Instant::now();
    let mut runner = Runner::new(cfg, only);
    body(&mut runner);
    let records = runner.into_records();
    Ok(VerificationReport::new(
        cfg.clone(),
        records,
        start.elapsed().as_secs_f64(),
    ))
}

fn dispatch(suite: Suite, r: &mut Runner<'_>) {
    match suite {
        Suite::Clr => clr::run(r),
        Suite::ClrBis => clr_bis::run(r),
        Suite::PfrPerp => pfr_perp::run(r),
        Suite::Pfr => pfr::run(r),
        Suite::EversionOrder => eversion_order::run(r),
        Suite::Obot => obot::run(r),
        Suite::Refinement => refinement::run(r),
        Suite::Partitions => partitions::run(r),
        Suite::Reconstruction => reconstruction::run(r),
        Suite::Falsify => falsify::run(r, DEFAULT_EPSILON),
    }
}

/// Property names of a suite, in report order.
pub fn property_names(suite: Suite) -> &'static [&'static str] {
    match suite {
        Suite::Clr => clr::PROPERTIES,
        Suite::ClrBis => clr_bis::PROPERTIES,
        Suite::PfrPerp => pfr_perp::PROPERTIES,
        Suite::Pfr => pfr::PROPERTIES,
        Suite::EversionOrder => eversion_order::PROPERTIES,
        Suite::Obot => obot::PROPERTIES,
        Suite::Refinement => refinement::PROPERTIES,
        Suite::Partitions => partitions::PROPERTIES,
        Suite::Reconstruction => reconstruction::PROPERTIES,
        Suite::Falsify => falsify::PROPERTIES,
    }
}

/// Linkage properties cycle through every set partition of the components;
/// this many trials give each partition `per_partition` instances.
pub fn trials_per_partition(n: usize, per_partition: u64) -> u64 {
    Tableau::all(n).len() as u64 * per_partition
}
