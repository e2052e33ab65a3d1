//! Acceptance criteria, one line per criterion. Runs as a plain binary so
//! the lines show up in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use frame_rigidity::{Field, Tableau};
use frame_rigidity_verify::suites::{commutator_tol, trials_per_partition};
use frame_rigidity_verify::{
    falsify, run_properties, run_suite, Suite, SuiteConfig, VerificationReport,
};

const FIELDS: [Field; 2] = [Field::Real, Field::Complex];
const SEED: u64 = 20_240_601;

const COMMEASURABILITY_PAIRS: u64 = 10_000;
const COMMEASURABILITY_TOL: f64 = 1e-8;
const COMMEASURABILITY_BUDGET: Duration = Duration::from_secs(10);
const LATTICE_MAPS: u64 = 1000;
const LATTICE_RESIDUAL: f64 = 1e-7;
const LINKAGE_PER_PARTITION: u64 = 500;
const EVERSION_FRAMES: u64 = 10_000;
const EVERSION_RESIDUAL: f64 = 1e-7;
const CONJUGATE_MAPS: u64 = 1000;
const CONJUGATE_RESIDUAL: f64 = 1e-6;
const HIDDEN_MAPS: u64 = 200;
const DISTORTED_ORACLES: u64 = 50;
const COMBINATORICS_BUDGET: Duration = Duration::from_secs(30);
const FALSIFY_TRIALS: u64 = 500;
const FALSIFY_RATE: f64 = 0.95;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn cfg(suite: Suite, n: usize, field: Field, trials: u64) -> SuiteConfig {
    SuiteConfig::new(suite, n)
        .expect("valid ambient")
        .field(field)
        .trials(trials)
        .seed(SEED)
        .tol(frame_rigidity::DEFAULT_TOL)
}

/// Failures, plus residual violations of `bound` for thresholded properties.
fn problems(report: &VerificationReport, bound: Option<f64>) -> Vec<String> {
    let mut out = Vec::new();
    for p in &report.properties {
        if p.failures > 0 {
            out.push(format!(
                "{} n={} {}: {} failures (worst {:e}{})",
                report.suite,
                report.config.ambient,
                p.name,
                p.failures,
                p.worst_residual,
                p.first_error
                    .as_deref()
                    .map(|e| format!(", {e}"))
                    .unwrap_or_default()
            ));
        }
        if let (Some(bound), Some(_)) = (bound, p.threshold) {
            if p.worst_residual > bound {
                out.push(format!(
                    "{} {}: residual {:e} above {bound:e}",
                    report.suite, p.name, p.worst_residual
                ));
            }
        }
    }
    out
}

fn total_trials(report: &VerificationReport, name: &str) -> u64 {
    report.property(name).map_or(0, |p| p.trials)
}

fn verdict(problems: Vec<String>, summary: String) -> Outcome {
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            summary
        } else {
            problems.join("; ")
        },
    }
}

fn commeasurability_equivalence() -> Outcome {
    let start = Instant::now();
    let mut issues = Vec::new();
    let mut pairs = 0;
    for n in 2..=6 {
        for field in FIELDS {
            let c = cfg(Suite::Obot, n, field, COMMEASURABILITY_PAIRS);
            assert_eq!(commutator_tol(&c), COMMEASURABILITY_TOL);
            let r = run_properties(&c, Some(&["commeasurability_equivalence"])).unwrap();
            pairs += total_trials(&r, "commeasurability_equivalence");
            issues.extend(problems(&r, None));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > COMMEASURABILITY_BUDGET {
        issues.push(format!("took {elapsed:.1?}"));
    }
    verdict(
        issues,
        format!("{pairs} pairs, 0 disagreements in {elapsed:.1?}"),
    )
}

fn lattice_preserved() -> Outcome {
    let mut issues = Vec::new();
    for n in [3, 4, 5] {
        for field in FIELDS {
            let r = run_suite(&cfg(Suite::Clr, n, field, LATTICE_MAPS)).unwrap();
            issues.extend(problems(&r, Some(LATTICE_RESIDUAL)));
        }
    }
    verdict(
        issues,
        format!("{LATTICE_MAPS} maps per (n, field), n in 3..=5"),
    )
}

fn linkage_preserved() -> Outcome {
    let mut issues = Vec::new();
    for n in [3, 4, 5] {
        for field in FIELDS {
            let trials = trials_per_partition(n, LINKAGE_PER_PARTITION);
            let c = cfg(Suite::PfrPerp, n, field, trials);
            let r = run_properties(&c, Some(&["linkage_preserved", "permutation_equivariance"]))
                .unwrap();
            issues.extend(problems(&r, Some(LATTICE_RESIDUAL)));
        }
    }
    verdict(
        issues,
        format!("{LINKAGE_PER_PARTITION} instances per set partition, n in 3..=5"),
    )
}

fn eversion() -> Outcome {
    let mut issues = Vec::new();
    for n in [3, 4, 5] {
        for field in FIELDS {
            let trials = EVERSION_FRAMES.max(trials_per_partition(n, LINKAGE_PER_PARTITION));
            let r = run_suite(&cfg(Suite::Pfr, n, field, trials)).unwrap();
            issues.extend(problems(&r, Some(EVERSION_RESIDUAL)));
        }
    }
    verdict(
        issues,
        "involution, fixed points, linkage, equivariance".into(),
    )
}

fn eversion_conjugation() -> Outcome {
    let mut issues = Vec::new();
    for n in [2, 3, 4] {
        for field in FIELDS {
            let r = run_suite(&cfg(Suite::EversionOrder, n, field, CONJUGATE_MAPS)).unwrap();
            issues.extend(problems(&r, Some(CONJUGATE_RESIDUAL)));
        }
    }
    verdict(
        issues,
        format!("{CONJUGATE_MAPS} maps x 10 frames per (n, field)"),
    )
}

fn reconstruction() -> Outcome {
    let mut issues = Vec::new();
    for n in [3, 4] {
        for field in FIELDS {
            let r = run_suite(&cfg(Suite::Reconstruction, n, field, HIDDEN_MAPS)).unwrap();
            if total_trials(&r, "distorted_oracle_rejected") < DISTORTED_ORACLES {
                issues.push("too few distorted oracles".into());
            }
            issues.extend(problems(&r, None));
        }
    }
    verdict(
        issues,
        format!("{HIDDEN_MAPS} hidden maps per (n, field), 0 misclassified"),
    )
}

fn combinatorics() -> Outcome {
    let start = Instant::now();
    let mut issues = Vec::new();
    let r = run_suite(&cfg(Suite::Partitions, 6, Field::Real, 1)).unwrap();
    issues.extend(problems(&r, None));
    for n in 2..=5 {
        for field in FIELDS {
            let r = run_suite(&cfg(Suite::Refinement, n, field, 1)).unwrap();
            issues.extend(problems(&r, Some(LATTICE_RESIDUAL)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > COMBINATORICS_BUDGET {
        issues.push(format!("took {elapsed:.1?}"));
    }
    verdict(issues, format!("exhaustive, {elapsed:.1?}"))
}

fn falsification() -> Outcome {
    let mut issues = Vec::new();
    let c = cfg(Suite::Falsify, 3, Field::Complex, FALSIFY_TRIALS);
    let rate = |r: &VerificationReport| {
        r.property("distortion_breaks_linkage")
            .and_then(|p| p.metric.as_ref())
            .map_or(f64::NAN, |m| m.value)
    };
    let distorted = run_suite(&c).unwrap();
    let control = falsify(&c, 0.0).unwrap();
    let (hit, miss) = (rate(&distorted), rate(&control));
    if hit.is_nan() || hit < FALSIFY_RATE {
        issues.push(format!("violation rate {hit}"));
    }
    if miss != 0.0 {
        issues.push(format!("control violation rate {miss}"));
    }
    issues.extend(problems(&distorted, None));
    verdict(
        issues,
        format!("violation rate {hit:.3} (control {miss:.3})"),
    )
}

fn determinism() -> Outcome {
    let mut issues = Vec::new();
    for suite in Suite::ALL {
        for field in FIELDS {
            let c = cfg(suite, suite.min_ambient().max(3), field, 25);
            let a = run_suite(&c).unwrap();
            let b = run_suite(&c).unwrap();
            if a.deterministic_bytes() != b.deterministic_bytes() {
                issues.push(format!("{suite} ({field}) differs between runs"));
            }
        }
    }
    verdict(
        issues,
        format!("{} suites x 2 fields byte-identical", Suite::ALL.len()),
    )
}

fn main() -> ExitCode {
    assert_eq!(Tableau::all(5).len(), 52);
    let criteria: [Criterion; 9] = [
        ("commeasurability equivalence", commeasurability_equivalence),
        ("lattice operations preserved", lattice_preserved),
        ("linkage preserved by induced maps", linkage_preserved),
        ("eversion", eversion),
        ("eversion conjugation", eversion_conjugation),
        ("reconstruction up to scale", reconstruction),
        ("combinatorics", combinatorics),
        ("falsification", falsification),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let mark = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {} [{mark}] {name}: {} ({:.1?})",
            i + 1,
            outcome.detail,
            start.elapsed()
        );
        failed += usize::from(!outcome.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
