//! Runs one property over its trials and folds the outcomes into a
//! [`PropertyRecord`].

use std::error::Error;

use rand_chacha::ChaCha8Rng;

use crate::config::SuiteConfig;
use crate::report::{Metric, PropertyRecord};
use crate::rng::{trial_rng, trial_seed};

pub type TrialError = Box<dyn Error>;

/// Result of a single trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    /// A residual compared against the property's threshold.
    Residual(f64),
    /// An exact yes/no check.
    Holds(bool),
}

pub struct Trial<'a> {
    pub index: u64,
    pub seed: u64,
    pub rng: ChaCha8Rng,
    pub cfg: &'a SuiteConfig,
}

/// Accumulates property records for one suite run.
pub struct Runner<'a> {
    cfg: &'a SuiteConfig,
    only: Option<&'a [&'a str]>,
    records: Vec<PropertyRecord>,
}

#[derive(Default)]
struct Tally {
    trials: u64,
    failures: u64,
    worst: f64,
    first: Option<(u64, u64)>,
    first_error: Option<String>,
}

impl Tally {
    fn record(
        &mut self,
        index: u64,
        seed: u64,
        outcome: Result<Outcome, TrialError>,
        threshold: Option<f64>,
    ) {
        self.trials += 1;
        let ok = match outcome {
            Ok(Outcome::Residual(r)) => {
                self.worst = if r.is_nan() {
                    f64::INFINITY
                } else {
                    self.worst.max(r)
                };
                threshold.is_some_and(|t| r <= t)
            }
            Ok(Outcome::Holds(h)) => {
                if !h {
                    self.worst = self.worst.max(1.0);
                }
                h
            }
            Err(e) => {
                self.worst = f64::INFINITY;
                if self.first_error.is_none() {
                    self.first_error = Some(e.to_string());
                }
                false
            }
        };
        if !ok {
            self.failures += 1;
            self.first.get_or_insert((index, seed));
        }
    }

    fn into_record(self, name: &str, threshold: Option<f64>) -> PropertyRecord {
        PropertyRecord {
            name: name.to_string(),
            trials: self.trials,
            failures: self.failures,
            worst_residual: self.worst,
            threshold,
            first_failing_trial: self.first.map(|f| f.0),
            first_failing_seed: self.first.map(|f| f.1),
            first_error: self.first_error,
            metric: None,
        }
    }
}

impl<'a> Runner<'a> {
    pub fn new(cfg: &'a SuiteConfig, only: Option<&'a [&'a str]>) -> Self {
        Self {
            cfg,
            only,
            records: Vec::new(),
        }
    }

    pub fn cfg(&self) -> &SuiteConfig {
        self.cfg
    }

    pub fn into_records(self) -> Vec<PropertyRecord> {
        self.records
    }

    fn selected(&self, name: &str) -> bool {
        self.only.is_none_or(|names| names.contains(&name))
    }

    fn trial(&self, name: &str, index: u64) -> Trial<'a> {
        let seed = trial_seed(self.cfg.seed, self.cfg.suite.name(), name, index);
        Trial {
            index,
            seed,
            rng: trial_rng(seed),
            cfg: self.cfg,
        }
    }

    /// Runs `count` trials of `body`. `threshold` bounds the residual of
    /// [`Outcome::Residual`] trials; pass `None` for exact properties.
    pub fn property<F>(&mut self, name: &str, threshold: Option<f64>, count: u64, mut body: F)
    where
        F: FnMut(&mut Trial<'_>) -> Result<Outcome, TrialError>,
    {
        if !self.selected(name) {
            return;
        }
        let mut tally = Tally::default();
        for index in 0..count {
            let mut trial = self.trial(name, index);
            let outcome = body(&mut trial);
            tally.record(index, trial.seed, outcome, threshold);
        }
        self.records.push(tally.into_record(name, threshold));
    }

    /// A Monte-Carlo rate: each trial reports whether the expected event
    /// occurred, and the property holds when the observed rate reaches
    /// `min_rate`. Otherwise every trial without the event counts as a
    /// failure. The rate is recorded as a metric.
    pub fn rate<F>(&mut self, name: &str, min_rate: f64, count: u64, mut body: F)
    where
        F: FnMut(&mut Trial<'_>) -> Result<bool, TrialError>,
    {
        if !self.selected(name) {
            return;
        }
        let mut hits = 0u64;
        let mut misses = Tally::default();
        for index in 0..count {
            let mut trial = self.trial(name, index);
            match body(&mut trial) {
                Ok(true) => hits += 1,
                other => misses.record(index, trial.seed, other.map(Outcome::Holds), None),
            }
        }
        let rate = hits as f64 / count as f64;
        let mut record = PropertyRecord {
            trials: count,
            ..misses.into_record(name, None)
        };
        if rate >= min_rate {
            record.failures = 0;
            record.first_failing_trial = None;
            record.first_failing_seed = None;
        }
        record.worst_residual = 1.0 - rate;
        record.threshold = Some(1.0 - min_rate);
        record.metric = Some(Metric {
            name: "rate".into(),
            value: rate,
        });
        self.records.push(record);
    }
}
