use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use frame_rigidity::{Field, DEFAULT_TOL};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MIN_AMBIENT: usize = 2;
pub const MAX_AMBIENT: usize = 8;
pub const DEFAULT_TRIALS: u64 = 1000;
pub const TOL_ENV: &str = "FRAME_RIGIDITY_TOL";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown suite `{0}` (try --list-suites)")]
    UnknownSuite(String),
    #[error("suite {suite} needs ambient dimension in {min}..={max}, got {ambient}")]
    AmbientOutOfRange {
        suite: Suite,
        ambient: usize,
        min: usize,
        max: usize,
    },
    #[error("trials must be positive")]
    NoTrials,
    #[error("tolerance must be a positive number below 1e-2, got {0}")]
    BadTolerance(String),
    #[error("unknown field `{0}` (expected real or complex)")]
    UnknownField(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Clr,
    ClrBis,
    PfrPerp,
    Pfr,
    EversionOrder,
    Obot,
    Refinement,
    Partitions,
    Reconstruction,
    Falsify,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Clr,
        Suite::ClrBis,
        Suite::PfrPerp,
        Suite::Pfr,
        Suite::EversionOrder,
        Suite::Obot,
        Suite::Refinement,
        Suite::Partitions,
        Suite::Reconstruction,
        Suite::Falsify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Clr => "clr",
            Suite::ClrBis => "clr-bis",
            Suite::PfrPerp => "pfr-perp",
            Suite::Pfr => "pfr",
            Suite::EversionOrder => "eversion-order",
            Suite::Obot => "obot",
            Suite::Refinement => "refinement",
            Suite::Partitions => "partitions",
            Suite::Reconstruction => "reconstruction",
            Suite::Falsify => "falsify",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Clr => "induced maps respect dimensions, joins, meets and inclusions",
            Suite::ClrBis => "induced maps keep orthogonal line tuples independent",
            Suite::PfrPerp => {
                "induced maps preserve partition linkage and commute with permutations"
            }
            Suite::Pfr => {
                "eversion is an involution fixing orthogonal frames and preserving linkage"
            }
            Suite::EversionOrder => "eversion intertwines a map with its polar conjugate",
            Suite::Obot => "commeasurability: both characterizations, lattice laws, frame form",
            Suite::Refinement => "refinement maps are functorial and permutation-equivariant",
            Suite::Partitions => "conjugation, jump sequences, dominance and arrow composition",
            Suite::Reconstruction => "line maps determine their semilinear map up to scale",
            Suite::Falsify => "nonlinear line maps break linkage and fail reconstruction",
        }
    }

    pub fn min_ambient(self) -> usize {
        match self {
            Suite::Clr | Suite::PfrPerp | Suite::Pfr | Suite::Reconstruction | Suite::Falsify => 3,
            _ => MIN_AMBIENT,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub ambient: usize,
    pub field: Field,
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
    pub report_path: Option<PathBuf>,
}

impl SuiteConfig {
    /// Defaults: complex field, 1000 trials, seed 0, tolerance from
    /// `FRAME_RIGIDITY_TOL` or the library default.
    pub fn new(suite: Suite, ambient: usize) -> Result<Self, ConfigError> {
        let cfg = Self {
            suite,
            ambient,
            field: Field::Complex,
            trials: DEFAULT_TRIALS,
            seed: 0,
            tol: tol_from_env()?.unwrap_or(DEFAULT_TOL),
            report_path: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn field(mut self, field: Field) -> Self {
        self.field = field;
        self
    }

    pub fn trials(mut self, trials: u64) -> Self {
        self.trials = trials;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let min = self.suite.min_ambient();
        if !(min..=MAX_AMBIENT).contains(&self.ambient) {
            return Err(ConfigError::AmbientOutOfRange {
                suite: self.suite,
                ambient: self.ambient,
                min,
                max: MAX_AMBIENT,
            });
        }
        if self.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        check_tol(self.tol)?;
        Ok(())
    }
}

fn check_tol(tol: f64) -> Result<f64, ConfigError> {
    if tol.is_finite() && tol > 0.0 && tol < 1e-2 {
        Ok(tol)
    } else {
        Err(ConfigError::BadTolerance(tol.to_string()))
    }
}

pub fn parse_tol(s: &str) -> Result<f64, ConfigError> {
    let tol: f64 = s
        .trim()
        .parse()
        .map_err(|_| ConfigError::BadTolerance(s.to_string()))?;
    check_tol(tol)
}

pub fn parse_field(s: &str) -> Result<Field, ConfigError> {
    s.parse()
        .map_err(|_| ConfigError::UnknownField(s.to_string()))
}

/// Tolerance from `FRAME_RIGIDITY_TOL`, if set.
pub fn tol_from_env() -> Result<Option<f64>, ConfigError> {
    match std::env::var(TOL_ENV) {
        Ok(s) => parse_tol(&s).map(Some),
        Err(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert_eq!(
            "nope".parse::<Suite>().unwrap_err(),
            ConfigError::UnknownSuite("nope".into())
        );
    }

    #[test]
    fn ambient_ranges() {
        assert!(matches!(
            SuiteConfig::new(Suite::Clr, 2),
            Err(ConfigError::AmbientOutOfRange { min: 3, .. })
        ));
        assert!(SuiteConfig::new(Suite::Obot, 2).is_ok());
        assert!(SuiteConfig::new(Suite::Obot, 9).is_err());
        assert!(SuiteConfig::new(Suite::Falsify, 3).is_ok());
    }

    #[test]
    fn tolerance_parsing() {
        assert_eq!(parse_tol("1e-8").unwrap(), 1e-8);
        assert!(parse_tol("0").is_err());
        assert!(parse_tol("-1e-9").is_err());
        assert!(parse_tol("abc").is_err());
        assert!(parse_tol("0.5").is_err());
        let cfg = SuiteConfig::new(Suite::Obot, 3).unwrap().trials(0);
        assert_eq!(cfg.validate(), Err(ConfigError::NoTrials));
    }
}
