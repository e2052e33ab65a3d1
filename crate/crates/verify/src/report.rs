use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::SuiteConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// Non-finite residuals are written as `null` and read back as `+∞`.
mod finite_or_null {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub name: String,
    pub trials: u64,
    pub failures: u64,
    #[serde(with = "finite_or_null")]
    pub worst_residual: f64,
    /// `None` for properties that are checked exactly rather than against a
    /// residual bound.
    pub threshold: Option<f64>,
    pub first_failing_trial: Option<u64>,
    pub first_failing_seed: Option<u64>,
    pub first_error: Option<String>,
    pub metric: Option<Metric>,
}

impl PropertyRecord {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub properties: usize,
    pub failed_properties: usize,
    pub total_failures: u64,
    pub passed: bool,
    pub wall_time_s: f64,
    pub library_version: String,
}

/// Serialized with keys in the order `schema, suite, config, properties,
/// summary`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub config: SuiteConfig,
    pub properties: Vec<PropertyRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(config: SuiteConfig, properties: Vec<PropertyRecord>, wall_time_s: f64) -> Self {
        let failed_properties = properties.iter().filter(|p| !p.passed()).count();
        let summary = Summary {
            properties: properties.len(),
            failed_properties,
            total_failures: properties.iter().map(|p| p.failures).sum(),
            passed: failed_properties == 0,
            wall_time_s,
            library_version: env!("CARGO_PKG_VERSION").to_string(),
        };
        Self {
            schema: SCHEMA_VERSION,
            suite: config.suite.name().to_string(),
            config,
            properties,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn property(&self, name: &str) -> Option<&PropertyRecord> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report JSON")
    }

    /// The report bytes with the wall time zeroed; equal for runs with equal
    /// configs.
    pub fn deterministic_bytes(&self) -> Vec<u8> {
        let mut copy = self.clone();
        copy.summary.wall_time_s = 0.0;
        serde_json::to_vec(&copy).expect("report JSON")
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}
