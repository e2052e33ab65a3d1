//! Seeded property suites over the `frame-rigidity` library and the
//! reports they produce.

pub mod config;
pub mod harness;
pub mod report;
pub mod rng;
pub mod sample;
pub mod suites;

pub use config::{ConfigError, Suite, SuiteConfig};
pub use report::{PropertyRecord, VerificationReport};
pub use suites::{falsify, property_names, run_properties, run_suite};
