//! Executable checks for the Fermat ideal identities, a dual-prime suite
//! runner and report rendering.

pub mod checks;
pub mod report;
pub mod runner;

pub use checks::{CheckSpec, Outcome, REGISTRY};
pub use report::{CheckResult, Params, Report, Status, Summary};
pub use runner::{run_check, run_suite, PrimeChoice, Selection, SuiteConfig};
