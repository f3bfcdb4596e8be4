//! Declarative case files, a bundled regression suite, and the report
//! formats used by the `kstab` binary.

pub mod bundled;
pub mod case;
pub mod error;
pub mod report;
pub mod runner;
pub mod suite;

pub use case::{CaseFile, Cited, Kind, LoadedCase, Value, SCHEMA_VERSION};
pub use error::CliError;
pub use report::{emit_report, Format, Row, StabilityReport, Status, Summary};
pub use runner::RunContext;
pub use suite::{run_case, run_suite, Source};
