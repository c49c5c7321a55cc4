//! Claim runner behind the `hoi` binary.

pub mod checklist;
pub mod claims;
pub mod report;
pub mod whitelist;

pub use claims::{run_suite, RunOptions, Suite};
pub use report::{ClaimReport, Provenance, Status, Value};
pub use whitelist::Whitelist;
