//! Verification harness: closed-form family checks, exhaustive and random
//! sweeps of the product lower bounds, reports and the `updom` CLI.

pub mod analysis;
pub mod cli;
pub mod closed_form;
pub mod pool;
pub mod report;
pub mod sweep;

pub use analysis::Options;
pub use report::{Check, Report, ReportSet, Verdict};
