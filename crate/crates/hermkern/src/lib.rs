//! Command-line front end for `hermkern-core`: report formats, seeded sampling
//! and the numeric verification suites.

pub mod cli;
pub mod commands;
pub mod report;
pub mod sample;
pub mod suites;

pub use report::{CheckRecord, Format, Report, Status};
pub use suites::{Ctx, Suite};
