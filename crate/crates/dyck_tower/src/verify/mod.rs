//! Batch verification: the compositional identity per configuration, and
//! named invariant suites.

mod cache;
mod shuffle;
mod suites;

pub use cache::{ColoringCache, ColoringTable, CACHE_ENV};
pub use shuffle::{verify_shuffle, CaseReport, CaseStatus, JobConfig, Mode, ShuffleReport};
pub use suites::{
    braid_report, coloring_assembly_report, order_independence_report, relations_report, run_suite, sweep_paths_report,
    train_rewrite_report, Failure, Suite, SuiteReport,
};
