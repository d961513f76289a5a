//! Atlas front end: group ingestion, classification reports and the
//! two-algorithm benchmark harness.

pub mod bench;
pub mod error;
pub mod groups;
pub mod report;

pub use bench::{render_table, run_bench, BenchReport, BenchRow};
pub use error::{CliError, Result};
pub use groups::{parse_group_file, serialize_group, GroupSpec};
pub use report::{render_text, run_classify, Algorithm, AtlasReport, RecordReport, StatsReport};
