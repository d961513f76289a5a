//! Report assembly and the two output renderings (text and JSON).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use chiral_core::{
    classify, classify_hhl, involutions, PermGroup, PolytopeRecord, SearchConfig, SearchStats,
};

use crate::error::{CliError, Result};
use crate::groups::GroupSpec;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Blt,
    Hhl,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Blt => "blt",
            Algorithm::Hhl => "hhl",
        }
    }

    pub fn run(
        &self,
        group: &Arc<PermGroup>,
        cfg: &SearchConfig,
    ) -> chiral_core::Result<(Vec<PolytopeRecord>, SearchStats)> {
        match self {
            Algorithm::Blt => classify(group, cfg),
            Algorithm::Hhl => classify_hhl(group, cfg),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "blt" => Ok(Algorithm::Blt),
            "hhl" => Ok(Algorithm::Hhl),
            other => Err(CliError::Parse(format!(
                "unknown algorithm {:?} (expected blt or hhl)",
                other
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecordReport {
    pub rank: usize,
    pub schlafli: Vec<u64>,
    /// Generator words in disjoint-cycle notation, alpha form.
    pub generators: Vec<String>,
    pub chiral: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StatsReport {
    pub classes_seeded: u64,
    pub tuples_tested: u64,
    pub ic_checks: u64,
    pub chirality_checks: u64,
    pub truncated_branches: u64,
    pub degenerate_first_pairs: u64,
    pub wall_time_ms: f64,
}

impl From<&SearchStats> for StatsReport {
    fn from(s: &SearchStats) -> Self {
        StatsReport {
            classes_seeded: s.classes_seeded,
            tuples_tested: s.tuples_tested,
            ic_checks: s.ic_checks,
            chirality_checks: s.chirality_checks,
            truncated_branches: s.truncated_branches,
            degenerate_first_pairs: s.degenerate_first_pairs,
            wall_time_ms: s.wall_time.as_secs_f64() * 1000.0,
        }
    }
}

/// The structured classification result for one group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AtlasReport {
    pub version: String,
    pub group: String,
    pub degree: usize,
    /// Decimal string: group orders may exceed 64 bits.
    pub group_order: String,
    pub involution_count: u64,
    /// Involution count over group order, 4 significant digits.
    pub involution_ratio: String,
    pub algorithm: String,
    pub records: Vec<RecordReport>,
    pub stats: StatsReport,
}

/// `count / order` rendered to 4 significant digits.
pub fn ratio_string(count: u64, order: u128) -> String {
    let x = count as f64 / order as f64;
    if x == 0.0 {
        return "0.000".to_string();
    }
    let digits = (3 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{:.*}", digits, x)
}

/// Runs one classification and assembles the report.
pub fn run_classify(
    spec: &GroupSpec,
    cfg: &SearchConfig,
    algorithm: Algorithm,
) -> Result<AtlasReport> {
    let group = Arc::new(spec.resolve()?);
    let invol = involutions(&group, cfg.enumeration_cap)?.len() as u64;
    let (records, stats) = algorithm.run(&group, cfg)?;
    let record_reports = records
        .iter()
        .map(|r| RecordReport {
            rank: r.rank,
            schlafli: r.schlafli.entries.clone(),
            generators: r.tuple.alphas().iter().map(|a| a.to_string()).collect(),
            chiral: r.chiral,
        })
        .collect();
    Ok(AtlasReport {
        version: REPORT_VERSION.to_string(),
        group: spec.name.clone(),
        degree: group.degree(),
        group_order: group.order().get().to_string(),
        involution_count: invol,
        involution_ratio: ratio_string(invol, group.order().get()),
        algorithm: algorithm.name().to_string(),
        records: record_reports,
        stats: StatsReport::from(&stats),
    })
}

/// Free-text rendering of a report.
pub fn render_text(report: &AtlasReport) -> String {
    let mut out = format!(
        "Group {} of order {} on {} points ({} involutions, ratio {})\n",
        report.group, report.group_order, report.degree, report.involution_count,
        report.involution_ratio
    );
    for r in &report.records {
        let label = if r.chiral { "chiral" } else { "directly regular" };
        let entries: Vec<String> = r.schlafli.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!(
            "New {} of type [{}] for group of order {}\n",
            label,
            entries.join(","),
            report.group_order
        ));
        out.push_str(&format!("  generators: {}\n", r.generators.join(" ")));
    }
    let chiral = report.records.iter().filter(|r| r.chiral).count();
    out.push_str(&format!(
        "{} record(s) ({} chiral) via {} in {:.1} ms ({} tuples tested)\n",
        report.records.len(),
        chiral,
        report.algorithm,
        report.stats.wall_time_ms,
        report.stats.tuples_tested
    ));
    out
}
