//! The two-algorithm comparison harness.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use chiral_core::{involutions, SearchConfig};

use crate::error::Result;
use crate::groups::GroupSpec;
use crate::report::{ratio_string, Algorithm, REPORT_VERSION};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchRow {
    pub group: String,
    pub group_order: String,
    pub involution_ratio: String,
    pub blt_ms: Option<f64>,
    pub hhl_ms: Option<f64>,
    pub records: Option<usize>,
    /// "ok", "FAILED" (record-count mismatch) or an error message.
    pub status: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchReport {
    pub version: String,
    pub rows: Vec<BenchRow>,
}

/// Runs both algorithms on each group. `repetitions` takes the minimum
/// wall time over that many runs per algorithm to tame scheduler noise.
/// Per-group failures become rows; they never abort the remaining groups.
pub fn run_bench(specs: &[GroupSpec], cfg: &SearchConfig, repetitions: u32) -> Result<BenchReport> {
    let reps = repetitions.max(1);
    let mut rows = Vec::with_capacity(specs.len());
    for spec in specs {
        rows.push(bench_one(spec, cfg, reps));
    }
    Ok(BenchReport {
        version: REPORT_VERSION.to_string(),
        rows,
    })
}

fn bench_one(spec: &GroupSpec, cfg: &SearchConfig, reps: u32) -> BenchRow {
    let mut row = BenchRow {
        group: spec.name.clone(),
        group_order: String::new(),
        involution_ratio: String::new(),
        blt_ms: None,
        hhl_ms: None,
        records: None,
        status: "ok".to_string(),
    };
    let group = match spec.resolve() {
        Ok(g) => Arc::new(g),
        Err(e) => {
            row.status = e.to_string();
            return row;
        }
    };
    row.group_order = group.order().get().to_string();
    if let Ok(inv) = involutions(&group, cfg.enumeration_cap) {
        row.involution_ratio = ratio_string(inv.len() as u64, group.order().get());
    }

    let mut counts = [0usize; 2];
    for (slot, algorithm) in [Algorithm::Blt, Algorithm::Hhl].iter().enumerate() {
        let mut best: Option<f64> = None;
        for _ in 0..reps {
            match algorithm.run(&group, cfg) {
                Ok((records, stats)) => {
                    counts[slot] = records.len();
                    let ms = stats.wall_time.as_secs_f64() * 1000.0;
                    best = Some(best.map_or(ms, |b: f64| b.min(ms)));
                }
                Err(e) => {
                    row.status = e.to_string();
                    return row;
                }
            }
        }
        match slot {
            0 => row.blt_ms = best,
            _ => row.hhl_ms = best,
        }
    }
    if counts[0] != counts[1] {
        row.status = "FAILED".to_string();
        return row;
    }
    row.records = Some(counts[0]);
    row
}

/// Aligned text table.
pub fn render_table(report: &BenchReport) -> String {
    let headers = ["group", "order", "i2 ratio", "blt", "hhl", "records", "status"];
    let mut cells: Vec<[String; 7]> = Vec::with_capacity(report.rows.len());
    for r in &report.rows {
        let ms = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{:.1} ms", x));
        cells.push([
            r.group.clone(),
            r.group_order.clone(),
            r.involution_ratio.clone(),
            ms(r.blt_ms),
            ms(r.hhl_ms),
            r.records.map_or("-".to_string(), |n| n.to_string()),
            r.status.clone(),
        ]);
    }
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cols: &[String]| -> String {
        cols.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{:<width$}", c, width = w))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&fmt_row(
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
    ));
    out.push('\n');
    for row in &cells {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_group_bench_has_one_ok_row() {
        let specs = vec![GroupSpec::parse("dih:5").unwrap()];
        let report = run_bench(&specs, &SearchConfig::default(), 1).unwrap();
        assert_eq!(report.rows.len(), 1);
        let row = &report.rows[0];
        assert_eq!(row.status, "ok");
        assert_eq!(row.group_order, "10");
        assert!(row.blt_ms.is_some() && row.hhl_ms.is_some());
        let table = render_table(&report);
        assert!(table.contains("dih:5"));
    }

    #[test]
    fn unparsable_group_becomes_a_row_not_an_abort() {
        let specs = vec![
            GroupSpec::parse("/no/such/group/file").unwrap(),
            GroupSpec::parse("cyc:5").unwrap(),
        ];
        let report = run_bench(&specs, &SearchConfig::default(), 1).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_ne!(report.rows[0].status, "ok");
        assert_eq!(report.rows[1].status, "ok");
    }
}
