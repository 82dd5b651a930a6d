use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use wreath_algebra::wreath::{StageTimings, StructureReport};

use crate::format::MatrixRows;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dims {
    pub t: usize,
    pub u: usize,
    pub f_nonzero: usize,
    pub center: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Output of `wreath verify --out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub params: Vec<usize>,
    pub base_point: usize,
    pub dims: Dims,
    pub checks: Vec<CheckEntry>,
    /// Stage name to milliseconds. Empty under `--no-timings`.
    pub timings_ms: BTreeMap<String, f64>,
}

impl ReportDocument {
    pub fn new(report: &StructureReport, timings: Option<&StageTimings>) -> Self {
        let d = report.dims;
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            params: report.params.factors().to_vec(),
            base_point: report.base_point,
            dims: Dims { t: d.t, u: d.u, f_nonzero: d.f_nonzero, center: d.center },
            checks: report
                .checks
                .iter()
                .map(|c| CheckEntry { name: c.name.to_string(), passed: c.passed, witness: c.witness.clone() })
                .collect(),
            timings_ms: timings
                .into_iter()
                .flatten()
                .map(|(name, t)| (name.to_string(), (t.as_secs_f64() * 1e6).round() / 1e3))
                .collect(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub label: String,
    pub indices: Vec<usize>,
    pub matrix: MatrixRows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLayout {
    /// `order[p]` is the original point at position `p`.
    pub order: Vec<usize>,
    pub sizes: Vec<usize>,
    pub offsets: Vec<usize>,
    pub checks: Vec<CheckEntry>,
}

/// Output of `wreath dump`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpDocument {
    pub what: String,
    pub params: Vec<usize>,
    pub base_point: usize,
    pub matrices: Vec<LabeledMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_form: Option<BlockLayout>,
}
