//! Per-year report structure and its JSON/CSV serializations.
//!
//! JSON carries full float precision (shortest round-trip form); the
//! human-readable tables printed by the binary round to 6 significant
//! digits via [`fmt_sig`].

use serde::Serialize;

use gti_core::GtiResult;

/// One cutoff row of a report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    #[serde(rename = "T")]
    pub cutoff: f64,
    pub gti: f64,
    pub survival: f64,
    pub h_eff: f64,
    pub class: String,
}

impl From<&GtiResult> for ReportRow {
    fn from(r: &GtiResult) -> Self {
        ReportRow {
            cutoff: r.cutoff,
            gti: r.value,
            survival: r.survival,
            h_eff: r.effective_hazard,
            class: r.classification.to_string(),
        }
    }
}

/// Index report for one (file, year, sex) selection.
#[derive(Debug, Clone, Serialize)]
pub struct ComputeReport {
    pub file: String,
    pub year: i32,
    pub sex: String,
    pub hazard_source: String,
    /// Sorted by cutoff ascending.
    pub rows: Vec<ReportRow>,
    pub median_age_at_death: f64,
}

impl ComputeReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Header plus one line per row, full precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("T,gti,survival,h_eff,class\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.cutoff, row.gti, row.survival, row.h_eff, row.class
            ));
        }
        out
    }
}

/// Fixed significant-digit rendering for table output.
///
/// Plain decimal notation in the everyday range, switching to scientific
/// once the leading zeros (or trailing digits) would swamp the column.
pub fn fmt_sig(value: f64, digits: u32) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    if magnitude < -5 || magnitude >= digits as i32 {
        let decimals = digits.saturating_sub(1) as usize;
        return format!("{value:.decimals$e}");
    }
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}
