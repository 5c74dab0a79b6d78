//! Hazard and survival curves derived from a parsed life table, and the
//! per-cutoff index pipeline built on them.
//!
//! The open-ended terminal row is excluded from the hazard: the rate there
//! covers an unbounded interval, so the curve (and every cutoff) stops at
//! its start age. Within each closed one-year interval the rate is taken
//! as constant.

use clap::ValueEnum;
use thiserror::Error;

use gti_core::{gti_with_epsilon, GtiError, GtiResult, HazardCurve, SurvivalCurve};

use crate::hmd::LifeTable;

/// Where the per-year rate comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum HazardSource {
    /// Use the central death rate mx as-is.
    #[default]
    #[value(name = "mx")]
    MxDirect,
    /// Derive the rate from the death probability: -ln(1 - qx).
    #[value(name = "qx")]
    QxImplied,
}

impl HazardSource {
    pub fn label(self) -> &'static str {
        match self {
            HazardSource::MxDirect => "mx",
            HazardSource::QxImplied => "qx",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    /// -ln(1 - qx) is infinite; only the open-ended row may carry qx = 1.
    #[error("qx = 1 at non-terminal age {age}: implied hazard is infinite")]
    UnitProbability { age: u32 },
    #[error("table radix l(0) is zero")]
    ZeroRadix,
    #[error("survivors never fall to half the radix")]
    MedianNotReached,
    #[error(transparent)]
    Curve(#[from] GtiError),
}

/// Survival curve from a table, with a note about dropped zero-lx tail ages.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSurvival {
    pub curve: SurvivalCurve,
    /// First age whose trailing zero-lx row was dropped, if any.
    pub truncated_from: Option<u32>,
}

impl LifeTable {
    /// Piecewise-constant hazard over the closed rows; the open-ended row
    /// is excluded, so the domain ends at its start age.
    pub fn hazard_curve(&self, source: HazardSource) -> Result<HazardCurve, TableError> {
        let mut rates = Vec::with_capacity(self.rows.len().saturating_sub(1));
        for row in self.rows.iter().filter(|r| !r.is_open_ended) {
            let rate = match source {
                HazardSource::MxDirect => row.mx,
                HazardSource::QxImplied => {
                    if row.qx >= 1.0 {
                        return Err(TableError::UnitProbability { age: row.age_start });
                    }
                    -(-row.qx).ln_1p()
                }
            };
            rates.push(rate);
        }
        Ok(HazardCurve::from_annual_rates(rates)?)
    }

    /// Empirical survival lx / l(0) at integer ages, through the start of
    /// the open-ended row. Trailing zero-lx ages are dropped; the first
    /// dropped age is reported in the result.
    pub fn survival_curve(&self) -> Result<TableSurvival, TableError> {
        let radix = self.radix();
        if radix <= 0.0 {
            return Err(TableError::ZeroRadix);
        }
        let mut kept = self.rows.len();
        while kept > 0 && self.rows[kept - 1].lx == 0.0 {
            kept -= 1;
        }
        let truncated_from = (kept < self.rows.len()).then(|| self.rows[kept].age_start);
        let knots = (0..kept).map(|i| self.rows[i].age_start as f64).collect();
        let values = (0..kept).map(|i| self.rows[i].lx / radix).collect();
        Ok(TableSurvival {
            curve: SurvivalCurve::new(knots, values)?,
            truncated_from,
        })
    }

    /// Smallest age at which survivors fall to half the radix, with linear
    /// interpolation between integer ages.
    pub fn median_age_at_death(&self) -> Result<f64, TableError> {
        let radix = self.radix();
        if radix <= 0.0 {
            return Err(TableError::ZeroRadix);
        }
        let half = radix / 2.0;
        for i in 0..self.rows.len() {
            let row = &self.rows[i];
            if row.lx <= half {
                if row.lx == half || i == 0 {
                    return Ok(row.age_start as f64);
                }
                let above = self.rows[i - 1].lx;
                let fraction = (above - half) / (above - row.lx);
                return Ok(self.rows[i - 1].age_start as f64 + fraction);
            }
        }
        Err(TableError::MedianNotReached)
    }

    /// Index results at each cutoff: hazard -> cumulative hazard -> index,
    /// with survival reported as exp(-H(T)).
    pub fn gti_at(
        &self,
        cutoffs: &[f64],
        source: HazardSource,
        epsilon: f64,
    ) -> Result<Vec<GtiResult>, TableError> {
        let cumulative = self.hazard_curve(source)?.cumulative();
        cutoffs
            .iter()
            .map(|&cutoff| Ok(gti_with_epsilon(&cumulative, cutoff, epsilon)?))
            .collect()
    }
}
