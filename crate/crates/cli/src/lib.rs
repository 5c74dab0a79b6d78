//! Life-table ingestion and reporting around [`gti_core`].
//!
//! [`hmd`] parses the Human Mortality Database period life-table (1x1) and
//! death-rate (Mx 1x1) text formats. [`lifetable`] turns a parsed table
//! into the hazard and survival curves the index engine consumes, and
//! [`report`] serializes the results. The `gti` binary wires these into
//! `weibull`, `compute`, `compare`, and `plot` subcommands.

pub mod hmd;
pub mod lifetable;
pub mod report;

pub use hmd::{parse_hmd_life_table, parse_hmd_mx, HmdError, LifeTable, MortalityRateSeries, Sex};
pub use lifetable::{HazardSource, TableError, TableSurvival};
pub use report::{ComputeReport, ReportRow};
