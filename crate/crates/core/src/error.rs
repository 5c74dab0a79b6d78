//! Error type shared by curve construction and index evaluation.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, GtiError>;

/// Everything that can go wrong building a curve or evaluating the index.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GtiError {
    /// A curve was given no intervals at all.
    #[error("curve must have at least one interval")]
    EmptyCurve,
    /// Age grids start at 0 by convention.
    #[error("age grid must start at 0, got {first}")]
    GridNotFromZero { first: f64 },
    /// Knots must be finite and strictly increasing.
    #[error("age grid must be finite and strictly increasing (violated at index {index})")]
    GridNotIncreasing { index: usize },
    /// One rate per interval.
    #[error("expected one rate per interval ({intervals}), got {rates}")]
    RateCountMismatch { intervals: usize, rates: usize },
    /// Mortality rates are nonnegative and finite.
    #[error("rate at index {index} must be finite and >= 0, got {value}")]
    InvalidRate { index: usize, value: f64 },
    /// The hazard domain must extend past the last interval start.
    #[error("domain end {domain_end} must lie beyond the last knot {last_knot}")]
    DomainEndBeforeLastKnot { domain_end: f64, last_knot: f64 },
    /// Cumulative hazard starts at 0.
    #[error("cumulative hazard must start at 0, got {first}")]
    HazardNotFromZero { first: f64 },
    /// Cumulative hazard never decreases.
    #[error("cumulative hazard must be finite and nondecreasing (violated at index {index})")]
    HazardDecreasing { index: usize },
    /// Survival starts at 1.
    #[error("survival must start at 1, got {first}")]
    SurvivalNotFromOne { first: f64 },
    /// Survival values live in [0, 1].
    #[error("survival value at index {index} must lie in [0, 1], got {value}")]
    SurvivalOutOfRange { index: usize, value: f64 },
    /// Survival never increases.
    #[error("survival must be nonincreasing (violated at index {index})")]
    SurvivalIncreasing { index: usize },

    /// Survival of zero makes the cumulative hazard infinite.
    #[error("survival is zero: cumulative hazard is infinite; truncate the domain first")]
    ZeroSurvival,
    /// The index is only defined on a positive window.
    #[error("cutoff must be positive, got {cutoff}")]
    NonpositiveCutoff { cutoff: f64 },
    /// Evaluation point outside the curve.
    #[error("cutoff {cutoff} lies beyond the curve domain end {domain_end}")]
    CutoffOutOfDomain { cutoff: f64, domain_end: f64 },
    /// H(T) = 0: nobody dies before T and the index is 0/0.
    #[error("cumulative hazard is zero at cutoff {cutoff}: index undefined")]
    DegenerateInterval { cutoff: f64 },
    /// Curves are defined for nonnegative ages only.
    #[error("age must be >= 0, got {age}")]
    NegativeAge { age: f64 },

    /// Weibull shape must be positive.
    #[error("shape must be positive, got {shape}")]
    NonpositiveShape { shape: f64 },
    /// Guardrail against overflow in (t/scale)^shape.
    #[error("shape {shape} outside the supported range (1e-6, 1e6)")]
    ShapeOutOfRange { shape: f64 },
    /// Weibull scale must be positive.
    #[error("scale must be positive, got {scale}")]
    NonpositiveScale { scale: f64 },
    /// The Weibull hazard diverges at the origin when shape < 1.
    #[error("hazard diverges at t = 0 for shape < 1")]
    SingularOrigin,
    /// Discretization needs a positive domain.
    #[error("domain end must be positive and finite, got {value}")]
    NonpositiveDomain { value: f64 },
    /// Discretization needs at least one step.
    #[error("step count must be at least 1")]
    ZeroSteps,
}
