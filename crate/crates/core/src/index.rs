//! The Gini-type ageing/rejuvenating index.
//!
//! For a cumulative hazard H and a cutoff age T, the index is
//!
//! ```text
//! index(T) = 1 - 2 * integral(H, 0..T) / (T * H(T))
//! ```
//!
//! The denominator is twice the area under the chord from (0, 0) to
//! (T, H(T)), the cumulative hazard of the exponential distribution with
//! the same survival at T. Constant mortality gives exactly 0; a rate that
//! increases with age gives a positive value (H convex), a decreasing rate
//! a negative one (H concave). The value always lies strictly inside
//! (-1, 1).
//!
//! Both the numerator and denominator are computed in closed form for the
//! piecewise-linear H produced by [`HazardCurve::cumulative`], so the
//! index carries no quadrature error of its own.
//!
//! [`HazardCurve::cumulative`]: crate::curves::HazardCurve::cumulative

use core::fmt;

use crate::curves::CumulativeHazardCurve;
use crate::error::{GtiError, Result};
use crate::float;

/// Band around zero treated as "not distinguishable from constant
/// mortality". Wide enough to swallow discretization noise on real
/// life-table grids, far below any genuine ageing signal.
pub const DEFAULT_CLASSIFICATION_EPSILON: f64 = 1e-3;

/// Whether mortality rises, falls, or stays flat over the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Mortality rate increases with age (index above epsilon).
    Ageing,
    /// Mortality rate decreases with age (index below -epsilon).
    Rejuvenating,
    /// Within epsilon of the exponential boundary.
    NonAgeing,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Ageing => f.write_str("Ageing"),
            Classification::Rejuvenating => f.write_str("Rejuvenating"),
            Classification::NonAgeing => f.write_str("NonAgeing"),
        }
    }
}

/// Index evaluation at one cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GtiResult {
    /// Cutoff age T in years.
    pub cutoff: f64,
    /// The index value, strictly inside (-1, 1).
    pub value: f64,
    /// S(T) = exp(-H(T)).
    pub survival: f64,
    /// Rate of the exponential distribution matching S(T): H(T) / T.
    pub effective_hazard: f64,
    /// Sign classification of `value` at the epsilon used for evaluation.
    pub classification: Classification,
}

/// Sign of the index with a dead band of `epsilon` around zero.
pub fn classify(value: f64, epsilon: f64) -> Classification {
    debug_assert!(epsilon >= 0.0);
    if value > epsilon {
        Classification::Ageing
    } else if value < -epsilon {
        Classification::Rejuvenating
    } else {
        Classification::NonAgeing
    }
}

/// Rate of the exponential distribution whose survival matches `survival`
/// at age `cutoff`: -ln(S(T)) / T.
pub fn effective_hazard(survival: f64, cutoff: f64) -> Result<f64> {
    if cutoff.is_nan() || cutoff <= 0.0 {
        return Err(GtiError::NonpositiveCutoff { cutoff });
    }
    if survival.is_nan() || survival > 1.0 {
        return Err(GtiError::SurvivalOutOfRange {
            index: 0,
            value: survival,
        });
    }
    if survival <= 0.0 {
        return Err(GtiError::ZeroSurvival);
    }
    Ok(-float::ln(survival) / cutoff)
}

/// Evaluates the index at `cutoff` with the default classification epsilon.
pub fn gti(curve: &CumulativeHazardCurve, cutoff: f64) -> Result<GtiResult> {
    gti_with_epsilon(curve, cutoff, DEFAULT_CLASSIFICATION_EPSILON)
}

/// Evaluates the index at `cutoff`, classifying with the given epsilon.
///
/// The cutoff may fall between knots: H(T) is interpolated linearly and the
/// partial segment of the integral is the exact trapezoid of the
/// interpolated values, consistent with the piecewise-linear model.
pub fn gti_with_epsilon(
    curve: &CumulativeHazardCurve,
    cutoff: f64,
    epsilon: f64,
) -> Result<GtiResult> {
    if cutoff.is_nan() || cutoff <= 0.0 {
        return Err(GtiError::NonpositiveCutoff { cutoff });
    }
    let h_at_cutoff = curve.value_at(cutoff)?;
    if h_at_cutoff <= 0.0 {
        return Err(GtiError::DegenerateInterval { cutoff });
    }
    let integral = curve.integral_to(cutoff)?;
    let value = 1.0 - 2.0 * integral / (cutoff * h_at_cutoff);
    // h_eff * T == H(T) by construction, so the defining relation
    // h_eff = -ln(S)/T and the index denominator agree exactly.
    let effective_hazard = h_at_cutoff / cutoff;
    let survival = float::exp(-h_at_cutoff);
    Ok(GtiResult {
        cutoff,
        value,
        survival,
        effective_hazard,
        classification: classify(value, epsilon),
    })
}
