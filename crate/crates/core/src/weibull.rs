//! Weibull lifetime model: the analytic reference for the numerical engine.
//!
//! With shape b and scale s the hazard is (b/s)(t/s)^(b-1) and the
//! cumulative hazard (t/s)^b, so the ageing index has the closed form
//! 1 - 2/(b + 1): independent of the scale and of the cutoff, positive for
//! b > 1, negative for b < 1, zero at the exponential case b = 1.

use alloc::vec::Vec;

use crate::curves::HazardCurve;
use crate::error::{GtiError, Result};
use crate::float;

/// Shapes outside this range overflow (t/scale)^shape long before they mean
/// anything demographically.
const SHAPE_RANGE: (f64, f64) = (1e-6, 1e6);

/// Shape/scale pair of a Weibull lifetime distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeibullParams {
    shape: f64,
    scale: f64,
}

impl WeibullParams {
    pub fn new(shape: f64, scale: f64) -> Result<Self> {
        if shape.is_nan() || shape <= 0.0 {
            return Err(GtiError::NonpositiveShape { shape });
        }
        if shape <= SHAPE_RANGE.0 || shape >= SHAPE_RANGE.1 {
            return Err(GtiError::ShapeOutOfRange { shape });
        }
        if !scale.is_finite() || scale <= 0.0 {
            return Err(GtiError::NonpositiveScale { scale });
        }
        Ok(Self { shape, scale })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Mortality rate at age `t`: (shape/scale) * (t/scale)^(shape-1).
    ///
    /// For shape < 1 the rate diverges as t -> 0, so t = 0 is rejected.
    pub fn hazard_at(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(GtiError::NegativeAge { age: t });
        }
        if t == 0.0 && self.shape < 1.0 {
            return Err(GtiError::SingularOrigin);
        }
        Ok(self.shape / self.scale * float::powf(t / self.scale, self.shape - 1.0))
    }

    /// Cumulative hazard at age `t`: (t/scale)^shape. Zero at t = 0.
    pub fn cumulative_hazard_at(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(GtiError::NegativeAge { age: t });
        }
        Ok(float::powf(t / self.scale, self.shape))
    }

    /// Piecewise-constant approximation on `steps` uniform intervals over
    /// [0, domain_end].
    ///
    /// Each step's rate is the exact cumulative-hazard increment divided by
    /// the step width, so the running integral of the result reproduces the
    /// closed-form H at every knot; all remaining error in downstream index
    /// values comes from the piecewise-linear integral of H, not from the
    /// sampling.
    pub fn discretize(&self, domain_end: f64, steps: usize) -> Result<HazardCurve> {
        if !domain_end.is_finite() || domain_end <= 0.0 {
            return Err(GtiError::NonpositiveDomain { value: domain_end });
        }
        if steps == 0 {
            return Err(GtiError::ZeroSteps);
        }
        let width = domain_end / steps as f64;
        let mut knots = Vec::with_capacity(steps);
        let mut rates = Vec::with_capacity(steps);
        let mut h_lo = 0.0;
        for i in 0..steps {
            let lo = i as f64 * width;
            let hi = if i + 1 == steps {
                domain_end
            } else {
                (i + 1) as f64 * width
            };
            let h_hi = self.cumulative_hazard_at(hi)?;
            knots.push(lo);
            rates.push((h_hi - h_lo) / (hi - lo));
            h_lo = h_hi;
        }
        HazardCurve::new(knots, rates, domain_end)
    }
}

/// Closed-form ageing index of a Weibull lifetime: 1 - 2/(shape + 1).
///
/// Scale- and cutoff-free; antisymmetric under shape -> 1/shape.
pub fn closed_form_gti(shape: f64) -> Result<f64> {
    if !shape.is_finite() || shape <= 0.0 {
        return Err(GtiError::NonpositiveShape { shape });
    }
    Ok(1.0 - 2.0 / (shape + 1.0))
}
