//! Hazard, cumulative-hazard, and survival curves on an age grid.
//!
//! The data model is a piecewise-constant mortality rate on half-open age
//! intervals, which is how life tables report mortality. Its running
//! integral H is piecewise linear, and S(t) = exp(-H(t)). Every conversion
//! here is exact for that model; there is no quadrature error beyond the
//! discretization itself.

use alloc::vec::Vec;

use crate::error::{GtiError, Result};
use crate::float;

fn validate_grid(knots: &[f64]) -> Result<()> {
    if knots.is_empty() {
        return Err(GtiError::EmptyCurve);
    }
    if knots[0] != 0.0 {
        return Err(GtiError::GridNotFromZero { first: knots[0] });
    }
    for i in 1..knots.len() {
        if !knots[i].is_finite() || knots[i] <= knots[i - 1] {
            return Err(GtiError::GridNotIncreasing { index: i });
        }
    }
    Ok(())
}

/// Piecewise-constant mortality rate on an age grid.
///
/// `rates[i]` applies on `[knots[i], knots[i+1])`; the final interval runs
/// from the last knot to `domain_end`.
#[derive(Debug, Clone, PartialEq)]
pub struct HazardCurve {
    knots: Vec<f64>,
    rates: Vec<f64>,
    domain_end: f64,
}

impl HazardCurve {
    pub fn new(knots: Vec<f64>, rates: Vec<f64>, domain_end: f64) -> Result<Self> {
        validate_grid(&knots)?;
        if rates.len() != knots.len() {
            return Err(GtiError::RateCountMismatch {
                intervals: knots.len(),
                rates: rates.len(),
            });
        }
        for (index, &value) in rates.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(GtiError::InvalidRate { index, value });
            }
        }
        let last = *knots.last().expect("validated nonempty");
        if !domain_end.is_finite() || domain_end <= last {
            return Err(GtiError::DomainEndBeforeLastKnot {
                domain_end,
                last_knot: last,
            });
        }
        Ok(Self {
            knots,
            rates,
            domain_end,
        })
    }

    /// One rate per one-year age interval starting at age 0.
    pub fn from_annual_rates(rates: Vec<f64>) -> Result<Self> {
        let knots = (0..rates.len()).map(|age| age as f64).collect();
        let domain_end = rates.len() as f64;
        Self::new(knots, rates, domain_end)
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn rates(&self) -> &[f64] {
        &self.rates
    }

    pub fn domain_end(&self) -> f64 {
        self.domain_end
    }

    /// Running integral of the rate: the cumulative hazard, with H(0) = 0.
    ///
    /// Exact for the piecewise-constant model. The output grid is the input
    /// knots plus the domain end, so H carries a value at every boundary.
    pub fn cumulative(&self) -> CumulativeHazardCurve {
        let mut knots = Vec::with_capacity(self.knots.len() + 1);
        let mut values = Vec::with_capacity(self.knots.len() + 1);
        knots.extend_from_slice(&self.knots);
        knots.push(self.domain_end);
        let mut acc = 0.0;
        values.push(acc);
        for i in 0..self.rates.len() {
            acc += self.rates[i] * (knots[i + 1] - knots[i]);
            values.push(acc);
        }
        CumulativeHazardCurve { knots, values }
    }
}

/// Piecewise-linear cumulative rate of mortality H, with H(0) = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeHazardCurve {
    knots: Vec<f64>,
    values: Vec<f64>,
}

impl CumulativeHazardCurve {
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        validate_grid(&knots)?;
        if knots.len() < 2 {
            return Err(GtiError::EmptyCurve);
        }
        if values.len() != knots.len() {
            return Err(GtiError::RateCountMismatch {
                intervals: knots.len(),
                rates: values.len(),
            });
        }
        if values[0] != 0.0 {
            return Err(GtiError::HazardNotFromZero { first: values[0] });
        }
        for i in 1..values.len() {
            if !values[i].is_finite() || values[i] < values[i - 1] {
                return Err(GtiError::HazardDecreasing { index: i });
            }
        }
        Ok(Self { knots, values })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// End of the age domain (the last knot).
    pub fn domain_end(&self) -> f64 {
        *self.knots.last().expect("curve is nonempty")
    }

    fn check_in_domain(&self, age: f64) -> Result<()> {
        if age.is_nan() || age < 0.0 {
            return Err(GtiError::NegativeAge { age });
        }
        let end = self.domain_end();
        if age > end {
            return Err(GtiError::CutoffOutOfDomain {
                cutoff: age,
                domain_end: end,
            });
        }
        Ok(())
    }

    /// H(age), linearly interpolated between knots.
    pub fn value_at(&self, age: f64) -> Result<f64> {
        self.check_in_domain(age)?;
        // first knot strictly greater than `age`
        let idx = self.knots.partition_point(|&k| k <= age);
        if idx == self.knots.len() {
            return Ok(*self.values.last().expect("curve is nonempty"));
        }
        let (k0, k1) = (self.knots[idx - 1], self.knots[idx]);
        let (v0, v1) = (self.values[idx - 1], self.values[idx]);
        let w = (age - k0) / (k1 - k0);
        Ok(v0 + w * (v1 - v0))
    }

    /// Exact integral of the piecewise-linear H over [0, age].
    ///
    /// Full segments contribute trapezoid areas; a partial final segment is
    /// cut at `age` with the interpolated value, so the result is exact for
    /// the piecewise-linear model.
    pub fn integral_to(&self, age: f64) -> Result<f64> {
        self.check_in_domain(age)?;
        let mut acc = 0.0;
        let mut i = 0;
        while i + 1 < self.knots.len() && self.knots[i + 1] <= age {
            acc +=
                (self.knots[i + 1] - self.knots[i]) * (self.values[i] + self.values[i + 1]) * 0.5;
            i += 1;
        }
        if i + 1 < self.knots.len() && self.knots[i] < age {
            let (k0, k1) = (self.knots[i], self.knots[i + 1]);
            let (v0, v1) = (self.values[i], self.values[i + 1]);
            let v_at = v0 + (age - k0) / (k1 - k0) * (v1 - v0);
            acc += (age - k0) * (v0 + v_at) * 0.5;
        }
        Ok(acc)
    }

    /// S(t) = exp(-H(t)) at every knot.
    pub fn survival(&self) -> SurvivalCurve {
        let values = self.values.iter().map(|&h| float::exp(-h)).collect();
        SurvivalCurve {
            knots: self.knots.clone(),
            values,
        }
    }
}

/// Survival probabilities S on an age grid, S(0) = 1.
///
/// Values lie in [0, 1]; a value of exactly 0 is representable (life tables
/// hit it at the oldest ages) but conversion back to a cumulative hazard
/// requires strictly positive survival.
#[derive(Debug, Clone, PartialEq)]
pub struct SurvivalCurve {
    knots: Vec<f64>,
    values: Vec<f64>,
}

impl SurvivalCurve {
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        validate_grid(&knots)?;
        if knots.len() < 2 {
            return Err(GtiError::EmptyCurve);
        }
        if values.len() != knots.len() {
            return Err(GtiError::RateCountMismatch {
                intervals: knots.len(),
                rates: values.len(),
            });
        }
        if values[0] != 1.0 {
            return Err(GtiError::SurvivalNotFromOne { first: values[0] });
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(GtiError::SurvivalOutOfRange { index, value });
            }
            if index > 0 && value > values[index - 1] {
                return Err(GtiError::SurvivalIncreasing { index });
            }
        }
        Ok(Self { knots, values })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// H(t) = -ln(S(t)) at every knot.
    ///
    /// Fails with [`GtiError::ZeroSurvival`] if any value is 0; truncate the
    /// domain before converting. Round-trips with
    /// [`CumulativeHazardCurve::survival`] to about 1e-12 relative as long as
    /// H is not vanishingly small.
    pub fn cumulative_hazard(&self) -> Result<CumulativeHazardCurve> {
        let mut values = Vec::with_capacity(self.values.len());
        for &s in &self.values {
            if s <= 0.0 {
                return Err(GtiError::ZeroSurvival);
            }
            values.push(-float::ln(s));
        }
        // -ln(1) can round to -0.0; pin the origin.
        values[0] = 0.0;
        CumulativeHazardCurve::new(self.knots.clone(), values)
    }
}
