//! Gini-type ageing/rejuvenating index for lifetime distributions.
//!
//! The index compares a population's cumulative rate of mortality H(t) on a
//! window [0, T] against the exponential (constant-rate) distribution that
//! reaches the same H(T). A positive value means the mortality rate rises
//! with age (an ageing population), a negative value means it falls
//! (rejuvenating), and zero is the exponential boundary between the two.
//!
//! The crate works on piecewise-constant hazard curves, the natural shape of
//! life-table data: one rate per age interval. Under that model the
//! cumulative hazard is piecewise linear and every integral in the index is
//! evaluated in closed form, so the only approximation error is the
//! discretization itself.
//!
//! ```
//! use gti_core::{weibull::WeibullParams, gti};
//!
//! // Weibull with shape 2: mortality rate grows linearly in age.
//! let model = WeibullParams::new(2.0, 70.0).unwrap();
//! let hazard = model.discretize(80.0, 10_000).unwrap();
//! let result = gti(&hazard.cumulative(), 80.0).unwrap();
//! assert!((result.value - 1.0 / 3.0).abs() < 1e-6);
//! ```
//!
//! The crate is `no_std`-compatible (with `alloc`): disable the default
//! `std` feature and enable `libm` instead.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod float;

pub mod curves;
pub mod index;
pub mod weibull;

pub use curves::{CumulativeHazardCurve, HazardCurve, SurvivalCurve};
pub use error::{GtiError, Result};
pub use index::{
    classify, effective_hazard, gti, gti_with_epsilon, Classification, GtiResult,
    DEFAULT_CLASSIFICATION_EPSILON,
};
