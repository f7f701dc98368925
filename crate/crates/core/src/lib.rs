//! Quantitative models of large optoelectronic neural systems.
//!
//! * [`graph`]: how network size, degree and path length trade off for
//!   random and scale-free networks, with sampled graphs to check the
//!   formulas against.
//! * [`pool`]: the light-cone limit on how many elements can take part in
//!   one oscillation cycle.
//! * [`hardware`]: area and photon-budget power of optoelectronic networks.
//! * [`sim`]: a discrete-event simulator of delay-coupled pulse oscillators
//!   that tests the light-cone limit dynamically.
//! * [`golden`]: reference numbers the models must reproduce.
//!
//! The analytic code is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix it to `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod consts;
mod error;
pub mod golden;
pub mod graph;
pub mod hardware;
pub mod pool;
mod scalar;
pub mod sim;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type DegreeDistribution = graph::DegreeDistribution<f64>;
pub type PowerLaw = graph::PowerLaw<f64>;
pub type Platform = pool::Platform<f64>;
pub type PoolQuery = pool::PoolQuery<f64>;
pub type PoolResult = pool::PoolResult<f64>;
pub type HardwareProfile = hardware::HardwareProfile<f64>;
pub type PowerReport = hardware::PowerReport<f64>;
pub type SimConfig = sim::SimConfig<f64>;
pub type SpikeTrace = sim::SpikeTrace<f64>;
pub type SynchronyReport = sim::SynchronyReport<f64>;
pub type SweepRow = sim::SweepRow<f64>;

pub type PlatformF32 = pool::Platform<f32>;
pub type HardwareProfileF32 = hardware::HardwareProfile<f32>;
pub type SimConfigF32 = sim::SimConfig<f32>;
