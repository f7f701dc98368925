//! Event-driven simulation of pulse-coupled oscillators embedded in space,
//! with spikes travelling between nodes at a finite velocity.
//!
//! Every node is a phase oscillator of period `T`: its phase grows linearly,
//! it fires on reaching `T` and resets to zero. A spike that arrives outside
//! the refractory window `[0, r T)` advances the receiver's phase by `ε T`,
//! and a receiver pushed to `T` fires on the spot.

mod config;
mod engine;
mod metrics;
mod sweep;

pub use config::{SimConfig, Topology, DEFAULT_MAX_EVENTS};
pub use engine::{run, Delivery, DeliveryEffect, Fire, SpikeTrace};
pub use metrics::{order_parameter, synchrony_metrics, SyncAnalysis, SynchronyReport};
pub use sweep::{pool_sweep, SweepRow};
