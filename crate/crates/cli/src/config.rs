//! The experiment file: TOML, SI units throughout.
//!
//! ```toml
//! schema_version = 1
//! seed = 7
//!
//! [pool]
//! velocity = 2.0
//! element_width = 2.4e-6
//! element_kind = "neuron"
//! frequencies = [6.0]
//! ```
//!
//! Every section and every key is optional; unknown keys are rejected.

use std::path::Path;

use anyhow::{bail, Context, Result};
use optocog::consts::SPEED_OF_LIGHT;
use optocog::hardware::HardwareProfile;
use optocog::pool::ElementKind;
use serde::Deserialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub seed: Option<u64>,
    #[serde(default)]
    pub degree: DegreeSection,
    #[serde(default)]
    pub pool: PoolSection,
    #[serde(default)]
    pub hardware: HardwareSection,
    #[serde(default)]
    pub area: AreaSection,
    #[serde(default)]
    pub power: PowerSection,
    #[serde(default)]
    pub simulation: SimulationSection,
    #[serde(default)]
    pub sweep: SweepSection,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            seed: None,
            degree: Default::default(),
            pool: Default::default(),
            hardware: Default::default(),
            area: Default::default(),
            power: Default::default(),
            simulation: Default::default(),
            sweep: Default::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text)?;
        if cfg.schema_version != SCHEMA_VERSION {
            bail!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                cfg.schema_version
            );
        }
        Ok(cfg)
    }
}

/// Log-spaced grid from `min` to `max` with `per_decade` points per decade.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogGrid {
    pub min: f64,
    pub max: f64,
    pub per_decade: u32,
}

impl LogGrid {
    pub fn points(&self) -> Result<Vec<f64>> {
        let LogGrid { min, max, per_decade } = *self;
        if !(min > 0.0 && min.is_finite() && max.is_finite()) {
            bail!("grid bounds must be positive and finite, got [{min}, {max}]");
        }
        if per_decade == 0 {
            bail!("grid needs at least one point per decade");
        }
        if min > max {
            bail!("empty grid: min {min} exceeds max {max}");
        }
        let (lo, hi) = (min.log10(), max.log10());
        let steps = ((hi - lo) * per_decade as f64 + 1e-9).floor() as u32;
        Ok((0..=steps)
            .map(|i| 10f64.powf(lo + i as f64 / per_decade as f64))
            .collect())
    }

    /// Grid points rounded to whole counts, duplicates dropped.
    pub fn counts(&self) -> Result<Vec<u64>> {
        let mut out: Vec<u64> = self.points()?.iter().map(|x| x.round() as u64).collect();
        out.dedup();
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DegreeSection {
    pub n_total: LogGrid,
    pub path_lengths: Vec<f64>,
    pub alphas: Vec<f64>,
    pub k_min: u64,
}

impl Default for DegreeSection {
    fn default() -> Self {
        Self {
            n_total: LogGrid {
                min: 1e2,
                max: 1e8,
                per_decade: 1,
            },
            path_lengths: vec![2.0, 3.0, 4.0, 5.0],
            alphas: vec![2.0, 2.5, 3.0],
            k_min: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PoolSection {
    /// m/s
    pub velocity: f64,
    /// m
    pub element_width: f64,
    pub element_kind: ElementKind,
    pub dimension: u8,
    /// Hz. Overrides `frequency_grid` when non-empty.
    pub frequencies: Vec<f64>,
    pub frequency_grid: LogGrid,
    pub round_trip: bool,
    /// Extent to test for integrability, m.
    pub extent: Option<f64>,
}

impl Default for PoolSection {
    fn default() -> Self {
        Self {
            velocity: SPEED_OF_LIGHT,
            element_width: 1.9e-5,
            element_kind: ElementKind::Synapse,
            dimension: 2,
            frequencies: Vec::new(),
            frequency_grid: LogGrid {
                min: 1.0,
                max: 1e9,
                per_decade: 1,
            },
            round_trip: false,
            extent: None,
        }
    }
}

/// Overrides on the calibrated superconducting optoelectronic profile.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardwareSection {
    pub synapse_area: Option<f64>,
    pub neuron_base_area: Option<f64>,
    pub routing_overhead_fraction: Option<f64>,
    pub wafer_diameter: Option<f64>,
    pub wavelength: Option<f64>,
    pub photons_per_synapse_event: Option<f64>,
    pub source_efficiency: Option<f64>,
    pub cooling_overhead: Option<f64>,
}

impl HardwareSection {
    pub fn profile(&self) -> Result<HardwareProfile<f64>> {
        let base = HardwareProfile::superconducting_optoelectronic();
        let p = HardwareProfile {
            synapse_area: self.synapse_area.unwrap_or(base.synapse_area),
            neuron_base_area: self.neuron_base_area.unwrap_or(base.neuron_base_area),
            routing_overhead_fraction: self
                .routing_overhead_fraction
                .unwrap_or(base.routing_overhead_fraction),
            wafer_diameter: self.wafer_diameter.unwrap_or(base.wafer_diameter),
            wavelength: self.wavelength.unwrap_or(base.wavelength),
            photons_per_synapse_event: self
                .photons_per_synapse_event
                .unwrap_or(base.photons_per_synapse_event),
            source_efficiency: self.source_efficiency.unwrap_or(base.source_efficiency),
            cooling_overhead: self.cooling_overhead.unwrap_or(base.cooling_overhead),
        };
        p.validate()?;
        Ok(p)
    }
}

/// Degree law of a hardware network: `p(k) ∝ k^-alpha` from `k_min` up to
/// the natural cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkLaw {
    pub alpha: f64,
    pub k_min: u64,
}

impl Default for NetworkLaw {
    /// Mean degree close to 200 at a million nodes.
    fn default() -> Self {
        Self {
            alpha: 3.0,
            k_min: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AreaSection {
    pub degrees: LogGrid,
    pub n_total: LogGrid,
    pub law: NetworkLaw,
}

impl Default for AreaSection {
    fn default() -> Self {
        Self {
            degrees: LogGrid {
                min: 1.0,
                max: 1e6,
                per_decade: 1,
            },
            n_total: LogGrid {
                min: 1e3,
                max: 1e9,
                per_decade: 1,
            },
            law: NetworkLaw::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PowerSection {
    /// Fan-out of the single neuron in the report.
    pub degree: f64,
    /// Hz
    pub frequency: f64,
    pub n_total: u64,
    pub law: NetworkLaw,
    /// Mean firing rate of the whole network, Hz. When absent the rate is
    /// chosen to draw `device_power`.
    pub mean_rate: Option<f64>,
    /// W
    pub device_power: f64,
}

impl Default for PowerSection {
    fn default() -> Self {
        Self {
            degree: 1e6,
            frequency: 1e6,
            n_total: 1_000_000,
            law: NetworkLaw::default(),
            mean_rate: None,
            device_power: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyKind {
    #[default]
    AllToAll,
    /// `G(n, p)` wired for `avg_path_length`.
    Random,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimulationSection {
    pub nodes: usize,
    pub dimension: usize,
    /// Side of the square the nodes are scattered in, in units of `v T`.
    pub extent_over_vt: f64,
    /// m/s
    pub signal_velocity: f64,
    /// s
    pub period: f64,
    pub coupling: f64,
    pub refractory_fraction: f64,
    /// Run length in periods.
    pub periods: f64,
    /// Analysis window in periods.
    pub window_periods: f64,
    pub lock_threshold: f64,
    pub max_events: u64,
    pub topology: TopologyKind,
    pub avg_path_length: f64,
    /// Explicit coordinates, m. Replace the random layout together with
    /// `phases`.
    pub positions: Option<Vec<Vec<f64>>>,
    /// s, one per node.
    pub phases: Option<Vec<f64>>,
}

impl Default for SimulationSection {
    fn default() -> Self {
        Self {
            nodes: 64,
            dimension: 2,
            extent_over_vt: 0.1,
            signal_velocity: SPEED_OF_LIGHT,
            period: 1e-6,
            coupling: 0.3,
            refractory_fraction: 0.35,
            periods: 50.0,
            window_periods: 10.0,
            lock_threshold: 0.9,
            max_events: optocog::sim::DEFAULT_MAX_EVENTS,
            topology: TopologyKind::AllToAll,
            avg_path_length: 2.0,
            positions: None,
            phases: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepSection {
    pub diameters_over_vt: Vec<f64>,
    /// Number of seeds, counting up from the base seed.
    pub seeds: u64,
}

impl Default for SweepSection {
    fn default() -> Self {
        Self {
            diameters_over_vt: vec![0.1, 0.5, 1.0, 2.0, 4.0],
            seeds: 10,
        }
    }
}
