//! Area and power budgets of optoelectronic networks.
//!
//! Node area is an affine surrogate, `A(k) = (A_neuron + k A_synapse)(1 + r)`,
//! with `r` the routing overhead. Because it is affine in degree, the
//! expected node area under any degree law is the area at the mean degree.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::consts::{PLANCK, SPEED_OF_LIGHT};
use crate::error::{domain, Result};
use crate::graph::DegreeDistribution;
use crate::scalar::Scalar;

/// Device and packaging parameters, SI units throughout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardwareProfile<T> {
    /// m²
    pub synapse_area: T,
    /// m²
    pub neuron_base_area: T,
    pub routing_overhead_fraction: T,
    /// m
    pub wafer_diameter: T,
    /// m
    pub wavelength: T,
    pub photons_per_synapse_event: T,
    /// Photons emitted per unit of electrical energy spent, relative to ideal.
    pub source_efficiency: T,
    /// Wall-plug watts per device watt.
    pub cooling_overhead: T,
}

/// Target a profile is fitted to: a wafer holding a given network.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaferCalibration<T> {
    /// m
    pub wafer_diameter: T,
    /// Unusable rim of the wafer, m.
    pub edge_exclusion: T,
    pub n_neurons: u64,
    pub n_synapses: u64,
    /// Share of the usable area taken by neuron bodies.
    pub neuron_area_fraction: T,
    pub routing_overhead_fraction: T,
}

impl<T: Scalar> Default for WaferCalibration<T> {
    /// One million neurons and two hundred million synapses on 300 mm.
    fn default() -> Self {
        Self {
            wafer_diameter: T::lit(0.3),
            edge_exclusion: T::lit(3e-3),
            n_neurons: 1_000_000,
            n_synapses: 200_000_000,
            neuron_area_fraction: T::lit(0.1),
            routing_overhead_fraction: T::one(),
        }
    }
}

impl<T: Scalar> WaferCalibration<T> {
    pub fn usable_area(&self) -> T {
        wafer_area(self.wafer_diameter - T::lit(2.0) * self.edge_exclusion)
    }

    pub fn mean_degree(&self) -> T {
        T::from_count(self.n_synapses) / T::from_count(self.n_neurons)
    }

    /// Sets neuron and synapse areas of `base` so that the calibration
    /// network exactly fills the usable wafer area.
    pub fn apply(&self, base: HardwareProfile<T>) -> Result<HardwareProfile<T>> {
        let f = self.neuron_area_fraction;
        if !(f >= T::zero() && f < T::one()) {
            return domain("neuron_area_fraction", f.as_f64(), "must lie in [0, 1)");
        }
        if self.n_neurons == 0 || self.n_synapses == 0 {
            return domain("n_neurons", 0.0, "calibration network must be non-empty");
        }
        if !(self.edge_exclusion >= T::zero())
            || !(T::lit(2.0) * self.edge_exclusion < self.wafer_diameter)
        {
            return domain("edge_exclusion", self.edge_exclusion.as_f64(), "rim must leave a usable wafer");
        }
        let device_area = self.usable_area() / (T::one() + self.routing_overhead_fraction);
        let profile = HardwareProfile {
            neuron_base_area: device_area * f / T::from_count(self.n_neurons),
            synapse_area: device_area * (T::one() - f) / T::from_count(self.n_synapses),
            routing_overhead_fraction: self.routing_overhead_fraction,
            wafer_diameter: self.wafer_diameter,
            ..base
        };
        profile.validate()?;
        Ok(profile)
    }
}

impl<T: Scalar> HardwareProfile<T> {
    /// Superconducting optoelectronic hardware: 1.5 µm photons, 10 photons
    /// per synapse per event, 1e-3 source efficiency, 1000 W of cooling per
    /// device watt, and areas fitted with [`WaferCalibration::default`].
    pub fn superconducting_optoelectronic() -> Self {
        let base = Self {
            synapse_area: T::one(),
            neuron_base_area: T::one(),
            routing_overhead_fraction: T::one(),
            wafer_diameter: T::lit(0.3),
            wavelength: T::lit(1.5e-6),
            photons_per_synapse_event: T::lit(10.0),
            source_efficiency: T::lit(1e-3),
            cooling_overhead: T::lit(1000.0),
        };
        WaferCalibration::default()
            .apply(base)
            .expect("default calibration is valid")
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("synapse_area", self.synapse_area),
            ("neuron_base_area", self.neuron_base_area),
            ("wafer_diameter", self.wafer_diameter),
            ("wavelength", self.wavelength),
            ("photons_per_synapse_event", self.photons_per_synapse_event),
            ("source_efficiency", self.source_efficiency),
        ];
        for (name, x) in positive {
            if !(x > T::zero()) || !x.is_finite() {
                return domain(name, x.as_f64(), "must be positive and finite");
            }
        }
        if !(self.routing_overhead_fraction >= T::zero()) {
            return domain(
                "routing_overhead_fraction",
                self.routing_overhead_fraction.as_f64(),
                "must be non-negative",
            );
        }
        if self.source_efficiency > T::one() {
            return domain("source_efficiency", self.source_efficiency.as_f64(), "must not exceed 1");
        }
        if !(self.cooling_overhead >= T::one()) || !self.cooling_overhead.is_finite() {
            return domain("cooling_overhead", self.cooling_overhead.as_f64(), "must be at least 1");
        }
        Ok(())
    }
}

/// Energy of one photon, `h c / λ`, J.
pub fn photon_energy<T: Scalar>(wavelength: T) -> Result<T> {
    if !(wavelength > T::zero()) || !wavelength.is_finite() {
        return domain("wavelength", wavelength.as_f64(), "must be positive and finite");
    }
    Ok(T::lit(PLANCK * SPEED_OF_LIGHT) / wavelength)
}

/// Area of a disc of the given diameter, m².
pub fn wafer_area<T: Scalar>(diameter: T) -> T {
    T::PI() * diameter * diameter / T::lit(4.0)
}

/// Width of a square synapse when `n_synapses` tile a wafer.
pub fn synapse_width_from_wafer<T: Scalar>(wafer_diameter: T, n_synapses: u64) -> Result<T> {
    if !(wafer_diameter > T::zero()) {
        return domain("wafer_diameter", wafer_diameter.as_f64(), "must be positive");
    }
    synapse_width_from_area(wafer_area(wafer_diameter), n_synapses)
}

/// Width of a square synapse when `n_synapses` tile `area`.
pub fn synapse_width_from_area<T: Scalar>(area: T, n_synapses: u64) -> Result<T> {
    if n_synapses == 0 {
        return domain("n_synapses", 0.0, "need at least one synapse");
    }
    if !(area > T::zero()) {
        return domain("area", area.as_f64(), "must be positive");
    }
    Ok((area / T::from_count(n_synapses)).sqrt())
}

/// Area of a node with `degree` synapses, m².
pub fn node_area<T: Scalar>(degree: T, profile: &HardwareProfile<T>) -> Result<T> {
    if !(degree >= T::zero()) || !degree.is_finite() {
        return domain("degree", degree.as_f64(), "must be non-negative and finite");
    }
    profile.validate()?;
    Ok((profile.neuron_base_area + degree * profile.synapse_area)
        * (T::one() + profile.routing_overhead_fraction))
}

/// Total area of an `n_total`-node network, `N · E[A(k)]`, m².
pub fn network_area<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    profile: &HardwareProfile<T>,
) -> Result<T> {
    let mean = dist.mean_degree(n_total)?;
    Ok(T::from_count(n_total) * node_area(mean, profile)?)
}

/// [`network_area`] with the expectation replaced by an average over
/// `draws` sampled degrees.
pub fn network_area_monte_carlo<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    profile: &HardwareProfile<T>,
    draws: usize,
    seed: u64,
) -> Result<T> {
    let degrees = sampled_degrees(n_total, dist, draws, seed)?;
    let mut total = T::zero();
    for &k in &degrees {
        total = total + node_area(T::from_count(k), profile)?;
    }
    Ok(T::from_count(n_total) * total / T::from_count(draws as u64))
}

fn sampled_degrees<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    draws: usize,
    seed: u64,
) -> Result<Vec<u64>> {
    if draws == 0 {
        return domain("draws", 0.0, "need at least one draw");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    dist.sample_degrees(n_total, draws, &mut rng)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerReport<T> {
    /// Electrical energy per firing event, J.
    pub pulse_energy: T,
    /// W
    pub device_power: T,
    /// Device power including cooling, W.
    pub wall_power: T,
    /// Device power over the node's own area, W/m².
    pub power_density: T,
}

/// Energy to fire once into `degree` synapses.
pub fn pulse_energy<T: Scalar>(degree: T, profile: &HardwareProfile<T>) -> Result<T> {
    profile.validate()?;
    let photons = degree * profile.photons_per_synapse_event;
    Ok(photons * photon_energy(profile.wavelength)? / profile.source_efficiency)
}

/// Power drawn by a neuron of the given fan-out firing at `f`.
pub fn neuron_power<T: Scalar>(
    degree: T,
    f: T,
    profile: &HardwareProfile<T>,
) -> Result<PowerReport<T>> {
    if !(degree >= T::one()) || !degree.is_finite() {
        return domain("degree", degree.as_f64(), "must be at least 1");
    }
    if !(f > T::zero()) || !f.is_finite() {
        return domain("frequency", f.as_f64(), "must be positive and finite");
    }
    let pulse = pulse_energy(degree, profile)?;
    let device_power = pulse * f;
    Ok(PowerReport {
        pulse_energy: pulse,
        device_power,
        wall_power: device_power * profile.cooling_overhead,
        power_density: device_power / node_area(degree, profile)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemPower<T> {
    /// W
    pub device_power: T,
    /// W
    pub wall_power: T,
    /// m²
    pub area: T,
    /// Device power per unit network area, W/m².
    pub power_density: T,
}

/// Power of an `n_total`-node network whose neurons fire at `mean_rate` on
/// average.
pub fn system_power<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    mean_rate: T,
    profile: &HardwareProfile<T>,
) -> Result<SystemPower<T>> {
    if !(mean_rate >= T::zero()) || !mean_rate.is_finite() {
        return domain("mean_rate", mean_rate.as_f64(), "must be non-negative and finite");
    }
    let mean = dist.mean_degree(n_total)?;
    let n = T::from_count(n_total);
    let per_node_area = node_area(mean, profile)?;
    if !(per_node_area > T::zero()) {
        return domain("network_area", per_node_area.as_f64(), "network has zero area");
    }
    let per_node_power = pulse_energy(mean, profile)? * mean_rate;
    let device_power = n * per_node_power;
    Ok(SystemPower {
        device_power,
        wall_power: device_power * profile.cooling_overhead,
        area: n * per_node_area,
        // per-node ratio, so the node count cancels exactly
        power_density: per_node_power / per_node_area,
    })
}

/// Device power per unit area of the network, W/m².
pub fn system_power_density<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    mean_rate: T,
    profile: &HardwareProfile<T>,
) -> Result<T> {
    Ok(system_power(n_total, dist, mean_rate, profile)?.power_density)
}

/// [`system_power_density`] over `draws` sampled node degrees.
pub fn system_power_density_monte_carlo<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    mean_rate: T,
    profile: &HardwareProfile<T>,
    draws: usize,
    seed: u64,
) -> Result<T> {
    let degrees = sampled_degrees(n_total, dist, draws, seed)?;
    let (mut energy, mut area) = (T::zero(), T::zero());
    for &k in &degrees {
        let k = T::from_count(k);
        energy = energy + pulse_energy(k, profile)?;
        area = area + node_area(k, profile)?;
    }
    if !(area > T::zero()) {
        return domain("network_area", area.as_f64(), "network has zero area");
    }
    Ok(energy * mean_rate / area)
}

/// Mean firing rate at which the network draws `device_power` watts.
pub fn rate_for_device_power<T: Scalar>(
    n_total: u64,
    dist: &DegreeDistribution<T>,
    device_power: T,
    profile: &HardwareProfile<T>,
) -> Result<T> {
    let per_event = pulse_energy(dist.mean_degree(n_total)?, profile)?;
    Ok(device_power / (T::from_count(n_total) * per_event))
}
