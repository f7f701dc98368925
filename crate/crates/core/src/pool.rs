//! The light-cone neuronal pool.
//!
//! Two elements can take part in the same oscillation cycle only if a signal
//! leaving one reaches the other within one period, so the pool diameter is
//! `d = v/f` and a pool of width-`w` elements in `n` dimensions holds
//! `(v/(w f))^n` of them. Pool areas use the square convention `A = d²`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::consts::{
    CORTEX_AREA, CORTEX_NEURONS, CORTEX_SIGNAL_VELOCITY, CORTEX_SYNAPSES_PER_NEURON,
    SPEED_OF_LIGHT,
};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// What the platform's element width measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    Neuron,
    Synapse,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Neuron => "neuron",
            Self::Synapse => "synapse",
        })
    }
}

/// A signalling medium paired with an element size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Platform<T> {
    pub label: String,
    /// Signal velocity, m/s.
    pub signal_velocity: T,
    /// Element width, m.
    pub element_width: T,
    pub element_kind: ElementKind,
}

impl<T: Scalar> Platform<T> {
    pub fn new(
        label: impl Into<String>,
        signal_velocity: T,
        element_width: T,
        element_kind: ElementKind,
    ) -> Result<Self> {
        let p = Self {
            label: label.into(),
            signal_velocity,
            element_width,
            element_kind,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.signal_velocity.as_f64();
        // compare in the platform precision so that `c` itself passes in f32
        if !(v > 0.0) || self.signal_velocity > T::lit(SPEED_OF_LIGHT) {
            return domain("signal_velocity", v, "velocity must lie in (0, c]");
        }
        let w = self.element_width.as_f64();
        if !(w > 0.0) || !w.is_finite() {
            return domain("element_width", w, "element width must be positive and finite");
        }
        Ok(())
    }

    /// Cortical neurons: 2 m/s axons, width `sqrt(0.095 m² / 1.6e10)`.
    pub fn cortex_neurons() -> Self {
        Self {
            label: "cortex (neurons)".into(),
            signal_velocity: T::lit(CORTEX_SIGNAL_VELOCITY),
            element_width: T::lit(2.4e-6),
            element_kind: ElementKind::Neuron,
        }
    }

    /// Cortical synapses, `1e4` per neuron.
    pub fn cortex_synapses() -> Self {
        Self {
            label: "cortex (synapses)".into(),
            signal_velocity: T::lit(CORTEX_SIGNAL_VELOCITY),
            element_width: T::lit(2.4e-8),
            element_kind: ElementKind::Synapse,
        }
    }

    /// Superconducting optoelectronic synapses, `2e8` per 300 mm wafer,
    /// signalling at `c`.
    pub fn photonic_synapses() -> Self {
        Self {
            label: "superconducting optoelectronic (synapses)".into(),
            signal_velocity: T::lit(SPEED_OF_LIGHT),
            element_width: T::lit(1.9e-5),
            element_kind: ElementKind::Synapse,
        }
    }
}

/// Cortical neuron width implied by cortex area and neuron count, m.
pub fn cortex_neuron_width() -> f64 {
    (CORTEX_AREA / CORTEX_NEURONS).sqrt()
}

/// Cortical synapse width implied by cortex area and synapse count, m.
pub fn cortex_synapse_width() -> f64 {
    (CORTEX_AREA / (CORTEX_NEURONS * CORTEX_SYNAPSES_PER_NEURON)).sqrt()
}

/// Number of spatial dimensions the pool extends in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Dimension(u8);

impl Dimension {
    pub const ONE: Self = Self(1);
    pub const TWO: Self = Self(2);
    pub const THREE: Self = Self(3);

    pub fn new(n: u8) -> Result<Self> {
        match n {
            1..=3 => Ok(Self(n)),
            _ => domain("dimension", n, "dimension must be 1, 2 or 3"),
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl Default for Dimension {
    fn default() -> Self {
        Self::TWO
    }
}

impl TryFrom<u8> for Dimension {
    type Error = Error;

    fn try_from(n: u8) -> Result<Self> {
        Self::new(n)
    }
}

impl From<Dimension> for u8 {
    fn from(d: Dimension) -> u8 {
        d.0
    }
}

/// Whether the pool needs a signal to travel one way or there and back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Propagation {
    #[default]
    OneWay,
    /// Halves the diameter.
    RoundTrip,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoolQuery<T> {
    /// Oscillation frequency, Hz.
    pub frequency: T,
    pub dimension: Dimension,
    #[serde(default)]
    pub propagation: Propagation,
}

impl<T: Scalar> PoolQuery<T> {
    pub fn new(frequency: T, dimension: Dimension) -> Self {
        Self {
            frequency,
            dimension,
            propagation: Propagation::OneWay,
        }
    }

    pub fn period(&self) -> T {
        self.frequency.recip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoolResult<T> {
    /// m
    pub diameter: T,
    pub population: T,
    /// m², only for planar pools.
    pub area: Option<T>,
}

fn check_frequency<T: Scalar>(f: T) -> Result<()> {
    if !(f > T::zero()) || !f.is_finite() {
        return domain("frequency", f.as_f64(), "frequency must be positive and finite");
    }
    Ok(())
}

fn check_length<T: Scalar>(name: &'static str, x: T) -> Result<()> {
    if !(x > T::zero()) || !x.is_finite() {
        return domain(name, x.as_f64(), "length must be positive and finite");
    }
    Ok(())
}

/// Largest separation across which one element can drive another within a
/// period: `d = v/f`.
pub fn pool_diameter<T: Scalar>(p: &Platform<T>, f: T) -> Result<T> {
    pool_diameter_with(p, f, Propagation::OneWay)
}

pub fn pool_diameter_with<T: Scalar>(p: &Platform<T>, f: T, propagation: Propagation) -> Result<T> {
    p.validate()?;
    check_frequency(f)?;
    let d = p.signal_velocity / f;
    Ok(match propagation {
        Propagation::OneWay => d,
        Propagation::RoundTrip => d / T::lit(2.0),
    })
}

/// Elements in the pool, `(d/w)^n`.
pub fn pool_population<T: Scalar>(p: &Platform<T>, q: &PoolQuery<T>) -> Result<T> {
    let d = pool_diameter_with(p, q.frequency, q.propagation)?;
    Ok((d / p.element_width).powi(q.dimension.get() as i32))
}

/// Square pool area `d²`, m².
pub fn pool_area<T: Scalar>(p: &Platform<T>, f: T) -> Result<T> {
    let d = pool_diameter(p, f)?;
    Ok(d * d)
}

/// Diameter, population and (for `n = 2`) area in one go.
pub fn pool<T: Scalar>(p: &Platform<T>, q: &PoolQuery<T>) -> Result<PoolResult<T>> {
    let diameter = pool_diameter_with(p, q.frequency, q.propagation)?;
    let population = pool_population(p, q)?;
    let area = (q.dimension == Dimension::TWO).then(|| diameter * diameter);
    Ok(PoolResult {
        diameter,
        population,
        area,
    })
}

/// Ratio of pool populations of two platforms at any common frequency,
/// `(v₁ w₂ / (w₁ v₂))^n`.
pub fn pool_ratio<T: Scalar>(a: &Platform<T>, b: &Platform<T>, n: Dimension) -> Result<T> {
    a.validate()?;
    b.validate()?;
    if a.element_kind != b.element_kind {
        return Err(Error::ElementKindMismatch {
            left: a.element_kind,
            right: b.element_kind,
        });
    }
    let base = (a.signal_velocity * b.element_width) / (a.element_width * b.signal_velocity);
    Ok(base.powi(n.get() as i32))
}

/// Highest oscillation frequency at which elements `extent` apart still fall
/// in one pool, `v/extent`.
pub fn max_frequency<T: Scalar>(p: &Platform<T>, extent: T) -> Result<T> {
    p.validate()?;
    check_length("extent", extent)?;
    Ok(p.signal_velocity / extent)
}

/// Whether elements `separation` apart can synchronize at `f`. The boundary
/// `separation = v/f` counts as integrable.
pub fn is_integrable<T: Scalar>(p: &Platform<T>, separation: T, f: T) -> Result<bool> {
    p.validate()?;
    check_length("separation", separation)?;
    check_frequency(f)?;
    Ok(separation <= p.signal_velocity / f)
}

/// Side of the square with the given area.
pub fn square_side<T: Scalar>(area: T) -> T {
    area.sqrt()
}

/// Whether a system of a given extent can oscillate coherently at `f`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Feasibility<T> {
    pub extent: T,
    pub frequency: T,
    /// `v/f`, m.
    pub pool_diameter: T,
    /// `v/extent`, Hz.
    pub max_frequency: T,
    pub integrable: bool,
}

pub fn feasibility<T: Scalar>(p: &Platform<T>, extent: T, f: T) -> Result<Feasibility<T>> {
    Ok(Feasibility {
        extent,
        frequency: f,
        pool_diameter: pool_diameter(p, f)?,
        max_frequency: max_frequency(p, extent)?,
        integrable: is_integrable(p, extent, f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn platform(v: f64, w: f64) -> Platform<f64> {
        Platform::new("test", v, w, ElementKind::Neuron).unwrap()
    }

    #[test]
    fn light_at_one_megahertz() {
        let d = pool_diameter(&platform(SPEED_OF_LIGHT, 1e-5), 1e6).unwrap();
        assert_relative_eq!(d, 299.792_458, max_relative = 1e-15);
        let a = pool_area(&platform(SPEED_OF_LIGHT, 1e-5), 1e6).unwrap();
        assert_relative_eq!(a, 8.987_551_787_368_176e4, max_relative = 1e-12);
    }

    #[test]
    fn cortex_diameter() {
        assert_relative_eq!(pool_diameter(&platform(2.0, 1e-6), 6.0).unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn halving_frequency_doubles_diameter() {
        let p = platform(7.3, 1e-6);
        let d1 = pool_diameter(&p, 11.0).unwrap();
        let d2 = pool_diameter(&p, 5.5).unwrap();
        assert_eq!(d2, 2.0 * d1);
    }

    #[test]
    fn round_trip_halves() {
        let p = platform(SPEED_OF_LIGHT, 1e-5);
        let one = pool_diameter(&p, 1e3).unwrap();
        let two = pool_diameter_with(&p, 1e3, Propagation::RoundTrip).unwrap();
        assert_eq!(two * 2.0, one);
    }

    #[test]
    fn cortex_population() {
        let q = PoolQuery::new(6.0, Dimension::TWO);
        let n = pool_population(&Platform::<f64>::cortex_neurons(), &q).unwrap();
        assert_relative_eq!(n, 1.929e10, max_relative = 1e-3);
    }

    #[test]
    fn single_element_pool() {
        let p = platform(3.0 * 2e-3, 2e-3);
        for n in 1..=3 {
            let q = PoolQuery::new(3.0, Dimension::new(n).unwrap());
            assert_relative_eq!(pool_population(&p, &q).unwrap(), 1.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn photonic_synapses_at_twenty_megahertz() {
        let p = platform(SPEED_OF_LIGHT, 1.9e-5);
        let q = PoolQuery::new(2e7, Dimension::TWO);
        let n = pool_population(&p, &q).unwrap();
        // independent two-step route: diameter first, then (d/w)²
        let d = SPEED_OF_LIGHT / 2e7;
        assert_relative_eq!(n, (d / 1.9e-5_f64).powi(2), max_relative = 1e-14);
        assert_relative_eq!(n, 6.23e11, max_relative = 0.01);
    }

    #[test]
    fn area_only_for_planar_pools() {
        let p = platform(SPEED_OF_LIGHT, 1e-5);
        assert!(pool(&p, &PoolQuery::new(1e6, Dimension::TWO)).unwrap().area.is_some());
        assert!(pool(&p, &PoolQuery::new(1e6, Dimension::THREE)).unwrap().area.is_none());
    }

    #[test]
    fn quadratic_area_scaling() {
        let p = platform(123.0, 1e-5);
        let a1 = pool_area(&p, 10.0).unwrap();
        let a2 = pool_area(&p, 20.0).unwrap();
        assert_relative_eq!(a1 / a2, 4.0, max_relative = 1e-15);
    }

    #[test]
    fn photonic_to_biological_ratio() {
        let photonic = Platform::new("p", SPEED_OF_LIGHT, 1.9e-5, ElementKind::Synapse).unwrap();
        let bio = Platform::new("b", 2.0, 2.4e-8, ElementKind::Synapse).unwrap();
        let r: f64 = pool_ratio(&photonic, &bio, Dimension::TWO).unwrap();
        assert_relative_eq!(r, 3.585e10, max_relative = 1e-3);
        assert_relative_eq!(r.sqrt(), 1.9e5, max_relative = 0.01);
        assert_eq!(pool_ratio(&bio, &bio, Dimension::TWO).unwrap(), 1.0);
    }

    #[test]
    fn mixed_kinds_are_rejected() {
        let a = Platform::<f64>::cortex_neurons();
        let b = Platform::<f64>::photonic_synapses();
        assert!(matches!(
            pool_ratio(&a, &b, Dimension::TWO),
            Err(Error::ElementKindMismatch { .. })
        ));
    }

    #[test]
    fn max_frequency_examples() {
        let c = platform(SPEED_OF_LIGHT, 1e-5);
        assert_relative_eq!(max_frequency(&c, square_side(1e5)).unwrap(), 9.48e5, max_relative = 1e-3);
        assert_relative_eq!(max_frequency(&c, 6e4).unwrap(), 4996.54, max_relative = 1e-5);
        let p = platform(42.0, 1e-5);
        assert_eq!(max_frequency(&p, 42.0).unwrap(), 1.0);
    }

    #[test]
    fn integrability() {
        let c = platform(SPEED_OF_LIGHT, 1e-5);
        assert!(is_integrable(&c, 6e4, 1e3).unwrap());
        let cortex = platform(2.0, 1e-6);
        assert!(!is_integrable(&cortex, 0.4, 6.0).unwrap());
        assert!(is_integrable(&cortex, 2.0 / 6.0, 6.0).unwrap());
        let f = max_frequency(&c, 6e4).unwrap();
        assert!(is_integrable(&c, 6e4, f).unwrap());
        assert!(!is_integrable(&c, 6e4, f * 1.000_001).unwrap());
    }

    #[test]
    fn invalid_inputs() {
        // 3e8 is the rounded speed of light and already too fast
        assert!(Platform::new("x", 3e8, 1e-5, ElementKind::Neuron).is_err());
        assert!(Platform::new("x", 3.1e8, 1e-5, ElementKind::Neuron).is_err());
        assert!(Platform::new("x", 0.0, 1e-5, ElementKind::Neuron).is_err());
        assert!(Platform::new("x", 1.0, 0.0, ElementKind::Neuron).is_err());
        assert!(Platform::new("c", SPEED_OF_LIGHT as f32, 1e-5, ElementKind::Neuron).is_ok());
        let p = platform(1.0, 1.0);
        assert!(pool_diameter(&p, 0.0).is_err());
        assert!(pool_diameter(&p, -1.0).is_err());
        assert!(max_frequency(&p, 0.0).is_err());
        assert!(Dimension::new(0).is_err());
        assert!(Dimension::new(4).is_err());
    }

    #[test]
    fn derived_widths() {
        assert_relative_eq!(cortex_neuron_width(), 2.4e-6, max_relative = 0.02);
        assert_relative_eq!(cortex_synapse_width(), 2.4e-8, max_relative = 0.02);
    }
}
