//! Physical constants in SI units, pinned to exact CODATA values where they
//! are defined exactly.

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Planck constant, J s.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Surface area of the Earth, m².
pub const EARTH_SURFACE_AREA: f64 = 5.1e14;

/// Signal velocity along cortical axons, m/s.
pub const CORTEX_SIGNAL_VELOCITY: f64 = 2.0;

/// Area of the unfolded human cerebral cortex, m².
pub const CORTEX_AREA: f64 = 0.095;

/// Neurons in the human cerebral cortex.
pub const CORTEX_NEURONS: f64 = 1.6e10;

/// Synapses per cortical neuron.
pub const CORTEX_SYNAPSES_PER_NEURON: f64 = 1.0e4;
