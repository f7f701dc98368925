use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SampledGraph;
use crate::scalar::Scalar;

/// Default cap on the number of events a run may schedule.
pub const DEFAULT_MAX_EVENTS: u64 = 100_000_000;

/// Who sends spikes to whom.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Topology {
    #[default]
    AllToAll,
    /// Undirected edges; spikes travel both ways.
    Edges(Vec<(u32, u32)>),
}

impl Topology {
    pub fn from_graph(graph: &SampledGraph) -> Self {
        Self::Edges(graph.edges().to_vec())
    }

    /// Outgoing neighbour lists, `None` for all-to-all coupling.
    pub(crate) fn neighbor_lists(&self, n: usize) -> Option<Vec<Vec<u32>>> {
        match self {
            Self::AllToAll => None,
            Self::Edges(edges) => {
                let mut adj = vec![Vec::new(); n];
                for &(a, b) in edges {
                    if a != b {
                        adj[a as usize].push(b);
                        adj[b as usize].push(a);
                    }
                }
                for list in &mut adj {
                    list.sort_unstable();
                    list.dedup();
                }
                Some(adj)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig<T> {
    /// Node coordinates, m. All nodes share one dimension in 1..=3.
    pub positions: Vec<Vec<T>>,
    /// m/s
    pub signal_velocity: T,
    /// Natural period `T = 1/f`, s.
    pub period: T,
    /// Phase advance per received spike, as a fraction of the period.
    pub coupling: T,
    /// Fraction of the period after firing during which spikes are ignored.
    pub refractory_fraction: T,
    /// Phase of every node at `t = 0`, s, in `[0, T)`.
    pub initial_phases: Vec<T>,
    /// s
    pub duration: T,
    /// Seed the layout was drawn with. The run itself is deterministic.
    pub seed: u64,
    pub topology: Topology,
    pub max_events: u64,
    /// Keep a log of every spike delivery in the trace.
    pub record_deliveries: bool,
}

impl<T: Scalar> SimConfig<T> {
    /// Uncoupled nodes at the given positions and phases, running for ten
    /// periods. Adjust the public fields from there.
    pub fn new(positions: Vec<Vec<T>>, initial_phases: Vec<T>, signal_velocity: T, period: T) -> Self {
        Self {
            positions,
            signal_velocity,
            period,
            coupling: T::zero(),
            refractory_fraction: T::zero(),
            initial_phases,
            duration: period * T::lit(10.0),
            seed: 0,
            topology: Topology::AllToAll,
            max_events: DEFAULT_MAX_EVENTS,
            record_deliveries: false,
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.positions.len()
    }

    pub fn dimension(&self) -> usize {
        self.positions.first().map_or(0, Vec::len)
    }

    /// Distance a spike covers in one period, `v T`.
    pub fn light_cone(&self) -> T {
        self.signal_velocity * self.period
    }

    /// Replaces positions and phases with a seeded random layout: `n` nodes
    /// uniform in a `dimension`-cube of side `extent`, phases uniform in
    /// `[0, T)`. Phases and the unit-cube layout depend only on the seed,
    /// so layouts of different extent are scaled copies of each other.
    pub fn with_random_layout(mut self, n: usize, dimension: usize, extent: T, seed: u64) -> Self {
        let mut phase_rng = ChaCha8Rng::seed_from_u64(seed);
        phase_rng.set_stream(0);
        let mut place_rng = ChaCha8Rng::seed_from_u64(seed);
        place_rng.set_stream(1);
        self.initial_phases = (0..n)
            .map(|_| T::lit(phase_rng.random::<f64>()) * self.period)
            .map(|p| if p >= self.period { T::zero() } else { p })
            .collect();
        self.positions = (0..n)
            .map(|_| {
                (0..dimension)
                    .map(|_| T::lit(place_rng.random::<f64>()) * extent)
                    .collect()
            })
            .collect();
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        let n = self.positions.len();
        if n == 0 {
            return fail("at least one node is required".into());
        }
        if n > u32::MAX as usize {
            return fail("too many nodes".into());
        }
        let dim = self.dimension();
        if !(1..=3).contains(&dim) {
            return fail(format!("positions must have 1 to 3 coordinates, got {dim}"));
        }
        for (i, p) in self.positions.iter().enumerate() {
            if p.len() != dim {
                return fail(format!("node {i} has {} coordinates, expected {dim}", p.len()));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return fail(format!("node {i} has a non-finite coordinate"));
            }
        }
        if !(self.signal_velocity > T::zero()) || !self.signal_velocity.is_finite() {
            return fail(format!("signal velocity must be positive, got {}", self.signal_velocity));
        }
        if !(self.period > T::zero()) || !self.period.is_finite() {
            return fail(format!("period must be positive, got {}", self.period));
        }
        if !(self.coupling >= T::zero() && self.coupling <= T::lit(0.5)) {
            return fail(format!("coupling must lie in [0, 0.5], got {}", self.coupling));
        }
        if !(self.refractory_fraction >= T::zero() && self.refractory_fraction < T::lit(0.5)) {
            return fail(format!(
                "refractory fraction must lie in [0, 0.5), got {}",
                self.refractory_fraction
            ));
        }
        if self.initial_phases.len() != n {
            return fail(format!(
                "{} initial phases for {n} nodes",
                self.initial_phases.len()
            ));
        }
        if let Some(i) = self
            .initial_phases
            .iter()
            .position(|&p| !(p >= T::zero() && p < self.period))
        {
            return fail(format!("initial phase of node {i} is outside [0, T)"));
        }
        if !(self.duration >= self.period) || !self.duration.is_finite() {
            return fail("duration must be finite and at least one period".into());
        }
        if let Topology::Edges(edges) = &self.topology {
            if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a as usize >= n || b as usize >= n) {
                return fail(format!("edge ({a}, {b}) refers to a missing node"));
            }
        }
        Ok(())
    }
}
