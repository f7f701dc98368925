//! Degree, size and path-length relationships for random and scale-free
//! networks, with sampled graphs as an empirical check.

mod paths;
mod powerlaw;
mod random;
mod sample;

pub use paths::{
    bfs_distances, components, measure_avg_path_length, Components, PathLengthReport,
    SourceSample, DEFAULT_SAMPLED_SOURCES, EXACT_PATH_LENGTH_LIMIT, MIN_GIANT_COVERAGE,
};
pub use powerlaw::{Cutoff, PowerLaw, HEAD_TERMS, MAX_ALPHA};
pub use random::{avg_degree_random, path_length_random};
pub use sample::{sample_graph, SampledGraph, MAX_SAMPLED_EDGES};

use rand::Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Degree law of a network.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeDistribution<T> {
    /// Random network whose mean degree is set by its size and target
    /// average path length.
    RandomGaussian { n_total: u64, avg_path_length: T },
    PowerLaw(PowerLaw<T>),
}

impl<T: Scalar> DegreeDistribution<T> {
    pub fn random(n_total: u64, avg_path_length: T) -> Result<Self> {
        let dist = Self::RandomGaussian {
            n_total,
            avg_path_length,
        };
        dist.validate()?;
        Ok(dist)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::RandomGaussian {
                n_total,
                avg_path_length,
            } => avg_degree_random(*n_total, *avg_path_length).map(|_| ()),
            Self::PowerLaw(law) => law.validate(),
        }
    }

    /// Expected degree of a node in a network of `n_total` nodes.
    ///
    /// The random variant carries its own size, so `n_total` only matters
    /// for power laws with a natural cutoff.
    pub fn mean_degree(&self, n_total: u64) -> Result<T> {
        match self {
            Self::RandomGaussian {
                n_total: n,
                avg_path_length,
            } => avg_degree_random(*n, *avg_path_length),
            Self::PowerLaw(law) => law.mean_degree(n_total),
        }
    }

    /// Largest degree, when the law defines one.
    pub fn max_degree(&self, n_total: u64) -> Result<Option<T>> {
        match self {
            Self::RandomGaussian { .. } => Ok(None),
            Self::PowerLaw(law) => law.max_degree(n_total).map(Some),
        }
    }

    /// Independent degree draws as they would occur in an `n_total`-node
    /// network. Random networks draw from `Binomial(n_total − 1, k̄/(n_total − 1))`.
    pub fn sample_degrees<R: Rng + ?Sized>(
        &self,
        n_total: u64,
        count: usize,
        rng: &mut R,
    ) -> Result<Vec<u64>> {
        match self {
            Self::RandomGaussian { .. } => {
                if n_total < 2 {
                    return domain("n_total", n_total as f64, "a network needs at least 2 nodes");
                }
                let k = self.mean_degree(n_total)?.as_f64();
                let p = k / (n_total - 1) as f64;
                let binomial = Binomial::new(n_total - 1, p.min(1.0))
                    .map_err(|_| crate::Error::Domain {
                        name: "edge_probability",
                        value: p,
                        requirement: "edge probability must lie in [0, 1]",
                    })?;
                Ok((0..count).map(|_| binomial.sample(rng)).collect())
            }
            Self::PowerLaw(law) => law.sample_degrees(n_total, count, rng),
        }
    }
}

impl<T> From<PowerLaw<T>> for DegreeDistribution<T> {
    fn from(law: PowerLaw<T>) -> Self {
        Self::PowerLaw(law)
    }
}

/// Mean degree of a power-law network of `n_total` nodes.
pub fn powerlaw_mean_degree<T: Scalar>(law: &PowerLaw<T>, n_total: u64) -> Result<T> {
    law.mean_degree(n_total)
}

/// Largest degree of a power-law network of `n_total` nodes.
pub fn powerlaw_max_degree<T: Scalar>(law: &PowerLaw<T>, n_total: u64) -> Result<T> {
    law.max_degree(n_total)
}
