use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{avg_degree_random, DegreeDistribution};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// Upper bound on the number of edges a sampled graph may hold (about 1 GB
/// of edge and adjacency storage).
pub const MAX_SAMPLED_EDGES: u64 = 100_000_000;

/// Simple undirected graph with dense node ids, stored as a sorted edge list
/// plus compressed adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledGraph {
    n_nodes: usize,
    edges: Vec<(u32, u32)>,
    seed: u64,
    degree_sequence: Option<Vec<u64>>,
    offsets: Vec<usize>,
    adjacency: Vec<u32>,
}

impl SampledGraph {
    /// Builds a graph from arbitrary edges, dropping self-loops and
    /// duplicates. Panics if an endpoint is out of range.
    pub fn from_edges(n_nodes: usize, edges: impl IntoIterator<Item = (u32, u32)>, seed: u64) -> Self {
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        assert!(
            edges.last().is_none_or(|&(_, b)| (b as usize) < n_nodes),
            "edge endpoint out of range"
        );

        let mut offsets = vec![0usize; n_nodes + 1];
        for &(a, b) in &edges {
            offsets[a as usize + 1] += 1;
            offsets[b as usize + 1] += 1;
        }
        for i in 0..n_nodes {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adjacency = vec![0u32; offsets[n_nodes]];
        for &(a, b) in &edges {
            adjacency[fill[a as usize]] = b;
            fill[a as usize] += 1;
            adjacency[fill[b as usize]] = a;
            fill[b as usize] += 1;
        }
        Self {
            n_nodes,
            edges,
            seed,
            degree_sequence: None,
            offsets,
            adjacency,
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Degrees requested from the configuration model before self-loops and
    /// multi-edges were removed. `None` for random graphs.
    pub fn degree_sequence(&self) -> Option<&[u64]> {
        self.degree_sequence.as_deref()
    }

    pub fn neighbors(&self, node: usize) -> &[u32] {
        &self.adjacency[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.offsets[node + 1] - self.offsets[node]
    }

    pub fn mean_degree(&self) -> f64 {
        if self.n_nodes == 0 {
            return 0.0;
        }
        2.0 * self.edges.len() as f64 / self.n_nodes as f64
    }
}

/// Samples a graph with the given degree law.
///
/// Random networks are `G(n, p)` with `p = k̄/(n − 1)`; power laws use the
/// configuration model on sampled integer degrees, followed by removal of
/// self-loops and multi-edges. The same `(dist, n_total, seed)` always gives
/// the same graph.
pub fn sample_graph<T: Scalar>(
    dist: &DegreeDistribution<T>,
    n_total: u64,
    seed: u64,
) -> Result<SampledGraph> {
    if n_total < 2 {
        return domain("n_total", n_total as f64, "a network needs at least 2 nodes");
    }
    if n_total > u32::MAX as u64 {
        return domain("n_total", n_total as f64, "node ids must fit in 32 bits");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match dist {
        DegreeDistribution::RandomGaussian {
            n_total: n_ref,
            avg_path_length,
        } => {
            let k = avg_degree_random(*n_ref, *avg_path_length)?.as_f64();
            if k > (n_total - 1) as f64 {
                return Err(Error::InfeasibleDegreeSequence {
                    max_degree: k,
                    n_nodes: n_total,
                });
            }
            check_size(n_total as f64 * k / 2.0)?;
            let p = k / (n_total - 1) as f64;
            let edges = gnp_edges(n_total as usize, p, &mut rng);
            Ok(SampledGraph::from_edges(n_total as usize, edges, seed))
        }
        DegreeDistribution::PowerLaw(law) => {
            let k_max = law.max_degree(n_total)?.as_f64().floor();
            if k_max >= n_total as f64 {
                return Err(Error::InfeasibleDegreeSequence {
                    max_degree: k_max,
                    n_nodes: n_total,
                });
            }
            check_size(n_total as f64 * law.mean_degree(n_total)?.as_f64() / 2.0)?;
            let mut degrees = law.sample_degrees(n_total, n_total as usize, &mut rng)?;
            if degrees.iter().sum::<u64>() % 2 == 1 {
                let i = rng.random_range(0..degrees.len());
                degrees[i] += 1;
            }
            let mut stubs: Vec<u32> = degrees
                .iter()
                .enumerate()
                .flat_map(|(node, &d)| std::iter::repeat_n(node as u32, d as usize))
                .collect();
            stubs.shuffle(&mut rng);
            let edges = stubs.chunks_exact(2).map(|pair| (pair[0], pair[1]));
            let mut graph = SampledGraph::from_edges(n_total as usize, edges, seed);
            graph.degree_sequence = Some(degrees);
            Ok(graph)
        }
    }
}

fn check_size(expected_edges: f64) -> Result<()> {
    if expected_edges > MAX_SAMPLED_EDGES as f64 {
        return Err(Error::GraphTooLarge {
            edges: expected_edges,
            limit: MAX_SAMPLED_EDGES,
        });
    }
    Ok(())
}

/// `G(n, p)` by geometric skipping over the lower-triangular pair index.
fn gnp_edges<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<(u32, u32)> {
    let mut edges = Vec::with_capacity((p * (n * (n - 1)) as f64 / 2.0 * 1.05) as usize);
    if p <= 0.0 {
        return edges;
    }
    if p >= 1.0 {
        for v in 1..n {
            for w in 0..v {
                edges.push((w as u32, v as u32));
            }
        }
        return edges;
    }
    let log_q = (-p).ln_1p();
    let (mut v, mut w) = (1usize, -1i64);
    while v < n {
        let r: f64 = rng.random();
        w += 1 + ((-r).ln_1p() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as u32, v as u32));
        }
    }
    edges
}
