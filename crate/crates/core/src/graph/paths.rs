//! Hop-count shortest paths on sampled graphs.

use std::collections::VecDeque;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::SampledGraph;
use crate::error::{Error, Result};

/// Graphs up to this many nodes are measured exactly by default.
pub const EXACT_PATH_LENGTH_LIMIT: usize = 20_000;

/// Sources used by default above [`EXACT_PATH_LENGTH_LIMIT`].
pub const DEFAULT_SAMPLED_SOURCES: usize = 256;

/// Fraction of nodes the giant component must hold.
pub const MIN_GIANT_COVERAGE: f64 = 0.9;

const UNREACHED: u32 = u32::MAX;

/// Which BFS sources contribute to the average.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceSample {
    All,
    Sampled { count: usize, seed: u64 },
}

impl SourceSample {
    /// Exact below [`EXACT_PATH_LENGTH_LIMIT`] nodes, otherwise
    /// [`DEFAULT_SAMPLED_SOURCES`] random sources.
    pub fn auto(n_nodes: usize, seed: u64) -> Self {
        if n_nodes <= EXACT_PATH_LENGTH_LIMIT {
            Self::All
        } else {
            Self::Sampled {
                count: DEFAULT_SAMPLED_SOURCES,
                seed,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathLengthReport {
    /// Mean hop count over ordered pairs of distinct giant-component nodes.
    pub mean: f64,
    /// Standard error of `mean`; `None` when every source was used.
    pub std_error: Option<f64>,
    pub n_nodes: usize,
    pub giant_size: usize,
    pub n_components: usize,
    pub coverage: f64,
    pub sources: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component index of every node.
    pub labels: Vec<u32>,
    /// Size of each component.
    pub sizes: Vec<usize>,
}

impl Components {
    /// Index of the largest component (lowest index on ties).
    pub fn giant(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, &size) in self.sizes.iter().enumerate() {
            if best.is_none_or(|b| size > self.sizes[b]) {
                best = Some(i);
            }
        }
        best
    }
}

pub fn components(graph: &SampledGraph) -> Components {
    let n = graph.n_nodes();
    let mut labels = vec![UNREACHED; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if labels[start] != UNREACHED {
            continue;
        }
        let label = sizes.len() as u32;
        labels[start] = label;
        queue.push_back(start);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &u in graph.neighbors(v) {
                if labels[u as usize] == UNREACHED {
                    labels[u as usize] = label;
                    queue.push_back(u as usize);
                }
            }
        }
        sizes.push(size);
    }
    Components { labels, sizes }
}

/// Hop distance from `source` to every node; `u32::MAX` where unreachable.
pub fn bfs_distances(graph: &SampledGraph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; graph.n_nodes()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let next = dist[v] + 1;
        for &u in graph.neighbors(v) {
            if dist[u as usize] == UNREACHED {
                dist[u as usize] = next;
                queue.push_back(u as usize);
            }
        }
    }
    dist
}

/// Average shortest-path length over the giant component.
///
/// Fails when the graph has fewer than two nodes or the giant component
/// covers less than [`MIN_GIANT_COVERAGE`] of the nodes.
pub fn measure_avg_path_length(
    graph: &SampledGraph,
    sample: SourceSample,
) -> Result<PathLengthReport> {
    let n = graph.n_nodes();
    let comps = components(graph);
    let giant = comps.giant();
    let giant_size = giant.map_or(0, |g| comps.sizes[g]);
    let coverage = if n == 0 { 0.0 } else { giant_size as f64 / n as f64 };
    if giant_size < 2 || coverage < MIN_GIANT_COVERAGE {
        return Err(Error::Disconnected {
            n_nodes: n,
            giant: giant_size,
            components: comps.sizes.len(),
            required_coverage: MIN_GIANT_COVERAGE,
        });
    }
    let giant = giant.unwrap() as u32;
    let members: Vec<usize> = (0..n).filter(|&v| comps.labels[v] == giant).collect();
    let local = LocalGraph::new(graph, &members, &comps.labels, giant);

    let report = |mean, std_error, sources| PathLengthReport {
        mean,
        std_error,
        n_nodes: n,
        giant_size,
        n_components: comps.sizes.len(),
        coverage,
        sources,
    };

    match sample {
        SourceSample::Sampled { count, seed } if count < giant_size => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let sources = index::sample(&mut rng, giant_size, count.max(1)).into_vec();
            let per_source: Vec<f64> = sources
                .par_iter()
                .map(|&s| {
                    let total: u64 = local.bfs(s).iter().map(|&d| d as u64).sum();
                    total as f64 / (giant_size - 1) as f64
                })
                .collect();
            let m = per_source.len() as f64;
            let mean = per_source.iter().sum::<f64>() / m;
            let std_error = if per_source.len() > 1 {
                let var = per_source.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (m - 1.0);
                (var / m).sqrt()
            } else {
                f64::NAN
            };
            Ok(report(mean, Some(std_error), per_source.len()))
        }
        _ => {
            let total = local.all_pairs_distance_sum();
            let pairs = giant_size as f64 * (giant_size - 1) as f64;
            Ok(report(total as f64 / pairs, None, giant_size))
        }
    }
}

/// Giant component relabelled to `0..len`.
struct LocalGraph {
    offsets: Vec<usize>,
    adjacency: Vec<u32>,
}

/// Sources processed together by the bit-parallel BFS.
const WORDS: usize = 4;
const BATCH: usize = 64 * WORDS;
type Bits = [u64; WORDS];

impl LocalGraph {
    fn new(graph: &SampledGraph, members: &[usize], labels: &[u32], giant: u32) -> Self {
        let mut local_id = vec![UNREACHED; graph.n_nodes()];
        for (i, &v) in members.iter().enumerate() {
            local_id[v] = i as u32;
        }
        let mut offsets = Vec::with_capacity(members.len() + 1);
        let mut adjacency = Vec::new();
        offsets.push(0);
        for &v in members {
            adjacency.extend(graph.neighbors(v).iter().map(|&u| {
                debug_assert_eq!(labels[u as usize], giant);
                local_id[u as usize]
            }));
            offsets.push(adjacency.len());
        }
        Self { offsets, adjacency }
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.len()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v) {
                if dist[u as usize] == UNREACHED {
                    dist[u as usize] = dist[v] + 1;
                    queue.push_back(u as usize);
                }
            }
        }
        dist
    }

    /// Sum of hop distances over all ordered pairs, running [`BATCH`] BFS
    /// sources at once as bit lanes.
    fn all_pairs_distance_sum(&self) -> u64 {
        let n = self.len();
        let batches: Vec<usize> = (0..n).step_by(BATCH).collect();
        let sums: Vec<u64> = batches
            .par_iter()
            .map(|&start| self.batch_distance_sum(start, (start + BATCH).min(n)))
            .collect();
        sums.iter().sum()
    }

    fn batch_distance_sum(&self, start: usize, end: usize) -> u64 {
        let n = self.len();
        let mut visited: Vec<Bits> = vec![[0; WORDS]; n];
        let mut frontier: Vec<Bits> = vec![[0; WORDS]; n];
        let mut next: Vec<Bits> = vec![[0; WORDS]; n];
        for s in start..end {
            let lane = s - start;
            visited[s][lane / 64] |= 1 << (lane % 64);
            frontier[s][lane / 64] |= 1 << (lane % 64);
        }
        let mut total = 0u64;
        let mut level = 0u64;
        loop {
            level += 1;
            let mut reached = 0u64;
            for v in 0..n {
                let mut acc: Bits = [0; WORDS];
                for &u in self.neighbors(v) {
                    let f = &frontier[u as usize];
                    for w in 0..WORDS {
                        acc[w] |= f[w];
                    }
                }
                let seen = &mut visited[v];
                for w in 0..WORDS {
                    acc[w] &= !seen[w];
                    seen[w] |= acc[w];
                    reached += acc[w].count_ones() as u64;
                }
                next[v] = acc;
            }
            if reached == 0 {
                return total;
            }
            total += level * reached;
            std::mem::swap(&mut frontier, &mut next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> SampledGraph {
        SampledGraph::from_edges(n as usize, (1..n).map(|i| (i - 1, i)), 0)
    }

    fn complete(n: u32) -> SampledGraph {
        SampledGraph::from_edges(
            n as usize,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
            0,
        )
    }

    #[test]
    fn three_node_path() {
        let r = measure_avg_path_length(&path(3), SourceSample::All).unwrap();
        assert!((r.mean - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.std_error, None);
        assert_eq!(r.coverage, 1.0);
    }

    #[test]
    fn complete_graph_is_one_hop() {
        let r = measure_avg_path_length(&complete(5), SourceSample::All).unwrap();
        assert_eq!(r.mean, 1.0);
    }

    #[test]
    fn bit_parallel_matches_queue_bfs() {
        // long path plus chords, more than one batch of sources
        let n = 700u32;
        let edges = (1..n)
            .map(|i| (i - 1, i))
            .chain((0..n).step_by(7).map(|i| (i, (i * 13 + 5) % n)));
        let g = SampledGraph::from_edges(n as usize, edges, 0);
        let brute: u64 = (0..g.n_nodes())
            .map(|s| bfs_distances(&g, s).iter().map(|&d| d as u64).sum::<u64>())
            .sum();
        let r = measure_avg_path_length(&g, SourceSample::All).unwrap();
        let pairs = (n as f64) * (n as f64 - 1.0);
        assert!((r.mean - brute as f64 / pairs).abs() < 1e-12);
    }

    #[test]
    fn sampling_all_sources_is_exact() {
        let g = path(50);
        let exact = measure_avg_path_length(&g, SourceSample::All).unwrap();
        let sampled =
            measure_avg_path_length(&g, SourceSample::Sampled { count: 50, seed: 1 }).unwrap();
        assert_eq!(exact, sampled);
        let est = measure_avg_path_length(&g, SourceSample::Sampled { count: 20, seed: 1 }).unwrap();
        assert_eq!(est.sources, 20);
        assert!(est.std_error.unwrap() > 0.0);
        assert!((est.mean - exact.mean).abs() < 5.0 * est.std_error.unwrap());
    }

    #[test]
    fn giant_component_only() {
        // 19-node path plus an isolated node: 95% coverage
        let g = SampledGraph::from_edges(20, (1..19).map(|i| (i - 1, i)), 0);
        let r = measure_avg_path_length(&g, SourceSample::All).unwrap();
        assert_eq!(r.giant_size, 19);
        assert_eq!(r.n_components, 2);
        let expected = measure_avg_path_length(&path(19), SourceSample::All).unwrap().mean;
        assert_eq!(r.mean, expected);
    }

    #[test]
    fn fragmented_graphs_are_rejected() {
        let g = SampledGraph::from_edges(10, [(0, 1), (2, 3), (4, 5)], 0);
        match measure_avg_path_length(&g, SourceSample::All) {
            Err(Error::Disconnected { giant, components, .. }) => {
                assert_eq!(giant, 2);
                assert_eq!(components, 7);
            }
            other => panic!("{other:?}"),
        }
        let empty = SampledGraph::from_edges(0, [], 0);
        assert!(measure_avg_path_length(&empty, SourceSample::All).is_err());
    }

    #[test]
    fn auto_switches_to_sampling() {
        assert_eq!(SourceSample::auto(10_000, 3), SourceSample::All);
        assert_eq!(
            SourceSample::auto(50_000, 3),
            SourceSample::Sampled { count: 256, seed: 3 }
        );
    }
}
