//! Reference implementations shared by the integration tests. None of this
//! calls into the library.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Mean of `p(k) ∝ k^-α` on `k_min..=k_max` by direct summation. Terms past
/// a million are replaced by the midpoint-rule integral, which is exact to
/// far better than a part per million out there.
pub fn discrete_mean(alpha: f64, k_min: u64, k_max: u64) -> f64 {
    const DIRECT: u64 = 1_000_000;
    let direct_end = k_max.min(k_min + DIRECT);
    let (mut z, mut m) = (0.0, 0.0);
    // small terms first
    for k in (k_min..=direct_end).rev() {
        let p = (k as f64).powf(-alpha);
        z += p;
        m += p * k as f64;
    }
    if k_max > direct_end {
        let (a, b) = (direct_end as f64 + 0.5, k_max as f64 + 0.5);
        let integral = |s: f64| -> f64 {
            if (s - 1.0).abs() < 1e-12 {
                (b / a).ln()
            } else {
                (b.powf(1.0 - s) - a.powf(1.0 - s)) / (1.0 - s)
            }
        };
        z += integral(alpha);
        m += integral(alpha - 1.0);
    }
    m / z
}

pub fn natural_cutoff(alpha: f64, k_min: u64, n: u64) -> u64 {
    (k_min as f64 * (n as f64).powf(1.0 / (alpha - 1.0))).floor() as u64
}

/// Largest of `n` draws from an uncut continuous Pareto law, which the
/// natural cutoff is meant to predict.
pub fn pareto_max(alpha: f64, k_min: f64, n: u64, rng: &mut ChaCha8Rng) -> f64 {
    (0..n)
        .map(|_| {
            let u: f64 = 1.0 - rng.random::<f64>();
            k_min * u.powf(-1.0 / (alpha - 1.0))
        })
        .fold(0.0, f64::max)
}

/// Median over `runs` of the largest of `n` uncut Pareto draws.
pub fn median_sampled_max(alpha: f64, k_min: f64, n: u64, runs: usize, rng: &mut ChaCha8Rng) -> f64 {
    let mut maxima: Vec<f64> = (0..runs).map(|_| pareto_max(alpha, k_min, n, rng)).collect();
    maxima.sort_by(f64::total_cmp);
    let mid = runs / 2;
    if runs % 2 == 1 {
        maxima[mid]
    } else {
        (maxima[mid - 1] * maxima[mid]).sqrt()
    }
}

/// Two pulse-coupled oscillators a fixed delay apart.
#[derive(Debug, Clone, Copy)]
pub struct Pair {
    pub period: f64,
    pub delay: f64,
    pub coupling: f64,
    pub refractory: f64,
    pub phases: [f64; 2],
}

/// Fire times of both nodes up to `horizon`, found by iterating the pair's
/// return map: each step jumps straight to whichever comes first, the next
/// threshold crossing or the next spike arrival, and updates the crossing
/// times in closed form. State is just the two due times, the two last
/// fire times and the spikes still in flight.
pub fn pair_return_map(p: Pair, horizon: f64) -> [Vec<f64>; 2] {
    let t = p.period;
    let mut due = [t - p.phases[0], t - p.phases[1]];
    let mut fired: [Vec<f64>; 2] = [Vec::new(), Vec::new()];
    // (arrival, target)
    let mut flight: Vec<(f64, usize)> = Vec::new();
    loop {
        let next_fire = if due[0] <= due[1] { 0 } else { 1 };
        let next_arrival = flight
            .iter()
            .enumerate()
            .min_by(|a, b| a.1 .0.total_cmp(&b.1 .0))
            .map(|(i, &(at, _))| (i, at));
        let step_fire = match next_arrival {
            Some((_, at)) => due[next_fire] <= at,
            None => true,
        };
        let (node, now) = if step_fire {
            (next_fire, due[next_fire])
        } else {
            let (i, at) = next_arrival.unwrap();
            let (_, target) = flight.swap_remove(i);
            let phase = t - (due[target] - at);
            if phase < p.refractory * t {
                continue;
            }
            if phase + p.coupling * t < t {
                due[target] -= p.coupling * t;
                continue;
            }
            (target, at)
        };
        if now > horizon {
            return fired;
        }
        fired[node].push(now);
        due[node] = now + t;
        if p.coupling > 0.0 {
            flight.push((now + p.delay, 1 - node));
        }
    }
}

/// Pairs spanning locking, drifting, delays beyond a period and the
/// extremes of the coupling and refractory ranges. Period 1, delays in
/// periods.
pub fn oracle_cases() -> Vec<Pair> {
    let pair = |delay, phases, coupling, refractory| Pair {
        period: 1.0,
        delay,
        coupling,
        refractory,
        phases,
    };
    vec![
        pair(0.13, [0.0, 0.5], 0.3, 0.35),
        pair(0.37, [0.1, 0.72], 0.12, 0.25),
        pair(0.05, [0.3, 0.41], 0.45, 0.0),
        pair(1.7, [0.0, 0.33], 0.2, 0.1),
        pair(3.0, [0.0, 0.5], 0.3, 0.35),
        pair(0.61, [0.93, 0.07], 0.5, 0.49),
    ]
}
