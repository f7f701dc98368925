use serde::{Deserialize, Serialize};

use super::engine::SpikeTrace;
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// How a trace is scored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SyncAnalysis<T> {
    /// Reference period `T`, s.
    pub period: T,
    /// Trailing window the order parameter is computed over, s.
    pub window: T,
    /// Order parameter at or above which the ensemble counts as locked.
    pub lock_threshold: T,
}

impl<T: Scalar> SyncAnalysis<T> {
    /// Final ten periods, lock at 0.9.
    pub fn new(period: T) -> Self {
        Self {
            period,
            window: period * T::lit(10.0),
            lock_threshold: T::lit(0.9),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SynchronyReport<T> {
    /// `|⟨e^{iθ}⟩|` over all spikes in the window, `θ = 2π (t mod T)/T`.
    pub order_parameter: T,
    pub locked: bool,
    pub lock_threshold: T,
    /// Circular mean fire time modulo `T` per node, s; `None` for nodes
    /// silent in the window.
    pub per_node_phase: Vec<Option<T>>,
    /// Start of the first period from which every later period is locked.
    pub convergence_time: Option<T>,
    pub spikes_in_window: usize,
}

fn phasor<T: Scalar>(time: T, period: T) -> (T, T) {
    let theta = T::TAU() * (time / period).fract();
    (theta.cos(), theta.sin())
}

/// Magnitude of the mean unit phasor of `times` taken modulo `period`.
/// `None` for an empty set.
pub fn order_parameter<T: Scalar>(times: impl IntoIterator<Item = T>, period: T) -> Option<T> {
    let (mut c, mut s, mut n) = (T::zero(), T::zero(), 0u64);
    for t in times {
        let (x, y) = phasor(t, period);
        c = c + x;
        s = s + y;
        n += 1;
    }
    if n == 0 {
        return None;
    }
    let n = T::from_count(n);
    Some((c / n).hypot(s / n).min(T::one()))
}

/// Scores how tightly a trace's spikes cluster in phase.
pub fn synchrony_metrics<T: Scalar>(
    trace: &SpikeTrace<T>,
    analysis: &SyncAnalysis<T>,
) -> Result<SynchronyReport<T>> {
    let SyncAnalysis {
        period,
        window,
        lock_threshold,
    } = *analysis;
    if !(period > T::zero()) {
        return domain("period", period.as_f64(), "must be positive");
    }
    if !(window > T::zero() && window <= trace.duration) {
        return domain("window", window.as_f64(), "window must be positive and no longer than the trace");
    }
    let end = trace.duration;
    let start = end - window;
    let in_window = || trace.fires.iter().filter(move |f| f.time >= start && f.time <= end);

    let order = order_parameter(in_window().map(|f| f.time), period).ok_or(Error::EmptyWindow {
        start: start.as_f64(),
        end: end.as_f64(),
    })?;

    let mut sums = vec![(T::zero(), T::zero(), 0u32); trace.n_nodes];
    for f in in_window() {
        let (x, y) = phasor(f.time, period);
        let e = &mut sums[f.node as usize];
        *e = (e.0 + x, e.1 + y, e.2 + 1);
    }
    let per_node_phase = sums
        .into_iter()
        .map(|(c, s, n)| {
            (n > 0).then(|| {
                let mut angle = s.atan2(c);
                if angle < T::zero() {
                    angle = angle + T::TAU();
                }
                (angle / T::TAU() * period) % period
            })
        })
        .collect();

    Ok(SynchronyReport {
        order_parameter: order,
        locked: order >= lock_threshold,
        lock_threshold,
        per_node_phase,
        convergence_time: convergence_time(trace, period, lock_threshold),
        spikes_in_window: in_window().count(),
    })
}

/// Scores consecutive whole periods `[kT, (k+1)T)` and returns the start of
/// the locked run that reaches the end of the trace.
fn convergence_time<T: Scalar>(trace: &SpikeTrace<T>, period: T, threshold: T) -> Option<T> {
    let bins = (trace.duration / period).floor().to_usize()?;
    if bins == 0 {
        return None;
    }
    let mut per_bin: Vec<Vec<T>> = vec![Vec::new(); bins];
    for f in &trace.fires {
        if let Some(b) = (f.time / period).floor().to_usize() {
            if b < bins {
                per_bin[b].push(f.time);
            }
        }
    }
    let mut first_locked = None;
    for (b, times) in per_bin.iter().enumerate().rev() {
        match order_parameter(times.iter().copied(), period) {
            Some(r) if r >= threshold => first_locked = Some(b),
            _ => break,
        }
    }
    first_locked.map(|b| T::from_count(b as u64) * period)
}
