use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::Serialize;

use super::config::SimConfig;
use crate::error::{Error, Result};
use crate::scalar::{cmp_finite, Scalar};

/// A node reaching full phase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fire<T> {
    pub node: u32,
    /// s
    pub time: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeliveryEffect {
    /// Arrived inside the refractory window.
    Refractory,
    /// Advanced the phase without reaching threshold.
    Advanced,
    /// Pushed the receiver to threshold; it fired at the delivery time.
    Triggered,
}

/// A spike reaching its target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Delivery<T> {
    pub source: u32,
    pub target: u32,
    pub emit_time: T,
    pub time: T,
    pub effect: DeliveryEffect,
}

/// Output of [`run`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpikeTrace<T> {
    pub n_nodes: usize,
    pub period: T,
    pub duration: T,
    /// Every firing, in processing order (non-decreasing time).
    pub fires: Vec<Fire<T>>,
    /// Only filled when the config asks for it.
    pub deliveries: Vec<Delivery<T>>,
    pub events_scheduled: u64,
}

impl<T: Scalar> SpikeTrace<T> {
    /// Fire times of one node, ascending.
    pub fn fire_times(&self, node: u32) -> Vec<T> {
        self.fires
            .iter()
            .filter(|f| f.node == node)
            .map(|f| f.time)
            .collect()
    }

    /// Shortest interval between consecutive spikes of any one node.
    pub fn min_inter_spike_interval(&self) -> Option<T> {
        let mut last: Vec<Option<T>> = vec![None; self.n_nodes];
        let mut min: Option<T> = None;
        for f in &self.fires {
            if let Some(prev) = last[f.node as usize] {
                let isi = f.time - prev;
                min = Some(min.map_or(isi, |m: T| m.min(isi)));
            }
            last[f.node as usize] = Some(f.time);
        }
        min
    }
}

#[derive(Debug, Clone, Copy)]
enum Kind<T> {
    /// Natural threshold crossing; stale once the node's epoch moves on.
    Fire { epoch: u64 },
    Deliver { target: u32, emit_time: T },
}

/// Queue entry, ordered by `(time, source, seq)`.
#[derive(Debug, Clone, Copy)]
struct Event<T> {
    time: T,
    source: u32,
    seq: u64,
    kind: Kind<T>,
}

impl<T: Scalar> PartialEq for Event<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Event<T> {}

impl<T: Scalar> PartialOrd for Event<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Event<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_finite(self.time, other.time)
            .then(self.source.cmp(&other.source))
            .then(self.seq.cmp(&other.seq))
    }
}

#[derive(Debug, Clone, Copy)]
struct Oscillator<T> {
    /// Phase `ref_phase` held at `ref_time`; phase grows at unit rate after.
    ref_time: T,
    ref_phase: T,
    epoch: u64,
    last_fire: Option<T>,
}

struct Engine<'a, T: Scalar> {
    cfg: &'a SimConfig<T>,
    neighbors: Option<Vec<Vec<u32>>>,
    nodes: Vec<Oscillator<T>>,
    queue: BinaryHeap<Reverse<Event<T>>>,
    seq: u64,
    trace: SpikeTrace<T>,
    refractory: T,
    kick: T,
}

impl<'a, T: Scalar> Engine<'a, T> {
    fn schedule(&mut self, time: T, source: u32, kind: Kind<T>) -> Result<()> {
        if self.seq >= self.cfg.max_events {
            return Err(Error::EventCapExceeded {
                cap: self.cfg.max_events,
                time: time.as_f64(),
            });
        }
        // nothing past the horizon can affect the trace
        if time <= self.cfg.duration {
            self.queue.push(Reverse(Event {
                time,
                source,
                seq: self.seq,
                kind,
            }));
        }
        self.seq += 1;
        Ok(())
    }

    fn delay(&self, from: usize, to: usize) -> T {
        let a = &self.cfg.positions[from];
        let b = &self.cfg.positions[to];
        let sq: T = a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum();
        sq.sqrt() / self.cfg.signal_velocity
    }

    fn fire(&mut self, node: u32, time: T) -> Result<()> {
        let i = node as usize;
        let osc = &mut self.nodes[i];
        debug_assert!(osc
            .last_fire
            .is_none_or(|prev| time - prev >= self.refractory || self.refractory == T::zero()));
        osc.ref_time = time;
        osc.ref_phase = T::zero();
        osc.epoch += 1;
        osc.last_fire = Some(time);
        let epoch = osc.epoch;
        self.trace.fires.push(Fire { node, time });
        self.schedule(time + self.cfg.period, node, Kind::Fire { epoch })?;

        if self.kick == T::zero() {
            return Ok(());
        }
        let targets: Vec<u32> = match &self.neighbors {
            Some(lists) => lists[i].clone(),
            None => (0..self.nodes.len() as u32).filter(|&j| j != node).collect(),
        };
        for target in targets {
            let at = time + self.delay(i, target as usize);
            self.schedule(
                at,
                node,
                Kind::Deliver {
                    target,
                    emit_time: time,
                },
            )?;
        }
        Ok(())
    }

    fn deliver(&mut self, source: u32, target: u32, emit_time: T, time: T) -> Result<()> {
        let period = self.cfg.period;
        let osc = &mut self.nodes[target as usize];
        let phase = osc.ref_phase + (time - osc.ref_time);
        let effect = if phase < self.refractory {
            DeliveryEffect::Refractory
        } else {
            let advanced = phase + self.kick;
            if advanced >= period {
                DeliveryEffect::Triggered
            } else {
                osc.ref_time = time;
                osc.ref_phase = advanced;
                osc.epoch += 1;
                DeliveryEffect::Advanced
            }
        };
        if self.cfg.record_deliveries {
            self.trace.deliveries.push(Delivery {
                source,
                target,
                emit_time,
                time,
                effect,
            });
        }
        match effect {
            DeliveryEffect::Refractory => Ok(()),
            DeliveryEffect::Triggered => self.fire(target, time),
            DeliveryEffect::Advanced => {
                let osc = self.nodes[target as usize];
                let next = time + (period - osc.ref_phase);
                self.schedule(next, target, Kind::Fire { epoch: osc.epoch })
            }
        }
    }
}

/// Runs the simulation to `config.duration`.
///
/// The run is fully deterministic: simultaneous events are processed in
/// order of source node, then scheduling order.
pub fn run<T: Scalar>(config: &SimConfig<T>) -> Result<SpikeTrace<T>> {
    config.validate()?;
    let n = config.n_nodes();
    let mut engine = Engine {
        cfg: config,
        neighbors: config.topology.neighbor_lists(n),
        nodes: config
            .initial_phases
            .iter()
            .map(|&phase| Oscillator {
                ref_time: T::zero(),
                ref_phase: phase,
                epoch: 0,
                last_fire: None,
            })
            .collect(),
        queue: BinaryHeap::new(),
        seq: 0,
        trace: SpikeTrace {
            n_nodes: n,
            period: config.period,
            duration: config.duration,
            fires: Vec::new(),
            deliveries: Vec::new(),
            events_scheduled: 0,
        },
        refractory: config.refractory_fraction * config.period,
        kick: config.coupling * config.period,
    };

    for i in 0..n {
        let first = config.period - config.initial_phases[i];
        engine.schedule(first, i as u32, Kind::Fire { epoch: 0 })?;
    }

    while let Some(Reverse(event)) = engine.queue.pop() {
        match event.kind {
            Kind::Fire { epoch } => {
                if engine.nodes[event.source as usize].epoch == epoch {
                    engine.fire(event.source, event.time)?;
                }
            }
            Kind::Deliver { target, emit_time } => {
                engine.deliver(event.source, target, emit_time, event.time)?;
            }
        }
    }
    engine.trace.events_scheduled = engine.seq;
    Ok(engine.trace)
}
