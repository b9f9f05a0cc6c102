// SPDX-License-Identifier: Apache-2.0

//! Event-driven two-valued gate simulator for the 4-phase return-to-zero
//! handshake.
//!
//! Gates use transport delay: every change of a gate's computed output is
//! scheduled after that gate's delay, so hazards show up as extra events
//! rather than being filtered. Wires have zero delay. Primary inputs switch
//! together at the start of a phase. A phase runs until the event queue is
//! empty; equal timestamps are processed as one batch, ordered by net id.
//!
//! Monitors, all optional:
//! - invalid pair: a declared port pair reaches (1,1)
//! - monotonicity: a falling edge in a data phase or a rising edge in a
//!   return-to-zero phase
//! - acknowledgement: a lookahead block's primary carry pair returns to
//!   NULL before its propagate node `N` falls (a premature return-to-zero
//!   that leaves `N` as a gate orphan)
//! - alias race (observation only): an alias carry pair returns to NULL
//!   before `N` falls

mod adder;

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cells::{classify_pair, eval_unchecked, DualRailValue};
use crate::netlist::{validate, DelayTable, NetId, Netlist, Violation};

pub use adder::{
    exhaustive_vectors, format_vectors, parse_vectors, random_vectors, run_handshake_cycles,
    mask_bits, run_cycle, run_handshake_cycles_with, stress_vectors, AdderPorts, AdderVector, CycleResult, VectorParseError,
};

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    #[error("netlist `{name}` is invalid: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidNetlist {
        name: String,
        violations: Vec<Violation>,
    },
    #[error("expected {expected} input values, got {actual}")]
    TargetCount { expected: usize, actual: usize },
    #[error("input `{0}` cannot be driven to INVALID")]
    InvalidTarget(String),
    #[error("{phase} phase requested while input `{label}` is {value}")]
    Protocol {
        phase: Phase,
        label: String,
        value: DualRailValue,
    },
    #[error("deadlock in {phase} phase: outputs {} never completed", .stuck.join(", "))]
    Deadlock { phase: Phase, stuck: Vec<String> },
    #[error("bad delay model: {0}")]
    DelayModel(String),
    #[error("netlist is not an adder: {0}")]
    NotAnAdder(String),
    #[error("vector {index}: {source}")]
    Vector {
        index: usize,
        #[source]
        source: Box<SimError>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Phase {
    Data,
    Rtz,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Data => "DATA",
            Phase::Rtz => "RTZ",
        })
    }
}

pub const DEFAULT_RANDOM_RANGE: (f64, f64) = (0.5, 2.0);

#[derive(Debug, Clone, PartialEq)]
pub enum DelayModel {
    /// 1.0 per gate.
    Unit,
    /// Delay by cell kind.
    Table(DelayTable),
    /// Independent uniform draw per gate instance, reproducible from `seed`.
    Random { seed: u64, min: f64, max: f64 },
}

impl DelayModel {
    pub fn random(seed: u64) -> Self {
        let (min, max) = DEFAULT_RANDOM_RANGE;
        DelayModel::Random { seed, min, max }
    }

    /// Resolves the model to one delay per gate, in gate order.
    pub fn gate_delays(&self, netlist: &Netlist) -> Result<Vec<f64>, SimError> {
        match self {
            DelayModel::Unit => Ok(vec![1.0; netlist.gates.len()]),
            DelayModel::Table(t) => Ok(netlist.gates.iter().map(|g| t.delay(g.kind)).collect()),
            DelayModel::Random { seed, min, max } => {
                if !(*min > 0.0 && max >= min && max.is_finite()) {
                    return Err(SimError::DelayModel(format!(
                        "random range [{min}, {max}] must be positive and ordered"
                    )));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                if min == max {
                    return Ok(vec![*min; netlist.gates.len()]);
                }
                let dist = Uniform::new(*min, *max);
                Ok(netlist.gates.iter().map(|_| dist.sample(&mut rng)).collect())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonitorConfig {
    pub invalid_pair: bool,
    pub monotonicity: bool,
    pub acknowledgement: bool,
    pub alias_race: bool,
}

impl Default for MonitorConfig {
    fn default() -> Self {
        MonitorConfig {
            invalid_pair: true,
            monotonicity: true,
            acknowledgement: true,
            alias_race: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SimOptions {
    pub monitors: MonitorConfig,
    /// Keep every net transition in [`PhaseTrace::events`].
    pub record_events: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Event {
    pub time: f64,
    pub net: NetId,
    pub value: bool,
}

/// Monitor findings that make a run fail.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum SimViolation {
    InvalidPair { label: String, time: f64 },
    NonMonotonic { net: String, time: f64, value: bool },
    Deadlock { stuck: Vec<String> },
    Unacknowledged { probe: String, probe_time: f64, ack_time: f64 },
}

impl fmt::Display for SimViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimViolation::InvalidPair { label, time } => {
                write!(f, "pair `{label}` INVALID at t={time}")
            }
            SimViolation::NonMonotonic { net, time, value } => write!(
                f,
                "non-monotonic {} edge on `{net}` at t={time}",
                if *value { "rising" } else { "falling" }
            ),
            SimViolation::Deadlock { stuck } => write!(f, "deadlock: {} incomplete", stuck.join(", ")),
            SimViolation::Unacknowledged {
                probe,
                probe_time,
                ack_time,
            } => write!(
                f,
                "premature return-to-zero: carry pair NULL at t={ack_time} before `{probe}` fell at t={probe_time}"
            ),
        }
    }
}

/// Monitor findings that are reported but never fail a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Observation {
    AliasFellBeforeN { block: String, alias_time: f64, n_time: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseTrace {
    pub phase: Phase,
    pub events: Vec<Event>,
    /// Instant the outputs last became all valid (DATA) or all NULL (RTZ).
    pub completion_time: Option<f64>,
    pub quiescence_time: f64,
    pub transitions: usize,
    pub violations: Vec<SimViolation>,
    pub observations: Vec<Observation>,
}

/// Probe nets of one lookahead block, found by label.
#[derive(Debug, Clone)]
struct BlockProbes {
    name: String,
    n: NetId,
    carry: Option<(NetId, NetId)>,
    alias: Option<(NetId, NetId)>,
}

fn block_probes(netlist: &Netlist) -> Vec<BlockProbes> {
    let mut blocks = Vec::new();
    for p in &netlist.probes {
        let Some(prefix) = p.label.strip_suffix('N') else {
            continue;
        };
        if !(prefix.is_empty() || prefix.ends_with('.')) {
            continue;
        }
        let pair = |a: &str, b: &str| {
            Some((
                netlist.probe(&format!("{prefix}{a}"))?,
                netlist.probe(&format!("{prefix}{b}"))?,
            ))
        };
        blocks.push(BlockProbes {
            name: p.label.clone(),
            n: p.net,
            carry: pair("C41", "C40"),
            alias: pair("C41alias", "C40alias"),
        });
    }
    blocks
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Scheduled {
    time: f64,
    net: usize,
    seq: u64,
    value: bool,
}

impl Eq for Scheduled {}

impl Ord for Scheduled {
    // Reversed so the max-heap pops the earliest event first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .time
            .total_cmp(&self.time)
            .then(other.net.cmp(&self.net))
            .then(other.seq.cmp(&self.seq))
    }
}

impl PartialOrd for Scheduled {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Simulation state for one netlist under one delay assignment.
pub struct Simulator<'a> {
    netlist: &'a Netlist,
    delays: Vec<f64>,
    fanout: Vec<Vec<usize>>,
    values: Vec<bool>,
    /// Value each net will hold once its pending events have fired.
    projected: Vec<bool>,
    /// Declared pairs containing each net: indices into inputs, then outputs.
    pairs_of_net: Vec<Vec<usize>>,
    output_of_net: Vec<bool>,
    blocks: Vec<BlockProbes>,
    options: SimOptions,
    queue: BinaryHeap<Scheduled>,
    seq: u64,
    // Scratch, reused across phases.
    last_change: Vec<Option<f64>>,
    gate_mark: Vec<u64>,
    epoch: u64,
}

impl<'a> Simulator<'a> {
    pub fn new(netlist: &'a Netlist, delays: &DelayModel, options: SimOptions) -> Result<Self, SimError> {
        let verdict = validate(netlist);
        if !verdict.is_valid() {
            return Err(SimError::InvalidNetlist {
                name: netlist.name.clone(),
                violations: verdict.violations,
            });
        }
        let delays = delays.gate_delays(netlist)?;
        Ok(Self::with_gate_delays(netlist, delays, options))
    }

    /// Builds a simulator from explicit per-gate delays (gate order).
    /// The netlist must already be valid.
    pub fn with_gate_delays(netlist: &'a Netlist, delays: Vec<f64>, options: SimOptions) -> Self {
        assert_eq!(delays.len(), netlist.gates.len());
        assert!(delays.iter().all(|&d| d > 0.0), "gate delays must be positive");
        let nets = netlist.nets.len();
        let mut pairs_of_net = vec![Vec::new(); nets];
        let mut output_of_net = vec![false; nets];
        for (i, p) in netlist.inputs.iter().chain(&netlist.outputs).enumerate() {
            for r in [p.rail1, p.rail0] {
                if !pairs_of_net[r.0].contains(&i) {
                    pairs_of_net[r.0].push(i);
                }
            }
        }
        for p in &netlist.outputs {
            output_of_net[p.rail1.0] = true;
            output_of_net[p.rail0.0] = true;
        }
        Simulator {
            netlist,
            delays,
            fanout: netlist.fanout(),
            values: vec![false; nets],
            projected: vec![false; nets],
            pairs_of_net,
            output_of_net,
            blocks: block_probes(netlist),
            options,
            queue: BinaryHeap::new(),
            seq: 0,
            last_change: vec![None; nets],
            gate_mark: vec![0; netlist.gates.len()],
            epoch: 0,
        }
    }

    pub fn netlist(&self) -> &Netlist {
        self.netlist
    }

    pub fn gate_delays(&self) -> &[f64] {
        &self.delays
    }

    /// Returns every net to 0.
    pub fn reset(&mut self) {
        self.values.fill(false);
        self.projected.fill(false);
        self.queue.clear();
    }

    pub fn value(&self, net: NetId) -> bool {
        self.values[net.0]
    }

    pub fn pair_value(&self, rail1: NetId, rail0: NetId) -> DualRailValue {
        classify_pair(self.values[rail1.0], self.values[rail0.0])
    }

    pub fn input_values(&self) -> Vec<DualRailValue> {
        self.netlist
            .inputs
            .iter()
            .map(|p| self.pair_value(p.rail1, p.rail0))
            .collect()
    }

    pub fn output_values(&self) -> Vec<DualRailValue> {
        self.netlist
            .outputs
            .iter()
            .map(|p| self.pair_value(p.rail1, p.rail0))
            .collect()
    }

    fn outputs_complete(&self, phase: Phase) -> bool {
        self.netlist.outputs.iter().all(|p| {
            let v = self.pair_value(p.rail1, p.rail0);
            match phase {
                Phase::Data => v.is_valid(),
                Phase::Rtz => v == DualRailValue::Null,
            }
        })
    }

    fn schedule(&mut self, time: f64, net: NetId, value: bool) {
        self.seq += 1;
        self.queue.push(Scheduled {
            time,
            net: net.0,
            seq: self.seq,
            value,
        });
    }

    /// Handshake phase with protocol checks. A data phase must start from
    /// all-NULL inputs; a phase that goes quiet before its outputs complete
    /// is a deadlock.
    pub fn simulate_phase(&mut self, phase: Phase, targets: &[DualRailValue]) -> Result<PhaseTrace, SimError> {
        if phase == Phase::Data {
            for (p, v) in self.netlist.inputs.iter().zip(self.input_values()) {
                if v != DualRailValue::Null {
                    return Err(SimError::Protocol {
                        phase,
                        label: p.label.clone(),
                        value: v,
                    });
                }
            }
        }
        let trace = self.settle(phase, targets)?;
        if trace.completion_time.is_none() {
            return Err(SimError::Deadlock {
                phase,
                stuck: self.stuck_outputs(phase),
            });
        }
        Ok(trace)
    }

    fn stuck_outputs(&self, phase: Phase) -> Vec<String> {
        self.netlist
            .outputs
            .iter()
            .filter(|p| {
                let v = self.pair_value(p.rail1, p.rail0);
                match phase {
                    Phase::Data => !v.is_valid(),
                    Phase::Rtz => v != DualRailValue::Null,
                }
            })
            .map(|p| p.label.clone())
            .collect()
    }

    /// Drives the inputs to `targets` at t=0 and runs to quiescence. An
    /// incomplete phase is not an error here; `completion_time` is `None`.
    pub fn settle(&mut self, phase: Phase, targets: &[DualRailValue]) -> Result<PhaseTrace, SimError> {
        let netlist = self.netlist;
        if targets.len() != netlist.inputs.len() {
            return Err(SimError::TargetCount {
                expected: netlist.inputs.len(),
                actual: targets.len(),
            });
        }
        for (p, &t) in netlist.inputs.iter().zip(targets) {
            if t == DualRailValue::Invalid {
                return Err(SimError::InvalidTarget(p.label.clone()));
            }
        }

        let monitors = self.options.monitors;
        let mut trace = PhaseTrace {
            phase,
            events: Vec::new(),
            completion_time: None,
            quiescence_time: 0.0,
            transitions: 0,
            violations: Vec::new(),
            observations: Vec::new(),
        };
        self.last_change.fill(None);
        let n_declared = netlist.inputs.len() + netlist.outputs.len();
        let mut invalid_seen = vec![false; n_declared];

        for (p, &t) in netlist.inputs.iter().zip(targets) {
            let (r1, r0) = t.rails();
            for (net, v) in [(p.rail1, r1), (p.rail0, r0)] {
                if self.projected[net.0] != v {
                    self.projected[net.0] = v;
                    self.schedule(0.0, net, v);
                }
            }
        }
        if self.outputs_complete(phase) {
            trace.completion_time = Some(0.0);
        }

        let mut batch: Vec<Scheduled> = Vec::new();
        let mut touched_pairs: Vec<usize> = Vec::new();
        let mut affected: Vec<usize> = Vec::new();
        while let Some(first) = self.queue.pop() {
            let now = first.time;
            batch.clear();
            batch.push(first);
            while self.queue.peek().is_some_and(|e| e.time == now) {
                batch.push(self.queue.pop().expect("peeked"));
            }

            self.epoch += 1;
            touched_pairs.clear();
            affected.clear();
            let mut output_touched = false;
            for ev in &batch {
                if self.values[ev.net] == ev.value {
                    continue;
                }
                self.values[ev.net] = ev.value;
                self.last_change[ev.net] = Some(now);
                trace.transitions += 1;
                if self.options.record_events {
                    trace.events.push(Event {
                        time: now,
                        net: NetId(ev.net),
                        value: ev.value,
                    });
                }
                let expected_rise = phase == Phase::Data;
                if monitors.monotonicity && ev.value != expected_rise {
                    trace.violations.push(SimViolation::NonMonotonic {
                        net: netlist.nets[ev.net].clone(),
                        time: now,
                        value: ev.value,
                    });
                }
                touched_pairs.extend_from_slice(&self.pairs_of_net[ev.net]);
                output_touched |= self.output_of_net[ev.net];
                for &g in &self.fanout[ev.net] {
                    if self.gate_mark[g] != self.epoch {
                        self.gate_mark[g] = self.epoch;
                        affected.push(g);
                    }
                }
            }

            if monitors.invalid_pair {
                for &pi in &touched_pairs {
                    let p = netlist
                        .inputs
                        .get(pi)
                        .unwrap_or_else(|| &netlist.outputs[pi - netlist.inputs.len()]);
                    if !invalid_seen[pi] && self.values[p.rail1.0] && self.values[p.rail0.0] {
                        invalid_seen[pi] = true;
                        trace.violations.push(SimViolation::InvalidPair {
                            label: p.label.clone(),
                            time: now,
                        });
                    }
                }
            }
            if output_touched {
                if self.outputs_complete(phase) {
                    trace.completion_time.get_or_insert(now);
                } else {
                    trace.completion_time = None;
                }
            }

            affected.sort_unstable();
            for &gi in &affected {
                let g = &netlist.gates[gi];
                let mut ins = [false; 4];
                for (slot, n) in ins.iter_mut().zip(&g.inputs) {
                    *slot = self.values[n.0];
                }
                let out = g.output;
                let new = eval_unchecked(g.kind, &ins[..g.inputs.len()], self.projected[out.0]);
                if new != self.projected[out.0] {
                    self.projected[out.0] = new;
                    self.schedule(now + self.delays[gi], out, new);
                }
            }
            trace.quiescence_time = now;
        }

        if phase == Phase::Rtz {
            self.check_blocks(&mut trace);
        }
        Ok(trace)
    }

    /// Return-to-zero time of a pair that was valid at phase start and is
    /// NULL now.
    fn pair_null_time(&self, (r1, r0): (NetId, NetId)) -> Option<f64> {
        if self.values[r1.0] || self.values[r0.0] {
            return None;
        }
        match (self.last_change[r1.0], self.last_change[r0.0]) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(f64::MIN).max(b.unwrap_or(f64::MIN))),
        }
    }

    fn check_blocks(&self, trace: &mut PhaseTrace) {
        let monitors = self.options.monitors;
        for block in &self.blocks {
            let Some(n_time) = self.last_change[block.n.0].filter(|_| !self.values[block.n.0]) else {
                continue;
            };
            if monitors.acknowledgement {
                if let Some(ack_time) = block.carry.and_then(|c| self.pair_null_time(c)) {
                    if ack_time < n_time {
                        trace.violations.push(SimViolation::Unacknowledged {
                            probe: block.name.clone(),
                            probe_time: n_time,
                            ack_time,
                        });
                    }
                }
            }
            if monitors.alias_race {
                if let Some(alias_time) = block.alias.and_then(|c| self.pair_null_time(c)) {
                    if alias_time < n_time {
                        trace.observations.push(Observation::AliasFellBeforeN {
                            block: block.name.trim_end_matches('N').trim_end_matches('.').to_string(),
                            alias_time,
                            n_time,
                        });
                    }
                }
            }
        }
    }
}

/// One handshake phase on a fresh simulator: applies `targets` from the
/// given `state` (every net's level, indexed by net id).
pub fn simulate_phase(
    netlist: &Netlist,
    state: &[bool],
    phase: Phase,
    targets: &[DualRailValue],
    delays: &DelayModel,
) -> Result<PhaseTrace, SimError> {
    let mut sim = Simulator::new(
        netlist,
        delays,
        SimOptions {
            record_events: true,
            ..SimOptions::default()
        },
    )?;
    assert_eq!(state.len(), netlist.nets.len(), "state must cover every net");
    sim.values.copy_from_slice(state);
    sim.projected.copy_from_slice(state);
    sim.simulate_phase(phase, targets)
}

/// Trace export: one `time,net,value` record per event.
pub fn format_trace(netlist: &Netlist, events: &[Event]) -> String {
    let mut out = String::from("time,net,value\n");
    for e in events {
        out.push_str(&format!("{},{},{}\n", e.time, netlist.net_name(e.net), u8::from(e.value)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{CellKind, DualRailValue::*};
    use crate::generators::{gen_full_adder_eo, gen_rca, gen_scbclg};

    fn run(netlist: &Netlist, phase: Phase, targets: &[DualRailValue]) -> PhaseTrace {
        let state = vec![false; netlist.nets.len()];
        simulate_phase(netlist, &state, phase, targets, &DelayModel::Unit).unwrap()
    }

    #[test]
    fn fa_data_completes_in_two() {
        let fa = gen_full_adder_eo();
        // inputs: a0, b0, cin
        let t = run(&fa, Phase::Data, &[One, Zero, Zero]);
        assert_eq!(t.completion_time, Some(2.0));
        assert!(t.violations.is_empty());
    }

    #[test]
    fn rtz_after_data_returns_outputs_to_null() {
        let fa = gen_full_adder_eo();
        let mut sim = Simulator::new(&fa, &DelayModel::Unit, SimOptions::default()).unwrap();
        sim.simulate_phase(Phase::Data, &[One, One, Zero]).unwrap();
        assert_eq!(sim.output_values(), vec![Zero, One]);
        let t = sim.simulate_phase(Phase::Rtz, &[Null, Null, Null]).unwrap();
        assert!(t.violations.is_empty());
        assert_eq!(sim.output_values(), vec![Null, Null]);
        assert!(sim.values.iter().all(|&v| !v));
    }

    #[test]
    fn rca4_worst_vector_takes_five() {
        let rca = gen_rca(4).unwrap();
        // a = 0b1111, b = 0 (all propagate), cin = 1
        let mut targets = vec![One; 4];
        targets.extend([Zero; 4]);
        targets.push(One);
        let t = run(&rca, Phase::Data, &targets);
        assert_eq!(t.completion_time, Some(5.0));
    }

    #[test]
    fn data_phase_requires_null_inputs() {
        let fa = gen_full_adder_eo();
        let mut sim = Simulator::new(&fa, &DelayModel::Unit, SimOptions::default()).unwrap();
        sim.simulate_phase(Phase::Data, &[One, One, Zero]).unwrap();
        assert!(matches!(
            sim.simulate_phase(Phase::Data, &[One, One, Zero]),
            Err(SimError::Protocol { .. })
        ));
    }

    #[test]
    fn held_input_deadlocks() {
        let fa = gen_full_adder_eo();
        let mut sim = Simulator::new(&fa, &DelayModel::Unit, SimOptions::default()).unwrap();
        let err = sim.simulate_phase(Phase::Data, &[One, Null, Null]).unwrap_err();
        assert_eq!(
            err,
            SimError::Deadlock {
                phase: Phase::Data,
                stuck: vec!["s0".into(), "cout".into()]
            }
        );
    }

    #[test]
    fn alias_race_observed_when_n_is_slow() {
        let g = gen_scbclg(4, true).unwrap();
        let table = DelayTable::unit().with(CellKind::And4, 6.0);
        let mut sim = Simulator::new(&g, &DelayModel::Table(table), SimOptions::default()).unwrap();
        // all propagate (a=0xF, b=0), cin = 1: N = 1 and C41 via C2(N, C01)
        let mut data = vec![One; 4];
        data.extend([Zero; 4]);
        data.push(One);
        sim.simulate_phase(Phase::Data, &data).unwrap();
        let rtz = sim.simulate_phase(Phase::Rtz, &[Null; 9]).unwrap();
        assert!(rtz.violations.is_empty(), "{:?}", rtz.violations);
        assert_eq!(rtz.observations.len(), 1);
        let Observation::AliasFellBeforeN { alias_time, n_time, .. } = rtz.observations[0];
        assert!(alias_time < n_time);
        // the primary carry waits for N through its C-element
        let c41 = g.probe("C41").unwrap();
        let n = g.probe("N").unwrap();
        assert!(sim.last_change[c41.0].unwrap() > sim.last_change[n.0].unwrap());
    }

    #[test]
    fn random_delays_are_reproducible() {
        let g = gen_scbclg(4, true).unwrap();
        let a = DelayModel::random(11).gate_delays(&g).unwrap();
        let b = DelayModel::random(11).gate_delays(&g).unwrap();
        let c = DelayModel::random(12).gate_delays(&g).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(|&d| (0.5..2.0).contains(&d)));
        assert!(DelayModel::Random { seed: 1, min: 0.0, max: 1.0 }.gate_delays(&g).is_err());
    }

    #[test]
    fn trace_export_format() {
        let fa = gen_full_adder_eo();
        let t = run(&fa, Phase::Data, &[One, Zero, Zero]);
        let text = format_trace(&fa, &t.events);
        assert!(text.starts_with("time,net,value\n0,a0_1,1\n"));
        assert_eq!(text.lines().count(), 1 + t.transitions);
    }
}
