// SPDX-License-Identifier: Apache-2.0

//! Static longest-path analysis over the gate DAG.
//!
//! C-elements are treated as ordinary nodes: arrival at a gate output is the
//! latest input arrival plus the gate's delay.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use super::{validate, NetId, Netlist, Violation};
use crate::cells::{cell_spec, CellKind};

#[derive(Debug, Error, PartialEq)]
pub enum TimingError {
    #[error("netlist `{name}` is invalid: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid {
        name: String,
        violations: Vec<Violation>,
    },
    #[error("no path from the given sources to the given sinks")]
    NoPath,
}

/// Per-kind gate delays.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DelayTable {
    delays: BTreeMap<CellKind, f64>,
}

impl DelayTable {
    /// Nominal delays from the cell catalog (1.0 for every kind).
    pub fn unit() -> Self {
        DelayTable {
            delays: CellKind::ALL
                .iter()
                .map(|&k| (k, cell_spec(k).delay))
                .collect(),
        }
    }

    /// Overrides one kind's delay. Delays must be strictly positive.
    pub fn with(mut self, kind: CellKind, delay: f64) -> Self {
        assert!(delay > 0.0, "gate delays must be positive");
        self.delays.insert(kind, delay);
        self
    }

    pub fn delay(&self, kind: CellKind) -> f64 {
        self.delays[&kind]
    }
}

impl Default for DelayTable {
    fn default() -> Self {
        DelayTable::unit()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathReport {
    pub depth: f64,
    /// Gate kinds from source to sink.
    pub gates: Vec<CellKind>,
    pub gate_ids: Vec<String>,
    /// Source net followed by each gate's output net.
    pub nets: Vec<String>,
    pub census: BTreeMap<CellKind, usize>,
}

impl PathReport {
    pub fn transistors(&self) -> u64 {
        self.gates
            .iter()
            .map(|&k| u64::from(cell_spec(k).transistors))
            .sum()
    }
}

/// Longest path from any input rail to any output rail.
pub fn static_longest_path(netlist: &Netlist, delays: &DelayTable) -> Result<PathReport, TimingError> {
    let sources: Vec<NetId> = netlist
        .inputs
        .iter()
        .flat_map(|p| [p.rail1, p.rail0])
        .collect();
    let sinks: Vec<NetId> = netlist
        .outputs
        .iter()
        .flat_map(|p| [p.rail1, p.rail0])
        .collect();
    longest_path_between(netlist, &sources, &sinks, delays)
}

/// Longest path that starts at one of `sources` and ends at one of `sinks`.
/// Arrival times only propagate from `sources`.
pub fn longest_path_between(
    netlist: &Netlist,
    sources: &[NetId],
    sinks: &[NetId],
    delays: &DelayTable,
) -> Result<PathReport, TimingError> {
    let verdict = validate(netlist);
    if !verdict.is_valid() {
        return Err(TimingError::Invalid {
            name: netlist.name.clone(),
            violations: verdict.violations,
        });
    }
    let order = netlist.topological_order().expect("validated netlist is acyclic");

    let mut arrival: Vec<Option<f64>> = vec![None; netlist.nets.len()];
    // Gate that set each net's arrival, and the input net it came through.
    let mut via: Vec<Option<(usize, NetId)>> = vec![None; netlist.nets.len()];
    for &s in sources {
        arrival[s.0] = Some(0.0);
    }
    for gi in order {
        let g = &netlist.gates[gi];
        let mut best: Option<(f64, NetId)> = None;
        for &n in &g.inputs {
            if let Some(t) = arrival[n.0] {
                if best.map_or(true, |(bt, _)| t > bt) {
                    best = Some((t, n));
                }
            }
        }
        if let Some((t, n)) = best {
            let at = t + delays.delay(g.kind);
            if arrival[g.output.0].map_or(true, |cur| at > cur) {
                arrival[g.output.0] = Some(at);
                via[g.output.0] = Some((gi, n));
            }
        }
    }

    let mut end: Option<(f64, NetId)> = None;
    for &s in sinks {
        if let Some(t) = arrival[s.0] {
            if end.map_or(true, |(bt, _)| t > bt) {
                end = Some((t, s));
            }
        }
    }
    let (depth, mut net) = end.ok_or(TimingError::NoPath)?;

    let mut gates = Vec::new();
    let mut gate_ids = Vec::new();
    let mut nets = vec![netlist.net_name(net).to_string()];
    while let Some((gi, from)) = via[net.0] {
        let g = &netlist.gates[gi];
        gates.push(g.kind);
        gate_ids.push(g.id.clone());
        nets.push(netlist.net_name(from).to_string());
        net = from;
    }
    gates.reverse();
    gate_ids.reverse();
    nets.reverse();
    let mut census = BTreeMap::new();
    for &k in &gates {
        *census.entry(k).or_default() += 1;
    }
    Ok(PathReport {
        depth,
        gates,
        gate_ids,
        nets,
        census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::NetlistBuilder;

    #[test]
    fn single_gate_depth_one() {
        let mut b = NetlistBuilder::new("one");
        let (a1, a0) = b.input_pair("a", "a_1", "a_0");
        let (b1, b0) = b.input_pair("b", "b_1", "b_0");
        let y1 = b.gate(CellKind::Ao22, "y_1", &[a1, b0, a0, b1]);
        let y0 = b.gate(CellKind::Ao22, "y_0", &[a1, b1, a0, b0]);
        b.output_pair("y", y1, y0);
        let p = static_longest_path(&b.finish(), &DelayTable::unit()).unwrap();
        assert_eq!(p.depth, 1.0);
        assert_eq!(p.gates, vec![CellKind::Ao22]);
        assert_eq!(p.nets.len(), 2);
    }

    #[test]
    fn weighted_depth_is_sum_of_delays() {
        let mut b = NetlistBuilder::new("chain");
        let (a1, a0) = b.input_pair("a", "a_1", "a_0");
        let x = b.gate(CellKind::C2, "x", &[a1, a0]);
        let y = b.gate(CellKind::Or2, "y", &[x, a1]);
        let z = b.gate(CellKind::And2, "z", &[a0, a1]);
        b.output_pair("o", y, z);
        let table = DelayTable::unit().with(CellKind::C2, 2.5);
        let p = static_longest_path(&b.finish(), &table).unwrap();
        assert_eq!(p.depth, 3.5);
        assert_eq!(p.gates, vec![CellKind::C2, CellKind::Or2]);
        assert_eq!(p.transistors(), 18);
    }

    #[test]
    fn invalid_netlist_rejected() {
        let mut b = NetlistBuilder::new("bad");
        let (a1, _) = b.input_pair("a", "a_1", "a_0");
        let y = b.gate(CellKind::And2, "y", &[a1]);
        b.output_pair("y", y, y);
        assert!(matches!(
            static_longest_path(&b.finish(), &DelayTable::unit()),
            Err(TimingError::Invalid { .. })
        ));
    }
}
