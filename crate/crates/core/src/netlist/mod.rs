// SPDX-License-Identifier: Apache-2.0

//! Gate-level netlist IR with dual-rail port groupings.
//!
//! Nets are referenced by [`NetId`] (an index into [`Netlist::nets`]). Every
//! net is driven either by a rail of an input pair or by exactly one gate
//! output. The generated designs are feedback-free, so the gate graph is a
//! DAG even though C-elements hold state.

mod text;
mod timing;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::cells::{cell_spec, CellKind};

pub use text::{emit_netlist, parse_netlist, ParseError};
pub use timing::{longest_path_between, static_longest_path, DelayTable, PathReport, TimingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct NetId(pub usize);

impl NetId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub id: String,
    pub kind: CellKind,
    pub inputs: Vec<NetId>,
    pub output: NetId,
}

/// A dual-rail port: `rail1` high encodes ONE, `rail0` high encodes ZERO.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortPair {
    pub label: String,
    pub rail1: NetId,
    pub rail0: NetId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub label: String,
    pub net: NetId,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Netlist {
    pub name: String,
    /// Net names, indexed by [`NetId`].
    pub nets: Vec<String>,
    pub gates: Vec<Gate>,
    pub inputs: Vec<PortPair>,
    pub outputs: Vec<PortPair>,
    pub probes: Vec<Probe>,
}

/// Where a net gets its value from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Driver {
    Input { pair: usize },
    Gate(usize),
}

impl Netlist {
    pub fn net_name(&self, net: NetId) -> &str {
        &self.nets[net.0]
    }

    pub fn find_net(&self, name: &str) -> Option<NetId> {
        self.nets.iter().position(|n| n == name).map(NetId)
    }

    pub fn input(&self, label: &str) -> Option<&PortPair> {
        self.inputs.iter().find(|p| p.label == label)
    }

    pub fn output(&self, label: &str) -> Option<&PortPair> {
        self.outputs.iter().find(|p| p.label == label)
    }

    pub fn probe(&self, label: &str) -> Option<NetId> {
        self.probes.iter().find(|p| p.label == label).map(|p| p.net)
    }

    pub fn gate(&self, id: &str) -> Option<&Gate> {
        self.gates.iter().find(|g| g.id == id)
    }

    /// All drivers per net. Valid netlists have exactly one per net.
    pub fn drivers(&self) -> Vec<Vec<Driver>> {
        let mut drivers = vec![Vec::new(); self.nets.len()];
        for (i, p) in self.inputs.iter().enumerate() {
            drivers[p.rail1.0].push(Driver::Input { pair: i });
            drivers[p.rail0.0].push(Driver::Input { pair: i });
        }
        for (i, g) in self.gates.iter().enumerate() {
            drivers[g.output.0].push(Driver::Gate(i));
        }
        drivers
    }

    /// Gate indices reading each net.
    pub fn fanout(&self) -> Vec<Vec<usize>> {
        let mut fanout = vec![Vec::new(); self.nets.len()];
        for (i, g) in self.gates.iter().enumerate() {
            for &n in &g.inputs {
                if !fanout[n.0].contains(&i) {
                    fanout[n.0].push(i);
                }
            }
        }
        fanout
    }

    /// Gate indices in a deterministic topological order: among ready gates
    /// the lowest original index goes first. `None` if the gate graph has a
    /// cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let order = kahn_order(self);
        (order.len() == self.gates.len()).then_some(order)
    }

    /// Structural equality by names: same ports (in order), probes, and the
    /// same set of gates with identical kinds and connectivity. Module name,
    /// gate order and net numbering are ignored.
    pub fn same_structure(&self, other: &Netlist) -> bool {
        fn pairs(n: &Netlist, ports: &[PortPair]) -> Vec<(String, String, String)> {
            ports
                .iter()
                .map(|p| {
                    (
                        p.label.clone(),
                        n.net_name(p.rail1).to_string(),
                        n.net_name(p.rail0).to_string(),
                    )
                })
                .collect()
        }
        fn gates(n: &Netlist) -> Vec<(String, CellKind, String, Vec<String>)> {
            let mut v: Vec<_> = n
                .gates
                .iter()
                .map(|g| {
                    (
                        g.id.clone(),
                        g.kind,
                        n.net_name(g.output).to_string(),
                        g.inputs.iter().map(|&i| n.net_name(i).to_string()).collect(),
                    )
                })
                .collect();
            v.sort();
            v
        }
        fn probes(n: &Netlist) -> Vec<(String, String)> {
            n.probes
                .iter()
                .map(|p| (p.label.clone(), n.net_name(p.net).to_string()))
                .collect()
        }
        pairs(self, &self.inputs) == pairs(other, &other.inputs)
            && pairs(self, &self.outputs) == pairs(other, &other.outputs)
            && probes(self) == probes(other)
            && gates(self) == gates(other)
    }
}

/// Incremental netlist construction used by the generators.
#[derive(Debug, Default)]
pub struct NetlistBuilder {
    netlist: Netlist,
    index: HashMap<String, NetId>,
}

impl NetlistBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        NetlistBuilder {
            netlist: Netlist {
                name: name.into(),
                ..Netlist::default()
            },
            index: HashMap::new(),
        }
    }

    /// Returns the net with this name, creating it if needed.
    pub fn net(&mut self, name: &str) -> NetId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = NetId(self.netlist.nets.len());
        self.netlist.nets.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn input_pair(&mut self, label: &str, rail1: &str, rail0: &str) -> (NetId, NetId) {
        let r1 = self.net(rail1);
        let r0 = self.net(rail0);
        self.netlist.inputs.push(PortPair {
            label: label.to_string(),
            rail1: r1,
            rail0: r0,
        });
        (r1, r0)
    }

    pub fn output_pair(&mut self, label: &str, rail1: NetId, rail0: NetId) {
        self.netlist.outputs.push(PortPair {
            label: label.to_string(),
            rail1,
            rail0,
        });
    }

    pub fn probe(&mut self, label: &str, net: NetId) {
        self.netlist.probes.push(Probe {
            label: label.to_string(),
            net,
        });
    }

    /// Adds a gate driving a new net called `output`; the gate id is derived
    /// from the gate count.
    pub fn gate(&mut self, kind: CellKind, output: &str, inputs: &[NetId]) -> NetId {
        let out = self.net(output);
        let id = format!("g{}", self.netlist.gates.len());
        self.netlist.gates.push(Gate {
            id,
            kind,
            inputs: inputs.to_vec(),
            output: out,
        });
        out
    }

    pub fn finish(self) -> Netlist {
        self.netlist
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    MultipleDrivers { net: String, drivers: usize },
    Undriven { net: String },
    Arity { gate: String, kind: CellKind, expected: usize, actual: usize },
    Cycle { gates: usize },
    Unreachable { net: String },
    UndrivenOutput { label: String },
    DuplicateGateId { gate: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MultipleDrivers { net, drivers } => {
                write!(f, "net `{net}` has {drivers} drivers (multiple driver)")
            }
            Violation::Undriven { net } => write!(f, "net `{net}` is undriven"),
            Violation::Arity {
                gate,
                kind,
                expected,
                actual,
            } => write!(f, "gate `{gate}` ({kind}) has {actual} inputs, expected {expected}"),
            Violation::Cycle { gates } => write!(f, "combinational cycle through {gates} gates"),
            Violation::Unreachable { net } => {
                write!(f, "net `{net}` is not reachable from any input pair")
            }
            Violation::UndrivenOutput { label } => write!(f, "output `{label}` is undriven"),
            Violation::DuplicateGateId { gate } => write!(f, "gate id `{gate}` is used twice"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub violations: Vec<Violation>,
    /// Nets that drive nothing and are not outputs. Informational only.
    pub dangling: Vec<String>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate(netlist: &Netlist) -> Verdict {
    let mut verdict = Verdict::default();
    let drivers = netlist.drivers();

    let mut seen_ids = HashMap::new();
    for g in &netlist.gates {
        if seen_ids.insert(g.id.as_str(), ()).is_some() {
            verdict
                .violations
                .push(Violation::DuplicateGateId { gate: g.id.clone() });
        }
        if g.inputs.len() != g.kind.arity() {
            verdict.violations.push(Violation::Arity {
                gate: g.id.clone(),
                kind: g.kind,
                expected: g.kind.arity(),
                actual: g.inputs.len(),
            });
        }
    }

    for (i, d) in drivers.iter().enumerate() {
        match d.len() {
            0 => verdict.violations.push(Violation::Undriven {
                net: netlist.nets[i].clone(),
            }),
            1 => {}
            n => verdict.violations.push(Violation::MultipleDrivers {
                net: netlist.nets[i].clone(),
                drivers: n,
            }),
        }
    }

    for p in &netlist.outputs {
        if drivers[p.rail1.0].is_empty() || drivers[p.rail0.0].is_empty() {
            verdict
                .violations
                .push(Violation::UndrivenOutput { label: p.label.clone() });
        }
    }

    let order = kahn_order(netlist);
    match order.len() == netlist.gates.len() {
        false => {
            verdict.violations.push(Violation::Cycle {
                gates: netlist.gates.len() - order.len(),
            });
        }
        true => {
            // Reachability: a gate output is reachable if any input is.
            let mut reach = vec![false; netlist.nets.len()];
            for p in &netlist.inputs {
                reach[p.rail1.0] = true;
                reach[p.rail0.0] = true;
            }
            for i in order {
                let g = &netlist.gates[i];
                if g.inputs.iter().any(|n| reach[n.0]) {
                    reach[g.output.0] = true;
                }
            }
            for (i, r) in reach.iter().enumerate() {
                if !r && !drivers[i].is_empty() {
                    verdict.violations.push(Violation::Unreachable {
                        net: netlist.nets[i].clone(),
                    });
                }
            }
        }
    }

    let fanout = netlist.fanout();
    let mut is_output = vec![false; netlist.nets.len()];
    for p in &netlist.outputs {
        is_output[p.rail1.0] = true;
        is_output[p.rail0.0] = true;
    }
    for (i, f) in fanout.iter().enumerate() {
        let gate_driven = drivers[i].iter().any(|d| matches!(d, Driver::Gate(_)));
        if f.is_empty() && !is_output[i] && gate_driven {
            verdict.dangling.push(netlist.nets[i].clone());
        }
    }
    verdict
}

/// Kahn's algorithm with a min-heap on gate index. Gates on or behind a
/// cycle are left out of the returned order.
fn kahn_order(netlist: &Netlist) -> Vec<usize> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut driver_gate = vec![None; netlist.nets.len()];
    for (i, g) in netlist.gates.iter().enumerate() {
        driver_gate[g.output.0].get_or_insert(i);
    }
    let mut pending = vec![0usize; netlist.gates.len()];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); netlist.gates.len()];
    for (i, g) in netlist.gates.iter().enumerate() {
        for &n in &g.inputs {
            if let Some(d) = driver_gate[n.0] {
                pending[i] += 1;
                succ[d].push(i);
            }
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> = pending
        .iter()
        .enumerate()
        .filter(|(_, &p)| p == 0)
        .map(|(i, _)| Reverse(i))
        .collect();
    let mut order = Vec::with_capacity(netlist.gates.len());
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for &s in &succ[i] {
            pending[s] -= 1;
            if pending[s] == 0 {
                ready.push(Reverse(s));
            }
        }
    }
    order
}

/// Gate instance counts and the resulting transistor total.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub counts: BTreeMap<CellKind, usize>,
    pub transistors: u64,
}

impl Census {
    pub fn count(&self, kind: CellKind) -> usize {
        self.counts.get(&kind).copied().unwrap_or(0)
    }

    pub fn total_gates(&self) -> usize {
        self.counts.values().sum()
    }

    /// `self - other`, listing only kinds whose counts differ.
    pub fn diff(&self, other: &Census) -> BTreeMap<CellKind, i64> {
        let mut out = BTreeMap::new();
        for kind in CellKind::ALL {
            let d = self.count(kind) as i64 - other.count(kind) as i64;
            if d != 0 {
                out.insert(kind, d);
            }
        }
        out
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(k, n)| format!("{k}: {n}")).collect();
        write!(f, "{{{}}} transistors={}", parts.join(", "), self.transistors)
    }
}

pub fn gate_census(netlist: &Netlist) -> Census {
    let mut census = Census::default();
    for g in &netlist.gates {
        *census.counts.entry(g.kind).or_default() += 1;
        census.transistors += u64::from(cell_spec(g.kind).transistors);
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> NetlistBuilder {
        let mut b = NetlistBuilder::new("tiny");
        b.input_pair("a", "a_1", "a_0");
        b.input_pair("b", "b_1", "b_0");
        b
    }

    #[test]
    fn valid_netlist_has_no_violations() {
        let mut b = tiny();
        let (a1, a0, b1, b0) = (b.net("a_1"), b.net("a_0"), b.net("b_1"), b.net("b_0"));
        let y1 = b.gate(CellKind::Ao22, "y_1", &[a1, b0, a0, b1]);
        let y0 = b.gate(CellKind::Ao22, "y_0", &[a1, b1, a0, b0]);
        b.output_pair("y", y1, y0);
        let v = validate(&b.finish());
        assert!(v.is_valid(), "{:?}", v.violations);
        assert!(v.dangling.is_empty());
    }

    #[test]
    fn multiple_driver_detected() {
        let mut b = tiny();
        let (a1, b1) = (b.net("a_1"), b.net("b_1"));
        let y = b.gate(CellKind::And2, "y", &[a1, b1]);
        b.gate(CellKind::Or2, "y", &[a1, b1]);
        b.output_pair("y", y, y);
        let v = validate(&b.finish());
        assert_eq!(
            v.violations,
            vec![Violation::MultipleDrivers {
                net: "y".into(),
                drivers: 2
            }]
        );
    }

    #[test]
    fn arity_violation_detected() {
        let mut b = tiny();
        let (a1, a0, b1) = (b.net("a_1"), b.net("a_0"), b.net("b_1"));
        let y = b.gate(CellKind::And2, "y", &[a1, a0, b1]);
        let z = b.gate(CellKind::Or2, "z", &[a1, b1]);
        b.output_pair("y", y, z);
        let v = validate(&b.finish());
        assert_eq!(v.violations.len(), 1);
        assert!(matches!(v.violations[0], Violation::Arity { expected: 2, actual: 3, .. }));
    }

    #[test]
    fn undriven_and_cycle_detected() {
        let mut b = tiny();
        let a1 = b.net("a_1");
        let floating = b.net("floating");
        let x = b.net("x");
        let y = b.gate(CellKind::And2, "y", &[a1, x]);
        b.gate(CellKind::Or2, "x", &[y, floating]);
        b.output_pair("y", y, x);
        let v = validate(&b.finish());
        assert!(v.violations.contains(&Violation::Undriven { net: "floating".into() }));
        assert!(v.violations.contains(&Violation::Cycle { gates: 2 }));
    }

    #[test]
    fn census_and_diff() {
        let mut b = tiny();
        let (a1, b1) = (b.net("a_1"), b.net("b_1"));
        let y = b.gate(CellKind::C2, "y", &[a1, b1]);
        let z = b.gate(CellKind::Or2, "z", &[y, a1]);
        b.output_pair("z", z, y);
        let c = gate_census(&b.finish());
        assert_eq!(c.count(CellKind::C2), 1);
        assert_eq!(c.transistors, 18);
        let empty = Census::default();
        assert_eq!(c.diff(&empty).get(&CellKind::Or2), Some(&1));
    }
}
