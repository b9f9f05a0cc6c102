// SPDX-License-Identifier: Apache-2.0

//! Correctness checks: integer-oracle sweeps, alias/primary carry
//! equivalence, early-output probes, randomized-delay fuzzing and the
//! netlist mutations used to show the checks have teeth.
//!
//! A "settled" value is the value at event-queue quiescence; nothing here
//! depends on a clock or a timeout.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cells::{CellKind, DualRailValue};
use crate::metrics::Table;
use crate::netlist::{validate, NetId, Netlist};
use crate::sim::{
    exhaustive_vectors, run_cycle, stress_vectors, AdderPorts, AdderVector, DelayModel, Phase, SimError,
    SimOptions, SimViolation, Simulator,
};

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error("check not applicable: {0}")]
    NotApplicable(String),
    #[error("illegal probe scenario: {0}")]
    Scenario(String),
    #[error("mutation failed: {0}")]
    Mutation(String),
    #[error("fuzzing needs at least one trial")]
    NoTrials,
}

/// Verdict of one named check, for tabular export.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub design: String,
    pub cases: usize,
    pub passed: bool,
    pub detail: String,
}

pub fn checks_table(checks: &[Check]) -> Table {
    let mut t = Table::new("verification", &["check", "design", "cases", "verdict", "detail"]);
    for c in checks {
        t.push(vec![
            c.name.clone(),
            c.design.clone(),
            c.cases.to_string(),
            if c.passed { "PASS" } else { "FAIL" }.to_string(),
            c.detail.clone(),
        ]);
    }
    t
}

// ---------------------------------------------------------------------------
// Oracle

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub vector: AdderVector,
    pub expected_sum: u64,
    pub expected_cout: bool,
    pub got_sum: Option<u64>,
    pub got_couts: Option<Vec<bool>>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub design: String,
    pub vectors: usize,
    pub counterexample: Option<Counterexample>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn check(&self, name: &str) -> Check {
        Check {
            name: name.to_string(),
            design: self.design.clone(),
            cases: self.vectors,
            passed: self.passed(),
            detail: match &self.counterexample {
                None => String::new(),
                Some(c) => format!(
                    "vector {} (a={:x} b={:x} cin={}): {}",
                    c.index,
                    c.vector.a,
                    c.vector.b,
                    u8::from(c.vector.cin),
                    c.reason
                ),
            },
        }
    }
}

const ORACLE_CHUNK: usize = 4096;

/// Runs every vector through a full cycle and compares with `a + b + cin`.
/// A deadlock or any monitor violation also fails the check. Vectors are
/// split into chunks simulated in parallel; the reported counterexample is
/// the lowest-indexed one.
pub fn oracle_check(netlist: &Netlist, vectors: &[AdderVector], delays: &DelayModel) -> Result<OracleReport, VerifyError> {
    let ports = AdderPorts::from_netlist(netlist)?;
    let gate_delays = checked_delays(netlist, delays)?;
    let first = vectors
        .par_chunks(ORACLE_CHUNK)
        .enumerate()
        .map(|(chunk, vs)| {
            let mut sim = Simulator::with_gate_delays(netlist, gate_delays.clone(), SimOptions::default());
            for (k, v) in vs.iter().enumerate() {
                let index = chunk * ORACLE_CHUNK + k;
                if let Some(c) = cycle_failure(&mut sim, &ports, index, v) {
                    return Some(c);
                }
            }
            None
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    Ok(OracleReport {
        design: netlist.name.clone(),
        vectors: vectors.len(),
        counterexample: first,
    })
}

fn checked_delays(netlist: &Netlist, delays: &DelayModel) -> Result<Vec<f64>, VerifyError> {
    let verdict = validate(netlist);
    if !verdict.is_valid() {
        return Err(SimError::InvalidNetlist {
            name: netlist.name.clone(),
            violations: verdict.violations,
        }
        .into());
    }
    Ok(delays.gate_delays(netlist)?)
}

fn cycle_failure(sim: &mut Simulator<'_>, ports: &AdderPorts, index: usize, v: &AdderVector) -> Option<Counterexample> {
    let (expected_sum, expected_cout) = v.expected(ports.width);
    let expected_sum = expected_sum & crate::sim::mask_bits(ports.sums.len());
    let fail = |got_sum, got_couts, reason: String| Counterexample {
        index,
        vector: *v,
        expected_sum,
        expected_cout,
        got_sum,
        got_couts,
        reason,
    };
    match run_cycle(sim, ports, index, v) {
        Err(e) => Some(fail(None, None, e.to_string())),
        Ok(c) if !c.correct() => Some(fail(
            Some(c.sum),
            Some(c.couts.clone()),
            format!("sum {:x} couts {:?}, expected {:x} / {}", c.sum, c.couts, c.expected_sum, c.expected_cout),
        )),
        Ok(c) => c
            .violations()
            .next()
            .map(|viol| fail(Some(c.sum), Some(c.couts.clone()), viol.to_string())),
    }
}

// ---------------------------------------------------------------------------
// Alias equivalence

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AliasReport {
    pub design: String,
    pub cases: usize,
    /// Primary/alias pair couples compared in every case.
    pub pairs: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<(AdderVector, String)>,
}

impl AliasReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    pub fn check(&self) -> Check {
        Check {
            name: "alias equivalence".into(),
            design: self.design.clone(),
            cases: self.cases,
            passed: self.passed(),
            detail: match &self.first_mismatch {
                None => format!("{} carry pair couple(s) compared", self.pairs),
                Some((v, what)) => format!("a={:x} b={:x} cin={}: {what}", v.a, v.b, u8::from(v.cin)),
            },
        }
    }
}

/// Primary and alias carry pairs: the `cout`/`cout_alias` outputs of a bare
/// block, or the `C41`/`C40` and `C41alias`/`C40alias` probes of each block.
fn alias_couples(netlist: &Netlist) -> Vec<(String, (NetId, NetId), (NetId, NetId))> {
    let mut out = Vec::new();
    if let (Some(p), Some(a)) = (netlist.output("cout"), netlist.output("cout_alias")) {
        out.push(("cout".to_string(), (p.rail1, p.rail0), (a.rail1, a.rail0)));
    }
    for probe in &netlist.probes {
        let Some(prefix) = probe.label.strip_suffix("C41alias") else {
            continue;
        };
        let get = |s: &str| netlist.probe(&format!("{prefix}{s}"));
        if let (Some(p1), Some(p0), Some(a1), Some(a0)) = (get("C41"), get("C40"), get("C41alias"), get("C40alias")) {
            let pair = ((p1, p0), (a1, a0));
            if !out.iter().any(|(_, p, a)| (*p, *a) == pair) {
                out.push((format!("{prefix}C4"), pair.0, pair.1));
            }
        }
    }
    out
}

/// Exhaustively compares settled primary and alias carry pairs. Designs
/// without alias logic are rejected as not applicable.
pub fn alias_equivalence_check(netlist: &Netlist) -> Result<AliasReport, VerifyError> {
    let couples = alias_couples(netlist);
    if couples.is_empty() {
        return Err(VerifyError::NotApplicable(format!(
            "`{}` has no alias carry outputs",
            netlist.name
        )));
    }
    let ports = AdderPorts::from_netlist(netlist)?;
    if ports.width > 8 {
        return Err(VerifyError::NotApplicable(format!(
            "exhaustive comparison limited to 8-bit designs, `{}` is {} bits",
            netlist.name, ports.width
        )));
    }
    let mut sim = Simulator::new(netlist, &DelayModel::Unit, SimOptions::default())?;
    let vectors = exhaustive_vectors(ports.width);
    let nulls = vec![DualRailValue::Null; netlist.inputs.len()];
    let mut report = AliasReport {
        design: netlist.name.clone(),
        cases: vectors.len(),
        pairs: couples.len(),
        mismatches: 0,
        first_mismatch: None,
    };
    for v in &vectors {
        sim.simulate_phase(Phase::Data, &ports.data_targets(v, netlist.inputs.len()))?;
        for (name, (p1, p0), (a1, a0)) in &couples {
            let (p, a) = (sim.pair_value(*p1, *p0), sim.pair_value(*a1, *a0));
            if p != a || !p.is_valid() {
                report.mismatches += 1;
                report
                    .first_mismatch
                    .get_or_insert_with(|| (*v, format!("{name}: primary {p}, alias {a}")));
            }
        }
        sim.simulate_phase(Phase::Rtz, &nulls)?;
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Early-output probes

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Expectation {
    /// All outputs complete despite the held inputs.
    Complete,
    /// Some output waits for the held inputs.
    Wait,
}

/// DATA probe: `held` inputs stay NULL while the others take their values
/// from `vector`. RTZ probe: after a full data phase with `vector`, the
/// `held` inputs keep their values while the others return to NULL.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeScenario {
    pub phase: Phase,
    pub vector: AdderVector,
    pub held: Vec<String>,
    pub expectation: Expectation,
}

impl ProbeScenario {
    pub fn data(vector: AdderVector, held: &[&str], expectation: Expectation) -> Self {
        ProbeScenario {
            phase: Phase::Data,
            vector,
            held: held.iter().map(|s| s.to_string()).collect(),
            expectation,
        }
    }

    pub fn rtz(vector: AdderVector, held: &[&str], expectation: Expectation) -> Self {
        ProbeScenario {
            phase: Phase::Rtz,
            ..Self::data(vector, held, expectation)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeOutcome {
    pub scenario: ProbeScenario,
    /// Every output reached validity (DATA) or NULL (RTZ).
    pub complete: bool,
    pub completion_time: Option<f64>,
    /// Outputs that did reach the target state.
    pub reached: Vec<String>,
    pub waiting: Vec<String>,
}

impl ProbeOutcome {
    pub fn matches_expectation(&self) -> bool {
        self.complete == (self.scenario.expectation == Expectation::Complete)
    }

    /// Whether every output whose label starts with `prefix` reached the
    /// target state.
    pub fn reached_all(&self, prefix: &str) -> bool {
        !self.waiting.iter().any(|l| l.starts_with(prefix))
    }
}

pub fn early_output_probe(
    netlist: &Netlist,
    scenario: &ProbeScenario,
    delays: &DelayModel,
) -> Result<ProbeOutcome, VerifyError> {
    let ports = AdderPorts::from_netlist(netlist)?;
    if scenario.held.is_empty() {
        return Err(VerifyError::Scenario("no held inputs".into()));
    }
    let mut held = Vec::new();
    for label in &scenario.held {
        let i = netlist
            .inputs
            .iter()
            .position(|p| &p.label == label)
            .ok_or_else(|| VerifyError::Scenario(format!("no input `{label}`")))?;
        if !held.contains(&i) {
            held.push(i);
        }
    }
    if held.len() >= netlist.inputs.len() {
        return Err(VerifyError::Scenario("held inputs must be a strict subset".into()));
    }
    let mut sim = Simulator::new(netlist, delays, SimOptions::default())?;
    let full = ports.data_targets(&scenario.vector, netlist.inputs.len());
    let trace = match scenario.phase {
        Phase::Data => {
            let mut t = full;
            for &i in &held {
                t[i] = DualRailValue::Null;
            }
            sim.settle(Phase::Data, &t)?
        }
        Phase::Rtz => {
            sim.simulate_phase(Phase::Data, &full)?;
            let mut t = vec![DualRailValue::Null; netlist.inputs.len()];
            for &i in &held {
                t[i] = full[i];
            }
            sim.settle(Phase::Rtz, &t)?
        }
    };
    let (mut reached, mut waiting) = (Vec::new(), Vec::new());
    for (p, v) in netlist.outputs.iter().zip(sim.output_values()) {
        let ok = match scenario.phase {
            Phase::Data => v.is_valid(),
            Phase::Rtz => v == DualRailValue::Null,
        };
        if ok { &mut reached } else { &mut waiting }.push(p.label.clone());
    }
    Ok(ProbeOutcome {
        scenario: scenario.clone(),
        complete: waiting.is_empty(),
        completion_time: trace.completion_time,
        reached,
        waiting,
    })
}

// ---------------------------------------------------------------------------
// Fuzzing

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum VectorSource {
    /// Uniform random operands.
    Random,
    /// Every fourth trial takes the next directed carry-chain vector, the
    /// rest are random.
    Mixed,
    /// Cycles through a fixed list.
    Fixed(Vec<AdderVector>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzFailure {
    pub trial: usize,
    pub trial_seed: u64,
    /// FNV-1a over the per-gate delays' bit patterns.
    pub delay_digest: String,
    pub vector: AdderVector,
    pub violation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub design: String,
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<FuzzFailure>,
    /// Trials in which an alias carry pair returned to NULL before `N`.
    pub alias_race_trials: usize,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&self) -> Check {
        Check {
            name: "qdi fuzz".into(),
            design: self.design.clone(),
            cases: self.trials,
            passed: self.passed(),
            detail: match self.failures.first() {
                None => format!("seed {}; alias race observed in {} trial(s)", self.seed, self.alias_race_trials),
                Some(f) => format!(
                    "seed {}; {} failure(s); first: trial {} delays {} a={:x} b={:x} cin={}: {}",
                    self.seed,
                    self.failures.len(),
                    f.trial,
                    f.delay_digest,
                    f.vector.a,
                    f.vector.b,
                    u8::from(f.vector.cin),
                    f.violation
                ),
            },
        }
    }
}

pub fn delay_digest(delays: &[f64]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for d in delays {
        for byte in d.to_bits().to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    format!("{h:016x}")
}

/// Per-trial seeds, drawn in order from the master seed.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.gen()).collect()
}

/// Runs `trials` independent DATA + RTZ cycles, each on a fresh circuit
/// with its own random gate delays and vector. Any oracle mismatch, monitor
/// violation or deadlock is a failure.
pub fn qdi_fuzz(netlist: &Netlist, trials: usize, seed: u64, source: &VectorSource) -> Result<FuzzReport, VerifyError> {
    if trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    let ports = AdderPorts::from_netlist(netlist)?;
    checked_delays(netlist, &DelayModel::Unit)?;
    let stress = stress_vectors(ports.width);
    let mask = crate::sim::mask_bits(ports.width);
    let seeds = trial_seeds(seed, trials);
    let outcomes: Vec<(Option<FuzzFailure>, bool)> = seeds
        .par_iter()
        .enumerate()
        .map(|(trial, &trial_seed)| {
            let delays = DelayModel::random(trial_seed)
                .gate_delays(netlist)
                .expect("default range is valid");
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed ^ 0x5eed_0f_7ec7_0125);
            let vector = match source {
                VectorSource::Fixed(list) if !list.is_empty() => list[trial % list.len()],
                VectorSource::Mixed if trial % 4 == 0 => stress[(trial / 4) % stress.len()],
                _ => AdderVector::new(rng.gen::<u64>() & mask, rng.gen::<u64>() & mask, rng.gen()),
            };
            let digest = delay_digest(&delays);
            let mut sim = Simulator::with_gate_delays(netlist, delays, SimOptions::default());
            let failure = |violation: String| FuzzFailure {
                trial,
                trial_seed,
                delay_digest: digest.clone(),
                vector,
                violation,
            };
            match run_cycle(&mut sim, &ports, trial, &vector) {
                Err(SimError::Vector { source, .. }) => match *source {
                    SimError::Deadlock { phase, stuck } => (
                        Some(failure(format!("{phase}: {}", SimViolation::Deadlock { stuck }))),
                        false,
                    ),
                    other => (Some(failure(other.to_string())), false),
                },
                Err(e) => (Some(failure(e.to_string())), false),
                Ok(c) => {
                    let raced = !c.rtz.observations.is_empty();
                    let f = if !c.correct() {
                        Some(failure(format!(
                            "oracle mismatch: sum {:x} couts {:?}, expected {:x} / {}",
                            c.sum, c.couts, c.expected_sum, c.expected_cout
                        )))
                    } else {
                        c.violations().next().map(|v| failure(v.to_string()))
                    };
                    (f, raced)
                }
            }
        })
        .collect();
    Ok(FuzzReport {
        design: netlist.name.clone(),
        trials,
        seed,
        alias_race_trials: outcomes.iter().filter(|(_, r)| *r).count(),
        failures: outcomes.into_iter().filter_map(|(f, _)| f).collect(),
    })
}

// ---------------------------------------------------------------------------
// Mutations

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Mutation {
    /// Exchange the two rails of an output pair.
    SwapOutputRails { output: String },
    /// Replace the C-element joining a block's `N` and carry-in rail 1 with
    /// an AND2.
    DropCElement { block: String },
    /// Remove the last input of an OR gate (OR4 becomes OR3, ...).
    DropOrTerm { gate: String },
}

impl Mutation {
    pub fn apply(&self, netlist: &Netlist) -> Result<Netlist, VerifyError> {
        match self {
            Mutation::SwapOutputRails { output } => swap_output_rails(netlist, output),
            Mutation::DropCElement { block } => drop_c_element(netlist, block),
            Mutation::DropOrTerm { gate } => drop_or_term(netlist, gate),
        }
    }
}

pub fn swap_output_rails(netlist: &Netlist, output: &str) -> Result<Netlist, VerifyError> {
    let mut n = netlist.clone();
    let p = n
        .outputs
        .iter_mut()
        .find(|p| p.label == output)
        .ok_or_else(|| VerifyError::Mutation(format!("no output `{output}`")))?;
    std::mem::swap(&mut p.rail1, &mut p.rail0);
    n.name.push_str("_swapped");
    Ok(n)
}

pub fn replace_gate_kind(netlist: &Netlist, gate: &str, kind: CellKind) -> Result<Netlist, VerifyError> {
    let mut n = netlist.clone();
    let g = n
        .gates
        .iter_mut()
        .find(|g| g.id == gate)
        .ok_or_else(|| VerifyError::Mutation(format!("no gate `{gate}`")))?;
    if g.inputs.len() != kind.arity() {
        return Err(VerifyError::Mutation(format!(
            "{kind} takes {} inputs, `{gate}` has {}",
            kind.arity(),
            g.inputs.len()
        )));
    }
    g.kind = kind;
    Ok(n)
}

/// `block` is the probe prefix: `""` for a bare block, `"s3."` inside an adder.
pub fn drop_c_element(netlist: &Netlist, block: &str) -> Result<Netlist, VerifyError> {
    let probe = |s: &str| {
        netlist
            .probe(&format!("{block}{s}"))
            .ok_or_else(|| VerifyError::Mutation(format!("no probe `{block}{s}`")))
    };
    let (n, c01) = (probe("N")?, probe("C01")?);
    let g = netlist
        .gates
        .iter()
        .find(|g| g.kind == CellKind::C2 && g.inputs.contains(&n) && g.inputs.contains(&c01))
        .ok_or_else(|| VerifyError::Mutation(format!("no C2({block}N, {block}C01)")))?;
    let mut m = replace_gate_kind(netlist, &g.id, CellKind::And2)?;
    m.name.push_str("_noC");
    Ok(m)
}

pub fn drop_or_term(netlist: &Netlist, gate: &str) -> Result<Netlist, VerifyError> {
    let mut n = netlist.clone();
    let g = n
        .gates
        .iter_mut()
        .find(|g| g.id == gate)
        .ok_or_else(|| VerifyError::Mutation(format!("no gate `{gate}`")))?;
    let narrower = match g.kind {
        CellKind::Or3 | CellKind::Or4 => CellKind::or_of(g.inputs.len() - 1).expect("OR2..OR4 exist"),
        CellKind::Or2 => CellKind::Buf,
        other => return Err(VerifyError::Mutation(format!("`{gate}` is {other}, not an OR gate"))),
    };
    g.inputs.pop();
    g.kind = narrower;
    n.name.push_str("_dropterm");
    Ok(n)
}

/// The first OR4 gate, the usual target of [`Mutation::DropOrTerm`].
pub fn first_or4(netlist: &Netlist) -> Option<&str> {
    netlist
        .gates
        .iter()
        .find(|g| g.kind == CellKind::Or4)
        .map(|g| g.id.as_str())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_full_adder_eo, gen_rca, gen_scbcla, gen_scbclg};
    use crate::sim::random_vectors;

    #[test]
    fn oracle_passes_and_catches_swapped_rails() {
        let fa = gen_full_adder_eo();
        let v = exhaustive_vectors(1);
        assert!(oracle_check(&fa, &v, &DelayModel::Unit).unwrap().passed());
        let bad = swap_output_rails(&fa, "s0").unwrap();
        let r = oracle_check(&bad, &v, &DelayModel::Unit).unwrap();
        let c = r.counterexample.unwrap();
        assert_eq!(c.index, 0);
        assert_eq!(c.got_sum, Some(1));
    }

    #[test]
    fn zero_vector() {
        let n = gen_rca(4).unwrap();
        let r = oracle_check(&n, &[AdderVector::new(0, 0, false)], &DelayModel::Unit).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn counterexample_is_lowest_index_across_chunks() {
        let n = gen_rca(8).unwrap();
        let bad = swap_output_rails(&n, "cout").unwrap();
        let mut v = vec![AdderVector::new(0, 0, false); ORACLE_CHUNK + 10];
        v[ORACLE_CHUNK + 3] = AdderVector::new(0xff, 1, false);
        // every vector has cout = 0, so all fail; the first is 0
        let r = oracle_check(&bad, &v, &DelayModel::Unit).unwrap();
        assert_eq!(r.counterexample.unwrap().index, 0);
    }

    #[test]
    fn alias_equivalence_on_block() {
        let g = gen_scbclg(4, true).unwrap();
        let r = alias_equivalence_check(&g).unwrap();
        assert_eq!(r.cases, 512);
        assert!(r.passed());
        assert!(matches!(
            alias_equivalence_check(&gen_scbclg(4, false).unwrap()),
            Err(VerifyError::NotApplicable(_))
        ));
        let r8 = alias_equivalence_check(&gen_scbcla(8, 4, true).unwrap()).unwrap();
        assert_eq!(r8.pairs, 2);
        assert!(r8.passed());
    }

    #[test]
    fn fa_probes() {
        let fa = gen_full_adder_eo();
        // a = 1 only: nothing resolves
        let s = ProbeScenario::data(AdderVector::new(1, 0, false), &["b0", "cin"], Expectation::Wait);
        let o = early_output_probe(&fa, &s, &DelayModel::Unit).unwrap();
        assert!(!o.complete && o.matches_expectation());
        assert!(o.waiting.contains(&"s0".to_string()));
        // a = b, cin withheld: carry resolves, sum waits
        let s = ProbeScenario::data(AdderVector::new(1, 1, false), &["cin"], Expectation::Wait);
        let o = early_output_probe(&fa, &s, &DelayModel::Unit).unwrap();
        assert_eq!(o.reached, vec!["cout".to_string()]);
        // RTZ with cin held: a = b lets cout reset early
        let s = ProbeScenario::rtz(AdderVector::new(1, 1, true), &["cin"], Expectation::Complete);
        let o = early_output_probe(&fa, &s, &DelayModel::Unit).unwrap();
        assert!(o.reached_all("cout"));
    }

    #[test]
    fn illegal_scenarios() {
        let fa = gen_full_adder_eo();
        let v = AdderVector::new(0, 0, false);
        for held in [&[][..], &["a0", "b0", "cin"][..], &["zz"][..]] {
            let s = ProbeScenario::data(v, held, Expectation::Wait);
            assert!(matches!(
                early_output_probe(&fa, &s, &DelayModel::Unit),
                Err(VerifyError::Scenario(_))
            ));
        }
    }

    #[test]
    fn fuzz_is_reproducible_and_clean() {
        let g = gen_scbcla(8, 4, true).unwrap();
        let a = qdi_fuzz(&g, 200, 3, &VectorSource::Mixed).unwrap();
        let b = qdi_fuzz(&g, 200, 3, &VectorSource::Mixed).unwrap();
        assert_eq!(a, b);
        assert!(a.passed(), "{:?}", a.failures.first());
        assert!(matches!(qdi_fuzz(&g, 0, 3, &VectorSource::Random), Err(VerifyError::NoTrials)));
    }

    #[test]
    fn dropped_c_element_is_caught_by_fuzz() {
        let g = gen_scbclg(4, true).unwrap();
        let m = Mutation::DropCElement { block: String::new() }.apply(&g).unwrap();
        assert_eq!(crate::netlist::gate_census(&m).count(CellKind::C2) + 1, crate::netlist::gate_census(&g).count(CellKind::C2));
        let r = qdi_fuzz(&m, 1000, 1, &VectorSource::Random).unwrap();
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.violation.contains("premature")));
    }

    #[test]
    fn dropped_or_term_is_caught_by_oracle() {
        let n = gen_scbcla(4, 4, false).unwrap();
        let gate = first_or4(&n).unwrap().to_string();
        let m = drop_or_term(&n, &gate).unwrap();
        let r = oracle_check(&m, &exhaustive_vectors(4), &DelayModel::Unit).unwrap();
        assert!(!r.passed());
        assert!(drop_or_term(&n, "nope").is_err());
        let r = oracle_check(&n, &random_vectors(4, 50, 1), &DelayModel::random(2)).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(delay_digest(&[]), "cbf29ce484222325");
        assert_ne!(delay_digest(&[1.0]), delay_digest(&[1.5]));
    }
}
