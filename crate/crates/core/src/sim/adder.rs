// SPDX-License-Identifier: Apache-2.0

//! Adder-level driving: operand vectors, port mapping and full handshake
//! cycles (DATA then RTZ) checked against integer addition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::{DelayModel, Phase, PhaseTrace, SimError, SimOptions, Simulator};
use crate::cells::DualRailValue;
use crate::netlist::Netlist;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AdderVector {
    pub a: u64,
    pub b: u64,
    pub cin: bool,
}

impl AdderVector {
    pub fn new(a: u64, b: u64, cin: bool) -> Self {
        AdderVector { a, b, cin }
    }

    /// `(sum mod 2^width, carry out)`.
    pub fn expected(&self, width: usize) -> (u64, bool) {
        let total = u128::from(self.a & mask_bits(width)) + u128::from(self.b & mask_bits(width)) + u128::from(self.cin);
        ((total as u64) & mask_bits(width), (total >> width) & 1 == 1)
    }
}

pub fn mask_bits(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Indices of an adder's ports inside a netlist's input/output lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdderPorts {
    pub width: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub cin: usize,
    /// Sum outputs, bit order. May be shorter than `width` (or empty for a
    /// bare lookahead block).
    pub sums: Vec<usize>,
    /// Every output whose label starts with `cout`, primary first.
    pub couts: Vec<usize>,
}

impl AdderPorts {
    pub fn from_netlist(netlist: &Netlist) -> Result<Self, SimError> {
        let not_adder = |m: String| SimError::NotAnAdder(m);
        let find_in = |label: &str| netlist.inputs.iter().position(|p| p.label == label);
        let mut a = Vec::new();
        while let Some(i) = find_in(&format!("a{}", a.len())) {
            a.push(i);
        }
        let width = a.len();
        if width == 0 {
            return Err(not_adder("no `a0` input".into()));
        }
        let b = (0..width)
            .map(|i| find_in(&format!("b{i}")).ok_or_else(|| not_adder(format!("missing input `b{i}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let cin = find_in("cin").ok_or_else(|| not_adder("missing input `cin`".into()))?;
        if netlist.inputs.len() != 2 * width + 1 {
            return Err(not_adder(format!(
                "{} inputs for a {width}-bit adder",
                netlist.inputs.len()
            )));
        }
        let find_out = |label: &str| netlist.outputs.iter().position(|p| p.label == label);
        let mut sums = Vec::new();
        while let Some(i) = find_out(&format!("s{}", sums.len())) {
            sums.push(i);
        }
        let mut couts: Vec<usize> = (0..netlist.outputs.len())
            .filter(|&i| netlist.outputs[i].label.starts_with("cout"))
            .collect();
        couts.sort_by_key(|&i| netlist.outputs[i].label != "cout");
        if couts.first().map(|&i| netlist.outputs[i].label.as_str()) != Some("cout") {
            return Err(not_adder("missing output `cout`".into()));
        }
        Ok(AdderPorts {
            width,
            a,
            b,
            cin,
            sums,
            couts,
        })
    }

    /// Input values (in netlist order) that present `v`.
    pub fn data_targets(&self, v: &AdderVector, n_inputs: usize) -> Vec<DualRailValue> {
        let mut t = vec![DualRailValue::Null; n_inputs];
        for i in 0..self.width {
            t[self.a[i]] = DualRailValue::from_bit(v.a >> i & 1 == 1);
            t[self.b[i]] = DualRailValue::from_bit(v.b >> i & 1 == 1);
        }
        t[self.cin] = DualRailValue::from_bit(v.cin);
        t
    }

    /// Decodes `(sum, couts)` from output values; `None` if any is not valid.
    pub fn decode(&self, outputs: &[DualRailValue]) -> Option<(u64, Vec<bool>)> {
        let mut sum = 0u64;
        for (i, &o) in self.sums.iter().enumerate() {
            if outputs[o].bit()? {
                sum |= 1 << i;
            }
        }
        let couts = self.couts.iter().map(|&o| outputs[o].bit()).collect::<Option<Vec<_>>>()?;
        Some((sum, couts))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleResult {
    pub index: usize,
    pub vector: AdderVector,
    pub sum: u64,
    /// Primary carry first, then alias carries if exposed.
    pub couts: Vec<bool>,
    pub expected_sum: u64,
    pub expected_cout: bool,
    pub data: PhaseTrace,
    pub rtz: PhaseTrace,
}

impl CycleResult {
    pub fn correct(&self) -> bool {
        self.sum == self.expected_sum && self.couts.iter().all(|&c| c == self.expected_cout)
    }

    /// DATA-phase completion time.
    pub fn latency(&self) -> f64 {
        self.data.completion_time.expect("completed cycle")
    }

    pub fn rtz_latency(&self) -> f64 {
        self.rtz.completion_time.expect("completed cycle")
    }

    pub fn violations(&self) -> impl Iterator<Item = &super::SimViolation> {
        self.data.violations.iter().chain(&self.rtz.violations)
    }
}

pub fn run_handshake_cycles(
    netlist: &Netlist,
    vectors: &[AdderVector],
    delays: &DelayModel,
) -> Result<Vec<CycleResult>, SimError> {
    run_handshake_cycles_with(netlist, vectors, delays, SimOptions::default())
}

/// Runs DATA then RTZ for each vector, in order, on one circuit instance.
/// Errors are tagged with the failing vector's index.
pub fn run_handshake_cycles_with(
    netlist: &Netlist,
    vectors: &[AdderVector],
    delays: &DelayModel,
    options: SimOptions,
) -> Result<Vec<CycleResult>, SimError> {
    let ports = AdderPorts::from_netlist(netlist)?;
    let mut sim = Simulator::new(netlist, delays, options)?;
    let mut results = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        results.push(run_cycle(&mut sim, &ports, index, v)?);
    }
    Ok(results)
}

/// One DATA + RTZ cycle on an existing simulator. Errors are tagged with
/// `index`.
pub fn run_cycle(
    sim: &mut Simulator<'_>,
    ports: &AdderPorts,
    index: usize,
    v: &AdderVector,
) -> Result<CycleResult, SimError> {
    let tag = |source: SimError| SimError::Vector {
        index,
        source: Box::new(source),
    };
    let n_inputs = sim.netlist().inputs.len();
    let data = sim
        .simulate_phase(Phase::Data, &ports.data_targets(v, n_inputs))
        .map_err(tag)?;
    let (sum, couts) = ports
        .decode(&sim.output_values())
        .expect("completed data phase has valid outputs");
    let rtz = sim
        .simulate_phase(Phase::Rtz, &vec![DualRailValue::Null; n_inputs])
        .map_err(tag)?;
    let (full_sum, expected_cout) = v.expected(ports.width);
    Ok(CycleResult {
        index,
        vector: *v,
        sum,
        couts,
        expected_sum: full_sum & mask_bits(ports.sums.len()),
        expected_cout,
        data,
        rtz,
    })
}

/// Every operand combination; only sensible for small widths.
pub fn exhaustive_vectors(width: usize) -> Vec<AdderVector> {
    assert!(width <= 12, "exhaustive enumeration limited to 12 bits");
    let n = 1u64 << width;
    let mut out = Vec::with_capacity((n * n * 2) as usize);
    for a in 0..n {
        for b in 0..n {
            for cin in [false, true] {
                out.push(AdderVector { a, b, cin });
            }
        }
    }
    out
}

pub fn random_vectors(width: usize, count: usize, seed: u64) -> Vec<AdderVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = mask_bits(width);
    (0..count)
        .map(|_| AdderVector {
            a: rng.gen::<u64>() & m,
            b: rng.gen::<u64>() & m,
            cin: rng.gen(),
        })
        .collect()
}

/// Directed vectors that sensitise long carry chains: for every bit `i`, a
/// generate or a kill at `i` with every bit above it propagating, plus the
/// all-propagate pattern with both carry-in values.
pub fn stress_vectors(width: usize) -> Vec<AdderVector> {
    let m = mask_bits(width);
    let mut out = Vec::new();
    for i in 0..width {
        let above = m & !mask_bits(i + 1);
        let bit = 1u64 << i;
        // generate at i: a=b=1; propagate above: a=1, b=0
        out.push(AdderVector::new(above | bit, bit, false));
        // kill at i: a=b=0
        out.push(AdderVector::new(above, 0, true));
    }
    out.push(AdderVector::new(m, 0, false));
    out.push(AdderVector::new(m, 0, true));
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("vector file line {line}: {message}")]
pub struct VectorParseError {
    pub line: usize,
    pub message: String,
}

/// Parses `a_hex,b_hex,cin_bit` lines. Blank lines and `#` comments are
/// ignored; hex values may carry a `0x` prefix.
pub fn parse_vectors(text: &str) -> Result<Vec<AdderVector>, VectorParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |message: String| VectorParseError { line, message };
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        let [a, b, cin] = fields[..] else {
            return Err(err(format!("expected 3 fields, got {}", fields.len())));
        };
        let hex = |s: &str| {
            let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
            u64::from_str_radix(digits, 16).map_err(|e| err(format!("bad hex `{s}`: {e}")))
        };
        let cin = match cin {
            "0" => false,
            "1" => true,
            other => return Err(err(format!("carry-in must be 0 or 1, got `{other}`"))),
        };
        out.push(AdderVector {
            a: hex(a)?,
            b: hex(b)?,
            cin,
        });
    }
    Ok(out)
}

pub fn format_vectors(vectors: &[AdderVector]) -> String {
    vectors
        .iter()
        .map(|v| format!("{:x},{:x},{}\n", v.a, v.b, u8::from(v.cin)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_rca, gen_scbcla, gen_scbclg};

    #[test]
    fn expected_sum_wraps_at_width() {
        assert_eq!(AdderVector::new(0xF, 1, false).expected(4), (0, true));
        assert_eq!(AdderVector::new(u64::MAX, 0, true).expected(64), (0, true));
        assert_eq!(AdderVector::new(3, 4, true).expected(8), (8, false));
    }

    #[test]
    fn rca4_exhaustive_is_correct() {
        let n = gen_rca(4).unwrap();
        let r = run_handshake_cycles(&n, &exhaustive_vectors(4), &DelayModel::Unit).unwrap();
        assert_eq!(r.len(), 512);
        assert!(r.iter().all(|c| c.correct() && c.violations().next().is_none()));
        let worst = r.iter().map(|c| c.latency()).fold(0.0, f64::max);
        assert_eq!(worst, 5.0);
    }

    #[test]
    fn bare_block_decodes_carries_only() {
        let g = gen_scbclg(4, true).unwrap();
        let p = AdderPorts::from_netlist(&g).unwrap();
        assert!(p.sums.is_empty());
        assert_eq!(p.couts.len(), 2);
        let r = run_handshake_cycles(&g, &[AdderVector::new(0xF, 0, true)], &DelayModel::Unit).unwrap();
        assert_eq!(r[0].couts, vec![true, true]);
        assert!(r[0].correct());
    }

    #[test]
    fn stress_vectors_reach_full_chain() {
        let n = gen_scbcla(8, 4, false).unwrap();
        let v = stress_vectors(8);
        assert_eq!(v.len(), 18);
        let r = run_handshake_cycles(&n, &v, &DelayModel::Unit).unwrap();
        assert!(r.iter().all(CycleResult::correct));
    }

    #[test]
    fn vector_file_round_trip() {
        let v = random_vectors(32, 20, 5);
        assert_eq!(parse_vectors(&format_vectors(&v)).unwrap(), v);
        assert_eq!(
            parse_vectors("# hdr\n0xff, 1 ,1\n\n").unwrap(),
            vec![AdderVector::new(255, 1, true)]
        );
        assert_eq!(parse_vectors("1,2\n").unwrap_err().line, 1);
        assert!(parse_vectors("1,2,2\n").is_err());
        assert!(parse_vectors("1,zz,0\n").is_err());
    }

    #[test]
    fn non_adder_port_set_rejected() {
        let mut broken = gen_rca(2).unwrap();
        broken.inputs.retain(|p| p.label != "cin");
        assert!(matches!(
            run_handshake_cycles(&broken, &[], &DelayModel::Unit),
            Err(SimError::NotAnAdder(_))
        ));
    }
}
