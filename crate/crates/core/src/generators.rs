// SPDX-License-Identifier: Apache-2.0

//! Parametric constructors for the early-output dual-rail adders.
//!
//! Port conventions shared by every adder: input pairs `a{i}`, `b{i}` and
//! `cin`; output pairs `s{i}` and `cout` (plus `cout_alias` on a standalone
//! carry generator). Rails are named `<label>_1` / `<label>_0` at the ports.
//!
//! Each lookahead block also publishes probes: `N` (section propagate),
//! `C01`/`C00` (its carry-in rails), `C41`/`C40` (its carry-out rails) and,
//! with alias logic, `C41alias`/`C40alias`. Inside multi-section adders the
//! probe labels are prefixed with the section, e.g. `s3.N`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::CellKind;
use crate::netlist::{NetId, Netlist, NetlistBuilder};

/// Widest adder the vector types can carry.
pub const MAX_WIDTH: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("width must be between 1 and {MAX_WIDTH}, got {0}")]
    Width(usize),
    #[error("unsupported section size {0} (supported: 2, 3, 4)")]
    SectionSize(usize),
    #[error("section size {section} does not divide width {width}")]
    NotDivisible { width: usize, section: usize },
    #[error("hybrid RCA width {rca} must be a positive multiple of {section} below {width}")]
    HybridWidth { rca: usize, section: usize, width: usize },
    #[error("{0} has no alias carry option")]
    NoAlias(Architecture),
    #[error("completion detector needs at least one pair")]
    EmptyDetector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Architecture {
    Scbcla,
    Rcla,
    Rca,
}

impl std::fmt::Display for Architecture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Architecture::Scbcla => "SCBCLA",
            Architecture::Rcla => "RCLA",
            Architecture::Rca => "RCA",
        })
    }
}

/// Full description of one adder design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdderConfig {
    pub architecture: Architecture,
    pub width: usize,
    pub section: usize,
    pub alias: bool,
    /// Least-significant bits realized as a ripple-carry adder; 0 = regular.
    pub hybrid_rca_width: usize,
}

impl AdderConfig {
    pub fn scbcla(width: usize, section: usize, alias: bool) -> Self {
        AdderConfig {
            architecture: Architecture::Scbcla,
            width,
            section,
            alias,
            hybrid_rca_width: 0,
        }
    }

    pub fn rcla(width: usize, section: usize) -> Self {
        AdderConfig {
            architecture: Architecture::Rcla,
            width,
            section,
            alias: false,
            hybrid_rca_width: 0,
        }
    }

    pub fn rca(width: usize) -> Self {
        AdderConfig {
            architecture: Architecture::Rca,
            width,
            section: width,
            alias: false,
            hybrid_rca_width: 0,
        }
    }

    pub fn hybrid(self, rca_width: usize) -> Self {
        AdderConfig {
            hybrid_rca_width: rca_width,
            ..self
        }
    }

    /// Number of lookahead sections (0 for a plain RCA).
    pub fn sections(&self) -> usize {
        match self.architecture {
            Architecture::Rca => 0,
            _ => (self.width - self.hybrid_rca_width) / self.section,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.width == 0 || self.width > MAX_WIDTH {
            return Err(GenError::Width(self.width));
        }
        if self.architecture == Architecture::Rca {
            if self.alias {
                return Err(GenError::NoAlias(Architecture::Rca));
            }
            return Ok(());
        }
        if self.alias && self.architecture == Architecture::Rcla {
            return Err(GenError::NoAlias(Architecture::Rcla));
        }
        if !(2..=4).contains(&self.section) {
            return Err(GenError::SectionSize(self.section));
        }
        if self.width % self.section != 0 {
            return Err(GenError::NotDivisible {
                width: self.width,
                section: self.section,
            });
        }
        let rca = self.hybrid_rca_width;
        if rca != 0 && (rca % self.section != 0 || rca >= self.width) {
            return Err(GenError::HybridWidth {
                rca,
                section: self.section,
                width: self.width,
            });
        }
        Ok(())
    }

    pub fn design_name(&self) -> String {
        let mut name = match self.architecture {
            Architecture::Rca => return format!("rca{}", self.width),
            Architecture::Scbcla => format!("scbcla{}_m{}", self.width, self.section),
            Architecture::Rcla => format!("rcla{}_m{}", self.width, self.section),
        };
        if self.alias {
            name.push_str("_alias");
        }
        if self.hybrid_rca_width > 0 {
            name.push_str(&format!("_rca{}", self.hybrid_rca_width));
        }
        name
    }

    pub fn generate(&self) -> Result<Netlist, GenError> {
        self.validate()?;
        let mut b = NetlistBuilder::new(self.design_name());
        let ports = AdderInputs::declare(&mut b, self.width);
        let sums: Vec<Pair>;
        let cout: Pair;
        match self.architecture {
            Architecture::Rca => {
                let (s, c) = ripple(&mut b, &ports, 0, self.width, ports.cin);
                sums = s;
                cout = c;
            }
            Architecture::Scbcla | Architecture::Rcla => {
                let rca = self.hybrid_rca_width;
                let (mut s, mut carry) = if rca > 0 {
                    ripple(&mut b, &ports, 0, rca, ports.cin)
                } else {
                    (Vec::new(), ports.cin)
                };
                let first = rca / self.section;
                let last = self.width / self.section - 1;
                for j in first..=last {
                    let prefix = format!("s{j}.");
                    let lo = j * self.section;
                    let a = &ports.a[lo..lo + self.section];
                    let bb = &ports.b[lo..lo + self.section];
                    let out = if self.architecture == Architecture::Scbcla {
                        scbcla_section(&mut b, &prefix, a, bb, carry, self.alias, lo)
                    } else {
                        rcla_section(&mut b, &prefix, a, bb, carry, lo)
                    };
                    s.extend(out.sums);
                    carry = match out.alias {
                        Some(alias) if j < last => alias,
                        _ => out.carry,
                    };
                }
                sums = s;
                cout = carry;
            }
        }
        for (i, s) in sums.iter().enumerate() {
            b.output_pair(&format!("s{i}"), s.t, s.f);
        }
        b.output_pair("cout", cout.t, cout.f);
        Ok(b.finish())
    }
}

/// A dual-rail signal inside the builder: `t` is rail1, `f` is rail0.
#[derive(Debug, Clone, Copy)]
struct Pair {
    t: NetId,
    f: NetId,
}

struct AdderInputs {
    a: Vec<Pair>,
    b: Vec<Pair>,
    cin: Pair,
}

impl AdderInputs {
    fn declare(b: &mut NetlistBuilder, width: usize) -> Self {
        let mut pairs = |label: String| {
            let (t, f) = b.input_pair(&label, &format!("{label}_1"), &format!("{label}_0"));
            Pair { t, f }
        };
        let a = (0..width).map(|i| pairs(format!("a{i}"))).collect();
        let bb = (0..width).map(|i| pairs(format!("b{i}"))).collect();
        let cin = pairs("cin".to_string());
        AdderInputs { a, b: bb, cin }
    }
}

/// Dual-rail half-sum: `(a xor b, a xnor b)`.
fn half_sum(b: &mut NetlistBuilder, prefix: &str, x: Pair, y: Pair) -> Pair {
    let t = b.gate(CellKind::Ao22, &format!("{prefix}p_1"), &[x.t, y.f, x.f, y.t]);
    let f = b.gate(CellKind::Ao22, &format!("{prefix}p_0"), &[x.t, y.t, x.f, y.f]);
    Pair { t, f }
}

fn sum_rails(b: &mut NetlistBuilder, p: Pair, c: Pair, out: &str) -> Pair {
    let t = b.gate(CellKind::Ao22, &format!("{out}_1"), &[p.t, c.f, p.f, c.t]);
    let f = b.gate(CellKind::Ao22, &format!("{out}_0"), &[p.f, c.f, p.t, c.t]);
    Pair { t, f }
}

/// Early-output full adder: six AO22 gates, one gate from carry-in to
/// carry-out.
fn full_adder(b: &mut NetlistBuilder, prefix: &str, x: Pair, y: Pair, c: Pair, sum: &str, cout: &str) -> (Pair, Pair) {
    let p = half_sum(b, prefix, x, y);
    let s = sum_rails(b, p, c, sum);
    let ct = b.gate(CellKind::Ao22, &format!("{cout}_1"), &[x.t, y.t, p.t, c.t]);
    let cf = b.gate(CellKind::Ao22, &format!("{cout}_0"), &[x.f, y.f, p.t, c.f]);
    (s, Pair { t: ct, f: cf })
}

/// Sum-only logic: the full adder without its carry gates.
fn sum_only(b: &mut NetlistBuilder, prefix: &str, x: Pair, y: Pair, c: Pair, sum: &str) -> Pair {
    let p = half_sum(b, prefix, x, y);
    sum_rails(b, p, c, sum)
}

/// Ripple chain over bits `lo..lo+len`, FA prefixes `fa{i}.`, internal
/// carries `c{i}`. The final carry is named `cout` when the chain is the
/// whole adder.
fn ripple(b: &mut NetlistBuilder, ports: &AdderInputs, lo: usize, len: usize, cin: Pair) -> (Vec<Pair>, Pair) {
    let whole = lo == 0 && len == ports.a.len();
    let mut carry = cin;
    let mut sums = Vec::with_capacity(len);
    for i in lo..lo + len {
        let cout = if whole && i == lo + len - 1 {
            "cout".to_string()
        } else {
            format!("c{}", i + 1)
        };
        let (s, c) = full_adder(b, &format!("fa{i}."), ports.a[i], ports.b[i], carry, &format!("s{i}"), &cout);
        sums.push(s);
        carry = c;
    }
    (sums, carry)
}

/// Per-bit generate, kill and propagate terms.
struct BitTerms {
    g: Vec<NetId>,
    k: Vec<NetId>,
    p: Vec<NetId>,
}

fn bit_terms(b: &mut NetlistBuilder, prefix: &str, a: &[Pair], bb: &[Pair]) -> BitTerms {
    let mut terms = BitTerms {
        g: Vec::new(),
        k: Vec::new(),
        p: Vec::new(),
    };
    for (i, (x, y)) in a.iter().zip(bb).enumerate() {
        terms.g.push(b.gate(CellKind::And2, &format!("{prefix}g{i}"), &[x.t, y.t]));
        terms.k.push(b.gate(CellKind::And2, &format!("{prefix}k{i}"), &[x.f, y.f]));
        terms
            .p
            .push(b.gate(CellKind::Ao22, &format!("{prefix}p{i}"), &[x.t, y.f, x.f, y.t]));
    }
    terms
}

struct Lookahead {
    carry: Pair,
    /// Group generate (rail1) / kill (rail0) terms, independent of carry-in.
    group: Pair,
    /// Group propagate.
    propagate: NetId,
}

/// Lookahead carry out of bit `top` (i.e. carry into bit `top + 1`):
///
/// ```text
/// G = g[top] + p[top]·g[top-1] + p[top]·p[top-1]·g[top-2] + ...
/// c_1 = G + C2(p[top..0], cin_1)      c_0 = K + C2(p[top..0], cin_0)
/// ```
///
/// Propagate prefixes inside the generate terms are chained C-elements;
/// the full-group propagate is a single AND gate.
fn lookahead(b: &mut NetlistBuilder, prefix: &str, terms: &BitTerms, top: usize, cin: Pair, section_carry: bool) -> Lookahead {
    let c = top + 1;
    let (n_name, c1_name, c0_name) = if section_carry {
        (format!("{prefix}N"), format!("{prefix}C{c}1"), format!("{prefix}C{c}0"))
    } else {
        (format!("{prefix}N{c}"), format!("{prefix}c{c}_1"), format!("{prefix}c{c}_0"))
    };

    let (group_t, group_f) = if top == 0 {
        (terms.g[0], terms.k[0])
    } else {
        let mut gen_terms = vec![terms.g[top]];
        let mut kill_terms = vec![terms.k[top]];
        // prod = p[top] · p[top-1] · ... · p[l+1]
        let mut prod = terms.p[top];
        for l in (0..top).rev() {
            if l + 1 < top {
                prod = b.gate(CellKind::C2, &format!("{prefix}q{top}_{}", l + 1), &[prod, terms.p[l + 1]]);
            }
            gen_terms.push(b.gate(CellKind::C2, &format!("{prefix}t{c}_{l}"), &[prod, terms.g[l]]));
            kill_terms.push(b.gate(CellKind::C2, &format!("{prefix}u{c}_{l}"), &[prod, terms.k[l]]));
        }
        let or = CellKind::or_of(gen_terms.len()).expect("section size is at most 4");
        (
            b.gate(or, &format!("{prefix}G{c}"), &gen_terms),
            b.gate(or, &format!("{prefix}K{c}"), &kill_terms),
        )
    };

    let propagate = if top == 0 {
        terms.p[0]
    } else {
        let ps: Vec<NetId> = (0..=top).rev().map(|i| terms.p[i]).collect();
        let and = CellKind::and_of(ps.len()).expect("section size is at most 4");
        b.gate(and, &n_name, &ps)
    };
    let nt = b.gate(CellKind::C2, &format!("{prefix}nc{c}_1"), &[propagate, cin.t]);
    let nf = b.gate(CellKind::C2, &format!("{prefix}nc{c}_0"), &[propagate, cin.f]);
    let t = b.gate(CellKind::Or2, &c1_name, &[group_t, nt]);
    let f = b.gate(CellKind::Or2, &c0_name, &[group_f, nf]);
    Lookahead {
        carry: Pair { t, f },
        group: Pair { t: group_t, f: group_f },
        propagate,
    }
}

struct ScbclgOut {
    carry: Pair,
    alias: Option<Pair>,
}

/// Section-carry lookahead generator: only the section carry-out is
/// produced, optionally duplicated by single-gate alias logic
/// `ALIAS(N, cin, G, G)`.
fn scbclg(b: &mut NetlistBuilder, prefix: &str, a: &[Pair], bb: &[Pair], cin: Pair, alias: bool) -> ScbclgOut {
    let m = a.len();
    let terms = bit_terms(b, prefix, a, bb);
    let la = lookahead(b, prefix, &terms, m - 1, cin, true);
    let alias_pair = alias.then(|| {
        let n = la.propagate;
        let t = b.gate(CellKind::Alias, &format!("{prefix}C{m}1alias"), &[n, cin.t, la.group.t, la.group.t]);
        let f = b.gate(CellKind::Alias, &format!("{prefix}C{m}0alias"), &[n, cin.f, la.group.f, la.group.f]);
        Pair { t, f }
    });
    b.probe(&format!("{prefix}N"), la.propagate);
    b.probe(&format!("{prefix}C01"), cin.t);
    b.probe(&format!("{prefix}C00"), cin.f);
    b.probe(&format!("{prefix}C41"), la.carry.t);
    b.probe(&format!("{prefix}C40"), la.carry.f);
    if let Some(p) = alias_pair {
        b.probe(&format!("{prefix}C41alias"), p.t);
        b.probe(&format!("{prefix}C40alias"), p.f);
    }
    ScbclgOut {
        carry: la.carry,
        alias: alias_pair,
    }
}

struct SectionOut {
    sums: Vec<Pair>,
    carry: Pair,
    alias: Option<Pair>,
}

/// One SCBCLA section: SCBCLG plus an internal ripple of (m-1) FAs and a
/// SOL on the most significant bit. `lo` is the global index of bit 0.
fn scbcla_section(b: &mut NetlistBuilder, prefix: &str, a: &[Pair], bb: &[Pair], cin: Pair, alias: bool, lo: usize) -> SectionOut {
    let m = a.len();
    let gen = scbclg(b, prefix, a, bb, cin, alias);
    let mut carry = cin;
    let mut sums = Vec::with_capacity(m);
    for i in 0..m - 1 {
        let (s, c) = full_adder(
            b,
            &format!("{prefix}fa{i}."),
            a[i],
            bb[i],
            carry,
            &format!("s{}", lo + i),
            &format!("{prefix}c{}", i + 1),
        );
        sums.push(s);
        carry = c;
    }
    sums.push(sum_only(
        b,
        &format!("{prefix}sol."),
        a[m - 1],
        bb[m - 1],
        carry,
        &format!("s{}", lo + m - 1),
    ));
    SectionOut {
        sums,
        carry: gen.carry,
        alias: gen.alias,
    }
}

/// One sub-RCLA: every intermediate carry by lookahead, sums by SOLs.
fn rcla_section(b: &mut NetlistBuilder, prefix: &str, a: &[Pair], bb: &[Pair], cin: Pair, lo: usize) -> SectionOut {
    let m = a.len();
    let terms = bit_terms(b, prefix, a, bb);
    let mut carries = vec![cin];
    let mut section = None;
    for top in 0..m {
        let last = top == m - 1;
        let la = lookahead(b, prefix, &terms, top, cin, last);
        carries.push(la.carry);
        if last {
            section = Some(la);
        }
    }
    let la = section.expect("m >= 2");
    b.probe(&format!("{prefix}N"), la.propagate);
    b.probe(&format!("{prefix}C01"), cin.t);
    b.probe(&format!("{prefix}C00"), cin.f);
    b.probe(&format!("{prefix}C41"), la.carry.t);
    b.probe(&format!("{prefix}C40"), la.carry.f);
    let sums = (0..m)
        .map(|i| {
            sum_only(
                b,
                &format!("{prefix}sol{i}."),
                a[i],
                bb[i],
                carries[i],
                &format!("s{}", lo + i),
            )
        })
        .collect();
    SectionOut {
        sums,
        carry: la.carry,
        alias: None,
    }
}

pub fn gen_full_adder_eo() -> Netlist {
    let mut n = gen_rca(1).expect("width 1 is valid");
    n.name = "fa_eo".to_string();
    n
}

pub fn gen_sol_eo() -> Netlist {
    let mut b = NetlistBuilder::new("sol_eo");
    let ports = AdderInputs::declare(&mut b, 1);
    let s = sum_only(&mut b, "sol0.", ports.a[0], ports.b[0], ports.cin, "s0");
    b.output_pair("s0", s.t, s.f);
    b.finish()
}

pub fn gen_rca(width: usize) -> Result<Netlist, GenError> {
    AdderConfig::rca(width).generate()
}

/// Standalone section-carry lookahead generator with ports `a0..`, `b0..`,
/// `cin`, outputs `cout` (C41, C40) and, with alias logic, `cout_alias`.
pub fn gen_scbclg(section: usize, alias: bool) -> Result<Netlist, GenError> {
    if !(2..=4).contains(&section) {
        return Err(GenError::SectionSize(section));
    }
    let name = if alias {
        format!("scbclg{section}_alias")
    } else {
        format!("scbclg{section}")
    };
    let mut b = NetlistBuilder::new(name);
    let ports = AdderInputs::declare(&mut b, section);
    let out = scbclg(&mut b, "", &ports.a, &ports.b, ports.cin, alias);
    b.output_pair("cout", out.carry.t, out.carry.f);
    if let Some(p) = out.alias {
        b.output_pair("cout_alias", p.t, p.f);
    }
    Ok(b.finish())
}

pub fn gen_scbcla(width: usize, section: usize, alias: bool) -> Result<Netlist, GenError> {
    AdderConfig::scbcla(width, section, alias).generate()
}

pub fn gen_scbcla_rca_hybrid(width: usize, section: usize, alias: bool, rca_width: usize) -> Result<Netlist, GenError> {
    if rca_width == 0 {
        return Err(GenError::HybridWidth {
            rca: 0,
            section,
            width,
        });
    }
    AdderConfig::scbcla(width, section, alias).hybrid(rca_width).generate()
}

pub fn gen_rcla(width: usize, section: usize) -> Result<Netlist, GenError> {
    AdderConfig::rcla(width, section).generate()
}

pub fn gen_rcla_rca_hybrid(width: usize, section: usize, rca_width: usize) -> Result<Netlist, GenError> {
    if rca_width == 0 {
        return Err(GenError::HybridWidth {
            rca: 0,
            section,
            width,
        });
    }
    AdderConfig::rcla(width, section).hybrid(rca_width).generate()
}

/// OR2 per dual-rail pair feeding a C-element tree (C3 where three
/// signals remain, C2 for a final pair). The tree root is published as
/// probe `done`.
pub fn gen_completion_detector(pair_count: usize) -> Result<Netlist, GenError> {
    if pair_count == 0 {
        return Err(GenError::EmptyDetector);
    }
    let mut b = NetlistBuilder::new(format!("cd{pair_count}"));
    let mut level: Vec<NetId> = (0..pair_count)
        .map(|i| {
            let (t, f) = b.input_pair(&format!("d{i}"), &format!("d{i}_1"), &format!("d{i}_0"));
            b.gate(CellKind::Or2, &format!("v{i}"), &[t, f])
        })
        .collect();
    let mut depth = 0;
    while level.len() > 1 {
        let mut next = Vec::new();
        for (j, chunk) in level.chunks(3).enumerate() {
            let net = match chunk.len() {
                3 => b.gate(CellKind::C3, &format!("ct{depth}_{j}"), chunk),
                2 => b.gate(CellKind::C2, &format!("ct{depth}_{j}"), chunk),
                _ => chunk[0],
            };
            next.push(net);
        }
        level = next;
        depth += 1;
    }
    b.probe("done", level[0]);
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::{gate_census, validate};

    #[test]
    fn full_adder_has_six_ao22() {
        let fa = gen_full_adder_eo();
        let c = gate_census(&fa);
        assert_eq!(c.counts.len(), 1);
        assert_eq!(c.count(CellKind::Ao22), 6);
        assert!(validate(&fa).is_valid());
    }

    #[test]
    fn sol_is_fa_minus_two_ao22() {
        let diff = gate_census(&gen_full_adder_eo()).diff(&gate_census(&gen_sol_eo()));
        assert_eq!(diff.into_iter().collect::<Vec<_>>(), vec![(CellKind::Ao22, 2)]);
    }

    #[test]
    fn rca1_matches_fa() {
        let rca = gen_rca(1).unwrap();
        assert!(rca.same_structure(&gen_full_adder_eo()));
        assert_eq!(gen_rca(0), Err(GenError::Width(0)));
    }

    #[test]
    fn scbclg_alias_adds_two_gates() {
        let plain = gate_census(&gen_scbclg(4, false).unwrap());
        let alias = gate_census(&gen_scbclg(4, true).unwrap());
        assert_eq!(
            alias.diff(&plain).into_iter().collect::<Vec<_>>(),
            vec![(CellKind::Alias, 2)]
        );
        assert_eq!(gen_scbclg(5, true), Err(GenError::SectionSize(5)));
    }

    #[test]
    fn config_errors() {
        assert_eq!(
            gen_scbcla(30, 4, false),
            Err(GenError::NotDivisible { width: 30, section: 4 })
        );
        assert!(matches!(
            gen_scbcla_rca_hybrid(32, 4, false, 6),
            Err(GenError::HybridWidth { .. })
        ));
        assert!(matches!(
            gen_scbcla_rca_hybrid(8, 4, false, 8),
            Err(GenError::HybridWidth { .. })
        ));
        assert_eq!(
            AdderConfig::rcla(8, 4).hybrid(0).generate().map(|_| ()),
            Ok(())
        );
        let mut bad = AdderConfig::rcla(8, 4);
        bad.alias = true;
        assert_eq!(bad.generate(), Err(GenError::NoAlias(Architecture::Rcla)));
        assert_eq!(gen_completion_detector(0), Err(GenError::EmptyDetector));
    }

    #[test]
    fn structural_counts_32bit() {
        let n = gen_scbcla(32, 4, false).unwrap();
        let c = gate_census(&n);
        // 8 sections × (27 SCBCLG gates) + 24 FA × 6 + 8 SOL × 4
        assert_eq!(c.total_gates(), 8 * 27 + 24 * 6 + 8 * 4);
        assert_eq!(c.count(CellKind::Alias), 0);
        let a = gate_census(&gen_scbcla(32, 4, true).unwrap());
        assert_eq!(a.count(CellKind::Alias), 16);
        assert_eq!(a.transistors - c.transistors, 160);
    }

    #[test]
    fn every_generator_output_validates() {
        let mut designs = vec![
            gen_full_adder_eo(),
            gen_sol_eo(),
            gen_rca(4).unwrap(),
            gen_scbclg(4, false).unwrap(),
            gen_scbclg(4, true).unwrap(),
            gen_completion_detector(33).unwrap(),
        ];
        for alias in [false, true] {
            designs.push(gen_scbcla(32, 4, alias).unwrap());
            designs.push(gen_scbcla_rca_hybrid(32, 4, alias, 4).unwrap());
            designs.push(gen_scbcla(12, 3, alias).unwrap());
        }
        designs.push(gen_rcla(32, 4).unwrap());
        designs.push(gen_rcla_rca_hybrid(32, 4, 4).unwrap());
        designs.push(gen_rcla(6, 2).unwrap());
        for d in &designs {
            let v = validate(d);
            assert!(v.is_valid(), "{}: {:?}", d.name, v.violations);
        }
    }
}
