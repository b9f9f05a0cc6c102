// SPDX-License-Identifier: Apache-2.0

//! Area composition, latency aggregation and the reference-table
//! comparisons.
//!
//! Published cell-area figures exist only at block granularity (full adder,
//! sum-only logic, 4-bit lookahead block), so [`compose_area`] prices whole
//! designs from block counts and refuses anything it has no figure for.
//! Percentages over the reference rows are always ratio-of-sums over the
//! named operand rows, expressed relative to the baseline (`old`) rows.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::generators::{AdderConfig, Architecture, GenError};
use crate::netlist::{
    gate_census, longest_path_between, static_longest_path, DelayTable, Netlist, PathReport, TimingError,
};
use crate::sim::{run_handshake_cycles, AdderVector, DelayModel, SimError};

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("reference table: {0}")]
    Csv(#[from] csv::Error),
    #[error("reference table has no group {group} row for `{design}`")]
    MissingRow { group: u8, design: String },
    #[error("unpriced: {0}")]
    Unpriced(String),
    #[error("no latency row labelled `{0}`")]
    MissingDesign(String),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Timing(#[from] TimingError),
}

// ---------------------------------------------------------------------------
// Report tables

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Structured,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "structured" | "json" => Ok(OutputFormat::Structured),
            other => Err(format!("unknown format `{other}` (text, csv, structured)")),
        }
    }
}

/// A titled table of string cells, rendered as aligned text, CSV or JSON.
/// `meta` pairs (seed, delay model, ...) go into a header: `# key: value`
/// lines for text and CSV, a `meta` object for JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub title: String,
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Table {
            title: title.to_string(),
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    fn header(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.title).unwrap();
        for (k, v) in &self.meta {
            writeln!(out, "# {k}: {v}").unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = self.header();
        out.push_str(&line(&self.columns));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells");
        self.header() + &body
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .cloned()
                        .zip(r.iter().map(|c| Value::String(c.clone())))
                        .collect(),
                )
            })
            .collect();
        let meta: serde_json::Map<String, Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({ "title": self.title, "meta": meta, "columns": self.columns, "rows": rows })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Structured => {
                serde_json::to_string_pretty(&self.to_json()).expect("json values serialize") + "\n"
            }
        }
    }
}

fn fmt2(x: f64) -> String {
    format!("{x:.2}")
}

fn verdict(pass: bool) -> String {
    if pass { "PASS" } else { "FAIL" }.to_string()
}

// ---------------------------------------------------------------------------
// Block areas

/// Block areas in µm².
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComponentAreaTable {
    pub fa_eo: f64,
    pub sol_eo: f64,
    pub scbclg_plain: f64,
    pub scbclg_alias: f64,
    pub fa_weak_24: f64,
    pub fa_weak_25: f64,
    pub sol_weak: f64,
}

impl ComponentAreaTable {
    pub const PUBLISHED: ComponentAreaTable = ComponentAreaTable {
        fa_eo: 27.45,
        sol_eo: 22.36,
        scbclg_plain: 113.35,
        scbclg_alias: 118.43,
        fa_weak_24: 41.17,
        fa_weak_25: 39.65,
        sol_weak: 34.56,
    };

    pub fn table(&self) -> Table {
        let mut t = Table::new("component areas (um^2)", &["block", "area_um2"]);
        for (name, v) in [
            ("FA early-output", self.fa_eo),
            ("SOL early-output", self.sol_eo),
            ("SCBCLG plain", self.scbclg_plain),
            ("SCBCLG alias", self.scbclg_alias),
            ("FA weak-indication [24]", self.fa_weak_24),
            ("FA weak-indication [25]", self.fa_weak_25),
            ("SOL weak-indication", self.sol_weak),
        ] {
            t.push(vec![name.into(), fmt2(v)]);
        }
        t
    }
}

impl Default for ComponentAreaTable {
    fn default() -> Self {
        Self::PUBLISHED
    }
}

/// Function-block area of an early-output design (registers and completion
/// detection excluded).
pub fn compose_area(config: &AdderConfig, table: &ComponentAreaTable) -> Result<f64, MetricsError> {
    config.validate()?;
    match config.architecture {
        Architecture::Rca => Ok(config.width as f64 * table.fa_eo),
        Architecture::Rcla => Err(MetricsError::Unpriced(format!(
            "{}: no published area for recursive lookahead blocks",
            config.design_name()
        ))),
        Architecture::Scbcla => {
            if config.section != 4 {
                return Err(MetricsError::Unpriced(format!(
                    "{}: only 4-bit lookahead blocks are priced",
                    config.design_name()
                )));
            }
            let block = if config.alias {
                table.scbclg_alias
            } else {
                table.scbclg_plain
            };
            let section = block + (config.section - 1) as f64 * table.fa_eo + table.sol_eo;
            Ok(config.sections() as f64 * section + config.hybrid_rca_width as f64 * table.fa_eo)
        }
    }
}

// ---------------------------------------------------------------------------
// Reference rows

const BUNDLED_REFERENCE: &str = include_str!("../data/table1.tsv");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub group: u8,
    pub design: String,
    #[serde(rename = "power_uW")]
    pub power_uw: f64,
    pub latency_ns: f64,
    pub area_um2: f64,
}

/// Tab-separated text of the bundled reference rows.
pub fn bundled_reference_text() -> &'static str {
    BUNDLED_REFERENCE
}

pub fn bundled_reference() -> Vec<ReferenceRow> {
    parse_reference(BUNDLED_REFERENCE).expect("bundled reference table parses")
}

/// Parses `group, design, power_uW, latency_ns, area_um2` rows separated by
/// tabs, with a header line.
pub fn parse_reference(text: &str) -> Result<Vec<ReferenceRow>, MetricsError> {
    let mut r = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<Vec<ReferenceRow>, _>>()?)
}

pub fn reference_table(rows: &[ReferenceRow]) -> Table {
    let mut t = Table::new(
        "reference rows",
        &["group", "design", "power_uW", "latency_ns", "area_um2"],
    );
    for r in rows {
        t.push(vec![
            r.group.to_string(),
            r.design.clone(),
            r.power_uw.to_string(),
            fmt2(r.latency_ns),
            fmt2(r.area_um2),
        ]);
    }
    t
}

/// Design variants named in the reference rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plain,
    HybridPlain,
    Alias,
    HybridAlias,
    Rcla,
    HybridRcla,
}

impl Variant {
    pub fn label(self) -> &'static str {
        match self {
            Variant::Plain => "SCBCLA (Without alias logic)",
            Variant::HybridPlain => "SCBCLA-RCA hybrid (Without alias logic)",
            Variant::Alias => "SCBCLA (With alias logic)",
            Variant::HybridAlias => "SCBCLA-RCA hybrid (With alias logic)",
            Variant::Rcla => "RCLA",
            Variant::HybridRcla => "RCLA-RCA hybrid",
        }
    }

    /// The generator configuration that stands in for this variant.
    pub fn config(self, width: usize, section: usize, rca: usize) -> AdderConfig {
        match self {
            Variant::Plain => AdderConfig::scbcla(width, section, false),
            Variant::HybridPlain => AdderConfig::scbcla(width, section, false).hybrid(rca),
            Variant::Alias => AdderConfig::scbcla(width, section, true),
            Variant::HybridAlias => AdderConfig::scbcla(width, section, true).hybrid(rca),
            Variant::Rcla => AdderConfig::rcla(width, section),
            Variant::HybridRcla => AdderConfig::rcla(width, section).hybrid(rca),
        }
    }

    pub const GROUP4: [Variant; 4] = [
        Variant::Plain,
        Variant::HybridPlain,
        Variant::Alias,
        Variant::HybridAlias,
    ];
    pub const GROUP3: [Variant; 2] = [Variant::Rcla, Variant::HybridRcla];
}

fn find_row(rows: &[ReferenceRow], group: u8, v: Variant) -> Result<&ReferenceRow, MetricsError> {
    rows.iter()
        .find(|r| r.group == group && r.design.trim() == v.label())
        .ok_or_else(|| MetricsError::MissingRow {
            group,
            design: v.label().to_string(),
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Metric {
    Power,
    Latency,
    Area,
}

impl Metric {
    fn of(self, r: &ReferenceRow) -> f64 {
        match self {
            Metric::Power => r.power_uw,
            Metric::Latency => r.latency_ns,
            Metric::Area => r.area_um2,
        }
    }
}

/// One percentage statement checked against the reference rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    /// Human-readable formula with the summed operands.
    pub formula: String,
    pub baseline_rows: Vec<String>,
    pub compared_rows: Vec<String>,
    /// Percentage in the direction the name states (a reduction is
    /// `(old - new) / old`, an increase `(new - old) / old`).
    pub value: f64,
    pub stated: f64,
    pub tolerance: f64,
}

impl Claim {
    pub fn pass(&self) -> bool {
        (self.value - self.stated).abs() <= self.tolerance + 1e-9
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {:.1}% {} (stated {}% ± {}; {})",
            self.name,
            self.value,
            verdict(self.pass()),
            self.stated,
            self.tolerance,
            self.formula
        )
    }
}

struct ClaimSpec {
    name: &'static str,
    metric: Metric,
    baseline: &'static [(u8, Variant)],
    compared: &'static [(u8, Variant)],
    increase: bool,
    stated: f64,
    tolerance: f64,
}

use Variant::*;

const CLAIMS: &[ClaimSpec] = &[
    ClaimSpec {
        name: "alias latency reduction",
        metric: Metric::Latency,
        baseline: &[(1, Plain), (1, HybridPlain), (2, Plain), (2, HybridPlain), (4, Plain), (4, HybridPlain)],
        compared: &[(1, Alias), (1, HybridAlias), (2, Alias), (2, HybridAlias), (4, Alias), (4, HybridAlias)],
        increase: false,
        stated: 24.6,
        tolerance: 0.1,
    },
    ClaimSpec {
        name: "alias area increase",
        metric: Metric::Area,
        baseline: &[(1, Plain), (1, HybridPlain), (2, Plain), (2, HybridPlain), (4, Plain), (4, HybridPlain)],
        compared: &[(1, Alias), (1, HybridAlias), (2, Alias), (2, HybridAlias), (4, Alias), (4, HybridAlias)],
        increase: true,
        stated: 1.4,
        tolerance: 0.1,
    },
    ClaimSpec {
        name: "alias power increase",
        metric: Metric::Power,
        baseline: &[(1, Plain), (1, HybridPlain), (2, Plain), (2, HybridPlain), (4, Plain), (4, HybridPlain)],
        compared: &[(1, Alias), (1, HybridAlias), (2, Alias), (2, HybridAlias), (4, Alias), (4, HybridAlias)],
        increase: true,
        stated: 0.1,
        tolerance: 0.05,
    },
    ClaimSpec {
        name: "hybrid latency reduction without alias",
        metric: Metric::Latency,
        baseline: &[(1, Plain), (2, Plain), (3, Rcla), (4, Plain)],
        compared: &[(1, HybridPlain), (2, HybridPlain), (3, HybridRcla), (4, HybridPlain)],
        increase: false,
        stated: 7.0,
        tolerance: 1.0,
    },
    ClaimSpec {
        name: "hybrid area reduction without alias",
        metric: Metric::Area,
        baseline: &[(1, Plain), (2, Plain), (3, Rcla), (4, Plain)],
        compared: &[(1, HybridPlain), (2, HybridPlain), (3, HybridRcla), (4, HybridPlain)],
        increase: false,
        stated: 4.0,
        tolerance: 1.0,
    },
    ClaimSpec {
        name: "hybrid latency reduction with alias",
        metric: Metric::Latency,
        baseline: &[(1, Alias), (2, Alias), (4, Alias)],
        compared: &[(1, HybridAlias), (2, HybridAlias), (4, HybridAlias)],
        increase: false,
        stated: 3.0,
        tolerance: 1.0,
    },
    ClaimSpec {
        name: "hybrid area reduction with alias",
        metric: Metric::Area,
        baseline: &[(1, Alias), (2, Alias), (4, Alias)],
        compared: &[(1, HybridAlias), (2, HybridAlias), (4, HybridAlias)],
        increase: false,
        stated: 4.0,
        tolerance: 1.0,
    },
    ClaimSpec {
        name: "hybrid alias area increase",
        metric: Metric::Area,
        baseline: &[(4, HybridPlain)],
        compared: &[(4, HybridAlias)],
        increase: true,
        stated: 1.5,
        tolerance: 0.2,
    },
    ClaimSpec {
        name: "hybrid alias power increase",
        metric: Metric::Power,
        baseline: &[(4, HybridPlain)],
        compared: &[(4, HybridAlias)],
        increase: true,
        stated: 0.1,
        tolerance: 0.05,
    },
    ClaimSpec {
        name: "area reduction vs weak-indication alias SCBCLA",
        metric: Metric::Area,
        baseline: &[(2, Alias)],
        compared: &[(4, Alias)],
        increase: false,
        stated: 13.0,
        tolerance: 0.5,
    },
    ClaimSpec {
        name: "latency reduction vs RCLA",
        metric: Metric::Latency,
        baseline: &[(3, Rcla)],
        compared: &[(4, Alias)],
        increase: false,
        stated: 16.0,
        tolerance: 0.5,
    },
];

fn row_name(group: u8, v: Variant) -> String {
    format!("G{group} {}", v.label())
}

/// Recomputes every stated percentage from the reference rows.
pub fn compare_table(rows: &[ReferenceRow]) -> Result<Vec<Claim>, MetricsError> {
    CLAIMS
        .iter()
        .map(|c| {
            let sum = |set: &[(u8, Variant)]| -> Result<(f64, Vec<String>), MetricsError> {
                let mut total = 0.0;
                let mut terms = Vec::new();
                for &(g, v) in set {
                    let x = c.metric.of(find_row(rows, g, v)?);
                    total += x;
                    terms.push(x.to_string());
                }
                Ok((total, terms))
            };
            let (old, old_terms) = sum(c.baseline)?;
            let (new, new_terms) = sum(c.compared)?;
            let (value, formula) = if c.increase {
                ((new - old) / old * 100.0, "(new - old) / old")
            } else {
                ((old - new) / old * 100.0, "(old - new) / old")
            };
            Ok(Claim {
                name: c.name.to_string(),
                formula: format!(
                    "{formula}, old = {} = {old:.4}, new = {} = {new:.4}",
                    old_terms.join(" + "),
                    new_terms.join(" + ")
                ),
                baseline_rows: c.baseline.iter().map(|&(g, v)| row_name(g, v)).collect(),
                compared_rows: c.compared.iter().map(|&(g, v)| row_name(g, v)).collect(),
                value,
                stated: c.stated,
                tolerance: c.tolerance,
            })
        })
        .collect()
}

pub fn claims_table(claims: &[Claim]) -> Table {
    let mut t = Table::new(
        "reference percentage claims",
        &["claim", "computed_pct", "stated_pct", "tolerance", "verdict", "baseline", "compared"],
    );
    for c in claims {
        t.push(vec![
            c.name.clone(),
            format!("{:.1}", c.value),
            c.stated.to_string(),
            c.tolerance.to_string(),
            verdict(c.pass()),
            c.baseline_rows.join("; "),
            c.compared_rows.join("; "),
        ]);
    }
    t
}

/// A composed area difference checked against the matching reference-row
/// difference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AreaIdentity {
    pub name: String,
    pub composed: f64,
    pub reference: f64,
    pub tolerance: f64,
}

impl AreaIdentity {
    pub fn pass(&self) -> bool {
        (self.composed - self.reference).abs() <= self.tolerance + 1e-9
    }
}

/// Group 4 row differences against composed block areas, for 32-bit designs
/// built from 4-bit sections with a 4-bit ripple section in the hybrids.
pub fn area_identities(rows: &[ReferenceRow], table: &ComponentAreaTable) -> Result<Vec<AreaIdentity>, MetricsError> {
    let area = |v: Variant| -> Result<(f64, f64), MetricsError> {
        Ok((compose_area(&v.config(32, 4, 4), table)?, find_row(rows, 4, v)?.area_um2))
    };
    let (plain, plain_ref) = area(Plain)?;
    let (hplain, hplain_ref) = area(HybridPlain)?;
    let (alias, alias_ref) = area(Alias)?;
    let (halias, halias_ref) = area(HybridAlias)?;
    Ok(vec![
        AreaIdentity {
            name: "alias - plain".into(),
            composed: alias - plain,
            reference: alias_ref - plain_ref,
            tolerance: 0.05,
        },
        AreaIdentity {
            name: "regular - hybrid (plain)".into(),
            composed: plain - hplain,
            reference: plain_ref - hplain_ref,
            tolerance: 0.01,
        },
        AreaIdentity {
            name: "regular - hybrid (alias)".into(),
            composed: alias - halias,
            reference: alias_ref - halias_ref,
            tolerance: 0.01,
        },
    ])
}

/// Reference area minus composed function-block area for each Group 4 row:
/// the registers and completion detection the composition leaves out.
pub fn area_overhead(rows: &[ReferenceRow], table: &ComponentAreaTable) -> Result<Vec<(Variant, f64)>, MetricsError> {
    Variant::GROUP4
        .iter()
        .map(|&v| Ok((v, find_row(rows, 4, v)?.area_um2 - compose_area(&v.config(32, 4, 4), table)?)))
        .collect()
}

pub fn area_table(identities: &[AreaIdentity], overhead: &[(Variant, f64)]) -> Table {
    let mut t = Table::new(
        "area identities (um^2)",
        &["identity", "composed", "reference", "tolerance", "verdict"],
    );
    for i in identities {
        t.push(vec![
            i.name.clone(),
            fmt2(i.composed),
            fmt2(i.reference),
            i.tolerance.to_string(),
            verdict(i.pass()),
        ]);
    }
    for (v, o) in overhead {
        t.push(vec![
            format!("overhead: {}", v.label()),
            "-".into(),
            fmt2(*o),
            "-".into(),
            "INFO".into(),
        ]);
    }
    t
}

// ---------------------------------------------------------------------------
// Structure

/// Carry paths through one lookahead block: from its carry-in rails to its
/// primary and (if present) alias carry-out rails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HopPath {
    pub block: String,
    pub primary: PathReport,
    pub alias: Option<PathReport>,
}

/// Every lookahead block found through its `N` probe.
pub fn hop_paths(netlist: &Netlist) -> Result<Vec<HopPath>, MetricsError> {
    let table = DelayTable::unit();
    let mut out = Vec::new();
    for p in &netlist.probes {
        let Some(prefix) = p.label.strip_suffix('N') else {
            continue;
        };
        let probe = |s: &str| netlist.probe(&format!("{prefix}{s}"));
        let (Some(c01), Some(c00), Some(c41), Some(c40)) = (probe("C01"), probe("C00"), probe("C41"), probe("C40"))
        else {
            continue;
        };
        let primary = longest_path_between(netlist, &[c01, c00], &[c41, c40], &table)?;
        let alias = match (probe("C41alias"), probe("C40alias")) {
            (Some(a1), Some(a0)) => Some(longest_path_between(netlist, &[c01, c00], &[a1, a0], &table)?),
            _ => None,
        };
        out.push(HopPath {
            block: prefix.trim_end_matches('.').to_string(),
            primary,
            alias,
        });
    }
    Ok(out)
}

pub fn transistor_total(netlist: &Netlist) -> u64 {
    gate_census(netlist).transistors
}

// ---------------------------------------------------------------------------
// Latency

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatencyRow {
    pub design: String,
    pub netlist: String,
    pub gates: usize,
    pub transistors: u64,
    pub static_depth: f64,
    pub worst_latency: f64,
    pub mean_latency: f64,
    /// Mean net transitions per full cycle (a switching-activity proxy).
    pub mean_transitions: f64,
    pub vectors: usize,
}

pub fn latency_row(
    design: &str,
    netlist: &Netlist,
    vectors: &[AdderVector],
    delays: &DelayModel,
) -> Result<LatencyRow, MetricsError> {
    let table = match delays {
        DelayModel::Table(t) => t.clone(),
        _ => DelayTable::unit(),
    };
    let static_depth = static_longest_path(netlist, &table)?.depth;
    let cycles = run_handshake_cycles(netlist, vectors, delays)?;
    let n = cycles.len().max(1) as f64;
    Ok(LatencyRow {
        design: design.to_string(),
        netlist: netlist.name.clone(),
        gates: netlist.gates.len(),
        transistors: transistor_total(netlist),
        static_depth,
        worst_latency: cycles.iter().map(|c| c.latency()).fold(0.0, f64::max),
        mean_latency: cycles.iter().map(|c| c.latency()).sum::<f64>() / n,
        mean_transitions: cycles
            .iter()
            .map(|c| (c.data.transitions + c.rtz.transitions) as f64)
            .sum::<f64>()
            / n,
        vectors: cycles.len(),
    })
}

/// Latency rows for several designs, simulated in parallel, returned in
/// input order.
pub fn latency_report(
    designs: &[(String, Netlist)],
    vectors: &[AdderVector],
    delays: &DelayModel,
) -> Result<Vec<LatencyRow>, MetricsError> {
    designs
        .par_iter()
        .map(|(label, n)| latency_row(label, n, vectors, delays))
        .collect()
}

pub fn latency_table(rows: &[LatencyRow]) -> Table {
    let mut t = Table::new(
        "latency (gate-delay units)",
        &[
            "design",
            "netlist",
            "gates",
            "transistors",
            "static_depth",
            "worst_latency",
            "mean_latency",
            "mean_transitions",
            "vectors",
        ],
    );
    for r in rows {
        t.push(vec![
            r.design.clone(),
            r.netlist.clone(),
            r.gates.to_string(),
            r.transistors.to_string(),
            r.static_depth.to_string(),
            r.worst_latency.to_string(),
            fmt2(r.mean_latency),
            fmt2(r.mean_transitions),
            r.vectors.to_string(),
        ]);
    }
    t
}

/// Plain-to-alias latency ratio of the reference rows (3.13 / 2.31).
pub const REFERENCE_PLAIN_ALIAS_RATIO: f64 = 3.13 / 2.31;
pub const RATIO_BOUNDS: (f64, f64) = (1.15, 1.60);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingVerdict {
    /// hybrid-alias < alias < hybrid-plain < plain
    pub group4_order: bool,
    /// RCLA slower than alias (only if an RCLA row was simulated)
    pub rcla_slower_than_alias: Option<bool>,
    pub plain_alias_ratio: f64,
    pub ratio_in_bounds: bool,
}

impl OrderingVerdict {
    pub fn pass(&self) -> bool {
        self.group4_order && self.rcla_slower_than_alias != Some(false) && self.ratio_in_bounds
    }
}

/// Checks worst-case latencies (rows labelled with [`Variant::label`])
/// against the reference ordering.
pub fn ordering_verdict(rows: &[LatencyRow]) -> Result<OrderingVerdict, MetricsError> {
    let get = |v: Variant| {
        rows.iter()
            .find(|r| r.design == v.label())
            .map(|r| r.worst_latency)
            .ok_or_else(|| MetricsError::MissingDesign(v.label().to_string()))
    };
    let (p, hp, a, ha) = (get(Plain)?, get(HybridPlain)?, get(Alias)?, get(HybridAlias)?);
    let ratio = p / a;
    Ok(OrderingVerdict {
        group4_order: ha < a && a < hp && hp < p,
        rcla_slower_than_alias: get(Rcla).ok().map(|r| r > a),
        plain_alias_ratio: ratio,
        ratio_in_bounds: (RATIO_BOUNDS.0..=RATIO_BOUNDS.1).contains(&ratio),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_full_adder_eo, gen_scbcla, gen_scbclg};

    #[test]
    fn bundled_rows_parse() {
        let rows = bundled_reference();
        assert_eq!(rows.len(), 14);
        assert_eq!(rows[0].group, 1);
        assert_eq!(rows[13].area_um2, 2452.24);
        assert_eq!(find_row(&rows, 3, Rcla).unwrap().latency_ns, 2.75);
    }

    #[test]
    fn claims_match_independent_computation() {
        let claims = compare_table(&bundled_reference()).unwrap();
        let expected = [
            24.635332252836303,
            1.389534357456544,
            0.061036087586785685,
            7.0559610705596105,
            3.9876880860155413,
            3.244005641748942,
            3.9760021047488396,
            1.4722799235308235,
            0.09195402298850575,
            13.20624503120824,
            16.0,
        ];
        assert_eq!(claims.len(), expected.len());
        for (c, e) in claims.iter().zip(expected) {
            assert!((c.value - e).abs() < 1e-9, "{}: {} vs {e}", c.name, c.value);
            assert!(c.pass(), "{}", c.summary_line());
        }
        assert!(claims[0].summary_line().starts_with("alias latency reduction 24.6% PASS"));
    }

    #[test]
    fn missing_row_is_reported() {
        let mut rows = bundled_reference();
        rows.retain(|r| r.group != 3);
        assert!(matches!(
            compare_table(&rows),
            Err(MetricsError::MissingRow { group: 3, .. })
        ));
    }

    #[test]
    fn composed_areas() {
        let t = ComponentAreaTable::PUBLISHED;
        let plain = compose_area(&AdderConfig::scbcla(32, 4, false), &t).unwrap();
        assert!((plain - 8.0 * 218.06).abs() < 1e-9);
        let rca = compose_area(&AdderConfig::rca(4), &t).unwrap();
        assert!((rca - 109.8).abs() < 1e-9);
        assert!(matches!(
            compose_area(&AdderConfig::rcla(32, 4), &t),
            Err(MetricsError::Unpriced(_))
        ));
        assert!(matches!(
            compose_area(&AdderConfig::scbcla(32, 2, false), &t),
            Err(MetricsError::Unpriced(_))
        ));
    }

    #[test]
    fn identities_and_overhead() {
        let rows = bundled_reference();
        let t = ComponentAreaTable::PUBLISHED;
        let ids = area_identities(&rows, &t).unwrap();
        let expect = [(40.64, 40.66), (108.26, 108.26), (113.34, 113.34)];
        for (i, (c, r)) in ids.iter().zip(expect) {
            assert!((i.composed - c).abs() < 1e-9 && (i.reference - r).abs() < 1e-9, "{i:?}");
            assert!(i.pass());
        }
        let o = area_overhead(&rows, &t).unwrap();
        assert!((o[0].1 - 780.44).abs() < 1e-9);
        assert!((o[3].1 - 780.46).abs() < 1e-9);
    }

    #[test]
    fn hop_paths_of_small_adder() {
        let n = gen_scbcla(8, 4, true).unwrap();
        let hops = hop_paths(&n).unwrap();
        assert_eq!(hops.len(), 2);
        assert_eq!(hops[0].primary.transistors(), 18);
        assert_eq!(hops[0].alias.as_ref().unwrap().transistors(), 10);
        assert!(hop_paths(&gen_scbclg(4, false).unwrap()).unwrap()[0].alias.is_none());
    }

    #[test]
    fn fa_latency_row() {
        let fa = gen_full_adder_eo();
        let v = crate::sim::exhaustive_vectors(1);
        let r = latency_row("FA", &fa, &v, &DelayModel::Unit).unwrap();
        assert_eq!(r.worst_latency, 2.0);
        assert_eq!(r.static_depth, 2.0);
        assert_eq!(r.vectors, 8);
    }

    #[test]
    fn table_rendering() {
        let mut t = Table::new("demo", &["a", "long_column"]).meta("seed", 7);
        t.push(vec!["x,y".into(), "1".into()]);
        assert_eq!(t.to_text(), "# demo\n# seed: 7\na    long_column\nx,y  1\n");
        assert_eq!(t.to_csv(), "# demo\n# seed: 7\na,long_column\n\"x,y\",1\n");
        let j = t.to_json();
        assert_eq!(j["rows"][0]["long_column"], "1");
        assert_eq!(j["meta"]["seed"], "7");
        assert_eq!("structured".parse::<OutputFormat>(), Ok(OutputFormat::Structured));
    }
}
