// SPDX-License-Identifier: Apache-2.0

//! `qdi`: generate, simulate, verify and benchmark dual-rail early-output
//! adders.
//!
//! Exit status: 0 when every check passed, 1 when a check failed, 2 on
//! usage or input errors.

mod config;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use config::ConfigFile;
use qdi_core::generators::{
    gen_completion_detector, gen_full_adder_eo, gen_scbclg, gen_sol_eo, AdderConfig, Architecture,
};
use qdi_core::metrics::{
    area_identities, area_overhead, bundled_reference, claims_table, compare_table, latency_report, latency_table,
    ordering_verdict, parse_reference, ComponentAreaTable, OutputFormat, Table, Variant,
};
use qdi_core::netlist::{emit_netlist, gate_census, parse_netlist, Netlist};
use qdi_core::sim::{
    exhaustive_vectors, format_trace, parse_vectors, random_vectors, run_handshake_cycles_with, stress_vectors,
    AdderPorts, AdderVector, DelayModel, SimOptions, DEFAULT_RANDOM_RANGE,
};
use qdi_core::verify::{
    alias_equivalence_check, checks_table, early_output_probe, first_or4, oracle_check, qdi_fuzz, Check,
    Expectation, Mutation, ProbeScenario, VectorSource,
};

#[derive(Parser, Debug)]
#[command(name = "qdi", version, about = "Dual-rail early-output adder workbench")]
struct Cli {
    /// `key = value` file supplying defaults for any flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated netlist and print its gate census.
    Gen {
        #[command(flatten)]
        design: DesignArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run handshake cycles and report results per vector.
    Sim {
        #[command(flatten)]
        design: DesignArgs,
        #[command(flatten)]
        delay: DelayArgs,
        #[command(flatten)]
        vectors: VectorArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Write the event trace (time,net,value) of the first vector.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Oracle, alias-equivalence, early-output and fuzz checks.
    Verify {
        #[command(flatten)]
        design: DesignArgs,
        #[command(flatten)]
        delay: DelayArgs,
        #[command(flatten)]
        vectors: VectorArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Compare primary and alias carries exhaustively.
        #[arg(long)]
        alias_check: bool,
        /// Randomized-delay trials.
        #[arg(long)]
        fuzz: Option<usize>,
        /// Early-set and early-reset probes with the carry-in withheld.
        #[arg(long)]
        early: bool,
        /// Verify a deliberately broken copy of the design.
        #[arg(long, value_parser = ["swap-rails", "drop-c", "drop-or"])]
        mutate: Option<String>,
    },
    /// Simulate the design matrix and check the latency ordering.
    Bench {
        #[arg(long)]
        group4: bool,
        #[arg(long)]
        group3: bool,
        #[arg(long)]
        width: Option<usize>,
        #[arg(long)]
        section: Option<usize>,
        #[arg(long = "hybrid-rca")]
        hybrid_rca: Option<usize>,
        #[command(flatten)]
        delay: DelayArgs,
        #[command(flatten)]
        vectors: VectorArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Recompute the percentage claims and area identities from the
    /// reference rows.
    Report {
        /// `bundled` or a path to a tab-separated table.
        #[arg(long, default_value = "bundled")]
        reference: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct DesignArgs {
    /// scbcla, rcla, rca, scbclg (one lookahead block), fa, sol, cd
    /// (completion detector).
    #[arg(long, value_parser = ["scbcla", "rcla", "rca", "scbclg", "fa", "sol", "cd"])]
    arch: Option<String>,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    section: Option<usize>,
    #[arg(long)]
    alias: bool,
    #[arg(long = "hybrid-rca")]
    hybrid_rca: Option<usize>,
    /// Read the design from a netlist file instead of generating it.
    #[arg(long, conflicts_with = "arch")]
    netlist: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DelayArgs {
    #[arg(long, value_parser = ["unit", "random"])]
    delay: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    delay_min: Option<f64>,
    #[arg(long)]
    delay_max: Option<f64>,
}

#[derive(Args, Debug)]
struct VectorArgs {
    /// Vector file: `a_hex,b_hex,cin` per line.
    #[arg(long)]
    vectors: Option<PathBuf>,
    /// Seeded random vectors.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long)]
    exhaustive: bool,
    /// Directed long-carry-chain vectors.
    #[arg(long)]
    stress: bool,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_parser = ["text", "csv", "structured", "json"])]
    format: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

const DEFAULT_SEED: u64 = 1;

struct Ctx {
    cfg: ConfigFile,
}

struct Design {
    netlist: Netlist,
    config: Option<AdderConfig>,
}

impl Ctx {
    fn design(&self, d: &DesignArgs) -> Result<Design> {
        if let Some(path) = &d.netlist {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let netlist = parse_netlist(&text).with_context(|| format!("parsing {}", path.display()))?;
            return Ok(Design { netlist, config: None });
        }
        let arch: String = self.cfg.pick(d.arch.clone(), "arch")?.unwrap_or_else(|| "scbcla".into());
        let width: usize = self.cfg.pick(d.width, "width")?.unwrap_or(32);
        let section: usize = self.cfg.pick(d.section, "section")?.unwrap_or(4);
        let alias = self.cfg.switch(d.alias, "alias")?;
        let rca: usize = self.cfg.pick(d.hybrid_rca, "hybrid-rca")?.unwrap_or(0);
        let config = match arch.as_str() {
            "scbcla" => AdderConfig::scbcla(width, section, alias).hybrid(rca),
            "rcla" => AdderConfig::rcla(width, section).hybrid(rca),
            "rca" => AdderConfig::rca(width),
            "scbclg" => return Ok(Design { netlist: gen_scbclg(section, alias)?, config: None }),
            "fa" => return Ok(Design { netlist: gen_full_adder_eo(), config: None }),
            "sol" => return Ok(Design { netlist: gen_sol_eo(), config: None }),
            "cd" => return Ok(Design { netlist: gen_completion_detector(width)?, config: None }),
            other => bail!("unknown architecture `{other}`"),
        };
        if config.architecture == Architecture::Rca && (alias || rca > 0) {
            bail!("--alias and --hybrid-rca do not apply to rca");
        }
        Ok(Design {
            netlist: config.generate()?,
            config: Some(config),
        })
    }

    fn seed(&self, d: &DelayArgs) -> Result<u64> {
        Ok(self.cfg.pick(d.seed, "seed")?.unwrap_or(DEFAULT_SEED))
    }

    fn delays(&self, d: &DelayArgs) -> Result<DelayModel> {
        let kind: String = self.cfg.pick(d.delay.clone(), "delay")?.unwrap_or_else(|| "unit".into());
        match kind.as_str() {
            "unit" => Ok(DelayModel::Unit),
            "random" => Ok(DelayModel::Random {
                seed: self.seed(d)?,
                min: self.cfg.pick(d.delay_min, "delay-min")?.unwrap_or(DEFAULT_RANDOM_RANGE.0),
                max: self.cfg.pick(d.delay_max, "delay-max")?.unwrap_or(DEFAULT_RANDOM_RANGE.1),
            }),
            other => bail!("unknown delay model `{other}` (unit, random)"),
        }
    }

    /// Vectors from every requested source, in the order exhaustive,
    /// stress, file, random. `None` when no source was requested.
    fn vectors(&self, v: &VectorArgs, width: usize, seed: u64) -> Result<Option<Vec<AdderVector>>> {
        let mut out = Vec::new();
        let mut any = false;
        if self.cfg.switch(v.exhaustive, "exhaustive")? {
            if width > 12 {
                bail!("--exhaustive is limited to 12-bit designs");
            }
            out.extend(exhaustive_vectors(width));
            any = true;
        }
        if self.cfg.switch(v.stress, "stress")? {
            out.extend(stress_vectors(width));
            any = true;
        }
        let file: Option<PathBuf> = self.cfg.pick(v.vectors.clone(), "vectors")?;
        if let Some(path) = file {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            out.extend(parse_vectors(&text)?);
            any = true;
        }
        if let Some(n) = self.cfg.pick(v.random, "random")? {
            out.extend(random_vectors(width, n, seed));
            any = true;
        }
        Ok(any.then_some(out))
    }

    fn format(&self, o: &OutputArgs) -> Result<OutputFormat> {
        let f: Option<String> = self.cfg.pick(o.format.clone(), "format")?;
        f.map_or(Ok(OutputFormat::Text), |s| s.parse().map_err(anyhow::Error::msg))
    }
}

fn delay_label(d: &DelayModel) -> String {
    match d {
        DelayModel::Unit => "unit".into(),
        DelayModel::Table(_) => "table".into(),
        DelayModel::Random { seed, min, max } => format!("random[{min}, {max}] seed {seed}"),
    }
}

fn render(tables: &[Table], format: OutputFormat) -> String {
    match format {
        OutputFormat::Structured => {
            let v: Vec<_> = tables.iter().map(Table::to_json).collect();
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        _ => tables
            .iter()
            .map(|t| t.render(format))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn adder_width(n: &Netlist) -> Result<usize> {
    Ok(AdderPorts::from_netlist(n)?.width)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let ctx = Ctx { cfg };
    match cli.command {
        Command::Gen { design, output } => {
            let d = ctx.design(&design)?;
            let text = emit_netlist(&d.netlist);
            let census = gate_census(&d.netlist);
            let summary = format!(
                "{}: {} gates, {} transistors\n{census}\n",
                d.netlist.name,
                census.total_gates(),
                census.transistors
            );
            match output {
                Some(p) => {
                    emit(&text, Some(&p))?;
                    print!("{summary}");
                }
                None => {
                    print!("{text}");
                    eprint!("{summary}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sim {
            design,
            delay,
            vectors,
            out,
            trace,
        } => {
            let d = ctx.design(&design)?;
            let seed = ctx.seed(&delay)?;
            let delays = ctx.delays(&delay)?;
            let width = adder_width(&d.netlist)?;
            let vs = ctx
                .vectors(&vectors, width, seed)?
                .unwrap_or_else(|| random_vectors(width, 16, seed));
            let cycles = run_handshake_cycles_with(&d.netlist, &vs, &delays, SimOptions::default())?;
            if let (Some(path), Some(first)) = (trace, vs.first()) {
                let opts = SimOptions {
                    record_events: true,
                    ..SimOptions::default()
                };
                let c = &run_handshake_cycles_with(&d.netlist, &[*first], &delays, opts)?[0];
                let shift = c.data.quiescence_time;
                let mut events = c.data.events.clone();
                events.extend(c.rtz.events.iter().map(|e| qdi_core::sim::Event {
                    time: e.time + shift,
                    ..*e
                }));
                fs::write(&path, format_trace(&d.netlist, &events))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let mut t = Table::new(
                "handshake cycles",
                &["index", "a", "b", "cin", "sum", "cout", "correct", "latency", "rtz_latency", "transitions", "violations"],
            )
            .meta("design", &d.netlist.name)
            .meta("seed", seed)
            .meta("delays", delay_label(&delays))
            .meta("vectors", vs.len());
            let mut ok = true;
            for c in &cycles {
                let violations: Vec<String> = c.violations().map(|v| v.to_string()).collect();
                ok &= c.correct() && violations.is_empty();
                t.push(vec![
                    c.index.to_string(),
                    format!("{:x}", c.vector.a),
                    format!("{:x}", c.vector.b),
                    u8::from(c.vector.cin).to_string(),
                    format!("{:x}", c.sum),
                    c.couts.iter().map(|&b| u8::from(b).to_string()).collect::<Vec<_>>().join("/"),
                    c.correct().to_string(),
                    c.latency().to_string(),
                    c.rtz_latency().to_string(),
                    (c.data.transitions + c.rtz.transitions).to_string(),
                    violations.join("; "),
                ]);
            }
            emit(&t.render(ctx.format(&out)?), out.output.as_deref())?;
            Ok(status(ok))
        }
        Command::Verify {
            design,
            delay,
            vectors,
            out,
            alias_check,
            fuzz,
            early,
            mutate,
        } => {
            let mut d = ctx.design(&design)?;
            let seed = ctx.seed(&delay)?;
            let delays = ctx.delays(&delay)?;
            if let Some(m) = mutate {
                let mutation = match m.as_str() {
                    "swap-rails" => Mutation::SwapOutputRails { output: "s0".into() },
                    "drop-c" => {
                        let block = d
                            .netlist
                            .probes
                            .iter()
                            .find_map(|p| p.label.strip_suffix('N'))
                            .context("design has no lookahead block")?;
                        Mutation::DropCElement { block: block.to_string() }
                    }
                    _ => Mutation::DropOrTerm {
                        gate: first_or4(&d.netlist).context("design has no OR4 gate")?.to_string(),
                    },
                };
                d.netlist = mutation.apply(&d.netlist)?;
            }
            let width = adder_width(&d.netlist)?;
            let fuzz: Option<usize> = ctx.cfg.pick(fuzz, "fuzz")?;
            let requested = ctx.vectors(&vectors, width, seed)?;
            let exhaustive = ctx.cfg.switch(vectors.exhaustive, "exhaustive")?;
            let mut checks: Vec<Check> = Vec::new();
            let vs = match requested {
                Some(v) => Some(v),
                None if fuzz.is_none() && !alias_check && !early => Some(if width <= 8 {
                    exhaustive_vectors(width)
                } else {
                    let mut v = stress_vectors(width);
                    v.extend(random_vectors(width, 1000, seed));
                    v
                }),
                None => None,
            };
            if let Some(vs) = vs {
                checks.push(oracle_check(&d.netlist, &vs, &delays)?.check("oracle"));
            }
            let has_alias = d.netlist.output("cout_alias").is_some()
                || d.netlist.probes.iter().any(|p| p.label.ends_with("C41alias"));
            if alias_check || (exhaustive && has_alias && width <= 8) {
                checks.push(alias_equivalence_check(&d.netlist)?.check());
            }
            if early {
                let m = qdi_core::sim::mask_bits(width);
                for scenario in [
                    ProbeScenario::data(AdderVector::new(m, m, false), &["cin"], Expectation::Complete),
                    ProbeScenario::rtz(AdderVector::new(m, m, false), &["cin"], Expectation::Complete),
                ] {
                    let o = early_output_probe(&d.netlist, &scenario, &delays)?;
                    checks.push(Check {
                        name: format!("early {} with cin held", scenario.phase),
                        design: d.netlist.name.clone(),
                        cases: 1,
                        passed: o.matches_expectation(),
                        detail: if o.waiting.is_empty() {
                            format!("all outputs done at t={}", o.completion_time.unwrap_or(0.0))
                        } else {
                            format!("waiting: {}", o.waiting.join(", "))
                        },
                    });
                }
            }
            if let Some(trials) = fuzz {
                checks.push(qdi_fuzz(&d.netlist, trials, seed, &VectorSource::Mixed)?.check());
            }
            let ok = checks.iter().all(|c| c.passed);
            let t = checks_table(&checks)
                .meta("design", &d.netlist.name)
                .meta("seed", seed)
                .meta("delays", delay_label(&delays));
            emit(&t.render(ctx.format(&out)?), out.output.as_deref())?;
            if let Some(config) = d.config {
                eprintln!("{}: {}", config.design_name(), if ok { "PASS" } else { "FAIL" });
            }
            Ok(status(ok))
        }
        Command::Bench {
            group4,
            group3,
            width,
            section,
            hybrid_rca,
            delay,
            vectors,
            out,
        } => {
            let width: usize = ctx.cfg.pick(width, "width")?.unwrap_or(32);
            let section: usize = ctx.cfg.pick(section, "section")?.unwrap_or(4);
            let rca: usize = ctx.cfg.pick(hybrid_rca, "hybrid-rca")?.unwrap_or(section);
            let seed = ctx.seed(&delay)?;
            let delays = ctx.delays(&delay)?;
            let (g4, g3) = if group4 || group3 { (group4, group3) } else { (true, true) };
            let mut variants = Vec::new();
            if g4 {
                variants.extend(Variant::GROUP4);
            }
            if g3 {
                variants.extend(Variant::GROUP3);
            }
            let designs = variants
                .iter()
                .map(|v| Ok((v.label().to_string(), v.config(width, section, rca).generate()?)))
                .collect::<Result<Vec<_>>>()?;
            let vs = ctx.vectors(&vectors, width, seed)?.unwrap_or_else(|| {
                let mut v = stress_vectors(width);
                v.extend(random_vectors(width, 1000, seed));
                v
            });
            let rows = latency_report(&designs, &vs, &delays)?;
            let mut t = latency_table(&rows)
                .meta("seed", seed)
                .meta("delays", delay_label(&delays))
                .meta("vectors", vs.len());
            let mut ok = true;
            if g4 {
                let v = ordering_verdict(&rows)?;
                ok = v.pass();
                t = t
                    .meta(
                        "ordering hybrid-alias < alias < hybrid-plain < plain",
                        if v.group4_order { "PASS" } else { "FAIL" },
                    )
                    .meta(
                        "plain/alias ratio",
                        format!(
                            "{:.3} (reference {:.3}, bounds [1.15, 1.60]) {}",
                            v.plain_alias_ratio,
                            qdi_core::metrics::REFERENCE_PLAIN_ALIAS_RATIO,
                            if v.ratio_in_bounds { "PASS" } else { "FAIL" }
                        ),
                    );
                if let Some(r) = v.rcla_slower_than_alias {
                    t = t.meta("RCLA slower than alias", if r { "PASS" } else { "FAIL" });
                }
            }
            emit(&t.render(ctx.format(&out)?), out.output.as_deref())?;
            Ok(status(ok))
        }
        Command::Report { reference, out } => {
            let rows = if reference == "bundled" {
                bundled_reference()
            } else {
                let text = fs::read_to_string(&reference).with_context(|| format!("reading {reference}"))?;
                parse_reference(&text)?
            };
            let table = ComponentAreaTable::PUBLISHED;
            let claims = compare_table(&rows)?;
            let ids = area_identities(&rows, &table)?;
            let overhead = area_overhead(&rows, &table)?;
            let ok = claims.iter().all(|c| c.pass()) && ids.iter().all(|i| i.pass());
            let format = ctx.format(&out)?;
            let text = match format {
                OutputFormat::Text => {
                    let mut s = String::from("# reference percentage claims\n");
                    for c in &claims {
                        s.push_str(&c.summary_line());
                        s.push('\n');
                    }
                    s.push('\n');
                    s + &qdi_core::metrics::area_table(&ids, &overhead).to_text()
                }
                f => render(
                    &[
                        claims_table(&claims).meta("reference", &reference),
                        qdi_core::metrics::area_table(&ids, &overhead),
                        table.table(),
                    ],
                    f,
                ),
            };
            emit(&text, out.output.as_deref())?;
            Ok(status(ok))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
