// SPDX-License-Identifier: Apache-2.0

//! Line-oriented netlist text format.
//!
//! ```text
//! module fa_eo
//! input a0 a0_1 a0_0
//! gate g0 AO22 p_1 a0_1 b0_0 a0_0 b0_1
//! output s0 s0_1 s0_0
//! probe N n_net
//! end
//! ```
//!
//! Canonical emission order is: module, inputs, gates (topological), outputs,
//! probes, end. Tokens are separated by single spaces and lines end in `\n`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{Gate, NetId, Netlist, PortPair, Probe};
use crate::cells::CellKind;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: reference to undeclared net `{net}`")]
    UndeclaredNet { line: usize, net: String },
    #[error("line {line}: {kind} takes {expected} inputs, got {actual}")]
    Arity {
        line: usize,
        kind: CellKind,
        expected: usize,
        actual: usize,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn is_ident(tok: &str) -> bool {
    !tok.is_empty()
        && tok
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

pub fn emit_netlist(netlist: &Netlist) -> String {
    let mut out = String::new();
    let name = |n: NetId| netlist.net_name(n);
    writeln!(out, "module {}", netlist.name).unwrap();
    for p in &netlist.inputs {
        writeln!(out, "input {} {} {}", p.label, name(p.rail1), name(p.rail0)).unwrap();
    }
    let order = netlist
        .topological_order()
        .unwrap_or_else(|| (0..netlist.gates.len()).collect());
    for i in order {
        let g = &netlist.gates[i];
        write!(out, "gate {} {} {}", g.id, g.kind, name(g.output)).unwrap();
        for &n in &g.inputs {
            write!(out, " {}", name(n)).unwrap();
        }
        out.push('\n');
    }
    for p in &netlist.outputs {
        writeln!(out, "output {} {} {}", p.label, name(p.rail1), name(p.rail0)).unwrap();
    }
    for p in &netlist.probes {
        writeln!(out, "probe {} {}", p.label, name(p.net)).unwrap();
    }
    out.push_str("end\n");
    out
}

enum Line<'a> {
    Input(usize, &'a str, &'a str, &'a str),
    Output(usize, &'a str, &'a str, &'a str),
    Probe(usize, &'a str, &'a str),
    Gate(usize, &'a str, CellKind, &'a str, Vec<&'a str>),
}

pub fn parse_netlist(text: &str) -> Result<Netlist, ParseError> {
    let mut name = None;
    let mut ended = false;
    let mut lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let Some((&directive, args)) = toks.split_first() else {
            continue;
        };
        if directive.starts_with('#') {
            continue;
        }
        if ended {
            return Err(syntax(line, "content after `end`"));
        }
        if name.is_none() && directive != "module" {
            return Err(syntax(line, "expected `module` declaration first"));
        }
        for tok in args {
            if !is_ident(tok) {
                return Err(syntax(line, format!("invalid identifier `{tok}`")));
            }
        }
        let want = |n: usize| -> Result<(), ParseError> {
            if args.len() == n {
                Ok(())
            } else {
                Err(syntax(
                    line,
                    format!("`{directive}` takes {n} arguments, got {}", args.len()),
                ))
            }
        };
        match directive {
            "module" => {
                want(1)?;
                if name.is_some() {
                    return Err(syntax(line, "duplicate `module` declaration"));
                }
                name = Some(args[0].to_string());
            }
            "input" => {
                want(3)?;
                lines.push(Line::Input(line, args[0], args[1], args[2]));
            }
            "output" => {
                want(3)?;
                lines.push(Line::Output(line, args[0], args[1], args[2]));
            }
            "probe" => {
                want(2)?;
                lines.push(Line::Probe(line, args[0], args[1]));
            }
            "gate" => {
                if args.len() < 3 {
                    return Err(syntax(line, "`gate` needs an id, a kind and an output net"));
                }
                let kind: CellKind = args[1]
                    .parse()
                    .map_err(|e| syntax(line, format!("{e}")))?;
                let ins = args[3..].to_vec();
                if ins.len() != kind.arity() {
                    return Err(ParseError::Arity {
                        line,
                        kind,
                        expected: kind.arity(),
                        actual: ins.len(),
                    });
                }
                lines.push(Line::Gate(line, args[0], kind, args[2], ins));
            }
            "end" => {
                want(0)?;
                ended = true;
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let Some(name) = name else {
        return Err(syntax(1, "missing `module` declaration"));
    };
    if !ended {
        return Err(syntax(text.lines().count().max(1), "missing `end`"));
    }

    let mut netlist = Netlist {
        name,
        ..Netlist::default()
    };
    let mut index: HashMap<&str, NetId> = HashMap::new();
    // First pass: everything that drives a net declares it.
    for l in &lines {
        let driven: &[&str] = match l {
            Line::Input(_, _, r1, r0) => &[r1, r0],
            Line::Gate(_, _, _, out, _) => std::slice::from_ref(out),
            _ => &[],
        };
        for &net in driven {
            index.entry(net).or_insert_with(|| {
                netlist.nets.push(net.to_string());
                NetId(netlist.nets.len() - 1)
            });
        }
    }
    let lookup = |line: usize, net: &str| -> Result<NetId, ParseError> {
        index.get(net).copied().ok_or_else(|| ParseError::UndeclaredNet {
            line,
            net: net.to_string(),
        })
    };

    let mut gate_ids: HashMap<&str, usize> = HashMap::new();
    for l in &lines {
        match l {
            Line::Input(line, label, r1, r0) => netlist.inputs.push(PortPair {
                label: label.to_string(),
                rail1: lookup(*line, r1)?,
                rail0: lookup(*line, r0)?,
            }),
            Line::Output(line, label, r1, r0) => netlist.outputs.push(PortPair {
                label: label.to_string(),
                rail1: lookup(*line, r1)?,
                rail0: lookup(*line, r0)?,
            }),
            Line::Probe(line, label, net) => netlist.probes.push(Probe {
                label: label.to_string(),
                net: lookup(*line, net)?,
            }),
            Line::Gate(line, id, kind, out, ins) => {
                if let Some(prev) = gate_ids.insert(id, *line) {
                    return Err(syntax(
                        *line,
                        format!("gate id `{id}` already used on line {prev}"),
                    ));
                }
                let inputs = ins
                    .iter()
                    .map(|n| lookup(*line, n))
                    .collect::<Result<Vec<_>, _>>()?;
                netlist.gates.push(Gate {
                    id: id.to_string(),
                    kind: *kind,
                    inputs,
                    output: lookup(*line, out)?,
                });
            }
        }
    }
    Ok(netlist)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FA_LIKE: &str = "module t\ninput a a_1 a_0\ninput b b_1 b_0\ngate g0 AO22 y_1 a_1 b_0 a_0 b_1\ngate g1 AO22 y_0 a_1 b_1 a_0 b_0\noutput y y_1 y_0\nprobe P y_1\nend\n";

    #[test]
    fn canonical_text_round_trips() {
        let n = parse_netlist(FA_LIKE).unwrap();
        assert_eq!(emit_netlist(&n), FA_LIKE);
        assert_eq!(n.probe("P"), n.find_net("y_1"));
    }

    #[test]
    fn gate_line_grammar() {
        let text = "module t\ninput a a b\ninput c c d\ngate g1 AO22 y a b c d\noutput y y y\nend\n";
        let n = parse_netlist(text).unwrap();
        let g = n.gate("g1").unwrap();
        assert_eq!(g.kind, CellKind::Ao22);
        assert_eq!(n.net_name(g.output), "y");
    }

    #[test]
    fn arity_error_has_line() {
        let text = "module t\ninput a a b\ninput c c d\ngate g1 AO22 y a b c\nend\n";
        assert_eq!(
            parse_netlist(text),
            Err(ParseError::Arity {
                line: 4,
                kind: CellKind::Ao22,
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn undeclared_net_and_unknown_directive() {
        let text = "module t\ninput a a_1 a_0\ngate g1 AND2 y a_1 ghost\nend\n";
        assert_eq!(
            parse_netlist(text),
            Err(ParseError::UndeclaredNet {
                line: 3,
                net: "ghost".into()
            })
        );
        let text = "module t\nwire w\nend\n";
        assert!(matches!(
            parse_netlist(text),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_netlist("module t\ninput a a_1 a_0\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_netlist("module t\ngate g1 FOO y a\nend\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_netlist("module t\ninput a a-1 a_0\nend\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn duplicate_gate_id_rejected() {
        let text = "module t\ninput a a_1 a_0\ngate g1 AND2 y a_1 a_0\ngate g1 OR2 z a_1 a_0\nend\n";
        assert!(matches!(
            parse_netlist(text),
            Err(ParseError::Syntax { line: 4, .. })
        ));
    }
}
