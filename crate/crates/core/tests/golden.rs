// SPDX-License-Identifier: Apache-2.0

//! Canonical netlist text of the reference designs, compared byte for byte
//! against `tests/golden/*.net`. Run with `UPDATE_GOLDEN=1` to rewrite the
//! files after an intentional generator change.

use std::path::PathBuf;

use qdi_core::generators::{gen_full_adder_eo, gen_rca, gen_scbclg, gen_sol_eo, AdderConfig};
use qdi_core::netlist::{emit_netlist, parse_netlist, validate, Netlist};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn designs() -> Vec<Netlist> {
    let mut out = vec![
        gen_full_adder_eo(),
        gen_sol_eo(),
        gen_rca(4).unwrap(),
        gen_scbclg(4, false).unwrap(),
        gen_scbclg(4, true).unwrap(),
    ];
    for cfg in [
        AdderConfig::scbcla(32, 4, false),
        AdderConfig::scbcla(32, 4, true),
        AdderConfig::scbcla(32, 4, false).hybrid(4),
        AdderConfig::scbcla(32, 4, true).hybrid(4),
        AdderConfig::rcla(32, 4),
        AdderConfig::rcla(32, 4).hybrid(4),
    ] {
        out.push(cfg.generate().unwrap());
    }
    out
}

#[test]
fn generated_netlists_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = golden_dir();
    let mut mismatched = Vec::new();
    for n in designs() {
        let path = dir.join(format!("{}.net", n.name));
        let text = emit_netlist(&n);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e} (run with UPDATE_GOLDEN=1 to create)", path.display()));
        if expected != text {
            mismatched.push(n.name.clone());
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch: {mismatched:?}");
}

#[test]
fn golden_files_parse_back_to_the_same_structure() {
    let generated = designs();
    for n in &generated {
        let path = golden_dir().join(format!("{}.net", n.name));
        let Ok(text) = std::fs::read_to_string(&path) else {
            continue;
        };
        let parsed = parse_netlist(&text).unwrap();
        assert!(validate(&parsed).is_valid(), "{}", n.name);
        assert!(parsed.same_structure(n), "{}", n.name);
        assert_eq!(emit_netlist(&parsed), text, "{} is not canonical", n.name);
    }
}
