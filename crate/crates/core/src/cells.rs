// SPDX-License-Identifier: Apache-2.0

//! Behavioral cell library and dual-rail value semantics.
//!
//! Every cell has a fixed input arity and a single output. Combinational
//! cells are positive-unate except `INV`; the Muller C-elements (`C2`, `C3`)
//! hold their previous output until all inputs agree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CellError {
    #[error("unknown cell kind `{0}`")]
    UnknownKind(String),
    #[error("{kind} expects {expected} inputs, got {actual}")]
    Arity {
        kind: CellKind,
        expected: usize,
        actual: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CellKind {
    Inv,
    Buf,
    And2,
    And3,
    And4,
    Or2,
    Or3,
    Or4,
    /// `Y = A·B + C·D`.
    Ao22,
    /// Alias carry gate. Same function as `Ao22`, catalogued separately so
    /// the redundant carry logic can be counted on its own.
    Alias,
    C2,
    C3,
}

impl CellKind {
    pub const ALL: [CellKind; 12] = [
        CellKind::Inv,
        CellKind::Buf,
        CellKind::And2,
        CellKind::And3,
        CellKind::And4,
        CellKind::Or2,
        CellKind::Or3,
        CellKind::Or4,
        CellKind::Ao22,
        CellKind::Alias,
        CellKind::C2,
        CellKind::C3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CellKind::Inv => "INV",
            CellKind::Buf => "BUF",
            CellKind::And2 => "AND2",
            CellKind::And3 => "AND3",
            CellKind::And4 => "AND4",
            CellKind::Or2 => "OR2",
            CellKind::Or3 => "OR3",
            CellKind::Or4 => "OR4",
            CellKind::Ao22 => "AO22",
            CellKind::Alias => "ALIAS",
            CellKind::C2 => "C2",
            CellKind::C3 => "C3",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            CellKind::Inv | CellKind::Buf => 1,
            CellKind::And2 | CellKind::Or2 | CellKind::C2 => 2,
            CellKind::And3 | CellKind::Or3 | CellKind::C3 => 3,
            CellKind::And4 | CellKind::Or4 | CellKind::Ao22 | CellKind::Alias => 4,
        }
    }

    pub fn is_c_element(self) -> bool {
        matches!(self, CellKind::C2 | CellKind::C3)
    }

    /// AND gate of the given width, if the library has one.
    pub fn and_of(width: usize) -> Option<CellKind> {
        match width {
            2 => Some(CellKind::And2),
            3 => Some(CellKind::And3),
            4 => Some(CellKind::And4),
            _ => None,
        }
    }

    pub fn or_of(width: usize) -> Option<CellKind> {
        match width {
            2 => Some(CellKind::Or2),
            3 => Some(CellKind::Or3),
            4 => Some(CellKind::Or4),
            _ => None,
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CellKind {
    type Err = CellError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CellKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| CellError::UnknownKind(s.to_string()))
    }
}

/// Catalog entry for one cell kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CellSpec {
    pub kind: CellKind,
    pub arity: usize,
    pub transistors: u32,
    /// Silicon area in μm², only where a published figure exists.
    pub area: Option<f64>,
    /// Nominal propagation delay in abstract units.
    pub delay: f64,
}

impl CellSpec {
    pub fn evaluate(&self, inputs: &[bool], previous_output: bool) -> Result<bool, CellError> {
        evaluate_cell(self.kind, inputs, previous_output)
    }
}

const fn transistors(kind: CellKind) -> u32 {
    match kind {
        CellKind::Inv => 2,
        CellKind::Buf => 4,
        CellKind::And2 => 6,
        CellKind::And3 => 8,
        CellKind::And4 => 10,
        CellKind::Or2 => 6,
        CellKind::Or3 => 8,
        CellKind::Or4 => 10,
        CellKind::Ao22 => 10,
        CellKind::Alias => 10,
        CellKind::C2 => 12,
        CellKind::C3 => 16,
    }
}

pub fn cell_spec(kind: CellKind) -> CellSpec {
    CellSpec {
        kind,
        arity: kind.arity(),
        transistors: transistors(kind),
        area: None,
        delay: 1.0,
    }
}

/// Looks a cell up by its library name (`"AO22"`, `"C2"`, ...).
pub fn cell_spec_by_name(name: &str) -> Result<CellSpec, CellError> {
    name.parse().map(cell_spec)
}

pub fn evaluate_cell(kind: CellKind, inputs: &[bool], previous_output: bool) -> Result<bool, CellError> {
    if inputs.len() != kind.arity() {
        return Err(CellError::Arity {
            kind,
            expected: kind.arity(),
            actual: inputs.len(),
        });
    }
    Ok(eval_unchecked(kind, inputs, previous_output))
}

/// Evaluation without the arity check; the simulator validates arity once
/// up front.
#[inline]
pub(crate) fn eval_unchecked(kind: CellKind, inputs: &[bool], previous_output: bool) -> bool {
    match kind {
        CellKind::Inv => !inputs[0],
        CellKind::Buf => inputs[0],
        CellKind::And2 | CellKind::And3 | CellKind::And4 => inputs.iter().all(|&x| x),
        CellKind::Or2 | CellKind::Or3 | CellKind::Or4 => inputs.iter().any(|&x| x),
        CellKind::Ao22 | CellKind::Alias => (inputs[0] && inputs[1]) || (inputs[2] && inputs[3]),
        CellKind::C2 | CellKind::C3 => {
            if inputs.iter().all(|&x| x) {
                true
            } else if inputs.iter().all(|&x| !x) {
                false
            } else {
                previous_output
            }
        }
    }
}

/// Four-state interpretation of a dual-rail pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualRailValue {
    Null,
    Zero,
    One,
    Invalid,
}

impl DualRailValue {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            DualRailValue::One
        } else {
            DualRailValue::Zero
        }
    }

    /// `(rail1, rail0)` wire levels for this value.
    pub fn rails(self) -> (bool, bool) {
        match self {
            DualRailValue::Null => (false, false),
            DualRailValue::One => (true, false),
            DualRailValue::Zero => (false, true),
            DualRailValue::Invalid => (true, true),
        }
    }

    pub fn is_valid(self) -> bool {
        matches!(self, DualRailValue::One | DualRailValue::Zero)
    }

    pub fn bit(self) -> Option<bool> {
        match self {
            DualRailValue::One => Some(true),
            DualRailValue::Zero => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for DualRailValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualRailValue::Null => "NULL",
            DualRailValue::Zero => "ZERO",
            DualRailValue::One => "ONE",
            DualRailValue::Invalid => "INVALID",
        })
    }
}

pub fn classify_pair(rail1: bool, rail0: bool) -> DualRailValue {
    match (rail1, rail0) {
        (false, false) => DualRailValue::Null,
        (true, false) => DualRailValue::One,
        (false, true) => DualRailValue::Zero,
        (true, true) => DualRailValue::Invalid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transistor_counts() {
        assert_eq!(cell_spec(CellKind::C2).transistors, 12);
        assert_eq!(cell_spec(CellKind::Alias).transistors, 10);
        assert_eq!(cell_spec(CellKind::Or2).transistors, 6);
        assert_eq!(
            cell_spec(CellKind::C2).transistors + cell_spec(CellKind::Or2).transistors,
            18
        );
        for kind in CellKind::ALL {
            let spec = cell_spec(kind);
            assert!(spec.transistors > 0);
            assert_eq!(spec.arity, kind.arity());
            assert_eq!(spec.delay, 1.0);
            assert!(spec.area.is_none());
        }
    }

    #[test]
    fn unknown_kind_is_catalog_error() {
        assert_eq!(
            cell_spec_by_name("AO21"),
            Err(CellError::UnknownKind("AO21".into()))
        );
        assert_eq!(cell_spec_by_name("ALIAS").unwrap().kind, CellKind::Alias);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_cell(CellKind::C2, &[true, false], true), Ok(true));
        assert_eq!(evaluate_cell(CellKind::And4, &[true; 4], false), Ok(true));
        assert_eq!(
            evaluate_cell(CellKind::Ao22, &[true, false, false, true], false),
            Ok(false)
        );
        assert_eq!(
            evaluate_cell(CellKind::And2, &[true, true, true], false),
            Err(CellError::Arity {
                kind: CellKind::And2,
                expected: 2,
                actual: 3
            })
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_pair(true, false), DualRailValue::One);
        assert_eq!(classify_pair(false, true), DualRailValue::Zero);
        assert_eq!(classify_pair(false, false), DualRailValue::Null);
        assert_eq!(classify_pair(true, true), DualRailValue::Invalid);
        for v in [
            DualRailValue::Null,
            DualRailValue::Zero,
            DualRailValue::One,
            DualRailValue::Invalid,
        ] {
            let (r1, r0) = v.rails();
            assert_eq!(classify_pair(r1, r0), v);
        }
    }

    fn any_kind() -> impl Strategy<Value = CellKind> {
        (0..CellKind::ALL.len()).prop_map(|i| CellKind::ALL[i])
    }

    proptest! {
        #[test]
        fn combinational_ignores_previous(kind in any_kind(), bits in proptest::collection::vec(any::<bool>(), 4)) {
            prop_assume!(!kind.is_c_element());
            let ins = &bits[..kind.arity()];
            prop_assert_eq!(
                evaluate_cell(kind, ins, false).unwrap(),
                evaluate_cell(kind, ins, true).unwrap()
            );
        }

        #[test]
        fn c_element_hysteresis(three in any::<bool>(), bits in proptest::collection::vec(any::<bool>(), 3), prev in any::<bool>()) {
            let kind = if three { CellKind::C3 } else { CellKind::C2 };
            let ins = &bits[..kind.arity()];
            let out = evaluate_cell(kind, ins, prev).unwrap();
            if ins.iter().all(|&x| x) {
                prop_assert!(out);
            } else if ins.iter().all(|&x| !x) {
                prop_assert!(!out);
            } else {
                prop_assert_eq!(out, prev);
            }
        }
    }
}
