// SPDX-License-Identifier: Apache-2.0

//! Workbench for quasi-delay-insensitive dual-rail adders.
//!
//! - [`cells`]: behavioral cell library and dual-rail value semantics
//! - [`netlist`]: gate-level IR, text format, validation, longest paths
//! - [`generators`]: early-output FA/SOL, section-carry lookahead adders
//!   with and without alias carry logic, RCA/RCLA comparison designs
//! - [`sim`]: event-driven 4-phase return-to-zero simulator with monitors
//! - [`verify`]: oracle sweeps, alias equivalence, early-output probes, fuzzing
//! - [`metrics`]: reference table, area composition, latency reports

pub mod cells;
pub mod generators;
pub mod metrics;
pub mod netlist;
pub mod sim;
pub mod verify;
