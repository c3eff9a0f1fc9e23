//! Measurement-based quantum computation (MBQC) adder toolkit.
//!
//! This crate builds reversible adder circuits (ripple-carry and
//! carry-lookahead), compiles them to measurement patterns on a 2D cluster
//! state, lays the patterns out on a lattice, optimizes the layout by wire
//! removal and compaction, counts the four cluster-state resources (depth,
//! area, qubits, clustering operations), and verifies everything against a
//! dense state-vector simulator with Pauli-frame tracking.
//!
//! The pipeline is:
//!
//! ```text
//! build_*_adder -> Circuit -> compile -> PatternProgram -> place -> ClusterLayout
//!                                                             |        |
//!                                                         optimize   count_resources
//!                                                             |        |
//!                                                       simulate_pattern / sweep CSV
//! ```
//!
//! Every gate pattern in the catalog is data, validated by simulation
//! ([`pattern::verify_catalog`]), and every layout transformation is checked
//! against the classical oracle [`circuit::eval_circuit`].

pub mod circuit;
pub mod error;
pub mod estimate;
pub mod layout;
pub mod optimize;
pub mod pattern;
pub mod sim;

pub use circuit::{build_qcla_adder, build_ripple_adder, eval_circuit, Circuit, Gate, GateKind};
pub use error::Error;
