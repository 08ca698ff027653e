//! Clifford+T decompositions of multi-controlled Pauli gates.
//!
//! Multi-controlled Paulis (Toffoli, CCZ, and their wider C^nX/C^nY/C^nZ
//! relatives) dominate the fault-tolerant cost of most quantum algorithms,
//! and the interesting trade-offs — T-count vs T-depth vs CNOT count vs
//! ancillas vs measurement feedback — only show up once measurement-assisted
//! uncomputation enters the picture. This crate provides:
//!
//! * a small circuit IR over the Clifford+T alphabet with measurement and
//!   classically conditioned gates ([`circuit`]), plus a text format
//!   ([`text`]);
//! * a catalog of named decompositions of Toffoli/CCZ/CCCZ/C⁵Z and friends,
//!   each certified against an explicitly declared target ([`catalog`]);
//! * composable single-control extension gadgets and log-depth ladder
//!   constructions that grow C^kZ into C^nZ ([`extend`]);
//! * resource metrics: T-count, outcome-dependent CNOT range, ASAP T-depth,
//!   ancilla and feedback counts ([`metrics`]);
//! * a dense statevector/branch-channel verifier for everything up to 16
//!   wires ([`sim`]), and a suite of checked gate identities ([`identities`]).
//!
//! Start with the runnable examples (`cargo run --example <name>`), one per
//! capability:
//!
//! | example | shows |
//! |---|---|
//! | `build_and_inspect` | building catalog circuits, text serialization |
//! | `resource_tables` | the CCCZ cost table and cost-formula families |
//! | `verify_catalog` | channel-level certification of every entry |
//! | `add_control_methods` | the four single-control extension gadgets |
//! | `logdepth_tree` | log-depth C^nZ ladders and their T-depth formulas |
//! | `assignment_strategies` | designated-control search (linear/greedy/exhaustive) |
//! | `feedback_simulation` | forcing measurement outcomes, branch channels |
//! | `identity_suite` | the checked algebraic identities |
//! | `text_roundtrip` | the text format, parse errors included |
//!
//! The same functionality is scriptable through the thin `mcpauli` binary
//! (`mcpauli list|build|report|verify|table|tdepth-scan|identities`).

pub mod catalog;
pub mod circuit;
pub mod extend;
pub mod identities;
pub mod metrics;
pub mod sim;
pub mod text;
