// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Periodic locally reversible Pauli measurement circuits.
//!
//! A circuit is a cyclic list of instantaneous stabilizer groups (ISGs) on a
//! finite lattice window. The crate checks that consecutive groups form
//! locally reversible pairs, evolves logical operators through a period,
//! and computes the MQCA index of the induced boundary automorphism.

pub mod cli;
pub mod decompose;
pub mod error;
pub mod f2;
pub mod models;
pub mod mqca;
pub mod pauli;
pub mod rev;
pub mod stab;

pub use error::{Error, Result};
