// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("column count {0} exceeds the cap of {cap}", cap = crate::f2::MAX_COLS)]
    TooWide(usize),
    #[error("subspace is not contained in the larger space")]
    NotSubspace,
    #[error("matrix is not invertible")]
    Singular,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown site {0}")]
    UnknownSite(String),
    #[error("qubit {qubit} out of range for a lattice of {n} qubits")]
    QubitRange { qubit: usize, n: usize },
    #[error("generators do not commute: {0}")]
    NonAbelian(String),
    #[error("operator is not logical: {0}")]
    NotLogical(String),
    #[error("pair is not reversible: {0}")]
    NotReversible(String),
    #[error("locality violation: {0}")]
    Locality(String),
    #[error("window too small: {0}")]
    Window(String),
    #[error("margin violation: {0}")]
    Margin(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
