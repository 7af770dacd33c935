// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Normal form of a 2-local commuting group on a chain: on-site Cliffords
//! turn it into Ising chains, Bell pairs and pinned qubits.

use plrmc::decompose::ising_decompose;
use plrmc::stab::StabilizerGroup;

fn main() -> plrmc::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/mixed.json").into());
    let text = std::fs::read_to_string(&path).map_err(|e| plrmc::Error::Config(format!("{path}: {e}")))?;
    let g = StabilizerGroup::from_file_json(&text)?;
    let d = ising_decompose(&g)?;
    let report = d.report();
    for c in &report.chains {
        println!("chain {}..{}: {}", c.first_site, c.last_site, c.qubits.join(" "));
    }
    for [p, q] in &report.bell_pairs {
        println!("bell pair {p} {q}");
    }
    println!("normal form: {}", report.normal_form.join(", "));
    Ok(())
}
