// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Verify the four-step translation circuit and compute its index.

use plrmc::models::chains::translation_1d;
use plrmc::mqca::{index, period_map, IndexOptions, MapOptions};

fn main() -> plrmc::Result<()> {
    let seq = translation_1d(20)?;
    let report = seq.verify();
    for t in &report.transitions {
        println!("{} -> {}: locally reversible {}", t.from, t.to, t.report.locally_reversible);
    }
    let map = period_map(&seq, None, &MapOptions::default())?;
    let r = index(&map, &IndexOptions::default())?;
    println!("index {} (z2 {}), dims {:?}", r.index, r.z2, r.dims);
    Ok(())
}
