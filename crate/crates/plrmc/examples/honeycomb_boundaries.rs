// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Honeycomb Floquet code: bulk check and the three zigzag boundaries.

use plrmc::models::hh::{build_hh, HhBoundary};
use plrmc::mqca::{index, period_map, IndexOptions, MapOptions};

fn main() -> plrmc::Result<()> {
    let bulk = build_hh(12, 18, HhBoundary::Bulk)?;
    println!("bulk: {} steps, verify {}", bulk.period(), bulk.verify().ok);
    for (w, b) in [(36, HhBoundary::ZigzagI), (36, HhBoundary::ZigzagII), (60, HhBoundary::ZigzagIIISequence)] {
        let seq = build_hh(w, 18, b)?;
        let r = index(&period_map(&seq, None, &MapOptions::default())?, &IndexOptions::default())?;
        println!("{:<22} steps {}  index {} (z2 {})", b.name(), seq.period(), r.index, r.z2);
    }
    let seq = build_hh(36, 8, HhBoundary::ZigzagII)?;
    let lat = seq.lattice();
    for (t, p) in seq.trace(&lat.parse("X(0)")?)?.iter().enumerate() {
        println!("{t}  {}", lat.format(p));
    }
    Ok(())
}
