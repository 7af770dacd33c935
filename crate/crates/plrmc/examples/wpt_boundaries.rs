// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Boundary indices of the Wen plaquette translation circuit and the
//! evolution of one boundary logical.

use plrmc::models::wpt::{build_wpt, WptBoundary};
use plrmc::mqca::{index, period_map, IndexOptions, MapOptions};

fn main() -> plrmc::Result<()> {
    for (w, h, b) in [
        (8, 24, WptBoundary::RightR),
        (8, 24, WptBoundary::RightRReversed),
        (24, 10, WptBoundary::TopT),
        (24, 10, WptBoundary::TopTPrime),
    ] {
        let seq = build_wpt(w, h, b)?;
        let r = index(&period_map(&seq, None, &MapOptions::default())?, &IndexOptions::default())?;
        println!("{:<18} steps {}  verify {}  index {}", b.name(), seq.period(), seq.verify().ok, r.index);
    }
    let seq = build_wpt(8, 24, WptBoundary::RightR)?;
    let lat = seq.lattice();
    let start = lat.parse("Z(0,3) X(0,4)")?;
    for (t, p) in seq.trace(&start)?.iter().enumerate() {
        println!("{t}  {}", lat.format(p));
    }
    Ok(())
}
