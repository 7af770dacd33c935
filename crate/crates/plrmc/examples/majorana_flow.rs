// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Half-integer flow of the shift on a Majorana chain algebra.

use plrmc::models::chains::majorana_shift;
use plrmc::mqca::{mqca_index, IndexOptions};

fn main() -> plrmc::Result<()> {
    let m = majorana_shift(24)?;
    // Cuts are in doubled units; the flow zone is [b, a).
    for (a, b) in [(24, 20), (28, 16), (30, 10)] {
        let r = mqca_index(&m, a, b, &IndexOptions::default())?;
        println!("cuts [{}, {}): index {}, dims {:?}", b / 2, a / 2, r.index, r.dims);
    }
    Ok(())
}
