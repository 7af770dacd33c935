// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Reversibility of a measurement step, its conjugate bases, and a logical
//! carried through it.

use std::sync::Arc;

use plrmc::pauli::Lattice;
use plrmc::rev::{evolve_logical, find_conjugate_bases, is_reversible_pair};
use plrmc::stab::StabilizerGroup;

fn main() -> plrmc::Result<()> {
    let lat = Arc::new(Lattice::chain(3, 1, false));
    let group = |gens: &[&str]| -> plrmc::Result<StabilizerGroup> {
        StabilizerGroup::new(lat.clone(), gens.iter().map(|g| lat.parse(g)).collect::<plrmc::Result<_>>()?)
    };
    // Teleport qubit 0 to qubit 2 through a Bell pair.
    let a = group(&["X(1) X(2)", "Z(1) Z(2)"])?;
    let b = group(&["X(0) X(1)", "Z(0) Z(1)"])?;
    let r = is_reversible_pair(&a, &b)?;
    println!("no enlargement {}, invertible {}", r.no_enlargement, r.matrix_invertible);
    let cb = find_conjugate_bases(&a, &b, 4)?.expect("bases within radius 2");
    for (x, y) in cb.a_side.iter().zip(&cb.b_side) {
        println!("{}  <->  {}", lat.format(x), lat.format(y));
    }
    let z0 = lat.parse("Z(0)")?;
    println!("Z(0) becomes {}", lat.format(&evolve_logical(&z0, &a, &b, &cb)?));

    // Measuring X(0) alone forgets Z(1).
    let r = is_reversible_pair(&group(&["Z(0)", "Z(1)"])?, &group(&["X(0)"])?)?;
    let w = r.witness.as_ref().map(|w| lat.format(w)).unwrap_or_default();
    println!("Z(0), Z(1) -> X(0): reversible {}, witness {w}", r.reversible);
    Ok(())
}
