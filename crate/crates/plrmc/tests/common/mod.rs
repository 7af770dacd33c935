// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Random stabilizer groups shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use plrmc::decompose::OnSiteClifford;
use plrmc::f2::BitVec;
use plrmc::pauli::{Lattice, Pauli, PauliOp};
use plrmc::stab::StabilizerGroup;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Greedy random commuting group of one- and two-site Paulis.
pub fn random_group(rng: &mut ChaCha8Rng, max_sites: usize) -> StabilizerGroup {
    let sites = rng.gen_range(2..=max_sites);
    let counts: Vec<u32> = (0..sites).map(|_| rng.gen_range(1..=2)).collect();
    let lat = Arc::new(Lattice::chain_with_counts(&counts));
    let n = lat.num_qubits();
    let mut gens: Vec<PauliOp> = Vec::new();
    for _ in 0..4 * n {
        let k = rng.gen_range(0..sites);
        let span = if k + 1 < sites && rng.gen_bool(0.8) { k..k + 2 } else { k..k + 1 };
        let qs: Vec<u32> = span.flat_map(|s| lat.site_qubits(s)).collect();
        let bits = BitVec::from_ones(2 * n, qs.iter().flat_map(|&q| [2 * q as usize, 2 * q as usize + 1]).filter(|_| rng.gen_bool(0.5)));
        let p = PauliOp::from_symplectic(&bits);
        if !p.is_identity() && gens.iter().all(|g| !g.anticommutes(&p)) {
            gens.push(p);
        }
    }
    StabilizerGroup::new(lat, gens).unwrap()
}

/// Random normal form (chains, Bell pairs, pinned and idle qubits) hidden
/// by a random on-site Clifford and by mixing generators within bonds.
pub fn planted_group(rng: &mut ChaCha8Rng, max_sites: usize) -> StabilizerGroup {
    let sites = rng.gen_range(2..=max_sites);
    let counts: Vec<u32> = (0..sites).map(|_| rng.gen_range(1..=2)).collect();
    let lat = Arc::new(Lattice::chain_with_counts(&counts));
    let mut free: Vec<Vec<u32>> = (0..sites).map(|k| lat.site_qubits(k).collect()).collect();
    let mut gens: Vec<PauliOp> = Vec::new();
    for k in 0..sites {
        while let Some(q) = free[k].pop() {
            match rng.gen_range(0..4) {
                0 => gens.push(PauliOp::single(q, Pauli::Z)),
                1 if k + 1 < sites && !free[k + 1].is_empty() => {
                    let b = free[k + 1].remove(0);
                    gens.push(PauliOp::uniform(Pauli::X, [q, b]));
                    gens.push(PauliOp::uniform(Pauli::Z, [q, b]));
                }
                2 => {
                    let mut last = q;
                    for s in k + 1..sites {
                        if free[s].is_empty() || rng.gen_bool(0.15) {
                            break;
                        }
                        let i = rng.gen_range(0..free[s].len());
                        let b = free[s].remove(i);
                        gens.push(PauliOp::uniform(Pauli::Z, [last, b]));
                        last = b;
                    }
                }
                _ => {}
            }
        }
    }
    let u = OnSiteClifford::random(rng, &lat);
    let mut gens: Vec<PauliOp> = gens.iter().map(|p| u.apply(&lat, p)).collect();
    let site_span = |p: &PauliOp| {
        let s: Vec<usize> = p.support().iter().map(|&q| lat.site_of(q)).collect();
        (*s.iter().min().unwrap(), *s.iter().max().unwrap())
    };
    for _ in 0..2 * gens.len() {
        let (i, j) = (rng.gen_range(0..gens.len()), rng.gen_range(0..gens.len()));
        let prod = gens[i].multiply(&gens[j]);
        if i != j && !prod.is_identity() {
            let (lo, hi) = site_span(&prod);
            if hi - lo <= 1 {
                gens[i] = prod;
            }
        }
    }
    StabilizerGroup::new(lat, gens).unwrap()
}
