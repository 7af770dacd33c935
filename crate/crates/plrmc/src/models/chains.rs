// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! One-dimensional circuits: translation, iterated teleportation, the
//! abstract Majorana shift and random standalone circuits.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::IsgSequence;
use crate::f2::F2Matrix;
use crate::mqca::{Frame, Interface, MqcaMap};
use crate::pauli::{Half, Lattice, Pauli, PauliOp};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

fn pp(pairs: &[(u32, Pauli)]) -> PauliOp {
    PauliOp::from_pairs(pairs.iter().copied())
}

/// Four-step translation on a ring of `n` qubits (`n` even, at least 6):
/// `<X_2j> -> <Z_2j-1 Z_2j> -> <X_2j-1> -> <Z_2j Z_2j+1>`. Each cycle moves
/// the logical qubit on site `2j+1` to site `2j+3`.
pub fn translation_1d(n: usize) -> Result<IsgSequence> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::Window(format!("translation needs an even ring of at least 6 sites, got {n}")));
    }
    let lat = Arc::new(Lattice::chain(n, 1, true));
    let m = n as u32;
    let at = |k: i64| k.rem_euclid(n as i64) as u32;
    let evens = (0..m / 2).map(|j| 2 * j as i64);
    let g0 = evens.clone().map(|e| pp(&[(at(e), Pauli::X)])).collect();
    let g1 = evens.clone().map(|e| pp(&[(at(e - 1), Pauli::Z), (at(e), Pauli::Z)])).collect();
    let g2 = evens.clone().map(|e| pp(&[(at(e - 1), Pauli::X)])).collect();
    let g3 = evens.clone().map(|e| pp(&[(at(e), Pauli::Z), (at(e + 1), Pauli::Z)])).collect();
    let steps = [g0, g1, g2, g3]
        .into_iter()
        .map(|g| StabilizerGroup::new(lat.clone(), g))
        .collect::<Result<Vec<_>>>()?;
    let basis = evens.flat_map(|e| [pp(&[(at(e + 1), Pauli::X)]), pp(&[(at(e + 1), Pauli::Z)])]).collect();
    let iface = Interface::along_axis(&lat, lat.full_region(), 0);
    Ok(IsgSequence::new("translation", steps, 4)?.with_interface(iface).with_boundary_basis(basis))
}

/// Bell pairs `(2j, 2j+1)` followed by Bell measurements `(2j-1, 2j)` on a
/// line of `2n+1` qubits (qubit `k` of the text is lattice qubit `k-1`).
/// The two groups form a reversible pair whose conjugate bases need radius
/// of order `n`.
pub fn teleport_chain(n: usize, radius: Half) -> Result<IsgSequence> {
    if n < 1 {
        return Err(Error::Window("teleport chain needs at least two parties".into()));
    }
    let lat = Arc::new(Lattice::chain(2 * n + 1, 1, false));
    let q = |k: usize| (k - 1) as u32;
    let bell = |a: usize, b: usize| {
        [pp(&[(q(a), Pauli::X), (q(b), Pauli::X)]), pp(&[(q(a), Pauli::Z), (q(b), Pauli::Z)])]
    };
    let a = (1..=n).flat_map(|j| bell(2 * j, 2 * j + 1)).collect();
    let b = (1..=n).flat_map(|j| bell(2 * j - 1, 2 * j)).collect();
    let steps = vec![StabilizerGroup::new(lat.clone(), a)?, StabilizerGroup::new(lat, b)?];
    Ok(IsgSequence::new("teleport-chain", steps, radius)?.one_shot())
}

/// Shared logicals `X_1...X_{2n+1}` and `Z_1...Z_{2n+1}` of the teleport chain.
pub fn teleport_logicals(n: usize) -> [PauliOp; 2] {
    let all = 0..(2 * n + 1) as u32;
    [PauliOp::uniform(Pauli::X, all.clone()), PauliOp::uniform(Pauli::Z, all)]
}

/// The shift `L_j -> L_{j+1}` on `L_j = X_j Z_{j+1}` over an open chain of
/// `n` qubits; the image of the last element leaves the window.
pub fn majorana_shift(n: usize) -> Result<MqcaMap> {
    if n < 8 {
        return Err(Error::Window(format!("majorana shift needs at least 8 sites, got {n}")));
    }
    let lat = Arc::new(Lattice::chain(n, 1, false));
    let l = |j: u32| pp(&[(j, Pauli::X), (j + 1, Pauli::Z)]);
    let elements: Vec<PauliOp> = (0..n as u32 - 1).map(l).collect();
    let iface = Interface::along_axis(&lat, lat.full_region(), 0);
    let frame = Arc::new(Frame::new(StabilizerGroup::trivial(lat), iface, elements)?);
    let k = frame.len();
    let mut m = F2Matrix::zeros(k, k);
    for j in 0..k - 1 {
        m.set(j, j + 1, true);
    }
    let defined = (0..k).map(|j| j + 1 < k).collect();
    MqcaMap::from_matrix(frame, m, defined)
}

/// The Majorana basis of [`majorana_shift`] with matching commutation
/// pattern: `L_j` and `L_k` anticommute iff `|j - k| = 1`.
pub fn majorana_basis(n: usize) -> Vec<PauliOp> {
    (0..n as u32 - 1).map(|j| pp(&[(j, Pauli::X), (j + 1, Pauli::Z)])).collect()
}

/// Kinds of layer in a random standalone circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Layer {
    Right,
    Left,
    StaticZ,
    StaticBell,
}

/// A random standalone 1D circuit on a ring of `cells` unit cells and its
/// expected index (right-moving minus left-moving translation layers).
///
/// Each cell carries `layers` slots of two qubits. A slot runs one of: the
/// four-step translation in either direction, a static `Z` on both qubits,
/// or static Bell pairs across neighbouring cells. A random on-site Clifford dresses every group, and a
/// random two-qubit measurement excursion is appended and walked back.
pub fn random_plrmc<R: Rng>(rng: &mut R, cells: usize, layers: usize) -> Result<(IsgSequence, i64)> {
    if cells < 3 || layers == 0 {
        return Err(Error::Window("random circuit needs at least 3 cells and one layer".into()));
    }
    let kinds = [Layer::Right, Layer::Left, Layer::StaticZ, Layer::StaticBell];
    let picks: Vec<Layer> = (0..layers).map(|_| *kinds.choose(rng).unwrap()).collect();
    let expected = picks.iter().map(|l| match l {
        Layer::Right => 1,
        Layer::Left => -1,
        _ => 0,
    });
    let expected: i64 = expected.sum();
    let q = 2 * layers as u32;
    let lat = Arc::new(Lattice::chain(cells, q, true));
    let n = lat.num_qubits() as u32;
    let c = cells as i64;
    // Slot `s` of cell `i` holds qubits `a = q i + 2s` and `b = a + 1`.
    let qa = |i: i64, s: usize| (i.rem_euclid(c) as u32) * q + 2 * s as u32;
    let mut steps: Vec<Vec<PauliOp>> = vec![Vec::new(); 4];
    for (s, layer) in picks.iter().enumerate() {
        for i in 0..c {
            let (a, b) = (qa(i, s), qa(i, s) + 1);
            let (a_next, a_prev) = (qa(i + 1, s), qa(i - 1, s));
            let b_prev = a_prev + 1;
            match layer {
                // Translation by one cell toward increasing coordinate,
                // on the sublattice `... a_i b_i a_{i+1} ...` with `b` as
                // the even role.
                Layer::Right => {
                    steps[0].push(pp(&[(b, Pauli::X)]));
                    steps[1].push(pp(&[(a, Pauli::Z), (b, Pauli::Z)]));
                    steps[2].push(pp(&[(a, Pauli::X)]));
                    steps[3].push(pp(&[(b, Pauli::Z), (a_next, Pauli::Z)]));
                }
                Layer::Left => {
                    steps[0].push(pp(&[(a, Pauli::X)]));
                    steps[1].push(pp(&[(a, Pauli::Z), (b, Pauli::Z)]));
                    steps[2].push(pp(&[(b, Pauli::X)]));
                    steps[3].push(pp(&[(b_prev, Pauli::Z), (a, Pauli::Z)]));
                }
                Layer::StaticZ => {
                    for st in steps.iter_mut() {
                        st.push(pp(&[(a, Pauli::Z)]));
                        st.push(pp(&[(b, Pauli::Z)]));
                    }
                }
                Layer::StaticBell => {
                    for st in steps.iter_mut() {
                        st.push(pp(&[(b_prev, Pauli::Z), (a, Pauli::Z)]));
                        st.push(pp(&[(b_prev, Pauli::X), (a, Pauli::X)]));
                    }
                }
            }
        }
    }
    // Excursion: measure a random two-qubit Pauli, then return to step 0.
    let mut groups: Vec<StabilizerGroup> =
        steps.into_iter().map(|g| StabilizerGroup::new_unchecked(lat.clone(), g)).collect::<Result<_>>()?;
    if let Some(ex) = excursion(rng, &groups[0], n)? {
        let back = groups[0].clone();
        groups.splice(1..1, [ex, back]);
    }
    let cliff: Vec<[u8; 4]> = (0..n).map(|_| random_single_clifford(rng)).collect();
    let apply = |p: &PauliOp| {
        PauliOp::from_pairs(p.iter().map(|(k, pk)| (k, apply_single(&cliff[k as usize], pk))))
    };
    let groups = groups
        .into_iter()
        .map(|g| StabilizerGroup::new(lat.clone(), g.generators().iter().map(apply).collect()))
        .collect::<Result<Vec<_>>>()?;
    let iface = Interface::along_axis(&lat, lat.full_region(), 0);
    let seq = IsgSequence::new("random-1d", groups, 6)?.with_interface(iface);
    Ok((seq, expected))
}

/// The group obtained from `g` by measuring a random local Pauli `m` that
/// anticommutes with some generator, or `None` if no candidate is found.
fn excursion<R: Rng>(rng: &mut R, g: &StabilizerGroup, n: u32) -> Result<Option<StabilizerGroup>> {
    for _ in 0..32 {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..3)) % n;
        let m = PauliOp::from_pairs([(a, random_pauli(rng)), (b, random_pauli(rng))]);
        let anti = g.anticommuting(&m);
        if anti.is_empty() {
            continue;
        }
        let pivot = g.generators()[anti[0]].clone();
        let mut gens: Vec<PauliOp> = g
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != anti[0])
            .map(|(i, x)| if anti.contains(&i) { x.multiply(&pivot) } else { x.clone() })
            .collect();
        gens.push(m);
        return StabilizerGroup::new(g.lattice().clone(), gens).map(Some);
    }
    Ok(None)
}

fn random_pauli<R: Rng>(rng: &mut R) -> Pauli {
    [Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..3)]
}

/// Images of `X` and `Z` as `[x_x, x_z, z_x, z_z]` for a uniformly random
/// single-qubit Clifford (up to phase).
fn random_single_clifford<R: Rng>(rng: &mut R) -> [u8; 4] {
    const ALL: [[u8; 4]; 6] = [[1, 0, 0, 1], [0, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 0]];
    ALL[rng.gen_range(0..6)]
}

fn apply_single(c: &[u8; 4], p: Pauli) -> Pauli {
    let (x, z) = (p.x() as u8, p.z() as u8);
    let nx = (x & c[0]) ^ (z & c[2]);
    let nz = (x & c[1]) ^ (z & c[3]);
    Pauli::from_bits(nx == 1, nz == 1)
}
