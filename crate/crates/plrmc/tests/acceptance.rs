// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Acceptance criteria 1 to 11. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

mod common;

use std::collections::HashSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use plrmc::decompose::ising_decompose;
use plrmc::f2::Subspace;
use plrmc::models::chains::{majorana_shift, random_plrmc, translation_1d};
use plrmc::models::glue::double_wpt;
use plrmc::models::hh::{build_hh, HhBoundary, Honeycomb};
use plrmc::models::wpt::{build_wpt, WptBoundary};
use plrmc::models::IsgSequence;
use plrmc::mqca::{default_cuts, default_reach, fmt_index, index, mqca_index, period_map, Frame, IndexOptions, MapOptions, MqcaMap};
use plrmc::pauli::{Lattice, Pauli, PauliOp};
use plrmc::rev::{analyze_pair, is_topological, TopoOptions};
use plrmc::stab::StabilizerGroup;
use plrmc::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn map_of(seq: &IsgSequence) -> MqcaMap {
    period_map(seq, None, &MapOptions::default()).unwrap_or_else(|e| panic!("{}: {e}", seq.name()))
}

/// Doubled index at the default cuts.
fn idx2(seq: &IsgSequence) -> i64 {
    index(&map_of(seq), &IndexOptions::default()).unwrap().index_times_two
}

fn verified(seq: &IsgSequence) -> Result<(), String> {
    let v = seq.verify();
    ensure!(v.ok, "{} fails verification at transitions {:?}", seq.name(), v.failures);
    Ok(())
}

/// `L_j` evolves to `L_{j+shift}` (cyclically) modulo the base group.
fn shifts_basis(seq: &IsgSequence, shift: i64) -> Result<usize, String> {
    let basis = seq.boundary_basis().ok_or("no boundary basis")?;
    let k = basis.len() as i64;
    for j in 0..k {
        let img = seq.evolve(&basis[j as usize]).map_err(|e| e.to_string())?;
        let want = &basis[(j + shift).rem_euclid(k) as usize];
        ensure!(seq.steps()[0].contains(&img.multiply(want)), "{}: L_{j} does not map to L_{}", seq.name(), j + shift);
    }
    Ok(k as usize)
}

fn criterion_1() -> Outcome {
    let seq = translation_1d(20).map_err(|e| e.to_string())?;
    verified(&seq)?;
    let m = map_of(&seq);
    let (a0, b0) = default_cuts(&m);
    let mut seen = Vec::new();
    for (da, db) in [(0, 0), (2, -2), (4, -4), (4, 0), (0, -4), (2, 2), (-2, -2)] {
        match mqca_index(&m, a0 + da, b0 + db, &IndexOptions::default()) {
            Ok(r) => {
                ensure!(r.index_times_two == 2, "cuts ({}, {}) give {}", r.cut_b, r.cut_a, r.index);
                seen.push((r.cut_b, r.cut_a));
            }
            Err(Error::Margin(_)) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    ensure!(seen.len() >= 3, "only {} cut choices fit", seen.len());
    Ok(format!("verify ok, index 1 at {} cut choices", seen.len()))
}

fn criterion_2() -> Outcome {
    let m = majorana_shift(24).map_err(|e| e.to_string())?;
    let mut n = 0;
    // Cuts in the convention "support below a" and "support above b";
    // the flow formula takes half-open intervals [b + 1, a).
    for a in 10..=15i64 {
        for b in a - 6..=a - 2 {
            let r = mqca_index(&m, 2 * a, 2 * (b + 1), &IndexOptions::default()).map_err(|e| e.to_string())?;
            ensure!(r.index_times_two == 1, "(a, b) = ({a}, {b}): index {}", r.index);
            let want = [(a - b - 1) as usize, (a - b - 2) as usize];
            ensure!(r.dims == want, "(a, b) = ({a}, {b}): dims {:?}, want {want:?}", r.dims);
            n += 1;
        }
    }
    Ok(format!("index 1/2 and dims (a-b-1, a-b-2) at {n} cut pairs"))
}

fn criterion_3() -> Outcome {
    let seq = build_wpt(24, 24, WptBoundary::RightR).map_err(|e| e.to_string())?;
    verified(&seq)?;
    let basis = seq.boundary_basis().ok_or("no boundary basis")?;
    let k = basis.len();
    ensure!(k >= 3, "boundary basis has {k} elements");
    for i in 0..k {
        for j in 0..k {
            let d = (i as i64 - j as i64).rem_euclid(k as i64);
            let neighbours = d == 1 || d == k as i64 - 1;
            ensure!(basis[i].anticommutes(&basis[j]) == neighbours, "L_{i} and L_{j} break the chain pattern");
        }
    }
    shifts_basis(&seq, -1)?;
    let i = idx2(&seq);
    ensure!(i == -1, "index {i}/2");
    Ok(format!("{k} boundary logicals, L_j -> L_(j-1), index -1/2"))
}

fn criterion_4() -> Outcome {
    let build = |w, h, b| build_wpt(w, h, b).map_err(|e| e.to_string());
    let t = build(24, 10, WptBoundary::TopT)?;
    let tp = build(24, 10, WptBoundary::TopTPrime)?;
    let r = build(8, 24, WptBoundary::RightR)?;
    let rp = build(8, 24, WptBoundary::RightRReversed)?;
    for s in [&t, &tp, &r, &rp] {
        verified(s)?;
    }
    let (it, itp, ir, irp) = (idx2(&t), idx2(&tp), idx2(&r), idx2(&rp));
    let f = fmt_index;
    ensure!((it - itp).abs() == 2 && it + itp == 0, "T {}, T' {}", f(it), f(itp));
    ensure!(irp - ir == 2, "R {}, R' {}", f(ir), f(irp));
    Ok(format!("T {}, T' {}, R {}, R' {}", f(it), f(itp), f(ir), f(irp)))
}

fn criterion_5() -> Outcome {
    let bulk = build_hh(12, 18, HhBoundary::Bulk).map_err(|e| e.to_string())?;
    ensure!(bulk.period() == 3, "bulk period {}", bulk.period());
    verified(&bulk)?;

    let z1 = build_hh(36, 18, HhBoundary::ZigzagI).map_err(|e| e.to_string())?;
    verified(&z1)?;
    ensure!(idx2(&z1) == -1, "zigzag_I index {}/2", idx2(&z1));
    shifts_basis(&z1, -1)?;

    let z2 = build_hh(36, 18, HhBoundary::ZigzagII).map_err(|e| e.to_string())?;
    verified(&z2)?;
    let hc = Honeycomb::new(36, 18, false).map_err(|e| e.to_string())?;
    let (x, y, z) = (Pauli::X, Pauli::Y, Pauli::Z);
    for j in 0..6 {
        let c = 6 * j;
        for st in [
            hc.top(&[(c + 2, x), (c + 3, x), (c + 4, x)]),
            hc.top(&[(c - 2, y), (c - 1, y), (c, y)]),
            hc.top(&[(c, z), (c + 1, z), (c + 2, z)]),
        ] {
            let img = z2.evolve(&st).map_err(|e| e.to_string())?;
            ensure!(z2.steps()[0].contains(&img.multiply(&st)), "static logical {} moves", z2.lattice().format(&st));
        }
    }
    let zs = hc.top(&[(0, z), (1, z), (2, z)]);
    let xs = hc.top(&[(2, x), (3, x), (4, x)]);
    let ys = hc.top(&[(4, y), (5, y), (6, y)]);
    let want = [
        hc.top(&[(0, x)]),
        zs.multiply(&hc.top(&[(2, y)])),
        zs.multiply(&xs).multiply(&hc.top(&[(4, z)])),
        zs.multiply(&xs).multiply(&ys).multiply(&hc.top(&[(6, x)])),
    ];
    let trace = z2.trace(&want[0]).map_err(|e| e.to_string())?;
    for (t, w) in want.iter().enumerate() {
        let g = &z2.steps()[t % 3];
        ensure!(g.contains(&trace[t].multiply(w)), "step {t}: {} is not {}", z2.lattice().format(&trace[t]), z2.lattice().format(w));
    }

    let z3 = build_hh(60, 18, HhBoundary::ZigzagIIISequence).map_err(|e| e.to_string())?;
    ensure!(z3.period() == 6, "zigzag_III period {}", z3.period());
    verified(&z3)?;
    shifts_basis(&z3, 2)?;
    Ok("bulk T=3 verifies; zigzag_I -1/2 with L_k -> L_(k-1); zigzag_II static logicals fixed and X_0 string exact at every step; zigzag_III L_j -> L_(j+2)".into())
}

/// Random standalone circuits shared by criteria 6, 7 and 11.
fn random_circuits(count: usize, seed: u64) -> Vec<(IsgSequence, i64, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let cells = rng.gen_range(8..=16);
            let layers = rng.gen_range(1..=2);
            let (seq, expected) = random_plrmc(&mut rng, cells, layers).unwrap();
            (seq, expected, cells)
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut twisted = Vec::new();
    for (w, h, b) in [
        (8, 24, WptBoundary::RightR),
        (8, 24, WptBoundary::RightRReversed),
        (24, 10, WptBoundary::TopT),
        (24, 10, WptBoundary::TopTPrime),
        (24, 10, WptBoundary::BottomB),
        (24, 10, WptBoundary::BottomBPrime),
    ] {
        let seq = build_wpt(w, h, b).map_err(|e| e.to_string())?;
        twisted.push((format!("wpt/{}", b.name()), idx2(&seq)));
    }
    for b in [HhBoundary::ZigzagI, HhBoundary::ZigzagII] {
        let seq = build_hh(36, 18, b).map_err(|e| e.to_string())?;
        twisted.push((format!("hh/{}", b.name()), idx2(&seq)));
    }
    for (name, i) in &twisted {
        ensure!(i.rem_euclid(2) == 1, "{name}: index {i}/2 has z2 0");
    }
    let mut plain = vec![
        ("translation".to_string(), idx2(&translation_1d(20).unwrap())),
    ];
    for (k, (seq, _, _)) in random_circuits(50, 7).iter().enumerate() {
        plain.push((format!("random #{k}"), idx2(seq)));
    }
    for (name, i) in &plain {
        ensure!(i.rem_euclid(2) == 0, "{name}: index {i}/2 has z2 1");
    }
    // The doubled-period zigzag schedule is a different circuit: index 1.
    let z3 = idx2(&build_hh(60, 18, HhBoundary::ZigzagIIISequence).unwrap());
    ensure!(z3 == 2, "zigzag_III index {z3}/2");
    Ok(format!("z2 1 on {} 2D boundaries, z2 0 on {} standalone 1D circuits", twisted.len(), plain.len()))
}

fn criterion_7() -> Outcome {
    let circuits = random_circuits(50, 7);
    let mut seen = HashSet::new();
    for (k, (seq, expected, cells)) in circuits.iter().enumerate() {
        verified(seq)?;
        let i = idx2(seq);
        ensure!(i % 2 == 0, "circuit #{k} ({cells} cells): index {i}/2");
        ensure!(i == 2 * expected, "circuit #{k}: index {} but built with {expected}", i / 2);
        seen.insert(i / 2);
    }
    let mut seen: Vec<i64> = seen.into_iter().collect();
    seen.sort();
    Ok(format!("50 circuits on 8-16 cells, integer indices {seen:?}"))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for (second, total) in [(WptBoundary::RightR, -2), (WptBoundary::RightRReversed, 0)] {
        let g = double_wpt(8, 24, second).map_err(|e| e.to_string())?;
        verified(&g.strip)?;
        let (s, a, b) = (idx2(&g.strip), idx2(&g.sheets[0]), idx2(&g.sheets[1]));
        ensure!(s == a + b && s == total, "{}: strip {}, sheets {} + {}", second.name(), fmt_index(s), fmt_index(a), fmt_index(b));
        let edge = Frame::sweep(g.strip.steps()[0].clone(), g.glued_edge.clone(), g.strip.default_window())
            .map_err(|e| e.to_string())?;
        ensure!(edge.is_empty(), "{} logicals on the glued edge", edge.len());
        parts.push(format!("{} = {} + {}", fmt_index(s), fmt_index(a), fmt_index(b)));
    }
    let g = double_wpt(8, 12, WptBoundary::RightR).map_err(|e| e.to_string())?;
    let lat = g.strip.lattice();
    let opts = TopoOptions { max_box: Some(2), allow_edges: true, ..Default::default() };
    let rep = is_topological(&g.strip.steps()[0], &lat.region_where(|c| c[0] <= -6), 4, &opts).map_err(|e| e.to_string())?;
    ensure!(rep.topological, "glued base not topological: {:?}", rep.witness.map(|(c, p)| (c, lat.format(&p))));
    Ok(format!("strip indices {}; glued edge has no logicals; base topological on {} boxes", parts.join(", "), rep.boxes_checked))
}

/// Small Pauli on at most six qubits: X part in bits 0..n, Z part in bits n..2n.
fn omega(n: usize, u: u16, v: u16) -> bool {
    let m = (1u16 << n) - 1;
    (((u & m) & (v >> n)) ^ ((u >> n) & (v & m))).count_ones() % 2 == 1
}

fn to_op(n: usize, v: u16) -> PauliOp {
    PauliOp::from_pairs((0..n).map(|q| (q as u32, Pauli::from_bits(v >> q & 1 == 1, v >> (n + q) & 1 == 1))))
}

fn span_set(gens: &[u16]) -> HashSet<u16> {
    let mut s = HashSet::from([0u16]);
    for &g in gens {
        let more: Vec<u16> = s.iter().map(|x| x ^ g).collect();
        s.extend(more);
    }
    s
}

fn random_abelian(rng: &mut ChaCha8Rng, n: usize) -> Vec<u16> {
    let target = rng.gen_range(0..=n);
    let mut gens: Vec<u16> = Vec::new();
    for _ in 0..20 {
        if gens.len() == target {
            break;
        }
        let v = rng.gen_range(1..1u16 << (2 * n));
        if gens.iter().all(|&g| !omega(n, g, v)) && !span_set(&gens).contains(&v) {
            gens.push(v);
        }
    }
    gens
}

/// Measurement of `p` on the group generated by `gens`.
fn measure(n: usize, gens: &[u16], p: u16) -> Vec<u16> {
    match gens.iter().position(|&g| omega(n, g, p)) {
        Some(i) => {
            let g0 = gens[i];
            let mut out: Vec<u16> =
                gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| if omega(n, g, p) { g ^ g0 } else { g }).collect();
            out.push(p);
            out
        }
        None if span_set(gens).contains(&p) => gens.to_vec(),
        None => [gens, &[p]].concat(),
    }
}

/// Shared logicals exist iff the common commutant fills both logical groups.
fn shared_logicals_exist(n: usize, a: &[u16], b: &[u16]) -> bool {
    let perp = |gs: &[u16]| -> Vec<u16> { (0..1u16 << (2 * n)).filter(|&v| gs.iter().all(|&g| !omega(n, g, v))).collect() };
    let (pa, pb) = (perp(a), perp(b));
    let pb_set: HashSet<u16> = pb.iter().copied().collect();
    let common: Vec<u16> = pa.iter().copied().filter(|v| pb_set.contains(v)).collect();
    let fills = |gs: &[u16], full: usize| {
        let mut s: HashSet<u16> = common.iter().copied().collect();
        for &g in gs {
            let more: Vec<u16> = s.iter().map(|x| x ^ g).collect();
            s.extend(more);
        }
        s.len() == full
    };
    fills(a, pa.len()) && fills(b, pb.len())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut reversible = 0;
    for trial in 0..200 {
        let n = rng.gen_range(1..=6);
        let a = random_abelian(&mut rng, n);
        let b = match trial % 4 {
            0 => random_abelian(&mut rng, n),
            1 => measure(n, &a, rng.gen_range(1..1u16 << (2 * n))),
            2 => (0..rng.gen_range(2..=4)).fold(a.clone(), |g, _| measure(n, &g, rng.gen_range(1..1u16 << (2 * n)))),
            _ if a.is_empty() || rng.gen_bool(0.5) => {
                let p = rng.gen_range(1..1u16 << (2 * n));
                if a.iter().all(|&g| !omega(n, g, p)) { [&a[..], &[p]].concat() } else { measure(n, &a, p) }
            }
            _ => a[1..].to_vec(),
        };
        let lat = Arc::new(Lattice::chain(n, 1, false));
        let group = |gs: &[u16]| StabilizerGroup::new(lat.clone(), gs.iter().map(|&v| to_op(n, v)).collect()).unwrap();
        let an = analyze_pair(&group(&a), &group(&b)).map_err(|e| e.to_string())?;
        let d = shared_logicals_exist(n, &a, &b);
        ensure!(
            an.no_enlargement == an.matrix_invertible && an.matrix_invertible == d,
            "trial {trial} on {n} qubits: (b) {} (c) {} (d) {d}",
            an.no_enlargement,
            an.matrix_invertible
        );
        reversible += d as usize;
    }
    ensure!(reversible >= 20 && reversible <= 180, "only one class sampled: {reversible} reversible of 200");
    Ok(format!("(b), (c), (d) agree on 200 pairs ({reversible} reversible)"))
}

/// Rank over F2 of small bit rows.
fn rank(mut rows: Vec<u64>) -> usize {
    let mut r = 0;
    for bit in 0..64 {
        let Some(i) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
        rows.swap(r, i);
        let p = rows[r];
        for (j, row) in rows.iter_mut().enumerate() {
            if j != r && *row >> bit & 1 == 1 {
                *row ^= p;
            }
        }
        r += 1;
    }
    r
}

/// Logicals on sites `[i, j]` modulo stabilizers there, by rank counting:
/// `2|R| - rank(G|R) - (rank G - rank(G|R^c))`.
fn logical_count(g: &StabilizerGroup, i: usize, j: usize) -> usize {
    let lat = g.lattice();
    let n = lat.num_qubits();
    let inside = |q: u32| (i..=j).contains(&lat.site_of(q));
    let restrict = |keep: &dyn Fn(u32) -> bool| -> Vec<u64> {
        g.generators()
            .iter()
            .map(|p| {
                p.iter().filter(|&(q, _)| keep(q)).fold(0u64, |acc, (q, s)| {
                    acc | (s.x() as u64) << q | (s.z() as u64) << (n as u32 + q)
                })
            })
            .collect()
    };
    let size = (0..n as u32).filter(|&q| inside(q)).count();
    let full = rank(restrict(&|_| true));
    2 * size - rank(restrict(&inside)) - (full - rank(restrict(&|q| !inside(q))))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut checked, mut chains) = (0, 0);
    for trial in 0..500 {
        let g = if trial % 2 == 0 { common::random_group(&mut rng, 10) } else { common::planted_group(&mut rng, 10) };
        let lat = g.lattice().clone();
        let n = lat.num_qubits();
        let d = ising_decompose(&g).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure!(d.clifford.is_symplectic(), "trial {trial}: clifford not symplectic");
        let span = |ops: &[PauliOp]| Subspace::span(2 * n, ops.iter().map(|p| p.to_symplectic(n))).unwrap();
        let image: Vec<PauliOp> = g.generators().iter().map(|p| d.clifford.apply(&lat, p)).collect();
        ensure!(span(&image) == span(&d.normal_form()), "trial {trial}: span mismatch");
        for (k, &c) in d.chains_through().iter().enumerate() {
            ensure!(c <= lat.site_qubits(k).len(), "trial {trial}: site {k} in {c} chains");
        }
        chains += d.chains.iter().filter(|c| c.last_site() > c.first_site).count();
        if lat.num_sites() <= 6 {
            let predicted = d.predicted_profile();
            for i in 0..lat.num_sites() {
                for j in i..lat.num_sites() {
                    let want = logical_count(&g, i, j);
                    ensure!(predicted[i][j] == want, "trial {trial}: [{i}, {j}] predicts {} logicals, counted {want}", predicted[i][j]);
                }
            }
            checked += 1;
        }
    }
    Ok(format!("500 groups ({chains} multi-site chains), oracle agreed on {checked} small instances"))
}

/// Index is unchanged under a 50% larger reach and cut shifts of +-2. The
/// base cuts sit 2 further apart than the defaults so that every shift keeps
/// them at least the safe separation apart.
fn robust(name: &str, m: &MqcaMap) -> Result<(usize, usize), String> {
    let base = index(m, &IndexOptions::default()).map_err(|e| format!("{name}: {e}"))?;
    let (a0, b0) = default_cuts(m);
    let (a0, b0) = (a0 + 4, b0 - 4);
    let r0 = default_reach(m);
    let r1 = (3 * r0 + 1) / 2;
    let r1 = r1 + r1 % 2;
    let (mut ok, mut skipped) = (0, 0);
    for reach in [r0, r1] {
        for da in [-4, 0, 4] {
            for db in [-4, 0, 4] {
                let (a, b) = (a0 + da, b0 + db);
                match mqca_index(m, a, b, &IndexOptions { margin: 0, reach: Some(reach) }) {
                    Ok(r) => {
                        ensure!(r.separated, "{name}: cuts ({b}, {a}) closer than the safe separation");
                        ensure!(
                            r.index_times_two == base.index_times_two,
                            "{name}: cuts ({b}, {a}) reach {reach} give {} instead of {}",
                            r.index,
                            base.index
                        );
                        ok += 1;
                    }
                    Err(Error::Margin(_)) => skipped += 1,
                    Err(e) => return Err(format!("{name}: reach {reach}: {e}")),
                }
            }
        }
    }
    Ok((ok, skipped))
}

fn criterion_11() -> Outcome {
    let mut maps: Vec<(String, MqcaMap)> = vec![
        ("translation".into(), map_of(&translation_1d(40).unwrap())),
        ("majorana".into(), majorana_shift(40).unwrap()),
    ];
    for (w, h, b) in [
        (24, 24, WptBoundary::RightR),
        (24, 24, WptBoundary::RightRReversed),
        (36, 10, WptBoundary::TopT),
        (36, 10, WptBoundary::TopTPrime),
    ] {
        maps.push((format!("wpt/{}", b.name()), map_of(&build_wpt(w, h, b).unwrap())));
    }
    for (w, b) in [(60, HhBoundary::ZigzagI), (60, HhBoundary::ZigzagII), (84, HhBoundary::ZigzagIIISequence)] {
        maps.push((format!("hh/{}", b.name()), map_of(&build_hh(w, 18, b).unwrap())));
    }
    for second in [WptBoundary::RightR, WptBoundary::RightRReversed] {
        let g = double_wpt(8, 36, second).unwrap();
        maps.push((format!("double-wpt/{}", second.name()), map_of(&g.strip)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..5 {
        let (seq, _) = random_plrmc(&mut rng, 16, 1 + k % 2).unwrap();
        maps.push((format!("random #{k}"), map_of(&seq)));
    }
    let (mut ok, mut skipped) = (0, Vec::new());
    for (name, m) in &maps {
        let (o, s) = robust(name, m)?;
        ok += o;
        if s > 0 {
            skipped.push(format!("{name} {s}"));
        }
    }
    Ok(format!("{} maps, {ok} variants agree; shifted cuts past the window: {}", maps.len(), skipped.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [(usize, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    // Written to stdout directly so the lines survive the test harness capture.
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for (k, f) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => writeln!(out, "criterion {k:>2}: PASS ({secs:.1}s) {detail}").unwrap(),
            Err(why) => {
                writeln!(out, "criterion {k:>2}: FAIL ({secs:.1}s) {why}").unwrap();
                failed.push(k);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
