// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Normal form of two-site-local stabilizer groups on open chains: a
//! depth-one on-site Clifford maps the group to Ising chains, Bell pairs
//! across bonds and single-`Z` qubits.
//!
//! Single-site elements are peeled first. The symplectic part of each bond
//! then splits off as Bell pairs. What remains on each bond is an isometry
//! between isotropic on-site spaces; chains are read off by elimination in
//! which a chain vector only ever absorbs older chain vectors.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::f2::{BitVec, Echelon, F2Matrix, Subspace};
use crate::pauli::{Lattice, LatticeKind, Pauli, PauliOp};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

/// Symplectic form of two vectors in the `X, Z` interleaved layout.
pub fn omega(a: &BitVec, b: &BitVec) -> bool {
    let mut acc = false;
    for i in a.ones() {
        acc ^= b.get(i ^ 1);
    }
    acc
}

fn swapped(v: &BitVec) -> BitVec {
    BitVec::from_ones(v.len(), v.ones().map(|i| i ^ 1))
}

/// A solution of `rows[i] · y = rhs[i]` with free variables zero.
fn solve(cols: usize, rows: &[BitVec], rhs: &[bool]) -> Option<BitVec> {
    let aug: Vec<BitVec> =
        rows.iter().zip(rhs).map(|(r, &b)| r.concat(&BitVec::from_bits(&[b as u8]))).collect();
    let (red, rank) = F2Matrix::from_rows(cols + 1, aug).ok()?.rref();
    let mut y = BitVec::zeros(cols);
    for row in &red.rows()[..rank] {
        let p = row.first_one()?;
        if p == cols {
            return None;
        }
        y.set(p, row.get(cols));
    }
    Some(y)
}

/// Completes `pairs` (each `(x, z)` with `omega(x, z) = 1`, mutually
/// orthogonal) and the isotropic `iso`, orthogonal to the pairs, to a full
/// symplectic basis of `2m` bits. The result starts with `pairs`, then one
/// pair per `iso` vector with that vector as `z`.
fn complete_symplectic(m: usize, pairs: &[(BitVec, BitVec)], iso: &[BitVec]) -> Result<Vec<(BitVec, BitVec)>> {
    let cols = 2 * m;
    let mut out: Vec<(BitVec, BitVec)> = pairs.to_vec();
    let constraints = |out: &[(BitVec, BitVec)]| -> Vec<BitVec> {
        out.iter().flat_map(|(x, z)| [swapped(x), swapped(z)]).collect()
    };
    for (i, z) in iso.iter().enumerate() {
        let mut rows = constraints(&out);
        let mut rhs = vec![false; rows.len()];
        for (j, w) in iso.iter().enumerate() {
            rows.push(swapped(w));
            rhs.push(i == j);
        }
        let x = solve(cols, &rows, &rhs).ok_or_else(|| Error::Invalid("isotropic set is dependent".into()))?;
        out.push((x, z.clone()));
    }
    while out.len() < m {
        let rows = constraints(&out);
        let kernel = F2Matrix::from_rows(cols, rows.clone())?.kernel();
        let mut span = Echelon::new(cols);
        for (x, z) in &out {
            span.insert(x.clone());
            span.insert(z.clone());
        }
        let v = kernel
            .rows()
            .iter()
            .find(|v| !span.contains(v))
            .cloned()
            .ok_or_else(|| Error::Invalid("symplectic completion stalled".into()))?;
        let mut rows = rows;
        let mut rhs = vec![false; rows.len()];
        rows.push(swapped(&v));
        rhs.push(true);
        let w = solve(cols, &rows, &rhs).ok_or_else(|| Error::Invalid("no symplectic partner".into()))?;
        out.push((v, w));
    }
    Ok(out)
}

/// Per-site symplectic matrices acting on row vectors, `v -> v M`, on the
/// `2 q_k` bits of each site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnSiteClifford {
    pub sites: Vec<F2Matrix>,
}

impl OnSiteClifford {
    pub fn identity(lat: &Lattice) -> Self {
        OnSiteClifford { sites: (0..lat.num_sites()).map(|k| F2Matrix::identity(2 * lat.site_qubits(k).len())).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.sites.iter().all(|m| *m == F2Matrix::identity(m.ncols()))
    }

    /// Every site matrix preserves the symplectic form.
    pub fn is_symplectic(&self) -> bool {
        self.sites.iter().all(|m| {
            let n = m.nrows();
            m.ncols() == n
                && (0..n).all(|i| (0..n).all(|j| omega(m.row(i), m.row(j)) == ((i ^ 1) == j)))
        })
    }

    pub fn apply(&self, lat: &Lattice, p: &PauliOp) -> PauliOp {
        let n = lat.num_qubits();
        let mut v = p.to_symplectic(n);
        for (k, m) in self.sites.iter().enumerate() {
            let r = lat.site_qubits(k);
            let off = 2 * r.start as usize;
            let block = v.slice(off, m.nrows());
            if block.is_zero() {
                continue;
            }
            let image = m.combine(&block);
            for b in 0..m.nrows() {
                v.set(off + b, image.get(b));
            }
        }
        PauliOp::from_symplectic(&v)
    }

    /// A random on-site Clifford built from transvections.
    pub fn random<R: Rng>(rng: &mut R, lat: &Lattice) -> Self {
        let sites = (0..lat.num_sites())
            .map(|k| {
                let d = 2 * lat.site_qubits(k).len();
                let mut m = F2Matrix::identity(d);
                for _ in 0..3 * d {
                    let t = BitVec::from_ones(d, (0..d).filter(|_| rng.gen_bool(0.5)));
                    let rows = m.rows().iter().map(|r| if omega(r, &t) { xor(r, &t) } else { r.clone() }).collect();
                    m = F2Matrix::from_rows(d, rows).expect("same width");
                }
                m
            })
            .collect();
        OnSiteClifford { sites }
    }
}

fn xor(a: &BitVec, b: &BitVec) -> BitVec {
    let mut c = a.clone();
    c.xor_assign(b);
    c
}

/// An Ising chain over consecutive sites, one qubit per site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub first_site: usize,
    pub qubits: Vec<u32>,
}

impl Chain {
    pub fn last_site(&self) -> usize {
        self.first_site + self.qubits.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub lattice: Arc<Lattice>,
    pub clifford: OnSiteClifford,
    /// Chains in order of their first site. A chain of one site is a
    /// qubit that no stabilizer touches.
    pub chains: Vec<Chain>,
    /// `(a, b)` with `a` on the left site of a bond.
    pub bell_pairs: Vec<(u32, u32)>,
    /// Qubits carrying a single `Z` stabilizer.
    pub free_qubits: Vec<u32>,
}

impl Decomposition {
    /// Generators of the normal form.
    pub fn normal_form(&self) -> Vec<PauliOp> {
        let mut out: Vec<PauliOp> = self.free_qubits.iter().map(|&q| PauliOp::single(q, Pauli::Z)).collect();
        for &(a, b) in &self.bell_pairs {
            out.push(PauliOp::uniform(Pauli::X, [a, b]));
            out.push(PauliOp::uniform(Pauli::Z, [a, b]));
        }
        for c in &self.chains {
            out.extend(c.qubits.windows(2).map(|w| PauliOp::uniform(Pauli::Z, [w[0], w[1]])));
        }
        out
    }

    /// Number of chains (including one-site chains) through each site.
    pub fn chains_through(&self) -> Vec<usize> {
        let mut count = vec![0; self.lattice.num_sites()];
        for c in &self.chains {
            for s in c.first_site..=c.last_site() {
                count[s] += 1;
            }
        }
        count
    }

    /// Predicted dimension of logicals supported on sites `[i, j]` modulo
    /// stabilizers supported there: two for a chain inside the interval,
    /// one for a chain that only meets it.
    pub fn predicted_profile(&self) -> Vec<Vec<usize>> {
        let n = self.lattice.num_sites();
        let mut d = vec![vec![0; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate().skip(i) {
                for c in &self.chains {
                    let (s, e) = (c.first_site, c.last_site());
                    if s <= j && i <= e {
                        *cell += 1 + (i <= s && e <= j) as usize;
                    }
                }
            }
        }
        d
    }

    pub fn report(&self) -> DecompositionReport {
        let lat = &self.lattice;
        let label = |q: u32| {
            let s = lat.format(&PauliOp::single(q, Pauli::Z));
            s[1..].to_string()
        };
        DecompositionReport {
            identity: self.clifford.is_identity(),
            chains: self
                .chains
                .iter()
                .map(|c| ChainReport {
                    first_site: c.first_site,
                    last_site: c.last_site(),
                    qubits: c.qubits.iter().map(|&q| label(q)).collect(),
                })
                .collect(),
            bell_pairs: self.bell_pairs.iter().map(|&(a, b)| [label(a), label(b)]).collect(),
            free_qubits: self.free_qubits.iter().map(|&q| label(q)).collect(),
            clifford: self
                .clifford
                .sites
                .iter()
                .enumerate()
                .map(|(k, m)| SiteClifford {
                    site: k,
                    rows: m.rows().iter().map(|r| r.to_bits().iter().map(|b| char::from(b'0' + b)).collect()).collect(),
                })
                .collect(),
            normal_form: self.normal_form().iter().map(|p| lat.format(p)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub first_site: usize,
    pub last_site: usize,
    pub qubits: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SiteClifford {
    pub site: usize,
    /// Images of `X_0, Z_0, X_1, Z_1, ...` as bit strings.
    pub rows: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub identity: bool,
    pub chains: Vec<ChainReport>,
    pub bell_pairs: Vec<[String; 2]>,
    pub free_qubits: Vec<String>,
    pub clifford: Vec<SiteClifford>,
    pub normal_form: Vec<String>,
}

/// Logical dimension of every site interval `[i, j]`: Paulis there that
/// commute with the group, modulo group elements supported there.
pub fn logical_profile(g: &StabilizerGroup) -> Result<Vec<Vec<usize>>> {
    let lat = g.lattice();
    let n = lat.num_qubits();
    let span = Subspace::span(2 * n, g.generators().iter().map(|p| p.to_symplectic(n)))?;
    let swapped_gens: Vec<BitVec> = g.generators().iter().map(|p| swapped(&p.to_symplectic(n))).collect();
    let ns = lat.num_sites();
    let mut d = vec![vec![0; ns]; ns];
    for i in 0..ns {
        for j in i..ns {
            let lo = 2 * lat.site_qubits(i).start as usize;
            let hi = 2 * lat.site_qubits(j).end as usize;
            let inside = Subspace::span(2 * n, (lo..hi).map(|b| BitVec::unit(2 * n, b)))?;
            let stabs = span.intersection(&inside)?.dim();
            let cols: Vec<BitVec> = swapped_gens.iter().map(|r| r.slice(lo, hi - lo)).collect();
            let commuting = F2Matrix::from_rows(hi - lo, cols)?.kernel().nrows();
            d[i][j] = commuting - stabs;
        }
    }
    Ok(d)
}

/// Checks that `g` lives on an open chain with generators on at most two
/// adjacent sites and pairwise commuting.
fn validate(g: &StabilizerGroup) -> Result<()> {
    let lat = g.lattice();
    if lat.kind() != LatticeKind::Chain || lat.dims() != 1 || lat.periods()[0].is_some() {
        return Err(Error::Invalid("decomposition needs an open chain lattice".into()));
    }
    for p in g.generators() {
        let sites: Vec<usize> = p.support().iter().map(|&q| lat.site_of(q)).collect();
        if let (Some(lo), Some(hi)) = (sites.iter().min(), sites.iter().max()) {
            if hi - lo > 1 {
                return Err(Error::Locality(format!("{} spans more than two adjacent sites", lat.format(p))));
            }
        }
    }
    let gens = g.generators();
    for (i, a) in gens.iter().enumerate() {
        if let Some(b) = gens[i + 1..].iter().find(|b| a.anticommutes(b)) {
            return Err(Error::NonAbelian(format!("{} and {}", lat.format(a), lat.format(b))));
        }
    }
    Ok(())
}

/// Working state: generators in the current frame, restricted to qubits
/// that are not yet retired.
struct Work {
    lat: Arc<Lattice>,
    n: usize,
    gens: Vec<BitVec>,
    frames: Vec<F2Matrix>,
    active: Vec<Vec<bool>>,
    free: Vec<u32>,
    bells: Vec<(u32, u32)>,
}

impl Work {
    fn new(g: &StabilizerGroup) -> Self {
        let lat = g.lattice().clone();
        let n = lat.num_qubits();
        let frames = OnSiteClifford::identity(&lat).sites;
        let active = (0..lat.num_sites()).map(|k| vec![true; lat.site_qubits(k).len()]).collect();
        let gens = g.generators().iter().map(|p| p.to_symplectic(n)).collect();
        Work { lat, n, gens, frames, active, free: Vec::new(), bells: Vec::new() }
    }

    fn offset(&self, k: usize) -> usize {
        2 * self.lat.site_qubits(k).start as usize
    }

    fn block(&self, v: &BitVec, k: usize) -> BitVec {
        v.slice(self.offset(k), self.frames[k].nrows())
    }

    fn active_slots(&self, k: usize) -> Vec<usize> {
        (0..self.active[k].len()).filter(|&i| self.active[k][i]).collect()
    }

    /// Basis of group elements supported on `sites`.
    fn span_on(&self, sites: &[usize]) -> Result<Vec<BitVec>> {
        let span = Subspace::span(2 * self.n, self.gens.iter().cloned())?;
        let units = sites.iter().flat_map(|&k| {
            let off = self.offset(k);
            (0..self.frames[k].nrows()).map(move |b| BitVec::unit(2 * self.n, off + b))
        });
        let inside = Subspace::span(2 * self.n, units)?;
        Ok(span.intersection(&inside)?.basis().rows().to_vec())
    }

    /// Frame change at site `k` sending the given pairs and isotropic
    /// vectors (site-local, on active qubits) to `(X_a, Z_a)` and `Z_a` of
    /// active qubits `a`; returns the slots used, in input order.
    fn reframe(&mut self, k: usize, pairs: &[(BitVec, BitVec)], iso: &[BitVec]) -> Result<Vec<usize>> {
        let slots = self.active_slots(k);
        let m = slots.len();
        if m == 0 {
            return Ok(Vec::new());
        }
        let to_act = |v: &BitVec| {
            let mut a = BitVec::zeros(2 * m);
            for (i, &s) in slots.iter().enumerate() {
                a.set(2 * i, v.get(2 * s));
                a.set(2 * i + 1, v.get(2 * s + 1));
            }
            a
        };
        let pairs_act: Vec<(BitVec, BitVec)> = pairs.iter().map(|(x, z)| (to_act(x), to_act(z))).collect();
        let iso_act: Vec<BitVec> = iso.iter().map(to_act).collect();
        let basis = complete_symplectic(m, &pairs_act, &iso_act)?;
        // Prefer the slot where `z` (then `x`) already acts, so an input in
        // normal form keeps the identity frame.
        let mut used = vec![false; m];
        let mut assign = Vec::with_capacity(m);
        for (x, z) in &basis {
            let pick = (0..m)
                .find(|&a| !used[a] && z.get(2 * a + 1) && !z.get(2 * a))
                .or_else(|| (0..m).find(|&a| !used[a] && x.get(2 * a) && !x.get(2 * a + 1)))
                .or_else(|| (0..m).find(|&a| !used[a]))
                .expect("one slot per pair");
            used[pick] = true;
            assign.push(pick);
        }
        let mut rows = vec![BitVec::zeros(2 * m); 2 * m];
        for ((x, z), &a) in basis.iter().zip(&assign) {
            rows[2 * a] = x.clone();
            rows[2 * a + 1] = z.clone();
        }
        let t_act = F2Matrix::from_rows(2 * m, rows)?.inverse()?;
        let d = self.frames[k].nrows();
        let mut t = F2Matrix::identity(d);
        for (i, &si) in slots.iter().enumerate() {
            for bi in 0..2 {
                let mut row = BitVec::zeros(d);
                for (j, &sj) in slots.iter().enumerate() {
                    for bj in 0..2 {
                        row.set(2 * sj + bj, t_act.get(2 * i + bi, 2 * j + bj));
                    }
                }
                t = {
                    let mut rs = t.into_rows();
                    rs[2 * si + bi] = row;
                    F2Matrix::from_rows(d, rs)?
                };
            }
        }
        let off = self.offset(k);
        for g in self.gens.iter_mut() {
            let block = g.slice(off, d);
            if block.is_zero() {
                continue;
            }
            let image = t.combine(&block);
            for b in 0..d {
                g.set(off + b, image.get(b));
            }
        }
        let rows = self.frames[k].rows().iter().map(|r| t.combine(r)).collect();
        self.frames[k] = F2Matrix::from_rows(d, rows)?;
        Ok(assign[..pairs.len() + iso.len()].iter().map(|&a| slots[a]).collect())
    }

    fn qubit(&self, k: usize, slot: usize) -> u32 {
        self.lat.site_qubits(k).start + slot as u32
    }

    /// Retires a qubit fixed by a single `Z`, clearing it from generators.
    fn pin(&mut self, k: usize, slot: usize) {
        self.active[k][slot] = false;
        let q = self.qubit(k, slot) as usize;
        for g in self.gens.iter_mut() {
            debug_assert!(!g.get(2 * q), "generator anticommutes with a pinned Z");
            g.set(2 * q + 1, false);
        }
        self.free.push(q as u32);
    }

    /// Retires a Bell pair fixed by `XX` and `ZZ`.
    fn bell(&mut self, (ka, sa): (usize, usize), (kb, sb): (usize, usize)) {
        self.active[ka][sa] = false;
        self.active[kb][sb] = false;
        let (a, b) = (self.qubit(ka, sa) as usize, self.qubit(kb, sb) as usize);
        for g in self.gens.iter_mut() {
            for bit in 0..2 {
                if g.get(2 * a + bit) {
                    g.flip(2 * a + bit);
                    g.flip(2 * b + bit);
                }
            }
            debug_assert!(!g.get(2 * b) && !g.get(2 * b + 1), "generator anticommutes with a Bell pair");
        }
        self.bells.push((a as u32, b as u32));
    }

    fn prune(&mut self) {
        self.gens.retain(|g| !g.is_zero());
    }
}

/// A chain while it is being assembled: its vector at each site it covers.
struct Building {
    start: usize,
    vecs: Vec<BitVec>,
}

/// Decomposes a two-site-local group on an open chain into Ising chains,
/// Bell pairs and single-`Z` qubits.
pub fn ising_decompose(g: &StabilizerGroup) -> Result<Decomposition> {
    validate(g)?;
    let mut w = Work::new(g);
    let ns = w.lat.num_sites();

    // Single-site elements, repeated since pinning can expose more.
    loop {
        let mut changed = false;
        for k in 0..ns {
            let elems = w.span_on(&[k])?;
            if elems.is_empty() {
                continue;
            }
            let iso: Vec<BitVec> = elems.iter().map(|v| w.block(v, k)).collect();
            for s in w.reframe(k, &[], &iso)? {
                w.pin(k, s);
            }
            w.prune();
            changed = true;
        }
        if !changed {
            break;
        }
    }

    // Bell pairs from the symplectic part of each bond.
    for k in 0..ns.saturating_sub(1) {
        let mut list = w.span_on(&[k, k + 1])?;
        let mut pairs: Vec<(BitVec, BitVec)> = Vec::new();
        let left = |v: &BitVec, w: &Work| w.block(v, k);
        loop {
            let found = (0..list.len()).find_map(|i| {
                (i + 1..list.len()).find(|&j| omega(&left(&list[i], &w), &left(&list[j], &w))).map(|j| (i, j))
            });
            let Some((i, j)) = found else { break };
            let (e, f) = (list[i].clone(), list[j].clone());
            list.remove(j);
            list.remove(i);
            let (le, lf) = (left(&e, &w), left(&f, &w));
            for c in list.iter_mut() {
                let lc = left(c, &w);
                if omega(&lc, &lf) {
                    c.xor_assign(&e);
                }
                if omega(&lc, &le) {
                    c.xor_assign(&f);
                }
            }
            pairs.push((e, f));
        }
        if pairs.is_empty() {
            continue;
        }
        let lp: Vec<_> = pairs.iter().map(|(e, f)| (w.block(e, k), w.block(f, k))).collect();
        let rp: Vec<_> = pairs.iter().map(|(e, f)| (w.block(e, k + 1), w.block(f, k + 1))).collect();
        let ls = w.reframe(k, &lp, &[])?;
        let rs = w.reframe(k + 1, &rp, &[])?;
        for (a, b) in ls.into_iter().zip(rs) {
            w.bell((k, a), (k + 1, b));
        }
        w.prune();
    }

    // Chains: every bond is now an isometry between isotropic spaces.
    let mut chains: Vec<Building> = Vec::new();
    let mut alive: Vec<usize> = Vec::new();
    for k in 0..ns {
        let d = w.frames[k].nrows();
        let (out_space, link) = if k + 1 < ns {
            let mut link = Echelon::with_tags(d, w.frames[k + 1].nrows());
            for v in w.span_on(&[k, k + 1])? {
                link.insert_tagged(w.block(&v, k), w.block(&v, k + 1));
            }
            (link.rows().to_vec(), Some(link))
        } else {
            (Vec::new(), None)
        };
        let mut o = Echelon::new(d);
        for v in &out_space {
            o.insert(v.clone());
        }
        // Coordinates over the arriving vectors (oldest first) of their
        // combinations that lie in the outgoing space.
        let m = alive.len();
        let residues: Vec<BitVec> = alive.iter().map(|&c| o.reduce(chains[c].vecs.last().unwrap())).collect();
        let combos = if m == 0 { F2Matrix::new(0) } else { F2Matrix::from_rows(d, residues)?.left_kernel() };
        // Pivot on the youngest coordinate.
        let rev = |c: &BitVec| BitVec::from_ones(m, c.ones().map(|i| m - 1 - i));
        let (red, rank) = F2Matrix::from_rows(m, combos.rows().iter().map(rev).collect())?.rref();
        let mut continuing = Vec::new();
        for row in &red.rows()[..rank] {
            let c = rev(row);
            let j = c.last_one().expect("nonzero row");
            let target = alive[j];
            for i in c.ones().filter(|&i| i != j) {
                let src = alive[i];
                let (ts, ss) = (chains[target].start, chains[src].start);
                for s in ts..=k {
                    let add = chains[src].vecs[s - ss].clone();
                    chains[target].vecs[s - ts].xor_assign(&add);
                }
            }
            continuing.push(target);
        }
        continuing.sort();
        let mut span = Echelon::new(d);
        for &c in &continuing {
            span.insert(chains[c].vecs.last().unwrap().clone());
        }
        for v in &out_space {
            if span.insert(v.clone()).is_some() {
                chains.push(Building { start: k, vecs: vec![v.clone()] });
                continuing.push(chains.len() - 1);
            }
        }
        if let Some(link) = link {
            for &c in &continuing {
                let (rest, image) = link.reduce_tagged(chains[c].vecs.last().unwrap());
                debug_assert!(rest.is_zero());
                chains[c].vecs.push(image);
            }
        }
        alive = continuing;
    }

    // One frame per site placing every chain vector on its own qubit.
    let mut qubits: Vec<Vec<u32>> = chains.iter().map(|_| Vec::new()).collect();
    for k in 0..ns {
        let here: Vec<usize> =
            (0..chains.len()).filter(|&c| (chains[c].start..chains[c].start + chains[c].vecs.len()).contains(&k)).collect();
        let iso: Vec<BitVec> = here.iter().map(|&c| chains[c].vecs[k - chains[c].start].clone()).collect();
        let slots = w.reframe(k, &[], &iso)?;
        for (&c, s) in here.iter().zip(slots) {
            qubits[c].push(w.qubit(k, s));
            w.active[k][s] = false;
        }
    }
    let mut out_chains: Vec<Chain> =
        chains.iter().zip(qubits).map(|(c, q)| Chain { first_site: c.start, qubits: q }).collect();
    for k in 0..ns {
        for s in w.active_slots(k) {
            out_chains.push(Chain { first_site: k, qubits: vec![w.qubit(k, s)] });
        }
    }
    out_chains.sort_by_key(|c| (c.first_site, c.qubits[0]));
    let mut free = w.free.clone();
    free.sort();
    let mut bell_pairs = w.bells.clone();
    bell_pairs.sort();
    let dec = Decomposition {
        lattice: w.lat.clone(),
        clifford: OnSiteClifford { sites: w.frames },
        chains: out_chains,
        bell_pairs,
        free_qubits: free,
    };
    let image: Vec<PauliOp> = g.generators().iter().map(|p| dec.clifford.apply(&dec.lattice, p)).collect();
    let n = dec.lattice.num_qubits();
    let lhs = Subspace::span(2 * n, image.iter().map(|p| p.to_symplectic(n)))?;
    let rhs = Subspace::span(2 * n, dec.normal_form().iter().map(|p| p.to_symplectic(n)))?;
    if lhs != rhs {
        return Err(Error::Invalid("internal: clifford image differs from the normal form".into()));
    }
    Ok(dec)
}

/// Splits the symplectic part of a two-site group into Bell pairs. Fails
/// if some element acts on one side only.
pub fn extract_bell_pairs(g: &StabilizerGroup) -> Result<Decomposition> {
    let lat = g.lattice();
    if lat.num_sites() != 2 {
        return Err(Error::Invalid("bell extraction works on a single bond".into()));
    }
    validate(g)?;
    let n = lat.num_qubits();
    let span = Subspace::span(2 * n, g.generators().iter().map(|p| p.to_symplectic(n)))?;
    for k in 0..2 {
        let r = lat.site_qubits(k);
        let side = Subspace::span(2 * n, (2 * r.start as usize..2 * r.end as usize).map(|b| BitVec::unit(2 * n, b)))?;
        if let Some(v) = span.intersection(&side)?.basis().rows().first() {
            return Err(Error::Invalid(format!(
                "{} acts on one side of the bond",
                lat.format(&PauliOp::from_symplectic(v))
            )));
        }
    }
    ising_decompose(g)
}
