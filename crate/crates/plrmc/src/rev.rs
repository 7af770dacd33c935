// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Reversible and locally reversible pairs of stabilizer groups.

use crate::error::{Error, Result};
use crate::f2::{minimal_span_basis, solve_in_span, BitVec, Echelon, F2Matrix};
use crate::pauli::{Half, Pauli, PauliOp, Region};
use crate::stab::StabilizerGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Paired quotient bases: `a_side[i]` anticommutes with `b_side[j]` iff `i == j`.
#[derive(Clone, Debug)]
pub struct ConjugateBases {
    pub a_side: Vec<PauliOp>,
    pub b_side: Vec<PauliOp>,
    /// Largest diameter among the listed elements (doubled units).
    pub radius: Half,
    b_touch: Vec<Vec<u32>>,
}

impl ConjugateBases {
    fn new(n: usize, a_side: Vec<PauliOp>, b_side: Vec<PauliOp>, radius: Half) -> Self {
        let mut b_touch = vec![Vec::new(); n];
        for (i, b) in b_side.iter().enumerate() {
            for (q, _) in b.iter() {
                b_touch[q as usize].push(i as u32);
            }
        }
        ConjugateBases { a_side, b_side, radius, b_touch }
    }

    /// Bases of a transition between equal groups.
    pub fn empty(n: usize) -> Self {
        ConjugateBases::new(n, Vec::new(), Vec::new(), 0)
    }

    pub fn len(&self) -> usize {
        self.a_side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_side.is_empty()
    }

    /// Indices of b-side elements anticommuting with `p`.
    pub fn b_anticommuting(&self, p: &PauliOp) -> Vec<usize> {
        let mut idx: Vec<usize> =
            p.iter().flat_map(|(q, _)| self.b_touch[q as usize].iter().map(|&i| i as usize)).collect();
        idx.sort_unstable();
        idx.dedup();
        idx.retain(|&i| self.b_side[i].anticommutes(p));
        idx
    }

    /// The transition reversed: roles of the two sides swap.
    pub fn reversed(&self) -> ConjugateBases {
        let n = self.b_touch.len();
        ConjugateBases::new(n, self.b_side.clone(), self.a_side.clone(), self.radius)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitionReport {
    pub reversible: bool,
    pub locally_reversible: bool,
    /// Diameter bound of the conjugate bases found (doubled units;
    /// serialized in lattice units).
    #[serde(serialize_with = "crate::pauli::ser_opt_half")]
    pub radius_used: Option<Half>,
    /// Condition (b): nothing outside the other group commutes with it.
    pub no_enlargement: bool,
    /// Condition (c): the quotient commutation matrix is invertible.
    pub matrix_invertible: bool,
    #[serde(skip)]
    pub witness: Option<PauliOp>,
    pub detail: String,
}

/// Intermediate data shared by the reversibility checks.
#[derive(Clone, Debug)]
pub struct PairAnalysis {
    /// Spanning set of `a ∩ b`.
    pub common: Vec<BitVec>,
    pub no_enlargement: bool,
    pub matrix_invertible: bool,
    pub witness: Option<PauliOp>,
    /// Quotient representatives, as generator indices.
    pub a_quotient: Vec<usize>,
    pub b_quotient: Vec<usize>,
}

fn same_lattice(a: &StabilizerGroup, b: &StabilizerGroup) -> Result<()> {
    if **a.lattice() != **b.lattice() {
        return Err(Error::Invalid("lattice mismatch".into()));
    }
    Ok(())
}

/// Elements of `a` that commute with every generator of `b`, as symplectic
/// vectors (a spanning set, zero vectors removed).
fn commuting_part(a: &StabilizerGroup, b: &StabilizerGroup) -> Vec<BitVec> {
    let n = a.num_qubits();
    let ga = a.generators();
    // Row j: which generators of `a` anticommute with generator j of `b`.
    let mut ct = F2Matrix::zeros(b.generators().len(), ga.len());
    for (j, g) in b.generators().iter().enumerate() {
        for i in a.anticommuting(g) {
            ct.set(j, i, true);
        }
    }
    let sym: Vec<BitVec> = ga.iter().map(|g| g.to_symplectic(n)).collect();
    let m = F2Matrix::from_rows(2 * n, sym).expect("generator vectors have width 2n");
    ct.kernel().rows().iter().map(|c| m.combine(c)).filter(|v| !v.is_zero()).collect()
}

fn sorted_by_locality(g: &StabilizerGroup) -> Vec<usize> {
    let l = g.lattice();
    let mut idx: Vec<usize> = (0..g.generators().len()).collect();
    idx.sort_by_cached_key(|&i| (l.diameter(&g.generators()[i]), g.generators()[i].support()));
    idx
}

fn quotient_indices(g: &StabilizerGroup, common: &[BitVec]) -> Vec<usize> {
    let n = g.num_qubits();
    let mut e = Echelon::new(2 * n);
    for s in common {
        e.insert(s.clone());
    }
    sorted_by_locality(g).into_iter().filter(|&i| e.insert(g.generators()[i].to_symplectic(n)).is_some()).collect()
}

pub fn analyze_pair(a: &StabilizerGroup, b: &StabilizerGroup) -> Result<PairAnalysis> {
    same_lattice(a, b)?;
    let a_perp = commuting_part(a, b);
    let b_perp = commuting_part(b, a);
    let outside_a = |v: &BitVec| !b.echelon().contains(v);
    let outside_b = |v: &BitVec| !a.echelon().contains(v);
    let fail_a = a_perp.iter().any(outside_a);
    let fail_b = b_perp.iter().any(outside_b);
    let no_enlargement = !fail_a && !fail_b;
    let mut witness = None;
    if !no_enlargement {
        let n = a.num_qubits();
        let (set, other) = if fail_a { (&a_perp, b) } else { (&b_perp, a) };
        let short = minimal_span_basis(2 * n, set.iter().cloned());
        witness = short.iter().find(|v| !other.echelon().contains(v)).map(PauliOp::from_symplectic);
    }
    let common: Vec<BitVec> = if no_enlargement {
        a_perp
    } else {
        let n = a.num_qubits();
        a.intersect(b)?.generators().iter().map(|g| g.to_symplectic(n)).collect()
    };
    let a_quotient = quotient_indices(a, &common);
    let b_quotient = quotient_indices(b, &common);
    let matrix_invertible = a_quotient.len() == b_quotient.len() && {
        let k = a_quotient.len();
        let mut m = F2Matrix::zeros(k, k);
        for (r, &i) in a_quotient.iter().enumerate() {
            for (c, &j) in b_quotient.iter().enumerate() {
                if a.generators()[i].anticommutes(&b.generators()[j]) {
                    m.set(r, c, true);
                }
            }
        }
        m.is_invertible()
    };
    Ok(PairAnalysis { common, no_enlargement, matrix_invertible, witness, a_quotient, b_quotient })
}

/// Reversibility via the quotient commutation matrix, cross-checked against
/// the no-enlargement condition.
pub fn is_reversible_pair(a: &StabilizerGroup, b: &StabilizerGroup) -> Result<TransitionReport> {
    let an = analyze_pair(a, b)?;
    let detail = match (&an.witness, an.no_enlargement == an.matrix_invertible) {
        (_, false) => "conditions (b) and (c) disagree".to_string(),
        (Some(w), _) => format!("{} commutes with the other group but is not in it", a.lattice().format(w)),
        (None, _) => String::new(),
    };
    Ok(TransitionReport {
        reversible: an.no_enlargement && an.matrix_invertible,
        locally_reversible: false,
        radius_used: None,
        no_enlargement: an.no_enlargement,
        matrix_invertible: an.matrix_invertible,
        witness: an.witness,
        detail,
    })
}

/// Search for conjugate bases whose b-side elements are built from
/// generators of `b` within `radius` of their a-side partner.
pub fn find_conjugate_bases(a: &StabilizerGroup, b: &StabilizerGroup, radius: Half) -> Result<Option<ConjugateBases>> {
    let an = analyze_pair(a, b)?;
    if !(an.no_enlargement && an.matrix_invertible) {
        return Err(Error::NotReversible(
            an.witness.map(|w| a.lattice().format(&w)).unwrap_or_else(|| "singular commutation matrix".into()),
        ));
    }
    Ok(conjugate_bases_from(a, b, &an, radius))
}

pub fn conjugate_bases_from(
    a: &StabilizerGroup,
    b: &StabilizerGroup,
    an: &PairAnalysis,
    radius: Half,
) -> Option<ConjugateBases> {
    let lat = a.lattice();
    let n = a.num_qubits();
    let a_side: Vec<PauliOp> = an.a_quotient.iter().map(|&i| a.generators()[i].clone()).collect();
    let mut a_touch = vec![Vec::new(); n];
    for (i, p) in a_side.iter().enumerate() {
        for (q, _) in p.iter() {
            a_touch[q as usize].push(i as u32);
        }
    }
    let mut b_side = Vec::with_capacity(a_side.len());
    let mut used = 0;
    for (i, ai) in a_side.iter().enumerate() {
        let reg = Region::new(n, ai.support());
        let nb = lat.neighborhood(&reg, radius);
        let cands: Vec<usize> =
            b.touching_qubits(nb.qubits().iter().copied()).into_iter().filter(|&j| nb.contains_op(&b.generators()[j])).collect();
        let mut cons: Vec<usize> = cands
            .iter()
            .flat_map(|&j| b.generators()[j].iter().flat_map(|(q, _)| a_touch[q as usize].iter().map(|&k| k as usize)))
            .collect();
        cons.push(i);
        cons.sort_unstable();
        cons.dedup();
        let col = |k: usize| cons.binary_search(&k).unwrap();
        let mut m = F2Matrix::zeros(cands.len(), cons.len());
        for (r, &j) in cands.iter().enumerate() {
            for &k in &cons {
                if b.generators()[j].anticommutes(&a_side[k]) {
                    m.set(r, col(k), true);
                }
            }
        }
        let target = BitVec::unit(cons.len(), col(i));
        let c = solve_in_span(&m, &target)?;
        let mut bi = PauliOp::identity();
        for r in c.ones() {
            bi.mul_assign(&b.generators()[cands[r]]);
        }
        used = used.max(lat.diameter(&bi)).max(lat.diameter(ai));
        b_side.push(bi);
    }
    Some(ConjugateBases::new(n, a_side, b_side, used))
}

/// Dress a logical of `a` into a logical of `b`: multiply by the a-side
/// elements whose b-side partners anticommute with `p`.
pub fn evolve_logical(p: &PauliOp, a: &StabilizerGroup, b: &StabilizerGroup, cb: &ConjugateBases) -> Result<PauliOp> {
    if let Some(&i) = a.anticommuting(p).first() {
        return Err(Error::NotLogical(format!(
            "{} anticommutes with {}",
            a.lattice().format(p),
            a.lattice().format(&a.generators()[i])
        )));
    }
    let mut out = p.clone();
    for i in cb.b_anticommuting(p) {
        out.mul_assign(&cb.a_side[i]);
    }
    if let Some(&j) = b.anticommuting(&out).first() {
        return Err(Error::Invalid(format!(
            "conjugate bases do not resolve {} against {}",
            a.lattice().format(&out),
            b.lattice().format(&b.generators()[j])
        )));
    }
    Ok(out)
}

/// True iff measuring `p` on a state stabilized by `isg` gives a uniformly
/// random outcome.
pub fn is_outcome_random(p: &PauliOp, isg: &StabilizerGroup) -> bool {
    !isg.anticommuting(p).is_empty()
}

#[derive(Clone, Debug)]
pub struct TopoOptions {
    /// Largest box side (doubled units); `None` means three times the radius.
    pub max_box: Option<Half>,
    /// Random operators tried per box for condition (ii) when the box has
    /// more than three qubits (smaller boxes are enumerated exhaustively).
    pub samples: usize,
    pub seed: u64,
    /// Accept boxes near open window edges. Only meaningful when those
    /// edges are boundaries of the code itself (no stray edge logicals).
    pub allow_edges: bool,
}

impl Default for TopoOptions {
    fn default() -> Self {
        TopoOptions { max_box: None, samples: 6, seed: 0, allow_edges: false }
    }
}

#[derive(Clone, Debug)]
pub struct TopoReport {
    pub topological: bool,
    pub boxes_checked: usize,
    /// Failing condition (1 or 2) and operator.
    pub witness: Option<(u8, PauliOp)>,
}

/// Checks both conditions of a topological code on boxes inside `bulk`.
pub fn is_topological(g: &StabilizerGroup, bulk: &Region, ell: Half, opts: &TopoOptions) -> Result<TopoReport> {
    let lat = g.lattice();
    if bulk.is_empty() {
        return Err(Error::Window("empty bulk region".into()));
    }
    // The layer axis of a layered lattice is internal, not a window edge.
    let layer_axis = (lat.kind() == crate::pauli::LatticeKind::Layered).then(|| lat.dims() - 1);
    for ax in 0..lat.dims() {
        if lat.periods()[ax].is_some() || opts.allow_edges || Some(ax) == layer_axis {
            continue;
        }
        let all: Vec<i64> = lat.sites().iter().map(|s| s.coord[ax]).collect();
        let (lo, hi) = (*all.iter().min().unwrap(), *all.iter().max().unwrap());
        for &q in bulk.qubits() {
            let c = lat.coord(q)[ax];
            if c - lo < 2 * ell || hi - c < 2 * ell {
                return Err(Error::Window(format!("bulk is within {} of the window edge", 2 * ell)));
            }
        }
    }
    let max_box = opts.max_box.unwrap_or(3 * ell).max(0);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sites: Vec<usize> = bulk.qubits().iter().map(|&q| lat.site_of(q)).collect();
    sites.dedup();
    let mut seen = std::collections::HashSet::new();
    let mut checked = 0;
    let sizes: Vec<Vec<i64>> = box_sizes(lat.dims(), max_box);
    for &anchor in &sites {
        for size in &sizes {
            let Some(r) = box_region(g, anchor, size, bulk) else { continue };
            if !seen.insert(r.qubits().to_vec()) {
                continue;
            }
            checked += 1;
            if let Some(w) = condition_one(g, &r, ell) {
                return Ok(TopoReport { topological: false, boxes_checked: checked, witness: Some((1, w)) });
            }
            if let Some(w) = condition_two(g, &r, ell, opts.samples, &mut rng) {
                return Ok(TopoReport { topological: false, boxes_checked: checked, witness: Some((2, w)) });
            }
        }
    }
    Ok(TopoReport { topological: true, boxes_checked: checked, witness: None })
}

fn box_sizes(dims: usize, max_box: Half) -> Vec<Vec<i64>> {
    let steps: Vec<i64> = (0..=max_box).step_by(2).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..dims {
        out = out.into_iter().flat_map(|v| steps.iter().map(move |&s| [v.clone(), vec![s]].concat())).collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out
}

fn box_region(g: &StabilizerGroup, anchor: usize, size: &[i64], bulk: &Region) -> Option<Region> {
    let lat = g.lattice();
    let c0 = &lat.sites()[anchor].coord;
    let reach = *size.iter().max().unwrap_or(&0);
    let nb = lat.site_neighborhood(&[anchor], reach);
    let mut qs = Vec::new();
    for s in nb {
        let c = &lat.sites()[s].coord;
        let inside = (0..lat.dims()).all(|ax| {
            let d = lat.displacement(c0[ax], c[ax], ax);
            (0..=size[ax]).contains(&d)
        });
        if inside {
            for q in lat.site_qubits(s) {
                if !bulk.contains(q) {
                    return None;
                }
                qs.push(q);
            }
        }
    }
    Some(Region::new(lat.num_qubits(), qs))
}

/// Local echelon of the generators supported in `region`, in local coordinates.
fn local_span(g: &StabilizerGroup, region: &Region) -> Echelon {
    let mut e = Echelon::new(2 * region.len());
    for i in g.touching_qubits(region.qubits().iter().copied()) {
        let gi = &g.generators()[i];
        if region.contains_op(gi) {
            e.insert(gi.to_local(region));
        }
    }
    e
}

fn condition_one(g: &StabilizerGroup, r: &Region, ell: Half) -> Option<PauliOp> {
    let lb = g.centralizer_in_region(r);
    if lb.is_empty() {
        return None;
    }
    let nb = g.lattice().neighborhood(r, ell);
    let span = local_span(g, &nb);
    lb.elements.into_iter().find(|e| !span.contains(&e.to_local(&nb)))
}

fn condition_two(g: &StabilizerGroup, r: &Region, ell: Half, samples: usize, rng: &mut ChaCha8Rng) -> Option<PauliOp> {
    let k = r.len();
    let ops: Vec<PauliOp> = if k <= 3 {
        (1u32..(1 << (2 * k))).map(|m| from_mask(r, m as u64)).collect()
    } else {
        (0..samples).map(|_| from_mask(r, rng.gen::<u64>() & mask_bits(2 * k))).collect()
    };
    ops.into_iter().find(|p| !p.is_identity() && !annihilable(g, p, ell))
}

fn mask_bits(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn from_mask(r: &Region, mask: u64) -> PauliOp {
    let pairs = r.qubits().iter().enumerate().take(32).map(|(i, &q)| (q, Pauli::from_bits(mask >> (2 * i) & 1 == 1, mask >> (2 * i + 1) & 1 == 1)));
    PauliOp::from_pairs(pairs)
}

/// Is there `q` near the hull of the violated generators with `p·q` a stabilizer?
fn annihilable(g: &StabilizerGroup, p: &PauliOp, ell: Half) -> bool {
    let lat = g.lattice();
    let violated = g.anticommuting(p);
    if violated.is_empty() {
        return true;
    }
    let support: Vec<u32> = violated.iter().flat_map(|&i| g.generators()[i].support()).collect();
    let hull = hull_region(g, &support);
    let near = lat.neighborhood(&hull, ell);
    let outside = Region::new(lat.num_qubits(), p.support().into_iter().filter(|&q| !near.contains(q)));
    if outside.is_empty() {
        return true;
    }
    let u = near.union(&outside);
    let stabs = g.supported_in(&u, 2 * g.locality_radius().max(1));
    let proj: Vec<BitVec> = stabs.iter().map(|s| PauliOp::from_local(s, &u).to_local(&outside)).collect();
    let m = F2Matrix::from_rows(2 * outside.len(), proj).expect("projected width");
    solve_in_span(&m, &p.to_local(&outside)).is_some()
}

/// Axis-aligned bounding box of the given qubits (periodic axes measured
/// from the first qubit).
fn hull_region(g: &StabilizerGroup, qubits: &[u32]) -> Region {
    let lat = g.lattice();
    let base = lat.coord(qubits[0]).to_vec();
    let dims = lat.dims();
    let mut lo = vec![0i64; dims];
    let mut hi = vec![0i64; dims];
    for &q in qubits {
        let c = lat.coord(q);
        for ax in 0..dims {
            let d = lat.displacement(base[ax], c[ax], ax);
            lo[ax] = lo[ax].min(d);
            hi[ax] = hi[ax].max(d);
        }
    }
    let reach = (0..dims).map(|ax| hi[ax] - lo[ax]).max().unwrap_or(0);
    let anchor = lat.site_of(qubits[0]);
    let cand = lat.site_neighborhood(&[anchor], reach);
    let mut qs = Vec::new();
    for s in cand {
        let c = &lat.sites()[s].coord;
        if (0..dims).all(|ax| (lo[ax]..=hi[ax]).contains(&lat.displacement(base[ax], c[ax], ax))) {
            qs.extend(lat.site_qubits(s));
        }
    }
    Region::new(lat.num_qubits(), qs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Lattice;
    use std::sync::Arc;

    fn chain(n: usize) -> Arc<Lattice> {
        Arc::new(Lattice::chain(n, 1, false))
    }

    fn group(l: &Arc<Lattice>, gens: &[&str]) -> StabilizerGroup {
        StabilizerGroup::new(l.clone(), gens.iter().map(|s| l.parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn bell_pair_groups_are_reversible() {
        let l = chain(5);
        let a = group(&l, &["X(0) X(1)", "Z(0) Z(1)", "X(2) X(3)", "Z(2) Z(3)"]);
        let b = group(&l, &["X(1) X(2)", "Z(1) Z(2)", "X(3) X(4)", "Z(3) Z(4)"]);
        let r = is_reversible_pair(&a, &b).unwrap();
        assert!(r.reversible && r.no_enlargement && r.matrix_invertible);
    }

    #[test]
    fn skipped_step_is_not_reversible() {
        let l = chain(2);
        let a = group(&l, &["X(0)"]);
        let b = group(&l, &["X(1)"]);
        let r = is_reversible_pair(&a, &b).unwrap();
        assert!(!r.reversible && !r.matrix_invertible);
        assert_eq!(r.witness, Some(l.parse("X(0)").unwrap()));
        assert!(matches!(find_conjugate_bases(&a, &b, 4), Err(Error::NotReversible(_))));
    }

    #[test]
    fn identical_groups() {
        let l = chain(3);
        let g = group(&l, &["Z(0) Z(1)"]);
        assert!(is_reversible_pair(&g, &g).unwrap().reversible);
        let cb = find_conjugate_bases(&g, &g, 0).unwrap().unwrap();
        assert!(cb.is_empty());
    }

    #[test]
    fn translation_step_pairs() {
        let l = Arc::new(Lattice::chain(8, 1, true));
        let a = group(&l, &["X(0)", "X(2)", "X(4)", "X(6)"]);
        let b = group(&l, &["Z(7) Z(0)", "Z(1) Z(2)", "Z(3) Z(4)", "Z(5) Z(6)"]);
        let cb = find_conjugate_bases(&a, &b, 2).unwrap().unwrap();
        assert_eq!(cb.len(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(cb.a_side[i].anticommutes(&cb.b_side[j]), i == j);
            }
        }
        assert_eq!(cb.b_side[0], l.parse("Z(7) Z(0)").unwrap());
        assert!(cb.radius <= 2);
    }

    #[test]
    fn teleport_pair_is_not_locally_reversible() {
        let l = chain(5);
        let a = group(&l, &["X(0) X(1)", "Z(0) Z(1)", "X(2) X(3)", "Z(2) Z(3)"]);
        let b = group(&l, &["X(1) X(2)", "Z(1) Z(2)", "X(3) X(4)", "Z(3) Z(4)"]);
        assert!(find_conjugate_bases(&a, &b, 2).unwrap().is_none());
        let cb = find_conjugate_bases(&a, &b, 8).unwrap().unwrap();
        assert_eq!(cb.len(), 4);
    }

    #[test]
    fn teleportation_moves_the_logical() {
        let l = chain(2);
        let s0 = group(&l, &["X(1)"]);
        let s1 = group(&l, &["Z(0) Z(1)"]);
        let s2 = group(&l, &["X(0)"]);
        let cb01 = find_conjugate_bases(&s0, &s1, 2).unwrap().unwrap();
        let cb12 = find_conjugate_bases(&s1, &s2, 2).unwrap().unwrap();
        let x = evolve_logical(&l.parse("X(0)").unwrap(), &s0, &s1, &cb01).unwrap();
        assert_eq!(x, l.parse("X(0) X(1)").unwrap());
        let x = evolve_logical(&x, &s1, &s2, &cb12).unwrap();
        assert!(s2.contains(&x.multiply(&l.parse("X(1)").unwrap())));
        // Already commuting with the target: unchanged.
        let z = l.parse("Z(0)").unwrap();
        assert_eq!(evolve_logical(&z, &s0, &s1, &cb01).unwrap(), z);
        assert!(matches!(evolve_logical(&l.parse("Z(1)").unwrap(), &s0, &s1, &cb01), Err(Error::NotLogical(_))));
    }

    #[test]
    fn outcome_randomness() {
        let l = chain(2);
        let g = group(&l, &["X(1)"]);
        assert!(is_outcome_random(&l.parse("Z(0) Z(1)").unwrap(), &g));
        assert!(!is_outcome_random(&l.parse("X(1)").unwrap(), &g));
        let xi = l.parse("X(0)").unwrap();
        assert!(!is_outcome_random(&xi, &g) && !g.contains(&xi));
    }

    #[test]
    fn vacuum_is_topological_and_ising_is_not() {
        let l = Arc::new(Lattice::chain(12, 1, false));
        let vac = StabilizerGroup::new(l.clone(), (0..12).map(|q| PauliOp::single(q, Pauli::Z)).collect()).unwrap();
        let bulk = l.region_where(|c| (4..=16).contains(&c[0]));
        let rep = is_topological(&vac, &bulk, 2, &TopoOptions::default()).unwrap();
        assert!(rep.topological, "{rep:?}");
        let ising =
            StabilizerGroup::new(l.clone(), (0..11).map(|q| PauliOp::uniform(Pauli::Z, [q, q + 1])).collect()).unwrap();
        let rep = is_topological(&ising, &bulk, 2, &TopoOptions::default()).unwrap();
        let (cond, w) = rep.witness.unwrap();
        assert_eq!(cond, 1);
        assert_eq!(w.weight(), 1);
        assert_eq!(w.iter().next().unwrap().1, Pauli::Z);
        let too_close = l.region_where(|c| c[0] <= 4);
        assert!(matches!(is_topological(&vac, &too_close, 2, &TopoOptions::default()), Err(Error::Window(_))));
    }
}
