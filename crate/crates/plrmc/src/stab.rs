// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Stabilizer groups as subspaces of the symplectic space.

use crate::error::{Error, Result};
use crate::f2::{minimal_span_basis, BitVec, Echelon, F2Matrix, Subspace};
use crate::pauli::{Half, Lattice, LatticeSpec, PauliOp, Region};
use serde::{Deserialize, Serialize};
use std::sync::{Arc, OnceLock};

#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    lattice: Arc<Lattice>,
    generators: Vec<PauliOp>,
    radius: Half,
    touching: Arc<Vec<Vec<u32>>>,
    echelon: Arc<OnceLock<Echelon>>,
    canonical: Arc<OnceLock<Subspace>>,
}

impl PartialEq for StabilizerGroup {
    fn eq(&self, other: &Self) -> bool {
        *self.lattice == *other.lattice && self.same_span(other)
    }
}

impl StabilizerGroup {
    /// Checks that the generators commute pairwise. Identity generators
    /// are dropped.
    pub fn new(lattice: Arc<Lattice>, generators: Vec<PauliOp>) -> Result<Self> {
        let g = Self::new_unchecked(lattice, generators)?;
        if let Some((i, j)) = g.first_anticommuting_pair() {
            let l = &g.lattice;
            return Err(Error::NonAbelian(format!(
                "{} and {}",
                l.format(&g.generators[i]),
                l.format(&g.generators[j])
            )));
        }
        Ok(g)
    }

    /// As `new`, but trusts the caller on commutation.
    pub fn new_unchecked(lattice: Arc<Lattice>, generators: Vec<PauliOp>) -> Result<Self> {
        let n = lattice.num_qubits();
        let generators: Vec<PauliOp> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let mut touching = vec![Vec::new(); n];
        for (i, g) in generators.iter().enumerate() {
            for (q, _) in g.iter() {
                if q as usize >= n {
                    return Err(Error::QubitRange { qubit: q as usize, n });
                }
                touching[q as usize].push(i as u32);
            }
        }
        let radius = generators.iter().map(|g| lattice.diameter(g)).max().unwrap_or(0);
        Ok(StabilizerGroup {
            lattice,
            generators,
            radius,
            touching: Arc::new(touching),
            echelon: Arc::new(OnceLock::new()),
            canonical: Arc::new(OnceLock::new()),
        })
    }

    pub fn trivial(lattice: Arc<Lattice>) -> Self {
        Self::new_unchecked(lattice, Vec::new()).expect("empty generator list")
    }

    fn first_anticommuting_pair(&self) -> Option<(usize, usize)> {
        for (i, g) in self.generators.iter().enumerate() {
            for j in self.touching_op(g) {
                if j > i && g.anticommutes(&self.generators[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn num_qubits(&self) -> usize {
        self.lattice.num_qubits()
    }

    pub fn generators(&self) -> &[PauliOp] {
        &self.generators
    }

    /// Largest generator diameter (doubled units).
    pub fn locality_radius(&self) -> Half {
        self.radius
    }

    /// Echelon basis of the span, built in generator order.
    pub fn echelon(&self) -> &Echelon {
        self.echelon.get_or_init(|| {
            let n = self.num_qubits();
            let mut e = Echelon::new(2 * n);
            for g in &self.generators {
                e.insert(g.to_symplectic(n));
            }
            e
        })
    }

    /// Reduced row echelon basis of the span.
    pub fn canonical_basis(&self) -> &Subspace {
        self.canonical.get_or_init(|| self.echelon().to_subspace())
    }

    pub fn dim(&self) -> usize {
        self.echelon().rank()
    }

    pub fn same_span(&self, other: &StabilizerGroup) -> bool {
        self.dim() == other.dim() && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn contains(&self, p: &PauliOp) -> bool {
        if p.max_qubit().is_some_and(|q| q as usize >= self.num_qubits()) {
            return false;
        }
        self.echelon().contains(&p.to_symplectic(self.num_qubits()))
    }

    /// Indices of generators sharing a qubit with `p`, ascending.
    pub fn touching_op(&self, p: &PauliOp) -> Vec<usize> {
        self.touching_qubits(p.iter().map(|(q, _)| q))
    }

    pub fn touching_qubits(&self, qubits: impl IntoIterator<Item = u32>) -> Vec<usize> {
        let mut v: Vec<usize> = qubits
            .into_iter()
            .flat_map(|q| self.touching.get(q as usize).into_iter().flatten().map(|&i| i as usize))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Generators that anticommute with `p`.
    pub fn anticommuting(&self, p: &PauliOp) -> Vec<usize> {
        self.touching_op(p).into_iter().filter(|&i| self.generators[i].anticommutes(p)).collect()
    }

    pub fn commutes_with(&self, p: &PauliOp) -> bool {
        self.touching_op(p).into_iter().all(|i| !self.generators[i].anticommutes(p))
    }

    /// Same lattice, extra generators appended.
    pub fn extended(&self, extra: impl IntoIterator<Item = PauliOp>) -> Result<StabilizerGroup> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        StabilizerGroup::new(self.lattice.clone(), gens)
    }

    /// The group on another lattice obtained by relabeling qubits.
    pub fn relabeled(&self, lattice: Arc<Lattice>, f: impl Fn(u32) -> u32) -> Result<StabilizerGroup> {
        let gens = self.generators.iter().map(|g| g.map_qubits(&f)).collect();
        StabilizerGroup::new_unchecked(lattice, gens)
    }

    /// Elements of the span of the generators touching `neighborhood(r, reach)`
    /// that are supported inside `r`, as a minimal-span basis of local vectors.
    pub fn supported_in(&self, r: &Region, reach: Half) -> Vec<BitVec> {
        let nb = self.lattice.neighborhood(r, reach);
        let gens = self.touching_qubits(nb.qubits().iter().copied());
        if gens.is_empty() {
            return Vec::new();
        }
        let mut cols: Vec<u32> = gens.iter().flat_map(|&i| self.generators[i].support()).collect();
        cols.extend(r.qubits());
        let all = Region::new(self.num_qubits(), cols);
        // Column order: qubits outside r first, so echelon rows whose pivot
        // lies inside r are exactly the elements supported in r.
        let mut order: Vec<u32> = all.qubits().iter().copied().filter(|&q| !r.contains(q)).collect();
        let outside = order.len();
        order.extend(all.qubits().iter().copied().filter(|&q| r.contains(q)));
        let pos: std::collections::HashMap<u32, usize> = order.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let width = 2 * order.len();
        let mut ech = Echelon::new(width);
        for &i in &gens {
            let mut v = BitVec::zeros(width);
            for (q, p) in self.generators[i].iter() {
                let k = pos[&q];
                v.set(2 * k, p.x());
                v.set(2 * k + 1, p.z());
            }
            ech.insert(v);
        }
        let inside: Vec<BitVec> = ech
            .rows()
            .iter()
            .filter(|row| row.first_one().unwrap() >= 2 * outside)
            .map(|row| {
                let mut v = BitVec::zeros(2 * r.len());
                for b in row.ones() {
                    let q = order[b / 2];
                    let k = r.position(q).unwrap();
                    v.set(2 * k + b % 2, true);
                }
                v
            })
            .collect();
        minimal_span_basis(2 * r.len(), inside)
    }

    /// Logical operators supported in `r`: Paulis on `r` commuting with every
    /// generator that meets `r`, modulo stabilizers supported in `r`.
    pub fn centralizer_in_region(&self, r: &Region) -> LogicalBasis {
        let n = self.num_qubits();
        let width = 2 * r.len();
        let gens = self.touching_qubits(r.qubits().iter().copied());
        let mut constraints = F2Matrix::new(width);
        for &i in &gens {
            let local = self.generators[i].to_local(r);
            let mut swapped = BitVec::zeros(width);
            for b in local.ones() {
                swapped.set(b ^ 1, true);
            }
            constraints.push_row(swapped);
        }
        let kernel = constraints.kernel();
        let stabs = self.supported_in(r, 2 * self.radius.max(1));
        let mut modulo = Echelon::new(width);
        for s in &stabs {
            modulo.insert(s.clone());
        }
        let stab_reduced = modulo.clone();
        let candidates = minimal_span_basis(width, kernel.rows().iter().cloned().chain(stabs.iter().cloned()));
        let mut elements = Vec::new();
        for c in candidates {
            if modulo.insert(c.clone()).is_some() {
                let rep = stab_reduced.reduce(&c);
                elements.push(PauliOp::from_local(&rep, r));
            }
        }
        elements.sort_by_key(|e| e.support());
        let modulo_group = StabilizerGroup::new_unchecked(
            self.lattice.clone(),
            stabs.iter().map(|s| PauliOp::from_local(s, r)).collect(),
        )
        .expect("stabilizers lie on the lattice");
        debug_assert!(elements.iter().all(|e| e.max_qubit().is_none_or(|q| (q as usize) < n)));
        LogicalBasis { interface: r.clone(), elements, modulo: modulo_group }
    }

    /// Span intersection. Generators of the result are combinations of
    /// `self`'s generators and need not be local.
    pub fn intersect(&self, other: &StabilizerGroup) -> Result<StabilizerGroup> {
        if *self.lattice != *other.lattice {
            return Err(Error::Invalid("lattice mismatch".into()));
        }
        let n = self.num_qubits();
        let basis: Vec<BitVec> = self.echelon().rows().to_vec();
        let rem: Vec<BitVec> = basis.iter().map(|v| other.echelon().reduce(v)).collect();
        let combos = F2Matrix::from_rows(2 * n, rem)?.left_kernel();
        let m = F2Matrix::from_rows(2 * n, basis)?;
        let rows = combos.rows().iter().map(|c| m.combine(c));
        let ms = minimal_span_basis(2 * n, rows);
        StabilizerGroup::new_unchecked(self.lattice.clone(), ms.iter().map(PauliOp::from_symplectic).collect())
    }

    /// Load the JSON stabilizer-group file format.
    pub fn from_file_json(text: &str) -> Result<StabilizerGroup> {
        let f: GroupFile = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        f.build()
    }

    pub fn to_file(&self, spec: &LatticeSpec) -> GroupFile {
        GroupFile {
            lattice: spec.clone(),
            generators: self.generators.iter().map(|g| self.lattice.format(g)).collect(),
            locality_radius: Some((self.radius + 1) / 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub lattice: LatticeSpec,
    pub generators: Vec<String>,
    /// In lattice units; every generator must fit.
    #[serde(default)]
    pub locality_radius: Option<i64>,
}

impl GroupFile {
    pub fn build(&self) -> Result<StabilizerGroup> {
        let lattice = self.lattice.build()?;
        let gens = self.generators.iter().map(|s| lattice.parse(s)).collect::<Result<Vec<_>>>()?;
        let g = StabilizerGroup::new(lattice, gens)?;
        if let Some(ell) = self.locality_radius {
            if let Some(bad) = g.generators.iter().find(|p| g.lattice.diameter(p) > 2 * ell) {
                return Err(Error::Locality(format!("{} exceeds radius {ell}", g.lattice.format(bad))));
            }
        }
        Ok(g)
    }
}

/// Basis of logical classes supported on an interface region.
#[derive(Clone, Debug)]
pub struct LogicalBasis {
    pub interface: Region,
    pub elements: Vec<PauliOp>,
    pub modulo: StabilizerGroup,
}

impl LogicalBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Commutation matrix of the elements.
    pub fn gram(&self) -> F2Matrix {
        gram(&self.elements)
    }
}

pub fn gram(ops: &[PauliOp]) -> F2Matrix {
    let k = ops.len();
    let mut m = F2Matrix::zeros(k, k);
    for i in 0..k {
        for j in i + 1..k {
            if ops[i].anticommutes(&ops[j]) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    m
}

/// True if no nonzero combination of a window of consecutive elements
/// commutes with every element. The window is half the basis, so central
/// products spanning a whole finite window (which an infinite chain would
/// not have) are ignored while any local center is caught.
pub fn is_centerless(lb: &LogicalBasis) -> bool {
    local_center(&lb.elements).is_none()
}

/// A central combination of consecutive elements, if any, as coefficients.
pub fn local_center(elements: &[PauliOp]) -> Option<BitVec> {
    let k = elements.len();
    if k == 0 {
        return None;
    }
    let g = gram(elements);
    let w = k.div_ceil(2).max(1);
    for start in 0..=k - w {
        // Rows of the window's sub-Gram matrix; find c with c · G_window = 0.
        let sub = F2Matrix::from_rows(k, g.rows()[start..start + w].to_vec()).expect("square gram");
        if let Some(c) = sub.left_kernel().rows().first() {
            let mut full = BitVec::zeros(k);
            for i in c.ones() {
                full.set(start + i, true);
            }
            return Some(full);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{Lattice, Pauli};

    fn chain(n: usize) -> Arc<Lattice> {
        Arc::new(Lattice::chain(n, 1, false))
    }

    fn group(l: &Arc<Lattice>, gens: &[&str]) -> StabilizerGroup {
        StabilizerGroup::new(l.clone(), gens.iter().map(|s| l.parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn membership() {
        let l = chain(4);
        let g = group(&l, &["Z(1) Z(2)", "Z(2) Z(3)"]);
        assert!(g.contains(&l.parse("Z(1) Z(3)").unwrap()));
        let h = group(&l, &["Z(1) Z(2)"]);
        assert!(!h.contains(&l.parse("X(1)").unwrap()));
    }

    #[test]
    fn rejects_anticommuting_generators() {
        let l = chain(2);
        let r = StabilizerGroup::new(l.clone(), vec![l.parse("X(0)").unwrap(), l.parse("Z(0)").unwrap()]);
        assert!(matches!(r, Err(Error::NonAbelian(_))));
    }

    #[test]
    fn intersections() {
        let l = chain(2);
        let a = group(&l, &["X(1)"]);
        let b = group(&l, &["Z(0) Z(1)"]);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        let g = group(&l, &["Z(0) Z(1)", "X(0) X(1)"]);
        assert!(g.intersect(&g).unwrap() == g);
    }

    #[test]
    fn vacuum_has_no_logicals() {
        let l = chain(6);
        let g = StabilizerGroup::new(l.clone(), (0..6).map(|q| PauliOp::single(q, Pauli::Z)).collect()).unwrap();
        let r = Region::new(6, [2, 3]);
        let lb = g.centralizer_in_region(&r);
        assert!(lb.is_empty());
        assert_eq!(lb.modulo.dim(), 2);
    }

    #[test]
    fn rank_nullity_of_constraints() {
        let l = chain(8);
        let g = group(&l, &["Z(0) Z(1)", "Z(1) Z(2)", "X(3) X(4)", "Z(3) Z(4)", "X(5)", "Z(6) Z(7)"]);
        let r = Region::new(8, [1, 2, 3]);
        let lb = g.centralizer_in_region(&r);
        for e in &lb.elements {
            assert!(g.commutes_with(e));
            assert!(r.contains_op(e));
        }
        // Kernel: 6 - rank(constraints). Constraints from ZZ(0,1), ZZ(1,2), XX(3,4), ZZ(3,4): rank 4.
        // Modulo Z1Z2 the classes are Z1 and nothing on qubit 3: one element.
        assert_eq!(lb.len(), 1);
        assert!(lb.elements[0] == PauliOp::single(1, Pauli::Z) || lb.elements[0] == PauliOp::single(2, Pauli::Z));
    }

    #[test]
    fn centerless_examples() {
        let l = chain(6);
        let maj: Vec<PauliOp> = (0..5).map(|j| l.parse(&format!("X({j}) Z({})", j + 1)).unwrap()).collect();
        assert!(local_center(&maj).is_none());
        // Brute force: no nonzero subset of any 3 consecutive elements is central.
        for mask in 1u32..8 {
            for start in 0..3 {
                let mut p = PauliOp::identity();
                for i in 0..3 {
                    if mask >> i & 1 == 1 {
                        p = p.multiply(&maj[start + i]);
                    }
                }
                assert!(maj.iter().any(|m| m.anticommutes(&p)));
            }
        }
        let ising = vec![l.parse("Z(0)").unwrap()];
        assert!(local_center(&ising).is_some());
        assert!(local_center(&[]).is_none());
    }

    #[test]
    fn file_round_trip() {
        let text = r#"{"lattice":{"kind":"chain","sites":4},"generators":["Z(0) Z(1)","Z(1) Z(2)"],"locality_radius":1}"#;
        let g = StabilizerGroup::from_file_json(text).unwrap();
        assert_eq!(g.dim(), 2);
        let bad = r#"{"lattice":{"kind":"chain","sites":4},"generators":["Z(0) Z(3)"],"locality_radius":1}"#;
        assert!(matches!(StabilizerGroup::from_file_json(bad), Err(Error::Locality(_))));
    }
}
