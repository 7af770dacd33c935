// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Automorphisms of a 1D logical algebra and their flow index.
//!
//! A [`Frame`] fixes a base stabilizer group, a 1D interface and an ordered
//! basis of logical classes on it. An [`MqcaMap`] is a GF(2) matrix on that
//! basis (row `i` holds the coordinates of the image of element `i`). The
//! index is computed from a finite-interval version of the flow formula,
//! with positive values meaning flow toward increasing coordinate.

use std::sync::Arc;

use serde::Serialize;

use crate::models::IsgSequence;
use crate::f2::{BitVec, Echelon, F2Matrix, Subspace};
use crate::pauli::{Half, Lattice, PauliOp, Region};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

/// A set of qubits with a 1D coordinate (doubled units) per lattice qubit.
#[derive(Clone, Debug)]
pub struct Interface {
    pub region: Region,
    coords: Arc<Vec<Half>>,
    pub period: Option<Half>,
}

impl Interface {
    /// Coordinate taken from one lattice axis, periodic if the axis is.
    pub fn along_axis(lattice: &Lattice, region: Region, axis: usize) -> Self {
        let coords = (0..lattice.num_qubits() as u32).map(|q| lattice.coord(q)[axis]).collect();
        let period = lattice.periods()[axis].map(|p| p.period);
        Interface { region, coords: Arc::new(coords), period }
    }

    pub fn with_coords(region: Region, coords: Vec<Half>, period: Option<Half>) -> Result<Self> {
        if coords.len() != region.num_lattice_qubits() {
            return Err(Error::Dimension { expected: region.num_lattice_qubits(), got: coords.len() });
        }
        if period.is_some_and(|p| p <= 0) {
            return Err(Error::Invalid("period must be positive".into()));
        }
        Ok(Interface { region, coords: Arc::new(coords), period })
    }

    pub fn coord(&self, q: u32) -> Half {
        self.coords[q as usize]
    }

    pub fn coords(&self) -> &[Half] {
        &self.coords
    }

    /// Smallest and largest interface coordinate.
    pub fn extent(&self) -> (Half, Half) {
        let cs = self.region.qubits().iter().map(|&q| self.coord(q));
        let lo = cs.clone().min().unwrap_or(0);
        let hi = cs.max().unwrap_or(0);
        (lo, hi)
    }

    /// Shortest covering arc `(start, length)` of the coordinates of `qubits`.
    pub fn arc(&self, qubits: impl IntoIterator<Item = u32>) -> Option<(Half, Half)> {
        let mut cs: Vec<Half> = qubits.into_iter().map(|q| self.coord(q)).collect();
        if cs.is_empty() {
            return None;
        }
        match self.period {
            None => {
                let lo = *cs.iter().min().unwrap();
                let hi = *cs.iter().max().unwrap();
                Some((lo, hi - lo))
            }
            Some(p) => {
                for c in cs.iter_mut() {
                    *c = c.rem_euclid(p);
                }
                cs.sort_unstable();
                cs.dedup();
                // The arc starts right after the largest circular gap.
                let mut best = (cs[0] + p - cs[cs.len() - 1], 0);
                for i in 1..cs.len() {
                    let gap = cs[i] - cs[i - 1];
                    if gap > best.0 {
                        best = (gap, i);
                    }
                }
                let start = cs[best.1];
                Some((start, p - best.0))
            }
        }
    }

    /// Distance from coordinate `c` to the arc `(start, len)`.
    pub fn distance_to_arc(&self, c: Half, arc: (Half, Half)) -> Half {
        let (start, len) = arc;
        match self.period {
            None => {
                if c < start {
                    start - c
                } else {
                    (c - start - len).max(0)
                }
            }
            Some(p) => {
                let d = (c - start).rem_euclid(p);
                if d <= len {
                    0
                } else {
                    (d - len).min(p - d)
                }
            }
        }
    }

    /// Whether `c` lies in `[p, q)` (with `q - p` measured forward on a
    /// periodic coordinate). Half-open intervals partition the interface.
    pub fn in_interval(&self, c: Half, p: Half, q: Half) -> bool {
        match self.period {
            None => p <= c && c < q,
            Some(per) => (c - p).rem_euclid(per) < q - p,
        }
    }

    /// Interface qubits with coordinate in `[p, q)`.
    pub fn interval(&self, p: Half, q: Half) -> Region {
        let qs = self.region.qubits().iter().copied().filter(|&x| self.in_interval(self.coord(x), p, q));
        Region::new(self.region.num_lattice_qubits(), qs)
    }
}

/// Reduces Paulis modulo a stabilizer group and expresses the remainder in
/// a basis of logical classes.
#[derive(Clone, Debug)]
struct Expressor {
    basis: Echelon,
}

impl Expressor {
    fn new(stabilizers: &StabilizerGroup, elements: &[PauliOp]) -> Result<Self> {
        let n = stabilizers.num_qubits();
        let mut basis = Echelon::with_tags(2 * n, elements.len());
        for (i, e) in elements.iter().enumerate() {
            let v = stabilizers.echelon().reduce(&e.to_symplectic(n));
            if basis.insert_tagged(v, BitVec::unit(elements.len(), i)).is_none() {
                return Err(Error::BasisMismatch(format!("element {i} is dependent modulo the stabilizers")));
            }
        }
        Ok(Expressor { basis })
    }

    /// `(remainder, coordinates)`: the remainder is zero iff `p` lies in the
    /// span of the basis and the stabilizers.
    fn reduce(&self, stabilizers: &StabilizerGroup, p: &PauliOp) -> (BitVec, BitVec) {
        let v = stabilizers.echelon().reduce(&p.to_symplectic(stabilizers.num_qubits()));
        self.basis.reduce_tagged(&v)
    }
}

/// Base group, interface and ordered basis of logical classes.
#[derive(Clone, Debug)]
pub struct Frame {
    stabilizers: StabilizerGroup,
    interface: Interface,
    elements: Vec<PauliOp>,
    arcs: Vec<(Half, Half)>,
    expressor: Expressor,
}

impl Frame {
    /// Elements are sorted by the start of their covering arc.
    pub fn new(stabilizers: StabilizerGroup, interface: Interface, mut elements: Vec<PauliOp>) -> Result<Self> {
        if interface.region.num_lattice_qubits() != stabilizers.num_qubits() {
            return Err(Error::Dimension { expected: stabilizers.num_qubits(), got: interface.region.num_lattice_qubits() });
        }
        for e in &elements {
            if e.is_identity() {
                return Err(Error::BasisMismatch("identity element".into()));
            }
            if !stabilizers.commutes_with(e) {
                return Err(Error::NotLogical(stabilizers.lattice().format(e)));
            }
        }
        let key = |e: &PauliOp| {
            let (s, l) = interface.arc(e.support()).unwrap();
            (s, l, e.support())
        };
        elements.sort_by_cached_key(key);
        let arcs = elements.iter().map(|e| interface.arc(e.support()).unwrap()).collect();
        let expressor = Expressor::new(&stabilizers, &elements)?;
        Ok(Frame { stabilizers, interface, elements, arcs, expressor })
    }

    /// Basis found by sweeping windows of width `window` along the interface
    /// and keeping the window logicals that are new modulo the stabilizers
    /// and the elements already kept.
    pub fn sweep(stabilizers: StabilizerGroup, interface: Interface, window: Half) -> Result<Self> {
        let n = stabilizers.num_qubits();
        let (lo, hi) = interface.extent();
        let starts: Vec<Half> = match interface.period {
            Some(p) => (lo..lo + p).collect(),
            None => (lo..=(hi - window).max(lo)).collect(),
        };
        let mut acc = stabilizers.echelon().clone();
        let mut elements = Vec::new();
        for s in starts {
            let w = interface.interval(s - 1, s + window + 1);
            if w.is_empty() {
                continue;
            }
            for e in stabilizers.centralizer_in_region(&w).elements {
                if acc.insert(e.to_symplectic(n)).is_some() {
                    elements.push(e);
                }
            }
        }
        Frame::new(stabilizers, interface, elements)
    }

    pub fn stabilizers(&self) -> &StabilizerGroup {
        &self.stabilizers
    }

    pub fn interface(&self) -> &Interface {
        &self.interface
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.stabilizers.lattice()
    }

    pub fn elements(&self) -> &[PauliOp] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Covering arc `(start, length)` of element `i`.
    pub fn arc(&self, i: usize) -> (Half, Half) {
        self.arcs[i]
    }

    /// Coordinates of `p` in the basis, or `None` if `p` is not in the span
    /// of the basis and the stabilizers.
    pub fn express(&self, p: &PauliOp) -> Option<BitVec> {
        let (rem, tag) = self.expressor.reduce(&self.stabilizers, p);
        rem.is_zero().then_some(tag)
    }

    /// Representative operator for basis coordinates `x`.
    pub fn operator(&self, x: &BitVec) -> PauliOp {
        let mut p = PauliOp::identity();
        for i in x.ones() {
            p.mul_assign(&self.elements[i]);
        }
        p
    }

    /// Largest diameter of a basis element along the interface.
    pub fn max_element_span(&self) -> Half {
        self.arcs.iter().map(|a| a.1).max().unwrap_or(0)
    }

    /// The subspace of basis coordinates whose classes have a representative
    /// supported on interface qubits in `[p, q)`.
    pub fn interval_space(&self, p: Half, q: Half) -> Subspace {
        let k = self.len();
        let r = self.interface.interval(p, q);
        if r.is_empty() {
            return Subspace::zero(k);
        }
        let lb = self.stabilizers.centralizer_in_region(&r);
        let n2 = 2 * self.stabilizers.num_qubits();
        let mut rems = F2Matrix::new(n2);
        let mut tags = Vec::new();
        for e in &lb.elements {
            let (rem, tag) = self.expressor.reduce(&self.stabilizers, e);
            rems.push_row(rem);
            tags.push(tag);
        }
        let combos = rems.left_kernel();
        let tags = F2Matrix::from_rows(k, tags).expect("tags have basis width");
        let rows = combos.rows().iter().map(|c| tags.combine(c));
        Subspace::span(k, rows).expect("rows have basis width")
    }

    fn same_basis(&self, other: &Frame) -> bool {
        self.elements == other.elements
            && self.stabilizers.same_span(&other.stabilizers)
            && self.interface.region == other.interface.region
            && self.interface.coords == other.interface.coords
            && self.interface.period == other.interface.period
    }
}

/// A logical automorphism in a frame.
#[derive(Clone, Debug)]
pub struct MqcaMap {
    frame: Arc<Frame>,
    matrix: F2Matrix,
    defined: Vec<bool>,
    images: Vec<Option<PauliOp>>,
    range: Half,
}

impl MqcaMap {
    /// Map from explicit images; `None` marks elements whose image leaves
    /// the window (allowed only on open interfaces).
    pub fn from_images(frame: Arc<Frame>, images: Vec<Option<PauliOp>>) -> Result<Self> {
        let k = frame.len();
        if images.len() != k {
            return Err(Error::Dimension { expected: k, got: images.len() });
        }
        let mut matrix = F2Matrix::zeros(k, k);
        let mut defined = vec![false; k];
        let mut range = 0;
        let mut kept = Vec::with_capacity(k);
        for (i, img) in images.into_iter().enumerate() {
            let Some(img) = img else {
                kept.push(None);
                continue;
            };
            match frame.express(&img) {
                Some(x) => {
                    for j in x.ones() {
                        matrix.set(i, j, true);
                    }
                    defined[i] = true;
                    let arc = frame.arc(i);
                    for q in img.support() {
                        range = range.max(frame.interface.distance_to_arc(frame.interface.coord(q), arc));
                    }
                    kept.push(Some(img));
                }
                None if frame.interface.period.is_none() => kept.push(None),
                None => {
                    return Err(Error::Margin(format!(
                        "image of element {i} is not in the span of the interface logicals: {}",
                        frame.lattice().format(&img)
                    )))
                }
            }
        }
        let m = MqcaMap { frame, matrix, defined, images: kept, range };
        m.check_invertible()?;
        Ok(m)
    }

    /// Map from a matrix; images are the basis representatives.
    pub fn from_matrix(frame: Arc<Frame>, matrix: F2Matrix, defined: Vec<bool>) -> Result<Self> {
        let k = frame.len();
        if matrix.nrows() != k || matrix.ncols() != k {
            return Err(Error::Dimension { expected: k, got: matrix.nrows() });
        }
        if defined.len() != k {
            return Err(Error::Dimension { expected: k, got: defined.len() });
        }
        let images: Vec<Option<PauliOp>> =
            (0..k).map(|i| defined[i].then(|| frame.operator(matrix.row(i)))).collect();
        let mut range = 0;
        for (i, img) in images.iter().enumerate() {
            if let Some(img) = img {
                let arc = frame.arc(i);
                for q in img.support() {
                    range = range.max(frame.interface.distance_to_arc(frame.interface.coord(q), arc));
                }
            }
        }
        let m = MqcaMap { frame, matrix, defined, images, range };
        m.check_invertible()?;
        Ok(m)
    }

    pub fn identity(frame: Arc<Frame>) -> Self {
        let k = frame.len();
        MqcaMap::from_matrix(frame, F2Matrix::identity(k), vec![true; k]).expect("identity is invertible")
    }

    /// Restriction to fully defined maps is invertible; partial maps must
    /// be injective on their defined rows.
    fn check_invertible(&self) -> Result<()> {
        let rows: Vec<BitVec> = (0..self.len()).filter(|&i| self.defined[i]).map(|i| self.matrix.row(i).clone()).collect();
        let want = rows.len();
        let got = F2Matrix::from_rows(self.len(), rows)?.rank();
        if got != want {
            return Err(Error::Singular);
        }
        Ok(())
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn basis(&self) -> &[PauliOp] {
        self.frame.elements()
    }

    pub fn len(&self) -> usize {
        self.frame.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frame.is_empty()
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.matrix
    }

    pub fn is_defined(&self, i: usize) -> bool {
        self.defined[i]
    }

    pub fn is_total(&self) -> bool {
        self.defined.iter().all(|&d| d)
    }

    /// Image operator of element `i` as produced when the map was built.
    pub fn image(&self, i: usize) -> Option<&PauliOp> {
        self.images[i].as_ref()
    }

    /// Largest displacement between an element and its image.
    pub fn range(&self) -> Half {
        self.range
    }

    /// Image of coordinates `x`, or `None` if some used row is undefined.
    pub fn apply(&self, x: &BitVec) -> Option<BitVec> {
        if x.ones().any(|i| !self.defined[i]) {
            return None;
        }
        Some(self.matrix.combine(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_total() && self.matrix == F2Matrix::identity(self.len())
    }

    /// Inverse map (total maps only).
    pub fn inverse(&self) -> Result<MqcaMap> {
        if !self.is_total() {
            return Err(Error::Invalid("inverse of a partial map".into()));
        }
        let inv = self.matrix.inverse()?;
        MqcaMap::from_matrix(self.frame.clone(), inv, vec![true; self.len()])
    }
}

/// Options for [`period_map`].
#[derive(Clone, Copy, Debug, Default)]
pub struct MapOptions {
    /// Sweep window for logical extraction (doubled units).
    pub window: Option<Half>,
}

/// The automorphism induced by one period of `seq` on the logicals of its
/// base group supported on `interface` (the sequence's own interface if
/// `None`).
pub fn period_map(seq: &IsgSequence, interface: Option<&Interface>, opts: &MapOptions) -> Result<MqcaMap> {
    if !seq.is_periodic() {
        return Err(Error::Invalid(format!("{} is not periodic", seq.name())));
    }
    let iface = interface
        .or(seq.interface())
        .ok_or_else(|| Error::Invalid(format!("{} has no interface", seq.name())))?
        .clone();
    let base = seq.steps()[0].clone();
    let frame = match (interface, seq.boundary_basis()) {
        (None, Some(basis)) => Frame::new(base, iface, basis.to_vec())?,
        _ => Frame::sweep(base, iface, opts.window.unwrap_or_else(|| seq.default_window()))?,
    };
    let images = frame.elements().iter().map(|e| seq.evolve(e).map(Some)).collect::<Result<Vec<_>>>()?;
    MqcaMap::from_images(Arc::new(frame), images)
}

/// `m1` followed by `m2`.
pub fn compose(m1: &MqcaMap, m2: &MqcaMap) -> Result<MqcaMap> {
    if !Arc::ptr_eq(&m1.frame, &m2.frame) && !m1.frame.same_basis(&m2.frame) {
        return Err(Error::BasisMismatch("compose needs identical bases".into()));
    }
    let k = m1.len();
    let mut matrix = F2Matrix::zeros(k, k);
    let mut defined = vec![false; k];
    for i in 0..k {
        if !m1.defined[i] {
            continue;
        }
        if let Some(y) = m2.apply(m1.matrix.row(i)) {
            for j in y.ones() {
                matrix.set(i, j, true);
            }
            defined[i] = true;
        }
    }
    MqcaMap::from_matrix(m1.frame.clone(), matrix, defined)
}

/// Tensor product of maps on disjoint layers sharing the 1D coordinate.
pub fn tensor(m1: &MqcaMap, m2: &MqcaMap) -> Result<MqcaMap> {
    let (f1, f2) = (&m1.frame, &m2.frame);
    if f1.interface.period != f2.interface.period {
        return Err(Error::Invalid("tensor factors must share periodicity".into()));
    }
    let (l1, l2) = (f1.lattice().as_ref(), f2.lattice().as_ref());
    let lat = Arc::new(Lattice::layered(&[l1, l2])?);
    let n = lat.num_qubits();
    let emb1 = |p: &PauliOp| lat.embed_layer(l1, 0, p);
    let emb2 = |p: &PauliOp| lat.embed_layer(l2, 1, p);
    let gens: Vec<PauliOp> = f1
        .stabilizers
        .generators()
        .iter()
        .map(emb1)
        .chain(f2.stabilizers.generators().iter().map(emb2))
        .collect();
    let stab = StabilizerGroup::new_unchecked(lat.clone(), gens)?;
    let mut coords = vec![0; n];
    let mut region = Vec::new();
    for q in 0..l1.num_qubits() as u32 {
        let g = lat.layer_qubit(l1, 0, q);
        coords[g as usize] = f1.interface.coord(q);
    }
    for q in 0..l2.num_qubits() as u32 {
        let g = lat.layer_qubit(l2, 1, q);
        coords[g as usize] = f2.interface.coord(q);
    }
    region.extend(f1.interface.region.qubits().iter().map(|&q| lat.layer_qubit(l1, 0, q)));
    region.extend(f2.interface.region.qubits().iter().map(|&q| lat.layer_qubit(l2, 1, q)));
    let interface = Interface::with_coords(Region::new(n, region), coords, f1.interface.period)?;
    let elements: Vec<PauliOp> = f1.elements.iter().map(emb1).chain(f2.elements.iter().map(emb2)).collect();
    let frame = Arc::new(Frame::new(stab, interface, elements.clone())?);
    let k = frame.len();
    // Position of each old element in the new sorted basis.
    let pos: Vec<usize> = elements.iter().map(|e| frame.elements.iter().position(|f| f == e).unwrap()).collect();
    let (k1, k2) = (f1.len(), f2.len());
    let mut images = vec![None; k];
    for i in 0..k1 {
        images[pos[i]] = m1.images[i].as_ref().map(emb1);
    }
    for i in 0..k2 {
        images[pos[k1 + i]] = m2.images[i].as_ref().map(emb2);
    }
    MqcaMap::from_images(frame, images)
}

/// `u m u^{-1}` for an invertible basis change `u` (row convention: the
/// result sends `x` to `x U^{-1} M U`).
pub fn conjugate(m: &MqcaMap, u: &F2Matrix) -> Result<MqcaMap> {
    let k = m.len();
    if u.nrows() != k || u.ncols() != k {
        return Err(Error::Dimension { expected: k, got: u.nrows() });
    }
    if !m.is_total() {
        return Err(Error::Invalid("conjugation of a partial map".into()));
    }
    let uinv = u.inverse()?;
    let matrix = uinv.mul(&m.matrix)?.mul(u)?;
    MqcaMap::from_matrix(m.frame.clone(), matrix, vec![true; k])
}

/// Parity bit of a doubled index: 1 iff the index is a half-odd-integer.
pub fn z2_invariant(index_times_two: i64) -> u8 {
    (index_times_two.rem_euclid(2)) as u8
}

/// Exact rendering of a doubled value, e.g. `-1/2` or `1`.
pub fn fmt_index(index_times_two: i64) -> String {
    if index_times_two % 2 == 0 {
        (index_times_two / 2).to_string()
    } else {
        format!("{index_times_two}/2")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    pub index_times_two: i64,
    /// Exact fraction, e.g. `-1/2`.
    pub index: String,
    /// Cuts (doubled units; serialized in lattice units).
    #[serde(serialize_with = "crate::pauli::ser_half")]
    pub cut_a: Half,
    #[serde(serialize_with = "crate::pauli::ser_half")]
    pub cut_b: Half,
    pub dims: [usize; 2],
    pub margins_ok: bool,
    /// The cuts are at least [`safe_separation`] apart.
    pub separated: bool,
    pub z2: u8,
}

/// Options for [`mqca_index`]. Lengths are in doubled units.
#[derive(Clone, Copy, Debug, Default)]
pub struct IndexOptions {
    /// Extra clearance required around the zone used by the computation.
    pub margin: Half,
    /// Overrides the look-around distance `r'`.
    pub reach: Option<Half>,
}

/// Look-around distance used for the flow formula.
pub fn default_reach(m: &MqcaMap) -> Half {
    let r = m.range + m.frame.max_element_span() + 2;
    r + r % 2
}

/// Flow index at cuts `b < a` (doubled units):
/// `dim{x in F[b-r', a) : xM in F[b, a+r')} - dim F[b, a)`, halved.
pub fn mqca_index(m: &MqcaMap, a: Half, b: Half, opts: &IndexOptions) -> Result<IndexResult> {
    if b >= a {
        return Err(Error::Invalid("cuts must satisfy b < a".into()));
    }
    let reach = opts.reach.unwrap_or_else(|| default_reach(m));
    let iface = &m.frame.interface;
    let zone = (b - reach, a + reach);
    // On a ring the gap outside the zone must be at least one reach wide,
    // or relations wrapping around the ring leak into the zone.
    let fits = |lo: Half, hi: Half| match iface.period {
        Some(p) => hi - lo + reach <= p,
        None => {
            let (elo, ehi) = iface.extent();
            lo >= elo && hi <= ehi
        }
    };
    if !fits(zone.0, zone.1) {
        return Err(Error::Margin(format!(
            "cuts ({}, {}) with reach {} do not fit the interface",
            crate::pauli::fmt_half(b),
            crate::pauli::fmt_half(a),
            crate::pauli::fmt_half(reach)
        )));
    }
    let margins_ok = fits(zone.0 - opts.margin, zone.1 + opts.margin);
    let w1 = m.frame.interval_space(b - reach, a);
    let w2 = m.frame.interval_space(b, a + reach);
    let w3 = m.frame.interval_space(b, a);
    let k = m.len();
    let mut target = Echelon::new(k);
    for r in w2.basis().rows() {
        target.insert(r.clone());
    }
    let mut images = F2Matrix::new(k);
    for x in w1.basis().rows() {
        let y = m.apply(x).ok_or_else(|| Error::Margin("flow zone uses undefined images".into()))?;
        images.push_row(target.reduce(&y));
    }
    let dim1 = w1.dim() - images.rank();
    let dim2 = w3.dim();
    let index_times_two = dim1 as i64 - dim2 as i64;
    Ok(IndexResult {
        index_times_two,
        index: fmt_index(index_times_two),
        cut_a: a,
        cut_b: b,
        dims: [dim1, dim2],
        margins_ok,
        separated: a - b >= safe_separation(m),
        z2: z2_invariant(index_times_two),
    })
}

/// Cut separation from which the flow formula no longer depends on where
/// the cuts sit: the map range plus the longest basis element. Closer cuts
/// are accepted and are exact for some maps, but can shift with position.
pub fn safe_separation(m: &MqcaMap) -> Half {
    let gap = (m.range + m.frame.max_element_span()).max(4);
    gap + gap % 2
}

/// Centered default cuts `(a, b)` on lattice points (even doubled values).
pub fn default_cuts(m: &MqcaMap) -> (Half, Half) {
    let iface = &m.frame.interface;
    let (lo, hi) = iface.extent();
    let gap = safe_separation(m);
    let mid = match iface.period {
        Some(p) => lo + p / 2,
        None => (lo + hi) / 2,
    };
    let b = mid - gap / 2;
    let b = b - b.rem_euclid(2);
    (b + gap, b)
}

/// Index at the default cuts.
pub fn index(m: &MqcaMap, opts: &IndexOptions) -> Result<IndexResult> {
    let (a, b) = default_cuts(m);
    mqca_index(m, a, b, opts)
}
