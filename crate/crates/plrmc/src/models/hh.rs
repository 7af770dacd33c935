// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Honeycomb Floquet code on a brick-wall honeycomb.
//!
//! Vertex `(c, r)` sits at `[2c, -2r]`; row 0 is the top zigzag edge and its
//! vertices carry the labels `c = 6x + k`. A brick in band `(r-1, r)` starts
//! at a column `c0 = r (mod 2)` and is coloured by its centre `c0 + 1`:
//! `0 -> R`, `1 -> B`, `2 -> G` (mod 3). Each edge takes the colour that
//! neither adjacent brick has.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::IsgSequence;
use crate::mqca::Interface;
use crate::pauli::{Half, Lattice, Pauli, PauliOp};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Colour {
    R,
    G,
    B,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::R, Colour::G, Colour::B];

    /// Colour of a brick centred at column `c`.
    pub fn of_centre(c: i64) -> Colour {
        match c.rem_euclid(3) {
            0 => Colour::R,
            1 => Colour::B,
            _ => Colour::G,
        }
    }

    pub fn pauli(self) -> Pauli {
        match self {
            Colour::R => Pauli::X,
            Colour::G => Pauli::Y,
            Colour::B => Pauli::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Colour::R => 'R',
            Colour::G => 'G',
            Colour::B => 'B',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HhBoundary {
    Bulk,
    #[serde(rename = "zigzag_I")]
    ZigzagI,
    #[serde(rename = "zigzag_II")]
    ZigzagII,
    #[serde(rename = "zigzag_III_sequence")]
    ZigzagIIISequence,
}

impl HhBoundary {
    pub const ALL: [HhBoundary; 4] =
        [HhBoundary::Bulk, HhBoundary::ZigzagI, HhBoundary::ZigzagII, HhBoundary::ZigzagIIISequence];

    pub fn name(self) -> &'static str {
        match self {
            HhBoundary::Bulk => "bulk",
            HhBoundary::ZigzagI => "zigzag_I",
            HhBoundary::ZigzagII => "zigzag_II",
            HhBoundary::ZigzagIIISequence => "zigzag_III_sequence",
        }
    }

    pub fn parse(s: &str) -> Option<HhBoundary> {
        HhBoundary::ALL.into_iter().find(|b| b.name() == s)
    }
}

/// Which top-edge family joins `E_c` and the plaquettes in a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopEdge {
    /// Single-site truncations of the cut edges (`B_1`).
    Singles,
    /// Only the edges of the top row (`B_2`).
    Bare,
    /// Three-body terms (`B_3`).
    Triples,
}

/// Brick-wall honeycomb window, periodic along rows.
#[derive(Clone, Debug)]
pub struct Honeycomb {
    lattice: Arc<Lattice>,
    width: i64,
    height: i64,
    torus: bool,
}

impl Honeycomb {
    /// `width` columns (a multiple of 6) and `height` rows; `torus` also
    /// wraps rows (then `height` must be even).
    pub fn new(width: usize, height: usize, torus: bool) -> Result<Self> {
        if width % 6 != 0 || width < 12 {
            return Err(Error::Window(format!("honeycomb width {width} is not a multiple of 6 that is at least 12")));
        }
        if height < 4 || (torus && height % 2 != 0) {
            return Err(Error::Window(format!("honeycomb height {height} is too small or not even on a torus")));
        }
        let lattice = if torus { Lattice::honeycomb_torus(width, height) } else { Lattice::honeycomb(width, height, true) };
        Ok(Honeycomb { lattice: Arc::new(lattice), width: width as i64, height: height as i64, torus })
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn qubit(&self, c: i64, r: i64) -> u32 {
        self.lattice.qubit_at(&[2 * c, -2 * r], 0).expect("vertex inside the window")
    }

    /// Pauli on top-row vertices by label.
    pub fn top(&self, factors: &[(i64, Pauli)]) -> PauliOp {
        PauliOp::from_pairs(factors.iter().map(|&(c, p)| (self.qubit(c, 0), p)))
    }

    fn bands(&self) -> std::ops::Range<i64> {
        if self.torus {
            0..self.height
        } else {
            1..self.height
        }
    }

    /// Edges of colour `col` as vertex pairs `((c, r), (c', r'))`.
    pub fn edges(&self, col: Colour) -> Vec<((i64, i64), (i64, i64))> {
        let mut out = Vec::new();
        for r in 0..self.height {
            for c in 0..self.width {
                if Colour::of_centre(c + 2) == col {
                    out.push(((c, r), (c + 1, r)));
                }
            }
        }
        for r in self.bands() {
            for c in 0..self.width {
                if (c - r).rem_euclid(2) == 0 && Colour::of_centre(c) == col {
                    out.push(((c, r - 1), (c, r)));
                }
            }
        }
        out
    }

    /// Vertices of every full brick of colour `col`.
    pub fn plaquettes(&self, col: Colour) -> Vec<Vec<(i64, i64)>> {
        let mut out = Vec::new();
        for r in self.bands() {
            for c0 in (0..self.width).filter(|c| (c - r).rem_euclid(2) == 0) {
                if Colour::of_centre(c0 + 1) == col {
                    out.push((0..3).flat_map(|d| [(c0 + d, r - 1), (c0 + d, r)]).collect());
                }
            }
        }
        out
    }

    fn op(&self, vs: &[(i64, i64)], p: Pauli) -> PauliOp {
        PauliOp::uniform(p, vs.iter().map(|&(c, r)| self.qubit(c, r)))
    }

    /// `E_col` with the colour's Pauli.
    pub fn edge_ops(&self, col: Colour) -> Vec<PauliOp> {
        self.edges(col).iter().map(|&(a, b)| self.op(&[a, b], col.pauli())).collect()
    }

    /// `P_R^X`, `P_G^Y`, `P_B^Z`.
    pub fn plaquette_ops(&self) -> Vec<PauliOp> {
        Colour::ALL.iter().flat_map(|&col| self.plaquettes(col).into_iter().map(move |v| (v, col))).map(|(v, col)| self.op(&v, col.pauli())).collect()
    }

    /// Top-edge family `B^col_i` (`i` in 1..=3).
    pub fn top_family(&self, col: Colour, i: u8) -> Vec<PauliOp> {
        let p = col.pauli();
        let cells = 0..self.width / 6;
        match i {
            1 => {
                let k = match col {
                    Colour::R => 0,
                    Colour::G => 2,
                    Colour::B => 4,
                };
                cells.map(|x| self.top(&[(6 * x + k, p)])).collect()
            }
            2 => self
                .edges(col)
                .into_iter()
                .filter(|e| e.0 .1 == 0 && e.1 .1 == 0)
                .map(|(a, b)| self.op(&[a, b], p))
                .collect(),
            _ => {
                let k = match col {
                    Colour::R => 2,
                    Colour::G => 4,
                    Colour::B => 0,
                };
                cells.map(|x| self.top(&[(6 * x + k, p), (6 * x + k + 1, p), (6 * x + k + 2, p)])).collect()
            }
        }
    }

    /// Single-site truncations of the cut edges below the last row.
    pub fn bottom_singles(&self, col: Colour) -> Vec<PauliOp> {
        if self.torus {
            return Vec::new();
        }
        let r = self.height - 1;
        (0..self.width)
            .filter(|&c| (c - r - 1).rem_euclid(2) == 0 && Colour::of_centre(c) == col)
            .map(|c| self.op(&[(c, r)], col.pauli()))
            .collect()
    }

    /// ISG of a step of colour `col`.
    pub fn isg(&self, col: Colour, top: TopEdge) -> Result<StabilizerGroup> {
        let mut gens = self.edge_ops(col);
        gens.extend(self.plaquette_ops());
        if !self.torus {
            match top {
                TopEdge::Singles => gens.extend(self.top_family(col, 1)),
                TopEdge::Bare => {}
                TopEdge::Triples => gens.extend(self.top_family(col, 3)),
            }
            gens.extend(self.bottom_singles(col));
        }
        StabilizerGroup::new(self.lattice.clone(), gens)
    }

    fn interface(&self) -> Interface {
        Interface::along_axis(&self.lattice, self.lattice.region_where(|c| c[1] >= -4), 0)
    }

    /// `L_{2j}, L_{2j+1}` of the singles boundary at an `R` step.
    pub fn zigzag_i_basis(&self) -> Vec<PauliOp> {
        let (x, z) = (Pauli::X, Pauli::Z);
        (0..self.width / 6)
            .flat_map(|j| {
                let c = 6 * j;
                [
                    self.top(&[(c - 2, z), (c - 1, z), (c + 1, z), (c + 2, z)]),
                    self.top(&[(c + 2, x), (c + 3, x), (c + 4, x)]),
                ]
            })
            .collect()
    }

    /// `L_{4j} .. L_{4j+3}` of the bare boundary at an `R` step.
    pub fn zigzag_ii_basis(&self) -> Vec<PauliOp> {
        let (x, y, z) = (Pauli::X, Pauli::Y, Pauli::Z);
        (0..self.width / 6)
            .flat_map(|j| {
                let c = 6 * j;
                [
                    self.top(&[(c, x)]),
                    self.top(&[(c, y), (c + 1, z), (c + 2, z)]),
                    self.top(&[(c + 2, x), (c + 3, x), (c + 4, x)]),
                    self.top(&[(c + 4, y), (c + 5, y), (c + 6, y)]),
                ]
            })
            .collect()
    }
}

/// Conjugate-basis search radius used by every HH builder.
pub const HH_RADIUS: Half = 6;

pub fn build_hh(width: usize, height: usize, boundary: HhBoundary) -> Result<IsgSequence> {
    use Colour::{B, G, R};
    let hc = Honeycomb::new(width, height, boundary == HhBoundary::Bulk)?;
    let cycle = |top: TopEdge| [R, G, B].iter().map(|&c| hc.isg(c, top)).collect::<Result<Vec<_>>>();
    let seq = match boundary {
        HhBoundary::Bulk => IsgSequence::new("hh/bulk", cycle(TopEdge::Bare)?, HH_RADIUS)?,
        HhBoundary::ZigzagI => IsgSequence::new("hh/zigzag_I", cycle(TopEdge::Singles)?, HH_RADIUS)?
            .with_interface(hc.interface())
            .with_boundary_basis(hc.zigzag_i_basis()),
        HhBoundary::ZigzagII => IsgSequence::new("hh/zigzag_II", cycle(TopEdge::Bare)?, HH_RADIUS)?
            .with_interface(hc.interface())
            .with_boundary_basis(hc.zigzag_ii_basis()),
        HhBoundary::ZigzagIIISequence => {
            let (s, t) = (TopEdge::Singles, TopEdge::Triples);
            let steps = [(R, s), (G, s), (B, t), (R, s), (G, t), (B, s)]
                .iter()
                .map(|&(c, e)| hc.isg(c, e))
                .collect::<Result<Vec<_>>>()?;
            IsgSequence::new("hh/zigzag_III_sequence", steps, HH_RADIUS)?
                .with_interface(hc.interface())
                .with_boundary_basis(hc.zigzag_i_basis())
        }
    };
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_vertex_sees_three_colours() {
        let hc = Honeycomb::new(12, 6, true).unwrap();
        let n = hc.lattice().num_qubits();
        let mut seen = vec![Vec::new(); n];
        for col in Colour::ALL {
            for (a, b) in hc.edges(col) {
                seen[hc.qubit(a.0, a.1) as usize].push(col);
                seen[hc.qubit(b.0, b.1) as usize].push(col);
            }
        }
        for s in &mut seen {
            s.sort_by_key(|c| c.letter());
            assert_eq!(s, &[Colour::B, Colour::G, Colour::R]);
        }
    }

    #[test]
    fn top_row_edge_colours_follow_labels() {
        let hc = Honeycomb::new(12, 6, false).unwrap();
        let top: Vec<_> = Colour::ALL
            .iter()
            .flat_map(|&c| hc.edges(c).into_iter().filter(|e| e.0 .1 == 0 && e.1 .1 == 0).map(move |e| (e.0 .0, c)))
            .collect();
        for (c, col) in top {
            let want = [Colour::G, Colour::R, Colour::B][c.rem_euclid(3) as usize];
            assert_eq!(col, want, "edge ({c}, {})", c + 1);
        }
    }

    #[test]
    fn bulk_is_locally_reversible() {
        let seq = build_hh(12, 6, HhBoundary::Bulk).unwrap();
        let v = seq.verify();
        assert!(v.ok, "{:?}", v.failures);
    }

    fn idx(seq: &IsgSequence) -> i64 {
        let m = crate::mqca::period_map(seq, None, &Default::default()).unwrap();
        crate::mqca::index(&m, &Default::default()).unwrap().index_times_two
    }

    fn same_class(seq: &IsgSequence, a: &PauliOp, b: &PauliOp) -> bool {
        seq.steps()[0].contains(&a.multiply(b))
    }

    fn product(ops: &[&PauliOp]) -> PauliOp {
        ops.iter().fold(PauliOp::identity(), |acc, p| acc.multiply(p))
    }

    #[test]
    fn green_step_holds_blue_z_plaquettes() {
        let hc = Honeycomb::new(12, 6, true).unwrap();
        let g = hc.isg(Colour::G, TopEdge::Bare).unwrap();
        let r = hc.isg(Colour::R, TopEdge::Bare).unwrap();
        let pr = hc.plaquettes(Colour::B);
        assert!(!pr.is_empty());
        for v in &pr {
            assert!(g.contains(&hc.op(v, Pauli::Z)));
            // R and G steps share the X and Y products on blue bricks.
            assert!(g.contains(&hc.op(v, Pauli::X)) && r.contains(&hc.op(v, Pauli::Y)));
        }
    }

    #[test]
    fn zigzag_i_shifts_left() {
        let seq = build_hh(36, 8, HhBoundary::ZigzagI).unwrap();
        assert!(seq.verify().ok);
        let basis = seq.boundary_basis().unwrap().to_vec();
        let k = basis.len();
        for j in 0..k {
            let img = seq.evolve(&basis[j]).unwrap();
            assert!(same_class(&seq, &img, &basis[(j + k - 1) % k]), "L_{j}");
        }
        assert_eq!(idx(&seq), -1);
    }

    #[test]
    fn zigzag_ii_grows_strings() {
        let seq = build_hh(36, 8, HhBoundary::ZigzagII).unwrap();
        assert!(seq.verify().ok);
        let hc = Honeycomb::new(36, 8, false).unwrap();
        let (x, y, z) = (Pauli::X, Pauli::Y, Pauli::Z);
        let img = seq.evolve(&hc.top(&[(0, x)])).unwrap();
        let want = hc.top(&[(0, z), (1, z), (2, z)])
            .multiply(&hc.top(&[(2, x), (3, x), (4, x)]))
            .multiply(&hc.top(&[(4, y), (5, y), (6, y)]))
            .multiply(&hc.top(&[(6, x)]));
        assert!(same_class(&seq, &img, &want));
        for st in [
            hc.top(&[(2, x), (3, x), (4, x)]),
            hc.top(&[(-2, y), (-1, y), (0, y)]),
            hc.top(&[(0, z), (1, z), (2, z)]),
        ] {
            assert!(same_class(&seq, &seq.evolve(&st).unwrap(), &st));
        }
        let l = seq.boundary_basis().unwrap();
        let k = l.len();
        let at = |i: usize| &l[i % k];
        for j in (0..k).step_by(4) {
            let i0 = seq.evolve(at(j)).unwrap();
            assert!(same_class(&seq, &i0, &product(&[at(j), at(j + 1), at(j + 2), at(j + 3), at(j + 4)])));
            let i1 = seq.evolve(at(j + 1)).unwrap();
            assert!(same_class(&seq, &i1, &product(&[at(j + 2), at(j + 3), at(j + 4)])));
        }
        assert_eq!(idx(&seq), 1);
    }

    #[test]
    fn zigzag_iii_shifts_right_by_two() {
        let seq = build_hh(60, 8, HhBoundary::ZigzagIIISequence).unwrap();
        assert_eq!(seq.period(), 6);
        assert!(seq.verify().ok);
        let basis = seq.boundary_basis().unwrap().to_vec();
        let k = basis.len();
        for j in 0..k {
            let img = seq.evolve(&basis[j]).unwrap();
            assert!(same_class(&seq, &img, &basis[(j + 2) % k]), "L_{j}");
        }
        assert_eq!(idx(&seq), 2);
    }

    #[test]
    fn same_colour_singles_and_triples_are_not_reversible() {
        let hc = Honeycomb::new(12, 6, false).unwrap();
        for col in Colour::ALL {
            let a = hc.isg(col, TopEdge::Singles).unwrap();
            let b = hc.isg(col, TopEdge::Triples).unwrap();
            let an = crate::rev::analyze_pair(&a, &b).unwrap();
            assert!(!(an.no_enlargement && an.matrix_invertible), "{col:?}");
        }
    }

    #[test]
    fn narrow_width_rejected() {
        assert!(matches!(Honeycomb::new(10, 6, false), Err(Error::Window(_))));
    }
}
