// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Wen plaquette translation on the lattice `Z x (Z/2)`, with its boundaries.
//!
//! Coordinates are doubled: qubit `(x, y)` sits at `[2x, 2y]`, so integer
//! rows have even second coordinate and ancilla rows odd. The bulk circuit
//! moves plaquettes by `y -> y - 1/2` every two steps.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::IsgSequence;
use crate::mqca::Interface;
use crate::pauli::{Half, Lattice, Pauli, PauliOp};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WptBoundary {
    BulkTorus,
    #[serde(rename = "right_R")]
    RightR,
    #[serde(rename = "right_R_reversed")]
    RightRReversed,
    #[serde(rename = "top_T")]
    TopT,
    #[serde(rename = "top_T_prime")]
    TopTPrime,
    #[serde(rename = "bottom_B")]
    BottomB,
    #[serde(rename = "bottom_B_prime")]
    BottomBPrime,
}

impl WptBoundary {
    pub const ALL: [WptBoundary; 7] = [
        WptBoundary::BulkTorus,
        WptBoundary::RightR,
        WptBoundary::RightRReversed,
        WptBoundary::TopT,
        WptBoundary::TopTPrime,
        WptBoundary::BottomB,
        WptBoundary::BottomBPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WptBoundary::BulkTorus => "bulk_torus",
            WptBoundary::RightR => "right_R",
            WptBoundary::RightRReversed => "right_R_reversed",
            WptBoundary::TopT => "top_T",
            WptBoundary::TopTPrime => "top_T_prime",
            WptBoundary::BottomB => "bottom_B",
            WptBoundary::BottomBPrime => "bottom_B_prime",
        }
    }

    pub fn parse(s: &str) -> Option<WptBoundary> {
        WptBoundary::ALL.into_iter().find(|b| b.name() == s)
    }
}

/// A term as `(x, Y, Pauli)` factors with `Y` doubled.
type Term = Vec<(i64, i64, Pauli)>;

use Pauli::{X, Z};

/// Plaquette of phase `t` with base row `y` (doubled, even).
pub(crate) fn plaq(t: usize, x: i64, y: i64) -> Term {
    match t {
        0 => vec![(x, y, Z), (x + 1, y, X), (x, y + 2, X), (x + 1, y + 2, Z)],
        1 => vec![(x, y - 1, Z), (x, y, Z), (x + 1, y, X), (x, y + 2, X), (x + 1, y + 1, Z), (x + 1, y + 2, Z)],
        2 => plaq(0, x, y - 1),
        _ => plaq(1, x, y - 1),
    }
}

/// Single-column term of phase `t` attached to base row `y` (doubled, even).
pub(crate) fn anc(t: usize, x: i64, y: i64) -> Term {
    match t {
        0 => vec![(x, y + 1, Z)],
        1 => vec![(x, y - 1, X), (x, y, X)],
        2 => vec![(x, y, Z)],
        _ => vec![(x, y, X), (x, y + 1, X)],
    }
}

fn to_op(lat: &Lattice, t: &Term) -> Option<PauliOp> {
    let mut pairs = Vec::with_capacity(t.len());
    for &(x, y, p) in t {
        pairs.push((lat.qubit_at(&[2 * x, y], 0)?, p));
    }
    Some(PauliOp::from_pairs(pairs))
}

/// Terms fully inside the window become generators; the rest are dropped.
fn group(lat: &Arc<Lattice>, terms: impl IntoIterator<Item = Term>) -> Result<StabilizerGroup> {
    let mut ops: Vec<PauliOp> = terms.into_iter().filter_map(|t| to_op(lat, &t)).collect();
    ops.sort_by_cached_key(|p| p.support());
    ops.dedup();
    StabilizerGroup::new(lat.clone(), ops)
}

fn evens(lo: i64, hi: i64) -> impl Iterator<Item = i64> + Clone {
    (lo..=hi).filter(|y| y % 2 == 0)
}

fn vacuum(lat: &Lattice, pred: impl Fn(i64, i64) -> bool) -> Vec<Term> {
    lat.sites()
        .iter()
        .filter(|s| pred(s.coord[0] / 2, s.coord[1]))
        .map(|s| vec![(s.coord[0] / 2, s.coord[1], Z)])
        .collect()
}

/// Conjugate-basis search radius used by every WPT builder.
pub const WPT_RADIUS: Half = 6;

/// WPT circuit on `width` columns and `height` integer rows.
pub fn build_wpt(width: usize, height: usize, boundary: WptBoundary) -> Result<IsgSequence> {
    if width < 6 || height < 6 {
        return Err(Error::Window(format!("WPT window {width}x{height} is smaller than 6x6")));
    }
    match boundary {
        WptBoundary::BulkTorus => bulk_torus(width, height),
        WptBoundary::RightR => right(width, height, false),
        WptBoundary::RightRReversed => right(width, height, true),
        WptBoundary::TopT => horizontal(width, height, true, false),
        WptBoundary::TopTPrime => horizontal(width, height, true, true),
        WptBoundary::BottomB => horizontal(width, height, false, false),
        WptBoundary::BottomBPrime => horizontal(width, height, false, true),
    }
}

fn bulk_torus(w: usize, h: usize) -> Result<IsgSequence> {
    let (w, h) = (w as i64, h as i64);
    let lat = Arc::new(Lattice::half_integer_window((0, w - 1), (0, 2 * h - 1), Some(w), Some(2 * h)));
    let steps = (0..4)
        .map(|t| {
            let terms = (0..w).flat_map(|x| evens(0, 2 * h - 1).flat_map(move |y| [plaq(t, x, y), anc(t, x, y)]));
            group(&lat, terms)
        })
        .collect::<Result<Vec<_>>>()?;
    IsgSequence::new("wpt/bulk_torus", steps, WPT_RADIUS)
}

/// Cylinder periodic in `y` with the designated boundary on the right:
/// plaquettes for `x <= -1`, ancilla terms for columns `x <= 0`, vacuum on
/// column 1. The left edge at `x = 2 - width` is a plain truncation.
fn right(w: usize, h: usize, reversed: bool) -> Result<IsgSequence> {
    let (w, h) = (w as i64, h as i64);
    let xlo = 2 - w;
    let lat = Arc::new(Lattice::half_integer_window((xlo, 1), (0, 2 * h - 1), None, Some(2 * h)));
    let rows = || evens(0, 2 * h - 1);
    let r_step = |t: usize| {
        let mut terms: Vec<Term> = Vec::new();
        for y in rows() {
            for x in xlo..=-1 {
                terms.push(plaq(t, x, y));
            }
            for c in xlo..=0 {
                terms.push(anc(t, c, y));
            }
        }
        terms.extend(vacuum(&lat, |x, _| x >= 1));
        group(&lat, terms)
    };
    let mut steps = (0..4).map(r_step).collect::<Result<Vec<_>>>()?;
    let name = if reversed {
        // Steps 4..6: an idle repeat of step 0, then two steps that move the
        // boundary chain through the ancillas on column 1.
        let shared = |extra: &dyn Fn(i64) -> Vec<Term>| {
            let mut terms: Vec<Term> = Vec::new();
            for y in rows() {
                for x in xlo..=-1 {
                    terms.push(plaq(0, x, y));
                }
                for c in xlo..=1 {
                    terms.push(anc(0, c, y));
                }
                terms.extend(extra(y));
            }
            group(&lat, terms)
        };
        let s5 = shared(&|y| vec![vec![(0, y, Z), (0, y + 2, X), (1, y, Z), (1, y + 2, X)]])?;
        let s6 = shared(&|y| vec![vec![(1, y, X)]])?;
        steps.push(steps[0].clone());
        steps.push(s5);
        steps.push(s6);
        "wpt/right_R_reversed"
    } else {
        "wpt/right_R"
    };
    let basis = rows().filter_map(|y| to_op(&lat, &vec![(0, y, Z), (0, y + 2, X)])).collect();
    let iface = Interface::along_axis(&lat, lat.region_where(|c| c[0] >= -4), 1);
    Ok(IsgSequence::new(name, steps, WPT_RADIUS)?.with_interface(iface).with_boundary_basis(basis))
}

/// Top-boundary terms at step `t` of the five-step blend (boundary row 0),
/// for base rows in `lo..=0`. `prime` swaps the step-4 row of `Z` for `X`.
fn top_terms(t: usize, prime: bool, xs: std::ops::Range<i64>, lo: i64, lat: &Lattice) -> Vec<Term> {
    let mut terms: Vec<Term> = Vec::new();
    let (phase, plaq_max, anc_max, vac_min) = match t {
        0 => (0, -2, -2, 1),
        1 => (1, -2, 0, 1),
        2 => (2, -2, 0, 1),
        3 => (3, -2, -2, 0),
        _ if prime => (0, -4, -2, 1),
        _ => (0, -4, -4, -1),
    };
    for x in xs {
        for y in evens(lo, plaq_max) {
            terms.push(plaq(phase, x, y));
        }
        for y in evens(lo, anc_max) {
            terms.push(anc(phase, x, y));
        }
        if t == 4 && prime {
            terms.push(vec![(x, 0, X)]);
        }
    }
    terms.extend(vacuum(lat, |_, y| y >= vac_min));
    terms
}

/// Bottom-boundary terms at step `s` (boundary row `yb`), for base rows in
/// `yb..=hi`. `prime` swaps the step-1 row of `Z` for `X`.
fn bottom_terms(s: usize, prime: bool, xs: std::ops::Range<i64>, yb: i64, hi: i64, lat: &Lattice) -> Vec<Term> {
    let mut terms: Vec<Term> = Vec::new();
    let (phase, plaq_min, anc_min, vac_max) = match s {
        0 => (0, 0, 0, -1),
        1 if prime => (0, 2, 0, -1),
        1 => (0, 2, 2, 1),
        2 => (1, 2, 2, 0),
        3 => (2, 2, 2, 0),
        _ => (3, 2, 0, -1),
    };
    for x in xs {
        for y in evens(yb + plaq_min, hi) {
            terms.push(plaq(phase, x, y));
        }
        for y in evens(yb + anc_min, hi) {
            terms.push(anc(phase, x, y));
        }
        if s == 1 && prime {
            terms.push(vec![(x, yb, X)]);
        }
    }
    terms.extend(vacuum(lat, |_, y| y <= yb + vac_max));
    terms
}

/// Strip periodic in `x`, boundary row 0 at the top and row `yb` at the
/// bottom. Top steps `t` pair with bottom steps `t + 1 (mod 5)` so the bulk
/// phases agree; the designated side uses its primed variant if asked. Each
/// term comes from the top list if its lowest row is at or above `mid`.
fn horizontal(w: usize, h: usize, top: bool, prime: bool) -> Result<IsgSequence> {
    let (w, h) = (w as i64, h as i64);
    let yb = -2 * (h - 3);
    let lat = Arc::new(Lattice::half_integer_window((0, w - 1), (yb - 2, 2), Some(w), None));
    let mid = yb / 2 - (yb / 2).rem_euclid(2);
    let combined = |t: usize, s: usize, tp: bool, bp: bool| {
        let upper = top_terms(t, tp, 0..w, yb - 4, &lat)
            .into_iter()
            .filter(|term| term.iter().map(|f| f.1).min().unwrap() >= mid);
        let lower = bottom_terms(s, bp, 0..w, yb, 4, &lat)
            .into_iter()
            .filter(|term| term.iter().map(|f| f.1).min().unwrap() < mid);
        group(&lat, upper.chain(lower))
    };
    let (steps, name, basis, region) = if top {
        let steps = (0..5).map(|t| combined(t, (t + 1) % 5, prime, false)).collect::<Result<Vec<_>>>()?;
        let basis: Vec<PauliOp> = (0..w).filter_map(|j| to_op(&lat, &vec![(j, 0, Z), (j + 1, 0, X)])).collect();
        let name = if prime { "wpt/top_T_prime" } else { "wpt/top_T" };
        (steps, name, basis, lat.region_where(|c| c[1] >= -4))
    } else {
        let steps = (0..5).map(|s| combined((s + 4) % 5, s, false, prime)).collect::<Result<Vec<_>>>()?;
        let basis: Vec<PauliOp> = (0..w).filter_map(|j| to_op(&lat, &vec![(j, yb, X), (j + 1, yb, Z)])).collect();
        let name = if prime { "wpt/bottom_B_prime" } else { "wpt/bottom_B" };
        (steps, name, basis, lat.region_where(|c| c[1] <= yb + 4))
    };
    let iface = Interface::along_axis(&lat, region, 0);
    Ok(IsgSequence::new(name, steps, WPT_RADIUS)?.with_interface(iface).with_boundary_basis(basis))
}

/// `prod_x Y_{x,y}` on integer row `y` (doubled `2y`) of a bulk torus.
pub fn row_of_y(seq: &IsgSequence, y2: i64) -> PauliOp {
    let lat = seq.lattice();
    let qs = lat.sites().iter().filter(|s| s.coord[1] == y2).map(|s| lat.qubit_at(&s.coord, 0).unwrap());
    PauliOp::uniform(Pauli::Y, qs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plaquettes_translate_every_two_steps() {
        for t in 0..2 {
            let shifted: Term = plaq(t, 3, 4).iter().map(|&(x, y, p)| (x, y - 1, p)).collect();
            assert_eq!(plaq(t + 2, 3, 4), shifted);
        }
    }

    #[test]
    fn bulk_moves_rows_down() {
        let seq = build_wpt(6, 6, WptBoundary::BulkTorus).unwrap();
        assert!(seq.verify().ok, "{:?}", seq.verify().failures);
        let row = row_of_y(&seq, 4);
        let img = seq.evolve(&row).unwrap();
        let want = row_of_y(&seq, 2);
        assert!(seq.steps()[0].contains(&img.multiply(&want)));
    }

    fn shifted_down(seq: &IsgSequence) {
        let basis = seq.boundary_basis().unwrap().to_vec();
        let k = basis.len();
        for j in 0..k {
            let img = seq.evolve(&basis[j]).unwrap();
            let want = &basis[(j + k - 1) % k];
            assert!(seq.steps()[0].contains(&img.multiply(want)), "{} L_{j}", seq.name());
        }
    }

    fn idx(seq: &IsgSequence) -> i64 {
        let m = crate::mqca::period_map(seq, None, &Default::default()).unwrap();
        crate::mqca::index(&m, &Default::default()).unwrap().index_times_two
    }

    #[test]
    fn right_boundary_shifts_chain() {
        let r = build_wpt(8, 12, WptBoundary::RightR).unwrap();
        assert!(r.verify().ok);
        shifted_down(&r);
        assert_eq!(idx(&r), -1);
        let rr = build_wpt(8, 12, WptBoundary::RightRReversed).unwrap();
        assert_eq!(rr.period(), 7);
        assert!(rr.verify().ok);
        assert_eq!(idx(&rr) - idx(&r), 2);
    }

    #[test]
    fn horizontal_boundaries() {
        for (b, want) in [
            (WptBoundary::TopT, -1),
            (WptBoundary::TopTPrime, 1),
            (WptBoundary::BottomB, -1),
            (WptBoundary::BottomBPrime, 1),
        ] {
            let seq = build_wpt(12, 10, b).unwrap();
            assert!(seq.verify().ok, "{}", b.name());
            if want < 0 {
                shifted_down(&seq);
            }
            assert_eq!(idx(&seq), want, "{}", b.name());
        }
    }

    #[test]
    fn small_windows_rejected() {
        assert!(matches!(build_wpt(4, 8, WptBoundary::RightR), Err(Error::Window(_))));
    }
}
