// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Gluing two circuits by adding paired boundary logicals `P (x) Q`, evolved
//! alongside the gates, to every step.

use std::sync::Arc;

use super::hh::{build_hh, HhBoundary};
use super::wpt::{build_wpt, WptBoundary};
use super::IsgSequence;
use crate::mqca::{Frame, Interface};
use crate::pauli::{Half, Lattice, Period, PauliOp, Region};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct GlueSpec {
    pub name: String,
    pub first: IsgSequence,
    pub second: IsgSequence,
    /// Step-0 logicals of each circuit, glued as `P (x) Q`.
    pub pairs: Vec<(PauliOp, PauliOp)>,
    /// Conjugate-basis radius of the glued circuit; defaults to the larger
    /// of the two.
    pub radius: Option<Half>,
}

/// The glued circuit on the layered lattice (first circuit is layer 0).
pub fn glue(spec: &GlueSpec) -> Result<IsgSequence> {
    let (a, b) = (&spec.first, &spec.second);
    if a.period() != b.period() || !a.is_periodic() || !b.is_periodic() {
        return Err(Error::Invalid(format!(
            "period mismatch: {} has {} steps, {} has {}; insert idle steps with a schedule",
            a.name(),
            a.period(),
            b.name(),
            b.period()
        )));
    }
    let lat = Arc::new(Lattice::layered(&[a.lattice(), b.lattice()])?);
    let mut paired: Vec<Vec<PauliOp>> = vec![Vec::new(); a.period()];
    for (p, q) in &spec.pairs {
        let tp = a.trace(p)?;
        let tq = b.trace(q)?;
        for (t, slot) in paired.iter_mut().enumerate() {
            slot.push(lat.embed_layer(a.lattice(), 0, &tp[t]).multiply(&lat.embed_layer(b.lattice(), 1, &tq[t])));
        }
    }
    let steps = (0..a.period())
        .map(|t| {
            let mut gens: Vec<PauliOp> =
                a.steps()[t].generators().iter().map(|g| lat.embed_layer(a.lattice(), 0, g)).collect();
            gens.extend(b.steps()[t].generators().iter().map(|g| lat.embed_layer(b.lattice(), 1, g)));
            gens.extend(paired[t].iter().cloned());
            StabilizerGroup::new(lat.clone(), gens)
        })
        .collect::<Result<Vec<_>>>()?;
    IsgSequence::new(spec.name.clone(), steps, spec.radius.unwrap_or(a.radius().max(b.radius())))
}

/// Region of `layer` in a layered lattice matching `r` on the layer lattice.
pub fn layer_region(lat: &Lattice, src: &Lattice, layer: usize, r: &Region) -> Region {
    Region::new(lat.num_qubits(), r.qubits().iter().map(|&q| lat.layer_qubit(src, layer, q)))
}

/// Two WPT cylinders glued along their left edges.
#[derive(Clone, Debug)]
pub struct GluedStrip {
    /// Glued circuit; its interface is the whole strip.
    pub strip: IsgSequence,
    /// The glued left edges of both layers.
    pub glued_edge: Interface,
    /// The two sheets, re-timed to a common period, each with its right
    /// boundary as interface.
    pub sheets: [IsgSequence; 2],
}

/// Sweep window of the glued strip. Wider windows pick up long
/// representatives whose reach no longer fits short cylinders.
pub const STRIP_WINDOW: Half = 8;

/// Left edge of a WPT cylinder built with `width` columns.
fn wpt_left_region(lat: &Lattice, width: usize) -> Region {
    let xlo = 2 - width as i64;
    lat.region_where(|c| c[0] <= 2 * (xlo + 2))
}

/// Two right-boundary WPT cylinders (`RightR` or `RightRReversed` on the
/// second sheet) glued along their identical left edges.
pub fn double_wpt(width: usize, height: usize, second: WptBoundary) -> Result<GluedStrip> {
    let sheet1 = build_wpt(width, height, WptBoundary::RightR)?;
    let (sheet1, sheet2) = match second {
        WptBoundary::RightR => (sheet1.clone(), sheet1),
        WptBoundary::RightRReversed => {
            (sheet1.with_schedule(&[0, 1, 2, 3, 0, 0, 0])?, build_wpt(width, height, WptBoundary::RightRReversed)?)
        }
        other => return Err(Error::Invalid(format!("double_wpt glues right boundaries, not {}", other.name()))),
    };
    let lat1 = sheet1.lattice().clone();
    let left = Interface::along_axis(&lat1, wpt_left_region(&lat1, width), 1);
    let frame = Frame::sweep(sheet1.steps()[0].clone(), left.clone(), sheet1.default_window())?;
    let pairs = frame.elements().iter().map(|e| (e.clone(), e.clone())).collect();
    let spec = GlueSpec {
        name: format!("wpt/double_{}", second.name()),
        first: sheet1.clone(),
        second: sheet2.clone(),
        pairs,
        radius: None,
    };
    let glued = glue(&spec)?;
    let lat = glued.lattice().clone();
    let edge_region = layer_region(&lat, &lat1, 0, &left.region).union(&layer_region(&lat, &lat1, 1, &left.region));
    let glued_edge = Interface::along_axis(&lat, edge_region, 1);
    let strip = glued.with_interface(Interface::along_axis(&lat, lat.full_region(), 1)).with_window(STRIP_WINDOW);
    Ok(GluedStrip { strip, glued_edge, sheets: [sheet1, sheet2] })
}

/// WPT right boundary and HH zigzag boundary glued pairwise, three HH
/// columns per WPT row.
#[derive(Clone, Debug)]
pub struct Blend {
    pub glued: IsgSequence,
    /// HH top rows and WPT right columns, along the shared chain coordinate.
    pub interface: Interface,
    pub hh: IsgSequence,
    pub wpt: IsgSequence,
}

/// HH window of `hh_width` columns (with an idle `R` step) beside a WPT
/// cylinder of `hh_width / 3` rows, turned so its boundary chain runs along
/// the HH rows.
pub fn hh_wpt_blend(hh_width: usize, hh_height: usize, wpt_width: usize) -> Result<Blend> {
    let hh = build_hh(hh_width, hh_height, HhBoundary::ZigzagI)?.with_schedule(&[0, 0, 1, 2])?;
    let rows = hh_width / 3;
    let wpt = build_wpt(wpt_width, rows, WptBoundary::RightR)?;
    let period = Some(Period { lo: 0, period: 2 * hh_width as i64 });
    let wpt = wpt.remapped(|c| vec![3 * c[1], c[0]], vec![period, None], 0)?.with_radius(3 * wpt.radius());
    let (bh, bw) = (hh.boundary_basis().unwrap(), wpt.boundary_basis().unwrap());
    if bh.len() != bw.len() {
        return Err(Error::Invalid(format!("{} HH logicals against {} WPT logicals", bh.len(), bw.len())));
    }
    let pairs = bh.iter().cloned().zip(bw.iter().cloned()).collect();
    let spec = GlueSpec { name: "blend/hh_wpt".into(), first: hh.clone(), second: wpt.clone(), pairs, radius: None };
    let glued = glue(&spec)?;
    let lat = glued.lattice().clone();
    let (ih, iw) = (hh.interface().unwrap(), wpt.interface().unwrap());
    let region = layer_region(&lat, hh.lattice(), 0, &ih.region).union(&layer_region(&lat, wpt.lattice(), 1, &iw.region));
    let interface = Interface::along_axis(&lat, region, 0);
    Ok(Blend { glued, interface, hh, wpt })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::chains::translation_1d;
    use crate::mqca::{index, period_map, IndexOptions, MapOptions};
    use crate::rev::{is_topological, TopoOptions};

    fn index2(seq: &IsgSequence) -> i64 {
        let m = period_map(seq, None, &MapOptions::default()).unwrap();
        index(&m, &IndexOptions::default()).unwrap().index_times_two
    }

    #[test]
    fn empty_pairing_keeps_both_circuits() {
        let a = translation_1d(8).unwrap();
        let g = glue(&GlueSpec { name: "pair".into(), first: a.clone(), second: a.clone(), pairs: vec![], radius: None })
            .unwrap();
        assert!(g.verify().ok);
        assert_eq!(g.steps()[0].dim(), 2 * a.steps()[0].dim());
    }

    #[test]
    fn period_mismatch_rejected() {
        let a = translation_1d(8).unwrap();
        let b = a.with_schedule(&[0, 0, 1, 2, 3]).unwrap();
        let e = glue(&GlueSpec { name: "x".into(), first: a, second: b, pairs: vec![], radius: None });
        assert!(matches!(e, Err(Error::Invalid(_))));
    }

    #[test]
    fn schedules_must_walk_one_period() {
        let a = translation_1d(8).unwrap();
        assert!(a.with_schedule(&[0, 1, 1, 2, 3]).unwrap().verify().ok);
        assert!(a.with_schedule(&[0, 0]).is_err());
        assert!(a.with_schedule(&[1, 2, 3, 0]).is_err());
        assert!(a.with_schedule(&[0, 2, 3]).is_err());
        assert!(a.with_schedule(&[0, 1, 2, 3, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn double_wpt_indices_add() {
        for (second, sheet2, total) in [(WptBoundary::RightR, -1, -2), (WptBoundary::RightRReversed, 1, 0)] {
            let g = double_wpt(8, 24, second).unwrap();
            assert!(g.strip.verify().ok);
            assert_eq!(index2(&g.sheets[0]), -1);
            assert_eq!(index2(&g.sheets[1]), sheet2);
            assert_eq!(index2(&g.strip), total);
            let edge = Frame::sweep(g.strip.steps()[0].clone(), g.glued_edge.clone(), g.strip.default_window()).unwrap();
            assert!(edge.is_empty());
        }
    }

    #[test]
    fn glued_base_is_topological_away_from_the_right_edges() {
        let g = double_wpt(8, 12, WptBoundary::RightR).unwrap();
        let lat = g.strip.lattice();
        let base = &g.strip.steps()[0];
        let opts = TopoOptions { max_box: Some(2), allow_edges: true, ..Default::default() };
        let rep = is_topological(base, &lat.region_where(|c| c[0] <= -6), 4, &opts).unwrap();
        assert!(rep.topological);
        let rep = is_topological(base, &lat.full_region(), 4, &opts).unwrap();
        assert!(!rep.topological);
        assert_eq!(rep.witness.unwrap().0, 1);
    }

    #[test]
    fn blend_verifies_without_interface_logicals() {
        let b = hh_wpt_blend(36, 8, 8).unwrap();
        assert!(b.glued.verify().ok);
        let f = Frame::sweep(b.glued.steps()[0].clone(), b.interface.clone(), 24).unwrap();
        assert!(f.is_empty());
    }
}
