// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Two WPT sheets glued along their left edges: the strip index is the sum
//! of the sheet indices and the glued edge carries no logicals.

use plrmc::models::glue::double_wpt;
use plrmc::models::wpt::WptBoundary;
use plrmc::mqca::{index, period_map, Frame, IndexOptions, MapOptions};
use plrmc::rev::{is_topological, TopoOptions};

fn main() -> plrmc::Result<()> {
    for second in [WptBoundary::RightR, WptBoundary::RightRReversed] {
        let g = double_wpt(8, 24, second)?;
        let idx = |s| -> plrmc::Result<String> {
            Ok(index(&period_map(s, None, &MapOptions::default())?, &IndexOptions::default())?.index)
        };
        let edge = Frame::sweep(g.strip.steps()[0].clone(), g.glued_edge.clone(), g.strip.default_window())?;
        println!(
            "{}: strip {} = {} + {}, glued edge logicals {}",
            second.name(),
            idx(&g.strip)?,
            idx(&g.sheets[0])?,
            idx(&g.sheets[1])?,
            edge.len()
        );
    }
    let g = double_wpt(8, 12, WptBoundary::RightR)?;
    let bulk = g.strip.lattice().region_where(|c| c[0] <= -6);
    let opts = TopoOptions { max_box: Some(2), allow_edges: true, ..Default::default() };
    let rep = is_topological(&g.strip.steps()[0], &bulk, 4, &opts)?;
    println!("glued base topological away from the right edges: {} ({} boxes)", rep.topological, rep.boxes_checked);
    Ok(())
}
