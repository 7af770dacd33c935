// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Model configuration files (TOML or JSON) and the models they build.

use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::chains::{majorana_shift, random_plrmc, teleport_chain, translation_1d};
use super::glue::{double_wpt, hh_wpt_blend};
use super::hh::{build_hh, HhBoundary};
use super::wpt::{build_wpt, WptBoundary};
use super::IsgSequence;
use crate::mqca::{Interface, MqcaMap};
use crate::pauli::{Half, Region};
use crate::stab::GroupFile;
use crate::{Error, Result};

/// Names accepted by `model`.
pub const MODELS: [&str; 9] =
    ["translation", "teleport-chain", "majorana", "wpt", "hh", "double-wpt", "blend", "random", "custom"];

/// A model description. Lengths are in lattice units.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    pub model: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    /// Sites of a 1D model, or cells of a random circuit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Conjugate-basis search radius.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<i64>,
    /// Extra clearance required around index cuts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin_override: Option<i64>,
    /// Sweep window for logical extraction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    /// Re-timing with idle steps, see [`IsgSequence::with_schedule`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<Vec<usize>>,
    /// Majorana shift amount.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<usize>,
    /// Slots per cell of a random circuit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layers: Option<usize>,
    /// Seed of a random circuit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Stabilizer-group files of a custom circuit, one per step, relative
    /// to the config file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<PathBuf>>,
    /// Custom circuits: run once instead of cyclically.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_shot: Option<bool>,
    /// Custom circuits: interface is the whole window along this axis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interface_axis: Option<usize>,
}

/// What a config builds.
#[derive(Clone, Debug)]
pub enum Model {
    Circuit(Built),
    /// An abstract automorphism with no circuit behind it.
    Map(MqcaMap),
}

#[derive(Clone, Debug)]
pub struct Built {
    pub seq: IsgSequence,
    /// Region where the base group should be topological, if any.
    pub bulk: Option<Region>,
    /// Edges whose logicals should vanish (glued models).
    pub glued: Option<Interface>,
    /// Separate sheets of a glued strip.
    pub sheets: Option<[IsgSequence; 2]>,
    /// Expected index of a random circuit, doubled.
    pub expected_index_times_two: Option<i64>,
}

impl Built {
    fn plain(seq: IsgSequence) -> Self {
        Built { seq, bulk: None, glued: None, sheets: None, expected_index_times_two: None }
    }
}

impl ModelConfig {
    pub fn named(model: &str) -> Self {
        ModelConfig { model: model.into(), ..Default::default() }
    }

    /// Parses TOML, or JSON if the text starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: ModelConfig = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?
        } else {
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?
        };
        Ok(cfg)
    }

    /// Loads a file and resolves `steps` relative to it.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let mut cfg = Self::parse(&text)?;
        if let (Some(steps), Some(dir)) = (cfg.steps.as_mut(), path.parent()) {
            for s in steps.iter_mut() {
                if s.is_relative() {
                    *s = dir.join(&*s);
                }
            }
        }
        Ok(cfg)
    }

    /// Margin in doubled units.
    pub fn margin(&self) -> Half {
        2 * self.margin_override.unwrap_or(0)
    }

    fn wpt_boundary(&self) -> Result<WptBoundary> {
        let b = self.boundary.as_deref().unwrap_or("right_R");
        WptBoundary::parse(b).ok_or_else(|| Error::Config(format!("unknown WPT boundary {b:?}")))
    }

    fn hh_boundary(&self) -> Result<HhBoundary> {
        let b = self.boundary.as_deref().unwrap_or("zigzag_I");
        HhBoundary::parse(b).ok_or_else(|| Error::Config(format!("unknown HH boundary {b:?}")))
    }

    /// Fills in every default so the config echoes what was built.
    pub fn resolved(&self) -> Result<Self> {
        let mut c = self.clone();
        let set = |v: &mut Option<usize>, d: usize| *v = Some(v.unwrap_or(d));
        match c.model.as_str() {
            "translation" => set(&mut c.n, 20),
            "teleport-chain" => {
                set(&mut c.n, 2);
                c.radius = Some(c.radius.unwrap_or(2 * c.n.unwrap() as i64 + 1));
            }
            "majorana" => {
                set(&mut c.n, 24);
                set(&mut c.shift, 1);
            }
            "wpt" => {
                c.boundary = Some(self.wpt_boundary()?.name().into());
                let (w, h) = match self.wpt_boundary()? {
                    WptBoundary::RightR | WptBoundary::RightRReversed => (8, 24),
                    WptBoundary::BulkTorus => (8, 8),
                    _ => (24, 10),
                };
                set(&mut c.width, w);
                set(&mut c.height, h);
            }
            "hh" => {
                let b = self.hh_boundary()?;
                c.boundary = Some(b.name().into());
                let w = match b {
                    HhBoundary::Bulk => 12,
                    HhBoundary::ZigzagIIISequence => 60,
                    _ => 36,
                };
                set(&mut c.width, w);
                set(&mut c.height, if b == HhBoundary::Bulk { 8 } else { 6 });
            }
            "double-wpt" => {
                let b = self.wpt_boundary()?;
                c.boundary = Some(b.name().into());
                set(&mut c.width, 8);
                set(&mut c.height, 24);
            }
            "blend" => {
                set(&mut c.width, 36);
                set(&mut c.height, 8);
            }
            "random" => {
                set(&mut c.n, 8);
                set(&mut c.layers, 2);
                c.seed = Some(c.seed.unwrap_or(0));
            }
            "custom" => {
                if c.steps.as_ref().map_or(true, |s| s.is_empty()) {
                    return Err(Error::Config("custom model needs a nonempty `steps` list".into()));
                }
            }
            other => return Err(Error::Config(format!("unknown model {other:?}; expected one of {MODELS:?}"))),
        }
        Ok(c)
    }

    pub fn build(&self) -> Result<Model> {
        let c = self.resolved()?;
        let n = c.n.unwrap_or(0);
        let (w, h) = (c.width.unwrap_or(0), c.height.unwrap_or(0));
        let mut built = match c.model.as_str() {
            "translation" => Built::plain(translation_1d(n)?),
            "teleport-chain" => Built::plain(teleport_chain(n, 2 * c.radius.unwrap())?),
            "majorana" => {
                let m = majorana_shift(n)?;
                let shift = c.shift.unwrap();
                let mut out = m.clone();
                for _ in 1..shift {
                    out = crate::mqca::compose(&out, &m)?;
                }
                return Ok(Model::Map(out));
            }
            "wpt" => {
                let b = c.wpt_boundary()?;
                let seq = build_wpt(w, h, b)?;
                let bulk = (b == WptBoundary::BulkTorus).then(|| seq.lattice().full_region());
                Built { bulk, ..Built::plain(seq) }
            }
            "hh" => {
                let b = c.hh_boundary()?;
                let seq = build_hh(w, h, b)?;
                let bulk = (b == HhBoundary::Bulk).then(|| seq.lattice().full_region());
                Built { bulk, ..Built::plain(seq) }
            }
            "double-wpt" => {
                let g = double_wpt(w, h, c.wpt_boundary()?)?;
                // Three columns clear of the two right boundaries.
                let bulk = g.strip.lattice().region_where(|x| x[0] <= -6);
                Built { bulk: Some(bulk), glued: Some(g.glued_edge), sheets: Some(g.sheets), ..Built::plain(g.strip) }
            }
            "blend" => {
                let b = hh_wpt_blend(w, h, 8)?;
                let seq = b.glued.with_interface(b.interface.clone());
                Built { glued: Some(b.interface), ..Built::plain(seq) }
            }
            "random" => {
                let mut rng = ChaCha8Rng::seed_from_u64(c.seed.unwrap());
                let (seq, expected) = random_plrmc(&mut rng, n, c.layers.unwrap())?;
                Built { expected_index_times_two: Some(2 * expected), ..Built::plain(seq) }
            }
            _ => Built::plain(c.custom()?),
        };
        if let Some(r) = c.radius.filter(|_| c.model != "teleport-chain") {
            built.seq = built.seq.with_radius(2 * r);
        }
        if let Some(win) = c.window {
            built.seq = built.seq.with_window(2 * win);
        }
        if let Some(s) = &c.schedule {
            built.seq = built.seq.with_schedule(s)?;
        }
        Ok(Model::Circuit(built))
    }

    fn custom(&self) -> Result<IsgSequence> {
        let groups = self
            .steps
            .iter()
            .flatten()
            .map(|p| {
                let text =
                    std::fs::read_to_string(p).map_err(|e| Error::Config(format!("{}: {e}", p.display())))?;
                let f: GroupFile = serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", p.display())))?;
                f.build()
            })
            .collect::<Result<Vec<_>>>()?;
        let radius = 2 * self.radius.unwrap_or(4);
        let mut seq = IsgSequence::new("custom", groups, radius)?;
        if self.one_shot == Some(true) {
            seq = seq.one_shot();
        }
        if let Some(ax) = self.interface_axis {
            let lat = seq.lattice().clone();
            if ax >= lat.dims() {
                return Err(Error::Config(format!("interface axis {ax} on a {}-dimensional lattice", lat.dims())));
            }
            seq = seq.with_interface(Interface::along_axis(&lat, lat.full_region(), ax));
        }
        Ok(seq)
    }
}
