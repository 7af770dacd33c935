// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Lattices, regions and phase-free Pauli operators.
//!
//! Coordinates are stored doubled so that half-integer positions are exact.
//! All lengths passed to this module (radii, distances) are in the same
//! doubled units; `1` means half a lattice spacing.

use crate::error::{Error, Result};
use crate::f2::BitVec;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

/// A length in doubled units.
pub type Half = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKind {
    Chain,
    ChainWithAncilla,
    Square,
    HoneycombZigzag,
    Layered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    LInf,
    Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub coord: Vec<i64>,
    pub qubits: u32,
}

/// Periodic identification along one axis: coordinates are reduced into
/// `[lo, lo + period)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Period {
    pub lo: i64,
    pub period: i64,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    kind: LatticeKind,
    metric: Metric,
    dims: usize,
    sites: Vec<Site>,
    offsets: Vec<u32>,
    qubit_site: Vec<u32>,
    periods: Vec<Option<Period>>,
    index: HashMap<Vec<i64>, u32>,
    adjacency: Vec<Vec<u32>>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.sites == other.sites && self.periods == other.periods
    }
}

impl Lattice {
    /// Build from arbitrary sites (doubled coordinates). Sites are sorted
    /// lexicographically, which fixes the canonical qubit order.
    pub fn new(kind: LatticeKind, mut sites: Vec<Site>, periods: Vec<Option<Period>>) -> Result<Self> {
        let dims = periods.len();
        if sites.iter().any(|s| s.coord.len() != dims) {
            return Err(Error::Invalid("site coordinate has the wrong number of axes".into()));
        }
        sites.sort_by(|a, b| a.coord.cmp(&b.coord));
        let mut lat = Lattice {
            kind,
            metric: Metric::LInf,
            dims,
            sites: Vec::new(),
            offsets: Vec::new(),
            qubit_site: Vec::new(),
            periods,
            index: HashMap::new(),
            adjacency: Vec::new(),
        };
        for s in &mut sites {
            let c = lat.wrap(&s.coord);
            s.coord = c;
        }
        sites.sort_by(|a, b| a.coord.cmp(&b.coord));
        for (i, s) in sites.iter().enumerate() {
            if lat.index.insert(s.coord.clone(), i as u32).is_some() {
                return Err(Error::Invalid(format!("duplicate site {}", fmt_coord(&s.coord))));
            }
            lat.offsets.push(lat.qubit_site.len() as u32);
            lat.qubit_site.extend(std::iter::repeat_n(i as u32, s.qubits as usize));
        }
        lat.sites = sites;
        lat.adjacency = vec![Vec::new(); lat.sites.len()];
        Ok(lat)
    }

    /// Open or periodic chain of `n` sites with `q` qubits each.
    pub fn chain(n: usize, q: u32, periodic: bool) -> Self {
        let sites = (0..n as i64).map(|i| Site { coord: vec![2 * i], qubits: q }).collect();
        let p = periodic.then_some(Period { lo: 0, period: 2 * n as i64 });
        let mut lat = Lattice::new(LatticeKind::Chain, sites, vec![p]).expect("chain sites are distinct");
        for i in 0..n {
            if i + 1 < n || periodic && n > 2 {
                lat.add_edge(i, (i + 1) % n);
            }
        }
        lat
    }

    /// Chain whose sites carry per-site qubit counts.
    pub fn chain_with_counts(counts: &[u32]) -> Self {
        let sites = counts.iter().enumerate().map(|(i, &q)| Site { coord: vec![2 * i as i64], qubits: q }).collect();
        let mut lat = Lattice::new(LatticeKind::Chain, sites, vec![None]).expect("chain sites are distinct");
        for i in 1..counts.len() {
            lat.add_edge(i - 1, i);
        }
        lat
    }

    /// ℤ × ½ℤ window: integer `x` in `xs`, half-integer steps of `y` in
    /// `ys` (given doubled, inclusive). Optionally periodic in `y`
    /// (period in doubled units) or `x`.
    pub fn half_integer_window(
        xs: (i64, i64),
        ys2: (i64, i64),
        period_x: Option<i64>,
        period_y2: Option<i64>,
    ) -> Self {
        let mut sites = Vec::new();
        for x in xs.0..=xs.1 {
            for y2 in ys2.0..=ys2.1 {
                sites.push(Site { coord: vec![2 * x, y2], qubits: 1 });
            }
        }
        let px = period_x.map(|p| Period { lo: 2 * xs.0, period: 2 * p });
        let py = period_y2.map(|p| Period { lo: ys2.0, period: p });
        Lattice::new(LatticeKind::ChainWithAncilla, sites, vec![px, py]).expect("window sites are distinct")
    }

    /// Square grid, `w × h` sites with `q` qubits each.
    pub fn square(w: usize, h: usize, q: u32) -> Self {
        let mut sites = Vec::new();
        for x in 0..w as i64 {
            for y in 0..h as i64 {
                sites.push(Site { coord: vec![2 * x, 2 * y], qubits: q });
            }
        }
        let mut lat = Lattice::new(LatticeKind::Square, sites, vec![None, None]).expect("grid sites are distinct");
        for x in 0..w as i64 {
            for y in 0..h as i64 {
                let a = lat.site_at(&[2 * x, 2 * y]).unwrap();
                for (dx, dy) in [(1, 0), (0, 1)] {
                    if let Some(b) = lat.site_at(&[2 * (x + dx), 2 * (y + dy)]) {
                        lat.add_edge(a, b);
                    }
                }
            }
        }
        lat
    }

    /// Brick-wall honeycomb: columns `0..w` (periodic if requested), rows
    /// `r = 0, 1, ..., h-1` at second coordinate `-2r`. A vertical edge joins
    /// `(c, r-1)` and `(c, r)` iff `c - r` is even.
    pub fn honeycomb(w: usize, h: usize, periodic: bool) -> Self {
        Self::brick_wall(w, h, periodic, false)
    }

    /// Honeycomb periodic in both directions; `h` must be even.
    pub fn honeycomb_torus(w: usize, h: usize) -> Self {
        assert!(h % 2 == 0, "torus height must be even");
        Self::brick_wall(w, h, true, true)
    }

    fn brick_wall(w: usize, h: usize, periodic_x: bool, periodic_y: bool) -> Self {
        let mut sites = Vec::new();
        for c in 0..w as i64 {
            for r in 0..h as i64 {
                sites.push(Site { coord: vec![2 * c, -2 * r], qubits: 1 });
            }
        }
        let px = periodic_x.then_some(Period { lo: 0, period: 2 * w as i64 });
        let py = periodic_y.then_some(Period { lo: -2 * (h as i64 - 1), period: 2 * h as i64 });
        let mut lat =
            Lattice::new(LatticeKind::HoneycombZigzag, sites, vec![px, py]).expect("honeycomb sites are distinct");
        for c in 0..w as i64 {
            for r in 0..h as i64 {
                let a = lat.site_at(&[2 * c, -2 * r]).unwrap();
                if c + 1 < w as i64 || periodic_x {
                    let b = lat.site_at(&[2 * (c + 1), -2 * r]).unwrap();
                    lat.add_edge(a, b);
                }
                if (c - r).rem_euclid(2) == 0 && (r > 0 || periodic_y) {
                    let b = lat.site_at(&[2 * c, -2 * r + 2]).unwrap();
                    lat.add_edge(a, b);
                }
            }
        }
        lat
    }

    /// Disjoint union of layers; a trailing layer axis is appended.
    pub fn layered(layers: &[&Lattice]) -> Result<Self> {
        let dims = layers.first().map_or(0, |l| l.dims);
        if layers.iter().any(|l| l.dims != dims) {
            return Err(Error::Invalid("layers must have the same number of axes".into()));
        }
        let mut sites = Vec::new();
        for (k, l) in layers.iter().enumerate() {
            for s in &l.sites {
                let mut c = s.coord.clone();
                c.push(2 * k as i64);
                sites.push(Site { coord: c, qubits: s.qubits });
            }
        }
        let mut periods = layers[0].periods.clone();
        if layers.iter().any(|l| l.periods != periods) {
            return Err(Error::Invalid("layers must share periodicity".into()));
        }
        periods.push(None);
        let mut lat = Lattice::new(LatticeKind::Layered, sites, periods)?;
        for (k, l) in layers.iter().enumerate() {
            for (a, nbrs) in l.adjacency.iter().enumerate() {
                for &b in nbrs {
                    let ca = [l.sites[a].coord.as_slice(), &[2 * k as i64]].concat();
                    let cb = [l.sites[b as usize].coord.as_slice(), &[2 * k as i64]].concat();
                    let (i, j) = (lat.site_at(&ca).unwrap(), lat.site_at(&cb).unwrap());
                    if i < j {
                        lat.add_edge(i, j);
                    }
                }
            }
        }
        Ok(lat)
    }

    /// Same sites and edges under a coordinate map, with new periods.
    /// Returns the lattice and the old-to-new qubit map.
    pub fn remapped(&self, f: impl Fn(&[i64]) -> Vec<i64>, periods: Vec<Option<Period>>) -> Result<(Self, Vec<u32>)> {
        let sites = self.sites.iter().map(|s| Site { coord: f(&s.coord), qubits: s.qubits }).collect();
        let mut lat = Lattice::new(self.kind, sites, periods)?;
        lat.metric = self.metric;
        let site_map: Vec<usize> = self.sites.iter().map(|s| lat.site_at(&f(&s.coord)).expect("mapped site")).collect();
        for (a, nbrs) in self.adjacency.iter().enumerate() {
            for &b in nbrs {
                lat.add_edge(site_map[a], site_map[b as usize]);
            }
        }
        let qmap = (0..self.num_qubits() as u32)
            .map(|q| {
                let s = self.qubit_site[q as usize] as usize;
                lat.offsets[site_map[s]] + (q - self.offsets[s])
            })
            .collect();
        Ok((lat, qmap))
    }

    /// Qubit of `layer` in a layered lattice corresponding to qubit `q` of
    /// the original layer lattice `src`.
    pub fn layer_qubit(&self, src: &Lattice, layer: usize, q: u32) -> u32 {
        let s = &src.sites[src.qubit_site[q as usize] as usize];
        let mut c = s.coord.clone();
        c.push(2 * layer as i64);
        let site = self.site_at(&c).expect("layer site exists");
        self.offsets[site] + (q - src.offsets[src.qubit_site[q as usize] as usize])
    }

    /// Embed an operator from a layer lattice into this layered lattice.
    pub fn embed_layer(&self, src: &Lattice, layer: usize, p: &PauliOp) -> PauliOp {
        PauliOp::from_pairs(p.iter().map(|(q, k)| (self.layer_qubit(src, layer, q), k)))
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        if a != b && !self.adjacency[a].contains(&(b as u32)) {
            self.adjacency[a].push(b as u32);
            self.adjacency[b].push(a as u32);
        }
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn num_qubits(&self) -> usize {
        self.qubit_site.len()
    }

    pub fn num_sites(&self) -> usize {
        self.sites.len()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn periods(&self) -> &[Option<Period>] {
        &self.periods
    }

    pub fn site_of(&self, q: u32) -> usize {
        self.qubit_site[q as usize] as usize
    }

    /// Index of `q` within its site.
    pub fn intra(&self, q: u32) -> u32 {
        q - self.offsets[self.site_of(q)]
    }

    pub fn coord(&self, q: u32) -> &[i64] {
        &self.sites[self.site_of(q)].coord
    }

    pub fn site_qubits(&self, site: usize) -> std::ops::Range<u32> {
        let o = self.offsets[site];
        o..o + self.sites[site].qubits
    }

    /// Reduce periodic axes into their fundamental range.
    pub fn wrap(&self, coord: &[i64]) -> Vec<i64> {
        coord
            .iter()
            .zip(&self.periods)
            .map(|(&c, p)| match p {
                Some(p) => p.lo + (c - p.lo).rem_euclid(p.period),
                None => c,
            })
            .collect()
    }

    pub fn site_at(&self, coord: &[i64]) -> Option<usize> {
        if coord.len() != self.dims {
            return None;
        }
        self.index.get(&self.wrap(coord)).map(|&i| i as usize)
    }

    /// Qubit `k` of the site at `coord` (doubled).
    pub fn qubit_at(&self, coord: &[i64], k: u32) -> Option<u32> {
        let s = self.site_at(coord)?;
        (k < self.sites[s].qubits).then(|| self.offsets[s] + k)
    }

    /// Signed displacement `b - a` along `axis`, using the shortest
    /// representative on periodic axes.
    pub fn displacement(&self, a: i64, b: i64, axis: usize) -> i64 {
        let d = b - a;
        match self.periods[axis] {
            Some(p) => {
                let m = d.rem_euclid(p.period);
                if 2 * m > p.period {
                    m - p.period
                } else {
                    m
                }
            }
            None => d,
        }
    }

    pub fn site_distance(&self, a: usize, b: usize) -> Half {
        match self.metric {
            Metric::LInf => (0..self.dims)
                .map(|ax| self.displacement(self.sites[a].coord[ax], self.sites[b].coord[ax], ax).abs())
                .max()
                .unwrap_or(0),
            Metric::Graph => self.bfs(&[a], usize::MAX)[b].map_or(Half::MAX, |h| 2 * h as Half),
        }
    }

    pub fn distance(&self, p: u32, q: u32) -> Half {
        self.site_distance(self.site_of(p), self.site_of(q))
    }

    fn bfs(&self, sources: &[usize], max_hops: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.sites.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(a) = queue.pop_front() {
            let d = dist[a].unwrap();
            if d == max_hops {
                continue;
            }
            for &b in &self.adjacency[a] {
                if dist[b as usize].is_none() {
                    dist[b as usize] = Some(d + 1);
                    queue.push_back(b as usize);
                }
            }
        }
        dist
    }

    /// All sites within distance `ell` of some site of `sites`.
    pub fn site_neighborhood(&self, sites: &[usize], ell: Half) -> Vec<usize> {
        if ell <= 0 {
            let mut v = sites.to_vec();
            v.sort_unstable();
            v.dedup();
            return v;
        }
        let mut out: Vec<usize> = match self.metric {
            Metric::Graph => {
                let d = self.bfs(sites, (ell / 2) as usize);
                (0..self.sites.len()).filter(|&i| d[i].is_some()).collect()
            }
            Metric::LInf => {
                let mut hit = vec![false; self.sites.len()];
                // Only coordinate values present on each axis are tried.
                let values: Vec<Vec<i64>> = (0..self.dims)
                    .map(|ax| {
                        let mut v: Vec<i64> = self.sites.iter().map(|s| s.coord[ax]).collect();
                        v.sort_unstable();
                        v.dedup();
                        v
                    })
                    .collect();
                let mut buf = vec![0; self.dims];
                for &s in sites {
                    let c = &self.sites[s].coord;
                    let near: Vec<Vec<i64>> = (0..self.dims)
                        .map(|ax| {
                            values[ax].iter().copied().filter(|&v| self.displacement(c[ax], v, ax).abs() <= ell).collect()
                        })
                        .collect();
                    if near.iter().any(|v| v.is_empty()) {
                        continue;
                    }
                    let mut idx = vec![0usize; self.dims];
                    'outer: loop {
                        for ax in 0..self.dims {
                            buf[ax] = near[ax][idx[ax]];
                        }
                        if let Some(t) = self.site_at(&buf) {
                            hit[t] = true;
                        }
                        for ax in 0..self.dims {
                            idx[ax] += 1;
                            if idx[ax] < near[ax].len() {
                                continue 'outer;
                            }
                            idx[ax] = 0;
                        }
                        break;
                    }
                }
                (0..self.sites.len()).filter(|&i| hit[i]).collect()
            }
        };
        out.sort_unstable();
        out
    }

    pub fn neighborhood(&self, r: &Region, ell: Half) -> Region {
        let mut sites: Vec<usize> = r.qubits.iter().map(|&q| self.site_of(q)).collect();
        sites.dedup();
        let nb = self.site_neighborhood(&sites, ell);
        let mut qs: Vec<u32> = nb.iter().flat_map(|&s| self.site_qubits(s)).collect();
        if ell <= 0 {
            qs.retain(|q| r.contains(*q));
        }
        Region::new(self.num_qubits(), qs)
    }

    /// Largest pairwise distance between support sites.
    pub fn diameter(&self, p: &PauliOp) -> Half {
        let mut sites: Vec<usize> = p.iter().map(|(q, _)| self.site_of(q)).collect();
        sites.dedup();
        let mut d = 0;
        for i in 0..sites.len() {
            for j in i + 1..sites.len() {
                d = d.max(self.site_distance(sites[i], sites[j]));
            }
        }
        d
    }

    pub fn region_where(&self, pred: impl Fn(&[i64]) -> bool) -> Region {
        let qs = (0..self.num_qubits() as u32).filter(|&q| pred(self.coord(q)));
        Region::new(self.num_qubits(), qs)
    }

    pub fn full_region(&self) -> Region {
        Region::new(self.num_qubits(), 0..self.num_qubits() as u32)
    }

    /// Factor on the qubit `k` of the site at doubled coordinate `coord`.
    pub fn op(&self, kind: Pauli, coord: &[i64], k: u32) -> Result<PauliOp> {
        let q = self.qubit_at(coord, k).ok_or_else(|| Error::UnknownSite(fmt_coord(coord)))?;
        Ok(PauliOp::single(q, kind))
    }

    pub fn format(&self, p: &PauliOp) -> String {
        let mut s = String::new();
        for (q, k) in p.iter() {
            if !s.is_empty() {
                s.push(' ');
            }
            s.push(k.letter());
            s.push('(');
            s.push_str(&fmt_coord(self.coord(q)));
            s.push(')');
            let i = self.intra(q);
            if i > 0 {
                let _ = write!(s, "#{i}");
            }
        }
        s
    }

    /// Parse the factor grammar `X(c) Y(c) Z(c)`, with optional `#k` after
    /// the parenthesis selecting qubit `k` of a multi-qubit site. On the
    /// honeycomb a single coordinate names a vertex of the top row.
    pub fn parse(&self, text: &str) -> Result<PauliOp> {
        let b = text.as_bytes();
        let mut i = 0;
        let mut out = PauliOp::identity();
        let skip_ws = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        loop {
            skip_ws(&mut i);
            if i == b.len() {
                return Ok(out);
            }
            let kind = match b[i] {
                b'X' => Pauli::X,
                b'Y' => Pauli::Y,
                b'Z' => Pauli::Z,
                b'I' => Pauli::I,
                _ => return Err(syntax(i, "expected X, Y, Z or I")),
            };
            i += 1;
            skip_ws(&mut i);
            if i == b.len() || b[i] != b'(' {
                return Err(syntax(i, "expected '('"));
            }
            let start = i + 1;
            let close = text[start..].find(')').ok_or_else(|| syntax(start, "missing ')'"))? + start;
            let mut coord = Vec::new();
            let mut pos = start;
            for part in text[start..close].split(',') {
                coord.push(parse_half(part.trim()).ok_or_else(|| syntax(pos, "bad coordinate"))?);
                pos += part.len() + 1;
            }
            i = close + 1;
            let mut k = 0;
            if i < b.len() && b[i] == b'#' {
                let s = i + 1;
                let mut e = s;
                while e < b.len() && b[e].is_ascii_digit() {
                    e += 1;
                }
                k = text[s..e].parse().map_err(|_| syntax(s, "bad qubit index"))?;
                i = e;
            }
            if self.kind == LatticeKind::HoneycombZigzag && coord.len() == 1 {
                coord.push(0);
            }
            let q = self.qubit_at(&coord, k).ok_or_else(|| Error::UnknownSite(fmt_coord(&coord)))?;
            out = out.multiply(&PauliOp::single(q, kind));
        }
    }

    pub fn to_json(&self, p: &PauliOp) -> PauliJson {
        let factors = p
            .iter()
            .map(|(q, k)| FactorJson {
                pauli: k.letter().to_string(),
                site: self.coord(q).iter().map(|&c| half_to_json(c)).collect(),
                qubit: self.intra(q),
            })
            .collect();
        PauliJson { factors }
    }

    pub fn from_json(&self, j: &PauliJson) -> Result<PauliOp> {
        let mut out = PauliOp::identity();
        for f in &j.factors {
            let kind = Pauli::from_letter(&f.pauli).ok_or_else(|| Error::Invalid(format!("bad Pauli {:?}", f.pauli)))?;
            let coord = f.site.iter().map(json_to_half).collect::<Result<Vec<_>>>()?;
            let q = self.qubit_at(&coord, f.qubit).ok_or_else(|| Error::UnknownSite(fmt_coord(&coord)))?;
            out = out.multiply(&PauliOp::single(q, kind));
        }
        Ok(out)
    }
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn parse_half(s: &str) -> Option<i64> {
    if let Ok(v) = s.parse::<i64>() {
        return Some(2 * v);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.')?;
    let int: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let h = match frac.trim_end_matches('0') {
        "" => 0,
        "5" => 1,
        _ => return None,
    };
    let v = 2 * int + h;
    Some(if neg { -v } else { v })
}

/// Serializes a doubled length as a lattice-unit JSON number.
pub(crate) fn ser_half<S: serde::Serializer>(v: &Half, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v % 2 == 0 {
        s.serialize_i64(v / 2)
    } else {
        s.serialize_f64(*v as f64 / 2.0)
    }
}

pub(crate) fn ser_opt_half<S: serde::Serializer>(v: &Option<Half>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(h) => ser_half(h, s),
        None => s.serialize_none(),
    }
}

/// Doubled coordinate back to lattice units, e.g. `-1` → `-0.5`.
pub fn fmt_half(c: i64) -> String {
    if c % 2 == 0 {
        format!("{}", c / 2)
    } else if c < 0 {
        format!("-{}.5", (-c) / 2)
    } else {
        format!("{}.5", c / 2)
    }
}

pub fn fmt_coord(c: &[i64]) -> String {
    c.iter().map(|&v| fmt_half(v)).collect::<Vec<_>>().join(",")
}

fn half_to_json(c: i64) -> serde_json::Number {
    if c % 2 == 0 {
        serde_json::Number::from(c / 2)
    } else {
        serde_json::Number::from_f64(c as f64 / 2.0).expect("finite")
    }
}

fn json_to_half(n: &serde_json::Number) -> Result<i64> {
    if let Some(i) = n.as_i64() {
        return Ok(2 * i);
    }
    let f = n.as_f64().unwrap_or(f64::NAN);
    let d = f * 2.0;
    if d.fract() != 0.0 || !d.is_finite() {
        return Err(Error::Invalid(format!("coordinate {n} is not a half-integer")));
    }
    Ok(d as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub pauli: String,
    pub site: Vec<serde_json::Number>,
    #[serde(default)]
    pub qubit: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PauliJson {
    pub factors: Vec<FactorJson>,
}

/// Sorted set of qubits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    n: usize,
    qubits: Vec<u32>,
}

impl Region {
    pub fn new(n: usize, qubits: impl IntoIterator<Item = u32>) -> Self {
        let mut qubits: Vec<u32> = qubits.into_iter().collect();
        qubits.sort_unstable();
        qubits.dedup();
        Region { n, qubits }
    }

    pub fn empty(n: usize) -> Self {
        Region { n, qubits: Vec::new() }
    }

    pub fn num_lattice_qubits(&self) -> usize {
        self.n
    }

    pub fn qubits(&self) -> &[u32] {
        &self.qubits
    }

    pub fn len(&self) -> usize {
        self.qubits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qubits.is_empty()
    }

    pub fn contains(&self, q: u32) -> bool {
        self.qubits.binary_search(&q).is_ok()
    }

    pub fn contains_op(&self, p: &PauliOp) -> bool {
        p.iter().all(|(q, _)| self.contains(q))
    }

    pub fn union(&self, other: &Region) -> Region {
        Region::new(self.n, self.qubits.iter().chain(&other.qubits).copied())
    }

    pub fn intersection(&self, other: &Region) -> Region {
        Region::new(self.n, self.qubits.iter().copied().filter(|&q| other.contains(q)))
    }

    pub fn mask(&self) -> BitVec {
        BitVec::from_ones(self.n, self.qubits.iter().map(|&q| q as usize))
    }

    /// Position of `q` within the sorted region, used as a local column index.
    pub fn position(&self, q: u32) -> Option<usize> {
        self.qubits.binary_search(&q).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I = 0,
    X = 1,
    Z = 2,
    Y = 3,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn x(self) -> bool {
        self as u8 & 1 == 1
    }

    pub fn z(self) -> bool {
        self as u8 & 2 == 2
    }

    fn mul(self, o: Pauli) -> Pauli {
        Pauli::from_bits(self.x() ^ o.x(), self.z() ^ o.z())
    }

    fn anticommutes(self, o: Pauli) -> bool {
        (self.x() && o.z()) ^ (self.z() && o.x())
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(s: &str) -> Option<Pauli> {
        match s {
            "I" => Some(Pauli::I),
            "X" => Some(Pauli::X),
            "Y" => Some(Pauli::Y),
            "Z" => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// A Pauli operator with phase quotiented out, stored as sorted
/// `(qubit, factor)` pairs without identity factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOp {
    factors: Vec<(u32, Pauli)>,
}

impl PauliOp {
    pub fn identity() -> Self {
        PauliOp::default()
    }

    pub fn single(q: u32, p: Pauli) -> Self {
        PauliOp::from_pairs([(q, p)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, Pauli)>) -> Self {
        let mut v: Vec<(u32, Pauli)> = pairs.into_iter().collect();
        v.sort_by_key(|f| f.0);
        let mut out: Vec<(u32, Pauli)> = Vec::with_capacity(v.len());
        for (q, p) in v {
            match out.last_mut() {
                Some(last) if last.0 == q => last.1 = last.1.mul(p),
                _ => out.push((q, p)),
            }
        }
        out.retain(|f| f.1 != Pauli::I);
        PauliOp { factors: out }
    }

    /// Convenience constructor: the same factor on every listed qubit.
    pub fn uniform(p: Pauli, qubits: impl IntoIterator<Item = u32>) -> Self {
        PauliOp::from_pairs(qubits.into_iter().map(|q| (q, p)))
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.factors.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Pauli)> + '_ {
        self.factors.iter().copied()
    }

    pub fn support(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.0).collect()
    }

    pub fn get(&self, q: u32) -> Pauli {
        self.factors.binary_search_by_key(&q, |f| f.0).map_or(Pauli::I, |i| self.factors[i].1)
    }

    pub fn max_qubit(&self) -> Option<u32> {
        self.factors.last().map(|f| f.0)
    }

    pub fn multiply(&self, other: &PauliOp) -> PauliOp {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let p = a[i].1.mul(b[j].1);
                if p != Pauli::I {
                    out.push((a[i].0, p));
                }
                i += 1;
                j += 1;
            }
        }
        PauliOp { factors: out }
    }

    pub fn mul_assign(&mut self, other: &PauliOp) {
        *self = self.multiply(other);
    }

    /// `true` iff the operators anticommute.
    pub fn anticommutes(&self, other: &PauliOp) -> bool {
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        let mut acc = false;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc ^= a[i].1.anticommutes(b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// The symplectic commutation bit: 0 commuting, 1 anticommuting.
    pub fn commutes(&self, other: &PauliOp) -> u8 {
        self.anticommutes(other) as u8
    }

    pub fn restrict(&self, r: &Region) -> PauliOp {
        PauliOp { factors: self.factors.iter().copied().filter(|f| r.contains(f.0)).collect() }
    }

    /// Symplectic vector with bit `2q` for X and `2q+1` for Z.
    pub fn to_symplectic(&self, n: usize) -> BitVec {
        let mut v = BitVec::zeros(2 * n);
        for &(q, p) in &self.factors {
            let q = q as usize;
            v.set(2 * q, p.x());
            v.set(2 * q + 1, p.z());
        }
        v
    }

    pub fn from_symplectic(v: &BitVec) -> PauliOp {
        let mut factors: Vec<(u32, Pauli)> = Vec::new();
        for i in v.ones() {
            let q = (i / 2) as u32;
            let p = if i % 2 == 0 { Pauli::X } else { Pauli::Z };
            match factors.last_mut() {
                Some(last) if last.0 == q => last.1 = last.1.mul(p),
                _ => factors.push((q, p)),
            }
        }
        PauliOp { factors }
    }

    /// Symplectic vector over the qubits of `r`, in region order.
    pub fn to_local(&self, r: &Region) -> BitVec {
        let mut v = BitVec::zeros(2 * r.len());
        for &(q, p) in &self.factors {
            if let Some(i) = r.position(q) {
                v.set(2 * i, p.x());
                v.set(2 * i + 1, p.z());
            }
        }
        v
    }

    pub fn from_local(v: &BitVec, r: &Region) -> PauliOp {
        let global = PauliOp::from_symplectic(v);
        PauliOp { factors: global.factors.into_iter().map(|(i, p)| (r.qubits()[i as usize], p)).collect() }
    }

    /// Apply a qubit relabeling.
    pub fn map_qubits(&self, f: impl Fn(u32) -> u32) -> PauliOp {
        PauliOp::from_pairs(self.factors.iter().map(|&(q, p)| (f(q), p)))
    }
}

/// Lattice description used in files and configs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LatticeSpec {
    Chain {
        sites: usize,
        #[serde(default = "one")]
        qubits_per_site: u32,
        #[serde(default)]
        periodic: bool,
    },
    ChainWithAncilla {
        x: (i64, i64),
        y: (i64, i64),
        #[serde(default)]
        period_y: Option<i64>,
    },
    Square {
        width: usize,
        height: usize,
        #[serde(default = "one")]
        qubits_per_site: u32,
    },
    HoneycombZigzag {
        width: usize,
        height: usize,
        #[serde(default)]
        periodic: bool,
    },
}

fn one() -> u32 {
    1
}

impl LatticeSpec {
    pub fn build(&self) -> Result<Arc<Lattice>> {
        let lat = match *self {
            LatticeSpec::Chain { sites, qubits_per_site, periodic } => Lattice::chain(sites, qubits_per_site, periodic),
            LatticeSpec::ChainWithAncilla { x, y, period_y } => {
                Lattice::half_integer_window(x, (2 * y.0, 2 * y.1), None, period_y.map(|p| 2 * p))
            }
            LatticeSpec::Square { width, height, qubits_per_site } => Lattice::square(width, height, qubits_per_site),
            LatticeSpec::HoneycombZigzag { width, height, periodic } => Lattice::honeycomb(width, height, periodic),
        };
        if lat.num_qubits() * 2 > crate::f2::MAX_COLS {
            return Err(Error::TooWide(lat.num_qubits() * 2));
        }
        Ok(Arc::new(lat))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn chain(n: usize) -> Lattice {
        Lattice::chain(n, 1, false)
    }

    #[test]
    fn products() {
        let x1 = PauliOp::single(1, Pauli::X);
        let z1 = PauliOp::single(1, Pauli::Z);
        assert!(x1.multiply(&x1).is_identity());
        assert_eq!(x1.multiply(&z1), PauliOp::single(1, Pauli::Y));
    }

    #[test]
    fn commutation() {
        let x1 = PauliOp::single(1, Pauli::X);
        let z1 = PauliOp::single(1, Pauli::Z);
        assert_eq!(x1.commutes(&z1), 1);
        let xx = PauliOp::uniform(Pauli::X, [1, 2]);
        let zz = PauliOp::uniform(Pauli::Z, [1, 2]);
        assert_eq!(xx.commutes(&zz), 0);
        // The conjugate pair of the translation circuit.
        let zz01 = PauliOp::uniform(Pauli::Z, [2, 3]);
        assert_eq!(zz01.commutes(&PauliOp::single(2, Pauli::X)), 1);
    }

    #[test]
    fn dressed_boundary_logical() {
        let lat = Lattice::half_integer_window((-2, 0), (-4, 8), None, None);
        let a = lat.parse("Z(0,1) Z(0,1.5)").unwrap();
        let b = lat.parse("X(0,2)").unwrap();
        let ab = a.multiply(&b);
        assert_eq!(lat.format(&ab), "Z(0,1) Z(0,1.5) X(0,2)");
        // Multiplying by the ancilla stabilizer Z(0,1.5) leaves Z(0,1) X(0,2).
        let anc = lat.parse("Z(0,1.5)").unwrap();
        assert_eq!(ab.multiply(&anc), lat.parse("Z(0,1)X(0,2)").unwrap());
    }

    #[test]
    fn restriction() {
        let xx = PauliOp::uniform(Pauli::X, [1, 2]);
        let r = Region::new(4, [1]);
        assert_eq!(xx.restrict(&r), PauliOp::single(1, Pauli::X));
        let lat = chain(4);
        assert_eq!(xx.restrict(&lat.full_region()), xx);
    }

    #[test]
    fn restriction_matches_hand_truncation() {
        let lat = Lattice::half_integer_window((-5, 0), (-2, 10), None, None);
        // A horizontal string crossing into the boundary column.
        let s = lat.parse("Y(-3,2) Y(-2,2) Y(-1,2) Y(0,2) Y(0,2.5)").unwrap();
        let col = lat.region_where(|c| c[0] == 0);
        assert_eq!(s.restrict(&col), lat.parse("Y(0,2) Y(0,2.5)").unwrap());
    }

    #[test]
    fn parse_examples() {
        let lat = Lattice::square(4, 4, 1);
        let p = lat.parse("X(0,1) Z(0,2)").unwrap();
        assert_eq!(p.weight(), 2);
        assert_eq!(p.get(lat.qubit_at(&[0, 2], 0).unwrap()), Pauli::X);
        assert_eq!(p.get(lat.qubit_at(&[0, 4], 0).unwrap()), Pauli::Z);
        assert!(lat.parse("").unwrap().is_identity());
        let c = chain(5);
        assert_eq!(c.parse("Y(3)").unwrap(), PauliOp::single(3, Pauli::Y));
    }

    #[test]
    fn parse_errors() {
        let c = chain(5);
        assert!(matches!(c.parse("Q(1)"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(c.parse("X(1) Z("), Err(Error::Syntax { .. })));
        assert!(matches!(c.parse("X(9)"), Err(Error::UnknownSite(_))));
        assert!(matches!(c.parse("X(0.25)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn multi_qubit_sites_round_trip() {
        let lat = Lattice::chain(3, 2, false);
        let p = lat.parse("X(1)#1 Z(2)").unwrap();
        assert_eq!(lat.format(&p), "X(1)#1 Z(2)");
    }

    #[test]
    fn json_round_trip() {
        let lat = Lattice::half_integer_window((-2, 0), (-4, 4), None, None);
        let p = lat.parse("X(0,1) Z(-1,-0.5)").unwrap();
        let j = lat.to_json(&p);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"site\":[-1,-0.5]"));
        let back: PauliJson = serde_json::from_str(&s).unwrap();
        assert_eq!(lat.from_json(&back).unwrap(), p);
    }

    #[test]
    fn neighborhoods() {
        let lat = chain(10);
        let r = Region::new(10, [4]);
        assert_eq!(lat.neighborhood(&r, 0), r);
        assert_eq!(lat.neighborhood(&r, 2).qubits(), &[3, 4, 5]);
        let ring = Lattice::chain(10, 1, true);
        assert_eq!(ring.neighborhood(&Region::new(10, [0]), 2).qubits(), &[0, 1, 9]);
        let g = Lattice::honeycomb(6, 4, true).with_metric(Metric::Graph);
        let v = g.qubit_at(&[6, 0], 0).unwrap();
        assert_eq!(g.neighborhood(&Region::new(24, [v]), 2).len(), 4);
    }

    #[test]
    fn honeycomb_is_trivalent_in_bulk() {
        let g = Lattice::honeycomb(12, 6, true);
        for s in 0..g.num_sites() {
            let r = g.sites()[s].coord[1] / 2;
            let deg = g.adjacency[s].len();
            if r != 0 && r != -5 {
                assert_eq!(deg, 3);
            }
        }
    }

    fn arb_op(n: u32) -> impl Strategy<Value = PauliOp> {
        prop::collection::vec((0..n, 0u8..4), 0..8).prop_map(|v| {
            PauliOp::from_pairs(v.into_iter().map(|(q, k)| (q, Pauli::from_bits(k & 1 == 1, k & 2 == 2))))
        })
    }

    proptest! {
        #[test]
        fn symplectic_form_is_bilinear(p in arb_op(12), q in arb_op(12), r in arb_op(12)) {
            prop_assert_eq!(p.multiply(&q).commutes(&r), p.commutes(&r) ^ q.commutes(&r));
            prop_assert_eq!(p.commutes(&p), 0);
            let mut sup = p.support();
            sup.extend(q.support());
            prop_assert!(p.multiply(&q).support().iter().all(|s| sup.contains(s)));
            let n = 12;
            let (vp, vq) = (p.to_symplectic(n), q.to_symplectic(n));
            let mut swapped = BitVec::zeros(2 * n);
            for i in vq.ones() { swapped.set(i ^ 1, true); }
            prop_assert_eq!(vp.dot(&swapped) as u8, p.commutes(&q));
            prop_assert_eq!(PauliOp::from_symplectic(&vp), p);
        }

        #[test]
        fn format_parse_round_trip(p in arb_op(30)) {
            let lat = Lattice::half_integer_window((0, 2), (-2, 7), None, None);
            prop_assert_eq!(lat.parse(&lat.format(&p)).unwrap(), p);
        }

        #[test]
        fn triangle_inequality(a in 0u32..48, b in 0u32..48, c in 0u32..48) {
            let lat = Lattice::honeycomb(8, 6, true);
            prop_assert!(lat.distance(a, c) <= lat.distance(a, b) + lat.distance(b, c));
            prop_assert_eq!(lat.distance(a, b), lat.distance(b, a));
            let g = lat.clone().with_metric(Metric::Graph);
            prop_assert!(g.distance(a, c) <= g.distance(a, b) + g.distance(b, c));
        }
    }
}
