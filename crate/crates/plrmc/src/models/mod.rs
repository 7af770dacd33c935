// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Built-in circuits as cyclic sequences of instantaneous stabilizer groups.

pub mod chains;
pub mod config;
pub mod glue;
pub mod hh;
pub mod wpt;

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::mqca::Interface;
use crate::pauli::{Half, Lattice, PauliOp};
use crate::rev::{analyze_pair, conjugate_bases_from, evolve_logical, ConjugateBases, TransitionReport};
use crate::stab::StabilizerGroup;
use crate::{Error, Result};

pub(crate) use crate::pauli::ser_half;

#[derive(Clone, Debug, Serialize)]
pub struct TransitionEntry {
    pub from: usize,
    pub to: usize,
    /// Both groups have the same span.
    pub idle: bool,
    #[serde(flatten)]
    pub report: TransitionReport,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub steps: usize,
    pub periodic: bool,
    #[serde(serialize_with = "ser_half")]
    pub radius: Half,
    pub ok: bool,
    /// Indices of failing transitions.
    pub failures: Vec<usize>,
    pub transitions: Vec<TransitionEntry>,
}

#[derive(Debug)]
struct Verified {
    report: VerifyReport,
    bases: Vec<Option<ConjugateBases>>,
}

/// A periodic (or one-shot) measurement circuit given by its ISGs.
#[derive(Clone, Debug)]
pub struct IsgSequence {
    name: String,
    lattice: Arc<Lattice>,
    steps: Vec<StabilizerGroup>,
    periodic: bool,
    radius: Half,
    interface: Option<Interface>,
    boundary_basis: Option<Vec<PauliOp>>,
    window: Option<Half>,
    cache: Arc<OnceLock<Verified>>,
}

impl IsgSequence {
    /// `radius` bounds the conjugate-basis search (doubled units).
    pub fn new(name: impl Into<String>, steps: Vec<StabilizerGroup>, radius: Half) -> Result<Self> {
        let first = steps.first().ok_or_else(|| Error::Invalid("empty sequence".into()))?;
        let lattice = first.lattice().clone();
        if steps.iter().any(|s| **s.lattice() != *lattice) {
            return Err(Error::Invalid("steps live on different lattices".into()));
        }
        Ok(IsgSequence {
            name: name.into(),
            lattice,
            steps,
            periodic: true,
            radius,
            interface: None,
            boundary_basis: None,
            window: None,
            cache: Arc::new(OnceLock::new()),
        })
    }

    /// Marks the sequence as a one-shot chain: no transition back to step 0.
    pub fn one_shot(mut self) -> Self {
        self.periodic = false;
        self.cache = Arc::new(OnceLock::new());
        self
    }

    pub fn with_interface(mut self, interface: Interface) -> Self {
        self.interface = Some(interface);
        self
    }

    /// Preferred basis of interface logicals for the base group.
    pub fn with_boundary_basis(mut self, basis: Vec<PauliOp>) -> Self {
        self.boundary_basis = Some(basis);
        self
    }

    /// Overrides the sweep window used for logical extraction.
    pub fn with_window(mut self, window: Half) -> Self {
        self.window = Some(window);
        self
    }

    pub fn with_radius(mut self, radius: Half) -> Self {
        self.radius = radius;
        self.cache = Arc::new(OnceLock::new());
        self
    }

    /// Re-times a periodic sequence: `schedule[k]` is the step used at time
    /// `k`. Cyclically consecutive entries either repeat a step (an idle
    /// step) or advance by one, and the schedule advances exactly one period.
    pub fn with_schedule(&self, schedule: &[usize]) -> Result<Self> {
        let t = self.steps.len();
        let bad = |m: String| Err(Error::Invalid(format!("schedule {schedule:?}: {m}")));
        if !self.periodic || schedule.first() != Some(&0) {
            return bad("needs a periodic sequence and must start at step 0".into());
        }
        if let Some(s) = schedule.iter().find(|&&s| s >= t) {
            return bad(format!("step {s} out of range"));
        }
        let mut advances = 0;
        for k in 0..schedule.len() {
            let (a, b) = (schedule[k], schedule[(k + 1) % schedule.len()]);
            if (a + 1) % t == b && t > 1 {
                advances += 1;
            } else if a != b {
                return bad(format!("{a} -> {b} is neither idle nor the next step"));
            }
        }
        if advances != t && t > 1 {
            return bad(format!("advances {advances} steps instead of {t}"));
        }
        let mut out = self.clone();
        out.steps = schedule.iter().map(|&s| self.steps[s].clone()).collect();
        out.cache = Arc::new(OnceLock::new());
        Ok(out)
    }

    /// Moves the sequence to a lattice with mapped coordinates. The
    /// interface, if any, is rebuilt along `axis` of the new lattice.
    pub fn remapped(
        &self,
        f: impl Fn(&[i64]) -> Vec<i64>,
        periods: Vec<Option<crate::pauli::Period>>,
        axis: usize,
    ) -> Result<Self> {
        let (lat, qmap) = self.lattice.remapped(f, periods)?;
        let lat = Arc::new(lat);
        let steps = self
            .steps
            .iter()
            .map(|s| s.relabeled(lat.clone(), |q| qmap[q as usize]))
            .collect::<Result<Vec<_>>>()?;
        let mut out = IsgSequence::new(self.name.clone(), steps, self.radius)?;
        out.periodic = self.periodic;
        if let Some(i) = &self.interface {
            let region = crate::pauli::Region::new(lat.num_qubits(), i.region.qubits().iter().map(|&q| qmap[q as usize]));
            out.interface = Some(Interface::along_axis(&lat, region, axis));
        }
        out.boundary_basis =
            self.boundary_basis.as_ref().map(|b| b.iter().map(|p| p.map_qubits(|q| qmap[q as usize])).collect());
        Ok(out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn steps(&self) -> &[StabilizerGroup] {
        &self.steps
    }

    pub fn period(&self) -> usize {
        self.steps.len()
    }

    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    pub fn radius(&self) -> Half {
        self.radius
    }

    pub fn interface(&self) -> Option<&Interface> {
        self.interface.as_ref()
    }

    pub fn boundary_basis(&self) -> Option<&[PauliOp]> {
        self.boundary_basis.as_deref()
    }

    /// `(from, to)` step indices of every transition in order.
    pub fn transitions(&self) -> Vec<(usize, usize)> {
        let t = self.steps.len();
        if self.periodic {
            (0..t).map(|i| (i, (i + 1) % t)).collect()
        } else {
            (0..t.saturating_sub(1)).map(|i| (i, i + 1)).collect()
        }
    }

    fn verified(&self) -> &Verified {
        self.cache.get_or_init(|| self.compute())
    }

    fn compute(&self) -> Verified {
        let n = self.lattice.num_qubits();
        let mut entries = Vec::new();
        let mut bases = Vec::new();
        for (i, j) in self.transitions() {
            let (a, b) = (&self.steps[i], &self.steps[j]);
            if a.generators() == b.generators() || a.same_span(b) {
                entries.push(TransitionEntry {
                    from: i,
                    to: j,
                    idle: true,
                    report: TransitionReport {
                        reversible: true,
                        locally_reversible: true,
                        radius_used: Some(0),
                        no_enlargement: true,
                        matrix_invertible: true,
                        witness: None,
                        detail: String::new(),
                    },
                    witness: None,
                });
                bases.push(Some(ConjugateBases::empty(n)));
                continue;
            }
            let (report, cb) = match analyze_pair(a, b) {
                Err(e) => (
                    TransitionReport {
                        reversible: false,
                        locally_reversible: false,
                        radius_used: None,
                        no_enlargement: false,
                        matrix_invertible: false,
                        witness: None,
                        detail: e.to_string(),
                    },
                    None,
                ),
                Ok(an) => {
                    let reversible = an.no_enlargement && an.matrix_invertible;
                    let cb = if reversible { conjugate_bases_from(a, b, &an, self.radius) } else { None };
                    let detail = if !reversible {
                        match &an.witness {
                            Some(w) => format!("{} commutes with the other group but is not in it", self.lattice.format(w)),
                            None => "quotient commutation matrix is singular".to_string(),
                        }
                    } else if cb.is_none() {
                        format!("no conjugate bases within radius {}", crate::pauli::fmt_half(self.radius))
                    } else {
                        String::new()
                    };
                    let report = TransitionReport {
                        reversible,
                        locally_reversible: cb.is_some(),
                        radius_used: cb.as_ref().map(|c| c.radius),
                        no_enlargement: an.no_enlargement,
                        matrix_invertible: an.matrix_invertible,
                        witness: an.witness,
                        detail,
                    };
                    (report, cb)
                }
            };
            let witness = report.witness.as_ref().map(|w| self.lattice.format(w));
            entries.push(TransitionEntry { from: i, to: j, idle: false, report, witness });
            bases.push(cb);
        }
        let failures: Vec<usize> =
            entries.iter().enumerate().filter(|(_, e)| !e.report.locally_reversible).map(|(k, _)| k).collect();
        let report = VerifyReport {
            name: self.name.clone(),
            steps: self.steps.len(),
            periodic: self.periodic,
            radius: self.radius,
            ok: failures.is_empty(),
            failures,
            transitions: entries,
        };
        Verified { report, bases }
    }

    /// Reversibility and conjugate-basis search on every transition.
    pub fn verify(&self) -> &VerifyReport {
        &self.verified().report
    }

    /// Conjugate bases of every transition; fails if any transition lacks them.
    pub fn conjugate_bases(&self) -> Result<Vec<&ConjugateBases>> {
        let v = self.verified();
        v.bases
            .iter()
            .enumerate()
            .map(|(k, b)| {
                b.as_ref().ok_or_else(|| {
                    Error::NotReversible(format!("transition {k}: {}", v.report.transitions[k].report.detail))
                })
            })
            .collect()
    }

    /// Operators after each transition, starting with `p` itself.
    pub fn trace(&self, p: &PauliOp) -> Result<Vec<PauliOp>> {
        let bases = self.conjugate_bases()?;
        let mut out = vec![p.clone()];
        let mut cur = p.clone();
        for (k, (i, j)) in self.transitions().into_iter().enumerate() {
            cur = evolve_logical(&cur, &self.steps[i], &self.steps[j], bases[k])?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// Image of a logical of step 0 after the full sequence.
    pub fn evolve(&self, p: &PauliOp) -> Result<PauliOp> {
        Ok(self.trace(p)?.pop().expect("trace is nonempty"))
    }

    /// Sweep window for logical extraction (doubled units).
    pub fn default_window(&self) -> Half {
        self.window.unwrap_or_else(|| (4 * self.steps[0].locality_radius()).max(12))
    }
}
