// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! The `plrmc` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::decompose::{ising_decompose, DecompositionReport};
use crate::models::config::{Built, Model, ModelConfig, MODELS};
use crate::models::hh::HhBoundary;
use crate::models::wpt::WptBoundary;
use crate::models::IsgSequence;
use crate::mqca::{index, mqca_index, period_map, safe_separation, Frame, IndexOptions, IndexResult, MapOptions, MqcaMap};
use crate::pauli::{Half, PauliOp};
use crate::rev::{is_topological, TopoOptions};
use crate::stab::GroupFile;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "plrmc", version, about = "Periodic locally reversible Pauli measurement circuits")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Model config file (TOML or JSON); inline flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Seed for random models and sampled checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Extra clearance around index cuts, in lattice units.
    #[arg(long, global = true)]
    pub margin: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

/// Inline model selection; every flag overrides the config file.
#[derive(Debug, Default, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub model: Option<String>,
    #[arg(long)]
    pub boundary: Option<String>,
    #[arg(long)]
    pub width: Option<usize>,
    #[arg(long)]
    pub height: Option<usize>,
    /// Sites of a 1D model, or cells of a random circuit.
    #[arg(short = 'n', long = "sites")]
    pub n: Option<usize>,
    /// Conjugate-basis search radius, in lattice units.
    #[arg(long)]
    pub radius: Option<i64>,
    /// Sweep window for logical extraction, in lattice units.
    #[arg(long)]
    pub window: Option<i64>,
    /// Re-timing with idle steps, e.g. `0,0,1,2`.
    #[arg(long, value_delimiter = ',')]
    pub schedule: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every transition is locally reversible.
    Verify(ModelArgs),
    /// MQCA index of the boundary automorphism of one period.
    Index {
        #[command(flatten)]
        model: ModelArgs,
        /// Left cut, in lattice units (half-integers allowed).
        #[arg(long, allow_hyphen_values = true, requires = "cut_a")]
        cut_b: Option<String>,
        /// Right cut, in lattice units (half-integers allowed).
        #[arg(long, allow_hyphen_values = true, requires = "cut_b")]
        cut_a: Option<String>,
    },
    /// Ising-chain normal form of a two-site-local group on an open chain.
    Decompose {
        /// Stabilizer-group file (JSON).
        file: PathBuf,
    },
    /// Follow a logical operator through every step.
    LogicalTrace {
        #[command(flatten)]
        model: ModelArgs,
        /// Starting operator, e.g. `Z(0,3) X(0,4)`.
        #[arg(long, conflicts_with = "element")]
        start: Option<String>,
        /// Starting operator by position in the interface basis.
        #[arg(long)]
        element: Option<usize>,
        #[arg(long, default_value_t = 1)]
        cycles: usize,
    },
    /// Glued double-WPT strip or HH and WPT blend.
    Glue(ModelArgs),
    /// Built-in models and their boundaries.
    ListModels,
    /// Check the topological conditions on one step's group.
    CheckTopological {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 0)]
        step: usize,
        /// Locality length, in lattice units.
        #[arg(long)]
        ell: Option<i64>,
        /// Largest test box side, in lattice units.
        #[arg(long)]
        max_box: Option<i64>,
        #[arg(long, default_value_t = 6)]
        samples: usize,
        /// Also test boxes near open window edges.
        #[arg(long)]
        allow_edges: bool,
    },
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit code of an error: configuration and parse errors are usage errors.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Syntax { .. } | Error::UnknownSite(_) | Error::TooWide(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// A finished command: JSON result, text rendering, success flag.
struct Outcome {
    result: Value,
    text: String,
    ok: bool,
}

/// Parses arguments, runs, and writes the report to `out`. Returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let (name, config) = match resolve(&cli) {
        Ok(c) => c,
        Err(e) => {
            let code = exit_code(&e);
            if cli.output == Output::Json {
                let name = command_name(&cli.command);
                let report = json!({ "command": name, "config": null, "ok": false, "error": e.to_string(), "exit_code": code });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"));
            }
            let _ = writeln!(err, "error: {e}");
            return code;
        }
    };
    let outcome = match execute(&cli, config.as_ref()) {
        Ok(o) => o,
        Err(e) => {
            let code = exit_code(&e);
            if cli.output == Output::Json {
                let report = json!({ "command": name, "config": config, "ok": false, "error": e.to_string(), "exit_code": code });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"));
            }
            let _ = writeln!(err, "error: {e}");
            return code;
        }
    };
    match cli.output {
        Output::Json => {
            let report = json!({ "command": name, "config": config, "ok": outcome.ok, "result": outcome.result });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"));
        }
        Output::Text => {
            let _ = write!(out, "{}", outcome.text);
        }
    }
    if outcome.ok {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    }
}

fn model_args(cmd: &Command) -> Option<&ModelArgs> {
    match cmd {
        Command::Verify(m) | Command::Glue(m) => Some(m),
        Command::Index { model, .. } | Command::LogicalTrace { model, .. } | Command::CheckTopological { model, .. } => {
            Some(model)
        }
        Command::Decompose { .. } | Command::ListModels => None,
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Verify(_) => "verify",
        Command::Index { .. } => "index",
        Command::Decompose { .. } => "decompose",
        Command::LogicalTrace { .. } => "logical-trace",
        Command::Glue(_) => "glue",
        Command::ListModels => "list-models",
        Command::CheckTopological { .. } => "check-topological",
    }
}

/// Merges the config file, inline flags and global flags into a resolved
/// model config (for commands that build a model).
fn resolve(cli: &Cli) -> crate::Result<(&'static str, Option<ModelConfig>)> {
    let name = command_name(&cli.command);
    let Some(m) = model_args(&cli.command) else { return Ok((name, None)) };
    let mut cfg = match &cli.config {
        Some(p) => ModelConfig::load(p)?,
        None => ModelConfig::default(),
    };
    if let Some(v) = &m.model {
        cfg.model = v.clone();
    }
    if matches!(cli.command, Command::Glue(_)) && cfg.model.is_empty() {
        cfg.model = "double-wpt".into();
    }
    if cfg.model.is_empty() {
        return Err(Error::Config(format!("no model given; use --model or --config (one of {MODELS:?})")));
    }
    macro_rules! over {
        ($($f:ident),*) => { $( if m.$f.is_some() { cfg.$f = m.$f.clone(); } )* };
    }
    over!(boundary, width, height, n, radius, window, schedule);
    if cli.margin.is_some() {
        cfg.margin_override = cli.margin;
    }
    if cli.seed.is_some() && cfg.model == "random" {
        cfg.seed = cli.seed;
    }
    if matches!(cli.command, Command::Glue(_)) && !matches!(cfg.model.as_str(), "double-wpt" | "blend") {
        return Err(Error::Config(format!("glue builds double-wpt or blend, not {:?}", cfg.model)));
    }
    Ok((name, Some(cfg.resolved()?)))
}

fn execute(cli: &Cli, cfg: Option<&ModelConfig>) -> crate::Result<Outcome> {
    match &cli.command {
        Command::ListModels => Ok(list_models()),
        Command::Decompose { file } => decompose(file),
        cmd => {
            let cfg = cfg.expect("model commands resolve a config");
            let model = cfg.build()?;
            match cmd {
                Command::Verify(_) => verify(&circuit(model)?),
                Command::Index { cut_a, cut_b, .. } => {
                    let cuts = match (cut_a, cut_b) {
                        (Some(a), Some(b)) => Some((parse_len(a)?, parse_len(b)?)),
                        _ => None,
                    };
                    index_cmd(model, cfg, cuts)
                }
                Command::LogicalTrace { start, element, cycles, .. } => {
                    trace(&circuit(model)?, start.as_deref(), *element, *cycles)
                }
                Command::Glue(_) => glue(&circuit(model)?, cfg),
                Command::CheckTopological { step, ell, max_box, samples, allow_edges, .. } => {
                    let opts = TopoOptions {
                        max_box: max_box.map(|b| 2 * b),
                        samples: *samples,
                        seed: cli.seed.unwrap_or(0),
                        allow_edges: *allow_edges || cfg.model == "double-wpt",
                    };
                    topological(&circuit(model)?, *step, ell.map(|l| 2 * l), &opts)
                }
                _ => unreachable!("handled above"),
            }
        }
    }
}

fn circuit(model: Model) -> crate::Result<Built> {
    match model {
        Model::Circuit(b) => Ok(b),
        Model::Map(_) => Err(Error::Config("this model is an abstract map with no circuit; only `index` applies".into())),
    }
}

/// Lattice-unit length (integer or `.5`) to doubled units.
fn parse_len(s: &str) -> crate::Result<Half> {
    let v: f64 = s.parse().map_err(|_| Error::Config(format!("bad length {s:?}")))?;
    let d = 2.0 * v;
    if d.fract() != 0.0 {
        return Err(Error::Config(format!("length {s} is not a multiple of 1/2")));
    }
    Ok(d as Half)
}

fn verify(b: &Built) -> crate::Result<Outcome> {
    let rep = b.seq.verify();
    let mut text = format!("{}: {} steps, {}\n", rep.name, rep.steps, if rep.periodic { "periodic" } else { "one-shot" });
    for t in &rep.transitions {
        let status = if t.report.locally_reversible {
            match t.report.radius_used {
                Some(r) if !t.idle => format!("locally reversible (radius {})", crate::pauli::fmt_half(r)),
                _ => "idle".to_string(),
            }
        } else if t.report.reversible {
            format!("reversible but not locally: {}", t.report.detail)
        } else {
            format!("not reversible: {}", t.report.detail)
        };
        let _ = writeln!(text, "  {} -> {}: {status}", t.from, t.to);
    }
    let _ = writeln!(text, "{}", if rep.ok { "PASS" } else { "FAIL" });
    Ok(Outcome { result: serde_json::to_value(rep).expect("json"), text, ok: rep.ok })
}

#[derive(Serialize)]
struct IndexReport {
    #[serde(flatten)]
    index: IndexResult,
    basis_size: usize,
    #[serde(serialize_with = "crate::pauli::ser_half")]
    range: Half,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_index_times_two: Option<i64>,
}

fn index_cmd(model: Model, cfg: &ModelConfig, cuts: Option<(Half, Half)>) -> crate::Result<Outcome> {
    let (map, expected): (MqcaMap, Option<i64>) = match model {
        Model::Map(m) => (m, None),
        Model::Circuit(b) => (period_map(&b.seq, None, &MapOptions::default())?, b.expected_index_times_two),
    };
    let opts = IndexOptions { margin: cfg.margin(), reach: None };
    let r = match cuts {
        Some((a, b)) => mqca_index(&map, a, b, &opts)?,
        None => index(&map, &opts)?,
    };
    let ok = r.margins_ok && expected.is_none_or(|e| e == r.index_times_two);
    let mut text = format!(
        "index {} (z2 {}) at cuts b={} a={}, dims {:?}\n",
        r.index,
        r.z2,
        crate::pauli::fmt_half(r.cut_b),
        crate::pauli::fmt_half(r.cut_a),
        r.dims
    );
    if !r.separated {
        let _ = writeln!(text, "warning: cuts closer than {}; the value may depend on their position", crate::pauli::fmt_half(safe_separation(&map)));
    }
    if !r.margins_ok {
        let _ = writeln!(text, "margin {} does not fit the interface", cfg.margin_override.unwrap_or(0));
    }
    if let Some(e) = expected {
        let _ = writeln!(text, "expected {}", crate::mqca::fmt_index(e));
    }
    let rep = IndexReport { basis_size: map.len(), range: map.range(), expected_index_times_two: expected, index: r };
    Ok(Outcome { result: serde_json::to_value(&rep).expect("json"), text, ok })
}

/// Logicals of the base group on the interface: the boundary basis if the
/// model has one, otherwise a sweep.
fn interface_basis(seq: &IsgSequence) -> crate::Result<Vec<PauliOp>> {
    if let Some(b) = seq.boundary_basis() {
        return Ok(b.to_vec());
    }
    let iface = seq.interface().ok_or_else(|| Error::Invalid(format!("{} has no interface", seq.name())))?;
    Ok(Frame::sweep(seq.steps()[0].clone(), iface.clone(), seq.default_window())?.elements().to_vec())
}

fn trace(b: &Built, start: Option<&str>, element: Option<usize>, cycles: usize) -> crate::Result<Outcome> {
    let seq = &b.seq;
    let lat = seq.lattice();
    let p = match (start, element) {
        (Some(s), _) => lat.parse(s)?,
        (None, Some(i)) => {
            let basis = interface_basis(seq)?;
            basis.get(i).cloned().ok_or_else(|| Error::Config(format!("element {i} of {} out of range", basis.len())))?
        }
        (None, None) => return Err(Error::Config("give --start or --element".into())),
    };
    let base = &seq.steps()[0];
    if let Some(&i) = base.anticommuting(&p).first() {
        return Err(Error::NotLogical(format!("{} anticommutes with {}", lat.format(&p), lat.format(&base.generators()[i]))));
    }
    let mut steps = vec![json!({ "step": 0, "operator": lat.format(&p) })];
    let mut text = format!("{:>4}  {}\n", 0, lat.format(&p));
    let mut cur = p.clone();
    let t = seq.period();
    for c in 0..cycles.max(1) {
        let tr = seq.trace(&cur)?;
        for (k, op) in tr.iter().enumerate().skip(1) {
            let step = c * t + k;
            steps.push(json!({ "step": step, "operator": lat.format(op) }));
            let _ = writeln!(text, "{step:>4}  {}", lat.format(op));
        }
        cur = tr.last().expect("nonempty").clone();
        if !seq.is_periodic() {
            break;
        }
    }
    let returns = base.contains(&cur.multiply(&p));
    let _ = writeln!(text, "returns to start: {returns}");
    Ok(Outcome { result: json!({ "start": lat.format(&p), "steps": steps, "returns_to_start": returns }), text, ok: true })
}

fn index_of(seq: &IsgSequence) -> crate::Result<IndexResult> {
    index(&period_map(seq, None, &MapOptions::default())?, &IndexOptions::default())
}

fn glue(b: &Built, cfg: &ModelConfig) -> crate::Result<Outcome> {
    let seq = &b.seq;
    let rep = seq.verify();
    let glued = b.glued.as_ref().expect("glued models carry their edge");
    let window = if cfg.model == "blend" { 24 } else { seq.default_window() };
    let edge = Frame::sweep(seq.steps()[0].clone(), glued.clone(), window)?;
    let mut result = json!({
        "name": seq.name(),
        "verify_ok": rep.ok,
        "glued_interface_logicals": edge.len(),
    });
    let mut text = format!(
        "{}: verify {}, logicals on the glued interface {}\n",
        seq.name(),
        if rep.ok { "PASS" } else { "FAIL" },
        edge.len()
    );
    let mut ok = rep.ok && edge.is_empty();
    if let Some(sh) = &b.sheets {
        let strip = index_of(seq)?;
        let sheets = [index_of(&sh[0])?, index_of(&sh[1])?];
        let sum = sheets[0].index_times_two + sheets[1].index_times_two;
        let _ = writeln!(
            text,
            "strip index {} = {} + {} ({})",
            strip.index,
            sheets[0].index,
            sheets[1].index,
            if sum == strip.index_times_two { "additive" } else { "NOT additive" }
        );
        ok &= sum == strip.index_times_two;
        result["strip_index"] = serde_json::to_value(&strip).expect("json");
        result["sheet_indices"] = serde_json::to_value(&sheets).expect("json");
        result["additive"] = json!(sum == strip.index_times_two);
    }
    Ok(Outcome { result, text, ok })
}

fn topological(b: &Built, step: usize, ell: Option<Half>, opts: &TopoOptions) -> crate::Result<Outcome> {
    let seq = &b.seq;
    let g = seq.steps().get(step).ok_or_else(|| Error::Config(format!("step {step} out of range")))?;
    let ell = ell.unwrap_or_else(|| g.locality_radius().max(2));
    let bulk = b.bulk.clone().unwrap_or_else(|| seq.lattice().full_region());
    let rep = is_topological(g, &bulk, ell, opts)?;
    let lat = seq.lattice();
    let witness = rep.witness.as_ref().map(|(c, p)| json!({ "condition": c, "operator": lat.format(p) }));
    let mut text = format!(
        "{} step {step}: {} ({} boxes)\n",
        seq.name(),
        if rep.topological { "topological" } else { "not topological" },
        rep.boxes_checked
    );
    if let Some((c, p)) = &rep.witness {
        let _ = writeln!(text, "condition {c} fails on {}", lat.format(p));
    }
    let result = json!({
        "topological": rep.topological,
        "boxes_checked": rep.boxes_checked,
        "ell": if ell % 2 == 0 { json!(ell / 2) } else { json!(ell as f64 / 2.0) },
        "witness": witness,
    });
    Ok(Outcome { result, text, ok: rep.topological })
}

fn decompose(file: &PathBuf) -> crate::Result<Outcome> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Config(format!("{}: {e}", file.display())))?;
    let f: GroupFile = serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", file.display())))?;
    let g = f.build()?;
    let d = ising_decompose(&g)?;
    let rep: DecompositionReport = d.report();
    let mut text = String::new();
    for c in &rep.chains {
        let _ = writeln!(text, "chain sites {}..{}: {}", c.first_site, c.last_site, c.qubits.join(" "));
    }
    for [a, b] in &rep.bell_pairs {
        let _ = writeln!(text, "bell pair {a} {b}");
    }
    for q in &rep.free_qubits {
        let _ = writeln!(text, "single Z {q}");
    }
    let _ = writeln!(text, "clifford {}", if rep.identity { "identity" } else { "nontrivial" });
    Ok(Outcome { result: serde_json::to_value(&rep).expect("json"), text, ok: true })
}

fn list_models() -> Outcome {
    let boundaries = |m: &str| -> Vec<&'static str> {
        match m {
            "wpt" => WptBoundary::ALL.iter().map(|b| b.name()).collect(),
            "double-wpt" => vec![WptBoundary::RightR.name(), WptBoundary::RightRReversed.name()],
            "hh" => HhBoundary::ALL.iter().map(|b| b.name()).collect(),
            _ => Vec::new(),
        }
    };
    let mut models = Vec::new();
    let mut text = String::new();
    for m in MODELS {
        let defaults = if m == "custom" { None } else { ModelConfig::named(m).resolved().ok() };
        let b = boundaries(m);
        let _ = writeln!(text, "{m:<15} {}", b.join(" "));
        models.push(json!({ "model": m, "boundaries": b, "defaults": defaults }));
    }
    Outcome { result: json!({ "models": models }), text, ok: true }
}
