//! Command execution: one library operation per command, producing a JSON
//! report and an exit status.
//!
//! Exit status 0 means the property holds or the construction is valid, 1
//! that it fails (the report carries the evidence), 2 that the input is
//! malformed or violates a precondition.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use recfan_core::{
    aff, cone_complex, extendable_subdivision, fixtures, recession_complex, roundtrip_check,
    theorem14_pipeline, toric_datum, Completeness, ComplexVerdict, GeometryError, MWReport,
    PolyhedralComplex,
};

use crate::format::{self, complex_json, polyhedron_json, toric_json, vector_json, FormatError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Validate,
    Recession,
    Cone,
    Aff,
    CheckMw,
    CheckConnected,
    CheckComplete,
    Theorem14,
    Subdivide,
    Roundtrip,
    ToricDatum,
    Fixtures,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Recession => "recession",
            Command::Cone => "cone",
            Command::Aff => "aff",
            Command::CheckMw => "check-mw",
            Command::CheckConnected => "check-connected",
            Command::CheckComplete => "check-complete",
            Command::Theorem14 => "theorem14",
            Command::Subdivide => "subdivide",
            Command::Roundtrip => "roundtrip",
            Command::ToricDatum => "toric-datum",
            Command::Fixtures => "fixtures",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    /// Report file; for `fixtures`, the directory to write into.
    pub output: Option<PathBuf>,
    pub witnesses: bool,
    pub max_dim: usize,
}

pub const DEFAULT_MAX_DIM: usize = 6;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: i32,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    fn new(status: i32, report: Value, summary: String) -> Self {
        Outcome {
            status,
            report,
            summary,
        }
    }
}

/// A status-2 outcome.
struct Refusal {
    kind: &'static str,
    predicate: Option<&'static str>,
    message: String,
    verdict: Option<Value>,
}

impl Refusal {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        Refusal {
            kind,
            predicate: None,
            message: message.into(),
            verdict: None,
        }
    }

    fn geometry(e: GeometryError) -> Self {
        let predicate = match e {
            GeometryError::NotComplete => Some("complete"),
            GeometryError::NotStronglyConvex => Some("strongly_convex"),
            GeometryError::InvalidComplex => Some("valid"),
            GeometryError::NotConic => Some("conic"),
            GeometryError::OutsideUpperHalfSpace => Some("upper_half_space"),
            _ => None,
        };
        Refusal {
            kind: "precondition",
            predicate,
            message: e.to_string(),
            verdict: None,
        }
    }
}

impl From<GeometryError> for Refusal {
    fn from(e: GeometryError) -> Self {
        Refusal::geometry(e)
    }
}

pub fn verdict_json(v: &ComplexVerdict) -> Value {
    match v {
        ComplexVerdict::Valid => json!({ "status": "valid" }),
        ComplexVerdict::MissingFace { cell, face } => json!({
            "status": "missing_face",
            "cell": polyhedron_json(cell),
            "face": polyhedron_json(face),
        }),
        ComplexVerdict::BadPair {
            first,
            second,
            intersection,
        } => json!({
            "status": "bad_pair",
            "first": polyhedron_json(first),
            "second": polyhedron_json(second),
            "intersection": polyhedron_json(intersection),
        }),
    }
}

fn status_name(v: &ComplexVerdict) -> &'static str {
    match v {
        ComplexVerdict::Valid => "valid",
        ComplexVerdict::MissingFace { .. } => "missing_face",
        ComplexVerdict::BadPair { .. } => "bad_pair",
    }
}

fn constructed_json(c: &PolyhedralComplex) -> Value {
    json!({
        "dim": c.dim(),
        "cells": c.cells().iter().map(polyhedron_json).collect::<Vec<_>>(),
        "verdict": verdict_json(c.verdict()),
        "fan": c.is_fan(),
    })
}

fn mw_json(r: &MWReport, witnesses: bool) -> Value {
    let mut m = Map::new();
    m.insert("holds".into(), json!(r.holds));
    if let Some(s) = &r.sigma {
        m.insert("sigma".into(), polyhedron_json(s));
    }
    if let Some(d) = &r.delta_pieces {
        m.insert(
            "delta_pieces".into(),
            Value::Array(d.iter().map(polyhedron_json).collect()),
        );
    }
    if witnesses {
        if let Some((p, u)) = &r.failure_witness {
            m.insert("witness".into(), json!({ "p": vector_json(p), "u": vector_json(u) }));
        }
    }
    Value::Object(m)
}

fn bool_status(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

struct Loaded {
    complex: PolyhedralComplex,
    echo: Value,
}

fn load(cfg: &RunConfig) -> Result<Loaded, Refusal> {
    let path = cfg
        .input
        .as_ref()
        .ok_or_else(|| Refusal::new("usage", "an input file is required"))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Refusal::new("io", format!("cannot read {}: {e}", path.display())))?;
    let (dim, mut cells) = format::parse_complex(&text).map_err(|e| match e {
        FormatError::Json { .. } => Refusal::new("parse", e.to_string()),
        _ => Refusal::new("invalid_input", e.to_string()),
    })?;
    if dim > cfg.max_dim {
        return Err(Refusal::new(
            "dimension_guard",
            format!("dimension {dim} exceeds the limit {}", cfg.max_dim),
        ));
    }
    let complex = PolyhedralComplex::build(dim, cells.clone())
        .map_err(|e| Refusal::new("invalid_input", e.to_string()))?;
    cells.sort();
    cells.dedup();
    Ok(Loaded {
        complex,
        echo: complex_json(dim, &cells),
    })
}

fn require_valid(c: &PolyhedralComplex) -> Result<(), Refusal> {
    if c.is_valid() {
        Ok(())
    } else {
        Err(Refusal {
            kind: "precondition",
            predicate: Some("valid"),
            message: "input is not a polyhedral complex".into(),
            verdict: Some(verdict_json(c.verdict())),
        })
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let result = match cfg.command {
        Command::Fixtures => write_fixtures(cfg),
        _ => load(cfg).and_then(|l| execute(cfg, l)),
    };
    match result {
        Ok(o) => o,
        Err(r) => {
            let mut err = Map::new();
            err.insert("kind".into(), json!(r.kind));
            err.insert("message".into(), json!(r.message));
            if let Some(p) = r.predicate {
                err.insert("predicate".into(), json!(p));
            }
            if let Some(v) = r.verdict {
                err.insert("verdict".into(), v);
            }
            let summary = format!("{}: refused: {}", cfg.command.name(), r.message);
            Outcome::new(
                2,
                json!({ "command": cfg.command.name(), "error": Value::Object(err) }),
                summary,
            )
        }
    }
}

fn execute(cfg: &RunConfig, loaded: Loaded) -> Result<Outcome, Refusal> {
    let Loaded { complex: c, echo } = loaded;
    let name = cfg.command.name();
    let mut report = Map::new();
    report.insert("command".into(), json!(name));
    let (status, summary) = match cfg.command {
        Command::Validate => {
            let v = c.verdict();
            report.insert("verdict".into(), verdict_json(v));
            report.insert("cells".into(), json!(c.len()));
            report.insert("maximal_cells".into(), json!(c.maximal_cells().len()));
            report.insert("conic".into(), json!(c.is_conic()));
            report.insert("strongly_convex".into(), json!(c.is_strongly_convex()));
            report.insert("fan".into(), json!(c.is_fan()));
            (bool_status(v.is_valid()), format!("{name}: {}", status_name(v)))
        }
        Command::Recession | Command::Cone => {
            require_valid(&c)?;
            let out = if cfg.command == Command::Recession {
                recession_complex(&c)?
            } else {
                cone_complex(&c)?
            };
            merge(&mut report, constructed_json(&out));
            (
                bool_status(out.is_valid()),
                format!("{name}: {} cells, {}", out.len(), status_name(out.verdict())),
            )
        }
        Command::Aff => {
            let out = aff(&c)?;
            merge(&mut report, constructed_json(&out));
            report.insert("empty".into(), json!(out.is_empty()));
            (
                bool_status(out.is_valid()),
                format!("{name}: {} cells, {}", out.len(), status_name(out.verdict())),
            )
        }
        Command::CheckMw => {
            require_valid(&c)?;
            let r = c.check_minkowski_weyl()?;
            report.insert("mw".into(), mw_json(&r, cfg.witnesses));
            (bool_status(r.holds), format!("{name}: holds={}", r.holds))
        }
        Command::CheckConnected => {
            let s = c.support();
            let comps = s.components();
            let connected = comps.len() <= 1;
            report.insert("connected".into(), json!(connected));
            report.insert(
                "components".into(),
                Value::Array(
                    comps
                        .iter()
                        .map(|g| Value::Array(g.iter().map(|&i| polyhedron_json(&s.pieces()[i])).collect()))
                        .collect(),
                ),
            );
            (
                bool_status(connected),
                format!("{name}: {} component(s)", comps.len()),
            )
        }
        Command::CheckComplete => {
            require_valid(&c)?;
            let comp = c.completeness();
            let kind = match &comp {
                Completeness::Whole => json!("whole"),
                Completeness::UpperHalfSpace => json!("upper_half_space"),
                Completeness::Incomplete(_) => Value::Null,
            };
            report.insert("complete".into(), json!(comp.is_complete()));
            report.insert("kind".into(), kind);
            if let (true, Completeness::Incomplete(w)) = (cfg.witnesses, &comp) {
                report.insert("witness".into(), vector_json(w));
            }
            (
                bool_status(comp.is_complete()),
                format!("{name}: complete={}", comp.is_complete()),
            )
        }
        Command::Theorem14 => {
            require_valid(&c)?;
            let r = theorem14_pipeline(&c)?;
            report.insert(
                "hypotheses".into(),
                json!({
                    "connected": r.hypotheses.connected,
                    "mw": mw_json(&r.hypotheses.mw, cfg.witnesses),
                }),
            );
            report.insert("rec_complex".into(), constructed_json(&r.rec_complex));
            report.insert("cone_complex".into(), constructed_json(&r.cone_complex));
            report.insert("support_identity_rec".into(), json!(r.support_identity_rec));
            report.insert("flags".into(), json!({ "rational": r.rational, "fans": r.fans }));
            (
                bool_status(r.conclusions_hold()),
                format!(
                    "{name}: connected={} mw={} rec={} cone={} support_identity={}",
                    r.hypotheses.connected,
                    r.hypotheses.mw.holds,
                    status_name(r.rec_complex.verdict()),
                    status_name(r.cone_complex.verdict()),
                    r.support_identity_rec
                ),
            )
        }
        Command::Subdivide => {
            require_valid(&c)?;
            let s = extendable_subdivision(&c)?;
            let verified = s.verify(&c);
            report.insert("dim".into(), json!(c.dim()));
            report.insert(
                "cells".into(),
                Value::Array(s.refined.cells().iter().map(polyhedron_json).collect()),
            );
            report.insert("extension".into(), complex_json(c.dim(), s.extension.cells()));
            report.insert("verified".into(), json!(verified));
            (
                bool_status(verified),
                format!(
                    "{name}: {} cells in the subdivision, {} in the extension",
                    s.refined.len(),
                    s.extension.len()
                ),
            )
        }
        Command::Roundtrip => {
            let holds = roundtrip_check(&c)?;
            report.insert("holds".into(), json!(holds));
            (bool_status(holds), format!("{name}: holds={holds}"))
        }
        Command::ToricDatum => {
            let d = toric_datum(&c)?;
            merge(&mut report, toric_json(&d));
            (0, format!("{name}: {} cones in dimension {}", d.cones.len(), d.dim))
        }
        Command::Fixtures => unreachable!("handled before loading"),
    };
    report.insert("input".into(), echo);
    Ok(Outcome::new(status, Value::Object(report), summary))
}

fn merge(report: &mut Map<String, Value>, v: Value) {
    if let Value::Object(m) = v {
        report.extend(m);
    }
}

pub const FIXTURE_FILES: [&str; 4] = [
    "example17.json",
    "example1-case1.json",
    "example1-case2.json",
    "complete-square-complex.json",
];

/// The bundled fixtures as `(file name, document)`.
pub fn fixture_documents() -> Vec<(&'static str, Value)> {
    let square = fixtures::complete_square_complex();
    let square_max: Vec<_> = square.maximal_cells().into_iter().cloned().collect();
    vec![
        (FIXTURE_FILES[0], complex_json(3, &fixtures::example17_cells())),
        (FIXTURE_FILES[1], complex_json(3, &fixtures::example1_case1_cells())),
        (FIXTURE_FILES[2], complex_json(3, &fixtures::example1_case2_cells())),
        (FIXTURE_FILES[3], complex_json(2, &square_max)),
    ]
}

fn write_fixtures(cfg: &RunConfig) -> Result<Outcome, Refusal> {
    let dir: &Path = cfg.output.as_deref().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)
        .map_err(|e| Refusal::new("io", format!("cannot create {}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (file, doc) in fixture_documents() {
        let path = dir.join(file);
        fs::write(&path, format::to_text(&doc))
            .map_err(|e| Refusal::new("io", format!("cannot write {}: {e}", path.display())))?;
        written.push(json!(path.display().to_string()));
    }
    let summary = format!("fixtures: wrote {} files to {}", written.len(), dir.display());
    Ok(Outcome::new(
        0,
        json!({ "command": "fixtures", "written": written }),
        summary,
    ))
}
