//! JSON encoding of polyhedra, complexes and fan data.
//!
//! Rationals are always written as strings `"p"` or `"p/q"`. On input,
//! JSON integers are accepted as well; floats are rejected.

use serde::de::{self, Deserializer};
use serde::Deserialize;
use serde_json::{json, Value};

use recfan_core::{
    GeometryError, HRep, Halfspace, Polyhedron, QVector, Rational, ToricDatum, VRep,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cell {cell}: {source}")]
    Cell {
        cell: usize,
        #[source]
        source: GeometryError,
    },
    #[error("cell {cell} has dimension {found}, complex has dimension {expected}")]
    CellDim {
        cell: usize,
        expected: usize,
        found: usize,
    },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let mut message = e.to_string();
        if let Some(i) = message.rfind(" at line ") {
            message.truncate(i);
        }
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

struct Q(Rational);

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d).map_err(|_| de::Error::custom("expected a rational string like \"3/4\""))? {
            Raw::Int(n) => Ok(Q(Rational::from(n))),
            Raw::Str(s) => s.parse().map(Q).map_err(de::Error::custom),
        }
    }
}

#[derive(Deserialize)]
struct HalfspaceDoc {
    normal: Vec<Q>,
    offset: Q,
}

#[derive(Deserialize)]
struct CellDoc {
    dim: Option<usize>,
    inequalities: Option<Vec<HalfspaceDoc>>,
    equalities: Option<Vec<HalfspaceDoc>>,
    vertices: Option<Vec<Vec<Q>>>,
    rays: Option<Vec<Vec<Q>>>,
    lines: Option<Vec<Vec<Q>>>,
}

#[derive(Deserialize)]
struct ComplexDoc {
    dim: usize,
    cells: Vec<CellDoc>,
}

fn vector(v: Vec<Q>) -> QVector {
    QVector::new(v.into_iter().map(|q| q.0).collect())
}

fn halfspaces(list: Option<Vec<HalfspaceDoc>>) -> Result<Vec<Halfspace>, GeometryError> {
    list.unwrap_or_default()
        .into_iter()
        .map(|h| Halfspace::new(vector(h.normal), h.offset.0))
        .collect()
}

fn vectors(list: Option<Vec<Vec<Q>>>) -> Vec<QVector> {
    list.unwrap_or_default().into_iter().map(vector).collect()
}

/// Halfspace data wins when present; otherwise the generators are used.
/// A cell with neither is the whole space.
fn cell_from_doc(dim: usize, doc: CellDoc) -> Result<Polyhedron, GeometryError> {
    if doc.inequalities.is_some() || doc.equalities.is_some() || doc.vertices.is_none() {
        let ineqs = halfspaces(doc.inequalities)?;
        let eqs = halfspaces(doc.equalities)?;
        Polyhedron::from_hrep(HRep::new(dim, ineqs, eqs))
    } else {
        Polyhedron::from_vrep(VRep::new(
            dim,
            vectors(doc.vertices),
            vectors(doc.rays),
            vectors(doc.lines),
        ))
    }
}

/// A complex document: `{"dim": n, "cells": [...]}`. Extra keys are
/// ignored, so reports that carry `dim` and `cells` can be read back.
pub fn parse_complex(text: &str) -> Result<(usize, Vec<Polyhedron>), FormatError> {
    let doc: ComplexDoc = serde_json::from_str(text)?;
    let dim = doc.dim;
    let cells = doc
        .cells
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if let Some(found) = c.dim {
                if found != dim {
                    return Err(FormatError::CellDim {
                        cell: i,
                        expected: dim,
                        found,
                    });
                }
            }
            cell_from_doc(dim, c).map_err(|source| FormatError::Cell { cell: i, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((dim, cells))
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn vector_json(v: &QVector) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

fn halfspace_json(h: &Halfspace) -> Value {
    json!({ "normal": vector_json(h.normal()), "offset": rational(h.offset()) })
}

pub fn polyhedron_json(p: &Polyhedron) -> Value {
    json!({
        "dim": p.dim(),
        "inequalities": p.inequalities().iter().map(halfspace_json).collect::<Vec<_>>(),
        "equalities": p.equalities().iter().map(halfspace_json).collect::<Vec<_>>(),
        "vertices": p.vertices().iter().map(vector_json).collect::<Vec<_>>(),
        "rays": p.rays().iter().map(vector_json).collect::<Vec<_>>(),
        "lines": p.lines().iter().map(vector_json).collect::<Vec<_>>(),
    })
}

pub fn complex_json(dim: usize, cells: &[Polyhedron]) -> Value {
    json!({ "dim": dim, "cells": cells.iter().map(polyhedron_json).collect::<Vec<_>>() })
}

pub fn toric_json(d: &ToricDatum) -> Value {
    let cones: Vec<Value> = d
        .cones
        .iter()
        .map(|c| {
            let rays: Vec<Value> = c
                .rays
                .iter()
                .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect();
            json!({ "rays": rays, "faces_of": c.faces_of })
        })
        .collect();
    json!({
        "dim": d.dim,
        "cones": cones,
        "complete": d.complete,
        "strongly_convex": d.strongly_convex,
        "proper": d.proper,
    })
}

/// Pretty-printed with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
