//! Export of the cone complex of a complete strongly convex complex as a
//! fan with primitive integer ray generators.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::cone_complex;
use crate::complex::PolyhedralComplex;
use crate::error::{GeometryError, Result};
use crate::exactq::primitive_integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricCone {
    /// Primitive integer generators of the extreme rays.
    pub rays: Vec<Vec<BigInt>>,
    /// Indices of the cones having this cone as a proper face.
    pub faces_of: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricDatum {
    pub dim: usize,
    pub cones: Vec<ToricCone>,
    pub complete: bool,
    pub strongly_convex: bool,
    pub proper: bool,
}

/// The fan of a complete strongly convex complex. Fails with
/// `InvalidComplex`, `NotStronglyConvex` or `NotComplete`, checked in that
/// order.
pub fn toric_datum(complex: &PolyhedralComplex) -> Result<ToricDatum> {
    complex.require_valid()?;
    if !complex.is_strongly_convex() {
        return Err(GeometryError::NotStronglyConvex);
    }
    if complex.completeness() != crate::complex::Completeness::Whole {
        return Err(GeometryError::NotComplete);
    }
    let fan = cone_complex(complex)?;
    if !fan.is_fan() {
        return Err(GeometryError::InvalidComplex);
    }
    let cells = fan.cells();
    let cones = cells
        .iter()
        .enumerate()
        .map(|(i, c)| ToricCone {
            rays: c.rays().iter().map(|r| primitive_integer(r.coords())).collect(),
            faces_of: (0..cells.len())
                .filter(|&j| j != i && cells[j].is_face_of(c))
                .collect(),
        })
        .collect();
    Ok(ToricDatum {
        dim: fan.dim(),
        cones,
        complete: true,
        strongly_convex: true,
        proper: true,
    })
}
