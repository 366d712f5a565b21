//! Constructions on complexes: recession and cone complexes, the height-one
//! slice of a conic complex, hyperplane arrangements, extendable
//! subdivisions and fan export.

mod arrangement;
mod toric;

pub use arrangement::{arrangement_complex, extendable_subdivision, SubdivisionResult};
pub use toric::{toric_datum, ToricCone, ToricDatum};

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{Completeness, MWReport, PolyhedralComplex, PolyhedralSet};
use crate::error::{GeometryError, Result};
use crate::exactq::{QVector, Rational};
use crate::polyhedron::{Polyhedron, VRep};

/// `σ × {0}` in one dimension higher.
pub fn embed_at_zero(sigma: &Polyhedron) -> Polyhedron {
    let n = sigma.dim() + 1;
    let ext = |v: &QVector| v.extended(Rational::zero());
    Polyhedron::from_vrep_unchecked(VRep::new(
        n,
        vec![QVector::zeros(n)],
        sigma.rays().iter().map(ext).collect(),
        sigma.lines().iter().map(ext).collect(),
    ))
}

fn sorted_unique(mut cells: Vec<Polyhedron>) -> Vec<Polyhedron> {
    cells.sort();
    cells.dedup();
    cells
}

/// The recession cones of all cells, validated without adding faces.
pub fn recession_complex(complex: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    complex.require_valid()?;
    let cells = sorted_unique(
        complex
            .cells()
            .iter()
            .map(Polyhedron::recession_cone_unchecked)
            .collect(),
    );
    Ok(PolyhedralComplex::checked(complex.dim(), cells))
}

/// The cones over the cells at height one together with the recession
/// cones at height zero, validated without adding faces.
pub fn cone_complex(complex: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    complex.require_valid()?;
    let mut cells: Vec<Polyhedron> = complex
        .cells()
        .iter()
        .map(Polyhedron::lift_cone_unchecked)
        .collect();
    cells.extend(
        complex
            .cells()
            .iter()
            .map(|c| embed_at_zero(&c.recession_cone_unchecked())),
    );
    Ok(PolyhedralComplex::checked(complex.dim() + 1, sorted_unique(cells)))
}

/// Whether `cells` form a fan: a valid, conic, strongly convex complex.
pub fn is_fan(dim: usize, cells: Vec<Polyhedron>) -> Result<bool> {
    Ok(PolyhedralComplex::from_cells(dim, cells)?.is_fan())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub connected: bool,
    pub mw: MWReport,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.connected && self.mw.holds
    }
}

/// Everything the recession/cone pipeline computes for one complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem14Report {
    pub hypotheses: Hypotheses,
    pub rec_complex: PolyhedralComplex,
    pub cone_complex: PolyhedralComplex,
    /// `|rec(Π)| = rec(|Π|)`.
    pub support_identity_rec: bool,
    pub rational: bool,
    /// Both constructed complexes are fans.
    pub fans: bool,
}

impl Theorem14Report {
    pub fn conclusions_hold(&self) -> bool {
        self.rec_complex.is_valid() && self.cone_complex.is_valid() && self.support_identity_rec
    }
}

pub fn theorem14_pipeline(complex: &PolyhedralComplex) -> Result<Theorem14Report> {
    complex.require_valid()?;
    let support = complex.support();
    let connected = support.is_connected();
    let mw = complex.check_minkowski_weyl()?;
    let rec = recession_complex(complex)?;
    let cone = cone_complex(complex)?;
    let support_identity_rec = match &mw.sigma {
        Some(sigma) => {
            rec.cells().iter().all(|c| sigma.contains_unchecked(c))
                && PolyhedralSet::new_unchecked(complex.dim(), rec.cells().to_vec())
                    .covers(sigma)
                    .is_covered()
        }
        // Every rec(Λ_j) must lie in rec(|Π|), i.e. Λ_i + rec(Λ_j) ⊂ |Π|.
        None => support.pieces().iter().all(|sj| {
            let sigma = sj.recession_cone_unchecked();
            support
                .pieces()
                .iter()
                .all(|li| support.covers(&li.minkowski_sum_unchecked(&sigma)).is_covered())
        }),
    };
    let fans = rec.is_fan() && cone.is_fan();
    Ok(Theorem14Report {
        hypotheses: Hypotheses { connected, mw },
        rec_complex: rec,
        cone_complex: cone,
        support_identity_rec,
        rational: true,
        fans,
    })
}

/// The slice at height one of a conic complex lying in `t >= 0`, closed
/// under faces. Returns the empty complex when no cell reaches `t = 1`.
pub fn aff(sigma: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    sigma.require_valid()?;
    if sigma.dim() < 2 {
        return Err(GeometryError::ZeroDimension);
    }
    if !sigma.is_conic() {
        return Err(GeometryError::NotConic);
    }
    let n = sigma.dim() - 1;
    let t = sigma.dim() - 1;
    for c in sigma.cells() {
        if c.rays().iter().any(|r| r[t].is_negative()) || c.lines().iter().any(|l| !l[t].is_zero()) {
            return Err(GeometryError::OutsideUpperHalfSpace);
        }
    }
    let one = Rational::one();
    let slices: Vec<Polyhedron> = sigma
        .cells()
        .iter()
        .map(|c| c.affine_slice(&one).expect("dimension at least 2"))
        .filter(|s| !s.is_empty())
        .collect();
    PolyhedralComplex::build(n, slices)
}

/// Equality of canonical cell lists.
fn same_cells(a: &PolyhedralComplex, b: &PolyhedralComplex) -> bool {
    a.dim() == b.dim() && a.cells() == b.cells()
}

/// The inverse-correspondence checks for a complete complex.
///
/// For a complex complete in `Q^n` both `aff(c(Π)) = Π` and
/// `c(aff(c(Π))) = c(Π)` are checked. For a conic complex whose support is
/// `t >= 0`, `c(aff(Σ)) = Σ` is checked.
pub fn roundtrip_check(complex: &PolyhedralComplex) -> Result<bool> {
    complex.require_valid()?;
    match complex.completeness() {
        Completeness::Whole => {
            let sigma = cone_complex(complex)?;
            if !sigma.is_valid() {
                return Ok(false);
            }
            let back = aff(&sigma)?;
            Ok(back.is_valid() && same_cells(&back, complex) && same_cells(&cone_complex(&back)?, &sigma))
        }
        Completeness::UpperHalfSpace => {
            let slice = aff(complex)?;
            Ok(slice.is_valid() && same_cells(&cone_complex(&slice)?, complex))
        }
        Completeness::Incomplete(_) => Err(GeometryError::NotComplete),
    }
}
