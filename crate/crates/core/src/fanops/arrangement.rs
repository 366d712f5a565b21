//! Hyperplane arrangements and extendable subdivisions.
//!
//! The cells of an arrangement are the closures of the nonempty sign-vector
//! regions. A region with prescribed signs is nonempty iff a relative
//! interior point of its closure satisfies the strict signs: an inequality
//! tight at a relative-interior point is tight on the whole closure. Signs
//! are assigned one hyperplane at a time and empty prefixes are pruned.

use alloc::vec::Vec;

use crate::complex::PolyhedralComplex;
use crate::error::{GeometryError, Result};
use crate::polyhedron::{Halfspace, Polyhedron};

/// The complete complex cut out by `hyperplanes` (boundaries of the given
/// halfspaces; orientation is irrelevant).
pub fn arrangement_complex(dim: usize, hyperplanes: &[Halfspace]) -> Result<PolyhedralComplex> {
    if dim == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    for h in hyperplanes {
        if h.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: h.dim(),
            });
        }
    }
    Ok(arrangement_unchecked(dim, hyperplanes))
}

pub(crate) fn arrangement_unchecked(dim: usize, hyperplanes: &[Halfspace]) -> PolyhedralComplex {
    let mut planes: Vec<Halfspace> = hyperplanes
        .iter()
        .map(|h| {
            let f = h.flipped();
            if f < *h {
                f
            } else {
                h.clone()
            }
        })
        .collect();
    planes.sort();
    planes.dedup();
    let mut out = Vec::new();
    let mut search = Search {
        planes: &planes,
        ineqs: Vec::new(),
        out: &mut out,
    };
    search.run(0, Polyhedron::whole_space(dim));
    PolyhedralComplex::trusted(dim, out)
}

struct Search<'a> {
    planes: &'a [Halfspace],
    /// Halfspaces with a strict sign.
    ineqs: Vec<Halfspace>,
    out: &'a mut Vec<Polyhedron>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, cell: Polyhedron) {
        if k == self.planes.len() {
            self.out.push(cell);
            return;
        }
        let h = &self.planes[k];
        // Skip the branches the current cell already rules out.
        let above = cell.within(h);
        let below = cell.within(&h.flipped());
        if above && below {
            self.run(k + 1, cell);
            return;
        }
        for side in [h.clone(), h.flipped()] {
            if cell.within(&side) {
                // Strict on the relative interior already.
                self.ineqs.push(side);
                self.run(k + 1, cell.clone());
                self.ineqs.pop();
                continue;
            }
            if cell.within(&side.flipped()) {
                continue;
            }
            let child = cell.restricted(core::slice::from_ref(&side), &[]);
            self.ineqs.push(side);
            if self.strict(&child) {
                self.run(k + 1, child);
            }
            self.ineqs.pop();
        }
        if !above && !below {
            let child = cell.restricted(&[], core::slice::from_ref(h));
            if self.strict(&child) {
                self.run(k + 1, child);
            }
        }
    }

    /// The region of `cell` with the current strict signs is nonempty.
    fn strict(&self, cell: &Polyhedron) -> bool {
        if cell.is_empty() {
            return false;
        }
        let p = cell.relative_interior_point_unchecked();
        self.ineqs.iter().all(|h| h.slack(&p).is_positive())
    }
}

/// A refinement `refined` of a complex with the same support, contained as
/// a subcomplex in the complete complex `extension`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionResult {
    pub refined: PolyhedralComplex,
    pub extension: PolyhedralComplex,
}

impl SubdivisionResult {
    /// Checks that `refined` has the support of `original`, refines it, is a
    /// subcomplex of `extension`, and that `extension` is complete.
    pub fn verify(&self, original: &PolyhedralComplex) -> bool {
        let orig_support = original.support();
        let new_support = self.refined.support();
        let same_support = new_support
            .pieces()
            .iter()
            .all(|c| orig_support.covers(c).is_covered())
            && orig_support
                .pieces()
                .iter()
                .all(|c| new_support.covers(c).is_covered());
        let refines = self
            .refined
            .cells()
            .iter()
            .all(|c| original.cells().iter().any(|o| o.contains_unchecked(c)));
        let sub = self
            .refined
            .cells()
            .iter()
            .all(|c| self.extension.cells().binary_search(c).is_ok());
        same_support && refines && sub && self.extension.is_complete()
    }
}

/// Subdivides a complex by the arrangement of all hyperplanes bounding its
/// maximal cells. Every face of a maximal cell is cut out by those
/// hyperplanes, so each cell of the complex is a union of arrangement
/// cells; the arrangement cells inside some cell form the subdivision.
pub fn extendable_subdivision(complex: &PolyhedralComplex) -> Result<SubdivisionResult> {
    complex.require_valid()?;
    let maximal = complex.maximal_cells();
    let mut planes = Vec::new();
    for c in &maximal {
        planes.extend(c.inequalities().iter().cloned());
        planes.extend(c.equalities().iter().cloned());
    }
    let extension = arrangement_unchecked(complex.dim(), &planes);
    let cells: Vec<Polyhedron> = extension
        .cells()
        .iter()
        .filter(|c| maximal.iter().any(|m| m.contains_unchecked(c)))
        .cloned()
        .collect();
    Ok(SubdivisionResult {
        refined: PolyhedralComplex::trusted(complex.dim(), cells),
        extension,
    })
}
