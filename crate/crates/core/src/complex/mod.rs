//! Polyhedral complexes, polyhedral sets and the checks run on them.
//!
//! A complex is validated from its maximal cells. A collection of nonempty
//! polyhedra is a complex iff
//!
//! * the intersection of any two maximal cells is empty or a face of both,
//! * every other cell is a face of each maximal cell containing it, and
//! * every face of a maximal cell is present.
//!
//! For cells `A ⊂ M_A`, `B ⊂ M_B` the intersection `F = M_A ∩ M_B` is a
//! common face, `A ∩ F` and `B ∩ F` are faces of `F`, and their
//! intersection `A ∩ B` is then a face of both `A` and `B`; so the three
//! checks imply the pairwise axiom for all cells.
//!
//! Connectedness of a support is decided on the intersection graph of its
//! pieces. The pieces are closed, so two unions of pieces with no common
//! point are at positive distance; the union is connected iff the graph is.

mod cover;
mod mw;

pub use cover::Coverage;
pub use mw::MWReport;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{GeometryError, Result};
use crate::exactq::{QVector, Rational};
use crate::polyhedron::{Halfspace, Polyhedron};

/// Outcome of validating a collection of cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexVerdict {
    Valid,
    /// `face` is a face of `cell` but is not in the collection.
    MissingFace { cell: Polyhedron, face: Polyhedron },
    /// `intersection = first ∩ second` is not a face of both.
    BadPair {
        first: Polyhedron,
        second: Polyhedron,
        intersection: Polyhedron,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Valid,
    MissingFace,
    BadPair,
}

impl ComplexVerdict {
    pub fn status(&self) -> VerdictStatus {
        match self {
            ComplexVerdict::Valid => VerdictStatus::Valid,
            ComplexVerdict::MissingFace { .. } => VerdictStatus::MissingFace,
            ComplexVerdict::BadPair { .. } => VerdictStatus::BadPair,
        }
    }

    pub fn is_valid(&self) -> bool {
        *self == ComplexVerdict::Valid
    }
}

/// How the support of a complex fills its ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// The support is all of `Q^n`.
    Whole,
    /// The complex is conic and its support is the halfspace `t >= 0`
    /// of the last coordinate.
    UpperHalfSpace,
    /// A point of the relevant space outside the support.
    Incomplete(QVector),
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        !matches!(self, Completeness::Incomplete(_))
    }
}

/// A finite union of nonempty polyhedra in `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralSet {
    dim: usize,
    pieces: Vec<Polyhedron>,
}

impl PolyhedralSet {
    /// Empty pieces are dropped and the rest sorted and deduplicated.
    pub fn new(dim: usize, pieces: Vec<Polyhedron>) -> Result<Self> {
        if dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        for p in &pieces {
            if p.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        Ok(Self::new_unchecked(dim, pieces))
    }

    pub(crate) fn new_unchecked(dim: usize, mut pieces: Vec<Polyhedron>) -> Self {
        pieces.retain(|p| !p.is_empty());
        pieces.sort();
        pieces.dedup();
        PolyhedralSet { dim, pieces }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[Polyhedron] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains_point(&self, p: &QVector) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        Ok(self.pieces.iter().any(|q| q.holds_at(p)))
    }

    /// Connected components of the intersection graph, as sorted lists of
    /// piece indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.pieces.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            for j in i + 1..n {
                if find(&mut parent, i) == find(&mut parent, j) {
                    continue;
                }
                if !self.pieces[i].intersect_unchecked(&self.pieces[j]).is_empty() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of_group: Vec<usize> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            match root_of_group.iter().position(|&x| x == r) {
                Some(g) => groups[g].push(i),
                None => {
                    root_of_group.push(r);
                    groups.push(alloc::vec![i]);
                }
            }
        }
        groups
    }

    /// The empty set counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// A finite collection of nonempty polyhedra in `Q^dim`, kept sorted and
/// deduplicated, together with its validation verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralComplex {
    dim: usize,
    cells: Vec<Polyhedron>,
    maximal: Vec<usize>,
    verdict: ComplexVerdict,
}

/// Closes `cells` under faces and validates the result.
pub fn build_complex(dim: usize, cells: Vec<Polyhedron>) -> Result<(PolyhedralComplex, ComplexVerdict)> {
    let c = PolyhedralComplex::build(dim, cells)?;
    let v = c.verdict.clone();
    Ok((c, v))
}

impl PolyhedralComplex {
    /// Closes `cells` under faces and validates the result.
    pub fn build(dim: usize, cells: Vec<Polyhedron>) -> Result<Self> {
        check_cells(dim, &cells)?;
        let mut all = BTreeSet::new();
        for c in &cells {
            all.extend(c.faces());
        }
        Ok(Self::checked(dim, all.into_iter().collect()))
    }

    /// Validates `cells` as given, without adding faces.
    pub fn from_cells(dim: usize, cells: Vec<Polyhedron>) -> Result<Self> {
        check_cells(dim, &cells)?;
        Ok(Self::checked(dim, cells))
    }

    pub(crate) fn checked(dim: usize, mut cells: Vec<Polyhedron>) -> Self {
        cells.sort();
        cells.dedup();
        let maximal = maximal_indices(&cells);
        let verdict = check(&cells, &maximal);
        PolyhedralComplex {
            dim,
            cells,
            maximal,
            verdict,
        }
    }

    /// For collections that are complexes by construction.
    pub(crate) fn trusted(dim: usize, mut cells: Vec<Polyhedron>) -> Self {
        cells.sort();
        cells.dedup();
        let maximal = maximal_indices(&cells);
        PolyhedralComplex {
            dim,
            cells,
            maximal,
            verdict: ComplexVerdict::Valid,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn verdict(&self) -> &ComplexVerdict {
        &self.verdict
    }

    pub fn is_valid(&self) -> bool {
        self.verdict.is_valid()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(GeometryError::InvalidComplex)
        }
    }

    /// Cells not contained in another cell, in canonical order.
    pub fn maximal_cells(&self) -> Vec<&Polyhedron> {
        self.maximal.iter().map(|&i| &self.cells[i]).collect()
    }

    /// Every cell of a complex is rational.
    pub fn is_rational(&self) -> bool {
        true
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.cells.iter().all(Polyhedron::is_strongly_convex)
    }

    pub fn is_conic(&self) -> bool {
        self.cells.iter().all(Polyhedron::is_cone)
    }

    /// Valid, conic and strongly convex.
    pub fn is_fan(&self) -> bool {
        self.is_valid() && self.is_conic() && self.is_strongly_convex()
    }

    /// The union of the cells, represented by the maximal cells.
    pub fn support(&self) -> PolyhedralSet {
        PolyhedralSet::new_unchecked(self.dim, self.maximal_cells().into_iter().cloned().collect())
    }

    pub fn completeness(&self) -> Completeness {
        let support = self.support();
        let witness = match support.covers(&Polyhedron::whole_space(self.dim)) {
            Coverage::Covered => return Completeness::Whole,
            Coverage::Uncovered(w) => w,
        };
        if self.is_conic() {
            let upper = Halfspace::new(QVector::unit(self.dim, self.dim - 1), Rational::zero())
                .expect("unit normal");
            if self.cells.iter().all(|c| c.within(&upper)) {
                let half = Polyhedron::whole_space(self.dim).restricted(&[upper], &[]);
                return match support.covers(&half) {
                    Coverage::Covered => Completeness::UpperHalfSpace,
                    Coverage::Uncovered(w) => Completeness::Incomplete(w),
                };
            }
        }
        Completeness::Incomplete(witness)
    }

    pub fn is_complete(&self) -> bool {
        self.completeness().is_complete()
    }
}

fn check_cells(dim: usize, cells: &[Polyhedron]) -> Result<()> {
    if dim == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    for c in cells {
        if c.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: c.dim(),
            });
        }
        if c.is_empty() {
            return Err(GeometryError::EmptyCell);
        }
    }
    Ok(())
}

/// Indices of the cells not contained in another; `cells` must be
/// deduplicated.
fn maximal_indices(cells: &[Polyhedron]) -> Vec<usize> {
    (0..cells.len())
        .filter(|&i| {
            !cells.iter().enumerate().any(|(j, c)| {
                j != i && c.dimension() >= cells[i].dimension() && c.contains_unchecked(&cells[i])
            })
        })
        .collect()
}

fn check(cells: &[Polyhedron], maximal: &[usize]) -> ComplexVerdict {
    for (k, &i) in maximal.iter().enumerate() {
        for &j in &maximal[k + 1..] {
            let (a, b) = (&cells[i], &cells[j]);
            let meet = a.intersect_unchecked(b);
            if !meet.is_empty() && !(a.is_face_of(&meet) && b.is_face_of(&meet)) {
                return ComplexVerdict::BadPair {
                    first: a.clone(),
                    second: b.clone(),
                    intersection: meet,
                };
            }
        }
    }
    let is_max: BTreeSet<usize> = maximal.iter().copied().collect();
    let mut contained = alloc::vec![0usize; cells.len()];
    for (i, c) in cells.iter().enumerate() {
        if is_max.contains(&i) {
            continue;
        }
        for &m in maximal {
            let big = &cells[m];
            if big.contains_unchecked(c) {
                if !big.is_face_of(c) {
                    return ComplexVerdict::BadPair {
                        first: c.clone(),
                        second: big.clone(),
                        intersection: c.clone(),
                    };
                }
                contained[m] += 1;
            }
        }
    }
    for &m in maximal {
        let big = &cells[m];
        // Distinct cells inside `big` are distinct faces by now, so a
        // count match means every face is present.
        if contained[m] + 1 == big.face_handles().len() {
            continue;
        }
        for face in big.faces() {
            if cells.binary_search(&face).is_err() {
                return ComplexVerdict::MissingFace {
                    cell: big.clone(),
                    face,
                };
            }
        }
    }
    ComplexVerdict::Valid
}
