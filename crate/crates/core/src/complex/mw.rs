//! Deciding whether a support splits as `Δ + σ` with `Δ` a finite union of
//! polytopes and `σ` a convex cone.
//!
//! Let `Λ_i` be the maximal cells, `σ_i = rec(Λ_i)`, `Δ_i` the convex hull of
//! the vertices of `Λ_i`, and `τ` the cone generated by all `σ_i`. The
//! support `E` has the decomposition iff
//!
//! 1. `τ ⊂ ∪ σ_i`, and
//! 2. `Δ_i + τ ⊂ E` for every `i`.
//!
//! If both hold, `E = ∪ (Δ_i + σ_i) ⊂ ∪ Δ_i + τ ⊂ E`. Conversely, if
//! `E = Δ + σ` then `rec_p(E) = σ` for every `p ∈ E`; each `σ_i` lies in
//! `σ`, and every `u ∈ σ` lies in some `σ_i` because the tail of a ray in
//! `E` eventually stays in a single cell; so `σ = ∪ σ_i = τ` and both
//! conditions hold.
//!
//! The same argument shows the decomposition exists iff
//! `Λ_i + σ_j ⊂ E` for all `i, j`. A failing pair yields the witness: an
//! uncovered point `w = x + u` with `x ∈ Λ_i`, `u ∈ σ_j`; the ray along `u`
//! stays in `E` from any point of `Λ_j` but leaves it from `x`.

use alloc::vec;
use alloc::vec::Vec;

use super::{Coverage, PolyhedralComplex, PolyhedralSet};
use crate::error::Result;
use crate::exactq::QVector;
use crate::polyhedron::{Polyhedron, VRep};

/// Outcome of the decomposition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWReport {
    pub holds: bool,
    /// The cone `σ` when the decomposition exists.
    pub sigma: Option<Polyhedron>,
    /// The polytopes `Δ_i` when the decomposition exists.
    pub delta_pieces: Option<Vec<Polyhedron>>,
    /// `(p, u)` with `u ∈ rec_p(E)` but `u ∉ rec(E)`.
    pub failure_witness: Option<(QVector, QVector)>,
}

/// The cone generated by the rays and lines of `cones`.
fn cone_hull(dim: usize, cones: &[Polyhedron]) -> Polyhedron {
    let mut rays = Vec::new();
    let mut lines = Vec::new();
    for c in cones {
        rays.extend(c.rays().iter().cloned());
        lines.extend(c.lines().iter().cloned());
    }
    Polyhedron::from_vrep_unchecked(VRep::new(dim, vec![QVector::zeros(dim)], rays, lines))
}

impl PolyhedralComplex {
    pub fn check_minkowski_weyl(&self) -> Result<MWReport> {
        self.require_valid()?;
        let n = self.dim();
        let support = self.support();
        let cells = support.pieces();
        let sigmas: Vec<Polyhedron> = cells.iter().map(Polyhedron::recession_cone_unchecked).collect();
        let tau = cone_hull(n, &sigmas);
        let cones = PolyhedralSet::new_unchecked(n, sigmas.clone());
        let mut holds = cones.covers(&tau).is_covered();
        let deltas: Vec<Polyhedron> = cells.iter().map(Polyhedron::polytope_part).collect();
        if holds {
            let mut targets: Vec<Polyhedron> =
                deltas.iter().map(|d| d.minkowski_sum_unchecked(&tau)).collect();
            targets.sort();
            targets.dedup();
            holds = targets.iter().all(|t| support.covers(t).is_covered());
        }
        if holds {
            return Ok(MWReport {
                holds,
                sigma: Some(tau),
                delta_pieces: Some(deltas),
                failure_witness: None,
            });
        }
        let witness = failure_witness(&support, &sigmas)
            .expect("a failed decomposition has a failing cell/cone pair");
        Ok(MWReport {
            holds,
            sigma: None,
            delta_pieces: None,
            failure_witness: Some(witness),
        })
    }

    /// `rec(|Π|)` when it is a single convex cone; `None` otherwise.
    pub fn recession_of_support(&self) -> Result<Option<Polyhedron>> {
        Ok(self.check_minkowski_weyl()?.sigma)
    }
}

/// The first pair `(j, i)` with `Λ_i + σ_j ⊄ E`, turned into `(p, u)`.
pub(crate) fn failure_witness(support: &PolyhedralSet, sigmas: &[Polyhedron]) -> Option<(QVector, QVector)> {
    let cells = support.pieces();
    for (j, sigma) in sigmas.iter().enumerate() {
        for cell in cells {
            let w = match support.covers(&cell.minkowski_sum_unchecked(sigma)) {
                Coverage::Covered => continue,
                Coverage::Uncovered(w) => w,
            };
            // x ∈ cell ∩ (w - σ_j), u = w - x.
            let reflected = Polyhedron::from_vrep_unchecked(VRep::new(
                support.dim(),
                vec![w.clone()],
                sigma.rays().iter().map(|r| -r).collect(),
                sigma.lines().to_vec(),
            ));
            let x = cell
                .intersect_unchecked(&reflected)
                .relative_interior_point_unchecked();
            let u = &w - &x;
            let p = cells[j].relative_interior_point_unchecked();
            return Some((p, u));
        }
    }
    None
}
