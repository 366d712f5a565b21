//! Coverage of a polyhedron by a polyhedral set, and ray membership.
//!
//! `covers` runs region subtraction restricted to regions of full
//! dimension `d = dim P`. Pieces meeting a region in dimension below `d`
//! are skipped: a finite union of closed lower-dimensional sets is nowhere
//! dense in the region, so the region is covered iff it is covered by the
//! remaining pieces. Splitting a region `R` by a piece `Q` produces the
//! parts `R ∩ {a_j >= b_j, j < i} ∩ {a_i <= b_i}` over the inequalities of
//! `Q` not implied on `R`; together with `R ∩ Q` they cover `R`, and the
//! parts of dimension below `d` are dropped by the same density argument.
//!
//! When a region survives every piece, each piece meets it in a proper
//! affine subspace of its hull. A point of the moment curve
//! `x + t w_1 + t^2 w_2 + ...` through a relative-interior point `x` avoids
//! all of them for all but finitely many `t`, which gives the witness.

use alloc::vec;
use alloc::vec::Vec;

use super::PolyhedralSet;
use crate::error::{GeometryError, Result};
use crate::exactq::{QMatrix, QVector, Rational};
use crate::polyhedron::{Halfspace, Polyhedron};

/// Result of a coverage query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coverage {
    Covered,
    /// A point of the target outside every piece.
    Uncovered(QVector),
}

impl Coverage {
    pub fn is_covered(&self) -> bool {
        *self == Coverage::Covered
    }

    pub fn witness(&self) -> Option<&QVector> {
        match self {
            Coverage::Covered => None,
            Coverage::Uncovered(w) => Some(w),
        }
    }
}

impl PolyhedralSet {
    fn check_same_dim(&self, found: usize) -> Result<()> {
        if found == self.dim {
            Ok(())
        } else {
            Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    /// Whether `target` lies in the union of the pieces.
    pub fn covers(&self, target: &Polyhedron) -> Coverage {
        assert_eq!(target.dim(), self.dim, "coverage target dimension");
        let d = match target.dimension() {
            None => return Coverage::Covered,
            Some(d) => d,
        };
        let mut regions = vec![target.clone()];
        for piece in &self.pieces {
            let mut next = Vec::new();
            for region in regions {
                if piece.contains_unchecked(&region) {
                    continue;
                }
                if region.intersect_unchecked(piece).dimension() != Some(d) {
                    next.push(region);
                    continue;
                }
                let mut sides: Vec<Halfspace> = Vec::new();
                for h in piece.inequalities() {
                    if region.within(h) {
                        continue;
                    }
                    let mut cut = sides.clone();
                    cut.push(h.flipped());
                    let part = region.restricted(&cut, &[]);
                    if part.dimension() == Some(d) {
                        next.push(part);
                    }
                    sides.push(h.clone());
                }
            }
            regions = next;
            if regions.is_empty() {
                return Coverage::Covered;
            }
        }
        Coverage::Uncovered(self.escape_point(&regions[0]))
    }

    /// A point of `ri(region)` outside every piece; see the module docs.
    fn escape_point(&self, region: &Polyhedron) -> QVector {
        let x = region.relative_interior_point_unchecked();
        let normals: Vec<QVector> = region.equalities().iter().map(|h| h.normal().clone()).collect();
        let directions = if normals.is_empty() {
            (0..self.dim).map(|i| QVector::unit(self.dim, i)).collect()
        } else {
            QMatrix::new(normals, self.dim).kernel_basis()
        };
        let half = Rational::new(1, 2).expect("nonzero");
        let mut t = Rational::one();
        loop {
            let mut p = x.clone();
            let mut power = Rational::one();
            for w in &directions {
                power = &power * &t;
                p = p.add_scaled(&power, w);
            }
            if region.in_relative_interior(&p) && !self.pieces.iter().any(|q| q.holds_at(&p)) {
                return p;
            }
            t = &t * &half;
        }
    }

    /// `u ∈ rec_p(E)`: the ray `p + λu, λ >= 0` stays in the set.
    pub fn ray_in_set(&self, p: &QVector, u: &QVector) -> Result<bool> {
        self.check_same_dim(p.dim())?;
        self.check_same_dim(u.dim())?;
        if !self.pieces.iter().any(|q| q.holds_at(p)) {
            return Err(GeometryError::PointOutsideSet(p.clone()));
        }
        if u.is_zero() {
            return Ok(true);
        }
        let mut intervals: Vec<(Rational, Option<Rational>)> = self
            .pieces
            .iter()
            .filter_map(|q| ray_interval(q, p, u))
            .collect();
        intervals.sort();
        // `[0, reach]` is covered; `p` lies in some piece.
        let mut reach = Rational::zero();
        for (lo, hi) in intervals {
            if lo > reach {
                return Ok(false);
            }
            match hi {
                None => return Ok(true),
                Some(h) if h > reach => reach = h,
                Some(_) => {}
            }
        }
        Ok(false)
    }

    /// `u ∈ rec(E)`: every piece `Λ` satisfies `Λ + cone(u) ⊂ E`.
    pub fn global_recession_contains(&self, u: &QVector) -> Result<bool> {
        self.check_same_dim(u.dim())?;
        if u.is_zero() {
            return Ok(true);
        }
        let directions = [u.clone()];
        Ok(self
            .pieces
            .iter()
            .all(|q| self.covers(&q.extended_along(&directions)).is_covered()))
    }
}

/// `{λ >= 0 : p + λu ∈ q}` as `[lo, hi]`, `hi = None` for unbounded;
/// `None` when empty.
fn ray_interval(q: &Polyhedron, p: &QVector, u: &QVector) -> Option<(Rational, Option<Rational>)> {
    let mut lo = Rational::zero();
    let mut hi: Option<Rational> = None;
    let mut bound = |s: Rational, rate: Rational, exact: bool| -> bool {
        // `s + λ rate >= 0`, or `= 0` when `exact`.
        if rate.is_zero() {
            return if exact { s.is_zero() } else { !s.is_negative() };
        }
        let root = -(s / rate.clone());
        if exact || rate.is_negative() {
            if hi.as_ref().map_or(true, |h| root < *h) {
                hi = Some(root.clone());
            }
        }
        if exact || rate.is_positive() {
            if root > lo {
                lo = root;
            }
        }
        true
    };
    for h in q.inequalities() {
        if !bound(h.slack(p), h.normal().dot(u), false) {
            return None;
        }
    }
    for h in q.equalities() {
        if !bound(h.slack(p), h.normal().dot(u), true) {
            return None;
        }
    }
    match &hi {
        Some(h) if *h < lo => None,
        _ => Some((lo, hi)),
    }
}
