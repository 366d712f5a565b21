//! Convex rational polyhedra with synchronized halfspace and generator
//! representations.
//!
//! Both representations are computed eagerly and kept in a canonical
//! form, so `==` on [`Polyhedron`] is equality of point sets:
//!
//! * equalities are the reduced row-echelon basis of the affine hull,
//!   scaled to primitive integers;
//! * inequalities are facet-defining, reduced modulo the equalities and
//!   scaled to primitive integers;
//! * lines are the reduced row-echelon basis of the lineality space;
//! * rays and vertices are reduced modulo the lines, rays primitive;
//! * every list is sorted lexicographically.
//!
//! Cones are ordinary polyhedra whose only vertex is the origin.

mod dd;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::exactq::{primitive_integer, to_rationals, QMatrix, QVector, Rational};

/// The closed halfspace `{u : <normal, u> >= offset}`. In an equality
/// list the same data denotes the hyperplane `<normal, u> = offset`.
///
/// Stored scaled so that all entries are integers with gcd 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Halfspace {
    normal: QVector,
    offset: Rational,
}

impl Halfspace {
    pub fn new(normal: QVector, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(Halfspace::from_homogeneous(&primitive_integer(
            normal.extended(-offset).coords(),
        )))
    }

    /// Integer shorthand: `{u : <normal, u> >= offset}`.
    pub fn from_i64s(normal: &[i64], offset: i64) -> Result<Self> {
        Halfspace::new(QVector::from_i64s(normal), Rational::from(offset))
    }

    pub fn normal(&self) -> &QVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `<normal, p> - offset`.
    pub fn slack(&self, p: &QVector) -> Rational {
        &self.normal.dot(p) - &self.offset
    }

    pub fn contains(&self, p: &QVector) -> bool {
        !self.slack(p).is_negative()
    }

    /// The opposite closed halfspace `{u : <normal, u> <= offset}`.
    pub fn flipped(&self) -> Halfspace {
        Halfspace {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }

    /// Row `(normal, -offset)` of the homogenized system.
    fn homogeneous(&self) -> Vec<BigInt> {
        primitive_integer(self.normal.extended(-&self.offset).coords())
    }

    /// Inverse of [`Halfspace::homogeneous`]; the row must be primitive
    /// with a nonzero normal part.
    fn from_homogeneous(row: &[BigInt]) -> Halfspace {
        let n = row.len() - 1;
        Halfspace {
            normal: to_rationals(&row[..n]),
            offset: Rational::from_integer(-&row[n]),
        }
    }
}

/// Halfspace representation; `equalities` are read as `<a, u> = b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HRep {
    pub dim: usize,
    pub inequalities: Vec<Halfspace>,
    pub equalities: Vec<Halfspace>,
}

impl HRep {
    pub fn new(dim: usize, inequalities: Vec<Halfspace>, equalities: Vec<Halfspace>) -> Self {
        HRep {
            dim,
            inequalities,
            equalities,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        for h in self.inequalities.iter().chain(&self.equalities) {
            check_dim(self.dim, h.dim())?;
        }
        Ok(())
    }
}

/// Generator representation `conv(vertices) + cone(rays) + lin(lines)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<QVector>,
    pub rays: Vec<QVector>,
    pub lines: Vec<QVector>,
}

impl VRep {
    pub fn new(dim: usize, vertices: Vec<QVector>, rays: Vec<QVector>, lines: Vec<QVector>) -> Self {
        VRep {
            dim,
            vertices,
            rays,
            lines,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        for v in self.vertices.iter().chain(&self.rays).chain(&self.lines) {
            check_dim(self.dim, v.dim())?;
        }
        if self.vertices.is_empty() && !(self.rays.is_empty() && self.lines.is_empty()) {
            return Err(GeometryError::MissingVertex);
        }
        Ok(())
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(GeometryError::DimensionMismatch { expected, found })
    }
}

/// A face of a polyhedron, named by the inequalities tight on it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceHandle {
    pub tight_indices: BTreeSet<usize>,
}

/// A convex rational polyhedron.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polyhedron {
    hrep: HRep,
    vrep: VRep,
}

impl Ord for Polyhedron {
    /// Ambient dimension, then affine dimension, then the canonical
    /// representations.
    fn cmp(&self, other: &Self) -> Ordering {
        self.hrep
            .dim
            .cmp(&other.hrep.dim)
            .then_with(|| self.dimension().cmp(&other.dimension()))
            .then_with(|| self.vrep.cmp(&other.vrep))
            .then_with(|| self.hrep.cmp(&other.hrep))
    }
}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Polyhedron {
    pub fn from_hrep(h: HRep) -> Result<Self> {
        h.validate()?;
        Ok(Self::from_hrep_unchecked(h.dim, &h.inequalities, &h.equalities))
    }

    pub fn from_vrep(v: VRep) -> Result<Self> {
        v.validate()?;
        Ok(Self::from_vrep_unchecked(v))
    }

    pub(crate) fn from_hrep_unchecked(
        dim: usize,
        inequalities: &[Halfspace],
        equalities: &[Halfspace],
    ) -> Self {
        match vrep_from_hrep(dim, inequalities, equalities) {
            None => Polyhedron::empty(dim),
            Some(vrep) => Polyhedron {
                hrep: hrep_from_vrep(&vrep),
                vrep,
            },
        }
    }

    pub(crate) fn from_vrep_unchecked(mut v: VRep) -> Self {
        if v.vertices.is_empty() {
            return Polyhedron::empty(v.dim);
        }
        v.rays.retain(|r| !r.is_zero());
        v.lines.retain(|l| !l.is_zero());
        let hrep = hrep_from_vrep(&v);
        let vrep = vrep_from_hrep(v.dim, &hrep.inequalities, &hrep.equalities)
            .expect("nonempty generator list yields a nonempty polyhedron");
        Polyhedron { hrep, vrep }
    }

    /// The empty polyhedron, represented by `x1 >= 1, -x1 >= 0`.
    pub fn empty(dim: usize) -> Self {
        let e1 = QVector::unit(dim, 0);
        let mut inequalities = vec![
            Halfspace {
                normal: -&e1,
                offset: Rational::zero(),
            },
            Halfspace {
                normal: e1,
                offset: Rational::one(),
            },
        ];
        inequalities.sort();
        Polyhedron {
            hrep: HRep::new(dim, inequalities, Vec::new()),
            vrep: VRep::new(dim, Vec::new(), Vec::new(), Vec::new()),
        }
    }

    pub fn whole_space(dim: usize) -> Self {
        Self::from_hrep_unchecked(dim, &[], &[])
    }

    pub fn point(p: QVector) -> Self {
        Self::from_vrep_unchecked(VRep::new(p.dim(), vec![p], Vec::new(), Vec::new()))
    }

    /// `cone(rays) + lin(lines)` with apex at the origin.
    pub fn cone(dim: usize, rays: Vec<QVector>, lines: Vec<QVector>) -> Result<Self> {
        Self::from_vrep(VRep::new(dim, vec![QVector::zeros(dim)], rays, lines))
    }

    /// Convex hull of finitely many points.
    pub fn convex_hull(dim: usize, points: Vec<QVector>) -> Result<Self> {
        Self::from_vrep(VRep::new(dim, points, Vec::new(), Vec::new()))
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn vrep(&self) -> &VRep {
        &self.vrep
    }

    pub fn inequalities(&self) -> &[Halfspace] {
        &self.hrep.inequalities
    }

    pub fn equalities(&self) -> &[Halfspace] {
        &self.hrep.equalities
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vrep.vertices
    }

    pub fn rays(&self) -> &[QVector] {
        &self.vrep.rays
    }

    pub fn lines(&self) -> &[QVector] {
        &self.vrep.lines
    }

    pub fn is_empty(&self) -> bool {
        self.vrep.vertices.is_empty()
    }

    /// Dimension of the affine hull; `None` for the empty polyhedron.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.dim() - self.hrep.equalities.len())
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.vrep.rays.is_empty() && self.vrep.lines.is_empty()
    }

    /// Vertex set is exactly the origin.
    pub fn is_cone(&self) -> bool {
        self.vrep.vertices.len() == 1 && self.vrep.vertices[0].is_zero()
    }

    pub fn contains_point(&self, p: &QVector) -> Result<bool> {
        check_dim(self.dim(), p.dim())?;
        Ok(self.holds_at(p))
    }

    pub(crate) fn holds_at(&self, p: &QVector) -> bool {
        self.hrep.inequalities.iter().all(|h| h.contains(p))
            && self.hrep.equalities.iter().all(|h| h.slack(p).is_zero())
    }

    /// Every inequality is strict at `p` and every equality holds.
    pub(crate) fn in_relative_interior(&self, p: &QVector) -> bool {
        !self.is_empty()
            && self.hrep.inequalities.iter().all(|h| h.slack(p).is_positive())
            && self.hrep.equalities.iter().all(|h| h.slack(p).is_zero())
    }

    /// Direction `d` in the recession cone of the halfspace system.
    pub(crate) fn recedes_along(&self, d: &QVector) -> bool {
        self.hrep
            .inequalities
            .iter()
            .all(|h| !h.normal.dot(d).is_negative())
            && self.hrep.equalities.iter().all(|h| h.normal.dot(d).is_zero())
    }

    fn orthogonal_to_all(&self, d: &QVector) -> bool {
        self.hrep
            .inequalities
            .iter()
            .chain(&self.hrep.equalities)
            .all(|h| h.normal.dot(d).is_zero())
    }

    /// `self` lies in the closed halfspace `h`.
    pub(crate) fn within(&self, h: &Halfspace) -> bool {
        self.vrep.vertices.iter().all(|v| h.contains(v))
            && self.vrep.rays.iter().all(|r| !h.normal.dot(r).is_negative())
            && self.vrep.lines.iter().all(|l| h.normal.dot(l).is_zero())
    }

    /// `other` is a subset of `self`.
    pub fn contains(&self, other: &Polyhedron) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.contains_unchecked(other))
    }

    pub(crate) fn contains_unchecked(&self, other: &Polyhedron) -> bool {
        if other.is_empty() {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        other.vrep.vertices.iter().all(|v| self.holds_at(v))
            && other.vrep.rays.iter().all(|r| self.recedes_along(r))
            && other.vrep.lines.iter().all(|l| self.orthogonal_to_all(l))
    }

    /// Mutual containment.
    pub fn equals(&self, other: &Polyhedron) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Polyhedron) -> Polyhedron {
        if self.is_empty() || other.is_empty() {
            return Polyhedron::empty(self.dim());
        }
        let mut ineqs = self.hrep.inequalities.clone();
        ineqs.extend(other.hrep.inequalities.iter().cloned());
        let mut eqs = self.hrep.equalities.clone();
        eqs.extend(other.hrep.equalities.iter().cloned());
        Polyhedron::from_hrep_unchecked(self.dim(), &ineqs, &eqs)
    }

    /// `self` intersected with extra halfspaces and hyperplanes.
    pub(crate) fn restricted(&self, ineqs: &[Halfspace], eqs: &[Halfspace]) -> Polyhedron {
        if self.is_empty() {
            return self.clone();
        }
        let mut all_ineqs = self.hrep.inequalities.clone();
        all_ineqs.extend(ineqs.iter().cloned());
        let mut all_eqs = self.hrep.equalities.clone();
        all_eqs.extend(eqs.iter().cloned());
        Polyhedron::from_hrep_unchecked(self.dim(), &all_ineqs, &all_eqs)
    }

    /// `rec(P) = {u : P + u ⊂ P}`, a cone with the same rays and lines.
    pub fn recession_cone(&self) -> Result<Polyhedron> {
        if self.is_empty() {
            return Err(GeometryError::EmptyPolyhedron);
        }
        Ok(self.recession_cone_unchecked())
    }

    pub(crate) fn recession_cone_unchecked(&self) -> Polyhedron {
        let n = self.dim();
        // The homogenized halfspace system is already canonical.
        let ineqs: Vec<Halfspace> = self
            .hrep
            .inequalities
            .iter()
            .map(|h| Halfspace::new(h.normal.clone(), Rational::zero()).expect("nonzero normal"))
            .collect();
        let eqs: Vec<Halfspace> = self
            .hrep
            .equalities
            .iter()
            .map(|h| Halfspace::new(h.normal.clone(), Rational::zero()).expect("nonzero normal"))
            .collect();
        Polyhedron::from_hrep_unchecked(n, &ineqs, &eqs)
    }

    /// The closed cone over `P × {1}` in one dimension higher.
    pub fn lift_cone(&self) -> Result<Polyhedron> {
        if self.is_empty() {
            return Err(GeometryError::EmptyPolyhedron);
        }
        Ok(self.lift_cone_unchecked())
    }

    pub(crate) fn lift_cone_unchecked(&self) -> Polyhedron {
        let n = self.dim();
        let mut rays: Vec<QVector> = self
            .vrep
            .vertices
            .iter()
            .map(|v| v.extended(Rational::one()))
            .collect();
        rays.extend(self.vrep.rays.iter().map(|r| r.extended(Rational::zero())));
        let lines = self
            .vrep
            .lines
            .iter()
            .map(|l| l.extended(Rational::zero()))
            .collect();
        Polyhedron::from_vrep_unchecked(VRep::new(n + 1, vec![QVector::zeros(n + 1)], rays, lines))
    }

    /// `{u : (u, height) ∈ self}` one dimension lower.
    pub fn affine_slice(&self, height: &Rational) -> Result<Polyhedron> {
        if self.dim() < 2 {
            return Err(GeometryError::ZeroDimension);
        }
        let n = self.dim() - 1;
        if self.is_empty() {
            return Ok(Polyhedron::empty(n));
        }
        let mut ineqs = Vec::new();
        let mut eqs = Vec::new();
        for (h, is_eq) in self
            .hrep
            .inequalities
            .iter()
            .map(|h| (h, false))
            .chain(self.hrep.equalities.iter().map(|h| (h, true)))
        {
            let normal = h.normal.truncated();
            let offset = &h.offset - &(h.normal.last() * height);
            if normal.is_zero() {
                // Constant constraint `0 >= offset` or `0 = offset`.
                let violated = if is_eq { !offset.is_zero() } else { offset.is_positive() };
                if violated {
                    return Ok(Polyhedron::empty(n));
                }
                continue;
            }
            let s = Halfspace::new(normal, offset).expect("nonzero normal");
            if is_eq {
                eqs.push(s);
            } else {
                ineqs.push(s);
            }
        }
        Ok(Polyhedron::from_hrep_unchecked(n, &ineqs, &eqs))
    }

    /// Barycenter of the vertices plus the sum of the rays.
    pub fn relative_interior_point(&self) -> Result<QVector> {
        if self.is_empty() {
            return Err(GeometryError::EmptyPolyhedron);
        }
        Ok(self.relative_interior_point_unchecked())
    }

    pub(crate) fn relative_interior_point_unchecked(&self) -> QVector {
        let n = self.dim();
        let mut p = QVector::zeros(n);
        for v in &self.vrep.vertices {
            p = &p + v;
        }
        let k = Rational::from(self.vrep.vertices.len() as i64);
        p = p.scale(&k.recip().expect("nonempty vertex list"));
        for r in &self.vrep.rays {
            p = &p + r;
        }
        p
    }

    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.minkowski_sum_unchecked(other))
    }

    pub(crate) fn minkowski_sum_unchecked(&self, other: &Polyhedron) -> Polyhedron {
        if self.is_empty() || other.is_empty() {
            return Polyhedron::empty(self.dim());
        }
        let mut vertices = Vec::new();
        for a in &self.vrep.vertices {
            for b in &other.vrep.vertices {
                vertices.push(a + b);
            }
        }
        let mut rays = self.vrep.rays.clone();
        rays.extend(other.vrep.rays.iter().cloned());
        let mut lines = self.vrep.lines.clone();
        lines.extend(other.vrep.lines.iter().cloned());
        Polyhedron::from_vrep_unchecked(VRep::new(self.dim(), vertices, rays, lines))
    }

    /// `self + cone(directions)`.
    pub(crate) fn extended_along(&self, directions: &[QVector]) -> Polyhedron {
        if self.is_empty() {
            return self.clone();
        }
        let mut v = self.vrep.clone();
        v.rays.extend(directions.iter().cloned());
        Polyhedron::from_vrep_unchecked(v)
    }

    /// Convex hull of the vertices: the polytope part of the
    /// decomposition `P = polytope + rec(P)`.
    pub fn polytope_part(&self) -> Polyhedron {
        Polyhedron::from_vrep_unchecked(VRep::new(
            self.dim(),
            self.vrep.vertices.clone(),
            Vec::new(),
            Vec::new(),
        ))
    }

    pub fn lineality_space(&self) -> &[QVector] {
        &self.vrep.lines
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.vrep.lines.is_empty()
    }

    /// `{u ∈ P : <x,u> <= <x,v> for all v ∈ P}`.
    pub fn face_where_minimized(&self, x: &QVector) -> Result<Polyhedron> {
        check_dim(self.dim(), x.dim())?;
        if self.is_empty() {
            return Err(GeometryError::EmptyPolyhedron);
        }
        if x.is_zero() {
            return Ok(self.clone());
        }
        if self.vrep.rays.iter().any(|r| x.dot(r).is_negative())
            || self.vrep.lines.iter().any(|l| !x.dot(l).is_zero())
        {
            return Err(GeometryError::UnboundedFunctional);
        }
        let values: Vec<Rational> = self.vrep.vertices.iter().map(|v| x.dot(v)).collect();
        let min = values.iter().min().expect("nonempty").clone();
        let vertices = self
            .vrep
            .vertices
            .iter()
            .zip(&values)
            .filter(|(_, val)| **val == min)
            .map(|(v, _)| v.clone())
            .collect();
        let rays = self
            .vrep
            .rays
            .iter()
            .filter(|r| x.dot(r).is_zero())
            .cloned()
            .collect();
        Ok(Polyhedron::from_vrep_unchecked(VRep::new(
            self.dim(),
            vertices,
            rays,
            self.vrep.lines.clone(),
        )))
    }

    /// Incidence of inequality `i` with generator `g` (vertices first,
    /// then rays).
    fn tight(&self, i: usize, g: usize) -> bool {
        let h = &self.hrep.inequalities[i];
        let nv = self.vrep.vertices.len();
        if g < nv {
            h.slack(&self.vrep.vertices[g]).is_zero()
        } else {
            h.normal.dot(&self.vrep.rays[g - nv]).is_zero()
        }
    }

    fn generator_count(&self) -> usize {
        self.vrep.vertices.len() + self.vrep.rays.len()
    }

    /// Face lattice by tight sets: every nonempty face with the
    /// generators it contains.
    fn face_lattice(&self) -> BTreeMap<BTreeSet<usize>, Vec<usize>> {
        let mut out = BTreeMap::new();
        if self.is_empty() {
            return out;
        }
        let m = self.hrep.inequalities.len();
        let ng = self.generator_count();
        let incidence: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..ng).map(|g| self.tight(i, g)).collect())
            .collect();
        let closure = |gens: &[usize]| -> BTreeSet<usize> {
            (0..m)
                .filter(|&i| gens.iter().all(|&g| incidence[i][g]))
                .collect()
        };
        let all: Vec<usize> = (0..ng).collect();
        let mut queue = vec![(closure(&all), all)];
        let nv = self.vrep.vertices.len();
        while let Some((tight, gens)) = queue.pop() {
            if out.contains_key(&tight) {
                continue;
            }
            for i in 0..m {
                if tight.contains(&i) {
                    continue;
                }
                let sub: Vec<usize> = gens.iter().copied().filter(|&g| incidence[i][g]).collect();
                if !sub.iter().any(|&g| g < nv) {
                    continue;
                }
                let t = closure(&sub);
                if !out.contains_key(&t) {
                    queue.push((t, sub));
                }
            }
            out.insert(tight, gens);
        }
        out
    }

    fn face_from_generators(&self, gens: &[usize]) -> Polyhedron {
        let nv = self.vrep.vertices.len();
        let vertices = gens
            .iter()
            .filter(|&&g| g < nv)
            .map(|&g| self.vrep.vertices[g].clone())
            .collect();
        let rays = gens
            .iter()
            .filter(|&&g| g >= nv)
            .map(|&g| self.vrep.rays[g - nv].clone())
            .collect();
        Polyhedron::from_vrep_unchecked(VRep::new(
            self.dim(),
            vertices,
            rays,
            self.vrep.lines.clone(),
        ))
    }

    /// Handles of all nonempty faces, `self` included.
    pub fn face_handles(&self) -> Vec<FaceHandle> {
        self.face_lattice()
            .into_keys()
            .map(|tight_indices| FaceHandle { tight_indices })
            .collect()
    }

    /// The face on which the handle's inequalities are tight; `None` if
    /// that face is empty.
    pub fn face(&self, handle: &FaceHandle) -> Option<Polyhedron> {
        if self.is_empty() || handle.tight_indices.iter().any(|&i| i >= self.inequalities().len()) {
            return None;
        }
        let gens: Vec<usize> = (0..self.generator_count())
            .filter(|&g| handle.tight_indices.iter().all(|&i| self.tight(i, g)))
            .collect();
        if !gens.iter().any(|&g| g < self.vrep.vertices.len()) {
            return None;
        }
        Some(self.face_from_generators(&gens))
    }

    /// All nonempty faces including `self`, in canonical order (by
    /// dimension first).
    pub fn faces(&self) -> Vec<Polyhedron> {
        let mut faces: Vec<Polyhedron> = self
            .face_lattice()
            .values()
            .map(|gens| self.face_from_generators(gens))
            .collect();
        faces.sort();
        faces
    }

    /// Whether `f` is a nonempty face of `self`: `f` must equal the face cut
    /// out by the inequalities tight at a relative-interior point of `f`.
    pub fn is_face_of(&self, f: &Polyhedron) -> bool {
        if f.dim() != self.dim() || f.is_empty() || !self.contains_unchecked(f) {
            return false;
        }
        let p = f.relative_interior_point_unchecked();
        let tight: BTreeSet<usize> = self
            .hrep
            .inequalities
            .iter()
            .enumerate()
            .filter(|(_, h)| h.slack(&p).is_zero())
            .map(|(i, _)| i)
            .collect();
        let nv = self.vrep.vertices.len();
        // The face cut out by `tight` contains `f`; equality holds iff its
        // generators lie in `f`.
        (0..self.generator_count())
            .filter(|&g| tight.iter().all(|&i| self.tight(i, g)))
            .all(|g| {
                if g < nv {
                    f.holds_at(&self.vrep.vertices[g])
                } else {
                    f.recedes_along(&self.vrep.rays[g - nv])
                }
            })
            && self.vrep.lines.iter().all(|l| f.orthogonal_to_all(l))
    }

    /// A face `F` with `v ∈ ri(rec(F))`, returned as `(rec(F), F)`. The cone
    /// is unique; `F` is the first such face of least dimension.
    pub fn locate_recession_face(&self, v: &QVector) -> Result<(Polyhedron, Polyhedron)> {
        check_dim(self.dim(), v.dim())?;
        if self.is_empty() {
            return Err(GeometryError::EmptyPolyhedron);
        }
        if !self.recedes_along(v) {
            return Err(GeometryError::NotInRecessionCone(v.clone()));
        }
        for face in self.faces() {
            let rec = face.recession_cone_unchecked();
            if rec.in_relative_interior(v) {
                return Ok((rec, face));
            }
        }
        unreachable!("the relative interiors of the faces of rec(P) partition it")
    }
}

/// Canonical generator lists.
fn canonical_vrep(
    dim: usize,
    vertices: Vec<QVector>,
    rays: Vec<QVector>,
    lines: Vec<QVector>,
) -> VRep {
    let (basis, pivots) = rref_basis(lines, dim);
    let reduce = |v: &QVector| -> QVector {
        let mut v = v.clone();
        for (row, &p) in basis.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let f = -&v[p];
                v = v.add_scaled(&f, row);
            }
        }
        v
    };
    let mut vertices: Vec<QVector> = vertices.iter().map(reduce).collect();
    vertices.sort();
    vertices.dedup();
    let mut rays: Vec<QVector> = rays
        .iter()
        .map(|r| reduce(r))
        .filter(|r| !r.is_zero())
        .map(|r| to_rationals(&primitive_integer(r.coords())))
        .collect();
    rays.sort();
    rays.dedup();
    let mut lines: Vec<QVector> = basis
        .iter()
        .map(|l| to_rationals(&primitive_integer(l.coords())))
        .collect();
    lines.sort();
    VRep::new(dim, vertices, rays, lines)
}

/// Nonzero rows of the reduced row-echelon form and their pivots.
fn rref_basis(rows: Vec<QVector>, ncols: usize) -> (Vec<QVector>, Vec<usize>) {
    if rows.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let (r, pivots) = QMatrix::new(rows, ncols).rref();
    let basis = r.rows()[..pivots.len()].to_vec();
    (basis, pivots)
}

/// Canonical halfspace lists from homogeneous rows `(a, beta)` meaning
/// `<a,u> + beta >= 0` (or `= 0`).
fn canonical_hrep(dim: usize, inequalities: &[Vec<BigInt>], equalities: &[Vec<BigInt>]) -> HRep {
    let (basis, pivots) = rref_basis(
        equalities.iter().map(|r| to_rationals(r)).collect(),
        dim + 1,
    );
    debug_assert!(pivots.iter().all(|&p| p < dim), "nonempty polyhedron");
    let mut eqs: Vec<Halfspace> = basis
        .iter()
        .map(|row| Halfspace::from_homogeneous(&primitive_integer(row.coords())))
        .collect();
    eqs.sort();
    let mut ineqs: Vec<Halfspace> = inequalities
        .iter()
        .filter_map(|row| {
            let mut v = to_rationals(row);
            for (b, &p) in basis.iter().zip(&pivots) {
                if !v[p].is_zero() {
                    let f = -&v[p];
                    v = v.add_scaled(&f, b);
                }
            }
            if v.coords()[..dim].iter().all(Rational::is_zero) {
                // A nonnegative multiple of t >= 0: implied.
                return None;
            }
            Some(Halfspace::from_homogeneous(&primitive_integer(v.coords())))
        })
        .collect();
    ineqs.sort();
    ineqs.dedup();
    HRep::new(dim, ineqs, eqs)
}

/// Generators of the polyhedron via the homogenized cone
/// `{(u,t) : <a,u> - b t >= 0, t >= 0}`; `None` when empty.
fn vrep_from_hrep(dim: usize, inequalities: &[Halfspace], equalities: &[Halfspace]) -> Option<VRep> {
    let mut rows: Vec<Vec<BigInt>> = inequalities.iter().map(Halfspace::homogeneous).collect();
    let mut t = vec![BigInt::zero(); dim + 1];
    t[dim] = BigInt::from(1);
    rows.push(t);
    let eqs: Vec<Vec<BigInt>> = equalities.iter().map(Halfspace::homogeneous).collect();
    let gens = dd::cone_generators(dim + 1, &rows, &eqs);
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in &gens.rays {
        let q = to_rationals(g);
        let last = q.last().clone();
        if last.is_zero() {
            rays.push(q.truncated());
        } else {
            vertices.push(q.truncated().scale(&last.recip().expect("nonzero")));
        }
    }
    if vertices.is_empty() {
        return None;
    }
    let lines = gens.lines.iter().map(|l| to_rationals(l).truncated()).collect();
    Some(canonical_vrep(dim, vertices, rays, lines))
}

/// Facets and affine hull of a nonempty generator list via the dual cone.
fn hrep_from_vrep(v: &VRep) -> HRep {
    let mut rows: Vec<Vec<BigInt>> = v
        .vertices
        .iter()
        .map(|p| primitive_integer(p.extended(Rational::one()).coords()))
        .collect();
    rows.extend(
        v.rays
            .iter()
            .map(|r| primitive_integer(r.extended(Rational::zero()).coords())),
    );
    let lines: Vec<Vec<BigInt>> = v
        .lines
        .iter()
        .map(|l| primitive_integer(l.extended(Rational::zero()).coords()))
        .collect();
    let dual = dd::cone_generators(v.dim + 1, &rows, &lines);
    canonical_hrep(v.dim, &dual.rays, &dual.lines)
}
