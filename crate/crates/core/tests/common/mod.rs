#![allow(dead_code)]

use proptest::prelude::*;
use recfan_core::{arrangement_complex, Halfspace, PolyhedralComplex, Polyhedron, QVector, Rational};

pub fn hyperplane(dim: usize) -> impl Strategy<Value = Halfspace> {
    (prop::collection::vec(-3i64..=3, dim), -3i64..=3)
        .prop_filter("nonzero normal", |(a, _)| a.iter().any(|&x| x != 0))
        .prop_map(|(a, b)| Halfspace::from_i64s(&a, b).unwrap())
}

/// Hyperplanes in dimension 1 to 3, at most four of them.
pub fn arrangement() -> impl Strategy<Value = (usize, Vec<Halfspace>)> {
    (1usize..=3).prop_flat_map(|d| (Just(d), prop::collection::vec(hyperplane(d), 0..=4)))
}

pub fn complete_complex() -> impl Strategy<Value = PolyhedralComplex> {
    arrangement().prop_map(|(d, hs)| arrangement_complex(d, &hs).unwrap())
}

/// A complete complex and a subcomplex generated by a random choice of its
/// cells.
pub fn subcomplex() -> impl Strategy<Value = (PolyhedralComplex, PolyhedralComplex)> {
    (complete_complex(), prop::collection::vec(any::<bool>(), 128)).prop_map(|(c, pick)| {
        let mut cells: Vec<Polyhedron> = c
            .cells()
            .iter()
            .enumerate()
            .filter(|(i, _)| pick[i % pick.len()])
            .map(|(_, p)| p.clone())
            .collect();
        if cells.is_empty() {
            cells.push(c.cells().last().unwrap().clone());
        }
        let sub = PolyhedralComplex::build(c.dim(), cells).unwrap();
        (c, sub)
    })
}

/// The arrangement cells inside the intersection of some of its halfspaces:
/// a subdivision of one polyhedron.
pub fn convex_subdivision() -> impl Strategy<Value = PolyhedralComplex> {
    (arrangement(), prop::collection::vec(any::<bool>(), 4)).prop_filter_map(
        "nonempty region",
        |((d, hs), use_it)| {
            let chosen: Vec<Halfspace> = hs
                .iter()
                .zip(&use_it)
                .filter(|(_, &u)| u)
                .map(|(h, _)| h.clone())
                .collect();
            let region = Polyhedron::from_hrep(recfan_core::HRep::new(d, chosen, vec![])).unwrap();
            if region.is_empty() {
                return None;
            }
            let c = arrangement_complex(d, &hs).unwrap();
            let cells: Vec<Polyhedron> =
                c.cells().iter().filter(|p| region.contains(p).unwrap()).cloned().collect();
            if cells.is_empty() {
                return None;
            }
            Some(PolyhedralComplex::build(d, cells).unwrap())
        },
    )
}

pub fn direction(dim: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec((-4i64..=4, 1i64..=3), dim).prop_map(|c| {
        QVector::new(c.into_iter().map(|(n, d)| Rational::new(n, d).unwrap()).collect())
    })
}
