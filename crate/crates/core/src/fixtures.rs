//! Reference complexes used by the command-line tool and the tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::PolyhedralComplex;
use crate::fanops::arrangement_complex;
use crate::polyhedron::{HRep, Halfspace, Polyhedron};

fn hs(normal: &[i64], offset: i64) -> Halfspace {
    Halfspace::from_i64s(normal, offset).expect("nonzero normal")
}

fn planar(ineqs: &[(&[i64], i64)], height: i64) -> Polyhedron {
    let inequalities = ineqs.iter().map(|(a, b)| hs(a, *b)).collect();
    Polyhedron::from_hrep(HRep::new(3, inequalities, vec![hs(&[0, 0, 1], height)]))
        .expect("well-formed fixture")
}

fn complex(dim: usize, cells: Vec<Polyhedron>) -> PolyhedralComplex {
    PolyhedralComplex::build(dim, cells).expect("well-formed fixture")
}

/// Maximal cells of the two-sheet complex whose recession cones overlap in
/// a cone that is a face of neither: `{x1, x2 >= 0, x3 = 0}` and
/// `{x1 + x2 >= 0, x1 - x2 >= 0, x3 = 1}`.
pub fn example17_cells() -> Vec<Polyhedron> {
    vec![
        planar(&[(&[1, 0, 0], 0), (&[0, 1, 0], 0)], 0),
        planar(&[(&[1, 1, 0], 0), (&[1, -1, 0], 0)], 1),
    ]
}

pub fn example17() -> PolyhedralComplex {
    complex(3, example17_cells())
}

/// `{x1, x2 >= 0, x3 = 0}`, `{x1 >= x2 >= 0, x3 = 1}`, `{x2 >= x1 >= 0, x3 = 1}`.
pub fn example1_case1_cells() -> Vec<Polyhedron> {
    vec![
        planar(&[(&[1, 0, 0], 0), (&[0, 1, 0], 0)], 0),
        planar(&[(&[1, -1, 0], 0), (&[0, 1, 0], 0)], 1),
        planar(&[(&[-1, 1, 0], 0), (&[1, 0, 0], 0)], 1),
    ]
}

pub fn example1_case1() -> PolyhedralComplex {
    complex(3, example1_case1_cells())
}

/// `{x1 >= x2 >= 0, x3 = 0}` and `{x2 >= x1 >= 0, x3 = 1}`.
///
/// This complex is extendable (it sits inside a complete complex); that is
/// not decided by the library, only recorded here.
pub fn example1_case2_cells() -> Vec<Polyhedron> {
    vec![
        planar(&[(&[1, -1, 0], 0), (&[0, 1, 0], 0)], 0),
        planar(&[(&[-1, 1, 0], 0), (&[1, 0, 0], 0)], 1),
    ]
}

pub fn example1_case2() -> PolyhedralComplex {
    complex(3, example1_case2_cells())
}

/// The complete complex cut out of the plane by the four lines through the
/// edges of the unit square: the square, four sleeves and four corners.
pub fn complete_square_complex() -> PolyhedralComplex {
    let lines = [hs(&[1, 0], 0), hs(&[1, 0], 1), hs(&[0, 1], 0), hs(&[0, 1], 1)];
    arrangement_complex(2, &lines).expect("planar lines")
}
