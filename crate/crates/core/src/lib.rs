//! Exact rational polyhedral geometry: polyhedra in dual representation,
//! polyhedral complexes and their supports, recession and cone
//! complexes, the Minkowski-Weyl condition on supports, and extendable
//! subdivisions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod complex;
pub mod error;
pub mod exactq;
pub mod fanops;
pub mod fixtures;
pub mod polyhedron;

pub use complex::{
    build_complex, Completeness, ComplexVerdict, Coverage, MWReport, PolyhedralComplex, PolyhedralSet,
    VerdictStatus,
};
pub use error::{GeometryError, Result};
pub use exactq::{QMatrix, QVector, Rational};
pub use fanops::{
    aff, arrangement_complex, cone_complex, extendable_subdivision, is_fan, recession_complex,
    roundtrip_check, theorem14_pipeline, toric_datum, Hypotheses, SubdivisionResult, Theorem14Report,
    ToricCone, ToricDatum,
};
pub use polyhedron::{FaceHandle, HRep, Halfspace, Polyhedron, VRep};
