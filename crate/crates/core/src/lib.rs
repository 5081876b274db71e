//! Unoriented equivariant cobordism of manifolds with (Z2)^n actions, in the
//! GKM picture: faithful polynomials over GF(2)^n, colored graphs and
//! colored simplex products.
//!
//! The crate needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod cobordism;
pub mod diffop;
pub mod dks;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod polytope;
pub mod reduction;

pub use algebra::{dual_basis, Monomial, Polynomial, Side};
pub use diffop::{d, find_primitive, is_squarefree};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use graph::{ColoredGraph, Edge, Validation, Violation};
pub use polytope::{coloring_polynomial, PolytopeColoring, SimplexProduct};
