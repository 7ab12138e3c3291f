//! Exact checks for E(5,10), its central extension, the L∞ model of
//! polyvector fields and forms on C⁵, and the characters of its local
//! operators.
//!
//! Everything is exact: rationals are arbitrary precision, polynomials are
//! sparse and canonical, and every check reports its witnesses.

pub mod characters;
pub mod e510;
pub mod geom;
pub mod linalg;
pub mod linf;
pub mod ratpoly;
pub mod reptheory;
pub mod sample;
