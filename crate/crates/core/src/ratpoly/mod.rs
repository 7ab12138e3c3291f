//! Exact rationals and sparse five-variable polynomials.
//!
//! Variables are indexed `0..5` in code and printed `z1..z5`. Per-context
//! renamings (M2, M5, nonminimal twist) are provided as alias tables.

pub mod poly;
pub mod rational;

pub use poly::{
    count_monomials, exp_add, exp_degree, monomials_of_degree, unit_exp, Exponent, Mode, PolyError, Polynomial,
    NVARS, ZERO_EXP,
};
pub use rational::{factorial, ParseRationalError, Rational};

/// Coordinate names for a given chart of C^5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aliases(pub [&'static str; NVARS]);

impl Aliases {
    pub const FLAT: Aliases = Aliases(["z1", "z2", "z3", "z4", "z5"]);
    /// Nonminimal twist chart: `(z1, z2, w1, w2, w3)`.
    pub const NONMINIMAL: Aliases = Aliases(["z1", "z2", "w1", "w2", "w3"]);
    /// M2 chart: `(z, w1, w2, w3, w4)`.
    pub const M2: Aliases = Aliases(["z", "w1", "w2", "w3", "w4"]);
    /// M5 chart: `(z1, z2, z3, w1, w2)`.
    pub const M5: Aliases = Aliases(["z1", "z2", "z3", "w1", "w2"]);

    pub fn name(&self, i: usize) -> &'static str {
        self.0[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| *n == name)
    }
}
