//! Field-space L∞ structures.
//!
//! Fields `(μ, ν, γ, β)` live in `PV¹ ⊕ PV⁰ ⊕ Ω¹ ⊕ Ω⁰` with parities
//! odd, even, even, odd. Brackets use the shifted convention: every `ℓ_k`
//! is odd and graded symmetric with Koszul signs read off the slot
//! parities, and the higher Jacobi identities say `Q² = 0` for
//! `Q(φ) = Σ_k ℓ_k(φ, …, φ)/k!`.
//!
//! Multilinear evaluation is always done on *homogeneous* arguments (one
//! slot, see [`Homog`]); general [`FieldVector`] arguments are expanded.

mod automorphism;
mod brackets;
mod eom;
mod jacobi;

pub use automorphism::*;
pub use brackets::*;
pub use eom::*;
pub use jacobi::*;

use crate::geom::{GeomField, Kind, Parity};
use crate::ratpoly::{monomials_of_degree, Exponent, Polynomial, Rational, NVARS};
use std::fmt;

/// Field slots in canonical argument order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Nu,
    Mu,
    Gamma,
    Beta,
}

pub const SLOTS: [Slot; 4] = [Slot::Nu, Slot::Mu, Slot::Gamma, Slot::Beta];

impl Slot {
    pub fn parity(self) -> Parity {
        match self {
            Slot::Mu | Slot::Beta => Parity::Odd,
            Slot::Nu | Slot::Gamma => Parity::Even,
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Slot::Mu | Slot::Nu => Kind::PolyVector,
            Slot::Gamma | Slot::Beta => Kind::Form,
        }
    }

    pub fn degree(self) -> u8 {
        match self {
            Slot::Mu | Slot::Gamma => 1,
            Slot::Nu | Slot::Beta => 0,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Nu => "nu",
            Slot::Mu => "mu",
            Slot::Gamma => "gamma",
            Slot::Beta => "beta",
        }
    }

    pub fn zero(self) -> GeomField {
        GeomField::zero(self.kind(), self.degree(), self.parity())
    }
}

/// A single-slot field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Homog {
    pub slot: Slot,
    pub field: GeomField,
}

impl Homog {
    pub fn new(slot: Slot, field: GeomField) -> Self {
        assert_eq!(field.kind(), slot.kind(), "field kind does not match slot");
        assert_eq!(field.degree(), slot.degree(), "field degree does not match slot");
        Homog { slot, field: field.with_parity(slot.parity()) }
    }

    pub fn parity_bit(&self) -> u32 {
        self.slot.parity().bit()
    }

    /// Basis element `z^e · e_i` (index ignored for scalar slots).
    pub fn basis(slot: Slot, e: Exponent, index: usize) -> Self {
        let c = Polynomial::monomial(e, Rational::one());
        let f = match slot {
            Slot::Nu => GeomField::function(c, Parity::Even),
            Slot::Beta => GeomField::scalar_form(c, Parity::Odd),
            Slot::Mu => GeomField::vector(index, c, Parity::Odd),
            Slot::Gamma => GeomField::form(&[index], c, Parity::Even),
        };
        Homog::new(slot, f)
    }

    /// Coefficient degree (the sweep weight).
    pub fn weight(&self) -> i32 {
        self.field.coeff_degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Homog { slot: self.slot, field: self.field.scale(c) }
    }
}

impl fmt::Debug for Homog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.field.to_string();
        let terms: Vec<&str> = body.lines().skip(1).collect();
        write!(f, "{}[{}]", self.slot.name(), terms.join(" + "))
    }
}

/// All monomial basis elements of one slot with coefficient degree `d`.
pub fn slot_basis(slot: Slot, d: i32) -> Vec<Homog> {
    let mut out = Vec::new();
    for e in monomials_of_degree(d) {
        match slot {
            Slot::Nu | Slot::Beta => out.push(Homog::basis(slot, e, 0)),
            Slot::Mu | Slot::Gamma => {
                for i in 0..NVARS {
                    out.push(Homog::basis(slot, e, i));
                }
            }
        }
    }
    out
}

/// A full field `(μ, ν, γ, β)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    pub mu: GeomField,
    pub nu: GeomField,
    pub gamma: GeomField,
    pub beta: GeomField,
}

impl FieldVector {
    pub fn zero() -> Self {
        FieldVector { mu: Slot::Mu.zero(), nu: Slot::Nu.zero(), gamma: Slot::Gamma.zero(), beta: Slot::Beta.zero() }
    }

    pub fn get(&self, s: Slot) -> &GeomField {
        match s {
            Slot::Mu => &self.mu,
            Slot::Nu => &self.nu,
            Slot::Gamma => &self.gamma,
            Slot::Beta => &self.beta,
        }
    }

    fn get_mut(&mut self, s: Slot) -> &mut GeomField {
        match s {
            Slot::Mu => &mut self.mu,
            Slot::Nu => &mut self.nu,
            Slot::Gamma => &mut self.gamma,
            Slot::Beta => &mut self.beta,
        }
    }

    pub fn with(mut self, h: Homog) -> Self {
        self.add_homog(&h);
        self
    }

    pub fn from_homog(h: &Homog) -> Self {
        FieldVector::zero().with(h.clone())
    }

    pub fn add_homog(&mut self, h: &Homog) {
        let slot = self.get_mut(h.slot);
        *slot = (&*slot + &h.field).with_parity(h.slot.parity());
    }

    pub fn add(&self, o: &FieldVector) -> FieldVector {
        let mut r = self.clone();
        for s in SLOTS {
            r.add_homog(&Homog::new(s, o.get(s).clone()));
        }
        r
    }

    pub fn sub(&self, o: &FieldVector) -> FieldVector {
        self.add(&o.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> FieldVector {
        FieldVector {
            mu: self.mu.scale(c),
            nu: self.nu.scale(c),
            gamma: self.gamma.scale(c),
            beta: self.beta.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        SLOTS.iter().all(|&s| self.get(s).is_zero())
    }

    /// Nonzero homogeneous components in slot order.
    pub fn components(&self) -> Vec<Homog> {
        SLOTS
            .iter()
            .filter(|&&s| !self.get(s).is_zero())
            .map(|&s| Homog::new(s, self.get(s).clone()))
            .collect()
    }

    pub fn map<F: Fn(Slot, &GeomField) -> GeomField>(&self, f: F) -> FieldVector {
        let mut r = FieldVector::zero();
        for s in SLOTS {
            r.add_homog(&Homog::new(s, f(s, self.get(s))));
        }
        r
    }

    /// Drop coefficient terms above total degree `d`.
    pub fn truncate_degree(&self, d: i32) -> FieldVector {
        self.map(|_, g| g.map_coeffs(|p| p.truncate_degree(d)))
    }

    pub fn max_coeff_degree(&self) -> i32 {
        SLOTS.iter().filter_map(|&s| self.get(s).coeff_degree()).max().unwrap_or(0)
    }
}

impl fmt::Debug for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(|h| format!("{:?}", h)).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ; "))
        }
    }
}

/// Koszul sign of the permutation that stably sorts `items` by `key`.
pub fn koszul_sort_sign<T, K: Ord + Copy>(items: &[T], key: impl Fn(&T) -> K, parity: impl Fn(&T) -> u32) -> i32 {
    let mut odd = 0u32;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if key(&items[j]) < key(&items[i]) {
                odd += parity(&items[i]) * parity(&items[j]);
            }
        }
    }
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}
