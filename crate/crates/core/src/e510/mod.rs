//! The exceptional super Lie algebra E(5,10) and its central extension.
//!
//! Even part: divergence-free vector fields. Odd part: closed two-forms.
//! Brackets:
//!
//! * `[μ, μ'] = ` Lie bracket of vector fields
//! * `[μ, α] = L_μ α = −[α, μ]`
//! * `[α, α'] = Ω⁻¹ ∨ (α ∧ α')`, so `[dz1∧dz2, dz3∧dz4] = ∂5`
//!
//! The central line `C·b` is never produced by the 2-bracket. It is reached
//! by the 3-ary operation [`phi`], which is a cocycle for the bracket above.
//!
//! Weights: `2(d−1)` for a vector field with coefficients of degree `d`,
//! `2e−1` for a two-form with coefficients of degree `e`, and `−5` for `b`.
//! Brackets add weights and `φ` is supported in total weight `−5`.

mod basis;
mod cocycle;
mod embed;
mod transfer;
mod twist;

pub use basis::*;
pub use cocycle::*;
pub use embed::*;
pub use transfer::*;
pub use twist::*;

use crate::geom::{del, div, lie_derivative, omega_dual, schouten, wedge, GeomField, Kind, Parity, WedgeMonomial};
use crate::ratpoly::{exp_degree, Exponent, Rational};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum E510Error {
    #[error("even part must be a vector field")]
    NotVectorField,
    #[error("odd part must be a two-form")]
    NotTwoForm,
    #[error("even part is not divergence-free: div = {0}")]
    NotDivergenceFree(String),
    #[error("odd part is not closed: ∂ = {0}")]
    NotClosed(String),
}

/// `μ + α + c·b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct E510Element {
    mu: GeomField,
    alpha: GeomField,
    c: Rational,
}

/// Coordinate key: part (0 even, 1 odd, 2 central), wedge mask, exponent.
pub type E510Key = (u8, WedgeMonomial, Exponent);

impl E510Element {
    pub fn zero() -> Self {
        E510Element {
            mu: GeomField::zero(Kind::PolyVector, 1, Parity::Even),
            alpha: GeomField::zero(Kind::Form, 2, Parity::Odd),
            c: Rational::zero(),
        }
    }

    pub fn new(mu: GeomField, alpha: GeomField, c: Rational) -> Result<Self, E510Error> {
        if mu.kind() != Kind::PolyVector || mu.degree() != 1 {
            return Err(E510Error::NotVectorField);
        }
        if alpha.kind() != Kind::Form || alpha.degree() != 2 {
            return Err(E510Error::NotTwoForm);
        }
        let d = div(&mu);
        if !d.is_zero() {
            return Err(E510Error::NotDivergenceFree(d.to_string()));
        }
        let d = del(&alpha);
        if !d.is_zero() {
            return Err(E510Error::NotClosed(d.to_string()));
        }
        Ok(Self::unchecked(mu, alpha, c))
    }

    pub(crate) fn unchecked(mu: GeomField, alpha: GeomField, c: Rational) -> Self {
        E510Element { mu: mu.with_parity(Parity::Even), alpha: alpha.with_parity(Parity::Odd), c }
    }

    pub fn even(mu: GeomField) -> Result<Self, E510Error> {
        Self::new(mu, Self::zero().alpha, Rational::zero())
    }

    pub fn odd(alpha: GeomField) -> Result<Self, E510Error> {
        Self::new(Self::zero().mu, alpha, Rational::zero())
    }

    pub fn central(c: Rational) -> Self {
        E510Element { c, ..Self::zero() }
    }

    pub fn mu(&self) -> &GeomField {
        &self.mu
    }

    pub fn alpha(&self) -> &GeomField {
        &self.alpha
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.mu.is_zero() && self.alpha.is_zero() && self.c.is_zero()
    }

    /// Parity if homogeneous. Zero and central elements count as even.
    pub fn parity(&self) -> Option<Parity> {
        match (self.mu.is_zero() && self.c.is_zero(), self.alpha.is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            (false, false) => None,
        }
    }

    pub fn parity_bit(&self) -> u32 {
        self.parity().expect("inhomogeneous parity").bit()
    }

    /// Weight if every component has the same one; `None` for zero.
    pub fn weight(&self) -> Option<i32> {
        let mut ws = Vec::new();
        for (_, p) in self.mu.terms() {
            ws.extend(p.terms().iter().map(|(e, _)| 2 * (exp_degree(e) - 1)));
        }
        for (_, p) in self.alpha.terms() {
            ws.extend(p.terms().iter().map(|(e, _)| 2 * exp_degree(e) - 1));
        }
        if !self.c.is_zero() {
            ws.push(-5);
        }
        let w = *ws.first()?;
        ws.iter().all(|&x| x == w).then_some(w)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        E510Element { mu: self.mu.scale(k), alpha: self.alpha.scale(k), c: &self.c * k }
    }

    pub fn coords(&self) -> Vec<(E510Key, Rational)> {
        let mut out: Vec<(E510Key, Rational)> =
            self.mu.coords().into_iter().map(|((m, e), c)| ((0, m, e), c)).collect();
        out.extend(self.alpha.coords().into_iter().map(|((m, e), c)| ((1, m, e), c)));
        if !self.c.is_zero() {
            out.push(((2, 0, [0; 5]), self.c.clone()));
        }
        out
    }

    /// Torus multiweight of a homogeneous element (`None` for zero or mixed).
    pub fn multiweight(&self) -> Option<[i32; 5]> {
        match (self.mu.multiweight(), self.alpha.multiweight()) {
            (Some(a), None) if self.alpha.is_zero() => Some(a),
            (None, Some(b)) if self.mu.is_zero() => Some(b),
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }
}

impl std::ops::Add for &E510Element {
    type Output = E510Element;
    fn add(self, o: &E510Element) -> E510Element {
        E510Element::unchecked(&self.mu + &o.mu, &self.alpha + &o.alpha, &self.c + &o.c)
    }
}

impl std::ops::Sub for &E510Element {
    type Output = E510Element;
    fn sub(self, o: &E510Element) -> E510Element {
        E510Element::unchecked(&self.mu - &o.mu, &self.alpha - &o.alpha, &self.c - &o.c)
    }
}

impl std::ops::Neg for &E510Element {
    type Output = E510Element;
    fn neg(self) -> E510Element {
        self.scale(&Rational::from_int(-1))
    }
}

impl fmt::Display for E510Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let body = |g: &GeomField| g.to_string().lines().skip(1).collect::<Vec<_>>().join(" + ");
        if !self.mu.is_zero() {
            parts.push(body(&self.mu));
        }
        if !self.alpha.is_zero() {
            parts.push(body(&self.alpha));
        }
        if !self.c.is_zero() {
            parts.push(format!("{} * b", self.c));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for E510Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E510[{}]", self)
    }
}

/// Which sign of the bracket table to flip, for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketCorruption {
    None,
    /// `[μ, α] = −L_μ α`.
    FlipEvenOdd,
    /// Flip the frame part of every Lie derivative: `L_μ T ↦ 2 D_μ T − L_μ T`
    /// where `D_μ` differentiates coefficients only.
    FlipTransport,
}

/// `μ` acting on the coefficients of `t` only.
fn coefficient_derivative(mu: &GeomField, t: &GeomField) -> GeomField {
    t.map_coeffs(|p| {
        (0..crate::ratpoly::NVARS).fold(crate::ratpoly::Polynomial::zero_in(p.mode()), |acc, j| {
            let c = mu.coeff(1 << j);
            if c.is_zero() {
                acc
            } else {
                let t = &c * &p.partial_derivative(j);
                if t.is_zero() {
                    acc
                } else {
                    &acc + &t
                }
            }
        })
    })
}

fn transport_flip(mu: &GeomField, t: &GeomField, lie: GeomField) -> GeomField {
    let d = coefficient_derivative(mu, t).with_parity(lie.parity());
    &(&d + &d) - &lie
}

pub fn e510_bracket(x: &E510Element, y: &E510Element) -> E510Element {
    e510_bracket_with(x, y, BracketCorruption::None)
}

pub fn e510_bracket_with(x: &E510Element, y: &E510Element, corruption: BracketCorruption) -> E510Element {
    let flip = corruption == BracketCorruption::FlipTransport;
    let mut mu = schouten(&x.mu, &y.mu).with_parity(Parity::Even);
    if flip && !x.mu.is_zero() && !y.mu.is_zero() {
        mu = transport_flip(&x.mu, &y.mu, mu);
    }
    if !x.alpha.is_zero() && !y.alpha.is_zero() {
        mu = &mu + &omega_dual(&wedge(&x.alpha, &y.alpha));
    }
    let mut alpha = GeomField::zero(Kind::Form, 2, Parity::Odd);
    let lie = |m: &GeomField, a: &GeomField| {
        let l = lie_derivative(m, a);
        if flip {
            transport_flip(m, a, l)
        } else {
            l
        }
    };
    if !x.mu.is_zero() && !y.alpha.is_zero() {
        alpha = &alpha + &lie(&x.mu, &y.alpha);
    }
    if !y.mu.is_zero() && !x.alpha.is_zero() {
        alpha = &alpha - &lie(&y.mu, &x.alpha);
    }
    if corruption == BracketCorruption::FlipEvenOdd {
        alpha = -alpha;
    }
    if corruption == BracketCorruption::None {
        debug_assert!(div(&mu).is_zero(), "bracket left Vect0: {}", mu);
        debug_assert!(del(&alpha).is_zero(), "bracket left closed two-forms: {}", alpha);
    }
    E510Element::unchecked(mu, alpha, Rational::zero())
}

/// `(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]]`.
pub fn super_jacobiator(x: &E510Element, y: &E510Element, z: &E510Element, corruption: BracketCorruption) -> E510Element {
    jacobi_terms(x, y, z, None, corruption).0
}

/// Jacobiator plus whether any nested bracket was nonzero. `xy` may carry
/// a precomputed `[x, y]`.
pub fn jacobi_terms(
    x: &E510Element,
    y: &E510Element,
    z: &E510Element,
    xy: Option<&E510Element>,
    corruption: BracketCorruption,
) -> (E510Element, bool) {
    let b = |a: &E510Element, c: &E510Element| e510_bracket_with(a, c, corruption);
    let (px, py, pz) = (x.parity_bit(), y.parity_bit(), z.parity_bit());
    let sgn = |k: u32, e: E510Element| if k % 2 == 1 { -&e } else { e };
    let xy_owned;
    let xy = match xy {
        Some(v) => v,
        None => {
            xy_owned = b(x, y);
            &xy_owned
        }
    };
    let t1 = b(x, &b(y, z));
    let t2 = b(y, &b(z, x));
    let t3 = b(z, xy);
    let nontrivial = !(t1.is_zero() && t2.is_zero() && t3.is_zero());
    let sum = &(&sgn(px * pz, t1) + &sgn(py * px, t2)) + &sgn(pz * py, t3);
    (sum, nontrivial)
}
