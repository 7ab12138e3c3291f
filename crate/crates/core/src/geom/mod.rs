//! Holomorphic polyvector fields and forms on C^5 with polynomial coefficients.
//!
//! A basis wedge monomial is a bitmask over the five coordinates; bit `i`
//! stands for `∂_{z_{i+1}}` (polyvectors, written `θ_i` below) or `dz_{i+1}`
//! (forms). Masks are always read in increasing index order, so the stored
//! monomial is the sorted representative.
//!
//! Sign conventions (see the conventions chapter of the book):
//!
//! * contraction: `ι_{X∧Y} = ι_Y ι_X`, hence `⟨∂1∧∂2, dz1∧dz2⟩ = +1`;
//! * `Ω⁻¹ ∨ dz_J = sign(J, Jᶜ) θ_{Jᶜ}` and `Ω ∨ θ_I = sign(I, Iᶜ) dz_{Iᶜ}`;
//! * `div` is the left θ-derivative: `div(f θ_I) = Σ_k (-1)^k ∂_{i_k} f θ_{I∖i_k}`;
//! * Schouten: `[P,Q] = Σ_i ∂ᴿ_{θ_i}P · ∂_i Q − (-1)^{(p-1)(q-1)} ∂ᴿ_{θ_i}Q · ∂_i P`.
//!
//! Parity tags are carried, not inferred. The operators here act on the
//! concrete objects; Koszul signs coming from parity tags are applied by the
//! multilinear layers (`linf`, `e510`).

mod text;

pub use text::{parse_field, ParseFieldError};

use crate::ratpoly::{Polynomial, Rational, NVARS};
use std::fmt;
use std::ops::{Add, Neg, Sub};

pub type WedgeMonomial = u8;

pub const FULL_MASK: WedgeMonomial = 0b11111;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    PolyVector,
    Form,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u32) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        Parity::from_bit(self.bit() + 1)
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() + o.bit())
    }
}

pub fn mask_degree(m: WedgeMonomial) -> u8 {
    m.count_ones() as u8
}

pub fn mask_indices(m: WedgeMonomial) -> Vec<usize> {
    (0..NVARS).filter(|i| m >> i & 1 == 1).collect()
}

pub fn mask_of(indices: &[usize]) -> WedgeMonomial {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

/// Sign of `e_A ∧ e_B` relative to `e_{A∪B}`, or `None` if they overlap.
pub fn wedge_sign(a: WedgeMonomial, b: WedgeMonomial) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    // count pairs (i in a, j in b) with i > j
    let mut inv = 0;
    for i in 0..NVARS {
        if a >> i & 1 == 1 {
            inv += (b & ((1u8 << i) - 1)).count_ones();
        }
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

/// Sign and mask of an arbitrary index list; `None` if an index repeats.
pub fn sort_indices(idx: &[usize]) -> Option<(i32, WedgeMonomial)> {
    let mut sign = 1;
    let mut m: WedgeMonomial = 0;
    for &i in idx {
        assert!(i < NVARS, "basis index out of range");
        let s = wedge_sign(m, 1 << i)?;
        sign *= s;
        m |= 1 << i;
    }
    Some((sign, m))
}

fn signed(p: &Polynomial, s: i32) -> Polynomial {
    if s == 1 {
        p.clone()
    } else {
        -p
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeomField {
    kind: Kind,
    degree: u8,
    parity: Parity,
    terms: Vec<(WedgeMonomial, Polynomial)>,
}

impl GeomField {
    pub fn zero(kind: Kind, degree: u8, parity: Parity) -> Self {
        assert!(degree as usize <= NVARS);
        GeomField { kind, degree, parity, terms: Vec::new() }
    }

    /// Collects terms; panics if a mask has the wrong degree.
    pub fn from_terms<I>(kind: Kind, degree: u8, parity: Parity, terms: I) -> Self
    where
        I: IntoIterator<Item = (WedgeMonomial, Polynomial)>,
    {
        let mut v: Vec<(WedgeMonomial, Polynomial)> = Vec::new();
        for (m, p) in terms {
            assert_eq!(mask_degree(m), degree, "wedge monomial of wrong degree");
            assert!(m <= FULL_MASK);
            if p.is_zero() {
                continue;
            }
            v.push((m, p));
        }
        GeomField { kind, degree, parity, terms: collect(v) }
    }

    /// `coeff · e_{i1} ∧ … ∧ e_{ik}` for an arbitrary index order.
    pub fn basis(kind: Kind, parity: Parity, idx: &[usize], coeff: Polynomial) -> Self {
        let degree = idx.len() as u8;
        match sort_indices(idx) {
            None => GeomField::zero(kind, degree, parity),
            Some((s, m)) => GeomField::from_terms(kind, degree, parity, [(m, signed(&coeff, s))]),
        }
    }

    pub fn function(coeff: Polynomial, parity: Parity) -> Self {
        GeomField::from_terms(Kind::PolyVector, 0, parity, [(0, coeff)])
    }

    pub fn scalar_form(coeff: Polynomial, parity: Parity) -> Self {
        GeomField::from_terms(Kind::Form, 0, parity, [(0, coeff)])
    }

    /// `f ∂_i`.
    pub fn vector(i: usize, coeff: Polynomial, parity: Parity) -> Self {
        GeomField::basis(Kind::PolyVector, parity, &[i], coeff)
    }

    pub fn form(idx: &[usize], coeff: Polynomial, parity: Parity) -> Self {
        GeomField::basis(Kind::Form, parity, idx, coeff)
    }

    pub fn polyvector(idx: &[usize], coeff: Polynomial, parity: Parity) -> Self {
        GeomField::basis(Kind::PolyVector, parity, idx, coeff)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn terms(&self) -> &[(WedgeMonomial, Polynomial)] {
        &self.terms
    }

    pub fn coeff(&self, m: WedgeMonomial) -> Polynomial {
        self.terms.iter().find(|(x, _)| *x == m).map(|(_, p)| p.clone()).unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_shape(&self, o: &GeomField) -> bool {
        self.kind == o.kind && self.degree == o.degree
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Self {
        self.map_coeffs(|p| p * f)
    }

    pub fn map_coeffs<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> Self {
        GeomField::from_terms(self.kind, self.degree, self.parity, self.terms.iter().map(|(m, p)| (*m, f(p))))
    }

    pub fn eval_at_zero(&self) -> Self {
        self.map_coeffs(|p| Polynomial::constant(p.eval_at_zero()))
    }

    /// Max coefficient degree, `None` for zero.
    pub fn coeff_degree(&self) -> Option<i32> {
        self.terms.iter().filter_map(|(_, p)| p.degree()).max()
    }

    pub fn min_coeff_degree(&self) -> Option<i32> {
        self.terms.iter().filter_map(|(_, p)| p.min_degree()).min()
    }

    /// Coefficient in `Ω⁰`/`PV⁰`; panics on higher degree.
    pub fn as_function(&self) -> Polynomial {
        assert_eq!(self.degree, 0, "not a degree-0 field");
        self.coeff(0)
    }

    pub fn checked_add(&self, o: &GeomField) -> Self {
        if o.is_zero() && (o.degree != self.degree || o.kind != self.kind) {
            return self.clone();
        }
        if self.is_zero() && (o.degree != self.degree || o.kind != self.kind) {
            return o.clone().with_parity(o.parity);
        }
        assert!(self.same_shape(o), "adding fields of different kind or degree");
        let mut v = self.terms.clone();
        v.extend(o.terms.iter().cloned());
        GeomField { kind: self.kind, degree: self.degree, parity: self.parity, terms: collect(v) }
    }
}

fn collect(mut v: Vec<(WedgeMonomial, Polynomial)>) -> Vec<(WedgeMonomial, Polynomial)> {
    v.sort_by_key(|(m, _)| *m);
    let mut out: Vec<(WedgeMonomial, Polynomial)> = Vec::with_capacity(v.len());
    for (m, p) in v {
        match out.last_mut() {
            Some((lm, lp)) if *lm == m => *lp = &*lp + &p,
            _ => out.push((m, p)),
        }
    }
    out.retain(|(_, p)| !p.is_zero());
    out
}

impl<'a> Add<&'a GeomField> for &'a GeomField {
    type Output = GeomField;
    fn add(self, o: &GeomField) -> GeomField {
        self.checked_add(o)
    }
}

impl<'a> Sub<&'a GeomField> for &'a GeomField {
    type Output = GeomField;
    fn sub(self, o: &GeomField) -> GeomField {
        self.checked_add(&-o)
    }
}

impl Neg for &GeomField {
    type Output = GeomField;
    fn neg(self) -> GeomField {
        self.map_coeffs(|p| -p)
    }
}

impl Add for GeomField {
    type Output = GeomField;
    fn add(self, o: GeomField) -> GeomField {
        &self + &o
    }
}

impl Sub for GeomField {
    type Output = GeomField;
    fn sub(self, o: GeomField) -> GeomField {
        &self - &o
    }
}

impl Neg for GeomField {
    type Output = GeomField;
    fn neg(self) -> GeomField {
        -&self
    }
}

/// Wedge product of two fields of the same kind.
pub fn wedge(a: &GeomField, b: &GeomField) -> GeomField {
    assert_eq!(a.kind, b.kind, "wedge of mixed kinds");
    let degree = a.degree + b.degree;
    let parity = a.parity + b.parity;
    if degree as usize > NVARS {
        return GeomField { kind: a.kind, degree: degree.min(NVARS as u8), parity, terms: Vec::new() };
    }
    let mut v = Vec::new();
    for (ma, pa) in &a.terms {
        for (mb, pb) in &b.terms {
            if let Some(s) = wedge_sign(*ma, *mb) {
                v.push((ma | mb, signed(&(pa * pb), s)));
            }
        }
    }
    GeomField::from_terms(a.kind, degree, parity, v)
}

/// Interior contraction of a polyvector into a form.
///
/// For `p <= q` the result is a form of degree `q - p`:
/// `θ_I ∨ dz_J = sign(I, J∖I) dz_{J∖I}` when `I ⊆ J`. For `p > q` the result
/// is a polyvector of degree `p - q` with the mirror rule.
pub fn contract(pv: &GeomField, form: &GeomField) -> GeomField {
    assert_eq!(pv.kind, Kind::PolyVector, "contract: first argument must be a polyvector");
    assert_eq!(form.kind, Kind::Form, "contract: second argument must be a form");
    let parity = pv.parity + form.parity;
    let (kind, degree) = if pv.degree <= form.degree {
        (Kind::Form, form.degree - pv.degree)
    } else {
        (Kind::PolyVector, pv.degree - form.degree)
    };
    let mut v = Vec::new();
    for (mi, pi) in &pv.terms {
        for (mj, pj) in &form.terms {
            let (small, big) = if kind == Kind::Form { (*mi, *mj) } else { (*mj, *mi) };
            if small & big != small {
                continue;
            }
            let rest = big & !small;
            let s = wedge_sign(small, rest).unwrap();
            v.push((rest, signed(&(pi * pj), s)));
        }
    }
    GeomField::from_terms(kind, degree, parity, v)
}

/// The Calabi–Yau isomorphisms `PV^p ≅ Ω^{5-p}` (`Ω ∨ −`) and `Ω^q ≅ PV^{5-q}` (`Ω⁻¹ ∨ −`).
pub fn omega_dual(x: &GeomField) -> GeomField {
    let kind = match x.kind {
        Kind::PolyVector => Kind::Form,
        Kind::Form => Kind::PolyVector,
    };
    let degree = NVARS as u8 - x.degree;
    let v = x.terms.iter().map(|(m, p)| {
        let c = FULL_MASK & !m;
        (c, signed(p, wedge_sign(*m, c).unwrap()))
    });
    GeomField::from_terms(kind, degree, x.parity, v)
}

/// Holomorphic de Rham differential `∂(f dz_I) = Σ_i ∂_i f dz_i ∧ dz_I`.
pub fn del(f: &GeomField) -> GeomField {
    assert_eq!(f.kind, Kind::Form, "del acts on forms");
    let degree = f.degree + 1;
    if degree as usize > NVARS {
        return GeomField::zero(Kind::Form, NVARS as u8, f.parity);
    }
    let mut v = Vec::new();
    for (m, p) in &f.terms {
        for i in 0..NVARS {
            if let Some(s) = wedge_sign(1 << i, *m) {
                let d = p.partial_derivative(i);
                if !d.is_zero() {
                    v.push(((1 << i) | m, signed(&d, s)));
                }
            }
        }
    }
    GeomField::from_terms(Kind::Form, degree, f.parity, v)
}

/// Position-sign for removing index `i` from `m` on the left: `(-1)^{#j<i in m}`.
fn left_sign(m: WedgeMonomial, i: usize) -> i32 {
    if (m & ((1u8 << i) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Same for removal on the right: `(-1)^{#j>i in m}`.
fn right_sign(m: WedgeMonomial, i: usize) -> i32 {
    if (m >> (i + 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divergence with respect to `Ω = dz1 ∧ … ∧ dz5`.
pub fn div(pv: &GeomField) -> GeomField {
    assert_eq!(pv.kind, Kind::PolyVector, "div acts on polyvectors");
    if pv.degree == 0 {
        return GeomField::zero(Kind::PolyVector, 0, pv.parity);
    }
    let mut v = Vec::new();
    for (m, p) in &pv.terms {
        for i in 0..NVARS {
            if m >> i & 1 == 1 {
                let d = p.partial_derivative(i);
                if !d.is_zero() {
                    v.push((m & !(1 << i), signed(&d, left_sign(*m, i))));
                }
            }
        }
    }
    GeomField::from_terms(Kind::PolyVector, pv.degree - 1, pv.parity, v)
}

/// Right θ-derivative `∂ᴿ/∂θ_i`.
fn theta_right_derivative(x: &GeomField, i: usize) -> GeomField {
    let v = x
        .terms
        .iter()
        .filter(|(m, _)| m >> i & 1 == 1)
        .map(|(m, p)| (m & !(1 << i), signed(p, right_sign(*m, i))));
    GeomField::from_terms(Kind::PolyVector, x.degree.saturating_sub(1), x.parity, v.collect::<Vec<_>>())
}

fn z_derivative(x: &GeomField, i: usize) -> GeomField {
    x.map_coeffs(|p| p.partial_derivative(i))
}

/// Schouten–Nijenhuis bracket. Output parity is `pa + pb + 1`.
pub fn schouten(a: &GeomField, b: &GeomField) -> GeomField {
    assert_eq!(a.kind, Kind::PolyVector);
    assert_eq!(b.kind, Kind::PolyVector);
    let p = a.degree as i32;
    let q = b.degree as i32;
    let parity = a.parity + b.parity + Parity::Odd;
    let out_deg = p + q - 1;
    if out_deg < 0 || out_deg as usize > NVARS {
        return GeomField::zero(Kind::PolyVector, out_deg.clamp(0, NVARS as i32) as u8, parity);
    }
    let mut acc = GeomField::zero(Kind::PolyVector, out_deg as u8, parity);
    let swap_sign = if ((p - 1) * (q - 1)).rem_euclid(2) == 0 { 1 } else { -1 };
    for i in 0..NVARS {
        if p > 0 {
            let t = wedge(&theta_right_derivative(a, i), &z_derivative(b, i));
            if !t.is_zero() {
                acc = acc.checked_add(&t);
            }
        }
        if q > 0 {
            let t = wedge(&theta_right_derivative(b, i), &z_derivative(a, i));
            if !t.is_zero() {
                acc = acc.checked_add(&if swap_sign == 1 { -t } else { t });
            }
        }
    }
    acc.with_parity(parity)
}

/// `L_v x`: Cartan formula on forms, Schouten bracket on polyvectors.
pub fn lie_derivative(v: &GeomField, x: &GeomField) -> GeomField {
    assert_eq!(v.kind, Kind::PolyVector);
    assert_eq!(v.degree, 1, "lie_derivative needs a vector field");
    match x.kind {
        Kind::PolyVector => schouten(v, x),
        Kind::Form => {
            let parity = v.parity + x.parity;
            let mut out = GeomField::zero(Kind::Form, x.degree, parity);
            if x.degree > 0 {
                out = out.checked_add(&del(&contract(v, x)));
            }
            if (x.degree as usize) < NVARS {
                out = out.checked_add(&contract(v, &del(x)));
            }
            out.with_parity(parity)
        }
    }
}

/// `E = Σ z_i ∂_i`.
pub fn euler_vector_field() -> GeomField {
    GeomField::from_terms(
        Kind::PolyVector,
        1,
        Parity::Even,
        (0..NVARS).map(|i| (1u8 << i, Polynomial::var(i))),
    )
}

/// Every `z^e dz_I` (or `z^e θ_I`) with `|I| = degree` and `|e| = coeff_degree`.
pub fn monomial_basis(kind: Kind, degree: u8, coeff_degree: i32, parity: Parity) -> Vec<GeomField> {
    let masks: Vec<WedgeMonomial> = (0..32u8).filter(|m| mask_degree(*m) == degree).collect();
    let mut out = Vec::new();
    for e in crate::ratpoly::monomials_of_degree(coeff_degree) {
        for &m in &masks {
            let c = Polynomial::monomial(e, Rational::one());
            out.push(GeomField::from_terms(kind, degree, parity, [(m, c)]));
        }
    }
    out
}

/// Torus weight of `z^e dz_I` (`e + 1_I`) or `z^e θ_I` (`e − 1_I`). Every
/// operator in this module is homogeneous for it.
pub fn multiweight(kind: Kind, m: WedgeMonomial, e: &crate::ratpoly::Exponent) -> [i32; NVARS] {
    let s = if kind == Kind::Form { 1 } else { -1 };
    let mut w = *e;
    for (i, x) in w.iter_mut().enumerate() {
        if m >> i & 1 == 1 {
            *x += s;
        }
    }
    w
}

impl GeomField {
    /// Multiweight if all terms share one.
    pub fn multiweight(&self) -> Option<[i32; NVARS]> {
        let mut out = None;
        for (m, p) in &self.terms {
            for (e, _) in p.terms() {
                let w = multiweight(self.kind, *m, e);
                match out {
                    None => out = Some(w),
                    Some(o) if o != w => return None,
                    _ => {}
                }
            }
        }
        out
    }

    /// Flat `((mask, exponent), coefficient)` list.
    pub fn coords(&self) -> Vec<((WedgeMonomial, crate::ratpoly::Exponent), Rational)> {
        self.terms.iter().flat_map(|(m, p)| p.terms().iter().map(move |(e, c)| ((*m, *e), c.clone()))).collect()
    }
}

impl fmt::Display for GeomField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::to_text(self))
    }
}

impl fmt::Debug for GeomField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeomField[{}]", text::to_text(self).replace('\n', "; "))
    }
}
