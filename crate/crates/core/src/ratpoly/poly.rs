//! Sparse polynomials in five variables over exact rationals.
//!
//! Terms live in a `Vec` sorted by exponent (lexicographic on the array),
//! with no zero coefficients. In [`Mode::Laurent`] the masked variables carry
//! exponents `<= -1` and the product follows the local-cohomology rule: a
//! term whose masked exponent reaches `>= 0` is annihilated.

use super::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NVARS: usize = 5;

pub type Exponent = [i32; NVARS];

pub const ZERO_EXP: Exponent = [0; NVARS];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Ordinary,
    /// Bit `i` of `mask` set means variable `i` is restricted to exponents `<= -1`.
    Laurent { mask: u8 },
}

impl Mode {
    pub fn mask(self) -> u8 {
        match self {
            Mode::Ordinary => 0,
            Mode::Laurent { mask } => mask,
        }
    }

    fn from_mask(mask: u8) -> Mode {
        if mask == 0 {
            Mode::Ordinary
        } else {
            Mode::Laurent { mask }
        }
    }

    pub fn admits(self, e: &Exponent) -> bool {
        let m = self.mask();
        (0..NVARS).all(|i| if m >> i & 1 == 1 { e[i] <= -1 } else { e[i] >= 0 })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("exponent {exponent:?} violates mode {mode:?}")]
    ModeViolation { exponent: Exponent, mode: Mode },
    #[error("incompatible modes {0:?} and {1:?}")]
    ModeMismatch(Mode, Mode),
}

pub fn exp_add(a: &Exponent, b: &Exponent) -> Exponent {
    let mut e = *a;
    for i in 0..NVARS {
        e[i] += b[i];
    }
    e
}

pub fn exp_degree(e: &Exponent) -> i32 {
    e.iter().sum()
}

pub fn unit_exp(i: usize) -> Exponent {
    let mut e = ZERO_EXP;
    e[i] = 1;
    e
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Exponent, Rational)>,
    mode: Mode,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new(), mode: Mode::Ordinary }
    }

    pub fn zero_in(mode: Mode) -> Self {
        Polynomial { terms: Vec::new(), mode }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(ZERO_EXP, c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `z_i` with `i` 0-based.
    pub fn var(i: usize) -> Self {
        Self::monomial(unit_exp(i), Rational::one())
    }

    /// Ordinary monomial. Panics on negative exponents.
    pub fn monomial(e: Exponent, c: Rational) -> Self {
        Self::try_monomial(Mode::Ordinary, e, c).expect("negative exponent in ordinary monomial")
    }

    pub fn try_monomial(mode: Mode, e: Exponent, c: Rational) -> Result<Self, PolyError> {
        if !mode.admits(&e) {
            return Err(PolyError::ModeViolation { exponent: e, mode });
        }
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        Ok(Polynomial { terms, mode })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I>(mode: Mode, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut v: Vec<(Exponent, Rational)> = Vec::new();
        for (e, c) in terms {
            if !mode.admits(&e) {
                return Err(PolyError::ModeViolation { exponent: e, mode });
            }
            v.push((e, c));
        }
        Ok(Polynomial { terms: normalize(v), mode })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn nvars(&self) -> usize {
        NVARS
    }

    pub fn terms(&self) -> &[(Exponent, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        match self.terms.binary_search_by(|(x, _)| x.cmp(e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Maximum total degree, `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.iter().map(|(e, _)| exp_degree(e)).max()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.iter().map(|(e, _)| exp_degree(e)).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: i32) -> Self {
        Polynomial {
            terms: self.terms.iter().filter(|(e, _)| exp_degree(e) == d).cloned().collect(),
            mode: self.mode,
        }
    }

    /// Keep only terms of total degree `<= d`.
    pub fn truncate_degree(&self, d: i32) -> Self {
        Polynomial {
            terms: self.terms.iter().filter(|(e, _)| exp_degree(e) <= d).cloned().collect(),
            mode: self.mode,
        }
    }

    /// Constant coefficient (value at the origin). Laurent classes have none.
    pub fn eval_at_zero(&self) -> Rational {
        self.coeff(&ZERO_EXP)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero_in(self.mode);
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
            mode: self.mode,
        }
    }

    /// Multiply by the monomial `z^e` under the truncation rule.
    pub fn shift(&self, e: &Exponent) -> Self {
        let mode = self.mode;
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (exp_add(x, e), c.clone()))
                .filter(|(x, _)| mode.admits(x))
                .collect(),
            mode,
        }
    }

    fn join_mode(a: Mode, b: Mode) -> Mode {
        Mode::from_mask(a.mask() | b.mask())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.mode != other.mode {
            return Err(PolyError::ModeMismatch(self.mode, other.mode));
        }
        Ok(Polynomial { terms: merge(&self.terms, &other.terms, false), mode: self.mode })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(-other);
        }
        if self.mode != other.mode {
            return Err(PolyError::ModeMismatch(self.mode, other.mode));
        }
        Ok(Polynomial { terms: merge(&self.terms, &other.terms, true), mode: self.mode })
    }

    fn raw_product(&self, other: &Self) -> Vec<(Exponent, Rational)> {
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                v.push((exp_add(e1, e2), c1 * c2));
            }
        }
        v
    }

    /// Product that refuses to leave the mode.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mode = Self::join_mode(self.mode, other.mode);
        let raw = self.raw_product(other);
        if let Some((e, _)) = raw.iter().find(|(e, _)| !mode.admits(e)) {
            return Err(PolyError::ModeViolation { exponent: *e, mode });
        }
        Ok(Polynomial { terms: normalize(raw), mode })
    }

    /// Product with the local-cohomology annihilation rule.
    pub fn truncating_mul(&self, other: &Self) -> Self {
        let mode = Self::join_mode(self.mode, other.mode);
        let raw = self.raw_product(other).into_iter().filter(|(e, _)| mode.admits(e)).collect();
        Polynomial { terms: normalize(raw), mode }
    }

    /// `∂/∂z_i`, `i` 0-based.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < NVARS, "variable index out of range");
        let mode = self.mode;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] != 0)
            .map(|(e, c)| {
                let mut f = *e;
                f[i] -= 1;
                (f, c * &Rational::from_int(e[i] as i64))
            })
            .filter(|(f, _)| mode.admits(f))
            .collect();
        // Derivative preserves the exponent order within a fixed variable shift
        // only up to collisions, which cannot happen; still normalize to be safe.
        Polynomial { terms: normalize(terms), mode }
    }

    /// `Σ z_i ∂_i p`.
    pub fn euler_apply(&self) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * &Rational::from_int(exp_degree(e) as i64)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            mode: self.mode,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = acc.truncating_mul(self);
        }
        acc
    }

    /// Evaluate at a rational point (ordinary mode only).
    pub fn eval(&self, point: &[Rational; NVARS]) -> Rational {
        assert_eq!(self.mode, Mode::Ordinary, "evaluation of a Laurent class");
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for i in 0..NVARS {
                    if e[i] > 0 {
                        v = &v * &point[i].pow(e[i]);
                    }
                }
                v
            })
            .sum()
    }

    /// Total-degree truncated product, used for power series.
    pub fn mul_truncated(&self, other: &Self, max_degree: i32) -> Self {
        let raw = self
            .raw_product(other)
            .into_iter()
            .filter(|(e, _)| exp_degree(e) <= max_degree)
            .collect();
        Polynomial { terms: normalize(raw), mode: Self::join_mode(self.mode, other.mode) }
    }

    /// Largest coefficient denominator lcm and content are not needed; this
    /// simply reports whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }
}

fn normalize(mut v: Vec<(Exponent, Rational)>) -> Vec<(Exponent, Rational)> {
    v.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Exponent, Rational)> = Vec::with_capacity(v.len());
    for (e, c) in v {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc += &c,
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn merge(a: &[(Exponent, Rational)], b: &[(Exponent, Rational)], negate_b: bool) -> Vec<(Exponent, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, nb(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(e, c)| (*e, nb(c))));
    out
}

impl Default for Polynomial {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("adding polynomials of different modes")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("subtracting polynomials of different modes")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.truncating_mul(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), mode: self.mode }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut parts = Vec::new();
            if !a.is_one() || *e == ZERO_EXP {
                parts.push(a.to_string());
            }
            for (i, &m) in e.iter().enumerate() {
                match m {
                    0 => {}
                    1 => parts.push(format!("z{}", i + 1)),
                    _ => parts.push(format!("z{}^{}", i + 1, m)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// All exponents in 5 variables with the given total degree, in lex order.
pub fn monomials_of_degree(d: i32) -> Vec<Exponent> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let mut cur = ZERO_EXP;
    fn rec(i: usize, rem: i32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if i == NVARS - 1 {
            cur[i] = rem;
            out.push(*cur);
            return;
        }
        for k in 0..=rem {
            cur[i] = k;
            rec(i + 1, rem - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Number of monomials of degree `d` in `n` variables: C(d+n-1, n-1).
pub fn count_monomials(n: usize, d: i32) -> usize {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return usize::from(d == 0);
    }
    let d = d as usize;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 1..n {
        num *= (d + k) as u128;
        den *= k as u128;
    }
    (num / den) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    #[test]
    fn ring_examples() {
        let p = &(&z(0) + &z(1)) * &(&z(0) - &z(1));
        let q = &(&z(0) * &z(0)) - &(&z(1) * &z(1));
        assert_eq!(p, q);
        assert_eq!(&p + &Polynomial::zero(), p);
        let m = &(&(&z(0) * &z(0)) * &z(2)) * &z(1);
        assert_eq!(m, Polynomial::monomial([2, 1, 1, 0, 0], Rational::one()));
    }

    #[test]
    fn derivative_examples() {
        let p = Polynomial::monomial([2, 1, 0, 0, 0], Rational::one());
        assert_eq!(p.partial_derivative(0), Polynomial::monomial([1, 1, 0, 0, 0], Rational::from_int(2)));
        assert!(z(0).partial_derivative(2).is_zero());
        let mode = Mode::Laurent { mask: 0b00001 };
        let w = Polynomial::try_monomial(mode, [-1, 0, 0, 0, 0], Rational::one()).unwrap();
        let dw = Polynomial::try_monomial(mode, [-2, 0, 0, 0, 0], Rational::from_int(-1)).unwrap();
        assert_eq!(w.partial_derivative(0), dw);
    }

    #[test]
    fn euler_examples() {
        let p = &z(0) * &z(1);
        assert_eq!(p.euler_apply(), p.scale(&Rational::from_int(2)));
        assert!(Polynomial::one().euler_apply().is_zero());
        let c = z(0).pow(3);
        assert_eq!(c.euler_apply(), c.scale(&Rational::from_int(3)));
    }

    #[test]
    fn laurent_truncation() {
        let mode = Mode::Laurent { mask: 0b11110 };
        let f = Polynomial::try_monomial(mode, [0, -1, -1, -1, -1], Rational::one()).unwrap();
        assert!((&f * &z(1)).is_zero());
        assert!(f.checked_mul(&z(1)).is_err());
        assert_eq!(f.truncating_mul(&z(0)).terms()[0].0, [1, -1, -1, -1, -1]);
        assert!(Polynomial::try_monomial(mode, [0, 0, -1, -1, -1], Rational::one()).is_err());
    }

    #[test]
    fn monomial_counts() {
        for d in 0..6 {
            assert_eq!(monomials_of_degree(d).len(), count_monomials(5, d));
        }
        assert_eq!(count_monomials(5, 2), 15);
    }
}
