use super::{koszul_sort_sign, FieldVector, Homog, Slot};
use crate::geom::{contract, del, div, lie_derivative, omega_dual, schouten, wedge, GeomField};
use crate::ratpoly::{factorial, Polynomial, Rational};

/// Type pattern of an argument list: counts of `(ν, μ, γ, β)`.
pub type Pattern = [usize; 4];

pub fn pattern_of(args: &[&Homog]) -> Pattern {
    let mut p = [0; 4];
    for a in args {
        p[a.slot.index()] += 1;
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinfError {
    #[error("arity {0} outside 1..={1}")]
    ArityOutOfRange(usize, usize),
    #[error("1/(1-ν) needs ν(0) = 0 or an explicit truncation order")]
    NotTruncatable,
}

/// A family of graded-symmetric odd brackets.
pub trait Brackets {
    fn max_arity(&self) -> usize;

    /// Output slot of the bracket on this pattern, `None` if it vanishes identically.
    fn pattern_output(&self, p: &Pattern) -> Option<Slot>;

    /// The bracket on arguments already sorted into slot order.
    fn sorted_bracket(&self, p: &Pattern, args: &[&Homog]) -> Option<GeomField>;

    /// `ℓ_k` on homogeneous arguments in any order.
    fn bracket(&self, args: &[&Homog]) -> Option<Homog> {
        if args.is_empty() || args.len() > self.max_arity() {
            return None;
        }
        let p = pattern_of(args);
        let out = self.pattern_output(&p)?;
        let mut sorted: Vec<&Homog> = args.to_vec();
        let sign = koszul_sort_sign(args, |a| a.slot, |a| a.parity_bit());
        sorted.sort_by_key(|a| a.slot);
        let f = self.sorted_bracket(&p, &sorted)?;
        if f.is_zero() {
            return None;
        }
        let h = Homog::new(out, f);
        Some(if sign == 1 { h } else { h.scale(&Rational::from_int(-1)) })
    }

    /// `ℓ_k` on general field vectors, by multilinear expansion.
    fn bracket_fields(&self, args: &[&FieldVector]) -> Result<FieldVector, LinfError> {
        let k = args.len();
        if k == 0 || k > self.max_arity() {
            return Err(LinfError::ArityOutOfRange(k, self.max_arity()));
        }
        let comps: Vec<Vec<Homog>> = args.iter().map(|a| a.components()).collect();
        let mut out = FieldVector::zero();
        let mut idx = vec![0usize; k];
        if comps.iter().any(|c| c.is_empty()) {
            return Ok(out);
        }
        loop {
            let pick: Vec<&Homog> = (0..k).map(|i| &comps[i][idx[i]]).collect();
            if let Some(h) = self.bracket(&pick) {
                out.add_homog(&h);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(out);
                }
                idx[i] += 1;
                if idx[i] < comps[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }
}

fn nu_product(args: &[&Homog]) -> Polynomial {
    args.iter().fold(Polynomial::one(), |acc, a| &acc * &a.field.as_function())
}

fn signed(f: GeomField, s: i32) -> GeomField {
    if s == 1 {
        f
    } else {
        -f
    }
}

/// Slot signs of the non-strict model, fixed by the Jacobi sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinfSigns {
    /// `ℓ₁: μ ↦ ν`
    pub div: i32,
    /// `ℓ₁: β ↦ γ`
    pub del: i32,
    /// `ℓ(ν…, μ, μ) ↦ μ`
    pub mumu: i32,
    /// `ℓ₂(γ, γ) ↦ μ`
    pub gamgam: i32,
    /// `ℓ(ν…, μ, γ) ↦ γ`
    pub mugam: i32,
    /// `ℓ(ν…, μ, μ, γ) ↦ β`
    pub mumugam: i32,
}

impl LinfSigns {
    pub const PINNED: LinfSigns = LinfSigns { div: -1, del: 1, mumu: 1, gamgam: 1, mugam: 1, mumugam: 1 };
}

/// Deliberate corruptions for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Flip every bracket carrying exactly this many `ν` arguments.
    FlipNuPower(usize),
    /// Flip the strict `ℓ₂(μ, γ)`.
    FlipStrictMuGamma,
}

/// The non-strict model: brackets of the deformed action with
/// `f = 1/(1-ν)` expanded in powers of `ν`.
///
/// * `ℓ₁(μ) = div μ`, `ℓ₁(β) = ∂β`
/// * `ℓ_{n+2}(ν₁…νₙ, μ₁, μ₂) = n! div(ν₁⋯νₙ μ₁∧μ₂)`
/// * `ℓ₂(γ₁, γ₂) = g Ω⁻¹ ∨ (∂γ₁ ∧ ∂γ₂)`
/// * `ℓ_{n+2}(ν₁…νₙ, μ, γ) = n! ν₁⋯νₙ μ ∨ ∂γ`
/// * `ℓ_{n+3}(ν₁…νₙ, μ₁, μ₂, γ) = (n+1)! ν₁⋯νₙ (μ₁∧μ₂) ∨ ∂γ`
#[derive(Clone, Debug)]
pub struct LinfModel {
    pub g: Rational,
    pub signs: LinfSigns,
    pub kmax: usize,
    pub corruption: Option<Corruption>,
}

pub const K_MAX: usize = 6;

impl LinfModel {
    pub fn new(g: Rational) -> Self {
        LinfModel { g, signs: LinfSigns::PINNED, kmax: K_MAX, corruption: None }
    }

    pub fn corrupted(mut self, c: Corruption) -> Self {
        self.corruption = Some(c);
        self
    }

    fn corrupt_sign(&self, p: &Pattern) -> i32 {
        match self.corruption {
            Some(Corruption::FlipNuPower(n)) if p[0] == n => -1,
            _ => 1,
        }
    }
}

impl Default for LinfModel {
    fn default() -> Self {
        LinfModel::new(Rational::one())
    }
}

impl Brackets for LinfModel {
    fn max_arity(&self) -> usize {
        self.kmax
    }

    fn pattern_output(&self, p: &Pattern) -> Option<Slot> {
        let k: usize = p.iter().sum();
        if k > self.kmax {
            return None;
        }
        match *p {
            [0, 1, 0, 0] => Some(Slot::Nu),
            [0, 0, 0, 1] => Some(Slot::Gamma),
            [_, 2, 0, 0] => Some(Slot::Mu),
            [0, 0, 2, 0] => Some(Slot::Mu),
            [_, 1, 1, 0] => Some(Slot::Gamma),
            [_, 2, 1, 0] => Some(Slot::Beta),
            _ => None,
        }
    }

    fn sorted_bracket(&self, p: &Pattern, a: &[&Homog]) -> Option<GeomField> {
        let s = &self.signs;
        let n = p[0];
        let c = self.corrupt_sign(p);
        let out = match *p {
            [0, 1, 0, 0] => signed(div(&a[0].field), s.div),
            [0, 0, 0, 1] => signed(del(&a[0].field), s.del),
            [_, 2, 0, 0] => {
                let f = nu_product(&a[..n]).scale(&factorial(n as u32));
                let w = wedge(&a[n].field, &a[n + 1].field).mul_poly(&f);
                signed(div(&w), s.mumu)
            }
            [0, 0, 2, 0] => {
                let w = wedge(&del(&a[0].field), &del(&a[1].field));
                signed(omega_dual(&w).scale(&self.g), s.gamgam)
            }
            [_, 1, 1, 0] => {
                let f = nu_product(&a[..n]).scale(&factorial(n as u32));
                signed(contract(&a[n].field, &del(&a[n + 1].field)).mul_poly(&f), s.mugam)
            }
            [_, 2, 1, 0] => {
                let f = nu_product(&a[..n]).scale(&factorial(n as u32 + 1));
                let w = wedge(&a[n].field, &a[n + 1].field);
                signed(contract(&w, &del(&a[n + 2].field)).mul_poly(&f), s.mumugam)
            }
            _ => return None,
        };
        Some(signed(out, c))
    }
}

/// Slot signs of the strict model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrictSigns {
    pub div: i32,
    pub del: i32,
    /// `ℓ₂(μ, μ') = [μ, μ']`
    pub mumu: i32,
    /// `ℓ₂(ν, μ) = μ(ν)`
    pub munu: i32,
    /// `ℓ₂(μ, γ) = L_μ γ + (div μ) γ`
    pub mugam: i32,
    /// `ℓ₂(ν, β) = β ∂ν`
    pub nubeta: i32,
    /// `ℓ₂(μ, β) = μ(β) + (div μ) β`
    pub mubeta: i32,
}

impl StrictSigns {
    pub const PINNED: StrictSigns = StrictSigns { div: -1, del: 1, mumu: 1, munu: 1, mugam: 1, nubeta: 1, mubeta: 1 };
}

/// The strict dg Lie model: vector fields acting on functions, and on
/// `γ`, `β` as densities (Lie derivative plus divergence).
#[derive(Clone, Debug)]
pub struct StrictModel {
    pub signs: StrictSigns,
    pub corruption: Option<Corruption>,
}

impl StrictModel {
    pub fn new() -> Self {
        StrictModel { signs: StrictSigns::PINNED, corruption: None }
    }

    pub fn corrupted(mut self, c: Corruption) -> Self {
        self.corruption = Some(c);
        self
    }
}

impl Default for StrictModel {
    fn default() -> Self {
        StrictModel::new()
    }
}

fn as_function_form(x: &GeomField) -> GeomField {
    GeomField::scalar_form(x.as_function(), x.parity())
}

impl Brackets for StrictModel {
    fn max_arity(&self) -> usize {
        2
    }

    fn pattern_output(&self, p: &Pattern) -> Option<Slot> {
        match *p {
            [0, 1, 0, 0] => Some(Slot::Nu),
            [0, 0, 0, 1] => Some(Slot::Gamma),
            [0, 2, 0, 0] => Some(Slot::Mu),
            [1, 1, 0, 0] => Some(Slot::Nu),
            [0, 1, 1, 0] => Some(Slot::Gamma),
            [1, 0, 0, 1] => Some(Slot::Gamma),
            [0, 1, 0, 1] => Some(Slot::Beta),
            _ => None,
        }
    }

    fn sorted_bracket(&self, p: &Pattern, a: &[&Homog]) -> Option<GeomField> {
        let s = &self.signs;
        let out = match *p {
            [0, 1, 0, 0] => signed(div(&a[0].field), s.div),
            [0, 0, 0, 1] => signed(del(&a[0].field), s.del),
            [0, 2, 0, 0] => signed(schouten(&a[0].field, &a[1].field), s.mumu),
            [1, 1, 0, 0] => signed(schouten(&a[1].field, &a[0].field), s.munu),
            [0, 1, 1, 0] => {
                let mu = &a[0].field;
                let dv = div(mu).as_function();
                let t = &lie_derivative(mu, &a[1].field) + &a[1].field.mul_poly(&dv);
                let flip = if self.corruption == Some(Corruption::FlipStrictMuGamma) { -1 } else { 1 };
                signed(t, s.mugam * flip)
            }
            [1, 0, 0, 1] => {
                let dnu = del(&as_function_form(&a[0].field));
                signed(dnu.mul_poly(&a[1].field.as_function()), s.nubeta)
            }
            [0, 1, 0, 1] => {
                let mu = &a[0].field;
                let dv = div(mu).as_function();
                let b = &a[1].field;
                let t = contract(mu, &del(b)).checked_add(&b.mul_poly(&dv));
                signed(t, s.mubeta)
            }
            _ => return None,
        };
        Some(out)
    }
}

/// `Σ_k ℓ_k(φ, …, φ)/k!` on a field with polynomial (commuting) components.
///
/// For concrete fields odd self-pairings vanish, so this is the
/// "bosonic shadow" of `Q`; the full `Q` is only meaningful on polarized
/// inputs, which the Jacobi and morphism checks use.
pub fn q_vector<B: Brackets>(b: &B, phi: &FieldVector) -> FieldVector {
    let mut out = FieldVector::zero();
    for k in 1..=b.max_arity() {
        let args: Vec<&FieldVector> = vec![phi; k];
        let t = b.bracket_fields(&args).expect("arity in range");
        out = out.add(&t.scale(&factorial(k as u32).recip()));
    }
    out
}
