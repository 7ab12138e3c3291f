//! Component equations of motion of the non-strict model plus `g J`.
//!
//! With `f = 1/(1-ν)` and the slot signs of [`LinfSigns::PINNED`], the
//! residual in each output slot is
//!
//! * `ν`: `s_div · div μ`
//! * `μ`: `½ s_mumu · div(f μ∧μ) + (g/2) s_gamgam · Ω⁻¹∨(∂γ∧∂γ)`
//! * `γ`: `s_del · ∂β + s_mugam · f μ∨∂γ`
//! * `β`: `½ s_mumugam · f² (μ∧μ)∨∂γ`
//!
//! which is `Σ_k ℓ_k(φ, …, φ)/k!` summed in closed form. `f` sits inside
//! the divergence because the μ-equation is the variation of
//! `½ f μ²∨∂γ` with respect to `γ`.
//!
//! Holomorphic polynomial fields have commuting coefficients, so `μ∧μ`
//! vanishes for a single concrete `μ`. The quadratic terms are exposed in
//! polarized form by [`eom_mu_bilinear`].

use super::automorphism::{geometric_series, truncation};
use super::{FieldVector, LinfError, LinfSigns, Slot};
use crate::geom::{contract, del, div, omega_dual, parse_field, wedge, GeomField, ParseFieldError, Parity};
use crate::ratpoly::{Polynomial, Rational};

fn cut_mul(a: &Polynomial, b: &Polynomial, cut: Option<i32>) -> Polynomial {
    match cut {
        Some(d) => a.mul_truncated(b, d),
        None => a * b,
    }
}

fn cut_field(x: GeomField, cut: Option<i32>) -> GeomField {
    match cut {
        Some(d) => x.map_coeffs(|c| c.truncate_degree(d)),
        None => x,
    }
}

fn sgn(s: i32) -> Rational {
    Rational::from_int(s as i64)
}

/// Left-hand sides of the four component equations. `order` is the
/// truncation order of `f`; see [`truncation`].
pub fn eom_residual(phi: &FieldVector, g: &Rational, order: Option<u32>) -> Result<FieldVector, LinfError> {
    let s = LinfSigns::PINNED;
    let (n, cut) = truncation(phi, order)?;
    let nu = phi.nu.as_function();
    let f = geometric_series(&nu, n, cut);
    let f2 = cut_mul(&f, &f, cut);
    // one more degree under the divergence, which lowers degree by one
    let up = cut.map(|d| d + 1);
    let f_up = geometric_series(&nu, n + 1, up);
    let half = Rational::new(1, 2);
    let mu = &phi.mu;
    let dgam = del(&phi.gamma);
    let mumu = wedge(mu, mu);

    let nu_eq = div(mu).scale(&sgn(s.div));
    let mu_eq = &div(&cut_field(mumu.mul_poly(&f_up), up)).scale(&(&half * &sgn(s.mumu)))
        + &omega_dual(&wedge(&dgam, &dgam)).scale(&(&(&half * g) * &sgn(s.gamgam)));
    let gamma_eq = &del(&phi.beta).scale(&sgn(s.del)) + &contract(mu, &dgam).mul_poly(&f).scale(&sgn(s.mugam));
    let beta_eq = contract(&mumu, &dgam).mul_poly(&f2).scale(&(&half * &sgn(s.mumugam)));

    let out = FieldVector::zero().map(|slot, _| {
        let x = match slot {
            Slot::Nu => nu_eq.clone(),
            Slot::Mu => mu_eq.clone(),
            Slot::Gamma => gamma_eq.clone(),
            Slot::Beta => beta_eq.clone(),
        };
        cut_field(x, cut)
    });
    Ok(out)
}

/// Polarized quadratic-in-μ terms: the `μ` and `β` slots of
/// `div(f μ₁∧μ₂)` and `f² (μ₁∧μ₂)∨∂γ` with the pinned signs.
pub fn eom_mu_bilinear(
    mu1: &GeomField,
    mu2: &GeomField,
    nu: &GeomField,
    gamma: &GeomField,
    order: u32,
) -> FieldVector {
    let s = LinfSigns::PINNED;
    let cut = Some(order as i32 - 1);
    let up = Some(order as i32);
    let f = geometric_series(&nu.as_function(), order, cut);
    let f_up = geometric_series(&nu.as_function(), order + 1, up);
    let f2 = cut_mul(&f, &f, cut);
    let w = wedge(mu1, mu2);
    let mu_eq = div(&cut_field(w.mul_poly(&f_up), up)).scale(&sgn(s.mumu));
    let beta_eq = contract(&w, &del(gamma)).mul_poly(&f2).scale(&sgn(s.mumugam));
    FieldVector::zero().map(|slot, z| match slot {
        Slot::Mu => cut_field(mu_eq.clone(), cut),
        Slot::Beta => cut_field(beta_eq.clone(), cut),
        _ => z.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EomPreset {
    Flat,
    GammaNm,
}

impl EomPreset {
    /// Background fields and coupling.
    pub fn fields(self) -> (FieldVector, Rational) {
        match self {
            EomPreset::Flat => (FieldVector::zero(), Rational::one()),
            EomPreset::GammaNm => (FieldVector { gamma: gamma_nm(), ..FieldVector::zero() }, Rational::one()),
        }
    }
}

/// `½(z₁dz₂ − z₂dz₁)`.
pub fn gamma_nm() -> GeomField {
    let h = Rational::new(1, 2);
    let a = GeomField::form(&[1], Polynomial::var(0).scale(&h), Parity::Even);
    let b = GeomField::form(&[0], Polynomial::var(1).scale(&h), Parity::Even);
    &a - &b
}

/// Parse a field file: sections `[mu]`, `[nu]`, `[gamma]`, `[beta]`, each
/// holding one field in the text format of [`crate::geom::parse_field`].
/// Missing sections are zero.
pub fn parse_field_vector(src: &str) -> Result<FieldVector, ParseFieldError> {
    let mut out = FieldVector::zero();
    let mut current: Option<(Slot, usize, String)> = None;
    let finish = |cur: Option<(Slot, usize, String)>, out: &mut FieldVector| -> Result<(), ParseFieldError> {
        if let Some((slot, start, body)) = cur {
            let f = parse_field(&body).map_err(|e| ParseFieldError { line: e.line + start, msg: e.msg })?;
            if f.kind() != slot.kind() || f.degree() != slot.degree() {
                return Err(ParseFieldError { line: start, msg: format!("section [{}] has the wrong field type", slot.name()) });
            }
            out.add_homog(&super::Homog::new(slot, f));
        }
        Ok(())
    };
    for (ln, line) in src.lines().enumerate() {
        let t = line.trim();
        if let Some(name) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            finish(current.take(), &mut out)?;
            let slot = match name {
                "mu" => Slot::Mu,
                "nu" => Slot::Nu,
                "gamma" => Slot::Gamma,
                "beta" => Slot::Beta,
                _ => return Err(ParseFieldError { line: ln + 1, msg: format!("unknown section [{}]", name) }),
            };
            current = Some((slot, ln + 1, String::new()));
        } else if let Some((_, _, body)) = current.as_mut() {
            body.push_str(line);
            body.push('\n');
        } else if !t.is_empty() && !t.starts_with('#') {
            return Err(ParseFieldError { line: ln + 1, msg: "content before the first section".into() });
        }
    }
    finish(current, &mut out)?;
    Ok(out)
}
