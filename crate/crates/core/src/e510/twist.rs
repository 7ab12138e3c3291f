//! The twist by the Maurer–Cartan element `dz1∧dz2`.
//!
//! Coordinates are relabelled `(z1, z2, w1, w2, w3)` (see
//! [`crate::ratpoly::Aliases::NONMINIMAL`]). The twisted differential is
//! `D = [dz1∧dz2, −]`, of weight `−1`. The twisted 2-bracket picks up the
//! cocycle: `[x, y]_D = [x, y] + φ(dz1∧dz2, x, y) b`.
//!
//! Hamiltonian representatives: `X_f = ∂₂f ∂₁ − ∂₁f ∂₂` for `f ∈ C[z1, z2]`.
//! Since `[X_f, X_g] = −X_{{f,g}}` with `{f,g} = ∂₁f∂₂g − ∂₂f∂₁g`, the map
//! `ψ(f) = −X_f + f(0) b` is the one that turns `[−,−]_D` into the Poisson
//! bracket, and `φ(dz1∧dz2, X_f, X_g) = {f,g}(0)`.

use super::{basis_of_weight, block_rank, e510_bracket, phi, weight_dim, E510Element, E510Key};
use crate::geom::{GeomField, Parity};
use crate::ratpoly::{Polynomial, Rational};

pub fn twist_element() -> E510Element {
    E510Element::odd(GeomField::form(&[0, 1], Polynomial::one(), Parity::Odd)).unwrap()
}

pub fn mc_twist_differential(x: &E510Element) -> E510Element {
    e510_bracket(&twist_element(), x)
}

/// `[x, y] + φ(dz1∧dz2, x, y) b`.
pub fn twisted_bracket(x: &E510Element, y: &E510Element) -> E510Element {
    twisted_bracket_with(x, y, false)
}

/// With `flip_central` the cocycle term enters with the wrong sign
/// (negative control).
pub fn twisted_bracket_with(x: &E510Element, y: &E510Element, flip_central: bool) -> E510Element {
    let c = phi(&twist_element(), x, y);
    let c = if flip_central { -c } else { c };
    &e510_bracket(x, y) + &E510Element::central(c)
}

/// `D²` on every basis element of weight `<= weight_max`; returns
/// (checked, failures).
pub fn twist_square_check(weight_max: i32) -> (u64, Vec<String>) {
    let mut n = 0;
    let mut bad = Vec::new();
    for w in -5..=weight_max {
        for x in basis_of_weight(w) {
            n += 1;
            let dd = mc_twist_differential(&mc_twist_differential(&x));
            if !dd.is_zero() {
                bad.push(format!("D²({}) = {}", x, dd));
            }
        }
    }
    (n, bad)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistDims {
    pub weight: i32,
    pub dim: usize,
    /// `d+2` at weight `2(d−1)`, 1 at the central weight, 0 elsewhere.
    pub expected: usize,
}

fn d_rank(w: i32) -> usize {
    let src = basis_of_weight(w);
    block_rank(
        &src,
        |x| x.multiweight().unwrap_or([0; 5]),
        |x| -> Vec<(E510Key, Rational)> { mc_twist_differential(x).coords() },
    )
}

/// Cohomology of `D` weight by weight for `−5 <= w <= weight_max`.
pub fn mc_twist_cohomology(weight_max: i32) -> Vec<TwistDims> {
    (-5..=weight_max)
        .map(|w| {
            let dim = weight_dim(w) - d_rank(w) - d_rank(w + 1);
            let expected = match w {
                -5 => 1,
                w if w >= -2 && w % 2 == 0 => (w / 2 + 1) as usize + 2,
                _ => 0,
            };
            TwistDims { weight: w, dim, expected }
        })
        .collect()
}

/// `X_f = ∂₂f ∂₁ − ∂₁f ∂₂`.
pub fn hamiltonian_field(f: &Polynomial) -> GeomField {
    let a = GeomField::vector(0, f.partial_derivative(1), Parity::Even);
    let b = GeomField::vector(1, f.partial_derivative(0), Parity::Even);
    &a - &b
}

/// `{f, g} = ∂₁f ∂₂g − ∂₂f ∂₁g`.
pub fn poisson(f: &Polynomial, g: &Polynomial) -> Polynomial {
    &(&f.partial_derivative(0) * &g.partial_derivative(1)) - &(&f.partial_derivative(1) * &g.partial_derivative(0))
}

/// `ψ(f) = −X_f + f(0) b`.
pub fn hamiltonian_class(f: &Polynomial) -> E510Element {
    let x = E510Element::even(-hamiltonian_field(f)).unwrap();
    &x + &E510Element::central(f.eval_at_zero())
}

#[derive(Clone, Debug, Default)]
pub struct InducedBracketReport {
    pub pairs: u64,
    /// Pairs with a nonzero central term.
    pub central_nonzero: u64,
    pub failures: Vec<String>,
}

impl InducedBracketReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `[ψf, ψg]_D = ψ({f,g})` for monomials `f, g` in `z1, z2` of degree
/// `1..=max_degree`, split into the vector-field part `−X_{{f,g}}` and the
/// central part `(f₁g₂ − f₂g₁)(0)`. Also checks `D ψ(f) = 0`.
pub fn induced_bracket_check(max_degree: i32, flip_central: bool) -> InducedBracketReport {
    let mut rep = InducedBracketReport::default();
    let mons: Vec<Polynomial> = (1..=max_degree)
        .flat_map(|d| (0..=d).map(move |a| Polynomial::monomial([a, d - a, 0, 0, 0], Rational::one())))
        .collect();
    for f in &mons {
        let df = mc_twist_differential(&hamiltonian_class(f));
        if !df.is_zero() {
            rep.failures.push(format!("D ψ({}) = {}", f, df));
        }
    }
    for f in &mons {
        for g in &mons {
            rep.pairs += 1;
            let got = twisted_bracket_with(&hamiltonian_class(f), &hamiltonian_class(g), flip_central);
            let pb = poisson(f, g);
            let want = hamiltonian_class(&pb);
            let central = &(&f.partial_derivative(0) * &g.partial_derivative(1)) - &(&f.partial_derivative(1) * &g.partial_derivative(0));
            if !got.c().is_zero() {
                rep.central_nonzero += 1;
            }
            if got != want || *got.c() != central.eval_at_zero() {
                rep.failures.push(format!("[ψ({}), ψ({})]_D = {}, want {}", f, g, got, want));
            }
        }
    }
    rep
}

/// Convention anchors for the twist, `(label, passed)`.
pub fn twist_examples() -> Vec<(String, bool)> {
    let dw1 = E510Element::even(GeomField::vector(2, Polynomial::one(), Parity::Even)).unwrap();
    let dw12 = E510Element::odd(GeomField::form(&[2, 3], Polynomial::one(), Parity::Odd)).unwrap();
    let dw3 = E510Element::even(GeomField::vector(4, Polynomial::one(), Parity::Even)).unwrap();
    let d1 = E510Element::even(GeomField::vector(0, Polynomial::one(), Parity::Even)).unwrap();
    let d2 = E510Element::even(GeomField::vector(1, Polynomial::one(), Parity::Even)).unwrap();
    let z = Polynomial::var;
    vec![
        ("D(∂w1) = 0".to_string(), mc_twist_differential(&dw1).is_zero()),
        ("D(dw1∧dw2) = +∂w3".to_string(), mc_twist_differential(&dw12) == dw3),
        ("[∂z1, ∂z2]_D = 1·b".to_string(), twisted_bracket(&d1, &d2) == E510Element::central(Rational::one())),
        ("ψ(z1) = ∂z2, ψ(z2) = −∂z1".to_string(), hamiltonian_class(&z(0)) == d2 && hamiltonian_class(&z(1)) == -&d1),
        (
            "D ∂w3-class exact: ∂w3 = D(dw1∧dw2)".to_string(),
            mc_twist_differential(&dw12) == dw3 && mc_twist_differential(&dw3).is_zero(),
        ),
    ]
}
