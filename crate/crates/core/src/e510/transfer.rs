//! Euler homotopies, the linear BRST cohomology, and the transferred 3-bracket.
//!
//! The linearized complex is `div: Vect → 𝒪` (μ to ν) and `∂: 𝒪 → Ω¹`
//! (β to γ). Contractions, on homogeneous pieces:
//!
//! * `K(ν) = ν E/(d+5)` for `ν` of degree `d`, so `div K ν = ν`;
//! * `K(γ) = ι_E γ/(e+1)` and `K̃(α) = ι_E α/(e+2)` for coefficient degree
//!   `e`, so `∂Kγ + K̃∂γ = γ` (Cartan: `L_E = ∂ι_E + ι_E∂`).
//!
//! The transferred 3-bracket on `(μ, μ', [γ])` comes from the single tree
//! `p ℓ₂(K ℓ₂(μ, γ), μ')` and its mirror, where `ℓ₂(μ, γ) = L_μγ` lands in
//! one-forms, `K` sends it to a function and `ℓ₂(β, μ') = μ'(β)` is read off
//! at the origin by the projection `p` onto constants.

use super::{closed2_basis, e510_bracket, phi, vect0_basis, vect0_dim, closed2_dim, Multiweight, E510Element};
use crate::geom::{contract, del, div, euler_vector_field, lie_derivative, monomial_basis, GeomField, Kind, Parity};
use crate::linf::{Brackets, Homog, LinfModel, Slot};
use crate::ratpoly::{exp_degree, Polynomial, Rational};

/// `Σ c_e z^e ↦ Σ c_e z^e/(|e| + k)` on every coefficient.
fn divide_by_degree(f: &GeomField, k: i32) -> GeomField {
    f.map_coeffs(|p| {
        Polynomial::from_terms(p.mode(), p.terms().iter().map(|(e, c)| (*e, c * &Rational::new(1, (exp_degree(e) + k) as i64))))
            .unwrap()
    })
}

/// `K` on functions (`ν` slot): `ν E/(d+5)`.
pub fn homotopy_k_nu(nu: &GeomField) -> GeomField {
    euler_vector_field().mul_poly(&divide_by_degree(nu, 5).as_function())
}

/// `K` on one-forms: `ι_E γ/(e+1)`.
pub fn homotopy_k_gamma(gamma: &GeomField) -> GeomField {
    contract(&euler_vector_field(), &divide_by_degree(gamma, 1))
}

/// `K̃` on two-forms: `ι_E α/(e+2)`.
pub fn homotopy_k_tilde(alpha: &GeomField) -> GeomField {
    contract(&euler_vector_field(), &divide_by_degree(alpha, 2))
}

#[derive(Clone, Debug, Default)]
pub struct HomotopyReport {
    pub max_degree: i32,
    pub nu_checked: u64,
    pub gamma_checked: u64,
    pub failures: Vec<String>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `div Kν = ν` on monomial functions and `∂Kγ + K̃∂γ = γ` on monomial
/// one-forms, all coefficient degrees `<= max_degree`.
pub fn homotopy_identities_check(max_degree: i32) -> HomotopyReport {
    let mut rep = HomotopyReport { max_degree, ..Default::default() };
    for d in 0..=max_degree {
        for nu in monomial_basis(Kind::PolyVector, 0, d, Parity::Even) {
            rep.nu_checked += 1;
            let back = div(&homotopy_k_nu(&nu));
            if !(&back - &nu).is_zero() {
                rep.failures.push(format!("div K({}) = {}", nu, back));
            }
        }
        for g in monomial_basis(Kind::Form, 1, d, Parity::Even) {
            rep.gamma_checked += 1;
            let back = &del(&homotopy_k_gamma(&g)) + &homotopy_k_tilde(&del(&g));
            if !(&back - &g).is_zero() {
                rep.failures.push(format!("(∂K + K̃∂)({}) = {}", g, back));
            }
        }
    }
    rep
}

/// Cohomology dimensions of the linearized complex at one weight, each
/// computed twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrstDims {
    pub weight: i32,
    /// `ker div`, `Ω¹/∂𝒪` or `ker ∂` on constants, by rank computation.
    pub complex_dim: usize,
    /// Independent count: `ker div` on `Vect` by blocks resp. `ker ∂` on `Ω²`.
    pub model_dim: usize,
    /// Closed formula for `Vect₀` resp. `Ω²_cl` (1 for the central weight).
    pub formula_dim: usize,
    /// `coker div` at this weight (even weights only, else 0).
    pub coker_div: usize,
}

fn mw(f: &GeomField) -> Multiweight {
    f.multiweight().expect("monomial source")
}

fn rank_of(src: &[GeomField], op: impl Fn(&GeomField) -> GeomField) -> usize {
    super::block_rank(src, mw, |f| op(f).coords())
}

/// Even weight `2(d−1)`: `Vect(d) → 𝒪(d−1)`. Odd weight `2e−1`:
/// `𝒪(e+2) → Ω¹(e+1)`, compared with closed two-forms of degree `e`.
/// Weight `−5`: constants in the `β` slot.
pub fn brst_cohomology_dims(weight: i32) -> BrstDims {
    if weight == -5 {
        let src = monomial_basis(Kind::Form, 0, 0, Parity::Odd);
        let k = src.len() - rank_of(&src, del);
        return BrstDims { weight, complex_dim: k, model_dim: k, formula_dim: 1, coker_div: 0 };
    }
    if weight < -2 {
        return BrstDims { weight, complex_dim: 0, model_dim: 0, formula_dim: 0, coker_div: 0 };
    }
    if weight % 2 == 0 {
        let d = weight / 2 + 1;
        let src = monomial_basis(Kind::PolyVector, 1, d, Parity::Even);
        let r = rank_of(&src, div);
        let target = monomial_basis(Kind::PolyVector, 0, d - 1, Parity::Even).len();
        BrstDims {
            weight,
            complex_dim: src.len() - r,
            model_dim: vect0_basis(d).len(),
            formula_dim: vect0_dim(d),
            coker_div: target - r,
        }
    } else {
        let e = (weight + 1) / 2;
        let funcs = monomial_basis(Kind::Form, 0, e + 2, Parity::Odd);
        let ones = monomial_basis(Kind::Form, 1, e + 1, Parity::Odd).len();
        BrstDims {
            weight,
            complex_dim: ones - rank_of(&funcs, del),
            model_dim: closed2_basis(e).len(),
            formula_dim: closed2_dim(e),
            coker_div: 0,
        }
    }
}

/// Transferred 3-bracket `[μ, μ', [γ]]₃`, central component:
/// `μ'(K L_μ γ)(0) − μ(K L_{μ'} γ)(0)`. The orientation of the tree is
/// pinned by `[∂1, ∂2, [z1 dz2]]₃ = 1`.
pub fn homotopy_transfer_3bracket(mu: &GeomField, mu2: &GeomField, gamma: &GeomField) -> Rational {
    homotopy_transfer_3bracket_with(mu, mu2, gamma, false)
}

/// With `flip_mirror` the mirror tree enters with the wrong sign
/// (negative control).
pub fn homotopy_transfer_3bracket_with(mu: &GeomField, mu2: &GeomField, gamma: &GeomField, flip_mirror: bool) -> Rational {
    let leg = |a: &GeomField, b: &GeomField| -> Rational {
        if a.is_zero() || b.is_zero() || gamma.is_zero() {
            return Rational::zero();
        }
        let beta = homotopy_k_gamma(&lie_derivative(a, gamma));
        // ℓ₂(β, μ) = μ∨∂β + div μ · β
        let t = &contract(b, &del(&beta)) + &beta.mul_poly(&div(b).as_function());
        t.coeff(0).eval_at_zero()
    };
    if flip_mirror {
        &leg(mu, mu2) + &leg(mu2, mu)
    } else {
        &leg(mu, mu2) - &leg(mu2, mu)
    }
}

#[derive(Clone, Debug, Default)]
pub struct TransferReport {
    pub max_degree: i32,
    pub triples: u64,
    pub nonzero: u64,
    pub failures: Vec<String>,
}

impl TransferReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Transferred bracket against `φ(μ, μ', ∂γ)` on basis triples: `μ, μ'`
/// from `Vect₀` and `[γ] = [K̃α]` for `α` a basis closed two-form, all
/// coefficient degrees `<= max_degree`.
pub fn transfer_check(max_degree: i32, flip_mirror: bool) -> TransferReport {
    let mut rep = TransferReport { max_degree, ..Default::default() };
    let vs: Vec<GeomField> = (0..=max_degree).flat_map(vect0_basis).collect();
    let alphas: Vec<GeomField> = (0..=max_degree).flat_map(closed2_basis).collect();
    let gammas: Vec<GeomField> = alphas.iter().map(homotopy_k_tilde).collect();
    for i in 0..vs.len() {
        for j in i..vs.len() {
            for (a, g) in alphas.iter().zip(&gammas) {
                rep.triples += 1;
                let t = homotopy_transfer_3bracket_with(&vs[i], &vs[j], g, flip_mirror);
                let f = super::cocycle_phi(&vs[i], &vs[j], &del(g));
                debug_assert!((&del(g) - a).is_zero());
                if !t.is_zero() {
                    rep.nonzero += 1;
                }
                if t != f {
                    rep.failures.push(format!("({}, {}, {}): transfer {} vs φ {}", vs[i], vs[j], g, t, f));
                }
            }
        }
    }
    rep
}

/// `½(z_i dz_j − z_j dz_i)`, a potential for `dz_i∧dz_j`.
pub fn gamma_pair(i: usize, j: usize) -> GeomField {
    let h = Rational::new(1, 2);
    let a = GeomField::form(&[j], Polynomial::var(i).scale(&h), Parity::Even);
    let b = GeomField::form(&[i], Polynomial::var(j).scale(&h), Parity::Even);
    &a - &b
}

fn epsilon(idx: [usize; 5]) -> i32 {
    let mut s = 1;
    for a in 0..5 {
        for b in a + 1..5 {
            if idx[a] == idx[b] {
                return 0;
            }
            if idx[a] > idx[b] {
                s = -s;
            }
        }
    }
    s
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

#[derive(Clone, Debug)]
pub struct SusyReport {
    /// `[dz_ij, dz_kl] = ε_{ijklm} ∂_m` for all index pairs.
    pub epsilon_checked: u64,
    pub epsilon_failures: Vec<String>,
    /// Measured `λ` in `[∂i, ∂j, γ_kl]₃ = 4λ(δ_ik δ_jl − δ_il δ_jk)`.
    pub lambda: Option<Rational>,
    /// Quadruples where the pattern fails for the measured `λ`.
    pub delta_failures: Vec<String>,
    pub delta_checked: u64,
    /// `c` in `L_{∂i} γ_jk = ∂(c(δ_ij z_k − δ_ik z_j))` (strict model bracket).
    pub phi2_factor_strict: Option<Rational>,
    /// Same with the non-strict `ℓ₂(μ, γ) = μ∨∂γ`.
    pub phi2_factor_linf: Option<Rational>,
    pub phi2_failures: Vec<String>,
}

impl SusyReport {
    pub fn passed(&self) -> bool {
        self.epsilon_failures.is_empty()
            && self.delta_failures.is_empty()
            && self.lambda.is_some()
            && self.phi2_failures.is_empty()
    }
}

/// Structure constants of the twisted supersymmetry algebra inside the
/// extended algebra: wedge pairs `z_i∧z_j` go to `[γ_ij]` with
/// `∂γ_ij = dz_i∧dz_j`, translations to `∂_i`.
pub fn susy_bracket_table_check(flip_mirror: bool) -> SusyReport {
    let mut rep = SusyReport {
        epsilon_checked: 0,
        epsilon_failures: Vec::new(),
        lambda: None,
        delta_failures: Vec::new(),
        delta_checked: 0,
        phi2_factor_strict: None,
        phi2_factor_linf: None,
        phi2_failures: Vec::new(),
    };
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let odd = |i: usize, j: usize| E510Element::odd(del(&gamma_pair(i, j))).unwrap();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            rep.epsilon_checked += 1;
            let got = e510_bracket(&odd(i, j), &odd(k, l));
            let mut want = GeomField::zero(Kind::PolyVector, 1, Parity::Even);
            for m in 0..5 {
                let s = epsilon([i, j, k, l, m]);
                if s != 0 {
                    want = &want + &GeomField::vector(m, Polynomial::constant(Rational::from_int(s as i64)), Parity::Even);
                }
            }
            if !(&got.mu().clone() - &want).is_zero() || !got.alpha().is_zero() {
                rep.epsilon_failures.push(format!("[dz{}{}, dz{}{}] = {}", i + 1, j + 1, k + 1, l + 1, got));
            }
        }
    }
    let d = |i: usize| GeomField::vector(i, Polynomial::one(), Parity::Even);
    // λ from the anchor quadruple, then the full δ-pattern
    let tb = |a: &GeomField, b: &GeomField, g: &GeomField| homotopy_transfer_3bracket_with(a, b, g, flip_mirror);
    let anchor = tb(&d(0), &d(1), &gamma_pair(0, 1));
    let lambda = &anchor / &Rational::from_int(4);
    rep.lambda = (!lambda.is_zero()).then_some(lambda.clone());
    for i in 0..5 {
        for j in 0..5 {
            for &(k, l) in &pairs {
                rep.delta_checked += 1;
                let t = tb(&d(i), &d(j), &gamma_pair(k, l));
                let pattern = delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k);
                let want = &(&lambda * &Rational::from_int(4)) * &Rational::from_int(pattern);
                let via_phi = phi(&E510Element::even(d(i)).unwrap(), &E510Element::even(d(j)).unwrap(), &odd(k, l));
                if t != want || via_phi != t {
                    rep.delta_failures.push(format!("(∂{}, ∂{}, γ{}{}): {} (φ {}), want {}", i + 1, j + 1, k + 1, l + 1, t, via_phi, want));
                }
            }
        }
    }
    // Φ^(2): the failure of the linear map to preserve [∂_i, γ_jk] is ∂ of a function
    let model = LinfModel::default();
    let mut strict_c: Option<Rational> = None;
    let mut linf_c: Option<Rational> = None;
    for i in 0..5 {
        for &(j, k) in &pairs {
            let g = gamma_pair(j, k);
            let shape = |c: &Rational| {
                let f = &Polynomial::var(k).scale(&Rational::from_int(delta(i, j))) - &Polynomial::var(j).scale(&Rational::from_int(delta(i, k)));
                del(&GeomField::scalar_form(f.scale(c), Parity::Even))
            };
            let strict = lie_derivative(&d(i), &g);
            let mu = Homog::new(Slot::Mu, d(i));
            let gm = Homog::new(Slot::Gamma, g.clone());
            let linf = model.bracket(&[&mu, &gm]).map(|h| h.field.with_parity(Parity::Even)).unwrap_or_else(|| Slot::Gamma.zero());
            for (got, slot, label) in [(strict, &mut strict_c, "strict"), (linf, &mut linf_c, "linf")] {
                if delta(i, j) + delta(i, k) == 0 {
                    if !got.is_zero() {
                        rep.phi2_failures.push(format!("{} [∂{}, γ{}{}] = {}", label, i + 1, j + 1, k + 1, got));
                    }
                    continue;
                }
                let unit = shape(&Rational::one());
                // read c off one nonzero coefficient, then demand proportionality
                let ((m, e), u) = unit.coords()[0].clone();
                let c = &got.coeff(m).coeff(&e) / &u;
                if !(&got.clone().with_parity(Parity::Even) - &shape(&c)).is_zero() || slot.as_ref().is_some_and(|s| *s != c) {
                    rep.phi2_failures.push(format!("{} [∂{}, γ{}{}] = {}", label, i + 1, j + 1, k + 1, got));
                }
                slot.get_or_insert(c);
            }
        }
    }
    rep.phi2_factor_strict = strict_c;
    rep.phi2_factor_linf = linf_c;
    rep
}
