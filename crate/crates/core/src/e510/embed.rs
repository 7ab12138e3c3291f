//! `osp(6|1)` inside the algebra for the M2 and M5 backgrounds, and the
//! flux classes in a local-cohomology model.
//!
//! M2 chart `(z, w1..w4)`, flux `F = (w1⋯w4)⁻¹ ∂_z` (even).
//! M5 chart `(z1, z2, z3, w1, w2)`, flux `F = (w1w2)⁻¹ dw1∧dw2` (odd).
//! Odd generators are entered as closed two-forms, the `∂`-images of their
//! one-form potentials.

use super::{e510_bracket, super_jacobiator, BracketCorruption, E510Element, E510Key};
use crate::geom::{div, wedge, GeomField, Kind, Parity};
use crate::linalg::Matrix;
use crate::ratpoly::{Mode, Polynomial, Rational};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Brane {
    M2,
    M5,
}

impl Brane {
    pub fn name(self) -> &'static str {
        match self {
            Brane::M2 => "m2",
            Brane::M5 => "m5",
        }
    }

    pub fn aliases(self) -> crate::ratpoly::Aliases {
        match self {
            Brane::M2 => crate::ratpoly::Aliases::M2,
            Brane::M5 => crate::ratpoly::Aliases::M5,
        }
    }
}

impl std::str::FromStr for Brane {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "m2" => Ok(Brane::M2),
            "m5" => Ok(Brane::M5),
            _ => Err(format!("unknown brane {:?} (expected m2 or m5)", s)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub element: E510Element,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn var(i: usize) -> Polynomial {
    Polynomial::var(i)
}

fn vf(terms: &[(usize, Polynomial)]) -> GeomField {
    GeomField::from_terms(Kind::PolyVector, 1, Parity::Even, terms.iter().map(|(i, p)| (1u8 << i, p.clone())).collect::<Vec<_>>())
}

fn two_form(terms: &[(usize, usize, Polynomial)]) -> GeomField {
    let mut acc = GeomField::zero(Kind::Form, 2, Parity::Odd);
    for (i, j, p) in terms {
        acc = &acc + &GeomField::form(&[*i, *j], p.clone(), Parity::Odd);
    }
    acc
}

fn gen_even(label: String, f: GeomField) -> Generator {
    Generator { element: E510Element::even(f).unwrap_or_else(|e| panic!("{}: {}", label, e)), label }
}

fn gen_odd(label: String, f: GeomField) -> Generator {
    Generator { element: E510Element::odd(f).unwrap_or_else(|e| panic!("{}: {}", label, e)), label }
}

/// `Σ_a w_a ∂_{w_a}` for the given transverse variables.
fn euler_on(vars: &[usize], coeff: &Polynomial) -> Vec<(usize, Polynomial)> {
    vars.iter().map(|&a| (a, &var(a) * coeff)).collect()
}

fn add_terms(a: Vec<(usize, Polynomial)>, b: Vec<(usize, Polynomial)>) -> GeomField {
    &vf(&a) + &vf(&b)
}

/// The 18 even and 12 odd generators, even ones first.
pub fn osp61_generators(brane: Brane) -> Vec<Generator> {
    let one = Polynomial::one();
    let mut out = Vec::new();
    match brane {
        Brane::M2 => {
            let ws = [1, 2, 3, 4];
            // sl(2) along the brane
            out.push(gen_even("∂z".into(), vf(&[(0, one.clone())])));
            out.push(gen_even(
                "z∂z − ¼Σw∂w".into(),
                add_terms(vec![(0, var(0))], euler_on(&ws, &Polynomial::constant(q(-1, 4)))),
            ));
            out.push(gen_even(
                "z(z∂z − ½Σw∂w)".into(),
                add_terms(vec![(0, &var(0) * &var(0))], euler_on(&ws, &var(0).scale(&q(-1, 2)))),
            ));
            // sl(4) on the transverse w's
            for &a in &ws {
                for &b in &ws {
                    if a != b {
                        out.push(gen_even(format!("w{}∂w{}", a, b), vf(&[(b, var(a))])));
                    }
                }
            }
            for a in 1..4 {
                out.push(gen_even(
                    format!("w{}∂w{} − w{}∂w{}", a, a, a + 1, a + 1),
                    vf(&[(a, var(a)), (a + 1, var(a + 1).scale(&q(-1, 1)))]),
                ));
            }
            for a in 1..5 {
                for b in a + 1..5 {
                    out.push(gen_odd(format!("dw{}∧dw{}", a, b), two_form(&[(a, b, one.clone())])));
                }
            }
            // ∂ of z(w_a dw_b − ... ) potentials: z dw_a∧dw_b + ½ dz∧(w_a dw_b − w_b dw_a)
            for a in 1..5 {
                for b in a + 1..5 {
                    out.push(gen_odd(
                        format!("z dw{}∧dw{} + ½dz∧(w{}dw{} − w{}dw{})", a, b, a, b, b, a),
                        two_form(&[(a, b, var(0)), (0, b, var(a).scale(&q(1, 2))), (0, a, var(b).scale(&q(-1, 2)))]),
                    ));
                }
            }
        }
        Brane::M5 => {
            let zs = [0, 1, 2];
            let ws = [3, 4];
            for &i in &zs {
                out.push(gen_even(format!("∂z{}", i + 1), vf(&[(i, one.clone())])));
            }
            for &i in &zs {
                for &j in &zs {
                    if i != j {
                        out.push(gen_even(format!("z{}∂z{}", i + 1, j + 1), vf(&[(j, var(i))])));
                    }
                }
            }
            for i in 0..2 {
                out.push(gen_even(
                    format!("z{}∂z{} − z{}∂z{}", i + 1, i + 1, i + 2, i + 2),
                    vf(&[(i, var(i)), (i + 1, var(i + 1).scale(&q(-1, 1)))]),
                ));
            }
            out.push(gen_even(
                "Σz∂z − (3/2)Σw∂w".into(),
                add_terms(euler_on(&zs, &one), euler_on(&ws, &Polynomial::constant(q(-3, 2)))),
            ));
            for &j in &zs {
                out.push(gen_even(
                    format!("z{}(Σz∂z − 2Σw∂w)", j + 1),
                    add_terms(euler_on(&zs, &var(j)), euler_on(&ws, &var(j).scale(&q(-2, 1)))),
                ));
            }
            out.push(gen_even("w1∂w2".into(), vf(&[(4, var(3))])));
            out.push(gen_even("w2∂w1".into(), vf(&[(3, var(4))])));
            out.push(gen_even("½(w1∂w1 − w2∂w2)".into(), vf(&[(3, var(3).scale(&q(1, 2))), (4, var(4).scale(&q(-1, 2)))])));
            for &i in &zs {
                for &a in &ws {
                    out.push(gen_odd(format!("dz{}∧dw{}", i + 1, a - 2), two_form(&[(i, a, one.clone())])));
                }
            }
            // ∂ of ½ w_a (z_i dz_j − z_j dz_i): w_a dz_i∧dz_j + ½ dw_a∧(z_i dz_j − z_j dz_i)
            for &a in &ws {
                for i in 0..3 {
                    for j in i + 1..3 {
                        // dw_a∧dz_j = −dz_j∧dw_a (indices i, j < a)
                        out.push(gen_odd(
                            format!("w{} dz{}∧dz{} + ½dw{}∧(z{}dz{} − z{}dz{})", a - 2, i + 1, j + 1, a - 2, i + 1, j + 1, j + 1, i + 1),
                            two_form(&[
                                (i, j, var(a)),
                                (j, a, var(i).scale(&q(-1, 2))),
                                (i, a, var(j).scale(&q(1, 2))),
                            ]),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Dense coordinates of elements over a shared key set.
struct Span {
    keys: BTreeMap<E510Key, usize>,
    matrix: Matrix,
}

impl Span {
    fn new(gens: &[E510Element]) -> Self {
        let mut keys = BTreeMap::new();
        for g in gens {
            for (k, _) in g.coords() {
                let n = keys.len();
                keys.entry(k).or_insert(n);
            }
        }
        let cols: Vec<Vec<Rational>> = gens
            .iter()
            .map(|g| {
                let mut v = vec![Rational::zero(); keys.len()];
                for (k, c) in g.coords() {
                    v[keys[&k]] = c;
                }
                v
            })
            .collect();
        Span { matrix: Matrix::from_columns(keys.len(), &cols), keys }
    }

    fn solve(&self, x: &E510Element) -> Option<Vec<Rational>> {
        let mut b = vec![Rational::zero(); self.keys.len()];
        for (k, c) in x.coords() {
            b[*self.keys.get(&k)?] = c;
        }
        self.matrix.solve(&b)
    }
}

#[derive(Clone, Debug, Default)]
pub struct EmbedReport {
    pub brane: Option<Brane>,
    pub even: usize,
    pub odd: usize,
    /// Rank of the generator list (linear independence).
    pub rank: usize,
    pub pairs: u64,
    pub closure_failures: Vec<String>,
    pub jacobi_triples: u64,
    pub jacobi_failures: Vec<String>,
}

impl EmbedReport {
    pub fn passed(&self) -> bool {
        self.even == 18 && self.odd == 12 && self.rank == 30 && self.closure_failures.is_empty() && self.jacobi_failures.is_empty()
    }
}

/// Invariants (by construction), counts 18|12, linear independence,
/// closure of the span under the bracket, and super Jacobi on all
/// generator triples.
pub fn osp61_embedding_check(brane: Brane, corruption: BracketCorruption) -> EmbedReport {
    let gens = osp61_generators(brane);
    let els: Vec<E510Element> = gens.iter().map(|g| g.element.clone()).collect();
    let mut rep = EmbedReport {
        brane: Some(brane),
        even: els.iter().filter(|e| e.parity() == Some(Parity::Even)).count(),
        odd: els.iter().filter(|e| e.parity() == Some(Parity::Odd)).count(),
        ..Default::default()
    };
    let span = Span::new(&els);
    rep.rank = span.matrix.rank();
    for i in 0..els.len() {
        for j in i..els.len() {
            rep.pairs += 1;
            let b = super::e510_bracket_with(&els[i], &els[j], corruption);
            if span.solve(&b).is_none() {
                rep.closure_failures.push(format!("[{}, {}] = {}", gens[i].label, gens[j].label, b));
            }
        }
    }
    for i in 0..els.len() {
        for j in i..els.len() {
            for k in j..els.len() {
                rep.jacobi_triples += 1;
                let r = super_jacobiator(&els[i], &els[j], &els[k], corruption);
                if !r.is_zero() {
                    rep.jacobi_failures.push(format!("({}, {}, {}) -> {}", gens[i].label, gens[j].label, gens[k].label, r));
                }
            }
        }
    }
    rep
}

/// An element whose coefficients live in the local-cohomology module
/// `w^{-1} C[w^{-1}] ⊗ C[z]` for the transverse variables in `mask`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCohomologyClass {
    pub element: E510Element,
    pub transverse: u8,
}

impl LocalCohomologyClass {
    /// Brackets with polynomial elements use the ordinary formulas; products
    /// follow the annihilation rule of [`Mode::Laurent`].
    pub fn bracket(&self, x: &E510Element) -> E510Element {
        e510_bracket(&self.element, x)
    }

    pub fn bracket_with(&self, x: &E510Element, corruption: BracketCorruption) -> E510Element {
        super::e510_bracket_with(&self.element, x, corruption)
    }
}

/// `(w1⋯w4)⁻¹ ∂_z` resp. `(w1w2)⁻¹ dw1∧dw2`.
pub fn flux_class(brane: Brane) -> LocalCohomologyClass {
    match brane {
        Brane::M2 => {
            let mask = 0b11110;
            let c = Polynomial::try_monomial(Mode::Laurent { mask }, [0, -1, -1, -1, -1], Rational::one()).unwrap();
            let f = GeomField::vector(0, c, Parity::Even);
            LocalCohomologyClass { element: E510Element::even(f).unwrap(), transverse: mask }
        }
        Brane::M5 => {
            let mask = 0b11000;
            let c = Polynomial::try_monomial(Mode::Laurent { mask }, [0, 0, 0, -1, -1], Rational::one()).unwrap();
            let f = GeomField::form(&[3, 4], c, Parity::Odd);
            LocalCohomologyClass { element: E510Element::odd(f).unwrap(), transverse: mask }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FluxReport {
    pub brane: Option<Brane>,
    pub generators: usize,
    pub annihilated: usize,
    pub failures: Vec<String>,
    /// M2: `div F = 0`; M5: `∂F = 0` (both by construction).
    pub f_closed: bool,
    /// M2: `[F, F] = 0`; M5: `F ∧ F = 0`.
    pub f_self: bool,
    /// The displayed example computations, `(label, passed)`.
    pub examples: Vec<(String, bool)>,
}

impl FluxReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.f_closed && self.f_self && self.examples.iter().all(|(_, ok)| *ok)
    }
}

/// `[F, g] = 0` for every generator `g`, with `F` the flux class.
/// `corruption` only affects these generator brackets.
pub fn flux_annihilation_check(brane: Brane, corruption: BracketCorruption) -> FluxReport {
    let f = flux_class(brane);
    let gens = osp61_generators(brane);
    let mut rep = FluxReport { brane: Some(brane), generators: gens.len(), ..Default::default() };
    for g in &gens {
        let b = f.bracket_with(&g.element, corruption);
        if b.is_zero() {
            rep.annihilated += 1;
        } else {
            rep.failures.push(format!("[F, {}] = {}", g.label, b));
        }
    }
    let fe = &f.element;
    match brane {
        Brane::M2 => {
            rep.f_closed = div(fe.mu()).is_zero();
            rep.f_self = e510_bracket(fe, fe).is_zero();
            // L_F on the potential z(w_a dw_b − w_b dw_a): (w1⋯w4)⁻¹(w_a dw_b − w_b dw_a)
            let pot = GeomField::form(&[2], &var(0) * &var(1), Parity::Even) - GeomField::form(&[1], &var(0) * &var(2), Parity::Even);
            let l = crate::geom::lie_derivative(fe.mu(), &pot);
            rep.examples.push(("L_F(z(w1dw2 − w2dw1)) = 0 by truncation".into(), l.is_zero()));
            let dz = E510Element::even(vf(&[(0, Polynomial::one())])).unwrap();
            rep.examples.push(("[F, ∂z] = 0".into(), f.bracket(&dz).is_zero()));
        }
        Brane::M5 => {
            rep.f_closed = crate::geom::del(fe.alpha()).is_zero();
            rep.f_self = wedge(fe.alpha(), fe.alpha()).is_zero();
            // [F, ∂(w_a(z_1 dz_2 − z_2 dz_1))] = 2 ε w⁻¹ w_a ∂_{z3} = 0
            let a = 3;
            let x = E510Element::odd(two_form(&[(0, 1, var(a).scale(&q(2, 1))), (1, a, var(0).scale(&q(-1, 1))), (0, a, var(1))]))
                .unwrap();
            rep.examples.push(("[F, ∂(w1(z1dz2 − z2dz1))] = 0 by truncation".into(), f.bracket(&x).is_zero()));
            // control: a w-free two-form is not annihilated
            let y = E510Element::odd(two_form(&[(0, 1, Polynomial::one())])).unwrap();
            let b = f.bracket(&y);
            rep.examples.push(("[F, dz1∧dz2] = (w1w2)⁻¹∂z3 ≠ 0 (control)".into(), !b.is_zero()));
        }
    }
    rep
}
