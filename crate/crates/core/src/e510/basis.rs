//! Bases of the graded pieces, computed one torus multiweight at a time.
//!
//! `div`, `∂` and every bracket are homogeneous for the torus multiweight
//! (see [`crate::geom::multiweight`]), so kernels and ranks split into
//! blocks of at most ten columns even where the full space has thousands.

use super::{e510_bracket_with, jacobi_terms, BracketCorruption, E510Element};
use crate::geom::{del, div, monomial_basis, omega_dual, GeomField, Kind, Parity};
use crate::linalg::Matrix;
use crate::ratpoly::{count_monomials, Rational};
use crate::sample::{self, SweepRng};
use rand::Rng;
use std::collections::BTreeMap;

pub type Multiweight = [i32; 5];

fn block_matrices<T, K: Ord + Clone>(
    sources: &[T],
    weight: impl Fn(&T) -> Multiweight,
    image: impl Fn(&T) -> Vec<(K, Rational)>,
) -> Vec<(Vec<usize>, Matrix)> {
    let mut blocks: BTreeMap<Multiweight, Vec<usize>> = BTreeMap::new();
    for (i, s) in sources.iter().enumerate() {
        blocks.entry(weight(s)).or_default().push(i);
    }
    blocks
        .into_values()
        .map(|idx| {
            let images: Vec<Vec<(K, Rational)>> = idx.iter().map(|&i| image(&sources[i])).collect();
            let mut keys: BTreeMap<K, usize> = BTreeMap::new();
            for im in &images {
                for (k, _) in im {
                    let n = keys.len();
                    keys.entry(k.clone()).or_insert(n);
                }
            }
            let mut m = Matrix::zeros(keys.len(), idx.len());
            for (j, im) in images.iter().enumerate() {
                for (k, c) in im {
                    let r = keys[k];
                    let v = m.get(r, j) + c;
                    m.set(r, j, v);
                }
            }
            (idx, m)
        })
        .collect()
}

/// Kernel of a linear map on the span of `sources`, as sparse combinations
/// of source indices.
pub fn block_kernel<T, K: Ord + Clone>(
    sources: &[T],
    weight: impl Fn(&T) -> Multiweight,
    image: impl Fn(&T) -> Vec<(K, Rational)>,
) -> Vec<Vec<(usize, Rational)>> {
    let mut out = Vec::new();
    for (idx, m) in block_matrices(sources, weight, image) {
        if m.rows == 0 {
            out.extend(idx.iter().map(|&i| vec![(i, Rational::one())]));
            continue;
        }
        for v in m.kernel() {
            out.push(idx.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(&i, c)| (i, c)).collect());
        }
    }
    out
}

/// Rank of a linear map on the span of `sources` (assumed independent).
pub fn block_rank<T, K: Ord + Clone>(
    sources: &[T],
    weight: impl Fn(&T) -> Multiweight,
    image: impl Fn(&T) -> Vec<(K, Rational)>,
) -> usize {
    block_matrices(sources, weight, image).iter().map(|(_, m)| m.rank()).sum()
}

fn combine(sources: &[GeomField], combo: &[(usize, Rational)]) -> GeomField {
    let mut acc = sources[combo[0].0].scale(&combo[0].1);
    for (i, c) in &combo[1..] {
        acc = &acc + &sources[*i].scale(c);
    }
    acc
}

fn mw(f: &GeomField) -> Multiweight {
    f.multiweight().expect("monomial source")
}

/// Divergence-free vector fields with coefficients of degree `d`.
pub fn vect0_basis(d: i32) -> Vec<GeomField> {
    let src = monomial_basis(Kind::PolyVector, 1, d, Parity::Even);
    block_kernel(&src, mw, |f| div(f).coords()).iter().map(|c| combine(&src, c)).collect()
}

/// Closed two-forms with coefficients of degree `e`.
pub fn closed2_basis(e: i32) -> Vec<GeomField> {
    let src = monomial_basis(Kind::Form, 2, e, Parity::Odd);
    block_kernel(&src, mw, |f| del(f).coords()).iter().map(|c| combine(&src, c)).collect()
}

fn binom4(n: i32) -> usize {
    count_monomials(5, n - 4)
}

/// `5·C(d+4,4) − C(d+3,4)`: `div` onto functions of degree `d−1` is onto.
pub fn vect0_dim(d: i32) -> usize {
    if d < 0 {
        return 0;
    }
    5 * binom4(d + 4) - if d >= 1 { binom4(d + 3) } else { 0 }
}

/// `5·C(e+5,4) − C(e+6,4)`: closed two-forms are `∂` of one-forms modulo `∂` of functions.
pub fn closed2_dim(e: i32) -> usize {
    if e < 0 {
        return 0;
    }
    5 * binom4(e + 5) - binom4(e + 6)
}

/// Basis of the weight-`w` piece of the extended algebra.
pub fn basis_of_weight(w: i32) -> Vec<E510Element> {
    if w == -5 {
        return vec![E510Element::central(Rational::one())];
    }
    if w < -2 {
        return Vec::new();
    }
    if w % 2 == 0 {
        vect0_basis(w / 2 + 1).into_iter().map(|m| E510Element::unchecked(m, E510Element::zero().alpha, Rational::zero())).collect()
    } else {
        closed2_basis((w + 1) / 2).into_iter().map(|a| E510Element::unchecked(E510Element::zero().mu, a, Rational::zero())).collect()
    }
}

/// Dimension of the weight-`w` piece by the closed formulas.
pub fn weight_dim(w: i32) -> usize {
    match w {
        -5 => 1,
        w if w < -2 => 0,
        w if w % 2 == 0 => vect0_dim(w / 2 + 1),
        w => closed2_dim((w + 1) / 2),
    }
}

#[derive(Clone, Debug, Default)]
pub struct E510JacobiReport {
    pub weight_max: i32,
    pub exhaustive_triples: u64,
    pub random_triples: u64,
    /// Triples with at least one nonzero nested bracket.
    pub nontrivial_triples: u64,
    pub seed: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
}

impl E510JacobiReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    fn record(&mut self, x: &E510Element, y: &E510Element, z: &E510Element, r: &E510Element) {
        self.violation_count += 1;
        if self.violations.len() < 20 {
            self.violations.push(format!("({}, {}, {}) -> {}", x, y, z, r));
        }
    }
}

fn nested_nonzero(x: &E510Element, y: &E510Element, z: &E510Element) -> bool {
    jacobi_terms(x, y, z, None, BracketCorruption::None).1
}

/// Super Jacobi on every multiset of three basis elements of total weight
/// `<= weight_max`. The central element brackets to zero by definition and
/// is left out.
pub fn e510_jacobi_sweep(weight_max: i32, corruption: BracketCorruption) -> E510JacobiReport {
    let mut rep = E510JacobiReport { weight_max, ..Default::default() };
    let top = weight_max + 4;
    let all: Vec<(i32, E510Element)> =
        (-2..=top).flat_map(|w| basis_of_weight(w).into_iter().map(move |x| (w, x))).collect();
    for i in 0..all.len() {
        let (wi, x) = &all[i];
        if 3 * wi > weight_max {
            break;
        }
        for j in i..all.len() {
            let (wj, y) = &all[j];
            if wi + 2 * wj > weight_max {
                break;
            }
            let xy = e510_bracket_with(x, y, corruption);
            for (wk, z) in &all[j..] {
                if wi + wj + wk > weight_max {
                    break;
                }
                rep.exhaustive_triples += 1;
                let (r, nontrivial) = jacobi_terms(x, y, z, Some(&xy), corruption);
                rep.nontrivial_triples += nontrivial as u64;
                if !r.is_zero() {
                    rep.record(x, y, z, &r);
                }
            }
        }
    }
    rep
}

/// Random divergence-free field `Ω⁻¹ ∨ ∂(three-form)` with coefficients of degree `<= max_deg`.
pub fn random_even(rng: &mut SweepRng, max_deg: i32) -> E510Element {
    let f = sample::field(rng, Kind::Form, 3, Parity::Even, max_deg + 1, 3);
    E510Element::even(omega_dual(&del(&f))).expect("Ω⁻¹∨∂ is divergence-free")
}

/// Random closed two-form `∂(one-form)`.
pub fn random_odd(rng: &mut SweepRng, max_deg: i32) -> E510Element {
    let f = sample::field(rng, Kind::Form, 1, Parity::Odd, max_deg + 1, 3);
    E510Element::odd(del(&f)).expect("∂ is closed")
}

/// Super Jacobi on random triples with coefficient degrees up to `max_deg`
/// and random parities, redrawing (bounded) until a nested bracket is nonzero.
pub fn e510_random_jacobi(count: usize, max_deg: i32, seed: u64, corruption: BracketCorruption) -> E510JacobiReport {
    let mut rng = sample::rng(seed);
    let mut rep = E510JacobiReport { seed, ..Default::default() };
    let draw = |rng: &mut SweepRng| {
        let d = rng.gen_range(0..=max_deg);
        if rng.gen_bool(0.5) {
            random_even(rng, d)
        } else {
            random_odd(rng, d)
        }
    };
    for _ in 0..count {
        let mut t = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        for _ in 0..64 {
            if nested_nonzero(&t.0, &t.1, &t.2) {
                break;
            }
            t = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        }
        let (x, y, z) = t;
        rep.random_triples += 1;
        rep.nontrivial_triples += nested_nonzero(&x, &y, &z) as u64;
        let r = jacobi_terms(&x, &y, &z, None, corruption).0;
        if !r.is_zero() {
            rep.record(&x, &y, &z, &r);
        }
    }
    rep
}
