//! The central 3-cocycle `φ(μ, μ', α) = ⟨μ ∧ μ', α⟩(0)` and its
//! Chevalley–Eilenberg closedness.
//!
//! `φ` is extended to all arguments as a super-alternating form: swapping
//! two neighbours multiplies by `−(−1)^{|x||y|}`. With one odd argument
//! this gives
//! `φ(x, y, z) = Φ(x_μ, y_μ, z_α) − Φ(x_μ, z_μ, y_α) + Φ(y_μ, z_μ, x_α)`.

use super::{basis_of_weight, e510_bracket_with, BracketCorruption, E510Element};
use crate::geom::{contract, wedge, GeomField};
use crate::ratpoly::{Rational, NVARS};

/// Variants of `φ`. Reading `⟨μ∧μ', α⟩` through any linear functional
/// other than evaluation at 0 still gives a cocycle (it is a limit of
/// translates of `φ`), so [`PhiVariant::NoEvaluation`] passes the
/// closedness check. The negative control corrupts the bracket instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiVariant {
    Standard,
    /// Sum of all coefficients (evaluation at `(1,…,1)`) instead of evaluation at 0.
    NoEvaluation,
}

/// `⟨μ ∧ μ', α⟩` evaluated at the origin.
pub fn cocycle_phi(mu: &GeomField, mu2: &GeomField, alpha: &GeomField) -> Rational {
    phi_raw(mu, mu2, alpha, PhiVariant::Standard)
}

fn phi_raw(mu: &GeomField, mu2: &GeomField, alpha: &GeomField, v: PhiVariant) -> Rational {
    if mu.is_zero() || mu2.is_zero() || alpha.is_zero() {
        return Rational::zero();
    }
    let p = contract(&wedge(mu, mu2), alpha).coeff(0);
    match v {
        PhiVariant::NoEvaluation => p.eval(&std::array::from_fn::<_, NVARS, _>(|_| Rational::one())),
        _ => p.eval_at_zero(),
    }
}

/// `φ` on three elements of the extended algebra.
pub fn phi(x: &E510Element, y: &E510Element, z: &E510Element) -> Rational {
    phi_with(x, y, z, PhiVariant::Standard)
}

pub fn phi_with(x: &E510Element, y: &E510Element, z: &E510Element, v: PhiVariant) -> Rational {
    let a = phi_raw(x.mu(), y.mu(), z.alpha(), v);
    let b = phi_raw(x.mu(), z.mu(), y.alpha(), v);
    let c = phi_raw(y.mu(), z.mu(), x.alpha(), v);
    &(&a - &b) + &c
}

/// Super-alternating sign of moving positions `i < j` of `xs` to the front.
fn front_sign(xs: &[&E510Element], i: usize, j: usize) -> i32 {
    let mut s = 1;
    for k in 0..i {
        if xs[i].parity_bit() * xs[k].parity_bit() == 0 {
            s = -s;
        }
    }
    for k in 0..j {
        if k != i && xs[j].parity_bit() * xs[k].parity_bit() == 0 {
            s = -s;
        }
    }
    s
}

/// `(dφ)(x1..x4) = Σ_{i<j} ± φ([x_i, x_j], x_k, x_l)` with the
/// super-alternating sign of bringing `x_i, x_j` to the front.
pub fn ce_differential(xs: &[&E510Element; 4], v: PhiVariant, corruption: BracketCorruption) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            let b = e510_bracket_with(xs[i], xs[j], corruption);
            if b.is_zero() {
                continue;
            }
            let rest: Vec<&E510Element> = (0..4).filter(|&k| k != i && k != j).map(|k| xs[k]).collect();
            let t = phi_with(&b, rest[0], rest[1], v);
            if front_sign(xs, i, j) == 1 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
    }
    acc
}

#[derive(Clone, Debug, Default)]
pub struct CocycleReport {
    pub weight_max: i32,
    /// All basis 4-multisets of total weight `<= weight_max`.
    pub tuples: u64,
    /// Tuples with at least one nonzero term.
    pub nontrivial_tuples: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// Closedness of `φ` on every basis 4-multiset of total weight `<= weight_max`.
///
/// Every term `φ([x_i,x_j], x_k, x_l)` has argument weight equal to the
/// total weight of the tuple, and `φ` only sees weight `−5`
/// ([`phi_weight_support_check`]). With `full = false` only tuples of total
/// weight `−5` are evaluated and the rest are counted; `full = true`
/// evaluates every tuple, which is what a variant of `φ` without the weight
/// support needs.
pub fn cocycle_closedness_check(weight_max: i32, v: PhiVariant, corruption: BracketCorruption, full: bool) -> CocycleReport {
    let mut rep = CocycleReport { weight_max, ..Default::default() };
    let ws: Vec<i32> = (-2..=weight_max + 6).collect();
    let dims: Vec<u64> = ws.iter().map(|&w| super::weight_dim(w) as u64).collect();
    rep.tuples = count_multisets(&ws, &dims, 4, weight_max);
    let top = if full { weight_max + 6 } else { 1 };
    let all: Vec<(i32, E510Element)> =
        (-2..=top).flat_map(|w| basis_of_weight(w).into_iter().map(move |x| (w, x))).collect();
    let n = all.len();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                if all[a].0 + all[b].0 + all[c].0 + all[c].0 > weight_max {
                    break;
                }
                for d in c..n {
                    let w = all[a].0 + all[b].0 + all[c].0 + all[d].0;
                    if w > weight_max {
                        break;
                    }
                    if !full && w != -5 {
                        continue;
                    }
                    let xs = [&all[a].1, &all[b].1, &all[c].1, &all[d].1];
                    let nontrivial = (0..4).any(|i| (i + 1..4).any(|j| !e510_bracket_with(xs[i], xs[j], corruption).is_zero()));
                    rep.nontrivial_tuples += nontrivial as u64;
                    let r = ce_differential(&xs, v, corruption);
                    if !r.is_zero() {
                        rep.violation_count += 1;
                        if rep.violations.len() < 20 {
                            rep.violations.push(format!("({}; {}; {}; {}) -> {}", xs[0], xs[1], xs[2], xs[3], r));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Number of multisets of size `k` from graded pieces (`ws` ascending) of
/// the given dimensions with total weight `<= wmax`.
fn count_multisets(ws: &[i32], dims: &[u64], k: usize, wmax: i32) -> u64 {
    fn choose(n: u64, m: usize) -> u128 {
        let mut r: u128 = 1;
        for i in 0..m as u64 {
            r = r * (n + i) as u128 / (i + 1) as u128;
        }
        r
    }
    fn rec(ws: &[i32], dims: &[u64], idx: usize, left: usize, budget: i32) -> u128 {
        if left == 0 {
            return u128::from(budget >= 0);
        }
        if idx == ws.len() {
            return 0;
        }
        (0..=left).map(|m| choose(dims[idx], m) * rec(ws, dims, idx + 1, left - m, budget - ws[idx] * m as i32)).sum()
    }
    rec(ws, dims, 0, k, wmax) as u64
}

/// `φ(x, y, z) = 0` unless `wt x + wt y + wt z = −5`, on all basis triples
/// with weights in `[-2, wmax]`.
pub fn phi_weight_support_check(wmax: i32) -> (u64, u64) {
    let all: Vec<(i32, E510Element)> =
        (-2..=wmax).flat_map(|w| basis_of_weight(w).into_iter().map(move |x| (w, x))).collect();
    let (mut n, mut bad) = (0u64, 0u64);
    for i in 0..all.len() {
        for j in i..all.len() {
            for k in j..all.len() {
                n += 1;
                let v = phi(&all[i].1, &all[j].1, &all[k].1);
                if !v.is_zero() && all[i].0 + all[j].0 + all[k].0 != -5 {
                    bad += 1;
                }
            }
        }
    }
    (n, bad)
}
