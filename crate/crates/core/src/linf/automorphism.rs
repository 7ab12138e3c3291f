//! The field automorphism relating the strict and non-strict models.
//!
//! Forward:  `μ ↦ e^{-ν} μ`, `ν ↦ 1 - e^{-ν}`, `γ ↦ e^{ν} γ`, `β ↦ (β + μ∨γ) e^{ν}`.
//! Inverse:  `μ ↦ μ/(1-ν)`, `ν ↦ -log(1-ν)`, `γ ↦ (1-ν) γ`, `β ↦ (1-ν) β - μ∨γ`.
//!
//! The `(γ, β)` part is the cotangent lift of the `(μ, ν)` map, so the
//! sign of the `μ∨γ` term is tied to the contraction convention of
//! [`contract`]: with `μ` first it enters with `+`. The forward map is an
//! L∞ morphism from the strict model to the non-strict one at `g = 0`.
//!
//! Series are cut at a truncation order `N`: powers `ν^k` with `k >= N`
//! are dropped, and when `ν(0) = 0` every product is also cut at coefficient
//! degree `N - 1`, which makes the truncation exact in that degree range.

use super::{koszul_sort_sign, visit_basis_multisets, JacobiReport, pattern_of, Brackets, FieldVector, Homog, LinfError, Slot};
use crate::geom::{contract, GeomField, Parity};
use crate::ratpoly::{factorial, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Multiply with optional degree cut.
fn mul(a: &Polynomial, b: &Polynomial, cut: Option<i32>) -> Polynomial {
    match cut {
        Some(d) => a.mul_truncated(b, d),
        None => a * b,
    }
}

/// `Σ_{k<N} c_k x^k`.
fn series(x: &Polynomial, c: impl Fn(u32) -> Rational, order: u32, cut: Option<i32>) -> Polynomial {
    let mut acc = Polynomial::zero();
    let mut pw = Polynomial::one();
    for k in 0..order {
        let ck = c(k);
        if !ck.is_zero() {
            acc = &acc + &pw.scale(&ck);
        }
        pw = mul(&pw, x, cut);
        if pw.is_zero() {
            break;
        }
    }
    match cut {
        Some(d) => acc.truncate_degree(d),
        None => acc,
    }
}

pub fn exp_series(x: &Polynomial, order: u32, cut: Option<i32>) -> Polynomial {
    series(x, |k| factorial(k).recip(), order, cut)
}

/// `1/(1-x)` truncated.
pub fn geometric_series(x: &Polynomial, order: u32, cut: Option<i32>) -> Polynomial {
    series(x, |_| Rational::one(), order, cut)
}

/// `-log(1-x) = Σ_{k≥1} x^k/k` truncated.
pub fn neg_log_series(x: &Polynomial, order: u32, cut: Option<i32>) -> Polynomial {
    series(x, |k| if k == 0 { Rational::zero() } else { Rational::new(1, k as i64) }, order, cut)
}

/// Resolve the truncation order and the degree cut for a field.
pub fn truncation(a: &FieldVector, order: Option<u32>) -> Result<(u32, Option<i32>), LinfError> {
    let nu0 = a.nu.coeff(0).eval_at_zero();
    match (nu0.is_zero(), order) {
        (true, Some(n)) => Ok((n, Some(n as i32 - 1))),
        (true, None) => {
            let n = a.max_coeff_degree() as u32 + 1;
            Ok((n, Some(n as i32 - 1)))
        }
        (false, Some(n)) => Ok((n, None)),
        (false, None) => Err(LinfError::NotTruncatable),
    }
}

fn times(f: &GeomField, p: &Polynomial, cut: Option<i32>) -> GeomField {
    f.map_coeffs(|c| mul(c, p, cut))
}

/// Apply the automorphism to a concrete field.
pub fn automorphism_apply(a: &FieldVector, dir: Direction, order: Option<u32>) -> Result<FieldVector, LinfError> {
    let (n, cut) = truncation(a, order)?;
    let nu = a.nu.as_function();
    let cut_field = |f: GeomField| match cut {
        Some(d) => f.map_coeffs(|c| c.truncate_degree(d)),
        None => f,
    };
    let one = Polynomial::one();
    let out = match dir {
        Direction::Forward => {
            let em = exp_series(&-&nu, n, cut);
            let ep = exp_series(&nu, n, cut);
            let mu = times(&a.mu, &em, cut);
            let nu2 = GeomField::function(&one - &em, Parity::Even);
            let gamma = times(&a.gamma, &ep, cut);
            let b = &a.beta + &contract(&a.mu, &a.gamma).with_parity(Parity::Odd);
            let beta = times(&b, &ep, cut);
            FieldVector { mu, nu: nu2, gamma, beta }
        }
        Direction::Inverse => {
            let geo = geometric_series(&nu, n, cut);
            let lg = neg_log_series(&nu, n, cut);
            let lin = &one - &nu;
            let mu = times(&a.mu, &geo, cut);
            let gamma = times(&a.gamma, &lin, cut);
            let beta = &times(&a.beta, &lin, cut) - &contract(&a.mu, &a.gamma).with_parity(Parity::Odd);
            FieldVector { mu, nu: GeomField::function(lg, Parity::Even), gamma, beta }
        }
    };
    Ok(out.map(|_, f| cut_field(f.clone())))
}

/// Taylor components `Φ_k` of the automorphism as graded-symmetric
/// multilinear maps (so that `Φ(φ) = Σ Φ_k(φ^k)/k!`).
#[derive(Clone, Copy, Debug)]
pub struct TaylorMap {
    pub dir: Direction,
    pub kmax: usize,
}

impl TaylorMap {
    pub fn new(dir: Direction) -> Self {
        TaylorMap { dir, kmax: 6 }
    }

    fn sorted(&self, p: &[usize; 4], a: &[&Homog]) -> Option<Homog> {
        let n = p[0];
        let nuprod = a[..n].iter().fold(Polynomial::one(), |acc, x| &acc * &x.field.as_function());
        let q = |v: i64| Rational::from_int(v);
        let sgn = |k: usize| q(if k % 2 == 0 { 1 } else { -1 });
        let (slot, f) = match (self.dir, *p) {
            (_, [1, 0, 0, 0]) | (_, [0, 1, 0, 0]) | (_, [0, 0, 1, 0]) | (_, [0, 0, 0, 1]) => {
                (a[0].slot, a[0].field.clone())
            }
            (Direction::Forward, [_, 1, 0, 0]) => (Slot::Mu, a[n].field.mul_poly(&nuprod).scale(&sgn(n))),
            (Direction::Forward, [_, 0, 0, 0]) => (Slot::Nu, GeomField::function(nuprod.scale(&sgn(n + 1)), Parity::Even)),
            (Direction::Forward, [_, 0, 1, 0]) => (Slot::Gamma, a[n].field.mul_poly(&nuprod)),
            (Direction::Forward, [_, 0, 0, 1]) => (Slot::Beta, a[n].field.mul_poly(&nuprod)),
            (Direction::Forward, [_, 1, 1, 0]) => {
                (Slot::Beta, contract(&a[n].field, &a[n + 1].field).mul_poly(&nuprod))
            }
            (Direction::Inverse, [_, 1, 0, 0]) => (Slot::Mu, a[n].field.mul_poly(&nuprod).scale(&factorial(n as u32))),
            (Direction::Inverse, [_, 0, 0, 0]) => {
                (Slot::Nu, GeomField::function(nuprod.scale(&factorial(n as u32 - 1)), Parity::Even))
            }
            (Direction::Inverse, [1, 0, 1, 0]) => (Slot::Gamma, a[1].field.mul_poly(&nuprod).scale(&q(-1))),
            (Direction::Inverse, [1, 0, 0, 1]) => (Slot::Beta, a[1].field.mul_poly(&nuprod).scale(&q(-1))),
            (Direction::Inverse, [0, 1, 1, 0]) => (Slot::Beta, contract(&a[0].field, &a[1].field).scale(&q(-1))),
            _ => return None,
        };
        if f.is_zero() {
            return None;
        }
        Some(Homog::new(slot, f))
    }

    /// `Φ_k` on homogeneous arguments in any order.
    pub fn component(&self, args: &[&Homog]) -> Option<Homog> {
        if args.is_empty() || args.len() > self.kmax {
            return None;
        }
        let p = pattern_of(args);
        let sign = koszul_sort_sign(args, |a| a.slot, |a| a.parity_bit());
        let mut sorted = args.to_vec();
        sorted.sort_by_key(|a| a.slot);
        let h = self.sorted(&p, &sorted)?;
        Some(if sign == 1 { h } else { h.scale(&Rational::from_int(-1)) })
    }
}

/// Set partitions of `0..n` (blocks ordered by least element).
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(i: usize, nblocks: usize, n: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let mut blocks = vec![Vec::new(); nblocks];
            for (k, &b) in assign.iter().enumerate() {
                blocks[b].push(k);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=nblocks {
            assign[i] = b;
            rec(i + 1, nblocks.max(b + 1), n, assign, out);
        }
    }
    if n > 0 {
        rec(0, 0, n, &mut assign, &mut out);
    }
    out
}

fn reorder_sign(xs: &[&Homog], order: &[usize]) -> i32 {
    let items: Vec<(usize, u32)> = order.iter().map(|&k| (k, xs[k].parity_bit())).collect();
    // sign of sorting `order` back to identity equals sign of the reordering
    koszul_sort_sign(&items, |t| t.0, |t| t.1)
}

/// `Σ ε F(ℓ_i(x_S), x_rest) − Σ ε ℓ'_k(F(x_B1), …, F(x_Bk))`: zero iff `F`
/// intertwines `src` and `dst` on these inputs.
pub fn morphism_residual<A: Brackets, B: Brackets>(src: &A, dst: &B, f: &TaylorMap, xs: &[Homog]) -> FieldVector {
    let refs: Vec<&Homog> = xs.iter().collect();
    let n = refs.len();
    let mut lhs = FieldVector::zero();
    for mask in 1u32..(1 << n) {
        let inner: Vec<&Homog> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| refs[k]).collect();
        let Some(l) = src.bracket(&inner) else { continue };
        let rest: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 0).collect();
        let mut order: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        order.extend(rest.iter().copied());
        let s = reorder_sign(&refs, &order);
        let mut args: Vec<&Homog> = vec![&l];
        args.extend(rest.iter().map(|&k| refs[k]));
        if let Some(t) = f.component(&args) {
            lhs.add_homog(&if s == 1 { t } else { t.scale(&Rational::from_int(-1)) });
        }
    }
    let mut rhs = FieldVector::zero();
    for blocks in set_partitions(n) {
        if blocks.len() > dst.max_arity() {
            continue;
        }
        let mut images = Vec::new();
        let mut ok = true;
        for b in &blocks {
            let args: Vec<&Homog> = b.iter().map(|&k| refs[k]).collect();
            match f.component(&args) {
                Some(h) => images.push(h),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let order: Vec<usize> = blocks.iter().flatten().copied().collect();
        let s = reorder_sign(&refs, &order);
        let iref: Vec<&Homog> = images.iter().collect();
        if let Some(t) = dst.bracket(&iref) {
            rhs.add_homog(&if s == 1 { t } else { t.scale(&Rational::from_int(-1)) });
        }
    }
    lhs.sub(&rhs)
}

/// Exhaustive morphism check on basis multisets of weight `<= weight_max`
/// and arity `<= arity_max`.
pub fn morphism_check<A: Brackets, B: Brackets>(
    src: &A,
    dst: &B,
    f: &TaylorMap,
    weight_max: i32,
    arity_max: usize,
) -> JacobiReport {
    let mut rep = JacobiReport { weight_max, arity_max, ..Default::default() };
    for n in 1..=arity_max {
        visit_basis_multisets(weight_max, n, &mut |xs| {
            rep.exhaustive_tuples += 1;
            let owned: Vec<Homog> = xs.iter().map(|&h| h.clone()).collect();
            let r = morphism_residual(src, dst, f, &owned);
            if !r.is_zero() {
                rep.record(xs, &r);
            }
        });
    }
    rep
}

/// The weight-zero odd pairing `(μ∨γ' + μ'∨γ + νβ' + ν'β)(0)`.
pub fn odd_pairing(a: &FieldVector, b: &FieldVector) -> Rational {
    let at0 = |f: GeomField| f.coeff(0).eval_at_zero();
    let t = [
        at0(contract(&a.mu, &b.gamma)),
        at0(contract(&b.mu, &a.gamma)),
        (&a.nu.as_function() * &b.beta.coeff(0)).eval_at_zero(),
        (&b.nu.as_function() * &a.beta.coeff(0)).eval_at_zero(),
    ];
    t.into_iter().sum()
}

/// Canonical one-form `λ_a(v) = γ_a ∨ v_μ + β_a v_ν` as a polynomial.
/// The automorphism acts pointwise, so the cotangent-lift property
/// `λ_{Φ(a)}(DΦ_a v) = λ_a(v)` holds as a polynomial identity.
pub fn liouville(a: &FieldVector, v: &FieldVector) -> Polynomial {
    let t1 = contract(&v.mu, &a.gamma).coeff(0);
    let t2 = &a.beta.coeff(0) * &v.nu.as_function();
    &t1 + &t2
}

/// `1/∏ r!` over the runs of a sorted index vector.
fn multiset_weight(idx: &[usize]) -> Rational {
    let mut c = Rational::one();
    let mut k = 0;
    while k < idx.len() {
        let run = idx[k..].iter().take_while(|&&x| x == idx[k]).count();
        c = &c / &factorial(run as u32);
        k += run;
    }
    c
}

/// Tangent map `DΦ_a(v) = Σ_k Φ_k(v, a, …, a)/(k-1)!`, built from the
/// Taylor components only.
pub fn tangent_apply(a: &FieldVector, v: &FieldVector, dir: Direction, order: u32) -> FieldVector {
    let f = TaylorMap { dir, kmax: order as usize };
    let ac = a.components();
    let mut out = FieldVector::zero();
    for w in v.components() {
        // multisets of base components, as index vectors in nondecreasing order
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(idx) = stack.pop() {
            let mut args: Vec<&Homog> = vec![&w];
            args.extend(idx.iter().map(|&i| &ac[i]));
            if let Some(t) = f.component(&args) {
                out.add_homog(&t.scale(&multiset_weight(&idx)));
            }
            if idx.len() + 1 < order as usize {
                let start = idx.last().copied().unwrap_or(0);
                for i in start..ac.len() {
                    let mut next = idx.clone();
                    next.push(i);
                    stack.push(next);
                }
            }
        }
    }
    out
}

/// `Φ(a) = Σ_k Φ_k(a, …, a)/k!` from the Taylor components.
pub fn taylor_apply(a: &FieldVector, dir: Direction, order: u32) -> FieldVector {
    let f = TaylorMap { dir, kmax: order as usize };
    let ac = a.components();
    let mut out = FieldVector::zero();
    let mut stack: Vec<Vec<usize>> = (0..ac.len()).map(|i| vec![i]).collect();
    while let Some(idx) = stack.pop() {
        let args: Vec<&Homog> = idx.iter().map(|&i| &ac[i]).collect();
        if let Some(t) = f.component(&args) {
            out.add_homog(&t.scale(&multiset_weight(&idx)));
        }
        if idx.len() < order as usize {
            let start = *idx.last().unwrap();
            for i in start..ac.len() {
                let mut next = idx.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out
}

/// The strict bracket `ℓ₂` of the strict model on general fields.
pub fn l0_bracket(a: &FieldVector, b: &FieldVector) -> FieldVector {
    super::StrictModel::new().bracket_fields(&[a, b]).expect("arity 2")
}

/// Scale `γ, β` by `1/s`. With `s² = g` this intertwines the coupling-one
/// brackets with the coupling-`g` ones: `ℓ^g(Rx, …) = R ℓ^1(x, …)`.
pub fn coupling_rescale(a: &FieldVector, s: &Rational) -> FieldVector {
    let r = s.recip();
    a.map(|slot, f| match slot {
        Slot::Gamma | Slot::Beta => f.scale(&r),
        _ => f.clone(),
    })
}
