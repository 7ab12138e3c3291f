//! Weight multiplicities for polynomial gl(5) representations.
//!
//! Irreducible weight systems come from semistandard tableaux (the character
//! is the Schur polynomial), plethysms from multiset/subset enumeration of
//! the inner weight system, and decompositions from highest-weight peeling.
//! Dimensions are cross-checked with the hook-content formula, which shares
//! no code with the tableau enumeration.

use crate::geom::{contract, omega_dual, wedge, GeomField, Kind, Parity};
use crate::ratpoly::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::fmt;

pub const RANK: usize = 5;

pub type Weight = [i32; RANK];

/// Weight -> multiplicity. Zero entries are never stored.
pub type WeightMultiplicity = BTreeMap<Weight, u64>;

/// Default size guard for plethysm enumeration.
pub const SIZE_GUARD: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel(pub [u32; RANK]);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("enumeration of {size} states exceeds the guard {guard}")]
    SizeGuard { size: u64, guard: u64 },
    #[error("peeling went negative at weight {0:?}: input is not a character")]
    NotACharacter(Weight),
}

impl IrrepLabel {
    pub fn new(parts: &[u32]) -> Result<Self, RepError> {
        if parts.len() > RANK || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(RepError::NotAPartition(parts.to_vec()));
        }
        let mut a = [0; RANK];
        a[..parts.len()].copy_from_slice(parts);
        Ok(IrrepLabel(a))
    }

    pub fn fundamental() -> Self {
        IrrepLabel([1, 0, 0, 0, 0])
    }

    /// `∧^k` of the fundamental, `k <= 5`.
    pub fn wedge_power(k: usize) -> Self {
        let mut a = [0; RANK];
        for x in a.iter_mut().take(k) {
            *x = 1;
        }
        IrrepLabel(a)
    }

    pub fn trivial() -> Self {
        IrrepLabel([0; RANK])
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The sl(5) class: strip full columns.
    pub fn sl5_class(&self) -> [u32; RANK] {
        let m = self.0[RANK - 1];
        let mut a = self.0;
        for x in a.iter_mut() {
            *x -= m;
        }
        a
    }

    /// Hook-content dimension `Π (5 + c(x)) / h(x)`.
    pub fn dim(&self) -> u64 {
        let lam = &self.0;
        let conj = |j: usize| lam.iter().filter(|&&r| r as usize > j).count();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for (i, &row) in lam.iter().enumerate() {
            for j in 0..row as usize {
                let content = j as i64 - i as i64;
                let hook = (row as usize - j - 1) + (conj(j) - i - 1) + 1;
                num *= RANK as i64 + content;
                den *= hook as i64;
            }
        }
        (num / den).to_u64().expect("dimension overflow")
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().filter(|&&x| x > 0).map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Weight system of an irreducible polynomial representation via SSYT enumeration.
pub fn irrep_weights(lam: &IrrepLabel) -> WeightMultiplicity {
    let shape: Vec<usize> = lam.0.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
    let mut out = WeightMultiplicity::new();
    let mut weight = [0i32; RANK];
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        weight: &mut Weight,
        out: &mut WeightMultiplicity,
    ) {
        if k == cells.len() {
            *out.entry(*weight).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..RANK {
            grid[i][j] = v;
            weight[v] += 1;
            fill(k + 1, cells, grid, weight, out);
            weight[v] -= 1;
        }
    }
    fill(0, &cells, &mut grid, &mut weight, &mut out);
    out
}

pub fn total_dim(w: &WeightMultiplicity) -> u64 {
    w.values().sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outer {
    Sym,
    Wedge,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r.min(u64::MAX as u128) as u64
}

/// Weights of `Sym^k` or `∧^k` of an irreducible representation.
pub fn plethysm_weights(outer: Outer, k: usize, inner: &IrrepLabel) -> Result<WeightMultiplicity, RepError> {
    plethysm_weights_guarded(outer, k, inner, SIZE_GUARD)
}

pub fn plethysm_weights_guarded(
    outer: Outer,
    k: usize,
    inner: &IrrepLabel,
    guard: u64,
) -> Result<WeightMultiplicity, RepError> {
    let iw = irrep_weights(inner);
    // one entry per basis vector
    let basis: Vec<Weight> = iw.iter().flat_map(|(w, &m)| std::iter::repeat(*w).take(m as usize)).collect();
    let n = basis.len() as u64;
    let size = match outer {
        Outer::Sym => binom(n + k as u64 - 1, k as u64),
        Outer::Wedge => binom(n, k as u64),
    };
    if size > guard {
        return Err(RepError::SizeGuard { size, guard });
    }
    let mut out = WeightMultiplicity::new();
    let mut acc = [0i32; RANK];
    fn rec(
        start: usize,
        left: usize,
        strict: bool,
        basis: &[Weight],
        acc: &mut Weight,
        out: &mut WeightMultiplicity,
    ) {
        if left == 0 {
            *out.entry(*acc).or_insert(0) += 1;
            return;
        }
        for i in start..basis.len() {
            for r in 0..RANK {
                acc[r] += basis[i][r];
            }
            rec(if strict { i + 1 } else { i }, left - 1, strict, basis, acc, out);
            for r in 0..RANK {
                acc[r] -= basis[i][r];
            }
        }
    }
    rec(0, k, outer == Outer::Wedge, &basis, &mut acc, &mut out);
    Ok(out)
}

/// Weights of a tensor product.
pub fn tensor_weights(a: &WeightMultiplicity, b: &WeightMultiplicity) -> WeightMultiplicity {
    let mut out = WeightMultiplicity::new();
    for (wa, ma) in a {
        for (wb, mb) in b {
            let mut w = *wa;
            for r in 0..RANK {
                w[r] += wb[r];
            }
            *out.entry(w).or_insert(0) += ma * mb;
        }
    }
    out
}

pub fn direct_sum(a: &WeightMultiplicity, b: &WeightMultiplicity) -> WeightMultiplicity {
    let mut out = a.clone();
    for (w, m) in b {
        *out.entry(*w).or_insert(0) += m;
    }
    out
}

/// Highest-weight peeling. The lexicographically largest weight present is
/// a highest weight of some summand.
pub fn decompose(w: &WeightMultiplicity) -> Result<Vec<(IrrepLabel, u64)>, RepError> {
    let mut rest: BTreeMap<Weight, i64> = w.iter().map(|(k, &v)| (*k, v as i64)).collect();
    let mut out = Vec::new();
    loop {
        rest.retain(|_, v| *v != 0);
        let Some((&top, &mult)) = rest.iter().next_back() else {
            break;
        };
        if mult < 0 || top.windows(2).any(|p| p[0] < p[1]) || top[RANK - 1] < 0 {
            return Err(RepError::NotACharacter(top));
        }
        let lam = IrrepLabel(top.map(|x| x as u32));
        for (wt, m) in irrep_weights(&lam) {
            let e = rest.entry(wt).or_insert(0);
            *e -= mult * m as i64;
            if *e < 0 {
                return Err(RepError::NotACharacter(wt));
            }
        }
        out.push((lam, mult as u64));
    }
    out.sort();
    out.reverse();
    Ok(out)
}

/// Whether some summand restricts to the sl(5) class of the fundamental.
///
/// A trilinear map on two-forms can pair nontrivially with a vector field
/// only through a summand of this class; its absence forces the map to vanish.
pub fn contains_fundamental_dual(decomposition: &[(IrrepLabel, u64)]) -> bool {
    let target = IrrepLabel::fundamental().sl5_class();
    decomposition.iter().any(|(l, m)| *m > 0 && l.sl5_class() == target)
}

/// Every weight's multiplicity is invariant under coordinate permutations.
pub fn is_weyl_symmetric(w: &WeightMultiplicity) -> bool {
    w.iter().all(|(wt, m)| {
        let mut s = *wt;
        s.sort_unstable_by(|a, b| b.cmp(a));
        w.get(&s) == Some(m)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionReport {
    pub triples: usize,
    pub symmetric_nonzero: Vec<[u8; 3]>,
    pub antisymmetric_nonzero: Vec<[u8; 3]>,
}

impl ContractionReport {
    pub fn vanishes(&self) -> bool {
        self.symmetric_nonzero.is_empty() && self.antisymmetric_nonzero.is_empty()
    }
}

/// `(α, β, γ) ↦ (Ω⁻¹ ∨ (α ∧ β)) ∨ γ` on constant two-forms.
pub fn contraction_term(a: &GeomField, b: &GeomField, c: &GeomField) -> GeomField {
    contract(&omega_dual(&wedge(a, b)), c)
}

/// [`contraction_term`] with every coefficient of `α ∧ β` made nonnegative,
/// which drops the sign rule of the dual (negative control).
pub fn unsigned_contraction_term(a: &GeomField, b: &GeomField, c: &GeomField) -> GeomField {
    let w = wedge(a, b);
    let unsigned = GeomField::from_terms(
        Kind::Form,
        w.degree(),
        Parity::Even,
        w.terms().iter().map(|(m, p)| (*m, if p.eval_at_zero().is_negative() { -p } else { p.clone() })),
    );
    contract(&omega_dual(&unsigned), c)
}

/// Full multilinear expansion over all ordered triples of basis two-forms.
pub fn symmetrized_contraction_report() -> ContractionReport {
    symmetrized_contraction_report_with(contraction_term)
}

pub fn symmetrized_contraction_report_with<F>(term: F) -> ContractionReport
where
    F: Fn(&GeomField, &GeomField, &GeomField) -> GeomField,
{
    let masks: Vec<u8> = (0u8..32).filter(|m| m.count_ones() == 2).collect();
    let basis: Vec<GeomField> = masks
        .iter()
        .map(|&m| GeomField::from_terms(Kind::Form, 2, Parity::Even, [(m, Polynomial::one())]))
        .collect();
    const PERMS: [([usize; 3], i64); 6] =
        [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)];
    let mut rep = ContractionReport { triples: 0, symmetric_nonzero: vec![], antisymmetric_nonzero: vec![] };
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            for k in 0..basis.len() {
                rep.triples += 1;
                let args = [&basis[i], &basis[j], &basis[k]];
                let mut sym = GeomField::zero(Kind::Form, 1, Parity::Even);
                let mut alt = GeomField::zero(Kind::Form, 1, Parity::Even);
                for (p, s) in PERMS {
                    let t = term(args[p[0]], args[p[1]], args[p[2]]).with_parity(Parity::Even);
                    sym = &sym + &t;
                    alt = &alt + &t.scale(&Rational::from_int(s));
                }
                let w = [masks[i], masks[j], masks[k]];
                if !sym.is_zero() {
                    rep.symmetric_nonzero.push(w);
                }
                if !alt.is_zero() {
                    rep.antisymmetric_nonzero.push(w);
                }
            }
        }
    }
    rep
}

pub fn symmetrized_contraction_vanishes() -> bool {
    symmetrized_contraction_report().vanishes()
}
