use super::{slot_basis, Brackets, FieldVector, Homog, Pattern, Slot, SLOTS};
use crate::geom::GeomField;
use crate::ratpoly::Rational;
use crate::sample::{self, SweepRng};
use rand::Rng;

fn pattern_of_subset(xs: &[&Homog], mask: u32) -> Pattern {
    let mut p = [0; 4];
    for (k, x) in xs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            p[x.slot.index()] += 1;
        }
    }
    p
}

/// `Σ_{i+j=n+1} Σ_σ ε(σ) ℓ_j(ℓ_i(x_σ(1..i)), x_σ(i+1..n))` over unshuffles.
pub fn jacobi_residual<B: Brackets>(b: &B, xs: &[Homog]) -> FieldVector {
    let refs: Vec<&Homog> = xs.iter().collect();
    jacobi_residual_refs(b, &refs)
}

pub fn jacobi_residual_refs<B: Brackets>(b: &B, xs: &[&Homog]) -> FieldVector {
    jacobi_terms(b, xs).0
}

/// Residual plus whether any single nested term was nonzero (so that a
/// zero residual is a genuine cancellation).
pub fn jacobi_terms<B: Brackets>(b: &B, xs: &[&Homog]) -> (FieldVector, bool) {
    let mut nontrivial = false;
    let n = xs.len();
    let kmax = b.max_arity();
    let mut acc = FieldVector::zero();
    let full = pattern_of_subset(xs, (1u32 << n) - 1);
    for mask in 1u32..(1 << n) {
        let i = mask.count_ones() as usize;
        let j = n + 1 - i;
        if i > kmax || j > kmax {
            continue;
        }
        let pin = pattern_of_subset(xs, mask);
        let Some(out) = b.pattern_output(&pin) else { continue };
        let mut pout = [full[0] - pin[0], full[1] - pin[1], full[2] - pin[2], full[3] - pin[3]];
        pout[out.index()] += 1;
        if b.pattern_output(&pout).is_none() {
            continue;
        }
        let inner_args: Vec<&Homog> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| xs[k]).collect();
        let Some(inner) = b.bracket(&inner_args) else { continue };
        // Koszul sign of moving the selected arguments to the front
        let mut odd = 0;
        for a in 0..n {
            if mask >> a & 1 == 1 {
                continue;
            }
            for c in a + 1..n {
                if mask >> c & 1 == 1 {
                    odd += xs[a].parity_bit() * xs[c].parity_bit();
                }
            }
        }
        let mut outer_args: Vec<&Homog> = vec![&inner];
        outer_args.extend((0..n).filter(|k| mask >> k & 1 == 0).map(|k| xs[k]));
        if let Some(t) = b.bracket(&outer_args) {
            let t = if odd % 2 == 1 { t.scale(&Rational::from_int(-1)) } else { t };
            nontrivial = true;
            acc.add_homog(&t);
        }
    }
    (acc, nontrivial)
}

/// Whether some nested composition can be nonzero on this pattern.
pub fn jacobi_pattern_feasible<B: Brackets>(b: &B, p: &Pattern) -> bool {
    let n: usize = p.iter().sum();
    for q0 in 0..=p[0] {
        for q1 in 0..=p[1] {
            for q2 in 0..=p[2] {
                for q3 in 0..=p[3] {
                    let q = [q0, q1, q2, q3];
                    let i: usize = q.iter().sum();
                    if i == 0 || i > b.max_arity() || n + 1 - i > b.max_arity() {
                        continue;
                    }
                    if let Some(out) = b.pattern_output(&q) {
                        let mut r = [p[0] - q0, p[1] - q1, p[2] - q2, p[3] - q3];
                        r[out.index()] += 1;
                        if b.pattern_output(&r).is_some() {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

pub fn patterns_of_arity(n: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                out.push([a, b, c, n - a - b - c]);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, Default)]
pub struct JacobiReport {
    pub weight_max: i32,
    pub arity_max: usize,
    pub exhaustive_tuples: u64,
    pub random_tuples: u64,
    /// Tuples where at least one nested term was nonzero.
    pub nontrivial_tuples: u64,
    pub seed: u64,
    pub violation_count: u64,
    /// First few violations with their witness tuples.
    pub violations: Vec<Violation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub(crate) fn record(&mut self, xs: &[&Homog], r: &FieldVector) {
        self.violation_count += 1;
        if self.violations.len() < 20 {
            self.violations.push(Violation {
                inputs: xs.iter().map(|x| format!("{:?}", x)).collect(),
                residual: format!("{:?}", r),
            });
        }
    }
}

/// Exhaustive sweep over multisets of monomial basis fields with total
/// coefficient degree `<= weight_max` and arity `<= arity_max`.
pub fn generalized_jacobi_check<B: Brackets>(b: &B, weight_max: i32, arity_max: usize) -> JacobiReport {
    let mut rep = JacobiReport { weight_max, arity_max, ..Default::default() };
    let bases: Vec<Vec<Vec<Homog>>> =
        SLOTS.iter().map(|&s| (0..=weight_max).map(|d| slot_basis(s, d)).collect()).collect();
    for n in 1..=arity_max {
        for p in patterns_of_arity(n) {
            if !jacobi_pattern_feasible(b, &p) {
                continue;
            }
            // flatten per slot: (degree, element) lists
            let per_slot: Vec<Vec<(i32, &Homog)>> = (0..4)
                .map(|s| {
                    bases[s].iter().enumerate().flat_map(|(d, v)| v.iter().map(move |h| (d as i32, h))).collect()
                })
                .collect();
            let mut chosen: Vec<&Homog> = Vec::with_capacity(n);
            sweep_slots(b, &p, &per_slot, 0, 0, weight_max, &mut chosen, &mut rep);
        }
    }
    rep
}

#[allow(clippy::too_many_arguments)]
fn sweep_slots<'a, B: Brackets>(
    b: &B,
    p: &Pattern,
    per_slot: &'a [Vec<(i32, &'a Homog)>],
    slot: usize,
    start: usize,
    budget: i32,
    chosen: &mut Vec<&'a Homog>,
    rep: &mut JacobiReport,
) {
    let placed_here = chosen.len() - p[..slot].iter().sum::<usize>();
    if slot == 4 {
        rep.exhaustive_tuples += 1;
        let (r, nt) = jacobi_terms(b, chosen);
        rep.nontrivial_tuples += nt as u64;
        if !r.is_zero() {
            rep.record(chosen, &r);
        }
        return;
    }
    if placed_here == p[slot] {
        sweep_slots(b, p, per_slot, slot + 1, 0, budget, chosen, rep);
        return;
    }
    for k in start..per_slot[slot].len() {
        let (d, h) = per_slot[slot][k];
        if d > budget {
            break;
        }
        chosen.push(h);
        sweep_slots(b, p, per_slot, slot, k, budget - d, chosen, rep);
        chosen.pop();
    }
}

fn random_homog(rng: &mut SweepRng, slot: Slot) -> Homog {
    let deg = rng.gen_range(0..=2);
    let f = match slot {
        Slot::Nu | Slot::Beta => GeomField::from_terms(
            slot.kind(),
            0,
            slot.parity(),
            [(0u8, sample::poly(rng, deg, 3))],
        ),
        Slot::Mu | Slot::Gamma => sample::field(rng, slot.kind(), 1, slot.parity(), deg, 3),
    };
    Homog::new(slot, f)
}

/// Random tuples at the given arities, drawn from feasible patterns.
pub fn random_jacobi_check<B: Brackets>(b: &B, arities: &[usize], count: usize, seed: u64) -> JacobiReport {
    let mut rng = sample::rng(seed);
    let mut rep = JacobiReport { seed, ..Default::default() };
    let pats: Vec<Pattern> = arities
        .iter()
        .flat_map(|&n| patterns_of_arity(n))
        .filter(|p| jacobi_pattern_feasible(b, p))
        .collect();
    if pats.is_empty() {
        return rep;
    }
    for _ in 0..count {
        // redraw (bounded) until some nested term is nonzero, so the
        // sample is not dominated by tuples where every composition vanishes
        let mut xs = Vec::new();
        let mut nt = false;
        for _ in 0..64 {
            let p = pats[rng.gen_range(0..pats.len())];
            xs.clear();
            for s in SLOTS {
                for _ in 0..p[s.index()] {
                    xs.push(random_homog(&mut rng, s));
                }
            }
            // shuffle argument order; the residual is graded symmetric
            for i in (1..xs.len()).rev() {
                let j = rng.gen_range(0..=i);
                xs.swap(i, j);
            }
            let refs: Vec<&Homog> = xs.iter().collect();
            nt = jacobi_terms(b, &refs).1;
            if nt {
                break;
            }
        }
        rep.random_tuples += 1;
        rep.nontrivial_tuples += nt as u64;
        let refs: Vec<&Homog> = xs.iter().collect();
        let r = jacobi_residual_refs(b, &refs);
        if !r.is_zero() {
            rep.record(&refs, &r);
        }
    }
    rep
}

/// Visit every multiset of `n` monomial basis fields with total coefficient
/// degree `<= weight_max`.
pub fn visit_basis_multisets(weight_max: i32, n: usize, visit: &mut dyn FnMut(&[&Homog])) {
    let all: Vec<(i32, Homog)> = SLOTS
        .iter()
        .flat_map(|&s| (0..=weight_max).flat_map(move |d| slot_basis(s, d).into_iter().map(move |h| (d, h))))
        .collect();
    fn rec<'a>(
        all: &'a [(i32, Homog)],
        start: usize,
        left: usize,
        budget: i32,
        chosen: &mut Vec<&'a Homog>,
        visit: &mut dyn FnMut(&[&Homog]),
    ) {
        if left == 0 {
            visit(chosen);
            return;
        }
        for k in start..all.len() {
            if all[k].0 > budget {
                continue;
            }
            chosen.push(&all[k].1);
            rec(all, k, left - 1, budget - all[k].0, chosen, visit);
            chosen.pop();
        }
    }
    rec(&all, 0, n, weight_max, &mut Vec::new(), visit);
}
