use e510wb_core::geom::{div, parse_field, wedge, GeomField, Kind, Parity};
use e510wb_core::linf::*;
use e510wb_core::ratpoly::{Polynomial, Rational};
use e510wb_core::sample;
use rand::Rng;

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn z(i: usize) -> Polynomial {
    Polynomial::var(i)
}

fn one() -> Polynomial {
    Polynomial::one()
}

fn vec_field(i: usize, c: Polynomial) -> Homog {
    Homog::new(Slot::Mu, GeomField::vector(i, c, Parity::Odd))
}

fn func(c: Polynomial) -> Homog {
    Homog::new(Slot::Nu, GeomField::function(c, Parity::Even))
}

/// Random field with `ν(0) = 0` and coefficient degree `<= 2`.
fn random_field(seed: u64) -> FieldVector {
    let mut r = sample::rng(seed);
    let nu = &sample::homogeneous_poly(&mut r, 1, 2) + &sample::homogeneous_poly(&mut r, 2, 2);
    FieldVector {
        mu: sample::field(&mut r, Kind::PolyVector, 1, Parity::Odd, 2, 3),
        nu: GeomField::function(nu, Parity::Even),
        gamma: sample::field(&mut r, Kind::Form, 1, Parity::Even, 2, 3),
        beta: GeomField::scalar_form(sample::poly(&mut r, 2, 3), Parity::Odd),
    }
}

#[test]
fn l1_is_signed_divergence() {
    let m = LinfModel::default();
    let out = m.bracket(&[&vec_field(0, z(0))]).unwrap();
    assert_eq!(out.slot, Slot::Nu);
    assert_eq!(out.field.as_function(), Polynomial::constant(q(-1, 1)));
}

#[test]
fn l2_on_vector_fields_expands_div_of_wedge() {
    let m = LinfModel::default();
    let a = vec_field(0, one());
    let b = vec_field(1, &z(0) * &z(1));
    let out = m.bracket(&[&a, &b]).unwrap();
    assert!((&out.field - &div(&wedge(&a.field, &b.field))).is_zero());
    // by hand: div(z1 z2 θ1θ2) = z2 θ2 - z1 θ1
    let hand = &GeomField::vector(1, z(1), Parity::Odd) - &GeomField::vector(0, z(0), Parity::Odd);
    assert!((&out.field - &hand).is_zero());
}

#[test]
fn l2_gamma_gamma_points_along_fifth_direction() {
    let m = LinfModel::default();
    let g1 = Homog::new(Slot::Gamma, gamma_nm());
    let h = q(1, 2);
    let g2 = Homog::new(
        Slot::Gamma,
        &GeomField::form(&[3], z(2).scale(&h), Parity::Even) - &GeomField::form(&[2], z(3).scale(&h), Parity::Even),
    );
    let out = m.bracket(&[&g1, &g2]).unwrap();
    assert_eq!(out.slot, Slot::Mu);
    assert!((&out.field - &GeomField::vector(4, one(), Parity::Odd)).is_zero());
}

#[test]
fn brackets_are_graded_symmetric() {
    let m = LinfModel::default();
    let mut r = sample::rng(7);
    for _ in 0..50 {
        let a = Homog::new(Slot::Mu, sample::field(&mut r, Kind::PolyVector, 1, Parity::Odd, 2, 2));
        let b = Homog::new(Slot::Mu, sample::field(&mut r, Kind::PolyVector, 1, Parity::Odd, 2, 2));
        let c = Homog::new(Slot::Gamma, sample::field(&mut r, Kind::Form, 1, Parity::Even, 2, 2));
        let x = m.bracket(&[&a, &b, &c]);
        let y = m.bracket(&[&b, &c, &a]);
        let neg = |h: Option<Homog>| h.map(|h| h.scale(&q(-1, 1)));
        assert_eq!(x, neg(y.clone()));
        assert_eq!(m.bracket(&[&c, &a, &b]), x);
    }
}

#[test]
fn arity_out_of_range_is_an_error() {
    let m = LinfModel::default();
    let f = FieldVector::zero();
    let args = vec![&f; 7];
    assert_eq!(m.bracket_fields(&args), Err(LinfError::ArityOutOfRange(7, 6)));
    assert!(m.bracket_fields(&[]).is_err());
}

#[test]
fn jacobi_holds_at_low_weight() {
    let rep = generalized_jacobi_check(&LinfModel::default(), 2, 3);
    assert!(rep.exhaustive_tuples > 1000);
    assert!(rep.passed(), "{:?}", rep.violations.first());
}

#[test]
fn jacobi_holds_for_mixed_mu_mu_gamma_triples() {
    let m = LinfModel::default();
    let mut count = 0;
    visit_basis_multisets(3, 3, &mut |xs| {
        if pattern_of(xs) == [0, 2, 1, 0] {
            count += 1;
            assert!(jacobi_residual_refs(&m, xs).is_zero());
        }
    });
    assert!(count > 0);
}

#[test]
fn jacobi_random_high_arity() {
    let rep = random_jacobi_check(&LinfModel::default(), &[5, 6], 40, 11);
    assert_eq!(rep.random_tuples, 40);
    assert!(rep.passed());
}

#[test]
fn strict_model_is_a_dg_lie_algebra() {
    let rep = generalized_jacobi_check(&StrictModel::new(), 2, 3);
    assert!(rep.passed(), "{:?}", rep.violations.first());
}

#[test]
fn corrupted_tables_are_caught() {
    let bad = LinfModel::default().corrupted(Corruption::FlipNuPower(1));
    assert!(!generalized_jacobi_check(&bad, 2, 3).passed());
    let bad = StrictModel::new().corrupted(Corruption::FlipStrictMuGamma);
    assert!(!generalized_jacobi_check(&bad, 2, 3).passed());
}

#[test]
fn strict_bracket_examples() {
    let a = FieldVector::from_homog(&vec_field(0, one()));
    let b = FieldVector::from_homog(&vec_field(1, z(0)));
    let out = l0_bracket(&a, &b);
    assert!((&out.mu - &GeomField::vector(1, one(), Parity::Odd)).is_zero());
    // [f ∂_i, g] = f ∂_i g
    let f = &z(2) * &z(2);
    let g = &z(1) * &z(3);
    let mu = FieldVector::from_homog(&vec_field(1, f.clone()));
    let nu = FieldVector::from_homog(&func(g.clone()));
    let out = l0_bracket(&mu, &nu);
    assert_eq!(out.nu.as_function(), &f * &g.partial_derivative(1));
    // purely even argument paired with itself
    let gam = FieldVector::from_homog(&Homog::new(Slot::Gamma, gamma_nm()));
    assert!(l0_bracket(&gam, &gam).is_zero());
}

#[test]
fn automorphism_identity_when_nu_vanishes() {
    let mut a = random_field(3);
    a.nu = Slot::Nu.zero();
    a.beta = Slot::Beta.zero();
    a.gamma = Slot::Gamma.zero();
    assert_eq!(automorphism_apply(&a, Direction::Forward, None).unwrap(), a);
}

#[test]
fn automorphism_series_example() {
    let a = FieldVector::zero().with(func(z(0))).with(vec_field(1, one()));
    let out = automorphism_apply(&a, Direction::Forward, Some(3)).unwrap();
    let expect = &(&one() - &z(0)) + &(&z(0) * &z(0)).scale(&q(1, 2));
    assert_eq!(out.mu, GeomField::vector(1, expect, Parity::Odd));
}

#[test]
fn automorphism_needs_order_for_constant_nu() {
    let a = FieldVector::zero().with(func(Polynomial::constant(q(1, 3))));
    assert_eq!(automorphism_apply(&a, Direction::Forward, None), Err(LinfError::NotTruncatable));
    assert!(automorphism_apply(&a, Direction::Forward, Some(4)).is_ok());
}

#[test]
fn automorphism_round_trips() {
    for seed in 0..20 {
        let a = random_field(seed);
        let n = 5;
        let fwd = automorphism_apply(&a, Direction::Forward, Some(n)).unwrap();
        let back = automorphism_apply(&fwd, Direction::Inverse, Some(n)).unwrap();
        assert_eq!(back, a.truncate_degree(n as i32 - 1));
        let inv = automorphism_apply(&a, Direction::Inverse, Some(n)).unwrap();
        let again = automorphism_apply(&inv, Direction::Forward, Some(n)).unwrap();
        assert_eq!(again, a.truncate_degree(n as i32 - 1));
    }
}

#[test]
fn taylor_components_reassemble_the_map() {
    for seed in 0..10 {
        let a = random_field(100 + seed);
        let n = 4;
        for dir in [Direction::Forward, Direction::Inverse] {
            let direct = automorphism_apply(&a, dir, Some(n)).unwrap();
            let series = taylor_apply(&a, dir, 6).truncate_degree(n as i32 - 1);
            assert_eq!(direct, series, "{:?}", dir);
        }
    }
}

#[test]
fn automorphism_preserves_canonical_one_form() {
    for seed in 0..10 {
        let a = random_field(200 + seed);
        let v = random_field(300 + seed);
        let n = 5;
        let cut = n as i32 - 1;
        for dir in [Direction::Forward, Direction::Inverse] {
            let pa = automorphism_apply(&a, dir, Some(n)).unwrap();
            let dv = tangent_apply(&a, &v, dir, 6).truncate_degree(cut);
            let lhs = liouville(&pa, &dv).truncate_degree(cut);
            let rhs = liouville(&a, &v).truncate_degree(cut);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn automorphism_preserves_weight_zero_pairing() {
    for seed in 0..20 {
        let a = random_field(400 + seed);
        let b = random_field(500 + seed);
        let pa = automorphism_apply(&a, Direction::Forward, Some(4)).unwrap();
        let pb = automorphism_apply(&b, Direction::Forward, Some(4)).unwrap();
        assert_eq!(odd_pairing(&pa, &pb), odd_pairing(&a, &b));
    }
}

#[test]
fn automorphism_is_a_morphism_from_strict_to_nonstrict() {
    let inf = LinfModel::new(Rational::zero());
    let st = StrictModel::new();
    let rep = morphism_check(&st, &inf, &TaylorMap::new(Direction::Forward), 1, 3);
    assert!(rep.passed(), "{:?}", rep.violations.first());
    let rep = morphism_check(&inf, &st, &TaylorMap::new(Direction::Inverse), 1, 3);
    assert!(rep.passed(), "{:?}", rep.violations.first());
}

#[test]
fn morphism_check_detects_wrong_direction_and_corruption() {
    let inf = LinfModel::new(Rational::zero());
    let st = StrictModel::new();
    assert!(!morphism_check(&inf, &st, &TaylorMap::new(Direction::Forward), 1, 2).passed());
    let bad = inf.clone().corrupted(Corruption::FlipNuPower(1));
    assert!(!morphism_check(&st, &bad, &TaylorMap::new(Direction::Forward), 1, 3).passed());
}

#[test]
fn coupling_rescaling_relates_bracket_tables() {
    for (g, s) in [(q(4, 1), q(2, 1)), (q(9, 4), q(3, 2)), (q(1, 16), q(-1, 4))] {
        assert_eq!(g.sqrt_exact().map(|r| &r * &r), Some(g.clone()));
        let mg = LinfModel::new(g);
        let m1 = LinfModel::new(Rational::one());
        for n in 1..=3 {
            visit_basis_multisets(1, n, &mut |xs| {
                let rx: Vec<Homog> = xs
                    .iter()
                    .map(|h| {
                        let v = coupling_rescale(&FieldVector::from_homog(h), &s);
                        Homog::new(h.slot, v.get(h.slot).clone())
                    })
                    .collect();
                let rr: Vec<&Homog> = rx.iter().collect();
                let lhs = mg.bracket(&rr).map(|h| FieldVector::from_homog(&h)).unwrap_or_else(FieldVector::zero);
                let rhs = m1
                    .bracket(xs)
                    .map(|h| coupling_rescale(&FieldVector::from_homog(&h), &s))
                    .unwrap_or_else(FieldVector::zero);
                assert_eq!(lhs, rhs);
            });
        }
    }
}

#[test]
fn eom_flat_and_gamma_nm_backgrounds_solve() {
    for p in [EomPreset::Flat, EomPreset::GammaNm] {
        let (phi, g) = p.fields();
        assert!(eom_residual(&phi, &g, None).unwrap().is_zero(), "{:?}", p);
    }
}

#[test]
fn eom_linear_divergence_free_vector_field() {
    // μ = z2 ∂1 - z1 ∂2 is divergence free; concrete μ∧μ vanishes
    let mu = &GeomField::vector(0, z(1), Parity::Odd) - &GeomField::vector(1, z(0), Parity::Odd);
    let phi = FieldVector { mu, ..FieldVector::zero() };
    assert!(eom_residual(&phi, &Rational::one(), None).unwrap().is_zero());
    let phi = FieldVector { mu: GeomField::vector(0, z(0), Parity::Odd), ..FieldVector::zero() };
    let r = eom_residual(&phi, &Rational::one(), None).unwrap();
    assert_eq!(r.nu.as_function(), Polynomial::constant(q(-1, 1)));
}

#[test]
fn eom_matches_bracket_series_on_concrete_fields() {
    for seed in 0..10 {
        let phi = random_field(600 + seed);
        let g = q(3, 2);
        let cut = 3;
        let closed = eom_residual(&phi, &g, Some(cut as u32 + 1)).unwrap();
        let series = q_vector(&LinfModel::new(g), &phi).truncate_degree(cut);
        assert_eq!(closed, series);
    }
}

#[test]
fn eom_quadratic_terms_match_brackets() {
    let m = LinfModel::default();
    let mut rng = sample::rng(9);
    for _ in 0..30 {
        let mu1 = sample::field(&mut rng, Kind::PolyVector, 1, Parity::Odd, 2, 2);
        let mu2 = sample::field(&mut rng, Kind::PolyVector, 1, Parity::Odd, 2, 2);
        let nu = sample::homogeneous_poly(&mut rng, 1, 2);
        let gamma = sample::field(&mut rng, Kind::Form, 1, Parity::Even, 2, 2);
        let order = 4;
        let got = eom_mu_bilinear(&mu1, &mu2, &GeomField::function(nu.clone(), Parity::Even), &gamma, order);
        // Σ_n ℓ_{n+2}(ν^n, μ₁, μ₂)/n! and Σ_n ℓ_{n+3}(ν^n, μ₁, μ₂, γ)/n!
        let (a, b, c) = (Homog::new(Slot::Mu, mu1), Homog::new(Slot::Mu, mu2), Homog::new(Slot::Gamma, gamma));
        let nh = func(nu);
        let mut want = FieldVector::zero();
        for n in 0..=4usize {
            let mut args: Vec<&Homog> = vec![&nh; n];
            args.extend([&a, &b]);
            let inv = e510wb_core::ratpoly::factorial(n as u32).recip();
            if let Some(h) = m.bracket(&args) {
                want.add_homog(&h.scale(&inv));
            }
            args.push(&c);
            if let Some(h) = m.bracket(&args) {
                want.add_homog(&h.scale(&inv));
            }
        }
        assert_eq!(got, want.truncate_degree(order as i32 - 1));
    }
}

#[test]
fn field_file_parses() {
    let src = "[gamma]\nform 1 even\n1/2 * z^(1,0,0,0,0) * dz2\n-1/2 * z^(0,1,0,0,0) * dz1\n[nu]\npv 0 even\n3 * z^(0,0,1,0,0) * 1\n";
    let phi = parse_field_vector(src).unwrap();
    assert_eq!(phi.gamma, gamma_nm());
    assert_eq!(phi.nu.as_function(), z(2).scale(&q(3, 1)));
    assert!(parse_field_vector("[zeta]\n").is_err());
    let err = parse_field_vector("[mu]\nform 1 even\n").unwrap_err();
    assert_eq!(err.line, 1);
    assert!(parse_field("pv 1 odd\n1 * z^(0,0,0,0,0) * d1\n").is_ok());
}

#[test]
fn random_field_helper_has_no_constant_nu() {
    let mut r = sample::rng(1);
    for s in 0..5 {
        let _: u8 = r.gen();
        assert!(random_field(s).nu.as_function().eval_at_zero().is_zero());
    }
}
