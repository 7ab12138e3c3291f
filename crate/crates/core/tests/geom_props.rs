use e510wb_core::geom::*;
use e510wb_core::ratpoly::Rational;
use e510wb_core::sample;
use proptest::prelude::*;

fn rand_field(seed: u64, kind: Kind, degree: u8) -> GeomField {
    let mut r = sample::rng(seed);
    sample::field(&mut r, kind, degree, Parity::Even, 4, 4)
}

fn sign(k: i64) -> Rational {
    Rational::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn is_zero_diff(a: &GeomField, b: &GeomField) -> bool {
    (&a.clone().with_parity(Parity::Even) - &b.clone().with_parity(Parity::Even)).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn del_squared_vanishes(seed in any::<u64>(), d in 0u8..=3) {
        let f = rand_field(seed, Kind::Form, d);
        prop_assert!(del(&del(&f)).is_zero());
    }

    #[test]
    fn div_squared_vanishes(seed in any::<u64>(), d in 2u8..=4) {
        let f = rand_field(seed, Kind::PolyVector, d);
        prop_assert!(div(&div(&f)).is_zero());
    }

    #[test]
    fn div_defines_lie_derivative_of_volume(seed in any::<u64>()) {
        let mu = rand_field(seed, Kind::PolyVector, 1);
        let vol = GeomField::form(&[0, 1, 2, 3, 4], e510wb_core::ratpoly::Polynomial::one(), Parity::Even);
        let lhs = wedge(&GeomField::scalar_form(div(&mu).as_function(), Parity::Even), &vol);
        prop_assert_eq!(lhs, lie_derivative(&mu, &vol));
    }

    #[test]
    fn div_is_conjugated_del(seed in any::<u64>(), p in 1u8..=5) {
        // div = (-1)^{p-1} Ω⁻¹ ∘ ∂ ∘ Ω on PV^p
        let mu = rand_field(seed, Kind::PolyVector, p);
        let conj = omega_dual(&del(&omega_dual(&mu))).scale(&sign(p as i64 - 1));
        prop_assert!(is_zero_diff(&div(&mu), &conj));
    }

    #[test]
    fn schouten_graded_jacobi(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(),
                              p in 0u8..=3, q in 0u8..=2, r in 0u8..=2) {
        let a = rand_field(s1, Kind::PolyVector, p);
        let b = rand_field(s2, Kind::PolyVector, q);
        let c = rand_field(s3, Kind::PolyVector, r);
        let lhs = schouten(&a, &schouten(&b, &c));
        let rhs1 = schouten(&schouten(&a, &b), &c);
        let rhs2 = schouten(&b, &schouten(&a, &c)).scale(&sign((p as i64 - 1) * (q as i64 - 1)));
        prop_assert!(is_zero_diff(&lhs, &(&rhs1 + &rhs2)));
    }

    #[test]
    fn schouten_leibniz(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(),
                        p in 0u8..=2, q in 0u8..=2, r in 0u8..=2) {
        let a = rand_field(s1, Kind::PolyVector, p);
        let b = rand_field(s2, Kind::PolyVector, q);
        let c = rand_field(s3, Kind::PolyVector, r);
        let lhs = schouten(&a, &wedge(&b, &c));
        let t1 = wedge(&schouten(&a, &b), &c);
        let t2 = wedge(&b, &schouten(&a, &c)).scale(&sign((p as i64 - 1) * q as i64));
        prop_assert!(is_zero_diff(&lhs, &(&t1 + &t2)));
    }

    #[test]
    fn lie_derivative_commutes_with_del(s1 in any::<u64>(), s2 in any::<u64>(), d in 0u8..=3) {
        let v = rand_field(s1, Kind::PolyVector, 1);
        let f = rand_field(s2, Kind::Form, d);
        prop_assert!(is_zero_diff(&lie_derivative(&v, &del(&f)), &del(&lie_derivative(&v, &f))));
    }

    #[test]
    fn lie_derivative_is_a_representation(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), d in 0u8..=3) {
        let v = rand_field(s1, Kind::PolyVector, 1);
        let w = rand_field(s2, Kind::PolyVector, 1);
        let f = rand_field(s3, Kind::Form, d);
        let lhs = &lie_derivative(&v, &lie_derivative(&w, &f)) - &lie_derivative(&w, &lie_derivative(&v, &f));
        let rhs = lie_derivative(&schouten(&v, &w), &f);
        prop_assert!(is_zero_diff(&lhs, &rhs));
    }
}

#[test]
fn omega_dual_of_wedge_matches_double_contraction() {
    // Ω⁻¹ ∨ (a ∧ b) = (Ω⁻¹ ∨ a) ∨ b, the dual of ι_{X∧Y} = ι_Y ι_X;
    // checked on every pair of basis monomials.
    let one = e510wb_core::ratpoly::Polynomial::one;
    for ma in 0u8..32 {
        for mb in 0u8..32 {
            let a = GeomField::from_terms(Kind::Form, mask_degree(ma), Parity::Even, [(ma, one())]);
            let b = GeomField::from_terms(Kind::Form, mask_degree(mb), Parity::Even, [(mb, one())]);
            if mask_degree(ma) + mask_degree(mb) > 5 {
                continue;
            }
            let lhs = omega_dual(&wedge(&a, &b));
            let inner = contract(&omega_dual(&a), &b);
            let rhs = if inner.kind() == Kind::Form {
                GeomField::function(inner.as_function(), Parity::Even)
            } else {
                inner
            };
            assert!(is_zero_diff(&lhs, &rhs), "sign rule fails at {} {}", ma, mb);
        }
    }
}
