use e510wb_core::ratpoly::{exp_degree, monomials_of_degree, Polynomial, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| Rational::new(n, d))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform5(0i32..4), rational()), 0..6).prop_map(|terms| {
        Polynomial::from_terms(e510wb_core::ratpoly::Mode::Ordinary, terms).unwrap()
    })
}

fn big_rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn partials_commute(p in poly(), i in 0usize..5, j in 0usize..5) {
        prop_assert_eq!(
            p.partial_derivative(i).partial_derivative(j),
            p.partial_derivative(j).partial_derivative(i)
        );
    }

    #[test]
    fn leibniz(a in poly(), b in poly(), i in 0usize..5) {
        let lhs = (&a * &b).partial_derivative(i);
        let rhs = &(&a.partial_derivative(i) * &b) + &(&a * &b.partial_derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_on_homogeneous(d in 0i32..=10, seed in prop::collection::vec(rational(), 1..6)) {
        let mons = monomials_of_degree(d);
        let terms: Vec<_> = seed.iter().enumerate().map(|(k, c)| (mons[(k * 7919) % mons.len()], c.clone())).collect();
        let p = Polynomial::from_terms(e510wb_core::ratpoly::Mode::Ordinary, terms).unwrap();
        prop_assert!(p.terms().iter().all(|(e, _)| exp_degree(e) == d));
        prop_assert_eq!(p.euler_apply(), p.scale(&Rational::from_int(d as i64)));
    }

    #[test]
    fn rational_field_axioms(a in big_rational(), b in big_rational(), c in big_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&(&a / &a) - &Rational::one()).is_zero());
        }
        // canonical form agrees with the big-rational reference
        prop_assert_eq!((&a + &b).to_big(), a.to_big() + b.to_big());
        prop_assert_eq!((&a * &b).to_big(), a.to_big() * b.to_big());
    }
}
