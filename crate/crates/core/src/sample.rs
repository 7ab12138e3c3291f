//! Seeded random generators for property sweeps.
//!
//! Every randomized check in the crate draws from `ChaCha8Rng` seeded by a
//! `u64`, so a seed in a report reproduces the exact inputs.

use crate::geom::{GeomField, Kind, Parity};
use crate::ratpoly::{Mode, Polynomial, Rational, NVARS};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SweepRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-5i64..=5);
    let d = rng.gen_range(1i64..=3);
    let r = Rational::new(n, d);
    if r.is_zero() {
        Rational::one()
    } else {
        r
    }
}

/// Sparse polynomial with up to `max_terms` terms of degree `<= max_deg`.
pub fn poly<R: Rng>(rng: &mut R, max_deg: i32, max_terms: usize) -> Polynomial {
    let n = rng.gen_range(1..=max_terms.max(1));
    let terms = (0..n).map(|_| {
        let mut e = [0i32; NVARS];
        let d = rng.gen_range(0..=max_deg);
        for _ in 0..d {
            e[rng.gen_range(0..NVARS)] += 1;
        }
        (e, small_rational(rng))
    });
    Polynomial::from_terms(Mode::Ordinary, terms.collect::<Vec<_>>()).unwrap()
}

/// Homogeneous polynomial of degree `d`.
pub fn homogeneous_poly<R: Rng>(rng: &mut R, d: i32, max_terms: usize) -> Polynomial {
    let n = rng.gen_range(1..=max_terms.max(1));
    let terms = (0..n).map(|_| {
        let mut e = [0i32; NVARS];
        for _ in 0..d {
            e[rng.gen_range(0..NVARS)] += 1;
        }
        (e, small_rational(rng))
    });
    Polynomial::from_terms(Mode::Ordinary, terms.collect::<Vec<_>>()).unwrap()
}

pub fn mask_of_degree<R: Rng>(rng: &mut R, degree: u8) -> u8 {
    let mut idx: Vec<usize> = (0..NVARS).collect();
    for i in 0..degree as usize {
        let j = rng.gen_range(i..NVARS);
        idx.swap(i, j);
    }
    idx[..degree as usize].iter().fold(0u8, |m, &i| m | (1 << i))
}

pub fn field<R: Rng>(rng: &mut R, kind: Kind, degree: u8, parity: Parity, max_deg: i32, max_terms: usize) -> GeomField {
    let n = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<_> = (0..n).map(|_| (mask_of_degree(rng, degree), poly(rng, max_deg, 2))).collect();
    GeomField::from_terms(kind, degree, parity, terms)
}
