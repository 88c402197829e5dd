//! Seeded random generators shared by the property suites. Counted
//! properties ("N random instances") use a fixed ChaCha stream so failures
//! are reproducible from the seed alone.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use trigpoly::{param_point, BiPoly, GaussRational, Modulus, NaiveTrigPoly, TrigPoly, UniPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=9);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Small Gaussian rational; imaginary parts appear in about a third of draws.
pub fn rand_gauss(rng: &mut ChaCha8Rng) -> GaussRational {
    let re = rand_rational(rng);
    if rng.gen_bool(0.33) {
        GaussRational::new(re, rand_rational(rng))
    } else {
        GaussRational::real(re)
    }
}

pub fn rand_unipoly(rng: &mut ChaCha8Rng, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    UniPoly::from_coeffs((0..=deg).map(|_| rand_gauss(rng)).collect())
}

/// Sparse random bivariate polynomial of total degree at most `max_deg`.
pub fn rand_bipoly(rng: &mut ChaCha8Rng, max_deg: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    let terms = rng.gen_range(1..=8);
    for _ in 0..terms {
        let i = rng.gen_range(0..=max_deg);
        let j = rng.gen_range(0..=max_deg - i);
        out.add_term(rand_gauss(rng), i, j);
    }
    out
}

pub fn rand_trig(rng: &mut ChaCha8Rng, max_freq: usize) -> TrigPoly {
    let mut out = TrigPoly::zero();
    for n in 0..=max_freq {
        if rng.gen_bool(0.5) {
            out = &out + &TrigPoly::cos(n).scale(&rand_gauss(rng));
        }
        if n >= 1 && rng.gen_bool(0.5) {
            out = &out + &TrigPoly::sin(n).scale(&rand_gauss(rng));
        }
    }
    out
}

pub fn rand_naive(rng: &mut ChaCha8Rng, max_deg: usize) -> NaiveTrigPoly {
    NaiveTrigPoly::new(rand_unipoly(rng, max_deg), rand_unipoly(rng, max_deg))
}

/// The first `count` parameter values `0, 1/2, 1, 3/2, ...` — all are
/// admissible on the circle.
pub fn half_integer_params(count: usize) -> Vec<GaussRational> {
    (0..count as i64).map(|k| GaussRational::ratio(k, 2)).collect()
}

/// `count` distinct exact points of the curve, from the half-integer
/// parameter sweep with inadmissible values skipped.
pub fn curve_points(modulus: Modulus, count: usize) -> Vec<(GaussRational, GaussRational)> {
    (0i64..)
        .map(|k| GaussRational::ratio(k, 2))
        .filter_map(|s| param_point(&s, modulus).ok())
        .take(count)
        .collect()
}
