//! Seeded random inputs: rational `(q, t)` specializations and test polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multipoly::{Monomial, MultiPoly};
use crate::rings::{Coeff, Rational};

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1..=97), rng.gen_range(1..=97))
}

/// `count` pairs `(q, t)` of positive rationals with numerator and
/// denominator in `1..=97`, avoiding `q = 1` and `t = 1`.
pub fn qt_samples(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = small_rational(&mut rng);
        let t = small_rational(&mut rng);
        if !q.is_one() && !t.is_one() {
            out.push((q, t));
        }
    }
    out
}

/// A polynomial in `n` variables with up to `terms` monomials of degree at
/// most `degree` and small integer coefficients. Not symmetric in general.
pub fn random_poly<C: Coeff>(n: usize, degree: u32, terms: usize, seed: u64) -> MultiPoly<C> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut budget = rng.gen_range(0..=degree);
        while budget > 0 {
            exps[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        let c = rng.gen_range(-9i64..=9);
        out.push((Monomial::from_exponents(&exps), C::from_int(c)));
    }
    MultiPoly::from_terms(n, out)
}
