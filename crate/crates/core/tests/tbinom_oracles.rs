//! t-binomial checks against oracles built without the library's own
//! recurrences: subset sums for `[n r]_t`, and `Σ_k c_k (sβ)^m/m!` for the
//! h^m coefficient of `Σ_k c_k t^s` under `t = e^{βh}`.

use macexp::operators::{scalar_part, subsets};
use macexp::rings::{factorial, BetaPoly, Rational, UniPoly};
use macexp::tbinom::{
    h4_scaling_verdict, scaled_taylor_coeff_closed, t_binomial, t_binomial_jet, taylor_coeff_closed,
};
use proptest::prelude::*;

/// `[n r]_t = Σ_{|S|=r} t^{ΣS - r(r+1)/2}` over subsets of `{1..n}`.
fn subset_oracle(n: usize, r: usize) -> UniPoly {
    let mut counts = vec![0i64; r * (n - r) + 1];
    for s in subsets(n, r) {
        let sum: usize = s.iter().map(|i| i + 1).sum();
        counts[sum - r * (r + 1) / 2] += 1;
    }
    UniPoly::from_ints(&counts)
}

/// h^m coefficient of `t^shift · p(t)` at `t = e^{βh}`.
fn taylor_oracle(p: &UniPoly, shift: usize, m: u32) -> BetaPoly {
    let inv = factorial(m).recip().unwrap();
    let total = p.coeffs().iter().enumerate().fold(Rational::zero(), |acc, (k, c)| {
        &acc + &(c * &Rational::from_int((k + shift) as i64).pow(m))
    });
    BetaPoly::monomial(m, &total * &inv)
}

#[test]
fn t_binomial_is_the_subset_sum() {
    for n in 0..=10 {
        for r in 0..=n {
            assert_eq!(t_binomial(n as i64, r as i64).unwrap(), subset_oracle(n, r), "n={n} r={r}");
        }
    }
}

#[test]
fn scalar_part_is_the_t_binomial() {
    for n in 2..=6 {
        for r in 1..=n {
            assert_eq!(scalar_part(n, r).unwrap(), subset_oracle(n, r), "n={n} r={r}");
        }
    }
    assert_eq!(scalar_part(3, 2).unwrap().render("t"), "1 + t + t^2");
}

#[test]
fn closed_taylor_coefficients_through_h3() {
    for n in 0..=10usize {
        for r in 0..=n {
            let p = subset_oracle(n, r);
            let jet = t_binomial_jet(n as i64, r as i64, 4).unwrap();
            for k in 0..=4 {
                assert_eq!(jet.coeff(k as usize), taylor_oracle(&p, 0, k), "jet n={n} r={r} k={k}");
            }
            for k in 0..=3 {
                assert_eq!(taylor_coeff_closed(n as i64, r as i64, k).unwrap(), taylor_oracle(&p, 0, k));
            }
        }
    }
}

#[test]
fn scaled_closed_coefficients_use_the_half_power() {
    for n in 0..=10usize {
        for r in 0..=n {
            let p = subset_oracle(n, r);
            for k in 0..=4 {
                let closed = scaled_taylor_coeff_closed(n as i64, r as i64, k).unwrap();
                assert_eq!(closed, taylor_oracle(&p, r * (r.max(1) - 1) / 2, k), "n={n} r={r} k={k}");
            }
        }
    }
    let v = h4_scaling_verdict(10).unwrap();
    assert!(v.half_matches());
    assert!(!v.full_matches());
}

/// The stated h⁴ coefficient of `[n r]_t` agrees with the oracle for
/// `r ≤ 1` and `r = n` only; with the bracket's constant term replaced by
/// `-r²(15r⁴-30r²+7)` it agrees everywhere.
#[test]
fn h4_closed_form_constant_term() {
    for n in 0..=10i64 {
        for r in 0..=n {
            let oracle = taylor_oracle(&subset_oracle(n as usize, r as usize), 0, 4);
            let closed = taylor_coeff_closed(n, r, 4).unwrap();
            assert_eq!(closed == oracle, r <= 1 || r == n, "n={n} r={r}");
            let delta = -15 * r.pow(6) + 45 * r.pow(4) - 37 * r * r + 7;
            let binom = t_binomial(n, r).unwrap().eval(&Rational::one());
            let fix = &Rational::new((n - r) * r * delta, 5760) * &binom;
            assert_eq!(closed.coeff(4) + fix, oracle.coeff(4), "amended n={n} r={r}");
        }
    }
}

proptest! {
    #[test]
    fn symmetry_and_evaluation(n in 0usize..12, r in 0usize..12, t in -4i64..5) {
        prop_assume!(r <= n);
        let t = Rational::from_int(t);
        let a = t_binomial(n as i64, r as i64).unwrap();
        prop_assert_eq!(&a, &t_binomial(n as i64, (n - r) as i64).unwrap());
        let direct = subsets(n, r).iter().fold(Rational::zero(), |acc, s| {
            let e: usize = s.iter().map(|i| i + 1).sum::<usize>() - r * (r + 1) / 2;
            &acc + &t.pow(e as u32)
        });
        prop_assert_eq!(a.eval(&t), direct);
    }
}
