use super::Rational;

/// Binomial coefficient with the zero convention: 0 whenever `r < 0`,
/// `r > n` or `n < 0`.
pub fn binom(n: i64, r: i64) -> Rational {
    if n < 0 || r < 0 || r > n {
        return Rational::zero();
    }
    binom_ext(n, r)
}

/// Polynomial extension `a(a-1)...(a-k+1)/k!` for `k >= 0`, and 0 for `k < 0`.
///
/// Agrees with [`binom`] for `a >= 0`; for negative `a` it is the value the
/// closed-form coefficients need when treated as polynomials in n.
pub fn binom_ext(a: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = if a >= 0 && k > a / 2 && k <= a { a - k } else { k };
    let mut acc = Rational::one();
    for i in 0..k {
        acc = &(&acc * &Rational::from_int(a - i)) / &Rational::from_int(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| &acc * &Rational::from_int(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        assert_eq!(binom(4, 2), Rational::from_int(6));
        assert_eq!(binom(3, -1), Rational::zero());
        assert_eq!(binom(2, 3), Rational::zero());
        assert_eq!(binom(-1, 0), Rational::zero());
        assert_eq!(binom_ext(-1, 0), Rational::one());
        assert_eq!(binom_ext(-1, 2), Rational::one());
        assert_eq!(binom_ext(-2, 1), Rational::from_int(-2));
        assert_eq!(binom_ext(3, 5), Rational::zero());
        assert_eq!(binom(40, 20), Rational::from_int(137846528820));
        assert_eq!(factorial(5), Rational::from_int(120));
    }

    #[test]
    fn pascal_rule() {
        for n in 0..=20 {
            for r in -2..=n + 2 {
                assert_eq!(binom(n + 1, r), &binom(n, r) + &binom(n, r - 1), "n={n} r={r}");
            }
        }
    }
}
