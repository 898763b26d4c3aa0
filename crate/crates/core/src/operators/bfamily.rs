//! The building blocks `B_{k,l}`, `L_k` and the monomial-symmetric Euler
//! combinations `m_{1,1}`, `m_{2,1}`, `m_{1,1,1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly};
use crate::rings::{Coeff, Rational};

use super::basic::{subsets, vandermonde};
use super::LinearOperator;

/// Which member of the family to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BSpec {
    /// `Σ_{|S|=k} Σ_{s∈S} x_s^{k-1} (x_s∂_s)^l / Π_{t∈S, t≠s} (x_s - x_t)`.
    B(u32, u32),
    /// `Σ_i (x_i∂_i)^k`.
    L(u32),
    M11,
    M21,
    M111,
}

impl fmt::Display for BSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BSpec::B(k, l) => write!(f, "B[{k},{l}]"),
            BSpec::L(k) => write!(f, "L{k}"),
            BSpec::M11 => f.write_str("m11"),
            BSpec::M21 => f.write_str("m21"),
            BSpec::M111 => f.write_str("m111"),
        }
    }
}

/// Applies a family member to a symmetric polynomial.
pub fn b_family_apply<C: Coeff>(spec: BSpec, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    f.check_symmetric()?;
    let n = f.n();
    match spec {
        BSpec::B(k, l) => b_apply(k as usize, l, f),
        BSpec::L(k) => Ok(euler_scale(f, |e| e.iter().map(|&x| x.pow(k)).sum())),
        BSpec::M11 => Ok(euler_scale(f, e2)),
        BSpec::M21 => Ok(euler_scale(f, |e| {
            let mut s = 0;
            for i in 0..e.len() {
                for j in 0..e.len() {
                    if i != j {
                        s += e[i] * e[i] * e[j];
                    }
                }
            }
            s
        })),
        BSpec::M111 => Ok(euler_scale(f, |e| {
            let mut s = 0;
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        s += e[i] * e[j] * e[k];
                    }
                }
            }
            s
        })),
    }
}

pub fn b_family_op<C: Coeff>(n: usize, spec: BSpec) -> LinearOperator<C> {
    LinearOperator::new(n, spec.to_string(), move |f| b_family_apply(spec, f))
}

fn e2(e: &[i64]) -> i64 {
    let s: i64 = e.iter().sum();
    let sq: i64 = e.iter().map(|x| x * x).sum();
    (s * s - sq) / 2
}

/// Scales each monomial by an integer function of its exponents.
fn euler_scale<C: Coeff>(f: &MultiPoly<C>, weight: impl Fn(&[i64]) -> i64) -> MultiPoly<C> {
    let n = f.n();
    f.map_terms(|m: Monomial, c| {
        let e: Vec<i64> = (0..n).map(|i| m.exponent(i) as i64).collect();
        let w = weight(&e);
        (w != 0).then(|| c.scale(&Rational::from_int(w)))
    })
}

/// `x_s^{k-1} (x_s∂_s)^l g`.
fn unit<C: Coeff>(s: usize, k: usize, l: u32, g: &MultiPoly<C>) -> MultiPoly<C> {
    let mut h = g.clone();
    for _ in 0..l {
        h = h.euler(s);
    }
    h.shift(Monomial::ONE.with_exponent(s, k as u32 - 1))
}

fn b_apply<C: Coeff>(k: usize, l: u32, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    let n = f.n();
    if k == 0 {
        return Err(Error::Domain("B_{k,l} needs k >= 1".into()));
    }
    let mut parts = Vec::new();
    for set in subsets(n, k) {
        if k == 1 {
            parts.push(unit(set[0], 1, l, f));
            continue;
        }
        if k == 2 {
            // f symmetric, so the second unit is the swap of the first.
            let g = unit(set[0], 2, l, f);
            parts.push(g.divided_difference(set[0], set[1]));
            continue;
        }
        // Over the subset Vandermonde V_S: V_S / Π_{t≠s}(x_s - x_t) equals
        // (-1)^{pos(s)} V_{S∖s}, where pos(s) is the rank of s in S.
        let mut numer = MultiPoly::zero(n);
        for (pos, &s) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&t| t != s).collect();
            let term = vandermonde::<C>(n, &rest).times(&unit(s, k, l, f));
            numer = if pos % 2 == 0 { numer.plus(&term) } else { numer.minus(&term) };
        }
        let q = numer
            .exact_div(&vandermonde(n, &set))
            .map_err(|e| Error::Contract(format!("B[{k},{l}] on subset {set:?}: {e}")))?;
        parts.push(q);
    }
    Ok(MultiPoly::sum(n, parts.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{monomial_symmetric, Partition};

    type P = MultiPoly<Rational>;

    fn m(parts: &[u32], n: usize) -> P {
        monomial_symmetric(&Partition::new(parts.to_vec()), n).unwrap()
    }

    #[test]
    fn family_examples() {
        let p1 = m(&[1], 2);
        assert_eq!(b_family_apply(BSpec::B(2, 1), &p1).unwrap(), p1);
        assert!(b_family_apply(BSpec::B(3, 1), &m(&[2, 1], 2)).unwrap().is_zero());
        let x1x2 = m(&[1, 1], 2);
        assert_eq!(b_family_apply(BSpec::M11, &x1x2).unwrap(), x1x2);
        assert_eq!(b_family_apply(BSpec::L(2), &m(&[2], 2)).unwrap(), m(&[2], 2).scale(&Rational::from_int(4)));
        assert!(matches!(b_family_apply(BSpec::L(1), &P::var(2, 0)), Err(Error::NonSymmetric { .. })));
    }

    #[test]
    fn generic_subset_path_matches_pair_shortcut() {
        // B(3,l) through the Vandermonde route against a direct rational
        // evaluation at a numeric point.
        let n = 4;
        let f = m(&[2, 1], n).plus(&m(&[1, 1, 1], n));
        for l in 0..3 {
            let b = b_family_apply(BSpec::B(3, l), &f).unwrap();
            let point: Vec<Rational> = [2, 3, 5, 7].iter().map(|&v| Rational::from_int(v)).collect();
            let eval = |p: &P| -> Rational {
                p.terms().iter().fold(Rational::zero(), |acc, (mono, c)| {
                    let v = (0..n).fold(c.clone(), |a, i| &a * &point[i].pow(mono.exponent(i)));
                    &acc + &v
                })
            };
            let mut expected = Rational::zero();
            for set in subsets(n, 3) {
                for &s in &set {
                    let mut g = f.clone();
                    for _ in 0..l {
                        g = g.euler(s);
                    }
                    let mut term = &point[s].pow(2) * &eval(&g);
                    for &t in set.iter().filter(|&&t| t != s) {
                        term = &term / &(&point[s] - &point[t]);
                    }
                    expected = &expected + &term;
                }
            }
            assert_eq!(eval(&b), expected, "l={l}");
        }
    }
}
