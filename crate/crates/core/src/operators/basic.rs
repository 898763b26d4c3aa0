use crate::multipoly::{Monomial, MultiPoly};
use crate::rings::Coeff;

use super::LinearOperator;

/// `T_{q,x_i} f`: scales every monomial by `qval^(exponent of x_i)`.
/// Indices are 0-based.
pub fn qshift_apply<C: Coeff>(i: usize, qval: &C, f: &MultiPoly<C>) -> MultiPoly<C> {
    let max = f.terms().iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0);
    let powers = powers_upto(qval, max);
    f.map_terms(|m, c| Some(c.times(&powers[m.exponent(i) as usize])))
}

/// `qval^0 ..= qval^max`.
pub(crate) fn powers_upto<C: Coeff>(qval: &C, max: u32) -> Vec<C> {
    let mut powers = Vec::with_capacity(max as usize + 1);
    powers.push(C::one());
    for k in 1..=max as usize {
        powers.push(powers[k - 1].times(qval));
    }
    powers
}

pub fn qshift_op<C: Coeff>(n: usize, i: usize, qval: C) -> LinearOperator<C> {
    LinearOperator::new(n, format!("T[x{}]", i + 1), move |f| Ok(qshift_apply(i, &qval, f)))
}

/// The Euler operator `x_i ∂_i` (0-based).
pub fn euler_op<C: Coeff>(n: usize, i: usize) -> LinearOperator<C> {
    LinearOperator::new(n, format!("E{}", i + 1), move |f| Ok(f.euler(i)))
}

/// The exchange operator `K_ij` (0-based).
pub fn swap_op<C: Coeff>(n: usize, i: usize, j: usize) -> LinearOperator<C> {
    LinearOperator::new(n, format!("K{}{}", i + 1, j + 1), move |f| Ok(f.swap(i, j)))
}

/// Operator scaling each monomial by a function of its exponent vector.
pub fn diagonal_op<C: Coeff>(
    n: usize,
    name: impl Into<String>,
    weight: impl Fn(Monomial) -> C + Send + Sync + 'static,
) -> LinearOperator<C> {
    LinearOperator::new(n, name, move |f: &MultiPoly<C>| Ok(f.map_terms(|m, c: &C| Some(c.times(&weight(m))))))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `Π_{a<b} (x_{idx[a]} - x_{idx[b]})` for ascending `idx`.
pub fn vandermonde<C: Coeff>(n: usize, idx: &[usize]) -> MultiPoly<C> {
    let mut v = MultiPoly::one(n);
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            v = v.times(&MultiPoly::var_diff(n, idx[a], idx[b]));
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{jet_exp, HJet, Rational};

    #[test]
    fn shift_examples() {
        let n = 2;
        let f = MultiPoly::<Rational>::from_exponents(n, [(vec![2, 1], Rational::one())]);
        assert_eq!(qshift_apply(0, &Rational::from_int(2), &f), f.scale(&Rational::from_int(4)));

        let q = jet_exp(&HJet::h(2)).unwrap();
        let x2 = MultiPoly::<HJet>::from_exponents(n, [(vec![2, 0], HJet::one())]);
        assert_eq!(qshift_apply(0, &q, &x2).to_string(), "(1 + 2*h + 2*h^2)*x1^2");

        let x1x2 = MultiPoly::<Rational>::from_exponents(n, [(vec![1, 1], Rational::one())]);
        let qv = Rational::new(3, 5);
        let both = qshift_apply(0, &qv, &qshift_apply(1, &qv, &x1x2));
        assert_eq!(both, x1x2.scale(&qv.pow(2)));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        let v: MultiPoly<Rational> = vandermonde(4, &[0, 1, 2, 3]);
        assert_eq!(v.len(), 24);
    }
}
