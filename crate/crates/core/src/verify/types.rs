//! The six-type decomposition of
//! `Σ_{|I|=r} Σ_T Π_{(a,p)∈T} x_a/(x_a - x_p) · Σ_{i∈I} x_i∂_i`,
//! where `T` runs over sets of three distinct pairs `(a, p)` with `a ∈ I`,
//! `p ∉ I`. A term's type is fixed by how many distinct `a` and `p` it
//! uses:
//!
//! | type | `a`'s | `p`'s | shape |
//! |------|-------|-------|-------|
//! | 1 | 1 | 3 | `x_i³ / ((x_i-x_p)(x_i-x_q)(x_i-x_s))` |
//! | 2 | 3 | 1 | `x_i x_j x_k / ((x_i-x_p)(x_j-x_p)(x_k-x_p))` |
//! | 3 | 2 | 3 | `x_i² x_j / ((x_i-x_p)(x_i-x_q)(x_j-x_s))` |
//! | 4 | 3 | 2 | `x_i x_j x_k / ((x_i-x_p)(x_j-x_p)(x_k-x_q))` |
//! | 5 | 3 | 3 | `x_i x_j x_k / ((x_i-x_p)(x_j-x_q)(x_k-x_s))` |
//! | 6 | 2 | 2 | `x_i² x_j / ((x_i-x_p)(x_i-x_q)(x_j-x_p))` |

use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly};
use crate::operators::{subsets, vandermonde, LinearOperator};
use crate::rings::{binom, BetaPoly, Coeff, Rational};

pub type Edge = (usize, usize);

/// Number of distinct `a`'s and `p`'s of each type.
pub fn type_shape(t: u8) -> Result<(usize, usize)> {
    Ok(match t {
        1 => (1, 3),
        2 => (3, 1),
        3 => (2, 3),
        4 => (3, 2),
        5 => (3, 3),
        6 => (2, 2),
        _ => return Err(Error::Domain(format!("type must be 1..=6, got {t}"))),
    })
}

/// All three-edge subsets of `A × P` touching every element of `A` and `P`.
fn covering_triples(a_set: &[usize], p_set: &[usize]) -> Vec<[Edge; 3]> {
    let edges: Vec<Edge> = a_set.iter().flat_map(|&a| p_set.iter().map(move |&p| (a, p))).collect();
    let mut out = Vec::new();
    for pick in subsets(edges.len(), 3) {
        let tri = [edges[pick[0]], edges[pick[1]], edges[pick[2]]];
        let covers_a = a_set.iter().all(|a| tri.iter().any(|e| e.0 == *a));
        let covers_p = p_set.iter().all(|p| tri.iter().any(|e| e.1 == *p));
        if covers_a && covers_p {
            out.push(tri);
        }
    }
    out
}

/// All terms of type `t` whose `a`'s lie in `set` and `p`'s outside it.
fn terms_in_subset(n: usize, set: &[usize], t: u8) -> Result<Vec<[Edge; 3]>> {
    let (u, v) = type_shape(t)?;
    let comp: Vec<usize> = (0..n).filter(|j| !set.contains(j)).collect();
    let mut out = Vec::new();
    for ai in subsets(set.len(), u) {
        let a_set: Vec<usize> = ai.iter().map(|&k| set[k]).collect();
        for pi in subsets(comp.len(), v) {
            let p_set: Vec<usize> = pi.iter().map(|&k| comp[k]).collect();
            out.extend(covering_triples(&a_set, &p_set));
        }
    }
    Ok(out)
}

/// Number of type-`t` terms summed over all `r`-subsets, by enumeration.
pub fn type_term_count(n: usize, r: usize, t: u8) -> Result<u64> {
    let mut total = 0u64;
    for set in subsets(n, r) {
        total += terms_in_subset(n, &set, t)?.len() as u64;
    }
    Ok(total)
}

/// The stated term counts.
pub fn type_term_count_formula(n: usize, r: usize, t: u8) -> Result<Rational> {
    let (n, r) = (n as i64, r as i64);
    let c = binom(n, r);
    let m = n - r;
    let v = match t {
        1 => &Rational::new(r * m * (m - 1) * (m - 2), 6) * &c,
        2 => &Rational::new(r * (r - 1) * (r - 2) * m, 6) * &c,
        3 => &Rational::new(r * (r - 1) * m * (m - 1) * (m - 2), 2) * &c,
        4 => &Rational::new(m * (m - 1) * r * (r - 1) * (r - 2), 2) * &c,
        5 => &Rational::new(r * (r - 1) * (r - 2) * m * (m - 1) * (m - 2), 6) * &c,
        6 => &Rational::from_int(r * (r - 1) * m * (m - 1)) * &c,
        _ => return Err(Error::Domain(format!("type must be 1..=6, got {t}"))),
    };
    Ok(v)
}

/// `V_U · Π_{(a,p)∈edges} 1/(x_a - x_p)` for `U ⊇` the edge endpoints,
/// where `V_U = Π_{a<b in U} (x_a - x_b)`.
fn over_vandermonde<C: Coeff>(n: usize, u: &[usize], edges: &[Edge]) -> MultiPoly<C> {
    let mut p = MultiPoly::one(n);
    for (k, &a) in u.iter().enumerate() {
        for &b in &u[k + 1..] {
            if !edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
                p = p.times(&MultiPoly::var_diff(n, a, b));
            }
        }
    }
    let flips = edges.iter().filter(|(a, p)| a > p).count();
    if flips % 2 == 1 {
        p.negate()
    } else {
        p
    }
}

/// `V_U · Π_{(a,p)∈T} x_a/(x_a - x_p)`.
fn term_numerator<C: Coeff>(n: usize, u: &[usize], tri: &[Edge; 3]) -> MultiPoly<C> {
    let mono = tri.iter().fold(Monomial::ONE, |m, e| m.mul(Monomial::var(e.0)));
    over_vandermonde::<C>(n, u, tri).shift(mono)
}

fn euler_sum<C: Coeff>(f: &MultiPoly<C>, idx: impl IntoIterator<Item = usize>) -> MultiPoly<C> {
    let parts: Vec<MultiPoly<C>> = idx.into_iter().map(|i| f.euler(i)).collect();
    MultiPoly::sum(f.n(), parts.iter())
}

fn divide<C: Coeff>(numer: &MultiPoly<C>, v: &MultiPoly<C>, what: &str) -> Result<MultiPoly<C>> {
    numer.exact_div(v).map_err(|e| Error::Contract(format!("{what}: {e}")))
}

/// The type-`t` sum by direct enumeration of subsets `I` and terms `T`,
/// over the full Vandermonde. Practical only for small `n`.
pub fn type_sum_literal<C: Coeff>(n: usize, r: usize, t: u8, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    f.check_symmetric()?;
    let all: Vec<usize> = (0..n).collect();
    let mut numer = MultiPoly::zero(n);
    for set in subsets(n, r) {
        let comp: Vec<usize> = (0..n).filter(|j| !set.contains(j)).collect();
        // Σ_T R_T = S / Π_{i∈I, j∉I} (x_i - x_j); carried over V.
        let mut s = MultiPoly::zero(n);
        for tri in terms_in_subset(n, &set, t)? {
            let mut rest = MultiPoly::one(n);
            for &i in &set {
                for &j in &comp {
                    if !tri.contains(&(i, j)) {
                        rest = rest.times(&MultiPoly::var_diff(n, i, j));
                    }
                }
            }
            let mono = tri.iter().fold(Monomial::ONE, |m, e| m.mul(Monomial::var(e.0)));
            s = s.plus(&rest.shift(mono));
        }
        if s.is_zero() {
            continue;
        }
        let inversions = set.iter().flat_map(|&i| comp.iter().map(move |&j| (i, j))).filter(|(i, j)| i > j).count();
        let mut k = vandermonde::<C>(n, &set).times(&vandermonde(n, &comp)).times(&s);
        if inversions % 2 == 1 {
            k = k.negate();
        }
        numer = numer.plus(&k.times(&euler_sum(f, set.iter().copied())));
    }
    divide(&numer, &vandermonde(n, &all), &format!("type-{t} literal sum"))
}

/// The type-`t` sum, reorganised by the support `U = A ∪ P` of each term.
///
/// A term with support `U` occurs for every `I ⊇ A` avoiding `P`, so
/// `Σ_{i∈I} x_i∂_i` summed over those `I` is
/// `c₁ Σ_{m∈A} x_m∂_m + c₂ (L₁ - Σ_{m∈U} x_m∂_m)` with
/// `c₁ = C(n-|U|, r-|A|)` and `c₂ = C(n-|U|-1, r-|A|-1)`. The terms with a
/// given support sum to a function symmetric in the variables of `U`, so
/// each support is divided out over its own Vandermonde.
#[derive(Clone, Debug)]
pub struct TypeSum<C> {
    n: usize,
    supports: Vec<SupportPart<C>>,
}

#[derive(Clone, Debug)]
struct SupportPart<C> {
    vandermonde: MultiPoly<C>,
    /// `(m, numerator multiplying x_m∂_m)`.
    euler: Vec<(usize, MultiPoly<C>)>,
    /// Numerator multiplying `L₁`.
    total: MultiPoly<C>,
}

impl<C: Coeff> TypeSum<C> {
    pub fn new(n: usize, r: usize, t: u8) -> Result<Self> {
        let (u, v) = type_shape(t)?;
        let size = u + v;
        let (ni, ri) = (n as i64, r as i64);
        let c1 = C::from_rational(&binom(ni - size as i64, ri - u as i64));
        let c2 = C::from_rational(&binom(ni - size as i64 - 1, ri - u as i64 - 1));
        let mut supports = Vec::new();
        if c1.is_zero() && c2.is_zero() {
            return Ok(TypeSum { n, supports });
        }
        for set in subsets(n, size) {
            let mut euler: Vec<(usize, MultiPoly<C>)> = set.iter().map(|&m| (m, MultiPoly::zero(n))).collect();
            let mut total = MultiPoly::zero(n);
            for ai in subsets(size, u) {
                let a_set: Vec<usize> = ai.iter().map(|&k| set[k]).collect();
                let p_set: Vec<usize> = set.iter().copied().filter(|x| !a_set.contains(x)).collect();
                for tri in covering_triples(&a_set, &p_set) {
                    let num = term_numerator::<C>(n, &set, &tri);
                    for (m, acc) in euler.iter_mut() {
                        let w = if a_set.contains(m) { c1.minus(&c2) } else { c2.negate() };
                        if !w.is_zero() {
                            *acc = acc.plus(&num.scale(&w));
                        }
                    }
                    total = total.plus(&num);
                }
            }
            supports.push(SupportPart { vandermonde: vandermonde(n, &set), euler, total: total.scale(&c2) });
        }
        Ok(TypeSum { n, supports })
    }

    pub fn apply(&self, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        f.check_symmetric()?;
        let l1 = euler_sum(f, 0..self.n);
        let mut out = MultiPoly::zero(self.n);
        for part in &self.supports {
            let mut numer = part.total.times(&l1);
            for (m, p) in &part.euler {
                if !p.is_zero() {
                    numer = numer.plus(&p.times(&f.euler(*m)));
                }
            }
            out = out.plus(&divide(&numer, &part.vandermonde, "type sum over a support")?);
        }
        Ok(out)
    }
}

/// The raw type-`t` sum as an operator. Empty index patterns give zero.
pub fn type_sum_raw(n: usize, r: usize, t: u8) -> Result<LinearOperator<BetaPoly>> {
    let sum = TypeSum::new(n, r, t)?;
    Ok(LinearOperator::new(n, format!("type{t}_raw[{n},{r}]"), move |f| sum.apply(f)))
}

/// `Σ_{|Q|=4} Σ_{p∈Q} Π_{a∈Q∖p} x_a/(x_a - x_p) · Σ_{a∈Q∖p} x_a∂_a`.
pub fn type_two_unit_apply<C: Coeff>(f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    f.check_symmetric()?;
    let n = f.n();
    let mut out = MultiPoly::zero(n);
    for q in subsets(n, 4) {
        let mut numer = MultiPoly::zero(n);
        for &p in &q {
            let a_set: Vec<usize> = q.iter().copied().filter(|&a| a != p).collect();
            let edges: Vec<Edge> = a_set.iter().map(|&a| (a, p)).collect();
            let mono = a_set.iter().fold(Monomial::ONE, |m, &a| m.mul(Monomial::var(a)));
            let k = over_vandermonde::<C>(n, &q, &edges).shift(mono);
            numer = numer.plus(&k.times(&euler_sum(f, a_set.iter().copied())));
        }
        out = out.plus(&divide(&numer, &vandermonde(n, &q), "type-2 unit")?);
    }
    Ok(out)
}

/// `Σ_{|Q|=4} Σ_{J⊂Q, |J|=2} [4 Π_J x² - Π_J x · Σ_J x · Σ_{Q∖J} x] · Σ_J x∂
/// / Π_{i∈J, p∈Q∖J} (x_i - x_p)`.
pub fn type_six_unit_apply<C: Coeff>(f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    f.check_symmetric()?;
    let n = f.n();
    let x = |i: usize| MultiPoly::<C>::var(n, i);
    let mut out = MultiPoly::zero(n);
    for q in subsets(n, 4) {
        let mut numer = MultiPoly::zero(n);
        for ji in subsets(4, 2) {
            let j: Vec<usize> = ji.iter().map(|&k| q[k]).collect();
            let rest: Vec<usize> = q.iter().copied().filter(|a| !j.contains(a)).collect();
            let edges: Vec<Edge> = j.iter().flat_map(|&i| rest.iter().map(move |&p| (i, p))).collect();
            let prod = x(j[0]).times(&x(j[1]));
            let first = prod.times(&prod).scale(&C::from_int(4));
            let second = prod.times(&x(j[0]).plus(&x(j[1]))).times(&x(rest[0]).plus(&x(rest[1])));
            let k = over_vandermonde::<C>(n, &q, &edges).times(&first.minus(&second));
            numer = numer.plus(&k.times(&euler_sum(f, j.iter().copied())));
        }
        out = out.plus(&divide(&numer, &vandermonde(n, &q), "type-6 unit")?);
    }
    Ok(out)
}

/// Sum of every type-`t` term supported on one fixed set `U` (all ways of
/// splitting `U` into `a`'s and `p`'s), as a polynomial in `|U|`
/// variables. Expected to be a constant.
pub fn type_support_constant<C: Coeff>(t: u8) -> Result<MultiPoly<C>> {
    let (u, v) = type_shape(t)?;
    let size = u + v;
    let set: Vec<usize> = (0..size).collect();
    let mut numer = MultiPoly::zero(size);
    for ai in subsets(size, u) {
        let p_set: Vec<usize> = set.iter().copied().filter(|x| !ai.contains(x)).collect();
        for tri in covering_triples(&ai, &p_set) {
            numer = numer.plus(&term_numerator(size, &set, &tri));
        }
    }
    divide(&numer, &vandermonde(size, &set), &format!("type-{t} support sum"))
}

/// Number of type-`t` terms on one support, and the stated number of them
/// that sum to 1 (4 for types 1 and 2, 6 for types 3 and 4, 8 for type 5;
/// for type 6, 24 of them sum to 5).
pub fn type_support_pieces(t: u8) -> Result<(u64, Rational)> {
    let (u, v) = type_shape(t)?;
    let size = u + v;
    let set: Vec<usize> = (0..size).collect();
    let mut count = 0u64;
    for ai in subsets(size, u) {
        let p_set: Vec<usize> = set.iter().copied().filter(|x| !ai.contains(x)).collect();
        count += covering_triples(&ai, &p_set).len() as u64;
    }
    let per_unit = match t {
        1 | 2 => Rational::from_int(4),
        3 | 4 => Rational::from_int(6),
        5 => Rational::from_int(8),
        _ => Rational::new(24, 5),
    };
    Ok((count, per_unit))
}

/// `Σ_{s∈U} x_s^{|U|-1} / Π_{t∈U, t≠s} (x_s - x_t)` over `|U| = k`
/// variables, expected to be 1.
pub fn single_center_sum<C: Coeff>(k: usize) -> Result<MultiPoly<C>> {
    let set: Vec<usize> = (0..k).collect();
    let mut numer = MultiPoly::zero(k);
    for &s in &set {
        let edges: Vec<Edge> = set.iter().filter(|&&p| p != s).map(|&p| (s, p)).collect();
        let mono = Monomial::ONE.with_exponent(s, k as u32 - 1);
        numer = numer.plus(&over_vandermonde::<C>(k, &set, &edges).shift(mono));
    }
    divide(&numer, &vandermonde(k, &set), "single-centre partial fractions")
}

/// `x₁x₂/((x₁-x₃)(x₂-x₃)) + x₂x₃/((x₂-x₁)(x₃-x₁)) + x₁x₃/((x₁-x₂)(x₃-x₂))`,
/// expected to be 1.
pub fn shared_pole_sum<C: Coeff>() -> Result<MultiPoly<C>> {
    let set = [0usize, 1, 2];
    let mut numer = MultiPoly::zero(3);
    for p in 0..3 {
        let a_set: Vec<usize> = set.iter().copied().filter(|&a| a != p).collect();
        let edges: Vec<Edge> = a_set.iter().map(|&a| (a, p)).collect();
        let mono = a_set.iter().fold(Monomial::ONE, |m, &a| m.mul(Monomial::var(a)));
        numer = numer.plus(&over_vandermonde::<C>(3, &set, &edges).shift(mono));
    }
    divide(&numer, &vandermonde(3, &set), "shared-pole partial fractions")
}
