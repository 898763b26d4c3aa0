//! The closed-form operators, as linear combinations of words in the
//! building blocks `H_k`, `B_{k,l}`, `L_k`, `m`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, Partition};
use crate::operators::{b_family_op, h_op, operator_matrix, BSpec, LinearOperator, OperatorMatrix};
use crate::rings::{binom, fmt_scaled, join_terms, BetaPoly, Coeff, Rational};
use crate::tbinom::scaled_taylor_coeff_closed;

use super::aux::{aux_a_apply, beta2_lhs_apply};
use super::coeff::{lin, nbinom, npoly, Forms, NRat};
use super::types::{type_two_unit_apply, type_six_unit_apply};

/// An operator that closed forms are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    /// `H_k = Σ_i d_i^k`.
    H(u32),
    Fam(BSpec),
    /// `Σ_{i<j} (x_i + x_j)/(x_i - x_j) (x_i∂_i - x_j∂_j)`.
    Aux,
    /// `Σ_i (Σ_{j≠i} x_i/(x_i-x_j)(1-K_ij)) (Σ_{j≠i} x_i/(x_i-x_j)(x_i∂_i-x_j∂_j))`.
    Beta2Lhs,
    /// Unit sum of the type-2 closed form.
    TypeTwoUnit,
    /// Unit sum of the type-6 closed form.
    TypeSixUnit,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::H(k) => write!(f, "H{k}"),
            Block::Fam(s) => write!(f, "{s}"),
            Block::Aux => f.write_str("A"),
            Block::Beta2Lhs => f.write_str("Q"),
            Block::TypeTwoUnit => f.write_str("U2"),
            Block::TypeSixUnit => f.write_str("U6"),
        }
    }
}

impl Block {
    pub fn operator(self, n: usize) -> LinearOperator<BetaPoly> {
        match self {
            Block::H(k) => h_op(n, k),
            Block::Fam(s) => b_family_op(n, s),
            Block::Aux => LinearOperator::new(n, "A", aux_a_apply),
            Block::Beta2Lhs => LinearOperator::new(n, "Q", beta2_lhs_apply),
            Block::TypeTwoUnit => LinearOperator::new(n, "U2", type_two_unit_apply),
            Block::TypeSixUnit => LinearOperator::new(n, "U6", type_six_unit_apply),
        }
    }
}

/// Block matrices on a fixed basis window, computed on first use.
pub struct BlockCache {
    n: usize,
    basis: Vec<Partition>,
    mats: HashMap<Block, OperatorMatrix<BetaPoly>>,
}

impl BlockCache {
    /// `basis` must be closed under degree-preserving symmetric operators,
    /// e.g. `partitions_upto(d, n)`.
    pub fn new(n: usize, basis: Vec<Partition>) -> Self {
        BlockCache { n, basis, mats: HashMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn get(&mut self, b: Block) -> Result<&OperatorMatrix<BetaPoly>> {
        if !self.mats.contains_key(&b) {
            let m = operator_matrix(&b.operator(self.n), &self.basis)?;
            self.mats.insert(b, m);
        }
        Ok(&self.mats[&b])
    }
}

/// `coeff · w₁ w₂ …`, the rightmost block acting first.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: BetaPoly,
    pub word: Vec<Block>,
}

#[derive(Clone, Debug)]
pub struct ClosedForm {
    name: String,
    n: usize,
    r: usize,
    terms: Vec<Term>,
}

use Block::{Fam, H};
const L1: Block = Fam(BSpec::L(1));
const L2: Block = Fam(BSpec::L(2));
const L3: Block = Fam(BSpec::L(3));
const L4: Block = Fam(BSpec::L(4));
const M11: Block = Fam(BSpec::M11);
const B21: Block = Fam(BSpec::B(2, 1));
const B22: Block = Fam(BSpec::B(2, 2));
const B23: Block = Fam(BSpec::B(2, 3));
const B31: Block = Fam(BSpec::B(3, 1));
const B32: Block = Fam(BSpec::B(3, 2));
const B41: Block = Fam(BSpec::B(4, 1));

impl ClosedForm {
    pub fn new(name: impl Into<String>, n: usize, r: usize) -> Self {
        ClosedForm { name: name.into(), n, r, terms: Vec::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Adds `coeff · word`; zero coefficients are dropped.
    pub fn push(&mut self, coeff: BetaPoly, word: &[Block]) {
        if !coeff.is_zero() {
            self.terms.push(Term { coeff, word: word.to_vec() });
        }
    }

    /// Adds `β^power · value · word` with `value` from `forms` at this `(n, r)`.
    fn add(&mut self, power: u32, forms: Forms, word: &[Block]) -> Result<()> {
        let v = forms.eval(self.n as i64, self.r as i64)?;
        self.push(BetaPoly::monomial(power, v), word);
        Ok(())
    }

    fn add_rat(&mut self, power: u32, v: Rational, word: &[Block]) {
        self.push(BetaPoly::monomial(power, v), word);
    }

    /// Keeps only the `β^j` part, with β stripped.
    pub fn beta_slice(&self, j: u32, name: impl Into<String>) -> ClosedForm {
        let mut out = ClosedForm::new(name, self.n, self.r);
        for t in &self.terms {
            out.push(BetaPoly::constant(t.coeff.coeff(j)), &t.word);
        }
        out
    }

    pub fn operator(&self) -> LinearOperator<BetaPoly> {
        let n = self.n;
        let ops = self.terms.iter().map(|t| {
            let word = t.word.iter().fold(LinearOperator::identity(n), |acc, b| acc.compose(&b.operator(n)));
            word.scale(t.coeff.clone())
        });
        LinearOperator::sum(n, ops.collect::<Vec<_>>()).with_name(self.name.clone())
    }

    /// Matrix on the cache's basis, assembled from block matrices.
    pub fn matrix(&self, cache: &mut BlockCache) -> Result<OperatorMatrix<BetaPoly>> {
        if cache.n() != self.n {
            return Err(Error::Domain(format!("closed form for n={} used with n={}", self.n, cache.n())));
        }
        let basis = cache.basis().to_vec();
        let mut total = OperatorMatrix::zero(self.n, basis.clone());
        for t in &self.terms {
            let mut m = OperatorMatrix::identity(self.n, basis.clone());
            for b in &t.word {
                m = m.times(cache.get(*b)?);
            }
            total = total.plus(&m.scale(&t.coeff));
        }
        Ok(total)
    }

    pub fn apply(&self, f: &MultiPoly<BetaPoly>) -> Result<MultiPoly<BetaPoly>> {
        self.operator().apply(f)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.word.is_empty() {
                    t.coeff.to_string()
                } else {
                    let w: Vec<String> = t.word.iter().map(|b| b.to_string()).collect();
                    fmt_scaled(&t.coeff, &w.join("*"))
                }
            })
            .collect();
        f.write_str(&join_terms(terms))
    }
}

/// Names accepted by [`build_closed_form`].
pub const CLOSED_FORMS: &[&str] = &[
    "ord1",
    "ord2",
    "ord3_raw",
    "ord3_dunkl",
    "ord3_example_r1",
    "ord3_example_r2",
    "ord5_beta0",
    "ord5_beta1",
    "ord5_beta2",
    "h1_explicit",
    "h2_explicit",
    "h3_explicit",
    "beta2_h3",
    "beta2_h3_first",
    "beta2_h3_second",
    "aux_identity",
    "dn1_h4",
    "type1",
    "type2",
    "type3",
    "type4",
    "type5",
    "type6",
];

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

/// `c · C(n-shift, r-off)` as a single form.
fn cb(label: &str, c: Rational, shift: i64, k: i64) -> Forms {
    Forms::single(label, NRat::rat(c).mul_poly(&nbinom(shift, k)))
}

fn check_r(name: &str, n: usize, r: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::Domain(format!("{name} needs 1 <= r <= n, got n={n}, r={r}")));
    }
    Ok(())
}

/// Builds a named closed form at `(n, r)`. Forms that do not depend on `r`
/// ignore it.
pub fn build_closed_form(name: &str, n: usize, r: usize) -> Result<ClosedForm> {
    let mut cf = ClosedForm::new(name, n, r);
    let ni = n as i64;
    let ri = r as i64;
    match name {
        "ord1" => {
            check_r(name, n, r)?;
            cf.add(0, cb("C(n-1,r-1)", q(1), 1, ri - 1), &[L1])?;
            let scalar = NRat::rat(Rational::new(ri, 2)).mul_poly(&nbinom(0, ri)).mul_poly(&lin(1, -ri));
            cf.add(1, Forms::single("r/2 C(n,r)(n-r)", scalar), &[])?;
        }
        "ord2" => {
            check_r(name, n, r)?;
            cf.add(0, cb("1/2 C(n-2,r-1)", Rational::new(1, 2), 2, ri - 1), &[H(2)])?;
            cf.add(0, cb("1/2 C(n-2,r-2)", Rational::new(1, 2), 2, ri - 2), &[H(1), H(1)])?;
            let c = NRat::rat(Rational::new(ri, 2)).mul_poly(&nbinom(1, ri - 1)).mul_poly(&lin(1, -1));
            cf.add(1, Forms::single("C(n-1,r-1) r(n-1)/2", c), &[H(1)])?;
            cf.add_rat(2, scalar_closed(ni, ri, 2)?, &[]);
        }
        "ord3_raw" => {
            check_r(name, n, r)?;
            for j in 0..3 {
                ord5_slice(&mut cf, j, j)?;
            }
            cf.add_rat(3, scalar_closed(ni, ri, 3)?, &[]);
        }
        "ord5_beta0" | "ord5_beta1" | "ord5_beta2" => {
            check_r(name, n, r)?;
            let j = name.as_bytes()[name.len() - 1] - b'0';
            ord5_slice(&mut cf, j as u32, 0)?;
        }
        "ord3_dunkl" => {
            check_r(name, n, r)?;
            cf.add(0, n2r_over_r1("1/6 C(n-3,r-2)(n-2r)/(r-1)", ri, Rational::new(1, 6)), &[H(3)])?;
            cf.add(0, cb("1/2 C(n-3,r-2)", Rational::new(1, 2), 3, ri - 2), &[H(2), H(1)])?;
            let p = npoly(&[6 * ri, -7 * ri, 3 * ri - 1]);
            let c = NRat::poly(p.times(&nbinom(2, ri - 1))).over(&lin(12, -24));
            cf.add(1, Forms::single("(n^2(3r-1)-7rn+6r)/(12(n-2)) C(n-2,r-1)", c), &[H(2)])?;
            cf.add(0, cb("1/6 C(n-3,r-3)", Rational::new(1, 6), 3, ri - 3), &[H(1), H(1), H(1)])?;
            let p = npoly(&[8 * ri * ri - 6 * ri, -9 * ri * ri + 6 * ri, 3 * ri * ri - 3 * ri + 1]);
            let c = NRat::poly(p.times(&nbinom(3, ri - 1)))
                .over(&lin(1, -ri).times(&lin(1, -ri - 1)))
                .times(&NRat::frac(1, 12));
            cf.add(1, Forms::single("1/12 C(n-3,r-1) P(n,r)/((n-r)(n-r-1))", c), &[H(1), H(1)])?;
            let p = npoly(&[2 * ri, 1 - 7 * ri, 3 * ri + 1]);
            let c = NRat::poly(p.times(&nbinom(1, ri - 1))).times(&NRat::frac(ri, 24));
            cf.add(2, Forms::single("r/24 ((3r+1)n^2+(1-7r)n+2r) C(n-1,r-1)", c), &[H(1)])?;
            cf.add_rat(3, scalar_closed(ni, ri, 3)?, &[]);
        }
        "ord3_example_r1" => {
            if r != 1 {
                return Err(Error::Domain(format!("{name} is stated for r = 1, got r={r}")));
            }
            cf.add_rat(0, Rational::new(1, 6), &[H(3)]);
            cf.add_rat(1, Rational::new(2 * ni - 3, 12), &[H(2)]);
            cf.add_rat(1, Rational::new(1, 12), &[H(1), H(1)]);
            cf.add_rat(2, Rational::new((ni - 1) * (2 * ni - 1), 12), &[H(1)]);
            cf.add_rat(3, Rational::new(ni * ni * (ni - 1) * (ni - 1), 24), &[]);
        }
        "ord3_example_r2" => {
            if r != 2 {
                return Err(Error::Domain(format!("{name} is stated for r = 2, got r={r}")));
            }
            cf.add_rat(0, Rational::new(ni - 4, 6), &[H(3)]);
            cf.add_rat(0, Rational::new(1, 2), &[H(2), H(1)]);
            cf.add_rat(1, Rational::new(5 * ni * ni - 14 * ni + 12, 12), &[H(2)]);
            cf.add_rat(1, Rational::new(7 * ni - 10, 12), &[H(1), H(1)]);
            cf.add_rat(2, Rational::new((ni - 1) * (7 * ni * ni - 13 * ni + 4), 12), &[L1]);
            cf.add_rat(3, Rational::new(ni * ni * (ni - 1) * (ni - 1) * (3 * ni - 5), 24), &[]);
        }
        "h1_explicit" => cf.add_rat(0, q(1), &[L1]),
        "h2_explicit" => {
            cf.add_rat(0, q(1), &[L2]);
            cf.add_rat(1, q(2), &[B21]);
            cf.add_rat(1, q(1 - ni), &[L1]);
        }
        "h3_explicit" => {
            cf.add_rat(0, q(1), &[L3]);
            cf.add_rat(1, q(3), &[B22]);
            cf.add_rat(1, q(1 - ni), &[L2]);
            cf.add_rat(1, q(-1), &[M11]);
            push_beta2_second(&mut cf, 2);
        }
        "beta2_h3" => cf.add_rat(0, q(1), &[Block::Beta2Lhs]),
        "beta2_h3_first" => {
            cf.add_rat(0, q(3 - ni), &[Block::Aux]);
            cf.add_rat(0, q(6), &[B31]);
            cf.add_rat(0, q(-(ni - 1) * (ni - 2)), &[L1]);
        }
        "beta2_h3_second" => push_beta2_second(&mut cf, 0),
        "aux_identity" => {
            cf.add_rat(0, q(2), &[B21]);
            cf.add_rat(0, q(1 - ni), &[L1]);
        }
        "dn1_h4" => {
            if r != 1 {
                return Err(Error::Domain(format!("{name} is stated for r = 1, got r={r}")));
            }
            cf.add_rat(0, Rational::new(1, 24), &[L4]);
            cf.add_rat(1, Rational::new(1, 6), &[B23]);
            cf.add_rat(2, Rational::new(1, 4), &[B22]);
            cf.add_rat(2, Rational::new(1, 2), &[B32]);
            cf.add_rat(3, Rational::new(1, 6), &[B21]);
            cf.add_rat(3, q(1), &[B31]);
            cf.add_rat(3, q(1), &[B41]);
            cf.add_rat(4, scalar_closed(ni, 1, 4)?, &[]);
        }
        "type1" | "type2" | "type3" | "type4" | "type5" | "type6" => {
            check_r(name, n, r)?;
            type_closed(&mut cf, name.as_bytes()[4] - b'0', ri)?;
        }
        _ => return Err(Error::Usage(format!("unknown closed form {name:?}"))),
    }
    Ok(cf)
}

fn scalar_closed(n: i64, r: i64, k: u32) -> Result<Rational> {
    Ok(scaled_taylor_coeff_closed(n, r, k)?.coeff(k))
}

fn push_beta2_second(cf: &mut ClosedForm, power: u32) {
    let n = cf.n as i64;
    cf.add_rat(power, q(2 * (3 - n)), &[B21]);
    cf.add_rat(power, q(6), &[B31]);
    cf.add_rat(power, q(1 - n), &[L1]);
}

/// `c · C(n-3, r-2)(n-2r)/(r-1)` with its rewriting
/// `c · C(n-3, r-1)(n-2r)/(n-r-1)`.
fn n2r_over_r1(label: &str, r: i64, c: Rational) -> Forms {
    let printed = NRat::rat(c.clone()).mul_poly(&nbinom(3, r - 2)).mul_poly(&lin(1, -2 * r)).over(&npoly(&[r - 1]));
    let safe = NRat::rat(c).mul_poly(&nbinom(3, r - 1)).mul_poly(&lin(1, -2 * r)).over(&lin(1, -r - 1));
    Forms::new(label, vec![printed, safe])
}

/// The `β^j` slice of the third order, pushed at power `power`.
fn ord5_slice(cf: &mut ClosedForm, j: u32, power: u32) -> Result<()> {
    let r = cf.r as i64;
    match j {
        0 => {
            cf.add(power, n2r_over_r1("1/6 C(n-3,r-2)(n-2r)/(r-1)", r, Rational::new(1, 6)), &[L3])?;
            cf.add(power, cb("1/2 C(n-3,r-2)", Rational::new(1, 2), 3, r - 2), &[L2, H(1)])?;
            cf.add(power, cb("1/6 C(n-3,r-3)", Rational::new(1, 6), 3, r - 3), &[H(1), H(1), H(1)])?;
        }
        1 => {
            cf.add(power, n2r_over_r1("C(n-3,r-2)(n-2r)/(2(r-1))", r, Rational::new(1, 2)), &[B22])?;
            cf.add(power, cb("r(r-1)/4 C(n,r)", Rational::new(r * (r - 1), 4), 0, r), &[L2])?;
            cf.add(power, cb("C(n-3,r-2)", q(1), 3, r - 2), &[B21, H(1)])?;
            let c = NRat::poly(nbinom(3, r - 3).times(&npoly(&[0, -1, 1]))).times(&NRat::frac(1, 2));
            cf.add(power, Forms::single("C(n-3,r-3) n(n-1)/2", c), &[M11])?;
        }
        2 => {
            cf.add(power, n2r_over_r1("C(n-3,r-2)(n-2r)/(r-1)", r, q(1)), &[B31])?;
            let c = NRat::poly(lin(r - 1, r).times(&nbinom(2, r - 1))).times(&NRat::frac(1, 2));
            cf.add(power, Forms::single("((r-1)n+r)/2 C(n-2,r-1)", c), &[B21])?;
            let p = npoly(&[0, -r, 3 * r - 2]);
            let c = NRat::poly(nbinom(1, r - 1).times(&p)).times(&NRat::frac(r - 1, 24));
            cf.add(power, Forms::single("C(n-1,r-1) n(r-1)/24 ((3r-2)n-r)", c), &[L1])?;
        }
        _ => return Err(Error::Domain(format!("no third-order slice for beta^{j}"))),
    }
    Ok(())
}

fn type_closed(cf: &mut ClosedForm, t: u8, r: i64) -> Result<()> {
    let n = cf.n as i64;
    let c = |num: i64, den: i64, shift: i64, k: i64| &Rational::new(num, den) * &binom(n - shift, k);
    match t {
        1 => {
            cf.add_rat(0, c(1, 1, 4, r - 1), &[B41]);
            cf.add_rat(0, c((r + 2) * (r * r * r - r), 24, 1, r + 2), &[L1]);
        }
        2 => {
            cf.add_rat(0, c(1, 1, 4, r - 3), &[Block::TypeTwoUnit]);
            cf.add_rat(0, c(r * (r - 1) * (r - 2) * (r - 3), 24, 1, r), &[L1]);
        }
        3 => {
            cf.add_rat(0, c(r * (r + 1) * (r - 1), 6, 2, r + 1), &[B21]);
            cf.add_rat(0, c(r * (r - 1), 2, 3, r), &[B31]);
            cf.add_rat(0, c(r * (r * r - 1) * (r * r - 4), 12, 1, r + 2), &[L1]);
        }
        4 => {
            let tail = c((r - 1) * (r - 2), 2, 3, r - 1);
            let b21 = &c(r * (r - 1) * (r - 2), 6, 2, r) + &(&tail * &q(n - 2));
            cf.add_rat(0, b21, &[B21]);
            cf.add_rat(0, -tail, &[B31]);
            cf.add_rat(0, c((r + 1) * r * (r - 1) * (r - 2) * (r - 3), 12, 1, r + 1), &[L1]);
        }
        5 => {
            cf.add_rat(0, c((r + 1) * r * (r - 1) * (r - 2), 8, 2, r + 1), &[B21]);
            cf.add_rat(0, c(r * (r - 3) * (r * r - 1) * (r * r - 4), 48, 1, r + 2), &[L1]);
        }
        6 => {
            cf.add_rat(0, c(5 * r * (r + 1) * (r - 1) * (r - 2), 24, 1, r + 1), &[L1]);
            cf.add_rat(0, c(1, 1, 4, r - 2), &[Block::TypeSixUnit]);
        }
        _ => return Err(Error::Domain(format!("type must be 1..=6, got {t}"))),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{monomial_symmetric, partitions_upto};
    use crate::rings::HasBeta;

    fn p1(n: usize) -> MultiPoly<BetaPoly> {
        monomial_symmetric(&Partition::new(vec![1]), n).unwrap()
    }

    fn one_plus_beta(k: u32) -> BetaPoly {
        BetaPoly::one().plus(&BetaPoly::beta()).powu(k)
    }

    #[test]
    fn spec_examples() {
        let ord1 = build_closed_form("ord1", 2, 1).unwrap();
        assert_eq!(ord1.to_string(), "L1 + b");

        let d = build_closed_form("ord3_dunkl", 2, 1).unwrap();
        let expected = p1(2).scale(&one_plus_beta(3).scale(&Rational::new(1, 6)));
        assert_eq!(d.apply(&p1(2)).unwrap(), expected);

        let h3 = build_closed_form("h3_explicit", 2, 1).unwrap();
        assert_eq!(h3.apply(&p1(2)).unwrap(), p1(2).scale(&one_plus_beta(2)));

        let h4 = build_closed_form("dn1_h4", 2, 1).unwrap();
        assert_eq!(h4.apply(&p1(2)).unwrap(), p1(2).scale(&one_plus_beta(4).scale(&Rational::new(1, 24))));
    }

    #[test]
    fn examples_agree_with_general_form() {
        for n in 2..=6 {
            let thm = build_closed_form("ord3_dunkl", n, 1).unwrap();
            let ex = build_closed_form("ord3_example_r1", n, 1).unwrap();
            assert_eq!(thm.terms(), ex.terms(), "n={n}");
        }
        for n in 3..=6 {
            let mut cache = BlockCache::new(n, partitions_upto(3, n));
            let thm = build_closed_form("ord3_dunkl", n, 2).unwrap().matrix(&mut cache).unwrap();
            let ex = build_closed_form("ord3_example_r2", n, 2).unwrap().matrix(&mut cache).unwrap();
            assert_eq!(thm, ex, "n={n}");
        }
    }

    #[test]
    fn matrix_agrees_with_operator() {
        let n = 3;
        let basis = partitions_upto(3, n);
        let mut cache = BlockCache::new(n, basis.clone());
        let cf = build_closed_form("ord3_raw", n, 2).unwrap();
        let m = cf.matrix(&mut cache).unwrap();
        assert_eq!(m, operator_matrix(&cf.operator(), &basis).unwrap());
    }

    #[test]
    fn unknown_and_out_of_range() {
        assert!(matches!(build_closed_form("nope", 3, 1), Err(Error::Usage(_))));
        assert!(matches!(build_closed_form("ord2", 2, 3), Err(Error::Domain(_))));
        assert!(matches!(build_closed_form("dn1_h4", 3, 2), Err(Error::Domain(_))));
    }
}
