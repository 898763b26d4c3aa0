use macexp::multipoly::{monomial_symmetric, partitions_upto, MultiPoly, Partition};
use macexp::operators::{
    h_op, macdonald_jet, macdonald_jet_literal, macdonald_specialized, operator_matrix, subsets, LinearOperator,
};
use macexp::rings::{BetaPoly, Coeff, HJet, Rational};
use macexp::tbinom::t_binomial;
use proptest::prelude::*;

fn q_or_t() -> impl Strategy<Value = Rational> {
    (1i64..30, 1i64..30).prop_map(|(a, b)| Rational::new(a, b))
}

/// A symmetric polynomial `Σ c_λ m_λ` over `|λ| ≤ 3`.
fn symmetric<C: Coeff>(n: usize, cs: &[i64]) -> MultiPoly<C> {
    let basis = partitions_upto(3, n);
    let parts: Vec<MultiPoly<C>> = basis
        .iter()
        .zip(cs)
        .map(|(lam, &c)| monomial_symmetric::<C>(lam, n).unwrap().scale_rational(&Rational::from_int(c)))
        .collect();
    MultiPoly::sum(n, parts.iter())
}

fn commutator_on<C: Coeff>(a: &LinearOperator<C>, b: &LinearOperator<C>, f: &MultiPoly<C>) -> MultiPoly<C> {
    a.apply(&b.apply(f).unwrap()).unwrap().minus(&b.apply(&a.apply(f).unwrap()).unwrap())
}

/// `e_r(y_1, …, y_n)` by brute force over subsets.
fn elementary(ys: &[Rational], r: usize) -> Rational {
    subsets(ys.len(), r)
        .iter()
        .map(|s| s.iter().fold(Rational::one(), |acc, &i| &acc * &ys[i]))
        .fold(Rational::zero(), |acc, x| &acc + &x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dunkl_sums_commute(cs in prop::collection::vec(-3i64..4, 7), i in 1u32..4, j in 1u32..4) {
        let f: MultiPoly<BetaPoly> = symmetric(3, &cs);
        let c = commutator_on(&h_op(3, i), &h_op(3, j), &f);
        prop_assert!(c.is_zero());
    }

    #[test]
    fn macdonald_operators_commute(cs in prop::collection::vec(-3i64..4, 7), q in q_or_t(), t in q_or_t(), r in 1usize..4, s in 1usize..4) {
        let f: MultiPoly<Rational> = symmetric(3, &cs);
        let a = macdonald_specialized::<Rational>(3, r, &q, &t).unwrap();
        let b = macdonald_specialized::<Rational>(3, s, &q, &t).unwrap();
        prop_assert!(commutator_on(&a, &b, &f).is_zero());
    }

    #[test]
    fn scalar_part_is_scaled_t_binomial(t in q_or_t(), q in q_or_t(), n in 1usize..5, r in 1usize..5) {
        prop_assume!(r <= n);
        let one: MultiPoly<Rational> = MultiPoly::one(n);
        let got = macdonald_specialized::<Rational>(n, r, &q, &t).unwrap().apply(&one).unwrap();
        let expected = &t.pow((r * (r - 1) / 2) as u32) * &t_binomial(n as i64, r as i64).unwrap().eval(&t);
        prop_assert_eq!(got, MultiPoly::constant(n, expected));
    }

    /// Leading coefficient of `D_n^r m_λ` is `e_r(q^{λ_i} t^{n-i})`, and the
    /// image stays below `λ` in dominance order.
    #[test]
    fn macdonald_is_triangular(q in q_or_t(), t in q_or_t(), r in 1usize..4) {
        let n = 3;
        let basis = partitions_upto(4, n);
        let m = operator_matrix(&macdonald_specialized::<Rational>(n, r, &q, &t).unwrap(), &basis).unwrap();
        for (col, lam) in basis.iter().enumerate() {
            let ys: Vec<Rational> = (0..n)
                .map(|i| {
                    let part = lam.parts().get(i).copied().unwrap_or(0);
                    &q.pow(part) * &t.pow((n - 1 - i) as u32)
                })
                .collect();
            prop_assert_eq!(m.entry(col, col), &elementary(&ys, r));
            for (row, mu) in basis.iter().enumerate() {
                if !m.entry(row, col).is_zero() {
                    prop_assert!(lam.dominates(mu), "m{} has an m{} component", lam, mu);
                }
            }
        }
    }
}

#[test]
fn jet_paths_agree() {
    for (n, r) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        let fast = macdonald_jet(n, r, 3).unwrap();
        let slow = macdonald_jet_literal(n, r, 3).unwrap();
        for lam in partitions_upto(3, n) {
            let f: MultiPoly<HJet> = monomial_symmetric(&lam, n).unwrap();
            assert_eq!(fast.apply(&f).unwrap(), slow.apply(&f).unwrap(), "n={n} r={r} m{lam}");
        }
    }
}

#[test]
fn dunkl_on_power_sum() {
    // H_k p₁ = (1 + (n-1)β)^{k-1} p₁ at n = 2.
    let p1: MultiPoly<BetaPoly> = monomial_symmetric(&Partition::new(vec![1]), 2).unwrap();
    let base = BetaPoly::one().plus(&BetaPoly::monomial(1, Rational::one()));
    for k in 1..=4 {
        assert_eq!(h_op(2, k).apply(&p1).unwrap(), p1.scale(&base.powu(k - 1)));
    }
}
