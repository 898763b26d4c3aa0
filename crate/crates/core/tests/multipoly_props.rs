use std::collections::BTreeMap;

use macexp::multipoly::{monomial_symmetric, partitions_of, partitions_upto, Monomial, MultiPoly, Partition};
use macexp::rings::{Coeff, Rational};
use proptest::prelude::*;

type P = MultiPoly<Rational>;

fn poly(n: usize, max_deg: u32) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -5i64..5), 0..6).prop_map(move |ts| {
        P::from_terms(n, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), Rational::from_int(c))))
    })
}

/// Nonzero polynomial: distinct exponent vectors with nonzero coefficients.
fn nonzero_poly(n: usize, max_deg: u32) -> impl Strategy<Value = P> {
    prop::collection::btree_map(prop::collection::vec(0..=max_deg, n), (1i64..5, any::<bool>()), 1..4).prop_map(
        move |ts| {
            P::from_terms(
                n,
                ts.into_iter().map(|(e, (c, neg))| (Monomial::from_exponents(&e), Rational::from_int(if neg { -c } else { c }))),
            )
        },
    )
}

/// Random symmetric polynomial as a combination of `m_λ`, `|λ| ≤ 3`.
fn sym_coords(n: usize) -> impl Strategy<Value = BTreeMap<Partition, Rational>> {
    let basis = partitions_upto(3, n);
    prop::collection::vec(-4i64..4, basis.len()).prop_map(move |cs| {
        basis.iter().cloned().zip(cs).filter(|(_, c)| *c != 0).map(|(p, c)| (p, Rational::from_int(c))).collect()
    })
}

/// Number of partitions of `w` into at most `k` parts, by the recursion
/// `p(w, k) = p(w, k-1) + p(w-k, k)`.
fn partition_count(w: i64, k: i64) -> u64 {
    if w == 0 {
        return 1;
    }
    if w < 0 || k == 0 {
        return 0;
    }
    partition_count(w, k - 1) + partition_count(w - k, k)
}

proptest! {
    #[test]
    fn ring_laws(f in poly(3, 3), g in poly(3, 3), h in poly(3, 2)) {
        prop_assert_eq!(f.times(&g), g.times(&f));
        prop_assert_eq!(f.times(&g.plus(&h)), f.times(&g).plus(&f.times(&h)));
        prop_assert_eq!(f.times(&g).times(&h), f.times(&g.times(&h)));
    }

    #[test]
    fn exact_division_recovers_factor(f in poly(3, 3), g in nonzero_poly(3, 2)) {
        prop_assert_eq!(f.times(&g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn divided_difference_inverts_antisymmetrisation(f in poly(3, 4), i in 0usize..3, step in 1usize..3) {
        let j = (i + step) % 3;
        let dd = f.divided_difference(i, j);
        prop_assert_eq!(P::var_diff(3, i, j).times(&dd), f.minus(&f.swap(i, j)));
    }

    #[test]
    fn euler_scales_by_exponent(f in poly(3, 4), i in 0usize..3) {
        let expected = f.map_terms(|m, c| Some(c.scale(&Rational::from_int(m.exponent(i) as i64))));
        prop_assert_eq!(f.euler(i), expected);
    }

    #[test]
    fn msym_coordinates_round_trip(coords in sym_coords(3)) {
        let mut f = P::zero(3);
        for (lam, c) in &coords {
            f = f.plus(&monomial_symmetric::<Rational>(lam, 3).unwrap().scale(c));
        }
        prop_assert!(f.is_symmetric());
        prop_assert_eq!(f.to_msym_coords().unwrap(), coords);
    }
}

#[test]
fn partition_enumeration_counts() {
    for w in 1..=8u32 {
        for k in 1..=6usize {
            let ps = partitions_of(w, k);
            assert_eq!(ps.len() as u64, partition_count(w as i64, k as i64), "w={w} k={k}");
            assert!(ps.iter().all(|p| p.weight() == w && p.len() <= k));
        }
    }
    assert_eq!(partitions_upto(4, 4).len(), 1 + 2 + 3 + 5);
}

#[test]
fn basis_order_extends_dominance() {
    let ps = partitions_of(6, 6);
    for (a, p) in ps.iter().enumerate() {
        assert!(p.dominates(p));
        for (b, q) in ps.iter().enumerate() {
            if a != b && p.dominates(q) {
                assert!(a < b, "{p} dominates {q} but comes later");
                assert!(!q.dominates(p));
            }
        }
    }
}

#[test]
fn non_symmetric_input_is_rejected() {
    let f = P::var(3, 0);
    assert!(f.to_msym_coords().is_err());
    assert!(f.check_symmetric().is_err());
}
