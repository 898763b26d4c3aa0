//! Sparse multivariate polynomials, partitions and the monomial-symmetric
//! basis.

mod monomial;
mod partition;
mod poly;

pub use monomial::{Monomial, MAX_VARS};
pub use partition::{partitions_of, partitions_upto, Partition};
pub use poly::{monomial_symmetric, poly_arith, MultiPoly, PolyOp};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rings::Rational;

    type P = MultiPoly<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn arithmetic_examples() {
        let s = x(2, 0).plus(&x(2, 1));
        assert_eq!(s.times(&s).to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!(s.plus(&s.scale(&q(-1))).is_zero());
        let d = x(2, 0).minus(&x(2, 1));
        assert_eq!(d.times(&s).to_string(), "x1^2 - x2^2");
        assert!(matches!(poly_arith(&s, &x(3, 0), PolyOp::Add), Err(Error::Domain(_))));
    }

    #[test]
    fn division_examples() {
        let s = x(2, 0).plus(&x(2, 1));
        let d = x(2, 0).minus(&x(2, 1));
        let f = s.times(&d);
        assert_eq!(f.exact_div(&d).unwrap(), s);

        let sq = x(2, 0).pow(2);
        let anti = sq.minus(&sq.swap(0, 1));
        assert_eq!(anti.exact_div(&d).unwrap(), s);
        assert_eq!(sq.divided_difference(0, 1), s);

        assert!(matches!(x(2, 0).exact_div(&d), Err(Error::InexactDivision { .. })));
    }

    #[test]
    fn swap_and_euler() {
        let f = P::from_exponents(2, [(vec![2, 1], q(1))]);
        assert_eq!(f.swap(0, 1).to_string(), "x1*x2^2");
        let g = P::from_exponents(2, [(vec![1, 1], q(1)), (vec![1, 0], q(1)), (vec![0, 1], q(1))]);
        assert_eq!(g.swap(0, 1), g);
        let c = x(2, 0).pow(3);
        assert_eq!(c.swap(0, 1).swap(0, 1), c);

        let e = P::from_exponents(2, [(vec![3, 1], q(1))]);
        assert_eq!(e.euler(0), e.scale(&q(3)));
        assert!(P::one(2).euler(0).is_zero());
        assert_eq!(x(2, 0).pow(2).euler(0).euler(0), x(2, 0).pow(2).scale(&q(4)));
    }

    #[test]
    fn msym_examples() {
        let m1: P = monomial_symmetric(&Partition::new(vec![1]), 2).unwrap();
        assert_eq!(m1.to_string(), "x1 + x2");
        let m11: P = monomial_symmetric(&Partition::new(vec![1, 1]), 3).unwrap();
        assert_eq!(m11.to_string(), "x1*x2 + x1*x3 + x2*x3");
        let m21: P = monomial_symmetric(&Partition::new(vec![2, 1]), 2).unwrap();
        assert_eq!(m21.to_string(), "x1^2*x2 + x1*x2^2");
        assert!(monomial_symmetric::<Rational>(&Partition::new(vec![1, 1, 1]), 2).is_err());

        let coords = m1.times(&m1).to_msym_coords().unwrap();
        assert_eq!(coords.len(), 2);
        assert_eq!(coords[&Partition::new(vec![2])], q(1));
        assert_eq!(coords[&Partition::new(vec![1, 1])], q(2));
        assert_eq!(x(2, 0).to_msym_coords(), Err(Error::NonSymmetric { i: 1, j: 2 }));
        assert_eq!(m21.to_msym_coords().unwrap()[&Partition::new(vec![2, 1])], q(1));
        assert!(Rational::one().is_one());
    }
}
