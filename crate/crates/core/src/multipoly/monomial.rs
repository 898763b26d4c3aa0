//! Packed exponent vectors.

use std::fmt;

/// Maximum number of variables a [`Monomial`] can hold.
pub const MAX_VARS: usize = 15;
const LANE: u32 = 8;
const LANE_MASK: u128 = 0xff;
const DEG_SHIFT: u32 = 120;

/// Exponent vector packed into one integer: eight bits per variable with the
/// total degree in the top lane. Integer order is graded lexicographic order
/// with x1 > x2 > ... > x15, and multiplication is integer addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u128);

#[inline]
fn shift(i: usize) -> u32 {
    debug_assert!(i < MAX_VARS);
    LANE * (MAX_VARS - 1 - i) as u32
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// Panics if there are more than [`MAX_VARS`] exponents or any exponent
    /// (or the total degree) exceeds 255.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m = m.with_exponent(i, e);
        }
        m
    }

    /// The single variable `x_i` (0-based).
    pub fn var(i: usize) -> Self {
        Monomial::ONE.with_exponent(i, 1)
    }

    #[inline]
    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> shift(i)) & LANE_MASK) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exponents(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exponent(i)).collect()
    }

    pub fn with_exponent(self, i: usize, e: u32) -> Self {
        let old = self.exponent(i);
        let deg = self.degree() - old + e;
        assert!(e <= 255 && deg <= 255, "exponent overflow");
        let cleared = self.0 & !(LANE_MASK << shift(i)) & !(LANE_MASK << DEG_SHIFT);
        Monomial(cleared | ((e as u128) << shift(i)) | ((deg as u128) << DEG_SHIFT))
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        debug_assert!(self.degree() + other.degree() <= 255);
        Monomial(self.0 + other.0)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(self, other: Monomial, n: usize) -> Option<Monomial> {
        if self.degree() < other.degree() {
            return None;
        }
        for i in 0..n {
            if self.exponent(i) < other.exponent(i) {
                return None;
            }
        }
        Some(Monomial(self.0 - other.0))
    }

    /// Exchanges the exponents of `x_i` and `x_j`.
    #[inline]
    pub fn swap(self, i: usize, j: usize) -> Monomial {
        let (a, b) = (self.exponent(i), self.exponent(j));
        if a == b {
            return self;
        }
        let mask = (LANE_MASK << shift(i)) | (LANE_MASK << shift(j));
        Monomial((self.0 & !mask) | ((b as u128) << shift(i)) | ((a as u128) << shift(j)))
    }

    /// Whether the exponents are weakly decreasing, i.e. the monomial is the
    /// canonical representative of its orbit under permutations.
    pub fn is_sorted(self, n: usize) -> bool {
        (1..n).all(|i| self.exponent(i - 1) >= self.exponent(i))
    }

    pub fn render(self, n: usize) -> String {
        let parts: Vec<String> = (0..n)
            .filter_map(|i| match self.exponent(i) {
                0 => None,
                1 => Some(format!("x{}", i + 1)),
                e => Some(format!("x{}^{e}", i + 1)),
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = self.exponents(MAX_VARS);
        let last = exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "x^{:?}", &exps[..last])
    }
}
