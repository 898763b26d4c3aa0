use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Integer partition stored as weakly decreasing positive parts.
///
/// The `Ord` instance sorts by weight, then reverse-lexicographically, which
/// refines the reverse of dominance order within each weight: if λ strictly
/// dominates μ then λ comes first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dominance order: equal weight and every partial sum of `self` at
    /// least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1`, `[2,1]` or `(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Usage(format!("bad partition {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

/// All partitions of `w` with at most `max_parts` parts, reverse-lex order.
pub fn partitions_of(w: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Partitions of weight `1..=d` with at most `max_parts` parts, ordered by
/// weight and then reverse-lexicographically.
pub fn partitions_upto(d: u32, max_parts: usize) -> Vec<Partition> {
    (1..=d).flat_map(|w| partitions_of(w, max_parts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_upto(2, 2), vec![p(&[1]), p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_upto(3, 2), vec![p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])]);
        assert_eq!(partitions_of(4, 4).len(), 5);
        assert_eq!(partitions_of(10, 10).len(), 42);
        let all = partitions_upto(5, 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dominance() {
        assert!(p(&[2, 1]).dominates(&p(&[1, 1, 1])));
        assert!(!p(&[1, 1, 1]).dominates(&p(&[2, 1])));
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])));
        assert!(!p(&[4, 1, 1]).dominates(&p(&[3, 3])));
        assert!(p(&[2]).dominates(&p(&[2])));
    }

    #[test]
    fn parsing() {
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("1, 2".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1]).to_string(), "[2,1]");
    }
}
