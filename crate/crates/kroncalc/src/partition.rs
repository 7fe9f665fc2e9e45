//! Integer partitions, compositions and the `(n-d, nubar)` bookkeeping used
//! throughout the crate.
//!
//! Partitions are stored without trailing zeros; the empty partition is the
//! zero-length vector. All counting results use arbitrary-precision integers;
//! part arithmetic uses checked `u64` operations so overflow can never pass
//! silently.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::fmt;

/// A weakly decreasing vector of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} contains a zero part")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from arbitrary nonnegative entries by sorting and
    /// dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(a^b)`: `b` rows of length `a`.
    pub fn rectangle(a: u64, b: u64) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition(vec![a; b as usize])
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u64) -> Self {
        Partition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// Depth: size minus the first part.
    pub fn depth(&self) -> u64 {
        self.size() - self.part(1)
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (1..=cols)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u64)
            .collect();
        Partition(parts)
    }

    /// Cellwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Dominance order: every prefix sum of `self` is at least the matching
    /// prefix sum of `other`. Requires equal sizes.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Increases the first `i` parts by `k`.
    pub fn shift_rows(&self, i: u64, k: u64) -> Result<Partition> {
        if i < 1 || i as usize > self.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.len() as u64 });
        }
        let mut parts = self.0.clone();
        for p in parts.iter_mut().take(i as usize) {
            *p = p.checked_add(k).expect("partition part overflow");
        }
        Ok(Partition(parts))
    }

    /// Whether the diagram equals its transpose.
    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn syt_count(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut num = factorial(n);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 1..=row {
                let hook = row - j + conj.part(j as usize) - (i as u64 + 1) + 1;
                num /= BigInt::from(hook);
            }
        }
        num
    }

    /// Parses a comma-separated list; the empty string denotes the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidPartition(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// A vector of positive integers in arbitrary order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u64>);

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("{parts:?} contains a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Drops the first entry: `(pi_2, ..., pi_r)`.
    pub fn tail(&self) -> Composition {
        Composition(self.0.iter().skip(1).copied().collect())
    }

    /// Reorders the entries into a partition.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    pub fn parse(s: &str) -> Result<Composition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidComposition(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// The pair `(nubar, n)` determining the partition `(n-d, nubar)` of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuBarContext {
    pub nubar: Partition,
    pub n: u64,
}

impl NuBarContext {
    pub fn new(nubar: Partition, n: u64) -> Result<Self> {
        let min = nubar.size() + nubar.part(1);
        if n < min {
            return Err(Error::BelowThreshold { n, min });
        }
        Ok(NuBarContext { nubar, n })
    }

    /// The partition `(n-d, nubar)` of `n`.
    pub fn extended(&self) -> Partition {
        extend_nubar(&self.nubar, self.n).expect("validated at construction")
    }

    /// The extension at the minimal admissible `n`, that is `(nu_2, nubar)`.
    pub fn nu_tilde(&self) -> Partition {
        nu_tilde(&self.nubar)
    }
}

/// Prepends `n - |nubar|` to `nubar`; requires `n >= |nubar| + nubar_1`.
pub fn extend_nubar(nubar: &Partition, n: u64) -> Result<Partition> {
    let d = nubar.size();
    let min = d + nubar.part(1);
    if n < min {
        return Err(Error::BelowThreshold { n, min });
    }
    if n == d {
        // only possible for the empty nubar
        return Ok(nubar.clone());
    }
    let mut parts = Vec::with_capacity(nubar.len() + 1);
    parts.push(n - d);
    parts.extend_from_slice(nubar.parts());
    Ok(Partition(parts))
}

/// The extension of `nubar` at the minimal admissible size `d + nu_2`.
pub fn nu_tilde(nubar: &Partition) -> Partition {
    extend_nubar(nubar, nubar.size() + nubar.part(1)).expect("minimal n is admissible")
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u64, bound: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let top = bound.min(remaining);
        for next in (1..=top).rev() {
            prefix.push(next);
            rec(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n, &mut prefix, &mut out);
    out
}

/// All partitions of `n` whose diagram fits inside `shape`.
pub fn partitions_of_inside(n: u64, shape: &Partition) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| shape.contains(p))
        .collect()
}

/// All `2^(n-1)` compositions of `n`, first entry descending.
pub fn compositions_of(n: u64) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for next in (1..=remaining).rev() {
            prefix.push(next);
            rec(remaining - next, prefix, out);
            prefix.pop();
        }
    }
    rec(n, &mut prefix, &mut out);
    out
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

/// Multinomial coefficient `|parts|! / (parts_1! ... parts_r!)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    let mut acc = factorial(total);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[4, 2]).dominates(&p(&[3, 3])).unwrap());
        assert!(!p(&[3, 3]).dominates(&p(&[4, 2])).unwrap());
        let lam = p(&[5, 3, 2]);
        assert!(lam.dominates(&lam).unwrap());
        assert!(p(&[4, 2]).dominates(&p(&[3, 3, 3])).is_err());
    }

    #[test]
    fn depth_examples() {
        assert_eq!(p(&[5, 3, 2]).depth(), 5);
        assert_eq!(p(&[9]).depth(), 0);
        assert_eq!(p(&[1, 1, 1, 1]).depth(), 3);
        assert_eq!(Partition::empty().depth(), 0);
    }

    #[test]
    fn extend_nubar_examples() {
        assert_eq!(extend_nubar(&p(&[1, 1]), 4).unwrap(), p(&[2, 1, 1]));
        assert_eq!(nu_tilde(&p(&[1, 1])), p(&[1, 1, 1]));
        assert_eq!(nu_tilde(&p(&[2, 1])), p(&[2, 2, 1]));
        assert_eq!(extend_nubar(&Partition::empty(), 7).unwrap(), p(&[7]));
        assert!(extend_nubar(&p(&[1, 1]), 2).is_err());
    }

    #[test]
    fn partition_enumeration() {
        let p4 = partitions_of(4);
        let expected: Vec<Partition> = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(p4, expected);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions_of(3).len(), 4);
        assert_eq!(compositions_of(1), vec![Composition::new(vec![1]).unwrap()]);
        assert_eq!(compositions_of(5).len(), 16);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        assert_eq!(multinomial(&[7]), BigInt::from(1));
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
    }

    #[test]
    fn shift_rows_examples() {
        assert_eq!(p(&[3, 3]).shift_rows(2, 1).unwrap(), p(&[4, 4]));
        assert_eq!(p(&[4, 2]).shift_rows(1, 3).unwrap(), p(&[7, 2]));
        assert_eq!(p(&[4, 2]).shift_rows(2, 0).unwrap(), p(&[4, 2]));
        assert!(p(&[4, 2]).shift_rows(3, 1).is_err());
    }

    #[test]
    fn signed_multinomial_sum_is_one() {
        // sum over compositions pi of d of (-1)^(d - len) * multinomial(pi)
        for d in 1..=10 {
            let mut acc = BigInt::zero();
            for c in compositions_of(d) {
                let sign = if (d - c.len() as u64) % 2 == 0 { 1 } else { -1 };
                acc += BigInt::from(sign) * multinomial(c.parts());
            }
            assert_eq!(acc, BigInt::one(), "d = {d}");
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=9 {
            let ps = partitions_of(n);
            for a in &ps {
                assert!(a.dominates(a).unwrap());
                for b in &ps {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &ps {
                        if b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_reverses_dominance() {
        for n in 0..=9 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    if a.dominates(b).unwrap() {
                        assert!(b.conjugate().dominates(&a.conjugate()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p(&[2, 1]).syt_count(), BigInt::from(2));
        assert_eq!(p(&[3, 2]).syt_count(), BigInt::from(5));
        assert_eq!(p(&[2, 2, 1]).syt_count(), BigInt::from(5));
        assert_eq!(Partition::empty().syt_count(), BigInt::one());
    }

    #[test]
    fn parse_round_trip() {
        let q = Partition::parse("4,3,1").unwrap();
        assert_eq!(q, p(&[4, 3, 1]));
        assert_eq!(q.to_string(), "4,3,1");
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,3").is_err());
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(parts in proptest::collection::vec(1u64..10, 0..8)) {
            let lam = Partition::from_unsorted(parts);
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn parts_of_enumerated_partitions_sum(n in 0u64..12) {
            for q in partitions_of(n) {
                prop_assert_eq!(q.size(), n);
            }
        }
    }
}
