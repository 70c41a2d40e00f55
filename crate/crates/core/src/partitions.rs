//! Young diagrams (integer partitions) and their elementary arithmetic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
/// The empty sequence is the empty diagram.
///
/// The derived `Ord` is the canonical order used everywhere for deterministic
/// output: first by size, ties broken lexicographically on parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Canonicalize a raw part sequence: trailing zeros are stripped, strictly
    /// increasing steps or negative entries are rejected.
    pub fn parse(raw: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(raw.len());
        let mut prev: Option<i64> = None;
        for &p in raw {
            if p < 0 {
                return Err(Error::MalformedPartition(format!("negative part {p}")));
            }
            if let Some(q) = prev {
                if p > q {
                    return Err(Error::MalformedPartition(format!(
                        "parts increase: {q} followed by {p}"
                    )));
                }
            }
            prev = Some(p);
            if p > 0 {
                parts.push(p as u32);
            }
        }
        Ok(Partition { parts })
    }

    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let raw: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        Self::parse(&raw)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            let len = self.parts.iter().take_while(|&&p| p as usize > c).count();
            parts.push(len as u32);
        }
        Partition { parts }
    }

    /// Containment of diagrams: `self[k] <= other[k]` rowwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&a, &b)| a <= b)
    }

    /// Number of standard Young tableaux of this shape, by the hook-length
    /// formula. Exact; fails loudly on overflow instead of wrapping.
    pub fn syt_count(&self) -> Result<u64> {
        let n = self.size();
        if n == 0 {
            return Ok(1);
        }
        let conj = self.conjugate();
        // numerator n! and denominator prod of hooks, interleaved so the
        // running value stays integral (f^lambda divides every prefix ratio
        // only at the end, so keep them as u128 and divide once)
        let mut num: u128 = 1;
        for k in 1..=n {
            num = num.checked_mul(k as u128).ok_or(Error::ArithmeticOverflow)?;
        }
        let mut den: u128 = 1;
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row as usize {
                let arm = row as u128 - 1 - c as u128;
                let leg = conj.parts[c] as u128 - 1 - r as u128;
                den = den
                    .checked_mul(arm + leg + 1)
                    .ok_or(Error::ArithmeticOverflow)?;
            }
        }
        let f = num / den;
        u64::try_from(f).map_err(|_| Error::ArithmeticOverflow)
    }
}

/// Size-then-lexicographic total order (the canonical output order).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::from_parts(&v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// All partitions of `n`, in canonical order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut p = remaining.min(max);
        while p >= 1 {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out.sort();
    out
}

/// All partitions of every size up to and including `n`.
pub fn partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(Partition::parse(&[2, 1]).unwrap().parts(), &[2, 1]);
        assert_eq!(Partition::parse(&[3, 3, 0, 0]).unwrap().parts(), &[3, 3]);
        assert!(matches!(
            Partition::parse(&[1, 2]),
            Err(Error::MalformedPartition(_))
        ));
        assert!(matches!(
            Partition::parse(&[-1]),
            Err(Error::MalformedPartition(_))
        ));
        assert!(Partition::parse(&[]).unwrap().is_empty());
    }

    #[test]
    fn conjugate_examples() {
        let p = |v: &[i64]| Partition::parse(v).unwrap();
        assert_eq!(p(&[1, 1]).conjugate(), p(&[2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // derived by swapping box coordinates of (3,1)
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn sizes() {
        let p = |v: &[i64]| Partition::parse(v).unwrap();
        assert_eq!(p(&[2, 1]).size(), 3);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(p(&[4, 4, 2]).size(), 10);
    }

    /// Independent oracle: count standard tableaux by direct enumeration of
    /// box orderings (add boxes one at a time at diagram corners).
    fn syt_enumerate(shape: &Partition) -> u64 {
        fn rec(rows: &mut Vec<u32>, target: &[u32]) -> u64 {
            if rows.iter().zip(target).all(|(a, b)| a == b) && rows.len() == target.len() {
                return 1;
            }
            let mut total = 0;
            for r in 0..target.len().min(rows.len() + 1) {
                let cur = if r < rows.len() { rows[r] } else { 0 };
                if cur < target[r] && (r == 0 || rows[r - 1] > cur) {
                    if r < rows.len() {
                        rows[r] += 1;
                    } else {
                        rows.push(1);
                    }
                    total += rec(rows, target);
                    if rows[r] == 1 && r == rows.len() - 1 {
                        rows.pop();
                    } else {
                        rows[r] -= 1;
                    }
                }
            }
            total
        }
        let mut rows = Vec::new();
        rec(&mut rows, shape.parts())
    }

    #[test]
    fn syt_examples() {
        let p = |v: &[i64]| Partition::parse(v).unwrap();
        assert_eq!(p(&[1, 1]).syt_count().unwrap(), 1);
        // frozen from syt_enumerate
        assert_eq!(syt_enumerate(&p(&[2, 1])), 2);
        assert_eq!(p(&[2, 1]).syt_count().unwrap(), 2);
        assert_eq!(syt_enumerate(&p(&[2, 2])), 2);
        assert_eq!(p(&[2, 2]).syt_count().unwrap(), 2);
        assert_eq!(Partition::empty().syt_count().unwrap(), 1);
    }

    #[test]
    fn syt_matches_enumeration_up_to_6() {
        for lam in partitions_up_to(6) {
            assert_eq!(lam.syt_count().unwrap(), syt_enumerate(&lam), "{lam}");
        }
    }

    #[test]
    fn canonical_order_examples() {
        let p = |v: &[i64]| Partition::parse(v).unwrap();
        assert!(p(&[1, 1]) < p(&[2]));
        assert!(p(&[3]) > p(&[2, 1]));
        assert!(Partition::empty() < p(&[1]));
    }

    #[test]
    fn squared_syt_counts_sum_to_factorial() {
        for n in 0..=8u64 {
            let fact: u64 = (1..=n).product::<u64>().max(1);
            let total: u64 = partitions_of(n)
                .iter()
                .map(|l| {
                    let f = l.syt_count().unwrap();
                    f * f
                })
                .sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    fn arb_partition(max_boxes: u64) -> impl Strategy<Value = Partition> {
        (0..=max_boxes).prop_flat_map(move |n| {
            let all = partitions_of(n);
            (0..all.len()).prop_map(move |k| all[k].clone())
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(lam in arb_partition(10)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn syt_invariant_under_conjugation(lam in arb_partition(10)) {
            prop_assert_eq!(lam.syt_count().unwrap(), lam.conjugate().syt_count().unwrap());
        }

        #[test]
        fn order_is_total_and_consistent(a in arb_partition(8), b in arb_partition(8)) {
            match a.cmp(&b) {
                Ordering::Equal => prop_assert_eq!(&a, &b),
                Ordering::Less => prop_assert_eq!(b.cmp(&a), Ordering::Greater),
                Ordering::Greater => prop_assert_eq!(b.cmp(&a), Ordering::Less),
            }
        }
    }
}
