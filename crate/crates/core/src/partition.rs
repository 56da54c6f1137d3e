//! Integer partitions, the reverse lexicographic order, and enumeration of
//! all partitions of `n` in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are never stored, so two partitions are equal exactly when
/// their part vectors are equal. The derived `Ord` compares part vectors
/// lexicographically, which on partitions of equal size is the reverse
/// lexicographic order (a shorter vector is a zero-padded one). Use
/// [`revlex_cmp`] when sizes may differ and that should be an error.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` and drops trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Sorts an arbitrary multiset of non-negative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (non-zero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Cells `(row, col)` of the Young diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the comma-separated text form, e.g. `"3,1"`. The empty string
/// (or `"[]"`) is the empty partition. Exponent shorthand is rejected.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| parse_err(format!("{tok:?} is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(parse_err("parts must be positive".into()));
        }
        Partition::new(parts).map_err(|e| parse_err(e.to_string()))
    }
}

/// Compares two partitions of the same size in reverse lexicographic order:
/// at the first index where the zero-padded sequences differ, the larger part
/// wins.
pub fn revlex_cmp(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(a.parts.cmp(&b.parts))
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_with(n, &Limits::default())
}

pub fn partitions_of_with(n: usize, limits: &Limits) -> Result<Vec<Partition>> {
    limits.check_partition_size(n)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

// Trying the largest admissible part first yields revlex-descending output.
fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Euler's pentagonal-number recurrence, independent of the enumerator.
    fn pentagonal_count(n: usize) -> i64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                table[i] += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    table[i] += sign * table[i - g2];
                }
                k += 1;
            }
        }
        table[n]
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_revlex_order() {
        let expected = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(partitions_of(4).unwrap(), expected);
        assert_eq!(pentagonal_count(4), 5);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        assert_eq!(partitions_of(10).unwrap().len(), 42);
        for n in 0..=20 {
            assert_eq!(
                partitions_of(n).unwrap().len() as i64,
                pentagonal_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        for n in 0..=12 {
            let all = partitions_of(n).unwrap();
            for w in all.windows(2) {
                assert_eq!(revlex_cmp(&w[0], &w[1]).unwrap(), Ordering::Greater);
            }
            assert!(all.iter().all(|q| q.size() == n));
            if n > 0 {
                assert_eq!(all.first().unwrap(), &Partition::row(n));
                assert_eq!(all.last().unwrap(), &Partition::column(n));
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(partitions_of(30).is_ok());
        assert!(matches!(
            partitions_of(31),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn revlex_examples() {
        assert_eq!(
            revlex_cmp(&p(&[4]), &p(&[3, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            revlex_cmp(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            revlex_cmp(&p(&[3, 1]), &p(&[3, 1])).unwrap(),
            Ordering::Equal
        );
        assert!(matches!(
            revlex_cmp(&p(&[3]), &p(&[2, 1, 1])),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn construction_validates() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(p(&[3, 2, 2]).size(), 7);
        assert_eq!(p(&[3, 2, 2]).len(), 3);
    }

    #[test]
    fn text_form() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(" 2, 2 ".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1^3".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[12, 7, 1]).to_string(), "12,7,1");
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[2, 2])).unwrap(), "[2,2]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
            let all = partitions_of(n).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        }

        fn triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
            (1usize..=15).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))
        }

        proptest! {
            #[test]
            fn revlex_is_a_total_order((a, b, c) in triple()) {
                let ab = revlex_cmp(&a, &b).unwrap();
                prop_assert_eq!(ab.reverse(), revlex_cmp(&b, &a).unwrap());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                let bc = revlex_cmp(&b, &c).unwrap();
                if ab != Ordering::Greater && bc != Ordering::Greater {
                    prop_assert_ne!(revlex_cmp(&a, &c).unwrap(), Ordering::Greater);
                }
            }

            #[test]
            fn revlex_agrees_with_padded_comparison((a, b, _c) in triple()) {
                let width = a.len().max(b.len());
                let pa: Vec<usize> = (0..width).map(|i| a.part(i)).collect();
                let pb: Vec<usize> = (0..width).map(|i| b.part(i)).collect();
                prop_assert_eq!(revlex_cmp(&a, &b).unwrap(), pa.cmp(&pb));
            }
        }
    }
}
