//! Semistandard Young tableaux over the positive integers: enumeration,
//! weights, reading words, the word order, and Kostka numbers.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A semistandard filling of a Young diagram by positive integers.
///
/// Rows weakly increase left to right and columns strictly increase top to
/// bottom. The derived order compares shapes first and then rows
/// lexicographically, which for a common shape is exactly the lexicographic
/// order on reading words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// Entry multiplicities: `counts[k - 1]` is the number of entries equal to `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Weight(Vec<usize>);

impl Weight {
    /// Trailing zeros are trimmed.
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Weight(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Some` when the counts are weakly decreasing with no interior zeros.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl From<Vec<usize>> for Weight {
    fn from(counts: Vec<usize>) -> Self {
        Weight::new(counts)
    }
}

impl From<Weight> for Vec<usize> {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl From<&Partition> for Weight {
    fn from(p: &Partition) -> Self {
        Weight(p.parts().to_vec())
    }
}

impl Tableau {
    /// Builds a tableau from its rows, checking shape and semistandardness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("row lengths: {e}")))?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {i} is not weakly increasing"
                )));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.iter().zip(above).any(|(below, up)| below <= up) {
                    return Err(Error::InvalidTableau(format!(
                        "column strictness fails between rows {} and {i}",
                        i - 1
                    )));
                }
            }
        }
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Tableau { shape, rows })
    }

    fn from_rows_unchecked(shape: &Partition, rows: Vec<Vec<usize>>) -> Self {
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    /// Row `i` filled with `i + 1`.
    pub fn superstandard(shape: &Partition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i + 1; len])
            .collect();
        Tableau::from_rows_unchecked(shape, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn cell_count(&self) -> usize {
        self.shape.size()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Reading word: rows left to right, top row first.
    pub fn word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn weight(&self) -> Weight {
        let mut counts = vec![0; self.max_entry()];
        for &e in self.rows.iter().flatten() {
            counts[e - 1] += 1;
        }
        Weight::new(counts)
    }

    /// Replaces one entry, re-validating the result.
    pub fn with_entry(&self, row: usize, col: usize, value: usize) -> Result<Self> {
        let mut rows = self.rows.clone();
        let slot = rows
            .get_mut(row)
            .and_then(|r| r.get_mut(col))
            .ok_or_else(|| Error::InvalidTableau(format!("no cell ({row}, {col})")))?;
        *slot = value;
        Tableau::new(rows)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// Row-major debug form, rows joined by `/`: `112/3`. Entries are separated
/// by commas when any of them has more than one digit.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.max_entry() >= 10 { "," } else { "" };
        let rendered: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&rendered.join("/"))
    }
}

/// Word order on tableaux of a common shape.
pub fn tableau_cmp(t: &Tableau, u: &Tableau) -> Result<Ordering> {
    if t.shape != u.shape {
        return Err(Error::ShapeMismatch {
            left: t.shape.to_string(),
            right: u.shape.to_string(),
        });
    }
    Ok(t.word().cmp(&u.word()))
}

pub fn word(t: &Tableau) -> Vec<usize> {
    t.word()
}

pub fn weight(t: &Tableau) -> Weight {
    t.weight()
}

/// Depth-first filler shared by the enumerators and counters.
///
/// Cells are visited in row-major order; each entry is bounded below by its
/// left and upper neighbours and above by `max_entry` less the number of
/// cells that still have to fit under it in the same column.
struct Filler<'a> {
    shape: &'a Partition,
    col_heights: Vec<usize>,
    max_entry: usize,
    budget: Option<Vec<usize>>,
    rows: Vec<Vec<usize>>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a Partition, max_entry: usize, budget: Option<Vec<usize>>) -> Self {
        let width = shape.part(0);
        let col_heights = (0..width)
            .map(|j| shape.parts().iter().take_while(|&&p| p > j).count())
            .collect();
        Filler {
            shape,
            col_heights,
            max_entry,
            budget,
            rows: shape
                .parts()
                .iter()
                .map(|&p| Vec::with_capacity(p))
                .collect(),
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if self.shape.len() > self.max_entry {
            return;
        }
        self.step(0, 0, visit);
    }

    fn step(&mut self, row: usize, col: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if row == self.shape.len() {
            visit(&self.rows);
            return;
        }
        let (next_row, next_col) = if col + 1 == self.shape.part(row) {
            (row + 1, 0)
        } else {
            (row, col + 1)
        };
        let mut low = 1;
        if col > 0 {
            low = low.max(self.rows[row][col - 1]);
        }
        if row > 0 {
            low = low.max(self.rows[row - 1][col] + 1);
        }
        let below = self.col_heights[col] - row - 1;
        let Some(high) = self.max_entry.checked_sub(below) else {
            return;
        };
        for value in low..=high {
            if let Some(budget) = self.budget.as_mut() {
                if budget[value - 1] == 0 {
                    continue;
                }
                budget[value - 1] -= 1;
            }
            self.rows[row].push(value);
            self.step(next_row, next_col, visit);
            self.rows[row].pop();
            if let Some(budget) = self.budget.as_mut() {
                budget[value - 1] += 1;
            }
        }
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`, in
/// increasing word order.
pub fn enumerate_ssyt_bounded(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    Filler::new(shape, max_entry, None)
        .run(&mut |rows| out.push(Tableau::from_rows_unchecked(shape, rows.to_vec())));
    out
}

/// Number of semistandard tableaux of `shape` with entries in `1..=max_entry`.
pub fn count_ssyt_bounded(shape: &Partition, max_entry: usize) -> u64 {
    let mut count = 0;
    Filler::new(shape, max_entry, None).run(&mut |_| count += 1);
    count
}

/// All semistandard tableaux of `shape` with weight exactly `w`, in
/// increasing word order. Empty when the sizes disagree.
pub fn enumerate_ssyt_weight(shape: &Partition, w: &Weight) -> Vec<Tableau> {
    let mut out = Vec::new();
    if w.total() == shape.size() {
        Filler::new(shape, w.counts().len(), Some(w.counts().to_vec()))
            .run(&mut |rows| out.push(Tableau::from_rows_unchecked(shape, rows.to_vec())));
    }
    out
}

/// All semistandard tableaux of `shape` in which each value `k` occurs at
/// most `capacity[k - 1]` times, in increasing word order.
pub fn enumerate_ssyt_within(shape: &Partition, capacity: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    Filler::new(shape, capacity.len(), Some(capacity.to_vec()))
        .run(&mut |rows| out.push(Tableau::from_rows_unchecked(shape, rows.to_vec())));
    out
}

pub fn count_ssyt_weight(shape: &Partition, w: &Weight) -> u64 {
    let mut count = 0;
    if w.total() == shape.size() {
        Filler::new(shape, w.counts().len(), Some(w.counts().to_vec())).run(&mut |_| count += 1);
    }
    count
}

/// The Kostka number: semistandard tableaux of shape `lambda` and weight `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(count_ssyt_weight(lambda, &Weight::from(mu)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use itertools::Itertools;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    // Every filling of `shape` by 1..=max_entry, semistandard or not.
    fn brute_force(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
        let cells = shape.size();
        (0..cells)
            .map(|_| 1..=max_entry)
            .multi_cartesian_product()
            .filter_map(|flat| {
                let mut it = flat.into_iter();
                let rows = shape
                    .parts()
                    .iter()
                    .map(|&len| it.by_ref().take(len).collect())
                    .collect();
                Tableau::new(rows).ok()
            })
            .collect()
    }

    #[test]
    fn words_from_the_worked_example() {
        let t1 = t(&[&[1, 1, 2], &[3]]);
        let t2 = t(&[&[1, 1, 2], &[4]]);
        let t3 = t(&[&[1, 2, 2], &[2]]);
        assert_eq!(word(&t1), vec![1, 1, 2, 3]);
        assert_eq!(word(&t3), vec![1, 2, 2, 2]);
        assert_eq!(word(&t(&[&[5]])), vec![5]);
        assert_eq!(tableau_cmp(&t1, &t2).unwrap(), Ordering::Less);
        assert_eq!(tableau_cmp(&t2, &t3).unwrap(), Ordering::Less);
        assert_eq!(tableau_cmp(&t1, &t1).unwrap(), Ordering::Equal);
        assert!(tableau_cmp(&t1, &t(&[&[1, 1]])).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&t(&[&[1, 1, 2], &[3]])), Weight::new(vec![2, 1, 1]));
        assert_eq!(weight(&t(&[&[1, 1], &[2, 2]])), Weight::new(vec![2, 2]));
        assert_eq!(weight(&t(&[&[1, 2, 2], &[2]])), Weight::new(vec![1, 3]));
        assert_eq!(weight(&t(&[&[2, 3]])).counts(), &[0, 1, 1]);
    }

    #[test]
    fn validation_rejects_non_semistandard() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![0]]).is_err());
    }

    #[test]
    fn bounded_enumeration_examples() {
        let two = enumerate_ssyt_bounded(&p(&[2]), 2);
        assert_eq!(two, vec![t(&[&[1, 1]]), t(&[&[1, 2]]), t(&[&[2, 2]])]);
        assert_eq!(two, brute_force(&p(&[2]), 2));
        assert!(enumerate_ssyt_bounded(&p(&[1, 1]), 1).is_empty());
        let largest = two
            .iter()
            .max_by_key(|t| std::cmp::Reverse(t.word()))
            .unwrap();
        assert_eq!(largest, &t(&[&[1, 1]]));
        assert_eq!(largest.weight(), Weight::new(vec![2]));
    }

    #[test]
    fn bounded_enumeration_matches_brute_force() {
        for n in 0..=4 {
            for shape in partitions_of(n).unwrap() {
                for m in 1..=3 {
                    let mut brute = brute_force(&shape, m);
                    brute.sort();
                    assert_eq!(enumerate_ssyt_bounded(&shape, m), brute, "{shape} <= {m}");
                    assert_eq!(count_ssyt_bounded(&shape, m), brute.len() as u64);
                }
            }
        }
    }

    #[test]
    fn capacity_enumeration_matches_filter() {
        for n in 0..=5 {
            for shape in partitions_of(n).unwrap() {
                for cap in [vec![2, 1, 2], vec![1, 1, 1, 1, 1], vec![3, 0, 2, 1]] {
                    let filtered: Vec<Tableau> = enumerate_ssyt_bounded(&shape, cap.len())
                        .into_iter()
                        .filter(|t| t.weight().counts().iter().zip(&cap).all(|(w, c)| w <= c))
                        .collect();
                    assert_eq!(
                        enumerate_ssyt_within(&shape, &cap),
                        filtered,
                        "{shape} within {cap:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_enumeration_examples() {
        let w111 = Weight::new(vec![1, 1, 1]);
        assert_eq!(enumerate_ssyt_weight(&p(&[2, 1]), &w111).len(), 2);
        let brute = brute_force(&p(&[2, 1]), 3)
            .into_iter()
            .filter(|t| t.weight() == w111)
            .count();
        assert_eq!(brute, 2);
        let lam = p(&[3, 2, 2, 1]);
        assert_eq!(
            enumerate_ssyt_weight(&lam, &Weight::from(&lam)),
            vec![Tableau::superstandard(&lam)]
        );
        assert!(enumerate_ssyt_weight(&p(&[1, 1]), &Weight::new(vec![2])).is_empty());
        assert!(enumerate_ssyt_weight(&p(&[2]), &Weight::new(vec![1])).is_empty());
        // compositions are allowed as weights
        assert_eq!(
            enumerate_ssyt_weight(&p(&[2]), &Weight::new(vec![0, 1, 1])),
            vec![t(&[&[2, 3]])]
        );
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        for n in 1..=7 {
            let all = partitions_of(n).unwrap();
            for (i, lam) in all.iter().enumerate() {
                assert_eq!(kostka(lam, lam).unwrap(), 1);
                for mu in &all[..i] {
                    // lam < mu
                    assert_eq!(kostka(lam, mu).unwrap(), 0, "K[{lam}][{mu}]");
                }
            }
        }
        assert!(kostka(&p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn bounded_count_splits_into_weight_fibers() {
        for n in 0..=6 {
            for shape in partitions_of(n).unwrap() {
                for m in 1..=5 {
                    let total = count_ssyt_bounded(&shape, m);
                    let fibers = weight_fiber_total(&shape, m);
                    assert_eq!(total, fibers, "{shape} <= {m}");
                }
            }
        }
    }

    // Sum of #SSTab(shape; w) over all compositions w of |shape| with m parts.
    fn weight_fiber_total(shape: &Partition, m: usize) -> u64 {
        let n = shape.size();
        compositions(n, m)
            .iter()
            .map(|c| count_ssyt_weight(shape, &Weight::new(c.clone())))
            .sum()
    }

    fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        (0..=n)
            .flat_map(|first| {
                compositions(n - first, parts - 1)
                    .into_iter()
                    .map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
            })
            .collect()
    }

    #[test]
    fn tableau_generating_function_matches_kostka_expansion() {
        // sum_{T <= m} x^T must equal sum_mu K[lambda][mu] m_mu(x_1..x_m):
        // every composition of n into m parts appears with multiplicity
        // K[lambda][sorted(composition)].
        for n in 0..=6 {
            for shape in partitions_of(n).unwrap() {
                for m in 1..=5 {
                    let mut from_tableaux = std::collections::BTreeMap::new();
                    for tab in enumerate_ssyt_bounded(&shape, m) {
                        let mut c = tab.weight().counts().to_vec();
                        c.resize(m, 0);
                        *from_tableaux.entry(c).or_insert(0u64) += 1;
                    }
                    let mut from_kostka = std::collections::BTreeMap::new();
                    for c in compositions(n, m) {
                        let sorted = Partition::from_unsorted(c.clone());
                        let k = kostka(&shape, &sorted).unwrap();
                        if k > 0 {
                            from_kostka.insert(c, k);
                        }
                    }
                    assert_eq!(from_tableaux, from_kostka, "{shape} in {m} variables");
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        let tab = t(&[&[1, 1, 2], &[3]]);
        assert_eq!(tab.to_string(), "112/3");
        assert_eq!(t(&[&[1, 10]]).to_string(), "1,10");
        assert_eq!(serde_json::to_string(&tab).unwrap(), "[[1,1,2],[3]]");
        let back: Tableau = serde_json::from_str("[[1,1,2],[3]]").unwrap();
        assert_eq!(back, tab);
        assert!(serde_json::from_str::<Tableau>("[[2,1]]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn tableau_triple() -> impl Strategy<Value = (Tableau, Tableau, Tableau)> {
            let shapes: Vec<Partition> = (1..=5)
                .flat_map(|n| partitions_of(n).unwrap())
                .filter(|s| s.len() <= 4)
                .collect();
            (0..shapes.len()).prop_flat_map(move |i| {
                let all = enumerate_ssyt_bounded(&shapes[i], 4);
                let len = all.len();
                (0..len, 0..len, 0..len)
                    .prop_map(move |(a, b, c)| (all[a].clone(), all[b].clone(), all[c].clone()))
            })
        }

        proptest! {
            #[test]
            fn word_order_is_total((a, b, c) in tableau_triple()) {
                let ab = tableau_cmp(&a, &b).unwrap();
                prop_assert_eq!(ab.reverse(), tableau_cmp(&b, &a).unwrap());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(ab, a.cmp(&b));
                let bc = tableau_cmp(&b, &c).unwrap();
                if ab != Ordering::Greater && bc != Ordering::Greater {
                    prop_assert_ne!(tableau_cmp(&a, &c).unwrap(), Ordering::Greater);
                }
            }
        }
    }
}
