//! Integer partitions as weakly decreasing rows, plus the rectangle families
//! used to carve out bounded sublattices.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its positive row lengths, longest first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        let decreasing = rows.windows(2).all(|w| w[0] >= w[1]);
        let positive = rows.last().is_none_or(|&r| r > 0);
        if decreasing && positive {
            Ok(Partition { rows })
        } else {
            Err(Error::MalformedPartition)
        }
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of row `i` (0-indexed), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.row(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::with_capacity(self.first_row());
        for c in 1..=self.first_row() {
            cols.push(self.rows.iter().take_while(|&&r| r >= c).count());
        }
        Partition { rows: cols }
    }

    /// Hook length of the 1-indexed cell (row, col): arm + leg + 1.
    pub fn hook(&self, row: usize, col: usize) -> Result<usize> {
        if row == 0 || col == 0 || col > self.row(row - 1) {
            return Err(Error::CellOutsideDiagram { row, col });
        }
        let arm = self.row(row - 1) - col;
        let leg = self.rows[row..].iter().take_while(|&&r| r >= col).count();
        Ok(arm + leg + 1)
    }

    /// All 1-indexed cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |c| (i + 1, c)))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .rows
            .iter()
            .enumerate()
            .all(|(i, &r)| self.row(i) >= r)
    }

    /// Row-multiset union: all rows of both partitions, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut rows: Vec<usize> = self.rows.iter().chain(&other.rows).copied().collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition { rows }
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first_row() <= k
    }

    pub(crate) fn with_row_incremented(&self, i: usize) -> Partition {
        let mut rows = self.rows.clone();
        if i == rows.len() {
            rows.push(1);
        } else {
            rows[i] += 1;
        }
        Partition { rows }
    }

    pub(crate) fn with_row_decremented(&self, i: usize) -> Partition {
        let mut rows = self.rows.clone();
        rows[i] -= 1;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition { rows }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rows.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses "3,1,1"; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows: Vec<usize> = s
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(rows).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

/// The rectangles (i^(k+1-i)) for i = 1..=k: i columns, k+1-i rows.
/// Each has largest hook exactly k.
pub fn rectangles(k: usize) -> Vec<Partition> {
    (1..=k)
        .map(|i| Partition {
            rows: vec![i; k + 1 - i],
        })
        .collect()
}

/// Distinct row-unions of exactly m-1 rectangles, with repetition allowed.
pub fn rectangle_unions(k: usize, m: usize) -> Vec<Partition> {
    assert!(m >= 1, "dilation level must be at least 1");
    let rects = rectangles(k);
    let mut unions: Vec<Partition> = (0..rects.len())
        .combinations_with_replacement(m - 1)
        .map(|choice| {
            choice
                .into_iter()
                .fold(Partition::empty(), |acc, i| acc.union(&rects[i]))
        })
        .collect();
    unions.sort();
    unions.dedup();
    unions
}

/// All partitions with at most `max_rows` rows, each of length at most `max_cols`.
pub fn partitions_in_box(max_rows: usize, max_cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    fn rec(rows: &mut Vec<usize>, left: usize, bound: usize, out: &mut Vec<Partition>) {
        out.push(Partition { rows: rows.clone() });
        if left == 0 {
            return;
        }
        for r in (1..=bound).rev() {
            rows.push(r);
            rec(rows, left - 1, r, out);
            rows.pop();
        }
    }
    rec(&mut rows, max_rows, max_cols, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All partitions of `n` whose parts are at most `k`.
pub fn k_bounded_partitions(n: usize, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    fn rec(rows: &mut Vec<usize>, left: usize, bound: usize, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { rows: rows.clone() });
            return;
        }
        for r in (1..=bound.min(left)).rev() {
            rows.push(r);
            rec(rows, left - r, r, out);
            rows.pop();
        }
    }
    rec(&mut rows, n, k, &mut out);
    out.sort();
    out
}
