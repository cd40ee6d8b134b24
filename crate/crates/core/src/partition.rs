//! Young-diagram arithmetic: transposes, diagram statistics, border strips
//! and lattice-path encodings inside rectangles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so `(2, 1, 0)` and `(2, 1)` are the same value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The column partition `(1^i)`.
    pub fn column(i: usize) -> Self {
        Partition { parts: vec![1; i] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Side of the largest square fitting in the diagram (the Durfee rank).
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.transpose()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            length: self.length(),
            size: self.size(),
            rank: self.rank(),
            self_dual: self.is_self_dual(),
        }
    }

    /// Whether `(row, col)` (both 0-based) is a cell of the diagram.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.part(row) > col
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.length() <= rows && self.part(0) <= cols
    }

    /// Cells of the skew diagram `self / inner`, row by row.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (row, &p) in self.parts.iter().enumerate() {
            for col in inner.part(row)..p {
                cells.push((row, col));
            }
        }
        cells
    }

    /// Removes the border strip of `r` cells that starts at the first box of
    /// the final row and follows the rim towards the top right.
    ///
    /// Returns `None` when `r == 0`, when the rim is shorter than `r`, or when
    /// the complement is not a partition.
    pub fn remove_border_strip(&self, r: usize) -> Option<BorderStripRemoval> {
        if r == 0 || self.is_empty() {
            return None;
        }
        let mut row = self.length() - 1;
        let mut col = 0;
        let mut cells = Vec::with_capacity(r);
        cells.push((row, col));
        while cells.len() < r {
            if self.contains_cell(row, col + 1) {
                col += 1;
            } else if row > 0 {
                row -= 1;
            } else {
                return None;
            }
            cells.push((row, col));
        }

        // cells are produced bottom row first; within a row they run left to right
        let mut remainder = self.parts.clone();
        let mut rows = 0;
        let mut i = 0;
        while i < cells.len() {
            let r0 = cells[i].0;
            let start = cells[i].1;
            let mut end = start;
            while i < cells.len() && cells[i].0 == r0 {
                end = cells[i].1;
                i += 1;
            }
            if end + 1 != self.parts[r0] {
                return None;
            }
            remainder[r0] = start;
            rows += 1;
        }
        let remainder = Partition::new(remainder).ok()?;
        let columns = cells.last().map(|c| c.1).unwrap_or(0) + 1;
        Some(BorderStripRemoval {
            remainder,
            columns,
            rows,
        })
    }

    /// Encodes the diagram as a lattice path in the `n x k` rectangle.
    pub fn to_lattice_path(&self, n: usize, k: usize) -> Result<LatticePath> {
        if !self.fits_in(n, k) {
            return Err(Error::OutsideRectangle {
                partition: self.to_string(),
                rows: n,
                cols: k,
            });
        }
        let ups: Vec<usize> = (1..=n).map(|i| i + self.part(n - i)).collect();
        let mut rights = Vec::with_capacity(k);
        let mut next_up = ups.iter().peekable();
        for pos in 1..=n + k {
            if next_up.peek() == Some(&&pos) {
                next_up.next();
            } else {
                rights.push(pos);
            }
        }
        Ok(LatticePath { ups, rights })
    }

    pub fn from_lattice_path(path: &LatticePath) -> Partition {
        let n = path.ups.len();
        let parts = (0..n)
            .map(|row| path.ups[n - 1 - row] - (n - row))
            .collect();
        Partition::new(parts).expect("lattice path ups are strictly increasing")
    }

    /// All partitions whose diagram fits in `rows x cols`, in reverse
    /// lexicographic order starting from the full rectangle.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).expect("prefix is decreasing"));
            if prefix.len() == rows {
                return;
            }
            for p in (1..=max).rev() {
                prefix.push(p);
                go(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of `size`.
    pub fn of_size(size: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::new(prefix.clone()).expect("prefix is decreasing"));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// The parts padded with zeros to `len` entries, as signed integers.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len).map(|i| self.part(i) as i64).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub length: usize,
    pub size: usize,
    pub rank: usize,
    pub self_dual: bool,
}

/// Outcome of removing a border strip: what is left, and how many columns
/// and rows the strip occupied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorderStripRemoval {
    pub remainder: Partition,
    pub columns: usize,
    pub rows: usize,
}

impl BorderStripRemoval {
    pub fn len(&self) -> usize {
        self.columns + self.rows - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A monotone path from the bottom-left to the top-right corner of an
/// `n x k` rectangle, recorded by the 1-based step positions of its up and
/// right moves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePath {
    ups: Vec<usize>,
    rights: Vec<usize>,
}

impl LatticePath {
    pub fn new(ups: Vec<usize>, rights: Vec<usize>) -> Result<Self> {
        let total = ups.len() + rights.len();
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&ups) || !increasing(&rights) {
            return Err(Error::InvalidLatticePath(
                "step positions must be strictly increasing".into(),
            ));
        }
        let mut seen = vec![false; total + 1];
        for &p in ups.iter().chain(&rights) {
            if p == 0 || p > total || seen[p] {
                return Err(Error::InvalidLatticePath(format!(
                    "positions must partition 1..={total}"
                )));
            }
            seen[p] = true;
        }
        Ok(LatticePath { ups, rights })
    }

    pub fn ups(&self) -> &[usize] {
        &self.ups
    }

    pub fn rights(&self) -> &[usize] {
        &self.rights
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the JSON-array syntax `[5,3,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = serde_json::from_str(s.trim())
            .map_err(|e| Error::InvalidPartition(format!("`{s}`: {e}")))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building partitions in tests and examples.
#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),*]).expect("valid partition literal")
    };
}
