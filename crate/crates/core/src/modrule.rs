//! Modification rules turning an arbitrary partition into a label for
//! `Sp(2n)` or `O(m)`, together with a homological shift.
//!
//! The symplectic rule has two independent implementations: repeated
//! border-strip removal ([`sp_modification_border`]) and a signed sort of
//! `λ† + σ` under the infinite hyperoctahedral group
//! ([`sp_modification_weyl`]). They must agree everywhere.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{BorderStripRemoval, Partition};
use crate::weyl::statistics;

/// A homological shift, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModIndex {
    Finite(usize),
    Infinite,
}

impl ModIndex {
    pub fn finite(self) -> Option<usize> {
        match self {
            ModIndex::Finite(i) => Some(i),
            ModIndex::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ModIndex::Finite(_))
    }
}

impl fmt::Display for ModIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModIndex::Finite(i) => write!(f, "{i}"),
            ModIndex::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ModIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ModIndex::Finite(i) => s.serialize_u64(*i as u64),
            ModIndex::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModificationResult {
    pub index: ModIndex,
    pub reduced: Option<Partition>,
    /// Strips removed, in order.
    pub strips: Vec<BorderStripRemoval>,
    /// Orthogonal rule only: set when at least one strip was removed, so the
    /// reduced label may differ from the true `O(m)` label by a determinant
    /// twist.
    pub associated: bool,
}

impl ModificationResult {
    fn finite(index: usize, reduced: Partition, strips: Vec<BorderStripRemoval>) -> Self {
        ModificationResult {
            index: ModIndex::Finite(index),
            reduced: Some(reduced),
            strips,
            associated: false,
        }
    }

    fn infinite(strips: Vec<BorderStripRemoval>) -> Self {
        ModificationResult {
            index: ModIndex::Infinite,
            reduced: None,
            strips,
            associated: false,
        }
    }

    /// `(index, reduced)` without the audit trail.
    pub fn outcome(&self) -> (ModIndex, Option<Partition>) {
        (self.index, self.reduced.clone())
    }
}

/// Symplectic rule by border strips: while `ℓ(λ) > n`, remove the strip of
/// length `2(ℓ(λ) − n − 1)` from the first box of the final row and add its
/// column count to the index.
pub fn sp_modification_border(lambda: &Partition, n: usize) -> ModificationResult {
    let mut current = lambda.clone();
    let mut index = 0;
    let mut strips = Vec::new();
    while current.length() > n {
        let r = 2 * (current.length() - n - 1);
        match current.remove_border_strip(r) {
            Some(strip) => {
                index += strip.columns;
                current = strip.remainder.clone();
                strips.push(strip);
            }
            None => return ModificationResult::infinite(strips),
        }
    }
    ModificationResult::finite(index, current, strips)
}

/// A finite stretch `(a_M, …, a_1)` of an integer sequence whose entries
/// beyond the window are `a_j = −(shift + j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteSequenceWindow {
    /// `entries[j - 1] = a_j`.
    entries: Vec<i64>,
    shift: i64,
}

impl InfiniteSequenceWindow {
    /// The window on `λ† + σ` with `σ_j = −(n + j)`.
    pub fn for_partition(lambda: &Partition, n: usize) -> Self {
        let dual = lambda.transpose();
        let size = lambda.part(0) + lambda.length() + n + 2;
        let shift = n as i64;
        let entries = (1..=size)
            .map(|j| dual.part(j - 1) as i64 - shift - j as i64)
            .collect();
        InfiniteSequenceWindow { entries, shift }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a_j` for any `j >= 1`.
    pub fn get(&self, j: usize) -> i64 {
        match self.entries.get(j - 1) {
            Some(&a) => a,
            None => -(self.shift + j as i64),
        }
    }

    /// Whether some non-identity signed permutation fixes the sequence: an
    /// entry is zero or two entries share an absolute value.
    pub fn has_stabilizer(&self) -> bool {
        let mut abs: Vec<i64> = self.entries.iter().map(|a| a.abs()).collect();
        abs.sort_unstable();
        abs.first() == Some(&0) || abs.windows(2).any(|w| w[0] == w[1])
    }
}

/// Symplectic rule by the dot action of the infinite hyperoctahedral group on
/// `λ† + σ`.
pub fn sp_modification_weyl(lambda: &Partition, n: usize) -> Result<ModificationResult> {
    if lambda.length() <= n {
        return Ok(ModificationResult::finite(0, lambda.clone(), Vec::new()));
    }
    let window = InfiniteSequenceWindow::for_partition(lambda, n);
    let m = window.len();
    let bound = n as i64 + m as i64;
    if window.entries.iter().any(|a| a.abs() > bound) {
        return Err(Error::WindowOverflow(lambda.to_string()));
    }
    if window.has_stabilizer() {
        return Ok(ModificationResult::infinite(Vec::new()));
    }

    // The sorted sequence is all negative with a_1 closest to zero.
    let mut abs: Vec<i64> = window.entries.iter().map(|a| a.abs()).collect();
    abs.sort_unstable();
    if abs[m - 1] != bound {
        return Err(Error::WindowOverflow(lambda.to_string()));
    }
    let dual_parts: Vec<usize> = abs
        .iter()
        .enumerate()
        .map(|(i, &a)| (n as i64 + i as i64 + 1 - a) as usize)
        .collect();
    let reduced = Partition::new(dual_parts)
        .map_err(|_| Error::WindowOverflow(lambda.to_string()))?
        .transpose();

    // Positions read left to right as (a_M, …, a_1); the sorting element has
    // length inv + neg + nsp of the negated window.
    let negated: Vec<i64> = window.entries.iter().rev().map(|a| -a).collect();
    let s = statistics(&negated);
    Ok(ModificationResult::finite(
        s.inv + s.neg + s.nsp,
        reduced,
        Vec::new(),
    ))
}

/// Orthogonal rule for `O(m)`: while `λ†_1 + λ†_2 > m`, remove the strip of
/// length `2ℓ(λ) − m` from the first box of the final row and add its column
/// count minus one to the index.
pub fn o_modification_border(lambda: &Partition, m: usize) -> ModificationResult {
    let mut current = lambda.clone();
    let mut index = 0;
    let mut strips = Vec::new();
    loop {
        let dual = current.transpose();
        if dual.part(0) + dual.part(1) <= m {
            break;
        }
        // 2ℓ(λ) > m here since λ†_1 = ℓ(λ) >= λ†_2
        let r = 2 * current.length() - m;
        match current.remove_border_strip(r) {
            Some(strip) => {
                index += strip.columns - 1;
                current = strip.remainder.clone();
                strips.push(strip);
            }
            None => {
                let mut res = ModificationResult::infinite(strips);
                res.associated = !res.strips.is_empty();
                return res;
            }
        }
    }
    let associated = !strips.is_empty();
    let mut res = ModificationResult::finite(index, current, strips);
    res.associated = associated;
    res
}

/// Whether `λ` labels an irreducible of `O(m)`.
pub fn is_orthogonal_label(lambda: &Partition, m: usize) -> bool {
    let dual = lambda.transpose();
    dual.part(0) + dual.part(1) <= m
}

/// The label tensored with the determinant: the first column of length
/// `c` is replaced by one of length `m − c`.
pub fn associate(lambda: &Partition, m: usize) -> Result<Partition> {
    if !is_orthogonal_label(lambda, m) {
        return Err(Error::InvalidLabel {
            group: format!("O({m})"),
            label: lambda.to_string(),
        });
    }
    let mut dual = lambda.transpose().parts().to_vec();
    let first = m - dual.first().copied().unwrap_or(0);
    if dual.is_empty() {
        dual.push(first);
    } else {
        dual[0] = first;
    }
    Ok(Partition::new(dual)
        .expect("associate column dominates the second column")
        .transpose())
}

/// The `SO(m)` highest weight carried by the `O(m)` label (a partition with at
/// most `m / 2` parts).
pub fn so_label(lambda: &Partition, m: usize) -> Result<Partition> {
    if lambda.length() <= m / 2 {
        if !is_orthogonal_label(lambda, m) {
            return Err(Error::InvalidLabel {
                group: format!("O({m})"),
                label: lambda.to_string(),
            });
        }
        Ok(lambda.clone())
    } else {
        associate(lambda, m)
    }
}
