//! Classical Weyl groups as signed permutations acting on ρ-vectors.
//!
//! An element is stored by where it sends each coordinate: `image[i] = ±j`
//! means position `i` of `w(x)` holds `±x_j` (1-based `j`). All length and
//! coset formulas read off the sequence `w(ρ)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest rank accepted by the Cayley-graph search.
pub const BFS_MAX_RANK: usize = 5;
/// Largest total rank accepted by coset enumeration.
pub const ENUMERATION_MAX_RANK: usize = 12;
/// Largest rank for the brute-force coset filter.
pub const BRUTE_MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WeylType {
    /// Signed permutations of `N` letters.
    BC(usize),
    /// Signed permutations of `N` letters with an even number of sign changes.
    D(usize),
    /// Permutations of `N` letters.
    A(usize),
}

impl WeylType {
    pub fn rank(self) -> usize {
        match self {
            WeylType::BC(n) | WeylType::D(n) | WeylType::A(n) => n,
        }
    }

    fn check(self) -> Result<()> {
        if self.rank() == 0 {
            return Err(Error::InvalidParameters(format!(
                "{self:?} needs rank >= 1"
            )));
        }
        Ok(())
    }
}

/// The four ρ-conventions in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeylFamily {
    Sp,
    OOdd,
    OEven,
    Gl,
}

impl WeylFamily {
    pub fn weyl_type(self, rank: usize) -> WeylType {
        match self {
            WeylFamily::Sp | WeylFamily::OOdd => WeylType::BC(rank),
            WeylFamily::OEven => WeylType::D(rank),
            WeylFamily::Gl => WeylType::A(rank),
        }
    }
}

impl std::str::FromStr for WeylFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sp" => Ok(WeylFamily::Sp),
            "o_odd" => Ok(WeylFamily::OOdd),
            "o_even" => Ok(WeylFamily::OEven),
            "gl" => Ok(WeylFamily::Gl),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Block sizes `(k, n, l)`: the E-block, the V-block and (type A only) the
/// F-block. For the orthogonal families `n = floor(dim V / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Blocks {
    pub k: usize,
    pub n: usize,
    pub l: usize,
}

impl Blocks {
    pub fn new(k: usize, n: usize, l: usize) -> Self {
        Blocks { k, n, l }
    }

    pub fn total(&self) -> usize {
        self.k + self.n + self.l
    }
}

/// A strictly decreasing vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoVector(Vec<Rational64>);

impl RhoVector {
    pub fn new(entries: Vec<Rational64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameters(
                "rho must be strictly decreasing".into(),
            ));
        }
        Ok(RhoVector(entries))
    }

    pub fn entries(&self) -> &[Rational64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// ρ for the given family. The F-block size is ignored outside type A.
pub fn rho(family: WeylFamily, blocks: Blocks) -> Result<RhoVector> {
    let rank = match family {
        WeylFamily::Gl => blocks.total(),
        _ => blocks.k + blocks.n,
    };
    if rank == 0 {
        return Err(Error::InvalidParameters("empty rho vector".into()));
    }
    let r = rank as i64;
    let entries = match family {
        WeylFamily::Sp => (1..=r).rev().map(Rational64::from_integer).collect(),
        WeylFamily::OOdd => (1..=r)
            .rev()
            .map(|i| Rational64::new(2 * i - 1, 2))
            .collect(),
        WeylFamily::OEven | WeylFamily::Gl => (0..r).rev().map(Rational64::from_integer).collect(),
    };
    RhoVector::new(entries)
}

/// Inversions, negative entries and negative pairs of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub inv: usize,
    pub neg: usize,
    pub nsp: usize,
}

pub fn statistics<T>(v: &[T]) -> Statistics
where
    T: Copy + Ord + Zero + Add<Output = T>,
{
    let zero = T::zero();
    let mut stats = Statistics {
        inv: 0,
        neg: v.iter().filter(|&&x| x < zero).count(),
        nsp: 0,
    };
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            if a < b {
                stats.inv += 1;
            }
            if a + b < zero {
                stats.nsp += 1;
            }
        }
    }
    stats
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    ty: WeylType,
    image: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(ty: WeylType, image: Vec<i32>) -> Result<Self> {
        ty.check()?;
        let n = ty.rank();
        if image.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: image.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &x in &image {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidParameters(format!(
                    "{image:?} is not a signed permutation of 1..={n}"
                )));
            }
            seen[a] = true;
        }
        let negatives = image.iter().filter(|&&x| x < 0).count();
        match ty {
            WeylType::A(_) if negatives > 0 => Err(Error::InvalidParameters(
                "type A elements carry no signs".into(),
            )),
            WeylType::D(_) if negatives % 2 == 1 => Err(Error::InvalidParameters(
                "type D elements need an even number of signs".into(),
            )),
            _ => Ok(SignedPermutation { ty, image }),
        }
    }

    pub fn identity(ty: WeylType) -> Self {
        SignedPermutation {
            ty,
            image: (1..=ty.rank() as i32).collect(),
        }
    }

    /// Recovers the element from a prescribed `w(ρ)`. A zero entry is read
    /// with a positive sign.
    pub fn from_rho_image(ty: WeylType, values: &[Rational64], rho: &RhoVector) -> Result<Self> {
        let image = values
            .iter()
            .map(|v| {
                let j = rho
                    .entries()
                    .iter()
                    .position(|r| *r == v.abs())
                    .ok_or_else(|| {
                        Error::InvalidParameters(format!("{v} is not ± an entry of rho"))
                    })?;
                let j = j as i32 + 1;
                Ok(if *v < Rational64::zero() { -j } else { j })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(ty, image)
    }

    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    pub fn image(&self) -> &[i32] {
        &self.image
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    /// `w(x)`: position `i` receives `±x_j` as recorded in the image.
    pub fn apply<T>(&self, x: &[T]) -> Result<Vec<T>>
    where
        T: Copy + Neg<Output = T>,
    {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: x.len(),
            });
        }
        Ok(self
            .image
            .iter()
            .map(|&s| {
                let v = x[s.unsigned_abs() as usize - 1];
                if s < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect())
    }

    pub fn rho_image(&self, rho: &RhoVector) -> Result<Vec<Rational64>> {
        self.apply(rho.entries())
    }

    /// Applies the position operation `t` on the left: `t(w(x))`.
    pub fn left_mul(&self, t: &PositionOp) -> SignedPermutation {
        let mut image = self.image.clone();
        t.act(&mut image);
        SignedPermutation { ty: self.ty, image }
    }

    /// Coxeter length from the statistics of `w(ρ)`.
    pub fn length(&self, rho: &RhoVector) -> Result<usize> {
        let s = statistics(&self.rho_image(rho)?);
        Ok(match self.ty {
            WeylType::BC(_) => s.inv + s.neg + s.nsp,
            WeylType::D(_) => s.inv + s.nsp,
            WeylType::A(_) => s.inv,
        })
    }

    /// `w(λ + ρ) − ρ`.
    pub fn dot_action(&self, lambda: &[Rational64], rho: &RhoVector) -> Result<Vec<Rational64>> {
        if lambda.len() != rho.len() {
            return Err(Error::DimensionMismatch {
                expected: rho.len(),
                got: lambda.len(),
            });
        }
        let shifted: Vec<Rational64> = lambda
            .iter()
            .zip(rho.entries())
            .map(|(a, b)| a + b)
            .collect();
        let moved = self.apply(&shifted)?;
        Ok(moved
            .iter()
            .zip(rho.entries())
            .map(|(a, b)| a - b)
            .collect())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.image.iter().join(", "))
    }
}

/// Operations on positions of a sequence, used as simple reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionOp {
    /// Swap positions `i` and `i + 1` (0-based).
    Swap(usize),
    /// Negate position `i` (0-based).
    Negate(usize),
    /// Negate positions `i` and `i + 1` and swap them.
    NegateSwap(usize),
}

impl PositionOp {
    pub fn act<T: Copy + Neg<Output = T>>(&self, v: &mut [T]) {
        match *self {
            PositionOp::Swap(i) => v.swap(i, i + 1),
            PositionOp::Negate(i) => v[i] = -v[i],
            PositionOp::NegateSwap(i) => {
                let (a, b) = (v[i], v[i + 1]);
                v[i] = -b;
                v[i + 1] = -a;
            }
        }
    }
}

/// Simple reflections: adjacent swaps, plus negation of the last entry (BC)
/// or negate-and-swap of the last two entries (D).
pub fn simple_reflections(ty: WeylType) -> Vec<PositionOp> {
    let n = ty.rank();
    let mut gens: Vec<PositionOp> = (0..n.saturating_sub(1)).map(PositionOp::Swap).collect();
    match ty {
        WeylType::BC(_) => gens.push(PositionOp::Negate(n - 1)),
        WeylType::D(_) if n >= 2 => gens.push(PositionOp::NegateSwap(n - 2)),
        _ => {}
    }
    gens
}

/// Distances from the identity in the Cayley graph on the simple
/// reflections, for every element of the group.
pub fn cayley_distances(ty: WeylType) -> Result<HashMap<Vec<i32>, usize>> {
    ty.check()?;
    if ty.rank() > BFS_MAX_RANK {
        return Err(Error::BudgetExceeded {
            what: "BFS rank",
            got: ty.rank(),
            limit: BFS_MAX_RANK,
        });
    }
    let gens = simple_reflections(ty);
    let start = SignedPermutation::identity(ty).image;
    let mut dist = HashMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let d = dist[&cur];
        for g in &gens {
            let mut next = cur.clone();
            g.act(&mut next);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}

/// Word length of `w` by breadth-first search.
pub fn word_length_bfs(w: &SignedPermutation) -> Result<usize> {
    let dist = cayley_distances(w.ty)?;
    dist.get(&w.image)
        .copied()
        .ok_or_else(|| Error::InvalidParameters(format!("{w} not reached by BFS")))
}

/// All elements of the group, in no particular order.
pub fn all_elements(ty: WeylType) -> Result<Vec<SignedPermutation>> {
    ty.check()?;
    let n = ty.rank();
    if n > BRUTE_MAX_RANK {
        return Err(Error::BudgetExceeded {
            what: "brute-force rank",
            got: n,
            limit: BRUTE_MAX_RANK,
        });
    }
    let signs: Vec<u32> = match ty {
        WeylType::A(_) => vec![0],
        _ => (0..1u32 << n).collect(),
    };
    let mut out = Vec::new();
    for perm in (1..=n as i32).permutations(n) {
        for &mask in &signs {
            if matches!(ty, WeylType::D(_)) && mask.count_ones() % 2 == 1 {
                continue;
            }
            let image = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| if mask >> i & 1 == 1 { -j } else { j })
                .collect();
            out.push(SignedPermutation { ty, image });
        }
    }
    Ok(out)
}

fn strictly_decreasing(v: &[Rational64]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

/// Whether `w⁻¹` is a minimal coset representative, read off `w(ρ)` block by
/// block.
pub fn in_wp(w: &SignedPermutation, family: WeylFamily, blocks: Blocks) -> Result<bool> {
    let rho = rho(family, blocks)?;
    let v = w.rho_image(&rho)?;
    let (k, n) = (blocks.k, blocks.n);
    let (first, rest) = v.split_at(k);
    if !strictly_decreasing(first) {
        return Ok(false);
    }
    let ok = match family {
        WeylFamily::Sp | WeylFamily::OOdd => {
            strictly_decreasing(rest) && rest.last().is_none_or(|x| *x > Rational64::zero())
        }
        WeylFamily::OEven => match rest.split_last() {
            None => true,
            Some((last, head)) => {
                strictly_decreasing(head) && head.last().is_none_or(|x| *x > last.abs())
            }
        },
        WeylFamily::Gl => {
            let (middle, tail) = rest.split_at(n);
            strictly_decreasing(middle) && strictly_decreasing(tail)
        }
    };
    Ok(ok)
}

fn enumeration_rank(family: WeylFamily, blocks: Blocks) -> Result<usize> {
    let rank = match family {
        WeylFamily::Gl => blocks.total(),
        _ => blocks.k + blocks.n,
    };
    if rank == 0 {
        return Err(Error::InvalidParameters("rank must be positive".into()));
    }
    if rank > ENUMERATION_MAX_RANK {
        return Err(Error::BudgetExceeded {
            what: "enumeration rank",
            got: rank,
            limit: ENUMERATION_MAX_RANK,
        });
    }
    Ok(rank)
}

/// Every `w` with `w⁻¹ ∈ W^P`, built block by block: choose the ρ-indices of
/// each block, their signs, and sort each block by its values.
pub fn enumerate_wp(family: WeylFamily, blocks: Blocks) -> Result<Vec<SignedPermutation>> {
    let rank = enumeration_rank(family, blocks)?;
    let ty = family.weyl_type(rank);
    let (k, n) = (blocks.k, blocks.n);
    let all: Vec<i32> = (1..=rank as i32).collect();
    let mut out = Vec::new();

    // ρ is decreasing, so an ascending index list sorts positive entries
    // descending; negative entries come after, with indices descending.
    let arrange = |indices: &[i32], negative: u32| -> Vec<i32> {
        let (neg, pos): (Vec<_>, Vec<_>) = indices
            .iter()
            .enumerate()
            .partition(|(i, _)| negative >> i & 1 == 1);
        pos.into_iter()
            .map(|(_, &j)| j)
            .chain(neg.into_iter().rev().map(|(_, &j)| -j))
            .collect()
    };

    for first in all.iter().copied().combinations(k) {
        let rest: Vec<i32> = all.iter().copied().filter(|j| !first.contains(j)).collect();
        match family {
            WeylFamily::Sp | WeylFamily::OOdd => {
                for mask in 0..1u32 << k {
                    let mut image = arrange(&first, mask);
                    image.extend(&rest);
                    out.push(SignedPermutation { ty, image });
                }
            }
            WeylFamily::OEven => {
                for mask in 0..1u32 << k {
                    let mut image = arrange(&first, mask);
                    let odd = mask.count_ones() % 2 == 1;
                    if n == 0 {
                        if odd {
                            continue;
                        }
                    } else {
                        let mut tail = rest.clone();
                        if odd {
                            *tail.last_mut().expect("n >= 1") *= -1;
                        }
                        image.extend(tail);
                    }
                    out.push(SignedPermutation { ty, image });
                }
            }
            WeylFamily::Gl => {
                for middle in rest.iter().copied().combinations(n) {
                    let mut image = first.clone();
                    image.extend(&middle);
                    image.extend(rest.iter().filter(|j| !middle.contains(j)));
                    out.push(SignedPermutation { ty, image });
                }
            }
        }
    }
    Ok(out)
}

/// Cross-check for [`enumerate_wp`]: filter the whole group through
/// [`in_wp`].
pub fn enumerate_wp_brute(family: WeylFamily, blocks: Blocks) -> Result<Vec<SignedPermutation>> {
    let rank = enumeration_rank(family, blocks)?;
    let mut out = Vec::new();
    for w in all_elements(family.weyl_type(rank))? {
        if in_wp(&w, family, blocks)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// `|W^P|` for the given family, from the group orders.
pub fn wp_count(family: WeylFamily, blocks: Blocks) -> usize {
    let binom = crate::util::binomial;
    let (k, n, l) = (blocks.k, blocks.n, blocks.l);
    match family {
        WeylFamily::Sp | WeylFamily::OOdd => (1 << k) * binom(n + k, k),
        WeylFamily::OEven if n == 0 => 1 << (k - 1),
        WeylFamily::OEven => (1 << k) * binom(n + k, k),
        WeylFamily::Gl => binom(k + n + l, k) * binom(n + l, n),
    }
}

/// Rationals from integers, for building weights.
pub fn rationals(v: &[i64]) -> Vec<Rational64> {
    v.iter().map(|&x| Rational64::from_integer(x)).collect()
}

/// Converts a vector of rationals that should be integral.
pub fn integral(v: &[Rational64]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// `a − b` coordinatewise.
pub fn difference<T: Copy + Sub<Output = T>>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::rho as rho_for;
    use super::*;
    use std::collections::HashSet;

    fn r(v: &[i64]) -> Vec<Rational64> {
        rationals(v)
    }

    const EXAMPLE: [i64; 11] = [11, 9, 8, 5, 4, 2, 10, 7, 6, 3, 1];

    fn example_w() -> (SignedPermutation, RhoVector) {
        let rho = rho_for(WeylFamily::Sp, Blocks::new(6, 5, 0)).unwrap();
        let w = SignedPermutation::from_rho_image(WeylType::BC(11), &r(&EXAMPLE), &rho).unwrap();
        (w, rho)
    }

    #[test]
    fn rho_examples() {
        assert_eq!(
            rho_for(WeylFamily::Sp, Blocks::new(2, 2, 0))
                .unwrap()
                .entries(),
            r(&[4, 3, 2, 1]).as_slice()
        );
        assert_eq!(
            rho_for(WeylFamily::OOdd, Blocks::new(1, 1, 0))
                .unwrap()
                .entries(),
            &[Rational64::new(3, 2), Rational64::new(1, 2)]
        );
        assert_eq!(
            rho_for(WeylFamily::Gl, Blocks::new(1, 1, 1))
                .unwrap()
                .entries(),
            r(&[2, 1, 0]).as_slice()
        );
        assert_eq!(
            rho_for(WeylFamily::OEven, Blocks::new(2, 1, 0))
                .unwrap()
                .entries(),
            r(&[2, 1, 0]).as_slice()
        );
        assert!("e8".parse::<WeylFamily>().is_err());
    }

    #[test]
    fn statistics_examples() {
        let s = statistics(&EXAMPLE);
        assert_eq!((s.inv, s.neg, s.nsp), (12, 0, 0));
        let s = statistics(&[4i64, 3, 2, 1]);
        assert_eq!((s.inv, s.neg, s.nsp), (0, 0, 0));
        let s = statistics(&[-1i64]);
        assert_eq!((s.inv, s.neg, s.nsp), (0, 1, 0));
    }

    #[test]
    fn length_examples() {
        let (w, rho) = example_w();
        assert_eq!(w.length(&rho).unwrap(), 12);

        for ty in [WeylType::BC(3), WeylType::D(3), WeylType::A(3)] {
            let rho = RhoVector::new(r(&[2, 1, 0])).unwrap();
            assert_eq!(SignedPermutation::identity(ty).length(&rho).unwrap(), 0);
        }

        let rho_even = rho_for(WeylFamily::OEven, Blocks::new(1, 1, 0)).unwrap();
        let w = SignedPermutation::new(WeylType::D(2), vec![2, 1]).unwrap();
        assert_eq!(w.rho_image(&rho_even).unwrap(), r(&[0, 1]));
        assert_eq!(w.length(&rho_even).unwrap(), 1);
        assert_eq!(word_length_bfs(&w).unwrap(), 1);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(
            word_length_bfs(&SignedPermutation::identity(WeylType::BC(3))).unwrap(),
            0
        );
        for ty in [WeylType::BC(3), WeylType::D(3), WeylType::A(3)] {
            for g in simple_reflections(ty) {
                let w = SignedPermutation::identity(ty).left_mul(&g);
                assert_eq!(word_length_bfs(&w).unwrap(), 1);
            }
        }
        let longest = SignedPermutation::new(WeylType::BC(3), vec![-1, -2, -3]).unwrap();
        assert_eq!(word_length_bfs(&longest).unwrap(), 9);
        assert!(word_length_bfs(&SignedPermutation::identity(WeylType::A(6))).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(cayley_distances(WeylType::BC(3)).unwrap().len(), 48);
        assert_eq!(cayley_distances(WeylType::D(3)).unwrap().len(), 24);
        assert_eq!(cayley_distances(WeylType::A(3)).unwrap().len(), 6);
        assert_eq!(all_elements(WeylType::D(4)).unwrap().len(), 192);
    }

    #[test]
    fn lengths_match_bfs_exhaustively() {
        for n in 1..=3 {
            let rhos = [
                (
                    WeylType::BC(n),
                    rho_for(WeylFamily::Sp, Blocks::new(n, 0, 0)).unwrap(),
                ),
                (
                    WeylType::BC(n),
                    rho_for(WeylFamily::OOdd, Blocks::new(n, 0, 0)).unwrap(),
                ),
                (
                    WeylType::D(n),
                    rho_for(WeylFamily::OEven, Blocks::new(n, 0, 0)).unwrap(),
                ),
                (
                    WeylType::A(n),
                    rho_for(WeylFamily::Gl, Blocks::new(n, 0, 0)).unwrap(),
                ),
            ];
            for (ty, rho) in rhos {
                let dist = cayley_distances(ty).unwrap();
                assert_eq!(dist.len(), all_elements(ty).unwrap().len());
                for w in all_elements(ty).unwrap() {
                    assert_eq!(w.length(&rho).unwrap(), dist[w.image()], "{ty:?} {w}");
                }
            }
        }
    }

    #[test]
    fn dot_action_examples() {
        let (w, rho) = example_w();
        let zero = vec![Rational64::zero(); 11];
        assert_eq!(
            w.dot_action(&zero, &rho).unwrap(),
            r(&[0, -1, -1, -3, -3, -4, 5, 3, 3, 1, 0])
        );
        let lambda = r(&[3, 1, 0, 0]);
        let rho4 = rho_for(WeylFamily::Sp, Blocks::new(2, 2, 0)).unwrap();
        let id = SignedPermutation::identity(WeylType::BC(4));
        assert_eq!(id.dot_action(&lambda, &rho4).unwrap(), lambda);
        assert!(id.dot_action(&lambda[..3], &rho4).is_err());
    }

    #[test]
    fn wp_membership_examples() {
        let (w, _) = example_w();
        assert!(in_wp(&w, WeylFamily::Sp, Blocks::new(6, 5, 0)).unwrap());
        let b = Blocks::new(1, 1, 0);
        let id = SignedPermutation::identity(WeylType::BC(2));
        assert!(in_wp(&id, WeylFamily::Sp, b).unwrap());
        // w(ρ) = (1, 2): both one-element blocks are decreasing and positive
        let swap = SignedPermutation::new(WeylType::BC(2), vec![2, 1]).unwrap();
        assert!(in_wp(&swap, WeylFamily::Sp, b).unwrap());
        // w(ρ) = (2, −1): the V-block entry is negative
        let neg = SignedPermutation::new(WeylType::BC(2), vec![1, -2]).unwrap();
        assert!(!in_wp(&neg, WeylFamily::Sp, b).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_wp(WeylFamily::Sp, Blocks::new(2, 2, 0))
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            enumerate_wp(WeylFamily::Gl, Blocks::new(1, 1, 1))
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_wp(WeylFamily::Sp, Blocks::new(1, 1, 0))
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            enumerate_wp_brute(WeylFamily::Sp, Blocks::new(1, 1, 0))
                .unwrap()
                .len(),
            4
        );
        assert!(enumerate_wp(WeylFamily::Sp, Blocks::new(7, 6, 0)).is_err());
    }

    #[test]
    fn structured_enumeration_matches_brute_filter() {
        let mut cases = Vec::new();
        for k in 1..=3 {
            for n in 0..=3 {
                if k + n > 6 {
                    continue;
                }
                for family in [WeylFamily::Sp, WeylFamily::OOdd, WeylFamily::OEven] {
                    cases.push((family, Blocks::new(k, n, 0)));
                }
                for l in 0..=2 {
                    if k + n + l <= 6 {
                        cases.push((WeylFamily::Gl, Blocks::new(k, n, l)));
                    }
                }
            }
        }
        for (family, blocks) in cases {
            let fast = enumerate_wp(family, blocks).unwrap();
            let slow = enumerate_wp_brute(family, blocks).unwrap();
            let fast_set: HashSet<_> = fast.iter().cloned().collect();
            let slow_set: HashSet<_> = slow.into_iter().collect();
            assert_eq!(
                fast_set.len(),
                fast.len(),
                "duplicates for {family:?} {blocks:?}"
            );
            assert_eq!(fast_set, slow_set, "{family:?} {blocks:?}");
            assert_eq!(
                fast.len(),
                wp_count(family, blocks),
                "{family:?} {blocks:?}"
            );
        }
    }

    #[test]
    fn sp_counts_and_levi_shape() {
        for n in 1..=4 {
            for k in 1..=4 {
                let blocks = Blocks::new(k, n, 0);
                let rho = rho_for(WeylFamily::Sp, blocks).unwrap();
                let zero = vec![Rational64::zero(); n + k];
                let elems = enumerate_wp(WeylFamily::Sp, blocks).unwrap();
                assert_eq!(elems.len(), (1 << k) * crate::util::binomial(n + k, k));
                for w in elems {
                    assert!(in_wp(&w, WeylFamily::Sp, blocks).unwrap());
                    let v = integral(&w.dot_action(&zero, &rho).unwrap()).unwrap();
                    let (e, tail) = v.split_at(k);
                    assert!(e.iter().all(|&x| x <= 0));
                    // (−μ†_k, …, −μ†_1) with μ† a partition
                    assert!(e.windows(2).all(|p| p[0] >= p[1]), "{v:?}");
                    assert!(tail.iter().all(|&x| x >= 0));
                    assert!(tail.windows(2).all(|p| p[0] >= p[1]), "{v:?}");
                }
            }
        }
    }

    #[test]
    fn signed_permutation_validation() {
        assert!(SignedPermutation::new(WeylType::A(2), vec![-1, 2]).is_err());
        assert!(SignedPermutation::new(WeylType::D(2), vec![-1, 2]).is_err());
        assert!(SignedPermutation::new(WeylType::BC(2), vec![1, 1]).is_err());
        assert!(SignedPermutation::new(WeylType::BC(2), vec![1]).is_err());
        assert!(SignedPermutation::new(WeylType::BC(0), vec![]).is_err());
    }
}
