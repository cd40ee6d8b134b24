//! Weight multiplicities of irreducible representations of `GL(n)`,
//! `Sp(2n)` and `SO(m)`, characters of products of these groups, and
//! decomposition into irreducibles.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A connected classical group, identified by its defining representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalGroup {
    /// `GL(n)`.
    Gl(usize),
    /// `Sp(2n)`, stored by its rank `n`.
    Sp(usize),
    /// `SO(m)`.
    So(usize),
}

/// Root system of the semisimple part, by Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RootType {
    A,
    B,
    C,
    D,
}

impl ClassicalGroup {
    /// Number of torus coordinates.
    pub fn rank(self) -> usize {
        match self {
            ClassicalGroup::Gl(n) | ClassicalGroup::Sp(n) => n,
            ClassicalGroup::So(m) => m / 2,
        }
    }

    fn root_type(self) -> RootType {
        match self {
            ClassicalGroup::Gl(_) => RootType::A,
            ClassicalGroup::Sp(_) => RootType::C,
            ClassicalGroup::So(m) if m % 2 == 1 => RootType::B,
            ClassicalGroup::So(_) => RootType::D,
        }
    }

    /// Positive roots in the `ε` basis.
    fn positive_roots(self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let unit = |i: usize, s: i64| {
            let mut v = vec![0; r];
            v[i] = s;
            v
        };
        let mut roots = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                roots.push(minus);
                if self.root_type() != RootType::A {
                    let mut plus = unit(i, 1);
                    plus[j] = 1;
                    roots.push(plus);
                }
            }
            match self.root_type() {
                RootType::B => roots.push(unit(i, 1)),
                RootType::C => roots.push(unit(i, 2)),
                _ => {}
            }
        }
        roots
    }

    /// `2ρ` in the `ε` basis.
    fn doubled_rho(self) -> Vec<i64> {
        let r = self.rank() as i64;
        (1..=r)
            .map(|i| match self.root_type() {
                RootType::A | RootType::D => 2 * (r - i),
                RootType::B => 2 * (r - i) + 1,
                RootType::C => 2 * (r - i + 1),
            })
            .collect()
    }

    /// Whether `w` is a dominant integral weight.
    pub fn is_dominant(self, w: &[i64]) -> bool {
        if w.len() != self.rank() {
            return false;
        }
        let decreasing = w.windows(2).all(|p| p[0] >= p[1]);
        match self.root_type() {
            RootType::A => decreasing,
            RootType::B | RootType::C => decreasing && w.last().is_none_or(|&x| x >= 0),
            RootType::D => match w.len() {
                0 | 1 => true,
                r => w[..r - 1].windows(2).all(|p| p[0] >= p[1]) && w[r - 2] >= w[r - 1].abs(),
            },
        }
    }

    fn check_label(self, label: &[i64]) -> Result<()> {
        if self.is_dominant(label) {
            Ok(())
        } else {
            Err(Error::InvalidLabel {
                group: self.to_string(),
                label: format!("{label:?}"),
            })
        }
    }

    /// The dominant weight in the Weyl orbit of `w`.
    pub fn dominant_representative(self, w: &[i64]) -> Vec<i64> {
        match self.root_type() {
            RootType::A => {
                let mut v = w.to_vec();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            }
            RootType::B | RootType::C => {
                let mut v: Vec<i64> = w.iter().map(|x| x.abs()).collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            }
            RootType::D => {
                if w.len() <= 1 {
                    return w.to_vec();
                }
                let negatives = w.iter().filter(|&&x| x < 0).count();
                let mut v: Vec<i64> = w.iter().map(|x| x.abs()).collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                if negatives % 2 == 1 {
                    if let Some(last) = v.last_mut() {
                        *last = -*last;
                    }
                }
                v
            }
        }
    }

    /// Coefficients of `d` in the simple roots, when `d` lies in the root
    /// lattice.
    fn simple_root_coefficients(self, d: &[i64]) -> Option<Vec<i64>> {
        let r = d.len();
        let partial: Vec<i64> = d
            .iter()
            .scan(0, |s, &x| {
                *s += x;
                Some(*s)
            })
            .collect();
        match self.root_type() {
            RootType::A => {
                if partial.last().copied().unwrap_or(0) != 0 {
                    return None;
                }
                Some(partial[..r.saturating_sub(1)].to_vec())
            }
            RootType::B => Some(partial),
            RootType::C => {
                let total = *partial.last()?;
                if total % 2 != 0 {
                    return None;
                }
                let mut c = partial[..r - 1].to_vec();
                c.push(total / 2);
                Some(c)
            }
            RootType::D => {
                if r == 1 {
                    return (d[0] == 0).then(Vec::new);
                }
                let (before, total) = (partial[r - 2], partial[r - 1]);
                if total % 2 != 0 {
                    return None;
                }
                let mut c = partial[..r - 2].to_vec();
                c.push((before - d[r - 1]) / 2);
                c.push(total / 2);
                Some(c)
            }
        }
    }

    /// `μ ≤ λ` in the dominance order.
    fn dominated(self, mu: &[i64], lambda: &[i64]) -> bool {
        let d: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        self.simple_root_coefficients(&d)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Simple reflections acting on torus coordinates.
    fn reflect(self, w: &[i64]) -> Vec<Vec<i64>> {
        let r = w.len();
        let mut out = Vec::new();
        for i in 0..r.saturating_sub(1) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
        match self.root_type() {
            RootType::B | RootType::C if r > 0 => {
                let mut v = w.to_vec();
                v[r - 1] = -v[r - 1];
                out.push(v);
            }
            RootType::D if r >= 2 => {
                let mut v = w.to_vec();
                v.swap(r - 2, r - 1);
                v[r - 2] = -v[r - 2];
                v[r - 1] = -v[r - 1];
                out.push(v);
            }
            _ => {}
        }
        out
    }

    /// Weyl orbit of a weight.
    fn orbit(self, w: &[i64]) -> Vec<Vec<i64>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![w.to_vec()];
        seen.insert(w.to_vec());
        while let Some(v) = stack.pop() {
            for u in self.reflect(&v) {
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Dimension of the irreducible representation, by the Weyl dimension
    /// formula.
    pub fn weyl_dimension(self, label: &[i64]) -> Result<BigInt> {
        self.check_label(label)?;
        let rho2 = self.doubled_rho();
        let mut dim = Ratio::from_integer(BigInt::one());
        for alpha in self.positive_roots() {
            let num: i64 = alpha
                .iter()
                .zip(label.iter().zip(&rho2))
                .map(|(a, (l, r))| a * (2 * l + r))
                .sum();
            let den: i64 = alpha.iter().zip(&rho2).map(|(a, r)| a * r).sum();
            dim *= Ratio::new(BigInt::from(num), BigInt::from(den));
        }
        debug_assert!(dim.is_integer());
        Ok(dim.to_integer())
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalGroup::Gl(n) => write!(f, "GL({n})"),
            ClassicalGroup::Sp(n) => write!(f, "Sp({})", 2 * n),
            ClassicalGroup::So(m) => write!(f, "SO({m})"),
        }
    }
}

/// Irreducible labels, one highest weight per factor.
pub type IrrepLabel = Vec<Vec<i64>>;

/// A virtual character of a product of classical groups, as a map from
/// concatenated torus weights to multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    groups: Vec<ClassicalGroup>,
    weights: BTreeMap<Vec<i64>, i64>,
}

impl Character {
    pub fn zero(groups: Vec<ClassicalGroup>) -> Self {
        Character {
            groups,
            weights: BTreeMap::new(),
        }
    }

    pub fn trivial(groups: Vec<ClassicalGroup>) -> Self {
        let rank = groups.iter().map(|g| g.rank()).sum();
        let mut c = Character::zero(groups);
        c.weights.insert(vec![0; rank], 1);
        c
    }

    pub fn from_weights(
        groups: Vec<ClassicalGroup>,
        weights: impl IntoIterator<Item = (Vec<i64>, i64)>,
    ) -> Result<Self> {
        let mut c = Character::zero(groups);
        let rank = c.rank();
        for (w, m) in weights {
            if w.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: w.len(),
                });
            }
            c.add_weight(w, m);
        }
        Ok(c)
    }

    pub fn groups(&self) -> &[ClassicalGroup] {
        &self.groups
    }

    pub fn weights(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.groups.iter().map(|g| g.rank()).sum()
    }

    pub fn multiplicity(&self, w: &[i64]) -> i64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn add_weight(&mut self, w: Vec<i64>, m: i64) {
        if m == 0 {
            return;
        }
        match self.weights.entry(w) {
            Entry::Vacant(e) => {
                e.insert(m);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    fn same_groups(&self, other: &Character) -> Result<()> {
        if self.groups != other.groups {
            return Err(Error::ParameterMismatch(format!(
                "characters of {:?} and {:?}",
                self.groups, other.groups
            )));
        }
        Ok(())
    }

    /// `self + scale · other`.
    pub fn add_scaled(&mut self, other: &Character, scale: i64) -> Result<()> {
        self.same_groups(other)?;
        for (w, &m) in &other.weights {
            self.add_weight(w.clone(), scale * m);
        }
        Ok(())
    }

    /// Tensor product of two characters of the same group.
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        self.same_groups(other)?;
        let mut out = Character::zero(self.groups.clone());
        for (a, &m) in &self.weights {
            for (b, &n) in &other.weights {
                let w = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_weight(w, m * n);
            }
        }
        Ok(out)
    }

    /// External tensor product, a character of the product group.
    pub fn outer(&self, other: &Character) -> Character {
        let mut groups = self.groups.clone();
        groups.extend(other.groups.iter().copied());
        let mut out = Character::zero(groups);
        for (a, &m) in &self.weights {
            for (b, &n) in &other.weights {
                out.add_weight(a.iter().chain(b).copied().collect(), m * n);
            }
        }
        out
    }

    /// `Λ^p` of a genuine character.
    pub fn exterior_power(&self, p: usize) -> Result<Character> {
        let mut basis = Vec::new();
        for (w, &m) in &self.weights {
            if m < 0 {
                return Err(Error::NotACharacter(format!("multiplicity {m} at {w:?}")));
            }
            basis.extend(std::iter::repeat_n(w, m as usize));
        }
        let mut out = Character::zero(self.groups.clone());
        let rank = self.rank();
        for combo in basis.iter().combinations(p) {
            let mut w = vec![0; rank];
            for v in combo {
                for (x, y) in w.iter_mut().zip(v.iter()) {
                    *x += y;
                }
            }
            out.add_weight(w, 1);
        }
        Ok(out)
    }

    fn factor_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.groups
            .iter()
            .map(|g| {
                let r = start..start + g.rank();
                start = r.end;
                r
            })
            .collect()
    }

    pub fn is_dominant_weight(&self, w: &[i64]) -> bool {
        self.groups
            .iter()
            .zip(self.factor_ranges())
            .all(|(g, r)| g.is_dominant(&w[r]))
    }

    /// The restriction to weights dominant for every factor.
    pub fn dominant_part(&self) -> Character {
        Character {
            groups: self.groups.clone(),
            weights: self
                .weights
                .iter()
                .filter(|(w, _)| self.is_dominant_weight(w))
                .map(|(w, &m)| (w.clone(), m))
                .collect(),
        }
    }

    /// Invariance under every simple reflection of every factor.
    pub fn is_weyl_symmetric(&self) -> bool {
        let ranges = self.factor_ranges();
        self.weights.iter().all(|(w, &m)| {
            self.groups.iter().zip(&ranges).all(|(g, range)| {
                g.reflect(&w[range.clone()]).into_iter().all(|part| {
                    let mut u = w.clone();
                    u[range.clone()].copy_from_slice(&part);
                    self.multiplicity(&u) == m
                })
            })
        })
    }

    /// Decomposes into irreducibles by repeatedly removing the irreducible
    /// whose highest weight is the lexicographically largest weight.
    ///
    /// Only dominant weights are read, so a character known only on its
    /// dominant weights decomposes the same way.
    pub fn decompose(&self) -> Result<BTreeMap<IrrepLabel, usize>> {
        let ranges = self.factor_ranges();
        let mut rest = self.dominant_part();
        let mut out = BTreeMap::new();
        let mut cache = IrrepCache::default();
        while let Some((top, &m)) = rest.weights.last_key_value() {
            if m < 0 {
                return Err(Error::NotACharacter(format!(
                    "multiplicity {m} at highest weight {top:?}"
                )));
            }
            let label: IrrepLabel = ranges.iter().map(|r| top[r.clone()].to_vec()).collect();
            for (g, part) in self.groups.iter().zip(&label) {
                if !g.is_dominant(part) {
                    return Err(Error::NotACharacter(format!(
                        "highest weight {part:?} is not dominant for {g}"
                    )));
                }
            }
            let irrep = cache.product(&self.groups, &label)?.dominant_part();
            rest.add_scaled(&irrep, -m)?;
            out.insert(label, m as usize);
        }
        Ok(out)
    }
}

/// Memoized irreducible characters.
#[derive(Default)]
pub struct IrrepCache {
    simple: HashMap<(ClassicalGroup, Vec<i64>), Character>,
}

impl IrrepCache {
    pub fn get(&mut self, group: ClassicalGroup, label: &[i64]) -> Result<&Character> {
        let key = (group, label.to_vec());
        if !self.simple.contains_key(&key) {
            let c = irrep_character(group, label)?;
            self.simple.insert(key.clone(), c);
        }
        Ok(&self.simple[&key])
    }

    /// Irreducible character of a product group.
    pub fn product(&mut self, groups: &[ClassicalGroup], label: &[Vec<i64>]) -> Result<Character> {
        if groups.len() != label.len() {
            return Err(Error::DimensionMismatch {
                expected: groups.len(),
                got: label.len(),
            });
        }
        let mut out = Character::trivial(Vec::new());
        for (&g, part) in groups.iter().zip(label) {
            out = out.outer(self.get(g, part)?);
        }
        Ok(out)
    }
}

/// The character of the irreducible representation with highest weight
/// `label`.
pub fn irrep_character(group: ClassicalGroup, label: &[i64]) -> Result<Character> {
    group.check_label(label)?;
    let weights = match group.root_type() {
        RootType::A => {
            let mut memo = HashMap::new();
            gelfand_tsetlin(label, &mut memo)
        }
        _ => freudenthal(group, label)?,
    };
    Ok(Character {
        groups: vec![group],
        weights,
    })
}

/// `GL(n)` weights by branching to `GL(n − 1)` over interlacing sequences.
fn gelfand_tsetlin(
    lambda: &[i64],
    memo: &mut HashMap<Vec<i64>, BTreeMap<Vec<i64>, i64>>,
) -> BTreeMap<Vec<i64>, i64> {
    if let Some(hit) = memo.get(lambda) {
        return hit.clone();
    }
    let n = lambda.len();
    let mut out = BTreeMap::new();
    if n <= 1 {
        out.insert(lambda.to_vec(), 1);
        return out;
    }
    let total: i64 = lambda.iter().sum();
    let ranges: Vec<_> = (0..n - 1).map(|i| lambda[i + 1]..=lambda[i]).collect();
    for mu in ranges.into_iter().multi_cartesian_product() {
        let last = total - mu.iter().sum::<i64>();
        for (w, m) in gelfand_tsetlin(&mu, memo) {
            let mut full = w;
            full.push(last);
            *out.entry(full).or_insert(0) += m;
        }
    }
    memo.insert(lambda.to_vec(), out.clone());
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dominant weights `μ ≤ λ` with bounded entries.
fn dominant_weights_below(group: ClassicalGroup, lambda: &[i64]) -> Vec<Vec<i64>> {
    let r = lambda.len();
    let bound = lambda.first().map_or(0, |x| x.abs());
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn go(
        group: ClassicalGroup,
        lambda: &[i64],
        bound: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let r = lambda.len();
        if current.len() == r {
            if group.is_dominant(current) && group.dominated(current, lambda) {
                out.push(current.clone());
            }
            return;
        }
        let hi = current.last().copied().unwrap_or(bound);
        let lo = if current.len() + 1 == r { -hi } else { 0 };
        for x in (lo..=hi).rev() {
            current.push(x);
            go(group, lambda, bound, current, out);
            current.pop();
        }
    }
    if r == 0 {
        return vec![Vec::new()];
    }
    go(group, lambda, bound, &mut current, &mut out);
    out
}

/// Weight multiplicities from Freudenthal's recursion, in doubled
/// coordinates so that every inner product is an integer.
fn freudenthal(group: ClassicalGroup, lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, i64>> {
    let r = group.rank();
    let mut weights = BTreeMap::new();
    if r == 0 || (group.root_type() == RootType::D && r == 1) {
        weights.insert(lambda.to_vec(), 1);
        return Ok(weights);
    }
    let roots = group.positive_roots();
    let rho2 = group.doubled_rho();
    let shifted_norm = |mu: &[i64]| {
        let v: Vec<i64> = mu.iter().zip(&rho2).map(|(m, r)| 2 * m + r).collect();
        dot(&v, &v)
    };
    let top = shifted_norm(lambda);
    let mut dominant = dominant_weights_below(group, lambda);
    // higher weights first: the height of λ − μ increases along the list
    dominant.sort_by_key(|mu| {
        let d: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        let c = group.simple_root_coefficients(&d).unwrap_or_default();
        (c.iter().sum::<i64>(), std::cmp::Reverse(mu.clone()))
    });
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    for mu in &dominant {
        if mu.as_slice() == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut numerator = 0i64;
        for alpha in &roots {
            let mut nu = mu.clone();
            loop {
                for (x, a) in nu.iter_mut().zip(alpha) {
                    *x += a;
                }
                let rep = group.dominant_representative(&nu);
                let Some(&m) = mult.get(&rep) else { break };
                numerator += m * dot(&nu, alpha);
            }
        }
        // 2Σ m(ν)(ν, α) over ((λ+ρ, λ+ρ) − (μ+ρ, μ+ρ)), both scaled by 4
        numerator *= 8;
        let denominator = top - shifted_norm(mu);
        if denominator <= 0 || numerator % denominator != 0 {
            return Err(Error::NotACharacter(format!(
                "Freudenthal recursion failed at {mu:?} for {group} {lambda:?}"
            )));
        }
        let m = numerator / denominator;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }
    for (mu, m) in mult {
        for w in group.orbit(&mu) {
            weights.insert(w, m);
        }
    }
    Ok(weights)
}

/// Dimension of a product irreducible, by the Weyl dimension formula.
pub fn weyl_dimension(groups: &[ClassicalGroup], label: &[Vec<i64>]) -> Result<i64> {
    let mut dim = BigInt::one();
    for (g, part) in groups.iter().zip(label) {
        dim *= g.weyl_dimension(part)?;
    }
    dim.to_i64()
        .ok_or_else(|| Error::InvalidParameters("dimension overflows i64".into()))
}
