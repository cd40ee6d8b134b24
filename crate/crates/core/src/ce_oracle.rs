//! Chevalley–Eilenberg homology computed directly from structure constants,
//! graded by torus weight, and decomposed into irreducibles.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::charlib::{Character, ClassicalGroup, IrrepLabel};
use crate::error::{Error, Result};
use crate::kostant::{
    levi_weight_from_labels, Family, HomologySummand, HomologyTable, Labels, VLabel,
};
use crate::linalg;
use crate::partition::Partition;

/// Largest Lie algebra dimension accepted by the oracle.
pub const CE_MAX_DIM: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub name: String,
    pub weight: Vec<i64>,
    /// 1 for generators, 2 for the center.
    pub degree: u8,
}

/// Indices `(i, j)` of a bracket `[b_i, b_j]`.
pub type BasisPair = (usize, usize);

/// A Lie algebra with integer structure constants in a torus weight basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieStructure {
    pub groups: Vec<ClassicalGroup>,
    pub basis: Vec<BasisElement>,
    /// `[b_i, b_j]` for `i < j`, as sparse coefficient lists.
    brackets: BTreeMap<(usize, usize), Vec<(usize, i64)>>,
}

impl LieStructure {
    /// Validates antisymmetric input and stores `[b_i, b_j]` for `i < j`.
    pub fn new(
        groups: Vec<ClassicalGroup>,
        basis: Vec<BasisElement>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<(usize, i64)>)>,
    ) -> Result<Self> {
        if basis.len() > CE_MAX_DIM {
            return Err(Error::BudgetExceeded {
                what: "Lie algebra dimension",
                got: basis.len(),
                limit: CE_MAX_DIM,
            });
        }
        let rank: usize = groups.iter().map(|g| g.rank()).sum();
        if let Some(b) = basis.iter().find(|b| b.weight.len() != rank) {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: b.weight.len(),
            });
        }
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, i64>> = BTreeMap::new();
        for ((i, j), terms) in brackets {
            if i >= basis.len() || j >= basis.len() || terms.iter().any(|&(k, _)| k >= basis.len())
            {
                return Err(Error::InvalidStructure(format!(
                    "index out of range in [{i}, {j}]"
                )));
            }
            if i == j {
                return Err(Error::InvalidStructure(format!(
                    "[b_{i}, b_{i}] must vanish"
                )));
            }
            let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
            let entry = table.entry(key).or_default();
            for (k, c) in terms {
                *entry.entry(k).or_insert(0) += sign * c;
            }
        }
        let brackets = table
            .into_iter()
            .map(|(key, terms)| {
                (
                    key,
                    terms
                        .into_iter()
                        .filter(|&(_, c)| c != 0)
                        .collect::<Vec<_>>(),
                )
            })
            .filter(|(_, terms)| !terms.is_empty())
            .collect();
        let g = LieStructure {
            groups,
            basis,
            brackets,
        };
        g.check_weights()?;
        g.check_jacobi()?;
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `[b_i, b_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vec::new(),
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|t| t.iter().map(|&(k, c)| (k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    fn bracket_vec(&self, x: &[(usize, i64)], j: usize) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for &(i, a) in x {
            for (k, c) in self.bracket(i, j) {
                *out.entry(k).or_insert(0) += a * c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn check_weights(&self) -> Result<()> {
        for (&(i, j), terms) in &self.brackets {
            let sum: Vec<i64> = self.basis[i]
                .weight
                .iter()
                .zip(&self.basis[j].weight)
                .map(|(a, b)| a + b)
                .collect();
            for &(k, _) in terms {
                if self.basis[k].weight != sum {
                    return Err(Error::InvalidStructure(format!(
                        "[{}, {}] has a term {} of the wrong weight",
                        self.basis[i].name, self.basis[j].name, self.basis[k].name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        for (i, j, l) in (0..d).tuple_combinations() {
            let mut total: BTreeMap<usize, i64> = BTreeMap::new();
            for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                for (k, v) in self.bracket_vec(&self.bracket(a, b), c) {
                    *total.entry(k).or_insert(0) += v;
                }
            }
            if total.values().any(|&v| v != 0) {
                return Err(Error::InvalidStructure(format!(
                    "Jacobi fails on ({i}, {j}, {l})"
                )));
            }
        }
        Ok(())
    }

    /// `[g, [g, g]] = 0`.
    pub fn is_two_step(&self) -> bool {
        let d = self.dim();
        (0..d)
            .cartesian_product(0..d)
            .all(|(i, j)| (0..d).all(|l| self.bracket_vec(&self.bracket(i, j), l).is_empty()))
    }

    /// Dimension of `[g, g]`.
    pub fn derived_dim(&self) -> usize {
        let rows: Vec<Vec<i64>> = self
            .brackets
            .values()
            .map(|terms| {
                let mut row = vec![0; self.dim()];
                for &(k, c) in terms {
                    row[k] = c;
                }
                row
            })
            .collect();
        linalg::rank(&rows)
    }

    /// The character of the adjoint torus action.
    pub fn character(&self) -> Character {
        Character::from_weights(
            self.groups.clone(),
            self.basis.iter().map(|b| (b.weight.clone(), 1)),
        )
        .expect("weights validated at construction")
    }

    pub fn bracket_list(&self) -> Vec<(BasisPair, Vec<(usize, i64)>)> {
        self.brackets.iter().map(|(k, v)| (*k, v.clone())).collect()
    }
}

/// An abelian Lie algebra with the given weights.
pub fn abelian(groups: Vec<ClassicalGroup>, weights: Vec<Vec<i64>>) -> Result<LieStructure> {
    let basis = weights
        .into_iter()
        .enumerate()
        .map(|(i, weight)| BasisElement {
            name: format!("x{i}"),
            weight,
            degree: 1,
        })
        .collect();
    LieStructure::new(groups, basis, [])
}

/// The torus groups acting on the family's Lie algebra: `GL(E)` first.
pub fn family_groups(family: &Family) -> Vec<ClassicalGroup> {
    match *family {
        Family::Sp { n, k } => vec![ClassicalGroup::Gl(k), ClassicalGroup::Sp(n)],
        Family::O { m, k } => vec![ClassicalGroup::Gl(k), ClassicalGroup::So(m)],
        Family::Gl { n, k, l } => vec![
            ClassicalGroup::Gl(k),
            ClassicalGroup::Gl(n),
            ClassicalGroup::Gl(l),
        ],
    }
}

/// Index of a split basis vector `v_s`, `s ∈ {±1, …, ±r}` or `0`, and its
/// weight sign.
fn split_labels(r: usize, with_zero: bool) -> Vec<i64> {
    let mut out: Vec<i64> = (1..=r as i64).collect();
    if with_zero {
        out.push(0);
    }
    out.extend((1..=r as i64).map(|i| -i));
    out
}

/// The family's nilpotent Lie algebra in split coordinates.
pub fn build_lie_structure(family: &Family) -> Result<LieStructure> {
    family.validate()?;
    if family.dim() > CE_MAX_DIM {
        return Err(Error::BudgetExceeded {
            what: "Lie algebra dimension",
            got: family.dim(),
            limit: CE_MAX_DIM,
        });
    }
    let groups = family_groups(family);
    let rank: usize = groups.iter().map(|g| g.rank()).sum();
    let k = family.k();
    let unit = |pos: usize, s: i64, w: &mut Vec<i64>| w[pos] += s;
    let mut basis = Vec::new();
    let mut brackets = Vec::new();
    match *family {
        Family::Sp { .. } | Family::O { .. } => {
            let (r, symplectic, with_zero) = match *family {
                Family::Sp { n, .. } => (n, true, false),
                Family::O { m, .. } => (m / 2, false, m % 2 == 1),
                Family::Gl { .. } => unreachable!(),
            };
            let labels = split_labels(r, with_zero);
            let mut index = HashMap::new();
            for a in 0..k {
                for &s in &labels {
                    let mut w = vec![0; rank];
                    unit(a, 1, &mut w);
                    if s != 0 {
                        unit(k + s.unsigned_abs() as usize - 1, s.signum(), &mut w);
                    }
                    index.insert((a, s), basis.len());
                    basis.push(BasisElement {
                        name: format!("e{}*v{}", a + 1, s),
                        weight: w,
                        degree: 1,
                    });
                }
            }
            let mut center = HashMap::new();
            for a in 0..k {
                let first = if symplectic { a } else { a + 1 };
                for b in first..k {
                    let mut w = vec![0; rank];
                    unit(a, 1, &mut w);
                    unit(b, 1, &mut w);
                    center.insert((a, b), basis.len());
                    basis.push(BasisElement {
                        name: if symplectic {
                            format!("e{}e{}", a + 1, b + 1)
                        } else {
                            format!("e{}^e{}", a + 1, b + 1)
                        },
                        weight: w,
                        degree: 2,
                    });
                }
            }
            // ω(v_i, v_{-i}) = 1; the orthogonal form also pairs v_0 with itself
            let form = |s: i64, t: i64| -> i64 {
                if s + t != 0 {
                    0
                } else if s == 0 {
                    1
                } else if symplectic {
                    s.signum()
                } else {
                    1
                }
            };
            for a in 0..k {
                for b in 0..k {
                    for &s in &labels {
                        for &t in &labels {
                            let f = form(s, t);
                            let (i, j) = (index[&(a, s)], index[&(b, t)]);
                            if f == 0 || i >= j {
                                continue;
                            }
                            // e_a e_b is symmetric, e_a ∧ e_b antisymmetric
                            let (term, sign) = if symplectic {
                                (center[&(a.min(b), a.max(b))], 1)
                            } else if a == b {
                                continue;
                            } else if a < b {
                                (center[&(a, b)], 1)
                            } else {
                                (center[&(b, a)], -1)
                            };
                            brackets.push(((i, j), vec![(term, sign * f)]));
                        }
                    }
                }
            }
        }
        Family::Gl { n, k, l } => {
            let mut ev = HashMap::new();
            let mut phif = HashMap::new();
            let mut ef = HashMap::new();
            for a in 0..k {
                for i in 0..n {
                    let mut w = vec![0; rank];
                    unit(a, 1, &mut w);
                    unit(k + i, 1, &mut w);
                    ev.insert((a, i), basis.len());
                    basis.push(BasisElement {
                        name: format!("e{}*v{}", a + 1, i + 1),
                        weight: w,
                        degree: 1,
                    });
                }
            }
            for j in 0..n {
                for c in 0..l {
                    let mut w = vec![0; rank];
                    unit(k + j, -1, &mut w);
                    unit(k + n + c, 1, &mut w);
                    phif.insert((j, c), basis.len());
                    basis.push(BasisElement {
                        name: format!("phi{}*f{}", j + 1, c + 1),
                        weight: w,
                        degree: 1,
                    });
                }
            }
            for a in 0..k {
                for c in 0..l {
                    let mut w = vec![0; rank];
                    unit(a, 1, &mut w);
                    unit(k + n + c, 1, &mut w);
                    ef.insert((a, c), basis.len());
                    basis.push(BasisElement {
                        name: format!("e{}*f{}", a + 1, c + 1),
                        weight: w,
                        degree: 2,
                    });
                }
            }
            for a in 0..k {
                for i in 0..n {
                    for c in 0..l {
                        brackets.push(((ev[&(a, i)], phif[&(i, c)]), vec![(ef[&(a, c)], 1)]));
                    }
                }
            }
        }
    }
    let g = LieStructure::new(groups, basis, brackets)?;
    if !g.is_two_step() {
        return Err(Error::InvalidStructure("not 2-step nilpotent".into()));
    }
    Ok(g)
}

/// Which weights to compute homology on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightRange {
    All,
    /// Weights dominant for every factor; enough to recover the
    /// decomposition.
    Dominant,
}

/// The chain spaces `Λ^p(g)` split by torus weight.
#[derive(Debug, Clone)]
pub struct WeightGradedComplex {
    /// `chains[p][χ]`: sorted basis subsets of size `p` and weight `χ`.
    pub chains: Vec<BTreeMap<Vec<i64>, Vec<Vec<usize>>>>,
}

impl WeightGradedComplex {
    pub fn new(g: &LieStructure, range: WeightRange) -> Self {
        let d = g.dim();
        let rank = g.groups.iter().map(|x| x.rank()).sum::<usize>();
        let mut chains = vec![BTreeMap::new(); d + 1];
        for (p, blocks) in chains.iter_mut().enumerate() {
            for subset in (0..d).combinations(p) {
                let mut w = vec![0i64; rank];
                for &i in &subset {
                    for (x, y) in w.iter_mut().zip(&g.basis[i].weight) {
                        *x += y;
                    }
                }
                if range == WeightRange::Dominant && !is_dominant_for(&g.groups, &w) {
                    continue;
                }
                blocks.entry(w).or_insert_with(Vec::new).push(subset);
            }
        }
        WeightGradedComplex { chains }
    }

    pub fn block_dim(&self, p: usize, weight: &[i64]) -> usize {
        self.chains
            .get(p)
            .and_then(|m| m.get(weight))
            .map_or(0, |v| v.len())
    }

    /// The matrix of `d: Λ^p → Λ^{p−1}` on the weight-`χ` block, with
    /// rows indexed by the target basis.
    pub fn differential(&self, g: &LieStructure, p: usize, weight: &[i64]) -> Vec<Vec<i64>> {
        let empty = Vec::new();
        let sources = self
            .chains
            .get(p)
            .and_then(|m| m.get(weight))
            .unwrap_or(&empty);
        let targets = if p == 0 {
            &empty
        } else {
            self.chains[p - 1].get(weight).unwrap_or(&empty)
        };
        let position: HashMap<&[usize], usize> = targets
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_slice(), i))
            .collect();
        let mut m = vec![vec![0i64; sources.len()]; targets.len()];
        for (col, x) in sources.iter().enumerate() {
            for (i, j) in (0..x.len()).tuple_combinations() {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = x
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &b)| b)
                    .collect();
                for (k, c) in g.bracket(x[i], x[j]) {
                    if rest.contains(&k) {
                        continue;
                    }
                    let before = rest.iter().filter(|&&b| b < k).count();
                    let mut target = rest.clone();
                    target.insert(before, k);
                    let s = if before % 2 == 0 { sign } else { -sign };
                    let row = *position
                        .get(target.as_slice())
                        .expect("the differential preserves weight");
                    m[row][col] += s * c;
                }
            }
        }
        m
    }

    /// `d ∘ d = 0` on every block.
    pub fn check_d_squared(&self, g: &LieStructure) -> Result<()> {
        for p in 2..self.chains.len() {
            for weight in self.chains[p].keys() {
                let outer = self.differential(g, p - 1, weight);
                let inner = self.differential(g, p, weight);
                if outer.is_empty() || inner.is_empty() {
                    continue;
                }
                let product = linalg::multiply(&outer, &inner);
                if product.iter().flatten().any(|&x| x != 0) {
                    return Err(Error::InvalidStructure(format!(
                        "d∘d ≠ 0 in degree {p} at weight {weight:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn is_dominant_for(groups: &[ClassicalGroup], w: &[i64]) -> bool {
    let mut start = 0;
    groups.iter().all(|g| {
        let r = g.rank();
        let ok = g.is_dominant(&w[start..start + r]);
        start += r;
        ok
    })
}

/// The homology in each degree, as a character restricted to `range`.
pub fn ce_homology_characters(g: &LieStructure, range: WeightRange) -> Vec<Character> {
    let complex = WeightGradedComplex::new(g, range);
    let d = g.dim();
    // ranks of d_p on every block, computed in parallel
    let jobs: Vec<(usize, Vec<i64>)> = (1..=d)
        .flat_map(|p| complex.chains[p].keys().map(move |w| (p, w.clone())))
        .collect();
    let ranks: HashMap<(usize, Vec<i64>), usize> = jobs
        .into_par_iter()
        .map(|(p, w)| {
            let r = linalg::rank(&complex.differential(g, p, &w));
            ((p, w), r)
        })
        .collect();
    (0..=d)
        .map(|p| {
            let weights = complex.chains[p].iter().filter_map(|(w, chain)| {
                let out = if p == 0 { 0 } else { ranks[&(p, w.clone())] };
                let inc = ranks.get(&(p + 1, w.clone())).copied().unwrap_or(0);
                let h = chain.len() - out - inc;
                (h > 0).then(|| (w.clone(), h as i64))
            });
            Character::from_weights(g.groups.clone(), weights).expect("weights have the torus rank")
        })
        .collect()
}

/// `Σ_p (−1)^p ch Λ^p(g)` restricted to `range`.
pub fn euler_characteristic_of_chains(g: &LieStructure, range: WeightRange) -> Character {
    let complex = WeightGradedComplex::new(g, range);
    let mut out = Character::zero(g.groups.clone());
    for (p, blocks) in complex.chains.iter().enumerate() {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        for (w, chain) in blocks {
            out.add_weight(w.clone(), sign * chain.len() as i64);
        }
    }
    out
}

/// `Σ_p (−1)^p ch H_p`.
pub fn euler_characteristic(homology: &[Character]) -> Result<Character> {
    let groups = homology
        .first()
        .map(|c| c.groups().to_vec())
        .unwrap_or_default();
    let mut out = Character::zero(groups);
    for (p, h) in homology.iter().enumerate() {
        out.add_scaled(h, if p % 2 == 0 { 1 } else { -1 })?;
    }
    Ok(out)
}

fn label_partition(weight: &[i64], what: &str) -> Result<Partition> {
    let parts = weight
        .iter()
        .map(|&x| {
            usize::try_from(x)
                .map_err(|_| Error::MalformedWeight(format!("{what} label {weight:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn labels_from_irrep(family: &Family, label: &IrrepLabel) -> Result<Labels> {
    let e = label_partition(&label[0], "E")?;
    let v = match *family {
        Family::Sp { .. } => VLabel::Partition(label_partition(&label[1], "V")?),
        Family::O { m, .. } if m % 2 == 1 => VLabel::Partition(label_partition(&label[1], "V")?),
        Family::O { .. } => {
            let abs: Vec<i64> = label[1].iter().map(|x| x.abs()).collect();
            VLabel::Orthogonal {
                label: label_partition(&abs, "V")?,
                negative: label[1].last().is_some_and(|&x| x < 0),
            }
        }
        Family::Gl { .. } => {
            let w = &label[1];
            let pos: Vec<i64> = w.iter().copied().filter(|&x| x > 0).collect();
            let neg: Vec<i64> = w.iter().rev().filter(|&&x| x < 0).map(|x| -x).collect();
            VLabel::Mixed {
                pos: label_partition(&pos, "V")?,
                neg: label_partition(&neg, "V")?,
            }
        }
    };
    let f = match family {
        Family::Gl { .. } => Some(label_partition(&label[2], "F")?),
        _ => None,
    };
    Ok(Labels { e, v, f })
}

/// Runs the oracle and decomposes each degree into irreducibles of the
/// Levi factor, giving a table in the same shape as the Kostant tables.
pub fn equivariant_table_from_oracle(family: Family) -> Result<HomologyTable> {
    let g = build_lie_structure(&family)?;
    let homology = ce_homology_characters(&g, WeightRange::Dominant);
    let mut rows = Vec::new();
    for (degree, h) in homology.iter().enumerate() {
        for (label, mult) in h.decompose()? {
            let labels = labels_from_irrep(&family, &label)?;
            let levi_weight = levi_weight_from_labels(&labels, &family)?;
            for _ in 0..mult {
                rows.push(HomologySummand {
                    degree,
                    e_label: labels.e.clone(),
                    v_label: labels.v.clone(),
                    f_label: labels.f.clone(),
                    levi_weight: levi_weight.clone(),
                    generator: None,
                });
            }
        }
    }
    Ok(HomologyTable::new(family, rows))
}

/// Betti numbers `dim H_p`.
pub fn betti_numbers(g: &LieStructure) -> Vec<usize> {
    ce_homology_characters(g, WeightRange::All)
        .iter()
        .map(|c| c.dimension() as usize)
        .collect()
}

/// Betti numbers of a table, from the Weyl dimension of each row.
pub fn table_betti_numbers(table: &HomologyTable) -> Result<Vec<usize>> {
    let groups = family_groups(&table.family);
    let mut out = vec![0usize; table.max_degree() + 1];
    for row in &table.rows {
        let mut label = vec![row.e_label.padded(table.family.k())];
        label.push(row.v_label.weight(groups[1].rank()));
        if let Some(f) = &row.f_label {
            label.push(f.padded(groups[2].rank()));
        }
        out[row.degree] += crate::charlib::weyl_dimension(&groups, &label)? as usize;
    }
    Ok(out)
}

/// How strictly rows are matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonLevel {
    Exact,
    /// Even orthogonal labels are compared without their sign.
    Unsigned,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffRow {
    pub degree: usize,
    pub e_label: Partition,
    pub v_label: VLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_label: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TableDiff {
    pub only_in_first: Vec<DiffRow>,
    pub only_in_second: Vec<DiffRow>,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_first.is_empty() && self.only_in_second.is_empty()
    }
}

fn row_key(
    row: &HomologySummand,
    level: ComparisonLevel,
) -> (usize, Partition, VLabel, Option<Partition>) {
    let v = match level {
        ComparisonLevel::Exact => row.v_label.clone(),
        ComparisonLevel::Unsigned => row.v_label.unsigned(),
    };
    (row.degree, row.e_label.clone(), v, row.f_label.clone())
}

/// Multiset difference of the rows of two tables.
pub fn compare_tables(
    a: &HomologyTable,
    b: &HomologyTable,
    level: ComparisonLevel,
) -> Result<TableDiff> {
    if a.family != b.family {
        return Err(Error::ParameterMismatch(format!(
            "{} vs {}",
            a.family, b.family
        )));
    }
    let mut counts: BTreeMap<_, i64> = BTreeMap::new();
    for row in &a.rows {
        *counts.entry(row_key(row, level)).or_insert(0) += 1;
    }
    for row in &b.rows {
        *counts.entry(row_key(row, level)).or_insert(0) -= 1;
    }
    let mut diff = TableDiff::default();
    for ((degree, e_label, v_label, f_label), c) in counts {
        let row = DiffRow {
            degree,
            e_label,
            v_label,
            f_label,
        };
        let side = if c > 0 {
            &mut diff.only_in_first
        } else {
            &mut diff.only_in_second
        };
        side.extend(std::iter::repeat_n(row, c.unsigned_abs() as usize));
    }
    Ok(diff)
}

#[derive(Debug, Serialize)]
struct BlockDump {
    degree: usize,
    weight: Vec<i64>,
    sources: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
    differential: Vec<Vec<i64>>,
}

/// Structure constants and every nonzero differential block, for external
/// auditing.
pub fn dump_json(g: &LieStructure, range: WeightRange) -> serde_json::Value {
    let complex = WeightGradedComplex::new(g, range);
    let mut blocks = Vec::new();
    for p in 1..complex.chains.len() {
        for (w, sources) in &complex.chains[p] {
            let m = complex.differential(g, p, w);
            if m.iter().flatten().all(|&x| x == 0) {
                continue;
            }
            blocks.push(BlockDump {
                degree: p,
                weight: w.clone(),
                sources: sources.clone(),
                targets: complex.chains[p - 1].get(w).cloned().unwrap_or_default(),
                differential: m,
            });
        }
    }
    let brackets: Vec<_> = g
        .bracket_list()
        .into_iter()
        .map(|((i, j), terms)| serde_json::json!({ "i": i, "j": j, "terms": terms }))
        .collect();
    serde_json::json!({
        "groups": g.groups.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "basis": g.basis,
        "brackets": brackets,
        "differential_convention":
            "d(x_1 ^ ... ^ x_p) = sum_{i<j} (-1)^(i+j) [x_i, x_j] ^ x_1 ^ ... (omit i, j) ... ^ x_p",
        "blocks": blocks,
    })
}
