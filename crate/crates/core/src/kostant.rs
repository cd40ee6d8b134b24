//! Homology tables from Kostant's theorem with trivial coefficients: one
//! summand per minimal coset representative, in degree `ℓ(w)`, labelled by
//! the Levi weight `w(ρ) − ρ`.

use std::fmt;

use itertools::Itertools;
use num_rational::Rational64;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weyl::{self, Blocks, PositionOp, SignedPermutation, WeylFamily, WeylType};

/// One of the three families, with its parameters.
///
/// * `Sp { n, k }`: `(E ⊗ V) ⊕ Sym²E`, `dim V = 2n`, `dim E = k`.
/// * `O { m, k }`: `(E ⊗ V) ⊕ Λ²E`, `dim V = m`, `dim E = k`.
/// * `Gl { n, k, l }`: `(E ⊗ V) ⊕ (V* ⊗ F) ⊕ (E ⊗ F)`, dimensions `n, k, l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Sp { n: usize, k: usize },
    O { m: usize, k: usize },
    Gl { n: usize, k: usize, l: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Sp { .. } => "sp",
            Family::O { .. } => "o",
            Family::Gl { .. } => "gl",
        }
    }

    pub fn k(&self) -> usize {
        match *self {
            Family::Sp { k, .. } | Family::O { k, .. } | Family::Gl { k, .. } => k,
        }
    }

    pub fn weyl_family(&self) -> WeylFamily {
        match *self {
            Family::Sp { .. } => WeylFamily::Sp,
            Family::O { m, .. } if m % 2 == 1 => WeylFamily::OOdd,
            Family::O { .. } => WeylFamily::OEven,
            Family::Gl { .. } => WeylFamily::Gl,
        }
    }

    pub fn blocks(&self) -> Blocks {
        match *self {
            Family::Sp { n, k } => Blocks::new(k, n, 0),
            Family::O { m, k } => Blocks::new(k, m / 2, 0),
            Family::Gl { n, k, l } => Blocks::new(k, n, l),
        }
    }

    /// Rank of the ambient simple Lie algebra.
    pub fn rank(&self) -> usize {
        match self.weyl_family() {
            WeylFamily::Gl => self.blocks().total(),
            _ => self.blocks().k + self.blocks().n,
        }
    }

    pub fn weyl_type(&self) -> WeylType {
        self.weyl_family().weyl_type(self.rank())
    }

    /// Dimension of the nilpotent Lie algebra.
    pub fn dim(&self) -> usize {
        match *self {
            Family::Sp { n, k } => 2 * n * k + k * (k + 1) / 2,
            Family::O { m, k } => m * k + k * (k.saturating_sub(1)) / 2,
            Family::Gl { n, k, l } => k * n + n * l + k * l,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k() == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        if let Family::O { m: 0, .. } = self {
            return Err(Error::InvalidParameters("m must be at least 1".into()));
        }
        if self.rank() > weyl::ENUMERATION_MAX_RANK {
            return Err(Error::BudgetExceeded {
                what: "enumeration rank",
                got: self.rank(),
                limit: weyl::ENUMERATION_MAX_RANK,
            });
        }
        Ok(())
    }

    fn params_json(&self) -> serde_json::Value {
        match *self {
            Family::Sp { n, k } => serde_json::json!({ "n": n, "k": k }),
            Family::O { m, k } => serde_json::json!({ "m": m, "k": k }),
            Family::Gl { n, k, l } => serde_json::json!({ "n": n, "k": k, "l": l }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Sp { n, k } => write!(f, "sp(n={n}, k={k})"),
            Family::O { m, k } => write!(f, "o(m={m}, k={k})"),
            Family::Gl { n, k, l } => write!(f, "gl(n={n}, k={k}, l={l})"),
        }
    }
}

/// The label of the `V`-factor of a summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum VLabel {
    /// `Sp(2n)` or odd `SO(m)` highest weight.
    Partition(Partition),
    /// Even `SO(m)` highest weight `(λ_1, …, ±λ_n)`: the partition of
    /// absolute values and the sign of the last entry.
    Orthogonal { label: Partition, negative: bool },
    /// Rational `GL(V)` weight `(α_1, …, 0, …, −β_1)`.
    Mixed { pos: Partition, neg: Partition },
}

impl VLabel {
    /// Drops the sign of an even orthogonal label.
    pub fn unsigned(&self) -> VLabel {
        match self {
            VLabel::Orthogonal { label, .. } => VLabel::Partition(label.clone()),
            other => other.clone(),
        }
    }

    /// The highest weight as an integer vector of length `n`.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        match self {
            VLabel::Partition(p) => p.padded(n),
            VLabel::Orthogonal { label, negative } => {
                let mut v = label.padded(n);
                if *negative {
                    if let Some(last) = v.last_mut() {
                        *last = -*last;
                    }
                }
                v
            }
            VLabel::Mixed { pos, neg } => {
                let mut v = pos.padded(n);
                for (i, &b) in neg.parts().iter().enumerate() {
                    v[n - 1 - i] = -(b as i64);
                }
                v
            }
        }
    }
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VLabel::Partition(p) => write!(f, "{p}"),
            VLabel::Orthogonal { label, negative } => {
                write!(f, "{label}{}", if *negative { "-" } else { "+" })
            }
            VLabel::Mixed { pos, neg } => write!(f, "{pos};{neg}"),
        }
    }
}

/// The labels of one summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labels {
    pub e: Partition,
    pub v: VLabel,
    pub f: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySummand {
    pub degree: usize,
    pub e_label: Partition,
    pub v_label: VLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_label: Option<Partition>,
    pub levi_weight: Vec<i64>,
    /// The coset representative that produced the row, when known.
    #[serde(skip)]
    pub generator: Option<SignedPermutation>,
}

impl HomologySummand {
    pub fn labels(&self) -> Labels {
        Labels {
            e: self.e_label.clone(),
            v: self.v_label.clone(),
            f: self.f_label.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyTable {
    pub family: Family,
    pub rows: Vec<HomologySummand>,
}

impl Serialize for HomologyTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HomologyTable", 3)?;
        st.serialize_field("family", self.family.name())?;
        st.serialize_field("params", &self.family.params_json())?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

impl HomologyTable {
    pub fn new(family: Family, mut rows: Vec<HomologySummand>) -> Self {
        rows.sort_by(|a, b| (a.degree, &a.levi_weight).cmp(&(b.degree, &b.levi_weight)));
        HomologyTable { family, rows }
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.degree).max().unwrap_or(0)
    }

    pub fn rows_in_degree(&self, degree: usize) -> impl Iterator<Item = &HomologySummand> {
        self.rows.iter().filter(move |r| r.degree == degree)
    }

    /// The rows exactly as printed in the literature: degree, two spaces,
    /// then the Levi weight tuple.
    pub fn to_tuples(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&format!(
                "{}  ({})\n",
                row.degree,
                row.levi_weight.iter().join(", ")
            ));
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\te_label\tv_label\tf_label\tlevi_weight\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t({})\n",
                row.degree,
                row.e_label,
                row.v_label,
                row.f_label
                    .as_ref()
                    .map(|p| p.to_string())
                    .unwrap_or_default(),
                row.levi_weight.iter().join(", ")
            ));
        }
        out
    }
}

/// `w_λ` for `λ` inside the `n × k` rectangle: `w_λ(ρ)` lists the right-step
/// positions in decreasing order, then the up-step positions.
pub fn w_from_partition(lambda: &Partition, n: usize, k: usize) -> Result<SignedPermutation> {
    let path = lambda.to_lattice_path(n, k)?;
    let total = (n + k) as i32;
    // ρ_j = n + k + 1 − j, so the value p sits at index n + k + 1 − p
    let image = path
        .rights()
        .iter()
        .rev()
        .chain(path.ups().iter().rev())
        .map(|&p| total + 1 - p as i32)
        .collect();
    SignedPermutation::new(WeylType::BC(n + k), image)
}

/// `u_c = t_0 t_1 ⋯ t_{c−1}` applied on the left, where `t_i` swaps block
/// positions `k − i` and `k − i + 1` and `t_0` negates position `k`. On the
/// first block `(γ_k, …, γ_1)` this deletes `γ_c` and appends `−γ_c`.
pub fn strip_lift(w: &SignedPermutation, c: usize, k: usize) -> Result<SignedPermutation> {
    if c == 0 || c > k || k > w.rank() {
        return Err(Error::InvalidParameters(format!(
            "strip lift needs 1 <= c <= k <= rank, got c={c}, k={k}"
        )));
    }
    let mut out = w.clone();
    for i in (1..c).rev() {
        out = out.left_mul(&PositionOp::Swap(k - i - 1));
    }
    Ok(out.left_mul(&PositionOp::Negate(k - 1)))
}

/// A coset representative together with the rectangle partition and the
/// subset of lifts it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredElement {
    pub w: SignedPermutation,
    pub lambda: Partition,
    pub subset: Vec<usize>,
}

/// All `2^k·C(n+k, k)` representatives for the symplectic family, as
/// `u_{i_r} ⋯ u_{i_1} w_λ` over `λ ⊆ n × k` and `{i_1 < … < i_r} ⊆ {1, …, k}`.
pub fn enumerate_wp_structured_sp(n: usize, k: usize) -> Result<Vec<StructuredElement>> {
    Family::Sp { n, k }.validate()?;
    let mut out = Vec::new();
    for lambda in Partition::in_box(n, k) {
        let base = w_from_partition(&lambda, n, k)?;
        for subset in (1..=k).powerset() {
            let mut w = base.clone();
            for &i in &subset {
                w = strip_lift(&w, i, k)?;
            }
            out.push(StructuredElement {
                w,
                lambda: lambda.clone(),
                subset,
            });
        }
    }
    Ok(out)
}

fn as_partition(values: impl IntoIterator<Item = i64>, what: &str) -> Result<Partition> {
    let parts = values
        .into_iter()
        .map(|x| {
            usize::try_from(x)
                .map_err(|_| Error::MalformedWeight(format!("{what}: negative entry {x}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| Error::MalformedWeight(format!("{what}: {e}")))
}

/// Reads the labels off a Levi weight `w(ρ) − ρ`.
pub fn parse_levi_weight(v: &[i64], family: &Family) -> Result<Labels> {
    let blocks = family.blocks();
    let expected = family.rank();
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: v.len(),
        });
    }
    let (k, n) = (blocks.k, blocks.n);
    let e = as_partition(v[..k].iter().rev().map(|&x| -x), "E-block")?;
    let middle = &v[k..k + n];
    let (vl, f) = match family.weyl_family() {
        WeylFamily::Sp | WeylFamily::OOdd => (
            VLabel::Partition(as_partition(middle.iter().copied(), "V-block")?),
            None,
        ),
        WeylFamily::OEven => {
            let negative = middle.last().is_some_and(|&x| x < 0);
            let label = as_partition(middle.iter().map(|x| x.abs()), "V-block")?;
            if middle.windows(2).any(|w| w[0] < w[1].abs()) {
                return Err(Error::MalformedWeight(format!("V-block {middle:?}")));
            }
            (VLabel::Orthogonal { label, negative }, None)
        }
        WeylFamily::Gl => {
            if middle.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::MalformedWeight(format!("V-block {middle:?}")));
            }
            let pos = as_partition(middle.iter().copied().filter(|&x| x > 0), "V-block")?;
            let neg = as_partition(
                middle.iter().rev().filter(|&&x| x < 0).map(|x| -x),
                "V-block",
            )?;
            let f = as_partition(v[k + n..].iter().copied(), "F-block")?;
            (VLabel::Mixed { pos, neg }, Some(f))
        }
    };
    Ok(Labels { e, v: vl, f })
}

/// The Levi weight carrying the given labels; inverse of
/// [`parse_levi_weight`].
pub fn levi_weight_from_labels(labels: &Labels, family: &Family) -> Result<Vec<i64>> {
    let blocks = family.blocks();
    let (k, n) = (blocks.k, blocks.n);
    if labels.e.length() > k {
        return Err(Error::InvalidLabel {
            group: format!("GL({k})"),
            label: labels.e.to_string(),
        });
    }
    let mut v: Vec<i64> = labels.e.padded(k).into_iter().rev().map(|x| -x).collect();
    v.extend(labels.v.weight(n));
    if let Some(f) = &labels.f {
        v.extend(f.padded(blocks.l));
    }
    Ok(v)
}

fn summand(family: &Family, w: SignedPermutation) -> Result<HomologySummand> {
    let rho = weyl::rho(family.weyl_family(), family.blocks())?;
    let zero = vec![Rational64::zero(); rho.len()];
    let levi = weyl::integral(&w.dot_action(&zero, &rho)?)
        .ok_or_else(|| Error::MalformedWeight("non-integral Levi weight".into()))?;
    let labels = parse_levi_weight(&levi, family)?;
    Ok(HomologySummand {
        degree: w.length(&rho)?,
        e_label: labels.e,
        v_label: labels.v,
        f_label: labels.f,
        levi_weight: levi,
        generator: Some(w),
    })
}

/// The homology of the family's nilpotent Lie algebra, one row per minimal
/// coset representative.
pub fn homology_table(family: Family) -> Result<HomologyTable> {
    family.validate()?;
    let elements = match family {
        Family::Sp { n, k } => enumerate_wp_structured_sp(n, k)?
            .into_iter()
            .map(|s| s.w)
            .collect(),
        _ => weyl::enumerate_wp(family.weyl_family(), family.blocks())?,
    };
    let rows = elements
        .into_iter()
        .map(|w| summand(&family, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyTable::new(family, rows))
}
