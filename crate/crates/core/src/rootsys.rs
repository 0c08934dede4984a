//! Simple root systems in the simple-root basis.
//!
//! Everything uses Bourbaki numbering. Indices are 0-based in the API and
//! 1-based in every rendered report. Squared lengths are stored scaled by
//! [`LENGTH_SCALE`] over the "long roots have squared length 2" normalization,
//! so G2's short root (2/3) stays integral.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stored squared length = `LENGTH_SCALE` × squared length (long = 2).
pub const LENGTH_SCALE: i64 = 6;
const LONG: i64 = 2 * LENGTH_SCALE;

/// Largest rank accepted for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    fn valid_range(self) -> &'static str {
        match self {
            Family::A => "1..=16",
            Family::B => "2..=16",
            Family::C => "2..=16",
            Family::D => "3..=16",
            Family::E => "6, 7 or 8",
            Family::F => "4",
            Family::G => "2",
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A => (1..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::B | Family::C => (2..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::D => (3..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple type such as `E8` or `B2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.accepts(rank) {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
                valid: family.valid_range().to_string(),
            });
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every type the golden data and the property suites cover: classical
    /// ranks up to `max_classical`, plus all exceptional types.
    pub fn all_up_to(max_classical: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            for rank in 1..=max_classical {
                if let Ok(t) = SimpleType::new(fam, rank) {
                    out.push(t);
                }
            }
        }
        for (fam, rank) in [
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            out.push(SimpleType { family: fam, rank });
        }
        out
    }
}

/// Parses labels such as `"E8"`.
pub fn parse_type(label: &str) -> Result<SimpleType> {
    label.parse()
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let first = chars.next().ok_or_else(|| Error::MalformedLabel(s.to_string()))?;
        let digits = chars.as_str();
        if !first.is_ascii_alphabetic()
            || digits.is_empty()
            || !digits.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::MalformedLabel(s.to_string()));
        }
        let family =
            Family::from_letter(first).ok_or_else(|| Error::UnknownFamily(first.to_string()))?;
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::MalformedLabel(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Adds `k` times the `i`-th simple root.
    pub fn shifted(&self, i: usize, k: i32) -> Root {
        let mut v = self.0.clone();
        v[i] += k;
        Root(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Dynkin diagram of a type: scaled squared lengths and edges (0-based).
fn diagram(t: SimpleType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let n = t.rank;
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family {
        Family::A => (vec![LONG; n], chain(n)),
        Family::B => {
            let mut l = vec![LONG; n];
            l[n - 1] = LONG / 2;
            (l, chain(n))
        }
        Family::C => {
            let mut l = vec![LONG / 2; n];
            l[n - 1] = LONG;
            (l, chain(n))
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (vec![LONG; n], e)
        }
        Family::E => {
            // 1-3-4-5-...-n with 2 hanging off 4
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![LONG; n], e)
        }
        Family::F => (vec![LONG, LONG, LONG / 2, LONG / 2], chain(4)),
        Family::G => (vec![LONG / 3, LONG], chain(2)),
    }
}

/// Root system of a simple type: Cartan matrix, positive roots and highest
/// root. Immutable once built.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i32>>,
    lengths: Vec<i64>,
    form: Vec<Vec<i64>>,
    positive: Vec<Root>,
    /// Positive roots, then their negatives in the same order.
    all: Vec<Root>,
    index: HashMap<Root, usize>,
    sums: OnceLock<Vec<u32>>,
}

const NO_ROOT: u32 = u32::MAX;

impl RootSystem {
    pub fn new(ty: SimpleType) -> Self {
        build_root_system(ty)
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `cartan()[i][j] = ⟨α_i, α_j∨⟩`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Scaled squared lengths of the simple roots (see [`LENGTH_SCALE`]).
    pub fn root_lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.all.iter().cloned()
    }

    /// Number of roots, `2 |Δ⁺|`.
    pub fn num_roots(&self) -> usize {
        self.all.len()
    }

    /// Root with index `k`: `k < |Δ⁺|` are the positive roots in order,
    /// `k + |Δ⁺|` is the negative of root `k`.
    pub fn root_at(&self, k: usize) -> &Root {
        &self.all[k]
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn negate_index(&self, k: usize) -> usize {
        let n = self.positive.len();
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    /// Index of `root_at(i) + root_at(j)` when that sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let m = self.all.len();
        let table = self.sums.get_or_init(|| {
            let mut t = vec![NO_ROOT; m * m];
            for a in 0..m {
                for b in a..m {
                    if let Some(&k) = self.index.get(&(&self.all[a] + &self.all[b])) {
                        t[a * m + b] = k as u32;
                        t[b * m + a] = k as u32;
                    }
                }
            }
            t
        });
        let k = table[i * m + j];
        (k != NO_ROOT).then_some(k as usize)
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Scaled invariant form `LENGTH_SCALE · (a, b)`.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let (a, b) = (a.coeffs(), b.coeffs());
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                acc += ai as i64 * bj as i64 * self.form[i][j];
            }
        }
        acc
    }

    /// `⟨a, b∨⟩ = 2(a, b)/(b, b)` for any vector `a` and nonzero `b`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i32 {
        let num = 2 * self.inner(a, b);
        let den = self.inner(b, b);
        debug_assert!(den != 0 && num % den == 0, "non-integral pairing");
        (num / den) as i32
    }

    /// `⟨α, α_i∨⟩` computed from the Cartan matrix, without a membership check.
    pub(crate) fn simple_pairing(&self, a: &Root, i: usize) -> i32 {
        a.coeffs()
            .iter()
            .enumerate()
            .map(|(j, &n)| n * self.cartan[j][i])
            .sum()
    }

    /// `⟨α, α_i∨⟩` for a root `α`.
    pub fn coroot_pairing(&self, a: &Root, i: usize) -> Result<i32> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        if !self.contains(a) {
            return Err(Error::NotARoot(a.to_string()));
        }
        Ok(self.simple_pairing(a, i))
    }

    /// Simple reflection `s_i(v) = v − ⟨v, α_i∨⟩ α_i`.
    pub fn reflect(&self, v: &Root, i: usize) -> Root {
        v.shifted(i, -self.simple_pairing(v, i))
    }

    /// Simple roots to which the highest root pairs positively: the
    /// attachment set of −θ in the extended diagram.
    pub fn node_set(&self) -> Result<Vec<usize>> {
        if self.rank() < 2 {
            return Err(Error::NoQuaternionicGrading(self.ty.to_string()));
        }
        let theta = self.highest_root();
        Ok((0..self.rank())
            .filter(|&i| self.simple_pairing(theta, i) > 0)
            .collect())
    }

    pub fn quaternionic_decomposition(&self) -> Result<GradedDecomposition> {
        quaternionic_decomposition(self)
    }
}

/// Builds a root system by extending root strings height by height.
pub fn build_root_system(ty: SimpleType) -> RootSystem {
    let n = ty.rank;
    let (lengths, edges) = diagram(ty);
    let mut form = vec![vec![0i64; n]; n];
    for (i, row) in form.iter_mut().enumerate() {
        row[i] = lengths[i];
    }
    for &(i, j) in &edges {
        let v = -lengths[i].max(lengths[j]) / 2;
        form[i][j] = v;
        form[j][i] = v;
    }
    let cartan: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (2 * form[i][j] / lengths[j]) as i32)
                .collect()
        })
        .collect();

    // Root strings: for β positive and β ≠ α_i, the α_i-string through β is
    // β − pα_i, …, β + qα_i with p − q = ⟨β, α_i∨⟩; β + α_i is a root iff q > 0.
    let mut known: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut layer: Vec<Root> = known.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                if beta.coeffs().iter().enumerate().all(|(j, &c)| c == (i == j) as i32) {
                    continue;
                }
                let mut p = 0;
                while known.contains(&beta.shifted(i, -(p + 1))) {
                    p += 1;
                }
                let pair: i32 = (0..n).map(|j| beta.coeffs()[j] * cartan[j][i]).sum();
                if p - pair > 0 {
                    next.insert(beta.shifted(i, 1));
                }
            }
        }
        known.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }

    let mut positive: Vec<Root> = known.into_iter().collect();
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    let all: Vec<Root> = positive
        .iter()
        .cloned()
        .chain(positive.iter().map(|r| -r))
        .collect();
    let index = all.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
    RootSystem {
        ty,
        cartan,
        lengths,
        form,
        positive,
        all,
        index,
        sums: OnceLock::new(),
    }
}

/// Free-function form of [`RootSystem::node_set`].
pub fn node_set(rs: &RootSystem) -> Result<Vec<usize>> {
    rs.node_set()
}

/// `Σ_{i ∈ nodes} n_i(α)`.
pub fn grade(nodes: &[usize], a: &Root) -> i32 {
    nodes.iter().map(|&i| a.coeffs()[i]).sum()
}

/// The highest-root grading `g = k ⊕ m`: `k` holds grades 0 and ±2, `m` grades ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub nodes: Vec<usize>,
    pub k_pos: Vec<Root>,
    pub m_pos: Vec<Root>,
}

impl GradedDecomposition {
    pub fn grade(&self, a: &Root) -> i32 {
        grade(&self.nodes, a)
    }

    pub fn quaternionic_dim(&self) -> usize {
        self.m_pos.len() / 2
    }

    /// True for roots of 𝔨 (grade 0 or ±2).
    pub fn in_k(&self, a: &Root) -> bool {
        self.grade(a).abs() != 1
    }
}

pub fn quaternionic_decomposition(rs: &RootSystem) -> Result<GradedDecomposition> {
    let nodes = rs.node_set()?;
    let (m_pos, k_pos): (Vec<Root>, Vec<Root>) = rs
        .positive_roots()
        .iter()
        .cloned()
        .partition(|r| grade(&nodes, r) == 1);
    Ok(GradedDecomposition {
        nodes,
        k_pos,
        m_pos,
    })
}
