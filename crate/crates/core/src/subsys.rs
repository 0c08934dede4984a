//! Closed root subsystems and recognition of their Cartan type.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem, SimpleType};

/// A closed, negation-symmetric set of roots of an ambient system, stored as
/// membership flags over the ambient root indices.
#[derive(Debug, Clone)]
pub struct Subsystem<'a> {
    ambient: &'a RootSystem,
    members: Vec<bool>,
}

impl<'a> Subsystem<'a> {
    /// Validates membership, symmetry and closure.
    pub fn new(ambient: &'a RootSystem, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let mut members = vec![false; ambient.num_roots()];
        for r in roots {
            let k = ambient
                .root_index(&r)
                .ok_or_else(|| Error::NotARoot(r.to_string()))?;
            members[k] = true;
        }
        Self::from_members(ambient, members)
    }

    /// Builds from positive roots only, adding negatives.
    pub fn from_positive(
        ambient: &'a RootSystem,
        positive: impl IntoIterator<Item = Root>,
    ) -> Result<Self> {
        let mut members = vec![false; ambient.num_roots()];
        for r in positive {
            let k = ambient
                .root_index(&r)
                .ok_or_else(|| Error::NotARoot(r.to_string()))?;
            members[k] = true;
            members[ambient.negate_index(k)] = true;
        }
        Self::from_members(ambient, members)
    }

    /// `members[k]` flags `ambient.root_at(k)`.
    pub fn from_members(ambient: &'a RootSystem, members: Vec<bool>) -> Result<Self> {
        assert_eq!(members.len(), ambient.num_roots(), "membership vector length");
        let idx: Vec<usize> = (0..members.len()).filter(|&k| members[k]).collect();
        for &k in &idx {
            if !members[ambient.negate_index(k)] {
                return Err(Error::NotClosed(format!(
                    "{} present but its negative is not",
                    ambient.root_at(k)
                )));
            }
        }
        for (n, &a) in idx.iter().enumerate() {
            for &b in &idx[n..] {
                if let Some(c) = ambient.sum_index(a, b) {
                    if !members[c] {
                        return Err(Error::NotClosed(format!(
                            "{} + {} = {} missing",
                            ambient.root_at(a),
                            ambient.root_at(b),
                            ambient.root_at(c)
                        )));
                    }
                }
            }
        }
        Ok(Subsystem { ambient, members })
    }

    pub fn full(ambient: &'a RootSystem) -> Self {
        Subsystem {
            ambient,
            members: vec![true; ambient.num_roots()],
        }
    }

    pub fn ambient(&self) -> &'a RootSystem {
        self.ambient
    }

    /// Member roots, positives first.
    pub fn roots(&self) -> impl Iterator<Item = &'a Root> + '_ {
        let rs = self.ambient;
        (0..self.members.len())
            .filter(|&k| self.members[k])
            .map(move |k| rs.root_at(k))
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.ambient
            .root_index(r)
            .is_some_and(|k| self.members[k])
    }

    fn positive_indices(&self) -> Vec<usize> {
        (0..self.ambient.positive_roots().len())
            .filter(|&k| self.members[k])
            .collect()
    }

    /// Positive roots in ambient order.
    pub fn positive(&self) -> Vec<Root> {
        self.positive_indices()
            .into_iter()
            .map(|k| self.ambient.root_at(k).clone())
            .collect()
    }

    pub fn base(&self) -> Result<Vec<Root>> {
        base_of(self)
    }

    pub fn recognize(&self) -> Result<CartanType> {
        recognize(self)
    }
}

/// Indecomposable positive elements of a subsystem.
pub fn base_of(sub: &Subsystem<'_>) -> Result<Vec<Root>> {
    let rs = sub.ambient();
    let pos = sub.positive_indices();
    // β is decomposable iff β − β₁ is a positive member for some positive β₁.
    let base: Vec<Root> = pos
        .iter()
        .filter(|&&b| {
            !pos.iter().any(|&b1| {
                rs.sum_index(b, rs.negate_index(b1))
                    .is_some_and(|d| sub.members[d] && rs.root_at(d).is_positive())
            })
        })
        .map(|&b| rs.root_at(b).clone())
        .collect();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            if rs.pairing(a, b) > 0 || rs.pairing(b, a) > 0 {
                return Err(Error::NotClosed(format!(
                    "base elements {a} and {b} have positive Cartan integer"
                )));
            }
        }
    }
    Ok(base)
}

/// Cartan type of a reductive subalgebra: simple components plus torus rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    components: Vec<SimpleType>,
    torus_rank: usize,
}

/// Low-rank coincidences: B1 = C1 = A1, C2 = B2, D2 = A1 A1, D3 = A3.
fn normalize_label(family: Family, rank: usize) -> Result<Vec<SimpleType>> {
    use Family::*;
    let st = |f, r| SimpleType::new(f, r);
    Ok(match (family, rank) {
        (_, 0) => vec![],
        (B | C, 1) => vec![st(A, 1)?],
        (C, 2) => vec![st(B, 2)?],
        (D, 1) => {
            return Err(Error::BadCartanType(
                "D1 is a torus; write T1".to_string(),
            ))
        }
        (D, 2) => vec![st(A, 1)?, st(A, 1)?],
        (D, 3) => vec![st(A, 3)?],
        (f, r) => vec![st(f, r)?],
    })
}

impl CartanType {
    /// Normalizes and sorts the components.
    pub fn new(components: impl IntoIterator<Item = SimpleType>, torus_rank: usize) -> Self {
        let mut comps = Vec::new();
        for c in components {
            comps.extend(
                normalize_label(c.family(), c.rank()).expect("valid simple types normalize"),
            );
        }
        comps.sort_by(|a, b| b.rank().cmp(&a.rank()).then(a.family().cmp(&b.family())));
        CartanType {
            components: comps,
            torus_rank,
        }
    }

    /// Accepts raw `(family, rank)` labels including B1, C1, C2, D2, D3 and
    /// rank-0 placeholders such as `A0`.
    pub fn from_labels(labels: &[(Family, usize)], torus_rank: usize) -> Result<Self> {
        let mut comps = Vec::new();
        for &(f, r) in labels {
            comps.extend(normalize_label(f, r)?);
        }
        Ok(CartanType::new(comps, torus_rank))
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn total_rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    /// Renders with `sep` between factors; components listed in `aliases`
    /// are printed under the given label (e.g. A1 as "C1").
    pub fn render_with(&self, sep: &str, aliases: &[(SimpleType, &str)]) -> String {
        let mut parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                aliases
                    .iter()
                    .find(|(t, _)| t == c)
                    .map(|(_, s)| s.to_string())
                    .unwrap_or_else(|| c.to_string())
            })
            .collect();
        parts.extend(std::iter::repeat_n("T1".to_string(), self.torus_rank));
        if parts.is_empty() {
            return "trivial".to_string();
        }
        parts.join(sep)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(" ", &[]))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses "E6 T1 T1", "C3C1", "A2+T1" and the like.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadCartanType(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '+').collect();
        if cleaned == "trivial" {
            return Ok(CartanType::new([], 0));
        }
        let mut labels = Vec::new();
        let mut torus = 0;
        let mut chars = cleaned.chars().peekable();
        while let Some(letter) = chars.next() {
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let rank: usize = digits.parse().map_err(|_| bad())?;
            if letter == 'T' {
                torus += rank;
            } else {
                let fam = Family::from_letter(letter).ok_or_else(bad)?;
                labels.push((fam, rank));
            }
        }
        if labels.is_empty() && torus == 0 {
            return Err(bad());
        }
        CartanType::from_labels(&labels, torus).map_err(|_| bad())
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct CartanTypeJson {
    components: Vec<ComponentJson>,
    torus_rank: usize,
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CartanTypeJson {
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    family: c.family(),
                    rank: c.rank(),
                })
                .collect(),
            torus_rank: self.torus_rank,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CartanTypeJson::deserialize(d)?;
        let labels: Vec<_> = raw.components.iter().map(|c| (c.family, c.rank)).collect();
        CartanType::from_labels(&labels, raw.torus_rank).map_err(serde::de::Error::custom)
    }
}

/// Cartan type of a subsystem, torus rank counted against the ambient rank.
pub fn recognize(sub: &Subsystem<'_>) -> Result<CartanType> {
    let rs = sub.ambient();
    let base = base_of(sub)?;
    let k = base.len();
    let cartan: Vec<Vec<i32>> = base
        .iter()
        .map(|a| base.iter().map(|b| rs.pairing(a, b)).collect())
        .collect();
    let norms: Vec<i64> = base.iter().map(|b| rs.inner(b, b)).collect();

    let mut seen = vec![false; k];
    let mut comps = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < members.len() {
            let i = members[head];
            head += 1;
            for j in 0..k {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(classify_component(&members, &cartan, &norms)?);
    }
    let torus = rs.rank().checked_sub(k).ok_or_else(|| {
        Error::Unclassifiable(format!("base of size {k} exceeds ambient rank"))
    })?;
    Ok(CartanType::new(comps, torus))
}

/// Matches one connected Dynkin diagram by its shape certificate: degree
/// profile, edge multiplicities and which end of a multiple edge is short.
fn classify_component(members: &[usize], cartan: &[Vec<i32>], norms: &[i64]) -> Result<SimpleType> {
    let k = members.len();
    let unclassifiable = |why: &str| Error::Unclassifiable(format!("{k}-node component: {why}"));
    if k == 1 {
        return SimpleType::new(Family::A, 1);
    }
    let mut adj = vec![Vec::new(); k];
    let mut multiple: Vec<(usize, usize, i32)> = Vec::new();
    let mut edges = 0;
    for a in 0..k {
        for b in a + 1..k {
            let (i, j) = (members[a], members[b]);
            let m = cartan[i][j] * cartan[j][i];
            if m == 0 {
                continue;
            }
            if !(1..=3).contains(&m) {
                return Err(unclassifiable("edge multiplicity above 3"));
            }
            edges += 1;
            adj[a].push(b);
            adj[b].push(a);
            if m > 1 {
                multiple.push((a, b, m));
            }
        }
    }
    if edges != k - 1 {
        return Err(unclassifiable("diagram is not a tree"));
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let branch: Vec<usize> = (0..k).filter(|&v| degree[v] >= 3).collect();
    if degree.iter().any(|&d| d > 3) || branch.len() > 1 {
        return Err(unclassifiable("branching beyond a single trivalent node"));
    }

    match multiple.as_slice() {
        [] => {}
        [(_, _, 3)] => {
            return if k == 2 {
                SimpleType::new(Family::G, 2)
            } else {
                Err(unclassifiable("triple edge in a diagram larger than G2"))
            };
        }
        [(a, b, 2)] => {
            if !branch.is_empty() {
                return Err(unclassifiable("double edge with a branch node"));
            }
            if k == 2 {
                return SimpleType::new(Family::B, 2);
            }
            let (a, b) = (*a, *b);
            if degree[a] == 2 && degree[b] == 2 {
                return if k == 4 {
                    SimpleType::new(Family::F, 4)
                } else {
                    Err(unclassifiable("interior double edge outside F4"))
                };
            }
            let (end, inner) = if degree[a] == 1 { (a, b) } else { (b, a) };
            let fam = if norms[members[end]] < norms[members[inner]] {
                Family::B
            } else {
                Family::C
            };
            return SimpleType::new(fam, k);
        }
        _ => return Err(unclassifiable("more than one multiple edge")),
    }

    let Some(&center) = branch.first() else {
        return SimpleType::new(Family::A, k);
    };
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => SimpleType::new(Family::D, k),
        [1, 2, 2] => SimpleType::new(Family::E, 6),
        [1, 2, 3] => SimpleType::new(Family::E, 7),
        [1, 2, 4] => SimpleType::new(Family::E, 8),
        _ => Err(unclassifiable("branch arms match no simple type")),
    }
}
