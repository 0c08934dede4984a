//! Reference classification data: the quaternionic symmetric spaces with
//! their symmetric-space rank and quaternionic dimension, and the list of
//! complex forms `S = L/V` for every ambient type.
//!
//! Exceptional forms are listed explicitly in a JSON file. Classical forms
//! come in parametric families and are generated for the requested rank by
//! the rules in [`classical_entries`]; a golden file switches a family on with
//! a `{"kind": "classical", "family": ..., "min_rank": ..., "max_rank": ...}`
//! record.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Family, SimpleType};
use crate::subsys::CartanType;

pub const BUNDLED_THEOREM: &str = include_str!("../../../data/theorem41_exceptional.json");
pub const BUNDLED_CLASSICAL: &str = include_str!("../../../data/classical_generators.json");
pub const BUNDLED_TABLE: &str = include_str!("../../../data/table22.json");

/// Environment variable naming a golden file that replaces the bundled one.
pub const GOLDEN_ENV: &str = "QUATFORMS_GOLDEN";

/// One complex form of one ambient type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenEntry {
    pub ambient: SimpleType,
    pub label: String,
    pub l_type: CartanType,
    pub v_type: CartanType,
    pub s_description: String,
    pub noncompact_dual: String,
    pub equal_rank: bool,
    pub table_rank: usize,
    pub table_dim_h: usize,
    /// A factor of S collapses to a point (u = 0 in the product families).
    pub degenerate: bool,
}

impl GoldenEntry {
    pub fn key(&self) -> (CartanType, CartanType) {
        (self.l_type.clone(), self.v_type.clone())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormRecord {
    ambient: SimpleType,
    label: String,
    l_type: String,
    v_type: String,
    s_description: String,
    noncompact_dual: String,
    equal_rank: bool,
    table_rank: usize,
    table_dim_h: usize,
    #[serde(default)]
    degenerate: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassicalRecord {
    family: Family,
    min_rank: usize,
    max_rank: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GoldenRecord {
    Form(FormRecord),
    Classical(ClassicalRecord),
}

/// One row of the table of quaternionic symmetric spaces.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum TableRow {
    /// A family parametrized by `param = param_scale · rank + param_offset`;
    /// dim_ℍ = param and rank = min(param, rank_cap).
    Classical {
        family: Family,
        compact: String,
        noncompact: String,
        param: String,
        param_scale: i64,
        param_offset: i64,
        rank_cap: usize,
    },
    Exceptional {
        ambient: SimpleType,
        compact: String,
        noncompact: String,
        rank: usize,
        dim_h: usize,
    },
}

/// Table values resolved for one ambient type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableValues {
    pub ambient: SimpleType,
    pub compact: String,
    pub noncompact: String,
    /// Parameter assignment for classical rows, e.g. "r = 3".
    pub parameter: Option<String>,
    pub rank: usize,
    pub dim_h: usize,
}

#[derive(Debug, Clone)]
pub struct Table22 {
    rows: Vec<TableRow>,
}

impl Table22 {
    pub fn bundled() -> Self {
        Self::from_json_str(BUNDLED_TABLE).expect("bundled table parses")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let rows: Vec<TableRow> =
            serde_json::from_str(s).map_err(|e| Error::Golden(format!("table: {e}")))?;
        Ok(Table22 { rows })
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn values_for(&self, ty: SimpleType) -> Option<TableValues> {
        self.rows.iter().find_map(|row| match row {
            TableRow::Classical {
                family,
                compact,
                noncompact,
                param,
                param_scale,
                param_offset,
                rank_cap,
            } if *family == ty.family() => {
                let p = param_scale * ty.rank() as i64 + param_offset;
                (p >= 1).then(|| TableValues {
                    ambient: ty,
                    compact: compact.clone(),
                    noncompact: noncompact.clone(),
                    parameter: Some(format!("{param} = {p}")),
                    rank: (p as usize).min(*rank_cap),
                    dim_h: p as usize,
                })
            }
            TableRow::Exceptional {
                ambient,
                compact,
                noncompact,
                rank,
                dim_h,
            } if *ambient == ty => Some(TableValues {
                ambient: ty,
                compact: compact.clone(),
                noncompact: noncompact.clone(),
                parameter: None,
                rank: *rank,
                dim_h: *dim_h,
            }),
            _ => None,
        })
    }
}

/// Parsed golden file(s): explicit forms plus enabled classical generators.
#[derive(Debug, Clone)]
pub struct GoldenRegistry {
    source: String,
    records: Vec<GoldenRecord>,
    table: Table22,
}

impl GoldenRegistry {
    /// The data shipped with the crate.
    pub fn bundled() -> Self {
        let mut records = parse_records(BUNDLED_THEOREM, "bundled theorem data")
            .expect("bundled theorem data parses");
        records.extend(
            parse_records(BUNDLED_CLASSICAL, "bundled classical generators")
                .expect("bundled classical data parses"),
        );
        GoldenRegistry {
            source: "bundled".to_string(),
            records,
            table: Table22::bundled(),
        }
    }

    pub fn from_json_str(s: &str, source: &str) -> Result<Self> {
        Ok(GoldenRegistry {
            source: source.to_string(),
            records: parse_records(s, source)?,
            table: Table22::bundled(),
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Golden(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text, &path.display().to_string())
    }

    /// Explicit path, then `QUATFORMS_GOLDEN`, then the bundled data.
    pub fn resolve(flag: Option<&Path>) -> Result<Self> {
        if let Some(p) = flag {
            return Self::from_path(p);
        }
        match std::env::var_os(GOLDEN_ENV) {
            Some(p) if !p.is_empty() => Self::from_path(&PathBuf::from(p)),
            _ => Ok(Self::bundled()),
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn table(&self) -> &Table22 {
        &self.table
    }

    /// Validated entries for one ambient type; `None` when the data has no
    /// baseline for it.
    pub fn entries_for(&self, ty: SimpleType) -> Result<Option<Vec<GoldenEntry>>> {
        let mut entries = Vec::new();
        let mut covered = false;
        for rec in &self.records {
            match rec {
                GoldenRecord::Form(f) if f.ambient == ty => {
                    covered = true;
                    entries.push(form_entry(f)?);
                }
                GoldenRecord::Classical(c) if c.family == ty.family() => {
                    if !(c.min_rank..=c.max_rank).contains(&ty.rank()) {
                        return Err(Error::Golden(format!(
                            "{ty}: rank outside the {} generator's tested range {}..={}",
                            c.family, c.min_rank, c.max_rank
                        )));
                    }
                    covered = true;
                    let table = self.table.values_for(ty).ok_or_else(|| {
                        Error::Golden(format!("{ty}: no table row for family {}", c.family))
                    })?;
                    entries.extend(classical_entries(ty, &table)?);
                }
                _ => {}
            }
        }
        if !covered {
            return Ok(None);
        }
        validate(ty, &entries)?;
        Ok(Some(entries))
    }
}

fn parse_records(s: &str, source: &str) -> Result<Vec<GoldenRecord>> {
    serde_json::from_str(s).map_err(|e| Error::Golden(format!("{source}: {e}")))
}

fn form_entry(f: &FormRecord) -> Result<GoldenEntry> {
    let parse = |field: &str, text: &str| {
        text.parse::<CartanType>()
            .map_err(|_| Error::Golden(format!("{} {}: bad {field} {text:?}", f.ambient, f.label)))
    };
    Ok(GoldenEntry {
        ambient: f.ambient,
        label: f.label.clone(),
        l_type: parse("l_type", &f.l_type)?,
        v_type: parse("v_type", &f.v_type)?,
        s_description: f.s_description.clone(),
        noncompact_dual: f.noncompact_dual.clone(),
        equal_rank: f.equal_rank,
        table_rank: f.table_rank,
        table_dim_h: f.table_dim_h,
        degenerate: f.degenerate,
    })
}

fn validate(ty: SimpleType, entries: &[GoldenEntry]) -> Result<()> {
    let rs = build_root_system(ty);
    let dim_h = rs
        .quaternionic_decomposition()
        .map(|g| g.quaternionic_dim())
        .map_err(|e| Error::Golden(format!("{ty}: {e}")))?;
    let mut keys: BTreeMap<(CartanType, CartanType), &str> = BTreeMap::new();
    for e in entries {
        let accounted = e.l_type.total_rank() == ty.rank();
        if accounted != e.equal_rank {
            return Err(Error::Golden(format!(
                "{ty} {}: equal_rank = {} but L = {} has total rank {}",
                e.label,
                e.equal_rank,
                e.l_type,
                e.l_type.total_rank()
            )));
        }
        if e.table_dim_h != dim_h {
            return Err(Error::Golden(format!(
                "{ty} {}: table_dim_h = {} but the root data gives {dim_h}",
                e.label, e.table_dim_h
            )));
        }
        if let Some(prev) = keys.insert(e.key(), &e.label) {
            return Err(Error::Golden(format!(
                "{ty}: entries {prev} and {} share (L, V) = ({}, {})",
                e.label, e.l_type, e.v_type
            )));
        }
    }
    Ok(())
}

/// Convenience: load a golden file and resolve the entries for `ty`.
pub fn load_golden(path: &Path, ty: SimpleType) -> Result<Option<Vec<GoldenEntry>>> {
    GoldenRegistry::from_path(path)?.entries_for(ty)
}

// Type bookkeeping for the classical groups. Each helper returns simple
// labels and a torus count; rank-0 and low-rank labels are normalized by
// `CartanType::from_labels`.
#[derive(Default)]
struct Factors {
    labels: Vec<(Family, usize)>,
    torus: usize,
}

impl Factors {
    fn so(mut self, k: usize) -> Self {
        match k {
            0 | 1 => {}
            2 => self.torus += 1,
            k if k % 2 == 1 => self.labels.push((Family::B, (k - 1) / 2)),
            k => self.labels.push((Family::D, k / 2)),
        }
        self
    }

    /// S(U(k_1) × … × U(k_m)): SU parts plus a torus of rank m − 1.
    fn s_u(mut self, ks: &[usize]) -> Self {
        let present: Vec<usize> = ks.iter().copied().filter(|&k| k > 0).collect();
        for &k in &present {
            if k > 1 {
                self.labels.push((Family::A, k - 1));
            }
        }
        self.torus += present.len().saturating_sub(1);
        self
    }

    /// U(k) = SU(k) · U(1).
    fn u(mut self, k: usize) -> Self {
        if k > 1 {
            self.labels.push((Family::A, k - 1));
        }
        self.torus += 1;
        self
    }

    fn build(self) -> Result<CartanType> {
        CartanType::from_labels(&self.labels, self.torus)
    }
}

fn so() -> Factors {
    Factors::default()
}

fn entry(
    ty: SimpleType,
    table: &TableValues,
    label: String,
    l: Factors,
    v: Factors,
    s_description: String,
    noncompact_dual: String,
    degenerate: bool,
) -> Result<GoldenEntry> {
    let l_type = l.build()?;
    Ok(GoldenEntry {
        ambient: ty,
        label,
        equal_rank: l_type.total_rank() == ty.rank(),
        l_type,
        v_type: v.build()?,
        s_description,
        noncompact_dual,
        table_rank: table.rank,
        table_dim_h: table.dim_h,
        degenerate,
    })
}

/// Complex forms of the classical quaternionic spaces, for one rank.
///
/// * `SU(r+2)`, `r = n − 1`: (1a) `SO(r+2)/[SO(r)×SO(2)]`; (1b) for
///   `0 ≤ u ≤ r − u`, `P^u(ℂ) × P^{r−u}(ℂ)` with `L = S(U(u+1)×U(r−u+1))`.
/// * `SO(r+4)`, `r = 2n − 3` (B) or `2n − 4` (D): (2a) for even `r = 2r'`,
///   `SU(r'+2)/S(U(r')×U(2))` with `L = U(r'+2)`; (2b) for `0 ≤ u ≤ r − u`,
///   `SO(u+2)/[SO(u)×SO(2)] × SO(r−u+2)/[SO(r−u)×SO(2)]`.
/// * `Sp(n'+1)`, `n' = n − 1`: `U(n'+1)/[U(n')×U(1)] = P^{n'}(ℂ)`.
///
/// Product families are listed once per unordered pair `{u, r − u}`. For D4
/// the (2a) form and (2b) with `u = 0` are the same space through
/// `SU(4) ≅ Spin(6)`, so they are emitted as a single entry.
pub fn classical_entries(ty: SimpleType, table: &TableValues) -> Result<Vec<GoldenEntry>> {
    let n = ty.rank();
    let mut out = Vec::new();
    match ty.family() {
        Family::A => {
            if n < 2 {
                return Err(Error::Golden(format!("{ty}: no quaternionic space")));
            }
            let r = n - 1;
            out.push(entry(
                ty,
                table,
                "1a".into(),
                so().so(r + 2),
                so().so(r).so(2),
                format!("SO({})/[SO({r})×SO(2)]", r + 2),
                format!("SO({r},2)/[SO({r})×SO(2)]"),
                false,
            )?);
            for u in 0..=r / 2 {
                let w = r - u;
                out.push(entry(
                    ty,
                    table,
                    format!("1b(u={u})"),
                    so().s_u(&[u + 1, w + 1]),
                    so().s_u(&[u, 1, w, 1]),
                    format!(
                        "[SU({})/S(U({u})×U(1))] × [SU({})/S(U({w})×U(1))]",
                        u + 1,
                        w + 1
                    ),
                    format!("[SU({u},1)/S(U({u})×U(1))] × [SU({w},1)/S(U({w})×U(1))]"),
                    u == 0,
                )?);
            }
        }
        Family::B | Family::D => {
            let r = if ty.family() == Family::B {
                2 * n - 3
            } else {
                2 * n - 4
            };
            let mut start_u = 0;
            if r % 2 == 0 {
                let rp = r / 2;
                let merged = rp == 2;
                if merged {
                    start_u = 1;
                }
                out.push(entry(
                    ty,
                    table,
                    if merged { "2a=2b(u=0)".into() } else { "2a".into() },
                    so().u(rp + 2),
                    so().u(rp).u(2),
                    format!("SU({})/S(U({rp})×U(2))", rp + 2),
                    format!("SU({rp},2)/S(U({rp})×U(2))"),
                    false,
                )?);
            }
            for u in start_u..=r / 2 {
                let w = r - u;
                out.push(entry(
                    ty,
                    table,
                    format!("2b(u={u})"),
                    so().so(u + 2).so(w + 2),
                    so().so(u).so(2).so(w).so(2),
                    format!(
                        "SO({})/[SO({u})×SO(2)] × SO({})/[SO({w})×SO(2)]",
                        u + 2,
                        w + 2
                    ),
                    format!("SO({u},2)/[SO({u})×SO(2)] × SO({w},2)/[SO({w})×SO(2)]"),
                    u == 0,
                )?);
            }
        }
        Family::C => {
            let np = n - 1;
            out.push(entry(
                ty,
                table,
                "3".into(),
                so().u(np + 1),
                so().u(np).u(1),
                format!("U({})/[U({np})×U(1)]", np + 1),
                format!("U({np},1)/[U({np})×U(1)]"),
                false,
            )?);
        }
        _ => {
            return Err(Error::Golden(format!(
                "{ty}: exceptional types have no parametric generator"
            )))
        }
    }
    Ok(out)
}
