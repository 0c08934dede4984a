//! Exhaustive search over inner involutions.
//!
//! Every inner involution is `Ad(exp(πi h))` for `h` in the coweight lattice,
//! and its action on roots only depends on `h` mod 2, so the `2^rank`
//! coweight vectors with entries in {0, 1} over denominator 2 cover all of
//! them. Accepted forms are grouped by their normalized `(L, V)` type.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::complexform::{analyze, ComplexFormAnalysis};
use crate::error::{Error, Result};
use crate::golden::GoldenEntry;
use crate::involution::{Basis, ToralElement};
use crate::rootsys::{RootSystem, SimpleType};
use crate::subsys::CartanType;

/// Largest rank enumerated without an explicit override.
pub const DEFAULT_RANK_CAP: usize = 10;

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub rank_cap: usize,
    pub parallel: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            rank_cap: DEFAULT_RANK_CAP,
            parallel: true,
        }
    }
}

/// All `2^rank` coweight-basis candidates over denominator 2, zero included,
/// in lexicographic order of coordinates.
pub fn enumerate_involutions(rs: &RootSystem, rank_cap: usize) -> Result<Vec<ToralElement>> {
    let n = rs.rank();
    if n < 2 {
        return Err(Error::NoQuaternionicGrading(rs.simple_type().to_string()));
    }
    if n > rank_cap {
        return Err(Error::RankCapExceeded { rank: n, cap: rank_cap });
    }
    (0u64..1 << n)
        .map(|mask| {
            let coords = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as i64).collect();
            ToralElement::new(coords, 2, Basis::Coweight)
        })
        .collect()
}

/// Runs the complex-form analysis on every candidate, in candidate order.
pub fn analyze_all(rs: &RootSystem, opts: ClassifyOptions) -> Result<Vec<ComplexFormAnalysis>> {
    let gd = rs.quaternionic_decomposition()?;
    let candidates = enumerate_involutions(rs, opts.rank_cap)?;
    if opts.parallel {
        candidates.par_iter().map(|t| analyze(rs, &gd, t)).collect()
    } else {
        candidates.iter().map(|t| analyze(rs, &gd, t)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoundForm {
    pub l_type: CartanType,
    pub v_type: CartanType,
    /// First candidate, in enumeration order, producing this type.
    pub witness: ToralElement,
    pub multiplicity: usize,
    /// Matching golden label, if any.
    pub golden_label: Option<String>,
}

impl FoundForm {
    pub fn key(&self) -> (CartanType, CartanType) {
        (self.l_type.clone(), self.v_type.clone())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub ambient: SimpleType,
    pub dim_h: usize,
    pub candidates: usize,
    pub found: Vec<FoundForm>,
    /// `false` when the golden data has nothing for this type.
    pub baseline: bool,
    pub expected_equal_rank: Vec<GoldenEntry>,
    pub missing: Vec<GoldenEntry>,
    pub unexpected: Vec<FoundForm>,
    pub skipped_unequal_rank: Vec<GoldenEntry>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.baseline && self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Groups accepted analyses by `(L, V)`; input order decides the witness.
pub fn dedupe(analyses: &[ComplexFormAnalysis]) -> Vec<FoundForm> {
    let mut groups: BTreeMap<(CartanType, CartanType), FoundForm> = BTreeMap::new();
    for a in analyses.iter().filter(|a| a.verdict.is_complex_form()) {
        groups
            .entry((a.l_type.clone(), a.v_type.clone()))
            .and_modify(|f| f.multiplicity += 1)
            .or_insert_with(|| FoundForm {
                l_type: a.l_type.clone(),
                v_type: a.v_type.clone(),
                witness: a.sym.clone(),
                multiplicity: 1,
                golden_label: None,
            });
    }
    groups.into_values().collect()
}

/// Searches all inner involutions of `rs` and diffs the accepted `(L, V)`
/// types against the equal-rank golden entries. `golden = None` marks the
/// report as having no baseline.
pub fn classify_equal_rank(
    rs: &RootSystem,
    golden: Option<&[GoldenEntry]>,
    opts: ClassifyOptions,
) -> Result<ClassificationReport> {
    let analyses = analyze_all(rs, opts)?;
    let mut found = dedupe(&analyses);
    let dim_h = analyses.first().map_or(0, |a| a.dim_h);

    let (expected, skipped): (Vec<GoldenEntry>, Vec<GoldenEntry>) = golden
        .unwrap_or(&[])
        .iter()
        .cloned()
        .partition(|e| e.equal_rank);

    for f in &mut found {
        f.golden_label = expected
            .iter()
            .find(|e| e.key() == f.key())
            .map(|e| e.label.clone());
    }
    let missing = expected
        .iter()
        .filter(|e| !found.iter().any(|f| f.key() == e.key()))
        .cloned()
        .collect();
    let unexpected = if golden.is_some() {
        found.iter().filter(|f| f.golden_label.is_none()).cloned().collect()
    } else {
        Vec::new()
    };

    Ok(ClassificationReport {
        ambient: rs.simple_type(),
        dim_h,
        candidates: analyses.len(),
        found,
        baseline: golden.is_some(),
        expected_equal_rank: expected,
        missing,
        unexpected,
        skipped_unequal_rank: skipped,
    })
}

pub fn render_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ambient: {} (dim_H M = {})", r.ambient, r.dim_h);
    let _ = writeln!(s, "candidates: {} (coweight basis, denominator 2)", r.candidates);
    let _ = writeln!(s, "found {} complex form(s):", r.found.len());
    for f in &r.found {
        let _ = writeln!(
            s,
            "  L = {:<14} V = {:<18} witness {}  x{}  [{}]",
            f.l_type.to_string(),
            f.v_type.to_string(),
            f.witness,
            f.multiplicity,
            f.golden_label.as_deref().unwrap_or("no golden match")
        );
    }
    if !r.baseline {
        let _ = writeln!(s, "no golden baseline for {}", r.ambient);
        let _ = writeln!(s, "result: UNVERIFIED");
        return s;
    }
    if !r.skipped_unequal_rank.is_empty() {
        let _ = writeln!(s, "skipped (unequal rank, not reachable by toral involutions):");
        for e in &r.skipped_unequal_rank {
            let _ = writeln!(
                s,
                "  {:<10} L = {:<14} V = {:<18} {}",
                e.label,
                e.l_type.to_string(),
                e.v_type.to_string(),
                e.s_description
            );
        }
    }
    let list = |entries: Vec<String>| {
        if entries.is_empty() {
            "none".to_string()
        } else {
            entries.join(", ")
        }
    };
    let _ = writeln!(
        s,
        "missing: {}",
        list(
            r.missing
                .iter()
                .map(|e| format!("{} ({} / {})", e.label, e.l_type, e.v_type))
                .collect()
        )
    );
    let _ = writeln!(
        s,
        "unexpected: {}",
        list(
            r.unexpected
                .iter()
                .map(|f| format!("{} / {}", f.l_type, f.v_type))
                .collect()
        )
    );
    let _ = writeln!(s, "result: {}", if r.passed() { "PASS" } else { "FAIL" });
    s
}

pub fn render_json(r: &ClassificationReport) -> serde_json::Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    v["passed"] = serde_json::Value::Bool(r.passed());
    v
}
