//! The complex-form test for a toral involution against the highest-root
//! grading: 𝔩 is the centralizer, 𝔰 = 𝔩 ∩ 𝔪, 𝔳 = 𝔩 ∩ 𝔨.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::involution::{centralizer, ToralElement};
use crate::rootsys::{GradedDecomposition, Root, RootSystem, SimpleType};
use crate::subsys::{CartanType, Subsystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ComplexForm,
    NotComplexForm,
}

impl Verdict {
    pub fn is_complex_form(self) -> bool {
        self == Verdict::ComplexForm
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexFormAnalysis {
    pub ambient: SimpleType,
    pub sym: ToralElement,
    pub l_type: CartanType,
    pub v_type: CartanType,
    /// Positive roots of 𝔰, in ambient order.
    pub s_pos: Vec<Root>,
    /// `|Δ⁺(𝔪)|`.
    pub m_count: usize,
    /// V ∩ Sp(1) is a circle: θ is not a root of 𝔩.
    pub circle_ok: bool,
    /// dim_ℂ S.
    pub dim_s: usize,
    /// dim_ℍ M.
    pub dim_h: usize,
    pub step6_count: i64,
    /// `s_pos ⊔ (θ − s_pos) = Δ⁺(𝔪)`.
    pub disjoint_cover: bool,
    pub verdict: Verdict,
}

impl ComplexFormAnalysis {
    /// Names of the criteria that failed; empty for a complex form.
    pub fn failed_criteria(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.circle_ok {
            out.push("circle condition (highest root lies in L, so V contains Sp(1))");
        }
        if self.dim_s != self.dim_h {
            out.push("dimension condition (dim_C S != dim_H M)");
        }
        out
    }
}

pub fn analyze(
    rs: &RootSystem,
    gd: &GradedDecomposition,
    t: &ToralElement,
) -> Result<ComplexFormAnalysis> {
    let l = centralizer(rs, t)?;
    let l_type = l.recognize()?;
    let l_pos = l.positive();

    let s_pos: Vec<Root> = l_pos.iter().filter(|r| gd.grade(r) == 1).cloned().collect();
    let v = Subsystem::from_positive(rs, l_pos.iter().filter(|r| gd.in_k(r)).cloned())?;
    let v_type = v.recognize()?;

    let theta = rs.highest_root();
    let circle_ok = !l.contains(theta);
    let dim_s = s_pos.len();
    let dim_h = gd.quaternionic_dim();
    let step6 = step6_count(rs, gd, &s_pos);
    let disjoint_cover = disjoint_cover(rs, gd, &s_pos);
    let verdict = if circle_ok && dim_s == dim_h {
        Verdict::ComplexForm
    } else {
        Verdict::NotComplexForm
    };

    Ok(ComplexFormAnalysis {
        ambient: rs.simple_type(),
        sym: t.clone(),
        l_type,
        v_type,
        s_pos,
        m_count: gd.m_pos.len(),
        circle_ok,
        dim_s,
        dim_h,
        step6_count: step6,
        disjoint_cover,
        verdict,
    })
}

/// Stacks the rows `s_pos`, `θ − s_pos` and `Δ⁺(𝔪)`, removes duplicates and
/// returns how many rows exceed `|Δ⁺(𝔪)|`. Rows `θ − β` are kept whether or
/// not they are roots.
pub fn step6_count(rs: &RootSystem, gd: &GradedDecomposition, s_pos: &[Root]) -> i64 {
    let theta = rs.highest_root();
    let rows: BTreeSet<Root> = s_pos
        .iter()
        .cloned()
        .chain(s_pos.iter().map(|b| theta - b))
        .chain(gd.m_pos.iter().cloned())
        .collect();
    rows.len() as i64 - gd.m_pos.len() as i64
}

/// Element-for-element check that `s_pos` and `θ − s_pos` partition `Δ⁺(𝔪)`.
pub fn disjoint_cover(rs: &RootSystem, gd: &GradedDecomposition, s_pos: &[Root]) -> bool {
    let theta = rs.highest_root();
    let s: BTreeSet<&Root> = s_pos.iter().collect();
    let reflected: BTreeSet<Root> = s_pos.iter().map(|b| theta - b).collect();
    if reflected.iter().any(|r| s.contains(r)) {
        return false;
    }
    let union: BTreeSet<Root> = s_pos.iter().cloned().chain(reflected).collect();
    let m: BTreeSet<Root> = gd.m_pos.iter().cloned().collect();
    union == m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct AnalysisJson<'a> {
    ambient: String,
    sym: &'a ToralElement,
    l_type: &'a CartanType,
    v_type: &'a CartanType,
    l_type_text: String,
    v_type_text: String,
    s_count: usize,
    m_count: usize,
    dim_h: usize,
    s_roots: &'a [Root],
    circle_ok: bool,
    step6_count: i64,
    disjoint_cover: bool,
    verdict: Verdict,
    failed: Vec<&'static str>,
}

/// JSON value for one analysis.
pub fn analysis_json(a: &ComplexFormAnalysis) -> serde_json::Value {
    serde_json::to_value(AnalysisJson {
        ambient: a.ambient.to_string(),
        sym: &a.sym,
        l_type: &a.l_type,
        v_type: &a.v_type,
        l_type_text: a.l_type.to_string(),
        v_type_text: a.v_type.to_string(),
        s_count: a.dim_s,
        m_count: a.m_count,
        dim_h: a.dim_h,
        s_roots: &a.s_pos,
        circle_ok: a.circle_ok,
        step6_count: a.step6_count,
        disjoint_cover: a.disjoint_cover,
        verdict: a.verdict,
        failed: a.failed_criteria(),
    })
    .expect("analysis serializes")
}

pub fn render_report(a: &ComplexFormAnalysis, format: ReportFormat) -> String {
    render_report_with(a, format, &[])
}

/// Like [`render_report`], with display aliases for component labels in text.
pub fn render_report_with(
    a: &ComplexFormAnalysis,
    format: ReportFormat,
    aliases: &[(SimpleType, &str)],
) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&analysis_json(a)).expect("json");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            let mut s = String::new();
            let _ = writeln!(s, "ambient: {}", a.ambient);
            let _ = writeln!(s, "sym: {}", a.sym);
            let _ = writeln!(s, "L = {}", a.l_type.render_with(" ", aliases));
            let _ = writeln!(s, "V = {}", a.v_type.render_with(" ", aliases));
            let _ = writeln!(s, "dim_C S = {} (positive roots of s)", a.dim_s);
            let _ = writeln!(s, "dim_H M = {} ({} positive roots of m)", a.dim_h, a.m_count);
            let _ = writeln!(s, "circle V∩Sp(1): {}", yes_no(a.circle_ok));
            let _ = writeln!(s, "step 6 count: {}", a.step6_count);
            let _ = writeln!(s, "disjoint cover: {}", yes_no(a.disjoint_cover));
            match a.verdict {
                Verdict::ComplexForm => {
                    let _ = writeln!(s, "verdict: complex form");
                }
                Verdict::NotComplexForm => {
                    let _ = writeln!(
                        s,
                        "verdict: not a complex form; failed: {}",
                        a.failed_criteria().join("; ")
                    );
                }
            }
            s
        }
    }
}
