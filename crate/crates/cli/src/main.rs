use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use quatforms_core::cases::{self, CaseOutcome};
use quatforms_core::classify::{self, ClassifyOptions, DEFAULT_RANK_CAP};
use quatforms_core::complexform::render_report;
use quatforms_core::golden::GoldenRegistry;
use quatforms_core::rootsys::build_root_system;
use quatforms_core::{analyze, Basis, Error, Family, ReportFormat, RootSystem, SimpleType, ToralElement};

#[derive(Parser)]
#[command(
    name = "quatforms",
    version,
    about = "Root systems, quaternionic gradings and complex forms of quaternionic symmetric spaces"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Cartan matrix, root counts and highest root.
    Roots {
        #[arg(value_parser = parse_ambient)]
        ambient: SimpleType,
        #[command(flatten)]
        out: Output,
        /// List every positive root.
        #[arg(long)]
        dump_roots: bool,
    },
    /// Node set and the grading of the positive roots into k and m.
    Decompose {
        #[arg(value_parser = parse_ambient)]
        ambient: SimpleType,
        #[command(flatten)]
        out: Output,
        /// List the positive roots of k and m.
        #[arg(long)]
        dump_roots: bool,
    },
    /// Complex-form analysis of one toral involution.
    Analyze {
        #[arg(value_parser = parse_ambient)]
        ambient: SimpleType,
        /// Comma-separated integer coordinates, one per simple root.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        sym: Vec<i64>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        denom: u32,
        #[arg(long, default_value_t = Basis::Coroot)]
        basis: Basis,
        #[command(flatten)]
        out: Output,
    },
    /// Search all inner involutions and compare with the golden equal-rank forms.
    Classify {
        #[arg(value_parser = parse_ambient)]
        ambient: SimpleType,
        /// Golden file; defaults to $QUATFORMS_GOLDEN, then the bundled data.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Quaternionic dimension computed from root data against the table.
    Table {
        /// Largest classical rank listed.
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(2..=16))]
        max_rank: u64,
        #[command(flatten)]
        out: Output,
    },
    /// The seven worked regression cases.
    Cases {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn parse_ambient(s: &str) -> Result<SimpleType, String> {
    s.parse::<SimpleType>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotClosed(_) | Error::Unclassifiable(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Report {
    body: String,
    ok: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, ok: true }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.verb) {
        Ok(r) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(r.body.as_bytes());
            let _ = out.flush();
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(verb: Verb) -> Result<Report, Failure> {
    match verb {
        Verb::Roots { ambient, out, dump_roots } => roots(ambient, out.json, dump_roots),
        Verb::Decompose { ambient, out, dump_roots } => decompose(ambient, out.json, dump_roots),
        Verb::Analyze { ambient, sym, denom, basis, out } => {
            let rs = build_root_system(ambient);
            let gd = rs.quaternionic_decomposition()?;
            let t = ToralElement::new(sym, denom, basis)?;
            let a = analyze(&rs, &gd, &t)?;
            let fmt = if out.json { ReportFormat::Json } else { ReportFormat::Text };
            Ok(Report::ok(render_report(&a, fmt)))
        }
        Verb::Classify { ambient, golden, rank_cap, out } => {
            let reg = GoldenRegistry::resolve(golden.as_deref())?;
            let entries = reg.entries_for(ambient)?;
            let rs = build_root_system(ambient);
            let opts = ClassifyOptions { rank_cap, ..Default::default() };
            let r = classify::classify_equal_rank(&rs, entries.as_deref(), opts)?;
            let body = if out.json {
                let mut v = classify::render_json(&r);
                v["golden_source"] = Value::String(reg.source().to_string());
                json_text(&v)
            } else {
                format!("golden: {}\n{}", reg.source(), classify::render_text(&r))
            };
            Ok(Report { body, ok: r.passed() })
        }
        Verb::Table { max_rank, out } => table(max_rank as usize, out.json),
        Verb::Cases { out } => run_cases(out.json),
    }
}

fn coeffs(r: &quatforms_core::Root) -> String {
    let c: Vec<String> = r.coeffs().iter().map(|c| c.to_string()).collect();
    format!("({})", c.join(","))
}

fn roots(ty: SimpleType, json: bool, dump: bool) -> Result<Report, Failure> {
    let rs = RootSystem::new(ty);
    let lengths: Vec<&str> = rs
        .root_lengths()
        .iter()
        .map(|&l| if l == *rs.root_lengths().iter().max().unwrap() { "long" } else { "short" })
        .collect();
    if json {
        let mut v = json!({
            "ambient": ty,
            "rank": rs.rank(),
            "cartan": rs.cartan(),
            "simple_root_lengths": lengths,
            "positive_root_count": rs.positive_roots().len(),
            "root_count": rs.num_roots(),
            "highest_root": rs.highest_root(),
        });
        if dump {
            v["positive_roots"] = json!(rs.positive_roots());
        }
        return Ok(Report::ok(json_text(&v)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "ambient: {ty} (rank {})", rs.rank());
    let _ = writeln!(s, "cartan matrix:");
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(s, "  {}", cells.join(""));
    }
    let _ = writeln!(s, "simple root lengths: {}", lengths.join(" "));
    let _ = writeln!(
        s,
        "roots: {} ({} positive)",
        rs.num_roots(),
        rs.positive_roots().len()
    );
    let _ = writeln!(s, "highest root: {}", coeffs(rs.highest_root()));
    if dump {
        let _ = writeln!(s, "positive roots:");
        for r in rs.positive_roots() {
            let _ = writeln!(s, "  {:>3}  {}", r.height(), coeffs(r));
        }
    }
    Ok(Report::ok(s))
}

fn decompose(ty: SimpleType, json: bool, dump: bool) -> Result<Report, Failure> {
    let rs = RootSystem::new(ty);
    let gd = rs.quaternionic_decomposition()?;
    let nodes: Vec<usize> = gd.nodes.iter().map(|n| n + 1).collect();
    if json {
        let mut v = json!({
            "ambient": ty,
            "nodes": nodes,
            "highest_root": rs.highest_root(),
            "k_count": gd.k_pos.len(),
            "m_count": gd.m_pos.len(),
            "dim_h": gd.quaternionic_dim(),
        });
        if dump {
            v["k_roots"] = json!(gd.k_pos);
            v["m_roots"] = json!(gd.m_pos);
        }
        return Ok(Report::ok(json_text(&v)));
    }
    let list: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
    let mut s = String::new();
    let _ = writeln!(s, "ambient: {ty}");
    let _ = writeln!(s, "node set (Bourbaki, 1-based): {{{}}}", list.join(", "));
    let _ = writeln!(s, "highest root: {}", coeffs(rs.highest_root()));
    let _ = writeln!(s, "positive roots of k: {}", gd.k_pos.len());
    let _ = writeln!(s, "positive roots of m: {}", gd.m_pos.len());
    let _ = writeln!(s, "dim_H M = {}", gd.quaternionic_dim());
    if dump {
        for (name, set) in [("k", &gd.k_pos), ("m", &gd.m_pos)] {
            let _ = writeln!(s, "{name} roots:");
            for r in set {
                let _ = writeln!(s, "  g{}  {}", gd.grade(r), coeffs(r));
            }
        }
    }
    Ok(Report::ok(s))
}

fn table_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for fam in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 2..=max_rank {
            if let Ok(t) = SimpleType::new(fam, rank) {
                if t.family() == fam && t.rank() == rank {
                    out.push(t);
                }
            }
        }
    }
    for label in ["G2", "F4", "E6", "E7", "E8"] {
        out.push(label.parse().expect("exceptional label"));
    }
    out
}

fn table(max_rank: usize, json: bool) -> Result<Report, Failure> {
    let reg = GoldenRegistry::bundled();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for ty in table_types(max_rank) {
        let Some(vals) = reg.table().values_for(ty) else { continue };
        let computed = RootSystem::new(ty).quaternionic_decomposition()?.quaternionic_dim();
        let ok = computed == vals.dim_h;
        all_ok &= ok;
        rows.push((vals, computed, ok));
    }
    if json {
        let v = json!({
            "rows": rows.iter().map(|(t, c, ok)| json!({
                "ambient": t.ambient,
                "compact": t.compact,
                "noncompact": t.noncompact,
                "parameter": t.parameter,
                "rank": t.rank,
                "dim_h_table": t.dim_h,
                "dim_h_computed": c,
                "ok": ok,
            })).collect::<Vec<_>>(),
            "passed": all_ok,
        });
        return Ok(Report { body: json_text(&v), ok: all_ok });
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<5} {:<24} {:<26} {:<9} {:>4} {:>6} {:>8}",
        "type", "compact", "noncompact", "param", "rank", "table", "computed"
    );
    for (t, c, ok) in &rows {
        let _ = writeln!(
            s,
            "{:<5} {:<24} {:<26} {:<9} {:>4} {:>6} {:>8}{}",
            t.ambient.to_string(),
            t.compact,
            t.noncompact,
            t.parameter.as_deref().unwrap_or("-"),
            t.rank,
            t.dim_h,
            c,
            if *ok { "" } else { "  MISMATCH" }
        );
    }
    let _ = writeln!(s, "result: {}", if all_ok { "PASS" } else { "FAIL" });
    Ok(Report { body: s, ok: all_ok })
}

fn bourbaki_sym(o: &CaseOutcome) -> String {
    let t = o.case.toral_element();
    let c: Vec<String> = t.coords().iter().map(|c| c.to_string()).collect();
    format!("[{}]/{}", c.join(","), t.denom())
}

fn lie_sym(o: &CaseOutcome) -> String {
    let c: Vec<String> = o.case.lie_sym.iter().map(|c| c.to_string()).collect();
    format!("[{}]", c.join(","))
}

fn run_cases(json: bool) -> Result<Report, Failure> {
    let outcomes = cases::run_all()?;
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let ok = passed == outcomes.len();
    if json {
        let v = json!({
            "cases": outcomes.iter().map(|o| json!({
                "ambient": o.case.ambient,
                "bourbaki_node": o.case.bourbaki_node,
                "lie_node": o.case.lie_node,
                "sym": o.analysis.sym,
                "lie_sym": o.case.lie_sym,
                "expected_l": o.case.expected_l,
                "expected_v": o.case.expected_v,
                "l_type": o.analysis.l_type.render_with(" ", &o.case.aliases()),
                "v_type": o.analysis.v_type.render_with(" ", &o.case.aliases()),
                "step6_count": o.analysis.step6_count,
                "verdict": o.analysis.verdict,
                "passed": o.passed(),
            })).collect::<Vec<_>>(),
            "passed": passed,
            "total": outcomes.len(),
        });
        return Ok(Report { body: json_text(&v), ok });
    }
    let mut s = String::new();
    for o in &outcomes {
        let aliases = o.case.aliases();
        let _ = writeln!(
            s,
            "{:<3} node {} (LiE {})  sym {} (LiE {})  L = {:<9} V = {:<12} step6 {}  {}",
            o.case.ambient,
            o.case.bourbaki_node,
            o.case.lie_node,
            bourbaki_sym(o),
            lie_sym(o),
            o.analysis.l_type.render_with(" ", &aliases),
            o.analysis.v_type.render_with(" ", &aliases),
            o.analysis.step6_count,
            if o.passed() { "PASS" } else { "FAIL" }
        );
    }
    let _ = writeln!(s, "{passed}/{} cases passed", outcomes.len());
    Ok(Report { body: s, ok })
}
