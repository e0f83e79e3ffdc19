//! Report rows and their three renderings: JSON lines, CSV, and a human
//! formatting of the same data (never a separate computation path).
//!
//! Serialization is deterministic: fixed field order, and every float is
//! rounded to 12 significant digits before rendering, so identical runs are
//! byte-identical.

use std::io::{self, Write};

use hsolab_core::bounds::BoundReport;
use hsolab_core::extremal::{ConjectureReport, ExtremalResult};
use hsolab_core::graph::{ClassConstraint, Graph};
use hsolab_core::indices::IndexKind;
use hsolab_core::monotonicity::MonotonicityReport;
use serde_json::{json, Value};

use crate::graph6::write_graph6;

pub const SCHEMA_VERSION: &str = "1";

/// Rounds to 12 significant decimal digits (the scientific formatter rounds
/// half to even); rendering the result in shortest form reproduces those
/// digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("scientific notation round-trips")
}

fn fnum(x: f64) -> String {
    format!("{}", sig12(x))
}

fn fopt(x: Option<f64>) -> String {
    x.map(fnum).unwrap_or_default()
}

fn jnum(x: f64) -> Value {
    json!(sig12(x))
}

fn jopt(x: Option<f64>) -> Value {
    x.map(jnum).unwrap_or(Value::Null)
}

fn jopt_bool(x: Option<bool>) -> Value {
    x.map(Value::from).unwrap_or(Value::Null)
}

fn bopt(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

/// graph6 encoding, or empty when the order is beyond the short form.
fn g6_or_empty(g: &Graph) -> String {
    write_graph6(g).unwrap_or_default()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "human" => Ok(OutputFormat::Human),
            other => Err(format!("unknown format {other:?} (expected json, csv, or human)")),
        }
    }
}

/// One serializable report line.
pub trait Row {
    fn kind(&self) -> &'static str;
    fn json(&self) -> Value;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_record(&self) -> Vec<String>;
    fn human(&self) -> String;
}

/// Streams rows to a writer in one of the three formats. CSV emits a header
/// whenever the row kind changes.
pub struct Emitter<W: Write> {
    format: OutputFormat,
    out: W,
    csv_kind: Option<&'static str>,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: OutputFormat, out: W) -> Self {
        Emitter { format, out, csv_kind: None }
    }

    pub fn emit(&mut self, row: &dyn Row) -> io::Result<()> {
        match self.format {
            OutputFormat::Json => writeln!(self.out, "{}", row.json()),
            OutputFormat::Human => writeln!(self.out, "{}", row.human()),
            OutputFormat::Csv => {
                if self.csv_kind != Some(row.kind()) {
                    self.csv_kind = Some(row.kind());
                    write_csv_record(&mut self.out, row.csv_header().into_iter())?;
                }
                write_csv_record(&mut self.out, row.csv_record().iter().map(String::as_str))
            }
        }
    }
}

fn write_csv_record<'a, W: Write>(
    out: &mut W,
    fields: impl Iterator<Item = &'a str>,
) -> io::Result<()> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
    writer.write_record(fields).map_err(io::Error::other)?;
    let line = writer.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
    out.write_all(&line)
}

// ---------------------------------------------------------------------------

pub struct ComputeRow {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub index: IndexKind,
    pub value: f64,
}

impl Row for ComputeRow {
    fn kind(&self) -> &'static str {
        "compute"
    }

    fn json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "kind": "compute",
            "source": self.source,
            "n": self.n,
            "m": self.m,
            "index": self.index.name(),
            "value": jnum(self.value),
        })
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["schema", "kind", "source", "n", "m", "index", "value"]
    }

    fn csv_record(&self) -> Vec<String> {
        vec![
            SCHEMA_VERSION.into(),
            "compute".into(),
            self.source.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.index.name().into(),
            fnum(self.value),
        ]
    }

    fn human(&self) -> String {
        format!("{}: {}(n={}, m={}) = {}", self.source, self.index, self.n, self.m, fnum(self.value))
    }
}

pub struct BoundRow {
    pub source: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub report: BoundReport,
}

impl BoundRow {
    pub fn new(source: String, g: &Graph, report: BoundReport) -> Self {
        BoundRow { source, graph6: g6_or_empty(g), n: g.order(), m: g.size(), report }
    }
}

impl Row for BoundRow {
    fn kind(&self) -> &'static str {
        "bound"
    }

    fn json(&self) -> Value {
        let r = &self.report;
        json!({
            "schema": SCHEMA_VERSION,
            "kind": "bound",
            "source": self.source,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "id": r.id.tag(),
            "hypothesis_met": r.hypothesis_met,
            "holds": r.holds,
            "value": jnum(r.value),
            "lower": jopt(r.lower),
            "upper": jopt(r.upper),
            "equality_low": jopt_bool(r.equality_low),
            "equality_high": jopt_bool(r.equality_high),
            "structural_equality_low": jopt_bool(r.structural_equality_low),
            "structural_equality_high": jopt_bool(r.structural_equality_high),
        })
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec![
            "schema", "kind", "source", "graph6", "n", "m", "id", "hypothesis_met", "holds",
            "value", "lower", "upper", "equality_low", "equality_high",
            "structural_equality_low", "structural_equality_high",
        ]
    }

    fn csv_record(&self) -> Vec<String> {
        let r = &self.report;
        vec![
            SCHEMA_VERSION.into(),
            "bound".into(),
            self.source.clone(),
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            r.id.tag().into(),
            r.hypothesis_met.to_string(),
            r.holds.to_string(),
            fnum(r.value),
            fopt(r.lower),
            fopt(r.upper),
            bopt(r.equality_low),
            bopt(r.equality_high),
            bopt(r.structural_equality_low),
            bopt(r.structural_equality_high),
        ]
    }

    fn human(&self) -> String {
        let r = &self.report;
        if !r.hypothesis_met {
            return format!("{}: {} skipped (hypothesis not met)", self.source, r.id);
        }
        let mut parts = vec![format!("value={}", fnum(r.value))];
        if let Some(lo) = r.lower {
            parts.push(format!("lower={} eq={}", fnum(lo), r.equality_low.unwrap_or(false)));
        }
        if let Some(hi) = r.upper {
            parts.push(format!("upper={} eq={}", fnum(hi), r.equality_high.unwrap_or(false)));
        }
        format!(
            "{}: {} {} holds={}{}",
            self.source,
            r.id,
            parts.join(" "),
            r.holds,
            if r.equality_consistent() { "" } else { " EQUALITY-MISMATCH" }
        )
    }
}

pub struct MonotonicityRow {
    pub source: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub report: MonotonicityReport,
    pub consistent: bool,
}

impl MonotonicityRow {
    pub fn new(source: String, g: &Graph, report: MonotonicityReport, tol: f64) -> Self {
        let consistent = report.consistent(tol) && !report.anomalous();
        MonotonicityRow { source, graph6: g6_or_empty(g), n: g.order(), m: g.size(), report, consistent }
    }
}

impl Row for MonotonicityRow {
    fn kind(&self) -> &'static str {
        "monotonicity"
    }

    fn json(&self) -> Value {
        let r = &self.report;
        json!({
            "schema": SCHEMA_VERSION,
            "kind": "monotonicity",
            "source": self.source,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "u": r.u,
            "v": r.v,
            "hso_decrease_condition": r.hso_decrease_condition,
            "hso_increase_condition": r.hso_increase_condition,
            "cdso_decrease_condition": r.cdso_decrease_condition,
            "cdso_increase_condition": r.cdso_increase_condition,
            "delta_hso": jnum(r.delta_hso),
            "delta_cdso": jnum(r.delta_cdso),
            "consistent": self.consistent,
        })
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec![
            "schema", "kind", "source", "graph6", "n", "m", "u", "v",
            "hso_decrease_condition", "hso_increase_condition", "cdso_decrease_condition",
            "cdso_increase_condition", "delta_hso", "delta_cdso", "consistent",
        ]
    }

    fn csv_record(&self) -> Vec<String> {
        let r = &self.report;
        vec![
            SCHEMA_VERSION.into(),
            "monotonicity".into(),
            self.source.clone(),
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            r.u.to_string(),
            r.v.to_string(),
            r.hso_decrease_condition.to_string(),
            r.hso_increase_condition.to_string(),
            r.cdso_decrease_condition.to_string(),
            r.cdso_increase_condition.to_string(),
            fnum(r.delta_hso),
            fnum(r.delta_cdso),
            self.consistent.to_string(),
        ]
    }

    fn human(&self) -> String {
        let r = &self.report;
        let mut flags = Vec::new();
        if r.hso_decrease_condition {
            flags.push("hso-decrease");
        }
        if r.hso_increase_condition {
            flags.push("hso-increase");
        }
        if r.cdso_decrease_condition {
            flags.push("cdso-decrease");
        }
        if r.cdso_increase_condition {
            flags.push("cdso-increase");
        }
        format!(
            "{}: pair ({},{}) delta_hso={} delta_cdso={} conditions=[{}]{}",
            self.source,
            r.u,
            r.v,
            fnum(r.delta_hso),
            fnum(r.delta_cdso),
            flags.join(","),
            if self.consistent { "" } else { " SIGN-MISMATCH" }
        )
    }
}

fn class_fields(class: &hsolab_core::graph::GraphClassSpec) -> (&'static str, Option<u32>) {
    match class.constraint {
        ClassConstraint::Connected => ("connected", None),
        ClassConstraint::Trees => ("trees", None),
        ClassConstraint::Cyclomatic(ell) => ("cyclomatic", Some(ell)),
    }
}

fn witness_json(result: &ExtremalResult) -> (Vec<String>, Vec<Value>) {
    let codes: Vec<String> = result.witnesses.iter().map(g6_or_empty).collect();
    let props: Vec<Value> = result
        .witness_properties
        .iter()
        .map(|p| {
            json!({
                "has_dominating_vertex": p.has_dominating_vertex,
                "min_degree": p.min_degree,
                "max_degree": p.max_degree,
                "degrees_in_2_3": p.degrees_in_2_3,
            })
        })
        .collect();
    (codes, props)
}

pub struct ExtremalRow {
    pub result: ExtremalResult,
}

impl ExtremalRow {
    fn search_json(result: &ExtremalResult) -> Value {
        let (witnesses, props) = witness_json(result);
        json!({
            "index": result.kind.name(),
            "direction": result.direction.name(),
            "optimum": jnum(result.optimum),
            "witness_count": result.witnesses.len(),
            "witnesses": witnesses,
            "witness_properties": props,
            "nearest_other": jopt(result.nearest_other),
            "near_tie": result.near_tie(),
        })
    }
}

impl Row for ExtremalRow {
    fn kind(&self) -> &'static str {
        "extremal"
    }

    fn json(&self) -> Value {
        let r = &self.result;
        let (class, ell) = class_fields(&r.class);
        let mut value = json!({
            "schema": SCHEMA_VERSION,
            "kind": "extremal",
            "n": r.class.n,
            "class": class,
            "ell": ell,
        });
        let body = Self::search_json(r);
        let map = value.as_object_mut().expect("object literal");
        for (k, v) in body.as_object().expect("object literal") {
            map.insert(k.clone(), v.clone());
        }
        value
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec![
            "schema", "kind", "n", "class", "ell", "index", "direction", "optimum",
            "witness_count", "witnesses", "nearest_other", "near_tie",
        ]
    }

    fn csv_record(&self) -> Vec<String> {
        let r = &self.result;
        let (class, ell) = class_fields(&r.class);
        let (witnesses, _) = witness_json(r);
        vec![
            SCHEMA_VERSION.into(),
            "extremal".into(),
            r.class.n.to_string(),
            class.into(),
            ell.map(|e| e.to_string()).unwrap_or_default(),
            r.kind.name().into(),
            r.direction.name().into(),
            fnum(r.optimum),
            r.witnesses.len().to_string(),
            witnesses.join(";"),
            fopt(r.nearest_other),
            r.near_tie().to_string(),
        ]
    }

    fn human(&self) -> String {
        let r = &self.result;
        let (witnesses, _) = witness_json(r);
        format!(
            "{} {} over {}: optimum {} attained by [{}]{}",
            r.direction,
            r.kind,
            r.class,
            fnum(r.optimum),
            witnesses.join(", "),
            if r.near_tie() {
                format!(" (warning: near tie with {})", fopt(r.nearest_other))
            } else {
                String::new()
            }
        )
    }
}

pub struct SweepRow {
    pub name: &'static str,
    pub params: Vec<(&'static str, u64)>,
    pub checked: u64,
    pub violations: Vec<String>,
    pub passed: bool,
}

impl Row for SweepRow {
    fn kind(&self) -> &'static str {
        "sweep"
    }

    fn json(&self) -> Value {
        let params: serde_json::Map<String, Value> =
            self.params.iter().map(|&(k, v)| (k.to_owned(), json!(v))).collect();
        json!({
            "schema": SCHEMA_VERSION,
            "kind": "sweep",
            "name": self.name,
            "params": params,
            "checked": self.checked,
            "violations": self.violations,
            "passed": self.passed,
        })
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["schema", "kind", "name", "params", "checked", "violations", "passed"]
    }

    fn csv_record(&self) -> Vec<String> {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        vec![
            SCHEMA_VERSION.into(),
            "sweep".into(),
            self.name.into(),
            params.join(" "),
            self.checked.to_string(),
            self.violations.join(";"),
            self.passed.to_string(),
        ]
    }

    fn human(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "sweep {} ({}): checked={} violations={} -> {}",
            self.name,
            params.join(", "),
            self.checked,
            self.violations.len(),
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

pub struct ConjectureRow {
    pub report: ConjectureReport,
}

impl Row for ConjectureRow {
    fn kind(&self) -> &'static str {
        "conjecture"
    }

    fn json(&self) -> Value {
        let r = &self.report;
        json!({
            "schema": SCHEMA_VERSION,
            "kind": "conjecture",
            "n": r.n,
            "ell": r.ell,
            "cdso_min": ExtremalRow::search_json(&r.cdso_min),
            "hso_max": ExtremalRow::search_json(&r.hso_max),
            "cdso_max": ExtremalRow::search_json(&r.cdso_max),
            "hso_min": ExtremalRow::search_json(&r.hso_min),
            "dominating_vertex_all_witnesses": r.dominating_vertex_all_witnesses,
            "degree_conjecture_applicable": r.degree_conjecture_applicable,
            "degree_conjecture_all_in_2_3": r.degree_conjecture_all_in_2_3,
        })
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec![
            "schema", "kind", "n", "ell", "cdso_min_optimum", "cdso_min_witnesses",
            "hso_max_optimum", "hso_max_witnesses", "cdso_max_optimum", "cdso_max_witnesses",
            "hso_min_optimum", "hso_min_witnesses", "dominating_vertex_all_witnesses",
            "degree_conjecture_applicable", "degree_conjecture_all_in_2_3",
        ]
    }

    fn csv_record(&self) -> Vec<String> {
        let r = &self.report;
        let wit = |res: &ExtremalResult| witness_json(res).0.join(";");
        vec![
            SCHEMA_VERSION.into(),
            "conjecture".into(),
            r.n.to_string(),
            r.ell.to_string(),
            fnum(r.cdso_min.optimum),
            wit(&r.cdso_min),
            fnum(r.hso_max.optimum),
            wit(&r.hso_max),
            fnum(r.cdso_max.optimum),
            wit(&r.cdso_max),
            fnum(r.hso_min.optimum),
            wit(&r.hso_min),
            r.dominating_vertex_all_witnesses.to_string(),
            r.degree_conjecture_applicable.to_string(),
            r.degree_conjecture_all_in_2_3.to_string(),
        ]
    }

    fn human(&self) -> String {
        let r = &self.report;
        let line = |label: &str, res: &ExtremalResult| {
            format!("  {label}: {} at [{}]", fnum(res.optimum), witness_json(res).0.join(", "))
        };
        let mut out = vec![format!("conjectures for n={} ell={}:", r.n, r.ell)];
        out.push(line("cdso min", &r.cdso_min));
        out.push(line("hso max", &r.hso_max));
        out.push(line("cdso max", &r.cdso_max));
        out.push(line("hso min", &r.hso_min));
        out.push(format!(
            "  dominating-vertex holds on all witnesses: {}",
            r.dominating_vertex_all_witnesses
        ));
        out.push(if r.degree_conjecture_applicable {
            format!("  degrees-in-{{2,3}} holds on all witnesses: {}", r.degree_conjecture_all_in_2_3)
        } else {
            "  degrees-in-{2,3}: not applicable (ell < 2)".to_owned()
        });
        out.join("\n")
    }
}

pub struct SummaryRow {
    pub task: &'static str,
    pub n: Option<usize>,
    pub graphs: u64,
    pub checks: u64,
    pub violations: u64,
    pub inconsistencies: u64,
    pub passed: bool,
}

impl Row for SummaryRow {
    fn kind(&self) -> &'static str {
        "summary"
    }

    fn json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "kind": "summary",
            "task": self.task,
            "n": self.n,
            "graphs": self.graphs,
            "checks": self.checks,
            "violations": self.violations,
            "inconsistencies": self.inconsistencies,
            "passed": self.passed,
        })
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["schema", "kind", "task", "n", "graphs", "checks", "violations", "inconsistencies", "passed"]
    }

    fn csv_record(&self) -> Vec<String> {
        vec![
            SCHEMA_VERSION.into(),
            "summary".into(),
            self.task.into(),
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            self.graphs.to_string(),
            self.checks.to_string(),
            self.violations.to_string(),
            self.inconsistencies.to_string(),
            self.passed.to_string(),
        ]
    }

    fn human(&self) -> String {
        format!(
            "{}{}: graphs={} checks={} violations={} inconsistencies={} -> {}",
            self.task,
            self.n.map(|n| format!(" n={n}")).unwrap_or_default(),
            self.graphs,
            self.checks,
            self.violations,
            self.inconsistencies,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}
