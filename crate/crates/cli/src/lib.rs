//! Report assembly for the `adnil` binary.

use std::fmt::Write as _;

use adnil::affine::{self, w_min};
use adnil::counting::{self, count_so2n_b, gf_count, lattice_count, Lattice, Simplex, Target};
use adnil::ideals::enumerate_ideals;
use adnil::normalizers::normalizer;
use adnil::verify::{self, Check, Options, Suite, SuiteReport};
use adnil::{CartanType, Family, ParabolicLabel, RationalVector, RootSystem, UpperIdeal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Failure classes, each with its own process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Verification(String),
    TableMismatch(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) | CliError::Internal(_) => 1,
            CliError::Usage(_) => 2,
            CliError::TableMismatch(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Verification(m) | CliError::TableMismatch(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<adnil::Error> for CliError {
    fn from(e: adnil::Error) -> Self {
        match e {
            adnil::Error::Unsupported(_) | adnil::Error::Argument(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Tsv,
}

/// A footer entry: a named summary value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub name: String,
    pub value: Value,
}

/// Output of one command: rows of named values plus summary lines.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub root_system: Option<String>,
    pub format: Format,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub footer: Vec<Summary>,
}

impl Report {
    fn new(command: String, root_system: Option<String>, columns: &[&str]) -> Self {
        Report {
            command,
            root_system,
            format: Format::Table,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            footer: Vec::new(),
        }
    }

    fn summary(&mut self, name: &str, value: impl Into<Value>) {
        self.footer.push(Summary { name: name.to_string(), value: value.into() });
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut r = self.clone();
                r.format = Format::Json;
                let mut s = serde_json::to_string_pretty(&r).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = self.columns.join("\t");
                s.push('\n');
                for row in &self.rows {
                    s.push_str(&row.iter().map(cell).collect::<Vec<_>>().join("\t"));
                    s.push('\n');
                }
                for f in &self.footer {
                    let _ = writeln!(s, "# {}\t{}", f.name, cell(&f.value));
                }
                s
            }
            Format::Table => {
                let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
                let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
                for r in &cells {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |items: &[String]| {
                    let padded: Vec<String> =
                        items.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                    padded.join("  ").trim_end().to_string()
                };
                let mut s = String::new();
                if let Some(rs) = &self.root_system {
                    let _ = writeln!(s, "{}: {rs}", self.command);
                } else {
                    let _ = writeln!(s, "{}", self.command);
                }
                if !self.columns.is_empty() {
                    let _ = writeln!(s, "{}", line(&self.columns));
                    let total: usize = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
                    let _ = writeln!(s, "{}", "-".repeat(total));
                }
                for r in &cells {
                    let _ = writeln!(s, "{}", line(r));
                }
                for f in &self.footer {
                    let _ = writeln!(s, "{}: {}", f.name, cell(&f.value));
                }
                s
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(cell).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

/// One enumerated ideal as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub generators: Vec<Vec<i64>>,
    pub weight: Vec<i64>,
    pub levi: Vec<usize>,
    pub normalizer: String,
    pub w_min: String,
    pub z: RationalVector,
    pub strictly_positive: bool,
    pub abelian: bool,
    pub minimax: bool,
}

impl IdealRecord {
    pub fn from_ideal(rs: &RootSystem, c: &UpperIdeal) -> CliResult<Self> {
        let label = normalizer(rs, c);
        let w = w_min(rs, c)?;
        Ok(IdealRecord {
            generators: c.generator_roots(rs).into_iter().map(|r| r.0).collect(),
            weight: c.weight(rs).0,
            levi: label.levi_one_based(),
            normalizer: label.display(rs),
            w_min: w.word_string(),
            z: w.factorize(rs).z,
            strictly_positive: c.is_strictly_positive(rs),
            abelian: c.is_abelian(rs),
            minimax: affine::is_minimax(rs, c)?,
        })
    }

    fn row(&self) -> Vec<Value> {
        let v = serde_json::to_value(self).expect("records serialize");
        ENUMERATE_COLUMNS.iter().map(|c| v[*c].clone()).collect()
    }

    /// Rebuilds a record from a report row laid out as [`ENUMERATE_COLUMNS`].
    pub fn from_row(row: &[Value]) -> CliResult<Self> {
        let obj: serde_json::Map<String, Value> =
            ENUMERATE_COLUMNS.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect();
        serde_json::from_value(Value::Object(obj)).map_err(|e| CliError::Usage(format!("bad ideal row: {e}")))
    }
}

pub const ENUMERATE_COLUMNS: [&str; 9] =
    ["generators", "weight", "levi", "normalizer", "w_min", "z", "strictly_positive", "abelian", "minimax"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub strictly_positive: bool,
    pub abelian: bool,
    pub minimax: bool,
}

/// Parses a type label, honouring an optional rank cap override.
pub fn root_system(label: &str, max_rank: Option<usize>) -> CliResult<RootSystem> {
    let ct: CartanType = label.parse()?;
    Ok(RootSystem::build_with_max_rank(ct, max_rank)?)
}

pub fn enumerate(label: &str, filters: Filters, max_rank: Option<usize>) -> CliResult<Report> {
    let rs = root_system(label, max_rank)?;
    let ideals = enumerate_ideals(&rs);
    let records: Vec<IdealRecord> =
        ideals.par_iter().map(|c| IdealRecord::from_ideal(&rs, c)).collect::<CliResult<_>>()?;
    let mut report = Report::new(
        format!("enumerate {}", describe_filters(filters)).trim_end().to_string(),
        Some(rs.cartan_type().to_string()),
        &ENUMERATE_COLUMNS,
    );
    let keep = |r: &IdealRecord| {
        (!filters.strictly_positive || r.strictly_positive)
            && (!filters.abelian || r.abelian)
            && (!filters.minimax || r.minimax)
    };
    let shown: Vec<&IdealRecord> = records.iter().filter(|r| keep(r)).collect();
    report.rows = shown.iter().map(|r| r.row()).collect();
    report.summary("ideals", records.len());
    report.summary("shown", shown.len());
    report.summary("strictly positive", records.iter().filter(|r| r.strictly_positive).count());
    report.summary("abelian", records.iter().filter(|r| r.abelian).count());
    report.summary("minimax", records.iter().filter(|r| r.minimax).count());
    report.summary("normalized by b", records.iter().filter(|r| r.levi.is_empty()).count());
    Ok(report)
}

fn describe_filters(f: Filters) -> String {
    let mut s = String::new();
    for (on, name) in [(f.strictly_positive, "--strictly-positive"), (f.abelian, "--abelian"), (f.minimax, "--minimax")] {
        if on {
            s.push_str(name);
            s.push(' ');
        }
    }
    s
}

/// The comparison table and the list of mismatching cells.
pub fn table7() -> CliResult<(Report, Vec<String>)> {
    let cols = verify::table7()?;
    let mut report = Report::new(
        "table7".into(),
        None,
        &["algebra", "type", "#AD_mm", "expected", "#AD{b}", "expected", "#AD{b} (gf)", "status"],
    );
    let mut bad = Vec::new();
    for c in &cols {
        let m = c.mismatches();
        report.rows.push(vec![
            json!(c.algebra),
            json!(c.cartan_type),
            json!(c.minimax),
            json!(c.expected_minimax),
            json!(c.borel),
            json!(c.expected_borel),
            json!(c.borel_gf),
            json!(if m.is_empty() { "ok" } else { "MISMATCH" }),
        ]);
        bad.extend(m);
    }
    report.summary("mismatches", bad.len());
    Ok((report, bad))
}

/// Which types a suite runs on: the explicit list, or the suite's defaults.
pub fn suite_targets(suite: Suite, types: &[String], max_rank: Option<usize>) -> CliResult<Vec<RootSystem>> {
    if suite == Suite::Identities {
        return Ok(Vec::new());
    }
    if types.is_empty() {
        return suite
            .default_types()
            .into_iter()
            .map(|ct| RootSystem::build_with_max_rank(ct, max_rank).map_err(CliError::from))
            .collect();
    }
    types.iter().map(|t| root_system(t, max_rank)).collect()
}

/// Runs the suite; the second value is the first failing check, if any.
pub fn verify(
    suite: Suite,
    types: &[String],
    opts: &Options,
    max_rank: Option<usize>,
) -> CliResult<(Report, Option<Value>)> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        if s == Suite::Identities {
            let checks = verify::identities(opts.n_max)?;
            reports.push(SuiteReport { suite: s.name().into(), target: format!("n<={}", opts.n_max), checks });
            continue;
        }
        let mut targets = suite_targets(s, types, max_rank)?;
        if s == Suite::TypeAC && suite == Suite::All && !types.is_empty() {
            targets.retain(|r| matches!(r.cartan_type().family(), Family::A | Family::C));
        }
        for rs in &targets {
            reports.push(verify::run_suite(s, rs, opts)?);
        }
    }

    let mut report = Report::new(
        format!("verify {} --seed {}", suite.name(), opts.seed),
        None,
        &["suite", "target", "check", "cases", "failures", "counterexample"],
    );
    let mut failed: Option<(String, String, Check)> = None;
    for r in &reports {
        for c in &r.checks {
            report.rows.push(vec![
                json!(r.suite),
                json!(r.target),
                json!(c.name),
                json!(c.cases),
                json!(c.failures),
                c.counterexample.clone().map_or(Value::Null, Value::String),
            ]);
            if !c.passed() && failed.is_none() {
                failed = Some((r.suite.clone(), r.target.clone(), c.clone()));
            }
        }
    }
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    report.summary("checks", checks);
    report.summary("failed", reports.iter().flat_map(|r| &r.checks).filter(|c| !c.passed()).count());
    report.summary("result", if failed.is_none() { "pass" } else { "fail" });
    let detail = failed.map(|(suite, target, check)| json!({ "suite": suite, "target": target, "check": check }));
    Ok((report, detail))
}

/// Closed forms or published values for `#AD{b}` and `#AD₀{b}`, when known.
fn reference(ct: CartanType) -> (Option<String>, Option<String>, &'static str) {
    let n = ct.rank() as i64;
    let s = |x: String| Some(x);
    match (ct.family(), n) {
        (Family::A, _) => (s(counting::motzkin(n).to_string()), s(counting::riordan(n).to_string()), "Motzkin / Riordan"),
        (Family::B | Family::C, _) => (
            s(counting::dir(n).to_string()),
            s((counting::motzkin(n - 2) * (n - 1)).to_string()),
            "directed animals / (n-1)M_{n-2}",
        ),
        (Family::D, _) => (
            count_so2n_b(n, Target::All).ok().map(|x| x.to_string()),
            count_so2n_b(n, Target::StrictlyPositive).ok().map(|x| x.to_string()),
            "alternating binomial sums",
        ),
        (Family::E, 6) => (Some("111".into()), Some("53".into()), "published"),
        (Family::F, _) => (Some("19".into()), Some("11".into()), "published"),
        (Family::G, _) => (Some("2".into()), None, "published"),
        _ => (None, None, "no reference"),
    }
}

/// Largest rank for which the lattice cross-check runs.
pub const LATTICE_MAX_RANK: usize = 8;

pub fn count(label: &str, max_rank: Option<usize>) -> CliResult<Report> {
    let ct: CartanType = label.parse()?;
    let b = gf_count(ct, Target::All)?;
    let b0 = gf_count(ct, Target::StrictlyPositive)?;
    let (rb, rb0, source) = reference(ct);
    let mut report = Report::new("count".into(), Some(ct.to_string()), &["quantity", "method", "value", "reference"]);
    let refcell = |r: &Option<String>| r.clone().map_or(Value::Null, Value::String);
    report.rows.push(vec![json!("#AD{b}"), json!("gf"), json!(b.to_string()), refcell(&rb)]);
    report.rows.push(vec![json!("#AD0{b}"), json!("gf"), json!(b0.to_string()), refcell(&rb0)]);

    let rs = RootSystem::build_with_max_rank(ct, max_rank).ok();
    if let Some(rs) = rs.as_ref().filter(|r| r.rank() <= LATTICE_MAX_RANK) {
        let lb = lattice_count(rs, Simplex::Min, true, Lattice::Coroot);
        let lb0 = lattice_count(rs, Simplex::Max, true, Lattice::Coroot);
        report.rows.push(vec![json!("#AD{b}"), json!("lattice"), json!(lb.to_string()), refcell(&rb)]);
        report.rows.push(vec![json!("#AD0{b}"), json!("lattice"), json!(lb0.to_string()), refcell(&rb0)]);
    }
    if let Some(rs) = &rs {
        let ideals = enumerate_ideals(rs);
        let borel: Vec<&UpperIdeal> =
            ideals.par_iter().filter(|c| normalizer(rs, c) == ParabolicLabel::borel()).collect();
        let b0e = borel.iter().filter(|c| c.is_strictly_positive(rs)).count();
        report.rows.push(vec![json!("#AD{b}"), json!("enumeration"), json!(borel.len().to_string()), refcell(&rb)]);
        report.rows.push(vec![json!("#AD0{b}"), json!("enumeration"), json!(b0e.to_string()), refcell(&rb0)]);
        report.summary("#AD", ideals.len());
    }
    let agree = report.rows.chunks(2).all(|pair| pair[0][2] == report.rows[0][2] && pair[1][2] == report.rows[1][2]);
    report.summary("methods agree", agree);
    report.summary("reference", source);
    if !agree {
        return Err(CliError::Internal(format!("counting methods disagree for {ct}\n{}", report.render(Format::Tsv))));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_rows_roundtrip() {
        let rs = root_system("G2", None).unwrap();
        for c in enumerate_ideals(&rs) {
            let r = IdealRecord::from_ideal(&rs, &c).unwrap();
            assert_eq!(IdealRecord::from_row(&r.row()).unwrap(), r);
        }
    }

    #[test]
    fn table_cells_render_compactly() {
        assert_eq!(cell(&json!([1, 0, 2])), "[1,0,2]");
        assert_eq!(cell(&json!(["1/2", "3"])), "[1/2,3]");
        assert_eq!(cell(&Value::Null), "-");
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(CliError::from(adnil::Error::Unsupported("x".into())).exit_code(), 2);
        assert_eq!(CliError::Verification("x".into()).exit_code(), 1);
        assert_eq!(CliError::TableMismatch("x".into()).exit_code(), 3);
    }
}
