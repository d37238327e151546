//! Catalog scanning: parse lists of Fano hypersurface weights, test which
//! ones a Brieskorn-Pham or chain polynomial realizes, attach homology, and
//! write the results out as a table, JSON or CSV.
//!
//! # Input format
//!
//! One entry per line, `w0,…,wk,ke[,degree]` with `ke ∈ {0,1}` and an
//! optional degree override (otherwise `Σ w − 1`). Lines starting with `#`
//! are comments. Rows carry five weights unless a `#! weights=N` directive
//! line changes that for the rows that follow.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{homology_summary, HomologyResult};
use crate::weights::{
    bp_exponents, fano_degree, find_chain_orderings, link_descriptor, validate_weights,
    FormVariant, PolynomialForm, WeightVector,
};

pub const DEFAULT_WEIGHTS_PER_ROW: usize = 5;
const DIRECTIVE: &str = "#! weights=";

/// The ten chain-representable weight vectors shipped as a sample catalog.
pub const SAMPLE_CATALOG: &str = include_str!("../data/orlik_sample.csv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Source line number, when the entry came from text.
    pub id: Option<usize>,
    pub weights: WeightVector,
    pub ke: bool,
    pub degree_override: Option<u64>,
}

impl CatalogEntry {
    pub fn new(weights: WeightVector, ke: bool) -> Self {
        CatalogEntry {
            id: None,
            weights,
            ke,
            degree_override: None,
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree_override
            .unwrap_or_else(|| fano_degree(&self.weights))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for RowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.error {
            e @ (Error::Parse { .. } | Error::NotAscending { .. }) => e.fmt(f),
            e => write!(f, "line {}: {}", self.line, e),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedCatalog {
    pub entries: Vec<CatalogEntry>,
    pub errors: Vec<RowError>,
}

fn parse_row(line: usize, text: &str, per_row: usize) -> Result<CatalogEntry> {
    let parse_err = |message: String| Error::Parse { line, message };
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    if fields.len() != per_row + 1 && fields.len() != per_row + 2 {
        return Err(parse_err(format!(
            "expected {} or {} fields, found {}",
            per_row + 1,
            per_row + 2,
            fields.len()
        )));
    }
    let raw = fields[..per_row]
        .iter()
        .map(|f| {
            f.parse::<i64>()
                .map_err(|_| parse_err(format!("weight `{f}` is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    let ke = match fields[per_row] {
        "0" => false,
        "1" => true,
        other => return Err(parse_err(format!("ke flag `{other}` is not 0 or 1"))),
    };
    let degree_override = fields
        .get(per_row + 1)
        .map(|f| {
            f.parse::<u64>()
                .map_err(|_| parse_err(format!("degree `{f}` is not a nonnegative integer")))
        })
        .transpose()?;
    let weights = validate_weights(&raw)?;
    if !weights.is_ascending() {
        return Err(Error::NotAscending { line });
    }
    let entry = CatalogEntry {
        id: Some(line),
        weights,
        ke,
        degree_override,
    };
    link_descriptor(&entry.weights, entry.degree())?;
    Ok(entry)
}

/// Parse catalog text. Bad rows are collected, not fatal.
pub fn parse_catalog(text: &str) -> Result<ParsedCatalog> {
    let mut parsed = ParsedCatalog::default();
    let mut per_row = DEFAULT_WEIGHTS_PER_ROW;
    let mut rows = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some(count) = trimmed.strip_prefix(DIRECTIVE) {
            match count.trim().parse::<usize>() {
                Ok(n) if n >= 2 => per_row = n,
                _ => parsed.errors.push(RowError {
                    line,
                    error: Error::Parse {
                        line,
                        message: format!("bad directive `{trimmed}`"),
                    },
                }),
            }
            continue;
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        rows += 1;
        match parse_row(line, trimmed, per_row) {
            Ok(entry) => parsed.entries.push(entry),
            Err(error) => parsed.errors.push(RowError { line, error }),
        }
    }
    if rows == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(parsed)
}

/// Write entries back in the input format.
pub fn emit_catalog_csv(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    let mut per_row = DEFAULT_WEIGHTS_PER_ROW;
    for e in entries {
        if e.weights.len() != per_row {
            per_row = e.weights.len();
            let _ = writeln!(out, "{DIRECTIVE}{per_row}");
        }
        let _ = write!(out, "{},{}", e.weights.as_slice().iter().join(","), u8::from(e.ke));
        if let Some(d) = e.degree_override {
            let _ = write!(out, ",{d}");
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub bp: bool,
    pub chain: bool,
    pub ke_only: bool,
    pub homology: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            bp: true,
            chain: true,
            ke_only: false,
            homology: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpReport {
    pub exponents: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    /// Indices into the entry's weights, in chain order.
    pub order: Vec<usize>,
    pub exponents: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<usize>,
    pub weights: WeightVector,
    pub degree: u64,
    pub ke: bool,
    pub bp: Option<BpReport>,
    pub chain: Vec<ChainReport>,
    pub homology: Option<HomologyResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl EntryReport {
    pub fn bp_form(&self) -> Option<PolynomialForm> {
        self.bp.as_ref().map(|bp| PolynomialForm {
            variant: FormVariant::BrieskornPham,
            exponents: bp.exponents.clone(),
            ordering: (0..self.weights.len()).collect(),
        })
    }

    pub fn chain_forms(&self) -> Vec<PolynomialForm> {
        self.chain
            .iter()
            .map(|c| PolynomialForm {
                variant: FormVariant::OrlikChain,
                exponents: c.exponents.clone(),
                ordering: c.order.clone(),
            })
            .collect()
    }

    /// Chain order first (canonical representative), then BP.
    pub fn preferred_form(&self) -> Option<PolynomialForm> {
        self.chain_forms().into_iter().next().or_else(|| self.bp_form())
    }
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub bp: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub chain: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub homology: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub errors: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub rejected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedRow {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub entries: Vec<EntryReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rejected: Vec<RejectedRow>,
    pub summary: Summary,
}

impl ScanReport {
    pub fn new(entries: Vec<EntryReport>, rejected: Vec<RejectedRow>, skipped: usize) -> Self {
        let count = |f: &dyn Fn(&EntryReport) -> bool| entries.iter().filter(|e| f(e)).count();
        let summary = Summary {
            total: entries.len(),
            bp: count(&|e| e.bp.is_some()),
            chain: count(&|e| !e.chain.is_empty()),
            homology: count(&|e| e.homology.is_some()),
            errors: count(&|e| e.error.is_some()),
            skipped,
            rejected: rejected.len(),
        };
        ScanReport {
            entries,
            rejected,
            summary,
        }
    }

    pub fn with_rejected(self, errors: &[RowError]) -> Self {
        let mut rejected = self.rejected;
        rejected.extend(errors.iter().map(|e| RejectedRow {
            line: e.line,
            message: e.to_string(),
        }));
        ScanReport::new(self.entries, rejected, self.summary.skipped)
    }
}

fn scan_entry(entry: &CatalogEntry, options: &ScanOptions) -> EntryReport {
    let degree = entry.degree();
    let mut report = EntryReport {
        id: entry.id,
        weights: entry.weights.clone(),
        degree,
        ke: entry.ke,
        bp: None,
        chain: Vec::new(),
        homology: None,
        notes: Vec::new(),
        error: None,
    };
    let link = match link_descriptor(&entry.weights, degree) {
        Ok(link) => link,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    if options.bp {
        report.bp = bp_exponents(&entry.weights, degree).map(|f| BpReport {
            exponents: f.exponents,
        });
    }
    if options.chain {
        for form in find_chain_orderings(&entry.weights, degree) {
            if form.has_unit_exponent() {
                report.notes.push(format!(
                    "chain order {} has a unit exponent; smoothness not checked",
                    form.ordering.iter().join(" ")
                ));
            }
            report.chain.push(ChainReport {
                order: form.ordering,
                exponents: form.exponents,
            });
        }
    }
    if options.homology && (report.bp.is_some() || !report.chain.is_empty()) {
        match homology_summary(&link) {
            Ok(h) => report.homology = Some(h),
            Err(e) => report.error = Some(e.to_string()),
        }
    }
    report
}

/// Run the representability tests (and optionally homology) over entries.
/// Output order follows input order.
pub fn scan(entries: &[CatalogEntry], options: &ScanOptions) -> ScanReport {
    let selected: Vec<&CatalogEntry> = entries
        .iter()
        .filter(|e| !options.ke_only || e.ke)
        .collect();
    let skipped = entries.len() - selected.len();
    let reports = selected
        .par_iter()
        .map(|e| scan_entry(e, options))
        .collect();
    ScanReport::new(reports, Vec::new(), skipped)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn emit_report(report: &ScanReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => emit_table(report),
        ReportFormat::Json => serde_json::to_string(report).expect("report serializes"),
        ReportFormat::Csv => emit_csv(report),
    }
}

/// Parse a format name and emit; unknown names are an error.
pub fn emit_report_as(report: &ScanReport, format: &str) -> Result<String> {
    Ok(emit_report(report, format.parse()?))
}

fn paren(values: &[u64]) -> String {
    format!("({})", values.iter().join(","))
}

fn emit_table(report: &ScanReport) -> String {
    let mut out = String::from("weights | deg | b | H | link\n");
    for e in &report.entries {
        let form = e.preferred_form();
        let shown = form
            .as_ref()
            .map_or_else(|| e.weights.as_slice().to_vec(), |f| f.ordered_weights(&e.weights));
        let (b, label) = match &e.homology {
            Some(h) => (h.betti.to_string(), h.label.clone()),
            None => ("-".into(), "-".into()),
        };
        let link = form.map_or_else(|| "-".into(), |f| f.polynomial());
        let _ = write!(out, "{} | {} | {} | {} | {}", paren(&shown), e.degree, b, label, link);
        if e.chain.len() > 1 {
            let _ = write!(out, " (+{} more orders)", e.chain.len() - 1);
        }
        if let Some(err) = &e.error {
            let _ = write!(out, " [error: {err}]");
        }
        out.push('\n');
    }
    for r in &report.rejected {
        let _ = writeln!(out, "rejected {}", r.message);
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "total {} | bp {} | chain {} | homology {} | errors {} | skipped {} | rejected {}",
        s.total, s.bp, s.chain, s.homology, s.errors, s.skipped, s.rejected
    );
    out
}

const CSV_HEADER: [&str; 11] = [
    "id", "weights", "degree", "ke", "bp", "chain", "betti", "torsion", "label", "notes", "error",
];

fn spaced<T: fmt::Display>(values: &[T]) -> String {
    values.iter().join(" ")
}

fn emit_csv(report: &ScanReport) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for e in &report.entries {
        let chain = e
            .chain
            .iter()
            .map(|c| format!("{}:{}", spaced(&c.order), spaced(&c.exponents)))
            .join(";");
        let (betti, torsion, label) = match &e.homology {
            Some(h) => (h.betti.to_string(), spaced(&h.torsion), h.label.clone()),
            None => Default::default(),
        };
        w.write_record([
            e.id.map(|i| i.to_string()).unwrap_or_default(),
            spaced(e.weights.as_slice()),
            e.degree.to_string(),
            u8::from(e.ke).to_string(),
            e.bp.as_ref().map(|b| spaced(&b.exponents)).unwrap_or_default(),
            chain,
            betti,
            torsion,
            label,
            if e.notes.is_empty() {
                String::new()
            } else {
                serde_json::to_string(&e.notes).expect("strings serialize")
            },
            e.error.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    let mut out = String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 input");
    for r in &report.rejected {
        let _ = writeln!(out, "# rejected {}\t{}", r.line, r.message);
    }
    if report.summary.skipped > 0 {
        let _ = writeln!(out, "# skipped {}", report.summary.skipped);
    }
    out
}

fn list<T: FromStr>(field: &str, what: &str) -> Result<Vec<T>> {
    field
        .split_whitespace()
        .map(|x| {
            x.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad {what} value `{x}`"),
            })
        })
        .collect()
}

/// Read back the CSV produced by [`emit_report`].
pub fn parse_report_csv(text: &str) -> Result<ScanReport> {
    let bad = |line: usize, message: String| Error::Parse { line, message };
    let (mut body, mut rejected, mut skipped) = (String::new(), Vec::new(), 0);
    for (idx, line) in text.lines().enumerate() {
        if let Some(rest) = line.strip_prefix("# rejected ") {
            let (num, message) = rest
                .split_once('\t')
                .ok_or_else(|| bad(idx + 1, "malformed rejected line".into()))?;
            rejected.push(RejectedRow {
                line: num.parse().map_err(|_| bad(idx + 1, "bad line number".into()))?,
                message: message.to_string(),
            });
        } else if let Some(rest) = line.strip_prefix("# skipped ") {
            skipped = rest.parse().map_err(|_| bad(idx + 1, "bad skipped count".into()))?;
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    let mut reader = csv::ReaderBuilder::new().from_reader(body.as_bytes());
    let mut entries = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 2;
        let r = record.map_err(|e| bad(line, e.to_string()))?;
        if r.len() != CSV_HEADER.len() {
            return Err(bad(line, format!("expected {} columns", CSV_HEADER.len())));
        }
        let wrap = |e: Error| match e {
            Error::Parse { message, .. } => bad(line, message),
            e => e,
        };
        let opt = |s: &str| (!s.is_empty()).then(|| s.to_string());
        let weights = WeightVector::try_from(list::<u64>(&r[1], "weight").map_err(wrap)?)?;
        let chain = r[5]
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|c| {
                let (order, exps) = c
                    .split_once(':')
                    .ok_or_else(|| bad(line, format!("bad chain `{c}`")))?;
                Ok(ChainReport {
                    order: list(order, "order").map_err(wrap)?,
                    exponents: list(exps, "exponent").map_err(wrap)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let homology = if r[6].is_empty() {
            None
        } else {
            let betti: BigUint = r[6]
                .parse()
                .map_err(|_| bad(line, "bad betti".into()))?;
            Some(HomologyResult {
                betti,
                torsion: list(&r[7], "torsion").map_err(wrap)?,
                label: r[8].to_string(),
            })
        };
        entries.push(EntryReport {
            id: opt(&r[0])
                .map(|s| s.parse().map_err(|_| bad(line, "bad id".into())))
                .transpose()?,
            weights,
            degree: r[2].parse().map_err(|_| bad(line, "bad degree".into()))?,
            ke: match &r[3] {
                "0" => false,
                "1" => true,
                _ => return Err(bad(line, "bad ke flag".into())),
            },
            bp: opt(&r[4])
                .map(|s| list(&s, "exponent").map(|exponents| BpReport { exponents }))
                .transpose()
                .map_err(wrap)?,
            chain,
            homology,
            notes: if r[9].is_empty() {
                Vec::new()
            } else {
                serde_json::from_str(&r[9]).map_err(|e| bad(line, e.to_string()))?
            },
            error: opt(&r[10]),
        });
    }
    Ok(ScanReport::new(entries, rejected, skipped))
}

pub fn parse_report_json(text: &str) -> Result<ScanReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

/// One printed row of the sample table: weights in chain order, exponents,
/// degree, Betti number and torsion.
#[derive(Debug, Clone, Copy)]
pub struct SampleRow {
    pub weights: [u64; 5],
    pub exponents: [u64; 5],
    pub degree: u64,
    pub betti: u64,
    pub torsion: &'static [u64],
}

pub const SAMPLE_ROWS: [SampleRow; 10] = [
    SampleRow { weights: [75, 10, 163, 331, 247], exponents: [11, 75, 5, 2, 2], degree: 825, betti: 10, torsion: &[55, 5, 5, 5, 5] },
    SampleRow { weights: [62, 124, 155, 9, 85], exponents: [7, 3, 2, 31, 5], degree: 434, betti: 12, torsion: &[14, 2, 2] },
    SampleRow { weights: [9, 174, 467, 277, 649], exponents: [175, 9, 3, 4, 2], degree: 1575, betti: 12, torsion: &[525, 3, 3] },
    SampleRow { weights: [87, 348, 145, 11, 193], exponents: [9, 2, 3, 58, 4], degree: 783, betti: 12, torsion: &[27, 3] },
    SampleRow { weights: [100, 350, 9, 113, 229], exponents: [8, 2, 50, 7, 3], degree: 800, betti: 14, torsion: &[400] },
    SampleRow { weights: [9, 291, 488, 181, 787], exponents: [195, 6, 3, 7, 2], degree: 1755, betti: 14, torsion: &[585, 3] },
    SampleRow { weights: [10, 164, 333, 71, 253], exponents: [83, 5, 2, 7, 3], degree: 830, betti: 14, torsion: &[166] },
    SampleRow { weights: [10, 540, 275, 163, 103], exponents: [109, 2, 2, 5, 9], degree: 1090, betti: 16, torsion: &[218, 2] },
    SampleRow { weights: [32, 144, 11, 103, 31], exponents: [10, 2, 16, 3, 7], degree: 320, betti: 18, torsion: &[160] },
    SampleRow { weights: [45, 36, 27, 11, 107], exponents: [5, 5, 7, 18, 2], degree: 225, betti: 20, torsion: &[5] },
];

/// Outcome of recomputing one sample row.
#[derive(Debug, Clone)]
pub struct SampleCheck {
    pub row: SampleRow,
    pub computed: Result<HomologyResult>,
    pub chain_ok: bool,
}

impl SampleCheck {
    pub fn homology_ok(&self) -> bool {
        self.computed.as_ref().is_ok_and(|h| {
            h.betti == BigUint::from(self.row.betti)
                && h.torsion
                    == self
                        .row
                        .torsion
                        .iter()
                        .map(|&t| BigUint::from(t))
                        .collect::<Vec<_>>()
        })
    }

    pub fn ok(&self) -> bool {
        self.chain_ok && self.homology_ok()
    }
}

pub fn check_sample_rows() -> Vec<SampleCheck> {
    SAMPLE_ROWS
        .iter()
        .map(|row| {
            let weights = WeightVector::try_from(row.weights.to_vec()).expect("sample weights");
            let chain_ok = crate::weights::chain_exponents(&weights, row.degree)
                .is_some_and(|f| f.exponents == row.exponents);
            let computed =
                link_descriptor(&weights, row.degree).and_then(|l| homology_summary(&l));
            SampleCheck {
                row: *row,
                computed,
                chain_ok,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rows() {
        let p = parse_catalog("10,75,163,247,331,1\n1,1,1,1,1,0\n2,4,6,8,10,1\n").unwrap();
        assert_eq!(p.entries.len(), 2);
        let e = &p.entries[0];
        assert_eq!(e.weights.as_slice(), &[10, 75, 163, 247, 331]);
        assert!(e.ke);
        assert_eq!(e.degree(), 825);
        assert_eq!(p.entries[1].degree(), 4);
        assert!(!p.entries[1].ke);
        assert_eq!(p.errors.len(), 1);
        assert_eq!(p.errors[0].line, 3);
        assert_eq!(p.errors[0].error, Error::NonPrimitive { gcd: 2 });
    }

    #[test]
    fn parse_errors_are_per_row() {
        let text = "# header\n\n1,2,3,4,5,2\n1,2,3,x,5,1\n5,4,3,2,1,1\n1,2,3\n1,1,1,1,1,1,1\n1,1,1,1,1,1,9\n";
        let p = parse_catalog(text).unwrap();
        let lines: Vec<usize> = p.errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![3, 4, 5, 6, 7]);
        assert!(matches!(p.errors[2].error, Error::NotAscending { line: 5 }));
        assert!(matches!(p.errors[4].error, Error::WeightExceedsDegree { .. }));
        assert_eq!(p.entries.len(), 1);
        assert_eq!(p.entries[0].degree_override, Some(9));
        assert_eq!(parse_catalog("# nothing\n\n"), Err(Error::EmptyInput));
    }

    #[test]
    fn directive_changes_row_width() {
        let p = parse_catalog("#! weights=3\n1,1,1,1\n#! weights=2\n1,1,0,2\n").unwrap();
        assert!(p.errors.is_empty(), "{:?}", p.errors);
        assert_eq!(p.entries[0].weights.len(), 3);
        assert_eq!(p.entries[0].degree(), 2);
        assert_eq!(p.entries[1].degree_override, Some(2));
        let again = parse_catalog(&emit_catalog_csv(&p.entries)).unwrap();
        let strip = |v: &[CatalogEntry]| {
            v.iter()
                .map(|e| (e.weights.clone(), e.ke, e.degree_override))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&again.entries), strip(&p.entries));
    }

    #[test]
    fn empty_scan() {
        let report = scan(&[], &ScanOptions::default());
        assert_eq!(report.summary.total, 0);
        assert_eq!(
            emit_report(&report, ReportFormat::Json),
            r#"{"entries":[],"summary":{"total":0}}"#
        );
    }

    #[test]
    fn unknown_format() {
        let report = ScanReport::default();
        assert_eq!(
            emit_report_as(&report, "xml"),
            Err(Error::UnknownFormat("xml".into()))
        );
    }

    #[test]
    fn ke_filter_counts_skipped() {
        let p = parse_catalog("1,1,1,1,1,0\n10,75,163,247,331,1\n").unwrap();
        let opts = ScanOptions {
            ke_only: true,
            ..ScanOptions::default()
        };
        let report = scan(&p.entries, &opts);
        assert_eq!(report.summary.total, 1);
        assert_eq!(report.summary.skipped, 1);
        assert_eq!(report.entries[0].degree, 825);
    }

    #[test]
    fn sample_table_row_one() {
        let p = parse_catalog(SAMPLE_CATALOG).unwrap();
        let report = scan(&p.entries[..1], &ScanOptions::default());
        let table = emit_report(&report, ReportFormat::Table);
        assert!(
            table.contains("(75,10,163,331,247) | 825 | 10 | Z^10 ⊕ Z/55 ⊕ (Z/5)^4"),
            "{table}"
        );
    }

    #[test]
    fn row_five_json_torsion() {
        let p = parse_catalog(SAMPLE_CATALOG).unwrap();
        let report = scan(&p.entries[4..5], &ScanOptions::default());
        let json: serde_json::Value =
            serde_json::from_str(&emit_report(&report, ReportFormat::Json)).unwrap();
        assert_eq!(json["entries"][0]["homology"]["torsion"], serde_json::json!([400]));
        assert_eq!(json["entries"][0]["homology"]["betti"], serde_json::json!(14));
        assert_eq!(json["entries"][0]["bp"], serde_json::Value::Null);
    }

    #[test]
    fn bad_degree_override_is_noted() {
        let entry = CatalogEntry {
            id: None,
            weights: WeightVector::try_from(vec![1, 2, 3]).unwrap(),
            ke: true,
            degree_override: Some(2),
        };
        let r = scan(&[entry], &ScanOptions::default());
        assert!(r.entries[0].error.is_some());
        assert_eq!(r.summary.errors, 1);
    }

    #[test]
    fn unit_exponent_noted() {
        let p = parse_catalog("#! weights=2\n1,1,1,2\n").unwrap();
        let r = scan(&p.entries, &ScanOptions::default());
        assert_eq!(r.entries[0].chain.len(), 1);
        assert_eq!(r.entries[0].notes.len(), 1);
    }
}
