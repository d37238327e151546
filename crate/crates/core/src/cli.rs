//! The `linkhom` command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 no representation found,
//! 3 internal convention violation, 4 oracle or table mismatch.

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, ReportFormat, ScanOptions};
use crate::error::Error;
use crate::homology::{self, HomologyResult};
use crate::oracle::{self, DEFAULT_MATRIX_CAP};
use crate::weights::{self, LinkDescriptor, PolynomialForm, WeightVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_FOUND: i32 = 2;
pub const EXIT_CONVENTION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Environment variable holding the default oracle cap.
pub const ORACLE_CAP_ENV: &str = "LINKHOM_ORACLE_CAP";

#[derive(Debug, Parser)]
#[command(name = "linkhom", about = "Homology of links of weighted homogeneous singularities")]
pub struct CliConfig {
    /// Print a version banner on stderr.
    #[arg(long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Bp,
    Chain,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    /// Comma-separated weights; order matters for chain checks.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub weights: Vec<i64>,

    #[arg(long, conflicts_with = "fano", required_unless_present = "fano")]
    pub degree: Option<u64>,

    /// Use the Fano degree Σw − 1.
    #[arg(long)]
    pub fano: bool,

    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti number and torsion of the middle homology.
    Homology(LinkArgs),
    /// Betti number only.
    Betti(LinkArgs),
    /// Torsion coefficients only.
    Torsion(LinkArgs),
    /// Brieskorn-Pham representability.
    BpCheck(LinkArgs),
    /// Chain representability, over all orders unless --ordered.
    ChainCheck {
        #[command(flatten)]
        link: LinkArgs,
        /// Only test the order given.
        #[arg(long)]
        ordered: bool,
    },
    /// Scan a catalog file (`-` for stdin).
    Scan {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "bp,chain")]
        forms: Vec<Form>,
        #[arg(long)]
        ke_only: bool,
        /// Skip homology computation.
        #[arg(long)]
        no_homology: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: ScanFormat,
    },
    /// Compare the Smith normal form oracle with the subset algorithm.
    Oracle {
        /// Brieskorn-Pham exponents.
        #[arg(long, value_delimiter = ',', required = true)]
        bp: Vec<u64>,
        #[arg(long, env = ORACLE_CAP_ENV, default_value_t = DEFAULT_MATRIX_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Recompute the bundled sample table and diff against expected values.
    Table {
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

type Out<'a> = &'a mut dyn Write;

#[derive(Serialize)]
struct BettiJson {
    #[serde(with = "crate::bignum")]
    betti: BigUint,
}

#[derive(Serialize)]
struct TorsionJson {
    #[serde(with = "crate::bignum::list")]
    torsion: Vec<BigUint>,
}

fn code_for(e: &Error) -> i32 {
    if e.is_convention_violation() {
        EXIT_CONVENTION
    } else {
        EXIT_INVALID
    }
}

fn fail(err: Out, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    code_for(e)
}

fn resolve(args: &LinkArgs) -> Result<LinkDescriptor, Error> {
    let w = weights::validate_weights(&args.weights)?;
    let d = match args.degree {
        Some(d) => d,
        None => weights::fano_degree(&w),
    };
    weights::link_descriptor(&w, d)
}

fn list(values: &[impl ToString]) -> String {
    values.iter().map(ToString::to_string).join(",")
}

fn homology_text(link: &LinkDescriptor, h: &HomologyResult) -> String {
    let torsion = if h.torsion.is_empty() {
        "none".to_string()
    } else {
        list(&h.torsion)
    };
    format!(
        "weights {} degree {}\nb={}\ntorsion={}\nH_{} = {}\n",
        link.weights(),
        link.degree(),
        h.betti,
        torsion,
        link.n() - 1,
        h.label
    )
}

fn emit_json(out: Out, value: &impl serde::Serialize) {
    let _ = writeln!(out, "{}", serde_json::to_string(value).expect("serializable"));
}

fn chain_json(forms: &[PolynomialForm]) -> serde_json::Value {
    forms
        .iter()
        .map(|f| json!({"order": f.ordering, "exponents": f.exponents}))
        .collect()
}

fn chain_text(w: &WeightVector, f: &PolynomialForm) -> String {
    let mut s = format!(
        "ordering ({}) exponents ({})\n  {}\n",
        list(&f.ordered_weights(w)),
        list(&f.exponents),
        f.polynomial()
    );
    if f.has_unit_exponent() {
        s.push_str("  warning: unit exponent; smoothness of the link is not checked\n");
    }
    s
}

fn run_link_command(cmd: &Command, out: Out, err: Out) -> i32 {
    let (args, kind) = match cmd {
        Command::Homology(a) => (a, "homology"),
        Command::Betti(a) => (a, "betti"),
        Command::Torsion(a) => (a, "torsion"),
        Command::BpCheck(a) => (a, "bp"),
        Command::ChainCheck { link, .. } => (link, "chain"),
        _ => unreachable!("not a link command"),
    };
    let link = match resolve(args) {
        Ok(l) => l,
        Err(e) => return fail(err, &e),
    };
    let json = args.format == TextFormat::Json;
    match kind {
        "homology" => match homology::homology_summary(&link) {
            Ok(h) if json => emit_json(out, &h),
            Ok(h) => {
                let _ = write!(out, "{}", homology_text(&link, &h));
            }
            Err(e) => return fail(err, &e),
        },
        "betti" => match homology::betti(&link) {
            Ok(betti) if json => emit_json(out, &BettiJson { betti }),
            Ok(b) => {
                let _ = writeln!(out, "b={b}");
            }
            Err(e) => return fail(err, &e),
        },
        "torsion" => match homology::orlik_torsion(&link) {
            Ok(torsion) if json => emit_json(out, &TorsionJson { torsion }),
            Ok(t) if t.is_empty() => {
                let _ = writeln!(out, "torsion=none");
            }
            Ok(t) => {
                let _ = writeln!(out, "torsion={}", list(&t));
            }
            Err(e) => return fail(err, &e),
        },
        "bp" => {
            let form = weights::bp_exponents(link.weights(), link.degree());
            if json {
                emit_json(out, &json!({"bp": form.as_ref().map(|f| json!({"exponents": f.exponents}))}));
            } else if let Some(f) = &form {
                let _ = writeln!(out, "exponents ({})\n  {}", list(&f.exponents), f.polynomial());
            } else {
                let _ = writeln!(out, "no Brieskorn-Pham exponents for {} at degree {}", link.weights(), link.degree());
            }
            if form.is_none() {
                return EXIT_NOT_FOUND;
            }
        }
        "chain" => {
            let ordered = matches!(cmd, Command::ChainCheck { ordered: true, .. });
            let forms = if ordered {
                weights::chain_exponents(link.weights(), link.degree())
                    .into_iter()
                    .collect()
            } else {
                weights::find_chain_orderings(link.weights(), link.degree())
            };
            if json {
                emit_json(out, &json!({"chain": chain_json(&forms)}));
            } else if forms.is_empty() {
                let _ = writeln!(out, "no chain exponents for {} at degree {}", link.weights(), link.degree());
            } else {
                for f in &forms {
                    let _ = write!(out, "{}", chain_text(link.weights(), f));
                }
            }
            if forms.is_empty() {
                return EXIT_NOT_FOUND;
            }
        }
        _ => unreachable!(),
    }
    EXIT_OK
}

fn read_input(path: &str) -> io::Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Ok(text)
}

fn run_scan(
    input: &str,
    forms: &[Form],
    ke_only: bool,
    homology: bool,
    format: ScanFormat,
    out: Out,
    err: Out,
) -> i32 {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {input}: {e}");
            return EXIT_INVALID;
        }
    };
    let parsed = match catalog::parse_catalog(&text) {
        Ok(p) => p,
        Err(e) => return fail(err, &e),
    };
    let options = ScanOptions {
        bp: forms.contains(&Form::Bp),
        chain: forms.contains(&Form::Chain),
        ke_only,
        homology,
    };
    let report = catalog::scan(&parsed.entries, &options).with_rejected(&parsed.errors);
    let format = match format {
        ScanFormat::Table => ReportFormat::Table,
        ScanFormat::Json => ReportFormat::Json,
        ScanFormat::Csv => ReportFormat::Csv,
    };
    let text = catalog::emit_report(&report, format);
    let _ = write!(out, "{text}");
    if !text.ends_with('\n') {
        let _ = writeln!(out);
    }
    EXIT_OK
}

fn torsion_text(h: &HomologyResult) -> String {
    if h.torsion.is_empty() {
        "none".into()
    } else {
        list(&h.torsion)
    }
}

fn run_oracle(bp: &[u64], cap: u64, format: TextFormat, out: Out, err: Out) -> i32 {
    let cmp = match oracle::compare_with_algorithm(bp, cap) {
        Ok(c) => c,
        Err(e) => return fail(err, &e),
    };
    let matches = cmp.matches();
    if format == TextFormat::Json {
        emit_json(
            out,
            &json!({
                "exponents": cmp.exponents,
                "oracle": cmp.oracle,
                "eigen1": cmp.eigen1,
                "algorithm": cmp.algorithm,
                "match": matches,
            }),
        );
    } else {
        let _ = writeln!(out, "exponents ({})", list(&cmp.exponents));
        let _ = writeln!(out, "oracle:    b={} torsion {}", cmp.oracle.betti, torsion_text(&cmp.oracle));
        let _ = writeln!(out, "eigen1:    {}", cmp.eigen1);
        let _ = writeln!(out, "algorithm: b={} torsion {}", cmp.algorithm.betti, torsion_text(&cmp.algorithm));
        let _ = writeln!(out, "{}", if matches { "MATCH" } else { "MISMATCH" });
    }
    if matches {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn run_table(format: TextFormat, out: Out) -> i32 {
    let checks = catalog::check_sample_rows();
    let all_ok = checks.iter().all(catalog::SampleCheck::ok);
    if format == TextFormat::Json {
        let rows: Vec<_> = checks
            .iter()
            .map(|c| {
                json!({
                    "weights": c.row.weights,
                    "exponents": c.row.exponents,
                    "degree": c.row.degree,
                    "expected": {"betti": c.row.betti, "torsion": c.row.torsion},
                    "homology": c.computed.as_ref().ok(),
                    "chain_ok": c.chain_ok,
                    "ok": c.ok(),
                })
            })
            .collect();
        emit_json(out, &json!({"rows": rows, "ok": all_ok}));
    } else {
        for (i, c) in checks.iter().enumerate() {
            let computed = match &c.computed {
                Ok(h) => h.label.clone(),
                Err(e) => format!("error: {e}"),
            };
            let expected = HomologyResult::new(
                c.row.betti.into(),
                c.row.torsion.iter().map(|&t| t.into()).collect(),
            );
            let _ = writeln!(
                out,
                "{:>2} ({}) | {} | {} | {}{}",
                i + 1,
                list(&c.row.weights),
                c.row.degree,
                computed,
                if c.ok() { "ok" } else { "DIFF expected " },
                if c.ok() { String::new() } else { expected.label }
            );
        }
        let passed = checks.iter().filter(|c| c.ok()).count();
        let _ = writeln!(out, "{passed}/{} rows match", checks.len());
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Parse `argv` and run, writing to the given streams.
pub fn run_with<I, T>(argv: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    if config.verbose {
        let _ = writeln!(err, "linkhom {}", env!("CARGO_PKG_VERSION"));
    }
    match &config.command {
        Command::Scan {
            input,
            forms,
            ke_only,
            no_homology,
            format,
        } => run_scan(input, forms, *ke_only, !no_homology, *format, out, err),
        Command::Oracle { bp, cap, format } => run_oracle(bp, *cap, *format, out, err),
        Command::Table { format } => run_table(*format, out),
        cmd => run_link_command(cmd, out, err),
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
