//! Output documents and their JSON, CSV and text renderings.
//!
//! Every JSON document carries `"schema": "phi-descent/1"`. Big integers are
//! written as decimal strings; machine-sized values stay numbers.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use phi_descent_core::criteria::{
    ClassEvidence, Criterion, Evidence, Status, SymbolEvidence, Verdict,
};
use phi_descent_core::gauss::GaussPair;
use phi_descent_core::ntheory::Triple;
use phi_descent_core::quadforms::{ClassGroup, QuadForm};
use phi_descent_core::search::SolutionRecord;

pub const SCHEMA: &str = "phi-descent/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatusDoc {
    NoSolutions,
    Inconclusive,
}

impl From<Status> for StatusDoc {
    fn from(s: Status) -> Self {
        match s {
            Status::NoSolutions => StatusDoc::NoSolutions,
            Status::Inconclusive => StatusDoc::Inconclusive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriterionDoc {
    I,
    II,
    III,
    None,
}

impl From<Option<Criterion>> for CriterionDoc {
    fn from(c: Option<Criterion>) -> Self {
        match c {
            Some(Criterion::I) => CriterionDoc::I,
            Some(Criterion::II) => CriterionDoc::II,
            Some(Criterion::III) => CriterionDoc::III,
            None => CriterionDoc::None,
        }
    }
}

impl From<CriterionDoc> for Option<Criterion> {
    fn from(c: CriterionDoc) -> Self {
        match c {
            CriterionDoc::I => Some(Criterion::I),
            CriterionDoc::II => Some(Criterion::II),
            CriterionDoc::III => Some(Criterion::III),
            CriterionDoc::None => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceDoc {
    Symbol {
        top: i64,
        bottom: u64,
        value: i8,
    },
    Class {
        #[serde(rename = "D")]
        discriminant: String,
        #[serde(rename = "h")]
        class_number: usize,
        prime_form: [String; 3],
        power_subgroup_size: usize,
        prime_is_power: bool,
    },
}

fn form_doc(f: &QuadForm) -> [String; 3] {
    [f.a().to_string(), f.b().to_string(), f.c().to_string()]
}

fn parse_big(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).with_context(|| format!("not an integer: {s:?}"))
}

fn parse_form(f: &[String; 3]) -> Result<QuadForm> {
    Ok(QuadForm::new(
        parse_big(&f[0])?,
        parse_big(&f[1])?,
        parse_big(&f[2])?,
    )?)
}

impl From<&Evidence> for EvidenceDoc {
    fn from(e: &Evidence) -> Self {
        match e {
            Evidence::Symbol(s) => EvidenceDoc::Symbol {
                top: s.top,
                bottom: s.bottom,
                value: s.value,
            },
            Evidence::Class(c) => EvidenceDoc::Class {
                discriminant: c.discriminant.to_string(),
                class_number: c.class_number,
                prime_form: form_doc(&c.prime_form),
                power_subgroup_size: c.power_subgroup_size,
                prime_is_power: c.prime_is_power,
            },
        }
    }
}

impl TryFrom<&EvidenceDoc> for Evidence {
    type Error = anyhow::Error;

    fn try_from(doc: &EvidenceDoc) -> Result<Self> {
        Ok(match doc {
            &EvidenceDoc::Symbol { top, bottom, value } => {
                Evidence::Symbol(SymbolEvidence { top, bottom, value })
            }
            EvidenceDoc::Class {
                discriminant,
                class_number,
                prime_form,
                power_subgroup_size,
                prime_is_power,
            } => Evidence::Class(ClassEvidence {
                discriminant: parse_big(discriminant)?,
                class_number: *class_number,
                prime_form: parse_form(prime_form)?,
                power_subgroup_size: *power_subgroup_size,
                prime_is_power: *prime_is_power,
            }),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub schema: String,
    pub p: u64,
    pub c: u64,
    pub l: u32,
    pub status: StatusDoc,
    pub criterion: CriterionDoc,
    pub evidence: EvidenceDoc,
}

impl From<&Verdict> for VerdictDoc {
    fn from(v: &Verdict) -> Self {
        Self {
            schema: SCHEMA.to_owned(),
            p: v.triple.p(),
            c: v.triple.c(),
            l: v.triple.l(),
            status: v.status().into(),
            criterion: v.criterion.into(),
            evidence: (&v.evidence).into(),
        }
    }
}

impl TryFrom<&VerdictDoc> for Verdict {
    type Error = anyhow::Error;

    fn try_from(doc: &VerdictDoc) -> Result<Self> {
        check_schema(&doc.schema)?;
        let verdict = Verdict {
            triple: Triple::new(doc.p, doc.c, doc.l)?,
            criterion: doc.criterion.into(),
            evidence: (&doc.evidence).try_into()?,
        };
        if StatusDoc::from(verdict.status()) != doc.status {
            bail!(
                "status {:?} does not match criterion {:?}",
                doc.status,
                doc.criterion
            );
        }
        Ok(verdict)
    }
}

pub fn check_schema(schema: &str) -> Result<()> {
    if schema != SCHEMA {
        bail!("unsupported schema {schema:?}, expected {SCHEMA:?}");
    }
    Ok(())
}

/// One row of a scan table; also the CSV record layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: u64,
    pub c: u64,
    pub l: u32,
    pub status: StatusDoc,
    pub criterion: CriterionDoc,
}

impl From<&Verdict> for ScanRow {
    fn from(v: &Verdict) -> Self {
        Self {
            p: v.triple.p(),
            c: v.triple.c(),
            l: v.triple.l(),
            status: v.status().into(),
            criterion: v.criterion.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanDoc {
    pub schema: String,
    pub p_max: u64,
    pub c_max: u64,
    pub l_set: Vec<u32>,
    pub rows: Vec<ScanRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussDoc {
    pub schema: String,
    pub p: u64,
    pub delta: i8,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    pub identity: String,
}

impl From<&GaussPair> for GaussDoc {
    fn from(g: &GaussPair) -> Self {
        let coeffs = |poly: &phi_descent_core::IntPoly| {
            poly.coeffs().iter().map(ToString::to_string).collect()
        };
        Self {
            schema: SCHEMA.to_owned(),
            p: g.p(),
            delta: g.delta(),
            a: coeffs(g.a()),
            b: coeffs(g.b()),
            identity: if g.identity_holds() {
                "verified"
            } else {
                "failed"
            }
            .to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupDoc {
    pub schema: String,
    pub p: u64,
    #[serde(rename = "D")]
    pub discriminant: String,
    #[serde(rename = "h")]
    pub class_number: usize,
    pub identity_index: usize,
    pub forms: Vec<[String; 3]>,
}

impl ClassGroupDoc {
    pub fn new(p: u64, group: &ClassGroup) -> Self {
        Self {
            schema: SCHEMA.to_owned(),
            p,
            discriminant: group.discriminant().to_string(),
            class_number: group.class_number(),
            identity_index: group.identity_index(),
            forms: group.classes().iter().map(form_doc).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub schema: String,
    pub p: u64,
    pub c: u64,
    pub l: u32,
    pub x_bound: u64,
    pub solutions: Vec<SolutionDoc>,
}

impl SearchDoc {
    pub fn new(triple: &Triple, x_bound: u64, solutions: &[SolutionRecord]) -> Self {
        Self {
            schema: SCHEMA.to_owned(),
            p: triple.p(),
            c: triple.c(),
            l: triple.l(),
            x_bound,
            solutions: solutions
                .iter()
                .map(|s| SolutionDoc {
                    x: s.x.to_string(),
                    y: s.y.to_string(),
                })
                .collect(),
        }
    }

    /// Parses the solutions back, rejecting any that do not satisfy the equation.
    pub fn records(&self) -> Result<Vec<SolutionRecord>> {
        check_schema(&self.schema)?;
        let triple = Triple::new(self.p, self.c, self.l)?;
        self.solutions
            .iter()
            .map(|s| {
                let record = SolutionRecord {
                    triple,
                    x: parse_big(&s.x)?,
                    y: parse_big(&s.y)?,
                };
                record
                    .is_valid()
                    .then_some(record)
                    .ok_or_else(|| anyhow!("({}, {}) is not a solution for {triple}", s.x, s.y))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeDoc {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestDoc {
    pub schema: String,
    pub passed: bool,
    pub outcomes: Vec<OutcomeDoc>,
}

pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

/// CSV with a header row, even when `records` is empty.
pub fn to_csv<T: Serialize>(header: &[&str], records: &[T]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(header)?;
    for r in records {
        writer.serialize(r)?;
    }
    Ok(String::from_utf8(
        writer.into_inner().map_err(|e| anyhow!("{e}"))?,
    )?)
}

pub const SCAN_HEADER: [&str; 5] = ["p", "c", "l", "status", "criterion"];

pub fn scan_csv(rows: &[ScanRow]) -> Result<String> {
    to_csv(&SCAN_HEADER, rows)
}

pub fn gauss_csv(doc: &GaussDoc) -> Result<String> {
    let len = doc.a.len().max(doc.b.len());
    let at = |v: &[String], i: usize| v.get(i).cloned().unwrap_or_else(|| "0".to_owned());
    let rows: Vec<(usize, String, String)> = (0..len)
        .map(|i| (i, at(&doc.a, i), at(&doc.b, i)))
        .collect();
    to_csv(&["degree", "A", "B"], &rows)
}

pub fn classgroup_csv(doc: &ClassGroupDoc) -> Result<String> {
    let rows: Vec<(usize, &str, &str, &str)> = doc
        .forms
        .iter()
        .enumerate()
        .map(|(i, f)| (i, f[0].as_str(), f[1].as_str(), f[2].as_str()))
        .collect();
    to_csv(&["index", "a", "b", "c"], &rows)
}

pub fn search_csv(doc: &SearchDoc) -> Result<String> {
    to_csv(&["x", "y"], &doc.solutions)
}

pub fn scan_text(rows: &[ScanRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let criterion = match r.criterion {
            CriterionDoc::None => "-".to_owned(),
            c => format!("{c:?}"),
        };
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>3}  {:<12} {}",
            r.p,
            r.c,
            r.l,
            format!("{:?}", r.status),
            criterion
        );
    }
    out
}

fn poly_text(coeffs: &[String]) -> String {
    format!("[{}]", coeffs.join(", "))
}

pub fn gauss_text(doc: &GaussDoc) -> String {
    format!(
        "p = {}, delta = {:+}\nA = {}\nB = {}\nidentity 4 Phi_p = A^2 - ({:+})p B^2: {}\n",
        doc.p,
        doc.delta,
        poly_text(&doc.a),
        poly_text(&doc.b),
        doc.delta,
        doc.identity
    )
}

pub fn classgroup_text(doc: &ClassGroupDoc) -> String {
    let mut out = format!("D = {}, h = {}\n", doc.discriminant, doc.class_number);
    for (i, f) in doc.forms.iter().enumerate() {
        let mark = if i == doc.identity_index {
            "  (identity)"
        } else {
            ""
        };
        let _ = writeln!(out, "  ({}, {}, {}){mark}", f[0], f[1], f[2]);
    }
    out
}

pub fn search_text(doc: &SearchDoc) -> String {
    let mut out = format!(
        "(p={}, c={}, l={}), |x| <= {}: {} solution(s)\n",
        doc.p,
        doc.c,
        doc.l,
        doc.x_bound,
        doc.solutions.len()
    );
    for s in &doc.solutions {
        let _ = writeln!(out, "  x = {}, y = {}", s.x, s.y);
    }
    out
}

pub fn selftest_text(doc: &SelftestDoc) -> String {
    let mut out = String::new();
    for o in &doc.outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "[{mark}] criterion {}: {} ({})",
            o.id, o.name, o.detail
        );
    }
    let _ = writeln!(
        out,
        "{}",
        if doc.passed {
            "all criteria passed"
        } else {
            "some criteria failed"
        }
    );
    out
}
