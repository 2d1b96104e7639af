//! Serializable views of core results and their json, csv and text renderings.

use std::fmt::Write as _;

use loopcert_core::certify::{
    Certificate, DegreeReport, KernelWitness, NonconjugacyWitness, Report, SccResult,
};
use loopcert_core::exact::{Mat2, Poly, Rational};
use loopcert_core::scc::{SccClass, SccKind};
use serde::Serialize;

use crate::config::Format;

pub fn rational(q: &Rational) -> String {
    q.to_string()
}

/// Coefficients in ascending degree; the zero polynomial is `["0"]`.
pub fn poly(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(rational).collect()
}

pub fn matrix(m: &Mat2) -> [[Vec<String>; 2]; 2] {
    [[poly(&m.e11), poly(&m.e12)], [poly(&m.e21), poly(&m.e22)]]
}

#[derive(Debug, Serialize)]
pub struct ParamsOut {
    pub alpha: String,
    pub beta: String,
}

#[derive(Debug, Serialize)]
pub struct KernelOut {
    pub word: String,
    pub verdict: String,
}

#[derive(Debug, Serialize)]
pub struct NonconjugacyOut {
    pub word: String,
    pub trace_poly: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SccRow {
    pub word: String,
    pub kind: String,
    pub power: i64,
    pub trace_poly: Vec<String>,
    pub verdict: String,
    pub reason: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ReportOut {
    pub params: ParamsOut,
    pub surface: String,
    pub max_len: usize,
    pub kernel_witness: KernelOut,
    pub nonconjugacy: NonconjugacyOut,
    pub scc_results: Vec<SccRow>,
    pub failures: Vec<SccRow>,
    pub timing_ms: Option<u64>,
}

fn scc_row(r: &SccResult) -> SccRow {
    SccRow {
        word: r.item.word.to_string(),
        kind: r.item.kind.name().into(),
        power: r.item.power,
        trace_poly: poly(&r.certificate.trace),
        verdict: r.certificate.verdict.tag().into(),
        reason: r.certificate.verdict.reason(),
    }
}

impl ReportOut {
    pub fn new(report: &Report, timing_ms: Option<u64>) -> Self {
        ReportOut {
            params: ParamsOut {
                alpha: rational(report.params.alpha()),
                beta: rational(report.params.beta()),
            },
            surface: report.surface.name().into(),
            max_len: report.max_len,
            kernel_witness: KernelOut {
                word: report.kernel.word.to_string(),
                verdict: report.kernel.certificate.verdict.to_string(),
            },
            nonconjugacy: NonconjugacyOut {
                word: report.nonconjugacy.word.to_string(),
                trace_poly: poly(&report.nonconjugacy.trace),
            },
            scc_results: report.results.iter().map(scc_row).collect(),
            failures: report.failures().map(scc_row).collect(),
            timing_ms,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WordOut {
    pub word: String,
    pub surface: String,
    pub normal_form: String,
    pub matrix: [[Vec<String>; 2]; 2],
    pub trace_poly: Vec<String>,
    pub constant_trace: bool,
    pub verdict: String,
    pub reason: Option<String>,
}

impl WordOut {
    pub fn new(c: &Certificate, surface: &str) -> Self {
        WordOut {
            word: c.word.to_string(),
            surface: surface.into(),
            normal_form: c.normal_form.to_string(),
            matrix: matrix(&c.matrix),
            trace_poly: poly(&c.trace),
            constant_trace: c.constant_trace,
            verdict: c.verdict.tag().into(),
            reason: c.verdict.reason(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassOut {
    pub canonical: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Vec<u64>>,
}

impl From<&SccClass> for ClassOut {
    fn from(c: &SccClass) -> Self {
        let (n, pattern) = match &c.kind {
            SccKind::Type3 { n, pattern } => (Some(*n), Some(pattern.clone())),
            _ => (None, None),
        };
        ClassOut {
            canonical: c.canonical.to_string(),
            kind: c.kind.name().into(),
            n,
            pattern,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DegreeRow {
    pub word: String,
    pub l: usize,
    /// `null` for a zero entry.
    pub degrees: [Option<usize>; 4],
    pub hypothesis_ok: bool,
    pub conforms: bool,
}

impl From<&DegreeReport> for DegreeRow {
    fn from(r: &DegreeReport) -> Self {
        DegreeRow {
            word: r.word.to_string(),
            l: r.l,
            degrees: r.degrees,
            hypothesis_ok: r.hypothesis_ok,
            conforms: r.conforms,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LemmaOut {
    pub trials: usize,
    pub max_l: usize,
    pub seed: u64,
    /// Samples meeting the hypotheses; the conformance denominator.
    pub eligible: usize,
    pub conforming: usize,
    pub excluded: usize,
    pub reports: Vec<DegreeRow>,
}

impl LemmaOut {
    pub fn new(reports: &[DegreeReport], max_l: usize, seed: u64) -> Self {
        let eligible = reports.iter().filter(|r| r.hypothesis_ok).count();
        LemmaOut {
            trials: reports.len(),
            max_l,
            seed,
            eligible,
            conforming: reports.iter().filter(|r| r.hypothesis_ok && r.conforms).count(),
            excluded: reports.len() - eligible,
            reports: reports.iter().map(DegreeRow::from).collect(),
        }
    }

    pub fn all_conform(&self) -> bool {
        self.conforming == self.eligible
    }
}

#[derive(Debug, Serialize)]
pub struct KernelDetailOut {
    pub word: String,
    pub surface: String,
    pub free_length: usize,
    pub abelianization: Vec<i64>,
    pub verdict: String,
    pub note: &'static str,
}

impl KernelDetailOut {
    pub fn new(k: &KernelWitness, surface: &str) -> Self {
        KernelDetailOut {
            word: k.word.to_string(),
            surface: surface.into(),
            free_length: k.free_length,
            abelianization: k.abelianization.clone(),
            verdict: k.certificate.verdict.to_string(),
            note: "null-homologous double commutator; not a power of a simple closed curve",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessOut {
    pub word: String,
    pub surface: String,
    pub trace_poly: Vec<String>,
    pub varies_with: &'static str,
}

impl WitnessOut {
    pub fn new(w: &NonconjugacyWitness, surface: &str) -> Self {
        WitnessOut {
            word: w.word.to_string(),
            surface: surface.into(),
            trace_poly: poly(&w.trace),
            varies_with: w.varies_with,
        }
    }
}

/// A command result that can be emitted in any [`Format`].
pub trait Render: Serialize {
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
    fn pretty(&self) -> String;

    fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Pretty => self.pretty(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(self.csv_header()).expect("in-memory csv");
                for row in self.csv_rows() {
                    w.write_record(&row).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
            }
        }
    }
}

fn join(p: &[String]) -> String {
    p.join(";")
}

fn poly_text(p: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate() {
        if c == "0" && p.len() > 1 {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        let var = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        match (mag, var.is_empty()) {
            (m, true) => out.push_str(m),
            ("1", false) => out.push_str(&var),
            (m, false) => write!(out, "{m} {var}").unwrap(),
        }
    }
    out
}

fn verdict_text(verdict: &str, reason: &Option<String>) -> String {
    match reason {
        Some(r) => format!("{verdict} ({r})"),
        None => verdict.to_string(),
    }
}

impl Render for ReportOut {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "kind", "power", "trace_poly", "verdict", "reason"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.scc_results
            .iter()
            .map(|r| {
                vec![
                    r.word.clone(),
                    r.kind.clone(),
                    r.power.to_string(),
                    join(&r.trace_poly),
                    r.verdict.clone(),
                    r.reason.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "surface {}  alpha = {}  beta = {}  max_len = {}",
            self.surface, self.params.alpha, self.params.beta, self.max_len
        )
        .unwrap();
        writeln!(s, "kernel witness   {}  ->  {}", self.kernel_witness.word, self.kernel_witness.verdict).unwrap();
        writeln!(
            s,
            "non-conjugacy    {}  trace {}",
            self.nonconjugacy.word,
            poly_text(&self.nonconjugacy.trace_poly)
        )
        .unwrap();
        for r in &self.scc_results {
            writeln!(
                s,
                "  {:<10} k={:<3} {:<28} {}",
                r.kind,
                r.power,
                r.word,
                verdict_text(&r.verdict, &r.reason)
            )
            .unwrap();
        }
        writeln!(
            s,
            "{} words certified, {} failures",
            self.scc_results.len(),
            self.failures.len()
        )
        .unwrap();
        for f in &self.failures {
            writeln!(s, "FAILED {} -> {}", f.word, verdict_text(&f.verdict, &f.reason)).unwrap();
        }
        if let Some(ms) = self.timing_ms {
            writeln!(s, "elapsed {ms} ms").unwrap();
        }
        s
    }
}

impl Render for WordOut {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "normal_form", "trace_poly", "constant_trace", "verdict", "reason"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.word.clone(),
            self.normal_form.clone(),
            join(&self.trace_poly),
            self.constant_trace.to_string(),
            self.verdict.clone(),
            self.reason.clone().unwrap_or_default(),
        ]]
    }

    fn pretty(&self) -> String {
        let [[e11, e12], [e21, e22]] = &self.matrix;
        let mut s = String::new();
        writeln!(s, "word     {}", self.word).unwrap();
        writeln!(s, "syllables {}", self.normal_form).unwrap();
        writeln!(s, "matrix   [ {} , {} ]", poly_text(e11), poly_text(e12)).unwrap();
        writeln!(s, "         [ {} , {} ]", poly_text(e21), poly_text(e22)).unwrap();
        writeln!(s, "trace    {}", poly_text(&self.trace_poly)).unwrap();
        writeln!(s, "verdict  {}", verdict_text(&self.verdict, &self.reason)).unwrap();
        s
    }
}

/// JSON-lines stream of curve classes.
#[derive(Debug, Serialize)]
#[serde(transparent)]
pub struct ClassesOut(pub Vec<ClassOut>);

impl Render for ClassesOut {
    fn json(&self) -> String {
        self.0
            .iter()
            .map(|c| serde_json::to_string(c).expect("class serializes") + "\n")
            .collect()
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["canonical", "kind", "n", "pattern"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|c| {
                let pattern = c.pattern.as_ref().map(|p| {
                    p.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
                });
                vec![
                    c.canonical.clone(),
                    c.kind.clone(),
                    c.n.map(|n| n.to_string()).unwrap_or_default(),
                    pattern.unwrap_or_default(),
                ]
            })
            .collect()
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        for c in &self.0 {
            write!(s, "{:<24} {}", c.canonical, c.kind).unwrap();
            if let (Some(n), Some(p)) = (c.n, &c.pattern) {
                write!(s, "  n={n} pattern={p:?}").unwrap();
            }
            s.push('\n');
        }
        writeln!(s, "{} classes", self.0.len()).unwrap();
        s
    }
}

fn degree(d: Option<usize>) -> String {
    d.map_or_else(|| "-".into(), |d| d.to_string())
}

impl Render for LemmaOut {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "l", "d11", "d12", "d21", "d22", "hypothesis_ok", "conforms"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.reports
            .iter()
            .map(|r| {
                let mut row = vec![r.word.clone(), r.l.to_string()];
                row.extend(r.degrees.iter().map(|&d| degree(d)));
                row.push(r.hypothesis_ok.to_string());
                row.push(r.conforms.to_string());
                row
            })
            .collect()
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        for r in self.reports.iter().filter(|r| self.trials <= 10 || !(r.conforms && r.hypothesis_ok)) {
            let [d11, d12, d21, d22] = r.degrees;
            writeln!(
                s,
                "l={} degrees d11={} d12={} d21={} d22={} hypothesis_ok={} conforms={}  {}",
                r.l,
                degree(d11),
                degree(d12),
                degree(d21),
                degree(d22),
                r.hypothesis_ok,
                r.conforms,
                r.word
            )
            .unwrap();
        }
        writeln!(
            s,
            "{}/{} conform ({} excluded for failing hypotheses; seed {})",
            self.conforming, self.eligible, self.excluded, self.seed
        )
        .unwrap();
        s
    }
}

impl Render for KernelDetailOut {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "free_length", "abelianization", "verdict"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let ab = self.abelianization.iter().map(i64::to_string).collect::<Vec<_>>();
        vec![vec![
            self.word.clone(),
            self.free_length.to_string(),
            ab.join(";"),
            self.verdict.clone(),
        ]]
    }

    fn pretty(&self) -> String {
        format!(
            "kernel witness {} on {}\n  free length {}, abelianization {:?}\n  verdict {}\n  {}\n",
            self.word, self.surface, self.free_length, self.abelianization, self.verdict, self.note
        )
    }
}

impl Render for WitnessOut {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "trace_poly", "varies_with"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.word.clone(),
            join(&self.trace_poly),
            self.varies_with.into(),
        ]]
    }

    fn pretty(&self) -> String {
        format!(
            "non-conjugacy witness {} on {}\n  trace {} (varies with {})\n",
            self.word,
            self.surface,
            poly_text(&self.trace_poly),
            self.varies_with
        )
    }
}
