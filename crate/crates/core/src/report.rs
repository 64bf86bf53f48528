//! Analysis reports and batch runs over directories of `.pcp` files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::analysis::Analysis;
use crate::bilinear::DEFAULT_BUDGET;
use crate::constructions::Params;
use crate::error::{Error, Result};
use crate::pc::PcGroup;
use crate::structure::{exponent, frattini_rank, group_breadth, is_elementary_abelian};
use crate::verifier::{classify, lemma_suite, Classification, LemmaCheck, Theorem};

pub const REPORT_VERSION: u32 = 1;

/// Witnesses listed when the full list is not requested.
pub const WITNESS_PREVIEW: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Input {
    Catalog { name: String, params: Params },
    File { path: String, sha256: String },
}

impl Input {
    pub fn file(path: &Path, contents: &str) -> Self {
        Input::File {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(contents.as_bytes())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub theorem: Option<Theorem>,
    pub all_witnesses: bool,
    pub lemmas: bool,
    pub budget: u128,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            theorem: None,
            all_witnesses: false,
            lemmas: false,
            budget: DEFAULT_BUDGET,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub p: u32,
    pub ngens: usize,
    pub order: u64,
    pub nilpotency_class: usize,
    pub center_order: u64,
    /// `|gamma_1|, |gamma_2|, ..., 1`.
    pub lower_central_series: Vec<u64>,
    pub conjugate_type: Vec<u64>,
    pub breadth: u32,
    pub frattini_rank: u32,
    pub gamma2_exponent: u64,
    pub gamma2_elementary_abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Commutators {
    pub k_order: u64,
    pub gamma2_order: u64,
    pub equal: bool,
    pub witness_count: usize,
    pub witnesses: Vec<String>,
    pub width2: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format_version: u32,
    pub input: Input,
    pub structure: Structure,
    pub commutators: Commutators,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<Vec<LemmaCheck>>,
    /// Seconds per phase; outside the canonical body.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    /// The report without timings, as pretty JSON.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timings = None;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        render_text(&serde_json::to_value(self).expect("report serializes"))
    }
}

/// Indented `key: value` rendering of a JSON document.
pub fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("-".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            Value::Array(a) if a.iter().all(|x| scalar(x).is_some() && !x.is_array()) => {
                Some(format!(
                    "[{}]",
                    a.iter()
                        .map(|x| scalar(x).unwrap())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            }
            _ => None,
        }
    }
    fn walk(v: &Value, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match scalar(x) {
                        Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                        None => {
                            writeln!(out, "{pad}{k}:").unwrap();
                            walk(x, depth + 1, out);
                        }
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    match scalar(x) {
                        Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                        None => {
                            writeln!(out, "{pad}-").unwrap();
                            walk(x, depth + 1, out);
                        }
                    }
                }
            }
            other => writeln!(out, "{pad}{}", scalar(other).unwrap()).unwrap(),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

/// Analyses a consistent group.
pub fn analyze(g: &PcGroup, input: Input, opts: &Options) -> Report {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let a = Analysis::new(g);
    timings.insert("analysis".into(), t.elapsed().as_secs_f64());
    let d = a.gamma2();
    let structure = Structure {
        p: g.p(),
        ngens: g.ngens(),
        order: g.order(),
        nilpotency_class: a.class(),
        center_order: a.center.order(),
        lower_central_series: a.series.iter().map(|s| s.subgroup.order()).collect(),
        conjugate_type: a.conjugate_type(),
        breadth: group_breadth(g, &a.classes),
        frattini_rank: frattini_rank(g, d),
        gamma2_exponent: exponent(g, d),
        gamma2_elementary_abelian: is_elementary_abelian(g, d),
    };
    let t = Instant::now();
    let width2 = a.width2();
    timings.insert("width2".into(), t.elapsed().as_secs_f64());
    let shown = if opts.all_witnesses {
        a.comparison.witnesses.len()
    } else {
        WITNESS_PREVIEW
    };
    let commutators = Commutators {
        k_order: a.comparison.k_order,
        gamma2_order: a.comparison.gamma2_order,
        equal: a.equal(),
        witness_count: a.comparison.witnesses.len(),
        witnesses: a
            .comparison
            .witnesses
            .iter()
            .take(shown)
            .map(|&w| g.format(w))
            .collect(),
        width2,
    };
    let (classification, classification_error) = match opts.theorem {
        None => (None, None),
        Some(th) => {
            let t = Instant::now();
            let r = classify(&a, th, opts.budget);
            timings.insert("classification".into(), t.elapsed().as_secs_f64());
            match r {
                Ok(c) => (Some(c), None),
                Err(e) => (None, Some(e.to_string())),
            }
        }
    };
    let lemmas = opts.lemmas.then(|| {
        let t = Instant::now();
        let l = lemma_suite(&a);
        timings.insert("lemmas".into(), t.elapsed().as_secs_f64());
        l
    });
    Report {
        format_version: REPORT_VERSION,
        input,
        structure,
        commutators,
        classification,
        classification_error,
        lemmas,
        timings: opts.timings.then_some(timings),
    }
}

/// Reads, parses and analyses one `.pcp` file.
pub fn analyze_file(path: &Path, opts: &Options) -> Result<Report> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let pres = crate::pcp::parse(&text)?;
    let g = PcGroup::new_consistent(pres)?;
    Ok(analyze(&g, Input::file(path, &text), opts))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub files: usize,
    pub equal: usize,
    pub unequal: usize,
    pub failed: usize,
}

#[derive(Debug)]
pub enum BatchEntry {
    Report(Box<Report>),
    Failure { path: PathBuf, error: String },
}

impl BatchEntry {
    pub fn to_json_line(&self) -> String {
        match self {
            BatchEntry::Report(r) => r.to_json_line(),
            BatchEntry::Failure { path, error } => serde_json::json!({
                "format_version": REPORT_VERSION,
                "input": {"kind": "file", "path": path.display().to_string()},
                "error": error,
            })
            .to_string(),
        }
    }
}

/// `.pcp` files of a directory in name order.
pub fn pcp_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |source| Error::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "pcp") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Analyses every `.pcp` file of `dir`; failures are recorded, not raised.
pub fn run_batch(dir: &Path, opts: &Options) -> Result<(Vec<BatchEntry>, Summary)> {
    run_batch_with_progress(dir, opts, |_, _, _| {})
}

/// [`run_batch`], calling `progress(done, total, path)` as each file finishes.
/// Files are analysed in parallel; entries come back in name order.
pub fn run_batch_with_progress(
    dir: &Path,
    opts: &Options,
    progress: impl Fn(usize, usize, &Path) + Sync,
) -> Result<(Vec<BatchEntry>, Summary)> {
    let files = pcp_files(dir)?;
    let done = AtomicUsize::new(0);
    let entries: Vec<BatchEntry> = files
        .par_iter()
        .map(|path| {
            let entry = match analyze_file(path, opts) {
                Ok(r) => BatchEntry::Report(Box::new(r)),
                Err(e) => BatchEntry::Failure {
                    path: path.clone(),
                    error: e.to_string(),
                },
            };
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, files.len(), path);
            entry
        })
        .collect();
    let mut summary = Summary {
        files: entries.len(),
        ..Default::default()
    };
    for e in &entries {
        match e {
            BatchEntry::Report(r) if r.commutators.equal => summary.equal += 1,
            BatchEntry::Report(_) => summary.unequal += 1,
            BatchEntry::Failure { .. } => summary.failed += 1,
        }
    }
    Ok((entries, summary))
}

pub fn summary_line(summary: &Summary) -> String {
    serde_json::json!({ "summary": summary }).to_string()
}
