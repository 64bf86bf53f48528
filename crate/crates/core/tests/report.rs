use std::fs;

use pgc_core::constructions::{build, group, Params};
use pgc_core::pcp;
use pgc_core::report::{
    analyze, analyze_file, run_batch, summary_line, BatchEntry, Input, Options, Summary,
    REPORT_VERSION, WITNESS_PREVIEW,
};
use pgc_core::verifier::Theorem;
use serde_json::Value;

fn catalog_input(name: &str, params: &Params) -> Input {
    Input::Catalog {
        name: name.into(),
        params: params.clone(),
    }
}

fn t2_9_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for r in 0..2 {
        for s in 0..2 {
            for t in 0..2 {
                let pres = build("T2_9", &Params::rst(r, s, t)).unwrap();
                fs::write(
                    dir.path().join(format!("T{r}{s}{t}.pcp")),
                    pcp::serialize(&pres),
                )
                .unwrap();
            }
        }
    }
    dir
}

#[test]
fn reports_are_deterministic() {
    let params = Params::p(5);
    let g = group("phi23", &params).unwrap();
    let opts = Options {
        theorem: Some(Theorem::A),
        lemmas: true,
        ..Options::default()
    };
    let a = analyze(&g, catalog_input("phi23", &params), &opts);
    let b = analyze(&g, catalog_input("phi23", &params), &opts);
    assert_eq!(a.canonical_json(), b.canonical_json());
    assert_eq!(a.to_json_line(), b.to_json_line());
    assert_eq!(a.to_text(), b.to_text());
    let v: Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(v["format_version"], REPORT_VERSION);
    assert_eq!(v["classification"]["case"], "A1");
    assert!(v.get("timings").is_none());
    assert!(v["lemmas"].as_array().unwrap().len() >= 5);
}

#[test]
fn timings_only_when_requested() {
    let params = Params::p(3);
    let g = group("heisenberg", &params).unwrap();
    let opts = Options {
        timings: true,
        ..Options::default()
    };
    let r = analyze(&g, catalog_input("heisenberg", &params), &opts);
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert!(v["timings"]["analysis"].is_number());
    let canonical: Value = serde_json::from_str(&r.canonical_json()).unwrap();
    assert!(canonical.get("timings").is_none());
}

#[test]
fn witness_lists_are_previewed() {
    let params = Params::p(7);
    let g = group("phi23", &params).unwrap();
    let short = analyze(&g, catalog_input("phi23", &params), &Options::default());
    let full = analyze(
        &g,
        catalog_input("phi23", &params),
        &Options {
            all_witnesses: true,
            ..Options::default()
        },
    );
    assert!(short.commutators.witness_count > WITNESS_PREVIEW);
    assert_eq!(short.commutators.witnesses.len(), WITNESS_PREVIEW);
    assert_eq!(
        full.commutators.witnesses.len(),
        full.commutators.witness_count
    );
    assert_eq!(
        short.commutators.witnesses[..],
        full.commutators.witnesses[..WITNESS_PREVIEW]
    );
}

#[test]
fn hypothesis_failures_are_reported_not_raised() {
    let params = Params::p(3);
    let g = group("heisenberg", &params).unwrap();
    let r = analyze(
        &g,
        catalog_input("heisenberg", &params),
        &Options {
            theorem: Some(Theorem::A),
            ..Options::default()
        },
    );
    assert!(r.classification.is_none());
    assert!(r.classification_error.unwrap().contains("p^4"));
}

#[test]
fn text_rendering_covers_every_section() {
    let params = Params::rst(0, 0, 0);
    let g = group("T2_9", &params).unwrap();
    let r = analyze(
        &g,
        catalog_input("T2_9", &params),
        &Options {
            theorem: Some(Theorem::B),
            ..Options::default()
        },
    );
    let text = r.to_text();
    for key in [
        "classification:",
        "case: B1",
        "commutators:",
        "structure:",
        "input:",
    ] {
        assert!(text.contains(key), "{key} missing from\n{text}");
    }
}

#[test]
fn file_reports_match_catalog_reports() {
    let dir = tempfile::tempdir().unwrap();
    let params = Params::p(3);
    let path = dir.path().join("fr.pcp");
    fs::write(&path, pcp::serialize(&build("F_mod_R1", &params).unwrap())).unwrap();
    let from_file = analyze_file(&path, &Options::default()).unwrap();
    let g = group("F_mod_R1", &params).unwrap();
    let direct = analyze(&g, catalog_input("F_mod_R1", &params), &Options::default());
    assert_eq!(from_file.structure, direct.structure);
    assert_eq!(from_file.commutators, direct.commutators);
    match &from_file.input {
        Input::File { sha256, .. } => assert_eq!(sha256.len(), 64),
        other => panic!("unexpected input {other:?}"),
    }
}

#[test]
fn batch_counts_the_t2_9_directory() {
    let dir = t2_9_dir();
    let (entries, summary) = run_batch(dir.path(), &Options::default()).unwrap();
    assert_eq!(
        summary,
        Summary {
            files: 8,
            equal: 7,
            unequal: 1,
            failed: 0
        }
    );
    let names: Vec<String> = entries
        .iter()
        .map(|e| match e {
            BatchEntry::Report(r) => match &r.input {
                Input::File { path, .. } => path.rsplit('/').next().unwrap().to_string(),
                _ => unreachable!(),
            },
            BatchEntry::Failure { .. } => unreachable!(),
        })
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let unequal: Vec<&String> = names
        .iter()
        .zip(&entries)
        .filter(|(_, e)| matches!(e, BatchEntry::Report(r) if !r.commutators.equal))
        .map(|(n, _)| n)
        .collect();
    assert_eq!(unequal, vec!["T000.pcp"]);
    let line: Value = serde_json::from_str(&summary_line(&summary)).unwrap();
    assert_eq!(line["summary"]["unequal"], 1);
}

#[test]
fn batch_records_failures_and_skips_other_files() {
    let dir = t2_9_dir();
    fs::write(dir.path().join("broken.pcp"), "not a presentation\n").unwrap();
    fs::write(dir.path().join("notes.txt"), "ignored\n").unwrap();
    let inconsistent = build_inconsistent();
    fs::write(dir.path().join("inconsistent.pcp"), inconsistent).unwrap();
    let (entries, summary) = run_batch(dir.path(), &Options::default()).unwrap();
    assert_eq!(
        (
            summary.files,
            summary.failed,
            summary.equal,
            summary.unequal
        ),
        (10, 2, 7, 1)
    );
    let failures: Vec<String> = entries
        .iter()
        .filter(|e| matches!(e, BatchEntry::Failure { .. }))
        .map(|e| e.to_json_line())
        .collect();
    assert_eq!(failures.len(), 2);
    for f in failures {
        let v: Value = serde_json::from_str(&f).unwrap();
        assert!(v["error"].is_string());
    }
}

fn build_inconsistent() -> String {
    let pres = pgc_core::constructions::build_unchecked("class4_p7_1", &Params::p(5)).unwrap();
    pcp::serialize(&pres)
}

#[test]
fn empty_or_missing_directories() {
    let dir = tempfile::tempdir().unwrap();
    let (entries, summary) = run_batch(dir.path(), &Options::default()).unwrap();
    assert!(entries.is_empty());
    assert_eq!(summary, Summary::default());
    assert!(run_batch(&dir.path().join("absent"), &Options::default()).is_err());
}
