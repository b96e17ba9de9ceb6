use std::path::Path;
use std::process::{Command, Output};

use uninorm_core::format::{parse_named_tables, parse_pair, parse_table, write_table};
use uninorm_core::search::SearchLimits;
use uninorm_core::{enumerate_uninorms, ChainScale, EnumerationTask};

fn uninorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uninorm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixtures() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

#[test]
fn distributive_pair_passes() {
    let o = uninorm(&["check", "--u1", "idemmin(e=2,n=4)", "--u2", "idemmin(e=2,n=4)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("distributive: true; case: equal-neutral; theorem agrees\n"));
    assert!(stderr(&o).contains("theorem agrees"));
}

#[test]
fn non_distributive_pair_reports_witness() {
    let o = uninorm(&["check", "--u1", "luk-upper(e=2,n=4)", "--u2", "luk-upper(e=2,n=4)"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("distributive: false"));
    assert!(out.contains("distributivity at (x,y,z)="), "{out}");
}

#[test]
fn structured_check_report() {
    let o = uninorm(&["check", "--format", "structured", "--u1", "luk-upper(e=2,n=4)", "--u2", "luk-upper(e=2,n=4)"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["format-version"], 1);
    assert_eq!(v["kind"], "check");
    assert_eq!(v["distributive"], false);
    assert_eq!(v["report"]["violations"][0]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn wrong_neutral_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tbl");
    std::fs::write(&path, "# neutral row broken at (2, 0)\nscale 2\nneutral 2\n0 0 1\n0 1 1\n1 1 2\n").unwrap();
    let o = uninorm(&["validate", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("neutrality"), "{}", stdout(&o));
}

#[test]
fn valid_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ok.tbl");
    std::fs::write(&path, "scale 2\nneutral 1\n0 0 0\n0 1 2\n0 2 2\n").unwrap();
    let o = uninorm(&["validate", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = uninorm(&["validate", "--u1", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn parse_errors_are_positioned() {
    let o = uninorm(&["check", "--u1", "idemmin(e=2,n=4", "--u2", "min(n=4)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("1:16") && err.contains('^'), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("asym.tbl");
    std::fs::write(&path, "scale 2\nneutral 2\n0 0 0\n1 1 1\n0 1 2\n").unwrap();
    let o = uninorm(&["validate", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":4:1:"), "{}", stderr(&o));

    let o = uninorm(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scale_limits() {
    let o = uninorm(&["certify", "--n", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--max-n"));
    let o = uninorm(&["enumerate", "--n", "3", "--e", "1", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = uninorm(&["certify", "--n", "3", "--pair-budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("PARTIAL"));
}

#[test]
fn enumerated_tables_reparse() {
    let o = uninorm(&["enumerate", "--n", "3", "--e", "1", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let docs = parse_named_tables(&stdout(&o)).unwrap();
    let expected: Vec<_> = enumerate_uninorms(&EnumerationTask::new(ChainScale::new(3).unwrap(), 1), &SearchLimits::default())
        .unwrap()
        .collect();
    assert_eq!(docs.len(), expected.len());
    for ((_, doc), u) in docs.into_iter().zip(&expected) {
        assert_eq!(&doc.into_uninorm().unwrap(), u);
    }
}

#[test]
fn decompose_then_compose_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let dec = dir.path().join("pair.dec");
    let o = uninorm(&[
        "decompose",
        "--u1",
        "umin-of(n=4,e=2,t=min(n=2),s=max(n=2))",
        "--u2",
        "idemmin(n=4,e=1)",
        "--out",
        dec.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = uninorm(&["compose", "--table", dec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (u1, u2) = parse_pair(&stdout(&o)).unwrap();
    assert_eq!(u1.neutral(), 2);
    assert_eq!(u2.neutral(), 1);

    let o = uninorm(&["decompose", "--u1", "idemmin(e=2,n=4)", "--u2", "luk-upper(e=1,n=4)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = uninorm(&["decompose", "--u1", "idemmin(e=2,n=4)", "--u2", "idemmin(e=2,n=4)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn family_specs_validate() {
    for spec in ["luk-lower(n=5,e=2)", "umax-of(n=4,e=1,t=drastic(n=1),s=luk(n=3))", "drastic-tconorm(n=3)"] {
        let o = uninorm(&["validate", "--u1", spec]);
        assert_eq!(o.status.code(), Some(0), "{spec}: {}", stderr(&o));
    }
}

#[test]
fn written_tables_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.tbl");
    let o = uninorm(&["enumerate", "--n", "4", "--e", "2", "--idempotent", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    for (_, doc) in parse_named_tables(&text).unwrap() {
        assert_eq!(parse_table(&write_table(&doc.table, doc.neutral)).unwrap(), doc);
        assert!(doc.into_uninorm().unwrap().is_idempotent());
    }
}

#[test]
fn scan_reports_pairs() {
    let o = uninorm(&["scan", "--n", "3", "--e1", "2", "--e2", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let docs = parse_named_tables(&stdout(&o)).unwrap();
    assert_eq!(docs.len(), 8);
    assert!(stderr(&o).starts_with("4 distributive pairs"));
}

#[test]
fn certify_matches_golden() {
    for n in ["2", "3"] {
        let o = Command::new(env!("CARGO_BIN_EXE_uninorm"))
            .args(["certify", "--n", n, "--golden", "--workers", "3"])
            .env("UNINORM_FIXTURES", fixtures())
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stderr(&o).contains("matches"));
    }
    let o = uninorm(&["certify", "--n", "3", "--format", "structured"]);
    let golden = std::fs::read_to_string(fixtures().join("certify-n3.json")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn classify_names_the_case() {
    let o = uninorm(&["classify", "--u1", "idemmin(e=1,n=3)", "--u2", "idemmin(e=2,n=3)"]);
    assert!(stdout(&o).starts_with("case: less-neutral"));
    let o = uninorm(&["classify", "--u1", "idemmin(e=2,n=4)", "--u2", "luk-upper(e=1,n=4)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("case: greater-neutral"));
}
