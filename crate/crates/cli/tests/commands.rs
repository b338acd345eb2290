use std::path::PathBuf;
use std::process::Command;

use vnum_cli::{exit, Caps, CycleMode, Document, Format, PrimeSelector, ReportDocument, RunConfig};

fn vnum() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_vnum"));
    for var in ["VNUM_MAX_POLYS", "VNUM_MAX_DEGREE", "VNUM_TIME_BUDGET_SECS", "VNUM_JOBS"] {
        c.env_remove(var);
    }
    c
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const C4: &str = "# square\nn 4\n1 2\n2 3\n3 4\n1 4\n";

fn report_of(out: &std::process::Output) -> ReportDocument {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn compute_square_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = vnum().args(["compute", g.to_str().unwrap(), "--all", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = report_of(&out);
    assert_eq!(doc.global.v, Some(2));
    assert_eq!(doc.primes.len(), 3);
    assert_eq!(doc.input.n, 4);
}

#[test]
fn json_key_order() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = vnum().args(["compute", g.to_str().unwrap(), "--json", "--no-timing"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap_or_else(|| panic!("missing {k}"));
    let top = ["version", "input", "primes", "global"];
    assert!(top.windows(2).all(|w| pos(w[0]) < pos(w[1])));
    let entry = ["s", "method", "v", "witness", "window", "oracle_ok", "millis"];
    assert!(entry.windows(2).all(|w| pos(w[0]) < pos(w[1])));
    assert!(pos("n") < pos("edges") && pos("lo") < pos("hi") && pos("argmin_s") > pos("global"));
}

#[test]
fn report_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = vnum().args(["compute", g.to_str().unwrap(), "--json", "--oracle"]).output().unwrap();
    let doc = report_of(&out);
    let again = Document::Report(doc).render(Format::Json);
    assert_eq!(again.as_bytes(), &out.stdout[..]);
}

#[test]
fn identical_runs_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "p5.txt", "n 5\n1 2\n2 3\n3 4\n4 5\n2 5\n");
    let run = |jobs: &str| vnum().args(["compute", g.to_str().unwrap(), "--json", "--no-timing", "-j", jobs]).output().unwrap().stdout;
    let a = run("1");
    assert_eq!(a, run("4"));
    assert_eq!(a, run("1"));
}

#[test]
fn prime_selection() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = vnum().args(["compute", g.to_str().unwrap(), "--prime", "1,3", "--prime", "empty", "--json"]).output().unwrap();
    let doc = report_of(&out);
    let sets: Vec<Vec<usize>> = doc.primes.iter().map(|p| p.s.clone()).collect();
    assert_eq!(sets, vec![vec![], vec![1, 3]]);

    let out = vnum().args(["compute", g.to_str().unwrap(), "--prime", "1,2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::PRECONDITION as i32));
    let out = vnum().args(["compute", g.to_str().unwrap(), "--prime", "one"]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::USAGE as i32));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.txt", "n 3\n1 4\n");
    let out = vnum().args(["compute", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::PARSE as i32));
    let split = write(&dir, "split.txt", "n 4\n1 2\n3 4\n");
    let out = vnum().args(["compute", split.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::PRECONDITION as i32));
    let out = vnum().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::USAGE as i32));
    let out = vnum().args(["cycle", "2", "--bounds"]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::PRECONDITION as i32));
}

#[test]
fn resource_exhaustion_keeps_a_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c5.txt", "n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    let out = vnum().args(["compute", g.to_str().unwrap(), "--json"]).env("VNUM_MAX_POLYS", "3").output().unwrap();
    assert_eq!(out.status.code(), Some(exit::RESOURCE as i32));
    let doc = report_of(&out);
    assert_eq!(doc.primes.len(), 6);
    assert!(doc.primes.iter().any(|p| p.error.is_some() && p.v.is_none()));
}

#[test]
fn zero_caps_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = vnum().args(["compute", g.to_str().unwrap()]).env("VNUM_MAX_DEGREE", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(exit::USAGE as i32));
}

#[test]
fn cycle_verify_six() {
    let out = vnum().args(["cycle", "6", "--verify", "--json", "--no-timing"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = report_of(&out);
    assert_eq!(doc.global.v, Some(4));
    let cycle = doc.cycle.expect("cycle summary");
    assert!(cycle.all_within);
    assert_eq!(cycle.global_in_window, Some(true));
    assert!(cycle.basis_checks.iter().any(|b| b.result == "passed"));
    assert!(cycle.basis_checks.iter().all(|b| b.result != "failed"));
}

#[test]
fn bounds_alias() {
    let a = vnum().args(["bounds", "cycle", "9", "--json"]).output().unwrap();
    let b = vnum().args(["cycle", "9", "--bounds", "--json"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let doc: vnum_cli::BoundsDocument = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc.global.map(|w| (w.lo, w.hi)), Some((6, 6)));
}

#[test]
fn bounds_only_skips_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c6.txt", "n 6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n");
    // a degree cap of 1 makes every Gröbner computation fail, so success
    // means none was attempted
    let out = vnum().args(["compute", g.to_str().unwrap(), "--bounds-only", "--json", "--max-degree", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc = report_of(&out);
    assert!(doc.primes.iter().all(|p| p.method == "combinatorial" && p.witness.is_none()));
    let three = doc.primes.iter().find(|p| p.s == vec![1, 3, 5]).unwrap();
    assert_eq!((three.v, three.window.lo, three.window.hi), (None, 4, 6));
    assert_eq!(doc.global.v, None);
}

#[test]
fn gb_with_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let p = write(&dir, "sigma.txt", "3 1 2 4\n");
    let out = vnum().args(["gb", g.to_str().unwrap(), "--sigma", p.to_str().unwrap(), "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: vnum_cli::BasisDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc.sigma, vec![3, 1, 2, 4]);
    assert_eq!(doc.generators.len(), 6);
    assert!(doc.matches_admissible_paths && doc.squarefree_initial);

    let short = write(&dir, "short.txt", "1 2 3\n");
    let out = vnum().args(["gb", g.to_str().unwrap(), "--sigma", short.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(exit::PRECONDITION as i32));
}

#[test]
fn library_run_matches_binary() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let mut cfg = RunConfig::new(vnum_cli::Command::Compute {
        input: g.clone(),
        primes: PrimeSelector::All,
        bounds_only: false,
        oracle: false,
    });
    cfg.format = Format::Json;
    cfg.timing = false;
    cfg.caps = Caps::default();
    let lib = vnum_cli::run(&cfg).unwrap().document.render(Format::Json);
    let bin = vnum().args(["compute", g.to_str().unwrap(), "--json", "--no-timing"]).output().unwrap().stdout;
    assert_eq!(lib.as_bytes(), &bin[..]);
    let bounds = RunConfig::new(vnum_cli::Command::Cycle { n: 7, mode: CycleMode::Bounds });
    assert!(matches!(vnum_cli::run(&bounds).unwrap().document, Document::Bounds(_)));
}
