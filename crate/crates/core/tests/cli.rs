//! End-to-end runs of the `depcat` binary.

use std::path::Path;
use std::process::{Command, Output};

use depcat::cat::ArrowId;
use depcat::instances::{build, serialize, InstanceSpec, Model};
use depcat::ring::{ring_family, RingTables};

fn depcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depcat"))
        .args(args)
        .env_remove("DEPCAT_BUDGET")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_check_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z4.json");
    let out = depcat(&["gen", "ring", "--modulus", "4", "-o", path_str(&file)]);
    assert_eq!(code(&out), 0, "{out:?}");

    let out = depcat(&["check", path_str(&file)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("PASS"));

    let out = depcat(&["check", path_str(&file), "--suites", "sigma,dep,depsigma"]);
    assert_eq!(code(&out), 0, "{out:?}");

    let out = depcat(&["report", path_str(&file), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["passed"], serde_json::Value::Bool(true));
    assert_eq!(stdout(&depcat(&["report", path_str(&file), "--format", "json"])), stdout(&out));
}

#[test]
fn generated_documents_match_between_stdout_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("poset.json");
    let args = ["gen", "poset", "--objects", "3", "--relation", "0<=1,1<=2"];
    let printed = depcat(&args);
    assert_eq!(code(&printed), 0);
    let mut with_file = args.to_vec();
    with_file.extend(["-o", path_str(&file)]);
    assert_eq!(code(&depcat(&with_file)), 0);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), stdout(&printed));

    let again = depcat(&["gen", "file", path_str(&file)]);
    assert_eq!(stdout(&again), stdout(&printed));
}

#[test]
fn law_failures_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.json");
    let r = RingTables::modulo(4).unwrap();
    let Model::Table(mut m) = build(&InstanceSpec::Ring { tables: r.clone() }).unwrap() else {
        panic!("ring spec builds tables")
    };
    let sigma = m.sigma.take().unwrap();
    m.sigma = Some(sigma.with_sigma_arr(ring_family(&r, 1, 2), ArrowId(3), ArrowId(2)));
    std::fs::write(&file, serialize(&Model::Table(m).to_document())).unwrap();

    let out = depcat(&["check", path_str(&file), "--suites", "sigma"]);
    assert_eq!(code(&out), 1, "{out:?}");
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn mutation_flag() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fs.json");
    assert_eq!(code(&depcat(&["gen", "finset", "--max-object-size", "2", "-o", path_str(&file)])), 0);
    let out = depcat(&["check", path_str(&file), "--mutate", "s2"]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("detected"));

    let out = depcat(&["check", path_str(&file), "--mutate", "count.hom"]);
    assert_eq!(code(&out), 2);
    let out = depcat(&["check", path_str(&file), "--mutate", "no.such.law"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z4.json");
    assert_eq!(code(&depcat(&["gen", "ring", "--modulus", "4", "-o", path_str(&file)])), 0);

    let text = std::fs::read_to_string(&file).unwrap();
    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    let out = depcat(&["check", path_str(&truncated)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    // The ring has no terminal object, so the transport suite cannot run.
    assert_eq!(code(&depcat(&["check", path_str(&file), "--suites", "transport"])), 2);
    assert_eq!(code(&depcat(&["check", path_str(&file), "--suites", "bogus"])), 2);
    assert_eq!(code(&depcat(&["gen", "finset", "--max-object-size", "9"])), 2);
    assert_eq!(code(&depcat(&["check", path_str(&dir.path().join("missing.json"))])), 2);

    let poset = depcat(&["gen", "poset", "--objects", "2", "--fam", "none"]);
    let bare = dir.path().join("bare.json");
    std::fs::write(&bare, poset.stdout).unwrap();
    let out = depcat(&["check", path_str(&bare), "--suites", "fam"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("fam"));

    let out = Command::new(env!("CARGO_BIN_EXE_depcat"))
        .args(["check", path_str(&file)])
        .env("DEPCAT_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn help_documents_budget_and_exit_codes() {
    let help = stdout(&depcat(&["--help"]));
    assert!(help.contains("DEPCAT_BUDGET"));
    assert!(help.contains("(2)"));
    assert!(help.contains("2 input error"));
    let check = stdout(&depcat(&["check", "--help"]));
    assert!(check.contains("Defaults to 2"));
}
