use std::path::PathBuf;
use std::process::{Command as Process, Output};

use germwork::document::parse;
use germwork::export::export;
use germwork::{load, run, Command, Document, Format, Input, Object, Options, Status};
use germwork_core::constellation::p_of;
use germwork_core::germs::RestrictionAction;

fn bin(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_germwork"))
        .args(args)
        .output()
        .unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn round_trip(name: &str, input: &Input) {
    let first = export(input, Format::Json).unwrap();
    let path = scratch(&format!("{name}.json"), &first);
    let reloaded = load(path.to_str().unwrap(), false).unwrap();
    assert_eq!(reloaded.object.kind(), input.object.kind(), "{name}");
    assert_eq!(export(&reloaded, Format::Json).unwrap(), first, "{name}");
}

#[test]
fn catalog_documents_round_trip() {
    for name in [
        "trivial",
        "pt:2",
        "i:2",
        "paper-4",
        "swap-diamond",
        "pair-groupoid:2",
        "free:2",
        "exg:2x2",
        "chain:3",
    ] {
        round_trip(name, &load(&format!("catalog:{name}"), false).unwrap());
    }
}

#[test]
fn constellation_documents_round_trip() {
    let input = load("catalog:pt:2", false).unwrap();
    let Object::Semigroup { semigroup, .. } = &input.object else {
        panic!()
    };
    let q = p_of(semigroup).unwrap();
    let input = Input {
        source: "p".into(),
        name: Some("p-of-pt2".into()),
        object: Object::Constellation(q),
    };
    round_trip("constellation", &input);
    let report = run(Command::Esn, &input, &Options::default()).unwrap();
    assert!(report.passed());
}

#[test]
fn action_documents_round_trip() {
    let input = load("catalog:pt:2", false).unwrap();
    let Object::Semigroup {
        semigroup,
        maps: Some(maps),
    } = &input.object
    else {
        panic!()
    };
    let action = RestrictionAction::tautological(semigroup.clone(), maps.clone()).unwrap();
    let input = Input {
        source: "a".into(),
        name: None,
        object: Object::Action(action),
    };
    round_trip("action", &input);
    let report = run(Command::Germs, &input, &Options::default()).unwrap();
    assert!(report.passed(), "{}", report.to_json());
}

#[test]
fn unknown_fields_are_schema_errors() {
    assert!(parse(r#"{"kind": "semilattice", "meet": [[0]], "colour": 1}"#).is_err());
    assert!(parse(r#"{"kind": "groupoid"}"#).is_err());
    let ok = parse(r#"{"kind": "semilattice", "meet": [[0]]}"#).unwrap();
    assert!(matches!(ok, Document::Semilattice(_)));
}

#[test]
fn malformed_tables_exit_two() {
    let bad = scratch("bad.json", r#"{"kind": "semigroup", "size": 2, "mul": [[0, 1], [1]]}"#);
    assert_eq!(bin(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
    let broken = scratch("broken.json", "{");
    assert_eq!(bin(&["analyze", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["check", "catalog:no-such-thing"]).status.code(), Some(2));
    assert_eq!(bin(&["germs", "catalog:pair-groupoid:2"]).status.code(), Some(2));
}

#[test]
fn failing_axioms_exit_one_with_a_witness() {
    let out = bin(&["check", "catalog:r:2", "--axioms", "restriction"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["status"], "fail");
    let failing: Vec<_> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| !c["witness"].is_null()));
}

#[test]
fn passing_commands_exit_zero() {
    for args in [
        ["check", "catalog:pt:2"],
        ["decompose", "catalog:exg:2x2"],
        ["pr", "catalog:cyclic:3"],
    ] {
        let out = bin(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn algebra_matrix_is_unitriangular() {
    let input = load("catalog:paper-4", false).unwrap();
    let report = run(Command::AlgebraIso, &input, &Options::default()).unwrap();
    assert!(report.passed());
    let matrix = report.check("matrix").unwrap().value.clone().unwrap();
    let rows = matrix.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.as_array().unwrap().len(), 4);
        assert_eq!(row[i], "1");
    }
}

#[test]
fn improper_semigroups_fail_decomposition_with_a_witness() {
    let out = bin(&["decompose", "catalog:paper-4"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["checks"][0]["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn dot_export_draws_every_non_identity_arrow() {
    let out = bin(&["export", "catalog:paper-4", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 4);
    let out = bin(&["export", "catalog:swap-diamond", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_stable_across_runs() {
    let input = load("catalog:pt:2", false).unwrap();
    let opts = Options::default();
    for command in Command::ALL {
        let a = run(command, &input, &opts).unwrap();
        let b = run(command, &input, &opts).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{command}");
        assert!(a.checks.windows(2).all(|w| w[0].name <= w[1].name));
        // PT(2) is not proper, so only the decomposition commands fail.
        let proper_only = matches!(command, Command::Decompose | Command::Pr);
        assert_eq!(
            a.checks.iter().any(|c| c.status == Status::Fail),
            proper_only,
            "{command}"
        );
    }
}
