use std::io::Write;
use std::path::PathBuf;

use edim_cli::{load_catalog, run_with, CatalogError, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};
use edim_core::construct::unit_subgroup;
use edim_core::GroupSpec;
use serde_json::Value;
use tempfile::TempDir;

const CATALOG: &str = r#"{"groups": [
  {"name": "C12", "kind": "cyclic", "params": {"n": 12}},
  {"name": "V4", "kind": "abelian", "params": {"factors": [2, 2]}},
  {"name": "S4", "kind": "symmetric", "params": {"n": 4}},
  {"name": "D10", "kind": "dihedral", "params": {"n": 5}},
  {"name": "G32", "kind": "semidirect_cyclic", "params": {"n": 8, "units": [3, 5]}},
  {"name": "Gamma2", "kind": "gamma", "params": {"p": 2, "n": 2}},
  {"name": "Q8", "kind": "explicit",
   "params": {"degree": 8, "generators": [[1,4,3,6,5,0,7,2], [2,7,4,1,6,3,0,5]]}}
]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("edim").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn rows(out: &str) -> Vec<Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn catalog() -> (TempDir, String) {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "groups.json", CATALOG);
    (dir, path.to_str().unwrap().to_string())
}

#[test]
fn load_catalog_examples() {
    let dir = TempDir::new().unwrap();
    let one = write(&dir, "one.json", r#"{"groups":[{"name":"C6","kind":"cyclic","params":{"n":6}}]}"#);
    assert_eq!(load_catalog(&one).unwrap().len(), 1);

    let dup = write(
        &dir,
        "dup.json",
        r#"{"groups":[{"name":"a","kind":"cyclic","params":{"n":6}},
                      {"name":"a","kind":"cyclic","params":{"n":7}}]}"#,
    );
    assert!(matches!(load_catalog(&dup), Err(CatalogError::DuplicateName(n)) if n == "a"));

    let semi = write(
        &dir,
        "semi.json",
        r#"{"groups":[{"name":"g","kind":"semidirect_cyclic","params":{"n":8,"units":[3,5]}}]}"#,
    );
    let entries = load_catalog(&semi).unwrap();
    let GroupSpec::SemidirectCyclic { n, units } = &entries[0].spec else { panic!() };
    // closure of {3, 5} in (Z/8)^*, by repeated multiplication
    let mut closure = vec![1u64];
    while let Some(x) = closure
        .iter()
        .flat_map(|&a| units.iter().map(move |&u| a * u % n))
        .find(|x| !closure.contains(x))
    {
        closure.push(x);
    }
    assert_eq!(closure.len(), 4);
    assert_eq!(unit_subgroup(*n, units).len(), 4);

    let broken = write(&dir, "broken.json", "{\"groups\": [\n\n  {\"name\": 3}]}");
    assert!(matches!(load_catalog(&broken), Err(CatalogError::ParseError { line: 3, .. })));
}

#[test]
fn rdim_rows() {
    let (_dir, path) = catalog();
    let (code, out, _) = run(&["rdim", "--catalog", &path]);
    assert_eq!(code, EXIT_OK);
    let rows = rows(&out);
    let degree = |name: &str| {
        rows.iter().find(|r| r["name"] == name).unwrap()["total_degree"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(degree("C12"), 1);
    assert_eq!(degree("V4"), 2);
    assert_eq!(degree("S4"), 3);
    assert_eq!(degree("D10"), 2);
    assert_eq!(degree("Gamma2"), 4);
    assert_eq!(degree("Q8"), 2);
}

#[test]
fn family_and_prime() {
    let (code, out, _) = run(&["family", "--kind=semidirect_full_units", "--range=3..20"]);
    assert_eq!(code, EXIT_OK);
    let rows = rows(&out);
    assert_eq!(rows.len(), 18);
    let r5 = rows.iter().find(|r| r["index"] == 5).unwrap();
    assert_eq!(r5["rdim"], 4);
    assert_eq!(r5["ed_lower_sylow"], 1);

    let (code, out, _) = run(&["prime", "--p=2", "--n=3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rows_first(&out)["q"], 17);
}

fn rows_first(out: &str) -> Value {
    serde_json::from_str(out.lines().next().unwrap()).unwrap()
}

#[test]
fn oversize_family_rows_are_skipped() {
    let (code, out, _) = run(&["family", "--kind=gamma", "--range=1..4", "--max-order=200"]);
    assert_eq!(code, EXIT_OK);
    let rows = rows(&out);
    assert_eq!(rows.len(), 4);
    assert!(rows[2]["rdim"].is_u64());
    assert!(rows[3]["skipped"].as_str().unwrap().starts_with("OrderLimitExceeded"));
}

#[test]
fn every_command_is_deterministic_and_reparses() {
    let (dir, path) = catalog();
    let jt = write(&dir, "jt.json", r#"{"kind": "strong", "1": 1}"#);
    let jt = jt.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["rdim", "--catalog", &path],
        vec!["chartab", "--catalog", &path],
        vec!["edbounds", "--catalog", &path, "--jordan-table", jt],
        vec!["embed", "--catalog", &path, "--name", "S4", "--matrices"],
        vec!["embed", "--catalog", &path, "--name", "D10", "--subgroup=sylow:5"],
        vec!["embed", "--catalog", &path, "--name", "Q8", "--subgroup=center"],
        vec!["jordan", "--catalog", &path],
        vec!["family", "--kind=dihedral_odd", "--range=3..15"],
        vec!["family", "--kind=semidirect_custom", "--units=2", "--range=5..9"],
        vec!["prime", "--p=3", "--n=2"],
    ];
    for args in commands {
        for format in ["json", "csv"] {
            let mut args = args.clone();
            args.extend(["--format", format]);
            let (code, first, err) = run(&args);
            assert_eq!(code, EXIT_OK, "{args:?}: {err}");
            let (_, second, _) = run(&args);
            assert_eq!(first, second, "{args:?}");
            assert!(!first.is_empty());
            if format == "json" {
                for line in first.lines() {
                    let v: Value = serde_json::from_str(line).unwrap();
                    assert!(v.is_object());
                    assert_eq!(serde_json::from_str::<Value>(&v.to_string()).unwrap(), v);
                }
            } else {
                let mut reader = csv::ReaderBuilder::new().from_reader(first.as_bytes());
                assert!(reader.records().all(|r| r.is_ok()));
            }
        }
    }
}

#[test]
fn edbounds_with_jordan_table() {
    let (dir, path) = catalog();
    let jt = write(&dir, "jt.json", r#"{"kind": "strong", "1": 1}"#);
    let (code, out, _) = run(&["edbounds", "--catalog", &path, "--name", "S4", "--jordan-table", jt.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let row = rows_first(&out);
    assert_eq!(row["ed_upper"], 3);
    assert_eq!(row["contrapositive"]["bound"], 2);
    assert_eq!(row["contrapositive"]["entries_used"][0]["n"], 1);
    assert_eq!(row["roots_of_unity_assumed"], true);
}

#[test]
fn exit_codes() {
    let (dir, path) = catalog();
    // verification failures come only from injected faults
    for args in [
        vec!["rdim", "--catalog", &path],
        vec!["chartab", "--catalog", &path],
        vec!["edbounds", "--catalog", &path],
        vec!["embed", "--catalog", &path, "--name", "S4"],
    ] {
        let (code, _, _) = run(&args);
        assert_eq!(code, EXIT_OK, "{args:?}");
        let mut faulty = args.clone();
        faulty.push("--inject-fault");
        let (code, _, err) = run(&faulty);
        assert_eq!(code, EXIT_VERIFICATION, "{faulty:?}");
        assert!(err.contains("verification failed"));
    }

    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("Usage"));
    let (code, _, _) = run(&["family", "--kind=gamma", "--range=5"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["embed", "--catalog", &path]);
    assert_eq!(code, EXIT_USAGE);

    let (code, _, err) = run(&["prime", "--p=4", "--n=2"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert!(err.contains("NotPrime"));
    let (code, _, err) = run(&["rdim", "--catalog", &path, "--max-order=16"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert!(err.contains("group-core/OrderLimitExceeded"));
    let (code, _, err) = run(&["embed", "--catalog", &path, "--name", "S4", "--subgroup=sylow:2"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert!(err.contains("NotAbelian"));
    let missing = dir.path().join("missing.json");
    let (code, _, _) = run(&["rdim", "--catalog", missing.to_str().unwrap()]);
    assert_eq!(code, EXIT_COMPUTATION);
}
