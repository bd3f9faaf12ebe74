use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn catalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = catalan(&all);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)));
    assert_eq!(v["schema_version"], 1);
    (o.status.code().unwrap(), v)
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn enumerate_listings() {
    let o = catalan(&["enumerate", "--dim", "2"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines, ["UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD", "count: 5"]);

    let (code, v) = json(&["enumerate", "--dim", "4", "--nondegenerate"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 9);
    assert_eq!(v["items"].as_array().unwrap().len(), 9);

    let (_, v) = json(&["enumerate", "--dim", "0"]);
    assert_eq!(v["items"], serde_json::json!(["UD"]));

    let (_, v) = json(&["enumerate", "--dim", "3", "--as", "relation"]);
    assert_eq!(v["count"], 14);
    let (_, v) = json(&["enumerate", "--dim", "5", "--as", "motzkin"]);
    assert_eq!((v["count"].clone(), v["nondegenerate"].clone()), (21.into(), true.into()));
}

#[test]
fn caps_and_config() {
    assert_eq!(catalan(&["enumerate", "--dim", "11"]).status.code(), Some(3));
    assert_eq!(catalan(&["enumerate", "--dim", "8", "--as", "relation"]).status.code(), Some(3));

    let low = temp_file("[caps]\ndyck = 3\n");
    let path = low.path().to_str().unwrap();
    assert_eq!(catalan(&["--config", path, "enumerate", "--dim", "4"]).status.code(), Some(3));
    assert_eq!(catalan(&["--config", path, "enumerate", "--dim", "3"]).status.code(), Some(0));

    let bad = temp_file("[caps]\ndyke = 3\n");
    let o = catalan(&["--config", bad.path().to_str().unwrap(), "enumerate", "--dim", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("dyke"), "{}", stderr(&o));
}

#[test]
fn word_operations() {
    assert_eq!(stdout(&catalan(&["face", "UUDUDD", "1"])).trim(), "UDUD");
    assert_eq!(stdout(&catalan(&["degeneracy", "UDUD", "0"])).trim(), "UUDDUD");
    let (_, v) = json(&["decompose", "UUDDUD"]);
    assert_eq!(v["base"], "UDUD");
    assert_eq!(v["surjection"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["degenerate"], true);
    assert_eq!(stdout(&catalan(&["motzkin", "UUDUDUDD"])).trim(), "UCD");
    assert_eq!(stdout(&catalan(&["motzkin", "--inverse", "UCD"])).trim(), "UUDUDUDD");

    assert_eq!(catalan(&["face", "UDDU", "0"]).status.code(), Some(2));
    assert_eq!(catalan(&["face", "UDUD", "2"]).status.code(), Some(2));
    assert_eq!(catalan(&["motzkin", "UUDDUD"]).status.code(), Some(2), "degenerate words have no Motzkin word");
}

#[test]
fn verify_suites() {
    let o = catalan(&["verify", "--suite", "binomial", "--max-n", "12"]);
    assert!(o.status.success(), "{}", stdout(&o));

    let o = catalan(&["verify", "--suite", "coskeletal", "--r", "2", "--max-dim", "6"]);
    assert!(o.status.success(), "{}", stdout(&o));

    let o = catalan(&["verify", "--suite", "nerve-iso", "--max-dim", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 isomorphism found"));

    let o = catalan(&["verify", "--suite", "coskeletal", "--r", "1", "--max-dim", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("0 fillers"));

    let (code, v) = json(&["verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["identities", "coskeletal", "nerve-iso", "motzkin", "binomial"]);

    assert_eq!(catalan(&["verify", "--suite", "nerve-iso", "--max-dim", "7"]).status.code(), Some(3));
}

#[test]
fn classify_files() {
    for (file, count) in [
        ("two.json", 2),
        ("chain3-max.json", 3),
        ("chain3-trunc-add.json", 2),
        ("antichain2.json", 1),
        ("one-z.json", 1),
    ] {
        let (code, v) = json(&["classify", &data(file)]);
        assert_eq!(code, 0, "{file}");
        assert_eq!(v["agree"], true, "{file}");
        assert_eq!((v["records"].clone(), v["maps"].clone(), v["monoids"].clone()), (count.into(), count.into(), count.into()));
        assert_eq!(v["listing"].as_array().unwrap().len(), count);
    }
    let o = catalan(&["classify", &data("two.json")]);
    let text = stdout(&o);
    assert!(text.contains("A = top  mu = top<=top  eta = bot<=top"), "{text}");
    assert!(text.contains("agreement: true"));
}

#[test]
fn malformed_files_report_the_field() {
    let missing = temp_file(
        r#"{"schema_version": 1, "kind": "poset", "elements": ["a", "b"], "order": [["a", "b"]],
            "tensor": [{"left": "a", "right": "a", "result": "a"}], "unit": "a"}"#,
    );
    let o = catalan(&["classify", missing.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("tensor"), "{}", stderr(&o));

    let typo = temp_file(r#"{"schema_version": 1, "kind": "poset", "elements": ["a"], "order": [], "tensor": [], "unti": "a"}"#);
    let o = catalan(&["classify", typo.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unti"), "{}", stderr(&o));

    let broken = temp_file("{\"schema_version\": 1,\n  \"kind\": ");
    let o = catalan(&["skew", "check", broken.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    assert_eq!(catalan(&["classify", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn skew_checks() {
    let (code, v) = json(&["skew", "check", &data("two-or.json")]);
    assert_eq!(code, 0);
    for family in ["axioms", "pentagons"] {
        assert!(v[family]["outcomes"].as_array().unwrap().iter().all(|o| o["holds"] == true));
    }

    let (code, v) = json(&["skew", "check", &data("kappa-z.json")]);
    assert_eq!(code, 1);
    let a5 = v["pentagons"]["outcomes"].as_array().unwrap().iter().find(|o| o["condition"] == "A5").unwrap().clone();
    assert_eq!(a5["holds"], false);
    assert_eq!(a5["composites"], serde_json::json!(["z", "1"]));
    assert_eq!(v["axioms"]["outcomes"].as_array().unwrap().iter().filter(|o| o["holds"] == false).count(), 0);
    assert_eq!(v["equivalence"], true);

    // a poset file is also a skew datum
    assert_eq!(catalan(&["skew", "check", &data("two.json")]).status.code(), Some(0));
}

#[test]
fn skew_sweeps() {
    let (code, v) = json(&["skew", "sweep", "--carrier", "chain2"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["equivalence_holds"], true);
    assert_eq!(v["summary"]["candidates"], 4);

    let (code, v) = json(&["skew", "sweep", "--carrier", "one-z"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["a5_forces_identity_kappa"], true);

    assert_eq!(catalan(&["skew", "sweep", "--carrier", "one-z", "--budget", "3"]).status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "--json"],
        vec!["classify", "--json", "CHAIN"],
        vec!["skew", "check", "--json", "KZ"],
        vec!["enumerate", "--dim", "5", "--as", "relation", "--json"],
    ] {
        let (chain, kz) = (data("chain3-max.json"), data("kappa-z.json"));
        let args: Vec<&str> = args.iter().map(|a| if *a == "CHAIN" { &chain } else if *a == "KZ" { &kz } else { *a }).collect();
        let first = catalan(&args);
        let second = catalan(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status, second.status);
    }
}
