use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplejac")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: bad JSON ({e})"));
    (code, v)
}

fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

const CASES: &[(&[&str], i32)] = &[
    (&["family", "--q", "11", "--s", "1"], 0),
    (&["family", "--q", "13", "--s", "-1"], 0),
    (&["commutant", "--q", "11"], 0),
    (&["classnum", "--p", "163"], 0),
    (&["classnum", "--sweep", "2000"], 0),
    (&["quadorder", "--p", "11", "--random", "5"], 0),
    (&["jinv", "--p", "163"], 0),
    (&["jinv", "--p", "23"], 2),
    (&["s3", "--p", "11"], 0),
    (&["census", "--q", "13"], 0),
    (&["ftkl", "--group", "Sp", "--n", "2", "--q", "2", "--derived"], 0),
    (&["goursat", "--g1", "S3", "--g2", "S3"], 0),
];

#[test]
fn outputs_validate_against_schema() {
    let schema = validator();
    for (args, code) in CASES {
        let (got, v) = json(args);
        assert_eq!(got, *code, "{args:?}");
        let errors: Vec<String> = schema.iter_errors(&v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn schema_rejects_unknown_fields() {
    let (_, mut v) = json(&["census", "--q", "5"]);
    v["extra"] = Value::Bool(true);
    assert!(!validator().is_valid(&v));
}

#[test]
fn exit_codes() {
    let text = |args: &[&str]| {
        let out = run(args);
        (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into_owned())
    };
    let (code, out) = text(&["--format", "text", "ftkl", "--group", "Sp", "--n", "2", "--q", "2", "--derived"]);
    assert_eq!(code, 0);
    assert!(out.contains("not exceptional"), "{out}");
    let (code, out) = text(&["--format", "text", "ftkl", "--group", "Sp", "--n", "2", "--q", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("exceptional") && !out.contains("not exceptional"), "{out}");
    assert_eq!(text(&["classnum", "--sweep", "10000"]).0, 0);
    assert_eq!(text(&["commutant", "--q", "21"]).0, 3);
    assert_eq!(text(&["census", "--q", "8"]).0, 3);
    assert_eq!(text(&["no-such-command"]).0, 3);
    assert_eq!(text(&["--help"]).0, 0);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("simplejac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.json");
    let out = run(&["--format", "json", "--output", path.to_str().unwrap(), "census", "--q", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "census");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seeded_runs_are_deterministic() {
    let args = ["--seed", "42", "--format", "json", "family", "--q", "11", "--s", "1"];
    let first = run(&args).stdout;
    assert_eq!(first, run(&args).stdout);
    for jobs in ["1", "4"] {
        let mut with_jobs = vec!["--jobs", jobs];
        with_jobs.extend_from_slice(&args);
        assert_eq!(first, run(&with_jobs).stdout, "--jobs {jobs}");
    }
    let other = run(&["--seed", "43", "--format", "json", "family", "--q", "11", "--s", "1"]).stdout;
    assert_ne!(first, other);
}

#[test]
fn family_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("simplejac-poly-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.json");
    let poly = simplejac::families::polynomial_to_json(&simplejac::families::build_f11(&simplejac::exact::rat(1, 1)));
    std::fs::write(&path, poly).unwrap();
    let (code, v) = json(&["galois", "--q", "11", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(validator().is_valid(&v));
    std::fs::remove_dir_all(&dir).unwrap();
}
