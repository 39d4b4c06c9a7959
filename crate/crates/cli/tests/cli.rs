use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_branchdual"))
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn branchdual")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stdout)));
    (code(&out), v)
}

fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schema/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let errors: Vec<String> = validator()
        .iter_errors(v)
        .map(|e| format!("{e} at {}", e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{errors:#?}\n{v:#}");
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "float {n}"),
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

const CASES: &[(&[&str], i32)] = &[
    (&["analyze", "--gens", "t^3+t^4, t^5"], 0),
    (&["inverse-system", "--gens", "t^4, t^7, t^9"], 0),
    (
        &[
            "check-af",
            "--gens",
            "t^3, t^4, t^5",
            "--v",
            "u^3 - 1/20 u^5",
        ],
        0,
    ),
    (&["check-af", "--gens", "t", "--v", "u^2"], 4),
    (&["annihilate", "--gens", "t^2, t^3", "--v", "u^2"], 0),
    (&["annihilate", "--gens", "t", "--v", "u^2"], 4),
    (&["filtration", "--gens", "t^3+t^4, t^5"], 0),
    (&["derivations", "--gens", "t^3, t^4, t^5"], 0),
    (
        &["derivations", "--gens", "t^4, t^7, t^17", "--v", "u^11"],
        0,
    ),
    (&["gorenstein", "--gens", "4, 6, 9"], 0),
    (&["semigroup", "--gens", "4, 7, 9"], 0),
    (&["semigroup", "--gens", "4, 6"], 1),
    (&["saturation", "--char", "6;8,11"], 0),
    (&["saturation", "--char", "6;9"], 1),
    (
        &[
            "transport",
            "--v",
            "u; u^3; u^5",
            "--conductor",
            "6",
            "--h",
            "t + t^2",
        ],
        0,
    ),
    (
        &["transport", "--gens", "t^2, t^7", "--h", "t - 1/2 t^3"],
        0,
    ),
    (&["transport", "--gens", "t^2, t^7", "--h", "t^2"], 1),
    (&["blowup-chain", "--gens", "t^6, t^8+t^11, t^10+t^13"], 0),
    (&["canonical", "--gens", "t^4, t^7, t^9"], 0),
    (&["verify", "--gens", "t^3+t^4, t^5"], 0),
    (&["analyze", "--gens", "t^2 + t^3"], 2),
    (&["analyze", "--gens", "t^4, t^6 + t^9"], 0),
    (&["analyze", "--gens", "t^4, t^6, t^8 + t^10"], 2),
    (&["analyze", "--gens", "t^2 + u"], 3),
    (&["analyze", "--gens", "t^2 + 3/0 t^3"], 3),
    (&["analyze", "--gens", "t^3 + O(t^5), t^4"], 5),
    (&["analyze", "--gens", "t^3, t^4", "--trunc", "4"], 5),
    (&["check-af", "--gens", "t^2, t^3", "--v", "1 + u"], 1),
];

#[test]
fn exit_codes_and_reports() {
    let schema = validator();
    for (args, want) in CASES {
        let (got, v) = json(args);
        assert_eq!(got, *want, "{args:?}: {v:#}");
        assert_eq!(v["exit_code"], *want, "{args:?}");
        assert_no_floats(&v);
        let errors: Vec<String> = schema.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn text_output() {
    let out = run(&["analyze", "--gens", "t^3+t^4, t^5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("delta"), "{text}");
    assert!(text.contains('4') && text.contains('8'), "{text}");
    let out = run(&["inverse-system", "--gens", "t^3+t^4, t^5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("u^3 - 1/4 u^4"), "{text}");
    assert!(text.contains("u^6 - 1/14 u^7"), "{text}");
}

#[test]
fn parse_errors_carry_positions() {
    let (c, v) = json(&["analyze", "--gens", "t^2 + 3/0 t^3"]);
    assert_eq!(c, 3);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["position"], 8);
    assert_eq!(v["status"], "error");
}

#[test]
fn coefficients_are_exact_strings() {
    let (_, v) = json(&["inverse-system", "--gens", "t^3+t^4, t^5"]);
    let ops = v["inverse_system"].as_array().unwrap();
    assert_eq!(ops[3]["coefficients"]["7"], "-1/14");
    assert_eq!(ops[2]["coefficients"]["4"], "-1/4");
    assert_eq!(v["invariants"]["delta"], 4);
    let (_, v) = json(&["canonical", "--gens", "t^4, t^7, t^9"]);
    assert_eq!(
        v["result"]["representatives"][5]["laurent"]["-11"],
        "3628800"
    );
}

#[test]
fn job_files() {
    let out = run(&["job", data("batch.json").to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let reports: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 4);
    for r in &reports {
        assert_valid(r);
        assert_no_floats(r);
        assert_eq!(r["status"], "ok");
    }
    assert_eq!(reports[1]["invariants"]["conductor"], 11);
    assert_eq!(reports[2]["certificates"]["algebra_forming"], true);

    let out = run(&["job", data("mixed.json").to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 2);
    let reports: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["exit_code"], 0);
    assert_eq!(reports[1]["error"]["kind"], "infinite-codimension");

    let out = run(&["job", data("single.json").to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let reports: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["result"]["symmetric"], true);

    for bad in ["unknown_field.json", "truncated.json"] {
        let out = run(&["job", data(bad).to_str().unwrap(), "--json"]);
        assert_eq!(code(&out), 3, "{bad}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_valid(&v);
        assert_eq!(v["error"]["kind"], "parse");
    }

    let out = run(&["job", data("missing.json").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn golden_corpus() {
    let out = run(&["golden", root().join("golden").to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.contains(" 0 failed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn golden_failure_is_reported() {
    let dir = std::env::temp_dir().join(format!("branchdual-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("wrong.json"),
        r#"[{"name": "wrong delta", "command": "analyze", "generators": ["t^2, t^3"], "exit_code": 0, "expect": {"invariants": {"delta": 2}}}]"#,
    )
    .unwrap();
    let out = run(&["golden", dir.to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code(&out), 1);
    assert!(text.contains("FAIL wrong.json:wrong delta"), "{text}");
}
