use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tgrs"));
    cmd.env_remove("TGRS_ORACLE_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(p).expect("golden file exists")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

/// The text rendering predicted from a JSON report, field by field.
fn text_from_json(r: &Value) -> String {
    let scalar = |v: &Value| match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let witness = match &r["witness"] {
        Value::Array(items) => {
            let items: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", items.join(","))
        }
        _ => "-".to_string(),
    };
    let oracle = match r["oracle"]["status"].as_str().unwrap() {
        "skipped" => format!("skipped ({})", r["oracle"]["reason"].as_str().unwrap()),
        s => s.to_string(),
    };
    let mut lines = vec![
        format!("schema: {}", r["schema"]),
        format!("field: {}", scalar(&r["params"]["field"])),
        format!("n: {}", r["params"]["n"]),
        format!("k: {}", r["params"]["k"]),
        format!("eta: {}", scalar(&r["params"]["eta"])),
    ];
    for key in ["case_tag", "classification", "target"] {
        lines.push(format!("{key}: {}", scalar(&r[key])));
    }
    lines.push(format!("witness: {witness}"));
    for key in ["self_dual", "lambda", "min_distance", "dual_min_distance"] {
        lines.push(format!("{key}: {}", scalar(&r[key])));
    }
    lines.push(format!("oracle: {oracle}"));
    let checks = r["checks"].as_object().unwrap();
    assert_eq!(checks.len(), 7, "every check is rendered");
    for key in [
        "G_Ht_zero",
        "G_Gt_zero",
        "rank_g",
        "rank_h",
        "moment_identities",
        "structural_self_dual",
        "criterion_matches_oracle",
    ] {
        lines.push(format!("check {key}: {}", scalar(&checks[key])));
    }
    lines.join("\n") + "\n"
}

fn assert_formats_agree(args: &[&str]) {
    let text = run(args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let js = run(&json_args);
    assert_eq!(text.status.code(), js.status.code());
    assert_eq!(stdout(&text), text_from_json(&json(&js)), "args {args:?}");
}

#[test]
fn golden_report() {
    let spec = fixture("self_dual_f13.json");
    let text = run(&["classify", &spec]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(stdout(&text), golden("self_dual_f13.txt"));
    let js = run(&["classify", &spec, "--format", "json"]);
    assert_eq!(
        json(&js),
        serde_json::from_str::<Value>(&golden("self_dual_f13.json")).unwrap()
    );
}

#[test]
fn text_and_json_carry_the_same_information() {
    assert_formats_agree(&["classify", &fixture("self_dual_f13.json")]);
    assert_formats_agree(&["classify", &fixture("singular_f13.json")]);
    assert_formats_agree(&["classify", &fixture("singular_f13.json"), "--no-oracle"]);
    assert_formats_agree(&["classify", &fixture("singular_f13.json"), "--budget", "2"]);
    assert_formats_agree(&["construct", "--family", "T36", "--q", "61", "--n", "14"]);
}

#[test]
fn construct_example_codes() {
    let o = run(&[
        "construct",
        "--family",
        "T36",
        "--q",
        "89",
        "--beta",
        "1",
        "--n",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["self_dual"], true);
    assert_eq!(r["classification"], "MDS");
    assert_eq!(r["min_distance"], 6);

    let o = run(&[
        "construct",
        "--family",
        "T36",
        "--q",
        "61",
        "--beta",
        "1",
        "--n",
        "14",
        "--format",
        "json",
    ]);
    let r = json(&o);
    assert_eq!(r["self_dual"], true);
    assert_eq!(r["classification"], "NMDS");
    assert_eq!(r["target"], "30");
    assert!(r["witness"].as_array().is_some_and(|w| w.len() == 7));
}

#[test]
fn construct_refusal_names_hypothesis() {
    let o = run(&["construct", "--family", "T36", "--q", "13", "--n", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("(n+1) = 11 does not divide q-1 = 12"),
        "{}",
        stderr(&o)
    );

    let o = run(&[
        "construct",
        "--family",
        "T36",
        "--q",
        "13",
        "--n",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let e = json(&o);
    assert_eq!(e["error"]["kind"], "hypothesis");
    assert_eq!(e["error"]["hypothesis"], "(n+1) | (q-1)");

    let o = run(&[
        "construct",
        "--family",
        "T35",
        "--q-prime",
        "13",
        "--n",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--b is required"));
}

#[test]
fn construct_then_classify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("code.json");
    let spec_s = spec.to_str().unwrap();
    for family in [
        vec![
            "--family", "T36", "--q", "61", "--n", "14", "--j", "1", "--beta", "2",
        ],
        vec![
            "--family", "T31", "--p", "3", "--l", "1", "--b", "1", "--c", "2",
        ],
        vec!["--family", "T35", "--q-prime", "13", "--b", "3", "--n", "4"],
        vec!["--family", "T33", "--p", "5"],
    ] {
        let mut args = vec!["construct", "--format", "json", "--out", spec_s];
        args.extend(family.iter().copied());
        let built = run(&args);
        assert_eq!(built.status.code(), Some(0), "{args:?}: {}", stderr(&built));
        let again = run(&["classify", spec_s, "--format", "json"]);
        assert_eq!(json(&built), json(&again), "{args:?}");

        let file: Value = serde_json::from_str(&std::fs::read_to_string(&spec).unwrap()).unwrap();
        assert_eq!(file["schema"], 1);
        assert!(file["provenance"]["conditions_checked"].is_array());
    }
}

#[test]
fn construct_from_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("construction.json");
    std::fs::write(&spec, r#"{"family":"T36","q":89,"beta":"1","n":10,"j":0}"#).unwrap();
    let o = run(&[
        "construct",
        "--spec",
        spec.to_str().unwrap(),
        "--format",
        "json",
        "--no-oracle",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["params"]["n"], 10);
}

#[test]
fn classify_input_errors() {
    let o = run(&["classify", &fixture("repeated_points.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("evaluation points not distinct"));

    let o = run(&["classify", &fixture("zero_multiplier.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("multiplier must be nonzero"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\n  \"schema\": 1,\n  \"field\": \"13\",\n  \"n\": \"four\"\n}",
    )
    .unwrap();
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));

    let o = run(&["classify", "/nonexistent/spec.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn example_verb() {
    let o = run(&["example", "3.10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("example 3.10: PASS"));

    let o = run(&["example", "3.11", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["passed"], true);
    assert_eq!(r["report"]["min_distance"], 7);
    assert_eq!(r["report"]["dual_min_distance"], 7);

    let o = run(&["example", "9.99"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown example id"));
}

#[test]
fn matrices_verb() {
    let o = run(&[
        "matrices",
        &fixture("singular_f13.json"),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let m = json(&o);
    assert_eq!(m["case_tag"], "SINGULAR");
    assert_eq!(m["G_Ht_zero"], true);
    assert_eq!(m["G_Gt_zero"], false);
    // Last row of H is u_i alpha_i^(n-k) with u = (2,7,6,11), alpha = 1..4.
    let last: Vec<u64> = (1..=4u64)
        .zip([2u64, 7, 6, 11])
        .map(|(a, u)| u * a * a % 13)
        .collect();
    let h_last: Vec<u64> = m["H"][1]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(h_last, last);

    let o = run(&["matrices", &fixture("self_dual_f13.json")]);
    let text = stdout(&o);
    assert!(text.contains("G H^T (zero: true)"));
    assert!(text.contains("G G^T (zero: true)"));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", &fixture("self_dual_f13.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: self-dual"));
    let o = run(&["verify", &fixture("singular_f13.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict: not self-dual"));
}

#[test]
fn sweep_verb() {
    let o = run(&[
        "sweep", "--family", "T36", "--q", "29..89", "--beta", "1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let t = json(&o);
    let rows = t["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        assert_eq!(row["status"], "built", "{row}");
        assert_eq!(row["report"]["self_dual"], true);
        assert_eq!(row["lambda_matches"], true);
    }

    let o = run(&[
        "sweep",
        "--family",
        "T35",
        "--q-prime",
        "3..13",
        "--n",
        "4,6",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t = json(&o);
    let rows = t["rows"].as_array().unwrap();
    let refused: Vec<_> = rows.iter().filter(|r| r["status"] == "refused").collect();
    assert!(!refused.is_empty() && refused.len() < rows.len());
    for r in refused {
        assert!(r["hypothesis"].is_string(), "{r}");
    }

    let o = run(&["sweep", "--family", "T36", "--q", "90..89"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rows=0 built=0"));
}

#[test]
fn budget_from_environment() {
    let spec = fixture("self_dual_f13.json");
    let o = bin()
        .args(["classify", &spec, "--format", "json"])
        .env("TGRS_ORACLE_BUDGET", "2")
        .output()
        .unwrap();
    let r = json(&o);
    assert_eq!(r["oracle"]["status"], "skipped");
    assert_eq!(r["min_distance"], Value::Null);
}

#[test]
fn seed_does_not_change_results() {
    let a = run(&[
        "construct",
        "--family",
        "T31",
        "--p",
        "3",
        "--l",
        "1",
        "--b",
        "1",
        "--c",
        "2",
        "--format",
        "json",
        "--no-oracle",
    ]);
    let b = run(&[
        "construct",
        "--family",
        "T31",
        "--p",
        "3",
        "--l",
        "1",
        "--b",
        "1",
        "--c",
        "2",
        "--format",
        "json",
        "--no-oracle",
        "--seed",
        "99",
    ]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(json(&a), json(&b));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["construct"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
