use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_synchro"));
    for var in [
        "SYNCHRO_MAX_STATES",
        "SYNCHRO_MAX_EXHAUSTIVE_STATES",
        "SYNCHRO_NODE_BUDGET",
        "SYNCHRO_TIME_BUDGET",
    ] {
        cmd.env_remove(var);
    }
    cmd
}

fn synchro(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// In-process run returning (status, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("synchro").chain(args.iter().copied());
    let code = synchro_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Every JSON document in `text`, which holds one or more pretty-printed
/// reports back to back.
fn reports(text: &str) -> Vec<Value> {
    serde_json::Deserializer::from_str(text)
        .into_iter::<Value>()
        .collect::<Result<_, _>>()
        .expect("valid JSON")
}

fn validator() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/verdict.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(report: &Value) {
    let v = validator();
    let errors: Vec<String> = v.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{report:#}");
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "synchro-cli-{}-{}",
        std::process::id(),
        rand_suffix()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn rand_suffix() -> u128 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .unwrap()
        .as_nanos()
}

#[test]
fn verify_item_1_reports_failure() {
    let (code, out, _) = run(&["verify", "prop1", "--item", "1", "--n", "4", "--json"]);
    assert_eq!(code, 0);
    let r = &reports(&out)[0];
    assert_eq!(r["measured"]["shortest_extension_length"], 5);
    assert_eq!(r["verdict"], "fails");
    assert_eq!(r["conjecture"], "extension");
    assert_eq!(r["witness"]["word"], "aabaa");
    assert_eq!(r["witness"]["set"], serde_json::json!(["q0", "s1"]));
    assert_valid(r);

    let (code, _, _) = run(&[
        "verify",
        "prop1",
        "--item",
        "1",
        "--n",
        "4",
        "--expect-holds",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn reset_on_cerny_4() {
    let o = synchro(&["reset", "--family", "cerny:4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("length                 9"), "{text}");
    assert!(text.contains("baaabaaab"), "{text}");
}

#[test]
fn ea_on_carpi_3_1() {
    let (code, out, _) = run(&[
        "ea",
        "--family",
        "carpi:3,1",
        "--cs",
        "q0,q1",
        "--vs",
        "ba",
        "--ce",
        "q0..q3",
        "--ve",
        "a",
        "--json",
    ]);
    assert_eq!(code, 0);
    let r = &reports(&out)[0];
    // a(ba^3)^2ba
    assert_eq!(r["measured"]["word"], "abaaabaaaba");
    assert_eq!(r["measured"]["length"], 11);
    assert_valid(r);
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(synchro(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        synchro(&["reset", "--family", "cerny:4", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        synchro(&["reset", "--family", "nope:4"]).status.code(),
        Some(2)
    );
    assert_eq!(synchro(&["reset"]).status.code(), Some(2));
    assert_eq!(
        synchro(&["reset", "--file", "/nonexistent/file.dfa"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        synchro(&["verify", "prop1", "--item", "1", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        synchro(&["verify", "prop1", "--item", "4", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        synchro(&["extend", "--family", "cerny:4", "--set", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(synchro(&["--help"]).status.code(), Some(0));
}

#[test]
fn budget_exhaustion_exits_with_3() {
    let o = synchro(&["reset", "--family", "cerny:8", "--node-budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nodes"));
    assert_eq!(
        synchro(&["reset", "--family", "cerny:8", "--max-states", "4"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        synchro(&[
            "radius",
            "--family",
            "cerny:8",
            "--max-exhaustive-states",
            "5"
        ])
        .status
        .code(),
        Some(3)
    );
    let o = bin()
        .args(["reset", "--family", "cerny:8"])
        .env("SYNCHRO_NODE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gen_round_trips_through_files_and_stdin() {
    let dir = tempdir();
    let path = dir.join("a32.dfa");
    let o = synchro(&[
        "gen",
        "--family",
        "carpi:3,2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("dfa 1\n6 2\n"));
    let again = stdout(&synchro(&["gen", "--file", path.to_str().unwrap()]));
    assert_eq!(again, written);

    let mut child = bin()
        .args(["gen", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(written.as_bytes())
        .unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(stdout(&piped), written);

    let (code, out, _) = run(&["info", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let r = &reports(&out)[0];
    assert_eq!(
        r["measured"]["carpi_parameters"],
        serde_json::json!({"m": 3, "k": 2})
    );
    assert_eq!(r["measured"]["synchronizing"], true);
    assert_valid(r);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn random_family_with_constraints() {
    let a = stdout(&synchro(&[
        "gen",
        "--family",
        "random:7,2,11",
        "--require",
        "synchronizing,strongly-connected",
    ]));
    let b = stdout(&synchro(&[
        "gen",
        "--family",
        "random:7,2,11",
        "--require",
        "synchronizing,strongly-connected",
    ]));
    assert_eq!(a, b);
    let (code, out, _) = run(&[
        "info",
        "--family",
        "random:7,2,11",
        "--require",
        "synchronizing,strongly-connected",
        "--json",
    ]);
    assert_eq!(code, 0);
    let r = &reports(&out)[0];
    assert_eq!(r["measured"]["synchronizing"], true);
    assert_eq!(r["measured"]["strongly_connected"], true);
}

#[test]
fn fuzz_is_deterministic_and_appends_json_lines() {
    let dir = tempdir();
    let path = dir.join("fuzz.jsonl");
    let p = path.to_str().unwrap();
    let first = synchro(&[
        "fuzz", "--count", "20", "--n", "5", "--seed", "4", "--out", p, "--json",
    ]);
    let second = synchro(&[
        "fuzz", "--count", "20", "--n", "5", "--seed", "4", "--out", p, "--json",
    ]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let lines: Vec<Value> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 40);
    assert_eq!(lines[3], lines[23]);
    assert!(lines[0]["dfa"]
        .as_str()
        .unwrap()
        .starts_with("dfa 1\n5 2\n"));
    let r = &reports(&stdout(&first))[0];
    let total: u64 = r["measured"]["radius_distribution"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .sum();
    assert_eq!(total, 20);
    assert_valid(r);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn dot_highlights_c_b() {
    let o = synchro(&["dot", "--family", "carpi:2,1", "--highlight", "cb"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("highlight=true").count(), 2);
    assert_eq!(
        text,
        stdout(&synchro(&[
            "dot",
            "--family",
            "carpi:2,1",
            "--highlight",
            "cb"
        ]))
    );
}

#[test]
fn radius_verdicts() {
    let (code, out, _) = run(&[
        "radius",
        "--family",
        "carpi:5,1",
        "--c",
        "3/2",
        "--json",
        "--expect-holds",
    ]);
    assert_eq!(code, 1);
    let r = &reports(&out)[0];
    assert_eq!(r["verdict"], "fails");
    assert_eq!(r["conjecture"], "cn-extension");
    assert_valid(r);

    let (code, out, _) = run(&[
        "radius",
        "--family",
        "cerny:5",
        "--c",
        "1",
        "--workers",
        "3",
        "--json",
        "--expect-holds",
    ]);
    assert_eq!(code, 0);
    let r = &reports(&out)[0];
    assert_eq!(r["verdict"], "holds");
    assert!(r["search_bound"].is_string());
    assert_valid(r);

    let (_, out, _) = run(&[
        "radius", "--family", "cerny:5", "--c", "1", "--sample", "5", "--json",
    ]);
    let r = &reports(&out)[0];
    assert_eq!(r["mode"], "sampling");
    assert_ne!(r["verdict"], "holds");
    assert_valid(r);
}

#[test]
fn verify_item_3_emits_two_reports() {
    let (code, out, _) = run(&[
        "verify", "prop1", "--item", "3", "--m", "5", "--k", "2", "--json",
    ]);
    assert_eq!(code, 0);
    let rs = reports(&out);
    assert_eq!(rs.len(), 2);
    assert_eq!(rs[0]["conjecture"], "kn-balanced");
    assert_eq!(rs[1]["conjecture"], "kn-independent");
    assert_eq!(rs[0]["measured"]["shortest_chain_growth_length"], 12);
    for r in &rs {
        assert_valid(r);
    }
}

#[test]
fn every_analysis_emits_a_valid_report() {
    let commands: &[&[&str]] = &[
        &["info", "--family", "cerny:5"],
        &["reset", "--family", "carpi:2,1"],
        &["compress", "--family", "cerny:5"],
        &["extend", "--family", "carpi:2,1", "--set", "q0,s1"],
        &[
            "extend",
            "--family",
            "carpi:2,1",
            "--set",
            "q0,s1",
            "--max-len",
            "4",
        ],
        &["ea", "--family", "cerny:5"],
        &[
            "ea",
            "--family",
            "carpi:2,1",
            "--cs",
            "q0,q1",
            "--vs",
            "ba",
            "--ce",
            "q0..q2",
            "--ve",
            "a",
            "--local-k",
            "1",
        ],
        &["radius", "--family", "carpi:2,1"],
        &["independent", "--family", "cerny:4"],
        &["independent", "--family", "cerny:4", "--min-len", "5"],
        &["balanced", "--family", "cerny:4", "--set", "0"],
        &[
            "balanced",
            "--family",
            "carpi:2,1",
            "--all-subsets-of",
            "q0..q2",
            "--k",
            "1",
        ],
        &["verify", "prop1", "--item", "2", "--n", "7", "--c", "1.5"],
        &["verify", "prop1", "--item", "2", "--n", "5", "--c", "3/2"],
    ];
    for args in commands {
        let mut argv = args.to_vec();
        argv.push("--json");
        let (code, out, err) = run(&argv);
        assert_eq!(code, 0, "{args:?}: {err}");
        for r in reports(&out) {
            assert_valid(&r);
        }
        let (code, table, _) = run(args);
        assert_eq!(code, 0);
        assert!(table.starts_with("analysis"), "{args:?}");
    }
}

#[test]
fn schema_rejects_a_failure_without_witness() {
    let (_, out, _) = run(&["verify", "prop1", "--item", "1", "--n", "5", "--json"]);
    let mut r = reports(&out).remove(0);
    r["witness"] = Value::Null;
    assert!(!validator().is_valid(&r));
}
