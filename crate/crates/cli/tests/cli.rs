use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpturan"))
        .args(args)
        .env_remove("MPTURAN_JOBS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Fails if any JSON number is not an integer.
fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float {n}"),
        Value::Array(xs) => xs.iter().for_each(assert_no_floats),
        Value::Object(m) => m.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn bounds_examples() {
    let out = run(&["bounds", "--n", "60", "--r", "10", "--t", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_no_floats(&v);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["exact"], 378);

    let v = json(&run(&["bounds", "--n", "1", "--r", "7", "--t", "3", "--format", "json"]));
    assert_eq!((v["lower"].as_i64(), v["upper"].as_i64()), (Some(4), Some(4)));
    assert_eq!(v["status"], "exact");

    let out = run(&["bounds", "--n", "2", "--r", "6", "--t", "3"]);
    assert!(stdout(&out).starts_with("f(2, 6, 4): exact 8"));
}

#[test]
fn bounds_domain_errors_exit_2() {
    assert_eq!(code(&run(&["bounds", "--n", "0", "--r", "6", "--t", "3"])), 2);
    assert_eq!(code(&run(&["bounds", "--n", "5", "--r", "3", "--t", "3"])), 2);
    assert_eq!(code(&run(&["bounds", "--n", "5"])), 2);
}

#[test]
fn construct_and_verify_block_construction() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p41.json");
    let p = path.to_str().unwrap();
    let out = run(&[
        "construct", "--method", "prop41", "--n", "10", "--r", "10", "--t", "3", "--out", p, "--format", "json",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_no_floats(&v);
    assert_eq!(v["vertices"], 100);
    assert_eq!(v["min_degree"], 63);
    assert_eq!(v["certificate"]["properties"][1]["claim"], "min_degree:63");

    let out = run(&[
        "verify", p, "--claim", "kfree:4", "--claim", "min_degree:63", "--claim", "colorable:3", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["properties"].as_array().unwrap().iter().all(|p| p["verdict"] == true));

    let out = run(&["verify", p, "--claim", "min_degree:64"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAILS"));
}

#[test]
fn written_files_are_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    assert_eq!(
        code(&run(&["construct", "--method", "turan", "--n", "2", "--r", "5", "--t", "3", "--out", a.to_str().unwrap()])),
        0
    );
    let text = std::fs::read_to_string(&a).unwrap();
    let g = mpturan::io::read_json(&text).unwrap();
    assert_eq!(g.min_degree(), 6);
    let file = mpturan::io::GraphFile::parse(&text).unwrap();
    assert_eq!(file.to_canonical_string(), text);
    assert_eq!(file.metadata["method"], "turan");

    let d = dir.path().join("a.dimacs");
    let out = run(&[
        "construct", "--method", "turan", "--n", "2", "--r", "5", "--t", "3", "--format", "dimacs", "--out",
        d.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(mpturan::io::read_graph_file(&d).unwrap(), g);
}

#[test]
fn construct_rejects_inapplicable_parameters() {
    let out = run(&["construct", "--method", "prop42", "--n", "6", "--r", "10", "--t", "3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not applicable"));
    assert_eq!(code(&run(&["construct", "--method", "prop61", "--n", "4", "--r0", "2"])), 2);
    assert_eq!(code(&run(&["construct", "--method", "nope", "--n", "4", "--r", "5", "--t", "3"])), 2);
}

#[test]
fn composition_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p61.json");
    let p = path.to_str().unwrap();
    let out = run(&["construct", "--method", "prop61", "--n", "4", "--r0", "2", "--t0", "2", "--k", "2", "--out", p]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["verify", p, "--claim", "no_crossing_independent:4,max_degree:3"]);
    assert_eq!(code(&out), 0);
}

fn write_k5(dir: &Path) -> String {
    let path = dir.join("k5.dimacs");
    let mut text = String::from("p edge 5 10\n");
    for u in 1..=5 {
        for v in u + 1..=5 {
            text.push_str(&format!("e {u} {v}\n"));
        }
    }
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_reports_a_clique_witness() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_k5(dir.path());
    let out = run(&["verify", &p, "--claim", "kfree:5", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["properties"][0]["witness"]["kind"], "clique");
    assert_eq!(v["properties"][0]["witness"]["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(code(&run(&["verify", &p, "--claim", "bogus:5"])), 2);
    assert_eq!(code(&run(&["verify", "/nonexistent/file", "--claim", "kfree:5"])), 2);
}

#[test]
fn oracle_examples() {
    let v = json(&run(&["oracle", "--n", "1", "--r", "5", "--t", "3", "--format", "json"]));
    assert_no_floats(&v);
    assert_eq!(v["value"], 3);
    assert_eq!(v["mode"], "max-min-degree-kfree");
    assert_eq!(v["witness"]["parts"].as_array().unwrap().len(), 5);

    let out = run(&["oracle", "--n", "1", "--r", "7", "--t", "3", "--jobs", "2"]);
    assert!(stdout(&out).starts_with("f(1, 7, 4) = 4"));

    let v = json(&run(&["oracle", "--n", "1", "--r", "5", "--t", "3", "--mode", "delta", "--format", "json"]));
    assert_eq!(v["value"], 1);
}

#[test]
fn oracle_respects_the_size_cap() {
    assert_eq!(code(&run(&["oracle", "--n", "2", "--r", "6", "--t", "3"])), 3);
    assert_eq!(code(&run(&["oracle", "--n", "1", "--r", "5", "--t", "3", "--cap", "4"])), 3);
    assert_eq!(code(&run(&["oracle", "--n", "1", "--r", "5", "--t", "3", "--cap", "12"])), 2);
}

#[test]
fn oracle_seed_and_jobs_do_not_change_results() {
    let base = json(&run(&["oracle", "--n", "2", "--r", "4", "--t", "3", "--format", "json", "--sequential"]));
    for extra in [["--seed", "11"], ["--jobs", "3"]] {
        let mut args = vec!["oracle", "--n", "2", "--r", "4", "--t", "3", "--format", "json", "--symmetry"];
        args.extend(extra);
        let v = json(&run(&args));
        assert_eq!(v["value"], base["value"]);
    }
    let out = Command::new(env!("CARGO_BIN_EXE_mpturan"))
        .args(["oracle", "--n", "2", "--r", "4", "--t", "3", "--format", "json"])
        .env("MPTURAN_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(json(&out)["value"], base["value"]);
}

#[test]
fn table_examples() {
    let v = json(&run(&["table", "--t", "3", "--r", "5..13", "--n", "60", "--format", "json"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let exact = row["status"] == "exact";
        match row["r"].as_u64().unwrap() {
            7 | 13 => assert!(!exact),
            _ => assert!(exact, "{row}"),
        }
    }
    assert_eq!(rows[5]["exact"], 378);

    let v = json(&run(&["table", "--t", "3", "--r", "6..6", "--n", "7", "--format", "json"]));
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["exact"], 28);

    let v = json(&run(&["table", "--t", "4", "--r", "5..9", "--n", "12", "--format", "json"]));
    let best = |row: &Value| {
        row["upper_bounds"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|e| e["conditions_met"] == true && e["value"] == row["upper"])
            .map(|e| e["source"].as_str().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert!(best(&v[2]).contains(&"minus-one-residue".to_string()));
    assert!(best(&v[3]).contains(&"divisible".to_string()));
    assert_eq!(v[1]["status"], "bounded");

    assert_eq!(code(&run(&["table", "--t", "3", "--r", "9..5", "--n", "1"])), 2);
}
