use std::fs;

use loopcert::{run, EXIT_CONFIG, EXIT_IO, EXIT_OK};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("loopcert").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn certify_defaults_passes() {
    let r = cli(&["certify", "--surface", "genus2", "--alpha", "2", "--beta", "-3", "--max-len", "12"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["params"]["alpha"], "2");
    assert_eq!(v["params"]["beta"], "-3");
    assert_eq!(v["surface"], "genus2");
    assert_eq!(v["max_len"], 12);
    assert_eq!(v["kernel_witness"]["verdict"], "Identity");
    assert_eq!(v["nonconjugacy"]["word"], "a x");
    assert_eq!(v["nonconjugacy"]["trace_poly"], serde_json::json!(["9/2", "1"]));
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let rows = v["scc_results"].as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        assert_eq!(row["verdict"], "InfiniteOrder", "{row}");
        for key in ["word", "kind", "power", "trace_poly", "reason"] {
            assert!(row.get(key).is_some(), "{key} missing");
        }
    }
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn certify_punctured_torus() {
    let r = cli(&["certify", "--surface", "punctured-torus", "--max-len", "16"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["nonconjugacy"]["word"], "y");
    assert_eq!(v["nonconjugacy"]["trace_poly"], serde_json::json!(["-10/3"]));
    let kinds: Vec<&str> = v["scc_results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"boundary"));
    assert!(!kinds.contains(&"mixed"));
}

#[test]
fn dependent_parameters_rejected() {
    let r = cli(&["certify", "--alpha", "2", "--beta", "4"]);
    assert_eq!(r.code, EXIT_CONFIG);
    assert!(r.stderr.contains("alpha^-2 * beta^1"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn other_parameter_rejections() {
    for (a, b, needle) in [
        ("1", "-3", "excluded"),
        ("2", "3", "positive"),
        ("2", "0.5", "beta"),
        ("2", "1/0", "beta"),
    ] {
        let r = cli(&["kernel", "--alpha", a, "--beta", b]);
        assert_eq!(r.code, EXIT_CONFIG, "{a} {b}");
        assert!(r.stderr.contains(needle), "{a} {b}: {}", r.stderr);
    }
    let r = cli(&["kernel", "--surface", "sphere"]);
    assert_eq!(r.code, EXIT_CONFIG);
}

#[test]
fn reports_are_reproducible() {
    let args = ["certify", "--max-len", "8", "--no-timing"];
    let first = cli(&args);
    let second = cli(&args);
    assert_eq!(first.code, EXIT_OK);
    assert_eq!(first.stdout, second.stdout);
    assert!(json(&first)["timing_ms"].is_null());
}

#[test]
fn word_command() {
    let r = cli(&["word", "[[x,y],[x^2,y]]"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r);
    assert_eq!(v["verdict"], "Identity");
    assert_eq!(v["matrix"], serde_json::json!([[["1"], ["0"]], [["0"], ["1"]]]));

    let r = cli(&["word", "x^2 y"]);
    let v = json(&r);
    assert_eq!(v["verdict"], "InfiniteOrder");
    assert_eq!(v["reason"], "Hyperbolic");
    assert_eq!(v["trace_poly"], serde_json::json!(["-145/12"]));

    let r = cli(&["word", "a x", "--format", "pretty"]);
    assert!(r.stdout.contains("9/2 + t"), "{}", r.stdout);
    assert!(r.stdout.contains("NonConstantTrace"));

    let r = cli(&["word", "x X"]);
    assert_eq!(r.code, EXIT_CONFIG);
    assert!(r.stderr.contains("empty"));

    let r = cli(&["word", "x ^"]);
    assert_eq!(r.code, EXIT_CONFIG);

    let r = cli(&["word", "a", "--surface", "punctured-torus"]);
    assert_eq!(r.code, EXIT_CONFIG);
}

#[test]
fn enumerate_command() {
    let r = cli(&["enumerate", "--max-len", "3"]);
    assert_eq!(r.code, EXIT_OK);
    let lines: Vec<Value> = r
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|c| c["kind"] != "boundary"));

    let r = cli(&["enumerate", "--max-len", "4"]);
    assert!(r.stdout.contains(r#""canonical":"x y X Y","kind":"boundary""#), "{}", r.stdout);

    let r = cli(&["enumerate", "--max-len", "0"]);
    assert_eq!(r.code, EXIT_CONFIG);
    let r = cli(&["enumerate"]);
    assert_eq!(r.code, EXIT_CONFIG);

    let r = cli(&["enumerate", "--max-len", "2", "--format", "csv"]);
    assert_eq!(r.stdout, "canonical,kind,n,pattern\nx,generator,,\ny,generator,,\nx y,type3,1,1\n");
}

#[test]
fn lemma_command() {
    let r = cli(&["lemma", "--trials", "1000", "--max-l", "5", "--seed", "7"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r);
    assert_eq!(v["conforming"], 1000);
    assert_eq!(v["eligible"], 1000);

    let r = cli(&["lemma", "--trials", "1", "--max-l", "1"]);
    let v = json(&r);
    assert_eq!(v["reports"][0]["l"], 1);
    assert_eq!(v["reports"][0]["degrees"][3], 1);

    let r = cli(&["lemma", "--trials", "300", "--max-l", "3", "--allow-bad-hypotheses"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r);
    let excluded = v["excluded"].as_u64().unwrap();
    assert!(excluded > 0);
    assert_eq!(v["eligible"].as_u64().unwrap() + excluded, 300);
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["hypothesis_ok"] == false));

    let r = cli(&["lemma", "--surface", "punctured-torus"]);
    assert_eq!(r.code, EXIT_CONFIG);
}

#[test]
fn kernel_and_witness_commands() {
    for surface in ["genus2", "punctured-torus"] {
        let r = cli(&["kernel", "--surface", surface]);
        assert_eq!(r.code, EXIT_OK);
        let v = json(&r);
        assert_eq!(v["verdict"], "Identity");
        assert_eq!(v["abelianization"], serde_json::json!([0, 0]));
        assert!(v["free_length"].as_u64().unwrap() > 0);
    }
    let r = cli(&["witness", "--format", "csv"]);
    assert_eq!(r.stdout, "word,trace_poly,varies_with\na x,9/2;1,t\n");
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    fs::write(&path, "alpha = \"3\"\nbeta = \"-2\"\nsurface = \"punctured-torus\"\nmax_len = 5\n").unwrap();
    let p = path.to_str().unwrap();

    let v = json(&cli(&["certify", "--config", p]));
    assert_eq!(v["params"]["alpha"], "3");
    assert_eq!(v["surface"], "punctured-torus");
    assert_eq!(v["max_len"], 5);

    let v = json(&cli(&["certify", "--config", p, "--beta", "-5/2", "--max-len", "3"]));
    assert_eq!(v["params"]["alpha"], "3");
    assert_eq!(v["params"]["beta"], "-5/2");
    assert_eq!(v["max_len"], 3);

    fs::write(&path, "gamma = 1\n").unwrap();
    assert_eq!(cli(&["kernel", "--config", p]).code, EXIT_CONFIG);

    let missing = dir.path().join("missing.toml");
    assert_eq!(cli(&["kernel", "--config", missing.to_str().unwrap()]).code, EXIT_IO);
}

#[test]
fn out_path_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let r = cli(&["certify", "--max-len", "4", "--format", "csv", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.is_empty());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("word,kind,power,trace_poly,verdict,reason\n"));

    let bad = dir.path().join("no/such/dir/report.json");
    let r = cli(&["kernel", "--out", bad.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_IO);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&[]).code, EXIT_CONFIG);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_CONFIG);
    assert_eq!(cli(&["certify", "--max-len", "0"]).code, EXIT_CONFIG);
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("certify"));
}
