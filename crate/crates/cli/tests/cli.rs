use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn ytab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ytab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ytab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn evacuation_of_a_canonical_tableau() {
    let can = file("can.txt", "lambda: 2 1\n1 1\n2\n");
    let o = ytab(&["apply", "xi", "--in", path(&can)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lambda: 2 1\n1 2\n2\n");
}

#[test]
fn rsk_of_the_identity_gives_single_rows() {
    let id = file("id.txt", "matrix: 2\n1 0\n0 1\n");
    let o = ytab(&["apply", "rsk", "--in", path(&id)]);
    assert_eq!(stdout(&o), "lambda: 2\n1 2\n\nlambda: 2\n1 2\n");
    let o = ytab(&["apply", "phi", "--in", path(&id), "--format", "json"]);
    assert_eq!(stdout(&o), "{\"lambda\":[2],\"rows\":[[1,2]]}\n".repeat(2));
}

#[test]
fn pair_maps_take_two_files() {
    let b = file("b.txt", "lambda: 1\n1\n");
    let a = file("a.txt", "lambda: 2\nmu: 1\n. 1\n");
    let o = ytab(&["apply", "zeta", "--in", path(&b), "--in2", path(&a)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "lambda: 1\n1\n\nlambda: 2\nmu: 1\n. 1\n");
}

#[test]
fn exit_codes() {
    let bad = file("bad.txt", "lambda: 2 1\n1 x\n2\n");
    let o = ytab(&["apply", "xi", "--in", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 3"), "{}", stderr(&o));

    let skew = file("skew.txt", "lambda: 2\nmu: 1\n. 1\n");
    let o = ytab(&["apply", "xiN", "--in", path(&skew)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("SkewInputNotSupported"));

    let not_lr = file("notlr.txt", "lambda: 2\n2 2\n");
    let o = ytab(&["apply", "rho1", "--in", path(&not_lr)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("NotLittlewoodRichardson"));

    let o = ytab(&["apply", "xi", "--in", "/nonexistent/ytab"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_reports_the_cost() {
    let can = file("can2.txt", "lambda: 2 1\n1 1\n2\n");
    let o = ytab(&["reduce", "chi", "--via", "rho1", "--in", path(&can)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(report["base_calls"], 36);
    assert_eq!(report["agrees"], true);
    let direct = ytab(&["apply", "chi", "--in", path(&can)]);
    assert_eq!(stdout(&o), stdout(&direct));
}

#[test]
fn count_and_enumerate() {
    let o = ytab(&["count", "lr", "--lambda", "3 2 1", "--mu", "2 1", "--nu", "2,1"]);
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    for key in ["lr", "lr_swapped", "cf", "cf_star"] {
        assert_eq!(r[key], 2, "{key}");
    }
    let o = ytab(&["enumerate", "--shape", "2 1", "--max-value", "3", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = ytab(&["enumerate", "--shape", "3 2 1/2 1", "--max-value", "3", "--lr", "2 1"]);
    assert_eq!(stdout(&o).matches("lambda:").count(), 2);
}

#[test]
fn verify_writes_records_and_fails_loudly() {
    let out = std::env::temp_dir().join(format!("ytab-verify-{}.jsonl", std::process::id()));
    let o = ytab(&["verify", "--max-size", "3", "--group", "bk", "--group", "oracles", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body = fs::read_to_string(&out).unwrap();
    for line in body.lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["failures"], 0);
    }
    assert!(body.lines().count() >= 5);

    let o = ytab(&["verify", "--max-size", "0", "--max-length", "0", "--max-value", "0", "--group", "bk"]);
    assert_eq!(o.status.code(), Some(0));

    let o = ytab(&["verify", "--group", "nonsense"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn conjecture_and_graph() {
    let o = ytab(&["conjecture", "1", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(r["checked"].as_u64().unwrap() > 0);
    assert_eq!(r["mismatches"].as_array().unwrap().len(), 0);

    let o = ytab(&["graph", "--emit", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"chi\" -> \"xiN\""));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn bench_small() {
    let o = ytab(&["bench", "xiN", "--k", "1,2,4", "--repetitions", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = ytab(&["bench", "xiN", "--via", "phi", "--k", "2", "--repetitions", "1"]);
    let row: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(row["base_calls"], 1);
}
