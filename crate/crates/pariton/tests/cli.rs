use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const PAIR: &str = "parity 1;\n0 0 0 0,1;\n1 1 1 0;\n";

fn pariton(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pariton"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn pariton");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pariton-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_from_stdin() {
    let out = pariton(&["solve", "-"], Some(PAIR));
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 0;\n1 0;\n");
}

#[test]
fn solve_with_stats_and_validation() {
    for algo in ["hpp", "rpp", "parys", "zlk"] {
        let out = pariton(&["solve", "--algo", algo, "--validate", "--stats", "-"], Some(PAIR));
        assert!(out.status.success(), "{algo}");
        let text = stdout(&out);
        let json: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(json["within_bound"], true);
    }
}

#[test]
fn trace_goes_to_stderr() {
    let out = pariton(&["solve", "--trace", "-"], Some(PAIR));
    assert!(out.status.success());
    assert!(!out.stderr.is_empty());
    assert_eq!(stdout(&out), "0 0;\n1 0;\n");
}

#[test]
fn gen_then_verify() {
    let path = scratch("random.gm");
    let p = path.to_str().unwrap();
    let out = pariton(&["gen", "random", "--n", "9", "--max-prio", "4", "--min-deg", "1", "--max-deg", "3", "--seed", "5", "-o", p], None);
    assert!(out.status.success());
    for against in ["zlk", "brute"] {
        let out = pariton(&["verify", "--against", against, p], None);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "agree on 9 positions\n");
    }
    let again = pariton(&["gen", "random", "--n", "9", "--max-prio", "4", "--min-deg", "1", "--max-deg", "3", "--seed", "5"], None);
    assert_eq!(stdout(&again), fs::read_to_string(&path).unwrap());
}

#[test]
fn family_output() {
    let out = pariton(&["gen", "family", "--name", "ladder", "--k", "1"], None);
    assert_eq!(stdout(&out), "parity 1;\n0 0 0 1;\n1 1 1 0;\n");
    let bad = pariton(&["gen", "family", "--name", "star", "--k", "1"], None);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn bench_appends_rows() {
    let game = scratch("bench.gm");
    fs::write(&game, PAIR).unwrap();
    let csv = scratch("bench.csv");
    let _ = fs::remove_file(&csv);
    let args = ["bench", "--algos", "hpp,zlk", "--reference", "zlk", "--timeout", "5", "--out", csv.to_str().unwrap(), game.to_str().unwrap()];
    assert!(pariton(&args, None).status.success());
    assert!(pariton(&args, None).status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "game,algo,n,priorities,time_ms,timed_out,agreed");
    assert!(lines[1].contains(",hpp,2,2,") && lines[1].ends_with(",false,true"));
    assert_eq!(lines.iter().filter(|l| l.starts_with("game,")).count(), 1);
}

#[test]
fn malformed_input_exits_with_two() {
    let out = pariton(&["solve", "-"], Some("parity 1;\n0 0 0 5;\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
