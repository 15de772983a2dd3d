mod common;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use induced_menger::figures::{fixtures, FIG2, FIG5};
use induced_menger::io::{parse, GraphDoc, MovesDoc, PathSystemDoc};
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_induced-menger"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const SQUARE: &str = r#"{"n":4,"edges":[[0,1],[1,3],[0,2],[2,3]],"X":[0],"Y":[3]}"#;
const LADDER: &str = r#"{"n":4,"edges":[[0,1],[2,3],[0,2]],"X":[0,2],"Y":[1,3],"paths":[[0,1],[2,3]]}"#;

#[test]
fn menger_paths_and_separator() {
    let out = run(&["menger", "-k", "1"], SQUARE);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["paths"].as_array().unwrap().len(), 1);
    let out = run(&["menger", "-k", "2", "--min-length"], SQUARE);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["separator"], serde_json::json!([0]));
}

#[test]
fn malformed_input_exits_2() {
    let out = run(&["menger", "-k", "1"], "{\"n\": 3,");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot parse"));
    let out = run(&["menger", "-k", "1"], r#"{"n":2,"edges":[[0,1]]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["no-such-command"], "").status.code(), Some(2));
}

#[test]
fn help_documents_the_formats() {
    let out = run(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for word in ["\"edges\"", "\"Q\"", "\"moves\"", "Exit codes"] {
        assert!(text.contains(word), "{word}");
    }
}

#[test]
fn strong_colour_outside_edges_of_fig2() {
    let out = run(&["strong-color", "--outside-only"], FIG2);
    assert_eq!(out.status.code(), Some(0));
    let classes = json(&out);
    let total: usize = classes.as_array().unwrap().iter().map(|c| c.as_array().unwrap().len()).sum();
    assert_eq!(total, 7);
    let out = run(&["strong-color"], SQUARE);
    assert_eq!(json(&out).as_array().unwrap().len(), 4);
}

#[test]
fn extract_on_a_ladder() {
    let out = run(&["extract", "-k", "1"], LADDER);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["paths"].as_array().unwrap().len(), 1);
    assert!(v["trace"].is_array());
    let out = run(&["extract", "-k", "1", "--minorfree", "5"], LADDER);
    assert_eq!(json(&out)["exact"], Value::Bool(true));
    let out = run(&["extract", "-k", "1", "--subcubic"], LADDER);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pathsys_replay_decompose_normalize() {
    let moves = r#"{"moves":[{"pair":[1,2]},{"cycle":[2,3,4]}]}"#;
    let out = run(&["pathsys", "replay"], moves);
    assert_eq!(out.status.code(), Some(0));
    let ps_text = String::from_utf8(out.stdout).unwrap();
    let doc: PathSystemDoc = parse(&ps_text, "system").unwrap();
    assert_eq!(doc.q.len(), 5);
    let out = run(&["pathsys", "decompose"], &ps_text);
    let back: MovesDoc = parse(std::str::from_utf8(&out.stdout).unwrap(), "moves").unwrap();
    assert_eq!(back.moves.len(), 2);

    let out = run(&["pathsys", "random", "--seed", "4", "--instance", "--subdivisions", "3"], "");
    let inst_text = String::from_utf8(out.stdout).unwrap();
    let out = run(&["pathsys", "normalize"], &inst_text);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let sys: PathSystemDoc = parse(std::str::from_utf8(&out.stdout).unwrap(), "system").unwrap();
    sys.system().unwrap();
}

#[test]
fn random_moves_depend_only_on_the_seed() {
    let a = run(&["pathsys", "random", "--seed", "11"], "");
    let b = run(&["pathsys", "random", "--seed", "11"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve5_output_is_validated() {
    let out = run(&["pathsys", "random", "--seed", "9", "--instance", "--max-len", "8"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    let out = run(&["solve5"], &text);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let paths: Vec<Vec<usize>> = serde_json::from_value(json(&out)["paths"].clone()).unwrap();
    let doc: GraphDoc = parse(&text, "graph").unwrap();
    common::check_pairwise_nonadjacent(&doc.instance().unwrap(), &paths).unwrap();
}

#[test]
fn solve5_refuses_fig5() {
    // the X vertices carry two outside edges each
    let out = run(&["solve5"], FIG5);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_queries() {
    let out = run(&["oracle", "--what", "nonadjacent"], FIG5);
    assert_eq!(json(&out)["count"], 1);
    let out = run(&["oracle", "--what", "disjoint"], FIG5);
    assert_eq!(json(&out)["count"], 5);
    let out = run(&["oracle", "--what", "separator"], FIG5);
    assert_eq!(json(&out)["count"], 5);
    let out = run(&["oracle", "--what", "nonadjacent", "--budget-vertices", "5"], FIG5);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_figures_passes() {
    let out = run(&["check-figures"], "");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["pass"], Value::Bool(true));
}

#[test]
fn verify_claim_pairs_only_with_checkpoint() {
    let dir: PathBuf = std::env::temp_dir().join(format!("im-cli-{}", std::process::id()));
    let out_file = dir.join("cert.json");
    std::fs::create_dir_all(&dir).unwrap();
    let d = dir.to_str().unwrap();
    let out = run(
        &["verify-claim", "--pairs-only", "--threads", "2", "--checkpoint", d, "--output", out_file.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(cert["empty_collection_reached"], Value::Bool(false));
    assert_eq!(cert["move_count"], 10);
    assert!(cert["fingerprint"].as_str().unwrap().len() == 64);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixtures_load_through_files() {
    let dir = std::env::temp_dir().join(format!("im-fx-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for f in fixtures().unwrap() {
        let p = dir.join(format!("{}.json", f.name));
        std::fs::write(&p, f.text).unwrap();
        let out = run(&["oracle", "--what", "disjoint", "--input", p.to_str().unwrap()], "");
        assert_eq!(json(&out)["count"], f.paths.len(), "{}", f.name);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
