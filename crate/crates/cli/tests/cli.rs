use std::io::Write;
use std::process::{Command, Output, Stdio};

use rectiturn::{GridPolygon, PolygonJson};

const EXAMPLE: &str = "LLRRLLRLLRLRLLRLRLLR";
const GENERAL: &str = "LLLLRLRLLRRLRRLLLLRRLLRR";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rectiturn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("rectiturn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate"], "LLRR LL # comment\nLL\n");
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "valid sequence: n=8 L=6 R=2\n");
    let bad = run(&["validate", "--seq", "LLRL"], "");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("invalid sequence: unbalanced"));
    let junk = run(&["validate", "--seq", "LLXL", "--format", "json"], "");
    assert_eq!(junk.status.code(), Some(1));
    assert!(stdout(&junk).contains(r#""valid":false"#));
}

#[test]
fn classify_reports_class() {
    let o = run(&["classify", "--seq", EXAMPLE], "");
    assert!(stdout(&o).starts_with("x-monotone n=20"));
    let o = run(&["classify", "--seq", "LLRLLLRL", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"], "xy-monotone");
    assert_eq!(v["stairs"], serde_json::json!([0, 1, 0, 1]));
    let o = run(&["classify", "--seq", GENERAL], "");
    assert!(stdout(&o).starts_with("general"));
}

#[test]
fn solve_worked_example() {
    for (obj, value) in [("area", 10), ("perimeter", 20), ("bbox", 20)] {
        let o = run(&["solve", "-o", obj, "--format", "json"], EXAMPLE);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["value"], value, "{obj}");
        let pj: PolygonJson = serde_json::from_slice(&o.stdout).unwrap();
        let (s, _) = pj.into_polygon().unwrap();
        assert_eq!(s.to_string(), EXAMPLE);
    }
}

#[test]
fn solve_refuses_general_sequences() {
    let o = run(&["solve", "--seq", GENERAL, "-o", "area"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("NP-hard") && err.contains("rectiturn oracle"));
    let bad = run(&["solve", "--seq", "LLL", "-o", "area"], "");
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn oracle_handles_general_sequences() {
    let o = run(
        &[
            "oracle",
            "--seq",
            "LLLLRLRLLRRL",
            "-o",
            "area",
            "--format",
            "json",
        ],
        "",
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"], true);
    let o = run(&["oracle", "--delta", "8"], "");
    assert_eq!(stdout(&o), "n=8 delta=4 Delta=6\n");
    let too_long = run(&["oracle", "--seq", GENERAL, "--max-n", "16"], "");
    assert_eq!(too_long.status.code(), Some(1));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["solve", "-o", "bbox"][..],
        &["solve", "-o", "area", "--format", "svg"],
        &["solve", "-o", "perimeter", "--format", "json"],
    ] {
        let a = run(args, EXAMPLE);
        let b = run(args, EXAMPLE);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn render_round_trip() {
    let o = run(&["solve", "-o", "area", "--format", "json"], EXAMPLE);
    let pj: PolygonJson = serde_json::from_slice(&o.stdout).unwrap();
    let (_, p) = pj.clone().into_polygon().unwrap();
    let path = tmp_file("example.json", &serde_json::to_string(&pj).unwrap());
    let svg = run(&["render", path.to_str().unwrap()], "");
    assert_eq!(svg.status.code(), Some(0));
    let svg = stdout(&svg);
    assert!(svg.contains("<rect"));
    assert_eq!(svg.matches("<path").count(), 1);
    let back = GridPolygon::from_svg(&svg, 10).unwrap();
    assert_eq!(back, p.normalized());
    let plain = stdout(&run(
        &["render", "--no-bbox"],
        &serde_json::to_string(&pj).unwrap(),
    ));
    assert!(!plain.contains("<rect"));
}

#[test]
fn render_rejects_mismatched_sequence() {
    let bad = r#"{"sequence":"LLLL","vertices":[[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]]}"#;
    assert_eq!(run(&["render"], bad).status.code(), Some(1));
    assert_eq!(run(&["validate"], bad).status.code(), Some(1));
}

#[test]
fn gadget_flags() {
    let inst = tmp_file("inst.json", r#"{"m":2,"B":10,"A":[3,3,3,3,4,4]}"#);
    let inst = inst.to_str().unwrap();
    let o = run(&["gadget", inst, "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["rho"].as_u64(), v["W"].as_u64(), v["H"].as_u64()),
        (Some(80), Some(704), Some(1052))
    );
    let s = v["sequence"].as_str().unwrap().to_string();

    let text = stdout(&run(&["gadget", inst], ""));
    assert_eq!(rectiturn::parse_sequence(&text).unwrap().to_string(), s);

    let w = run(&["gadget", inst, "--wrap", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_slice(&w.stdout).unwrap();
    assert!(v["sequence"].as_str().unwrap().starts_with(&s));
    assert_eq!(v["wrapped"], true);

    let o = run(
        &[
            "gadget",
            inst,
            "--witness",
            "--partition",
            "[[0,1,4],[2,3,5]]",
            "--format",
            "json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let pj: PolygonJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(pj.sequence, s);
    let (_, p) = pj.into_polygon().unwrap();
    assert!(rectiturn::hardness::verify_fit(&p, 704, 1052));

    let wrong = run(
        &[
            "gadget",
            inst,
            "--witness",
            "--partition",
            "[[0,1,2],[3,4,5]]",
        ],
        "",
    );
    assert_eq!(wrong.status.code(), Some(1));
    let lone = run(&["gadget", inst, "--witness"], "");
    assert_eq!(lone.status.code(), Some(1));
    let no_inst = run(&["gadget"], r#"{"m":1,"B":10,"A":[3,3,3]}"#);
    assert_eq!(no_inst.status.code(), Some(1));
}
