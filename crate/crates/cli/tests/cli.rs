use std::path::PathBuf;
use std::process::{Command, Output};

use pathcat_core::generators::{hypercube, necklace, swiss_flag};
use pathcat_core::json::parse_complex;
use pathcat_core::Complex;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn pathcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathcat")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn checked_in_fixtures_match_generators() {
    let load = |name| parse_complex(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
    assert_eq!(load("necklace20.json"), Complex::Simplicial(necklace(20)));
    assert_eq!(load("swiss-flag.json"), Complex::Cubical(swiss_flag()));
    assert_eq!(load("cube2.json"), Complex::Cubical(hypercube(2)));
}

#[test]
fn necklace_count_only() {
    let out = pathcat(&["compute", &fixture("necklace20.json"), "--from", "0", "--to", "40", "--count-only"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"count":1048576}"#);
}

#[test]
fn swiss_flag_has_two_morphisms() {
    let v = json(&pathcat(&["compute", &fixture("swiss-flag.json"), "--from", "init", "--to", "term"]));
    let hom = &v["homs"][0];
    assert_eq!(hom["count"], 2);
    assert_eq!(hom["representatives"].as_array().unwrap().len(), 2);
    assert_eq!(hom["from"], serde_json::json!([]));

    for pipeline in ["corner", "corner,sk2,interval,source-sink", "corner,frontier"] {
        let v = json(&pathcat(&[
            "compute",
            &fixture("swiss-flag.json"),
            "--from",
            "init",
            "--to",
            "term",
            "--pipeline",
            pipeline,
            "--count-only",
        ]));
        assert_eq!(v["count"], 2, "{pipeline}");
    }
}

#[test]
fn cube_homs_are_trivial() {
    let v = json(&pathcat(&["compute", &fixture("cube2.json"), "--all"]));
    let homs = v["homs"].as_array().unwrap();
    assert_eq!(homs.len(), 9);
    assert!(homs.iter().all(|h| h["count"] == 1));
    assert_eq!(v["objects"].as_array().unwrap().len(), 4);
}

#[test]
fn gen_families() {
    let v = json(&pathcat(&["gen", "necklace", "3"]));
    assert_eq!(v["vertices"], serde_json::json!([0, 1, 2, 3, 4, 5, 6]));
    assert_eq!(v["maximal_simplices"].as_array().unwrap().len(), 9);

    let v = json(&pathcat(&["gen", "grid", "2", "2"]));
    assert_eq!(v["ambient"], 4);
    assert_eq!(v["maximal_cells"].as_array().unwrap().len(), 4);

    let v = json(&pathcat(&["gen", "grid", "2", "2", "--holes", "0:0", "--missing-edges", "1:1:h"]));
    // one square left, plus seven edges outside it
    assert_eq!(v["maximal_cells"].as_array().unwrap().len(), 8);

    assert_eq!(pathcat(&["gen", "grid", "2", "2", "--missing-edges", "1:1:x"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = pathcat(&["verify", &fixture("swiss-flag.json"), "--pass", "corner", "--protect", "init,term"]);
    assert_eq!(json(&out)["ok"], true);

    let out = pathcat(&["verify", "--random", "200", "--seed", "7", "--pass", "source-sink"]);
    let v = json(&out);
    assert_eq!(v["passed"], 200);
    assert!(stderr(&out).contains("200/200 OK"));

    let out = pathcat(&[
        "verify",
        &fixture("cube2.json"),
        "--pass",
        "frontier",
        "--cut",
        "0",
        "--from",
        "{1}",
        "--to",
        "{1,2}",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cut does not separate"));
}

#[test]
fn verify_every_pass_on_random_input() {
    for pass in ["interval", "corner", "refine", "frontier", "sk2", "levels"] {
        let v = json(&pathcat(&["verify", "--random", "5", "--seed", "3", "--pass", pass]));
        assert_eq!(v["passed"], 5, "{pass}");
    }
}

#[test]
fn refine_with_alpha_file() {
    let alpha = fixture("alpha-2-3.json");
    let v = json(&pathcat(&["verify", &fixture("cube2.json"), "--pass", "refine", "--alpha", &alpha]));
    assert_eq!(v["ok"], true);
    let v = json(&pathcat(&[
        "compute",
        &fixture("cube2.json"),
        "--from",
        "init",
        "--to",
        "term",
        "--pipeline",
        "refine",
        "--alpha",
        &alpha,
    ]));
    assert_eq!(v["homs"][0]["count"], 1);
    assert_eq!(v["homs"][0]["representatives"][0].as_array().unwrap().last().unwrap(), &serde_json::json!([1, 2, 3]));
}

#[test]
fn source_sink_empties_unreachable_pair() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("zigzag.json");
    // edges 1→0, 1→2, 2→4, 3→4 relabelled so that each edge increases
    std::fs::write(
        &file,
        r#"{"type":"simplicial","vertices":[0,1,2,3,4],"maximal_simplices":[[0,1],[0,2],[2,4],[3,4]]}"#,
    )
    .unwrap();
    let f = file.to_str().unwrap();
    let v = json(&pathcat(&["compute", f, "--from", "1", "--to", "3", "--pipeline", "source-sink", "--report"]));
    assert_eq!(v["homs"][0]["count"], 0);
    assert_eq!(v["report"][0]["output_size"], 0);

    let v = json(&pathcat(&["reduce", f, "--from", "1", "--to", "3", "--pipeline", "source-sink"]));
    assert_eq!(v["vertices"], serde_json::json!([]));
}

#[test]
fn reduce_emits_a_parseable_complex() {
    let out = pathcat(&["reduce", &fixture("swiss-flag.json"), "--pipeline", "corner", "--protect", "init,term"]);
    assert!(out.status.success());
    let Complex::Cubical(k) = parse_complex(std::str::from_utf8(&out.stdout).unwrap()).unwrap() else {
        panic!("expected a cubical complex")
    };
    assert!(k.vertices().len() < swiss_flag().vertices().len());
}

#[test]
fn bench_counts() {
    let out = pathcat(&["bench", "necklace", "1..6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance,pipeline,count,wall_ms"));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let k: u32 = f[0].trim_start_matches("necklace-").parse().unwrap();
        assert_eq!(f[2].parse::<u64>().unwrap(), 1 << k);
    }

    let text = String::from_utf8(pathcat(&["bench", "grid", "3", "3"]).stdout).unwrap();
    let counts: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(counts.len(), 3);
    assert!(counts.iter().all(|&c| c == counts[0]));
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", &fixture("swiss-flag.json"), "--all"];
    assert_eq!(pathcat(&args).stdout, pathcat(&args).stdout);
    let args = ["verify", "--random", "20", "--seed", "11", "--pass", "interval"];
    assert_eq!(pathcat(&args).stdout, pathcat(&args).stdout);
}

#[test]
fn invalid_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"type":"cubical","ambient":2,"maximal_cells":[{"A":[1,1],"B":[1]}]}"#).unwrap();
    let out = pathcat(&["compute", bad.to_str().unwrap(), "--all"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("duplicate"));

    let out = pathcat(&["compute", &fixture("cube2.json"), "--from", "{3}", "--to", "term"]);
    assert_eq!(out.status.code(), Some(2));

    let out = pathcat(&["compute", &fixture("necklace20.json"), "--all", "--pipeline", "corner"]);
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(pathcat(&["frobnicate"]).status.code(), Some(2));
}
