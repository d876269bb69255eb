use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakorder")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fails(args: &[&str], code: i32) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn sn_join() {
    assert_eq!(ok(&["sn", "join", "213", "132"]), "321\n");
    assert_eq!(ok(&["sn", "meet", "213", "132"]), "123\n");
    assert_eq!(ok(&["sn", "join", "--n", "3"]), "123\n");
}

#[test]
fn sn_json_lists_inversions() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["sn", "join", "213", "132", "--format", "json"])).unwrap();
    assert_eq!(v["permutation"], "321");
    assert_eq!(v["inversions"], serde_json::json!([[1, 2], [1, 3], [2, 3]]));
}

#[test]
fn sn_arcs_walls_and_flips() {
    assert_eq!(ok(&["sn", "arcs", "25143"]), "lower: (1,5|2|3 4) (3,4||)\nupper: (2,5||3 4) (1,4|2|3)\n");
    assert_eq!(ok(&["sn", "walls", "25143"]), "lower: (1,5) (3,4)\nupper: (2,5) (1,4)\n");
    assert_eq!(ok(&["sn", "flip", "1423", "2,4"]), "1243\n");
    assert!(fails(&["sn", "flip", "1423", "1,3"], 1).contains("not a wall"));
    assert_eq!(ok(&["sn", "check", "--n", "5", "(1,5|2|3 4)", "(3,4||)"]), "25143\n");
    assert_eq!(ok(&["sn", "cjr", "2341"]), "(1,4|2 3|) 2341\n");
    assert_eq!(ok(&["sn", "normalize", "--n", "3", "1,2", "1,3"]), "231\n");
    assert!(fails(&["sn", "normalize", "--n", "3", "1,3"], 1).contains("not biclosed"));
}

#[test]
fn sn_congruence_classes() {
    let out = ok(&["sn", "quotient", "--n", "3", "(1,2||)", "(2,3||)"]);
    assert!(out.lines().any(|l| l == "132: 132 312"), "{out}");
}

#[test]
fn tito_examples() {
    assert_eq!(ok(&["tito", "join", "--n", "2", "[2,1]", "[0,3]"]), "[~2,1]\n");
    assert_eq!(ok(&["tito", "leq", "--n", "2", "[2,1]", "[0,3]"]), "false\n");
    assert_eq!(ok(&["tito", "flip", "--n", "2", "[~1][~2]", "<1,3>"]), "[1][~2]\n");
    assert_eq!(ok(&["tito", "walls", "--n", "2", "[1][2]"]), "\n");
    assert_eq!(ok(&["tito", "normalize", "--n", "4", "[1,0,3,2]"]), "[0,3,2,5]\n");
    assert_eq!(ok(&["tito", "arcs", "--n", "2", "[2][~1]"]), "<1,3|2|>\n");
}

#[test]
fn tito_cjr_needs_wide_generation() {
    let err = fails(&["tito", "cjr", "--n", "2", "[1][2]"], 1);
    assert!(err.contains("not widely generated"), "{err}");
}

#[test]
fn tito_cjr_round_trip() {
    let arcs = ok(&["tito", "cjr", "--n", "2", "[~2,1]"]);
    let mut args = vec!["tito", "check", "--n", "2"];
    args.extend(arcs.split_whitespace());
    assert_eq!(ok(&args), "[~2,1]\n");
}

#[test]
fn tot_and_dyer() {
    assert_eq!(ok(&["tot", "join", "1:2,1", "2:3,2"]), "1:3,2,1\n");
    assert_eq!(ok(&["tot", "walls", "--", "-1:0,-1"]), "(-1,0)\n");
    assert!(ok(&["tot", "quotient", "1", "3"]).starts_with("6 elements, 6 covers\n"));
    assert_eq!(ok(&["dyer", "normalize", "--n", "2", "[~1][~2]"]), "dyer:[1][2]\n");
    assert_eq!(ok(&["dyer", "enumerate", "--n", "2"]), "{}\n{(1,2)}\n");
}

#[test]
fn usage_errors_exit_2() {
    fails(&["sn", "frobnicate"], 2);
    fails(&["sn", "join", "21x"], 2);
    fails(&["tito", "join", "[1,2]"], 2);
    fails(&["sn", "join", "213", "--format", "dot"], 2);
    fails(&["dyer", "flip", "--n", "2"], 2);
}

#[test]
fn renders_are_deterministic() {
    let a = ok(&["render", "arcs", "(1,5|2|3 4)", "(3,4||)"]);
    assert!(a.starts_with("<svg"));
    assert_eq!(a, ok(&["render", "arcs", "(1,5|2|3 4)", "(3,4||)"]));
    let c = ok(&["render", "arcs", "--mode", "circle", "--n", "4", "<2,7|5 6|3 4>"]);
    assert!(c.starts_with("<svg") && c.contains("<path"));
    let d = ok(&["render", "enumerate", "--n", "3"]);
    assert_eq!(d.matches(" -> ").count(), 6);
}

#[test]
fn lab_reads_json_posets() {
    let dir = std::env::temp_dir().join(format!("weakorder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let s3 = dir.join("s3.json");
    let out = ok(&["sn", "enumerate", "--n", "3", "--format", "json", "--out", s3.to_str().unwrap()]);
    assert!(out.is_empty());
    let report = ok(&["lab", "check", s3.to_str().unwrap()]);
    assert!(report.contains("join-semidistributive: true"), "{report}");
    let q = ok(&["lab", "quotient", s3.to_str().unwrap(), "231=213"]);
    assert!(q.starts_with("5 elements"), "{q}");

    let m3 = dir.join("m3.json");
    std::fs::write(&m3, r#"{"elements":["0","a","b","c","1"],"covers":[[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]]}"#)
        .unwrap();
    assert!(ok(&["lab", "check", m3.to_str().unwrap()]).contains("meet-semidistributive: false"));
    let cyclic = dir.join("cyclic.json");
    std::fs::write(&cyclic, r#"{"elements":["a","b"],"covers":[[0,1],[1,0]]}"#).unwrap();
    fails(&["lab", "check", cyclic.to_str().unwrap()], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
