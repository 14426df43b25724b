//! Exit codes and file handling of the binary: 0 on success, 1 when a
//! verification fails, 2 on bad input.

use std::process::Output;

fn topo(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_topo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn homology_text_output() {
    let out = topo(&["homology", "--builtin", "torus"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("H_0 = Z\n"), "{}", text);
    assert!(text.contains("H_1 = Z^2\n"), "{}", text);
    assert!(text.contains("H_2 = Z\n"), "{}", text);
}

#[test]
fn pair_file_gives_relative_homology() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("disk.cx");
    std::fs::write(&p, "# a disk relative to its rim\n0 1 2\n[subcomplex]\n0 1\n1 2\n0 2\n")
        .unwrap();
    let out = topo(&["homology", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("H_2 = Z\n"), "{}", text);
    assert!(text.contains("H_1 = 0\n"), "{}", text);
}

#[test]
fn orient_reports_nonorientable_without_failing() {
    let out = topo(&["orient", "--builtin", "klein"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("orientable: no"), "{}", text);
    assert!(text.contains("top homology over F2: F2"), "{}", text);
}

#[test]
fn failed_verdicts_exit_one() {
    let strict = topo(&["catalog", "D4", "--strict-paper"]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(stdout(&strict).contains("FAIL"));

    let group = topo(&["group-predict", "T1xE8", "--strict-paper"]);
    assert_eq!(group.status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let badmap = dir.path().join("bad.map");
    std::fs::write(&badmap, "0 -> 9\n").unwrap();
    let one_map = dir.path().join("rot.map");
    std::fs::write(&one_map, (0..7).map(|i| format!("{} -> {}\n", i, (i + 1) % 7)).collect::<String>())
        .unwrap();
    let missing = dir.path().join("missing.cx");

    let cases: Vec<Vec<&str>> = vec![
        vec!["homology", "--builtin", "nosuch"],
        vec!["homology"],
        vec!["homology", "--builtin", "torus", "--coeff", "F6"],
        vec!["homology", "--builtin", "torus", "--rel", missing.to_str().unwrap()],
        vec!["ring", "--builtin", "torus", "--coeff", "Z"],
        vec!["subdivide", "--builtin", "sphere:1", "--times", "9"],
        vec!["catalog", "E9"],
        vec!["group-predict", "X1"],
        vec!["duality", "--builtin", "rp2"],
        vec!["orient", "--builtin", "moebius"],
        vec!["degree", "--builtin", "torus", "--map", badmap.to_str().unwrap()],
        vec!["coincidence", "--builtin", "torus", "--map", one_map.to_str().unwrap()],
        vec!["frobnicate"],
    ];
    for args in &cases {
        let out = topo(args);
        assert_eq!(out.status.code(), Some(2), "{:?}\n{}", args, stdout(&out));
        assert!(!out.stderr.is_empty(), "{:?} said nothing on stderr", args);
    }
}
