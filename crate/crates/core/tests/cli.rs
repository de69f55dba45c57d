use std::process::{Command, Output};

use prehomog::cli::{BFunctionReport, ChainReport, ClassifyReport, EulerReport, MicrolocalReport, SymmetryReport};
use serde::{de::DeserializeOwned, Serialize};

fn prehomog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prehomog")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses emitted JSON and checks that re-serializing gives the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let parsed: T = serde_json::from_str(text).unwrap();
    let mut again = serde_json::to_string_pretty(&parsed).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    parsed
}

#[test]
fn bfunction_of_the_star_quiver() {
    let o = prehomog(&["bfunction", "--fixture", "star-2111"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("spectrum: -2/3, -1(x4), -4/3"), "{s}");
    assert!(s.contains("symmetric: yes"));
}

#[test]
fn classify_the_nonreduced_quiver() {
    let o = prehomog(&["classify", "--fixture", "dtilde3-22111"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("kind: prehomogeneous-determinant"));
    assert!(s.contains("reduced: no"));
}

#[test]
fn symmetry_of_a_reduced_discriminant() {
    let o = prehomog(&["symmetry", "--poly", "(s+2/3)(s+1)^5(s+4/3)(s+2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("symmetric: no"));
    let o = prehomog(&["symmetry", "--poly", "(s+1/2)(s+1)^2(s+3/2)"]);
    assert!(stdout(&o).contains("symmetric: yes"));
}

#[test]
fn failing_functional_equation_exits_with_two() {
    let o = prehomog(&["bfunction", "--fixture", "c2-g2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("functional equation does not hold"));
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(prehomog(&["bfunction", "--fixture", "no-such"]).status.code(), Some(1));
    assert_eq!(prehomog(&["bfunction", "--input", "/nonexistent.json"]).status.code(), Some(1));
    assert_eq!(prehomog(&["euler", "--fixture", "nc-3", "--point", "1,0"]).status.code(), Some(1));
    assert_ne!(prehomog(&["frobnicate"]).status.code(), Some(0));
}

#[test]
fn input_files() {
    let dir = std::env::temp_dir().join(format!("prehomog-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let gens = dir.join("xy.json");
    std::fs::write(&gens, r#"{"n":2,"variables":["x","y"],"generators":[[["1","0"],["0","0"]],[["0","0"],["0","1"]]]}"#).unwrap();
    let o = prehomog(&["bfunction", "--input", gens.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("spectrum: -1(x2)"));

    let quiver = dir.join("star.json");
    std::fs::write(
        &quiver,
        r#"{"vertices":["0","1","2","3"],"edges":[["1","0"],["2","0"],["3","0"]],"dimensions":{"0":2,"1":1,"2":1,"3":1}}"#,
    )
    .unwrap();
    let o = prehomog(&["classify", "--input", quiver.to_str().unwrap()]);
    assert!(stdout(&o).contains("kind: linear-free-divisor"));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"n":2,"variables":["x","y"],"generators":[[["1","0"],["0","0"]]]}"#).unwrap();
    assert_eq!(prehomog(&["classify", "--input", bad.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_for_several_fixtures() {
    let o = prehomog(&["bfunction", "--fixture", "nc-1", "--fixture", "nc-2", "--fixture", "gl2-cubics"]);
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    let header: Vec<&str> = lines[0].split(" | ").map(str::trim_end).collect();
    assert_eq!(header, ["n", "f", "reductive", "spectrum"]);
    assert!(lines[1].starts_with("1 | x "));
    assert!(lines[3].ends_with("-5/6, -1(x2), -7/6"));
}

#[test]
fn euler_and_microlocal() {
    let o = prehomog(&["euler", "--fixture", "nc-3", "--point", "1,0,0"]);
    let s = stdout(&o);
    assert!(s.contains("strong euler: yes"), "{s}");
    let o = prehomog(&["microlocal", "--fixture", "star-2111", "--point", "1,0,0,1,0,1", "--covector", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ord f^s = -s - 1/2"), "{}", stdout(&o));
    let o = prehomog(&["microlocal", "--fixture", "star-2111", "--point", "1,0,0,1,1,1"]);
    assert!(stdout(&o).contains("ord f^s = 0"), "{}", stdout(&o));
}

#[test]
fn json_reports_round_trip() {
    let o = prehomog(&["bfunction", "--fixture", "gl2-cubics", "--fixture", "c2-g2", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let reports: Vec<BFunctionReport> = round_trip(&stdout(&o));
    assert!(reports[0].result.functional_equation_held);
    assert!(!reports[1].result.functional_equation_held);

    let o = prehomog(&["classify", "--fixture", "b2", "--json"]);
    round_trip::<Vec<ClassifyReport>>(&stdout(&o));
    let o = prehomog(&["symmetry", "--poly", "(s+1)^2(s+2)", "--json"]);
    assert!(!round_trip::<SymmetryReport>(&stdout(&o)).symmetric);
    let o = prehomog(&["euler", "--fixture", "star-2111", "--point", "1,0,0,1,0,1", "--json"]);
    round_trip::<EulerReport>(&stdout(&o));
    let o = prehomog(&["microlocal", "--fixture", "star-2111", "--point", "0,0,0,0,0,0", "--covector", "1,2,3,4,5,6", "--json"]);
    let m: MicrolocalReport = round_trip(&stdout(&o));
    assert_eq!(serde_json::to_string(&m.order).unwrap(), r#"{"m":"6","half_mu":"3"}"#);
    let o = prehomog(&["chain", "s+1", "s+1", "(3s+2)(3s+3)(3s+4)", "s+1", "--json"]);
    round_trip::<ChainReport>(&stdout(&o));
    let o = prehomog(&["chain", "--json", "--", "-s-1", "s+2"]);
    assert_eq!(o.status.code(), Some(0));
    round_trip::<ChainReport>(&stdout(&o));
}

#[test]
fn fixed_seed_runs_are_identical() {
    for args in [
        &["classify", "--fixture", "gl2-cubics", "--seed", "7", "--trials", "3", "--json"][..],
        &["bfunction", "--fixture", "det2", "--json"][..],
    ] {
        let a = prehomog(args);
        let b = prehomog(args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn thread_cap_does_not_change_output() {
    let one = Command::new(env!("CARGO_BIN_EXE_prehomog"))
        .args(["bfunction", "--fixture", "gl2-cubics", "--json"])
        .env("PREHOMOG_THREADS", "1")
        .output()
        .unwrap();
    let many = prehomog(&["bfunction", "--fixture", "gl2-cubics", "--json"]);
    assert_eq!(one.stdout, many.stdout);
}
