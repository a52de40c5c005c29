use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn mutvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutvis"))
        .args(args)
        .env("MV_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn solve_cycle_of_four() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let o = mutvis(&["solve", &g]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("mu = 3"), "{}", stdout(&o));
}

#[test]
fn generated_witnesses_verify() {
    let dir = TempDir::new().unwrap();
    let kinds: &[&[&str]] = &[
        &["path", "7"],
        &["cycle", "9"],
        &["grid", "5", "8"],
        &["grid", "2", "7"],
        &["kbip", "3", "4"],
        &["star", "5"],
        &["tree-random", "14", "3"],
        &["block-random", "15", "4"],
    ];
    for kind in kinds {
        let g = dir.path().join("g.txt");
        let w = dir.path().join("w.txt");
        let mut args = vec!["gen"];
        args.extend_from_slice(kind);
        args.extend([
            "--witness",
            "-o",
            path_str(&g),
            "--witness-out",
            path_str(&w),
        ]);
        assert_eq!(code(&mutvis(&args)), 0, "{kind:?}");
        let text = std::fs::read_to_string(&g).unwrap();
        assert!(
            text.lines().last().unwrap().starts_with("# witness:"),
            "{kind:?}"
        );
        let o = mutvis(&["verify", path_str(&g), path_str(&w)]);
        assert_eq!(code(&o), 0, "{kind:?}: {}", stdout(&o));
    }
}

#[test]
fn verify_reports_blocked_pair_and_paths() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p3.txt", "3 2\n0 1\n1 2\n");
    let bad = write(&dir, "bad.txt", "0 1 2\n");
    let o = mutvis(&["verify", &g, &bad, "--explain"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("blocked pair: 0 2"), "{}", stdout(&o));

    let ok = write(&dir, "ok.txt", "0 2\n");
    let o = mutvis(&["verify", &g, &ok, "--path", "0", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("path 0 2: 0 1 2"));

    let split = write(&dir, "split.txt", "3 1\n0 1\n");
    let o = mutvis(&["verify", &split, &ok, "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "components");
    assert_eq!(v["witness"], serde_json::json!([0, 2]));
}

#[test]
fn input_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "# comment\n3 2\n0 1\n1 7\n");
    let pts = write(&dir, "p.txt", "0\n");
    let o = mutvis(&["verify", &g, &pts]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));

    let cnf = write(&dir, "f.cnf", "p cnf 3 1\n1 2 0\n");
    let o = mutvis(&["gen", "reduce", &cnf]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    assert_eq!(code(&mutvis(&["solve", "/nonexistent/graph.txt"])), 3);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&mutvis(&["solve"])), 2);
    assert_eq!(code(&mutvis(&["gen", "torus", "4", "4", "--witness"])), 2);
    assert_eq!(code(&mutvis(&["gen", "cycle", "2"])), 2);
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    assert_eq!(
        code(&mutvis(&["gen", "grid", "5", "4", "-o", path_str(&g)])),
        0
    );
    let o = mutvis(&["solve", path_str(&g), "--all"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("16"));
}

#[test]
fn solve_modes() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    assert_eq!(
        code(&mutvis(&["gen", "grid", "4", "4", "-o", path_str(&g)])),
        0
    );
    let gs = path_str(&g);

    let o = mutvis(&["solve", gs, "--decide", "8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("yes"));
    let o = mutvis(&["solve", gs, "--decide", "9"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "no");

    let o = mutvis(&["solve", gs, "--all"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("maximum sets: 1"));
    assert!(stdout(&o).contains("{1, 2, 4, 7, 8, 11, 13, 14}"));

    let o = mutvis(&["solve", gs, "--canonical", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "optimal");
    assert_eq!(v["mu"], 8);
    assert_eq!(v["stats"]["threads"], 2);
    assert!(v["flags"].as_array().unwrap().contains(&"canonical".into()));

    let big = dir.path().join("big.txt");
    assert_eq!(
        code(&mutvis(&["gen", "torus", "9", "9", "-o", path_str(&big)])),
        0
    );
    let o = mutvis(&["solve", path_str(&big), "--budget", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("lower-bound only"), "{}", stdout(&o));
}

#[test]
fn closed_forms_and_classification() {
    let o = mutvis(&["mu", "grid", "2", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("mu = 4 (grid)"));
    let o = mutvis(&["mu", "kbip", "3", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mu"], 6);
    assert_eq!(v["verdict"], "complete_bipartite");
    let o = mutvis(&["mu", "torus", "13", "13"]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).starts_with("bound 39, attainment unknown"),
        "{}",
        stdout(&o)
    );

    let dir = TempDir::new().unwrap();
    let petersen = write(
        &dir,
        "petersen.txt",
        "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n",
    );
    let o = mutvis(&["mu", "file", &petersen]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("no closed form"));

    let star = write(&dir, "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let o = mutvis(&["mu", "file", &star]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("mu = 3"));
    let o = mutvis(&["classify", &star]);
    assert_eq!(stdout(&o).trim(), "mu = |E| (star)");
    let o = mutvis(&["classify", &petersen]);
    assert!(stdout(&o).contains("none"));
}

#[test]
fn reduction_instances() {
    let dir = TempDir::new().unwrap();
    let cnf = write(
        &dir,
        "f.cnf",
        "c sample\np cnf 5 3\n1 2 3 0\n4 5 -1 0\n-2 -3 -4 0\n",
    );
    let g = dir.path().join("g.txt");
    let w = dir.path().join("w.txt");
    let o = mutvis(&[
        "gen",
        "reduce",
        &cnf,
        "--assignment",
        "1 -2 3 -4 5",
        "--witness",
        "-o",
        path_str(&g),
        "--witness-out",
        path_str(&w),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&g).unwrap();
    assert!(text.contains("# K = 3p+q+2 = 20"), "{text}");
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("# roles by id: u1 ubar1 s1 t1"));
    assert_eq!(code(&mutvis(&["verify", path_str(&g), path_str(&w)])), 0);
    let o = mutvis(&["solve", path_str(&g), "--decide", "20"]);
    assert_eq!(code(&o), 0);

    let o = mutvis(&["gen", "reduce", &cnf, "--assignment", "-1 -2 -3 -4 -5"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("does not satisfy"));
    assert_eq!(code(&mutvis(&["gen", "reduce", &cnf, "--witness"])), 2);
}

#[test]
fn dot_output_marks_points() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().join("g.dot");
    assert_eq!(
        code(&mutvis(&[
            "gen",
            "cycle",
            "5",
            "--witness",
            "--dot",
            path_str(&d)
        ])),
        0
    );
    let dot = std::fs::read_to_string(&d).unwrap();
    assert_eq!(dot.matches("fillcolor=red").count(), 3);
    assert!(dot.starts_with("graph G {"));
}
