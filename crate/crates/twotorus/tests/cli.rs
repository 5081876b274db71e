use std::process::Command;

use twotorus::cli::{run_args, Outcome};

const G: &str = "r1*r2*r3 + r1*r3*(r2+r3) + r1*r2*(r2+r3) + r1*(r1+r3)*(r1+r2) + r1*(r1+r3)*(r2+r3) + r1*(r1+r2)*(r2+r3)";

fn run(args: &[&str]) -> Outcome {
    run_args(std::iter::once("twotorus").chain(args.iter().copied()))
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn is_class_example() {
    let o = run(&["is-class", "--n", "3", G]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "true\n"));
}

#[test]
fn is_class_false_exits_one() {
    let o = run(&["is-class", "r1*r2"]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "false\n"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["d", "s1*"][..],
        &["is-class", "r1 + r2"],
        &["dual", "x3"],
        &["dim"],
        &["dim", "--n", "5"],
        &["graph", "--n", "3", "--format", "svg", G],
        &["verify-table", "/nonexistent/table.txt", "--n", "3"],
        &["dual", "--n", "3", "--legend", "n4", "r1*r2*r3"],
        &["no-such-command"],
    ] {
        let o = run(args);
        assert_eq!(o.code, 2, "{args:?}: {o:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn dual_and_d() {
    let o = run(&["dual", G]);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout,
        "s1*s2*s3 + s1*s2*(s2+s3) + s1*s3*(s2+s3) + s2*s3*(s1+s2+s3) + s2*(s2+s3)*(s1+s2+s3) + s3*(s2+s3)*(s1+s2+s3)\n"
    );
    let o = run(&["d", o.stdout.trim()]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "0\n"));
    let o = run(&["d", "--legend", "n3", "x1*x2*x3"]);
    assert_eq!(o.stdout, "s1*s2 + s1*(s1+s2) + s2*(s1+s2)\n");
}

#[test]
fn graph_dot_has_six_nodes_and_nine_edges() {
    let o = run(&["graph", "--n", "3", "--format", "dot", G]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.matches(" -- ").count(), 9);
    assert_eq!(o.stdout.lines().filter(|l| l.ends_with("\"];") && !l.contains("--")).count(), 6);
}

#[test]
fn graph_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let path = path.to_str().unwrap();
    let o = run(&["graph", "--format", "json", "--out", path, G]);
    assert_eq!((o.code, o.stdout.as_str()), (0, ""));
    let o = run(&["graph", "--graph", path, "--format", "poly"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, format!("{}\n", run(&["dual", &run(&["dual", G]).stdout]).stdout.trim()));

    std::fs::write(path, r#"{"n": 2, "vertices": [{"id": 0}, {"id": 1}], "edges": [{"u": 0, "v": 1, "color": "10"}, {"u": 0, "v": 1, "color": "10"}]}"#).unwrap();
    let o = run(&["graph", "--graph", path]);
    assert_eq!(o.code, 1, "{o:?}");
}

#[test]
fn graph_rejects_non_cycles() {
    let o = run(&["graph", "r1*r2"]);
    assert_eq!(o.code, 2);
}

#[test]
fn dim_outputs() {
    assert_eq!(run(&["dim", "--n", "2"]).stdout, "1\n");
    assert_eq!(run(&["dim", "--n", "3", "--method", "polytopes"]).stdout, "13\n");
    // the computed value; see the README on the 510 discrepancy
    assert_eq!(run(&["dim", "--n", "4", "--method", "generators"]).stdout, "511\n");
    let o = run(&["dim", "--n", "3", "--format", "json"]);
    assert!(o.stdout.contains("\"ambient_dim\": 28"));
    assert!(o.stdout.contains("\"dim\": 13"));
}

#[test]
fn decompose_basis_element() {
    let o = run(&["decompose", "--n", "3", "--format", "json", G]);
    assert_eq!(o.code, 0, "{o:?}");
    assert!(o.stdout.contains("\"coordinates\""));
    let o = run(&["decompose", "--n", "3", "s1*s2*s3"]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "not in span\n"));
}

#[test]
fn verify_tables() {
    let o = run(&["verify-table", &data("table_n3.txt"), "--legend", "n3"]);
    assert_eq!(o.code, 0, "{o:?}");
    assert!(o.stdout.contains("\"matches_dim_Vn\": true"));
    assert!(o.stdout.contains("\"first_dependency\": null"));
    let o = run(&["verify-table", &data("table_n4.txt"), "--legend", "n4"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("\"independent\": true"));
    assert!(o.stdout.contains("\"span_dim\": 510"));
    assert!(o.stdout.contains("\"matches_dim_Vn\": false"));
}

#[test]
fn check_dks() {
    let o = run(&["check-dks", "--max-degree", "3", G]);
    assert_eq!(o.code, 0, "{o:?}");
    assert!(o.stdout.contains("\"certified_nonmember\": false"));
    assert!(o.stdout.contains("\"degree_checked\": 3"));
    let o = run(&["check-dks", "--max-degree", "0", "r1*r2"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("\"certified_nonmember\": true"));
}

#[test]
fn prism_path() {
    let o = run(&["prism-path", "s1*s2*s3", "(s1+s2)*(s2+s3)*(s1+s2+s3)", "--format", "json"]);
    assert_eq!(o.code, 0, "{o:?}");
    assert_eq!(o.stdout.matches("\"coloring\"").count(), 3);
    let o = run(&["prism-path", "s1*s2", "s1*s2 + s1*(s1+s2)"]);
    assert_eq!(o.code, 2);
}

#[test]
fn coloring_poly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.txt");
    // a square in dimension 3 is (s1 + s2)(s3 + (s1+s2+s3))
    std::fs::write(&path, "# square\nparts=1,1; (0,0)=#100; (0,1)=#010; (1,0)=#001; (1,1)=#111\n").unwrap();
    let o = run(&["coloring-poly", path.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{o:?}");
    assert_eq!(o.stdout, "s1*s3 + s1*(s1+s2+s3) + s2*s3 + s2*(s1+s2+s3)\n");
    std::fs::write(&path, "parts=1,1; (0,0)=#10; (0,1)=#01; (1,0)=#01; (1,1)=#11\n").unwrap();
    assert_eq!(run(&["coloring-poly", path.to_str().unwrap()]).code, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["graph", "--format", "json", G][..],
        &["dim", "--n", "3", "--format", "json"],
        &["check-dks", "--max-degree", "4", G],
        &["prism-path", "s1*s2*s3*s4", "s4*(s1+s4)*(s2+s3)*(s1+s2+s3+s4)"],
    ] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_twotorus");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["is-class", "--n", "3", G]);
    assert_eq!((o.status.code(), o.stdout.as_slice()), (Some(0), &b"true\n"[..]));
    assert_eq!(status(&["is-class", "r1*r2"]).status.code(), Some(1));
    assert_eq!(status(&["d", "(s1"]).status.code(), Some(2));
}
