use std::process::{Command, Output};

fn circumfem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circumfem")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mesh_prints_stats_and_writes_file() {
    let o = circumfem(&["mesh", "--M", "4", "--N", "20"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("elements: 180"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.mesh");
    let o = circumfem(&["mesh", "--M", "10", "--N", "32", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("h: 0.1\n"), "{text}");
    assert!(text.contains("R_mesh: 0.055625\n"), "{text}");
    assert!(text.contains("R_paper: 0.175625\n"), "{text}");
    let mesh = circumfem::mesh::read_mesh_file(&path).unwrap();
    assert_eq!(mesh.num_triangles(), 672);
}

#[test]
fn mesh_defaults_n_from_alpha() {
    let o = circumfem(&["mesh", "--M", "10"]);
    assert!(stdout(&o).contains("N: 32"));
}

#[test]
fn table_csv_is_deterministic() {
    let args = ["table", "--method", "cr", "--m-list", "4,6", "--format", "csv"];
    let a = circumfem(&args);
    let b = circumfem(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("M,N,h,R_mesh,R_paper,error,err_per_h,err_per_Rpaper"));
    assert!(lines.next().unwrap().starts_with("4,8,"));
    assert!(lines.next().unwrap().starts_with("6,14,"));
}

#[test]
fn table_first_row_matches_reference() {
    let o = circumfem(&["table", "--method", "p1", "--M", "10", "--format", "csv"]);
    let text = stdout(&o);
    let row: Vec<f64> = text.lines().nth(1).unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(row[0], 10.0);
    assert_eq!(row[1], 32.0);
    assert!((row[5] - 0.0167277).abs() / 0.0167277 < 0.05);
}

#[test]
fn table_writes_markdown_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.md");
    let o = circumfem(&["table", "--method", "rt", "--M", "4", "--N", "8", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("| M | N |"));
    assert!(text.contains("error_u"));
    assert!(text.lines().nth(2).unwrap().starts_with("| 4 | 8 |"));
}

#[test]
fn table_rejects_descending_list() {
    let o = circumfem(&["table", "--m-list", "20,10"]);
    assert!(!o.status.success());
}

#[test]
fn verify_suites() {
    for suite in ["constants", "sharpness", "reconstruction", "quadrature"] {
        let o = circumfem(&["verify", suite]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let o = circumfem(&["verify", "everything"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn ba_constant_prints_value() {
    let o = circumfem(&["ba-constant"]);
    assert!(stdout(&o).contains("A2 = 0.49291"));
}

#[test]
fn interp_bounds_lists_fields() {
    let o = circumfem(&["interp-bounds", "--M", "4", "--N", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2 + 5 + 1 + 3);
}
