use circumfem_web::{mesh_view, sharpness_view, solve_view, MAX_ELEMENTS};

#[test]
fn mesh_view_matches_counts() {
    let v = mesh_view(4, 20).unwrap();
    assert_eq!(v.elements, 180);
    assert_eq!(v.coords().len(), 2 * v.vertices);
    assert_eq!(v.triangles().len(), 3 * v.elements);
    assert_eq!(v.circumradii().len(), v.elements);
    let max = v.circumradii().iter().copied().fold(0.0, f64::max);
    assert_eq!(max, v.r_mesh);
    assert!(v.triangles().iter().all(|&i| (i as usize) < v.vertices));
}

#[test]
fn rejects_bad_sizes() {
    assert!(mesh_view(0, 4).is_err());
    assert!(mesh_view(4, 5).is_err());
    assert!(mesh_view(MAX_ELEMENTS, 2).is_err());
    assert!(solve_view("q2", 4, 8).is_err());
}

#[test]
fn solves_report_errors() {
    for method in ["p1", "cr", "rt"] {
        let s = solve_view(method, 10, 32).unwrap();
        assert_eq!(s.corner_values().len(), 3 * 672);
        assert!(s.error > 0.0 && s.error < 0.02, "{method}: {}", s.error);
        let max_u = s.corner_values().iter().copied().fold(0.0, f64::max);
        // u has maximum 1/16
        assert!((max_u - 0.0625).abs() < 0.01, "{method}: {max_u}");
    }
    let p1 = solve_view("p1", 10, 32).unwrap();
    assert!((p1.error - 0.0167277).abs() / 0.0167277 < 0.05);
}

#[test]
fn sharpness_matches_closed_form() {
    let s = sharpness_view(0.1).unwrap();
    assert!((s.e0_sq - s.e0_sq_closed).abs() < 1e-10 * s.e0_sq_closed);
    assert!((s.e1_sq - s.e1_sq_closed).abs() < 1e-10 * s.e1_sq_closed);
    assert!(s.ratio >= s.lower_bound);
    assert!(s.max_flux <= 1e-13);
    assert!(sharpness_view(-1.0).is_err());
}
