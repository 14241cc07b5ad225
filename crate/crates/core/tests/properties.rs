#![allow(clippy::needless_range_loop)]

use circumfem::analysis::rt_interpolate;
use circumfem::geometry::{integrate, quad_rule, Point2, Triangle};
use circumfem::linalg::{cg_solve, CsrMatrix};
use circumfem::mesh::{generate_aniso, read_mesh, validate, write_mesh, Mesh};
use circumfem::spaces::{DofMap, FeFunction, SpaceKind, Value};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point2> {
    (-5.0..5.0f64, -5.0..5.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

/// Triangles with area at least a few percent of `diameter²`.
fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_map(|(a, b, c)| Triangle::new(a, b, c))
        .prop_filter("not too flat", |t| {
            let d = t.diameter();
            d > 1e-2 && t.signed_area().abs() > 0.02 * d * d
        })
}

fn bary() -> impl Strategy<Value = [f64; 3]> {
    (0.0..1.0f64, 0.0..1.0f64).prop_map(|(s, t)| {
        let (s, t) = if s + t > 1.0 { (1.0 - s, 1.0 - t) } else { (s, t) };
        [1.0 - s - t, s, t]
    })
}

fn single(t: &Triangle) -> Mesh {
    Mesh::new(t.vertices.to_vec(), vec![[0, 1, 2]]).unwrap()
}

proptest! {
    #[test]
    fn rigid_motions_preserve_measures(t in triangle(), angle in 0.0..std::f64::consts::TAU, shift in point()) {
        let (s, c) = angle.sin_cos();
        let moved = t.vertices.map(|p| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y) + shift);
        let u = Triangle::new(moved[0], moved[1], moved[2]);
        let rel = |a: f64, b: f64| (a - b).abs() / a.abs().max(1e-300);
        prop_assert!(rel(t.area().unwrap(), u.area().unwrap()) < 1e-12);
        prop_assert!(rel(t.circumradius().unwrap(), u.circumradius().unwrap()) < 1e-12);
        prop_assert!(rel(t.diameter(), u.diameter()) < 1e-12);
    }

    #[test]
    fn circumradius_dominates_half_diameter(t in triangle()) {
        prop_assert!(t.circumradius().unwrap() >= 0.5 * t.diameter() * (1.0 - 1e-12));
    }

    #[test]
    fn integration_is_linear(t in triangle(), a in -3.0..3.0f64, b in -3.0..3.0f64, degree in 1usize..=6) {
        let rule = quad_rule(degree).unwrap();
        let f = |p: Point2| (p.x * 0.3).sin() + p.y * p.y;
        let g = |p: Point2| (p.x - p.y).exp() * 0.1;
        let lhs = integrate(&t, &rule, |p| a * f(p) + b * g(p)).unwrap();
        let rhs = a * integrate(&t, &rule, f).unwrap() + b * integrate(&t, &rule, g).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn constant_integrates_to_area(t in triangle(), degree in 1usize..=6) {
        let rule = quad_rule(degree).unwrap();
        let area = t.area().unwrap();
        prop_assert!((integrate(&t, &rule, |_| 1.0).unwrap() - area).abs() <= 1e-13 * area);
    }

    #[test]
    fn csr_matches_dense(
        entries in prop::collection::vec((0usize..12, 0usize..9, -10.0..10.0f64), 0..60),
        x in prop::collection::vec(-5.0..5.0f64, 9),
    ) {
        let a = CsrMatrix::from_triplets(12, 9, &entries);
        let mut dense = vec![[0.0f64; 9]; 12];
        for &(i, j, v) in &entries {
            dense[i][j] += v;
        }
        let y = a.mul_vec(&x);
        for i in 0..12 {
            let expect: f64 = (0..9).map(|j| dense[i][j] * x[j]).sum();
            prop_assert!((y[i] - expect).abs() <= 1e-12 * (1.0 + expect.abs()));
            for j in 0..9 {
                prop_assert!((a.get(i, j) - dense[i][j]).abs() <= 1e-12);
            }
        }
        let at = a.transpose();
        for i in 0..12 {
            for j in 0..9 {
                prop_assert_eq!(at.get(j, i), a.get(i, j));
            }
        }
    }

    #[test]
    fn rt_interpolation_is_identity_on_rt0(t in triangle(), c in prop::collection::vec(-2.0..2.0f64, 3)) {
        let mesh = single(&t);
        let q = FeFunction::new(DofMap::new(&mesh, SpaceKind::Rt0), c.clone()).unwrap();
        let back = rt_interpolate(&mesh, |x| q.rt0_at(0, x).unwrap()).unwrap();
        for (a, b) in back.coeffs().iter().zip(&c) {
            prop_assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn rt0_divergence_is_constant_flux_balance(t in triangle(), c in prop::collection::vec(-2.0..2.0f64, 3)) {
        let mesh = single(&t);
        let q = FeFunction::new(DofMap::new(&mesh, SpaceKind::Rt0), c).unwrap();
        let area = t.area().unwrap();
        // outward flux through the three edges
        let mut outward = 0.0;
        for e in 0..3 {
            let edge = &mesh.edges()[e];
            let [a, b] = edge.vertices.map(|v| mesh.vertices()[v]);
            let mid = (a + b) * 0.5;
            let n = mesh.edge_normal(e);
            let away = mid - mesh.triangle(0).centroid();
            let sign = if away.dot(n) > 0.0 { 1.0 } else { -1.0 };
            outward += sign * q.rt0_at(0, mid).unwrap().dot(n) * mesh.edge_length(e);
        }
        let div = q.divergence(0).unwrap();
        prop_assert!((div * area - outward).abs() <= 1e-11 * (1.0 + outward.abs()));
    }

    #[test]
    fn scalar_bases_reproduce_constants(t in triangle(), b in bary(), value in -3.0..3.0f64) {
        let mesh = single(&t);
        for kind in [SpaceKind::P1, SpaceKind::Cr, SpaceKind::P0] {
            let f = FeFunction::interpolate(DofMap::new(&mesh, kind), |_| value).unwrap();
            match f.eval(0, b).unwrap() {
                Value::Scalar(v) => prop_assert!((v - value).abs() <= 1e-13 * (1.0 + value.abs())),
                Value::Vector(_) => prop_assert!(false),
            }
        }
    }

    #[test]
    fn scalar_bases_reproduce_linears(t in triangle(), b in bary(), a in -2.0..2.0f64, c in -2.0..2.0f64) {
        let mesh = single(&t);
        let g = move |p: Point2| a * p.x + c * p.y + 0.5;
        let x = mesh.triangle(0).point_at(b);
        for kind in [SpaceKind::P1, SpaceKind::Cr] {
            let f = FeFunction::interpolate(DofMap::new(&mesh, kind), g).unwrap();
            let v = f.eval(0, b).unwrap().scalar().unwrap();
            prop_assert!((v - g(x)).abs() <= 1e-11 * (1.0 + g(x).abs()));
            let grad = f.gradient(0).unwrap();
            prop_assert!((grad - Point2::new(a, c)).norm() <= 1e-10 * (1.0 + a.abs() + c.abs()));
        }
    }

    #[test]
    fn generated_meshes_are_valid(m in 1usize..12, half_n in 1usize..12) {
        let n = 2 * half_n;
        let mesh = generate_aniso(m, n).unwrap();
        prop_assert_eq!(mesh.num_triangles(), (2 * m + 1) * n);
        prop_assert_eq!(mesh.num_vertices(), m * n + m + 3 * n / 2 + 1);
        prop_assert_eq!(mesh.num_edges(), 3 * m * n + m + 5 * n / 2);
        prop_assert!(validate(&mesh).is_empty());
        let area: f64 = (0..mesh.num_triangles()).map(|t| mesh.triangle(t).area().unwrap()).sum();
        prop_assert!((area - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mesh_text_roundtrip(m in 1usize..8, half_n in 1usize..8) {
        let mesh = generate_aniso(m, 2 * half_n).unwrap();
        let mut buf = Vec::new();
        write_mesh(&mesh, &mut buf).unwrap();
        let back = read_mesh(buf.as_slice()).unwrap();
        prop_assert_eq!(back.vertices(), mesh.vertices());
        prop_assert_eq!(back.triangles(), mesh.triangles());
    }

    #[test]
    fn cg_reports_honest_convergence(n in 2usize..40, seed in any::<u64>(), tol_exp in 6i32..14) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        // diagonally dominant tridiagonal-plus-random SPD
        let mut trip = Vec::new();
        for i in 0..n {
            trip.push((i, i, 4.0 + rng.random_range(0.0..2.0)));
            if i + 1 < n {
                let v = rng.random_range(-1.0..1.0);
                trip.push((i, i + 1, v));
                trip.push((i + 1, i, v));
            }
        }
        let a = CsrMatrix::from_triplets(n, n, &trip);
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let tol = 10f64.powi(-tol_exp);
        let (x, rep) = cg_solve(&a, &b, tol, 50 * n).unwrap();
        prop_assert!(rep.converged);
        let ax = a.mul_vec(&x);
        let r: f64 = ax.iter().zip(&b).map(|(p, q)| (p - q).powi(2)).sum::<f64>().sqrt();
        let bn: f64 = b.iter().map(|q| q * q).sum::<f64>().sqrt();
        prop_assert!(r / bn <= tol.max(rep.rounding_floor) * 1.5 + 1e-15);
    }
}
