//! Interpolation and projection operators, error norms, and checks of the
//! circumradius / diameter interpolation estimates.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use crate::assembly::assemble_mixed;
use crate::error::{FemError, Result};
use crate::geometry::{integrate, integrate_segment, quad_rule, Point2, Triangle};
use crate::linalg::dense_min_singular_generalized;
use crate::mesh::Mesh;
use crate::solvers::ExactSolution;
use crate::spaces::{DofMap, FeFunction, SpaceKind};

/// Quadrature degree for error integrals.
pub const ERROR_DEGREE: usize = 6;
/// Quadrature degree for `|q|_{1,K}` from the analytic Jacobian.
pub const SEMINORM_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Babuška-Aziz constant: largest positive root of `1/x + tan(1/x) = 0`.
    pub a2: f64,
    /// `4√2 · A2`, the constant of the circumradius interpolation bound.
    pub c2_2: f64,
    /// `1 / C2_2`: meshes with `R` below this satisfy `C2_2 R ≤ 1`.
    pub r_threshold: f64,
}

impl Constants {
    /// `|1/A2 + tan(1/A2)|`.
    pub fn residual(&self) -> f64 {
        let theta = 1.0 / self.a2;
        (theta + theta.tan()).abs()
    }
}

/// Bisection on `θ ↦ θ + tan θ` over `(π/2, π)`, run until the bracket
/// stops shrinking; `A2 = 1/θ`.
pub fn babuska_aziz() -> Constants {
    let g = |t: f64| t + t.tan();
    let (mut lo, mut hi) = (FRAC_PI_2 + 1e-9, PI);
    debug_assert!(g(lo) < 0.0 && g(hi) > 0.0);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta = if g(lo).abs() < g(hi).abs() { lo } else { hi };
    let a2 = 1.0 / theta;
    let c2_2 = 4.0 * SQRT_2 * a2;
    Constants {
        a2,
        c2_2,
        r_threshold: 1.0 / c2_2,
    }
}

/// Global RT0 interpolant: each edge dof is the mean normal component
/// `(1/|e|) ∫_e q·n ds`, computed with three-point Gauss.
pub fn rt_interpolate<'m, Q>(mesh: &'m Mesh, q: Q) -> Result<FeFunction<'m>>
where
    Q: Fn(Point2) -> Point2,
{
    let coeffs = mesh
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            let [a, b] = edge.vertices.map(|v| mesh.vertices()[v]);
            let n = mesh.edge_normal(e);
            integrate_segment(a, b, |x| q(x).dot(n)) / mesh.edge_length(e)
        })
        .collect();
    FeFunction::new(DofMap::new(mesh, SpaceKind::Rt0), coeffs)
}

/// Elementwise mean values.
pub fn pi0_project<'m, G>(mesh: &'m Mesh, g: G, degree: usize) -> Result<FeFunction<'m>>
where
    G: Fn(Point2) -> f64,
{
    let rule = quad_rule(degree)?;
    let coeffs = (0..mesh.num_triangles())
        .map(|t| {
            let tri = mesh.triangle(t);
            Ok(integrate(&tri, &rule, &g)? / tri.area()?)
        })
        .collect::<Result<Vec<_>>>()?;
    FeFunction::new(DofMap::new(mesh, SpaceKind::P0), coeffs)
}

/// A smooth scalar field with its gradient.
pub struct ScalarField {
    pub name: &'static str,
    pub value: fn(Point2) -> f64,
    pub gradient: fn(Point2) -> Point2,
}

/// A smooth vector field with its Jacobian `[[∂x q1, ∂y q1], [∂x q2, ∂y q2]]`
/// and the gradient of its divergence.
pub struct VectorField {
    pub name: &'static str,
    pub value: fn(Point2) -> Point2,
    pub jacobian: fn(Point2) -> [[f64; 2]; 2],
    pub div_gradient: fn(Point2) -> Point2,
}

impl VectorField {
    pub fn divergence(&self, p: Point2) -> f64 {
        let j = (self.jacobian)(p);
        j[0][0] + j[1][1]
    }
}

/// Five fixed smooth fields used by the interpolation bound checks.
pub fn standard_test_fields() -> Vec<VectorField> {
    vec![
        VectorField {
            name: "(sin x cos y, x^2 y)",
            value: |p| Point2::new(p.x.sin() * p.y.cos(), p.x * p.x * p.y),
            jacobian: |p| {
                [
                    [p.x.cos() * p.y.cos(), -p.x.sin() * p.y.sin()],
                    [2.0 * p.x * p.y, p.x * p.x],
                ]
            },
            div_gradient: |p| Point2::new(-p.x.sin() * p.y.cos() + 2.0 * p.x, -p.x.cos() * p.y.sin()),
        },
        VectorField {
            name: "(e^x y, x - y^2)",
            value: |p| Point2::new(p.x.exp() * p.y, p.x - p.y * p.y),
            jacobian: |p| [[p.x.exp() * p.y, p.x.exp()], [1.0, -2.0 * p.y]],
            div_gradient: |p| Point2::new(p.x.exp() * p.y, p.x.exp() - 2.0),
        },
        VectorField {
            name: "(x^3, y^3)",
            value: |p| Point2::new(p.x.powi(3), p.y.powi(3)),
            jacobian: |p| [[3.0 * p.x * p.x, 0.0], [0.0, 3.0 * p.y * p.y]],
            div_gradient: |p| Point2::new(6.0 * p.x, 6.0 * p.y),
        },
        VectorField {
            name: "grad sin(pi x) sin(pi y)",
            value: |p| {
                let (sx, cx, sy, cy) = ((PI * p.x).sin(), (PI * p.x).cos(), (PI * p.y).sin(), (PI * p.y).cos());
                Point2::new(PI * cx * sy, PI * sx * cy)
            },
            jacobian: |p| {
                let (sx, cx, sy, cy) = ((PI * p.x).sin(), (PI * p.x).cos(), (PI * p.y).sin(), (PI * p.y).cos());
                let pi2 = PI * PI;
                [[-pi2 * sx * sy, pi2 * cx * cy], [pi2 * cx * cy, -pi2 * sx * sy]]
            },
            div_gradient: |p| {
                let (sx, cx, sy, cy) = ((PI * p.x).sin(), (PI * p.x).cos(), (PI * p.y).sin(), (PI * p.y).cos());
                let c = -2.0 * PI.powi(3);
                Point2::new(c * cx * sy, c * sx * cy)
            },
        },
        VectorField {
            name: "(cos 2y, sin 3x + xy)",
            value: |p| Point2::new((2.0 * p.y).cos(), (3.0 * p.x).sin() + p.x * p.y),
            jacobian: |p| [[0.0, -2.0 * (2.0 * p.y).sin()], [3.0 * (3.0 * p.x).cos() + p.y, p.x]],
            div_gradient: |_| Point2::new(1.0, 0.0),
        },
    ]
}

/// Three fixed smooth scalar fields for the projection check.
pub fn standard_scalar_fields() -> Vec<ScalarField> {
    vec![
        ScalarField {
            name: "sin(pi x) sin(pi y)",
            value: |p| (PI * p.x).sin() * (PI * p.y).sin(),
            gradient: |p| {
                Point2::new(
                    PI * (PI * p.x).cos() * (PI * p.y).sin(),
                    PI * (PI * p.x).sin() * (PI * p.y).cos(),
                )
            },
        },
        ScalarField {
            name: "e^(x+2y)",
            value: |p| (p.x + 2.0 * p.y).exp(),
            gradient: |p| Point2::new(1.0, 2.0) * (p.x + 2.0 * p.y).exp(),
        },
        ScalarField {
            name: "x^2 - 3xy",
            value: |p| p.x * p.x - 3.0 * p.x * p.y,
            gradient: |p| Point2::new(2.0 * p.x - 3.0 * p.y, -3.0 * p.x),
        },
    ]
}

/// Worst-case element ratios of the RT interpolation estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpBoundReport {
    /// `max_K |q - I_K q|_{0,K} / (R_K |q|_{1,K})`.
    pub flux_ratio: f64,
    /// `max_K |div q - div I_K q|_{0,K} / (h_K |div q|_{1,K})`.
    pub div_ratio: f64,
    /// Elements skipped for a vanishing denominator, per ratio.
    pub skipped: [usize; 2],
}

pub fn interp_bound_check(mesh: &Mesh, field: &VectorField) -> Result<InterpBoundReport> {
    let interp = rt_interpolate(mesh, field.value)?;
    let err_rule = quad_rule(ERROR_DEGREE)?;
    let semi_rule = quad_rule(SEMINORM_DEGREE)?;
    let mut report = InterpBoundReport {
        flux_ratio: 0.0,
        div_ratio: 0.0,
        skipped: [0, 0],
    };
    for t in 0..mesh.num_triangles() {
        let tri = mesh.triangle(t);
        let (a, b) = interp.rt0_affine(t)?;
        let div_interp = interp.divergence(t)?;

        let err0 = integrate(&tri, &err_rule, |x| ((field.value)(x) - (x * a + b)).norm_squared())?.sqrt();
        let semi = integrate(&tri, &semi_rule, |x| {
            let j = (field.jacobian)(x);
            j[0][0].powi(2) + j[0][1].powi(2) + j[1][0].powi(2) + j[1][1].powi(2)
        })?
        .sqrt();
        let denom = tri.circumradius()? * semi;
        if denom > 0.0 {
            report.flux_ratio = report.flux_ratio.max(err0 / denom);
        } else {
            report.skipped[0] += 1;
        }

        let div_err = integrate(&tri, &err_rule, |x| (field.divergence(x) - div_interp).powi(2))?.sqrt();
        let div_semi = integrate(&tri, &semi_rule, |x| (field.div_gradient)(x).norm_squared())?.sqrt();
        let denom = tri.diameter() * div_semi;
        if denom > 0.0 {
            report.div_ratio = report.div_ratio.max(div_err / denom);
        } else {
            report.skipped[1] += 1;
        }
    }
    Ok(report)
}

/// `max_K |g - π⁰_K g|_{0,K} / (h_K |g|_{1,K})`, skipping elements where
/// `|g|_{1,K} = 0`.
pub fn pw_projection_check(mesh: &Mesh, g: &ScalarField) -> Result<f64> {
    let err_rule = quad_rule(ERROR_DEGREE)?;
    let semi_rule = quad_rule(SEMINORM_DEGREE)?;
    let means = pi0_project(mesh, g.value, ERROR_DEGREE)?;
    let mut worst = 0.0f64;
    for t in 0..mesh.num_triangles() {
        let tri = mesh.triangle(t);
        let mean = means.coeffs()[t];
        let err = integrate(&tri, &err_rule, |x| ((g.value)(x) - mean).powi(2))?.sqrt();
        let semi = integrate(&tri, &semi_rule, |x| (g.gradient)(x).norm_squared())?.sqrt();
        let denom = tri.diameter() * semi;
        if denom > 0.0 {
            worst = worst.max(err / denom);
        }
    }
    Ok(worst)
}

/// The triangle `(1,0), (-1,0), (0,h)` with the field
/// `q = (y - (1+h²)/(2h), x)`, whose RT interpolant vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessReport {
    pub h: f64,
    /// Edge dofs of the interpolant (all zero in exact arithmetic).
    pub fluxes: [f64; 3],
    /// `|q - Iq|²_{0,K}` by quadrature.
    pub e0_sq: f64,
    /// `|q - Iq|²_{1,K}` by quadrature.
    pub e1_sq: f64,
    /// `(3+h²)(1+h²) / (12h)`.
    pub e0_sq_closed: f64,
    /// `2h`.
    pub e1_sq_closed: f64,
    /// `sqrt(e0_sq / e1_sq)`.
    pub ratio: f64,
    pub circumradius: f64,
}

impl SharpnessReport {
    /// `R_K / (2√6)`, the lower bound the ratio attains.
    pub fn lower_bound(&self) -> f64 {
        self.circumradius / (2.0 * 6f64.sqrt())
    }
}

pub fn sharpness_case(h: f64) -> Result<SharpnessReport> {
    if !(h > 0.0) {
        return Err(FemError::InvalidParameters(format!("height must be positive, got {h}")));
    }
    let mesh = Mesh::new(
        vec![Point2::new(1.0, 0.0), Point2::new(-1.0, 0.0), Point2::new(0.0, h)],
        vec![[0, 1, 2]],
    )?;
    let shift = (1.0 + h * h) / (2.0 * h);
    let q = move |p: Point2| Point2::new(p.y - shift, p.x);
    let interp = rt_interpolate(&mesh, q)?;
    let tri = mesh.triangle(0);
    let (a, b) = interp.rt0_affine(0)?;
    let rule = quad_rule(ERROR_DEGREE)?;
    let e0_sq = integrate(&tri, &rule, |x| (q(x) - (x * a + b)).norm_squared())?;
    // ∇q = [[0, 1], [1, 0]], ∇(Iq) = a·I
    let e1_sq = integrate(&tri, &rule, |_| 2.0 * a * a + 2.0)?;
    let c = interp.coeffs();
    Ok(SharpnessReport {
        h,
        fluxes: [c[0], c[1], c[2]],
        e0_sq,
        e1_sq,
        e0_sq_closed: (3.0 + h * h) * (1.0 + h * h) / (12.0 * h),
        e1_sq_closed: 2.0 * h,
        ratio: (e0_sq / e1_sq).sqrt(),
        circumradius: tri.circumradius()?,
    })
}

/// Discrete inf-sup constant of the RT0 × P0 pair on `mesh`, computed densely.
pub fn inf_sup_constant(mesh: &Mesh) -> Result<f64> {
    let sys = assemble_mixed(mesh, |_| 0.0, 1)?;
    dense_min_singular_generalized(&sys.div_op, &sys.mass, &sys.areas)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    /// `|u - u_h|_0`, or `|∇u - p_h|_0` for an RT0 flux.
    pub l2: f64,
    /// Broken seminorm `(Σ_K |u - u_h|²_{1,K})^{1/2}`; `None` for fluxes.
    pub h1_broken: Option<f64>,
    /// Per element `(l2², h1²)` contributions.
    pub per_element: Vec<(f64, f64)>,
}

/// Errors of `numeric` against a closed-form solution on `mesh`.
pub fn error_norms(mesh: &Mesh, numeric: &FeFunction<'_>, exact: &ExactSolution, degree: usize) -> Result<ErrorReport> {
    if !std::ptr::eq(mesh, numeric.mesh()) {
        return Err(FemError::MeshMismatch);
    }
    let rule = quad_rule(degree)?;
    let mut per_element = Vec::with_capacity(mesh.num_triangles());
    for t in 0..mesh.num_triangles() {
        let tri: Triangle = mesh.triangle(t);
        let contribution = if numeric.kind() == SpaceKind::Rt0 {
            let (a, b) = numeric.rt0_affine(t)?;
            let l2 = integrate(&tri, &rule, |x| ((exact.grad)(x) - (x * a + b)).norm_squared())?;
            (l2, 0.0)
        } else {
            let grad = numeric.gradient(t)?;
            let c = numeric.local_coeffs(t);
            let kind = numeric.kind();
            let mut l2 = 0.0;
            let mut h1 = 0.0;
            let area = tri.area()?;
            for (bary, w) in rule.iter() {
                let x = tri.point_at(*bary);
                let uh = match kind {
                    SpaceKind::P1 => c[0] * bary[0] + c[1] * bary[1] + c[2] * bary[2],
                    SpaceKind::Cr => (0..3).map(|i| c[i] * (1.0 - 2.0 * bary[i])).sum(),
                    _ => c[0],
                };
                l2 += w * ((exact.u)(x) - uh).powi(2);
                h1 += w * ((exact.grad)(x) - grad).norm_squared();
            }
            (l2 * area, h1 * area)
        };
        per_element.push(contribution);
    }
    let l2 = per_element.iter().map(|c| c.0).sum::<f64>().sqrt();
    let h1 = per_element.iter().map(|c| c.1).sum::<f64>().sqrt();
    Ok(ErrorReport {
        l2,
        h1_broken: (numeric.kind() != SpaceKind::Rt0).then_some(h1),
        per_element,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::generate_aniso;
    use crate::solvers::PoissonProblem;

    #[test]
    fn babuska_aziz_values() {
        let c = babuska_aziz();
        assert!((c.a2 - 0.49291).abs() < 1e-5);
        assert!(c.a2 > 0.49 && c.a2 < 0.50);
        assert!((c.c2_2 - 2.7883).abs() < 1e-4);
        assert!((c.r_threshold - 0.3586).abs() < 1e-4);
        assert!(c.residual() <= 1e-10, "residual {}", c.residual());
    }

    #[test]
    fn rt_interpolation_reproduces_rt0_fields() {
        let mesh = generate_aniso(3, 6).unwrap();
        for (a, b) in [(1.0, Point2::ZERO), (0.0, Point2::new(1.0, 0.0)), (-0.7, Point2::new(0.3, 2.0))] {
            let q = rt_interpolate(&mesh, |x| x * a + b).unwrap();
            for t in 0..mesh.num_triangles() {
                let (ai, bi) = q.rt0_affine(t).unwrap();
                assert!((ai - a).abs() < 1e-12 && (bi - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn sharpness_examples() {
        let s = sharpness_case(1.0).unwrap();
        assert!((s.e0_sq - 2.0 / 3.0).abs() < 1e-13);
        assert!((s.e1_sq - 2.0).abs() < 1e-13);
        assert!((s.ratio - (1.0f64 / 3.0).sqrt()).abs() < 1e-13);
        assert!((s.circumradius - 1.0).abs() < 1e-14);
        let s = sharpness_case(0.1).unwrap();
        assert!((s.e0_sq - 3.01 * 1.01 / 1.2).abs() < 1e-12);
        assert!((s.e1_sq - 0.2).abs() < 1e-13);
        assert!((s.circumradius - 5.05).abs() < 1e-12);
        for h in [0.05, 0.1, 0.5, 1.0, 2.0] {
            let s = sharpness_case(h).unwrap();
            assert!(s.fluxes.iter().all(|f| f.abs() <= 1e-13), "{:?}", s.fluxes);
            assert!(s.ratio >= s.lower_bound() * (1.0 - 1e-12));
        }
        assert!(sharpness_case(0.0).is_err());
    }

    #[test]
    fn pi0_examples() {
        let mesh = generate_aniso(2, 4).unwrap();
        let c = pi0_project(&mesh, |_| 3.5, 1).unwrap();
        assert!(c.coeffs().iter().all(|&v| (v - 3.5).abs() < 1e-15));
        let reference = Mesh::reference_triangle();
        let m = pi0_project(&reference, |p| p.x, 1).unwrap();
        assert!((m.coeffs()[0] - 1.0 / 3.0).abs() < 1e-15);
        let g = |p: Point2| (3.0 * p.x).sin() * p.y.exp();
        let means = pi0_project(&mesh, g, 6).unwrap();
        let rule = quad_rule(6).unwrap();
        for t in 0..mesh.num_triangles() {
            let mean = means.coeffs()[t];
            let r = integrate(&mesh.triangle(t), &rule, |x| g(x) - mean).unwrap();
            assert!(r.abs() < 1e-13);
        }
    }

    #[test]
    fn zero_numeric_gives_seminorm_of_exact() {
        let mesh = generate_aniso(3, 4).unwrap();
        let problem = PoissonProblem::unit_square_benchmark();
        let zero = FeFunction::zeros(DofMap::new(&mesh, SpaceKind::Cr));
        let rep = error_norms(&mesh, &zero, problem.exact().unwrap(), ERROR_DEGREE).unwrap();
        assert!((rep.h1_broken.unwrap() - 1.0 / 45f64.sqrt()).abs() < 1e-13);
        // u² has degree 8, beyond the rule
        assert!((rep.l2 - 1.0 / 30.0).abs() < 1e-6);
        let total: f64 = rep.per_element.iter().map(|c| c.1).sum();
        assert!((total - 1.0 / 45.0).abs() < 1e-14);
    }

    #[test]
    fn interpolant_of_linear_has_no_error() {
        let mesh = generate_aniso(3, 4).unwrap();
        let linear = ExactSolution {
            u: Box::new(|p| 2.0 * p.x - p.y + 0.5),
            grad: Box::new(|_| Point2::new(2.0, -1.0)),
        };
        for kind in [SpaceKind::P1, SpaceKind::Cr] {
            let f = FeFunction::interpolate(DofMap::new(&mesh, kind), |p| 2.0 * p.x - p.y + 0.5).unwrap();
            let rep = error_norms(&mesh, &f, &linear, ERROR_DEGREE).unwrap();
            assert!(rep.l2 < 1e-13 && rep.h1_broken.unwrap() < 1e-13);
        }
    }

    #[test]
    fn inf_sup_is_positive_and_stable() {
        let betas: Vec<f64> = [(2, 2), (2, 4), (4, 8)]
            .iter()
            .map(|&(m, n)| inf_sup_constant(&generate_aniso(m, n).unwrap()).unwrap())
            .collect();
        assert!(betas.iter().all(|&b| b > 0.0), "{betas:?}");
        let (lo, hi) = betas.iter().fold((f64::MAX, 0.0f64), |(l, h), &b| (l.min(b), h.max(b)));
        assert!(hi / lo <= 2.0, "{betas:?}");
    }

    #[test]
    fn projection_ratio_is_below_convex_poincare_bound() {
        for mesh in [generate_aniso(4, 8).unwrap(), generate_aniso(8, 64).unwrap()] {
            for g in standard_scalar_fields() {
                let r = pw_projection_check(&mesh, &g).unwrap();
                assert!(r > 0.0 && r <= 1.0 / PI, "{}: {r}", g.name);
            }
        }
    }

    #[test]
    fn mesh_mismatch_is_rejected() {
        let a = generate_aniso(2, 2).unwrap();
        let b = generate_aniso(2, 2).unwrap();
        let f = FeFunction::zeros(DofMap::new(&a, SpaceKind::P1));
        let problem = PoissonProblem::unit_square_benchmark();
        assert!(matches!(
            error_norms(&b, &f, problem.exact().unwrap(), ERROR_DEGREE),
            Err(FemError::MeshMismatch)
        ));
    }

    #[test]
    fn rt0_field_has_zero_interpolation_ratio() {
        let mesh = generate_aniso(4, 8).unwrap();
        let field = VectorField {
            name: "x",
            value: |p| p,
            jacobian: |_| [[1.0, 0.0], [0.0, 1.0]],
            div_gradient: |_| Point2::ZERO,
        };
        let rep = interp_bound_check(&mesh, &field).unwrap();
        assert!(rep.flux_ratio < 1e-12);
        assert_eq!(rep.skipped[1], mesh.num_triangles());
    }

    #[test]
    fn divergence_commutes_with_projection() {
        let mesh = generate_aniso(4, 16).unwrap();
        for field in standard_test_fields() {
            let interp = rt_interpolate(&mesh, field.value).unwrap();
            let div_mean = pi0_project(&mesh, |x| field.divergence(x), ERROR_DEGREE).unwrap();
            for t in 0..mesh.num_triangles() {
                let d = interp.divergence(t).unwrap();
                let m = div_mean.coeffs()[t];
                // exact quadrature only for the cubic field
                let tol = if field.name == "(x^3, y^3)" { 1e-12 } else { 1e-5 };
                assert!((d - m).abs() <= tol * (1.0 + m.abs()), "{}: {d} vs {m}", field.name);
            }
        }
    }

    #[test]
    fn jacobians_match_finite_differences() {
        let h = 1e-6;
        let p = Point2::new(0.37, 0.61);
        for field in standard_test_fields() {
            let j = (field.jacobian)(p);
            let dx = ((field.value)(p + Point2::new(h, 0.0)) - (field.value)(p - Point2::new(h, 0.0))) * (0.5 / h);
            let dy = ((field.value)(p + Point2::new(0.0, h)) - (field.value)(p - Point2::new(0.0, h))) * (0.5 / h);
            assert!((j[0][0] - dx.x).abs() < 1e-7 && (j[1][0] - dx.y).abs() < 1e-7, "{}", field.name);
            assert!((j[0][1] - dy.x).abs() < 1e-7 && (j[1][1] - dy.y).abs() < 1e-7, "{}", field.name);
            let ddx = (field.divergence(p + Point2::new(h, 0.0)) - field.divergence(p - Point2::new(h, 0.0))) / (2.0 * h);
            let ddy = (field.divergence(p + Point2::new(0.0, h)) - field.divergence(p - Point2::new(0.0, h))) / (2.0 * h);
            let g = (field.div_gradient)(p);
            assert!((g.x - ddx).abs() < 1e-6 && (g.y - ddy).abs() < 1e-6, "{}", field.name);
        }
    }
}
