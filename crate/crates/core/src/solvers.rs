//! Discrete solutions of `-Δu = f`, `u = 0` on the boundary.
//!
//! The RT0 × P0 mixed solution is not obtained from the saddle-point
//! system. It is reconstructed elementwise from the CR solution with
//! elementwise-mean data `π⁰f`:
//!
//! ```text
//! p_h = ∇ū_CR - (π⁰f / 2) (x - x_K)
//! u_h = π⁰ ū_CR + (π⁰f / 48) Σ_i |x_i - x_K|²
//! ```
//!
//! where `x_K` is the centroid of `K`.

use crate::analysis::pi0_project;
use crate::assembly::{assemble_primal, assemble_primal_piecewise_constant, LinearSystem, LOAD_DEGREE};
use crate::error::{FemError, Result};
use crate::geometry::Point2;
use crate::linalg::{cg_solve, DEFAULT_TOL};
use crate::mesh::Mesh;
use crate::spaces::{DofMap, FeFunction, SpaceKind};

pub type ScalarFn = Box<dyn Fn(Point2) -> f64 + Send + Sync>;
pub type VectorFn = Box<dyn Fn(Point2) -> Point2 + Send + Sync>;

/// Closed-form solution used for error evaluation.
pub struct ExactSolution {
    pub u: ScalarFn,
    pub grad: VectorFn,
}

pub struct PoissonProblem {
    f: ScalarFn,
    exact: Option<ExactSolution>,
}

impl std::fmt::Debug for PoissonProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PoissonProblem")
            .field("has_exact", &self.exact.is_some())
            .finish()
    }
}

impl PoissonProblem {
    pub fn new(f: impl Fn(Point2) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            f: Box::new(f),
            exact: None,
        }
    }

    /// Attaches an exact solution on the unit square; it must vanish on the
    /// boundary (checked at 400 points to 1e-12).
    pub fn with_exact(
        f: impl Fn(Point2) -> f64 + Send + Sync + 'static,
        u: impl Fn(Point2) -> f64 + Send + Sync + 'static,
        grad: impl Fn(Point2) -> Point2 + Send + Sync + 'static,
    ) -> Result<Self> {
        const SAMPLES: usize = 100;
        for k in 0..SAMPLES {
            let s = k as f64 / SAMPLES as f64;
            for p in [
                Point2::new(s, 0.0),
                Point2::new(1.0, s),
                Point2::new(1.0 - s, 1.0),
                Point2::new(0.0, 1.0 - s),
            ] {
                let value = u(p);
                if !(value.abs() <= 1e-12) {
                    return Err(FemError::NonzeroBoundaryValue { x: p.x, y: p.y, value });
                }
            }
        }
        Ok(Self {
            f: Box::new(f),
            exact: Some(ExactSolution {
                u: Box::new(u),
                grad: Box::new(grad),
            }),
        })
    }

    /// `f = 2x(1-x) + 2y(1-y)` with exact solution `u = x(1-x)y(1-y)`.
    pub fn unit_square_benchmark() -> Self {
        Self::with_exact(
            |p| 2.0 * p.x * (1.0 - p.x) + 2.0 * p.y * (1.0 - p.y),
            |p| p.x * (1.0 - p.x) * p.y * (1.0 - p.y),
            |p| {
                Point2::new(
                    (1.0 - 2.0 * p.x) * p.y * (1.0 - p.y),
                    p.x * (1.0 - p.x) * (1.0 - 2.0 * p.y),
                )
            },
        )
        .expect("benchmark solution vanishes on the boundary")
    }

    pub fn f(&self, p: Point2) -> f64 {
        (self.f)(p)
    }

    pub fn exact(&self) -> Option<&ExactSolution> {
        self.exact.as_ref()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    /// Defaults to `20 × dimension`.
    pub max_iter: Option<usize>,
    pub load_degree: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            max_iter: None,
            load_degree: LOAD_DEGREE,
        }
    }
}

/// Solves a reduced system and returns the full coefficient vector.
pub fn solve_system(sys: &LinearSystem, opts: &SolveOptions) -> Result<Vec<f64>> {
    let max_iter = opts.max_iter.unwrap_or(20 * sys.dim().max(1));
    let (x, report) = cg_solve(&sys.matrix, &sys.rhs, opts.tol, max_iter)?;
    if !report.converged {
        return Err(FemError::NotConverged(report));
    }
    Ok(sys.expand(&x))
}

fn solve_primal<'m>(mesh: &'m Mesh, kind: SpaceKind, problem: &PoissonProblem, opts: &SolveOptions) -> Result<FeFunction<'m>> {
    let dofs = DofMap::new(mesh, kind);
    let sys = assemble_primal(&dofs, |p| problem.f(p), opts.load_degree)?;
    let coeffs = solve_system(&sys, opts)?;
    FeFunction::new(dofs, coeffs)
}

/// Conforming P1 Galerkin solution.
pub fn solve_p1<'m>(mesh: &'m Mesh, problem: &PoissonProblem, opts: &SolveOptions) -> Result<FeFunction<'m>> {
    solve_primal(mesh, SpaceKind::P1, problem, opts)
}

/// Crouzeix-Raviart solution; boundary edge values are zero.
pub fn solve_cr<'m>(mesh: &'m Mesh, problem: &PoissonProblem, opts: &SolveOptions) -> Result<FeFunction<'m>> {
    solve_primal(mesh, SpaceKind::Cr, problem, opts)
}

#[derive(Debug, Clone)]
pub struct RtSolution<'m> {
    /// RT0 flux `p_h ≈ ∇u`.
    pub flux: FeFunction<'m>,
    /// P0 scalar `u_h`.
    pub scalar: FeFunction<'m>,
    /// CR solution for the data `π⁰f`.
    pub cr_aux: FeFunction<'m>,
    /// `π⁰f`.
    pub source_mean: FeFunction<'m>,
    /// Largest normal-component jump of the elementwise fields across an
    /// edge, relative to the largest normal component.
    pub max_flux_jump: f64,
}

/// Flux jumps above this fraction of the largest normal component are
/// reported as inconsistent.
const FLUX_JUMP_TOL: f64 = 1e-9;

/// Mixed RT0 × P0 solution via reconstruction from the CR solution.
pub fn solve_rt<'m>(mesh: &'m Mesh, problem: &PoissonProblem, opts: &SolveOptions) -> Result<RtSolution<'m>> {
    let source_mean = pi0_project(mesh, |p| problem.f(p), opts.load_degree.max(1))?;
    let cr_dofs = DofMap::new(mesh, SpaceKind::Cr);
    let sys = assemble_primal_piecewise_constant(&cr_dofs, source_mean.coeffs())?;
    let cr_aux = FeFunction::new(cr_dofs, solve_system(&sys, opts)?)?;
    let rec = reconstruct_mixed(&cr_aux, source_mean.coeffs())?;
    Ok(RtSolution {
        flux: rec.flux,
        scalar: rec.scalar,
        cr_aux,
        source_mean,
        max_flux_jump: rec.max_flux_jump,
    })
}

#[derive(Debug, Clone)]
pub struct Reconstruction<'m> {
    pub flux: FeFunction<'m>,
    pub scalar: FeFunction<'m>,
    pub max_flux_jump: f64,
}

/// Elementwise CR → RT0 × P0 map for elementwise constant data `f_mean`.
pub fn reconstruct_mixed<'m>(cr: &FeFunction<'m>, f_mean: &[f64]) -> Result<Reconstruction<'m>> {
    if cr.kind() != SpaceKind::Cr {
        return Err(FemError::WrongSpace(cr.kind()));
    }
    let mesh = cr.mesh();
    let nt = mesh.num_triangles();
    if f_mean.len() != nt {
        return Err(FemError::DimensionMismatch { expected: nt, got: f_mean.len() });
    }

    // normal component of the local field on each (triangle, local edge)
    let mut local = Vec::with_capacity(nt);
    let mut scalar = Vec::with_capacity(nt);
    for t in 0..nt {
        let tri = mesh.triangle(t);
        let xk = tri.centroid();
        let grad = cr.gradient(t)?;
        let half_f = 0.5 * f_mean[t];
        let normals = mesh.triangle_edges(t).map(|e| {
            let mid = mesh.edge_midpoint(e);
            (grad - (mid - xk) * half_f).dot(mesh.edge_normal(e))
        });
        local.push(normals);
        let spread: f64 = tri.vertices.iter().map(|&v| (v - xk).norm_squared()).sum();
        scalar.push(cr.element_mean(t)? + f_mean[t] / 48.0 * spread);
    }

    let scale = local
        .iter()
        .flat_map(|n| n.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let mut coeffs = vec![f64::NAN; mesh.num_edges()];
    let mut max_jump = 0.0f64;
    for (t, normals) in local.iter().enumerate() {
        for (i, &value) in normals.iter().enumerate() {
            let e = mesh.triangle_edges(t)[i];
            if coeffs[e].is_nan() {
                coeffs[e] = value;
            } else {
                let jump = (coeffs[e] - value).abs();
                max_jump = max_jump.max(jump / scale);
                if jump > FLUX_JUMP_TOL * scale {
                    return Err(FemError::FluxDiscontinuity { edge: e, jump });
                }
            }
        }
    }
    let flux = FeFunction::new(DofMap::new(mesh, SpaceKind::Rt0), coeffs)?;
    let scalar = FeFunction::new(DofMap::new(mesh, SpaceKind::P0), scalar)?;
    Ok(Reconstruction {
        flux,
        scalar,
        max_flux_jump: max_jump,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::{assemble_mixed, assemble_stiffness_full};
    use crate::mesh::generate_aniso;

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn zero_data_gives_zero_solutions() {
        let mesh = generate_aniso(4, 8).unwrap();
        let problem = PoissonProblem::new(|_| 0.0);
        let opts = SolveOptions::default();
        assert!(solve_p1(&mesh, &problem, &opts).unwrap().coeffs().iter().all(|&c| c == 0.0));
        assert!(solve_cr(&mesh, &problem, &opts).unwrap().coeffs().iter().all(|&c| c == 0.0));
        let rt = solve_rt(&mesh, &problem, &opts).unwrap();
        assert!(rt.flux.coeffs().iter().all(|&c| c == 0.0));
        assert!(rt.scalar.coeffs().iter().all(|&c| c == 0.0));
    }

    #[test]
    fn exact_solution_must_vanish_on_boundary() {
        let err = PoissonProblem::with_exact(|_| 0.0, |p| p.x, |_| Point2::new(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, FemError::NonzeroBoundaryValue { .. }));
    }

    #[test]
    fn cr_boundary_values_are_zero() {
        let mesh = generate_aniso(4, 8).unwrap();
        let u = solve_cr(&mesh, &PoissonProblem::unit_square_benchmark(), &SolveOptions::default()).unwrap();
        for (e, edge) in mesh.edges().iter().enumerate() {
            if edge.is_boundary() {
                assert_eq!(u.coeffs()[e], 0.0);
            }
        }
    }

    #[test]
    fn manufactured_discrete_cr_solution_is_recovered() {
        let mesh = generate_aniso(5, 12).unwrap();
        let dofs = DofMap::new(&mesh, SpaceKind::Cr);
        let w: Vec<f64> = (0..mesh.num_edges())
            .map(|e| if dofs.is_boundary(e) { 0.0 } else { ((e * 37) % 11) as f64 / 11.0 - 0.4 })
            .collect();
        let k = assemble_stiffness_full(&dofs).unwrap();
        let kw = k.mul_vec(&w);
        let mut sys = assemble_primal(&dofs, |_| 0.0, 1).unwrap();
        sys.rhs = sys.restrict(&kw);
        let x = solve_system(&sys, &SolveOptions::default()).unwrap();
        for (a, b) in x.iter().zip(&w) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn cr_energy_identity() {
        let mesh = generate_aniso(6, 16).unwrap();
        let problem = PoissonProblem::unit_square_benchmark();
        let u = solve_cr(&mesh, &problem, &SolveOptions::default()).unwrap();
        let dofs = u.dofmap().clone();
        let k = assemble_stiffness_full(&dofs).unwrap();
        let energy = dot(u.coeffs(), &k.mul_vec(u.coeffs()));
        let sys = assemble_primal(&dofs, |p| problem.f(p), LOAD_DEGREE).unwrap();
        let load = dot(&sys.rhs, &sys.restrict(u.coeffs()));
        assert!((energy - load).abs() <= 1e-10 * energy);
    }

    #[test]
    fn rt_reconstruction_satisfies_mixed_system() {
        let mesh = generate_aniso(4, 8).unwrap();
        let problem = PoissonProblem::unit_square_benchmark();
        let rt = solve_rt(&mesh, &problem, &SolveOptions::default()).unwrap();
        let sys = assemble_mixed(&mesh, |p| problem.f(p), LOAD_DEGREE).unwrap();
        let res = sys.residual(rt.flux.coeffs(), rt.scalar.coeffs());
        assert!(res.flux <= 1e-9, "{res:?}");
        assert!(res.scalar <= 1e-9, "{res:?}");
        for t in 0..mesh.num_triangles() {
            let d = rt.flux.divergence(t).unwrap();
            let f = rt.source_mean.coeffs()[t];
            assert!((d + f).abs() <= 1e-11 * f.abs().max(1e-300));
        }
    }
}
