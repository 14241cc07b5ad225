//! Element matrices and global assembly of the primal (P1, CR) and mixed
//! (RT0 × P0) systems.

use crate::error::{FemError, Result};
use crate::geometry::{quad_rule, Point2, QuadRule, Triangle};
use crate::linalg::CsrMatrix;
use crate::mesh::Mesh;
use crate::spaces::{DofMap, SpaceKind};

/// Load quadrature degree for the quadratic benchmark data.
pub const LOAD_DEGREE: usize = 3;
/// RT0 mass entries are quadratic.
pub const MASS_DEGREE: usize = 2;

/// `K_ij = |K| ∇φ_i · ∇φ_j`. The CR matrix is four times the P1 one.
pub fn element_stiffness(kind: SpaceKind, t: &Triangle) -> Result<[[f64; 3]; 3]> {
    let scale = match kind {
        SpaceKind::P1 => 1.0,
        SpaceKind::Cr => 4.0,
        other => return Err(FemError::WrongSpace(other)),
    };
    let area = t.area()?;
    let g = t.barycentric_gradients()?;
    let mut k = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            k[i][j] = scale * area * g[i].dot(g[j]);
        }
    }
    Ok(k)
}

/// `b_i = ∫_K f φ_i` by quadrature.
pub fn element_load<F>(kind: SpaceKind, t: &Triangle, f: F, rule: &QuadRule) -> Result<[f64; 3]>
where
    F: Fn(Point2) -> f64,
{
    let basis: fn(f64) -> f64 = match kind {
        SpaceKind::P1 => |l| l,
        SpaceKind::Cr => |l| 1.0 - 2.0 * l,
        other => return Err(FemError::WrongSpace(other)),
    };
    let area = t.area()?;
    let mut b = [0.0; 3];
    for (bary, w) in rule.iter() {
        let fx = f(t.point_at(*bary)) * w * area;
        for i in 0..3 {
            b[i] += fx * basis(bary[i]);
        }
    }
    Ok(b)
}

/// Reduced system on the free dofs of a P1 or CR space.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub matrix: CsrMatrix,
    pub rhs: Vec<f64>,
    /// Global dof of each unknown.
    pub free_dofs: Vec<usize>,
    pub num_dofs: usize,
}

impl LinearSystem {
    pub fn dim(&self) -> usize {
        self.free_dofs.len()
    }

    /// Full coefficient vector with zero boundary values.
    pub fn expand(&self, x: &[f64]) -> Vec<f64> {
        let mut full = vec![0.0; self.num_dofs];
        for (&g, &v) in self.free_dofs.iter().zip(x) {
            full[g] = v;
        }
        full
    }

    /// Restriction of a full coefficient vector to the free dofs.
    pub fn restrict(&self, full: &[f64]) -> Vec<f64> {
        self.free_dofs.iter().map(|&g| full[g]).collect()
    }
}

/// Assembles with an element-load callback; element-major and
/// deterministic.
pub fn assemble_primal_with<L>(dofs: &DofMap<'_>, mut load: L) -> Result<LinearSystem>
where
    L: FnMut(usize, &Triangle) -> Result<[f64; 3]>,
{
    let kind = dofs.kind();
    if !matches!(kind, SpaceKind::P1 | SpaceKind::Cr) {
        return Err(FemError::WrongSpace(kind));
    }
    let mesh = dofs.mesh();
    let n = dofs.num_free();
    let mut triplets = Vec::with_capacity(9 * mesh.num_triangles());
    let mut rhs = vec![0.0; n];
    for t in 0..mesh.num_triangles() {
        let tri = mesh.triangle(t);
        let k = element_stiffness(kind, &tri)?;
        let b = load(t, &tri)?;
        let g = dofs.element_dofs(t).map(|d| dofs.free_index(d));
        for i in 0..3 {
            let Some(gi) = g[i] else { continue };
            rhs[gi] += b[i];
            for j in 0..3 {
                if let Some(gj) = g[j] {
                    triplets.push((gi, gj, k[i][j]));
                }
            }
        }
    }
    Ok(LinearSystem {
        matrix: CsrMatrix::from_triplets(n, n, &triplets),
        rhs,
        free_dofs: dofs.free_dofs().to_vec(),
        num_dofs: dofs.num_dofs(),
    })
}

pub fn assemble_primal<F>(dofs: &DofMap<'_>, f: F, degree: usize) -> Result<LinearSystem>
where
    F: Fn(Point2) -> f64,
{
    let rule = quad_rule(degree)?;
    let kind = dofs.kind();
    assemble_primal_with(dofs, |_, tri| element_load(kind, tri, &f, &rule))
}

/// Load from elementwise constant data: `∫_K c φ_i = c |K| / 3` for both
/// P1 and CR bases.
pub fn assemble_primal_piecewise_constant(dofs: &DofMap<'_>, values: &[f64]) -> Result<LinearSystem> {
    if values.len() != dofs.mesh().num_triangles() {
        return Err(FemError::DimensionMismatch {
            expected: dofs.mesh().num_triangles(),
            got: values.len(),
        });
    }
    assemble_primal_with(dofs, |t, tri| {
        let b = values[t] * tri.area()? / 3.0;
        Ok([b; 3])
    })
}

/// Stiffness matrix over all dofs, boundary included.
pub fn assemble_stiffness_full(dofs: &DofMap<'_>) -> Result<CsrMatrix> {
    let kind = dofs.kind();
    let mesh = dofs.mesh();
    let mut triplets = Vec::with_capacity(9 * mesh.num_triangles());
    for t in 0..mesh.num_triangles() {
        let k = element_stiffness(kind, &mesh.triangle(t))?;
        let g = dofs.element_dofs(t);
        for i in 0..3 {
            for j in 0..3 {
                triplets.push((g[i], g[j], k[i][j]));
            }
        }
    }
    let n = dofs.num_dofs();
    Ok(CsrMatrix::from_triplets(n, n, &triplets))
}

/// Discrete mixed problem
///
/// ```text
/// M p + Bᵀ u = rhs_flux
/// B p        = -rhs_scalar
/// ```
///
/// with `M_ij = ∫ ψ_i·ψ_j`, `B_Kj = ∫_K div ψ_j` and `rhs_scalar_K = ∫_K f`.
#[derive(Debug, Clone)]
pub struct MixedSystem {
    pub mass: CsrMatrix,
    pub div_op: CsrMatrix,
    pub rhs_flux: Vec<f64>,
    pub rhs_scalar: Vec<f64>,
    /// Element areas (the P0 mass matrix diagonal).
    pub areas: Vec<f64>,
}

/// Relative residuals of the two mixed equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedResidual {
    pub flux: f64,
    pub scalar: f64,
}

impl MixedSystem {
    /// Residuals of `(p, u)` scaled by the size of the terms involved.
    pub fn residual(&self, p: &[f64], u: &[f64]) -> MixedResidual {
        let mp = self.mass.mul_vec(p);
        let btu = self.div_op.transpose().mul_vec(u);
        let bp = self.div_op.mul_vec(p);
        let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let r1: Vec<f64> = (0..p.len()).map(|i| mp[i] + btu[i] - self.rhs_flux[i]).collect();
        let r2: Vec<f64> = (0..u.len()).map(|k| bp[k] + self.rhs_scalar[k]).collect();
        let s1 = norm(&mp).max(norm(&btu)).max(norm(&self.rhs_flux)).max(f64::MIN_POSITIVE);
        let s2 = norm(&bp).max(norm(&self.rhs_scalar)).max(f64::MIN_POSITIVE);
        MixedResidual {
            flux: norm(&r1) / s1,
            scalar: norm(&r2) / s2,
        }
    }
}

pub fn element_rt_mass(t: &Triangle, signs: [f64; 3], rule: &QuadRule) -> Result<[[f64; 3]; 3]> {
    let area = t.area()?;
    let c = [0, 1, 2].map(|i| signs[i] * t.edge_length(i) / (2.0 * area));
    let mut m = [[0.0; 3]; 3];
    for (bary, w) in rule.iter() {
        let x = t.point_at(*bary);
        let psi = [0, 1, 2].map(|i| (x - t.vertices[i]) * c[i]);
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += w * area * psi[i].dot(psi[j]);
            }
        }
    }
    Ok(m)
}

pub fn assemble_mixed<F>(mesh: &Mesh, f: F, degree: usize) -> Result<MixedSystem>
where
    F: Fn(Point2) -> f64,
{
    let rule = quad_rule(degree)?;
    let mass_rule = quad_rule(MASS_DEGREE)?;
    let rt = DofMap::new(mesh, SpaceKind::Rt0);
    let (ne, nt) = (mesh.num_edges(), mesh.num_triangles());
    let mut mass = Vec::with_capacity(9 * nt);
    let mut div = Vec::with_capacity(3 * nt);
    let mut rhs_scalar = vec![0.0; nt];
    let mut areas = vec![0.0; nt];
    for t in 0..nt {
        let tri = mesh.triangle(t);
        let signs = rt.signs(t);
        let g = rt.element_dofs(t);
        let m = element_rt_mass(&tri, signs, &mass_rule)?;
        for i in 0..3 {
            for j in 0..3 {
                mass.push((g[i], g[j], m[i][j]));
            }
            div.push((t, g[i], signs[i] * tri.edge_length(i)));
        }
        areas[t] = tri.area()?;
        rhs_scalar[t] = crate::geometry::integrate(&tri, &rule, &f)?;
    }
    Ok(MixedSystem {
        mass: CsrMatrix::from_triplets(ne, ne, &mass),
        div_op: CsrMatrix::from_triplets(nt, ne, &div),
        rhs_flux: vec![0.0; ne],
        rhs_scalar,
        areas,
    })
}
