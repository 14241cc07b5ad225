//! Degree-of-freedom maps and finite element functions.
//!
//! Local conventions on a triangle with vertices `x0, x1, x2`:
//!
//! * P1: dof `i` is the value at `x_i`, basis `λ_i`.
//! * CR: dof `i` is the value at the midpoint of edge `i` (opposite `x_i`),
//!   basis `1 - 2λ_i`.
//! * RT0: dof `i` is the normal component on edge `i` with respect to the
//!   global edge normal; the local basis is
//!   `ψ_i = |e_i| / (2|K|) (x - x_i)` times the orientation sign `σ_i`.
//! * P0: one value per triangle.

use crate::error::{FemError, Result};
use crate::geometry::Point2;
use crate::mesh::Mesh;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    P1,
    Cr,
    Rt0,
    P0,
}

impl SpaceKind {
    pub fn local_dim(self) -> usize {
        match self {
            SpaceKind::P0 => 1,
            _ => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DofMap<'m> {
    mesh: &'m Mesh,
    kind: SpaceKind,
    element_dofs: Vec<[usize; 3]>,
    boundary: Vec<bool>,
    free_index: Vec<Option<usize>>,
    free_dofs: Vec<usize>,
}

impl<'m> DofMap<'m> {
    /// Numbering follows vertex, edge or triangle order. Boundary dofs of
    /// P1 and CR are constrained to zero; RT0 and P0 have no constraints.
    pub fn new(mesh: &'m Mesh, kind: SpaceKind) -> Self {
        let (element_dofs, boundary): (Vec<[usize; 3]>, Vec<bool>) = match kind {
            SpaceKind::P1 => (
                mesh.triangles().to_vec(),
                (0..mesh.num_vertices()).map(|v| mesh.is_boundary_vertex(v)).collect(),
            ),
            SpaceKind::Cr | SpaceKind::Rt0 => (
                (0..mesh.num_triangles()).map(|t| mesh.triangle_edges(t)).collect(),
                mesh.edges().iter().map(|e| e.is_boundary()).collect(),
            ),
            SpaceKind::P0 => ((0..mesh.num_triangles()).map(|t| [t; 3]).collect(), vec![false; mesh.num_triangles()]),
        };
        let constrained = matches!(kind, SpaceKind::P1 | SpaceKind::Cr);
        let mut free_index = vec![None; boundary.len()];
        let mut free_dofs = Vec::new();
        for (d, &on_boundary) in boundary.iter().enumerate() {
            if !(constrained && on_boundary) {
                free_index[d] = Some(free_dofs.len());
                free_dofs.push(d);
            }
        }
        Self {
            mesh,
            kind,
            element_dofs,
            boundary,
            free_index,
            free_dofs,
        }
    }

    pub fn mesh(&self) -> &'m Mesh {
        self.mesh
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn num_dofs(&self) -> usize {
        self.boundary.len()
    }

    pub fn num_free(&self) -> usize {
        self.free_dofs.len()
    }

    /// Global dofs of element `t`; only the first entry is meaningful for P0.
    pub fn element_dofs(&self, t: usize) -> [usize; 3] {
        self.element_dofs[t]
    }

    pub fn is_boundary(&self, dof: usize) -> bool {
        self.boundary[dof]
    }

    pub fn free_index(&self, dof: usize) -> Option<usize> {
        self.free_index[dof]
    }

    /// Global dof of each free unknown, in increasing order.
    pub fn free_dofs(&self) -> &[usize] {
        &self.free_dofs
    }

    /// Orientation signs of the local dofs (all +1 except for RT0).
    pub fn signs(&self, t: usize) -> [f64; 3] {
        match self.kind {
            SpaceKind::Rt0 => [0, 1, 2].map(|i| self.mesh.edge_sign(t, i)),
            _ => [1.0; 3],
        }
    }
}

/// Value of a function at a point: scalar spaces or the RT0 vector space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Scalar(f64),
    Vector(Point2),
}

impl Value {
    pub fn scalar(self) -> Option<f64> {
        match self {
            Value::Scalar(v) => Some(v),
            Value::Vector(_) => None,
        }
    }

    pub fn vector(self) -> Option<Point2> {
        match self {
            Value::Vector(v) => Some(v),
            Value::Scalar(_) => None,
        }
    }
}

/// Coefficient vector over a [`DofMap`].
#[derive(Debug, Clone)]
pub struct FeFunction<'m> {
    dofs: DofMap<'m>,
    coeffs: Vec<f64>,
}

impl<'m> FeFunction<'m> {
    pub fn new(dofs: DofMap<'m>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != dofs.num_dofs() {
            return Err(FemError::DimensionMismatch {
                expected: dofs.num_dofs(),
                got: coeffs.len(),
            });
        }
        Ok(Self { dofs, coeffs })
    }

    pub fn zeros(dofs: DofMap<'m>) -> Self {
        let n = dofs.num_dofs();
        Self { dofs, coeffs: vec![0.0; n] }
    }

    /// Nodal interpolant: vertex values (P1), edge-midpoint values (CR) or
    /// centroid values (P0). RT0 interpolation lives in
    /// [`crate::analysis::rt_interpolate`].
    pub fn interpolate<G: Fn(Point2) -> f64>(dofs: DofMap<'m>, g: G) -> Result<Self> {
        let mesh = dofs.mesh();
        let coeffs = match dofs.kind() {
            SpaceKind::P1 => mesh.vertices().iter().map(|&p| g(p)).collect(),
            SpaceKind::Cr => (0..mesh.num_edges()).map(|e| g(mesh.edge_midpoint(e))).collect(),
            SpaceKind::P0 => (0..mesh.num_triangles()).map(|t| g(mesh.triangle(t).centroid())).collect(),
            SpaceKind::Rt0 => return Err(FemError::WrongSpace(SpaceKind::Rt0)),
        };
        Self::new(dofs, coeffs)
    }

    pub fn dofmap(&self) -> &DofMap<'m> {
        &self.dofs
    }

    pub fn mesh(&self) -> &'m Mesh {
        self.dofs.mesh()
    }

    pub fn kind(&self) -> SpaceKind {
        self.dofs.kind()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    fn check_element(&self, t: usize) -> Result<()> {
        let count = self.mesh().num_triangles();
        if t < count {
            Ok(())
        } else {
            Err(FemError::ElementOutOfRange { element: t, count })
        }
    }

    /// Signed local coefficients of element `t`.
    pub fn local_coeffs(&self, t: usize) -> [f64; 3] {
        let g = self.dofs.element_dofs(t);
        let s = self.dofs.signs(t);
        [0, 1, 2].map(|i| s[i] * self.coeffs[g[i]])
    }

    pub fn eval(&self, t: usize, bary: [f64; 3]) -> Result<Value> {
        self.check_element(t)?;
        let c = self.local_coeffs(t);
        Ok(match self.kind() {
            SpaceKind::P1 => Value::Scalar(c[0] * bary[0] + c[1] * bary[1] + c[2] * bary[2]),
            SpaceKind::Cr => Value::Scalar((0..3).map(|i| c[i] * (1.0 - 2.0 * bary[i])).sum()),
            SpaceKind::P0 => Value::Scalar(c[0]),
            SpaceKind::Rt0 => Value::Vector(self.rt0_at(t, self.mesh().triangle(t).point_at(bary))?),
        })
    }

    /// RT0 field of element `t` evaluated at an arbitrary point `x`
    /// (the affine extension when `x` lies outside the element).
    pub fn rt0_at(&self, t: usize, x: Point2) -> Result<Point2> {
        let (a, b) = self.rt0_affine(t)?;
        Ok(x * a + b)
    }

    /// `(a, b)` with the element field equal to `a x + b`.
    pub fn rt0_affine(&self, t: usize) -> Result<(f64, Point2)> {
        self.check_element(t)?;
        if self.kind() != SpaceKind::Rt0 {
            return Err(FemError::WrongSpace(self.kind()));
        }
        let tri = self.mesh().triangle(t);
        let area = tri.area()?;
        let c = self.local_coeffs(t);
        let mut a = 0.0;
        let mut b = Point2::ZERO;
        for i in 0..3 {
            let k = c[i] * tri.edge_length(i) / (2.0 * area);
            a += k;
            b = b - tri.vertices[i] * k;
        }
        Ok((a, b))
    }

    /// Elementwise constant gradient of a P1 or CR function.
    pub fn gradient(&self, t: usize) -> Result<Point2> {
        self.check_element(t)?;
        let scale = match self.kind() {
            SpaceKind::P1 => 1.0,
            SpaceKind::Cr => -2.0,
            SpaceKind::P0 => return Ok(Point2::ZERO),
            SpaceKind::Rt0 => return Err(FemError::WrongSpace(SpaceKind::Rt0)),
        };
        let grads = self.mesh().triangle(t).barycentric_gradients()?;
        let c = self.local_coeffs(t);
        Ok((0..3).fold(Point2::ZERO, |acc, i| acc + grads[i] * (scale * c[i])))
    }

    /// Elementwise constant divergence of an RT0 function.
    pub fn divergence(&self, t: usize) -> Result<f64> {
        self.check_element(t)?;
        if self.kind() != SpaceKind::Rt0 {
            return Err(FemError::WrongSpace(self.kind()));
        }
        let tri = self.mesh().triangle(t);
        let area = tri.area()?;
        let c = self.local_coeffs(t);
        Ok((0..3).map(|i| c[i] * tri.edge_length(i)).sum::<f64>() / area)
    }

    /// Mean value over element `t` (P1, CR, P0).
    pub fn element_mean(&self, t: usize) -> Result<f64> {
        self.eval(t, [1.0 / 3.0; 3])?.scalar().ok_or(FemError::WrongSpace(SpaceKind::Rt0))
    }
}
