use thiserror::Error;

use crate::linalg::SolveReport;

pub type Result<T, E = FemError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum FemError {
    #[error("degenerate triangle (area {area:e}, diameter {diameter:e})")]
    DegenerateTriangle { area: f64, diameter: f64 },

    #[error("no quadrature rule of degree {0} (supported: 1..=6)")]
    UnsupportedQuadrature(usize),

    #[error("invalid mesh parameters: {0}")]
    InvalidParameters(String),

    #[error("triangle {triangle} references vertex {vertex}, but the mesh has {count} vertices")]
    VertexOutOfRange {
        triangle: usize,
        vertex: usize,
        count: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("element {element} out of range ({count} elements)")]
    ElementOutOfRange { element: usize, count: usize },

    #[error("operation not defined for {0:?} functions")]
    WrongSpace(crate::spaces::SpaceKind),

    #[error("function and mesh do not match")]
    MeshMismatch,

    #[error("zero diagonal entry in row {0}")]
    ZeroDiagonal(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("conjugate gradients did not converge: {0:?}")]
    NotConverged(SolveReport),

    #[error("dense computation needs {dofs} unknowns, limit is {limit}")]
    TooLarge { dofs: usize, limit: usize },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("reconstructed flux jumps by {jump:e} across edge {edge}")]
    FluxDiscontinuity { edge: usize, jump: f64 },

    #[error("exact solution does not vanish on the boundary (|u| = {value:e} at ({x}, {y}))")]
    NonzeroBoundaryValue { x: f64, y: f64, value: f64 },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}
