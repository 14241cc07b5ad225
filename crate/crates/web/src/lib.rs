//! Browser bindings: mesh generation, P1 / CR / RT solves of the benchmark
//! problem, and the single-triangle sharpness example.

use circumfem::analysis::{babuska_aziz, error_norms, sharpness_case, ERROR_DEGREE};
use circumfem::experiment::Method;
use circumfem::mesh::{generate_aniso, r_paper, stats, Mesh};
use circumfem::solvers::{solve_cr, solve_p1, solve_rt, PoissonProblem, SolveOptions};
use circumfem::spaces::Value;
use circumfem::FemError;
use wasm_bindgen::prelude::*;

/// Largest mesh the page will build.
pub const MAX_ELEMENTS: usize = 200_000;

#[wasm_bindgen]
pub struct MeshView {
    coords: Vec<f64>,
    triangles: Vec<u32>,
    circumradii: Vec<f64>,
    pub h: f64,
    pub r_mesh: f64,
    pub r_paper: f64,
    pub r_threshold: f64,
    pub elements: usize,
    pub vertices: usize,
    pub edges: usize,
}

#[wasm_bindgen]
impl MeshView {
    /// Interleaved `x0, y0, x1, y1, ...`.
    #[wasm_bindgen(getter)]
    pub fn coords(&self) -> Vec<f64> {
        self.coords.clone()
    }

    /// Three vertex indices per element.
    #[wasm_bindgen(getter)]
    pub fn triangles(&self) -> Vec<u32> {
        self.triangles.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn circumradii(&self) -> Vec<f64> {
        self.circumradii.clone()
    }
}

#[wasm_bindgen]
pub struct SolveView {
    corner_values: Vec<f64>,
    exact_corner_values: Vec<f64>,
    pub error: f64,
    pub error_per_h: f64,
    pub error_per_r: f64,
}

#[wasm_bindgen]
impl SolveView {
    /// Discrete solution at the three corners of each element.
    #[wasm_bindgen(getter)]
    pub fn corner_values(&self) -> Vec<f64> {
        self.corner_values.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn exact_corner_values(&self) -> Vec<f64> {
        self.exact_corner_values.clone()
    }
}

#[wasm_bindgen]
pub struct SharpnessView {
    pub e0_sq: f64,
    pub e1_sq: f64,
    pub e0_sq_closed: f64,
    pub e1_sq_closed: f64,
    pub ratio: f64,
    pub lower_bound: f64,
    pub circumradius: f64,
    pub max_flux: f64,
}

fn checked_mesh(m: usize, n: usize) -> Result<Mesh, FemError> {
    if m == 0 || n == 0 || !n.is_multiple_of(2) {
        return Err(FemError::InvalidParameters(format!("need M > 0 and even N > 0, got ({m},{n})")));
    }
    let elements = (2 * m + 1).saturating_mul(n);
    if elements > MAX_ELEMENTS {
        return Err(FemError::TooLarge {
            dofs: elements,
            limit: MAX_ELEMENTS,
        });
    }
    generate_aniso(m, n)
}

pub fn mesh_view(m: usize, n: usize) -> Result<MeshView, FemError> {
    let mesh = checked_mesh(m, n)?;
    let st = stats(&mesh)?;
    let coords = mesh.vertices().iter().flat_map(|p| [p.x, p.y]).collect();
    let triangles = mesh.triangles().iter().flatten().map(|&v| v as u32).collect();
    let circumradii = (0..mesh.num_triangles())
        .map(|t| mesh.triangle(t).circumradius())
        .collect::<Result<_, _>>()?;
    Ok(MeshView {
        coords,
        triangles,
        circumradii,
        h: st.h,
        r_mesh: st.r,
        r_paper: r_paper(m, n),
        r_threshold: babuska_aziz().r_threshold,
        elements: st.elements,
        vertices: st.vertices,
        edges: st.edges,
    })
}

pub fn solve_view(method: &str, m: usize, n: usize) -> Result<SolveView, FemError> {
    let method: Method = method.parse()?;
    let mesh = checked_mesh(m, n)?;
    let st = stats(&mesh)?;
    let problem = PoissonProblem::unit_square_benchmark();
    let exact = problem.exact().expect("benchmark has an exact solution");
    let opts = SolveOptions::default();
    let (scalar, error) = match method {
        Method::P1 | Method::Cr => {
            let u = if method == Method::P1 {
                solve_p1(&mesh, &problem, &opts)?
            } else {
                solve_cr(&mesh, &problem, &opts)?
            };
            let e = error_norms(&mesh, &u, exact, ERROR_DEGREE)?.h1_broken.unwrap_or(f64::NAN);
            (u, e)
        }
        Method::Rt => {
            let rt = solve_rt(&mesh, &problem, &opts)?;
            let e = error_norms(&mesh, &rt.flux, exact, ERROR_DEGREE)?.l2;
            (rt.scalar, e)
        }
    };
    let corners = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut corner_values = Vec::with_capacity(3 * mesh.num_triangles());
    let mut exact_corner_values = Vec::with_capacity(3 * mesh.num_triangles());
    for t in 0..mesh.num_triangles() {
        let tri = mesh.triangle(t);
        for bary in corners {
            match scalar.eval(t, bary)? {
                Value::Scalar(v) => corner_values.push(v),
                Value::Vector(_) => return Err(FemError::WrongSpace(scalar.kind())),
            }
            exact_corner_values.push((exact.u)(tri.point_at(bary)));
        }
    }
    Ok(SolveView {
        corner_values,
        exact_corner_values,
        error,
        error_per_h: error / st.h,
        error_per_r: error / st.r,
    })
}

pub fn sharpness_view(h: f64) -> Result<SharpnessView, FemError> {
    let s = sharpness_case(h)?;
    Ok(SharpnessView {
        e0_sq: s.e0_sq,
        e1_sq: s.e1_sq,
        e0_sq_closed: s.e0_sq_closed,
        e1_sq_closed: s.e1_sq_closed,
        ratio: s.ratio,
        lower_bound: s.lower_bound(),
        circumradius: s.circumradius,
        max_flux: s.fluxes.iter().fold(0.0, |a: f64, f| a.max(f.abs())),
    })
}

fn js_err(e: FemError) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = generateMesh)]
pub fn generate_mesh_js(m: usize, n: usize) -> Result<MeshView, JsError> {
    mesh_view(m, n).map_err(js_err)
}

/// `method` is one of `p1`, `cr`, `rt`.
#[wasm_bindgen(js_name = solve)]
pub fn solve_js(method: &str, m: usize, n: usize) -> Result<SolveView, JsError> {
    solve_view(method, m, n).map_err(js_err)
}

#[wasm_bindgen(js_name = sharpness)]
pub fn sharpness_js(h: f64) -> Result<SharpnessView, JsError> {
    sharpness_view(h).map_err(js_err)
}

#[wasm_bindgen(js_name = evenNFor)]
pub fn even_n_for_js(m: usize, alpha: f64) -> usize {
    circumfem::mesh::even_n_for(m, alpha)
}
