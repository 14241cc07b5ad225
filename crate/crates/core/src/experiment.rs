//! Convergence study on the anisotropic mesh family, table emitters, and
//! the named verification suites.

use std::fmt;
use std::str::FromStr;

use crate::analysis::{
    babuska_aziz, error_norms, inf_sup_constant, interp_bound_check, pw_projection_check, sharpness_case,
    standard_scalar_fields, standard_test_fields, ERROR_DEGREE,
};
use crate::assembly::{assemble_mixed, LOAD_DEGREE};
use crate::error::{FemError, Result};
use crate::geometry::{integrate, quad_rule};
use crate::linalg::DEFAULT_TOL;
use crate::mesh::{even_n_for, generate_aniso, r_paper, stats, validate, Mesh, MeshStats};
use crate::solvers::{solve_cr, solve_p1, solve_rt, PoissonProblem, SolveOptions};

pub const DEFAULT_ALPHA: f64 = 1.5;
pub const DEFAULT_M_LIST: [usize; 4] = [10, 20, 30, 40];
pub const FULL_M_LIST: [usize; 10] = [10, 20, 30, 40, 50, 60, 70, 80, 90, 100];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    P1,
    Cr,
    Rt,
}

impl FromStr for Method {
    type Err = FemError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Ok(Method::P1),
            "cr" => Ok(Method::Cr),
            "rt" => Ok(Method::Rt),
            other => Err(FemError::InvalidParameters(format!("unknown method `{other}` (expected p1, cr or rt)"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::P1 => "p1",
            Method::Cr => "cr",
            Method::Rt => "rt",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub method: Method,
    pub m_list: Vec<usize>,
    pub alpha: f64,
    /// Fixes `N` for every row instead of deriving it from `alpha`.
    pub n_override: Option<usize>,
    pub tol: f64,
    pub quad_degree: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            method: Method::P1,
            m_list: DEFAULT_M_LIST.to_vec(),
            alpha: DEFAULT_ALPHA,
            n_override: None,
            tol: DEFAULT_TOL,
            quad_degree: LOAD_DEGREE,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(FemError::InvalidParameters(msg));
        if self.m_list.is_empty() {
            return bad("M list is empty".into());
        }
        if self.m_list.windows(2).any(|w| w[0] >= w[1]) {
            return bad(format!("M list must be strictly ascending: {:?}", self.m_list));
        }
        if self.m_list[0] == 0 {
            return bad("M must be positive".into());
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return bad(format!("alpha must be positive, got {}", self.alpha));
        }
        if let Some(n) = self.n_override {
            if n == 0 || n % 2 != 0 {
                return bad(format!("N must be positive and even, got {n}"));
            }
        }
        if !(self.tol > 0.0) {
            return bad(format!("tolerance must be positive, got {}", self.tol));
        }
        quad_rule(self.quad_degree)?;
        Ok(())
    }

    pub fn n_for(&self, m: usize) -> usize {
        self.n_override.unwrap_or_else(|| even_n_for(m, self.alpha))
    }

    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            tol: self.tol,
            max_iter: None,
            load_degree: self.quad_degree,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub m: usize,
    pub n: usize,
    pub h: f64,
    pub r_mesh: f64,
    pub r_paper: f64,
    /// `|u - u_h|_1` (p1), `‖u - u_h‖_h` (cr) or `|∇u - p_h|_0` (rt).
    pub error: f64,
    /// `|u - u_h|_0` for the rt scalar.
    pub error_u: Option<f64>,
}

impl ConvergenceRow {
    pub fn err_per_h(&self) -> f64 {
        self.error / self.h
    }

    pub fn err_per_r_mesh(&self) -> f64 {
        self.error / self.r_mesh
    }

    pub fn err_per_r_paper(&self) -> f64 {
        self.error / self.r_paper
    }
}

/// Solves the benchmark problem on `generate_aniso(m, n)` and measures the
/// error of `method`.
pub fn run_row(method: Method, m: usize, n: usize, opts: &SolveOptions) -> Result<ConvergenceRow> {
    let mesh = generate_aniso(m, n)?;
    let st = stats(&mesh)?;
    let problem = PoissonProblem::unit_square_benchmark();
    let exact = problem.exact().expect("benchmark has an exact solution");
    let (error, error_u) = match method {
        Method::P1 => {
            let u = solve_p1(&mesh, &problem, opts)?;
            (error_norms(&mesh, &u, exact, ERROR_DEGREE)?.h1_broken.unwrap_or(f64::NAN), None)
        }
        Method::Cr => {
            let u = solve_cr(&mesh, &problem, opts)?;
            (error_norms(&mesh, &u, exact, ERROR_DEGREE)?.h1_broken.unwrap_or(f64::NAN), None)
        }
        Method::Rt => {
            let rt = solve_rt(&mesh, &problem, opts)?;
            let p = error_norms(&mesh, &rt.flux, exact, ERROR_DEGREE)?.l2;
            let u = error_norms(&mesh, &rt.scalar, exact, ERROR_DEGREE)?.l2;
            (p, Some(u))
        }
    };
    Ok(ConvergenceRow {
        m,
        n,
        h: st.h,
        r_mesh: st.r,
        r_paper: r_paper(m, n),
        error,
        error_u,
    })
}

#[derive(Debug)]
pub struct TableRun {
    pub method: Method,
    /// Successful rows in ascending `M`.
    pub rows: Vec<ConvergenceRow>,
    /// Rows that failed, with the cause.
    pub failures: Vec<(usize, FemError)>,
}

/// Runs every row of the sweep, one thread per row.
pub fn run_table(config: &RunConfig) -> Result<TableRun> {
    config.validate()?;
    let opts = config.solve_options();
    let outcomes: Vec<(usize, Result<ConvergenceRow>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = config
            .m_list
            .iter()
            .map(|&m| {
                let n = config.n_for(m);
                (m, scope.spawn(move || run_row(config.method, m, n, &opts)))
            })
            .collect();
        handles
            .into_iter()
            .map(|(m, h)| (m, h.join().expect("row worker panicked")))
            .collect()
    });
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (m, outcome) in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(e) => failures.push((m, e)),
        }
    }
    Ok(TableRun {
        method: config.method,
        rows,
        failures,
    })
}

pub const CSV_HEADER: &str = "M,N,h,R_mesh,R_paper,error,err_per_h,err_per_Rpaper";

/// Decimal notation with 12 significant digits.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn numeric_cells(row: &ConvergenceRow) -> Vec<f64> {
    let mut cells = vec![row.h, row.r_mesh, row.r_paper, row.error, row.err_per_h(), row.err_per_r_paper()];
    cells.extend(row.error_u);
    cells
}

pub fn to_csv(rows: &[ConvergenceRow], method: Method) -> String {
    let mut out = String::from(CSV_HEADER);
    if method == Method::Rt {
        out.push_str(",error_u");
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format!("{},{}", row.m, row.n));
        for v in numeric_cells(row) {
            out.push(',');
            out.push_str(&format_sig12(v));
        }
        out.push('\n');
    }
    out
}

/// Markdown table with 7 decimal places.
pub fn to_markdown(rows: &[ConvergenceRow], method: Method) -> String {
    let mut header = vec!["M", "N", "h", "R_mesh", "R_paper", "error", "err/h", "err/R_paper"];
    if method == Method::Rt {
        header.push("error_u");
    }
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---:|".repeat(header.len())));
    for row in rows {
        let mut cells = vec![row.m.to_string(), row.n.to_string()];
        cells.extend(numeric_cells(row).into_iter().map(|v| format!("{v:.7}")));
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Mesh,
    Quadrature,
    Reconstruction,
    Interpolation,
    Sharpness,
    Constants,
    InfSup,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Mesh,
        Suite::Quadrature,
        Suite::Reconstruction,
        Suite::Interpolation,
        Suite::Sharpness,
        Suite::Constants,
        Suite::InfSup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mesh => "mesh",
            Suite::Quadrature => "quadrature",
            Suite::Reconstruction => "reconstruction",
            Suite::Interpolation => "interpolation",
            Suite::Sharpness => "sharpness",
            Suite::Constants => "constants",
            Suite::InfSup => "infsup",
        }
    }
}

impl FromStr for Suite {
    type Err = FemError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| FemError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
    Above,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub relation: Relation,
    pub allowed: f64,
}

impl Check {
    pub fn at_most(name: impl Into<String>, measured: f64, allowed: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            relation: Relation::AtMost,
            allowed,
        }
    }

    pub fn at_least(name: impl Into<String>, measured: f64, allowed: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            relation: Relation::AtLeast,
            allowed,
        }
    }

    pub fn above(name: impl Into<String>, measured: f64, allowed: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            relation: Relation::Above,
            allowed,
        }
    }

    pub fn passed(&self) -> bool {
        match self.relation {
            Relation::AtMost => self.measured <= self.allowed,
            Relation::AtLeast => self.measured >= self.allowed,
            Relation::Above => self.measured > self.allowed,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::Above => ">",
        };
        write!(
            f,
            "[{}] {}: measured {:.6e}, allowed {} {:.6e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.measured,
            op,
            self.allowed
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(
            f,
            "suite {}: {} checks, {} failed: {}",
            self.suite,
            self.checks.len(),
            failed,
            if failed == 0 { "PASS" } else { "FAIL" }
        )
    }
}

pub fn verify(suite: Suite) -> Result<VerifyReport> {
    let checks = match suite {
        Suite::Mesh => verify_mesh()?,
        Suite::Quadrature => verify_quadrature()?,
        Suite::Reconstruction => verify_reconstruction()?,
        Suite::Interpolation => verify_interpolation()?,
        Suite::Sharpness => verify_sharpness()?,
        Suite::Constants => verify_constants(),
        Suite::InfSup => verify_inf_sup()?,
    };
    Ok(VerifyReport { suite, checks })
}

fn verify_mesh() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (m, n) in [(4, 20), (10, 32), (20, 90), (40, 252)] {
        let mesh = generate_aniso(m, n)?;
        let (t, v, e) = (
            mesh.num_triangles() as f64,
            mesh.num_vertices() as f64,
            mesh.num_edges() as f64,
        );
        let (mf, nf) = (m as f64, n as f64);
        let tag = format!("({m},{n})");
        checks.push(Check::at_most(format!("{tag} |T - (2M+1)N|"), (t - (2.0 * mf + 1.0) * nf).abs(), 0.0));
        checks.push(Check::at_most(format!("{tag} |V - (MN+M+3N/2+1)|"), (v - (mf * nf + mf + 1.5 * nf + 1.0)).abs(), 0.0));
        checks.push(Check::at_most(format!("{tag} |E - (3MN+M+5N/2)|"), (e - (3.0 * mf * nf + mf + 2.5 * nf)).abs(), 0.0));
        checks.push(Check::at_most(format!("{tag} |V-E+T-1|"), (v - e + t - 1.0).abs(), 0.0));
        checks.push(Check::at_most(format!("{tag} violations"), validate(&mesh).len() as f64, 0.0));
    }
    let st = stats(&generate_aniso(10, 32)?)?;
    checks.push(Check::at_most("(10,32) |h - 0.1|", (st.h - 0.1).abs(), 1e-12));
    checks.push(Check::at_most("(10,32) |R_mesh - 0.055625|", (st.r - 0.055625).abs(), 1e-12));
    Ok(checks)
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

fn verify_quadrature() -> Result<Vec<Check>> {
    let reference = Mesh::reference_triangle().triangle(0);
    let mut checks = Vec::new();
    for degree in 1..=6u32 {
        let rule = quad_rule(degree as usize)?;
        let mut worst = 0.0f64;
        for a in 0..=degree {
            for b in 0..=degree - a {
                let exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                let got = integrate(&reference, &rule, |p| p.x.powi(a as i32) * p.y.powi(b as i32))?;
                worst = worst.max((got - exact).abs() / exact);
            }
        }
        checks.push(Check::at_most(format!("degree {degree} monomials, max rel error"), worst, 1e-13));
        let weight_sum: f64 = rule.weights.iter().sum();
        checks.push(Check::at_most(format!("degree {degree} |sum w - 1|"), (weight_sum - 1.0).abs(), 1e-14));
        let min_weight = rule.weights.iter().copied().fold(f64::INFINITY, f64::min);
        checks.push(Check::above(format!("degree {degree} min weight"), min_weight, 0.0));
    }
    Ok(checks)
}

fn verify_reconstruction() -> Result<Vec<Check>> {
    let problem = PoissonProblem::unit_square_benchmark();
    let opts = SolveOptions::default();
    let mut checks = Vec::new();
    for (m, n) in [(4, 8), (10, 32)] {
        let mesh = generate_aniso(m, n)?;
        let rt = solve_rt(&mesh, &problem, &opts)?;
        let f_mean = rt.source_mean.coeffs();
        let scale = f_mean.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let mut div_residual = 0.0f64;
        for (t, fm) in f_mean.iter().enumerate() {
            div_residual = div_residual.max((rt.flux.divergence(t)? + fm).abs() / scale);
        }
        let sys = assemble_mixed(&mesh, |p| problem.f(p), opts.load_degree)?;
        let res = sys.residual(rt.flux.coeffs(), rt.scalar.coeffs());
        let tag = format!("({m},{n})");
        checks.push(Check::at_most(format!("{tag} max |div p_h + pi0 f| / max |pi0 f|"), div_residual, 1e-11));
        checks.push(Check::at_most(format!("{tag} mixed residual, flux rows"), res.flux, 1e-9));
        checks.push(Check::at_most(format!("{tag} mixed residual, scalar rows"), res.scalar, 1e-9));
        checks.push(Check::at_most(format!("{tag} relative normal flux jump"), rt.max_flux_jump, 1e-10));
    }
    Ok(checks)
}

fn verify_interpolation() -> Result<Vec<Check>> {
    let constants = babuska_aziz();
    let mut checks = Vec::new();
    for (m, n) in [(8, 32), (8, 128)] {
        let mesh = generate_aniso(m, n)?;
        for field in standard_test_fields() {
            let rep = interp_bound_check(&mesh, &field)?;
            let tag = format!("({m},{n}) {}", field.name);
            checks.push(Check::at_most(format!("{tag} |q - Iq|_0 / (R |q|_1)"), rep.flux_ratio, constants.c2_2));
            checks.push(Check::at_most(format!("{tag} |div(q - Iq)|_0 / (h |div q|_1)"), rep.div_ratio, 1.0));
        }
        for g in standard_scalar_fields() {
            let ratio = pw_projection_check(&mesh, &g)?;
            checks.push(Check::at_most(
                format!("({m},{n}) {} |g - pi0 g|_0 / (h |g|_1)", g.name),
                ratio,
                std::f64::consts::FRAC_1_PI,
            ));
        }
    }
    Ok(checks)
}

fn verify_sharpness() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for h in [0.05, 0.1, 0.5, 1.0] {
        let s = sharpness_case(h)?;
        let flux = s.fluxes.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        checks.push(Check::at_most(format!("h={h} max |flux of Iq|"), flux, 1e-13));
        checks.push(Check::at_most(
            format!("h={h} |q-Iq|_0^2 relative deviation"),
            (s.e0_sq - s.e0_sq_closed).abs() / s.e0_sq_closed,
            1e-10,
        ));
        checks.push(Check::at_most(
            format!("h={h} |q-Iq|_1^2 relative deviation"),
            (s.e1_sq - s.e1_sq_closed).abs() / s.e1_sq_closed,
            1e-10,
        ));
        checks.push(Check::at_least(format!("h={h} ratio vs R/(2 sqrt 6)"), s.ratio, s.lower_bound()));
    }
    Ok(checks)
}

fn verify_constants() -> Vec<Check> {
    let c = babuska_aziz();
    vec![
        Check::at_most("|A2 - 0.49291|", (c.a2 - 0.49291).abs(), 1e-5),
        Check::at_most("|C2_2 - 2.7883|", (c.c2_2 - 2.7883).abs(), 1e-4),
        Check::at_most("|1/A2 + tan(1/A2)|", c.residual(), 1e-10),
    ]
}

fn verify_inf_sup() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut betas = Vec::new();
    for (m, n) in [(2, 4), (4, 8), (8, 16)] {
        let beta = inf_sup_constant(&generate_aniso(m, n)?)?;
        checks.push(Check::above(format!("({m},{n}) beta_h"), beta, 0.0));
        betas.push(beta);
    }
    let (lo, hi) = betas.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &b| (l.min(b), h.max(b)));
    checks.push(Check::at_most("max beta_h / min beta_h", hi / lo, 2.0));
    Ok(checks)
}

/// Mesh statistics together with the reference `R` column and threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSummary {
    pub m: usize,
    pub n: usize,
    pub stats: MeshStats,
    pub r_paper: f64,
    pub r_threshold: f64,
}

impl MeshSummary {
    pub fn new(m: usize, n: usize, mesh: &Mesh) -> Result<Self> {
        Ok(Self {
            m,
            n,
            stats: stats(mesh)?,
            r_paper: r_paper(m, n),
            r_threshold: babuska_aziz().r_threshold,
        })
    }

    pub fn within_threshold(&self) -> bool {
        self.stats.r <= self.r_threshold
    }
}

/// Up to 7 significant digits, trailing zeros removed.
fn short(x: f64) -> String {
    let s = format_sig12(x);
    let digits_before = s.find('.').unwrap_or(s.len());
    let leading_zeros = s[digits_before..].chars().skip(1).take_while(|&c| c == '0').count();
    let int_part = s[..digits_before].trim_start_matches('-');
    let decimals = if int_part == "0" { leading_zeros + 7 } else { 7usize.saturating_sub(int_part.len()) };
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl fmt::Display for MeshSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.stats;
        writeln!(f, "M: {}", self.m)?;
        writeln!(f, "N: {}", self.n)?;
        writeln!(f, "elements: {}", s.elements)?;
        writeln!(f, "vertices: {}", s.vertices)?;
        writeln!(f, "edges: {} ({} interior, {} boundary)", s.edges, s.interior_edges, s.boundary_edges)?;
        writeln!(f, "h: {}", short(s.h))?;
        writeln!(f, "R_mesh: {}", short(s.r))?;
        writeln!(f, "R_paper: {}", short(self.r_paper))?;
        writeln!(f, "R_threshold: {}", short(self.r_threshold))?;
        write!(
            f,
            "R_mesh <= R_threshold: {}",
            if self.within_threshold() { "yes" } else { "no" }
        )
    }
}
