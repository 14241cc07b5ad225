use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use circumfem::analysis::{babuska_aziz, interp_bound_check, pw_projection_check, standard_scalar_fields, standard_test_fields};
use circumfem::experiment::{
    run_table, to_csv, to_markdown, verify, MeshSummary, Method, RunConfig, Suite, DEFAULT_ALPHA, DEFAULT_M_LIST,
    FULL_M_LIST,
};
use circumfem::linalg::DEFAULT_TOL;
use circumfem::assembly::LOAD_DEGREE;
use circumfem::mesh::{even_n_for, generate_aniso, write_mesh_file};

#[derive(Parser)]
#[command(name = "circumfem", version, about = "P1 / Crouzeix-Raviart / Raviart-Thomas experiments on anisotropic meshes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    P1,
    Cr,
    Rt,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::P1 => Method::P1,
            MethodArg::Cr => Method::Cr,
            MethodArg::Rt => Method::Rt,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a mesh, print its statistics and optionally write it out.
    Mesh {
        #[arg(long = "M")]
        m: usize,
        /// Defaults to the even integer closest to M^alpha.
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convergence table for the benchmark problem.
    Table {
        #[arg(long, value_enum, default_value = "p1")]
        method: MethodArg,
        /// Comma-separated, strictly ascending.
        #[arg(long = "m-list", value_delimiter = ',', conflicts_with_all = ["m", "full"])]
        m_list: Option<Vec<usize>>,
        /// Single row.
        #[arg(long = "M", conflicts_with = "full")]
        m: Option<usize>,
        /// Fixed N for every row.
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long = "quad-degree", default_value_t = LOAD_DEGREE)]
        quad_degree: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// M = 10, 20, ..., 100.
        #[arg(long)]
        full: bool,
    },
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Option<Suite>,
        /// Run every suite.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
    },
    /// Worst element ratios of the RT interpolation and projection estimates.
    InterpBounds {
        #[arg(long = "M", default_value_t = 8)]
        m: usize,
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
    },
    /// Print the Babuška-Aziz constant and derived thresholds.
    BaConstant,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}` (expected one of: {})", names.join(", "))
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Mesh { m, n, alpha, out } => {
            let n = n.unwrap_or_else(|| even_n_for(m, alpha));
            let mesh = generate_aniso(m, n)?;
            if let Some(path) = &out {
                write_mesh_file(&mesh, path).with_context(|| format!("writing {}", path.display()))?;
            }
            println!("{}", MeshSummary::new(m, n, &mesh)?);
        }
        Command::Table {
            method,
            m_list,
            m,
            n,
            alpha,
            tol,
            quad_degree,
            format,
            out,
            full,
        } => {
            let m_list = match (m_list, m, full) {
                (Some(list), _, _) => list,
                (None, Some(m), _) => vec![m],
                (None, None, true) => FULL_M_LIST.to_vec(),
                (None, None, false) => DEFAULT_M_LIST.to_vec(),
            };
            let config = RunConfig {
                method: method.into(),
                m_list,
                alpha,
                n_override: n,
                tol,
                quad_degree,
            };
            let run = run_table(&config)?;
            for (m, err) in &run.failures {
                eprintln!("row M={m} aborted: {err}");
            }
            let text = match format {
                Format::Csv => to_csv(&run.rows, run.method),
                Format::Md => to_markdown(&run.rows, run.method),
            };
            emit(&text, out.as_ref())?;
            if !run.failures.is_empty() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Verify { suite, all } => {
            let suites = match (suite, all) {
                (Some(s), _) => vec![s],
                (None, true) => Suite::ALL.to_vec(),
                (None, false) => bail!("name a suite or pass --all"),
            };
            let mut ok = true;
            for suite in suites {
                let report = verify(suite)?;
                println!("{report}");
                ok &= report.passed();
            }
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::InterpBounds { m, n, alpha } => {
            let n = n.unwrap_or_else(|| even_n_for(m, alpha));
            let mesh = generate_aniso(m, n)?;
            let c = babuska_aziz();
            println!("mesh ({m},{n}), bound for flux ratio C2_2 = {:.6}", c.c2_2);
            println!("{:<28} {:>14} {:>14}", "field", "flux ratio", "div ratio");
            for field in standard_test_fields() {
                let rep = interp_bound_check(&mesh, &field)?;
                println!("{:<28} {:>14.6e} {:>14.6e}", field.name, rep.flux_ratio, rep.div_ratio);
            }
            println!("{:<28} {:>14}", "scalar field", "pi0 ratio");
            for g in standard_scalar_fields() {
                println!("{:<28} {:>14.6e}", g.name, pw_projection_check(&mesh, &g)?);
            }
        }
        Command::BaConstant => {
            let c = babuska_aziz();
            println!("A2 = {:.12}", c.a2);
            println!("C2_2 = 4 sqrt(2) A2 = {:.12}", c.c2_2);
            println!("R_threshold = 1 / C2_2 = {:.12}", c.r_threshold);
            println!("residual |1/A2 + tan(1/A2)| = {:.3e}", c.residual());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
