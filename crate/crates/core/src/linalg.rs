//! Compressed-row sparse matrices, Jacobi-preconditioned conjugate
//! gradients and the small dense inf-sup computation.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{FemError, Result};

/// Relative residual target used by the solvers unless overridden.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Largest number of unknowns the dense inf-sup computation accepts.
pub const DENSE_LIMIT: usize = 2000;

/// Compressed sparse row matrix with sorted, unique column indices per row.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    nrows: usize,
    ncols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<f64>,
}

impl CsrMatrix {
    /// Sums duplicate entries in insertion order, so the result is
    /// bitwise reproducible for a fixed triplet sequence.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut order: Vec<usize> = (0..triplets.len()).collect();
        order.sort_by_key(|&k| (triplets[k].0, triplets[k].1));

        let mut row_ptr = vec![0usize; nrows + 1];
        let mut col_idx = Vec::with_capacity(triplets.len());
        let mut values: Vec<f64> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for k in order {
            let (i, j, v) = triplets[k];
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) outside {nrows}x{ncols}");
            if last == Some((i, j)) {
                *values.last_mut().expect("previous entry") += v;
            } else {
                col_idx.push(j);
                values.push(v);
                row_ptr[i + 1] += 1;
                last = Some((i, j));
            }
        }
        for i in 0..nrows {
            row_ptr[i + 1] += row_ptr[i];
        }
        Self {
            nrows,
            ncols,
            row_ptr,
            col_idx,
            values,
        }
    }

    pub fn identity(n: usize) -> Self {
        let triplets: Vec<_> = (0..n).map(|i| (i, i, 1.0)).collect();
        Self::from_triplets(n, n, &triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn column_indices(&self) -> &[usize] {
        &self.col_idx
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(column, value)` pairs of row `i`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        self.col_idx[r.clone()].iter().copied().zip(self.values[r].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        match self.col_idx[r.clone()].binary_search(&j) {
            Ok(k) => self.values[r.start + k],
            Err(_) => 0.0,
        }
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).collect()
    }

    pub fn mul_vec_into(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.ncols);
        assert_eq!(y.len(), self.nrows);
        for (i, yi) in y.iter_mut().enumerate() {
            let mut s = 0.0;
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                s += self.values[k] * x[self.col_idx[k]];
            }
            *yi = s;
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.nrows];
        self.mul_vec_into(x, &mut y);
        y
    }

    pub fn transpose(&self) -> Self {
        let mut triplets = Vec::with_capacity(self.nnz());
        for i in 0..self.nrows {
            triplets.extend(self.row(i).map(|(j, v)| (j, i, v)));
        }
        Self::from_triplets(self.ncols, self.nrows, &triplets)
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut d = DMatrix::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for (j, v) in self.row(i) {
                d[(i, j)] = v;
            }
        }
        d
    }

    /// Exact structural and numerical symmetry.
    pub fn is_symmetric(&self) -> bool {
        self.nrows == self.ncols && (0..self.nrows).all(|i| self.row(i).all(|(j, v)| self.get(j, i) == v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveReport {
    /// Total CG iterations over all refinement passes.
    pub iterations: usize,
    /// `‖b - Ax‖ / ‖b‖` of the returned iterate, with the residual evaluated
    /// in compensated arithmetic (absolute norm when `b = 0`).
    pub relative_residual: f64,
    /// `ε ‖ |A| |x| ‖ / ‖b‖`: residual explained by rounding `x` to f64.
    pub rounding_floor: f64,
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `r = b - Ax` accumulated with error-free transformations, as accurate as
/// twice-working precision.
fn accurate_residual(a: &CsrMatrix, x: &[f64], b: &[f64], r: &mut [f64]) {
    for (i, ri) in r.iter_mut().enumerate() {
        let (mut s, mut c) = (b[i], 0.0);
        for (j, v) in a.row(i) {
            let p = -v * x[j];
            let p_err = (-v).mul_add(x[j], -p);
            let (t, e) = two_sum(s, p);
            s = t;
            c += e + p_err;
        }
        *ri = s + c;
    }
}

fn rounding_floor(a: &CsrMatrix, x: &[f64]) -> f64 {
    let sq: f64 = (0..a.nrows())
        .map(|i| a.row(i).map(|(j, v)| (v * x[j]).abs()).sum::<f64>().powi(2))
        .sum();
    f64::EPSILON * sq.sqrt()
}

/// Plain Jacobi-PCG on `A d = r` until the recursive residual drops below
/// `target`; returns the iteration count.
fn pcg_pass(a: &CsrMatrix, inv_diag: &[f64], rhs: &[f64], target: f64, budget: usize, d: &mut [f64]) -> Result<usize> {
    let n = rhs.len();
    d.fill(0.0);
    let mut r = rhs.to_vec();
    let mut z: Vec<f64> = r.iter().zip(inv_diag).map(|(ri, di)| ri * di).collect();
    let mut p = z.clone();
    let mut ap = vec![0.0; n];
    let mut rz = dot(&r, &z);
    let mut iterations = 0;
    while iterations < budget && norm(&r) > target {
        a.mul_vec_into(&p, &mut ap);
        let pap = dot(&p, &ap);
        if !(pap > 0.0) {
            return Err(FemError::NotPositiveDefinite);
        }
        let alpha = rz / pap;
        for i in 0..n {
            d[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        iterations += 1;
        for i in 0..n {
            z[i] = r[i] * inv_diag[i];
        }
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Ok(iterations)
}

/// Most refinement passes before giving up.
const MAX_PASSES: usize = 10;
/// Smallest relative tolerance asked of a single pass.
const PASS_TOL: f64 = 1e-10;

/// Jacobi-preconditioned conjugate gradients from a zero initial guess,
/// with iterative refinement against a compensated residual.
///
/// Converged means `‖b - Ax‖ ≤ tol ‖b‖`, or, once refinement stops making
/// progress, that the residual is below the rounding floor of `x` itself.
/// Exhausting `max_iter` is reported through `converged = false`.
pub fn cg_solve(a: &CsrMatrix, b: &[f64], tol: f64, max_iter: usize) -> Result<(Vec<f64>, SolveReport)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(FemError::DimensionMismatch {
            expected: n,
            got: a.ncols(),
        });
    }
    if b.len() != n {
        return Err(FemError::DimensionMismatch { expected: n, got: b.len() });
    }
    let inv_diag: Vec<f64> = a
        .diagonal()
        .into_iter()
        .enumerate()
        .map(|(i, d)| if d == 0.0 { Err(FemError::ZeroDiagonal(i)) } else { Ok(1.0 / d) })
        .collect::<Result<_>>()?;

    let mut x = vec![0.0; n];
    let b_norm = norm(b);
    if b_norm == 0.0 {
        return Ok((
            x,
            SolveReport {
                iterations: 0,
                relative_residual: 0.0,
                rounding_floor: 0.0,
                converged: true,
            },
        ));
    }
    let target = tol * b_norm;

    let mut r = b.to_vec();
    let mut d = vec![0.0; n];
    let mut iterations = 0;
    let mut previous = f64::INFINITY;
    let mut stalled = false;
    for _ in 0..MAX_PASSES {
        let r_norm = norm(&r);
        if r_norm <= target || iterations >= max_iter {
            break;
        }
        if r_norm > 0.5 * previous {
            stalled = true;
            break;
        }
        previous = r_norm;
        let pass_tol = (0.3 * target / r_norm).clamp(PASS_TOL, 0.1);
        iterations += pcg_pass(a, &inv_diag, &r, pass_tol * r_norm, max_iter - iterations, &mut d)?;
        x.iter_mut().zip(&d).for_each(|(xi, di)| *xi += di);
        accurate_residual(a, &x, b, &mut r);
    }

    let relative_residual = norm(&r) / b_norm;
    let floor = rounding_floor(a, &x) / b_norm;
    let converged = relative_residual <= tol || (stalled && relative_residual <= floor);
    Ok((
        x,
        SolveReport {
            iterations,
            relative_residual,
            rounding_floor: floor,
            converged,
        },
    ))
}

/// Discrete inf-sup constant of the divergence pairing
///
/// `inf_v sup_q (B q, v) / (‖v‖ ‖q‖_H(div))`
///
/// where `div_op` is `B` (rows: scalar dofs, columns: flux dofs), `mass` the
/// flux mass matrix and `scalar_mass` the diagonal of the scalar mass matrix.
/// Since `div q` is constant per element, `‖div q‖² = qᵀ Bᵀ D⁻¹ B q`.
/// The value is the square root of the smallest eigenvalue of
/// `D^{-1/2} B H⁻¹ Bᵀ D^{-1/2}` with `H = M + Bᵀ D⁻¹ B`.
pub fn dense_min_singular_generalized(div_op: &CsrMatrix, mass: &CsrMatrix, scalar_mass: &[f64]) -> Result<f64> {
    let (ns, nq) = (div_op.nrows(), div_op.ncols());
    if ns + nq > DENSE_LIMIT {
        return Err(FemError::TooLarge {
            dofs: ns + nq,
            limit: DENSE_LIMIT,
        });
    }
    if mass.nrows() != nq || mass.ncols() != nq {
        return Err(FemError::DimensionMismatch {
            expected: nq,
            got: mass.nrows(),
        });
    }
    if scalar_mass.len() != ns {
        return Err(FemError::DimensionMismatch {
            expected: ns,
            got: scalar_mass.len(),
        });
    }
    let b = div_op.to_dense();
    let d_inv_sqrt = nalgebra::DVector::from_iterator(ns, scalar_mass.iter().map(|d| 1.0 / d.sqrt()));
    // B̃ = D^{-1/2} B, so Bᵀ D⁻¹ B = B̃ᵀ B̃
    let mut bt = b;
    for i in 0..ns {
        bt.row_mut(i).scale_mut(d_inv_sqrt[i]);
    }
    let h = mass.to_dense() + bt.transpose() * &bt;
    let chol = h.cholesky().ok_or(FemError::NotPositiveDefinite)?;
    // S = B̃ H⁻¹ B̃ᵀ
    let solved = chol.solve(&bt.transpose());
    let s = &bt * solved;
    let s = (&s + s.transpose()) * 0.5;
    let eig = SymmetricEigen::new(s);
    let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(min.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laplacian_1d(n: usize) -> CsrMatrix {
        let mut t = Vec::new();
        for i in 0..n {
            t.push((i, i, 2.0));
            if i > 0 {
                t.push((i, i - 1, -1.0));
            }
            if i + 1 < n {
                t.push((i, i + 1, -1.0));
            }
        }
        CsrMatrix::from_triplets(n, n, &t)
    }

    #[test]
    fn duplicates_are_summed_and_sorted() {
        let m = CsrMatrix::from_triplets(2, 3, &[(1, 2, 1.0), (0, 1, 2.0), (1, 0, 3.0), (1, 2, 0.5)]);
        assert_eq!(m.row_offsets(), &[0, 1, 3]);
        assert_eq!(m.column_indices(), &[1, 0, 2]);
        assert_eq!(m.values(), &[2.0, 3.0, 1.5]);
        assert_eq!(m.get(1, 1), 0.0);
    }

    #[test]
    fn identity_solves_in_one_step() {
        let a = CsrMatrix::identity(5);
        let b = [1.0, -2.0, 3.0, 0.5, 7.0];
        let (x, rep) = cg_solve(&a, &b, 1e-12, 100).unwrap();
        assert!(rep.converged);
        assert!(rep.iterations <= 1);
        assert_eq!(x, b.to_vec());
    }

    #[test]
    fn zero_rhs_gives_zero() {
        let (x, rep) = cg_solve(&laplacian_1d(4), &[0.0; 4], 1e-12, 10).unwrap();
        assert_eq!(x, vec![0.0; 4]);
        assert_eq!(rep.iterations, 0);
        assert!(rep.converged);
    }

    #[test]
    fn tridiagonal_matches_closed_form() {
        // (tridiag(-1,2,-1) x = 1)  has  x_i = (i+1)(n-i)/2
        let n = 10;
        let (x, rep) = cg_solve(&laplacian_1d(n), &vec![1.0; n], 1e-12, 200).unwrap();
        assert!(rep.converged && rep.relative_residual <= 1e-12);
        for (i, xi) in x.iter().enumerate() {
            let exact = ((i + 1) * (n - i)) as f64 / 2.0;
            assert!((xi - exact).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_diagonal_is_an_error() {
        let a = CsrMatrix::from_triplets(2, 2, &[(0, 1, 1.0), (1, 0, 1.0), (1, 1, 1.0)]);
        assert!(matches!(cg_solve(&a, &[1.0, 1.0], 1e-12, 10), Err(FemError::ZeroDiagonal(0))));
    }

    #[test]
    fn iteration_cap_is_reported() {
        let (_, rep) = cg_solve(&laplacian_1d(50), &vec![1.0; 50], 1e-14, 3).unwrap();
        assert!(!rep.converged);
        assert_eq!(rep.iterations, 3);
    }

    #[test]
    fn transpose_roundtrip() {
        let m = CsrMatrix::from_triplets(2, 3, &[(0, 2, 1.0), (1, 0, -4.0), (1, 1, 2.5)]);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().get(2, 0), 1.0);
    }

    #[test]
    fn inf_sup_of_trivial_pairing() {
        // B = I, M = I, D = I: H = 2I, S = I/2
        let i3 = CsrMatrix::identity(3);
        let beta = dense_min_singular_generalized(&i3, &i3, &[1.0; 3]).unwrap();
        assert!((beta - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn inf_sup_rejects_large_problems() {
        let big = CsrMatrix::identity(1001);
        assert!(matches!(
            dense_min_singular_generalized(&big, &big, &vec![1.0; 1001]),
            Err(FemError::TooLarge { .. })
        ));
    }
}
