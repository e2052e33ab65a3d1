//! Dense real/complex matrices at desk scale.
//!
//! Every entry is stored as a [`Complex64`]; the [`Field`] tag records whether
//! the matrix lives over ℝ (all imaginary parts exactly zero) or ℂ. Operations
//! never promote silently: combining a real and a complex matrix is reported as
//! [`LinalgError::FieldMismatch`] by the `try_*` entry points and panics in the
//! operator impls, which are reserved for code that has already checked tags.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use thiserror::Error;

/// Default relative tolerance for rank decisions.
pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_JACOBI_SWEEPS: usize = 64;
const MAX_POLAR_ITERATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" | "R" => Ok(Field::Real),
            "complex" | "C" => Ok(Field::Complex),
            other => Err(format!("unknown field `{other}` (expected real|complex)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("every column has norm at or below the tolerance")]
    ZeroInput,
    #[error("matrix is singular at relative tolerance {tol:e} (smallest/largest singular value {ratio:e})")]
    Singular { tol: f64, ratio: f64 },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("real-tagged entry ({row}, {col}) has nonzero imaginary part")]
    ImaginaryInReal { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("polar iteration did not meet its residual contract after {iterations} steps")]
    NoConvergence { iterations: usize },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
}

/// Row-major dense matrix over ℝ or ℂ.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Complex64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}> {}x{} [", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                match self.field {
                    Field::Real => write!(f, "{:>12.6} ", z.re)?,
                    Field::Complex => write!(f, "{:>10.5}{:+.5}i ", z.re, z.im)?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Self {
            rows,
            cols,
            field,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self {
            rows: r,
            cols: c,
            field: Field::Real,
            data,
        }
    }

    pub fn from_complex_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            field: Field::Complex,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    /// Builds a matrix from row-major entries, validating the field tag.
    pub fn from_vec(
        rows: usize,
        cols: usize,
        field: Field,
        data: Vec<Complex64>,
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if field == Field::Real {
            if let Some(k) = data.iter().position(|z| z.im != 0.0) {
                return Err(LinalgError::ImaginaryInReal {
                    row: k / cols.max(1),
                    col: k % cols.max(1),
                });
            }
        }
        Ok(Self {
            rows,
            cols,
            field,
            data,
        })
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, field: Field, columns: &[Vec<Complex64>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols, field);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &z) in c.iter().enumerate() {
                m[(i, j)] = z;
            }
        }
        if field == Field::Real {
            m.clear_imaginary();
        }
        m
    }

    pub fn diag_real(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len(), Field::Real);
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Complex64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Standard embedding ℝⁿ ⊂ ℂⁿ; complex input is returned unchanged.
    pub fn to_complex(&self) -> Self {
        Self {
            field: Field::Complex,
            ..self.clone()
        }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            data: self.data.iter().map(|z| z.conj()).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let field = if s.im == 0.0 {
            self.field
        } else {
            Field::Complex
        };
        Self {
            field,
            data: self.data.iter().map(|z| z * s).collect(),
            ..*self
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        Self {
            data: self.data.iter().map(|z| z * s).collect(),
            ..*self
        }
    }

    fn check_field(&self, other: &Self) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.check_field(rhs)?;
        self.check_same_shape(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.check_field(rhs)?;
        self.check_same_shape(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<(), LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        Self {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            ..*self
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `selfᴴ · rhs` without materializing the adjoint.
    pub fn adjoint_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.field, rhs.field, "field mismatch in adjoint_mul");
        assert_eq!(self.rows, rhs.rows, "row mismatch in adjoint_mul");
        let mut out = Self::zeros(self.cols, rhs.cols, self.field);
        for k in 0..self.rows {
            for i in 0..self.cols {
                let a = self.data[k * self.cols + i].conj();
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }

    /// Columns of `self` followed by the columns of `rhs`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.check_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot stack {} rows with {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, idx.len(), self.field);
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, jj)] = self[(i, j)];
            }
        }
        out
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Spectral norm (largest singular value).
    pub fn norm_2(&self) -> f64 {
        self.singular_values().first().copied().unwrap_or(0.0)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    fn clear_imaginary(&mut self) {
        for z in &mut self.data {
            z.im = 0.0;
        }
    }

    /// Singular values in decreasing order, by one-sided Jacobi rotations.
    pub fn singular_values(&self) -> Vec<f64> {
        if self.rows == 0 || self.cols == 0 {
            return Vec::new();
        }
        // Work on whichever orientation has no more columns than rows.
        let work = if self.cols > self.rows {
            self.adjoint()
        } else {
            self.clone()
        };
        let mut cols = work.columns();
        let m = cols.len();
        for _ in 0..MAX_JACOBI_SWEEPS {
            let mut rotated = false;
            for p in 0..m {
                for q in p + 1..m {
                    let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                    let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                    let gamma: Complex64 = cols[p]
                        .iter()
                        .zip(&cols[q])
                        .map(|(a, b)| a.conj() * b)
                        .sum();
                    let g = gamma.norm();
                    if g <= f64::EPSILON * (alpha * beta).sqrt() || g == 0.0 {
                        continue;
                    }
                    rotated = true;
                    let phase = gamma / g;
                    let zeta = (beta - alpha) / (2.0 * g);
                    let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = c * t;
                    let (left, right) = cols.split_at_mut(q);
                    for (ap, aq) in left[p].iter_mut().zip(right[0].iter_mut()) {
                        // Rotate a_p against the phase-aligned copy of a_q.
                        let aq_aligned = *aq * phase.conj();
                        let new_p = *ap * c - aq_aligned * s;
                        let new_q = *ap * s + aq_aligned * c;
                        *ap = new_p;
                        *aq = new_q;
                    }
                }
            }
            if !rotated {
                break;
            }
        }
        let mut sv: Vec<f64> = cols
            .iter()
            .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
            .collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        sv
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, self.field);
        let scale = self.max_abs();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
                .unwrap();
            let pv = a[(pivot, col)];
            if pv.norm() <= f64::EPSILON * scale || pv.norm() == 0.0 {
                return Err(LinalgError::Singular {
                    tol: f64::EPSILON,
                    ratio: pv.norm() / scale.max(f64::MIN_POSITIVE),
                });
            }
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let d = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] *= d;
                inv[(col, j)] *= d;
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a[(i, col)];
                if f.re == 0.0 && f.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let ac = a[(col, j)];
                    let ic = inv[(col, j)];
                    a[(i, j)] -= f * ac;
                    inv[(i, j)] -= f * ic;
                }
            }
        }
        if self.field == Field::Real {
            inv.clear_imaginary();
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}

pub(crate) fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Removes from `v` its components along the (orthonormal) `basis` vectors.
/// Two passes of modified Gram–Schmidt keep the result orthogonal to
/// working precision.
pub(crate) fn project_out(v: &mut [Complex64], basis: &[Vec<Complex64>]) {
    for _ in 0..2 {
        for q in basis {
            let c = dot(q, v);
            for (x, y) in v.iter_mut().zip(q) {
                *x -= c * y;
            }
        }
    }
}

fn check_tol(tol: f64) -> Result<(), LinalgError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(LinalgError::BadTolerance(tol))
    }
}

/// Orthonormal basis for the column space of `cols`.
///
/// Columns are visited left to right; column k is dropped when its residual
/// after projection against the retained columns is at most
/// `tol × (largest input column norm)`. Returns the basis and its rank.
pub fn orthonormalize(cols: &Matrix, tol: f64) -> Result<(Matrix, usize), LinalgError> {
    check_tol(tol)?;
    let columns = cols.columns();
    let largest = columns.iter().map(|c| norm(c)).fold(0.0, f64::max);
    if largest <= tol {
        return Err(LinalgError::ZeroInput);
    }
    let threshold = tol * largest;
    let mut kept: Vec<Vec<Complex64>> = Vec::with_capacity(columns.len());
    for mut c in columns {
        project_out(&mut c, &kept);
        let r = norm(&c);
        if r > threshold {
            for z in &mut c {
                *z /= r;
            }
            kept.push(c);
        }
    }
    let rank = kept.len();
    Ok((Matrix::from_columns(cols.rows, cols.field, &kept), rank))
}

/// Extends the orthonormal `basis` by `extra` further orthonormal vectors
/// drawn from the span of `candidates`, choosing at every step the candidate
/// with the largest residual (column-pivoted Gram–Schmidt). Returns only the
/// new vectors.
pub(crate) fn pivoted_completion(
    basis: &[Vec<Complex64>],
    candidates: Vec<Vec<Complex64>>,
    extra: usize,
) -> Vec<Vec<Complex64>> {
    let mut residuals = candidates;
    for r in &mut residuals {
        project_out(r, basis);
    }
    let mut chosen: Vec<Vec<Complex64>> = Vec::with_capacity(extra);
    for _ in 0..extra {
        let (best, _) = residuals
            .iter()
            .enumerate()
            .map(|(i, r)| (i, norm(r)))
            .fold(
                (usize::MAX, -1.0),
                |acc, (i, n)| if n > acc.1 { (i, n) } else { acc },
            );
        if best == usize::MAX {
            break;
        }
        let mut v = residuals.swap_remove(best);
        project_out(&mut v, basis);
        project_out(&mut v, &chosen);
        let n = norm(&v);
        if n == 0.0 {
            break;
        }
        for z in &mut v {
            *z /= n;
        }
        for r in &mut residuals {
            let c = dot(&v, r);
            for (x, y) in r.iter_mut().zip(&v) {
                *x -= c * y;
            }
        }
        chosen.push(v);
    }
    chosen
}

/// Number of singular values above `tol × σ_max`; zero for the zero matrix.
pub fn rank_with_tol(m: &Matrix, tol: f64) -> usize {
    let sv = m.singular_values();
    let Some(&largest) = sv.first() else {
        return 0;
    };
    if largest == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * largest).count()
}

/// Ratio σ_min / σ_max, or 0 for an empty or zero matrix.
pub fn inverse_condition(m: &Matrix) -> f64 {
    let sv = m.singular_values();
    match (sv.first(), sv.last()) {
        (Some(&hi), Some(&lo)) if hi > 0.0 => lo / hi,
        _ => 0.0,
    }
}

pub fn adjoint(m: &Matrix) -> Matrix {
    m.adjoint()
}

#[derive(Debug, Clone)]
pub struct PolarFactors {
    pub unitary: Matrix,
    pub positive: Matrix,
}

/// Polar decomposition `m = U·P` by the Newton iteration
/// `U ← (U + U⁻ᴴ)/2` started at `m`.
pub fn polar_decompose(m: &Matrix, tol: f64) -> Result<PolarFactors, LinalgError> {
    check_tol(tol)?;
    if !m.is_square() || m.rows == 0 {
        return Err(LinalgError::Shape(format!(
            "polar decomposition of {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let ratio = inverse_condition(m);
    if ratio <= tol {
        return Err(LinalgError::Singular { tol, ratio });
    }
    let n = m.rows;
    let mut u = m.clone();
    let mut converged = false;
    let mut iterations = 0;
    while iterations < MAX_POLAR_ITERATIONS {
        iterations += 1;
        let inv_adj = u.inverse()?.adjoint();
        let next = (&u + &inv_adj).scale_real(0.5);
        let step = (&next - &u).norm_fro();
        let size = next.norm_fro();
        u = next;
        if step <= tol * size {
            converged = true;
            break;
        }
    }
    // P = Uᴴm, symmetrized to remove rounding asymmetry.
    let p = u.adjoint_mul(m);
    let positive = (&p + &p.adjoint()).scale_real(0.5);

    let unitary_residual = (&u.adjoint_mul(&u) - &Matrix::identity(n, m.field)).norm_fro();
    let product_residual = (&(&u * &positive) - m).norm_fro();
    if !converged || unitary_residual > 10.0 * tol || product_residual > 10.0 * tol * m.norm_fro() {
        return Err(LinalgError::NoConvergence { iterations });
    }
    Ok(PolarFactors {
        unitary: u,
        positive,
    })
}
