//! Points of the Grassmannian and their lattice structure.
//!
//! A [`Subspace`] is stored through an orthonormal basis, but every
//! comparison (containment, equality, commeasurability) goes through
//! projectors, so two bases of the same space are indistinguishable.
//! The zero subspace is representable (a basis with no columns); it is the
//! bottom element for `sum` and absorbing for `intersect`.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Field, LinalgError, Matrix, DEFAULT_TOL};

/// Default threshold for the projector-commutator test: each of the two
/// projectors contributes one application of the base tolerance.
pub const DEFAULT_COMMUTATOR_TOL: f64 = 10.0 * DEFAULT_TOL;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SubspaceError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("second argument is not contained in the first (residual {residual:e})")]
    NotContained { residual: f64 },
    #[error("basis is not orthonormal (residual {0:e})")]
    NotOrthonormal(f64),
    #[error("declared dimension {declared} but the columns have rank {rank}")]
    RankMismatch { declared: usize, rank: usize },
    #[error("invalid dimension {dim} in ambient {ambient}")]
    BadDimension { dim: usize, ambient: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed subspace JSON: {0}")]
    Json(String),
}

#[derive(Clone)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    tol: f64,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}^{}) {:?}",
            self.dim(),
            self.field(),
            self.ambient,
            self.basis
        )
    }
}

/// Orthogonal projector onto a subspace.
#[derive(Debug, Clone)]
pub struct Projector {
    pub matrix: Matrix,
}

impl Projector {
    /// ‖P − Pᴴ‖_F
    pub fn hermitian_residual(&self) -> f64 {
        (&self.matrix - &self.matrix.adjoint()).norm_fro()
    }

    /// ‖P² − P‖_F
    pub fn idempotent_residual(&self) -> f64 {
        (&(&self.matrix * &self.matrix) - &self.matrix).norm_fro()
    }

    pub fn distance(&self, other: &Projector) -> f64 {
        (&self.matrix - &other.matrix).norm_fro()
    }
}

impl Subspace {
    /// Span of the columns of `cols`, with rank decided at `tol`.
    pub fn span(cols: &Matrix, tol: f64) -> Result<Self, SubspaceError> {
        let ambient = cols.rows();
        if cols.cols() == 0 {
            return Ok(Self::zero(ambient, cols.field()));
        }
        match linalg::orthonormalize(cols, tol) {
            Ok((basis, _)) => Ok(Self {
                ambient,
                basis,
                tol,
            }),
            Err(LinalgError::ZeroInput) => Ok(Self::zero(ambient, cols.field()).with_tol(tol)),
            Err(e) => Err(e.into()),
        }
    }

    /// Span of a list of vectors in 𝕜ⁿ.
    pub fn span_vectors(
        ambient: usize,
        field: Field,
        vectors: &[Vec<Complex64>],
        tol: f64,
    ) -> Result<Self, SubspaceError> {
        Self::span(&Matrix::from_columns(ambient, field, vectors), tol)
    }

    /// Span of real vectors.
    pub fn span_real(vectors: &[Vec<f64>]) -> Self {
        let n = vectors.first().map_or(0, Vec::len);
        let cols: Vec<Vec<Complex64>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::span_vectors(n, Field::Real, &cols, DEFAULT_TOL).expect("real span")
    }

    /// Wraps a basis that is already orthonormal.
    pub fn from_orthonormal(basis: Matrix, tol: f64) -> Result<Self, SubspaceError> {
        let d = basis.cols();
        let gram = basis.adjoint_mul(&basis);
        let residual = (&gram - &Matrix::identity(d, basis.field())).norm_fro();
        if residual > tol.max(1e3 * f64::EPSILON) * (d.max(1) as f64) {
            return Err(SubspaceError::NotOrthonormal(residual));
        }
        Ok(Self {
            ambient: basis.rows(),
            basis,
            tol,
        })
    }

    pub(crate) fn from_orthonormal_unchecked(basis: Matrix, tol: f64) -> Self {
        Self {
            ambient: basis.rows(),
            basis,
            tol,
        }
    }

    pub fn zero(ambient: usize, field: Field) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(ambient, 0, field),
            tol: DEFAULT_TOL,
        }
    }

    pub fn full(ambient: usize, field: Field) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient, field),
            tol: DEFAULT_TOL,
        }
    }

    /// Span of the standard basis vectors with the given (0-based) indices.
    pub fn coordinate(ambient: usize, field: Field, indices: &[usize]) -> Self {
        let basis = Matrix::identity(ambient, field).select_columns(indices);
        Self::from_orthonormal(basis, DEFAULT_TOL).expect("distinct coordinate axes")
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Complex64>> {
        self.basis.columns()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Same subspace viewed inside ℂⁿ.
    pub fn to_complex(&self) -> Self {
        Self {
            basis: self.basis.to_complex(),
            ..self.clone()
        }
    }

    pub fn projector(&self) -> Projector {
        Projector {
            matrix: &self.basis * &self.basis.adjoint(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field() != other.field() {
            return Err(SubspaceError::FieldMismatch(self.field(), other.field()));
        }
        Ok(())
    }

    fn pair_tol(&self, other: &Self) -> f64 {
        self.tol.max(other.tol)
    }

    /// `a + b`.
    pub fn sum(&self, other: &Self) -> Result<Self, SubspaceError> {
        let tol = self.pair_tol(other);
        self.sum_with_tol(other, tol)
    }

    pub fn sum_with_tol(&self, other: &Self, tol: f64) -> Result<Self, SubspaceError> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(self.clone().with_tol(tol));
        }
        if self.is_zero() {
            return Ok(other.clone().with_tol(tol));
        }
        Self::span(&self.basis.hstack(&other.basis)?, tol)
    }

    /// Sum of an arbitrary family; `ambient`/`field` describe the empty sum.
    pub fn sum_all<'a>(
        ambient: usize,
        field: Field,
        parts: impl IntoIterator<Item = &'a Subspace>,
        tol: f64,
    ) -> Result<Self, SubspaceError> {
        let mut cols: Vec<Vec<Complex64>> = Vec::new();
        for p in parts {
            if p.ambient != ambient {
                return Err(SubspaceError::AmbientMismatch(ambient, p.ambient));
            }
            if p.field() != field {
                return Err(SubspaceError::FieldMismatch(field, p.field()));
            }
            cols.extend(p.basis_vectors());
        }
        let s = Self::span(&Matrix::from_columns(ambient, field, &cols), tol)?;
        Ok(s.with_tol(tol))
    }

    /// `a^⊥`, of dimension `n − dim a`.
    pub fn orthocomplement(&self) -> Self {
        let n = self.ambient;
        let field = self.field();
        let own = self.basis_vectors();
        let candidates: Vec<Vec<Complex64>> = Matrix::identity(n, field).columns();
        let extra = linalg::pivoted_completion(&own, candidates, n - self.dim());
        Self::from_orthonormal_unchecked(Matrix::from_columns(n, field, &extra), self.tol)
    }

    /// `a ∩ b`, computed as `(a^⊥ + b^⊥)^⊥`.
    pub fn intersect(&self, other: &Self) -> Result<Self, SubspaceError> {
        let tol = self.pair_tol(other);
        self.intersect_with_tol(other, tol)
    }

    pub fn intersect_with_tol(&self, other: &Self, tol: f64) -> Result<Self, SubspaceError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient, self.field()).with_tol(tol));
        }
        let joined = self
            .orthocomplement()
            .sum_with_tol(&other.orthocomplement(), tol)?;
        Ok(joined.orthocomplement().with_tol(tol))
    }

    /// Residual ‖(I − P_a)·B_b‖_F of `other`'s basis against `self`.
    pub fn containment_residual(&self, other: &Self) -> Result<f64, SubspaceError> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(0.0);
        }
        let coeffs = self.basis.adjoint_mul(&other.basis);
        let proj = &self.basis * &coeffs;
        Ok((&other.basis - &proj).norm_fro())
    }

    /// `other ≤ self` within `tol`.
    pub fn contains(&self, other: &Self, tol: f64) -> Result<bool, SubspaceError> {
        Ok(self.containment_residual(other)? <= tol)
    }

    /// Projector distance ‖P_a − P_b‖_F, or ∞ when the dimensions differ.
    pub fn distance(&self, other: &Self) -> Result<f64, SubspaceError> {
        self.check_compatible(other)?;
        if self.dim() != other.dim() {
            return Ok(f64::INFINITY);
        }
        Ok(self.projector().distance(&other.projector()))
    }

    pub fn equals(&self, other: &Self, tol: f64) -> Result<bool, SubspaceError> {
        Ok(self.distance(other)? <= tol)
    }

    /// Relative orthocomplement `a ⊖ b` of `b ≤ a` inside `a`.
    pub fn ominus(&self, other: &Self) -> Result<Self, SubspaceError> {
        let tol = self.pair_tol(other);
        let residual = self.containment_residual(other)?;
        if residual > 10.0 * tol * (other.dim().max(1) as f64).sqrt() {
            return Err(SubspaceError::NotContained { residual });
        }
        Ok(self.relative_complement(other))
    }

    /// Orthocomplement of (the part of) `inner` inside `self`, without the
    /// containment check.
    fn relative_complement(&self, inner: &Self) -> Self {
        let extra = self.dim().saturating_sub(inner.dim());
        let chosen =
            linalg::pivoted_completion(&inner.basis_vectors(), self.basis_vectors(), extra);
        Self::from_orthonormal_unchecked(
            Matrix::from_columns(self.ambient, self.field(), &chosen),
            self.tol,
        )
    }

    /// Spectral norm of the projector commutator `[P_a, P_b]`.
    pub fn commutator_norm(&self, other: &Self) -> Result<f64, SubspaceError> {
        self.check_compatible(other)?;
        let pa = self.projector().matrix;
        let pb = other.projector().matrix;
        Ok((&(&pa * &pb) - &(&pb * &pa)).norm_2())
    }

    /// `a ⨀ b`: the orthogonal projectors onto `a` and `b` commute.
    pub fn commeasurable(&self, other: &Self, tol: f64) -> Result<bool, SubspaceError> {
        Ok(self.commutator_norm(other)? <= tol)
    }

    /// Overlap ‖Xᴴ·Y‖₂ between `a ⊖ (a∩b)` and `b ⊖ (a∩b)`, with the meet
    /// decided at `tol`.
    pub fn complement_overlap(&self, other: &Self, tol: f64) -> Result<f64, SubspaceError> {
        let meet = self.intersect_with_tol(other, tol)?;
        let x = self.relative_complement(&meet);
        let y = other.relative_complement(&meet);
        if x.is_zero() || y.is_zero() {
            return Ok(0.0);
        }
        Ok(x.basis.adjoint_mul(&y.basis).norm_2())
    }

    /// `a ⨀ b` in its second form: `a ⊖ (a∩b) ⊥ b ⊖ (a∩b)`.
    pub fn commeasurable_by_complements(
        &self,
        other: &Self,
        tol: f64,
    ) -> Result<bool, SubspaceError> {
        Ok(self.complement_overlap(other, tol)? <= tol)
    }

    /// Range of `P_a·P_b`.
    pub fn product_range(&self, other: &Self, tol: f64) -> Result<Self, SubspaceError> {
        self.check_compatible(other)?;
        let m = &self.projector().matrix * &other.projector().matrix;
        Self::span(&m, tol)
    }

    /// Haar-distributed `dim`-subspace: orthonormalized Gaussian columns.
    pub fn random<R: Rng + ?Sized>(ambient: usize, dim: usize, field: Field, rng: &mut R) -> Self {
        assert!(
            (1..=ambient).contains(&dim),
            "random subspace needs 1 <= dim <= ambient"
        );
        loop {
            let g = gaussian_matrix(ambient, dim, field, rng);
            let s = Self::span(&g, DEFAULT_TOL).expect("gaussian span");
            if s.dim() == dim {
                return s;
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SubspaceJson::from(self)).expect("subspace JSON")
    }

    pub fn from_json(v: &serde_json::Value, tol: f64) -> Result<Self, SubspaceError> {
        let raw: SubspaceJson =
            serde_json::from_value(v.clone()).map_err(|e| SubspaceError::Json(e.to_string()))?;
        raw.into_subspace(tol)
    }
}

/// Matrix of independent standard normal entries (real and imaginary parts
/// drawn separately over ℂ).
pub fn gaussian_matrix<R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    field: Field,
    rng: &mut R,
) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| match field {
            Field::Real => Complex64::new(rng.sample(StandardNormal), 0.0),
            Field::Complex => {
                Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
            }
        })
        .collect();
    Matrix::from_vec(rows, cols, field, data).expect("gaussian entries")
}

/// Haar-distributed unitary (orthogonal over ℝ) matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, field: Field, rng: &mut R) -> Matrix {
    loop {
        let (q, rank) = linalg::orthonormalize(&gaussian_matrix(n, n, field, rng), DEFAULT_TOL)
            .expect("gaussian matrix");
        if rank == n {
            return q;
        }
    }
}

/// Wire format: `{"ambient": n, "field": "real"|"complex", "basis": [[[re, im], ...], ...]}`
/// with one inner list per row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    pub field: Field,
    pub basis: Vec<Vec<[f64; 2]>>,
}

impl From<&Subspace> for SubspaceJson {
    fn from(s: &Subspace) -> Self {
        let b = s.basis();
        Self {
            ambient: s.ambient(),
            field: s.field(),
            basis: (0..b.rows())
                .map(|i| {
                    (0..b.cols())
                        .map(|j| [b[(i, j)].re, b[(i, j)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

impl SubspaceJson {
    /// Re-orthonormalizes and rejects input whose rank differs from the
    /// declared dimension (the number of columns).
    pub fn into_subspace(self, tol: f64) -> Result<Subspace, SubspaceError> {
        if self.basis.len() != self.ambient {
            return Err(SubspaceError::Json(format!(
                "{} basis rows for ambient {}",
                self.basis.len(),
                self.ambient
            )));
        }
        let declared = self.basis.first().map_or(0, Vec::len);
        if declared > self.ambient {
            return Err(SubspaceError::BadDimension {
                dim: declared,
                ambient: self.ambient,
            });
        }
        let data: Vec<Complex64> = self
            .basis
            .iter()
            .map(|row| {
                if row.len() == declared {
                    Ok(row.iter().map(|&[re, im]| Complex64::new(re, im)))
                } else {
                    Err(SubspaceError::Json("ragged basis rows".into()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect();
        let m = Matrix::from_vec(self.ambient, declared, self.field, data)?;
        let s = Subspace::span(&m, tol)?;
        if s.dim() != declared {
            return Err(SubspaceError::RankMismatch {
                declared,
                rank: s.dim(),
            });
        }
        Ok(s)
    }
}
