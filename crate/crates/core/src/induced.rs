//! Semilinear bijections `T v = M·α(v)` with `α ∈ {id, conjugation}` and the
//! maps they induce on subspaces and frames.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frame::{FrameError, FrameTuple, SAMPLING_INVERSE_CONDITION};
use crate::linalg::{self, Field, LinalgError, Matrix, DEFAULT_TOL};
use crate::subspace::{gaussian_matrix, Subspace, SubspaceError};

/// Tolerance used by [`reconstruct_from_line_images`] callers that have no
/// better estimate of the oracle's accuracy.
pub const DEFAULT_RECONSTRUCTION_TOL: f64 = 1e-6;

/// Number of random lines checked after a reconstruction.
pub const VERIFICATION_PROBES: usize = 50;

const PROBE_SEED: u64 = 0x005E_ED0F_F796;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Automorphism {
    #[serde(rename = "id")]
    Identity,
    #[serde(rename = "conj")]
    Conjugation,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MapError {
    #[error("map matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("map is singular (inverse condition {0:e})")]
    Singular(f64),
    #[error("conjugation is not a field automorphism of the reals")]
    ConjugationOverReals,
    #[error("ambient dimensions differ: map on {0}, argument in {1}")]
    AmbientMismatch(usize, usize),
    #[error("real map applied to a complex subspace")]
    FieldMismatch,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Subspace(#[from] SubspaceError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("malformed map JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReconstructError {
    #[error("line map is not induced by a semilinear map (worst probe distance {worst:e})")]
    NotSemilinear { worst: f64 },
    #[error("oracle is degenerate: {0}")]
    DegenerateOracle(String),
}

#[derive(Debug, Clone)]
pub struct SemilinearMap {
    matrix: Matrix,
    automorphism: Automorphism,
}

impl SemilinearMap {
    pub fn new(matrix: Matrix, automorphism: Automorphism, tol: f64) -> Result<Self, MapError> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(MapError::NotSquare(matrix.rows(), matrix.cols()));
        }
        if matrix.field() == Field::Real && automorphism == Automorphism::Conjugation {
            return Err(MapError::ConjugationOverReals);
        }
        let ratio = linalg::inverse_condition(&matrix);
        if ratio <= tol {
            return Err(MapError::Singular(ratio));
        }
        Ok(Self {
            matrix,
            automorphism,
        })
    }

    pub fn linear(matrix: Matrix) -> Result<Self, MapError> {
        Self::new(matrix, Automorphism::Identity, DEFAULT_TOL)
    }

    pub fn identity(n: usize, field: Field) -> Self {
        Self {
            matrix: Matrix::identity(n, field),
            automorphism: Automorphism::Identity,
        }
    }

    /// Entrywise complex conjugation on ℂⁿ.
    pub fn conjugation(n: usize) -> Self {
        Self {
            matrix: Matrix::identity(n, Field::Complex),
            automorphism: Automorphism::Conjugation,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn automorphism(&self) -> Automorphism {
        self.automorphism
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `T` applied to each column of `cols`. Real columns are embedded in
    /// ℂⁿ when the map is complex.
    pub fn apply_columns(&self, cols: &Matrix) -> Result<Matrix, MapError> {
        if cols.rows() != self.dim() {
            return Err(MapError::AmbientMismatch(self.dim(), cols.rows()));
        }
        let cols = match (self.field(), cols.field()) {
            (Field::Real, Field::Complex) => return Err(MapError::FieldMismatch),
            (Field::Complex, Field::Real) => cols.to_complex(),
            _ => cols.clone(),
        };
        let arg = match self.automorphism {
            Automorphism::Identity => cols,
            Automorphism::Conjugation => cols.conj(),
        };
        Ok(self.matrix.try_mul(&arg)?)
    }

    pub fn apply_to_subspace(&self, a: &Subspace) -> Result<Subspace, MapError> {
        if a.ambient() != self.dim() {
            return Err(MapError::AmbientMismatch(self.dim(), a.ambient()));
        }
        if a.is_zero() {
            return Ok(Subspace::zero(a.ambient(), self.field()));
        }
        let image = Subspace::span(&self.apply_columns(a.basis())?, a.tol())?;
        if image.dim() != a.dim() {
            return Err(MapError::Singular(linalg::inverse_condition(&self.matrix)));
        }
        Ok(image)
    }

    /// `MᴴM` is a multiple of the identity within `tol` (relative).
    pub fn is_unitary_up_to_scale(&self, tol: f64) -> bool {
        let g = self.matrix.adjoint_mul(&self.matrix);
        let n = self.dim() as f64;
        let c = g.trace().re / n;
        let residual = (&g - &Matrix::identity(self.dim(), self.field()).scale_real(c)).norm_fro();
        residual <= tol * c.abs() * n
    }

    /// `Θ_T(V_1, …, V_s) = (TV_1, …, TV_s)`.
    pub fn induced_on_frame(&self, t: &FrameTuple) -> Result<FrameTuple, MapError> {
        let components = t
            .components()
            .iter()
            .map(|c| self.apply_to_subspace(c))
            .collect::<Result<Vec<_>, _>>()?;
        let orthogonal = t.is_orthogonal() && self.is_unitary_up_to_scale(1e-9);
        Ok(FrameTuple::new(components, orthogonal)?)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, MapError> {
        let inner = match self.automorphism {
            Automorphism::Identity => other.matrix.clone(),
            Automorphism::Conjugation => other.matrix.conj(),
        };
        let inner = if self.field() == Field::Complex {
            inner.to_complex()
        } else {
            inner
        };
        let automorphism = match (self.automorphism, other.automorphism) {
            (a, b) if a == b => Automorphism::Identity,
            _ => Automorphism::Conjugation,
        };
        Ok(Self {
            matrix: self.matrix.try_mul(&inner)?,
            automorphism,
        })
    }

    pub fn inverse(&self) -> Result<Self, MapError> {
        let inv = self.matrix.inverse()?;
        let matrix = match self.automorphism {
            Automorphism::Identity => inv,
            Automorphism::Conjugation => inv.conj(),
        };
        Ok(Self {
            matrix,
            automorphism: self.automorphism,
        })
    }

    /// `T1 = λ·T2` for a nonzero scalar `λ`, with matching automorphisms.
    pub fn scale_equivalent(&self, other: &Self, tol: f64) -> bool {
        if self.automorphism != other.automorphism || self.dim() != other.dim() {
            return false;
        }
        let a = self.matrix.entries();
        let b = other.matrix.entries();
        let Some((k, _)) = b
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        else {
            return false;
        };
        if b[k].norm() == 0.0 || a[k].norm() == 0.0 {
            return false;
        }
        let lambda = a[k] / b[k];
        let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
        a.iter()
            .zip(b)
            .all(|(x, y)| (x - lambda * y).norm() <= tol * scale)
    }

    /// `T' = U·P⁻¹` from the polar decomposition `M = U·P`; satisfies
    /// `Θ_ev ∘ Θ_T = Θ_{T'} ∘ Θ_ev`.
    pub fn evert_conjugate(&self, tol: f64) -> Result<Self, MapError> {
        let polar = linalg::polar_decompose(&self.matrix, tol)?;
        let matrix = polar.unitary.try_mul(&polar.positive.inverse()?)?;
        Ok(Self {
            matrix,
            automorphism: self.automorphism,
        })
    }

    /// Gaussian matrix redrawn until its inverse condition exceeds
    /// [`SAMPLING_INVERSE_CONDITION`].
    pub fn random<R: Rng + ?Sized>(
        n: usize,
        field: Field,
        automorphism: Automorphism,
        rng: &mut R,
    ) -> Self {
        assert!(
            !(field == Field::Real && automorphism == Automorphism::Conjugation),
            "conjugation needs a complex field"
        );
        loop {
            let g = gaussian_matrix(n, n, field, rng);
            if linalg::inverse_condition(&g) > SAMPLING_INVERSE_CONDITION {
                return Self {
                    matrix: g,
                    automorphism,
                };
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m = &self.matrix;
        serde_json::to_value(MapJson {
            automorphism: self.automorphism,
            matrix: (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| [m[(i, j)].re, m[(i, j)].im])
                        .collect()
                })
                .collect(),
        })
        .expect("map JSON")
    }

    /// A matrix with any nonzero imaginary part is read as complex.
    pub fn from_json(v: &serde_json::Value, tol: f64) -> Result<Self, MapError> {
        let raw: MapJson =
            serde_json::from_value(v.clone()).map_err(|e| MapError::Json(e.to_string()))?;
        let n = raw.matrix.len();
        if raw.matrix.iter().any(|r| r.len() != n) {
            return Err(MapError::Json("matrix must be square".into()));
        }
        let data: Vec<Complex64> = raw
            .matrix
            .iter()
            .flatten()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let complex =
            raw.automorphism == Automorphism::Conjugation || data.iter().any(|z| z.im != 0.0);
        let field = if complex { Field::Complex } else { Field::Real };
        Self::new(Matrix::from_vec(n, n, field, data)?, raw.automorphism, tol)
    }
}

/// `{"automorphism": "id"|"conj", "matrix": [[[re, im], ...], ...]}`, row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub automorphism: Automorphism,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

/// Orthogonal projection of `ℓ'` onto a plane `π ≥ ℓ` in a 3-space:
/// `π' = ℓ' + π^⊥` and `ℓ'' = π ∩ π'`. Returns `(ℓ'', π')`.
pub fn line_projection_construct(
    l: &Subspace,
    l_prime: &Subspace,
    plane: &Subspace,
    tol: f64,
) -> Result<(Subspace, Subspace), MapError> {
    for s in [l, l_prime, plane] {
        if s.ambient() != 3 {
            return Err(MapError::Precondition(format!(
                "construction lives in a 3-space, got ambient {}",
                s.ambient()
            )));
        }
    }
    if l.dim() != 1 || l_prime.dim() != 1 || plane.dim() != 2 {
        return Err(MapError::Precondition("need two lines and a plane".into()));
    }
    if !plane.contains(l, tol)? {
        return Err(MapError::Precondition(
            "the plane must contain the first line".into(),
        ));
    }
    if l.equals(l_prime, tol)? {
        return Err(MapError::Precondition("the two lines must differ".into()));
    }
    let normal = plane.orthocomplement();
    let plane_prime = l_prime.sum(&normal)?;
    if plane_prime.dim() != 2 {
        return Err(MapError::DegenerateConfiguration(
            "second line is normal to the plane".into(),
        ));
    }
    let l_second = plane.intersect(&plane_prime)?;
    if l_second.dim() != 1 {
        return Err(MapError::DegenerateConfiguration(format!(
            "planes meet in dimension {}",
            l_second.dim()
        )));
    }
    Ok((l_second, plane_prime))
}

fn unit_spanning(
    image: &Subspace,
    n: usize,
    what: &str,
) -> Result<Vec<Complex64>, ReconstructError> {
    if image.ambient() != n || image.dim() != 1 {
        return Err(ReconstructError::DegenerateOracle(format!(
            "image of {what} has dimension {} in ambient {}",
            image.dim(),
            image.ambient()
        )));
    }
    Ok(image.basis().column(0))
}

/// Least-squares coefficients of `w` on `(p, q)` plus the residual norm.
fn two_term_fit(
    w: &[Complex64],
    p: &[Complex64],
    q: &[Complex64],
) -> Option<(Complex64, Complex64, f64)> {
    let pp = linalg::dot(p, p);
    let pq = linalg::dot(p, q);
    let qq = linalg::dot(q, q);
    let pw = linalg::dot(p, w);
    let qw = linalg::dot(q, w);
    let det = pp * qq - pq * pq.conj();
    if det.norm() <= 1e-14 * (pp.norm() * qq.norm()) {
        return None;
    }
    let x = (qq * pw - pq * qw) / det;
    let y = (pp * qw - pq.conj() * pw) / det;
    let r: f64 = w
        .iter()
        .zip(p)
        .zip(q)
        .map(|((wi, pi), qi)| (wi - x * pi - y * qi).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Some((x, y, r))
}

fn probe_line(n: usize, field: Field, coords: &[(usize, Complex64)]) -> Subspace {
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    for &(i, z) in coords {
        v[i] = z;
    }
    Subspace::span_vectors(n, field, &[v], DEFAULT_TOL).expect("probe line")
}

/// Recovers, up to scale, the semilinear map inducing a line map.
///
/// Columns come from the images of the coordinate axes, their relative
/// scales from the images of `e_1 + e_k`, and (over ℂ) the automorphism from
/// the image of `e_1 + i·e_2`. The result is then checked on
/// [`VERIFICATION_PROBES`] random lines.
pub fn reconstruct_from_line_images<F>(
    oracle: F,
    n: usize,
    field: Field,
    tol: f64,
) -> Result<SemilinearMap, ReconstructError>
where
    F: Fn(&Subspace) -> Subspace,
{
    if n < 2 {
        return Err(ReconstructError::DegenerateOracle(
            "need at least two dimensions".into(),
        ));
    }
    let one = Complex64::new(1.0, 0.0);
    let axes = (0..n)
        .map(|k| unit_spanning(&oracle(&probe_line(n, field, &[(k, one)])), n, "an axis"))
        .collect::<Result<Vec<_>, _>>()?;
    let mut cols = vec![axes[0].clone()];
    for k in 1..n {
        let w = unit_spanning(
            &oracle(&probe_line(n, field, &[(0, one), (k, one)])),
            n,
            "an axis sum",
        )?;
        let (x, y, r) = two_term_fit(&w, &axes[0], &axes[k]).ok_or_else(|| {
            ReconstructError::DegenerateOracle(format!("axis images 1 and {} coincide", k + 1))
        })?;
        if r > tol || x.norm() <= tol || y.norm() <= tol {
            return Err(ReconstructError::DegenerateOracle(format!(
                "image of e1+e{} is not spanned by the axis images (residual {r:e})",
                k + 1
            )));
        }
        let ratio = y / x;
        cols.push(axes[k].iter().map(|z| z * ratio).collect());
    }
    let image_field = oracle(&probe_line(n, field, &[(0, one)])).field();
    let mut automorphism = Automorphism::Identity;
    if field == Field::Complex {
        let i = Complex64::new(0.0, 1.0);
        let w = unit_spanning(
            &oracle(&probe_line(n, field, &[(0, one), (1, i)])),
            n,
            "e1 + i e2",
        )?;
        let (x, y, r) = two_term_fit(&w, &cols[0], &cols[1])
            .ok_or_else(|| ReconstructError::DegenerateOracle("collapsed columns".into()))?;
        if r > tol || x.norm() <= tol {
            return Err(ReconstructError::DegenerateOracle(
                "image of e1 + i e2 leaves the span of the first two columns".into(),
            ));
        }
        let ratio = y / x;
        let to_i = (ratio - i).norm();
        let to_minus_i = (ratio + i).norm();
        automorphism = if to_i <= tol.sqrt() {
            Automorphism::Identity
        } else if to_minus_i <= tol.sqrt() {
            Automorphism::Conjugation
        } else {
            return Err(ReconstructError::NotSemilinear {
                worst: to_i.min(to_minus_i),
            });
        };
    }
    let matrix = Matrix::from_columns(n, image_field, &cols);
    let map = SemilinearMap::new(matrix, automorphism, tol * tol).map_err(|e| {
        ReconstructError::DegenerateOracle(format!("reconstructed matrix unusable: {e}"))
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let mut worst: f64 = 0.0;
    for _ in 0..VERIFICATION_PROBES {
        let probe = Subspace::random(n, 1, field, &mut rng);
        let expected = oracle(&probe);
        let got = map
            .apply_to_subspace(&probe)
            .map_err(|e| ReconstructError::DegenerateOracle(e.to_string()))?;
        let d = if expected.ambient() == n && expected.dim() == 1 {
            expected
                .to_complex()
                .distance(&got.to_complex())
                .unwrap_or(f64::INFINITY)
        } else {
            f64::INFINITY
        };
        worst = worst.max(d);
    }
    if worst > tol {
        return Err(ReconstructError::NotSemilinear { worst });
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const TOL: f64 = 1e-9;

    #[test]
    fn apply_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = Subspace::random(3, 2, Field::Real, &mut rng);
        let id = SemilinearMap::identity(3, Field::Real);
        assert!(id.apply_to_subspace(&a).unwrap().equals(&a, TOL).unwrap());

        let d = SemilinearMap::linear(Matrix::diag_real(&[1.0, 2.0, 3.0])).unwrap();
        let e2 = Subspace::coordinate(3, Field::Real, &[1]);
        assert!(d.apply_to_subspace(&e2).unwrap().equals(&e2, TOL).unwrap());

        let l = Subspace::span_vectors(
            3,
            Field::Complex,
            &[vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]],
            TOL,
        )
        .unwrap();
        let lbar = Subspace::span_vectors(
            3,
            Field::Complex,
            &[vec![c(1.0, 0.0), c(0.0, -1.0), c(0.0, 0.0)]],
            TOL,
        )
        .unwrap();
        let image = SemilinearMap::conjugation(3).apply_to_subspace(&l).unwrap();
        assert!(image.equals(&lbar, TOL).unwrap());
        assert!(!image.equals(&l, TOL).unwrap());
    }

    #[test]
    fn real_map_rejects_complex_subspace() {
        let d = SemilinearMap::identity(2, Field::Real);
        let s = Subspace::coordinate(2, Field::Complex, &[0]);
        assert_eq!(
            d.apply_to_subspace(&s).unwrap_err(),
            MapError::FieldMismatch
        );
        assert!(matches!(
            SemilinearMap::new(
                Matrix::identity(2, Field::Real),
                Automorphism::Conjugation,
                TOL
            ),
            Err(MapError::ConjugationOverReals)
        ));
        assert!(matches!(
            SemilinearMap::linear(Matrix::diag_real(&[1.0, 0.0])),
            Err(MapError::Singular(_))
        ));
    }

    #[test]
    fn induced_on_frame_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let shape = crate::partition::IntPartition::ones(3);
        let t = FrameTuple::random(3, &shape, false, Field::Complex, &mut rng);
        let id = SemilinearMap::identity(3, Field::Complex);
        assert!(id.induced_on_frame(&t).unwrap().equals(&t, TOL).unwrap());

        let orth = FrameTuple::random(3, &shape, true, Field::Complex, &mut rng);
        let (q, _) =
            linalg::orthonormalize(&gaussian_matrix(3, 3, Field::Complex, &mut rng), TOL).unwrap();
        let u = SemilinearMap::linear(q.scale_real(3.0)).unwrap();
        let image = u.induced_on_frame(&orth).unwrap();
        assert!(image.is_orthogonal());
        assert!(image.validate(TOL).is_valid());

        let std = FrameTuple::standard(3, Field::Real);
        let d = SemilinearMap::linear(Matrix::diag_real(&[2.0, 1.0, 1.0])).unwrap();
        let image = d.induced_on_frame(&std).unwrap();
        assert!(image.equals(&std, TOL).unwrap());
        assert!(!image.is_orthogonal());
    }

    #[test]
    fn scale_equivalence_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = SemilinearMap::random(3, Field::Complex, Automorphism::Identity, &mut rng);
        let t3 = SemilinearMap::linear(t.matrix().scale_real(3.0)).unwrap();
        assert!(t.scale_equivalent(&t3, TOL));
        assert!(!SemilinearMap::identity(2, Field::Real).scale_equivalent(
            &SemilinearMap::linear(Matrix::diag_real(&[1.0, 2.0])).unwrap(),
            TOL
        ));
        for _ in 0..20 {
            let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let rotated =
                SemilinearMap::linear(t.matrix().scale(Complex64::from_polar(1.0, theta))).unwrap();
            assert!(t.scale_equivalent(&rotated, TOL));
        }
        let conj = SemilinearMap::new(t.matrix().clone(), Automorphism::Conjugation, TOL).unwrap();
        assert!(!t.scale_equivalent(&conj, TOL));
    }

    #[test]
    fn composition_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let s = SemilinearMap::random(3, Field::Complex, Automorphism::Conjugation, &mut rng);
        let t = SemilinearMap::random(3, Field::Complex, Automorphism::Identity, &mut rng);
        let l = Subspace::random(3, 1, Field::Complex, &mut rng);
        let ts = t.compose(&s).unwrap();
        assert_eq!(ts.automorphism(), Automorphism::Conjugation);
        let two_step = t
            .apply_to_subspace(&s.apply_to_subspace(&l).unwrap())
            .unwrap();
        assert!(ts
            .apply_to_subspace(&l)
            .unwrap()
            .equals(&two_step, 1e-9)
            .unwrap());
        let back = s.inverse().unwrap().compose(&s).unwrap();
        assert!(back.scale_equivalent(&SemilinearMap::identity(3, Field::Complex), 1e-12));
    }

    #[test]
    fn line_projection_examples() {
        let e = |i: usize| Subspace::coordinate(3, Field::Real, &[i]);
        let plane = Subspace::coordinate(3, Field::Real, &[0, 1]);
        let (l2, p2) = line_projection_construct(&e(0), &e(1), &plane, TOL).unwrap();
        assert!(p2
            .equals(&Subspace::coordinate(3, Field::Real, &[1, 2]), TOL)
            .unwrap());
        assert!(l2.equals(&e(1), TOL).unwrap());
        assert!(plane.commeasurable(&p2, 1e-8).unwrap());

        let tilted = Subspace::span_real(&[vec![1.0, 0.0, 1.0]]);
        let (l2, _) = line_projection_construct(&e(0), &tilted, &plane, TOL).unwrap();
        assert!(l2.equals(&e(0), TOL).unwrap());

        assert!(matches!(
            line_projection_construct(&e(0), &e(2), &plane, TOL),
            Err(MapError::DegenerateConfiguration(_))
        ));
        assert!(matches!(
            line_projection_construct(&e(2), &e(1), &plane, TOL),
            Err(MapError::Precondition(_))
        ));
    }

    #[test]
    fn line_in_plane_projects_to_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let plane = Subspace::random(3, 2, Field::Complex, &mut rng);
            let coeff = |rng: &mut ChaCha8Rng| gaussian_matrix(2, 1, Field::Complex, rng);
            let l = Subspace::span(&(plane.basis() * &coeff(&mut rng)), TOL).unwrap();
            let lp = Subspace::span(&(plane.basis() * &coeff(&mut rng)), TOL).unwrap();
            let (l2, p2) = line_projection_construct(&l, &lp, &plane, TOL).unwrap();
            assert!(l2.equals(&lp, 1e-8).unwrap());
            assert!(plane.commeasurable(&p2, 1e-8).unwrap());
        }
    }

    #[test]
    fn evert_conjugate_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let (q, _) =
            linalg::orthonormalize(&gaussian_matrix(3, 3, Field::Complex, &mut rng), TOL).unwrap();
        let u = SemilinearMap::linear(q).unwrap();
        assert!(u.evert_conjugate(TOL).unwrap().scale_equivalent(&u, 1e-10));

        let d = SemilinearMap::linear(Matrix::diag_real(&[2.0, 1.0, 1.0])).unwrap();
        let expected = SemilinearMap::linear(Matrix::diag_real(&[0.5, 1.0, 1.0])).unwrap();
        let got = d.evert_conjugate(TOL).unwrap();
        assert!((got.matrix() - expected.matrix()).norm_fro() < 1e-12);
    }

    #[test]
    fn evert_conjugate_is_the_inverse_adjoint() {
        // Independent route: (T X)^⊥ = T⁻ᴴ X^⊥, so T' must equal M⁻ᴴ.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for auto in [Automorphism::Identity, Automorphism::Conjugation] {
            for _ in 0..50 {
                let t = SemilinearMap::random(4, Field::Complex, auto, &mut rng);
                let tp = t.evert_conjugate(TOL).unwrap();
                let inv_adj = t.matrix().inverse().unwrap().adjoint();
                assert!((tp.matrix() - &inv_adj).norm_fro() < 1e-8 * inv_adj.norm_fro());
                assert_eq!(tp.automorphism(), auto);
            }
        }
    }

    #[test]
    fn reconstruction_round_trips() {
        let id = SemilinearMap::identity(3, Field::Real);
        let got = reconstruct_from_line_images(
            |l| id.apply_to_subspace(l).unwrap(),
            3,
            Field::Real,
            DEFAULT_RECONSTRUCTION_TOL,
        )
        .unwrap();
        assert!(got.scale_equivalent(&id, 1e-8));

        let (s, co) = (0.3f64.sin(), 0.3f64.cos());
        let rot =
            Matrix::from_real_rows(&[vec![co, -s, 0.0], vec![s, co, 0.0], vec![0.0, 0.0, 1.0]]);
        let hidden = SemilinearMap::linear(&Matrix::diag_real(&[1.0, 2.0, 3.0]) * &rot).unwrap();
        let got = reconstruct_from_line_images(
            |l| hidden.apply_to_subspace(l).unwrap(),
            3,
            Field::Real,
            DEFAULT_RECONSTRUCTION_TOL,
        )
        .unwrap();
        assert!(got.scale_equivalent(&hidden, 1e-8));

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let hidden = SemilinearMap::random(4, Field::Complex, Automorphism::Conjugation, &mut rng);
        let got = reconstruct_from_line_images(
            |l| hidden.apply_to_subspace(l).unwrap(),
            4,
            Field::Complex,
            DEFAULT_RECONSTRUCTION_TOL,
        )
        .unwrap();
        assert_eq!(got.automorphism(), Automorphism::Conjugation);
        assert!(got.scale_equivalent(&hidden, 1e-8));
    }

    #[test]
    fn reconstruction_rejects_a_nonlinear_oracle() {
        // Squares the coordinates of the phase-normalized unit representative.
        let oracle = |l: &Subspace| {
            let mut v = l.basis().column(0);
            let lead = v.iter().find(|z| z.norm() > 1e-9).copied().unwrap();
            let phase = lead.conj() / lead.norm();
            for z in &mut v {
                *z *= phase;
                *z += 0.1 * *z * z.norm_sqr();
            }
            Subspace::span_vectors(3, Field::Real, &[v], TOL).unwrap()
        };
        assert!(matches!(
            reconstruct_from_line_images(oracle, 3, Field::Real, DEFAULT_RECONSTRUCTION_TOL),
            Err(ReconstructError::NotSemilinear { .. })
        ));
    }

    #[test]
    fn reconstruction_flags_degenerate_oracles() {
        let constant = |_: &Subspace| Subspace::coordinate(3, Field::Real, &[0]);
        assert!(matches!(
            reconstruct_from_line_images(constant, 3, Field::Real, DEFAULT_RECONSTRUCTION_TOL),
            Err(ReconstructError::DegenerateOracle(_))
        ));
        let planes = |_: &Subspace| Subspace::coordinate(3, Field::Real, &[0, 1]);
        assert!(matches!(
            reconstruct_from_line_images(planes, 3, Field::Real, DEFAULT_RECONSTRUCTION_TOL),
            Err(ReconstructError::DegenerateOracle(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = SemilinearMap::random(3, Field::Complex, Automorphism::Conjugation, &mut rng);
        let v = t.to_json();
        assert_eq!(v["automorphism"], "conj");
        let back = SemilinearMap::from_json(&v, TOL).unwrap();
        assert!(back.scale_equivalent(&t, 1e-15));
        let r = SemilinearMap::from_json(
            &serde_json::json!({"automorphism": "id", "matrix": [[[2.0, 0.0]]]}),
            TOL,
        )
        .unwrap();
        assert_eq!(r.field(), Field::Real);
    }
}
